use std::fmt;

use serde::{Serialize, Serializer};

/// Multiplicities of face degrees: `f_j` is the number of faces of degree `2j`.
///
/// Stored densely with `counts[j - 1] = f_j` and no trailing zeros, so two
/// sequences compare equal iff they describe the same multiset of degrees.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FaceDegreeSequence {
    counts: Vec<usize>,
}

impl FaceDegreeSequence {
    pub fn empty() -> Self {
        Self::default()
    }

    /// The indicator sequence with a single face of degree `2j`.
    pub fn indicator(j: usize) -> Self {
        Self::from_pairs([(j, 1)])
    }

    /// Builds a sequence from `(j, f_j)` pairs; repeated `j` accumulate.
    ///
    /// Panics if some `j` is zero.
    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(pairs: I) -> Self {
        let mut counts = Vec::new();
        for (j, c) in pairs {
            assert!(j >= 1, "face half-degree must be at least 1");
            if counts.len() < j {
                counts.resize(j, 0);
            }
            counts[j - 1] += c;
        }
        let mut s = Self { counts };
        s.trim();
        s
    }

    /// Sequence of the multiset of half-degrees (each entry `j` is one face of degree `2j`).
    pub fn from_half_degrees<I: IntoIterator<Item = usize>>(half: I) -> Self {
        Self::from_pairs(half.into_iter().map(|j| (j, 1)))
    }

    fn trim(&mut self) {
        while self.counts.last() == Some(&0) {
            self.counts.pop();
        }
    }

    /// `f_j` for `j >= 1`.
    pub fn get(&self, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        self.counts.get(j - 1).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Largest `j` with `f_j > 0`.
    pub fn max_half_degree(&self) -> usize {
        self.counts.len()
    }

    /// Nonzero `(j, f_j)` entries in increasing `j`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| (i + 1, c))
    }

    /// `|f| = Σ j·f_j`, the number of edges of any map with these faces.
    pub fn edge_count(&self) -> usize {
        self.iter().map(|(j, c)| j * c).sum()
    }

    pub fn face_count(&self) -> usize {
        self.counts.iter().sum()
    }

    /// `Σ (j-1)·f_j`, which bounds twice the genus of a bipartite map.
    pub fn genus_budget(&self) -> usize {
        self.iter().map(|(j, c)| (j - 1) * c).sum()
    }

    /// Whether `2g ≤ Σ (j-1) f_j`.
    pub fn admits_genus(&self, genus: usize) -> bool {
        2 * genus <= self.genus_budget()
    }

    pub fn max_genus(&self) -> usize {
        self.genus_budget() / 2
    }

    /// Half-degrees sorted decreasingly, one entry per face.
    pub fn half_degrees_desc(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.face_count());
        for (j, c) in self.iter().collect::<Vec<_>>().into_iter().rev() {
            out.extend(std::iter::repeat_n(j, c));
        }
        out
    }

    pub fn plus(&self, other: &Self) -> Self {
        Self::from_pairs(self.iter().chain(other.iter()))
    }

    /// `self - other`, or `None` if some entry would go negative.
    pub fn checked_minus(&self, other: &Self) -> Option<Self> {
        let mut counts = self.counts.clone();
        for (j, c) in other.iter() {
            let slot = counts.get_mut(j - 1)?;
            *slot = slot.checked_sub(c)?;
        }
        let mut s = Self { counts };
        s.trim();
        Some(s)
    }

    pub fn scaled(&self, n: usize) -> Self {
        Self::from_pairs(self.iter().map(|(j, c)| (j, c * n)))
    }

    /// All sequences with `1 ≤ |f| ≤ max_edges`, ordered by edge count then lexicographically.
    pub fn all_up_to(max_edges: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for n in 1..=max_edges {
            let mut parts = Vec::new();
            partitions(n, n, &mut parts, &mut out);
        }
        out
    }
}

fn partitions(
    rest: usize,
    max_part: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<FaceDegreeSequence>,
) {
    if rest == 0 {
        out.push(FaceDegreeSequence::from_half_degrees(cur.iter().copied()));
        return;
    }
    for part in (1..=max_part.min(rest)).rev() {
        cur.push(part);
        partitions(rest - part, part, cur, out);
        cur.pop();
    }
}

/// Renders as the `j:count,...` face spec, or `-` for the empty sequence.
/// Serialized as its display form, e.g. `"1:1,2:3"`.
impl Serialize for FaceDegreeSequence {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Display for FaceDegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("-");
        }
        let mut first = true;
        for (j, c) in self.iter() {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{j}:{c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_quantities() {
        let f = FaceDegreeSequence::from_pairs([(2, 3), (1, 1)]);
        assert_eq!(f.get(1), 1);
        assert_eq!(f.get(2), 3);
        assert_eq!(f.edge_count(), 7);
        assert_eq!(f.face_count(), 4);
        assert_eq!(f.genus_budget(), 3);
        assert!(f.admits_genus(1));
        assert!(!f.admits_genus(2));
        assert_eq!(f.to_string(), "1:1,2:3");
    }

    #[test]
    fn arithmetic_trims() {
        let f = FaceDegreeSequence::from_pairs([(3, 1), (1, 2)]);
        let g = f.checked_minus(&FaceDegreeSequence::indicator(3)).unwrap();
        assert_eq!(g, FaceDegreeSequence::from_pairs([(1, 2)]));
        assert_eq!(g.max_half_degree(), 1);
        assert!(g.checked_minus(&FaceDegreeSequence::indicator(2)).is_none());
        assert_eq!(g.plus(&FaceDegreeSequence::indicator(3)), f);
    }

    #[test]
    fn partitions_up_to_four() {
        // p(1) + p(2) + p(3) + p(4) = 1 + 2 + 3 + 5
        let all = FaceDegreeSequence::all_up_to(4);
        assert_eq!(all.len(), 11);
        assert!(all.iter().all(|f| (1..=4).contains(&f.edge_count())));
    }

    #[test]
    fn desc_blocks() {
        let f = FaceDegreeSequence::from_pairs([(1, 2), (3, 1)]);
        assert_eq!(f.half_degrees_desc(), vec![3, 1, 1]);
    }
}
