use std::fmt;

use num_rational::Ratio;

use crate::map::{canonical_order_from, inverse, CanonicalForm, Dart, RootedMap};

/// The faces of a map meeting a vertex within distance `r` of the root's
/// origin, together with all their darts.
#[derive(Clone, Debug)]
pub struct BallMap {
    host: RootedMap,
    members: Vec<bool>,
    radius: usize,
    root: Dart,
}

pub fn ball(m: &RootedMap, e: Dart, r: usize) -> BallMap {
    assert!(r >= 1, "ball radius must be positive");
    let dist = m.vertex_distances(e);
    let mut keep_face = vec![false; m.face_count()];
    for d in 0..m.dart_count() {
        if dist[m.origin(d)] <= r {
            keep_face[m.face_of(d)] = true;
        }
    }
    let members = (0..m.dart_count())
        .map(|d| keep_face[m.face_of(d)])
        .collect();
    BallMap {
        host: m.clone(),
        members,
        radius: r,
        root: e,
    }
}

impl BallMap {
    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn root(&self) -> Dart {
        self.root
    }

    pub fn contains(&self, d: Dart) -> bool {
        self.members[d]
    }

    /// Host darts in the ball, increasing.
    pub fn darts(&self) -> Vec<Dart> {
        (0..self.members.len())
            .filter(|&d| self.members[d])
            .collect()
    }

    pub fn dart_count(&self) -> usize {
        self.members.iter().filter(|&&b| b).count()
    }

    pub fn is_whole(&self) -> bool {
        self.members.iter().all(|&b| b)
    }

    /// Darts whose edge partner lies outside the ball.
    pub fn frontier(&self) -> Vec<Dart> {
        self.darts()
            .into_iter()
            .filter(|&d| !self.members[self.host.alpha(d)])
            .collect()
    }

    /// Encodes the ball up to root-preserving isomorphism: face permutation,
    /// edge pairing with frontier darts marked, and which darts share a vertex.
    pub fn canonical_form(&self) -> CanonicalForm {
        let m = &self.host;
        let n = m.dart_count();
        let order = canonical_order_from(
            n,
            self.root,
            |d| m.phi(d),
            |d| {
                let a = m.alpha(d);
                self.members[a].then_some(a)
            },
        );
        let label = inverse(&order, n);
        let mut vertex_label = vec![u32::MAX; m.vertex_count()];
        let mut next_vertex = 0u32;
        let mut out = Vec::with_capacity(4 + 12 * order.len());
        out.extend_from_slice(&(order.len() as u32).to_le_bytes());
        for &d in &order {
            let a = m.alpha(d);
            let al = if self.members[a] {
                label[a] as u32
            } else {
                u32::MAX
            };
            let v = &mut vertex_label[m.origin(d)];
            if *v == u32::MAX {
                *v = next_vertex;
                next_vertex += 1;
            }
            out.extend_from_slice(&(label[m.phi(d)] as u32).to_le_bytes());
            out.extend_from_slice(&al.to_le_bytes());
            out.extend_from_slice(&v.to_le_bytes());
        }
        CanonicalForm(out)
    }
}

/// A local distance value: `0` or `1/(1+r)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LocalDistance(pub Ratio<u64>);

impl LocalDistance {
    pub fn zero() -> Self {
        Self(Ratio::from_integer(0))
    }

    /// Least radius at which the balls differ, if any.
    pub fn radius(&self) -> Option<u64> {
        (*self.0.numer() != 0).then(|| self.0.denom() - 1)
    }

    pub fn to_f64(&self) -> f64 {
        *self.0.numer() as f64 / *self.0.denom() as f64
    }
}

impl fmt::Display for LocalDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `0` for isomorphic rooted maps, else `1/(1 + r*)` with `r*` the least
/// radius at which the balls around the roots differ.
pub fn local_distance(a: &RootedMap, b: &RootedMap) -> LocalDistance {
    let mut r = 1;
    loop {
        let ba = ball(a, a.root(), r);
        let bb = ball(b, b.root(), r);
        if ba.canonical_form() != bb.canonical_form() {
            return LocalDistance(Ratio::new(1, 1 + r as u64));
        }
        if ba.is_whole() && bb.is_whole() {
            return LocalDistance::zero();
        }
        r += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundary::{make_pattern, PatternKind};
    use crate::map::build_map;

    fn path() -> RootedMap {
        build_map(&[vec![1, 2, 3, 4]], &[(1, 2), (3, 4)], 1).unwrap()
    }

    #[test]
    fn small_balls_are_whole() {
        let e = RootedMap::single_edge();
        for r in 1..4 {
            assert!(ball(&e, 0, r).is_whole());
        }
        let p = path();
        // dart 2 (0-based 1) starts at a leaf
        assert!(ball(&p, 1, 1).is_whole());
    }

    #[test]
    fn frontier_darts_point_outside() {
        let m = make_pattern(PatternKind::Double, 3).into_map();
        for r in 1..4 {
            let b = ball(&m, m.root(), r);
            for d in b.frontier() {
                assert!(!b.contains(m.alpha(d)));
            }
            assert!(ball(&m, m.root(), r + 1)
                .darts()
                .iter()
                .all(|&d| d < m.dart_count()));
        }
    }

    #[test]
    fn distance_examples() {
        let e = RootedMap::single_edge();
        let digon = make_pattern(PatternKind::Single, 1).into_map();
        assert_eq!(local_distance(&e, &e), LocalDistance::zero());
        assert_eq!(local_distance(&e, &digon).to_string(), "1/2");
        assert_eq!(local_distance(&digon, &e).to_string(), "1/2");
        assert_eq!(LocalDistance::zero().to_string(), "0");
    }

    #[test]
    fn rooting_matters() {
        let p = path();
        let leaf = p.rerooted(1);
        let mid = p.rerooted(0);
        assert_ne!(local_distance(&leaf, &mid), LocalDistance::zero());
        assert_eq!(local_distance(&leaf, &p.rerooted(1)), LocalDistance::zero());
    }
}
