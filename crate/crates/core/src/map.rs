//! Finite rooted maps encoded by a pair of permutations on darts.
//!
//! A map on darts `0..2E` is a face permutation `phi`, whose cycles list the
//! darts of each face in contour order, together with a fixed-point-free
//! involution `alpha` pairing the two darts of every edge. The vertex
//! permutation is `sigma = phi ∘ alpha`; its cycles are the vertices, and the
//! cycle containing a dart is that dart's origin. The face on the right of an
//! oriented edge is the `phi`-cycle of its dart.
//!
//! Darts are 0-based in memory and 1-based in every user-facing surface
//! (`build_map`, error messages, the text format).

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::faces::FaceDegreeSequence;

pub type Dart = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("dart {0} appears more than once")]
    DuplicateDart(usize),
    #[error("dart {0} is missing")]
    MissingDart(usize),
    #[error("edge involution fixes dart {0}")]
    FixedPointInAlpha(usize),
    #[error("map is disconnected")]
    Disconnected,
    #[error("dart {0} is out of range")]
    DartOutOfRange(usize),
    #[error("a map needs a positive even number of darts, got {0}")]
    BadDartCount(usize),
    #[error("edge permutation is not an involution at dart {0}")]
    NotAnInvolution(usize),
}

/// A connected finite map with a distinguished root dart.
///
/// Values are validated on construction and immutable afterwards.
#[derive(Clone, Debug)]
pub struct RootedMap {
    phi: Vec<Dart>,
    alpha: Vec<Dart>,
    root: Dart,
    vertex_of: Vec<u32>,
    face_of: Vec<u32>,
    vertex_count: usize,
    face_count: usize,
}

impl PartialEq for RootedMap {
    /// Labeled equality. Use [`RootedMap::canonical_form`] for isomorphism.
    fn eq(&self, other: &Self) -> bool {
        self.root == other.root && self.phi == other.phi && self.alpha == other.alpha
    }
}

impl Eq for RootedMap {}

/// Root-anchored canonical encoding; equal iff the rooted maps are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(pub Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

/// Builds and validates a map from 1-based face cycles and edge pairs.
pub fn build_map(
    faces: &[Vec<usize>],
    edge_pairs: &[(usize, usize)],
    root: usize,
) -> Result<RootedMap, MapError> {
    let n: usize = faces.iter().map(Vec::len).sum();
    if n == 0 || n % 2 == 1 {
        return Err(MapError::BadDartCount(n));
    }
    let check = |d: usize| {
        if d == 0 || d > n {
            Err(MapError::DartOutOfRange(d))
        } else {
            Ok(d - 1)
        }
    };

    let mut phi = vec![usize::MAX; n];
    for cycle in faces {
        for (i, &d) in cycle.iter().enumerate() {
            let d0 = check(d)?;
            if phi[d0] != usize::MAX {
                return Err(MapError::DuplicateDart(d));
            }
            phi[d0] = check(cycle[(i + 1) % cycle.len()])?;
        }
    }
    if let Some(d) = phi.iter().position(|&x| x == usize::MAX) {
        return Err(MapError::MissingDart(d + 1));
    }

    let mut alpha = vec![usize::MAX; n];
    for &(a, b) in edge_pairs {
        let (a0, b0) = (check(a)?, check(b)?);
        if a0 == b0 {
            return Err(MapError::FixedPointInAlpha(a));
        }
        for (x, y, label) in [(a0, b0, a), (b0, a0, b)] {
            if alpha[x] != usize::MAX {
                return Err(MapError::DuplicateDart(label));
            }
            alpha[x] = y;
        }
    }
    if let Some(d) = alpha.iter().position(|&x| x == usize::MAX) {
        return Err(MapError::MissingDart(d + 1));
    }

    RootedMap::from_permutations(phi, alpha, check(root)?)
}

/// Labels each element by the index of its cycle, numbering cycles in order
/// of their smallest element.
fn cycle_ids(perm: &[Dart]) -> (Vec<u32>, usize) {
    let mut ids = vec![u32::MAX; perm.len()];
    let mut count = 0;
    for start in 0..perm.len() {
        if ids[start] != u32::MAX {
            continue;
        }
        let mut d = start;
        while ids[d] == u32::MAX {
            ids[d] = count as u32;
            d = perm[d];
        }
        count += 1;
    }
    (ids, count)
}

fn is_permutation(perm: &[Dart]) -> Result<(), MapError> {
    let mut seen = vec![false; perm.len()];
    for &x in perm {
        if x >= perm.len() {
            return Err(MapError::DartOutOfRange(x + 1));
        }
        if std::mem::replace(&mut seen[x], true) {
            return Err(MapError::DuplicateDart(x + 1));
        }
    }
    Ok(())
}

impl RootedMap {
    /// Validates 0-based permutations and builds the map.
    pub fn from_permutations(
        phi: Vec<Dart>,
        alpha: Vec<Dart>,
        root: Dart,
    ) -> Result<Self, MapError> {
        let n = phi.len();
        if n == 0 || n % 2 == 1 || alpha.len() != n {
            return Err(MapError::BadDartCount(n));
        }
        if root >= n {
            return Err(MapError::DartOutOfRange(root + 1));
        }
        is_permutation(&phi)?;
        for (d, &a) in alpha.iter().enumerate() {
            if a >= n {
                return Err(MapError::DartOutOfRange(a + 1));
            }
            if a == d {
                return Err(MapError::FixedPointInAlpha(d + 1));
            }
            if alpha[a] != d {
                return Err(MapError::NotAnInvolution(d + 1));
            }
        }
        if !connected(&phi, &alpha) {
            return Err(MapError::Disconnected);
        }
        Ok(Self::from_parts_unchecked(phi, alpha, root))
    }

    /// Builds a map from permutations already known to be valid.
    pub(crate) fn from_parts_unchecked(phi: Vec<Dart>, alpha: Vec<Dart>, root: Dart) -> Self {
        debug_assert!(connected(&phi, &alpha));
        let sigma: Vec<Dart> = alpha.iter().map(|&a| phi[a]).collect();
        let (vertex_of, vertex_count) = cycle_ids(&sigma);
        let (face_of, face_count) = cycle_ids(&phi);
        let m = Self {
            phi,
            alpha,
            root,
            vertex_of,
            face_of,
            vertex_count,
            face_count,
        };
        debug_assert!(m.euler_characteristic() <= 2 && m.euler_characteristic() % 2 == 0);
        m
    }

    pub fn dart_count(&self) -> usize {
        self.phi.len()
    }

    pub fn edge_count(&self) -> usize {
        self.phi.len() / 2
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn face_count(&self) -> usize {
        self.face_count
    }

    pub fn root(&self) -> Dart {
        self.root
    }

    pub fn phi(&self, d: Dart) -> Dart {
        self.phi[d]
    }

    pub fn alpha(&self, d: Dart) -> Dart {
        self.alpha[d]
    }

    pub fn sigma(&self, d: Dart) -> Dart {
        self.phi[self.alpha[d]]
    }

    pub fn phi_perm(&self) -> &[Dart] {
        &self.phi
    }

    pub fn alpha_perm(&self) -> &[Dart] {
        &self.alpha
    }

    /// Index of the vertex (sigma-cycle) at which `d` starts.
    pub fn origin(&self, d: Dart) -> usize {
        self.vertex_of[d] as usize
    }

    /// Index of the face on the right of `d`.
    pub fn face_of(&self, d: Dart) -> usize {
        self.face_of[d] as usize
    }

    pub fn face_degree_of(&self, d: Dart) -> usize {
        let mut len = 1;
        let mut x = self.phi[d];
        while x != d {
            len += 1;
            x = self.phi[x];
        }
        len
    }

    pub fn vertex_degree_of(&self, d: Dart) -> usize {
        let mut len = 1;
        let mut x = self.sigma(d);
        while x != d {
            len += 1;
            x = self.sigma(x);
        }
        len
    }

    /// Darts of the face through `d`, starting at `d`, in contour order.
    pub fn face_contour(&self, d: Dart) -> Vec<Dart> {
        let mut out = vec![d];
        let mut x = self.phi[d];
        while x != d {
            out.push(x);
            x = self.phi[x];
        }
        out
    }

    /// Face cycles, each starting at its smallest dart, ordered by that dart.
    pub fn faces(&self) -> Vec<Vec<Dart>> {
        let mut firsts = vec![usize::MAX; self.face_count];
        for d in (0..self.dart_count()).rev() {
            firsts[self.face_of(d)] = d;
        }
        firsts.into_iter().map(|d| self.face_contour(d)).collect()
    }

    /// One representative dart (the smallest) per vertex, by vertex index.
    pub fn vertex_representatives(&self) -> Vec<Dart> {
        let mut firsts = vec![usize::MAX; self.vertex_count];
        for d in (0..self.dart_count()).rev() {
            firsts[self.origin(d)] = d;
        }
        firsts
    }

    /// `V - E + F`.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count as i64 - self.edge_count() as i64 + self.face_count as i64
    }

    /// Genus from Euler's formula `V - E + F = 2 - 2g`.
    pub fn genus(&self) -> usize {
        let chi = self.euler_characteristic();
        assert!(
            chi <= 2 && (2 - chi) % 2 == 0,
            "non-integral genus: chi = {chi}"
        );
        ((2 - chi) / 2) as usize
    }

    /// Proper 2-colorability of the vertex graph (vertices = sigma-cycles,
    /// edges = alpha-pairs). Loops force `false`.
    pub fn is_bipartite(&self) -> bool {
        let n = self.dart_count();
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); self.vertex_count];
        for d in 0..n {
            let (u, v) = (self.origin(d), self.origin(self.alpha[d]));
            if u == v {
                return false;
            }
            adj[u].push(v);
        }
        let mut color = vec![u8::MAX; self.vertex_count];
        let mut queue = VecDeque::new();
        for s in 0..self.vertex_count {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &v in &adj[u] {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Face degree multiplicities, or `None` if some face has odd degree.
    pub fn face_degree_sequence(&self) -> Option<FaceDegreeSequence> {
        let mut half = Vec::with_capacity(self.face_count);
        for face in self.faces() {
            if face.len() % 2 == 1 {
                return None;
            }
            half.push(face.len() / 2);
        }
        Some(FaceDegreeSequence::from_half_degrees(half))
    }

    /// Breadth-first order of darts from the root, expanding `phi` before `alpha`.
    pub fn canonical_order(&self) -> Vec<Dart> {
        canonical_order_from(
            self.dart_count(),
            self.root,
            |d| self.phi[d],
            |d| Some(self.alpha[d]),
        )
    }

    /// Canonical encoding of the rooted isomorphism class.
    ///
    /// Rooted maps have no nontrivial automorphisms, so labeling darts by a
    /// deterministic traversal from the root yields a complete invariant.
    pub fn canonical_form(&self) -> CanonicalForm {
        let order = self.canonical_order();
        let label = inverse(&order, self.dart_count());
        let mut bytes = Vec::with_capacity(4 + 8 * order.len());
        bytes.extend_from_slice(&(order.len() as u32).to_le_bytes());
        for &d in &order {
            bytes.extend_from_slice(&(label[self.phi[d]] as u32).to_le_bytes());
            bytes.extend_from_slice(&(label[self.alpha[d]] as u32).to_le_bytes());
        }
        CanonicalForm(bytes)
    }

    /// Labels of darts under the canonical traversal (`label[d]`).
    pub fn canonical_labels(&self) -> Vec<usize> {
        inverse(&self.canonical_order(), self.dart_count())
    }

    /// The same map relabeled by its canonical order; the root becomes dart 0.
    pub fn canonicalized(&self) -> Self {
        self.relabeled(&self.canonical_labels())
    }

    /// Relabels dart `d` as `new_label[d]`.
    pub fn relabeled(&self, new_label: &[Dart]) -> Self {
        let n = self.dart_count();
        let mut phi = vec![0; n];
        let mut alpha = vec![0; n];
        for d in 0..n {
            phi[new_label[d]] = new_label[self.phi[d]];
            alpha[new_label[d]] = new_label[self.alpha[d]];
        }
        Self::from_parts_unchecked(phi, alpha, new_label[self.root])
    }

    pub fn rerooted(&self, root: Dart) -> Self {
        assert!(root < self.dart_count());
        let mut m = self.clone();
        m.root = root;
        m
    }

    /// Whether two rooted maps are isomorphic.
    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.dart_count() == other.dart_count() && self.canonical_form() == other.canonical_form()
    }

    /// Graph distances from the root's origin to every vertex.
    pub fn vertex_distances(&self, from: Dart) -> Vec<usize> {
        let reps = self.vertex_representatives();
        let mut dist = vec![usize::MAX; self.vertex_count];
        let start = self.origin(from);
        dist[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let first = reps[v];
            let mut d = first;
            loop {
                let w = self.origin(self.alpha[d]);
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                d = self.sigma(d);
                if d == first {
                    break;
                }
            }
        }
        dist
    }

    /// Single edge between two vertices; one face of degree 2.
    pub fn single_edge() -> Self {
        Self::from_parts_unchecked(vec![1, 0], vec![1, 0], 0)
    }
}

/// Breadth-first traversal over `phi` and a partial `alpha`.
pub(crate) fn canonical_order_from(
    n: usize,
    root: Dart,
    phi: impl Fn(Dart) -> Dart,
    alpha: impl Fn(Dart) -> Option<Dart>,
) -> Vec<Dart> {
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    seen[root] = true;
    order.push(root);
    let mut head = 0;
    while head < order.len() {
        let d = order[head];
        head += 1;
        for next in [Some(phi(d)), alpha(d)].into_iter().flatten() {
            if !seen[next] {
                seen[next] = true;
                order.push(next);
            }
        }
    }
    order
}

/// Position of each dart in `order`; darts absent from `order` map to `usize::MAX`.
pub(crate) fn inverse(order: &[Dart], n: usize) -> Vec<usize> {
    let mut label = vec![usize::MAX; n];
    for (i, &d) in order.iter().enumerate() {
        label[d] = i;
    }
    label
}

fn connected(phi: &[Dart], alpha: &[Dart]) -> bool {
    canonical_order_from(phi.len(), 0, |d| phi[d], |d| Some(alpha[d])).len() == phi.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn torus_quadrangle() -> RootedMap {
        build_map(&[vec![1, 2, 3, 4]], &[(1, 3), (2, 4)], 1).unwrap()
    }

    fn path_of_two() -> RootedMap {
        build_map(&[vec![1, 2, 3, 4]], &[(1, 2), (3, 4)], 1).unwrap()
    }

    /// Cycle count of `phi ∘ alpha` by direct replay, independent of `cycle_ids`.
    fn count_sigma_cycles(m: &RootedMap) -> usize {
        let n = m.dart_count();
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for s in 0..n {
            if !seen[s] {
                cycles += 1;
                let mut d = s;
                while !seen[d] {
                    seen[d] = true;
                    d = m.phi(m.alpha(d));
                }
            }
        }
        cycles
    }

    #[test]
    fn single_edge_counts() {
        let m = build_map(&[vec![1, 2]], &[(1, 2)], 1).unwrap();
        assert_eq!(
            (m.vertex_count(), m.edge_count(), m.face_count()),
            (2, 1, 1)
        );
        assert_eq!(m.genus(), 0);
        assert!(m.is_bipartite());
        assert_eq!(m, RootedMap::single_edge());
    }

    #[test]
    fn quadrangle_gluings() {
        let t = torus_quadrangle();
        assert_eq!(count_sigma_cycles(&t), 1);
        assert_eq!(t.vertex_count(), 1);
        assert_eq!(t.genus(), 1);
        assert!(!t.is_bipartite());
        // sigma = (1 4 3 2) in 1-based labels
        assert_eq!(t.sigma(0), 3);
        assert_eq!(t.sigma(3), 2);

        let p = path_of_two();
        assert_eq!(count_sigma_cycles(&p), 3);
        assert_eq!(p.genus(), 0);
        assert!(p.is_bipartite());
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            build_map(&[vec![1, 2], vec![3, 4]], &[(1, 2), (3, 4)], 1),
            Err(MapError::Disconnected)
        );
        assert_eq!(
            build_map(&[vec![1, 2], vec![2, 1]], &[(1, 2), (3, 4)], 1),
            Err(MapError::DuplicateDart(2))
        );
        assert_eq!(
            build_map(&[vec![1, 2]], &[(1, 1)], 1),
            Err(MapError::FixedPointInAlpha(1))
        );
        assert_eq!(
            build_map(&[vec![1, 2, 3, 4]], &[(1, 2)], 1),
            Err(MapError::MissingDart(3))
        );
        assert_eq!(
            build_map(&[vec![1, 2]], &[(1, 2)], 3),
            Err(MapError::DartOutOfRange(3))
        );
        assert_eq!(
            build_map(&[vec![1, 2, 3]], &[(1, 2)], 1),
            Err(MapError::BadDartCount(3))
        );
    }

    /// Exhaustive search for a root-preserving bijection commuting with phi and alpha.
    fn brute_isomorphic(a: &RootedMap, b: &RootedMap) -> bool {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for i in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(i, n - 1);
                    out.push(q);
                }
            }
            out
        }
        if a.dart_count() != b.dart_count() {
            return false;
        }
        perms(a.dart_count()).into_iter().any(|p| {
            p[a.root()] == b.root()
                && (0..a.dart_count())
                    .all(|d| p[a.phi(d)] == b.phi(p[d]) && p[a.alpha(d)] == b.alpha(p[d]))
        })
    }

    #[test]
    fn canonical_form_examples() {
        let e = RootedMap::single_edge();
        assert_eq!(e.canonical_form(), e.canonical_form());
        let e2 = e.rerooted(1);
        assert!(brute_isomorphic(&e, &e2));
        assert_eq!(e.canonical_form(), e2.canonical_form());

        let leaf = path_of_two();
        let mid = leaf.rerooted(1);
        assert!(!brute_isomorphic(&leaf, &mid));
        assert_ne!(leaf.canonical_form(), mid.canonical_form());
    }

    #[test]
    fn canonical_form_matches_brute_force_on_small_maps() {
        let maps = [
            torus_quadrangle(),
            path_of_two(),
            build_map(&[vec![1, 2], vec![3, 4]], &[(1, 3), (2, 4)], 1).unwrap(),
        ];
        for a in &maps {
            for b in &maps {
                for ra in 0..a.dart_count() {
                    for rb in 0..b.dart_count() {
                        let (x, y) = (a.rerooted(ra), b.rerooted(rb));
                        assert_eq!(
                            brute_isomorphic(&x, &y),
                            x.canonical_form() == y.canonical_form()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn canonicalized_roots_at_zero() {
        let m = path_of_two().rerooted(2);
        let c = m.canonicalized();
        assert_eq!(c.root(), 0);
        assert_eq!(c.canonical_form(), m.canonical_form());
    }

    #[test]
    fn distances_on_path() {
        let p = path_of_two();
        let mut mid = p.vertex_distances(0);
        mid.sort();
        assert_eq!(mid, vec![0, 1, 1]);
        let mut leaf = p.vertex_distances(1);
        leaf.sort();
        assert_eq!(leaf, vec![0, 1, 2]);
    }
}
