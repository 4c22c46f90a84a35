//! Exhaustive search over fixed-point-free involutions against a fixed face
//! permutation.
//!
//! Each pairing `a <-> b` identifies the origin of `b` with the end of `a`.
//! Writing the colour of a dart's origin as `c(face) ^ (position parity)`,
//! bipartiteness becomes a parity constraint between the two faces, which a
//! union-find with parities tracks incrementally; the same structure yields
//! connectivity. Genus is computed at the leaves.

use rayon::prelude::*;

use crate::faces::FaceDegreeSequence;
use crate::map::Dart;

/// Fixed face permutation: consecutive dart blocks by decreasing degree.
#[derive(Clone, Debug)]
pub struct Layout {
    pub(crate) phi: Vec<Dart>,
    pub(crate) face: Vec<u32>,
    pub(crate) parity: Vec<u8>,
    pub(crate) face_count: usize,
}

impl Layout {
    pub fn new(f: &FaceDegreeSequence) -> Self {
        let mut phi = Vec::new();
        let mut face = Vec::new();
        let mut parity = Vec::new();
        let mut start = 0;
        let halves = f.half_degrees_desc();
        for (fi, &j) in halves.iter().enumerate() {
            let len = 2 * j;
            for i in 0..len {
                phi.push(start + (i + 1) % len);
                face.push(fi as u32);
                parity.push((i % 2) as u8);
            }
            start += len;
        }
        Self {
            phi,
            face,
            parity,
            face_count: halves.len(),
        }
    }

    pub fn dart_count(&self) -> usize {
        self.phi.len()
    }

    pub fn phi(&self) -> &[Dart] {
        &self.phi
    }

    pub fn face_count(&self) -> usize {
        self.face_count
    }

    /// Faces of the layout as dart ranges.
    pub fn face_of(&self, d: Dart) -> usize {
        self.face[d] as usize
    }

    /// Parity constraint between the faces of `a` and `b` when paired.
    #[inline]
    pub(crate) fn pair_parity(&self, a: Dart, b: Dart) -> u8 {
        self.parity[a] ^ self.parity[b] ^ 1
    }

    /// Genus of `(phi, alpha)`, assuming it is connected.
    pub fn genus_of(&self, alpha: &[Dart], seen: &mut Vec<bool>) -> Option<usize> {
        let n = self.dart_count();
        seen.clear();
        seen.resize(n, false);
        let mut v = 0usize;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            v += 1;
            let mut d = s;
            while !seen[d] {
                seen[d] = true;
                d = self.phi[alpha[d]];
            }
        }
        let e = n / 2;
        let twice = (2 + e).checked_sub(v + self.face_count)?;
        (twice % 2 == 0).then_some(twice / 2)
    }
}

#[derive(Clone, Copy, Debug)]
enum Undo {
    Nothing,
    Merge { child: u32, rank_bumped: bool },
}

/// Union-find over faces with a parity bit per node relative to its parent.
#[derive(Clone, Debug)]
pub(crate) struct ParityUnionFind {
    parent: Vec<u32>,
    parity: Vec<u8>,
    rank: Vec<u8>,
    components: usize,
    history: Vec<Undo>,
}

impl ParityUnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n as u32).collect(),
            parity: vec![0; n],
            rank: vec![0; n],
            components: n,
            history: Vec::new(),
        }
    }

    /// Back to singletons, keeping allocations.
    pub(crate) fn reset(&mut self) {
        for (i, p) in self.parent.iter_mut().enumerate() {
            *p = i as u32;
        }
        self.parity.fill(0);
        self.rank.fill(0);
        self.components = self.parent.len();
        self.history.clear();
    }

    pub(crate) fn components(&self) -> usize {
        self.components
    }

    fn find(&self, mut x: u32) -> (u32, u8) {
        let mut p = 0;
        while self.parent[x as usize] != x {
            p ^= self.parity[x as usize];
            x = self.parent[x as usize];
        }
        (x, p)
    }

    /// Requires `colour(a) ^ colour(b) == want`; returns false on conflict
    /// (nothing is recorded in that case).
    pub(crate) fn union(&mut self, a: usize, b: usize, want: u8) -> bool {
        let (ra, pa) = self.find(a as u32);
        let (rb, pb) = self.find(b as u32);
        if ra == rb {
            if pa ^ pb != want {
                return false;
            }
            self.history.push(Undo::Nothing);
            return true;
        }
        let (child, root) = if self.rank[ra as usize] < self.rank[rb as usize] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[child as usize] = root;
        self.parity[child as usize] = pa ^ pb ^ want;
        let rank_bumped = self.rank[ra as usize] == self.rank[rb as usize];
        if rank_bumped {
            self.rank[root as usize] += 1;
        }
        self.components -= 1;
        self.history.push(Undo::Merge { child, rank_bumped });
        true
    }

    pub(crate) fn undo(&mut self) {
        match self.history.pop().expect("undo without union") {
            Undo::Nothing => {}
            Undo::Merge { child, rank_bumped } => {
                let root = self.parent[child as usize];
                if rank_bumped {
                    self.rank[root as usize] -= 1;
                }
                self.parent[child as usize] = child;
                self.parity[child as usize] = 0;
                self.components += 1;
            }
        }
    }
}

/// A complete involution reached by the search.
pub struct Leaf<'a> {
    pub phi: &'a [Dart],
    pub alpha: &'a [Dart],
    pub genus: usize,
}

const UNPAIRED: Dart = usize::MAX;

struct State {
    alpha: Vec<Dart>,
    uf: ParityUnionFind,
    seen: Vec<bool>,
    nodes: u64,
}

/// Depth-first enumeration of connected bipartite gluings of a layout.
pub struct Search {
    layout: Layout,
    genus: Option<usize>,
    split_depth: usize,
}

impl Search {
    /// Search restricted to `genus`, or over all genera if `None`.
    pub fn new(f: &FaceDegreeSequence, genus: Option<usize>) -> Self {
        let layout = Layout::new(f);
        let split_depth = (layout.dart_count() / 2).min(3);
        Self {
            layout,
            genus,
            split_depth,
        }
    }

    pub fn layout(&self) -> &Layout {
        &self.layout
    }

    fn fresh_state(&self) -> State {
        State {
            alpha: vec![UNPAIRED; self.layout.dart_count()],
            uf: ParityUnionFind::new(self.layout.face_count),
            seen: Vec::new(),
            nodes: 0,
        }
    }

    fn try_pair(&self, st: &mut State, a: Dart, b: Dart) -> bool {
        let l = &self.layout;
        if !st.uf.union(l.face_of(a), l.face_of(b), l.pair_parity(a, b)) {
            return false;
        }
        st.alpha[a] = b;
        st.alpha[b] = a;
        true
    }

    fn unpair(&self, st: &mut State, a: Dart, b: Dart) {
        st.alpha[a] = UNPAIRED;
        st.alpha[b] = UNPAIRED;
        st.uf.undo();
    }

    fn leaf_genus(&self, st: &mut State) -> Option<usize> {
        if st.uf.components() != 1 {
            return None;
        }
        let g = self.layout.genus_of(&st.alpha, &mut st.seen)?;
        match self.genus {
            Some(want) if want != g => None,
            _ => Some(g),
        }
    }

    /// Returns `true` to stop the whole search early.
    fn dfs<V: FnMut(&Leaf) -> bool>(&self, st: &mut State, from: Dart, visit: &mut V) -> bool {
        st.nodes += 1;
        let n = self.layout.dart_count();
        let Some(a) = (from..n).find(|&d| st.alpha[d] == UNPAIRED) else {
            if let Some(genus) = self.leaf_genus(st) {
                return visit(&Leaf {
                    phi: &self.layout.phi,
                    alpha: &st.alpha,
                    genus,
                });
            }
            return false;
        };
        for b in a + 1..n {
            if st.alpha[b] != UNPAIRED || !self.try_pair(st, a, b) {
                continue;
            }
            let stop = self.dfs(st, a + 1, visit);
            self.unpair(st, a, b);
            if stop {
                return true;
            }
        }
        false
    }

    /// Valid pairing prefixes of length `split_depth`, and the number of
    /// shallower nodes explored to produce them.
    fn prefixes(&self) -> (Vec<Vec<(Dart, Dart)>>, u64) {
        fn go(
            s: &Search,
            st: &mut State,
            from: Dart,
            cur: &mut Vec<(Dart, Dart)>,
            out: &mut Vec<Vec<(Dart, Dart)>>,
        ) {
            if cur.len() == s.split_depth {
                out.push(cur.clone());
                return;
            }
            st.nodes += 1;
            let n = s.layout.dart_count();
            let a = (from..n)
                .find(|&d| st.alpha[d] == UNPAIRED)
                .expect("prefix shorter than pairing");
            for b in a + 1..n {
                if st.alpha[b] != UNPAIRED || !s.try_pair(st, a, b) {
                    continue;
                }
                cur.push((a, b));
                go(s, st, a + 1, cur, out);
                cur.pop();
                s.unpair(st, a, b);
            }
        }
        let mut st = self.fresh_state();
        let mut out = Vec::new();
        go(self, &mut st, 0, &mut Vec::new(), &mut out);
        (out, st.nodes)
    }

    fn replay(&self, prefix: &[(Dart, Dart)]) -> (State, Dart) {
        let mut st = self.fresh_state();
        for &(a, b) in prefix {
            let ok = self.try_pair(&mut st, a, b);
            debug_assert!(ok);
        }
        let from = prefix.last().map_or(0, |&(a, _)| a + 1);
        (st, from)
    }

    /// Folds over all accepted leaves in parallel; returns the merged
    /// accumulator and the number of search nodes. Both are independent of
    /// the thread count as long as `merge` is associative and commutative.
    pub fn fold<A, I, S, M>(&self, init: I, step: S, merge: M) -> (A, u64)
    where
        A: Send,
        I: Fn() -> A + Sync + Send,
        S: Fn(&mut A, &Leaf) + Sync + Send,
        M: Fn(A, A) -> A + Sync + Send,
    {
        if self.layout.dart_count() == 0 {
            return (init(), 0);
        }
        let (prefixes, prefix_nodes) = self.prefixes();
        let (acc, nodes) = prefixes
            .par_iter()
            .map(|p| {
                let (mut st, from) = self.replay(p);
                let mut acc = init();
                self.dfs(&mut st, from, &mut |leaf| {
                    step(&mut acc, leaf);
                    false
                });
                (acc, st.nodes)
            })
            .reduce(|| (init(), 0), |(a, na), (b, nb)| (merge(a, b), na + nb));
        (acc, nodes + prefix_nodes)
    }

    /// Number of accepted leaves and search nodes.
    pub fn count(&self) -> (u64, u64) {
        self.fold(|| 0u64, |c, _| *c += 1, |a, b| a + b)
    }

    /// Whether some accepted leaf satisfies `pred`.
    pub fn any<P>(&self, pred: P) -> bool
    where
        P: Fn(&Leaf) -> bool + Sync + Send,
    {
        if self.layout.dart_count() == 0 {
            return false;
        }
        let (prefixes, _) = self.prefixes();
        prefixes.par_iter().any(|p| {
            let (mut st, from) = self.replay(p);
            self.dfs(&mut st, from, &mut |leaf| pred(leaf))
        })
    }

    /// Sequential visit of all accepted leaves in lexicographic order.
    pub fn for_each<V: FnMut(&Leaf)>(&self, mut visit: V) -> u64 {
        if self.layout.dart_count() == 0 {
            return 0;
        }
        let mut st = self.fresh_state();
        self.dfs(&mut st, 0, &mut |leaf| {
            visit(leaf);
            false
        });
        st.nodes
    }
}
