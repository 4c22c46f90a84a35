//! Lazy peeling of a finite rooted map.
//!
//! The explored region is a planar map with a simple hole. Each boundary edge
//! is tracked by the host dart on its unexplored side. Peeling an edge whose
//! unexplored side lies in a new face reveals that face as a fresh polygon
//! glued along the edge; peeling an edge whose other side already bounds the
//! explored region folds it onto the neighbouring boundary edge it matches.
//! Matched pairs that are not adjacent on the boundary cannot be folded
//! without splitting the hole; they are closed together in one final step once
//! every face is revealed (this only happens in positive genus).

use serde::Serialize;

use crate::boundary::{validate_hole_map, HoleMap};
use crate::map::{Dart, RootedMap};

const NONE: usize = usize::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "action", rename_all = "lowercase")]
pub enum PeelAction {
    /// A new face of the given degree joined the explored region.
    Reveal { face_degree: usize },
    /// `pairs` pairs of boundary edges were identified.
    Glue { pairs: usize },
}

#[derive(Clone, Debug)]
pub enum Explored {
    Hole(HoleMap),
    Finished(RootedMap),
}

impl Explored {
    pub fn map(&self) -> &RootedMap {
        match self {
            Explored::Hole(h) => h.map(),
            Explored::Finished(m) => m,
        }
    }
}

#[derive(Clone, Debug)]
pub struct PeelStep {
    pub action: PeelAction,
    /// Hole perimeter after the step (0 once finished).
    pub perimeter: usize,
    pub explored: Explored,
}

/// One line of a peeling trace.
#[derive(Clone, Debug, Serialize)]
pub struct PeelRecord {
    pub step: usize,
    #[serde(flatten)]
    pub action: PeelAction,
    pub perimeter: usize,
}

#[derive(Clone, Debug)]
pub struct PeelSequence {
    pub start: HoleMap,
    pub steps: Vec<PeelStep>,
}

impl PeelSequence {
    pub fn records(&self) -> Vec<PeelRecord> {
        self.steps
            .iter()
            .enumerate()
            .map(|(i, s)| PeelRecord {
                step: i + 1,
                action: s.action,
                perimeter: s.perimeter,
            })
            .collect()
    }

    pub fn result(&self) -> &RootedMap {
        self.steps
            .last()
            .map_or(self.start.map(), |s| s.explored.map())
    }
}

struct State<'a> {
    host: &'a RootedMap,
    /// Host dart of each internal dart.
    image: Vec<Dart>,
    /// Internal dart of each host dart.
    pre: Vec<usize>,
    /// Internal edge partner, or `NONE` while the edge is on the boundary.
    mate: Vec<usize>,
    /// Boundary in contour order, by the host dart on the unexplored side.
    hole: Vec<Dart>,
    explored_face: Vec<bool>,
}

impl<'a> State<'a> {
    fn new(host: &'a RootedMap) -> Self {
        let e = host.root();
        Self {
            host,
            image: Vec::new(),
            pre: vec![NONE; host.dart_count()],
            mate: Vec::new(),
            hole: vec![e, host.alpha(e)],
            explored_face: vec![false; host.face_count()],
        }
    }

    fn reveal(&mut self, pos: usize) -> usize {
        let m = self.host;
        let x = self.hole[pos];
        // the boundary edge's explored side, absent only at the trivial start
        let back = self.pre[m.alpha(x)];
        let contour = m.face_contour(x);
        for &y in &contour {
            self.pre[y] = self.image.len();
            self.image.push(y);
            self.mate.push(NONE);
        }
        self.explored_face[m.face_of(x)] = true;
        if back != NONE {
            let xi = self.pre[x];
            self.mate[xi] = back;
            self.mate[back] = xi;
        }
        let fresh: Vec<Dart> = contour[1..].iter().rev().map(|&y| m.alpha(y)).collect();
        self.hole.splice(pos..=pos, fresh);
        contour.len()
    }

    fn mate_pair(&mut self, link: Dart) {
        let a = self.pre[link];
        let b = self.pre[self.host.alpha(link)];
        self.mate[a] = b;
        self.mate[b] = a;
    }

    /// Boundary position matched with `pos` (same host edge, other side).
    fn partner(&self, pos: usize) -> usize {
        let want = self.host.alpha(self.hole[pos]);
        self.hole
            .iter()
            .position(|&l| l == want)
            .expect("explored side is matched on the boundary")
    }

    fn snapshot(&self) -> Explored {
        let m = self.host;
        let i = self.image.len();
        let h = self.hole.len();
        let n = i + h;
        let mut hole_at = vec![NONE; m.dart_count()];
        for (k, &l) in self.hole.iter().enumerate() {
            hole_at[l] = i + k;
        }
        let mut phi = vec![0; n];
        let mut alpha = vec![0; n];
        for d in 0..i {
            phi[d] = self.pre[m.phi(self.image[d])];
            alpha[d] = if self.mate[d] != NONE {
                self.mate[d]
            } else {
                hole_at[m.alpha(self.image[d])]
            };
        }
        for (k, &l) in self.hole.iter().enumerate() {
            phi[i + k] = i + (k + 1) % h;
            alpha[i + k] = self.pre[m.alpha(l)];
        }
        let e = m.root();
        let root = if self.pre[e] != NONE {
            self.pre[e]
        } else {
            hole_at[e]
        };
        let map =
            RootedMap::from_permutations(phi, alpha, root).expect("explored region is a valid map");
        if h == 0 {
            Explored::Finished(map)
        } else {
            Explored::Hole(validate_hole_map(map, i).expect("explored region is a map with a hole"))
        }
    }
}

/// Peels `m` from its root, always choosing among the boundary edges that
/// can be peeled one at minimal distance to the root vertex, ties broken by
/// the canonical label of its host dart.
pub fn peel_sequence(m: &RootedMap) -> PeelSequence {
    let dist = m.vertex_distances(m.root());
    let labels = m.canonical_labels();
    let key = |x: Dart| {
        let d = dist[m.origin(x)].min(dist[m.origin(m.alpha(x))]);
        (d, labels[x])
    };
    let mut st = State::new(m);
    let mut steps = Vec::new();
    while !st.hole.is_empty() {
        let mut order: Vec<usize> = (0..st.hole.len()).collect();
        order.sort_by_key(|&k| key(st.hole[k]));
        let mut action = None;
        for &k in &order {
            let x = st.hole[k];
            if !st.explored_face[m.face_of(x)] {
                let deg = st.reveal(k);
                action = Some(PeelAction::Reveal { face_degree: deg });
                break;
            }
            let j = st.partner(k);
            let len = st.hole.len();
            if j == (k + 1) % len || k == (j + 1) % len {
                st.mate_pair(x);
                let (a, b) = if k < j { (k, j) } else { (j, k) };
                st.hole.remove(b);
                st.hole.remove(a);
                action = Some(PeelAction::Glue { pairs: 1 });
                break;
            }
        }
        let action = action.unwrap_or_else(|| {
            let links = std::mem::take(&mut st.hole);
            for &l in &links {
                if st.mate[st.pre[l]] == NONE {
                    st.mate_pair(l);
                }
            }
            PeelAction::Glue {
                pairs: links.len() / 2,
            }
        });
        steps.push(PeelStep {
            action,
            perimeter: st.hole.len(),
            explored: st.snapshot(),
        });
    }
    PeelSequence {
        start: HoleMap::trivial(),
        steps,
    }
}
