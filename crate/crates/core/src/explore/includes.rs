//! Inclusion of a map with a hole in a rooted map.
//!
//! `m ⊂ (M, e)` when gluing some bipartite map of the `2p`-gon into the hole
//! of `m` gives `(M, e)`. The internal darts of `m` then embed into `M`
//! compatibly with both permutations, and the embedding is forced by the
//! root, so inclusion is decided by propagation from the root followed by a
//! check that the leftover darts form a valid filler.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::boundary::{cut_edge, glue_filler, HoleMap, PolygonMap};
use crate::enumerate::{EnumError, Search};
use crate::faces::FaceDegreeSequence;
use crate::map::{CanonicalForm, Dart, RootedMap};

const NONE: Dart = usize::MAX;

/// Injective image of the internal darts of a map with a hole.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    /// Host dart for each internal dart of the pattern, `usize::MAX` on the hole.
    pub image: Vec<Dart>,
}

impl Embedding {
    /// Host faces covered by the internal faces of the pattern.
    pub fn faces(&self, host: &RootedMap) -> BTreeSet<usize> {
        self.image
            .iter()
            .filter(|&&d| d != NONE)
            .map(|&d| host.face_of(d))
            .collect()
    }
}

/// The forced embedding of `m0`'s internal darts sending its root edge to `e`,
/// if one exists.
pub fn embed(m0: &HoleMap, host: &RootedMap, e: Dart) -> Option<Embedding> {
    let m = m0.map();
    let n = m.dart_count();
    let mut image = vec![NONE; n];
    if m0.is_trivial() {
        return Some(Embedding { image });
    }
    let r = m.root();
    let (start, target) = if !m0.in_hole(r) {
        (r, e)
    } else {
        // the root edge has the hole on its right; its reverse is internal
        (m.alpha(r), host.alpha(e))
    };
    let mut used = vec![false; host.dart_count()];
    let mut stack = vec![(start, target)];
    while let Some((d, x)) = stack.pop() {
        if image[d] != NONE {
            if image[d] != x {
                return None;
            }
            continue;
        }
        if used[x] {
            return None;
        }
        image[d] = x;
        used[x] = true;
        stack.push((m.phi(d), host.phi(x)));
        let a = m.alpha(d);
        if !m0.in_hole(a) {
            stack.push((a, host.alpha(x)));
        }
    }
    let internal = (0..n).filter(|&d| !m0.in_hole(d)).count();
    let mapped = image.iter().filter(|&&x| x != NONE).count();
    (mapped == internal).then_some(Embedding { image })
}

/// The filler realising `m0 ⊂ (host, e)` with the offset-0 attachment, if any.
pub fn complement(m0: &HoleMap, host: &RootedMap, e: Dart) -> Option<PolygonMap> {
    if m0.is_trivial() {
        // gluing into the trivial map closes the digon with the reversed orientation
        return Some(cut_edge(host, host.alpha(e))).filter(|p| p.map().is_bipartite());
    }
    let emb = embed(m0, host, e)?;
    let m = m0.map();
    let hole = m0.hole_contour();
    let len = hole.len();
    let mut hole_pos = vec![NONE; m.dart_count()];
    for (i, &h) in hole.iter().enumerate() {
        hole_pos[h] = i;
    }
    let mut pre = vec![NONE; host.dart_count()];
    for (d, &x) in emb.image.iter().enumerate() {
        if x != NONE {
            pre[x] = d;
        }
    }
    let mut label = vec![NONE; host.dart_count()];
    let mut c = 0;
    for (x, slot) in label.iter_mut().enumerate() {
        if pre[x] == NONE {
            *slot = c;
            c += 1;
        }
    }
    let total = c + len;
    // x_t attaches to h_{-t}
    let ext = |h: Dart| c + (len - hole_pos[h]) % len;
    // the outer side of a host dart in the image of an internal dart facing the hole
    let side = |x: Dart| -> Dart {
        if pre[x] == NONE {
            label[x]
        } else {
            ext(m.alpha(pre[x]))
        }
    };
    let mut phi = vec![0; total];
    let mut alpha = vec![0; total];
    for x in 0..host.dart_count() {
        if pre[x] != NONE {
            continue;
        }
        phi[label[x]] = label[host.phi(x)];
        alpha[label[x]] = side(host.alpha(x));
    }
    for t in 0..len {
        phi[c + t] = c + (t + 1) % len;
        let h = hole[(len - t) % len];
        let d = m.alpha(h);
        alpha[c + t] = side(host.alpha(emb.image[d]));
    }
    let map = RootedMap::from_permutations(phi, alpha, c).ok()?;
    PolygonMap::new(map, vec![c]).ok()
}

/// Whether `m0 ⊂ (host, e)`. Only meaningful for bipartite hosts: a glued
/// map is always bipartite, so non-bipartite hosts include nothing.
pub fn includes(m0: &HoleMap, host: &RootedMap, e: Dart) -> bool {
    complement(m0, host, e).is_some()
}

/// Number of darts `e` of `host` with `m0 ⊂ (host, e)`.
pub fn occ(m0: &HoleMap, host: &RootedMap) -> usize {
    let n = host.dart_count();
    if n >= 256 {
        (0..n)
            .into_par_iter()
            .filter(|&e| includes(m0, host, e))
            .count()
    } else {
        (0..n).filter(|&e| includes(m0, host, e)).count()
    }
}

/// Canonical forms of every rooted map obtained by gluing a genus-`g` filler
/// with internal degrees `rest` into `m0`, over all attachment offsets.
pub fn gluing_closure(
    m0: &HoleMap,
    rest: &FaceDegreeSequence,
    g: usize,
    limit: usize,
) -> Result<BTreeSet<CanonicalForm>, EnumError> {
    let p = m0.half_perimeter();
    let full = rest.plus(&FaceDegreeSequence::indicator(p));
    if full.edge_count() > limit {
        return Err(EnumError::SizeLimitExceeded {
            edges: full.edge_count(),
            limit,
        });
    }
    let (set, _) = Search::new(&full, Some(g)).fold(
        BTreeSet::new,
        |acc, leaf| {
            for mark in 0..leaf.alpha.len() {
                let fm = RootedMap::from_permutations(leaf.phi.to_vec(), leaf.alpha.to_vec(), mark)
                    .expect("search yields valid maps");
                if fm.face_degree_of(mark) != 2 * p {
                    continue;
                }
                let Ok(filler) = PolygonMap::new(fm, vec![mark]) else {
                    continue;
                };
                for k in 0..2 * p {
                    if let Ok(glued) = glue_filler(m0, &filler, k) {
                        acc.insert(glued.canonical_form());
                    }
                }
            }
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    );
    Ok(set)
}

/// Ground truth for [`includes`]: enumerates every filler with the
/// complementary degrees and the host's genus, every attachment offset, and
/// compares the gluings with `(host, e)` up to rooted isomorphism.
pub fn includes_oracle(
    m0: &HoleMap,
    host: &RootedMap,
    e: Dart,
    limit: usize,
) -> Result<bool, EnumError> {
    let Some(f) = host.face_degree_sequence() else {
        return Ok(false);
    };
    let Some(rest) = f.checked_minus(&m0.internal_degrees()) else {
        return Ok(false);
    };
    let target = host.rerooted(e).canonical_form();
    Ok(gluing_closure(m0, &rest, host.genus(), limit)?.contains(&target))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundary::{make_pattern, PatternKind};
    use crate::map::build_map;

    fn digon() -> RootedMap {
        make_pattern(PatternKind::Single, 1).into_map()
    }

    #[test]
    fn trivial_pattern_is_everywhere() {
        let t = HoleMap::trivial();
        for m in [RootedMap::single_edge(), digon()] {
            assert_eq!(occ(&t, &m), m.dart_count());
        }
    }

    #[test]
    fn digon_examples() {
        let d = digon();
        let m11 = make_pattern(PatternKind::Single, 1);
        assert_eq!(occ(&m11, &d), 4);
        for e in 0..4 {
            assert_eq!(
                includes(&m11, &d, e),
                includes_oracle(&m11, &d, e, 5).unwrap()
            );
        }
        let m12 = make_pattern(PatternKind::Double, 1);
        assert_eq!(occ(&m12, &RootedMap::single_edge()), 0);
    }

    #[test]
    fn complement_glues_back() {
        let host = build_map(
            &[vec![1, 2, 3, 4], vec![5, 6]],
            &[(1, 5), (2, 3), (4, 6)],
            1,
        )
        .unwrap();
        for pattern in [
            HoleMap::trivial(),
            make_pattern(PatternKind::Single, 1),
            make_pattern(PatternKind::Single, 2),
        ] {
            for e in 0..host.dart_count() {
                if let Some(f) = complement(&pattern, &host, e) {
                    let glued = glue_filler(&pattern, &f, 0).unwrap();
                    assert_eq!(glued.canonical_form(), host.rerooted(e).canonical_form());
                }
                assert_eq!(
                    includes(&pattern, &host, e),
                    includes_oracle(&pattern, &host, e, 6).unwrap(),
                    "e={e}"
                );
            }
        }
    }

    #[test]
    fn oracle_size_guard() {
        let big = make_pattern(PatternKind::Double, 3).into_map();
        let t = HoleMap::trivial();
        assert!(matches!(
            includes_oracle(&t, &big, 0, 3),
            Err(EnumError::SizeLimitExceeded { .. })
        ));
    }
}
