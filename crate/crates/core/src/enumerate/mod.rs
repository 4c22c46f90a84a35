//! Exact counts of rooted bipartite maps with prescribed genus and faces.
//!
//! With `phi_0` of cycle type `f` fixed and `N` the number of involutions
//! giving a connected bipartite gluing of genus `g`, the number of rooted
//! maps is `2E · N / z(f)` where `z(f) = Π (2j)^{f_j} f_j!` is the size of
//! the centraliser of `phi_0`: rootings kill all automorphisms, so the
//! centraliser acts freely on (involution, root) pairs.

mod cache;
pub(crate) mod search;

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::faces::FaceDegreeSequence;
use crate::map::{CanonicalForm, RootedMap};

pub use cache::{Cache, CacheError, CacheKey};
pub use search::{Layout, Leaf, Search};

/// Default edge budget for materialising every rooted map.
pub const DEFAULT_ORACLE_LIMIT: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("{edges} edges exceeds the materialisation limit of {limit}")]
    SizeLimitExceeded { edges: usize, limit: usize },
    #[error("boundary list must be nonempty")]
    EmptyBoundary,
    #[error("boundary half-perimeters must be positive")]
    ZeroPerimeter,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EnumerationResult {
    #[serde(serialize_with = "serialize_decimal")]
    pub count: BigUint,
    pub faces: FaceDegreeSequence,
    pub genus: usize,
    pub boundary: Option<Vec<usize>>,
    /// Set when `2g > Σ (j-1) f_j`; the count is then zero without search.
    pub infeasible: bool,
    pub nodes: u64,
    pub seconds: f64,
}

fn serialize_decimal<S: serde::Serializer>(n: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_string())
}

/// `z(f) = Π (2j)^{f_j} · f_j!`.
pub fn centraliser_size(f: &FaceDegreeSequence) -> BigUint {
    let mut z = BigUint::one();
    for (j, c) in f.iter() {
        for k in 1..=c {
            z *= BigUint::from(2 * j) * BigUint::from(k);
        }
    }
    z
}

fn exact_div(num: BigUint, den: &BigUint) -> BigUint {
    let (q, r) = num.div_rem(den);
    assert!(r.is_zero(), "count {num} not divisible by {den}");
    q
}

/// Number of rooted bipartite maps of genus `g` with face degrees `f`.
///
/// The vertex map (no darts) is counted once for the empty sequence in genus 0.
pub fn beta(f: &FaceDegreeSequence, g: usize) -> EnumerationResult {
    let start = Instant::now();
    let mut out = EnumerationResult {
        count: BigUint::zero(),
        faces: f.clone(),
        genus: g,
        boundary: None,
        infeasible: false,
        nodes: 0,
        seconds: 0.0,
    };
    if f.is_empty() {
        out.count = BigUint::from((g == 0) as u32);
        out.infeasible = g != 0;
    } else if !f.admits_genus(g) {
        out.infeasible = true;
    } else {
        let (n, nodes) = Search::new(f, Some(g)).count();
        out.count = exact_div(
            BigUint::from(2 * f.edge_count()) * BigUint::from(n),
            &centraliser_size(f),
        );
        out.nodes = nodes;
    }
    out.seconds = start.elapsed().as_secs_f64();
    out
}

/// Rooted connected bipartite maps with face degrees `f`, over all genera.
pub fn beta_all_genera(f: &FaceDegreeSequence) -> BigUint {
    if f.is_empty() {
        return BigUint::one();
    }
    let (n, _) = Search::new(f, None).count();
    exact_div(
        BigUint::from(2 * f.edge_count()) * BigUint::from(n),
        &centraliser_size(f),
    )
}

/// Ordered tuples of darts lying in pairwise distinct faces of `layout`'s
/// face type with half-degrees `p_list`.
fn mark_tuples(f_full: &FaceDegreeSequence, p_list: &[usize]) -> BigUint {
    // Faces of equal degree are interchangeable: choose distinct faces of each
    // requested degree in order, then a dart in each (2p choices).
    let mut used: BTreeMap<usize, usize> = BTreeMap::new();
    let mut total = BigUint::one();
    for &p in p_list {
        let taken = used.entry(p).or_insert(0);
        let avail = f_full.get(p).saturating_sub(*taken);
        if avail == 0 {
            return BigUint::zero();
        }
        total *= BigUint::from(avail * 2 * p);
        *taken += 1;
    }
    total
}

/// Number of genus-`g` maps of the `(2p_1, …, 2p_l)`-gon with internal face
/// degrees `f`, rooted at the first mark.
pub fn beta_marked(
    p_list: &[usize],
    f: &FaceDegreeSequence,
    g: usize,
) -> Result<EnumerationResult, EnumError> {
    if p_list.is_empty() {
        return Err(EnumError::EmptyBoundary);
    }
    if p_list.contains(&0) {
        return Err(EnumError::ZeroPerimeter);
    }
    let start = Instant::now();
    let full = f.plus(&FaceDegreeSequence::from_half_degrees(
        p_list.iter().copied(),
    ));
    let mut out = EnumerationResult {
        count: BigUint::zero(),
        faces: f.clone(),
        genus: g,
        boundary: Some(p_list.to_vec()),
        infeasible: false,
        nodes: 0,
        seconds: 0.0,
    };
    if !full.admits_genus(g) {
        out.infeasible = true;
    } else {
        let (n, nodes) = Search::new(&full, Some(g)).count();
        out.count = exact_div(
            BigUint::from(n) * mark_tuples(&full, p_list),
            &centraliser_size(&full),
        );
        out.nodes = nodes;
    }
    out.seconds = start.elapsed().as_secs_f64();
    Ok(out)
}

fn check_limit(f: &FaceDegreeSequence, limit: usize) -> Result<(), EnumError> {
    if f.edge_count() > limit {
        return Err(EnumError::SizeLimitExceeded {
            edges: f.edge_count(),
            limit,
        });
    }
    Ok(())
}

/// Every rooted bipartite map of genus `g` with faces `f`, one per rooted
/// isomorphism class, sorted by canonical form.
pub fn rooted_maps(
    f: &FaceDegreeSequence,
    g: usize,
    limit: usize,
) -> Result<Vec<RootedMap>, EnumError> {
    check_limit(f, limit)?;
    if f.is_empty() || !f.admits_genus(g) {
        return Ok(Vec::new());
    }
    let (classes, _) = Search::new(f, Some(g)).fold(
        BTreeMap::<CanonicalForm, RootedMap>::new,
        |acc, leaf| {
            for root in 0..leaf.alpha.len() {
                let m = RootedMap::from_permutations(leaf.phi.to_vec(), leaf.alpha.to_vec(), root)
                    .expect("search yields valid maps");
                let m = m.canonicalized();
                acc.entry(m.canonical_form()).or_insert(m);
            }
        },
        |mut a, b| {
            for (k, v) in b {
                a.entry(k).or_insert(v);
            }
            a
        },
    );
    Ok(classes.into_values().collect())
}

/// Independent count of rooted isomorphism classes by materialisation.
pub fn beta_oracle(
    f: &FaceDegreeSequence,
    g: usize,
    limit: usize,
) -> Result<EnumerationResult, EnumError> {
    let start = Instant::now();
    let infeasible = !f.admits_genus(g) || (f.is_empty() && g != 0);
    let count = if f.is_empty() {
        check_limit(f, limit)?;
        BigUint::from((g == 0) as u32)
    } else {
        BigUint::from(rooted_maps(f, g, limit)?.len())
    };
    Ok(EnumerationResult {
        count,
        faces: f.clone(),
        genus: g,
        boundary: None,
        infeasible,
        nodes: 0,
        seconds: start.elapsed().as_secs_f64(),
    })
}

/// Independent count of marked polygon maps by canonical deduplication.
pub fn beta_marked_oracle(
    p_list: &[usize],
    f: &FaceDegreeSequence,
    g: usize,
    limit: usize,
) -> Result<BigUint, EnumError> {
    use crate::boundary::PolygonMap;
    if p_list.is_empty() {
        return Err(EnumError::EmptyBoundary);
    }
    let full = f.plus(&FaceDegreeSequence::from_half_degrees(
        p_list.iter().copied(),
    ));
    check_limit(&full, limit)?;
    let maps = rooted_maps(&full, g, limit)?;
    let forms: std::collections::BTreeSet<CanonicalForm> = maps
        .par_iter()
        .flat_map_iter(|m| {
            let mut found = Vec::new();
            let mut tuple = Vec::new();
            marks_rec(m, p_list, &mut tuple, &mut found);
            found
        })
        .collect();
    fn marks_rec(m: &RootedMap, p: &[usize], tuple: &mut Vec<usize>, out: &mut Vec<CanonicalForm>) {
        if tuple.len() == p.len() {
            if let Ok(pm) = PolygonMap::new(m.clone(), tuple.clone()) {
                out.push(pm.canonical_form());
            }
            return;
        }
        let want = 2 * p[tuple.len()];
        let candidates: Vec<usize> = if tuple.is_empty() {
            vec![m.root()]
        } else {
            (0..m.dart_count()).collect()
        };
        for d in candidates {
            if m.face_degree_of(d) == want && tuple.iter().all(|&t| m.face_of(t) != m.face_of(d)) {
                tuple.push(d);
                marks_rec(m, p, tuple, out);
                tuple.pop();
            }
        }
    }
    Ok(BigUint::from(forms.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(pairs: &[(usize, usize)]) -> FaceDegreeSequence {
        FaceDegreeSequence::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn small_counts() {
        assert_eq!(beta(&f(&[(1, 1)]), 0).count, BigUint::from(1u32));
        assert_eq!(beta(&f(&[(2, 1)]), 0).count, BigUint::from(2u32));
        assert_eq!(beta(&f(&[(2, 1)]), 1).count, BigUint::zero());
        assert_eq!(beta(&f(&[(1, 2)]), 0).count, BigUint::from(1u32));
        assert!(beta(&f(&[(1, 2)]), 1).infeasible);
        assert_eq!(beta(&FaceDegreeSequence::empty(), 0).count, BigUint::one());
    }

    #[test]
    fn centraliser() {
        assert_eq!(centraliser_size(&f(&[(1, 2)])), BigUint::from(8u32));
        assert_eq!(centraliser_size(&f(&[(2, 1), (1, 1)])), BigUint::from(8u32));
    }

    #[test]
    fn marked_closing_small() {
        let r = beta_marked(&[1], &FaceDegreeSequence::empty(), 0).unwrap();
        assert_eq!(r.count, BigUint::one());
        assert_eq!(
            beta_marked(&[], &FaceDegreeSequence::empty(), 0).unwrap_err(),
            EnumError::EmptyBoundary
        );
    }

    #[test]
    fn oracle_limit() {
        let big = f(&[(3, 2)]);
        assert!(matches!(
            beta_oracle(&big, 0, 5),
            Err(EnumError::SizeLimitExceeded { edges: 6, limit: 5 })
        ));
    }

    #[test]
    fn marked_oracle_agrees() {
        for v in FaceDegreeSequence::all_up_to(2) {
            for p in [vec![1], vec![2], vec![1, 1], vec![1, 2]] {
                for g in 0..=1 {
                    let fast = beta_marked(&p, &v, g).unwrap().count;
                    let slow = beta_marked_oracle(&p, &v, g, 6).unwrap();
                    assert_eq!(fast, slow, "p={p:?} v={v} g={g}");
                }
            }
        }
    }
}
