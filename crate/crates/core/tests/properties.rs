use genusmap_core::boundary::{glue_filler, make_pattern, HoleMap, PatternKind};
use genusmap_core::explore::{
    ball, complement, local_distance, occ, peel_sequence, Explored, LocalDistance,
};
use genusmap_core::format::{parse_map, write_map};
use genusmap_core::sample::sample_uniform_with;
use genusmap_core::stats::euler_identity_check;
use genusmap_core::{FaceDegreeSequence, RootedMap};
use proptest::prelude::*;

/// A small random rooted map: face half-degrees in 1..=3, total edges ≤ 6.
fn small_map() -> impl Strategy<Value = RootedMap> {
    (
        prop::collection::vec(1usize..=3, 1..=3),
        0usize..=1,
        any::<u64>(),
    )
        .prop_filter_map("no map of this type", |(halves, g, seed)| {
            let f = FaceDegreeSequence::from_half_degrees(halves);
            if f.edge_count() > 6 || !f.admits_genus(g) {
                return None;
            }
            let batch = sample_uniform_with(&f, g, seed, 1, 20_000).ok()?;
            batch.maps.into_iter().next()
        })
}

fn map_and_dart() -> impl Strategy<Value = (RootedMap, usize)> {
    small_map().prop_flat_map(|m| {
        let n = m.dart_count();
        (Just(m), 0..n)
    })
}

fn patterns() -> Vec<HoleMap> {
    let mut out = vec![HoleMap::trivial()];
    for j in 1..=2 {
        out.push(make_pattern(PatternKind::Single, j));
        out.push(make_pattern(PatternKind::Double, j));
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_form_ignores_labels(
        (m, perm) in small_map().prop_flat_map(|m| {
            let n = m.dart_count();
            (Just(m), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        })
    ) {
        let r = m.relabeled(&perm);
        prop_assert_eq!(r.canonical_form(), m.canonical_form());
        prop_assert!(r.is_isomorphic(&m));
    }

    #[test]
    fn euler_and_parity(m in small_map()) {
        prop_assert!(euler_identity_check(&m).ok());
        prop_assert!(m.is_bipartite());
        for d in 0..m.dart_count() {
            prop_assert_eq!(m.face_degree_of(d) % 2, 0);
        }
        let chi = m.vertex_count() as i64 - m.edge_count() as i64 + m.face_count() as i64;
        prop_assert_eq!(chi, 2 - 2 * m.genus() as i64);
    }

    #[test]
    fn file_round_trip(m in small_map()) {
        let back = parse_map(&write_map(&m)).unwrap();
        prop_assert_eq!(back.canonical_form(), m.canonical_form());
    }

    #[test]
    fn occ_ignores_the_root((m, e) in map_and_dart()) {
        let r = m.rerooted(e);
        for p in patterns() {
            prop_assert_eq!(occ(&p, &m), occ(&p, &r));
        }
    }

    #[test]
    fn balls_grow((m, e) in map_and_dart(), r in 1usize..5) {
        let small = ball(&m, e, r);
        let large = ball(&m, e, r + 1);
        for d in small.darts() {
            prop_assert!(large.contains(d));
        }
        if small.is_whole() {
            prop_assert!(large.is_whole());
        }
    }

    #[test]
    fn complements_glue_back((m, e) in map_and_dart()) {
        let target = m.rerooted(e).canonical_form();
        let f = m.face_degree_sequence().unwrap();
        for p in patterns() {
            if let Some(filler) = complement(&p, &m, e) {
                let glued = glue_filler(&p, &filler, 0).unwrap();
                prop_assert_eq!(glued.canonical_form(), target.clone());
                let mut rest = filler.internal_degrees();
                rest = rest.plus(&p.internal_degrees());
                prop_assert_eq!(rest, f.clone());
            }
        }
    }

    #[test]
    fn peeling_prefixes_are_included(m in small_map()) {
        let seq = peel_sequence(&m);
        for s in &seq.steps {
            if let Explored::Hole(h) = &s.explored {
                prop_assert!(complement(h, &m, m.root()).is_some());
            }
        }
        prop_assert!(seq.result().is_isomorphic(&m));
    }

    #[test]
    fn local_distance_is_an_ultrametric(
        a in small_map(), b in small_map(), c in small_map()
    ) {
        let ab = local_distance(&a, &b);
        let bc = local_distance(&b, &c);
        let ac = local_distance(&a, &c);
        prop_assert_eq!(&ab, &local_distance(&b, &a));
        prop_assert!(ac.0 <= ab.0.max(bc.0));
        prop_assert_eq!(ab == LocalDistance::zero(), a.canonical_form() == b.canonical_form());
    }
}
