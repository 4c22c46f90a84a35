use genusmap_core::boundary::{make_pattern, HoleMap, PatternKind};
use genusmap_core::enumerate::rooted_maps;
use genusmap_core::explore::occ;
use genusmap_core::sample::sample_uniform;
use genusmap_core::stats::{
    estimate_weights, euler_identity_check, exact_density, markov_flatness_check,
    verify_pattern_identity,
};
use genusmap_core::{beta, beta_marked, FaceDegreeSequence};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

fn n_of(j: usize, n: usize) -> FaceDegreeSequence {
    FaceDegreeSequence::from_pairs([(j, n)])
}

#[test]
fn weights_track_exact_density() {
    let f = n_of(2, 4);
    let batch = sample_uniform(&f, 0, 2024, 1000).unwrap();
    let w = estimate_weights(&batch, 2);
    let exact = exact_density(&make_pattern(PatternKind::Single, 2), &f, 0).unwrap();
    let exact = exact.to_f64().unwrap();
    assert!(
        (w.q_hat[1] - exact).abs() <= 3.0 * w.q_stderr[1],
        "{} vs {exact}",
        w.q_hat[1]
    );
    // no digons in a quadrangulation
    assert_eq!(w.q_hat[0], 0.0);
    assert!((w.theta_hat - (-1.0 / 8.0)).abs() < 1e-12);
}

#[test]
fn exact_density_is_the_class_average() {
    let f = FaceDegreeSequence::from_pairs([(1, 1), (2, 2)]);
    for g in 0..=1 {
        let classes = rooted_maps(&f, g, 5).unwrap();
        for p in [
            make_pattern(PatternKind::Single, 2),
            make_pattern(PatternKind::Double, 2),
        ] {
            let total: usize = classes.iter().map(|m| occ(&p, m)).sum();
            let want = BigRational::new(
                BigInt::from(total),
                BigInt::from(2 * f.edge_count() * classes.len()),
            );
            assert_eq!(exact_density(&p, &f, g).unwrap(), want);
        }
    }
}

#[test]
fn pattern_identities_small() {
    for (f, g) in [
        (n_of(1, 3), 0),
        (n_of(2, 2), 0),
        (FaceDegreeSequence::from_pairs([(1, 2), (2, 1)]), 0),
    ] {
        for j in 1..=2 {
            assert!(
                verify_pattern_identity(&f, g, j, 5).unwrap().ok(),
                "{f} j={j}"
            );
        }
    }
}

#[test]
fn digon_pair_joint_inclusion() {
    let f = n_of(1, 4);
    let m11 = make_pattern(PatternKind::Single, 1);
    let r = markov_flatness_check(&f, 0, &[m11], &[(0, 0)], 5).unwrap();
    let case = &r.cases[0];
    let marked = beta_marked(&[1, 1], &n_of(1, 2), 0).unwrap().count;
    let b = beta(&f, 0).count;
    let want = BigRational::new(BigInt::from(marked), BigInt::from(8u32) * BigInt::from(b));
    assert!(case.equal);
    assert_eq!(case.probability, want);
}

#[test]
fn trivial_pairs_are_flagged() {
    let f = n_of(2, 2);
    let r = markov_flatness_check(&f, 0, &[HoleMap::trivial()], &[(0, 0)], 5).unwrap();
    assert!(r.cases[0].degenerate);
    assert!(r.ok());
}

#[test]
fn samples_satisfy_euler_identities() {
    for (f, g) in [
        (n_of(2, 3), 0),
        (FaceDegreeSequence::from_pairs([(1, 1), (3, 2)]), 1),
    ] {
        for m in sample_uniform(&f, g, 5, 50).unwrap().maps {
            assert!(euler_identity_check(&m).ok());
        }
    }
}
