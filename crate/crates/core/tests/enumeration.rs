use genusmap_core::enumerate::{beta_marked_oracle, rooted_maps};
use genusmap_core::{beta, beta_marked, beta_oracle, FaceDegreeSequence};
use num_bigint::BigUint;

fn spec(text: &str) -> FaceDegreeSequence {
    FaceDegreeSequence::from_pairs(text.split(',').map(|p| {
        let (j, c) = p.split_once(':').unwrap();
        (j.parse().unwrap(), c.parse().unwrap())
    }))
}

// Computed by materialising every rooted map and deduplicating canonical forms.
const FROZEN: &[(&str, usize, u64)] = &[
    ("1:1", 0, 1),
    ("2:1", 0, 2),
    ("2:1", 1, 0),
    ("1:2", 0, 1),
    ("3:1", 0, 5),
    ("3:1", 1, 1),
    ("1:1,2:1", 0, 6),
    ("1:3", 0, 1),
    ("4:1", 0, 14),
    ("4:1", 1, 10),
    ("1:1,3:1", 0, 20),
    ("1:1,3:1", 1, 4),
    ("2:2", 0, 9),
    ("2:2", 1, 1),
    ("1:2,2:1", 0, 12),
    ("1:4", 0, 1),
    ("5:1", 0, 42),
    ("5:1", 1, 70),
    ("5:1", 2, 8),
    ("1:1,4:1", 0, 70),
    ("1:1,4:1", 1, 50),
    ("2:1,3:1", 0, 60),
    ("2:1,3:1", 1, 30),
    ("1:2,3:1", 0, 50),
    ("1:2,3:1", 1, 10),
    ("1:1,2:2", 0, 45),
    ("1:1,2:2", 1, 5),
    ("1:3,2:1", 0, 20),
    ("1:5", 0, 1),
];

#[test]
fn frozen_counts() {
    for &(f, g, want) in FROZEN {
        assert_eq!(beta(&spec(f), g).count, BigUint::from(want), "{f} g={g}");
    }
}

#[test]
fn search_matches_materialisation_up_to_five_edges() {
    for f in FaceDegreeSequence::all_up_to(5) {
        for g in 0..=f.max_genus() + 1 {
            assert_eq!(
                beta(&f, g).count,
                beta_oracle(&f, g, 5).unwrap().count,
                "{f} g={g}"
            );
        }
    }
}

#[test]
fn rooted_class_lists_validate() {
    for f in FaceDegreeSequence::all_up_to(4) {
        for g in 0..=f.max_genus() {
            for m in rooted_maps(&f, g, 4).unwrap() {
                assert_eq!(m.face_degree_sequence().unwrap(), f);
                assert_eq!(m.genus(), g);
                assert!(m.is_bipartite());
            }
        }
    }
}

#[test]
fn frozen_marked_counts() {
    for (p, v, want) in [
        (vec![1, 1], "1:1", 4u64),
        (vec![2], "1:2", 6),
        (vec![1, 2], "2:1", 72),
    ] {
        let v = spec(v);
        assert_eq!(beta_marked(&p, &v, 0).unwrap().count, BigUint::from(want));
        assert_eq!(
            beta_marked_oracle(&p, &v, 0, 6).unwrap(),
            BigUint::from(want)
        );
    }
}

#[test]
fn single_face_genus_bound() {
    // one face of degree 4: the torus gluing is not bipartite, and the
    // bipartite budget ½Σ(j-1)f_j already rules it out
    let f = spec("2:1");
    assert!(beta(&f, 1).infeasible);
    assert_eq!(beta(&f, 1).count, BigUint::from(0u32));
    // one hexagon: the torus gluing exists
    assert!(!beta(&spec("3:1"), 1).infeasible);
}
