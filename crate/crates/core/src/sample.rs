//! Uniform random rooted bipartite maps by rejection.
//!
//! A uniform fixed-point-free involution against the fixed face permutation
//! is a configuration-model draw; conditioned on a connected bipartite gluing
//! of the requested genus, and with a uniform root, the result is uniform
//! over rooted maps because every rooted class has the same number of
//! labelled (involution, root) representatives.
//!
//! Sample `i` of a batch with seed `s` uses `ChaCha8Rng::seed_from_u64(s)`
//! switched to stream `i`, so batches are reproducible under any amount of
//! parallelism.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::enumerate::search::ParityUnionFind;
use crate::enumerate::{rooted_maps, EnumError, Layout, DEFAULT_ORACLE_LIMIT};
use crate::faces::FaceDegreeSequence;
use crate::map::{Dart, RootedMap};

pub const DEFAULT_MAX_ATTEMPTS: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SampleError {
    #[error("no accepted map after {attempts} attempts (acceptance estimate {acceptance:.3e})")]
    MaxAttemptsExceeded {
        attempts: u64,
        accepts: u64,
        acceptance: f64,
    },
    #[error("genus {genus} is impossible for faces {faces}")]
    InfeasibleGenus {
        faces: FaceDegreeSequence,
        genus: usize,
    },
    #[error("face degree sequence is empty")]
    EmptyFaces,
    #[error("no rooted maps with faces {faces} in genus {genus}")]
    NoMaps {
        faces: FaceDegreeSequence,
        genus: usize,
    },
    #[error(transparent)]
    Enum(#[from] EnumError),
}

#[derive(Clone, Debug, Serialize)]
pub struct SampleBatch {
    pub faces: FaceDegreeSequence,
    pub genus: usize,
    pub seed: u64,
    #[serde(skip)]
    pub maps: Vec<RootedMap>,
    pub attempts: u64,
    pub accepts: u64,
}

impl SampleBatch {
    pub fn acceptance_rate(&self) -> f64 {
        if self.attempts == 0 {
            return 1.0;
        }
        self.accepts as f64 / self.attempts as f64
    }
}

/// RNG for sample `index` of a batch seeded with `seed`.
pub fn stream_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

struct Attempt<'a> {
    layout: &'a Layout,
    uf: ParityUnionFind,
    free: Vec<Dart>,
    alpha: Vec<Dart>,
    seen: Vec<bool>,
}

impl<'a> Attempt<'a> {
    fn new(layout: &'a Layout) -> Self {
        Self {
            layout,
            uf: ParityUnionFind::new(layout.face_count()),
            free: Vec::with_capacity(layout.dart_count()),
            alpha: vec![0; layout.dart_count()],
            seen: Vec::new(),
        }
    }

    /// Draws one involution; true iff it is a connected bipartite gluing of
    /// genus `g`. Stops drawing at the first parity conflict.
    fn run<R: Rng>(&mut self, rng: &mut R, g: usize) -> bool {
        let l = self.layout;
        self.uf.reset();
        self.free.clear();
        self.free.extend(0..l.dart_count());
        while let Some(a) = self.free.pop() {
            let i = rng.random_range(0..self.free.len());
            let b = self.free.swap_remove(i);
            if !self
                .uf
                .union(l.face_of(a), l.face_of(b), l.pair_parity(a, b))
            {
                return false;
            }
            self.alpha[a] = b;
            self.alpha[b] = a;
        }
        self.uf.components() == 1 && l.genus_of(&self.alpha, &mut self.seen) == Some(g)
    }
}

fn check_feasible(f: &FaceDegreeSequence, g: usize) -> Result<(), SampleError> {
    if f.is_empty() {
        return Err(SampleError::EmptyFaces);
    }
    // at least one vertex: 2 - 2g + E - F >= 1
    if 2 * g > f.edge_count() - f.face_count() + 1 {
        return Err(SampleError::InfeasibleGenus {
            faces: f.clone(),
            genus: g,
        });
    }
    Ok(())
}

pub fn sample_uniform(
    f: &FaceDegreeSequence,
    g: usize,
    seed: u64,
    count: usize,
) -> Result<SampleBatch, SampleError> {
    sample_uniform_with(f, g, seed, count, DEFAULT_MAX_ATTEMPTS)
}

/// As [`sample_uniform`], giving up on a sample after `max_attempts` draws.
pub fn sample_uniform_with(
    f: &FaceDegreeSequence,
    g: usize,
    seed: u64,
    count: usize,
    max_attempts: u64,
) -> Result<SampleBatch, SampleError> {
    check_feasible(f, g)?;
    let layout = Layout::new(f);
    let results: Vec<Result<(RootedMap, u64), SampleError>> = (0..count as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = stream_rng(seed, i);
            let mut attempt = Attempt::new(&layout);
            for tries in 1..=max_attempts {
                if attempt.run(&mut rng, g) {
                    let root = rng.random_range(0..layout.dart_count());
                    let m = RootedMap::from_parts_unchecked(
                        layout.phi().to_vec(),
                        attempt.alpha.clone(),
                        root,
                    );
                    return Ok((m, tries));
                }
            }
            Err(SampleError::MaxAttemptsExceeded {
                attempts: max_attempts,
                accepts: 0,
                acceptance: 0.0,
            })
        })
        .collect();
    let mut maps = Vec::with_capacity(count);
    let mut attempts = 0;
    for r in results {
        match r {
            Ok((m, tries)) => {
                attempts += tries;
                maps.push(m);
            }
            Err(SampleError::MaxAttemptsExceeded { attempts: a, .. }) => {
                let accepts = maps.len() as u64;
                let total = attempts + a;
                return Err(SampleError::MaxAttemptsExceeded {
                    attempts: total,
                    accepts,
                    acceptance: accepts as f64 / total as f64,
                });
            }
            Err(e) => return Err(e),
        }
    }
    Ok(SampleBatch {
        faces: f.clone(),
        genus: g,
        seed,
        accepts: maps.len() as u64,
        maps,
        attempts,
    })
}

/// Uniform draws from the fully materialised list of rooted classes.
pub fn sample_exact_small(
    f: &FaceDegreeSequence,
    g: usize,
    seed: u64,
    count: usize,
) -> Result<SampleBatch, SampleError> {
    if f.is_empty() {
        return Err(SampleError::EmptyFaces);
    }
    let classes = rooted_maps(f, g, DEFAULT_ORACLE_LIMIT)?;
    if classes.is_empty() {
        return Err(SampleError::NoMaps {
            faces: f.clone(),
            genus: g,
        });
    }
    let maps = (0..count as u64)
        .map(|i| classes[stream_rng(seed, i).random_range(0..classes.len())].clone())
        .collect();
    Ok(SampleBatch {
        faces: f.clone(),
        genus: g,
        seed,
        maps,
        attempts: count as u64,
        accepts: count as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(pairs: &[(usize, usize)]) -> FaceDegreeSequence {
        FaceDegreeSequence::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn single_edge_always() {
        let b = sample_uniform(&f(&[(1, 1)]), 0, 7, 20).unwrap();
        assert!(b
            .maps
            .iter()
            .all(|m| m.is_isomorphic(&RootedMap::single_edge())));
        assert_eq!(b.acceptance_rate(), 1.0);
    }

    #[test]
    fn samples_validate() {
        let faces = f(&[(1, 1), (2, 2)]);
        for g in 0..=1 {
            let b = sample_uniform(&faces, g, 3, 50).unwrap();
            for m in &b.maps {
                assert_eq!(m.face_degree_sequence().unwrap(), faces);
                assert_eq!(m.genus(), g);
                assert!(m.is_bipartite());
            }
        }
    }

    #[test]
    fn impossible_genus() {
        let quad = f(&[(2, 1)]);
        assert!(matches!(
            sample_uniform_with(&quad, 1, 0, 1, 10_000),
            Err(SampleError::MaxAttemptsExceeded { accepts: 0, .. })
        ));
        assert!(matches!(
            sample_uniform(&quad, 2, 0, 1),
            Err(SampleError::InfeasibleGenus { .. })
        ));
    }

    #[test]
    fn deterministic_across_pools() {
        let faces = f(&[(2, 3)]);
        let one = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap();
        let many = rayon::ThreadPoolBuilder::new()
            .num_threads(6)
            .build()
            .unwrap();
        let a = one.install(|| sample_uniform(&faces, 0, 11, 40).unwrap());
        let b = many.install(|| sample_uniform(&faces, 0, 11, 40).unwrap());
        assert_eq!(a.maps, b.maps);
        assert_eq!(a.attempts, b.attempts);
    }

    #[test]
    fn exact_sampler_unique_class() {
        let b = sample_exact_small(&f(&[(1, 2)]), 0, 5, 10).unwrap();
        let first = b.maps[0].canonical_form();
        assert!(b.maps.iter().all(|m| m.canonical_form() == first));
    }
}
