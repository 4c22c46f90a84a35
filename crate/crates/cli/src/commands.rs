//! Subcommand implementations. Each writes its primary output to `out` and
//! reports whether every check it ran passed.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use genusmap_core::enumerate::{beta_oracle, Cache, CacheKey, DEFAULT_ORACLE_LIMIT};
use genusmap_core::explore::{local_distance, occ, peel_sequence, PeelAction};
use genusmap_core::format::{parse_map, write_map};
use genusmap_core::sample::{sample_exact_small, sample_uniform};
use genusmap_core::stats::{
    check_admissible, closing_report, concentration_report, estimate_params, estimate_weights,
    euler_identity_check, hole_map_corpus, markov_flatness_check, verify_pattern_identity,
    StatsError,
};
use genusmap_core::{beta, beta_marked, EnumerationResult, FaceDegreeSequence, RootedMap};
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::PatternArg;
use crate::manifest::{manifest_path, RunManifest};

pub const CACHE_ENV: &str = "GENUSMAP_CACHE";

/// Outcome of a subcommand that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Passed,
    Failed,
}

pub struct RunContext<'a> {
    pub out: &'a mut dyn Write,
    pub manifest: RunManifest,
    pub start: Instant,
}

impl RunContext<'_> {
    pub fn write_manifest(&mut self, path: &Path) -> Result<()> {
        self.manifest.wall_seconds = self.start.elapsed().as_secs_f64();
        self.manifest.write(path)
    }
}

fn emit(out: &mut dyn Write, value: &impl Serialize) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn big_number(n: &BigUint) -> Value {
    Value::Number(serde_json::Number::from_str(&n.to_string()).expect("decimal integer"))
}

fn read_map(path: &Path) -> Result<RootedMap> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_map(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn enumerate(
    ctx: &mut RunContext,
    faces: &FaceDegreeSequence,
    genus: usize,
    boundary: Option<&[usize]>,
    oracle: bool,
) -> Result<Status> {
    let cache_path = std::env::var_os(CACHE_ENV).map(PathBuf::from);
    let key = CacheKey::new(faces, genus, boundary);
    let mut cache = match &cache_path {
        Some(p) if !oracle => {
            Some(Cache::open(p).with_context(|| format!("opening cache {}", p.display()))?)
        }
        _ => None,
    };
    let cached = cache.as_ref().and_then(|c| c.get(&key)).cloned();
    let (result, hit) = match cached {
        Some(count) => (
            EnumerationResult {
                count,
                faces: faces.clone(),
                genus,
                boundary: boundary.map(<[usize]>::to_vec),
                infeasible: false,
                nodes: 0,
                seconds: 0.0,
            },
            true,
        ),
        None => {
            let r = match (boundary, oracle) {
                (Some(p), false) => beta_marked(p, faces, genus)?,
                (None, false) => beta(faces, genus),
                (None, true) => beta_oracle(faces, genus, DEFAULT_ORACLE_LIMIT)?,
                (Some(_), true) => bail!("--oracle does not support --boundary"),
            };
            if let Some(c) = cache.as_mut() {
                c.insert(key, r.count.clone());
                c.flush()?;
            }
            (r, false)
        }
    };
    let value = json!({
        "count": big_number(&result.count),
        "faces": result.faces,
        "genus": result.genus,
        "boundary": result.boundary,
        "infeasible": result.infeasible,
        "cached": hit,
        "nodes": result.nodes,
        "seconds": result.seconds,
    });
    emit(ctx.out, &value)?;
    Ok(Status::Passed)
}

pub fn sample(
    ctx: &mut RunContext,
    faces: &FaceDegreeSequence,
    genus: usize,
    seed: u64,
    count: usize,
    dir: &Path,
    exact: bool,
) -> Result<Status> {
    let batch = if exact {
        sample_exact_small(faces, genus, seed, count)?
    } else {
        sample_uniform(faces, genus, seed, count)?
    };
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let width = count.saturating_sub(1).to_string().len().max(5);
    let mut files = Vec::new();
    for (i, m) in batch.maps.iter().enumerate() {
        let name = format!("sample_{i:0width$}.map");
        let path = dir.join(&name);
        fs::write(&path, write_map(m)).with_context(|| format!("writing {}", path.display()))?;
        ctx.manifest.output(&path)?;
        files.push(name);
    }
    ctx.manifest.parameters["acceptance_rate"] = json!(batch.acceptance_rate());
    ctx.manifest.parameters["attempts"] = json!(batch.attempts);
    ctx.write_manifest(&manifest_path(dir))?;
    emit(
        ctx.out,
        &json!({
            "faces": batch.faces,
            "genus": batch.genus,
            "seed": batch.seed,
            "count": batch.maps.len(),
            "attempts": batch.attempts,
            "accepts": batch.accepts,
            "acceptance_rate": batch.acceptance_rate(),
            "files": files,
        }),
    )?;
    Ok(Status::Passed)
}

pub fn occ_cmd(ctx: &mut RunContext, pattern: &PatternArg, map: &Path) -> Result<Status> {
    let m0 = pattern.load()?;
    if let PatternArg::File(p) = pattern {
        ctx.manifest.input(p)?;
    }
    let host = read_map(map)?;
    ctx.manifest.input(map)?;
    let n = occ(&m0, &host);
    let darts = host.dart_count();
    emit(
        ctx.out,
        &json!({
            "pattern": pattern.label(),
            "occ": n,
            "darts": darts,
            "density": format!("{}/{}", n, darts),
        }),
    )?;
    Ok(Status::Passed)
}

pub fn dloc(ctx: &mut RunContext, a: &Path, b: &Path) -> Result<Status> {
    let ma = read_map(a)?;
    let mb = read_map(b)?;
    ctx.manifest.input(a)?;
    ctx.manifest.input(b)?;
    emit(
        ctx.out,
        &json!({ "distance": local_distance(&ma, &mb).to_string() }),
    )?;
    Ok(Status::Passed)
}

pub fn peel(ctx: &mut RunContext, map: &Path, trace: Option<&Path>) -> Result<Status> {
    let m = read_map(map)?;
    ctx.manifest.input(map)?;
    let seq = peel_sequence(&m);
    let mut lines = String::new();
    for r in seq.records() {
        lines.push_str(&serde_json::to_string(&r)?);
        lines.push('\n');
    }
    let reveals = seq
        .steps
        .iter()
        .filter(|s| matches!(s.action, PeelAction::Reveal { .. }))
        .count();
    let recovered = seq.result().is_isomorphic(&m);
    match trace {
        Some(path) => {
            fs::write(path, &lines).with_context(|| format!("writing {}", path.display()))?;
            ctx.manifest.output(path)?;
            emit(
                ctx.out,
                &json!({
                    "steps": seq.steps.len(),
                    "reveals": reveals,
                    "glues": seq.steps.len() - reveals,
                    "recovered": recovered,
                }),
            )?;
        }
        None => ctx.out.write_all(lines.as_bytes())?,
    }
    Ok(if recovered {
        Status::Passed
    } else {
        Status::Failed
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Closing,
    Pattern,
    Markov,
    Euler,
}

/// Every `(f, g)` with `1 ≤ |f| ≤ max_edges` and at least one map.
fn populated(max_edges: usize) -> Vec<(FaceDegreeSequence, usize)> {
    let mut out = Vec::new();
    for f in FaceDegreeSequence::all_up_to(max_edges) {
        for g in 0..=f.max_genus() {
            if beta(&f, g).count > BigUint::ZERO {
                out.push((f.clone(), g));
            }
        }
    }
    out
}

pub fn verify(
    ctx: &mut RunContext,
    suite: Suite,
    max_edges: usize,
    seed: u64,
    samples: usize,
) -> Result<Status> {
    let limit = max_edges.max(DEFAULT_ORACLE_LIMIT);
    let (report, failures): (Value, Vec<Value>) = match suite {
        Suite::Closing => {
            let r = closing_report(max_edges)?;
            let mut failures = Vec::new();
            for c in &r.cases {
                if c.one_mark != c.beta {
                    failures.push(serde_json::to_value(c)?);
                }
            }
            for n in &r.inconsistent {
                failures.push(
                    json!({ "edges": n, "reason": "two-mark ratio differs across sequences" }),
                );
            }
            (serde_json::to_value(&r)?, failures)
        }
        Suite::Pattern => {
            let mut reports = Vec::new();
            let mut failures = Vec::new();
            for (f, g) in populated(max_edges) {
                for j in 1..=f.max_half_degree() + 1 {
                    let r = verify_pattern_identity(&f, g, j, limit)?;
                    if !r.ok() {
                        failures.push(serde_json::to_value(&r)?);
                    }
                    reports.push(r);
                }
            }
            (json!({ "cases": reports }), failures)
        }
        Suite::Markov => {
            let corpus = hole_map_corpus(2, max_edges);
            let mut reports = Vec::new();
            let mut failures = Vec::new();
            for (f, g) in populated(max_edges) {
                let fits = |a: usize, b: usize| {
                    f.checked_minus(&corpus[a].internal_degrees())
                        .and_then(|r| r.checked_minus(&corpus[b].internal_degrees()))
                        .is_some()
                };
                let pairs: Vec<(usize, usize)> = (0..corpus.len())
                    .flat_map(|a| (0..corpus.len()).map(move |b| (a, b)))
                    .filter(|&(a, b)| fits(a, b))
                    .collect();
                let r = markov_flatness_check(&f, g, &corpus, &pairs, limit)?;
                for c in &r.cases {
                    if !c.equal && !c.degenerate {
                        failures.push(json!({ "faces": f, "genus": g, "case": c }));
                    }
                }
                for k in &r.non_flat {
                    failures.push(json!({ "faces": f, "genus": g, "non_flat": k }));
                }
                reports.push(r);
            }
            (
                json!({ "corpus_size": corpus.len(), "reports": reports }),
                failures,
            )
        }
        Suite::Euler => {
            let mut points = Vec::new();
            let mut failures = Vec::new();
            for (f, g) in populated(max_edges) {
                let batch = sample_uniform(&f, g, seed, samples)?;
                let bad: Vec<usize> = batch
                    .maps
                    .iter()
                    .enumerate()
                    .filter(|(_, m)| !euler_identity_check(m).ok())
                    .map(|(i, _)| i)
                    .collect();
                if !bad.is_empty() {
                    failures.push(json!({ "faces": f, "genus": g, "samples": bad }));
                }
                points.push(json!({ "faces": f, "genus": g, "samples": batch.maps.len(), "passed": bad.is_empty() }));
            }
            (json!({ "seed": seed, "points": points }), failures)
        }
    };
    let ok = failures.is_empty();
    emit(
        ctx.out,
        &json!({ "suite": format!("{suite:?}").to_lowercase(), "ok": ok, "report": report }),
    )?;
    if !ok {
        eprintln!("{} failing case(s):", failures.len());
        for f in &failures {
            eprintln!("{}", serde_json::to_string(f)?);
        }
    }
    Ok(if ok { Status::Passed } else { Status::Failed })
}

pub fn estimate(
    ctx: &mut RunContext,
    faces: &FaceDegreeSequence,
    genus: usize,
    seed: u64,
    count: usize,
    j_max: Option<usize>,
) -> Result<Status> {
    let params = estimate_params(faces, genus);
    let admissibility = check_admissible(&params);
    // sampling is skipped when the bipartite genus budget rules out every map
    let (weights, acceptance) = if faces.admits_genus(genus) {
        let batch = sample_uniform(faces, genus, seed, count)?;
        let w = estimate_weights(&batch, j_max.unwrap_or(faces.max_half_degree()));
        (Some(w), Some(batch.acceptance_rate()))
    } else {
        (None, None)
    };
    emit(
        ctx.out,
        &json!({
            "params": params,
            "admissibility": admissibility,
            "acceptance_rate": acceptance,
            "weights": weights,
        }),
    )?;
    Ok(Status::Passed)
}

#[allow(clippy::too_many_arguments)]
pub fn concentration(
    ctx: &mut RunContext,
    pattern: &PatternArg,
    base: &FaceDegreeSequence,
    genus: usize,
    scale: &[usize],
    seed: u64,
    samples: usize,
    exact_limit: usize,
) -> Result<Status> {
    let m0 = pattern.load()?;
    let points: Vec<(FaceDegreeSequence, usize)> =
        scale.iter().map(|&n| (base.scaled(n), genus)).collect();
    let report = match concentration_report(&points, &m0, seed, samples, exact_limit) {
        Ok(r) => r,
        Err(StatsError::Sample(e)) => bail!("sampling failed: {e}"),
        Err(e) => return Err(e.into()),
    };
    writeln!(
        ctx.out,
        "n,edges,mean,variance,stderr,exact_mean,within_3se"
    )?;
    for (n, p) in scale.iter().zip(&report.points) {
        let exact = p
            .exact_mean
            .as_ref()
            .map_or(String::new(), |x| format!("{}/{}", x.numer(), x.denom()));
        let within = p.within_three_se.map_or(String::new(), |b| b.to_string());
        writeln!(
            ctx.out,
            "{n},{},{:.10},{:.10},{:.10},{exact},{within}",
            p.edges, p.mean, p.variance, p.stderr
        )?;
    }
    if report.decreasing == Some(false) {
        eprintln!("warning: variance did not decrease from the first point to the last");
    }
    let bad_mean = report
        .points
        .iter()
        .any(|p| p.within_three_se == Some(false));
    if bad_mean {
        eprintln!("warning: some mean lies more than 3 standard errors from the exact mean");
    }
    Ok(Status::Passed)
}
