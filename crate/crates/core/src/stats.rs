//! Estimators and exact identity checks linking counts, samples and patterns.
//!
//! Identities are checked in exact rational arithmetic; Monte Carlo
//! quantities are reported as `f64` with standard errors.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use statrs::distribution::{ChiSquared, ContinuousCDF};
use thiserror::Error;

use crate::boundary::{make_pattern, validate_hole_map, HoleMap, PatternKind};
use crate::enumerate::{beta, beta_marked, rooted_maps, EnumError, Search};
use crate::explore::{complement, embed, occ};
use crate::faces::FaceDegreeSequence;
use crate::map::RootedMap;
use crate::sample::{sample_uniform, SampleBatch, SampleError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StatsError {
    #[error("infeasible parameters: {0}")]
    InfeasibleParameters(String),
    #[error(transparent)]
    Enum(#[from] EnumError),
    #[error(transparent)]
    Sample(#[from] SampleError),
}

/// Renders a rational as `num/den`.
pub fn fraction(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn ser_fraction<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&fraction(r))
}

fn ser_fraction_opt<S: Serializer>(r: &Option<BigRational>, s: S) -> Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&fraction(r)),
        None => s.serialize_none(),
    }
}

fn ser_fraction_map<S: Serializer>(
    m: &BTreeMap<usize, BigRational>,
    s: S,
) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let mut map = s.serialize_map(Some(m.len()))?;
    for (k, v) in m {
        map.serialize_entry(&k.to_string(), &fraction(v))?;
    }
    map.end()
}

fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> BigRational {
    BigRational::new(num.into(), den.into())
}

fn big(n: &BigUint) -> BigInt {
    BigInt::from(n.clone())
}

/// Limit face-degree frequencies `(α_j)` and genus-per-edge ratio `θ`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LimitParams {
    #[serde(serialize_with = "ser_fraction_map")]
    pub alpha: BTreeMap<usize, BigRational>,
    #[serde(serialize_with = "ser_fraction")]
    pub theta: BigRational,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Admissibility {
    pub admissible: bool,
    /// `Σ j·α_j`; must equal 1.
    #[serde(serialize_with = "ser_fraction")]
    pub mass: BigRational,
    /// `(1/2) Σ (j-1)·α_j - θ`; must be positive.
    #[serde(serialize_with = "ser_fraction")]
    pub slack: BigRational,
    pub violations: Vec<String>,
}

pub fn check_admissible(params: &LimitParams) -> Admissibility {
    let mut violations = Vec::new();
    let mut mass = BigRational::zero();
    let mut budget = BigRational::zero();
    for (&j, a) in &params.alpha {
        if j == 0 {
            violations.push("alpha index 0".to_string());
            continue;
        }
        if a.is_negative() {
            violations.push(format!("alpha_{j} = {} is negative", fraction(a)));
        }
        mass += a * BigRational::from_integer(BigInt::from(j));
        budget += a * BigRational::from_integer(BigInt::from(j - 1));
    }
    if !mass.is_one() {
        violations.push(format!("sum of j*alpha_j is {}, not 1", fraction(&mass)));
    }
    if params.theta.is_negative() {
        violations.push(format!("theta = {} is negative", fraction(&params.theta)));
    }
    let slack = budget / BigRational::from_integer(BigInt::from(2)) - &params.theta;
    if !slack.is_positive() {
        violations.push(format!("theta leaves no slack ({})", fraction(&slack)));
    }
    Admissibility {
        admissible: violations.is_empty(),
        mass,
        slack,
        violations,
    }
}

/// Plug-in values `α_j = f_j/|f|`, `θ = g/|f|`.
pub fn estimate_params(f: &FaceDegreeSequence, g: usize) -> LimitParams {
    let e = f.edge_count().max(1);
    LimitParams {
        alpha: f.iter().map(|(j, c)| (j, ratio(c, e))).collect(),
        theta: ratio(g, e),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EulerReport {
    /// `Σ_darts 1/deg(origin) = V`.
    pub vertex_sum: bool,
    /// Fraction of darts on faces of degree `2j` is `j f_j / |f|`.
    pub face_fractions: bool,
    /// `(1/2)(1 - 2·V/(2E) - F/E) = (g - 1)/E`.
    pub euler_relation: bool,
}

impl EulerReport {
    pub fn ok(&self) -> bool {
        self.vertex_sum && self.face_fractions && self.euler_relation
    }
}

pub fn euler_identity_check(m: &RootedMap) -> EulerReport {
    let n = m.dart_count();
    let e = m.edge_count();
    let v = m.vertex_count();
    let f = m.face_count();
    let mut sum = BigRational::zero();
    let mut on_degree: BTreeMap<usize, usize> = BTreeMap::new();
    for d in 0..n {
        sum += ratio(1, m.vertex_degree_of(d));
        *on_degree.entry(m.face_degree_of(d)).or_default() += 1;
    }
    let vertex_sum = sum == BigRational::from_integer(BigInt::from(v));
    let face_fractions = match m.face_degree_sequence() {
        None => false,
        Some(fs) => on_degree.iter().all(|(&deg, &count)| {
            let j = deg / 2;
            ratio(count, n) == ratio(j * fs.get(j), fs.edge_count())
        }),
    };
    let half = ratio(1, 2);
    let lhs = half * (BigRational::one() - ratio(2 * v, n) - ratio(f, e));
    let rhs = ratio(BigInt::from(m.genus()) - 1, e);
    EulerReport {
        vertex_sum,
        face_fractions,
        euler_relation: lhs == rhs,
    }
}

/// Per-sample pattern densities `occ(m_j^k, M) / 2E` and their means.
#[derive(Clone, Debug, Serialize)]
pub struct WeightEstimate {
    pub faces: FaceDegreeSequence,
    pub genus: usize,
    pub seed: u64,
    pub samples: usize,
    /// `q_hat[j-1]`: mean density of the one-face pattern.
    pub q_hat: Vec<f64>,
    pub q_stderr: Vec<f64>,
    /// `s_hat[j-1]`: mean density of the two-face pattern.
    pub s_hat: Vec<f64>,
    pub s_stderr: Vec<f64>,
    /// Mean of `E[1/deg(root vertex)]`, i.e. `V/2E`.
    pub d_hat: f64,
    /// `a_hat[j-1]`: mean of `f_j/E`.
    pub a_hat: Vec<f64>,
    /// `(1/2)(1 - 2d - Σ a_j)`, which is `(g - 1)/E` on every finite map.
    pub theta_hat: f64,
    #[serde(skip)]
    pub q_values: Vec<Vec<f64>>,
    #[serde(skip)]
    pub s_values: Vec<Vec<f64>>,
}

/// Sample mean, variance (unbiased), and standard error of the mean.
pub fn moments(xs: &[f64]) -> (f64, f64, f64) {
    let n = xs.len();
    if n == 0 {
        return (0.0, 0.0, 0.0);
    }
    let mean = xs.iter().sum::<f64>() / n as f64;
    if n < 2 {
        return (mean, 0.0, 0.0);
    }
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1) as f64;
    (mean, var, (var / n as f64).sqrt())
}

pub fn density(m0: &HoleMap, m: &RootedMap) -> f64 {
    occ(m0, m) as f64 / m.dart_count() as f64
}

pub fn estimate_weights(batch: &SampleBatch, j_max: usize) -> WeightEstimate {
    let mut q_values = Vec::new();
    let mut s_values = Vec::new();
    let (mut q_hat, mut q_stderr, mut s_hat, mut s_stderr) = (vec![], vec![], vec![], vec![]);
    for j in 1..=j_max {
        let p1 = make_pattern(PatternKind::Single, j);
        let p2 = make_pattern(PatternKind::Double, j);
        let q: Vec<f64> = batch.maps.par_iter().map(|m| density(&p1, m)).collect();
        let s: Vec<f64> = batch.maps.par_iter().map(|m| density(&p2, m)).collect();
        let (qm, _, qe) = moments(&q);
        let (sm, _, se) = moments(&s);
        q_hat.push(qm);
        q_stderr.push(qe);
        s_hat.push(sm);
        s_stderr.push(se);
        q_values.push(q);
        s_values.push(s);
    }
    let count = batch.maps.len().max(1) as f64;
    let d_hat = batch
        .maps
        .iter()
        .map(|m| m.vertex_count() as f64 / m.dart_count() as f64)
        .sum::<f64>()
        / count;
    let e = batch.faces.edge_count().max(1) as f64;
    let a_hat: Vec<f64> = (1..=j_max).map(|j| batch.faces.get(j) as f64 / e).collect();
    let a_all = batch.faces.face_count() as f64 / e;
    WeightEstimate {
        d_hat,
        a_hat,
        theta_hat: 0.5 * (1.0 - 2.0 * d_hat - a_all),
        faces: batch.faces.clone(),
        genus: batch.genus,
        seed: batch.seed,
        samples: batch.maps.len(),
        q_hat,
        q_stderr,
        s_hat,
        s_stderr,
        q_values,
        s_values,
    }
}

/// Exact `E[occ(m0, M)/2E]` for a uniform rooted `M`, averaging over the
/// labelled gluings (each rooted class has the same number of them).
pub fn exact_density(m0: &HoleMap, f: &FaceDegreeSequence, g: usize) -> Option<BigRational> {
    if f.is_empty() || !f.admits_genus(g) {
        return None;
    }
    let (acc, _) = Search::new(f, Some(g)).fold(
        || (0u64, 0u64),
        |acc, leaf| {
            let m = RootedMap::from_parts_unchecked(leaf.phi.to_vec(), leaf.alpha.to_vec(), 0);
            acc.0 += occ(m0, &m) as u64;
            acc.1 += 1;
        },
        |a, b| (a.0 + b.0, a.1 + b.1),
    );
    (acc.1 > 0).then(|| ratio(acc.0, acc.1 * 2 * f.edge_count() as u64))
}

fn beta_count(f: Option<FaceDegreeSequence>, g: usize) -> BigUint {
    f.map_or_else(BigUint::zero, |f| beta(&f, g).count)
}

/// One side-by-side comparison of an exact identity.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityCase {
    pub label: String,
    #[serde(serialize_with = "ser_fraction")]
    pub lhs: BigRational,
    #[serde(serialize_with = "ser_fraction")]
    pub rhs: BigRational,
    pub equal: bool,
}

impl IdentityCase {
    fn new(label: impl Into<String>, lhs: BigRational, rhs: BigRational) -> Self {
        let equal = lhs == rhs;
        Self {
            label: label.into(),
            lhs,
            rhs,
            equal,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PatternIdentityReport {
    pub faces: FaceDegreeSequence,
    pub genus: usize,
    pub j: usize,
    /// `Σ occ(m_j^1)/(2|f|β_g(f))` against `β_g(f - 1_j)/β_g(f)`.
    pub first: IdentityCase,
    /// `Σ occ(m_j^2)/(2|f|β_g(f))` against `β_g(f - 2·1_j)/β_g(f)`.
    pub second: IdentityCase,
    /// `β^{(1)}_g(f - 2·1_j)/β_g(f)` against the same right-hand side.
    pub second_closing: IdentityCase,
}

impl PatternIdentityReport {
    pub fn ok(&self) -> bool {
        self.first.equal && self.second.equal && self.second_closing.equal
    }
}

/// Checks both pattern-density identities by full enumeration of `B_g(f)`.
pub fn verify_pattern_identity(
    f: &FaceDegreeSequence,
    g: usize,
    j: usize,
    limit: usize,
) -> Result<PatternIdentityReport, StatsError> {
    if j == 0 {
        return Err(StatsError::InfeasibleParameters(
            "pattern index must be positive".into(),
        ));
    }
    let maps = rooted_maps(f, g, limit)?;
    if maps.is_empty() {
        return Err(StatsError::InfeasibleParameters(format!(
            "no maps with faces {f} in genus {g}"
        )));
    }
    let b = BigUint::from(maps.len());
    debug_assert_eq!(b, beta(f, g).count);
    let two_e = 2 * f.edge_count();
    let p1 = make_pattern(PatternKind::Single, j);
    let p2 = make_pattern(PatternKind::Double, j);
    let (o1, o2) = maps
        .par_iter()
        .map(|m| (occ(&p1, m), occ(&p2, m)))
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    let den = BigInt::from(two_e) * big(&b);
    let minus1 = f.checked_minus(&FaceDegreeSequence::indicator(j));
    let minus2 = f.checked_minus(&FaceDegreeSequence::from_pairs([(j, 2)]));
    let closing = match &minus2 {
        Some(v) => beta_marked(&[1], v, g)?.count,
        None => BigUint::zero(),
    };
    let rhs2 = ratio(big(&beta_count(minus2, g)), big(&b));
    Ok(PatternIdentityReport {
        faces: f.clone(),
        genus: g,
        j,
        first: IdentityCase::new(
            format!("m{j}^1"),
            ratio(o1, den.clone()),
            ratio(big(&beta_count(minus1, g)), big(&b)),
        ),
        second: IdentityCase::new(format!("m{j}^2"), ratio(o2, den), rhs2.clone()),
        second_closing: IdentityCase::new(
            format!("closing m{j}^2"),
            ratio(big(&closing), big(&b)),
            rhs2,
        ),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClosingCase {
    pub faces: FaceDegreeSequence,
    pub genus: usize,
    pub beta: String,
    pub one_mark: String,
    pub two_marks: String,
    /// `β^{(1,1)}_g(v) / β_g(v)` when `β_g(v) > 0`.
    #[serde(serialize_with = "ser_fraction_opt")]
    pub ratio: Option<BigRational>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClosingReport {
    pub cases: Vec<ClosingCase>,
    /// Every case has `β^{(1)}_g(v) = β_g(v)`.
    pub one_mark_ok: bool,
    /// Measured two-mark constant per edge count of `v`, when it is unique.
    pub constants: BTreeMap<usize, String>,
    /// Edge counts where the ratio differs between sequences.
    pub inconsistent: Vec<usize>,
    /// Constant in terms of the edge count `n` of the closed map with two
    /// digons removed, `c = 2n - 2`, evaluated at `n = |v| + 2`.
    pub closed_map_expression: BTreeMap<usize, usize>,
}

impl ClosingReport {
    pub fn ok(&self) -> bool {
        self.one_mark_ok && self.inconsistent.is_empty()
    }
}

/// Closing identities for every `v` with `|v| ≤ max_edges` (and the empty
/// sequence) in every feasible genus.
pub fn closing_report(max_edges: usize) -> Result<ClosingReport, StatsError> {
    let mut seqs = vec![FaceDegreeSequence::empty()];
    seqs.extend(FaceDegreeSequence::all_up_to(max_edges));
    let mut cases = Vec::new();
    let mut one_mark_ok = true;
    let mut by_size: BTreeMap<usize, Vec<BigRational>> = BTreeMap::new();
    for v in seqs {
        let top = v
            .plus(&FaceDegreeSequence::from_pairs([(1, 2)]))
            .max_genus();
        for g in 0..=top {
            let b = beta(&v, g).count;
            let one = beta_marked(&[1], &v, g)?.count;
            let two = beta_marked(&[1, 1], &v, g)?.count;
            one_mark_ok &= one == b;
            let r = (!b.is_zero()).then(|| ratio(big(&two), big(&b)));
            if let Some(r) = &r {
                by_size.entry(v.edge_count()).or_default().push(r.clone());
            }
            cases.push(ClosingCase {
                faces: v.clone(),
                genus: g,
                beta: b.to_string(),
                one_mark: one.to_string(),
                two_marks: two.to_string(),
                ratio: r,
            });
        }
    }
    let mut constants = BTreeMap::new();
    let mut inconsistent = Vec::new();
    for (size, rs) in &by_size {
        if rs.iter().all(|r| r == &rs[0]) {
            constants.insert(*size, fraction(&rs[0]));
        } else {
            inconsistent.push(*size);
        }
    }
    let closed_map_expression = by_size.keys().map(|&n| (n, 2 * (n + 2) - 2)).collect();
    Ok(ClosingReport {
        cases,
        one_mark_ok,
        constants,
        inconsistent,
        closed_map_expression,
    })
}

/// Every map with a hole with at most `max_internal` internal faces and at
/// most `max_edges` edges, one per rooted class, sorted by canonical form.
pub fn hole_map_corpus(max_internal: usize, max_edges: usize) -> Vec<HoleMap> {
    let mut out = BTreeMap::new();
    out.insert(HoleMap::trivial().canonical_form(), HoleMap::trivial());
    for f in FaceDegreeSequence::all_up_to(max_edges) {
        if f.face_count() < 2 || f.face_count() > max_internal + 1 {
            continue;
        }
        for m in rooted_maps(&f, 0, max_edges).expect("within limit") {
            for face in m.faces() {
                if let Ok(h) = validate_hole_map(m.clone(), face[0]) {
                    out.entry(h.canonical_form()).or_insert(h);
                }
            }
        }
    }
    out.into_values().collect()
}

/// `(p, v)` of a map with a hole.
pub fn hole_signature(h: &HoleMap) -> (usize, FaceDegreeSequence) {
    (h.half_perimeter(), h.internal_degrees())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MarkovCase {
    pub first: usize,
    pub second: usize,
    pub p: (usize, usize),
    pub v: (FaceDegreeSequence, FaceDegreeSequence),
    /// Number of `(M, e, ē)` with both inclusions holding face-disjointly.
    pub joint: String,
    /// `β^{(p,p')}_g(f - v - v')`.
    pub marked: String,
    #[serde(serialize_with = "ser_fraction")]
    pub probability: BigRational,
    pub equal: bool,
    /// Either pattern is the trivial map, where the two roots may share an
    /// edge and the count is not a polygon-map count.
    pub degenerate: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MarkovReport {
    pub faces: FaceDegreeSequence,
    pub genus: usize,
    pub cases: Vec<MarkovCase>,
    /// Signature groups whose probabilities differ between patterns.
    pub non_flat: Vec<String>,
}

impl MarkovReport {
    pub fn ok(&self) -> bool {
        self.non_flat.is_empty() && self.cases.iter().all(|c| c.equal || c.degenerate)
    }
}

/// Face-disjoint joint inclusion counts for `(patterns[a], patterns[b])` over
/// all `(M, e, ē)`, compared with marked-polygon counts, plus flatness across
/// patterns with equal signatures.
pub fn markov_flatness_check(
    f: &FaceDegreeSequence,
    g: usize,
    patterns: &[HoleMap],
    pairs: &[(usize, usize)],
    limit: usize,
) -> Result<MarkovReport, StatsError> {
    let maps = rooted_maps(f, g, limit)?;
    if maps.is_empty() {
        return Err(StatsError::InfeasibleParameters(format!(
            "no maps with faces {f} in genus {g}"
        )));
    }
    let two_e = 2 * f.edge_count();
    let b = BigUint::from(maps.len());
    // per map: per pattern, per dart, the covered faces if included there
    type Hits = Vec<Vec<Option<Vec<usize>>>>;
    let hits: Vec<Hits> = maps
        .par_iter()
        .map(|m| {
            patterns
                .iter()
                .map(|p| {
                    (0..m.dart_count())
                        .map(|e| {
                            complement(p, m, e)?;
                            let emb = embed(p, m, e)?;
                            Some(emb.faces(m).into_iter().collect())
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let mut cases = Vec::new();
    for &(a, c) in pairs {
        let mut joint = 0u64;
        for (m, h) in maps.iter().zip(&hits) {
            let Some(fa) = &h[a][m.root()] else { continue };
            for fc in h[c].iter().flatten() {
                if fa.iter().all(|x| !fc.contains(x)) {
                    joint += 1;
                }
            }
        }
        let (pa, va) = hole_signature(&patterns[a]);
        let (pc, vc) = hole_signature(&patterns[c]);
        let marked = match f.checked_minus(&va).and_then(|r| r.checked_minus(&vc)) {
            Some(rest) => beta_marked(&[pa, pc], &rest, g)?.count,
            None => BigUint::zero(),
        };
        let degenerate = patterns[a].is_trivial() || patterns[c].is_trivial();
        cases.push(MarkovCase {
            first: a,
            second: c,
            p: (pa, pc),
            v: (va, vc),
            joint: joint.to_string(),
            marked: marked.to_string(),
            probability: ratio(joint, BigInt::from(two_e) * big(&b)),
            equal: BigUint::from(joint) == marked,
            degenerate,
        });
    }
    let mut groups: BTreeMap<String, Vec<&BigRational>> = BTreeMap::new();
    for c in &cases {
        let key = format!("p={},{} v={};{}", c.p.0, c.p.1, c.v.0, c.v.1);
        groups.entry(key).or_default().push(&c.probability);
    }
    let non_flat = groups
        .into_iter()
        .filter(|(_, ps)| ps.iter().any(|p| p != &ps[0]))
        .map(|(k, _)| k)
        .collect();
    Ok(MarkovReport {
        faces: f.clone(),
        genus: g,
        cases,
        non_flat,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ConcentrationPoint {
    pub faces: FaceDegreeSequence,
    pub genus: usize,
    pub edges: usize,
    pub samples: usize,
    pub mean: f64,
    pub variance: f64,
    pub stderr: f64,
    #[serde(serialize_with = "ser_fraction_opt")]
    pub exact_mean: Option<BigRational>,
    /// `|mean - exact| ≤ 3·stderr` when the exact mean is known.
    pub within_three_se: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConcentrationReport {
    pub points: Vec<ConcentrationPoint>,
    /// Variance at the first point over variance at the last.
    pub variance_ratio: Option<f64>,
    /// Whether the variance decreased from the first point to the last.
    pub decreasing: Option<bool>,
}

/// Empirical mean and variance of `occ(m0, M)/2E` along a scaling sequence,
/// with exact means wherever `|f| ≤ exact_limit`.
pub fn concentration_report(
    scaling: &[(FaceDegreeSequence, usize)],
    m0: &HoleMap,
    seed: u64,
    samples: usize,
    exact_limit: usize,
) -> Result<ConcentrationReport, StatsError> {
    let mut points = Vec::new();
    for (f, g) in scaling {
        let batch = sample_uniform(f, *g, seed, samples)?;
        let xs: Vec<f64> = batch.maps.par_iter().map(|m| density(m0, m)).collect();
        let (mean, variance, stderr) = moments(&xs);
        let exact_mean = (f.edge_count() <= exact_limit)
            .then(|| exact_density(m0, f, *g))
            .flatten();
        let within_three_se = exact_mean.as_ref().map(|x| {
            let x = x.to_f64().unwrap_or(f64::NAN);
            (mean - x).abs() <= 3.0 * stderr + 1e-12
        });
        points.push(ConcentrationPoint {
            faces: f.clone(),
            genus: *g,
            edges: f.edge_count(),
            samples,
            mean,
            variance,
            stderr,
            exact_mean,
            within_three_se,
        });
    }
    let (variance_ratio, decreasing) = match (points.first(), points.last()) {
        (Some(a), Some(b)) if points.len() > 1 => (
            (b.variance > 0.0).then(|| a.variance / b.variance),
            Some(b.variance < a.variance),
        ),
        _ => (None, None),
    };
    Ok(ConcentrationReport {
        points,
        variance_ratio,
        decreasing,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ChiSquareResult {
    pub statistic: f64,
    pub degrees_of_freedom: usize,
    pub p_value: f64,
}

/// Pearson's test of observed counts against the uniform distribution.
pub fn chi_square_uniform(observed: &[u64]) -> ChiSquareResult {
    let k = observed.len();
    let n: u64 = observed.iter().sum();
    let expected = n as f64 / k as f64;
    let statistic = observed
        .iter()
        .map(|&o| (o as f64 - expected).powi(2) / expected)
        .sum();
    let df = k.saturating_sub(1);
    let p_value = if df == 0 {
        1.0
    } else {
        1.0 - ChiSquared::new(df as f64)
            .expect("positive dof")
            .cdf(statistic)
    };
    ChiSquareResult {
        statistic,
        degrees_of_freedom: df,
        p_value,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(pairs: &[(usize, usize)]) -> FaceDegreeSequence {
        FaceDegreeSequence::from_pairs(pairs.iter().copied())
    }

    fn params(alpha: &[(usize, i64, i64)], theta: (i64, i64)) -> LimitParams {
        LimitParams {
            alpha: alpha.iter().map(|&(j, n, d)| (j, ratio(n, d))).collect(),
            theta: ratio(theta.0, theta.1),
        }
    }

    #[test]
    fn admissibility_examples() {
        let a = check_admissible(&params(&[(2, 1, 2)], (1, 8)));
        assert!(a.admissible);
        assert_eq!(fraction(&a.slack), "1/8");
        let b = check_admissible(&params(&[(1, 1, 1)], (0, 1)));
        assert!(!b.admissible);
        assert!(b.slack.is_zero());
        let c = check_admissible(&params(&[(1, 1, 2)], (0, 1)));
        assert!(!c.admissible);
        assert_eq!(fraction(&c.mass), "1/2");
    }

    #[test]
    fn plug_in_params() {
        let p = estimate_params(&f(&[(2, 5)]), 0);
        assert_eq!(fraction(&p.alpha[&2]), "1/2");
        assert!(p.theta.is_zero());
        let q = estimate_params(&f(&[(1, 2), (2, 1)]), 1);
        assert_eq!(fraction(&q.alpha[&1]), "1/2");
        assert_eq!(fraction(&q.alpha[&2]), "1/4");
        assert_eq!(fraction(&q.theta), "1/4");
    }

    #[test]
    fn euler_examples() {
        assert!(euler_identity_check(&RootedMap::single_edge()).ok());
        assert!(euler_identity_check(&make_pattern(PatternKind::Single, 1).into_map()).ok());
        assert!(euler_identity_check(&make_pattern(PatternKind::Double, 3).into_map()).ok());
    }

    #[test]
    fn pattern_identity_examples() {
        for (faces, j) in [(f(&[(1, 3)]), 1), (f(&[(2, 2)]), 2), (f(&[(2, 2)]), 1)] {
            let r = verify_pattern_identity(&faces, 0, j, 5).unwrap();
            assert!(r.ok(), "{r:?}");
        }
        let r = verify_pattern_identity(&f(&[(2, 2)]), 0, 1, 5).unwrap();
        assert!(r.first.lhs.is_zero() && r.second.rhs.is_zero());
    }

    #[test]
    fn weights_on_digons() {
        let digon = make_pattern(PatternKind::Single, 1).into_map();
        let batch = SampleBatch {
            faces: f(&[(1, 2)]),
            genus: 0,
            seed: 0,
            maps: vec![digon; 3],
            attempts: 3,
            accepts: 3,
        };
        let w = estimate_weights(&batch, 1);
        assert_eq!(w.q_hat, vec![1.0]);
        assert_eq!(w.theta_hat, -0.5);
        let edge = SampleBatch {
            faces: f(&[(1, 1)]),
            maps: vec![RootedMap::single_edge(); 2],
            ..batch
        };
        // the lone face is a digon, so the one-face pattern closes onto it
        assert_eq!(estimate_weights(&edge, 1).q_hat, vec![1.0]);
    }

    #[test]
    fn exact_density_matches_identity() {
        let p = make_pattern(PatternKind::Single, 2);
        let d = exact_density(&p, &f(&[(2, 2)]), 0).unwrap();
        let rhs = ratio(
            big(&beta(&f(&[(2, 1)]), 0).count),
            big(&beta(&f(&[(2, 2)]), 0).count),
        );
        assert_eq!(d, rhs);
    }

    #[test]
    fn chi_square_sanity() {
        let r = chi_square_uniform(&[500, 500]);
        assert_eq!(r.statistic, 0.0);
        assert!((r.p_value - 1.0).abs() < 1e-12);
        let r = chi_square_uniform(&[900, 100]);
        assert!(r.p_value < 1e-6);
    }

    #[test]
    fn closing_small() {
        let r = closing_report(2).unwrap();
        assert!(r.ok(), "{r:?}");
        assert_eq!(r.constants[&0], "2/1");
    }
}
