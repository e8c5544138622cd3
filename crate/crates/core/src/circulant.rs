//! Classification of 4-regular circulants `C_n(s, t)` into the families
//! `I_1, ..., I_4` and instance-by-instance verification of the predicted
//! homotopy types.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::analysis::{overall_verdict, ComponentReport, Prediction, Verdict};
use crate::collapse::{paper_schedule_pairs, CollapsePair};
use crate::complex::neighborhood_complex;
use crate::graph::Graph;
use crate::homology::HomologyError;
use crate::simplex::Simplex;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ParamError {
    #[error("n = {0} is below 5")]
    TooFewVertices(usize),
    #[error("generator {generator} is not a nonzero residue mod {n}")]
    GeneratorOutOfRange { n: usize, generator: usize },
    #[error("generators coincide after normalization")]
    EqualGenerators,
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
}

/// Normalized parameters: `5 <= n` and `1 <= s < t <= n/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CirculantParams {
    pub n: usize,
    pub s: usize,
    pub t: usize,
}

impl CirculantParams {
    /// Replaces a generator `g > n/2` by `n - g` and orders the pair, using
    /// `C_n(s, t) = C_n(n - s, t) = C_n(t, s)`.
    pub fn normalize(n: usize, s: usize, t: usize) -> Result<Self, ParamError> {
        if n < 5 {
            return Err(ParamError::TooFewVertices(n));
        }
        let fold = |g: usize| {
            if g == 0 || g >= n {
                Err(ParamError::GeneratorOutOfRange { n, generator: g })
            } else {
                Ok(g.min(n - g))
            }
        };
        let (a, b) = (fold(s)?, fold(t)?);
        if a == b {
            return Err(ParamError::EqualGenerators);
        }
        Ok(Self {
            n,
            s: a.min(b),
            t: a.max(b),
        })
    }

    pub fn graph(&self) -> Graph {
        Graph::circulant(self.n, &[self.s, self.t]).expect("normalized generators are in range")
    }

    /// All normalized parameter pairs for one `n`, ordered by `(s, t)`.
    pub fn all_for(n: usize) -> Vec<Self> {
        (1..=n / 2)
            .flat_map(|s| (s + 1..=n / 2).map(move |t| Self { n, s, t }))
            .filter(|_| n >= 5)
            .collect()
    }
}

impl fmt::Display for CirculantParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C_{}({},{})", self.n, self.s, self.t)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseTag {
    I1A,
    I1B,
    I2A,
    I2B,
    I2C,
    I3A,
    I3B,
    I3C,
    I3D,
    I4A,
    I4B,
    I4C,
}

impl CaseTag {
    pub fn name(self) -> &'static str {
        match self {
            CaseTag::I1A => "I1A",
            CaseTag::I1B => "I1B",
            CaseTag::I2A => "I2A",
            CaseTag::I2B => "I2B",
            CaseTag::I2C => "I2C",
            CaseTag::I3A => "I3A",
            CaseTag::I3B => "I3B",
            CaseTag::I3C => "I3C",
            CaseTag::I3D => "I3D",
            CaseTag::I4A => "I4A",
            CaseTag::I4B => "I4B",
            CaseTag::I4C => "I4C",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Family and sub-case of a parameter set, with the equality that placed
/// it there.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TheoremCase {
    pub tag: CaseTag,
    pub witness: &'static str,
    /// The graph is 3-regular (`2t = n`).
    pub three_regular: bool,
    /// Why the statement for this family does not cover the instance.
    pub outside_hypotheses: Option<&'static str>,
}

/// Classifies `C_n(s, t)`; inputs are normalized first. Families are tested
/// in order, each one excluding the earlier ones.
pub fn case_of(n: usize, s: usize, t: usize) -> Result<TheoremCase, ParamError> {
    let p = CirculantParams::normalize(n, s, t)?;
    Ok(classify(p))
}

pub fn classify(p: CirculantParams) -> TheoremCase {
    let CirculantParams { n, s, t } = p;
    let case = |tag, witness| TheoremCase {
        tag,
        witness,
        three_regular: 2 * t == n,
        // the 3-regular statement excludes K_4, and C_{4s}(s, 2s) is copies of it
        outside_hypotheses: (n == 4 * s && t == 2 * s).then_some("graph components are K4"),
    };
    if 2 * s == n || 2 * t == n {
        return case(CaseTag::I1A, if 2 * s == n { "2s = n" } else { "2t = n" });
    }
    if 2 * (s + t) == n {
        return case(CaseTag::I1B, "2(s+t) = n");
    }
    if t == 3 * s {
        debug_assert!(n != 8 * s, "n = 8s with t = 3s gives 2(s+t) = n");
        return match n {
            _ if n == 10 * s => case(CaseTag::I2A, "3s = t, n = 10s"),
            _ if n == 12 * s => case(CaseTag::I2B, "3s = t, n = 12s"),
            _ => case(CaseTag::I2C, "3s = t"),
        };
    }
    if 3 * t == 5 * s {
        return match n {
            _ if n == 4 * t => case(CaseTag::I3A, "5s = 3t, n = 4t"),
            _ if n == 4 * s => case(CaseTag::I3B, "5s = 3t, n = 4s"),
            _ if n == 6 * s => case(CaseTag::I3C, "5s = 3t, n = 6s"),
            _ if 3 * n == 14 * s => case(CaseTag::I3C, "5s = 3t, 3n = 14s"),
            _ => case(CaseTag::I3D, "5s = 3t"),
        };
    }
    let equalities = [
        (3 * s as i64 - t as i64, "3s-t = n"),
        (3 * t as i64 - s as i64, "3t-s = n"),
        ((3 * s + t) as i64, "3s+t = n"),
        ((3 * t + s) as i64, "3t+s = n"),
    ];
    if let Some(&(_, witness)) = equalities.iter().find(|(v, _)| *v == n as i64) {
        return case(CaseTag::I4A, witness);
    }
    if 4 * t == n {
        return case(CaseTag::I4B, "4t = n");
    }
    if 4 * s == n {
        return case(CaseTag::I4B, "4s = n");
    }
    case(CaseTag::I4C, "none")
}

pub fn predicted(tag: CaseTag) -> Prediction {
    match tag {
        CaseTag::I1A => Prediction::PointOrWedgeOfCircles,
        CaseTag::I1B => Prediction::PointOrCircle,
        CaseTag::I2A => Prediction::ThreeSphere,
        CaseTag::I2B | CaseTag::I3B => Prediction::WedgeOfTwoSpheres,
        CaseTag::I2C | CaseTag::I3C => Prediction::WedgeOfCircles,
        CaseTag::I3A | CaseTag::I4B => Prediction::Garland,
        CaseTag::I3D | CaseTag::I4C => Prediction::ConnectedSumOfTori,
        CaseTag::I4A => Prediction::CircleOrThreeSphere,
    }
}

/// Outcome for one component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentOutcome {
    pub report: ComponentReport,
    pub verdict: Verdict,
    pub reason: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub params: CirculantParams,
    pub case: TheoremCase,
    pub prediction: Prediction,
    pub components: Vec<ComponentOutcome>,
    pub verdict: Verdict,
}

/// Builds `N(C_n(s, t))`, collapses each component, computes its topology and
/// compares it with the predicted type.
pub fn verify(n: usize, s: usize, t: usize) -> Result<VerificationReport, VerifyError> {
    verify_params(CirculantParams::normalize(n, s, t)?)
}

pub fn verify_params(p: CirculantParams) -> Result<VerificationReport, VerifyError> {
    verify_with(p, None)
}

/// As [`verify_params`], but checks every component against `expected`
/// instead of the class prediction.
pub fn verify_with(p: CirculantParams, expected: Option<Prediction>) -> Result<VerificationReport, VerifyError> {
    let case = classify(p);
    let prediction = expected.unwrap_or_else(|| predicted(case.tag));
    let seeds = seed_pairs(p, case.tag);
    let orders = paper_shelling_orders(p, case.tag);
    let want_shelling = prediction == Prediction::WedgeOfTwoSpheres;
    let mut judged = Vec::new();
    for c in neighborhood_complex(&p.graph()).components() {
        let report = ComponentReport::compute(&c, &seeds, &orders, want_shelling)?;
        let (mut verdict, mut reason) = report.judge(prediction);
        if let (Verdict::Fail, Some(why), None) = (verdict, case.outside_hypotheses, report.consistency_issue()) {
            verdict = Verdict::Notable;
            reason = Some(format!("{why}; {}", reason.unwrap_or_default()));
        }
        judged.push((report, verdict, reason));
    }
    let pairs: Vec<(ComponentReport, Verdict)> = judged.iter().map(|(r, v, _)| (r.clone(), *v)).collect();
    let verdict = overall_verdict(&pairs);
    Ok(VerificationReport {
        params: p,
        case,
        prediction,
        components: judged
            .into_iter()
            .map(|(report, verdict, reason)| ComponentOutcome {
                report,
                verdict,
                reason,
            })
            .collect(),
        verdict,
    })
}

fn residue(n: usize, x: usize) -> usize {
    x % n
}

fn n_k(p: CirculantParams, k: usize) -> Simplex {
    let CirculantParams { n, s, t } = p;
    Simplex::new([k + s, k + t, k + n - s, k + n - t].map(|x| residue(n, x)))
}

/// Collapses tried before the generic pass. For `I2B` and `I3B` the free
/// triangles `{s+k, t+k, n-t+k}` and `{s+k, t+k, n-s+k}` of `N(k)`; otherwise
/// the edge pairs `({s+k, n-s+k}, N(k))` when their hypotheses hold, for
/// `(s, t)` or with the roles exchanged.
pub fn seed_pairs(p: CirculantParams, tag: CaseTag) -> Vec<CollapsePair> {
    let CirculantParams { n, s, t } = p;
    let free = |k: usize| -> Option<Simplex> {
        match tag {
            CaseTag::I2B => Some(Simplex::new([k + s, k + t, k + n - t].map(|x| residue(n, x)))),
            CaseTag::I3B => Some(Simplex::new([k + s, k + t, k + n - s].map(|x| residue(n, x)))),
            _ => None,
        }
    };
    if free(0).is_some() {
        return (0..n)
            .map(|k| CollapsePair::new(free(k).expect("tag fixed"), n_k(p, k)))
            .collect();
    }
    paper_schedule_pairs(n, s, t)
        .or_else(|_| paper_schedule_pairs(n, t, s))
        .unwrap_or_default()
}

/// `τ_k¹ = {k+s, k+3s, k+11s}`, `τ_k² = {k+3s, k+9s, k+11s}` on `C_{12s}(s, 3s)`.
fn i2b_triangles(n: usize, s: usize, k: usize) -> (Simplex, Simplex) {
    let v = |m: usize| residue(n, k + m * s);
    (Simplex::new([v(1), v(3), v(11)]), Simplex::new([v(3), v(9), v(11)]))
}

/// Shelling order of the component `Δ_i` (`0 <= i < 2s`) of the collapsed
/// `N(C_{12s}(s, 3s))`: `τ¹, τ²` at offsets `0, 2s, 4s`, then `τ², τ¹` at
/// `6s`, then `τ¹, τ²` at `8s, 10s`. The spanning simplices are `τ²` at `8s`
/// and `10s`.
pub fn shelling_order_twelve(s: usize, i: usize) -> Vec<Simplex> {
    let n = 12 * s;
    let mut order = Vec::with_capacity(12);
    for j in [0, 2, 4, 6, 8, 10] {
        let (a, b) = i2b_triangles(n, s, i + j * s);
        if j == 6 {
            order.extend([b, a]);
        } else {
            order.extend([a, b]);
        }
    }
    order
}

/// Shelling order of the component `Δ_i` (`0 <= i < 2u`) of the collapsed
/// `N(C_{12u}(3u, 5u))`: `τ_k¹ = {3u+k, 7u+k, 9u+k}` then
/// `τ_k² = {5u+k, 7u+k, 9u+k}` for `k = i + 2lu`, `l = 0..6`. The last two
/// simplices are spanning.
pub fn shelling_order_three_five(u: usize, i: usize) -> Vec<Simplex> {
    let n = 12 * u;
    (0..6)
        .flat_map(|l| {
            let k = i + 2 * l * u;
            let v = |m: usize| residue(n, k + m * u);
            [Simplex::new([v(3), v(7), v(9)]), Simplex::new([v(5), v(7), v(9)])]
        })
        .collect()
}

/// The explicit shelling orders that apply to `p`, one per component.
pub fn paper_shelling_orders(p: CirculantParams, tag: CaseTag) -> Vec<Vec<Simplex>> {
    match tag {
        CaseTag::I2B => (0..2 * p.s).map(|i| shelling_order_twelve(p.s, i)).collect(),
        CaseTag::I3B => {
            let u = p.s / 3;
            (0..2 * u).map(|i| shelling_order_three_five(u, i)).collect()
        }
        _ => Vec::new(),
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Whether none of `2s, 2t, 2(s+t), 3s-t, 3t-s, 3s+t, 3t+s, 4s, 4t` is
/// divisible by `n`.
pub fn torus_congruences_hold(n: usize, s: usize, t: usize) -> bool {
    let (n, s, t) = (n as i64, s as i64, t as i64);
    [2 * s, 2 * t, 2 * (s + t), 3 * s - t, 3 * t - s, 3 * s + t, 3 * t + s, 4 * s, 4 * t]
        .iter()
        .all(|v| v.rem_euclid(n) != 0)
}

/// Parameters `n = pq` with `(s, t) = ((p-q)/2, (p+q)/2)` or
/// `((p²-q)/2, (p²+q)/2)` whose circulant is expected to give a torus.
/// Each candidate is reduced mod `n`, screened against
/// [`torus_congruences_hold`], normalized, and deduplicated.
pub fn special_params(p: usize, q: usize) -> Vec<CirculantParams> {
    if p <= q || q == 0 || gcd(p, q) != 1 {
        return Vec::new();
    }
    let n = p * q;
    let families = [(p - q, p + q), (p * p - q, p * p + q)];
    let mut out: Vec<CirculantParams> = Vec::new();
    for (a, b) in families {
        if a % 2 != 0 || b % 2 != 0 {
            continue;
        }
        let (s, t) = (a / 2 % n, b / 2 % n);
        if s == 0 || t == 0 || !torus_congruences_hold(n, s, t) {
            continue;
        }
        if let Ok(params) = CirculantParams::normalize(n, s, t) {
            if !out.contains(&params) {
                out.push(params);
            }
        }
    }
    out
}
