//! Sturm-sequence oracle.
//!
//! Counts, locates and checks real roots from the coefficients alone. The
//! only inputs taken from the rest of the crate are the coefficient type,
//! the tolerance and the claims being checked.

use serde::{Deserialize, Serialize};

use crate::cubic::{depress, depressed_discriminant, MonicCubic};
use crate::error::{Error, Result};
use crate::isolator::{upper_lower_bounds, RootIsolation};
use crate::regime::{Classification, RootCount};
use crate::tolerance::Tolerance;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Degeneracy {
    /// `p₂` is a nonzero constant.
    ConstantRemainder,
    /// `p₂ ≡ 0`; the chain ends at `p₁`, which divides `p₀` (triple root).
    VanishingRemainder,
    /// `p₃ = 0`; the chain ends at `p₂`, which divides `p₀` (double root).
    VanishingLast,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SturmChain {
    /// `[1, a, b, c]`
    pub p0: [f64; 4],
    /// `[3, 2a, b]`
    pub p1: [f64; 3],
    /// `[slope, intercept]`; absent when `p₂ ≡ 0`.
    pub p2: Option<[f64; 2]>,
    /// Constant last term; absent when the chain stops earlier.
    pub p3: Option<f64>,
    pub degeneracy: Option<Degeneracy>,
}

const NUDGE_ULPS: f64 = 4.0;

fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().fold(0.0, |acc, &k| acc * x + k)
}

fn magnitude(coeffs: &[f64], x: f64) -> f64 {
    let ax = x.abs();
    coeffs.iter().fold(0.0, |acc, &k| acc * ax + k.abs())
}

pub fn sturm_chain(m: &MonicCubic, tol: &Tolerance) -> SturmChain {
    let MonicCubic { a, b, c } = *m;
    let p0 = [1.0, a, b, c];
    let p1 = [3.0, 2.0 * a, b];

    // p₀ = (x/3 + a/9)·p₁ + r₁x + r₀
    let q1 = 1.0 / 3.0;
    let q0 = a / 9.0;
    let r1 = b - q1 * b - q0 * p1[1];
    let r0 = c - q0 * b;
    let slope = -r1;
    let intercept = -r0;

    let slope_scale = 1f64.max(b.abs()).max(a * a);
    let intercept_scale = 1f64.max(c.abs()).max((a * b).abs());
    let slope_zero = tol.near_zero(slope, slope_scale);
    let intercept_zero = tol.near_zero(intercept, intercept_scale);

    if slope_zero && intercept_zero {
        return SturmChain {
            p0,
            p1,
            p2: None,
            p3: None,
            degeneracy: Some(Degeneracy::VanishingRemainder),
        };
    }
    if slope_zero {
        return SturmChain {
            p0,
            p1,
            p2: Some([0.0, intercept]),
            p3: None,
            degeneracy: Some(Degeneracy::ConstantRemainder),
        };
    }

    let x_star = -intercept / slope;
    let p3 = -horner(&p1, x_star);
    let p3_scale = 1f64.max(magnitude(&p1, x_star));
    if tol.near_zero(p3, p3_scale) {
        SturmChain {
            p0,
            p1,
            p2: Some([slope, intercept]),
            p3: None,
            degeneracy: Some(Degeneracy::VanishingLast),
        }
    } else {
        SturmChain {
            p0,
            p1,
            p2: Some([slope, intercept]),
            p3: Some(p3),
            degeneracy: None,
        }
    }
}

impl SturmChain {
    fn values(&self, x: f64) -> [Option<f64>; 4] {
        [
            Some(horner(&self.p0, x)),
            Some(horner(&self.p1, x)),
            self.p2.map(|p| horner(&p, x)),
            self.p3,
        ]
    }

    fn variations_of(values: impl IntoIterator<Item = f64>) -> usize {
        let mut last = 0.0f64;
        let mut count = 0;
        for v in values {
            if v == 0.0 {
                continue;
            }
            if last != 0.0 && (v > 0.0) != (last > 0.0) {
                count += 1;
            }
            last = v;
        }
        count
    }

    pub fn variations(&self, x: f64) -> usize {
        Self::variations_of(self.values(x).into_iter().flatten())
    }

    fn variations_at_infinity(&self, positive: bool) -> usize {
        let lead = |coeff: f64, degree: u32| {
            if positive || degree.is_multiple_of(2) {
                coeff
            } else {
                -coeff
            }
        };
        let mut seq = vec![lead(1.0, 3), lead(3.0, 2)];
        if let Some([s, k]) = self.p2 {
            seq.push(if s != 0.0 { lead(s, 1) } else { k });
        }
        if let Some(p3) = self.p3 {
            seq.push(p3);
        }
        Self::variations_of(seq)
    }

    /// Number of distinct real roots.
    pub fn total_distinct(&self) -> usize {
        self.variations_at_infinity(false) - self.variations_at_infinity(true)
    }

    fn near_root(&self, x: f64) -> bool {
        horner(&self.p0, x).abs() <= 2.0 * NUDGE_ULPS * f64::EPSILON * magnitude(&self.p0, x)
    }

    /// Moves `x` away from a root of `p₀` in the given direction until the
    /// sign of `p₀(x)` is trustworthy.
    fn nudge(&self, mut x: f64, direction: f64) -> f64 {
        let mut step = NUDGE_ULPS * f64::EPSILON * x.abs().max(1.0);
        for _ in 0..64 {
            if !self.near_root(x) {
                break;
            }
            x += direction * step;
            step *= 2.0;
        }
        x
    }
}

/// Distinct real roots in `(lo, hi]`. Endpoints sitting on a root are first
/// moved outward by a few ulps.
pub fn count_roots_in(ch: &SturmChain, lo: f64, hi: f64) -> usize {
    let lo = ch.nudge(lo, -1.0);
    let hi = ch.nudge(hi, 1.0);
    ch.variations(lo).saturating_sub(ch.variations(hi))
}

fn count_exact(ch: &SturmChain, lo: f64, hi: f64) -> usize {
    ch.variations(lo).saturating_sub(ch.variations(hi))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleRoot {
    pub value: f64,
    pub multiplicity: u8,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootReport {
    /// Ascending.
    pub roots: Vec<OracleRoot>,
    pub residuals: Vec<f64>,
}

impl RootReport {
    pub fn real_with_multiplicity(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity as usize).sum()
    }

    pub fn values(&self) -> Vec<f64> {
        self.roots.iter().map(|r| r.value).collect()
    }
}

fn cauchy_radius(m: &MonicCubic) -> f64 {
    1.0 + m.a.abs().max(m.b.abs()).max(m.c.abs())
}

/// Splits `(lo, hi]` until each piece holds one distinct root.
fn separate(ch: &SturmChain, lo: f64, hi: f64, n: usize, out: &mut Vec<(f64, f64, usize)>) {
    if n == 0 {
        return;
    }
    let mut mid = 0.5 * (lo + hi);
    if ch.near_root(mid) {
        let up = ch.nudge(mid, 1.0);
        mid = if up < hi { up } else { ch.nudge(mid, -1.0) };
    }
    if n == 1 || !(lo < mid && mid < hi) {
        out.push((lo, hi, n));
        return;
    }
    let left = count_exact(ch, lo, mid);
    separate(ch, lo, mid, left, out);
    separate(ch, mid, hi, n.saturating_sub(left), out);
}

/// Safeguarded Newton on a bracket with a sign change.
fn polish(m: &MonicCubic, mut lo: f64, mut hi: f64) -> f64 {
    let f = |x: f64| m.eval(x);
    let df = |x: f64| (3.0 * x + 2.0 * m.a) * x + m.b;
    let (mut flo, fhi) = (f(lo), f(hi));
    if flo == 0.0 {
        return lo;
    }
    if fhi == 0.0 {
        return hi;
    }
    if (flo > 0.0) == (fhi > 0.0) {
        return 0.5 * (lo + hi);
    }
    let mut x = 0.5 * (lo + hi);
    for _ in 0..200 {
        let fx = f(x);
        if fx == 0.0 {
            return x;
        }
        if (fx > 0.0) == (flo > 0.0) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
        }
        let d = df(x);
        let newton = x - fx / d;
        let next = if d != 0.0 && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        if next == x || hi - lo <= 2.0 * f64::EPSILON * x.abs().max(f64::MIN_POSITIVE) {
            return next;
        }
        x = next;
    }
    x
}

/// Real roots with multiplicities, by Sturm separation inside the Cauchy
/// radius followed by bracketed Newton refinement.
pub fn solve_all(m: &MonicCubic, tol: &Tolerance) -> Result<RootReport> {
    let ch = sturm_chain(m, tol);
    let mut roots = match ch.degeneracy {
        Some(Degeneracy::VanishingRemainder) => vec![OracleRoot {
            value: -ch.p1[1] / (2.0 * ch.p1[0]),
            multiplicity: 3,
        }],
        Some(Degeneracy::VanishingLast) => {
            let [s, k] = ch.p2.expect("linear gcd present");
            let double = -k / s;
            let simple_guess = -m.a - 2.0 * double;
            let simple = newton_steps(m, simple_guess);
            vec![
                OracleRoot {
                    value: double,
                    multiplicity: 2,
                },
                OracleRoot {
                    value: simple,
                    multiplicity: 1,
                },
            ]
        }
        _ => {
            let r = cauchy_radius(m);
            let n = count_exact(&ch, -r, r);
            let mut pieces = Vec::with_capacity(3);
            separate(&ch, -r, r, n, &mut pieces);
            if pieces.iter().map(|p| p.2).sum::<usize>() != n {
                return Err(Error::NonConvergence(format!(
                    "separated {} of {n} roots",
                    pieces.len()
                )));
            }
            pieces
                .into_iter()
                .map(|(lo, hi, k)| OracleRoot {
                    value: polish(m, lo, hi),
                    multiplicity: k as u8,
                })
                .collect()
        }
    };
    roots.sort_by(|x, y| x.value.total_cmp(&y.value));
    let residuals = roots.iter().map(|r| m.eval(r.value).abs()).collect();
    let report = RootReport { roots, residuals };
    let total = report.real_with_multiplicity();
    if total != 1 && total != 3 {
        return Err(Error::NonConvergence(format!(
            "{total} real roots counted with multiplicity"
        )));
    }
    Ok(report)
}

fn newton_steps(m: &MonicCubic, mut x: f64) -> f64 {
    for _ in 0..4 {
        let d = (3.0 * x + 2.0 * m.a) * x + m.b;
        let fx = m.eval(x);
        if d == 0.0 || fx == 0.0 {
            break;
        }
        let next = x - fx / d;
        if m.eval(next).abs() >= fx.abs() {
            break;
        }
        x = next;
    }
    x
}

/// What an interval claims, stripped of provenance.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct IntervalClaim {
    pub lo: f64,
    pub hi: f64,
    pub lo_closed: bool,
    pub hi_closed: bool,
    pub multiplicity: u8,
}

impl IntervalClaim {
    fn contains(&self, x: f64, slack: f64) -> bool {
        let above = x > self.lo - slack || (self.lo_closed && x == self.lo);
        let below = x < self.hi + slack || (self.hi_closed && x == self.hi);
        above && below
    }
}

/// Claims made by a classification and isolation of one cubic.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Claims {
    pub intervals: Vec<IntervalClaim>,
    pub count: RootCount,
    pub n_pos: u8,
    pub n_neg: u8,
    pub n_zero: u8,
    pub complex_pair: bool,
    pub lower_bound: f64,
    pub upper_bound: f64,
}

impl Claims {
    pub fn new(cls: &Classification, ri: &RootIsolation) -> Claims {
        Claims {
            intervals: ri
                .intervals
                .iter()
                .map(|i| IntervalClaim {
                    lo: i.lo.value,
                    hi: i.hi.value,
                    lo_closed: i.lo.closed,
                    hi_closed: i.hi.closed,
                    multiplicity: i.multiplicity,
                })
                .collect(),
            count: cls.count,
            n_pos: cls.signs.n_pos,
            n_neg: cls.signs.n_neg,
            n_zero: cls.signs.n_zero,
            complex_pair: cls.signs.complex_pair,
            lower_bound: ri.lower_bound,
            upper_bound: ri.upper_bound,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IntervalCheck {
    /// Distinct roots found inside the interval (or near a point interval).
    pub sturm_count: usize,
    /// Whether an oracle root of matching multiplicity lies in the interval.
    pub contains_root: bool,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub intervals: Vec<IntervalCheck>,
    pub roots: RootReport,
    pub count_matches: bool,
    pub trichotomy_matches: bool,
    pub signs_match: bool,
    /// `None` unless the cubic has three real roots.
    pub harness: Option<bool>,
    pub within_bounds: bool,
    pub disjoint: bool,
    pub pass: bool,
    pub diagnostics: Vec<String>,
}

/// Slack used for the root spread against `√3·σ` and `2σ`.
pub const HARNESS_SLACK: f64 = 1e-9;

fn point_check(m: &MonicCubic, ch: &SturmChain, roots: &RootReport, claim: &IntervalClaim, tol: &Tolerance) -> (IntervalCheck, Option<String>) {
    let x = claim.lo;
    let scale = m.magnitude_at(x).max(m.coefficient_scale());
    let residual = m.eval(x).abs();
    let residual_ok = residual <= tol.band(scale);
    let mult = claim.multiplicity.max(1);
    let radius = (1e-6 * x.abs().max(1.0)).max(4.0 * tol.band(scale).powf(1.0 / f64::from(mult)));
    let near: u8 = roots
        .roots
        .iter()
        .filter(|r| (r.value - x).abs() <= radius)
        .map(|r| r.multiplicity)
        .sum();
    let sturm_count = count_roots_in(ch, x - radius, x + radius);
    let contains_root = near == mult || (mult >= 2 && near + 2 == mult);
    let ok = residual_ok && contains_root;
    let diag = (!ok).then(|| {
        format!(
            "point {x:.12}: residual {residual:.3e}, {near} oracle roots (with multiplicity) within {radius:.1e}, expected {mult}"
        )
    });
    (
        IntervalCheck {
            sturm_count,
            contains_root,
            ok,
        },
        diag,
    )
}

/// Checks every claim against the oracle.
pub fn verify_claims(m: &MonicCubic, claims: &Claims, tol: &Tolerance) -> Result<VerificationReport> {
    let ch = sturm_chain(m, tol);
    let roots = solve_all(m, tol)?;
    let mut diagnostics = Vec::new();
    let slack_at = |x: f64| NUDGE_ULPS * f64::EPSILON * x.abs().max(1.0) * 16.0;

    // (a) one root per interval
    let mut checks = Vec::with_capacity(claims.intervals.len());
    for (i, claim) in claims.intervals.iter().enumerate() {
        if claim.lo == claim.hi {
            let (check, diag) = point_check(m, &ch, &roots, claim, tol);
            diagnostics.extend(diag.map(|d| format!("interval {i}: {d}")));
            checks.push(check);
            continue;
        }
        let n = count_roots_in(&ch, claim.lo, claim.hi);
        let inside: Vec<&OracleRoot> = roots
            .roots
            .iter()
            .filter(|r| claim.contains(r.value, slack_at(r.value)))
            .collect();
        let contains_root = inside.len() == 1 && inside[0].multiplicity == claim.multiplicity;
        let ok = n == 1 && contains_root && claim.lo <= claim.hi;
        if !ok {
            diagnostics.push(format!(
                "interval {i} [{:.12}, {:.12}]: Sturm count {n}, {} oracle roots inside",
                claim.lo,
                claim.hi,
                inside.len()
            ));
        }
        checks.push(IntervalCheck {
            sturm_count: n,
            contains_root,
            ok,
        });
    }

    // every oracle root is covered, and counts agree
    let distinct = roots.roots.len();
    let claimed_distinct = claims.count.distinct();
    let covered = roots.roots.iter().all(|r| {
        claims.intervals.iter().any(|c| {
            if c.lo == c.hi {
                (r.value - c.lo).abs() <= 1e-6 * c.lo.abs().max(1.0)
            } else {
                c.contains(r.value, slack_at(r.value))
            }
        })
    });
    let near_degenerate_split = matches!(claims.count, RootCount::DoubleSimple { .. } | RootCount::TripleRoot { .. })
        && checks.iter().all(|c| c.ok);
    let count_matches = claims.intervals.len() == claimed_distinct
        && covered
        && (distinct == claimed_distinct || near_degenerate_split);
    if !count_matches {
        diagnostics.push(format!(
            "claimed {claimed_distinct} distinct roots in {} intervals; oracle found {distinct}",
            claims.intervals.len()
        ));
    }

    // (c) discriminant sign against the claimed count
    let d = depress(m);
    let delta = depressed_discriminant(&d);
    let delta_scale = 4.0 * d.p.abs().powi(3) + 27.0 * d.q * d.q;
    let delta_zero = tol.near_zero(delta, delta_scale);
    let trichotomy_matches = match claims.count {
        RootCount::ThreeDistinct => delta > 0.0,
        RootCount::OneReal => delta < 0.0,
        RootCount::DoubleSimple { .. } | RootCount::TripleRoot { .. } => delta_zero,
    };
    if !trichotomy_matches {
        diagnostics.push(format!("discriminant {delta:.6e} disagrees with {:?}", claims.count));
    }

    // (b) signs
    let zero_idx = if m.has_zero_free_term(tol) {
        roots
            .roots
            .iter()
            .enumerate()
            .min_by(|x, y| x.1.value.abs().total_cmp(&y.1.value.abs()))
            .map(|(i, _)| i)
    } else {
        None
    };
    let (mut n_pos, mut n_neg, mut n_zero) = (0u8, 0u8, 0u8);
    for (i, r) in roots.roots.iter().enumerate() {
        if Some(i) == zero_idx {
            n_zero += r.multiplicity;
        } else if r.value > 0.0 {
            n_pos += r.multiplicity;
        } else {
            n_neg += r.multiplicity;
        }
    }
    let oracle_complex = roots.real_with_multiplicity() == 1;
    let signs_match = (n_pos, n_neg, n_zero, oracle_complex)
        == (claims.n_pos, claims.n_neg, claims.n_zero, claims.complex_pair);
    if !signs_match {
        diagnostics.push(format!(
            "oracle signs (+{n_pos}, -{n_neg}, 0x{n_zero}, complex {oracle_complex}) differ from claim (+{}, -{}, 0x{}, complex {})",
            claims.n_pos, claims.n_neg, claims.n_zero, claims.complex_pair
        ));
    }

    // (e) harness
    let harness = (roots.real_with_multiplicity() == 3).then(|| {
        let s2 = (m.a * m.a / 3.0 - m.b).max(0.0);
        let s = s2.sqrt();
        let (lower, upper) = (3f64.sqrt() * s, 2.0 * s);
        let first = roots.roots.first().map(|r| r.value).unwrap_or(0.0);
        let last = roots.roots.last().map(|r| r.value).unwrap_or(0.0);
        let spread = last - first;
        let slack = HARNESS_SLACK * upper.max(1.0);
        let ok = spread >= lower - slack && spread <= upper + slack;
        if !ok {
            diagnostics.push(format!("spread {spread:.12} outside [{lower:.12}, {upper:.12}]"));
        }
        ok
    });

    // (d) outer bounds
    let generic = upper_lower_bounds(m);
    let within_bounds = roots.roots.iter().all(|r| {
        let x = r.value;
        let s = slack_at(x);
        x >= claims.lower_bound - s
            && x <= claims.upper_bound + s
            && x >= generic.lower - s
            && x <= generic.upper + s
    });
    if !within_bounds {
        diagnostics.push(format!(
            "roots {:?} not within [{}, {}]",
            roots.values(),
            claims.lower_bound,
            claims.upper_bound
        ));
    }

    let disjoint = claims
        .intervals
        .windows(2)
        .all(|w| w[0].hi <= w[1].lo || (w[0].hi - w[1].lo) <= slack_at(w[0].hi));
    if !disjoint {
        diagnostics.push("intervals overlap".to_string());
    }

    let pass = checks.iter().all(|c| c.ok)
        && count_matches
        && trichotomy_matches
        && signs_match
        && harness.unwrap_or(true)
        && within_bounds
        && disjoint;

    Ok(VerificationReport {
        intervals: checks,
        roots,
        count_matches,
        trichotomy_matches,
        signs_match,
        harness,
        within_bounds,
        disjoint,
        pass,
        diagnostics,
    })
}

pub fn verify(
    m: &MonicCubic,
    cls: &Classification,
    ri: &RootIsolation,
    tol: &Tolerance,
) -> Result<VerificationReport> {
    verify_claims(m, &Claims::new(cls, ri), tol)
}
