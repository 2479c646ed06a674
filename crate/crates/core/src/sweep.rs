//! One-parameter sweeps over affine coefficient families.

use serde::{Deserialize, Serialize};

use crate::batch::{analyze, Analysis, Execution};
use crate::cubic::MonicCubic;
use crate::error::{Error, Result};
use crate::isolator::{Interval, IsolateOptions};
use crate::regime::{BoundaryFlag, RootCount};
use crate::tolerance::Tolerance;

/// `a(t) = a₀ + a₁t`, and likewise for `b` and `c`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AffineFamily {
    pub a: [f64; 2],
    pub b: [f64; 2],
    pub c: [f64; 2],
}

impl AffineFamily {
    /// `x³ − 8x² + 8(3 − 2q)x − 16(1 − q)`
    pub const RAYLEIGH: AffineFamily = AffineFamily {
        a: [-8.0, 0.0],
        b: [24.0, -16.0],
        c: [-16.0, 16.0],
    };

    pub fn at(&self, t: f64) -> Result<MonicCubic> {
        MonicCubic::new(
            self.a[0] + self.a[1] * t,
            self.b[0] + self.b[1] * t,
            self.c[0] + self.c[1] * t,
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub family: AffineFamily,
    pub t_lo: f64,
    pub t_hi: f64,
    pub samples: usize,
    /// Bracket width at which boundary bisection stops.
    pub refine_tol: f64,
    pub tolerance: Tolerance,
    pub options: IsolateOptions,
}

impl SweepConfig {
    pub fn new(family: AffineFamily, t_lo: f64, t_hi: f64, samples: usize) -> Self {
        SweepConfig {
            family,
            t_lo,
            t_hi,
            samples,
            refine_tol: 1e-13,
            tolerance: Tolerance::default(),
            options: IsolateOptions::default(),
        }
    }

    pub fn rayleigh(q_lo: f64, q_hi: f64, samples: usize) -> Self {
        SweepConfig::new(AffineFamily::RAYLEIGH, q_lo, q_hi, samples)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.t_lo.is_finite() && self.t_hi.is_finite() && self.t_lo < self.t_hi) {
            return Err(Error::InvalidSweep(format!(
                "need finite t_lo < t_hi, got [{}, {})",
                self.t_lo, self.t_hi
            )));
        }
        if self.samples < 2 {
            return Err(Error::InvalidSweep(format!("need at least 2 samples, got {}", self.samples)));
        }
        if self.refine_tol.is_nan() || self.refine_tol <= 0.0 {
            return Err(Error::InvalidSweep(format!("refine_tol must be positive, got {}", self.refine_tol)));
        }
        let coeffs = [self.family.a, self.family.b, self.family.c];
        if coeffs.iter().flatten().any(|x| !x.is_finite()) {
            return Err(Error::InvalidSweep("family coefficients must be finite".into()));
        }
        Ok(())
    }

    /// Sample points `t_lo + i·(t_hi − t_lo)/samples`, `i = 0..samples`.
    pub fn grid(&self) -> Vec<f64> {
        let h = (self.t_hi - self.t_lo) / self.samples as f64;
        (0..self.samples).map(|i| self.t_lo + i as f64 * h).collect()
    }
}

/// The parts of a classification that define a regime of the sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Signature {
    pub figure: u8,
    pub case: usize,
    pub count: String,
    pub n_pos: u8,
    pub n_neg: u8,
    pub n_zero: u8,
}

impl Signature {
    fn of(a: &Analysis) -> Signature {
        let cls = &a.classification;
        let count = match cls.count {
            RootCount::OneReal => "one_real",
            RootCount::ThreeDistinct => "three_distinct",
            RootCount::DoubleSimple { .. } => "double_simple",
            RootCount::TripleRoot { .. } => "triple",
        };
        Signature {
            figure: cls.regime.figure,
            case: cls.case,
            count: count.to_string(),
            n_pos: cls.signs.n_pos,
            n_neg: cls.signs.n_neg,
            n_zero: cls.signs.n_zero,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PhysicalStatus {
    Physical,
    Unphysical,
    /// The interval straddles a cut; `resolved` is the oracle root's status.
    Ambiguous { resolved: Option<bool> },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Sample {
    pub t: f64,
    pub cubic: MonicCubic,
    pub analysis: Option<Analysis>,
    pub signature: Option<Signature>,
    pub error: Option<String>,
    /// One entry per interval; present for physical sweeps only.
    pub physical: Option<Vec<PhysicalStatus>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Boundary {
    pub t: f64,
    pub identity: BoundaryFlag,
    /// Value of the signed gap at `t`.
    pub residual: f64,
    pub changes_classification: bool,
}

/// A change of classification between two samples that no landmark
/// identity accounts for.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Anomaly {
    pub t_lo: f64,
    pub t_hi: f64,
    pub before: Option<Signature>,
    pub after: Option<Signature>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationSummary {
    pub checked: usize,
    pub passed: usize,
    pub errors: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub samples: Vec<Sample>,
    pub boundaries: Vec<Boundary>,
    pub anomalies: Vec<Anomaly>,
    pub verification: VerificationSummary,
}

/// Whether `x = ξ²` is admissible for the Rayleigh parameter `q`:
/// `0 < x ≤ 1` or `x ≥ 1/q`.
pub fn rayleigh_admissible(x: f64, q: f64) -> bool {
    (x > 0.0 && x <= 1.0) || (q > 0.0 && x >= 1.0 / q)
}

/// Interval-level admissibility; straddling intervals are resolved with the
/// oracle root they contain.
pub fn physical_status(interval: &Interval, q: f64, oracle_roots: &[f64]) -> PhysicalStatus {
    let (lo, hi) = (interval.lo.value, interval.hi.value);
    let cut = if q > 0.0 { 1.0 / q } else { f64::INFINITY };
    let inside_first = lo >= 0.0 && hi <= 1.0 && (lo > 0.0 || !interval.lo.closed);
    let inside_second = lo >= cut;
    if inside_first || inside_second {
        return PhysicalStatus::Physical;
    }
    let below_zero = hi <= 0.0;
    let between = lo > 1.0 && hi < cut;
    let between_open = lo >= 1.0 && !interval.lo.closed && hi <= cut && !interval.hi.closed;
    if below_zero || between || between_open {
        return PhysicalStatus::Unphysical;
    }
    let resolved = oracle_roots
        .iter()
        .find(|&&r| interval.contains(r, 0.0))
        .map(|&r| rayleigh_admissible(r, q));
    PhysicalStatus::Ambiguous { resolved }
}

fn analyze_at(cfg: &SweepConfig, t: f64) -> Result<Analysis> {
    analyze(&cfg.family.at(t)?, &cfg.tolerance, cfg.options)
}

fn gap_at(cfg: &SweepConfig, flag: BoundaryFlag, t: f64) -> Option<f64> {
    cfg.family.at(t).ok().and_then(|m| flag.gap(&m))
}

/// Bisects a sign change of `flag`'s gap inside `[lo, hi]`.
fn refine(cfg: &SweepConfig, flag: BoundaryFlag, mut lo: f64, mut hi: f64) -> Option<f64> {
    let mut g_lo = gap_at(cfg, flag, lo)?;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= cfg.refine_tol || mid <= lo || mid >= hi {
            break;
        }
        let g_mid = gap_at(cfg, flag, mid)?;
        if g_mid == 0.0 {
            return Some(mid);
        }
        if (g_mid < 0.0) == (g_lo < 0.0) {
            lo = mid;
            g_lo = g_mid;
        } else {
            hi = mid;
        }
    }
    let g_hi = gap_at(cfg, flag, hi)?;
    Some(if g_lo.abs() <= g_hi.abs() { lo } else { hi })
}

fn signature_at(cfg: &SweepConfig, t: f64) -> Option<Signature> {
    analyze_at(cfg, t).ok().map(|a| Signature::of(&a))
}

pub fn sweep(cfg: &SweepConfig, exec: Execution) -> Result<SweepReport> {
    sweep_with(cfg, exec, false)
}

/// Sweep with optional Rayleigh admissibility annotation (the parameter `t`
/// is read as `q`).
pub fn sweep_with(cfg: &SweepConfig, exec: Execution, physical: bool) -> Result<SweepReport> {
    cfg.validate()?;
    let grid = cfg.grid();
    let samples: Vec<Sample> = exec.map(&grid, |&t| {
        let cubic = match cfg.family.at(t) {
            Ok(m) => m,
            Err(e) => {
                return Sample {
                    t,
                    cubic: MonicCubic { a: f64::NAN, b: f64::NAN, c: f64::NAN },
                    analysis: None,
                    signature: None,
                    error: Some(e.to_string()),
                    physical: None,
                }
            }
        };
        match analyze(&cubic, &cfg.tolerance, cfg.options) {
            Ok(a) => {
                let roots = a.verification.roots.values();
                let physical = physical.then(|| {
                    a.isolation
                        .intervals
                        .iter()
                        .map(|i| physical_status(i, t, &roots))
                        .collect()
                });
                Sample {
                    t,
                    cubic,
                    signature: Some(Signature::of(&a)),
                    analysis: Some(a),
                    error: None,
                    physical,
                }
            }
            Err(e) => Sample {
                t,
                cubic,
                analysis: None,
                signature: None,
                error: Some(e.to_string()),
                physical: None,
            },
        }
    });

    let pairs: Vec<usize> = (0..samples.len().saturating_sub(1)).collect();
    let found: Vec<(Vec<Boundary>, Option<Anomaly>)> = exec.map(&pairs, |&i| {
        let (s0, s1) = (&samples[i], &samples[i + 1]);
        let mut events: Vec<(f64, BoundaryFlag, f64)> = Vec::new();
        for flag in BoundaryFlag::ALL {
            let (Some(g0), Some(g1)) = (flag.gap(&s0.cubic), flag.gap(&s1.cubic)) else {
                continue;
            };
            if g0 == 0.0 {
                events.push((s0.t, flag, 0.0));
            } else if g1 != 0.0 && (g0 < 0.0) != (g1 < 0.0) {
                if let Some(t) = refine(cfg, flag, s0.t, s1.t) {
                    events.push((t, flag, gap_at(cfg, flag, t).unwrap_or(f64::NAN)));
                }
            }
        }
        events.sort_by(|x, y| x.0.total_cmp(&y.0));

        let mut cuts = vec![s0.t];
        cuts.extend(events.iter().map(|e| e.0));
        cuts.push(s1.t);
        let boundaries = events
            .iter()
            .enumerate()
            .map(|(j, &(t, identity, residual))| {
                let left = 0.5 * (cuts[j] + t);
                let right = 0.5 * (t + cuts[j + 2]);
                let before = if left == t { None } else { signature_at(cfg, left) };
                let after = if right == t { None } else { signature_at(cfg, right) };
                Boundary {
                    t,
                    identity,
                    residual,
                    changes_classification: before != after,
                }
            })
            .collect();
        let anomaly = (events.is_empty() && s0.signature != s1.signature).then(|| Anomaly {
            t_lo: s0.t,
            t_hi: s1.t,
            before: s0.signature.clone(),
            after: s1.signature.clone(),
        });
        (boundaries, anomaly)
    });

    let mut boundaries = Vec::new();
    let mut anomalies = Vec::new();
    for (b, a) in found {
        boundaries.extend(b);
        anomalies.extend(a);
    }
    if let Some(last) = samples.last() {
        for flag in BoundaryFlag::ALL {
            if flag.gap(&last.cubic) == Some(0.0) {
                boundaries.push(Boundary {
                    t: last.t,
                    identity: flag,
                    residual: 0.0,
                    changes_classification: false,
                });
            }
        }
    }
    boundaries.sort_by(|x, y| x.t.total_cmp(&y.t));

    let mut verification = VerificationSummary::default();
    for s in &samples {
        match &s.analysis {
            Some(a) => {
                verification.checked += 1;
                verification.passed += usize::from(a.verification.pass);
            }
            None => verification.errors += 1,
        }
    }

    Ok(SweepReport {
        config: *cfg,
        samples,
        boundaries,
        anomalies,
        verification,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isolator::{Endpoint, Tag};
    use crate::cases::Atom;

    fn iv(lo: f64, lo_closed: bool, hi: f64, hi_closed: bool) -> Interval {
        let e = |value, closed| Endpoint {
            value,
            closed,
            tag: Tag::Atom(Atom::Zero),
        };
        Interval {
            lo: e(lo, lo_closed),
            hi: e(hi, hi_closed),
            multiplicity: 1,
        }
    }

    #[test]
    fn config_validation() {
        assert!(SweepConfig::rayleigh(0.5, 0.5, 10).validate().is_err());
        assert!(SweepConfig::rayleigh(0.0, 0.5, 1).validate().is_err());
        assert!(SweepConfig::rayleigh(0.0, 0.5, 2).validate().is_ok());
    }

    #[test]
    fn constant_family_has_no_boundaries() {
        let fam = AffineFamily {
            a: [3.0, 0.0],
            b: [-0.5, 0.0],
            c: [-4.0, 0.0],
        };
        let r = sweep(&SweepConfig::new(fam, 0.0, 1.0, 20), Execution::Sequential).unwrap();
        assert!(r.boundaries.is_empty());
        assert!(r.anomalies.is_empty());
        assert_eq!(r.verification.passed, 20);
    }

    #[test]
    fn physical_status_examples() {
        let q = 0.1;
        let s = physical_status(&iv(0.642857, false, 8.0 / 3.0, false), q, &[0.89913748]);
        assert_eq!(s, PhysicalStatus::Ambiguous { resolved: Some(true) });
        let s = physical_status(&iv(1.2, true, 1.5, true), 0.65, &[]);
        assert_eq!(s, PhysicalStatus::Unphysical);
        let s = physical_status(&iv(0.2, true, 0.9, false), 0.65, &[]);
        assert_eq!(s, PhysicalStatus::Physical);
        let s = physical_status(&iv(2.0, true, 3.0, false), 0.0, &[2.5]);
        assert_eq!(s, PhysicalStatus::Unphysical);
        assert!(!rayleigh_admissible(5.0, 0.0));
        assert!(rayleigh_admissible(12.0, 0.1));
    }
}
