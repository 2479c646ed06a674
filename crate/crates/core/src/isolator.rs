//! Isolation intervals with closed-form, provenance-tagged endpoints.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cases::{self, Atom, AtomContext, CaseSpec, End, Level};
use crate::cubic::MonicCubic;
use crate::error::{Error, Result};
use crate::landmarks::{harness, Harness, Landmarks};
use crate::regime::{classify, Classification, RootCount};
use crate::tolerance::Tolerance;

/// Symbolic provenance of an endpoint value.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Tag {
    Atom(Atom),
    MinOf(Vec<Tag>),
    MaxOf(Vec<Tag>),
    Sum(Box<Tag>, Box<Tag>),
    Difference(Box<Tag>, Box<Tag>),
}

impl Tag {
    fn from_end(end: &End) -> Tag {
        match end {
            End::Atom(a) => Tag::Atom(*a),
            End::Min(atoms) => Tag::MinOf(atoms.iter().map(|a| Tag::Atom(*a)).collect()),
            End::Max(atoms) => Tag::MaxOf(atoms.iter().map(|a| Tag::Atom(*a)).collect()),
        }
    }

    fn sum(x: Tag, y: Tag) -> Tag {
        Tag::Sum(Box::new(x), Box::new(y))
    }

    fn difference(x: Tag, y: Tag) -> Tag {
        Tag::Difference(Box::new(x), Box::new(y))
    }

    /// Re-evaluates the tag from scratch.
    pub fn eval(&self, ctx: &AtomContext) -> Option<f64> {
        match self {
            Tag::Atom(a) => ctx.value(*a),
            Tag::MinOf(ts) => ts
                .iter()
                .map(|t| t.eval(ctx))
                .try_fold(f64::INFINITY, |acc, v| v.map(|v| acc.min(v))),
            Tag::MaxOf(ts) => ts
                .iter()
                .map(|t| t.eval(ctx))
                .try_fold(f64::NEG_INFINITY, |acc, v| v.map(|v| acc.max(v))),
            Tag::Sum(x, y) => Some(x.eval(ctx)? + y.eval(ctx)?),
            Tag::Difference(x, y) => Some(x.eval(ctx)? - y.eval(ctx)?),
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn list(f: &mut fmt::Formatter<'_>, name: &str, ts: &[Tag]) -> fmt::Result {
            write!(f, "{name}(")?;
            for (i, t) in ts.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{t}")?;
            }
            f.write_str(")")
        }
        match self {
            Tag::Atom(a) => f.write_str(a.name()),
            Tag::MinOf(ts) => list(f, "min_of", ts),
            Tag::MaxOf(ts) => list(f, "max_of", ts),
            Tag::Sum(x, y) => write!(f, "{x} + {y}"),
            Tag::Difference(x, y) => write!(f, "({x} - {y})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Endpoint {
    pub value: f64,
    pub closed: bool,
    pub tag: Tag,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: Endpoint,
    pub hi: Endpoint,
    pub multiplicity: u8,
}

impl Interval {
    fn point(value: f64, tag: Tag, multiplicity: u8) -> Interval {
        let e = Endpoint {
            value,
            closed: true,
            tag,
        };
        Interval {
            lo: e.clone(),
            hi: e,
            multiplicity,
        }
    }

    pub fn is_point(&self) -> bool {
        self.lo.value == self.hi.value
    }

    /// Membership respecting open/closed ends, widened by `slack` on each side.
    pub fn contains(&self, x: f64, slack: f64) -> bool {
        let lo = self.lo.value - slack;
        let hi = self.hi.value + slack;
        let above = if self.lo.closed || slack > 0.0 { x >= lo } else { x > lo };
        let below = if self.hi.closed || slack > 0.0 { x <= hi } else { x < hi };
        above && below
    }

    pub fn width(&self) -> f64 {
        self.hi.value - self.lo.value
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let open = if self.lo.closed { '[' } else { '(' };
        let close = if self.hi.closed { ']' } else { ')' };
        write!(f, "{open}{:.10}, {:.10}{close}", self.lo.value, self.hi.value)
    }
}

/// `1 + H^(1/k)` data for one side.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundSide {
    /// Largest magnitude among the negative coefficients.
    pub h: f64,
    /// Position of the first negative coefficient, `None` when there is none.
    pub k: Option<u8>,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootBound {
    pub lower: f64,
    pub upper: f64,
    pub lower_side: BoundSide,
    pub upper_side: BoundSide,
}

/// Upper root bound of `x³ + c₁x² + c₂x + c₃`.
fn positive_root_bound(coeffs: [f64; 3]) -> (f64, BoundSide) {
    let k = coeffs.iter().position(|&x| x < 0.0);
    let h = coeffs
        .iter()
        .filter(|&&x| x < 0.0)
        .fold(0.0f64, |acc, x| acc.max(-x));
    match k {
        None => (0.0, BoundSide { h, k: None }),
        Some(i) => {
            let k = i as u8 + 1;
            (1.0 + h.powf(1.0 / f64::from(k)), BoundSide { h, k: Some(k) })
        }
    }
}

/// Outer root bounds `B_L ≤ x ≤ B_U`; the lower one is the upper bound of
/// the reflected cubic `−p(−x)`.
pub fn upper_lower_bounds(m: &MonicCubic) -> RootBound {
    let (upper, upper_side) = positive_root_bound([m.a, m.b, m.c]);
    let (neg_lower, lower_side) = positive_root_bound([-m.a, m.b, -m.c]);
    RootBound {
        lower: -neg_lower,
        upper,
        lower_side,
        upper_side,
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HarnessMode {
    /// Minimum-spread narrowing only.
    #[default]
    Min,
    Off,
    /// Minimum- and maximum-spread narrowing with per-case spread bounds.
    Demo,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundsMode {
    /// Case-specific bound formulas where a case states one.
    #[default]
    Figure,
    Generic,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsolateOptions {
    pub harness: HarnessMode,
    pub bounds: BoundsMode,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootIsolation {
    /// Ascending, one per distinct real root.
    pub intervals: Vec<Interval>,
    pub figure: u8,
    pub case: usize,
    pub harness_applied: bool,
    /// The `B_L`, `B_U` values substituted into the intervals.
    pub lower_bound: f64,
    pub upper_bound: f64,
}

impl RootIsolation {
    /// Context under which every endpoint tag re-evaluates to its value.
    pub fn atom_context(&self, landmarks: &Landmarks, c: f64) -> AtomContext {
        AtomContext {
            landmarks: *landmarks,
            c,
            lower_bound: self.lower_bound,
            upper_bound: self.upper_bound,
        }
    }
}

fn bounds_for(m: &MonicCubic, case: &CaseSpec, mode: BoundsMode) -> (f64, f64) {
    let generic = upper_lower_bounds(m);
    let (mut lower, mut upper) = (generic.lower, generic.upper);
    if let (BoundsMode::Figure, Some(b)) = (mode, case.bound) {
        if b.is_lower() {
            lower = b.value(m);
        } else {
            upper = b.value(m);
        }
    }
    (lower, upper)
}

fn atom_tag_for(value: f64, candidates: &[(Atom, Option<f64>)]) -> Tag {
    candidates
        .iter()
        .filter_map(|(a, v)| v.map(|v| (*a, (v - value).abs())))
        .min_by(|x, y| x.1.total_cmp(&y.1))
        .map(|(a, _)| Tag::Atom(a))
        .unwrap_or(Tag::Atom(Atom::Zero))
}

/// Point intervals for the cases whose roots are known in closed form.
fn point_intervals(cls: &Classification) -> Option<Vec<Interval>> {
    let lm = &cls.landmarks;
    let mu = [(Atom::Mu1, lm.mu1), (Atom::Mu2, lm.mu2)];
    let xi = [(Atom::Xi1, lm.xi1), (Atom::Xi2, lm.xi2)];
    let lambda = [(Atom::Lambda1, lm.lambda1), (Atom::Lambda2, lm.lambda2)];

    let mut out = if cls.zero_root.is_some() {
        match cls.count {
            RootCount::TripleRoot { .. } => vec![Interval::point(0.0, Tag::Atom(Atom::Zero), 3)],
            RootCount::DoubleSimple {
                double_at,
                simple_at,
            } => {
                let (d_tag, s_tag) = if double_at == 0.0 {
                    (Tag::Atom(Atom::Zero), atom_tag_for(simple_at, &lambda))
                } else {
                    (atom_tag_for(double_at, &lambda), Tag::Atom(Atom::Zero))
                };
                vec![
                    Interval::point(double_at, d_tag, 2),
                    Interval::point(simple_at, s_tag, 1),
                ]
            }
            RootCount::ThreeDistinct => {
                let z = cls.zero_root.as_ref()?;
                let [l2, l1] = z.roots?;
                vec![
                    Interval::point(l2, Tag::Atom(Atom::Lambda2), 1),
                    Interval::point(0.0, Tag::Atom(Atom::Zero), 1),
                    Interval::point(l1, Tag::Atom(Atom::Lambda1), 1),
                ]
            }
            RootCount::OneReal => vec![Interval::point(0.0, Tag::Atom(Atom::Zero), 1)],
        }
    } else {
        match cls.count {
            RootCount::TripleRoot { at } => vec![Interval::point(at, Tag::Atom(Atom::NegAThird), 3)],
            RootCount::DoubleSimple {
                double_at,
                simple_at,
            } => vec![
                Interval::point(double_at, atom_tag_for(double_at, &mu), 2),
                Interval::point(simple_at, atom_tag_for(simple_at, &xi), 1),
            ],
            RootCount::OneReal | RootCount::ThreeDistinct => return None,
        }
    };
    out.sort_by(|x, y| x.lo.value.total_cmp(&y.lo.value));
    Some(out)
}

/// Reads the isolation intervals of the located case off the figure table.
pub fn c_slot_intervals(cls: &Classification, bounds: BoundsMode) -> Result<RootIsolation> {
    let m = &cls.cubic;
    let fig = cases::figure(cls.regime.figure).ok_or(Error::NotApplicable("unknown figure"))?;
    let case = fig
        .case(cls.case)
        .ok_or(Error::NotApplicable("case index out of range for figure"))?;
    let (lower_bound, upper_bound) = bounds_for(m, case, bounds);

    let intervals = match point_intervals(cls) {
        Some(points) => points,
        None => {
            let ctx = AtomContext {
                landmarks: cls.landmarks,
                c: m.c,
                lower_bound,
                upper_bound,
            };
            let missing = Error::NotApplicable("case endpoint refers to an undefined landmark");
            let mut out = Vec::with_capacity(case.roots.len());
            for root in case.roots {
                let lo = root.lo.value(&ctx).ok_or(missing.clone())?;
                let hi = root.hi.value(&ctx).ok_or(missing.clone())?;
                out.push(Interval {
                    lo: Endpoint {
                        value: lo,
                        closed: root.lo_closed,
                        tag: Tag::from_end(&root.lo),
                    },
                    hi: Endpoint {
                        value: hi,
                        closed: root.hi_closed,
                        tag: Tag::from_end(&root.hi),
                    },
                    multiplicity: 1,
                });
            }
            out
        }
    };

    Ok(RootIsolation {
        intervals,
        figure: fig.id,
        case: cls.case,
        harness_applied: false,
        lower_bound,
        upper_bound,
    })
}

/// Spread bounds `(min, max)` with their provenance.
struct Spread {
    min: (f64, Tag),
    max: (f64, Tag),
}

fn tighten_lo(target: &mut Endpoint, candidate: f64, closed: bool, tag: Tag, hi: f64) -> bool {
    if candidate > target.value && candidate <= hi {
        let old = std::mem::replace(&mut target.tag, Tag::Atom(Atom::Zero));
        *target = Endpoint {
            value: candidate,
            closed,
            tag: Tag::MaxOf(vec![old, tag]),
        };
        true
    } else {
        false
    }
}

fn tighten_hi(target: &mut Endpoint, candidate: f64, closed: bool, tag: Tag, lo: f64) -> bool {
    if candidate < target.value && candidate >= lo {
        let old = std::mem::replace(&mut target.tag, Tag::Atom(Atom::Zero));
        *target = Endpoint {
            value: candidate,
            closed,
            tag: Tag::MinOf(vec![old, tag]),
        };
        true
    } else {
        false
    }
}

fn narrow(ri: &mut RootIsolation, spread: Spread, use_max: bool) -> bool {
    if ri.intervals.len() != 3 || ri.intervals.iter().any(|i| i.multiplicity != 1) {
        return false;
    }
    let mut changed = false;
    let (dmin, dmin_tag) = spread.min;
    let (dmax, dmax_tag) = spread.max;

    // Largest root x₁ sits at least `dmin` above the smallest root x₃.
    let x3_lo = ri.intervals[0].lo.clone();
    let x1_hi = ri.intervals[2].hi.value;
    changed |= tighten_lo(
        &mut ri.intervals[2].lo,
        x3_lo.value + dmin,
        x3_lo.closed,
        Tag::sum(x3_lo.tag.clone(), dmin_tag.clone()),
        x1_hi,
    );
    let x1_hi = ri.intervals[2].hi.clone();
    let x3_lo = ri.intervals[0].lo.value;
    changed |= tighten_hi(
        &mut ri.intervals[0].hi,
        x1_hi.value - dmin,
        x1_hi.closed,
        Tag::difference(x1_hi.tag.clone(), dmin_tag),
        x3_lo,
    );

    if use_max {
        let x3_hi = ri.intervals[0].hi.clone();
        let x1_lo = ri.intervals[2].lo.value;
        changed |= tighten_hi(
            &mut ri.intervals[2].hi,
            x3_hi.value + dmax,
            x3_hi.closed,
            Tag::sum(x3_hi.tag.clone(), dmax_tag.clone()),
            x1_lo,
        );
        let x1_lo = ri.intervals[2].lo.clone();
        let x3_hi = ri.intervals[0].hi.value;
        changed |= tighten_lo(
            &mut ri.intervals[0].lo,
            x1_lo.value - dmax,
            x1_lo.closed,
            Tag::difference(x1_lo.tag.clone(), dmax_tag),
            x3_hi,
        );
    }
    ri.harness_applied |= changed;
    changed
}

/// Minimum-spread narrowing: the largest and smallest of three real roots
/// are at least `h.lower` apart.
pub fn harness_narrow(ri: &RootIsolation, h: &Harness) -> RootIsolation {
    let mut out = ri.clone();
    if h.lower > 0.0 {
        let spread = Spread {
            min: (h.lower, Tag::Atom(Atom::HarnessLower)),
            max: (h.upper, Tag::Atom(Atom::HarnessUpper)),
        };
        narrow(&mut out, spread, false);
    }
    out
}

/// Root spread of the three-root cubic whose free term puts `K` at `level`.
fn level_spread(level: Level, lm: &Landmarks) -> Option<(f64, Tag)> {
    use Atom::*;
    let at = Tag::Atom;
    Some(match level {
        Level::NegC1 => (lm.mu1? - lm.xi1?, Tag::difference(at(Mu1), at(Xi1))),
        Level::NegC2 => (lm.xi2? - lm.mu2?, Tag::difference(at(Xi2), at(Mu2))),
        Level::NegC0 => (2.0 * lm.sigma?, at(HarnessUpper)),
        Level::Zero => {
            let (l1, l2) = (lm.lambda1?, lm.lambda2?);
            (
                l1.max(0.0) - l2.min(0.0),
                Tag::difference(
                    Tag::MaxOf(vec![at(Lambda1), at(Zero)]),
                    Tag::MinOf(vec![at(Lambda2), at(Zero)]),
                ),
            )
        }
        Level::NegAb => {
            let s = lm.sqrt_neg_b?;
            let a = -lm.a;
            (
                a.max(s) - a.min(-s),
                Tag::difference(
                    Tag::MaxOf(vec![at(NegA), at(SqrtNegB)]),
                    Tag::MinOf(vec![at(NegA), at(NegSqrtNegB)]),
                ),
            )
        }
    })
}

/// Spread bounds valid throughout the located case: the spread is unimodal in
/// `−c` with its peak `2σ` at `−c₀`, so it lies between the spreads at the
/// case's two threshold levels, or reaches `2σ` if `−c₀` is interior.
fn case_spread(cls: &Classification) -> Option<Spread> {
    let fig = cases::figure(cls.regime.figure)?;
    let case = fig.case(cls.case)?;
    let lm = &cls.landmarks;
    let lo_level = case.lower?.level;
    let hi_level = case.upper?.level;
    let lo = level_spread(lo_level, lm)?;
    let hi = level_spread(hi_level, lm)?;
    let peak = -lm.c0;
    let straddles = lo_level.value(lm)? < peak && peak < hi_level.value(lm)?;
    let (min, max) = if lo.0 <= hi.0 { (lo, hi) } else { (hi, lo) };
    let max = if straddles {
        (2.0 * lm.sigma?, Tag::Atom(Atom::HarnessUpper))
    } else {
        max
    };
    Some(Spread { min, max })
}

pub fn isolate(m: &MonicCubic, tol: &Tolerance) -> Result<RootIsolation> {
    isolate_with(m, tol, IsolateOptions::default())
}

pub fn isolate_with(m: &MonicCubic, tol: &Tolerance, opts: IsolateOptions) -> Result<RootIsolation> {
    let cls = classify(m, tol)?;
    isolate_classified(&cls, tol, opts)
}

/// Isolation for an already classified cubic.
pub fn isolate_classified(
    cls: &Classification,
    tol: &Tolerance,
    opts: IsolateOptions,
) -> Result<RootIsolation> {
    let mut ri = c_slot_intervals(cls, opts.bounds)?;
    if cls.count != RootCount::ThreeDistinct {
        return Ok(ri);
    }
    match opts.harness {
        HarnessMode::Off => {}
        HarnessMode::Min => {
            let h = harness(cls.cubic.a, cls.cubic.b, tol)?;
            ri = harness_narrow(&ri, &h);
        }
        HarnessMode::Demo => {
            if let Some(spread) = case_spread(cls) {
                narrow(&mut ri, spread, true);
            }
        }
    }
    Ok(ri)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(a: f64, b: f64, c: f64) -> MonicCubic {
        MonicCubic::new(a, b, c).unwrap()
    }

    fn close(x: f64, y: f64, eps: f64) {
        assert!((x - y).abs() <= eps, "{x} vs {y}");
    }

    #[test]
    fn bound_examples() {
        let rb = upper_lower_bounds(&m(3.0, -0.5, -4.0));
        assert_eq!(rb.upper, 3.0);
        assert_eq!(rb.upper_side, BoundSide { h: 4.0, k: Some(2) });

        let rb = upper_lower_bounds(&m(0.0, -1.0, 0.2));
        assert_eq!(rb.lower, -2.0);
        assert_eq!(rb.lower_side.k, Some(2));

        let rb = upper_lower_bounds(&m(1.0, 1.0, 1.0));
        assert_eq!(rb.upper, 0.0);
        assert_eq!(rb.upper_side.k, None);

        assert_eq!(upper_lower_bounds(&m(-2.0, 5.0, 1.0)).upper_side.k, Some(1));
        assert_eq!(upper_lower_bounds(&m(2.0, 5.0, -1.0)).upper_side.k, Some(3));
    }

    #[test]
    fn worked_example_intervals() {
        let t = Tolerance::default();
        let opts = IsolateOptions {
            harness: HarnessMode::Off,
            bounds: BoundsMode::Figure,
        };
        let ri = isolate_with(&m(3.0, -0.5, -4.0), &t, opts).unwrap();
        assert_eq!((ri.figure, ri.case), (7, 5));
        let expect = [(-2.8708, -2.0801), (-2.0801, -1.0), (0.8708, 1.1602)];
        for (iv, (lo, hi)) in ri.intervals.iter().zip(expect) {
            close(iv.lo.value, lo, 5e-5);
            close(iv.hi.value, hi, 5e-5);
            assert!(iv.lo.closed && iv.hi.closed);
        }
        let tags: Vec<_> = ri
            .intervals
            .iter()
            .map(|i| (i.lo.tag.to_string(), i.hi.tag.to_string()))
            .collect();
        assert_eq!(tags[0], ("rho2".into(), "mu2".into()));
        assert_eq!(tags[1], ("mu2".into(), "rho0".into()));
        assert_eq!(tags[2], ("rho1".into(), "xi2".into()));
    }

    #[test]
    fn depressed_negative_b_case_two() {
        let t = Tolerance::default();
        let ri = isolate(&m(0.0, -1.0, 0.2), &t).unwrap();
        assert_eq!((ri.figure, ri.case), (1, 2));
        let s3 = 3f64.sqrt() / 3.0;
        close(ri.intervals[0].lo.value, -2.0 * s3, 1e-15);
        close(ri.intervals[0].hi.value, -1.0, 1e-15);
        close(ri.intervals[1].lo.value, 0.2, 1e-15);
        close(ri.intervals[1].hi.value, s3, 1e-15);
        close(ri.intervals[2].lo.value, s3, 1e-15);
        close(ri.intervals[2].hi.value, 1.0, 1e-15);
    }

    #[test]
    fn closed_form_points() {
        let t = Tolerance::default();
        let ri = isolate(&m(-3.0, 3.0, -1.0), &t).unwrap();
        assert_eq!(ri.intervals.len(), 1);
        assert_eq!(ri.intervals[0].multiplicity, 3);
        assert_eq!(ri.intervals[0].lo.value, 1.0);
        assert_eq!(ri.intervals[0].lo.tag, Tag::Atom(Atom::NegAThird));

        let ri = isolate(&m(0.0, 0.0, -8.0), &t).unwrap();
        assert_eq!(ri.intervals.len(), 1);
        assert_eq!(ri.intervals[0].lo.value, 2.0);
        assert!(ri.intervals[0].is_point());

        let ri = isolate(&m(0.0, -3.0, 2.0), &t).unwrap();
        assert_eq!(ri.intervals.len(), 2);
        close(ri.intervals[0].lo.value, -2.0, 1e-12);
        assert_eq!(ri.intervals[0].multiplicity, 1);
        close(ri.intervals[1].lo.value, 1.0, 1e-12);
        assert_eq!(ri.intervals[1].multiplicity, 2);
        assert_eq!(ri.intervals[1].lo.tag, Tag::Atom(Atom::Mu1));
    }

    #[test]
    fn zero_free_term_points() {
        let t = Tolerance::default();
        let ri = isolate(&m(-1.0, -1.0, 0.0), &t).unwrap();
        let vals: Vec<f64> = ri.intervals.iter().map(|i| i.lo.value).collect();
        let s5 = 5f64.sqrt();
        close(vals[0], 0.5 - s5 / 2.0, 1e-15);
        assert_eq!(vals[1], 0.0);
        close(vals[2], 0.5 + s5 / 2.0, 1e-15);
    }

    #[test]
    fn rayleigh_single_interval() {
        let t = Tolerance::default();
        let q: f64 = 0.1;
        let ri = isolate(&m(-8.0, 8.0 * (3.0 - 2.0 * q), -16.0 * (1.0 - q)), &t).unwrap();
        assert_eq!(ri.intervals.len(), 1);
        close(ri.intervals[0].lo.value, (2.0 * q - 2.0) / (2.0 * q - 3.0), 1e-12);
        close(ri.intervals[0].hi.value, 8.0 / 3.0, 1e-12);
    }

    #[test]
    fn harness_narrowing_is_tagged() {
        let t = Tolerance::default();
        let cubic = m(-7.5, 10.0, 7.5);
        let plain = isolate_with(
            &cubic,
            &t,
            IsolateOptions {
                harness: HarnessMode::Off,
                ..Default::default()
            },
        )
        .unwrap();
        let h = harness(-7.5, 10.0, &t).unwrap();
        let narrowed = harness_narrow(&plain, &h);
        assert!(narrowed.harness_applied);
        for (p, n) in plain.intervals.iter().zip(&narrowed.intervals) {
            assert!(n.lo.value >= p.lo.value && n.hi.value <= p.hi.value);
        }
        let changed = narrowed
            .intervals
            .iter()
            .any(|i| matches!(i.lo.tag, Tag::MaxOf(_)) || matches!(i.hi.tag, Tag::MinOf(_)));
        assert!(changed);

        let flat = harness_narrow(&plain, &Harness { lower: 0.0, upper: 0.0 });
        assert_eq!(flat, plain);
    }

    #[test]
    fn tags_re_evaluate() {
        let t = Tolerance::default();
        for (a, b, c) in [(3.0, -0.5, -4.0), (0.0, -3.0, 0.1), (-8.0, 13.6, -5.6), (2.0, 1.0, 0.05)] {
            let cubic = m(a, b, c);
            let cls = classify(&cubic, &t).unwrap();
            for mode in [HarnessMode::Min, HarnessMode::Demo] {
                let ri = isolate_classified(&cls, &t, IsolateOptions { harness: mode, ..Default::default() }).unwrap();
                let ctx = ri.atom_context(&cls.landmarks, c);
                for iv in &ri.intervals {
                    for e in [&iv.lo, &iv.hi] {
                        close(e.tag.eval(&ctx).unwrap(), e.value, 1e-12 * e.value.abs().max(1.0));
                    }
                }
            }
        }
    }

    #[test]
    fn tag_display() {
        let t = Tag::MinOf(vec![Tag::Atom(Atom::COverB), Tag::Atom(Atom::Xi1)]);
        assert_eq!(t.to_string(), "min_of(c_over_b, xi1)");
        let s = Tag::sum(Tag::Atom(Atom::Rho2), Tag::Atom(Atom::HarnessLower));
        assert_eq!(s.to_string(), "rho2 + harness_lower");
    }
}
