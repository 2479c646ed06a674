//! The seventeen figure layouts as a declarative table.
//!
//! Each figure lists its cases in increasing order of `K = −c`. A case is a
//! half-open or closed range of `K` between two threshold levels drawn from
//! `{−c₁, −c₀, −ab, 0, −c₂}`, together with one endpoint pair per real root.
//! Endpoints are landmark atoms or the min/max of several atoms.

use serde::{Deserialize, Serialize};

use crate::cubic::MonicCubic;
use crate::landmarks::Landmarks;

/// Named closed-form quantity that can serve as an interval endpoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Atom {
    Xi1,
    Xi2,
    Mu1,
    Mu2,
    Rho0,
    Rho1,
    Rho2,
    Lambda1,
    Lambda2,
    NegA,
    NegAThird,
    SqrtNegB,
    NegSqrtNegB,
    COverB,
    Zero,
    LowerBound,
    UpperBound,
    CubeRoot,
    HarnessLower,
    HarnessUpper,
}

impl Atom {
    pub const ALL: [Atom; 20] = [
        Atom::Xi1,
        Atom::Xi2,
        Atom::Mu1,
        Atom::Mu2,
        Atom::Rho0,
        Atom::Rho1,
        Atom::Rho2,
        Atom::Lambda1,
        Atom::Lambda2,
        Atom::NegA,
        Atom::NegAThird,
        Atom::SqrtNegB,
        Atom::NegSqrtNegB,
        Atom::COverB,
        Atom::Zero,
        Atom::LowerBound,
        Atom::UpperBound,
        Atom::CubeRoot,
        Atom::HarnessLower,
        Atom::HarnessUpper,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Atom::Xi1 => "xi1",
            Atom::Xi2 => "xi2",
            Atom::Mu1 => "mu1",
            Atom::Mu2 => "mu2",
            Atom::Rho0 => "rho0",
            Atom::Rho1 => "rho1",
            Atom::Rho2 => "rho2",
            Atom::Lambda1 => "lambda1",
            Atom::Lambda2 => "lambda2",
            Atom::NegA => "neg_a",
            Atom::NegAThird => "neg_a_third",
            Atom::SqrtNegB => "sqrt_neg_b",
            Atom::NegSqrtNegB => "neg_sqrt_neg_b",
            Atom::COverB => "c_over_b",
            Atom::Zero => "zero",
            Atom::LowerBound => "B_L",
            Atom::UpperBound => "B_U",
            Atom::CubeRoot => "cbrt_closed_form",
            Atom::HarnessLower => "harness_lower",
            Atom::HarnessUpper => "harness_upper",
        }
    }

    pub fn from_name(name: &str) -> Option<Atom> {
        Atom::ALL.into_iter().find(|a| a.name() == name)
    }
}

/// Values for every atom of one particular cubic.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AtomContext {
    pub landmarks: Landmarks,
    pub c: f64,
    pub lower_bound: f64,
    pub upper_bound: f64,
}

impl AtomContext {
    pub fn value(&self, atom: Atom) -> Option<f64> {
        let lm = &self.landmarks;
        match atom {
            Atom::Xi1 => lm.xi1,
            Atom::Xi2 => lm.xi2,
            Atom::Mu1 => lm.mu1,
            Atom::Mu2 => lm.mu2,
            Atom::Rho0 | Atom::NegAThird => Some(lm.rho0),
            Atom::Rho1 => lm.rho1,
            Atom::Rho2 => lm.rho2,
            Atom::Lambda1 => lm.lambda1,
            Atom::Lambda2 => lm.lambda2,
            Atom::NegA => Some(-lm.a),
            Atom::SqrtNegB => lm.sqrt_neg_b,
            Atom::NegSqrtNegB => lm.neg_sqrt_neg_b(),
            Atom::COverB => lm.c_over_b,
            Atom::Zero => Some(0.0),
            Atom::LowerBound => Some(self.lower_bound),
            Atom::UpperBound => Some(self.upper_bound),
            Atom::CubeRoot => Some((-self.c).cbrt()),
            Atom::HarnessLower => lm.sigma.map(|s| 3f64.sqrt() * s),
            Atom::HarnessUpper => lm.sigma.map(|s| 2.0 * s),
        }
    }
}

/// Threshold levels for `K = −c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Level {
    NegC1,
    NegC0,
    NegC2,
    NegAb,
    Zero,
}

impl Level {
    pub fn value(self, lm: &Landmarks) -> Option<f64> {
        match self {
            Level::NegC1 => lm.c1.map(|c| -c),
            Level::NegC0 => Some(-lm.c0),
            Level::NegC2 => lm.c2.map(|c| -c),
            Level::NegAb => Some(-lm.ab),
            Level::Zero => Some(0.0),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Level::NegC1 => "-c1",
            Level::NegC0 => "-c0",
            Level::NegC2 => "-c2",
            Level::NegAb => "-ab",
            Level::Zero => "0",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Threshold {
    pub level: Level,
    pub inclusive: bool,
}

/// Endpoint expression of a case.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum End {
    Atom(Atom),
    Min(&'static [Atom]),
    Max(&'static [Atom]),
}

impl End {
    pub fn value(&self, ctx: &AtomContext) -> Option<f64> {
        match self {
            End::Atom(a) => ctx.value(*a),
            End::Min(atoms) => fold(atoms, ctx, f64::min),
            End::Max(atoms) => fold(atoms, ctx, f64::max),
        }
    }
}

fn fold(atoms: &[Atom], ctx: &AtomContext, f: fn(f64, f64) -> f64) -> Option<f64> {
    let mut acc: Option<f64> = None;
    for &a in atoms {
        let v = ctx.value(a)?;
        acc = Some(acc.map_or(v, |x| f(x, v)));
    }
    acc
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RootSpec {
    pub lo: End,
    pub lo_closed: bool,
    pub hi: End,
    pub hi_closed: bool,
}

/// Outer root bounds that some cases state in their own form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaptionBound {
    /// `−(1 + max{|b|, c})`
    LowerMaxAbsBC,
    /// `1 + max{|b|, |c|}`
    UpperMaxAbsBAbsC,
    /// `−(1 + √max{|b|, c})`
    LowerSqrtMaxAbsBC,
    /// `1 + max{|a|, |b|, |c|}`
    UpperMaxAbsABC,
    /// `−(1 + max{a, |b|, c})`
    LowerMaxAAbsBC,
    /// `1 + √max{|b|, |c|}`
    UpperSqrtMaxAbsBAbsC,
    /// `−max{1, c}`
    LowerMaxOneC,
    /// `1 + max{|a|, |c|}`
    UpperMaxAbsAAbsC,
    /// `−(1 + max{a, |c|})`
    LowerMaxAAbsC,
    /// `max{1, |c|}`
    UpperMaxOneAbsC,
}

impl CaptionBound {
    pub fn is_lower(self) -> bool {
        matches!(
            self,
            CaptionBound::LowerMaxAbsBC
                | CaptionBound::LowerSqrtMaxAbsBC
                | CaptionBound::LowerMaxAAbsBC
                | CaptionBound::LowerMaxOneC
                | CaptionBound::LowerMaxAAbsC
        )
    }

    pub fn value(self, m: &MonicCubic) -> f64 {
        let (a, b, c) = (m.a, m.b, m.c);
        match self {
            CaptionBound::LowerMaxAbsBC => -(1.0 + b.abs().max(c)),
            CaptionBound::UpperMaxAbsBAbsC => 1.0 + b.abs().max(c.abs()),
            CaptionBound::LowerSqrtMaxAbsBC => -(1.0 + b.abs().max(c).sqrt()),
            CaptionBound::UpperMaxAbsABC => 1.0 + a.abs().max(b.abs()).max(c.abs()),
            CaptionBound::LowerMaxAAbsBC => -(1.0 + a.max(b.abs()).max(c)),
            CaptionBound::UpperSqrtMaxAbsBAbsC => 1.0 + b.abs().max(c.abs()).sqrt(),
            CaptionBound::LowerMaxOneC => -(1f64.max(c)),
            CaptionBound::UpperMaxAbsAAbsC => 1.0 + a.abs().max(c.abs()),
            CaptionBound::LowerMaxAAbsC => -(1.0 + a.max(c.abs())),
            CaptionBound::UpperMaxOneAbsC => 1f64.max(c.abs()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CaseSpec {
    pub lower: Option<Threshold>,
    pub upper: Option<Threshold>,
    pub roots: &'static [RootSpec],
    pub bound: Option<CaptionBound>,
}

impl CaseSpec {
    /// Whether `k` satisfies both threshold conditions of this case.
    pub fn admits(&self, k: f64, lm: &Landmarks) -> Option<bool> {
        let lo_ok = match self.lower {
            None => true,
            Some(t) => {
                let v = t.level.value(lm)?;
                k > v || (t.inclusive && k == v)
            }
        };
        Some(lo_ok && self.below_upper(k, lm)?)
    }

    fn below_upper(&self, k: f64, lm: &Landmarks) -> Option<bool> {
        Some(match self.upper {
            None => true,
            Some(t) => {
                let v = t.level.value(lm)?;
                k < v || (t.inclusive && k == v)
            }
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FigureSpec {
    pub id: u8,
    pub cases: &'static [CaseSpec],
}

impl FigureSpec {
    /// 1-based index of the case containing `k`: the first case whose upper
    /// condition holds. Returns `None` if a threshold landmark is absent.
    pub fn locate(&self, k: f64, lm: &Landmarks) -> Option<usize> {
        for (i, case) in self.cases.iter().enumerate() {
            if case.below_upper(k, lm)? {
                return Some(i + 1);
            }
        }
        None
    }

    pub fn case(&self, id: usize) -> Option<&'static CaseSpec> {
        id.checked_sub(1).and_then(|i| self.cases.get(i))
    }

    /// Ordered threshold levels of this figure.
    pub fn levels(&self) -> Vec<Level> {
        self.cases.iter().filter_map(|c| c.upper.map(|t| t.level)).collect()
    }
}

pub fn figure(id: u8) -> Option<&'static FigureSpec> {
    FIGURES.iter().find(|f| f.id == id)
}

use Atom::*;
use Level::{NegAb, NegC0, NegC1, NegC2};

const O: bool = false;
const C: bool = true;

const fn at(a: Atom) -> End {
    End::Atom(a)
}

const fn r(lo: End, lo_closed: bool, hi: End, hi_closed: bool) -> RootSpec {
    RootSpec { lo, lo_closed, hi, hi_closed }
}

const fn gt(level: Level) -> Option<Threshold> {
    Some(Threshold { level, inclusive: false })
}

const fn ge(level: Level) -> Option<Threshold> {
    Some(Threshold { level, inclusive: true })
}

const fn lt(level: Level) -> Option<Threshold> {
    Some(Threshold { level, inclusive: false })
}

const fn le(level: Level) -> Option<Threshold> {
    Some(Threshold { level, inclusive: true })
}

const fn case(
    lower: Option<Threshold>,
    upper: Option<Threshold>,
    roots: &'static [RootSpec],
) -> CaseSpec {
    CaseSpec { lower, upper, roots, bound: None }
}

const fn bounded(
    lower: Option<Threshold>,
    upper: Option<Threshold>,
    roots: &'static [RootSpec],
    bound: CaptionBound,
) -> CaseSpec {
    CaseSpec { lower, upper, roots, bound: Some(bound) }
}

const BL: End = at(LowerBound);
const BU: End = at(UpperBound);
const XI1: End = at(Xi1);
const XI2: End = at(Xi2);
const MU1: End = at(Mu1);
const MU2: End = at(Mu2);
const RHO0: End = at(Rho0);
const RHO1: End = at(Rho1);
const RHO2: End = at(Rho2);
const L1: End = at(Lambda1);
const L2: End = at(Lambda2);
const NA: End = at(NegA);
const SB: End = at(SqrtNegB);
const NSB: End = at(NegSqrtNegB);
const CB: End = at(COverB);
const ZERO: End = at(Zero);
const CBRT: End = at(CubeRoot);

use CaptionBound as B;

pub static FIGURES: [FigureSpec; 17] = [
    // a = 0, b < 0
    FigureSpec {
        id: 1,
        cases: &[
            bounded(None, lt(NegC1), &[r(BL, O, XI1, O)], B::LowerMaxAbsBC),
            case(
                ge(NegC1),
                lt(Level::Zero),
                &[r(XI1, C, NSB, O), r(CB, O, MU1, C), r(MU1, C, SB, O)],
            ),
            case(
                ge(Level::Zero),
                le(NegC2),
                &[r(NSB, C, MU2, C), r(MU2, C, CB, C), r(SB, C, XI2, C)],
            ),
            bounded(gt(NegC2), None, &[r(XI2, O, BU, O)], B::UpperMaxAbsBAbsC),
        ],
    },
    // a = 0, b = 0
    FigureSpec {
        id: 2,
        cases: &[
            case(None, lt(Level::Zero), &[r(CBRT, C, CBRT, C)]),
            case(ge(Level::Zero), le(Level::Zero), &[r(ZERO, C, ZERO, C)]),
            case(gt(Level::Zero), None, &[r(CBRT, C, CBRT, C)]),
        ],
    },
    // a = 0, b > 0
    FigureSpec {
        id: 3,
        cases: &[
            case(None, le(Level::Zero), &[r(CB, O, ZERO, C)]),
            case(gt(Level::Zero), None, &[r(ZERO, O, CB, O)]),
        ],
    },
    // a < 0, b < −a²/9
    FigureSpec {
        id: 4,
        cases: &[
            bounded(None, lt(NegC1), &[r(BL, O, XI1, O)], B::LowerSqrtMaxAbsBC),
            case(
                ge(NegC1),
                lt(NegAb),
                &[
                    r(XI1, C, NSB, O),
                    r(End::Min(&[SqrtNegB, NegA]), O, MU1, C),
                    r(MU1, C, End::Max(&[SqrtNegB, NegA]), O),
                ],
            ),
            case(
                ge(NegAb),
                lt(NegC0),
                &[
                    r(NSB, C, RHO2, O),
                    r(RHO0, O, End::Min(&[COverB, SqrtNegB, NegA]), C),
                    r(End::Max(&[SqrtNegB, NegA]), C, RHO1, O),
                ],
            ),
            case(
                ge(NegC0),
                lt(Level::Zero),
                &[
                    r(RHO2, C, L2, O),
                    r(ZERO, O, End::Min(&[COverB, Rho0]), C),
                    r(RHO1, C, L1, O),
                ],
            ),
            case(
                ge(Level::Zero),
                le(NegC2),
                &[r(L2, C, MU2, C), r(MU2, C, CB, C), r(L1, C, XI2, C)],
            ),
            bounded(gt(NegC2), None, &[r(XI2, O, BU, O)], B::UpperMaxAbsABC),
        ],
    },
    // a > 0, b < −a²/9
    FigureSpec {
        id: 5,
        cases: &[
            bounded(None, lt(NegC1), &[r(BL, O, XI1, O)], B::LowerMaxAAbsBC),
            case(
                ge(NegC1),
                lt(Level::Zero),
                &[r(XI1, C, L2, O), r(CB, O, MU1, C), r(MU1, C, L1, O)],
            ),
            case(
                ge(Level::Zero),
                lt(NegC0),
                &[
                    r(L2, C, RHO2, O),
                    r(End::Max(&[COverB, Rho0]), O, ZERO, C),
                    r(L1, C, RHO1, O),
                ],
            ),
            case(
                ge(NegC0),
                lt(NegAb),
                &[
                    r(RHO2, C, End::Min(&[NegA, NegSqrtNegB]), O),
                    r(End::Max(&[COverB, NegA, NegSqrtNegB]), O, RHO0, C),
                    r(RHO1, C, SB, O),
                ],
            ),
            case(
                ge(NegAb),
                le(NegC2),
                &[
                    r(End::Min(&[NegA, NegSqrtNegB]), C, MU2, C),
                    r(MU2, C, End::Max(&[NegA, NegSqrtNegB]), C),
                    r(SB, C, XI2, C),
                ],
            ),
            bounded(gt(NegC2), None, &[r(XI2, O, BU, O)], B::UpperSqrtMaxAbsBAbsC),
        ],
    },
    // a < 0, −a²/9 ≤ b < 0
    FigureSpec {
        id: 6,
        cases: &[
            bounded(None, lt(NegC1), &[r(BL, O, XI1, O)], B::LowerSqrtMaxAbsBC),
            case(
                ge(NegC1),
                lt(NegC0),
                &[r(XI1, C, RHO2, O), r(RHO0, O, MU1, C), r(MU1, C, RHO1, O)],
            ),
            case(
                ge(NegC0),
                lt(NegAb),
                &[r(RHO2, C, NSB, O), r(SB, O, RHO0, C), r(RHO1, C, NA, O)],
            ),
            case(
                ge(NegAb),
                lt(Level::Zero),
                &[
                    r(NSB, C, L2, O),
                    r(ZERO, O, End::Min(&[COverB, SqrtNegB]), C),
                    r(NA, C, L1, O),
                ],
            ),
            case(
                ge(Level::Zero),
                le(NegC2),
                &[r(L2, C, MU2, C), r(MU2, C, CB, C), r(L1, C, XI2, C)],
            ),
            bounded(gt(NegC2), None, &[r(XI2, O, BU, O)], B::UpperMaxAbsABC),
        ],
    },
    // a > 0, −a²/9 ≤ b < 0
    FigureSpec {
        id: 7,
        cases: &[
            bounded(None, lt(NegC1), &[r(BL, O, XI1, O)], B::LowerMaxAAbsBC),
            case(
                ge(NegC1),
                lt(Level::Zero),
                &[r(XI1, C, L2, O), r(CB, O, MU1, C), r(MU1, C, L1, O)],
            ),
            case(
                ge(Level::Zero),
                lt(NegAb),
                &[
                    r(L2, C, NA, O),
                    r(End::Max(&[COverB, NegSqrtNegB]), O, ZERO, C),
                    r(L1, C, SB, O),
                ],
            ),
            case(
                ge(NegAb),
                lt(NegC0),
                &[r(NA, C, RHO2, O), r(RHO0, O, NSB, C), r(SB, C, RHO1, O)],
            ),
            case(
                ge(NegC0),
                le(NegC2),
                &[r(RHO2, C, MU2, C), r(MU2, C, RHO0, C), r(RHO1, C, XI2, C)],
            ),
            bounded(gt(NegC2), None, &[r(XI2, O, BU, O)], B::UpperSqrtMaxAbsBAbsC),
        ],
    },
    // a < 0, b = 0
    FigureSpec {
        id: 8,
        cases: &[
            bounded(None, lt(NegC1), &[r(BL, O, XI1, O)], B::LowerMaxOneC),
            case(
                ge(NegC1),
                lt(NegC0),
                &[r(XI1, C, RHO2, O), r(RHO0, O, MU1, C), r(MU1, C, RHO1, O)],
            ),
            case(
                ge(NegC0),
                le(Level::Zero),
                &[r(RHO2, C, ZERO, O), r(ZERO, O, RHO0, C), r(RHO1, C, NA, O)],
            ),
            bounded(gt(Level::Zero), None, &[r(NA, O, BU, O)], B::UpperMaxAbsAAbsC),
        ],
    },
    // a > 0, b = 0
    FigureSpec {
        id: 9,
        cases: &[
            bounded(None, lt(Level::Zero), &[r(BL, O, NA, O)], B::LowerMaxAAbsC),
            case(
                ge(Level::Zero),
                lt(NegC0),
                &[r(NA, C, RHO2, O), r(RHO0, O, ZERO, C), r(ZERO, C, RHO1, O)],
            ),
            case(
                ge(NegC0),
                le(NegC2),
                &[r(RHO2, C, MU2, C), r(MU2, C, RHO0, C), r(RHO1, C, XI2, C)],
            ),
            bounded(gt(NegC2), None, &[r(XI2, C, BU, O)], B::UpperMaxOneAbsC),
        ],
    },
    // a < 0, 0 < b ≤ 2a²/9
    FigureSpec {
        id: 10,
        cases: &[
            case(None, lt(NegC1), &[r(CB, O, XI1, O)]),
            case(
                ge(NegC1),
                lt(NegC0),
                &[
                    r(End::Max(&[COverB, Xi1]), C, RHO2, O),
                    r(RHO0, O, MU1, C),
                    r(MU1, C, RHO1, O),
                ],
            ),
            case(
                ge(NegC0),
                lt(Level::Zero),
                &[
                    r(End::Max(&[COverB, Rho2]), C, ZERO, O),
                    r(L2, O, RHO0, C),
                    r(RHO1, C, L1, O),
                ],
            ),
            case(
                ge(Level::Zero),
                le(NegC2),
                &[r(CB, C, MU2, C), r(MU2, C, L2, C), r(L1, C, XI2, C)],
            ),
            case(gt(NegC2), lt(NegAb), &[r(End::Max(&[COverB, Xi2]), O, NA, O)]),
            case(ge(NegAb), None, &[r(NA, C, CB, C)]),
        ],
    },
    // a > 0, 0 < b ≤ 2a²/9
    FigureSpec {
        id: 11,
        cases: &[
            case(None, lt(NegAb), &[r(CB, O, NA, O)]),
            case(ge(NegAb), lt(NegC1), &[r(NA, C, End::Min(&[COverB, Xi1]), O)]),
            case(
                ge(NegC1),
                lt(Level::Zero),
                &[r(XI1, C, L2, O), r(L1, O, MU1, C), r(MU1, C, CB, O)],
            ),
            case(
                ge(Level::Zero),
                lt(NegC0),
                &[
                    r(L2, C, RHO2, O),
                    r(RHO0, O, L1, C),
                    r(ZERO, C, End::Min(&[COverB, Rho1]), O),
                ],
            ),
            case(
                ge(NegC0),
                le(NegC2),
                &[
                    r(RHO2, C, MU2, C),
                    r(MU2, C, RHO0, C),
                    r(RHO1, C, End::Min(&[COverB, Xi2]), C),
                ],
            ),
            case(gt(NegC2), None, &[r(XI2, O, CB, O)]),
        ],
    },
    // a < 0, 2a²/9 < b ≤ a²/4
    FigureSpec {
        id: 12,
        cases: &[
            case(None, lt(NegC1), &[r(CB, O, XI1, O)]),
            case(
                ge(NegC1),
                lt(Level::Zero),
                &[
                    r(End::Max(&[COverB, Xi1]), C, ZERO, O),
                    r(L2, O, MU1, C),
                    r(MU1, C, L1, O),
                ],
            ),
            case(
                ge(Level::Zero),
                lt(NegC0),
                &[r(CB, C, RHO2, O), r(RHO0, O, L2, C), r(L1, C, RHO1, O)],
            ),
            case(
                ge(NegC0),
                le(NegC2),
                &[
                    r(End::Max(&[Rho2, COverB]), C, MU2, C),
                    r(MU2, C, RHO0, C),
                    r(RHO1, C, XI2, C),
                ],
            ),
            case(gt(NegC2), le(NegAb), &[r(End::Max(&[COverB, Xi2]), O, NA, C)]),
            case(gt(NegAb), None, &[r(NA, O, CB, O)]),
        ],
    },
    // a > 0, 2a²/9 < b ≤ a²/4
    FigureSpec {
        id: 13,
        cases: &[
            case(None, lt(NegAb), &[r(CB, O, NA, O)]),
            case(ge(NegAb), lt(NegC1), &[r(NA, C, End::Min(&[COverB, Xi1]), O)]),
            case(
                ge(NegC1),
                lt(NegC0),
                &[
                    r(XI1, C, RHO2, O),
                    r(RHO0, O, MU1, C),
                    r(MU1, C, End::Min(&[COverB, Rho1]), O),
                ],
            ),
            case(
                ge(NegC0),
                lt(Level::Zero),
                &[r(RHO2, C, L2, O), r(L1, O, RHO0, C), r(RHO1, C, CB, O)],
            ),
            case(
                ge(Level::Zero),
                le(NegC2),
                &[
                    r(L2, C, MU2, C),
                    r(MU2, C, L1, C),
                    r(ZERO, C, End::Min(&[COverB, Xi2]), C),
                ],
            ),
            case(gt(NegC2), None, &[r(XI2, O, CB, O)]),
        ],
    },
    // a < 0, a²/4 < b ≤ a²/3
    FigureSpec {
        id: 14,
        cases: &[
            case(None, lt(Level::Zero), &[r(CB, O, ZERO, O)]),
            case(ge(Level::Zero), lt(NegC1), &[r(CB, C, XI1, O)]),
            case(
                ge(NegC1),
                lt(NegC0),
                &[
                    r(End::Max(&[COverB, Xi1]), C, RHO2, O),
                    r(RHO0, O, MU1, C),
                    r(MU1, C, RHO1, O),
                ],
            ),
            case(
                ge(NegC0),
                le(NegC2),
                &[
                    r(End::Max(&[COverB, Rho2]), C, MU2, C),
                    r(MU2, C, RHO0, C),
                    r(RHO1, C, XI2, C),
                ],
            ),
            case(gt(NegC2), le(NegAb), &[r(End::Max(&[COverB, Xi2]), O, NA, C)]),
            case(gt(NegAb), None, &[r(NA, O, CB, O)]),
        ],
    },
    // a > 0, a²/4 < b ≤ a²/3
    FigureSpec {
        id: 15,
        cases: &[
            case(None, lt(NegAb), &[r(CB, O, NA, O)]),
            case(ge(NegAb), lt(NegC1), &[r(NA, C, End::Min(&[COverB, Xi1]), O)]),
            case(
                ge(NegC1),
                lt(NegC0),
                &[
                    r(XI1, C, RHO2, O),
                    r(RHO0, O, MU1, C),
                    r(MU1, C, End::Min(&[COverB, Rho1]), C),
                ],
            ),
            case(
                ge(NegC0),
                le(NegC2),
                &[
                    r(RHO2, C, MU2, C),
                    r(MU2, C, RHO0, C),
                    r(RHO1, C, End::Min(&[COverB, Xi2]), C),
                ],
            ),
            case(gt(NegC2), le(Level::Zero), &[r(XI2, O, CB, C)]),
            case(gt(Level::Zero), None, &[r(ZERO, O, CB, O)]),
        ],
    },
    // a < 0, b > a²/3
    FigureSpec {
        id: 16,
        cases: &[
            case(None, lt(Level::Zero), &[r(CB, O, ZERO, O)]),
            case(ge(Level::Zero), lt(NegC0), &[r(CB, C, RHO0, O)]),
            case(ge(NegC0), lt(NegAb), &[r(End::Max(&[COverB, Rho0]), C, NA, O)]),
            case(ge(NegAb), None, &[r(NA, C, CB, C)]),
        ],
    },
    // a > 0, b > a²/3
    FigureSpec {
        id: 17,
        cases: &[
            case(None, lt(NegAb), &[r(CB, O, NA, O)]),
            case(ge(NegAb), lt(NegC0), &[r(NA, C, End::Min(&[COverB, Rho0]), O)]),
            case(ge(NegC0), lt(Level::Zero), &[r(RHO0, C, CB, O)]),
            case(ge(Level::Zero), None, &[r(ZERO, C, CB, O)]),
        ],
    },
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tolerance::Tolerance;

    #[test]
    fn figure_ids_are_sequential() {
        for (i, f) in FIGURES.iter().enumerate() {
            assert_eq!(f.id as usize, i + 1);
        }
    }

    #[test]
    fn consecutive_cases_share_thresholds() {
        for f in &FIGURES {
            assert!(f.cases.first().unwrap().lower.is_none(), "figure {}", f.id);
            assert!(f.cases.last().unwrap().upper.is_none(), "figure {}", f.id);
            for w in f.cases.windows(2) {
                let (hi, lo) = (w[0].upper.unwrap(), w[1].lower.unwrap());
                assert_eq!(hi.level, lo.level, "figure {}", f.id);
                assert_ne!(hi.inclusive, lo.inclusive, "figure {}", f.id);
            }
        }
    }

    #[test]
    fn caption_bounds_only_on_outer_cases() {
        for f in &FIGURES {
            for (i, c) in f.cases.iter().enumerate() {
                if let Some(b) = c.bound {
                    assert_eq!(c.roots.len(), 1);
                    let first = i == 0;
                    assert_eq!(b.is_lower(), first, "figure {} case {}", f.id, i + 1);
                }
            }
        }
    }

    #[test]
    fn atom_names_round_trip() {
        for a in Atom::ALL {
            assert_eq!(Atom::from_name(a.name()), Some(a));
        }
    }

    #[test]
    fn locates_worked_example() {
        let lm = Landmarks::new(3.0, -0.5, &Tolerance::default());
        assert_eq!(figure(7).unwrap().locate(4.0, &lm), Some(5));
        assert_eq!(figure(7).unwrap().locate(-1.0, &lm), Some(1));
        assert_eq!(figure(7).unwrap().locate(6.0, &lm), Some(6));
    }
}
