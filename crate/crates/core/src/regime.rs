//! Coefficient regimes, real-root counting and sign classification.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cases::{self, AtomContext};
use crate::cubic::{zero_root_factor, MonicCubic, ZeroRootFactor};
use crate::error::{Error, Result};
use crate::isolator::upper_lower_bounds;
use crate::landmarks::{landmarks, Landmarks};
use crate::tolerance::Tolerance;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RegimeKind {
    DepressedBNeg,
    DepressedBZero,
    DepressedBPos,
    /// `b < −a²/9`
    R1,
    /// `−a²/9 ≤ b < 0`
    R2,
    /// `b = 0`
    R3,
    /// `0 < b ≤ 2a²/9`
    R4,
    /// `2a²/9 < b ≤ a²/4`
    R5,
    /// `a²/4 < b ≤ a²/3`
    R6,
    /// `b > a²/3`
    R7,
}

impl RegimeKind {
    fn index(self) -> Option<u8> {
        use RegimeKind::*;
        match self {
            DepressedBNeg | DepressedBZero | DepressedBPos => None,
            R1 => Some(1),
            R2 => Some(2),
            R3 => Some(3),
            R4 => Some(4),
            R5 => Some(5),
            R6 => Some(6),
            R7 => Some(7),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ASign {
    Negative,
    Zero,
    Positive,
}

/// Landmark identities whose proximity makes a decision tolerance-sensitive.
/// The same names label the boundaries found by parameter sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundaryFlag {
    AZero,
    BZero,
    BNegNinthA2,
    BTwoNinthsA2,
    BQuarterA2,
    BThirdA2,
    CZero,
    CEqC0,
    CEqC1,
    CEqC2,
    CEqNegAb,
}

impl BoundaryFlag {
    pub const ALL: [BoundaryFlag; 11] = [
        BoundaryFlag::AZero,
        BoundaryFlag::BZero,
        BoundaryFlag::BNegNinthA2,
        BoundaryFlag::BTwoNinthsA2,
        BoundaryFlag::BQuarterA2,
        BoundaryFlag::BThirdA2,
        BoundaryFlag::CZero,
        BoundaryFlag::CEqC0,
        BoundaryFlag::CEqC1,
        BoundaryFlag::CEqC2,
        BoundaryFlag::CEqNegAb,
    ];

    pub fn identity(self) -> &'static str {
        match self {
            BoundaryFlag::AZero => "a = 0",
            BoundaryFlag::BZero => "b = 0",
            BoundaryFlag::BNegNinthA2 => "b = -a^2/9",
            BoundaryFlag::BTwoNinthsA2 => "b = 2a^2/9",
            BoundaryFlag::BQuarterA2 => "b = a^2/4",
            BoundaryFlag::BThirdA2 => "b = a^2/3",
            BoundaryFlag::CZero => "c = 0",
            BoundaryFlag::CEqC0 => "c = c0",
            BoundaryFlag::CEqC1 => "c = c1",
            BoundaryFlag::CEqC2 => "c = c2",
            BoundaryFlag::CEqNegAb => "c = -ab",
        }
    }

    /// Signed gap whose zero is this identity; `None` where the landmark
    /// involved does not exist.
    pub fn gap(self, m: &MonicCubic) -> Option<f64> {
        let MonicCubic { a, b, c } = *m;
        let a2 = a * a;
        let extreme = || {
            let r = a2 - 3.0 * b;
            (r >= 0.0).then(|| {
                let c0 = -2.0 * a2 * a / 27.0 + a * b / 3.0;
                (c0, 2.0 / 27.0 * r * r.sqrt())
            })
        };
        match self {
            BoundaryFlag::AZero => Some(a),
            BoundaryFlag::BZero => Some(b),
            BoundaryFlag::BNegNinthA2 => Some(b + a2 / 9.0),
            BoundaryFlag::BTwoNinthsA2 => Some(b - 2.0 * a2 / 9.0),
            BoundaryFlag::BQuarterA2 => Some(b - a2 / 4.0),
            BoundaryFlag::BThirdA2 => Some(b - a2 / 3.0),
            BoundaryFlag::CZero => Some(c),
            BoundaryFlag::CEqC0 => Some(c - (-2.0 * a2 * a / 27.0 + a * b / 3.0)),
            BoundaryFlag::CEqC1 => extreme().map(|(c0, e)| c - (c0 + e)),
            BoundaryFlag::CEqC2 => extreme().map(|(c0, e)| c - (c0 - e)),
            BoundaryFlag::CEqNegAb => Some(c + a * b),
        }
    }
}

impl fmt::Display for BoundaryFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.identity())
    }
}

/// Whether any landmark identity holds to within `eps` (absolute).
pub fn near_any_boundary(m: &MonicCubic, eps: f64) -> bool {
    BoundaryFlag::ALL
        .iter()
        .any(|f| f.gap(m).is_some_and(|g| g.abs() < eps))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Regime {
    pub kind: RegimeKind,
    pub a_sign: ASign,
    pub figure: u8,
    pub flags: BTreeSet<BoundaryFlag>,
}

pub fn regime(a: f64, b: f64, tol: &Tolerance) -> Regime {
    let a2 = a * a;
    let mut flags = BTreeSet::new();
    if tol.near_zero(a, 1f64.max(b.abs().sqrt())) {
        flags.insert(BoundaryFlag::AZero);
    }
    if tol.near_zero(b, 1f64.max(a2)) {
        flags.insert(BoundaryFlag::BZero);
    }
    if a != 0.0 {
        for (flag, threshold) in [
            (BoundaryFlag::BNegNinthA2, -a2 / 9.0),
            (BoundaryFlag::BTwoNinthsA2, 2.0 * a2 / 9.0),
            (BoundaryFlag::BQuarterA2, a2 / 4.0),
            (BoundaryFlag::BThirdA2, a2 / 3.0),
        ] {
            if tol.near(b, threshold) {
                flags.insert(flag);
            }
        }
    }

    let (kind, a_sign) = if a == 0.0 {
        let kind = if b < 0.0 {
            RegimeKind::DepressedBNeg
        } else if b == 0.0 {
            RegimeKind::DepressedBZero
        } else {
            RegimeKind::DepressedBPos
        };
        (kind, ASign::Zero)
    } else {
        let kind = if b < -a2 / 9.0 {
            RegimeKind::R1
        } else if b < 0.0 {
            RegimeKind::R2
        } else if b == 0.0 {
            RegimeKind::R3
        } else if b <= 2.0 * a2 / 9.0 {
            RegimeKind::R4
        } else if b <= a2 / 4.0 {
            RegimeKind::R5
        } else if b <= a2 / 3.0 {
            RegimeKind::R6
        } else {
            RegimeKind::R7
        };
        let sign = if a > 0.0 { ASign::Positive } else { ASign::Negative };
        (kind, sign)
    };

    let figure = match (kind.index(), kind) {
        (Some(r), _) => 2 + 2 * r + u8::from(a_sign == ASign::Positive),
        (None, RegimeKind::DepressedBNeg) => 1,
        (None, RegimeKind::DepressedBZero) => 2,
        (None, _) => 3,
    };

    Regime {
        kind,
        a_sign,
        figure,
        flags,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RootCount {
    OneReal,
    ThreeDistinct,
    DoubleSimple { double_at: f64, simple_at: f64 },
    TripleRoot { at: f64 },
}

impl RootCount {
    pub fn distinct(&self) -> usize {
        match self {
            RootCount::OneReal | RootCount::TripleRoot { .. } => 1,
            RootCount::DoubleSimple { .. } => 2,
            RootCount::ThreeDistinct => 3,
        }
    }

    pub fn real_with_multiplicity(&self) -> usize {
        match self {
            RootCount::OneReal => 1,
            _ => 3,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            RootCount::OneReal => "one real root and a complex pair",
            RootCount::ThreeDistinct => "three distinct real roots",
            RootCount::DoubleSimple { .. } => "a double and a simple real root",
            RootCount::TripleRoot { .. } => "a triple real root",
        }
    }
}

pub fn count_real_roots(m: &MonicCubic, lm: &Landmarks, tol: &Tolerance) -> RootCount {
    let (Some(c1), Some(c2), Some(mu1), Some(mu2), Some(xi1), Some(xi2)) =
        (lm.c1, lm.c2, lm.mu1, lm.mu2, lm.xi1, lm.xi2)
    else {
        return RootCount::OneReal;
    };
    let c = m.c;
    let band = tol.band(lm.level_scale(c));
    if tol.near(lm.b, lm.a * lm.a / 3.0) {
        return if (c - lm.c0).abs() <= band {
            RootCount::TripleRoot { at: lm.rho0 }
        } else {
            RootCount::OneReal
        };
    }
    if (c - c1).abs() <= band {
        RootCount::DoubleSimple {
            double_at: mu1,
            simple_at: xi1,
        }
    } else if (c - c2).abs() <= band {
        RootCount::DoubleSimple {
            double_at: mu2,
            simple_at: xi2,
        }
    } else if c2 < c && c < c1 {
        RootCount::ThreeDistinct
    } else {
        RootCount::OneReal
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TableId {
    I,
    II,
    III,
    IV,
    V,
    VI,
    ZeroRootCase,
}

/// Root signs counted with multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignPattern {
    pub n_pos: u8,
    pub n_neg: u8,
    pub n_zero: u8,
    pub complex_pair: bool,
    pub table: TableId,
}

impl SignPattern {
    fn same_signs(&self, other: &SignPattern) -> bool {
        (self.n_pos, self.n_neg, self.n_zero, self.complex_pair)
            == (other.n_pos, other.n_neg, other.n_zero, other.complex_pair)
    }
}

impl fmt::Display for SignPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} positive, {} negative", self.n_pos, self.n_neg)?;
        if self.n_zero > 0 {
            write!(f, ", {} zero", self.n_zero)?;
        }
        if self.complex_pair {
            f.write_str(", complex pair")?;
        }
        Ok(())
    }
}

/// Summary-table prediction from the coefficients alone.
fn table_prediction(m: &MonicCubic, count: &RootCount) -> SignPattern {
    let MonicCubic { a, b, c } = *m;
    let (table, n_pos, n_neg) = match (count, c < 0.0) {
        (RootCount::OneReal, true) => (TableId::V, 1, 0),
        (RootCount::OneReal, false) => (TableId::VI, 0, 1),
        (_, true) if a < 0.0 && b > 0.0 => (TableId::I, 3, 0),
        (_, true) => (TableId::IV, 1, 2),
        (_, false) if a > 0.0 && b > 0.0 => (TableId::II, 0, 3),
        (_, false) => (TableId::III, 2, 1),
    };
    SignPattern {
        n_pos,
        n_neg,
        n_zero: 0,
        complex_pair: matches!(count, RootCount::OneReal),
        table,
    }
}

/// Sign of the root inside `[lo, hi]` given that `p(0) = c ≠ 0`.
fn interval_root_is_positive(m: &MonicCubic, lo: f64, hi: f64) -> bool {
    if lo >= 0.0 {
        return true;
    }
    if hi <= 0.0 {
        return false;
    }
    let c_sign = m.c > 0.0;
    let p_lo = m.eval(lo);
    if p_lo != 0.0 {
        return (p_lo > 0.0) == c_sign;
    }
    let p_hi = m.eval(hi);
    (p_hi > 0.0) != c_sign
}

fn tally(values: impl IntoIterator<Item = (bool, u8)>, complex_pair: bool, table: TableId) -> SignPattern {
    let (mut n_pos, mut n_neg) = (0, 0);
    for (positive, mult) in values {
        if positive {
            n_pos += mult;
        } else {
            n_neg += mult;
        }
    }
    SignPattern {
        n_pos,
        n_neg,
        n_zero: 0,
        complex_pair,
        table,
    }
}

/// Signs of the roots, derived both from the isolation intervals and from the
/// summary-table predicates on `(a, b, c)`; the two must agree.
pub fn sign_classify(
    m: &MonicCubic,
    regime: &Regime,
    count: &RootCount,
    lm: &Landmarks,
    tol: &Tolerance,
) -> Result<SignPattern> {
    if m.has_zero_free_term(tol) {
        return Err(Error::ZeroFreeTerm);
    }
    let predicted = table_prediction(m, count);
    let table = predicted.table;
    let from_intervals = match *count {
        RootCount::TripleRoot { at } => tally([(at > 0.0, 3)], false, table),
        RootCount::DoubleSimple {
            double_at,
            simple_at,
        } => tally([(double_at > 0.0, 2), (simple_at > 0.0, 1)], false, table),
        RootCount::OneReal | RootCount::ThreeDistinct => {
            let mismatch = |what: &str| Error::TableMismatch {
                from_intervals: what.to_string(),
                from_tables: predicted.to_string(),
                flags: regime.flags.iter().copied().collect(),
            };
            let fig = cases::figure(regime.figure).ok_or_else(|| mismatch("unknown figure"))?;
            let k = -m.c;
            let case = fig
                .locate(k, lm)
                .and_then(|i| fig.case(i))
                .ok_or_else(|| mismatch("no case for -c"))?;
            if case.roots.len() != count.distinct() {
                return Err(mismatch(&format!("case with {} roots", case.roots.len())));
            }
            let bound = upper_lower_bounds(m);
            let ctx = AtomContext {
                landmarks: *lm,
                c: m.c,
                lower_bound: bound.lower,
                upper_bound: bound.upper,
            };
            let mut signs = Vec::with_capacity(3);
            for root in case.roots {
                let (Some(lo), Some(hi)) = (root.lo.value(&ctx), root.hi.value(&ctx)) else {
                    return Err(mismatch("missing landmark"));
                };
                signs.push((interval_root_is_positive(m, lo, hi), 1));
            }
            tally(signs, matches!(count, RootCount::OneReal), table)
        }
    };
    if from_intervals.same_signs(&predicted) {
        Ok(predicted)
    } else {
        Err(Error::TableMismatch {
            from_intervals: from_intervals.to_string(),
            from_tables: predicted.to_string(),
            flags: regime.flags.iter().copied().collect(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Classification {
    pub cubic: MonicCubic,
    pub regime: Regime,
    pub count: RootCount,
    pub signs: SignPattern,
    /// 1-based case index within the regime's figure.
    pub case: usize,
    pub landmarks: Landmarks,
    pub zero_root: Option<ZeroRootFactor>,
    /// Regime flags plus the free-term flags of this particular cubic.
    pub flags: BTreeSet<BoundaryFlag>,
}

fn free_term_flags(m: &MonicCubic, lm: &Landmarks, tol: &Tolerance) -> BTreeSet<BoundaryFlag> {
    let mut flags = BTreeSet::new();
    let scale = 1f64
        .max(m.b.abs().sqrt())
        .max(m.c.abs().cbrt());
    if tol.near_zero(m.a, scale) {
        flags.insert(BoundaryFlag::AZero);
    }
    if m.has_zero_free_term(tol) {
        flags.insert(BoundaryFlag::CZero);
    }
    let band = tol.band(lm.level_scale(m.c));
    let mut check = |flag, level: Option<f64>| {
        if level.is_some_and(|v| (m.c - v).abs() <= band) {
            flags.insert(flag);
        }
    };
    check(BoundaryFlag::CEqC0, Some(lm.c0));
    check(BoundaryFlag::CEqC1, lm.c1);
    check(BoundaryFlag::CEqC2, lm.c2);
    check(BoundaryFlag::CEqNegAb, Some(-lm.ab));
    flags
}

/// Root count and signs of `x·(x² + ax + b)`.
fn zero_root_classification(z: &ZeroRootFactor, tol: &Tolerance) -> (RootCount, SignPattern) {
    let mut pattern = SignPattern {
        n_pos: 0,
        n_neg: 0,
        n_zero: 1,
        complex_pair: false,
        table: TableId::ZeroRootCase,
    };
    let Some([l2, l1]) = z.roots else {
        pattern.complex_pair = true;
        return (RootCount::OneReal, pattern);
    };
    let scale = 1f64.max(z.linear.abs()).max(z.constant.abs().sqrt());
    let is_zero = |x: f64| tol.near_zero(x, scale);
    for l in [l2, l1] {
        if is_zero(l) {
            pattern.n_zero += 1;
        } else if l > 0.0 {
            pattern.n_pos += 1;
        } else {
            pattern.n_neg += 1;
        }
    }
    let count = match (is_zero(l2), is_zero(l1), tol.near(l1, l2)) {
        (true, true, _) => RootCount::TripleRoot { at: 0.0 },
        (true, false, _) => RootCount::DoubleSimple {
            double_at: 0.0,
            simple_at: l1,
        },
        (false, true, _) => RootCount::DoubleSimple {
            double_at: 0.0,
            simple_at: l2,
        },
        (false, false, true) => RootCount::DoubleSimple {
            double_at: 0.5 * (l1 + l2),
            simple_at: 0.0,
        },
        (false, false, false) => RootCount::ThreeDistinct,
    };
    (count, pattern)
}

pub fn classify(m: &MonicCubic, tol: &Tolerance) -> Result<Classification> {
    let regime = regime(m.a, m.b, tol);
    let lm = landmarks(m.a, m.b, Some(m.c), tol);
    let fig = cases::figure(regime.figure).ok_or(Error::NotApplicable("unknown figure"))?;
    let case = fig
        .locate(-m.c, &lm)
        .ok_or(Error::NotApplicable("a threshold landmark is undefined for this regime"))?;
    let mut flags = regime.flags.clone();
    flags.extend(free_term_flags(m, &lm, tol));

    let (count, signs, zero_root) = if m.has_zero_free_term(tol) {
        let z = zero_root_factor(m, tol)?;
        let (count, signs) = zero_root_classification(&z, tol);
        (count, signs, Some(z))
    } else {
        let count = count_real_roots(m, &lm, tol);
        let signs = sign_classify(m, &regime, &count, &lm, tol)?;
        (count, signs, None)
    };

    Ok(Classification {
        cubic: *m,
        regime,
        count,
        signs,
        case,
        landmarks: lm,
        zero_root,
        flags,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(a: f64, b: f64, c: f64) -> MonicCubic {
        MonicCubic::new(a, b, c).unwrap()
    }

    #[test]
    fn regime_examples() {
        let t = Tolerance::default();
        let r = regime(3.0, -0.5, &t);
        assert_eq!((r.kind, r.a_sign, r.figure), (RegimeKind::R2, ASign::Positive, 7));
        assert_eq!(regime(0.0, -1.0, &t).figure, 1);
        let q = 0.1;
        let r = regime(-8.0, 8.0 * (3.0 - 2.0 * q), &t);
        assert_eq!((r.kind, r.figure), (RegimeKind::R7, 16));
    }

    #[test]
    fn figure_numbering_covers_all_regimes() {
        let t = Tolerance::default();
        let a: f64 = 3.0;
        let a2 = a * a;
        let bs = [-a2, -a2 / 9.0, -0.1, 0.0, 1.0, 2.0 * a2 / 9.0, 2.1, a2 / 4.0, 2.5, a2 / 3.0, 4.0];
        let expect = [4, 6, 6, 8, 10, 10, 12, 12, 14, 14, 16];
        for (b, fig) in bs.iter().zip(expect) {
            assert_eq!(regime(-a, *b, &t).figure, fig, "a<0 b={b}");
            assert_eq!(regime(a, *b, &t).figure, fig + 1, "a>0 b={b}");
        }
        assert_eq!(regime(0.0, 0.0, &t).figure, 2);
        assert_eq!(regime(0.0, 0.5, &t).figure, 3);
    }

    #[test]
    fn boundary_flags_raised_near_thresholds() {
        let t = Tolerance::default();
        let r = regime(3.0, 3.0 * (1.0 + 1e-13), &t);
        assert!(r.flags.contains(&BoundaryFlag::BThirdA2));
        let r = regime(3.0, -1.0, &t);
        assert!(r.flags.contains(&BoundaryFlag::BNegNinthA2));
        assert!(regime(3.0, -0.5, &t).flags.is_empty());
    }

    #[test]
    fn count_examples() {
        let t = Tolerance::default();
        let c = |a, b, cc| {
            let p = m(a, b, cc);
            count_real_roots(&p, &landmarks(a, b, Some(cc), &t), &t)
        };
        assert_eq!(c(3.0, -0.5, -4.0), RootCount::ThreeDistinct);
        assert_eq!(c(-3.0, 3.0, -1.0), RootCount::TripleRoot { at: 1.0 });
        match c(0.0, -3.0, 2.0) {
            RootCount::DoubleSimple { double_at, simple_at } => {
                assert!((double_at - 1.0).abs() < 1e-12);
                assert!((simple_at + 2.0).abs() < 1e-12);
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(c(1.0, 1.0, 1.0), RootCount::OneReal);
        assert_eq!(c(0.0, -3.0, 2.5), RootCount::OneReal);
    }

    #[test]
    fn sign_examples() {
        let t = Tolerance::default();
        let cls = classify(&m(3.0, -0.5, -4.0), &t).unwrap();
        assert_eq!((cls.signs.n_pos, cls.signs.n_neg, cls.signs.table), (1, 2, TableId::IV));
        assert_eq!((cls.regime.figure, cls.case), (7, 5));

        let cls = classify(&m(-8.0, 13.6, -5.6), &t).unwrap();
        assert_eq!((cls.signs.n_pos, cls.signs.table), (3, TableId::I));

        let cls = classify(&m(0.0, 0.0, -1.0), &t).unwrap();
        assert_eq!(
            (cls.signs.n_pos, cls.signs.complex_pair, cls.signs.table),
            (1, true, TableId::V)
        );
    }

    #[test]
    fn zero_free_term_is_routed() {
        let t = Tolerance::default();
        let p = m(3.0, -0.5, 0.0);
        let r = regime(3.0, -0.5, &t);
        let lm = landmarks(3.0, -0.5, Some(0.0), &t);
        assert_eq!(
            sign_classify(&p, &r, &RootCount::ThreeDistinct, &lm, &t),
            Err(Error::ZeroFreeTerm)
        );
        let cls = classify(&p, &t).unwrap();
        assert_eq!(cls.signs.table, TableId::ZeroRootCase);
        assert_eq!((cls.signs.n_pos, cls.signs.n_neg, cls.signs.n_zero), (1, 1, 1));

        let cls = classify(&m(0.0, 0.0, 0.0), &t).unwrap();
        assert_eq!(cls.count, RootCount::TripleRoot { at: 0.0 });
        assert_eq!(cls.signs.n_zero, 3);

        let cls = classify(&m(2.0, 0.0, 0.0), &t).unwrap();
        assert_eq!(
            cls.count,
            RootCount::DoubleSimple { double_at: 0.0, simple_at: -2.0 }
        );
    }

    #[test]
    fn rayleigh_low_q_is_one_real() {
        let t = Tolerance::default();
        let q = 0.1;
        let cls = classify(&m(-8.0, 8.0 * (3.0 - 2.0 * q), -16.0 * (1.0 - q)), &t).unwrap();
        assert_eq!(cls.count, RootCount::OneReal);
        assert_eq!((cls.regime.figure, cls.case), (16, 2));
    }

    #[test]
    fn gap_signs() {
        let p = m(3.0, -0.5, -4.0);
        assert_eq!(BoundaryFlag::CEqNegAb.gap(&p), Some(-5.5));
        assert!(BoundaryFlag::CEqC1.gap(&p).unwrap() < 0.0);
        assert!(BoundaryFlag::CEqC2.gap(&p).unwrap() > 0.0);
        assert!(BoundaryFlag::CEqC1.gap(&m(0.0, 1.0, 0.0)).is_none());
        assert!(!near_any_boundary(&p, 1e-7));
        assert!(near_any_boundary(&m(0.0, 1.0, 2.0), 1e-7));
    }
}
