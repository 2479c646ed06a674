//! Coefficient types, normalization and the elementary cubic quantities.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tolerance::Tolerance;

/// `x3·x³ + x2·x² + x1·x + x0` with `x3 ≠ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneralCubic {
    pub x3: f64,
    pub x2: f64,
    pub x1: f64,
    pub x0: f64,
}

/// `x³ + a·x² + b·x + c`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MonicCubic {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

/// `t³ + p·t + q`, obtained from a monic cubic by `x = t − shift`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DepressedCubic {
    pub p: f64,
    pub q: f64,
    pub shift: f64,
}

/// A monic cubic with vanishing free term, split as `x · (x² + a·x + b)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZeroRootFactor {
    pub linear: f64,
    pub constant: f64,
    /// Real roots of the residual quadratic in ascending order, if any.
    pub roots: Option<[f64; 2]>,
}

fn check_finite(x: f64, name: &'static str) -> Result<f64> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(Error::NonFinite(name))
    }
}

impl GeneralCubic {
    pub fn new(x3: f64, x2: f64, x1: f64, x0: f64) -> Result<Self> {
        Ok(GeneralCubic {
            x3: check_finite(x3, "A")?,
            x2: check_finite(x2, "B")?,
            x1: check_finite(x1, "C")?,
            x0: check_finite(x0, "D")?,
        })
    }

    pub fn monicize(&self) -> Result<MonicCubic> {
        monicize(self)
    }
}

impl MonicCubic {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        Ok(MonicCubic {
            a: check_finite(a, "a")?,
            b: check_finite(b, "b")?,
            c: check_finite(c, "c")?,
        })
    }

    /// Horner evaluation.
    #[inline]
    pub fn eval(&self, x: f64) -> f64 {
        ((x + self.a) * x + self.b) * x + self.c
    }

    /// `max(1, |a|, |b|, |c|)`
    pub fn coefficient_scale(&self) -> f64 {
        1f64.max(self.a.abs()).max(self.b.abs()).max(self.c.abs())
    }

    /// Sum of the magnitudes of the terms of `p(x)`; the natural yardstick
    /// for the rounding error of [`MonicCubic::eval`].
    pub fn magnitude_at(&self, x: f64) -> f64 {
        let ax = x.abs();
        ax * ax * ax + self.a.abs() * ax * ax + self.b.abs() * ax + self.c.abs()
    }

    /// Scale against which `c ≈ 0` is decided.
    pub(crate) fn free_term_scale(&self) -> f64 {
        1f64.max(self.a.abs()).max(self.b.abs())
    }

    pub fn has_zero_free_term(&self, tol: &Tolerance) -> bool {
        tol.near_zero(self.c, self.free_term_scale())
    }
}

pub fn monicize(g: &GeneralCubic) -> Result<MonicCubic> {
    if g.x3 == 0.0 {
        return Err(Error::DegenerateLeadingCoefficient);
    }
    MonicCubic::new(g.x2 / g.x3, g.x1 / g.x3, g.x0 / g.x3)
}

pub fn depress(m: &MonicCubic) -> DepressedCubic {
    let MonicCubic { a, b, c } = *m;
    DepressedCubic {
        p: b - a * a / 3.0,
        q: 2.0 * a * a * a / 27.0 - a * b / 3.0 + c,
        shift: a / 3.0,
    }
}

/// `Δ = −27c² + (18ab − 4a³)c + a²b² − 4b³`
pub fn discriminant(m: &MonicCubic) -> f64 {
    let MonicCubic { a, b, c } = *m;
    -27.0 * c * c + (18.0 * a * b - 4.0 * a * a * a) * c + a * a * b * b - 4.0 * b * b * b
}

/// `δ = −4p³ − 27q²`
pub fn depressed_discriminant(d: &DepressedCubic) -> f64 {
    -4.0 * d.p * d.p * d.p - 27.0 * d.q * d.q
}

pub fn evaluate(m: &MonicCubic, x: f64) -> f64 {
    m.eval(x)
}

/// Factors out the zero root of a cubic whose free term vanishes.
pub fn zero_root_factor(m: &MonicCubic, tol: &Tolerance) -> Result<ZeroRootFactor> {
    let scale = m.free_term_scale();
    if !tol.near_zero(m.c, scale) {
        return Err(Error::NotZeroFreeTerm {
            c: m.c,
            limit: tol.band(scale),
        });
    }
    let (a, b) = (m.a, m.b);
    let mut radicand = a * a / 4.0 - b;
    if radicand < 0.0 && tol.near_zero(radicand, (a * a / 4.0).max(b.abs()).max(1.0)) {
        radicand = 0.0;
    }
    let roots = (radicand >= 0.0).then(|| {
        let r = radicand.sqrt();
        [-a / 2.0 - r, -a / 2.0 + r]
    });
    Ok(ZeroRootFactor {
        linear: a,
        constant: b,
        roots,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(a: f64, b: f64, c: f64) -> MonicCubic {
        MonicCubic::new(a, b, c).unwrap()
    }

    #[test]
    fn monicize_examples() {
        let g = GeneralCubic::new(2.0, 6.0, -1.0, -8.0).unwrap();
        assert_eq!(monicize(&g).unwrap(), m(3.0, -0.5, -4.0));
        let g = GeneralCubic::new(1.0, 0.0, 0.0, 0.0).unwrap();
        assert_eq!(monicize(&g).unwrap(), m(0.0, 0.0, 0.0));
        let g = GeneralCubic::new(-1.0, 3.0, -0.5, 4.0).unwrap();
        assert_eq!(monicize(&g).unwrap(), m(-3.0, 0.5, -4.0));
    }

    #[test]
    fn monicize_rejects_zero_lead() {
        let g = GeneralCubic::new(0.0, 1.0, 2.0, 3.0).unwrap();
        assert_eq!(monicize(&g), Err(Error::DegenerateLeadingCoefficient));
    }

    #[test]
    fn non_finite_rejected() {
        assert_eq!(MonicCubic::new(f64::NAN, 0.0, 0.0), Err(Error::NonFinite("a")));
        assert!(GeneralCubic::new(1.0, f64::INFINITY, 0.0, 0.0).is_err());
    }

    #[test]
    fn depress_examples() {
        let d = depress(&m(3.0, -0.5, -4.0));
        assert!((d.p + 3.5).abs() < 1e-15);
        assert!((d.q + 1.5).abs() < 1e-15);
        assert_eq!(d.shift, 1.0);

        let d = depress(&m(0.0, 2.5, -7.0));
        assert_eq!((d.p, d.q, d.shift), (2.5, -7.0, 0.0));

        let d = depress(&m(-3.0, 3.0, -1.0));
        assert_eq!((d.p, d.q, d.shift), (0.0, 0.0, -1.0));
    }

    #[test]
    fn discriminant_examples() {
        assert!((discriminant(&m(3.0, -0.5, -4.0)) - 110.75).abs() < 1e-12);
        assert_eq!(discriminant(&m(0.0, 0.0, 0.0)), 0.0);
        let (p, q) = (-1.7, 0.4);
        assert_eq!(discriminant(&m(0.0, p, q)), -4.0 * p * p * p - 27.0 * q * q);
    }

    #[test]
    fn depressed_discriminant_examples() {
        let d = DepressedCubic { p: -3.5, q: -1.5, shift: 1.0 };
        assert!((depressed_discriminant(&d) - 110.75).abs() < 1e-12);
        let d = DepressedCubic { p: 0.0, q: 0.0, shift: 0.0 };
        assert_eq!(depressed_discriminant(&d), 0.0);
        // (x − 1)²(x + 2)
        let d = DepressedCubic { p: -3.0, q: 2.0, shift: 0.0 };
        assert_eq!(depressed_discriminant(&d), 0.0);
    }

    #[test]
    fn evaluate_examples() {
        let p = m(3.0, -0.5, -4.0);
        assert_eq!(evaluate(&p, 0.0), -4.0);
        assert_eq!(evaluate(&p, 1.0), -0.5);
    }

    #[test]
    fn zero_root_examples() {
        let t = Tolerance::default();
        let f = zero_root_factor(&m(3.0, -0.5, 0.0), &t).unwrap();
        assert_eq!((f.linear, f.constant), (3.0, -0.5));

        let f = zero_root_factor(&m(0.0, 0.0, 0.0), &t).unwrap();
        assert_eq!(f.roots, Some([0.0, 0.0]));

        let f = zero_root_factor(&m(-1.0, -1.0, 0.0), &t).unwrap();
        let [l2, l1] = f.roots.unwrap();
        let s5 = 5f64.sqrt();
        assert!((l1 - (0.5 + s5 / 2.0)).abs() < 1e-15);
        assert!((l2 - (0.5 - s5 / 2.0)).abs() < 1e-15);

        assert!(zero_root_factor(&m(1.0, 1.0, 0.01), &t).is_err());
        assert!(zero_root_factor(&m(0.0, 1.0, 0.0), &t).unwrap().roots.is_none());
    }
}
