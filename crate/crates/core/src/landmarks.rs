//! Closed-form landmarks of a cubic family `x³ + ax² + bx + c` at fixed `(a, b)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tolerance::Tolerance;

/// Every closed-form quantity used as a case threshold or interval endpoint.
///
/// The fields that depend on a square root are `None` when the radicand is
/// negative beyond tolerance. Radicands within tolerance of zero are clamped,
/// so at `b = a²/3` the pairs `μ₁ = μ₂`, `ρ₁ = ρ₂`, `c₁ = c₂` are present and
/// equal, and at `b = a²/4` so are `λ₁ = λ₂`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Landmarks {
    pub a: f64,
    pub b: f64,
    /// `√(a²/3 − b)`
    pub sigma: Option<f64>,
    pub c0: f64,
    pub c1: Option<f64>,
    pub c2: Option<f64>,
    pub mu1: Option<f64>,
    pub mu2: Option<f64>,
    pub xi1: Option<f64>,
    pub xi2: Option<f64>,
    pub rho0: f64,
    pub rho1: Option<f64>,
    pub rho2: Option<f64>,
    pub lambda1: Option<f64>,
    pub lambda2: Option<f64>,
    pub ab: f64,
    pub c_over_b: Option<f64>,
    pub sqrt_neg_b: Option<f64>,
}

/// Bounds on the spread `max root − min root` of a cubic with three real roots.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Harness {
    pub lower: f64,
    pub upper: f64,
}

/// `Some(√r)` for `r ≥ 0`, `Some(0)` when `r` is negative but within
/// tolerance of `threshold − b`, and `None` otherwise.
fn clamped_sqrt(radicand: f64, b: f64, threshold: f64, tol: &Tolerance) -> Option<f64> {
    if radicand >= 0.0 {
        Some(radicand.sqrt())
    } else if tol.near(b, threshold) {
        Some(0.0)
    } else {
        None
    }
}

impl Landmarks {
    pub fn new(a: f64, b: f64, tol: &Tolerance) -> Self {
        let third_a2 = a * a / 3.0;
        let sigma = clamped_sqrt(third_a2 - b, b, third_a2, tol);
        let c0 = -2.0 * a * a * a / 27.0 + a * b / 3.0;
        let rho0 = -a / 3.0;

        // (2/27)(a² − 3b)^{3/2} = (2√3/9)·σ³
        let extreme = sigma.map(|s| 2.0 * 3f64.sqrt() / 9.0 * s * s * s);
        let mu_offset = sigma.map(|s| s / 3f64.sqrt());
        let mu1 = mu_offset.map(|d| rho0 + d);
        let mu2 = mu_offset.map(|d| rho0 - d);

        let quarter_a2 = a * a / 4.0;
        let lam = clamped_sqrt(quarter_a2 - b, b, quarter_a2, tol);

        Landmarks {
            a,
            b,
            sigma,
            c0,
            c1: extreme.map(|e| c0 + e),
            c2: extreme.map(|e| c0 - e),
            mu1,
            mu2,
            xi1: mu1.map(|m| -a - 2.0 * m),
            xi2: mu2.map(|m| -a - 2.0 * m),
            rho0,
            rho1: sigma.map(|s| rho0 + s),
            rho2: sigma.map(|s| rho0 - s),
            lambda1: lam.map(|t| -a / 2.0 + t),
            lambda2: lam.map(|t| -a / 2.0 - t),
            ab: a * b,
            c_over_b: None,
            sqrt_neg_b: (b < 0.0).then(|| (-b).sqrt()),
        }
    }

    /// Attaches `−c/b` for a particular member of the family.
    pub fn with_free_term(mut self, c: f64) -> Self {
        self.c_over_b = (self.b != 0.0).then(|| -c / self.b);
        self
    }

    pub fn neg_sqrt_neg_b(&self) -> Option<f64> {
        self.sqrt_neg_b.map(|s| -s)
    }

    /// `g(x) = x³ + ax² + bx`, the cubic without its free term.
    #[inline]
    pub fn level(&self, x: f64) -> f64 {
        ((x + self.a) * x + self.b) * x
    }

    /// Magnitude against which free terms are compared to the extreme
    /// values `c₀`, `c₁`, `c₂`.
    pub fn level_scale(&self, c: f64) -> f64 {
        let mut s = 1f64.max(c.abs()).max(self.c0.abs()).max(self.ab.abs());
        if let Some(c1) = self.c1 {
            s = s.max(c1.abs());
        }
        if let Some(c2) = self.c2 {
            s = s.max(c2.abs());
        }
        s
    }
}

pub fn landmarks(a: f64, b: f64, c: Option<f64>, tol: &Tolerance) -> Landmarks {
    let lm = Landmarks::new(a, b, tol);
    match c {
        Some(c) => lm.with_free_term(c),
        None => lm,
    }
}

pub fn harness(a: f64, b: f64, tol: &Tolerance) -> Result<Harness> {
    let third_a2 = a * a / 3.0;
    let s = clamped_sqrt(third_a2 - b, b, third_a2, tol)
        .ok_or(Error::NotApplicable("root harness needs b <= a^2/3"))?;
    Ok(Harness {
        lower: 3f64.sqrt() * s,
        upper: 2.0 * s,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(x: f64, y: f64, eps: f64) {
        assert!((x - y).abs() <= eps, "{x} vs {y}");
    }

    #[test]
    fn worked_example_values() {
        let lm = landmarks(3.0, -0.5, Some(-4.0), &Tolerance::default());
        let e = 5e-5;
        close(lm.c0, -2.5, 1e-12);
        close(lm.c1.unwrap(), 0.0203, e);
        close(lm.c2.unwrap(), -5.0203, e);
        close(lm.mu1.unwrap(), 0.0801, e);
        close(lm.mu2.unwrap(), -2.0801, e);
        close(lm.xi1.unwrap(), -3.1602, e);
        close(lm.xi2.unwrap(), 1.1602, e);
        close(lm.rho1.unwrap(), 0.8708, e);
        close(lm.rho2.unwrap(), -2.8708, e);
        close(lm.rho0, -1.0, 1e-15);
        close(lm.lambda1.unwrap(), 0.1583, e);
        close(lm.lambda2.unwrap(), -3.1583, e);
        close(lm.c_over_b.unwrap(), -8.0, 1e-15);
        close(lm.sqrt_neg_b.unwrap(), 0.5f64.sqrt(), 1e-15);
    }

    #[test]
    fn origin_collapses() {
        let lm = Landmarks::new(0.0, 0.0, &Tolerance::default());
        for v in [lm.c1, lm.c2, lm.mu1, lm.mu2, lm.xi1, lm.xi2, lm.rho1, lm.rho2, lm.lambda1, lm.lambda2] {
            assert_eq!(v, Some(0.0));
        }
        assert_eq!(lm.c0, 0.0);
        assert_eq!(lm.c_over_b, None);
        assert_eq!(lm.sqrt_neg_b, None);
    }

    #[test]
    fn rayleigh_critical_points() {
        let q: f64 = 0.65;
        let lm = Landmarks::new(-8.0, 8.0 * (3.0 - 2.0 * q), &Tolerance::default());
        let d = 2.0 * 2f64.sqrt() / 3.0 * (6.0 * q - 1.0).sqrt();
        close(lm.mu1.unwrap(), 8.0 / 3.0 + d, 1e-12);
        close(lm.mu2.unwrap(), 8.0 / 3.0 - d, 1e-12);
    }

    #[test]
    fn absent_beyond_radicands() {
        let lm = Landmarks::new(1.0, 1.0, &Tolerance::default());
        assert!(lm.sigma.is_none() && lm.c1.is_none() && lm.lambda1.is_none());
        let lm = Landmarks::new(2.0, 1.1, &Tolerance::default());
        assert!(lm.sigma.is_some() && lm.lambda1.is_none());
    }

    #[test]
    fn clamps_at_boundaries() {
        let t = Tolerance::default();
        let a: f64 = 3.0;
        let lm = Landmarks::new(a, a * a / 3.0 * (1.0 + 1e-14), &t);
        assert_eq!(lm.mu1, lm.mu2);
        assert_eq!(lm.c1, lm.c2);
        let lm = Landmarks::new(a, a * a / 4.0 * (1.0 + 1e-14), &t);
        assert_eq!(lm.lambda1, lm.lambda2);
        close(lm.lambda1.unwrap(), -1.5, 1e-15);
    }

    #[test]
    fn level_values_at_landmarks() {
        let lm = Landmarks::new(-2.0, -5.0, &Tolerance::default());
        close(lm.level(lm.mu1.unwrap()), -lm.c1.unwrap(), 1e-12);
        close(lm.level(lm.mu2.unwrap()), -lm.c2.unwrap(), 1e-12);
        close(lm.level(lm.xi1.unwrap()), -lm.c1.unwrap(), 1e-12);
        close(lm.level(lm.xi2.unwrap()), -lm.c2.unwrap(), 1e-12);
        for r in [lm.rho0, lm.rho1.unwrap(), lm.rho2.unwrap()] {
            close(lm.level(r), -lm.c0, 1e-12);
        }
        close(lm.level(lm.lambda1.unwrap()), 0.0, 1e-12);
        close(lm.level(2.0), -lm.ab, 1e-12);
    }

    #[test]
    fn harness_examples() {
        let t = Tolerance::default();
        let h = harness(3.0, -0.5, &t).unwrap();
        close(h.lower, 3.2403703492, 1e-9);
        close(h.upper, 3.7416573868, 1e-9);
        assert_eq!(harness(0.0, 0.0, &t).unwrap(), Harness { lower: 0.0, upper: 0.0 });
        let h = harness(0.0, -3.0, &t).unwrap();
        close(h.lower, 3.0, 1e-12);
        close(h.upper, 2.0 * 3f64.sqrt(), 1e-12);
        assert!(matches!(harness(0.0, 1.0, &t), Err(Error::NotApplicable(_))));
    }
}
