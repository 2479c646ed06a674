use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Mixed relative/absolute comparison tolerance.
///
/// Two quantities are treated as equal when they differ by at most
/// `abs + rel * scale`, where `scale` is supplied by the caller (usually the
/// magnitude of the quantities involved, floored at one).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub rel: f64,
    pub abs: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            rel: 1e-10,
            abs: 1e-12,
        }
    }
}

impl Tolerance {
    pub fn new(rel: f64, abs: f64) -> Result<Self> {
        if !(rel > 0.0 && rel.is_finite() && abs >= 0.0 && abs.is_finite()) {
            return Err(Error::InvalidTolerance { rel, abs });
        }
        Ok(Tolerance { rel, abs })
    }

    #[inline]
    pub fn band(&self, scale: f64) -> f64 {
        self.abs + self.rel * scale
    }

    /// `|x - y|` within the band scaled by `max(|x|, |y|, 1)`.
    #[inline]
    pub fn near(&self, x: f64, y: f64) -> bool {
        (x - y).abs() <= self.band(x.abs().max(y.abs()).max(1.0))
    }

    #[inline]
    pub fn near_zero(&self, x: f64, scale: f64) -> bool {
        x.abs() <= self.band(scale)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_parameters() {
        assert!(Tolerance::new(0.0, 0.0).is_err());
        assert!(Tolerance::new(1e-8, -1.0).is_err());
        assert!(Tolerance::new(f64::NAN, 0.0).is_err());
        assert!(Tolerance::new(1e-8, 0.0).is_ok());
    }

    #[test]
    fn near_scales_with_magnitude() {
        let t = Tolerance::default();
        assert!(t.near(1e6, 1e6 + 1e-5));
        assert!(!t.near(1.0, 1.0 + 1e-8));
        assert!(t.near(0.0, 5e-13));
    }
}
