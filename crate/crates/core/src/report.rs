//! Stable machine-readable record of one analysed cubic.

use serde::{Deserialize, Serialize};

use crate::batch::Analysis;
use crate::cubic::{GeneralCubic, MonicCubic};
use crate::error::Result;
use crate::oracle::{verify_claims, Claims, IntervalClaim, VerificationReport};
use crate::regime::{Classification, RegimeKind};
use crate::tolerance::Tolerance;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Coefficients {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    /// The non-monic input, when one was given.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub general: Option<GeneralCubic>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IntervalRecord {
    pub lo: f64,
    pub hi: f64,
    pub lo_closed: bool,
    pub hi_closed: bool,
    pub lo_tag: String,
    pub hi_tag: String,
    pub multiplicity: u8,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CubicReport {
    pub coefficients: Coefficients,
    pub figure: u8,
    pub case: usize,
    pub regime: RegimeKind,
    pub flags: Vec<String>,
    pub harness_applied: bool,
    pub lower_bound: f64,
    pub upper_bound: f64,
    pub intervals: Vec<IntervalRecord>,
    pub classification: Classification,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationReport>,
}

impl CubicReport {
    pub fn new(analysis: &Analysis, general: Option<GeneralCubic>, with_verification: bool) -> Self {
        let cls = &analysis.classification;
        let ri = &analysis.isolation;
        CubicReport {
            coefficients: Coefficients {
                a: cls.cubic.a,
                b: cls.cubic.b,
                c: cls.cubic.c,
                general,
            },
            figure: ri.figure,
            case: ri.case,
            regime: cls.regime.kind,
            flags: cls.flags.iter().map(|f| f.identity().to_string()).collect(),
            harness_applied: ri.harness_applied,
            lower_bound: ri.lower_bound,
            upper_bound: ri.upper_bound,
            intervals: ri
                .intervals
                .iter()
                .map(|i| IntervalRecord {
                    lo: i.lo.value,
                    hi: i.hi.value,
                    lo_closed: i.lo.closed,
                    hi_closed: i.hi.closed,
                    lo_tag: i.lo.tag.to_string(),
                    hi_tag: i.hi.tag.to_string(),
                    multiplicity: i.multiplicity,
                })
                .collect(),
            classification: cls.clone(),
            verification: with_verification.then(|| analysis.verification.clone()),
        }
    }

    pub fn cubic(&self) -> Result<MonicCubic> {
        MonicCubic::new(self.coefficients.a, self.coefficients.b, self.coefficients.c)
    }

    /// The claims recorded in this document, independent of how they were
    /// produced.
    pub fn claims(&self) -> Claims {
        let cls = &self.classification;
        Claims {
            intervals: self
                .intervals
                .iter()
                .map(|r| IntervalClaim {
                    lo: r.lo,
                    hi: r.hi,
                    lo_closed: r.lo_closed,
                    hi_closed: r.hi_closed,
                    multiplicity: r.multiplicity,
                })
                .collect(),
            count: cls.count,
            n_pos: cls.signs.n_pos,
            n_neg: cls.signs.n_neg,
            n_zero: cls.signs.n_zero,
            complex_pair: cls.signs.complex_pair,
            lower_bound: self.lower_bound,
            upper_bound: self.upper_bound,
        }
    }

    /// Re-runs the oracle on the claims in this document.
    pub fn reverify(&self, tol: &Tolerance) -> Result<VerificationReport> {
        verify_claims(&self.cubic()?, &self.claims(), tol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::batch::analyze;
    use crate::isolator::IsolateOptions;

    #[test]
    fn json_round_trip_keeps_verdict() {
        let t = Tolerance::default();
        let m = MonicCubic::new(3.0, -0.5, -4.0).unwrap();
        let a = analyze(&m, &t, IsolateOptions::default()).unwrap();
        let rep = CubicReport::new(&a, None, true);
        let text = serde_json::to_string_pretty(&rep).unwrap();
        let back: CubicReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back.figure, 7);
        assert_eq!(back.intervals[0].lo_tag, "rho2");
        let again = back.reverify(&t).unwrap();
        assert_eq!(again.pass, rep.verification.unwrap().pass);
        assert!(again.pass);
    }

    #[test]
    fn tampered_document_fails_reverification() {
        let t = Tolerance::default();
        let m = MonicCubic::new(3.0, -0.5, -4.0).unwrap();
        let a = analyze(&m, &t, IsolateOptions::default()).unwrap();
        let mut rep = CubicReport::new(&a, None, false);
        rep.intervals[0].hi = -2.7;
        assert!(!rep.reverify(&t).unwrap().pass);
    }
}
