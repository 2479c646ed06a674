//! Data-parallel execution over many cubics.

use serde::{Deserialize, Serialize};

use crate::cubic::MonicCubic;
use crate::error::Result;
use crate::isolator::{isolate_classified, IsolateOptions, RootIsolation};
use crate::oracle::{verify, VerificationReport};
use crate::regime::{classify, Classification};
use crate::tolerance::Tolerance;

/// How a batch is scheduled. `Parallel` falls back to sequential execution
/// when the crate is built without the `parallel` feature.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

impl Execution {
    /// Applies `f` to every item, preserving input order.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            Execution::Sequential => items.iter().map(f).collect(),
            Execution::Parallel => parallel_map(items, f),
        }
    }
}

#[cfg(feature = "parallel")]
fn parallel_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn parallel_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.iter().map(f).collect()
}

/// Classification, isolation and oracle verdict for one cubic.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Analysis {
    pub classification: Classification,
    pub isolation: RootIsolation,
    pub verification: VerificationReport,
}

pub fn analyze(m: &MonicCubic, tol: &Tolerance, opts: IsolateOptions) -> Result<Analysis> {
    let classification = classify(m, tol)?;
    let isolation = isolate_classified(&classification, tol, opts)?;
    let verification = verify(m, &classification, &isolation, tol)?;
    Ok(Analysis {
        classification,
        isolation,
        verification,
    })
}

pub fn analyze_batch(
    cubics: &[MonicCubic],
    tol: &Tolerance,
    opts: IsolateOptions,
    exec: Execution,
) -> Vec<Result<Analysis>> {
    exec.map(cubics, |m| analyze(m, tol, opts))
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct CampaignSummary {
    pub total: usize,
    pub passed: usize,
    /// Input index and reason for every failure.
    pub failures: Vec<(usize, String)>,
}

impl CampaignSummary {
    pub fn all_passed(&self) -> bool {
        self.passed == self.total
    }
}

/// Runs the full pipeline and the oracle on every cubic.
pub fn campaign(
    cubics: &[MonicCubic],
    tol: &Tolerance,
    opts: IsolateOptions,
    exec: Execution,
) -> CampaignSummary {
    let verdicts = exec.map(cubics, |m| match analyze(m, tol, opts) {
        Ok(a) if a.verification.pass => None,
        Ok(a) => Some(a.verification.diagnostics.join("; ")),
        Err(e) => Some(e.to_string()),
    });
    let mut summary = CampaignSummary {
        total: cubics.len(),
        ..Default::default()
    };
    for (i, v) in verdicts.into_iter().enumerate() {
        match v {
            None => summary.passed += 1,
            Some(reason) => summary.failures.push((i, reason)),
        }
    }
    summary
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_preserves_order() {
        let xs: Vec<u32> = (0..1000).collect();
        for exec in [Execution::Sequential, Execution::Parallel] {
            let ys = exec.map(&xs, |x| x * 2);
            assert!(ys.iter().enumerate().all(|(i, y)| *y == 2 * i as u32));
        }
    }

    #[test]
    fn small_campaign_passes() {
        let cubics: Vec<MonicCubic> = [(3.0, -0.5, -4.0), (0.0, 0.0, -8.0), (-3.0, 3.0, -1.0), (1.0, 1.0, 1.0)]
            .into_iter()
            .map(|(a, b, c)| MonicCubic::new(a, b, c).unwrap())
            .collect();
        let s = campaign(&cubics, &Tolerance::default(), IsolateOptions::default(), Execution::default());
        assert!(s.all_passed(), "{:?}", s.failures);
    }
}
