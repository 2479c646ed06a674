//! Coefficient, batch and sweep-config parsing.

use std::collections::BTreeMap;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use cubic_iso::{AffineFamily, GeneralCubic, MonicCubic};

/// A parsed cubic together with the non-monic form it came from, if any.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Input {
    pub cubic: MonicCubic,
    pub general: Option<GeneralCubic>,
}

fn number(s: &str) -> Result<f64> {
    let x: f64 = s.trim().parse().with_context(|| format!("not a number: {s:?}"))?;
    if !x.is_finite() {
        bail!("coefficient must be finite: {s:?}");
    }
    Ok(x)
}

/// Three values are `a b c` of a monic cubic; four are `A B C D` of
/// `Ax³ + Bx² + Cx + D`.
pub fn coefficients<S: AsRef<str>>(values: &[S]) -> Result<Input> {
    let xs = values.iter().map(|v| number(v.as_ref())).collect::<Result<Vec<_>>>()?;
    match xs[..] {
        [a, b, c] => Ok(Input {
            cubic: MonicCubic::new(a, b, c)?,
            general: None,
        }),
        [x3, x2, x1, x0] => {
            let g = GeneralCubic::new(x3, x2, x1, x0)?;
            Ok(Input {
                cubic: g.monicize()?,
                general: Some(g),
            })
        }
        _ => bail!("expected 3 (a b c) or 4 (A B C D) coefficients, got {}", xs.len()),
    }
}

/// One cubic per line, whitespace- or comma-separated; `#` starts a comment.
pub fn batch(text: &str) -> Result<Vec<Input>> {
    let mut out = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        let fields: Vec<&str> = line
            .split(|ch: char| ch == ',' || ch.is_whitespace())
            .filter(|f| !f.is_empty())
            .collect();
        if fields.is_empty() {
            continue;
        }
        out.push(coefficients(&fields).with_context(|| format!("line {}", n + 1))?);
    }
    Ok(out)
}

pub fn batch_file(path: &Path) -> Result<Vec<Input>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    batch(&text).with_context(|| path.display().to_string())
}

/// Sweep settings gathered from a `key = value` file and command-line flags.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct SweepSettings {
    pub family: Option<AffineFamily>,
    pub t_lo: Option<f64>,
    pub t_hi: Option<f64>,
    pub samples: Option<usize>,
    pub refine_tol: Option<f64>,
    pub physical: Option<bool>,
}

impl SweepSettings {
    /// Fields set in `over` replace those in `self`.
    pub fn overlay(self, over: SweepSettings) -> SweepSettings {
        SweepSettings {
            family: over.family.or(self.family),
            t_lo: over.t_lo.or(self.t_lo),
            t_hi: over.t_hi.or(self.t_hi),
            samples: over.samples.or(self.samples),
            refine_tol: over.refine_tol.or(self.refine_tol),
            physical: over.physical.or(self.physical),
        }
    }
}

fn flag(v: &str) -> Result<bool> {
    match v.trim().to_ascii_lowercase().as_str() {
        "true" | "yes" | "1" | "on" => Ok(true),
        "false" | "no" | "0" | "off" => Ok(false),
        other => bail!("not a boolean: {other:?}"),
    }
}

/// Keys: `preset` (`rayleigh`), `a0 a1 b0 b1 c0 c1`, `t_lo`, `t_hi`,
/// `samples`, `refine_tol`, `physical`.
pub fn sweep_config(text: &str) -> Result<SweepSettings> {
    let mut kv = BTreeMap::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| anyhow!("line {}: expected key = value", n + 1))?;
        kv.insert(k.trim().to_string(), (n + 1, v.trim().to_string()));
    }

    let mut s = SweepSettings::default();
    let mut coeffs: BTreeMap<&str, f64> = BTreeMap::new();
    for (k, (line, v)) in &kv {
        let ctx = || format!("line {line}: {k}");
        match k.as_str() {
            "preset" => match v.as_str() {
                "rayleigh" => s.family = Some(AffineFamily::RAYLEIGH),
                other => bail!("line {line}: unknown preset {other:?}"),
            },
            "a0" | "a1" | "b0" | "b1" | "c0" | "c1" => {
                let key = ["a0", "a1", "b0", "b1", "c0", "c1"].into_iter().find(|x| x == k).unwrap();
                coeffs.insert(key, number(v).with_context(ctx)?);
            }
            "t_lo" => s.t_lo = Some(v.parse().with_context(ctx)?),
            "t_hi" => s.t_hi = Some(v.parse().with_context(ctx)?),
            "samples" => s.samples = Some(v.parse().with_context(ctx)?),
            "refine_tol" => s.refine_tol = Some(v.parse().with_context(ctx)?),
            "physical" => s.physical = Some(flag(v).with_context(ctx)?),
            other => bail!("line {line}: unknown key {other:?}"),
        }
    }
    if !coeffs.is_empty() {
        let base = s.family.unwrap_or(AffineFamily {
            a: [0.0; 2],
            b: [0.0; 2],
            c: [0.0; 2],
        });
        let get = |key: &str, dflt: f64| coeffs.get(key).copied().unwrap_or(dflt);
        s.family = Some(AffineFamily {
            a: [get("a0", base.a[0]), get("a1", base.a[1])],
            b: [get("b0", base.b[0]), get("b1", base.b[1])],
            c: [get("c0", base.c[0]), get("c1", base.c[1])],
        });
    }
    Ok(s)
}

/// `"x0,x1"` as the pair `[x0, x1]`.
pub fn pair(s: &str) -> Result<[f64; 2]> {
    let parts: Vec<&str> = s.split(',').collect();
    match parts[..] {
        [x0, x1] => Ok([number(x0)?, number(x1)?]),
        _ => bail!("expected two comma-separated values, got {s:?}"),
    }
}
