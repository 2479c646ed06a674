//! Plain-text renderings.

use std::fmt::Write as _;

use cubic_iso::regime::{RegimeKind, TableId};
use cubic_iso::sweep::{PhysicalStatus, SweepReport};
use cubic_iso::{CubicReport, MonicCubic, VerificationReport};

fn term(coef: f64, power: &str, first: bool) -> String {
    if coef == 0.0 {
        return String::new();
    }
    let sign = match (coef < 0.0, first) {
        (true, true) => "-",
        (true, false) => " - ",
        (false, true) => "",
        (false, false) => " + ",
    };
    let mag = coef.abs();
    if power.is_empty() || mag != 1.0 {
        format!("{sign}{mag}{power}")
    } else {
        format!("{sign}{power}")
    }
}

pub fn polynomial(m: &MonicCubic) -> String {
    format!("x^3{}{}{}", term(m.a, "x^2", false), term(m.b, "x", false), term(m.c, "", false))
}

pub fn regime(kind: RegimeKind, a: f64) -> String {
    let cond = match kind {
        RegimeKind::DepressedBNeg => "a = 0, b < 0",
        RegimeKind::DepressedBZero => "a = 0, b = 0",
        RegimeKind::DepressedBPos => "a = 0, b > 0",
        RegimeKind::R1 => "b < -a^2/9",
        RegimeKind::R2 => "-a^2/9 <= b < 0",
        RegimeKind::R3 => "b = 0",
        RegimeKind::R4 => "0 < b <= 2a^2/9",
        RegimeKind::R5 => "2a^2/9 < b <= a^2/4",
        RegimeKind::R6 => "a^2/4 < b <= a^2/3",
        RegimeKind::R7 => "b > a^2/3",
    };
    let sign = match kind {
        RegimeKind::DepressedBNeg | RegimeKind::DepressedBZero | RegimeKind::DepressedBPos => "",
        _ if a > 0.0 => ", a > 0",
        _ => ", a < 0",
    };
    format!("{kind:?} ({cond}{sign})")
}

fn header(rep: &CubicReport, out: &mut String) {
    let cls = &rep.classification;
    let _ = writeln!(out, "cubic       {}", polynomial(&cls.cubic));
    if let Some(g) = &rep.coefficients.general {
        let _ = writeln!(out, "input       {}x^3 + {}x^2 + {}x + {} (divided by {})", g.x3, g.x2, g.x1, g.x0, g.x3);
    }
    let _ = writeln!(out, "regime      {}", regime(rep.regime, cls.cubic.a));
    let _ = writeln!(out, "figure      Figure {}, case ({})", rep.figure, rep.case);
    let _ = writeln!(out, "roots       {}", cls.count.label());
    let table = match cls.signs.table {
        TableId::ZeroRootCase => " (zero free term)".to_string(),
        t => format!(" (Table {t:?})"),
    };
    let _ = writeln!(out, "signs       {}{table}", cls.signs);
    let flags = if rep.flags.is_empty() { "none".to_string() } else { rep.flags.join(", ") };
    let _ = writeln!(out, "near        {flags}");
}

pub fn classification(rep: &CubicReport) -> String {
    let mut out = String::new();
    header(rep, &mut out);
    out
}

fn intervals(rep: &CubicReport, out: &mut String) {
    let _ = writeln!(out, "bounds      [{:.10}, {:.10}]", rep.lower_bound + 0.0, rep.upper_bound + 0.0);
    if rep.harness_applied {
        let _ = writeln!(out, "harness     applied");
    }
    let rows: Vec<[String; 5]> = rep
        .intervals
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let open = if r.lo_closed { '[' } else { '(' };
            let close = if r.hi_closed { ']' } else { ')' };
            [
                (i + 1).to_string(),
                format!("{open}{:.10}, {:.10}{close}", r.lo, r.hi),
                r.lo_tag.clone(),
                r.hi_tag.clone(),
                r.multiplicity.to_string(),
            ]
        })
        .collect();
    let head = ["#", "interval", "lo", "hi", "mult"];
    let mut width = head.map(str::len);
    for row in &rows {
        for (w, cell) in width.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: [&str; 5]| {
        let mut s = String::from("  ");
        for (cell, w) in cells.iter().zip(width) {
            let _ = write!(s, "{cell:<w$}  ");
        }
        s.trim_end().to_string()
    };
    let _ = writeln!(out, "{}", line(head));
    for row in &rows {
        let _ = writeln!(out, "{}", line([&row[0], &row[1], &row[2], &row[3], &row[4]]));
    }
}

pub fn isolation(rep: &CubicReport) -> String {
    let mut out = String::new();
    header(rep, &mut out);
    intervals(rep, &mut out);
    out
}

fn yes(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAILED"
    }
}

pub fn verification(rep: &CubicReport, v: &VerificationReport) -> String {
    let mut out = isolation(rep);
    let roots: Vec<String> = v
        .roots
        .roots
        .iter()
        .map(|r| {
            if r.multiplicity > 1 {
                format!("{:.10} (x{})", r.value, r.multiplicity)
            } else {
                format!("{:.10}", r.value)
            }
        })
        .collect();
    let _ = writeln!(out, "oracle      {}", roots.join(", "));
    let sturm: Vec<String> = v.intervals.iter().map(|k| k.sturm_count.to_string()).collect();
    let _ = writeln!(out, "sturm       {} per interval: {}", sturm.join(" "), yes(v.intervals.iter().all(|k| k.ok)));
    let _ = writeln!(out, "count       {}", yes(v.count_matches && v.trichotomy_matches));
    let _ = writeln!(out, "signs       {}", yes(v.signs_match));
    let _ = writeln!(out, "in bounds   {}", yes(v.within_bounds));
    let _ = writeln!(out, "disjoint    {}", yes(v.disjoint));
    if let Some(h) = v.harness {
        let _ = writeln!(out, "harness     {}", yes(h));
    }
    for d in &v.diagnostics {
        let _ = writeln!(out, "note        {d}");
    }
    let _ = writeln!(out, "verdict     {}", if v.pass { "PASS" } else { "FAIL" });
    out
}

fn status(s: &PhysicalStatus) -> &'static str {
    match s {
        PhysicalStatus::Physical => "physical",
        PhysicalStatus::Unphysical => "unphysical",
        PhysicalStatus::Ambiguous { resolved: Some(true) } => "ambiguous (root physical)",
        PhysicalStatus::Ambiguous { resolved: Some(false) } => "ambiguous (root unphysical)",
        PhysicalStatus::Ambiguous { resolved: None } => "ambiguous",
    }
}

fn affine([x0, x1]: [f64; 2]) -> String {
    match (x0, x1) {
        (_, 0.0) => format!("{x0}"),
        (0.0, _) => format!("{x1}t"),
        _ if x1 < 0.0 => format!("{x0} - {}t", -x1),
        _ => format!("{x0} + {x1}t"),
    }
}

pub fn sweep(rep: &SweepReport) -> String {
    let mut out = String::new();
    let cfg = &rep.config;
    let f = &cfg.family;
    let _ = writeln!(
        out,
        "family      a = {}, b = {}, c = {}",
        affine(f.a),
        affine(f.b),
        affine(f.c)
    );
    let _ = writeln!(out, "range       [{}, {}), {} samples", cfg.t_lo, cfg.t_hi, cfg.samples);
    let _ = writeln!(out, "boundaries  {}", rep.boundaries.len());
    for b in &rep.boundaries {
        let _ = writeln!(
            out,
            "  t = {:<18.13} {:<16} gap {:>9.1e}{}",
            b.t,
            b.identity.identity(),
            b.residual,
            if b.changes_classification { "" } else { "  (classification unchanged)" }
        );
    }
    for a in &rep.anomalies {
        let _ = writeln!(out, "anomaly     classification changes in ({}, {}) without a landmark identity", a.t_lo, a.t_hi);
    }
    let _ = writeln!(out, "regimes");
    let mut last = None;
    for s in &rep.samples {
        let Some(sig) = &s.signature else {
            let _ = writeln!(out, "  t = {:<10.6} error: {}", s.t, s.error.as_deref().unwrap_or("?"));
            continue;
        };
        let key = (sig.figure, sig.case, sig.count.clone());
        if last.as_ref() == Some(&key) {
            continue;
        }
        let _ = writeln!(
            out,
            "  from t = {:<10.6} Figure {:>2}, case ({}), {}, {} positive / {} negative",
            s.t, sig.figure, sig.case, sig.count, sig.n_pos, sig.n_neg
        );
        if let (Some(a), Some(ph)) = (&s.analysis, &s.physical) {
            for (iv, st) in a.isolation.intervals.iter().zip(ph) {
                let _ = writeln!(out, "      {iv}  {}", status(st));
            }
        }
        last = Some(key);
    }
    let v = &rep.verification;
    let _ = writeln!(out, "verified    {}/{} samples ({} errors)", v.passed, v.checked, v.errors);
    out
}
