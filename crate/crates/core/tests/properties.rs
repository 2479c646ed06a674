use proptest::prelude::*;
use rand::{rngs::StdRng, Rng, SeedableRng};

use cubic_iso::cases::AtomContext;
use cubic_iso::cubic::{depress, depressed_discriminant, discriminant};
use cubic_iso::isolator::{HarnessMode, IsolateOptions};
use cubic_iso::{
    analyze, classify, harness, isolate_with, landmarks, near_any_boundary, solve_all, sturm_chain,
    GeneralCubic, Landmarks, MonicCubic, Tolerance,
};

fn coeff() -> impl Strategy<Value = f64> {
    -10.0..10.0f64
}

fn tol() -> Tolerance {
    Tolerance::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn discriminant_is_translation_invariant(a in coeff(), b in coeff(), c in coeff()) {
        let m = MonicCubic::new(a, b, c).unwrap();
        let big = discriminant(&m);
        let small = depressed_discriminant(&depress(&m));
        prop_assert!((big - small).abs() <= 1e-11 * big.abs().max(1.0));
    }

    #[test]
    fn depressed_roots_shift_back(a in coeff(), b in coeff(), c in coeff()) {
        let m = MonicCubic::new(a, b, c).unwrap();
        let d = depress(&m);
        let dm = MonicCubic::new(0.0, d.p, d.q).unwrap();
        for r in solve_all(&dm, &tol()).unwrap().values() {
            let x = r - d.shift;
            prop_assert!(m.eval(x).abs() <= 1e-8 * m.magnitude_at(x).max(1.0));
        }
    }

    #[test]
    fn monicize_keeps_roots(lead in prop_oneof![-5.0..-0.1f64, 0.1..5.0f64], a in coeff(), b in coeff(), c in coeff()) {
        let m = MonicCubic::new(a, b, c).unwrap();
        let g = GeneralCubic::new(lead, lead * a, lead * b, lead * c).unwrap();
        let back = g.monicize().unwrap();
        let r1 = solve_all(&m, &tol()).unwrap().values();
        let r2 = solve_all(&back, &tol()).unwrap().values();
        prop_assert_eq!(r1.len(), r2.len());
        for (x, y) in r1.iter().zip(&r2) {
            prop_assert!((x - y).abs() <= 1e-6 * x.abs().max(1.0));
        }
    }

    #[test]
    fn landmark_identities(a in coeff(), b in coeff()) {
        let lm = Landmarks::new(a, b, &tol());
        let scale = 1.0 + a.abs().powi(3) + b.abs().powf(1.5);
        if let (Some(c1), Some(c2)) = (lm.c1, lm.c2) {
            prop_assert!(c2 <= lm.c0 && lm.c0 <= c1);
            for (c, mu, xi) in [(c1, lm.mu1.unwrap(), lm.xi1.unwrap()), (c2, lm.mu2.unwrap(), lm.xi2.unwrap())] {
                let ext = MonicCubic::new(a, b, c).unwrap();
                prop_assert!(discriminant(&ext).abs() <= 1e-8 * scale * scale);
                prop_assert!((3.0 * mu * mu + 2.0 * a * mu + b).abs() <= 1e-9 * scale);
                prop_assert!((xi + a + 2.0 * mu).abs() <= 1e-12 * scale);
                prop_assert!((mu * mu * xi + c).abs() <= 1e-9 * scale);
                prop_assert!((c + lm.level(mu)).abs() <= 1e-9 * scale);
                let h = harness(a, b, &tol()).unwrap();
                prop_assert!(((mu - xi).abs() - h.lower).abs() <= 1e-9 * scale);
            }
            let centre = MonicCubic::new(a, b, lm.c0).unwrap();
            for rho in [lm.rho0, lm.rho1.unwrap(), lm.rho2.unwrap()] {
                prop_assert!(centre.eval(rho).abs() <= 1e-9 * scale);
            }
        }
        if let (Some(l1), Some(l2)) = (lm.lambda1, lm.lambda2) {
            prop_assert!((l1 + l2 + a).abs() <= 1e-12 * scale);
            prop_assert!((l1 * l2 - b).abs() <= 1e-9 * scale);
            for l in [l1, l2] {
                prop_assert!(lm.level(l).abs() <= 1e-9 * scale);
            }
        }
    }

    #[test]
    fn classification_invariants(a in coeff(), b in coeff(), c in coeff()) {
        let m = MonicCubic::new(a, b, c).unwrap();
        let cls = classify(&m, &tol()).unwrap();
        let s = cls.signs;
        prop_assert_eq!(s.n_pos + s.n_neg + s.n_zero + 2 * u8::from(s.complex_pair), 3);
        let expected_parity = if a > 0.0 { 1 } else { 0 };
        if cls.regime.figure > 3 {
            prop_assert_eq!(cls.regime.figure % 2, expected_parity);
        }
    }

    #[test]
    fn analysis_is_verified(a in coeff(), b in coeff(), c in coeff()) {
        let m = MonicCubic::new(a, b, c).unwrap();
        prop_assume!(!near_any_boundary(&m, 1e-7));
        for harness in [HarnessMode::Min, HarnessMode::Demo, HarnessMode::Off] {
            let an = analyze(&m, &tol(), IsolateOptions { harness, ..Default::default() }).unwrap();
            prop_assert!(an.verification.pass, "{:?}: {:?}", harness, an.verification.diagnostics);
        }
    }

    #[test]
    fn zero_free_term_is_verified(a in coeff(), b in coeff()) {
        let m = MonicCubic::new(a, b, 0.0).unwrap();
        let an = analyze(&m, &tol(), IsolateOptions::default()).unwrap();
        prop_assert!(an.verification.pass, "{:?}", an.verification.diagnostics);
    }

    #[test]
    fn endpoints_match_their_tags(a in coeff(), b in coeff(), c in coeff()) {
        let m = MonicCubic::new(a, b, c).unwrap();
        let ri = isolate_with(&m, &tol(), IsolateOptions { harness: HarnessMode::Demo, ..Default::default() }).unwrap();
        let lm = landmarks(a, b, Some(c), &tol());
        let ctx: AtomContext = ri.atom_context(&lm, c);
        for iv in &ri.intervals {
            prop_assert!(iv.lo.value <= iv.hi.value);
            prop_assert!(!iv.is_point() || iv.multiplicity > 1 || m.has_zero_free_term(&tol()) || iv.lo.tag.to_string() == "cbrt_closed_form");
            for e in [&iv.lo, &iv.hi] {
                let v = e.tag.eval(&ctx).unwrap();
                prop_assert!((v - e.value).abs() <= 1e-12 * e.value.abs().max(1.0), "{} = {} vs {}", e.tag, v, e.value);
            }
        }
        for w in ri.intervals.windows(2) {
            prop_assert!(w[0].hi.value <= w[1].lo.value);
        }
    }

    #[test]
    fn sturm_total_matches_oracle(a in coeff(), b in coeff(), c in coeff()) {
        let m = MonicCubic::new(a, b, c).unwrap();
        let ch = sturm_chain(&m, &tol());
        let roots = solve_all(&m, &tol()).unwrap();
        prop_assert_eq!(ch.total_distinct(), roots.roots.len());
        let total: usize = roots.roots.iter().map(|r| usize::from(r.multiplicity)).sum();
        prop_assert!(total == 1 || total == 3);
    }
}

#[test]
fn landmark_ordering_chain() {
    let mut rng = StdRng::seed_from_u64(165);
    let t = tol();
    for _ in 0..100_000 {
        let a: f64 = rng.gen_range(-10.0..10.0);
        let b: f64 = rng.gen_range(-10.0..10.0);
        let lm = Landmarks::new(a, b, &t);
        if let (Some(r1), Some(r2), Some(m1), Some(m2), Some(x1), Some(x2)) =
            (lm.rho1, lm.rho2, lm.mu1, lm.mu2, lm.xi1, lm.xi2)
        {
            assert!(r2 <= m2 && m2 <= lm.rho0 && lm.rho0 <= m1 && m1 <= r1, "{a} {b}");
            assert!(x1 <= m2 && m1 <= x2, "{a} {b}");
        }
        if let (Some(c1), Some(c2)) = (lm.c1, lm.c2) {
            assert!(c2 <= lm.c0 && lm.c0 <= c1);
        }
    }
}
