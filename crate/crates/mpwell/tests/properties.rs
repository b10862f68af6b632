//! Randomized invariants across the numeric core.

use mpwell::poly::PolyParams;
use mpwell::special::log_gamma_complex;
use mpwell::Complex64;
use proptest::prelude::*;

proptest! {
    // Gamma of a conjugate is the conjugate: same modulus, negated argument.
    #[test]
    fn log_gamma_conjugation_symmetry(
        re in 0.05f64..40.0,
        im in -40.0f64..40.0,
    ) {
        let lg = log_gamma_complex(Complex64::new(re, im)).unwrap();
        let lg_conj = log_gamma_complex(Complex64::new(re, -im)).unwrap();
        prop_assert!((lg.log_modulus - lg_conj.log_modulus).abs() < 1e-13);
        prop_assert!((lg.argument + lg_conj.argument).abs() < 1e-13);
    }

    // The functional equation, in log form: log G(z + 1) - log G(z) = log z.
    // Both sides use the principal argument of z, which is continuous on the
    // right half-plane.
    #[test]
    fn log_gamma_recurrence(
        re in 0.05f64..30.0,
        im in -30.0f64..30.0,
    ) {
        let z = Complex64::new(re, im);
        let lg = log_gamma_complex(z).unwrap();
        let lg_up = log_gamma_complex(z + 1.0).unwrap();
        let dm = lg_up.log_modulus - lg.log_modulus;
        let da = lg_up.argument - lg.argument;
        prop_assert!((dm - z.norm().ln()).abs() < 1e-12);
        prop_assert!((da - im.atan2(re)).abs() < 1e-12);
    }

    // At theta = pi/2 the weight is even, and degree n carries parity (-1)^n.
    #[test]
    fn half_turn_parity(
        mu in 0.3f64..2.5,
        n in 0u32..60,
        y in 0.0f64..4.0,
    ) {
        let p = PolyParams::new(mu, std::f64::consts::FRAC_PI_2).unwrap();
        let plus = p.eval_recurrence(n, y).unwrap();
        let minus = p.eval_recurrence(n, -y).unwrap();
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let scale = plus.abs().max(minus.abs()).max(1.0);
        prop_assert!((minus - sign * plus).abs() < 1e-10 * scale);
    }

    // The three evaluation routes share no code path past parameter
    // validation, so agreement on random triples is a strong check on all of
    // them at once.
    #[test]
    fn three_routes_agree(
        mu in 0.3f64..2.5,
        theta in 0.3f64..2.8,
        n in 0u32..=50,
        y in -3.0f64..3.0,
    ) {
        let p = PolyParams::new(mu, theta).unwrap();
        let a = p.eval_sum(n, y).unwrap();
        let b = p.eval_series(n, y).unwrap();
        let c = p.eval_recurrence(n, y).unwrap();
        let scale = a.abs().max(b.abs()).max(c.abs());
        let tol = (1e-12f64).max(1e-9 * scale);
        prop_assert!((a - b).abs() < tol, "sum {a} vs series {b}");
        prop_assert!((a - c).abs() < tol, "sum {a} vs recurrence {c}");
    }

    // Positivity of the orthogonality weight everywhere it is defined.
    #[test]
    fn weight_is_positive(
        mu in 0.3f64..2.5,
        theta in 0.3f64..2.8,
        y in -20.0f64..20.0,
    ) {
        let p = PolyParams::new(mu, theta).unwrap();
        let w = p.weight(y).unwrap();
        prop_assert!(w.is_finite() && w > 0.0);
    }
}
