//! Check suites behind `mpwell verify`.
//!
//! Each suite re-derives an orthogonality or asymptotic identity from
//! scratch and reports every entry as an explicit expected/actual pair, so
//! a report never hides which entry broke.

use crate::report::Check;
use mpwell::asymptotics;
use mpwell::meixner::{self, MeixnerParams};
use mpwell::poly::PolyParams;
use mpwell::quadrature;
use mpwell::Result;

/// Discrete weight mass is checked against a tolerance of its own; the
/// user's `--tol` governs only the Gram entries.
const MASS_TOL: f64 = 1e-12;
const PHASE_ORIGIN_TOL: f64 = 1e-13;
const AMPLITUDE_TOL: f64 = 1e-11;
const ENVELOPE_CEILING: f64 = 0.05;

/// Gram identity of the continuous family by full-line quadrature,
/// degrees up to 7 at (mu, theta) = (1/2, pi/2).
pub fn continuous_suite(tol: f64) -> Result<Vec<Check>> {
    let p = PolyParams::new(0.5, std::f64::consts::FRAC_PI_2)?;
    let mut checks = Vec::new();
    for n in 0..=7u32 {
        for n2 in n..=7u32 {
            let value = quadrature::continuous_orthogonality(&p, n, n2)?;
            let expected = if n == n2 { 1.0 } else { 0.0 };
            checks.push(Check::new(
                format!("continuous gram entry ({n}, {n2}) at mu = 0.5, theta = pi/2"),
                expected,
                value,
                tol,
            ));
        }
    }
    Ok(checks)
}

/// Dual orthogonality of the discrete family, degrees up to 10 at
/// (mu, g) = (1, 1/2), plus unit total mass of the weight at three
/// parameter points.
pub fn discrete_suite(tol: f64) -> Result<Vec<Check>> {
    let p = MeixnerParams::new(1.0, 0.5)?;
    let mut checks = Vec::new();
    for n in 0..=10u32 {
        for n2 in n..=10u32 {
            let value = meixner::dual_orthogonality_sum(&p, n, n2, 1e-12)?;
            let expected = if n == n2 { 1.0 } else { 0.0 };
            checks.push(Check::new(
                format!("discrete gram entry ({n}, {n2}) at mu = 1, g = 0.5"),
                expected,
                value,
                tol,
            ));
        }
    }
    for (mu, g) in [(0.5, 0.3), (1.0, 0.5), (2.0, 1.0)] {
        let wp = MeixnerParams::new(mu, g)?;
        let mut mass = 0.0f64;
        let mut m = 0u32;
        loop {
            let w = meixner::meixner_weight(&wp, m)?;
            mass += w;
            if w < 1e-18 && m > 10 {
                break;
            }
            m += 1;
        }
        checks.push(Check::new(
            format!("discrete weight mass at mu = {mu}, g = {g}"),
            1.0,
            mass,
            MASS_TOL,
        ));
    }
    Ok(checks)
}

/// Scattering-style quantities of the large-degree form: phase shift at the
/// origin, the closed-form amplitude on the symmetric line, and shrinking
/// envelope-relative error between degree windows near 64 and 4096.
pub fn asymptotics_suite() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for mu in [0.5, 1.0, 2.0] {
        let p = PolyParams::new(mu, 1.0)?;
        let delta0 = asymptotics::phase_shift(&p, 0.0)?;
        checks.push(Check::new(
            format!("phase shift at y = 0 for mu = {mu}"),
            -mu * std::f64::consts::FRAC_PI_2,
            delta0,
            PHASE_ORIGIN_TOL,
        ));
    }
    // On mu = 1/2, theta = pi/2 the amplitude collapses to
    // sqrt(2 cosh(pi y) / pi).
    let p_half = PolyParams::new(0.5, std::f64::consts::FRAC_PI_2)?;
    for y in [0.0, 0.5, 1.0] {
        let got = asymptotics::amplitude(&p_half, y)?;
        let want = (2.0 * (std::f64::consts::PI * y).cosh() / std::f64::consts::PI).sqrt();
        checks.push(Check::new(
            format!("amplitude closed form at mu = 0.5, theta = pi/2, y = {y}"),
            want,
            got,
            AMPLITUDE_TOL,
        ));
    }
    let mut n_list: Vec<u32> = (56..=72).collect();
    n_list.extend(4088..=4104);
    for (mu, theta, y) in [
        (1.0, 1.0, 2.5),
        (0.5, std::f64::consts::FRAC_PI_2, 1.0),
        (0.75, 0.8, -1.3),
    ] {
        let p = PolyParams::new(mu, theta)?;
        let scan = asymptotics::error_scan(&p, y, &n_list)?;
        checks.push(Check::new(
            format!("envelope median near n = 4096 below ceiling at ({mu}, {theta}, {y})"),
            0.0,
            scan.top_decade_median,
            ENVELOPE_CEILING,
        ));
        // Encoded as a clamped excess so the report stays numeric: any
        // positive actual means the error failed to shrink.
        checks.push(Check::new(
            format!("envelope median shrinks from n = 64 to n = 4096 at ({mu}, {theta}, {y})"),
            0.0,
            (scan.top_decade_median - scan.bottom_decade_median).max(0.0),
            0.0,
        ));
    }
    Ok(checks)
}
