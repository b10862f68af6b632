//! The discrete twin of the continuous family: polynomials on the
//! nonnegative integers, their geometric-times-Pochhammer weight, and the
//! dual orthogonality sum with a rigorously bounded truncation tail.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::special;

/// Hard cap on the dual-orthogonality summation index.
const SUM_INDEX_CAP: u32 = 1_000_000;

/// Parameters of the discrete family: `mu > 0` and decay rate `g > 0`.
///
/// `g = 0` is rejected even though the continuum formula admits it as a
/// boundary: the weight collapses to zero there and the orthogonality sum
/// ceases to exist.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeixnerParams {
    mu: f64,
    g: f64,
}

impl MeixnerParams {
    pub fn new(mu: f64, g: f64) -> Result<Self> {
        if !mu.is_finite() || mu <= 0.0 {
            return Err(Error::Domain(format!(
                "MeixnerParams: mu = {mu} must be finite and positive"
            )));
        }
        if !g.is_finite() || g <= 0.0 {
            return Err(Error::Domain(format!(
                "MeixnerParams: g = {g} must be finite and strictly positive"
            )));
        }
        Ok(Self { mu, g })
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn g(&self) -> f64 {
        self.g
    }

    /// `0.5 ln((2 mu)_n / n!) - n g`, the log of the prefactor in front of
    /// the Gauss sum.
    fn log_prefactor(&self, n: u32) -> Result<f64> {
        if n == 0 {
            return Ok(0.0);
        }
        let two_mu = 2.0 * self.mu;
        Ok(0.5
            * (special::log_gamma_real(n as f64 + two_mu)?
                - special::log_gamma_real(two_mu)?
                - special::log_gamma_real(n as f64 + 1.0)?)
            - n as f64 * self.g)
    }
}

/// `M_n(m) = sqrt((2 mu)_n / n!) e^{-n g} 2F1(-n, -m; 2 mu; 1 - e^{2 g})`.
///
/// Both upper parameters are nonpositive integers, so the Gauss sum stops at
/// `min(n, m)` terms; it runs on the exact carrier and the result is exactly
/// real. The terms alternate with magnitudes up to `(m (e^{2g}-1))^n`-ish,
/// so extreme `(n, m, g)` combinations push the true value outside f64 range
/// and are reported as overflow.
pub fn meixner_eval(params: &MeixnerParams, n: u32, m: u32) -> Result<f64> {
    let z = Complex64::new(1.0 - (2.0 * params.g).exp(), 0.0);
    if !z.re.is_finite() {
        return Err(Error::Overflow);
    }
    let f = special::hyp2f1_terminating(
        n,
        Complex64::new(-(m as f64), 0.0),
        Complex64::new(2.0 * params.mu, 0.0),
        z,
    )?;
    debug_assert_eq!(f.im, 0.0);
    let val = params.log_prefactor(n)?.exp() * f.re;
    if !val.is_finite() {
        return Err(Error::Overflow);
    }
    Ok(val)
}

/// Weight `omega_m = (1 - e^{-2g})^{2 mu} (2 mu)_m e^{-2 m g} / m!`,
/// positive for every `m` and summing to 1 over the nonnegative integers.
pub fn meixner_weight(params: &MeixnerParams, m: u32) -> Result<f64> {
    Ok(log_weight(params, m)?.exp())
}

fn log_weight(params: &MeixnerParams, m: u32) -> Result<f64> {
    let two_mu = 2.0 * params.mu;
    let pochhammer = if m == 0 {
        0.0
    } else {
        special::log_gamma_real(m as f64 + two_mu)?
            - special::log_gamma_real(two_mu)?
            - special::log_gamma_real(m as f64 + 1.0)?
    };
    Ok(two_mu * (-(-2.0 * params.g).exp()).ln_1p() + pochhammer - 2.0 * m as f64 * params.g)
}

/// `sum_m omega_m M_n(m) M_{n2}(m)`, truncated once a certified bound on
/// the remaining tail drops below `tail_tol`; equals `delta_{n, n2}` up to
/// that tolerance.
///
/// The tail bound combines the geometric envelope of the weight (stepwise
/// ratio `e^{-2g} max(1, (M + 2 mu)/(M + 1))`) with a positive-coefficient
/// majorant of each polynomial factor, `Maj_n(M) >= |M_n(M)|`, whose own
/// stepwise growth is at most `e^{n / M}`; everything is carried in log
/// space so the bound itself cannot overflow. If the bound has not closed by
/// `m = 10^6` the sum is abandoned as non-convergent rather than returned
/// unverified.
pub fn dual_orthogonality_sum(
    params: &MeixnerParams,
    n: u32,
    n2: u32,
    tail_tol: f64,
) -> Result<f64> {
    if !tail_tol.is_finite() || tail_tol <= 0.0 {
        return Err(Error::Domain(format!(
            "dual_orthogonality_sum: tail_tol = {tail_tol} must be positive"
        )));
    }
    for nn in [n, n2] {
        if nn as usize > special::DEGREE_LIMIT {
            return Err(Error::DegreeLimit {
                n: nn as usize,
                max: special::DEGREE_LIMIT,
            });
        }
    }
    let abs_z = (2.0 * params.g).exp_m1();
    let ln_tol = tail_tol.ln();
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for m in 0..=SUM_INDEX_CAP {
        let term = meixner_weight(params, m)?
            * meixner_eval(params, n, m)?
            * meixner_eval(params, n2, m)?;
        let t = sum + term;
        comp += if sum.abs() >= term.abs() {
            (sum - t) + term
        } else {
            (term - t) + sum
        };
        sum = t;

        // Certified bound on sum_{j >= M} with M = m + 1.
        let big_m = (m + 1) as f64;
        let rho = (-2.0 * params.g).exp()
            * (1.0f64).max((big_m + 2.0 * params.mu) / (big_m + 1.0))
            * ((n + n2) as f64 / big_m).exp();
        if rho < 1.0 {
            let ln_tail = log_weight(params, m + 1)?
                + log_majorant(params, n, big_m * abs_z)?
                + log_majorant(params, n2, big_m * abs_z)?
                - (1.0 - rho).ln();
            if ln_tail < ln_tol {
                return Ok(sum + comp);
            }
        }
    }
    Err(Error::TailNonConvergence {
        limit: SUM_INDEX_CAP as usize,
    })
}

/// `ln(pref_n e^{-n g} sum_k C(n, k) x^k / (2 mu)_k)` for `x >= 0`: the log
/// of a positive-coefficient majorant of `|M_n(m)|` at `x = m (e^{2g} - 1)`,
/// nondecreasing in `m`.
fn log_majorant(params: &MeixnerParams, n: u32, x: f64) -> Result<f64> {
    let two_mu = 2.0 * params.mu;
    let mut ln_term = 0.0f64;
    let mut ln_acc = 0.0f64;
    for k in 0..n {
        let kf = k as f64;
        let ratio = (n - k) as f64 * x / ((kf + 1.0) * (two_mu + kf));
        if ratio == 0.0 {
            break;
        }
        ln_term += ratio.ln();
        // log(exp(a) + exp(b)) without leaving log space.
        let (hi, lo) = if ln_acc >= ln_term {
            (ln_acc, ln_term)
        } else {
            (ln_term, ln_acc)
        };
        ln_acc = hi + (lo - hi).exp().ln_1p();
    }
    Ok(params.log_prefactor(n)? + ln_acc)
}
