//! The orthonormal polynomial family on the real line, with three mutually
//! independent evaluation routes and its orthogonality weight.
//!
//! The three routes are deliberately kept algorithmically disjoint so each
//! can serve as an oracle for the others:
//!
//! * [`PolyParams::eval_sum`]: the terminating Gauss sum, carried in exact
//!   arithmetic, times the orthonormalizing prefactor.
//! * [`PolyParams::eval_series`]: the coefficient of `t^n` in the product of
//!   two binomial series, a convolution with no cancellation in its factors.
//! * [`PolyParams::eval_recurrence`]: the three term recurrence in its
//!   orthonormal form.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::special;

/// Residue tolerance for the imaginary part of a value that is real by
/// symmetry; exceeding it means the evaluation lost integrity.
const IMAG_RESIDUE_TOL: f64 = 1e-10;

/// Parameters of the family: order parameter `mu > 0` and angle
/// `theta` strictly inside `(0, pi)`.
///
/// Constructed through [`PolyParams::new`], which enforces the domain, so a
/// value of this type always carries usable parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolyParams {
    mu: f64,
    theta: f64,
}

impl PolyParams {
    pub fn new(mu: f64, theta: f64) -> Result<Self> {
        if !mu.is_finite() || mu <= 0.0 {
            return Err(Error::Domain(format!(
                "PolyParams: mu = {mu} must be finite and positive"
            )));
        }
        if !theta.is_finite() || theta <= 0.0 || theta >= std::f64::consts::PI {
            return Err(Error::Domain(format!(
                "PolyParams: theta = {theta} must lie strictly between 0 and pi"
            )));
        }
        Ok(Self { mu, theta })
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// `0.5 ln((2 mu)_n / n!)`, the log of the constant that turns the Gauss
    /// sum form into the orthonormal polynomial.
    fn log_orthonormal_prefactor(&self, n: u32) -> Result<f64> {
        if n == 0 {
            // Empty Pochhammer product; skipping the gamma calls keeps the
            // degree zero polynomial exactly 1.
            return Ok(0.0);
        }
        let two_mu = 2.0 * self.mu;
        Ok(0.5
            * (special::log_gamma_real(n as f64 + two_mu)?
                - special::log_gamma_real(two_mu)?
                - special::log_gamma_real(n as f64 + 1.0)?))
    }

    /// Hypergeometric route: prefactor times `e^{i n theta}` times the
    /// terminating Gauss sum at `b = mu + i y`, `c = 2 mu`,
    /// `z = 2 sin(theta) (sin(theta) + i cos(theta))`.
    ///
    /// The sum itself is exact, so this route keeps full accuracy at any
    /// degree up to [`special::DEGREE_LIMIT`], including the angles where the
    /// terms cancel to twenty orders of magnitude below their peak. The
    /// analytically real result is checked for imaginary residue; a residue
    /// beyond `1e-10` relative is reported as `Cancellation` rather than
    /// silently truncated.
    pub fn eval_sum(&self, n: u32, y: f64) -> Result<f64> {
        check_finite_y(y)?;
        let (sin_t, cos_t) = self.theta.sin_cos();
        // 1 - e^{-2 i theta} without the subtractive cancellation of the
        // literal form.
        let z = Complex64::new(2.0 * sin_t * sin_t, 2.0 * sin_t * cos_t);
        let f = special::hyp2f1_terminating(
            n,
            Complex64::new(self.mu, y),
            Complex64::new(2.0 * self.mu, 0.0),
            z,
        )?;
        let pref = self.log_orthonormal_prefactor(n)?.exp();
        if !pref.is_finite() {
            return Err(Error::Overflow);
        }
        let val = Complex64::from_polar(pref, n as f64 * self.theta) * f;
        let tol = IMAG_RESIDUE_TOL * val.re.abs().max(1.0);
        if !(val.im.abs() <= tol) {
            return Err(Error::Cancellation {
                residue: val.im.abs(),
                tol,
            });
        }
        Ok(val.re)
    }

    /// Generating series route: the polynomial is the `t^n` coefficient of
    /// `(1 - e^{i theta} t)^{-mu + i y} (1 - e^{-i theta} t)^{-mu - i y}`,
    /// divided by the orthonormalizing constant.
    ///
    /// The two binomial series have coefficients `a_k` and `conj(a_k)` with
    /// `a_k = a_{k-1} (mu - i y + k - 1) e^{i theta} / k`, so the convolution
    /// `sum_k a_k conj(a_{n-k})` is real by symmetry; its real part is summed
    /// with compensation. Accuracy degrades near polynomial zeros (absolute
    /// error stays at the scale of the coefficient magnitudes times epsilon),
    /// which is why comparisons against this route need an absolute floor.
    pub fn eval_series(&self, n: u32, y: f64) -> Result<f64> {
        check_finite_y(y)?;
        if n as usize > special::DEGREE_LIMIT {
            return Err(Error::DegreeLimit {
                n: n as usize,
                max: special::DEGREE_LIMIT,
            });
        }
        let e_it = Complex64::from_polar(1.0, self.theta);
        let mut a = Vec::with_capacity(n as usize + 1);
        a.push(Complex64::new(1.0, 0.0));
        for k in 1..=n as usize {
            let prev = a[k - 1];
            let factor = Complex64::new(self.mu + (k - 1) as f64, -y);
            a.push(prev * factor * e_it / k as f64);
        }
        // Re(u conj(v)) summed with Kahan compensation.
        let mut sum = 0.0f64;
        let mut comp = 0.0f64;
        for k in 0..=n as usize {
            let u = a[k];
            let v = a[n as usize - k];
            let term = u.re * v.re + u.im * v.im;
            let t = sum + term;
            comp += if sum.abs() >= term.abs() {
                (sum - t) + term
            } else {
                (term - t) + sum
            };
            sum = t;
        }
        let c_n = sum + comp;
        // (2 mu)_n / n! as a plain product, deliberately not sharing the
        // log-gamma path used by the hypergeometric route.
        let mut pref_sq = 1.0f64;
        for j in 1..=n as usize {
            pref_sq *= (2.0 * self.mu + (j - 1) as f64) / j as f64;
        }
        let val = c_n / pref_sq.sqrt();
        if !val.is_finite() {
            return Err(Error::Overflow);
        }
        Ok(val)
    }

    /// Recurrence route: last entry of [`PolyParams::recurrence_sequence`].
    pub fn eval_recurrence(&self, n: u32, y: f64) -> Result<f64> {
        Ok(*self.recurrence_sequence(n, y)?.last().unwrap())
    }

    /// All values `p_0(y) .. p_{n_max}(y)` by the orthonormal three term
    /// recurrence
    ///
    /// ```text
    /// p_{k+1} = ( 2 (y sin(theta) + (k + mu) cos(theta)) p_k
    ///             - sqrt(k (k + 2 mu - 1)) p_{k-1} ) / sqrt((k+1)(k + 2 mu))
    /// ```
    ///
    /// Forward iteration follows the dominant solution here, so the relative
    /// error grows only like `sqrt(n)` times epsilon; no degree cap is
    /// imposed. This is the route to use for large-degree work.
    pub fn recurrence_sequence(&self, n_max: u32, y: f64) -> Result<Vec<f64>> {
        check_finite_y(y)?;
        let (sin_t, cos_t) = self.theta.sin_cos();
        let two_mu = 2.0 * self.mu;
        let mut seq = Vec::with_capacity(n_max as usize + 1);
        seq.push(1.0f64);
        let mut prev = 0.0f64; // p_{-1}, multiplied by a zero coefficient at k = 0
        let mut curr = 1.0f64;
        for k in 0..n_max as u64 {
            let kf = k as f64;
            let a = 2.0 * (y * sin_t + (kf + self.mu) * cos_t);
            let b = (kf * (kf + two_mu - 1.0)).sqrt();
            let c = ((kf + 1.0) * (kf + two_mu)).sqrt();
            let next = (a * curr - b * prev) / c;
            prev = curr;
            curr = next;
            seq.push(curr);
        }
        if !curr.is_finite() {
            return Err(Error::Overflow);
        }
        Ok(seq)
    }

    /// Orthogonality weight
    /// `(2 sin theta)^{2 mu} e^{(2 theta - pi) y} |Gamma(mu + i y)|^2 / (2 pi Gamma(2 mu))`,
    /// assembled in log space so intermediate factors cannot overflow. Decays
    /// to zero in both tails for every valid parameter pair; underflow to
    /// `0.0` at extreme `y` is the correct limit, not an error.
    pub fn weight(&self, y: f64) -> Result<f64> {
        check_finite_y(y)?;
        let lg = special::log_gamma_complex(Complex64::new(self.mu, y))?;
        let ln_rho = 2.0 * self.mu * (2.0 * self.theta.sin()).ln()
            + (2.0 * self.theta - std::f64::consts::PI) * y
            + 2.0 * lg.log_modulus
            - (2.0 * std::f64::consts::PI).ln()
            - special::log_gamma_real(2.0 * self.mu)?;
        Ok(ln_rho.exp())
    }
}

fn check_finite_y(y: f64) -> Result<()> {
    if !y.is_finite() {
        return Err(Error::Domain(format!("y = {y} must be finite")));
    }
    Ok(())
}
