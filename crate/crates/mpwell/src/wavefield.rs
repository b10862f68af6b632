//! Sine basis on the box, bound-state synthesis from the discrete family,
//! sampling, overlaps, and truncation diagnostics.

use crate::error::{Error, Result};
use crate::meixner::{self, MeixnerParams};

/// Largest accepted truncation length, matching the degree cap of the
/// polynomial evaluators behind the coefficients.
pub const TRUNCATION_LIMIT: usize = 200;

/// A synthesis is accepted only when the last kept coefficient has fallen
/// this far below the largest one.
pub const TAIL_RATIO_LIMIT: f64 = 1e-8;

/// The box `[0, a]` with its orthonormal sine basis.
///
/// Index convention: `eval(n, x) = sqrt(2/a) sin((n+1) pi x / a)`, so the
/// lowest basis function (one hump, no interior node) sits at `n = 0`. The
/// unshifted labeling would make the first function identically zero, which
/// cannot belong to an orthonormal set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoxBasis {
    a: f64,
}

impl BoxBasis {
    pub fn new(a: f64) -> Result<Self> {
        if !a.is_finite() || a <= 0.0 {
            return Err(Error::Domain(format!(
                "BoxBasis: width a = {a} must be finite and positive"
            )));
        }
        Ok(Self { a })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    /// `sqrt(2/a) sin((n+1) pi x / a)` for `0 <= x <= a`.
    ///
    /// The boundary values are returned as exact zeros: they are zeros of
    /// the function, not of the floating-point sine, whose argument
    /// reduction would otherwise leave residues of order `n * epsilon`.
    pub fn eval(&self, n: u32, x: f64) -> Result<f64> {
        if !x.is_finite() || x < 0.0 || x > self.a {
            return Err(Error::Domain(format!(
                "basis point x = {x} lies outside [0, {}]",
                self.a
            )));
        }
        if x == 0.0 || x == self.a {
            return Ok(0.0);
        }
        let arg = (n as f64 + 1.0) * std::f64::consts::PI * x / self.a;
        Ok((2.0 / self.a).sqrt() * arg.sin())
    }
}

/// Origin of a synthesized expansion: which bound state, from which
/// discrete-family parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SynthesisMeta {
    pub m: u32,
    pub mu: f64,
    pub g: f64,
}

/// A truncated coefficient vector over the sine basis of a box.
///
/// `tail_ratio` is `|f_{N-1}| / max_n |f_n|`, the quantity the synthesis
/// acceptance gate checks; it is recorded on every expansion, accepted or
/// hand-built.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesExpansion {
    a: f64,
    coefficients: Vec<f64>,
    tail_ratio: f64,
    meta: Option<SynthesisMeta>,
}

impl SeriesExpansion {
    /// Wrap an explicit coefficient vector (no tail-ratio gate applied; that
    /// gate belongs to [`synthesize_bound_state`]).
    pub fn new(a: f64, coefficients: Vec<f64>) -> Result<Self> {
        BoxBasis::new(a)?;
        if coefficients.is_empty() {
            return Err(Error::Domain(
                "SeriesExpansion: at least one coefficient required".into(),
            ));
        }
        if coefficients.len() > TRUNCATION_LIMIT {
            return Err(Error::DegreeLimit {
                n: coefficients.len(),
                max: TRUNCATION_LIMIT,
            });
        }
        if let Some(bad) = coefficients.iter().find(|c| !c.is_finite()) {
            return Err(Error::Domain(format!(
                "SeriesExpansion: non-finite coefficient {bad}"
            )));
        }
        let tail_ratio = tail_ratio(&coefficients);
        Ok(Self {
            a,
            coefficients,
            tail_ratio,
            meta: None,
        })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    pub fn truncation(&self) -> usize {
        self.coefficients.len()
    }

    pub fn tail_ratio(&self) -> f64 {
        self.tail_ratio
    }

    pub fn meta(&self) -> Option<&SynthesisMeta> {
        self.meta.as_ref()
    }

    /// Euclidean norm of the coefficient vector; by basis orthonormality
    /// this is the L2 norm of the synthesized wavefunction.
    pub fn norm(&self) -> f64 {
        self.coefficients
            .iter()
            .map(|c| c * c)
            .sum::<f64>()
            .sqrt()
    }
}

fn tail_ratio(coefficients: &[f64]) -> f64 {
    let max = coefficients.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    if max == 0.0 {
        0.0
    } else {
        coefficients.last().unwrap().abs() / max
    }
}

/// Coefficients of the `m`-th bound state over the sine basis:
/// `f_n = sqrt(omega_m) M_n(m)` for `n = 0 .. n_trunc - 1`.
///
/// The coefficients decay like `e^{-n g}`, and the expansion is accepted
/// only once the recorded tail ratio is below [`TAIL_RATIO_LIMIT`];
/// otherwise the error reports how many terms that decay rate says would
/// suffice, so the caller can retry instead of guessing.
pub fn synthesize_bound_state(
    basis: &BoxBasis,
    params: &MeixnerParams,
    m: u32,
    n_trunc: usize,
) -> Result<SeriesExpansion> {
    if n_trunc == 0 {
        return Err(Error::Domain(
            "synthesize_bound_state: truncation must be at least 1".into(),
        ));
    }
    if n_trunc > TRUNCATION_LIMIT {
        return Err(Error::DegreeLimit {
            n: n_trunc,
            max: TRUNCATION_LIMIT,
        });
    }
    let sqrt_w = meixner::meixner_weight(params, m)?.sqrt();
    let mut coefficients = Vec::with_capacity(n_trunc);
    for n in 0..n_trunc {
        coefficients.push(sqrt_w * meixner::meixner_eval(params, n as u32, m)?);
    }
    let ratio = tail_ratio(&coefficients);
    if ratio > TAIL_RATIO_LIMIT {
        let extra = ((ratio / TAIL_RATIO_LIMIT).ln() / params.g()).ceil() as usize + 5;
        return Err(Error::TruncationInsufficient {
            tail_ratio: ratio,
            limit: TAIL_RATIO_LIMIT,
            suggested: n_trunc + extra,
        });
    }
    Ok(SeriesExpansion {
        a: basis.a(),
        coefficients,
        tail_ratio: ratio,
        meta: Some(SynthesisMeta {
            m,
            mu: params.mu(),
            g: params.g(),
        }),
    })
}

/// `psi(x) = sum_n f_n phi_n(x)` on a nondecreasing grid inside `[0, a]`.
pub fn wavefunction_sample(
    expansion: &SeriesExpansion,
    x_grid: &[f64],
) -> Result<Vec<(f64, f64)>> {
    for pair in x_grid.windows(2) {
        if !(pair[1] >= pair[0]) {
            return Err(Error::Domain(format!(
                "wavefunction_sample: grid must be nondecreasing, got {} after {}",
                pair[1], pair[0]
            )));
        }
    }
    let basis = BoxBasis::new(expansion.a)?;
    let mut out = Vec::with_capacity(x_grid.len());
    for &x in x_grid {
        let mut psi = 0.0f64;
        let mut comp = 0.0f64;
        for (n, f) in expansion.coefficients.iter().enumerate() {
            let term = f * basis.eval(n as u32, x)?;
            let t = psi + term;
            comp += if psi.abs() >= term.abs() {
                (psi - t) + term
            } else {
                (term - t) + psi
            };
            psi = t;
        }
        out.push((x, psi + comp));
    }
    Ok(out)
}

/// `<psi_1 | psi_2> = sum_n f_n g_n`, the inner product that basis
/// orthonormality induces on coefficient vectors; the shorter vector is
/// implicitly zero-padded.
pub fn overlap(e1: &SeriesExpansion, e2: &SeriesExpansion) -> Result<f64> {
    if e1.a != e2.a {
        return Err(Error::MismatchedBox { a1: e1.a, a2: e2.a });
    }
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for (f, g) in e1.coefficients.iter().zip(e2.coefficients.iter()) {
        let term = f * g;
        let t = sum + term;
        comp += if sum.abs() >= term.abs() {
            (sum - t) + term
        } else {
            (term - t) + sum
        };
        sum = t;
    }
    Ok(sum + comp)
}

/// Projection of the expansion onto the textbook eigenfunction
/// `sqrt(2/a) sin(m pi x / a)`, `m >= 1`: under the shifted basis labeling
/// that eigenfunction IS basis state `m - 1`, so the projection is the
/// coefficient `f_{m-1}` (zero if the truncation ends earlier).
pub fn analytic_overlap(expansion: &SeriesExpansion, m_analytic: u32) -> Result<f64> {
    if m_analytic == 0 {
        return Err(Error::Domain(
            "analytic_overlap: the textbook label starts at m = 1 (the m = 0 entry is the null function)"
                .into(),
        ));
    }
    Ok(expansion
        .coefficients
        .get(m_analytic as usize - 1)
        .copied()
        .unwrap_or(0.0))
}
