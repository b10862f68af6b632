//! Meixner-Pollaczek polynomials as the energy-space backbone of the particle
//! in a box.
//!
//! The crate provides:
//!
//! - three independent evaluation routes for the orthonormal
//!   Meixner-Pollaczek family (exact hypergeometric sum, generating-function
//!   convolution, three-term recurrence) in [`poly`],
//! - the continuous orthogonality weight and quadrature checks over the whole
//!   real line in [`quadrature`],
//! - the large-degree sinusoidal form with its amplitude and scattering-style
//!   phase shift in [`asymptotics`],
//! - bound-state spectra read off from the zeros of that amplitude in
//!   [`spectrum`],
//! - the discrete Meixner family with its dual orthogonality in [`meixner`],
//!   and
//! - sine-basis wavefunction synthesis inside the box in [`wavefield`].
//!
//! Complex scalars are [`num_complex::Complex64`], re-exported as
//! [`Complex64`].

pub mod asymptotics;
pub mod error;
mod exact;
pub mod meixner;
pub mod poly;
pub mod quadrature;
pub mod special;
pub mod spectrum;
pub mod wavefield;

pub use error::{Error, Result};
pub use num_complex::Complex64;
