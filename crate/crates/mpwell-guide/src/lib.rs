//! Doc-test anchor for the book under `book/` at the workspace root.
//!
//! Each module's documentation is the corresponding chapter, included
//! verbatim, so `cargo test` compiles and runs every Rust snippet the book
//! shows. If a chapter drifts from the library, the build breaks here.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/polynomials.md")]
pub mod polynomials {}

#[doc = include_str!("../../../book/src/orthogonality.md")]
pub mod orthogonality {}

#[doc = include_str!("../../../book/src/asymptotics.md")]
pub mod asymptotics {}

#[doc = include_str!("../../../book/src/spectra.md")]
pub mod spectra {}

#[doc = include_str!("../../../book/src/wavefunctions.md")]
pub mod wavefunctions {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
