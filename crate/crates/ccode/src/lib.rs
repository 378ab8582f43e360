//! Algebraic channel-coding toolkit.
//!
//! Building blocks, bottom up:
//!
//! - [`gf`]: prime fields F_p and extension fields F_{p^m}, with log/antilog
//!   tables, conjugacy classes, and minimal polynomials.
//! - [`poly`]: dense polynomials over a field — arithmetic, division,
//!   evaluation, gcd, irreducibility.
//! - [`matf`]: matrices over a field — reduced row echelon form, null space,
//!   rank, inversion.
//! - [`channel`]: discrete memoryless channels, MAP/ML decision rules, exact
//!   block-error probability, and Monte Carlo simulation.
//! - [`linear`]: linear block codes — generator/check matrices, weight
//!   enumerators, the Bhattacharyya bound, and syndrome (= ML on a BSC)
//!   decoding.
//! - [`cyclic`]: cyclic codes — generator/check polynomials and the three
//!   classic encoders.
//! - [`rs`]: Reed–Solomon codes as polynomial-evaluation codes, the discrete
//!   Fourier view, and erasure decoding.
//! - [`bch`]: binary BCH codes — designed distance, Berlekamp–Massey error
//!   decoding, and erasure decoding.
//!
//! Field elements travel as raw `u64` encodings (see [`gf`]); vectors are
//! `Vec<u64>` in ascending-index order, matching polynomial coefficient
//! order wherever a vector and a polynomial describe the same object.

pub mod bch;
pub mod channel;
pub mod cyclic;
pub mod gf;
pub mod linear;
pub mod matf;
pub mod poly;
pub mod rs;

pub use bch::BchCode;
pub use channel::{Dist, Dmc, MonteCarloReport};
pub use cyclic::CyclicCode;
pub use gf::{Elem, Field, GfError};
pub use linear::LinearCode;
pub use matf::MatF;
pub use poly::{Degree, Poly};
pub use rs::RsCode;

/// Outcome of a successful error-correcting decode: the codeword the decoder
/// settled on and the error pattern it removed (`y = codeword + error`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeReport {
    pub codeword: Vec<u64>,
    pub error: Vec<u64>,
}
