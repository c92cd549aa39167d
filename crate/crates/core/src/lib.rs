//! Exact quantum quasi-shuffle algebras.
//!
//! The crate builds the tensor algebra `T(A)` over a braided algebra
//! `(A, m, σ)` with coefficients in `Q(q)` and provides:
//!
//! * the quantum quasi-shuffle product `⋈` by left and right recursion and
//!   by the explicit mixable-shuffle and marked-permutation sums
//!   ([`qshuffle`]);
//! * the braided coalgebra `(T(C), Φ, β)` dual to it ([`dualcoalg`]);
//! * Rota–Baxter representations and truncated multiple q-zeta values
//!   ([`rotabaxter`]);
//! * verification sweeps that cross-check all of the above ([`verify`]).
//!
//! All arithmetic is exact. Coefficients are [`Scalar`]s, rational
//! functions in the indeterminate `q`.

pub mod braided;
pub mod combinat;
pub mod dualcoalg;
pub mod error;
pub mod linear;
pub mod memo;
pub mod par;
pub mod qshuffle;
pub mod report;
pub mod rotabaxter;
pub mod scalar;
pub mod tensor;
pub mod text;
pub mod verify;

pub use braided::{BraidedAlgebra, BraidedCoalgebra, Braiding, Multiplication};
pub use error::{Error, Result};
pub use linear::{Combination, Element, Element2, Element3, Letter, LinearV, VectorInV2, Word};
pub use qshuffle::QShuffle;
pub use report::{Report, Status};
pub use scalar::{qfactorial, qint, Poly, Scalar};
