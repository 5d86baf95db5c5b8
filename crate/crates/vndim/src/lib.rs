//! Exact finite-section analysis of group-ring convolution operators.
//!
//! For a preset finitely generated amenable group `G` with a fixed symmetric
//! generating set, this crate computes — in exact Gaussian-rational
//! arithmetic — two-sided bounds on the von Neumann dimension of the kernel
//! of left multiplication by a group-ring element `α`, by restricting the
//! operator to finite Følner windows. When the kernel is nonzero it extracts
//! a certified zero-divisor witness: a nonzero `γ` with `αγ = 0`.
//!
//! The pipeline, bottom to top:
//!
//! * [`group`] — normal forms and exact group law for the presets
//!   (free abelian `ℤ^d`, discrete Heisenberg, `ℤ × ℤ/2`, lamplighter).
//! * [`cayley`] — word-metric balls and distances via breadth-first search;
//!   the deterministic `(distance, normal form)` element order used wherever
//!   elements index matrix rows and columns.
//! * [`foelner`] — preset Følner windows, their `r`-boundaries, interiors,
//!   and isoperimetric ratios.
//! * [`ring`] — finitely supported functions `G → ℚ(i)` with convolution.
//! * [`linalg`] — sparse reduced row echelon elimination over any [`Scalar`].
//! * [`section`] — the restricted multiplication matrices, their exact
//!   nullspaces, and per-window dimension bounds.
//! * [`dim`] — projection-based normalized dimension of a finitely spanned
//!   subspace over a finite window, cross-validating the counting shortcut.
//! * [`witness`] — the growing-window zero-divisor search and its
//!   independent certification.
//!
//! All rank and nullity decisions are made over exact coefficients; floating
//! point scalars satisfy [`Scalar`] for diagnostics but never feed the
//! bounds reported here.

pub mod cayley;
pub mod cli;
pub mod dim;
pub mod error;
pub mod foelner;
pub mod group;
pub mod linalg;
pub mod ring;
pub mod scalar;
pub mod section;
pub mod witness;

pub use error::{Error, Result};
pub use group::{GroupElement, GroupSpec};
pub use scalar::Scalar;

/// Arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;

/// Gaussian rational: exact rational real and imaginary parts.
pub type GaussRational = num_complex::Complex<Rational>;

/// Default cap on the number of elements a single enumeration may visit.
pub const DEFAULT_CAP: usize = 5_000_000;
