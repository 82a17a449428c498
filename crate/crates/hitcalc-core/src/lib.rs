//! Computation of minimal generating sets ("admissible monomial bases") and
//! quotient dimensions of the polynomial algebra `F_2[x_1, ..., x_t]` viewed
//! as a module over the mod-2 Steenrod algebra.
//!
//! The quotient in degree `n` is the space of degree-`n` polynomials modulo
//! the hit elements, i.e. modulo the span of the images of the Steenrod
//! squares `Sq^{2^i}`. Its canonical basis is the set of admissible
//! monomials: those that are not congruent to a sum of strictly smaller
//! monomials under the weight-then-exponent order.
//!
//! The crate is organised bottom-up:
//!
//! * [`arith`]: binary digit counts, the `μ` function, binomials mod 2,
//!   generic-degree arithmetic and the closed-form dimension transfer.
//! * [`monomial`]: exponent tuples, weight vectors, the monomial order,
//!   spikes and support classification.
//! * [`poly`]: polynomials over `F_2` and variable-substitution maps.
//! * [`steenrod`]: the action of `Sq^k` via the Cartan formula.
//! * [`linalg`]: bit-packed streaming row echelon over `GF(2)`.
//! * [`quotient`]: hit spans, quotient dimensions, admissible bases,
//!   weight-filtered components, the Kameko map and hit criteria.
//! * [`maps`]: structural homomorphisms between variable counts.
//! * [`invariant`]: symmetric and general-linear group actions on the
//!   quotient and the dimensions of their fixed subspaces.
//!
//! Heavy inner loops are data-parallel via `rayon` when the `parallel`
//! feature (default) is enabled; every entry point also has a sequential
//! path selectable at runtime through [`exec::ExecMode`].

pub mod arith;
pub mod error;
pub mod exec;
pub mod invariant;
pub mod linalg;
pub mod maps;
pub mod monomial;
pub mod poly;
pub mod quotient;
pub mod steenrod;

pub use error::Error;
pub use exec::ExecMode;
pub use monomial::{Monomial, WeightVector};
pub use poly::{Polynomial, SubstitutionMap};
pub use quotient::{HitCalc, HitTrace, QuotientBasis, SupportPart};
