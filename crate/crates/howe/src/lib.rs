//! Exact arithmetic for the representation theory of finite symplectic and
//! orthogonal groups: Lusztig-style classification data, dimension
//! polynomials in `q`, and the stable-range eta/zeta transfer maps between
//! `Sp(2N)` and `O(W,B)` sitting inside a dual pair.
//!
//! Everything is computed exactly. Group orders and combinatorial
//! identities live in `Z[q]` ([`QPoly`]); representation dimensions may pick
//! up powers of two in the denominator (central characters split
//! representations in half), so they live in `Q[q]` ([`QRatPoly`]).
//!
//! The crate is organised to mirror the mathematical layers:
//!
//! - [`qpoly`]: dense polynomials over a generic coefficient ring, with
//!   Gaussian binomials, structured products, and checked exact division;
//! - [`symbols`]: two-row symbols and partitions, their ranks, defects and
//!   generic degrees;
//! - [`groups`]: group specifications, exact orders, duality, and isotropic
//!   parabolic quotients;
//! - [`semisimple`]: semisimple conjugacy-class data, centralizers, the
//!   quadratic-character sign, and exhaustive enumeration at numeric `q`;
//! - [`classify`]: full classification data for irreducible representations
//!   and their dimension polynomials;
//! - [`correspond`]: the eta (`phi`) and zeta (`psi`) constructions in the
//!   two stable ranges;
//! - [`identities`]: top-part dimension formulas, level decompositions and
//!   the end-to-end verification harnesses.

pub mod classify;
pub mod correspond;
pub mod error;
pub mod groups;
pub mod identities;
pub mod qpoly;
pub mod semisimple;
pub mod symbols;

mod sign;

pub use classify::{enumerate_irreps, irrep_dimension, n_rank, ClassificationData, UnipotentDatum};
pub use correspond::{phi, phi_dimension_closed_form, psi, DualPairSpec, StableRange};
pub use error::Error;
pub use groups::{dual, isotropic_parabolic_quotient_order, order, GroupOrder, GroupSpec};
pub use identities::{
    check_q_multinomial, top_dim_orthogonal, top_dim_symplectic, verify_correspondence_identity,
    verify_full_decomposition, TopDimReport,
};
pub use qpoly::{q_binomial, structured_product, ProductFactor, QPolynomial};
pub use semisimple::{
    centralizer, enumerate_semisimple_classes, epsilon_sign, Bounds, Eigenvalue, SemisimpleClass,
};
pub use sign::Sign;
pub use symbols::{Partition, Symbol, SymbolType};

/// Integer-coefficient polynomials in `q`: group orders, Gaussian binomials,
/// top-part dimensions.
pub type QPoly = QPolynomial<num_bigint::BigInt>;

/// Rational-coefficient polynomials in `q`: representation dimensions, which
/// can carry powers of two in the denominator.
pub type QRatPoly = QPolynomial<num_rational::BigRational>;
