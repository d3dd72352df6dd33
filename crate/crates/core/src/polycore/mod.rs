//! Exact arithmetic substrate: rationals, monomials, sparse polynomials and
//! linear algebra over Q.

pub mod linalg;
pub mod modular;
pub mod monomial;
pub mod polynomial;

pub type Rational = num_rational::BigRational;

pub use linalg::{
    echelon, echelon_fraction_free, kernel, rank, rank_lower_bound, subspace_intersection,
    subspace_sum, Echelon, RationalMatrix, SparseMatrix, Subspace,
};
pub use monomial::{binomial, count_monomials, monomial_basis, Monomial};
pub use polynomial::{
    linear_form_power, linear_form_power_int, parse_polynomial, poly_mul, Polynomial,
};

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
