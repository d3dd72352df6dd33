pub mod betti;
pub mod error;
pub mod fatpoints;
pub mod harness;
pub mod ideals;
pub mod polycore;
pub mod surface;
pub mod syzygy;

pub use error::{Error, Result};
pub use polycore::{Monomial, Polynomial, Rational, RationalMatrix, Subspace};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/overview.md")]
    mod overview {}
    #[doc = include_str!("../../../book/src/exact-arithmetic.md")]
    mod exact_arithmetic {}
    #[doc = include_str!("../../../book/src/hilbert-functions.md")]
    mod hilbert_functions {}
    #[doc = include_str!("../../../book/src/betti-tables.md")]
    mod betti_tables {}
    #[doc = include_str!("../../../book/src/syzygies.md")]
    mod syzygies {}
    #[doc = include_str!("../../../book/src/fat-points.md")]
    mod fat_points {}
    #[doc = include_str!("../../../book/src/negative-curves.md")]
    mod negative_curves {}
    #[doc = include_str!("../../../book/src/sweeps.md")]
    mod sweeps {}
}
