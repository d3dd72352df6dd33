//! Graded Betti numbers: the closed count for monomial `I_phi` and Koszul
//! homology for arbitrary Artinian quotients.

mod formula;
mod koszul;
mod table;

pub use formula::{betti_formula_monomial, composition_degree, compositions, stirling_second};
pub use koszul::{betti_koszul, betti_linear_algebra, betti_of_quotient};
pub use table::BettiTable;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::ideals::{build_j_phi, PhiParams};

/// Betti table of `R/J_phi` next to the predicted one (that of `R/I_phi`).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub params: PhiParams,
    pub predicted: BettiTable,
    pub computed: BettiTable,
    pub equal: bool,
    /// Set outside three variables, where a mismatch is data rather than failure.
    pub exploratory: bool,
}

pub fn check_conjecture(p: &PhiParams) -> Result<ConjectureReport> {
    let predicted = betti_formula_monomial(p);
    let computed = betti_koszul(&build_j_phi(p))?;
    Ok(ConjectureReport {
        params: *p,
        equal: predicted == computed,
        predicted,
        computed,
        exploratory: p.n != 3,
    })
}
