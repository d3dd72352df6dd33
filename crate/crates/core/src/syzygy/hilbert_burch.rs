use num_traits::Zero;
use serde::Serialize;

use super::polymatrix::{PolyMatrix, PolyMatrixJson};
use crate::error::{Error, Result};
use crate::ideals::{colon_graded, GradedIdeal};
use crate::polycore::{count_monomials, Polynomial, Rational};

/// A three-generator codimension two ideal with its `3 x 2` syzygy matrix.
#[derive(Clone, Debug)]
pub struct HilbertBurchData {
    pub name: String,
    pub ideal: GradedIdeal,
    /// `matrix[row][col]`: column `c` is a syzygy, row `r` pairs with generator `r`.
    pub matrix: [[Polynomial; 2]; 3],
    pub degree: u32,
    pub scale: Rational,
}

fn minor(m: &[[Polynomial; 2]; 3], r1: usize, r2: usize) -> Polynomial {
    &(&m[r1][0] * &m[r2][1]) - &(&m[r1][1] * &m[r2][0])
}

/// The two syzygies of `ideal` in `degree`, in reduced echelon form, and the
/// constant relating the maximal minors to the generators.
pub fn hilbert_burch(name: &str, ideal: &GradedIdeal, degree: u32) -> Result<HilbertBurchData> {
    if ideal.len() != 3 {
        return Err(Error::Malformed(format!(
            "{name} has {} generators, expected 3",
            ideal.len()
        )));
    }
    let row = PolyMatrix::generator_row(ideal.nvars(), ideal.generators())?;
    let kernel = row.kernel_at(degree);
    if kernel.len() != 2 {
        return Err(Error::HilbertBurchShape {
            subideal: name.to_string(),
            degree,
            found: kernel.len(),
        });
    }
    let matrix: [[Polynomial; 2]; 3] =
        std::array::from_fn(|r| [kernel[0][r].clone(), kernel[1][r].clone()]);
    let scale = minor(&matrix, 1, 2)
        .constant_ratio(&ideal.generators()[0])
        .filter(|c| !c.is_zero())
        .ok_or_else(|| Error::MinorNotDivisible {
            subideal: name.to_string(),
            generator: 0,
        })?;
    Ok(HilbertBurchData {
        name: name.to_string(),
        ideal: ideal.clone(),
        matrix,
        degree,
        scale,
    })
}

impl HilbertBurchData {
    /// Signed minors `(Δ23, -Δ13, Δ12)`, each of which should be `scale * g_i`.
    pub fn signed_minors(&self) -> [Polynomial; 3] {
        [
            minor(&self.matrix, 1, 2),
            -&minor(&self.matrix, 0, 2),
            minor(&self.matrix, 0, 1),
        ]
    }

    pub fn columns(&self) -> [Vec<Polynomial>; 2] {
        std::array::from_fn(|c| (0..3).map(|r| self.matrix[r][c].clone()).collect())
    }

    /// Whether both columns annihilate the generator row.
    pub fn columns_are_syzygies(&self) -> bool {
        self.columns().iter().all(|col| {
            let mut acc = Polynomial::zero(self.ideal.nvars());
            for (g, c) in self.ideal.generators().iter().zip(col) {
                acc = &acc + &(g * c);
            }
            acc.is_zero()
        })
    }

    /// Ideal generated by the first-row entries.
    pub fn first_row_ideal(&self) -> Result<GradedIdeal> {
        GradedIdeal::new(self.ideal.nvars(), self.matrix[0].to_vec())
    }

    pub fn to_json(&self) -> PolyMatrixJson {
        let twists = self.ideal.degrees().to_vec();
        let cols: Vec<(Vec<Polynomial>, u32)> = self
            .columns()
            .into_iter()
            .map(|c| (c, self.degree))
            .collect();
        let m = PolyMatrix::from_columns(self.ideal.nvars(), twists, &cols)
            .expect("validated on construction");
        PolyMatrixJson::from(&m)
    }
}

/// Every signed minor equals the scale constant times its generator.
pub fn verify_minor_identities(h: &HilbertBurchData) -> bool {
    h.signed_minors()
        .iter()
        .zip(h.ideal.generators())
        .all(|(m, g)| m == &g.scale(&h.scale))
}

/// Result of comparing `<first row>` with `(g_2, g_3) : g_1` degree by degree.
#[derive(Clone, Debug, Serialize)]
pub struct ColonComparison {
    /// `(degree, dim of first-row piece, dim of colon piece)`.
    pub dims: Vec<(u32, usize, usize)>,
    pub equal: bool,
}

/// Checks `<a_1, a_2> = <g_2, g_3> : g_1` in every degree up to `dmax`.
///
/// The first-row ideal sits inside the colon, so only dimensions need
/// comparing. With `T = d + deg g_1`,
/// `dim (colon)_d = dim Syz(g_1, g_2, g_3)_T - dim Syz(g_2, g_3)_T`, and the
/// Koszul relation bounds the last term from below by `dim R_{T - e_2 - e_3}`.
/// Modular ranks then bound the colon from above and the first-row piece from
/// below; when they meet the pieces are equal. Otherwise the colon is
/// computed exactly as a kernel.
pub fn verify_colon_identity(h: &HilbertBurchData, dmax: u32) -> Result<ColonComparison> {
    if !h.columns_are_syzygies() {
        return Ok(ColonComparison {
            dims: Vec::new(),
            equal: false,
        });
    }
    let nvars = h.ideal.nvars();
    let first_row = h.first_row_ideal()?;
    let first_row_map = PolyMatrix::generator_row(nvars, first_row.generators())?;
    let full_map = PolyMatrix::generator_row(nvars, h.ideal.generators())?;
    let residual = h.ideal.select(&[1, 2]);
    let f = &h.ideal.generators()[0];
    let degs = h.ideal.degrees();
    let mut dims = Vec::new();
    let mut equal = true;
    for d in 0..=dmax {
        let t = d + degs[0];
        let koszul = t
            .checked_sub(degs[1] + degs[2])
            .map_or(0, |s| count_monomials(nvars, s));
        let colon_ub = full_map.source_dim(t) - full_map.image_rank_lower_bound_at(t) - koszul;
        let row_lb = first_row_map.image_rank_lower_bound_at(d);
        if row_lb == colon_ub {
            dims.push((d, row_lb, colon_ub));
            continue;
        }
        let colon = colon_graded(&residual, f, d)?;
        let row_piece = first_row.graded_piece(d);
        equal &= row_piece.dim() == colon.dim() && row_piece.is_subspace_of(&colon);
        dims.push((d, row_piece.dim(), colon.dim()));
    }
    Ok(ColonComparison { dims, equal })
}
