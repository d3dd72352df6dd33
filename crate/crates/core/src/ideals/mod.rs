//! Homogeneous ideals given by generators, queried one graded piece at a time.

mod colon;
mod hilbert;
mod phi;

pub use colon::{colon_graded, colon_hilbert_function};
pub use hilbert::{HilbertData, IntPolynomial};
pub use phi::{build_i_phi, build_j_phi, PhiParams};

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polycore::{
    count_monomials, kernel, monomial_basis, Monomial, Polynomial, Rational, SparseMatrix, Subspace,
};

/// An ideal of `K[x_1..x_n]` generated by nonzero homogeneous polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedIdeal {
    nvars: usize,
    generators: Vec<Polynomial>,
    degrees: Vec<u32>,
}

impl GradedIdeal {
    pub fn new(nvars: usize, generators: Vec<Polynomial>) -> Result<Self> {
        let mut degrees = Vec::with_capacity(generators.len());
        for g in &generators {
            if g.nvars() != nvars {
                return Err(Error::NvarsMismatch {
                    left: nvars,
                    right: g.nvars(),
                });
            }
            match g.homogeneous_degree()? {
                Some(d) => degrees.push(d),
                None => return Err(Error::Malformed("zero generator".into())),
            }
        }
        Ok(Self {
            nvars,
            generators,
            degrees,
        })
    }

    /// The ideal generated by the given monomials.
    pub fn monomial(nvars: usize, monomials: &[Monomial]) -> Result<Self> {
        Self::new(
            nvars,
            monomials
                .iter()
                .map(|m| Polynomial::monomial(m.clone(), Rational::one()))
                .collect(),
        )
    }

    /// The homogeneous maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(nvars: usize) -> Self {
        Self::new(
            nvars,
            (0..nvars).map(|i| Polynomial::var(nvars, i)).collect(),
        )
        .expect("variables are homogeneous")
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn max_degree(&self) -> u32 {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    /// Subideal generated by the listed generators, in the listed order.
    pub fn select(&self, indices: &[usize]) -> GradedIdeal {
        GradedIdeal {
            nvars: self.nvars,
            generators: indices
                .iter()
                .map(|&i| self.generators[i].clone())
                .collect(),
            degrees: indices.iter().map(|&i| self.degrees[i]).collect(),
        }
    }

    pub fn sum(&self, other: &GradedIdeal) -> Result<GradedIdeal> {
        if self.nvars != other.nvars {
            return Err(Error::NvarsMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        let mut out = self.clone();
        out.generators.extend(other.generators.iter().cloned());
        out.degrees.extend(&other.degrees);
        Ok(out)
    }

    pub fn with_generator(&self, f: Polynomial) -> Result<GradedIdeal> {
        self.sum(&GradedIdeal::new(self.nvars, vec![f])?)
    }

    /// `I_d` as a subspace of `R_d` in [`monomial_basis`] coordinates.
    pub fn graded_piece(&self, d: u32) -> Subspace {
        let mut rows = SparseMatrix::new(count_monomials(self.nvars, d));
        for (g, &e) in self.generators.iter().zip(&self.degrees) {
            if e > d {
                continue;
            }
            for mu in monomial_basis(self.nvars, d - e) {
                rows.push(
                    g.mul_monomial(&mu)
                        .terms()
                        .map(|(m, c)| (m.index(), c.clone()))
                        .collect(),
                );
            }
        }
        Subspace::span_sparse(&rows)
    }

    /// The annihilator of `I_d` in the dual of `R_d`, which is naturally the
    /// dual of `(R/I)_d`.
    pub fn quotient_piece(&self, d: u32) -> QuotientPiece {
        let basis = monomial_basis(self.nvars, d);
        let walls: Vec<&Monomial> = self
            .generators
            .iter()
            .zip(&self.degrees)
            .filter(|(g, &e)| e <= d && g.num_terms() == 1)
            .map(|(g, _)| g.leading_term().expect("nonzero").0)
            .collect();
        // coordinates on the monomials outside the monomial part of I
        let standard: Vec<usize> = (0..basis.len())
            .filter(|&i| !walls.iter().any(|w| w.divides(&basis[i])))
            .collect();
        let position: HashMap<usize, usize> =
            standard.iter().enumerate().map(|(s, &i)| (i, s)).collect();
        let mut rows = SparseMatrix::new(standard.len());
        if !standard.is_empty() {
            for (g, &e) in self.generators.iter().zip(&self.degrees) {
                if e > d || g.num_terms() == 1 {
                    continue;
                }
                for mu in monomial_basis(self.nvars, d - e) {
                    let row: Vec<(usize, Rational)> = g
                        .mul_monomial(&mu)
                        .terms()
                        .filter_map(|(m, c)| position.get(&m.index()).map(|&s| (s, c.clone())))
                        .collect();
                    if !row.is_empty() {
                        rows.push(row);
                    }
                }
            }
        }
        let dual: Vec<Vec<Rational>> = kernel(&rows)
            .into_iter()
            .map(|v| {
                let mut full = vec![Rational::zero(); basis.len()];
                for (s, x) in v.into_iter().enumerate() {
                    full[standard[s]] = x;
                }
                full
            })
            .collect();
        QuotientPiece::new(self.nvars, d, dual)
    }

    pub fn hilbert_function(&self, d: u32) -> usize {
        self.quotient_piece(d).dim()
    }

    /// Graded pieces of `R/I` up to the socle degree.
    ///
    /// `(R/I)_d = 0` forces `(R/I)_{d+1} = 0`, so the scan stops at the first
    /// vanishing piece. Quotients still alive past `n (D - 1)` with `D` the top
    /// generator degree are reported as not Artinian.
    pub fn quotient(&self) -> Result<Quotient> {
        let bound = (self.nvars as u32) * self.max_degree().saturating_sub(1) + 1;
        let mut pieces = Vec::new();
        for d in 0..=bound {
            let piece = self.quotient_piece(d);
            if piece.dim() == 0 {
                return Ok(Quotient {
                    nvars: self.nvars,
                    pieces,
                });
            }
            pieces.push(piece);
        }
        Err(Error::NotArtinian { degree: bound })
    }

    pub fn hilbert_data(&self) -> Result<HilbertData> {
        Ok(self.quotient()?.hilbert_data())
    }

    pub fn hilbert_numerator(&self) -> Result<IntPolynomial> {
        Ok(self.hilbert_data()?.numerator(self.nvars))
    }
}

/// Dual basis of one graded piece of `R/I`.
///
/// The rows form the reduced echelon basis of `I_d^⊥`; their pivot columns
/// pick out monomials whose classes form a basis of `(R/I)_d`.
#[derive(Clone, Debug)]
pub struct QuotientPiece {
    nvars: usize,
    degree: u32,
    dual: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl QuotientPiece {
    fn new(nvars: usize, degree: u32, dual: Vec<Vec<Rational>>) -> Self {
        let pivots = dual
            .iter()
            .map(|w| {
                w.iter()
                    .position(|x| !x.is_zero())
                    .expect("nonzero dual vector")
            })
            .collect();
        Self {
            nvars,
            degree,
            dual,
            pivots,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.dual.len()
    }

    pub fn dual_basis(&self) -> &[Vec<Rational>] {
        &self.dual
    }

    /// Indices (in `monomial_basis(n, degree)`) of the standard basis monomials.
    pub fn basis_indices(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_monomials(&self) -> Vec<Monomial> {
        let all = monomial_basis(self.nvars, self.degree);
        self.pivots.iter().map(|&i| all[i].clone()).collect()
    }

    /// Coordinates of the class of a monomial (given by its index) in the
    /// standard basis.
    pub fn coordinates_of_index(&self, index: usize) -> Vec<Rational> {
        self.dual.iter().map(|w| w[index].clone()).collect()
    }

    /// Coordinates of the class of `f`, a form of this degree.
    pub fn coordinates(&self, f: &Polynomial) -> Result<Vec<Rational>> {
        let v = f.to_coeff_vector(self.degree)?;
        Ok(self
            .dual
            .iter()
            .map(|w| w.iter().zip(&v).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// Whether `f` lies in `I_d`.
    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.coordinates(f)?.iter().all(Zero::is_zero))
    }
}

/// All nonzero graded pieces of an Artinian quotient `R/I`.
#[derive(Clone, Debug)]
pub struct Quotient {
    nvars: usize,
    pieces: Vec<QuotientPiece>,
}

impl Quotient {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Piece in degree `d`, or `None` once the quotient has vanished.
    pub fn piece(&self, d: u32) -> Option<&QuotientPiece> {
        self.pieces.get(d as usize)
    }

    pub fn dim(&self, d: u32) -> usize {
        self.piece(d).map_or(0, QuotientPiece::dim)
    }

    pub fn socle_degree(&self) -> Option<u32> {
        self.pieces.len().checked_sub(1).map(|d| d as u32)
    }

    pub fn hilbert_data(&self) -> HilbertData {
        HilbertData::new(self.pieces.iter().map(|p| p.dim() as u64).collect())
    }
}
