use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polycore::{
    count_monomials, kernel, monomial_basis, rank_lower_bound, Polynomial, Rational, SparseMatrix,
};

/// A graded map `⊕_j R(-col_degree_j) -> ⊕_i R(-row_twist_i)` given by a
/// matrix of forms; entry `(i, j)` is zero or homogeneous of degree
/// `col_degree_j - row_twist_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    nvars: usize,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
    row_twists: Vec<u32>,
    col_degrees: Vec<u32>,
}

impl PolyMatrix {
    /// Builds the matrix from its columns and checks every entry's degree.
    pub fn from_columns(
        nvars: usize,
        row_twists: Vec<u32>,
        columns: &[(Vec<Polynomial>, u32)],
    ) -> Result<Self> {
        let rows = row_twists.len();
        let mut entries = vec![Polynomial::zero(nvars); rows * columns.len()];
        let mut col_degrees = Vec::with_capacity(columns.len());
        for (j, (col, deg)) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    found: col.len(),
                });
            }
            for (i, p) in col.iter().enumerate() {
                if let Some(d) = p.homogeneous_degree()? {
                    if d + row_twists[i] != *deg {
                        return Err(Error::NotHomogeneous {
                            expected: deg.saturating_sub(row_twists[i]),
                        });
                    }
                }
                entries[i * columns.len() + j] = p.clone();
            }
            col_degrees.push(*deg);
        }
        Ok(Self {
            nvars,
            rows,
            cols: columns.len(),
            entries,
            row_twists,
            col_degrees,
        })
    }

    /// The `1 x r` row of generators, with twists equal to their degrees.
    pub fn generator_row(nvars: usize, gens: &[Polynomial]) -> Result<Self> {
        let columns: Vec<(Vec<Polynomial>, u32)> = gens
            .iter()
            .map(|g| {
                Ok((
                    vec![g.clone()],
                    g.homogeneous_degree()?.ok_or(Error::Inhomogeneous)?,
                ))
            })
            .collect::<Result<_>>()?;
        Self::from_columns(nvars, vec![0], &columns)
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        (0..self.rows).map(|i| self.entry(i, j).clone()).collect()
    }

    pub fn row_twists(&self) -> &[u32] {
        &self.row_twists
    }

    pub fn col_degrees(&self) -> &[u32] {
        &self.col_degrees
    }

    /// Keeps the listed columns.
    pub fn select_columns(&self, cols: &[usize]) -> PolyMatrix {
        let columns: Vec<(Vec<Polynomial>, u32)> = cols
            .iter()
            .map(|&j| (self.column(j), self.col_degrees[j]))
            .collect();
        Self::from_columns(self.nvars, self.row_twists.clone(), &columns)
            .expect("columns already validated")
    }

    /// `M v` for a vector of forms.
    pub fn apply(&self, v: &[Polynomial]) -> Vec<Polynomial> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = Polynomial::zero(self.nvars);
                for (j, vj) in v.iter().enumerate() {
                    let e = self.entry(i, j);
                    if !e.is_zero() && !vj.is_zero() {
                        acc = &acc + &(e * vj);
                    }
                }
                acc
            })
            .collect()
    }

    fn source_layout(&self, t: u32) -> Vec<Option<(u32, usize)>> {
        let mut offset = 0;
        self.col_degrees
            .iter()
            .map(|&c| {
                if c > t {
                    return None;
                }
                let here = (t - c, offset);
                offset += count_monomials(self.nvars, t - c);
                Some(here)
            })
            .collect()
    }

    fn target_offsets(&self, t: u32) -> (Vec<Option<usize>>, usize) {
        let mut offset = 0;
        let offs = self
            .row_twists
            .iter()
            .map(|&r| {
                if r > t {
                    return None;
                }
                let here = offset;
                offset += count_monomials(self.nvars, t - r);
                Some(here)
            })
            .collect();
        (offs, offset)
    }

    /// Coefficient matrix of `M` restricted to total degree `t`, one row per
    /// source basis element (the transpose of the map).
    fn images_at(&self, t: u32) -> (SparseMatrix, Vec<Option<(u32, usize)>>) {
        let layout = self.source_layout(t);
        let (targets, width) = self.target_offsets(t);
        let mut m = SparseMatrix::new(width);
        for (j, slot) in layout.iter().enumerate() {
            let Some((d, _)) = slot else { continue };
            for mu in monomial_basis(self.nvars, *d) {
                let mut row = Vec::new();
                for (i, off) in targets.iter().enumerate() {
                    let e = self.entry(i, j);
                    if e.is_zero() {
                        continue;
                    }
                    let off = off.expect("nonzero entry lands in a live row");
                    row.extend(
                        e.mul_monomial(&mu)
                            .terms()
                            .map(|(m, c)| (off + m.index(), c.clone())),
                    );
                }
                m.push(row);
            }
        }
        (m, layout)
    }

    /// Number of scalar unknowns in total degree `t`.
    pub fn source_dim(&self, t: u32) -> usize {
        self.col_degrees
            .iter()
            .filter(|&&c| c <= t)
            .map(|&c| count_monomials(self.nvars, t - c))
            .sum()
    }

    /// Kernel of `M` in total degree `t`, each vector split into its forms.
    pub fn kernel_at(&self, t: u32) -> Vec<Vec<Polynomial>> {
        let (images, layout) = self.images_at(t);
        kernel(&images.transpose())
            .into_iter()
            .map(|v| self.split(&v, &layout))
            .collect()
    }

    /// `dim ker M` in total degree `t`. Certified without reconstructing the
    /// kernel whenever the map is injective mod p.
    pub fn kernel_dim_at(&self, t: u32) -> usize {
        let (images, _) = self.images_at(t);
        let unknowns = images.nrows();
        if rank_lower_bound(&images) == unknowns {
            return 0;
        }
        unknowns - crate::polycore::rank(&images)
    }

    /// Rank of the image of `M` in total degree `t`.
    pub fn image_rank_at(&self, t: u32) -> usize {
        crate::polycore::rank(&self.images_at(t).0)
    }

    /// Rank mod p of the image in total degree `t` (a lower bound).
    pub fn image_rank_lower_bound_at(&self, t: u32) -> usize {
        rank_lower_bound(&self.images_at(t).0)
    }

    fn split(&self, v: &[Rational], layout: &[Option<(u32, usize)>]) -> Vec<Polynomial> {
        layout
            .iter()
            .map(|slot| match slot {
                None => Polynomial::zero(self.nvars),
                Some((d, off)) => {
                    let n = count_monomials(self.nvars, *d);
                    Polynomial::from_coeff_vector(self.nvars, *d, &v[*off..off + n])
                        .expect("length matches basis")
                }
            })
            .collect()
    }

    /// Flattens a vector of forms of component degrees `t - col_degree_j`
    /// into scalar coordinates.
    pub fn flatten_source(&self, t: u32, v: &[Polynomial]) -> Result<Vec<Rational>> {
        let mut out = Vec::with_capacity(self.source_dim(t));
        for (p, &c) in v.iter().zip(&self.col_degrees) {
            if c > t {
                if !p.is_zero() {
                    return Err(Error::NotHomogeneous { expected: 0 });
                }
                continue;
            }
            out.extend(p.to_coeff_vector(t - c)?);
        }
        Ok(out)
    }

    pub fn is_zero_vector(v: &[Polynomial]) -> bool {
        v.iter().all(Polynomial::is_zero)
    }
}

/// JSON form: entries as `{monomial: coefficient}` maps.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PolyMatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub row_twists: Vec<u32>,
    pub col_degrees: Vec<u32>,
    pub entries: Vec<Vec<std::collections::BTreeMap<String, String>>>,
}

impl From<&PolyMatrix> for PolyMatrixJson {
    fn from(m: &PolyMatrix) -> Self {
        let entries = (0..m.rows)
            .map(|i| {
                (0..m.cols)
                    .map(|j| {
                        m.entry(i, j)
                            .terms()
                            .map(|(mono, c)| (mono.to_string(), c.to_string()))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        PolyMatrixJson {
            rows: m.rows,
            cols: m.cols,
            row_twists: m.row_twists.clone(),
            col_degrees: m.col_degrees.clone(),
            entries,
        }
    }
}
