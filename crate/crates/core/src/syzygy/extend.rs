use rayon::prelude::*;
use serde::Serialize;

use super::hilbert_burch::{hilbert_burch, verify_minor_identities, HilbertBurchData};
use super::polymatrix::{PolyMatrix, PolyMatrixJson};
use crate::error::{Error, Result};
use crate::ideals::{build_j_phi, GradedIdeal, PhiParams};
use crate::polycore::Polynomial;

/// Generator positions (in the order `x, y, z, x+y, x+z, y+z, x+y+z`) of the
/// six two-variable subideals `J_0 .. J_5`.
pub const SUBIDEALS: [[usize; 3]; 6] = [
    [0, 1, 3],
    [0, 2, 4],
    [1, 2, 5],
    [0, 5, 6],
    [1, 4, 6],
    [2, 3, 6],
];

/// Degree of the two Hilbert-Burch syzygies of subideal `i`.
pub fn subideal_degree(p: &PhiParams, i: usize) -> u32 {
    if i < 3 {
        2 * p.l + 3 * p.k
    } else {
        3 * p.l + 2 * p.k
    }
}

/// A syzygy of one subideal, padded with zeros to a syzygy of `J_phi`.
#[derive(Clone, Debug)]
pub struct ExtendedSyzygy {
    /// 1-based position among the twelve.
    pub index: usize,
    pub subideal: usize,
    pub coords: Vec<Polynomial>,
    pub degree: u32,
}

impl ExtendedSyzygy {
    pub fn annihilates(&self, gens: &[Polynomial]) -> bool {
        let mut acc = Polynomial::zero(3);
        for (g, c) in gens.iter().zip(&self.coords) {
            if !c.is_zero() {
                acc = &acc + &(g * c);
            }
        }
        acc.is_zero()
    }

    /// Nonzero exactly on the rows of its subideal.
    pub fn has_template_support(&self) -> bool {
        let rows = SUBIDEALS[self.subideal];
        self.coords
            .iter()
            .enumerate()
            .all(|(i, c)| rows.contains(&i) != c.is_zero())
    }
}

/// The `7 x 12` matrix `Φ = A | B` whose columns are the extended syzygies.
#[derive(Clone, Debug)]
pub struct BigMatrix {
    phi: PolyMatrix,
}

impl BigMatrix {
    pub fn phi(&self) -> &PolyMatrix {
        &self.phi
    }

    /// Columns from `J_0, J_1, J_2`.
    pub fn a_block(&self) -> PolyMatrix {
        self.phi.select_columns(&[0, 1, 2, 3, 4, 5])
    }

    /// Columns from `J_3, J_4, J_5`.
    pub fn b_block(&self) -> PolyMatrix {
        self.phi.select_columns(&[6, 7, 8, 9, 10, 11])
    }

    pub fn to_json(&self) -> PolyMatrixJson {
        PolyMatrixJson::from(&self.phi)
    }
}

/// Places the Hilbert-Burch columns into their templates `s_1 .. s_12`.
pub fn extend_syzygies(
    hb: &[HilbertBurchData],
    j_phi: &GradedIdeal,
) -> Result<(Vec<ExtendedSyzygy>, BigMatrix)> {
    if hb.len() != 6 {
        return Err(Error::DimensionMismatch {
            expected: 6,
            found: hb.len(),
        });
    }
    let mut out = Vec::with_capacity(12);
    for (s, h) in hb.iter().enumerate() {
        for (c, column) in h.columns().into_iter().enumerate() {
            let mut coords = vec![Polynomial::zero(3); 7];
            for (r, entry) in column.into_iter().enumerate() {
                coords[SUBIDEALS[s][r]] = entry;
            }
            let syz = ExtendedSyzygy {
                index: 2 * s + c + 1,
                subideal: s,
                coords,
                degree: h.degree,
            };
            if !syz.annihilates(j_phi.generators()) {
                return Err(Error::NotASyzygy { index: syz.index });
            }
            out.push(syz);
        }
    }
    let columns: Vec<(Vec<Polynomial>, u32)> =
        out.iter().map(|s| (s.coords.clone(), s.degree)).collect();
    let phi = PolyMatrix::from_columns(3, j_phi.degrees().to_vec(), &columns)?;
    Ok((out, BigMatrix { phi }))
}

/// Everything built from the six subideals of `J_phi`.
#[derive(Clone, Debug)]
pub struct SyzygyData {
    pub params: PhiParams,
    pub j_phi: GradedIdeal,
    pub hilbert_burch: Vec<HilbertBurchData>,
    pub syzygies: Vec<ExtendedSyzygy>,
    pub matrix: BigMatrix,
}

pub fn build_syzygies(p: &PhiParams) -> Result<SyzygyData> {
    if p.n != 3 {
        return Err(Error::InvalidParams(format!(
            "syzygy construction needs n = 3, got {}",
            p.n
        )));
    }
    let j_phi = build_j_phi(p);
    let hb: Vec<HilbertBurchData> = (0..6)
        .into_par_iter()
        .map(|i| {
            hilbert_burch(
                &format!("J{i}"),
                &j_phi.select(&SUBIDEALS[i]),
                subideal_degree(p, i),
            )
        })
        .collect::<Result<_>>()?;
    let (syzygies, matrix) = extend_syzygies(&hb, &j_phi)?;
    Ok(SyzygyData {
        params: *p,
        j_phi,
        hilbert_burch: hb,
        syzygies,
        matrix,
    })
}

/// JSON export of the construction.
#[derive(Clone, Debug, Serialize)]
pub struct SyzygyExport {
    pub l: u32,
    pub k: u32,
    pub subideals: Vec<SubidealExport>,
    pub phi: PolyMatrixJson,
}

#[derive(Clone, Debug, Serialize)]
pub struct SubidealExport {
    pub name: String,
    pub generators: Vec<String>,
    pub degree: u32,
    pub scale: String,
    pub minors_ok: bool,
    pub matrix: PolyMatrixJson,
}

impl SyzygyData {
    pub fn export(&self) -> SyzygyExport {
        SyzygyExport {
            l: self.params.l,
            k: self.params.k,
            subideals: self
                .hilbert_burch
                .iter()
                .map(|h| SubidealExport {
                    name: h.name.clone(),
                    generators: h.ideal.generators().iter().map(|g| g.to_string()).collect(),
                    degree: h.degree,
                    scale: h.scale.to_string(),
                    minors_ok: verify_minor_identities(h),
                    matrix: h.to_json(),
                })
                .collect(),
            phi: self.matrix.to_json(),
        }
    }
}
