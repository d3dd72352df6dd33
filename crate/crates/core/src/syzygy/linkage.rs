use serde::Serialize;

use super::extend::SyzygyData;
use crate::error::Result;
use crate::ideals::{build_j_phi, colon_graded, GradedIdeal, PhiParams};
use crate::polycore::{binomial, count_monomials, subspace_intersection, subspace_sum};

/// `<y^a, z^a, (x+y)^b, (x+z)^b>`.
pub fn l1_ideal(p: &PhiParams) -> GradedIdeal {
    build_j_phi(p).select(&[1, 2, 3, 4])
}

/// `L_1 + <x^a>`.
pub fn l2_ideal(p: &PhiParams) -> GradedIdeal {
    build_j_phi(p).select(&[0, 1, 2, 3, 4])
}

/// `L_1 + <(y+z)^b, (x+y+z)^c>`.
pub fn l3_ideal(p: &PhiParams) -> GradedIdeal {
    build_j_phi(p).select(&[1, 2, 3, 4, 5, 6])
}

/// Dimensions in degree `2l + k - 1` of `I_1 = L_1 : x^a`, of `I_2` (the
/// first row of the `J_3` syzygy matrix), of their sum and intersection.
#[derive(Clone, Debug, Serialize)]
pub struct ConclusionCheck {
    pub degree: u32,
    pub hf_i1: i64,
    pub hf_i2: i64,
    pub hf_sum: i64,
    pub hf_intersection: i64,
    /// `dim (I_1 ∩ I_2)_d`.
    pub intersection_dim: usize,
    /// `I_1 + I_2 = L_3 : x^a` in this degree.
    pub sum_is_l3_colon: bool,
    /// `I_1` agrees with the ideal of the first rows of `J_0`, `J_1` here.
    pub i1_is_first_rows: bool,
    /// `HF(R/I_1, d) = HF(R/L_1, d+a) - HF(R/L_2, d+a)`.
    pub linkage_i1: bool,
    /// `HF(R/(L_3 : x^a), d) = HF(R/L_3, d+a) - HF(R/J_phi, d+a)`.
    pub linkage_sum: bool,
}

pub fn conclusion_check(data: &SyzygyData) -> Result<ConclusionCheck> {
    let p = data.params;
    let a = p.l + 2 * p.k;
    let d = 2 * p.l + p.k - 1;
    let x_a = data.j_phi.generators()[0].clone();
    let full = count_monomials(3, d) as i64;

    let l1 = l1_ideal(&p);
    let l3 = l3_ideal(&p);
    let i1 = colon_graded(&l1, &x_a, d)?;
    let hb = &data.hilbert_burch;
    let i2 = GradedIdeal::new(3, hb[3].matrix[0].to_vec())?.graded_piece(d);
    let sum = subspace_sum(&i1, &i2)?;
    let inter = subspace_intersection(&i1, &i2)?;
    let l3_colon = colon_graded(&l3, &x_a, d)?;
    let first_rows = GradedIdeal::new(
        3,
        hb[0].matrix[0]
            .iter()
            .chain(hb[1].matrix[0].iter())
            .cloned()
            .collect(),
    )?
    .graded_piece(d);

    let hf = |i: &GradedIdeal| i.hilbert_function(d + a) as i64;
    let hf_i1 = full - i1.dim() as i64;
    let hf_sum = full - sum.dim() as i64;
    let linkage_i1 = hf_i1 == hf(&l1) - hf(&l2_ideal(&p));
    let linkage_sum = full - l3_colon.dim() as i64 == hf(&l3) - hf(&data.j_phi);

    Ok(ConclusionCheck {
        degree: d,
        hf_i1,
        hf_i2: full - i2.dim() as i64,
        hf_sum,
        hf_intersection: full - inter.dim() as i64,
        intersection_dim: inter.dim(),
        sum_is_l3_colon: sum == l3_colon,
        i1_is_first_rows: first_rows == i1,
        linkage_i1,
        linkage_sum,
    })
}

fn c2(n: i64) -> i64 {
    if n < 2 {
        0
    } else {
        binomial(n as u64, 2) as i64
    }
}

/// `(k^2 + k)/2 + l (2k - 1)`.
pub fn expected_hf_i1(l: u32, k: u32) -> i64 {
    let (l, k) = (i64::from(l), i64::from(k));
    (k * k + k) / 2 + l * (2 * k - 1)
}

/// `-(k^2 + k)/2 + l (2k - 1)`.
pub fn expected_hf_sum(l: u32, k: u32) -> i64 {
    let (l, k) = (i64::from(l), i64::from(k));
    -(k * k + k) / 2 + l * (2 * k - 1)
}

/// `C(2l+k+1, 2)`.
pub fn expected_hf_intersection(l: u32, k: u32) -> i64 {
    c2(i64::from(2 * l + k + 1))
}

/// Complete intersection of two forms of degree `2l`, in degree `2l + k - 1`.
pub fn expected_hf_i2(l: u32, k: u32) -> i64 {
    let (l, k) = (i64::from(l), i64::from(k));
    let base = c2(2 * l + k + 1) - 2 * c2(k + 1);
    if 2 * l >= k {
        base
    } else {
        base + c2(k + 1 - 2 * l)
    }
}
