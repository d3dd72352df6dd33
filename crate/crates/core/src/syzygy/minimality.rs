use serde::Serialize;

use super::extend::{BigMatrix, SyzygyData};
use super::polymatrix::PolyMatrix;
use crate::polycore::{
    linear_form_power_int, rank_lower_bound, Polynomial, Rational, SparseMatrix,
};

/// Kernel dimension of a block at one degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct KernelSweepPoint {
    /// Component degree (for `A`, `B`) or total degree (for `Φ`).
    pub degree: u32,
    pub dim: usize,
}

/// Solutions of `A v = 0` whose components all have degree `d`.
pub fn kernel_of_a_at_degree(m: &BigMatrix, d: u32) -> Vec<Vec<Polynomial>> {
    let a = m.a_block();
    a.kernel_at(a.col_degrees()[0] + d)
}

pub fn kernel_dim_of_a(m: &BigMatrix, d: u32) -> usize {
    let a = m.a_block();
    a.kernel_dim_at(a.col_degrees()[0] + d)
}

/// `dim {w : B w = 0}` with components of degree `d`.
pub fn kernel_dim_of_b(m: &BigMatrix, d: u32) -> usize {
    let b = m.b_block();
    b.kernel_dim_at(b.col_degrees()[0] + d)
}

/// `ker A` is zero in every component degree below `d`. Multiplying a kernel
/// vector by a variable raises its degree, so the top degree decides.
pub fn a_kernel_vanishes_below(m: &BigMatrix, d: u32) -> bool {
    d == 0 || kernel_dim_of_a(m, d - 1) == 0
}

/// `ker B` is zero in every component degree up to `d`.
pub fn b_kernel_vanishes_up_to(m: &BigMatrix, d: u32) -> bool {
    kernel_dim_of_b(m, d) == 0
}

/// `dim ker Φ` in total degree `t`; a block whose component degree would be
/// negative contributes no unknowns.
pub fn kernel_dim_of_phi(m: &BigMatrix, t: u32) -> usize {
    m.phi().kernel_dim_at(t)
}

/// `v = (-c_2 p_1, c_1 p_1, -f_2 p_2, f_1 p_2, -k_2 p_3, k_1 p_3)` with
/// `p_1 = α_1 α_2 z^a`, `p_2 = -α_0 α_2 y^a`, `p_3 = α_0 α_1 x^a`, where the
/// `c, f, k` are the third rows and `α_i` the scale constants of `J_0, J_1, J_2`.
pub fn a_kernel_pattern(data: &SyzygyData) -> Vec<Polynomial> {
    let a = data.params.l + 2 * data.params.k;
    let hb = &data.hilbert_burch;
    let alpha = |i: usize| hb[i].scale.clone();
    let power = |c: [i64; 3]| linear_form_power_int(&c, a);
    let p = [
        power([0, 0, 1]).scale(&(alpha(1) * alpha(2))),
        power([0, 1, 0]).scale(&-(alpha(0) * alpha(2))),
        power([1, 0, 0]).scale(&(alpha(0) * alpha(1))),
    ];
    let mut v = Vec::with_capacity(6);
    for (s, pi) in p.iter().enumerate() {
        let third = &hb[s].matrix[2];
        v.push(-&(&third[1] * pi));
        v.push(&third[0] * pi);
    }
    v
}

/// `Some(λ)` when `u = λ w` with `λ ≠ 0`.
pub fn proportional(u: &[Polynomial], w: &[Polynomial]) -> Option<Rational> {
    let (ui, wi) = u.iter().zip(w).find(|(_, w)| !w.is_zero())?;
    let lambda = ui.constant_ratio(wi)?;
    if num_traits::Zero::is_zero(&lambda) {
        return None;
    }
    u.iter()
        .zip(w)
        .all(|(a, b)| *a == b.scale(&lambda))
        .then_some(lambda)
}

/// Outcome of the kernel-of-`A` check at the first degree where it is nonzero.
#[derive(Clone, Debug, Serialize)]
pub struct APatternCheck {
    pub degree: u32,
    pub dim: usize,
    pub pattern_in_kernel: bool,
    pub matches_pattern: bool,
}

/// The pattern vector is checked to lie in the kernel exactly; when it is
/// nonzero and the modular rank leaves room for only one kernel dimension, the
/// kernel is its span. Otherwise the kernel is computed exactly.
pub fn check_a_pattern(data: &SyzygyData) -> APatternCheck {
    let d = data.params.l + 3 * data.params.k;
    let pattern = a_kernel_pattern(data);
    let a = data.matrix.a_block();
    let t = a.col_degrees()[0] + d;
    let pattern_in_kernel = PolyMatrix::is_zero_vector(&a.apply(&pattern));
    let nonzero = !PolyMatrix::is_zero_vector(&pattern);
    if pattern_in_kernel && nonzero && a.source_dim(t) - a.image_rank_lower_bound_at(t) == 1 {
        return APatternCheck {
            degree: d,
            dim: 1,
            pattern_in_kernel,
            matches_pattern: true,
        };
    }
    let kernel = a.kernel_at(t);
    let matches_pattern = kernel.len() == 1 && proportional(&kernel[0], &pattern).is_some();
    APatternCheck {
        degree: d,
        dim: kernel.len(),
        pattern_in_kernel,
        matches_pattern,
    }
}

/// Dimension of the span of the twelve syzygies against the full syzygy
/// space of `J_phi`, in one degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SpanningPoint {
    pub degree: u32,
    pub generated: usize,
    pub syzygies: usize,
}

/// Compares, in degree `t`, the submodule generated by the twelve columns of
/// `Φ` with the kernel of the generator row.
///
/// The generated part lies inside the kernel exactly (each column is a
/// verified syzygy), so modular ranks bound both sides: `dim span >= rank_p`
/// and `dim ker <= unknowns - rank_p(row)`. When the bounds meet the two
/// spaces are equal; otherwise exact ranks decide.
pub fn spanning_at(data: &SyzygyData, t: u32) -> SpanningPoint {
    let row =
        PolyMatrix::generator_row(3, data.j_phi.generators()).expect("generators are homogeneous");
    let unknowns = row.source_dim(t);
    let phi = data.matrix.phi();
    let mut span = SparseMatrix::new(unknowns);
    for j in 0..phi.ncols() {
        let deg = phi.col_degrees()[j];
        if deg > t {
            continue;
        }
        let col = phi.column(j);
        for mu in crate::polycore::monomial_basis(3, t - deg) {
            let shifted: Vec<Polynomial> = col.iter().map(|c| c.mul_monomial(&mu)).collect();
            span.push_dense(&row.flatten_source(t, &shifted).expect("degrees line up"));
        }
    }
    let generated_lb = rank_lower_bound(&span);
    let kernel_ub = unknowns - row.image_rank_lower_bound_at(t);
    if generated_lb == kernel_ub {
        return SpanningPoint {
            degree: t,
            generated: generated_lb,
            syzygies: kernel_ub,
        };
    }
    SpanningPoint {
        degree: t,
        generated: crate::polycore::rank(&span),
        syzygies: row.kernel_dim_at(t),
    }
}
