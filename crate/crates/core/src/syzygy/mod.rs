//! First syzygies of `J_phi` in three variables, assembled from the
//! Hilbert-Burch matrices of six two-variable subideals, and the checks that
//! they minimally generate.

mod extend;
mod hilbert_burch;
mod linkage;
mod minimality;
mod polymatrix;

pub use extend::{
    build_syzygies, extend_syzygies, subideal_degree, BigMatrix, ExtendedSyzygy, SubidealExport,
    SyzygyData, SyzygyExport, SUBIDEALS,
};
pub use hilbert_burch::{
    hilbert_burch, verify_colon_identity, verify_minor_identities, ColonComparison,
    HilbertBurchData,
};
pub use linkage::{
    conclusion_check, expected_hf_i1, expected_hf_i2, expected_hf_intersection, expected_hf_sum,
    l1_ideal, l2_ideal, l3_ideal, ConclusionCheck,
};
pub use minimality::{
    a_kernel_pattern, a_kernel_vanishes_below, b_kernel_vanishes_up_to, check_a_pattern,
    kernel_dim_of_a, kernel_dim_of_b, kernel_dim_of_phi, kernel_of_a_at_degree, proportional,
    spanning_at, APatternCheck, KernelSweepPoint, SpanningPoint,
};
pub use polymatrix::{PolyMatrix, PolyMatrixJson};
