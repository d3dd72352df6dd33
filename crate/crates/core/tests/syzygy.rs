mod common;

use psbetti::ideals::PhiParams;
use psbetti::polycore::{Polynomial, Rational};
use psbetti::syzygy::{
    build_syzygies, kernel_dim_of_a, kernel_dim_of_b, kernel_dim_of_phi, spanning_at,
    verify_minor_identities, PolyMatrix, SyzygyData,
};

fn data(l: u32, k: u32) -> SyzygyData {
    build_syzygies(&PhiParams::n3(l, k).unwrap()).unwrap()
}

#[test]
fn twelve_independent_syzygies() {
    let d = data(1, 1);
    let row = PolyMatrix::generator_row(3, d.j_phi.generators()).unwrap();
    assert_eq!(d.syzygies.len(), 12);
    assert!(d.syzygies.iter().all(|s| s.degree == 5));
    let rows: Vec<Vec<Rational>> = d
        .syzygies
        .iter()
        .map(|s| row.flatten_source(5, &s.coords).unwrap())
        .collect();
    assert_eq!(common::naive_rank(rows), 12);
}

#[test]
fn perturbed_matrix_breaks_minors() {
    let d = data(1, 2);
    for h in &d.hilbert_burch {
        assert!(
            verify_minor_identities(h) && h.columns_are_syzygies(),
            "{}",
            h.name
        );
        let mut bad = h.clone();
        let one = Polynomial::one(3);
        let shift = bad.matrix[0][0].homogeneous_degree().unwrap().unwrap_or(0);
        let bump = one.mul_monomial(&psbetti::polycore::Monomial::new(vec![shift, 0, 0]));
        bad.matrix[0][0] = &bad.matrix[0][0] + &bump;
        assert!(!verify_minor_identities(&bad), "{}", h.name);
    }
}

#[test]
fn kernels_of_a_at_one_one_and_two_one() {
    let d = data(1, 1);
    for s in 0..=3 {
        assert_eq!(kernel_dim_of_a(&d.matrix, s), 0, "shift {s}");
    }
    assert_eq!(kernel_dim_of_a(&d.matrix, 4), 1);
    let d = data(2, 1);
    for s in 0..=4 {
        assert_eq!(kernel_dim_of_a(&d.matrix, s), 0, "shift {s}");
    }
}

#[test]
fn kernels_of_b() {
    for (l, k) in [(1, 1), (1, 2)] {
        let d = data(l, k);
        for s in 0..=2 * l + 2 * k {
            assert_eq!(kernel_dim_of_b(&d.matrix, s), 0, "({l},{k}) shift {s}");
        }
    }
}

#[test]
fn kernel_of_phi() {
    let d = data(1, 1);
    for t in 0..6 {
        assert_eq!(kernel_dim_of_phi(&d.matrix, t), 0, "degree {t}");
    }
    assert_eq!(kernel_dim_of_phi(&d.matrix, 6), 6);
    assert_eq!(kernel_dim_of_phi(&data(2, 1).matrix, 9), 6);
}

#[test]
fn columns_span_all_syzygies() {
    let d = data(1, 1);
    for t in 3..=8 {
        let s = spanning_at(&d, t);
        assert_eq!(s.generated, s.syzygies, "degree {t}");
    }
}

#[test]
fn export_is_complete() {
    let e = data(1, 1).export();
    assert_eq!(e.subideals.len(), 6);
    assert!(e.subideals.iter().all(|s| s.minors_ok));
    let json = serde_json::to_value(&e).unwrap();
    assert_eq!(json["l"], 1);
}
