mod common;

use proptest::prelude::*;
use psbetti::polycore::{
    count_monomials, echelon, echelon_fraction_free, kernel, linear_form_power_int, monomial_basis,
    parse_polynomial, rank, rank_lower_bound, rat, subspace_intersection, subspace_sum, Monomial,
    Polynomial, Rational, SparseMatrix, Subspace,
};

fn poly(s: &str) -> Polynomial {
    parse_polynomial(3, s).unwrap()
}

#[test]
fn basis_sizes() {
    assert_eq!(monomial_basis(3, 0), vec![Monomial::one(3)]);
    assert_eq!(count_monomials(3, 2), 6);
    assert_eq!(count_monomials(3, 5), 21);
    assert_eq!(monomial_basis(3, 5).len(), 21);
}

#[test]
fn linear_form_powers() {
    assert_eq!(
        linear_form_power_int(&[1, 1, 0], 2),
        poly("x^2 + 2*x*y + y^2")
    );
    assert_eq!(linear_form_power_int(&[1, 0, 0], 5), poly("x^5"));
    let cube = linear_form_power_int(&[1, 1, 1], 3);
    assert_eq!(cube.coefficient(&Monomial::new(vec![1, 1, 1])), rat(6));
    let s = poly("x + y");
    assert_eq!(&(&s * &s) * &s, linear_form_power_int(&[1, 1, 0], 3));
}

#[test]
fn products() {
    assert_eq!(&poly("x + y") * &poly("x - y"), poly("x^2 - y^2"));
    let p = poly("x^2 - 1/3*y*z");
    assert_eq!(&p * &Polynomial::one(3), p);
}

#[test]
fn coefficient_vectors() {
    let v = poly("x^2 + 2*x*y + y^2").to_coeff_vector(2).unwrap();
    let at = |m: Vec<u32>| {
        monomial_basis(3, 2)
            .iter()
            .position(|b| *b == Monomial::new(m.clone()))
            .unwrap()
    };
    assert_eq!(v[at(vec![2, 0, 0])], rat(1));
    assert_eq!(v[at(vec![1, 1, 0])], rat(2));
    assert_eq!(v[at(vec![0, 2, 0])], rat(1));
    assert_eq!(v.iter().filter(|c| **c != rat(0)).count(), 3);
    assert!(Polynomial::zero(3)
        .to_coeff_vector(4)
        .unwrap()
        .iter()
        .all(|c| *c == rat(0)));
    assert!(poly("x^2").to_coeff_vector(3).is_err());
}

#[test]
fn small_kernels() {
    let id = SparseMatrix::from_dense_rows(
        3,
        &[
            vec![rat(1), rat(0), rat(0)],
            vec![rat(0), rat(1), rat(0)],
            vec![rat(0), rat(0), rat(1)],
        ],
    );
    assert!(kernel(&id).is_empty());
    let row = SparseMatrix::from_dense_rows(2, &[vec![rat(1), rat(1)]]);
    let k = kernel(&row);
    assert_eq!(k.len(), 1);
    assert_eq!(&k[0][0] + &k[0][1], rat(0));
    assert_ne!(k[0][0], rat(0));
}

fn small_poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(((0u32..3, 0u32..3, 0u32..3), -4i64..=4), 0..5).prop_map(|terms| {
        let mut p = Polynomial::zero(3);
        for ((a, b, c), v) in terms {
            p.add_term(Monomial::new(vec![a, b, c]), rat(v));
        }
        p
    })
}

fn int_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, cols), rows).prop_map(|m| {
        m.into_iter()
            .map(|r| r.into_iter().map(rat).collect())
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(p in small_poly(), q in small_poly(), r in small_poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn powers_add(c in prop::array::uniform3(-3i64..=3), a in 0u32..5, b in 0u32..5) {
        let lhs = &linear_form_power_int(&c, a) * &linear_form_power_int(&c, b);
        prop_assert_eq!(lhs, linear_form_power_int(&c, a + b));
    }

    #[test]
    fn rank_plus_nullity(m in int_matrix(5, 7)) {
        let s = SparseMatrix::from_dense_rows(7, &m);
        let r = rank(&s);
        let k = kernel(&s);
        prop_assert_eq!(r + k.len(), 7);
        prop_assert_eq!(r, common::naive_rank(m.clone()));
        prop_assert!(rank_lower_bound(&s) <= r);
        for v in &k {
            prop_assert!(s.mul_vec(v).iter().all(|x| *x == rat(0)));
        }
    }

    #[test]
    fn certified_matches_fraction_free(m in int_matrix(6, 6)) {
        let s = SparseMatrix::from_dense_rows(6, &m);
        let a = echelon(&s);
        let b = echelon_fraction_free(&s);
        prop_assert_eq!(a.pivots(), b.pivots());
        prop_assert_eq!(a.rows(), b.rows());
    }

    #[test]
    fn grassmann(u in int_matrix(3, 6), w in int_matrix(3, 6)) {
        let u = Subspace::span(6, &u).unwrap();
        let w = Subspace::span(6, &w).unwrap();
        let sum = subspace_sum(&u, &w).unwrap();
        let meet = subspace_intersection(&u, &w).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), u.dim() + w.dim());
        prop_assert!(meet.is_subspace_of(&u) && meet.is_subspace_of(&w));
        prop_assert!(u.is_subspace_of(&sum) && w.is_subspace_of(&sum));
    }
}
