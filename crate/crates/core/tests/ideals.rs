mod common;

use proptest::prelude::*;
use psbetti::ideals::{
    build_i_phi, build_j_phi, colon_graded, colon_hilbert_function, GradedIdeal, IntPolynomial,
    PhiParams,
};
use psbetti::polycore::{
    count_monomials, linear_form_power_int, parse_polynomial, subspace_intersection, Monomial,
};

fn mono(e: &[u32]) -> Monomial {
    Monomial::new(e.to_vec())
}

fn complete_intersection(a: u32, b: u32, c: u32) -> GradedIdeal {
    GradedIdeal::monomial(3, &[mono(&[a, 0, 0]), mono(&[0, b, 0]), mono(&[0, 0, c])]).unwrap()
}

#[test]
fn phi_ideals_in_small_cases() {
    let i = build_i_phi(&PhiParams::n3(1, 1).unwrap());
    let want = [
        "x^3", "y^3", "z^3", "x^2*y^2", "x^2*z^2", "y^2*z^2", "x*y*z",
    ];
    let want: Vec<_> = want
        .iter()
        .map(|s| parse_polynomial(3, s).unwrap())
        .collect();
    assert_eq!(i.len(), 7);
    for g in &want {
        assert!(i.generators().contains(g), "{g}");
    }
    let mut degs = build_i_phi(&PhiParams::n3(2, 1).unwrap())
        .degrees()
        .to_vec();
    degs.sort();
    assert_eq!(degs, [4, 4, 4, 6, 6, 6, 6]);

    let i2 = build_i_phi(&PhiParams::new(2, 1, 0).unwrap());
    assert_eq!(
        i2.generators(),
        &[
            parse_polynomial(2, "x").unwrap(),
            parse_polynomial(2, "y").unwrap(),
            parse_polynomial(2, "x*y").unwrap()
        ]
    );
    let j2 = build_j_phi(&PhiParams::new(2, 1, 0).unwrap());
    assert_eq!(
        j2.generators()[2],
        parse_polynomial(2, "x^2 + 2*x*y + y^2").unwrap()
    );
}

#[test]
fn j_phi_matches_display() {
    let j = build_j_phi(&PhiParams::n3(1, 1).unwrap());
    for (g, c, e) in [
        (0, [1, 0, 0], 3),
        (1, [0, 1, 0], 3),
        (2, [0, 0, 1], 3),
        (3, [1, 1, 0], 4),
        (4, [1, 0, 1], 4),
        (5, [0, 1, 1], 4),
        (6, [1, 1, 1], 3),
    ] {
        assert!(
            j.generators().contains(&linear_form_power_int(&c, e)),
            "generator {g}"
        );
    }
    assert_eq!(j.graded_piece(3).dim(), 4);
}

#[test]
fn graded_pieces() {
    let x = GradedIdeal::monomial(2, &[mono(&[1, 0])]).unwrap();
    assert_eq!(x.graded_piece(2).dim(), 2);
    let j = build_j_phi(&PhiParams::n3(2, 2).unwrap());
    assert_eq!(j.graded_piece(5).dim(), 0);
}

#[test]
fn numerators() {
    assert_eq!(
        GradedIdeal::maximal(3).hilbert_numerator().unwrap(),
        IntPolynomial::from_terms(&[(0, 1), (1, -3), (2, 3), (3, -1)])
    );
    assert_eq!(
        build_j_phi(&PhiParams::n3(1, 1).unwrap())
            .hilbert_numerator()
            .unwrap(),
        IntPolynomial::from_terms(&[(0, 1), (3, -4), (4, -3), (5, 12), (6, -6)])
    );
}

#[test]
fn monomial_quotients_count_standard_monomials() {
    for (l, k) in [(1, 1), (1, 2), (2, 1), (2, 3)] {
        let p = PhiParams::n3(l, k).unwrap();
        let i = build_i_phi(&p);
        let gens: Vec<Monomial> = i
            .generators()
            .iter()
            .map(|g| g.leading_term().unwrap().0.clone())
            .collect();
        for d in 0..=3 * l + 3 * k {
            assert_eq!(
                i.hilbert_function(d),
                common::standard_monomials(3, &gens, d),
                "({l},{k}) d={d}"
            );
        }
    }
}

#[test]
fn j_phi_against_dense_elimination() {
    for (l, k) in [(1, 1), (2, 1), (1, 2)] {
        let j = build_j_phi(&PhiParams::n3(l, k).unwrap());
        for d in 0..=3 * l + 3 * k - 2 {
            assert_eq!(
                j.hilbert_function(d),
                common::naive_hf(&j, d),
                "({l},{k}) d={d}"
            );
        }
    }
}

#[test]
fn artinian_data() {
    let data = build_j_phi(&PhiParams::n3(2, 1).unwrap())
        .hilbert_data()
        .unwrap();
    assert_eq!(data.socle_degree, Some(6));
    assert!(GradedIdeal::monomial(3, &[mono(&[1, 0, 0])])
        .unwrap()
        .hilbert_data()
        .is_err());
}

#[test]
fn monomial_colon() {
    let c = complete_intersection(3, 3, 3);
    let f = parse_polynomial(3, "x*y*z").unwrap();
    // (x^3, y^3, z^3) : xyz = (x^2, y^2, z^2)
    let quotient = complete_intersection(2, 2, 2);
    for d in 0..6 {
        assert_eq!(
            colon_graded(&c, &f, d).unwrap().dim(),
            count_monomials(3, d) - quotient.hilbert_function(d)
        );
        assert_eq!(
            colon_hilbert_function(&c, &f, d).unwrap(),
            quotient.hilbert_function(d)
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Linkage through a Gorenstein complete intersection `C` with socle degree `s`:
    /// `HF(R/(C:f), d) = HF(R/C, d) - HF(R/(C+f), s-d)`.
    #[test]
    fn linkage_through_complete_intersection(
        a in 2u32..4, b in 2u32..4, c in 2u32..4,
        form in prop::array::uniform3(-2i64..=2), e in 1u32..4,
    ) {
        prop_assume!(form != [0, 0, 0]);
        let ci = complete_intersection(a, b, c);
        let s = a + b + c - 3;
        let f = linear_form_power_int(&form, e);
        let sum = ci.with_generator(f.clone()).unwrap();
        for d in 0..=s {
            let lhs = colon_hilbert_function(&ci, &f, d).unwrap();
            let rhs = ci.hilbert_function(d) - sum.hilbert_function(s - d);
            prop_assert_eq!(lhs, rhs, "d = {}", d);
        }
    }

    #[test]
    fn mayer_vietoris(
        f in prop::array::uniform3(-2i64..=2), g in prop::array::uniform3(-2i64..=2),
        e1 in 1u32..4, e2 in 1u32..4, d in 0u32..7,
    ) {
        prop_assume!(f != [0, 0, 0] && g != [0, 0, 0]);
        let i = complete_intersection(2, 3, 4).with_generator(linear_form_power_int(&f, e1)).unwrap();
        let j = GradedIdeal::new(3, vec![linear_form_power_int(&g, e2)]).unwrap();
        let meet = subspace_intersection(&i.graded_piece(d), &j.graded_piece(d)).unwrap();
        let total = count_monomials(3, d);
        let hf_meet = total - meet.dim();
        let hf_sum = i.sum(&j).unwrap().hilbert_function(d);
        prop_assert_eq!(hf_meet + hf_sum, i.hilbert_function(d) + j.hilbert_function(d));
    }
}
