use proptest::prelude::*;
use psbetti::betti::{
    betti_formula_monomial, betti_koszul, betti_linear_algebra, check_conjecture, compositions,
    stirling_second, BettiTable,
};
use psbetti::ideals::{build_i_phi, GradedIdeal, PhiParams};
use psbetti::polycore::Monomial;

fn table(n: usize, entries: &[(usize, u32, u64)]) -> BettiTable {
    let mut t = BettiTable::new(n);
    for &(i, j, b) in entries {
        t.add(i, j, b);
    }
    t
}

#[test]
fn koszul_complex_of_the_maximal_ideal() {
    let t = betti_koszul(&GradedIdeal::maximal(3)).unwrap();
    assert_eq!(t, table(3, &[(0, 0, 1), (1, 1, 3), (2, 2, 3), (3, 3, 1)]));
}

#[test]
fn theorem_degrees_at_two_one() {
    let r = check_conjecture(&PhiParams::n3(2, 1).unwrap()).unwrap();
    assert!(r.equal && !r.exploratory);
    assert_eq!(r.computed.row(2), vec![(7, 6), (8, 6)]);
    assert_eq!(r.computed.row(3), vec![(9, 6)]);
    assert_eq!(r.computed.row(1), vec![(4, 3), (6, 4)]);
}

#[test]
fn monomial_formula_for_two_variables() {
    for (l, k) in [(1, 1), (2, 1), (1, 2), (3, 3)] {
        let p = PhiParams::new(2, l, k).unwrap();
        // x^{l+k}, y^{l+k}, (xy)^l: two linear-quotient syzygies, no second syzygies.
        let want = table(
            2,
            &[(0, 0, 1), (1, l + k, 2), (1, 2 * l, 1), (2, 2 * l + k, 2)],
        );
        assert_eq!(betti_formula_monomial(&p), want, "({l},{k})");
        assert_eq!(
            betti_linear_algebra(&build_i_phi(&p), 3 * l + 2 * k).unwrap(),
            want,
            "({l},{k})"
        );
    }
}

#[test]
fn totals_follow_stirling_numbers() {
    assert_eq!([1, 2, 3].map(|i| stirling_second(4, i)), [1, 7, 6]);
    assert_eq!(compositions(3).len(), 7);
    for n in 2..=4usize {
        let t = betti_formula_monomial(&PhiParams::new(n, 1, 1).unwrap()).totals();
        for (i, &total) in t.iter().enumerate() {
            let fact: u64 = (1..=i as u64).product();
            assert_eq!(total, fact * stirling_second(n as u32 + 1, i as u32 + 1));
        }
    }
    assert_eq!(
        betti_koszul(&build_i_phi(&PhiParams::n3(1, 1).unwrap()))
            .unwrap()
            .totals(),
        [1, 7, 12, 6]
    );
}

#[test]
fn four_variables_is_exploratory() {
    let r = check_conjecture(&PhiParams::new(4, 1, 1).unwrap()).unwrap();
    assert!(r.exploratory);
    assert_eq!(r.predicted.totals(), [1, 15, 50, 60, 24]);
    assert_eq!(r.computed.alternating_sum(), r.predicted.alternating_sum());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn alternating_sum_is_the_numerator(
        powers in prop::array::uniform3(1u32..4),
        extra in prop::collection::vec(prop::array::uniform3(0u32..3), 0..4),
    ) {
        let mut gens = vec![
            Monomial::new(vec![powers[0], 0, 0]),
            Monomial::new(vec![0, powers[1], 0]),
            Monomial::new(vec![0, 0, powers[2]]),
        ];
        gens.extend(extra.into_iter().filter(|e| e.iter().sum::<u32>() > 0).map(|e| Monomial::new(e.to_vec())));
        let ideal = GradedIdeal::monomial(3, &gens).unwrap();
        let t = betti_koszul(&ideal).unwrap();
        prop_assert_eq!(t.alternating_sum(), ideal.hilbert_numerator().unwrap());
        prop_assert_eq!(t.get(0, 0), 1);
        prop_assert_eq!(t.projective_dimension(), Some(3));
    }
}
