use proptest::prelude::*;
use psbetti::fatpoints::{fatpoint_dimension, standard_points, FatpointScheme};
use psbetti::ideals::PhiParams;
use psbetti::surface::{
    a_class, canonical, divisor_for_fatpoints, ghm_h0, ghm_h0_with, listed_neg_curves,
    DivisorClass, LinkedConfiguration, NegCurveSet, SubtractionMode,
};

#[test]
fn canonical_and_anticanonical_classes() {
    assert_eq!(canonical(4).unwrap().coeffs(), [-3, 1, 1, 1, 1]);
    assert_eq!(a_class(4).unwrap().coeffs(), [5, -1, -1, -1, -1]);
    assert_eq!(divisor_for_fatpoints(7, &[0, 0]).coeffs(), [7, 0, 0]);
}

#[test]
fn lines_in_the_plane() {
    for config in LinkedConfiguration::ALL {
        let m = config.num_points();
        let r = ghm_h0(&DivisorClass::basis(m, 0), &listed_neg_curves(config)).unwrap();
        assert_eq!((r.effective, r.h0, r.steps), (true, 3, 0));
    }
}

#[test]
fn configuration_values() {
    let p = PhiParams::n3(1, 1).unwrap();
    let h0 =
        |c: LinkedConfiguration| ghm_h0(&c.divisor(&p).unwrap(), &listed_neg_curves(c)).unwrap();
    assert_eq!(h0(LinkedConfiguration::L1).h0, 3);
    for k in 1..=4 {
        let p = PhiParams::n3(1, k).unwrap();
        let r = ghm_h0(
            &LinkedConfiguration::L3.divisor(&p).unwrap(),
            &listed_neg_curves(LinkedConfiguration::L3),
        )
        .unwrap();
        assert!(!r.effective && r.h0 == 0, "k = {k}");
    }
}

#[test]
fn names_parse() {
    assert_eq!(
        "l2".parse::<LinkedConfiguration>().unwrap(),
        LinkedConfiguration::L2
    );
    assert!("L4".parse::<LinkedConfiguration>().is_err());
}

fn config() -> impl Strategy<Value = LinkedConfiguration> {
    prop::sample::select(LinkedConfiguration::ALL.to_vec())
}

fn scheme_for(c: LinkedConfiguration, mults: &[u32]) -> FatpointScheme {
    let sp = standard_points();
    let pts = c
        .point_labels()
        .iter()
        .zip(mults)
        .filter(|(_, m)| **m > 0)
        .map(|(&label, &m)| (sp[label - 1].clone(), m))
        .collect();
    FatpointScheme::new(pts).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// The listed curves are all negative curves of each configuration, so the
    /// reduction computes the dimension of plane curves through the fat points.
    #[test]
    fn agrees_with_fat_point_dimension(c in config(), j in 0u32..10, raw in prop::collection::vec(0u32..5, 6)) {
        let mults = &raw[..c.num_points()];
        let d = divisor_for_fatpoints(j, mults);
        let r = ghm_h0(&d, &listed_neg_curves(c)).unwrap();
        prop_assert_eq!(r.h0 as usize, fatpoint_dimension(&scheme_for(c, mults), j));
        let batched = ghm_h0_with(&d, &listed_neg_curves(c), SubtractionMode::Batched).unwrap();
        prop_assert_eq!(batched.h0, r.h0);
        prop_assert!(batched.steps <= r.steps);
    }

    #[test]
    fn curve_order_does_not_matter(
        c in config(), j in 0u32..12, raw in prop::collection::vec(0u32..6, 6), seed in any::<u64>(),
    ) {
        let mults = &raw[..c.num_points()];
        let d = divisor_for_fatpoints(j, mults);
        let mut classes = listed_neg_curves(c).classes().to_vec();
        let n = classes.len();
        for i in (1..n).rev() {
            classes.swap(i, (seed.rotate_left(i as u32) % (i as u64 + 1)) as usize);
        }
        let shuffled = NegCurveSet::new(classes).unwrap();
        let a = ghm_h0(&d, &listed_neg_curves(c)).unwrap();
        let b = ghm_h0(&d, &shuffled).unwrap();
        prop_assert_eq!(a.h0, b.h0);
        prop_assert_eq!(a.effective, b.effective);
        if a.effective {
            prop_assert_eq!(a.h, b.h);
        }
    }
}
