use eds_lab::enumeration::ConstraintSpec;
use eds_lab::families::{balanced_spider, double_broom, double_star, path, t_s};
use eds_lab::harness::{extremal_scan, ParamFilter, Params, TheoremId, Verdict, Verifier};
use eds_lab::{canonical_code, eds, Invariant};

#[test]
fn scan_examples() {
    let leaves3 = ConstraintSpec { leaf_count: Some(3), ..Default::default() };
    let s = extremal_scan(7, leaves3, Invariant::Eds, 1, 0).unwrap();
    assert_eq!(s.bottom[0].code, canonical_code(&balanced_spider(7, 3).unwrap()));
    assert_eq!(s.bottom[0].value, 330);

    let s = extremal_scan(7, ConstraintSpec::default(), Invariant::Eds, 0, 1).unwrap();
    assert_eq!(s.top[0].code, canonical_code(&path(7).unwrap()));

    let bip = ConstraintSpec { bipartition: Some((3, 3)), ..Default::default() };
    let s = extremal_scan(6, bip, Invariant::Eds, 2, 0).unwrap();
    let got: Vec<_> = s.bottom.iter().map(|r| (r.code.clone(), r.value)).collect();
    assert_eq!(
        got,
        vec![
            (canonical_code(&double_star(3, 3).unwrap()), 160),
            (canonical_code(&t_s(3, 3, 1).unwrap()), 205)
        ]
    );
}

#[test]
fn scan_other_invariants_rank_the_path_last() {
    for inv in [Invariant::Wiener, Invariant::DegreeDistance, Invariant::TotalEcc] {
        let s = extremal_scan(8, ConstraintSpec::default(), inv, 1, 1).unwrap();
        assert_eq!(s.top[0].code, canonical_code(&path(8).unwrap()), "{}", inv.name());
        assert_eq!(s.class_size, 23);
    }
}

#[test]
fn broom_chain_example() {
    let v = Verifier::new(1).unwrap();
    let r = v.check(TheoremId::L2_4, Params { l: Some(4), ..Params::order(10) }).unwrap();
    assert_eq!(r.verdict, Verdict::Confirmed);
    assert_eq!(r.class_size, 3);
    let values: Vec<u64> = (1..=3).map(|a| eds(&double_broom(4, a, 6 - a).unwrap())).collect();
    assert!(values[0] < values[1] && values[1] < values[2]);
}

#[test]
fn property_suites_to_ten() {
    let v = Verifier::new(0).unwrap();
    for id in [TheoremId::L2_6Corona, TheoremId::L4_1Prop, TheoremId::P2Chain, TheoremId::L2_8] {
        for r in v.verify(id, 2..=10, &ParamFilter::default()).unwrap() {
            assert_eq!(r.verdict, Verdict::Confirmed, "{id} {:?}", r.params);
        }
    }
}

#[test]
fn filter_selects_single_point() {
    let v = Verifier::new(1).unwrap();
    let reports = v.verify(TheoremId::T4_4, 9..=11, &"p=5,variant=paper".parse().unwrap()).unwrap();
    assert_eq!(reports.len(), 2);
    assert!(reports.iter().all(|r| r.params.p == Some(5)));
    assert_eq!(reports[0].params.n, 10);
    assert_eq!(reports[0].verdict, Verdict::BoundaryExcluded);
    assert_eq!(reports[1].verdict, Verdict::Confirmed);
}

#[test]
fn third_minimum_at_p_four_is_hat_tree() {
    let v = Verifier::new(1).unwrap();
    let r = &v.verify(TheoremId::T4_4, 9..=9, &"variant=rederived".parse().unwrap()).unwrap()[0];
    assert_eq!(r.verdict, Verdict::Refuted);
    let hat = eds_lab::families::hat_t_s(4, 5, 1).unwrap();
    assert_eq!(r.observed.codes, vec![canonical_code(&hat)]);
    assert_eq!(r.observed.value, 550);
}
