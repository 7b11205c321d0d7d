use howe::classify::dimension_square_sum;
use howe::groups::order;
use howe::semisimple::Bounds;
use howe::{verify_correspondence_identity, verify_full_decomposition, DualPairSpec, GroupSpec, Sign};

#[test]
fn rank_three_square_sums() {
    for (g, q0) in [
        (GroupSpec::sp(3), 3u64),
        (GroupSpec::sp(3), 5),
        (GroupSpec::so_odd(3), 3),
        (GroupSpec::o_odd(2, Sign::Plus), 3),
        (GroupSpec::o_even(3, Sign::Plus), 3),
        (GroupSpec::o_even(3, Sign::Minus), 3),
    ] {
        let total = dimension_square_sum(&g, q0, &Bounds::default()).unwrap();
        assert_eq!(total, order(&g).eval_at_u64(q0), "{g} at q={q0}");
        println!("{g} at q={q0}: ok");
    }
}

#[test]
fn rank_three_identities() {
    let pair = DualPairSpec::new(7, GroupSpec::o_odd(3, Sign::Plus)).unwrap();
    let r = verify_correspondence_identity(&pair, 3, &Bounds::default()).unwrap();
    assert!(r.equal, "{} vs {}", r.lhs, r.rhs);
    println!("eta N=7 O(7): {} witnesses", r.witnesses.len());
    assert!(verify_full_decomposition(&pair, 3).unwrap().equal);

    let pair = DualPairSpec::new(3, GroupSpec::o_odd(6, Sign::Minus)).unwrap();
    let r = verify_correspondence_identity(&pair, 3, &Bounds::default()).unwrap();
    assert!(r.equal, "{} vs {}", r.lhs, r.rhs);
    println!("zeta N=3 O(13): {} witnesses", r.witnesses.len());
    assert!(verify_full_decomposition(&pair, 3).unwrap().equal);
}
