mod common;

use active_sum::fp::{active_sum_presentation, Presentation};
use active_sum::*;
use common::oracle_order;

fn tc_order(p: &Presentation) -> u64 {
    todd_coxeter(p, &[], &EnumerationOptions::default()).unwrap().num_cosets() as u64
}

#[test]
fn oracle_on_small_presentations() {
    let cases = [
        ("gens a\na^5", 5),
        ("gens x y\nx^2\ny^2\nx y x y x y", 6),
        ("gens a b\na^2\nb^2\na b a' b'", 4),
        ("gens a b\na^3\nb^3\na b a' b'", 9),
        ("gens a b\na^4\nb^2\nb a b a", 8),
        ("gens a b\na^4\nb^4\na^2 b^-2\nb' a b a", 8),
    ];
    for (text, order) in cases {
        let p = Presentation::parse(text).unwrap();
        assert_eq!(oracle_order(&p, 16), Some(order), "{text}");
        assert_eq!(tc_order(&p), order, "{text}");
    }
}

#[test]
fn oracle_gives_up_on_small_bounds() {
    let p = Presentation::parse("gens a\na^9").unwrap();
    assert_eq!(oracle_order(&p, 5), None);
}

#[test]
fn active_sums_agree_with_oracle() {
    let l = Limits::default();
    let cases: [(PermGroup, u64); 3] = [
        (PermGroup::symmetric(3).unwrap(), 2),
        (PermGroup::alternating(4).unwrap(), 3),
        (PermGroup::dihedral(4).unwrap(), 4),
    ];
    for (g, m) in cases {
        let fam = cyclic_family(&g, m, &l).unwrap();
        let p = active_sum_presentation(&fam, Encoding::Cyclic, &l).unwrap();
        let r = realize_active_sum(&g, &fam, Encoding::Cyclic, &EnumerationOptions::default(), &l).unwrap();
        assert_eq!(oracle_order(&p, 14), Some(r.order), "{:?}", g.name());
    }
}
