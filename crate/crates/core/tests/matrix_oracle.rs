mod common;

use common::*;
use padic_serre::arith::fp2_make;
use padic_serre::rep3a6::{char_value, frob_charpoly, inverse_class, table_z, CoarseClass3A6};

#[test]
fn group_is_triple_cover_of_a6() {
    let g = group();
    assert_eq!(g.len(), 1080);
    let f = fp2_make(5).unwrap();
    let z = table_z();
    let center: Vec<_> = g.iter().filter(|m| is_scalar(m)).map(|m| m[0][0]).collect();
    assert_eq!(center.len(), 3);
    for s in [f.one(), z, z * z] {
        assert!(center.contains(&s));
    }
}

#[test]
fn element_orders() {
    let g = group();
    let mut orders: Vec<u32> = g.iter().map(order).collect();
    orders.sort_unstable();
    orders.dedup();
    assert_eq!(orders, vec![1, 2, 3, 4, 5, 6, 12, 15]);
}

#[test]
fn table_agrees_with_matrices() {
    let g = group();
    let classes = classes_with_inverses(&g);
    assert_eq!(classes.len(), 13);
    for cls in CoarseClass3A6::ALL {
        let members = &classes[&cls];
        for (m, inv) in members {
            assert_eq!(trace(m), char_value(cls), "{cls}");
            assert_eq!(label(inv), inverse_class(cls), "{cls}");
            assert_eq!(order(m), cls.order(), "{cls}");
            for eps in [1i8, -1] {
                assert_eq!(charpoly(m, i64::from(eps)), frob_charpoly(cls, eps).unwrap(), "{cls} eps={eps}");
            }
        }
    }
    let sizes: Vec<usize> = CoarseClass3A6::ALL.iter().map(|c| classes[c].len()).collect();
    // 3cd has 2 * 3 * 40 elements, 5ab-type classes 3 * ... split evenly by the center.
    assert_eq!(sizes.iter().sum::<usize>(), 1080);
    assert_eq!(sizes, vec![1, 1, 1, 45, 45, 45, 240, 90, 90, 90, 144, 144, 144]);
}
