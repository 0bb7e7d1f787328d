use nsg_core::semigroup::Semigroup;
use nsg_core::series::TruncatedSeries;
use nsg_core::walker::{enumerate, WalkConfig};
use num_bigint::BigUint;
use proptest::prelude::*;

const ORDER: usize = 12;

fn int_series(unit: bool) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(-20i64..20, ORDER + 1).prop_map(move |mut c| {
        if unit {
            c[0] = 1;
        }
        TruncatedSeries::from_ints(&c, ORDER)
    })
}

/// A semigroup reached from the root by following `path` down the tree.
fn descend(path: &[usize]) -> Semigroup {
    let mut s = Semigroup::root();
    for &step in path {
        let kids = s.children();
        if kids.is_empty() {
            break;
        }
        s = kids[step % kids.len()].clone();
    }
    s
}

proptest! {
    #[test]
    fn division_undoes_multiplication(a in int_series(false), b in int_series(true)) {
        let product = &a * &b;
        prop_assert_eq!(product.div(&b).unwrap(), a);
    }

    #[test]
    fn square_root_squares_back(s in int_series(true)) {
        let r = s.sqrt().unwrap();
        prop_assert_eq!(&r * &r, s);
    }

    #[test]
    fn tree_moves_round_trip(path in prop::collection::vec(0usize..8, 0..14)) {
        let s = descend(&path);
        prop_assert_eq!(s.gaps().len() as u32, s.genus());
        prop_assert_eq!(&Semigroup::from_generators(&s.minimal_generators()).unwrap(), &s);
        for child in s.children() {
            prop_assert_eq!(child.parent(), Some(s.clone()));
            prop_assert!(child.frobenius() > s.frobenius());
        }
        let effective = s.effective_generators();
        prop_assert!(effective.iter().all(|&x| x > s.frobenius() && s.is_minimal_generator(x)));
    }

    #[test]
    fn multiplicity_rows_sum_to_counts(g in 1u32..=14, workers in 1usize..=3) {
        let result = enumerate(&WalkConfig::new(g).workers(workers).split_depth(4).with_multiplicity()).unwrap();
        for genus in 1..=g {
            let row: BigUint = (0..=genus + 1)
                .map(|l| result.by_multiplicity(genus, l).unwrap().clone())
                .sum();
            prop_assert_eq!(&row, result.count(genus));
        }
    }
}
