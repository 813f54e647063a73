use grassfilt::lagrangian::{
    lg_subalgebra_hilbert, LagMonomial, LagRing, LagVector, Strategy as Reduction,
};
use grassfilt::qseries::{lg_hilb, QPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn monomial(n: usize, max_deg: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1..=n, 0..=max_deg)
        .prop_filter("degree bound", move |v| v.iter().sum::<usize>() <= max_deg)
}

fn vector(n: usize) -> impl Strategy<Value = LagVector> {
    prop::collection::vec(
        (prop::collection::btree_set(1..=n, 0..=2), -2i64..=2),
        1..=3,
    )
    .prop_map(|terms| {
        let mut v = LagVector::zero();
        for (set, c) in terms {
            v.add_term(
                set.into_iter().collect(),
                BigRational::from_integer(c.into()),
            );
        }
        v
    })
}

proptest! {
    #[test]
    fn strategies_agree(mon in (1usize..=6).prop_flat_map(|n| (Just(n), monomial(n, 15)))) {
        let (n, idx) = mon;
        let m = LagMonomial::new(idx);
        let a = LagRing::with_strategy(n, Reduction::SmallestRepeated).normal_form(&m).unwrap();
        let b = LagRing::with_strategy(n, Reduction::LargestRepeated).normal_form(&m).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn ring_axioms((a, b, c) in (vector(5), vector(5), vector(5))) {
        let ring = LagRing::new(5);
        let ab = ring.multiply(&a, &b).unwrap();
        prop_assert_eq!(&ab, &ring.multiply(&b, &a).unwrap());
        let left = ring.multiply(&ab, &c).unwrap();
        let right = ring.multiply(&a, &ring.multiply(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }
}

#[test]
fn square_free_monomials_count_strict_partitions() {
    for n in 1..=8 {
        let ring = LagRing::new(n);
        let counts = QPoly::from_coeffs(
            (0..=ring.top_degree()).map(|d| BigInt::from(ring.basis_of_degree(d).len())),
        );
        assert_eq!(counts, lg_hilb(n));
    }
}

#[test]
fn subalgebra_series_extremes_and_stabilization() {
    for n in 1..=8 {
        let series: Vec<QPoly> = (1..=n)
            .map(|m| lg_subalgebra_hilbert(n, m).unwrap())
            .collect();
        assert_eq!(series[n - 1], lg_hilb(n));
        assert_eq!(series[0], QPoly::q_integer(n * (n + 1) / 2 + 1));
        for m in (2..=n).step_by(2) {
            assert_eq!(series[m - 1], series[m - 2], "n = {n}, m = {m}");
        }
    }
}
