use std::collections::BTreeMap;

use grassfilt::grassmann::{subalgebra_hilbert, top_power_coefficient};
use grassfilt::kschur::{h_to_kschur, kschur_combination};
use grassfilt::partition::{bounded_partitions, dominance_leq, partitions_of};
use grassfilt::qseries::{double_primed_binomial, grass_hilb, primed_binomial, q_binomial, rt_rhs};
use grassfilt::schur::{h_to_schur, omega, pieri_e, pieri_h};
use grassfilt::{Partition, SymVector};
use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// Standard Young tableaux count by the hook-length formula.
fn syt(p: &Partition) -> BigInt {
    let hooks: BigInt = p
        .hook_lengths()
        .iter()
        .flatten()
        .map(|&h| BigInt::from(h))
        .product();
    factorial(p.size()) / hooks
}

fn small_sym() -> impl Strategy<Value = SymVector> {
    prop::collection::vec((prop::collection::vec(1usize..=3, 0..=3), -3i64..=3), 1..=3).prop_map(
        |terms| {
            let mut v = SymVector::zero();
            for (mut parts, c) in terms {
                parts.sort_unstable_by(|a, b| b.cmp(a));
                v.add_term(
                    Partition::new(parts).unwrap(),
                    BigRational::from_integer(c.into()),
                );
            }
            v
        },
    )
}

proptest! {
    #[test]
    fn pieri_operators_commute(v in small_sym(), a in 1usize..=4, b in 1usize..=4) {
        prop_assert_eq!(pieri_h(a, &pieri_h(b, &v)), pieri_h(b, &pieri_h(a, &v)));
    }

    #[test]
    fn omega_swaps_h_and_e(v in small_sym(), r in 1usize..=4) {
        prop_assert_eq!(omega(&pieri_h(r, &v)), pieri_e(r, &omega(&v)));
    }

    #[test]
    fn q_binomial_symmetric(a in 0usize..=14, b in 0usize..=14) {
        prop_assume!(b <= a);
        let p = q_binomial(a, b as i64);
        prop_assert_eq!(&p, &q_binomial(a, (a - b) as i64));
        prop_assert_eq!(p.eval_one(), BigInt::from(binomial(a as u64, b as u64)));
    }
}

#[test]
fn primed_binomials_at_one() {
    for ell in 1..=9 {
        for k in 1..=9 {
            for i in 1..=ell.min(k) {
                let v = primed_binomial(ell, i, k).unwrap().eval_one();
                assert_eq!(v, BigInt::from(binomial(ell, i)));
            }
        }
    }
    for n in 1..=12 {
        for i in 1..=n {
            let v = double_primed_binomial(n, i).unwrap().eval_one();
            assert_eq!(v, BigInt::from(binomial(n + 1, i + 1)));
        }
    }
}

#[test]
fn full_sum_is_the_grassmannian() {
    for ell in 1..=8 {
        for k in 1..=8 {
            assert_eq!(rt_rhs(ell, k, ell.min(k)).unwrap(), grass_hilb(ell, k));
        }
    }
}

#[test]
fn h_expansion_is_kostka() {
    for d in 0..=8 {
        for lambda in partitions_of(d) {
            let v = h_to_schur(&lambda);
            assert_eq!(v.coeff(&lambda), BigRational::one());
            let mut total = BigInt::zero();
            for (mu, c) in v.terms() {
                assert!(c.is_integer() && *c > BigRational::zero());
                if *mu != lambda {
                    assert!(dominance_leq(&lambda, mu).unwrap(), "{lambda} vs {mu}");
                }
                total += c.to_integer() * syt(mu);
            }
            let multinomial = lambda
                .parts()
                .iter()
                .fold(factorial(d), |acc, &p| acc / factorial(p));
            assert_eq!(total, multinomial, "λ = {lambda}");
        }
    }
}

#[test]
fn h_through_k_schur_basis() {
    for k in 1..=4 {
        for d in 0..=10 {
            for lambda in bounded_partitions(k, d) {
                let combo: BTreeMap<Partition, BigInt> = h_to_kschur(&lambda, k).unwrap();
                assert_eq!(kschur_combination(&combo, k).unwrap(), h_to_schur(&lambda));
            }
        }
    }
}

#[test]
fn subalgebras_symmetric_and_monotone() {
    for ell in 1..=5 {
        for k in 1..=5 {
            let series: Vec<_> = (0..=ell.min(k))
                .map(|m| subalgebra_hilbert(ell, k, m))
                .collect();
            for (m, s) in series.iter().enumerate() {
                assert_eq!(*s, subalgebra_hilbert(k, ell, m));
            }
            for w in series.windows(2) {
                assert!((&w[1] - &w[0]).is_nonnegative());
            }
            assert_eq!(*series.last().unwrap(), grass_hilb(ell, k));
        }
    }
}

#[test]
fn top_power_counts_rectangle_tableaux() {
    for ell in 1..=5 {
        for k in 1..=5 {
            assert_eq!(
                top_power_coefficient(ell, k),
                syt(&Partition::rectangle(ell, k))
            );
        }
    }
}
