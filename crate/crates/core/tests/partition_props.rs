use grassfilt::partition::{
    bounded_from_core, bounded_partitions, core_from_bounded, in_box, k_conjugate, lg_compose,
    lg_decompose, partitions_of, strict_in_triangle, vacancy, vacant_compose, vacant_decompose,
};
use grassfilt::Partition;
use proptest::prelude::*;

fn partition(max_part: usize, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #[test]
    fn conjugate_is_involution(p in partition(8, 8)) {
        let c = p.conjugate();
        prop_assert_eq!(c.size(), p.size());
        prop_assert_eq!(c.conjugate(), p);
    }

    #[test]
    fn k_conjugate_is_involution((k, p) in (1usize..=6).prop_flat_map(|k| (Just(k), partition(k, 10)))) {
        let c = k_conjugate(&p, k).unwrap();
        prop_assert_eq!(c.size(), p.size());
        prop_assert!(c.is_bounded(k));
        prop_assert_eq!(k_conjugate(&c, k).unwrap(), p);
    }

    #[test]
    fn core_round_trip((k, p) in (1usize..=6).prop_flat_map(|k| (Just(k), partition(k, 10)))) {
        let core = core_from_bounded(&p, k).unwrap();
        prop_assert!(core.is_core(k + 1));
        prop_assert_eq!(bounded_from_core(&core, k).unwrap(), p);
    }

    #[test]
    fn text_form_round_trips(p in partition(9, 9)) {
        let s = p.to_string();
        prop_assert_eq!(s.parse::<Partition>().unwrap(), p);
    }
}

#[test]
fn cores_and_bounded_partitions_biject() {
    for k in 1..=6 {
        for d in 0..=12 {
            for lambda in bounded_partitions(k, d) {
                let core = core_from_bounded(&lambda, k).unwrap();
                assert_eq!(bounded_from_core(&core, k).unwrap(), lambda);
            }
        }
        // Every small (k+1)-core comes from a k-bounded partition.
        for d in 0..=14 {
            for kappa in partitions_of(d).into_iter().filter(|p| p.is_core(k + 1)) {
                let lambda = bounded_from_core(&kappa, k).unwrap();
                assert_eq!(core_from_bounded(&lambda, k).unwrap(), kappa, "k = {k}");
            }
        }
    }
}

#[test]
fn small_hooks_make_k_conjugate_the_transpose() {
    for k in 1..=5 {
        for d in 0..=10 {
            for lambda in bounded_partitions(k, d) {
                if lambda.hook_lengths().iter().flatten().all(|&h| h <= k) {
                    assert_eq!(k_conjugate(&lambda, k).unwrap(), lambda.conjugate());
                }
            }
        }
    }
}

#[test]
fn vacancy_is_first_part_of_k_conjugate() {
    for ell in 1..=6 {
        for k in 1..=6 {
            for lambda in in_box(ell, k).into_iter().filter(|l| !l.is_empty()) {
                assert_eq!(
                    vacancy(&lambda, k).unwrap(),
                    k_conjugate(&lambda, k).unwrap().first()
                );
            }
        }
    }
}

#[test]
fn decompositions_round_trip() {
    for ell in 1..=6 {
        for k in 1..=6 {
            for lambda in in_box(ell, k).into_iter().filter(|l| !l.is_empty()) {
                let d = vacant_decompose(&lambda, k).unwrap();
                assert!(d.i >= 1 && d.i + d.j == lambda.len());
                assert!(d.dagger.fits_in_box(d.i, k - d.i));
                assert!(d.ddagger.fits_in_box(d.j, d.i - 1));
                assert_eq!(vacant_compose(&d, k).unwrap(), lambda);
            }
        }
    }
    for n in 1..=9 {
        for lambda in strict_in_triangle(n).into_iter().filter(|l| !l.is_empty()) {
            let d = lg_decompose(&lambda, n).unwrap();
            assert!(d.i % 2 == 1 && (1..=n).contains(&d.i));
            assert!(d.mu.fits_in_box(d.j, d.i));
            assert_eq!(lg_compose(&d, n).unwrap(), lambda);
        }
    }
}
