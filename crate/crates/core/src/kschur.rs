//! `k`-Schur functions at `t = 1`, expanded in the Schur basis.
//!
//! The construction runs the `k`-Pieri rule backwards: for a `k`-bounded
//! `λ = (r, ν)`,
//!
//! ```text
//! h_r s^(k)_ν = Σ s^(k)_μ   over μ in weak_pieri_targets(ν, r, k)
//! ```
//!
//! and `λ` is the dominance-least target, so `s^(k)_λ` is `h_r s^(k)_ν`
//! minus the other (already computable) targets.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{out_of_range, Error, Result};
use crate::partition::{dominates_unchecked, k_conjugate, Partition};
use crate::schur::{horizontal_strips, pieri_h_bounded, Rect, SymVector};

/// `k`-bounded `μ ⊇ ν` with `μ/ν` a horizontal `r`-strip whose
/// `k`-conjugates differ by a vertical `r`-strip.
pub fn weak_pieri_targets(nu: &Partition, r: usize, k: usize) -> Result<Vec<Partition>> {
    if r == 0 || r > k {
        return Err(out_of_range("r", r, format!("1 <= r <= k = {k}")));
    }
    let nu_conj = k_conjugate(nu, k)?;
    let mut out = Vec::new();
    for mu in horizontal_strips(nu, r, None) {
        if mu.first() > k {
            continue;
        }
        if nu_conj.is_vertical_strip_of(&k_conjugate(&mu, k)?) {
            out.push(mu);
        }
    }
    Ok(out)
}

type Key = (Partition, usize, Option<Rect>);

/// Memo table for `k`-Schur expansions, optionally truncated to a box.
///
/// Entries are pure functions of their key, so concurrent callers may race
/// to insert the same entry without harm.
#[derive(Default)]
pub struct KSchurTable {
    memo: RwLock<HashMap<Key, Arc<SymVector>>>,
}

impl KSchurTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// The process-wide table used by [`k_schur`].
    pub fn global() -> &'static KSchurTable {
        static TABLE: OnceLock<KSchurTable> = OnceLock::new();
        TABLE.get_or_init(KSchurTable::new)
    }

    pub fn len(&self) -> usize {
        self.memo.read().expect("k-Schur memo poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, lambda: &Partition, k: usize) -> Result<Arc<SymVector>> {
        self.compute(lambda, k, None)
    }

    /// The image of `s^(k)_λ` in the quotient spanned by `s_μ`, `μ ⊆ (k^ℓ)`.
    pub fn get_in_box(&self, lambda: &Partition, k: usize, rect: Rect) -> Result<Arc<SymVector>> {
        self.compute(lambda, k, Some(rect))
    }

    fn compute(&self, lambda: &Partition, k: usize, bound: Option<Rect>) -> Result<Arc<SymVector>> {
        if !lambda.is_bounded(k) {
            return Err(Error::NotBounded {
                partition: lambda.clone(),
                k,
            });
        }
        let key = (lambda.clone(), k, bound);
        if let Some(v) = self.memo.read().expect("k-Schur memo poisoned").get(&key) {
            return Ok(Arc::clone(v));
        }

        let value = if lambda.is_empty() {
            SymVector::one()
        } else {
            let r = lambda.first();
            let nu = lambda.tail();
            let base = self.compute(&nu, k, bound)?;
            let mut value = pieri_h_bounded(r, &base, bound);
            let targets = weak_pieri_targets(&nu, r, k)?;
            if !targets.contains(lambda) {
                return Err(Error::PieriInvariant {
                    partition: lambda.clone(),
                    k,
                    detail: format!("missing from its own Pieri set {targets:?}"),
                });
            }
            for mu in targets.iter().filter(|mu| *mu != lambda) {
                if !dominates_unchecked(mu, lambda) {
                    return Err(Error::PieriInvariant {
                        partition: lambda.clone(),
                        k,
                        detail: format!("target ({mu}) does not dominate"),
                    });
                }
                value = &value - &*self.compute(mu, k, bound)?;
            }
            value
        };

        let value = Arc::new(value);
        self.memo
            .write()
            .expect("k-Schur memo poisoned")
            .entry(key)
            .or_insert_with(|| Arc::clone(&value));
        Ok(value)
    }
}

/// Schur expansion of `s^(k)_λ`.
pub fn k_schur(lambda: &Partition, k: usize) -> Result<SymVector> {
    Ok((*KSchurTable::global().get(lambda, k)?).clone())
}

/// `h_λ` in the `k`-Schur basis, by iterating the `k`-Pieri rule over the
/// parts of `λ` from first to last.
pub fn h_to_kschur(lambda: &Partition, k: usize) -> Result<BTreeMap<Partition, BigInt>> {
    let mut acc: BTreeMap<Partition, BigInt> = BTreeMap::new();
    acc.insert(Partition::empty(), BigInt::from(1));
    for &r in lambda.parts() {
        let mut next: BTreeMap<Partition, BigInt> = BTreeMap::new();
        for (nu, c) in &acc {
            for mu in weak_pieri_targets(nu, r, k)? {
                *next.entry(mu).or_insert_with(BigInt::zero) += c;
            }
        }
        next.retain(|_, c| !c.is_zero());
        acc = next;
    }
    Ok(acc)
}

/// `Σ c_μ s^(k)_μ` expanded in Schur functions.
pub fn kschur_combination(combo: &BTreeMap<Partition, BigInt>, k: usize) -> Result<SymVector> {
    let table = KSchurTable::global();
    let mut out = SymVector::zero();
    for (mu, c) in combo {
        out = &out
            + &table
                .get(mu, k)?
                .scale(&BigRational::from_integer(c.clone()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schur::{h_to_schur, int};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn sv(terms: &[(&str, i64)]) -> SymVector {
        let mut v = SymVector::zero();
        for (l, c) in terms {
            v.add_term(p(l), int(*c));
        }
        v
    }

    #[test]
    fn weak_pieri_examples() {
        assert_eq!(
            weak_pieri_targets(&p("1"), 1, 2).unwrap(),
            vec![p("2"), p("1,1")]
        );
        assert_eq!(
            weak_pieri_targets(&p("1,1"), 1, 2).unwrap(),
            vec![p("1,1,1")]
        );
        for k in 1..5 {
            for r in 1..=k {
                assert_eq!(
                    weak_pieri_targets(&Partition::empty(), r, k).unwrap(),
                    vec![Partition::new(vec![r]).unwrap()]
                );
            }
        }
        assert!(weak_pieri_targets(&p("1"), 3, 2).is_err());
        assert!(weak_pieri_targets(&p("3"), 1, 2).is_err());
    }

    #[test]
    fn k_schur_examples() {
        assert_eq!(
            k_schur(&p("1,1,1"), 1).unwrap(),
            sv(&[("3", 1), ("2,1", 2), ("1,1,1", 1)])
        );
        assert_eq!(k_schur(&p("2,1"), 2).unwrap(), sv(&[("3", 1), ("2,1", 1)]));
        assert_eq!(k_schur(&Partition::empty(), 3).unwrap(), SymVector::one());
        assert!(k_schur(&p("3"), 2).is_err());
    }

    #[test]
    fn k_schur_is_schur_when_hooks_are_small() {
        for k in 1..=4 {
            for d in 0..=8 {
                for lambda in crate::partition::bounded_partitions(k, d) {
                    let small = lambda.hook_lengths().iter().flatten().all(|&h| h <= k);
                    if small {
                        assert_eq!(
                            k_schur(&lambda, k).unwrap(),
                            SymVector::schur(lambda.clone()),
                            "k = {k}, λ = {lambda:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn k_one_is_power_of_h1() {
        for d in 0..=6 {
            let ones = Partition::new(vec![1; d]).unwrap();
            assert_eq!(k_schur(&ones, 1).unwrap(), h_to_schur(&ones));
        }
    }

    #[test]
    fn box_truncation_commutes() {
        let table = KSchurTable::new();
        let rect = Rect::new(2, 3);
        for k in 1..=3 {
            for d in 0..=7 {
                for lambda in crate::partition::bounded_partitions(k, d) {
                    let full = table.get(&lambda, k).unwrap().truncate(rect);
                    let boxed = table.get_in_box(&lambda, k, rect).unwrap();
                    assert_eq!(full, *boxed, "λ = {lambda:?}, k = {k}");
                }
            }
        }
        assert!(!table.is_empty());
    }
}
