//! Symmetric functions stored in the Schur basis.
//!
//! `h` and `e` never appear as stored bases; they act through the Pieri
//! rules. Every routine here takes an optional [`Box`] so callers working in
//! a Grassmannian quotient can discard terms outside `(k^ℓ)` as they go;
//! those terms span an ideal, so truncating early gives the same result as
//! truncating at the end.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::partition::{enumeration_order, Partition};

/// The ambient rectangle `(k^ℓ)` of a Grassmannian quotient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rect {
    pub ell: usize,
    pub k: usize,
}

impl Rect {
    pub fn new(ell: usize, k: usize) -> Self {
        Self { ell, k }
    }

    fn admits(bound: Option<Rect>, mu: &Partition) -> bool {
        bound.is_none_or(|b| mu.fits_in_box(b.ell, b.k))
    }
}

/// A finite linear combination of Schur functions with rational coefficients.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct SymVector {
    terms: BTreeMap<Partition, BigRational>,
}

impl SymVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis element `s_λ`.
    pub fn schur(lambda: Partition) -> Self {
        let mut v = Self::zero();
        v.add_term(lambda, BigRational::one());
        v
    }

    pub fn one() -> Self {
        Self::schur(Partition::empty())
    }

    pub fn add_term(&mut self, lambda: Partition, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> BigRational {
        self.terms
            .get(lambda)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.terms.iter()
    }

    /// Sizes of the partitions that occur.
    pub fn degrees(&self) -> std::collections::BTreeSet<usize> {
        self.terms.keys().map(Partition::size).collect()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(l, x)| (l.clone(), x * c)).collect(),
        }
    }

    /// Keep only terms with `λ ⊆ (k^ℓ)`.
    pub fn truncate(&self, rect: Rect) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| l.fits_in_box(rect.ell, rect.k))
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    /// Terms in enumeration order (size, then decreasing parts).
    pub fn sorted_terms(&self) -> Vec<(&Partition, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| enumeration_order(a.0, b.0));
        v
    }
}

impl Add<&SymVector> for &SymVector {
    type Output = SymVector;

    fn add(self, rhs: &SymVector) -> SymVector {
        let mut out = self.clone();
        for (l, c) in &rhs.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }
}

impl Sub<&SymVector> for &SymVector {
    type Output = SymVector;

    fn sub(self, rhs: &SymVector) -> SymVector {
        let mut out = self.clone();
        for (l, c) in &rhs.terms {
            out.add_term(l.clone(), -c.clone());
        }
        out
    }
}

impl fmt::Display for SymVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (l, c)) in self.sorted_terms().into_iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            if !c.is_one() {
                write!(f, "{c}*")?;
            }
            write!(f, "s[{l}]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymVector({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    partition: Partition,
    coeff: String,
}

/// JSON form: list of `{partition, coeff}` with `coeff` as `"p/q"` or `"p"`.
impl Serialize for SymVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let reprs: Vec<TermRepr> = self
            .sorted_terms()
            .into_iter()
            .map(|(l, c)| TermRepr {
                partition: l.clone(),
                coeff: c.to_string(),
            })
            .collect();
        reprs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let reprs = Vec::<TermRepr>::deserialize(d)?;
        let mut v = SymVector::zero();
        for t in reprs {
            let c: BigRational = t.coeff.parse().map_err(serde::de::Error::custom)?;
            v.add_term(t.partition, c);
        }
        Ok(v)
    }
}

/// All `μ ⊇ λ` with `μ/λ` a horizontal strip of size `r`.
pub fn horizontal_strips(lambda: &Partition, r: usize, bound: Option<Rect>) -> Vec<Partition> {
    fn go(
        lambda: &[usize],
        row: usize,
        rem: usize,
        cur: &mut Vec<usize>,
        bound: Option<Rect>,
        out: &mut Vec<Partition>,
    ) {
        let base = lambda.get(row).copied().unwrap_or(0);
        if row > lambda.len() {
            if rem == 0 {
                out.push(Partition::from_decreasing(cur.clone()));
            }
            return;
        }
        // Row `row` may grow up to the previous row of λ.
        let mut cap = if row == 0 {
            base + rem
        } else {
            lambda[row - 1]
        };
        if let Some(b) = bound {
            if row >= b.ell {
                if rem == 0 {
                    out.push(Partition::from_decreasing(cur.clone()));
                }
                return;
            }
            cap = cap.min(b.k);
        }
        let max_add = cap.saturating_sub(base).min(rem);
        for add in (0..=max_add).rev() {
            cur.push(base + add);
            go(lambda, row + 1, rem - add, cur, bound, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if Rect::admits(bound, lambda) {
        go(lambda.parts(), 0, r, &mut Vec::new(), bound, &mut out);
    }
    out
}

/// All `μ ⊇ λ` with `μ/λ` a vertical strip of size `r`.
pub fn vertical_strips(lambda: &Partition, r: usize, bound: Option<Rect>) -> Vec<Partition> {
    fn go(
        lambda: &[usize],
        row: usize,
        rem: usize,
        cur: &mut Vec<usize>,
        bound: Option<Rect>,
        out: &mut Vec<Partition>,
    ) {
        if rem == 0 {
            let mut parts = cur.clone();
            parts.extend_from_slice(&lambda[row.min(lambda.len())..]);
            out.push(Partition::from_decreasing(parts));
            return;
        }
        if bound.is_some_and(|b| row >= b.ell) {
            return;
        }
        let base = lambda.get(row).copied().unwrap_or(0);
        let above = if row == 0 { usize::MAX } else { cur[row - 1] };
        let fits = bound.is_none_or(|b| base < b.k);
        if base < above && fits {
            cur.push(base + 1);
            go(lambda, row + 1, rem - 1, cur, bound, out);
            cur.pop();
        }
        // Skipping a row past the end of λ would leave a gap.
        if row < lambda.len() {
            cur.push(base);
            go(lambda, row + 1, rem, cur, bound, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if Rect::admits(bound, lambda) {
        go(lambda.parts(), 0, r, &mut Vec::new(), bound, &mut out);
    }
    out
}

fn apply_strips<F>(v: &SymVector, strips: F) -> SymVector
where
    F: Fn(&Partition) -> Vec<Partition>,
{
    let mut out = SymVector::zero();
    for (lambda, c) in &v.terms {
        for mu in strips(lambda) {
            out.add_term(mu, c.clone());
        }
    }
    out
}

/// `h_r · v`.
pub fn pieri_h(r: usize, v: &SymVector) -> SymVector {
    pieri_h_bounded(r, v, None)
}

/// `e_r · v`.
pub fn pieri_e(r: usize, v: &SymVector) -> SymVector {
    pieri_e_bounded(r, v, None)
}

pub fn pieri_h_bounded(r: usize, v: &SymVector, bound: Option<Rect>) -> SymVector {
    apply_strips(v, |l| horizontal_strips(l, r, bound))
}

pub fn pieri_e_bounded(r: usize, v: &SymVector, bound: Option<Rect>) -> SymVector {
    apply_strips(v, |l| vertical_strips(l, r, bound))
}

/// Schur expansion of `h_λ = h_{λ_1} h_{λ_2} ...`.
pub fn h_to_schur(lambda: &Partition) -> SymVector {
    h_to_schur_bounded(lambda, None)
}

pub fn h_to_schur_bounded(lambda: &Partition, bound: Option<Rect>) -> SymVector {
    lambda
        .parts()
        .iter()
        .fold(SymVector::one(), |acc, &r| pieri_h_bounded(r, &acc, bound))
}

/// The involution `ω`: `s_λ ↦ s_{λ^t}`.
pub fn omega(v: &SymVector) -> SymVector {
    SymVector {
        terms: v
            .terms
            .iter()
            .map(|(l, c)| (l.conjugate(), c.clone()))
            .collect(),
    }
}

/// Convenience constructor for integer coefficients.
pub fn int(c: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(c))
}

#[cfg(test)]
mod tests {
    use super::*;

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
    fn pieri_h_examples() {
        assert_eq!(pieri_h(1, &sv(&[("1", 1)])), sv(&[("2", 1), ("1,1", 1)]));
        assert_eq!(
            pieri_h(2, &sv(&[("2,1", 1)])),
            sv(&[("4,1", 1), ("3,2", 1), ("3,1,1", 1), ("2,2,1", 1)])
        );
        assert_eq!(pieri_h(3, &SymVector::one()), sv(&[("3", 1)]));
    }

    #[test]
    fn pieri_e_examples() {
        assert_eq!(pieri_e(2, &SymVector::one()), sv(&[("1,1", 1)]));
        assert_eq!(
            pieri_e(2, &sv(&[("2,1", 1)])),
            sv(&[("3,2", 1), ("3,1,1", 1), ("2,2,1", 1), ("2,1,1,1", 1)])
        );
    }

    #[test]
    fn h_expansion_examples() {
        assert_eq!(h_to_schur(&Partition::empty()), SymVector::one());
        assert_eq!(h_to_schur(&p("2,1")), sv(&[("3", 1), ("2,1", 1)]));
        assert_eq!(h_to_schur(&p("1,1")), sv(&[("2", 1), ("1,1", 1)]));
        assert_eq!(
            h_to_schur(&p("1,1,1")),
            sv(&[("3", 1), ("2,1", 2), ("1,1,1", 1)])
        );
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega(&sv(&[("3", 1)])), sv(&[("1,1,1", 1)]));
        assert_eq!(
            omega(&h_to_schur(&p("2,1"))),
            sv(&[("1,1,1", 1), ("2,1", 1)])
        );
        let v = sv(&[("3,1", 2), ("2", -1)]);
        assert_eq!(omega(&omega(&v)), v);
    }

    #[test]
    fn bounded_strips_stay_in_box() {
        let b = Some(Rect::new(2, 2));
        let out = horizontal_strips(&p("1"), 2, b);
        assert_eq!(out, vec![p("2,1")]);
        let out = vertical_strips(&p("1"), 1, b);
        assert_eq!(out, vec![p("2"), p("1,1")]);
        assert!(horizontal_strips(&p("3"), 1, b).is_empty());
    }

    #[test]
    fn json_form() {
        let mut v = sv(&[("2,1", 3)]);
        v.add_term(p(""), BigRational::new(1.into(), 2.into()));
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(
            s,
            r#"[{"partition":"","coeff":"1/2"},{"partition":"2,1","coeff":"3"}]"#
        );
        assert_eq!(serde_json::from_str::<SymVector>(&s).unwrap(), v);
    }
}
