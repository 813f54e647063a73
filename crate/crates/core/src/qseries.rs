//! Polynomials in `q` with exact integer coefficients, the Gaussian binomial
//! and its two variants, and the Hilbert-series formulas built from them.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{out_of_range, Result};
use crate::partition::Weighted;

/// A polynomial in `q` with arbitrary-precision integer coefficients.
///
/// Only nonzero coefficients are stored, so equality is equality of
/// polynomials.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    terms: BTreeMap<usize, BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// `c q^e`.
    pub fn monomial(c: BigInt, e: usize) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    /// `q^e`.
    pub fn q_pow(e: usize) -> Self {
        Self::monomial(BigInt::one(), e)
    }

    /// From dense coefficients indexed by exponent.
    pub fn from_coeffs<I, C>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in coeffs.into_iter().enumerate() {
            p.add_term(e, c.into());
        }
        p
    }

    /// `1 + q + ... + q^{n-1}`.
    pub fn q_integer(n: usize) -> Self {
        Self::from_coeffs(std::iter::repeat_n(1, n))
    }

    pub fn add_term(&mut self, e: usize, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().copied()
    }

    pub fn coeff(&self, e: usize) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    /// Dense coefficient list up to the degree; empty for zero.
    pub fn coefficients(&self) -> Vec<BigInt> {
        match self.degree() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|e| self.coeff(e)).collect(),
        }
    }

    /// Multiply by `q^s`.
    pub fn shift(&self, s: usize) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e + s, c.clone()))
                .collect(),
        }
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// True iff every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }
}

impl Add<&QPoly> for &QPoly {
    type Output = QPoly;

    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Add for QPoly {
    type Output = QPoly;

    fn add(self, rhs: QPoly) -> QPoly {
        &self + &rhs
    }
}

impl Neg for &QPoly {
    type Output = QPoly;

    fn neg(self) -> QPoly {
        QPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Sub<&QPoly> for &QPoly {
    type Output = QPoly;

    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Sub for QPoly {
    type Output = QPoly;

    fn sub(self, rhs: QPoly) -> QPoly {
        &self - &rhs
    }
}

impl Mul<&QPoly> for &QPoly {
    type Output = QPoly;

    fn mul(self, rhs: &QPoly) -> QPoly {
        let mut out = QPoly::zero();
        for (&a, x) in &self.terms {
            for (&b, y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Mul for QPoly {
    type Output = QPoly;

    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for QPoly {
    fn sum<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::zero(), |acc, p| &acc + &p)
    }
}

impl std::iter::Product for QPoly {
    fn product<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::one(), |acc, p| &acc * &p)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (&e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            let unit = mag.is_one();
            match (e, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{mag}q^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

/// JSON form: dense array of decimal coefficient strings indexed by exponent.
impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.coefficients().iter().map(|c| c.to_string()).collect();
        strings.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(d)?;
        let coeffs = strings
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(QPoly::from_coeffs(coeffs))
    }
}

/// Gaussian binomial `[a choose b]_q`, zero outside `0 ≤ b ≤ a`.
///
/// Built with `[a,b] = [a-1,b-1] + q^b [a-1,b]`, which needs no division.
pub fn q_binomial(a: usize, b: i64) -> QPoly {
    if b < 0 || b as usize > a {
        return QPoly::zero();
    }
    let b = b as usize;
    let mut row = vec![QPoly::one()];
    for n in 1..=a {
        let mut next = Vec::with_capacity(n + 1);
        for c in 0..=n.min(b) {
            let left = if c > 0 {
                row[c - 1].clone()
            } else {
                QPoly::zero()
            };
            let right = if c < n {
                row[c].shift(c)
            } else {
                QPoly::zero()
            };
            next.push(&left + &right);
        }
        row = next;
    }
    row.swap_remove(b)
}

fn q_binom(a: usize, b: usize) -> QPoly {
    q_binomial(a, b as i64)
}

/// `Σ_{j=0}^{ℓ-i} q^{j(k-i+1)} [i+j-1 choose j]_q`.
pub fn primed_binomial(ell: usize, i: usize, k: usize) -> Result<QPoly> {
    if i == 0 || i > ell || i > k {
        return Err(out_of_range(
            "i",
            i,
            format!("1 <= i <= min(ell, k) = {}", ell.min(k)),
        ));
    }
    Ok((0..=ell - i)
        .map(|j| q_binom(i + j - 1, j).shift(j * (k - i + 1)))
        .sum())
}

/// `q^i Σ_{j=0}^{n-i} q^{j(j+1)/2} [i+j choose i]_q`.
pub fn double_primed_binomial(n: usize, i: usize) -> Result<QPoly> {
    if i == 0 || i > n {
        return Err(out_of_range("i", i, format!("1 <= i <= n = {n}")));
    }
    Ok(double_primed_unchecked(n, i))
}

fn double_primed_unchecked(n: usize, i: usize) -> QPoly {
    (0..=n - i)
        .map(|j| q_binom(i + j, i).shift(i + j * (j + 1) / 2))
        .sum()
}

/// The `i`-th summand `q^i [k choose i]_q [ℓ choose i]'_{q,k}`.
pub fn rt_summand(ell: usize, k: usize, i: usize) -> Result<QPoly> {
    let primed = primed_binomial(ell, i, k)?;
    Ok((&q_binom(k, i) * &primed).shift(i))
}

/// `1 + Σ_{i=1}^m q^i [k choose i]_q [ℓ choose i]'_{q,k}`.
pub fn rt_rhs(ell: usize, k: usize, m: usize) -> Result<QPoly> {
    if m > ell.min(k) {
        return Err(out_of_range(
            "m",
            m,
            format!("0 <= m <= min(ell, k) = {}", ell.min(k)),
        ));
    }
    let mut total = QPoly::one();
    for i in 1..=m {
        total = &total + &rt_summand(ell, k, i)?;
    }
    Ok(total)
}

/// `1 + Σ_{odd i ≤ m} [n+1 choose i+1]''_q`.
pub fn lg_rhs(n: usize, m: usize) -> Result<QPoly> {
    if m == 0 || m > n {
        return Err(out_of_range("m", m, format!("1 <= m <= n = {n}")));
    }
    Ok(lg_rhs_unchecked(n, m))
}

/// Same sum without the range check; `m = 0` gives 1.
pub(crate) fn lg_rhs_unchecked(n: usize, m: usize) -> QPoly {
    let odd: QPoly = (1..=m.min(n))
        .step_by(2)
        .map(|i| double_primed_unchecked(n, i))
        .sum();
    &QPoly::one() + &odd
}

/// `[k+ℓ choose ℓ]_q`.
pub fn grass_hilb(ell: usize, k: usize) -> QPoly {
    q_binom(k + ell, ell)
}

/// `(1+q)(1+q^2)...(1+q^n)`.
pub fn lg_hilb(n: usize) -> QPoly {
    (1..=n).map(|j| &QPoly::one() + &QPoly::q_pow(j)).product()
}

/// `Σ q^{|λ|}` over a finite family.
pub fn gen_sum<I>(family: I) -> QPoly
where
    I: IntoIterator,
    I::Item: Weighted,
{
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    for x in family {
        *counts.entry(x.weight()).or_default() += 1;
    }
    let mut p = QPoly::zero();
    for (e, c) in counts {
        p.add_term(e, BigInt::from(c));
    }
    p
}
