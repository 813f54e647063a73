//! The cohomology ring of the Lagrangian Grassmannian `LG(n, 2n)`, computed
//! from its quadratic presentation
//!
//! ```text
//! e_i^2 = Σ_{t=1}^{n-i} 2 (-1)^{t+1} e_{i+t} e_{i-t},   e_0 = 1, e_{<0} = 0
//! ```
//!
//! Rewriting squares with this rule terminates (each step either drops a
//! factor or strictly increases the sum of squared indices, which is
//! bounded) and ends in square-free monomials `e_{i_1} ... e_{i_r}`,
//! `i_1 < ... < i_r ≤ n`. These are as many as the strict partitions inside
//! the staircase, so they form a basis and normal forms do not depend on the
//! order of rewriting.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{out_of_range, Result};
use crate::linalg::{integer_row, Echelon};
use crate::qseries::QPoly;

/// A product of generators `e_i`, stored as a multiset of indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LagMonomial {
    indices: Vec<usize>,
}

impl LagMonomial {
    pub fn new(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        Self { indices }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn degree(&self) -> usize {
        self.indices.iter().sum()
    }
}

/// A square-free index set `{i_1 < ... < i_r}`, i.e. a strict partition
/// read from the bottom.
pub type IndexSet = Vec<usize>;

/// A ring element in the square-free monomial basis.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct LagVector {
    terms: BTreeMap<IndexSet, BigRational>,
}

impl LagVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::basis(Vec::new())
    }

    /// The generator `e_i`.
    pub fn generator(i: usize) -> Self {
        Self::basis(vec![i])
    }

    /// The basis monomial for a square-free set (sorted on entry).
    pub fn basis(mut set: IndexSet) -> Self {
        set.sort_unstable();
        debug_assert!(
            set.windows(2).all(|w| w[0] < w[1]),
            "index set must be square-free"
        );
        let mut v = Self::zero();
        v.add_term(set, BigRational::one());
        v
    }

    pub fn add_term(&mut self, set: IndexSet, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry(set.clone())
            .or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&set);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, set: &[usize]) -> BigRational {
        self.terms
            .get(set)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&IndexSet, &BigRational)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero();
        for (s, x) in &self.terms {
            out.add_term(s.clone(), x * c);
        }
        out
    }

    fn add_assign_scaled(&mut self, other: &LagVector, c: &BigRational) {
        for (s, x) in &other.terms {
            self.add_term(s.clone(), x * c);
        }
    }
}

impl fmt::Display for LagVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (s, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            if !c.is_one() {
                write!(f, "{c}*")?;
            }
            let names: Vec<String> = s.iter().map(|i| i.to_string()).collect();
            write!(f, "e[{}]", names.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for LagVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LagVector({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    set: Vec<usize>,
    coeff: String,
}

/// JSON form: list of `{set: [ints], coeff: "p/q"}`.
impl Serialize for LagVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let reprs: Vec<TermRepr> = self
            .terms
            .iter()
            .map(|(set, c)| TermRepr {
                set: set.clone(),
                coeff: c.to_string(),
            })
            .collect();
        reprs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LagVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let reprs = Vec::<TermRepr>::deserialize(d)?;
        let mut v = LagVector::zero();
        for t in reprs {
            let c: BigRational = t.coeff.parse().map_err(serde::de::Error::custom)?;
            let mut set = t.set;
            set.sort_unstable();
            if set.windows(2).any(|w| w[0] == w[1]) {
                return Err(serde::de::Error::custom("index set is not square-free"));
            }
            v.add_term(set, c);
        }
        Ok(v)
    }
}

/// Which repeated index to rewrite first.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Strategy {
    #[default]
    SmallestRepeated,
    LargestRepeated,
}

/// `R^n_LG` with a memo of normal forms.
///
/// Not shareable across threads; each computation builds its own.
pub struct LagRing {
    n: usize,
    strategy: Strategy,
    // Keyed by multiplicity vector, index 0 unused.
    memo: RefCell<HashMap<Vec<u32>, LagVector>>,
}

impl LagRing {
    pub fn new(n: usize) -> Self {
        Self::with_strategy(n, Strategy::default())
    }

    pub fn with_strategy(n: usize, strategy: Strategy) -> Self {
        Self {
            n,
            strategy,
            memo: RefCell::new(HashMap::new()),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Top degree `n(n+1)/2`.
    pub fn top_degree(&self) -> usize {
        self.n * (self.n + 1) / 2
    }

    fn counts_of(&self, indices: &[usize]) -> Result<Vec<u32>> {
        let mut counts = vec![0u32; self.n + 1];
        for &i in indices {
            if i == 0 || i > self.n {
                return Err(out_of_range(
                    "index",
                    i,
                    format!("1 <= i <= n = {}", self.n),
                ));
            }
            counts[i] += 1;
        }
        Ok(counts)
    }

    pub fn normal_form(&self, mon: &LagMonomial) -> Result<LagVector> {
        let counts = self.counts_of(mon.indices())?;
        Ok(self.reduce(&counts))
    }

    fn reduce(&self, counts: &[u32]) -> LagVector {
        let repeated = (1..=self.n).filter(|&i| counts[i] >= 2);
        let pick = match self.strategy {
            Strategy::SmallestRepeated => repeated.min(),
            Strategy::LargestRepeated => repeated.max(),
        };
        let Some(i) = pick else {
            let set = (1..=self.n).filter(|&i| counts[i] == 1).collect();
            return LagVector::basis(set);
        };
        if let Some(v) = self.memo.borrow().get(counts) {
            return v.clone();
        }
        let mut out = LagVector::zero();
        let two = BigRational::from_integer(BigInt::from(2));
        for t in 1..=(self.n - i).min(i) {
            let mut next = counts.to_vec();
            next[i] -= 2;
            next[i + t] += 1;
            if i > t {
                next[i - t] += 1;
            }
            let c = if t % 2 == 1 {
                two.clone()
            } else {
                -two.clone()
            };
            out.add_assign_scaled(&self.reduce(&next), &c);
        }
        self.memo.borrow_mut().insert(counts.to_vec(), out.clone());
        out
    }

    pub fn multiply(&self, u: &LagVector, v: &LagVector) -> Result<LagVector> {
        let mut out = LagVector::zero();
        for (a, x) in u.terms() {
            for (b, y) in v.terms() {
                let mut idx = a.clone();
                idx.extend_from_slice(b);
                let counts = self.counts_of(&idx)?;
                out.add_assign_scaled(&self.reduce(&counts), &(x * y));
            }
        }
        Ok(out)
    }

    /// Square-free sets of degree `d`, in a fixed order.
    pub fn basis_of_degree(&self, d: usize) -> Vec<IndexSet> {
        (0u64..1 << self.n)
            .map(|mask| {
                (1..=self.n)
                    .filter(|&i| mask >> (i - 1) & 1 == 1)
                    .collect::<Vec<_>>()
            })
            .filter(|s| s.iter().sum::<usize>() == d)
            .collect()
    }
}

/// Normal form with the default strategy.
pub fn normal_form(mon: &LagMonomial, n: usize) -> Result<LagVector> {
    LagRing::new(n).normal_form(mon)
}

pub fn multiply(u: &LagVector, v: &LagVector, n: usize) -> Result<LagVector> {
    LagRing::new(n).multiply(u, v)
}

/// Hilbert series of the subalgebra generated by `e_1, ..., e_m`.
pub fn lg_subalgebra_hilbert(n: usize, m: usize) -> Result<QPoly> {
    if m == 0 || m > n {
        return Err(out_of_range("m", m, format!("1 <= m <= n = {n}")));
    }
    let ring = LagRing::new(n);
    let top = ring.top_degree();
    let mut spanning: Vec<Vec<LagVector>> = vec![vec![LagVector::one()]];
    let mut dims = vec![1usize];
    for d in 1..=top {
        let cols = ring.basis_of_degree(d);
        let index: HashMap<&IndexSet, usize> =
            cols.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let mut ech = Echelon::new(cols.len());
        let mut accepted = Vec::new();
        'gen: for i in 1..=m.min(d) {
            let gen = LagVector::generator(i);
            for v in &spanning[d - i] {
                if ech.is_full() {
                    break 'gen;
                }
                let w = ring.multiply(&gen, v)?;
                let mut row = vec![BigRational::zero(); cols.len()];
                for (s, c) in w.terms() {
                    row[index[s]] = c.clone();
                }
                if ech.insert(integer_row(&row)) {
                    accepted.push(w);
                }
            }
        }
        dims.push(ech.rank());
        spanning.push(accepted);
    }
    Ok(QPoly::from_coeffs(dims.into_iter().map(BigInt::from)))
}

/// Coefficient of `e_1 e_2 ... e_n` in `e_1^{n(n+1)/2}`.
pub fn lg_top_power(n: usize) -> BigInt {
    let ring = LagRing::new(n);
    let e1 = LagVector::generator(1);
    let mut v = LagVector::one();
    for _ in 0..ring.top_degree() {
        v = ring.multiply(&e1, &v).expect("indices in range");
    }
    let c = v.coeff(&(1..=n).collect::<Vec<_>>());
    assert!(c.is_integer());
    c.to_integer()
}
