//! Integer partitions and the bijections between them.
//!
//! A [`Partition`] is stored as its weakly decreasing list of positive
//! parts. Besides the classical operations (conjugation, hook lengths,
//! dominance) this module implements the correspondence between
//! `k`-bounded partitions and `(k+1)`-cores, `k`-conjugation, the vacancy
//! statistic of a partition inside a `k`-wide box, and the two explicit
//! decompositions of box partitions and shifted staircase partitions.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{out_of_range, Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Zero parts are dropped at construction, so two partitions are equal
/// exactly when their nonzero parts agree.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, rejecting sequences that increase anywhere.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing, got {parts:?}"
            )));
        }
        Ok(Self::from_decreasing(parts))
    }

    /// Caller guarantees `parts` is weakly decreasing.
    pub(crate) fn from_decreasing(mut parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The rectangle `(k^ell)`.
    pub fn rectangle(ell: usize, k: usize) -> Self {
        if k == 0 {
            return Self::empty();
        }
        Self::from_decreasing(vec![k; ell])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Largest part, 0 for the empty partition.
    pub fn first(&self) -> usize {
        self.part(0)
    }

    pub fn fits_in_box(&self, ell: usize, k: usize) -> bool {
        self.len() <= ell && self.first() <= k
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// The transpose: column lengths of the Ferrers diagram.
    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.first())
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Self::from_decreasing(parts)
    }

    /// Hook length of every cell, row by row.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(r, &row)| {
                (0..row)
                    .map(|c| (row - c) + (conj.parts[c] - r) - 1)
                    .collect()
            })
            .collect()
    }

    /// True iff no cell has hook length exactly `c`.
    pub fn is_core(&self, c: usize) -> bool {
        self.hook_lengths().iter().flatten().all(|&h| h != c)
    }

    pub fn is_bounded(&self, k: usize) -> bool {
        self.first() <= k
    }

    fn ensure_bounded(&self, k: usize) -> Result<()> {
        if self.is_bounded(k) {
            Ok(())
        } else {
            Err(Error::NotBounded {
                partition: self.clone(),
                k,
            })
        }
    }

    /// Partitions obtained by removing the first row.
    pub fn tail(&self) -> Partition {
        Self {
            parts: self.parts.iter().skip(1).copied().collect(),
        }
    }

    /// `μ/self` is a horizontal strip (at most one box per column).
    pub fn is_horizontal_strip_of(&self, mu: &Partition) -> bool {
        mu.contains(self) && (0..mu.len()).all(|i| i == 0 || mu.part(i) <= self.part(i - 1))
    }

    /// `μ/self` is a vertical strip (at most one box per row).
    pub fn is_vertical_strip_of(&self, mu: &Partition) -> bool {
        mu.contains(self) && (0..mu.len()).all(|i| mu.part(i) - self.part(i) <= 1)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim().parse::<usize>().map_err(|_| {
                Error::InvalidPartition(format!("expected a positive integer, got {:?}", t.trim()))
            })
        })
        .map(|r| match r {
            Ok(0) => Err(Error::InvalidPartition("parts must be positive".into())),
            other => other,
        })
        .collect()
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts, e.g. `"4,3,1,1"`; the empty string is `∅`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_parts(s)?;
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing: {} is followed by {}",
                w[0], w[1]
            )));
        }
        Ok(Self::from_decreasing(parts))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Enumeration order: increasing size, then lexicographically decreasing parts.
pub fn enumeration_order(a: &Partition, b: &Partition) -> Ordering {
    a.size().cmp(&b.size()).then_with(|| b.parts.cmp(&a.parts))
}

/// A strictly decreasing sequence of positive integers.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrictPartition {
    parts: Vec<usize>,
}

impl StrictPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] <= w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "parts must be strictly decreasing and positive, got {parts:?}"
            )));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn first(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Inside the staircase `Δ_n = (n, n-1, ..., 1)`.
    pub fn fits_in_triangle(&self, n: usize) -> bool {
        self.first() <= n
    }

    pub fn to_partition(&self) -> Partition {
        Partition::from_decreasing(self.parts.clone())
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_partition(), f)
    }
}

impl fmt::Debug for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for StrictPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_parts(s)?)
    }
}

/// Anything with a size `|λ|`; used by generating-function sums.
pub trait Weighted {
    fn weight(&self) -> usize;
}

impl Weighted for Partition {
    fn weight(&self) -> usize {
        self.size()
    }
}

impl Weighted for StrictPartition {
    fn weight(&self) -> usize {
        self.size()
    }
}

impl<T: Weighted> Weighted for &T {
    fn weight(&self) -> usize {
        (*self).weight()
    }
}

// ---------------------------------------------------------------------------
// Cores and k-conjugation
// ---------------------------------------------------------------------------

/// The `(k+1)`-core corresponding to a `k`-bounded partition.
///
/// Rows are placed from the bottom up; each row is slid right by the least
/// offset that keeps the partition shape and brings the hook length of its
/// leftmost remaining box (the largest hook in the row) down to `k`. The
/// slid-over cells become the cells of hook length greater than `k + 1`.
pub fn core_from_bounded(lambda: &Partition, k: usize) -> Result<Partition> {
    lambda.ensure_bounded(k)?;
    let n = lambda.len();
    let mut core = vec![0usize; n];
    for r in (0..n).rev() {
        let row = lambda.parts[r];
        let below = &core[r + 1..];
        let mut offset = below.first().map_or(0, |&b| b.saturating_sub(row));
        loop {
            let leg = below.iter().take_while(|&&c| c > offset).count();
            if row + leg <= k {
                break;
            }
            offset += 1;
        }
        core[r] = row + offset;
    }
    Ok(Partition::from_decreasing(core))
}

/// The `k`-bounded partition of a `(k+1)`-core: drop every box whose hook
/// exceeds `k + 1` and left-justify.
///
/// Since a `(k+1)`-core has no hook equal to `k + 1`, this is the same as
/// dropping the boxes with hook at least `k + 1`.
pub fn bounded_from_core(core: &Partition, k: usize) -> Result<Partition> {
    if !core.is_core(k + 1) {
        return Err(Error::NotCore {
            partition: core.clone(),
            c: k + 1,
        });
    }
    let rows: Vec<usize> = core
        .hook_lengths()
        .iter()
        .map(|row| row.iter().filter(|&&h| h <= k).count())
        .collect();
    Partition::new(rows)
}

/// `λ^{ω(k)}`: core, transpose, and back.
pub fn k_conjugate(lambda: &Partition, k: usize) -> Result<Partition> {
    let core = core_from_bounded(lambda, k)?;
    bounded_from_core(&core.conjugate(), k)
}

// ---------------------------------------------------------------------------
// Vacancy and the box decomposition
// ---------------------------------------------------------------------------

/// Largest `i` such that `(k^{ℓ(λ)})/λ` holds an `i × (i-1)` rectangle in
/// its southeast corner; 0 for the empty partition.
pub fn vacancy(lambda: &Partition, k: usize) -> Result<usize> {
    lambda.ensure_bounded(k)?;
    let len = lambda.len();
    // The condition is monotone in i, so stop at the first failure.
    Ok((1..=len)
        .take_while(|&i| i <= k + 1 && lambda.parts[len - i] + i <= k + 1)
        .last()
        .unwrap_or(0))
}

/// A nonempty `i`-vacant partition split into its four pieces: the column
/// `(1^i)`, the rectangle `((k-i+1)^j)`, `dagger ⊆ ((k-i)^i)` and
/// `ddagger ⊆ ((i-1)^j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VacantDecomposition {
    pub i: usize,
    pub j: usize,
    pub dagger: Partition,
    pub ddagger: Partition,
}

pub fn vacant_decompose(lambda: &Partition, k: usize) -> Result<VacantDecomposition> {
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let i = vacancy(lambda, k)?;
    let j = lambda.len() - i;
    let base = k + 1 - i;
    let ddagger = lambda.parts[..j].iter().map(|&p| p - base).collect();
    let dagger = lambda.parts[j..].iter().map(|&p| p - 1).collect();
    Ok(VacantDecomposition {
        i,
        j,
        dagger: Partition::from_decreasing(dagger),
        ddagger: Partition::from_decreasing(ddagger),
    })
}

/// Inverse of [`vacant_decompose`]; accepts any `i ≥ 1`, `j ≥ 0`,
/// `dagger ⊆ ((k-i)^i)` and `ddagger ⊆ ((i-1)^j)`.
pub fn vacant_compose(d: &VacantDecomposition, k: usize) -> Result<Partition> {
    let VacantDecomposition {
        i,
        j,
        dagger,
        ddagger,
    } = d;
    let (i, j) = (*i, *j);
    if i == 0 || i > k {
        return Err(out_of_range("i", i, format!("1 <= i <= k = {k}")));
    }
    if !dagger.fits_in_box(i, k - i) {
        return Err(Error::NotInBox {
            partition: dagger.clone(),
            ell: i,
            k: k - i,
        });
    }
    if !ddagger.fits_in_box(j, i - 1) {
        return Err(Error::NotInBox {
            partition: ddagger.clone(),
            ell: j,
            k: i - 1,
        });
    }
    let base = k + 1 - i;
    let parts = (0..j)
        .map(|r| base + ddagger.part(r))
        .chain((0..i).map(|s| 1 + dagger.part(s)))
        .collect();
    Ok(Partition::from_decreasing(parts))
}

// ---------------------------------------------------------------------------
// Shifted staircase decomposition
// ---------------------------------------------------------------------------

/// A nonempty strict `λ ⊆ Δ_n` split into `i` odd first-row boxes, the
/// staircase `Δ_j`, and `μ ⊆ (i^j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LgDecomposition {
    pub i: usize,
    pub j: usize,
    pub mu: Partition,
}

pub fn lg_decompose(lambda: &StrictPartition, n: usize) -> Result<LgDecomposition> {
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    if !lambda.fits_in_triangle(n) {
        return Err(out_of_range(
            "first part",
            lambda.first(),
            format!("<= n = {n}"),
        ));
    }
    let len = lambda.len();
    let first = lambda.first();
    let j = if (first - len) % 2 == 1 { len } else { len - 1 };
    let i = first - j;
    let mu = (1..=j)
        .map(|r| lambda.parts.get(r).copied().unwrap_or(0) - (j - r))
        .collect();
    Ok(LgDecomposition {
        i,
        j,
        mu: Partition::from_decreasing(mu),
    })
}

pub fn lg_compose(d: &LgDecomposition, n: usize) -> Result<StrictPartition> {
    let LgDecomposition { i, j, mu } = d;
    let (i, j) = (*i, *j);
    if i % 2 == 0 || i > n {
        return Err(out_of_range("i", i, format!("odd with 1 <= i <= n = {n}")));
    }
    if j > n - i {
        return Err(out_of_range("j", j, format!("<= n - i = {}", n - i)));
    }
    if !mu.fits_in_box(j, i) {
        return Err(Error::NotInBox {
            partition: mu.clone(),
            ell: j,
            k: i,
        });
    }
    let parts = std::iter::once(i + j)
        .chain((1..=j).map(|r| mu.part(r - 1) + (j - r)))
        .collect();
    StrictPartition::new(parts)
}

// ---------------------------------------------------------------------------
// Dominance
// ---------------------------------------------------------------------------

/// `λ ⊴ μ` in dominance order; both must have the same size.
pub fn dominance_leq(lambda: &Partition, mu: &Partition) -> Result<bool> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.clone(), mu.clone()));
    }
    Ok(dominates_unchecked(mu, lambda))
}

/// `μ ⊵ λ`, assuming equal sizes.
pub(crate) fn dominates_unchecked(mu: &Partition, lambda: &Partition) -> bool {
    let (mut a, mut b) = (0, 0);
    for idx in 0..lambda.len().max(mu.len()) {
        a += lambda.part(idx);
        b += mu.part(idx);
        if a > b {
            return false;
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

/// Partition families that can be enumerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// All `λ ⊆ (k^ℓ)`.
    InBox { ell: usize, k: usize },
    /// `λ ⊆ (k^ℓ)` with `|λ| = d`.
    InBoxDeg { ell: usize, k: usize, d: usize },
    /// `k`-bounded partitions of `d`.
    Bounded { k: usize, d: usize },
    /// `{λ : λ₁ ≤ m, λ^{ω(k)} ⊆ (k^ℓ)}`.
    CandidateSet { ell: usize, k: usize, m: usize },
    /// Nonempty `i`-vacant `λ ⊆ (k^ℓ)`.
    Vacant { ell: usize, k: usize, i: usize },
}

/// Partitions of `d` with at most `rows` parts, each at most `max`, in
/// lexicographically decreasing order.
fn partitions_bounded(d: usize, rows: usize, max: usize) -> Vec<Partition> {
    fn go(rem: usize, rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition::from_decreasing(cur.clone()));
            return;
        }
        if rows == 0 {
            return;
        }
        for p in (1..=max.min(rem)).rev() {
            // The remaining rows cannot hold more than rows * p.
            if p * rows < rem {
                break;
            }
            cur.push(p);
            go(rem - p, rows - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(d, rows, max, &mut Vec::new(), &mut out);
    out
}

/// All partitions of `d` (unbounded).
pub fn partitions_of(d: usize) -> Vec<Partition> {
    partitions_bounded(d, d, d)
}

pub fn in_box_deg(ell: usize, k: usize, d: usize) -> Vec<Partition> {
    partitions_bounded(d, ell, k)
}

pub fn in_box(ell: usize, k: usize) -> Vec<Partition> {
    (0..=ell * k).flat_map(|d| in_box_deg(ell, k, d)).collect()
}

pub fn bounded_partitions(k: usize, d: usize) -> Vec<Partition> {
    partitions_bounded(d, d, k)
}

/// `P^{ℓ,k,m}`, computed by `k`-conjugating the box partitions.
pub fn candidate_set(ell: usize, k: usize, m: usize) -> Result<Vec<Partition>> {
    if m > k {
        return Err(out_of_range("m", m, format!("<= k = {k}")));
    }
    let mut out = in_box(ell, k)
        .iter()
        .map(|lambda| k_conjugate(lambda, k))
        .filter(|mu| mu.as_ref().map_or(true, |mu| mu.first() <= m))
        .collect::<Result<Vec<_>>>()?;
    out.sort_by(enumeration_order);
    Ok(out)
}

pub fn vacant(ell: usize, k: usize, i: usize) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    for lambda in in_box(ell, k).into_iter().filter(|l| !l.is_empty()) {
        if vacancy(&lambda, k)? == i {
            out.push(lambda);
        }
    }
    Ok(out)
}

/// Every family in deterministic enumeration order.
pub fn enumerate(family: Family) -> Result<Vec<Partition>> {
    match family {
        Family::InBox { ell, k } => Ok(in_box(ell, k)),
        Family::InBoxDeg { ell, k, d } => Ok(in_box_deg(ell, k, d)),
        Family::Bounded { k, d } => Ok(bounded_partitions(k, d)),
        Family::CandidateSet { ell, k, m } => candidate_set(ell, k, m),
        Family::Vacant { ell, k, i } => vacant(ell, k, i),
    }
}

/// All strict `λ ⊆ Δ_n`, by increasing size then decreasing parts.
pub fn strict_in_triangle(n: usize) -> Vec<StrictPartition> {
    let mut out: Vec<StrictPartition> = (0u64..1 << n)
        .map(|mask| {
            let parts = (1..=n)
                .rev()
                .filter(|&p| mask >> (p - 1) & 1 == 1)
                .collect();
            StrictPartition { parts }
        })
        .collect();
    out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| b.parts.cmp(&a.parts)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p("4,3,1,1").conjugate(), p("4,2,2,1"));
        assert_eq!(
            Partition::rectangle(3, 5).conjugate(),
            Partition::rectangle(5, 3)
        );
    }

    #[test]
    fn hook_length_examples() {
        assert_eq!(
            p("4,3,1,1").hook_lengths(),
            vec![vec![7, 4, 3, 1], vec![5, 2, 1], vec![2], vec![1]]
        );
        assert_eq!(p("1").hook_lengths(), vec![vec![1]]);
        assert_eq!(p("2,1").hook_lengths(), vec![vec![3, 1], vec![1]]);
    }

    #[test]
    fn core_membership() {
        let lam = p("4,3,1,1");
        assert!(lam.is_core(6));
        assert!(lam.is_core(8));
        assert!(!lam.is_core(4));
        assert!(!lam.is_core(5));
        assert!(!lam.is_core(7));
        assert!(Partition::empty().is_core(2));
    }

    #[test]
    fn core_bijection_examples() {
        assert_eq!(core_from_bounded(&p("4,3,1,1"), 4).unwrap(), p("8,4,1,1"));
        assert_eq!(core_from_bounded(&p("1,1,1"), 2).unwrap(), p("2,1,1"));
        assert_eq!(core_from_bounded(&p("2,1"), 3).unwrap(), p("2,1"));
        assert_eq!(bounded_from_core(&p("8,4,1,1"), 4).unwrap(), p("4,3,1,1"));
        assert_eq!(bounded_from_core(&p("2,1,1"), 2).unwrap(), p("1,1,1"));
        assert_eq!(bounded_from_core(&p("2,1"), 3).unwrap(), p("2,1"));
    }

    #[test]
    fn core_bijection_errors() {
        assert!(matches!(
            core_from_bounded(&p("5"), 4),
            Err(Error::NotBounded { .. })
        ));
        assert!(matches!(
            bounded_from_core(&p("4,3,1,1"), 4),
            Err(Error::NotCore { .. })
        ));
    }

    #[test]
    fn k_conjugate_examples() {
        assert_eq!(k_conjugate(&p("4,3,1,1"), 4).unwrap(), p("2,1,1,1,1,1,1,1"));
        for k in 1..5 {
            assert_eq!(k_conjugate(&p("1"), k).unwrap(), p("1"));
        }
        assert_eq!(k_conjugate(&p("2,1"), 2).unwrap(), p("1,1,1"));
        assert!(k_conjugate(&p("3"), 2).is_err());
    }

    #[test]
    fn vacancy_examples() {
        assert_eq!(vacancy(&p("4,4,3,3,1"), 5).unwrap(), 3);
        assert_eq!(vacancy(&p("1"), 1).unwrap(), 1);
        assert_eq!(vacancy(&p("1"), 7).unwrap(), 1);
        assert_eq!(vacancy(&p("3,3,3"), 3).unwrap(), 1);
        assert_eq!(vacancy(&p("1,1,1"), 3).unwrap(), 3);
        assert_eq!(vacancy(&Partition::empty(), 3).unwrap(), 0);
        assert!(vacancy(&p("4"), 3).is_err());
    }

    #[test]
    fn vacant_decomposition_examples() {
        let d = vacant_decompose(&p("4,4,3,3,1"), 5).unwrap();
        assert_eq!(
            d,
            VacantDecomposition {
                i: 3,
                j: 2,
                dagger: p("2,2"),
                ddagger: p("1,1")
            }
        );
        assert_eq!(vacant_compose(&d, 5).unwrap(), p("4,4,3,3,1"));

        let d = vacant_decompose(&p("1"), 4).unwrap();
        assert_eq!(
            d,
            VacantDecomposition {
                i: 1,
                j: 0,
                dagger: Partition::empty(),
                ddagger: Partition::empty()
            }
        );

        let single = VacantDecomposition {
            i: 1,
            j: 0,
            dagger: p("4"),
            ddagger: Partition::empty(),
        };
        assert_eq!(vacant_compose(&single, 5).unwrap(), p("5"));

        assert_eq!(
            vacant_decompose(&Partition::empty(), 3),
            Err(Error::EmptyPartition)
        );
        let bad = VacantDecomposition {
            i: 2,
            j: 1,
            dagger: p("3"),
            ddagger: Partition::empty(),
        };
        assert!(vacant_compose(&bad, 4).is_err());
    }

    #[test]
    fn lg_decomposition_examples() {
        let s = |v: Vec<usize>| StrictPartition::new(v).unwrap();
        assert_eq!(
            lg_decompose(&s(vec![7, 5, 4, 3, 1]), 7).unwrap(),
            LgDecomposition {
                i: 3,
                j: 4,
                mu: p("2,2,2,1")
            }
        );
        assert_eq!(
            lg_decompose(&s(vec![6, 5, 4, 3, 1]), 6).unwrap(),
            LgDecomposition {
                i: 1,
                j: 5,
                mu: p("1,1,1")
            }
        );
        assert_eq!(
            lg_decompose(&s(vec![1]), 1).unwrap(),
            LgDecomposition {
                i: 1,
                j: 0,
                mu: Partition::empty()
            }
        );
        assert!(lg_decompose(&s(vec![5]), 4).is_err());
        assert_eq!(
            lg_decompose(&StrictPartition::default(), 3),
            Err(Error::EmptyPartition)
        );
        assert!(StrictPartition::new(vec![3, 3]).is_err());
        let even = LgDecomposition {
            i: 2,
            j: 0,
            mu: Partition::empty(),
        };
        assert!(lg_compose(&even, 4).is_err());
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&p("2,1"), &p("3")).unwrap());
        assert!(!dominance_leq(&p("3,1,1,1"), &p("2,2,2")).unwrap());
        assert!(!dominance_leq(&p("2,2,2"), &p("3,1,1,1")).unwrap());
        assert!(dominance_leq(&p("3,2"), &p("3,2")).unwrap());
        assert!(dominance_leq(&p("3"), &p("2")).is_err());
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(in_box(3, 3).len(), 20);
        let cand = candidate_set(3, 3, 1).unwrap();
        let expected: Vec<Partition> = (0..=9)
            .map(|n| Partition::from_decreasing(vec![1; n]))
            .collect();
        assert_eq!(cand, expected);
        let strict: Vec<String> = strict_in_triangle(2)
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(strict, vec!["", "1", "2", "2,1"]);
        assert!(candidate_set(3, 3, 4).is_err());
    }

    #[test]
    fn enumeration_order_is_size_then_lex_decreasing() {
        let got: Vec<String> = in_box(2, 2).iter().map(|l| l.to_string()).collect();
        assert_eq!(got, vec!["", "1", "2", "1,1", "2,1", "2,2"]);
        let four: Vec<String> = partitions_of(4).iter().map(|l| l.to_string()).collect();
        assert_eq!(four, vec!["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
    }

    #[test]
    fn parsing() {
        assert_eq!(p(""), Partition::empty());
        assert_eq!(p(" 4, 3,1 "), Partition::new(vec![4, 3, 1]).unwrap());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("1,0".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), p("2,1"));
        assert_eq!(p("4,3,1,1").to_string(), "4,3,1,1");
    }
}
