//! Exact row echelon forms over the rationals.
//!
//! Rows are kept as primitive integer vectors (content 1, positive pivot),
//! which avoids per-entry gcds during elimination. The reduced form with unit
//! pivots is produced on demand by [`Echelon::rref`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Scale a rational vector to a primitive integer vector with the same span.
pub fn integer_row(v: &[BigRational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut row: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    make_primitive(&mut row);
    row
}

fn make_primitive(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in row.iter_mut() {
        *x /= &g;
    }
}

/// An echelon basis of a subspace of `Q^ncols`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    ncols: usize,
    // Sorted by pivot column; row i is zero before pivots[i].
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Self {
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.ncols
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after elimination against the basis; zero iff `v`
    /// lies in the span.
    pub fn reduce(&self, mut v: Vec<BigInt>) -> Vec<BigInt> {
        assert_eq!(
            v.len(),
            self.ncols,
            "vector length does not match column count"
        );
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let a = &row[p];
            let b = v[p].clone();
            for (x, y) in v.iter_mut().zip(row).skip(p) {
                if y.is_zero() {
                    if !x.is_zero() {
                        *x *= a;
                    }
                } else {
                    *x = &*x * a - &b * y;
                }
            }
            // Columns before p are untouched by this row but must be scaled too.
            for x in v.iter_mut().take(p) {
                if !x.is_zero() {
                    *x *= a;
                }
            }
            make_primitive(&mut v);
        }
        v
    }

    pub fn contains(&self, v: Vec<BigInt>) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: Vec<BigInt>) -> bool {
        if self.is_full() {
            return false;
        }
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        if r[p].is_negative() {
            for x in r.iter_mut() {
                *x = -&*x;
            }
        }
        make_primitive(&mut r);
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        true
    }

    pub fn insert_rational(&mut self, v: &[BigRational]) -> bool {
        self.insert(integer_row(v))
    }

    /// Reduced row echelon form: unit pivots, pivot columns cleared.
    pub fn rref(&self) -> Vec<Vec<BigRational>> {
        let mut rows: Vec<Vec<BigRational>> = self
            .rows
            .iter()
            .zip(&self.pivots)
            .map(|(row, &p)| {
                let lead = row[p].clone();
                row.iter()
                    .map(|x| BigRational::new(x.clone(), lead.clone()))
                    .collect()
            })
            .collect();
        for i in (0..rows.len()).rev() {
            let p = self.pivots[i];
            for j in 0..i {
                let f = rows[j][p].clone();
                if f.is_zero() {
                    continue;
                }
                let (head, tail) = rows.split_at_mut(i);
                for (x, y) in head[j].iter_mut().zip(&tail[0]) {
                    *x -= &f * y;
                }
            }
        }
        rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rank_and_membership() {
        let mut e = Echelon::new(3);
        assert!(e.insert(v(&[0, 2, 4])));
        assert!(e.insert(v(&[1, 1, 1])));
        assert!(!e.insert(v(&[2, 4, 6])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(v(&[3, 1, -1])));
        assert!(!e.contains(v(&[0, 0, 1])));
        assert!(e.contains(v(&[0, 0, 0])));
        assert!(e.insert(v(&[0, 0, 5])));
        assert!(e.is_full());
        assert!(!e.insert(v(&[1, 2, 3])));
    }

    #[test]
    fn rref_has_unit_pivots() {
        let mut e = Echelon::new(3);
        e.insert(v(&[2, 4, 6]));
        e.insert(v(&[1, 3, 2]));
        let r = e.rref();
        assert_eq!(
            r,
            vec![
                vec![q(1, 1), q(0, 1), q(5, 1)],
                vec![q(0, 1), q(1, 1), q(-1, 1)]
            ]
        );
    }

    #[test]
    fn rational_rows() {
        let mut e = Echelon::new(2);
        assert!(e.insert_rational(&[q(1, 2), q(1, 3)]));
        assert!(e.contains(v(&[3, 2])));
        assert_eq!(integer_row(&[q(1, 2), q(1, 3)]), v(&[3, 2]));
    }
}
