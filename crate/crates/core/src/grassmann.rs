//! The cohomology ring of the Grassmannian as the quotient of symmetric
//! functions by the Schur functions `s_λ` with `λ ⊄ (k^ℓ)`, its subalgebras
//! generated in low degree, and the candidate-basis reports.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{out_of_range, Error, Result};
use crate::kschur::KSchurTable;
use crate::linalg::{integer_row, Echelon};
use crate::partition::{candidate_set, in_box_deg, Partition};
use crate::qseries::QPoly;
use crate::schur::{h_to_schur_bounded, pieri_h_bounded, Rect, SymVector};

/// Drop every term `s_λ` with `λ ⊄ (k^ℓ)`.
pub fn project(v: &SymVector, ell: usize, k: usize) -> SymVector {
    v.truncate(Rect::new(ell, k))
}

/// One graded piece of a subspace of the quotient, as an echelon basis over
/// the box partitions of that degree (columns in enumeration order).
#[derive(Clone, Debug)]
pub struct DegreeSlice {
    degree: usize,
    columns: Vec<Partition>,
    index: HashMap<Partition, usize>,
    echelon: Echelon,
    // The accepted vectors themselves; they span the slice.
    spanning: Vec<SymVector>,
}

impl DegreeSlice {
    pub fn new(rect: Rect, degree: usize) -> Self {
        let columns = in_box_deg(rect.ell, rect.k, degree);
        let index = columns
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let echelon = Echelon::new(columns.len());
        Self {
            degree,
            columns,
            index,
            echelon,
            spanning: Vec::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The partitions labelling the coordinates.
    pub fn columns(&self) -> &[Partition] {
        &self.columns
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    /// Whether the slice is the whole degree-`d` piece of the quotient.
    pub fn is_full(&self) -> bool {
        self.echelon.is_full()
    }

    pub fn spanning_set(&self) -> &[SymVector] {
        &self.spanning
    }

    /// Reduced row echelon basis, each row as a ring element.
    pub fn basis(&self) -> Vec<SymVector> {
        self.echelon
            .rref()
            .into_iter()
            .map(|row| {
                let mut v = SymVector::zero();
                for (c, x) in self.columns.iter().zip(row) {
                    v.add_term(c.clone(), x);
                }
                v
            })
            .collect()
    }

    /// Coordinates of a homogeneous, already projected vector.
    pub fn coords(&self, v: &SymVector) -> Result<Vec<BigInt>> {
        let mut row = vec![num_rational::BigRational::zero(); self.columns.len()];
        for (lambda, c) in v.terms() {
            if lambda.size() != self.degree {
                return Err(Error::DegreeMismatch {
                    slice: self.degree,
                    vector: lambda.size(),
                });
            }
            let Some(&i) = self.index.get(lambda) else {
                return Err(Error::InvalidPartition(format!(
                    "term s[{lambda}] lies outside the box; project first"
                )));
            };
            row[i] = c.clone();
        }
        Ok(integer_row(&row))
    }

    /// Membership test: `v` reduces to zero against the basis.
    pub fn contains(&self, v: &SymVector) -> Result<bool> {
        Ok(self.echelon.contains(self.coords(v)?))
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: SymVector) -> Result<bool> {
        if self.is_full() {
            return Ok(false);
        }
        let grew = self.echelon.insert(self.coords(&v)?);
        if grew {
            self.spanning.push(v);
        }
        Ok(grew)
    }
}

/// `R^{ℓ,k,m}`: the subalgebra generated by `h_1, ..., h_m`, slice by slice.
#[derive(Clone, Debug)]
pub struct Subalgebra {
    rect: Rect,
    m: usize,
    slices: Vec<DegreeSlice>,
}

impl Subalgebra {
    /// `S_0 = span{1}`, `S_d = span{ h_i · v : 1 ≤ i ≤ min(m, d), v ∈ S_{d-i} }`.
    pub fn build(ell: usize, k: usize, m: usize) -> Self {
        let rect = Rect::new(ell, k);
        let mut slices: Vec<DegreeSlice> = Vec::with_capacity(ell * k + 1);
        let mut unit = DegreeSlice::new(rect, 0);
        unit.insert(SymVector::one())
            .expect("unit lies in degree 0");
        slices.push(unit);
        for d in 1..=ell * k {
            let mut slice = DegreeSlice::new(rect, d);
            'gen: for i in 1..=m.min(d) {
                for v in slices[d - i].spanning_set() {
                    if slice.is_full() {
                        break 'gen;
                    }
                    let w = pieri_h_bounded(i, v, Some(rect));
                    slice
                        .insert(w)
                        .expect("Pieri images are homogeneous and boxed");
                }
            }
            slices.push(slice);
        }
        Self { rect, m, slices }
    }

    pub fn rect(&self) -> Rect {
        self.rect
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn slice(&self, d: usize) -> Option<&DegreeSlice> {
        self.slices.get(d)
    }

    pub fn slices(&self) -> &[DegreeSlice] {
        &self.slices
    }

    pub fn hilbert(&self) -> QPoly {
        QPoly::from_coeffs(self.slices.iter().map(|s| BigInt::from(s.dim())))
    }
}

/// Hilbert series of `R^{ℓ,k,m}`.
pub fn subalgebra_hilbert(ell: usize, k: usize, m: usize) -> QPoly {
    Subalgebra::build(ell, k, m).hilbert()
}

/// Coefficient of `s_{(k^ℓ)}` in the image of `h_1^{kℓ}`.
pub fn top_power_coefficient(ell: usize, k: usize) -> BigInt {
    let rect = Rect::new(ell, k);
    let ones = Partition::new(vec![1; ell * k]).expect("constant sequence");
    let image = h_to_schur_bounded(&ones, Some(rect));
    let c = image.coeff(&Partition::rectangle(ell, k));
    assert!(c.is_integer());
    c.to_integer()
}

/// Per-degree outcome of a candidate-basis check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeReport {
    pub d: usize,
    pub candidates: usize,
    pub rank: usize,
    pub dim: usize,
    pub independent: bool,
    pub spans: bool,
    pub contained: bool,
}

impl DegreeReport {
    pub fn holds(&self) -> bool {
        self.independent && self.spans && self.contained
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisReport {
    pub ell: usize,
    pub k: usize,
    pub m: usize,
    pub degrees: Vec<DegreeReport>,
    /// `"holds"` iff every degree is independent, spanning and contained.
    pub verdict: String,
}

impl BasisReport {
    pub fn holds(&self) -> bool {
        self.degrees.iter().all(DegreeReport::holds)
    }

    /// `Σ_d rank_d q^d`.
    pub fn rank_series(&self) -> QPoly {
        QPoly::from_coeffs(self.degrees.iter().map(|r| BigInt::from(r.rank)))
    }

    /// `Σ_d dim_d q^d`, the Hilbert series of the subalgebra.
    pub fn dim_series(&self) -> QPoly {
        QPoly::from_coeffs(self.degrees.iter().map(|r| BigInt::from(r.dim)))
    }

    /// `Σ_d (#candidates of degree d) q^d`.
    pub fn candidate_series(&self) -> QPoly {
        QPoly::from_coeffs(self.degrees.iter().map(|r| BigInt::from(r.candidates)))
    }
}

fn check_m(ell: usize, k: usize, m: usize) -> Result<()> {
    if m == 0 || m > ell.min(k) {
        return Err(out_of_range(
            "m",
            m,
            format!("1 <= m <= min(ell, k) = {}", ell.min(k)),
        ));
    }
    Ok(())
}

fn basis_report<F>(ell: usize, k: usize, m: usize, image: F) -> Result<BasisReport>
where
    F: Fn(&Partition) -> Result<SymVector>,
{
    check_m(ell, k, m)?;
    let rect = Rect::new(ell, k);
    let sub = Subalgebra::build(ell, k, m);
    let candidates = candidate_set(ell, k, m)?;
    let mut degrees = Vec::with_capacity(ell * k + 1);
    for slice in sub.slices() {
        let d = slice.degree();
        let mut span = DegreeSlice::new(rect, d);
        let mut count = 0;
        let mut contained = true;
        for lambda in candidates.iter().filter(|l| l.size() == d) {
            count += 1;
            let f = image(lambda)?;
            contained &= slice.contains(&f)?;
            span.insert(f)?;
        }
        let mut spans = true;
        for v in slice.spanning_set() {
            spans &= span.contains(v)?;
        }
        degrees.push(DegreeReport {
            d,
            candidates: count,
            rank: span.dim(),
            dim: slice.dim(),
            independent: span.dim() == count,
            spans,
            contained,
        });
    }
    let holds = degrees.iter().all(DegreeReport::holds);
    Ok(BasisReport {
        ell,
        k,
        m,
        degrees,
        verdict: if holds { "holds" } else { "fails" }.to_string(),
    })
}

/// Checks whether `{h_λ : λ ∈ P^{ℓ,k,m}}` is a basis of `R^{ℓ,k,m}`.
pub fn h_basis_report(ell: usize, k: usize, m: usize) -> Result<BasisReport> {
    let rect = Rect::new(ell, k);
    basis_report(ell, k, m, |lambda| {
        Ok(h_to_schur_bounded(lambda, Some(rect)))
    })
}

/// Checks whether `{s^{(λ_1)}_λ : λ ∈ P^{ℓ,k,m}}` is a basis of `R^{ℓ,k,m}`.
pub fn kschur_basis_report(ell: usize, k: usize, m: usize) -> Result<BasisReport> {
    let rect = Rect::new(ell, k);
    let table = KSchurTable::global();
    basis_report(ell, k, m, |lambda| {
        Ok((*table.get_in_box(lambda, lambda.first(), rect)?).clone())
    })
}
