//! Identity and conjecture checks over parameter grids.
//!
//! Every check produces [`Case`]s that compare two q-polynomials. Cases
//! marked `required` are theorems (or proven instances of a conjecture); a
//! failure there is an implementation bug and stops a sweep unless
//! `keep_going` is set. Other cases are conjectural and never stop a sweep.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{out_of_range, Error, Result};
use crate::grassmann::{h_basis_report, kschur_basis_report, subalgebra_hilbert, BasisReport};
use crate::lagrangian::{lg_subalgebra_hilbert, lg_top_power};
use crate::partition::{
    in_box, in_box_deg, k_conjugate, lg_compose, lg_decompose, strict_in_triangle, vacancy, vacant,
    vacant_compose, vacant_decompose, LgDecomposition, Partition, VacantDecomposition,
};
use crate::qseries::{
    gen_sum, grass_hilb, lg_hilb, lg_rhs, lg_rhs_unchecked, rt_rhs, rt_summand, QPoly,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Case {
    pub name: String,
    pub params: BTreeMap<String, u64>,
    pub status: Status,
    pub expected: QPoly,
    pub actual: QPoly,
    pub detail: String,
    /// Theorem or proven instance; not part of the JSON schema.
    #[serde(skip)]
    pub required: bool,
}

impl Case {
    fn compare(name: &str, params: &[(&str, usize)], expected: QPoly, actual: QPoly) -> Self {
        let status = if expected == actual {
            Status::Pass
        } else {
            Status::Fail
        };
        Self {
            name: name.to_string(),
            params: params
                .iter()
                .map(|(k, v)| (k.to_string(), *v as u64))
                .collect(),
            status,
            expected,
            actual,
            detail: String::new(),
            required: false,
        }
    }

    fn error(name: &str, params: &[(&str, usize)], err: &Error) -> Self {
        Self {
            status: Status::Error,
            detail: err.to_string(),
            ..Self::compare(name, params, QPoly::zero(), QPoly::zero())
        }
    }

    fn required(mut self) -> Self {
        self.required = true;
        self
    }

    fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// A required case that did not pass.
    pub fn is_broken_theorem(&self) -> bool {
        self.required && !self.passed()
    }

    /// `name(k=v, ...)`.
    pub fn label(&self) -> String {
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        format!("{}({})", self.name, params.join(", "))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub error: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub cases: Vec<Case>,
    pub summary: Summary,
    /// Set when a required case failed and the sweep stopped early.
    #[serde(skip)]
    pub aborted: bool,
}

impl Report {
    pub fn new(cases: Vec<Case>) -> Self {
        let mut summary = Summary::default();
        for c in &cases {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Error => summary.error += 1,
            }
        }
        Self {
            cases,
            summary,
            aborted: false,
        }
    }

    /// No failed or errored case.
    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0 && self.summary.error == 0
    }

    pub fn broken_theorems(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| c.is_broken_theorem())
    }
}

fn params3(
    a: (&'static str, usize),
    b: (&'static str, usize),
    c: (&'static str, usize),
) -> [(&'static str, usize); 3] {
    [a, b, c]
}

// ---------------------------------------------------------------------------
// Individual checks
// ---------------------------------------------------------------------------

/// `λ` with `λ₁ = i`, `|λ| ≤ ℓk` and `λ^{ω(k)} ⊆ (k^ℓ)`, enumerated directly.
fn first_part_family(ell: usize, k: usize, i: usize) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    for d in i..=ell * k {
        for lambda in in_box_deg(d, i, d) {
            if lambda.first() == i && k_conjugate(&lambda, k)?.fits_in_box(ell, k) {
                out.push(lambda);
            }
        }
    }
    Ok(out)
}

/// The summand identity: formula, `i`-vacant partitions of the box, and
/// partitions with first part `i` whose `k`-conjugate fits in the box.
pub fn check_summand_identity(ell: usize, k: usize, i: usize) -> Result<Case> {
    if i == 0 || i > ell.min(k) {
        return Err(out_of_range(
            "i",
            i,
            format!("1 <= i <= min(ell, k) = {}", ell.min(k)),
        ));
    }
    let params = params3(("ell", ell), ("k", k), ("i", i));
    let formula = rt_summand(ell, k, i)?;
    let vacant_side = gen_sum(vacant(ell, k, i)?);
    let first_side = gen_sum(first_part_family(ell, k, i)?);
    let case = if vacant_side != formula {
        Case::compare("summand", &params, formula, vacant_side)
            .with_detail("i-vacant generating function differs from the formula")
    } else {
        Case::compare("summand", &params, formula, first_side.clone()).with_detail(
            if first_side == vacant_side {
                ""
            } else {
                "first-part generating function differs from the formula"
            },
        )
    };
    Ok(case.required())
}

/// For nonempty `λ ⊆ (k^ℓ)`: `λ` is `i`-vacant iff `λ^{ω(k)}` has first part `i`.
pub fn check_vacancy_first_part(ell: usize, k: usize) -> Result<Case> {
    let params = [("ell", ell), ("k", k)];
    let domain: Vec<Partition> = in_box(ell, k)
        .into_iter()
        .filter(|l| !l.is_empty())
        .collect();
    let mut agree = Vec::new();
    let mut first_bad = None;
    for lambda in &domain {
        let v = vacancy(lambda, k)?;
        let f = k_conjugate(lambda, k)?.first();
        if v == f {
            agree.push(lambda);
        } else if first_bad.is_none() {
            first_bad = Some(format!(
                "({lambda}): vacancy {v}, k-conjugate first part {f}"
            ));
        }
    }
    let case = Case::compare(
        "vacancy_first_part",
        &params,
        gen_sum(&domain),
        gen_sum(agree),
    );
    Ok(case.with_detail(first_bad.unwrap_or_default()).required())
}

/// Round trips of both box decompositions.
///
/// Every admissible piece tuple is composed, decomposed again and compared;
/// the generating function of the tuples that survive must equal that of
/// the domain (nonempty `λ ⊆ (k^ℓ)` plus nonempty strict `λ ⊆ Δ_n`). Every
/// domain element must also survive decompose-then-compose.
pub fn check_decompositions(ell: usize, k: usize, n: usize) -> Result<Case> {
    if ell == 0 || k == 0 {
        return Err(out_of_range("ell, k", ell.min(k), ">= 1"));
    }
    let params = params3(("ell", ell), ("k", k), ("n", n));
    let mut problems: Vec<String> = Vec::new();

    let boxed: Vec<Partition> = in_box(ell, k)
        .into_iter()
        .filter(|l| !l.is_empty())
        .collect();
    let mut survivors = Vec::new();
    let mut seen = BTreeSet::new();
    for i in 1..=ell.min(k) {
        for j in 0..=ell - i {
            for dagger in in_box(i, k - i) {
                for ddagger in in_box(j, i - 1) {
                    let t = VacantDecomposition {
                        i,
                        j,
                        dagger: dagger.clone(),
                        ddagger,
                    };
                    let lambda = vacant_compose(&t, k)?;
                    let back = vacant_decompose(&lambda, k)?;
                    if back == t && lambda.fits_in_box(ell, k) && seen.insert(lambda.clone()) {
                        survivors.push(lambda.size());
                    } else {
                        problems.push(format!("vacant tuple {t:?} -> ({lambda}) -> {back:?}"));
                    }
                }
            }
        }
    }
    for lambda in &boxed {
        let d = vacant_decompose(lambda, k)?;
        if vacant_compose(&d, k)? != *lambda {
            problems.push(format!("({lambda}) does not survive decompose-compose"));
        }
    }

    let strict: Vec<_> = strict_in_triangle(n)
        .into_iter()
        .filter(|l| !l.is_empty())
        .collect();
    let mut seen = BTreeSet::new();
    for i in (1..=n).step_by(2) {
        for j in 0..=n - i {
            for mu in in_box(j, i) {
                let t = LgDecomposition { i, j, mu };
                let lambda = lg_compose(&t, n)?;
                let back = lg_decompose(&lambda, n)?;
                if back == t && seen.insert(lambda.parts().to_vec()) {
                    survivors.push(lambda.size());
                } else {
                    problems.push(format!("staircase tuple {t:?} -> {lambda:?} -> {back:?}"));
                }
            }
        }
    }
    for lambda in &strict {
        let d = lg_decompose(lambda, n)?;
        if lg_compose(&d, n)? != *lambda {
            problems.push(format!("{lambda:?} does not survive decompose-compose"));
        }
    }

    let expected = &gen_sum(&boxed) + &gen_sum(&strict);
    let mut actual = QPoly::zero();
    for s in survivors {
        actual = &actual + &QPoly::q_pow(s);
    }
    let mut case = Case::compare("decompositions", &params, expected, actual);
    if let Some(first) = problems.first() {
        case.status = Status::Fail;
        case.detail = format!("{} problem(s); first: {first}", problems.len());
    }
    Ok(case.required())
}

/// `(1+q)...(1+q^n)` against the full odd sum.
pub fn check_lg_product(n: usize) -> Case {
    Case::compare(
        "lg_product",
        &[("n", n)],
        lg_hilb(n),
        lg_rhs_unchecked(n, n),
    )
    .required()
}

/// Subalgebra Hilbert series against the conjectured formula for every
/// `m = 0..=min(ℓ,k)`; `m ∈ {0, 1, min}` are required.
pub fn check_rt(ell: usize, k: usize) -> Result<Vec<Case>> {
    if ell == 0 || k == 0 {
        return Err(out_of_range("ell, k", ell.min(k), ">= 1"));
    }
    let top = ell.min(k);
    let mut out = Vec::with_capacity(top + 1);
    for m in 0..=top {
        let params = params3(("ell", ell), ("k", k), ("m", m));
        let case = Case::compare(
            "rt",
            &params,
            rt_rhs(ell, k, m)?,
            subalgebra_hilbert(ell, k, m),
        );
        out.push(if m <= 1 || m == top {
            case.required()
        } else {
            case
        });
    }
    Ok(out)
}

/// Lagrangian subalgebra series against the conjectured formula for
/// `m = 1..=n`, the even-`m` stabilization, and nonvanishing of the top
/// power of `e_1`.
pub fn check_lg(n: usize) -> Result<Vec<Case>> {
    if n == 0 {
        return Err(out_of_range("n", n, ">= 1"));
    }
    let series: Vec<QPoly> = (1..=n)
        .map(|m| lg_subalgebra_hilbert(n, m))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for m in 1..=n {
        let case = Case::compare(
            "lg",
            &[("n", n), ("m", m)],
            lg_rhs(n, m)?,
            series[m - 1].clone(),
        );
        out.push(if m == 1 || m == n {
            case.required()
        } else {
            case
        });
    }
    for m in (2..=n).step_by(2) {
        let case = Case::compare(
            "lg_stabilization",
            &[("n", n), ("m", m)],
            series[m - 2].clone(),
            series[m - 1].clone(),
        );
        out.push(case.required());
    }
    let top = lg_top_power(n);
    let mut case = Case::compare(
        "lg_top_power",
        &[("n", n)],
        QPoly::monomial(top.clone(), 0),
        QPoly::monomial(top.clone(), 0),
    );
    if top == 0.into() {
        case.status = Status::Fail;
        case.detail = "top power of e_1 vanishes".to_string();
    } else {
        case.detail = format!("coefficient {top}");
    }
    out.push(case.required());
    Ok(out)
}

fn basis_cases(
    name: &str,
    ell: usize,
    k: usize,
    f: fn(usize, usize, usize) -> Result<BasisReport>,
) -> Result<Vec<Case>> {
    if ell == 0 || k == 0 {
        return Err(out_of_range("ell, k", ell.min(k), ">= 1"));
    }
    let mut out = Vec::new();
    for m in 1..=ell.min(k) {
        let r = f(ell, k, m)?;
        let params = params3(("ell", ell), ("k", k), ("m", m));
        let mut case = Case::compare(name, &params, r.dim_series(), r.rank_series());
        if !r.holds() {
            case.status = Status::Fail;
            let bad: Vec<String> = r
                .degrees
                .iter()
                .filter(|d| !d.holds())
                .map(|d| {
                    format!(
                        "d={} (independent={}, spans={}, contained={})",
                        d.d, d.independent, d.spans, d.contained
                    )
                })
                .collect();
            case.detail = bad.join("; ");
        }
        out.push(case);
    }
    Ok(out)
}

/// `{h_λ : λ ∈ P^{ℓ,k,m}}` is a basis of `R^{ℓ,k,m}`, for each `m`.
pub fn check_h_basis(ell: usize, k: usize) -> Result<Vec<Case>> {
    basis_cases("h_basis", ell, k, h_basis_report)
}

/// `{s^{(λ₁)}_λ : λ ∈ P^{ℓ,k,m}}` is a basis of `R^{ℓ,k,m}`, for each `m`.
pub fn check_kschur_basis(ell: usize, k: usize) -> Result<Vec<Case>> {
    basis_cases("kschur_basis", ell, k, kschur_basis_report)
}

/// Dimension check for the whole ring: `R^{ℓ,k,k}` against `[k+ℓ choose ℓ]_q`.
pub fn check_full_ring(ell: usize, k: usize) -> Case {
    let params = [("ell", ell), ("k", k)];
    Case::compare(
        "full_ring",
        &params,
        grass_hilb(ell, k),
        subalgebra_hilbert(ell, k, ell.min(k)),
    )
    .required()
}

// ---------------------------------------------------------------------------
// Sweeps
// ---------------------------------------------------------------------------

/// Grids for each check family. Pairs are `[ell, k]`, triples `[ell, k, n]`.
/// Missing lists are empty.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SweepConfig {
    pub summand: Vec<[usize; 2]>,
    pub vacancy: Vec<[usize; 2]>,
    pub decompositions: Vec<[usize; 3]>,
    pub lg_product: Vec<usize>,
    pub rt: Vec<[usize; 2]>,
    pub lg: Vec<usize>,
    pub h_basis: Vec<[usize; 2]>,
    pub kschur_basis: Vec<[usize; 2]>,
    /// Worker threads; `None` uses the available parallelism.
    pub jobs: Option<usize>,
    /// Continue past failed required cases.
    pub keep_going: bool,
}

fn grid(max_ell: usize, max_k: usize) -> Vec<[usize; 2]> {
    (1..=max_ell)
        .flat_map(|l| (1..=max_k).map(move |k| [l, k]))
        .collect()
}

impl SweepConfig {
    /// `ℓ,k ≤ 6`; basis checks `ℓ,k ≤ 4`; Lagrangian `n ≤ 8`;
    /// `lg_product` for `n ≤ 30`; decompositions for `ℓ,k ≤ 6` with
    /// `n = max(1, ℓ+k-3)`, so `n` runs through `1..=9`.
    pub fn standard() -> Self {
        Self {
            summand: grid(6, 6),
            vacancy: grid(6, 6),
            decompositions: grid(6, 6)
                .into_iter()
                .map(|[l, k]| [l, k, (l + k).saturating_sub(3).max(1)])
                .collect(),
            lg_product: (0..=30).collect(),
            rt: grid(6, 6),
            lg: (1..=8).collect(),
            h_basis: grid(4, 4),
            kschur_basis: grid(4, 4),
            jobs: None,
            keep_going: false,
        }
    }

    /// Only the theorem families, on the standard grids.
    pub fn identities() -> Self {
        let s = Self::standard();
        Self {
            summand: s.summand,
            vacancy: s.vacancy,
            decompositions: s.decompositions,
            lg_product: s.lg_product,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.jobs == Some(0) {
            return Err(Error::Config("jobs must be at least 1".into()));
        }
        let pairs = [
            ("summand", &self.summand),
            ("vacancy", &self.vacancy),
            ("rt", &self.rt),
            ("h_basis", &self.h_basis),
            ("kschur_basis", &self.kschur_basis),
        ];
        for (name, list) in pairs {
            if let Some([l, k]) = list.iter().find(|[l, k]| *l == 0 || *k == 0) {
                return Err(Error::Config(format!(
                    "{name}: [{l}, {k}] needs ell, k >= 1"
                )));
            }
        }
        if let Some([l, k, n]) = self
            .decompositions
            .iter()
            .find(|[l, k, _]| *l == 0 || *k == 0)
        {
            return Err(Error::Config(format!(
                "decompositions: [{l}, {k}, {n}] needs ell, k >= 1"
            )));
        }
        if self.lg.contains(&0) {
            return Err(Error::Config("lg: n must be at least 1".into()));
        }
        Ok(())
    }

    fn tasks(&self) -> Vec<Task> {
        let mut t = Vec::new();
        t.extend(self.summand.iter().map(|&[l, k]| Task::Summand(l, k)));
        t.extend(self.vacancy.iter().map(|&[l, k]| Task::Vacancy(l, k)));
        t.extend(
            self.decompositions
                .iter()
                .map(|&[l, k, n]| Task::Decompositions(l, k, n)),
        );
        t.extend(self.lg_product.iter().map(|&n| Task::LgProduct(n)));
        t.extend(self.rt.iter().map(|&[l, k]| Task::Rt(l, k)));
        t.extend(self.lg.iter().map(|&n| Task::Lg(n)));
        t.extend(self.h_basis.iter().map(|&[l, k]| Task::HBasis(l, k)));
        t.extend(
            self.kschur_basis
                .iter()
                .map(|&[l, k]| Task::KSchurBasis(l, k)),
        );
        t
    }
}

#[derive(Clone, Copy, Debug)]
enum Task {
    Summand(usize, usize),
    Vacancy(usize, usize),
    Decompositions(usize, usize, usize),
    LgProduct(usize),
    Rt(usize, usize),
    Lg(usize),
    HBasis(usize, usize),
    KSchurBasis(usize, usize),
}

impl Task {
    fn run(self) -> Vec<Case> {
        let one = |r: Result<Case>, name: &str, params: &[(&str, usize)]| {
            vec![r.unwrap_or_else(|e| Case::error(name, params, &e).required())]
        };
        let many = |r: Result<Vec<Case>>, name: &str, params: &[(&str, usize)]| {
            r.unwrap_or_else(|e| vec![Case::error(name, params, &e).required()])
        };
        match self {
            Task::Summand(l, k) => (1..=l.min(k))
                .flat_map(|i| {
                    one(
                        check_summand_identity(l, k, i),
                        "summand",
                        &params3(("ell", l), ("k", k), ("i", i)),
                    )
                })
                .collect(),
            Task::Vacancy(l, k) => one(
                check_vacancy_first_part(l, k),
                "vacancy_first_part",
                &[("ell", l), ("k", k)],
            ),
            Task::Decompositions(l, k, n) => one(
                check_decompositions(l, k, n),
                "decompositions",
                &params3(("ell", l), ("k", k), ("n", n)),
            ),
            Task::LgProduct(n) => vec![check_lg_product(n)],
            Task::Rt(l, k) => many(check_rt(l, k), "rt", &[("ell", l), ("k", k)]),
            Task::Lg(n) => many(check_lg(n), "lg", &[("n", n)]),
            Task::HBasis(l, k) => many(check_h_basis(l, k), "h_basis", &[("ell", l), ("k", k)]),
            Task::KSchurBasis(l, k) => many(
                check_kschur_basis(l, k),
                "kschur_basis",
                &[("ell", l), ("k", k)],
            ),
        }
    }
}

/// Runs every check in `config` and merges the cases in family order, then
/// in grid order, independent of scheduling.
///
/// Unless `keep_going` is set, the report ends with the first task that
/// broke a required case; tasks before it always run to completion.
pub fn sweep(config: &SweepConfig) -> Result<Report> {
    config.validate()?;
    let tasks = config.tasks();
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = config.jobs {
        builder = builder.num_threads(j);
    }
    let pool = builder
        .build()
        .map_err(|e| Error::Config(format!("cannot start worker pool: {e}")))?;

    let stop_at = AtomicUsize::new(usize::MAX);
    let results: Vec<Option<Vec<Case>>> = pool.install(|| {
        tasks
            .par_iter()
            .enumerate()
            .map(|(idx, task)| {
                if idx > stop_at.load(Ordering::Relaxed) {
                    return None;
                }
                let cases = task.run();
                if !config.keep_going && cases.iter().any(Case::is_broken_theorem) {
                    stop_at.fetch_min(idx, Ordering::Relaxed);
                }
                Some(cases)
            })
            .collect()
    });

    let mut cases = Vec::new();
    let mut aborted = false;
    for r in results {
        // Every task up to the first broken one has run.
        let Some(batch) = r else {
            aborted = true;
            break;
        };
        let broken = batch.iter().any(Case::is_broken_theorem);
        cases.extend(batch);
        if broken && !config.keep_going {
            aborted = true;
            break;
        }
    }
    let mut report = Report::new(cases);
    report.aborted = aborted;
    Ok(report)
}
