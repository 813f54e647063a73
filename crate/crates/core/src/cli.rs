//! Command-line front end.
//!
//! Results go to the output stream exactly as serialized; progress and
//! diagnostics go to the error stream. Exit status is 0 on success, 1 when
//! a verification case failed, and 2 on usage or validation errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::grassmann::{h_basis_report, kschur_basis_report, subalgebra_hilbert, BasisReport};
use crate::harness::{sweep, Report, SweepConfig};
use crate::kschur::k_schur;
use crate::lagrangian::lg_subalgebra_hilbert;
use crate::partition::{core_from_bounded, k_conjugate, vacancy, Partition};
use crate::qseries::{lg_rhs, rt_rhs, QPoly};
use crate::schur::SymVector;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Md,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "grassfilt",
    version,
    about = "Filtered cohomology of Grassmannians: Hilbert series, k-Schur functions and identity checks"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hilbert series of a subalgebra generated in degrees <= m.
    #[command(subcommand)]
    Hilb(HilbCommand),
    /// Closed-form right-hand sides.
    #[command(subcommand)]
    Formula(FormulaCommand),
    /// k-conjugate of a k-bounded partition.
    Kconj {
        #[arg(long)]
        k: usize,
        partition: Partition,
    },
    /// (k+1)-core of a k-bounded partition.
    Core {
        #[arg(long)]
        k: usize,
        partition: Partition,
    },
    /// Vacancy of a partition inside the ell x k box.
    Vacancy {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        k: usize,
        partition: Partition,
    },
    /// Schur expansion of a k-Schur function at t = 1.
    Kschur {
        #[arg(long)]
        k: usize,
        partition: Partition,
    },
    /// Candidate-basis report for one (ell, k, m).
    Basis {
        kind: BasisKind,
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
    },
    /// Run identity and conjecture checks over parameter grids.
    Verify(VerifyArgs),
}

#[derive(Debug, Subcommand)]
pub enum HilbCommand {
    /// Subalgebra of H*(Gr(ell, ell+k)) generated by h_1..h_m.
    Grass {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
    },
    /// Subalgebra of H*(LG(n, 2n)) generated by e_1..e_m.
    Lg {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum FormulaCommand {
    /// 1 + sum_{i<=m} q^i [k choose i] [ell choose i]'.
    Rt {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
    },
    /// 1 + sum over odd i <= m of [n+1 choose i+1]''.
    Lg {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisKind {
    H,
    Kschur,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyTarget {
    Summand,
    Rt,
    HBasis,
    KschurBasis,
    Lg,
    Identities,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub target: VerifyTarget,
    /// Run ell, k in 1..=P and n in 1..=P (0..=P for the product identity).
    #[arg(long, value_name = "P")]
    pub max: Option<usize>,
    #[arg(long)]
    pub ell: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Worker threads (default: available parallelism).
    #[arg(long, value_name = "J")]
    pub jobs: Option<usize>,
    /// Do not stop at a failed theorem case.
    #[arg(long)]
    pub keep_going: bool,
    /// JSON sweep configuration; replaces the target's grids.
    #[arg(long, value_name = "PATH")]
    pub config: Option<PathBuf>,
}

// Default grid sizes when --max is absent.
const MAX_PAIRS: usize = 6;
const MAX_BASIS: usize = 4;
const MAX_LG: usize = 8;
const MAX_LG_PRODUCT: usize = 30;

impl VerifyArgs {
    fn pairs(&self, default_max: usize) -> Vec<[usize; 2]> {
        let p = self.max.unwrap_or(default_max);
        let ells: Vec<usize> = self.ell.map_or_else(|| (1..=p).collect(), |l| vec![l]);
        let ks: Vec<usize> = self.k.map_or_else(|| (1..=p).collect(), |k| vec![k]);
        ells.iter()
            .flat_map(|&l| ks.iter().map(move |&k| [l, k]))
            .collect()
    }

    fn ns(&self, default_max: usize, from: usize) -> Vec<usize> {
        self.n.map_or_else(
            || (from..=self.max.unwrap_or(default_max)).collect(),
            |n| vec![n],
        )
    }

    /// The sweep configuration for this invocation.
    pub fn to_config(&self) -> Result<SweepConfig> {
        let mut cfg = match &self.config {
            Some(path) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
                serde_json::from_str(&text)
                    .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?
            }
            None => self.grids(),
        };
        if self.jobs.is_some() {
            cfg.jobs = self.jobs;
        }
        cfg.keep_going |= self.keep_going;
        Ok(cfg)
    }

    fn grids(&self) -> SweepConfig {
        use VerifyTarget as T;
        let t = self.target;
        let identities = matches!(t, T::Identities | T::All);
        let mut cfg = SweepConfig::default();
        if matches!(t, T::Summand) || identities {
            cfg.summand = self.pairs(MAX_PAIRS);
        }
        if identities {
            cfg.vacancy = self.pairs(MAX_PAIRS);
            cfg.decompositions = self
                .pairs(MAX_PAIRS)
                .into_iter()
                .map(|[l, k]| [l, k, self.n.unwrap_or((l + k).saturating_sub(3).max(1))])
                .collect();
            cfg.lg_product = self.ns(MAX_LG_PRODUCT, 0);
        }
        if matches!(t, T::Rt | T::All) {
            cfg.rt = self.pairs(MAX_PAIRS);
        }
        if matches!(t, T::Lg | T::All) {
            cfg.lg = self.ns(MAX_LG, 1);
        }
        if matches!(t, T::HBasis | T::All) {
            cfg.h_basis = self.pairs(MAX_BASIS);
        }
        if matches!(t, T::KschurBasis | T::All) {
            cfg.kschur_basis = self.pairs(MAX_BASIS);
        }
        cfg
    }
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

fn json<T: Serialize>(x: &T) -> String {
    serde_json::to_string(x).expect("serializable output")
}

fn render_poly(p: &QPoly, f: Format) -> String {
    match f {
        Format::Text => {
            let cs: Vec<String> = p.coefficients().iter().map(|c| c.to_string()).collect();
            cs.join(",")
        }
        Format::Md => format!("`{p}`"),
        Format::Json => json(p),
    }
}

fn render_partition(p: &Partition, f: Format) -> String {
    match f {
        Format::Text => p.to_string(),
        Format::Md => format!("`({p})`"),
        Format::Json => json(p),
    }
}

fn render_symvector(v: &SymVector, f: Format) -> String {
    match f {
        Format::Text => v.to_string(),
        Format::Md => format!("`{v}`"),
        Format::Json => json(v),
    }
}

fn render_basis(r: &BasisReport, f: Format) -> String {
    match f {
        Format::Json => json(r),
        Format::Text => {
            let mut s = format!("ell={} k={} m={}: {}\n", r.ell, r.k, r.m, r.verdict);
            for d in &r.degrees {
                s += &format!(
                    "d={} candidates={} rank={} dim={} independent={} spans={} contained={}\n",
                    d.d, d.candidates, d.rank, d.dim, d.independent, d.spans, d.contained
                );
            }
            s.pop();
            s
        }
        Format::Md => {
            let mut s = format!(
                "**ell={}, k={}, m={}**: {}\n\n| d | candidates | rank | dim | independent | spans | contained |\n|---|---|---|---|---|---|---|\n",
                r.ell, r.k, r.m, r.verdict
            );
            for d in &r.degrees {
                s += &format!(
                    "| {} | {} | {} | {} | {} | {} | {} |\n",
                    d.d, d.candidates, d.rank, d.dim, d.independent, d.spans, d.contained
                );
            }
            s.pop();
            s
        }
    }
}

fn render_report(r: &Report, f: Format) -> String {
    let summary = format!(
        "{} passed, {} failed, {} errors",
        r.summary.pass, r.summary.fail, r.summary.error
    );
    match f {
        Format::Json => json(r),
        Format::Text => {
            let mut s = String::new();
            for c in &r.cases {
                s += &format!("{} {}", c.status.to_string().to_uppercase(), c.label());
                if !c.passed() {
                    s += &format!(
                        ": expected {} got {}",
                        render_poly(&c.expected, Format::Text),
                        render_poly(&c.actual, Format::Text)
                    );
                }
                if !c.detail.is_empty() {
                    s += &format!(" [{}]", c.detail);
                }
                s.push('\n');
            }
            s + &summary
        }
        Format::Md => {
            let mut s = String::from(
                "| case | status | expected | actual | detail |\n|---|---|---|---|---|\n",
            );
            for c in &r.cases {
                s += &format!(
                    "| {} | {} | {} | {} | {} |\n",
                    c.label(),
                    c.status,
                    render_poly(&c.expected, Format::Md),
                    render_poly(&c.actual, Format::Md),
                    c.detail.replace('|', "\\|")
                );
            }
            s + "\n" + &summary
        }
    }
}

// ---------------------------------------------------------------------------
// Entry point
// ---------------------------------------------------------------------------

/// Parses `args` (including the program name), runs the command and returns
/// the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    match execute(&cli, err) {
        Ok((text, code)) => {
            let _ = writeln!(out, "{text}");
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(cli: &Cli, err: &mut dyn Write) -> Result<(String, i32)> {
    let f = cli.format;
    let ok = |s: String| Ok((s, EXIT_OK));
    match &cli.command {
        Command::Hilb(HilbCommand::Grass { ell, k, m }) => {
            if *m > (*ell).min(*k) {
                return Err(crate::error::out_of_range(
                    "m",
                    *m,
                    format!("0 <= m <= min(ell, k) = {}", ell.min(k)),
                ));
            }
            ok(render_poly(&subalgebra_hilbert(*ell, *k, *m), f))
        }
        Command::Hilb(HilbCommand::Lg { n, m }) => {
            ok(render_poly(&lg_subalgebra_hilbert(*n, *m)?, f))
        }
        Command::Formula(FormulaCommand::Rt { ell, k, m }) => {
            ok(render_poly(&rt_rhs(*ell, *k, *m)?, f))
        }
        Command::Formula(FormulaCommand::Lg { n, m }) => ok(render_poly(&lg_rhs(*n, *m)?, f)),
        Command::Kconj { k, partition } => ok(render_partition(&k_conjugate(partition, *k)?, f)),
        Command::Core { k, partition } => {
            ok(render_partition(&core_from_bounded(partition, *k)?, f))
        }
        Command::Vacancy { ell, k, partition } => {
            if !partition.fits_in_box(*ell, *k) {
                return Err(Error::NotInBox {
                    partition: partition.clone(),
                    ell: *ell,
                    k: *k,
                });
            }
            let v = vacancy(partition, *k)?;
            ok(match f {
                Format::Md => format!("`{v}`"),
                _ => v.to_string(),
            })
        }
        Command::Kschur { k, partition } => ok(render_symvector(&k_schur(partition, *k)?, f)),
        Command::Basis { kind, ell, k, m } => {
            let r = match kind {
                BasisKind::H => h_basis_report(*ell, *k, *m)?,
                BasisKind::Kschur => kschur_basis_report(*ell, *k, *m)?,
            };
            let code = if r.holds() { EXIT_OK } else { EXIT_FAILED };
            Ok((render_basis(&r, f), code))
        }
        Command::Verify(args) => {
            let cfg = args.to_config()?;
            let report = sweep(&cfg)?;
            let _ = writeln!(
                err,
                "{} cases: {} passed, {} failed, {} errors",
                report.cases.len(),
                report.summary.pass,
                report.summary.fail,
                report.summary.error
            );
            if report.aborted {
                let _ = writeln!(
                    err,
                    "stopped at a failed theorem case; rerun with --keep-going to continue"
                );
            }
            for c in report.broken_theorems() {
                let _ = writeln!(err, "theorem case failed: {}", c.label());
            }
            let code = if report.all_passed() {
                EXIT_OK
            } else {
                EXIT_FAILED
            };
            Ok((render_report(&report, f), code))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("grassfilt").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn hilb_grass_json() {
        let (code, out, _) = call(&[
            "hilb", "grass", "--ell", "3", "--k", "3", "--m", "3", "--format", "json",
        ]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), r#"["1","1","2","3","3","3","3","2","1","1"]"#);
    }

    #[test]
    fn partition_commands() {
        assert_eq!(
            call(&["kconj", "--k", "4", "4,3,1,1"]).1.trim(),
            "2,1,1,1,1,1,1,1"
        );
        assert_eq!(call(&["core", "--k", "4", "4,3,1,1"]).1.trim(), "8,4,1,1");
        assert_eq!(
            call(&["vacancy", "--ell", "5", "--k", "5", "4,4,3,3,1"])
                .1
                .trim(),
            "3"
        );
        assert_eq!(
            call(&["kschur", "--k", "2", "2,1"]).1.trim(),
            "s[3] + s[2,1]"
        );
        assert_eq!(call(&["core", "--k", "2", ""]).1.trim(), "");
    }

    #[test]
    fn usage_errors_exit_two() {
        let (code, _, err) = call(&["kconj", "--k", "4", "1,3"]);
        assert_eq!(code, 2);
        assert!(err.contains("decreasing"), "{err}");
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["kconj", "--k", "2", "3"]).0, 2);
        assert_eq!(
            call(&["hilb", "grass", "--ell", "2", "--k", "2", "--m", "3"]).0,
            2
        );
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn verify_small() {
        let (code, out, _) = call(&["verify", "rt", "--max", "2"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.lines().last().unwrap().contains("0 failed"));
        let (code, out, _) = call(&["verify", "lg", "--n", "3", "--format", "json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["summary"]["fail"], 0);
    }

    #[test]
    fn max_and_explicit_overrides() {
        let args = VerifyArgs {
            target: VerifyTarget::All,
            max: Some(2),
            ell: Some(3),
            k: None,
            n: None,
            jobs: None,
            keep_going: false,
            config: None,
        };
        let cfg = args.to_config().unwrap();
        assert_eq!(cfg.rt, vec![[3, 1], [3, 2]]);
        assert_eq!(cfg.lg, vec![1, 2]);
        assert_eq!(cfg.lg_product, vec![0, 1, 2]);
        assert_eq!(cfg.decompositions, vec![[3, 1, 1], [3, 2, 2]]);
    }
}
