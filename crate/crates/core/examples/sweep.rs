// A small parallel sweep over every check family.

use grassfilt::harness::{sweep, SweepConfig};

fn main() {
    let config = SweepConfig {
        summand: vec![[3, 3], [2, 4]],
        vacancy: vec![[3, 3]],
        decompositions: vec![[3, 3, 4]],
        lg_product: (0..=5).collect(),
        rt: vec![[3, 3]],
        lg: vec![3],
        h_basis: vec![[2, 3]],
        kschur_basis: vec![[2, 3]],
        jobs: Some(2),
        keep_going: false,
    };
    let report = sweep(&config).unwrap();
    for case in &report.cases {
        println!("{:5} {}", case.status, case.label());
    }
    println!(
        "{} passed, {} failed, {} errors",
        report.summary.pass, report.summary.fail, report.summary.error
    );
}
