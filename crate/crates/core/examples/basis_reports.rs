// Candidate bases of the subalgebras: complete homogeneous functions and
// k-Schur functions indexed by the same partitions.

use grassfilt::grassmann::{h_basis_report, kschur_basis_report};
use grassfilt::partition::candidate_set;

fn main() {
    let (ell, k, m) = (3, 3, 2);
    let cands = candidate_set(ell, k, m).unwrap();
    let names: Vec<String> = cands.iter().map(|p| format!("({p})")).collect();
    println!(
        "candidates for ell={ell}, k={k}, m={m}: {}",
        names.join(" ")
    );

    for (name, report) in [
        ("h", h_basis_report(ell, k, m).unwrap()),
        ("k-Schur", kschur_basis_report(ell, k, m).unwrap()),
    ] {
        println!("{name}: {}", report.verdict);
        for d in &report.degrees {
            println!(
                "  d={:2} candidates={} rank={} dim={}",
                d.d, d.candidates, d.rank, d.dim
            );
        }
    }
}
