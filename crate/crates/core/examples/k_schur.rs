// k-Schur functions at t = 1 and the k-Pieri rule.

use grassfilt::kschur::{h_to_kschur, k_schur, weak_pieri_targets};
use grassfilt::Partition;

fn main() {
    let k = 2;
    for s in ["1,1", "2,1", "2,2", "2,1,1"] {
        let lambda: Partition = s.parse().unwrap();
        println!("s^({k})[{s}] = {}", k_schur(&lambda, k).unwrap());
    }

    let nu: Partition = "2,1".parse().unwrap();
    let targets = weak_pieri_targets(&nu, 2, 3).unwrap();
    let names: Vec<String> = targets.iter().map(|p| format!("({p})")).collect();
    println!("h_2 s^(3)[2,1] = sum over {}", names.join(" "));

    let h: Partition = "2,2,1".parse().unwrap();
    for (mu, c) in h_to_kschur(&h, 2).unwrap() {
        println!("  h[2,2,1] has {c} * s^(2)[{mu}]");
    }
}
