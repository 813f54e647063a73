// The quadratic presentation of H*(LG(n, 2n)): normal forms, subalgebra
// Hilbert series and powers of e_1.

use grassfilt::lagrangian::{lg_subalgebra_hilbert, lg_top_power, normal_form, LagMonomial};
use grassfilt::qseries::lg_rhs;

fn main() {
    let n = 3;
    for idx in [vec![1, 1], vec![2, 2], vec![1, 1, 1, 2]] {
        let nf = normal_form(&LagMonomial::new(idx.clone()), n).unwrap();
        let word: Vec<String> = idx.iter().map(|i| format!("e_{i}")).collect();
        println!("{} = {nf}", word.join(" "));
    }
    for m in 1..=n {
        let computed = lg_subalgebra_hilbert(n, m).unwrap();
        let formula = lg_rhs(n, m).unwrap();
        println!(
            "m={m}: {computed} ({})",
            if computed == formula {
                "matches"
            } else {
                "differs"
            }
        );
    }
    for n in 1..=5 {
        let top: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        println!(
            "e_1^{} = {} * e[{}]",
            n * (n + 1) / 2,
            lg_top_power(n),
            top.join(",")
        );
    }
}
