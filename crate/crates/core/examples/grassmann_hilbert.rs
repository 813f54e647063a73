// Hilbert series of the subalgebras of H*(Gr(ell, ell+k)) generated by
// h_1..h_m, next to the closed form.

use grassfilt::grassmann::{subalgebra_hilbert, top_power_coefficient};
use grassfilt::qseries::rt_rhs;

fn main() {
    let (ell, k) = (3, 4);
    for m in 0..=ell.min(k) {
        let computed = subalgebra_hilbert(ell, k, m);
        let formula = rt_rhs(ell, k, m).unwrap();
        let mark = if computed == formula { "=" } else { "!=" };
        println!("m={m}: {computed}  {mark}  formula");
    }
    println!(
        "coefficient of the point class in h_1^{}: {}",
        ell * k,
        top_power_coefficient(ell, k)
    );
}
