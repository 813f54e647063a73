// Gaussian binomials and the closed-form Hilbert series.

use grassfilt::qseries::{grass_hilb, lg_hilb, lg_rhs, q_binomial, rt_rhs, rt_summand};

fn main() {
    println!("[5 choose 2]_q = {}", q_binomial(5, 2));
    for i in 1..=3 {
        println!(
            "summand i={i} for a 3x3 box: {}",
            rt_summand(3, 3, i).unwrap()
        );
    }
    println!("full 3x3 box:  {}", rt_rhs(3, 3, 3).unwrap());
    println!("[6 choose 3]_q: {}", grass_hilb(3, 3));
    println!("(1+q)(1+q^2)(1+q^3) = {}", lg_hilb(3));
    println!("odd sum up to m=3:  {}", lg_rhs(3, 3).unwrap());
}
