// Pieri rules, complete homogeneous expansions and the involution omega.

use grassfilt::schur::{h_to_schur, omega, pieri_e, pieri_h, Rect};
use grassfilt::{Partition, SymVector};

fn main() {
    let s21 = SymVector::schur("2,1".parse().unwrap());
    println!("h_2 * s[2,1] = {}", pieri_h(2, &s21));
    println!("e_2 * s[2,1] = {}", pieri_e(2, &s21));

    let h: Partition = "2,2,1".parse().unwrap();
    let full = h_to_schur(&h);
    println!("h[2,2,1] = {full}");
    println!("omega(h[2,2,1]) = {}", omega(&full));
    println!("image in the 2x3 box: {}", full.truncate(Rect::new(2, 3)));
}
