// Cores, k-conjugation, vacancy and the two box decompositions.

use grassfilt::partition::{
    core_from_bounded, k_conjugate, lg_decompose, vacancy, vacant_decompose, StrictPartition,
};
use grassfilt::Partition;

fn main() {
    let lambda: Partition = "4,3,1,1".parse().unwrap();
    let k = 4;
    println!("hooks of ({lambda}): {:?}", lambda.hook_lengths());
    let core = core_from_bounded(&lambda, k).unwrap();
    println!("{}-core: ({core})", k + 1);
    println!("{k}-conjugate: ({})", k_conjugate(&lambda, k).unwrap());

    let mu: Partition = "4,4,3,3,1".parse().unwrap();
    println!("vacancy of ({mu}) for k = 5: {}", vacancy(&mu, 5).unwrap());
    let d = vacant_decompose(&mu, 5).unwrap();
    println!(
        "  i = {}, j = {}, dagger = ({}), ddagger = ({})",
        d.i, d.j, d.dagger, d.ddagger
    );

    let strict: StrictPartition = "7,5,4,3,1".parse().unwrap();
    let d = lg_decompose(&strict, 7).unwrap();
    println!(
        "staircase pieces of {:?}: i = {}, j = {}, mu = ({})",
        strict.parts(),
        d.i,
        d.j,
        d.mu
    );
}
