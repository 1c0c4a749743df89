//! Set partitions by type, and the identity sum_P (chi)_{|P|} = chi^n.

use std::collections::BTreeMap;

use fatdiag::algebra::{falling_factorial, pow};
use fatdiag::combinatorics::{alpha_sequences, count_set_partitions_of_type, set_partitions};
use fatdiag::ExactInt;

fn main() -> fatdiag::Result<()> {
    for p in set_partitions(3)? {
        println!("{p}  type {}", p.alpha());
    }
    println!();
    let n = 6;
    let mut tally: BTreeMap<String, u64> = BTreeMap::new();
    for p in set_partitions(n)? {
        *tally.entry(p.alpha().to_string()).or_default() += 1;
    }
    for alpha in alpha_sequences(n, n) {
        let count = count_set_partitions_of_type(&alpha);
        assert_eq!(count, ExactInt::from(tally[&alpha.to_string()]));
        println!("{alpha:<16} {count}");
    }
    let chi = ExactInt::from(-3);
    let sum: ExactInt = set_partitions(n)?
        .map(|p| falling_factorial(&chi, p.num_blocks()))
        .sum();
    println!(
        "sum over partitions of (-3)_|P| = {sum} = (-3)^{n} = {}",
        pow(&chi, n)
    );
    Ok(())
}
