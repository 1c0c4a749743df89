//! Brute-force Euler characteristics that share no code path with the closed
//! formulas in the parent module.

use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::{factorial, falling_factorial, rational_to_int, ExactInt};
use crate::combinatorics::set_partitions;
use crate::error::{Error, Result};
use crate::guard;
use crate::permgroup::conjugacy_classes_sn;

fn check_oracle_range(n: usize, d: usize) -> Result<()> {
    guard::check("oracle degree", n as u128, guard::ORACLE_DEGREE)?;
    if d < 2 || d > n {
        return Err(Error::invalid(format!(
            "fat diagonal needs 2 <= d <= n (got n={n}, d={d})"
        )));
    }
    Ok(())
}

/// `chi(F_d(X,n))` by stratifying `X^n` by coordinate-equality pattern:
/// every set partition of `{1..n}` with a block of size `>= d` contributes
/// `chi(F(X, #blocks)) = (chi)_{#blocks}`.
pub fn oracle_fd_setpartitions(chi: &ExactInt, n: usize, d: usize) -> Result<ExactInt> {
    check_oracle_range(n, d)?;
    let falling: Vec<ExactInt> = (0..=n).map(|k| falling_factorial(chi, k)).collect();
    let mut total = ExactInt::zero();
    for p in set_partitions(n)? {
        if p.block_sizes().into_iter().any(|s| s >= d) {
            total += &falling[p.num_blocks()];
        }
    }
    Ok(total)
}

/// For weighted points, counts the set partitions having a block of total
/// weight `>= threshold`, bucketed by number of blocks.
fn heavy_partitions_by_block_count(weights: &[usize], threshold: usize) -> Vec<u64> {
    fn visit(
        i: usize,
        weights: &[usize],
        threshold: usize,
        blocks: &mut Vec<usize>,
        counts: &mut [u64],
    ) {
        if i == weights.len() {
            if blocks.iter().any(|&w| w >= threshold) {
                counts[blocks.len()] += 1;
            }
            return;
        }
        for b in 0..blocks.len() {
            blocks[b] += weights[i];
            visit(i + 1, weights, threshold, blocks, counts);
            blocks[b] -= weights[i];
        }
        blocks.push(weights[i]);
        visit(i + 1, weights, threshold, blocks, counts);
        blocks.pop();
    }

    let mut counts = vec![0; weights.len() + 1];
    visit(0, weights, threshold, &mut Vec::new(), &mut counts);
    counts
}

/// `chi(B_d(X,n))` as the Lefschetz average `(1/n!) sum_sigma chi(F_d(X,n)^sigma)`.
///
/// The fixed set of `sigma` is `X^{c(sigma)}`, one coordinate per cycle,
/// where a coordinate's multiplicity is its cycle length. Its part inside
/// `F_d` is stratified by which cycle coordinates coincide; a pattern
/// contributes `(chi)_{#blocks}` when some block has total length `>= d`.
pub fn oracle_bd_burnside(chi: &ExactInt, n: usize, d: usize) -> Result<ExactInt> {
    check_oracle_range(n, d)?;
    let falling: Vec<ExactInt> = (0..=n).map(|k| falling_factorial(chi, k)).collect();
    let mut total = ExactInt::zero();
    for (cycle_type, class_size) in conjugacy_classes_sn(n)? {
        let counts = heavy_partitions_by_block_count(&cycle_type.lengths(), d);
        let fixed_chi: ExactInt = counts.iter().zip(&falling).map(|(&c, f)| f * c).sum();
        total += fixed_chi * class_size;
    }
    let average = BigRational::new(total, factorial(n));
    rational_to_int(&average, "Burnside average of fixed fat diagonals")
}
