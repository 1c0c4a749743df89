use std::fmt;

use num_traits::One;
use serde::Serialize;

use crate::algebra::{exact_div, factorial, ExactInt};
use crate::combinatorics::{alpha_sequences, AlphaSequence};
use crate::error::{Error, Result};
use crate::guard;

/// Cycle-length multiplicities `(N_1, ..., N_n)` of a permutation of degree `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CycleType {
    counts: Vec<usize>,
}

impl CycleType {
    /// `counts[l-1]` is the number of `l`-cycles; the degree is `counts.len()`.
    pub fn from_counts(counts: Vec<usize>) -> Result<Self> {
        let total: usize = counts.iter().enumerate().map(|(i, c)| (i + 1) * c).sum();
        if total != counts.len() {
            return Err(Error::invalid(format!(
                "cycle type {counts:?} does not describe a permutation of degree {}",
                counts.len()
            )));
        }
        Ok(Self { counts })
    }

    /// Reads an integer partition of `n` as a cycle type in `S_n`.
    pub fn from_alpha(alpha: &AlphaSequence) -> Self {
        let n = alpha.n();
        let mut counts = vec![0; n];
        for (i, &a) in alpha.alpha().iter().enumerate().filter(|(_, &a)| a > 0) {
            counts[i] = a;
        }
        Self { counts }
    }

    pub fn degree(&self) -> usize {
        self.counts.len()
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn cycle_count(&self) -> usize {
        self.counts.iter().sum()
    }

    /// Cycle lengths, longest first (fixed points included).
    pub fn lengths(&self) -> Vec<usize> {
        AlphaSequence::new(self.counts.clone()).parts()
    }

    pub fn to_alpha(&self) -> AlphaSequence {
        AlphaSequence::new(self.counts.clone())
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.counts.iter().map(usize::to_string).collect();
        write!(f, "({})", body.join(","))
    }
}

/// Order of the centralizer in `S_n` of a permutation with this cycle type:
/// `prod_l N_l! * l^{N_l}`.
pub fn centralizer_order_sn(cycle_type: &CycleType) -> ExactInt {
    cycle_type
        .counts
        .iter()
        .enumerate()
        .fold(ExactInt::one(), |acc, (i, &c)| {
            acc * factorial(c) * num_traits::pow(ExactInt::from(i + 1), c)
        })
}

/// Conjugacy classes of `S_n` with their sizes `n! / |C(sigma)|`.
///
/// Classes are ordered by longest cycle, then by descending `(N_1, N_2, ...)`.
pub fn conjugacy_classes_sn(n: usize) -> Result<Vec<(CycleType, ExactInt)>> {
    guard::check(
        "symmetric group class listing",
        n as u128,
        guard::SYMMETRIC_CLASSES_DEGREE,
    )?;
    let order = factorial(n);
    let mut types: Vec<CycleType> = alpha_sequences(n, n.max(1))
        .iter()
        .map(CycleType::from_alpha)
        .collect();
    if n == 0 {
        types = vec![CycleType { counts: Vec::new() }];
    }
    // stable sort keeps descending-lexicographic order inside each longest-cycle group
    types.sort_by_key(|t| t.to_alpha().max_part());
    types
        .into_iter()
        .map(|t| {
            let size = exact_div(&order, &centralizer_order_sn(&t), "class size")?;
            Ok((t, size))
        })
        .collect()
}
