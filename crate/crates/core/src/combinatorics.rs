//! Integer partitions as multiplicity vectors and set partitions of `{1..n}`.

use std::fmt;

use num_traits::One;

use crate::algebra::{exact_div, factorial, ExactInt};
use crate::error::{Error, Result};
use crate::guard;

/// Multiplicity vector `(a_1, ..., a_m)` of an integer partition of `n`:
/// `a_i` parts equal to `i`, so that `sum i * a_i = n`.
///
/// Trailing zeros are allowed and ignored by equality-insensitive helpers;
/// equality itself is on the stored vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlphaSequence {
    alpha: Vec<usize>,
}

impl AlphaSequence {
    pub fn new(alpha: Vec<usize>) -> Self {
        Self { alpha }
    }

    /// Multiplicity vector of a list of block sizes. Zero sizes are rejected.
    pub fn from_part_sizes(sizes: &[usize], len: usize) -> Result<Self> {
        let top = sizes.iter().copied().max().unwrap_or(0);
        if sizes.contains(&0) {
            return Err(Error::invalid("part sizes must be positive"));
        }
        let mut alpha = vec![0; len.max(top)];
        for &s in sizes {
            alpha[s - 1] += 1;
        }
        Ok(Self { alpha })
    }

    pub fn alpha(&self) -> &[usize] {
        &self.alpha
    }

    /// The integer being partitioned, `sum i * a_i`.
    pub fn n(&self) -> usize {
        self.alpha
            .iter()
            .enumerate()
            .map(|(i, a)| (i + 1) * a)
            .sum()
    }

    /// Number of parts, `sum a_i`.
    pub fn num_parts(&self) -> usize {
        self.alpha.iter().sum()
    }

    /// Largest part size, 0 for the empty partition.
    pub fn max_part(&self) -> usize {
        self.alpha.iter().rposition(|&a| a > 0).map_or(0, |i| i + 1)
    }

    /// `a_1! a_2! ... a_m!`
    pub fn multiplicity_factorial(&self) -> ExactInt {
        self.alpha
            .iter()
            .fold(ExactInt::one(), |acc, &a| acc * factorial(a))
    }

    /// Parts in non-increasing order, e.g. `(2,1)` for `a = (1,1)`.
    pub fn parts(&self) -> Vec<usize> {
        let mut parts = Vec::with_capacity(self.num_parts());
        for (i, &a) in self.alpha.iter().enumerate().rev() {
            parts.extend(std::iter::repeat_n(i + 1, a));
        }
        parts
    }
}

impl fmt::Display for AlphaSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.alpha.iter().map(usize::to_string).collect();
        write!(f, "({})", body.join(","))
    }
}

/// All multiplicity vectors of length `max_part` with `sum i * a_i = n`,
/// in descending lexicographic order on `(a_1, a_2, ...)`.
pub fn alpha_sequences(n: usize, max_part: usize) -> Vec<AlphaSequence> {
    fn fill(i: usize, rem: usize, current: &mut Vec<usize>, out: &mut Vec<AlphaSequence>) {
        let len = current.len();
        let size = i + 1;
        if i + 1 == len {
            if rem.is_multiple_of(size) {
                current[i] = rem / size;
                out.push(AlphaSequence::new(current.clone()));
                current[i] = 0;
            }
            return;
        }
        for a in (0..=rem / size).rev() {
            current[i] = a;
            fill(i + 1, rem - a * size, current, out);
        }
        current[i] = 0;
    }

    let mut out = Vec::new();
    if max_part == 0 {
        if n == 0 {
            out.push(AlphaSequence::new(Vec::new()));
        }
        return out;
    }
    let mut current = vec![0; max_part];
    fill(0, n, &mut current, &mut out);
    out
}

/// Number of set partitions of `{1..n}` with exactly `a_i` blocks of size `i`:
/// `n! / prod (i!)^{a_i} a_i!`.
pub fn count_set_partitions_of_type(alpha: &AlphaSequence) -> ExactInt {
    let mut den = alpha.multiplicity_factorial();
    for (i, &a) in alpha.alpha().iter().enumerate() {
        den *= num_traits::pow(factorial(i + 1), a);
    }
    exact_div(&factorial(alpha.n()), &den, "set partition type count")
        .expect("multinomial coefficient is integral")
}

/// A partition of `{0..n-1}` (displayed 1-indexed) into non-empty blocks,
/// stored as its restricted growth string: `labels[i]` is the block of `i`,
/// and blocks are numbered in order of their smallest element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    labels: Vec<usize>,
    num_blocks: usize,
}

impl SetPartition {
    /// The partition into singletons.
    pub fn discrete(n: usize) -> Self {
        Self {
            labels: (0..n).collect(),
            num_blocks: n,
        }
    }

    /// The partition with a single block (empty for `n = 0`).
    pub fn indiscrete(n: usize) -> Self {
        Self {
            labels: vec![0; n],
            num_blocks: usize::from(n > 0),
        }
    }

    /// Builds a partition from 0-indexed blocks, checking they tile `{0..n-1}`.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut raw = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::invalid("set partition blocks must be non-empty"));
            }
            for &i in block {
                if i >= n {
                    return Err(Error::invalid(format!("element {} outside 1..{n}", i + 1)));
                }
                if raw[i] != usize::MAX {
                    return Err(Error::invalid(format!("element {} in two blocks", i + 1)));
                }
                raw[i] = b;
            }
        }
        if raw.contains(&usize::MAX) {
            return Err(Error::invalid("set partition blocks do not cover 1..n"));
        }
        Ok(Self::from_labels(&raw))
    }

    /// Canonicalizes arbitrary block labels into restricted growth form.
    pub fn from_labels(raw: &[usize]) -> Self {
        let mut map = std::collections::HashMap::new();
        let mut labels = Vec::with_capacity(raw.len());
        for &r in raw {
            let next = map.len();
            labels.push(*map.entry(r).or_insert(next));
        }
        Self {
            num_blocks: map.len(),
            labels,
        }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn num_blocks(&self) -> usize {
        self.num_blocks
    }

    pub fn block_of(&self, i: usize) -> usize {
        self.labels[i]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.num_blocks];
        for (i, &b) in self.labels.iter().enumerate() {
            blocks[b].push(i);
        }
        blocks
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.num_blocks];
        for &b in &self.labels {
            sizes[b] += 1;
        }
        sizes
    }

    /// Block-size type of the partition as a multiplicity vector of length `n`.
    pub fn alpha(&self) -> AlphaSequence {
        AlphaSequence::from_part_sizes(&self.block_sizes(), self.n()).expect("blocks are non-empty")
    }

    /// True if every block of `self` lies inside a block of `coarser`.
    pub fn refines(&self, coarser: &SetPartition) -> bool {
        if self.n() != coarser.n() {
            return false;
        }
        let mut image = vec![usize::MAX; self.num_blocks];
        for (i, &b) in self.labels.iter().enumerate() {
            let c = coarser.labels[i];
            if image[b] == usize::MAX {
                image[b] = c;
            } else if image[b] != c {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| {
                b.iter()
                    .map(|i| (i + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "{{{}}}", blocks.join("|"))
    }
}

/// Iterator over the set partitions of `{1..n}` in restricted-growth-string order.
#[derive(Clone, Debug)]
pub struct SetPartitions {
    labels: Vec<usize>,
    // prefix_max[i] = max(labels[0..=i])
    prefix_max: Vec<usize>,
    done: bool,
}

impl Iterator for SetPartitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        let n = self.labels.len();
        let current = SetPartition {
            labels: self.labels.clone(),
            num_blocks: self.prefix_max.last().map_or(0, |m| m + 1),
        };

        // Advance: rightmost position that can still grow.
        let mut advanced = false;
        for i in (1..n).rev() {
            if self.labels[i] <= self.prefix_max[i - 1] {
                self.labels[i] += 1;
                self.prefix_max[i] = self.prefix_max[i - 1].max(self.labels[i]);
                for j in i + 1..n {
                    self.labels[j] = 0;
                    self.prefix_max[j] = self.prefix_max[i];
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            self.done = true;
        }
        Some(current)
    }
}

/// Enumerates every set partition of `{1..n}` exactly once.
///
/// Guarded at `n <= 12` (scaled by `FATDIAG_GUARD_SCALE`).
pub fn set_partitions(n: usize) -> Result<SetPartitions> {
    guard::check(
        "set partition degree",
        n as u128,
        guard::SET_PARTITION_DEGREE,
    )?;
    Ok(SetPartitions {
        labels: vec![0; n],
        prefix_max: vec![0; n],
        done: false,
    })
}
