use std::fmt;

use crate::error::{Error, Result};

use super::CycleType;

/// A bijection of `{0..n-1}`, displayed and parsed 1-indexed in cycle notation.
///
/// Acting on tuples, `g` moves the entry at position `i` to position `g(i)`:
/// `(g . x)_i = x_{g^-1(i)}`. Composition `g.compose(h)` applies `h` first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from its 0-indexed image vector.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::invalid(format!("{images:?} is not a permutation")));
            }
            seen[i] = true;
        }
        Ok(Self { images })
    }

    /// Builds a permutation of degree `n` from 0-indexed cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            for (k, &point) in cycle.iter().enumerate() {
                if point >= n {
                    return Err(Error::invalid(format!(
                        "point {} exceeds degree {n}",
                        point + 1
                    )));
                }
                if used[point] {
                    return Err(Error::invalid(format!(
                        "point {} appears twice in cycle notation",
                        point + 1
                    )));
                }
                used[point] = true;
                images[point] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Self { images })
    }

    /// Parses 1-indexed cycle notation such as `"(1 2 3)(4 5)"`.
    /// Empty input, `"()"` and `"e"` denote the identity.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "e" || text == "id" {
            return Ok(Self::identity(n));
        }
        let mut cycles = Vec::new();
        let mut rest = text;
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected `(` in `{text}`")))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in `{text}`")))?;
            let body = &open[..close];
            let mut cycle = Vec::new();
            for tok in body.split(|c: char| c.is_whitespace() || c == ',') {
                if tok.is_empty() {
                    continue;
                }
                let v: usize = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad point `{tok}` in `{text}`")))?;
                if v == 0 {
                    return Err(Error::Parse("points are 1-indexed".into()));
                }
                cycle.push(v - 1);
            }
            cycles.push(cycle);
            rest = open[close + 1..].trim_start();
        }
        Self::from_cycles(n, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self o other`: apply `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// Acts on a tuple by moving position `i` to position `g(i)`.
    pub fn act_on<T: Clone>(&self, tuple: &[T]) -> Vec<T> {
        let inv = self.inverse();
        (0..self.degree())
            .map(|i| tuple[inv.images[i]].clone())
            .collect()
    }

    /// Disjoint cycles including fixed points, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = self.images[start];
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.images[cur];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut counts = vec![0; self.degree()];
        for c in self.cycles() {
            counts[c.len() - 1] += 1;
        }
        CycleType::from_counts(counts).expect("cycle lengths sum to the degree")
    }

    /// Number of cycles, fixed points included.
    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for c in self.cycles().into_iter().filter(|c| c.len() > 1) {
            let body: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "({})", body.join(" "))?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// Parses a generator list: cycle-notation words separated by `;` or `,`
/// outside parentheses, e.g. `"(1 2); (1 2 3 4)"`. A single word like
/// `"(1 2)(3 4)"` is one generator.
pub fn parse_generators(n: usize, text: &str) -> Result<Vec<Permutation>> {
    let mut gens = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    let bytes: Vec<char> = text.chars().collect();
    let mut words = Vec::new();
    for (i, &c) in bytes.iter().enumerate() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ';' | ',' if depth == 0 => {
                words.push(bytes[start..i].iter().collect::<String>());
                start = i + 1;
            }
            _ => {}
        }
    }
    words.push(bytes[start..].iter().collect::<String>());
    for w in words {
        if w.trim().is_empty() {
            continue;
        }
        gens.push(Permutation::parse(n, &w)?);
    }
    Ok(gens)
}
