//! Orbit-type bookkeeping for `G` acting on `X^n` by permuting coordinates.
//!
//! For `X` a manifold of positive dimension every coordinate-equality pattern
//! (a set partition of `{1..n}`) occurs, and the stabilizer of a point depends
//! only on its pattern. Strata of the stabilizer stratification are therefore
//! indexed by `G`-conjugacy classes of pattern stabilizers, and the closure
//! order between strata is inclusion up to conjugacy. Depth is computed on
//! that poset of classes.

use std::collections::HashMap;

use serde::Serialize;

use crate::combinatorics::{set_partitions, SetPartition};
use crate::error::{Error, Result};
use crate::guard;
use crate::permgroup::{Permutation, PermutationGroupModel};

/// Fixed-width bit set over group element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct ElementSet {
    words: Vec<u64>,
}

impl ElementSet {
    fn empty(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(64)],
        }
    }

    fn insert(&mut self, i: usize) -> bool {
        let (w, b) = (i / 64, 1u64 << (i % 64));
        let fresh = self.words[w] & b == 0;
        self.words[w] |= b;
        fresh
    }

    fn contains(&self, i: usize) -> bool {
        self.words[i / 64] & (1u64 << (i % 64)) != 0
    }

    fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_subset(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            (0..64)
                .filter(move |b| word & (1u64 << b) != 0)
                .map(move |b| w * 64 + b)
        })
    }
}

fn pattern_stabilizer(group: &PermutationGroupModel, pattern: &SetPartition) -> ElementSet {
    let mut set = ElementSet::empty(group.order());
    for (i, g) in group.elements().iter().enumerate() {
        if (0..pattern.n()).all(|x| pattern.block_of(g.apply(x)) == pattern.block_of(x)) {
            set.insert(i);
        }
    }
    set
}

/// `G_P = {g in G : i and g(i) lie in the same block of P for every i}`.
pub fn stabilizer_of_pattern(
    group: &PermutationGroupModel,
    pattern: &SetPartition,
) -> Result<Vec<Permutation>> {
    if pattern.n() != group.degree() {
        return Err(Error::invalid(format!(
            "pattern on {} points for a group of degree {}",
            pattern.n(),
            group.degree()
        )));
    }
    let set = pattern_stabilizer(group, pattern);
    Ok(set.iter().map(|i| group.elements()[i].clone()).collect())
}

/// Image of an equality pattern under `g`: `i ~ j` becomes `g(i) ~ g(j)`.
fn move_pattern(g: &Permutation, pattern: &SetPartition) -> SetPartition {
    let mut raw = vec![0; pattern.n()];
    for i in 0..pattern.n() {
        raw[g.apply(i)] = pattern.block_of(i);
    }
    SetPartition::from_labels(&raw)
}

/// One `G`-conjugacy class of pattern stabilizers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilizerClass {
    /// Order of the subgroups in the class.
    pub order: usize,
    /// Number of distinct subgroups in the class.
    pub conjugates: usize,
    /// Coarsest pattern realizing the representative: its orbit partition.
    pub pattern: String,
}

/// Conjugacy classes of pattern stabilizers with the strict order
/// `(K) < (H)` iff some conjugate of `K` is a proper subgroup of `H`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilizerClassPoset {
    pub classes: Vec<StabilizerClass>,
    /// `(a, b)` whenever `classes[a] < classes[b]`.
    pub relations: Vec<(usize, usize)>,
}

impl StabilizerClassPoset {
    /// Number of steps in a longest strictly increasing chain of classes.
    pub fn longest_chain(&self) -> usize {
        // classes are sorted by subgroup order, which strictly increases along relations
        let mut best = vec![0usize; self.classes.len()];
        let mut rel = self.relations.clone();
        rel.sort_by_key(|&(a, b)| (self.classes[b].order, self.classes[a].order));
        for (a, b) in rel {
            best[b] = best[b].max(best[a] + 1);
        }
        best.into_iter().max().unwrap_or(0)
    }
}

fn bell_number(n: usize) -> u128 {
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for v in &row {
            let last = *next.last().unwrap();
            next.push(last + v);
        }
        row = next;
    }
    row[0]
}

/// Builds the poset of stabilizer classes by enumerating every equality pattern.
///
/// Guarded at degree 9 and at `|G| * Bell(n) <= 10^8`.
pub fn stabilizer_class_poset(group: &PermutationGroupModel) -> Result<StabilizerClassPoset> {
    let n = group.degree();
    guard::check("depth degree", n as u128, guard::DEPTH_DEGREE)?;
    guard::check(
        "depth work (|G| x Bell(n))",
        group.order() as u128 * bell_number(n),
        100_000_000,
    )?;

    let patterns: Vec<SetPartition> = set_partitions(n)?.collect();
    let pattern_index: HashMap<&SetPartition, usize> =
        patterns.iter().enumerate().map(|(i, p)| (p, i)).collect();

    // distinct stabilizers, and which one each pattern realizes
    let mut subgroups: Vec<ElementSet> = Vec::new();
    let mut subgroup_id: HashMap<ElementSet, usize> = HashMap::new();
    let mut realized_by = Vec::with_capacity(patterns.len());
    let mut coarsest: Vec<usize> = Vec::new();
    for (pi, p) in patterns.iter().enumerate() {
        let stab = pattern_stabilizer(group, p);
        let id = *subgroup_id.entry(stab.clone()).or_insert_with(|| {
            subgroups.push(stab);
            coarsest.push(pi);
            subgroups.len() - 1
        });
        // fewest blocks = coarsest pattern with this stabilizer
        if p.num_blocks() < patterns[coarsest[id]].num_blocks() {
            coarsest[id] = pi;
        }
        realized_by.push(id);
    }

    // conjugation by g maps G_P to G_{gP}; join classes along generators
    let mut parent: Vec<usize> = (0..subgroups.len()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut c = x;
        while parent[c] != r {
            let next = parent[c];
            parent[c] = r;
            c = next;
        }
        r
    }
    for (pi, p) in patterns.iter().enumerate() {
        for g in group.generators() {
            let qi = pattern_index[&move_pattern(g, p)];
            let (a, b) = (
                find(&mut parent, realized_by[pi]),
                find(&mut parent, realized_by[qi]),
            );
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }

    let mut class_of_root: HashMap<usize, usize> = HashMap::new();
    let mut members: Vec<Vec<usize>> = Vec::new();
    let mut order_keys: Vec<usize> = (0..subgroups.len()).collect();
    order_keys.sort_by_key(|&s| (subgroups[s].len(), s));
    for s in order_keys {
        let root = find(&mut parent, s);
        let c = *class_of_root.entry(root).or_insert_with(|| {
            members.push(Vec::new());
            members.len() - 1
        });
        members[c].push(s);
    }
    let mut class_of = vec![0; subgroups.len()];
    for (c, ms) in members.iter().enumerate() {
        for &s in ms {
            class_of[s] = c;
        }
    }

    let mut relations = Vec::new();
    let mut related = vec![vec![false; members.len()]; members.len()];
    for (b, ms) in members.iter().enumerate() {
        let rep = &subgroups[ms[0]];
        for (a, sub) in subgroups.iter().enumerate() {
            let ca = class_of[a];
            if ca != b && !related[ca][b] && sub.len() < rep.len() && sub.is_subset(rep) {
                related[ca][b] = true;
                relations.push((ca, b));
            }
        }
    }
    relations.sort_unstable();

    let classes = members
        .iter()
        .map(|ms| StabilizerClass {
            order: subgroups[ms[0]].len(),
            conjugates: ms.len(),
            pattern: patterns[coarsest[ms[0]]].to_string(),
        })
        .collect();
    Ok(StabilizerClassPoset { classes, relations })
}

/// Depth of the orbit-type stratification of `X^n / G`, `X` a manifold of
/// positive dimension: the longest strict chain of stabilizer classes.
pub fn depth(group: &PermutationGroupModel) -> Result<usize> {
    Ok(stabilizer_class_poset(group)?.longest_chain())
}

/// Length of `S_n`: `floor((3n-1)/2) - (number of ones in binary n)`.
pub fn length_sn(n: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::invalid("length of S_n needs n >= 1"));
    }
    Ok((3 * n - 1) / 2 - n.count_ones() as usize)
}

/// Longest strict chain of subgroups `1 < H_1 < ... < G`, by listing every
/// subgroup of `G`. Guarded at `|G| <= 120`.
pub fn group_length(group: &PermutationGroupModel) -> Result<usize> {
    let m = group.order();
    guard::check(
        "subgroup search order",
        m as u128,
        guard::SUBGROUP_SEARCH_ORDER,
    )?;
    let table = group.multiplication_table();
    let identity = group
        .index_of(&Permutation::identity(group.degree()))
        .expect("groups contain the identity");

    let close = |gens: &[usize]| -> ElementSet {
        let mut set = ElementSet::empty(m);
        set.insert(identity);
        let mut queue = vec![identity];
        while let Some(x) = queue.pop() {
            for &g in gens {
                let y = table[x][g];
                if set.insert(y) {
                    queue.push(y);
                }
            }
        }
        set
    };

    // every subgroup arises by adjoining elements one at a time
    let mut seen: HashMap<ElementSet, Vec<usize>> = HashMap::new();
    let mut frontier = vec![(close(&[]), Vec::<usize>::new())];
    seen.insert(frontier[0].0.clone(), Vec::new());
    while let Some((sub, gens)) = frontier.pop() {
        for g in 0..m {
            if sub.contains(g) {
                continue;
            }
            let mut next_gens = gens.clone();
            next_gens.push(g);
            let next = close(&next_gens);
            if !seen.contains_key(&next) {
                seen.insert(next.clone(), next_gens.clone());
                frontier.push((next, next_gens));
            }
        }
    }

    let mut subgroups: Vec<ElementSet> = seen.into_keys().collect();
    subgroups.sort_by_key(ElementSet::len);
    let mut chain = vec![0usize; subgroups.len()];
    for j in 0..subgroups.len() {
        for i in 0..j {
            if subgroups[i].len() < subgroups[j].len() && subgroups[i].is_subset(&subgroups[j]) {
                chain[j] = chain[j].max(chain[i] + 1);
            }
        }
    }
    Ok(chain.last().copied().unwrap_or(0))
}
