//! Finite permutation groups given by generators, enumerated in full.
//!
//! Degrees in this crate are tiny, so groups are closed under multiplication
//! by brute force instead of using a base and strong generating set.

mod classes;
mod perm;

pub use classes::{centralizer_order_sn, conjugacy_classes_sn, CycleType};
pub use perm::{parse_generators, Permutation};

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::guard;

/// A subgroup of `S_n` with every element listed.
///
/// Elements are sorted by image vector, so the identity comes first.
#[derive(Clone, Debug)]
pub struct PermutationGroupModel {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl PartialEq for PermutationGroupModel {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermutationGroupModel {}

/// Closes `gens` under composition. Guarded at order `10^6`.
pub fn enumerate_group(degree: usize, gens: &[Permutation]) -> Result<PermutationGroupModel> {
    for g in gens {
        if g.degree() != degree {
            return Err(Error::invalid(format!(
                "generator {g} has degree {}, expected {degree}",
                g.degree()
            )));
        }
    }
    let identity = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.compose(&x);
            if seen.insert(y.clone()) {
                guard::check("group order", seen.len() as u128, guard::GROUP_ORDER)?;
                queue.push_back(y);
            }
        }
    }
    let mut elements: Vec<Permutation> = seen.into_iter().collect();
    elements.sort();
    let index = elements
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    Ok(PermutationGroupModel {
        degree,
        generators: gens.to_vec(),
        elements,
        index,
    })
}

/// The full symmetric group `S_n` acting naturally.
pub fn symmetric_group(n: usize) -> Result<PermutationGroupModel> {
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Permutation::from_cycles(n, &[vec![0, 1]])?);
        gens.push(Permutation::from_cycles(n, &[(0..n).collect()])?);
    }
    enumerate_group(n, &gens)
}

/// The cyclic group generated by the `n`-cycle `(1 2 ... n)`.
pub fn cyclic_group(n: usize) -> Result<PermutationGroupModel> {
    let gens = if n >= 2 {
        vec![Permutation::from_cycles(n, &[(0..n).collect()])?]
    } else {
        Vec::new()
    };
    enumerate_group(n, &gens)
}

pub fn trivial_group(n: usize) -> PermutationGroupModel {
    enumerate_group(n, &[]).expect("the trivial group is always enumerable")
}

impl PermutationGroupModel {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    /// `table[a][b]` is the index of `elements[a] o elements[b]`.
    pub fn multiplication_table(&self) -> Vec<Vec<usize>> {
        self.elements
            .iter()
            .map(|a| {
                self.elements
                    .iter()
                    .map(|b| self.index[&a.compose(b)])
                    .collect()
            })
            .collect()
    }

    /// Orbits on `{0..n-1}`, each sorted, ordered by least element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.degree;
        let mut label = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if label[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut orbit = vec![start];
            label[start] = id;
            let mut k = 0;
            while k < orbit.len() {
                let x = orbit[k];
                for g in &self.generators {
                    let y = g.apply(x);
                    if label[y] == usize::MAX {
                        label[y] = id;
                        orbit.push(y);
                    }
                }
                k += 1;
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() <= 1
    }

    /// Whether the group acts transitively on ordered `d`-tuples of distinct
    /// points. Guarded at `d <= 4`; `d` larger than the degree is rejected.
    pub fn is_d_transitive(&self, d: usize) -> Result<bool> {
        guard::check("transitivity degree", d as u128, guard::TRANSITIVITY_DEGREE)?;
        let n = self.degree;
        if d > n {
            return Err(Error::invalid(format!(
                "cannot test {d}-transitivity on {n} points"
            )));
        }
        if d == 0 {
            return Ok(true);
        }
        let start: Vec<usize> = (0..d).collect();
        let mut seen: HashSet<Vec<usize>> = HashSet::from([start.clone()]);
        let mut queue = VecDeque::from([start]);
        while let Some(t) = queue.pop_front() {
            for g in &self.generators {
                let image: Vec<usize> = t.iter().map(|&i| g.apply(i)).collect();
                if seen.insert(image.clone()) {
                    queue.push_back(image);
                }
            }
        }
        let tuples: usize = (0..d).map(|k| n - k).product();
        Ok(seen.len() == tuples)
    }

    /// The group acting on its own elements by left multiplication,
    /// as a permutation group of degree `|G|`.
    pub fn regular_representation(&self) -> Result<PermutationGroupModel> {
        let m = self.order();
        let gens = self
            .generators
            .iter()
            .map(|g| {
                let images = self
                    .elements
                    .iter()
                    .map(|x| self.index[&g.compose(x)])
                    .collect();
                Permutation::from_images(images)
            })
            .collect::<Result<Vec<_>>>()?;
        enumerate_group(m, &gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn group(n: usize, gens: &str) -> PermutationGroupModel {
        enumerate_group(n, &parse_generators(n, gens).unwrap()).unwrap()
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(group(3, "(1 2 3)").order(), 3);
        assert_eq!(group(3, "(1 2); (1 2 3)").order(), 6);
        assert_eq!(group(4, "").order(), 1);
        for n in 1..=6 {
            let expected: usize = (1..=n).product();
            assert_eq!(symmetric_group(n).unwrap().order(), expected);
            assert_eq!(cyclic_group(n).unwrap().order(), n);
        }
    }

    #[test]
    fn closure_properties() {
        let g = group(5, "(1 2 3); (3 4 5)");
        assert_eq!(g.order(), 60);
        assert!(g.elements()[0].is_identity());
        for a in g.elements() {
            assert!(g.contains(&a.inverse()));
            for b in g.elements().iter().take(10) {
                assert!(g.contains(&a.compose(b)));
            }
        }
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(
            group(4, "(1 2)").orbits(),
            vec![vec![0, 1], vec![2], vec![3]]
        );
        assert_eq!(
            group(4, "(1 3)(2 4)").orbits(),
            vec![vec![0, 2], vec![1, 3]]
        );
        let s3 = symmetric_group(3).unwrap();
        assert!(s3.is_transitive());
        assert!(s3.is_d_transitive(2).unwrap());
        assert!(s3.is_d_transitive(3).unwrap());
    }

    #[test]
    fn transitivity_levels() {
        let c4 = cyclic_group(4).unwrap();
        assert!(c4.is_d_transitive(1).unwrap());
        assert!(!c4.is_d_transitive(2).unwrap());
        let a4 = group(4, "(1 2 3); (2 3 4)");
        assert!(a4.is_d_transitive(2).unwrap());
        assert!(!a4.is_d_transitive(3).unwrap());
        assert!(!trivial_group(3).is_d_transitive(1).unwrap());
        assert!(c4.is_d_transitive(5).is_err());
        assert!(matches!(
            symmetric_group(6).unwrap().is_d_transitive(5),
            Err(Error::ResourceGuard { .. })
        ));
    }

    #[test]
    fn regular_representation_of_s3() {
        let s3 = symmetric_group(3).unwrap();
        let reg = s3.regular_representation().unwrap();
        assert_eq!(reg.degree(), 6);
        assert_eq!(reg.order(), 6);
        assert!(reg.is_transitive());
        // regular actions are free: only the identity fixes a point
        for g in reg.elements().iter().filter(|g| !g.is_identity()) {
            assert!((0..6).all(|i| g.apply(i) != i));
        }
    }

    #[test]
    fn multiplication_table_is_consistent() {
        let g = symmetric_group(4).unwrap();
        let table = g.multiplication_table();
        let e = g.index_of(&Permutation::identity(4)).unwrap();
        for a in 0..g.order() {
            assert_eq!(table[e][a], a);
            assert_eq!(table[a][e], a);
        }
    }

    fn arb_group() -> impl Strategy<Value = PermutationGroupModel> {
        (2usize..7).prop_flat_map(|n| {
            proptest::collection::vec(Just((0..n).collect::<Vec<_>>()).prop_shuffle(), 0..3)
                .prop_map(move |imgs| {
                    let gens: Vec<_> = imgs
                        .into_iter()
                        .map(|v| Permutation::from_images(v).unwrap())
                        .collect();
                    enumerate_group(n, &gens).unwrap()
                })
        })
    }

    proptest! {
        #[test]
        fn orbits_are_generator_invariant(g in arb_group()) {
            let orbits = g.orbits();
            let covered: usize = orbits.iter().map(Vec::len).sum();
            prop_assert_eq!(covered, g.degree());
            for orbit in &orbits {
                for gen in g.generators() {
                    let mut image: Vec<usize> = orbit.iter().map(|&i| gen.apply(i)).collect();
                    image.sort_unstable();
                    prop_assert_eq!(&image, orbit);
                }
            }
        }

        #[test]
        fn d_transitive_implies_transitive(g in arb_group(), d in 1usize..4) {
            if d <= g.degree() && g.is_d_transitive(d).unwrap() {
                prop_assert!(g.is_transitive());
                prop_assert!(d == 1 || g.is_d_transitive(d - 1).unwrap());
            }
        }
    }
}
