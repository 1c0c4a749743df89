//! Batch cross-checks between the closed formulas and their oracles.
//!
//! `Suite::Fast` uses reduced ranges and finishes in a few seconds;
//! `Suite::All` uses the full ranges of the acceptance suite.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{falling_factorial, pow, ExactInt, GradedPolynomial};
use crate::combinatorics::{alpha_sequences, count_set_partitions_of_type, set_partitions};
use crate::error::Result;
use crate::eulerchar::{
    chi_b_upper, chi_bd, chi_bd_by_strata, chi_fd, chi_fd_without_multiplicity, chi_gamma_product,
    chi_sp, oracle_bd_burnside, oracle_fd_setpartitions,
};
use crate::fundgroup::{pi1_bd, pi1_gamma_product, GroupExpression};
use crate::graphconf::{discretized_chi_f2, farber_chi_f2, Graph};
use crate::invariants::{invariant_poincare, macdonald_poincare_sp};
use crate::permgroup::{cyclic_group, enumerate_group, parse_generators, symmetric_group};
use crate::spaces::preset;
use crate::strata::{depth, group_length, length_sn};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Fast,
    All,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub name: &'static str,
    pub passed: bool,
    pub cases: usize,
    pub millis: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub suite: &'static str,
    pub passed: bool,
    pub checks: Vec<CheckReport>,
}

/// Counts cases and remembers the first disagreement.
struct Tally {
    cases: usize,
    failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Self {
            cases: 0,
            failure: None,
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(describe());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, lhs: T, rhs: T) {
        let ok = lhs == rhs;
        self.check(ok, || format!("{what}: {lhs:?} != {rhs:?}"));
    }
}

fn int(v: i64) -> ExactInt {
    ExactInt::from(v)
}

fn run_check(name: &'static str, body: impl FnOnce(&mut Tally) -> Result<()>) -> CheckReport {
    let start = Instant::now();
    let mut tally = Tally::new();
    if let Err(e) = body(&mut tally) {
        tally.failure.get_or_insert(format!("error: {e}"));
    }
    CheckReport {
        name,
        passed: tally.failure.is_none(),
        cases: tally.cases,
        millis: start.elapsed().as_millis(),
        failure: tally.failure,
    }
}

fn macdonald_burnside(t: &mut Tally, n_max: usize) -> Result<()> {
    for n in 0..=n_max {
        let sn = symmetric_group(n)?;
        for chi in -5..=5 {
            t.eq(
                &format!("chi={chi} n={n}"),
                chi_sp(&int(chi), n),
                chi_gamma_product(&int(chi), &sn)?,
            );
        }
    }
    Ok(())
}

fn fat_diagonals(t: &mut Tally, n_max: usize) -> Result<()> {
    for n in 2..=n_max {
        for d in 2..=n {
            for chi in -4..=4 {
                let c = int(chi);
                let formula = chi_bd(&c, n, d)?;
                let case = format!("chi={chi} n={n} d={d}");
                t.eq(
                    &format!("B_d strata {case}"),
                    &formula,
                    &chi_bd_by_strata(&c, n, d)?,
                );
                t.eq(
                    &format!("B_d Burnside {case}"),
                    &formula,
                    &oracle_bd_burnside(&c, n, d)?,
                );
                t.eq(
                    &format!("F_d {case}"),
                    chi_fd(&c, n, d)?,
                    oracle_fd_setpartitions(&c, n, d)?,
                );
            }
        }
        for chi in -4..=4 {
            let c = int(chi);
            if n >= 3 {
                t.eq(
                    &format!("F_(n-1) chi={chi} n={n}"),
                    chi_fd(&c, n, n - 1)?,
                    int(n as i64 * chi * chi - (n as i64 - 1) * chi),
                );
            }
        }
    }
    t.eq(
        "coefficient-free F_3(X,3) at chi=2",
        chi_fd_without_multiplicity(&int(2), 3, 3)?,
        int(6),
    );
    Ok(())
}

fn identities(t: &mut Tally, n_max: usize) -> Result<()> {
    for n in 1..=n_max {
        for chi in -4..=4 {
            let c = int(chi);
            for d in 1..n {
                t.eq(
                    &format!("complement chi={chi} n={n} d={d}"),
                    chi_b_upper(&c, n, d)? + chi_bd(&c, n, d + 1)?,
                    chi_sp(&c, n),
                );
            }
            if n >= 3 {
                for d in (n / 2 + 1)..=n {
                    t.eq(
                        &format!("product chi={chi} n={n} d={d}"),
                        chi_bd(&c, n, d)?,
                        &c * chi_sp(&c, n - d),
                    );
                }
            }
        }
    }
    Ok(())
}

fn poincare(t: &mut Tally, n_max: usize) -> Result<()> {
    let z3 = cyclic_group(3)?;
    let torus = preset("torus")?.poincare();
    let circle = preset("circle")?.poincare();
    t.eq(
        "torus Z3",
        invariant_poincare(&torus, &z3)?,
        GradedPolynomial::from_coeffs([1, 2, 5, 8, 5, 2, 1]),
    );
    t.eq(
        "circle Z3",
        invariant_poincare(&circle, &z3)?,
        GradedPolynomial::from_coeffs([1, 1, 1, 1]),
    );
    for name in [
        "point",
        "circle",
        "torus",
        "sphere:2",
        "sphere:3",
        "surface:2",
        "projective_plane",
        "wedge_circles:2",
    ] {
        let space = preset(name)?;
        let p = space.poincare();
        for n in 0..=n_max {
            let sn = symmetric_group(n)?;
            let inv = invariant_poincare(&p, &sn)?;
            t.eq(
                &format!("{name} S_{n}"),
                &inv,
                &macdonald_poincare_sp(&p, n),
            );
            t.eq(
                &format!("{name} S_{n} chi"),
                inv.eval(&int(-1)),
                chi_gamma_product(&space.euler(), &sn)?,
            );
        }
    }
    Ok(())
}

fn spheres(t: &mut Tally, n_max: usize) -> Result<()> {
    t.eq("B_2(S^2,4)", chi_bd(&int(2), 4, 2)?, int(5));
    t.eq("B_2(S^2,5)", chi_bd(&int(2), 5, 2)?, int(6));
    t.eq("B_2(S^odd,5)", chi_bd(&int(0), 5, 2)?, int(0));
    for n in 2..=n_max {
        for d in 2..=n {
            t.eq(
                &format!("chi=0 n={n} d={d}"),
                chi_bd(&int(0), n, d)?,
                int(0),
            );
        }
    }
    Ok(())
}

/// Random connected simple graph: a random spanning tree plus random chords.
pub fn random_connected_graph(rng: &mut impl Rng, n: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    let extra_prob = rng.gen_range(0.0..0.5);
    for a in 0..n {
        for b in a + 1..n {
            if !edges.contains(&(a, b)) && rng.gen_bool(extra_prob) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

fn graphs(t: &mut Tally, random: usize) -> Result<()> {
    let g1 = Graph::fixture("gamma1")?;
    let g2 = Graph::fixture("gamma2")?;
    t.eq("gamma1 Farber", farber_chi_f2(&g1)?, int(-4));
    t.eq("gamma2 Farber", farber_chi_f2(&g2)?, int(-6));
    t.eq("gamma1 discretized", discretized_chi_f2(&g1)?, int(-4));
    t.eq("gamma2 discretized", discretized_chi_f2(&g2)?, int(-6));
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..random {
        let n = rng.gen_range(1..=8);
        let g = random_connected_graph(&mut rng, n)?;
        t.eq(
            &format!("random graph #{i} {:?}", g.edges()),
            farber_chi_f2(&g)?,
            discretized_chi_f2(&g)?,
        );
    }
    Ok(())
}

fn stratification(t: &mut Tally, n_max: usize) -> Result<()> {
    for n in 1..=n_max {
        t.eq(&format!("depth S_{n}"), depth(&symmetric_group(n)?)?, n - 1);
    }
    let s3 = symmetric_group(3)?;
    let reg = s3.regular_representation()?;
    t.eq("depth regular S_3", depth(&reg)?, 2);
    t.eq("length S_3", group_length(&s3)?, 2);
    for n in 1..=10usize {
        t.eq(
            &format!("l(S_{n})"),
            length_sn(n)?,
            (3 * n - 1) / 2 - n.count_ones() as usize,
        );
    }
    for n in 1..=4 {
        t.eq(
            &format!("chain length S_{n}"),
            group_length(&symmetric_group(n)?)?,
            length_sn(n)?,
        );
    }
    let battery = [
        (4, "(1 2 3 4)"),
        (4, "(1 2)(3 4); (1 3)(2 4)"),
        (4, "(1 2 3); (2 3 4)"),
        (5, "(1 2 3 4 5)"),
        (5, "(1 2 3); (4 5)"),
        (6, "(1 2)(3 4)(5 6)"),
        (6, "(1 2 3)(4 5 6); (1 4)(2 5)(3 6)"),
    ];
    for (n, gens) in battery {
        let g = enumerate_group(n, &parse_generators(n, gens)?)?;
        let (dp, len) = (depth(&g)?, group_length(&g)?);
        t.check(dp <= len, || {
            format!("depth {dp} > length {len} for {gens}")
        });
    }
    Ok(())
}

fn fundamental_groups(t: &mut Tally) -> Result<()> {
    let x = preset("surface:2")?;
    for n in 2..=6 {
        t.eq(
            &format!("cyclic {n}"),
            pi1_gamma_product(&x, &cyclic_group(n)?)?,
            GroupExpression::exact(0, 1),
        );
        t.eq(
            &format!("symmetric {n}"),
            pi1_gamma_product(&x, &symmetric_group(n)?)?,
            GroupExpression::exact(0, 1),
        );
    }
    let a = enumerate_group(4, &parse_generators(4, "(1 2)")?)?;
    let b = enumerate_group(4, &parse_generators(4, "(1 3)(2 4)")?)?;
    t.eq(
        "Z2 via (12)",
        pi1_gamma_product(&x, &a)?,
        GroupExpression::exact(2, 1),
    );
    t.eq(
        "Z2 via (13)(24)",
        pi1_gamma_product(&x, &b)?,
        GroupExpression::exact(0, 2),
    );
    for n in 1..=8 {
        for d in 1..=n {
            let expected = if d == n {
                GroupExpression::exact(1, 0)
            } else if 2 * d <= n {
                GroupExpression::exact(0, 1)
            } else if d + 1 == n {
                GroupExpression::exact(2, 0)
            } else {
                GroupExpression::exact(1, 1)
            };
            t.eq(&format!("pi1 B_{d}(X,{n})"), pi1_bd(&x, n, d)?, expected);
        }
    }
    Ok(())
}

fn partitions(t: &mut Tally, n_max: usize) -> Result<()> {
    let mut bell_row = vec![1u64];
    for n in 0..=n_max {
        let parts: Vec<_> = set_partitions(n)?.collect();
        t.eq(&format!("Bell({n})"), parts.len() as u64, bell_row[0]);
        let by_type: ExactInt = alpha_sequences(n, n.max(1))
            .iter()
            .map(count_set_partitions_of_type)
            .sum();
        t.eq(
            &format!("type counts n={n}"),
            by_type,
            int(parts.len() as i64),
        );
        for chi in -5..=5 {
            let sum: ExactInt = parts
                .iter()
                .map(|p| falling_factorial(&int(chi), p.num_blocks()))
                .sum();
            t.eq(&format!("Stirling chi={chi} n={n}"), sum, pow(&int(chi), n));
        }
        let mut next = vec![*bell_row.last().unwrap()];
        for v in &bell_row {
            let last = *next.last().unwrap();
            next.push(last + v);
        }
        bell_row = next;
    }
    Ok(())
}

/// Runs every cross-check; the report says which ones failed and why.
pub fn run(suite: Suite) -> VerifyReport {
    let full = suite == Suite::All;
    let pick = |fast: usize, all: usize| if full { all } else { fast };
    let checks = vec![
        run_check("symmetric-product-burnside", |t| {
            macdonald_burnside(t, pick(6, 8))
        }),
        run_check("fat-diagonal-oracles", |t| fat_diagonals(t, pick(6, 8))),
        run_check("complement-and-product-identities", |t| {
            identities(t, pick(6, 8))
        }),
        run_check("invariant-poincare", |t| poincare(t, pick(4, 5))),
        run_check("sphere-fixtures", |t| spheres(t, pick(6, 8))),
        run_check("graph-configurations", |t| graphs(t, pick(20, 60))),
        run_check("stratification-depth", |t| stratification(t, pick(5, 6))),
        run_check("fundamental-groups", fundamental_groups),
        run_check("partitions", |t| partitions(t, pick(7, 8))),
    ];
    VerifyReport {
        suite: if full { "all" } else { "fast" },
        passed: checks.iter().all(|c| c.passed),
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fast_suite_passes() {
        let report = run(Suite::Fast);
        for c in &report.checks {
            assert!(c.passed, "{}: {:?}", c.name, c.failure);
            assert!(c.cases > 0, "{} ran no cases", c.name);
        }
    }

    #[test]
    fn random_graphs_are_connected_and_simple() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..30 {
            let n = rng.gen_range(1..=8);
            let g = random_connected_graph(&mut rng, n).unwrap();
            assert!(g.is_connected());
            assert_eq!(g.num_vertices(), n);
        }
    }

    #[test]
    fn tally_keeps_first_failure() {
        let mut t = Tally::new();
        t.eq("a", 1, 1);
        t.eq("b", 1, 2);
        t.eq("c", 3, 4);
        assert_eq!(t.cases, 3);
        assert_eq!(t.failure.as_deref(), Some("b: 1 != 2"));
    }
}
