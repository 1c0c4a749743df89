//! Acceptance criteria. Each criterion prints one PASS/FAIL line with its
//! wall time; the target exits non-zero if any criterion fails or overruns
//! its budget.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use fatdiag::algebra::{falling_factorial, pow, ExactInt};
use fatdiag::combinatorics::{count_set_partitions_of_type, set_partitions};
use fatdiag::eulerchar::{
    chi_b_upper, chi_bd, chi_bd_by_strata, chi_fd, chi_fd_without_multiplicity, chi_gamma_product,
    chi_sp, oracle_bd_burnside, oracle_fd_setpartitions,
};
use fatdiag::fundgroup::{pi1_bd, pi1_gamma_product, GroupExpression};
use fatdiag::graphconf::{discretized_chi_f2, farber_chi_f2, Graph};
use fatdiag::invariants::{invariant_poincare, macdonald_poincare_sp};
use fatdiag::permgroup::{
    cyclic_group, enumerate_group, parse_generators, symmetric_group, Permutation,
    PermutationGroupModel,
};
use fatdiag::spaces::preset;
use fatdiag::strata::{depth, group_length, length_sn};
use fatdiag::verify::random_connected_graph;
use fatdiag::GradedPolynomial;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn int(v: i64) -> ExactInt {
    ExactInt::from(v)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn same(label: &str, got: &ExactInt, want: &ExactInt) -> Outcome {
    ensure(got == want, || {
        format!("{label}: got {got}, expected {want}")
    })
}

fn group(degree: usize, gens: &str) -> PermutationGroupModel {
    enumerate_group(degree, &parse_generators(degree, gens).unwrap()).unwrap()
}

fn poly(coeffs: &[i64]) -> GradedPolynomial {
    GradedPolynomial::from_coeffs(coeffs.iter().map(|&c| int(c)))
}

fn macdonald_burnside() -> Outcome {
    for n in 1..=8 {
        let sn = symmetric_group(n).map_err(|e| e.to_string())?;
        for c in -5..=5 {
            let chi = int(c);
            let avg = chi_gamma_product(&chi, &sn).map_err(|e| e.to_string())?;
            same(&format!("chi_sp({c},{n})"), &chi_sp(&chi, n), &avg)?;
        }
    }
    Ok(())
}

fn three_way_bd() -> Outcome {
    for n in 2..=8 {
        for d in 2..=n {
            for c in -4..=4 {
                let chi = int(c);
                let formula = chi_bd(&chi, n, d).map_err(|e| e.to_string())?;
                let strata = chi_bd_by_strata(&chi, n, d).map_err(|e| e.to_string())?;
                let burnside = oracle_bd_burnside(&chi, n, d).map_err(|e| e.to_string())?;
                same(&format!("strata ({c},{n},{d})"), &strata, &formula)?;
                same(&format!("burnside ({c},{n},{d})"), &burnside, &formula)?;
            }
        }
    }
    Ok(())
}

fn corrected_fd() -> Outcome {
    for n in 2..=8 {
        for d in 2..=n {
            for c in -4..=4 {
                let chi = int(c);
                let formula = chi_fd(&chi, n, d).map_err(|e| e.to_string())?;
                let oracle = oracle_fd_setpartitions(&chi, n, d).map_err(|e| e.to_string())?;
                same(&format!("F_d ({c},{n},{d})"), &formula, &oracle)?;
            }
        }
    }
    for c in -4..=4 {
        let chi = int(c);
        let f23 = chi_fd(&chi, 3, 2).map_err(|e| e.to_string())?;
        same(&format!("F_2(X,3) at {c}"), &f23, &int(3 * c * c - 2 * c))?;
        for n in 3..=8 {
            let nn = n as i64;
            let top = chi_fd(&chi, n, n - 1).map_err(|e| e.to_string())?;
            same(
                &format!("F_(n-1)(X,{n}) at {c}"),
                &top,
                &int(nn * c * c - (nn - 1) * c),
            )?;
        }
    }
    let printed = chi_fd_without_multiplicity(&int(2), 3, 3).map_err(|e| e.to_string())?;
    let truth = chi_fd(&int(2), 3, 3).map_err(|e| e.to_string())?;
    same("F_3(S^2,3) corrected", &truth, &int(2))?;
    same("F_3(S^2,3) printed form", &printed, &int(6))?;
    ensure(printed != truth, || {
        "printed form unexpectedly correct".into()
    })
}

fn invariant_fixtures() -> Outcome {
    let torus = preset("torus").map_err(|e| e.to_string())?;
    let c3 = group(3, "(1 2 3)");
    let got = invariant_poincare(&torus.poincare(), &c3).map_err(|e| e.to_string())?;
    ensure(got == poly(&[1, 2, 5, 8, 5, 2, 1]), || {
        format!("torus/Z3: {got}")
    })?;
    let circle = preset("circle").map_err(|e| e.to_string())?;
    let got = invariant_poincare(&circle.poincare(), &c3).map_err(|e| e.to_string())?;
    ensure(got == poly(&[1, 1, 1, 1]), || format!("circle/Z3: {got}"))?;
    let names = [
        "point",
        "circle",
        "torus",
        "projective_plane",
        "sphere:2",
        "sphere:3",
        "surface:2",
        "wedge_circles:3",
    ];
    for name in names {
        let x = preset(name).map_err(|e| e.to_string())?;
        for n in 1..=5 {
            let sn = symmetric_group(n).map_err(|e| e.to_string())?;
            let inv = invariant_poincare(&x.poincare(), &sn).map_err(|e| e.to_string())?;
            let mac = macdonald_poincare_sp(&x.poincare(), n);
            ensure(inv == mac, || {
                format!("SP^{n} {name}: invariants {inv}, generating function {mac}")
            })?;
        }
    }
    Ok(())
}

fn sphere_fixtures() -> Outcome {
    let bd = |c: i64, n: usize, d: usize| chi_bd(&int(c), n, d).map_err(|e| e.to_string());
    same("chi_bd(2,4,2)", &bd(2, 4, 2)?, &int(5))?;
    same("chi_bd(2,5,2)", &bd(2, 5, 2)?, &int(6))?;
    same("chi_bd(0,5,2)", &bd(0, 5, 2)?, &int(0))?;
    for n in 2..=8 {
        for d in 2..=n {
            same(&format!("chi_bd(0,{n},{d})"), &bd(0, n, d)?, &int(0))?;
        }
    }
    Ok(())
}

fn complement_and_product() -> Outcome {
    for n in 2..=8 {
        for d in 1..n {
            for c in -4..=4 {
                let chi = int(c);
                let upper = chi_b_upper(&chi, n, d).map_err(|e| e.to_string())?;
                let fat = chi_bd(&chi, n, d + 1).map_err(|e| e.to_string())?;
                same(
                    &format!("complement ({c},{n},{d})"),
                    &(upper + fat),
                    &chi_sp(&chi, n),
                )?;
            }
        }
        if n >= 3 {
            for d in (n / 2 + 1)..=n {
                for c in -4..=4 {
                    let chi = int(c);
                    let fat = chi_bd(&chi, n, d).map_err(|e| e.to_string())?;
                    same(
                        &format!("product ({c},{n},{d})"),
                        &fat,
                        &(&chi * chi_sp(&chi, n - d)),
                    )?;
                }
            }
        }
    }
    Ok(())
}

fn graph_configurations() -> Outcome {
    let gamma1 = Graph::fixture("gamma1").map_err(|e| e.to_string())?;
    let gamma2 = Graph::fixture("gamma2").map_err(|e| e.to_string())?;
    same(
        "Farber gamma1",
        &farber_chi_f2(&gamma1).map_err(|e| e.to_string())?,
        &int(-4),
    )?;
    same(
        "Farber gamma2",
        &farber_chi_f2(&gamma2).map_err(|e| e.to_string())?,
        &int(-6),
    )?;
    let mut graphs = vec![
        ("gamma1".to_string(), gamma1),
        ("gamma2".to_string(), gamma2),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for i in 0..60 {
        let n = 2 + i % 7;
        let g = random_connected_graph(&mut rng, n).map_err(|e| e.to_string())?;
        graphs.push((
            format!("random #{i} ({n} vertices, {} edges)", g.num_edges()),
            g,
        ));
    }
    for (label, g) in &graphs {
        let farber = farber_chi_f2(g).map_err(|e| e.to_string())?;
        let cells = discretized_chi_f2(g).map_err(|e| e.to_string())?;
        same(label, &cells, &farber)?;
    }
    Ok(())
}

fn small_group_battery() -> Vec<(String, PermutationGroupModel)> {
    let specs = [
        (1, ""),
        (2, "(1 2)"),
        (3, "(1 2 3)"),
        (3, "(1 2)"),
        (4, "(1 2)(3 4)"),
        (4, "(1 2); (3 4)"),
        (4, "(1 2)(3 4); (1 3)(2 4)"),
        (4, "(1 2 3 4)"),
        (4, "(1 2 3 4); (1 3)"),
        (4, "(1 2 3); (2 3 4)"),
        (5, "(1 2 3 4 5)"),
        (5, "(1 2 3 4 5); (2 5)(3 4)"),
        (5, "(1 2 3); (4 5)"),
        (6, "(1 2 3)(4 5 6)"),
        (6, "(1 2)(3 4)(5 6)"),
        (6, "(1 2 3 4 5 6)"),
    ];
    specs
        .iter()
        .map(|&(n, gens)| (format!("<{gens}> in S{n}"), group(n, gens)))
        .collect()
}

fn stratification_depth() -> Outcome {
    for n in 1..=6 {
        let sn = symmetric_group(n).map_err(|e| e.to_string())?;
        let dep = depth(&sn).map_err(|e| e.to_string())?;
        ensure(dep == n - 1, || {
            format!("depth(S{n}) = {dep}, expected {}", n - 1)
        })?;
    }
    let s3 = symmetric_group(3).map_err(|e| e.to_string())?;
    let regular = s3.regular_representation().map_err(|e| e.to_string())?;
    let dep = depth(&regular).map_err(|e| e.to_string())?;
    let len = group_length(&s3).map_err(|e| e.to_string())?;
    ensure(dep == 2 && len == 2, || {
        format!("regular S3: depth {dep}, length {len}")
    })?;
    for n in 1..=10usize {
        let expected = (3 * n - 1) / 2 - n.count_ones() as usize;
        let got = length_sn(n).map_err(|e| e.to_string())?;
        ensure(got == expected, || {
            format!("length(S{n}) = {got}, expected {expected}")
        })?;
    }
    for n in 1..=5 {
        let sn = symmetric_group(n).map_err(|e| e.to_string())?;
        let brute = group_length(&sn).map_err(|e| e.to_string())?;
        let table = length_sn(n).map_err(|e| e.to_string())?;
        ensure(brute == table, || {
            format!("subgroup search for S{n}: {brute} vs {table}")
        })?;
    }
    for (label, g) in small_group_battery() {
        let dep = depth(&g).map_err(|e| e.to_string())?;
        let len = group_length(&g).map_err(|e| e.to_string())?;
        ensure(dep <= len, || {
            format!("{label}: depth {dep} > length {len}")
        })?;
    }
    Ok(())
}

/// Transitive subgroups found by closing random generator pairs.
fn transitive_groups(max_degree: usize) -> Vec<PermutationGroupModel> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut found = Vec::new();
    for n in 1..=max_degree {
        found.push(cyclic_group(n).unwrap());
        for _ in 0..40 {
            let gens: Vec<Permutation> = (0..2)
                .map(|_| {
                    let mut images: Vec<usize> = (0..n).collect();
                    images.shuffle(&mut rng);
                    Permutation::from_images(images).unwrap()
                })
                .collect();
            let g = enumerate_group(n, &gens).unwrap();
            if g.is_transitive() {
                found.push(g);
            }
        }
    }
    found
}

fn expected_pi1_bd(n: usize, d: usize) -> GroupExpression {
    // One point of multiplicity > n/2 forces B_d = X x SP^(n-d) X.
    match (2 * d <= n, n - d) {
        (true, _) => GroupExpression::exact(0, 1),
        (false, 0) => GroupExpression::exact(1, 0),
        (false, 1) => GroupExpression::exact(2, 0),
        (false, _) => GroupExpression::exact(1, 1),
    }
}

fn fundamental_groups() -> Outcome {
    let spaces: Vec<_> = [
        "surface:2",
        "torus",
        "wedge_circles:2",
        "projective_plane",
        "sphere:2",
    ]
    .iter()
    .map(|s| preset(s).unwrap())
    .collect();
    let opaque = &spaces[0];
    for g in transitive_groups(6) {
        for x in &spaces {
            let expr = pi1_gamma_product(x, &g).map_err(|e| e.to_string())?;
            let want = if g.degree() == 1 {
                GroupExpression::exact(1, 0).normalized(x)
            } else {
                GroupExpression::exact(0, 1)
            };
            ensure(expr == want, || {
                format!("transitive degree {} on {}: {expr}", g.degree(), x.name)
            })?;
        }
    }
    let first = pi1_gamma_product(opaque, &group(4, "(1 2)")).map_err(|e| e.to_string())?;
    let second = pi1_gamma_product(opaque, &group(4, "(1 3)(2 4)")).map_err(|e| e.to_string())?;
    ensure(first == GroupExpression::exact(2, 1), || {
        format!("<(1 2)>: {first}")
    })?;
    ensure(second == GroupExpression::exact(0, 2), || {
        format!("<(1 3)(2 4)>: {second}")
    })?;
    ensure(first != second, || "embeddings agree".into())?;
    for n in 1..=8 {
        for d in 1..=n {
            for x in &spaces {
                let got = pi1_bd(x, n, d).map_err(|e| e.to_string())?;
                let want = expected_pi1_bd(n, d).normalized(x);
                ensure(got == want, || {
                    format!("pi1 B_{d}({}, {n}): {got}, expected {want}", x.name)
                })?;
            }
        }
    }
    Ok(())
}

fn partitions() -> Outcome {
    let bell = [1u64, 1, 2, 5, 15, 52, 203, 877, 4140];
    for n in 0..=8 {
        let mut total = 0u64;
        let mut by_type: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
        let mut blocks = vec![0usize; n + 1];
        for p in set_partitions(n).map_err(|e| e.to_string())? {
            total += 1;
            blocks[p.num_blocks()] += 1;
            *by_type.entry(p.alpha().alpha().to_vec()).or_default() += 1;
            let alpha = p.alpha();
            ensure(alpha.n() == n, || format!("{p} has wrong size"))?;
        }
        ensure(total == bell[n], || format!("Bell({n}) = {total}"))?;
        for p in set_partitions(n).map_err(|e| e.to_string())? {
            let alpha = p.alpha();
            let counted = by_type[&alpha.alpha().to_vec()];
            same(
                &format!("type {alpha}"),
                &count_set_partitions_of_type(&alpha),
                &ExactInt::from(counted),
            )?;
        }
        for c in -5..=5 {
            let chi = int(c);
            let sum: ExactInt = blocks
                .iter()
                .enumerate()
                .map(|(k, &count)| falling_factorial(&chi, k) * ExactInt::from(count))
                .sum();
            same(
                &format!("sum of falling({c}, |P|) for n={n}"),
                &sum,
                &pow(&chi, n),
            )?;
        }
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 10] = [
        (
            "1 symmetric product vs Burnside average",
            Duration::from_secs(5),
            macdonald_burnside,
        ),
        (
            "2 three-way B_d agreement",
            Duration::from_secs(60),
            three_way_bd,
        ),
        (
            "3 corrected F_d formula",
            Duration::from_secs(10),
            corrected_fd,
        ),
        (
            "4 invariant Poincare fixtures",
            Duration::from_secs(5),
            invariant_fixtures,
        ),
        (
            "5 sphere fat-diagonal fixtures",
            Duration::from_secs(5),
            sphere_fixtures,
        ),
        (
            "6 complement and product identities",
            Duration::from_secs(60),
            complement_and_product,
        ),
        (
            "7 graph configuration spaces",
            Duration::from_secs(120),
            graph_configurations,
        ),
        (
            "8 stratification depth and length",
            Duration::from_secs(120),
            stratification_depth,
        ),
        (
            "9 fundamental group descriptors",
            Duration::from_secs(5),
            fundamental_groups,
        ),
        (
            "10 partition infrastructure",
            Duration::from_secs(10),
            partitions,
        ),
    ];
    let mut failures = Vec::new();
    for (name, budget, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(elapsed <= budget, || {
                format!("took {elapsed:?}, budget {budget:?}")
            })
        });
        match outcome {
            Ok(()) => println!("PASS criterion {name} ({} ms)", elapsed.as_millis()),
            Err(msg) => {
                println!("FAIL criterion {name} ({} ms): {msg}", elapsed.as_millis());
                failures.push(name);
            }
        }
    }
    if !failures.is_empty() {
        eprintln!("failed criteria: {failures:?}");
        std::process::exit(1);
    }
}
