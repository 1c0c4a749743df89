//! Euler characteristics of symmetric and permutation products, fat diagonals
//! `B_d(X,n)`, `F_d(X,n)`, and the complements `B^d(X,n)`.
//!
//! Every function takes `chi = chi(X)` directly; callers holding a
//! [`SpaceModel`](crate::spaces::SpaceModel) choose whether the formula applies
//! to it (see [`SpaceModel::even_manifold_euler`](crate::spaces::SpaceModel::even_manifold_euler)).
//!
//! The closed formulas here are cross-checked against the brute-force sums in
//! [`oracles`], which never call back into this module.

pub mod oracles;

pub use oracles::{oracle_bd_burnside, oracle_fd_setpartitions};

use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::{
    binomial_gen, exact_div, factorial, falling_factorial, pow, rational_to_int, ExactInt,
};
use crate::combinatorics::{alpha_sequences, count_set_partitions_of_type, AlphaSequence};
use crate::error::{Error, Result};
use crate::permgroup::PermutationGroupModel;
use crate::spaces::Parity;

fn check_fat_range(n: usize, d: usize) -> Result<()> {
    if d < 2 || d > n {
        return Err(Error::invalid(format!(
            "fat diagonal needs 2 <= d <= n (got n={n}, d={d})"
        )));
    }
    Ok(())
}

/// `chi(SP^n X)`: the coefficient of `q^n` in `(1-q)^(-chi)`.
pub fn chi_sp(chi: &ExactInt, n: usize) -> ExactInt {
    binomial_gen(&(chi + n - 1u32), n)
}

/// `chi(X^n / G)` as the average of `chi^{c(sigma)}` over `sigma` in `G`,
/// where `c` counts cycles (fixed points included).
pub fn chi_gamma_product(chi: &ExactInt, group: &PermutationGroupModel) -> Result<ExactInt> {
    let powers: Vec<ExactInt> = (0..=group.degree()).map(|k| pow(chi, k)).collect();
    let total: ExactInt = group
        .elements()
        .iter()
        .map(|g| &powers[g.cycle_count()])
        .sum();
    let average = BigRational::new(total, ExactInt::from(group.order()));
    rational_to_int(&average, "Lefschetz average over the group")
}

/// `chi(F(X,k))` for the ordered configuration space of a closed `m`-manifold:
/// `prod_{j<k} (chi + j(-1)^{m-1})`.
pub fn chi_f_config(chi: &ExactInt, k: usize, parity: Parity) -> Result<ExactInt> {
    let step: i64 = match parity {
        Parity::Even => -1,
        Parity::Odd => 1,
        Parity::None => {
            return Err(Error::unsupported(
                "configuration-space formula needs a manifold parity",
            ))
        }
    };
    Ok((0..k as i64).fold(ExactInt::from(1), |acc, j| acc * (chi + j * step)))
}

/// `chi(F_d(X,n))`, the ordered fat diagonal where at least `d` coordinates agree:
/// `chi^n - sum_alpha M(alpha) (chi)_{|alpha|}` over block types with all
/// blocks smaller than `d`, where `M(alpha)` counts set partitions of that type.
pub fn chi_fd(chi: &ExactInt, n: usize, d: usize) -> Result<ExactInt> {
    check_fat_range(n, d)?;
    let complement: ExactInt = alpha_sequences(n, d - 1)
        .iter()
        .map(|a| count_set_partitions_of_type(a) * falling_factorial(chi, a.num_parts()))
        .sum();
    Ok(pow(chi, n) - complement)
}

/// The ordered fat-diagonal expression with every type coefficient set to 1.
///
/// Kept only to show where it parts ways with [`chi_fd`]: the two agree for
/// `d = 2` and differ in general, e.g. `n = d = 3`, `chi = 2` gives 6 here
/// while `F_3(X,3) = X` has Euler characteristic 2.
pub fn chi_fd_without_multiplicity(chi: &ExactInt, n: usize, d: usize) -> Result<ExactInt> {
    check_fat_range(n, d)?;
    let complement: ExactInt = alpha_sequences(n, d - 1)
        .iter()
        .map(|a| falling_factorial(chi, a.num_parts()))
        .sum();
    Ok(pow(chi, n) - complement)
}

/// `sum_alpha (chi)_{|alpha|} / prod alpha_i!` over `alpha` with parts at most `max_part`.
fn unordered_type_sum(chi: &ExactInt, n: usize, max_part: usize) -> Result<ExactInt> {
    let total = alpha_sequences(n, max_part)
        .iter()
        .fold(BigRational::zero(), |acc, a| {
            acc + BigRational::new(
                falling_factorial(chi, a.num_parts()),
                a.multiplicity_factorial(),
            )
        });
    rational_to_int(&total, "unordered stratum sum")
}

/// `chi(B_d(X,n))`, unordered configurations with some point of multiplicity `>= d`.
pub fn chi_bd(chi: &ExactInt, n: usize, d: usize) -> Result<ExactInt> {
    check_fat_range(n, d)?;
    Ok(chi_sp(chi, n) - unordered_type_sum(chi, n, d - 1)?)
}

/// `chi(F_2(X,n)) = chi^n - (chi)_n`.
pub fn chi_f2(chi: &ExactInt, n: usize) -> Result<ExactInt> {
    check_fat_range(n, 2)?;
    Ok(pow(chi, n) - falling_factorial(chi, n))
}

/// `chi(B_2(X,n)) = chi(SP^n X) - (chi)_n / n!`.
pub fn chi_b2(chi: &ExactInt, n: usize) -> Result<ExactInt> {
    check_fat_range(n, 2)?;
    let free = exact_div(
        &falling_factorial(chi, n),
        &factorial(n),
        "unordered configurations",
    )?;
    Ok(chi_sp(chi, n) - free)
}

/// `chi(B^d(X,n))`, unordered configurations where no point repeats more than
/// `d` times. Only meaningful for even-dimensional closed manifolds.
pub fn chi_b_upper(chi: &ExactInt, n: usize, d: usize) -> Result<ExactInt> {
    if d < 1 || d > n {
        return Err(Error::invalid(format!(
            "B^d needs 1 <= d <= n (got n={n}, d={d})"
        )));
    }
    unordered_type_sum(chi, n, d)
}

/// Euler characteristic of the stratum of `SP^n X` where the multiplicities
/// of the distinct points form the partition `alpha`:
/// `(chi)_{|alpha|} / prod alpha_i!`.
pub fn chi_stratum(chi: &ExactInt, alpha: &AlphaSequence) -> Result<ExactInt> {
    exact_div(
        &falling_factorial(chi, alpha.num_parts()),
        &alpha.multiplicity_factorial(),
        "stratum Euler characteristic",
    )
}

/// `chi(B_d(X,n))` computed as `chi(SP^n X)` minus the strata whose
/// multiplicities are all below `d`, each stratum evaluated on its own.
pub fn chi_bd_by_strata(chi: &ExactInt, n: usize, d: usize) -> Result<ExactInt> {
    check_fat_range(n, d)?;
    let mut outside = ExactInt::zero();
    for alpha in alpha_sequences(n, n) {
        if alpha.max_part() < d {
            outside += chi_stratum(chi, &alpha)?;
        }
    }
    Ok(chi_sp(chi, n) - outside)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::{enumerate_group, parse_generators, symmetric_group, trivial_group};

    fn int(v: i64) -> ExactInt {
        ExactInt::from(v)
    }

    #[test]
    fn chi_sp_examples() {
        // (1/24) sum over S_4 of 2^{c(sigma)}: 16 + 6*8 + 3*4 + 8*4 + 6*2 = 120
        assert_eq!(chi_sp(&int(2), 4), int(5));
        for n in 1..10 {
            assert_eq!(chi_sp(&int(0), n), int(0));
            assert_eq!(chi_sp(&int(1), n), int(1));
        }
        assert_eq!(chi_sp(&int(0), 0), int(1));
    }

    #[test]
    fn chi_gamma_examples() {
        for n in 0..5 {
            assert_eq!(
                chi_gamma_product(&int(3), &trivial_group(n)).unwrap(),
                pow(&int(3), n)
            );
        }
        let z3 = enumerate_group(3, &parse_generators(3, "(1 2 3)").unwrap()).unwrap();
        assert_eq!(chi_gamma_product(&int(2), &z3).unwrap(), int(4));
        for n in 1..=6 {
            let sn = symmetric_group(n).unwrap();
            for chi in -3..=3 {
                assert_eq!(
                    chi_gamma_product(&int(chi), &sn).unwrap(),
                    chi_sp(&int(chi), n)
                );
            }
        }
    }

    #[test]
    fn configuration_space_examples() {
        assert_eq!(chi_f_config(&int(2), 2, Parity::Even).unwrap(), int(2));
        assert_eq!(chi_f_config(&int(-7), 1, Parity::Odd).unwrap(), int(-7));
        assert_eq!(chi_f_config(&int(-7), 1, Parity::Even).unwrap(), int(-7));
        assert_eq!(chi_f_config(&int(0), 3, Parity::Odd).unwrap(), int(0));
        assert!(matches!(
            chi_f_config(&int(1), 2, Parity::None),
            Err(Error::UnsupportedSpace(_))
        ));
    }

    #[test]
    fn chi_fd_examples() {
        for chi in -4..=4 {
            let c = int(chi);
            assert_eq!(chi_fd(&c, 3, 2).unwrap(), int(3 * chi * chi - 2 * chi));
            for n in 2..=7 {
                assert_eq!(chi_fd(&c, n, n).unwrap(), c);
            }
        }
        assert_eq!(chi_fd(&int(2), 4, 3).unwrap(), int(10));
        assert!(chi_fd(&int(2), 3, 1).is_err());
        assert!(chi_fd(&int(2), 3, 4).is_err());
    }

    #[test]
    fn multiplicity_free_expression_differs() {
        assert_eq!(chi_fd_without_multiplicity(&int(2), 3, 3).unwrap(), int(6));
        assert_eq!(chi_fd(&int(2), 3, 3).unwrap(), int(2));
        for n in 2..=7 {
            for chi in -3..=3 {
                assert_eq!(
                    chi_fd_without_multiplicity(&int(chi), n, 2).unwrap(),
                    chi_fd(&int(chi), n, 2).unwrap()
                );
            }
        }
    }

    #[test]
    fn chi_bd_examples() {
        for n in 2..=7 {
            for d in 2..=n {
                assert_eq!(chi_bd(&int(0), n, d).unwrap(), int(0));
            }
        }
        assert_eq!(chi_bd(&int(2), 4, 2).unwrap(), int(5));
        assert_eq!(chi_bd(&int(2), 5, 2).unwrap(), int(6));
        assert_eq!(chi_bd(&int(2), 5, 3).unwrap(), int(6));
    }

    #[test]
    fn d_equals_two_closed_forms() {
        assert_eq!(chi_f2(&int(2), 3).unwrap(), int(8));
        assert_eq!(chi_b2(&int(2), 4).unwrap(), int(5));
        for n in 2..=8 {
            for chi in 0..n as i64 {
                assert_eq!(chi_f2(&int(chi), n).unwrap(), pow(&int(chi), n));
            }
            for chi in -5..=5 {
                let c = int(chi);
                assert_eq!(chi_f2(&c, n).unwrap(), chi_fd(&c, n, 2).unwrap());
                assert_eq!(chi_b2(&c, n).unwrap(), chi_bd(&c, n, 2).unwrap());
            }
        }
        assert!(chi_b2(&int(2), 1).is_err());
    }

    #[test]
    fn b_upper_examples() {
        assert_eq!(chi_b_upper(&int(2), 2, 1).unwrap(), int(1));
        assert_eq!(chi_b_upper(&int(2), 3, 2).unwrap(), int(2));
        for n in 1..=7 {
            for chi in -3..=3 {
                assert_eq!(chi_b_upper(&int(chi), n, n).unwrap(), chi_sp(&int(chi), n));
            }
        }
        assert!(chi_b_upper(&int(2), 3, 0).is_err());
    }

    #[test]
    fn stratum_examples() {
        for n in 1..=6 {
            let mut one_block = vec![0; n];
            one_block[n - 1] = 1;
            assert_eq!(
                chi_stratum(&int(5), &AlphaSequence::new(one_block)).unwrap(),
                int(5)
            );
        }
        for n in 3..=6 {
            assert_eq!(
                chi_stratum(&int(2), &AlphaSequence::new(vec![n])).unwrap(),
                int(0)
            );
        }
        assert_eq!(
            chi_stratum(&int(3), &AlphaSequence::new(vec![1, 1])).unwrap(),
            int(6)
        );
    }

    #[test]
    fn complement_and_product_identities() {
        for n in 1..=8 {
            for chi in -4..=4 {
                let c = int(chi);
                for d in 1..n {
                    assert_eq!(
                        chi_b_upper(&c, n, d).unwrap() + chi_bd(&c, n, d + 1).unwrap(),
                        chi_sp(&c, n)
                    );
                }
                if n >= 3 {
                    for d in (n / 2 + 1)..=n {
                        assert_eq!(chi_bd(&c, n, d).unwrap(), &c * chi_sp(&c, n - d));
                    }
                }
            }
        }
    }
}
