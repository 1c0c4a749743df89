//! Rational Betti numbers of `X^n / G` as the `G`-invariant part of
//! `H_*(X; Q)^{(x) n}`, where permuting tensor factors carries the Koszul sign.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::{exact_div, ExactInt, GradedPolynomial};
use crate::error::{Error, Result};
use crate::permgroup::{CycleType, PermutationGroupModel};

/// Graded trace of an `l`-cycle on `V^{(x) l}` when `V` has Poincaré series `P`:
/// `P_even(t^l) + (-1)^{l-1} P_odd(t^l)`.
pub fn graded_trace_cycle(p: &GradedPolynomial, cycle_len: usize) -> GradedPolynomial {
    assert!(cycle_len >= 1, "cycle length must be positive");
    let (even, odd) = p.split_parity();
    let odd = odd.substitute_power(cycle_len);
    let odd = if cycle_len.is_multiple_of(2) {
        odd.scale(&ExactInt::from(-1))
    } else {
        odd
    };
    &even.substitute_power(cycle_len) + &odd
}

fn graded_trace(p: &GradedPolynomial, cycle_type: &CycleType) -> GradedPolynomial {
    cycle_type
        .counts()
        .iter()
        .enumerate()
        .filter(|(_, &count)| count > 0)
        .fold(GradedPolynomial::one(), |acc, (i, &count)| {
            &acc * &graded_trace_cycle(p, i + 1).pow(count)
        })
}

/// Poincaré polynomial of `X^n / G` over `Q`, averaging graded traces over `G`.
///
/// Fails with [`Error::InternalConsistency`] if the average is not a
/// polynomial with non-negative integer coefficients.
pub fn invariant_poincare(
    p: &GradedPolynomial,
    group: &PermutationGroupModel,
) -> Result<GradedPolynomial> {
    if !p.has_non_negative_coeffs() {
        return Err(Error::invalid(format!("{p} is not a Poincaré polynomial")));
    }
    let mut by_type: BTreeMap<CycleType, usize> = BTreeMap::new();
    for g in group.elements() {
        *by_type.entry(g.cycle_type()).or_default() += 1;
    }
    let mut sum = GradedPolynomial::zero();
    for (cycle_type, count) in &by_type {
        sum = &sum + &graded_trace(p, cycle_type).scale(&ExactInt::from(*count));
    }
    let order = ExactInt::from(group.order());
    let mut out = GradedPolynomial::zero();
    for (deg, c) in sum.terms() {
        let b = exact_div(c, &order, "invariant Betti number")?;
        if b < ExactInt::zero() {
            return Err(Error::InternalConsistency(format!(
                "negative invariant Betti number {b} in degree {deg}"
            )));
        }
        out.add_term(deg, b);
    }
    Ok(out)
}

/// Poincaré polynomial of `SP^n X` over `Q`: the coefficient of `q^n` in
/// `prod_k (1 + q t^k)^{b_k}` (odd `k`) times `(1 - q t^k)^{-b_k}` (even `k`).
pub fn macdonald_poincare_sp(p: &GradedPolynomial, n: usize) -> GradedPolynomial {
    let mut series = vec![GradedPolynomial::zero(); n + 1];
    series[0] = GradedPolynomial::one();
    for (deg, b) in p.terms() {
        let copies: usize = b
            .try_into()
            .expect("Betti numbers are small non-negative integers");
        let shift = GradedPolynomial::monomial(deg, ExactInt::from(1));
        for _ in 0..copies {
            if deg % 2 == 1 {
                // multiply by (1 + q t^deg): exterior factor
                for j in (1..=n).rev() {
                    let term = &shift * &series[j - 1];
                    series[j] = &series[j] + &term;
                }
            } else {
                // divide by (1 - q t^deg): symmetric factor
                for j in 1..=n {
                    let term = &shift * &series[j - 1];
                    series[j] = &series[j] + &term;
                }
            }
        }
    }
    series.swap_remove(n)
}
