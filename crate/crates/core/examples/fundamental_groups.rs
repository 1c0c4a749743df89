//! Fundamental groups of permutation products and of B_d(X, n).

use fatdiag::fundgroup::{pi1_bd, pi1_bgamma_abelian, pi1_gamma_product};
use fatdiag::permgroup::{enumerate_group, parse_generators, symmetric_group};
use fatdiag::spaces::preset;

fn main() -> fatdiag::Result<()> {
    let x = preset("surface:2")?;
    for gens in ["(1 2)", "(1 3)(2 4)", "(1 2 3 4)", ""] {
        let g = enumerate_group(4, &parse_generators(4, gens)?)?;
        println!("<{gens}> in S4: {}", pi1_gamma_product(&x, &g)?);
    }
    println!();
    for d in 1..=6 {
        println!("pi_1 B_{d}(X, 6) = {}", pi1_bd(&x, 6, d)?);
    }
    println!();
    let s6 = symmetric_group(6)?;
    for d in 1..=3 {
        println!("F_{d}(X,6)/S6 abelian: {}", pi1_bgamma_abelian(&s6, 6, d)?);
    }
    Ok(())
}
