//! Rational Betti numbers of X^n / G as G-invariants of H*(X)^{(x)n}.

use fatdiag::invariants::{invariant_poincare, macdonald_poincare_sp};
use fatdiag::permgroup::{cyclic_group, symmetric_group};
use fatdiag::spaces::preset;

fn main() -> fatdiag::Result<()> {
    let torus = preset("torus")?;
    let circle = preset("circle")?;
    println!(
        "(T^2)^3 / Z_3: {}",
        invariant_poincare(&torus.poincare(), &cyclic_group(3)?)?
    );
    println!(
        "(S^1)^3 / Z_3: {}",
        invariant_poincare(&circle.poincare(), &cyclic_group(3)?)?
    );
    let surface = preset("surface:2")?;
    for n in 1..=4 {
        let p = invariant_poincare(&surface.poincare(), &symmetric_group(n)?)?;
        assert_eq!(p, macdonald_poincare_sp(&surface.poincare(), n));
        println!("SP^{n} of genus 2: {p}");
    }
    Ok(())
}
