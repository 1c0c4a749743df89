//! Euler characteristics of SP^n X, compared with the Burnside average over S_n.

use fatdiag::eulerchar::{chi_gamma_product, chi_sp};
use fatdiag::permgroup::symmetric_group;
use fatdiag::spaces::preset;

fn main() -> fatdiag::Result<()> {
    for name in ["sphere:2", "torus", "surface:2", "projective_plane"] {
        let x = preset(name)?;
        let chi = x.euler();
        print!("{name:>18} (chi = {chi}):");
        for n in 1..=6 {
            let value = chi_sp(&chi, n);
            assert_eq!(value, chi_gamma_product(&chi, &symmetric_group(n)?)?);
            print!(" {value}");
        }
        println!();
    }
    Ok(())
}
