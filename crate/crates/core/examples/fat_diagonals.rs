//! Fat diagonals B_d, F_d and their complements B^d, with every value checked
//! against the combinatorial oracles. Also shows why the ordered formula needs
//! the set-partition coefficient.

use fatdiag::eulerchar::{
    chi_b_upper, chi_bd, chi_bd_by_strata, chi_fd, chi_fd_without_multiplicity, oracle_bd_burnside,
    oracle_fd_setpartitions,
};
use fatdiag::ExactInt;

fn main() -> fatdiag::Result<()> {
    let chi = ExactInt::from(2);
    println!("sphere:2, n = 5");
    println!("{:>3} {:>8} {:>8} {:>8}", "d", "B_d", "F_d", "B^d");
    for d in 2..=5 {
        let bd = chi_bd(&chi, 5, d)?;
        let fd = chi_fd(&chi, 5, d)?;
        assert_eq!(bd, chi_bd_by_strata(&chi, 5, d)?);
        assert_eq!(bd, oracle_bd_burnside(&chi, 5, d)?);
        assert_eq!(fd, oracle_fd_setpartitions(&chi, 5, d)?);
        println!("{d:>3} {bd:>8} {fd:>8} {:>8}", chi_b_upper(&chi, 5, d)?);
    }

    let without = chi_fd_without_multiplicity(&chi, 3, 3)?;
    let with = chi_fd(&chi, 3, 3)?;
    println!();
    println!("F_3(S^2, 3) is the thin diagonal, a copy of S^2 with chi = 2.");
    println!("  dropping the partition-count coefficient gives {without}");
    println!("  with the coefficient                         {with}");
    Ok(())
}
