//! Orbit-type stratification of X^n / G: stabilizer classes, depth, and the
//! subgroup-chain length that bounds it.

use fatdiag::permgroup::{enumerate_group, parse_generators, symmetric_group};
use fatdiag::strata::{depth, group_length, length_sn, stabilizer_class_poset};

fn main() -> fatdiag::Result<()> {
    let d4 = enumerate_group(4, &parse_generators(4, "(1 2 3 4); (1 3)")?)?;
    let poset = stabilizer_class_poset(&d4)?;
    println!("dihedral group of order 8 acting on 4 points");
    for c in &poset.classes {
        println!(
            "  stabilizer order {:>2}, {} conjugates, pattern {}",
            c.order, c.conjugates, c.pattern
        );
    }
    println!("  depth {}, length {}", depth(&d4)?, group_length(&d4)?);
    println!();
    for n in 1..=6 {
        let sn = symmetric_group(n)?;
        println!("S{n}: depth {}, length {}", depth(&sn)?, length_sn(n)?);
    }
    let regular = symmetric_group(3)?.regular_representation()?;
    println!(
        "S3 acting regularly on 6 points: depth {}",
        depth(&regular)?
    );
    Ok(())
}
