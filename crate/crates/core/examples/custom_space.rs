//! Spaces beyond the presets: products, wedges, and JSON descriptions.

use fatdiag::eulerchar::{chi_bd, chi_sp};
use fatdiag::fundgroup::pi1_bd;
use fatdiag::invariants::macdonald_poincare_sp;
use fatdiag::spaces::{from_json, parse_space};

fn main() -> fatdiag::Result<()> {
    let spaces = [
        parse_space("sphere:2 x circle")?,
        parse_space("torus v sphere:2")?,
        from_json(
            r#"{"name":"lens space L(5,1)","betti":[1,0,0,1],"h1":{"rank":0,"torsion":[5]},"pi1":"abelian","parity":"odd"}"#,
        )?,
    ];
    for x in &spaces {
        println!(
            "{} : betti {:?}, chi {}, H1 = {}",
            x.name,
            x.betti,
            x.euler(),
            x.h1
        );
        println!(
            "  chi SP^3 = {}, chi B_2(X,4) = {}",
            chi_sp(&x.euler(), 3),
            chi_bd(&x.euler(), 4, 2)?
        );
        println!("  P(SP^2) = {}", macdonald_poincare_sp(&x.poincare(), 2));
        println!("  pi_1 B_3(X,4) = {}", pi1_bd(x, 4, 3)?.describe(x).text);
    }
    Ok(())
}
