//! Two-point configuration spaces of graphs: Farber's formula against a count
//! of cells in the discretized configuration space.

use fatdiag::graphconf::{chi_graph, discretized_chi_f2, farber_chi_f2, Graph};

fn main() -> fatdiag::Result<()> {
    for name in ["gamma1", "gamma2", "path:3", "cycle:4", "star:3", "star:5"] {
        let g = Graph::fixture(name)?;
        let farber = farber_chi_f2(&g)?;
        let cells = discretized_chi_f2(&g)?;
        assert_eq!(farber, cells);
        println!(
            "{name:>7}: V={} E={} chi={:>2}  chi(F(G,2)) = {farber}",
            g.num_vertices(),
            g.num_edges(),
            chi_graph(&g)
        );
    }
    let json =
        r#"{"vertices":["a","b","c","d"],"edges":[["a","b"],["b","c"],["c","a"],["c","d"]]}"#;
    let g = Graph::from_json(json)?;
    println!("triangle with a tail: {}", farber_chi_f2(&g)?);
    Ok(())
}
