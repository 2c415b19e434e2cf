//! Lift each model pair through one and two central extensions, and check
//! that extending by both forms at once gives the same six-dimensional
//! algebra.

use sympair::boothby_wang::{bw_contact_pair_from_cs, bw_contact_symplectic, torus_extension};
use sympair::lie::catalog_get;

fn main() -> sympair::Result<()> {
    for name in ["sol3xR", "nil4", "nil3xR", "abelian4"] {
        let entry = catalog_get(name)?;
        let (w1, w2) = entry.pair.expect("model pair");
        let g = entry.algebra;

        let cs = bw_contact_symplectic(&g, &w1, &w2)?;
        let cp = bw_contact_pair_from_cs(&cs.extension.total, &cs.alpha, &cs.beta)?;
        let torus = torus_extension(&g, &w1, &w2)?;
        let agrees = torus.total.constants() == cp.extension.total.constants();

        println!("{name}:");
        println!(
            "  dim 5: alpha = {}, beta = {}, class of alpha {:?}, valid {}",
            cs.alpha, cs.beta, cs.report.k, cs.report.verdict
        );
        println!(
            "  dim 6: alpha = {}, gamma = {}, classes {:?}/{:?}, valid {}",
            cp.alpha, cp.gamma, cp.report.k, cp.report.l, cp.report.verdict
        );
        println!("  torus extension agrees: {agrees}, betti {:?}", torus.total.cohomology_dims());
        for a in &cs.extension.assumptions {
            println!("  assumes: {a}");
        }
    }
    Ok(())
}
