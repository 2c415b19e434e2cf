//! Verify the stated invariant pairs on the four model algebras, then show
//! the per-axiom report for a pair that fails.

use sympair::exterior::basis_form;
use sympair::lie::catalog_get;
use sympair::pairs::{self, couple_type_on, pair_to_pm};

fn main() -> sympair::Result<()> {
    for name in ["sol3xR", "nil4", "nil3xR", "abelian4"] {
        let entry = catalog_get(name)?;
        let (w1, w2) = entry.pair.clone().expect("model algebras carry a pair");
        let report = pairs::check_symplectic_pair(&entry.algebra, &w1, &w2)?;
        let (plus, minus) = pair_to_pm(&w1, &w2)?;
        println!(
            "{name:>9}: ({w1}, {w2}) valid={} kernels={:?} couple={:?}",
            report.verdict,
            report.kernel_dims,
            couple_type_on(&entry.algebra, &plus, &minus)?
        );
    }

    // a1^a3 is not closed on nil4; the report still lists every axiom
    let g = catalog_get("nil4")?.algebra;
    let report = pairs::check_symplectic_pair(&g, &basis_form(4, &[1, 3]), &basis_form(4, &[2, 4]))?;
    println!("\nnil4 with (a1^a3, a2^a4): valid={}", report.verdict);
    for line in report.explanation() {
        println!("  {line}");
    }
    Ok(())
}
