//! Chevalley–Eilenberg Betti numbers of the catalog algebras and of central
//! extensions, comparing the first Betti number with its prediction.

use sympair::boothby_wang::{central_extension, predicted_b1};
use sympair::exterior::basis_form;
use sympair::lie::Catalog;

fn main() -> sympair::Result<()> {
    let catalog = Catalog::standard();
    for entry in catalog.entries() {
        println!(
            "{:>10}: betti {:?}, unimodular {}",
            entry.name,
            entry.algebra.cohomology_dims(),
            entry.algebra.is_unimodular()
        );
    }
    for (name, idx) in [("abelian4", [1, 2]), ("nil3xR", [1, 2]), ("nil4", [1, 4]), ("nil4", [3, 4])] {
        let g = catalog.get(name)?.algebra;
        let w = basis_form(4, &idx);
        if !g.is_closed(&w)? {
            println!("{name} by a{}^a{}: not closed", idx[0], idx[1]);
            continue;
        }
        let ext = central_extension(&g, &w)?;
        println!(
            "{name} by a{}^a{}: exact {}, b1 {} (predicted {})",
            idx[0],
            idx[1],
            g.is_exact(&w)?,
            ext.total.cohomology_dims()[1],
            predicted_b1(&g, &w)?
        );
    }
    Ok(())
}
