//! Decide existence of invariant symplectic pairs on four-dimensional
//! algebras from the signature of the wedge pairing on closed 2-forms, and
//! print a witness or an absence certificate. Pass catalog names to choose
//! the algebras.

use sympair::lie::Catalog;
use sympair::search::{self, PairSearch};

fn main() -> sympair::Result<()> {
    let catalog = Catalog::standard();
    let mut names: Vec<String> = std::env::args().skip(1).collect();
    if names.is_empty() {
        names = ["abelian4", "nil3xR", "nil4", "sol3xR", "sl2xR", "sol4_0", "sol4_1", "sol_mn(1,2,-3)", "aff_c"]
            .map(String::from)
            .to_vec();
    }
    for name in names {
        let g = catalog.get(&name)?.algebra;
        let gram = search::wedge_gram(&g)?;
        let sig = gram.signature();
        print!("{name:>15}: {} closed 2-forms, signature {:?} -> ", gram.dim(), sig.as_array());
        match search::construct_pair_witness(&g)? {
            PairSearch::Witness(w) => {
                let field = w.radicand.map_or("Q".to_string(), |d| format!("Q(sqrt {d})"));
                println!("pair ({}, {}) over {field}", w.omega1, w.omega2);
            }
            PairSearch::Absent(c) => println!("no pair ({:?})", c.kind),
        }
        let oracle = search::brute_force_oracle(&g, 7, 200)?;
        if oracle != sig.is_indefinite() {
            println!("    random search disagrees (found {oracle})");
        }
    }
    Ok(())
}
