//! Scan random four-dimensional Lie algebras for a wedge pairing on closed
//! 2-forms that is nonzero but semidefinite: such an algebra carries an
//! invariant symplectic form but no invariant symplectic pair.
//!
//! Usage: `cargo run --example definite_gram_search [seed] [trials]`

use sympair::lie::catalog_get;
use sympair::sampling::search_definite_gram;
use sympair::search;

fn main() {
    let mut args = std::env::args().skip(1);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(2024);
    let trials = args.next().and_then(|s| s.parse().ok()).unwrap_or(500);

    for unimodular in [true, false] {
        let scan = search_definite_gram(seed, trials, unimodular);
        println!("unimodular only: {unimodular}, {trials} algebras, seed {seed}");
        for (sig, count) in &scan.signatures {
            println!("  signature {sig}: {count}");
        }
        println!("  semidefinite hits: {}", scan.hits.len());
        for hit in scan.hits.iter().take(3) {
            println!("    {} {:?} unimodular={}", hit.family, hit.signature, hit.unimodular);
        }
    }

    let g = catalog_get("aff_c").expect("catalog").algebra;
    let gram = search::wedge_gram(&g).expect("dim 4");
    println!(
        "aff_c: signature {:?}, symplectic {}, pair {}",
        gram.signature().as_array(),
        search::has_invariant_symplectic(&g).unwrap(),
        search::has_invariant_symplectic_pair(&g).unwrap()
    );
}
