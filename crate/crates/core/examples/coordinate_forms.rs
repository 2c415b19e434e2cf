//! Polynomial forms on a chart of R^4: check the twisted and split pairs
//! exactly and on a sample grid, and the invariance of the twisted form
//! under the lattice generators.

use sympair::coordforms::{self, check_coordinate_pair, default_samples, display, invariance_check};

fn main() -> sympair::Result<()> {
    let samples = default_samples(4);
    for (label, (a, b)) in [("twisted", coordforms::twisted_pair()), ("split", coordforms::split_pair())] {
        let rep = check_coordinate_pair(&a, &b, &samples)?;
        println!("{label}: ({}, {})", display(&a), display(&b));
        println!(
            "  closed {:?}, squares vanish {:?}, product {}, ranks {:?}/{:?} on {} points, valid {}",
            rep.closed,
            rep.squares_vanish,
            rep.product_constant.map_or("not constant".into(), |c| format!("{c} vol")),
            rep.ranks[0].constant_rank(),
            rep.ranks[1].constant_rank(),
            rep.samples,
            rep.verdict
        );
    }

    let (_, b) = coordforms::twisted_pair();
    let gens = [coordforms::shear_map(), coordforms::unit_translation(4, 3), coordforms::unit_translation(4, 1)];
    for v in invariance_check(&b, &gens)? {
        println!("generator {}: invariant {}, pullback - form = {}", v.generator, v.invariant, display(&v.difference));
    }
    Ok(())
}
