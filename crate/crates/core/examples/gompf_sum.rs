//! Glue two manifolds with symplectic pairs along leaves of equal genus and
//! read off the invariants of the sum, including the Pontryagin test for
//! Riemannian foliations.

use sympair::fourman::{gompf_feasible, gompf_invariants, pasternack_obstruction, LeafData, PairedManifoldDescriptor};
use sympair::Scalar;

fn surface_bundle(chi: i64, sigma: i64, p1_tf: i64, genus: u32, area: i64) -> PairedManifoldDescriptor {
    PairedManifoldDescriptor {
        euler_characteristic: chi,
        signature: sigma,
        p1_tf,
        p1_tg: 3 * sigma - p1_tf,
        leaves: vec![LeafData {
            genus,
            area: Scalar::int(area),
            trivial_normal_bundle: true,
            product_neighbourhood: true,
        }],
        chosen_leaf: 0,
    }
}

fn main() -> sympair::Result<()> {
    let x = surface_bundle(4, -4, -4, 2, 1);
    let y = surface_bundle(8, -8, -12, 2, 3);
    let f = gompf_feasible(&x, &y)?;
    println!("feasible {}, rescale second transverse form by {:?}", f.feasible, f.scale.map(|s| s.to_string()));

    let sum = gompf_invariants(&x, &y)?;
    let d = &sum.descriptor;
    println!(
        "sum along genus {}: chi {}, sigma {}, p1(TF) {}, p1(TG) {} [{}]",
        sum.genus, d.euler_characteristic, d.signature, d.p1_tf, d.p1_tg, sum.provenance
    );
    println!(
        "F Riemannian: {:?}, G Riemannian: {:?}",
        pasternack_obstruction(d.p1_tg, 2)?,
        pasternack_obstruction(d.p1_tf, 2)?
    );

    let z = surface_bundle(0, 0, 0, 3, 1);
    println!("genus mismatch: {:?}", gompf_feasible(&x, &z)?.reasons);
    Ok(())
}
