//! Run every worked example against the standard catalog, then against a
//! catalog with one structure constant negated.

use sympair::lie::Catalog;
use sympair::reproduce::{flip_constant, reproduce};

fn main() {
    let catalog = Catalog::standard();
    let report = reproduce(&catalog);
    for c in &report.checks {
        println!("[{}] {}", if c.pass { "pass" } else { "FAIL" }, c.name);
    }
    println!("{} passed, {} failed", report.passed, report.failed);

    let broken = flip_constant(&catalog, "sol3xR", 1, 4, 1).expect("entry exists");
    let report = reproduce(&broken);
    println!("\nwith c_14^1 of sol3xR negated:");
    for c in report.failures() {
        println!("  {}: {}", c.name, c.detail);
    }
}
