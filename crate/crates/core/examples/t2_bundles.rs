//! Classify T^2-bundles over T^2 in table normal form, and enumerate small
//! monodromies to show that the rows never overlap.

use std::collections::BTreeMap;

use sympair::fourman::{classify_t2_bundle, matching_rows, T2BundleData, FLAT_B1_TWO};

fn main() -> sympair::Result<()> {
    let i = [[1, 0], [0, 1]];
    let mi = [[-1, 0], [0, -1]];
    let mut examples = vec![
        (i, i, (0, 0)),
        (i, i, (0, 1)),
        ([[1, 1], [0, 1]], i, (0, 1)),
        ([[-1, 2], [0, -1]], i, (1, 0)),
        ([[1, 1], [0, 1]], mi, (0, 0)),
        ([[2, 1], [1, 1]], i, (0, 0)),
        ([[3, 1], [-1, 0]], mi, (0, 1)),
    ];
    examples.extend(FLAT_B1_TWO.iter().map(|&(c, e)| (c, i, e)));
    for (c, d, e) in examples {
        let cls = classify_t2_bundle(&T2BundleData::new(c, d, e, None)?)?;
        println!(
            "C={c:?} D={} e={e:?}: row {} b1={} {}{}",
            if d == i { "I" } else { "-I" },
            cls.row,
            cls.b1,
            cls.geometry,
            if cls.coordinate_forms { " (coordinate forms)" } else { "" }
        );
    }

    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    let r = -3..=3;
    for a in r.clone() {
        for b in r.clone() {
            for c in r.clone() {
                for d in r.clone() {
                    for dm in [i, mi] {
                        for m in r.clone() {
                            for n in r.clone() {
                                if let Ok(data) = T2BundleData::new([[a, b], [c, d]], dm, (m, n), None) {
                                    *counts.entry(matching_rows(&data).len()).or_default() += 1;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    println!("\ninputs by number of matching rows: {counts:?}");
    Ok(())
}
