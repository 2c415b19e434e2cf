//! End-to-end checks of every worked example: catalog presentations, the
//! stated invariant pairs, nonexistence decisions, both Boothby–Wang lifts,
//! the coordinate pairs, the bundle table and first Betti numbers.
//!
//! Checks run against a caller-supplied [`Catalog`] so that a corrupted
//! catalog can be shown to fail at the right place.

use num_rational::BigRational;
use serde::Serialize;

use crate::boothby_wang;
use crate::coordforms;
use crate::error::Result;
use crate::exterior::basis_form;
use crate::fourman::{self, T2BundleData, FLAT_B1_TWO};
use crate::lie::{catalog, Catalog, LieAlgebra};
use crate::pairs;
use crate::search::{self, CertificateKind};

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub group: &'static str,
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReproduceReport {
    pub checks: Vec<Check>,
    pub passed: usize,
    pub failed: usize,
}

impl ReproduceReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

struct Runner<'a> {
    catalog: &'a Catalog,
    checks: Vec<Check>,
}

impl Runner<'_> {
    /// `f` returns `(pass, detail)`; an error counts as a failure.
    fn check(&mut self, group: &'static str, name: impl Into<String>, f: impl FnOnce() -> Result<(bool, String)>) {
        let (pass, detail) = f().unwrap_or_else(|e| (false, format!("error: {e}")));
        self.checks.push(Check {
            group,
            name: name.into(),
            pass,
            detail,
        });
    }

    fn algebra(&self, name: &str) -> Result<LieAlgebra> {
        Ok(self.catalog.get(name)?.algebra)
    }
}

pub const STATED: [&str; 4] = ["abelian4", "nil3xR", "nil4", "sol3xR"];
pub const NO_SYMPLECTIC: [&str; 3] = ["sl2xR", "sol4_0", "sol4_1"];

/// Eigenvalue triples `(a, b, c)`, `a + b + c = 0`, for `sol_mn`.
pub const SOL_MN_TRIPLES: [[(i64, i64); 3]; 5] = [
    [(1, 1), (2, 1), (-3, 1)],
    [(1, 1), (3, 1), (-4, 1)],
    [(2, 1), (3, 1), (-5, 1)],
    [(1, 1), (4, 1), (-5, 1)],
    [(1, 2), (1, 3), (-5, 6)],
];

fn pretty_pair(a: &crate::ExteriorForm, b: &crate::ExteriorForm) -> String {
    format!("({a}, {b})")
}

fn structure_checks(r: &mut Runner) {
    let entries: Vec<_> = r.catalog.entries().cloned().collect();
    for e in entries {
        let c = e.algebra.constants().clone();
        r.check("structure", format!("{} satisfies Jacobi", e.name), || {
            Ok(match c.jacobi_check() {
                Ok(()) => (true, "all triples vanish".into()),
                Err(f) => (false, format!("triple {:?} gives {:?}", f.triple, f.residual)),
            })
        });
        r.check("structure", format!("{} has d^2 = 0", e.name), || {
            Ok((c.d_squared_vanishes(), String::new()))
        });
        r.check("structure", format!("{} structure equations", e.name), || {
            let pass = e.matches_structure_equations();
            let detail = (1..=e.algebra.dim())
                .map(|k| format!("d a{k} = {}", e.algebra.constants().d_dual(k)))
                .collect::<Vec<_>>()
                .join("; ");
            Ok((pass, detail))
        });
    }
}

fn pair_checks(r: &mut Runner) {
    for name in STATED {
        let name = name.to_string();
        let entry = r.catalog.get(&name);
        r.check("pairs", format!("{name} stated pair is a symplectic pair"), || {
            let e = entry?;
            let (w1, w2) = e.pair.clone().expect("stated algebras carry a pair");
            let rep = pairs::check_symplectic_pair(&e.algebra, &w1, &w2)?;
            let detail = if rep.verdict {
                pretty_pair(&w1, &w2)
            } else {
                rep.failures().map(|a| format!("{}: {}", a.name, a.detail)).collect::<Vec<_>>().join("; ")
            };
            Ok((rep.verdict, detail))
        });
    }
}

fn search_checks(r: &mut Runner) {
    for name in STATED {
        let g = r.algebra(name);
        r.check("search", format!("{name} has an invariant symplectic pair"), || {
            let g = g?;
            let sym = search::has_invariant_symplectic(&g)?;
            let pair = search::has_invariant_symplectic_pair(&g)?;
            let sig = search::wedge_gram(&g)?.signature();
            let found = search::construct_pair_witness(&g)?;
            let witness_ok = found.witness().is_some_and(|w| w.report.verdict);
            Ok((sym && pair && witness_ok, format!("signature {:?}", sig.as_array())))
        });
    }
    let mut names: Vec<String> = NO_SYMPLECTIC.iter().map(|s| s.to_string()).collect();
    for t in SOL_MN_TRIPLES {
        let [a, b, c] = t.map(|(p, q)| BigRational::new(p.into(), q.into()));
        names.push(format!("sol_mn({a},{b},{c})"));
    }
    for name in names {
        let entry = r.catalog.get(&name);
        r.check("search", format!("{name} has no invariant symplectic form"), || {
            let g = entry?.algebra;
            let sym = search::has_invariant_symplectic(&g)?;
            let cert = search::construct_pair_witness(&g)?;
            let zero = cert.certificate().is_some_and(|c| c.kind == CertificateKind::ZeroGram);
            let dim = search::wedge_gram(&g)?.dim();
            Ok((!sym && zero, format!("zero Gram on {dim} closed 2-forms")))
        });
    }
}

fn boothby_wang_checks(r: &mut Runner) {
    for name in STATED {
        let entry = r.catalog.get(name);
        let Ok(entry) = entry else { continue };
        let Some((w1, w2)) = entry.pair.clone() else { continue };
        let g = entry.algebra.clone();
        r.check("boothby-wang", format!("{name}: symplectic pair lifts to a contact-symplectic pair"), || {
            let lift = boothby_wang::bw_contact_symplectic(&g, &w1, &w2)?;
            Ok((lift.report.verdict, format!("class k = {:?}, dim {}", lift.report.k, lift.report.dim)))
        });
        r.check("boothby-wang", format!("{name}: contact-symplectic pair lifts to a contact pair"), || {
            let cs = boothby_wang::bw_contact_symplectic(&g, &w1, &w2)?;
            let cp = boothby_wang::bw_contact_pair_from_cs(&cs.extension.total, &cs.alpha, &cs.beta)?;
            Ok((cp.report.verdict, format!("classes ({:?}, {:?}), dim {}", cp.report.k, cp.report.l, cp.report.dim)))
        });
        r.check("boothby-wang", format!("{name}: torus extension equals the two-step lift"), || {
            let cs = boothby_wang::bw_contact_symplectic(&g, &w1, &w2)?;
            let cp = boothby_wang::bw_contact_pair_from_cs(&cs.extension.total, &cs.alpha, &cs.beta)?;
            let torus = boothby_wang::torus_extension(&g, &w1, &w2)?;
            let same = torus.total.constants() == cp.extension.total.constants()
                && torus.alpha == cp.alpha
                && torus.gamma == cp.gamma;
            Ok((same && torus.report.verdict, String::new()))
        });
    }
}

fn coordinate_checks(r: &mut Runner) {
    let samples = coordforms::default_samples(4);
    for (label, (a, b)) in [("twisted", coordforms::twisted_pair()), ("split", coordforms::split_pair())] {
        let name = format!(
            "{label} coordinate pair ({}, {})",
            coordforms::display(&a),
            coordforms::display(&b)
        );
        r.check("coordinates", name, || {
            let rep = coordforms::check_coordinate_pair(&a, &b, &samples)?;
            let detail = format!(
                "closed {:?}, squares vanish {:?}, product {:?}, ranks {:?}/{:?} over {} samples",
                rep.closed,
                rep.squares_vanish,
                rep.product_constant.as_ref().map(ToString::to_string),
                rep.ranks[0].constant_rank(),
                rep.ranks[1].constant_rank(),
                rep.samples
            );
            let ranks_two = rep.ranks.iter().all(|k| k.constant_rank() == Some(2));
            Ok((rep.verdict && ranks_two, detail))
        });
    }
    r.check("coordinates", "twisted form invariant under shear and z-translation", || {
        let (_, b) = coordforms::twisted_pair();
        let gens = [coordforms::shear_map(), coordforms::unit_translation(4, 3)];
        let v = coordforms::invariance_check(&b, &gens)?;
        Ok((v.iter().all(|x| x.invariant), String::new()))
    });
}

/// One instance per printed row, with its expected `(row, b1, geometry)`.
pub fn table_instances() -> Vec<(T2BundleData, char, usize, fourman::Geometry)> {
    use fourman::Geometry::*;
    let i = [[1, 0], [0, 1]];
    let mi = [[-1, 0], [0, -1]];
    let b = |c, d, e| T2BundleData::new(c, d, e, None).expect("valid table instance");
    let mut out = vec![
        (b(i, i, (0, 0)), 'a', 4, Flat),
        (b(i, i, (0, 1)), 'b', 3, Nil3xR),
        (b(i, i, (2, 5)), 'b', 3, Nil3xR),
    ];
    for (c, e) in FLAT_B1_TWO {
        out.push((b(c, i, e), 'c', 2, Flat));
    }
    out.extend([
        (b([[1, 1], [0, 1]], i, (0, 1)), 'd', 2, Nil4),
        (b([[1, -2], [0, 1]], i, (3, -1)), 'd', 2, Nil4),
        (b([[-1, 1], [0, -1]], i, (0, 0)), 'e', 2, Nil3xR),
        (b([[-1, 2], [0, -1]], i, (1, 1)), 'e', 2, Nil3xR),
        (b([[1, 1], [0, 1]], mi, (0, 0)), 'f', 2, Nil3xR),
        (b([[1, 3], [0, 1]], mi, (1, 2)), 'f', 2, Nil3xR),
        (b([[2, 1], [1, 1]], i, (0, 0)), 'g', 2, Sol3xR),
        (b([[-3, 1], [-1, 0]], i, (1, 0)), 'g', 2, Sol3xR),
        (b([[2, 1], [1, 1]], mi, (0, 0)), 'h', 2, Sol3xR),
        (b([[3, 1], [-1, 0]], mi, (0, 1)), 'h', 2, Sol3xR),
    ]);
    out
}

fn table_checks(r: &mut Runner) {
    for (data, row, b1, geometry) in table_instances() {
        let name = format!(
            "bundle C={:?} D={} euler={:?} is row ({row})",
            data.c,
            if data.d[0][0] == 1 { "I" } else { "-I" },
            data.euler
        );
        let catalog = r.catalog;
        r.check("bundles", name, || {
            let cls = fourman::classify_t2_bundle(&data)?;
            let matches = cls.row.label() == row && cls.b1 == b1 && cls.geometry == geometry;
            let model = catalog.get(cls.algebra)?.algebra;
            let model_pair = cls.coordinate_forms || search::has_invariant_symplectic_pair(&model)?;
            Ok((
                matches && model_pair,
                format!("row {}, b1 {}, {}", cls.row, cls.b1, cls.geometry),
            ))
        });
    }
}

fn betti_checks(r: &mut Runner) {
    for (name, row, b1) in [("abelian4", 'a', 4), ("nil3xR", 'b', 3), ("nil4", 'd', 2), ("sol3xR", 'g', 2)] {
        let g = r.algebra(name);
        r.check("betti", format!("{name} has b1 = {b1} (row ({row}))"), || {
            let dims = g?.cohomology_dims();
            Ok((dims[1] == b1, format!("betti numbers {dims:?}")))
        });
    }
    r.check("betti", "extension of R^4 by a1^a2 has b1 = 4", || {
        let g = LieAlgebra::abelian(4)?;
        let ext = boothby_wang::central_extension(&g, &basis_form(4, &[1, 2]))?;
        let b1 = ext.total.cohomology_dims()[1];
        Ok((b1 == 4 && boothby_wang::predicted_b1(&g, &ext.cocycle)? == 4, format!("b1 = {b1}")))
    });
}

/// Run every check against `catalog`.
pub fn reproduce(catalog: &Catalog) -> ReproduceReport {
    let mut r = Runner {
        catalog,
        checks: Vec::new(),
    };
    structure_checks(&mut r);
    pair_checks(&mut r);
    search_checks(&mut r);
    boothby_wang_checks(&mut r);
    coordinate_checks(&mut r);
    table_checks(&mut r);
    betti_checks(&mut r);
    let failed = r.checks.iter().filter(|c| !c.pass).count();
    ReproduceReport {
        passed: r.checks.len() - failed,
        failed,
        checks: r.checks,
    }
}

/// A copy of `catalog` with `c_ij^k` of entry `name` negated, Jacobi unchecked.
pub fn flip_constant(catalog: &Catalog, name: &str, i: usize, j: usize, k: usize) -> Option<Catalog> {
    let mut out = catalog.clone();
    let entry: &mut catalog::CatalogEntry = out.entry_mut(name)?;
    let mut c = entry.algebra.constants().clone();
    c.flip_sign(i, j, k);
    entry.algebra = LieAlgebra::unchecked(c, Some(name.to_string()));
    Some(out)
}
