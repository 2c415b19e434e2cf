//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the lines are always shown; exits nonzero if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{closed, closed_two_forms, t2_bundle_b1, wedge_top};
use sympair::boothby_wang::{bw_contact_pair_from_cs, bw_contact_symplectic, extension_constants, torus_extension};
use sympair::coordforms::{self, check_coordinate_pair, default_samples, PolyForm};
use sympair::exterior::basis_form;
use sympair::fourman::{classify_t2_bundle, matching_rows, T2BundleData};
use sympair::lie::{catalog_get, Catalog};
use sympair::pairs::{check_symplectic_pair, couple_type_on, pair_to_pm, CoupleType};
use sympair::reproduce::{flip_constant, reproduce, table_instances, SOL_MN_TRIPLES};
use sympair::sampling::{random_algebra4, random_closed_two_form, random_congruence, random_form};
use sympair::search::{self, CertificateKind, PairSearch};
use sympair::{ExteriorForm, LieAlgebra, Scalar};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let out = f();
    (out, t.elapsed())
}

fn err(e: sympair::Error) -> String {
    e.to_string()
}

/// Independent pair test in dimension 4: both closed, both square to zero,
/// product nonzero.
fn oracle_pair(g: &LieAlgebra, w1: &ExteriorForm, w2: &ExteriorForm) -> bool {
    closed(g, w1)
        && closed(g, w2)
        && wedge_top(w1, w1).is_zero()
        && wedge_top(w2, w2).is_zero()
        && !wedge_top(w1, w2).is_zero()
}

fn stated_pairs() -> Outcome {
    let limit = Duration::from_millis(100);
    let mut lines = Vec::new();
    for (name, a, b) in [
        ("sol3xR", [1, 3], [2, 4]),
        ("nil4", [1, 2], [3, 4]),
        ("nil3xR", [1, 3], [2, 4]),
        ("abelian4", [1, 2], [3, 4]),
    ] {
        let g = catalog_get(name).map_err(err)?.algebra;
        let (w1, w2) = (basis_form(4, &a), basis_form(4, &b));
        let (rep, t) = timed(|| check_symplectic_pair(&g, &w1, &w2));
        let rep = rep.map_err(err)?;
        ensure(rep.verdict, || format!("{name}: {}", rep.explanation().join("; ")))?;
        ensure(rep.axioms.iter().all(|a| a.pass), || format!("{name}: an axiom failed"))?;
        ensure(oracle_pair(&g, &w1, &w2), || format!("{name}: direct evaluation disagrees"))?;
        ensure(t < limit, || format!("{name}: {t:?}"))?;
        lines.push(format!("{name} {t:.1?}"));
    }
    Ok(lines.join(", "))
}

fn rational(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

fn nonexistence() -> Outcome {
    let limit = Duration::from_millis(100);
    let catalog = Catalog::standard();
    let mut names: Vec<String> = ["sl2xR", "sol4_0", "sol4_1"].map(String::from).to_vec();
    let mut distinct = std::collections::BTreeSet::new();
    for t in SOL_MN_TRIPLES {
        let [a, b, c] = t.map(|(p, q)| rational(p, q));
        ensure(&a + &b + &c == rational(0, 1), || "triple does not sum to zero".into())?;
        for (x, y) in [(&a, &b), (&a, &c), (&b, &c)] {
            ensure(x + y != rational(0, 1), || format!("pairwise sum vanishes in ({a},{b},{c})"))?;
        }
        distinct.insert((a.clone(), b.clone(), c.clone()));
        names.push(format!("sol_mn({a},{b},{c})"));
    }
    ensure(distinct.len() >= 5, || "fewer than five distinct triples".into())?;
    let mut worst = Duration::ZERO;
    for name in &names {
        let g = catalog.get(name).map_err(err)?.algebra;
        let ((sym, found), t) = timed(|| (search::has_invariant_symplectic(&g), search::construct_pair_witness(&g)));
        let (sym, found) = (sym.map_err(err)?, found.map_err(err)?);
        ensure(!sym, || format!("{name}: symplectic form reported"))?;
        let zero = found.certificate().is_some_and(|c| c.kind == CertificateKind::ZeroGram && c.gram.is_zero());
        ensure(zero, || format!("{name}: no zero-Gram certificate"))?;
        let basis = closed_two_forms(&g);
        let all_null = basis.iter().all(|a| basis.iter().all(|b| wedge_top(a, b).is_zero()));
        ensure(all_null, || format!("{name}: direct evaluation finds a non-null closed form"))?;
        ensure(t < limit, || format!("{name}: {t:?}"))?;
        worst = worst.max(t);
    }
    Ok(format!("{} algebras, slowest {worst:.1?}", names.len()))
}

fn volume_coefficient(forms: &[&ExteriorForm]) -> Scalar {
    let top = forms[1..]
        .iter()
        .try_fold(forms[0].clone(), |acc, f| acc.wedge(f))
        .expect("wedge");
    let idx: Vec<usize> = (1..=top.dim()).collect();
    top.coefficient(&idx)
}

fn boothby_wang() -> Outcome {
    let catalog = Catalog::standard();
    let (result, t) = timed(|| -> Result<usize, String> {
        let mut count = 0;
        for entry in catalog.entries() {
            let Some((w1, w2)) = entry.pair.clone() else { continue };
            let g = &entry.algebra;
            let name = &entry.name;
            let cs = bw_contact_symplectic(g, &w1, &w2).map_err(err)?;
            ensure(cs.report.verdict, || format!("{name}: contact-symplectic lift fails"))?;
            let h = &cs.extension.total;
            let da = h.ce_d(&cs.alpha).map_err(err)?;
            ensure(da == cs.extension.lift(&w1).map_err(err)?, || format!("{name}: d alpha != omega1"))?;
            ensure(
                da.wedge(&da).map_err(err)?.is_zero()
                    && cs.beta.wedge(&cs.beta).map_err(err)?.is_zero()
                    && !volume_coefficient(&[&cs.alpha, &da, &cs.beta]).is_zero(),
                || format!("{name}: alpha ^ d alpha ^ beta test fails in dimension 5"),
            )?;

            let cp = bw_contact_pair_from_cs(h, &cs.alpha, &cs.beta).map_err(err)?;
            ensure(cp.report.verdict, || format!("{name}: contact pair lift fails"))?;
            let k = &cp.extension.total;
            let (da, dg) = (k.ce_d(&cp.alpha).map_err(err)?, k.ce_d(&cp.gamma).map_err(err)?);
            ensure(
                da.wedge(&da).map_err(err)?.is_zero()
                    && dg.wedge(&dg).map_err(err)?.is_zero()
                    && !volume_coefficient(&[&cp.alpha, &da, &cp.gamma, &dg]).is_zero(),
                || format!("{name}: alpha ^ d alpha ^ gamma ^ d gamma test fails in dimension 6"),
            )?;

            let torus = torus_extension(g, &w1, &w2).map_err(err)?;
            ensure(torus.report.verdict, || format!("{name}: torus extension fails"))?;
            let composed = extension_constants(g, &[&w1, &w2]).map_err(err)?;
            ensure(
                torus.total.constants() == k.constants() && &composed == k.constants(),
                || format!("{name}: torus extension differs from the composition"),
            )?;
            count += 1;
        }
        Ok(count)
    });
    let count = result?;
    ensure(count >= 4, || format!("only {count} catalog pairs"))?;
    ensure(t < Duration::from_millis(500), || format!("{t:?}"))?;
    Ok(format!("{count} pairs, {t:.1?}"))
}

/// `d phi` coefficients computed from partial derivatives directly.
fn poly_d_vanishes(phi: &PolyForm) -> bool {
    let n = phi.dim();
    let mut acc = std::collections::BTreeMap::new();
    for (idx, f) in phi.terms() {
        for k in 1..=n {
            if idx.contains(&k) {
                continue;
            }
            let mut full = vec![k];
            full.extend(&idx);
            let mut sorted = full.clone();
            sorted.sort_unstable();
            let inversions = (0..full.len())
                .flat_map(|a| (a + 1..full.len()).map(move |b| (a, b)))
                .filter(|&(a, b)| full[a] > full[b])
                .count();
            let term = f.partial(k);
            let term = if inversions % 2 == 1 { term.neg() } else { term };
            let entry = acc.entry(sorted).or_insert_with(sympair::poly::Polynomial::zero);
            *entry = entry.add(&term);
        }
    }
    acc.values().all(|p| p.is_zero())
}

fn eval_form(phi: &PolyForm, point: &[BigRational]) -> ExteriorForm {
    ExteriorForm::from_terms(
        phi.dim(),
        phi.degree(),
        phi.terms().map(|(idx, f)| (idx, Scalar::from_rational(f.eval(point).expect("point")))),
    )
    .expect("form")
}

fn coordinates() -> Outcome {
    let samples = default_samples(4);
    ensure(samples.len() == 625, || format!("{} default samples", samples.len()))?;
    let mut lines = Vec::new();
    for (label, (a, b)) in [("twisted", coordforms::twisted_pair()), ("split", coordforms::split_pair())] {
        let rep = check_coordinate_pair(&a, &b, &samples).map_err(err)?;
        ensure(rep.verdict, || format!("{label}: {rep:?}"))?;
        ensure(rep.closed == [true, true] && rep.squares_vanish == [true, true], || format!("{label}: flags"))?;
        let unit = rep.product_constant.as_ref().is_some_and(|c| c.abs() == Scalar::one());
        ensure(unit, || format!("{label}: product is not +-vol"))?;
        ensure(rep.ranks.iter().all(|r| r.ranks.len() == 625 && r.min == 2 && r.max == 2), || {
            format!("{label}: rank not 2 everywhere")
        })?;
        ensure(poly_d_vanishes(&a) && poly_d_vanishes(&b), || format!("{label}: direct d is nonzero"))?;
        for p in &samples {
            let (x, y) = (eval_form(&a, p), eval_form(&b, p));
            let ok = !x.is_zero()
                && !y.is_zero()
                && wedge_top(&x, &x).is_zero()
                && wedge_top(&y, &y).is_zero()
                && wedge_top(&x, &y).abs() == Scalar::one();
            ensure(ok, || format!("{label}: pointwise failure at {p:?}"))?;
        }
        lines.push(format!("{label} product {}", rep.product_constant.expect("constant")));
    }
    Ok(lines.join(", "))
}

fn table() -> Outcome {
    let (result, t) = timed(|| -> Result<(usize, usize), String> {
        let instances = table_instances();
        let flat_c = instances.iter().filter(|x| x.1 == 'c').count();
        ensure(flat_c == 7, || format!("{flat_c} case (c) entries"))?;
        for (data, row, b1, geometry) in &instances {
            let cls = classify_t2_bundle(data).map_err(err)?;
            ensure(
                cls.row.label() == *row && cls.b1 == *b1 && cls.geometry == *geometry,
                || format!("{data:?}: got {} {} {}", cls.row, cls.b1, cls.geometry),
            )?;
            let oracle = t2_bundle_b1(data.c, data.d, data.euler);
            ensure(oracle == cls.b1, || format!("{data:?}: coinvariant b1 {oracle}"))?;
        }
        let mut checked = 0;
        let r = -3i64..=3;
        for a in r.clone() {
            for b in r.clone() {
                for c in r.clone() {
                    for d in r.clone() {
                        for dm in [[[1, 0], [0, 1]], [[-1, 0], [0, -1]]] {
                            for m in r.clone() {
                                for n in r.clone() {
                                    let Ok(data) = T2BundleData::new([[a, b], [c, d]], dm, (m, n), None) else {
                                        continue;
                                    };
                                    let rows = matching_rows(&data);
                                    ensure(rows.len() <= 1, || format!("{data:?} matches {rows:?}"))?;
                                    if let [row] = rows.as_slice() {
                                        let oracle = t2_bundle_b1(data.c, data.d, data.euler);
                                        ensure(oracle == row.b1(), || format!("{data:?}: b1 {oracle} vs {row}"))?;
                                    }
                                    checked += 1;
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok((instances.len(), checked))
    });
    let (rows, checked) = result?;
    ensure(t < Duration::from_secs(5), || format!("{t:?}"))?;
    Ok(format!("{rows} row instances, {checked} enumerated inputs, {t:.1?}"))
}

fn betti() -> Outcome {
    for (name, b1) in [("abelian4", 4), ("nil3xR", 3), ("nil4", 2), ("sol3xR", 2)] {
        let g = catalog_get(name).map_err(err)?.algebra;
        let dims = g.cohomology_dims();
        ensure(dims[1] == b1, || format!("{name}: b1 = {}", dims[1]))?;
        ensure(common::b1(&g) == b1, || format!("{name}: n - dim [g,g] = {}", common::b1(&g)))?;
    }
    Ok("4, 3, 2, 2".into())
}

const CASES: usize = 200;

fn property<F>(name: &str, seed: u64, mut f: F) -> Result<(), String>
where
    F: FnMut(&mut ChaCha8Rng) -> Result<(), String>,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for case in 0..CASES {
        f(&mut rng).map_err(|e| format!("{name}, case {case}: {e}"))?;
    }
    Ok(())
}

fn algebra_pool() -> Vec<LieAlgebra> {
    let c = Catalog::standard();
    c.entries().filter(|e| e.algebra.dim() == 4).map(|e| e.algebra.clone()).collect()
}

fn properties() -> Outcome {
    let pool = algebra_pool();
    let pick = |rng: &mut ChaCha8Rng| -> LieAlgebra {
        if rng.gen_bool(0.3) {
            pool[rng.gen_range(0..pool.len())].clone()
        } else {
            let unimodular = rng.gen_bool(0.7);
            random_algebra4(rng, unimodular)
        }
    };
    let (mut positives, mut confirmed) = (0, 0);
    let (result, t) = timed(|| -> Result<(), String> {
        property("d^2 = 0", 1, |rng| {
            let g = pick(rng);
            let p = rng.gen_range(0..3);
            let f = random_form(rng, 4, p, 0.6);
            let dd = g.ce_d(&g.ce_d(&f).map_err(err)?).map_err(err)?;
            ensure(dd.is_zero(), || format!("d^2 {f} = {dd}"))
        })?;
        property("extension Jacobi iff closed cocycle", 2, |rng| {
            let g = pick(rng);
            let w = if rng.gen_bool(0.5) {
                random_closed_two_form(rng, &g)
            } else {
                random_form(rng, 4, 2, 0.5)
            };
            let ext = extension_constants(&g, &[&w]).map_err(err)?;
            ensure(ext.jacobi_check().is_ok() == closed(&g, &w), || format!("cocycle {w}"))
        })?;
        property("Sylvester invariance", 3, |rng| {
            let g = pick(rng);
            let gram = search::wedge_gram(&g).map_err(err)?;
            let moved = random_congruence(rng, &gram.gram);
            let sig = search::signature(&moved).map_err(err)?;
            ensure(sig == gram.signature(), || format!("{:?} vs {:?}", sig, gram.signature()))
        })?;
        property("oracle never contradicts the decision", 4, |rng| {
            let g = pick(rng);
            let decided = search::has_invariant_symplectic_pair(&g).map_err(err)?;
            let seed = rng.gen();
            let found = search::brute_force_oracle(&g, seed, 400).map_err(err)?;
            positives += usize::from(decided);
            confirmed += usize::from(found);
            ensure(!found || decided, || "oracle found a pair the signature rules out".into())
        })?;
        property("witness soundness", 5, |rng| {
            let g = pick(rng);
            match search::construct_pair_witness(&g).map_err(err)? {
                PairSearch::Witness(w) => {
                    let rep = check_symplectic_pair(&g, &w.omega1, &w.omega2).map_err(err)?;
                    ensure(rep.verdict && oracle_pair(&g, &w.omega1, &w.omega2), || format!("{w:?}"))
                }
                PairSearch::Absent(c) => {
                    ensure(!c.signature.is_indefinite(), || "certificate for an indefinite form".into())
                }
            }
        })?;
        property("pair iff plus/minus characterization", 6, |rng| {
            let g = pick(rng);
            let (w1, w2) = match search::construct_pair_witness(&g).map_err(err)? {
                PairSearch::Witness(w) if rng.gen_bool(0.5) => {
                    let a = Scalar::int(rng.gen_range(1..4) * if rng.gen_bool(0.5) { 1 } else { -1 });
                    (w.omega1.scale(&a), w.omega2)
                }
                _ => (random_closed_two_form(rng, &g), random_closed_two_form(rng, &g)),
            };
            let pair = check_symplectic_pair(&g, &w1, &w2).map_err(err)?.verdict;
            let (plus, minus) = pair_to_pm(&w1, &w2).map_err(err)?;
            let couple = couple_type_on(&g, &plus, &minus).unwrap_or(CoupleType::Neither);
            ensure(pair == (couple == CoupleType::SymplecticPair), || format!("({w1}, {w2}): {pair} vs {couple:?}"))
        })?;
        Ok(())
    });
    result?;
    ensure(t < Duration::from_secs(60), || format!("{t:?}"))?;
    Ok(format!(
        "6 properties x {CASES} cases, oracle confirmed {confirmed} of {positives} positive decisions, {t:.1?}"
    ))
}

fn mutations() -> Outcome {
    let catalog = Catalog::standard();
    let mut flips = 0;
    for name in ["sol3xR", "nil4"] {
        let entry = catalog.get(name).map_err(err)?;
        for (i, j, k, _) in entry.algebra.constants().nonzero() {
            let bad = flip_constant(&catalog, name, i, j, k).ok_or("missing entry")?;
            let c = bad.get(name).map_err(err)?.algebra.constants().clone();
            let report = reproduce(&bad);
            let failed: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
            let detected = c.jacobi_check().is_err() || !c.d_squared_vanishes() || !failed.is_empty();
            ensure(detected, || format!("{name}: flip of c_{i}{j}^{k} undetected"))?;
            ensure(failed.iter().any(|f| f.starts_with(name)), || {
                format!("{name}: flip of c_{i}{j}^{k} not attributed to {name}")
            })?;
            flips += 1;
        }
    }
    Ok(format!("{flips} single flips detected"))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("stated pairs verify", stated_pairs),
        ("nonexistence with zero-Gram certificates", nonexistence),
        ("Boothby-Wang lifts and torus extension", boothby_wang),
        ("coordinate pairs", coordinates),
        ("T^2-bundle table", table),
        ("first Betti numbers", betti),
        ("randomized property suites", properties),
        ("single sign flips detected", mutations),
    ];
    let mut failures = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {} PASS {name}: {detail}", k + 1),
            Err(e) => {
                failures += 1;
                println!("criterion {} FAIL {name}: {e}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
