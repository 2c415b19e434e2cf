//! Seeded random Lie algebras, forms and congruences for property tests and
//! for exploring which wedge-pairing signatures occur in dimension 4.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::exterior::ExteriorForm;
use crate::form::Blade;
use crate::lie::{Catalog, LieAlgebra, StructureConstants};
use crate::linalg::{self, Matrix};
use crate::scalar::Scalar;
use crate::search;

fn small(rng: &mut impl Rng, bound: i64) -> Scalar {
    Scalar::int(rng.gen_range(-bound..=bound))
}

fn random_matrix(rng: &mut impl Rng, n: usize, bound: i64) -> Matrix {
    (0..n).map(|_| (0..n).map(|_| small(rng, bound)).collect()).collect()
}

fn trace(m: &Matrix) -> Scalar {
    (0..m.len()).fold(Scalar::zero(), |acc, i| &acc + &m[i][i])
}

/// Invertible integer matrix with entries in `[-2, 2]`.
pub fn random_invertible(rng: &mut impl Rng, n: usize) -> Matrix {
    loop {
        let m = random_matrix(rng, n, 2);
        if linalg::rank(&m, n) == n {
            return m;
        }
    }
}

/// `R e_{n+1}` acting on the abelian ideal `R^n` by `a`:
/// `[e_{n+1}, e_i] = sum_k a[k][i] e_k`.
pub fn semidirect_abelian(a: &Matrix) -> StructureConstants {
    let n = a.len();
    let mut c = StructureConstants::abelian(n + 1).expect("small dimension");
    for i in 1..=n {
        let out: Vec<_> = (1..=n).map(|k| (k, a[k - 1][i - 1].clone())).collect();
        c.set_bracket(n + 1, i, &out).expect("valid indices");
    }
    c
}

fn make_traceless(m: &mut Matrix) {
    let n = m.len();
    let t = trace(m);
    m[n - 1][n - 1] = &m[n - 1][n - 1] - &t;
}

/// `R (x) R^3` with a random integer derivation.
pub fn random_semidirect_r3(rng: &mut impl Rng, unimodular: bool) -> LieAlgebra {
    let mut a = random_matrix(rng, 3, 2);
    if unimodular {
        make_traceless(&mut a);
    }
    LieAlgebra::new(semidirect_abelian(&a), Some("R x R3".into())).expect("semidirect products satisfy Jacobi")
}

/// `R^2 (x) R^2` with commuting derivations `M` and `N = pM + qI`.
pub fn random_double_semidirect(rng: &mut impl Rng, unimodular: bool) -> LieAlgebra {
    let mut m = random_matrix(rng, 2, 2);
    if unimodular {
        make_traceless(&mut m);
    }
    let p = small(rng, 2);
    let q = if unimodular { Scalar::zero() } else { small(rng, 2) };
    let mut c = StructureConstants::abelian(4).expect("dim 4");
    for (gen, scale, shift) in [(3, Scalar::one(), Scalar::zero()), (4, p, q)] {
        for i in 1..=2 {
            let out: Vec<_> = (1..=2)
                .map(|k| {
                    let mut v = &scale * &m[k - 1][i - 1];
                    if k == i {
                        v += &shift;
                    }
                    (k, v)
                })
                .collect();
            c.set_bracket(gen, i, &out).expect("valid indices");
        }
    }
    LieAlgebra::new(c, Some("R2 x R2".into())).expect("commuting derivations satisfy Jacobi")
}

/// Central extension of a random `R (x) R^2` by a random closed 2-form.
pub fn random_central_extension(rng: &mut impl Rng, unimodular: bool) -> LieAlgebra {
    let mut b = random_matrix(rng, 2, 2);
    if unimodular {
        make_traceless(&mut b);
    }
    let base = LieAlgebra::new(semidirect_abelian(&b), None).expect("semidirect");
    let omega = random_closed_two_form(rng, &base);
    let c = crate::boothby_wang::extension_constants(&base, &[&omega]).expect("2-form on the base");
    LieAlgebra::new(c, Some("central extension".into())).expect("closed cocycle")
}

/// A catalog algebra in a random integer basis.
pub fn random_catalog_conjugate(rng: &mut impl Rng, unimodular: bool) -> LieAlgebra {
    let catalog = Catalog::standard();
    let names: Vec<&str> = catalog
        .entries()
        .filter(|e| e.algebra.dim() == 4 && (!unimodular || e.algebra.is_unimodular()))
        .map(|e| e.name.as_str())
        .collect();
    let name = *names.choose(rng).expect("nonempty catalog");
    let g = catalog.get(name).expect("listed").algebra;
    let basis = random_invertible(rng, 4);
    let c = g.constants().change_basis(&basis).expect("invertible");
    LieAlgebra::new(c, Some(format!("{name} (new basis)"))).expect("basis change preserves Jacobi")
}

fn aff() -> LieAlgebra {
    let mut c = StructureConstants::abelian(2).expect("dim 2");
    c.set_bracket(1, 2, &[(1, Scalar::one())]).expect("valid");
    LieAlgebra::named(c, "aff").expect("Jacobi")
}

/// `aff (+) aff` or `aff (+) R^2`.
pub fn affine_sums(which: bool) -> LieAlgebra {
    let other = if which {
        aff()
    } else {
        LieAlgebra::abelian(2).expect("dim 2").with_name("R2")
    };
    aff().direct_sum(&other).expect("direct sum")
}

/// A random four-dimensional algebra from one of the families above.
pub fn random_algebra4(rng: &mut impl Rng, unimodular: bool) -> LieAlgebra {
    let choices = if unimodular { 4 } else { 5 };
    match rng.gen_range(0..choices) {
        0 => random_semidirect_r3(rng, unimodular),
        1 => random_double_semidirect(rng, unimodular),
        2 => random_central_extension(rng, unimodular),
        3 => random_catalog_conjugate(rng, unimodular),
        _ => affine_sums(rng.gen_bool(0.5)),
    }
}

/// Sparse random `p`-form with small integer coefficients.
pub fn random_form(rng: &mut impl Rng, dim: usize, degree: usize, density: f64) -> ExteriorForm {
    let mut terms = Vec::new();
    for b in Blade::all(dim, degree) {
        if rng.gen_bool(density) {
            terms.push((b.indices(), small(rng, 3)));
        }
    }
    ExteriorForm::from_terms(dim, degree, terms).expect("valid blades")
}

/// Random integer combination of a basis of the closed 2-forms.
pub fn random_closed_two_form(rng: &mut impl Rng, g: &LieAlgebra) -> ExteriorForm {
    let basis = g.closed_forms(2).expect("degree 2");
    let mut w = ExteriorForm::zero(g.dim(), 2).expect("dim");
    for b in &basis {
        w = w.add(&b.scale(&small(rng, 2))).expect("same space");
    }
    w
}

/// `P G P^T` for a random invertible integer `P`.
pub fn random_congruence(rng: &mut impl Rng, g: &Matrix) -> Matrix {
    let n = g.len();
    let p = random_invertible(rng, n);
    let pt = linalg::transpose(&p, n);
    linalg::mat_mul(&linalg::mat_mul(&p, g, n), &pt, n)
}

#[derive(Clone, Debug, Serialize)]
pub struct SemidefiniteHit {
    pub family: String,
    pub unimodular: bool,
    pub signature: [usize; 3],
    /// Nonzero `(i, j, k, c_ij^k)`.
    pub constants: Vec<(usize, usize, usize, String)>,
}

/// What a randomized scan of four-dimensional algebras found.
#[derive(Clone, Debug, Serialize)]
pub struct DefiniteGramSearch {
    pub seed: u64,
    pub trials: usize,
    pub unimodular_only: bool,
    /// Signature `[p, m, z]` -> number of algebras.
    pub signatures: BTreeMap<String, usize>,
    /// Algebras with a nonzero semidefinite pairing (symplectic, no pair).
    pub hits: Vec<SemidefiniteHit>,
}

/// Scan random algebras for a nonzero semidefinite wedge pairing.
pub fn search_definite_gram(seed: u64, trials: usize, unimodular_only: bool) -> DefiniteGramSearch {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut signatures = BTreeMap::new();
    let mut hits = Vec::new();
    for _ in 0..trials {
        let g = random_algebra4(&mut rng, unimodular_only);
        let gram = search::wedge_gram(&g).expect("dim 4");
        let sig = gram.signature();
        *signatures.entry(format!("{:?}", sig.as_array())).or_insert(0) += 1;
        if !gram.is_zero() && !sig.is_indefinite() {
            hits.push(SemidefiniteHit {
                family: g.name().unwrap_or("?").to_string(),
                unimodular: g.is_unimodular(),
                signature: sig.as_array(),
                constants: g
                    .constants()
                    .nonzero()
                    .into_iter()
                    .map(|(i, j, k, v)| (i, j, k, v.to_string()))
                    .collect(),
            });
        }
    }
    DefiniteGramSearch {
        seed,
        trials,
        unimodular_only,
        signatures,
        hits,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families_are_lie_algebras() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            for uni in [false, true] {
                let g = random_algebra4(&mut rng, uni);
                assert_eq!(g.dim(), 4);
                assert!(g.constants().jacobi_check().is_ok());
                if uni {
                    assert!(g.is_unimodular(), "{g}");
                }
            }
        }
    }

    #[test]
    fn closed_forms_are_closed() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let g = random_algebra4(&mut rng, false);
            let w = random_closed_two_form(&mut rng, &g);
            assert!(g.is_closed(&w).unwrap());
        }
    }

    #[test]
    fn affine_sums_are_indefinite() {
        for which in [false, true] {
            let g = affine_sums(which);
            assert!(search::has_invariant_symplectic_pair(&g).unwrap() || !search::has_invariant_symplectic(&g).unwrap());
        }
        assert!(search::has_invariant_symplectic_pair(&affine_sums(true)).unwrap());
    }

    #[test]
    fn unimodular_scan_is_deterministic() {
        let a = search_definite_gram(3, 30, true);
        let b = search_definite_gram(3, 30, true);
        assert_eq!(a.signatures, b.signatures);
        assert_eq!(a.signatures.values().sum::<usize>(), 30);
    }
}
