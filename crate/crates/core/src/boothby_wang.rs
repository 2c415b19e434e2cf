//! The Boothby–Wang construction at the level of Lie algebras.
//!
//! A closed 2-form `omega` on `g` defines a central extension
//! `g~ = g (+) R e0` with `[x, y]~ = [x, y] - omega(x, y) e0`. The dual
//! `alpha` of `e0` is the connection form and satisfies `d alpha = omega`
//! (lifted to `g~`). The new generator is appended as index `n + 1`, so
//! forms on `g` lift to `g~` without renumbering.
//!
//! Integrality of `[omega]`, which a circle bundle over a closed manifold
//! needs, is a lattice condition outside this model. It is recorded on the
//! extension as an unchecked assumption and never enforced; inputs are never
//! rescaled.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exterior::{self, ExteriorForm};
use crate::lie::{LieAlgebra, StructureConstants};
use crate::pairs::{self, PairReport};

#[derive(Clone, Debug)]
pub struct CentralExtension {
    pub base: LieAlgebra,
    pub cocycle: ExteriorForm,
    pub total: LieAlgebra,
    /// Dual of the new central generator.
    pub connection: ExteriorForm,
    /// `index_map[i-1]` is the index of `e_i` inside the total algebra.
    pub index_map: Vec<usize>,
    pub assumptions: Vec<String>,
}

impl CentralExtension {
    /// Lift a form on the base to the total algebra (pullback by the projection).
    pub fn lift(&self, form: &ExteriorForm) -> Result<ExteriorForm> {
        form.lift(self.total.dim(), &self.index_map)
    }

    pub fn central_index(&self) -> usize {
        self.total.dim()
    }
}

/// Structure constants of the extension by `cocycles`, one new generator per
/// cocycle, without checking closedness or Jacobi.
pub fn extension_constants(g: &LieAlgebra, cocycles: &[&ExteriorForm]) -> Result<StructureConstants> {
    let n = g.dim();
    let m = n + cocycles.len();
    let mut c = StructureConstants::abelian(m)?;
    for (i, j, k, v) in g.constants().nonzero() {
        c.set(i, j, k, v);
    }
    for (r, w) in cocycles.iter().enumerate() {
        if w.dim() != n || w.degree() != 2 {
            return Err(Error::Precondition("cocycles must be 2-forms on the base".into()));
        }
        for (idx, coeff) in w.terms() {
            c.set(idx[0], idx[1], n + r + 1, -coeff);
        }
    }
    Ok(c)
}

fn extension_name(g: &LieAlgebra, suffix: &str) -> String {
    format!("{}{suffix}", g.name().unwrap_or("g"))
}

fn require_closed(g: &LieAlgebra, omega: &ExteriorForm) -> Result<()> {
    if omega.degree() != 2 || omega.dim() != g.dim() {
        return Err(Error::Precondition("cocycle must be a 2-form on the base algebra".into()));
    }
    let dw = g.ce_d(omega)?;
    if !dw.is_zero() {
        return Err(Error::NotClosed(dw.to_string()));
    }
    Ok(())
}

pub fn central_extension(g: &LieAlgebra, omega: &ExteriorForm) -> Result<CentralExtension> {
    require_closed(g, omega)?;
    let n = g.dim();
    let total = LieAlgebra::named(extension_constants(g, &[omega])?, &extension_name(g, "~"))?;
    Ok(CentralExtension {
        base: g.clone(),
        cocycle: omega.clone(),
        connection: exterior::basis_form(n + 1, &[n + 1]),
        index_map: (1..=n).collect(),
        total,
        assumptions: vec!["[omega] integral (unchecked lattice condition)".into()],
    })
}

fn require_pass(report: &PairReport, what: &str) -> Result<()> {
    if report.verdict {
        return Ok(());
    }
    let failed: Vec<_> = report.failures().map(|a| a.name.clone()).collect();
    Err(Error::Precondition(format!("input is not a {what}: failed {}", failed.join(", "))))
}

#[derive(Clone, Debug)]
pub struct ContactSymplecticLift {
    pub extension: CentralExtension,
    pub alpha: ExteriorForm,
    pub beta: ExteriorForm,
    pub report: PairReport,
}

/// Extend over `omega1` and lift `omega2`: a symplectic pair becomes a
/// contact-symplectic pair one dimension up.
pub fn bw_contact_symplectic(g: &LieAlgebra, omega1: &ExteriorForm, omega2: &ExteriorForm) -> Result<ContactSymplecticLift> {
    let input = pairs::check_symplectic_pair(g, omega1, omega2)?;
    require_pass(&input, "symplectic pair")?;
    let extension = central_extension(g, omega1)?;
    let alpha = extension.connection.clone();
    let beta = extension.lift(omega2)?;
    let mut report = pairs::check_contact_symplectic_pair(&extension.total, &alpha, &beta)?;
    let half_rank = exterior::rank_two_form(omega1)? / 2;
    report.notes.push(format!(
        "class of alpha is 2k+1 with k = {:?}; half the rank of omega1 is {half_rank}",
        report.k
    ));
    if report.k != Some(half_rank) {
        report.verdict = false;
    }
    Ok(ContactSymplecticLift {
        extension,
        alpha,
        beta,
        report,
    })
}

#[derive(Clone, Debug)]
pub struct ContactPairLift {
    pub extension: CentralExtension,
    pub alpha: ExteriorForm,
    pub gamma: ExteriorForm,
    pub report: PairReport,
}

/// Extend over `beta` and keep `alpha`: a contact-symplectic pair becomes a
/// contact pair one dimension up.
pub fn bw_contact_pair_from_cs(g: &LieAlgebra, alpha: &ExteriorForm, beta: &ExteriorForm) -> Result<ContactPairLift> {
    let input = pairs::check_contact_symplectic_pair(g, alpha, beta)?;
    require_pass(&input, "contact-symplectic pair")?;
    let extension = central_extension(g, beta)?;
    let alpha = extension.lift(alpha)?;
    let gamma = extension.connection.clone();
    let report = pairs::check_contact_pair(&extension.total, &alpha, &gamma)?;
    Ok(ContactPairLift {
        extension,
        alpha,
        gamma,
        report,
    })
}

#[derive(Clone, Debug)]
pub struct TorusExtension {
    pub base: LieAlgebra,
    pub total: LieAlgebra,
    pub alpha: ExteriorForm,
    pub gamma: ExteriorForm,
    pub report: PairReport,
}

/// Extend simultaneously by both members of a symplectic pair; generators
/// `n + 1` (curvature `omega1`) and `n + 2` (curvature `omega2`).
pub fn torus_extension(g: &LieAlgebra, omega1: &ExteriorForm, omega2: &ExteriorForm) -> Result<TorusExtension> {
    let input = pairs::check_symplectic_pair(g, omega1, omega2)?;
    require_pass(&input, "symplectic pair")?;
    let n = g.dim();
    let total = LieAlgebra::named(extension_constants(g, &[omega1, omega2])?, &extension_name(g, "~~"))?;
    let alpha = exterior::basis_form(n + 2, &[n + 1]);
    let gamma = exterior::basis_form(n + 2, &[n + 2]);
    let report = pairs::check_contact_pair(&total, &alpha, &gamma)?;
    Ok(TorusExtension {
        base: g.clone(),
        total,
        alpha,
        gamma,
        report,
    })
}

/// First Betti number of the extension predicted from the base:
/// `b1(g~) = b1(g) + 1` when `[omega] = 0`, else `b1(g)`.
pub fn predicted_b1(g: &LieAlgebra, omega: &ExteriorForm) -> Result<usize> {
    let b1 = g.cohomology_dims().get(1).copied().unwrap_or(0);
    Ok(if g.is_exact(omega)? { b1 + 1 } else { b1 })
}

#[derive(Serialize)]
struct ExtensionSummary<'a> {
    central_index: usize,
    assumptions: &'a [String],
}

impl Serialize for CentralExtension {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ExtensionSummary {
            central_index: self.central_index(),
            assumptions: &self.assumptions,
        }
        .serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::basis_form;
    use crate::lie::catalog_get;

    #[test]
    fn heisenberg_from_the_plane() {
        let g = LieAlgebra::abelian(2).unwrap();
        let ext = central_extension(&g, &basis_form(2, &[1, 2])).unwrap();
        assert_eq!(ext.total.dim(), 3);
        let heis = catalog_get("heis3").unwrap().algebra;
        assert_eq!(ext.total.constants(), heis.constants());
        let class = pairs::form_class(&ext.total, &ext.connection).unwrap();
        assert_eq!(class.k, 1);
        assert!(class.valid);
    }

    #[test]
    fn connection_has_prescribed_curvature() {
        let g = LieAlgebra::abelian(4).unwrap();
        let w = basis_form(4, &[1, 2]);
        let ext = central_extension(&g, &w).unwrap();
        assert_eq!(ext.total.ce_d(&ext.connection).unwrap(), ext.lift(&w).unwrap());
        assert_eq!(ext.total.ce_d(&ext.connection).unwrap(), basis_form(5, &[1, 2]));
        // heis3 + R^2
        assert_eq!(ext.total.cohomology_dims()[1], 4);
    }

    #[test]
    fn rejects_open_cocycle() {
        let g = catalog_get("nil3xR").unwrap().algebra;
        let err = central_extension(&g, &basis_form(4, &[3, 4])).unwrap_err();
        assert!(matches!(err, Error::NotClosed(_)));
    }

    #[test]
    fn sol_extension_is_a_lie_algebra() {
        let g = catalog_get("sol3xR").unwrap().algebra;
        let ext = central_extension(&g, &basis_form(4, &[1, 3])).unwrap();
        assert!(ext.total.constants().jacobi_check().is_ok());
    }

    #[test]
    fn curvature_as_beta_is_not_complementary() {
        let g = LieAlgebra::abelian(4).unwrap();
        let ext = central_extension(&g, &basis_form(4, &[1, 2])).unwrap();
        let rep =
            pairs::check_contact_symplectic_pair(&ext.total, &ext.connection, &basis_form(5, &[1, 2])).unwrap();
        assert!(!rep.verdict);
        assert_eq!(rep.axiom_passed("kernels complementary"), Some(false));
    }

    #[test]
    fn heisenberg_with_zero_beta_is_rejected() {
        let h = catalog_get("heis3").unwrap().algebra;
        let zero = ExteriorForm::zero(3, 2).unwrap();
        assert!(bw_contact_pair_from_cs(&h, &basis_form(3, &[3]), &zero).is_err());
    }

    #[test]
    fn betti_prediction() {
        let g = LieAlgebra::abelian(4).unwrap();
        let w = basis_form(4, &[1, 2]);
        assert_eq!(predicted_b1(&g, &w).unwrap(), 4);
        // exact cocycle on nil3xR: d a3 = a1 ^ a2
        let nil = catalog_get("nil3xR").unwrap().algebra;
        let exact = basis_form(4, &[1, 2]);
        assert!(nil.is_exact(&exact).unwrap());
        let ext = central_extension(&nil, &exact).unwrap();
        assert_eq!(ext.total.cohomology_dims()[1], predicted_b1(&nil, &exact).unwrap());
        assert_eq!(predicted_b1(&nil, &exact).unwrap(), 4);
    }
}
