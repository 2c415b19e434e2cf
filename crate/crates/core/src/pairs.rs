//! Verification of symplectic pairs, contact-symplectic pairs and contact
//! pairs for invariant forms on a Lie algebra.
//!
//! Every check is exact and pointwise; for left-invariant forms constant rank
//! and constant class hold automatically. Reports enumerate every axiom even
//! after a failure.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exterior::{self, ExteriorForm};
use crate::lie::LieAlgebra;
use crate::linalg::Subspace;
use crate::scalar::Scalar;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairKind {
    Symplectic,
    ContactSymplectic,
    Contact,
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct Axiom {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct PairReport {
    pub kind: PairKind,
    pub dim: usize,
    pub verdict: bool,
    /// Half-rank or class integer of the first form (`rank 2k`, `class 2k+1`).
    pub k: Option<usize>,
    /// Same for the second form.
    pub l: Option<usize>,
    pub kernel_dims: [Option<usize>; 2],
    pub axioms: Vec<Axiom>,
    pub notes: Vec<String>,
}

impl PairReport {
    fn new(kind: PairKind, dim: usize) -> Self {
        PairReport {
            kind,
            dim,
            verdict: false,
            k: None,
            l: None,
            kernel_dims: [None, None],
            axioms: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn axiom(&mut self, name: &str, pass: bool, detail: impl Into<String>) {
        self.axioms.push(Axiom {
            name: name.to_string(),
            pass,
            detail: detail.into(),
        });
    }

    fn finish(mut self) -> Self {
        self.verdict = !self.axioms.is_empty() && self.axioms.iter().all(|a| a.pass);
        self
    }

    pub fn axiom_passed(&self, name: &str) -> Option<bool> {
        self.axioms.iter().find(|a| a.name == name).map(|a| a.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Axiom> {
        self.axioms.iter().filter(|a| !a.pass)
    }

    /// One human-readable line per axiom.
    pub fn explanation(&self) -> Vec<String> {
        self.axioms
            .iter()
            .map(|a| format!("[{}] {}: {}", if a.pass { "pass" } else { "FAIL" }, a.name, a.detail))
            .collect()
    }
}

/// Class data of a 1-form: `(d alpha)^{k+1} = 0` with `k` minimal, and
/// `valid` records whether also `alpha ^ (d alpha)^k != 0` (class `2k+1`).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct FormClass {
    pub k: usize,
    pub valid: bool,
}

impl FormClass {
    pub fn class(&self) -> usize {
        2 * self.k + 1
    }
}

fn expect_degree(form: &ExteriorForm, degree: usize, dim: usize) -> Result<()> {
    if form.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: form.dim(),
        });
    }
    if form.degree() != degree {
        return Err(Error::DegreeMismatch {
            expected: degree,
            found: form.degree(),
        });
    }
    Ok(())
}

pub fn form_class(g: &LieAlgebra, alpha: &ExteriorForm) -> Result<FormClass> {
    expect_degree(alpha, 1, g.dim())?;
    if alpha.is_zero() {
        return Err(Error::ZeroForm);
    }
    let da = g.ce_d(alpha)?;
    let mut k = 0;
    let mut power = ExteriorForm::constant(g.dim(), Scalar::one())?;
    // power = (d alpha)^k
    loop {
        let next = power.wedge(&da)?;
        if next.is_zero() {
            break;
        }
        power = next;
        k += 1;
    }
    let valid = !alpha.wedge(&power)?.is_zero();
    Ok(FormClass { k, valid })
}

/// `alpha ^ (d alpha)^k`.
pub fn characteristic_form(g: &LieAlgebra, alpha: &ExteriorForm, k: usize) -> Result<ExteriorForm> {
    alpha.wedge(&g.ce_d(alpha)?.wedge_power(k)?)
}

fn is_subalgebra(g: &LieAlgebra, s: &Subspace) -> bool {
    let b = s.basis();
    b.iter()
        .enumerate()
        .all(|(i, x)| b[i + 1..].iter().all(|y| s.contains(&g.constants().bracket(x, y))))
}

fn note_integrability(report: &mut PairReport, g: &LieAlgebra, kernels: &[(&str, &Subspace)]) {
    for (label, s) in kernels {
        report.notes.push(format!(
            "kernel of {label} closed under the bracket: {} (automatic when the defining form is closed)",
            is_subalgebra(g, s)
        ));
    }
}

pub fn check_symplectic_pair(g: &LieAlgebra, omega1: &ExteriorForm, omega2: &ExteriorForm) -> Result<PairReport> {
    let n = g.dim();
    expect_degree(omega1, 2, n)?;
    expect_degree(omega2, 2, n)?;
    let mut rep = PairReport::new(PairKind::Symplectic, n);

    for (label, w) in [("omega1", omega1), ("omega2", omega2)] {
        rep.axiom(&format!("{label} non-trivial"), !w.is_zero(), if w.is_zero() { "zero form" } else { "nonzero" });
    }
    for (label, w) in [("omega1", omega1), ("omega2", omega2)] {
        let dw = g.ce_d(w)?;
        rep.axiom(&format!("{label} closed"), dw.is_zero(), format!("d{label} = {dw}"));
    }

    let r1 = exterior::rank_two_form(omega1)?;
    let r2 = exterior::rank_two_form(omega2)?;
    rep.k = Some(r1 / 2);
    rep.l = Some(r2 / 2);
    rep.axiom(
        "ranks complementary",
        r1 > 0 && r2 > 0 && r1 + r2 == n,
        format!("rank omega1 = {r1}, rank omega2 = {r2}, n = {n} (need n = 2k + 2l, k, l > 0)"),
    );

    let k1 = exterior::kernel(omega1)?;
    let k2 = exterior::kernel(omega2)?;
    rep.kernel_dims = [Some(k1.dim()), Some(k2.dim())];
    rep.axiom(
        "kernels complementary",
        k1.is_complement_of(&k2),
        format!("dim ker omega1 = {}, dim ker omega2 = {}, dim sum = {}", k1.dim(), k2.dim(), k1.sum(&k2).dim()),
    );

    for (label, w, other_label, ker) in [("omega1", omega1, "omega2", &k2), ("omega2", omega2, "omega1", &k1)] {
        let restricted = exterior::restrict(w, ker)?;
        let r = exterior::rank_two_form(&restricted)?;
        rep.axiom(
            &format!("{label} symplectic on ker {other_label}"),
            ker.dim() > 0 && r == ker.dim(),
            format!("restriction to a {}-dimensional kernel has rank {r}", ker.dim()),
        );
    }
    note_integrability(&mut rep, g, &[("omega1", &k1), ("omega2", &k2)]);
    Ok(rep.finish())
}

/// Class axiom plus the kernel of `alpha ^ (d alpha)^k`.
fn class_and_kernel(
    g: &LieAlgebra,
    rep: &mut PairReport,
    label: &str,
    alpha: &ExteriorForm,
) -> Result<Option<(FormClass, ExteriorForm, Subspace)>> {
    match form_class(g, alpha) {
        Err(Error::ZeroForm) => {
            rep.axiom(&format!("{label} non-trivial"), false, "zero form");
            rep.axiom(&format!("{label} has constant class"), false, "undefined for the zero form");
            Ok(None)
        }
        Err(e) => Err(e),
        Ok(class) => {
            rep.axiom(&format!("{label} non-trivial"), true, "nonzero");
            let detail = if class.valid {
                format!("class {} (k = {})", class.class(), class.k)
            } else {
                format!("{label} ^ (d{label})^{} = 0 although (d{label})^{} != 0", class.k, class.k)
            };
            rep.axiom(&format!("{label} has constant class"), class.valid, detail);
            let chi = characteristic_form(g, alpha, class.k)?;
            let ker = exterior::kernel(&chi)?;
            Ok(Some((class, chi, ker)))
        }
    }
}

/// `chi` restricts to a nonzero top-degree form on `sub`.
fn restricts_to_volume(chi: &ExteriorForm, sub: &Subspace) -> Result<bool> {
    Ok(sub.dim() == chi.degree() && !exterior::restrict(chi, sub)?.is_zero())
}

pub fn check_contact_symplectic_pair(g: &LieAlgebra, alpha: &ExteriorForm, beta: &ExteriorForm) -> Result<PairReport> {
    let n = g.dim();
    expect_degree(alpha, 1, n)?;
    expect_degree(beta, 2, n)?;
    let mut rep = PairReport::new(PairKind::ContactSymplectic, n);

    let alpha_data = class_and_kernel(g, &mut rep, "alpha", alpha)?;
    rep.axiom("beta non-trivial", !beta.is_zero(), if beta.is_zero() { "zero form" } else { "nonzero" });
    let db = g.ce_d(beta)?;
    rep.axiom("beta closed", db.is_zero(), format!("dbeta = {db}"));
    let rb = exterior::rank_two_form(beta)?;
    let l = rb / 2;
    rep.l = Some(l);
    let ker_b = exterior::kernel(beta)?;

    match alpha_data {
        Some((class, chi, ker_a)) => {
            let k = class.k;
            rep.k = Some(k);
            rep.kernel_dims = [Some(ker_a.dim()), Some(ker_b.dim())];
            rep.axiom(
                "dimension 2k+2l+1",
                l > 0 && n == 2 * k + 2 * l + 1,
                format!("k = {k}, l = {l}, n = {n}"),
            );
            rep.axiom(
                "kernels complementary",
                ker_a.is_complement_of(&ker_b),
                format!(
                    "dim ker alpha^(dalpha)^{k} = {}, dim ker beta = {}, dim sum = {}",
                    ker_a.dim(),
                    ker_b.dim(),
                    ker_a.sum(&ker_b).dim()
                ),
            );
            let contact = restricts_to_volume(&chi, &ker_b)?;
            rep.axiom(
                "alpha contact on ker beta",
                contact,
                format!("ker beta has dimension {}, class form degree {}", ker_b.dim(), chi.degree()),
            );
            let rb_res = exterior::rank_two_form(&exterior::restrict(beta, &ker_a)?)?;
            rep.axiom(
                "beta symplectic on ker alpha^(dalpha)^k",
                ker_a.dim() > 0 && rb_res == ker_a.dim(),
                format!("restriction to a {}-dimensional kernel has rank {rb_res}", ker_a.dim()),
            );
            note_integrability(&mut rep, g, &[("alpha^(dalpha)^k", &ker_a), ("beta", &ker_b)]);
        }
        None => {
            rep.kernel_dims = [None, Some(ker_b.dim())];
            for name in [
                "dimension 2k+2l+1",
                "kernels complementary",
                "alpha contact on ker beta",
                "beta symplectic on ker alpha^(dalpha)^k",
            ] {
                rep.axiom(name, false, "alpha is zero");
            }
        }
    }
    Ok(rep.finish())
}

pub fn check_contact_pair(g: &LieAlgebra, alpha: &ExteriorForm, gamma: &ExteriorForm) -> Result<PairReport> {
    let n = g.dim();
    expect_degree(alpha, 1, n)?;
    expect_degree(gamma, 1, n)?;
    let mut rep = PairReport::new(PairKind::Contact, n);

    let a = class_and_kernel(g, &mut rep, "alpha", alpha)?;
    let c = class_and_kernel(g, &mut rep, "gamma", gamma)?;
    match (a, c) {
        (Some((ca, chi_a, ker_a)), Some((cg, chi_g, ker_g))) => {
            let (k, l) = (ca.k, cg.k);
            rep.k = Some(k);
            rep.l = Some(l);
            rep.kernel_dims = [Some(ker_a.dim()), Some(ker_g.dim())];
            rep.axiom("dimension 2k+2l+2", n == 2 * k + 2 * l + 2, format!("k = {k}, l = {l}, n = {n}"));
            rep.axiom(
                "kernels complementary",
                ker_a.is_complement_of(&ker_g),
                format!(
                    "dim ker alpha^(dalpha)^{k} = {}, dim ker gamma^(dgamma)^{l} = {}, dim sum = {}",
                    ker_a.dim(),
                    ker_g.dim(),
                    ker_a.sum(&ker_g).dim()
                ),
            );
            let alpha_contact = restricts_to_volume(&chi_a, &ker_g)?;
            rep.axiom(
                "alpha contact on ker gamma^(dgamma)^l",
                alpha_contact,
                format!("kernel dimension {}, class form degree {}", ker_g.dim(), chi_a.degree()),
            );
            let gamma_contact = restricts_to_volume(&chi_g, &ker_a)?;
            rep.axiom(
                "gamma contact on ker alpha^(dalpha)^k",
                gamma_contact,
                format!("kernel dimension {}, class form degree {}", ker_a.dim(), chi_g.degree()),
            );
            note_integrability(&mut rep, g, &[("alpha^(dalpha)^k", &ker_a), ("gamma^(dgamma)^l", &ker_g)]);
        }
        _ => {
            for name in [
                "dimension 2k+2l+2",
                "kernels complementary",
                "alpha contact on ker gamma^(dgamma)^l",
                "gamma contact on ker alpha^(dalpha)^k",
            ] {
                rep.axiom(name, false, "a defining form is zero");
            }
        }
    }
    Ok(rep.finish())
}

/// Dispatch on the pair kind; `forms` must hold exactly two forms.
pub fn check_pair(g: &LieAlgebra, kind: PairKind, forms: &[ExteriorForm]) -> Result<PairReport> {
    let [a, b] = forms else {
        return Err(Error::Input(format!("a pair needs exactly two forms, got {}", forms.len())));
    };
    match kind {
        PairKind::Symplectic => check_symplectic_pair(g, a, b),
        PairKind::ContactSymplectic => check_contact_symplectic_pair(g, a, b),
        PairKind::Contact => check_contact_pair(g, a, b),
    }
}

/// `(omega1 + omega2, omega1 - omega2)`.
pub fn pair_to_pm(omega1: &ExteriorForm, omega2: &ExteriorForm) -> Result<(ExteriorForm, ExteriorForm)> {
    Ok((omega1.add(omega2)?, omega1.sub(omega2)?))
}

/// Inverse of [`pair_to_pm`].
pub fn pm_to_pair(plus: &ExteriorForm, minus: &ExteriorForm) -> Result<(ExteriorForm, ExteriorForm)> {
    let half = Scalar::ratio(1, 2);
    Ok((plus.add(minus)?.scale(&half), plus.sub(minus)?.scale(&half)))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoupleType {
    /// `w+ ^ w- = 0` and `w+^2 = -w-^2`.
    SymplecticPair,
    /// `w+ ^ w- = 0` and `w+^2 = w-^2`.
    ConformalCouple,
    Neither,
}

/// Classify two nondegenerate 2-forms on a 4-dimensional space.
pub fn couple_type(plus: &ExteriorForm, minus: &ExteriorForm) -> Result<CoupleType> {
    for w in [plus, minus] {
        expect_degree(w, 2, 4)?;
        if !exterior::is_nondegenerate(w)? {
            return Err(Error::Precondition(format!("degenerate input {w}")));
        }
    }
    if !plus.wedge(minus)?.is_zero() {
        return Ok(CoupleType::Neither);
    }
    let p2 = plus.wedge(plus)?;
    let m2 = minus.wedge(minus)?;
    Ok(if p2 == m2.neg() {
        CoupleType::SymplecticPair
    } else if p2 == m2 {
        CoupleType::ConformalCouple
    } else {
        CoupleType::Neither
    })
}

/// [`couple_type`] after checking both forms are closed on `g`.
pub fn couple_type_on(g: &LieAlgebra, plus: &ExteriorForm, minus: &ExteriorForm) -> Result<CoupleType> {
    for w in [plus, minus] {
        let dw = g.ce_d(w)?;
        if !dw.is_zero() {
            return Err(Error::NotClosed(dw.to_string()));
        }
    }
    couple_type(plus, minus)
}
