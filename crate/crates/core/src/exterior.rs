//! Exact multilinear algebra on constant-coefficient forms: rank and kernel
//! of forms, interior products, and restriction to subspaces.

use crate::error::{Error, Result};
use crate::form::{Blade, Form};
use crate::linalg::{self, Matrix, Subspace};
use crate::scalar::Scalar;

pub type ExteriorForm = Form<Scalar>;

/// `dx^{i1} ^ ... ^ dx^{ip}` with coefficient 1.
pub fn basis_form(dim: usize, indices: &[usize]) -> ExteriorForm {
    ExteriorForm::basis(dim, indices).expect("valid basis tuple")
}

/// Sum of `c * dx^I` over the given terms.
pub fn form_from(dim: usize, degree: usize, terms: &[(&[usize], i64)]) -> Result<ExteriorForm> {
    ExteriorForm::from_terms(
        dim,
        degree,
        terms.iter().map(|(idx, c)| (idx.to_vec(), Scalar::int(*c))),
    )
}

/// The standard volume form `dx^1 ^ ... ^ dx^n`.
pub fn volume_form(dim: usize) -> ExteriorForm {
    let idx: Vec<usize> = (1..=dim).collect();
    basis_form(dim, &idx)
}

pub fn contract(v: &[Scalar], form: &ExteriorForm) -> Result<ExteriorForm> {
    form.contract(v)
}

/// Skew-symmetric coefficient matrix `W[i][j] = omega(e_i, e_j)`.
pub fn skew_matrix(omega: &ExteriorForm) -> Result<Matrix> {
    if omega.degree() != 2 {
        return Err(Error::DegreeMismatch {
            expected: 2,
            found: omega.degree(),
        });
    }
    let n = omega.dim();
    let mut m = vec![vec![Scalar::zero(); n]; n];
    for (idx, c) in omega.terms() {
        let (i, j) = (idx[0] - 1, idx[1] - 1);
        m[i][j] = c.clone();
        m[j][i] = -c;
    }
    Ok(m)
}

/// Rank of a 2-form, i.e. of its skew coefficient matrix.
pub fn rank_two_form(omega: &ExteriorForm) -> Result<usize> {
    let m = skew_matrix(omega)?;
    let r = linalg::rank(&m, omega.dim());
    debug_assert!(r.is_multiple_of(2), "skew rank must be even");
    debug_assert_eq!(r, rank_by_powers(omega), "matrix rank disagrees with wedge powers");
    Ok(r)
}

/// Rank as `2 * max{k : omega^k != 0}`.
pub fn rank_by_powers(omega: &ExteriorForm) -> usize {
    let mut k = 0;
    let mut power = ExteriorForm::constant(omega.dim(), Scalar::one()).expect("0-form");
    loop {
        power = power.wedge(omega).expect("same space");
        if power.is_zero() {
            return 2 * k;
        }
        k += 1;
    }
}

pub fn is_nondegenerate(omega: &ExteriorForm) -> Result<bool> {
    Ok(rank_two_form(omega)? == omega.dim())
}

/// `{v : contract(v, form) = 0}`.
pub fn kernel(form: &ExteriorForm) -> Result<Subspace> {
    if form.degree() == 0 {
        return Err(Error::Precondition("kernel needs degree >= 1".into()));
    }
    let n = form.dim();
    if form.degree() > n {
        return Ok(Subspace::whole(n));
    }
    // row per (p-1)-blade, column per basis vector
    let rows_index = Blade::all(n, form.degree() - 1);
    let mut m = vec![vec![Scalar::zero(); n]; rows_index.len()];
    for (blade, c) in form.blades() {
        for i in blade.indices() {
            let row = rows_index
                .binary_search(&blade.without(i))
                .expect("blade of degree p-1");
            let v = if blade.removal_sign(i) < 0 { -c } else { c.clone() };
            m[row][i - 1] = &m[row][i - 1] + &v;
        }
    }
    Subspace::span(n, &linalg::null_space(&m, n))
}

/// Pullback along the inclusion of `sub`, in the echelon basis of `sub`.
pub fn restrict(form: &ExteriorForm, sub: &Subspace) -> Result<ExteriorForm> {
    if sub.ambient() != form.dim() {
        return Err(Error::DimensionMismatch {
            expected: form.dim(),
            found: sub.ambient(),
        });
    }
    let k = sub.dim();
    // pullback of dx^i is sum_j basis[j][i] f^j
    let pulled: Vec<ExteriorForm> = (0..form.dim())
        .map(|i| {
            ExteriorForm::from_terms(
                k,
                1,
                sub.basis()
                    .iter()
                    .enumerate()
                    .map(|(j, v)| (vec![j + 1], v[i].clone())),
            )
        })
        .collect::<Result<_>>()?;
    let mut out = ExteriorForm::zero(k, form.degree())?;
    for (blade, c) in form.blades() {
        let mut term = ExteriorForm::constant(k, c.clone())?;
        for i in blade.indices() {
            term = term.wedge(&pulled[i - 1])?;
        }
        out = out.add(&term)?;
    }
    Ok(out)
}

/// Coefficient of a top-degree form against `dx^1 ^ ... ^ dx^n`.
pub fn top_coefficient(form: &ExteriorForm) -> Result<Scalar> {
    if form.degree() != form.dim() {
        return Err(Error::DegreeMismatch {
            expected: form.dim(),
            found: form.degree(),
        });
    }
    let idx: Vec<usize> = (1..=form.dim()).collect();
    Ok(form.coefficient(&idx))
}
