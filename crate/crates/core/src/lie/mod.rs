//! Finite-dimensional Lie algebras given by structure constants, and the
//! Chevalley–Eilenberg complex of left-invariant forms.
//!
//! Sign convention: for a 1-form `a`, `(da)(x, y) = -a([x, y])`. With
//! `[e_i, e_j] = sum_k c_ij^k e_k` this gives
//! `d alpha_k = - sum_{i<j} c_ij^k alpha_i ^ alpha_j`, so structure equations
//! can be transcribed directly (see [`StructureConstants::from_structure_equations`]).

pub mod catalog;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exterior::ExteriorForm;
use crate::form::{Blade, MAX_DIM};
use crate::linalg::{self, Matrix};
use crate::scalar::Scalar;

pub use catalog::{catalog_get, Catalog, CatalogEntry, Provenance};

/// Raw structure constants, antisymmetric by construction but not
/// necessarily satisfying Jacobi.
#[derive(Clone, PartialEq, Debug)]
pub struct StructureConstants {
    dim: usize,
    // c[(i*n + j)*n + k], 0-based
    table: Vec<Scalar>,
}

/// Where the Jacobi identity breaks.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct JacobiFailure {
    pub triple: (usize, usize, usize),
    pub residual: Vec<Scalar>,
}

impl StructureConstants {
    pub fn abelian(dim: usize) -> Result<Self> {
        if dim > MAX_DIM {
            return Err(Error::DimensionTooLarge(dim));
        }
        Ok(StructureConstants {
            dim,
            table: vec![Scalar::zero(); dim * dim * dim],
        })
    }

    /// Build from structure equations `d alpha_k = w_k`; unlisted duals are closed.
    pub fn from_structure_equations(dim: usize, eqs: &[(usize, ExteriorForm)]) -> Result<Self> {
        let mut c = StructureConstants::abelian(dim)?;
        for (k, w) in eqs {
            if w.degree() != 2 || w.dim() != dim {
                return Err(Error::Precondition(format!(
                    "structure equation for alpha_{k} must be a 2-form in dimension {dim}"
                )));
            }
            c.check_index(*k)?;
            for (idx, coeff) in w.terms() {
                let cur = c.get(idx[0], idx[1], *k);
                c.set(idx[0], idx[1], *k, &cur - coeff);
            }
        }
        Ok(c)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.dim {
            return Err(Error::InvalidIndex(vec![i], "generator index out of range"));
        }
        Ok(())
    }

    fn slot(&self, i: usize, j: usize, k: usize) -> usize {
        ((i - 1) * self.dim + (j - 1)) * self.dim + (k - 1)
    }

    /// `c_ij^k`, 1-based.
    pub fn get(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.table[self.slot(i, j, k)].clone()
    }

    /// Set `c_ij^k = value` and `c_ji^k = -value`.
    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Scalar) {
        assert!(i != j || value.is_zero(), "[e_i, e_i] must vanish");
        let s = self.slot(j, i, k);
        self.table[s] = -&value;
        let s = self.slot(i, j, k);
        self.table[s] = value;
    }

    /// Set `[e_i, e_j] = sum out_k e_k`, replacing any previous value.
    pub fn set_bracket(&mut self, i: usize, j: usize, out: &[(usize, Scalar)]) -> Result<()> {
        self.check_index(i)?;
        self.check_index(j)?;
        if i == j {
            return Err(Error::Precondition(format!("bracket [e{i}, e{i}] must be zero")));
        }
        for k in 1..=self.dim {
            self.set(i, j, k, Scalar::zero());
        }
        for (k, v) in out {
            self.check_index(*k)?;
            let cur = self.get(i, j, *k);
            self.set(i, j, *k, &cur + v);
        }
        Ok(())
    }

    /// Flip the sign of `c_ij^k` (and of `c_ji^k`).
    pub fn flip_sign(&mut self, i: usize, j: usize, k: usize) {
        let v = self.get(i, j, k);
        self.set(i, j, k, -v);
    }

    /// Nonzero constants `(i, j, k, c_ij^k)` with `i < j`.
    pub fn nonzero(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                for k in 1..=n {
                    let c = self.get(i, j, k);
                    if !c.is_zero() {
                        out.push((i, j, k, c));
                    }
                }
            }
        }
        out
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        (1..=self.dim).map(|k| self.get(i, j, k)).collect()
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim;
        let mut out = vec![Scalar::zero(); n];
        for i in 1..=n {
            if x[i - 1].is_zero() {
                continue;
            }
            for j in 1..=n {
                if y[j - 1].is_zero() || i == j {
                    continue;
                }
                let f = &x[i - 1] * &y[j - 1];
                for k in 1..=n {
                    let c = &self.table[self.slot(i, j, k)];
                    if !c.is_zero() {
                        out[k - 1] = &out[k - 1] + &(&f * c);
                    }
                }
            }
        }
        out
    }

    /// Check `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0` for all `i<j<k`.
    pub fn jacobi_check(&self) -> std::result::Result<(), JacobiFailure> {
        let n = self.dim;
        let e = |i| linalg::unit_vector(n, i);
        for i in 1..=n {
            for j in i + 1..=n {
                for k in j + 1..=n {
                    let t1 = self.bracket(&self.bracket_basis(i, j), &e(k));
                    let t2 = self.bracket(&self.bracket_basis(j, k), &e(i));
                    let t3 = self.bracket(&self.bracket_basis(k, i), &e(j));
                    let residual: Vec<Scalar> = (0..n).map(|m| &(&t1[m] + &t2[m]) + &t3[m]).collect();
                    if residual.iter().any(|x| !x.is_zero()) {
                        return Err(JacobiFailure {
                            triple: (i, j, k),
                            residual,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// `d alpha_k`.
    pub fn d_dual(&self, k: usize) -> ExteriorForm {
        let n = self.dim;
        let mut w = ExteriorForm::zero(n, 2).expect("dimension checked");
        for i in 1..=n {
            for j in i + 1..=n {
                let c = self.get(i, j, k);
                if !c.is_zero() {
                    w.add_term(Blade::from_indices(n, &[i, j]).expect("i<j"), &-c);
                }
            }
        }
        w
    }

    fn d_duals(&self) -> Vec<ExteriorForm> {
        (1..=self.dim).map(|k| self.d_dual(k)).collect()
    }

    /// Chevalley–Eilenberg differential, extended from 1-forms as an
    /// antiderivation.
    pub fn ce_d(&self, form: &ExteriorForm) -> Result<ExteriorForm> {
        if form.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: form.dim(),
            });
        }
        let duals = self.d_duals();
        let mut out = ExteriorForm::zero(self.dim, form.degree() + 1)?;
        for (blade, c) in form.blades() {
            accumulate_d_blade(&duals, blade, c, &mut out);
        }
        Ok(out)
    }

    /// Matrix of `d` from degree `p` to degree `p + 1` in lexicographic blade bases.
    pub fn d_matrix(&self, p: usize) -> Matrix {
        let n = self.dim;
        let cols = Blade::all(n, p);
        let rows = Blade::all(n, p + 1);
        let duals = self.d_duals();
        let mut m = vec![vec![Scalar::zero(); cols.len()]; rows.len()];
        let one = Scalar::one();
        for (ci, blade) in cols.iter().enumerate() {
            let mut image = ExteriorForm::zero(n, p + 1).expect("dimension checked");
            accumulate_d_blade(&duals, *blade, &one, &mut image);
            for (b, v) in image.blades() {
                let ri = rows.binary_search(&b).expect("blade of degree p+1");
                m[ri][ci] = v.clone();
            }
        }
        m
    }

    /// `d_{p+1} d_p = 0` in every degree; equivalent to the Jacobi identity.
    pub fn d_squared_vanishes(&self) -> bool {
        let n = self.dim;
        (0..n.saturating_sub(1)).all(|p| {
            let inner = self.d_matrix(p);
            let outer = self.d_matrix(p + 1);
            let cols = Blade::all(n, p).len();
            linalg::mat_mul(&outer, &inner, cols).iter().flatten().all(Scalar::is_zero)
        })
    }

    /// Constants in the basis `f_i = sum_a basis[i][a] e_a`. Jacobi is
    /// preserved; `None` when `basis` is singular.
    pub fn change_basis(&self, basis: &Matrix) -> Option<StructureConstants> {
        let n = self.dim;
        let inv = linalg::inverse(basis)?;
        let mut out = StructureConstants::abelian(n).expect("same dimension");
        for i in 1..=n {
            for j in i + 1..=n {
                let br = self.bracket(&basis[i - 1], &basis[j - 1]);
                // coordinates of br in the f basis: br = sum_k y_k f_k, y = br * inv
                for k in 1..=n {
                    let y = (0..n).fold(Scalar::zero(), |acc, a| &acc + &(&br[a] * &inv[a][k - 1]));
                    out.set(i, j, k, y);
                }
            }
        }
        Some(out)
    }

    pub fn is_unimodular(&self) -> bool {
        (1..=self.dim).all(|i| {
            (1..=self.dim)
                .fold(Scalar::zero(), |acc, j| &acc + &self.get(i, j, j))
                .is_zero()
        })
    }
}

fn accumulate_d_blade(duals: &[ExteriorForm], blade: Blade, c: &Scalar, out: &mut ExteriorForm) {
    let n = out.dim();
    let idx = blade.indices();
    for (r, &i) in idx.iter().enumerate() {
        let left = Blade::from_indices(n, &idx[..r]).expect("sorted");
        let right = Blade::from_indices(n, &idx[r + 1..]).expect("sorted");
        let sign_r = if r % 2 == 0 { 1 } else { -1 };
        for (b, w) in duals[i - 1].blades() {
            let Some(s1) = left.wedge_sign(b) else { continue };
            let mid = left.union(b);
            let Some(s2) = mid.wedge_sign(right) else { continue };
            let v = c * w;
            let v = if sign_r * s1 * s2 < 0 { -v } else { v };
            out.add_term(mid.union(right), &v);
        }
    }
}

/// A Lie algebra: structure constants that passed the Jacobi check.
#[derive(Clone, PartialEq, Debug)]
pub struct LieAlgebra {
    name: Option<String>,
    constants: StructureConstants,
}

impl LieAlgebra {
    pub fn new(constants: StructureConstants, name: Option<String>) -> Result<Self> {
        if let Err(f) = constants.jacobi_check() {
            let (i, j, k) = f.triple;
            return Err(Error::Jacobi {
                i,
                j,
                k,
                residual: format!("{:?}", f.residual),
            });
        }
        Ok(LieAlgebra { name, constants })
    }

    /// Skip the Jacobi check, e.g. to model a corrupted presentation.
    pub fn unchecked(constants: StructureConstants, name: Option<String>) -> Self {
        LieAlgebra { name, constants }
    }

    pub fn named(constants: StructureConstants, name: &str) -> Result<Self> {
        LieAlgebra::new(constants, Some(name.to_string()))
    }

    pub fn abelian(dim: usize) -> Result<Self> {
        LieAlgebra::named(StructureConstants::abelian(dim)?, &format!("abelian{dim}"))
    }

    pub fn from_structure_equations(dim: usize, eqs: &[(usize, ExteriorForm)], name: &str) -> Result<Self> {
        LieAlgebra::named(StructureConstants::from_structure_equations(dim, eqs)?, name)
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = Some(name.to_string());
        self
    }

    pub fn dim(&self) -> usize {
        self.constants.dim
    }

    pub fn constants(&self) -> &StructureConstants {
        &self.constants
    }

    pub fn ce_d(&self, form: &ExteriorForm) -> Result<ExteriorForm> {
        self.constants.ce_d(form)
    }

    pub fn is_closed(&self, form: &ExteriorForm) -> Result<bool> {
        Ok(self.ce_d(form)?.is_zero())
    }

    pub fn is_unimodular(&self) -> bool {
        self.constants.is_unimodular()
    }

    /// Basis of the closed `p`-forms, read off the reduced echelon form of `d`.
    pub fn closed_forms(&self, p: usize) -> Result<Vec<ExteriorForm>> {
        let n = self.dim();
        if p > n {
            return Err(Error::Precondition(format!("degree {p} exceeds dimension {n}")));
        }
        let cols = Blade::all(n, p);
        let d = self.constants.d_matrix(p);
        linalg::null_space(&d, cols.len())
            .into_iter()
            .map(|v| {
                ExteriorForm::from_terms(n, p, cols.iter().zip(v).map(|(b, c)| (b.indices(), c)))
            })
            .collect()
    }

    /// Is `form` a coboundary `d(beta)`?
    pub fn is_exact(&self, form: &ExteriorForm) -> Result<bool> {
        let p = form.degree();
        if p == 0 {
            return Ok(form.is_zero());
        }
        let n = self.dim();
        let cols = Blade::all(n, p - 1).len();
        let rows = Blade::all(n, p);
        let mut d = self.constants.d_matrix(p - 1);
        let base = linalg::rank(&d, cols);
        for (row, blade) in d.iter_mut().zip(&rows) {
            row.push(form.coefficient_of(*blade));
        }
        Ok(linalg::rank(&d, cols + 1) == base)
    }

    /// Betti numbers `b_0 .. b_n` of the Chevalley–Eilenberg complex.
    pub fn cohomology_dims(&self) -> Vec<usize> {
        let n = self.dim();
        let ranks: Vec<usize> = (0..=n)
            .map(|p| {
                let cols = Blade::all(n, p).len();
                linalg::rank(&self.constants.d_matrix(p), cols)
            })
            .collect();
        let betti: Vec<usize> = (0..=n)
            .map(|p| {
                let chains = Blade::all(n, p).len();
                let incoming = if p == 0 { 0 } else { ranks[p - 1] };
                chains - ranks[p] - incoming
            })
            .collect();
        if self.is_unimodular() {
            debug_assert!(
                (0..=n).all(|p| betti[p] == betti[n - p]),
                "Poincaré duality fails for a unimodular algebra: {betti:?}"
            );
        }
        betti
    }

    /// `self (+) other`, generators of `other` numbered after those of `self`.
    pub fn direct_sum(&self, other: &LieAlgebra) -> Result<LieAlgebra> {
        let (n, m) = (self.dim(), other.dim());
        let mut c = StructureConstants::abelian(n + m)?;
        for (i, j, k, v) in self.constants.nonzero() {
            c.set(i, j, k, v);
        }
        for (i, j, k, v) in other.constants.nonzero() {
            c.set(i + n, j + n, k + n, v);
        }
        let name = match (self.name(), other.name()) {
            (Some(a), Some(b)) => Some(format!("{a}+{b}")),
            _ => None,
        };
        LieAlgebra::new(c, name)
    }
}

impl fmt::Display for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} (dim {})", self.name().unwrap_or("<unnamed>"), self.dim())?;
        for k in 1..=self.dim() {
            writeln!(f, "  d a{k} = {}", self.constants.d_dual(k))?;
        }
        Ok(())
    }
}
