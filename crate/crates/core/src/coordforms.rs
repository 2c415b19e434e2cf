//! Differential forms with polynomial coefficients on a coordinate chart.
//!
//! Coordinates are `x1..xn` (shown as `x, y, z, t` in dimension 4); a
//! [`PolyForm`] stores one polynomial per basis blade `dx_I`.

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exterior::{self, ExteriorForm};
use crate::form::{Blade, Form};
use crate::lie::LieAlgebra;
use crate::pairs;
use crate::poly::{PolyMap, Polynomial};
use crate::scalar::Scalar;

pub type PolyForm = Form<Polynomial>;

/// `dx_{i1} ^ ... ^ dx_{ip}` on an `n`-dimensional chart.
pub fn dx(n: usize, indices: &[usize]) -> Result<PolyForm> {
    PolyForm::basis(n, indices)
}

/// Promote a constant-coefficient form.
pub fn from_exterior(form: &ExteriorForm) -> Result<PolyForm> {
    let mut out = PolyForm::zero(form.dim(), form.degree())?;
    for (idx, c) in form.terms() {
        let q = c
            .as_rational()
            .ok_or_else(|| Error::Precondition("polynomial forms have rational coefficients".into()))?;
        out = out.add(&PolyForm::monomial(form.dim(), &idx, Polynomial::constant(q.clone()))?)?;
    }
    Ok(out)
}

/// Exterior derivative through formal partial derivatives.
pub fn pd(phi: &PolyForm) -> Result<PolyForm> {
    let n = phi.dim();
    let mut out = PolyForm::zero(n, phi.degree() + 1)?;
    for (blade, f) in phi.blades() {
        for i in 1..=n {
            let df = f.partial(i);
            if df.is_zero() {
                continue;
            }
            let Some(sign) = Blade::single(i).wedge_sign(blade) else { continue };
            let c = if sign < 0 { df.neg() } else { df };
            out.add_term(Blade::single(i).union(blade), &c);
        }
    }
    Ok(out)
}

pub fn pwedge(phi: &PolyForm, psi: &PolyForm) -> Result<PolyForm> {
    phi.wedge(psi)
}

/// `f^* phi` for `phi` on the target chart of `f`.
pub fn pullback(f: &PolyMap, phi: &PolyForm) -> Result<PolyForm> {
    if phi.dim() != f.target() {
        return Err(Error::DimensionMismatch {
            expected: f.target(),
            found: phi.dim(),
        });
    }
    let n = f.source();
    let dfs: Vec<PolyForm> = f
        .components()
        .iter()
        .map(|p| {
            PolyForm::from_terms(n, 1, (1..=n).map(|j| (vec![j], p.partial(j))))
        })
        .collect::<Result<_>>()?;
    let mut out = PolyForm::zero(n, phi.degree())?;
    for (blade, c) in phi.blades() {
        let mut term = PolyForm::constant(n, c.substitute(f.components())?)?;
        for i in blade.indices() {
            term = term.wedge(&dfs[i - 1])?;
        }
        out = out.add(&term)?;
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct InvarianceVerdict {
    pub generator: usize,
    pub invariant: bool,
    /// `f^* phi - phi`.
    pub difference: PolyForm,
}

/// `f^* phi == phi` exactly, for each generator `f`.
pub fn invariance_check(phi: &PolyForm, gens: &[PolyMap]) -> Result<Vec<InvarianceVerdict>> {
    gens.iter()
        .enumerate()
        .map(|(k, f)| {
            if f.source() != f.target() || f.source() != phi.dim() {
                return Err(Error::Precondition(format!(
                    "generator {} must map the {}-dimensional chart to itself",
                    k + 1,
                    phi.dim()
                )));
            }
            let difference = pullback(f, phi)?.sub(phi)?;
            Ok(InvarianceVerdict {
                generator: k + 1,
                invariant: difference.is_zero(),
                difference,
            })
        })
        .collect()
}

/// The constant-coefficient form at `point`.
pub fn evaluate(phi: &PolyForm, point: &[BigRational]) -> Result<ExteriorForm> {
    if point.len() != phi.dim() {
        return Err(Error::DimensionMismatch {
            expected: phi.dim(),
            found: point.len(),
        });
    }
    let mut out = ExteriorForm::zero(phi.dim(), phi.degree())?;
    for (idx, c) in phi.terms() {
        let v = Scalar::from(c.eval(point)?);
        out = out.add(&ExteriorForm::monomial(phi.dim(), &idx, v)?)?;
    }
    Ok(out)
}

/// `{-1, -1/2, 0, 1/2, 1}^n`, in lexicographic order.
pub fn default_samples(n: usize) -> Vec<Vec<BigRational>> {
    let values: Vec<BigRational> = [(-1, 1), (-1, 2), (0, 1), (1, 2), (1, 1)]
        .iter()
        .map(|&(a, b)| BigRational::new(a.into(), b.into()))
        .collect();
    let mut points = vec![Vec::new()];
    for _ in 0..n {
        points = points
            .into_iter()
            .flat_map(|p| {
                values.iter().map(move |v| {
                    let mut q = p.clone();
                    q.push(v.clone());
                    q
                })
            })
            .collect();
    }
    points
}

#[derive(Clone, Debug, Serialize)]
pub struct RankReport {
    /// `phi ^ phi` is the zero polynomial form.
    pub square_vanishes: bool,
    pub ranks: Vec<usize>,
    pub min: usize,
    pub max: usize,
    /// A blade whose coefficient is a nonzero constant; together with a
    /// vanishing square this certifies rank exactly 2 at every point.
    pub constant_component: Option<Vec<usize>>,
}

impl RankReport {
    pub fn constant_rank(&self) -> Option<usize> {
        (self.min == self.max).then_some(self.min)
    }
}

/// Symbolic square test plus pointwise ranks.
pub fn generic_rank(phi: &PolyForm, samples: &[Vec<BigRational>]) -> Result<RankReport> {
    if phi.degree() != 2 {
        return Err(Error::DegreeMismatch {
            expected: 2,
            found: phi.degree(),
        });
    }
    if samples.is_empty() {
        return Err(Error::Precondition("empty sample list".into()));
    }
    let square_vanishes = phi.wedge(phi)?.is_zero();
    let ranks = samples
        .iter()
        .map(|p| exterior::rank_two_form(&evaluate(phi, p)?))
        .collect::<Result<Vec<_>>>()?;
    let constant_component = phi
        .terms()
        .find(|(_, c)| c.as_constant().is_some_and(|q| !q.is_zero()))
        .map(|(idx, _)| idx);
    Ok(RankReport {
        square_vanishes,
        min: *ranks.iter().min().expect("nonempty"),
        max: *ranks.iter().max().expect("nonempty"),
        ranks,
        constant_component,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CoordPairReport {
    pub closed: [bool; 2],
    pub squares_vanish: [bool; 2],
    /// `c` with `omega1 ^ omega2 = c dx1^..^dxn`, when `c` is constant.
    pub product_constant: Option<Scalar>,
    pub ranks: [RankReport; 2],
    pub samples: usize,
    /// Points where the evaluated forms fail the pointwise pair check.
    pub pointwise_failures: Vec<Vec<Scalar>>,
    pub verdict: bool,
}

/// Check a candidate symplectic pair in dimension 4: symbolic closedness,
/// vanishing squares and a constant volume product, plus the linear-algebra
/// pair axioms at every sample.
pub fn check_coordinate_pair(
    omega1: &PolyForm,
    omega2: &PolyForm,
    samples: &[Vec<BigRational>],
) -> Result<CoordPairReport> {
    let n = omega1.dim();
    if omega2.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: omega2.dim(),
        });
    }
    let closed = [pd(omega1)?.is_zero(), pd(omega2)?.is_zero()];
    let squares_vanish = [omega1.wedge(omega1)?.is_zero(), omega2.wedge(omega2)?.is_zero()];
    let product = omega1.wedge(omega2)?;
    let product_constant = if product.degree() == n {
        let top: Vec<usize> = (1..=n).collect();
        product.coefficient(&top).as_constant().filter(|c| !c.is_zero()).map(Scalar::from)
    } else {
        None
    };
    let ranks = [generic_rank(omega1, samples)?, generic_rank(omega2, samples)?];
    let flat = LieAlgebra::abelian(n)?;
    let mut pointwise_failures = Vec::new();
    for p in samples {
        let (a, b) = (evaluate(omega1, p)?, evaluate(omega2, p)?);
        if !pairs::check_symplectic_pair(&flat, &a, &b)?.verdict {
            pointwise_failures.push(p.iter().cloned().map(Scalar::from).collect());
        }
    }
    let verdict = closed.iter().all(|&c| c)
        && squares_vanish.iter().all(|&s| s)
        && product_constant.is_some()
        && pointwise_failures.is_empty();
    Ok(CoordPairReport {
        closed,
        squares_vanish,
        product_constant,
        ranks,
        samples: samples.len(),
        pointwise_failures,
        verdict,
    })
}

/// `(dy ^ dt, dx ^ dz - x dx ^ dy)` on `(x, y, z, t)`.
pub fn twisted_pair() -> (PolyForm, PolyForm) {
    let a = dx(4, &[2, 4]).expect("valid");
    let x_dxdy = PolyForm::monomial(4, &[1, 2], Polynomial::var(1)).expect("valid");
    let b = dx(4, &[1, 3]).expect("valid").sub(&x_dxdy).expect("same chart");
    (a, b)
}

/// `(dx ^ dy, dz ^ dt)` on `(x, y, z, t)`.
pub fn split_pair() -> (PolyForm, PolyForm) {
    (dx(4, &[1, 2]).expect("valid"), dx(4, &[3, 4]).expect("valid"))
}

/// `(x, y, z, t) -> (x + 1, y, z + y, t)`.
pub fn shear_map() -> PolyMap {
    let v = Polynomial::var;
    PolyMap::new(4, vec![v(1).add(&Polynomial::int(1)), v(2), v(3).add(&v(2)), v(4)]).expect("valid")
}

/// Unit translation along coordinate `i` of `R^n`.
pub fn unit_translation(n: usize, i: usize) -> PolyMap {
    let shift: Vec<BigRational> = (1..=n)
        .map(|j| if j == i { BigRational::one() } else { BigRational::zero() })
        .collect();
    PolyMap::translation(&shift)
}

/// Display with chart variable names, e.g. `dx^dz - x dx^dy`.
pub fn display(phi: &PolyForm) -> String {
    let n = phi.dim();
    if phi.is_zero() {
        return "0".into();
    }
    let names = |idx: &[usize]| -> String {
        if idx.is_empty() {
            return "1".into();
        }
        idx.iter()
            .map(|&i| format!("d{}", crate::poly::var_name(i, n)))
            .collect::<Vec<_>>()
            .join("^")
    };
    let mut out = String::new();
    for (k, (idx, c)) in phi.terms().enumerate() {
        let s = c.display(n);
        let (neg, body) = match c.as_constant() {
            Some(q) if q.is_one() => (false, names(&idx)),
            Some(q) if q == -BigRational::one() => (true, names(&idx)),
            _ if c.terms().count() == 1 && s.starts_with('-') => (true, format!("{} {}", &s[1..], names(&idx))),
            _ if c.terms().count() == 1 => (false, format!("{s} {}", names(&idx))),
            _ => (false, format!("({s}) {}", names(&idx))),
        };
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}
