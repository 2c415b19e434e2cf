//! Existence of invariant symplectic forms and symplectic pairs on
//! four-dimensional Lie algebras.
//!
//! Closed 2-forms are paired by `(w, h) -> (w ^ h) / vol`. A closed `w` is
//! symplectic iff `q(w) != 0`, and in dimension 4 the nonzero null vectors
//! of `q` are exactly the closed decomposable forms. Two null vectors with
//! nonzero product form a symplectic pair, so a pair exists iff the pairing
//! is indefinite.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exterior::{self, ExteriorForm};
use crate::lie::LieAlgebra;
use crate::linalg::{self, Matrix};
use crate::pairs::{self, PairReport};
use crate::scalar::Scalar;

#[derive(Clone, Debug, Serialize)]
pub struct WedgeGram {
    /// Basis of the closed 2-forms.
    pub basis: Vec<ExteriorForm>,
    /// `gram[i][j] * volume = basis[i] ^ basis[j]`.
    pub gram: Matrix,
    pub volume: ExteriorForm,
}

impl WedgeGram {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gram.iter().flatten().all(Scalar::is_zero)
    }

    /// The closed form with the given coordinates in `basis`.
    pub fn combine(&self, coords: &[Scalar]) -> ExteriorForm {
        let mut out = ExteriorForm::zero(self.volume.dim(), 2).expect("dim 4");
        for (c, b) in coords.iter().zip(&self.basis) {
            if !c.is_zero() {
                out = out.add(&b.scale(c)).expect("same space");
            }
        }
        out
    }

    pub fn signature(&self) -> SignatureResult {
        signature(&self.gram).expect("Gram matrices are symmetric")
    }
}

fn require_dim4(g: &LieAlgebra) -> Result<()> {
    if g.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            found: g.dim(),
        });
    }
    Ok(())
}

/// Gram matrix against the lexicographic volume form `a1^a2^a3^a4`.
pub fn wedge_gram(g: &LieAlgebra) -> Result<WedgeGram> {
    wedge_gram_with_volume(g, &exterior::volume_form(4))
}

pub fn wedge_gram_with_volume(g: &LieAlgebra, volume: &ExteriorForm) -> Result<WedgeGram> {
    require_dim4(g)?;
    if volume.dim() != 4 || volume.degree() != 4 || volume.is_zero() {
        return Err(Error::Precondition("volume must be a nonzero 4-form in dimension 4".into()));
    }
    let scale = exterior::top_coefficient(volume)?
        .inv()
        .expect("nonzero volume");
    let basis = g.closed_forms(2)?;
    let k = basis.len();
    let mut gram = vec![vec![Scalar::zero(); k]; k];
    for i in 0..k {
        for j in i..k {
            let top = exterior::top_coefficient(&basis[i].wedge(&basis[j])?)?;
            let v = &top * &scale;
            gram[j][i] = v.clone();
            gram[i][j] = v;
        }
    }
    Ok(WedgeGram {
        basis,
        gram,
        volume: volume.clone(),
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct SignatureResult {
    pub p: usize,
    pub m: usize,
    pub z: usize,
}

impl SignatureResult {
    pub fn is_indefinite(&self) -> bool {
        self.p >= 1 && self.m >= 1
    }

    pub fn as_array(&self) -> [usize; 3] {
        [self.p, self.m, self.z]
    }
}

/// Congruence diagonalization `P G P^T = diag(diagonal)`; the rows of
/// `transform` are coordinate vectors of a `G`-orthogonal basis.
#[derive(Clone, Debug)]
pub struct Diagonalization {
    pub diagonal: Vec<Scalar>,
    pub transform: Matrix,
}

fn is_symmetric(g: &Matrix) -> bool {
    let n = g.len();
    g.iter().all(|r| r.len() == n) && (0..n).all(|i| (0..i).all(|j| g[i][j] == g[j][i]))
}

/// Symmetric Gaussian elimination with exact pivoting.
pub fn diagonalize(g: &Matrix) -> Result<Diagonalization> {
    if !is_symmetric(g) {
        return Err(Error::Precondition("matrix is not symmetric".into()));
    }
    let n = g.len();
    let mut a = g.clone();
    let mut p: Matrix = (1..=n).map(|i| linalg::unit_vector(n, i)).collect();
    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(i) = (k + 1..n).find(|&i| !a[i][i].is_zero()) {
                swap_sym(&mut a, &mut p, k, i);
            } else if let Some((i, j)) =
                (k..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_zero())
            {
                // row/col i += row/col j makes a[i][i] = 2 a[i][j] != 0
                add_sym(&mut a, &mut p, i, j, &Scalar::one());
                swap_sym(&mut a, &mut p, k, i);
            } else {
                break;
            }
        }
        let pivot_inv = a[k][k].inv().expect("nonzero pivot");
        for r in k + 1..n {
            if a[r][k].is_zero() {
                continue;
            }
            let f = -(&a[r][k] * &pivot_inv);
            add_sym(&mut a, &mut p, r, k, &f);
        }
    }
    let diagonal = (0..n).map(|i| a[i][i].clone()).collect();
    Ok(Diagonalization { diagonal, transform: p })
}

fn swap_sym(a: &mut Matrix, p: &mut Matrix, i: usize, j: usize) {
    if i == j {
        return;
    }
    a.swap(i, j);
    for row in a.iter_mut() {
        row.swap(i, j);
    }
    p.swap(i, j);
}

/// Row `i += f * row j` followed by the matching column operation.
fn add_sym(a: &mut Matrix, p: &mut Matrix, i: usize, j: usize, f: &Scalar) {
    let n = a.len();
    for c in 0..n {
        let v = f * &a[j][c];
        a[i][c] += &v;
    }
    for row in a.iter_mut() {
        let v = f * &row[j];
        row[i] += &v;
    }
    for c in 0..n {
        let v = f * &p[j][c];
        p[i][c] += &v;
    }
}

pub fn signature(g: &Matrix) -> Result<SignatureResult> {
    let d = diagonalize(g)?;
    let mut s = SignatureResult { p: 0, m: 0, z: 0 };
    for x in &d.diagonal {
        match x.signum() {
            1 => s.p += 1,
            -1 => s.m += 1,
            _ => s.z += 1,
        }
    }
    Ok(s)
}

/// Some closed 2-form is nondegenerate.
pub fn has_invariant_symplectic(g: &LieAlgebra) -> Result<bool> {
    Ok(!wedge_gram(g)?.is_zero())
}

pub fn has_invariant_symplectic_pair(g: &LieAlgebra) -> Result<bool> {
    Ok(wedge_gram(g)?.signature().is_indefinite())
}

#[derive(Clone, Debug, Serialize)]
pub struct PairWitness {
    pub omega1: ExteriorForm,
    pub omega2: ExteriorForm,
    /// Radicand adjoined to write the witness, if any.
    pub radicand: Option<u64>,
    pub report: PairReport,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateKind {
    /// Every closed 2-form squares to zero: no symplectic form at all.
    ZeroGram,
    /// Nonzero but semidefinite: symplectic forms exist, pairs do not.
    Semidefinite,
}

/// Evidence that no invariant symplectic pair exists.
#[derive(Clone, Debug, Serialize)]
pub struct AbsenceCertificate {
    pub kind: CertificateKind,
    pub signature: SignatureResult,
    pub gram: WedgeGram,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum PairSearch {
    Witness(PairWitness),
    Absent(AbsenceCertificate),
}

impl PairSearch {
    pub fn witness(&self) -> Option<&PairWitness> {
        match self {
            PairSearch::Witness(w) => Some(w),
            PairSearch::Absent(_) => None,
        }
    }

    pub fn certificate(&self) -> Option<&AbsenceCertificate> {
        match self {
            PairSearch::Absent(c) => Some(c),
            PairSearch::Witness(_) => None,
        }
    }
}

/// An explicit invariant symplectic pair, or a certificate that none exists.
///
/// Two null basis forms with nonzero product are used directly. Otherwise,
/// with `u`, `v` orthogonal and `q(u) = a > 0 > b = q(v)`, the forms
/// `u + t v` and `u - t v` with `t^2 = -a/b` are null with product `2a`.
pub fn construct_pair_witness(g: &LieAlgebra) -> Result<PairSearch> {
    let gram = wedge_gram(g)?;
    let sig = gram.signature();
    if !sig.is_indefinite() {
        let kind = if gram.is_zero() {
            CertificateKind::ZeroGram
        } else {
            CertificateKind::Semidefinite
        };
        return Ok(PairSearch::Absent(AbsenceCertificate {
            kind,
            signature: sig,
            gram,
        }));
    }
    let (omega1, omega2) = null_basis_pair(&gram).map_or_else(|| split_indefinite_plane(&gram), Ok)?;
    let radicand = omega1
        .blades()
        .chain(omega2.blades())
        .find_map(|(_, c)| c.radicand());
    let report = pairs::check_symplectic_pair(g, &omega1, &omega2)?;
    if !report.verdict {
        let failed: Vec<_> = report.failures().map(|a| a.name.clone()).collect();
        return Err(Error::Precondition(format!(
            "constructed witness failed verification: {}",
            failed.join(", ")
        )));
    }
    Ok(PairSearch::Witness(PairWitness {
        omega1,
        omega2,
        radicand,
        report,
    }))
}

fn null_basis_pair(gram: &WedgeGram) -> Option<(ExteriorForm, ExteriorForm)> {
    let g = &gram.gram;
    let k = gram.dim();
    (0..k)
        .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
        .find(|&(i, j)| g[i][i].is_zero() && g[j][j].is_zero() && !g[i][j].is_zero())
        .map(|(i, j)| (gram.basis[i].clone(), gram.basis[j].clone()))
}

fn split_indefinite_plane(gram: &WedgeGram) -> Result<(ExteriorForm, ExteriorForm)> {
    let d = diagonalize(&gram.gram)?;
    let pos = d.diagonal.iter().position(Scalar::is_positive);
    let neg = d.diagonal.iter().position(Scalar::is_negative);
    let (Some(i), Some(j)) = (pos, neg) else {
        return Err(Error::Precondition("pairing is not indefinite".into()));
    };
    let ratio = -(&d.diagonal[i] * &d.diagonal[j].inv().expect("nonzero"));
    let ratio = ratio
        .as_rational()
        .ok_or_else(|| Error::Precondition("irrational Gram entries are not supported".into()))?;
    let t = Scalar::sqrt_rational(ratio)?;
    let u = gram.combine(&d.transform[i]);
    let v = gram.combine(&d.transform[j]).scale(&t);
    Ok((u.add(&v)?, u.sub(&v)?))
}

/// Randomized search over small integer combinations of closed 2-forms for a
/// pair passing [`pairs::check_symplectic_pair`]. Deterministic in
/// `(seed, trials)`; `true` is a proof, `false` is only evidence.
pub fn brute_force_oracle(g: &LieAlgebra, seed: u64, trials: usize) -> Result<bool> {
    Ok(brute_force_search(g, seed, trials)?.is_some())
}

/// As [`brute_force_oracle`], returning the pair found.
pub fn brute_force_search(g: &LieAlgebra, seed: u64, trials: usize) -> Result<Option<(ExteriorForm, ExteriorForm)>> {
    require_dim4(g)?;
    let basis = g.closed_forms(2)?;
    if basis.is_empty() {
        return Ok(None);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sample = |rng: &mut ChaCha8Rng| -> ExteriorForm {
        let mut w = ExteriorForm::zero(4, 2).expect("dim 4");
        while w.is_zero() {
            for b in &basis {
                if rng.gen_bool(0.5) {
                    let c = rng.gen_range(-2i64..=2);
                    if c != 0 {
                        w = w.add(&b.scale(&Scalar::int(c))).expect("same space");
                    }
                }
            }
        }
        w
    };
    for _ in 0..trials {
        let w1 = sample(&mut rng);
        let w2 = sample(&mut rng);
        if !w1.wedge(&w1)?.is_zero() || !w2.wedge(&w2)?.is_zero() || w1.wedge(&w2)?.is_zero() {
            continue;
        }
        if pairs::check_symplectic_pair(g, &w1, &w2)?.verdict {
            return Ok(Some((w1, w2)));
        }
    }
    Ok(None)
}
