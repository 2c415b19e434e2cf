//! Independent oracles: direct evaluation of forms on vectors, written
//! without the library's differential, wedge or cohomology code.

#![allow(dead_code, clippy::needless_range_loop)]

use sympair::linalg::{self, unit_vector};
use sympair::{ExteriorForm, LieAlgebra, Scalar};

pub fn s(x: i64) -> Scalar {
    Scalar::int(x)
}

/// `omega(x, y)` for a 2-form.
pub fn eval2(w: &ExteriorForm, x: &[Scalar], y: &[Scalar]) -> Scalar {
    let mut acc = Scalar::zero();
    for (idx, c) in w.terms() {
        let (i, j) = (idx[0] - 1, idx[1] - 1);
        let minor = &(&x[i] * &y[j]) - &(&x[j] * &y[i]);
        acc += &(c * &minor);
    }
    acc
}

/// `d omega(e_i, e_j, e_k) = -w([ei,ej],ek) + w([ei,ek],ej) - w([ej,ek],ei)`.
pub fn d_two_form(g: &LieAlgebra, w: &ExteriorForm) -> Vec<Scalar> {
    let n = g.dim();
    let c = g.constants();
    let e = |i| unit_vector(n, i);
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                let t1 = eval2(w, &c.bracket_basis(i, j), &e(k));
                let t2 = eval2(w, &c.bracket_basis(i, k), &e(j));
                let t3 = eval2(w, &c.bracket_basis(j, k), &e(i));
                out.push(&(&t2 - &t1) - &t3);
            }
        }
    }
    out
}

pub fn closed(g: &LieAlgebra, w: &ExteriorForm) -> bool {
    d_two_form(g, w).iter().all(Scalar::is_zero)
}

/// Coefficient of `e1^e2^e3^e4` in `a ^ b` for 2-forms on a 4-space.
pub fn wedge_top(a: &ExteriorForm, b: &ExteriorForm) -> Scalar {
    let p = |f: &ExteriorForm, i, j| f.coefficient(&[i, j]);
    let terms = [
        (&p(a, 1, 2) * &p(b, 3, 4)),
        -(&p(a, 1, 3) * &p(b, 2, 4)),
        (&p(a, 1, 4) * &p(b, 2, 3)),
        (&p(a, 2, 3) * &p(b, 1, 4)),
        -(&p(a, 2, 4) * &p(b, 1, 3)),
        (&p(a, 3, 4) * &p(b, 1, 2)),
    ];
    terms.iter().fold(Scalar::zero(), |acc, t| &acc + t)
}

const PAIRS4: [(usize, usize); 6] = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];

fn two_form(coords: &[Scalar]) -> ExteriorForm {
    ExteriorForm::from_terms(4, 2, PAIRS4.iter().zip(coords).map(|(&(i, j), c)| (vec![i, j], c.clone())))
        .expect("valid 2-form")
}

/// Basis of the closed 2-forms of a 4-dimensional algebra, from the kernel of
/// the evaluation map above.
pub fn closed_two_forms(g: &LieAlgebra) -> Vec<ExteriorForm> {
    assert_eq!(g.dim(), 4);
    let columns: Vec<Vec<Scalar>> = PAIRS4
        .iter()
        .map(|&(i, j)| d_two_form(g, &sympair::exterior::basis_form(4, &[i, j])))
        .collect();
    let rows = linalg::transpose(&columns, columns[0].len());
    linalg::null_space(&rows, 6).iter().map(|v| two_form(v)).collect()
}

/// `b1 = n - dim [g, g]`.
pub fn b1(g: &LieAlgebra) -> usize {
    let n = g.dim();
    let mut brackets = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            brackets.push(g.constants().bracket_basis(i, j));
        }
    }
    n - linalg::rank(&brackets, n)
}

/// `b1` of the `T^2`-bundle over `T^2` with fiber monodromies `C`, `D` and
/// Euler class `e`: two from the base, plus the rational coinvariants of the
/// fiber, minus one if `e` survives in them.
pub fn t2_bundle_b1(c: [[i64; 2]; 2], d: [[i64; 2]; 2], e: (i64, i64)) -> usize {
    let mut image = Vec::new();
    for m in [c, d] {
        for col in 0..2 {
            image.push((0..2).map(|row| s(m[row][col] - i64::from(row == col))).collect::<Vec<_>>());
        }
    }
    let r = linalg::rank(&image, 2);
    let coinvariants = 2 - r;
    let mut with_e = image.clone();
    with_e.push(vec![s(e.0), s(e.1)]);
    let euler_survives = linalg::rank(&with_e, 2) > r;
    2 + coinvariants - usize::from(euler_survives)
}
