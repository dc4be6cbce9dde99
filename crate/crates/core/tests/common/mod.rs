//! Independent reference computations and seeded generators shared by the
//! integration tests. Nothing here calls into the factorization or pairing
//! code it is used to check.

#![allow(dead_code)]

use bisemikit::linalg::Matrix;
use bisemikit::scalar::{rational, Complex64, Rational, Scalar};
use num::traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn q(p: i64) -> Rational {
    rational(p, 1)
}

pub fn qm(rows: &[&[i64]]) -> Matrix<Rational> {
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&x| q(x)).collect())
            .collect(),
    )
    .unwrap()
}

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Leibniz expansion over all permutations.
pub fn det_permutation<S: Scalar>(a: &[Vec<S>]) -> S {
    let n = a.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = S::zero();
    permute(&mut perm, 0, &mut |p| {
        let inversions = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| p[i] > p[j])
            .count();
        let term = (0..n).fold(S::one(), |acc, i| acc * a[i][p[i]].clone());
        total = if inversions % 2 == 0 {
            total.clone() + term
        } else {
            total.clone() - term
        };
    });
    total
}

fn permute(p: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        visit(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, visit);
        p.swap(k, i);
    }
}

/// Determinants of the leading `k x k` blocks, `k = 1..=n`.
pub fn leading_minors<S: Scalar>(a: &Matrix<S>) -> Vec<S> {
    let rows = a.to_rows();
    (1..=a.rows())
        .map(|k| {
            let block: Vec<Vec<S>> = rows[..k].iter().map(|r| r[..k].to_vec()).collect();
            det_permutation(&block)
        })
        .collect()
}

/// Crout elimination: `A = L U` with `U` unit upper triangular, rewritten as
/// `(L D^-1) D U`. Returns `None` on a zero pivot.
pub fn crout_ldu(
    a: &Matrix<Rational>,
) -> Option<(Matrix<Rational>, Vec<Rational>, Matrix<Rational>)> {
    let n = a.rows();
    let mut l = vec![vec![Rational::zero(); n]; n];
    let mut u = vec![vec![Rational::zero(); n]; n];
    for j in 0..n {
        u[j][j] = Rational::one();
        for i in j..n {
            let s: Rational = (0..j).map(|k| &l[i][k] * &u[k][j]).sum();
            l[i][j] = &a[(i, j)] - s;
        }
        if l[j][j].is_zero() {
            return None;
        }
        for i in j + 1..n {
            let s: Rational = (0..j).map(|k| &l[j][k] * &u[k][i]).sum();
            u[j][i] = (&a[(j, i)] - s) / &l[j][j];
        }
    }
    let delta: Vec<Rational> = (0..n).map(|k| l[k][k].clone()).collect();
    let xi_r = Matrix::from_fn(n, n, |i, j| &l[i][j] / &delta[j]);
    let xi_l = Matrix::from_rows(u).unwrap();
    Some((xi_r, delta, xi_l))
}

pub fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    rational(rng.gen_range(-9..=9), rng.gen_range(1..=4))
}

pub fn random_rational_matrix(rng: &mut ChaCha8Rng, n: usize) -> Matrix<Rational> {
    Matrix::from_fn(n, n, |_, _| small_rational(rng))
}

/// A random rational matrix whose leading principal minors are all nonzero,
/// found by rejection against the permutation-expansion oracle.
pub fn pivot_free_rational(rng: &mut ChaCha8Rng, n: usize) -> Matrix<Rational> {
    loop {
        let a = random_rational_matrix(rng, n);
        if leading_minors(&a).iter().all(|m| !m.is_zero()) {
            return a;
        }
    }
}

/// A matrix with at least one vanishing leading principal minor: row `k-1`
/// of the leading `k x k` block is made a combination of the rows above it
/// (or zero when `k = 1`).
pub fn zero_minor_rational(rng: &mut ChaCha8Rng, n: usize) -> Matrix<Rational> {
    let mut a = random_rational_matrix(rng, n);
    let k = rng.gen_range(1..=n);
    let weights: Vec<Rational> = (0..k - 1).map(|_| small_rational(rng)).collect();
    for j in 0..k {
        a[(k - 1, j)] = (0..k - 1).map(|i| &weights[i] * &a[(i, j)]).sum();
    }
    a
}

pub fn random_complex(rng: &mut ChaCha8Rng) -> Complex64 {
    c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

pub fn random_complex_vec(rng: &mut ChaCha8Rng, n: usize) -> Vec<Complex64> {
    (0..n).map(|_| random_complex(rng)).collect()
}

pub fn random_complex_matrix(rng: &mut ChaCha8Rng, n: usize) -> Matrix<Complex64> {
    Matrix::from_fn(n, n, |_, _| random_complex(rng))
}

/// Lower unitriangular times `d^2` times upper unitriangular, so every pivot
/// is a perfect square.
pub fn square_pivot_rational(rng: &mut ChaCha8Rng, n: usize) -> Matrix<Rational> {
    let lower = Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Greater => q(rng.gen_range(-4..=4)),
        std::cmp::Ordering::Equal => q(1),
        std::cmp::Ordering::Less => q(0),
    });
    let d: Vec<Rational> = (0..n)
        .map(|_| {
            let r = rational(rng.gen_range(1..=6), rng.gen_range(1..=3));
            &r * &r
        })
        .collect();
    let upper = Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Less => q(rng.gen_range(-4..=4)),
        std::cmp::Ordering::Equal => q(1),
        std::cmp::Ordering::Greater => q(0),
    });
    lower
        .mul(&Matrix::diagonal(&d))
        .unwrap()
        .mul(&upper)
        .unwrap()
}

/// `sum_a sum_b x_a y_b` with the diagonal split off, computed by index.
pub fn double_sum_split<S: Scalar>(x: &[S], y: &[S]) -> (S, S) {
    let mut diag = S::zero();
    let mut off = S::zero();
    for (a, xa) in x.iter().enumerate() {
        for (b, yb) in y.iter().enumerate() {
            if a == b {
                diag = diag + xa.clone() * yb.clone();
            } else {
                off = off + xa.clone() * yb.clone();
            }
        }
    }
    (diag, off)
}

pub fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * 1f64.max(a.abs()).max(b.abs())
}
