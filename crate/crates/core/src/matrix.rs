//! Pivot-free LDU factorization and the triangular-pair (bilinear) form of a
//! regular matrix.
//!
//! Factors are ordered `A = xi_R * delta * xi_L` with `xi_R` lower
//! unitriangular, `delta` diagonal and `xi_L` upper unitriangular. There is no
//! pivoting: a row exchange is not triangular, so a matrix with a vanishing
//! leading principal minor is rejected instead of permuted.

use serde_json::{json, Value};

use crate::bipoint::{outer_bipoint, AlgebraicBipoint};
use crate::error::{ensure_len, Error, Result};
use crate::linalg::{vector_to_json, Matrix};
use crate::scalar::{Backend, Scalar, FLOAT_TOLERANCE};

#[derive(Debug, Clone, PartialEq)]
pub struct GaussFactors<S> {
    pub xi_r: Matrix<S>,
    pub delta: Vec<S>,
    pub xi_l: Matrix<S>,
}

impl<S: Scalar> GaussFactors<S> {
    pub fn delta_matrix(&self) -> Matrix<S> {
        Matrix::diagonal(&self.delta)
    }

    pub fn reconstruct(&self) -> Matrix<S> {
        let ld = self
            .xi_r
            .mul(&self.delta_matrix())
            .expect("factor shapes agree");
        ld.mul(&self.xi_l).expect("factor shapes agree")
    }
}

/// A pivot counts as zero when it is exactly zero (rationals) or negligible
/// against the largest entry of the input (complex).
fn vanishes<S: Scalar>(pivot: &S, scale: f64) -> bool {
    match S::BACKEND {
        Backend::Rational => pivot.is_zero(),
        Backend::Complex => pivot.magnitude() <= FLOAT_TOLERANCE * scale.max(1.0),
    }
}

/// Doolittle elimination without row exchanges.
pub fn gauss_ldu<S: Scalar>(a: &Matrix<S>) -> Result<GaussFactors<S>> {
    ensure_len("square matrix", a.rows(), a.cols())?;
    let n = a.rows();
    let scale = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| a[(i, j)].magnitude())
        .fold(0.0, f64::max);

    let mut lower = Matrix::<S>::identity(n);
    let mut upper = Matrix::<S>::zeros(n, n);
    for k in 0..n {
        for j in k..n {
            let s = (0..k).fold(S::zero(), |acc, p| {
                acc + lower[(k, p)].clone() * upper[(p, j)].clone()
            });
            upper[(k, j)] = a[(k, j)].clone() - s;
        }
        let pivot = upper[(k, k)].clone();
        if vanishes(&pivot, scale) {
            return Err(Error::DecompositionUndefined { index: k + 1 });
        }
        for i in k + 1..n {
            let s = (0..k).fold(S::zero(), |acc, p| {
                acc + lower[(i, p)].clone() * upper[(p, k)].clone()
            });
            lower[(i, k)] = (a[(i, k)].clone() - s) / pivot.clone();
        }
    }

    let delta = upper.diag();
    let xi_l = Matrix::from_fn(n, n, |i, j| {
        if j < i {
            S::zero()
        } else if j == i {
            S::one()
        } else {
            upper[(i, j)].clone() / delta[i].clone()
        }
    });
    Ok(GaussFactors {
        xi_r: lower,
        delta,
        xi_l,
    })
}

/// How `delta` is shared between the right and left triangular factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SplitRule {
    /// `d_R = I`, `d_L = delta`.
    #[default]
    DeltaLeft,
    /// `d_R = d_L = sqrt(delta)`, principal branch.
    DeltaSqrt,
}

impl SplitRule {
    pub fn name(self) -> &'static str {
        match self {
            SplitRule::DeltaLeft => "delta-left",
            SplitRule::DeltaSqrt => "delta-sqrt",
        }
    }
}

impl std::str::FromStr for SplitRule {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "delta-left" | "delta_left" => Ok(SplitRule::DeltaLeft),
            "delta-sqrt" | "delta_sqrt" => Ok(SplitRule::DeltaSqrt),
            other => Err(Error::Parse(format!("unknown split rule `{other}`"))),
        }
    }
}

/// A lower-triangular right factor and an upper-triangular left factor.
#[derive(Debug, Clone, PartialEq)]
pub struct BilinearMatrixPair<S> {
    t_r: Matrix<S>,
    t_l: Matrix<S>,
}

impl<S: Scalar> BilinearMatrixPair<S> {
    /// Both factors must be square, of the same size, triangular the right
    /// way round and invertible (nonzero diagonal).
    pub fn new(t_r: Matrix<S>, t_l: Matrix<S>) -> Result<Self> {
        ensure_len("right factor", t_r.rows(), t_r.cols())?;
        ensure_len("left factor", t_l.rows(), t_l.cols())?;
        ensure_len("triangular pair", t_r.rows(), t_l.rows())?;
        if !t_r.is_lower_triangular() || !t_l.is_upper_triangular() {
            return Err(Error::Parse(
                "right factor must be lower triangular and left factor upper triangular".into(),
            ));
        }
        if t_r
            .diag()
            .iter()
            .chain(t_l.diag().iter())
            .any(|d| d.is_zero())
        {
            return Err(Error::SingularMatrix);
        }
        Ok(BilinearMatrixPair { t_r, t_l })
    }

    pub fn identity(n: usize) -> Self {
        BilinearMatrixPair {
            t_r: Matrix::identity(n),
            t_l: Matrix::identity(n),
        }
    }

    pub fn t_r(&self) -> &Matrix<S> {
        &self.t_r
    }

    pub fn t_l(&self) -> &Matrix<S> {
        &self.t_l
    }

    pub fn n(&self) -> usize {
        self.t_r.rows()
    }

    /// `T_R * T_L`.
    pub fn product(&self) -> Matrix<S> {
        self.t_r.mul(&self.t_l).expect("pair factors share a size")
    }

    /// The pair acting as "`self` first, then `next`": `(Q_R P_R, Q_L P_L)`.
    pub fn then(&self, next: &Self) -> Result<Self> {
        Ok(BilinearMatrixPair {
            t_r: next.t_r.mul(&self.t_r)?,
            t_l: next.t_l.mul(&self.t_l)?,
        })
    }
}

pub fn bilinear_decompose<S: Scalar>(
    a: &Matrix<S>,
    rule: SplitRule,
) -> Result<BilinearMatrixPair<S>> {
    let f = gauss_ldu(a)?;
    Ok(split_factors(&f, rule)?.2)
}

/// Splits `delta` into `(d_R, d_L)` and forms the triangular pair.
fn split_factors<S: Scalar>(
    f: &GaussFactors<S>,
    rule: SplitRule,
) -> Result<(Vec<S>, Vec<S>, BilinearMatrixPair<S>)> {
    let n = f.delta.len();
    let (d_r, d_l) = match rule {
        SplitRule::DeltaLeft => (vec![S::one(); n], f.delta.clone()),
        SplitRule::DeltaSqrt => {
            let roots = f
                .delta
                .iter()
                .enumerate()
                .map(|(k, d)| d.sqrt().ok_or(Error::SqrtUnavailable { index: k + 1 }))
                .collect::<Result<Vec<S>>>()?;
            (roots.clone(), roots)
        }
    };
    let t_r = f.xi_r.mul(&Matrix::diagonal(&d_r))?;
    let t_l = Matrix::diagonal(&d_l).mul(&f.xi_l)?;
    Ok((d_r, d_l, BilinearMatrixPair { t_r, t_l }))
}

/// Acts with `T_R` on `v_R` and `T_L` on `v_L`, then forms the bipoint of
/// the images.
pub fn bisemimodule_action<S: Scalar>(
    pair: &BilinearMatrixPair<S>,
    v_r: &[S],
    v_l: &[S],
) -> Result<AlgebraicBipoint<S>> {
    let w_r = pair.t_r.mul_vec(v_r)?;
    let w_l = pair.t_l.mul_vec(v_l)?;
    outer_bipoint(&w_r, &w_l)
}

/// `||approx - exact||_F / ||exact||_F`, or the absolute residual when
/// `exact` is zero.
pub fn relative_residual<S: Scalar>(approx: &Matrix<S>, exact: &Matrix<S>) -> Result<f64> {
    let diff = approx.sub(exact)?.frobenius_norm();
    let base = exact.frobenius_norm();
    Ok(if base > 0.0 { diff / base } else { diff })
}

/// Relative Frobenius residual accepted on the complex backend.
pub const RECONSTRUCTION_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct CorrespondenceReport<S> {
    pub factors: GaussFactors<S>,
    pub pair: BilinearMatrixPair<S>,
    pub residual: f64,
    /// `T_R * T_L` equals the input (exactly, or within tolerance on complex).
    pub reconstructs: bool,
    /// `xi_R`, `delta` and `xi_L` are read back unchanged from the pair.
    pub factors_recovered: bool,
}

impl<S> CorrespondenceReport<S> {
    pub fn passed(&self) -> bool {
        self.reconstructs && self.factors_recovered
    }
}

/// Decomposes `a`, maps the factors to a triangular pair with the
/// delta-left rule, and checks both the reconstruction and that the
/// unitriangular and diagonal factors can be read back from the pair.
pub fn correspondence_roundtrip<S: Scalar>(a: &Matrix<S>) -> Result<CorrespondenceReport<S>> {
    let factors = gauss_ldu(a)?;
    let (_, _, pair) = split_factors(&factors, SplitRule::DeltaLeft)?;
    let product = pair.product();
    let residual = relative_residual(&product, a)?;
    let reconstructs = match S::BACKEND {
        Backend::Rational => product == *a,
        Backend::Complex => residual <= RECONSTRUCTION_TOLERANCE,
    };

    let delta_back = pair.t_l.diag();
    let xi_l_back = Matrix::diagonal(
        &delta_back
            .iter()
            .map(|d| S::one() / d.clone())
            .collect::<Vec<_>>(),
    )
    .mul(&pair.t_l)?;
    let factors_recovered = pair.t_r.approx_eq(&factors.xi_r)
        && xi_l_back.approx_eq(&factors.xi_l)
        && delta_back
            .iter()
            .zip(&factors.delta)
            .all(|(a, b)| a.approx_eq(b));

    Ok(CorrespondenceReport {
        factors,
        pair,
        residual,
        reconstructs,
        factors_recovered,
    })
}

/// JSON form of a decomposition: factors, pair and the relative residual.
pub fn decomposition_to_json<S: Scalar>(a: &Matrix<S>, rule: SplitRule) -> Result<Value> {
    let f = gauss_ldu(a)?;
    let (_, _, pair) = split_factors(&f, rule)?;
    let residual = relative_residual(&pair.product(), a)?;
    Ok(json!({
        "rule": rule.name(),
        "xi_R": f.xi_r.to_json(),
        "delta": vector_to_json(&f.delta),
        "xi_L": f.xi_l.to_json(),
        "T_R": pair.t_r.to_json(),
        "T_L": pair.t_l.to_json(),
        "residual": residual,
    }))
}
