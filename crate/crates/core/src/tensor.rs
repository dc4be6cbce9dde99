//! Coefficient grids over a bilinear basis, their diagonal/off-diagonal
//! split, and the three-stage pairing pipeline.
//!
//! A right vector is paired with a left vector at the *mixed* stage. The
//! projection [`project_p`] moves the right vector onto the left side as a
//! one-form (*external* stage), and [`riesz_b`] raises it with the metric to
//! a contravariant partner (*internal* stage). Starting from `I(x_L)`, the
//! pipeline ends at `conj(x_L)`, so the internal diagonal product is the
//! Hermitian inner product of the underlying tuples.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bipoint::{MetricComponents, MetricKind};
use crate::error::{ensure_len, Error, Result};
use crate::linalg::Matrix;
use crate::report::{AxiomReport, LawTally};
use crate::scalar::{close_complex, Complex64, Scalar};

/// Element of `M_R (x) M_L` as an `l x l` grid of coefficients `X_ab`.
#[derive(Debug, Clone, PartialEq)]
pub struct BisemimoduleElement<S> {
    coeffs: Matrix<S>,
}

impl<S: Scalar> BisemimoduleElement<S> {
    pub fn new(coeffs: Matrix<S>) -> Result<Self> {
        ensure_len("coefficient grid", coeffs.rows(), coeffs.cols())?;
        Ok(BisemimoduleElement { coeffs })
    }

    pub fn basis_dim(&self) -> usize {
        self.coeffs.rows()
    }

    pub fn coeffs(&self) -> &Matrix<S> {
        &self.coeffs
    }

    pub fn nonzero_count(&self) -> usize {
        let n = self.basis_dim();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.coeffs[(i, j)].is_zero())
            .count()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(BisemimoduleElement {
            coeffs: self.coeffs.add(&other.coeffs)?,
        })
    }
}

/// Masks `X` into its diagonal part (`n` slots) and off-diagonal part
/// (`n^2 - n` slots).
pub fn tensor_split<S: Scalar>(
    x: &BisemimoduleElement<S>,
) -> (BisemimoduleElement<S>, BisemimoduleElement<S>) {
    let n = x.basis_dim();
    let pick = |keep_diag: bool| BisemimoduleElement {
        coeffs: Matrix::from_fn(n, n, |i, j| {
            if (i == j) == keep_diag {
                x.coeffs[(i, j)].clone()
            } else {
                S::zero()
            }
        }),
    };
    (pick(true), pick(false))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variance {
    Covariant,
    Contravariant,
}

impl Variance {
    pub fn name(self) -> &'static str {
        match self {
            Variance::Covariant => "covariant",
            Variance::Contravariant => "contravariant",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SemimoduleVector<S> {
    side: Side,
    coords: Vec<S>,
    variance: Variance,
    /// Set once the vector has been carried across by [`project_p`].
    projected: bool,
}

impl<S: Scalar> SemimoduleVector<S> {
    /// A contravariant left vector; every coordinate must lie in the left carrier.
    pub fn left(coords: Vec<S>) -> Result<Self> {
        Self::checked(Side::Left, coords)
    }

    /// A contravariant right vector; every coordinate must lie in the right carrier.
    pub fn right(coords: Vec<S>) -> Result<Self> {
        Self::checked(Side::Right, coords)
    }

    fn checked(side: Side, coords: Vec<S>) -> Result<Self> {
        for c in &coords {
            let ok = match side {
                Side::Left => c.in_left_carrier(),
                Side::Right => c.in_right_carrier(),
            };
            if !ok {
                return Err(Error::InadmissibleScalar {
                    carrier: side.name(),
                    value: c.render(),
                });
            }
        }
        Ok(SemimoduleVector {
            side,
            coords,
            variance: Variance::Contravariant,
            projected: false,
        })
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn coords(&self) -> &[S] {
        &self.coords
    }

    pub fn variance(&self) -> Variance {
        self.variance
    }

    pub fn is_projected(&self) -> bool {
        self.projected
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// The same vector seen from the other side: `I_{L->R}` or `I_{R->L}`
    /// applied coordinatewise.
    pub fn involuted(&self) -> Self {
        SemimoduleVector {
            side: match self.side {
                Side::Left => Side::Right,
                Side::Right => Side::Left,
            },
            coords: self.coords.iter().map(Scalar::involute).collect(),
            variance: self.variance,
            projected: false,
        }
    }

    fn map_coords(&self, f: impl Fn(&S) -> S) -> Self {
        SemimoduleVector {
            coords: self.coords.iter().map(f).collect(),
            ..self.clone()
        }
    }

    pub fn scaled(&self, k: &S) -> Self {
        self.map_coords(|c| k.clone() * c.clone())
    }

    pub fn plus(&self, other: &Self) -> Result<Self> {
        ensure_len("vector sum", self.dim(), other.dim())?;
        Ok(SemimoduleVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
            ..self.clone()
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairingMode {
    Diagonal,
    Extended,
    OffDiagonal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    Mixed,
    External,
    Internal,
}

impl Stage {
    pub fn name(self) -> &'static str {
        match self {
            Stage::Mixed => "mixed",
            Stage::External => "external",
            Stage::Internal => "internal",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InnerProductSpec {
    pub mode: PairingMode,
    pub stage: Stage,
}

impl InnerProductSpec {
    pub fn new(mode: PairingMode, stage: Stage) -> Self {
        InnerProductSpec { mode, stage }
    }

    /// Metric type attached to the stage: none, `(1,1)` or `(0,2)`.
    pub fn metric_kind(&self) -> Option<MetricKind> {
        match self.stage {
            Stage::Mixed => None,
            Stage::External => Some(MetricKind::Mixed),
            Stage::Internal => Some(MetricKind::Covariant),
        }
    }
}

/// `sum_a x_a y_a`, left to right.
pub fn diagonal_sum<S: Scalar>(x: &[S], y: &[S]) -> S {
    x.iter()
        .zip(y)
        .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
}

/// `sum_a sum_b x_a y_b`, row by row.
pub fn extended_sum<S: Scalar>(x: &[S], y: &[S]) -> S {
    x.iter().fold(S::zero(), |acc, a| {
        y.iter().fold(acc, |acc, b| acc + a.clone() * b.clone())
    })
}

fn pairing<S: Scalar>(x: &[S], y: &[S], mode: PairingMode) -> Result<S> {
    ensure_len("pairing", x.len(), y.len())?;
    Ok(match mode {
        PairingMode::Diagonal => diagonal_sum(x, y),
        PairingMode::Extended => extended_sum(x, y),
        PairingMode::OffDiagonal => extended_sum(x, y) - diagonal_sum(x, y),
    })
}

fn expect_side<S>(v: &SemimoduleVector<S>, side: Side) -> Result<()> {
    if v.side == side {
        Ok(())
    } else {
        Err(Error::WrongSide {
            expected: side.name(),
            found: v.side.name(),
        })
    }
}

fn expect_variance<S>(v: &SemimoduleVector<S>, variance: Variance) -> Result<()> {
    if v.variance == variance {
        Ok(())
    } else {
        Err(Error::WrongVariance {
            expected: variance.name(),
            found: v.variance.name(),
        })
    }
}

/// Pairing of a right vector with a left vector.
///
/// The value is a plain scalar: each term is a right coordinate times a left
/// coordinate, which lands in the base number system.
pub fn mixed_product<S: Scalar>(
    x_r: &SemimoduleVector<S>,
    x_l: &SemimoduleVector<S>,
    spec: InnerProductSpec,
) -> Result<S> {
    if spec.stage != Stage::Mixed {
        return Err(Error::WrongStage("mixed"));
    }
    expect_side(x_r, Side::Right)?;
    expect_side(x_l, Side::Left)?;
    pairing(&x_r.coords, &x_l.coords, spec.mode)
}

/// `p_L` (right vector to left one-form) or `p_R` (left vector to right vector).
pub fn project_p<S: Scalar>(
    x: &SemimoduleVector<S>,
    direction: Side,
) -> Result<SemimoduleVector<S>> {
    let (from, variance) = match direction {
        Side::Left => (Side::Right, Variance::Covariant),
        Side::Right => (Side::Left, Variance::Contravariant),
    };
    expect_side(x, from)?;
    Ok(SemimoduleVector {
        side: direction,
        coords: x.coords.iter().map(Scalar::involute).collect(),
        variance,
        projected: true,
    })
}

fn check_metric<S: Scalar>(metric: &MetricComponents<S>, dim: usize) -> Result<()> {
    if metric.kind() != MetricKind::Covariant {
        return Err(Error::Parse(format!(
            "raising needs a (0,2) metric, got {}",
            metric.kind().label()
        )));
    }
    ensure_len("metric", metric.dim(), dim)?;
    if !metric.is_positive_definite() {
        return Err(Error::NotPositiveDefinite);
    }
    Ok(())
}

/// `B`: raises a covariant vector with `g^-1` and conjugates, giving the
/// contravariant partner used at the internal stage.
pub fn riesz_b<S: Scalar>(
    x: &SemimoduleVector<S>,
    metric: &MetricComponents<S>,
) -> Result<SemimoduleVector<S>> {
    expect_variance(x, Variance::Covariant)?;
    check_metric(metric, x.dim())?;
    let raised = metric.matrix().inverse()?.mul_vec(&x.coords)?;
    Ok(SemimoduleVector {
        coords: raised.iter().map(Scalar::conj).collect(),
        variance: Variance::Contravariant,
        ..x.clone()
    })
}

/// Inverse of [`riesz_b`]: conjugates and lowers with `g`.
pub fn riesz_b_inverse<S: Scalar>(
    x: &SemimoduleVector<S>,
    metric: &MetricComponents<S>,
) -> Result<SemimoduleVector<S>> {
    expect_variance(x, Variance::Contravariant)?;
    check_metric(metric, x.dim())?;
    let conj: Vec<S> = x.coords.iter().map(Scalar::conj).collect();
    Ok(SemimoduleVector {
        coords: metric.matrix().mul_vec(&conj)?,
        variance: Variance::Covariant,
        ..x.clone()
    })
}

/// `B(p_L(I(x_L)))` with the identity metric: the internal-stage partner of a
/// left vector, whose coordinates are `conj(x_L)`.
pub fn conjugate_partner<S: Scalar>(x_l: &SemimoduleVector<S>) -> Result<SemimoduleVector<S>> {
    expect_side(x_l, Side::Left)?;
    let projected = project_p(&x_l.involuted(), Side::Left)?;
    riesz_b(&projected, &MetricComponents::identity(x_l.dim()))
}

/// Pairing at the external or internal stage.
///
/// `x_bar` must come out of the pipeline: a projected covariant one-form for
/// the external stage, a projected contravariant vector for the internal one.
pub fn inner_product<S: Scalar>(
    x_bar: &SemimoduleVector<S>,
    x: &SemimoduleVector<S>,
    spec: InnerProductSpec,
) -> Result<S> {
    let variance = match spec.stage {
        Stage::Mixed => return Err(Error::WrongStage("external or internal")),
        Stage::External => Variance::Covariant,
        Stage::Internal => Variance::Contravariant,
    };
    expect_side(x_bar, Side::Left)?;
    expect_side(x, Side::Left)?;
    if !x_bar.projected {
        return Err(Error::WrongStage(spec.stage.name()));
    }
    expect_variance(x_bar, variance)?;
    pairing(&x_bar.coords, &x.coords, spec.mode)
}

/// Evaluates a pairing at whichever stage `spec` names.
pub fn product<S: Scalar>(
    a: &SemimoduleVector<S>,
    b: &SemimoduleVector<S>,
    spec: InnerProductSpec,
) -> Result<S> {
    match spec.stage {
        Stage::Mixed => mixed_product(a, b, spec),
        _ => inner_product(a, b, spec),
    }
}

/// `sqrt(<x_bar, x>_D)` with the conjugate partner `x_bar = conj(x)`.
///
/// Works for vectors on either side: a right vector is first carried back
/// to the left by the involution.
pub fn norm<S: Scalar>(x: &SemimoduleVector<S>) -> f64 {
    let left = match x.side {
        Side::Left => x.clone(),
        Side::Right => x.involuted(),
    };
    let partner = left.map_coords(Scalar::conj);
    diagonal_sum(&partner.coords, &left.coords)
        .to_complex()
        .re
        .max(0.0)
        .sqrt()
}

/// Plain Hermitian form `sum conj(x_a) y_a`.
pub fn hermitian_dot(x: &[Complex64], y: &[Complex64]) -> Complex64 {
    x.iter()
        .zip(y)
        .fold(Complex64::new(0.0, 0.0), |acc, (a, b)| acc + a.conj() * b)
}

/// Checks the correspondence between the internal diagonal product on
/// `(conj(x), x)` pairs and the Hermitian inner product on tuples.
///
/// Laws: `injectivity`, `hermitian-agreement`, `sesquilinearity`,
/// `conjugate-symmetry`. Consecutive vectors of equal dimension are paired;
/// the scalars for the sesquilinearity check are drawn from `seed`.
pub fn hilbert_correspondence_check(xs: &[SemimoduleVector<Complex64>], seed: u64) -> AxiomReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let internal = InnerProductSpec::new(PairingMode::Diagonal, Stage::Internal);
    let ip =
        |a: &SemimoduleVector<Complex64>, b: &SemimoduleVector<Complex64>| -> Option<Complex64> {
            inner_product(&conjugate_partner(a).ok()?, b, internal).ok()
        };
    let show = |v: &SemimoduleVector<Complex64>| {
        format!(
            "[{}]",
            v.coords
                .iter()
                .map(Scalar::render)
                .collect::<Vec<_>>()
                .join(", ")
        )
    };

    let mut injective = LawTally::new("injectivity");
    let images: Vec<Option<SemimoduleVector<Complex64>>> =
        xs.iter().map(|x| conjugate_partner(x).ok()).collect();
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            let same_image = images[i].is_some()
                && images[i] == images[j]
                && xs[i].coords.len() == xs[j].coords.len();
            let same_input = xs[i].coords == xs[j].coords;
            injective.record(!same_image || same_input, || {
                format!("x={} y={}", show(&xs[i]), show(&xs[j]))
            });
        }
        if images[i].is_none() {
            injective.record(false, || format!("no partner for {}", show(&xs[i])));
        }
    }

    let mut agree = LawTally::new("hermitian-agreement");
    let mut sesqui = LawTally::new("sesquilinearity");
    let mut symmetric = LawTally::new("conjugate-symmetry");
    for (k, x) in xs.iter().enumerate() {
        let y = xs.get(k + 1).filter(|y| y.dim() == x.dim()).unwrap_or(x);
        let witness = || format!("x={} y={}", show(x), show(y));

        let pipeline = ip(x, y);
        agree.record(
            pipeline.is_some_and(|v| close_complex(v, hermitian_dot(&x.coords, &y.coords))),
            witness,
        );

        let alpha = Complex64::sample_any(&mut rng);
        let ok = (|| {
            let base = ip(x, y)?;
            let linear_right = close_complex(ip(x, &y.scaled(&alpha))?, alpha * base);
            let antilinear_left = close_complex(ip(&x.scaled(&alpha), y)?, alpha.conj() * base);
            let additive = close_complex(ip(x, &y.plus(x).ok()?)?, base + ip(x, x)?);
            Some(linear_right && antilinear_left && additive)
        })();
        sesqui.record(ok == Some(true), || {
            format!("{} alpha={}", witness(), alpha.render())
        });

        let ok = match (ip(y, x), ip(x, y)) {
            (Some(yx), Some(xy)) => close_complex(yx, xy.conj()),
            _ => false,
        };
        symmetric.record(ok, witness);
    }

    AxiomReport {
        subject: "internal diagonal product".into(),
        verdicts: [injective, agree, sesqui, symmetric]
            .into_iter()
            .map(LawTally::finish)
            .collect(),
    }
}
