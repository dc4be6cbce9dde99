//! Sampled functions on a finite grid with quadrature weights, and the
//! bifunction spaces built from them.
//!
//! Integrals are weighted sums over the grid. The weights stand in for a
//! Haar measure; they default to uniform weights of total mass one.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::{vector_from_json, vector_to_json};
use crate::scalar::Complex64;

#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction {
    samples: Vec<Complex64>,
    weights: Vec<f64>,
    label: String,
}

impl SampledFunction {
    pub fn new(
        samples: Vec<Complex64>,
        weights: Vec<f64>,
        label: impl Into<String>,
    ) -> Result<Self> {
        if samples.len() != weights.len() {
            return Err(Error::InvalidFunction(format!(
                "{} samples but {} weights",
                samples.len(),
                weights.len()
            )));
        }
        if let Some((k, w)) = weights
            .iter()
            .enumerate()
            .find(|(_, w)| !(w.is_finite() && **w > 0.0))
        {
            return Err(Error::InvalidFunction(format!(
                "weight {k} is {w}, weights must be positive"
            )));
        }
        Ok(SampledFunction {
            samples,
            weights,
            label: label.into(),
        })
    }

    /// Weights `1/m` on `m` points.
    pub fn uniform(samples: Vec<Complex64>, label: impl Into<String>) -> Result<Self> {
        let m = samples.len();
        Self::new(samples, vec![1.0 / m as f64; m], label)
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    fn with_samples(&self, samples: Vec<Complex64>) -> Self {
        SampledFunction {
            samples,
            ..self.clone()
        }
    }

    pub fn conjugate(&self) -> Self {
        self.with_samples(self.samples.iter().map(|z| z.conj()).collect())
    }

    /// Samples multiplied by `sqrt(w_k)`, so that plain sums of products
    /// become quadratures.
    pub fn weight_scaled(&self) -> Vec<Complex64> {
        self.samples
            .iter()
            .zip(&self.weights)
            .map(|(z, w)| z * w.sqrt())
            .collect()
    }

    fn same_grid(&self, other: &Self) -> Result<()> {
        if self.label != other.label || self.weights != other.weights {
            return Err(Error::InvalidFunction(format!(
                "grids `{}` and `{}` differ",
                self.label, other.label
            )));
        }
        Ok(())
    }
}

/// `phi_R (x) phi_L` on a shared grid.
#[derive(Debug, Clone, PartialEq)]
pub struct Bifunction {
    phi_r: SampledFunction,
    phi_l: SampledFunction,
}

impl Bifunction {
    pub fn new(phi_r: SampledFunction, phi_l: SampledFunction) -> Result<Self> {
        phi_r.same_grid(&phi_l)?;
        Ok(Bifunction { phi_r, phi_l })
    }

    pub fn phi_r(&self) -> &SampledFunction {
        &self.phi_r
    }

    pub fn phi_l(&self) -> &SampledFunction {
        &self.phi_l
    }

    /// Pointwise diagonal integrand `phi_R(x_k) phi_L(x_k)`.
    pub fn diagonal_integrand(&self) -> Vec<Complex64> {
        self.phi_r
            .samples
            .iter()
            .zip(&self.phi_l.samples)
            .map(|(r, l)| r * l)
            .collect()
    }

    /// Reads `{samples_R, samples_L, weights?, label?}`; weights default to uniform.
    pub fn from_json(v: &Value) -> Result<Self> {
        let r: Vec<Complex64> = vector_from_json(v.get("samples_R").unwrap_or(&Value::Null))?;
        let l: Vec<Complex64> = vector_from_json(v.get("samples_L").unwrap_or(&Value::Null))?;
        let label = v.get("label").and_then(Value::as_str).unwrap_or("grid");
        let weights = match v.get("weights") {
            Some(w) => w
                .as_array()
                .ok_or_else(|| Error::Parse("weights must be an array".into()))?
                .iter()
                .map(|x| {
                    x.as_f64()
                        .ok_or_else(|| Error::Parse(format!("bad weight {x}")))
                })
                .collect::<Result<Vec<f64>>>()?,
            None => vec![1.0 / l.len().max(1) as f64; l.len()],
        };
        Bifunction::new(
            SampledFunction::new(r, weights.clone(), label)?,
            SampledFunction::new(l, weights, label)?,
        )
    }

    pub fn to_json(&self) -> Value {
        json!({
            "label": self.phi_l.label,
            "samples_R": vector_to_json(&self.phi_r.samples),
            "samples_L": vector_to_json(&self.phi_l.samples),
            "weights": self.phi_l.weights,
        })
    }
}

/// `sum_k w_k |f_k|`.
pub fn quadrature_l1(f: &SampledFunction) -> f64 {
    f.samples
        .iter()
        .zip(&f.weights)
        .map(|(z, w)| w * z.norm())
        .sum()
}

/// `sum_k w_k |f_k|^2`.
pub fn quadrature_l2_squared(f: &SampledFunction) -> f64 {
    f.samples
        .iter()
        .zip(&f.weights)
        .map(|(z, w)| w * z.norm_sqr())
        .sum()
}

/// `sum_k w_k conj(f_k) g_k`.
pub fn weighted_inner(f: &SampledFunction, g: &SampledFunction) -> Result<Complex64> {
    f.same_grid(g)?;
    Ok(f.samples
        .iter()
        .zip(&g.samples)
        .zip(&f.weights)
        .fold(Complex64::new(0.0, 0.0), |acc, ((a, b), w)| {
            acc + a.conj() * b * *w
        }))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct L11Membership {
    pub value: f64,
    pub within_bound: bool,
}

/// The double integral of `|phi_R (x) phi_L|`, evaluated through its
/// factorization into two single quadratures.
pub fn l11_membership(bf: &Bifunction, bound: f64) -> L11Membership {
    let value = quadrature_l1(&bf.phi_r) * quadrature_l1(&bf.phi_l);
    L11Membership {
        value,
        within_bound: value < bound,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Transformed {
    /// `conj(phi_L) (x) phi_L`.
    pub squared: Bifunction,
    pub l2_value: f64,
}

/// Replaces `phi_R` by `conj(phi_L)`, the function-level image of the
/// projection followed by the raising map, and integrates `|phi_L|^2`.
pub fn transform_bl_pl(bf: &Bifunction) -> Transformed {
    let squared = Bifunction {
        phi_r: bf.phi_l.conjugate(),
        phi_l: bf.phi_l.clone(),
    };
    Transformed {
        l2_value: quadrature_l2_squared(&bf.phi_l),
        squared,
    }
}
