//! Scalar backends and the left/right semifield carriers built on them.
//!
//! Two backends are shipped. [`Rational`] is exact and arbitrary precision;
//! its left carrier is the nonnegative rationals and its right carrier is the
//! nonpositive rationals, the two being exchanged by negation. [`Complex64`]
//! is double precision; its right carrier holds the conjugates of the left
//! one, the two being exchanged by complex conjugation.
//!
//! The right carrier inherits its semifield structure from the left one by
//! transport along the involution, so the right unit of the rational backend
//! is `-1` and `r1 * r2` on the right side is `-(r1 * r2)` in plain
//! arithmetic. Products of a right scalar by a left scalar are ordinary
//! products in the underlying number system.

use std::cmp::Ordering;
use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

pub use num::complex::Complex64;

use crate::error::{Error, Result};
use crate::report::{AxiomReport, LawTally};

/// Exact rational scalar.
pub type Rational = BigRational;

/// Absolute tolerance for unit-scale floating comparisons.
pub const FLOAT_TOLERANCE: f64 = 1e-12;

/// Which number system a scalar type lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Backend {
    Rational,
    Complex,
}

impl Backend {
    pub fn name(self) -> &'static str {
        match self {
            Backend::Rational => "rational",
            Backend::Complex => "complex",
        }
    }
}

/// `|a - b| <= 1e-12 * max(1, |a|, |b|)`.
pub fn close_f64(a: f64, b: f64) -> bool {
    let scale = 1f64.max(a.abs()).max(b.abs());
    (a - b).abs() <= FLOAT_TOLERANCE * scale
}

pub fn close_complex(a: Complex64, b: Complex64) -> bool {
    let scale = 1f64.max(a.norm()).max(b.norm());
    (a - b).norm() <= FLOAT_TOLERANCE * scale
}

/// `p/q` as an exact rational. Panics if `q == 0`.
pub fn rational(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p/q"`, `"p"` or a plain decimal such as `"0.25"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::Parse(format!("not a rational number: `{text}`"));
    if let Some((p, q)) = text.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(Error::Parse(format!("zero denominator in `{text}`")));
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((int, frac)) = text.split_once('.') {
        let negative = int.trim_start().starts_with('-');
        let digits = format!("{}{}", int.trim_start_matches(['-', '+']), frac);
        let num: BigInt = digits.parse().map_err(|_| bad())?;
        let den = num::pow(BigInt::from(10), frac.len());
        let r = Rational::new(num, den);
        return Ok(if negative { -r } else { r });
    }
    let p: BigInt = text.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(p))
}

/// Arithmetic surface shared by both backends.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    const BACKEND: Backend;

    /// The involution exchanging left and right carriers: negation on the
    /// rational backend, conjugation on the complex one. It is its own inverse.
    fn involute(&self) -> Self;

    /// Complex conjugate; identity on the rational backend.
    fn conj(&self) -> Self;

    /// Exact equality on rationals, scaled 1e-12 tolerance on complex.
    fn approx_eq(&self, other: &Self) -> bool;

    fn in_left_carrier(&self) -> bool;

    fn in_right_carrier(&self) -> bool {
        self.involute().in_left_carrier()
    }

    /// Sign of a real value; `None` for values with a nonzero imaginary part.
    fn real_sign(&self) -> Option<Ordering>;

    /// Principal square root, when the backend has one.
    fn sqrt(&self) -> Option<Self>;

    fn magnitude(&self) -> f64;

    fn to_complex(&self) -> Complex64;

    fn from_i64(v: i64) -> Self;

    fn to_json(&self) -> Value;

    fn from_json(v: &Value) -> Result<Self>;

    fn render(&self) -> String;

    /// Draws an element of the left carrier, mixing boundary values
    /// (0, 1, small primes) with random ones.
    fn sample_left(rng: &mut ChaCha8Rng) -> Self;

    fn sample_any(rng: &mut ChaCha8Rng) -> Self;
}

const SMALL_PRIMES: [i64; 6] = [2, 3, 5, 7, 11, 13];

fn schedule_value(rng: &mut ChaCha8Rng) -> i64 {
    match rng.gen_range(0..8) {
        0 => 0,
        1 => 1,
        k => SMALL_PRIMES[(k - 2) as usize],
    }
}

impl Scalar for Rational {
    const BACKEND: Backend = Backend::Rational;

    fn involute(&self) -> Self {
        -self.clone()
    }

    fn conj(&self) -> Self {
        self.clone()
    }

    fn approx_eq(&self, other: &Self) -> bool {
        self == other
    }

    fn in_left_carrier(&self) -> bool {
        !self.is_negative()
    }

    fn real_sign(&self) -> Option<Ordering> {
        Some(self.cmp(&Rational::zero()))
    }

    fn sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = self.numer().sqrt();
        let d = self.denom().sqrt();
        (&n * &n == *self.numer() && &d * &d == *self.denom()).then(|| Rational::new(n, d))
    }

    fn magnitude(&self) -> f64 {
        self.abs().to_f64().unwrap_or(f64::INFINITY)
    }

    fn to_complex(&self) -> Complex64 {
        Complex64::new(self.to_f64().unwrap_or(f64::NAN), 0.0)
    }

    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }

    fn to_json(&self) -> Value {
        Value::String(self.render())
    }

    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::String(s) => parse_rational(s),
            Value::Number(n) => parse_rational(&n.to_string()),
            other => Err(Error::Parse(format!("expected a rational, got {other}"))),
        }
    }

    fn render(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }

    fn sample_left(rng: &mut ChaCha8Rng) -> Self {
        if rng.gen_bool(0.3) {
            Self::from_i64(schedule_value(rng))
        } else {
            rational(rng.gen_range(0..=50), rng.gen_range(1..=12))
        }
    }

    fn sample_any(rng: &mut ChaCha8Rng) -> Self {
        let v = Self::sample_left(rng);
        if rng.gen_bool(0.5) {
            -v
        } else {
            v
        }
    }
}

impl Scalar for Complex64 {
    const BACKEND: Backend = Backend::Complex;

    fn involute(&self) -> Self {
        Complex64::conj(self)
    }

    fn conj(&self) -> Self {
        Complex64::conj(self)
    }

    fn approx_eq(&self, other: &Self) -> bool {
        close_complex(*self, *other)
    }

    fn in_left_carrier(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    fn real_sign(&self) -> Option<Ordering> {
        if self.im == 0.0 {
            self.re.partial_cmp(&0.0)
        } else {
            None
        }
    }

    fn sqrt(&self) -> Option<Self> {
        Some(Complex64::sqrt(*self))
    }

    fn magnitude(&self) -> f64 {
        self.norm()
    }

    fn to_complex(&self) -> Complex64 {
        *self
    }

    fn from_i64(v: i64) -> Self {
        Complex64::new(v as f64, 0.0)
    }

    fn to_json(&self) -> Value {
        serde_json::json!({ "re": self.re, "im": self.im })
    }

    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::Object(map) => {
                let part = |key: &str| -> Result<f64> {
                    match map.get(key) {
                        None => Ok(0.0),
                        Some(Value::Number(n)) => n
                            .as_f64()
                            .ok_or_else(|| Error::Parse(format!("bad `{key}` component"))),
                        Some(other) => Err(Error::Parse(format!("bad `{key}` component: {other}"))),
                    }
                };
                Ok(Complex64::new(part("re")?, part("im")?))
            }
            Value::Number(n) => n
                .as_f64()
                .map(|re| Complex64::new(re, 0.0))
                .ok_or_else(|| Error::Parse(format!("bad number {n}"))),
            Value::String(s) => {
                let r = parse_rational(s)?;
                Ok(r.to_complex())
            }
            other => Err(Error::Parse(format!(
                "expected a complex number, got {other}"
            ))),
        }
    }

    fn render(&self) -> String {
        format!("{}{:+}i", self.re, self.im)
    }

    fn sample_left(rng: &mut ChaCha8Rng) -> Self {
        if rng.gen_bool(0.2) {
            Self::from_i64(schedule_value(rng))
        } else {
            Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0))
        }
    }

    fn sample_any(rng: &mut ChaCha8Rng) -> Self {
        Self::sample_left(rng)
    }
}

/// Element of the left semifield carrier.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LeftScalar<S>(S);

/// Element of the right semifield carrier.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RightScalar<S>(S);

impl<S: Scalar> LeftScalar<S> {
    pub fn new(value: S) -> Result<Self> {
        if value.in_left_carrier() {
            Ok(LeftScalar(value))
        } else {
            Err(Error::InadmissibleScalar {
                carrier: "left",
                value: value.render(),
            })
        }
    }

    pub fn value(&self) -> &S {
        &self.0
    }

    pub fn into_inner(self) -> S {
        self.0
    }

    /// Ordinary product with a right scalar, landing in the base number system.
    pub fn pair(&self, right: &RightScalar<S>) -> S {
        right.0.clone() * self.0.clone()
    }
}

impl<S: Scalar> RightScalar<S> {
    pub fn new(value: S) -> Result<Self> {
        if value.in_right_carrier() {
            Ok(RightScalar(value))
        } else {
            Err(Error::InadmissibleScalar {
                carrier: "right",
                value: value.render(),
            })
        }
    }

    pub fn value(&self) -> &S {
        &self.0
    }

    pub fn into_inner(self) -> S {
        self.0
    }
}

/// `I_{L->R}`: negation on rationals, conjugation on complex numbers.
pub fn involution_left_to_right<S: Scalar>(a: &LeftScalar<S>) -> RightScalar<S> {
    RightScalar(a.0.involute())
}

/// `P_{R->L}`, the inverse of [`involution_left_to_right`].
pub fn project_right_to_left<S: Scalar>(a: &RightScalar<S>) -> LeftScalar<S> {
    LeftScalar(a.0.involute())
}

/// Element of the bisemifield `F_R x F_L`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BiScalar<S> {
    pub right: RightScalar<S>,
    pub left: LeftScalar<S>,
}

impl<S: Scalar> BiScalar<S> {
    pub fn new(right: RightScalar<S>, left: LeftScalar<S>) -> Self {
        BiScalar { right, left }
    }

    /// The biunit `(1_R, 1_L)`.
    pub fn biunit() -> Self {
        BiScalar {
            right: <RightScalar<S> as SemiringCarrier>::one(),
            left: <LeftScalar<S> as SemiringCarrier>::one(),
        }
    }

    /// The value `r * l` of the bielement in the base number system.
    pub fn evaluate(&self) -> S {
        self.left.pair(&self.right)
    }
}

/// The operations a semiring (or semifield) carrier exposes to the axiom checkers.
pub trait SemiringCarrier: Clone + Debug {
    fn carrier_name() -> String;
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Multiplicative inverse, `None` for zero or non-units.
    fn inverse(&self) -> Option<Self>;
    fn is_zero(&self) -> bool;
    fn equivalent(&self, other: &Self) -> bool;
    fn sample(rng: &mut ChaCha8Rng) -> Self;
    fn describe(&self) -> String;
}

impl<S: Scalar> SemiringCarrier for LeftScalar<S> {
    fn carrier_name() -> String {
        format!("left-{}", S::BACKEND.name())
    }
    fn zero() -> Self {
        LeftScalar(S::zero())
    }
    fn one() -> Self {
        LeftScalar(S::one())
    }
    fn add(&self, other: &Self) -> Self {
        LeftScalar(self.0.clone() + other.0.clone())
    }
    fn mul(&self, other: &Self) -> Self {
        LeftScalar(self.0.clone() * other.0.clone())
    }
    fn inverse(&self) -> Option<Self> {
        (!self.0.is_zero()).then(|| LeftScalar(S::one() / self.0.clone()))
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn equivalent(&self, other: &Self) -> bool {
        self.0.approx_eq(&other.0)
    }
    fn sample(rng: &mut ChaCha8Rng) -> Self {
        LeftScalar(S::sample_left(rng))
    }
    fn describe(&self) -> String {
        self.0.render()
    }
}

impl<S: Scalar> SemiringCarrier for RightScalar<S> {
    fn carrier_name() -> String {
        format!("right-{}", S::BACKEND.name())
    }
    fn zero() -> Self {
        RightScalar(S::zero())
    }
    fn one() -> Self {
        RightScalar(S::one().involute())
    }
    fn add(&self, other: &Self) -> Self {
        RightScalar(self.0.clone() + other.0.clone())
    }
    fn mul(&self, other: &Self) -> Self {
        RightScalar((self.0.involute() * other.0.involute()).involute())
    }
    fn inverse(&self) -> Option<Self> {
        (!self.0.is_zero()).then(|| RightScalar((S::one() / self.0.involute()).involute()))
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn equivalent(&self, other: &Self) -> bool {
        self.0.approx_eq(&other.0)
    }
    fn sample(rng: &mut ChaCha8Rng) -> Self {
        RightScalar(S::sample_left(rng).involute())
    }
    fn describe(&self) -> String {
        self.0.render()
    }
}

impl<S: Scalar> SemiringCarrier for BiScalar<S> {
    fn carrier_name() -> String {
        format!("bi-{}", S::BACKEND.name())
    }
    fn zero() -> Self {
        BiScalar::new(RightScalar::zero(), LeftScalar::zero())
    }
    fn one() -> Self {
        BiScalar::biunit()
    }
    fn add(&self, other: &Self) -> Self {
        BiScalar::new(self.right.add(&other.right), self.left.add(&other.left))
    }
    fn mul(&self, other: &Self) -> Self {
        BiScalar::new(self.right.mul(&other.right), self.left.mul(&other.left))
    }
    /// Componentwise inverse; a bielement is a biunit when both sides are units.
    fn inverse(&self) -> Option<Self> {
        Some(BiScalar::new(self.right.inverse()?, self.left.inverse()?))
    }
    fn is_zero(&self) -> bool {
        self.right.is_zero() || self.left.is_zero()
    }
    fn equivalent(&self, other: &Self) -> bool {
        self.right.equivalent(&other.right) && self.left.equivalent(&other.left)
    }
    fn sample(rng: &mut ChaCha8Rng) -> Self {
        BiScalar::new(RightScalar::sample(rng), LeftScalar::sample(rng))
    }
    fn describe(&self) -> String {
        format!("({})x({})", self.right.describe(), self.left.describe())
    }
}

/// Evaluates the semifield axioms on `sample_budget` seeded element triples.
///
/// Violations are reported with the first witness triple; nothing panics.
pub fn check_semifield_axioms<C: SemiringCarrier>(sample_budget: usize, seed: u64) -> AxiomReport {
    use rand::SeedableRng;

    let budget = sample_budget.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let triples: Vec<(C, C, C)> = (0..budget)
        .map(|_| {
            (
                C::sample(&mut rng),
                C::sample(&mut rng),
                C::sample(&mut rng),
            )
        })
        .collect();
    semifield_verdicts(&C::carrier_name(), &triples)
}

pub(crate) fn semifield_verdicts<C: SemiringCarrier>(
    subject: &str,
    triples: &[(C, C, C)],
) -> AxiomReport {
    let show =
        |a: &C, b: &C, c: &C| format!("a={}, b={}, c={}", a.describe(), b.describe(), c.describe());

    let mut add_assoc = LawTally::new("additive-associativity");
    let mut add_comm = LawTally::new("additive-commutativity");
    let mut add_ident = LawTally::new("additive-identity");
    let mut mul_assoc = LawTally::new("multiplicative-associativity");
    let mut mul_comm = LawTally::new("multiplicative-commutativity");
    let mut mul_ident = LawTally::new("multiplicative-identity");
    let mut distrib = LawTally::new("distributivity");
    let mut invert = LawTally::new("invertibility");

    let zero = C::zero();
    let one = C::one();
    for (a, b, c) in triples {
        add_assoc.record(a.add(b).add(c).equivalent(&a.add(&b.add(c))), || {
            show(a, b, c)
        });
        add_comm.record(a.add(b).equivalent(&b.add(a)), || show(a, b, c));
        add_ident.record(a.add(&zero).equivalent(a), || show(a, b, c));
        mul_assoc.record(a.mul(b).mul(c).equivalent(&a.mul(&b.mul(c))), || {
            show(a, b, c)
        });
        mul_comm.record(a.mul(b).equivalent(&b.mul(a)), || show(a, b, c));
        mul_ident.record(
            a.mul(&one).equivalent(a) && one.mul(a).equivalent(a),
            || show(a, b, c),
        );
        let left = a.mul(&b.add(c)).equivalent(&a.mul(b).add(&a.mul(c)));
        let right = a.add(b).mul(c).equivalent(&a.mul(c).add(&b.mul(c)));
        distrib.record(left && right, || show(a, b, c));
        if !a.is_zero() {
            let ok = match a.inverse() {
                Some(inv) => a.mul(&inv).equivalent(&one),
                None => false,
            };
            invert.record(ok, || show(a, b, c));
        }
    }

    AxiomReport {
        subject: subject.to_string(),
        verdicts: [
            add_assoc, add_comm, add_ident, mul_assoc, mul_comm, mul_ident, distrib, invert,
        ]
        .into_iter()
        .map(LawTally::finish)
        .collect(),
    }
}
