//! Declarative conformance checks: a structure kind names its definitional
//! laws, a backend names the carriers, and [`run_conformance`] evaluates the
//! laws on seeded samples.
//!
//! One-sided kinds (semigroup to semifield) work on a single carrier under
//! its own addition and multiplication. Two-sided kinds work on bielements
//! `(right, left)` and go through the cross operation of
//! [`crate::bisemigroup`].

use std::cmp::Ordering;
use std::fmt::Debug;
use std::str::FromStr;

use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::Value;

use crate::bisemigroup::{
    check_cross_abelian, check_cross_distributive, cross_combine, cross_expand_terms,
    AdditiveCarrier, Bielement, Tag,
};
use crate::error::{Error, Result};
use crate::faults::{FirstWins, Saturating, ZMod6};
use crate::report::{LawTally, Verdict};
use crate::scalar::{Complex64, LeftScalar, Rational, RightScalar, SemiringCarrier};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StructureKind {
    Semigroup,
    Monoid,
    Semiring,
    Semifield,
    Bisemigroup,
    Bisemiring,
    Bisemifield,
    Bisemimodule,
    Bisemialgebra,
}

impl StructureKind {
    pub const ALL: [StructureKind; 9] = [
        StructureKind::Semigroup,
        StructureKind::Monoid,
        StructureKind::Semiring,
        StructureKind::Semifield,
        StructureKind::Bisemigroup,
        StructureKind::Bisemiring,
        StructureKind::Bisemifield,
        StructureKind::Bisemimodule,
        StructureKind::Bisemialgebra,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StructureKind::Semigroup => "semigroup",
            StructureKind::Monoid => "monoid",
            StructureKind::Semiring => "semiring",
            StructureKind::Semifield => "semifield",
            StructureKind::Bisemigroup => "bisemigroup",
            StructureKind::Bisemiring => "bisemiring",
            StructureKind::Bisemifield => "bisemifield",
            StructureKind::Bisemimodule => "bisemimodule",
            StructureKind::Bisemialgebra => "bisemialgebra",
        }
    }

    fn is_two_sided(self) -> bool {
        !matches!(
            self,
            StructureKind::Semigroup
                | StructureKind::Monoid
                | StructureKind::Semiring
                | StructureKind::Semifield
        )
    }

    /// The laws making up the definition of this kind.
    pub fn definitional_laws(self) -> &'static [&'static str] {
        match self {
            StructureKind::Semigroup => &["additive-associativity"],
            StructureKind::Monoid => &["additive-associativity", "additive-identity"],
            StructureKind::Semiring => &[
                "additive-associativity",
                "additive-commutativity",
                "multiplicative-associativity",
                "distributivity",
            ],
            StructureKind::Semifield => &[
                "additive-associativity",
                "additive-commutativity",
                "additive-identity",
                "multiplicative-associativity",
                "multiplicative-commutativity",
                "multiplicative-identity",
                "distributivity",
                "zero-divisor-free",
                "invertibility",
            ],
            StructureKind::Bisemigroup => &[
                "right-associativity",
                "left-associativity",
                "cross-expansion",
            ],
            StructureKind::Bisemiring => &[
                "cross-commutativity",
                "cross-associativity",
                "cross-distributivity",
            ],
            StructureKind::Bisemifield => &[
                "cross-commutativity",
                "cross-associativity",
                "cross-distributivity",
                "bi-commutativity",
                "zero-bidivisor-free",
                "biunit-invertibility",
            ],
            StructureKind::Bisemimodule => &[
                "action-additivity",
                "scalar-additivity",
                "action-compatibility",
                "unitarity",
                "cross-action",
                "side-distinction",
            ],
            StructureKind::Bisemialgebra => &[
                "action-additivity",
                "unitarity",
                "scalar-compatibility",
                "cross-multiplication",
                "unit-embedding",
            ],
        }
    }
}

impl FromStr for StructureKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        StructureKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown structure kind `{s}`")))
    }
}

/// A registered law: its identifier and the clause it encodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LawInfo {
    pub id: &'static str,
    pub clause: &'static str,
    pub two_sided: bool,
}

const fn law(id: &'static str, clause: &'static str, two_sided: bool) -> LawInfo {
    LawInfo {
        id,
        clause,
        two_sided,
    }
}

/// Every law the harness knows, each exactly once.
pub const LAW_REGISTRY: &[LawInfo] = &[
    law("additive-associativity", "(a + b) + c = a + (b + c)", false),
    law("additive-commutativity", "a + b = b + a", false),
    law("additive-identity", "a + 0 = 0 + a = a", false),
    law("multiplicative-associativity", "(ab)c = a(bc)", false),
    law("multiplicative-commutativity", "ab = ba", false),
    law("multiplicative-identity", "a1 = 1a = a", false),
    law("distributivity", "a(b + c) = ab + ac and (a + b)c = ac + bc", false),
    law("zero-divisor-free", "a != 0 and b != 0 imply ab != 0", false),
    law("invertibility", "every a != 0 has a^-1 with a a^-1 = 1", false),
    law("right-associativity", "the right carrier's addition is associative", true),
    law("left-associativity", "the left carrier's addition is associative", true),
    law(
        "cross-expansion",
        "x cross y develops into two diagonal and two cross terms whose diagonal sums give x cross y",
        true,
    ),
    law("cross-commutativity", "x cross y = y cross x, developments included", true),
    law("cross-associativity", "(x cross y) cross z = x cross (y cross z)", true),
    law("cross-distributivity", "x cross (y + z) = (x cross y) + (x cross z) on formal sums", true),
    law("bi-commutativity", "componentwise products commute", true),
    law("zero-bidivisor-free", "products of bielements with nonzero components have nonzero components", true),
    law("biunit-invertibility", "a bielement with nonzero components has a componentwise inverse", true),
    law("action-additivity", "r(g + h) = rg + rh on both sides", true),
    law("scalar-additivity", "(r + s)g = rg + sg on both sides", true),
    law("action-compatibility", "r(sg) = (rs)g on both sides", true),
    law("unitarity", "1_L g = g and g 1_R = g", true),
    law("cross-action", "acting on x cross y equals the cross of the actions", true),
    law("side-distinction", "the right component depends only on the right scalar, the left only on the left", true),
    law("scalar-compatibility", "r(ab) = (ra)b = a(rb) on both sides", true),
    law("cross-multiplication", "multiplying under the cross operation adds components", true),
    law("unit-embedding", "the unit map r -> r1 is an injective homomorphism", true),
];

pub fn law_info(id: &str) -> Option<&'static LawInfo> {
    LAW_REGISTRY.iter().find(|l| l.id == id)
}

/// Carrier selection for a conformance run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HarnessBackend {
    Integer,
    Rational,
    Complex,
    /// Integers modulo 6 (zero divisors).
    Z6,
    /// Multiplication returning its left operand (non-commutative).
    Noncomm,
    /// Saturating `i8` arithmetic (non-associative).
    Saturating,
}

impl HarnessBackend {
    pub const ALL: [HarnessBackend; 6] = [
        HarnessBackend::Integer,
        HarnessBackend::Rational,
        HarnessBackend::Complex,
        HarnessBackend::Z6,
        HarnessBackend::Noncomm,
        HarnessBackend::Saturating,
    ];

    pub fn name(self) -> &'static str {
        match self {
            HarnessBackend::Integer => "integer",
            HarnessBackend::Rational => "rational",
            HarnessBackend::Complex => "complex",
            HarnessBackend::Z6 => "z6",
            HarnessBackend::Noncomm => "noncomm",
            HarnessBackend::Saturating => "saturating",
        }
    }
}

impl FromStr for HarnessBackend {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        HarnessBackend::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::UnknownBackend(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureSpec {
    pub kind: StructureKind,
    pub backend: HarnessBackend,
    pub laws: Vec<String>,
}

impl StructureSpec {
    /// The spec carrying the kind's full definitional law list.
    pub fn standard(kind: StructureKind, backend: HarnessBackend) -> Self {
        StructureSpec {
            kind,
            backend,
            laws: kind
                .definitional_laws()
                .iter()
                .map(|s| s.to_string())
                .collect(),
        }
    }

    pub fn with_laws(kind: StructureKind, backend: HarnessBackend, laws: &[&str]) -> Self {
        StructureSpec {
            kind,
            backend,
            laws: laws.iter().map(|s| s.to_string()).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConformanceReport {
    pub structure: StructureKind,
    pub backend: HarnessBackend,
    pub seed: u64,
    pub samples: usize,
    pub verdicts: Vec<Verdict>,
}

impl ConformanceReport {
    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.holds)
    }

    pub fn verdict(&self, law: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.law == law)
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Evaluates every law of `spec` on `samples` seeded draws.
pub fn run_conformance(
    spec: &StructureSpec,
    samples: usize,
    seed: u64,
) -> Result<ConformanceReport> {
    for id in &spec.laws {
        match law_info(id) {
            Some(info) if info.two_sided == spec.kind.is_two_sided() => {}
            _ => return Err(Error::UnknownLaw(id.clone())),
        }
    }
    let samples = samples.max(1);
    let verdicts = match (spec.kind.is_two_sided(), spec.backend) {
        (false, HarnessBackend::Integer) => one_sided::<Integer>(&spec.laws, samples, seed),
        (false, HarnessBackend::Rational) => {
            one_sided::<LeftScalar<Rational>>(&spec.laws, samples, seed)
        }
        (false, HarnessBackend::Complex) => {
            one_sided::<LeftScalar<Complex64>>(&spec.laws, samples, seed)
        }
        (false, HarnessBackend::Z6) => one_sided::<ZMod6>(&spec.laws, samples, seed),
        (false, HarnessBackend::Noncomm) => one_sided::<FirstWins>(&spec.laws, samples, seed),
        (false, HarnessBackend::Saturating) => one_sided::<Saturating>(&spec.laws, samples, seed),
        (true, HarnessBackend::Integer) => two_sided::<Integer, Integer>(&spec.laws, samples, seed),
        (true, HarnessBackend::Rational) => {
            two_sided::<RightScalar<Rational>, LeftScalar<Rational>>(&spec.laws, samples, seed)
        }
        (true, HarnessBackend::Complex) => {
            two_sided::<RightScalar<Complex64>, LeftScalar<Complex64>>(&spec.laws, samples, seed)
        }
        (true, HarnessBackend::Z6) => two_sided::<ZMod6, ZMod6>(&spec.laws, samples, seed),
        (true, HarnessBackend::Noncomm) => {
            two_sided::<FirstWins, FirstWins>(&spec.laws, samples, seed)
        }
        (true, HarnessBackend::Saturating) => {
            two_sided::<Saturating, Saturating>(&spec.laws, samples, seed)
        }
    };
    Ok(ConformanceReport {
        structure: spec.kind,
        backend: spec.backend,
        seed,
        samples,
        verdicts,
    })
}

/// Arbitrary-precision integers: a commutative semiring without inverses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Integer(pub BigInt);

impl SemiringCarrier for Integer {
    fn carrier_name() -> String {
        "integer".into()
    }
    fn zero() -> Self {
        Integer(BigInt::zero())
    }
    fn one() -> Self {
        Integer(BigInt::one())
    }
    fn add(&self, other: &Self) -> Self {
        Integer(&self.0 + &other.0)
    }
    fn mul(&self, other: &Self) -> Self {
        Integer(&self.0 * &other.0)
    }
    fn inverse(&self) -> Option<Self> {
        (self.0.abs().is_one()).then(|| self.clone())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn equivalent(&self, other: &Self) -> bool {
        self == other
    }
    fn sample(rng: &mut ChaCha8Rng) -> Self {
        const SCHEDULE: [i64; 8] = [0, 1, 2, 3, 5, 7, 11, 13];
        let v = if rng.gen_bool(0.4) {
            SCHEDULE[rng.gen_range(0..SCHEDULE.len())]
        } else {
            rng.gen_range(0..1000)
        };
        Integer(BigInt::from(if rng.gen_bool(0.5) { -v } else { v }))
    }
    fn describe(&self) -> String {
        self.0.to_string()
    }
}

fn show<C: SemiringCarrier>(xs: &[&C]) -> String {
    const NAMES: [&str; 4] = ["a", "b", "c", "d"];
    xs.iter()
        .zip(NAMES)
        .map(|(x, n)| format!("{n}={}", x.describe()))
        .collect::<Vec<_>>()
        .join(", ")
}

fn one_sided<C: SemiringCarrier>(laws: &[String], samples: usize, seed: u64) -> Vec<Verdict> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let triples: Vec<(C, C, C)> = (0..samples)
        .map(|_| {
            (
                C::sample(&mut rng),
                C::sample(&mut rng),
                C::sample(&mut rng),
            )
        })
        .collect();
    let zero = C::zero();
    let one = C::one();
    laws.iter()
        .map(|id| {
            let mut tally = LawTally::new(id.as_str());
            for (a, b, c) in &triples {
                let witness3 = || show(&[a, b, c]);
                match id.as_str() {
                    "additive-associativity" => {
                        tally.record(a.add(b).add(c).equivalent(&a.add(&b.add(c))), witness3)
                    }
                    "additive-commutativity" => {
                        tally.record(a.add(b).equivalent(&b.add(a)), || show(&[a, b]))
                    }
                    "additive-identity" => tally.record(
                        a.add(&zero).equivalent(a) && zero.add(a).equivalent(a),
                        || show(&[a]),
                    ),
                    "multiplicative-associativity" => {
                        tally.record(a.mul(b).mul(c).equivalent(&a.mul(&b.mul(c))), witness3)
                    }
                    "multiplicative-commutativity" => {
                        tally.record(a.mul(b).equivalent(&b.mul(a)), || show(&[a, b]))
                    }
                    "multiplicative-identity" => tally.record(
                        a.mul(&one).equivalent(a) && one.mul(a).equivalent(a),
                        || show(&[a]),
                    ),
                    "distributivity" => tally.record(
                        a.mul(&b.add(c)).equivalent(&a.mul(b).add(&a.mul(c)))
                            && a.add(b).mul(c).equivalent(&a.mul(c).add(&b.mul(c))),
                        witness3,
                    ),
                    "zero-divisor-free" => {
                        if !a.is_zero() && !b.is_zero() {
                            tally.record(!a.mul(b).is_zero(), || show(&[a, b]));
                        }
                    }
                    "invertibility" => {
                        if !a.is_zero() {
                            let ok = a.inverse().is_some_and(|inv| a.mul(&inv).equivalent(&one));
                            tally.record(ok, || show(&[a]));
                        }
                    }
                    other => unreachable!("law `{other}` was validated"),
                }
            }
            tally.finish()
        })
        .collect()
}

/// Lets a semiring carrier serve as a bielement component. Ordering and
/// equality go through the rendered value, which is exact.
#[derive(Debug, Clone)]
struct Summand<C>(C);

impl<C: SemiringCarrier> PartialEq for Summand<C> {
    fn eq(&self, other: &Self) -> bool {
        self.0.describe() == other.0.describe()
    }
}

impl<C: SemiringCarrier> Eq for Summand<C> {}

impl<C: SemiringCarrier> PartialOrd for Summand<C> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<C: SemiringCarrier> Ord for Summand<C> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.describe().cmp(&other.0.describe())
    }
}

impl<C: SemiringCarrier> AdditiveCarrier for Summand<C> {
    fn combine(&self, other: &Self) -> Self {
        Summand(self.0.add(&other.0))
    }
    fn identity_like(&self) -> Self {
        Summand(C::zero())
    }
    fn to_json(&self) -> Value {
        Value::String(self.0.describe())
    }
    fn from_json(_: &Value) -> Result<Self> {
        Err(Error::Parse("harness summands are not parsed".into()))
    }
    fn render(&self) -> String {
        self.0.describe()
    }
}

type Bi<R, L> = Bielement<Summand<R>, Summand<L>>;

fn bi<R: SemiringCarrier, L: SemiringCarrier>(r: &R, l: &L) -> Bi<R, L> {
    Bielement::new(Summand(r.clone()), Summand(l.clone()))
}

fn bi_eq<R: SemiringCarrier, L: SemiringCarrier>(x: &Bi<R, L>, y: &Bi<R, L>) -> bool {
    x.right.0.equivalent(&y.right.0) && x.left.0.equivalent(&y.left.0)
}

/// `(g_R r_R) x (r_L g_L)`.
fn act<R: SemiringCarrier, L: SemiringCarrier>(r: &R, l: &L, x: &Bi<R, L>) -> Bi<R, L> {
    bi(&x.right.0.mul(r), &l.mul(&x.left.0))
}

struct BiSample<R, L> {
    x: Bi<R, L>,
    y: Bi<R, L>,
    z: Bi<R, L>,
    r: (R, L),
    s: (R, L),
}

impl<R: SemiringCarrier, L: SemiringCarrier> BiSample<R, L> {
    fn draw(rng: &mut ChaCha8Rng) -> Self {
        let pair = |rng: &mut ChaCha8Rng| (R::sample(rng), L::sample(rng));
        let (xr, xl) = pair(rng);
        let (yr, yl) = pair(rng);
        let (zr, zl) = pair(rng);
        BiSample {
            x: bi(&xr, &xl),
            y: bi(&yr, &yl),
            z: bi(&zr, &zl),
            r: pair(rng),
            s: pair(rng),
        }
    }

    fn describe(&self, with_scalars: bool) -> String {
        let mut s = format!(
            "x={}, y={}, z={}",
            self.x.render(),
            self.y.render(),
            self.z.render()
        );
        if with_scalars {
            s += &format!(
                ", r=({})x({}), s=({})x({})",
                self.r.0.describe(),
                self.r.1.describe(),
                self.s.0.describe(),
                self.s.1.describe()
            );
        }
        s
    }
}

fn two_sided<R: SemiringCarrier, L: SemiringCarrier>(
    laws: &[String],
    samples: usize,
    seed: u64,
) -> Vec<Verdict> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draws: Vec<BiSample<R, L>> = (0..samples).map(|_| BiSample::draw(&mut rng)).collect();
    laws.iter()
        .map(|id| {
            let mut tally = LawTally::new(id.as_str());
            for d in &draws {
                match two_sided_law(id, d) {
                    Ok(holds) => tally.record(holds, || d.describe(needs_scalars(id))),
                    Err(e) => tally.record(false, || format!("{}: {e}", d.describe(false))),
                }
            }
            tally.finish()
        })
        .collect()
}

fn needs_scalars(id: &str) -> bool {
    matches!(
        id,
        "action-additivity"
            | "scalar-additivity"
            | "action-compatibility"
            | "unitarity"
            | "cross-action"
            | "side-distinction"
            | "scalar-compatibility"
            | "unit-embedding"
    )
}

fn two_sided_law<R: SemiringCarrier, L: SemiringCarrier>(
    id: &str,
    d: &BiSample<R, L>,
) -> Result<bool> {
    let (x, y, z) = (&d.x, &d.y, &d.z);
    let (rr, rl) = (&d.r.0, &d.r.1);
    let (sr, sl) = (&d.s.0, &d.s.1);
    let one_r = R::one();
    let one_l = L::one();
    Ok(match id {
        "right-associativity" => x
            .right
            .0
            .add(&y.right.0)
            .add(&z.right.0)
            .equivalent(&x.right.0.add(&y.right.0.add(&z.right.0))),
        "left-associativity" => x
            .left
            .0
            .add(&y.left.0)
            .add(&z.left.0)
            .equivalent(&x.left.0.add(&y.left.0.add(&z.left.0))),
        "cross-expansion" => {
            let terms = cross_expand_terms(x, y)?;
            let combined = cross_combine(x, y)?;
            let tags: Vec<Tag> = terms.iter().map(|t| t.element.tag).collect();
            let partition = tags == [Tag::Diagonal, Tag::Diagonal, Tag::Cross, Tag::Cross];
            let diag_sum = bi(
                &terms[0].element.right.0.add(&terms[1].element.right.0),
                &terms[0].element.left.0.add(&terms[1].element.left.0),
            );
            partition && bi_eq(&diag_sum, &combined)
        }
        "cross-commutativity" => {
            let combined = bi_eq(&cross_combine(x, y)?, &cross_combine(y, x)?);
            combined && check_cross_abelian(x, y).holds
        }
        "cross-associativity" => {
            let lhs = cross_combine(&cross_combine(x, y)?, z)?;
            let rhs = cross_combine(x, &cross_combine(y, z)?)?;
            bi_eq(&lhs, &rhs)
        }
        "cross-distributivity" => check_cross_distributive(x, y, z).holds,
        "bi-commutativity" => bi_eq(
            &bi(&x.right.0.mul(&y.right.0), &x.left.0.mul(&y.left.0)),
            &bi(&y.right.0.mul(&x.right.0), &y.left.0.mul(&x.left.0)),
        ),
        "zero-bidivisor-free" => {
            let nonzero = |b: &Bi<R, L>| !b.right.0.is_zero() && !b.left.0.is_zero();
            !nonzero(x)
                || !nonzero(y)
                || nonzero(&bi(&x.right.0.mul(&y.right.0), &x.left.0.mul(&y.left.0)))
        }
        "biunit-invertibility" => {
            if x.right.0.is_zero() || x.left.0.is_zero() {
                true
            } else {
                match (x.right.0.inverse(), x.left.0.inverse()) {
                    (Some(ir), Some(il)) => {
                        x.right.0.mul(&ir).equivalent(&one_r)
                            && x.left.0.mul(&il).equivalent(&one_l)
                    }
                    _ => false,
                }
            }
        }
        "action-additivity" => {
            let lhs = act(rr, rl, &cross_combine(x, y)?);
            let rhs = bi(
                &act(rr, rl, x).right.0.add(&act(rr, rl, y).right.0),
                &act(rr, rl, x).left.0.add(&act(rr, rl, y).left.0),
            );
            bi_eq(&lhs, &rhs)
        }
        "scalar-additivity" => {
            let lhs = act(&rr.add(sr), &rl.add(sl), x);
            let (a, b) = (act(rr, rl, x), act(sr, sl, x));
            bi_eq(
                &lhs,
                &bi(&a.right.0.add(&b.right.0), &a.left.0.add(&b.left.0)),
            )
        }
        "action-compatibility" => bi_eq(
            &act(rr, rl, &act(sr, sl, x)),
            &act(&sr.mul(rr), &rl.mul(sl), x),
        ),
        "unitarity" => bi_eq(&act(&one_r, &one_l, x), x),
        "cross-action" => bi_eq(
            &act(rr, rl, &cross_combine(x, y)?),
            &cross_combine(&act(rr, rl, x), &act(rr, rl, y))?,
        ),
        "side-distinction" => {
            let base = act(rr, rl, x);
            base.right.0.equivalent(&act(rr, sl, x).right.0)
                && base.left.0.equivalent(&act(sr, rl, x).left.0)
        }
        "scalar-compatibility" => {
            let right = {
                let (a, b) = (&x.right.0, &y.right.0);
                let r_ab = a.mul(b).mul(rr);
                r_ab.equivalent(&a.mul(rr).mul(b)) && r_ab.equivalent(&a.mul(&b.mul(rr)))
            };
            let left = {
                let (a, b) = (&x.left.0, &y.left.0);
                let r_ab = rl.mul(&a.mul(b));
                r_ab.equivalent(&rl.mul(a).mul(b)) && r_ab.equivalent(&a.mul(&rl.mul(b)))
            };
            right && left
        }
        "cross-multiplication" => {
            let combined = cross_combine(x, y)?;
            bi_eq(
                &combined,
                &bi(&x.right.0.add(&y.right.0), &x.left.0.add(&y.left.0)),
            )
        }
        "unit-embedding" => {
            let eta_r = |r: &R| one_r.mul(r);
            let eta_l = |l: &L| l.mul(&one_l);
            let hom = eta_r(&rr.mul(sr)).equivalent(&eta_r(rr).mul(&eta_r(sr)))
                && eta_l(&rl.mul(sl)).equivalent(&eta_l(rl).mul(&eta_l(sl)));
            let injective = (rr.equivalent(sr) || !eta_r(rr).equivalent(&eta_r(sr)))
                && (rl.equivalent(sl) || !eta_l(rl).equivalent(&eta_l(sl)));
            hom && injective
        }
        other => unreachable!("law `{other}` was validated"),
    })
}
