//! Bielements, integer-weighted formal sums of bielements, and the cross
//! binary operation.
//!
//! A bielement pairs an element of a right carrier with an element of a left
//! carrier. Two bielements combine under the cross operation into
//! `(r1 + r2) x (l1 + l2)`, whose development is the four-term formal sum
//!
//! ```text
//! (r1 x l1) + (r2 x l2) + (r1 x l2) + (r2 x l1)
//! ```
//!
//! with the first two terms tagged [`Tag::Diagonal`] and the last two
//! [`Tag::Cross`]. Formal sums stand in for cosets of the tensor product: the
//! bilinearity rewrite is the only relation imposed on them.

use std::fmt::Debug;

use num::bigint::BigInt;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::report::Verdict;
use crate::scalar::{Rational, Scalar};

/// An additive semigroup carrier that bielement components can be drawn from.
pub trait AdditiveCarrier: Clone + Ord + Debug {
    fn combine(&self, other: &Self) -> Self;

    /// The additive identity of the same shape as `self`.
    fn identity_like(&self) -> Self;

    /// Whether `self` and `other` live in the same carrier (e.g. equal vector lengths).
    fn compatible(&self, _other: &Self) -> bool {
        true
    }

    fn to_json(&self) -> Value;

    fn from_json(v: &Value) -> Result<Self>;

    fn render(&self) -> String;
}

impl AdditiveCarrier for i64 {
    fn combine(&self, other: &Self) -> Self {
        self + other
    }
    fn identity_like(&self) -> Self {
        0
    }
    fn to_json(&self) -> Value {
        Value::from(*self)
    }
    fn from_json(v: &Value) -> Result<Self> {
        v.as_i64()
            .ok_or_else(|| Error::Parse(format!("expected an integer, got {v}")))
    }
    fn render(&self) -> String {
        self.to_string()
    }
}

impl AdditiveCarrier for BigInt {
    fn combine(&self, other: &Self) -> Self {
        self + other
    }
    fn identity_like(&self) -> Self {
        BigInt::from(0)
    }
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::String(s) => s
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer `{s}`"))),
            Value::Number(n) => n
                .to_string()
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer {n}"))),
            other => Err(Error::Parse(format!("expected an integer, got {other}"))),
        }
    }
    fn render(&self) -> String {
        self.to_string()
    }
}

impl AdditiveCarrier for Rational {
    fn combine(&self, other: &Self) -> Self {
        self + other
    }
    fn identity_like(&self) -> Self {
        <Rational as num::Zero>::zero()
    }
    fn to_json(&self) -> Value {
        Scalar::to_json(self)
    }
    fn from_json(v: &Value) -> Result<Self> {
        <Rational as Scalar>::from_json(v)
    }
    fn render(&self) -> String {
        Scalar::render(self)
    }
}

impl<T: AdditiveCarrier> AdditiveCarrier for Vec<T> {
    fn combine(&self, other: &Self) -> Self {
        self.iter().zip(other).map(|(a, b)| a.combine(b)).collect()
    }
    fn identity_like(&self) -> Self {
        self.iter().map(T::identity_like).collect()
    }
    fn compatible(&self, other: &Self) -> bool {
        self.len() == other.len() && self.iter().zip(other).all(|(a, b)| a.compatible(b))
    }
    fn to_json(&self) -> Value {
        Value::Array(self.iter().map(T::to_json).collect())
    }
    fn from_json(v: &Value) -> Result<Self> {
        v.as_array()
            .ok_or_else(|| Error::Parse(format!("expected an array, got {v}")))?
            .iter()
            .map(T::from_json)
            .collect()
    }
    fn render(&self) -> String {
        let parts: Vec<String> = self.iter().map(T::render).collect();
        format!("({})", parts.join(", "))
    }
}

/// How a bielement arose in an expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tag {
    Diagonal,
    Cross,
}

impl Tag {
    pub fn name(self) -> &'static str {
        match self {
            Tag::Diagonal => "diagonal",
            Tag::Cross => "cross",
        }
    }

    fn parse(s: &str) -> Result<Self> {
        match s {
            "diagonal" | "D" => Ok(Tag::Diagonal),
            "cross" | "C" => Ok(Tag::Cross),
            other => Err(Error::Parse(format!("unknown tag `{other}`"))),
        }
    }
}

/// A right element paired with a left element, `right x left`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bielement<R, L> {
    pub right: R,
    pub left: L,
    pub tag: Tag,
}

impl<R: AdditiveCarrier, L: AdditiveCarrier> Bielement<R, L> {
    /// A standalone bielement, tagged diagonal.
    pub fn new(right: R, left: L) -> Self {
        Bielement {
            right,
            left,
            tag: Tag::Diagonal,
        }
    }

    pub fn with_tag(mut self, tag: Tag) -> Self {
        self.tag = tag;
        self
    }

    /// `0 x 0` of the same shape.
    pub fn zero_like(&self) -> Self {
        Bielement::new(self.right.identity_like(), self.left.identity_like())
    }

    /// Equality of the underlying pair, ignoring the tag.
    pub fn same_value(&self, other: &Self) -> bool {
        self.right == other.right && self.left == other.left
    }

    pub fn render(&self) -> String {
        format!("{}x{}", self.right.render(), self.left.render())
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if !self.right.compatible(&other.right) {
            return Err(Error::CarrierMismatch(format!(
                "right components {} and {}",
                self.right.render(),
                other.right.render()
            )));
        }
        if !self.left.compatible(&other.left) {
            return Err(Error::CarrierMismatch(format!(
                "left components {} and {}",
                self.left.render(),
                other.left.render()
            )));
        }
        Ok(())
    }
}

/// One weighted summand of a [`BiformalSum`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term<R, L> {
    pub coeff: i64,
    pub element: Bielement<R, L>,
}

/// A finite integer combination of bielements, kept in canonical form:
/// sorted by `(right, left, tag)`, like terms merged, zero terms dropped.
///
/// Equality compares the tag-erased sums, so two expansions that differ only
/// in provenance are equal.
#[derive(Debug, Clone)]
pub struct BiformalSum<R, L> {
    terms: Vec<Term<R, L>>,
}

impl<R: AdditiveCarrier, L: AdditiveCarrier> BiformalSum<R, L> {
    pub fn zero() -> Self {
        BiformalSum { terms: Vec::new() }
    }

    pub fn single(element: Bielement<R, L>) -> Self {
        Self::from_terms(vec![Term { coeff: 1, element }])
    }

    pub fn from_terms(mut terms: Vec<Term<R, L>>) -> Self {
        terms.sort_by(|a, b| a.element.cmp(&b.element));
        let mut merged: Vec<Term<R, L>> = Vec::with_capacity(terms.len());
        for t in terms {
            match merged.last_mut() {
                Some(last) if last.element == t.element => last.coeff += t.coeff,
                _ => merged.push(t),
            }
        }
        merged.retain(|t| t.coeff != 0);
        BiformalSum { terms: merged }
    }

    pub fn terms(&self) -> &[Term<R, L>] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.untagged().is_empty()
    }

    /// Term concatenation followed by canonicalization.
    pub fn plus(&self, other: &Self) -> Self {
        Self::from_terms(self.terms.iter().chain(&other.terms).cloned().collect())
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff * k,
                    element: t.element.clone(),
                })
                .collect(),
        )
    }

    /// The sum with tags erased and like pairs merged.
    pub fn untagged(&self) -> Vec<(i64, R, L)> {
        let mut out: Vec<(i64, R, L)> = Vec::new();
        let mut pairs: Vec<(&R, &L, i64)> = self
            .terms
            .iter()
            .map(|t| (&t.element.right, &t.element.left, t.coeff))
            .collect();
        pairs.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
        for (r, l, c) in pairs {
            match out.last_mut() {
                Some(last) if last.1 == *r && last.2 == *l => last.0 += c,
                _ => out.push((c, r.clone(), l.clone())),
            }
        }
        out.retain(|t| t.0 != 0);
        out
    }

    /// Equality including tags.
    pub fn tagged_eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }

    /// Number of terms carrying `tag`, counted with multiplicity.
    pub fn weight_of(&self, tag: Tag) -> i64 {
        self.terms
            .iter()
            .filter(|t| t.element.tag == tag)
            .map(|t| t.coeff)
            .sum()
    }

    /// Bilinear extension of the cross operation:
    /// `(sum a_s s) x (sum b_t t) = sum a_s b_t expand(s, t)`.
    pub fn cross(&self, other: &Self) -> Result<Self> {
        let mut terms = Vec::with_capacity(4 * self.terms.len() * other.terms.len());
        for s in &self.terms {
            for t in &other.terms {
                for term in cross_expand_terms(&s.element, &t.element)? {
                    terms.push(Term {
                        coeff: s.coeff * t.coeff * term.coeff,
                        element: term.element,
                    });
                }
            }
        }
        Ok(Self::from_terms(terms))
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|t| {
                    json!({
                        "coeff": t.coeff,
                        "right": t.element.right.to_json(),
                        "left": t.element.left.to_json(),
                        "tag": t.element.tag.name(),
                    })
                })
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let items = v
            .as_array()
            .ok_or_else(|| Error::Parse("a formal sum is a JSON list".into()))?;
        let mut terms = Vec::with_capacity(items.len());
        for item in items {
            let field = |k: &str| {
                item.get(k)
                    .ok_or_else(|| Error::Parse(format!("term without `{k}`")))
            };
            let coeff = field("coeff")?
                .as_i64()
                .ok_or_else(|| Error::Parse("coeff must be an integer".into()))?;
            let tag = match item.get("tag").and_then(Value::as_str) {
                Some(s) => Tag::parse(s)?,
                None => Tag::Diagonal,
            };
            terms.push(Term {
                coeff,
                element: Bielement::new(
                    R::from_json(field("right")?)?,
                    L::from_json(field("left")?)?,
                )
                .with_tag(tag),
            });
        }
        Ok(Self::from_terms(terms))
    }
}

impl<R: AdditiveCarrier, L: AdditiveCarrier> PartialEq for BiformalSum<R, L> {
    fn eq(&self, other: &Self) -> bool {
        self.untagged() == other.untagged()
    }
}

/// `(r1 x l1) cross (r2 x l2) = (r1 + r2) x (l1 + l2)`.
pub fn cross_combine<R: AdditiveCarrier, L: AdditiveCarrier>(
    b1: &Bielement<R, L>,
    b2: &Bielement<R, L>,
) -> Result<Bielement<R, L>> {
    b1.check_compatible(b2)?;
    Ok(Bielement::new(
        b1.right.combine(&b2.right),
        b1.left.combine(&b2.left),
    ))
}

/// The four terms of the development of `b1 cross b2`, before merging:
/// two diagonal terms followed by two cross terms.
pub fn cross_expand_terms<R: AdditiveCarrier, L: AdditiveCarrier>(
    b1: &Bielement<R, L>,
    b2: &Bielement<R, L>,
) -> Result<[Term<R, L>; 4]> {
    b1.check_compatible(b2)?;
    let term = |r: &R, l: &L, tag| Term {
        coeff: 1,
        element: Bielement::new(r.clone(), l.clone()).with_tag(tag),
    };
    Ok([
        term(&b1.right, &b1.left, Tag::Diagonal),
        term(&b2.right, &b2.left, Tag::Diagonal),
        term(&b1.right, &b2.left, Tag::Cross),
        term(&b2.right, &b1.left, Tag::Cross),
    ])
}

/// The development of `b1 cross b2` as a canonical formal sum.
pub fn cross_expand<R: AdditiveCarrier, L: AdditiveCarrier>(
    b1: &Bielement<R, L>,
    b2: &Bielement<R, L>,
) -> Result<BiformalSum<R, L>> {
    Ok(BiformalSum::from_terms(cross_expand_terms(b1, b2)?.into()))
}

/// Whether every component occurs only once in `b1 cross b2`.
///
/// This is advisory: expansion of non-simple inputs is still carried out.
pub fn inputs_are_simple<R: AdditiveCarrier, L: AdditiveCarrier>(
    b1: &Bielement<R, L>,
    b2: &Bielement<R, L>,
) -> bool {
    b1.right != b2.right && b1.left != b2.left
}

/// Commutativity of the cross operation: both the combined bielements and
/// their developments must agree when the arguments are swapped.
pub fn check_cross_abelian<R: AdditiveCarrier, L: AdditiveCarrier>(
    b1: &Bielement<R, L>,
    b2: &Bielement<R, L>,
) -> Verdict {
    const LAW: &str = "cross-commutativity";
    let outcome = (|| -> Result<Option<String>> {
        let c12 = cross_combine(b1, b2)?;
        let c21 = cross_combine(b2, b1)?;
        if !c12.same_value(&c21) {
            return Ok(Some(format!(
                "b1={}, b2={}: b1*b2={} but b2*b1={}",
                b1.render(),
                b2.render(),
                c12.render(),
                c21.render()
            )));
        }
        let e12 = cross_expand(b1, b2)?;
        let e21 = cross_expand(b2, b1)?;
        Ok((e12 != e21).then(|| {
            format!(
                "b1={}, b2={}: developments differ",
                b1.render(),
                b2.render()
            )
        }))
    })();
    verdict_from(LAW, outcome)
}

/// `(b1 * b2) * b3 = b1 * (b2 * b3)` under [`cross_combine`].
pub fn check_cross_associative<R: AdditiveCarrier, L: AdditiveCarrier>(
    b1: &Bielement<R, L>,
    b2: &Bielement<R, L>,
    b3: &Bielement<R, L>,
) -> Verdict {
    const LAW: &str = "cross-associativity";
    let outcome = (|| -> Result<Option<String>> {
        let lhs = cross_combine(&cross_combine(b1, b2)?, b3)?;
        let rhs = cross_combine(b1, &cross_combine(b2, b3)?)?;
        Ok((!lhs.same_value(&rhs)).then(|| {
            format!(
                "b1={}, b2={}, b3={}: (b1*b2)*b3={} but b1*(b2*b3)={}",
                b1.render(),
                b2.render(),
                b3.render(),
                lhs.render(),
                rhs.render()
            )
        }))
    })();
    verdict_from(LAW, outcome)
}

/// Compares `b1 x (b2 + b3)` with `(b1 x b2) + (b1 x b3)` at the formal-sum
/// level, with `+` as term concatenation and `x` extended bilinearly.
pub fn check_cross_distributive<R: AdditiveCarrier, L: AdditiveCarrier>(
    b1: &Bielement<R, L>,
    b2: &Bielement<R, L>,
    b3: &Bielement<R, L>,
) -> Verdict {
    const LAW: &str = "cross-distributivity";
    let outcome = (|| -> Result<Option<String>> {
        let sum23 = BiformalSum::single(b2.clone()).plus(&BiformalSum::single(b3.clone()));
        let lhs = BiformalSum::single(b1.clone()).cross(&sum23)?;
        let rhs = cross_expand(b1, b2)?.plus(&cross_expand(b1, b3)?);
        Ok((lhs != rhs).then(|| {
            format!(
                "b1={}, b2={}, b3={}: {} vs {}",
                b1.render(),
                b2.render(),
                b3.render(),
                lhs.to_json(),
                rhs.to_json()
            )
        }))
    })();
    verdict_from(LAW, outcome)
}

fn verdict_from(law: &str, outcome: Result<Option<String>>) -> Verdict {
    match outcome {
        Ok(None) => Verdict::pass(law, 1),
        Ok(Some(w)) => Verdict::fail(law, 1, w),
        Err(e) => Verdict::fail(law, 1, e.to_string()),
    }
}
