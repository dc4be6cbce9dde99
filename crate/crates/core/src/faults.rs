//! Deliberately broken carriers.
//!
//! Each type here violates exactly one law the checkers look for, so that the
//! checkers can be shown to catch it.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use crate::bisemigroup::AdditiveCarrier;
use crate::error::{Error, Result};
use crate::scalar::SemiringCarrier;

/// String concatenation as "addition": associative, not commutative.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Concat(pub String);

impl AdditiveCarrier for Concat {
    fn combine(&self, other: &Self) -> Self {
        Concat(format!("{}{}", self.0, other.0))
    }
    fn identity_like(&self) -> Self {
        Concat(String::new())
    }
    fn to_json(&self) -> Value {
        Value::String(self.0.clone())
    }
    fn from_json(v: &Value) -> Result<Self> {
        v.as_str()
            .map(|s| Concat(s.to_string()))
            .ok_or_else(|| Error::Parse("expected a string".into()))
    }
    fn render(&self) -> String {
        format!("{:?}", self.0)
    }
}

/// `i8` with saturating addition: commutative, not associative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Saturating(pub i8);

impl AdditiveCarrier for Saturating {
    fn combine(&self, other: &Self) -> Self {
        Saturating(self.0.saturating_add(other.0))
    }
    fn identity_like(&self) -> Self {
        Saturating(0)
    }
    fn to_json(&self) -> Value {
        Value::from(self.0)
    }
    fn from_json(v: &Value) -> Result<Self> {
        v.as_i64()
            .and_then(|x| i8::try_from(x).ok())
            .map(Saturating)
            .ok_or_else(|| Error::Parse("expected an i8".into()))
    }
    fn render(&self) -> String {
        self.0.to_string()
    }
}

/// Integers modulo 6: a commutative ring with zero divisors (2 * 3 = 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZMod6(pub u8);

impl SemiringCarrier for ZMod6 {
    fn carrier_name() -> String {
        "z6".into()
    }
    fn zero() -> Self {
        ZMod6(0)
    }
    fn one() -> Self {
        ZMod6(1)
    }
    fn add(&self, other: &Self) -> Self {
        ZMod6((self.0 + other.0) % 6)
    }
    fn mul(&self, other: &Self) -> Self {
        ZMod6((self.0 * other.0) % 6)
    }
    fn inverse(&self) -> Option<Self> {
        (1..6).map(ZMod6).find(|c| self.mul(c).0 == 1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn equivalent(&self, other: &Self) -> bool {
        self == other
    }
    fn sample(rng: &mut ChaCha8Rng) -> Self {
        ZMod6(rng.gen_range(0..6))
    }
    fn describe(&self) -> String {
        self.0.to_string()
    }
}

/// Multiplication that returns its left operand: associative, not commutative.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FirstWins(pub i64);

impl SemiringCarrier for FirstWins {
    fn carrier_name() -> String {
        "first-wins".into()
    }
    fn zero() -> Self {
        FirstWins(0)
    }
    fn one() -> Self {
        FirstWins(1)
    }
    fn add(&self, other: &Self) -> Self {
        FirstWins(self.0 + other.0)
    }
    fn mul(&self, _other: &Self) -> Self {
        *self
    }
    fn inverse(&self) -> Option<Self> {
        None
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn equivalent(&self, other: &Self) -> bool {
        self == other
    }
    fn sample(rng: &mut ChaCha8Rng) -> Self {
        FirstWins(rng.gen_range(-9..=9))
    }
    fn describe(&self) -> String {
        self.0.to_string()
    }
}

impl SemiringCarrier for Saturating {
    fn carrier_name() -> String {
        "saturating".into()
    }
    fn zero() -> Self {
        Saturating(0)
    }
    fn one() -> Self {
        Saturating(1)
    }
    fn add(&self, other: &Self) -> Self {
        self.combine(other)
    }
    fn mul(&self, other: &Self) -> Self {
        Saturating(self.0.saturating_mul(other.0))
    }
    fn inverse(&self) -> Option<Self> {
        matches!(self.0, 1 | -1).then_some(*self)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn equivalent(&self, other: &Self) -> bool {
        self == other
    }
    fn sample(rng: &mut ChaCha8Rng) -> Self {
        Saturating(rng.gen_range(-128..=127))
    }
    fn describe(&self) -> String {
        self.0.to_string()
    }
}
