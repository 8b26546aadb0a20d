//! Finitely supported integer combinations of `q^d σ_w`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::naming::parse_name;
use crate::space::Space;
use crate::weyl::ClassId;

/// An element of `ℤ[q] ⊗ A^*(X)` in the Schubert basis. Classical elements
/// only have `q^0` terms. Zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct GradedElement {
    terms: BTreeMap<(usize, ClassId), BigInt>,
}

impl GradedElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `σ_w`.
    pub fn class(w: ClassId) -> Self {
        Self::q_class(0, w)
    }

    /// `q^d σ_w`.
    pub fn q_class(d: usize, w: ClassId) -> Self {
        let mut e = Self::zero();
        e.add_term(d, w, BigInt::one());
        e
    }

    pub fn add_term(&mut self, d: usize, w: ClassId, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((d, w)).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(d, w));
        }
    }

    /// `self += factor · other`.
    pub fn add_scaled(&mut self, other: &GradedElement, factor: &BigInt) {
        for (&(d, w), c) in &other.terms {
            self.add_term(d, w, c * factor);
        }
    }

    pub fn coefficient(&self, d: usize, w: ClassId) -> BigInt {
        self.terms.get(&(d, w)).cloned().unwrap_or_default()
    }

    /// Terms as `(q power, class, coefficient)`, ordered by `q` power then class.
    pub fn terms(&self) -> impl Iterator<Item = (usize, ClassId, &BigInt)> {
        self.terms.iter().map(|(&(d, w), c)| (d, w, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scaled(&self, factor: &BigInt) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, factor);
        out
    }

    /// Multiplies by `q^k`.
    pub fn shift_q(&self, k: usize) -> Self {
        GradedElement {
            terms: self
                .terms
                .iter()
                .map(|(&(d, w), c)| ((d + k, w), c.clone()))
                .collect(),
        }
    }

    /// The `q^d` slice, as a classical element.
    pub fn q_part(&self, d: usize) -> Self {
        GradedElement {
            terms: self
                .terms
                .iter()
                .filter(|(&(e, _), _)| e == d)
                .map(|(&(_, w), c)| ((0, w), c.clone()))
                .collect(),
        }
    }

    pub fn min_q_power(&self) -> Option<usize> {
        self.terms.keys().map(|k| k.0).min()
    }

    pub fn max_q_power(&self) -> Option<usize> {
        self.terms.keys().map(|k| k.0).max()
    }

    pub fn is_classical(&self) -> bool {
        self.terms.keys().all(|k| k.0 == 0)
    }

    /// Common degree `codim(w) + d·c₁` of all terms; `None` if zero or mixed.
    pub fn degree(&self, space: &Space) -> Option<usize> {
        let mut it = self
            .terms
            .keys()
            .map(|&(d, w)| space.codim(w) + d * space.c1());
        let first = it.next()?;
        it.all(|g| g == first).then_some(first)
    }

    pub fn is_homogeneous(&self, space: &Space) -> bool {
        self.is_zero() || self.degree(space).is_some()
    }

    /// Renders as `s8 + s'8 + s''8`, `q^2·s0`, `2·s'9 - s9`.
    pub fn render(&self, space: &Space) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms: Vec<(usize, ClassId, &BigInt)> = self.terms().collect();
        terms.sort_by_key(|&(d, w, _)| {
            let primes = parse_name(space.name(w)).map_or(usize::MAX, |p| p.0);
            (d, space.codim(w), primes, w)
        });
        let mut out = String::new();
        for (i, (d, w, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let a = c.abs();
            if !a.is_one() {
                let _ = write!(out, "{a}·");
            }
            match d {
                0 => {}
                1 => out.push_str("q·"),
                _ => {
                    let _ = write!(out, "q^{d}·");
                }
            }
            out.push_str(space.name(w));
        }
        out
    }

    /// `[{"class": .., "q": .., "coef": ..}]` with coefficients as strings
    /// when they do not fit in an `i64`.
    pub fn to_json(&self, space: &Space) -> Value {
        Value::Array(
            self.terms()
                .map(|(d, w, c)| {
                    json!({
                        "class": space.name(w),
                        "q": d,
                        "coef": bigint_json(c),
                    })
                })
                .collect(),
        )
    }
}

pub(crate) fn bigint_json(c: &BigInt) -> Value {
    match i64::try_from(c) {
        Ok(v) => json!(v),
        Err(_) => json!(c.to_string()),
    }
}
