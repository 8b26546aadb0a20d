//! Structure constants stored as symmetric three-point invariants.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;
use serde_json::{json, Value};

use super::element::{bigint_json, GradedElement};
use crate::error::{Error, Result};
use crate::space::Space;
use crate::weyl::ClassId;

/// The invariant `I_d(σ_a, σ_b, σ_c)`, classes sorted. The coefficient of
/// `q^d σ_x` in `σ_u * σ_v` is `I_d(σ_u, σ_v, σ_{x^∨})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GwKey {
    pub d: usize,
    pub classes: [ClassId; 3],
}

impl GwKey {
    pub fn new(d: usize, a: ClassId, b: ClassId, c: ClassId) -> Self {
        let mut classes = [a, b, c];
        classes.sort_unstable();
        GwKey { d, classes }
    }
}

/// How a structure constant was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    Unit,
    Chevalley,
    Seed,
    Classical,
    Vanishing,
    Duality,
    Associativity,
    NonnegativityForced,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::Unit => "unit",
            Rule::Chevalley => "chevalley",
            Rule::Seed => "seed",
            Rule::Classical => "classical",
            Rule::Vanishing => "vanishing",
            Rule::Duality => "duality",
            Rule::Associativity => "associativity",
            Rule::NonnegativityForced => "nonnegativity-forced",
        })
    }
}

/// Rule plus the instance that fixed the value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub rule: Rule,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub(crate) struct Entry {
    pub value: BigInt,
    pub provenance: Provenance,
}

/// Completed (or partially completed) multiplication table of a space.
#[derive(Debug, Clone)]
pub struct StructureTable<'a> {
    space: &'a Space,
    max_q: usize,
    values: HashMap<GwKey, Entry>,
    unknown: Vec<GwKey>,
}

impl<'a> StructureTable<'a> {
    pub(crate) fn new(
        space: &'a Space,
        max_q: usize,
        values: HashMap<GwKey, Entry>,
        unknown: Vec<GwKey>,
    ) -> Self {
        StructureTable {
            space,
            max_q,
            values,
            unknown,
        }
    }

    pub fn space(&self) -> &'a Space {
        self.space
    }

    /// Highest power of `q` stored; 0 for a classical table.
    pub fn max_q(&self) -> usize {
        self.max_q
    }

    pub fn is_quantum(&self) -> bool {
        self.max_q > 0
    }

    pub fn is_complete(&self) -> bool {
        self.unknown.is_empty()
    }

    /// Keys that could not be determined.
    pub fn unknown_keys(&self) -> &[GwKey] {
        &self.unknown
    }

    /// Pairs `(u, v)`, `u ≤ v`, whose product involves an undetermined constant.
    pub fn underdetermined_pairs(&self) -> Vec<(ClassId, ClassId)> {
        let mut out = BTreeSet::new();
        for k in &self.unknown {
            let [a, b, c] = k.classes;
            out.insert((a, b));
            out.insert((a, c));
            out.insert((b, c));
        }
        out.into_iter().collect()
    }

    /// `I_d(a, b, c)`: `Some(0)` when the codimensions do not add up,
    /// `None` when undetermined.
    pub fn invariant(&self, d: usize, a: ClassId, b: ClassId, c: ClassId) -> Option<BigInt> {
        let sp = self.space;
        if d > self.max_q
            || sp.codim(a) + sp.codim(b) + sp.codim(c) != sp.dimension() + d * sp.c1()
        {
            return Some(BigInt::zero());
        }
        self.values
            .get(&GwKey::new(d, a, b, c))
            .map(|e| e.value.clone())
    }

    pub fn provenance(&self, d: usize, a: ClassId, b: ClassId, c: ClassId) -> Option<&Provenance> {
        self.values
            .get(&GwKey::new(d, a, b, c))
            .map(|e| &e.provenance)
    }

    /// Targets `(d, x)` that can occur in `σ_u * σ_v`.
    pub fn targets(&self, u: ClassId, v: ClassId) -> Vec<(usize, ClassId)> {
        let sp = self.space;
        let total = sp.codim(u) + sp.codim(v);
        let mut out = Vec::new();
        for d in 0..=self.max_q {
            let Some(k) = total.checked_sub(d * sp.c1()) else {
                break;
            };
            if k <= sp.dimension() {
                out.extend(sp.cosets().with_codim(k).map(|x| (d, x)));
            }
        }
        out
    }

    /// `σ_u * σ_v`.
    pub fn product(&self, u: ClassId, v: ClassId) -> Result<GradedElement> {
        let mut out = GradedElement::zero();
        for (d, x) in self.targets(u, v) {
            let c = self
                .invariant(d, u, v, self.space.dual(x))
                .ok_or_else(|| self.partial(u, v))?;
            out.add_term(d, x, c);
        }
        Ok(out)
    }

    /// Terms of `σ_u * σ_v` with their provenance.
    pub fn product_with_provenance(
        &self,
        u: ClassId,
        v: ClassId,
    ) -> Result<Vec<(usize, ClassId, BigInt, Provenance)>> {
        let mut out = Vec::new();
        for (d, x) in self.targets(u, v) {
            let key = GwKey::new(d, u, v, self.space.dual(x));
            let e = self.values.get(&key).ok_or_else(|| self.partial(u, v))?;
            if !e.value.is_zero() {
                out.push((d, x, e.value.clone(), e.provenance.clone()));
            }
        }
        Ok(out)
    }

    fn partial(&self, u: ClassId, v: ClassId) -> Error {
        Error::Partial(format!(
            "{}: the product {} * {} is not determined",
            self.space.label(),
            self.space.name(u),
            self.space.name(v)
        ))
    }

    /// Bilinear extension of [`Self::product`].
    pub fn multiply(&self, a: &GradedElement, b: &GradedElement) -> Result<GradedElement> {
        let mut out = GradedElement::zero();
        for (da, u, ca) in a.terms() {
            for (db, v, cb) in b.terms() {
                let p = self.product(u, v)?;
                out.add_scaled(&p.shift_q(da + db), &(ca * cb));
            }
        }
        Ok(out)
    }

    /// `a^k`, with `a^0 = [X]`.
    pub fn power(&self, a: &GradedElement, k: usize) -> Result<GradedElement> {
        let mut out = GradedElement::class(self.space.fundamental());
        for _ in 0..k {
            out = self.multiply(&out, a)?;
        }
        Ok(out)
    }

    /// `{"space", "basis", "products": [{"u", "v", "terms"}]}` over `u ≤ v`;
    /// with `provenance` each term also carries its rule and instance.
    pub fn to_json(&self, provenance: bool) -> Value {
        let sp = self.space;
        let mut products = Vec::new();
        for u in 0..sp.len() {
            for v in u..sp.len() {
                let terms: Value = match self.product_with_provenance(u, v) {
                    Ok(ts) => ts
                        .iter()
                        .map(|(d, x, c, p)| {
                            let mut t = json!({
                                "class": sp.name(*x),
                                "q": d,
                                "coef": bigint_json(c),
                            });
                            if provenance {
                                t["provenance"] = json!(p.rule);
                                t["derivation"] = json!(p.detail);
                            }
                            t
                        })
                        .collect(),
                    Err(_) => Value::Null,
                };
                products.push(json!({
                    "u": sp.name(u),
                    "v": sp.name(v),
                    "terms": terms,
                }));
            }
        }
        json!({
            "schema_version": 1,
            "space": sp.label(),
            "quantum": self.is_quantum(),
            "complete": self.is_complete(),
            "basis": sp.names().all(),
            "products": products,
        })
    }
}
