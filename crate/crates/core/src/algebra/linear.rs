//! Sparse integer linear systems solved by fraction-free elimination.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// `Σ coef·x_var = rhs`, terms sorted by variable, no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Row {
    pub terms: Vec<(usize, BigInt)>,
    pub rhs: BigInt,
}

impl Row {
    /// Collects terms, merging repeated variables.
    pub fn new(mut terms: Vec<(usize, BigInt)>, rhs: BigInt) -> Self {
        terms.sort_by_key(|t| t.0);
        let mut merged: Vec<(usize, BigInt)> = Vec::with_capacity(terms.len());
        for (v, c) in terms {
            match merged.last_mut() {
                Some((lv, lc)) if *lv == v => *lc += c,
                _ => merged.push((v, c)),
            }
        }
        merged.retain(|t| !t.1.is_zero());
        let mut row = Row { terms: merged, rhs };
        row.normalize();
        row
    }

    pub fn is_trivial(&self) -> bool {
        self.terms.is_empty() && self.rhs.is_zero()
    }

    pub fn is_inconsistent(&self) -> bool {
        self.terms.is_empty() && !self.rhs.is_zero()
    }

    fn normalize(&mut self) {
        let mut g = self.rhs.abs();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if !g.is_zero() && !g.is_one() {
            for (_, c) in &mut self.terms {
                *c /= &g;
            }
            self.rhs /= &g;
        }
        if self.terms.first().is_some_and(|t| t.1.is_negative()) {
            for (_, c) in &mut self.terms {
                *c = -&*c;
            }
            self.rhs = -&self.rhs;
        }
    }

    fn coef(&self, v: usize) -> Option<&BigInt> {
        self.terms
            .binary_search_by_key(&v, |t| t.0)
            .ok()
            .map(|i| &self.terms[i].1)
    }

    /// Eliminates `v` from `self` using `pivot`, whose coefficient at `v` is nonzero.
    fn eliminate(&mut self, pivot: &Row, v: usize) {
        let Some(a) = self.coef(v).cloned() else {
            return;
        };
        let p = pivot.coef(v).expect("pivot contains its variable");
        let g = a.gcd(p);
        let (ms, mp) = (p / &g, &a / &g);
        let mut out = Vec::with_capacity(self.terms.len() + pivot.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < pivot.terms.len() {
            let vi = self.terms.get(i).map_or(usize::MAX, |t| t.0);
            let vj = pivot.terms.get(j).map_or(usize::MAX, |t| t.0);
            let (var, c) = if vi < vj {
                i += 1;
                (vi, &self.terms[i - 1].1 * &ms)
            } else if vj < vi {
                j += 1;
                (vj, -(&pivot.terms[j - 1].1 * &mp))
            } else {
                i += 1;
                j += 1;
                (
                    vi,
                    &self.terms[i - 1].1 * &ms - &pivot.terms[j - 1].1 * &mp,
                )
            };
            if !c.is_zero() {
                out.push((var, c));
            }
        }
        self.terms = out;
        self.rhs = &self.rhs * &ms - &pivot.rhs * &mp;
        self.normalize();
    }
}

/// Outcome of adding a row to an [`Echelon`].
#[derive(Debug, PartialEq, Eq)]
pub(crate) enum Insert {
    Redundant,
    Inconsistent,
    Added,
}

/// Row echelon form keyed by pivot variable; each pivot row only involves
/// variables greater than or equal to its pivot.
#[derive(Debug, Default, Clone)]
pub(crate) struct Echelon {
    rows: BTreeMap<usize, Row>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn reduce(&self, mut row: Row) -> Row {
        let mut cursor = 0;
        loop {
            let next = row
                .terms
                .iter()
                .map(|t| t.0)
                .find(|&v| v >= cursor && self.rows.contains_key(&v));
            let Some(v) = next else {
                return row;
            };
            row.eliminate(&self.rows[&v], v);
            cursor = v + 1;
        }
    }

    pub fn insert(&mut self, row: Row) -> Insert {
        let row = self.reduce(row);
        if row.is_trivial() {
            Insert::Redundant
        } else if row.is_inconsistent() {
            Insert::Inconsistent
        } else {
            self.rows.insert(row.terms[0].0, row);
            Insert::Added
        }
    }

    /// Back-substitutes so that pivot rows only involve free variables.
    pub fn reduce_fully(&mut self) {
        let pivots: Vec<usize> = self.rows.keys().rev().copied().collect();
        for p in pivots {
            let mut row = self.rows.remove(&p).expect("pivot row");
            let others: Vec<usize> = row
                .terms
                .iter()
                .skip(1)
                .map(|t| t.0)
                .filter(|v| self.rows.contains_key(v))
                .collect();
            for v in others {
                row.eliminate(&self.rows[&v], v);
            }
            self.rows.insert(p, row);
        }
    }

    pub fn rows(&self) -> impl Iterator<Item = &Row> {
        self.rows.values()
    }

}
