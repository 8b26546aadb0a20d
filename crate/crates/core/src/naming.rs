//! Class names of the form `s8`, `s'8`, `s''8` (codimension with primes).
//!
//! For the Cayley plane and the Freudenthal variety the names follow the
//! usual diagrams and are loaded from a fixture keyed by orbit weight. Other
//! spaces use a generic rule: a lone class has no prime; two classes of the
//! same codimension get `''` and `'` in increasing weight order; `k ≥ 3`
//! classes get `k - 1` primes down to none.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weyl::{ClassId, Cosets};

/// One fixture entry: orbit weight (Dynkin labels) and its name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NameEntry {
    pub weight: Vec<i64>,
    pub name: String,
}

/// Fixture file contents.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NameFixture {
    pub space: String,
    pub names: Vec<NameEntry>,
}

/// Names of all classes of a space.
#[derive(Debug, Clone)]
pub struct ClassNames {
    names: Vec<String>,
    lookup: HashMap<String, ClassId>,
}

impl ClassNames {
    /// Generic naming rule.
    pub fn generic(cosets: &Cosets) -> Self {
        let mut names = vec![String::new(); cosets.len()];
        for codim in 0..=cosets.dimension() {
            let mut ids: Vec<ClassId> = cosets.with_codim(codim).collect();
            ids.sort_by(|&a, &b| cosets.get(a).orbit_weight.cmp(&cosets.get(b).orbit_weight));
            let k = ids.len();
            for (r, &id) in ids.iter().enumerate() {
                let primes = match k {
                    1 => 0,
                    2 => 2 - r,
                    _ => k - 1 - r,
                };
                names[id] = format_name(primes, codim);
            }
        }
        Self::from_names(names)
    }

    /// Names from a fixture; every class must be named exactly once and the
    /// codimension in each name must match.
    pub fn from_fixture(cosets: &Cosets, fixture: &NameFixture) -> Result<Self> {
        let mut names = vec![String::new(); cosets.len()];
        for e in &fixture.names {
            let id = cosets.find(&e.weight).ok_or_else(|| {
                Error::Data(format!("{}: weight {:?} is not a class", fixture.space, e.weight))
            })?;
            let (_, codim) = parse_name(&e.name)
                .ok_or_else(|| Error::Data(format!("bad class name `{}`", e.name)))?;
            if codim != cosets.codim(id) || !names[id].is_empty() {
                return Err(Error::Data(format!(
                    "{}: name `{}` does not fit class {id}",
                    fixture.space, e.name
                )));
            }
            names[id] = e.name.clone();
        }
        if names.iter().any(String::is_empty) {
            return Err(Error::Data(format!("{}: fixture misses classes", fixture.space)));
        }
        let out = Self::from_names(names);
        if out.lookup.len() != cosets.len() {
            return Err(Error::Data(format!("{}: duplicate names", fixture.space)));
        }
        Ok(out)
    }

    fn from_names(names: Vec<String>) -> Self {
        let lookup = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        ClassNames { names, lookup }
    }

    pub fn name(&self, id: ClassId) -> &str {
        &self.names[id]
    }

    pub fn all(&self) -> &[String] {
        &self.names
    }

    pub fn get(&self, name: &str) -> Option<ClassId> {
        self.lookup.get(name).copied()
    }
}

/// `s` followed by primes and the codimension.
pub fn format_name(primes: usize, codim: usize) -> String {
    format!("s{}{codim}", "'".repeat(primes))
}

/// Splits `s''12` into `(2, 12)`.
pub fn parse_name(name: &str) -> Option<(usize, usize)> {
    let rest = name.strip_prefix('s')?;
    let primes = rest.chars().take_while(|&c| c == '\'').count();
    let digits = &rest[primes..];
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    Some((primes, digits.parse().ok()?))
}
