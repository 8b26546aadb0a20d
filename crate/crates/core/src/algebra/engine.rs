//! Completion of structure constants from partial knowledge.
//!
//! Unknowns are the symmetric invariants `I_d(a, b, c)`. Known values come
//! from the unit, the (quantum) Chevalley formula, seeds, vanishing and
//! higher duality. Associativity with `H` gives linear equations; once a
//! row `σ_s * ·` is known, associativity with `σ_s` gives more. Equations
//! are solved level by level in `d`, first by propagating single-unknown
//! equations, then by exact elimination over the remaining ones.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::linear::{Echelon, Insert, Row};
use super::table::{Entry, GwKey, Provenance, Rule, StructureTable};
use crate::error::{Error, Result};
use crate::space::Space;
use crate::weyl::ClassId;

#[derive(Debug, Clone, Copy)]
enum Origin {
    Hyperplane {
        x: ClassId,
        y: ClassId,
        d: usize,
        z: ClassId,
    },
    Pivot {
        x: ClassId,
        s: ClassId,
        y: ClassId,
        d: usize,
        z: ClassId,
    },
}

impl Origin {
    fn describe(&self, sp: &Space) -> String {
        let at = |d: usize, z: ClassId| match d {
            0 => sp.name(z).to_string(),
            1 => format!("q·{}", sp.name(z)),
            _ => format!("q^{d}·{}", sp.name(z)),
        };
        match *self {
            Origin::Hyperplane { x, y, d, z } => format!(
                "({x} * {y}) * H = {x} * ({y} * H), coefficient of {}",
                at(d, z),
                x = sp.name(x),
                y = sp.name(y)
            ),
            Origin::Pivot { x, s, y, d, z } => format!(
                "({x} * {s}) * {y} = {x} * ({s} * {y}), coefficient of {}",
                at(d, z),
                x = sp.name(x),
                s = sp.name(s),
                y = sp.name(y)
            ),
        }
    }
}

struct Equation {
    row: Row,
    origin: Origin,
}

pub(crate) struct Engine<'a> {
    sp: &'a Space,
    max_q: usize,
    quantum: bool,
    keys: Vec<GwKey>,
    index: HashMap<GwKey, usize>,
    values: Vec<Option<Entry>>,
    uppers: Vec<Vec<(ClassId, i64)>>,
    covers: Vec<Vec<(ClassId, i64)>>,
    partners: Vec<Option<ClassId>>,
    partner_of: Vec<Vec<ClassId>>,
    pivots_done: HashSet<(usize, ClassId, ClassId, ClassId)>,
}

impl<'a> Engine<'a> {
    pub fn new(sp: &'a Space, max_q: usize, quantum: bool) -> Self {
        let n = sp.len();
        let mut keys = Vec::new();
        for d in 0..=max_q {
            let total = sp.dimension() + d * sp.c1();
            for a in 0..n {
                for b in a..n {
                    let ab = sp.codim(a) + sp.codim(b);
                    let Some(k) = total.checked_sub(ab) else {
                        continue;
                    };
                    if k > sp.dimension() {
                        continue;
                    }
                    keys.extend(
                        sp.cosets()
                            .with_codim(k)
                            .filter(|&c| c >= b)
                            .map(|c| GwKey::new(d, a, b, c)),
                    );
                }
            }
        }
        let index = keys.iter().enumerate().map(|(i, k)| (*k, i)).collect();
        let covers: Vec<Vec<(ClassId, i64)>> = (0..n).map(|w| sp.chevalley(w)).collect();
        let mut uppers = vec![Vec::new(); n];
        for (w, cs) in covers.iter().enumerate() {
            for &(z, m) in cs {
                uppers[z].push((w, m));
            }
        }
        let partners: Vec<Option<ClassId>> = (0..n)
            .map(|w| if quantum { sp.quantum_partner(w) } else { None })
            .collect();
        let mut partner_of = vec![Vec::new(); n];
        for (w, p) in partners.iter().enumerate() {
            if let Some(p) = p {
                partner_of[*p].push(w);
            }
        }
        let values = vec![None; keys.len()];
        Engine {
            sp,
            max_q,
            quantum,
            keys,
            index,
            values,
            uppers,
            covers,
            partners,
            partner_of,
            pivots_done: HashSet::new(),
        }
    }

    fn var(&self, d: usize, a: ClassId, b: ClassId, c: ClassId) -> Option<usize> {
        if d > self.max_q {
            return None;
        }
        self.index.get(&GwKey::new(d, a, b, c)).copied()
    }

    /// Variable of the coefficient of `q^d σ_x` in `σ_u * σ_v`.
    fn coef(&self, d: usize, u: ClassId, v: ClassId, x: ClassId) -> Option<usize> {
        self.var(d, u, v, self.sp.dual(x))
    }

    fn known(&self, var: usize) -> Option<&BigInt> {
        self.values[var].as_ref().map(|e| &e.value)
    }

    fn assign(
        &mut self,
        var: usize,
        value: BigInt,
        rule: Rule,
        detail: impl FnOnce() -> String,
    ) -> Result<bool> {
        if let Some(e) = &self.values[var] {
            if e.value == value {
                return Ok(false);
            }
            let [a, b, c] = self.keys[var].classes;
            return Err(Error::Contradiction(format!(
                "{}: I_{}({}, {}, {}) is {} by {} ({}) but {} by {} ({})",
                self.sp.label(),
                self.keys[var].d,
                self.sp.name(a),
                self.sp.name(b),
                self.sp.name(c),
                e.value,
                e.provenance.rule,
                e.provenance.detail,
                value,
                rule,
                detail()
            )));
        }
        self.values[var] = Some(Entry {
            value,
            provenance: Provenance {
                rule,
                detail: detail(),
            },
        });
        Ok(true)
    }

    /// `[X]` is the unit: `I_d([X], b, c) = δ_{d,0} δ_{c, b^∨}`.
    pub fn apply_unit(&mut self) -> Result<()> {
        let top = self.sp.fundamental();
        for var in 0..self.keys.len() {
            let k = self.keys[var];
            let Some(pos) = k.classes.iter().position(|&c| c == top) else {
                continue;
            };
            let [b, c] = others(k.classes, pos);
            let v = i64::from(k.d == 0 && c == self.sp.dual(b));
            self.assign(var, v.into(), Rule::Unit, || "[X] is the unit".into())?;
        }
        Ok(())
    }

    /// Products with `H`, including the `q`-term in the quantum case.
    pub fn apply_chevalley(&mut self) -> Result<()> {
        let Some(h) = self.sp.hyperplane() else {
            return Ok(());
        };
        for var in 0..self.keys.len() {
            let k = self.keys[var];
            let Some(pos) = k.classes.iter().position(|&c| c == h) else {
                continue;
            };
            let [b, c] = others(k.classes, pos);
            let target = self.sp.dual(c);
            let v: i64 = match k.d {
                0 => self.covers[b]
                    .iter()
                    .find(|t| t.0 == target)
                    .map_or(0, |t| t.1),
                1 if self.quantum => i64::from(self.partners[b] == Some(target)),
                _ => 0,
            };
            let sp = self.sp;
            self.assign(var, v.into(), Rule::Chevalley, || {
                format!("{} * H", sp.name(b))
            })?;
        }
        Ok(())
    }

    /// A classical product `σ_u · σ_v` given in full.
    pub fn apply_product(
        &mut self,
        u: ClassId,
        v: ClassId,
        value: &super::GradedElement,
        source: &str,
    ) -> Result<()> {
        let total = self.sp.codim(u) + self.sp.codim(v);
        if total > self.sp.dimension() {
            return Ok(());
        }
        let xs: Vec<ClassId> = self.sp.cosets().with_codim(total).collect();
        for x in xs {
            let var = self.coef(0, u, v, x).expect("classical key exists");
            self.assign(var, value.coefficient(0, x), Rule::Seed, || {
                source.to_string()
            })?;
        }
        Ok(())
    }

    /// Copies the classical slice of a completed table.
    pub fn apply_classical(&mut self, table: &StructureTable<'_>) -> Result<()> {
        for var in 0..self.keys.len() {
            let k = self.keys[var];
            if k.d != 0 {
                continue;
            }
            let [a, b, c] = k.classes;
            let v = table.invariant(0, a, b, c).ok_or_else(|| {
                Error::Partial("the classical table is incomplete".into())
            })?;
            self.assign(var, v, Rule::Classical, || "classical product".into())?;
        }
        Ok(())
    }

    /// `I_d(a, b, c) = 0` unless all three quivers lie in `Q_{Y_d^*}`.
    pub fn apply_vanishing(&mut self) -> Result<()> {
        for var in 0..self.keys.len() {
            let k = self.keys[var];
            if k.d == 0 {
                continue;
            }
            let g = self.sp.geometry(k.d)?;
            let outside = k
                .classes
                .iter()
                .find(|&&c| !self.sp.ideal(c).is_subset(g.y_star_set()));
            if let Some(&c) = outside {
                let sp = self.sp;
                let d = k.d;
                self.assign(var, BigInt::zero(), Rule::Vanishing, || {
                    format!("Q_{} is not contained in Q of Y_{d}^*", sp.name(c))
                })?;
            }
        }
        Ok(())
    }

    /// `I_d([Y_d^*], b, c) = δ_{c, b_{q^d}}`.
    pub fn apply_higher_duality(&mut self) -> Result<()> {
        for d in 1..=self.max_q {
            let g = self.sp.geometry(d)?;
            let ystar = g.y_star;
            for var in 0..self.keys.len() {
                let k = self.keys[var];
                if k.d != d {
                    continue;
                }
                let Some(pos) = k.classes.iter().position(|&c| c == ystar) else {
                    continue;
                };
                let [b, c] = others(k.classes, pos);
                let dual_b = self.sp.higher_dual(d, b)?;
                let sp = self.sp;
                self.assign(var, i64::from(dual_b == Some(c)).into(), Rule::Duality, || {
                    format!("degree-{d} duality with {}", sp.name(ystar))
                })?;
            }
        }
        Ok(())
    }

    /// `Σ c·x = rhs` with known variables moved to the right.
    fn row(&self, terms: Vec<(Option<usize>, BigInt)>, mut rhs: BigInt) -> Row {
        let mut unknown = Vec::with_capacity(terms.len());
        for (var, c) in terms {
            let Some(var) = var else { continue };
            match self.known(var) {
                Some(v) => rhs -= c * v,
                None => unknown.push((var, c)),
            }
        }
        Row::new(unknown, rhs)
    }

    /// `(σ_x * σ_y) * H = σ_x * (σ_y * H)` at `q^d σ_z`.
    fn hyperplane_equation(&self, x: ClassId, y: ClassId, d: usize, z: ClassId) -> Equation {
        let mut t: Vec<(Option<usize>, BigInt)> = Vec::new();
        for &(w, m) in &self.uppers[z] {
            t.push((self.coef(d, x, y, w), m.into()));
        }
        if self.quantum && d >= 1 {
            for &w in &self.partner_of[z] {
                t.push((self.coef(d - 1, x, y, w), 1.into()));
            }
        }
        for &(y2, m) in &self.covers[y] {
            t.push((self.coef(d, x, y2, z), (-m).into()));
        }
        if let (true, Some(p)) = (d >= 1, self.partners[y]) {
            t.push((self.coef(d - 1, x, p, z), (-1).into()));
        }
        Equation {
            row: self.row(t, BigInt::zero()),
            origin: Origin::Hyperplane { x, y, d, z },
        }
    }

    fn codim_at(&self, total: usize, d: usize) -> Option<usize> {
        let k = total.checked_sub(d * self.sp.c1())?;
        (k <= self.sp.dimension()).then_some(k)
    }

    fn hyperplane_equations(&self, d: usize) -> Vec<Equation> {
        let n = self.sp.len();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                let total = self.sp.codim(x) + self.sp.codim(y) + 1;
                let Some(k) = self.codim_at(total, d) else {
                    continue;
                };
                for z in self.sp.cosets().with_codim(k) {
                    let eq = self.hyperplane_equation(x, y, d, z);
                    if !eq.row.is_trivial() {
                        out.push(eq);
                    }
                }
            }
        }
        out
    }

    /// Nonzero terms `(d, w, c)` of `σ_a * σ_b` up to `q^d`, if all known.
    fn known_product(&self, a: ClassId, b: ClassId, d: usize) -> Option<Vec<(usize, ClassId, BigInt)>> {
        let total = self.sp.codim(a) + self.sp.codim(b);
        let mut out = Vec::new();
        for e in 0..=d {
            let Some(k) = self.codim_at(total, e) else {
                continue;
            };
            for w in self.sp.cosets().with_codim(k) {
                let var = self.coef(e, a, b, w)?;
                let c = self.known(var)?;
                if !c.is_zero() {
                    out.push((e, w, c.clone()));
                }
            }
        }
        Some(out)
    }

    /// Associativity with every class whose relevant products are known.
    fn pivot_equations(&mut self, d: usize) -> Result<Vec<Equation>> {
        let n = self.sp.len();
        let (top, h) = (self.sp.fundamental(), self.sp.hyperplane());
        let mut pivots: Vec<ClassId> = (0..n).filter(|&s| s != top && Some(s) != h).collect();
        pivots.sort_by_key(|&s| (self.sp.codim(s), s));
        let mut out = Vec::new();
        let mut fresh = Vec::new();
        for s in pivots {
            let row: Vec<Option<Vec<(usize, ClassId, BigInt)>>> =
                (0..n).map(|x| self.known_product(x, s, d)).collect();
            for x in 0..n {
                let Some(xs) = &row[x] else { continue };
                for y in x..n {
                    let Some(sy) = &row[y] else { continue };
                    if self.pivots_done.contains(&(d, s, x, y)) {
                        continue;
                    }
                    fresh.push((d, s, x, y));
                    let total = self.sp.codim(x) + self.sp.codim(s) + self.sp.codim(y);
                    let Some(k) = self.codim_at(total, d) else {
                        continue;
                    };
                    for z in self.sp.cosets().with_codim(k) {
                        let mut t: Vec<(Option<usize>, BigInt)> = Vec::new();
                        for (e, w, c) in xs {
                            t.push((self.coef(d - e, *w, y, z), c.clone()));
                        }
                        for (e, w, c) in sy {
                            t.push((self.coef(d - e, x, *w, z), -c));
                        }
                        let eq = Equation {
                            row: self.row(t, BigInt::zero()),
                            origin: Origin::Pivot { x, s, y, d, z },
                        };
                        if eq.row.is_inconsistent() {
                            return Err(self.contradiction(&eq));
                        }
                        if !eq.row.is_trivial() {
                            out.push(eq);
                        }
                    }
                }
            }
        }
        self.pivots_done.extend(fresh);
        Ok(out)
    }

    fn contradiction(&self, eq: &Equation) -> Error {
        Error::Contradiction(format!(
            "{}: associativity fails: {}",
            self.sp.label(),
            eq.origin.describe(self.sp)
        ))
    }

    /// Repeatedly solves single-unknown equations. Returns whether anything
    /// was assigned.
    fn propagate(&mut self, eqs: &mut Vec<Equation>) -> Result<bool> {
        let mut any = false;
        loop {
            let mut changed = false;
            let mut keep = Vec::with_capacity(eqs.len());
            for mut eq in std::mem::take(eqs) {
                if eq.row.terms.iter().any(|t| self.known(t.0).is_some()) {
                    let terms = eq.row.terms.iter().map(|(v, c)| (Some(*v), c.clone())).collect();
                    eq.row = self.row(terms, eq.row.rhs.clone());
                }
                match eq.row.terms.len() {
                    0 if eq.row.rhs.is_zero() => {}
                    0 => return Err(self.contradiction(&eq)),
                    1 => {
                        let (var, a) = eq.row.terms[0].clone();
                        let (q, r) = eq.row.rhs.div_rem(&a);
                        if !r.is_zero() {
                            return Err(self.contradiction(&eq));
                        }
                        let sp = self.sp;
                        let origin = eq.origin;
                        changed |= self.assign(var, q, Rule::Associativity, || origin.describe(sp))?;
                    }
                    _ => keep.push(eq),
                }
            }
            *eqs = keep;
            any |= changed;
            if !changed {
                return Ok(any);
            }
        }
    }

    /// Exact elimination over all pending equations, plus the
    /// nonnegativity rule for quantum invariants.
    fn eliminate(&mut self, eqs: &[Equation]) -> Result<bool> {
        let mut ech = Echelon::new();
        for eq in eqs {
            if ech.insert(eq.row.clone()) == Insert::Inconsistent {
                return Err(self.contradiction(eq));
            }
        }
        ech.reduce_fully();
        let n_eq = eqs.len();
        let mut assigned = Vec::new();
        for row in ech.rows() {
            if let [(var, a)] = row.terms.as_slice() {
                let (q, r) = row.rhs.div_rem(a);
                if !r.is_zero() {
                    return Err(Error::Contradiction(format!(
                        "{}: non-integral structure constant forced by associativity",
                        self.sp.label()
                    )));
                }
                assigned.push((*var, q, Rule::Associativity));
                continue;
            }
            if !self.quantum {
                continue;
            }
            // All unknowns are nonnegative here.
            let pos = row.terms.iter().all(|t| t.1.is_positive());
            let neg = row.terms.iter().all(|t| t.1.is_negative());
            if !(pos || neg) {
                continue;
            }
            let rhs = if pos { row.rhs.clone() } else { -&row.rhs };
            if rhs.is_negative() {
                return Err(Error::Contradiction(format!(
                    "{}: associativity forces a negative invariant",
                    self.sp.label()
                )));
            }
            for (var, a) in &row.terms {
                if a.abs() > rhs {
                    assigned.push((*var, BigInt::zero(), Rule::NonnegativityForced));
                }
            }
        }
        let mut any = false;
        for (var, v, rule) in assigned {
            any |= self.assign(var, v, rule, || {
                format!("elimination over {n_eq} associativity equations")
            })?;
        }
        Ok(any)
    }

    fn level_done(&self, d: usize) -> bool {
        self.keys
            .iter()
            .zip(&self.values)
            .all(|(k, v)| k.d != d || v.is_some())
    }

    /// Solves for all invariants of degree `d`.
    pub fn solve_level(&mut self, d: usize) -> Result<()> {
        let mut eqs = self.hyperplane_equations(d);
        loop {
            self.propagate(&mut eqs)?;
            if self.level_done(d) {
                break;
            }
            if self.eliminate(&eqs)? {
                continue;
            }
            let more = self.pivot_equations(d)?;
            if more.is_empty() {
                break;
            }
            eqs.extend(more);
        }
        // Remaining equations are consistency checks on known values.
        self.propagate(&mut eqs)?;
        Ok(())
    }

    pub fn finish(self) -> StructureTable<'a> {
        let mut values = HashMap::new();
        let mut unknown = Vec::new();
        for (k, v) in self.keys.into_iter().zip(self.values) {
            match v {
                Some(e) => {
                    values.insert(k, e);
                }
                None => unknown.push(k),
            }
        }
        StructureTable::new(self.sp, self.max_q, values, unknown)
    }
}

fn others(c: [ClassId; 3], pos: usize) -> [ClassId; 2] {
    match pos {
        0 => [c[1], c[2]],
        1 => [c[0], c[2]],
        _ => [c[0], c[1]],
    }
}
