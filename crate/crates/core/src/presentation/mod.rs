//! Graded quotients `ℤ[x₁, …, x_k]/(relations)`: per-degree lattices,
//! ranks and torsion, and comparison with a multiplication table.

pub mod intmat;
pub mod poly;

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{GradedElement, StructureTable};
use crate::data;
use crate::error::{Error, Result};
use crate::space::Space;
use crate::weyl::ClassId;

pub use intmat::{Matrix, Smith};
pub use poly::{monomials_of_degree, Monomial, Poly};

/// A generator and the Schubert class it maps to (`None` for `q`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub degree: usize,
    #[serde(default)]
    pub class: Option<String>,
}

/// Generators with degrees and homogeneous integer relations.
#[derive(Debug, Clone)]
pub struct GradedPresentation {
    generators: Vec<Generator>,
    relations: Vec<Poly>,
}

impl GradedPresentation {
    pub fn new(generators: Vec<Generator>, relations: &[&str]) -> Result<Self> {
        if generators.iter().any(|g| g.degree == 0) {
            return Err(Error::Data("generators must have positive degree".into()));
        }
        let vars: Vec<String> = generators.iter().map(|g| g.name.clone()).collect();
        let weights: Vec<usize> = generators.iter().map(|g| g.degree).collect();
        let relations = relations
            .iter()
            .map(|r| {
                let p = Poly::parse(r, &vars)?;
                if p.is_zero() || !p.is_homogeneous(&weights) {
                    return Err(Error::Data(format!("relation `{r}` is not homogeneous")));
                }
                Ok(p)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GradedPresentation {
            generators,
            relations,
        })
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn relations(&self) -> &[Poly] {
        &self.relations
    }

    pub fn vars(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.name.clone()).collect()
    }

    pub fn weights(&self) -> Vec<usize> {
        self.generators.iter().map(|g| g.degree).collect()
    }

    pub fn parse(&self, text: &str) -> Result<Poly> {
        Poly::parse(text, &self.vars())
    }

    pub fn relation_degree(&self, i: usize) -> usize {
        self.relations[i]
            .degree(&self.weights())
            .expect("relations are homogeneous and nonzero")
    }

    /// Relations times all monomials of complementary degree, in the
    /// coordinates of the degree-`d` monomials.
    pub fn relation_rows(&self, d: usize) -> (Vec<Monomial>, Matrix) {
        let weights = self.weights();
        let monos = monomials_of_degree(&weights, d);
        let pos: HashMap<&Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut rows = Vec::new();
        for (i, r) in self.relations.iter().enumerate() {
            let rd = self.relation_degree(i);
            if rd > d {
                continue;
            }
            for m in monomials_of_degree(&weights, d - rd) {
                let mut row = vec![BigInt::zero(); monos.len()];
                for (rm, c) in r.terms() {
                    let prod: Monomial = rm.iter().zip(&m).map(|(a, b)| a + b).collect();
                    row[pos[&prod]] += c;
                }
                rows.push(row);
            }
        }
        (monos, rows)
    }

    /// Rank and torsion of the degree-`d` part of the quotient.
    pub fn degree_slice(&self, d: usize) -> Result<DegreeSlice> {
        let (monomials, rows) = self.relation_rows(d);
        let basis = intmat::row_lattice_basis(&rows);
        let smith = intmat::smith(&basis)?;
        let rank = monomials.len() - smith.rank();
        let torsion = smith.torsion();
        let unimodular = (basis.len() == monomials.len() && !basis.is_empty())
            .then(|| intmat::determinant(&basis));
        Ok(DegreeSlice {
            degree: d,
            free: torsion.is_empty(),
            monomials,
            relation_rows: rows,
            relation_basis: basis,
            rank,
            torsion,
            determinant: unimodular,
        })
    }

    /// Slices of degrees `0..=up_to`.
    pub fn rank_sequence(&self, up_to: usize) -> Result<Vec<DegreeSlice>> {
        (0..=up_to).map(|d| self.degree_slice(d)).collect()
    }
}

/// Degree-`d` part of a presentation.
#[derive(Debug, Clone)]
pub struct DegreeSlice {
    pub degree: usize,
    pub monomials: Vec<Monomial>,
    /// Each relation times each monomial of complementary degree.
    pub relation_rows: Matrix,
    /// Hermite basis of the relation lattice.
    pub relation_basis: Matrix,
    pub rank: usize,
    /// Smith invariants greater than one.
    pub torsion: Vec<BigInt>,
    pub free: bool,
    /// Determinant of the relation basis when it is square.
    pub determinant: Option<BigInt>,
}

/// Classical and quantum presentations shipped for a space, with known
/// Giambelli formulas.
#[derive(Debug, Clone)]
pub struct PresentationData {
    pub classical: GradedPresentation,
    pub quantum: GradedPresentation,
    pub giambelli: Vec<(ClassId, Poly)>,
}

#[derive(Deserialize)]
struct PresentationFile {
    space: String,
    generators: Vec<Generator>,
    relations: Vec<String>,
    quantum_relations: Vec<String>,
    #[serde(default)]
    giambelli: Vec<GiambelliLine>,
}

#[derive(Deserialize)]
struct GiambelliLine {
    class: String,
    polynomial: String,
}

/// Parses a presentation file for `space`.
pub fn parse_presentation(space: &Space, text: &str) -> Result<PresentationData> {
    let f: PresentationFile = serde_json::from_str(text)?;
    let label = space.label();
    if f.space != label && !(label == "E6/P6" && f.space == "E6/P1") {
        return Err(Error::Data(format!("presentation is for {}, not {label}", f.space)));
    }
    for g in &f.generators {
        let class = g
            .class
            .as_deref()
            .ok_or_else(|| Error::Data(format!("generator {} has no class", g.name)))?;
        let w = space.resolve(class)?;
        if space.codim(w) != g.degree {
            return Err(Error::Data(format!(
                "generator {} has degree {} but {class} has codimension {}",
                g.name,
                g.degree,
                space.codim(w)
            )));
        }
    }
    let rel: Vec<&str> = f.relations.iter().map(String::as_str).collect();
    let classical = GradedPresentation::new(f.generators.clone(), &rel)?;
    let mut qgens = f.generators;
    qgens.push(Generator {
        name: "q".into(),
        degree: space.c1(),
        class: None,
    });
    let qrel: Vec<&str> = f.quantum_relations.iter().map(String::as_str).collect();
    let quantum = GradedPresentation::new(qgens, &qrel)?;
    let giambelli = f
        .giambelli
        .iter()
        .map(|g| Ok((space.resolve(&g.class)?, classical.parse(&g.polynomial)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(PresentationData {
        classical,
        quantum,
        giambelli,
    })
}

/// The shipped presentation of a space, if any.
pub fn load_presentation(space: &Space) -> Result<Option<PresentationData>> {
    data::for_space("presentations", space.marked())?
        .map(|t| parse_presentation(space, &t))
        .transpose()
}

/// Evaluates polynomials in a presentation's generators through a table,
/// caching monomials. A generator without a class is `q`.
pub struct Evaluator<'t, 'a> {
    table: &'t StructureTable<'a>,
    gens: Vec<Option<ClassId>>,
    cache: HashMap<Monomial, GradedElement>,
}

impl<'t, 'a> Evaluator<'t, 'a> {
    pub fn new(table: &'t StructureTable<'a>, pres: &GradedPresentation) -> Result<Self> {
        let sp = table.space();
        let gens = pres
            .generators()
            .iter()
            .map(|g| g.class.as_deref().map(|c| sp.resolve(c)).transpose())
            .collect::<Result<Vec<_>>>()?;
        Ok(Evaluator {
            table,
            gens,
            cache: HashMap::new(),
        })
    }

    pub fn monomial(&mut self, m: &[u32]) -> Result<GradedElement> {
        if let Some(e) = self.cache.get(m) {
            return Ok(e.clone());
        }
        let value = match m.iter().position(|&e| e > 0) {
            None => GradedElement::class(self.table.space().fundamental()),
            Some(i) => {
                let mut rest = m.to_vec();
                rest[i] -= 1;
                let base = self.monomial(&rest)?;
                match self.gens[i] {
                    Some(w) => self.table.multiply(&base, &GradedElement::class(w))?,
                    None => base.shift_q(1),
                }
            }
        };
        self.cache.insert(m.to_vec(), value.clone());
        Ok(value)
    }

    pub fn eval(&mut self, p: &Poly) -> Result<GradedElement> {
        let mut out = GradedElement::zero();
        for (m, c) in p.terms() {
            let v = self.monomial(m)?;
            out.add_scaled(&v, c);
        }
        Ok(out)
    }
}

/// Outcome of one named check.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

/// Rank of the free part of `QH` (or `A^*` when `c1 = 0`) in degree `k`.
fn expected_rank(space: &Space, k: usize, quantum: bool) -> usize {
    let betti = space.cosets().betti();
    let mut total = 0;
    let mut j = 0;
    while j * space.c1() <= k {
        if let Some(b) = betti.get(k - j * space.c1()) {
            total += b;
        }
        if !quantum {
            break;
        }
        j += 1;
    }
    total
}

/// Basis of the degree-`k` part: `(q power, class)`.
fn graded_basis(space: &Space, k: usize, quantum: bool) -> Vec<(usize, ClassId)> {
    let mut out = Vec::new();
    let mut j = 0;
    while j * space.c1() <= k {
        let c = k - j * space.c1();
        if c <= space.dimension() {
            out.extend(space.cosets().with_codim(c).map(|w| (j, w)));
        }
        if !quantum {
            break;
        }
        j += 1;
    }
    out
}

/// Checks that the generators' images satisfy the relations, span every
/// degree over ℤ, and that the quotient has the right rank in each degree
/// up to `dim X + 1`.
pub fn verify_isomorphism(
    pres: &GradedPresentation,
    table: &StructureTable<'_>,
    giambelli: &[(ClassId, Poly)],
) -> Result<Vec<Check>> {
    let sp = table.space();
    let quantum = table.is_quantum();
    let mut ev = Evaluator::new(table, pres)?;
    let mut checks = Vec::new();
    for r in pres.relations() {
        let v = ev.eval(r)?;
        checks.push(Check::new(
            format!("relation {r} = 0"),
            v.is_zero(),
            format!("evaluates to {}", v.render(sp)),
        ));
    }
    let weights = pres.weights();
    let top = sp.dimension() + 1;
    let mut spans = Vec::new();
    let mut ranks = Vec::new();
    for k in 0..=top {
        let basis = graded_basis(sp, k, quantum);
        if !basis.is_empty() {
            let pos: HashMap<(usize, ClassId), usize> =
                basis.iter().enumerate().map(|(i, b)| (*b, i)).collect();
            let mut rows = Vec::new();
            for m in monomials_of_degree(&weights, k) {
                let v = ev.monomial(&m)?;
                let mut row = vec![BigInt::zero(); basis.len()];
                for (d, w, c) in v.terms() {
                    let i = pos.get(&(d, w)).ok_or_else(|| {
                        Error::Internal("monomial image is not homogeneous".into())
                    })?;
                    row[*i] = c.clone();
                }
                rows.push(row);
            }
            let s = intmat::smith(&rows)?;
            let ok = s.rank() == basis.len() && s.diagonal.iter().take(basis.len()).all(One::is_one);
            if !ok {
                spans.push(k);
            }
        }
        let slice = pres.degree_slice(k)?;
        let want = if k <= sp.dimension() || quantum {
            expected_rank(sp, k, quantum)
        } else {
            0
        };
        if slice.rank != want || !slice.free {
            ranks.push(format!("degree {k}: rank {} (expected {want}), torsion {:?}", slice.rank, slice.torsion));
        }
    }
    checks.push(Check::new(
        "surjective in every degree",
        spans.is_empty(),
        if spans.is_empty() {
            format!("monomials span ℤ-bases in degrees 0..={top}")
        } else {
            format!("not spanning in degrees {spans:?}")
        },
    ));
    checks.push(Check::new(
        "free of the expected rank in every degree",
        ranks.is_empty(),
        if ranks.is_empty() {
            format!("degrees 0..={top} match")
        } else {
            ranks.join("; ")
        },
    ));
    let mut bad = Vec::new();
    for (w, p) in giambelli {
        let v = ev.eval(p)?;
        if v != GradedElement::class(*w) {
            bad.push(format!("{} ↦ {}", sp.name(*w), v.render(sp)));
        }
    }
    checks.push(Check::new(
        "Giambelli formulas",
        bad.is_empty(),
        if bad.is_empty() {
            format!("{} formulas reproduce their classes", giambelli.len())
        } else {
            bad.join("; ")
        },
    ));
    Ok(checks)
}

/// [`verify_isomorphism`] for the quantum presentation, plus the check
/// that it only deforms the classical relations of top degree by `q`.
pub fn verify_quantum_presentation(
    data: &PresentationData,
    qtable: &StructureTable<'_>,
) -> Result<Vec<Check>> {
    let mut checks = verify_isomorphism(&data.quantum, qtable, &data.giambelli)?;
    let qvars = data.quantum.vars();
    let nq = qvars.len();
    let lift = |p: &Poly| {
        let mut out = Poly::zero(&qvars);
        for (m, c) in p.terms() {
            let mut mm = m.clone();
            mm.push(0);
            out.add_term(mm, c.clone());
        }
        out
    };
    let c = &data.classical;
    let mut detail = Vec::new();
    let mut ok = c.relations().len() == data.quantum.relations().len();
    let top = (0..c.relations().len()).map(|i| c.relation_degree(i)).max().unwrap_or(0);
    for (i, (r, qr)) in c.relations().iter().zip(data.quantum.relations()).enumerate() {
        let diff = qr.sub(&lift(r));
        let only_q = diff.terms().all(|(m, _)| m[..nq - 1].iter().all(|&e| e == 0));
        if c.relation_degree(i) < top {
            ok &= diff.is_zero();
        } else {
            ok &= only_q && !diff.is_zero();
            detail.push(format!("{r} deformed by {diff}"));
        }
    }
    checks.push(Check::new(
        "only the top-degree relation is deformed",
        ok,
        detail.join("; "),
    ));
    Ok(checks)
}
