//! The Chow ring in the Schubert basis: Chevalley products, degrees, and
//! completion of the multiplication table from a few known products.

mod element;
mod engine;
mod giambelli;
pub(crate) mod linear;
mod table;

use num_bigint::BigInt;
use serde::Deserialize;

pub use element::GradedElement;
pub use giambelli::{giambelli, giambelli_expand};
pub use table::{GwKey, Provenance, Rule, StructureTable};

pub(crate) use engine::Engine;

use crate::data;
use crate::error::{Error, Result};
use crate::space::Space;
use crate::weyl::ClassId;

/// Classical product `element · H`; `q`-terms of the input are shifted along.
pub fn chevalley_multiply(space: &Space, element: &GradedElement) -> GradedElement {
    let mut out = GradedElement::zero();
    for (d, w, c) in element.terms() {
        for (v, m) in space.chevalley(w) {
            out.add_term(d, v, c * BigInt::from(m));
        }
    }
    out
}

/// `H^k` in the classical ring.
pub fn hyperplane_power(space: &Space, k: usize) -> GradedElement {
    let mut e = GradedElement::class(space.fundamental());
    for _ in 0..k {
        e = chevalley_multiply(space, &e);
    }
    e
}

/// `∫ H^{dim X(w)} · σ_w`, by iterating the Chevalley formula on `σ_w`.
pub fn schubert_degree(space: &Space, w: ClassId) -> BigInt {
    let mut e = GradedElement::class(w);
    for _ in 0..space.dimension() - space.codim(w) {
        e = chevalley_multiply(space, &e);
    }
    e.coefficient(0, space.point())
}

/// A known classical product `σ_u · σ_v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Seed {
    pub u: ClassId,
    pub v: ClassId,
    pub value: GradedElement,
    pub citation: String,
}

#[derive(Deserialize)]
struct SeedFile {
    space: String,
    source: String,
    products: Vec<SeedLine>,
}

#[derive(Deserialize)]
struct SeedLine {
    u: String,
    v: String,
    terms: Vec<SeedTerm>,
    citation: String,
}

#[derive(Deserialize)]
struct SeedTerm {
    coef: i64,
    class: String,
    #[serde(default)]
    h: usize,
}

/// Parses a seed file; a term `{"coef": c, "class": w, "h": k}` stands for
/// `c · σ_w · H^k`.
pub fn parse_seeds(space: &Space, text: &str) -> Result<Vec<Seed>> {
    let file: SeedFile = serde_json::from_str(text)?;
    let label = space.label();
    if file.space != label && !(label == "E6/P6" && file.space == "E6/P1") {
        return Err(Error::Data(format!(
            "seed file is for {}, not {label}",
            file.space
        )));
    }
    let mut out = Vec::new();
    for line in file.products {
        let (u, v) = (space.resolve(&line.u)?, space.resolve(&line.v)?);
        let mut value = GradedElement::zero();
        for t in &line.terms {
            let mut e = GradedElement::class(space.resolve(&t.class)?);
            for _ in 0..t.h {
                e = chevalley_multiply(space, &e);
            }
            value.add_scaled(&e, &BigInt::from(t.coef));
        }
        let degree = space.codim(u) + space.codim(v);
        if !value.is_classical() || value.degree(space).is_some_and(|g| g != degree) {
            return Err(Error::Data(format!(
                "seed {} * {} is not homogeneous of degree {degree}",
                line.u, line.v
            )));
        }
        out.push(Seed {
            u,
            v,
            value,
            citation: format!("{}; {}", line.citation, file.source),
        });
    }
    Ok(out)
}

/// Seeds shipped for a space (empty when none are needed or known).
pub fn load_seeds(space: &Space) -> Result<Vec<Seed>> {
    match data::for_space("seeds", space.marked())? {
        Some(text) => parse_seeds(space, &text),
        None => Ok(Vec::new()),
    }
}

/// Completes the classical table from the unit, the Chevalley formula,
/// the seeds and associativity. Undetermined entries are left open and
/// can be listed from the returned table; inconsistent input is an error.
pub fn complete_table<'a>(space: &'a Space, seeds: &[Seed]) -> Result<StructureTable<'a>> {
    let mut engine = Engine::new(space, 0, false);
    engine.apply_unit()?;
    engine.apply_chevalley()?;
    for s in seeds {
        engine.apply_product(s.u, s.v, &s.value, &s.citation)?;
    }
    engine.solve_level(0)?;
    Ok(engine.finish())
}

/// [`complete_table`] with the shipped seeds.
pub fn classical_table(space: &Space) -> Result<StructureTable<'_>> {
    complete_table(space, &load_seeds(space)?)
}
