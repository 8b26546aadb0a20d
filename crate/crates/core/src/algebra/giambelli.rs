//! Schubert classes as integer polynomials in the generators of a
//! presentation.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{GradedElement, StructureTable};
use crate::error::{Error, Result};
use crate::presentation::{intmat, monomials_of_degree, Evaluator, GradedPresentation, Poly};
use crate::weyl::ClassId;

/// A polynomial for every class, found from the Hermite form of the
/// monomial-to-class matrix in each degree. Fails when the monomials do not
/// span the classes of some degree over ℤ. Every formula is checked by
/// evaluating it back through the table.
pub fn giambelli(
    table: &StructureTable<'_>,
    pres: &GradedPresentation,
) -> Result<Vec<(ClassId, Poly)>> {
    let mut ev = Evaluator::new(table, pres)?;
    let mut out = Vec::new();
    for k in 0..=table.space().dimension() {
        out.extend(formulas_in_degree(&mut ev, table, pres, k)?);
    }
    Ok(out)
}

/// The Giambelli polynomial of a single class.
pub fn giambelli_expand(
    table: &StructureTable<'_>,
    pres: &GradedPresentation,
    w: ClassId,
) -> Result<Poly> {
    let mut ev = Evaluator::new(table, pres)?;
    let k = table.space().codim(w);
    let found = formulas_in_degree(&mut ev, table, pres, k)?;
    Ok(found.into_iter().find(|(v, _)| *v == w).expect("every class of the degree").1)
}

fn formulas_in_degree(
    ev: &mut Evaluator<'_, '_>,
    table: &StructureTable<'_>,
    pres: &GradedPresentation,
    k: usize,
) -> Result<Vec<(ClassId, Poly)>> {
    let sp = table.space();
    let vars = pres.vars();
    let classes: Vec<ClassId> = sp.cosets().with_codim(k).collect();
    let monos = monomials_of_degree(&pres.weights(), k);
    let mut rows = Vec::new();
    for m in &monos {
        let v = ev.monomial(m)?;
        if !v.is_classical() {
            return Err(Error::Data("presentation evaluates with q-terms".into()));
        }
        rows.push(classes.iter().map(|&w| v.coefficient(0, w)).collect::<Vec<_>>());
    }
    let (h, u) = intmat::hermite(&rows);
    let n = classes.len();
    let spans = h.len() >= n
        && (0..n).all(|i| (0..n).all(|j| h[i][j] == BigInt::from(u8::from(i == j))));
    if !spans {
        return Err(Error::Data(format!(
            "monomials of degree {k} do not span the classes over ℤ"
        )));
    }
    let mut out = Vec::new();
    for (i, &w) in classes.iter().enumerate() {
        let mut p = Poly::zero(&vars);
        for (m, c) in monos.iter().zip(&u[i]) {
            if !c.is_zero() {
                p.add_term(m.clone(), c.clone());
            }
        }
        if ev.eval(&p)? != GradedElement::class(w) {
            return Err(Error::Internal(format!(
                "Giambelli formula for {} does not evaluate back",
                sp.name(w)
            )));
        }
        out.push((w, p));
    }
    Ok(out)
}
