//! Small quantum products: quantum Chevalley formula, completion of the
//! quantum table, and the identities it must satisfy.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{classical_table, Engine, GradedElement, StructureTable};
use crate::error::{Error, Result};
use crate::presentation::{Check, Evaluator, PresentationData};
use crate::root_system::RootData;
use crate::space::Space;
use crate::weyl::{ClassId, Cosets};

/// `σ_w * H`: the classical covers plus `q·σ_p` when `w` has a partner `p`.
pub fn quantum_chevalley(space: &Space, w: ClassId) -> GradedElement {
    let mut out = GradedElement::zero();
    for (v, m) in space.chevalley(w) {
        out.add_term(0, v, BigInt::from(m));
    }
    if let Some(p) = space.quantum_partner(w) {
        out.add_term(1, p, BigInt::one());
    }
    out
}

/// `element * H`.
pub fn quantum_chevalley_multiply(space: &Space, element: &GradedElement) -> GradedElement {
    let mut out = GradedElement::zero();
    for (d, w, c) in element.terms() {
        out.add_scaled(&quantum_chevalley(space, w).shift_q(d), c);
    }
    out
}

/// Completes the quantum table for `q`-degrees `1..=d_max` over a complete
/// classical table.
pub fn complete_quantum_table<'a>(
    space: &'a Space,
    classical: &StructureTable<'_>,
) -> Result<StructureTable<'a>> {
    if !classical.is_complete() {
        return Err(Error::Partial(format!(
            "{}: the classical table has {} undetermined pairs",
            space.label(),
            classical.underdetermined_pairs().len()
        )));
    }
    let dmax = space.d_max();
    let mut engine = Engine::new(space, dmax, true);
    engine.apply_classical(classical)?;
    engine.apply_unit()?;
    engine.apply_chevalley()?;
    engine.apply_vanishing()?;
    engine.apply_higher_duality()?;
    for d in 1..=dmax {
        engine.solve_level(d)?;
    }
    Ok(engine.finish())
}

/// Classical completion from the shipped seeds, then quantum completion.
pub fn quantum_table(space: &Space) -> Result<StructureTable<'_>> {
    let classical = classical_table(space)?;
    complete_quantum_table(space, &classical)
}

/// The variety of lines through a point: a homogeneous space of the Levi
/// factor, embedded by the weight of the tangent space.
#[derive(Debug, Clone)]
pub struct LinesThroughPoint {
    /// Nodes of the Levi diagram, in the ambient numbering.
    pub nodes: Vec<usize>,
    /// Highest weight in the Levi's Dynkin labels.
    pub weight: Vec<i64>,
    pub dimension: usize,
    pub degree: BigInt,
}

/// Computes [`LinesThroughPoint`] from the Dynkin diagram alone.
pub fn lines_through_point(space: &Space) -> LinesThroughPoint {
    let rs = space.root_system();
    let m = space.marked().node();
    let nodes: Vec<usize> = (0..rs.rank()).filter(|&j| j != m).collect();
    let weight: Vec<i64> = nodes.iter().map(|&j| -rs.cartan()[j][m]).collect();
    if nodes.is_empty() {
        return LinesThroughPoint {
            nodes,
            weight,
            dimension: 0,
            degree: BigInt::one(),
        };
    }
    let sub: RootData = rs.data().subsystem(&nodes);
    let cosets = Cosets::from_weight(&sub, &weight);
    LinesThroughPoint {
        dimension: cosets.dimension(),
        degree: cosets.schubert_degree(cosets.longest_element()),
        nodes,
        weight,
    }
}

/// `H^{*c_1} - H^{c_1}` and the degree it is expected to have.
#[derive(Debug, Clone)]
pub struct HyperplaneIdentity {
    pub power: usize,
    pub correction: GradedElement,
    pub q_coefficient: BigInt,
    pub expected: BigInt,
}

impl HyperplaneIdentity {
    /// The correction is `deg(F_o)·q` and nothing else.
    pub fn holds(&self) -> bool {
        let fundamental = self.correction.terms().all(|(d, _, _)| d == 1) && self.correction.len() == 1;
        fundamental && self.q_coefficient == self.expected
    }
}

/// Iterates the quantum Chevalley formula `c_1` times from `[X]`.
pub fn hyperplane_power_identity(space: &Space) -> HyperplaneIdentity {
    let power = space.c1();
    let top = space.fundamental();
    let mut quantum = GradedElement::class(top);
    let mut classical = GradedElement::class(top);
    for _ in 0..power {
        quantum = quantum_chevalley_multiply(space, &quantum);
        classical = crate::algebra::chevalley_multiply(space, &classical).q_part(0);
    }
    let mut correction = quantum.clone();
    correction.add_scaled(&classical, &BigInt::from(-1));
    HyperplaneIdentity {
        power,
        q_coefficient: quantum.coefficient(1, top),
        correction,
        expected: lines_through_point(space).degree,
    }
}

/// `[pt] * [pt]` next to the prediction `q^{d_max}·[Y_{d_max}]`.
pub fn dmax_identity(table: &StructureTable<'_>) -> Result<(GradedElement, GradedElement)> {
    let sp = table.space();
    let pt = sp.point();
    let got = table.product(pt, pt)?;
    let y = sp.geometry(sp.d_max())?.y;
    Ok((got, GradedElement::q_class(sp.d_max(), y)))
}

/// Pairs where the smallest `q`-power in `σ_u * σ_v` differs from the
/// combinatorial prediction.
#[derive(Debug, Clone, Serialize)]
pub struct PowerMismatch {
    pub u: String,
    pub v: String,
    pub predicted: usize,
    pub table: Option<usize>,
}

pub fn min_power_consistency(table: &StructureTable<'_>) -> Result<Vec<PowerMismatch>> {
    let sp = table.space();
    let mut out = Vec::new();
    for u in 0..sp.len() {
        for v in u..sp.len() {
            let p = table.product(u, v)?;
            let predicted = sp.min_q_power(u, v);
            let found = p.min_q_power();
            if found != Some(predicted) {
                out.push(PowerMismatch {
                    u: sp.name(u).to_string(),
                    v: sp.name(v).to_string(),
                    predicted,
                    table: found,
                });
            }
        }
    }
    Ok(out)
}

/// Checks `I_d([Y_d^*], v, w) = δ_{w, v_{q^d}}` on every `v` and `w`, and
/// that no class other than the dual of `v_{q^d}` appears at `q^d`.
pub fn higher_duality_check(table: &StructureTable<'_>) -> Result<Vec<Check>> {
    let sp = table.space();
    let mut out = Vec::new();
    for d in 1..=sp.d_max().min(table.max_q()) {
        let g = sp.geometry(d)?;
        let y = g.y_star;
        let mut bad = Vec::new();
        let mut domain = 0;
        for v in 0..sp.len() {
            let expected = match sp.higher_dual(d, v)? {
                Some(vq) => {
                    domain += 1;
                    GradedElement::class(sp.dual(vq))
                }
                None => GradedElement::zero(),
            };
            let got = table.product(y, v)?.q_part(d);
            if got != expected {
                bad.push(format!(
                    "{} * {}: q^{d}-part {} instead of {}",
                    sp.name(y),
                    sp.name(v),
                    got.render(sp),
                    expected.render(sp)
                ));
            }
        }
        out.push(Check::new(
            format!("degree-{d} duality with {}", sp.name(y)),
            bad.is_empty(),
            if bad.is_empty() {
                format!("{domain} classes in the domain, all other products free of q^{d}")
            } else {
                bad.join("; ")
            },
        ));
    }
    Ok(out)
}

/// Evaluates the shipped Giambelli formulas with the quantum product; each
/// must give its class with no `q`-terms.
pub fn giambelli_quantum_check(
    table: &StructureTable<'_>,
    data: &PresentationData,
) -> Result<Vec<Check>> {
    let sp = table.space();
    let mut ev = Evaluator::new(table, &data.classical)?;
    let mut out = Vec::new();
    for (w, p) in &data.giambelli {
        let v = ev.eval(p)?;
        out.push(Check::new(
            format!("{} = {p}", sp.name(*w)),
            v == GradedElement::class(*w),
            format!("quantum evaluation gives {}", v.render(sp)),
        ));
    }
    Ok(out)
}

/// The `q`-parts of `σ_u * σ_v` over all pairs with the given codimensions.
pub fn corrections(
    table: &StructureTable<'_>,
    codim_u: usize,
    codim_v: usize,
) -> Result<Vec<(ClassId, ClassId, GradedElement)>> {
    let sp = table.space();
    let mut out = Vec::new();
    for u in sp.cosets().with_codim(codim_u) {
        for v in sp.cosets().with_codim(codim_v) {
            if codim_u == codim_v && v < u {
                continue;
            }
            let p = table.product(u, v)?;
            let mut q = p.clone();
            q.add_scaled(&p.q_part(0), &BigInt::from(-1));
            if !q.is_zero() {
                out.push((u, v, q));
            }
        }
    }
    Ok(out)
}

/// Nonnegativity of every known invariant.
pub fn negative_entries(table: &StructureTable<'_>) -> Result<Vec<String>> {
    let sp = table.space();
    let mut out = Vec::new();
    for u in 0..sp.len() {
        for v in u..sp.len() {
            for (d, w, c) in table.product(u, v)?.terms() {
                if *c < BigInt::zero() {
                    out.push(format!("{} * {} at q^{d}·{}: {c}", sp.name(u), sp.name(v), sp.name(w)));
                }
            }
        }
    }
    Ok(out)
}
