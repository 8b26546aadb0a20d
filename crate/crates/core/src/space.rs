//! A (co)minuscule space with its classes, quivers and curve geometry.

use std::fmt;

use crate::data;
use crate::error::{Error, Result};
use crate::naming::ClassNames;
use crate::quiver::{DegreeGeometry, SchubertQuiver, VertexSet};
use crate::root_system::{MarkedSpace, RootSystem};
use crate::weyl::{ClassId, Cosets};

/// Everything combinatorial about `X = G/P`, computed once.
#[derive(Debug, Clone)]
pub struct Space {
    marked: MarkedSpace,
    cosets: Cosets,
    quiver: SchubertQuiver,
    geometry: Vec<DegreeGeometry>,
    duals: Vec<ClassId>,
    names: ClassNames,
}

impl Space {
    /// Builds all data and runs the structural cross-checks: word duality
    /// against quiver duality, the Chevalley formula from Hasse edges against
    /// peak removal, and the position of each `T_{d-1}`.
    pub fn new(marked: MarkedSpace) -> Result<Self> {
        let rs = marked.root_system();
        let rd = rs.data();
        let iota = rs.weyl_involution();
        let cosets = Cosets::enumerate(&marked);
        if cosets.dimension() != marked.dimension() {
            return Err(Error::Internal(format!(
                "ℓ(w_X) = {} but dim X = {}",
                cosets.dimension(),
                marked.dimension()
            )));
        }
        let quiver = SchubertQuiver::build(rd, iota, marked.node(), &marked.omega(), &cosets)?;
        let duals: Vec<ClassId> = (0..cosets.len())
            .map(|w| cosets.poincare_dual(iota, w))
            .collect();
        for (w, &dw) in duals.iter().enumerate() {
            if quiver.quiver_dual(w) != dw {
                return Err(Error::Internal(format!("quiver dual differs from word dual at {w}")));
            }
            let mut a: Vec<ClassId> = cosets.lower_covers(w).map(|(v, _)| v).collect();
            let mut b = quiver.peak_removals(w);
            a.sort_unstable();
            b.sort_unstable();
            if a != b {
                return Err(Error::Internal(format!("Hasse covers differ from peaks at {w}")));
            }
        }
        let geometry = (0..=marked.d_max())
            .map(|d| DegreeGeometry::build(rd, iota, &quiver, &cosets, marked.index_c1(), d))
            .collect::<Result<Vec<_>>>()?;
        let qx = quiver.quiver();
        for d in 1..=marked.d_max() {
            let v = qx.position(iota[marked.node()], d).expect("vertex exists");
            if geometry[d - 1].t_set() != qx.below(v) {
                return Err(Error::Internal(format!(
                    "T_{} is not the set under (ια, {d})",
                    d - 1
                )));
            }
        }
        let names = match data::name_fixture(&marked)? {
            Some(f) => ClassNames::from_fixture(&cosets, &f)?,
            None => ClassNames::generic(&cosets),
        };
        Ok(Space {
            marked,
            cosets,
            quiver,
            geometry,
            duals,
            names,
        })
    }

    /// Parses `E6/P1`-style identifiers.
    pub fn parse(s: &str) -> Result<Self> {
        Self::new(MarkedSpace::parse(s)?)
    }

    pub fn marked(&self) -> &MarkedSpace {
        &self.marked
    }

    pub fn root_system(&self) -> &RootSystem {
        self.marked.root_system()
    }

    pub fn cosets(&self) -> &Cosets {
        &self.cosets
    }

    pub fn schubert_quiver(&self) -> &SchubertQuiver {
        &self.quiver
    }

    pub fn label(&self) -> String {
        self.marked.label()
    }

    /// Number of Schubert classes.
    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    pub fn dimension(&self) -> usize {
        self.marked.dimension()
    }

    pub fn c1(&self) -> usize {
        self.marked.index_c1()
    }

    pub fn d_max(&self) -> usize {
        self.marked.d_max()
    }

    pub fn codim(&self, w: ClassId) -> usize {
        self.cosets.codim(w)
    }

    /// The class of a point.
    pub fn point(&self) -> ClassId {
        self.cosets.identity()
    }

    /// The fundamental class `[X]`.
    pub fn fundamental(&self) -> ClassId {
        self.cosets.longest_element()
    }

    /// The hyperplane class; `None` only for a point.
    pub fn hyperplane(&self) -> Option<ClassId> {
        self.cosets.hyperplane()
    }

    /// Poincaré dual class.
    pub fn dual(&self, w: ClassId) -> ClassId {
        self.duals[w]
    }

    pub fn ideal(&self, w: ClassId) -> &VertexSet {
        self.quiver.ideal(w)
    }

    /// Degree-`d` geometry, `0 ≤ d ≤ d_max`.
    pub fn geometry(&self, d: usize) -> Result<&DegreeGeometry> {
        self.geometry.get(d).ok_or(Error::DegreeOutOfRange {
            d,
            max: self.d_max(),
        })
    }

    /// Classical Chevalley formula `σ_w · H = Σ c_v σ_v` over lower covers.
    pub fn chevalley(&self, w: ClassId) -> Vec<(ClassId, i64)> {
        let mut v: Vec<(ClassId, i64)> = self.cosets.lower_covers(w).collect();
        v.sort_unstable();
        v
    }

    /// The class `i_X(w_q)` carrying the `q`-term of `σ_w * H`, if any.
    pub fn quantum_partner(&self, w: ClassId) -> Option<ClassId> {
        let g = self.geometry.get(1)?;
        let wq = g.partner(self.ideal(w))?;
        let id = self.quiver.class_of(&wq).expect("partner is an ideal");
        Some(self.dual(id))
    }

    /// The 1-dual `w_q` itself (as opposed to its Poincaré dual).
    pub fn one_dual(&self, w: ClassId) -> Option<ClassId> {
        let g = self.geometry.get(1)?;
        g.partner(self.ideal(w))
            .map(|s| self.quiver.class_of(&s).expect("partner is an ideal"))
    }

    /// `v ↦ v_{q^d}`, Poincaré duality inside `T_d`.
    pub fn higher_dual(&self, d: usize, v: ClassId) -> Result<Option<ClassId>> {
        let g = self.geometry(d)?;
        Ok(g.higher_dual(self.ideal(v))
            .map(|s| self.quiver.class_of(&s).expect("higher dual is an ideal")))
    }

    /// Occurrences of the marked letter in a reduced word of `u`.
    pub fn delta(&self, u: ClassId) -> usize {
        self.quiver.delta(u)
    }

    /// Whether `X(u) ⊆ X(v)`, via containment of quivers.
    pub fn contained(&self, u: ClassId, v: ClassId) -> bool {
        self.quiver.contained(u, v)
    }

    /// The conditions for `q^d` to be able to appear in `σ_u * σ_v`:
    /// `Q_u, Q_v ⊆ Q_{Y_d^*}` and `i_X(Q_ū) ⊆ Q_v`.
    pub fn pair_condition(&self, u: ClassId, v: ClassId, d: usize) -> bool {
        let Some(g) = self.geometry.get(d) else {
            return false;
        };
        let (qu, qv) = (self.ideal(u), self.ideal(v));
        if !qu.is_subset(g.y_star_set()) || !qv.is_subset(g.y_star_set()) {
            return false;
        }
        g.t_dual_of_part(qu).is_subset(qv)
    }

    /// Smallest `d` satisfying [`Self::pair_condition`].
    pub fn min_q_power(&self, u: ClassId, v: ClassId) -> usize {
        (0..=self.d_max())
            .find(|&d| self.pair_condition(u, v, d))
            .expect("the condition holds for d = d_max")
    }

    pub fn names(&self) -> &ClassNames {
        &self.names
    }

    pub fn name(&self, w: ClassId) -> &str {
        self.names.name(w)
    }

    /// Resolves a class name or one of the aliases `H`, `pt`, `top`, `X`.
    pub fn resolve(&self, name: &str) -> Result<ClassId> {
        let found = match name {
            "H" | "h" => self.hyperplane(),
            "pt" => Some(self.point()),
            "top" | "X" | "1" => Some(self.fundamental()),
            other => self.names.get(other),
        };
        found.ok_or_else(|| Error::UnknownClass {
            space: self.label(),
            name: name.to_string(),
            valid: (0..self.len())
                .rev()
                .map(|w| self.name(w))
                .collect::<Vec<_>>()
                .join(", "),
        })
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.label(), self.marked.family())
    }
}
