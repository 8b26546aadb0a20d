//! Quivers attached to degree-`d` rational curves.
//!
//! For `0 ≤ d ≤ d_max`, `Y_d` is the Schubert variety whose quiver is the set
//! of vertices under `(α, d_max + 1 - d)`, and `F_d = G/Q_d` parametrizes the
//! translates of `Y_d`. A reduced word of `w_{I_d} = w_X w_{Z_d}` is arranged
//! so that the vertices of `Q_X` outside `Q_{Y_d^*}` come first; what remains
//! is a reduced word of `w_{F_d}`, whose quiver contains `Q_{Y_d^*}` on top of
//! `Q_{Z_d}`. For `d = 1` this is the Fano variety of lines `F`.

use fixedbitset::FixedBitSet;

use super::{Quiver, SchubertQuiver, VertexSet};
use crate::error::{Error, Result};
use crate::root_system::{unit, RootData};
use crate::weyl::{is_reduced, reduce_word, ClassId, Cosets};

/// Combinatorial data of `Y_d`, `F_d`, `Z_d` and `T_d`.
#[derive(Debug, Clone)]
pub struct DegreeGeometry {
    pub d: usize,
    /// Class of `Y_d`.
    pub y: ClassId,
    /// Class of `Y_d^*`, the Poincaré dual of `Y_d`.
    pub y_star: ClassId,
    /// Class of `T_d`.
    pub t: ClassId,
    /// Nodes marking the parabolic of `F_d` (empty when `F_d` is a point).
    pub f_nodes: Vec<usize>,
    pub word_i: Vec<usize>,
    pub word_f: Vec<usize>,
    pub word_z: Vec<usize>,
    pub dim_y: usize,
    pub dim_f: usize,
    pub dim_z: usize,
    pub dim_t: usize,
    /// `c_1(Y_d)` computed on the Levi subsystem supporting `Y_d`.
    pub c1_y: usize,
    quiver_i: Quiver,
    quiver_f: Quiver,
    x_to_f: Vec<Option<usize>>,
    f_to_x: Vec<Option<usize>>,
    y_star_set: VertexSet,
    y_star_f: VertexSet,
    z_f: VertexSet,
    t_set: VertexSet,
}

impl DegreeGeometry {
    /// Builds and cross-checks the degree-`d` data.
    pub fn build(
        rd: &RootData,
        iota: &[usize],
        sq: &SchubertQuiver,
        cosets: &Cosets,
        c1: usize,
        d: usize,
    ) -> Result<Self> {
        let qx = sq.quiver();
        let alpha = sq.marked();
        let n = qx.len();
        let d_max = qx.multiplicity(alpha);
        if d > d_max {
            return Err(Error::DegreeOutOfRange { d, max: d_max });
        }
        let fail = |msg: String| Error::Internal(format!("degree {d}: {msg}"));

        let y_set = match d {
            0 => qx.empty_set(),
            _ => qx
                .below(qx.position(alpha, d_max + 1 - d).expect("vertex exists"))
                .clone(),
        };
        let y = sq
            .class_of(&y_set)
            .ok_or_else(|| fail("Y_d is not an ideal".into()))?;
        let y_star_set = qx.dual_ideal(&y_set);
        let y_star = sq
            .class_of(&y_star_set)
            .ok_or_else(|| fail("Y_d^* is not an ideal".into()))?;
        if d > 0 {
            let top = qx.position(iota[alpha], d).expect("vertex exists");
            let mut v = qx.empty_set();
            v.insert(top);
            if qx.complement(&qx.up_closure(&v)) != y_star_set {
                return Err(fail("Y_d^* is not the set of vertices not above (ια, d)".into()));
            }
        }
        let filter = qx.complement(&y_star_set);
        let dim_y = y_set.count_ones(..);

        let lambda = &cosets.get(y).orbit_weight;
        let f_nodes: Vec<usize> = (0..rd.rank()).filter(|&i| lambda[i] > 0).collect();
        let dim_f = rd
            .positive_roots()
            .iter()
            .filter(|r| f_nodes.iter().any(|&i| r[i] > 0))
            .count();

        let mut weight_i = vec![0i64; rd.rank()];
        weight_i[alpha] += 1;
        for &i in &f_nodes {
            weight_i[i] += 1;
        }
        let word_i_raw = rd.longest_word(&weight_i);
        let mut word = qx.source_word().to_vec();
        word.reverse();
        word.extend_from_slice(&word_i_raw);
        let word_z = reduce_word(rd, &word);
        if word_z.len() + n != word_i_raw.len() {
            return Err(fail(format!(
                "ℓ(w_X) + ℓ(w_Z) = {} + {} differs from ℓ(w_I) = {}",
                n,
                word_z.len(),
                word_i_raw.len()
            )));
        }

        let order: Vec<usize> = filter.ones().chain(y_star_set.ones()).collect();
        let word_x: Vec<usize> = order.iter().map(|&p| qx.source_word()[p]).collect();
        let lowest = rd.lowest_in_orbit(&unit(rd.rank(), alpha));
        if !is_reduced(rd, &word_x) || rd.apply_word(&word_x, &unit(rd.rank(), alpha)) != lowest {
            return Err(fail("reordered word is not a reduced word of w_X".into()));
        }
        for (k, &p) in order.iter().enumerate() {
            let (b, i) = qx.label(p);
            let rank = word_x[..=k].iter().filter(|&&x| x == b).count();
            if rank != i {
                return Err(fail("reordering changes vertex labels".into()));
            }
        }
        let mut word_i = word_x.clone();
        word_i.extend_from_slice(&word_z);
        if !is_reduced(rd, &word_i) {
            return Err(fail("w_X w_Z is not reduced".into()));
        }
        let word_f: Vec<usize> = word_x[filter.count_ones(..)..]
            .iter()
            .chain(&word_z)
            .copied()
            .collect();
        let mut weight_f = vec![0i64; rd.rank()];
        for &i in &f_nodes {
            weight_f[i] = 1;
        }
        if word_f.len() != dim_f
            || !is_reduced(rd, &word_f)
            || rd.apply_word(&word_f, &weight_f) != rd.lowest_in_orbit(&weight_f)
        {
            return Err(fail("word of F_d is not a reduced word of w_{F_d}".into()));
        }
        if n + d * c1 != dim_f + 3 * dim_y {
            return Err(fail(format!(
                "dim X + d·c1 = {} but dim F_d + 3 dim Y_d = {}",
                n + d * c1,
                dim_f + 3 * dim_y
            )));
        }

        let c1_y = if d == 0 {
            0
        } else {
            let mut support: Vec<usize> = qx.word_of(&y_set);
            support.sort_unstable();
            support.dedup();
            let sub = rd.subsystem(&support);
            let k = support.iter().position(|&b| b == alpha).expect("α in support");
            sub.index_at(k) as usize
        };
        if d > 0 && d * c1_y != 2 * dim_y {
            return Err(fail(format!("d·c1(Y_d) = {} ≠ 2 dim Y_d = {}", d * c1_y, 2 * dim_y)));
        }

        let quiver_i = Quiver::from_word(rd.cartan(), &word_i);
        let quiver_f = Quiver::from_word(rd.cartan(), &word_f)
            .with_involution(iota)
            .map_err(|e| fail(format!("F_d quiver is not symmetric: {e}")))?;
        let fl = word_f.len();
        let mut x_to_f = vec![None; n];
        let mut f_to_x = vec![None; fl];
        for (k, p) in y_star_set.ones().enumerate() {
            x_to_f[p] = Some(k);
            f_to_x[k] = Some(p);
        }
        let ny = y_star_set.count_ones(..);
        let mut y_star_f = FixedBitSet::with_capacity(fl);
        y_star_f.insert_range(..ny);
        let mut z_f = FixedBitSet::with_capacity(fl);
        z_f.insert_range(ny..);

        let mut t_f = quiver_f.flip(&y_star_f);
        t_f.intersect_with(&y_star_f);
        if quiver_f.flip(&t_f) != t_f {
            return Err(fail("T_d is not symmetric".into()));
        }
        let mut t_set = qx.empty_set();
        for k in t_f.ones() {
            t_set.insert(f_to_x[k].expect("T_d lies in Y_d^*"));
        }
        let t = sq
            .class_of(&t_set)
            .ok_or_else(|| fail("T_d is not an ideal".into()))?;
        let dim_t = t_set.count_ones(..);
        if dim_t + d * c1 != n + dim_y {
            return Err(fail(format!("dim T_d = {dim_t} violates dim X - d·c1 + dim Y_d")));
        }

        Ok(DegreeGeometry {
            d,
            y,
            y_star,
            t,
            f_nodes,
            word_i,
            word_f,
            dim_z: word_z.len(),
            word_z,
            dim_y,
            dim_f,
            dim_t,
            c1_y,
            quiver_i,
            quiver_f,
            x_to_f,
            f_to_x,
            y_star_set,
            y_star_f,
            z_f,
            t_set,
        })
    }

    /// `Q_{I_d}`: `Q_X` with `Q_{Z_d}` attached below.
    pub fn quiver_i(&self) -> &Quiver {
        &self.quiver_i
    }

    /// `Q_{F_d}` with its involution `i_{F_d}`.
    pub fn quiver_f(&self) -> &Quiver {
        &self.quiver_f
    }

    /// Position in `Q_{F_d}` of a vertex of `Q_X` lying in `Q_{Y_d^*}`.
    pub fn x_to_f(&self, p: usize) -> Option<usize> {
        self.x_to_f[p]
    }

    /// Position in `Q_X` of a vertex of `Q_{F_d}`, unless it lies in `Q_{Z_d}`.
    pub fn f_to_x(&self, k: usize) -> Option<usize> {
        self.f_to_x[k]
    }

    pub fn y_star_set(&self) -> &VertexSet {
        &self.y_star_set
    }

    /// `Q_{Z_d}` inside `Q_{F_d}`.
    pub fn z_in_f(&self) -> &VertexSet {
        &self.z_f
    }

    /// `Q_{T_d}` inside `Q_X`.
    pub fn t_set(&self) -> &VertexSet {
        &self.t_set
    }

    fn to_f(&self, set: &VertexSet) -> VertexSet {
        let mut s = FixedBitSet::with_capacity(self.quiver_f.len());
        for p in set.ones() {
            if let Some(k) = self.x_to_f[p] {
                s.insert(k);
            }
        }
        s
    }

    fn to_x(&self, set: &VertexSet) -> VertexSet {
        let mut s = FixedBitSet::with_capacity(self.x_to_f.len());
        for k in set.ones() {
            if let Some(p) = self.f_to_x[k] {
                s.insert(p);
            }
        }
        s
    }

    /// `Q_{F_d(ŵ)}`: `Q_{Z_d}` attached below `Q_w ∩ Q_{Y_d^*}`.
    pub fn f_hat(&self, ideal: &VertexSet) -> VertexSet {
        let mut s = self.to_f(ideal);
        s.union_with(&self.z_f);
        s
    }

    /// Higher duality `Q_v ↦ Q_{v_{q^d}} = i_{T_d}(Q_v)`, defined when
    /// `Q_v ⊆ Q_{T_d}`.
    pub fn higher_dual(&self, ideal: &VertexSet) -> Option<VertexSet> {
        if !ideal.is_subset(&self.t_set) {
            return None;
        }
        let mut rest = self.t_set.clone();
        rest.difference_with(ideal);
        Some(self.to_x(&self.quiver_f.flip(&self.to_f(&rest))))
    }

    /// `i_{T_d}(Q_u ∩ Q_{T_d})`, used by the smallest-power criterion.
    pub fn t_dual_of_part(&self, ideal: &VertexSet) -> VertexSet {
        let mut part = ideal.clone();
        part.intersect_with(&self.t_set);
        self.higher_dual(&part).expect("part lies in T_d")
    }

    /// Partner through `F_d`: when `i_{F_d}(F_d(ŵ))` contains `Q_{Z_d}`, the
    /// ideal `w_q` with `F_d(ŵ_q) = i_{F_d}(F_d(ŵ))`. Requires `Q_w ⊆ Q_{Y_d^*}`.
    pub fn partner(&self, ideal: &VertexSet) -> Option<VertexSet> {
        if !ideal.is_subset(&self.y_star_set) {
            return None;
        }
        let mut rest = self.y_star_f.clone();
        rest.difference_with(&self.to_f(ideal));
        let s = self.quiver_f.flip(&rest);
        if !self.z_f.is_subset(&s) {
            return None;
        }
        Some(self.to_x(&s))
    }
}
