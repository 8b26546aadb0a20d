//! Dynkin data, roots, coroots and weights.
//!
//! Nodes are numbered as in Bourbaki. Internally a node is a 0-based index,
//! so Bourbaki node `k` is index `k - 1`. For E6 the chain is 1-3-4-5-6 with
//! 2 attached to 4; for E7 the chain is 1-3-4-5-6-7 with 2 attached to 4.
//!
//! Roots are integer vectors in the basis of simple roots, coroots integer
//! vectors in the basis of simple coroots, and weights are stored by their
//! Dynkin labels `⟨λ, α_i^∨⟩`. Fundamental weights are also available as
//! rational vectors in the simple-root basis.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A Dynkin type supported by the library.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DynkinType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E6,
    E7,
}

impl DynkinType {
    /// Builds a type from a letter and a rank, rejecting invalid pairs.
    pub fn new(label: &str, rank: usize) -> Result<Self> {
        let ty = match (label, rank) {
            ("A", n) if n >= 1 => DynkinType::A(n),
            ("B", n) if n >= 2 => DynkinType::B(n),
            ("C", n) if n >= 2 => DynkinType::C(n),
            ("D", n) if n >= 3 => DynkinType::D(n),
            ("E", 6) | ("E6", 6) => DynkinType::E6,
            ("E", 7) | ("E7", 7) => DynkinType::E7,
            ("E", 8) | ("F", 4) | ("G", 2) => {
                return Err(Error::UnsupportedType(format!(
                    "{label}{rank}: no minuscule or cominuscule node"
                )))
            }
            _ => {
                return Err(Error::UnsupportedType(format!(
                    "{label}{rank}: expected A_n (n≥1), B_n/C_n (n≥2), D_n (n≥3), E6 or E7"
                )))
            }
        };
        Ok(ty)
    }

    pub fn rank(self) -> usize {
        match self {
            DynkinType::A(n) | DynkinType::B(n) | DynkinType::C(n) | DynkinType::D(n) => n,
            DynkinType::E6 => 6,
            DynkinType::E7 => 7,
        }
    }

    pub fn letter(self) -> &'static str {
        match self {
            DynkinType::A(_) => "A",
            DynkinType::B(_) => "B",
            DynkinType::C(_) => "C",
            DynkinType::D(_) => "D",
            DynkinType::E6 | DynkinType::E7 => "E",
        }
    }

    /// Cartan matrix with `a[i][j] = ⟨α_j, α_i^∨⟩`.
    fn cartan(self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self {
            DynkinType::A(n) | DynkinType::B(n) | DynkinType::C(n) => {
                for i in 0..n - 1 {
                    link(i, i + 1);
                }
            }
            DynkinType::D(n) => {
                for i in 0..n - 2 {
                    link(i, i + 1);
                }
                link(n - 3, n - 1);
            }
            DynkinType::E6 | DynkinType::E7 => {
                link(0, 2);
                link(1, 3);
                for i in 2..n - 1 {
                    link(i, i + 1);
                }
            }
        }
        match self {
            // α_n short.
            DynkinType::B(n) => a[n - 1][n - 2] = -2,
            // α_n long.
            DynkinType::C(n) => a[n - 2][n - 1] = -2,
            _ => {}
        }
        a
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter(), self.rank())
    }
}

/// Roots and coroots of a finite root system given by a Cartan matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootData {
    cartan: Vec<Vec<i64>>,
    roots: Vec<Vec<i64>>,
    coroots: Vec<Vec<i64>>,
}

impl RootData {
    /// Generates the positive roots together with their coroots.
    ///
    /// Starting from the simple roots, simple reflections are applied as long
    /// as the image stays positive; every positive root of a finite system is
    /// reached this way.
    pub fn from_cartan(cartan: Vec<Vec<i64>>) -> Self {
        let n = cartan.len();
        let mut roots = Vec::new();
        let mut coroots = Vec::new();
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0i64; n];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back((e.clone(), e));
        }
        while let Some((root, coroot)) = queue.pop_front() {
            for i in 0..n {
                let p: i64 = (0..n).map(|j| root[j] * cartan[i][j]).sum();
                let pc: i64 = (0..n).map(|j| coroot[j] * cartan[j][i]).sum();
                let mut r = root.clone();
                r[i] -= p;
                let mut c = coroot.clone();
                c[i] -= pc;
                if r.iter().all(|&x| x >= 0) && r.iter().any(|&x| x > 0) && seen.insert(r.clone())
                {
                    queue.push_back((r, c));
                }
            }
            roots.push(root);
            coroots.push(coroot);
        }
        let mut order: Vec<usize> = (0..roots.len()).collect();
        order.sort_by(|&x, &y| {
            let hx: i64 = roots[x].iter().sum();
            let hy: i64 = roots[y].iter().sum();
            hx.cmp(&hy).then_with(|| roots[y].cmp(&roots[x]))
        });
        let roots = order.iter().map(|&k| roots[k].clone()).collect();
        let coroots = order.iter().map(|&k| coroots[k].clone()).collect();
        RootData {
            cartan,
            roots,
            coroots,
        }
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Positive roots in the simple-root basis, sorted by height.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    /// Coroots matching [`Self::positive_roots`], in the simple-coroot basis.
    pub fn positive_coroots(&self) -> &[Vec<i64>] {
        &self.coroots
    }

    /// `⟨λ, γ^∨⟩` for the `k`-th positive root `γ`.
    pub fn pair_coroot(&self, weight: &[i64], k: usize) -> i64 {
        self.coroots[k].iter().zip(weight).map(|(c, l)| c * l).sum()
    }

    /// Dynkin labels of a vector given in the simple-root basis.
    pub fn root_labels(&self, root: &[i64]) -> Vec<i64> {
        let n = self.rank();
        (0..n)
            .map(|j| (0..n).map(|k| root[k] * self.cartan[j][k]).sum())
            .collect()
    }

    /// `s_i λ` for a weight given by Dynkin labels.
    pub fn reflect_weight(&self, weight: &[i64], i: usize) -> Vec<i64> {
        let li = weight[i];
        weight
            .iter()
            .enumerate()
            .map(|(j, &l)| l - li * self.cartan[j][i])
            .collect()
    }

    /// `s_i γ` for a vector in the simple-root basis.
    pub fn reflect_root(&self, root: &[i64], i: usize) -> Vec<i64> {
        let p: i64 = (0..self.rank()).map(|k| root[k] * self.cartan[i][k]).sum();
        let mut r = root.to_vec();
        r[i] -= p;
        r
    }

    /// Applies a word to a weight, rightmost letter first.
    pub fn apply_word(&self, word: &[usize], weight: &[i64]) -> Vec<i64> {
        word.iter()
            .rev()
            .fold(weight.to_vec(), |w, &i| self.reflect_weight(&w, i))
    }

    /// Number of positive roots `γ` with `⟨λ, γ^∨⟩ < 0`. For `λ = wμ` with
    /// `μ` dominant and `w` a minimal coset representative, this is `ℓ(w)`.
    pub fn orbit_length(&self, weight: &[i64]) -> usize {
        (0..self.roots.len())
            .filter(|&k| self.pair_coroot(weight, k) < 0)
            .count()
    }

    /// Reduced word of the longest minimal coset representative for the
    /// stabilizer of a dominant weight, built by raising the length one
    /// letter at a time.
    pub fn longest_word(&self, dominant: &[i64]) -> Vec<usize> {
        let mut w = dominant.to_vec();
        let mut letters = Vec::new();
        while let Some(i) = (0..self.rank()).find(|&i| w[i] > 0) {
            w = self.reflect_weight(&w, i);
            letters.push(i);
        }
        letters.reverse();
        letters
    }

    /// The antidominant element of the orbit of `weight`.
    pub fn lowest_in_orbit(&self, weight: &[i64]) -> Vec<i64> {
        let mut w = weight.to_vec();
        while let Some(i) = (0..self.rank()).find(|&i| w[i] > 0) {
            w = self.reflect_weight(&w, i);
        }
        w
    }

    /// The highest root (unique root of maximal height).
    pub fn highest_root(&self) -> &[i64] {
        self.roots.last().expect("root system has roots")
    }

    /// Coroot of the highest root.
    pub fn highest_root_coroot(&self) -> &[i64] {
        self.coroots.last().expect("root system has roots")
    }

    /// Root data of the subdiagram on `nodes` (in the given order).
    pub fn subsystem(&self, nodes: &[usize]) -> RootData {
        let cartan = nodes
            .iter()
            .map(|&i| nodes.iter().map(|&j| self.cartan[i][j]).collect())
            .collect();
        RootData::from_cartan(cartan)
    }

    /// `c_1` of `G/P_K` relative to a marked node: `⟨Σ γ, α^∨⟩` over the
    /// positive roots with a nonzero coefficient on `node`.
    pub fn index_at(&self, node: usize) -> i64 {
        let n = self.rank();
        self.roots
            .iter()
            .filter(|r| r[node] > 0)
            .map(|r| (0..n).map(|k| r[k] * self.cartan[node][k]).sum::<i64>())
            .sum()
    }
}

/// A root system of one of the supported Dynkin types.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    ty: DynkinType,
    data: RootData,
    fundamental_weights: Vec<Vec<Rational64>>,
    involution: Vec<usize>,
}

impl RootSystem {
    pub fn new(ty: DynkinType) -> Self {
        let data = RootData::from_cartan(ty.cartan());
        let fundamental_weights = invert_cartan(data.cartan());
        let n = data.rank();
        let involution = (0..n)
            .map(|i| {
                let low = data.lowest_in_orbit(&unit(n, i));
                (0..n)
                    .find(|&j| low == neg_unit(n, j))
                    .expect("lowest weight of a fundamental orbit is -ω_j")
            })
            .collect();
        RootSystem {
            ty,
            data,
            fundamental_weights,
            involution,
        }
    }

    /// `build_root_system(type_label, rank)`.
    pub fn build(label: &str, rank: usize) -> Result<Self> {
        Ok(Self::new(DynkinType::new(label, rank)?))
    }

    pub fn dynkin_type(&self) -> DynkinType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.data.rank()
    }

    pub fn data(&self) -> &RootData {
        &self.data
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        self.data.cartan()
    }

    /// Simple roots as unit vectors of the simple-root basis.
    pub fn simple_roots(&self) -> Vec<Vec<i64>> {
        (0..self.rank()).map(|i| unit(self.rank(), i)).collect()
    }

    /// Fundamental weights in the simple-root basis.
    pub fn fundamental_weights(&self) -> &[Vec<Rational64>] {
        &self.fundamental_weights
    }

    /// The permutation `ι` with `-w₀(α_i) = α_{ι(i)}`.
    pub fn weyl_involution(&self) -> &[usize] {
        &self.involution
    }

    pub fn highest_root(&self) -> &[i64] {
        self.data.highest_root()
    }

    /// The Coxeter number `h = ht(α₀) + 1`.
    pub fn coxeter_number(&self) -> i64 {
        self.highest_root().iter().sum::<i64>() + 1
    }

    /// Classifies a node (0-based) by the pairings of its fundamental weight.
    pub fn classify_node(&self, node: usize) -> NodeClass {
        let minuscule = self
            .data
            .positive_coroots()
            .iter()
            .all(|c| c[node].abs() <= 1);
        if minuscule {
            NodeClass::Minuscule
        } else if self.data.highest_root_coroot()[node] == 1 {
            NodeClass::CominusculeOnly
        } else {
            NodeClass::Neither
        }
    }
}

/// Classification of a marked node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeClass {
    Minuscule,
    CominusculeOnly,
    Neither,
}

/// Families of (co)minuscule spaces, up to isomorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `G(k, n)`, `k`-planes in an `n`-dimensional space.
    Grassmannian { k: usize, n: usize },
    /// Smooth quadric of dimension `m`.
    Quadric { m: usize },
    /// Lagrangian Grassmannian of `n`-planes in a `2n`-dimensional space.
    Lagrangian { n: usize },
    /// Spinor variety, one family of maximal isotropic `n`-planes in `2n` dimensions.
    Spinor { n: usize },
    CayleyPlane,
    Freudenthal,
}

impl Family {
    /// Closed-form `(dimension, index, d_max)`.
    pub fn invariants(self) -> (usize, usize, usize) {
        match self {
            Family::Grassmannian { k, n } => (k * (n - k), n, k.min(n - k)),
            Family::Quadric { m } => (m, m, 2),
            Family::Lagrangian { n } => (n * (n + 1) / 2, n + 1, n),
            Family::Spinor { n } => (n * (n - 1) / 2, 2 * n - 2, n / 2),
            Family::CayleyPlane => (16, 12, 2),
            Family::Freudenthal => (27, 18, 3),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Grassmannian { k, n } => write!(f, "G({k},{n})"),
            Family::Quadric { m } => write!(f, "Q^{m}"),
            Family::Lagrangian { n } => write!(f, "LG({n},{})", 2 * n),
            Family::Spinor { n } => write!(f, "OG({n},{})", 2 * n),
            Family::CayleyPlane => write!(f, "OP2"),
            Family::Freudenthal => write!(f, "E7/P7"),
        }
    }
}

/// A (co)minuscule homogeneous space `G/P` given by a marked node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedSpace {
    root_system: RootSystem,
    node: usize,
    family: Family,
    dimension: usize,
    index_c1: usize,
    d_max: usize,
}

impl MarkedSpace {
    /// `build_marked_space(rs, node)` with a 0-based node.
    ///
    /// Dimension, index and `d_max` are computed from the root data and
    /// cross-checked against the closed-form values of the family.
    pub fn new(root_system: RootSystem, node: usize) -> Result<Self> {
        let ty = root_system.dynkin_type();
        if node >= root_system.rank() {
            return Err(Error::UnsupportedSpace(format!(
                "node {} out of range for {ty}",
                node + 1
            )));
        }
        if root_system.classify_node(node) == NodeClass::Neither {
            return Err(Error::NotCominuscule {
                ty: ty.to_string(),
                node: node + 1,
            });
        }
        let family = family_of(ty, node)?;
        let data = root_system.data();
        let dimension = data.positive_roots().iter().filter(|r| r[node] > 0).count();
        let index_c1 = data.index_at(node) as usize;
        let omega = unit(root_system.rank(), node);
        let d_max = data
            .longest_word(&omega)
            .iter()
            .filter(|&&b| b == node)
            .count();
        let expected = family.invariants();
        if (dimension, index_c1, d_max) != expected {
            return Err(Error::Internal(format!(
                "{ty}/P{}: computed (dim, c1, d_max) = {:?}, table gives {:?}",
                node + 1,
                (dimension, index_c1, d_max),
                expected
            )));
        }
        Ok(MarkedSpace {
            root_system,
            node,
            family,
            dimension,
            index_c1,
            d_max,
        })
    }

    /// Parses identifiers such as `E6/P1`, `A4/P2`, `D5/P5`.
    pub fn parse(s: &str) -> Result<Self> {
        let err = || Error::ParseSpace(s.to_string());
        let (group, parabolic) = s.trim().split_once('/').ok_or_else(err)?;
        let letter = group.get(..1).ok_or_else(err)?;
        let rank: usize = group[1..].parse().map_err(|_| err())?;
        let node: usize = parabolic
            .strip_prefix('P')
            .or_else(|| parabolic.strip_prefix('p'))
            .ok_or_else(err)?
            .parse()
            .map_err(|_| err())?;
        if node == 0 {
            return Err(err());
        }
        let rs = RootSystem::build(&letter.to_ascii_uppercase(), rank)?;
        MarkedSpace::new(rs, node - 1)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.root_system
    }

    /// Marked node, 0-based.
    pub fn node(&self) -> usize {
        self.node
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn index_c1(&self) -> usize {
        self.index_c1
    }

    pub fn d_max(&self) -> usize {
        self.d_max
    }

    /// Dynkin labels of `ω_P`.
    pub fn omega(&self) -> Vec<i64> {
        unit(self.root_system.rank(), self.node)
    }

    pub fn classification(&self) -> NodeClass {
        self.root_system.classify_node(self.node)
    }

    /// Identifier in the `E6/P1` style.
    pub fn label(&self) -> String {
        format!("{}/P{}", self.root_system.dynkin_type(), self.node + 1)
    }
}

fn family_of(ty: DynkinType, node: usize) -> Result<Family> {
    let k = node + 1;
    let fam = match ty {
        DynkinType::A(n) => Family::Grassmannian { k, n: n + 1 },
        DynkinType::B(n) if k == 1 => Family::Quadric { m: 2 * n - 1 },
        DynkinType::C(n) if k == n => Family::Lagrangian { n },
        DynkinType::D(n) if k == 1 => Family::Quadric { m: 2 * n - 2 },
        DynkinType::D(n) if k + 1 >= n => Family::Spinor { n },
        DynkinType::E6 if k == 1 || k == 6 => Family::CayleyPlane,
        DynkinType::E7 if k == 7 => Family::Freudenthal,
        DynkinType::B(n) if k == n => {
            return Err(Error::UnsupportedSpace(format!(
                "B{n}/P{n} is isomorphic to D{}/P{}; use that form",
                n + 1,
                n + 1
            )))
        }
        DynkinType::C(n) if k == 1 => {
            return Err(Error::UnsupportedSpace(format!(
                "C{n}/P1 is the projective space A{}/P1; use that form",
                2 * n - 1
            )))
        }
        _ => {
            return Err(Error::NotCominuscule {
                ty: ty.to_string(),
                node: k,
            })
        }
    };
    Ok(fam)
}

pub(crate) fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn neg_unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = -1;
    v
}

/// Columns of the inverse Cartan matrix: `ω_i = Σ_k (A^{-1})_{ki} α_k`.
fn invert_cartan(a: &[Vec<i64>]) -> Vec<Vec<Rational64>> {
    let n = a.len();
    let mut m: Vec<Vec<Rational64>> = (0..n)
        .map(|i| {
            (0..2 * n)
                .map(|j| {
                    if j < n {
                        Rational64::from_integer(a[i][j])
                    } else if j - n == i {
                        Rational64::one()
                    } else {
                        Rational64::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .expect("Cartan matrix of finite type is invertible");
        m.swap(col, piv);
        let p = m[col][col];
        for x in m[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col];
                for j in 0..2 * n {
                    let v = m[col][j];
                    m[r][j] -= f * v;
                }
            }
        }
    }
    (0..n)
        .map(|i| (0..n).map(|k| m[k][n + i]).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_one() {
        let rs = RootSystem::build("A", 1).unwrap();
        assert_eq!(rs.cartan(), &[vec![2]]);
        assert_eq!(rs.weyl_involution(), &[0]);
    }

    #[test]
    fn root_counts() {
        for (ty, count) in [
            (DynkinType::A(4), 10),
            (DynkinType::B(3), 9),
            (DynkinType::C(3), 9),
            (DynkinType::D(5), 20),
            (DynkinType::E6, 36),
            (DynkinType::E7, 63),
        ] {
            assert_eq!(RootSystem::new(ty).data().positive_roots().len(), count, "{ty}");
        }
    }
}
