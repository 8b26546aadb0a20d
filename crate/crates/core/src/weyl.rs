//! Minimal coset representatives, Hasse diagrams and the Bruhat order.
//!
//! A class is stored by the weight `w·ω_P` (Dynkin labels), which identifies
//! the coset `wW_P` uniquely. Lengths are dimensions of Schubert varieties:
//! the identity is the point class and the longest element `w_X` is the
//! fundamental class.

use std::collections::{BTreeMap, HashMap};

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::root_system::{MarkedSpace, RootData};

/// Dense handle of a Schubert class.
pub type ClassId = usize;

/// A minimal coset representative `w ∈ W_X`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SchubertIndex {
    pub id: ClassId,
    /// `ℓ(w)`, the dimension of the Schubert variety.
    pub length: usize,
    /// `w·ω_P` as Dynkin labels.
    pub orbit_weight: Vec<i64>,
    /// Canonical reduced word (0-based nodes, leftmost letter first).
    pub reduced_word: Vec<usize>,
}

/// A cover `lower ⋖ upper` of the Bruhat order on `W_X`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HasseEdge {
    pub lower: ClassId,
    pub upper: ClassId,
    /// Positive root `γ` with `upper·ω_P = lower·ω_P - p·γ`, simple-root basis.
    pub root: Vec<i64>,
    /// Chevalley coefficient `p = ⟨ω_P, β^∨⟩`.
    pub coefficient: i64,
}

/// All classes of a (co)minuscule space together with the Hasse diagram.
#[derive(Debug, Clone)]
pub struct Cosets {
    dimension: usize,
    classes: Vec<SchubertIndex>,
    by_weight: HashMap<Vec<i64>, ClassId>,
    edges: Vec<HasseEdge>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    above: Vec<FixedBitSet>,
}

impl Cosets {
    /// Breadth-first closure of the orbit of `ω_P` under simple reflections.
    pub fn enumerate(space: &MarkedSpace) -> Self {
        Self::from_weight(space.root_system().data(), &space.omega())
    }

    /// Enumerates the orbit of an arbitrary dominant weight.
    pub fn from_weight(rd: &RootData, dominant: &[i64]) -> Self {
        let mut classes: Vec<SchubertIndex> = Vec::new();
        let mut by_weight = HashMap::new();
        let mut level: Vec<(Vec<i64>, Vec<usize>)> = vec![(dominant.to_vec(), Vec::new())];
        let mut length = 0;
        while !level.is_empty() {
            let mut next: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
            for (weight, word) in &level {
                for i in 0..rd.rank() {
                    if weight[i] > 0 {
                        let nu = rd.reflect_weight(weight, i);
                        let mut w = Vec::with_capacity(word.len() + 1);
                        w.push(i);
                        w.extend_from_slice(word);
                        next.entry(nu)
                            .and_modify(|cur| {
                                if w < *cur {
                                    *cur = w.clone();
                                }
                            })
                            .or_insert(w);
                    }
                }
            }
            level.sort_by(|a, b| a.1.cmp(&b.1));
            for (weight, word) in level {
                let id = classes.len();
                by_weight.insert(weight.clone(), id);
                classes.push(SchubertIndex {
                    id,
                    length,
                    orbit_weight: weight,
                    reduced_word: word,
                });
            }
            level = next.into_iter().collect();
            length += 1;
        }
        let dimension = classes.last().map_or(0, |c| c.length);

        let mut edges = Vec::new();
        for c in &classes {
            for (k, root) in rd.positive_roots().iter().enumerate() {
                let p = rd.pair_coroot(&c.orbit_weight, k);
                if p <= 0 {
                    continue;
                }
                let labels = rd.root_labels(root);
                let nu: Vec<i64> = c
                    .orbit_weight
                    .iter()
                    .zip(&labels)
                    .map(|(m, g)| m - p * g)
                    .collect();
                let upper = by_weight[&nu];
                if classes[upper].length == c.length + 1 {
                    edges.push(HasseEdge {
                        lower: c.id,
                        upper,
                        root: root.clone(),
                        coefficient: p,
                    });
                }
            }
        }
        edges.sort_by_key(|e| (e.lower, e.upper));
        let n = classes.len();
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for (k, e) in edges.iter().enumerate() {
            up[e.lower].push(k);
            down[e.upper].push(k);
        }
        let mut above = vec![FixedBitSet::with_capacity(n); n];
        for id in (0..n).rev() {
            let mut set = FixedBitSet::with_capacity(n);
            set.insert(id);
            for &k in &up[id] {
                set.union_with(&above[edges[k].upper]);
            }
            above[id] = set;
        }
        Cosets {
            dimension,
            classes,
            by_weight,
            edges,
            up,
            down,
            above,
        }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// `dim X = ℓ(w_X)`.
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn classes(&self) -> &[SchubertIndex] {
        &self.classes
    }

    pub fn get(&self, id: ClassId) -> &SchubertIndex {
        &self.classes[id]
    }

    pub fn find(&self, weight: &[i64]) -> Option<ClassId> {
        self.by_weight.get(weight).copied()
    }

    /// Codimension `dim X - ℓ(w)`.
    pub fn codim(&self, id: ClassId) -> usize {
        self.dimension - self.classes[id].length
    }

    /// The point class (identity element).
    pub fn identity(&self) -> ClassId {
        0
    }

    /// `w_X`, the fundamental class.
    pub fn longest_element(&self) -> ClassId {
        self.classes.len() - 1
    }

    /// The hyperplane class `H`, unique of codimension 1.
    pub fn hyperplane(&self) -> Option<ClassId> {
        let mut it = self.with_codim(1);
        let h = it.next();
        debug_assert!(it.next().is_none());
        h
    }

    /// Classes of a given codimension, in id order.
    pub fn with_codim(&self, codim: usize) -> impl Iterator<Item = ClassId> + '_ {
        self.classes
            .iter()
            .filter(move |c| self.dimension - c.length == codim)
            .map(|c| c.id)
    }

    pub fn edges(&self) -> &[HasseEdge] {
        &self.edges
    }

    /// Covers `v ⋖ w` with their Chevalley coefficients.
    pub fn lower_covers(&self, w: ClassId) -> impl Iterator<Item = (ClassId, i64)> + '_ {
        self.down[w]
            .iter()
            .map(|&k| (self.edges[k].lower, self.edges[k].coefficient))
    }

    /// Covers `w ⋖ v` with their Chevalley coefficients.
    pub fn upper_covers(&self, w: ClassId) -> impl Iterator<Item = (ClassId, i64)> + '_ {
        self.up[w]
            .iter()
            .map(|&k| (self.edges[k].upper, self.edges[k].coefficient))
    }

    /// Number of classes of each length `0..=dim X`.
    pub fn betti(&self) -> Vec<usize> {
        let mut b = vec![0; self.dimension + 1];
        for c in &self.classes {
            b[c.length] += 1;
        }
        b
    }

    /// Bruhat order: a directed Hasse path from `u` up to `v`.
    pub fn bruhat_leq(&self, u: ClassId, v: ClassId) -> bool {
        self.above[u].contains(v)
    }

    /// Classical Poincaré duality `w ↦ w₀ww₀w_X`, acting on orbit weights
    /// as `λ ↦ w₀λ`.
    pub fn poincare_dual(&self, involution: &[usize], w: ClassId) -> ClassId {
        let lambda = &self.classes[w].orbit_weight;
        let nu: Vec<i64> = (0..lambda.len()).map(|j| -lambda[involution[j]]).collect();
        self.by_weight[&nu]
    }

    /// Degree of `X(w)` for the hyperplane class: the number of maximal
    /// chains from the point up to `w`, weighted by Chevalley coefficients.
    pub fn schubert_degree(&self, w: ClassId) -> BigInt {
        let mut count = vec![BigInt::zero(); self.len()];
        count[0] = BigInt::one();
        for id in 1..=w {
            let mut total = BigInt::zero();
            for (v, c) in self.lower_covers(id) {
                total += &count[v] * c;
            }
            count[id] = total;
        }
        count[w].clone()
    }
}

/// Reduces a word with the exchange condition, tracking positive roots.
///
/// Letters are appended one at a time; when `u s_i` is shorter than `u` the
/// letter cancelling it is deleted instead.
pub fn reduce_word(rd: &RootData, word: &[usize]) -> Vec<usize> {
    let mut u: Vec<usize> = Vec::with_capacity(word.len());
    for &i in word {
        let mut gamma = simple(rd.rank(), i);
        let mut hit = None;
        for j in (0..u.len()).rev() {
            if is_simple(&gamma, u[j]) {
                hit = Some(j);
                break;
            }
            gamma = rd.reflect_root(&gamma, u[j]);
        }
        match hit {
            Some(j) => {
                u.remove(j);
            }
            None => u.push(i),
        }
    }
    u
}

/// Whether a word is reduced.
pub fn is_reduced(rd: &RootData, word: &[usize]) -> bool {
    reduce_word(rd, word).len() == word.len()
}

fn simple(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn is_simple(root: &[i64], i: usize) -> bool {
    root.iter()
        .enumerate()
        .all(|(k, &x)| x == if k == i { 1 } else { 0 })
}

/// Converts 1-based Bourbaki labels to internal node indices.
pub fn word_from_labels(labels: &[usize]) -> Vec<usize> {
    labels.iter().map(|&l| l - 1).collect()
}

/// Renders a word as `s6 s5 s4` with 1-based labels.
pub fn format_word(word: &[usize]) -> String {
    word.iter()
        .map(|i| format!("s{}", i + 1))
        .collect::<Vec<_>>()
        .join(" ")
}
