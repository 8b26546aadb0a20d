//! Quivers of reduced words, order ideals and quiver-level dualities.
//!
//! A vertex is a position in the source word, labelled `(β, k)` when it is the
//! `k`-th occurrence of the letter `β`. There is an arrow from `(β, i)` to
//! `(γ, j)` when `β` and `γ` are linked in the Dynkin diagram, `(γ, j)` is the
//! first occurrence of `γ` after `(β, i)`, and it comes before `(β, i + 1)`.
//! Arrows point down: `u ≼ v` when there is an oriented path from `v` to `u`.
//! Schubert varieties correspond to down-closed vertex sets.

mod geometry;

use std::collections::{HashMap, VecDeque};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::root_system::RootData;
use crate::weyl::{is_reduced, ClassId, Cosets};

pub use geometry::DegreeGeometry;

/// A set of quiver vertices (positions in the source word).
pub type VertexSet = FixedBitSet;

/// Quiver of a reduced word.
#[derive(Debug, Clone)]
pub struct Quiver {
    word: Vec<usize>,
    labels: Vec<(usize, usize)>,
    occurrences: Vec<Vec<usize>>,
    arrows: Vec<(usize, usize)>,
    succ: Vec<Vec<usize>>,
    pred: Vec<Vec<usize>>,
    below: Vec<FixedBitSet>,
    involution: Option<Vec<usize>>,
}

impl Quiver {
    /// Builds the quiver of a reduced word, rejecting non-reduced input.
    pub fn build(rd: &RootData, word: &[usize]) -> Result<Self> {
        if word.iter().any(|&b| b >= rd.rank()) {
            return Err(Error::Parse(format!("letter out of range in {word:?}")));
        }
        if !is_reduced(rd, word) {
            return Err(Error::NotReduced(word.to_vec()));
        }
        Ok(Self::from_word(rd.cartan(), word))
    }

    pub(crate) fn from_word(cartan: &[Vec<i64>], word: &[usize]) -> Self {
        let n = word.len();
        let rank = cartan.len();
        let mut occurrences = vec![Vec::new(); rank];
        let mut labels = Vec::with_capacity(n);
        for (p, &b) in word.iter().enumerate() {
            occurrences[b].push(p);
            labels.push((b, occurrences[b].len()));
        }
        let mut arrows = Vec::new();
        for (p, &beta) in word.iter().enumerate() {
            let next_beta = word[p + 1..]
                .iter()
                .position(|&x| x == beta)
                .map_or(n, |k| p + 1 + k);
            for gamma in 0..rank {
                if gamma == beta || cartan[gamma][beta] == 0 {
                    continue;
                }
                if let Some(k) = word[p + 1..].iter().position(|&x| x == gamma) {
                    let q = p + 1 + k;
                    if q < next_beta {
                        arrows.push((p, q));
                    }
                }
            }
        }
        arrows.sort_unstable();
        let mut succ = vec![Vec::new(); n];
        let mut pred = vec![Vec::new(); n];
        for &(p, q) in &arrows {
            succ[p].push(q);
            pred[q].push(p);
        }
        let mut below = vec![FixedBitSet::with_capacity(n); n];
        for p in (0..n).rev() {
            let mut set = FixedBitSet::with_capacity(n);
            set.insert(p);
            for &q in &succ[p] {
                set.union_with(&below[q]);
            }
            below[p] = set;
        }
        Quiver {
            word: word.to_vec(),
            labels,
            occurrences,
            arrows,
            succ,
            pred,
            below,
            involution: None,
        }
    }

    /// Attaches the involution `(β, k) ↦ (ι(β), m(β) + 1 - k)` and checks
    /// that it is an arrow-reversing involution.
    pub fn with_involution(mut self, iota: &[usize]) -> Result<Self> {
        let mut perm = Vec::with_capacity(self.len());
        for &(b, k) in &self.labels {
            let ib = iota[b];
            let m = self.occurrences[b].len();
            if self.occurrences[ib].len() != m {
                return Err(Error::Internal(format!(
                    "letter counts of s{} and s{} differ in {:?}",
                    b + 1,
                    ib + 1,
                    self.word
                )));
            }
            perm.push(self.occurrences[ib][m - k]);
        }
        for p in 0..perm.len() {
            if perm[perm[p]] != p {
                return Err(Error::Internal("vertex map is not an involution".into()));
            }
        }
        for &(p, q) in &self.arrows {
            if self.arrows.binary_search(&(perm[q], perm[p])).is_err() {
                return Err(Error::Internal(format!(
                    "involution does not reverse the arrow {:?} -> {:?}",
                    self.labels[p], self.labels[q]
                )));
            }
        }
        self.involution = Some(perm);
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn source_word(&self) -> &[usize] {
        &self.word
    }

    /// `(β, k)` of a vertex; `β` is 0-based and `k` starts at 1.
    pub fn label(&self, p: usize) -> (usize, usize) {
        self.labels[p]
    }

    pub fn labels(&self) -> &[(usize, usize)] {
        &self.labels
    }

    /// Vertex `(β, k)`, if present.
    pub fn position(&self, beta: usize, k: usize) -> Option<usize> {
        if k == 0 {
            return None;
        }
        self.occurrences.get(beta)?.get(k - 1).copied()
    }

    /// `m(β)`, the number of occurrences of `β`.
    pub fn multiplicity(&self, beta: usize) -> usize {
        self.occurrences.get(beta).map_or(0, Vec::len)
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn successors(&self, p: usize) -> &[usize] {
        &self.succ[p]
    }

    pub fn predecessors(&self, p: usize) -> &[usize] {
        &self.pred[p]
    }

    /// `u ≼ v`: an oriented path from `v` to `u`.
    pub fn leq(&self, u: usize, v: usize) -> bool {
        self.below[v].contains(u)
    }

    /// All vertices `≼ p`.
    pub fn below(&self, p: usize) -> &FixedBitSet {
        &self.below[p]
    }

    pub fn involution(&self) -> Option<&[usize]> {
        self.involution.as_deref()
    }

    pub fn empty_set(&self) -> VertexSet {
        FixedBitSet::with_capacity(self.len())
    }

    pub fn full_set(&self) -> VertexSet {
        let mut s = self.empty_set();
        s.insert_range(..);
        s
    }

    pub fn complement(&self, set: &VertexSet) -> VertexSet {
        let mut s = set.clone();
        s.toggle_range(..);
        s
    }

    /// Down-closed: every successor of a member is a member.
    pub fn is_ideal(&self, set: &VertexSet) -> bool {
        set.ones().all(|p| self.succ[p].iter().all(|&q| set.contains(q)))
    }

    /// Maximal elements of a set: no predecessor inside the set.
    pub fn peaks(&self, set: &VertexSet) -> Vec<usize> {
        set.ones()
            .filter(|&p| self.pred[p].iter().all(|&q| !set.contains(q)))
            .collect()
    }

    /// Smallest ideal containing `set`.
    pub fn down_closure(&self, set: &VertexSet) -> VertexSet {
        let mut s = self.empty_set();
        for p in set.ones() {
            s.union_with(&self.below[p]);
        }
        s
    }

    /// Smallest up-set containing `set`.
    pub fn up_closure(&self, set: &VertexSet) -> VertexSet {
        let mut s = self.empty_set();
        for q in 0..self.len() {
            if set.ones().any(|p| self.below[q].contains(p)) {
                s.insert(q);
            }
        }
        s
    }

    /// Image of a vertex set under the involution.
    pub fn flip(&self, set: &VertexSet) -> VertexSet {
        let perm = self.involution.as_ref().expect("quiver has an involution");
        let mut s = self.empty_set();
        for p in set.ones() {
            s.insert(perm[p]);
        }
        s
    }

    /// The involution on ideals: `Q ↦ i(Q_all - Q)`.
    pub fn dual_ideal(&self, set: &VertexSet) -> VertexSet {
        self.flip(&self.complement(set))
    }

    /// Letters of the vertices of `set`, in word order.
    pub fn word_of(&self, set: &VertexSet) -> Vec<usize> {
        set.ones().map(|p| self.word[p]).collect()
    }

    /// Labelled arrows, independent of the word order of commuting letters.
    pub fn labelled_arrows(&self) -> Vec<((usize, usize), (usize, usize))> {
        let mut v: Vec<_> = self
            .arrows
            .iter()
            .map(|&(p, q)| (self.labels[p], self.labels[q]))
            .collect();
        v.sort_unstable();
        v
    }

    /// Converts a set to the labels of its vertices, sorted.
    pub fn label_set(&self, set: &VertexSet) -> Vec<(usize, usize)> {
        let mut v: Vec<_> = set.ones().map(|p| self.labels[p]).collect();
        v.sort_unstable();
        v
    }
}

/// The quiver `Q_X` of a (co)minuscule space with the bijection between its
/// order ideals and Schubert classes.
#[derive(Debug, Clone)]
pub struct SchubertQuiver {
    quiver: Quiver,
    marked: usize,
    ideals: Vec<VertexSet>,
    lookup: HashMap<VertexSet, ClassId>,
}

impl SchubertQuiver {
    /// Builds `Q_X` from the canonical word of `w_X` and matches every ideal
    /// (obtained by repeatedly removing peaks) with its class through the
    /// weight reached by its word.
    pub fn build(
        rd: &RootData,
        iota: &[usize],
        marked: usize,
        omega: &[i64],
        cosets: &Cosets,
    ) -> Result<Self> {
        let word = &cosets.get(cosets.longest_element()).reduced_word;
        let quiver = Quiver::build(rd, word)?.with_involution(iota)?;
        let mut ideals: Vec<Option<VertexSet>> = vec![None; cosets.len()];
        let mut lookup = HashMap::new();
        let mut seen = std::collections::HashSet::new();
        let mut queue = VecDeque::new();
        let full = quiver.full_set();
        seen.insert(full.clone());
        queue.push_back(full);
        while let Some(set) = queue.pop_front() {
            let weight = rd.apply_word(&quiver.word_of(&set), omega);
            let id = cosets.find(&weight).ok_or_else(|| {
                Error::Internal(format!("ideal {:?} gives no class", quiver.label_set(&set)))
            })?;
            if cosets.get(id).length != set.count_ones(..) || ideals[id].is_some() {
                return Err(Error::Internal(format!(
                    "ideal/class mismatch at class {id}"
                )));
            }
            for p in quiver.peaks(&set) {
                let mut smaller = set.clone();
                smaller.set(p, false);
                if seen.insert(smaller.clone()) {
                    queue.push_back(smaller);
                }
            }
            lookup.insert(set.clone(), id);
            ideals[id] = Some(set);
        }
        let ideals = ideals
            .into_iter()
            .enumerate()
            .map(|(id, s)| s.ok_or_else(|| Error::Internal(format!("class {id} has no ideal"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(SchubertQuiver {
            quiver,
            marked,
            ideals,
            lookup,
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    /// `Q_w`.
    pub fn ideal(&self, w: ClassId) -> &VertexSet {
        &self.ideals[w]
    }

    /// Class of an ideal, if the set is an ideal.
    pub fn class_of(&self, set: &VertexSet) -> Option<ClassId> {
        self.lookup.get(set).copied()
    }

    /// Poincaré duality on ideals: `Q_w ↦ i_X(Q_X - Q_w)`.
    pub fn quiver_dual(&self, w: ClassId) -> ClassId {
        self.lookup[&self.quiver.dual_ideal(&self.ideals[w])]
    }

    /// Peaks of `Q_w`.
    pub fn peaks(&self, w: ClassId) -> Vec<usize> {
        self.quiver.peaks(&self.ideals[w])
    }

    /// Classes `w(i)` obtained by removing one peak.
    pub fn peak_removals(&self, w: ClassId) -> Vec<ClassId> {
        self.peaks(w)
            .into_iter()
            .map(|p| {
                let mut s = self.ideals[w].clone();
                s.set(p, false);
                self.lookup[&s]
            })
            .collect()
    }

    /// Number of occurrences of the marked letter in a reduced word of `w`.
    pub fn delta(&self, w: ClassId) -> usize {
        self.ideals[w]
            .ones()
            .filter(|&p| self.quiver.word[p] == self.marked)
            .count()
    }

    /// Containment of ideals, which is the Bruhat order on `W_X`.
    pub fn contained(&self, u: ClassId, v: ClassId) -> bool {
        self.ideals[u].is_subset(&self.ideals[v])
    }

    pub fn marked(&self) -> usize {
        self.marked
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::RootSystem;

    #[test]
    fn single_letter() {
        let rs = RootSystem::build("A", 2).unwrap();
        let q = Quiver::build(rs.data(), &[0]).unwrap();
        assert_eq!(q.len(), 1);
        assert!(q.arrows().is_empty());
    }

    #[test]
    fn rejects_non_reduced() {
        let rs = RootSystem::build("A", 2).unwrap();
        assert!(Quiver::build(rs.data(), &[0, 0]).is_err());
    }
}
