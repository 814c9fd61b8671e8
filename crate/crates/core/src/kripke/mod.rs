//! Finite Kripke frames with one binary relation.

mod clusters;
mod properties;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use fixedbitset::FixedBitSet;

pub use clusters::{
    aaf_cluster_criterion, chains_of_clusters, clusters, ClusterChain, ClusterCriterion,
    ClusterDecomposition, ClusterError,
};
pub use properties::{check_property, FrameProperty, PropertyVerdict, UnknownProperty};

/// Index of a world in its frame. Worlds are indexed in lexicographic order
/// of their identifiers.
pub type WorldId = usize;

/// Set of worlds of one frame, as a bitset over [`WorldId`].
pub type WorldSet = FixedBitSet;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FrameError {
    #[error("duplicate world {0:?}")]
    DuplicateWorld(String),
    #[error("relation mentions undeclared world {0:?}")]
    UnknownWorld(String),
}

#[derive(Clone, PartialEq, Eq)]
pub struct Frame {
    names: Vec<String>,
    index: HashMap<String, WorldId>,
    succ: Vec<WorldSet>,
    pred: Vec<WorldSet>,
}

impl Frame {
    /// Builds a frame; worlds are reordered lexicographically and repeated
    /// pairs collapse.
    pub fn new<W, P, S>(worlds: W, pairs: P) -> Result<Frame, FrameError>
    where
        W: IntoIterator<Item = S>,
        S: Into<String>,
        P: IntoIterator<Item = (S, S)>,
    {
        let mut names: Vec<String> = worlds.into_iter().map(Into::into).collect();
        names.sort();
        if let Some(w) = names.windows(2).find(|w| w[0] == w[1]) {
            return Err(FrameError::DuplicateWorld(w[0].clone()));
        }
        let index: HashMap<String, WorldId> = names
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, n)| (n, i))
            .collect();
        let mut ids = Vec::new();
        for (a, b) in pairs {
            let (a, b): (String, String) = (a.into(), b.into());
            let ia = *index.get(&a).ok_or(FrameError::UnknownWorld(a))?;
            let ib = *index.get(&b).ok_or(FrameError::UnknownWorld(b))?;
            ids.push((ia, ib));
        }
        Ok(Frame::from_parts(names, index, ids))
    }

    /// Builds a frame over worlds named by `names` (must already be sorted
    /// and distinct) from index pairs.
    ///
    /// # Panics
    /// If `names` is unsorted or a pair index is out of range.
    pub fn from_indices(
        names: Vec<String>,
        pairs: impl IntoIterator<Item = (WorldId, WorldId)>,
    ) -> Frame {
        assert!(
            names.windows(2).all(|w| w[0] < w[1]),
            "world names sorted and distinct"
        );
        let index = names
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, n)| (n, i))
            .collect();
        Frame::from_parts(names, index, pairs)
    }

    fn from_parts(
        names: Vec<String>,
        index: HashMap<String, WorldId>,
        pairs: impl IntoIterator<Item = (WorldId, WorldId)>,
    ) -> Frame {
        let n = names.len();
        let mut succ = vec![FixedBitSet::with_capacity(n); n];
        let mut pred = vec![FixedBitSet::with_capacity(n); n];
        for (a, b) in pairs {
            succ[a].insert(b);
            pred[b].insert(a);
        }
        Frame {
            names,
            index,
            succ,
            pred,
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn worlds(&self) -> std::ops::Range<WorldId> {
        0..self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, w: WorldId) -> &str {
        &self.names[w]
    }

    pub fn id(&self, name: &str) -> Option<WorldId> {
        self.index.get(name).copied()
    }

    pub fn related(&self, a: WorldId, b: WorldId) -> bool {
        self.succ[a].contains(b)
    }

    /// `◁(a)`
    pub fn succ(&self, a: WorldId) -> &WorldSet {
        &self.succ[a]
    }

    /// `◁⁻¹(a)`
    pub fn pred(&self, a: WorldId) -> &WorldSet {
        &self.pred[a]
    }

    pub fn pairs(&self) -> impl Iterator<Item = (WorldId, WorldId)> + '_ {
        self.worlds()
            .flat_map(move |a| self.succ[a].ones().map(move |b| (a, b)))
    }

    pub fn pair_count(&self) -> usize {
        self.succ.iter().map(|s| s.count_ones(..)).sum()
    }

    pub fn named_pairs(&self) -> Vec<(String, String)> {
        self.pairs()
            .map(|(a, b)| (self.names[a].clone(), self.names[b].clone()))
            .collect()
    }

    pub fn empty_set(&self) -> WorldSet {
        FixedBitSet::with_capacity(self.len())
    }

    pub fn full_set(&self) -> WorldSet {
        let mut s = self.empty_set();
        s.insert_range(..);
        s
    }

    pub fn set_of(&self, worlds: impl IntoIterator<Item = WorldId>) -> WorldSet {
        let mut s = self.empty_set();
        s.extend(worlds);
        s
    }

    pub fn set_names(&self, s: &WorldSet) -> Vec<&str> {
        s.ones().map(|w| self.name(w)).collect()
    }

    /// `◁(S) = ⋃_{x∈S} ◁(x)`
    pub fn image(&self, s: &WorldSet) -> WorldSet {
        let mut out = self.empty_set();
        for x in s.ones() {
            out.union_with(&self.succ[x]);
        }
        out
    }

    /// `◁⁻¹(S)`
    pub fn preimage(&self, s: &WorldSet) -> WorldSet {
        let mut out = self.empty_set();
        for x in s.ones() {
            out.union_with(&self.pred[x]);
        }
        out
    }

    pub fn reversed(&self) -> Frame {
        Frame {
            names: self.names.clone(),
            index: self.index.clone(),
            succ: self.pred.clone(),
            pred: self.succ.clone(),
        }
    }

    pub fn transitive_closure(&self) -> Frame {
        let mut succ = self.succ.clone();
        for k in self.worlds() {
            let via = succ[k].clone();
            for row in succ.iter_mut() {
                if row.contains(k) {
                    row.union_with(&via);
                }
            }
        }
        let pairs: Vec<_> = self
            .worlds()
            .flat_map(|a| succ[a].ones().map(move |b| (a, b)))
            .collect();
        Frame::from_parts(self.names.clone(), self.index.clone(), pairs)
    }

    /// Adds every pair in `extra` to the relation.
    pub fn with_pairs(&self, extra: impl IntoIterator<Item = (WorldId, WorldId)>) -> Frame {
        let pairs: Vec<_> = self.pairs().chain(extra).collect();
        Frame::from_parts(self.names.clone(), self.index.clone(), pairs)
    }

    /// Subframe on `keep`, relation restricted.
    pub fn restrict(&self, keep: &WorldSet) -> Frame {
        let kept: Vec<WorldId> = keep.ones().collect();
        let names: Vec<String> = kept.iter().map(|&w| self.names[w].clone()).collect();
        let mut new_id = vec![usize::MAX; self.len()];
        for (i, &w) in kept.iter().enumerate() {
            new_id[w] = i;
        }
        let pairs: Vec<_> = self
            .pairs()
            .filter(|&(a, b)| keep.contains(a) && keep.contains(b))
            .map(|(a, b)| (new_id[a], new_id[b]))
            .collect();
        Frame::from_indices(names, pairs)
    }

    /// Worlds `{x} ∪ ◁(x)`. Equal to the generated subframe when the frame is
    /// transitive.
    pub fn one_step_cone(&self, x: WorldId) -> WorldSet {
        let mut s = self.succ[x].clone();
        s.insert(x);
        s
    }

    /// Subframe on `M_x = {x} ∪ ◁(x)`, relation restricted.
    pub fn generated_subframe(&self, x: WorldId) -> Frame {
        self.restrict(&self.one_step_cone(x))
    }
}

impl fmt::Debug for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Frame")
            .field("worlds", &self.names)
            .field("rel", &self.named_pairs())
            .finish()
    }
}

/// Renders a world set as `{a,b,c}`.
pub fn format_set(frame: &Frame, s: &WorldSet) -> String {
    format!("{{{}}}", frame.set_names(s).join(","))
}

pub fn name_set(frame: &Frame, s: &WorldSet) -> BTreeSet<String> {
    s.ones().map(|w| frame.name(w).to_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frame(worlds: &[&str], pairs: &[(&str, &str)]) -> Frame {
        Frame::new(worlds.iter().copied(), pairs.iter().copied()).unwrap()
    }

    #[test]
    fn worlds_sorted_and_validated() {
        let f = frame(&["b", "a"], &[("b", "a")]);
        assert_eq!(f.names(), ["a", "b"]);
        assert!(f.related(1, 0));
        assert_eq!(
            Frame::new(["a", "a"], []).unwrap_err(),
            FrameError::DuplicateWorld("a".into())
        );
        assert_eq!(
            Frame::new(["a"], [("a", "z")]).unwrap_err(),
            FrameError::UnknownWorld("z".into())
        );
    }

    #[test]
    fn image_preimage_basics() {
        let f = frame(&["a", "b"], &[("a", "b")]);
        assert_eq!(f.image(&f.empty_set()), f.empty_set());
        assert_eq!(f.preimage(&f.set_of([1])), f.set_of([0]));
        assert_eq!(f.image(&f.set_of([0])), f.set_of([1]));
    }

    #[test]
    fn closure_and_subframe() {
        let f = frame(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).transitive_closure();
        assert!(f.related(0, 2));
        assert_eq!(f.pair_count(), 3);
        let g = f.generated_subframe(1);
        assert_eq!(g.names(), ["b", "c"]);
        assert_eq!(g.named_pairs(), [("b".to_string(), "c".to_string())]);
        let iso = frame(&["a"], &[]).generated_subframe(0);
        assert_eq!(iso.len(), 1);
        assert_eq!(iso.pair_count(), 0);
    }
}
