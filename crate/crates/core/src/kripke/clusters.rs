//! Clusters, successor clusters and chains of clusters on transitive frames.

use fixedbitset::FixedBitSet;

use super::{check_property, Frame, FrameProperty, PropertyVerdict, WorldId, WorldSet};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClusterError {
    #[error("frame is not transitive (violating triple {0:?})")]
    NotTransitive(Vec<WorldId>),
    #[error("frame is not dense (violating pair {0:?})")]
    NotDense(Vec<WorldId>),
}

fn require_transitive(frame: &Frame) -> Result<(), ClusterError> {
    match check_property(frame, FrameProperty::Transitive) {
        PropertyVerdict::Holds => Ok(()),
        PropertyVerdict::Counterexample(w) => Err(ClusterError::NotTransitive(w)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterDecomposition {
    /// Clusters ordered by least member; members ascending.
    pub clusters: Vec<Vec<WorldId>>,
    pub cluster_of: Vec<usize>,
    /// Singleton `{x}` with `¬(x ◁ x)`.
    pub degenerate: Vec<bool>,
    /// Per world `x`: indices of the successor clusters `S_x`, ascending.
    pub successors: Vec<Vec<usize>>,
    /// `above[i]` holds `j` iff `i ≠ j` and cluster `i` sees cluster `j`.
    pub above: Vec<FixedBitSet>,
}

impl ClusterDecomposition {
    pub fn cluster_set(&self, frame: &Frame, c: usize) -> WorldSet {
        frame.set_of(self.clusters[c].iter().copied())
    }
}

/// `C_x = {x} ∪ {y : y ◁ x ∧ x ◁ y}`. A successor cluster `C ≠ C_x` of `x`
/// is seen by `x` and every `y'` with `x ◁ y' ◁ c ∈ C` lies in `C ∪ C_x`.
pub fn clusters(frame: &Frame) -> Result<ClusterDecomposition, ClusterError> {
    require_transitive(frame)?;
    let n = frame.len();
    let mut cluster_of = vec![usize::MAX; n];
    let mut members: Vec<Vec<WorldId>> = Vec::new();
    for x in frame.worlds() {
        if cluster_of[x] != usize::MAX {
            continue;
        }
        let mut c = frame.succ(x).clone();
        c.intersect_with(frame.pred(x));
        c.insert(x);
        let idx = members.len();
        for w in c.ones() {
            cluster_of[w] = idx;
        }
        members.push(c.ones().collect());
    }
    let degenerate: Vec<bool> = members
        .iter()
        .map(|m| m.len() == 1 && !frame.related(m[0], m[0]))
        .collect();
    let k = members.len();
    let mut above = vec![FixedBitSet::with_capacity(k); k];
    for (i, m) in members.iter().enumerate() {
        for w in frame.succ(m[0]).ones() {
            if cluster_of[w] != i {
                above[i].insert(cluster_of[w]);
            }
        }
    }
    let sets: Vec<WorldSet> = members
        .iter()
        .map(|m| frame.set_of(m.iter().copied()))
        .collect();
    let successors = frame
        .worlds()
        .map(|x| {
            let own = cluster_of[x];
            above[own]
                .ones()
                .filter(|&c| {
                    let mut allowed = sets[c].clone();
                    allowed.union_with(&sets[own]);
                    members[c].iter().all(|&m| {
                        let mut between = frame.succ(x).clone();
                        between.intersect_with(frame.pred(m));
                        between.is_subset(&allowed)
                    })
                })
                .collect()
        })
        .collect();
    Ok(ClusterDecomposition {
        clusters: members,
        cluster_of,
        degenerate,
        successors,
        above,
    })
}

/// Tuple of clusters `(C₁,…,C_k)`, each a list of world ids of the ambient
/// frame. `C₁` is the cluster of the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterChain(pub Vec<Vec<WorldId>>);

impl ClusterChain {
    pub fn render(&self, frame: &Frame) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|c| {
                let names: Vec<&str> = c.iter().map(|&w| frame.name(w)).collect();
                format!("{{{}}}", names.join(","))
            })
            .collect();
        format!("({})", parts.join(","))
    }
}

/// All maximal chains `(C_x, S, S₁, …)` with `S ∈ S_x`, computed inside the
/// generated subframe of `x`. For `c ∈ C_l`, `◁⁻¹(c)` within that subframe
/// must equal `C₁ ∪ … ∪ C_l` (dropping `C_l` when it is degenerate).
pub fn chains_of_clusters(frame: &Frame, x: WorldId) -> Result<Vec<ClusterChain>, ClusterError> {
    require_transitive(frame)?;
    let sub = frame.generated_subframe(x);
    let dec = clusters(&sub)?;
    let root = sub.id(frame.name(x)).expect("root kept in its subframe");
    let sets: Vec<WorldSet> = (0..dec.clusters.len())
        .map(|c| dec.cluster_set(&sub, c))
        .collect();

    let fits = |below: &WorldSet, c: usize| {
        let mut expected = below.clone();
        if !dec.degenerate[c] {
            expected.union_with(&sets[c]);
        }
        dec.clusters[c].iter().all(|&w| *sub.pred(w) == expected)
    };

    let start = dec.cluster_of[root];
    if !fits(&sub.empty_set(), start) {
        return Ok(Vec::new());
    }
    let mut found = Vec::new();
    let mut stack = vec![(vec![start], sets[start].clone())];
    while let Some((chain, below)) = stack.pop() {
        let next: Vec<usize> = (0..dec.clusters.len())
            .filter(|c| !chain.contains(c) && fits(&below, *c))
            .collect();
        if next.is_empty() {
            if chain.len() > 1 {
                found.push(chain);
            }
            continue;
        }
        for c in next.into_iter().rev() {
            let mut extended = chain.clone();
            extended.push(c);
            let mut covered = below.clone();
            covered.union_with(&sets[c]);
            stack.push((extended, covered));
        }
    }
    Ok(found
        .into_iter()
        .map(|chain| {
            ClusterChain(
                chain
                    .into_iter()
                    .map(|c| {
                        dec.clusters[c]
                            .iter()
                            .map(|&w| frame.id(sub.name(w)).expect("subframe world in frame"))
                            .collect()
                    })
                    .collect(),
            )
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClusterCriterion {
    Holds,
    Violated {
        x: WorldId,
        /// The non-degenerate successor cluster whose image holds `y1`, `y2`.
        successor: Vec<WorldId>,
        y1: WorldId,
        y2: WorldId,
        /// A world of `⋃S_x` seeing neither `y1` nor `y2`.
        uncovered: WorldId,
    },
}

impl ClusterCriterion {
    pub fn holds(&self) -> bool {
        matches!(self, ClusterCriterion::Holds)
    }
}

/// Successor-cluster characterisation of the after formula on finite
/// transitive dense frames: for every irreflexive `x`, every non-degenerate
/// `S ∈ S_x` and every incomparable distinct `y₁, y₂ ∈ ◁(S)`,
/// `⋃S_x ⊆ ◁⁻¹(y₁) ∪ ◁⁻¹(y₂)`.
pub fn aaf_cluster_criterion(frame: &Frame) -> Result<ClusterCriterion, ClusterError> {
    let dec = clusters(frame)?;
    if let PropertyVerdict::Counterexample(w) = check_property(frame, FrameProperty::Dense) {
        return Err(ClusterError::NotDense(w));
    }
    for x in frame.worlds().filter(|&x| !frame.related(x, x)) {
        let mut union = frame.empty_set();
        for &c in &dec.successors[x] {
            union.union_with(&dec.cluster_set(frame, c));
        }
        for &s in dec.successors[x].iter().filter(|&&s| !dec.degenerate[s]) {
            let image = frame.image(&dec.cluster_set(frame, s));
            for y1 in image.ones() {
                for y2 in image.ones().filter(|&y2| y2 > y1) {
                    if frame.related(y1, y2) || frame.related(y2, y1) {
                        continue;
                    }
                    let mut cover = frame.pred(y1).clone();
                    cover.union_with(frame.pred(y2));
                    if let Some(uncovered) = union.difference(&cover).next() {
                        return Ok(ClusterCriterion::Violated {
                            x,
                            successor: dec.clusters[s].clone(),
                            y1,
                            y2,
                            uncovered,
                        });
                    }
                }
            }
        }
    }
    Ok(ClusterCriterion::Holds)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frame(worlds: &[&str], pairs: &[(&str, &str)]) -> Frame {
        Frame::new(worlds.iter().copied(), pairs.iter().copied()).unwrap()
    }

    #[test]
    fn single_irreflexive_point_is_degenerate() {
        let d = clusters(&frame(&["a"], &[])).unwrap();
        assert_eq!(d.clusters, vec![vec![0]]);
        assert_eq!(d.degenerate, vec![true]);
    }

    #[test]
    fn two_point_loop_is_one_cluster() {
        let f = frame(&["a", "b"], &[("a", "b"), ("b", "a")]).transitive_closure();
        let d = clusters(&f).unwrap();
        assert_eq!(d.clusters, vec![vec![0, 1]]);
        assert_eq!(d.degenerate, vec![false]);
        assert!(d.successors[0].is_empty());
    }

    #[test]
    fn requires_transitivity() {
        let f = frame(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        assert_eq!(
            clusters(&f).unwrap_err(),
            ClusterError::NotTransitive(vec![0, 1, 2])
        );
        assert!(chains_of_clusters(&f, 0).is_err());
    }

    #[test]
    fn successor_clusters_skip_intermediates() {
        let f = frame(
            &["a", "b", "c"],
            &[("a", "b"), ("b", "c"), ("b", "b"), ("c", "c")],
        )
        .transitive_closure();
        let d = clusters(&f).unwrap();
        assert_eq!(d.successors[0], vec![d.cluster_of[1]]);
        assert_eq!(d.successors[1], vec![d.cluster_of[2]]);
        assert!(d.successors[2].is_empty());
    }

    #[test]
    fn linear_frame_has_one_chain() {
        let f = frame(
            &["a", "b", "x"],
            &[("x", "a"), ("a", "b"), ("a", "a"), ("b", "b")],
        )
        .transitive_closure();
        let x = f.id("x").unwrap();
        let chains = chains_of_clusters(&f, x).unwrap();
        assert_eq!(chains.len(), 1);
        assert_eq!(chains[0].render(&f), "({x},{a},{b})");
    }

    #[test]
    fn criterion_vacuous_without_irreflexive_points() {
        let f = frame(
            &["a", "b", "c"],
            &[("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("a", "c")],
        );
        assert!(aaf_cluster_criterion(&f).unwrap().holds());
    }

    #[test]
    fn criterion_requires_density() {
        let f = frame(&["a", "b"], &[("a", "b")]);
        assert_eq!(
            aaf_cluster_criterion(&f).unwrap_err(),
            ClusterError::NotDense(vec![0, 1])
        );
    }
}
