//! Bisimulations between two models.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::kripke::WorldId;

use super::Model;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Clause {
    Empty,
    Forth,
    Back,
    Atoms,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Clause::Empty => "empty",
            Clause::Forth => "forth",
            Clause::Back => "back",
            Clause::Atoms => "atoms",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BisimVerdict {
    Holds,
    Fails {
        clause: Clause,
        /// The related pair `(w, w')` at which the clause breaks.
        pair: Option<(WorldId, WorldId)>,
        /// Forth: the unmatched successor `v` of `w`. Back: the unmatched
        /// successor `v'` of `w'`.
        step: Option<WorldId>,
        atom: Option<String>,
    },
}

impl BisimVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, BisimVerdict::Holds)
    }

    pub fn render(&self, m1: &Model, m2: &Model) -> String {
        match self {
            BisimVerdict::Holds => "HOLDS".to_string(),
            BisimVerdict::Fails {
                clause,
                pair,
                step,
                atom,
            } => {
                let mut s = format!("FAILS clause={clause}");
                if let Some((w, w2)) = pair {
                    s += &format!(" pair=({},{})", m1.frame.name(*w), m2.frame.name(*w2));
                }
                if let Some(v) = step {
                    let frame = if *clause == Clause::Back {
                        &m2.frame
                    } else {
                        &m1.frame
                    };
                    s += &format!(" step={}", frame.name(*v));
                }
                if let Some(a) = atom {
                    s += &format!(" atom={a}");
                }
                s
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bisimulation {
    pub pairs: BTreeSet<(WorldId, WorldId)>,
}

impl Bisimulation {
    pub fn render(&self, m1: &Model, m2: &Model) -> Vec<String> {
        self.pairs
            .iter()
            .map(|&(a, b)| format!("({},{})", m1.frame.name(a), m2.frame.name(b)))
            .collect()
    }
}

fn atom_names(m1: &Model, m2: &Model) -> BTreeSet<String> {
    m1.valuation
        .keys()
        .chain(m2.valuation.keys())
        .cloned()
        .collect()
}

fn holds_at(m: &Model, atom: &str, w: WorldId) -> bool {
    m.valuation.get(atom).is_some_and(|s| s.contains(w))
}

/// First atom on which `w` and `w2` disagree. Agreement is required in both
/// directions so that negated atoms are preserved too.
fn atom_disagreement(
    m1: &Model,
    m2: &Model,
    atoms: &BTreeSet<String>,
    w: WorldId,
    w2: WorldId,
) -> Option<String> {
    atoms
        .iter()
        .find(|a| holds_at(m1, a, w) != holds_at(m2, a, w2))
        .cloned()
}

type Rows = Vec<FixedBitSet>;

fn forth_gap(m1: &Model, m2: &Model, z: &Rows, w: WorldId, w2: WorldId) -> Option<WorldId> {
    m1.frame
        .succ(w)
        .ones()
        .find(|&v| z[v].is_disjoint(m2.frame.succ(w2)))
}

fn back_gap(m1: &Model, m2: &Model, z: &Rows, w: WorldId, w2: WorldId) -> Option<WorldId> {
    m2.frame
        .succ(w2)
        .ones()
        .find(|&v2| !m1.frame.succ(w).ones().any(|v| z[v].contains(v2)))
}

fn rows(m1: &Model, m2: &Model, pairs: impl IntoIterator<Item = (WorldId, WorldId)>) -> Rows {
    let mut z = vec![FixedBitSet::with_capacity(m2.frame.len()); m1.frame.len()];
    for (a, b) in pairs {
        z[a].insert(b);
    }
    z
}

/// Checks the atom, forth and back clauses, in that order, over pairs in
/// ascending order.
pub fn is_bisimulation(
    m1: &Model,
    m2: &Model,
    pairs: &BTreeSet<(WorldId, WorldId)>,
) -> BisimVerdict {
    if pairs.is_empty() {
        return BisimVerdict::Fails {
            clause: Clause::Empty,
            pair: None,
            step: None,
            atom: None,
        };
    }
    let atoms = atom_names(m1, m2);
    let z = rows(m1, m2, pairs.iter().copied());
    for &(w, w2) in pairs {
        if let Some(a) = atom_disagreement(m1, m2, &atoms, w, w2) {
            return BisimVerdict::Fails {
                clause: Clause::Atoms,
                pair: Some((w, w2)),
                step: None,
                atom: Some(a),
            };
        }
        if let Some(v) = forth_gap(m1, m2, &z, w, w2) {
            return BisimVerdict::Fails {
                clause: Clause::Forth,
                pair: Some((w, w2)),
                step: Some(v),
                atom: None,
            };
        }
        if let Some(v2) = back_gap(m1, m2, &z, w, w2) {
            return BisimVerdict::Fails {
                clause: Clause::Back,
                pair: Some((w, w2)),
                step: Some(v2),
                atom: None,
            };
        }
    }
    BisimVerdict::Holds
}

/// Greatest fixpoint: start from all atom-agreeing pairs (the full product
/// when neither model has atoms) and prune pairs violating forth or back
/// until stable. `None` when nothing survives.
pub fn coarsest_bisimulation(m1: &Model, m2: &Model) -> Option<Bisimulation> {
    let atoms = atom_names(m1, m2);
    let mut z = rows(
        m1,
        m2,
        m1.frame.worlds().flat_map(|w| {
            let atoms = &atoms;
            m2.frame
                .worlds()
                .filter(move |&w2| atom_disagreement(m1, m2, atoms, w, w2).is_none())
                .map(move |w2| (w, w2))
        }),
    );
    loop {
        let mut changed = false;
        for w in m1.frame.worlds() {
            let row: Vec<WorldId> = z[w].ones().collect();
            for w2 in row {
                if forth_gap(m1, m2, &z, w, w2).is_some() || back_gap(m1, m2, &z, w, w2).is_some() {
                    z[w].set(w2, false);
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let pairs: BTreeSet<_> = z
        .iter()
        .enumerate()
        .flat_map(|(w, row)| row.ones().map(move |w2| (w, w2)))
        .collect();
    (!pairs.is_empty()).then_some(Bisimulation { pairs })
}

/// Name pairs to id pairs; `None` names the first unknown world.
pub fn resolve_pairs(
    m1: &Model,
    m2: &Model,
    named: &[(String, String)],
) -> Result<BTreeSet<(WorldId, WorldId)>, String> {
    named
        .iter()
        .map(|(a, b)| {
            let ia = m1.frame.id(a).ok_or_else(|| a.clone())?;
            let ib = m2.frame.id(b).ok_or_else(|| b.clone())?;
            Ok((ia, ib))
        })
        .collect()
}

/// Groups a relation by left world, for reports.
pub fn by_left(b: &Bisimulation) -> BTreeMap<WorldId, Vec<WorldId>> {
    let mut out: BTreeMap<WorldId, Vec<WorldId>> = BTreeMap::new();
    for &(a, c) in &b.pairs {
        out.entry(a).or_default().push(c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kripke::Frame;

    fn bare(worlds: &[&str], pairs: &[(&str, &str)]) -> Model {
        Model::bare(Frame::new(worlds.iter().copied(), pairs.iter().copied()).unwrap())
    }

    #[test]
    fn identity_is_bisimulation() {
        let m = bare(&["a", "b"], &[("a", "b"), ("b", "b")]);
        let id: BTreeSet<_> = m.frame.worlds().map(|w| (w, w)).collect();
        assert!(is_bisimulation(&m, &m, &id).holds());
    }

    #[test]
    fn empty_relation_rejected() {
        let m = bare(&["a"], &[]);
        assert_eq!(
            is_bisimulation(&m, &m, &BTreeSet::new()),
            BisimVerdict::Fails {
                clause: Clause::Empty,
                pair: None,
                step: None,
                atom: None
            }
        );
    }

    #[test]
    fn atom_clause_two_way() {
        let f = Frame::new(["a"], []).unwrap();
        let m1 = Model::new(f.clone(), &[("p".to_string(), vec!["a"])].into()).unwrap();
        let m2 = Model::bare(f);
        let z: BTreeSet<_> = [(0, 0)].into();
        assert!(!is_bisimulation(&m1, &m2, &z).holds());
        assert!(!is_bisimulation(&m2, &m1, &z).holds());
        assert!(coarsest_bisimulation(&m1, &m2).is_none());
    }

    #[test]
    fn unravelled_loop_bisimilar_to_cycle() {
        let loop1 = bare(&["a"], &[("a", "a")]);
        let cycle = bare(&["b", "c"], &[("b", "c"), ("c", "b")]);
        let z = coarsest_bisimulation(&loop1, &cycle).unwrap();
        assert_eq!(z.pairs.len(), 2);
        let dead = bare(&["d"], &[]);
        assert!(coarsest_bisimulation(&loop1, &dead).is_none());
    }
}
