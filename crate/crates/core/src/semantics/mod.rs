//! Models, satisfaction, frame validity and bisimulation.

mod bisim;
mod validity;

use std::collections::BTreeMap;

use crate::formula::{Atom, Formula, InvalidAtom};
use crate::kripke::{Frame, WorldId, WorldSet};

pub use bisim::{
    by_left, coarsest_bisimulation, is_bisimulation, resolve_pairs, BisimVerdict, Bisimulation,
    Clause,
};
pub use validity::{frame_validates, render_valuation, BudgetExceeded, Validity, DEFAULT_BUDGET};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("unknown world {0:?}")]
    UnknownWorld(String),
    #[error(transparent)]
    InvalidAtom(#[from] InvalidAtom),
}

/// Frame plus valuation. Atoms missing from the valuation are false
/// everywhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Model {
    pub frame: Frame,
    pub valuation: BTreeMap<String, WorldSet>,
}

impl Model {
    pub fn new<S: AsRef<str>>(
        frame: Frame,
        valuation: &BTreeMap<String, Vec<S>>,
    ) -> Result<Model, ModelError> {
        let mut v = BTreeMap::new();
        for (atom, worlds) in valuation {
            Atom::new(atom)?;
            let mut set = frame.empty_set();
            for w in worlds {
                let w = w.as_ref();
                set.insert(
                    frame
                        .id(w)
                        .ok_or_else(|| ModelError::UnknownWorld(w.to_string()))?,
                );
            }
            v.insert(atom.clone(), set);
        }
        Ok(Model {
            frame,
            valuation: v,
        })
    }

    /// Model with every atom false everywhere.
    pub fn bare(frame: Frame) -> Model {
        Model {
            frame,
            valuation: BTreeMap::new(),
        }
    }

    pub fn world(&self, name: &str) -> Result<WorldId, ModelError> {
        self.frame
            .id(name)
            .ok_or_else(|| ModelError::UnknownWorld(name.to_string()))
    }

    fn atom_set(&self, name: &str) -> WorldSet {
        self.valuation
            .get(name)
            .cloned()
            .unwrap_or_else(|| self.frame.empty_set())
    }
}

/// `|[f]|`, by structural recursion. `Diamond` is evaluated as an
/// existential over successors, `Box` as a universal.
pub fn truth_set(model: &Model, f: &Formula) -> WorldSet {
    let frame = &model.frame;
    match f {
        Formula::Top => frame.full_set(),
        Formula::Bottom => frame.empty_set(),
        Formula::Atom(a) => model.atom_set(a.as_str()),
        Formula::Not(g) => complement(frame, &truth_set(model, g)),
        Formula::And(a, b) => {
            let mut s = truth_set(model, a);
            s.intersect_with(&truth_set(model, b));
            s
        }
        Formula::Or(a, b) => {
            let mut s = truth_set(model, a);
            s.union_with(&truth_set(model, b));
            s
        }
        Formula::Implies(a, b) => {
            let mut s = complement(frame, &truth_set(model, a));
            s.union_with(&truth_set(model, b));
            s
        }
        Formula::Iff(a, b) => {
            let (sa, sb) = (truth_set(model, a), truth_set(model, b));
            frame.set_of(frame.worlds().filter(|&w| sa.contains(w) == sb.contains(w)))
        }
        Formula::Box(g) => {
            let s = truth_set(model, g);
            frame.set_of(frame.worlds().filter(|&w| frame.succ(w).is_subset(&s)))
        }
        Formula::Diamond(g) => {
            let s = truth_set(model, g);
            frame.set_of(frame.worlds().filter(|&w| !frame.succ(w).is_disjoint(&s)))
        }
    }
}

fn complement(frame: &Frame, s: &WorldSet) -> WorldSet {
    let mut c = frame.full_set();
    c.difference_with(s);
    c
}

pub fn satisfies(model: &Model, x: &str, f: &Formula) -> Result<bool, ModelError> {
    Ok(satisfies_at(model, model.world(x)?, f))
}

pub fn satisfies_at(model: &Model, x: WorldId, f: &Formula) -> bool {
    let frame = &model.frame;
    match f {
        Formula::Top => true,
        Formula::Bottom => false,
        Formula::Atom(a) => model
            .valuation
            .get(a.as_str())
            .is_some_and(|s| s.contains(x)),
        Formula::Not(g) => !satisfies_at(model, x, g),
        Formula::And(a, b) => satisfies_at(model, x, a) && satisfies_at(model, x, b),
        Formula::Or(a, b) => satisfies_at(model, x, a) || satisfies_at(model, x, b),
        Formula::Implies(a, b) => !satisfies_at(model, x, a) || satisfies_at(model, x, b),
        Formula::Iff(a, b) => satisfies_at(model, x, a) == satisfies_at(model, x, b),
        Formula::Box(g) => frame.succ(x).ones().all(|y| satisfies_at(model, y, g)),
        Formula::Diamond(g) => frame.succ(x).ones().any(|y| satisfies_at(model, y, g)),
    }
}
