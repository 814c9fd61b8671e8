//! Frame validity by exhaustive valuation enumeration.

use std::collections::BTreeMap;

use crate::formula::Formula;
use crate::kripke::{format_set, Frame, WorldId, WorldSet};

use super::{truth_set, Model};

/// Default cap on enumerated valuations.
pub const DEFAULT_BUDGET: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("validity check needs 2^{required_log2} valuations, budget is {budget}")]
pub struct BudgetExceeded {
    /// `|worlds| · |atoms(f)|`
    pub required_log2: u32,
    pub budget: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Validity {
    Valid,
    Counter {
        world: WorldId,
        valuation: BTreeMap<String, WorldSet>,
    },
}

impl Validity {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validity::Valid)
    }

    /// `VALID` or `COUNTER world=<id> valuation={a:{..},..}`
    pub fn render(&self, frame: &Frame) -> String {
        match self {
            Validity::Valid => "VALID".to_string(),
            Validity::Counter { world, valuation } => format!(
                "COUNTER world={} valuation={}",
                frame.name(*world),
                render_valuation(frame, valuation)
            ),
        }
    }
}

pub fn render_valuation(frame: &Frame, valuation: &BTreeMap<String, WorldSet>) -> String {
    let parts: Vec<String> = valuation
        .iter()
        .map(|(a, s)| format!("{a}:{}", format_set(frame, s)))
        .collect();
    format!("{{{}}}", parts.join(","))
}

/// Postfix program over world masks; children precede parents.
#[derive(Clone, Copy)]
enum Op {
    Top,
    Bottom,
    Atom(usize),
    Not(usize),
    And(usize, usize),
    Or(usize, usize),
    Implies(usize, usize),
    Iff(usize, usize),
    Box(usize),
    Diamond(usize),
}

fn compile(f: &Formula, atoms: &[String], ops: &mut Vec<Op>) -> usize {
    let op = match f {
        Formula::Top => Op::Top,
        Formula::Bottom => Op::Bottom,
        Formula::Atom(a) => Op::Atom(
            atoms
                .iter()
                .position(|x| x == a.as_str())
                .expect("atom collected"),
        ),
        Formula::Not(g) => Op::Not(compile(g, atoms, ops)),
        Formula::Box(g) => Op::Box(compile(g, atoms, ops)),
        Formula::Diamond(g) => Op::Diamond(compile(g, atoms, ops)),
        Formula::And(a, b) => Op::And(compile(a, atoms, ops), compile(b, atoms, ops)),
        Formula::Or(a, b) => Op::Or(compile(a, atoms, ops), compile(b, atoms, ops)),
        Formula::Implies(a, b) => Op::Implies(compile(a, atoms, ops), compile(b, atoms, ops)),
        Formula::Iff(a, b) => Op::Iff(compile(a, atoms, ops), compile(b, atoms, ops)),
    };
    ops.push(op);
    ops.len() - 1
}

/// Evaluator for frames of at most 64 worlds: one `u64` mask per node.
struct MaskEval {
    ops: Vec<Op>,
    succ: Vec<u64>,
    full: u64,
    vals: Vec<u64>,
}

impl MaskEval {
    fn new(frame: &Frame, f: &Formula, atoms: &[String]) -> MaskEval {
        let n = frame.len();
        let mut ops = Vec::new();
        compile(f, atoms, &mut ops);
        let succ = frame
            .worlds()
            .map(|w| frame.succ(w).ones().fold(0u64, |m, v| m | (1 << v)))
            .collect();
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let vals = vec![0; ops.len()];
        MaskEval {
            ops,
            succ,
            full,
            vals,
        }
    }

    fn run(&mut self, atom_masks: &[u64]) -> u64 {
        for i in 0..self.ops.len() {
            let v = &self.vals;
            let r = match self.ops[i] {
                Op::Top => self.full,
                Op::Bottom => 0,
                Op::Atom(a) => atom_masks[a],
                Op::Not(c) => !v[c] & self.full,
                Op::And(a, b) => v[a] & v[b],
                Op::Or(a, b) => v[a] | v[b],
                Op::Implies(a, b) => (!v[a] | v[b]) & self.full,
                Op::Iff(a, b) => !(v[a] ^ v[b]) & self.full,
                Op::Box(c) => {
                    let mut m = 0;
                    for (w, s) in self.succ.iter().enumerate() {
                        if s & !v[c] == 0 {
                            m |= 1 << w;
                        }
                    }
                    m
                }
                Op::Diamond(c) => {
                    let mut m = 0;
                    for (w, s) in self.succ.iter().enumerate() {
                        if s & v[c] != 0 {
                            m |= 1 << w;
                        }
                    }
                    m
                }
            };
            self.vals[i] = r;
        }
        self.vals[self.ops.len() - 1]
    }
}

/// Enumerates every valuation of `atoms(f)` (atoms sorted, each atom owning
/// `|worlds|` consecutive bits of a binary counter, world `w` at bit `w`) and
/// returns the first counter-model: least counter value, then least world.
pub fn frame_validates(
    frame: &Frame,
    f: &Formula,
    budget: u64,
) -> Result<Validity, BudgetExceeded> {
    let atoms: Vec<String> = f.atoms().into_iter().collect();
    let n = frame.len();
    let bits = n * atoms.len();
    let required_log2 = u32::try_from(bits).unwrap_or(u32::MAX);
    if bits >= 64 || (1u64 << bits) > budget {
        return Err(BudgetExceeded {
            required_log2,
            budget,
        });
    }
    if n == 0 {
        return Ok(Validity::Valid);
    }
    if n > 64 {
        // Only reachable with no atoms: a single valuation.
        let ts = truth_set(&Model::bare(frame.clone()), f);
        return Ok(match (0..n).find(|&w| !ts.contains(w)) {
            None => Validity::Valid,
            Some(world) => Validity::Counter {
                world,
                valuation: BTreeMap::new(),
            },
        });
    }
    let mut eval = MaskEval::new(frame, f, &atoms);
    let full = eval.full;
    let mut masks = vec![0u64; atoms.len()];
    for counter in 0..(1u64 << bits) {
        for (a, m) in masks.iter_mut().enumerate() {
            *m = (counter >> (a * n)) & full;
        }
        let holds = eval.run(&masks);
        if holds != full {
            let world = (!holds & full).trailing_zeros() as usize;
            let valuation = atoms
                .iter()
                .zip(&masks)
                .map(|(a, &m)| (a.clone(), frame.set_of((0..n).filter(|w| m >> w & 1 == 1))))
                .collect();
            return Ok(Validity::Counter { world, valuation });
        }
    }
    Ok(Validity::Valid)
}
