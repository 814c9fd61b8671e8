//! Seeded generators for frames, models and formulas.
//!
//! Every consumer draws from its own ChaCha stream of the user seed, so
//! results do not depend on how work is split up.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::formula::Formula;
use crate::kripke::Frame;
use crate::semantics::Model;

pub type Rng64 = ChaCha8Rng;

/// Generator for stream `stream` of `seed`.
pub fn stream(seed: u64, stream: u64) -> Rng64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// World names `w0 … w{n-1}`; lexicographic order matches numeric order for
/// `n ≤ 10`.
pub fn world_names(n: usize) -> Vec<String> {
    let width = n.saturating_sub(1).to_string().len();
    (0..n).map(|i| format!("w{i:0width$}")).collect()
}

/// Frame with `1..=max_worlds` worlds. Edge and loop probabilities are drawn
/// per frame so sparse and dense frames both occur.
pub fn random_frame(rng: &mut Rng64, max_worlds: usize) -> Frame {
    let n = rng.gen_range(1..=max_worlds);
    let edge = rng.gen_range(0.1..0.7);
    let looped = rng.gen_range(0.0..1.0);
    random_frame_with(rng, n, edge, looped)
}

pub fn random_frame_with(rng: &mut Rng64, n: usize, edge: f64, looped: f64) -> Frame {
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let p = if a == b { looped } else { edge };
            if rng.gen_bool(p) {
                pairs.push((a, b));
            }
        }
    }
    Frame::from_indices(world_names(n), pairs)
}

/// Transitive closure of a random frame.
pub fn random_transitive_frame(rng: &mut Rng64, max_worlds: usize) -> Frame {
    let n = rng.gen_range(1..=max_worlds);
    let edge = rng.gen_range(0.1..0.5);
    let looped = rng.gen_range(0.3..1.0);
    random_frame_with(rng, n, edge, looped).transitive_closure()
}

/// Five worlds around a planted refutation of the after formula: an
/// irreflexive root seeing a reflexive world with two incomparable
/// successors and a reflexive side world, under shuffled names. Extra edges
/// are added with probability `extra` before closing, which repairs the
/// refutation in some draws.
pub fn planted_aaf_frame(rng: &mut Rng64, extra: f64) -> Frame {
    let mut role: Vec<usize> = (0..5).collect();
    role.shuffle(rng);
    let [root, mid, y1, y2, side] = [role[0], role[1], role[2], role[3], role[4]];
    let mut pairs = vec![
        (root, mid),
        (root, side),
        (mid, mid),
        (mid, y1),
        (mid, y2),
        (side, side),
    ];
    for a in 0..5 {
        for b in 0..5 {
            if rng.gen_bool(extra) {
                pairs.push((a, b));
            }
        }
    }
    Frame::from_indices(world_names(5), pairs).transitive_closure()
}

pub fn random_model(rng: &mut Rng64, frame: Frame, atoms: &[&str]) -> Model {
    let valuation: BTreeMap<String, Vec<String>> = atoms
        .iter()
        .map(|a| {
            let ws = frame
                .names()
                .iter()
                .filter(|_| rng.gen_bool(0.5))
                .cloned()
                .collect();
            (a.to_string(), ws)
        })
        .collect();
    Model::new(frame, &valuation).expect("generated valuation is well formed")
}

/// Formula of modal and boolean depth at most `depth` over `atoms`.
pub fn random_formula(rng: &mut Rng64, depth: usize, atoms: &[&str]) -> Formula {
    if depth == 0 || rng.gen_bool(0.2) {
        return match rng.gen_range(0..10) {
            0 => Formula::Top,
            1 => Formula::Bottom,
            _ => Formula::atom(atoms.choose(rng).expect("nonempty atom list")),
        };
    }
    let d = depth - 1;
    match rng.gen_range(0..8) {
        0 => Formula::not(random_formula(rng, d, atoms)),
        1 => Formula::boxed(random_formula(rng, d, atoms)),
        2 => Formula::diamond(random_formula(rng, d, atoms)),
        3 => Formula::and(random_formula(rng, d, atoms), random_formula(rng, d, atoms)),
        4 => Formula::or(random_formula(rng, d, atoms), random_formula(rng, d, atoms)),
        5 => Formula::implies(random_formula(rng, d, atoms), random_formula(rng, d, atoms)),
        6 => Formula::iff(random_formula(rng, d, atoms), random_formula(rng, d, atoms)),
        _ => Formula::diamond(Formula::and(
            random_formula(rng, d, atoms),
            random_formula(rng, d, atoms),
        )),
    }
}
