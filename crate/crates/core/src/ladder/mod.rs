//! Causal frames with two primitive relations, the causal-ladder
//! classifier, and the fixture catalog.

pub mod fixtures;

use std::fmt;

use crate::kripke::{check_property, Frame, FrameProperty, WorldId};

pub use fixtures::{
    fixture, fixture_from, fixtures, fixtures_from, parse_fixture, Expect, Fixture, FixtureBody,
    FixtureError, FIXTURE_NAMES,
};

/// Policy for the loop property `x α x ⇒ ∃x′ ≠ x. x α x′ α x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LoopPolicy {
    #[default]
    Require,
    Ignore,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Invariant {
    ChronInAfter,
    ChronTransitive,
    AfterTransitive,
    /// `x ≪ y ⪯ z ⇒ x ≪ z`
    PushUpRight,
    /// `x ⪯ y ≪ z ⇒ x ≪ z`
    PushUpLeft,
    Loop,
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Invariant::ChronInAfter => "chron ⊆ after",
            Invariant::ChronTransitive => "chron transitive",
            Invariant::AfterTransitive => "after transitive",
            Invariant::PushUpRight => "push-up chron∘caus ⊆ chron",
            Invariant::PushUpLeft => "push-up caus∘chron ⊆ chron",
            Invariant::Loop => "loop property",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invariant violated: {invariant} at ({})", worlds.join(","))]
pub struct InvariantViolation {
    pub invariant: Invariant,
    pub worlds: Vec<String>,
}

/// Worlds with chronological (`≪`) and after (`α`) relations. Causal
/// precedence `⪯` is `α ∪ id`; `⊴` is `≪ ∪ id`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CausalFrame {
    chron: Frame,
    after: Frame,
}

impl CausalFrame {
    /// `chron` and `after` must share world names.
    pub fn new(
        chron: Frame,
        after: Frame,
        policy: LoopPolicy,
    ) -> Result<CausalFrame, InvariantViolation> {
        assert_eq!(
            chron.names(),
            after.names(),
            "chron and after over the same worlds"
        );
        let cf = CausalFrame { chron, after };
        cf.validate(policy)?;
        Ok(cf)
    }

    pub fn from_indices(
        names: Vec<String>,
        chron: impl IntoIterator<Item = (WorldId, WorldId)>,
        after: impl IntoIterator<Item = (WorldId, WorldId)>,
        policy: LoopPolicy,
    ) -> Result<CausalFrame, InvariantViolation> {
        let c = Frame::from_indices(names.clone(), chron);
        let a = Frame::from_indices(names, after);
        CausalFrame::new(c, a, policy)
    }

    pub fn len(&self) -> usize {
        self.chron.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chron.is_empty()
    }

    pub fn chron(&self) -> &Frame {
        &self.chron
    }

    pub fn after(&self) -> &Frame {
        &self.after
    }

    pub fn caus(&self) -> Frame {
        self.after.with_pairs(self.after.worlds().map(|w| (w, w)))
    }

    pub fn chroneq(&self) -> Frame {
        self.chron.with_pairs(self.chron.worlds().map(|w| (w, w)))
    }

    fn violation(&self, invariant: Invariant, ws: &[WorldId]) -> InvariantViolation {
        InvariantViolation {
            invariant,
            worlds: ws.iter().map(|&w| self.chron.name(w).to_string()).collect(),
        }
    }

    fn validate(&self, policy: LoopPolicy) -> Result<(), InvariantViolation> {
        let (c, a) = (&self.chron, &self.after);
        if let Some((x, y)) = c.pairs().find(|&(x, y)| !a.related(x, y)) {
            return Err(self.violation(Invariant::ChronInAfter, &[x, y]));
        }
        for (frame, inv) in [
            (c, Invariant::ChronTransitive),
            (a, Invariant::AfterTransitive),
        ] {
            if let Some(ws) = check_property(frame, FrameProperty::Transitive).counterexample() {
                return Err(self.violation(inv, ws));
            }
        }
        // ⪯ = α ∪ id and identity steps are trivial, so only α steps count.
        for (x, y) in c.pairs() {
            if let Some(z) = a.succ(y).ones().find(|&z| !c.related(x, z)) {
                return Err(self.violation(Invariant::PushUpRight, &[x, y, z]));
            }
        }
        for (y, z) in c.pairs() {
            if let Some(x) = a.pred(y).ones().find(|&x| !c.related(x, z)) {
                return Err(self.violation(Invariant::PushUpLeft, &[x, y, z]));
            }
        }
        if policy == LoopPolicy::Require {
            if let Some(x) = self.loop_violation() {
                return Err(self.violation(Invariant::Loop, &[x]));
            }
        }
        Ok(())
    }

    /// First `x` with `x α x` but no `x′ ≠ x` on a loop through `x`.
    pub fn loop_violation(&self) -> Option<WorldId> {
        let a = &self.after;
        a.worlds()
            .filter(|&x| a.related(x, x))
            .find(|&x| !a.succ(x).ones().any(|y| y != x && a.related(y, x)))
    }
}

/// Relation used for the distinguishing rungs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DistinguishOn {
    #[default]
    Chron,
    After,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct LadderPosition {
    pub totally_vicious: bool,
    pub ntv: bool,
    pub chronological: bool,
    pub cntv: bool,
    pub causal: bool,
    pub past_distinguishing: bool,
    pub future_distinguishing: bool,
    pub distinguishing: bool,
    pub reflecting: bool,
}

/// Rungs that need topology and are reported rather than computed.
pub const NOT_FRAME_CHECKABLE: [&str; 3] =
    ["strongly_causal", "stably_causal", "globally_hyperbolic"];

impl LadderPosition {
    pub const FLAG_NAMES: [&'static str; 9] = [
        "totally_vicious",
        "ntv",
        "chronological",
        "cntv",
        "causal",
        "past_distinguishing",
        "future_distinguishing",
        "distinguishing",
        "reflecting",
    ];

    pub fn flags(&self) -> [(&'static str, bool); 9] {
        let v = [
            self.totally_vicious,
            self.ntv,
            self.chronological,
            self.cntv,
            self.causal,
            self.past_distinguishing,
            self.future_distinguishing,
            self.distinguishing,
            self.reflecting,
        ];
        std::array::from_fn(|i| (Self::FLAG_NAMES[i], v[i]))
    }

    pub fn get(&self, name: &str) -> Option<bool> {
        self.flags()
            .iter()
            .find(|(n, _)| *n == name)
            .map(|&(_, v)| v)
    }

    pub fn set(&mut self, name: &str, value: bool) -> bool {
        let slot = match name {
            "totally_vicious" => &mut self.totally_vicious,
            "ntv" => &mut self.ntv,
            "chronological" => &mut self.chronological,
            "cntv" => &mut self.cntv,
            "causal" => &mut self.causal,
            "past_distinguishing" => &mut self.past_distinguishing,
            "future_distinguishing" => &mut self.future_distinguishing,
            "distinguishing" => &mut self.distinguishing,
            "reflecting" => &mut self.reflecting,
            _ => return false,
        };
        *slot = value;
        true
    }
}

pub fn classify(cf: &CausalFrame, on: DistinguishOn) -> LadderPosition {
    let (c, a) = (&cf.chron, &cf.after);
    let holds = |f: &Frame, p| check_property(f, p).holds();
    let d = match on {
        DistinguishOn::Chron => c,
        DistinguishOn::After => a,
    };
    let any_not_loop = |f: &Frame| f.worlds().any(|x| !f.related(x, x));
    LadderPosition {
        totally_vicious: holds(c, FrameProperty::Reflexive),
        ntv: any_not_loop(c),
        chronological: holds(c, FrameProperty::Irreflexive),
        cntv: any_not_loop(a),
        causal: holds(a, FrameProperty::Irreflexive),
        past_distinguishing: holds(d, FrameProperty::PastDistinguishing),
        future_distinguishing: holds(d, FrameProperty::FutureDistinguishing),
        distinguishing: holds(d, FrameProperty::Distinguishing),
        reflecting: holds(c, FrameProperty::Reflecting),
    }
}

/// One implication of the lower ladder.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Implication {
    pub premise: &'static str,
    pub conclusion: &'static str,
}

pub const IMPLICATIONS: [Implication; 4] = [
    Implication {
        premise: "causal",
        conclusion: "cntv",
    },
    Implication {
        premise: "causal",
        conclusion: "chronological",
    },
    Implication {
        premise: "cntv",
        conclusion: "ntv",
    },
    Implication {
        premise: "chronological",
        conclusion: "ntv",
    },
];

/// Violated implications. On the empty frame every universal rung holds and
/// every existential one fails, so callers skip it.
pub fn check_ladder_implications(pos: &LadderPosition) -> Vec<Implication> {
    IMPLICATIONS
        .iter()
        .filter(|i| pos.get(i.premise) == Some(true) && pos.get(i.conclusion) == Some(false))
        .copied()
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CausalEquivalence {
    pub caus_antisymmetric: bool,
    pub after_irreflexive: bool,
}

impl CausalEquivalence {
    pub fn equivalent(&self) -> bool {
        self.caus_antisymmetric == self.after_irreflexive
    }
}

pub fn causal_iff_after_irreflexive(cf: &CausalFrame) -> CausalEquivalence {
    let holds = |f: &Frame, p| check_property(f, p).holds();
    CausalEquivalence {
        caus_antisymmetric: holds(&cf.caus(), FrameProperty::Antisymmetric),
        after_irreflexive: holds(&cf.after, FrameProperty::Irreflexive),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::world_names;

    fn cf(
        n: usize,
        chron: &[(usize, usize)],
        after: &[(usize, usize)],
    ) -> Result<CausalFrame, InvariantViolation> {
        CausalFrame::from_indices(
            world_names(n),
            chron.iter().copied(),
            after.iter().copied(),
            LoopPolicy::Require,
        )
    }

    #[test]
    fn validation_names_invariant() {
        assert_eq!(
            cf(2, &[(0, 1)], &[]).unwrap_err().invariant,
            Invariant::ChronInAfter
        );
        assert_eq!(
            cf(3, &[], &[(0, 1), (1, 2)]).unwrap_err().invariant,
            Invariant::AfterTransitive
        );
        let e = cf(3, &[(0, 1)], &[(0, 1), (1, 2), (0, 2)]).unwrap_err();
        assert_eq!(e.invariant, Invariant::PushUpRight);
        assert_eq!(
            e.to_string(),
            "invariant violated: push-up chron∘caus ⊆ chron at (w0,w1,w2)"
        );
        let e = cf(3, &[(1, 2)], &[(0, 1), (1, 2), (0, 2)]).unwrap_err();
        assert_eq!(e.invariant, Invariant::PushUpLeft);
        assert_eq!(
            cf(1, &[], &[(0, 0)]).unwrap_err().invariant,
            Invariant::Loop
        );
        let lone =
            CausalFrame::from_indices(world_names(1), [], [(0, 0)], LoopPolicy::Ignore).unwrap();
        assert_eq!(lone.loop_violation(), Some(0));
    }

    #[test]
    fn chain_is_causal() {
        let f = cf(3, &[(0, 1), (1, 2), (0, 2)], &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let p = classify(&f, DistinguishOn::Chron);
        assert!(p.causal && p.cntv && p.ntv && p.chronological && !p.totally_vicious);
        assert!(check_ladder_implications(&p).is_empty());
        assert!(causal_iff_after_irreflexive(&f).equivalent());
    }

    #[test]
    fn contradictory_flags_reported() {
        let p = LadderPosition {
            causal: true,
            chronological: true,
            ntv: true,
            ..Default::default()
        };
        assert_eq!(check_ladder_implications(&p), vec![IMPLICATIONS[0]]);
    }

    #[test]
    fn flag_names_round_trip() {
        let mut p = LadderPosition::default();
        for name in LadderPosition::FLAG_NAMES {
            assert!(p.set(name, true));
            assert_eq!(p.get(name), Some(true));
        }
        assert!(!p.set("causally_continuous", true));
    }
}
