//! First-order correspondents of the catalog axioms, checked directly on the
//! frame relation.
//!
//! | axiom | condition |
//! |-------|-----------|
//! | a4    | `x◁y ∧ y◁z → x◁z` |
//! | aT    | `x◁x` |
//! | aD    | `∃y x◁y` |
//! | ad    | `x◁y → ∃t (x◁t ∧ t◁y)` |
//! | ad2   | `x◁y₁ ∧ x◁y₂ → ∃t (x◁t ∧ t◁y₁ ∧ t◁y₂)` |
//! | a2    | `x◁y ∧ x◁z → ∃w (y◁w ∧ z◁w)` |
//! | ad32  | `x◁y₁,y₂,y₃ → ∃t (x◁t ∧ t sees two of y₁,y₂,y₃)` |
//! | aaf   | `x◁y ∧ y◁y₁,y₂ ∧ x◁z ∧ y₁⋈y₂ → ∃t (x◁t ∧ t◁z ∧ (t◁y₁ ∨ t◁y₂))` |
//! | aa2f  | `x◁y₁,y₂,z ∧ y₁⋈y₂ → ∃t (x◁t ∧ t◁z ∧ (t◁y₁ ∨ t◁y₂))` |
//!
//! `y₁⋈y₂` abbreviates `y₁ ≠ y₂ ∧ ¬y₁◁y₂ ∧ ¬y₂◁y₁`. The ad32 condition comes
//! from the minimal valuation `pᵢ = {yᵢ}`; the yᵢ need not be distinct.

use crate::formula::{axiom, AxiomName};
use crate::kripke::{Frame, WorldId};
use crate::semantics::{frame_validates, BudgetExceeded, Validity};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("no first-order correspondent implemented for {0}")]
pub struct UnsupportedAxiom(pub AxiomName);

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FoVerdict {
    Holds,
    /// Binding of every universal variable, in quantifier order.
    Counterexample(Vec<(&'static str, WorldId)>),
}

impl FoVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, FoVerdict::Holds)
    }

    /// `VALID` or `COUNTER x=.. y=..`
    pub fn render(&self, frame: &Frame) -> String {
        match self {
            FoVerdict::Holds => "VALID".to_string(),
            FoVerdict::Counterexample(b) => {
                let parts: Vec<String> = b
                    .iter()
                    .map(|(v, w)| format!("{v}={}", frame.name(*w)))
                    .collect();
                format!("COUNTER {}", parts.join(" "))
            }
        }
    }
}

pub const SUPPORTED: [AxiomName; 9] = [
    AxiomName::A4,
    AxiomName::AT,
    AxiomName::AD,
    AxiomName::Ad,
    AxiomName::Ad2,
    AxiomName::A2,
    AxiomName::Ad32,
    AxiomName::Aaf,
    AxiomName::Aa2f,
];

fn cex(vars: &[&'static str], vals: &[WorldId]) -> FoVerdict {
    FoVerdict::Counterexample(vars.iter().copied().zip(vals.iter().copied()).collect())
}

/// Exhaustive search over universal tuples in lexicographic order.
pub fn fo_check(frame: &Frame, name: AxiomName) -> Result<FoVerdict, UnsupportedAxiom> {
    let r = |a: WorldId, b: WorldId| frame.related(a, b);
    let exists = |p: &dyn Fn(WorldId) -> bool| frame.worlds().any(p);
    let incomparable = |a: WorldId, b: WorldId| a != b && !r(a, b) && !r(b, a);
    // Shared consequent of aaf and aa2f.
    let after_witness = |x, y1, y2, z| exists(&|t| r(x, t) && r(t, z) && (r(t, y1) || r(t, y2)));

    let ws = frame.worlds();
    let succ = |x: WorldId| frame.succ(x).ones().collect::<Vec<_>>();
    match name {
        AxiomName::A4 => {
            for x in ws {
                for y in succ(x) {
                    for z in succ(y) {
                        if !r(x, z) {
                            return Ok(cex(&["x", "y", "z"], &[x, y, z]));
                        }
                    }
                }
            }
        }
        AxiomName::AT => {
            if let Some(x) = ws.clone().find(|&x| !r(x, x)) {
                return Ok(cex(&["x"], &[x]));
            }
        }
        AxiomName::AD => {
            if let Some(x) = ws.clone().find(|&x| !exists(&|y| r(x, y))) {
                return Ok(cex(&["x"], &[x]));
            }
        }
        AxiomName::Ad => {
            for x in ws {
                for y in succ(x) {
                    if !exists(&|t| r(x, t) && r(t, y)) {
                        return Ok(cex(&["x", "y"], &[x, y]));
                    }
                }
            }
        }
        AxiomName::Ad2 => {
            for x in ws {
                for y1 in succ(x) {
                    for y2 in succ(x) {
                        if !exists(&|t| r(x, t) && r(t, y1) && r(t, y2)) {
                            return Ok(cex(&["x", "y1", "y2"], &[x, y1, y2]));
                        }
                    }
                }
            }
        }
        AxiomName::A2 => {
            for x in ws {
                for y in succ(x) {
                    for z in succ(x) {
                        if !exists(&|w| r(y, w) && r(z, w)) {
                            return Ok(cex(&["x", "y", "z"], &[x, y, z]));
                        }
                    }
                }
            }
        }
        AxiomName::Ad32 => {
            for x in ws {
                let s = succ(x);
                for &y1 in &s {
                    for &y2 in &s {
                        for &y3 in &s {
                            let two = |t| [y1, y2, y3].iter().filter(|&&y| r(t, y)).count() >= 2;
                            if !exists(&|t| r(x, t) && two(t)) {
                                return Ok(cex(&["x", "y1", "y2", "y3"], &[x, y1, y2, y3]));
                            }
                        }
                    }
                }
            }
        }
        AxiomName::Aaf => {
            for x in ws {
                for y in succ(x) {
                    for y1 in succ(y) {
                        for y2 in succ(y) {
                            if !incomparable(y1, y2) {
                                continue;
                            }
                            for z in succ(x) {
                                if !after_witness(x, y1, y2, z) {
                                    return Ok(cex(
                                        &["x", "y", "y1", "y2", "z"],
                                        &[x, y, y1, y2, z],
                                    ));
                                }
                            }
                        }
                    }
                }
            }
        }
        AxiomName::Aa2f => {
            for x in ws {
                for y1 in succ(x) {
                    for y2 in succ(x) {
                        if !incomparable(y1, y2) {
                            continue;
                        }
                        for z in succ(x) {
                            if !after_witness(x, y1, y2, z) {
                                return Ok(cex(&["x", "y1", "y2", "z"], &[x, y1, y2, z]));
                            }
                        }
                    }
                }
            }
        }
        AxiomName::Rob2 => return Err(UnsupportedAxiom(name)),
    }
    Ok(FoVerdict::Holds)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Crosscheck {
    pub fo: FoVerdict,
    pub modal: Validity,
}

impl Crosscheck {
    pub fn agree(&self) -> bool {
        self.fo.holds() == self.modal.is_valid()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CrosscheckError {
    #[error(transparent)]
    Unsupported(#[from] UnsupportedAxiom),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
}

/// Runs the first-order check and valuation enumeration side by side.
pub fn crosscheck(
    frame: &Frame,
    name: AxiomName,
    budget: u64,
) -> Result<Crosscheck, CrosscheckError> {
    let fo = fo_check(frame, name)?;
    let modal = frame_validates(frame, &axiom(name), budget)?;
    Ok(Crosscheck { fo, modal })
}
