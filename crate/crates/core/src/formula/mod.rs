//! Modal formulas: syntax tree, printer, parser and the named axiom catalog.

mod catalog;
mod parser;

use std::collections::BTreeSet;
use std::fmt;

pub use catalog::{axiom, AxiomName, UnknownAxiom};
pub use parser::{parse_formula, ParseError};

/// Atom identifier matching `[a-zA-Z][a-zA-Z0-9_]*`, excluding the constants
/// `T` and `F`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom(String);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid atom name {0:?}: expected [a-zA-Z][a-zA-Z0-9_]* other than T or F")]
pub struct InvalidAtom(pub String);

impl Atom {
    pub fn new(name: &str) -> Result<Self, InvalidAtom> {
        if is_identifier(name) && name != "T" && name != "F" {
            Ok(Atom(name.to_string()))
        } else {
            Err(InvalidAtom(name.to_string()))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Modal formula. `Diamond` is a primitive node; its duality with `Box` is a
/// semantic fact, never a rewrite.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Top,
    Bottom,
    Atom(Atom),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    Box(Box<Formula>),
    Diamond(Box<Formula>),
}

impl Formula {
    /// # Panics
    /// If `name` is not a valid atom identifier.
    pub fn atom(name: &str) -> Formula {
        Formula::Atom(Atom::new(name).expect("valid atom name"))
    }

    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::Iff(Box::new(a), Box::new(b))
    }

    pub fn boxed(f: Formula) -> Formula {
        Formula::Box(Box::new(f))
    }

    pub fn diamond(f: Formula) -> Formula {
        Formula::Diamond(Box::new(f))
    }

    /// Left-associated conjunction, matching how the parser reads `a & b & c`.
    ///
    /// # Panics
    /// On an empty iterator.
    pub fn conj(parts: impl IntoIterator<Item = Formula>) -> Formula {
        parts
            .into_iter()
            .reduce(Formula::and)
            .expect("nonempty conjunction")
    }

    /// Left-associated disjunction.
    ///
    /// # Panics
    /// On an empty iterator.
    pub fn disj(parts: impl IntoIterator<Item = Formula>) -> Formula {
        parts
            .into_iter()
            .reduce(Formula::or)
            .expect("nonempty disjunction")
    }

    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Top | Formula::Bottom => {}
            Formula::Atom(a) => {
                out.insert(a.0.clone());
            }
            Formula::Not(f) | Formula::Box(f) | Formula::Diamond(f) => f.collect_atoms(out),
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            Formula::Top | Formula::Bottom | Formula::Atom(_) => 1,
            Formula::Not(f) | Formula::Box(f) | Formula::Diamond(f) => 1 + f.size(),
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b) => 1 + a.size() + b.size(),
        }
    }

    pub fn modal_depth(&self) -> usize {
        match self {
            Formula::Top | Formula::Bottom | Formula::Atom(_) => 0,
            Formula::Not(f) => f.modal_depth(),
            Formula::Box(f) | Formula::Diamond(f) => 1 + f.modal_depth(),
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b) => a.modal_depth().max(b.modal_depth()),
        }
    }

    /// Binding level: 0 `<->`, 1 `->`, 2 `|`, 3 `&`, 4 unary and atoms.
    fn level(&self) -> u8 {
        match self {
            Formula::Iff(..) => 0,
            Formula::Implies(..) => 1,
            Formula::Or(..) => 2,
            Formula::And(..) => 3,
            _ => 4,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, ctx: u8) -> fmt::Result {
        let paren = self.level() < ctx;
        if paren {
            f.write_str("(")?;
        }
        match self {
            Formula::Top => f.write_str("T")?,
            Formula::Bottom => f.write_str("F")?,
            Formula::Atom(a) => f.write_str(a.as_str())?,
            Formula::Not(g) => {
                f.write_str("~")?;
                g.write_at(f, 4)?;
            }
            Formula::Box(g) => {
                f.write_str("[]")?;
                g.write_at(f, 4)?;
            }
            Formula::Diamond(g) => {
                f.write_str("<>")?;
                g.write_at(f, 4)?;
            }
            Formula::Iff(a, b) => binary(f, a, " <-> ", b, 0, 1)?,
            Formula::Implies(a, b) => binary(f, a, " -> ", b, 2, 1)?,
            Formula::Or(a, b) => binary(f, a, " | ", b, 2, 3)?,
            Formula::And(a, b) => binary(f, a, " & ", b, 3, 4)?,
        }
        if paren {
            f.write_str(")")?;
        }
        Ok(())
    }
}

fn binary(
    f: &mut fmt::Formatter<'_>,
    a: &Formula,
    op: &str,
    b: &Formula,
    left: u8,
    right: u8,
) -> fmt::Result {
    a.write_at(f, left)?;
    f.write_str(op)?;
    b.write_at(f, right)
}

/// Prints in the parser's surface syntax with the minimum parentheses needed
/// for `parse_formula` to rebuild the identical tree.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: &str) -> Formula {
        Formula::atom(n)
    }

    #[test]
    fn atom_names_validated() {
        assert!(Atom::new("p1").is_ok());
        assert!(Atom::new("q_2x").is_ok());
        for bad in ["", "1p", "T", "F", "p-1", "_p"] {
            assert!(Atom::new(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn printer_minimal_parentheses() {
        let f = Formula::implies(
            Formula::and(p("a"), p("b")),
            Formula::implies(p("c"), p("d")),
        );
        assert_eq!(f.to_string(), "a & b -> c -> d");
        let g = Formula::implies(Formula::implies(p("a"), p("b")), p("c"));
        assert_eq!(g.to_string(), "(a -> b) -> c");
        let h = Formula::and(p("a"), Formula::and(p("b"), p("c")));
        assert_eq!(h.to_string(), "a & (b & c)");
        let k = Formula::diamond(Formula::not(Formula::or(p("a"), Formula::Top)));
        assert_eq!(k.to_string(), "<>~(a | T)");
        let m = Formula::iff(p("a"), Formula::iff(p("b"), p("c")));
        assert_eq!(m.to_string(), "a <-> (b <-> c)");
    }

    #[test]
    fn atoms_set_semantics() {
        assert!(Formula::Top.atoms().is_empty());
        let f = Formula::or(p("p1"), p("p1"));
        assert_eq!(f.atoms().into_iter().collect::<Vec<_>>(), vec!["p1"]);
    }
}
