//! Named axioms. Schematic letters A, B are instantiated as `p1`, `p2`.

use std::fmt;
use std::str::FromStr;

use super::Formula;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AxiomName {
    A4,
    AT,
    AD,
    Ad,
    Ad2,
    A2,
    Ad32,
    Aaf,
    Aa2f,
    Rob2,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown axiom {0:?}")]
pub struct UnknownAxiom(pub String);

impl AxiomName {
    pub const ALL: [AxiomName; 10] = [
        AxiomName::A4,
        AxiomName::AT,
        AxiomName::AD,
        AxiomName::Ad,
        AxiomName::Ad2,
        AxiomName::A2,
        AxiomName::Ad32,
        AxiomName::Aaf,
        AxiomName::Aa2f,
        AxiomName::Rob2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            AxiomName::A4 => "a4",
            AxiomName::AT => "aT",
            AxiomName::AD => "aD",
            AxiomName::Ad => "ad",
            AxiomName::Ad2 => "ad2",
            AxiomName::A2 => "a2",
            AxiomName::Ad32 => "ad32",
            AxiomName::Aaf => "aaf",
            AxiomName::Aa2f => "aa2f",
            AxiomName::Rob2 => "rob2",
        }
    }
}

impl fmt::Display for AxiomName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Accepts the tag with or without a leading `@`.
impl FromStr for AxiomName {
    type Err = UnknownAxiom;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bare = s.strip_prefix('@').unwrap_or(s);
        AxiomName::ALL
            .into_iter()
            .find(|a| a.as_str() == bare)
            .ok_or_else(|| UnknownAxiom(s.to_string()))
    }
}

fn p(n: &str) -> Formula {
    Formula::atom(n)
}

fn dia(f: Formula) -> Formula {
    Formula::diamond(f)
}

fn nbox(f: Formula) -> Formula {
    Formula::boxed(f)
}

fn not(f: Formula) -> Formula {
    Formula::not(f)
}

/// `a & ~b & []~b`: `a` holds here, `b` neither here nor at any successor.
fn isolated(a: &str, b: &str) -> Formula {
    Formula::conj([p(a), not(p(b)), nbox(not(p(b)))])
}

/// `<>(<>a & <>b)`
fn dia_pair(a: &str, b: &str) -> Formula {
    dia(Formula::and(dia(p(a)), dia(p(b))))
}

fn ad32_consequent() -> Formula {
    Formula::disj([
        dia_pair("p1", "p2"),
        dia_pair("p1", "p3"),
        dia_pair("p2", "p3"),
    ])
}

fn after_consequent() -> Formula {
    Formula::or(dia_pair("p1", "q"), dia_pair("p2", "q"))
}

/// `Q_i := p_i -> /\_{j != i} (~p_j & []~p_j)`
fn rob_guard(i: usize) -> Formula {
    let names = ["p1", "p2", "p3"];
    let parts = names
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .flat_map(|(_, n)| [not(p(n)), nbox(not(p(n)))]);
    Formula::implies(p(names[i]), Formula::conj(parts))
}

pub fn axiom(name: AxiomName) -> Formula {
    match name {
        AxiomName::A4 => Formula::implies(dia(dia(p("p1"))), dia(p("p1"))),
        AxiomName::AT => Formula::implies(p("p1"), dia(p("p1"))),
        AxiomName::AD => dia(Formula::Top),
        AxiomName::Ad => Formula::implies(dia(p("p1")), dia(dia(p("p1")))),
        AxiomName::Ad2 => Formula::implies(
            Formula::and(dia(p("p1")), dia(p("p2"))),
            dia_pair("p1", "p2"),
        ),
        AxiomName::A2 => Formula::implies(dia(nbox(p("p1"))), nbox(dia(p("p1")))),
        AxiomName::Ad32 => Formula::implies(
            Formula::conj([dia(p("p1")), dia(p("p2")), dia(p("p3"))]),
            ad32_consequent(),
        ),
        AxiomName::Aaf => Formula::implies(
            Formula::and(
                dia(Formula::and(
                    dia(isolated("p1", "p2")),
                    dia(isolated("p2", "p1")),
                )),
                dia(p("q")),
            ),
            after_consequent(),
        ),
        AxiomName::Aa2f => Formula::implies(
            Formula::and(
                Formula::and(dia(isolated("p1", "p2")), dia(isolated("p2", "p1"))),
                dia(p("q")),
            ),
            after_consequent(),
        ),
        AxiomName::Rob2 => Formula::implies(
            Formula::conj([
                dia(p("p1")),
                dia(p("p2")),
                dia(p("p3")),
                nbox(rob_guard(0)),
                nbox(rob_guard(1)),
                nbox(rob_guard(2)),
            ]),
            ad32_consequent(),
        ),
    }
}
