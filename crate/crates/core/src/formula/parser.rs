//! Recursive-descent parser for the ASCII formula syntax.
//!
//! ```text
//! formula := iff
//! iff     := imp ("<->" imp)*
//! imp     := or ("->" imp)?
//! or      := and ("|" and)*
//! and     := unary ("&" unary)*
//! unary   := "~" unary | "[]" unary | "<>" unary | atom
//! atom    := "T" | "F" | IDENT | "@" AXIOM | "(" formula ")"
//! ```

use std::collections::BTreeSet;
use std::fmt;

use super::{axiom, Atom, AxiomName, Formula};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    /// Byte offset into the input.
    pub offset: usize,
    pub found: String,
    pub expected: BTreeSet<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let expected: Vec<&str> = self.expected.iter().map(String::as_str).collect();
        write!(
            f,
            "syntax error at byte {}: found {}, expected one of {{{}}}",
            self.offset,
            self.found,
            expected.join(", ")
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Not,
    Box,
    Dia,
    And,
    Or,
    Imp,
    Iff,
    LParen,
    RParen,
    Top,
    Bottom,
    Ident(String),
    AxiomRef(String),
    Invalid(char),
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Not => "\"~\"".into(),
            Tok::Box => "\"[]\"".into(),
            Tok::Dia => "\"<>\"".into(),
            Tok::And => "\"&\"".into(),
            Tok::Or => "\"|\"".into(),
            Tok::Imp => "\"->\"".into(),
            Tok::Iff => "\"<->\"".into(),
            Tok::LParen => "\"(\"".into(),
            Tok::RParen => "\")\"".into(),
            Tok::Top => "\"T\"".into(),
            Tok::Bottom => "\"F\"".into(),
            Tok::Ident(s) => format!("identifier {s:?}"),
            Tok::AxiomRef(s) => format!("axiom reference @{s}"),
            Tok::Invalid(c) => format!("character {c:?}"),
            Tok::Eof => "end of input".into(),
        }
    }
}

const SYMBOLS: [(&str, Tok); 9] = [
    ("<->", Tok::Iff),
    ("->", Tok::Imp),
    ("<>", Tok::Dia),
    ("[]", Tok::Box),
    ("~", Tok::Not),
    ("&", Tok::And),
    ("|", Tok::Or),
    ("(", Tok::LParen),
    (")", Tok::RParen),
];

fn lex(text: &str) -> Vec<(usize, Tok)> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    'outer: while i < bytes.len() {
        let rest = &text[i..];
        let c = rest.chars().next().expect("in bounds");
        if c.is_whitespace() {
            i += c.len_utf8();
            continue;
        }
        for (sym, tok) in SYMBOLS.iter() {
            if rest.starts_with(sym) {
                out.push((i, tok.clone()));
                i += sym.len();
                continue 'outer;
            }
        }
        if c.is_ascii_alphabetic()
            || (c == '@' && rest[1..].starts_with(|d: char| d.is_ascii_alphabetic()))
        {
            let start = if c == '@' { i + 1 } else { i };
            let len = text[start..]
                .find(|d: char| !(d.is_ascii_alphanumeric() || d == '_'))
                .unwrap_or(text.len() - start);
            let word = &text[start..start + len];
            let tok = match (c == '@', word) {
                (true, _) => Tok::AxiomRef(word.to_string()),
                (false, "T") => Tok::Top,
                (false, "F") => Tok::Bottom,
                (false, _) => Tok::Ident(word.to_string()),
            };
            out.push((i, tok));
            i = start + len;
            continue;
        }
        out.push((i, Tok::Invalid(c)));
        i += c.len_utf8();
    }
    out.push((text.len(), Tok::Eof));
    out
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

const UNARY_START: [&str; 8] = [
    "\"~\"",
    "\"[]\"",
    "\"<>\"",
    "\"T\"",
    "\"F\"",
    "identifier",
    "@axiom",
    "\"(\"",
];
const BINARY_OPS: [&str; 4] = ["\"&\"", "\"|\"", "\"->\"", "\"<->\""];

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if t != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let (offset, tok) = &self.toks[self.pos];
        ParseError {
            offset: *offset,
            found: tok.describe(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn iff(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.imp()?;
        while *self.peek() == Tok::Iff {
            self.bump();
            f = Formula::iff(f, self.imp()?);
        }
        Ok(f)
    }

    fn imp(&mut self) -> Result<Formula, ParseError> {
        let f = self.or()?;
        if *self.peek() == Tok::Imp {
            self.bump();
            return Ok(Formula::implies(f, self.imp()?));
        }
        Ok(f)
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.and()?;
        while *self.peek() == Tok::Or {
            self.bump();
            f = Formula::or(f, self.and()?);
        }
        Ok(f)
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.unary()?;
        while *self.peek() == Tok::And {
            self.bump();
            f = Formula::and(f, self.unary()?);
        }
        Ok(f)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Tok::Not => {
                self.bump();
                Ok(Formula::not(self.unary()?))
            }
            Tok::Box => {
                self.bump();
                Ok(Formula::boxed(self.unary()?))
            }
            Tok::Dia => {
                self.bump();
                Ok(Formula::diamond(self.unary()?))
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        match self.peek().clone() {
            Tok::Top => {
                self.bump();
                Ok(Formula::Top)
            }
            Tok::Bottom => {
                self.bump();
                Ok(Formula::Bottom)
            }
            Tok::Ident(name) => {
                self.bump();
                Ok(Formula::Atom(Atom(name)))
            }
            Tok::AxiomRef(name) => match name.parse::<AxiomName>() {
                Ok(tag) => {
                    self.bump();
                    Ok(axiom(tag))
                }
                Err(_) => {
                    let names: Vec<String> =
                        AxiomName::ALL.iter().map(|a| format!("@{a}")).collect();
                    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
                    Err(self.error(&refs))
                }
            },
            Tok::LParen => {
                self.bump();
                let f = self.iff()?;
                if *self.peek() != Tok::RParen {
                    let mut exp = BINARY_OPS.to_vec();
                    exp.push("\")\"");
                    return Err(self.error(&exp));
                }
                self.bump();
                Ok(f)
            }
            _ => Err(self.error(&UNARY_START)),
        }
    }
}

/// Parses the ASCII surface syntax. `@name` inlines a catalog axiom.
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let mut p = Parser {
        toks: lex(text),
        pos: 0,
    };
    let f = p.iff()?;
    if *p.peek() != Tok::Eof {
        let mut exp = BINARY_OPS.to_vec();
        exp.push("end of input");
        return Err(p.error(&exp));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: &str) -> Formula {
        Formula::atom(n)
    }

    #[test]
    fn precedence_example() {
        let f = parse_formula("<>p1 & []~p2").unwrap();
        assert_eq!(
            f,
            Formula::and(
                Formula::diamond(p("p1")),
                Formula::boxed(Formula::not(p("p2")))
            )
        );
    }

    #[test]
    fn implication_right_associative() {
        let f = parse_formula("p1 -> p2 -> p3").unwrap();
        assert_eq!(
            f,
            Formula::implies(p("p1"), Formula::implies(p("p2"), p("p3")))
        );
    }

    #[test]
    fn iff_and_or_left_associative() {
        assert_eq!(
            parse_formula("a <-> b <-> c").unwrap(),
            Formula::iff(Formula::iff(p("a"), p("b")), p("c"))
        );
        assert_eq!(
            parse_formula("a | b | c").unwrap(),
            Formula::or(Formula::or(p("a"), p("b")), p("c"))
        );
        assert_eq!(
            parse_formula("a | b & c -> d <-> e").unwrap(),
            Formula::iff(
                Formula::implies(Formula::or(p("a"), Formula::and(p("b"), p("c"))), p("d")),
                p("e")
            )
        );
    }

    #[test]
    fn whitespace_insensitive() {
        assert_eq!(
            parse_formula(" <> ( p1&T )->F ").unwrap(),
            parse_formula("<>(p1 & T) -> F").unwrap()
        );
        assert_eq!(
            parse_formula("~~[]<>x").unwrap(),
            parse_formula("~ ~ [] <> x").unwrap()
        );
    }

    #[test]
    fn constants_reserved_but_prefixes_are_identifiers() {
        assert_eq!(parse_formula("T").unwrap(), Formula::Top);
        assert_eq!(parse_formula("F").unwrap(), Formula::Bottom);
        assert_eq!(parse_formula("T1").unwrap(), p("T1"));
        assert_eq!(parse_formula("Fx_2").unwrap(), p("Fx_2"));
    }

    #[test]
    fn axiom_reference_inlines_catalog() {
        assert_eq!(
            parse_formula("@aD").unwrap(),
            Formula::diamond(Formula::Top)
        );
        assert_eq!(
            parse_formula("~@aT").unwrap(),
            Formula::not(axiom(AxiomName::AT))
        );
    }

    #[test]
    fn errors_carry_offset_and_expected() {
        let e = parse_formula("p1 & ").unwrap_err();
        assert_eq!(e.offset, 5);
        assert!(e.expected.contains("identifier"));
        assert_eq!(e.found, "end of input");

        let e = parse_formula("(p1 | p2").unwrap_err();
        assert_eq!(e.offset, 8);
        assert!(e.expected.contains("\")\""));

        let e = parse_formula("p1 p2").unwrap_err();
        assert_eq!(e.offset, 3);
        assert!(e.expected.contains("end of input"));

        let e = parse_formula("p1 # p2").unwrap_err();
        assert_eq!(e.offset, 3);

        let e = parse_formula("@nope").unwrap_err();
        assert_eq!(e.offset, 0);
        assert!(e.expected.contains("@aaf"));

        assert_eq!(parse_formula("").unwrap_err().offset, 0);
        assert_eq!(parse_formula("é & p").unwrap_err().offset, 0);
    }
}
