//! First-order frame properties, checked exhaustively.

use std::fmt;
use std::str::FromStr;

use super::{Frame, WorldId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FrameProperty {
    Reflexive,
    Irreflexive,
    Transitive,
    Serial,
    Dense,
    TwoDense,
    SemiFull,
    Confluent,
    Antisymmetric,
    PastDistinguishing,
    FutureDistinguishing,
    Distinguishing,
    Reflecting,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown frame property {0:?}")]
pub struct UnknownProperty(pub String);

impl FrameProperty {
    pub const ALL: [FrameProperty; 13] = [
        FrameProperty::Reflexive,
        FrameProperty::Irreflexive,
        FrameProperty::Transitive,
        FrameProperty::Serial,
        FrameProperty::Dense,
        FrameProperty::TwoDense,
        FrameProperty::SemiFull,
        FrameProperty::Confluent,
        FrameProperty::Antisymmetric,
        FrameProperty::PastDistinguishing,
        FrameProperty::FutureDistinguishing,
        FrameProperty::Distinguishing,
        FrameProperty::Reflecting,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FrameProperty::Reflexive => "reflexive",
            FrameProperty::Irreflexive => "irreflexive",
            FrameProperty::Transitive => "transitive",
            FrameProperty::Serial => "serial",
            FrameProperty::Dense => "dense",
            FrameProperty::TwoDense => "two_dense",
            FrameProperty::SemiFull => "semi_full",
            FrameProperty::Confluent => "confluent",
            FrameProperty::Antisymmetric => "antisymmetric",
            FrameProperty::PastDistinguishing => "past_distinguishing",
            FrameProperty::FutureDistinguishing => "future_distinguishing",
            FrameProperty::Distinguishing => "distinguishing",
            FrameProperty::Reflecting => "reflecting",
        }
    }
}

impl fmt::Display for FrameProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FrameProperty {
    type Err = UnknownProperty;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FrameProperty::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| UnknownProperty(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PropertyVerdict {
    Holds,
    /// Values of the universally quantified variables, in quantifier order.
    Counterexample(Vec<WorldId>),
}

impl PropertyVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, PropertyVerdict::Holds)
    }

    pub fn counterexample(&self) -> Option<&[WorldId]> {
        match self {
            PropertyVerdict::Holds => None,
            PropertyVerdict::Counterexample(ws) => Some(ws),
        }
    }

    pub fn render(&self, frame: &Frame) -> String {
        match self {
            PropertyVerdict::Holds => "HOLDS".to_string(),
            PropertyVerdict::Counterexample(ws) => {
                let names: Vec<&str> = ws.iter().map(|&w| frame.name(w)).collect();
                format!("COUNTER ({})", names.join(","))
            }
        }
    }
}

fn first(found: Option<Vec<WorldId>>) -> PropertyVerdict {
    found.map_or(PropertyVerdict::Holds, PropertyVerdict::Counterexample)
}

/// Exhaustive check; the counterexample is the lexicographically least
/// violating tuple.
pub fn check_property(frame: &Frame, prop: FrameProperty) -> PropertyVerdict {
    let ws = frame.worlds();
    let r = |a, b| frame.related(a, b);
    match prop {
        FrameProperty::Reflexive => first(ws.clone().find(|&x| !r(x, x)).map(|x| vec![x])),
        FrameProperty::Irreflexive => first(ws.clone().find(|&x| r(x, x)).map(|x| vec![x])),
        FrameProperty::Serial => first(
            ws.clone()
                .find(|&x| frame.succ(x).is_clear())
                .map(|x| vec![x]),
        ),
        FrameProperty::Transitive => {
            for x in ws {
                for y in frame.succ(x).ones() {
                    if let Some(z) = frame.succ(y).difference(frame.succ(x)).next() {
                        return PropertyVerdict::Counterexample(vec![x, y, z]);
                    }
                }
            }
            PropertyVerdict::Holds
        }
        FrameProperty::Dense => {
            for x in ws {
                for y in frame.succ(x).ones() {
                    if frame.succ(x).is_disjoint(frame.pred(y)) {
                        return PropertyVerdict::Counterexample(vec![x, y]);
                    }
                }
            }
            PropertyVerdict::Holds
        }
        FrameProperty::TwoDense => {
            for x in ws {
                for y1 in frame.succ(x).ones() {
                    for y2 in frame.succ(x).ones() {
                        let mut t = frame.succ(x).clone();
                        t.intersect_with(frame.pred(y1));
                        t.intersect_with(frame.pred(y2));
                        if t.is_clear() {
                            return PropertyVerdict::Counterexample(vec![x, y1, y2]);
                        }
                    }
                }
            }
            PropertyVerdict::Holds
        }
        FrameProperty::SemiFull => match check_property(frame, FrameProperty::Serial) {
            PropertyVerdict::Holds => check_property(frame, FrameProperty::TwoDense),
            cex => cex,
        },
        FrameProperty::Confluent => {
            for x in ws {
                for y in frame.succ(x).ones() {
                    for z in frame.succ(x).ones() {
                        if frame.succ(y).is_disjoint(frame.succ(z)) {
                            return PropertyVerdict::Counterexample(vec![x, y, z]);
                        }
                    }
                }
            }
            PropertyVerdict::Holds
        }
        FrameProperty::Antisymmetric => {
            for x in ws {
                for y in frame.succ(x).ones() {
                    if y != x && r(y, x) {
                        return PropertyVerdict::Counterexample(vec![x, y]);
                    }
                }
            }
            PropertyVerdict::Holds
        }
        FrameProperty::PastDistinguishing => distinct_rows(frame, |w| frame.pred(w)),
        FrameProperty::FutureDistinguishing => distinct_rows(frame, |w| frame.succ(w)),
        FrameProperty::Distinguishing => {
            match check_property(frame, FrameProperty::PastDistinguishing) {
                PropertyVerdict::Holds => {
                    check_property(frame, FrameProperty::FutureDistinguishing)
                }
                cex => cex,
            }
        }
        FrameProperty::Reflecting => {
            for x in ws.clone() {
                for y in ws.clone() {
                    let future = frame.succ(y).is_subset(frame.succ(x));
                    let past = frame.pred(x).is_subset(frame.pred(y));
                    if future != past {
                        return PropertyVerdict::Counterexample(vec![x, y]);
                    }
                }
            }
            PropertyVerdict::Holds
        }
    }
}

fn distinct_rows<'a>(
    frame: &'a Frame,
    row: impl Fn(WorldId) -> &'a super::WorldSet,
) -> PropertyVerdict {
    for x in frame.worlds() {
        for y in x + 1..frame.len() {
            if row(x) == row(y) {
                return PropertyVerdict::Counterexample(vec![x, y]);
            }
        }
    }
    PropertyVerdict::Holds
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frame(worlds: &[&str], pairs: &[(&str, &str)]) -> Frame {
        Frame::new(worlds.iter().copied(), pairs.iter().copied()).unwrap()
    }

    #[test]
    fn names_round_trip() {
        for p in FrameProperty::ALL {
            assert_eq!(p.as_str().parse::<FrameProperty>().unwrap(), p);
        }
    }

    #[test]
    fn counterexamples_instantiate_quantifiers() {
        let f = frame(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        assert_eq!(
            check_property(&f, FrameProperty::Transitive),
            PropertyVerdict::Counterexample(vec![0, 1, 2])
        );
        assert_eq!(
            check_property(&f, FrameProperty::Serial),
            PropertyVerdict::Counterexample(vec![2])
        );
        assert_eq!(
            check_property(&f, FrameProperty::Dense),
            PropertyVerdict::Counterexample(vec![0, 1])
        );
        assert_eq!(
            check_property(&f, FrameProperty::Reflexive),
            PropertyVerdict::Counterexample(vec![0])
        );
        assert!(check_property(&f, FrameProperty::Irreflexive).holds());
        assert!(check_property(&f, FrameProperty::Antisymmetric).holds());
        assert!(check_property(&f, FrameProperty::Distinguishing).holds());
    }

    #[test]
    fn two_dense_covers_coinciding_successors() {
        // x sees y only; 2-density with y1 = y2 = y reduces to density.
        let f = frame(&["x", "y"], &[("x", "y")]);
        assert_eq!(
            check_property(&f, FrameProperty::TwoDense),
            PropertyVerdict::Counterexample(vec![0, 1, 1])
        );
        let g = frame(
            &["x", "y", "z"],
            &[("x", "y"), ("x", "z"), ("y", "y"), ("z", "z")],
        );
        assert!(check_property(&g, FrameProperty::Dense).holds());
        assert_eq!(
            check_property(&g, FrameProperty::TwoDense),
            PropertyVerdict::Counterexample(vec![0, 1, 2])
        );
    }

    #[test]
    fn confluence_and_symmetric_loops() {
        let f = frame(&["a", "b"], &[("a", "b"), ("b", "a")]);
        assert_eq!(
            check_property(&f, FrameProperty::Antisymmetric),
            PropertyVerdict::Counterexample(vec![0, 1])
        );
        assert!(check_property(&f, FrameProperty::Confluent).holds());
        let g = frame(&["r", "u", "v"], &[("r", "u"), ("r", "v")]);
        assert_eq!(
            check_property(&g, FrameProperty::Confluent),
            PropertyVerdict::Counterexample(vec![0, 1, 1])
        );
    }

    #[test]
    fn reflecting_on_chain_and_vee() {
        let chain = frame(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")]);
        assert!(check_property(&chain, FrameProperty::Reflecting).holds());
        // b and d have equal (empty) futures but I-(b) = {a,c} is not inside I-(d) = {a}.
        let vee = frame(&["a", "b", "c", "d"], &[("a", "b"), ("a", "d"), ("c", "b")]);
        assert_eq!(
            check_property(&vee, FrameProperty::Reflecting),
            PropertyVerdict::Counterexample(vec![1, 3])
        );
    }
}
