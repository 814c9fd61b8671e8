//! JSON files for frames, models, causal frames and point lists.
//!
//! Frame file: `{"worlds":[..],"relations":{"R":[["a","b"],..]}}`, with an
//! optional `"close":["transitive"]` applied to every relation and an
//! optional `"valuation":{"p":["a"]}` for models. Causal frames name their
//! relations `"chron"` and `"after"`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::kripke::{Frame, FrameError};
use crate::ladder::{CausalFrame, InvariantViolation, LoopPolicy};
use crate::minkowski::{parse_rational, BadRational, MinkPoint};
use crate::semantics::{Model, ModelError};

pub type Pair = (String, String);

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrameFile {
    pub worlds: Vec<String>,
    #[serde(default)]
    pub relations: BTreeMap<String, Vec<Pair>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub close: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub valuation: Option<BTreeMap<String, Vec<String>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("missing relation {0:?}")]
    MissingRelation(String),
    #[error("unknown closure {0:?}; only \"transitive\" is supported")]
    UnknownClosure(String),
    #[error(transparent)]
    Frame(#[from] FrameError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Causal(#[from] InvariantViolation),
    #[error(transparent)]
    Rational(#[from] BadRational),
    #[error("point {0} has no time coordinate")]
    EmptyPoint(usize),
}

impl From<serde_json::Error> for IoError {
    fn from(e: serde_json::Error) -> Self {
        IoError::Json(e.to_string())
    }
}

impl FrameFile {
    pub fn parse(text: &str) -> Result<FrameFile, IoError> {
        Ok(serde_json::from_str(text)?)
    }

    fn transitive(&self) -> Result<bool, IoError> {
        match self.close.iter().find(|c| c.as_str() != "transitive") {
            Some(c) => Err(IoError::UnknownClosure(c.clone())),
            None => Ok(!self.close.is_empty()),
        }
    }

    /// Frame over relation `name`, closed if requested.
    pub fn relation(&self, name: &str) -> Result<Frame, IoError> {
        let pairs = self
            .relations
            .get(name)
            .ok_or_else(|| IoError::MissingRelation(name.to_string()))?;
        let f = Frame::new(self.worlds.iter().cloned(), pairs.iter().cloned())?;
        Ok(if self.transitive()? {
            f.transitive_closure()
        } else {
            f
        })
    }

    pub fn frame(&self) -> Result<Frame, IoError> {
        self.relation("R")
    }

    /// Model over relation `R`; a missing valuation makes every atom false.
    pub fn model(&self) -> Result<Model, IoError> {
        let frame = self.frame()?;
        match &self.valuation {
            Some(v) => Ok(Model::new(frame, v)?),
            None => Ok(Model::bare(frame)),
        }
    }

    pub fn causal_frame(&self, policy: LoopPolicy) -> Result<CausalFrame, IoError> {
        Ok(CausalFrame::new(
            self.relation("chron")?,
            self.relation("after")?,
            policy,
        )?)
    }

    pub fn from_frame(frame: &Frame) -> FrameFile {
        FrameFile {
            worlds: frame.names().to_vec(),
            relations: [("R".to_string(), frame.named_pairs())].into(),
            ..FrameFile::default()
        }
    }

    pub fn from_model(model: &Model) -> FrameFile {
        let valuation = model
            .valuation
            .iter()
            .map(|(a, s)| {
                (
                    a.clone(),
                    model
                        .frame
                        .set_names(s)
                        .into_iter()
                        .map(String::from)
                        .collect(),
                )
            })
            .collect();
        FrameFile {
            valuation: Some(valuation),
            ..FrameFile::from_frame(&model.frame)
        }
    }

    pub fn from_causal(cf: &CausalFrame) -> FrameFile {
        FrameFile {
            worlds: cf.chron().names().to_vec(),
            relations: [
                ("after".to_string(), cf.after().named_pairs()),
                ("chron".to_string(), cf.chron().named_pairs()),
            ]
            .into(),
            ..FrameFile::default()
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("frame files serialize")
    }
}

pub fn read_frame(text: &str) -> Result<Frame, IoError> {
    FrameFile::parse(text)?.frame()
}

pub fn read_model(text: &str) -> Result<Model, IoError> {
    FrameFile::parse(text)?.model()
}

pub fn read_causal_frame(text: &str, policy: LoopPolicy) -> Result<CausalFrame, IoError> {
    FrameFile::parse(text)?.causal_frame(policy)
}

pub fn point_from_strings(i: usize, coords: &[String]) -> Result<MinkPoint, IoError> {
    if coords.is_empty() {
        return Err(IoError::EmptyPoint(i));
    }
    let c = coords
        .iter()
        .map(|s| parse_rational(s))
        .collect::<Result<_, _>>()?;
    Ok(MinkPoint::new(c))
}

/// `[["0","1/2"],["1","-3/4"]]`
pub fn read_points(text: &str) -> Result<Vec<MinkPoint>, IoError> {
    let raw: Vec<Vec<String>> = serde_json::from_str(text)?;
    raw.iter()
        .enumerate()
        .map(|(i, p)| point_from_strings(i, p))
        .collect()
}

pub fn write_points(points: &[MinkPoint]) -> String {
    let raw: Vec<Vec<String>> = points.iter().map(MinkPoint::to_strings).collect();
    serde_json::to_string(&raw).expect("point lists serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_applied() {
        let f = read_frame(r#"{"worlds":["a","b","c"],"relations":{"R":[["a","b"],["b","c"]]},"close":["transitive"]}"#)
            .unwrap();
        assert!(f.related(0, 2));
        let e = read_frame(r#"{"worlds":["a"],"relations":{"R":[]},"close":["reflexive"]}"#)
            .unwrap_err();
        assert_eq!(e, IoError::UnknownClosure("reflexive".into()));
    }

    #[test]
    fn errors_named() {
        assert!(matches!(read_frame("{"), Err(IoError::Json(_))));
        assert_eq!(
            read_frame(r#"{"worlds":["a"]}"#),
            Err(IoError::MissingRelation("R".into()))
        );
        assert!(matches!(
            read_frame(r#"{"worlds":["a"],"relations":{"R":[["a","b"]]}}"#),
            Err(IoError::Frame(FrameError::UnknownWorld(_)))
        ));
        assert!(matches!(
            read_causal_frame(
                r#"{"worlds":["a","b"],"relations":{"chron":[["a","b"]],"after":[]}}"#,
                LoopPolicy::Require
            ),
            Err(IoError::Causal(_))
        ));
    }

    #[test]
    fn model_round_trip() {
        let text = r#"{"worlds":["a","b"],"relations":{"R":[["a","b"]]},"valuation":{"p":["b"]}}"#;
        let m = read_model(text).unwrap();
        let back = FrameFile::from_model(&m);
        assert_eq!(back.model().unwrap(), m);
    }

    #[test]
    fn points_round_trip() {
        let pts = read_points(r#"[["0","1/2"],["-3/4","2"]]"#).unwrap();
        assert_eq!(write_points(&pts), r#"[["0","1/2"],["-3/4","2"]]"#);
        assert_eq!(read_points("[[]]"), Err(IoError::EmptyPoint(0)));
        assert!(matches!(
            read_points(r#"[["x"]]"#),
            Err(IoError::Rational(_))
        ));
    }
}
