//! Catalog of named frames with their expected verdicts.
//!
//! Each fixture is a JSON file under `fixtures/`, compiled in with
//! `include_str!`. A fixture holds a frame, a model, a causal frame, a point
//! sample of a space or a pair of models with a candidate bisimulation, plus
//! an `expect` manifest. Manifest keys a fixture does not use are empty.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;

use super::{CausalFrame, LoopPolicy};
use crate::io::{point_from_strings, FrameFile, IoError, Pair};
use crate::kripke::Frame;
use crate::minkowski::{sample_frame, MinkPoint, SampleError, Space};
use crate::semantics::Model;

pub const FIXTURE_NAMES: [&str; 10] = [
    "bisim_past_distinguishing",
    "boundary_loops",
    "cluster_chains",
    "confluent_without_aaf",
    "dense32_without_aa2f",
    "dense_without_aa2f",
    "null_cylinder",
    "punctured_cylinder",
    "reflexive_without_aaf",
    "vicious_triangle",
];

const EMBEDDED: [(&str, &str); 10] = [
    (
        "bisim_past_distinguishing",
        include_str!("../../fixtures/bisim_past_distinguishing.json"),
    ),
    (
        "boundary_loops",
        include_str!("../../fixtures/boundary_loops.json"),
    ),
    (
        "cluster_chains",
        include_str!("../../fixtures/cluster_chains.json"),
    ),
    (
        "confluent_without_aaf",
        include_str!("../../fixtures/confluent_without_aaf.json"),
    ),
    (
        "dense32_without_aa2f",
        include_str!("../../fixtures/dense32_without_aa2f.json"),
    ),
    (
        "dense_without_aa2f",
        include_str!("../../fixtures/dense_without_aa2f.json"),
    ),
    (
        "null_cylinder",
        include_str!("../../fixtures/null_cylinder.json"),
    ),
    (
        "punctured_cylinder",
        include_str!("../../fixtures/punctured_cylinder.json"),
    ),
    (
        "reflexive_without_aaf",
        include_str!("../../fixtures/reflexive_without_aaf.json"),
    ),
    (
        "vicious_triangle",
        include_str!("../../fixtures/vicious_triangle.json"),
    ),
];

/// Expected verdicts. Maps are keyed by property, axiom or ladder flag name.
#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Expect {
    pub properties: BTreeMap<String, bool>,
    /// Frame validity by valuation enumeration.
    pub validates: BTreeMap<String, bool>,
    /// First-order correspondent.
    pub fo: BTreeMap<String, bool>,
    pub cluster_criterion: Option<bool>,
    /// World name to number of chains of clusters.
    pub chains: BTreeMap<String, usize>,
    pub ladder: BTreeMap<String, bool>,
    pub causal_equivalence: Option<bool>,
    /// Axiom to a world where the fixture's own valuation refutes it.
    pub falsified_at: BTreeMap<String, String>,
    /// Properties of the left and right model frames of a bisim fixture.
    pub left: BTreeMap<String, bool>,
    pub right: BTreeMap<String, bool>,
    pub z_is_bisimulation: Option<bool>,
    pub coarsest_contains: Option<bool>,
    pub chron_equals_caus: Option<bool>,
}

#[derive(Debug, Clone)]
pub enum FixtureBody {
    Frame(Frame),
    Model(Model),
    Causal(CausalFrame),
    Sample {
        space: Space,
        points: Vec<MinkPoint>,
        frame: CausalFrame,
    },
    Bisim {
        left: Model,
        right: Model,
        z: Vec<Pair>,
    },
}

#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: String,
    pub description: String,
    pub body: FixtureBody,
    pub expect: Expect,
}

impl Fixture {
    /// Kripke frame for the modal checks: `R` of a frame or model, `after`
    /// of a causal or sample fixture, the left frame of a bisim fixture.
    pub fn frame(&self) -> &Frame {
        match &self.body {
            FixtureBody::Frame(f) => f,
            FixtureBody::Model(m) => &m.frame,
            FixtureBody::Causal(cf) | FixtureBody::Sample { frame: cf, .. } => cf.after(),
            FixtureBody::Bisim { left, .. } => &left.frame,
        }
    }

    pub fn model(&self) -> Option<&Model> {
        match &self.body {
            FixtureBody::Model(m) => Some(m),
            _ => None,
        }
    }

    pub fn causal(&self) -> Option<&CausalFrame> {
        match &self.body {
            FixtureBody::Causal(cf) | FixtureBody::Sample { frame: cf, .. } => Some(cf),
            _ => None,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self.body {
            FixtureBody::Frame(_) => "frame",
            FixtureBody::Model(_) => "model",
            FixtureBody::Causal(_) => "causal",
            FixtureBody::Sample { .. } => "sample",
            FixtureBody::Bisim { .. } => "bisim",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FixtureError {
    #[error("unknown fixture {0:?}")]
    Unknown(String),
    #[error("fixture {name}: {reason}")]
    Invalid { name: String, reason: String },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFixture {
    kind: String,
    #[serde(default)]
    description: String,
    #[serde(default)]
    worlds: Vec<String>,
    #[serde(default)]
    relations: BTreeMap<String, Vec<Pair>>,
    #[serde(default)]
    close: Vec<String>,
    #[serde(default)]
    valuation: Option<BTreeMap<String, Vec<String>>>,
    #[serde(default)]
    space: Option<String>,
    #[serde(default)]
    points: Vec<Vec<String>>,
    #[serde(default)]
    left: Option<FrameFile>,
    #[serde(default)]
    right: Option<FrameFile>,
    #[serde(default)]
    z: Vec<Pair>,
    #[serde(default)]
    expect: Expect,
}

impl RawFixture {
    fn file(&self) -> FrameFile {
        FrameFile {
            worlds: self.worlds.clone(),
            relations: self.relations.clone(),
            close: self.close.clone(),
            valuation: self.valuation.clone(),
        }
    }

    fn body(&self) -> Result<FixtureBody, String> {
        let io = |e: IoError| e.to_string();
        Ok(match self.kind.as_str() {
            "frame" => FixtureBody::Frame(self.file().frame().map_err(io)?),
            "model" => FixtureBody::Model(self.file().model().map_err(io)?),
            "causal" => {
                FixtureBody::Causal(self.file().causal_frame(LoopPolicy::Require).map_err(io)?)
            }
            "sample" => {
                let text = self
                    .space
                    .as_deref()
                    .ok_or("sample fixture without \"space\"")?;
                let space: Space = text.parse().map_err(|e| format!("{e}"))?;
                let points = self
                    .points
                    .iter()
                    .enumerate()
                    .map(|(i, p)| point_from_strings(i, p))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(io)?;
                let frame =
                    sample_frame(&space, &points).map_err(|e: SampleError| e.to_string())?;
                if let Some(w) = frame.loop_violation() {
                    return Err(format!("loop property fails at {}", frame.after().name(w)));
                }
                FixtureBody::Sample {
                    space,
                    points,
                    frame,
                }
            }
            "bisim" => {
                let side = |f: &Option<FrameFile>, which: &str| -> Result<Model, String> {
                    f.as_ref()
                        .ok_or(format!("bisim fixture without \"{which}\""))?
                        .model()
                        .map_err(io)
                };
                FixtureBody::Bisim {
                    left: side(&self.left, "left")?,
                    right: side(&self.right, "right")?,
                    z: self.z.clone(),
                }
            }
            other => return Err(format!("unknown kind {other:?}")),
        })
    }
}

/// Parses one fixture file.
pub fn parse_fixture(name: &str, text: &str) -> Result<Fixture, FixtureError> {
    let invalid = |reason: String| FixtureError::Invalid {
        name: name.to_string(),
        reason,
    };
    let raw: RawFixture = serde_json::from_str(text).map_err(|e| invalid(e.to_string()))?;
    let body = raw.body().map_err(invalid)?;
    Ok(Fixture {
        name: name.to_string(),
        description: raw.description,
        body,
        expect: raw.expect,
    })
}

fn source(name: &str, dir: Option<&Path>) -> Result<String, FixtureError> {
    let embedded = EMBEDDED.iter().find(|(n, _)| *n == name).map(|(_, t)| *t);
    let Some(embedded) = embedded else {
        return Err(FixtureError::Unknown(name.to_string()));
    };
    match dir.map(|d| d.join(format!("{name}.json"))) {
        Some(path) if path.exists() => {
            std::fs::read_to_string(&path).map_err(|e| FixtureError::Invalid {
                name: name.to_string(),
                reason: format!("{}: {e}", path.display()),
            })
        }
        _ => Ok(embedded.to_string()),
    }
}

/// Named fixture. Files in `dir` override the embedded copies by name.
pub fn fixture_from(name: &str, dir: Option<&Path>) -> Result<Fixture, FixtureError> {
    parse_fixture(name, &source(name, dir)?)
}

pub fn fixture(name: &str) -> Result<Fixture, FixtureError> {
    fixture_from(name, None)
}

/// Whole catalog in name order.
pub fn fixtures_from(dir: Option<&Path>) -> Result<Vec<Fixture>, FixtureError> {
    FIXTURE_NAMES.iter().map(|n| fixture_from(n, dir)).collect()
}

pub fn fixtures() -> Result<Vec<Fixture>, FixtureError> {
    fixtures_from(None)
}
