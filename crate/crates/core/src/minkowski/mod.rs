//! Exact causal relations of Minkowski space and of null-quotient cylinders
//! over rational points.
//!
//! Norms never appear: with `Δ = y − x`, every comparison `Δ⁰ ⋚ ‖Δ̄‖` is
//! decided as `Δ⁰ ≥ 0 ∧ (Δ⁰)² ⋚ Σ(Δⁱ)²` once the sign of `Δ⁰` is known.

mod certificate;
mod cylinder;
pub mod sample;
mod witness;

use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, Signed, Zero};

pub use certificate::{
    no_witness_certificate, NoWitnessCertificate, RayExclusion, SegmentQuadratic,
};
pub use cylinder::{after_reflexive, Cylinder, CylinderError};
pub use sample::{sample_frame, with_loop_partners, SampleError};
pub use witness::{aa2f_witness_2d, aaf_witness, horismos_chain_check, WitnessError, HALVING_CAP};

/// Exact rational scalar.
pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn q_int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational {0:?}")]
pub struct BadRational(pub String);

/// Parses `"3"`, `"-3/4"`, `" 1/2 "`.
pub fn parse_rational(s: &str) -> Result<Q, BadRational> {
    let t = s.trim();
    Q::from_str(t)
        .ok()
        .filter(|r| !r.denom().is_zero())
        .ok_or_else(|| BadRational(s.to_string()))
}

pub fn format_rational(r: &Q) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Point `(x⁰, x¹, …, xⁿ)`, time first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MinkPoint {
    pub coords: Vec<Q>,
}

impl MinkPoint {
    pub fn new(coords: Vec<Q>) -> MinkPoint {
        MinkPoint { coords }
    }

    pub fn from_ints(c: &[i64]) -> MinkPoint {
        MinkPoint::new(c.iter().map(|&v| q_int(v)).collect())
    }

    /// Origin with `n` spatial dimensions.
    pub fn origin(n: usize) -> MinkPoint {
        MinkPoint::new(vec![Q::zero(); n + 1])
    }

    /// Spatial dimension `n`.
    pub fn spatial_dim(&self) -> usize {
        self.coords.len().saturating_sub(1)
    }

    pub fn time(&self) -> &Q {
        &self.coords[0]
    }

    pub fn add(&self, o: &MinkPoint) -> MinkPoint {
        MinkPoint::new(
            self.coords
                .iter()
                .zip(&o.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, o: &MinkPoint) -> MinkPoint {
        MinkPoint::new(
            self.coords
                .iter()
                .zip(&o.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scale(&self, s: &Q) -> MinkPoint {
        MinkPoint::new(self.coords.iter().map(|a| a * s).collect())
    }

    /// `x + s·(y − x)`
    pub fn lerp(&self, y: &MinkPoint, s: &Q) -> MinkPoint {
        self.add(&y.sub(self).scale(s))
    }

    /// `Σ(xⁱ)²` over spatial components.
    pub fn spatial_norm_sq(&self) -> Q {
        self.coords[1..].iter().map(|c| c * c).sum()
    }

    /// Spatial dot product.
    pub fn spatial_dot(&self, o: &MinkPoint) -> Q {
        self.coords[1..]
            .iter()
            .zip(&o.coords[1..])
            .map(|(a, b)| a * b)
            .sum()
    }

    /// Parses `"0,1/2,-3"`.
    pub fn parse(text: &str) -> Result<MinkPoint, BadRational> {
        text.split(',')
            .map(parse_rational)
            .collect::<Result<_, _>>()
            .map(MinkPoint::new)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coords.iter().map(format_rational).collect()
    }
}

impl fmt::Display for MinkPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Space {
    /// Minkowski space with `n ≥ 1` spatial dimensions.
    Minkowski(usize),
    Cylinder(Cylinder),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpaceParseError {
    #[error("space must be mink:N or cyl:L=Q[,puncture=t,θ]..., got {0:?}")]
    Syntax(String),
    #[error(transparent)]
    Rational(#[from] BadRational),
    #[error(transparent)]
    Cylinder(#[from] CylinderError),
}

impl FromStr for Space {
    type Err = SpaceParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let syntax = || SpaceParseError::Syntax(s.to_string());
        if let Some(n) = s.strip_prefix("mink:") {
            let n: usize = n.trim().parse().map_err(|_| syntax())?;
            return if n >= 1 {
                Ok(Space::Minkowski(n))
            } else {
                Err(syntax())
            };
        }
        let rest = s.strip_prefix("cyl:").ok_or_else(syntax)?;
        let mut parts = rest.split(',');
        let l = parts
            .next()
            .and_then(|p| p.trim().strip_prefix("L="))
            .ok_or_else(syntax)?;
        let l = parse_rational(l)?;
        let mut punctures = Vec::new();
        while let Some(p) = parts.next() {
            let t = p.trim().strip_prefix("puncture=").ok_or_else(syntax)?;
            let theta = parts.next().ok_or_else(syntax)?;
            punctures.push(MinkPoint::new(vec![
                parse_rational(t)?,
                parse_rational(theta)?,
            ]));
        }
        Ok(Space::Cylinder(Cylinder::new(l, punctures)?))
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Space::Minkowski(n) => write!(f, "mink:{n}"),
            Space::Cylinder(c) => {
                write!(f, "cyl:L={}", format_rational(c.circumference()))?;
                for p in c.punctures() {
                    write!(
                        f,
                        ",puncture={},{}",
                        format_rational(&p.coords[0]),
                        format_rational(&p.coords[1])
                    )?;
                }
                Ok(())
            }
        }
    }
}

impl Space {
    pub fn spatial_dim(&self) -> usize {
        match self {
            Space::Minkowski(n) => *n,
            Space::Cylinder(_) => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RelationVerdict {
    /// `x ≪ y`
    pub chron: bool,
    /// `x ⪯ y`
    pub caus: bool,
    /// `x → y`
    pub horismos: bool,
    /// `x α y`
    pub after: bool,
}

impl RelationVerdict {
    /// Strongest description: `chron`, `horismos` (for `x ≠ y`), `equal`,
    /// `loop` (cylinder self-relation), or `none`.
    pub fn kind(&self, same: bool) -> &'static str {
        match (self.chron, self.horismos, same) {
            (true, _, _) => "chron",
            (false, true, false) => "horismos",
            (false, _, true) if self.after => "loop",
            (false, _, true) => "equal",
            _ => "none",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RelateError {
    #[error(
        "dimension mismatch: space has {expected} spatial dimensions, point {point} has {found}"
    )]
    DimensionMismatch {
        expected: usize,
        found: usize,
        point: String,
    },
    #[error("point {0} is a puncture of the cylinder")]
    PointIsPuncture(String),
}

pub(crate) fn check_dim(n: usize, p: &MinkPoint) -> Result<(), RelateError> {
    if p.coords.len() == n + 1 {
        Ok(())
    } else {
        Err(RelateError::DimensionMismatch {
            expected: n,
            found: p.spatial_dim(),
            point: p.to_string(),
        })
    }
}

/// Minkowski relations on `Δ = y − x`.
pub fn relate_minkowski(x: &MinkPoint, y: &MinkPoint) -> RelationVerdict {
    let d = y.sub(x);
    let same = d.coords.iter().all(Zero::is_zero);
    let t = d.time();
    let t2 = t * t;
    let s2 = d.spatial_norm_sq();
    let future = !t.is_negative();
    let chron = t.is_positive() && t2 > s2;
    let caus = same || (future && t2 >= s2);
    let horismos = same || (future && t2 == s2);
    RelationVerdict {
        chron,
        caus,
        horismos,
        after: caus && !same,
    }
}

pub fn relate(space: &Space, x: &MinkPoint, y: &MinkPoint) -> Result<RelationVerdict, RelateError> {
    check_dim(space.spatial_dim(), x)?;
    check_dim(space.spatial_dim(), y)?;
    match space {
        Space::Minkowski(_) => Ok(relate_minkowski(x, y)),
        Space::Cylinder(c) => c.relate(x, y),
    }
}

/// Equality of points in `space` (modulo the identification on cylinders).
pub fn same_point(space: &Space, x: &MinkPoint, y: &MinkPoint) -> bool {
    match space {
        Space::Minkowski(_) => x == y,
        Space::Cylinder(c) => c.same(x, y),
    }
}
