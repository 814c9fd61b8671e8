//! Exact refutation of the aα2f consequent for three null rays in `n ≥ 2`.
//!
//! With `x → z` null, every `t` with `x ⪯ t ⪯ z` lies on the segment
//! `t = x + s·d`, `d = z − x`, `s ∈ [0,1]`. For each target `yᵢ` with
//! `w = yᵢ − x`, `t ⪯ yᵢ` means `w⁰ − s·d⁰ ≥ 0` and `q(s) ≥ 0` where
//!
//! ```text
//! q(s) = A s² + B s + C
//! A = (d⁰)² − ‖d̄‖²,  B = −2(w⁰d⁰ − w̄·d̄),  C = (w⁰)² − ‖w̄‖².
//! ```
//!
//! The certificate shows `q < 0` on `(0, s_max]` with
//! `s_max = min(1, w⁰/d⁰)`, using only the signs of `A, B, C`, the value at
//! `s_max` and, for concave `q`, the vertex and discriminant.

use std::fmt;

use num::{One, Signed, Zero};

use super::{format_rational, relate_minkowski as rel, MinkPoint, WitnessError, Q};

/// Why `{s ∈ (0, s_max] : q(s) ≥ 0}` is empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RayExclusion {
    /// `A ≥ 0`: `q` is convex, negative at `s_max` and just right of `0`.
    ConvexEnds,
    /// `A < 0` with vertex outside `(0, s_max)`: `q` is monotone there.
    ConcaveMonotone,
    /// `A < 0` and `B² − 4AC < 0`: `q` has no real root.
    NegativeDiscriminant,
}

impl fmt::Display for RayExclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RayExclusion::ConvexEnds => "convex-ends",
            RayExclusion::ConcaveMonotone => "concave-monotone",
            RayExclusion::NegativeDiscriminant => "negative-discriminant",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentQuadratic {
    pub a: Q,
    pub b: Q,
    pub c: Q,
    pub s_max: Q,
    pub exclusion: RayExclusion,
}

impl SegmentQuadratic {
    pub fn eval(&self, s: &Q) -> Q {
        &self.a * s * s + &self.b * s + &self.c
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NoWitnessCertificate {
    /// Entries for `y₁` and `y₂`.
    pub targets: [SegmentQuadratic; 2],
}

impl NoWitnessCertificate {
    pub fn render(&self) -> Vec<String> {
        let mut out = vec!["NO WITNESS".to_string()];
        for (i, t) in self.targets.iter().enumerate() {
            out.push(format!(
                "y{}: q(s) = {} s^2 + {} s + {} on (0,{}] {}",
                i + 1,
                format_rational(&t.a),
                format_rational(&t.b),
                format_rational(&t.c),
                format_rational(&t.s_max),
                t.exclusion
            ));
        }
        out
    }
}

fn pre(ok: bool, what: &str) -> Result<(), WitnessError> {
    if ok {
        Ok(())
    } else {
        Err(WitnessError::PreconditionFailed(what.to_string()))
    }
}

/// Future null vectors `a, b` share a ray iff `a⁰·b̄ = b⁰·ā`.
fn same_ray(a: &MinkPoint, b: &MinkPoint) -> bool {
    a.coords[1..]
        .iter()
        .zip(&b.coords[1..])
        .all(|(ai, bi)| a.time() * bi == b.time() * ai)
}

/// `None` when `q(s) ≥ 0` somewhere on `(0, h]`.
fn exclude(a: &Q, b: &Q, c: &Q, h: &Q) -> Option<RayExclusion> {
    let q_h = a * h * h + b * h + c;
    if !q_h.is_negative() {
        return None;
    }
    // Sign of q just right of 0: C, else B, else A.
    let near_zero_nonneg =
        c.is_positive() || (c.is_zero() && (b.is_positive() || (b.is_zero() && !a.is_negative())));
    if near_zero_nonneg {
        return None;
    }
    if !a.is_negative() {
        return Some(RayExclusion::ConvexEnds);
    }
    let two = Q::from_integer(2.into());
    let vertex = -b / (&two * a);
    if !vertex.is_positive() || &vertex >= h {
        return Some(RayExclusion::ConcaveMonotone);
    }
    let disc = b * b - Q::from_integer(4.into()) * a * c;
    disc.is_negative()
        .then_some(RayExclusion::NegativeDiscriminant)
}

fn quadratic(
    x: &MinkPoint,
    y: &MinkPoint,
    d: &MinkPoint,
) -> Result<SegmentQuadratic, WitnessError> {
    let w = y.sub(x);
    let a = d.time() * d.time() - d.spatial_norm_sq();
    let b = -Q::from_integer(2.into()) * (w.time() * d.time() - w.spatial_dot(d));
    let c = w.time() * w.time() - w.spatial_norm_sq();
    let s_max = (w.time() / d.time()).min(Q::one());
    let exclusion = exclude(&a, &b, &c, &s_max).ok_or_else(|| {
        WitnessError::PreconditionFailed(format!(
            "segment from x to z reaches the past cone of {y}"
        ))
    })?;
    Ok(SegmentQuadratic {
        a,
        b,
        c,
        s_max,
        exclusion,
    })
}

/// Certifies that no `t ≠ x` has `x α t α z ∧ (t α y₁ ∨ t α y₂)` when
/// `y₁, y₂, z` sit on three distinct null rays from `x`.
pub fn no_witness_certificate(
    x: &MinkPoint,
    y1: &MinkPoint,
    y2: &MinkPoint,
    z: &MinkPoint,
) -> Result<NoWitnessCertificate, WitnessError> {
    let n = x.spatial_dim();
    pre(n >= 2, "needs at least two spatial dimensions")?;
    pre(
        [y1, y2, z].iter().all(|p| p.spatial_dim() == n),
        "points have different dimensions",
    )?;
    for (p, name) in [(y1, "y1"), (y2, "y2"), (z, "z")] {
        let v = rel(x, p);
        pre(
            v.horismos && v.after && !v.chron,
            &format!("x → {name} with {name} ≠ x"),
        )?;
    }
    let (w1, w2, d) = (y1.sub(x), y2.sub(x), z.sub(x));
    pre(
        !same_ray(&w1, &w2) && !same_ray(&w1, &d) && !same_ray(&w2, &d),
        "rays not distinct",
    )?;
    for (a, b) in [(y1, y2), (y1, z), (y2, z)] {
        pre(
            !rel(a, b).caus && !rel(b, a).caus,
            "targets not pairwise spacelike",
        )?;
    }
    Ok(NoWitnessCertificate {
        targets: [quadratic(x, y1, &d)?, quadratic(x, y2, &d)?],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minkowski::q;

    fn p(c: &[i64]) -> MinkPoint {
        MinkPoint::from_ints(c)
    }

    #[test]
    fn canonical_three_rays() {
        let (x, y1, y2, z) = (p(&[0, 0, 0]), p(&[1, 1, 0]), p(&[1, 0, 1]), p(&[1, -1, 0]));
        let cert = no_witness_certificate(&x, &y1, &y2, &z).unwrap();
        // Null targets: A = C = 0, B = −2(1 − w̄·d̄).
        assert_eq!(cert.targets[0].b, Q::from_integer((-4).into()));
        assert_eq!(cert.targets[1].b, Q::from_integer((-2).into()));
        assert!(cert
            .targets
            .iter()
            .all(|t| t.exclusion == RayExclusion::ConvexEnds));
        assert_eq!(
            cert.render()[1],
            "y1: q(s) = 0 s^2 + -4 s + 0 on (0,1] convex-ends"
        );
        for k in 1..=200 {
            let t = x.lerp(&z, &q(k, 200));
            assert!(!rel(&t, &y1).caus && !rel(&t, &y2).caus);
        }
    }

    #[test]
    fn collinear_ray_rejected() {
        let e = no_witness_certificate(
            &p(&[0, 0, 0]),
            &p(&[1, 1, 0]),
            &p(&[1, 0, 1]),
            &p(&[2, 2, 0]),
        )
        .unwrap_err();
        assert_eq!(
            e,
            WitnessError::PreconditionFailed("rays not distinct".into())
        );
    }

    #[test]
    fn non_null_inputs_rejected() {
        let e = no_witness_certificate(
            &p(&[0, 0, 0]),
            &p(&[2, 1, 0]),
            &p(&[1, 0, 1]),
            &p(&[1, -1, 0]),
        )
        .unwrap_err();
        assert!(matches!(e, WitnessError::PreconditionFailed(_)));
        assert!(
            no_witness_certificate(&p(&[0, 0]), &p(&[1, 1]), &p(&[1, -1]), &p(&[2, 2])).is_err()
        );
    }

    #[test]
    fn exclusion_cases() {
        let i = |v: i64| Q::from_integer(v.into());
        assert_eq!(
            exclude(&i(1), &i(-3), &i(0), &i(1)),
            Some(RayExclusion::ConvexEnds)
        );
        assert_eq!(
            exclude(&i(-1), &i(-1), &i(-1), &i(1)),
            Some(RayExclusion::ConcaveMonotone)
        );
        assert_eq!(
            exclude(&i(-4), &i(2), &i(-1), &i(1)),
            Some(RayExclusion::NegativeDiscriminant)
        );
        // Vertex at 1/2 with value 0.
        assert_eq!(exclude(&i(-4), &i(4), &i(-1), &i(1)), None);
        assert_eq!(exclude(&i(0), &i(0), &i(0), &i(1)), None);
        assert_eq!(exclude(&i(0), &i(1), &i(0), &i(1)), None);
        assert_eq!(
            exclude(&i(-1), &i(0), &i(0), &i(1)),
            Some(RayExclusion::ConcaveMonotone)
        );
    }
}
