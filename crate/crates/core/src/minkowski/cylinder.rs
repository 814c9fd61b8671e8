//! Null-quotient cylinder: 2D Minkowski space modulo `(t,θ) ∼ (t+L, θ+L)`.
//!
//! The identification shifts along the null direction `(1,1)`, so
//! `u = Δt − Δθ` is the same for every pair of representatives while
//! `v = Δt + Δθ` moves by `2L` per winding. Lifting `y` by `k` windings
//! gives a Minkowski separation with `(Δ⁰)² − (Δ¹)² = u·(v + 2kL)` and
//! `2Δ⁰ = u + v + 2kL`. Hence:
//!
//! - `u > 0`: some lift is chronological, so `x ≪ y`.
//! - `u = 0`: lifts are null or zero; `y` sits on the right-null circle
//!   through `x` and every lift with `v + 2kL > 0` is a causal curve. The
//!   shortest one has arc `d = (θy − θx) mod L` taken in `(0, L]`, and
//!   `d = L` is the loop back to `x`.
//! - `u < 0`: no lift lies in the future cone.
//!
//! A puncture `q` can only obstruct the `u = 0` case: chronological diamonds
//! are open, so a curve can always dodge finitely many points. On the null
//! circle every longer arc contains the shortest, so `x α y` fails exactly
//! when a puncture on the circle sits at arc position in `(0, d)`.

use num::{Signed, Zero};

use super::{check_dim, MinkPoint, RelateError, RelationVerdict, Q};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CylinderError {
    #[error("circumference must be positive")]
    NonPositiveCircumference,
    #[error("puncture {0} is not a (t,θ) pair")]
    PunctureDimension(String),
    #[error("punctures {0} and {1} coincide on the cylinder")]
    DuplicatePuncture(String, String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cylinder {
    l: Q,
    punctures: Vec<MinkPoint>,
}

/// `u(x,y) = (y⁰−x⁰) − (y¹−x¹)`
pub(crate) fn u(x: &MinkPoint, y: &MinkPoint) -> Q {
    (&y.coords[0] - &x.coords[0]) - (&y.coords[1] - &x.coords[1])
}

/// `r mod m` in `[0, m)` for `m > 0`.
fn modulo(r: &Q, m: &Q) -> Q {
    let k = (r / m).floor();
    r - k * m
}

impl Cylinder {
    pub fn new(l: Q, punctures: Vec<MinkPoint>) -> Result<Cylinder, CylinderError> {
        if !l.is_positive() {
            return Err(CylinderError::NonPositiveCircumference);
        }
        for p in &punctures {
            if p.coords.len() != 2 {
                return Err(CylinderError::PunctureDimension(p.to_string()));
            }
        }
        let c = Cylinder { l, punctures };
        for (i, p) in c.punctures.iter().enumerate() {
            if let Some(q) = c.punctures[..i].iter().find(|q| c.same(p, q)) {
                return Err(CylinderError::DuplicatePuncture(
                    q.to_string(),
                    p.to_string(),
                ));
            }
        }
        Ok(c)
    }

    pub fn unpunctured(l: Q) -> Cylinder {
        Cylinder {
            l,
            punctures: Vec::new(),
        }
    }

    pub fn circumference(&self) -> &Q {
        &self.l
    }

    pub fn punctures(&self) -> &[MinkPoint] {
        &self.punctures
    }

    /// Same point modulo the identification: `u = 0` and `Δθ ∈ Lℤ`.
    pub fn same(&self, x: &MinkPoint, y: &MinkPoint) -> bool {
        u(x, y).is_zero() && ((&y.coords[1] - &x.coords[1]) / &self.l).is_integer()
    }

    pub fn is_puncture(&self, x: &MinkPoint) -> bool {
        self.punctures.iter().any(|q| self.same(q, x))
    }

    /// Arc position of `y` along the right-null circle from `x`, in `(0, L]`.
    /// Requires `u(x,y) = 0`.
    fn arc(&self, x: &MinkPoint, y: &MinkPoint) -> Q {
        let d = modulo(&(&y.coords[1] - &x.coords[1]), &self.l);
        if d.is_zero() {
            self.l.clone()
        } else {
            d
        }
    }

    /// Null-circle reachability for `u(x,y) = 0`.
    fn null_arc_clear(&self, x: &MinkPoint, y: &MinkPoint) -> bool {
        let d = self.arc(x, y);
        self.punctures
            .iter()
            .filter(|q| u(x, q).is_zero())
            .all(|q| self.arc(x, q) >= d)
    }

    pub fn relate(&self, x: &MinkPoint, y: &MinkPoint) -> Result<RelationVerdict, RelateError> {
        check_dim(1, x)?;
        check_dim(1, y)?;
        for p in [x, y] {
            if self.is_puncture(p) {
                return Err(RelateError::PointIsPuncture(p.to_string()));
            }
        }
        let uu = u(x, y);
        let same = self.same(x, y);
        let chron = uu.is_positive();
        let after = chron || (uu.is_zero() && self.null_arc_clear(x, y));
        let caus = after || same;
        Ok(RelationVerdict {
            chron,
            caus,
            horismos: caus && !chron,
            after,
        })
    }

    /// Canonical representative with `θ ∈ [0, L)`.
    pub fn reduce(&self, x: &MinkPoint) -> MinkPoint {
        let k = (&x.coords[1] / &self.l).floor();
        let shift = k * &self.l;
        MinkPoint::new(vec![&x.coords[0] - &shift, &x.coords[1] - &shift])
    }
}

/// Whether `x α x` on the cylinder: the right-null circle through `x` meets
/// no puncture.
pub fn after_reflexive(cyl: &Cylinder, x: &MinkPoint) -> bool {
    cyl.punctures.iter().all(|q| !u(x, q).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minkowski::{q, q_int, relate, Space};

    fn p(t: i64, th: i64) -> MinkPoint {
        MinkPoint::from_ints(&[t, th])
    }

    fn unit() -> Cylinder {
        Cylinder::unpunctured(q_int(1))
    }

    #[test]
    fn every_point_loops() {
        let c = unit();
        let v = c.relate(&p(0, 0), &p(0, 0)).unwrap();
        assert!(v.after && v.caus && v.horismos && !v.chron);
        assert_eq!(v.kind(true), "loop");
        let x = MinkPoint::new(vec![q(1, 3), q(5, 7)]);
        assert!(after_reflexive(&c, &x));
        assert!(c.relate(&x, &x).unwrap().after);
    }

    #[test]
    fn identification_and_reduce() {
        let c = Cylinder::unpunctured(q(3, 2));
        let x = MinkPoint::new(vec![q(1, 2), q(1, 4)]);
        let y = MinkPoint::new(vec![q(1, 2) + q(3, 1), q(1, 4) + q(3, 1)]);
        assert!(c.same(&x, &y));
        let r = c.reduce(&MinkPoint::new(vec![q_int(0), q(-1, 2)]));
        assert_eq!(r, MinkPoint::new(vec![q(3, 2), q_int(1)]));
        assert!(!c.same(&p(0, 0), &MinkPoint::new(vec![q(1, 2), q(1, 2)])));
    }

    #[test]
    fn past_points_reachable_by_winding() {
        // u = 1 > 0 even though y is earlier in t.
        let v = unit().relate(&p(0, 0), &p(-5, -6)).unwrap();
        assert!(v.chron && v.after);
        // u = 0: half a turn along the null circle.
        let v = unit()
            .relate(&p(0, 0), &MinkPoint::new(vec![q(-1, 2), q(-1, 2)]))
            .unwrap();
        assert!(v.horismos && v.after && !v.chron);
        let v = unit().relate(&p(0, 0), &p(1, 2)).unwrap();
        assert_eq!(v, RelationVerdict::default());
    }

    #[test]
    fn puncture_examples() {
        let c = Cylinder::new(q_int(1), vec![p(0, 0)]).unwrap();
        assert!(!after_reflexive(&c, &p(0, 0)));
        assert!(!after_reflexive(
            &c,
            &MinkPoint::new(vec![q(1, 2), q(1, 2)])
        ));
        assert!(!after_reflexive(&c, &p(1, 1)));
        assert!(after_reflexive(&c, &p(1, 0)));
        assert!(matches!(
            c.relate(&p(0, 0), &p(1, 0)),
            Err(RelateError::PointIsPuncture(_))
        ));
        assert!(matches!(
            c.relate(&p(1, 0), &p(5, 5)),
            Err(RelateError::PointIsPuncture(_))
        ));
    }

    #[test]
    fn puncture_blocks_shorter_arc_only() {
        let c = Cylinder::new(q_int(1), vec![p(0, 0)]).unwrap();
        let a = MinkPoint::new(vec![q(1, 4), q(1, 4)]);
        let b = MinkPoint::new(vec![q(1, 2), q(1, 2)]);
        // a reaches b along the circle; b would have to pass the puncture.
        assert!(c.relate(&a, &b).unwrap().after);
        assert!(!c.relate(&b, &a).unwrap().after);
        assert!(c.relate(&b, &a).unwrap() == RelationVerdict::default());
        assert!(!c.relate(&a, &a).unwrap().after);
        assert!(c.relate(&a, &a).unwrap().caus);
        // Off-circle pairs are untouched.
        assert!(c.relate(&a, &p(1, 0)).unwrap().chron);
    }

    #[test]
    fn cylinder_rejects_bad_descriptors() {
        assert_eq!(
            Cylinder::new(q_int(0), vec![]),
            Err(CylinderError::NonPositiveCircumference)
        );
        assert!(matches!(
            Cylinder::new(q_int(1), vec![p(0, 0), p(2, 2)]),
            Err(CylinderError::DuplicatePuncture(..))
        ));
        assert!(matches!(
            Cylinder::new(q_int(1), vec![MinkPoint::from_ints(&[0, 0, 0])]),
            Err(CylinderError::PunctureDimension(_))
        ));
        let s = Space::Cylinder(unit());
        assert!(relate(&s, &MinkPoint::from_ints(&[0, 0, 0]), &p(0, 0)).is_err());
    }
}
