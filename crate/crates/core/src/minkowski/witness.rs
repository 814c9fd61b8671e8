//! Witness construction for the after formulas in Minkowski space, and the
//! horismos-chain check.
//!
//! Every returned point is re-verified with [`relate_minkowski`]; a failed
//! verification surfaces as `WitnessSearchExhausted` rather than a wrong
//! answer.

use num::{One, Signed};

use super::{q, relate_minkowski as rel, MinkPoint, Space, Q};

/// Hard cap on halving steps. Each step halves a rational parameter, so the
/// cap also bounds denominator growth.
pub const HALVING_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WitnessError {
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    /// The existence argument guarantees a witness; reaching this is a bug.
    #[error("witness search exhausted: {0}")]
    WitnessSearchExhausted(String),
}

fn pre(ok: bool, what: &str) -> Result<(), WitnessError> {
    if ok {
        Ok(())
    } else {
        Err(WitnessError::PreconditionFailed(what.to_string()))
    }
}

fn same_dim(points: &[&MinkPoint], n: Option<usize>) -> Result<usize, WitnessError> {
    let d = points[0].spatial_dim();
    pre(d >= 1, "points need at least one spatial dimension")?;
    pre(
        points.iter().all(|p| p.spatial_dim() == d),
        "points have different dimensions",
    )?;
    if let Some(n) = n {
        pre(d == n, &format!("points must have {n} spatial dimensions"))?;
    }
    Ok(d)
}

fn after(a: &MinkPoint, b: &MinkPoint) -> bool {
    rel(a, b).after
}

fn incomparable(a: &MinkPoint, b: &MinkPoint) -> bool {
    a != b && !after(a, b) && !after(b, a)
}

/// First `t = x + s·d` with `s ∈ {1/2, 1/4, …}` satisfying `ok`.
fn halve(
    x: &MinkPoint,
    d: &MinkPoint,
    ok: impl Fn(&MinkPoint) -> bool,
    what: &str,
) -> Result<MinkPoint, WitnessError> {
    let mut s = q(1, 2);
    for _ in 0..HALVING_CAP {
        let t = x.add(&d.scale(&s));
        if ok(&t) {
            return Ok(t);
        }
        s /= Q::from_integer(2.into());
    }
    Err(WitnessError::WitnessSearchExhausted(what.to_string()))
}

/// `x α t α z ∧ (t α y₁ ∨ t α y₂)`
fn verify(
    x: &MinkPoint,
    t: &MinkPoint,
    z: &MinkPoint,
    ys: [&MinkPoint; 2],
) -> Result<MinkPoint, WitnessError> {
    if after(x, t) && after(t, z) && ys.iter().any(|y| after(t, y)) {
        Ok(t.clone())
    } else {
        Err(WitnessError::WitnessSearchExhausted(format!(
            "constructed {t} fails verification"
        )))
    }
}

/// `t` with `x ≪ t ≪ y, z` for `x ≪ y, z`: the diamonds `I⁺(x) ∩ I⁻(y)` and
/// `I⁺(x) ∩ I⁻(z)` both contain `x + s·((y−x)+(z−x))` for small `s > 0`.
fn two_density(x: &MinkPoint, y: &MinkPoint, z: &MinkPoint) -> Result<MinkPoint, WitnessError> {
    let d = y.sub(x).add(&z.sub(x));
    halve(
        x,
        &d,
        |t| rel(x, t).chron && rel(t, y).chron && rel(t, z).chron,
        "two-density",
    )
}

/// `t` on the null segment `(x, z)` with `t ≪ y`, given `x ≪ y`. Points
/// near `x` lie in the open set `I⁻(y)`.
fn null_segment(x: &MinkPoint, y: &MinkPoint, z: &MinkPoint) -> Result<MinkPoint, WitnessError> {
    halve(x, &z.sub(x), |t| rel(t, y).chron, "null segment")
}

/// Witness for the aαf consequent in Minkowski space.
///
/// Requires `x α y α y₁, y₂`, `x α z` and `y₁ ⋈ y₂`. Since `y₁, y₂` are
/// incomparable, not both lie on the null cone of `x`; the construction picks
/// the first `yᵢ` with `x ≪ yᵢ`.
pub fn aaf_witness(
    space: &Space,
    x: &MinkPoint,
    y: &MinkPoint,
    y1: &MinkPoint,
    y2: &MinkPoint,
    z: &MinkPoint,
) -> Result<MinkPoint, WitnessError> {
    let Space::Minkowski(n) = space else {
        return Err(WitnessError::PreconditionFailed(
            "aaf witnesses are built in Minkowski space only".into(),
        ));
    };
    same_dim(&[x, y, y1, y2, z], Some(*n))?;
    if x == z {
        return Ok(x.clone());
    }
    pre(after(x, y), "x α y")?;
    pre(after(y, y1) && after(y, y2), "y α y1 and y α y2")?;
    pre(after(x, z), "x α z")?;
    pre(incomparable(y1, y2), "y1, y2 distinct and α-incomparable")?;
    let yi = [y1, y2]
        .into_iter()
        .find(|yi| rel(x, yi).chron)
        .ok_or_else(|| {
            WitnessError::WitnessSearchExhausted("neither y1 nor y2 is chronological from x".into())
        })?;
    let t = if rel(x, z).chron {
        two_density(x, yi, z)?
    } else {
        null_segment(x, yi, z)?
    };
    verify(x, &t, z, [y1, y2])
}

/// Light line of a nonzero 2D null vector: `true` for `(1,1)`, `false` for `(1,−1)`.
fn null_side(v: &MinkPoint) -> bool {
    v.coords[1].is_positive()
}

/// Witness for the aα2f consequent in 2D Minkowski space.
///
/// With only two light lines through `x`, either some `yᵢ` is
/// chronologically after `x`, or `y₁, y₂` occupy both light lines.
pub fn aa2f_witness_2d(
    x: &MinkPoint,
    y1: &MinkPoint,
    y2: &MinkPoint,
    z: &MinkPoint,
) -> Result<MinkPoint, WitnessError> {
    same_dim(&[x, y1, y2, z], Some(1))?;
    if x == z {
        return Ok(x.clone());
    }
    pre(after(x, y1) && after(x, y2) && after(x, z), "x α y1, y2, z")?;
    pre(incomparable(y1, y2), "y1, y2 distinct and α-incomparable")?;
    let z_chron = rel(x, z).chron;
    let t = if let Some(yi) = [y1, y2].into_iter().find(|yi| rel(x, yi).chron) {
        if z_chron {
            two_density(x, yi, z)?
        } else {
            null_segment(x, yi, z)?
        }
    } else {
        // Both yᵢ null from x, hence on opposite light lines.
        let (w1, w2) = (y1.sub(x), y2.sub(x));
        if null_side(&w1) == null_side(&w2) {
            return Err(WitnessError::WitnessSearchExhausted(
                "null y1, y2 share a light line".into(),
            ));
        }
        let dz = z.sub(x);
        // Reach along y₁'s line: all of it if z is on that line, else the
        // component of dz along it.
        let (w, reach) = if z_chron {
            let sigma = if null_side(&w1) { Q::one() } else { -Q::one() };
            (
                &w1,
                (dz.time() + &sigma * &dz.coords[1]) / Q::from_integer(2.into()),
            )
        } else {
            let w = if null_side(&dz) == null_side(&w1) {
                &w1
            } else {
                &w2
            };
            (w, dz.time().clone())
        };
        let a = w.time().clone().min(reach);
        let dir = w.scale(&(Q::one() / w.time()));
        x.add(&dir.scale(&(a / Q::from_integer(2.into()))))
    };
    verify(x, &t, z, [y1, y2])
}

/// Whether `y₁ → y₂ ∨ y₂ → y₁` given `x → y → y₁, y₂` and `x → y₁, y₂`.
pub fn horismos_chain_check(
    x: &MinkPoint,
    y: &MinkPoint,
    y1: &MinkPoint,
    y2: &MinkPoint,
) -> Result<bool, WitnessError> {
    same_dim(&[x, y, y1, y2], None)?;
    let h = |a: &MinkPoint, b: &MinkPoint| rel(a, b).horismos;
    pre(h(x, y), "x → y")?;
    pre(h(y, y1) && h(y, y2), "y → y1 and y → y2")?;
    pre(h(x, y1) && h(x, y2), "x → y1 and x → y2")?;
    Ok(h(y1, y2) || h(y2, y1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> MinkPoint {
        MinkPoint::from_ints(c)
    }

    fn pq(c: &[(i64, i64)]) -> MinkPoint {
        MinkPoint::new(c.iter().map(|&(a, b)| q(a, b)).collect())
    }

    #[test]
    fn aaf_null_case() {
        let t = aaf_witness(
            &Space::Minkowski(1),
            &p(&[0, 0]),
            &p(&[1, 0]),
            &p(&[2, 1]),
            &p(&[2, -1]),
            &p(&[1, 1]),
        )
        .unwrap();
        assert_eq!(t, pq(&[(1, 2), (1, 2)]));
    }

    #[test]
    fn aaf_degenerate_and_preconditions() {
        let s = Space::Minkowski(1);
        let x = p(&[0, 0]);
        assert_eq!(
            aaf_witness(&s, &x, &p(&[1, 0]), &p(&[2, 1]), &p(&[2, -1]), &x).unwrap(),
            x
        );
        let e =
            aaf_witness(&s, &x, &p(&[1, 0]), &p(&[2, 1]), &p(&[3, 1]), &p(&[1, 1])).unwrap_err();
        assert!(matches!(e, WitnessError::PreconditionFailed(_)));
        let cyl = Space::Cylinder(crate::minkowski::Cylinder::unpunctured(q(1, 1)));
        assert!(aaf_witness(&cyl, &x, &x, &x, &x, &x).is_err());
        let e = aaf_witness(&Space::Minkowski(2), &x, &x, &x, &x, &p(&[1, 0])).unwrap_err();
        assert!(matches!(e, WitnessError::PreconditionFailed(_)));
    }

    #[test]
    fn aaf_chronological_z() {
        let x = p(&[0, 0, 0]);
        let t = aaf_witness(
            &Space::Minkowski(2),
            &x,
            &p(&[1, 0, 0]),
            &p(&[3, 1, 0]),
            &p(&[3, -1, 1]),
            &p(&[2, 0, 1]),
        )
        .unwrap();
        assert!(rel(&x, &t).chron);
    }

    #[test]
    fn aa2f_examples() {
        let x = p(&[0, 0]);
        let (y1, y2) = (p(&[1, 1]), p(&[1, -1]));
        assert_eq!(
            aa2f_witness_2d(&x, &y1, &y2, &p(&[2, 2])).unwrap(),
            pq(&[(1, 2), (1, 2)])
        );
        let z = p(&[3, 1]);
        let t = aa2f_witness_2d(&x, &y1, &y2, &z).unwrap();
        assert!(after(&x, &t) && after(&t, &z) && (after(&t, &y1) || after(&t, &y2)));
        assert_eq!(aa2f_witness_2d(&x, &y1, &y2, &x).unwrap(), x);
        // z on the left line.
        let t = aa2f_witness_2d(&x, &y1, &p(&[3, -3]), &p(&[1, -1])).unwrap();
        assert_eq!(t, pq(&[(1, 2), (-1, 2)]));
    }

    #[test]
    fn aa2f_mixed_cases() {
        let x = p(&[0, 0]);
        // y₁ chronological, z null.
        let t = aa2f_witness_2d(&x, &p(&[4, 1]), &p(&[2, -2]), &p(&[2, 2])).unwrap();
        assert!(rel(&t, &p(&[4, 1])).chron);
        // y₁ chronological, z chronological.
        let t = aa2f_witness_2d(&x, &p(&[4, 1]), &p(&[2, -2]), &p(&[2, 0])).unwrap();
        assert!(rel(&x, &t).chron);
        let e = aa2f_witness_2d(&x, &p(&[1, 1]), &p(&[2, 2]), &p(&[1, 0])).unwrap_err();
        assert!(matches!(e, WitnessError::PreconditionFailed(_)));
        assert!(aa2f_witness_2d(&p(&[0, 0, 0]), &x, &x, &x).is_err());
    }

    #[test]
    fn horismos_chain() {
        let x = p(&[0, 0, 0]);
        assert!(horismos_chain_check(&x, &p(&[1, 1, 0]), &p(&[2, 2, 0]), &p(&[3, 3, 0])).unwrap());
        assert!(horismos_chain_check(&x, &x, &p(&[1, 0, 1]), &p(&[2, 0, 2])).unwrap());
        let e = horismos_chain_check(&x, &p(&[1, 0, 0]), &x, &x).unwrap_err();
        assert!(matches!(e, WitnessError::PreconditionFailed(_)));
    }
}
