//! Finite causal frames sampled from a space, and seeded generators for
//! points and witness configurations.
//!
//! Generators draw from a bounded rational grid and build vectors whose
//! causal character is known by construction; every consumer still checks
//! premises with `relate` before using a configuration.

use num::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

use super::{q, q_int, relate, same_point, Cylinder, MinkPoint, RelateError, Space, Q};
use crate::ladder::{CausalFrame, InvariantViolation, LoopPolicy};
use crate::random::Rng64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SampleError {
    #[error("points {0} and {1} coincide in the space")]
    Duplicate(usize, usize),
    #[error(transparent)]
    Relate(#[from] RelateError),
    #[error(transparent)]
    Invariant(#[from] InvariantViolation),
}

/// World names `p0 …`, zero-padded so lexicographic order is index order.
pub fn point_names(n: usize) -> Vec<String> {
    let width = n.saturating_sub(1).to_string().len();
    (0..n).map(|i| format!("p{i:0width$}")).collect()
}

/// Causal frame over `points` with `chron` and `after` filled by `relate`.
///
/// The loop property is not imposed: a finite sample can keep a looping
/// point while dropping every other point of its loop. Use
/// [`with_loop_partners`] first when it matters.
pub fn sample_frame(space: &Space, points: &[MinkPoint]) -> Result<CausalFrame, SampleError> {
    for j in 0..points.len() {
        if let Some(i) = (0..j).find(|&i| same_point(space, &points[i], &points[j])) {
            return Err(SampleError::Duplicate(i, j));
        }
    }
    let mut chron = Vec::new();
    let mut after = Vec::new();
    for (i, x) in points.iter().enumerate() {
        for (j, y) in points.iter().enumerate() {
            let v = relate(space, x, y)?;
            if v.chron {
                chron.push((i, j));
            }
            if v.after {
                after.push((i, j));
            }
        }
    }
    Ok(CausalFrame::from_indices(
        point_names(points.len()),
        chron,
        after,
        LoopPolicy::Ignore,
    )?)
}

/// Adds `x + (L/2, L/2)` for every looping point `x` whose null circle holds
/// no other sampled point, so that the sampled `α` keeps the loop property.
pub fn with_loop_partners(cyl: &Cylinder, points: &[MinkPoint]) -> Vec<MinkPoint> {
    let half = cyl.circumference() / q_int(2);
    let shift = MinkPoint::new(vec![half.clone(), half]);
    let mut out = points.to_vec();
    for x in points {
        if !super::after_reflexive(cyl, x) {
            continue;
        }
        let mated = out
            .iter()
            .any(|y| super::cylinder::u(x, y).is_zero() && !cyl.same(x, y));
        if !mated {
            out.push(x.add(&shift));
        }
    }
    out
}

/// `k/den` with `|k| ≤ bound·den`.
pub fn grid(rng: &mut Rng64, bound: i64, den: i64) -> Q {
    q(rng.gen_range(-bound * den..=bound * den), den)
}

fn positive(rng: &mut Rng64, bound: i64, den: i64) -> Q {
    q(rng.gen_range(1..=bound * den), den)
}

pub fn random_point(rng: &mut Rng64, space: &Space) -> MinkPoint {
    match space {
        Space::Minkowski(n) => MinkPoint::new((0..=*n).map(|_| grid(rng, 3, 4)).collect()),
        Space::Cylinder(c) => loop {
            let theta = c.circumference() * q(rng.gen_range(0..8), 8);
            let p = MinkPoint::new(vec![grid(rng, 2, 4), theta]);
            if !c.is_puncture(&p) {
                break p;
            }
        },
    }
}

/// Rational unit vector in `ℝⁿ` by inverse stereographic projection of a
/// grid point of `ℝⁿ⁻¹`, with coordinates shuffled and signs flipped.
pub fn unit_vector(rng: &mut Rng64, n: usize) -> Vec<Q> {
    let a: Vec<Q> = (0..n - 1).map(|_| grid(rng, 2, 3)).collect();
    let s: Q = a.iter().map(|x| x * x).sum();
    let d = &s + Q::one();
    let mut u: Vec<Q> = a.iter().map(|x| q_int(2) * x / &d).collect();
    u.push((s - Q::one()) / d);
    u.shuffle(rng);
    for c in &mut u {
        if rng.gen_bool(0.5) {
            *c = -c.clone();
        }
    }
    u
}

/// `λ(1, û)` for `λ > 0`.
pub fn null_vector(rng: &mut Rng64, n: usize) -> MinkPoint {
    let lambda = positive(rng, 2, 4);
    let mut c = vec![lambda.clone()];
    c.extend(unit_vector(rng, n).into_iter().map(|x| x * &lambda));
    MinkPoint::new(c)
}

/// `(Σ|bᵢ| + δ, b̄)`; strictly timelike since `‖b̄‖ ≤ Σ|bᵢ|`.
pub fn timelike_vector(rng: &mut Rng64, n: usize) -> MinkPoint {
    let b: Vec<Q> = (0..n).map(|_| grid(rng, 1, 4)).collect();
    let t: Q = b.iter().map(Signed::abs).sum::<Q>() + positive(rng, 1, 4);
    let mut c = vec![t];
    c.extend(b);
    MinkPoint::new(c)
}

/// Null or timelike with equal odds.
pub fn causal_vector(rng: &mut Rng64, n: usize) -> MinkPoint {
    if rng.gen_bool(0.5) {
        null_vector(rng, n)
    } else {
        timelike_vector(rng, n)
    }
}

/// `[x, y, y₁, y₂, z]` for the aαf antecedent, or `None` when the draw has
/// comparable `y₁, y₂`.
pub fn aaf_config(rng: &mut Rng64, n: usize) -> Option<[MinkPoint; 5]> {
    let x = random_point(rng, &Space::Minkowski(n));
    let y = x.add(&causal_vector(rng, n));
    let y1 = y.add(&causal_vector(rng, n));
    let y2 = y.add(&causal_vector(rng, n));
    let z = x.add(&causal_vector(rng, n));
    let (a, b) = (
        super::relate_minkowski(&y1, &y2),
        super::relate_minkowski(&y2, &y1),
    );
    (y1 != y2 && !a.after && !b.after).then_some([x, y, y1, y2, z])
}

/// `[x, y₁, y₂, z]` in 2D for the aα2f antecedent.
pub fn aa2f_config_2d(rng: &mut Rng64) -> Option<[MinkPoint; 4]> {
    let x = random_point(rng, &Space::Minkowski(1));
    let y1 = x.add(&causal_vector(rng, 1));
    let y2 = x.add(&causal_vector(rng, 1));
    let z = x.add(&causal_vector(rng, 1));
    let (a, b) = (
        super::relate_minkowski(&y1, &y2),
        super::relate_minkowski(&y2, &y1),
    );
    (y1 != y2 && !a.after && !b.after).then_some([x, y1, y2, z])
}

/// `[x, y₁, y₂, z]` on three null rays from `x`; `None` if two rays
/// coincide.
pub fn three_ray_config(rng: &mut Rng64, n: usize) -> Option<[MinkPoint; 4]> {
    let x = random_point(rng, &Space::Minkowski(n));
    let v: Vec<MinkPoint> = (0..3).map(|_| null_vector(rng, n)).collect();
    let dir = |p: &MinkPoint| p.scale(&(Q::one() / p.time()));
    let distinct = (0..3).all(|i| (0..i).all(|j| dir(&v[i]) != dir(&v[j])));
    distinct.then(|| [x.clone(), x.add(&v[0]), x.add(&v[1]), x.add(&v[2])])
}

/// `[x, y, y₁, y₂]` with `y = x + λ(1,û)` and `yᵢ = y + λᵢ(y − x)`,
/// `λᵢ ≥ 0`.
pub fn horismos_chain_config(rng: &mut Rng64, n: usize) -> [MinkPoint; 4] {
    let x = random_point(rng, &Space::Minkowski(n));
    let y = x.add(&null_vector(rng, n));
    let d = y.sub(&x);
    let mut lam = || q(rng.gen_range(0..=8), 4);
    let y1 = y.add(&d.scale(&lam()));
    let y2 = y.add(&d.scale(&lam()));
    [x, y, y1, y2]
}

/// Random triple `x, y, z`. In Minkowski space the steps are causal vectors
/// (or zero), so both push-up premises occur often; on a cylinder points
/// are drawn independently.
pub fn random_triple(rng: &mut Rng64, space: &Space) -> [MinkPoint; 3] {
    match space {
        Space::Minkowski(n) => {
            let x = random_point(rng, space);
            let step = |rng: &mut Rng64| {
                if rng.gen_bool(0.1) {
                    MinkPoint::origin(*n)
                } else {
                    causal_vector(rng, *n)
                }
            };
            let y = x.add(&step(rng));
            let z = y.add(&step(rng));
            [x, y, z]
        }
        Space::Cylinder(_) => [
            random_point(rng, space),
            random_point(rng, space),
            random_point(rng, space),
        ],
    }
}

/// `count` distinct points of `space`.
pub fn random_points(rng: &mut Rng64, space: &Space, count: usize) -> Vec<MinkPoint> {
    let mut out: Vec<MinkPoint> = Vec::with_capacity(count);
    while out.len() < count {
        let p = random_point(rng, space);
        if !out.iter().any(|o| same_point(space, o, &p)) {
            out.push(p);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minkowski::relate_minkowski;
    use crate::random::stream;

    #[test]
    fn three_point_sample() {
        let pts = [
            MinkPoint::from_ints(&[0, 0]),
            MinkPoint::from_ints(&[1, 1]),
            MinkPoint::from_ints(&[2, 0]),
        ];
        let cf = sample_frame(&Space::Minkowski(1), &pts).unwrap();
        assert_eq!(
            cf.after().named_pairs(),
            [("p0", "p1"), ("p0", "p2"), ("p1", "p2")].map(|(a, b)| (a.to_string(), b.to_string()))
        );
        assert_eq!(cf.chron().pair_count(), 1);
        assert!(sample_frame(&Space::Minkowski(1), &[]).unwrap().is_empty());
    }

    #[test]
    fn duplicates_rejected() {
        let c = Space::Cylinder(Cylinder::unpunctured(q_int(1)));
        let pts = [MinkPoint::from_ints(&[0, 0]), MinkPoint::from_ints(&[1, 1])];
        assert_eq!(
            sample_frame(&c, &pts).unwrap_err(),
            SampleError::Duplicate(0, 1)
        );
    }

    #[test]
    fn vectors_have_their_character() {
        let mut rng = stream(3, 0);
        for n in 1..=3 {
            let o = MinkPoint::origin(n);
            for _ in 0..100 {
                let u = unit_vector(&mut rng, n);
                assert_eq!(u.iter().map(|c| c * c).sum::<Q>(), Q::one());
                let v = relate_minkowski(&o, &null_vector(&mut rng, n));
                assert!(v.horismos && v.after && !v.chron);
                assert!(relate_minkowski(&o, &timelike_vector(&mut rng, n)).chron);
            }
        }
    }

    #[test]
    fn loop_partners_share_circle() {
        let c = Cylinder::unpunctured(q_int(1));
        let pts = vec![
            MinkPoint::from_ints(&[0, 0]),
            MinkPoint::new(vec![q(1, 4), q_int(0)]),
        ];
        let out = with_loop_partners(&c, &pts);
        assert_eq!(out.len(), 4);
        let cf = sample_frame(&Space::Cylinder(c), &out).unwrap();
        assert_eq!(cf.loop_violation(), None);
    }
}
