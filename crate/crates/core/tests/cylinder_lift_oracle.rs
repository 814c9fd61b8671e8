//! Cylinder closed forms against lifts to the Minkowski plane.
//!
//! The oracle never looks at `u`: it lifts `y` by `k` windings for
//! `|k| ≤ B`, `B = ⌈|v|/2L⌉ + 1` with `v = Δt + Δθ`, asks 2D Minkowski space
//! about each lift, and for punctured cylinders rejects any null segment
//! whose interior passes through a lift of a puncture.

use causal_modal::minkowski::sample::random_point;
use causal_modal::minkowski::{q, q_int, relate, relate_minkowski, Cylinder, MinkPoint, Space, Q};
use causal_modal::random::stream;
use num::{Signed, Zero};

fn winding(l: &Q, k: i64) -> MinkPoint {
    let s = l * q_int(k);
    MinkPoint::new(vec![s.clone(), s])
}

fn bound(l: &Q, x: &MinkPoint, y: &MinkPoint) -> i64 {
    let v = (&y.coords[0] - &x.coords[0]) + (&y.coords[1] - &x.coords[1]);
    let b = (v.abs() / (q_int(2) * l)).ceil();
    i64::try_from(b.to_integer()).unwrap() + 1
}

/// Whether `p` lies strictly inside the segment from `a` to `b`.
fn strictly_inside(a: &MinkPoint, b: &MinkPoint, p: &MinkPoint) -> bool {
    let d = b.sub(a);
    let w = p.sub(a);
    // Collinear: w = s·d for one s.
    if &d.coords[0] * &w.coords[1] != &d.coords[1] * &w.coords[0] {
        return false;
    }
    let s = if d.coords[0].is_zero() {
        &w.coords[1] / &d.coords[1]
    } else {
        &w.coords[0] / &d.coords[0]
    };
    s.is_positive() && s < Q::from_integer(1.into())
}

fn blocked(cyl: &Cylinder, x: &MinkPoint, lift: &MinkPoint, b: i64) -> bool {
    cyl.punctures().iter().any(|p| {
        (-b - 2..=b + 2).any(|j| strictly_inside(x, lift, &p.add(&winding(cyl.circumference(), j))))
    })
}

/// `(chron, after)` from lifts.
fn oracle(cyl: &Cylinder, x: &MinkPoint, y: &MinkPoint) -> (bool, bool) {
    let l = cyl.circumference();
    let b = bound(l, x, y);
    let mut chron = false;
    let mut after = false;
    for k in -b..=b {
        let lift = y.add(&winding(l, k));
        let v = relate_minkowski(x, &lift);
        chron |= v.chron;
        after |= v.chron || (v.after && !blocked(cyl, x, &lift, b));
    }
    (chron, after)
}

fn cylinders() -> Vec<Cylinder> {
    vec![
        Cylinder::unpunctured(q_int(1)),
        Cylinder::unpunctured(q(3, 2)),
        Cylinder::new(q_int(1), vec![MinkPoint::from_ints(&[0, 0])]).unwrap(),
        Cylinder::new(
            q_int(1),
            vec![
                MinkPoint::from_ints(&[0, 0]),
                MinkPoint::new(vec![q(1, 2), q(1, 4)]),
            ],
        )
        .unwrap(),
    ]
}

#[test]
fn closed_forms_match_lifts() {
    for (i, cyl) in cylinders().into_iter().enumerate() {
        let space = Space::Cylinder(cyl.clone());
        let mut rng = stream(21, i as u64);
        let mut kinds = [0usize; 3];
        for _ in 0..1000 {
            let x = random_point(&mut rng, &space);
            // Half of the pairs on the null circle of x, where punctures matter.
            let y = if kinds.iter().sum::<usize>() % 2 == 0 {
                loop {
                    let s = q(rand::Rng::gen_range(&mut rng, -8..=8), 8) * cyl.circumference();
                    let y = x.add(&MinkPoint::new(vec![s.clone(), s]));
                    if !cyl.is_puncture(&y) {
                        break y;
                    }
                }
            } else {
                random_point(&mut rng, &space)
            };
            let v = relate(&space, &x, &y).unwrap();
            let (chron, after) = oracle(&cyl, &x, &y);
            assert_eq!(
                (v.chron, v.after),
                (chron, after),
                "cylinder {i} x={x} y={y}"
            );
            assert_eq!(v.caus, v.after || cyl.same(&x, &y));
            kinds[usize::from(v.chron) + usize::from(v.after)] += 1;
        }
        assert!(
            kinds.iter().all(|&k| k > 0),
            "cylinder {i}: one-sided sample {kinds:?}"
        );
    }
}
