//! Property tests. Structures are built from a proptest-chosen seed with the
//! crate's own generators, so shrinking acts on the seed.

use std::collections::BTreeSet;

use proptest::prelude::*;

use causal_modal::formula::{parse_formula, Formula};
use causal_modal::kripke::{check_property, clusters, Frame, FrameProperty};
use causal_modal::ladder::{classify, CausalFrame, DistinguishOn, LadderPosition, LoopPolicy};
use causal_modal::minkowski::sample::{
    horismos_chain_config, random_points, random_triple, three_ray_config, timelike_vector,
    with_loop_partners,
};
use causal_modal::minkowski::{
    horismos_chain_check, no_witness_certificate, q, relate, relate_minkowski, sample_frame,
    Cylinder, MinkPoint, Space, Q,
};
use causal_modal::random::{
    random_formula, random_frame, random_model, random_transitive_frame, stream,
};
use causal_modal::semantics::{coarsest_bisimulation, satisfies_at, truth_set, Model};

const ATOMS: [&str; 2] = ["p", "q"];

fn holds(f: &Frame, p: FrameProperty) -> bool {
    check_property(f, p).holds()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn print_parse_round_trip(seed: u64) {
        let f = random_formula(&mut stream(seed, 0), 5, &ATOMS);
        prop_assert_eq!(parse_formula(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn diamond_box_duality(seed: u64) {
        let mut rng = stream(seed, 0);
        let fr = random_frame(&mut rng, 5);
        let m = random_model(&mut rng, fr, &ATOMS);
        let f = random_formula(&mut rng, 3, &ATOMS);
        let dia = truth_set(&m, &Formula::diamond(f.clone()));
        let nbn = truth_set(&m, &Formula::not(Formula::boxed(Formula::not(f))));
        prop_assert_eq!(dia, nbn);
    }

    #[test]
    fn diamond_monotone(seed: u64) {
        let mut rng = stream(seed, 0);
        let fr = random_frame(&mut rng, 5);
        let m = random_model(&mut rng, fr, &ATOMS);
        let f = random_formula(&mut rng, 3, &ATOMS);
        let g = Formula::or(f.clone(), random_formula(&mut rng, 3, &ATOMS));
        let (df, dg) = (truth_set(&m, &Formula::diamond(f)), truth_set(&m, &Formula::diamond(g)));
        prop_assert!(df.is_subset(&dg));
    }

    #[test]
    fn property_identities(seed: u64) {
        let f = random_frame(&mut stream(seed, 0), 6);
        use FrameProperty::*;
        prop_assert_eq!(holds(&f, SemiFull), holds(&f, Serial) && holds(&f, TwoDense));
        prop_assert_eq!(
            holds(&f, Distinguishing),
            holds(&f, PastDistinguishing) && holds(&f, FutureDistinguishing)
        );
        if holds(&f, Reflexive) {
            prop_assert!(holds(&f, Dense) && holds(&f, Serial));
        }
    }

    /// Clusters are the strongly connected components, with every
    /// irreflexive world that sits on no cycle as a degenerate singleton.
    #[test]
    fn clusters_are_components(seed: u64) {
        let f = random_transitive_frame(&mut stream(seed, 0), 7);
        let dec = clusters(&f).unwrap();
        let mut seen = BTreeSet::new();
        for (i, c) in dec.clusters.iter().enumerate() {
            for &a in c {
                prop_assert!(seen.insert(a));
                for b in f.worlds() {
                    let same = a == b || (f.related(a, b) && f.related(b, a));
                    prop_assert_eq!(same, c.contains(&b), "world {} vs {}", a, b);
                }
            }
            prop_assert_eq!(dec.degenerate[i], c.len() == 1 && !f.related(c[0], c[0]));
        }
        prop_assert_eq!(seen.len(), f.len());
    }

    /// Bisimilar worlds agree on every formula.
    #[test]
    fn bisimulation_invariance(seed: u64) {
        let mut rng = stream(seed, 0);
        let fr = random_frame(&mut rng, 4);
        let m1 = random_model(&mut rng, fr, &["p"]);
        let fr = random_frame(&mut rng, 4);
        let m2 = random_model(&mut rng, fr, &["p"]);
        if let Some(b) = coarsest_bisimulation(&m1, &m2) {
            for _ in 0..10 {
                let f = random_formula(&mut rng, 4, &["p"]);
                for &(a, c) in &b.pairs {
                    prop_assert_eq!(satisfies_at(&m1, a, &f), satisfies_at(&m2, c, &f));
                }
            }
        }
    }

    #[test]
    fn self_bisimulation_contains_identity(seed: u64) {
        let mut rng = stream(seed, 0);
        let fr = random_frame(&mut rng, 5);
        let m: Model = random_model(&mut rng, fr, &ATOMS);
        let b = coarsest_bisimulation(&m, &m).unwrap();
        prop_assert!(m.frame.worlds().all(|w| b.pairs.contains(&(w, w))));
    }

    #[test]
    fn order_chain_and_push_up(seed: u64, space_ix in 0usize..5) {
        let space = spaces().swap_remove(space_ix);
        let mut rng = stream(seed, 0);
        for _ in 0..50 {
            let [x, y, z] = random_triple(&mut rng, &space);
            let r = |a: &MinkPoint, b: &MinkPoint| relate(&space, a, b).unwrap();
            let (xy, yz, xz) = (r(&x, &y), r(&y, &z), r(&x, &z));
            for v in [&xy, &yz, &xz] {
                prop_assert!(!v.chron || v.after);
                prop_assert!(!v.after || v.caus);
            }
            if (xy.chron && yz.caus) || (xy.caus && yz.chron) {
                prop_assert!(xz.chron, "x={} y={} z={}", x, y, z);
            }
        }
    }

    #[test]
    fn chronological_midpoint(seed: u64, n in 1usize..=3) {
        let mut rng = stream(seed, 0);
        let x = random_points(&mut rng, &Space::Minkowski(n), 1).remove(0);
        let y = x.add(&timelike_vector(&mut rng, n));
        let m = x.lerp(&y, &q(1, 2));
        prop_assert!(relate_minkowski(&x, &m).chron && relate_minkowski(&m, &y).chron);
    }

    #[test]
    fn horismos_chains_collinear(seed: u64, n in 1usize..=3) {
        let [x, y, y1, y2] = horismos_chain_config(&mut stream(seed, 0), n);
        prop_assert!(horismos_chain_check(&x, &y, &y1, &y2).unwrap());
    }

    /// The certified quadratics are negative on their whole interval.
    #[test]
    fn certificate_quadratics_negative(seed: u64, n in 2usize..=3) {
        let mut rng = stream(seed, 0);
        let Some([x, y1, y2, z]) = three_ray_config(&mut rng, n) else { return Ok(()) };
        let cert = no_witness_certificate(&x, &y1, &y2, &z).unwrap();
        for t in &cert.targets {
            for k in 1..=32 {
                let s: Q = &t.s_max * q(k, 32);
                prop_assert!(t.eval(&s) < Q::from_integer(0.into()));
            }
        }
    }

    /// Sampled frames pass every causal-frame invariant, and the loop
    /// property once partners are added.
    #[test]
    fn sampled_frames_valid(seed: u64, space_ix in 0usize..5) {
        let space = spaces().swap_remove(space_ix);
        let mut rng = stream(seed, 0);
        let mut pts = random_points(&mut rng, &space, 8);
        if let Space::Cylinder(c) = &space {
            pts = with_loop_partners(c, &pts);
        }
        let cf = sample_frame(&space, &pts).unwrap();
        prop_assert_eq!(cf.loop_violation(), None);
        CausalFrame::new(cf.chron().clone(), cf.after().clone(), LoopPolicy::Require).unwrap();
    }

    /// Adding pairs only moves flags toward total viciousness.
    #[test]
    fn classifier_monotone(seed: u64, extra in proptest::collection::vec((0usize..6, 0usize..6), 1..4)) {
        let space = Space::Cylinder(Cylinder::new(q(1, 1), vec![MinkPoint::from_ints(&[0, 0])]).unwrap());
        let pts = random_points(&mut stream(seed, 0), &space, 6);
        let cf = sample_frame(&space, &pts).unwrap();
        let names = cf.chron().names().to_vec();
        let chron: Vec<_> = cf.chron().pairs().chain(extra.iter().copied()).collect();
        let after: Vec<_> = cf.after().pairs().collect();
        let (c2, a2) = close(6, chron, after);
        let bigger = CausalFrame::from_indices(names, c2, a2, LoopPolicy::Ignore).unwrap();
        let (p, p2) = (classify(&cf, DistinguishOn::Chron), classify(&bigger, DistinguishOn::Chron));
        let toward = |a: &LadderPosition, b: &LadderPosition| {
            (!a.totally_vicious || b.totally_vicious)
                && (a.ntv || !b.ntv)
                && (a.chronological || !b.chronological)
                && (a.cntv || !b.cntv)
                && (a.causal || !b.causal)
        };
        prop_assert!(toward(&p, &p2), "{:?} -> {:?}", p, p2);
    }

    /// Reflexive `≪` forces `≪ = ⪯`.
    #[test]
    fn totally_vicious_collapse(seed: u64) {
        let f = random_frame(&mut stream(seed, 0), 5);
        let n = f.len();
        let chron: Vec<_> = f.pairs().chain((0..n).map(|w| (w, w))).collect();
        let (c, a) = close(n, chron, Vec::new());
        let cf = CausalFrame::from_indices(f.names().to_vec(), c, a, LoopPolicy::Ignore).unwrap();
        prop_assert_eq!(cf.chron().named_pairs(), cf.caus().named_pairs());
    }
}

fn spaces() -> Vec<Space> {
    vec![
        Space::Minkowski(1),
        Space::Minkowski(2),
        Space::Minkowski(3),
        Space::Cylinder(Cylinder::unpunctured(q(1, 1))),
        Space::Cylinder(Cylinder::new(q(1, 1), vec![MinkPoint::from_ints(&[0, 0])]).unwrap()),
    ]
}

/// Least `(chron, after)` above the inputs with `chron ⊆ after`, both
/// transitive and `chron` closed under push-up.
fn close(
    n: usize,
    chron: Vec<(usize, usize)>,
    after: Vec<(usize, usize)>,
) -> (Vec<(usize, usize)>, Vec<(usize, usize)>) {
    let mut c = vec![vec![false; n]; n];
    let mut a = vec![vec![false; n]; n];
    for (x, y) in chron {
        c[x][y] = true;
    }
    for (x, y) in after {
        a[x][y] = true;
    }
    let mut changed = true;
    while changed {
        changed = false;
        let mut set = |m: &mut Vec<Vec<bool>>, x: usize, y: usize| {
            if !m[x][y] {
                m[x][y] = true;
                changed = true;
            }
        };
        for x in 0..n {
            for y in 0..n {
                if c[x][y] && !a[x][y] {
                    set(&mut a, x, y);
                }
                for z in 0..n {
                    let caus = |m: &Vec<Vec<bool>>, u: usize, v: usize| u == v || m[u][v];
                    if c[x][y] && c[y][z] || c[x][y] && caus(&a, y, z) || caus(&a, x, y) && c[y][z]
                    {
                        set(&mut c, x, z);
                    }
                    if a[x][y] && a[y][z] {
                        set(&mut a, x, z);
                    }
                }
            }
        }
    }
    let pairs = |m: &Vec<Vec<bool>>| {
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .filter(|&(x, y)| m[x][y])
            .collect()
    };
    (pairs(&c), pairs(&a))
}
