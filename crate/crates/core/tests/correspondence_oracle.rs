//! First-order correspondents against valuation enumeration.

use causal_modal::correspondence::{crosscheck, fo_check, SUPPORTED};
use causal_modal::formula::AxiomName;
use causal_modal::kripke::{check_property, FrameProperty};
use causal_modal::random::{random_frame, stream};
use causal_modal::semantics::DEFAULT_BUDGET;

#[test]
fn fo_agrees_with_enumeration_on_random_frames() {
    let mut rng = stream(11, 0);
    let mut falsified = [0usize; 9];
    for i in 0..400 {
        let f = random_frame(&mut rng, 5);
        for (k, a) in SUPPORTED.into_iter().enumerate() {
            let c = crosscheck(&f, a, DEFAULT_BUDGET).unwrap();
            assert!(
                c.agree(),
                "frame {i} axiom {a}: {:?} vs {:?} on {f:?}",
                c.fo,
                c.modal
            );
            falsified[k] += usize::from(!c.fo.holds());
        }
    }
    // Both verdicts must actually occur for every axiom.
    for (k, a) in SUPPORTED.into_iter().enumerate() {
        assert!(
            falsified[k] > 0 && falsified[k] < 400,
            "{a}: {} falsified",
            falsified[k]
        );
    }
}

#[test]
fn ad32_implies_density_on_serial_frames() {
    let mut rng = stream(12, 0);
    let mut premise = 0;
    while premise < 300 {
        let f = random_frame(&mut rng, 5);
        if !check_property(&f, FrameProperty::Serial).holds()
            || !fo_check(&f, AxiomName::Ad32).unwrap().holds()
        {
            continue;
        }
        premise += 1;
        assert!(fo_check(&f, AxiomName::Ad).unwrap().holds(), "{f:?}");
    }
}
