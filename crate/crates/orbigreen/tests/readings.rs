//! Alternative readings of printed step lists that turn out not to be green.

use orbigreen::label::{f, h, l, r};
use orbigreen::verify::{apply_sequence, Mode, Outcome};
use orbigreen::{build_diagram, delta, delta_amended, FramedSeed, OrbifoldParams, VertexLabel};

fn replay(pr: OrbifoldParams, steps: &[VertexLabel]) -> Outcome {
    let m = build_diagram(pr).unwrap();
    apply_sequence(&FramedSeed::frame(m), steps, Mode::Strict).unwrap().1.outcome
}

/// Replace the labels of the named steps.
fn splice(pr: OrbifoldParams, swaps: &[(&str, Vec<VertexLabel>)]) -> Vec<VertexLabel> {
    let seq = delta(pr).unwrap();
    let mut out = Vec::new();
    for seg in &seq.segments {
        match swaps.iter().find(|(id, _)| *id == seg.step) {
            Some((_, repl)) => out.extend(repl.iter().cloned()),
            None => out.extend_from_slice(&seq.steps[seg.start..seg.end]),
        }
    }
    out
}

#[test]
fn p4_outer_steps_act_on_the_top_ladder_arcs() {
    for q in 1..=4 {
        let pr = OrbifoldParams::new(1, 4, q);
        assert_eq!(replay(pr, &delta(pr).unwrap().steps), Outcome::Valid, "{pr}");
        let printed = splice(
            pr,
            &[("4(c)", vec![l(1), f(1), r(1), f(2), l(1), f(1)]), ("6(a)", vec![f(1), l(1), f(2), r(1), f(1), l(1)])],
        );
        assert!(matches!(replay(pr, &printed), Outcome::NotGreenAt(_)), "{pr}");
    }
}

#[test]
fn sphere_band_literal_fails_and_amended_verifies() {
    let pr = OrbifoldParams::new(0, 2, 3);
    let literal = delta(pr).unwrap();
    assert_eq!(literal.len(), 15);
    assert_eq!(replay(pr, &literal.steps), Outcome::NotGreenAt(11));
    let amended = delta_amended(pr).unwrap();
    assert_eq!(amended.len(), 14);
    assert_eq!(replay(pr, &amended.steps), Outcome::Valid);
}

#[test]
fn sphere_band_ellipsis_readings() {
    let pr = OrbifoldParams::new(0, 2, 3);
    let readings = [
        vec![h(2), h(1), h(3), h(1), h(2)],
        vec![h(2), h(1), h(3), h(2)],
        vec![h(2), h(1), h(3), h(3), h(1), h(2)],
        vec![h(2), h(1), h(3), h(2), h(1)],
    ];
    let mut valid = 0;
    for step3 in &readings {
        if replay(pr, &splice(pr, &[("3", step3.clone())])) == Outcome::Valid {
            valid += 1;
        }
    }
    // only the (h_2,h_1,h_3,h_2) amendment, which drops the h_1 repeat, works
    assert_eq!(valid, 1);
}

#[test]
fn sphere_band_two_points() {
    let pr = OrbifoldParams::new(0, 2, 2);
    let literal = delta(pr).unwrap();
    assert!(!literal.consecutive_repeats().is_empty());
    assert_eq!(replay(pr, &literal.steps), Outcome::NotGreenAt(7));
    assert_eq!(replay(pr, &delta_amended(pr).unwrap().steps), Outcome::Valid);
}

#[test]
fn amendment_only_touches_the_band() {
    for n in 0..=2 {
        for p in 2..=5 {
            for q in 1..=4 {
                let pr = OrbifoldParams::new(n, p, q);
                if n == 0 && p == 2 && q <= 3 {
                    continue;
                }
                assert_eq!(delta(pr).ok(), delta_amended(pr).ok(), "{pr}");
            }
        }
    }
}
