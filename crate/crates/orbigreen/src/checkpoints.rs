//! Intermediate-state checkpoints: the framed state a Δ replay must reach at
//! given step boundaries, instantiated on concrete runs.

use crate::label::*;
use crate::orbifold::{build_diagram, OrbifoldParams};
use crate::seed::{FramedSeed, VertexColor};
use crate::sequence::delta;
use crate::verify::{apply_sequence, assert_state, Mode, StateAssertion};

use VertexColor::{Green, Red};

#[derive(Debug, Clone)]
pub struct Checkpoint {
    pub name: &'static str,
    pub params: OrbifoldParams,
    /// Pause after this step id (or after `after_steps` mutations if set).
    pub after_step: &'static str,
    pub after_steps: Option<usize>,
    pub expect: StateAssertion,
}

fn one(v: VertexLabel) -> (VertexLabel, i64) {
    (v, 1)
}

fn two(v: VertexLabel) -> (VertexLabel, i64) {
    (v, 2)
}

fn four(v: VertexLabel) -> (VertexLabel, i64) {
    (v, 4)
}

/// Two-puncture torus with q points after step 2: the first interior
/// puncture is tagged notched.
fn first_puncture(q: u32) -> StateAssertion {
    let mut a = StateAssertion::new();
    for i in 1..=q {
        a = a.expect(g(i), Green, &[one(g(i)), two(h(i + 1))]);
    }
    a = a.expect(m(1), Red, &[one(h(2))]);
    for i in 2..=q {
        a = a.expect(h(i), Red, &[one(h(i + 1))]);
    }
    a.expect(h(q + 1), Red, &[one(m(1))])
        .expect(h(1), Red, &[one(h(1))])
        .expect(l(1), Green, &[one(l(1)), one(h(1))])
        .expect(r(1), Green, &[one(r(1)), one(m(1))])
}

fn core_set(q: u32) -> Vec<(VertexLabel, i64)> {
    let mut out: Vec<_> = (2..=q + 1).map(|i| one(h(i))).collect();
    out.extend((1..=q).map(|i| two(g(i))));
    out
}

/// Even p ≥ 4 after step 4(a): core arcs moved away from the corner. The
/// r_2 entry is specific to p = 4, where m_3 is the top rung.
fn core_away_even(p: u32, q: u32) -> StateAssertion {
    let mut a = StateAssertion::new();
    for i in 1..=q {
        a = a.expect(g(i), Red, &[one(g(i)), two(h(i + 1))]);
    }
    let mut m1 = core_set(q);
    m1.extend([one(r(1)), one(r(2))]);
    a = a.expect(m(1), Red, &m1);
    for k in 2..=q + 1 {
        a = a.expect(h(k), Green, &[one(h(k)), two(g(k - 1))]);
    }
    let mut l2 = m1.clone();
    l2.extend([one(l(1)), one(h(1))]);
    a = a.expect(r(1), Green, &[one(r(1))]).expect(l(1), Red, &[one(h(1))]).expect(l(2), Green, &l2);
    if p == 4 {
        a = a.expect(r(2), Red, &[one(m(3))]);
    }
    a
}

/// p = 4 after the outer-arc steps around the corner.
fn corner(q: u32) -> StateAssertion {
    let mut l2 = core_set(q);
    l2.extend([one(l(1)), one(r(1)), one(r(2)), one(h(1))]);
    StateAssertion::new()
        .expect(m(1), Green, &[one(l(1)), one(h(1))])
        .expect(r(2), Red, &[one(l(2))])
        .expect(l(2), Red, &l2)
        .expect(l(3), Red, &[one(l(3))])
        .expect(m(2), Red, &[one(m(3))])
        .expect(r(3), Red, &[one(r(3))])
        .expect(f(1), Red, &[one(f(1))])
        .expect(f(2), Red, &[one(f(2))])
}

/// Odd p ≥ 3 after step 4(a).
fn core_away_odd(q: u32) -> StateAssertion {
    let mut m2 = core_set(q);
    m2.push(one(r(1)));
    let mut l1 = core_set(q);
    l1.extend([one(r(1)), one(h(1))]);
    StateAssertion::new()
        .expect(g(1), Red, &[one(g(1)), two(h(2))])
        .expect(g(q), Green, &[one(g(q)), two(h(q + 1))])
        .expect(m(2), Red, &m2)
        .expect(h(2), Green, &[one(h(2)), two(g(1))])
        .expect(h(q), Green, &[one(h(q)), two(g(q - 1))])
        .expect(h(q + 1), Red, &[one(h(q + 1))])
        .expect(h(1), Red, &[one(h(1)), one(m(1))])
        .expect(l(1), Green, &l1)
}

fn pentagon_set(k: u32) -> Vec<(VertexLabel, i64)> {
    vec![four(e(k)), four(a(k)), four(c(k)), four(b(k)), four(d(k))]
}

/// Genus 2, p = 3 after every pentagon is moved away (step 4(d)). The ends
/// of the ladder are x = m_1, z = r_1 with X = l_1 and m_{p−1} = m_2.
fn pentagons_away() -> StateAssertion {
    let mut x = pentagon_set(1);
    x.push(one(l(1)));
    let mut z = pentagon_set(2);
    z.push(one(m(2)));
    let mut a =
        StateAssertion::new().expect(b(1), Red, &[one(e(1)), one(l(1))]).expect(b(2), Red, &[one(e(2)), one(m(2))]);
    for k in 1..=2 {
        a = a.expect(c(k), Red, &[one(d(k))]).expect(a_(k), Red, &[one(a_(k))]).expect(d(k), Red, &[one(c(k))]).expect(
            e(k),
            Red,
            &[one(b(k))],
        );
    }
    a.expect(m(1), Green, &x).expect(r(1), Green, &z)
}

/// The same run after every pentagon is moved back (step 6(b)).
fn pentagons_back() -> StateAssertion {
    let mut a = StateAssertion::new();
    for k in 1..=2 {
        a = a
            .expect(b(k), Red, &[one(e(k))])
            .expect(d(k), Red, &[one(d(k))])
            .expect(e(k), Red, &[one(a_(k))])
            .expect(c(k), Red, &[one(c(k))])
            .expect(a_(k), Red, &[one(b(k))]);
    }
    a.expect(m(1), Red, &[one(m(2))]).expect(r(1), Red, &[one(l(1))])
}

fn a_(k: u32) -> VertexLabel {
    crate::label::a(k)
}

/// Genus 0, p = 4 after step 4(b): the shape every later genus-0 step
/// starts from (w = m_2, x = m_1, y = l_1, z = r_1, X = l_1).
fn genus0_summary() -> StateAssertion {
    StateAssertion::new()
        .expect_color(m(2), Red)
        .expect_color(l(1), Green)
        .expect(r(1), Red, &[one(m(2))])
        .expect(m(1), Red, &[one(l(1))])
        .expect(s(), Green, &[one(s()), one(l(1)), one(m(2))])
}

/// (1,2,1) after the corner is tagged notched.
fn torus_corner_notched() -> StateAssertion {
    StateAssertion::new().expect(h(1), Red, &[four(r(1)), one(m(1)), one(f(1)), one(f(2))])
}

/// (1,2,1) after its first mutation at h_2.
fn torus_first_flip() -> StateAssertion {
    StateAssertion::new().expect(g(1), Green, &[one(g(1)), two(h(2))]).expect(m(1), Green, &[one(m(1)), one(h(2))])
}

fn ck(name: &'static str, p: (u32, u32, u32), after_step: &'static str, expect: StateAssertion) -> Checkpoint {
    Checkpoint { name, params: OrbifoldParams::new(p.0, p.1, p.2), after_step, after_steps: None, expect }
}

/// Every checkpoint suite.
pub fn all_checkpoints() -> Vec<Checkpoint> {
    vec![
        ck("first-puncture", (1, 2, 3), "2", first_puncture(3)),
        ck("first-puncture", (1, 2, 1), "2", first_puncture(1)),
        ck("core-away-even", (1, 4, 2), "4(a)", core_away_even(4, 2)),
        ck("core-away-even", (1, 6, 3), "4(a)", core_away_even(6, 3)),
        ck("corner", (1, 4, 2), "6(a)", corner(2)),
        ck("core-away-odd", (1, 3, 2), "4(a)", core_away_odd(2)),
        ck("core-away-odd", (1, 3, 4), "4(a)", core_away_odd(4)),
        ck("pentagons-away", (2, 3, 1), "4(d)", pentagons_away()),
        ck("pentagons-back", (2, 3, 1), "6(b)", pentagons_back()),
        ck("genus0-ladder", (0, 4, 2), "4(b)", genus0_summary()),
        ck("corner-notched", (1, 2, 1), "5", torus_corner_notched()),
        Checkpoint {
            name: "first-flip",
            params: OrbifoldParams::new(1, 2, 1),
            after_step: "",
            after_steps: Some(1),
            expect: torus_first_flip(),
        },
    ]
}

/// Replay Δ up to the checkpoint and compare.
pub fn run_checkpoint(c: &Checkpoint) -> Result<(), Vec<String>> {
    let m = build_diagram(c.params).map_err(|e| vec![e.to_string()])?;
    let seq = delta(c.params).map_err(|e| vec![e.to_string()])?;
    let end = match c.after_steps {
        Some(k) => k,
        None => seq.end_of(c.after_step).ok_or_else(|| vec![format!("no step {}", c.after_step)])?,
    };
    let (state, rep) =
        apply_sequence(&FramedSeed::frame(m), &seq.steps[..end], Mode::Strict).map_err(|e| vec![e.to_string()])?;
    if rep.steps.len() != end || !rep.violations.is_empty() {
        return Err(vec![format!("prefix not green: {}", rep.summary())]);
    }
    assert_state(&state, &c.expect).map_err(|e| vec![e.to_string()])?
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_checkpoints_hold() {
        for c in all_checkpoints() {
            if let Err(why) = run_checkpoint(&c) {
                panic!("{} {} after {}: {:#?}", c.name, c.params, c.after_step, why);
            }
        }
    }

    #[test]
    fn a_wrong_expectation_is_reported() {
        let mut c = all_checkpoints().remove(0);
        c.expect = StateAssertion::new().expect(m(1), Green, &[one(h(2))]);
        assert_eq!(run_checkpoint(&c).unwrap_err().len(), 1);
    }
}
