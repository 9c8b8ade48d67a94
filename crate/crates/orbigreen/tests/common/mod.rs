//! Shared helpers for integration tests.
#![allow(dead_code)]

use orbigreen::diagram::{diagram_mutate, framed_view, strip_frozen_pairs};
use orbigreen::{build_diagram, FramedSeed, OrbifoldParams};
use proptest::prelude::*;

/// Every supported point with n ≤ 4, 2 ≤ p ≤ 7, q ≤ 4.
pub fn grid() -> Vec<OrbifoldParams> {
    let mut out = Vec::new();
    for n in 0..=4 {
        for p in 2..=7 {
            for q in 1..=4 {
                let pr = OrbifoldParams::new(n, p, q);
                if orbigreen::validate_params(pr).is_ok() {
                    out.push(pr);
                }
            }
        }
    }
    out
}

/// Walk a random green-respecting prefix, checking every invariant before
/// each mutation and at the end.
pub fn walk(pr: OrbifoldParams, picks: &[usize]) -> Result<(), TestCaseError> {
    let m = build_diagram(pr).unwrap();
    let d = m.symmetrizer().to_vec();
    let mut s = FramedSeed::frame(m);
    for &pick in picks {
        for i in 0..s.rank() {
            prop_assert!(s.color_index(i).is_ok(), "{pr}: row {i} not sign-coherent");
        }
        prop_assert!(s.base().is_skew_symmetrized());
        prop_assert_eq!(s.base().symmetrizer(), &d[..]);
        let greens = s.green_vertices().unwrap();
        if greens.is_empty() {
            break;
        }
        let k = greens[pick % greens.len()];

        let mut twice = s.clone();
        twice.mutate_index(k).unwrap();
        twice.mutate_index(k).unwrap();
        prop_assert_eq!(&twice, &s, "{}: μ_k μ_k is not the identity at {}", pr, k);

        let expected = diagram_mutate(&framed_view(&s).unwrap(), k).unwrap();
        s.mutate_index(k).unwrap();
        prop_assert_eq!(strip_frozen_pairs(framed_view(&s).unwrap()), expected, "{}: commutation at {}", pr, k);
    }
    for i in 0..s.rank() {
        prop_assert!(s.color_index(i).is_ok());
    }
    Ok(())
}
