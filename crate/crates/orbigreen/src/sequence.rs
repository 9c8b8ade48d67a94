//! The explicit mutation sequences Δ₀, Δ₁, Δₙ and their named pieces.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::label::*;
use crate::orbifold::{build_diagram, validate_params, OrbifoldParams, Rejection};

/// A contiguous block of a sequence attributed to one named step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Segment {
    /// `Δ₀`, `Δ₁` or `Δₙ`.
    pub sequence: String,
    /// Step id such as `2` or `4(a)`.
    pub step: String,
    pub start: usize,
    pub end: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct MutationSequence {
    pub steps: Vec<VertexLabel>,
    pub segments: Vec<Segment>,
}

impl MutationSequence {
    pub fn plain(steps: Vec<VertexLabel>) -> Self {
        let segments = vec![Segment { sequence: String::new(), step: String::new(), start: 0, end: steps.len() }];
        MutationSequence { steps, segments }
    }

    fn from_steps(name: &str, parts: Vec<(&'static str, Vec<VertexLabel>)>) -> Self {
        let mut out = MutationSequence::default();
        for (id, labels) in parts {
            let start = out.steps.len();
            out.steps.extend(labels);
            out.segments.push(Segment {
                sequence: name.to_string(),
                step: id.to_string(),
                start,
                end: out.steps.len(),
            });
        }
        out
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Index one past the last mutation of the named step.
    pub fn end_of(&self, step: &str) -> Option<usize> {
        self.segments.iter().find(|s| s.step == step).map(|s| s.end)
    }

    /// Step id owning position `i`.
    pub fn step_at(&self, i: usize) -> Option<&Segment> {
        self.segments.iter().find(|s| s.start <= i && i < s.end)
    }

    /// Positions i with steps[i] == steps[i-1].
    pub fn consecutive_repeats(&self) -> Vec<usize> {
        (1..self.steps.len()).filter(|&i| self.steps[i] == self.steps[i - 1]).collect()
    }
}

impl fmt::Display for MutationSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.steps.iter().map(|l| l.to_string()).collect();
        write!(f, "({})", names.join(","))
    }
}

/// Named subsequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Kind {
    Alpha,
    Beta,
    Gamma,
    Delta,
    Epsilon,
    Mu,
    Omega,
    Iota,
    Pi,
}

impl Kind {
    fn name(self) -> &'static str {
        match self {
            Kind::Alpha => "alpha",
            Kind::Beta => "beta",
            Kind::Gamma => "gamma",
            Kind::Delta => "delta",
            Kind::Epsilon => "epsilon",
            Kind::Mu => "mu",
            Kind::Omega => "omega",
            Kind::Iota => "iota",
            Kind::Pi => "pi",
        }
    }
}

fn u(i: i64) -> u32 {
    debug_assert!(i > 0, "label index {i}");
    i as u32
}

/// a, a−1, …, b (empty when a < b).
fn down(a: i64, b: i64) -> impl Iterator<Item = i64> {
    (b..=a).rev()
}

/// a, a+1, …, b (empty when a > b).
fn up(a: i64, b: i64) -> impl Iterator<Item = i64> {
    a..=b
}

/// a, a−2, …, down to b (empty when a < b).
fn down2(a: i64, b: i64) -> Vec<i64> {
    let mut out = Vec::new();
    let mut k = a;
    while k >= b {
        out.push(k);
        k -= 2;
    }
    out
}

fn hs(it: impl Iterator<Item = i64>) -> Vec<VertexLabel> {
    it.map(|i| h(u(i))).collect()
}

fn gs(q: i64) -> Vec<VertexLabel> {
    up(1, q).map(|i| g(u(i))).collect()
}

fn fl(x: i64) -> i64 {
    x.div_euclid(2)
}

pub fn alpha(k: i64) -> Vec<VertexLabel> {
    let k32 = u(k);
    vec![r(k32), l(k32), m(k32 + 1), m(k32), l(k32), r(k32)]
}

pub fn beta(k: i64) -> Vec<VertexLabel> {
    let k32 = u(k);
    let last = if k > 1 { m(k32 - 1) } else { h(1) };
    vec![r(k32), l(k32), m(k32 + 2), last]
}

pub fn delta_k(k: i64) -> Vec<VertexLabel> {
    let k32 = u(k);
    vec![r(k32), r(k32 + 1), l(k32), l(k32 + 1)]
}

pub fn iota(k: u32) -> Vec<VertexLabel> {
    vec![a(k), e(k), c(k), b(k), a(k), d(k), e(k), c(k), b(k)]
}

pub fn pi(k: u32) -> Vec<VertexLabel> {
    vec![b(k), c(k), e(k), d(k), b(k), a(k), c(k), e(k), b(k)]
}

/// μ, γ, ε, ω for the one-puncture-tail family with `pp` punctures on
/// the ladder (pp = p for genus ≥ 1).
fn mu1(pp: i64) -> Vec<VertexLabel> {
    if pp > 2 {
        vec![m(u(pp + 1 - 2 * fl(pp)))]
    } else {
        vec![]
    }
}

fn gamma1(pp: i64, q: i64) -> Vec<VertexLabel> {
    if pp > 2 {
        let t = u(pp - 2);
        vec![m(t), l(t), r(t), m(t)]
    } else {
        vec![h(1), m(1), h(u(q + 1)), h(1)]
    }
}

fn epsilon1(pp: i64, q: i64) -> Vec<VertexLabel> {
    if pp > 2 && pp % 2 == 0 {
        hs(up(2, q + 1))
    } else {
        hs(up(2, q))
    }
}

fn omega1(pp: i64, q: i64) -> Vec<VertexLabel> {
    if pp % 2 == 1 {
        vec![h(u(q + 1)), g(u(q))]
    } else {
        vec![]
    }
}

/// Genus-zero variants, written in terms of the actual puncture count p.
fn mu0(p: i64) -> Vec<VertexLabel> {
    if p > 3 {
        vec![m(u(p - 2 * fl(p - 1)))]
    } else {
        vec![]
    }
}

fn gamma0(p: i64, q: i64) -> Vec<VertexLabel> {
    if p > 3 {
        let t = u(p - 3);
        vec![s(), l(t), r(t), m(t)]
    } else {
        vec![s(), m(1), h(u(q + 1)), h(1)]
    }
}

fn epsilon0(p: i64, q: i64) -> Vec<VertexLabel> {
    if p > 3 && p % 2 == 1 {
        hs(up(2, q + 1))
    } else {
        hs(up(2, q))
    }
}

fn omega0(p: i64, q: i64) -> Vec<VertexLabel> {
    if p % 2 == 0 {
        vec![h(u(q + 1)), g(u(q))]
    } else {
        vec![]
    }
}

/// The literal named subsequence for `pr`. Kinds without an index ignore
/// `k`; genus 0 uses its own γ, μ, ε, ω.
pub fn subsequence(kind: Kind, k: Option<i64>, pr: OrbifoldParams) -> Result<Vec<VertexLabel>> {
    validate_params(pr).map_err(|_| Error::OutOfRange { kind: kind.name(), k: k.unwrap_or(0) })?;
    let (n, p, q) = (pr.n as i64, pr.p as i64, pr.q as i64);
    let idx = || k.ok_or(Error::OutOfRange { kind: kind.name(), k: 0 });
    let out = match kind {
        Kind::Alpha | Kind::Beta | Kind::Delta => {
            let kk = idx()?;
            if kk < 1 {
                return Err(Error::OutOfRange { kind: kind.name(), k: kk });
            }
            match kind {
                Kind::Alpha => alpha(kk),
                Kind::Beta => beta(kk),
                _ => delta_k(kk),
            }
        }
        Kind::Iota | Kind::Pi => {
            let kk = idx()?;
            if n < 2 || kk < 1 || kk > n {
                return Err(Error::OutOfRange { kind: kind.name(), k: kk });
            }
            if kind == Kind::Iota {
                iota(kk as u32)
            } else {
                pi(kk as u32)
            }
        }
        Kind::Gamma if n == 0 => gamma0(p, q),
        Kind::Mu if n == 0 => mu0(p),
        Kind::Epsilon if n == 0 => epsilon0(p, q),
        Kind::Omega if n == 0 => omega0(p, q),
        Kind::Gamma => gamma1(p, q),
        Kind::Mu => mu1(p),
        Kind::Epsilon => epsilon1(p, q),
        Kind::Omega => omega1(p, q),
    };
    let m = build_diagram(pr).expect("validated");
    if out.iter().any(|v| m.label_index(v).is_err()) {
        return Err(Error::OutOfRange { kind: kind.name(), k: k.unwrap_or(0) });
    }
    Ok(out)
}

type Steps = Vec<(&'static str, Vec<VertexLabel>)>;

fn cat(parts: impl IntoIterator<Item = Vec<VertexLabel>>) -> Vec<VertexLabel> {
    parts.into_iter().flatten().collect()
}

fn outer_away(top: u32) -> Vec<VertexLabel> {
    vec![l(top), f(1), r(top), f(2), l(top), f(1)]
}

fn outer_back(top: u32) -> Vec<VertexLabel> {
    vec![f(1), l(top), f(2), r(top), f(1), l(top)]
}

/// Δ₁ from the floor-formula step list, for `pp` ≥ 2 ladder punctures.
/// Includes the outer-arc steps 4(c)/6(a); callers for other genera drop them.
pub fn delta1_generic_steps(pp: i64, q: i64) -> Steps {
    let s1 = down2(pp - 2, pp - 2 * fl(pp - 1)).into_iter().flat_map(alpha).collect();
    let s2 = cat([hs(down(q + 1, 1)), vec![m(u(pp + 1 - 2 * fl(pp)))], hs(up(2, q + 1 - pp + 2 * fl(pp)))]);
    let s3 = down2(pp - 3, pp + 1 - 2 * fl(pp)).into_iter().flat_map(beta).collect();
    let sgn = (pp - 2).signum();
    let s4a = cat([gs(q), hs(down(q + sgn, 2)), mu1(pp)]);
    let mut s4b = Vec::new();
    let mut k = pp - 2 * fl(pp - 1);
    while k <= pp - 4 {
        s4b.extend([l(u(k)), r(u(k))]);
        k += 2;
    }
    let top = u(pp - 1);
    let s6b = down2(pp - 4, pp - 2 * fl(pp - 1)).into_iter().flat_map(delta_k).collect();
    let s6c = cat([mu1(pp), epsilon1(pp, q), gs(q), omega1(pp, q)]);
    let s6d = if pp > 2 && pp % 2 == 0 { vec![l(1), r(1)] } else { vec![] };
    vec![
        ("1", s1),
        ("2", s2),
        ("3", s3),
        ("4(a)", s4a),
        ("4(b)", s4b),
        ("4(c)", outer_away(top)),
        ("5", gamma1(pp, q)),
        ("6(a)", outer_back(top)),
        ("6(b)", s6b),
        ("6(c)", s6c),
        ("6(d)", s6d),
    ]
}

/// Δ₁ from the per-case lists (p = 2 with q = 1 or q > 1; p = 3; p = 4;
/// p > 4 even; p > 4 odd). These are the authoritative forms.
pub fn delta1_case_steps(p: i64, q: i64) -> Steps {
    let top = u(p - 1);
    let gq = gs(q);
    match p {
        2 if q == 1 => vec![
            ("1", vec![]),
            ("2", vec![h(2), h(1), m(1), h(2)]),
            ("3", vec![]),
            ("4(a)", vec![g(1)]),
            ("4(b)", vec![]),
            ("4(c)", vec![l(1), f(1), r(1), f(2), l(1), f(1)]),
            ("5", vec![h(1), m(1), h(2), h(1)]),
            ("6(a)", vec![f(1), l(1), f(2), r(1), f(1), l(1)]),
            ("6(b)", vec![]),
            ("6(c)", vec![g(1)]),
            ("6(d)", vec![]),
        ],
        2 => vec![
            ("1", vec![]),
            ("2", cat([hs(down(q + 1, 1)), vec![m(1)], hs(up(2, q + 1))])),
            ("3", vec![]),
            ("4(a)", cat([gq.clone(), hs(down(q, 2))])),
            ("4(b)", vec![]),
            ("4(c)", outer_away(top)),
            ("5", vec![h(1), m(1), h(u(q + 1)), h(1)]),
            ("6(a)", outer_back(top)),
            ("6(b)", vec![]),
            ("6(c)", cat([hs(up(2, q)), gq])),
            ("6(d)", vec![]),
        ],
        3 => vec![
            ("1", vec![r(1), l(1), m(2), m(1), l(1), r(1)]),
            ("2", cat([hs(down(q + 1, 1)), vec![m(2)], hs(up(2, q))])),
            ("3", vec![]),
            ("4(a)", cat([gq.clone(), hs(down(q + 1, 2)), vec![m(2)]])),
            ("4(b)", vec![]),
            ("4(c)", outer_away(top)),
            ("5", vec![m(1), l(1), r(1), m(1)]),
            ("6(a)", outer_back(top)),
            ("6(b)", vec![]),
            ("6(c)", cat([vec![m(2)], hs(up(2, q)), gq, vec![h(u(q + 1)), g(u(q))]])),
            ("6(d)", vec![]),
        ],
        4 => vec![
            ("1", alpha(2)),
            ("2", cat([hs(down(q + 1, 1)), vec![m(1)], hs(up(2, q + 1))])),
            ("3", beta(1)),
            ("4(a)", cat([gq.clone(), hs(down(q + 1, 2)), vec![m(1)]])),
            ("4(b)", vec![]),
            // the printed list names l_1/r_1 here; the corner argument acts on l_3/r_3
            ("4(c)", outer_away(top)),
            ("5", vec![m(2), l(2), r(2), m(2)]),
            ("6(a)", outer_back(top)),
            ("6(b)", vec![]),
            ("6(c)", cat([vec![m(1)], hs(up(2, q + 1)), gq])),
            ("6(d)", vec![l(1), r(1)]),
        ],
        _ if p % 2 == 0 => {
            let t = u(p - 2);
            vec![
                ("1", down2(p - 2, 2).into_iter().flat_map(alpha).collect()),
                ("2", cat([hs(down(q + 1, 1)), vec![m(1)], hs(up(2, q + 1))])),
                ("3", down2(p - 3, 1).into_iter().flat_map(beta).collect()),
                ("4(a)", cat([gq.clone(), hs(down(q + 1, 2)), vec![m(1)]])),
                ("4(b)", (2..=p - 4).step_by(2).flat_map(|k| [l(u(k)), r(u(k))]).collect()),
                ("4(c)", outer_away(top)),
                ("5", vec![m(t), l(t), r(t), m(t)]),
                ("6(a)", outer_back(top)),
                ("6(b)", down2(p - 4, 2).into_iter().flat_map(delta_k).collect()),
                ("6(c)", cat([vec![m(1)], hs(up(2, q + 1)), gq])),
                ("6(d)", vec![l(1), r(1)]),
            ]
        }
        _ => {
            let t = u(p - 2);
            vec![
                ("1", down2(p - 2, 1).into_iter().flat_map(alpha).collect()),
                ("2", cat([hs(down(q + 1, 1)), vec![m(2)], hs(up(2, q))])),
                ("3", down2(p - 3, 2).into_iter().flat_map(beta).collect()),
                ("4(a)", cat([gq.clone(), hs(down(q + 1, 2)), vec![m(2)]])),
                ("4(b)", (1..=p - 4).step_by(2).flat_map(|k| [l(u(k)), r(u(k))]).collect()),
                ("4(c)", outer_away(top)),
                ("5", vec![m(t), l(t), r(t), m(t)]),
                ("6(a)", outer_back(top)),
                ("6(b)", down2(p - 4, 1).into_iter().flat_map(delta_k).collect()),
                ("6(c)", cat([vec![m(2)], hs(up(2, q)), gq, vec![h(u(q + 1)), g(u(q))]])),
                ("6(d)", vec![]),
            ]
        }
    }
}

fn take(steps: &Steps, id: &str) -> Vec<VertexLabel> {
    steps.iter().find(|(s, _)| *s == id).map(|(_, v)| v.clone()).unwrap_or_default()
}

/// Δ₀ for p = 2.
fn delta0_band_steps(q: i64) -> Steps {
    vec![
        ("1", cat([hs(down(q, 1)), hs(up(3, q))])),
        ("2", gs(q)),
        ("3", cat([vec![h(2), h(1)], hs(up(3, q)), hs(down(q - 2, 3)), vec![h(1), h(2)]])),
        ("4", gs(q)),
    ]
}

/// Δ₀ for p > 2, from its own floor-formula step list.
fn delta0_steps(p: i64, q: i64) -> Steps {
    let s1 = down2(p - 3, p - 1 - 2 * fl(p - 2)).into_iter().flat_map(alpha).collect();
    let s2 = cat([hs(down(q + 1, 1)), vec![m(u(p - 2 * fl(p - 1)))], hs(up(2, q + 2 - p + 2 * fl(p - 1)))]);
    let s3 = down2(p - 4, p - 2 * fl(p - 1)).into_iter().flat_map(beta).collect();
    let sgn = (p - 3).signum();
    let s4a = cat([gs(q), hs(down(q + sgn, 2)), mu0(p)]);
    let mut s4b = Vec::new();
    let mut k = p - 1 - 2 * fl(p - 2);
    while k <= p - 5 {
        s4b.extend([l(u(k)), r(u(k))]);
        k += 2;
    }
    let s6a = down2(p - 5, p - 1 - 2 * fl(p - 2)).into_iter().flat_map(delta_k).collect();
    let s6b = cat([mu0(p), epsilon0(p, q), gs(q), omega0(p, q)]);
    let s6c = if p > 3 && p % 2 == 1 { vec![l(1), r(1)] } else { vec![] };
    vec![
        ("1", s1),
        ("2", s2),
        ("3", s3),
        ("4(a)", s4a),
        ("4(b)", s4b),
        ("5", gamma0(p, q)),
        ("6(a)", s6a),
        ("6(b)", s6b),
        ("6(c)", s6c),
    ]
}

/// Δₙ for n ≥ 2 built on a Δ₁ step list.
fn deltan_steps(n: u32, p: i64, q: i64, base: &Steps) -> Steps {
    let spine: Vec<VertexLabel> = (1..n.saturating_sub(1)).map(f).collect();
    let spine_rev: Vec<VertexLabel> = spine.iter().rev().cloned().collect();
    vec![
        ("1", take(base, "1")),
        ("2", take(base, "2")),
        ("3", take(base, "3")),
        ("4(a)", take(base, "4(a)")),
        ("4(b)", take(base, "4(b)")),
        ("4(c)", spine.clone()),
        ("4(d)", (1..=n).flat_map(iota).collect()),
        ("4(e)", spine_rev.clone()),
        ("5", gamma1(p, q)),
        ("6(a)", spine),
        ("6(b)", (1..=n).flat_map(pi).collect()),
        ("6(c)", spine_rev),
        ("6(d)", take(base, "6(b)")),
        ("6(e)", take(base, "6(c)")),
        ("6(f)", take(base, "6(d)")),
    ]
}

fn name_for(n: u32) -> &'static str {
    match n {
        0 => "Δ₀",
        1 => "Δ₁",
        _ => "Δₙ",
    }
}

/// The explicit maximal green sequence for (n,p,q).
pub fn delta(pr: OrbifoldParams) -> std::result::Result<MutationSequence, Rejection> {
    validate_params(pr)?;
    let (p, q) = (pr.p as i64, pr.q as i64);
    let steps = match pr.n {
        0 if p == 2 => delta0_band_steps(q),
        0 => delta0_steps(p, q),
        1 => delta1_case_steps(p, q),
        n => deltan_steps(n, p, q, &delta1_case_steps(p, q)),
    };
    Ok(MutationSequence::from_steps(name_for(pr.n), steps))
}

/// Δ with the genus-0, two-puncture band amended for q ∈ {2, 3}, where the
/// printed step 3 is not a green sequence. Identical to [`delta`] elsewhere.
pub fn delta_amended(pr: OrbifoldParams) -> std::result::Result<MutationSequence, Rejection> {
    validate_params(pr)?;
    if pr.n != 0 || pr.p != 2 || pr.q > 3 {
        return delta(pr);
    }
    let q = pr.q as i64;
    let step3 = if q == 2 { vec![h(2), h(1)] } else { vec![h(2), h(1), h(3), h(2)] };
    let steps = vec![("1", cat([hs(down(q, 1)), hs(up(3, q))])), ("2", gs(q)), ("3", step3), ("4", gs(q))];
    Ok(MutationSequence::from_steps("Δ₀", steps))
}

/// The same sequence assembled from the floor-formula step lists only;
/// used as a cross-check against [`delta`].
pub fn delta_generic(pr: OrbifoldParams) -> std::result::Result<MutationSequence, Rejection> {
    validate_params(pr)?;
    let (p, q) = (pr.p as i64, pr.q as i64);
    let steps = match pr.n {
        0 if p == 2 => delta0_band_steps(q),
        0 => {
            // genus 0 is Δ₁ on p−1 ladder punctures with a new corner step
            let base = delta1_generic_steps(p - 1, q);
            vec![
                ("1", take(&base, "1")),
                ("2", take(&base, "2")),
                ("3", take(&base, "3")),
                ("4(a)", take(&base, "4(a)")),
                ("4(b)", take(&base, "4(b)")),
                ("5", gamma0(p, q)),
                ("6(a)", take(&base, "6(b)")),
                ("6(b)", take(&base, "6(c)")),
                ("6(c)", take(&base, "6(d)")),
            ]
        }
        1 => delta1_generic_steps(p, q),
        n => deltan_steps(n, p, q, &delta1_generic_steps(p, q)),
    };
    Ok(MutationSequence::from_steps(name_for(pr.n), steps))
}
