//! Exchange matrices of the fixed triangulations of orientable orbifolds
//! with genus n, p punctures and q orbifold points.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::label::*;
use crate::matrix::{ArrowPair, ExchangeMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrbifoldParams {
    pub n: u32,
    pub p: u32,
    pub q: u32,
}

impl OrbifoldParams {
    pub fn new(n: u32, p: u32, q: u32) -> Self {
        OrbifoldParams { n, p, q }
    }
}

impl fmt::Display for OrbifoldParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.n, self.p, self.q)
    }
}

/// Why a parameter triple has no construction here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, thiserror::Error)]
pub enum Rejection {
    /// Once-punctured closed orbifolds: no triangulation admits a maximal
    /// green sequence. This is a geometric argument, not computed here.
    #[error("PunctureOne: no triangulation of a once-punctured closed orbifold admits a maximal green sequence")]
    PunctureOne,
    #[error("TooSmall: genus 0 needs p + q >= 4")]
    TooSmall,
    #[error("NoOrbifoldPoints: the construction needs q >= 1")]
    NoOrbifoldPoints,
    #[error("NoPunctures: the construction needs p >= 2")]
    NoPunctures,
}

impl Rejection {
    pub fn code(self) -> &'static str {
        match self {
            Rejection::PunctureOne => "PunctureOne",
            Rejection::TooSmall => "TooSmall",
            Rejection::NoOrbifoldPoints => "NoOrbifoldPoints",
            Rejection::NoPunctures => "NoPunctures",
        }
    }
}

pub fn validate_params(pr: OrbifoldParams) -> Result<(), Rejection> {
    if pr.p == 1 {
        return Err(Rejection::PunctureOne);
    }
    if pr.p == 0 {
        return Err(Rejection::NoPunctures);
    }
    if pr.q == 0 {
        return Err(Rejection::NoOrbifoldPoints);
    }
    if pr.n == 0 && pr.p + pr.q < 4 {
        return Err(Rejection::TooSmall);
    }
    Ok(())
}

/// Number of mutable vertices of the built diagram.
pub fn expected_rank(pr: OrbifoldParams) -> usize {
    let (n, p, q) = (pr.n as usize, pr.p as usize, pr.q as usize);
    match n {
        0 if p == 2 => 2 * q,
        0 => 2 * q + 3 * p - 6,
        1 => 2 * q + 3 * p,
        _ => 6 * n - 6 + 3 * p + 2 * q,
    }
}

/// Accumulates arrows with net multiplicities: parallel arrows add up and
/// opposite arrows cancel, as when gluing triangles.
struct Builder {
    net: BTreeMap<(VertexLabel, VertexLabel), i64>,
    labels: Vec<VertexLabel>,
}

impl Builder {
    fn new() -> Self {
        Builder { net: BTreeMap::new(), labels: Vec::new() }
    }

    fn note(&mut self, v: &VertexLabel) {
        if !self.labels.contains(v) {
            self.labels.push(v.clone());
        }
    }

    fn arrow_mult(&mut self, from: VertexLabel, to: VertexLabel, mult: i64) {
        self.note(&from);
        self.note(&to);
        if from < to {
            *self.net.entry((from, to)).or_default() += mult;
        } else {
            *self.net.entry((to, from)).or_default() -= mult;
        }
    }

    fn arrow(&mut self, from: VertexLabel, to: VertexLabel) {
        self.arrow_mult(from, to, 1);
    }

    /// Entries scale by the target's symmetrizer (2 on pending arcs).
    fn finish(mut self) -> ExchangeMatrix {
        let d = |v: &VertexLabel| if v.family() == Some(Family::G) { 2 } else { 1 };
        let pairs: Vec<ArrowPair> = self
            .net
            .into_iter()
            .filter(|(_, k)| *k != 0)
            .map(|((x, y), k)| {
                let (from, to, k) = if k > 0 { (x, y, k) } else { (y, x, -k) };
                let (fw, bw) = (k * d(&to), -k * d(&from));
                ArrowPair::new(from, to, fw, bw)
            })
            .collect();
        self.labels.sort();
        ExchangeMatrix::from_arrows(self.labels, &pairs).expect("built diagrams are skew-symmetrizable")
    }

    /// h_i→g_i, g_i→h_{i+1}, h_{i+1}→h_i for i = 1..q.
    fn core(&mut self, q: u32) {
        for i in 1..=q {
            self.arrow(h(i), g(i));
            self.arrow(g(i), h(i + 1));
            self.arrow(h(i + 1), h(i));
        }
    }

    /// Ladder between the left side L(0)=h_1, L(k)=l_k and the right side
    /// R(0)=h_{q+1}, R(k)=r_k, one level per m_{k+1}. The last level closes
    /// onto `last = (L, R)`; when L == R the two arrows at m cancel.
    fn ladder(&mut self, q: u32, levels: u32, last: (VertexLabel, VertexLabel)) {
        let side_l = |k: u32| if k == 0 { h(1) } else { l(k) };
        let side_r = |k: u32| if k == 0 { h(q + 1) } else { r(k) };
        for k in 0..levels {
            let mk = m(k + 1);
            let (nl, nr) = if k + 1 == levels { last.clone() } else { (side_l(k + 1), side_r(k + 1)) };
            self.arrow(side_l(k), mk.clone());
            self.arrow(mk.clone(), side_r(k));
            self.arrow(mk.clone(), nl.clone());
            self.arrow(nr.clone(), mk.clone());
            self.arrow(nl, side_l(k));
            self.arrow(side_r(k), nr);
        }
    }

    fn pentagon(&mut self, k: u32) {
        self.arrow(e(k), a(k));
        self.arrow(a(k), d(k));
        self.arrow(d(k), e(k));
        self.arrow(d(k), c(k));
        self.arrow(a(k), c(k));
        self.arrow_mult(c(k), b(k), 2);
        self.arrow(b(k), a(k));
        self.arrow(b(k), d(k));
    }
}

/// Build the labeled exchange matrix for (n,p,q). Labels are sorted
/// canonically: g, h, m, l, r, f, s, e, a, b, c, d, then by index.
pub fn build_diagram(pr: OrbifoldParams) -> Result<ExchangeMatrix, Rejection> {
    validate_params(pr)?;
    let OrbifoldParams { n, p, q } = pr;
    let mut bd = Builder::new();
    match n {
        0 if p == 2 => {
            for i in 1..q {
                bd.arrow(h(i), g(i));
                bd.arrow(g(i), h(i + 1));
                bd.arrow(h(i + 1), h(i));
            }
            bd.arrow(h(q), g(q));
            bd.arrow(g(q), h(1));
            bd.arrow(h(1), h(q));
        }
        0 => {
            bd.core(q);
            bd.ladder(q, p - 2, (s(), s()));
        }
        1 => {
            bd.core(q);
            let top = p - 1;
            bd.ladder(q, top, (l(top), r(top)));
            bd.arrow(l(top), f(1));
            bd.arrow(r(top), f(1));
            bd.arrow_mult(f(1), f(2), 2);
            bd.arrow(f(2), l(top));
            bd.arrow(f(2), r(top));
        }
        _ => {
            bd.core(q);
            let v = if n == 2 { e(2) } else { f(1) };
            bd.ladder(q, p - 1, (e(1), v));
            for k in 1..=n {
                bd.pentagon(k);
            }
            for j in 1..n.saturating_sub(2) {
                bd.arrow(f(j), e(j + 1));
                bd.arrow(e(j + 1), f(j + 1));
                bd.arrow(f(j + 1), f(j));
            }
            if n > 2 {
                bd.arrow(f(n - 2), e(n - 1));
                bd.arrow(e(n - 1), e(n));
                bd.arrow(e(n), f(n - 2));
            }
        }
    }
    Ok(bd.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pr(n: u32, p: u32, q: u32) -> OrbifoldParams {
        OrbifoldParams::new(n, p, q)
    }

    #[test]
    fn validation() {
        assert_eq!(validate_params(pr(1, 2, 1)), Ok(()));
        assert_eq!(validate_params(pr(3, 1, 2)), Err(Rejection::PunctureOne));
        assert_eq!(validate_params(pr(0, 2, 1)), Err(Rejection::TooSmall));
        assert_eq!(validate_params(pr(0, 1, 5)), Err(Rejection::PunctureOne));
        assert_eq!(validate_params(pr(1, 3, 0)), Err(Rejection::NoOrbifoldPoints));
    }

    #[test]
    fn torus_two_punctures_one_point() {
        let m = build_diagram(pr(1, 2, 1)).unwrap();
        let names: Vec<String> = m.labels().iter().map(|l| l.to_string()).collect();
        assert_eq!(names, ["g_1", "h_1", "h_2", "m_1", "l_1", "r_1", "f_1", "f_2"]);
        let i = |v: VertexLabel| m.label_index(&v).unwrap();
        assert_eq!(m.weight(i(f(1)), i(f(2))), 4);
        assert_eq!(m.weight(i(h(1)), i(g(1))), 2);
        assert_eq!(m.label_index(&g(1)).unwrap(), 0);
        assert_eq!(m.label_index(&f(2)).unwrap(), 7);
        assert!(m.label_index(&l(5)).is_err());
    }

    #[test]
    fn sphere_band() {
        let m = build_diagram(pr(0, 2, 3)).unwrap();
        assert_eq!(m.rank(), 6);
        assert_eq!(m.arrow_pairs().len(), 9);
    }

    #[test]
    fn ranks_and_symmetrizers() {
        for n in 0..5 {
            for p in 2..8 {
                for q in 1..5 {
                    let prm = pr(n, p, q);
                    let Ok(m) = build_diagram(prm) else { continue };
                    assert_eq!(m.rank(), expected_rank(prm), "{prm}");
                    for (i, lab) in m.labels().iter().enumerate() {
                        let want = if lab.family() == Some(Family::G) { 2 } else { 1 };
                        assert_eq!(m.symmetrizer()[i], want, "{prm} {lab}");
                    }
                }
            }
        }
    }

    #[test]
    fn degree_pattern() {
        let m = build_diagram(pr(1, 5, 3)).unwrap();
        assert_eq!(m.rank(), 21);
        let deg = |v: VertexLabel| {
            let i = m.label_index(&v).unwrap();
            (0..m.rank()).filter(|&j| m.get(i, j) != 0).count()
        };
        for k in 2..4 {
            assert_eq!(deg(super::m(k)), 4);
        }
        for i in 1..=3 {
            assert_eq!(deg(g(i)), 2);
        }
        let w4: Vec<_> = m.arrow_pairs().into_iter().filter(|a| a.forward * -a.backward == 4).collect();
        assert_eq!(w4.len(), 1);
        assert_eq!((w4[0].from.clone(), w4[0].to.clone()), (f(1), f(2)));
    }
}
