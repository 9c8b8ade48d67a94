//! Skew-symmetrizable exchange matrices with named vertices.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::label::VertexLabel;

/// One arrow as explicit matrix entries: `b[from][to] = forward > 0`,
/// `b[to][from] = backward < 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrowPair {
    pub from: VertexLabel,
    pub to: VertexLabel,
    pub forward: i64,
    pub backward: i64,
}

impl ArrowPair {
    pub fn new(from: VertexLabel, to: VertexLabel, forward: i64, backward: i64) -> Self {
        ArrowPair { from, to, forward, backward }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeMatrix {
    n: usize,
    b: Vec<i64>,
    d: Vec<i64>,
    labels: Vec<VertexLabel>,
    index: HashMap<VertexLabel, usize>,
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

fn index_labels(labels: &[VertexLabel]) -> Result<HashMap<VertexLabel, usize>> {
    let mut index = HashMap::with_capacity(labels.len());
    for (i, lab) in labels.iter().enumerate() {
        if index.insert(lab.clone(), i).is_some() {
            return Err(Error::DuplicateLabel(lab.clone()));
        }
    }
    Ok(index)
}

impl ExchangeMatrix {
    /// Assemble B from explicit arrow pairs and derive the minimal positive
    /// integer symmetrizer on each connected component.
    pub fn from_arrows(labels: Vec<VertexLabel>, pairs: &[ArrowPair]) -> Result<Self> {
        let (n, b, index) = Self::assemble(&labels, pairs)?;
        let d = derive_symmetrizer(n, &b).map_err(|v| Error::NoSymmetrizer(labels[v].clone()))?;
        Ok(ExchangeMatrix { n, b, d, labels, index })
    }

    /// Like [`from_arrows`](Self::from_arrows) but with a caller-supplied
    /// symmetrizer, which is checked rather than derived.
    pub fn with_symmetrizer(labels: Vec<VertexLabel>, pairs: &[ArrowPair], d: Vec<i64>) -> Result<Self> {
        let (n, b, index) = Self::assemble(&labels, pairs)?;
        Self::from_parts_indexed(n, b, d, labels, index)
    }

    /// Raw constructor from a row-major n×n matrix.
    pub fn from_parts(labels: Vec<VertexLabel>, b: Vec<i64>, d: Vec<i64>) -> Result<Self> {
        let index = index_labels(&labels)?;
        let n = labels.len();
        if b.len() != n * n {
            return Err(Error::Document(format!("expected {} entries, got {}", n * n, b.len())));
        }
        Self::from_parts_indexed(n, b, d, labels, index)
    }

    fn from_parts_indexed(
        n: usize,
        b: Vec<i64>,
        d: Vec<i64>,
        labels: Vec<VertexLabel>,
        index: HashMap<VertexLabel, usize>,
    ) -> Result<Self> {
        if d.len() != n {
            return Err(Error::Document(format!("expected {n} symmetrizer entries, got {}", d.len())));
        }
        if let Some(i) = d.iter().position(|&x| x <= 0) {
            return Err(Error::NoSymmetrizer(labels[i].clone()));
        }
        for i in 0..n {
            if b[i * n + i] != 0 {
                return Err(Error::SelfLoop(labels[i].clone()));
            }
            for j in 0..n {
                if d[i] * b[i * n + j] != -d[j] * b[j * n + i] {
                    return Err(Error::NotSkewSymmetrizable(labels[i].clone(), labels[j].clone()));
                }
            }
        }
        Ok(ExchangeMatrix { n, b, d, labels, index })
    }

    fn assemble(labels: &[VertexLabel], pairs: &[ArrowPair]) -> Result<(usize, Vec<i64>, HashMap<VertexLabel, usize>)> {
        let index = index_labels(labels)?;
        let n = labels.len();
        let mut b = vec![0i64; n * n];
        let mut seen = vec![false; n * n];
        for p in pairs {
            let i = *index.get(&p.from).ok_or_else(|| Error::UnknownVertex(p.from.clone()))?;
            let j = *index.get(&p.to).ok_or_else(|| Error::UnknownVertex(p.to.clone()))?;
            if i == j {
                return Err(Error::SelfLoop(p.from.clone()));
            }
            if seen[i * n + j] {
                return Err(Error::DuplicatePair(p.from.clone(), p.to.clone()));
            }
            if p.forward <= 0 || p.backward >= 0 {
                return Err(Error::BadPair(p.from.clone(), p.to.clone()));
            }
            seen[i * n + j] = true;
            seen[j * n + i] = true;
            b[i * n + j] = p.forward;
            b[j * n + i] = p.backward;
        }
        Ok((n, b, index))
    }

    pub fn empty() -> Self {
        ExchangeMatrix { n: 0, b: vec![], d: vec![], labels: vec![], index: HashMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.b[i * self.n + j]
    }

    pub fn entries(&self) -> &[i64] {
        &self.b
    }

    pub(crate) fn entries_mut(&mut self) -> &mut [i64] {
        &mut self.b
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.d
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &VertexLabel {
        &self.labels[i]
    }

    pub fn label_index(&self, v: &VertexLabel) -> Result<usize> {
        self.index.get(v).copied().ok_or_else(|| Error::UnknownVertex(v.clone()))
    }

    /// Diagram weight of the arrow i→j (0 when b_ij ≤ 0).
    pub fn weight(&self, i: usize, j: usize) -> i64 {
        let bij = self.get(i, j);
        if bij > 0 {
            -bij * self.get(j, i)
        } else {
            0
        }
    }

    /// All arrows in row-major order of their source then target.
    pub fn arrow_pairs(&self) -> Vec<ArrowPair> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                if self.get(i, j) > 0 {
                    out.push(ArrowPair::new(
                        self.labels[i].clone(),
                        self.labels[j].clone(),
                        self.get(i, j),
                        self.get(j, i),
                    ));
                }
            }
        }
        out
    }

    /// diag(d)·B skew-symmetric and zero diagonal.
    pub fn is_skew_symmetrized(&self) -> bool {
        (0..self.n).all(|i| {
            self.get(i, i) == 0 && (0..self.n).all(|j| self.d[i] * self.get(i, j) == -self.d[j] * self.get(j, i))
        })
    }
}

/// Propagate d_k / d_j = b_jk / −b_kj along edges as reduced fractions, then
/// clear denominators per component. Returns the offending vertex on a
/// cycle inconsistency.
fn derive_symmetrizer(n: usize, b: &[i64]) -> std::result::Result<Vec<i64>, usize> {
    let mut ratio: Vec<Option<(i64, i64)>> = vec![None; n];
    let mut d = vec![0i64; n];
    for root in 0..n {
        if ratio[root].is_some() {
            continue;
        }
        ratio[root] = Some((1, 1));
        let mut comp = vec![root];
        let mut stack = vec![root];
        while let Some(j) = stack.pop() {
            let (pj, qj) = ratio[j].unwrap();
            for k in 0..n {
                let bjk = b[j * n + k];
                if bjk == 0 {
                    continue;
                }
                let bkj = b[k * n + j];
                if bkj == 0 || bjk.signum() == bkj.signum() {
                    return Err(j);
                }
                // d_k = d_j · bjk / (−bkj)
                let (mut pk, mut qk) = (pj * bjk.abs(), qj * bkj.abs());
                let g = gcd(pk, qk);
                pk /= g;
                qk /= g;
                match ratio[k] {
                    None => {
                        ratio[k] = Some((pk, qk));
                        comp.push(k);
                        stack.push(k);
                    }
                    Some((p0, q0)) => {
                        if p0 * qk != pk * q0 {
                            return Err(k);
                        }
                    }
                }
            }
        }
        let den = comp.iter().fold(1, |acc, &v| lcm(acc, ratio[v].unwrap().1));
        let vals: Vec<i64> = comp.iter().map(|&v| ratio[v].unwrap().0 * (den / ratio[v].unwrap().1)).collect();
        let g = vals.iter().fold(0, |acc, &x| gcd(acc, x));
        for (&v, x) in comp.iter().zip(vals) {
            d[v] = x / g;
        }
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lab(s: &str) -> VertexLabel {
        VertexLabel::custom(s)
    }

    pub(crate) fn golden() -> ExchangeMatrix {
        ExchangeMatrix::from_arrows(
            vec![lab("a"), lab("b"), lab("c")],
            &[
                ArrowPair::new(lab("a"), lab("c"), 1, -2),
                ArrowPair::new(lab("b"), lab("a"), 2, -1),
                ArrowPair::new(lab("c"), lab("b"), 1, -1),
            ],
        )
        .unwrap()
    }

    #[test]
    fn golden_symmetrizer_and_weights() {
        let m = golden();
        assert_eq!(m.symmetrizer(), &[2, 1, 1]);
        assert_eq!(m.weight(0, 2), 2);
        assert_eq!(m.weight(1, 0), 2);
        assert_eq!(m.weight(2, 1), 1);
        assert!(m.is_skew_symmetrized());
    }

    #[test]
    fn single_edge() {
        let m = ExchangeMatrix::from_arrows(vec![lab("x"), lab("y")], &[ArrowPair::new(lab("x"), lab("y"), 1, -1)])
            .unwrap();
        assert_eq!(m.symmetrizer(), &[1, 1]);
        assert_eq!(m.entries(), &[0, 1, -1, 0]);
    }

    #[test]
    fn duplicate_pair_rejected() {
        let err = ExchangeMatrix::from_arrows(
            vec![lab("x"), lab("y")],
            &[ArrowPair::new(lab("x"), lab("y"), 1, -2), ArrowPair::new(lab("y"), lab("x"), 2, -1)],
        )
        .unwrap_err();
        assert!(matches!(err, Error::DuplicatePair(..)));
    }

    #[test]
    fn self_loop_rejected() {
        let err =
            ExchangeMatrix::from_arrows(vec![lab("x")], &[ArrowPair::new(lab("x"), lab("x"), 1, -1)]).unwrap_err();
        assert!(matches!(err, Error::SelfLoop(_)));
    }

    #[test]
    fn inconsistent_cycle_has_no_symmetrizer() {
        // ratios 2 · 1 · 1 around a 3-cycle do not close up
        let err = ExchangeMatrix::from_arrows(
            vec![lab("x"), lab("y"), lab("z")],
            &[
                ArrowPair::new(lab("x"), lab("y"), 1, -2),
                ArrowPair::new(lab("y"), lab("z"), 1, -1),
                ArrowPair::new(lab("z"), lab("x"), 1, -1),
            ],
        )
        .unwrap_err();
        assert!(matches!(err, Error::NoSymmetrizer(_)));
    }

    #[test]
    fn supplied_symmetrizer_is_checked() {
        let pairs = [ArrowPair::new(lab("x"), lab("y"), 1, -2)];
        assert!(ExchangeMatrix::with_symmetrizer(vec![lab("x"), lab("y")], &pairs, vec![2, 1]).is_ok());
        assert!(ExchangeMatrix::with_symmetrizer(vec![lab("x"), lab("y")], &pairs, vec![1, 1]).is_err());
    }
}
