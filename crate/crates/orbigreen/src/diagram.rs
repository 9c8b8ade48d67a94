//! Weighted-digraph view of an exchange matrix and its mutation rule.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::label::VertexLabel;
use crate::matrix::ExchangeMatrix;
use crate::seed::FramedSeed;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagramVertex {
    pub label: VertexLabel,
    pub frozen: bool,
}

impl fmt::Display for DiagramVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.frozen {
            write!(f, "{}'", self.label)
        } else {
            write!(f, "{}", self.label)
        }
    }
}

/// Vertices plus arrows keyed by (from, to) vertex index. At most one arrow
/// per unordered pair; weights are positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    pub vertices: Vec<DiagramVertex>,
    pub arrows: BTreeMap<(usize, usize), i64>,
}

impl Diagram {
    pub fn index_of(&self, v: &VertexLabel, frozen: bool) -> Option<usize> {
        self.vertices.iter().position(|x| &x.label == v && x.frozen == frozen)
    }

    pub fn weight(&self, from: usize, to: usize) -> i64 {
        self.arrows.get(&(from, to)).copied().unwrap_or(0)
    }

    /// Arrows as (from, to, weight) label triples, in index order.
    pub fn arrow_list(&self) -> Vec<(String, String, i64)> {
        self.arrows
            .iter()
            .map(|(&(i, j), &w)| (self.vertices[i].to_string(), self.vertices[j].to_string(), w))
            .collect()
    }
}

/// Arrow i→j iff b_ij > 0, weighted −b_ij·b_ji.
pub fn diagram_view(m: &ExchangeMatrix) -> Diagram {
    let n = m.rank();
    let vertices = m.labels().iter().map(|l| DiagramVertex { label: l.clone(), frozen: false }).collect();
    let mut arrows = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            if m.get(i, j) > 0 {
                arrows.insert((i, j), m.weight(i, j));
            }
        }
    }
    Diagram { vertices, arrows }
}

/// Framed view: mutable vertices first, then one frozen companion per vertex
/// in the same order. Frozen edges carry weight c² · d_v / d_j, pointing
/// v→j' when c_vj > 0.
pub fn framed_view(seed: &FramedSeed) -> Result<Diagram> {
    let mut dg = diagram_view(seed.base());
    let n = seed.rank();
    for l in seed.base().labels() {
        dg.vertices.push(DiagramVertex { label: l.clone(), frozen: true });
    }
    for v in 0..n {
        for j in 0..n {
            let cv = seed.c_row(v)[j];
            if cv == 0 {
                continue;
            }
            let w = seed.frozen_weight(v, j).ok_or_else(|| Error::NonIntegerWeight(seed.base().label(v).clone()))?;
            if cv > 0 {
                dg.arrows.insert((v, n + j), w);
            } else {
                dg.arrows.insert((n + j, v), w);
            }
        }
    }
    Ok(dg)
}

fn exact_sqrt(x: i64) -> Option<i64> {
    if x < 0 {
        return None;
    }
    let r = (x as f64).sqrt().round() as i64;
    (r.saturating_sub(1)..=r + 1).find(|&t| t >= 0 && t * t == x)
}

/// Mutate a diagram at vertex index `k` using only weights and orientation:
/// arrows at k reverse, and for every path j→k→l with weights a, b the edge
/// between j and l is replaced according to ±√c ± √d = √(ab), with + for
/// oriented cycles. Edges between two frozen vertices are dropped.
pub fn diagram_mutate(dg: &Diagram, k: usize) -> Result<Diagram> {
    let n = dg.vertices.len();
    if k >= n {
        return Err(Error::IndexOutOfRange(k));
    }
    let kl = || dg.vertices[k].label.clone();
    let frozen = |i: usize| dg.vertices[i].frozen;
    let mut arrows = BTreeMap::new();
    let (mut ins, mut outs) = (Vec::new(), Vec::new());
    for (&(i, j), &w) in &dg.arrows {
        if j == k {
            ins.push(i);
            arrows.insert((k, i), w);
        } else if i == k {
            outs.push(j);
            arrows.insert((j, k), w);
        } else if !(frozen(i) && frozen(j)) {
            arrows.insert((i, j), w);
        }
    }
    // every path src→k→dst changes the edge between src and dst
    for &src in &ins {
        for &dst in &outs {
            if frozen(src) && frozen(dst) {
                continue;
            }
            let ab = dg.weight(src, k) * dg.weight(k, dst);
            let forward = arrows.remove(&(src, dst)).unwrap_or(0);
            let backward = arrows.remove(&(dst, src)).unwrap_or(0);
            let (cyc, c) = if backward > 0 { (true, backward) } else { (false, forward) };
            let root = exact_sqrt(ab * c).ok_or_else(|| Error::NonIntegerWeight(kl()))?;
            if !cyc {
                arrows.insert((src, dst), ab + c + 2 * root);
            } else {
                let d = ab + c - 2 * root;
                match ab.cmp(&c) {
                    std::cmp::Ordering::Greater => {
                        arrows.insert((src, dst), d);
                    }
                    std::cmp::Ordering::Less => {
                        arrows.insert((dst, src), d);
                    }
                    std::cmp::Ordering::Equal => {}
                }
            }
        }
    }
    Ok(Diagram { vertices: dg.vertices.clone(), arrows })
}

/// Framed view with frozen–frozen arrows removed; the shape diagram_mutate
/// produces from a framed view.
pub fn strip_frozen_pairs(mut dg: Diagram) -> Diagram {
    let vs = dg.vertices.clone();
    dg.arrows.retain(|&(i, j), _| !(vs[i].frozen && vs[j].frozen));
    dg
}
