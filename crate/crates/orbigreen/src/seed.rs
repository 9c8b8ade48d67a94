//! Framed seeds: the exchange matrix plus the c-vector block.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::label::VertexLabel;
use crate::matrix::ExchangeMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexColor {
    Green,
    Red,
}

impl std::fmt::Display for VertexColor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            VertexColor::Green => "green",
            VertexColor::Red => "red",
        })
    }
}

/// B together with C, where row i of C holds b_{i,j'} toward the frozen
/// companion j'. The frozen rows are implied by skew-symmetrizability
/// (d_{j'} = d_j) and never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FramedSeed {
    base: ExchangeMatrix,
    c: Vec<i64>,
}

/// Color of a c-row, or the reason it has none.
pub fn row_sign(row: &[i64]) -> std::result::Result<VertexColor, bool> {
    let pos = row.iter().any(|&x| x > 0);
    let neg = row.iter().any(|&x| x < 0);
    match (pos, neg) {
        (true, false) => Ok(VertexColor::Green),
        (false, true) => Ok(VertexColor::Red),
        (true, true) => Err(true),
        (false, false) => Err(false),
    }
}

impl FramedSeed {
    /// Attach one frozen companion per vertex with C = identity.
    pub fn frame(base: ExchangeMatrix) -> Self {
        let n = base.rank();
        let mut c = vec![0i64; n * n];
        for i in 0..n {
            c[i * n + i] = 1;
        }
        FramedSeed { base, c }
    }

    /// Build a seed with an explicit C block. Used for hand-built states.
    pub fn with_cblock(base: ExchangeMatrix, c: Vec<i64>) -> Result<Self> {
        let n = base.rank();
        if c.len() != n * n {
            return Err(Error::Document(format!("expected {} c-entries, got {}", n * n, c.len())));
        }
        Ok(FramedSeed { base, c })
    }

    pub fn base(&self) -> &ExchangeMatrix {
        &self.base
    }

    pub fn rank(&self) -> usize {
        self.base.rank()
    }

    pub fn cblock(&self) -> &[i64] {
        &self.c
    }

    pub fn c_row(&self, i: usize) -> &[i64] {
        let n = self.rank();
        &self.c[i * n..(i + 1) * n]
    }

    pub fn index_of(&self, v: &VertexLabel) -> Result<usize> {
        self.base.label_index(v)
    }

    /// Mutate at `k` returning the new seed.
    pub fn mutate_at(&self, k: &VertexLabel) -> Result<FramedSeed> {
        let idx = self.index_of(k)?;
        let mut next = self.clone();
        next.mutate_index(idx)?;
        Ok(next)
    }

    /// In-place mutation at index `k` over the whole n×2n block.
    pub fn mutate_index(&mut self, k: usize) -> Result<()> {
        let n = self.rank();
        if k >= n {
            return Err(Error::IndexOutOfRange(k));
        }
        let overflow = || Error::Overflow(self.base.label(k).clone());
        let row_b: Vec<i64> = (0..n).map(|t| self.base.get(k, t)).collect();
        let row_c: Vec<i64> = self.c_row(k).to_vec();
        let mut b = self.base.entries().to_vec();
        let mut c = std::mem::take(&mut self.c);
        for j in 0..n {
            if j == k {
                continue;
            }
            let bjk = b[j * n + k];
            if bjk != 0 {
                let lift = |x: i64, bkt: i64| -> Option<i64> {
                    let t1 = (-bjk).max(0).checked_mul(bkt)?;
                    let t2 = bkt.max(0).checked_mul(bjk)?;
                    x.checked_add(t1)?.checked_add(t2)
                };
                for t in 0..n {
                    if t != k {
                        b[j * n + t] = lift(b[j * n + t], row_b[t]).ok_or_else(overflow)?;
                    }
                    c[j * n + t] = lift(c[j * n + t], row_c[t]).ok_or_else(overflow)?;
                }
            }
            b[j * n + k] = -bjk;
        }
        for t in 0..n {
            b[k * n + t] = -b[k * n + t];
            c[k * n + t] = -c[k * n + t];
        }
        self.base.entries_mut().copy_from_slice(&b);
        self.c = c;
        Ok(())
    }

    pub fn color_index(&self, i: usize) -> Result<VertexColor> {
        row_sign(self.c_row(i)).map_err(|mixed| {
            let v = self.base.label(i).clone();
            if mixed {
                Error::MixedSign(v)
            } else {
                Error::ZeroRow(v)
            }
        })
    }

    pub fn color_of(&self, v: &VertexLabel) -> Result<VertexColor> {
        self.color_index(self.index_of(v)?)
    }

    /// All mutable vertices red. Vacuously true for the empty seed.
    pub fn is_final(&self) -> Result<bool> {
        for i in 0..self.rank() {
            if self.color_index(i)? == VertexColor::Green {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn green_vertices(&self) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for i in 0..self.rank() {
            if self.color_index(i)? == VertexColor::Green {
                out.push(i);
            }
        }
        Ok(out)
    }

    /// Weight of the edge between vertex `v` and the frozen companion `j'`:
    /// c_vj² · d_v / d_j. `None` if that is not an integer.
    pub fn frozen_weight(&self, v: usize, j: usize) -> Option<i64> {
        let cv = self.c_row(v)[j];
        let d = self.base.symmetrizer();
        let num = cv * cv * d[v];
        (num % d[j] == 0).then(|| num / d[j])
    }

    /// C equals −1 times a permutation matrix.
    pub fn is_negative_permutation(&self) -> bool {
        let n = self.rank();
        let mut col_hit = vec![false; n];
        for i in 0..n {
            let row = self.c_row(i);
            let nz: Vec<usize> = (0..n).filter(|&t| row[t] != 0).collect();
            if nz.len() != 1 || row[nz[0]] != -1 || col_hit[nz[0]] {
                return false;
            }
            col_hit[nz[0]] = true;
        }
        true
    }

    /// Exact state key (B then C).
    pub fn state_key(&self) -> Vec<i64> {
        let mut key = self.base.entries().to_vec();
        key.extend_from_slice(&self.c);
        key
    }
}
