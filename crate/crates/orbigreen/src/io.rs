//! Versioned JSON documents for diagrams and framed states, and DOT export.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::diagram::{diagram_view, framed_view};
use crate::error::{Error, Result};
use crate::label::VertexLabel;
use crate::matrix::{ArrowPair, ExchangeMatrix};
use crate::orbifold::OrbifoldParams;
use crate::seed::{FramedSeed, VertexColor};

pub const DOCUMENT_VERSION: &str = "orbigreen-diagram/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CustomTag {
    #[serde(rename = "custom")]
    Custom,
}

/// Either the orbifold triple the diagram was built from, or "custom".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DocParams {
    Orbifold(OrbifoldParams),
    Custom(CustomTag),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DocVertex {
    pub name: VertexLabel,
    pub symmetrizer_d: i64,
}

/// One arrow, stored as the two matrix entries b_{from,to} > 0 > b_{to,from}
/// rather than as a diagram weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DocArrow {
    pub from: VertexLabel,
    pub to: VertexLabel,
    pub b_forward: i64,
    pub b_backward: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramDocument {
    pub version: String,
    pub params: DocParams,
    pub vertices: Vec<DocVertex>,
    pub arrows: Vec<DocArrow>,
    /// Rows of the C block (row i lists c_{i,j} for j in vertex order).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frozen: Option<Vec<Vec<i64>>>,
}

impl DiagramDocument {
    pub fn from_matrix(m: &ExchangeMatrix, params: Option<OrbifoldParams>) -> Self {
        let vertices = m
            .labels()
            .iter()
            .zip(m.symmetrizer())
            .map(|(l, &d)| DocVertex { name: l.clone(), symmetrizer_d: d })
            .collect();
        let arrows = m
            .arrow_pairs()
            .into_iter()
            .map(|a| DocArrow { from: a.from, to: a.to, b_forward: a.forward, b_backward: a.backward })
            .collect();
        DiagramDocument {
            version: DOCUMENT_VERSION.to_string(),
            params: params.map_or(DocParams::Custom(CustomTag::Custom), DocParams::Orbifold),
            vertices,
            arrows,
            frozen: None,
        }
    }

    pub fn from_seed(seed: &FramedSeed, params: Option<OrbifoldParams>) -> Self {
        let mut doc = Self::from_matrix(seed.base(), params);
        doc.frozen = Some((0..seed.rank()).map(|i| seed.c_row(i).to_vec()).collect());
        doc
    }

    /// Validate and rebuild the matrix; the symmetrizer is checked, not derived.
    pub fn to_matrix(&self) -> Result<ExchangeMatrix> {
        if self.version != DOCUMENT_VERSION {
            return Err(Error::Document(format!("unsupported version {:?}", self.version)));
        }
        let labels = self.vertices.iter().map(|v| v.name.clone()).collect();
        let d = self.vertices.iter().map(|v| v.symmetrizer_d).collect();
        let pairs: Vec<ArrowPair> = self
            .arrows
            .iter()
            .map(|a| ArrowPair::new(a.from.clone(), a.to.clone(), a.b_forward, a.b_backward))
            .collect();
        ExchangeMatrix::with_symmetrizer(labels, &pairs, d)
    }

    /// The framed seed: stored C rows, or the identity frame if absent.
    pub fn to_seed(&self) -> Result<FramedSeed> {
        let m = self.to_matrix()?;
        match &self.frozen {
            None => Ok(FramedSeed::frame(m)),
            Some(rows) => {
                let n = m.rank();
                if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                    return Err(Error::Document(format!("frozen block must be {n}×{n}")));
                }
                FramedSeed::with_cblock(m, rows.concat())
            }
        }
    }

    pub fn orbifold_params(&self) -> Option<OrbifoldParams> {
        match self.params {
            DocParams::Orbifold(p) => Some(p),
            DocParams::Custom(_) => None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DotOptions {
    /// Fill mutable vertices green/red by their c-row.
    pub colors: bool,
    /// Include frozen companions as boxed nodes.
    pub frozen: bool,
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Plain DOT digraph with canonical (matrix) vertex order; edge labels carry
/// diagram weights.
pub fn to_dot(seed: &FramedSeed, name: &str, opts: DotOptions) -> Result<String> {
    let dg = if opts.frozen { framed_view(seed)? } else { diagram_view(seed.base()) };
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(name)).unwrap();
    for (i, v) in dg.vertices.iter().enumerate() {
        let mut attrs = Vec::new();
        if v.frozen {
            attrs.push("shape=box".to_string());
        } else if opts.colors {
            let fill = match seed.color_index(i) {
                Ok(VertexColor::Green) => "green",
                Ok(VertexColor::Red) => "red",
                Err(_) => "gray",
            };
            attrs.push(format!("style=filled, fillcolor={fill}"));
        }
        if attrs.is_empty() {
            writeln!(out, "  {};", quote(&v.to_string())).unwrap();
        } else {
            writeln!(out, "  {} [{}];", quote(&v.to_string()), attrs.join(", ")).unwrap();
        }
    }
    for (&(i, j), &w) in &dg.arrows {
        let (a, b) = (dg.vertices[i].to_string(), dg.vertices[j].to_string());
        writeln!(out, "  {} -> {} [label=\"{w}\"];", quote(&a), quote(&b)).unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}
