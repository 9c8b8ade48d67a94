//! Vertex names.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Arc families appearing in the orbifold diagrams.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    /// Pending arcs (symmetrizer 2).
    G,
    H,
    M,
    L,
    R,
    F,
    S,
    E,
    A,
    B,
    C,
    D,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::G => 'g',
            Family::H => 'h',
            Family::M => 'm',
            Family::L => 'l',
            Family::R => 'r',
            Family::F => 'f',
            Family::S => 's',
            Family::E => 'e',
            Family::A => 'a',
            Family::B => 'b',
            Family::C => 'c',
            Family::D => 'd',
        }
    }

    fn from_letter(c: char) -> Option<Family> {
        Some(match c {
            'g' => Family::G,
            'h' => Family::H,
            'm' => Family::M,
            'l' => Family::L,
            'r' => Family::R,
            'f' => Family::F,
            's' => Family::S,
            'e' => Family::E,
            'a' => Family::A,
            'b' => Family::B,
            'c' => Family::C,
            'd' => Family::D,
            _ => return None,
        })
    }
}

/// A vertex name: either a family member like `h_3`, or a free-form name
/// used by hand-built diagrams.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexLabel {
    Arc(Family, u32),
    Custom(String),
}

impl VertexLabel {
    pub fn arc(family: Family, index: u32) -> Self {
        VertexLabel::Arc(family, index)
    }

    pub fn custom(name: impl Into<String>) -> Self {
        VertexLabel::Custom(name.into())
    }

    pub fn family(&self) -> Option<Family> {
        match self {
            VertexLabel::Arc(f, _) => Some(*f),
            VertexLabel::Custom(_) => None,
        }
    }
}

/// Shorthand constructors used heavily by the diagram builders and sequences.
pub fn g(i: u32) -> VertexLabel {
    VertexLabel::Arc(Family::G, i)
}
pub fn h(i: u32) -> VertexLabel {
    VertexLabel::Arc(Family::H, i)
}
pub fn m(i: u32) -> VertexLabel {
    VertexLabel::Arc(Family::M, i)
}
pub fn l(i: u32) -> VertexLabel {
    VertexLabel::Arc(Family::L, i)
}
pub fn r(i: u32) -> VertexLabel {
    VertexLabel::Arc(Family::R, i)
}
pub fn f(i: u32) -> VertexLabel {
    VertexLabel::Arc(Family::F, i)
}
pub fn s() -> VertexLabel {
    VertexLabel::Arc(Family::S, 1)
}
pub fn e(i: u32) -> VertexLabel {
    VertexLabel::Arc(Family::E, i)
}
pub fn a(i: u32) -> VertexLabel {
    VertexLabel::Arc(Family::A, i)
}
pub fn b(i: u32) -> VertexLabel {
    VertexLabel::Arc(Family::B, i)
}
pub fn c(i: u32) -> VertexLabel {
    VertexLabel::Arc(Family::C, i)
}
pub fn d(i: u32) -> VertexLabel {
    VertexLabel::Arc(Family::D, i)
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Arc(Family::S, _) => write!(fm, "s"),
            VertexLabel::Arc(fam, i) => write!(fm, "{}_{}", fam.letter(), i),
            VertexLabel::Custom(name) => write!(fm, "{name}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid vertex label {0:?}")]
pub struct LabelParseError(pub String);

/// Accepts `h_3`, `h3`, `h_{3}`, `s`, and any other non-empty identifier
/// (kept verbatim as a custom label).
impl FromStr for VertexLabel {
    type Err = LabelParseError;

    fn from_str(raw: &str) -> Result<Self, Self::Err> {
        let t = raw.trim();
        if t.is_empty() || t.chars().any(|ch| ch.is_whitespace() || ch == ',') {
            return Err(LabelParseError(raw.to_string()));
        }
        if t == "s" {
            return Ok(s());
        }
        let mut chars = t.chars();
        let head = chars.next().unwrap();
        let rest: String = chars.collect();
        let rest = rest.strip_prefix('_').unwrap_or(&rest);
        let rest = rest.strip_prefix('{').and_then(|x| x.strip_suffix('}')).unwrap_or(rest);
        if let Some(fam) = Family::from_letter(head) {
            if fam != Family::S && !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) {
                if let Ok(i) = rest.parse::<u32>() {
                    if i > 0 {
                        return Ok(VertexLabel::Arc(fam, i));
                    }
                }
            }
        }
        Ok(VertexLabel::Custom(t.to_string()))
    }
}

impl Serialize for VertexLabel {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for VertexLabel {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let raw = String::deserialize(de)?;
        raw.parse().map_err(serde::de::Error::custom)
    }
}
