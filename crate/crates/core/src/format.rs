//! Text and JSON formats for diagrams and twisted elements.
//!
//! Text: `n=6: (1,3)(2,3')(4,1')(5,6)(2',6')(4',5')`, optionally prefixed by a
//! twist as `2 * n=6: ...`. JSON: `{"n":6,"blocks":[[1,3],[2,-3],...]}` with
//! negative integers for primed vertices, plus `"twist"` for twisted
//! elements. Parsers accept blocks in any order; emitters are canonical.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::diagram::{BrauerDiagram, Vertex};
use crate::error::{Error, Result};
use crate::twisted::TwistedElement;

impl fmt::Display for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}:", self.degree())?;
        if self.degree() == 0 {
            return Ok(());
        }
        write!(f, " ")?;
        for (x, y) in self.blocks() {
            write!(f, "({x},{y})")?;
        }
        Ok(())
    }
}

fn parse_vertex(token: &str) -> Result<Vertex> {
    let token = token.trim();
    let (digits, primed) = match token.strip_suffix('\'') {
        Some(rest) => (rest.trim_end(), true),
        None => (token, false),
    };
    let label: usize = digits
        .parse()
        .map_err(|_| Error::Parse(format!("bad vertex `{token}`")))?;
    Ok(if primed {
        Vertex::Bottom(label)
    } else {
        Vertex::Top(label)
    })
}

impl FromStr for BrauerDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let rest = s
            .strip_prefix("n=")
            .ok_or_else(|| Error::Parse(format!("expected `n=<degree>:` prefix in `{s}`")))?;
        let (degree, body) = rest
            .split_once(':')
            .ok_or_else(|| Error::Parse("missing `:` after degree".into()))?;
        let degree: usize = degree
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad degree `{degree}`")))?;
        let mut blocks = Vec::new();
        let mut body = body.trim();
        while !body.is_empty() {
            let inner = body
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected `(` at `{body}`")))?;
            let close = inner
                .find(')')
                .ok_or_else(|| Error::Parse("unclosed block".into()))?;
            let block = inner[..close]
                .split(',')
                .map(parse_vertex)
                .collect::<Result<Vec<_>>>()?;
            blocks.push(block);
            body = inner[close + 1..].trim_start();
        }
        BrauerDiagram::new(degree, &blocks)
    }
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    twist: Option<u64>,
    blocks: Vec<Vec<i64>>,
}

impl DiagramJson {
    fn from_diagram(d: &BrauerDiagram, twist: Option<u64>) -> Self {
        let blocks = d
            .blocks()
            .into_iter()
            .map(|(x, y)| vec![x.signed(), y.signed()])
            .collect();
        DiagramJson {
            n: d.degree(),
            twist,
            blocks,
        }
    }

    fn to_diagram(&self) -> Result<BrauerDiagram> {
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|&v| Vertex::from_signed(v).ok_or_else(|| Error::Parse("vertex 0".into())))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        BrauerDiagram::new(self.n, &blocks)
    }
}

impl Serialize for BrauerDiagram {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        DiagramJson::from_diagram(self, None).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BrauerDiagram {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = DiagramJson::deserialize(deserializer)?;
        raw.to_diagram().map_err(D::Error::custom)
    }
}

impl Serialize for TwistedElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        DiagramJson::from_diagram(&self.diagram, Some(self.twist)).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TwistedElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = DiagramJson::deserialize(deserializer)?;
        let diagram = raw.to_diagram().map_err(D::Error::custom)?;
        Ok(TwistedElement {
            twist: raw.twist.unwrap_or(0),
            diagram,
        })
    }
}

impl BrauerDiagram {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("diagram serialization is infallible")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl TwistedElement {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("twisted element serialization is infallible")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Display for TwistedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} * {}", self.twist, self.diagram)
    }
}

impl FromStr for TwistedElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.split_once('*') {
            Some((twist, diagram)) => {
                let twist = twist
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad twist `{}`", twist.trim())))?;
                Ok(TwistedElement {
                    twist,
                    diagram: diagram.parse()?,
                })
            }
            None => Ok(TwistedElement {
                twist: 0,
                diagram: s.parse()?,
            }),
        }
    }
}

/// Parses either the text or the JSON form, whichever the input looks like.
pub fn parse_twisted(s: &str) -> Result<TwistedElement> {
    if s.trim_start().starts_with('{') {
        TwistedElement::from_json(s)
    } else {
        s.parse()
    }
}
