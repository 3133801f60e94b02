//! Text descriptions of frames and spaces.
//!
//! A description is either one JSON object or a sequence of `key: <json>`
//! lines; blank lines and lines starting with `#` are ignored.
//!
//! ```text
//! elements: ["0", "a", "1"]
//! covers: [["0", "a"], ["a", "1"]]
//! ```
//!
//! A frame may instead be given as `poset: {"size": 2, "covers": [[0, 1]]}`,
//! meaning the frame of down-sets of that poset. A space is given by
//! `points: n` and `opens: [[...], ...]`.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::frame::FiniteFrame;
use crate::generate::{downset_frame, PosetSeed};
use crate::spatial::FiniteSpace;

fn parse_error(context: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse {
        context: context.into(),
        message: message.into(),
    }
}

/// Parses either format into a JSON object.
pub fn parse_document(text: &str, context: &str) -> Result<Map<String, Value>> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        return match serde_json::from_str::<Value>(text) {
            Ok(Value::Object(map)) => Ok(map),
            Ok(_) => Err(parse_error(context, "expected a JSON object")),
            Err(e) => Err(parse_error(
                format!("{context}:{}:{}", e.line(), e.column()),
                e.to_string(),
            )),
        };
    }
    let mut map = Map::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let at = format!("{context}:{}", i + 1);
        let (key, value) = line
            .split_once(':')
            .ok_or_else(|| parse_error(&at, "expected `key: <json>`"))?;
        let value: Value = serde_json::from_str(value.trim())
            .map_err(|e| parse_error(format!("{at}: field `{}`", key.trim()), e.to_string()))?;
        if map.insert(key.trim().to_string(), value).is_some() {
            return Err(parse_error(at, format!("duplicate field `{}`", key.trim())));
        }
    }
    Ok(map)
}

fn field<T: for<'de> Deserialize<'de>>(
    map: &Map<String, Value>,
    key: &str,
    context: &str,
) -> Result<T> {
    let value = map
        .get(key)
        .ok_or_else(|| parse_error(context, format!("missing field `{key}`")))?;
    serde_json::from_value(value.clone())
        .map_err(|e| parse_error(format!("{context}: field `{key}`"), e.to_string()))
}

/// A frame as element names and covering pairs `(lower, upper)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrameDescription {
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
}

#[derive(Deserialize)]
struct PosetInput {
    size: usize,
    covers: Vec<(usize, usize)>,
}

impl FrameDescription {
    pub fn of(frame: &FiniteFrame) -> Self {
        let mut covers = Vec::new();
        for a in frame.elements() {
            for b in frame.elements() {
                if a != b
                    && frame.leq(a, b)
                    && !frame
                        .elements()
                        .any(|c| c != a && c != b && frame.leq(a, c) && frame.leq(c, b))
                {
                    covers.push((frame.name(a).to_string(), frame.name(b).to_string()));
                }
            }
        }
        FrameDescription {
            elements: frame.names().to_vec(),
            covers,
        }
    }

    pub fn to_frame(&self, context: &str) -> Result<FiniteFrame> {
        let n = self.elements.len();
        let index = |name: &str| {
            self.elements.iter().position(|e| e == name).ok_or_else(|| {
                parse_error(
                    format!("{context}: field `covers`"),
                    format!("unknown element `{name}`"),
                )
            })
        };
        for (i, name) in self.elements.iter().enumerate() {
            if self.elements[..i].contains(name) {
                return Err(parse_error(
                    format!("{context}: field `elements`"),
                    format!("duplicate element `{name}`"),
                ));
            }
        }
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for (lo, hi) in &self.covers {
            let (a, b) = (index(lo)?, index(hi)?);
            leq[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        FiniteFrame::from_order(self.elements.clone(), &leq)
    }
}

/// Reads a frame from either description format.
pub fn parse_frame(text: &str, context: &str) -> Result<FiniteFrame> {
    let map = parse_document(text, context)?;
    if map.contains_key("poset") {
        let p: PosetInput = field(&map, "poset", context)?;
        return downset_frame(&PosetSeed {
            size: p.size,
            covers: p.covers,
        });
    }
    let desc = FrameDescription {
        elements: field(&map, "elements", context)?,
        covers: field(&map, "covers", context)?,
    };
    desc.to_frame(context)
}

/// A space as a point count and open sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceDescription {
    pub points: usize,
    pub opens: Vec<Vec<usize>>,
}

impl SpaceDescription {
    pub fn of(space: &FiniteSpace) -> Self {
        SpaceDescription {
            points: space.points(),
            opens: space
                .opens()
                .iter()
                .map(|&u| (0..space.points()).filter(|i| u >> i & 1 == 1).collect())
                .collect(),
        }
    }
}

pub fn parse_space(text: &str, context: &str) -> Result<FiniteSpace> {
    let map = parse_document(text, context)?;
    let points: usize = field(&map, "points", context)?;
    let opens: Vec<Vec<usize>> = field(&map, "opens", context)?;
    FiniteSpace::new(points, &opens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{all_frames_up_to, chain_frame};

    #[test]
    fn line_format_round_trip() {
        let text = "# three-chain\nelements: [\"0\", \"a\", \"1\"]\ncovers: [[\"0\", \"a\"], [\"a\", \"1\"]]\n";
        let f = parse_frame(text, "three.txt").unwrap();
        assert!(f.is_isomorphic(&chain_frame(3).unwrap()));
        for g in all_frames_up_to(6).unwrap() {
            let json = serde_json::to_string(&FrameDescription::of(&g)).unwrap();
            let back = parse_frame(&json, "inline").unwrap();
            assert_eq!(back.names(), g.names());
            assert!(back.is_isomorphic(&g));
        }
    }

    #[test]
    fn errors_carry_context() {
        let err = parse_frame(
            "elements: [\"0\", \"1\"]\ncovers: [[\"0\", \"z\"]]",
            "f.txt",
        )
        .unwrap_err();
        assert!(err.to_string().contains("f.txt"), "{err}");
        assert!(err.to_string().contains("`z`"), "{err}");
        let err = parse_frame("elements: [0, \n", "g.txt").unwrap_err();
        assert!(err.to_string().contains("g.txt:1"), "{err}");
        let err = parse_frame("{\"elements\": [\"0\"]}", "h.json").unwrap_err();
        assert!(err.to_string().contains("missing field `covers`"), "{err}");
    }

    #[test]
    fn poset_and_space_inputs() {
        let f = parse_frame("poset: {\"size\": 2, \"covers\": []}", "p").unwrap();
        assert_eq!(f.len(), 4);
        let s = parse_space("points: 2\nopens: [[], [0], [0, 1]]", "s").unwrap();
        assert_eq!(
            SpaceDescription::of(&s).opens,
            vec![vec![], vec![0], vec![0, 1]]
        );
        assert!(matches!(
            parse_space("points: 2\nopens: [[], [0, 1]]", "s"),
            Err(Error::NotT0(0, 1))
        ));
    }
}
