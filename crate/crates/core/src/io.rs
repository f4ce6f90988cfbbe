//! Reading and writing mass functions.
//!
//! The text format is line oriented:
//!
//! ```text
//! # comments run to the end of the line
//! name: optional free-text title      (only before the frame line)
//! frame: w1 w2 w3
//! w1: 0.4
//! w1 w2: 0.1
//! w1 w2 w3: 0.5
//! ```
//!
//! The JSON form carries the same data as
//! `{"name": ..., "frame": [...], "masses": [{"subset": [...], "mass": ...}]}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::evidence::{Frame, MassFunction};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MassEntry {
    pub subset: Vec<String>,
    pub mass: f64,
}

/// A mass function as written in a file, before validation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BpaDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub frame: Vec<String>,
    pub masses: Vec<MassEntry>,
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Whitespace-separated tokens with their 1-based character columns.
fn tokens(s: &str, offset: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (col, (byte, ch)) in s.char_indices().enumerate() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some((col, byte)),
            (true, Some((c, b))) => {
                out.push((offset + c + 1, &s[b..byte]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some((c, b)) = start {
        out.push((offset + c + 1, &s[b..]));
    }
    out
}

fn is_decimal_literal(s: &str) -> bool {
    !s.is_empty()
        && s.chars().any(|c| c.is_ascii_digit())
        && s.chars()
            .all(|c| c.is_ascii_digit() || matches!(c, '.' | 'e' | 'E' | '+' | '-'))
}

fn is_writable_label(label: &str) -> bool {
    !label.is_empty()
        && !label
            .chars()
            .any(|c| c.is_whitespace() || c == ':' || c == '#')
}

impl BpaDocument {
    /// Parses the text format. Labels are checked against the frame here so
    /// errors can point at them; mass-level checks happen in [`Self::to_mass`].
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut name = None;
        let mut frame: Option<Vec<String>> = None;
        let mut masses = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let content = raw.split('#').next().unwrap_or("");
            if content.trim().is_empty() {
                continue;
            }
            let first_col = content.chars().take_while(|c| c.is_whitespace()).count() + 1;
            let Some(colon) = content.rfind(':') else {
                return Err(parse_error(
                    line_no,
                    first_col,
                    "expected `<labels>: <value>`",
                ));
            };
            let head = &content[..colon];
            let tail = &content[colon + 1..];
            let tail_offset = content[..colon + 1].chars().count();

            let Some(labels) = frame.as_ref() else {
                let (key, rest) = content.split_once(':').expect("colon present");
                let rest_offset = key.chars().count() + 1;
                match key.trim() {
                    "name" if name.is_none() => {
                        name = Some(rest.trim().to_string());
                        continue;
                    }
                    "frame" => {
                        let found: Vec<(usize, &str)> = tokens(rest, rest_offset);
                        if found.is_empty() {
                            return Err(parse_error(
                                line_no,
                                rest_offset + 1,
                                "frame has no labels",
                            ));
                        }
                        for (k, &(col, label)) in found.iter().enumerate() {
                            if found[..k].iter().any(|&(_, l)| l == label) {
                                return Err(parse_error(
                                    line_no,
                                    col,
                                    format!("duplicate frame label `{label}`"),
                                ));
                            }
                        }
                        frame = Some(found.iter().map(|&(_, l)| l.to_string()).collect());
                        continue;
                    }
                    _ => {
                        return Err(parse_error(
                            line_no,
                            first_col,
                            "expected `frame: <label> ...` before any mass entries",
                        ))
                    }
                }
            };

            let mut subset = Vec::new();
            for (col, label) in tokens(head, 0) {
                if !labels.iter().any(|l| l == label) {
                    return Err(parse_error(
                        line_no,
                        col,
                        format!("unknown label `{label}`"),
                    ));
                }
                subset.push(label.to_string());
            }
            let value = tokens(tail, tail_offset);
            let (col, literal) = match value.as_slice() {
                [one] => *one,
                [] => return Err(parse_error(line_no, tail_offset + 1, "missing mass value")),
                [_, (col, _), ..] => {
                    return Err(parse_error(
                        line_no,
                        *col,
                        "unexpected text after mass value",
                    ))
                }
            };
            let mass = is_decimal_literal(literal)
                .then(|| literal.parse::<f64>().ok())
                .flatten()
                .ok_or_else(|| parse_error(line_no, col, format!("invalid mass `{literal}`")))?;
            masses.push(MassEntry { subset, mass });
        }
        let frame = frame.ok_or_else(|| parse_error(1, 1, "missing `frame:` line"))?;
        Ok(BpaDocument {
            name,
            frame,
            masses,
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))
    }

    /// JSON when the first non-blank character is `{`, text otherwise.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            Self::from_json(text)
        } else {
            Self::parse_text(text)
        }
    }

    pub fn from_mass(m: &MassFunction, name: Option<String>) -> Self {
        let frame = m.frame();
        BpaDocument {
            name,
            frame: frame.labels().to_vec(),
            masses: m
                .focal_elements()
                .iter()
                .map(|&(set, mass)| MassEntry {
                    subset: frame.labels_of(set).into_iter().map(String::from).collect(),
                    mass,
                })
                .collect(),
        }
    }

    /// Validates the document into a frame and mass function.
    pub fn to_mass(&self) -> Result<MassFunction> {
        let frame = Frame::new(self.frame.iter().cloned())?;
        let mut entries = Vec::with_capacity(self.masses.len());
        for e in &self.masses {
            let bits = if e.subset.is_empty() {
                0
            } else {
                frame.subset(&e.subset)?.bits()
            };
            entries.push((bits, e.mass));
        }
        MassFunction::new(frame, entries)
    }

    pub fn to_text(&self) -> Result<String> {
        let mut out = String::new();
        if let Some(name) = &self.name {
            out.push_str(&format!("name: {}\n", name.replace('\n', " ")));
        }
        for label in &self.frame {
            if !is_writable_label(label) {
                return Err(Error::UnrepresentableLabel(label.clone()));
            }
        }
        out.push_str(&format!("frame: {}\n", self.frame.join(" ")));
        for e in &self.masses {
            out.push_str(&format!("{}: {}\n", e.subset.join(" "), e.mass));
        }
        Ok(out)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }
}

/// Parses a text-format document into a validated mass function.
pub fn parse_bpa(text: &str) -> Result<(Frame, MassFunction)> {
    let m = BpaDocument::parse_text(text)?.to_mass()?;
    Ok((m.frame().clone(), m))
}

/// Writes `m` in the text format.
pub fn emit_bpa(m: &MassFunction) -> Result<String> {
    BpaDocument::from_mass(m, None).to_text()
}
