//! The `tri4` / `tri3` text formats.
//!
//! One record per line, `#` starts a comment, blank lines are ignored:
//!
//! ```text
//! tri4 1
//! n 6
//! g 0 0 1 1 : 1 3 0 2 4
//! ```
//!
//! The header names the format and version. `n` gives the simplex count.
//! Each `g` line glues simplex `a`, facet `f` to simplex `b`, facet `g` by
//! the permutation with the listed images; each identification is listed
//! once, in either direction. The loader synthesizes inverses and rejects
//! conflicting or repeated pairings.

use std::fmt;

use thiserror::Error;

use crate::core4::Triangulation4;
use crate::link3::Triangulation3;
use crate::perm::Perm;
use crate::tri::{FacetSlot, Gluing, GluingError, Triangulation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("expected header `{expected} 1`")]
    BadHeader { expected: &'static str },
    #[error("unsupported format version {0}")]
    BadVersion(String),
    #[error("expected `n <count>` with count >= 1")]
    BadCount,
    #[error("malformed gluing record: {0}")]
    BadRecord(String),
    #[error("{0}")]
    InvalidGluing(#[from] GluingError),
    #[error("permutation images are not a bijection")]
    NotABijection,
    #[error("unexpected record `{0}`")]
    UnexpectedRecord(String),
    #[error("missing `n <count>` line")]
    MissingCount,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

fn fail(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

fn parse_generic<const V: usize>(
    text: &str,
    header: &'static str,
) -> Result<Triangulation<V>, ParseError> {
    let mut tri: Option<Triangulation<V>> = None;
    let mut saw_header = false;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if !saw_header {
            if tokens.len() != 2 || tokens[0] != header {
                return Err(fail(line_no, ParseErrorKind::BadHeader { expected: header }));
            }
            if tokens[1] != "1" {
                return Err(fail(line_no, ParseErrorKind::BadVersion(tokens[1].into())));
            }
            saw_header = true;
            continue;
        }
        match tokens[0] {
            "n" => {
                let count = tokens
                    .get(1)
                    .and_then(|t| t.parse::<usize>().ok())
                    .filter(|&c| c >= 1 && tokens.len() == 2)
                    .ok_or_else(|| fail(line_no, ParseErrorKind::BadCount))?;
                if tri.is_some() {
                    return Err(fail(line_no, ParseErrorKind::UnexpectedRecord(line.into())));
                }
                tri = Some(Triangulation::new(count));
            }
            "g" => {
                let t = tri
                    .as_mut()
                    .ok_or_else(|| fail(line_no, ParseErrorKind::MissingCount))?;
                // g a f b g : p0 .. p{V-1}
                if tokens.len() != 6 + V || tokens[5] != ":" {
                    return Err(fail(line_no, ParseErrorKind::BadRecord(line.into())));
                }
                let nums: Option<Vec<usize>> = tokens[1..5]
                    .iter()
                    .map(|t| t.parse::<usize>().ok())
                    .collect();
                let Some(nums) = nums else {
                    return Err(fail(line_no, ParseErrorKind::BadRecord(line.into())));
                };
                let mut images = [0u8; V];
                for (i, tok) in tokens[6..].iter().enumerate() {
                    let Ok(v) = tok.parse::<u8>() else {
                        return Err(fail(line_no, ParseErrorKind::BadRecord(line.into())));
                    };
                    images[i] = v;
                }
                let map = Perm::<V>::from_images(images)
                    .map_err(|_| fail(line_no, ParseErrorKind::NotABijection))?;
                let (a, f, b, g) = (nums[0], nums[1], nums[2], nums[3]);
                if f >= V || g >= V {
                    return Err(fail(
                        line_no,
                        ParseErrorKind::InvalidGluing(GluingError::FacetOutOfRange(
                            f.max(g) as u8,
                        )),
                    ));
                }
                t.add_gluing(Gluing {
                    from: FacetSlot { simplex: a, facet: f as u8 },
                    to: FacetSlot { simplex: b, facet: g as u8 },
                    map,
                })
                .map_err(|e| fail(line_no, ParseErrorKind::InvalidGluing(e)))?;
            }
            _ => {
                return Err(fail(line_no, ParseErrorKind::UnexpectedRecord(line.into())));
            }
        }
    }
    match (saw_header, tri) {
        (false, _) => Err(fail(1, ParseErrorKind::BadHeader { expected: header })),
        (true, None) => Err(fail(1, ParseErrorKind::MissingCount)),
        (true, Some(t)) => Ok(t),
    }
}

fn write_generic<const V: usize>(t: &Triangulation<V>, header: &str) -> String {
    use fmt::Write;
    let mut out = String::new();
    writeln!(out, "{header} 1").unwrap();
    writeln!(out, "n {}", t.num_simplices()).unwrap();
    for g in t.gluings() {
        write!(
            out,
            "g {} {} {} {} :",
            g.from.simplex, g.from.facet, g.to.simplex, g.to.facet
        )
        .unwrap();
        for img in g.map.images() {
            write!(out, " {img}").unwrap();
        }
        writeln!(out).unwrap();
    }
    out
}

pub fn parse_tri4(text: &str) -> Result<Triangulation4, ParseError> {
    parse_generic::<5>(text, "tri4")
}

pub fn parse_tri3(text: &str) -> Result<Triangulation3, ParseError> {
    parse_generic::<4>(text, "tri3")
}

pub fn write_tri4(t: &Triangulation4) -> String {
    write_generic(t, "tri4")
}

pub fn write_tri3(t: &Triangulation3) -> String {
    write_generic(t, "tri3")
}

/// A triangulation of either supported dimension, dispatched on the header.
#[derive(Clone, Debug)]
pub enum AnyTriangulation {
    Dim3(Triangulation3),
    Dim4(Triangulation4),
}

impl AnyTriangulation {
    pub fn dimension(&self) -> usize {
        match self {
            AnyTriangulation::Dim3(_) => 3,
            AnyTriangulation::Dim4(_) => 4,
        }
    }
}

pub fn parse_any(text: &str) -> Result<AnyTriangulation, ParseError> {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .unwrap_or("");
    if first.starts_with("tri3") {
        parse_tri3(text).map(AnyTriangulation::Dim3)
    } else {
        parse_tri4(text).map(AnyTriangulation::Dim4)
    }
}
