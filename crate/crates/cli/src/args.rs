//! Parsers for flag values.

use std::path::PathBuf;

use genusmap_core::boundary::{make_pattern, HoleMap, PatternKind};
use genusmap_core::format::parse_hole_map;
use genusmap_core::FaceDegreeSequence;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at position {position}: {message}")]
pub struct ParseError {
    /// Byte offset of the offending token.
    pub position: usize,
    pub message: String,
}

impl ParseError {
    fn new(position: usize, message: impl Into<String>) -> Self {
        Self {
            position,
            message: message.into(),
        }
    }
}

/// Parses `j:count[,j:count]*` with `j ≥ 1`, `count ≥ 0` and no repeated `j`.
pub fn parse_face_spec(text: &str) -> Result<FaceDegreeSequence, ParseError> {
    if text.trim().is_empty() {
        return Err(ParseError::new(0, "empty face specification"));
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut pos = 0;
    for item in text.split(',') {
        let Some((j, c)) = item.split_once(':') else {
            return Err(ParseError::new(
                pos,
                format!("expected j:count, found {item:?}"),
            ));
        };
        let j_at = pos + (j.len() - j.trim_start().len());
        let j: usize = j
            .trim()
            .parse()
            .map_err(|_| ParseError::new(j_at, format!("bad half-degree {:?}", j.trim())))?;
        if j == 0 {
            return Err(ParseError::new(j_at, "half-degree must be at least 1"));
        }
        if pairs.iter().any(|&(k, _)| k == j) {
            return Err(ParseError::new(
                j_at,
                format!("half-degree {j} given twice"),
            ));
        }
        let c_at = pos + item.find(':').unwrap() + 1;
        let c: usize = c
            .trim()
            .parse()
            .map_err(|_| ParseError::new(c_at, format!("bad count {:?}", c.trim())))?;
        pairs.push((j, c));
        pos += item.len() + 1;
    }
    Ok(FaceDegreeSequence::from_pairs(pairs))
}

/// A comma-separated list of positive integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositiveList(pub Vec<usize>);

pub fn parse_positive_list(text: &str) -> Result<PositiveList, ParseError> {
    let mut out = Vec::new();
    let mut pos = 0;
    for item in text.split(',') {
        match item.trim().parse::<usize>() {
            Ok(v) if v > 0 => out.push(v),
            _ => {
                return Err(ParseError::new(
                    pos,
                    format!("expected a positive integer, found {item:?}"),
                ))
            }
        }
        pos += item.len() + 1;
    }
    Ok(PositiveList(out))
}

/// A pattern given on the command line.
#[derive(Clone, Debug, PartialEq)]
pub enum PatternArg {
    /// `m1:j`, `m2:j` or `trivial`.
    Builtin(Option<(PatternKind, usize)>),
    File(PathBuf),
}

impl PatternArg {
    pub fn load(&self) -> anyhow::Result<HoleMap> {
        Ok(match self {
            PatternArg::Builtin(None) => HoleMap::trivial(),
            PatternArg::Builtin(Some((kind, j))) => make_pattern(*kind, *j),
            PatternArg::File(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| anyhow::anyhow!("reading {}: {e}", path.display()))?;
                parse_hole_map(&text).map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))?
            }
        })
    }

    pub fn label(&self) -> String {
        match self {
            PatternArg::Builtin(None) => "trivial".into(),
            PatternArg::Builtin(Some((PatternKind::Single, j))) => format!("m1:{j}"),
            PatternArg::Builtin(Some((PatternKind::Double, j))) => format!("m2:{j}"),
            PatternArg::File(p) => p.display().to_string(),
        }
    }
}

/// `m<k>:...`, which is never meant as a file name.
fn looks_builtin(text: &str) -> bool {
    text.strip_prefix('m')
        .and_then(|r| r.split_once(':'))
        .is_some_and(|(k, _)| !k.is_empty() && k.bytes().all(|b| b.is_ascii_digit()))
}

pub fn parse_pattern(text: &str) -> Result<PatternArg, ParseError> {
    if text == "trivial" {
        return Ok(PatternArg::Builtin(None));
    }
    let kind = if text.starts_with("m1:") {
        Some(PatternKind::Single)
    } else if text.starts_with("m2:") {
        Some(PatternKind::Double)
    } else {
        None
    };
    match kind {
        Some(kind) => match text[3..].parse::<usize>() {
            Ok(j) if j > 0 => Ok(PatternArg::Builtin(Some((kind, j)))),
            _ => Err(ParseError::new(
                3,
                format!("bad pattern index {:?}", &text[3..]),
            )),
        },
        None if looks_builtin(text) => Err(ParseError::new(
            0,
            format!("unknown pattern family in {text:?}"),
        )),
        None => Ok(PatternArg::File(PathBuf::from(text))),
    }
}
