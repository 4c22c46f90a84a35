//! Line-oriented text format for maps, maps with a hole, and polygon maps.
//!
//! ```text
//! map v1
//! darts 4
//! faces (1 2 3 4)
//! alpha (1 2)(3 4)
//! root 1
//! ```
//!
//! Darts are 1-based. Faces are listed from their smallest dart, ordered by
//! that dart. A map with a hole adds `hole <k>` (1-based index into the faces
//! line); a polygon map adds `marks <d1> <d2> ...`.

use thiserror::Error;

use crate::boundary::{validate_hole_map, BoundaryError, HoleMap, PolygonMap};
use crate::map::{build_map, MapError, RootedMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Boundary(#[from] BoundaryError),
}

/// Contents of a parsed file; the optional trailing line decides the kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapFile {
    Map(RootedMap),
    Hole(HoleMap),
    Polygon(PolygonMap),
}

fn cycles_text<I: IntoIterator<Item = Vec<usize>>>(cycles: I) -> String {
    let mut s = String::new();
    for c in cycles {
        s.push('(');
        let labels: Vec<String> = c.iter().map(|d| (d + 1).to_string()).collect();
        s.push_str(&labels.join(" "));
        s.push(')');
    }
    s
}

pub fn write_map(m: &RootedMap) -> String {
    let edges = (0..m.dart_count())
        .filter(|&d| d < m.alpha(d))
        .map(|d| vec![d, m.alpha(d)]);
    format!(
        "map v1\ndarts {}\nfaces {}\nalpha {}\nroot {}\n",
        m.dart_count(),
        cycles_text(m.faces()),
        cycles_text(edges),
        m.root() + 1
    )
}

pub fn write_hole_map(h: &HoleMap) -> String {
    format!("{}hole {}\n", write_map(h.map()), h.hole_face_index() + 1)
}

pub fn write_polygon_map(p: &PolygonMap) -> String {
    let marks: Vec<String> = p.marks().iter().map(|d| (d + 1).to_string()).collect();
    format!("{}marks {}\n", write_map(p.map()), marks.join(" "))
}

struct Lines<'a> {
    lines: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            lines: text
                .lines()
                .enumerate()
                .map(|(i, l)| (i + 1, l.trim_end()))
                .filter(|(_, l)| !l.is_empty())
                .collect(),
            pos: 0,
        }
    }

    fn err(line: usize, message: impl Into<String>) -> FormatError {
        FormatError::Syntax {
            line,
            message: message.into(),
        }
    }

    /// Next line, which must start with `key `; returns the rest.
    fn field(&mut self, key: &str) -> Result<(usize, &'a str), FormatError> {
        let last = self.lines.last().map_or(1, |l| l.0);
        let &(no, text) = self
            .lines
            .get(self.pos)
            .ok_or_else(|| Self::err(last, format!("missing `{key}` line")))?;
        self.pos += 1;
        let rest = text
            .strip_prefix(key)
            .and_then(|r| r.strip_prefix(' '))
            .ok_or_else(|| Self::err(no, format!("expected `{key} ...`")))?;
        Ok((no, rest))
    }

    fn optional(&mut self) -> Option<(usize, &'a str)> {
        let l = self.lines.get(self.pos).copied();
        self.pos += l.is_some() as usize;
        l
    }
}

fn number(line: usize, s: &str) -> Result<usize, FormatError> {
    s.parse()
        .map_err(|_| Lines::err(line, format!("`{s}` is not a nonnegative integer")))
}

fn parse_cycles(line: usize, s: &str) -> Result<Vec<Vec<usize>>, FormatError> {
    let mut out = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| Lines::err(line, "expected `(`"))?;
        let close = body
            .find(')')
            .ok_or_else(|| Lines::err(line, "unclosed `(`"))?;
        let cycle = body[..close]
            .split_whitespace()
            .map(|t| number(line, t))
            .collect::<Result<Vec<_>, _>>()?;
        if cycle.is_empty() {
            return Err(Lines::err(line, "empty cycle"));
        }
        out.push(cycle);
        rest = body[close + 1..].trim_start();
    }
    Ok(out)
}

pub fn parse_file(text: &str) -> Result<MapFile, FormatError> {
    let mut lines = Lines::new(text);
    let first = lines
        .optional()
        .ok_or_else(|| Lines::err(1, "empty input"))?;
    if first.1 != "map v1" {
        return Err(Lines::err(first.0, "expected header `map v1`"));
    }
    let (dl, darts) = lines.field("darts")?;
    let darts = number(dl, darts)?;
    let (fl, faces) = lines.field("faces")?;
    let faces = parse_cycles(fl, faces)?;
    let (al, alpha) = lines.field("alpha")?;
    let pairs = parse_cycles(al, alpha)?
        .into_iter()
        .map(|c| match c[..] {
            [a, b] => Ok((a, b)),
            _ => Err(Lines::err(al, "edge cycles must have two darts")),
        })
        .collect::<Result<Vec<_>, _>>()?;
    let (rl, root) = lines.field("root")?;
    let root = number(rl, root)?;
    let listed: usize = faces.iter().map(Vec::len).sum();
    if listed != darts {
        return Err(Lines::err(
            fl,
            format!("faces list {listed} darts, header says {darts}"),
        ));
    }
    let map = build_map(&faces, &pairs, root)?;
    let out = match lines.optional() {
        None => MapFile::Map(map),
        Some((no, text)) => {
            if let Some(k) = text.strip_prefix("hole ") {
                let k = number(no, k)?;
                let faces = map.faces();
                let face = k
                    .checked_sub(1)
                    .and_then(|i| faces.get(i))
                    .ok_or_else(|| Lines::err(no, format!("no face {k}")))?;
                let d = face[0];
                MapFile::Hole(validate_hole_map(map, d)?)
            } else if let Some(ms) = text.strip_prefix("marks ") {
                let marks = ms
                    .split_whitespace()
                    .map(|t| {
                        let d = number(no, t)?;
                        d.checked_sub(1)
                            .filter(|&x| x < map.dart_count())
                            .ok_or(FormatError::Map(MapError::DartOutOfRange(d)))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                MapFile::Polygon(PolygonMap::new(map, marks)?)
            } else {
                return Err(Lines::err(no, "expected `hole` or `marks`"));
            }
        }
    };
    if let Some((no, _)) = lines.optional() {
        return Err(Lines::err(no, "trailing content"));
    }
    Ok(out)
}

/// Parses a plain map; hole or mark annotations are dropped.
pub fn parse_map(text: &str) -> Result<RootedMap, FormatError> {
    Ok(match parse_file(text)? {
        MapFile::Map(m) => m,
        MapFile::Hole(h) => h.into_map(),
        MapFile::Polygon(p) => p.map().clone(),
    })
}

pub fn parse_hole_map(text: &str) -> Result<HoleMap, FormatError> {
    match parse_file(text)? {
        MapFile::Hole(h) => Ok(h),
        _ => Err(Lines::err(6, "missing `hole` line")),
    }
}
