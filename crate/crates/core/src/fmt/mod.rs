//! Text instance formats and report serialization.
//!
//! All formats are line-oriented: one directive per line, `#` comments and
//! blank lines ignored, rationals written as `p/q` (or plain integers) so a
//! parse/emit round trip is exact. Decimal literals are accepted on input
//! and expanded exactly.
//!
//! ```text
//! graph 5                    # vertex count
//! weights 1 1 3/2 1 0.5      # optional, one rational per vertex
//! edge 0 1                   # endpoints with u < v
//!
//! disk 0 0 0 1               # disk <id> <x> <y> <r>
//!
//! triangle 0 0 0 4 0 0 4     # triangle <id> <x1> <y1> <x2> <y2> <x3> <y3>
//!
//! cycle 0 0 2 0 1 2          # audit input: exactly two such lines,
//! cycle 9 1 11 4 10 8        # each an odd closed polygon
//! ```

pub mod report;

use crate::geom::{Disk, Point, Representation};
use crate::graph::Graph;
use crate::hardness::Triangle;
use crate::rat::{format_rational, parse_rational, Rational};
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("expected `graph <n>` header before any other directive")]
    MissingGraphHeader,
    #[error("unknown directive `{0}`")]
    UnknownDirective(String),
    #[error("expected {expected} fields, got {got}")]
    FieldCount { expected: usize, got: usize },
    #[error("bad number: {0}")]
    BadNumber(String),
    #[error("edge ({u}, {v}) must satisfy u < v")]
    EdgeOrder { u: u32, v: u32 },
    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: u32, v: u32 },
    #[error("vertex {id} out of range for {n} vertices")]
    VertexOutOfRange { id: u64, n: usize },
    #[error("duplicate weights line")]
    DuplicateWeights,
    #[error("expected {expected} weights, got {got}")]
    WeightCount { expected: usize, got: usize },
    #[error("negative weight {0}")]
    NegativeWeight(String),
    #[error("duplicate id {0}")]
    DuplicateId(u64),
    #[error("ids are not dense: missing {0}")]
    MissingId(u64),
    #[error("radius must be positive, got {0}")]
    NonPositiveRadius(String),
    #[error("triangle corners are collinear")]
    DegenerateTriangle,
    #[error("expected exactly two `cycle` lines, got {0}")]
    CycleCount(usize),
    #[error("a cycle needs an odd number of points, at least 3; got {0}")]
    BadCycleLength(usize),
    #[error("file contains no directives")]
    Empty,
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

/// Content lines with their 1-based numbers; comments and blanks dropped.
fn directive_lines(text: &str) -> Vec<(usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let stripped = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            };
            let fields: Vec<&str> = stripped.split_whitespace().collect();
            if fields.is_empty() {
                None
            } else {
                Some((i + 1, fields))
            }
        })
        .collect()
}

fn parse_count(line: usize, token: &str) -> Result<u64, ParseError> {
    token
        .parse::<u64>()
        .map_err(|_| err(line, ParseErrorKind::BadNumber(token.to_string())))
}

fn rational_field(line: usize, token: &str) -> Result<Rational, ParseError> {
    parse_rational(token).map_err(|e| err(line, ParseErrorKind::BadNumber(e.to_string())))
}

// ---------------------------------------------------------------------------
// graphs
// ---------------------------------------------------------------------------

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let lines = directive_lines(text);
    let Some(((first_line, first), rest)) = lines.split_first().map(|(f, r)| ((f.0, &f.1), r))
    else {
        return Err(err(0, ParseErrorKind::Empty));
    };
    if first[0] != "graph" {
        return Err(err(first_line, ParseErrorKind::MissingGraphHeader));
    }
    if first.len() != 2 {
        return Err(err(
            first_line,
            ParseErrorKind::FieldCount {
                expected: 2,
                got: first.len(),
            },
        ));
    }
    let n = parse_count(first_line, first[1])? as usize;
    let mut g = Graph::new(n);
    let mut saw_weights = false;
    for (line, fields) in rest {
        let line = *line;
        match fields[0] {
            "graph" => {
                return Err(err(line, ParseErrorKind::UnknownDirective("graph".into())))
            }
            "weights" => {
                if saw_weights {
                    return Err(err(line, ParseErrorKind::DuplicateWeights));
                }
                saw_weights = true;
                if fields.len() != n + 1 {
                    return Err(err(
                        line,
                        ParseErrorKind::WeightCount {
                            expected: n,
                            got: fields.len() - 1,
                        },
                    ));
                }
                let mut weights = Vec::with_capacity(n);
                for tok in &fields[1..] {
                    let w = rational_field(line, tok)?;
                    if w < Rational::zero() {
                        return Err(err(line, ParseErrorKind::NegativeWeight(tok.to_string())));
                    }
                    weights.push(w);
                }
                g.set_weights(weights).expect("validated above");
            }
            "edge" => {
                if fields.len() != 3 {
                    return Err(err(
                        line,
                        ParseErrorKind::FieldCount {
                            expected: 3,
                            got: fields.len(),
                        },
                    ));
                }
                let u = parse_count(line, fields[1])?;
                let v = parse_count(line, fields[2])?;
                for id in [u, v] {
                    if id >= n as u64 {
                        return Err(err(line, ParseErrorKind::VertexOutOfRange { id, n }));
                    }
                }
                let (u, v) = (u as u32, v as u32);
                if u == v {
                    return Err(err(line, ParseErrorKind::SelfLoop(u)));
                }
                if u > v {
                    return Err(err(line, ParseErrorKind::EdgeOrder { u, v }));
                }
                if g.has_edge(u, v) {
                    return Err(err(line, ParseErrorKind::DuplicateEdge { u, v }));
                }
                g.add_edge(u, v);
            }
            other => {
                return Err(err(line, ParseErrorKind::UnknownDirective(other.into())))
            }
        }
    }
    Ok(g)
}

pub fn emit_graph(g: &Graph) -> String {
    let mut out = format!("graph {}\n", g.vertex_count());
    if let Some(weights) = g.weights() {
        out.push_str("weights");
        for w in weights {
            out.push(' ');
            out.push_str(&format_rational(w));
        }
        out.push('\n');
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("edge {u} {v}\n"));
    }
    out
}

// ---------------------------------------------------------------------------
// disks
// ---------------------------------------------------------------------------

pub fn parse_disks(text: &str) -> Result<Representation, ParseError> {
    let lines = directive_lines(text);
    if lines.is_empty() {
        return Err(err(0, ParseErrorKind::Empty));
    }
    let mut entries: Vec<(usize, u64, Disk)> = Vec::new();
    for (line, fields) in &lines {
        let line = *line;
        if fields[0] != "disk" {
            return Err(err(line, ParseErrorKind::UnknownDirective(fields[0].into())));
        }
        if fields.len() != 5 {
            return Err(err(
                line,
                ParseErrorKind::FieldCount {
                    expected: 5,
                    got: fields.len(),
                },
            ));
        }
        let id = parse_count(line, fields[1])?;
        if entries.iter().any(|(_, other, _)| *other == id) {
            return Err(err(line, ParseErrorKind::DuplicateId(id)));
        }
        let x = rational_field(line, fields[2])?;
        let y = rational_field(line, fields[3])?;
        let r = rational_field(line, fields[4])?;
        let disk = Disk::new(Point::new(x, y), r)
            .map_err(|e| err(line, ParseErrorKind::NonPositiveRadius(e.0)))?;
        entries.push((line, id, disk));
    }
    let n = entries.len() as u64;
    for want in 0..n {
        if !entries.iter().any(|(_, id, _)| *id == want) {
            let last = entries.last().unwrap().0;
            return Err(err(last, ParseErrorKind::MissingId(want)));
        }
    }
    entries.sort_by_key(|(_, id, _)| *id);
    Ok(Representation::new(entries.into_iter().map(|(_, _, d)| d).collect())
        .expect("non-empty checked above"))
}

pub fn emit_disks(rep: &Representation) -> String {
    let mut out = String::new();
    for (id, d) in rep.disks().iter().enumerate() {
        out.push_str(&format!(
            "disk {id} {} {} {}\n",
            format_rational(&d.center.x),
            format_rational(&d.center.y),
            format_rational(&d.radius),
        ));
    }
    out
}

// ---------------------------------------------------------------------------
// triangles
// ---------------------------------------------------------------------------

pub fn parse_triangles(text: &str) -> Result<Vec<Triangle>, ParseError> {
    let lines = directive_lines(text);
    if lines.is_empty() {
        return Err(err(0, ParseErrorKind::Empty));
    }
    let mut entries: Vec<(usize, u64, Triangle)> = Vec::new();
    for (line, fields) in &lines {
        let line = *line;
        if fields[0] != "triangle" {
            return Err(err(line, ParseErrorKind::UnknownDirective(fields[0].into())));
        }
        if fields.len() != 8 {
            return Err(err(
                line,
                ParseErrorKind::FieldCount {
                    expected: 8,
                    got: fields.len(),
                },
            ));
        }
        let id = parse_count(line, fields[1])?;
        if entries.iter().any(|(_, other, _)| *other == id) {
            return Err(err(line, ParseErrorKind::DuplicateId(id)));
        }
        let mut coords = Vec::with_capacity(6);
        for tok in &fields[2..] {
            coords.push(rational_field(line, tok)?);
        }
        let mut it = coords.into_iter();
        let mut next_point = || {
            let x = it.next().unwrap();
            let y = it.next().unwrap();
            Point::new(x, y)
        };
        let tri = Triangle::new(next_point(), next_point(), next_point())
            .map_err(|_| err(line, ParseErrorKind::DegenerateTriangle))?;
        entries.push((line, id, tri));
    }
    let n = entries.len() as u64;
    for want in 0..n {
        if !entries.iter().any(|(_, id, _)| *id == want) {
            let last = entries.last().unwrap().0;
            return Err(err(last, ParseErrorKind::MissingId(want)));
        }
    }
    entries.sort_by_key(|(_, id, _)| *id);
    Ok(entries.into_iter().map(|(_, _, t)| t).collect())
}

pub fn emit_triangles(triangles: &[&Triangle]) -> String {
    let mut out = String::new();
    for (id, t) in triangles.iter().enumerate() {
        let p = t.points();
        out.push_str(&format!(
            "triangle {id} {} {} {} {} {} {}\n",
            format_rational(&p[0].x),
            format_rational(&p[0].y),
            format_rational(&p[1].x),
            format_rational(&p[1].y),
            format_rational(&p[2].x),
            format_rational(&p[2].y),
        ));
    }
    out
}

// ---------------------------------------------------------------------------
// audit cycles
// ---------------------------------------------------------------------------

/// Two odd closed polygons for the parity audit.
pub fn parse_cycles(text: &str) -> Result<(Vec<Point>, Vec<Point>), ParseError> {
    let lines = directive_lines(text);
    if lines.is_empty() {
        return Err(err(0, ParseErrorKind::Empty));
    }
    let mut cycles: Vec<Vec<Point>> = Vec::new();
    for (line, fields) in &lines {
        let line = *line;
        if fields[0] != "cycle" {
            return Err(err(line, ParseErrorKind::UnknownDirective(fields[0].into())));
        }
        let coords = &fields[1..];
        if coords.len() % 2 != 0 {
            return Err(err(
                line,
                ParseErrorKind::FieldCount {
                    expected: coords.len() + 1,
                    got: coords.len(),
                },
            ));
        }
        let count = coords.len() / 2;
        if count < 3 || count % 2 == 0 {
            return Err(err(line, ParseErrorKind::BadCycleLength(count)));
        }
        let mut pts = Vec::with_capacity(count);
        for pair in coords.chunks(2) {
            pts.push(Point::new(
                rational_field(line, pair[0])?,
                rational_field(line, pair[1])?,
            ));
        }
        cycles.push(pts);
    }
    if cycles.len() != 2 {
        let last = lines.last().unwrap().0;
        return Err(err(last, ParseErrorKind::CycleCount(cycles.len())));
    }
    let second = cycles.pop().unwrap();
    let first = cycles.pop().unwrap();
    Ok((first, second))
}
