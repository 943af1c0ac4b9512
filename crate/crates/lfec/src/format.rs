//! Line-oriented text formats: `.pg` plane graphs and `.col` colorings.
//!
//! Both formats are whitespace separated, one record per line, and `#`
//! starts a comment that runs to the end of the line.
//!
//! ```text
//! pg 3 3
//! e 0 0 1
//! e 1 2 3
//! e 2 4 5
//! v 0 0,5
//! v 1 1,2
//! v 2 3,4
//! ```
//!
//! A vertex line lists the full cyclic rotation of its darts. Serialization
//! writes edges and vertices in id order and starts every rotation at its
//! least dart; parsing that output and serializing again is the identity.

use std::fmt::{self, Write as _};

use lfec_core::color::MAX_COLOR;
use lfec_core::embed::{Dart, EmbedError, PlaneGraph, RotationSpec};
use lfec_core::facial::Coloring;
use lfec_core::Color;

/// A parse error at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("expected header `{0}`")]
    MissingHeader(&'static str),
    #[error("duplicate header")]
    DuplicateHeader,
    #[error("unknown record `{0}`")]
    UnknownRecord(String),
    #[error("expected {0}")]
    Missing(&'static str),
    #[error("unexpected field `{0}`")]
    Trailing(String),
    #[error("`{0}` is not a non-negative integer")]
    BadNumber(String),
    #[error("{what} {id} is out of range 0..{count}")]
    OutOfRange { what: &'static str, id: usize, count: usize },
    #[error("{what} {id} is defined twice")]
    Redefined { what: &'static str, id: usize },
    #[error("{what} {id} is never defined")]
    Undefined { what: &'static str, id: usize },
    #[error("dart {0} is referenced twice")]
    DartTwice(usize),
    #[error("dart {0} is in no vertex rotation")]
    Unplaced(usize),
    #[error("color {color} is outside 1..={k}")]
    BadColor { color: usize, k: usize },
    #[error("palette size {0} is above {max}", max = MAX_COLOR)]
    PaletteTooLarge(usize),
    #[error(transparent)]
    Embed(EmbedError),
}

#[derive(Clone, Copy)]
struct Token<'a> {
    column: usize,
    text: &'a str,
}

struct Record<'a> {
    line: usize,
    tokens: Vec<Token<'a>>,
    next: usize,
}

impl<'a> Record<'a> {
    fn err(&self, column: usize, kind: ParseErrorKind) -> ParseError {
        ParseError { line: self.line, column, kind }
    }

    fn tag(&self) -> Token<'a> {
        self.tokens[0]
    }

    /// Column just past the last token, for errors about missing fields.
    fn end(&self) -> usize {
        let t = self.tokens[self.tokens.len() - 1];
        t.column + t.text.chars().count()
    }

    fn token(&mut self, what: &'static str) -> Result<Token<'a>, ParseError> {
        let t = self
            .tokens
            .get(self.next)
            .copied()
            .ok_or_else(|| self.err(self.end() + 1, ParseErrorKind::Missing(what)))?;
        self.next += 1;
        Ok(t)
    }

    fn number(&mut self, what: &'static str) -> Result<(usize, usize), ParseError> {
        let t = self.token(what)?;
        let n = parse_usize(t.text).ok_or_else(|| self.err(t.column, ParseErrorKind::BadNumber(t.text.to_string())))?;
        Ok((n, t.column))
    }

    fn optional(&mut self) -> Option<Token<'a>> {
        let t = self.tokens.get(self.next).copied();
        self.next += t.is_some() as usize;
        t
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.tokens.get(self.next) {
            Some(t) => Err(self.err(t.column, ParseErrorKind::Trailing(t.text.to_string()))),
            None => Ok(()),
        }
    }
}

fn parse_usize(s: &str) -> Option<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

fn records(text: &str) -> impl Iterator<Item = Record<'_>> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (column, (at, ch)) in body.char_indices().enumerate() {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some((at, column + 1)),
                (true, Some((s, c))) => {
                    tokens.push(Token { column: c, text: &body[s..at] });
                    start = None;
                }
                _ => {}
            }
        }
        if let Some((s, c)) = start {
            tokens.push(Token { column: c, text: &body[s..] });
        }
        (!tokens.is_empty()).then_some(Record { line: i + 1, tokens, next: 1 })
    })
}

fn check_range(
    r: &Record,
    (id, column): (usize, usize),
    what: &'static str,
    count: usize,
) -> Result<usize, ParseError> {
    if id >= count {
        return Err(r.err(column, ParseErrorKind::OutOfRange { what, id, count }));
    }
    Ok(id)
}

/// Where a record was first defined, for errors that surface late.
#[derive(Clone, Copy)]
struct Pos {
    line: usize,
    column: usize,
}

impl Pos {
    fn err(self, kind: ParseErrorKind) -> ParseError {
        ParseError { line: self.line, column: self.column, kind }
    }
}

/// Parses a `.pg` plane graph.
pub fn parse_pg(text: &str) -> Result<PlaneGraph, ParseError> {
    let mut records = records(text);
    let mut head = records.next().ok_or(ParseError {
        line: 1,
        column: 1,
        kind: ParseErrorKind::MissingHeader("pg <vertices> <edges>"),
    })?;
    if head.tag().text != "pg" {
        return Err(head.err(head.tag().column, ParseErrorKind::MissingHeader("pg <vertices> <edges>")));
    }
    let header = Pos { line: head.line, column: head.tag().column };
    let (n, _) = head.number("vertex count")?;
    let (m, _) = head.number("edge count")?;
    head.finish()?;

    let darts = 2 * m;
    let mut edges: Vec<Option<[Dart; 2]>> = vec![None; m];
    let mut rotations: Vec<Option<Vec<Dart>>> = vec![None; n];
    let mut dart_edge: Vec<Option<Pos>> = vec![None; darts];
    let mut dart_vertex = vec![false; darts];
    for mut r in records {
        let tag = r.tag();
        match tag.text {
            "pg" => return Err(r.err(tag.column, ParseErrorKind::DuplicateHeader)),
            "e" => {
                let id = r.number("edge id")?;
                let e = check_range(&r, id, "edge", m)?;
                if edges[e].is_some() {
                    return Err(r.err(id.1, ParseErrorKind::Redefined { what: "edge", id: e }));
                }
                let mut pair = [Dart(0); 2];
                for slot in &mut pair {
                    let (d, column) = r.number("dart")?;
                    let d = check_range(&r, (d, column), "dart", darts)?;
                    if dart_edge[d].is_some() {
                        return Err(r.err(column, ParseErrorKind::DartTwice(d)));
                    }
                    dart_edge[d] = Some(Pos { line: r.line, column });
                    *slot = Dart(d);
                }
                r.finish()?;
                edges[e] = Some(pair);
            }
            "v" => {
                let id = r.number("vertex id")?;
                let v = check_range(&r, id, "vertex", n)?;
                if rotations[v].is_some() {
                    return Err(r.err(id.1, ParseErrorKind::Redefined { what: "vertex", id: v }));
                }
                let mut rot = Vec::new();
                if let Some(t) = r.optional() {
                    let mut offset = 0;
                    for part in t.text.split(',') {
                        let column = t.column + offset;
                        offset += part.chars().count() + 1;
                        let d = parse_usize(part)
                            .ok_or_else(|| r.err(column, ParseErrorKind::BadNumber(part.to_string())))?;
                        let d = check_range(&r, (d, column), "dart", darts)?;
                        if dart_vertex[d] {
                            return Err(r.err(column, ParseErrorKind::DartTwice(d)));
                        }
                        dart_vertex[d] = true;
                        rot.push(Dart(d));
                    }
                }
                r.finish()?;
                rotations[v] = Some(rot);
            }
            other => return Err(r.err(tag.column, ParseErrorKind::UnknownRecord(other.to_string()))),
        }
    }

    let edges = collect(edges, "edge", header)?;
    let rotations = collect(rotations, "vertex", header)?;
    for d in 0..darts {
        // every dart is declared once all edges are present
        let pos = dart_edge[d].expect("all edges defined");
        if !dart_vertex[d] {
            return Err(pos.err(ParseErrorKind::Unplaced(d)));
        }
    }
    PlaneGraph::from_rotation(RotationSpec { edges, rotations }).map_err(|e| header.err(ParseErrorKind::Embed(e)))
}

fn collect<T>(items: Vec<Option<T>>, what: &'static str, header: Pos) -> Result<Vec<T>, ParseError> {
    items
        .into_iter()
        .enumerate()
        .map(|(id, x)| x.ok_or_else(|| header.err(ParseErrorKind::Undefined { what, id })))
        .collect()
}

/// Writes `g` in canonical `.pg` form.
pub fn serialize_pg(g: &PlaneGraph) -> String {
    let mut out = String::new();
    writeln!(out, "pg {} {}", g.num_vertices(), g.num_edges()).unwrap();
    for e in g.edges() {
        let [a, b] = g.edge_darts(e);
        writeln!(out, "e {} {} {}", e.0, a.0, b.0).unwrap();
    }
    for v in g.vertices() {
        let rot = g.rotation(v);
        write!(out, "v {}", v.0).unwrap();
        if let Some(start) = (0..rot.len()).min_by_key(|&i| rot[i]) {
            let darts: Vec<String> = (0..rot.len()).map(|i| rot[(start + i) % rot.len()].0.to_string()).collect();
            write!(out, " {}", darts.join(",")).unwrap();
        }
        out.push('\n');
    }
    out
}

/// Parses a `.col` coloring of a graph with `edges` edges. Edges without a
/// `c` line stay uncolored.
pub fn parse_col(text: &str, edges: usize) -> Result<Coloring, ParseError> {
    let mut k: Option<(usize, Pos)> = None;
    let mut colors: Vec<Option<Color>> = vec![None; edges];
    let mut placed: Vec<(usize, Pos)> = Vec::new();
    let mut last_line = 0;
    for mut r in records(text) {
        last_line = r.line;
        let tag = r.tag();
        match tag.text {
            "k" => {
                if k.is_some() {
                    return Err(r.err(tag.column, ParseErrorKind::DuplicateHeader));
                }
                let (size, column) = r.number("palette size")?;
                if size > MAX_COLOR as usize {
                    return Err(r.err(column, ParseErrorKind::PaletteTooLarge(size)));
                }
                r.finish()?;
                k = Some((size, Pos { line: r.line, column }));
            }
            "c" => {
                let id = r.number("edge id")?;
                let e = check_range(&r, id, "edge", edges)?;
                if colors[e].is_some() {
                    return Err(r.err(id.1, ParseErrorKind::Redefined { what: "edge", id: e }));
                }
                let (color, column) = r.number("color")?;
                r.finish()?;
                colors[e] = Some(color.min(u32::MAX as usize) as Color);
                placed.push((color, Pos { line: r.line, column }));
            }
            other => return Err(r.err(tag.column, ParseErrorKind::UnknownRecord(other.to_string()))),
        }
    }
    let Some((k, _)) = k else {
        return Err(ParseError {
            line: last_line + 1,
            column: 1,
            kind: ParseErrorKind::MissingHeader("k <palette size>"),
        });
    };
    for (color, pos) in placed {
        if color == 0 || color > k {
            return Err(pos.err(ParseErrorKind::BadColor { color, k }));
        }
    }
    Ok(Coloring { k, colors })
}

/// Writes a coloring as `k` followed by one `c` line per colored edge.
pub fn serialize_col(phi: &Coloring) -> String {
    let mut out = format!("k {}\n", phi.k);
    for (e, c) in phi.colors.iter().enumerate() {
        if let Some(c) = c {
            writeln!(out, "c {e} {c}").unwrap();
        }
    }
    out
}

/// Displays a `.pg` or `.col` error together with the file it came from.
pub struct InFile<'a>(pub &'a str, pub &'a ParseError);

impl fmt::Display for InFile<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let InFile(path, e) = self;
        write!(f, "{path}:{}:{}: {}", e.line, e.column, e.kind)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use lfec_core::generate::{cycle, dodecahedron, random_planar};

    const C3: &str = "pg 3 3\ne 0 0 1\ne 1 2 3\ne 2 4 5\nv 0 0,5\nv 1 1,2\nv 2 3,4\n";

    fn kind(text: &str) -> (usize, usize, ParseErrorKind) {
        let e = parse_pg(text).unwrap_err();
        (e.line, e.column, e.kind)
    }

    #[test]
    fn c3_round_trip() {
        let g = parse_pg(C3).unwrap();
        assert_eq!((g.num_vertices(), g.num_edges(), g.num_faces()), (3, 3, 2));
        assert_eq!(serialize_pg(&g), C3);
        let generated = serialize_pg(&cycle(3).unwrap());
        assert_eq!(serialize_pg(&parse_pg(&generated).unwrap()), generated);
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let noisy =
            "# a triangle\n\npg 3 3   # header\n  e 0 0 1\ne 1 2 3\n\ne 2\t4 5\nv 2 4,3\nv 1 1,2 # rotation\nv 0 0,5\n";
        assert_eq!(serialize_pg(&parse_pg(noisy).unwrap()), C3);
    }

    #[test]
    fn rotations_start_at_their_least_dart() {
        let shifted = C3.replace("v 0 0,5", "v 0 5,0");
        assert_eq!(serialize_pg(&parse_pg(&shifted).unwrap()), C3);
    }

    #[test]
    fn dart_referenced_twice() {
        let text = C3.replace("v 1 1,2", "v 1 1,0");
        assert_eq!(kind(&text), (6, 7, ParseErrorKind::DartTwice(0)));
        let text = C3.replace("e 1 2 3", "e 1 2 1");
        assert_eq!(kind(&text), (3, 7, ParseErrorKind::DartTwice(1)));
    }

    #[test]
    fn positions_of_other_errors() {
        assert_eq!(kind(""), (1, 1, ParseErrorKind::MissingHeader("pg <vertices> <edges>")));
        assert_eq!(kind("pg 3 x"), (1, 6, ParseErrorKind::BadNumber("x".into())));
        assert_eq!(kind("pg 3"), (1, 6, ParseErrorKind::Missing("edge count")));
        assert_eq!(
            kind(&C3.replace("e 2 4 5", "e 3 4 5")),
            (4, 3, ParseErrorKind::OutOfRange { what: "edge", id: 3, count: 3 })
        );
        assert_eq!(kind(&C3.replace("e 2 4 5", "x 2 4 5")), (4, 1, ParseErrorKind::UnknownRecord("x".into())));
        assert_eq!(kind(&C3.replace("e 2 4 5", "e 2 4 5 6")), (4, 9, ParseErrorKind::Trailing("6".into())));
        assert_eq!(kind(&C3.replace("v 2 3,4", "v 2 3")), (4, 5, ParseErrorKind::Unplaced(4)));
        assert_eq!(kind(&C3.replace("v 2 3,4\n", "")), (1, 1, ParseErrorKind::Undefined { what: "vertex", id: 2 }));
        assert_eq!(kind(&C3.replace("e 0 0 1", "e 1 0 1")), (3, 3, ParseErrorKind::Redefined { what: "edge", id: 1 }));
        let torus = "pg 1 2\ne 0 0 1\ne 1 2 3\nv 0 0,2,1,3\n";
        assert!(matches!(kind(torus), (1, 1, ParseErrorKind::Embed(EmbedError::NotPlanar { .. }))));
    }

    #[test]
    fn isolated_vertices_round_trip() {
        let text = "pg 2 0\nv 0\nv 1\n";
        let g = parse_pg(text).unwrap();
        assert_eq!(g.num_vertices(), 2);
        assert_eq!(serialize_pg(&g), text);
    }

    #[test]
    fn generated_graphs_round_trip() {
        for g in [dodecahedron().unwrap(), random_planar(30, 7).unwrap(), random_planar(12, 1).unwrap()] {
            let text = serialize_pg(&g);
            let back = parse_pg(&text).unwrap();
            assert_eq!(serialize_pg(&back), text);
            assert_eq!(back.num_faces(), g.num_faces());
        }
    }

    #[test]
    fn col_round_trip_and_errors() {
        let text = "k 3\nc 0 1\nc 1 2\nc 2 3\n";
        let phi = parse_col(text, 3).unwrap();
        assert_eq!(phi, Coloring::total(3, &[1, 2, 3]));
        assert_eq!(serialize_col(&phi), text);

        let partial = parse_col("# two of three\nc 2 1\nk 7\n", 3).unwrap();
        assert_eq!(partial.colors, vec![None, None, Some(1)]);
        assert_eq!(serialize_col(&partial), "k 7\nc 2 1\n");

        let err = |t: &str| {
            let e = parse_col(t, 3).unwrap_err();
            (e.line, e.column, e.kind)
        };
        assert_eq!(err("c 0 1\n"), (2, 1, ParseErrorKind::MissingHeader("k <palette size>")));
        assert_eq!(err("k 3\nc 0 4\n"), (2, 5, ParseErrorKind::BadColor { color: 4, k: 3 }));
        assert_eq!(err("k 3\nc 0 0\n"), (2, 5, ParseErrorKind::BadColor { color: 0, k: 3 }));
        assert_eq!(err("k 3\nc 3 1\n"), (2, 3, ParseErrorKind::OutOfRange { what: "edge", id: 3, count: 3 }));
        assert_eq!(err("k 3\nc 0 1\nc 0 2\n"), (3, 3, ParseErrorKind::Redefined { what: "edge", id: 0 }));
        assert_eq!(err("k 64\n"), (1, 3, ParseErrorKind::PaletteTooLarge(64)));
    }
}
