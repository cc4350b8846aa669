//! Text formats for the two entry points.
//!
//! Graph files: a header line `digraph <n> <m>` followed by `m` lines
//! `tail head` (1-based); the line order is the edge order and fixes the
//! element ordering for everything downstream.
//!
//! Matrix files: a header line `matrix <rows> <cols>` followed by `rows`
//! lines of whitespace-separated integers.

use std::fmt;

use rootpoly::arith::{Int, IntMatrix};
use rootpoly::digraph::Digraph;

/// Parse failure with a 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone)]
pub enum Input {
    Graph(Digraph),
    Matrix(IntMatrix),
}

fn fail<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

/// Lines with content, keeping original line numbers; `#` starts a comment.
fn content_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect()
}

pub fn parse_input(text: &str) -> Result<Input, ParseError> {
    let lines = content_lines(text);
    let Some(&(line_no, header)) = lines.first() else {
        return fail(1, "empty input");
    };
    let keyword = header.split_whitespace().next().unwrap_or("");
    match keyword {
        "digraph" => parse_digraph_lines(&lines).map(Input::Graph),
        "matrix" => parse_matrix_lines(&lines).map(Input::Matrix),
        other => fail(line_no, format!("expected 'digraph' or 'matrix' header, found '{other}'")),
    }
}

pub fn parse_digraph(text: &str) -> Result<Digraph, ParseError> {
    match parse_input(text)? {
        Input::Graph(g) => Ok(g),
        Input::Matrix(_) => fail(1, "expected a digraph file, found a matrix"),
    }
}

fn parse_digraph_lines(lines: &[(usize, &str)]) -> Result<Digraph, ParseError> {
    let (header_line, header) = lines[0];
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 {
        return fail(header_line, "header must be 'digraph <n> <m>'");
    }
    let n: usize = fields[1]
        .parse()
        .map_err(|_| ParseError {
            line: header_line,
            message: format!("invalid vertex count '{}'", fields[1]),
        })?;
    let m: usize = fields[2]
        .parse()
        .map_err(|_| ParseError {
            line: header_line,
            message: format!("invalid edge count '{}'", fields[2]),
        })?;
    let body = &lines[1..];
    if body.len() != m {
        return fail(
            header_line,
            format!("expected {m} edge lines, found {}", body.len()),
        );
    }
    let mut edges = Vec::with_capacity(m);
    for &(line_no, line) in body {
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return fail(line_no, "edge line must be '<tail> <head>'");
        }
        let tail: usize = fields[0].parse().map_err(|_| ParseError {
            line: line_no,
            message: format!("invalid tail '{}'", fields[0]),
        })?;
        let head: usize = fields[1].parse().map_err(|_| ParseError {
            line: line_no,
            message: format!("invalid head '{}'", fields[1]),
        })?;
        edges.push((tail, head));
    }
    Digraph::new(n, edges).map_err(|e| ParseError {
        line: header_line,
        message: e.to_string(),
    })
}

fn parse_matrix_lines(lines: &[(usize, &str)]) -> Result<IntMatrix, ParseError> {
    let (header_line, header) = lines[0];
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 {
        return fail(header_line, "header must be 'matrix <rows> <cols>'");
    }
    let rows: usize = fields[1].parse().map_err(|_| ParseError {
        line: header_line,
        message: format!("invalid row count '{}'", fields[1]),
    })?;
    let cols: usize = fields[2].parse().map_err(|_| ParseError {
        line: header_line,
        message: format!("invalid column count '{}'", fields[2]),
    })?;
    let body = &lines[1..];
    if body.len() != rows {
        return fail(
            header_line,
            format!("expected {rows} matrix rows, found {}", body.len()),
        );
    }
    let mut entries: Vec<Int> = Vec::with_capacity(rows * cols);
    for &(line_no, line) in body {
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != cols {
            return fail(line_no, format!("expected {cols} entries, found {}", fields.len()));
        }
        for field in fields {
            let value: Int = field.parse().map_err(|_| ParseError {
                line: line_no,
                message: format!("invalid integer '{field}'"),
            })?;
            entries.push(value);
        }
    }
    IntMatrix::new(rows, cols, entries).map_err(|e| ParseError {
        line: header_line,
        message: e.to_string(),
    })
}

/// Canonical text form of a digraph, inverse of [`parse_digraph`].
pub fn write_digraph(g: &Digraph) -> String {
    let mut out = format!("digraph {} {}\n", g.vertex_count(), g.edge_count());
    for &(tail, head) in g.edges() {
        out.push_str(&format!("{tail} {head}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_graph_and_roundtrips() {
        let text = "digraph 2 2\n1 2\n2 1\n";
        let g = parse_digraph(text).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edges(), &[(1, 2), (2, 1)]);
        assert_eq!(write_digraph(&g), text);
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "# corpus item\ndigraph 2 2\n\n1 2 # forward\n2 1\n";
        assert!(parse_digraph(text).is_ok());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_digraph("digraph 2 2\n1 2\nx 1\n").unwrap_err();
        assert_eq!(err.line, 3);
        let err = parse_digraph("digraph 2 3\n1 2\n2 1\n").unwrap_err();
        assert_eq!(err.line, 1);
        let err = parse_input("graph 2 2\n").unwrap_err();
        assert_eq!(err.line, 1);
    }

    #[test]
    fn parses_matrix() {
        let text = "matrix 2 3\n1 0 -1\n0 1 1\n";
        match parse_input(text).unwrap() {
            Input::Matrix(m) => {
                assert_eq!(m.rows(), 2);
                assert_eq!(m.cols(), 3);
            }
            Input::Graph(_) => panic!("expected matrix"),
        }
        let err = parse_input("matrix 2 2\n1 0\n1\n").unwrap_err();
        assert_eq!(err.line, 3);
    }
}
