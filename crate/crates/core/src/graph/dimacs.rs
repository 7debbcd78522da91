//! DIMACS ASCII clique format (`p edge n m` / `e u v`, 1-indexed).

use std::io::{BufRead, Write};

use thiserror::Error;

use super::{Builder, Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DimacsErrorKind {
    #[error("malformed problem line `{0}`")]
    MalformedProblem(String),
    #[error("duplicate problem line")]
    DuplicateProblem,
    #[error("edge line before the problem line")]
    EdgeBeforeProblem,
    #[error("malformed edge line `{0}`")]
    MalformedEdge(String),
    #[error("endpoint {0} outside [1, {1}]")]
    EndpointOutOfRange(usize, usize),
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("unrecognised line `{0}`")]
    UnknownLine(String),
    #[error("no problem line")]
    MissingProblem,
}

fn err(line: usize, kind: DimacsErrorKind) -> GraphError {
    GraphError::Dimacs { line, kind }
}

impl Graph {
    /// Parses a DIMACS ASCII graph. The edge count on the problem line is
    /// not checked against the edge lines; repeated edges are idempotent.
    pub fn from_dimacs<R: BufRead>(reader: R) -> Result<Self, GraphError> {
        let mut builder: Option<(Builder, usize)> = None;
        let mut last_line = 0;
        for (idx, line) in reader.lines().enumerate() {
            let lineno = idx + 1;
            last_line = lineno;
            let line = line?;
            let trimmed = line.trim();
            let mut tokens = trimmed.split_whitespace();
            let Some(tag) = tokens.next() else { continue };
            match tag {
                _ if tag.starts_with('c') => {}
                "p" => {
                    if builder.is_some() {
                        return Err(err(lineno, DimacsErrorKind::DuplicateProblem));
                    }
                    let malformed = || err(lineno, DimacsErrorKind::MalformedProblem(trimmed.to_string()));
                    let format = tokens.next().ok_or_else(malformed)?;
                    if format != "edge" && format != "col" {
                        return Err(malformed());
                    }
                    let n: usize = tokens.next().and_then(|t| t.parse().ok()).ok_or_else(malformed)?;
                    let _m: usize = tokens.next().and_then(|t| t.parse().ok()).ok_or_else(malformed)?;
                    if tokens.next().is_some() {
                        return Err(malformed());
                    }
                    builder = Some((Builder::new(n), n));
                }
                "e" => {
                    let Some((b, n)) = builder.as_mut() else {
                        return Err(err(lineno, DimacsErrorKind::EdgeBeforeProblem));
                    };
                    let malformed = || err(lineno, DimacsErrorKind::MalformedEdge(trimmed.to_string()));
                    let u: usize = tokens.next().and_then(|t| t.parse().ok()).ok_or_else(malformed)?;
                    let v: usize = tokens.next().and_then(|t| t.parse().ok()).ok_or_else(malformed)?;
                    if tokens.next().is_some() {
                        return Err(malformed());
                    }
                    for x in [u, v] {
                        if x == 0 || x > *n {
                            return Err(err(lineno, DimacsErrorKind::EndpointOutOfRange(x, *n)));
                        }
                    }
                    if u == v {
                        return Err(err(lineno, DimacsErrorKind::SelfLoop(u)));
                    }
                    b.add_edge(u - 1, v - 1).expect("endpoints validated");
                }
                _ => return Err(err(lineno, DimacsErrorKind::UnknownLine(trimmed.to_string()))),
            }
        }
        builder
            .map(|(b, _)| b.finish())
            .ok_or_else(|| err(last_line, DimacsErrorKind::MissingProblem))
    }

    /// Parses DIMACS text held in memory.
    pub fn from_dimacs_str(text: &str) -> Result<Self, GraphError> {
        Self::from_dimacs(text.as_bytes())
    }

    /// Writes `p edge n m` followed by one `e u v` line per edge, `u < v`,
    /// 1-indexed. `comments` become leading `c` lines.
    pub fn write_dimacs<W: Write>(&self, mut out: W, comments: &[&str]) -> std::io::Result<()> {
        for c in comments {
            writeln!(out, "c {c}")?;
        }
        writeln!(out, "p edge {} {}", self.order(), self.edge_count())?;
        for (u, v) in self.edges() {
            writeln!(out, "e {} {}", u + 1, v + 1)?;
        }
        out.flush()
    }

    pub fn to_dimacs_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_dimacs(&mut buf, &[]).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("DIMACS output is ASCII")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::c5;

    fn kind(text: &str) -> (usize, DimacsErrorKind) {
        match Graph::from_dimacs_str(text) {
            Err(GraphError::Dimacs { line, kind }) => (line, kind),
            other => panic!("expected a DIMACS error, got {other:?}"),
        }
    }

    #[test]
    fn parses_c5() {
        let text = "c five-cycle\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n";
        let g = Graph::from_dimacs_str(text).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.edge_count(), 5);
        assert_eq!(g, c5());
    }

    #[test]
    fn edgeless_and_duplicates() {
        let g = Graph::from_dimacs_str("p edge 3 0\n").unwrap();
        assert_eq!((g.order(), g.edge_count()), (3, 0));

        let g = Graph::from_dimacs_str("p edge 3 3\ne 1 2\ne 2 1\n\ne 1 2\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn diagnostics_carry_line_numbers() {
        assert_eq!(
            kind("p edge 2 1\ne 1 3\n"),
            (2, DimacsErrorKind::EndpointOutOfRange(3, 2))
        );
        assert_eq!(kind("c x\ne 1 2\n"), (2, DimacsErrorKind::EdgeBeforeProblem));
        assert_eq!(kind("p edge 3 1\ne 2 2\n"), (2, DimacsErrorKind::SelfLoop(2)));
        assert!(matches!(
            kind("p edge x 1\n"),
            (1, DimacsErrorKind::MalformedProblem(_))
        ));
        assert!(matches!(
            kind("p matrix 3 1\n"),
            (1, DimacsErrorKind::MalformedProblem(_))
        ));
        assert!(matches!(
            kind("p edge 3 1\ne 1\n"),
            (2, DimacsErrorKind::MalformedEdge(_))
        ));
        assert_eq!(kind("p edge 3 1\np edge 3 1\n"), (2, DimacsErrorKind::DuplicateProblem));
        assert_eq!(kind("c nothing\n").1, DimacsErrorKind::MissingProblem);
        assert!(matches!(
            kind("p edge 3 1\nx 1 2\n"),
            (2, DimacsErrorKind::UnknownLine(_))
        ));
        assert_eq!(
            kind("p edge 3 1\ne 0 1\n"),
            (2, DimacsErrorKind::EndpointOutOfRange(0, 3))
        );
    }

    #[test]
    fn writer_format() {
        let text = c5().to_dimacs_string();
        assert_eq!(text, "p edge 5 5\ne 1 2\ne 1 5\ne 2 3\ne 3 4\ne 4 5\n");
        assert_eq!(Graph::from_dimacs_str(&text).unwrap(), c5());
    }
}
