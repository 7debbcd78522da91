//! Simple undirected graphs stored as one adjacency bitset per vertex.

mod dimacs;
mod random;
mod set;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use dimacs::DimacsErrorKind;
pub use random::{gen_random, gen_random_with};
pub use set::{Iter, VertexSet};

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("line {line}: {kind}")]
    Dimacs { line: usize, kind: DimacsErrorKind },
    #[error("edge ({0}, {1}) has an endpoint outside a graph of order {2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("edge density {0} is outside [0, 1]")]
    InvalidDensity(f64),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Which problem a solver run answers. Independent sets are found as
/// cliques of the complement graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProblemMode {
    MaxClique,
    MaxIndependentSet,
}

impl ProblemMode {
    pub fn name(self) -> &'static str {
        match self {
            ProblemMode::MaxClique => "mcp",
            ProblemMode::MaxIndependentSet => "mis",
        }
    }
}

impl fmt::Display for ProblemMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProblemMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "mcp" | "clique" => Ok(ProblemMode::MaxClique),
            "mis" | "independent-set" => Ok(ProblemMode::MaxIndependentSet),
            _ => Err(format!("unknown problem `{s}` (expected mcp or mis)")),
        }
    }
}

/// Immutable simple undirected graph.
///
/// Row `v` holds N(v): bit `u` is set iff `{u, v}` is an edge. Rows are
/// symmetric and never contain their own vertex.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    rows: Vec<VertexSet>,
    edge_count: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            rows: vec![VertexSet::new(n); n],
            edge_count: 0,
        }
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Self {
        Self::empty(n).complement()
    }

    /// Builds a graph from 0-based edges. Repeated edges are accepted.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut b = Builder::new(n);
        for &(u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.finish())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// N(v) as a bitset.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    #[inline]
    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    /// Every vertex of the graph.
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    /// Edges as `(u, v)` pairs with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// The complement graph, materialised.
    pub fn complement(&self) -> Self {
        let n = self.order();
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(v, row)| {
                let mut r = row.complement();
                r.remove(v);
                r
            })
            .collect();
        Self {
            rows,
            edge_count: n * n.saturating_sub(1) / 2 - self.edge_count,
        }
    }

    /// The graph to hand a clique solver for `mode`.
    pub fn for_problem(&self, mode: ProblemMode) -> std::borrow::Cow<'_, Graph> {
        match mode {
            ProblemMode::MaxClique => std::borrow::Cow::Borrowed(self),
            ProblemMode::MaxIndependentSet => std::borrow::Cow::Owned(self.complement()),
        }
    }

    /// |N(v) ∩ s|
    #[inline]
    pub fn degree_within(&self, v: usize, s: &VertexSet) -> usize {
        self.rows[v].intersection_count(s)
    }

    /// True iff the members of `s` are pairwise adjacent.
    pub fn is_clique(&self, s: &VertexSet) -> bool {
        let size = s.count();
        s.iter().all(|v| self.rows[v].intersection_count(s) + 1 == size)
    }

    /// True iff the members of `s` are pairwise non-adjacent.
    pub fn is_independent_set(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.rows[v].intersection_count(s) == 0)
    }

    /// Vertices of `within \ s` adjacent to every member of `s`.
    pub fn common_neighbors(&self, s: &VertexSet, within: &VertexSet) -> VertexSet {
        let mut out = within.difference(s);
        for v in s {
            out.intersect_with(&self.rows[v]);
        }
        out
    }

    /// True iff `s` is a clique that no vertex of `within` extends.
    pub fn is_maximal_clique_within(&self, s: &VertexSet, within: &VertexSet) -> bool {
        self.is_clique(s) && self.common_neighbors(s, within).is_empty()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order())
            .field("edge_count", &self.edge_count)
            .finish()
    }
}

/// Accumulates edges into a symmetric adjacency matrix.
pub(crate) struct Builder {
    rows: Vec<VertexSet>,
}

impl Builder {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            rows: vec![VertexSet::new(n); n],
        }
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.rows.len();
        if u >= n || v >= n {
            return Err(GraphError::VertexOutOfRange(u, v, n));
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.rows[u].insert(v);
        self.rows[v].insert(u);
        Ok(())
    }

    pub(crate) fn finish(self) -> Graph {
        let edge_count = self.rows.iter().map(VertexSet::count).sum::<usize>() / 2;
        Graph {
            rows: self.rows,
            edge_count,
        }
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn c5() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied())
    }

    #[test]
    fn complement_of_small_graphs() {
        let k3 = Graph::complete(3);
        assert_eq!(k3.edge_count(), 3);
        assert_eq!(k3.complement(), Graph::empty(3));

        let c = c5().complement();
        assert_eq!(
            c.edges().collect::<Vec<_>>(),
            vec![(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]
        );
        assert_eq!(c.edge_count(), 5);
        assert_eq!(c.complement(), c5());

        let single = Graph::empty(1);
        assert_eq!(single.complement(), single);
        assert_eq!(Graph::empty(0).complement().order(), 0);
    }

    #[test]
    fn clique_checks() {
        let g = c5();
        assert!(g.is_clique(&set(5, &[0, 1])));
        assert!(!g.is_clique(&set(5, &[0, 1, 2])));
        assert!(g.is_clique(&set(5, &[])));
        assert!(g.is_clique(&set(5, &[3])));
        assert!(g.is_maximal_clique_within(&set(5, &[0, 1]), &g.vertices()));
        assert!(!g.is_maximal_clique_within(&set(5, &[0]), &g.vertices()));
    }

    #[test]
    fn degrees() {
        let g = c5();
        assert_eq!(g.degree_within(0, &g.vertices()), 2);
        assert_eq!(g.degree_within(0, &set(5, &[1, 2])), 1);
        let k6 = Graph::complete(6);
        assert_eq!(k6.degree_within(3, &k6.vertices()), 5);
    }

    #[test]
    fn builder_rejects_bad_edges() {
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange(0, 3, 3))
        ));
        assert!(matches!(Graph::from_edges(3, &[(1, 1)]), Err(GraphError::SelfLoop(1))));
        let g = Graph::from_edges(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn problem_mode_parsing() {
        assert_eq!("MCP".parse::<ProblemMode>().unwrap(), ProblemMode::MaxClique);
        assert_eq!("mis".parse::<ProblemMode>().unwrap(), ProblemMode::MaxIndependentSet);
        assert!("tsp".parse::<ProblemMode>().is_err());
    }
}
