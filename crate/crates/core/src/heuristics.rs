//! Sequential greedy clique constructions.
//!
//! Names follow the usual best-in / worst-out taxonomy: "best in" grows a
//! clique one vertex at a time, "worst out" shrinks a vertex set until it is
//! a clique; "old" rankings are computed once, "new" rankings are refreshed
//! after every step. All degrees are taken inside the current working set,
//! and every tie goes to the lowest vertex index.

use std::fmt;
use std::str::FromStr;

use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HeuristicKind {
    /// First vertex, best in, old: scan in index order.
    FvBio,
    /// Smallest degree, worst out, new.
    SdWon,
    /// [`SdWon`](Self::SdWon) followed by re-inserting removed vertices.
    SdExtWon,
    /// Largest degree, best in, old.
    LdBio,
    /// Largest degree, best in, new.
    LdBin,
}

impl HeuristicKind {
    pub const ALL: [HeuristicKind; 5] = [
        HeuristicKind::FvBio,
        HeuristicKind::SdWon,
        HeuristicKind::SdExtWon,
        HeuristicKind::LdBio,
        HeuristicKind::LdBin,
    ];

    pub fn name(self) -> &'static str {
        match self {
            HeuristicKind::FvBio => "fv_bio",
            HeuristicKind::SdWon => "sd_won",
            HeuristicKind::SdExtWon => "sd_ext_won",
            HeuristicKind::LdBio => "ld_bio",
            HeuristicKind::LdBin => "ld_bin",
        }
    }

    /// Runs the heuristic on the subgraph induced by `sg`.
    pub fn run(self, g: &Graph, sg: &VertexSet) -> VertexSet {
        match self {
            HeuristicKind::FvBio => fv_bio(g, sg),
            HeuristicKind::SdWon => sd_won(g, sg),
            HeuristicKind::SdExtWon => sd_ext_won(g, sg),
            HeuristicKind::LdBio => ld_bio(g, sg),
            HeuristicKind::LdBin => ld_bin(g, sg),
        }
    }
}

impl fmt::Display for HeuristicKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for HeuristicKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let lower = s.trim().to_ascii_lowercase();
        // Names may carry an `fvs` or `fvs_` prefix.
        let name = lower
            .strip_prefix("fvs_")
            .or_else(|| lower.strip_prefix("fvs"))
            .unwrap_or(&lower);
        match name {
            "fv_bio" => Ok(HeuristicKind::FvBio),
            "sd_won" => Ok(HeuristicKind::SdWon),
            "sd_ext_won" | "sd_won_f" => Ok(HeuristicKind::SdExtWon),
            "ld_bio" => Ok(HeuristicKind::LdBio),
            "ld_bin" => Ok(HeuristicKind::LdBin),
            _ => Err(format!("unknown heuristic `{s}`")),
        }
    }
}

/// Greedy scan: add each vertex of `order` that is still adjacent to every
/// member chosen so far.
fn scan_in_order(g: &Graph, sg: &VertexSet, order: impl IntoIterator<Item = usize>) -> VertexSet {
    let mut clique = VertexSet::new(g.order());
    let mut allowed = sg.clone();
    for v in order {
        if allowed.contains(v) {
            clique.insert(v);
            allowed.intersect_with(g.neighbors(v));
        }
    }
    clique
}

/// Scans `sg` in ascending index order.
pub fn fv_bio(g: &Graph, sg: &VertexSet) -> VertexSet {
    scan_in_order(g, sg, sg.iter())
}

/// Scans `sg` by non-increasing degree within `sg`, ranked once.
pub fn ld_bio(g: &Graph, sg: &VertexSet) -> VertexSet {
    let mut order: Vec<(usize, usize)> = sg.iter().map(|v| (g.degree_within(v, sg), v)).collect();
    order.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    scan_in_order(g, sg, order.into_iter().map(|(_, v)| v))
}

/// Repeatedly takes the vertex of largest degree within the working set and
/// shrinks the working set to its neighbours.
pub fn ld_bin(g: &Graph, sg: &VertexSet) -> VertexSet {
    let mut clique = VertexSet::new(g.order());
    let mut working = sg.clone();
    while !working.is_empty() {
        let mut best = (0, usize::MAX);
        for v in &working {
            let d = g.degree_within(v, &working);
            if best.1 == usize::MAX || d > best.0 {
                best = (d, v);
            }
        }
        let v = best.1;
        clique.insert(v);
        working.intersect_with(g.neighbors(v));
    }
    clique
}

/// Removes a minimum-degree vertex until the rest is a clique. Returns the
/// clique and the removed vertices in removal order.
fn sd_won_trace(g: &Graph, sg: &VertexSet) -> (VertexSet, Vec<usize>) {
    let mut set = sg.clone();
    let mut degree = vec![0usize; g.order()];
    for v in &set {
        degree[v] = g.degree_within(v, &set);
    }
    let mut size = set.count();
    let mut removed = Vec::new();
    // A set is a clique iff its minimum internal degree is |S| - 1.
    while let Some(v) = set.iter().min_by_key(|&v| (degree[v], v)) {
        if degree[v] + 1 == size {
            break;
        }
        set.remove(v);
        size -= 1;
        removed.push(v);
        for u in g.neighbors(v).intersection(&set).iter() {
            degree[u] -= 1;
        }
    }
    (set, removed)
}

/// Worst-out by smallest degree. The result is a clique but need not be
/// maximal: a vertex dropped early can be adjacent to all survivors.
pub fn sd_won(g: &Graph, sg: &VertexSet) -> VertexSet {
    sd_won_trace(g, sg).0
}

/// [`sd_won`], then revisits removed vertices latest-first and adds each one
/// adjacent to the whole current clique.
pub fn sd_ext_won(g: &Graph, sg: &VertexSet) -> VertexSet {
    let (mut clique, removed) = sd_won_trace(g, sg);
    let mut allowed = g.common_neighbors(&clique, sg);
    for &v in removed.iter().rev() {
        if allowed.contains(v) {
            clique.insert(v);
            allowed.intersect_with(g.neighbors(v));
        }
    }
    clique
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::c5;

    fn star() -> Graph {
        Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap()
    }

    fn star_centre_last() -> Graph {
        Graph::from_edges(5, &[(4, 0), (4, 1), (4, 2), (4, 3)]).unwrap()
    }

    fn run(kind: HeuristicKind, g: &Graph) -> Vec<usize> {
        kind.run(g, &g.vertices()).to_vec()
    }

    #[test]
    fn complete_and_edgeless() {
        for kind in HeuristicKind::ALL {
            assert_eq!(run(kind, &Graph::complete(6)), vec![0, 1, 2, 3, 4, 5], "{kind}");
            assert_eq!(run(kind, &Graph::empty(4)).len(), 1, "{kind}");
            assert!(kind.run(&c5(), &VertexSet::new(5)).is_empty(), "{kind}");
        }
    }

    #[test]
    fn fv_bio_on_c5() {
        assert_eq!(run(HeuristicKind::FvBio, &c5()), vec![0, 1]);
    }

    #[test]
    fn sd_won_traces() {
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(run(HeuristicKind::SdWon, &path), vec![1, 2]);
        // 0, 1, 2 go in turn (all degree 2, then degree 1 ties), leaving {3, 4}.
        assert_eq!(run(HeuristicKind::SdWon, &c5()), vec![3, 4]);
    }

    #[test]
    fn sd_ext_won_recovers_a_stranded_vertex() {
        // sd_won drops 0 first (degree 2, lowest index), then 1 and 3,
        // ending at {2, 4}; 0 is adjacent to both.
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4)]).unwrap();
        assert_eq!(run(HeuristicKind::SdWon, &g), vec![2, 4]);
        assert_eq!(run(HeuristicKind::SdExtWon, &g), vec![0, 2, 4]);
    }

    #[test]
    fn largest_degree_on_stars() {
        for kind in [HeuristicKind::LdBio, HeuristicKind::LdBin] {
            assert_eq!(run(kind, &star()), vec![0, 1], "{kind}");
            assert_eq!(run(kind, &star_centre_last()), vec![0, 4], "{kind}");
            assert_eq!(run(kind, &c5()), vec![0, 1], "{kind}");
        }
    }

    #[test]
    fn restricted_to_subgraph() {
        let g = Graph::complete(8);
        let sg = VertexSet::from_vertices(8, [1, 4, 6]);
        for kind in HeuristicKind::ALL {
            assert_eq!(kind.run(&g, &sg), sg, "{kind}");
        }
    }

    #[test]
    fn names_round_trip() {
        for kind in HeuristicKind::ALL {
            assert_eq!(kind.name().parse::<HeuristicKind>().unwrap(), kind);
        }
        assert_eq!("fvsSD_WON_f".parse::<HeuristicKind>().unwrap(), HeuristicKind::SdExtWon);
        assert_eq!(
            "fvs_sd_won_f".parse::<HeuristicKind>().unwrap(),
            HeuristicKind::SdExtWon
        );
        assert!("greedy".parse::<HeuristicKind>().is_err());
    }
}
