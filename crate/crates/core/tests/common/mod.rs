//! Test oracles written against plain adjacency matrices, independent of
//! the crate's bitsets and lookup table.

#![allow(dead_code, clippy::needless_range_loop)]

use kswap::{Graph, VertexSet};

/// Dense boolean adjacency copied out of a graph.
pub fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    (0..n).map(|u| (0..n).map(|v| g.is_adjacent(u, v)).collect()).collect()
}

/// Exhaustive maximum clique size of the subgraph induced by `within`.
pub fn brute_force_omega(adj: &[Vec<bool>], within: &[usize]) -> usize {
    fn go(adj: &[Vec<bool>], cands: &[usize], size: usize, best: &mut usize) {
        if size + cands.len() <= *best {
            return;
        }
        if cands.is_empty() {
            *best = size;
            return;
        }
        for (i, &v) in cands.iter().enumerate() {
            let next: Vec<usize> = cands[i + 1..].iter().copied().filter(|&u| adj[v][u]).collect();
            go(adj, &next, size + 1, best);
        }
    }
    let mut best = 0;
    go(adj, within, 0, &mut best);
    best
}

pub fn omega(g: &Graph) -> usize {
    let all: Vec<usize> = (0..g.order()).collect();
    brute_force_omega(&matrix(g), &all)
}

/// Pairwise adjacency checked pair by pair.
pub fn pairwise_adjacent(adj: &[Vec<bool>], s: &[usize]) -> bool {
    s.iter()
        .enumerate()
        .all(|(i, &a)| s[i + 1..].iter().all(|&b| adj[a][b]))
}

/// No vertex of `within` outside `s` is adjacent to all of `s`.
pub fn is_maximal(adj: &[Vec<bool>], s: &[usize], within: &[usize]) -> bool {
    within
        .iter()
        .filter(|v| !s.contains(v))
        .all(|&v| s.iter().any(|&u| !adj[u][v]))
}

pub fn check_maximal_clique(g: &Graph, s: &VertexSet, within: &VertexSet) -> bool {
    let adj = matrix(g);
    let sv = s.to_vec();
    pairwise_adjacent(&adj, &sv) && is_maximal(&adj, &sv, &within.to_vec()) && s.is_subset(within)
}

/// Adjacency rows of the 6-vertex graph behind a packed code, decoded with
/// the row-major triangular layout: pairs (1,0), (2,0), (2,1), (3,0), ...
pub fn decode_code(code: u16) -> [[bool; 6]; 6] {
    let mut adj = [[false; 6]; 6];
    let mut bit = 0;
    for i in 1..6 {
        for j in 0..i {
            if code >> bit & 1 == 1 {
                adj[i][j] = true;
                adj[j][i] = true;
            }
            bit += 1;
        }
    }
    adj
}

pub fn mask_is_clique(adj: &[[bool; 6]; 6], mask: u8) -> bool {
    (0..6).all(|i| mask >> i & 1 == 0 || (0..6).all(|j| j == i || mask >> j & 1 == 0 || adj[i][j]))
}

/// Largest clique size over all 64 subsets.
pub fn code_omega(code: u16) -> usize {
    let adj = decode_code(code);
    (0u8..64)
        .filter(|&m| mask_is_clique(&adj, m))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap()
}

/// The 6-vertex graph of a packed code.
pub fn code_graph(code: u16) -> Graph {
    let adj = decode_code(code);
    let mut edges = Vec::new();
    for i in 0..6 {
        for j in 0..i {
            if adj[i][j] {
                edges.push((j, i));
            }
        }
    }
    Graph::from_edges(6, &edges).unwrap()
}

pub fn shared_table() -> &'static kswap::MicroTable {
    use std::sync::OnceLock;
    static T: OnceLock<kswap::MicroTable> = OnceLock::new();
    T.get_or_init(kswap::MicroTable::build)
}
