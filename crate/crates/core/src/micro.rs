//! Lookup-table maximum clique for graphs of order at most six, and the
//! chunked quasi-exact solver built on it.
//!
//! A graph on local vertices `0..6` is packed into 15 bits: the pair
//! `(i, j)` with `i > j` lives at bit `i·(i−1)/2 + j`, so bit 0 is `(1,0)`,
//! bit 1 is `(2,0)`, bit 2 is `(2,1)` and bit 14 is `(5,4)`. The table maps
//! every one of the 2^15 codes to a 6-bit membership mask of a maximum
//! clique. Among maximum cliques the numerically smallest mask is stored,
//! which makes local vertex 0 win every size-1 tie and keeps zero-padded
//! chunks from ever selecting a padding slot.

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

/// Largest chunk the table can solve.
pub const MAX_ORDER: usize = 6;
/// Bits in a packed order-6 adjacency matrix.
pub const PACKED_BITS: usize = MAX_ORDER * (MAX_ORDER - 1) / 2;
/// Entries in the order-6 table.
pub const TABLE_LEN: usize = 1 << PACKED_BITS;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MicroError {
    #[error("chunk of {len} vertices exceeds the table order {max}")]
    ChunkTooLong { len: usize, max: usize },
    #[error("vertex {0} appears twice in the chunk")]
    DuplicateVertex(usize),
    #[error("vertex {0} is outside a graph of order {1}")]
    VertexOutOfRange(usize, usize),
    #[error("table dump has {0} bytes, expected {TABLE_LEN}")]
    TableSize(usize),
    #[error("table entry {code:#06x} ({mask:#08b}): {reason}")]
    BadEntry { code: u16, mask: u8, reason: &'static str },
}

/// Bit position of the pair `(i, j)`, `i > j`.
#[inline]
pub const fn pair_bit(i: usize, j: usize) -> usize {
    i * (i - 1) / 2 + j
}

/// 15-bit packed triangular adjacency matrix of a graph on `0..6`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct PackedAdj(u16);

impl PackedAdj {
    pub fn from_code(code: u16) -> Option<Self> {
        (usize::from(code) < TABLE_LEN).then_some(Self(code))
    }

    #[inline]
    pub fn code(self) -> u16 {
        self.0
    }

    #[inline]
    pub fn has_edge(self, a: usize, b: usize) -> bool {
        if a == b || a >= MAX_ORDER || b >= MAX_ORDER {
            return false;
        }
        let (i, j) = if a > b { (a, b) } else { (b, a) };
        self.0 >> pair_bit(i, j) & 1 == 1
    }

    /// Neighbourhood bitmask of each local vertex.
    pub fn rows(self) -> [u8; MAX_ORDER] {
        let mut rows = [0u8; MAX_ORDER];
        for i in 1..MAX_ORDER {
            for j in 0..i {
                if self.0 >> pair_bit(i, j) & 1 == 1 {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
            }
        }
        rows
    }
}

impl fmt::Debug for PackedAdj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PackedAdj({:#017b})", self.0)
    }
}

/// Membership mask over local indices `0..6`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct CliqueMask(u8);

impl CliqueMask {
    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Local indices in ascending order.
    pub fn members(self) -> impl Iterator<Item = usize> {
        (0..MAX_ORDER).filter(move |i| self.0 >> i & 1 == 1)
    }
}

impl fmt::Debug for CliqueMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CliqueMask({:#08b})", self.0)
    }
}

#[inline]
fn mask_is_clique(rows: &[u8; MAX_ORDER], mask: u8) -> bool {
    (0..MAX_ORDER)
        .filter(|i| mask >> i & 1 == 1)
        .all(|i| rows[i] & mask == mask & !(1 << i))
}

/// Maximum-clique masks for every packed graph of a fixed order.
#[derive(Clone)]
pub struct MicroTable {
    order: usize,
    entries: Box<[CliqueMask]>,
}

impl MicroTable {
    /// The order-6 table used by the solvers.
    pub fn build() -> Self {
        Self::build_for_order(MAX_ORDER)
    }

    /// Table for chunks of at most `order` vertices (`1..=6`). Smaller
    /// orders exist for testing; codes are prefixes of the order-6 packing.
    pub fn build_for_order(order: usize) -> Self {
        assert!((1..=MAX_ORDER).contains(&order), "table order must be in 1..=6");
        let codes = 1usize << (order * (order - 1) / 2);
        let subsets = 1u16 << order;
        let entries = (0..codes)
            .map(|code| {
                let rows = PackedAdj(code as u16).rows();
                let mut best = 0u8;
                // Ascending scan keeps the first (smallest) mask of each new size.
                for mask in 1..subsets {
                    let mask = mask as u8;
                    if mask.count_ones() > best.count_ones() && mask_is_clique(&rows, mask) {
                        best = mask;
                    }
                }
                CliqueMask(best)
            })
            .collect();
        Self { order, entries }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    #[inline]
    pub fn get(&self, code: PackedAdj) -> CliqueMask {
        self.entries[usize::from(code.0)]
    }

    /// One byte per entry, low six bits meaningful.
    pub fn to_bytes(&self) -> Vec<u8> {
        self.entries.iter().map(|m| m.0).collect()
    }

    /// Loads an order-6 dump, rejecting any entry that is not a maximum
    /// clique of its code or that could select a zero-padding slot.
    pub fn from_bytes(bytes: &[u8]) -> Result<Self, MicroError> {
        if bytes.len() != TABLE_LEN {
            return Err(MicroError::TableSize(bytes.len()));
        }
        let table = Self {
            order: MAX_ORDER,
            entries: bytes.iter().map(|&b| CliqueMask(b)).collect(),
        };
        table.verify()?;
        Ok(table)
    }

    /// Checks every entry: high bits clear, a clique, of maximum size, and
    /// never using a trailing isolated slot that a shorter chunk would pad.
    pub fn verify(&self) -> Result<(), MicroError> {
        let all = (1u16 << self.order) - 1;
        for (code, &mask) in self.entries.iter().enumerate() {
            let code = code as u16;
            let bad = |reason| MicroError::BadEntry {
                code,
                mask: mask.0,
                reason,
            };
            if u16::from(mask.0) & !all != 0 {
                return Err(bad("bits outside the table order"));
            }
            let rows = PackedAdj(code).rows();
            if mask.is_empty() {
                return Err(bad("empty clique"));
            }
            if !mask_is_clique(&rows, mask.0) {
                return Err(bad("members are not pairwise adjacent"));
            }
            if mask.len() != max_clique_size(&rows, all as u8) {
                return Err(bad("clique is not maximum"));
            }
            // Slots >= len are padding when they are all isolated.
            for len in 1..self.order {
                if rows[len..self.order].iter().all(|&r| r == 0) && mask.0 >> len != 0 {
                    return Err(bad("selects a padding slot"));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MicroTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MicroTable")
            .field("order", &self.order)
            .field("entries", &self.entries.len())
            .finish()
    }
}

/// Branch on the lowest candidate: include it (keep its neighbours) or drop it.
fn max_clique_size(rows: &[u8; MAX_ORDER], candidates: u8) -> usize {
    if candidates == 0 {
        return 0;
    }
    let v = candidates.trailing_zeros() as usize;
    let rest = candidates & !(1 << v);
    let with = 1 + max_clique_size(rows, rest & rows[v]);
    let without = max_clique_size(rows, rest);
    with.max(without)
}

fn check_chunk(g: &Graph, chunk: &[usize], max: usize) -> Result<(), MicroError> {
    if chunk.len() > max {
        return Err(MicroError::ChunkTooLong { len: chunk.len(), max });
    }
    for (k, &v) in chunk.iter().enumerate() {
        if v >= g.order() {
            return Err(MicroError::VertexOutOfRange(v, g.order()));
        }
        if chunk[..k].contains(&v) {
            return Err(MicroError::DuplicateVertex(v));
        }
    }
    Ok(())
}

#[inline]
fn pack_unchecked(g: &Graph, chunk: &[usize]) -> PackedAdj {
    let mut code = 0u16;
    for i in 1..chunk.len() {
        let row = g.neighbors(chunk[i]);
        for (j, &w) in chunk[..i].iter().enumerate() {
            if row.contains(w) {
                code |= 1 << pair_bit(i, j);
            }
        }
    }
    PackedAdj(code)
}

/// Packs the subgraph induced by `chunk`; local index = position in `chunk`.
/// Slots past the chunk length are isolated.
pub fn pack_subgraph(g: &Graph, chunk: &[usize]) -> Result<PackedAdj, MicroError> {
    check_chunk(g, chunk, MAX_ORDER)?;
    Ok(pack_unchecked(g, chunk))
}

/// Maximum clique of the subgraph induced by `chunk`, in original vertex ids.
pub fn lookup(table: &MicroTable, g: &Graph, chunk: &[usize]) -> Result<VertexSet, MicroError> {
    check_chunk(g, chunk, table.order())?;
    if chunk.is_empty() {
        return Ok(VertexSet::new(g.order()));
    }
    let mask = table.get(pack_unchecked(g, chunk));
    Ok(VertexSet::from_vertices(g.order(), mask.members().map(|i| chunk[i])))
}

/// Quasi-exact maximum clique of the subgraph induced by `sg`.
///
/// Repeatedly takes the lowest `table.order()` remaining vertices, solves
/// that chunk exactly by lookup, adds the local clique to the solution and
/// drops every remaining vertex not adjacent to all of it. The result is a
/// clique that is maximal within `sg`, and maximum when `|sg| <= order`.
pub fn fvs_qe(table: &MicroTable, g: &Graph, sg: &VertexSet) -> VertexSet {
    let mut rest = sg.clone();
    let mut solution = VertexSet::new(g.order());
    let mut chunk = [0usize; MAX_ORDER];
    while !rest.is_empty() {
        let mut len = 0;
        for v in rest.iter().take(table.order()) {
            chunk[len] = v;
            len += 1;
        }
        for &v in &chunk[..len] {
            rest.remove(v);
        }
        let mask = table.get(pack_unchecked(g, &chunk[..len]));
        debug_assert!(mask.bits() >> len == 0, "table selected a padding slot");
        for i in mask.members() {
            let v = chunk[i];
            solution.insert(v);
            rest.intersect_with(g.neighbors(v));
        }
    }
    solution
}
