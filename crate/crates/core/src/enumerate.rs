//! Small uncolored graphs without isolated vertices, one per isomorphism class.
//!
//! Graphs are grown one edge at a time (new edge between old vertices, to one
//! new vertex, or between two new vertices) and deduplicated by canonical
//! form. For a hereditary filter such as family-freeness every member with
//! `m` edges arises from one with `m - 1`, so filtering while growing is exact.

use std::collections::BTreeMap;

use crate::board::{Board, Color, Edge, VertexId};
use crate::canon::{canonical_key_of_edges, CanonicalKey};
use crate::detect::edges_family_free;
use crate::pattern::Family;

/// Graph on vertices `0..n`, every vertex covered by an edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SmallGraph {
    pub n: usize,
    pub edges: Vec<Edge>,
}

impl SmallGraph {
    pub fn empty() -> Self {
        SmallGraph { n: 0, edges: Vec::new() }
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.contains(&e)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.edges.iter().filter(|e| e.touches(v)).count()
    }

    /// All edges colored `c`.
    pub fn to_board(&self, c: Color) -> Board {
        Board::from_edges(self.edges.iter().map(|e| (*e, c))).expect("simple graph")
    }

    pub fn key(&self) -> CanonicalKey {
        canonical_key_of_edges(&self.edges)
    }

    fn extensions(&self) -> impl Iterator<Item = SmallGraph> + '_ {
        let n = self.n as VertexId;
        let inner = (0..n).flat_map(move |a| (a + 1..n).map(move |b| (Edge::between(a, b), 0)));
        let pendant = (0..n).map(move |a| (Edge::between(a, n), 1));
        let free = std::iter::once((Edge::between(n, n + 1), 2));
        inner.chain(pendant).chain(free).filter(|(e, _)| !self.contains(*e)).map(|(e, added)| {
            let mut edges = self.edges.clone();
            edges.push(e);
            SmallGraph { n: self.n + added, edges }
        })
    }
}

/// Successive levels: the `m`-th item holds every graph with exactly `m`
/// edges passing `keep`, in canonical-key order. Unbounded; use `take`.
pub fn levels(keep: impl Fn(&SmallGraph) -> bool) -> impl Iterator<Item = Vec<SmallGraph>> {
    std::iter::successors(Some(vec![SmallGraph::empty()]), move |prev| {
        let mut next: BTreeMap<CanonicalKey, SmallGraph> = BTreeMap::new();
        for g in prev {
            for h in g.extensions() {
                if keep(&h) {
                    next.entry(h.key()).or_insert(h);
                }
            }
        }
        Some(next.into_values().collect())
    })
}

/// Levels `0..=max_edges` of [`levels`].
pub fn graphs_by_edges(max_edges: usize, keep: impl Fn(&SmallGraph) -> bool) -> Vec<Vec<SmallGraph>> {
    levels(keep).take(max_edges + 1).collect()
}

/// Family-free graphs by edge count.
pub fn family_free_graphs(fam: &Family, max_edges: usize) -> Vec<Vec<SmallGraph>> {
    let fam = fam.clone();
    graphs_by_edges(max_edges, move |g| edges_family_free(g.n, &g.edges, &fam))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_known_tables() {
        // graphs without isolated vertices: 1, 1, 2, 5, 11, 26 for 0..5 edges
        let all = graphs_by_edges(5, |_| true);
        let counts: Vec<usize> = all.iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 11, 26]);
        // forests: sum over edge partitions of tree counts 1, 1, 2, 3, 6
        let forests = family_free_graphs(&Family::all_cycles(), 5);
        let counts: Vec<usize> = forests.iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 8, 16]);
    }
}
