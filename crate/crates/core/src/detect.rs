//! Monochromatic path and cycle detection.
//!
//! Exhaustive DFS over simple paths, restricted to one connected component at
//! a time. Boards produced by play are sparse, so this stays cheap.

use crate::board::{Board, Color, Edge, VertexId};
use crate::pattern::{Family, PatternKind, TargetPattern};

/// Adjacency of one color, indexed by vertex.
struct ColorGraph {
    adj: Vec<Vec<VertexId>>,
}

impl ColorGraph {
    fn new(board: &Board, c: Color) -> Self {
        let n = board.vertex_bound();
        let adj = (0..n as VertexId).map(|v| board.neighbors(v, c).collect()).collect();
        ColorGraph { adj }
    }

    fn from_edges(n: usize, edges: &[Edge]) -> Self {
        let mut adj = vec![Vec::new(); n];
        for e in edges {
            adj[e.lo() as usize].push(e.hi());
            adj[e.hi() as usize].push(e.lo());
        }
        ColorGraph { adj }
    }

    fn n(&self) -> usize {
        self.adj.len()
    }

    /// Vertex count of the longest path starting at `v`, stopping early at `cap`.
    fn longest_from(&self, v: VertexId, seen: &mut [bool], cap: usize) -> usize {
        seen[v as usize] = true;
        let mut best = 1;
        for &u in &self.adj[v as usize] {
            if !seen[u as usize] {
                best = best.max(1 + self.longest_from(u, seen, cap.saturating_sub(1)));
                if best >= cap {
                    break;
                }
            }
        }
        seen[v as usize] = false;
        best
    }

    fn longest_path(&self, cap: usize) -> usize {
        let mut seen = vec![false; self.n()];
        let mut best = 1;
        for v in 0..self.n() as VertexId {
            if self.adj[v as usize].is_empty() {
                continue;
            }
            best = best.max(self.longest_from(v, &mut seen, cap));
            if best >= cap {
                break;
            }
        }
        best
    }

    /// Is there a simple path from `v` to `target` with exactly `len` vertices?
    fn path_to(&self, v: VertexId, target: VertexId, len: usize, seen: &mut [bool]) -> bool {
        if len == 1 {
            return v == target;
        }
        if v == target {
            return false;
        }
        seen[v as usize] = true;
        let found = self.adj[v as usize]
            .iter()
            .any(|&u| !seen[u as usize] && self.path_to(u, target, len - 1, seen));
        seen[v as usize] = false;
        found
    }

    /// Cycle of length exactly `s` through vertex `v`.
    fn cycle_through(&self, v: VertexId, s: usize, seen: &mut [bool]) -> bool {
        seen[v as usize] = true;
        let found = self.adj[v as usize].iter().any(|&u| {
            seen[u as usize] = true;
            let hit = self.adj[u as usize]
                .iter()
                .any(|&w| !seen[w as usize] && self.walk_back(w, v, s - 2, seen));
            seen[u as usize] = false;
            hit
        });
        seen[v as usize] = false;
        found
    }

    /// Path of `remaining` more vertices starting at `w` whose last vertex is adjacent to `home`.
    fn walk_back(&self, w: VertexId, home: VertexId, remaining: usize, seen: &mut [bool]) -> bool {
        if remaining == 1 {
            return self.adj[w as usize].contains(&home);
        }
        seen[w as usize] = true;
        let found = self.adj[w as usize]
            .iter()
            .any(|&x| !seen[x as usize] && self.walk_back(x, home, remaining - 1, seen));
        seen[w as usize] = false;
        found
    }

    fn has_cycle_len(&self, s: usize) -> bool {
        let mut seen = vec![false; self.n()];
        (0..self.n() as VertexId).any(|v| self.adj[v as usize].len() >= 2 && self.cycle_through(v, s, &mut seen))
    }

    fn has_any_cycle(&self) -> bool {
        let mut parent: Vec<usize> = (0..self.n()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for v in 0..self.n() {
            for &u in &self.adj[v] {
                let u = u as usize;
                if u < v {
                    continue;
                }
                let (a, b) = (find(&mut parent, v), find(&mut parent, u));
                if a == b {
                    return true;
                }
                parent[a] = b;
            }
        }
        false
    }

    fn contains(&self, t: TargetPattern) -> bool {
        let s = t.size() as usize;
        match t.kind() {
            PatternKind::Path => self.longest_path(s) >= s,
            PatternKind::Cycle => self.has_cycle_len(s),
        }
    }
}

/// Number of vertices of the longest path in color `c`; `1` when there is no `c` edge.
pub fn longest_monochromatic_path(board: &Board, c: Color) -> usize {
    ColorGraph::new(board, c).longest_path(usize::MAX)
}

/// Vertex count of the longest `c`-path starting at `v`, stopping early at `cap`.
pub fn longest_path_from(board: &Board, c: Color, v: VertexId, cap: usize) -> usize {
    let g = ColorGraph::new(board, c);
    if v as usize >= g.n() {
        return 1;
    }
    let mut seen = vec![false; g.n()];
    g.longest_from(v, &mut seen, cap)
}

/// Does the `c`-colored subgraph contain a copy of `t`?
pub fn contains_pattern(board: &Board, c: Color, t: TargetPattern) -> bool {
    ColorGraph::new(board, c).contains(t)
}

/// Does the `c`-colored subgraph contain a copy of `t` using edge `e`?
///
/// `e` must already be on the board with color `c`. Used for incremental win
/// detection: a copy that appears after coloring `e` must pass through `e`.
pub fn contains_pattern_through(board: &Board, c: Color, t: TargetPattern, e: Edge) -> bool {
    debug_assert_eq!(board.color(e), Some(c));
    let g = ColorGraph::new(board, c);
    let mut seen = vec![false; g.n()];
    let (a, b) = (e.lo(), e.hi());
    let s = t.size() as usize;
    match t.kind() {
        PatternKind::Cycle => {
            // a cycle through ab is a path from a to b of s vertices avoiding the edge itself
            if s == 3 {
                return g.adj[a as usize].iter().any(|&w| w != b && g.adj[b as usize].contains(&w));
            }
            g.path_to(a, b, s, &mut seen)
        }
        PatternKind::Path => {
            // split the path at e: a side of i vertices, b side of s - i
            seen[a as usize] = true;
            seen[b as usize] = true;
            
            arms(&g, a, &mut seen, s - 1, &mut |seen, left| {
                left + 1 >= s || g.longest_from_avoiding(b, seen, s - left) >= s - left
            })
        }
    }
}

impl ColorGraph {
    /// Like `longest_from` but `v` itself is already marked seen by the caller.
    fn longest_from_avoiding(&self, v: VertexId, seen: &mut [bool], cap: usize) -> usize {
        let mut best = 1;
        for &u in &self.adj[v as usize] {
            if !seen[u as usize] {
                best = best.max(1 + self.longest_from(u, seen, cap.saturating_sub(1)));
                if best >= cap {
                    break;
                }
            }
        }
        best
    }
}

/// Enumerate simple paths starting at `v` (already marked), calling `f` with
/// the vertex count so far; stops as soon as `f` returns true.
fn arms(
    g: &ColorGraph,
    v: VertexId,
    seen: &mut [bool],
    cap: usize,
    f: &mut dyn FnMut(&mut [bool], usize) -> bool,
) -> bool {
    fn go(
        g: &ColorGraph,
        v: VertexId,
        count: usize,
        seen: &mut [bool],
        cap: usize,
        f: &mut dyn FnMut(&mut [bool], usize) -> bool,
    ) -> bool {
        if f(seen, count) {
            return true;
        }
        if count >= cap {
            return false;
        }
        for &u in &g.adj[v as usize] {
            if !seen[u as usize] {
                seen[u as usize] = true;
                let hit = go(g, u, count + 1, seen, cap, f);
                seen[u as usize] = false;
                if hit {
                    return true;
                }
            }
        }
        false
    }
    go(g, v, 1, seen, cap, f)
}

/// Is the color-`c` subgraph free of every member of `fam`?
pub fn is_family_free(board: &Board, c: Color, fam: &Family) -> bool {
    graph_is_family_free(&ColorGraph::new(board, c), fam)
}

/// Family check on a bare edge list over vertices `0..n`.
pub fn edges_family_free(n: usize, edges: &[Edge], fam: &Family) -> bool {
    graph_is_family_free(&ColorGraph::from_edges(n, edges), fam)
}

fn graph_is_family_free(g: &ColorGraph, fam: &Family) -> bool {
    if let Some(k) = fam.path_bound {
        let cap = k as usize + 1;
        if g.longest_path(cap) >= cap {
            return false;
        }
    }
    if fam.acyclic && g.has_any_cycle() {
        return false;
    }
    fam.cycles.iter().all(|&s| !g.has_cycle_len(s as usize))
}

/// Longest path (vertex count) in a bare edge list.
pub fn edges_longest_path(n: usize, edges: &[Edge]) -> usize {
    ColorGraph::from_edges(n, edges).longest_path(usize::MAX)
}
