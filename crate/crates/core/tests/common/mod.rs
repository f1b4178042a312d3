//! Slow, obviously-correct reference implementations used as test oracles.
//! None of them share code with the library beyond the board type.

#![allow(dead_code)]

use ramsey_core::{Board, Color, Edge, GameGoal, PatternKind, TargetPattern, VertexId};

pub fn edges_of(board: &Board, c: Color) -> Vec<(VertexId, VertexId)> {
    board.edges().filter(|(_, col)| *col == c).map(|(e, _)| (e.lo(), e.hi())).collect()
}

fn adjacency(n: usize, edges: &[(VertexId, VertexId)]) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; n]; n];
    for &(a, b) in edges {
        adj[a as usize][b as usize] = true;
        adj[b as usize][a as usize] = true;
    }
    adj
}

fn simple_path_search(adj: &[Vec<bool>], path: &mut Vec<usize>, want: usize, close: bool) -> bool {
    if path.len() == want {
        return !close || adj[path[0]][*path.last().unwrap()];
    }
    let last = *path.last().unwrap();
    for v in 0..adj.len() {
        if adj[last][v] && !path.contains(&v) {
            path.push(v);
            if simple_path_search(adj, path, want, close) {
                return true;
            }
            path.pop();
        }
    }
    false
}

/// Is there a path on `s` vertices (or a cycle of length `s`) in the edge list?
pub fn has_pattern(edges: &[(VertexId, VertexId)], t: TargetPattern) -> bool {
    let n = edges.iter().map(|&(a, b)| a.max(b) as usize + 1).max().unwrap_or(0);
    let adj = adjacency(n, edges);
    let s = t.size() as usize;
    let close = t.kind() == PatternKind::Cycle;
    if s == 1 {
        return true;
    }
    (0..n).any(|v| simple_path_search(&adj, &mut vec![v], s, close))
}

pub fn has_cycle(edges: &[(VertexId, VertexId)]) -> bool {
    // union-find free check: a forest has |E| = |V| - components
    let n = edges.iter().map(|&(a, b)| a.max(b) as usize + 1).max().unwrap_or(0);
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a as usize), find(&mut parent, b as usize));
        if ra == rb {
            return true;
        }
        parent[ra] = rb;
    }
    false
}

pub fn board_has(board: &Board, c: Color, t: TargetPattern) -> bool {
    has_pattern(&edges_of(board, c), t)
}

pub fn goal_reached(board: &Board, goal: GameGoal) -> bool {
    board_has(board, Color::Red, goal.red) || board_has(board, Color::Blue, goal.blue)
}

/// Plain minimax: can Builder force a target within `r` rounds? Moves are all
/// absent edges among active vertices and the next two unused indices.
pub fn naive_wins(board: &Board, goal: GameGoal, r: u32) -> bool {
    if r == 0 {
        return false;
    }
    let n = board.active_vertices().iter().map(|v| v + 1).max().unwrap_or(0) + 2;
    for a in 0..n {
        for b in a + 1..n {
            let e = Edge::between(a, b);
            if board.contains(e) {
                continue;
            }
            let ok = Color::BOTH.iter().all(|&c| {
                let next = board.add_edge(e, c).unwrap();
                goal_reached(&next, goal) || naive_wins(&next, goal, r - 1)
            });
            if ok {
                return true;
            }
        }
    }
    false
}

pub fn naive_value(goal: GameGoal, cap: u32) -> Option<u32> {
    (1..=cap).find(|&r| naive_wins(&Board::new(), goal, r))
}

/// Every permutation of `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Colored-graph isomorphism by trying every bijection of the active vertices.
pub fn brute_isomorphic(a: &Board, b: &Board) -> bool {
    let va: Vec<VertexId> = a.active_vertices().into_iter().collect();
    let vb: Vec<VertexId> = b.active_vertices().into_iter().collect();
    if va.len() != vb.len() || a.edge_count() != b.edge_count() {
        return false;
    }
    permutations(va.len()).into_iter().any(|p| {
        a.edges().all(|(e, c)| {
            let map = |v: VertexId| vb[p[va.iter().position(|&x| x == v).unwrap()]];
            b.color(Edge::between(map(e.lo()), map(e.hi()))) == Some(c)
        })
    })
}

/// All `k`-subsets of `items`.
pub fn subsets<T: Clone>(items: &[T], k: usize) -> Vec<Vec<T>> {
    if k == 0 {
        return vec![vec![]];
    }
    if items.len() < k {
        return vec![];
    }
    let mut out = subsets(&items[1..], k - 1);
    for s in &mut out {
        s.insert(0, items[0].clone());
    }
    out.extend(subsets(&items[1..], k));
    out
}
