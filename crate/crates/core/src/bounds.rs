//! Lower-bound machinery: forceable edges, scaffoldings and closed-form bounds.
//!
//! Against the blocking painter for a family `F`, every blue edge is one whose
//! addition to the red graph `R` would create a member of `F`. So Builder
//! needs a red `F`-free `R` from which a whole copy of `H` can be forced;
//! the fewest edges such an `R` can have, plus `e(H)`, bounds the game below.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::board::{Board, Color, Edge, VertexId};
use crate::detect::{edges_family_free, edges_longest_path, is_family_free, longest_path_from};
use crate::enumerate::levels;
use crate::pattern::{Family, PatternKind, TargetPattern};
use crate::play::{frac, q, Q};

/// A red `F`-free graph together with a forced copy of the target.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScaffoldingCertificate {
    #[serde(serialize_with = "ser_board")]
    pub r: Board,
    #[serde(serialize_with = "ser_display")]
    pub family: Family,
    pub target: TargetPattern,
    pub forced_copy: Vec<Edge>,
    /// Endpoints of `P_k`s in `r`, where `P_{k+1}` is the family's path bound.
    pub endpoint_set: BTreeSet<VertexId>,
}

fn ser_board<S: serde::Serializer>(b: &Board, s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(b.edges().map(|(e, _)| e))
}

fn ser_display<S: serde::Serializer, T: fmt::Display>(t: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(t)
}

fn ser_opt_display<S: serde::Serializer, T: fmt::Display>(t: &Option<T>, s: S) -> Result<S::Ok, S::Error> {
    match t {
        Some(t) => s.collect_str(t),
        None => s.serialize_none(),
    }
}

impl ScaffoldingCertificate {
    /// Re-checks every condition from scratch.
    pub fn verify(&self) -> Result<(), String> {
        if !is_family_free(&self.r, Color::Red, &self.family) {
            return Err("R is not family-free".into());
        }
        if self.r.edges().any(|(_, c)| c == Color::Blue) {
            return Err("R has blue edges".into());
        }
        if self.forced_copy.len() != self.target.edge_count() as usize {
            return Err("forced copy has the wrong size".into());
        }
        for e in &self.forced_copy {
            if self.r.contains(*e) {
                return Err(format!("{e} is already in R"));
            }
            if !is_forceable_edge(&self.r, &self.family, *e) {
                return Err(format!("{e} is not forceable"));
            }
        }
        if !is_copy_of(&self.forced_copy, self.target) {
            return Err("forced edges do not form the target".into());
        }
        Ok(())
    }
}

fn is_copy_of(edges: &[Edge], t: TargetPattern) -> bool {
    let vs: BTreeSet<VertexId> = edges.iter().flat_map(|e| e.endpoints()).collect();
    if vs.len() != t.vertex_count() as usize || edges.len() != t.edge_count() as usize {
        return false;
    }
    let index: Vec<VertexId> = vs.into_iter().collect();
    let relabel: Vec<Edge> = edges
        .iter()
        .map(|e| {
            let f = |v| index.iter().position(|&x| x == v).unwrap() as VertexId;
            Edge::between(f(e.lo()), f(e.hi()))
        })
        .collect();
    let n = index.len();
    let degrees_ok = (0..n as VertexId).all(|v| relabel.iter().filter(|e| e.touches(v)).count() <= 2);
    match t.kind() {
        PatternKind::Path => degrees_ok && edges_longest_path(n, &relabel) == n,
        PatternKind::Cycle => {
            degrees_ok
                && (0..n as VertexId).all(|v| relabel.iter().filter(|e| e.touches(v)).count() == 2)
                && edges_longest_path(n, &relabel) == n
        }
    }
}

/// Does adding `e` to the red graph of `r` create a member of `fam`?
/// Endpoints of `e` outside `r` are fresh vertices.
pub fn is_forceable_edge(r: &Board, fam: &Family, e: Edge) -> bool {
    if r.contains(e) {
        return false;
    }
    let mut edges: Vec<Edge> = r.edges_of(Color::Red).collect();
    edges.push(e);
    let n = r.vertex_bound().max(e.hi() as usize + 1);
    !edges_family_free(n, &edges, fam)
}

/// A copy of `h` avoiding `r` whose edges are all forceable, searched on
/// the vertices of `r` plus `|H|` fresh ones.
pub fn is_target_forceable(r: &Board, fam: &Family, h: TargetPattern) -> Option<Vec<Edge>> {
    let mut verts: Vec<VertexId> = r.active_vertices().into_iter().collect();
    let n_old = verts.len();
    verts.extend(r.fresh_vertices(h.vertex_count() as usize));
    let n = verts.len();
    let mut adj = vec![Vec::new(); n];
    for i in 0..n {
        for j in i + 1..n {
            if is_forceable_edge(r, fam, Edge::between(verts[i], verts[j])) {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    let s = h.size() as usize;
    let mut search = CopySearch { adj: &adj, n_old, used: vec![false; n], path: Vec::new() };
    let found = match h.kind() {
        PatternKind::Path => search.path(s),
        PatternKind::Cycle => search.cycle(s),
    }?;
    let mut edges: Vec<Edge> = found.windows(2).map(|w| Edge::between(verts[w[0]], verts[w[1]])).collect();
    if h.kind() == PatternKind::Cycle {
        edges.push(Edge::between(verts[found[0]], verts[*found.last().unwrap()]));
    }
    Some(edges)
}

/// DFS for a path or cycle in the forceable graph. Fresh vertices (indices
/// `>= n_old`) are interchangeable, so only the lowest unused one is tried.
struct CopySearch<'a> {
    adj: &'a [Vec<usize>],
    n_old: usize,
    used: Vec<bool>,
    path: Vec<usize>,
}

impl CopySearch<'_> {
    fn next_fresh(&self) -> Option<usize> {
        (self.n_old..self.used.len()).find(|&v| !self.used[v])
    }

    fn allowed(&self, v: usize) -> bool {
        !self.used[v] && (v < self.n_old || Some(v) == self.next_fresh())
    }

    fn starts(&self) -> Vec<usize> {
        (0..self.used.len()).filter(|&v| self.allowed(v)).collect()
    }

    fn extend(&mut self, s: usize, close: bool) -> bool {
        if self.path.len() == s {
            return !close || self.adj[*self.path.last().unwrap()].contains(&self.path[0]);
        }
        let last = *self.path.last().unwrap();
        for &u in &self.adj[last] {
            if self.allowed(u) {
                self.used[u] = true;
                self.path.push(u);
                if self.extend(s, close) {
                    return true;
                }
                self.path.pop();
                self.used[u] = false;
            }
        }
        false
    }

    fn run(&mut self, s: usize, close: bool) -> Option<Vec<usize>> {
        for v in self.starts() {
            self.used[v] = true;
            self.path.push(v);
            if self.extend(s, close) {
                return Some(std::mem::take(&mut self.path));
            }
            self.path.pop();
            self.used[v] = false;
        }
        None
    }

    fn path(&mut self, s: usize) -> Option<Vec<usize>> {
        self.run(s, false)
    }

    fn cycle(&mut self, s: usize) -> Option<Vec<usize>> {
        self.run(s, true)
    }
}

/// Endpoints of paths on `k` vertices in the red graph of `r`.
pub fn pk_endpoints(r: &Board, k: usize) -> BTreeSet<VertexId> {
    r.active_vertices()
        .into_iter()
        .filter(|&v| r.degree(v, Color::Red) > 0 || k <= 1)
        .filter(|&v| longest_path_from(r, Color::Red, v, k) >= k)
        .collect()
}

fn endpoint_set(r: &Board, fam: &Family) -> BTreeSet<VertexId> {
    match fam.path_bound {
        Some(k) => pk_endpoints(r, k as usize),
        None => BTreeSet::new(),
    }
}

/// Fewest red edges in a family-free graph without isolated vertices from
/// which `h` can be forced, searching graphs with at most `max_edges` edges.
pub fn min_scaffolding_size(fam: &Family, h: TargetPattern, max_edges: usize) -> Option<(usize, ScaffoldingCertificate)> {
    let f = fam.clone();
    let keep = move |g: &crate::enumerate::SmallGraph| edges_family_free(g.n, &g.edges, &f);
    for (m, level) in levels(keep).take(max_edges + 1).enumerate() {
        for g in level {
            let r = g.to_board(Color::Red);
            if let Some(copy) = is_target_forceable(&r, fam, h) {
                let cert = ScaffoldingCertificate {
                    endpoint_set: endpoint_set(&r, fam),
                    r,
                    family: fam.clone(),
                    target: h,
                    forced_copy: copy,
                };
                return Some((m, cert));
            }
        }
    }
    None
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundsError {
    #[error("not applicable: {0}")]
    NotApplicable(String),
}

/// `|R| + |X|` for a `P_{k+1}`-free forest and the inequalities that apply.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForestReport {
    pub k: usize,
    pub edges: usize,
    pub order: usize,
    pub endpoints: usize,
    /// `4m`, `5m/2` or `2m` depending on `k`.
    #[serde(serialize_with = "ser_display")]
    pub general_bound: Q,
    /// `2m - k + 4`, when `k >= 4` and some added edge creates a `P_{k+1}`.
    #[serde(serialize_with = "ser_opt_display")]
    pub strengthened_bound: Option<Q>,
    /// Every tree component containing a `P_k` meets `|T| + |X_T| <= 2 e(T) - k + 4`.
    pub trees_ok: bool,
}

impl ForestReport {
    pub fn total(&self) -> usize {
        self.order + self.endpoints
    }

    pub fn bound(&self) -> Q {
        self.strengthened_bound.map_or(self.general_bound, |s| s.min(self.general_bound))
    }

    pub fn slack(&self) -> Q {
        self.bound() - q(self.total() as i64)
    }

    pub fn holds(&self) -> bool {
        self.trees_ok && self.slack() >= q(0)
    }
}

fn components(r: &Board) -> Vec<BTreeSet<VertexId>> {
    let mut out: Vec<BTreeSet<VertexId>> = Vec::new();
    let mut seen = BTreeSet::new();
    for v in r.active_vertices() {
        if !seen.insert(v) {
            continue;
        }
        let mut comp = BTreeSet::from([v]);
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            for (w, _) in r.incident(u) {
                if seen.insert(*w) {
                    comp.insert(*w);
                    stack.push(*w);
                }
            }
        }
        out.push(comp);
    }
    out
}

/// Evaluate the forest inequalities on the red graph of `r`.
pub fn check_forest_bounds(r: &Board, k: usize) -> Result<ForestReport, BoundsError> {
    if k < 2 {
        return Err(BoundsError::NotApplicable("k must be at least 2".into()));
    }
    if r.edges().any(|(_, c)| c == Color::Blue) {
        return Err(BoundsError::NotApplicable("R must be red only".into()));
    }
    if !is_family_free(r, Color::Red, &Family::path_forest(k as u32)) {
        return Err(BoundsError::NotApplicable(format!("R is not a P{}-free forest", k + 1)));
    }
    let m = r.edge_count();
    let x = pk_endpoints(r, k);
    let order = r.active_vertices().len();
    let mi = m as i64;
    let general_bound = match k {
        2 => q(4 * mi),
        3 => frac(5 * mi, 2),
        _ => q(2 * mi),
    };
    let trees_ok = components(r).iter().all(|comp| {
        let xs = comp.iter().filter(|v| x.contains(v)).count();
        let ms = comp.len() - 1;
        xs == 0 || (comp.len() + xs) as i64 <= 2 * ms as i64 - k as i64 + 4
    });
    let strengthened_bound = (k >= 4 && can_reach_long_path(r, k)).then(|| q(2 * mi - k as i64 + 4));
    Ok(ForestReport { k, edges: m, order, endpoints: x.len(), general_bound, strengthened_bound, trees_ok })
}

/// Is there an edge (possibly to a fresh vertex) whose addition creates a `P_{k+1}`?
fn can_reach_long_path(r: &Board, k: usize) -> bool {
    if !pk_endpoints(r, k).is_empty() {
        return true;
    }
    let vs: Vec<VertexId> = r.active_vertices().into_iter().collect();
    let base: Vec<Edge> = r.edges_of(Color::Red).collect();
    let n = r.vertex_bound();
    vs.iter().enumerate().any(|(i, &a)| {
        vs[i + 1..].iter().any(|&b| {
            let e = Edge::between(a, b);
            if r.contains(e) {
                return false;
            }
            let mut edges = base.clone();
            edges.push(e);
            edges_longest_path(n, &edges) > k
        })
    })
}

/// Shape parameters of the blue target.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TargetShape {
    pub max_degree: u32,
    pub edges: u32,
    pub vertices: u32,
    pub connected: bool,
    /// Needed only for the diagonal vertex-cover bound.
    pub vertex_cover: Option<u32>,
}

impl TargetShape {
    pub fn of(t: TargetPattern) -> Self {
        TargetShape {
            max_degree: t.max_degree(),
            edges: t.edge_count(),
            vertices: t.vertex_count(),
            connected: true,
            vertex_cover: Some(vertex_cover_number(&t.edges()) as u32),
        }
    }

    fn is_path(&self) -> bool {
        self.connected && self.vertices == self.edges + 1 && self.max_degree <= 2
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub name: String,
    #[serde(serialize_with = "ser_display")]
    pub value: Q,
    pub witness: Option<ScaffoldingCertificate>,
}

impl BoundReport {
    fn formula(name: &str, value: Q) -> Self {
        BoundReport { name: name.to_string(), value, witness: None }
    }

    /// The bound as a round count.
    pub fn rounds(&self) -> i64 {
        self.value.ceil().to_integer()
    }
}

/// Every closed-form lower bound on the game (red `P_{k+1}`, blue `H`) that
/// applies to `h`, as exact rationals.
pub fn lower_bound_formulas(k: u32, h: TargetShape) -> Vec<BoundReport> {
    assert!(k >= 2, "red path needs k >= 2");
    let (k, d, l, n) = (k as i64, h.max_degree as i64, h.edges as i64, h.vertices as i64);
    let mut out = vec![BoundReport::formula("trivial", q(k + l - 1))];
    let forest = match k {
        2 => frac((2 * d + 1) * l, 2 * d),
        3 => frac((5 * d + 4) * l, 5 * d),
        _ => frac((d + 1) * l, d),
    };
    out.push(BoundReport::formula("forest-scaffolding", forest));
    if h.connected && k >= 4 {
        let extra = (frac(k, 2) - 2).min(q(n - 1));
        out.push(BoundReport::formula("forest-scaffolding-connected", frac((d + 1) * l, d) + extra));
    }
    if h.is_path() {
        out.push(BoundReport::formula("path-pair", q(k + l - 1)));
        if k == 3 && l >= 3 {
            out.push(BoundReport::formula("p4-scaffolding", frac(7 * l + 2, 5)));
        }
        if l == k {
            // G = H = P_{k+1}: beta = floor((k+1)/2), max degree 2
            let beta = h.vertex_cover.map_or((k + 1) / 2, i64::from);
            out.push(BoundReport::formula("vertex-cover", frac(beta, 2) + k));
        }
    }
    out
}

/// The largest entry of [`lower_bound_formulas`].
pub fn best_lower_bound(k: u32, h: TargetShape) -> BoundReport {
    lower_bound_formulas(k, h).into_iter().max_by(|a, b| a.value.cmp(&b.value)).expect("trivial bound is always present")
}

/// `|H| + e(H) - 1` for any red cycle and connected `H`.
pub fn red_cycle_lower_bound(h: TargetShape) -> Option<BoundReport> {
    h.connected.then(|| BoundReport::formula("cycle-scaffolding", q(h.vertices as i64 + h.edges as i64 - 1)))
}

/// `m + e(H)` from a minimum scaffolding, with the certificate as witness.
pub fn scaffolding_lower_bound(fam: &Family, h: TargetPattern, max_edges: usize) -> Option<BoundReport> {
    let (m, cert) = min_scaffolding_size(fam, h, max_edges)?;
    Some(BoundReport { name: format!("scaffolding {fam}"), value: q((m + h.edge_count() as usize) as i64), witness: Some(cert) })
}

/// Smallest vertex set touching every edge, by exhaustive search.
pub fn vertex_cover_number(edges: &[Edge]) -> usize {
    let vs: Vec<VertexId> = edges.iter().flat_map(|e| e.endpoints()).collect::<BTreeSet<_>>().into_iter().collect();
    assert!(vs.len() <= 24, "vertex cover search is exponential");
    let idx = |v: VertexId| vs.iter().position(|&x| x == v).unwrap();
    let masks: Vec<u32> = edges.iter().map(|e| (1 << idx(e.lo())) | (1 << idx(e.hi()))).collect();
    (0u32..1 << vs.len())
        .filter(|s| masks.iter().all(|m| s & m != 0))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap_or(0)
}
