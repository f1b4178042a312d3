mod common;

use common::{has_cycle, has_pattern, subsets};
use ramsey_core::bounds::{
    best_lower_bound, check_forest_bounds, is_target_forceable, min_scaffolding_size, pk_endpoints,
    scaffolding_lower_bound, TargetShape,
};
use ramsey_core::enumerate::family_free_graphs;
use ramsey_core::harness::paper_bounds;
use ramsey_core::{solve, Board, Color, Edge, Family, GameGoal, PatternKind, SolveConfig, TargetPattern, VertexId};

type Pairs = Vec<(VertexId, VertexId)>;

fn free(edges: &[(VertexId, VertexId)], fam: &Family) -> bool {
    if fam.acyclic && has_cycle(edges) {
        return false;
    }
    if let Some(k) = fam.path_bound {
        if has_pattern(edges, TargetPattern::p(k + 1)) {
            return false;
        }
    }
    fam.cycles.iter().all(|&l| !has_pattern(edges, TargetPattern::c(l)))
}

/// Brute force: some red graph with exactly `m` edges on at most `2m`
/// labelled vertices forces `h`.
fn brute_scaffolding_exists(fam: &Family, h: TargetPattern, m: usize) -> bool {
    let n = (2 * m) as VertexId;
    let all: Pairs = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let s = h.size() as usize;
    subsets(&all, m).into_iter().any(|r| {
        if !free(&r, fam) {
            return false;
        }
        let total = n + s as VertexId;
        let forceable = |a: VertexId, b: VertexId| {
            let (a, b) = (a.min(b), a.max(b));
            if r.contains(&(a, b)) {
                return false;
            }
            let mut more = r.clone();
            more.push((a, b));
            !free(&more, fam)
        };
        // any copy: a sequence of distinct vertices with forceable consecutive pairs
        fn search(path: &mut Vec<VertexId>, total: VertexId, s: usize, cycle: bool, f: &dyn Fn(VertexId, VertexId) -> bool) -> bool {
            if path.len() == s {
                return !cycle || f(path[0], path[s - 1]);
            }
            for v in 0..total {
                if !path.contains(&v) && (path.is_empty() || f(*path.last().unwrap(), v)) {
                    path.push(v);
                    if search(path, total, s, cycle, f) {
                        return true;
                    }
                    path.pop();
                }
            }
            false
        }
        search(&mut Vec::new(), total, s, h.kind() == PatternKind::Cycle, &forceable)
    })
}

fn min_size(fam: &str, h: &str) -> usize {
    let fam: Family = fam.parse().unwrap();
    let h: TargetPattern = h.parse().unwrap();
    let (m, cert) = min_scaffolding_size(&fam, h, 8).expect("a scaffolding within 8 edges");
    cert.verify().unwrap();
    assert_eq!(cert.r.edge_count(), m);
    m
}

#[test]
fn forest_scaffolding_for_paths() {
    let sizes: Vec<usize> = (3..=6).map(|s| min_size("acyclic", &format!("P{s}"))).collect();
    // two forceable edges at a vertex need a tree on four vertices
    assert_eq!(sizes, vec![3, 3, 4, 5]);
}

#[test]
fn single_cycle_scaffolding_for_p3() {
    for l in 3..=6 {
        assert_eq!(min_size(&format!("C{l}"), "P3"), l);
    }
}

#[test]
fn c4_scaffolding_for_p4() {
    assert_eq!(min_size("C4", "P4"), 5);
}

#[test]
fn matching_scaffolding_for_long_paths() {
    for ell in [4usize, 8] {
        let m = min_size("P3+acyclic", &format!("P{}", ell + 1));
        assert_eq!(m + ell, (5 * ell).div_ceil(4));
    }
}

#[test]
fn minima_agree_with_labelled_brute_force() {
    for (fam, h, m) in [("acyclic", "P3", 3), ("acyclic", "P4", 3), ("C3", "P3", 3), ("C4", "P3", 4), ("P3+acyclic", "P5", 1)] {
        let fam: Family = fam.parse().unwrap();
        let h: TargetPattern = h.parse().unwrap();
        assert!(brute_scaffolding_exists(&fam, h, m), "{fam} {h} {m}");
        assert!((1..m).all(|smaller| !brute_scaffolding_exists(&fam, h, smaller)), "{fam} {h} below {m}");
    }
}

#[test]
fn nothing_is_forceable_from_an_empty_red_graph() {
    assert!(is_target_forceable(&Board::new(), &Family::all_cycles(), TargetPattern::p(2)).is_none());
}

fn brute_endpoints(r: &Pairs, k: usize) -> Vec<VertexId> {
    let n = r.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0);
    (0..n)
        .filter(|&v| r.iter().any(|&(a, b)| a == v || b == v))
        .filter(|&v| {
            fn walk(r: &Pairs, path: &mut Vec<VertexId>, k: usize) -> bool {
                if path.len() == k {
                    return true;
                }
                let last = *path.last().unwrap();
                let next: Vec<VertexId> = r
                    .iter()
                    .filter_map(|&(a, b)| if a == last { Some(b) } else if b == last { Some(a) } else { None })
                    .collect();
                for u in next {
                    if !path.contains(&u) {
                        path.push(u);
                        if walk(r, path, k) {
                            return true;
                        }
                        path.pop();
                    }
                }
                false
            }
            walk(r, &mut vec![v], k)
        })
        .collect()
}

#[test]
fn forest_bounds_on_all_small_forests() {
    for k in 2..=5usize {
        let mut count = 0;
        for level in family_free_graphs(&Family::path_forest(k as u32), 8).into_iter().skip(1) {
            for g in level {
                let r = g.to_board(Color::Red);
                let rep = check_forest_bounds(&r, k).unwrap();
                assert!(rep.holds(), "k = {k}, {:?}: {rep:?}", g.edges);
                // independent recount of |R| + |X|
                let pairs: Pairs = g.edges.iter().map(|e| (e.lo(), e.hi())).collect();
                let x = brute_endpoints(&pairs, k);
                assert_eq!(rep.endpoints, x.len());
                assert_eq!(pk_endpoints(&r, k).into_iter().collect::<Vec<_>>(), x);
                assert_eq!(rep.order, g.n);
                let m = g.edges.len() as i64;
                let general = match k {
                    2 => 8 * m,
                    3 => 5 * m,
                    _ => 4 * m,
                };
                assert!(2 * (rep.total() as i64) <= general, "general bound, k = {k}, {:?}", g.edges);
                count += 1;
            }
        }
        assert!(count > 0);
    }
}

#[test]
fn forest_bounds_reject_non_forests() {
    let tri = Board::from_edges([(0, 1), (1, 2), (0, 2)].map(|(a, b)| (Edge::between(a, b), Color::Red))).unwrap();
    assert!(check_forest_bounds(&tri, 3).is_err());
    let long = Board::from_edges([(0, 1), (1, 2), (2, 3)].map(|(a, b)| (Edge::between(a, b), Color::Red))).unwrap();
    assert!(check_forest_bounds(&long, 2).is_err());
}

#[test]
fn closed_forms_reproduce_the_published_lower_bounds() {
    for ell in 2..=12u32 {
        let b = best_lower_bound(2, TargetShape::of(TargetPattern::p(ell + 1)));
        assert_eq!(b.rounds(), (5 * ell).div_ceil(4) as i64, "P3 vs P{}", ell + 1);
    }
    for ell in 3..=12u32 {
        let b = best_lower_bound(3, TargetShape::of(TargetPattern::p(ell + 1)));
        let goal = GameGoal::new(TargetPattern::p(4), TargetPattern::p(ell + 1));
        assert_eq!(b.rounds() as u32, paper_bounds(goal).unwrap().0, "P4 vs P{}", ell + 1);
    }
}

#[test]
fn lower_bounds_never_exceed_solved_values() {
    for (red, blue, k) in [("P3", "P4", 2u32), ("P3", "P5", 2), ("P3", "P6", 2), ("P4", "P3", 3), ("P4", "P4", 3)] {
        let goal = GameGoal::new(red.parse().unwrap(), blue.parse().unwrap());
        let v = solve(&SolveConfig::new(goal, 9)).unwrap().value.exact().unwrap() as i64;
        assert!(best_lower_bound(k, TargetShape::of(goal.blue)).rounds() <= v, "{goal}");
        let fam = Family::path_forest(k);
        let scaf = scaffolding_lower_bound(&fam, goal.blue, 6).unwrap();
        assert!(scaf.rounds() <= v, "{goal}: scaffolding {}", scaf.rounds());
    }
}
