//! Path-extension lemmas against a red `P4`: joins, type A/B/C gadgets and
//! the two spare-edge corollaries.
//!
//! Every function returns only when the lemma's structural outcome holds;
//! a red `P4` surfaces as `Halt::Won(Red)` from inside `propose`.

use crate::board::{Color, Edge, VertexId};
use crate::play::{frac, q, Halt, Play};

use super::gadgets::{AnchoredPath, TrackedStructure, TypeAPath, TypeBPath, TypeCPath};

fn validated<T>(g: &Play, what: &str, v: T, check: impl FnOnce(&T) -> Result<(), String>) -> Result<T, Halt> {
    match check(&v) {
        Ok(()) => Ok(v),
        Err(e) => Err(g.fault(crate::play::FaultKind::InvariantViolated(format!("{what}: {e}")))),
    }
}

fn rev(p: &[VertexId]) -> Vec<VertexId> {
    p.iter().rev().copied().collect()
}

/// Join the anchored path `q` with the disjoint blue path `r` (empty = a new
/// vertex) into an anchored path of length `e(Q) + e(R) + 1`, in at most 2 rounds.
pub fn join_paths(g: &mut Play, qp: &AnchoredPath, r: &[VertexId]) -> Result<AnchoredPath, Halt> {
    let start = g.rounds();
    let (a, b, c) = (qp.a(), qp.b(), qp.outside);
    let r: Vec<VertexId> = if r.is_empty() { vec![g.fresh()] } else { r.to_vec() };
    let x = r[0];
    let out = if qp.is_trivial() || a == c {
        if g.propose(b, x)? == Color::Blue {
            let mut path = rev(&qp.path);
            path.extend(&r);
            let outside = if qp.is_trivial() { c } else { b };
            AnchoredPath { path, outside }
        } else {
            let y = if r.len() == 1 { g.fresh() } else { *r.last().unwrap() };
            g.force_blue(c, y, "red P4 x b c y")?;
            let mut r_from_y = rev(&r);
            if r.len() == 1 {
                r_from_y = vec![y];
            }
            let path = if qp.is_trivial() {
                std::iter::once(c).chain(r_from_y).collect()
            } else {
                qp.path.iter().copied().chain(r_from_y).collect()
            };
            AnchoredPath { path, outside: if qp.is_trivial() { b } else { c } }
        }
    } else if g.propose(a, x)? == Color::Blue {
        let mut path = qp.path.clone();
        path.extend(&r);
        AnchoredPath { path, outside: c }
    } else {
        g.force_blue(b, x, "red P4 c b x a")?;
        let mut path = rev(&qp.path);
        path.extend(&r);
        AnchoredPath { path, outside: x }
    };
    g.check_cost(start, q(2), "join")?;
    let want = qp.len() + r.len();
    validated(g, "join", out, |o| {
        if o.len() != want {
            return Err(format!("length {} instead of {want}", o.len()));
        }
        o.validate(g.board())
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FindA {
    TypeA(TypeAPath),
    /// Blue path of length `m` (vertex list).
    Blue(Vec<VertexId>),
}

/// Extend the blue edge `e` greedily until it reaches length `m` or Painter
/// answers red, giving a type A path.
pub fn find_type_a(g: &mut Play, e: Edge, m: usize) -> Result<FindA, Halt> {
    let start = g.rounds();
    let mut s = vec![e.lo(), e.hi()];
    while s.len() - 1 < m {
        let x = g.fresh();
        if g.propose(x, s[0])? == Color::Red {
            let t = s.len() - 1;
            g.check_cost(start, q(t as i64), "find A")?;
            let a = TypeAPath { x, s };
            return validated(g, "type A", a, |a| a.validate(g.board())).map(FindA::TypeA);
        }
        s.insert(0, x);
    }
    g.check_cost(start, q(m as i64 - 1), "find A")?;
    Ok(FindA::Blue(s))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UseA {
    /// Length `e(Q) + e(S) + 2` after 2 rounds; the spare edge is untouched.
    Short(AnchoredPath),
    /// Length `e(Q) + e(S) + 4` after 4 rounds; the spare edge is consumed.
    Long(AnchoredPath),
}

/// Attach the type A path to `Q`, spending the blue spare edge `f` if needed.
pub fn use_type_a(g: &mut Play, qp: &AnchoredPath, ta: &TypeAPath, f: Edge) -> Result<UseA, Halt> {
    assert!(!qp.is_trivial(), "use A needs a non-trivial Q");
    let start = g.rounds();
    let (a, b, x, y) = (qp.a(), qp.b(), ta.x, ta.y());
    let (v, w) = (f.lo(), f.hi());
    let out = if g.propose(a, x)? == Color::Blue {
        g.force_blue(b, y, "red P4 c b y x")?;
        let path: Vec<VertexId> = std::iter::once(x).chain(rev(&qp.path)).chain(ta.s.iter().copied()).collect();
        UseA::Short(AnchoredPath { path, outside: y })
    } else {
        g.force_blue(a, v, "red P4 y x a v")?;
        g.force_blue(w, y, "red P4 w y x a")?;
        g.force_blue(x, b, "red P4 y x b c")?;
        let path: Vec<VertexId> =
            std::iter::once(x).chain(qp.path.iter().copied()).chain([v, w]).chain(ta.s.iter().copied()).collect();
        UseA::Long(AnchoredPath { path, outside: y })
    };
    let (p, extra, cost) = match &out {
        UseA::Short(p) => (p, 2, 2),
        UseA::Long(p) => (p, 4, 4),
    };
    g.check_cost(start, q(cost), "use A")?;
    let want = qp.len() + ta.len_s() + extra;
    let ok = p.len() == want && p.validate(g.board()).is_ok();
    g.invariant(ok, || format!("use A produced {p:?}, expected length {want}"))?;
    if let UseA::Short(p) = &out {
        let vs = p.vertices();
        g.invariant(!vs.contains(&v) && !vs.contains(&w), || "use A touched the spare edge".into())?;
    }
    Ok(out)
}

/// Outcome of spending two blue spare edges on `Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BluePair {
    pub structure: TrackedStructure,
    pub ell_prime: usize,
}

/// Spend the two blue spares of `s` to extend `Q` by `ell'` using exactly
/// `ell'` rounds (`3 <= ell' <= m + 3`). When `ell' < 5 <= m` the second spare
/// survives and stays in the pool.
pub fn extend_with_blue_pair(g: &mut Play, s: &TrackedStructure, m: usize) -> Result<BluePair, Halt> {
    assert!(s.n_blue() >= 2 && m >= 1, "blue pair needs two blue spares and m >= 1");
    let start = g.rounds();
    let (e, f) = (s.spare_blue[0], s.spare_blue[1]);
    let mut next = s.clone();
    next.spare_blue.clear();
    let (qn, f_kept) = match find_type_a(g, e, m)? {
        FindA::TypeA(ta) => match use_type_a(g, &s.q, &ta, f)? {
            UseA::Short(p) => (p, true),
            UseA::Long(p) => (p, false),
        },
        FindA::Blue(path) => (join_paths(g, &s.q, &path)?, true),
    };
    let ell_prime = qn.len() - s.q.len();
    g.check_cost(start, q(ell_prime as i64), "blue pair")?;
    g.invariant(ell_prime <= m + 3 && (m < 2 || ell_prime >= 3), || {
        format!("blue pair gave ell' = {ell_prime} for m = {m}")
    })?;
    next.q = qn;
    if f_kept && ell_prime < 5 {
        next.spare_blue.push(f);
    }
    g.invariant(!(ell_prime < 5 && 5 <= m) || next.n_blue() == 1, || "spare edge lost on a short extension".into())?;
    validated(g, "structure after blue pair", BluePair { structure: next, ell_prime }, |o| {
        o.structure.validate(g.board())
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FindBC {
    TypeB(TypeBPath),
    TypeC(TypeCPath),
}

/// From two independent red edges, a type B path (2 rounds) or an incomplete
/// type C path of length 5 (3 rounds).
pub fn find_bc(g: &mut Play, e: Edge, f: Edge) -> Result<FindBC, Halt> {
    let start = g.rounds();
    let (mut u, mut v, mut x, mut y) = (e.lo(), e.hi(), f.lo(), f.hi());
    let w = g.fresh();
    let vw = g.propose(v, w)?;
    let wx = g.propose(w, x)?;
    match (vw, wx) {
        (Color::Red, Color::Red) => return Err(g.claim_failed("red P4 u v w x")),
        (Color::Red, Color::Blue) => {
            // mirror so that vw is the blue one
            (u, v, x, y) = (y, x, v, u);
        }
        _ => {}
    }
    let out = if g.color(w, x) == Some(Color::Blue) {
        let b = TypeBPath { v: u, w: v, x: w, y: x, z: y };
        FindBC::TypeB(validated(g, "type B", b, |b| b.validate(g.board()))?)
    } else {
        let t = g.fresh();
        g.propose(t, u)?;
        let c = TypeCPath { segments: vec![vec![t, u, v], vec![v, w], vec![w, x, y]] };
        FindBC::TypeC(check_type_c(g, c)?)
    };
    g.check_cost(start, q(3), "find BC")?;
    Ok(out)
}

fn check_type_c(g: &mut Play, c: TypeCPath) -> Result<TypeCPath, Halt> {
    g.stats.type_c_checked += 1;
    g.observe_type_c(&c);
    validated(g, "type C", c, |c| c.validate(g.board()))
}

/// Attach the type B path to `Q`: length `e(Q) + 5` in 3 rounds.
pub fn use_type_b(g: &mut Play, qp: &AnchoredPath, tb: &TypeBPath) -> Result<AnchoredPath, Halt> {
    let start = g.rounds();
    let b = qp.b();
    let TypeBPath { v, w, x, y, z } = *tb;
    g.force_blue(b, v, "red P4 c b v w")?;
    g.force_blue(v, y, "red P4 w v y z")?;
    g.force_blue(w, z, "red P4 v w z y")?;
    let path: Vec<VertexId> = [z, w, x, y, v].into_iter().chain(qp.path.iter().copied()).collect();
    g.check_cost(start, q(3), "use B")?;
    let out = AnchoredPath { path, outside: y };
    let want = qp.len() + 5;
    validated(g, "use B", out, |o| {
        if o.len() != want {
            return Err(format!("length {} instead of {want}", o.len()));
        }
        o.validate(g.board())
    })
}

/// One extension step of an incomplete type C path: two more segments, 3 or 4
/// longer, at a cost equal to the growth.
pub fn extend_type_c_step(g: &mut Play, tc: &TypeCPath) -> Result<TypeCPath, Halt> {
    let start = g.rounds();
    let red_p3 = |g: &Play, s: &[VertexId]| {
        s.len() == 3 && g.color(s[0], s[1]) == Some(Color::Red) && g.color(s[1], s[2]) == Some(Color::Red)
    };
    let t0 = if red_p3(g, tc.seg(tc.k())) { tc.clone() } else { tc.reversed() };
    let mut t = t0;
    let tk = t.seg(t.k()).to_vec();
    g.invariant(red_p3(g, &tk), || "extending a complete type C path".into())?;
    let zk = tk[2];
    let [mut u, v, mut w] = g.fresh_n::<3>();
    let uv = g.propose(u, v)?;
    let vw = g.propose(v, w)?;
    match (uv, vw) {
        (Color::Blue, Color::Blue) => {
            g.force_blue(zk, u, "red P4 x_k y_k z_k u")?;
            t.segments.push(vec![zk, u, v]);
            t.segments.push(vec![v, w]);
        }
        (Color::Red, Color::Red) => {
            let tv = g.fresh();
            g.force_blue(zk, tv, "red P4 x_k y_k z_k t")?;
            g.force_blue(tv, u, "red P4 t u v w")?;
            t.segments.push(vec![zk, tv, u]);
            t.segments.push(vec![u, v, w]);
        }
        _ => {
            if uv == Color::Red {
                std::mem::swap(&mut u, &mut w);
            }
            let x = g.fresh();
            g.force_blue(zk, u, "red P4 x_k y_k z_k u")?;
            g.propose(w, x)?;
            t.segments.push(vec![zk, u, v]);
            t.segments.push(vec![v, w, x]);
        }
    }
    let grown = t.len() - tc.len();
    let used = g.check_cost(start, q(grown as i64), "extend C step")?;
    g.invariant(used as usize == grown && (grown == 3 || grown == 4), || {
        format!("extend C step grew by {grown} using {used} rounds")
    })?;
    check_type_c(g, t)
}

/// Repeat [`extend_type_c_step`] until the path is complete or has `k0` segments.
pub fn extend_type_c(g: &mut Play, t0: &TypeCPath, k0: usize) -> Result<TypeCPath, Halt> {
    assert!(k0 >= 5 && k0 % 2 == 1, "k0 must be odd and at least 5");
    let start = g.rounds();
    let mut t = t0.clone();
    while !t.is_complete(g.board()) && t.k() < k0 {
        t = extend_type_c_step(g, &t)?;
    }
    let grown = t.len() - t0.len();
    g.check_cost(start, q(grown as i64), "extend C")?;
    Ok(t)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UseC {
    /// The new blue path `R'`.
    pub r: Vec<VertexId>,
    /// Which of the four constructions was used (1 = incomplete path).
    pub case: u8,
}

/// Trade a type C path with `k >= 5` segments for a longer blue path `R'`.
pub fn use_type_c(g: &mut Play, tc: &TypeCPath, r: &[VertexId]) -> Result<UseC, Halt> {
    let k = tc.k();
    assert!(k >= 5 && k % 2 == 1, "use C needs odd k >= 5");
    let start = g.rounds();
    let ell = tc.len() as i64;
    let board = g.board();
    let red_p3 = |s: &[VertexId]| {
        s.len() == 3
            && board.color(Edge::between(s[0], s[1])) == Some(Color::Red)
            && board.color(Edge::between(s[1], s[2])) == Some(Color::Red)
    };
    let complete = tc.is_complete(board);
    let t = if !complete {
        if red_p3(tc.seg(1)) { tc.clone() } else { tc.reversed() }
    } else if tc.seg(1).len() == 3 && tc.seg(k).len() == 2 {
        tc.reversed()
    } else {
        tc.clone()
    };
    let n_c = (k - 5) / 2;
    let fresh = board.fresh_vertices(n_c + usize::from(r.is_empty()));
    let (r, cs): (Vec<VertexId>, Vec<VertexId>) =
        if r.is_empty() { (vec![fresh[0]], fresh[1..].to_vec()) } else { (r.to_vec(), fresh) };
    let (a, b) = (r[0], *r.last().unwrap());
    let x = |i: usize| t.seg(i)[0];
    let y = |i: usize| t.seg(i)[1];
    let z = |i: usize| t.seg(i)[2];

    // F1: close the red P3s T_3, T_5, .. through R and the new vertices c_j
    g.force_blue(x(3), a, "red P4 z3 y3 x3 a")?;
    g.force_blue(b, z(3), "red P4 b z3 y3 x3")?;
    let mut s1: Vec<VertexId> = t.seg(2).to_vec();
    s1.extend(&r);
    s1.extend(t.seg(4));
    for (j, i) in (5..k - 1).step_by(2).enumerate() {
        let cj = cs[j];
        g.force_blue(x(i), cj, "red P4 z_i y_i x_i c")?;
        g.force_blue(cj, z(i), "red P4 c z_i y_i x_i")?;
        s1.push(cj);
        s1.extend(t.seg(i + 1));
    }
    // F2: chain the middle vertices
    for i in (3..k - 3).step_by(2) {
        g.force_blue(y(i), y(i + 2), "red P4 z_i y_i y_{i+2} x_{i+2}")?;
    }
    let s2: Vec<VertexId> = (3..k - 1).step_by(2).rev().map(y).collect();

    let t1 = t.seg(1).to_vec();
    let tk = t.seg(k).to_vec();
    let (x1, z1) = (t1[0], *t1.last().unwrap());
    let (xk, zk) = (tk[0], *tk.last().unwrap());
    let (rp, case) = if !complete {
        let y1 = t1[1];
        let u = g.fresh();
        g.force_blue(y1, y(k - 2), "red P4 x1 y1 y_{k-2} z_{k-2}")?;
        g.force_blue(y(3), x1, "red P4 y3 x1 y1 z1")?;
        g.force_blue(x1, u, "red P4 z1 y1 x1 u")?;
        g.force_blue(u, z1, "red P4 u z1 y1 x1")?;
        let rp: Vec<VertexId> = std::iter::once(y1).chain(s2.iter().copied()).chain([x1, u]).chain(s1.iter().copied()).collect();
        (rp, 1)
    } else if t1.len() == 2 && tk.len() == 2 {
        let head: Vec<VertexId> = if k >= 7 {
            if g.propose(y(3), x1)? == Color::Blue {
                s2.clone()
            } else {
                g.force_blue(y(k - 2), x1, "red P4 x3 y3 x1 y_{k-2}")?;
                rev(&s2)
            }
        } else {
            g.stats.k5_branch += 1;
            let u = g.fresh();
            if g.propose(y(3), x1)? == Color::Blue {
                vec![y(3)]
            } else {
                g.force_blue(u, x1, "red P4 u x1 y3 z3")?;
                vec![u]
            }
        };
        let rp: Vec<VertexId> = head.into_iter().chain([x1]).chain(s1.iter().copied()).chain([zk]).collect();
        (rp, 2)
    } else if t1.len() == 2 {
        let yk = tk[1];
        g.force_blue(xk, y(k - 2), "red P4 y_k x_k y_{k-2} x_{k-2}")?;
        g.force_blue(y(3), yk, "red P4 x3 y3 y_k x_k")?;
        let rp: Vec<VertexId> =
            std::iter::once(x1).chain(s1.iter().copied()).chain(s2.iter().copied()).chain([yk, zk]).collect();
        (rp, 3)
    } else {
        let (y1, yk) = (t1[1], tk[1]);
        g.force_blue(yk, z1, "red P4 x_k y_k z1 y1")?;
        g.force_blue(xk, y(k - 2), "red P4 y_k x_k y_{k-2} x_{k-2}")?;
        g.force_blue(y(3), y1, "red P4 z3 y3 y1 z1")?;
        let rp: Vec<VertexId> =
            [zk, yk].into_iter().chain(s1.iter().copied()).chain(s2.iter().copied()).chain([y1, x1]).collect();
        (rp, 4)
    };
    let r_len = r.len() as i64 - 1;
    let gained = rp.len() as i64 - 1 - r_len;
    let ku = k as i64;
    if case == 1 {
        g.check_cost(start, frac(3 * (ku - 1), 2), "use C")?;
        g.invariant(gained == (5 * ku - 7) / 2, || format!("use C case 1 gained {gained}"))?;
    } else {
        g.check_cost(start, frac(7 * gained, 5) - ell, "use C")?;
        g.invariant(gained >= 1 && 2 * gained <= 5 * (ku - 1), || format!("use C gained {gained}"))?;
    }
    let ok = crate::builder::gadgets::check_path(g.board(), &rp, Color::Blue);
    g.invariant(ok.is_ok(), || format!("use C case {case}: {}", ok.unwrap_err()))?;
    Ok(UseC { r: rp, case })
}

/// Outcome of spending two red spare edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RedPair {
    /// `Q` grew by 5 using 5 rounds.
    ExtendQ(AnchoredPath),
    /// `R` grew by `ell'` using at most `7 ell'/5 - 2` rounds.
    ExtendR { r: Vec<VertexId>, ell_prime: usize },
    /// `R` grew by at least `m` using at most `7m/5 + 6` rounds.
    LongR(Vec<VertexId>),
}

/// Least odd integer at least `(2m + 7) / 5`.
pub fn k0_for(m: usize) -> usize {
    let k = (2 * m + 7).div_ceil(5);
    if k.is_multiple_of(2) {
        k + 1
    } else {
        k
    }
}

/// Spend the two red spares of `s` to extend `Q` or `R`.
pub fn extend_with_red_pair(g: &mut Play, s: &TrackedStructure, m: usize) -> Result<RedPair, Halt> {
    assert!(s.n_red() >= 2 && m >= 9, "red pair needs two red spares and m >= 9");
    let start = g.rounds();
    let (e, f) = (s.spare_red[0], s.spare_red[1]);
    let r_len = s.r_len();
    let out = match find_bc(g, e, f)? {
        FindBC::TypeB(tb) => {
            let qn = use_type_b(g, &s.q, &tb)?;
            g.check_cost(start, q(5), "red pair (Q)")?;
            RedPair::ExtendQ(qn)
        }
        FindBC::TypeC(tc) => {
            let k0 = k0_for(m);
            let t = extend_type_c(g, &tc, k0)?;
            let complete = t.is_complete(g.board());
            let uc = use_type_c(g, &t, &s.r)?;
            let gained = uc.r.len() - 1 - r_len;
            if complete {
                g.check_cost(start, frac(7 * gained as i64, 5) - 2, "red pair (R)")?;
                g.invariant((1..=m + 5).contains(&gained), || format!("red pair gained {gained}"))?;
                RedPair::ExtendR { r: uc.r, ell_prime: gained }
            } else {
                g.check_cost(start, frac(7 * m as i64, 5) + 6, "red pair (long R)")?;
                g.invariant(gained >= m, || format!("long R gained only {gained}"))?;
                RedPair::LongR(uc.r)
            }
        }
    };
    Ok(out)
}
