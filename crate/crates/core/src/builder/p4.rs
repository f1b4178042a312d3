//! `r(P4, P_{ell+1}) <= (7 ell + 52) / 5`: grow a tracked structure until
//! the two blue paths can be joined.

use crate::board::{Color, Edge};
use crate::play::{frac, Halt, Play};

use super::appendix::{extend_with_blue_pair, extend_with_red_pair, find_type_a, join_paths, FindA, RedPair};
use super::gadgets::{AnchoredPath, TrackedStructure};

/// Claimed round bound for (P4, P_{ell+1}).
pub fn p4_bound(ell: usize) -> u32 {
    ((7 * ell + 52) / 5) as u32
}

fn startup(g: &mut Play, ell: usize) -> Result<AnchoredPath, Halt> {
    let [u, v] = g.fresh_n::<2>();
    let q0 = if g.propose(u, v)? == Color::Blue {
        match find_type_a(g, Edge::between(u, v), ell)? {
            FindA::Blue(_) => return Err(g.claim_failed("blue path of length ell")),
            FindA::TypeA(ta) => AnchoredPath { path: ta.s, outside: ta.x },
        }
    } else {
        let x = g.fresh();
        if g.propose(v, x)? == Color::Blue {
            AnchoredPath { path: vec![v, x], outside: u }
        } else {
            let [t, w] = g.fresh_n::<2>();
            g.force_blue(t, u, "red P4 t u v x")?;
            g.force_blue(u, w, "red P4 x v u w")?;
            g.force_blue(w, x, "red P4 w x v u")?;
            AnchoredPath { path: vec![x, w, u, t], outside: v }
        }
    };
    let n = q0.len() as i64;
    g.check_cost(0, frac(7 * n + 4, 5), "startup")?;
    g.invariant(n >= 1 && (n as usize) < ell, || format!("startup produced q0 = {n}"))?;
    Ok(q0)
}

/// Checks the loop invariants: a valid structure with `q > 0`, `q + r <= ell + 4`,
/// at most one spare of each color, and the round budget.
fn check_loop(g: &mut Play, s: &TrackedStructure, ell: usize) -> Result<(), Halt> {
    g.stats.invariant_checks += 1;
    if let Err(e) = s.validate(g.board()) {
        return Err(g.fault(crate::play::FaultKind::InvariantViolated(format!("structure: {e}"))));
    }
    let (qn, rn) = (s.q_len(), s.r_len());
    g.invariant(qn > 0, || "Q became trivial".into())?;
    g.invariant(qn + rn <= ell + 4, || format!("q + r = {} exceeds ell + 4", qn + rn))?;
    g.invariant(s.n_blue() <= 1 && s.n_red() <= 1, || {
        format!("{} blue and {} red spares carried over", s.n_blue(), s.n_red())
    })?;
    let budget = frac(7 * (qn + rn) as i64 + 4, 5) + (s.n_blue() + s.n_red()) as i64;
    g.check_cost(0, budget, "structure budget")?;
    Ok(())
}

/// Join `Q` and `R`, then keep appending single vertices until the game ends.
fn finish_by_joining(g: &mut Play, s: &TrackedStructure) -> Halt {
    let mut qp = s.q.clone();
    let mut r = s.r.clone();
    loop {
        match join_paths(g, &qp, &r) {
            Ok(next) => qp = next,
            Err(h) => return h,
        }
        r.clear();
    }
}

pub fn p4_path(g: &mut Play, ell: usize) -> Result<(), Halt> {
    assert!(ell >= 1, "p4-path needs ell >= 1");
    let q0 = startup(g, ell)?;
    let mut s = TrackedStructure { q: q0, r: Vec::new(), spare_blue: Vec::new(), spare_red: Vec::new() };
    loop {
        check_loop(g, &s, ell)?;
        let total = s.q_len() + s.r_len();
        if total + 1 >= ell {
            let qp = join_paths(g, &s.q, &s.r)?;
            return Err(g.claim_failed(format!("joined path of length {} is not long enough", qp.len())));
        }
        if total + 10 > ell {
            return Err(finish_by_joining(g, &s));
        }
        let m = ell - total - 1;
        while s.n_blue() < 2 && s.n_red() < 2 {
            let [a, b] = g.fresh_n::<2>();
            match g.propose(a, b)? {
                Color::Blue => s.spare_blue.push(Edge::between(a, b)),
                Color::Red => s.spare_red.push(Edge::between(a, b)),
            }
        }
        let before = total;
        if s.n_blue() == 2 {
            s = extend_with_blue_pair(g, &s, m)?.structure;
        } else {
            let mut next = s.clone();
            next.spare_red.clear();
            match extend_with_red_pair(g, &s, m)? {
                RedPair::ExtendQ(qp) => next.q = qp,
                RedPair::ExtendR { r, .. } => next.r = r,
                RedPair::LongR(r) => {
                    next.r = r;
                    return Err(finish_by_joining(g, &next));
                }
            }
            s = next;
        }
        g.invariant(s.q_len() + s.r_len() > before, || "no progress in the main loop".into())?;
    }
}
