//! Strategies against a red `P3`: blue paths and blue cycles.

use crate::board::{Color, VertexId};
use crate::play::{frac, q, Halt, Play};

use super::gadgets::AnchoredPath;

/// Result of [`building_block`] and [`main_work`] that did not end the game.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum P3Block {
    /// A blue path (vertex list).
    Blue(Vec<VertexId>),
    /// A blue path with an endpoint on a red edge.
    Anchored(AnchoredPath),
}

/// Grow a blue path greedily on fresh vertices, repairing the first red reply.
///
/// Returns a blue `P_q` after `q - 1` rounds, or an anchored blue `P_t`
/// (`4 <= t <= q - 1`) after exactly `t` rounds.
pub fn building_block(g: &mut Play, qv: usize) -> Result<P3Block, Halt> {
    assert!(qv >= 5, "building block needs q >= 5");
    let start = g.rounds();
    let mut x = vec![g.fresh()];
    while x.len() < qv {
        let i = x.len();
        let xi = x[i - 1];
        let next = g.fresh_avoiding(&x);
        if g.propose(xi, next)? == Color::Blue {
            x.push(next);
            continue;
        }
        let out = match i {
            1 | 2 => {
                let v = g.fresh();
                g.force_blue(xi, v, "red P3 through x_i")?;
                g.force_blue(v, next, "red P3 through x_{i+1}")?;
                if i == 1 {
                    let w = g.fresh();
                    g.force_blue(next, w, "red P3 x1 x2 w")?;
                    AnchoredPath { path: vec![xi, v, next, w], outside: next }
                } else {
                    AnchoredPath { path: vec![next, v, xi, x[0]], outside: xi }
                }
            }
            3 => {
                g.force_blue(next, x[0], "red P3 x3 x4 x1")?;
                AnchoredPath { path: vec![x[2], x[1], x[0], next], outside: next }
            }
            _ => AnchoredPath { path: x.iter().rev().copied().collect(), outside: next },
        };
        let t = out.path.len() as i64;
        let used = g.check_cost(start, q(t), "building block")?;
        g.invariant(used as i64 == t && (4..qv as i64).contains(&t), || {
            format!("building block returned P{t} after {used} rounds")
        })?;
        return Ok(P3Block::Anchored(out));
    }
    g.check_cost(start, q(qv as i64 - 1), "building block")?;
    Ok(P3Block::Blue(x))
}

/// Chain building blocks into an anchored blue `P_t` with `ell - 3 <= t <= ell`
/// within `5t/4 - 1` rounds, or a blue `P_{ell+1}` within `5 ell/4 - 1`.
pub fn main_work(g: &mut Play, ell: usize) -> Result<P3Block, Halt> {
    assert!(ell >= 4, "main work needs ell >= 4");
    let start = g.rounds();
    let mut cur = match building_block(g, ell + 1)? {
        P3Block::Blue(p) => {
            g.check_cost(start, frac(5 * ell as i64, 4) - 1, "main work")?;
            return Ok(P3Block::Blue(p));
        }
        P3Block::Anchored(a) => a,
    };
    loop {
        let t = cur.path.len();
        g.check_cost(start, frac(5 * t as i64, 4) - 1, "main work")?;
        if t + 3 >= ell {
            return Ok(P3Block::Anchored(cur));
        }
        let v1 = cur.b();
        let vt = cur.a();
        match building_block(g, ell - t + 1)? {
            P3Block::Blue(w) => {
                g.force_blue(w[0], v1, "red P3 w1 v1 u")?;
                let mut full: Vec<VertexId> = w.iter().rev().copied().collect();
                full.extend(&cur.path);
                g.check_cost(start, frac(5 * ell as i64, 4) - 1, "main work")?;
                return Ok(P3Block::Blue(full));
            }
            P3Block::Anchored(w) => {
                g.force_blue(vt, w.b(), "red P3 v_t w1 x")?;
                cur.path.extend(&w.path);
            }
        }
    }
}

/// `r(P3, P_{ell+1}) <= ceil(5 ell / 4)`.
pub fn p3_path(g: &mut Play, ell: usize) -> Result<(), Halt> {
    match ell {
        0 | 1 => panic!("p3-path needs ell >= 2"),
        2 => return p3_p3(g),
        3 => return p3_p4(g),
        _ => {}
    }
    let mut path = match main_work(g, ell)? {
        P3Block::Blue(_) => return Err(g.claim_failed("main work produced a long blue path")),
        P3Block::Anchored(a) => a.path,
    };
    loop {
        let n = path.len();
        let vn = *path.last().unwrap();
        if n == ell {
            let v0 = g.fresh();
            return Err(g.closing(v0, path[0], "red P3 v0 v1 u or blue P_{ell+1}"));
        }
        let x = g.fresh();
        if g.propose(vn, x)? == Color::Blue {
            path.push(x);
            continue;
        }
        // red v_n x: fill the missing length around x
        let w = g.fresh();
        match ell - n {
            1 => {
                g.force_blue(vn, w, "red P3 x v w")?;
                return Err(g.closing(w, x, "red P3 through x or blue P_{ell+1}"));
            }
            2 => {
                g.force_blue(vn, w, "red P3 x v w")?;
                g.force_blue(w, x, "red P3 w x v")?;
                let y = g.fresh();
                return Err(g.closing(x, y, "red P3 v x y or blue P_{ell+1}"));
            }
            3 => {
                let v0 = g.fresh_avoiding(&[w]);
                g.force_blue(v0, path[0], "red P3 at the anchor")?;
                g.force_blue(vn, w, "red P3 x v w")?;
                g.force_blue(w, x, "red P3 w x v")?;
                let y = g.fresh();
                return Err(g.closing(x, y, "red P3 v x y or blue P_{ell+1}"));
            }
            d => return Err(g.claim_failed(format!("main work left a gap of {d}"))),
        }
    }
}

/// Three rounds for (P3, P3).
fn p3_p3(g: &mut Play) -> Result<(), Halt> {
    let [a, b, c, d] = g.fresh_n::<4>();
    let first = g.propose(a, b)?;
    let second = g.propose(b, c)?;
    if first == second {
        return Err(g.claim_failed("two equal colors at b"));
    }
    Err(g.closing(b, d, "b already has a red and a blue edge"))
}

/// Four rounds for (P3, P4).
fn p3_p4(g: &mut Play) -> Result<(), Halt> {
    let [a, b, c, d] = g.fresh_n::<4>();
    if g.propose(a, b)? == Color::Red {
        g.force_blue(b, c, "red P3 a b c")?;
        g.force_blue(a, c, "red P3 b a c")?;
        return Err(g.closing(a, d, "red P3 b a d or blue P4 d a c b"));
    }
    if g.propose(b, c)? == Color::Blue {
        if g.propose(c, d)? == Color::Blue {
            return Err(g.claim_failed("blue P4 a b c d"));
        }
        return Err(g.closing(a, d, "red P3 c d a or blue P4 d a b c"));
    }
    if g.propose(b, d)? == Color::Red {
        return Err(g.claim_failed("red P3 c b d"));
    }
    Err(g.closing(c, a, "red P3 b c a or blue P4 c a b d"))
}

/// `r(P3, C_ell) <= ceil(5 ell / 4)` for `ell >= 5`.
pub fn p3_cycle(g: &mut Play, ell: usize) -> Result<(), Halt> {
    assert!(ell >= 5, "p3-cycle needs ell >= 5");
    let mut path = match main_work(g, ell - 1)? {
        P3Block::Blue(p) => {
            let (v1, vl) = (p[0], p[ell - 1]);
            if g.propose(vl, v1)? == Color::Blue {
                return Err(g.claim_failed("blue cycle v1..v_ell"));
            }
            g.force_blue(v1, p[2], "red P3 v_ell v1 v3")?;
            return Err(g.closing(vl, p[1], "red P3 v1 v_ell v2 or blue cycle"));
        }
        P3Block::Anchored(a) => a.path,
    };
    loop {
        let t = path.len();
        let v1 = path[0];
        let vt = *path.last().unwrap();
        match ell - t {
            1 => {
                let w = g.fresh();
                if g.propose(vt, w)? == Color::Blue {
                    return Err(g.closing(w, v1, "red P3 at the anchor or blue cycle"));
                }
                let x = g.fresh();
                g.force_blue(vt, x, "red P3 w v x")?;
                return Err(g.closing(x, v1, "red P3 at the anchor or blue cycle"));
            }
            2 | 3 => {
                let w = g.fresh();
                if g.propose(vt, w)? == Color::Blue {
                    path.push(w);
                    continue;
                }
                let x = g.fresh();
                g.force_blue(vt, x, "red P3 w v x")?;
                g.force_blue(x, w, "red P3 x w v")?;
                if ell - t == 2 {
                    return Err(g.closing(w, v1, "red P3 at the anchor or blue cycle"));
                }
                let y = g.fresh();
                g.force_blue(w, y, "red P3 v w y")?;
                return Err(g.closing(y, v1, "red P3 at the anchor or blue cycle"));
            }
            4 => {
                let [mut w, x, mut y] = g.fresh_n::<3>();
                let wx = g.propose(w, x)?;
                let xy = g.propose(x, y)?;
                match (wx, xy) {
                    (Color::Red, Color::Red) => return Err(g.claim_failed("red P3 w x y")),
                    (Color::Blue, Color::Blue) => {
                        if g.propose(vt, w)? == Color::Blue {
                            path.extend([w, x, y]);
                            continue;
                        }
                        let z = g.fresh();
                        g.force_blue(vt, z, "red P3 w v z")?;
                        g.force_blue(z, w, "red P3 z w v")?;
                        return Err(g.closing(y, v1, "red P3 at the anchor or blue cycle"));
                    }
                    _ => {
                        if wx == Color::Blue {
                            std::mem::swap(&mut w, &mut y);
                        }
                        let z = g.fresh();
                        g.force_blue(vt, w, "red P3 v w x")?;
                        g.force_blue(w, z, "red P3 x w z")?;
                        g.force_blue(z, x, "red P3 z x w")?;
                        return Err(g.closing(y, v1, "red P3 at the anchor or blue cycle"));
                    }
                }
            }
            d => return Err(g.claim_failed(format!("main work left a gap of {d}"))),
        }
    }
}

/// `r(P3, C3) = 5` and `r(P3, C4) = 6`.
pub fn p3_small_cycle(g: &mut Play, ell: usize) -> Result<(), Halt> {
    match ell {
        3 => {
            let [u, v, w, x] = g.fresh_n::<4>();
            let mut leaves = [v, w, x];
            let colors = [g.propose(u, v)?, g.propose(u, w)?, g.propose(u, x)?];
            let reds = colors.iter().filter(|c| **c == Color::Red).count();
            if reds == 0 {
                if g.propose(v, w)? == Color::Blue {
                    return Err(g.claim_failed("blue triangle u v w"));
                }
                return Err(g.closing(w, x, "red P3 v w x or blue triangle u w x"));
            }
            if reds > 1 {
                return Err(g.claim_failed("two red edges at u"));
            }
            // put the red leaf first
            let r = colors.iter().position(|c| *c == Color::Red).unwrap();
            leaves.swap(0, r);
            let [_, w, x] = leaves;
            let y = g.fresh();
            if g.propose(x, y)? == Color::Red {
                return Err(g.closing(w, x, "red P3 w x y or blue triangle u w x"));
            }
            Err(g.closing(y, u, "red P3 y u v or blue triangle u x y"))
        }
        4 => {
            let vs = g.fresh_n::<4>();
            for i in 0..4 {
                for j in i + 1..4 {
                    g.propose(vs[i], vs[j])?;
                }
            }
            Err(g.claim_failed("every coloring of K4 has a red P3 or a blue C4"))
        }
        _ => panic!("p3-smallcycle takes ell = 3 or 4"),
    }
}
