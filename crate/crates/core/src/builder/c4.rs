//! Strategies against a red `C4`.

use crate::board::{Color, VertexId};
use crate::play::{Halt, Play};

/// Eight rounds for (C4, P4). Returns the blue `P4` when the blue target is longer.
pub fn c4_p4(g: &mut Play) -> Result<Vec<VertexId>, Halt> {
    let [u, a, b, c, d] = g.fresh_n::<5>();
    let leaves = [a, b, c, d];
    let mut blue = Vec::new();
    let mut red = Vec::new();
    for v in leaves {
        match g.propose(u, v)? {
            Color::Blue => blue.push(v),
            Color::Red => red.push(v),
        }
    }
    let j = blue.len();
    let mut vs: Vec<VertexId> = blue.into_iter().chain(red).collect();
    if j >= 2 {
        let (v1, v2) = (vs[0], vs[1]);
        let [w, w2] = g.fresh_n::<2>();
        for (x, z) in [(v1, w), (v2, w), (v1, w2), (v2, w2)] {
            if g.propose(x, z)? == Color::Blue {
                let other = if x == v1 { v2 } else { v1 };
                return Ok(vec![z, x, u, other]);
            }
        }
        return Err(g.claim_failed("red C4 v1 w v2 w'"));
    }
    let c12 = g.propose(vs[0], vs[1])?;
    let c13 = g.propose(vs[0], vs[2])?;
    let (v1, v2, v3, v4) = match (c12, c13) {
        (Color::Red, Color::Red) => return Err(g.claim_failed("red C4 u v2 v1 v3")),
        (Color::Blue, Color::Blue) => {
            let (v1, v2, v3, v4) = (vs[0], vs[1], vs[2], vs[3]);
            if g.propose(v2, v4)? == Color::Blue {
                return Ok(vec![v3, v1, v2, v4]);
            }
            if g.propose(v3, v4)? == Color::Blue {
                return Ok(vec![v2, v1, v3, v4]);
            }
            return Err(g.claim_failed("red C4 u v2 v4 v3"));
        }
        (Color::Red, Color::Blue) => {
            vs.swap(1, 2);
            (vs[0], vs[1], vs[2], vs[3])
        }
        (Color::Blue, Color::Red) => (vs[0], vs[1], vs[2], vs[3]),
    };
    if j == 1 {
        if g.propose(v2, v3)? == Color::Blue {
            return Ok(vec![u, v1, v2, v3]);
        }
        if g.propose(v2, v4)? == Color::Blue {
            return Ok(vec![u, v1, v2, v4]);
        }
        return Err(g.claim_failed("red C4 u v3 v2 v4"));
    }
    if g.propose(v2, v3)? == Color::Red {
        return Err(g.claim_failed("red C4 u v1 v3 v2"));
    }
    if g.propose(v3, v4)? == Color::Red {
        return Err(g.claim_failed("red C4 u v1 v3 v4"));
    }
    Ok(vec![v1, v2, v3, v4])
}

/// A blue path on `ell + 1` vertices, or a red `C4`, within `4 ell - 4` rounds.
pub fn c4_path_block(g: &mut Play, ell: usize) -> Result<Vec<VertexId>, Halt> {
    assert!(ell >= 3, "c4-path needs ell >= 3");
    let start = g.rounds();
    let mut p = if ell == 3 { c4_p4(g)? } else { c4_path_block(g, ell - 1)? };
    if ell > 3 {
        let (v1, vl) = (p[0], *p.last().unwrap());
        let [x, y] = g.fresh_n::<2>();
        let mut extended = false;
        for (end, z) in [(v1, x), (vl, x), (v1, y), (vl, y)] {
            if g.propose(end, z)? == Color::Blue {
                if end == v1 {
                    p.insert(0, z);
                } else {
                    p.push(z);
                }
                extended = true;
                break;
            }
        }
        if !extended {
            return Err(g.claim_failed("red C4 v1 x v_ell y"));
        }
    }
    g.check_cost(start, crate::play::q(4 * ell as i64 - 4), "c4 path")?;
    Ok(p)
}

/// `r(C4, P_{ell+1}) <= 4 ell - 4`.
pub fn c4_path(g: &mut Play, ell: usize) -> Result<(), Halt> {
    c4_path_block(g, ell)?;
    Err(g.claim_failed("blue path on ell + 1 vertices"))
}
