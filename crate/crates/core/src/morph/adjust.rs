//! Moving one triangle along the diagonal it rests on while every other
//! right corner keeps its ratio.

use crate::error::{Error, Result};
use crate::rt::{validate_adt, Labeling, Q};
use crate::schnyder::{Color, SchnyderWood};

/// y-coordinate of the top corner of `w`. For `X_g` this is `top_g`.
pub(crate) fn top(tau: &Labeling, t: &SchnyderWood, w: usize, top_g: &Q) -> Q {
    if w == t.roots().green {
        top_g.clone()
    } else if t.is_inner(w) {
        tau.get(t.red(w)).clone()
    } else {
        tau.get(t.roots().red).clone()
    }
}

/// The green parent, with `X_g` standing in for `X_b` and `X_r`.
fn green_parent(t: &SchnyderWood, v: usize) -> Option<usize> {
    let r = t.roots();
    if t.is_inner(v) {
        Some(t.green(v))
    } else if v == r.green {
        None
    } else {
        Some(r.green)
    }
}

pub(crate) fn lambda_in(tau: &Labeling, t: &SchnyderWood, v: usize, top_g: &Q) -> Result<Q> {
    let w = green_parent(t, v).ok_or_else(|| Error::InternalInvariant(format!("ratio undefined for X_g ({v})")))?;
    let base = tau.get(w);
    Ok((tau.get(v) - base) / (top(tau, t, w, top_g) - base))
}

/// Ratio at which the right corner of `v` cuts the diagonal of `v_g`,
/// measured from its bottom. The top of `X_g` is taken to be `tau(X_r)`.
pub fn lambda_ratio(tau: &Labeling, t: &SchnyderWood, v: usize) -> Result<Q> {
    lambda_in(tau, t, v, tau.get(t.roots().red))
}

/// Inner vertices whose right corners lie on the diagonal of `w`, bottom to top.
pub fn diagonal_occupants(t: &SchnyderWood, w: usize) -> Vec<usize> {
    let g = t.graph();
    let r = t.roots();
    let mut occ = if w == r.green {
        g.wedge(w, r.red, r.blue)
    } else if t.is_inner(w) {
        g.wedge(w, t.red(w), t.blue(w))
    } else {
        Vec::new()
    };
    occ.reverse();
    occ
}

/// Whether the left corner of `x` lies on the vertical side of `u`, either
/// through the contact with `x_b` or at a point where it meets the right
/// corner of `x_b` and the top corner of `u`.
fn left_on_blue_vertical(tau: &Labeling, t: &SchnyderWood, x: usize, u: usize) -> bool {
    let xb = t.blue(x);
    xb == u || (t.is_inner(xb) && t.is_inner(u) && t.green(xb) == u && t.red(u) == x && tau.get(xb) == tau.get(x))
}

/// Whether the left corner of `w` already meets the right corner of a red
/// child of `x`, which would be squeezed if `x` moved down to `tau(w)`.
fn bottom_is_occupied(tau: &Labeling, t: &SchnyderWood, x: usize, w: usize) -> bool {
    if !t.is_inner(w) {
        return false;
    }
    let wb = t.blue(w);
    t.is_inner(wb) && t.red(wb) == x && tau.get(wb) == tau.get(w)
}

/// Whether the top corner of `w` already meets the right corner of `w_r`
/// while the left corner of `w_r` lies on the vertical side of `x`, so that
/// moving `x` up to the top of `w` would squeeze `w_r`.
fn top_is_occupied(tau: &Labeling, t: &SchnyderWood, x: usize, w: usize) -> bool {
    if !t.is_inner(w) {
        return false;
    }
    let wr = t.red(w);
    if !t.is_inner(wr) || t.blue(wr) != x {
        return false;
    }
    let wrg = t.green(wr);
    tau.get(wrg) == tau.get(wr) && t.graph().left_third(wrg, wr) == w
}

pub(crate) fn respects_order_in(tau: &Labeling, t: &SchnyderWood, x: usize, y: &Q, top_g: &Q) -> bool {
    if !t.is_inner(x) {
        return false;
    }
    let w = t.green(x);
    let occ = diagonal_occupants(t, w);
    let Some(k) = occ.iter().position(|&v| v == x) else { return false };
    let lower_ok = if k == 0 {
        let base = tau.get(w);
        if w == t.roots().green {
            y > base
        } else {
            y > base || (y == base && !left_on_blue_vertical(tau, t, x, t.blue(w)) && !bottom_is_occupied(tau, t, x, w))
        }
    } else {
        y > tau.get(occ[k - 1])
    };
    let upper_ok = if k + 1 == occ.len() {
        let top_w = top(tau, t, w, top_g);
        (*y < top_w || (*y == top_w && !top_is_occupied(tau, t, x, w))) && y < tau.get(t.red(x))
    } else {
        y < tau.get(occ[k + 1])
    };
    lower_ok && upper_ok
}

/// Whether moving the horizontal side of `x` to `y` keeps the right corners
/// on the diagonal of `x_g` in order and off its end points where that
/// would create a forbidden contact.
pub fn respects_order(tau: &Labeling, t: &SchnyderWood, x: usize, y: &Q) -> bool {
    respects_order_in(tau, t, x, y, tau.get(t.roots().red))
}

pub(crate) fn adjust_in(tau: &Labeling, t: &SchnyderWood, x: usize, y: &Q, top_g: &Q) -> Result<Labeling> {
    if !respects_order_in(tau, t, x, y, top_g) {
        return Err(Error::OrderViolation { vertex: x, y: y.to_string() });
    }
    let g = t.graph();
    let n = g.n();
    let mut lambda: Vec<Option<Q>> = vec![None; n];
    for u in g.inner_vertices() {
        lambda[u] = Some(lambda_in(tau, t, u, top_g)?);
    }
    let red_in: Vec<Vec<usize>> = (0..n).map(|v| t.children(v, Color::Red)).collect();
    let green_in: Vec<Vec<usize>> = (0..n).map(|v| t.children(v, Color::Green)).collect();
    let mut tau = tau.clone();
    tau.set(x, y.clone());
    let mut red = vec![false; n];
    let mut green = vec![false; n];
    for pass in 1..=2 {
        let mut stack = vec![x];
        for &u in &red_in[x] {
            red[u] = !red[u];
            if !green[u] {
                stack.push(u);
            }
        }
        while let Some(w) = stack.pop() {
            for &v in &green_in[w] {
                if pass == 2 {
                    let base = tau.get(w).clone();
                    let height = top(&tau, t, w, top_g) - &base;
                    let l = lambda[v].as_ref().expect("green children are inner");
                    tau.set(v, l * height + base);
                }
                green[v] = !green[v];
                if !red[v] {
                    stack.push(v);
                }
                for &u in &red_in[v] {
                    red[u] = !red[u];
                    if !green[u] {
                        stack.push(u);
                    }
                }
            }
        }
    }
    let d = validate_adt(&tau, t);
    if !d.is_empty() {
        return Err(Error::InternalInvariant(format!("moving {x} to {y} gave a labeling that is not ADT: {}", d.join("; "))));
    }
    Ok(tau)
}

/// Set `tau(x) = y` and move every other horizontal side so that all other
/// right corners keep their ratios. The top of `X_g` is taken to be
/// `tau(X_r)`.
pub fn adjust(tau: &Labeling, t: &SchnyderWood, x: usize, y: &Q) -> Result<Labeling> {
    adjust_in(tau, t, x, y, tau.get(t.roots().red))
}
