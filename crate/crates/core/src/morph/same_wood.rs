//! Morphs between two representations of the same Schnyder wood.

use super::adjust::{adjust, diagonal_occupants, lambda_ratio};
use super::normalize::normalize_outer;
use super::{MorphEvent, MorphPlan};
use crate::error::{Error, Result};
use crate::rt::construct::{canonical_labeling, construct_unchecked};
use crate::rt::{canonical_frame, extract_wood_set, validate_adt, Labeling, RTRepresentation, Q};
use crate::schnyder::{derived_dag, Color, SchnyderWood};

/// An index `i` with `p[i] != q[i]` such that moving `p[i]` to `q[i]`
/// passes no other element of `p` and lands on none. `None` when `p == q`.
///
/// The largest index moving up is taken, or else the smallest moving down.
pub fn next_movable_index(p: &[Q], q: &[Q]) -> Result<Option<usize>> {
    if p.len() != q.len() {
        return Err(Error::SizeMismatch(p.len(), q.len()));
    }
    if let Some(i) = (0..p.len()).rev().find(|&i| p[i] < q[i]) {
        return Ok(Some(i));
    }
    Ok((0..p.len()).find(|&i| p[i] > q[i]))
}

/// Move right corners one at a time until every inner vertex has the ratio
/// given by `target`. `r` must have the canonical frame.
fn ratio_moves(r: &RTRepresentation, t: &SchnyderWood, target: &Labeling) -> Result<MorphPlan> {
    let frame = r.frame();
    let mut plan = MorphPlan::start(r.clone());
    let mut tau = r.tau();
    let mut order = derived_dag(t, Color::Blue)?.topological_order()?;
    order.reverse();
    for w in order {
        let occ = diagonal_occupants(t, w);
        if occ.is_empty() {
            continue;
        }
        let mut p: Vec<Q> = occ.iter().map(|&v| tau.get(v).clone()).collect();
        let base = tau.get(w).clone();
        let height = super::adjust::top(&tau, t, w, tau.get(t.roots().red)) - &base;
        let q: Vec<Q> =
            occ.iter().map(|&v| lambda_ratio(target, t, v).map(|l| l * &height + &base)).collect::<Result<_>>()?;
        while let Some(i) = next_movable_index(&p, &q)? {
            tau = adjust(&tau, t, occ[i], &q[i])?;
            let d = validate_adt(&tau, t);
            if !d.is_empty() {
                return Err(Error::InternalInvariant(format!("ratio move left a labeling that is not ADT: {}", d.join("; "))));
            }
            plan.push(MorphEvent::RatioMove { vertex: occ[i] }, construct_unchecked(t, &tau, &frame)?);
            p[i] = q[i].clone();
        }
    }
    Ok(plan)
}

fn normalized(r: &RTRepresentation) -> Result<MorphPlan> {
    let mut plan = MorphPlan::start(r.clone());
    for k in normalize_outer(r)? {
        plan.push(MorphEvent::OuterNormalization, k);
    }
    Ok(plan)
}

/// `r` morphed to the representation of `t` with the canonical frame and
/// the canonical strict labeling.
pub(crate) fn to_canonical(r: &RTRepresentation, t: &SchnyderWood) -> Result<MorphPlan> {
    let mut plan = normalized(r)?;
    let tau = canonical_labeling(t)?;
    let moves = ratio_moves(plan.last(), t, &tau)?;
    plan.extend(moves);
    let goal = construct_unchecked(t, &tau, &canonical_frame(r.n()))?;
    if *plan.last() != goal {
        return Err(Error::InternalInvariant("ratio moves missed the canonical representation".into()));
    }
    Ok(plan)
}

/// Normalize `a`, move its ratios to those of normalized `b`, undo the
/// normalization of `b`.
fn direct(a: &RTRepresentation, b: &RTRepresentation, t: &SchnyderWood) -> Result<MorphPlan> {
    let mut plan = normalized(a)?;
    let back = normalized(b)?;
    let moves = ratio_moves(plan.last(), t, &back.last().tau())?;
    plan.extend(moves);
    if plan.last() != back.last() {
        return Err(Error::InternalInvariant("ratio moves missed the target".into()));
    }
    plan.extend(back.reversed());
    Ok(plan)
}

/// A morph between two representations that both correspond to `t`. At
/// most `2n` linear morphs.
pub fn same_wood_morph(a: &RTRepresentation, b: &RTRepresentation, t: &SchnyderWood) -> Result<MorphPlan> {
    if !a.same_graph(b) || **t.graph() != **a.graph() || t.roots() != a.roots() {
        return Err(Error::GraphMismatch);
    }
    if !extract_wood_set(a)?.contains(t) || !extract_wood_set(b)?.contains(t) {
        return Err(Error::WoodMismatch);
    }
    match direct(a, b, t) {
        Ok(plan) => Ok(plan),
        Err(Error::OrderViolation { .. }) | Err(Error::InternalInvariant(_)) => {
            let mut plan = to_canonical(a, t)?;
            plan.extend(to_canonical(b, t)?.reversed());
            Ok(plan)
        }
        Err(e) => Err(e),
    }
}
