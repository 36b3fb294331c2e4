//! JSON forms of graphs, woods, labelings, representations, plans and
//! decisions. Rationals are written as lowest-term `"p/q"` strings.

use std::collections::BTreeMap;
use std::sync::Arc;

use num::{BigInt, Zero};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::lattice::PotentialVector;
use crate::morph::{MorphDecision, MorphEvent, MorphPlan};
use crate::plane_graph::{build_triangulation, GraphSpec, PlaneTriangulation, Triangle3};
use crate::rt::{Labeling, RTRepresentation, RightTriangle, WoodSet, Q};
use crate::schnyder::{SchnyderWood, WoodSpec};

pub fn format_rational(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Accepts `"p/q"` with `q != 0` or an integer `"p"`; the result is reduced.
pub fn parse_rational(s: &str) -> Result<Q> {
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    let int = |t: &str| t.trim().parse::<BigInt>().map_err(|_| bad());
    match s.split_once('/') {
        Some((p, q)) => {
            let d = int(q)?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(int(p)?, d))
        }
        None => Ok(Q::from_integer(int(s)?)),
    }
}

fn parse<T: DeserializeOwned>(text: &str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

fn from_value<T: DeserializeOwned>(v: Value, what: &str) -> Result<T> {
    serde_json::from_value(v).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

fn pretty(v: &impl Serialize) -> String {
    serde_json::to_string_pretty(v).expect("plain data serializes")
}

/// Values keyed by vertex, as a JSON object with keys `"0"` to `"n-1"`.
fn by_vertex<T>(map: BTreeMap<String, T>, field: &str) -> Result<Vec<T>> {
    let n = map.len();
    let mut out: Vec<Option<T>> = (0..n).map(|_| None).collect();
    for (k, v) in map {
        let i: usize = k.parse().map_err(|_| Error::Parse(format!("{field}: key {k:?} is not a vertex")))?;
        if i >= n {
            return Err(Error::Parse(format!("{field}: vertex {i} out of range 0..{n}")));
        }
        out[i] = Some(v);
    }
    Ok(out.into_iter().map(|v| v.expect("n distinct keys below n")).collect())
}

pub fn graph_to_json(g: &PlaneTriangulation) -> String {
    pretty(g.spec())
}

pub fn parse_graph(text: &str) -> Result<PlaneTriangulation> {
    build_triangulation(parse::<GraphSpec>(text, "graph")?)
}

pub fn wood_to_json(t: &SchnyderWood) -> String {
    pretty(&t.to_spec())
}

pub fn parse_wood(text: &str, g: &Arc<PlaneTriangulation>) -> Result<SchnyderWood> {
    SchnyderWood::from_spec(g.clone(), &parse::<WoodSpec>(text, "wood")?)
}

#[derive(Serialize, Deserialize)]
struct TriangleJson {
    xl: String,
    xr: String,
    yb: String,
    yt: String,
}

fn triangle_json(t: &RightTriangle) -> TriangleJson {
    TriangleJson { xl: format_rational(&t.xl), xr: format_rational(&t.xr), yb: format_rational(&t.yb), yt: format_rational(&t.yt) }
}

fn triangle_from_json(t: &TriangleJson, field: &str) -> Result<RightTriangle> {
    let f = |s: &str, name: &str| parse_rational(s).map_err(|e| Error::Parse(format!("{field}.{name}: {e}")));
    Ok(RightTriangle::new(f(&t.xl, "xl")?, f(&t.xr, "xr")?, f(&t.yb, "yb")?, f(&t.yt, "yt")?))
}

#[derive(Serialize, Deserialize)]
struct RepresentationJson {
    triangles: BTreeMap<String, TriangleJson>,
}

fn representation_json(r: &RTRepresentation) -> RepresentationJson {
    RepresentationJson { triangles: r.triangles().iter().enumerate().map(|(v, t)| (v.to_string(), triangle_json(t))).collect() }
}

fn triangles_from_json(r: RepresentationJson) -> Result<Vec<RightTriangle>> {
    let tris = by_vertex(r.triangles, "triangles")?;
    tris.iter().enumerate().map(|(v, t)| triangle_from_json(t, &format!("triangles.{v}"))).collect()
}

pub fn representation_to_json(r: &RTRepresentation) -> String {
    pretty(&representation_json(r))
}

/// Triangles only, without deriving the graph or validating.
pub fn parse_triangles(text: &str) -> Result<Vec<RightTriangle>> {
    triangles_from_json(parse(text, "representation")?)
}

/// A representation whose graph is read off its contacts, validated.
pub fn parse_representation(text: &str) -> Result<RTRepresentation> {
    RTRepresentation::from_triangles(parse_triangles(text)?)
}

#[derive(Serialize, Deserialize)]
struct LabelingJson {
    tau: BTreeMap<String, String>,
}

pub fn labeling_to_json(tau: &Labeling) -> String {
    pretty(&LabelingJson { tau: tau.0.iter().enumerate().map(|(v, y)| (v.to_string(), format_rational(y))).collect() })
}

pub fn parse_labeling(text: &str) -> Result<Labeling> {
    let l: LabelingJson = parse(text, "labeling")?;
    let vals = by_vertex(l.tau, "tau")?;
    let tau = vals
        .iter()
        .enumerate()
        .map(|(v, s)| parse_rational(s).map_err(|e| Error::Parse(format!("tau.{v}: {e}"))))
        .collect::<Result<Vec<Q>>>()?;
    Ok(Labeling(tau))
}

#[derive(Serialize, Deserialize)]
struct WoodSetJson {
    base: WoodSpec,
    degenerate_faces: Vec<Triangle3>,
}

pub fn wood_set_to_json(s: &WoodSet) -> String {
    pretty(&WoodSetJson { base: s.base.to_spec(), degenerate_faces: s.degenerate_faces.clone() })
}

#[derive(Serialize, Deserialize)]
struct PotentialEntry {
    triangle: Triangle3,
    value: u64,
}

#[derive(Serialize, Deserialize)]
struct PotentialJson {
    potential: Vec<PotentialEntry>,
    total: u64,
}

/// Non-zero entries sorted by triangle.
pub fn potential_to_json(p: &PotentialVector) -> String {
    let potential = p.values.iter().map(|(&triangle, &value)| PotentialEntry { triangle, value }).collect();
    pretty(&PotentialJson { potential, total: p.total() })
}

pub fn parse_potential(text: &str) -> Result<PotentialVector> {
    let p: PotentialJson = parse(text, "potential")?;
    let values: BTreeMap<Triangle3, u64> = p.potential.into_iter().filter(|e| e.value > 0).map(|e| (e.triangle, e.value)).collect();
    let v = PotentialVector { values };
    if v.total() != p.total {
        return Err(Error::Parse(format!("potential: total {} does not match the entries ({})", p.total, v.total())));
    }
    Ok(v)
}

pub fn decision_to_json(d: &MorphDecision) -> String {
    pretty(d)
}

pub fn parse_decision(text: &str) -> Result<MorphDecision> {
    parse(text, "decision")
}

#[derive(Serialize, Deserialize)]
struct PlanJson {
    keyframes: Vec<Value>,
    events: Vec<MorphEvent>,
}

pub fn plan_to_json(p: &MorphPlan) -> String {
    let keyframes = p.keyframes.iter().map(|k| serde_json::to_value(representation_json(k)).expect("plain data")).collect();
    pretty(&PlanJson { keyframes, events: p.events.clone() })
}

/// Every keyframe is validated and all of them share the graph of the first.
pub fn parse_plan(text: &str) -> Result<MorphPlan> {
    let p: PlanJson = parse(text, "plan")?;
    if p.keyframes.is_empty() {
        return Err(Error::Parse("plan: no keyframes".into()));
    }
    if p.events.len() + 1 != p.keyframes.len() {
        return Err(Error::Parse(format!("plan: {} keyframes but {} events", p.keyframes.len(), p.events.len())));
    }
    let mut keyframes: Vec<RTRepresentation> = Vec::with_capacity(p.keyframes.len());
    for (i, k) in p.keyframes.into_iter().enumerate() {
        let field = format!("keyframes.{i}");
        let tris = triangles_from_json(from_value(k, &field)?).map_err(|e| Error::Parse(format!("{field}.{e}")))?;
        let r = match keyframes.first() {
            None => RTRepresentation::from_triangles(tris),
            Some(first) => RTRepresentation::from_triangles_on(first.graph(), tris),
        };
        keyframes.push(r.map_err(|e| match e {
            Error::Parse(m) => Error::Parse(m),
            e => Error::InvalidRepresentation(vec![format!("{field}: {e}")]),
        })?);
    }
    Ok(MorphPlan { keyframes, events: p.events })
}
