//! SVG rendering of representations and morph plans.

use std::fmt::Write;

use num::ToPrimitive;

use crate::error::{Error, Result};
use crate::morph::MorphPlan;
use crate::rt::{RTRepresentation, RightTriangle, Q};
use crate::schnyder::Color;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderMode {
    Frames,
    Animated,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RenderConfig {
    pub width: u32,
    pub height: u32,
    pub margin: u32,
    /// Samples per linear morph, both ends included.
    pub frame_count: u32,
    /// Frames per second of the animated document.
    pub fps: u32,
    pub mode: RenderMode,
}

impl Default for RenderConfig {
    fn default() -> Self {
        RenderConfig { width: 800, height: 600, margin: 20, frame_count: 10, fps: 10, mode: RenderMode::Frames }
    }
}

impl RenderConfig {
    pub fn validate(&self) -> Result<()> {
        if self.width == 0 || self.height == 0 {
            return Err(Error::Parse("render size must be positive".into()));
        }
        if 2 * self.margin >= self.width.min(self.height) {
            return Err(Error::Parse("margin leaves no room to draw".into()));
        }
        if self.mode == RenderMode::Frames && self.frame_count < 2 {
            return Err(Error::Parse("frame count must be at least 2".into()));
        }
        if self.fps == 0 {
            return Err(Error::Parse("fps must be positive".into()));
        }
        Ok(())
    }
}

/// Decimal form with 9 significant digits.
pub fn decimal(x: &Q) -> String {
    let f = x.to_f64().unwrap_or(f64::NAN);
    let rounded: f64 = format!("{f:.8e}").parse().unwrap_or(f);
    format!("{}", rounded + 0.0)
}

fn points(t: &RightTriangle) -> String {
    t.corners().iter().map(|(x, y)| format!("{},{}", decimal(x), decimal(y))).collect::<Vec<_>>().join(" ")
}

struct Bounds {
    xmin: Q,
    xmax: Q,
    ymin: Q,
    ymax: Q,
}

fn bounds<'a>(reps: impl Iterator<Item = &'a RTRepresentation>) -> Bounds {
    let mut b: Option<Bounds> = None;
    for r in reps {
        for t in r.triangles() {
            let b = b.get_or_insert_with(|| Bounds { xmin: t.xl.clone(), xmax: t.xr.clone(), ymin: t.yb.clone(), ymax: t.yt.clone() });
            if t.xl < b.xmin {
                b.xmin = t.xl.clone();
            }
            if t.xr > b.xmax {
                b.xmax = t.xr.clone();
            }
            if t.yb < b.ymin {
                b.ymin = t.yb.clone();
            }
            if t.yt > b.ymax {
                b.ymax = t.yt.clone();
            }
        }
    }
    b.expect("representations have triangles")
}

fn fill(r: &RTRepresentation, v: usize) -> &'static str {
    match r.roots().role(v) {
        Some(Color::Red) => "#f4b6b6",
        Some(Color::Green) => "#b8e0b8",
        Some(Color::Blue) => "#b6c8f4",
        None => "#e8e8e8",
    }
}

/// Document header and the group mapping data coordinates to pixels with
/// the y-axis pointing up.
fn open(cfg: &RenderConfig, b: &Bounds) -> String {
    let f = |q: &Q| q.to_f64().unwrap_or(0.0);
    let (dx, dy) = ((f(&b.xmax) - f(&b.xmin)).max(1e-12), (f(&b.ymax) - f(&b.ymin)).max(1e-12));
    let m = cfg.margin as f64;
    let s = ((cfg.width as f64 - 2.0 * m) / dx).min((cfg.height as f64 - 2.0 * m) / dy);
    let tx = m - f(&b.xmin) * s;
    let ty = m + f(&b.ymax) * s;
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = cfg.width,
        h = cfg.height
    )
    .unwrap();
    writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    writeln!(out, r#"<g transform="matrix({s} 0 0 {} {tx} {ty})">"#, -s).unwrap();
    out
}

fn close(out: &mut String) {
    out.push_str("</g>\n</svg>\n");
}

fn polygon_open(r: &RTRepresentation, v: usize, pts: &str) -> String {
    format!(
        r##"<polygon data-vertex="{v}" points="{pts}" fill="{}" stroke="#333333" stroke-width="1" vector-effect="non-scaling-stroke""##,
        fill(r, v)
    )
}

/// One static document drawn in the frame given by `b`.
fn frame(r: &RTRepresentation, cfg: &RenderConfig, b: &Bounds) -> String {
    let mut out = open(cfg, b);
    for (v, t) in r.triangles().iter().enumerate() {
        out.push_str(&polygon_open(r, v, &points(t)));
        out.push_str("/>\n");
    }
    close(&mut out);
    out
}

pub fn render_representation(r: &RTRepresentation, cfg: &RenderConfig) -> String {
    frame(r, cfg, &bounds(std::iter::once(r)))
}

/// The representations drawn by [`render_frames`]: each linear morph
/// sampled at `frame_count` evenly spaced times, shared end points taken
/// once. A plan without steps gives its only keyframe.
pub fn sample_frames(plan: &MorphPlan, frame_count: u32) -> Vec<RTRepresentation> {
    let last = frame_count.max(2) as i64 - 1;
    let mut frames = Vec::new();
    for w in plan.keyframes.windows(2) {
        for k in 0..last {
            frames.push(w[0].interpolate(&w[1], &Q::new(k.into(), last.into())));
        }
    }
    frames.push(plan.last().clone());
    frames
}

pub fn render_frames(plan: &MorphPlan, cfg: &RenderConfig) -> Result<Vec<String>> {
    cfg.validate()?;
    let b = bounds(plan.keyframes.iter());
    Ok(sample_frames(plan, cfg.frame_count).iter().map(|r| frame(r, cfg, &b)).collect())
}

/// One document whose corners move linearly between consecutive keyframes,
/// each linear morph lasting `frame_count / fps` seconds.
pub fn render_animated(plan: &MorphPlan, cfg: &RenderConfig) -> Result<String> {
    cfg.validate()?;
    let b = bounds(plan.keyframes.iter());
    let steps = plan.steps();
    if steps == 0 {
        return Ok(frame(plan.first(), cfg, &b));
    }
    let dur = steps as f64 * cfg.frame_count.max(1) as f64 / cfg.fps as f64;
    let key_times = (0..=steps).map(|i| format!("{}", i as f64 / steps as f64)).collect::<Vec<_>>().join(";");
    let first = plan.first();
    let mut out = open(cfg, &b);
    for v in 0..first.n() {
        let values = plan.keyframes.iter().map(|k| points(k.triangle(v))).collect::<Vec<_>>().join(";");
        out.push_str(&polygon_open(first, v, &points(first.triangle(v))));
        out.push_str(">\n");
        writeln!(
            out,
            r#"<animate attributeName="points" values="{values}" keyTimes="{key_times}" calcMode="linear" dur="{dur}s" repeatCount="indefinite"/>"#
        )
        .unwrap();
        out.push_str("</polygon>\n");
    }
    close(&mut out);
    Ok(out)
}
