//! Bringing the outer triangles into the canonical position.

use crate::error::{Error, Result};
use crate::rt::{canonical_frame, q, RTRepresentation, RightTriangle};

/// Keyframes after `r` ending in the canonical outer frame, with steps that
/// change nothing left out.
///
/// The first step cuts the outer triangles back to the lines that carry
/// contacts with inner triangles, the second maps the result affinely onto
/// the canonical corners, the third resizes the two free sides.
pub fn normalize_outer(r: &RTRepresentation) -> Result<Vec<RTRepresentation>> {
    let roots = r.roots();
    let n = r.n() as i64;
    let m = q(n - 2);
    let (b, gr, rd) = (r.triangle(roots.blue).clone(), r.triangle(roots.green).clone(), r.triangle(roots.red).clone());

    // the vertical side of X_b, the horizontal side of X_r and the diagonal of X_g
    let a = b.xr.clone();
    let c = rd.yb.clone();
    let p1y = &gr.yb + (&a - &gr.xl) * gr.slope();
    let p3x = &gr.xl + (&c - &gr.yb) / gr.slope();
    if !(p1y < c && a < p3x) {
        return Err(Error::InternalInvariant("outer triangles do not bound a triangle".into()));
    }

    let mut tris = r.triangles().to_vec();
    tris[roots.blue] = RightTriangle::new(b.xl.clone(), a.clone(), p1y.clone(), c.clone());
    tris[roots.green] = RightTriangle::new(a.clone(), p3x.clone(), p1y.clone(), c.clone());
    tris[roots.red] = RightTriangle::new(a.clone(), p3x.clone(), c.clone(), rd.yt.clone());
    let trimmed = r.with_triangles(tris);

    let sx = &m / (&p3x - &a);
    let sy = &m / (&c - &p1y);
    let tx = -(&a * &sx);
    let ty = -(&p1y * &sy);
    let mapped = trimmed.with_triangles(trimmed.triangles().iter().map(|t| t.map(&sx, &tx, &sy, &ty)).collect());

    let frame = canonical_frame(r.n());
    let mut tris = mapped.triangles().to_vec();
    tris[roots.blue] = frame.blue;
    tris[roots.green] = frame.green;
    tris[roots.red] = frame.red;
    let canonical = mapped.with_triangles(tris);

    let mut out: Vec<RTRepresentation> = Vec::new();
    for k in [trimmed, mapped, canonical] {
        if out.last().unwrap_or(r) != &k {
            out.push(k);
        }
    }
    Ok(out)
}

/// Whether the outer triangles are in the canonical position.
pub fn is_canonical_frame(r: &RTRepresentation) -> bool {
    r.frame() == canonical_frame(r.n())
}
