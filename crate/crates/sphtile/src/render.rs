//! SVG figures and OBJ meshes from tilings.
//!
//! Geodesic sides are polylined adaptively: segments span at most
//! [`CHORD_STEP`] radians of arc, which keeps the sagitta (the worst
//! deviation between the arc and its chord) under half a degree. Both
//! exporters format floats with a fixed precision, so identical tilings
//! render to byte-identical documents.

use crate::catalog::Tiling;
use crate::error::{Error, Result};
use crate::forge::PlacedTile;
use crate::sphere::{Isometry, UnitVec, point_along};
use std::f64::consts::FRAC_PI_2;
use std::fmt::Write as _;

/// Maximum arc length of one polyline segment, radians. The chord of a
/// segment spanning θ deviates from the arc by about θ²/8 ≈ 0.45° here,
/// inside the 0.5° rendering budget.
pub const CHORD_STEP: f64 = 0.25;

/// Planar projection used by the SVG renderer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Projection {
    /// View-axis orthographic projection; the far hemisphere is drawn in a
    /// faint dashed stroke.
    Orthographic,
    /// Stereographic projection from the antipode of the view point, which
    /// therefore maps a neighborhood of the view point to a neighborhood of
    /// the origin and keeps everything except that antipode bounded.
    Stereographic,
}

impl Projection {
    pub fn from_label(label: &str) -> Result<Self> {
        match label {
            "ortho" | "orthographic" => Ok(Projection::Orthographic),
            "stereo" | "stereographic" => Ok(Projection::Stereographic),
            other => Err(Error::Domain(format!(
                "unknown projection {other:?}: expected ortho or stereo"
            ))),
        }
    }
}

/// Where the camera looks: latitude and longitude of the view direction,
/// degrees.
#[derive(Debug, Clone, Copy)]
pub struct ViewSpec {
    pub projection: Projection,
    pub lat_deg: f64,
    pub lon_deg: f64,
}

impl ViewSpec {
    /// Rotation bringing the view direction to the +z axis.
    fn rotation(&self) -> Isometry {
        let lat = self.lat_deg.to_radians();
        let lon = self.lon_deg.to_radians();
        let y_axis = UnitVec::equator(FRAC_PI_2);
        Isometry::rotation(&y_axis, -(FRAC_PI_2 - lat)).compose(&Isometry::rotation_z(-lon))
    }
}

/// Samples one geodesic side, endpoints included.
fn sample_side(a: &UnitVec, b: &UnitVec, length: f64) -> Result<Vec<UnitVec>> {
    let segments = (length / CHORD_STEP).ceil().max(1.0) as usize;
    let mut points = Vec::with_capacity(segments + 1);
    points.push(*a);
    for k in 1..segments {
        points.push(point_along(a, b, length * k as f64 / segments as f64)?);
    }
    points.push(*b);
    Ok(points)
}

/// Samples a tile's whole boundary as a closed loop (first point not
/// repeated at the end).
fn sample_boundary(tile: &PlacedTile) -> Result<Vec<UnitVec>> {
    let mut loop_points = Vec::new();
    for side in tile.sides() {
        let pts = sample_side(&side.start(), &side.end(), side.length())?;
        loop_points.extend_from_slice(&pts[..pts.len() - 1]);
    }
    Ok(loop_points)
}

/// Fill color per tile species.
fn fill_color(tile: &PlacedTile) -> &'static str {
    if tile.is_reflex() {
        return "#d9a7c7";
    }
    match tile.spec().n() {
        3 => "#f2c57c",
        4 => "#9dc3e6",
        5 => "#a5d6a7",
        _ => "#cfcfcf",
    }
}

fn path_from(points: &[(f64, f64)], close: bool) -> String {
    let mut d = String::new();
    for (i, (x, y)) in points.iter().enumerate() {
        let cmd = if i == 0 { 'M' } else { 'L' };
        // SVG's y axis points down.
        let _ = write!(d, "{cmd}{:.4} {:.4} ", x, -y);
    }
    let mut d = d.trim_end().to_string();
    if close {
        d.push('Z');
    }
    d
}

/// Splits a closed loop of projected points into runs of consecutive
/// visible points. `visible` flags each point; invisible stretches are
/// dropped and the loop is cut there.
fn visible_runs(points: &[(f64, f64)], visible: &[bool]) -> Vec<Vec<(f64, f64)>> {
    let n = points.len();
    if visible.iter().all(|&v| v) {
        return vec![points.to_vec()];
    }
    let mut runs = Vec::new();
    let mut current: Vec<(f64, f64)> = Vec::new();
    // Start at an invisible point so runs are never split artificially.
    let offset = visible.iter().position(|&v| !v).unwrap_or(0);
    for k in 0..=n {
        let i = (offset + k) % n;
        if visible[i] {
            current.push(points[i]);
        } else if !current.is_empty() {
            runs.push(std::mem::take(&mut current));
        }
        if k == n && !current.is_empty() {
            runs.push(std::mem::take(&mut current));
        }
    }
    runs.retain(|r| r.len() >= 2);
    runs
}

/// Renders the tiling as an SVG 1.1 document.
pub fn render_svg(tiling: &Tiling, view: &ViewSpec) -> Result<String> {
    let rot = view.rotation();
    let mut tile_loops = Vec::with_capacity(tiling.tiles.len());
    for tile in &tiling.tiles {
        let rotated: Vec<UnitVec> =
            sample_boundary(tile)?.iter().map(|p| rot.apply(p)).collect();
        tile_loops.push(rotated);
    }

    let mut body = String::new();
    let (viewbox, horizon_r);
    match view.projection {
        Projection::Orthographic => {
            viewbox = (-1.06, -1.06, 2.12, 2.12);
            horizon_r = 1.0;
            for (idx, loop_points) in tile_loops.iter().enumerate() {
                let tile = &tiling.tiles[idx];
                let planar: Vec<(f64, f64)> =
                    loop_points.iter().map(|p| (p.x(), p.y())).collect();
                let front: Vec<bool> = loop_points.iter().map(|p| p.z() >= 0.0).collect();
                if front.iter().all(|&f| f) {
                    let _ = writeln!(
                        body,
                        "  <path d=\"{}\" fill=\"{}\" fill-opacity=\"0.85\" stroke=\"#222222\" stroke-width=\"0.006\"/>",
                        path_from(&planar, true),
                        fill_color(tile),
                    );
                } else {
                    for run in visible_runs(&planar, &front) {
                        let _ = writeln!(
                            body,
                            "  <path d=\"{}\" fill=\"none\" stroke=\"#222222\" stroke-width=\"0.006\"/>",
                            path_from(&run, false),
                        );
                    }
                    let back: Vec<bool> = front.iter().map(|f| !f).collect();
                    for run in visible_runs(&planar, &back) {
                        let _ = writeln!(
                            body,
                            "  <path d=\"{}\" fill=\"none\" stroke=\"#aaaaaa\" stroke-width=\"0.003\" stroke-dasharray=\"0.02 0.02\"/>",
                            path_from(&run, false),
                        );
                    }
                }
            }
        }
        Projection::Stereographic => {
            // Project from the south pole (the view antipode): keep points
            // safely away from it and find the extent for the viewBox.
            let mut projected: Vec<(Vec<(f64, f64)>, Vec<bool>)> = Vec::new();
            let mut extent = 1.0_f64;
            for loop_points in &tile_loops {
                let planar: Vec<(f64, f64)> = loop_points
                    .iter()
                    .map(|p| {
                        let denom = (1.0 + p.z()).max(1e-6);
                        (p.x() / denom, p.y() / denom)
                    })
                    .collect();
                let vis: Vec<bool> = loop_points.iter().map(|p| 1.0 + p.z() >= 0.02).collect();
                for ((x, y), &v) in planar.iter().zip(&vis) {
                    if v {
                        extent = extent.max(x.abs()).max(y.abs());
                    }
                }
                projected.push((planar, vis));
            }
            let half = (extent * 1.06).min(40.0);
            viewbox = (-half, -half, 2.0 * half, 2.0 * half);
            horizon_r = 1.0;
            let stroke_w = half / 170.0;
            for (idx, (planar, vis)) in projected.iter().enumerate() {
                let tile = &tiling.tiles[idx];
                if vis.iter().all(|&v| v) {
                    let _ = writeln!(
                        body,
                        "  <path d=\"{}\" fill=\"{}\" fill-opacity=\"0.85\" stroke=\"#222222\" stroke-width=\"{:.4}\"/>",
                        path_from(planar, true),
                        fill_color(tile),
                        stroke_w,
                    );
                } else {
                    for run in visible_runs(planar, vis) {
                        let _ = writeln!(
                            body,
                            "  <path d=\"{}\" fill=\"none\" stroke=\"#222222\" stroke-width=\"{:.4}\"/>",
                            path_from(&run, false),
                            stroke_w,
                        );
                    }
                }
            }
        }
    }

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" viewBox=\"{:.4} {:.4} {:.4} {:.4}\">",
        viewbox.0, viewbox.1, viewbox.2, viewbox.3,
    );
    let _ = writeln!(
        svg,
        "  <!-- {} | projection {:?} | view ({:.4}, {:.4}) deg -->",
        tiling.family.to_string_id(),
        view.projection,
        view.lat_deg,
        view.lon_deg,
    );
    let _ = writeln!(
        svg,
        "  <circle cx=\"0\" cy=\"0\" r=\"{horizon_r:.4}\" fill=\"none\" stroke=\"#888888\" stroke-width=\"0.004\"/>",
    );
    svg.push_str(&body);
    svg.push_str("</svg>\n");
    Ok(svg)
}

/// Exports the tiling as a Wavefront OBJ document: every sampled boundary
/// point is a vertex on the unit sphere and each tile contributes one
/// closed `l` polyline.
pub fn export_obj(tiling: &Tiling) -> Result<String> {
    let mut vertices = String::new();
    let mut lines = String::new();
    let mut next_index = 1usize; // OBJ indices are 1-based
    for (idx, tile) in tiling.tiles.iter().enumerate() {
        let loop_points = sample_boundary(tile)?;
        let first = next_index;
        for p in &loop_points {
            let _ = writeln!(vertices, "v {:.6} {:.6} {:.6}", p.x(), p.y(), p.z());
            next_index += 1;
        }
        let _ = write!(lines, "l");
        for i in first..next_index {
            let _ = write!(lines, " {i}");
        }
        let _ = writeln!(lines, " {first}");
        let _ = writeln!(lines, "# tile {idx} end");
    }
    Ok(format!(
        "# sphtile OBJ export\n# family: {}\n# tiles: {}\n{vertices}{lines}",
        tiling.family.to_string_id(),
        tiling.tiles.len(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{
        KaleidoscopeVariant, edge_to_edge_reference, kaleidoscope, magic_triangle_tiling,
    };

    fn count_matches(text: &str, needle: &str) -> usize {
        text.match_indices(needle).count()
    }

    #[test]
    fn ortho_render_is_deterministic_svg() {
        let t = kaleidoscope(KaleidoscopeVariant::TriTri, 1.2).unwrap();
        let view =
            ViewSpec { projection: Projection::Orthographic, lat_deg: 30.0, lon_deg: 45.0 };
        let a = render_svg(&t, &view).unwrap();
        let b = render_svg(&t, &view).unwrap();
        assert_eq!(a, b);
        assert!(a.starts_with("<svg xmlns"));
        assert!(a.trim_end().ends_with("</svg>"));
        // All 8 tiles appear (some filled, some split in front/back runs).
        assert!(count_matches(&a, "<path") >= 8);
    }

    #[test]
    fn stereo_view_from_magic_center_keeps_decomposition_bounded() {
        let t = magic_triangle_tiling().unwrap();
        // The seven decomposition tiles sit around the north pole; viewed
        // stereographically from there they all project near the origin.
        let view =
            ViewSpec { projection: Projection::Stereographic, lat_deg: 90.0, lon_deg: 0.0 };
        let rot = view.rotation();
        for tile in t.tiles.iter().filter(|tile| !tile.is_reflex()) {
            for p in sample_boundary(tile).unwrap() {
                let q = rot.apply(&p);
                let denom = 1.0 + q.z();
                assert!(denom > 0.3, "decomposition tile reaches the projection antipode");
                let (x, y) = (q.x() / denom, q.y() / denom);
                assert!(x.hypot(y) < 3.0, "tile escaped the bounded region: ({x}, {y})");
            }
        }
        let svg = render_svg(&t, &view).unwrap();
        assert_eq!(count_matches(&svg, "fill=\"#f2c57c\""), 4);
        assert_eq!(count_matches(&svg, "fill=\"#a5d6a7\""), 3);
    }

    #[test]
    fn obj_export_lists_octahedron_faces() {
        let t = edge_to_edge_reference("octahedron").unwrap();
        let obj = export_obj(&t).unwrap();
        assert_eq!(count_matches(&obj, "\nl "), 8);
        let mut vertex_count = 0;
        for line in obj.lines().filter(|l| l.starts_with("v ")) {
            let c: Vec<f64> =
                line[2..].split_whitespace().map(|s| s.parse().unwrap()).collect();
            let norm = (c[0] * c[0] + c[1] * c[1] + c[2] * c[2]).sqrt();
            assert!((norm - 1.0).abs() < 1e-6, "OBJ vertex off the sphere: {line}");
            vertex_count += 1;
        }
        // Each octahedron side is π/2 long: 7 segments of ≤ 0.25 rad each,
        // three sides, start points shared.
        assert_eq!(vertex_count, 8 * 3 * 7);
        assert_eq!(export_obj(&t).unwrap(), obj);
    }

    #[test]
    fn projection_labels_parse() {
        assert_eq!(Projection::from_label("ortho").unwrap(), Projection::Orthographic);
        assert_eq!(Projection::from_label("stereographic").unwrap(), Projection::Stereographic);
        assert!(Projection::from_label("fisheye").is_err());
    }

    #[test]
    fn back_hemisphere_is_dashed_not_filled() {
        let t = edge_to_edge_reference("icosahedron").unwrap();
        let view = ViewSpec { projection: Projection::Orthographic, lat_deg: 90.0, lon_deg: 0.0 };
        let svg = render_svg(&t, &view).unwrap();
        assert!(svg.contains("stroke-dasharray"));
        let filled = count_matches(&svg, "fill-opacity");
        assert!(filled >= 1 && filled < 20, "only front tiles are filled: {filled}");
    }
}
