//! Numerical tiling verification and classification.
//!
//! A report audits a tiling along four axes: area closure (Girard sums
//! against the full sphere), interior overlaps (transversal boundary
//! crossings plus mutual point-in-polygon probes), boundary coverage (every
//! point of every side must lie on a shared edge), and vertex structure.
//! Vertices are tile corners clustered at a small radius; each cluster is
//! classified as a **full vertex** (corner angles summing to 2π, no side
//! passing through) or a **half vertex** (exactly one side passing through,
//! with the corners on its far side summing to π). A tiling is
//! edge-to-edge exactly when every edge is a full side of both its tiles
//! and every vertex is full.
//!
//! The module also extracts maximal edge-to-edge patches of a given side
//! length and tags their shapes (the minimal-side patches of any
//! non-edge-to-edge tiling are singletons, bigons, or hemispheres), and
//! decides whether two tilings agree up to an isometry.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use serde::Serialize;

use crate::catalog::{Tiling, full_edge_adjacency};
use crate::forge::PlacedTile;
use crate::patch::BigonType;
use crate::sphere::{
    Arc, ArcIntersection, Isometry, PointLocation, UnitVec, angular_distance, arcs_intersect,
    point_along,
};
use crate::{TOL_AREA_RESIDUAL, TOL_VERTEX_CLUSTER};

/// Tolerances used by the verifier.
#[derive(Debug, Clone, Copy)]
pub struct Tolerances {
    /// Radius for clustering tile corners into vertices, and for treating a
    /// side as passing through a vertex.
    pub vertex_cluster: f64,
    /// Allowed deviation of the tile-area sum from 4π.
    pub area_residual: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self { vertex_cluster: TOL_VERTEX_CLUSTER, area_residual: TOL_AREA_RESIDUAL }
    }
}

/// A tile corner incident to a vertex.
#[derive(Debug, Clone, Serialize)]
pub struct CornerRef {
    pub tile: usize,
    pub corner: usize,
    pub angle: f64,
}

/// A tile side, by tile id and side index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SideRef {
    pub tile: usize,
    pub side: usize,
}

/// Vertex classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexClass {
    /// Corner angles sum to 2π; no side passes through.
    Full,
    /// Exactly one side passes through; the corners sum to π.
    Half,
    /// Neither pattern holds (only seen in invalid tilings).
    Irregular,
}

impl VertexClass {
    pub fn label(&self) -> &'static str {
        match self {
            VertexClass::Full => "full",
            VertexClass::Half => "half",
            VertexClass::Irregular => "irregular",
        }
    }
}

impl Serialize for VertexClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

/// One clustered vertex of the tiling.
#[derive(Debug, Clone, Serialize)]
pub struct VertexRecord {
    pub location: UnitVec,
    pub corners: Vec<CornerRef>,
    pub crossing_sides: Vec<SideRef>,
    pub class: VertexClass,
    /// Sum of the incident corner angles.
    pub angle_sum: f64,
}

/// Whether an edge is a full side of both incident tiles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeMatch {
    FullFull,
    Partial,
}

impl Serialize for EdgeMatch {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(match self {
            EdgeMatch::FullFull => "full-full",
            EdgeMatch::Partial => "partial",
        })
    }
}

/// A maximal arc along which two tiles share boundary. The arc runs along
/// the left tile's side direction, so the left tile's interior is to its
/// left.
#[derive(Debug, Clone, Serialize)]
pub struct EdgeRecord {
    pub start: UnitVec,
    pub end: UnitVec,
    pub length: f64,
    pub left: SideRef,
    pub right: SideRef,
    #[serde(rename = "match")]
    pub match_kind: EdgeMatch,
}

/// Overall verdict on a tiling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    EdgeToEdge,
    NonEdgeToEdge,
    Invalid,
}

impl Classification {
    pub fn label(&self) -> &'static str {
        match self {
            Classification::EdgeToEdge => "edge-to-edge",
            Classification::NonEdgeToEdge => "non-edge-to-edge",
            Classification::Invalid => "invalid",
        }
    }
}

impl Serialize for Classification {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

/// Shape of a maximal edge-to-edge patch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatchShape {
    Singleton,
    Bigon(BigonType),
    Hemisphere,
    Other,
}

impl PatchShape {
    pub fn label(&self) -> String {
        match self {
            PatchShape::Singleton => "singleton".into(),
            PatchShape::Bigon(t) => format!("bigon-{}", t.label()),
            PatchShape::Hemisphere => "hemisphere".into(),
            PatchShape::Other => "other".into(),
        }
    }
}

impl Serialize for PatchShape {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.label())
    }
}

/// A maximal connected set of equal-side tiles glued edge-to-edge.
#[derive(Debug, Clone, Serialize)]
pub struct MaximalPatch {
    pub tile_ids: Vec<usize>,
    pub shape: PatchShape,
}

/// The verifier's full output.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub area_residual: f64,
    pub overlap_pairs: Vec<(usize, usize)>,
    pub vertices: Vec<VertexRecord>,
    pub edges: Vec<EdgeRecord>,
    /// Sides with uncovered boundary, with the uncovered length.
    pub unmatched_boundary: Vec<(SideRef, f64)>,
    pub classification: Classification,
    /// Maximal patches of the minimal side length present in the tiling.
    pub maximal_patches: Vec<MaximalPatch>,
    pub diagnostics: Vec<String>,
}

impl VerificationReport {
    pub fn full_vertex_count(&self) -> usize {
        self.vertices.iter().filter(|v| v.class == VertexClass::Full).count()
    }

    pub fn half_vertex_count(&self) -> usize {
        self.vertices.iter().filter(|v| v.class == VertexClass::Half).count()
    }

    /// Serializes the report to JSON (keys sorted, deterministic).
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Sides passing within `tol` of a point, excluding sides with an endpoint
/// near it.
fn crossing_sides_at(
    sides: &[Vec<Arc>],
    location: &UnitVec,
    tol: f64,
) -> Vec<SideRef> {
    let mut out = Vec::new();
    for (tile, tile_sides) in sides.iter().enumerate() {
        for (k, arc) in tile_sides.iter().enumerate() {
            if arc.distance_to(location) <= tol
                && angular_distance(&arc.start(), location) > 10.0 * tol
                && angular_distance(&arc.end(), location) > 10.0 * tol
            {
                out.push(SideRef { tile, side: k });
            }
        }
    }
    out
}

/// Clusters all tile corners at radius `tol`, keyed to the first corner
/// seen in each cluster.
fn cluster_vertices(tiles: &[PlacedTile], tol: f64) -> Vec<(UnitVec, Vec<CornerRef>)> {
    let mut clusters: Vec<(UnitVec, Vec<CornerRef>)> = Vec::new();
    for (tile, t) in tiles.iter().enumerate() {
        for (corner, v) in t.vertices().iter().enumerate() {
            let angle = t.interior_angle();
            match clusters.iter_mut().find(|(rep, _)| rep.coincides(v, tol)) {
                Some((_, members)) => members.push(CornerRef { tile, corner, angle }),
                None => clusters.push((*v, vec![CornerRef { tile, corner, angle }])),
            }
        }
    }
    clusters
}

/// Overlap interval of side `other` on side `base`, as positions along
/// `base` in [0, base.length()], when the two sides lie on one great circle
/// within `circle_tol`. Robust to the small pole drift of chained gluing.
fn side_overlap_interval(base: &Arc, other: &Arc, circle_tol: f64) -> Option<(f64, f64)> {
    let pole = base.pole();
    if other.start().dot(&pole).abs() > circle_tol || other.end().dot(&pole).abs() > circle_tol {
        return None;
    }
    let len_base = base.length();
    let u0 = base.circle_position(&other.start());
    // Travel along `other` moves in +position direction iff its pole agrees
    // with the base pole.
    let forward = other.pole().dot(&pole) > 0.0;
    let span = if forward { (u0, u0 + other.length()) } else { (u0 - other.length(), u0) };
    // The raw position is only defined modulo 2π; try the three unrollings
    // that could land on the base span.
    let mut best: Option<(f64, f64)> = None;
    for shift in [-2.0 * PI, 0.0, 2.0 * PI] {
        let lo = (span.0 + shift).max(0.0);
        let hi = (span.1 + shift).min(len_base);
        if hi > lo
            && best.map_or(true, |(blo, bhi)| hi - lo > bhi - blo)
        {
            best = Some((lo, hi));
        }
    }
    best
}

fn merged_coverage(intervals: &mut Vec<(f64, f64)>) -> f64 {
    intervals.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut total = 0.0;
    let mut cursor = 0.0f64;
    for &(lo, hi) in intervals.iter() {
        let lo = lo.max(cursor);
        if hi > lo {
            total += hi - lo;
            cursor = hi;
        }
    }
    total
}

/// Computes the full verification report with the given tolerances.
pub fn full_report_with(t: &Tiling, tol: &Tolerances) -> VerificationReport {
    let tiles = &t.tiles;
    let mut diagnostics = Vec::new();
    let area_residual = (t.total_area() - 4.0 * PI).abs();

    let sides: Vec<Vec<Arc>> = tiles.iter().map(|tile| tile.sides()).collect();
    let circle_tol = 1e-6;
    let edge_len_tol = 1e-6;

    // --- Edges and boundary coverage -------------------------------------
    let mut edges: Vec<EdgeRecord> = Vec::new();
    let mut coverage: Vec<Vec<Vec<(f64, f64)>>> = sides
        .iter()
        .map(|s| s.iter().map(|_| Vec::new()).collect())
        .collect();
    let mut overlap_pairs: Vec<(usize, usize)> = Vec::new();
    let note_overlap = |pairs: &mut Vec<(usize, usize)>, i: usize, j: usize| {
        let key = (i.min(j), i.max(j));
        if !pairs.contains(&key) {
            pairs.push(key);
        }
    };

    for i in 0..tiles.len() {
        for j in (i + 1)..tiles.len() {
            for (ka, a) in sides[i].iter().enumerate() {
                for (kb, b) in sides[j].iter().enumerate() {
                    if let Some((lo, hi)) = side_overlap_interval(a, b, circle_tol) {
                        if hi - lo <= edge_len_tol {
                            continue;
                        }
                        coverage[i][ka].push((lo, hi));
                        if let Some((blo, bhi)) = side_overlap_interval(b, a, circle_tol) {
                            coverage[j][kb].push((blo, bhi));
                        }
                        let start = point_along(&a.start(), &a.end(), lo)
                            .expect("interval endpoint lies on the side");
                        let end = point_along(&a.start(), &a.end(), hi)
                            .expect("interval endpoint lies on the side");
                        let full_full = lo <= edge_len_tol
                            && hi >= a.length() - edge_len_tol
                            && (b.length() - a.length()).abs() <= edge_len_tol;
                        edges.push(EdgeRecord {
                            start,
                            end,
                            length: hi - lo,
                            left: SideRef { tile: i, side: ka },
                            right: SideRef { tile: j, side: kb },
                            match_kind: if full_full { EdgeMatch::FullFull } else { EdgeMatch::Partial },
                        });
                        // Tiles on the same side of a shared arc overlap.
                        let mid = point_along(&a.start(), &a.end(), 0.5 * (lo + hi))
                            .expect("midpoint lies on the side");
                        let probe = mid.walk(&a.pole().as_vector(), 1e-5);
                        if matches!(tiles[j].contains(&probe), Ok(PointLocation::Inside)) {
                            note_overlap(&mut overlap_pairs, i, j);
                        }
                    } else if let ArcIntersection::Point(x) =
                        arcs_intersect(a, b, tol.vertex_cluster)
                    {
                        // A transversal crossing interior to both sides.
                        let clearance = 1e-6;
                        let interior = |arc: &Arc, p: &UnitVec| {
                            angular_distance(&arc.start(), p) > clearance
                                && angular_distance(&arc.end(), p) > clearance
                        };
                        if interior(a, &x) && interior(b, &x) {
                            note_overlap(&mut overlap_pairs, i, j);
                            diagnostics.push(format!(
                                "sides {ka} of tile {i} and {kb} of tile {j} cross transversally"
                            ));
                        }
                    }
                }
            }
        }
    }

    let mut unmatched_boundary: Vec<(SideRef, f64)> = Vec::new();
    for (i, tile_sides) in sides.iter().enumerate() {
        for (k, arc) in tile_sides.iter().enumerate() {
            let covered = merged_coverage(&mut coverage[i][k]);
            let gap = arc.length() - covered;
            if gap > edge_len_tol {
                unmatched_boundary.push((SideRef { tile: i, side: k }, gap));
            }
        }
    }

    // --- Interior containment probes --------------------------------------
    for (i, tile_sides) in sides.iter().enumerate() {
        for arc in tile_sides {
            let probe = arc.midpoint().walk(&arc.pole().as_vector(), 1e-5);
            for (j, other) in tiles.iter().enumerate() {
                if j != i && matches!(other.contains(&probe), Ok(PointLocation::Inside)) {
                    note_overlap(&mut overlap_pairs, i, j);
                }
            }
        }
    }

    // --- Vertices ----------------------------------------------------------
    let mut vertices = Vec::new();
    for (location, corners) in cluster_vertices(tiles, tol.vertex_cluster) {
        let crossing_sides = crossing_sides_at(&sides, &location, tol.vertex_cluster);
        let angle_sum: f64 = corners.iter().map(|c| c.angle).sum();
        let class = if crossing_sides.is_empty() && (angle_sum - 2.0 * PI).abs() <= 1e-7 {
            VertexClass::Full
        } else if crossing_sides.len() == 1 && (angle_sum - PI).abs() <= 1e-7 {
            VertexClass::Half
        } else {
            diagnostics.push(format!(
                "vertex near ({:.6}, {:.6}, {:.6}) is neither full nor half: \
                 angle sum {:.9}, {} crossing side(s)",
                location.x(),
                location.y(),
                location.z(),
                angle_sum,
                crossing_sides.len()
            ));
            VertexClass::Irregular
        };
        vertices.push(VertexRecord { location, corners, crossing_sides, class, angle_sum });
    }

    // --- Classification ----------------------------------------------------
    let invalid = area_residual > tol.area_residual
        || !overlap_pairs.is_empty()
        || !unmatched_boundary.is_empty();
    let classification = if invalid {
        Classification::Invalid
    } else if edges.iter().all(|e| e.match_kind == EdgeMatch::FullFull)
        && vertices.iter().all(|v| v.class == VertexClass::Full)
    {
        Classification::EdgeToEdge
    } else {
        Classification::NonEdgeToEdge
    };

    let minimal_side = tiles
        .iter()
        .map(|tile| tile.spec().side())
        .fold(f64::INFINITY, f64::min);
    let maximal_patches = extract_maximal_patches(t, minimal_side);

    VerificationReport {
        area_residual,
        overlap_pairs,
        vertices,
        edges,
        unmatched_boundary,
        classification,
        maximal_patches,
        diagnostics,
    }
}

/// Computes the verification report with default tolerances.
pub fn full_report(t: &Tiling) -> VerificationReport {
    full_report_with(t, &Tolerances::default())
}

/// Extracts the maximal edge-to-edge patches of tiles whose side length
/// matches `side_length`: connected components under full-edge adjacency,
/// each tagged by the shape of its union.
pub fn extract_maximal_patches(t: &Tiling, side_length: f64) -> Vec<MaximalPatch> {
    let tiles = &t.tiles;
    let in_class: Vec<bool> = tiles
        .iter()
        .map(|tile| (tile.spec().side() - side_length).abs() <= 1e-7)
        .collect();
    let adjacency = full_edge_adjacency(tiles);

    // Connected components among in-class tiles.
    let mut component = vec![usize::MAX; tiles.len()];
    let mut components: Vec<Vec<usize>> = Vec::new();
    for start in 0..tiles.len() {
        if !in_class[start] || component[start] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut members = vec![start];
        component[start] = id;
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for neighbor in adjacency[i].iter().flatten() {
                if in_class[*neighbor] && component[*neighbor] == usize::MAX {
                    component[*neighbor] = id;
                    members.push(*neighbor);
                    stack.push(*neighbor);
                }
            }
        }
        members.sort_unstable();
        components.push(members);
    }

    components
        .into_iter()
        .map(|tile_ids| {
            let shape = classify_patch_shape(tiles, &adjacency, &tile_ids);
            MaximalPatch { tile_ids, shape }
        })
        .collect()
}

/// Tags the union shape of a connected tile set: boundary sides are those
/// without a full-edge partner inside the set; corners are boundary
/// vertices where the boundary direction turns.
fn classify_patch_shape(
    tiles: &[PlacedTile],
    adjacency: &[Vec<Option<usize>>],
    members: &[usize],
) -> PatchShape {
    let area: f64 = members.iter().map(|&i| tiles[i].area()).sum();

    let mut boundary: Vec<Arc> = Vec::new();
    for &i in members {
        for (k, arc) in tiles[i].sides().into_iter().enumerate() {
            let internal = matches!(adjacency[i][k], Some(j) if members.contains(&j));
            if !internal {
                boundary.push(arc);
            }
        }
    }

    if boundary.is_empty() {
        // The component covers the whole sphere.
        return PatchShape::Other;
    }

    // Cluster boundary endpoints and count direction-changing corners.
    let mut corner_points: Vec<UnitVec> = Vec::new();
    let mut clusters: Vec<(UnitVec, Vec<usize>, Vec<usize>)> = Vec::new(); // (rep, in-arcs, out-arcs)
    for (idx, arc) in boundary.iter().enumerate() {
        for (endpoint, incoming) in [(arc.end(), true), (arc.start(), false)] {
            let cluster = match clusters
                .iter_mut()
                .find(|(rep, _, _)| rep.coincides(&endpoint, TOL_VERTEX_CLUSTER))
            {
                Some(c) => c,
                None => {
                    clusters.push((endpoint, Vec::new(), Vec::new()));
                    clusters.last_mut().expect("just pushed")
                }
            };
            if incoming {
                cluster.1.push(idx);
            } else {
                cluster.2.push(idx);
            }
        }
    }
    for (rep, incoming, outgoing) in &clusters {
        let ([arc_in], [arc_out]) = (incoming.as_slice(), outgoing.as_slice()) else {
            // Pinched or non-manifold boundary.
            return PatchShape::Other;
        };
        let dir_in = boundary[*arc_in].pole().cross(rep);
        let dir_out = boundary[*arc_out].pole().cross(rep);
        let turn = dir_in.cross(&dir_out).norm().atan2(dir_in.dot(&dir_out));
        if turn.abs() > 1e-6 {
            corner_points.push(*rep);
        }
    }

    if corner_points.is_empty() && (area - 2.0 * PI).abs() <= 1e-7 {
        return PatchShape::Hemisphere;
    }
    if members.len() == 1 {
        return PatchShape::Singleton;
    }
    if corner_points.len() == 2
        && angular_distance(&corner_points[0], &corner_points[1]) >= PI - 1e-6
    {
        let apex = area / 2.0;
        let side = tiles[members[0]].spec().side();
        for bigon in BigonType::all() {
            if (apex - bigon.apex_angle()).abs() <= 1e-6
                && (side - bigon.side_length()).abs() <= 1e-6
            {
                return PatchShape::Bigon(bigon);
            }
        }
    }
    PatchShape::Other
}

/// Multiset of tile shape classes (gon count, reflex flag, interior angle)
/// with angles bucketed for comparison at tolerance `tol`.
fn spec_class_key(tile: &PlacedTile) -> (u32, bool) {
    (tile.spec().n(), tile.is_reflex())
}

/// Decides whether some isometry maps tiling `a` onto tiling `b` with all
/// vertices corresponding within `tol`. Rotations only, unless
/// `allow_reflection` also admits orientation-reversing maps.
pub fn equivalent_up_to_isometry(
    a: &Tiling,
    b: &Tiling,
    allow_reflection: bool,
    tol: f64,
) -> bool {
    if a.tiles.len() != b.tiles.len() {
        return false;
    }

    // Quick reject: tile class multisets (gons, reflex, angle) must agree.
    let mut class_counts: BTreeMap<(u32, bool), Vec<f64>> = BTreeMap::new();
    for tile in &a.tiles {
        class_counts.entry(spec_class_key(tile)).or_default().push(tile.interior_angle());
    }
    let mut b_angles: BTreeMap<(u32, bool), Vec<f64>> = BTreeMap::new();
    for tile in &b.tiles {
        b_angles.entry(spec_class_key(tile)).or_default().push(tile.interior_angle());
    }
    if class_counts.len() != b_angles.len() {
        return false;
    }
    for (key, angles) in &class_counts {
        let Some(others) = b_angles.get(key) else { return false };
        if others.len() != angles.len() {
            return false;
        }
        let mut taken = vec![false; others.len()];
        for angle in angles {
            match others
                .iter()
                .enumerate()
                .find(|(i, other)| !taken[*i] && (*other - angle).abs() <= 1e-6)
            {
                Some((i, _)) => taken[i] = true,
                None => return false,
            }
        }
    }

    // Seed with a tile from the rarest class.
    let rare_key = class_counts
        .iter()
        .min_by_key(|(_, angles)| angles.len())
        .map(|(key, _)| *key)
        .expect("nonempty tiling");
    let seed = a
        .tiles
        .iter()
        .find(|tile| spec_class_key(tile) == rare_key)
        .expect("class key came from a");
    let (s0, s1) = (seed.vertices()[0], seed.vertices()[1]);

    for target in b.tiles.iter().filter(|tile| spec_class_key(tile) == rare_key) {
        if (target.interior_angle() - seed.interior_angle()).abs() > 1e-6 {
            continue;
        }
        let verts = target.vertices();
        let n = verts.len();
        for k in 0..n {
            let mut candidates = Vec::new();
            if let Ok(iso) = Isometry::from_point_pairs(&s0, &s1, &verts[k], &verts[(k + 1) % n], false)
            {
                candidates.push(iso);
            }
            if allow_reflection
                && let Ok(iso) =
                    Isometry::from_point_pairs(&s0, &s1, &verts[k], &verts[(k + n - 1) % n], true)
            {
                candidates.push(iso);
            }
            for iso in candidates {
                if maps_tiling_onto(a, b, &iso, tol) {
                    return true;
                }
            }
        }
    }
    false
}

fn maps_tiling_onto(a: &Tiling, b: &Tiling, iso: &Isometry, tol: f64) -> bool {
    let mut used = vec![false; b.tiles.len()];
    for tile in &a.tiles {
        let image = tile.transform(iso);
        let center = image.center();
        let found = b.tiles.iter().enumerate().find(|(j, other)| {
            !used[*j]
                && spec_class_key(other) == spec_class_key(&image)
                && other.center().coincides(&center, 10.0 * tol)
                && vertices_match(image.vertices(), other.vertices(), tol)
        });
        match found {
            Some((j, _)) => used[j] = true,
            None => return false,
        }
    }
    true
}

fn vertices_match(xs: &[UnitVec], ys: &[UnitVec], tol: f64) -> bool {
    if xs.len() != ys.len() {
        return false;
    }
    let mut taken = vec![false; ys.len()];
    for x in xs {
        match ys
            .iter()
            .enumerate()
            .find(|(i, y)| !taken[*i] && y.coincides(x, tol))
        {
            Some((i, _)) => taken[i] = true,
            None => return false,
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{
        KaleidoscopeVariant, edge_to_edge_reference, kaleidoscope, lunar, magic_triangle_tiling,
        sporadic, sporadic_orders, two_hemisphere,
    };
    use crate::patch::HemisphereKind;

    #[test]
    fn octahedron_is_edge_to_edge() {
        let t = edge_to_edge_reference("octahedron").unwrap();
        let report = full_report(&t);
        assert_eq!(report.classification, Classification::EdgeToEdge);
        assert_eq!(report.full_vertex_count(), 6);
        assert_eq!(report.vertices.len(), 6);
        assert_eq!(report.edges.len(), 12);
        assert!(report.edges.iter().all(|e| e.match_kind == EdgeMatch::FullFull));
        assert!(report.overlap_pairs.is_empty());
        assert!(report.unmatched_boundary.is_empty());
        assert!(report.area_residual < 1e-9);
    }

    #[test]
    fn kaleidoscope_vertices_are_all_half() {
        let t = kaleidoscope(KaleidoscopeVariant::TriTri, 70f64.to_radians()).unwrap();
        let report = full_report(&t);
        assert_eq!(report.classification, Classification::NonEdgeToEdge);
        assert_eq!(report.vertices.len(), 12);
        assert!(report.vertices.iter().all(|v| v.class == VertexClass::Half));
        for v in &report.vertices {
            assert_eq!(v.corners.len(), 2);
            assert!((v.angle_sum - PI).abs() < 1e-9);
            // Both corner tiles are triangles.
            assert!(v.corners.iter().all(|c| t.tiles[c.tile].spec().n() == 3));
        }
    }

    #[test]
    fn deleted_tile_is_invalid() {
        let mut t = edge_to_edge_reference("octahedron").unwrap();
        t.tiles.pop();
        let report = full_report(&t);
        assert_eq!(report.classification, Classification::Invalid);
        assert!(!report.unmatched_boundary.is_empty());
        assert!(report.area_residual > 1e-3);
    }

    #[test]
    fn duplicated_tile_is_invalid() {
        let mut t = edge_to_edge_reference("octahedron").unwrap();
        t.tiles.push(t.tiles[0].clone());
        let report = full_report(&t);
        assert_eq!(report.classification, Classification::Invalid);
        assert!(!report.overlap_pairs.is_empty());
    }

    #[test]
    fn perturbed_vertex_is_invalid() {
        let t = edge_to_edge_reference("octahedron").unwrap();
        let mut tiles = t.tiles.clone();
        let mut verts = tiles[0].vertices().to_vec();
        verts[0] = verts[0].walk(&verts[1].as_vector(), 1e-3);
        tiles[0] = PlacedTile::new_lenient(tiles[0].spec(), verts).unwrap();
        let perturbed = Tiling { tiles, ..t };
        let report = full_report(&perturbed);
        assert_eq!(report.classification, Classification::Invalid);
    }

    #[test]
    fn sporadic_pole_vertices_are_full() {
        let t = sporadic(sporadic_orders()[0]).unwrap();
        let report = full_report(&t);
        assert_eq!(report.classification, Classification::NonEdgeToEdge);
        let poles: Vec<&VertexRecord> = report
            .vertices
            .iter()
            .filter(|v| v.location.z().abs() > 1.0 - 1e-9)
            .collect();
        assert_eq!(poles.len(), 2);
        for pole in poles {
            assert_eq!(pole.class, VertexClass::Full);
            assert_eq!(pole.corners.len(), 4);
            assert!((pole.angle_sum - 2.0 * PI).abs() < 1e-9);
        }
    }

    #[test]
    fn magic_tiling_reflex_corner_closes_vertices() {
        let t = magic_triangle_tiling().unwrap();
        let report = full_report(&t);
        assert_eq!(report.classification, Classification::NonEdgeToEdge);
        let reflex_vertices: Vec<&VertexRecord> = report
            .vertices
            .iter()
            .filter(|v| v.corners.iter().any(|c| c.angle > PI))
            .collect();
        assert_eq!(reflex_vertices.len(), 3);
        for v in reflex_vertices {
            assert_eq!(v.class, VertexClass::Full);
        }
    }

    #[test]
    fn maximal_patch_examples() {
        let sporadic_t = sporadic(sporadic_orders()[0]).unwrap();
        let patches = extract_maximal_patches(&sporadic_t, PI / 2.0);
        let bigons: Vec<&MaximalPatch> = patches
            .iter()
            .filter(|p| p.shape == PatchShape::Bigon(BigonType::I))
            .collect();
        assert_eq!(bigons.len(), 2);
        assert!(bigons.iter().all(|p| p.tile_ids.len() == 2));

        let lunar_t = lunar(BigonType::II, 5).unwrap();
        let patches = extract_maximal_patches(&lunar_t, PI / 3.0);
        assert_eq!(patches.len(), 5);
        assert!(patches.iter().all(|p| p.shape == PatchShape::Bigon(BigonType::II)));
        assert!(patches.iter().all(|p| p.tile_ids.len() == 3));

        let iv = KaleidoscopeVariant::PentTri.interval();
        let kal = kaleidoscope(KaleidoscopeVariant::PentTri, 0.5 * (iv.lo + iv.hi)).unwrap();
        let small_side = kal
            .tiles
            .iter()
            .map(|tile| tile.spec().side())
            .fold(f64::INFINITY, f64::min);
        let patches = extract_maximal_patches(&kal, small_side);
        assert_eq!(patches.len(), 12);
        assert!(patches.iter().all(|p| p.shape == PatchShape::Singleton));
    }

    #[test]
    fn hemisphere_patches_detected() {
        let t = two_hemisphere(HemisphereKind::Octa, HemisphereKind::Octa, 0.4).unwrap();
        let patches = extract_maximal_patches(&t, PI / 2.0);
        assert_eq!(patches.len(), 2);
        assert!(patches.iter().all(|p| p.shape == PatchShape::Hemisphere));
        let monogon =
            two_hemisphere(HemisphereKind::Monogon(5), HemisphereKind::Octa, 0.2).unwrap();
        let side = 2.0 * PI / 5.0;
        let patches = extract_maximal_patches(&monogon, side);
        assert_eq!(patches.len(), 1);
        assert_eq!(patches[0].shape, PatchShape::Hemisphere);
    }

    #[test]
    fn equivalence_up_to_isometry() {
        let octa = edge_to_edge_reference("octahedron").unwrap();
        let rot = Isometry::rotation(&UnitVec::new(0.3, -0.5, 0.9).unwrap(), 1.234);
        let rotated = Tiling {
            tiles: octa.tiles.iter().map(|t| t.transform(&rot)).collect(),
            ..octa.clone()
        };
        assert!(equivalent_up_to_isometry(&octa, &rotated, false, 1e-7));

        let a = kaleidoscope(KaleidoscopeVariant::TriTri, 70f64.to_radians()).unwrap();
        let b = kaleidoscope(KaleidoscopeVariant::TriTri, 75f64.to_radians()).unwrap();
        assert!(!equivalent_up_to_isometry(&a, &b, true, 1e-7));

        // Kaleidoscopes are chiral: the mirror image needs reflections.
        let mirror = Isometry::reflection(&UnitVec::equator(0.0));
        let reflected = Tiling {
            tiles: a.tiles.iter().map(|t| t.transform(&mirror)).collect(),
            ..a.clone()
        };
        assert!(!equivalent_up_to_isometry(&a, &reflected, false, 1e-7));
        assert!(equivalent_up_to_isometry(&a, &reflected, true, 1e-7));
    }

    #[test]
    fn report_is_isometry_invariant() {
        let t = kaleidoscope(KaleidoscopeVariant::SquareTri, 1.8).unwrap();
        let base = full_report(&t);
        let rot = Isometry::rotation(&UnitVec::new(-0.2, 0.7, 0.4).unwrap(), 2.345);
        let moved = Tiling {
            tiles: t.tiles.iter().map(|tile| tile.transform(&rot)).collect(),
            ..t.clone()
        };
        let other = full_report(&moved);
        assert_eq!(base.classification, other.classification);
        assert_eq!(base.vertices.len(), other.vertices.len());
        assert_eq!(base.full_vertex_count(), other.full_vertex_count());
        assert_eq!(base.half_vertex_count(), other.half_vertex_count());
        assert_eq!(base.edges.len(), other.edges.len());
        assert_eq!(base.maximal_patches.len(), other.maximal_patches.len());
    }

    #[test]
    fn report_serializes_to_json() {
        let t = lunar(BigonType::II, 3).unwrap();
        let report = full_report(&t);
        let json = report.to_json();
        assert!(json.contains("\"classification\": \"non-edge-to-edge\""));
        assert!(json.contains("\"area_residual\""));
    }
}
