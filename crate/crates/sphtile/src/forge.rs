//! Tile placement: concrete regular polygons on the sphere.
//!
//! A [`PlacedTile`] is a shape from [`crate::polygon`] pinned to actual
//! coordinates, with vertices ordered counterclockwise as seen from outside
//! the sphere. Tiles are placed either by center + orientation or by gluing
//! onto a directed edge, which is how every multi-tile patch in this crate
//! is assembled.

use crate::error::{Error, Result};
use crate::polygon::RegularPolygonSpec;
use crate::sphere::{Arc, Isometry, PointLocation, UnitVec, angular_distance, corner_angle};
use crate::TOL_COINCIDENCE;
use std::f64::consts::PI;

/// Which side of a directed edge a tile is glued onto. `Left` is the side a
/// walker from start to end (head outward) has on their left; gluing two
/// tiles on opposite sides of one arc makes them share that side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeSide {
    Left,
    Right,
}

/// A regular polygon placed on the sphere.
///
/// Vertices run counterclockwise from outside, so the interior is to the
/// left of each directed side. One special case is admitted: a *complement*
/// placement whose corner angles all read 2π − α instead of α. That is the
/// reading of a regular triangle's exterior (the rest of the sphere), which
/// appears as a genuine tile in exactly one tiling.
#[derive(Debug, Clone)]
pub struct PlacedTile {
    spec: RegularPolygonSpec,
    vertices: Vec<UnitVec>,
    reflex: bool,
}

impl PlacedTile {
    /// Validates and wraps a placed tile: vertex count n, all sides equal to
    /// the spec's side within 1e-9, and all corner angles equal to the
    /// spec's angle within 1e-9 (or all equal to its explement 2π − α, the
    /// complement-tile case).
    pub fn new(spec: RegularPolygonSpec, vertices: Vec<UnitVec>) -> Result<Self> {
        let n = spec.n() as usize;
        if vertices.len() != n {
            return Err(Error::InvalidPolygon(format!(
                "expected {n} vertices, got {}",
                vertices.len()
            )));
        }
        for i in 0..n {
            let d = angular_distance(&vertices[i], &vertices[(i + 1) % n]);
            if (d - spec.side()).abs() > TOL_COINCIDENCE {
                return Err(Error::InvalidPolygon(format!(
                    "side {i} has length {d}, spec requires {}",
                    spec.side()
                )));
            }
        }
        let mut convex = 0usize;
        let mut reflex = 0usize;
        for i in 0..n {
            let ang = corner_angle(&vertices[(i + n - 1) % n], &vertices[i], &vertices[(i + 1) % n])?;
            if (ang - spec.angle()).abs() <= TOL_COINCIDENCE {
                convex += 1;
            } else if (ang - (2.0 * PI - spec.angle())).abs() <= TOL_COINCIDENCE {
                reflex += 1;
            } else {
                return Err(Error::InvalidPolygon(format!(
                    "corner {i} has angle {ang}, spec requires {} (or its explement)",
                    spec.angle()
                )));
            }
        }
        let is_reflex = match (convex, reflex) {
            (c, 0) if c == n => false,
            (0, r) if r == n => true,
            // The hemisphere tile (α = π) reads the same either way.
            _ if (spec.angle() - PI).abs() <= TOL_COINCIDENCE => false,
            _ => {
                return Err(Error::InvalidPolygon(
                    "corners mix the spec angle with its explement".into(),
                ));
            }
        };
        Ok(Self { spec, vertices, reflex: is_reflex })
    }

    /// Builds a tile without checking the geometry against the spec.
    ///
    /// Only the vertex count is enforced. This is for reconstructing tiles
    /// from external data that may be corrupted: the verifier, not the
    /// constructor, is the judge of such input. Corners are read as reflex
    /// when every measured angle exceeds π.
    pub fn new_lenient(spec: RegularPolygonSpec, vertices: Vec<UnitVec>) -> Result<Self> {
        let n = spec.n() as usize;
        if vertices.len() != n {
            return Err(Error::InvalidPolygon(format!(
                "expected {n} vertices, got {}",
                vertices.len()
            )));
        }
        let mut above_pi = 0usize;
        for i in 0..n {
            let ang = corner_angle(&vertices[(i + n - 1) % n], &vertices[i], &vertices[(i + 1) % n])?;
            if ang > PI {
                above_pi += 1;
            }
        }
        Ok(Self { spec, vertices, reflex: above_pi == n })
    }

    pub fn spec(&self) -> RegularPolygonSpec {
        self.spec
    }

    pub fn vertices(&self) -> &[UnitVec] {
        &self.vertices
    }

    /// True for the complement placement (corner angles 2π − α).
    pub fn is_reflex(&self) -> bool {
        self.reflex
    }

    /// The directed boundary sides, counterclockwise.
    pub fn sides(&self) -> Vec<Arc> {
        let n = self.vertices.len();
        (0..n)
            .map(|i| {
                Arc::new(self.vertices[i], self.vertices[(i + 1) % n])
                    .expect("validated tile has non-degenerate sides")
            })
            .collect()
    }

    /// Interior angle at each vertex (the spec angle, or its explement for
    /// a complement placement).
    pub fn interior_angle(&self) -> f64 {
        if self.reflex { 2.0 * PI - self.spec.angle() } else { self.spec.angle() }
    }

    /// Interior area by the angle-excess formula. For a complement
    /// placement this is the area of the exterior region, as it should be.
    pub fn area(&self) -> f64 {
        let n = self.vertices.len() as f64;
        let per_corner = if self.reflex { 2.0 * PI - self.spec.angle() } else { self.spec.angle() };
        n * per_corner - (n - 2.0) * PI
    }

    /// The interior-side center: the point equidistant from all sides on
    /// the interior side. Computed from the side poles, which also handles
    /// hemisphere tiles (whose vertices average to zero) and complement
    /// placements (whose center is opposite the vertex average).
    pub fn center(&self) -> UnitVec {
        let sum = self
            .sides()
            .iter()
            .map(|s| s.pole().as_vector())
            .sum::<nalgebra::Vector3<f64>>();
        UnitVec::from_vector(sum).expect("side poles of a valid tile do not cancel")
    }

    /// Locates a point relative to the tile.
    pub fn contains(&self, p: &UnitVec) -> Result<PointLocation> {
        let sides = self.sides();
        // The center is strictly interior and far from every side, so it
        // anchors a crossing-parity test; fallbacks nearby cover rays that
        // graze a vertex.
        let center = self.center();
        let step = self.spec.side() / 100.0;
        let mut anchors = vec![center];
        for k in 0..4u32 {
            let dir = center.azimuth_tangent(1.3 * f64::from(k));
            anchors.push(center.walk(&dir, step * (1.0 + 0.1 * f64::from(k))));
        }
        crate::sphere::parity_location(p, &sides, &anchors)
    }

    /// Image of the tile under an isometry. Reflections reverse the
    /// counterclockwise reading, so the vertex order is flipped for them to
    /// keep the stored order counterclockwise.
    pub fn transform(&self, iso: &Isometry) -> Self {
        let mut vertices: Vec<UnitVec> = self.vertices.iter().map(|v| iso.apply(v)).collect();
        if !iso.is_rotation() {
            vertices.reverse();
        }
        Self { spec: self.spec, vertices, reflex: self.reflex }
    }
}

/// Places a polygon by its center: vertex 0 lies at the circumradius along
/// the given azimuth from `center`, and the rest follow counterclockwise.
pub fn place_polygon_at_center(
    spec: RegularPolygonSpec,
    center: UnitVec,
    azimuth: f64,
) -> Result<PlacedTile> {
    let big_r = spec.circumradius();
    let v0 = center.walk(&center.azimuth_tangent(azimuth), big_r);
    let step = Isometry::rotation(&center, 2.0 * PI / spec.n() as f64);
    let mut vertices = Vec::with_capacity(spec.n() as usize);
    let mut v = v0;
    for _ in 0..spec.n() {
        vertices.push(v);
        v = step.apply(&v);
    }
    PlacedTile::new(spec, vertices)
}

/// Places a polygon with one side on the directed arc from `edge_start` to
/// `edge_end`, body on the requested side. On the left, `edge_start` and
/// `edge_end` are consecutive in the tile's counterclockwise vertex order.
///
/// Errors when the arc length does not match the spec's side length within
/// 1e-9.
pub fn place_polygon_on_edge(
    spec: RegularPolygonSpec,
    edge_start: &UnitVec,
    edge_end: &UnitVec,
    side: EdgeSide,
) -> Result<PlacedTile> {
    let measured = angular_distance(edge_start, edge_end);
    if (measured - spec.side()).abs() > TOL_COINCIDENCE {
        return Err(Error::LengthMismatch { measured, required: spec.side() });
    }
    let (start, end) = match side {
        EdgeSide::Left => (*edge_start, *edge_end),
        EdgeSide::Right => (*edge_end, *edge_start),
    };
    // Center: off the edge midpoint, toward the left of start → end, at the
    // inradius.
    let edge = Arc::new(start, end)?;
    let mid = edge.midpoint();
    let pole = edge.pole();
    let r = spec.inradius();
    let c = UnitVec::from_vector(mid.as_vector() * r.cos() + pole.as_vector() * r.sin())
        .expect("unit by construction");
    let step = Isometry::rotation(&c, 2.0 * PI / spec.n() as f64);
    let mut vertices = Vec::with_capacity(spec.n() as usize);
    let mut v = start;
    for _ in 0..spec.n() {
        vertices.push(v);
        v = step.apply(&v);
    }
    let tile = PlacedTile::new(spec, vertices)?;
    debug_assert!(
        tile.vertices()[1].coincides(&end, TOL_COINCIDENCE),
        "vertex 1 must land on the edge end"
    );
    Ok(tile)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn octant_spec() -> RegularPolygonSpec {
        RegularPolygonSpec::from_angle(3, PI / 2.0).unwrap()
    }

    #[test]
    fn octant_on_equatorial_edge_left() {
        let start = UnitVec::equator(0.0);
        let end = UnitVec::equator(PI / 2.0);
        let tile = place_polygon_on_edge(octant_spec(), &start, &end, EdgeSide::Left).unwrap();
        assert!(tile.vertices()[0].coincides(&start, 1e-12));
        assert!(tile.vertices()[1].coincides(&end, 1e-12));
        assert!(tile.vertices()[2].coincides(&UnitVec::north_pole(), 1e-12));
        assert_abs_diff_eq!(tile.area(), PI / 2.0, epsilon = 1e-12);
    }

    #[test]
    fn octant_on_equatorial_edge_right_is_mirror() {
        let start = UnitVec::equator(0.0);
        let end = UnitVec::equator(PI / 2.0);
        let tile = place_polygon_on_edge(octant_spec(), &start, &end, EdgeSide::Right).unwrap();
        assert!(tile.vertices().iter().any(|v| v.coincides(&UnitVec::south_pole(), 1e-12)));
    }

    #[test]
    fn edge_length_mismatch_rejected() {
        let magic = RegularPolygonSpec::from_angle(3, PI - 2.0f64.atan()).unwrap();
        let start = UnitVec::equator(0.0);
        let end = UnitVec::equator(PI / 3.0);
        let err = place_polygon_on_edge(magic, &start, &end, EdgeSide::Left).unwrap_err();
        match err {
            Error::LengthMismatch { measured, required } => {
                assert_abs_diff_eq!(measured, PI / 3.0, epsilon = 1e-12);
                assert_abs_diff_eq!(required, 3.0 * PI / 5.0, epsilon = 1e-12);
            }
            other => panic!("expected length mismatch, got {other:?}"),
        }
    }

    #[test]
    fn centered_placement_round_trips() {
        let spec = RegularPolygonSpec::from_angle(5, 2.0).unwrap();
        let center = UnitVec::new(0.3, -0.2, 0.9).unwrap();
        let tile = place_polygon_at_center(spec, center, 0.7).unwrap();
        assert!(tile.center().coincides(&center, 1e-9));
        for v in tile.vertices() {
            assert_abs_diff_eq!(
                angular_distance(v, &center),
                spec.circumradius(),
                epsilon = 1e-12
            );
        }
        // Gluing onto its own first side from the other side reproduces a
        // mirror tile sharing that side.
        let glued = place_polygon_on_edge(
            spec,
            &tile.vertices()[1],
            &tile.vertices()[0],
            EdgeSide::Left,
        )
        .unwrap();
        assert!(glued.vertices()[0].coincides(&tile.vertices()[1], 1e-12));
        assert!(!glued.center().coincides(&center, 1e-6));
    }

    #[test]
    fn complement_tile_accepted_only_as_explement() {
        let magic = RegularPolygonSpec::from_angle(3, PI - 2.0f64.atan()).unwrap();
        let tile = place_polygon_at_center(magic, UnitVec::north_pole(), 0.0).unwrap();
        assert!(!tile.is_reflex());
        let mut reversed = tile.vertices().to_vec();
        reversed.reverse();
        let comp = PlacedTile::new(magic, reversed).unwrap();
        assert!(comp.is_reflex());
        // Area of triangle + complement = whole sphere.
        assert_abs_diff_eq!(tile.area() + comp.area(), 4.0 * PI, epsilon = 1e-12);
        // Complement's interior center is opposite the triangle's.
        assert!(comp.center().coincides(&tile.center().antipode(), 1e-9));
        assert_eq!(comp.contains(&UnitVec::south_pole()).unwrap(), PointLocation::Inside);
        assert_eq!(comp.contains(&UnitVec::north_pole()).unwrap(), PointLocation::Outside);
    }

    #[test]
    fn hemisphere_tile_as_polygon_with_flat_angles() {
        let spec = RegularPolygonSpec::from_angle(4, PI).unwrap();
        let vertices: Vec<UnitVec> =
            (0..4).map(|k| UnitVec::equator(2.0 * PI * k as f64 / 4.0)).collect();
        let tile = PlacedTile::new(spec, vertices).unwrap();
        assert_abs_diff_eq!(tile.area(), 2.0 * PI, epsilon = 1e-12);
        assert!(tile.center().coincides(&UnitVec::north_pole(), 1e-12));
        assert_eq!(tile.contains(&UnitVec::north_pole()).unwrap(), PointLocation::Inside);
        assert_eq!(tile.contains(&UnitVec::south_pole()).unwrap(), PointLocation::Outside);
    }

    #[test]
    fn transform_keeps_tiles_valid() {
        let spec = RegularPolygonSpec::from_angle(3, 1.9).unwrap();
        let tile = place_polygon_at_center(spec, UnitVec::new(1.0, 1.0, 0.2).unwrap(), 0.3).unwrap();
        let rot = Isometry::rotation(&UnitVec::new(-1.0, 2.0, 0.4).unwrap(), 1.1);
        let moved = tile.transform(&rot);
        assert!(PlacedTile::new(spec, moved.vertices().to_vec()).is_ok());
        let mirror = Isometry::reflection(&UnitVec::north_pole());
        let mirrored = tile.transform(&mirror);
        // Reversal keeps the counterclockwise reading valid and non-reflex.
        let revalidated = PlacedTile::new(spec, mirrored.vertices().to_vec()).unwrap();
        assert!(!revalidated.is_reflex());
        // Without the reversal, the corners would read as explements.
        let raw: Vec<UnitVec> = tile.vertices().iter().map(|v| mirror.apply(v)).collect();
        assert!(PlacedTile::new(spec, raw).unwrap().is_reflex());
    }
}
