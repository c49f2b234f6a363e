//! Unit-sphere primitives: points, great-circle arcs, isometries, angle
//! measurement, arc intersection, and point-in-polygon tests.
//!
//! Points are 3D unit vectors rather than latitude/longitude, so there are no
//! pole singularities; tilings place tiles at the poles constantly. All
//! polygons are stored counterclockwise as seen from outside the sphere, so a
//! polygon's interior lies to the left of each directed boundary arc.

use crate::error::{Error, Result};
use crate::{TOL_COINCIDENCE, TOL_UNIT_NORM, TOL_VERTEX_CLUSTER};
use nalgebra::{Matrix3, Rotation3, Unit, Vector3};
use std::f64::consts::PI;

/// A point on the unit sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitVec(Vector3<f64>);

impl serde::Serialize for UnitVec {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        [self.x(), self.y(), self.z()].serialize(serializer)
    }
}

impl UnitVec {
    /// Normalizes the given coordinates onto the sphere.
    ///
    /// Errors on (near-)zero input, where the direction is undefined.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        Self::from_vector(Vector3::new(x, y, z))
    }

    /// Normalizes a vector onto the sphere.
    pub fn from_vector(v: Vector3<f64>) -> Result<Self> {
        let n = v.norm();
        if n < TOL_UNIT_NORM {
            return Err(Error::Degenerate("cannot normalize a zero vector".into()));
        }
        Ok(Self(v / n))
    }

    /// Adopts components that are already unit-norm within 1e-12 *without*
    /// renormalizing, so deserialized coordinates reserialize byte-for-byte;
    /// anything further off the sphere is normalized (errors only on
    /// near-zero input).
    pub fn from_components(x: f64, y: f64, z: f64) -> Result<Self> {
        let v = Vector3::new(x, y, z);
        if !(x.is_finite() && y.is_finite() && z.is_finite()) {
            return Err(Error::Degenerate("non-finite components".into()));
        }
        if (v.norm() - 1.0).abs() <= TOL_UNIT_NORM {
            Ok(Self(v))
        } else {
            Self::from_vector(v)
        }
    }

    /// The north pole (0, 0, 1).
    pub fn north_pole() -> Self {
        Self(Vector3::z())
    }

    /// The south pole (0, 0, −1).
    pub fn south_pole() -> Self {
        Self(-Vector3::z())
    }

    /// Point on the equator at the given azimuth (radians east of +x).
    pub fn equator(azimuth: f64) -> Self {
        Self(Vector3::new(azimuth.cos(), azimuth.sin(), 0.0))
    }

    pub fn x(&self) -> f64 {
        self.0.x
    }
    pub fn y(&self) -> f64 {
        self.0.y
    }
    pub fn z(&self) -> f64 {
        self.0.z
    }

    /// The underlying Cartesian vector.
    pub fn as_vector(&self) -> Vector3<f64> {
        self.0
    }

    /// The antipodal point.
    pub fn antipode(&self) -> Self {
        Self(-self.0)
    }

    pub fn dot(&self, other: &Self) -> f64 {
        self.0.dot(&other.0)
    }

    pub fn cross(&self, other: &Self) -> Vector3<f64> {
        self.0.cross(&other.0)
    }

    /// True when the two points coincide within `tol` radians.
    pub fn coincides(&self, other: &Self, tol: f64) -> bool {
        angular_distance(self, other) <= tol
    }

    /// Unit tangent vector at `self` pointing toward `toward`.
    ///
    /// Errors when `toward` coincides with this point or its antipode, where
    /// the direction is undefined.
    pub fn tangent_toward(&self, toward: &Self) -> Result<Vector3<f64>> {
        let t = toward.0 - self.0 * self.0.dot(&toward.0);
        let n = t.norm();
        if n < 1e-9 {
            return Err(Error::Degenerate(
                "tangent direction undefined for coincident or antipodal points".into(),
            ));
        }
        Ok(t / n)
    }

    /// Tangent direction at `self` for the given azimuth.
    ///
    /// Azimuth 0 points toward the north pole; azimuth grows counterclockwise
    /// as seen from outside the sphere. At the poles themselves, azimuth is
    /// the longitude of the departing great circle.
    pub fn azimuth_tangent(&self, azimuth: f64) -> Vector3<f64> {
        let mut north = Vector3::z() - self.0 * self.0.z;
        if north.norm() < 1e-9 {
            // At a pole: the +x meridian is the zero-azimuth reference.
            north = Vector3::x() - self.0 * self.0.x;
        }
        let north = north.normalize();
        let east = north.cross(&self.0);
        north * azimuth.cos() - east * azimuth.sin()
    }

    /// Walks from this point a given angular distance along the tangent
    /// direction `dir` (which must be unit and orthogonal to the point).
    pub fn walk(&self, dir: &Vector3<f64>, distance: f64) -> Self {
        Self((self.0 * distance.cos() + dir * distance.sin()).normalize())
    }

    /// Azimuth at `self` of the departing great circle toward `toward`:
    /// the inverse of [`UnitVec::azimuth_tangent`], in (−π, π].
    pub fn azimuth_toward(&self, toward: &Self) -> Result<f64> {
        let t = self.tangent_toward(toward)?;
        let north = self.azimuth_tangent(0.0);
        let west = self.azimuth_tangent(PI / 2.0);
        Ok(t.dot(&west).atan2(t.dot(&north)))
    }
}

/// Angular (great-circle) distance between two points, in [0, π].
///
/// Uses atan2 of the cross and dot products rather than acos of the dot
/// product: acos loses ~√ε absolute accuracy near 0 and π, which would be
/// far above the 1e-9 coincidence tolerance this crate relies on.
pub fn angular_distance(p: &UnitVec, q: &UnitVec) -> f64 {
    p.cross(q).norm().atan2(p.dot(q))
}

/// Point at angular distance `t` from `a` along the great circle through `a`
/// and `b` (continuing past `b` when `t` exceeds their distance).
///
/// Errors when `a` and `b` do not span a unique great circle.
pub fn point_along(a: &UnitVec, b: &UnitVec, t: f64) -> Result<UnitVec> {
    let dir = a.tangent_toward(b)?;
    Ok(a.walk(&dir, t))
}

/// Interior spherical angle at `apex`, measured between the arcs toward
/// `prev` and `next`, on the side that makes the vertex order
/// prev → apex → next counterclockwise from outside. Returns a value in
/// (0, 2π); angles above π occur for reflex corners.
pub fn corner_angle(prev: &UnitVec, apex: &UnitVec, next: &UnitVec) -> Result<f64> {
    let t_prev = apex.tangent_toward(prev)?;
    let t_next = apex.tangent_toward(next)?;
    let det = apex.as_vector().dot(&t_next.cross(&t_prev));
    let dot = t_next.dot(&t_prev);
    let mut angle = det.atan2(dot);
    if angle <= 0.0 {
        angle += 2.0 * PI;
    }
    Ok(angle)
}

/// A minor great-circle arc between two non-antipodal endpoints.
#[derive(Debug, Clone, Copy)]
pub struct Arc {
    a: UnitVec,
    b: UnitVec,
}

impl Arc {
    /// Builds the minor arc from `a` to `b`.
    ///
    /// Coincident endpoints give a degenerate arc and antipodal endpoints an
    /// ambiguous one; both are rejected.
    pub fn new(a: UnitVec, b: UnitVec) -> Result<Self> {
        let len = angular_distance(&a, &b);
        if len < 1e-12 {
            return Err(Error::Degenerate("arc endpoints coincide".into()));
        }
        if PI - len < 1e-12 {
            return Err(Error::Degenerate("arc endpoints are antipodal".into()));
        }
        Ok(Self { a, b })
    }

    pub fn start(&self) -> UnitVec {
        self.a
    }

    pub fn end(&self) -> UnitVec {
        self.b
    }

    /// Arc length in radians, in (0, π).
    pub fn length(&self) -> f64 {
        angular_distance(&self.a, &self.b)
    }

    /// Unit normal of the arc's great-circle plane (right-hand rule a → b).
    pub fn pole(&self) -> UnitVec {
        UnitVec::from_vector(self.a.cross(&self.b)).expect("non-degenerate arc has a pole")
    }

    /// Midpoint of the arc.
    pub fn midpoint(&self) -> UnitVec {
        UnitVec::from_vector(self.a.as_vector() + self.b.as_vector())
            .expect("non-antipodal endpoints have a midpoint")
    }

    /// True when `p` lies on this arc within `tol` radians.
    pub fn contains(&self, p: &UnitVec, tol: f64) -> bool {
        self.distance_to(p) <= tol
    }

    /// Angular distance from `p` to the nearest point of the arc.
    pub fn distance_to(&self, p: &UnitVec) -> f64 {
        let n = self.pole();
        let off_plane = p.dot(&n);
        let foot = p.as_vector() - n.as_vector() * off_plane;
        if foot.norm() < 1e-12 {
            // p is a pole of the great circle: equidistant from the whole arc.
            return PI / 2.0;
        }
        let q = UnitVec::from_vector(foot).expect("checked norm");
        let len = self.length();
        if angular_distance(&self.a, &q) + angular_distance(&q, &self.b) <= len + 1e-9 {
            angular_distance(p, &q)
        } else {
            angular_distance(p, &self.a).min(angular_distance(p, &self.b))
        }
    }

    /// Signed position of `p` along the arc's great circle: the angle from
    /// `a`, counterclockwise about the pole, in (−π, π]. Points on the arc
    /// itself read in [0, length] up to noise.
    pub(crate) fn circle_position(&self, p: &UnitVec) -> f64 {
        let n = self.pole();
        let e1 = self.a.as_vector();
        let e2 = n.as_vector().cross(&e1);
        p.as_vector().dot(&e2).atan2(p.as_vector().dot(&e1))
    }
}

/// Result of intersecting two arcs.
#[derive(Debug, Clone, Copy)]
pub enum ArcIntersection {
    /// The arcs do not meet.
    Empty,
    /// The arcs meet in a single point (a transversal crossing or an
    /// endpoint touch).
    Point(UnitVec),
    /// The arcs lie on one great circle and share a sub-arc of positive
    /// length.
    SubArc(Arc),
}

/// Intersects two minor arcs with coincidence tolerance `tol` (radians).
///
/// Collinear overlap is detected by great-circle pole comparison; the shared
/// sub-arc is returned with its endpoints. The classification is symmetric in
/// the arguments.
pub fn arcs_intersect(u: &Arc, v: &Arc, tol: f64) -> ArcIntersection {
    let nu = u.pole();
    let nv = v.pole();
    let cross = nu.cross(&nv);
    if cross.norm() < 1e-9 {
        return collinear_overlap(u, v, tol);
    }
    let t = UnitVec::from_vector(cross).expect("checked norm");
    for cand in [t, t.antipode()] {
        if u.contains(&cand, tol) && v.contains(&cand, tol) {
            return ArcIntersection::Point(cand);
        }
    }
    ArcIntersection::Empty
}

/// Overlap of two arcs on a common great circle.
fn collinear_overlap(u: &Arc, v: &Arc, tol: f64) -> ArcIntersection {
    // Any endpoint of the overlap interval is an endpoint of one of the arcs.
    let mut candidates: Vec<UnitVec> = Vec::new();
    for p in [u.a, u.b] {
        if v.contains(&p, tol) {
            candidates.push(p);
        }
    }
    for p in [v.a, v.b] {
        if u.contains(&p, tol) {
            candidates.push(p);
        }
    }
    // Deduplicate coincident candidates.
    let mut distinct: Vec<UnitVec> = Vec::new();
    for c in candidates {
        if !distinct.iter().any(|d| d.coincides(&c, tol)) {
            distinct.push(c);
        }
    }
    match distinct.len() {
        0 => ArcIntersection::Empty,
        1 => ArcIntersection::Point(distinct[0]),
        _ => {
            // Take the two extreme candidates along the circle.
            let (mut best, mut pair) = (-1.0, (distinct[0], distinct[0]));
            for i in 0..distinct.len() {
                for j in (i + 1)..distinct.len() {
                    let d = angular_distance(&distinct[i], &distinct[j]);
                    if d > best {
                        best = d;
                        pair = (distinct[i], distinct[j]);
                    }
                }
            }
            if best <= tol {
                ArcIntersection::Point(pair.0)
            } else {
                // Keep the sub-arc oriented like `u`.
                let (p, q) = pair;
                let (p, q) = if u.circle_position(&p) <= u.circle_position(&q) + tol {
                    (p, q)
                } else {
                    (q, p)
                };
                match Arc::new(p, q) {
                    Ok(arc) => ArcIntersection::SubArc(arc),
                    Err(_) => ArcIntersection::Point(p),
                }
            }
        }
    }
}

/// Location of a point relative to a spherical polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointLocation {
    Inside,
    Boundary,
    Outside,
}

/// Signed spherical excess of the triangle (a, b, c), positive when the
/// vertex order is counterclockwise from outside. Returns a value in
/// (−2π, 2π].
pub fn signed_triangle_excess(a: &UnitVec, b: &UnitVec, c: &UnitVec) -> f64 {
    let num = a.as_vector().dot(&b.cross(c));
    let den = 1.0 + a.dot(b) + b.dot(c) + c.dot(a);
    2.0 * num.atan2(den)
}

/// Girard area of a simple polygon with counterclockwise boundary: the sum
/// of interior angles minus (n−2)π.
pub fn polygon_interior_area(boundary: &[UnitVec]) -> Result<f64> {
    let n = boundary.len();
    if n < 3 {
        return Err(Error::InvalidPolygon("polygon needs at least 3 vertices".into()));
    }
    let mut sum = 0.0;
    for i in 0..n {
        let prev = &boundary[(i + n - 1) % n];
        let apex = &boundary[i];
        let next = &boundary[(i + 1) % n];
        sum += corner_angle(prev, apex, next)?;
    }
    Ok(sum - (n as f64 - 2.0) * PI)
}

/// Validates that the closed boundary is simple: consecutive sides meet only
/// at their shared vertex and non-adjacent sides do not meet at all.
pub fn validate_simple_polygon(boundary: &[UnitVec]) -> Result<Vec<Arc>> {
    let n = boundary.len();
    if n < 3 {
        return Err(Error::InvalidPolygon("polygon needs at least 3 vertices".into()));
    }
    let mut sides = Vec::with_capacity(n);
    for i in 0..n {
        sides.push(Arc::new(boundary[i], boundary[(i + 1) % n])?);
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            match arcs_intersect(&sides[i], &sides[j], TOL_COINCIDENCE) {
                ArcIntersection::Empty => {
                    if adjacent {
                        return Err(Error::InvalidPolygon(format!(
                            "consecutive sides {i} and {j} do not meet"
                        )));
                    }
                }
                ArcIntersection::Point(p) => {
                    if !adjacent {
                        return Err(Error::InvalidPolygon(format!(
                            "sides {i} and {j} cross at ({:.6}, {:.6}, {:.6})",
                            p.x(),
                            p.y(),
                            p.z()
                        )));
                    }
                    let shared = if j == i + 1 { boundary[j] } else { boundary[0] };
                    if !p.coincides(&shared, TOL_COINCIDENCE) {
                        return Err(Error::InvalidPolygon(format!(
                            "consecutive sides {i} and {j} cross away from their shared vertex"
                        )));
                    }
                }
                ArcIntersection::SubArc(_) => {
                    return Err(Error::InvalidPolygon(format!(
                        "sides {i} and {j} overlap along a sub-arc"
                    )));
                }
            }
        }
    }
    Ok(sides)
}

/// Classifies `p` against a simple closed polygon given counterclockwise
/// from outside. Works for polygons with reflex corners (angles above π).
///
/// Decided by crossing parity along a geodesic from an interior anchor:
/// the anchor is a point just inside a side's midpoint, and `p` is interior
/// exactly when the arc from the anchor to `p` crosses the boundary an even
/// number of times. Anchors are retried until the ray meets the boundary
/// only in clean transversal crossings. Winding-of-bearing tests do not
/// work on the sphere — a boundary enclosing `p`'s antipode sweeps the same
/// ±2π of bearing at `p` as one enclosing `p` itself.
pub fn point_in_spherical_polygon(p: &UnitVec, boundary: &[UnitVec]) -> Result<PointLocation> {
    let sides = validate_simple_polygon(boundary)?;
    // Interior anchors: side midpoints walked inward (a polygon's interior
    // lies toward the pole of each counterclockwise side) by small
    // fractions of the side length.
    let mut anchors = Vec::new();
    for side in &sides {
        for denom in [50.0, 500.0, 5000.0] {
            anchors.push(side.midpoint().walk(&side.pole().as_vector(), side.length() / denom));
        }
    }
    parity_location(p, &sides, &anchors)
}

/// Crossing-parity point location against validated sides, given candidate
/// anchor points known to lie strictly inside.
pub(crate) fn parity_location(
    p: &UnitVec,
    sides: &[Arc],
    anchors: &[UnitVec],
) -> Result<PointLocation> {
    for side in sides {
        if side.contains(p, TOL_COINCIDENCE) {
            return Ok(PointLocation::Boundary);
        }
    }
    'anchors: for anchor in anchors {
        let Ok(ray) = Arc::new(*anchor, *p) else {
            continue; // p antipodal to this anchor
        };
        let mut crossings = 0usize;
        for side in sides {
            match arcs_intersect(&ray, side, TOL_COINCIDENCE) {
                ArcIntersection::Empty => {}
                ArcIntersection::Point(x) => {
                    if x.coincides(p, TOL_VERTEX_CLUSTER) {
                        // p sits marginally on this side.
                        return Ok(PointLocation::Boundary);
                    }
                    // A graze of a vertex or of the anchor is ambiguous;
                    // try the next anchor.
                    if x.coincides(&side.start(), TOL_VERTEX_CLUSTER)
                        || x.coincides(&side.end(), TOL_VERTEX_CLUSTER)
                        || x.coincides(anchor, TOL_VERTEX_CLUSTER)
                    {
                        continue 'anchors;
                    }
                    crossings += 1;
                }
                ArcIntersection::SubArc(_) => continue 'anchors,
            }
        }
        return Ok(if crossings % 2 == 0 { PointLocation::Inside } else { PointLocation::Outside });
    }
    Err(Error::Degenerate(
        "point location failed: every anchor ray grazes the boundary".into(),
    ))
}

/// An isometry of the sphere: a 3×3 orthogonal matrix (rotation when the
/// determinant is +1, a reflection composition when −1).
#[derive(Debug, Clone, Copy)]
pub struct Isometry(Matrix3<f64>);

impl Isometry {
    pub fn identity() -> Self {
        Self(Matrix3::identity())
    }

    /// Rotation by `angle` radians about `axis` (right-hand rule).
    pub fn rotation(axis: &UnitVec, angle: f64) -> Self {
        Self(Rotation3::from_axis_angle(&Unit::new_normalize(axis.as_vector()), angle).into_inner())
    }

    /// Rotation about the polar (+z) axis.
    pub fn rotation_z(angle: f64) -> Self {
        Self::rotation(&UnitVec::north_pole(), angle)
    }

    /// Reflection across the plane through the origin with the given normal.
    pub fn reflection(normal: &UnitVec) -> Self {
        let n = normal.as_vector();
        Self(Matrix3::identity() - 2.0 * n * n.transpose())
    }

    /// The isometry mapping orthonormal tangent data: sends `a1 → b1` and the
    /// direction from `a1` toward `a2` to the direction from `b1` toward
    /// `b2`; with `reflect` the orientation is flipped.
    ///
    /// Errors when either pair is degenerate (coincident/antipodal).
    pub fn from_point_pairs(
        a1: &UnitVec,
        a2: &UnitVec,
        b1: &UnitVec,
        b2: &UnitVec,
        reflect: bool,
    ) -> Result<Self> {
        let frame = |p: &UnitVec, q: &UnitVec, flip: bool| -> Result<Matrix3<f64>> {
            let e1 = p.as_vector();
            let e2 = p.tangent_toward(q)?;
            let mut e3 = e1.cross(&e2);
            if flip {
                e3 = -e3;
            }
            Ok(Matrix3::from_columns(&[e1, e2, e3]))
        };
        let fa = frame(a1, a2, false)?;
        let fb = frame(b1, b2, reflect)?;
        Ok(Self(fb * fa.transpose()))
    }

    /// Applies the isometry to a point.
    pub fn apply(&self, p: &UnitVec) -> UnitVec {
        UnitVec::from_vector(self.0 * p.as_vector()).expect("orthogonal map preserves norm")
    }

    /// Composition: `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        Self(self.0 * other.0)
    }

    pub fn inverse(&self) -> Self {
        Self(self.0.transpose())
    }

    pub fn determinant(&self) -> f64 {
        self.0.determinant()
    }

    /// True for orientation-preserving isometries (pure rotations).
    pub fn is_rotation(&self) -> bool {
        self.determinant() > 0.0
    }

    pub fn matrix(&self) -> Matrix3<f64> {
        self.0
    }

    /// Largest absolute entry difference against another isometry.
    pub fn distance(&self, other: &Self) -> f64 {
        (self.0 - other.0).abs().max()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn uv(x: f64, y: f64, z: f64) -> UnitVec {
        UnitVec::new(x, y, z).unwrap()
    }

    #[test]
    fn angular_distance_axes() {
        let n = UnitVec::north_pole();
        assert_abs_diff_eq!(angular_distance(&n, &n), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(angular_distance(&n, &UnitVec::south_pole()), PI, epsilon = 1e-15);
        assert_abs_diff_eq!(
            angular_distance(&uv(1.0, 0.0, 0.0), &uv(0.0, 1.0, 0.0)),
            PI / 2.0,
            epsilon = 1e-15
        );
    }

    #[test]
    fn corner_angle_octant_triangle() {
        let a = uv(1.0, 0.0, 0.0);
        let b = uv(0.0, 1.0, 0.0);
        let c = uv(0.0, 0.0, 1.0);
        // (a, b, c) is counterclockwise from outside; all corners are right angles.
        assert_abs_diff_eq!(corner_angle(&b, &c, &a).unwrap(), PI / 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(corner_angle(&a, &b, &c).unwrap(), PI / 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(corner_angle(&c, &a, &b).unwrap(), PI / 2.0, epsilon = 1e-12);
        // Reversed orientation exposes the reflex angle.
        assert_abs_diff_eq!(corner_angle(&a, &c, &b).unwrap(), 3.0 * PI / 2.0, epsilon = 1e-12);
    }

    #[test]
    fn corner_angle_on_great_circle_is_pi() {
        let a = UnitVec::equator(0.0);
        let apex = UnitVec::equator(0.7);
        let b = UnitVec::equator(1.9);
        assert_abs_diff_eq!(corner_angle(&a, &apex, &b).unwrap(), PI, epsilon = 1e-12);
    }

    #[test]
    fn corner_angle_rejects_degenerate() {
        let a = uv(1.0, 0.0, 0.0);
        assert!(corner_angle(&a, &a, &uv(0.0, 1.0, 0.0)).is_err());
        assert!(corner_angle(&a.antipode(), &a, &uv(0.0, 1.0, 0.0)).is_err());
    }

    #[test]
    fn arc_basic_properties() {
        let arc = Arc::new(uv(1.0, 0.0, 0.0), uv(0.0, 1.0, 0.0)).unwrap();
        assert_abs_diff_eq!(arc.length(), PI / 2.0, epsilon = 1e-15);
        assert!(arc.pole().coincides(&UnitVec::north_pole(), 1e-12));
        assert!(arc.contains(&UnitVec::equator(0.3), 1e-9));
        assert!(!arc.contains(&UnitVec::equator(-0.3), 1e-9));
        assert!(Arc::new(uv(1.0, 0.0, 0.0), uv(1.0, 0.0, 0.0)).is_err());
        assert!(Arc::new(uv(1.0, 0.0, 0.0), uv(-1.0, 0.0, 0.0)).is_err());
    }

    #[test]
    fn arcs_crossing_at_pole() {
        // Two meridian arcs both passing through the north pole.
        let u = Arc::new(UnitVec::equator(0.0), UnitVec::equator(PI / 2.0)).unwrap();
        // Arc from (0°, lifted) crossing the equator: use meridian arcs instead.
        let m1 = Arc::new(uv(1.0, 0.0, 1.0), uv(-1.0, 0.0, 1.0)).unwrap();
        let m2 = Arc::new(uv(0.0, 1.0, 1.0), uv(0.0, -1.0, 1.0)).unwrap();
        match arcs_intersect(&m1, &m2, 1e-9) {
            ArcIntersection::Point(p) => assert!(p.coincides(&UnitVec::north_pole(), 1e-9)),
            other => panic!("expected point, got {other:?}"),
        }
        // Equator arc and a meridian arc that stays north of it: empty.
        match arcs_intersect(&u, &m1, 1e-9) {
            ArcIntersection::Empty => {}
            other => panic!("expected empty, got {other:?}"),
        }
    }

    #[test]
    fn arcs_collinear_overlap() {
        let u = Arc::new(UnitVec::equator(0.0), UnitVec::equator(PI / 2.0)).unwrap();
        let v = Arc::new(UnitVec::equator(PI / 4.0), UnitVec::equator(3.0 * PI / 4.0)).unwrap();
        match arcs_intersect(&u, &v, 1e-9) {
            ArcIntersection::SubArc(s) => {
                assert!(s.start().coincides(&UnitVec::equator(PI / 4.0), 1e-9));
                assert!(s.end().coincides(&UnitVec::equator(PI / 2.0), 1e-9));
            }
            other => panic!("expected sub-arc, got {other:?}"),
        }
        // Touching end-to-end: a single point.
        let w = Arc::new(UnitVec::equator(PI / 2.0), UnitVec::equator(PI)).unwrap();
        match arcs_intersect(&u, &w, 1e-9) {
            ArcIntersection::Point(p) => assert!(p.coincides(&UnitVec::equator(PI / 2.0), 1e-9)),
            other => panic!("expected point, got {other:?}"),
        }
        // Same circle, disjoint spans: empty.
        let d = Arc::new(UnitVec::equator(2.0), UnitVec::equator(2.5)).unwrap();
        match arcs_intersect(&u, &d, 1e-9) {
            ArcIntersection::Empty => {}
            other => panic!("expected empty, got {other:?}"),
        }
    }

    #[test]
    fn arcs_intersect_symmetric() {
        let u = Arc::new(uv(1.0, 0.0, 0.2), uv(0.0, 1.0, -0.2)).unwrap();
        let v = Arc::new(uv(0.5, 0.5, 0.5), uv(0.6, 0.4, -0.6)).unwrap();
        let uv_res = arcs_intersect(&u, &v, 1e-9);
        let vu_res = arcs_intersect(&v, &u, 1e-9);
        match (uv_res, vu_res) {
            (ArcIntersection::Point(p), ArcIntersection::Point(q)) => {
                assert!(p.coincides(&q, 1e-9));
                assert!(u.contains(&p, 1e-9) && v.contains(&p, 1e-9));
            }
            (ArcIntersection::Empty, ArcIntersection::Empty) => {}
            other => panic!("asymmetric classification: {other:?}"),
        }
    }

    #[test]
    fn point_in_octant_triangle() {
        let tri = [uv(1.0, 0.0, 0.0), uv(0.0, 1.0, 0.0), uv(0.0, 0.0, 1.0)];
        let centroid = uv(1.0, 1.0, 1.0);
        assert_eq!(point_in_spherical_polygon(&centroid, &tri).unwrap(), PointLocation::Inside);
        assert_eq!(
            point_in_spherical_polygon(&centroid.antipode(), &tri).unwrap(),
            PointLocation::Outside
        );
        assert_eq!(point_in_spherical_polygon(&tri[0], &tri).unwrap(), PointLocation::Boundary);
        let edge_mid = uv(1.0, 1.0, 0.0);
        assert_eq!(point_in_spherical_polygon(&edge_mid, &tri).unwrap(), PointLocation::Boundary);
    }

    #[test]
    fn point_in_reflex_polygon() {
        // Complement of the octant triangle: same vertices, reversed order.
        let comp = [uv(0.0, 0.0, 1.0), uv(0.0, 1.0, 0.0), uv(1.0, 0.0, 0.0)];
        let inside_octant = uv(1.0, 1.0, 1.0);
        assert_eq!(
            point_in_spherical_polygon(&inside_octant, &comp).unwrap(),
            PointLocation::Outside
        );
        assert_eq!(
            point_in_spherical_polygon(&inside_octant.antipode(), &comp).unwrap(),
            PointLocation::Inside
        );
        let area = polygon_interior_area(&comp).unwrap();
        assert_abs_diff_eq!(area, 4.0 * PI - PI / 2.0, epsilon = 1e-12);
    }

    #[test]
    fn point_in_polygon_rejects_self_intersection() {
        // Bowtie: two sides cross.
        let bad = [
            UnitVec::equator(0.0),
            uv(0.0, 1.0, 1.0),
            UnitVec::equator(0.5),
            uv(1.0, 0.0, 1.0),
        ];
        assert!(point_in_spherical_polygon(&UnitVec::north_pole(), &bad).is_err());
    }

    #[test]
    fn isometry_preserves_distances() {
        let g = Isometry::rotation(&uv(1.0, 2.0, -0.5), 1.234);
        let p = uv(0.3, -0.4, 0.86);
        let q = uv(-0.7, 0.1, 0.7);
        assert_abs_diff_eq!(
            angular_distance(&g.apply(&p), &g.apply(&q)),
            angular_distance(&p, &q),
            epsilon = 1e-12
        );
        let h = g.compose(&g.inverse());
        assert!(h.distance(&Isometry::identity()) < 1e-12);
        assert!(g.is_rotation());
    }

    #[test]
    fn reflection_flips_orientation() {
        let r = Isometry::reflection(&uv(0.0, 0.0, 1.0));
        assert!(r.determinant() < 0.0);
        let p = uv(0.1, 0.2, 0.9);
        assert!(r.apply(&p).coincides(&uv(0.1, 0.2, -0.9), 1e-12));
    }

    #[test]
    fn point_pair_alignment() {
        let a1 = uv(1.0, 0.0, 0.0);
        let a2 = uv(0.0, 1.0, 0.0);
        let b1 = uv(0.0, 0.0, 1.0);
        let b2 = uv(0.6, 0.0, 0.8);
        let g = Isometry::from_point_pairs(&a1, &a2, &b1, &b2, false).unwrap();
        assert!(g.apply(&a1).coincides(&b1, 1e-12));
        // The image of a2 lies on the great circle from b1 toward b2 at the
        // original distance.
        let d = angular_distance(&a1, &a2);
        let expect = point_along(&b1, &b2, d).unwrap();
        assert!(g.apply(&a2).coincides(&expect, 1e-12));
        assert!(g.is_rotation());
        let gr = Isometry::from_point_pairs(&a1, &a2, &b1, &b2, true).unwrap();
        assert!(!gr.is_rotation());
        assert!(gr.apply(&a1).coincides(&b1, 1e-12));
    }

    #[test]
    fn azimuth_tangent_conventions() {
        // At the north pole, azimuth is the longitude of departure.
        let n = UnitVec::north_pole();
        let d0 = n.azimuth_tangent(0.0);
        assert_abs_diff_eq!(d0.x, 1.0, epsilon = 1e-12);
        let d90 = n.azimuth_tangent(PI / 2.0);
        assert_abs_diff_eq!(d90.y, 1.0, epsilon = 1e-12);
        // On the equator, azimuth 0 points north.
        let e = UnitVec::equator(0.3);
        let dn = e.azimuth_tangent(0.0);
        assert_abs_diff_eq!(dn.z, 1.0, epsilon = 1e-12);
        // Walking π/2 north from the equator reaches the pole.
        assert!(e.walk(&dn, PI / 2.0).coincides(&n, 1e-12));
    }
}
