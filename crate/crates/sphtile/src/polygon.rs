//! Regular spherical polygons: the relations between vertex count, interior
//! angle, side length, area, and the circumscribed/inscribed radii.
//!
//! A regular spherical n-gon with interior angle α exists for
//! (n−2)π/n < α ≤ π. Its side length ℓ satisfies
//!
//! cos ℓ = (cos(2π/n) + cos²(α/2)) / sin²(α/2),
//!
//! which is strictly increasing in α (at fixed n) and strictly decreasing in
//! n (at fixed α). At the upper endpoint α = π the polygon degenerates into
//! a hemisphere whose "vertices" are n evenly spaced points on its boundary
//! great circle; this limit is a legitimate tile here and is included in the
//! domain. At the lower endpoint the polygon shrinks to a point (side 0) and
//! is rejected.

use crate::error::{Error, Result};
use std::f64::consts::PI;

/// Slack applied at closed domain endpoints so that values computed from
/// inverse trigonometry (e.g. α = π from a solved side) are not rejected for
/// being a few ulps past the boundary.
const ENDPOINT_SLACK: f64 = 1e-12;

/// Smallest admissible interior angle for an n-gon (exclusive).
pub fn min_angle(n: u32) -> f64 {
    (n as f64 - 2.0) * PI / n as f64
}

/// Largest admissible side length for an n-gon, attained at α = π.
pub fn max_side(n: u32) -> f64 {
    2.0 * PI / n as f64
}

fn check_n(n: u32) -> Result<()> {
    if n < 3 {
        return Err(Error::InvalidPolygon(format!(
            "a regular spherical polygon needs at least 3 vertices, got {n}"
        )));
    }
    Ok(())
}

/// Side length of the regular n-gon with interior angle `angle`.
///
/// Errors when `angle` is outside ((n−2)π/n, π].
pub fn side_from_angle(n: u32, angle: f64) -> Result<f64> {
    check_n(n)?;
    let min = min_angle(n);
    if !(angle > min && angle <= PI + ENDPOINT_SLACK) || !angle.is_finite() {
        return Err(Error::AngleOutOfRange { n, angle, min, max: PI });
    }
    let angle = angle.min(PI);
    let half = angle / 2.0;
    let (s, c) = (half.sin(), half.cos());
    let cos_side = (((2.0 * PI / n as f64).cos() + c * c) / (s * s)).clamp(-1.0, 1.0);
    Ok(cos_side.acos())
}

/// Interior angle of the regular n-gon with side length `side`, found by
/// bisection on the strictly monotone side–angle relation.
///
/// Errors when `side` is outside (0, 2π/n].
pub fn angle_from_side(n: u32, side: f64) -> Result<f64> {
    check_n(n)?;
    let max = max_side(n);
    if !(side > 0.0 && side <= max + ENDPOINT_SLACK) || !side.is_finite() {
        return Err(Error::SideOutOfRange { n, side, max });
    }
    let side = side.min(max);
    // The side–angle relation flattens quadratically at α = π, so bisection
    // cannot pin the hemisphere endpoint; recognize it exactly instead.
    if max - side <= 1e-14 {
        return Ok(PI);
    }
    let (mut lo, mut hi) = (min_angle(n), PI);
    // side_from_angle is increasing: side(lo⁺) → 0, side(hi) = 2π/n.
    for _ in 0..200 {
        if hi - lo <= 1e-13 {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let s = side_from_angle(n, mid).expect("mid is interior to the domain");
        if s < side {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Area (spherical excess) of the regular n-gon with interior angle `angle`:
/// nα − (n−2)π.
pub fn area_from_angle(n: u32, angle: f64) -> Result<f64> {
    check_n(n)?;
    let min = min_angle(n);
    if !(angle > min && angle <= PI + ENDPOINT_SLACK) || !angle.is_finite() {
        return Err(Error::AngleOutOfRange { n, angle, min, max: PI });
    }
    Ok(n as f64 * angle.min(PI) - (n as f64 - 2.0) * PI)
}

/// Circumscribed radius (center to vertex): cos R = cot(π/n)·cot(α/2).
/// At α = π this gives R = π/2, the hemisphere case.
pub fn circumradius_from_angle(n: u32, angle: f64) -> Result<f64> {
    check_n(n)?;
    let min = min_angle(n);
    if !(angle > min && angle <= PI + ENDPOINT_SLACK) || !angle.is_finite() {
        return Err(Error::AngleOutOfRange { n, angle, min, max: PI });
    }
    let angle = angle.min(PI);
    let cos_r = ((PI / n as f64).tan().recip() * (angle / 2.0).tan().recip()).clamp(-1.0, 1.0);
    Ok(cos_r.acos())
}

/// Inscribed radius (center to side midpoint): cos r = cos R / cos(ℓ/2).
pub fn inradius_from_angle(n: u32, angle: f64) -> Result<f64> {
    let big_r = circumradius_from_angle(n, angle)?;
    let side = side_from_angle(n, angle)?;
    let cos_r = (big_r.cos() / (side / 2.0).cos()).clamp(-1.0, 1.0);
    Ok(cos_r.acos())
}

/// A validated regular spherical polygon shape: vertex count plus interior
/// angle, with the side length cached. This is a shape, not a placed tile;
/// placement lives in [`crate::forge`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegularPolygonSpec {
    n: u32,
    angle: f64,
    side: f64,
}

impl RegularPolygonSpec {
    /// Builds the n-gon with the given interior angle.
    pub fn from_angle(n: u32, angle: f64) -> Result<Self> {
        let side = side_from_angle(n, angle)?;
        Ok(Self { n, angle: angle.min(PI), side })
    }

    /// Builds the n-gon with the given side length.
    pub fn from_side(n: u32, side: f64) -> Result<Self> {
        let angle = angle_from_side(n, side)?;
        // Store the requested side exactly; the angle is the solved inverse.
        Ok(Self { n, angle, side: side.min(max_side(n)) })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn angle(&self) -> f64 {
        self.angle
    }

    pub fn side(&self) -> f64 {
        self.side
    }

    pub fn area(&self) -> f64 {
        self.n as f64 * self.angle - (self.n as f64 - 2.0) * PI
    }

    pub fn circumradius(&self) -> f64 {
        circumradius_from_angle(self.n, self.angle).expect("validated at construction")
    }

    pub fn inradius(&self) -> f64 {
        inradius_from_angle(self.n, self.angle).expect("validated at construction")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn exact_landmark_sides() {
        // Tiles whose sides come out in closed form.
        assert_abs_diff_eq!(side_from_angle(3, PI / 2.0).unwrap(), PI / 2.0, epsilon = 1e-14);
        assert_abs_diff_eq!(
            side_from_angle(3, (1.0f64 / 3.0).acos()).unwrap(),
            PI / 3.0,
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(
            side_from_angle(4, (-1.0f64 / 3.0).acos()).unwrap(),
            PI / 3.0,
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(
            side_from_angle(3, (-1.0f64 / 3.0).acos()).unwrap(),
            (-0.25f64).acos(),
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(
            side_from_angle(3, 2.0f64.atan()).unwrap(),
            PI / 5.0,
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(
            side_from_angle(5, PI - 2.0f64.atan()).unwrap(),
            PI / 5.0,
            epsilon = 1e-14
        );
        // A triangle with the supplement of arctan 2 has side exactly 3π/5.
        assert_abs_diff_eq!(
            side_from_angle(3, PI - 2.0f64.atan()).unwrap(),
            3.0 * PI / 5.0,
            epsilon = 1e-14
        );
        // The square partner of that angle: cos ℓ = (3 − √5)/2 ≈ 0.3752π.
        let sq = side_from_angle(4, PI - 2.0f64.atan()).unwrap();
        assert_abs_diff_eq!(sq, ((3.0 - 5.0f64.sqrt()) / 2.0).acos(), epsilon = 1e-14);
        assert_abs_diff_eq!(sq / PI, 0.375247, epsilon = 1e-6);
    }

    #[test]
    fn hemisphere_limit() {
        for n in 3..=5 {
            assert_abs_diff_eq!(
                side_from_angle(n, PI).unwrap(),
                2.0 * PI / n as f64,
                epsilon = 1e-14
            );
            assert_abs_diff_eq!(
                circumradius_from_angle(n, PI).unwrap(),
                PI / 2.0,
                epsilon = 1e-14
            );
            assert_abs_diff_eq!(area_from_angle(n, PI).unwrap(), 2.0 * PI, epsilon = 1e-12);
        }
    }

    #[test]
    fn domain_endpoints_rejected() {
        assert!(side_from_angle(3, PI / 3.0).is_err());
        assert!(side_from_angle(3, PI + 1e-6).is_err());
        assert!(side_from_angle(4, PI / 2.0).is_err());
        assert!(side_from_angle(5, 3.0 * PI / 5.0).is_err());
        assert!(side_from_angle(2, 2.0).is_err());
        assert!(angle_from_side(3, 0.0).is_err());
        assert!(angle_from_side(3, 2.0 * PI / 3.0 + 1e-6).is_err());
        assert!(angle_from_side(3, f64::NAN).is_err());
    }

    #[test]
    fn inverse_round_trip() {
        for n in [3u32, 4, 5] {
            let min = min_angle(n);
            for k in 1..40 {
                let angle = min + (PI - min) * k as f64 / 40.0;
                let side = side_from_angle(n, angle).unwrap();
                let back = angle_from_side(n, side).unwrap();
                assert_abs_diff_eq!(back, angle, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn angle_from_side_landmarks() {
        // Angle needed by each species to span a side of 2π/5.
        let a3 = angle_from_side(3, 2.0 * PI / 5.0).unwrap();
        assert_abs_diff_eq!(a3.to_degrees(), 76.345377, epsilon = 1e-4);
        let a4 = angle_from_side(4, 2.0 * PI / 5.0).unwrap();
        assert_abs_diff_eq!(a4.to_degrees(), 121.861329, epsilon = 1e-4);
        let a5 = angle_from_side(5, 2.0 * PI / 5.0).unwrap();
        assert_abs_diff_eq!(a5, PI, epsilon = 1e-10);
    }

    #[test]
    fn monotone_in_angle_and_n() {
        for n in [3u32, 4, 5] {
            let min = min_angle(n);
            let mut prev = 0.0;
            for k in 1..=60 {
                let angle = min + (PI - min) * k as f64 / 60.0;
                let side = side_from_angle(n, angle).unwrap();
                assert!(side > prev, "side not increasing at n={n}, k={k}");
                prev = side;
            }
        }
        // Decreasing in n at fixed admissible angle.
        for angle in [2.2f64, 2.5, 3.0] {
            let s3 = side_from_angle(3, angle).unwrap();
            let s4 = side_from_angle(4, angle).unwrap();
            let s5 = side_from_angle(5, angle).unwrap();
            assert!(s3 > s4 && s4 > s5);
        }
    }

    #[test]
    fn radii_relations() {
        // Octant triangle: circumradius is arccos(1/√3).
        let r = circumradius_from_angle(3, PI / 2.0).unwrap();
        assert_abs_diff_eq!(r, (1.0f64 / 3.0f64.sqrt()).acos(), epsilon = 1e-14);
        // Pentagon with angle 4π/5: circumradius equals its own side and is
        // exactly arctan 2.
        let spec = RegularPolygonSpec::from_angle(5, 4.0 * PI / 5.0).unwrap();
        assert_abs_diff_eq!(spec.circumradius(), spec.side(), epsilon = 1e-12);
        assert_abs_diff_eq!(spec.circumradius(), 2.0f64.atan(), epsilon = 1e-12);
        // Inradius is shorter than circumradius and positive.
        for n in [3u32, 4, 5] {
            for angle in [2.2f64, 2.8] {
                let big_r = circumradius_from_angle(n, angle).unwrap();
                let small_r = inradius_from_angle(n, angle).unwrap();
                assert!(small_r > 0.0 && small_r < big_r);
            }
        }
    }

    #[test]
    fn spec_accessors() {
        let t = RegularPolygonSpec::from_side(3, PI / 2.0).unwrap();
        assert_eq!(t.n(), 3);
        assert_abs_diff_eq!(t.angle(), PI / 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(t.area(), PI / 2.0, epsilon = 1e-12);
        let q = RegularPolygonSpec::from_angle(4, 2.0).unwrap();
        assert_abs_diff_eq!(q.area(), 4.0 * 2.0 - 2.0 * PI, epsilon = 1e-14);
    }
}
