//! Supplementary-pair algebra.
//!
//! At a half vertex of a non-edge-to-edge tiling, two corner angles must sum
//! to π, so the two tiles carrying them come in supplementary pairs. This
//! module provides:
//!
//! - the three *supp-same* pairs — supplementary tiles whose sides are also
//!   equal — in closed form, plus an independent numeric scan;
//! - the perfect-fit side-sum functions: the combined length of a run of
//!   tiles (A triangles of angle α, then B squares, C pentagons, and
//!   D triangles, all of angle π−α) laid side by side along a line, used to
//!   decide which runs can exactly fill a given length;
//! - grid + bisection root finding and extremum estimation on those
//!   functions, which back the quantitative lemma checks.

use crate::error::{Error, Result};
use crate::polygon::side_from_angle;
use std::f64::consts::PI;

/// Number of grid cells used by the scan-based solvers.
pub const SOLVE_GRID: usize = 10_000;
/// Bisection convergence tolerance (interval width, radians).
pub const BISECT_TOL: f64 = 1e-12;
/// Offset used to probe limits at open domain endpoints.
pub const ENDPOINT_PROBE: f64 = 1e-9;

/// The three kinds of supp-same pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuppSameKind {
    TriTri,
    TriSquare,
    TriPent,
}

/// A supplementary pair of tiles with equal side length: a triangle of
/// angle α and an n-gon of angle π − α whose sides coincide.
#[derive(Debug, Clone, Copy)]
pub struct SuppSamePair {
    pub kind: SuppSameKind,
    /// Triangle interior angle α.
    pub triangle_angle: f64,
    /// Partner polygon vertex count (3, 4, or 5).
    pub partner_n: u32,
    /// Partner interior angle, exactly π − α.
    pub partner_angle: f64,
    /// The common side length.
    pub side: f64,
}

/// The three supp-same pairs, in closed form:
/// (π/2, π/2) with side π/2; (arccos ⅓, arccos −⅓) with side π/3;
/// (arctan 2, π − arctan 2) with side π/5.
pub fn supp_same_pairs() -> Vec<SuppSamePair> {
    let tri_square_angle = (1.0f64 / 3.0).acos();
    let tri_pent_angle = 2.0f64.atan();
    vec![
        SuppSamePair {
            kind: SuppSameKind::TriTri,
            triangle_angle: PI / 2.0,
            partner_n: 3,
            partner_angle: PI / 2.0,
            side: PI / 2.0,
        },
        SuppSamePair {
            kind: SuppSameKind::TriSquare,
            triangle_angle: tri_square_angle,
            partner_n: 4,
            partner_angle: PI - tri_square_angle,
            side: PI / 3.0,
        },
        SuppSamePair {
            kind: SuppSameKind::TriPent,
            triangle_angle: tri_pent_angle,
            partner_n: 5,
            partner_angle: PI - tri_pent_angle,
            side: PI / 5.0,
        },
    ]
}

/// Independent numeric confirmation of a supp-same pair: finds the unique
/// root of α ↦ side(3, α) − side(n, π − α) on the admissible interval for
/// partner count `n`, by grid scan plus bisection.
///
/// Errors when `n` is not 3, 4, or 5, or when the scan does not find exactly
/// one sign change (which would contradict monotonicity).
pub fn supp_same_root_scan(partner_n: u32) -> Result<f64> {
    if !(3..=5).contains(&partner_n) {
        return Err(Error::Domain(format!(
            "supp-same partners are triangles, squares, or pentagons; got n = {partner_n}"
        )));
    }
    // side(3, α) needs α > π/3; side(n, π−α) needs π−α > (n−2)π/n, i.e.
    // α < 2π/n.
    let lo = PI / 3.0;
    let hi = 2.0 * PI / partner_n as f64;
    let diff = |alpha: f64| -> Result<f64> {
        Ok(side_from_angle(3, alpha)? - side_from_angle(partner_n, PI - alpha)?)
    };
    let roots = scan_roots(&diff, lo, hi)?;
    if roots.len() != 1 {
        return Err(Error::Domain(format!(
            "expected exactly one supp-same root for partner n = {partner_n}, found {}",
            roots.len()
        )));
    }
    Ok(roots[0])
}

/// Counts of tiles in a perfect-fit run: `initial_triangles` of angle α laid
/// alongside `supp_squares`, `supp_pentagons`, and `supp_triangles` of angle
/// π − α. At least one initial triangle is always present.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PerfectFitSignature {
    pub initial_triangles: u32,
    pub supp_squares: u32,
    pub supp_pentagons: u32,
    pub supp_triangles: u32,
}

impl PerfectFitSignature {
    /// Builds a signature (counts A, B, C, D). Errors when A = 0: every
    /// perfect-fit run is anchored by at least one triangle of angle α.
    pub fn new(
        initial_triangles: u32,
        supp_squares: u32,
        supp_pentagons: u32,
        supp_triangles: u32,
    ) -> Result<Self> {
        if initial_triangles == 0 {
            return Err(Error::Domain(
                "perfect-fit signature needs at least one initial triangle".into(),
            ));
        }
        Ok(Self { initial_triangles, supp_squares, supp_pentagons, supp_triangles })
    }

    /// The open interval of angles α on which every term is defined.
    ///
    /// The initial triangles force α > π/3; supplementary squares force
    /// α < π/2, pentagons α < 2π/5, and supplementary triangles α < 2π/3.
    /// With no supplementary tiles at all the upper endpoint is π and is
    /// attainable (the triangle degenerates into a hemisphere there).
    pub fn domain(&self) -> (f64, f64) {
        let lo = PI / 3.0;
        let mut hi = PI;
        if self.supp_squares > 0 {
            hi = hi.min(PI / 2.0);
        }
        if self.supp_pentagons > 0 {
            hi = hi.min(2.0 * PI / 5.0);
        }
        if self.supp_triangles > 0 {
            hi = hi.min(2.0 * PI / 3.0);
        }
        (lo, hi)
    }

    /// Whether the domain's upper endpoint itself is evaluable (only when it
    /// is π, the hemisphere limit of the initial triangle).
    fn upper_closed(&self) -> bool {
        self.supp_squares == 0 && self.supp_pentagons == 0 && self.supp_triangles == 0
    }
}

/// Combined side length of the perfect-fit run at angle α:
/// A·side(3, α) + B·side(4, π−α) + C·side(5, π−α) + D·side(3, π−α).
///
/// Errors when α is outside the signature's domain (in particular at the
/// open endpoints themselves).
pub fn side_sum(sig: &PerfectFitSignature, alpha: f64) -> Result<f64> {
    let (lo, hi) = sig.domain();
    let inside = alpha > lo && (alpha < hi || (sig.upper_closed() && alpha <= hi));
    if !inside || !alpha.is_finite() {
        return Err(Error::Domain(format!(
            "angle {alpha} outside the perfect-fit domain ({lo}, {hi})"
        )));
    }
    let mut total = sig.initial_triangles as f64 * side_from_angle(3, alpha)?;
    if sig.supp_squares > 0 {
        total += sig.supp_squares as f64 * side_from_angle(4, PI - alpha)?;
    }
    if sig.supp_pentagons > 0 {
        total += sig.supp_pentagons as f64 * side_from_angle(5, PI - alpha)?;
    }
    if sig.supp_triangles > 0 {
        total += sig.supp_triangles as f64 * side_from_angle(3, PI - alpha)?;
    }
    Ok(total)
}

/// Side length of a supplementary triangle–square pair laid side by side:
/// side(3, α) + side(4, π−α), defined for α ∈ (π/3, π/2). This is the
/// signature (1, 1, 0, 0) special case, singled out because several
/// geometric fits reduce to solving it against a fixed length.
pub fn triangle_square_sum(alpha: f64) -> Result<f64> {
    side_sum(&PerfectFitSignature::new(1, 1, 0, 0)?, alpha)
}

/// All roots of `side_sum(sig, ·) = target` in `[alpha_min, alpha_max]`
/// (intersected with the signature's domain), via sign-change bracketing on
/// a 10⁴-point grid followed by bisection to 1e-12. An empty list is a
/// valid answer and is how impossibility windows are certified.
pub fn solve_side_sum_equals(
    sig: &PerfectFitSignature,
    target: f64,
    alpha_min: f64,
    alpha_max: f64,
) -> Result<Vec<f64>> {
    let (lo, hi) = sig.domain();
    let lo = lo.max(alpha_min);
    let hi = hi.min(alpha_max);
    if !(hi > lo) {
        return Err(Error::Domain(format!(
            "requested interval [{alpha_min}, {alpha_max}] misses the domain"
        )));
    }
    let h = |alpha: f64| -> Result<f64> { Ok(side_sum(sig, alpha)? - target) };
    scan_roots(&h, lo, hi)
}

/// Grid-scan + bisection root finder on (lo, hi), sampling strictly inside
/// the open interval.
fn scan_roots(h: &dyn Fn(f64) -> Result<f64>, lo: f64, hi: f64) -> Result<Vec<f64>> {
    let n = SOLVE_GRID;
    let step = (hi - lo) / n as f64;
    let mut roots: Vec<f64> = Vec::new();
    let mut prev: Option<(f64, f64)> = None;
    for i in 1..n {
        let alpha = lo + step * i as f64;
        let value = h(alpha)?;
        if value.abs() <= 1e-12 {
            push_root(&mut roots, alpha);
            prev = Some((alpha, value));
            continue;
        }
        if let Some((pa, pv)) = prev {
            if pv * value < 0.0 {
                let root = bisect(h, pa, alpha)?;
                push_root(&mut roots, root);
            }
        }
        prev = Some((alpha, value));
    }
    Ok(roots)
}

fn push_root(roots: &mut Vec<f64>, root: f64) {
    if !roots.iter().any(|r| (r - root).abs() <= 1e-9) {
        roots.push(root);
    }
}

fn bisect(h: &dyn Fn(f64) -> Result<f64>, mut a: f64, mut b: f64) -> Result<f64> {
    let mut ha = h(a)?;
    for _ in 0..200 {
        if b - a <= BISECT_TOL {
            break;
        }
        let mid = 0.5 * (a + b);
        let hm = h(mid)?;
        if hm == 0.0 {
            return Ok(mid);
        }
        if ha * hm < 0.0 {
            b = mid;
        } else {
            a = mid;
            ha = hm;
        }
    }
    Ok(0.5 * (a + b))
}

/// Extremum report for a side-sum function: where it was attained and the
/// value there. Endpoint limits are probed 1e-9 inside the open endpoints,
/// so an extremum "at" lo or hi reads as lo + 1e-9 / hi − 1e-9.
#[derive(Debug, Clone, Copy)]
pub struct Extremum {
    pub alpha: f64,
    pub value: f64,
}

fn scan_extrema(sig: &PerfectFitSignature) -> Result<(Extremum, Extremum)> {
    let (lo, hi) = sig.domain();
    let n = SOLVE_GRID;
    let step = (hi - lo) / n as f64;
    let mut samples: Vec<(f64, f64)> = Vec::with_capacity(n + 1);
    samples.push((lo + ENDPOINT_PROBE, side_sum(sig, lo + ENDPOINT_PROBE)?));
    for i in 1..n {
        let alpha = lo + step * i as f64;
        samples.push((alpha, side_sum(sig, alpha)?));
    }
    let top = if sig.upper_closed() { hi } else { hi - ENDPOINT_PROBE };
    samples.push((top, side_sum(sig, top)?));
    let mut min = samples[0];
    let mut max = samples[0];
    for &(a, v) in &samples {
        if v < min.1 {
            min = (a, v);
        }
        if v > max.1 {
            max = (a, v);
        }
    }
    Ok((Extremum { alpha: min.0, value: min.1 }, Extremum { alpha: max.0, value: max.1 }))
}

/// Numeric infimum of the side-sum over its domain (endpoint limits probed
/// at 1e-9 inside the open endpoints).
pub fn side_sum_infimum(sig: &PerfectFitSignature) -> Result<Extremum> {
    Ok(scan_extrema(sig)?.0)
}

/// Numeric supremum of the side-sum over its domain.
pub fn side_sum_supremum(sig: &PerfectFitSignature) -> Result<Extremum> {
    Ok(scan_extrema(sig)?.1)
}

/// Confirms on the solve grid that the side-sum is concave down: no discrete
/// second difference exceeds +1e-8.
pub fn concave_down_on_grid(sig: &PerfectFitSignature) -> Result<bool> {
    let (lo, hi) = sig.domain();
    let n = SOLVE_GRID;
    let step = (hi - lo) / n as f64;
    let mut prev2: Option<f64> = None;
    let mut prev1: Option<f64> = None;
    for i in 1..n {
        let value = side_sum(sig, lo + step * i as f64)?;
        if let (Some(a), Some(b)) = (prev2, prev1) {
            if value - 2.0 * b + a > 1e-8 {
                return Ok(false);
            }
        }
        prev2 = prev1;
        prev1 = Some(value);
    }
    Ok(true)
}

/// Whether two corner angles, one from an m-gon and one from an n-gon, can
/// sum to π. Each angle ranges over an open interval whose lower end is not
/// attained, so the reachable sums are checked on grids sampled strictly
/// inside the ranges: the pair is admissible iff some reachable sum is below
/// π (the suprema all exceed π, so π itself is then attained by continuity).
/// Only triangle–triangle, triangle–square, and triangle–pentagon pass.
pub fn half_vertex_pair_admissible(m: u32, n: u32) -> bool {
    if m < 3 || n < 3 {
        return false;
    }
    let grid_min = |k: u32| -> f64 {
        let lo = crate::polygon::min_angle(k);
        let step = (PI - lo) / 1000.0;
        // The sum is increasing in each angle, so the grid minimum is the
        // first sample; scan anyway to avoid relying on that.
        (1..=1000)
            .map(|i| lo + step * i as f64)
            .fold(f64::INFINITY, f64::min)
    };
    grid_min(m) + grid_min(n) < PI
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn supp_same_constants() {
        let pairs = supp_same_pairs();
        assert_eq!(pairs.len(), 3);
        for p in &pairs {
            assert_abs_diff_eq!(p.triangle_angle + p.partner_angle, PI, epsilon = 1e-12);
            let s3 = side_from_angle(3, p.triangle_angle).unwrap();
            let sn = side_from_angle(p.partner_n, p.partner_angle).unwrap();
            assert_abs_diff_eq!(s3, sn, epsilon = 1e-10);
            assert_abs_diff_eq!(s3, p.side, epsilon = 1e-10);
        }
        assert_abs_diff_eq!(pairs[1].triangle_angle.to_degrees(), 70.5288, epsilon = 5e-4);
        assert_abs_diff_eq!(pairs[1].partner_angle.to_degrees(), 109.4712, epsilon = 5e-4);
        assert_abs_diff_eq!(pairs[2].triangle_angle.to_degrees(), 63.4349, epsilon = 5e-4);
        assert_abs_diff_eq!(pairs[2].partner_angle.to_degrees(), 116.5651, epsilon = 5e-4);
    }

    #[test]
    fn supp_same_scan_matches_closed_form() {
        let pairs = supp_same_pairs();
        for p in &pairs {
            let root = supp_same_root_scan(p.partner_n).unwrap();
            assert_abs_diff_eq!(root, p.triangle_angle, epsilon = 1e-10);
        }
        assert!(supp_same_root_scan(6).is_err());
    }

    #[test]
    fn triangle_square_sum_matches_closed_form() {
        // side(4, π−α) has the closed form arccos(tan²(α/2)).
        for alpha in [1.1f64, 1.2, 1.3, 1.4, 1.5] {
            let f = triangle_square_sum(alpha).unwrap();
            let half = alpha / 2.0;
            let t1 = ((-0.5 + half.cos().powi(2)) / half.sin().powi(2)).acos();
            let t2 = (half.tan().powi(2)).acos();
            assert_abs_diff_eq!(f, t1 + t2, epsilon = 1e-12);
        }
        let supp_same = (1.0f64 / 3.0).acos();
        assert_abs_diff_eq!(
            triangle_square_sum(supp_same).unwrap(),
            2.0 * PI / 3.0,
            epsilon = 1e-12
        );
        assert!(triangle_square_sum(PI / 3.0).is_err());
        assert!(triangle_square_sum(PI / 2.0).is_err());
    }

    #[test]
    fn triangle_square_sum_roots() {
        let sig = PerfectFitSignature::new(1, 1, 0, 0).unwrap();
        let roots = solve_side_sum_equals(&sig, 3.0 * PI / 5.0, PI / 3.0, PI / 2.0).unwrap();
        assert_eq!(roots.len(), 2);
        assert_abs_diff_eq!(roots[0].to_degrees(), 64.6756, epsilon = 5e-4);
        assert_abs_diff_eq!(roots[1].to_degrees(), 88.2545, epsilon = 5e-4);
        for r in &roots {
            assert_abs_diff_eq!(triangle_square_sum(*r).unwrap(), 3.0 * PI / 5.0, epsilon = 1e-3);
        }
    }

    #[test]
    fn signature_validation_and_domains() {
        assert!(PerfectFitSignature::new(0, 1, 0, 0).is_err());
        let s = PerfectFitSignature::new(2, 1, 0, 1).unwrap();
        let (lo, hi) = s.domain();
        assert_abs_diff_eq!(lo, PI / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(hi, PI / 2.0, epsilon = 1e-15);
        let p = PerfectFitSignature::new(1, 0, 2, 0).unwrap();
        assert_abs_diff_eq!(p.domain().1, 2.0 * PI / 5.0, epsilon = 1e-15);
        let t = PerfectFitSignature::new(3, 0, 0, 0).unwrap();
        assert_abs_diff_eq!(t.domain().1, PI, epsilon = 1e-15);
        // Upper endpoint evaluable only in the supplementary-free case.
        assert!(side_sum(&t, PI).is_ok());
        assert!(side_sum(&s, PI / 2.0).is_err());
    }

    #[test]
    fn type_two_run_hits_pi_at_supp_same() {
        let sig = PerfectFitSignature::new(2, 1, 0, 0).unwrap();
        let supp_same = (1.0f64 / 3.0).acos();
        assert_abs_diff_eq!(side_sum(&sig, supp_same).unwrap(), PI, epsilon = 1e-12);
        let roots = solve_side_sum_equals(&sig, PI, PI / 3.0, PI / 2.0).unwrap();
        assert_eq!(roots.len(), 1);
        assert_abs_diff_eq!(roots[0], supp_same, epsilon = 1e-9);
    }

    #[test]
    fn impossibility_windows() {
        let two_tri_pent = PerfectFitSignature::new(2, 0, 1, 0).unwrap();
        let max = side_sum_supremum(&two_tri_pent).unwrap();
        assert!(max.value < 2.4, "max {}", max.value);
        assert!(
            solve_side_sum_equals(&two_tri_pent, PI, PI / 3.0, 2.0 * PI / 5.0)
                .unwrap()
                .is_empty()
        );

        let tri_pent = PerfectFitSignature::new(1, 0, 1, 0).unwrap();
        let max = side_sum_supremum(&tri_pent).unwrap();
        assert_abs_diff_eq!(max.value / PI, 0.436, epsilon = 5e-3);

        let two_supp_tris = PerfectFitSignature::new(1, 0, 0, 1).unwrap();
        let inf = side_sum_infimum(&two_supp_tris).unwrap();
        assert_abs_diff_eq!(inf.value / PI, 0.60817, epsilon = 5e-5);
    }

    #[test]
    fn concavity_on_grid() {
        for (a, b, c, d) in [(1, 1, 0, 0), (2, 1, 0, 0), (2, 0, 1, 0), (1, 0, 1, 0), (1, 0, 0, 1)]
        {
            let sig = PerfectFitSignature::new(a, b, c, d).unwrap();
            assert!(concave_down_on_grid(&sig).unwrap(), "sig {a},{b},{c},{d}");
        }
    }

    #[test]
    fn half_vertex_combinations() {
        assert!(half_vertex_pair_admissible(3, 3));
        assert!(half_vertex_pair_admissible(3, 4));
        assert!(half_vertex_pair_admissible(3, 5));
        for (m, n) in [(4, 4), (4, 5), (5, 5), (3, 6), (3, 7), (4, 6), (6, 6)] {
            assert!(!half_vertex_pair_admissible(m, n), "({m},{n}) should be excluded");
        }
    }
}
