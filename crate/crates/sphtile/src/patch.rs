//! Reusable placed patches: the five indivisible bigons, hemisphere
//! tilings, the magic-triangle decomposition, and the polygon-complex
//! decompositions (pentagon, octagon, decagon).
//!
//! A *bigon* here is a lune — the region between two half great circles
//! joining a pair of antipodal apexes — tiled edge-to-edge by regular
//! polygons. Exactly five such tilings exist, and their interiors are
//! forced; they are assembled below as explicit gluing scripts and then
//! audited numerically (edge matching, boundary structure, area closure).

use crate::error::{Error, Result};
use crate::forge::{EdgeSide, PlacedTile, place_polygon_at_center, place_polygon_on_edge};
use crate::polygon::RegularPolygonSpec;
use crate::sphere::{Arc, UnitVec, point_along};
use crate::{TOL_AREA_RESIDUAL, TOL_COINCIDENCE};
use std::f64::consts::PI;

/// The five bigon types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BigonType {
    I,
    II,
    III,
    IV,
    V,
}

impl BigonType {
    pub fn all() -> [BigonType; 5] {
        [BigonType::I, BigonType::II, BigonType::III, BigonType::IV, BigonType::V]
    }

    /// Apex angle of the lune.
    pub fn apex_angle(&self) -> f64 {
        match self {
            BigonType::I => PI / 2.0,
            BigonType::II => (1.0f64 / 3.0).acos(),
            BigonType::III => (-1.0f64 / 3.0).acos(),
            BigonType::IV => 2.0f64.atan(),
            BigonType::V => PI - 2.0f64.atan(),
        }
    }

    /// Common side length of the tiles in this bigon.
    pub fn side_length(&self) -> f64 {
        match self {
            BigonType::I => PI / 2.0,
            BigonType::II | BigonType::III => PI / 3.0,
            BigonType::IV | BigonType::V => PI / 5.0,
        }
    }

    /// (triangles, squares, pentagons) tile counts.
    pub fn tile_counts(&self) -> (usize, usize, usize) {
        match self {
            BigonType::I => (2, 0, 0),
            BigonType::II => (2, 1, 0),
            BigonType::III => (2, 2, 0),
            BigonType::IV => (4, 0, 2),
            BigonType::V => (6, 0, 4),
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            BigonType::I => "I",
            BigonType::II => "II",
            BigonType::III => "III",
            BigonType::IV => "IV",
            BigonType::V => "V",
        }
    }

    pub fn from_label(label: &str) -> Result<Self> {
        match label {
            "I" => Ok(BigonType::I),
            "II" => Ok(BigonType::II),
            "III" => Ok(BigonType::III),
            "IV" => Ok(BigonType::IV),
            "V" => Ok(BigonType::V),
            other => Err(Error::InvalidFamily(format!("unknown bigon type {other:?}"))),
        }
    }
}

/// A tiled lune.
#[derive(Debug, Clone)]
pub struct BigonPatch {
    pub bigon_type: BigonType,
    pub apex_angle: f64,
    pub tiles: Vec<PlacedTile>,
    pub apexes: [UnitVec; 2],
}

fn tri(angle: f64) -> RegularPolygonSpec {
    RegularPolygonSpec::from_angle(3, angle).expect("valid triangle angle")
}

fn sq(angle: f64) -> RegularPolygonSpec {
    RegularPolygonSpec::from_angle(4, angle).expect("valid square angle")
}

fn pent(angle: f64) -> RegularPolygonSpec {
    RegularPolygonSpec::from_angle(5, angle).expect("valid pentagon angle")
}

/// The magic-triangle shape: equilateral triangle of side exactly 3π/5.
pub fn magic_triangle_spec() -> RegularPolygonSpec {
    tri(PI - 2.0f64.atan())
}

fn glue(spec: RegularPolygonSpec, a: &UnitVec, b: &UnitVec) -> Result<PlacedTile> {
    place_polygon_on_edge(spec, a, b, EdgeSide::Left)
}

/// Builds the bigon of the given type with one apex at `apex` and its first
/// boundary arc departing at `azimuth`; the interior spans azimuths
/// [azimuth, azimuth + apex angle] as seen at the apex, and the second apex
/// is the antipode.
pub fn build_bigon(bigon_type: BigonType, apex: UnitVec, azimuth: f64) -> Result<BigonPatch> {
    let theta = bigon_type.apex_angle();
    let step = bigon_type.side_length();
    let first = |d: f64| apex.walk(&apex.azimuth_tangent(azimuth), d);
    let tiles: Vec<PlacedTile> = match bigon_type {
        BigonType::I => {
            let t = tri(PI / 2.0);
            let t1 = glue(t, &apex, &first(step))?;
            let (e1, x) = (t1.vertices()[1], t1.vertices()[2]);
            let t2 = glue(t, &x, &e1)?;
            vec![t1, t2]
        }
        BigonType::II => {
            let t = tri(theta);
            let s = sq(PI - theta);
            let t1 = glue(t, &apex, &first(step))?;
            let (a, b) = (t1.vertices()[1], t1.vertices()[2]);
            let q = glue(s, &b, &a)?;
            let (q1, q2) = (q.vertices()[2], q.vertices()[3]);
            let t2 = glue(t, &q2, &q1)?;
            vec![t1, q, t2]
        }
        BigonType::III => {
            let t = tri(PI - theta);
            let s = sq(theta);
            let q1 = glue(s, &apex, &first(step))?;
            let (p, qq, r) = (q1.vertices()[1], q1.vertices()[2], q1.vertices()[3]);
            let t1 = glue(t, &qq, &p)?;
            let t2 = glue(t, &r, &qq)?;
            let s1 = t1.vertices()[2];
            let q2 = glue(s, &qq, &s1)?;
            vec![q1, t1, t2, q2]
        }
        BigonType::IV => {
            let t = tri(theta);
            let p5 = pent(PI - theta);
            let t1 = glue(t, &apex, &first(step))?;
            let (a, b) = (t1.vertices()[1], t1.vertices()[2]);
            let p1 = glue(p5, &b, &a)?;
            let (c, d, e) = (p1.vertices()[2], p1.vertices()[3], p1.vertices()[4]);
            let t2 = glue(t, &d, &c)?;
            let t3 = glue(t, &e, &d)?;
            let f = t2.vertices()[2];
            let p2 = glue(p5, &d, &f)?;
            let (h, i) = (p2.vertices()[2], p2.vertices()[3]);
            let t4 = glue(t, &i, &h)?;
            vec![t1, p1, t2, t3, p2, t4]
        }
        BigonType::V => {
            let frame = magic_frame(
                &apex,
                &first(3.0 * step),
                &apex.walk(&apex.azimuth_tangent(azimuth + theta), 3.0 * step),
            )?;
            let mut tiles = frame.tiles;
            tiles.extend(type_v_completion(&frame.landmarks)?);
            tiles
        }
    };
    let patch = BigonPatch {
        bigon_type,
        apex_angle: theta,
        tiles,
        apexes: [apex, apex.antipode()],
    };
    audit_bigon(&patch)?;
    Ok(patch)
}

/// Landmark points of a decomposed magic triangle with corners (A, B, C):
/// `d1` and `f` trisect side B→C, shared with the two tiles outside the
/// magic patch in a Type V bigon.
#[derive(Debug, Clone, Copy)]
pub(crate) struct MagicLandmarks {
    pub b_corner: UnitVec,
    pub c_corner: UnitVec,
    pub d1: UnitVec,
    pub f: UnitVec,
}

pub(crate) struct MagicFrame {
    pub tiles: Vec<PlacedTile>,
    pub landmarks: MagicLandmarks,
}

/// Decomposes the magic triangle with counterclockwise corners (a, b, c)
/// into 3 corner pentagons + 3 mid-side triangles + 1 central triangle,
/// all of side π/5 with supplementary tri/pent angles.
pub(crate) fn magic_frame(a: &UnitVec, b: &UnitVec, c: &UnitVec) -> Result<MagicFrame> {
    let theta = 2.0f64.atan();
    let t = tri(theta);
    let p5 = pent(PI - theta);
    let a1 = point_along(a, b, PI / 5.0)?;
    let p1 = glue(p5, a, &a1)?;
    let (a2, a3, a4) = (p1.vertices()[2], p1.vertices()[3], p1.vertices()[4]);
    let t1 = glue(t, &a2, &a1)?;
    let t2 = glue(t, &a4, &a3)?;
    let t3 = glue(t, &a3, &a2)?;
    let b1 = t1.vertices()[2];
    let b2 = t2.vertices()[2];
    let p2 = glue(p5, &a2, &b1)?;
    let (c1, d1) = (p2.vertices()[2], p2.vertices()[3]);
    let p3 = glue(p5, &b2, &a3)?;
    let (f, g) = (p3.vertices()[3], p3.vertices()[4]);
    let e1 = t3.vertices()[2];
    let tx = glue(t, &e1, &d1)?;
    // Closure audit: the construction is rigid, so the computed corners must
    // land on the requested ones and the seams must agree.
    for (got, want, what) in [
        (&c1, b, "corner B"),
        (&g, c, "corner C"),
        (&p2.vertices()[4], &e1, "pentagon seam at the center"),
        (&p3.vertices()[2], &e1, "pentagon seam at the center"),
        (&tx.vertices()[2], &f, "mid-side triangle seam"),
    ] {
        if !got.coincides(want, TOL_COINCIDENCE) {
            return Err(Error::Construction(format!(
                "magic decomposition failed to close at {what}"
            )));
        }
    }
    Ok(MagicFrame {
        tiles: vec![p1, t1, t2, t3, p2, p3, tx],
        landmarks: MagicLandmarks { b_corner: c1, c_corner: g, d1, f },
    })
}

/// The three tiles of a Type V bigon outside its magic patch: two triangles
/// and the south-apex pentagon.
pub(crate) fn type_v_completion(lm: &MagicLandmarks) -> Result<Vec<PlacedTile>> {
    let theta = 2.0f64.atan();
    let t = tri(theta);
    let p5 = pent(PI - theta);
    let t4 = glue(t, &lm.d1, &lm.b_corner)?;
    let t5 = glue(t, &lm.c_corner, &lm.f)?;
    let p4 = glue(p5, &lm.f, &lm.d1)?;
    // Seams with the two triangles.
    if !p4.vertices()[2].coincides(&t4.vertices()[2], TOL_COINCIDENCE)
        || !p4.vertices()[4].coincides(&t5.vertices()[2], TOL_COINCIDENCE)
    {
        return Err(Error::Construction("type V completion failed to close".into()));
    }
    Ok(vec![t4, t5, p4])
}

/// Audits a freshly built bigon: internal edges fully matched, boundary on
/// the two apex meridians with total length 2π, areas closing to the lune
/// area, and the advertised tile multiset.
fn audit_bigon(patch: &BigonPatch) -> Result<()> {
    let audit = audit_full_matches(&patch.tiles)?;
    let apex = &patch.apexes[0];
    let mut boundary_len = 0.0;
    for &(ti, si) in &audit.boundary {
        let side = patch.tiles[ti].sides()[si];
        if side.pole().dot(apex).abs() > 1e-9 {
            return Err(Error::Construction(format!(
                "bigon {} boundary side off the apex meridians",
                patch.bigon_type.label()
            )));
        }
        boundary_len += side.length();
    }
    if (boundary_len - 2.0 * PI).abs() > 1e-8 {
        return Err(Error::Construction("bigon boundary length must be 2π".into()));
    }
    let area: f64 = patch.tiles.iter().map(|t| t.area()).sum();
    if (area - 2.0 * patch.apex_angle).abs() > TOL_AREA_RESIDUAL {
        return Err(Error::Construction("bigon area does not close".into()));
    }
    let (nt, ns, np) = patch.bigon_type.tile_counts();
    let count = |k: u32| patch.tiles.iter().filter(|t| t.spec().n() == k).count();
    if count(3) != nt || count(4) != ns || count(5) != np {
        return Err(Error::Construction("bigon tile multiset mismatch".into()));
    }
    Ok(())
}

/// Result of matching tile sides pairwise within a patch.
pub struct EdgeAudit {
    /// Pairs of (tile, side) indices glued along a full shared side.
    pub shared: Vec<((usize, usize), (usize, usize))>,
    /// Unmatched (tile, side) indices: the patch boundary.
    pub boundary: Vec<(usize, usize)>,
}

/// Pairs up tile sides that coincide end-to-end (in opposite directions,
/// as two tiles sharing a side see it). Errors when a side has several
/// coincident partners or a partner with the same direction (which would
/// mean overlapping tiles).
pub fn audit_full_matches(tiles: &[PlacedTile]) -> Result<EdgeAudit> {
    let mut all: Vec<(usize, usize, Arc)> = Vec::new();
    for (ti, tile) in tiles.iter().enumerate() {
        for (si, side) in tile.sides().into_iter().enumerate() {
            all.push((ti, si, side));
        }
    }
    let mut partner: Vec<Option<usize>> = vec![None; all.len()];
    for i in 0..all.len() {
        for j in (i + 1)..all.len() {
            if all[i].0 == all[j].0 {
                continue;
            }
            let (u, v) = (&all[i].2, &all[j].2);
            let reversed = u.start().coincides(&v.end(), TOL_COINCIDENCE)
                && u.end().coincides(&v.start(), TOL_COINCIDENCE);
            let same = u.start().coincides(&v.start(), TOL_COINCIDENCE)
                && u.end().coincides(&v.end(), TOL_COINCIDENCE);
            if same {
                return Err(Error::Construction(format!(
                    "sides of tiles {} and {} coincide with equal orientation",
                    all[i].0, all[j].0
                )));
            }
            if reversed {
                if partner[i].is_some() || partner[j].is_some() {
                    return Err(Error::Construction(format!(
                        "side of tile {} matched more than once",
                        all[i].0
                    )));
                }
                partner[i] = Some(j);
                partner[j] = Some(i);
            }
        }
    }
    let mut shared = Vec::new();
    let mut boundary = Vec::new();
    for i in 0..all.len() {
        match partner[i] {
            Some(j) if j > i => shared.push(((all[i].0, all[i].1), (all[j].0, all[j].1))),
            Some(_) => {}
            None => boundary.push((all[i].0, all[i].1)),
        }
    }
    Ok(EdgeAudit { shared, boundary })
}

/// Hemisphere tilings on offer, all in the canonical pose: boundary on the
/// equator, interior the northern hemisphere.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HemisphereKind {
    /// Four triangles of angle π/2 around the pole.
    Octa,
    /// Type II + Type III bigons: 4 triangles + 3 squares.
    Cubocta,
    /// Type IV + Type V bigons: 10 triangles + 6 pentagons.
    Icosidodeca,
    /// A single n-gon of angle π (n ≥ 3).
    Monogon(u32),
    /// The icosidodecahedral hemisphere with the Type V bigon's magic patch
    /// fused into one magic triangle: 6 triangles + 3 pentagons + 1 magic
    /// triangle.
    IcosidodecaComposed,
}

impl HemisphereKind {
    pub fn label(&self) -> String {
        match self {
            HemisphereKind::Octa => "octa".into(),
            HemisphereKind::Cubocta => "cubocta".into(),
            HemisphereKind::Icosidodeca => "icosidodeca".into(),
            HemisphereKind::Monogon(n) => format!("monogon-{n}"),
            HemisphereKind::IcosidodecaComposed => "icosidodeca-composed".into(),
        }
    }
}

/// Builds a hemisphere tiling in canonical pose (boundary = equator,
/// interior = north). The two-bigon kinds put the bigon apexes at (±1,0,0).
pub fn build_hemisphere(kind: HemisphereKind) -> Result<Vec<PlacedTile>> {
    let east_apex = UnitVec::equator(0.0);
    let tiles = match kind {
        HemisphereKind::Octa => {
            let t = tri(PI / 2.0);
            let mut tiles = Vec::new();
            for k in 0..4 {
                let start = UnitVec::equator(PI / 2.0 * k as f64);
                let end = UnitVec::equator(PI / 2.0 * (k + 1) as f64);
                // Tile with apex at the pole: glue onto the equator segment.
                tiles.push(glue(t, &start, &end)?);
            }
            tiles
        }
        HemisphereKind::Cubocta => {
            let split = BigonType::II.apex_angle();
            let mut tiles = build_bigon(BigonType::II, east_apex, -PI / 2.0)?.tiles;
            tiles.extend(build_bigon(BigonType::III, east_apex, -PI / 2.0 + split)?.tiles);
            tiles
        }
        HemisphereKind::Icosidodeca => {
            let split = BigonType::IV.apex_angle();
            let mut tiles = build_bigon(BigonType::IV, east_apex, -PI / 2.0)?.tiles;
            tiles.extend(build_bigon(BigonType::V, east_apex, -PI / 2.0 + split)?.tiles);
            tiles
        }
        HemisphereKind::Monogon(n) => {
            if n < 3 {
                return Err(Error::InvalidPolygon(format!(
                    "a monogon hemisphere needs at least 3 boundary vertices, got {n}"
                )));
            }
            let spec = RegularPolygonSpec::from_angle(n, PI)?;
            let vertices: Vec<UnitVec> =
                (0..n).map(|k| UnitVec::equator(2.0 * PI * k as f64 / n as f64)).collect();
            vec![PlacedTile::new(spec, vertices)?]
        }
        HemisphereKind::IcosidodecaComposed => {
            let split = BigonType::IV.apex_angle();
            let mut tiles = build_bigon(BigonType::IV, east_apex, -PI / 2.0)?.tiles;
            // Build the Type V bigon's pieces but fuse its magic patch.
            let apex = east_apex;
            let azimuth = -PI / 2.0 + split;
            let theta = BigonType::V.apex_angle();
            let b = apex.walk(&apex.azimuth_tangent(azimuth), 3.0 * PI / 5.0);
            let c = apex.walk(&apex.azimuth_tangent(azimuth + theta), 3.0 * PI / 5.0);
            let frame = magic_frame(&apex, &b, &c)?;
            tiles.push(PlacedTile::new(magic_triangle_spec(), vec![apex, b, c])?);
            tiles.extend(type_v_completion(&frame.landmarks)?);
            tiles
        }
    };
    // Common audit: area closes to a hemisphere and every boundary vertex
    // sits on the equator.
    let area: f64 = tiles.iter().map(|t| t.area()).sum();
    if (area - 2.0 * PI).abs() > TOL_AREA_RESIDUAL {
        return Err(Error::Construction("hemisphere area does not close".into()));
    }
    for tile in &tiles {
        for v in tile.vertices() {
            if v.z() < -TOL_COINCIDENCE {
                return Err(Error::Construction(
                    "hemisphere tile dips below the equator".into(),
                ));
            }
        }
    }
    Ok(tiles)
}

/// Decomposes a placed magic triangle (equilateral, side 3π/5) into its
/// seven constituent tiles: three pentagons and four triangles of side π/5.
pub fn magic_triangle_decomposition(tile: &PlacedTile) -> Result<Vec<PlacedTile>> {
    let spec = tile.spec();
    if spec.n() != 3 || (spec.side() - 3.0 * PI / 5.0).abs() > TOL_COINCIDENCE || tile.is_reflex()
    {
        return Err(Error::InvalidTarget(format!(
            "magic decomposition needs an equilateral triangle of side 3π/5, got an {}-gon of side {}",
            spec.n(),
            spec.side()
        )));
    }
    let v = tile.vertices();
    Ok(magic_frame(&v[0], &v[1], &v[2])?.tiles)
}

/// The named polygon-complex decompositions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComplexKind {
    /// The magic triangle and its seven-tile decomposition.
    MagicTriangle,
    /// Pentagon of angle 4π/5 as five triangles of angle 2π/5.
    PentagonFiveTri,
    /// Regular octagonal patch: a central square, four flank squares, four
    /// triangles.
    Octagon,
    /// Regular decagonal patch: a central pentagon, five squares, five
    /// triangles.
    Decagon,
}

impl ComplexKind {
    pub fn label(&self) -> &'static str {
        match self {
            ComplexKind::MagicTriangle => "magic-triangle",
            ComplexKind::PentagonFiveTri => "pentagon-5tri",
            ComplexKind::Octagon => "octagon",
            ComplexKind::Decagon => "decagon",
        }
    }

    pub fn from_label(label: &str) -> Result<Self> {
        match label {
            "magic-triangle" => Ok(ComplexKind::MagicTriangle),
            "pentagon-5tri" => Ok(ComplexKind::PentagonFiveTri),
            "octagon" => Ok(ComplexKind::Octagon),
            "decagon" => Ok(ComplexKind::Decagon),
            other => Err(Error::InvalidFamily(format!("unknown decomposition {other:?}"))),
        }
    }
}

/// Builds one of the named decompositions as a patch centered at the north
/// pole. Every patch is edge-to-edge internally, and its outer boundary is
/// a regular (but not regular-polygon-tile) cycle with all corners below π.
pub fn appendix_decomposition(kind: ComplexKind) -> Result<Vec<PlacedTile>> {
    match kind {
        ComplexKind::MagicTriangle => {
            let tile = place_polygon_at_center(magic_triangle_spec(), UnitVec::north_pole(), 0.0)?;
            magic_triangle_decomposition(&tile)
        }
        ComplexKind::PentagonFiveTri => {
            let spec = pent(4.0 * PI / 5.0);
            let t = tri(2.0 * PI / 5.0);
            let pole = UnitVec::north_pole();
            let big_r = spec.circumradius();
            let corners: Vec<UnitVec> = (0..5)
                .map(|k| pole.walk(&pole.azimuth_tangent(2.0 * PI * k as f64 / 5.0), big_r))
                .collect();
            (0..5)
                .map(|k| PlacedTile::new(t, vec![pole, corners[k], corners[(k + 1) % 5]]))
                .collect()
        }
        ComplexKind::Octagon => {
            // Central square of angle β surrounded by four squares and four
            // triangles of angle α, with α + 3β = 2π at every inner corner
            // and a single common side length.
            let beta = solve_complex_angle(
                |beta| {
                    Ok(crate::polygon::side_from_angle(3, 2.0 * PI - 3.0 * beta)?
                        - crate::polygon::side_from_angle(4, beta)?)
                },
                PI / 2.0,
                5.0 * PI / 9.0,
            )?;
            let alpha = 2.0 * PI - 3.0 * beta;
            surround_with_squares_and_triangles(sq(beta), sq(beta), tri(alpha))
        }
        ComplexKind::Decagon => {
            // Central pentagon of angle γ, five squares of angle β, five
            // triangles of angle α: α + 2β + γ = 2π with one common side.
            let beta = solve_complex_angle(
                |beta| {
                    let side = crate::polygon::side_from_angle(4, beta)?;
                    let alpha = crate::polygon::angle_from_side(3, side)?;
                    let gamma = crate::polygon::angle_from_side(5, side)?;
                    Ok(alpha + 2.0 * beta + gamma - 2.0 * PI)
                },
                PI / 2.0,
                crate::polygon::angle_from_side(4, 2.0 * PI / 5.0)?,
            )?;
            let side = crate::polygon::side_from_angle(4, beta)?;
            let alpha = crate::polygon::angle_from_side(3, side)?;
            let gamma = crate::polygon::angle_from_side(5, side)?;
            surround_with_squares_and_triangles(pent(gamma), sq(beta), tri(alpha))
        }
    }
}

/// Bisects a monotone-bracketing function on (lo, hi) to 1e-12.
fn solve_complex_angle(
    h: impl Fn(f64) -> Result<f64>,
    lo: f64,
    hi: f64,
) -> Result<f64> {
    let eps = 1e-9;
    let (mut a, mut b) = (lo + eps, hi - eps);
    let mut ha = h(a)?;
    let hb = h(b)?;
    if ha * hb > 0.0 {
        return Err(Error::Construction("decomposition angle system does not bracket".into()));
    }
    for _ in 0..200 {
        if b - a <= 1e-12 {
            break;
        }
        let mid = 0.5 * (a + b);
        let hm = h(mid)?;
        if ha * hm <= 0.0 {
            b = mid;
        } else {
            a = mid;
            ha = hm;
        }
    }
    Ok(0.5 * (a + b))
}

/// Central tile at the pole, one square on each side, one triangle at each
/// corner; audited edge-to-edge.
fn surround_with_squares_and_triangles(
    central: RegularPolygonSpec,
    flank: RegularPolygonSpec,
    corner: RegularPolygonSpec,
) -> Result<Vec<PlacedTile>> {
    let core = place_polygon_at_center(central, UnitVec::north_pole(), 0.0)?;
    let n = central.n() as usize;
    let vs: Vec<UnitVec> = core.vertices().to_vec();
    let mut squares = Vec::with_capacity(n);
    for i in 0..n {
        squares.push(glue(flank, &vs[(i + 1) % n], &vs[i])?);
    }
    let mut tiles = vec![core];
    for i in 0..n {
        // Flank square on side i is [v_{i+1}, v_i, w_i, u_i]; the corner
        // triangle at v_i closes against the previous square's flank.
        let w_i = squares[i].vertices()[2];
        let prev = &squares[(i + n - 1) % n];
        let u_prev = prev.vertices()[3];
        let t = glue(corner, &w_i, &vs[i])?;
        if !t.vertices()[2].coincides(&u_prev, TOL_COINCIDENCE) {
            return Err(Error::Construction(
                "corner triangle does not close against both squares".into(),
            ));
        }
        tiles.push(t);
    }
    tiles.extend(squares);
    let audit = audit_full_matches(&tiles)?;
    if audit.boundary.len() != 2 * n {
        return Err(Error::Construction("decomposition boundary has wrong side count".into()));
    }
    Ok(tiles)
}
