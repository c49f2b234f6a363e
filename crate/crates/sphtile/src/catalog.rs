//! The tiling catalog: every family of tilings of the sphere by regular
//! polygons in which tiles need not meet edge-to-edge, plus the classical
//! edge-to-edge solids used as reference fixtures.
//!
//! Families on offer:
//! - five one-parameter **kaleidoscope** families: one species of small
//!   singleton tile pinwheeling inside larger tiles of the supplementary
//!   angle;
//! - **two-hemisphere** tilings: any two hemisphere fillings joined along
//!   the equator with a free twist;
//! - four rigid **lunar** tilings: a ring of congruent bigon lunes pinched
//!   at the corners of two antipodal polar tiles;
//! - three rigid **sporadic** tilings: four bigon lunes sharing both poles
//!   as full vertices;
//! - the **composed** tilings: magic patches (seven tiles whose union is an
//!   equilateral triangle of side 3π/5) fused into single magic triangles;
//! - the eight-tile **magic-triangle tiling**: a decomposed magic triangle
//!   together with its reflex complement tile.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::forge::{EdgeSide, PlacedTile, place_polygon_at_center, place_polygon_on_edge};
use crate::patch::{
    BigonType, HemisphereKind, build_bigon, build_hemisphere, magic_triangle_decomposition,
    magic_triangle_spec,
};
use crate::polygon::RegularPolygonSpec;
use crate::sphere::{ArcIntersection, Isometry, UnitVec, arcs_intersect, point_along,
    signed_triangle_excess};
use crate::{TOL_AREA_RESIDUAL, TOL_VERTEX_CLUSTER};

/// Top-level family classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyClass {
    Kaleidoscope,
    TwoHemisphere,
    Lunar,
    Sporadic,
    Composed,
    MagicTriangleTiling,
    EdgeToEdgeReference,
}

impl FamilyClass {
    pub fn label(&self) -> &'static str {
        match self {
            FamilyClass::Kaleidoscope => "kaleidoscope",
            FamilyClass::TwoHemisphere => "two-hemisphere",
            FamilyClass::Lunar => "lunar",
            FamilyClass::Sporadic => "sporadic",
            FamilyClass::Composed => "composed",
            FamilyClass::MagicTriangleTiling => "magic-triangle-tiling",
            FamilyClass::EdgeToEdgeReference => "edge-to-edge-reference",
        }
    }

    pub fn from_label(label: &str) -> Result<Self> {
        Ok(match label {
            "kaleidoscope" => FamilyClass::Kaleidoscope,
            "two-hemisphere" => FamilyClass::TwoHemisphere,
            "lunar" => FamilyClass::Lunar,
            "sporadic" => FamilyClass::Sporadic,
            "composed" => FamilyClass::Composed,
            "magic-triangle-tiling" => FamilyClass::MagicTriangleTiling,
            "edge-to-edge-reference" => FamilyClass::EdgeToEdgeReference,
            other => return Err(Error::InvalidFamily(format!("unknown family class {other:?}"))),
        })
    }
}

/// Identifies a family (class) and the concrete variant within it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyId {
    pub class: FamilyClass,
    pub variant: String,
}

impl FamilyId {
    pub fn new(class: FamilyClass, variant: impl Into<String>) -> Self {
        Self { class, variant: variant.into() }
    }

    /// `class:variant` string used on the command line and in files.
    pub fn to_string_id(&self) -> String {
        format!("{}:{}", self.class.label(), self.variant)
    }
}

/// A concrete tiling: a list of placed tiles together with the family it
/// came from, the numeric parameters used, and a construction log.
#[derive(Debug, Clone)]
pub struct Tiling {
    pub tiles: Vec<PlacedTile>,
    pub family: FamilyId,
    pub parameters: BTreeMap<String, f64>,
    pub provenance: Vec<String>,
}

impl Tiling {
    pub fn total_area(&self) -> f64 {
        self.tiles.iter().map(|t| t.area()).sum()
    }

    /// Tile counts keyed by (gon count, reflex flag).
    pub fn species_counts(&self) -> BTreeMap<(u32, bool), usize> {
        let mut counts = BTreeMap::new();
        for t in &self.tiles {
            *counts.entry((t.spec().n(), t.is_reflex())).or_insert(0) += 1;
        }
        counts
    }

    fn audit_area(&self) -> Result<()> {
        let residual = (self.total_area() - 4.0 * PI).abs();
        if residual > TOL_AREA_RESIDUAL {
            return Err(Error::Construction(format!(
                "{}: tile areas do not close the sphere (residual {residual:.3e})",
                self.family.to_string_id()
            )));
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Kaleidoscope families
// ---------------------------------------------------------------------------

/// The five kaleidoscope variants, keyed by the *small* (singleton) tile.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KaleidoscopeVariant {
    /// Small triangles among large triangles (4 + 4).
    TriTri,
    /// Small squares among large triangles (6 squares + 8 triangles).
    SquareTri,
    /// Small triangles among large squares (8 triangles + 6 squares).
    TriSquare,
    /// Small pentagons among large triangles (12 pentagons + 20 triangles).
    PentTri,
    /// Small triangles among large pentagons (20 triangles + 12 pentagons).
    TriPent,
}

impl KaleidoscopeVariant {
    pub fn all() -> [KaleidoscopeVariant; 5] {
        [
            KaleidoscopeVariant::TriTri,
            KaleidoscopeVariant::SquareTri,
            KaleidoscopeVariant::TriSquare,
            KaleidoscopeVariant::PentTri,
            KaleidoscopeVariant::TriPent,
        ]
    }

    pub fn label(&self) -> &'static str {
        match self {
            KaleidoscopeVariant::TriTri => "tri-tri",
            KaleidoscopeVariant::SquareTri => "square-tri",
            KaleidoscopeVariant::TriSquare => "tri-square",
            KaleidoscopeVariant::PentTri => "pent-tri",
            KaleidoscopeVariant::TriPent => "tri-pent",
        }
    }

    pub fn from_label(label: &str) -> Result<Self> {
        Self::all()
            .into_iter()
            .find(|v| v.label() == label)
            .ok_or_else(|| Error::InvalidFamily(format!("unknown kaleidoscope variant {label:?}")))
    }

    pub fn small_gons(&self) -> u32 {
        match self {
            KaleidoscopeVariant::SquareTri => 4,
            KaleidoscopeVariant::PentTri => 5,
            _ => 3,
        }
    }

    pub fn large_gons(&self) -> u32 {
        match self {
            KaleidoscopeVariant::TriSquare => 4,
            KaleidoscopeVariant::TriPent => 5,
            _ => 3,
        }
    }

    /// Rotation-symmetry group order of the finished tiling.
    fn group_order(&self) -> usize {
        match self {
            KaleidoscopeVariant::TriTri => 12,
            KaleidoscopeVariant::SquareTri | KaleidoscopeVariant::TriSquare => 24,
            KaleidoscopeVariant::PentTri | KaleidoscopeVariant::TriPent => 60,
        }
    }

    /// Admissible interval for the small-tile angle, with the names of the
    /// degenerate tilings at each end. The upper end is closed exactly when
    /// the limit there is itself a tiling the family passes through (the
    /// supplementary-pair point, where small and large side lengths agree
    /// and the tiling is a classical solid); the shrink-to-a-point end is
    /// always open.
    pub fn interval(&self) -> KaleidoscopeInterval {
        match self {
            KaleidoscopeVariant::TriTri => KaleidoscopeInterval {
                lo: PI / 3.0,
                hi: PI / 2.0,
                hi_closed: false,
                lo_limit: "tetrahedron",
                hi_limit: "octahedron",
            },
            KaleidoscopeVariant::SquareTri => KaleidoscopeInterval {
                lo: PI / 2.0,
                hi: (-1.0f64 / 3.0).acos(),
                hi_closed: true,
                lo_limit: "octahedron",
                hi_limit: "cuboctahedron",
            },
            KaleidoscopeVariant::TriSquare => KaleidoscopeInterval {
                lo: PI / 3.0,
                hi: (1.0f64 / 3.0).acos(),
                hi_closed: false,
                lo_limit: "cube",
                hi_limit: "cuboctahedron",
            },
            KaleidoscopeVariant::PentTri => KaleidoscopeInterval {
                lo: 3.0 * PI / 5.0,
                hi: PI - 2.0f64.atan(),
                hi_closed: true,
                lo_limit: "icosahedron",
                hi_limit: "icosidodecahedron",
            },
            KaleidoscopeVariant::TriPent => KaleidoscopeInterval {
                lo: PI / 3.0,
                hi: 2.0f64.atan(),
                hi_closed: false,
                lo_limit: "dodecahedron",
                hi_limit: "icosidodecahedron",
            },
        }
    }
}

/// Admissible small-tile angle interval of a kaleidoscope variant.
#[derive(Debug, Clone, Copy)]
pub struct KaleidoscopeInterval {
    pub lo: f64,
    pub hi: f64,
    /// Whether the tiling at `hi` (a classical solid) is generatable here.
    pub hi_closed: bool,
    pub lo_limit: &'static str,
    pub hi_limit: &'static str,
}

/// Builds the closure of a set of rotations, erroring if it does not close
/// to exactly `expected` elements. The generators of the catalog's tilings
/// always generate one of the polyhedral rotation groups, whose distinct
/// elements are far apart, so a coarse dedup tolerance is safe.
fn rotation_group_closure(generators: &[Isometry], expected: usize) -> Result<Vec<Isometry>> {
    let mut elems = vec![Isometry::identity()];
    let mut frontier = vec![Isometry::identity()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for f in &frontier {
            for g in generators {
                let h = g.compose(f);
                if !elems.iter().any(|e| e.distance(&h) < 1e-6) {
                    elems.push(h);
                    next.push(h);
                }
            }
        }
        if elems.len() > expected {
            return Err(Error::Construction(format!(
                "rotation group closure exceeded the expected order {expected}"
            )));
        }
        frontier = next;
    }
    if elems.len() != expected {
        return Err(Error::Construction(format!(
            "rotation group closed at order {} instead of {expected}",
            elems.len()
        )));
    }
    Ok(elems)
}

/// Orbit of a placed tile under a rotation group, deduplicated by center.
fn tile_orbit(group: &[Isometry], seed: &PlacedTile, expected: usize) -> Result<Vec<PlacedTile>> {
    let mut tiles: Vec<PlacedTile> = Vec::new();
    for g in group {
        let t = seed.transform(g);
        let c = t.center();
        if !tiles.iter().any(|s| s.center().coincides(&c, TOL_VERTEX_CLUSTER)) {
            tiles.push(t);
        }
    }
    if tiles.len() != expected {
        return Err(Error::Construction(format!(
            "tile orbit has {} members, expected {expected}",
            tiles.len()
        )));
    }
    Ok(tiles)
}

/// Builds a kaleidoscope tiling: the small tile sits centered at the north
/// pole with its first vertex at azimuth 0; the first large tile is glued
/// along the small tile's first side, extended past the side's far end to
/// the large side length; everything else is the orbit under the rotation
/// group generated by the two tile axes.
pub fn kaleidoscope(variant: KaleidoscopeVariant, small_tile_angle: f64) -> Result<Tiling> {
    let iv = variant.interval();
    let mut alpha = small_tile_angle;
    if !alpha.is_finite() || alpha <= iv.lo {
        return Err(Error::Degenerate(format!(
            "kaleidoscope {} needs a small-tile angle above {:.12}: {} limit",
            variant.label(),
            iv.lo,
            iv.lo_limit
        )));
    }
    if iv.hi_closed {
        if alpha > iv.hi + 1e-12 {
            return Err(Error::Degenerate(format!(
                "kaleidoscope {} needs a small-tile angle at most {:.12}: {} limit",
                variant.label(),
                iv.hi,
                iv.hi_limit
            )));
        }
        alpha = alpha.min(iv.hi);
    } else if alpha >= iv.hi {
        return Err(Error::Degenerate(format!(
            "kaleidoscope {} needs a small-tile angle below {:.12}: {} limit",
            variant.label(),
            iv.hi,
            iv.hi_limit
        )));
    }

    let small = RegularPolygonSpec::from_angle(variant.small_gons(), alpha)?;
    let large = RegularPolygonSpec::from_angle(variant.large_gons(), PI - alpha)?;
    let t0 = place_polygon_at_center(small, UnitVec::north_pole(), 0.0)?;
    let (v0, v1) = (t0.vertices()[0], t0.vertices()[1]);
    let w = point_along(&v0, &v1, large.side())?;
    let l0 = place_polygon_on_edge(large, &w, &v0, EdgeSide::Left)?;

    let order = variant.group_order();
    let group = rotation_group_closure(
        &[
            Isometry::rotation(&t0.center(), 2.0 * PI / variant.small_gons() as f64),
            Isometry::rotation(&l0.center(), 2.0 * PI / variant.large_gons() as f64),
        ],
        order,
    )?;
    let mut tiles = tile_orbit(&group, &t0, order / variant.small_gons() as usize)?;
    tiles.extend(tile_orbit(&group, &l0, order / variant.large_gons() as usize)?);

    let tiling = Tiling {
        tiles,
        family: FamilyId::new(FamilyClass::Kaleidoscope, variant.label()),
        parameters: BTreeMap::from([("small_tile_angle".to_string(), alpha)]),
        provenance: vec![
            format!(
                "kaleidoscope {}: small {}-gon angle {:.15} at the north pole, large {}-gon angle {:.15}",
                variant.label(),
                variant.small_gons(),
                alpha,
                variant.large_gons(),
                PI - alpha
            ),
            format!("rotation group of order {order} generated by the two tile axes"),
        ],
    };
    tiling.audit_area()?;
    Ok(tiling)
}

// ---------------------------------------------------------------------------
// Two-hemisphere tilings
// ---------------------------------------------------------------------------

/// Joins two hemisphere fillings along the equator, rotating the bottom one
/// by `twist` about the polar axis. Every twist yields a tiling; twists that
/// realign all edges reproduce edge-to-edge solids (the verifier reports the
/// classification rather than this constructor assuming it).
pub fn two_hemisphere(top: HemisphereKind, bottom: HemisphereKind, twist: f64) -> Result<Tiling> {
    let twist = twist.rem_euclid(2.0 * PI);
    let mut tiles = build_hemisphere(top)?;
    let flip = Isometry::rotation_z(twist).compose(&Isometry::rotation(&UnitVec::equator(0.0), PI));
    tiles.extend(build_hemisphere(bottom)?.iter().map(|t| t.transform(&flip)));
    let tiling = Tiling {
        tiles,
        family: FamilyId::new(
            FamilyClass::TwoHemisphere,
            format!("{}+{}", top.label(), bottom.label()),
        ),
        parameters: BTreeMap::from([("twist".to_string(), twist)]),
        provenance: vec![format!(
            "two-hemisphere: top {} in canonical pose, bottom {} flipped south and twisted by {:.15}",
            top.label(),
            bottom.label(),
            twist
        )],
    };
    tiling.audit_area()?;
    Ok(tiling)
}

// ---------------------------------------------------------------------------
// Lunar tilings
// ---------------------------------------------------------------------------

fn polar_label(gons: u32) -> &'static str {
    match gons {
        3 => "triangle",
        4 => "square",
        5 => "pentagon",
        _ => "polygon",
    }
}

/// Builds a lunar tiling: a polar polygon centered at the north pole, its
/// antipodal image at the south pole, and one bigon lune per polar corner.
/// Each lune has its apexes at a north corner and the antipodal south
/// corner; one of its boundary arcs carries a north polygon side, the other
/// a south polygon side. Valid combinations: (II, triangle), (II, pentagon),
/// (IV, triangle), (IV, square).
pub fn lunar(bigon: BigonType, polar_gons: u32) -> Result<Tiling> {
    let valid = matches!(
        (bigon, polar_gons),
        (BigonType::II, 3) | (BigonType::II, 5) | (BigonType::IV, 3) | (BigonType::IV, 4)
    );
    if !valid {
        return Err(Error::InvalidFamily(format!(
            "no lunar tiling pairs a Type {} bigon with a polar {}",
            bigon.label(),
            polar_label(polar_gons)
        )));
    }
    let theta = bigon.apex_angle();
    let polar = RegularPolygonSpec::from_angle(polar_gons, PI - theta)?;
    let north = place_polygon_at_center(polar, UnitVec::north_pole(), 0.0)?;
    let corners = north.vertices().to_vec();
    let south_vertices: Vec<UnitVec> = corners.iter().rev().map(|v| v.antipode()).collect();
    let south = PlacedTile::new(polar, south_vertices)?;

    let k = polar_gons as usize;
    let mut tiles = vec![north, south];
    for i in 0..k {
        let here = corners[i];
        let prev = corners[(i + k - 1) % k];
        let next = corners[(i + 1) % k];
        // The lune's interior at this corner spans from the continuation of
        // the great circle through the previous corner around to the
        // direction of the next corner.
        let az = here.azimuth_toward(&prev)? - PI;
        let az_next = here.azimuth_toward(&next)?;
        let gap = (az_next - az - theta).rem_euclid(2.0 * PI);
        if gap.min(2.0 * PI - gap) > 1e-9 {
            return Err(Error::Construction(
                "lunar lune does not span exactly the gap between polar sides".into(),
            ));
        }
        tiles.extend(build_bigon(bigon, here, az)?.tiles);
    }

    let tiling = Tiling {
        tiles,
        family: FamilyId::new(
            FamilyClass::Lunar,
            format!("{}-{}", bigon.label(), polar_label(polar_gons)),
        ),
        parameters: BTreeMap::new(),
        provenance: vec![format!(
            "lunar: polar {}-gon of angle {:.15} at each pole, {k} Type {} lunes at its corners",
            polar_gons,
            PI - theta,
            bigon.label()
        )],
    };
    tiling.audit_area()?;
    Ok(tiling)
}

/// Parses a lunar variant label like `II-pentagon`.
pub fn lunar_from_label(label: &str) -> Result<Tiling> {
    let (bigon, polar) = label
        .split_once('-')
        .ok_or_else(|| Error::InvalidFamily(format!("malformed lunar variant {label:?}")))?;
    let gons = match polar {
        "triangle" => 3,
        "square" => 4,
        "pentagon" => 5,
        other => {
            return Err(Error::InvalidFamily(format!("unknown lunar polar tile {other:?}")));
        }
    };
    lunar(BigonType::from_label(bigon)?, gons)
}

// ---------------------------------------------------------------------------
// Sporadic tilings
// ---------------------------------------------------------------------------

/// The three cyclic orders of four bigon lunes whose apex angles sum to 2π.
pub fn sporadic_orders() -> [[BigonType; 4]; 3] {
    use BigonType::{I, II, III, IV, V};
    [[I, II, I, III], [I, IV, I, V], [II, IV, III, V]]
}

/// Builds a sporadic tiling: four bigon lunes sharing the poles as full
/// vertices, placed side by side at cumulative apex azimuths.
pub fn sporadic(order: [BigonType; 4]) -> Result<Tiling> {
    if !sporadic_orders().contains(&order) {
        return Err(Error::InvalidFamily(format!(
            "no sporadic tiling has the bigon order {}",
            sporadic_label(&order)
        )));
    }
    let total: f64 = order.iter().map(|b| b.apex_angle()).sum();
    if (total - 2.0 * PI).abs() > 1e-12 {
        return Err(Error::Construction("sporadic apex angles do not sum to 2π".into()));
    }
    let mut tiles = Vec::new();
    let mut azimuth = 0.0;
    for bigon in order {
        tiles.extend(build_bigon(bigon, UnitVec::north_pole(), azimuth)?.tiles);
        azimuth += bigon.apex_angle();
    }
    let tiling = Tiling {
        tiles,
        family: FamilyId::new(FamilyClass::Sporadic, sporadic_label(&order)),
        parameters: BTreeMap::new(),
        provenance: vec![format!(
            "sporadic {}: four lunes sharing the poles, apex angles summing to 2π",
            sporadic_label(&order)
        )],
    };
    tiling.audit_area()?;
    Ok(tiling)
}

pub fn sporadic_label(order: &[BigonType; 4]) -> String {
    order.iter().map(|b| b.label()).collect::<Vec<_>>().join("-")
}

/// Parses a sporadic variant label like `I-II-I-III`.
pub fn sporadic_from_label(label: &str) -> Result<Tiling> {
    let parts: Vec<&str> = label.split('-').collect();
    if parts.len() != 4 {
        return Err(Error::InvalidFamily(format!("malformed sporadic order {label:?}")));
    }
    let mut order = [BigonType::I; 4];
    for (slot, part) in order.iter_mut().zip(parts) {
        *slot = BigonType::from_label(part)?;
    }
    sporadic(order)
}

// ---------------------------------------------------------------------------
// Edge-to-edge reference solids
// ---------------------------------------------------------------------------

pub const REFERENCE_NAMES: [&str; 7] = [
    "tetrahedron",
    "octahedron",
    "cube",
    "dodecahedron",
    "icosahedron",
    "cuboctahedron",
    "icosidodecahedron",
];

/// Builds one of the classical edge-to-edge tilings by growing outward from
/// a first tile centered at the north pole, gluing a matching tile across
/// every side and deduplicating by tile center.
pub fn edge_to_edge_reference(name: &str) -> Result<Tiling> {
    let theta = 2.0f64.atan();
    let (first, second, expected): (RegularPolygonSpec, Option<RegularPolygonSpec>, usize) =
        match name {
            "tetrahedron" => (RegularPolygonSpec::from_angle(3, 2.0 * PI / 3.0)?, None, 4),
            "octahedron" => (RegularPolygonSpec::from_angle(3, PI / 2.0)?, None, 8),
            "cube" => (RegularPolygonSpec::from_angle(4, 2.0 * PI / 3.0)?, None, 6),
            "dodecahedron" => (RegularPolygonSpec::from_angle(5, 2.0 * PI / 3.0)?, None, 12),
            "icosahedron" => (RegularPolygonSpec::from_angle(3, 2.0 * PI / 5.0)?, None, 20),
            "cuboctahedron" => (
                RegularPolygonSpec::from_angle(3, (1.0f64 / 3.0).acos())?,
                Some(RegularPolygonSpec::from_angle(4, (-1.0f64 / 3.0).acos())?),
                14,
            ),
            "icosidodecahedron" => (
                RegularPolygonSpec::from_angle(3, theta)?,
                Some(RegularPolygonSpec::from_angle(5, PI - theta)?),
                32,
            ),
            other => {
                return Err(Error::InvalidFamily(format!(
                    "unknown edge-to-edge reference {other:?}"
                )));
            }
        };

    let seed = place_polygon_at_center(first, UnitVec::north_pole(), 0.0)?;
    let mut tiles = vec![seed];
    let mut cursor = 0;
    while cursor < tiles.len() {
        let spec = tiles[cursor].spec();
        let neighbor_spec = match second {
            Some(partner) if spec.n() == first.n() => partner,
            Some(_) => first,
            None => spec,
        };
        for side in tiles[cursor].sides() {
            let candidate =
                place_polygon_on_edge(neighbor_spec, &side.end(), &side.start(), EdgeSide::Left)?;
            let center = candidate.center();
            if !tiles.iter().any(|t| t.center().coincides(&center, TOL_VERTEX_CLUSTER)) {
                tiles.push(candidate);
            }
        }
        cursor += 1;
        if tiles.len() > expected {
            return Err(Error::Construction(format!("reference {name} overgrew")));
        }
    }
    if tiles.len() != expected {
        return Err(Error::Construction(format!(
            "reference {name} closed with {} tiles, expected {expected}",
            tiles.len()
        )));
    }

    let tiling = Tiling {
        tiles,
        family: FamilyId::new(FamilyClass::EdgeToEdgeReference, name),
        parameters: BTreeMap::new(),
        provenance: vec![format!("edge-to-edge reference {name} grown from a seed tile")],
    };
    tiling.audit_area()?;
    Ok(tiling)
}

// ---------------------------------------------------------------------------
// Magic patches: search, composition, decomposition
// ---------------------------------------------------------------------------

/// A set of seven tiles (four triangles and three pentagons of side π/5)
/// whose union is an equilateral spherical triangle of side 3π/5.
#[derive(Debug, Clone)]
pub struct MagicPatch {
    /// Sorted indices into the tiling's tile list.
    pub tile_ids: Vec<usize>,
    /// Index of the central triangle.
    pub center_tile: usize,
    /// Counterclockwise corners of the union triangle.
    pub corners: [UnitVec; 3],
}

impl MagicPatch {
    /// Circumcenter of the union triangle.
    pub fn center(&self) -> UnitVec {
        let sum = self.corners.iter().fold(nalgebra::Vector3::zeros(), |acc, c| {
            acc + c.as_vector()
        });
        UnitVec::from_vector(sum.normalize()).expect("corner sum is nonzero")
    }
}

/// Full-edge adjacency: `adj[i][k]` is the tile sharing tile `i`'s side `k`
/// endpoint-to-endpoint, if any.
pub(crate) fn full_edge_adjacency(tiles: &[PlacedTile]) -> Vec<Vec<Option<usize>>> {
    let sides: Vec<Vec<crate::sphere::Arc>> = tiles.iter().map(|t| t.sides()).collect();
    let mut adj: Vec<Vec<Option<usize>>> =
        sides.iter().map(|s| vec![None; s.len()]).collect();
    for i in 0..tiles.len() {
        for j in (i + 1)..tiles.len() {
            for (ka, a) in sides[i].iter().enumerate() {
                for (kb, b) in sides[j].iter().enumerate() {
                    if a.start().coincides(&b.end(), TOL_VERTEX_CLUSTER)
                        && a.end().coincides(&b.start(), TOL_VERTEX_CLUSTER)
                    {
                        adj[i][ka] = Some(j);
                        adj[j][kb] = Some(i);
                    }
                }
            }
        }
    }
    adj
}

fn is_small_triangle(tile: &PlacedTile) -> bool {
    let theta = 2.0f64.atan();
    tile.spec().n() == 3 && !tile.is_reflex() && (tile.spec().angle() - theta).abs() <= 1e-7
}

fn is_small_pentagon(tile: &PlacedTile) -> bool {
    let theta = 2.0f64.atan();
    tile.spec().n() == 5 && !tile.is_reflex() && (tile.spec().angle() - (PI - theta)).abs() <= 1e-7
}

/// Finds every magic patch in a tiling: a central π/5 triangle with three
/// pentagon neighbors, plus the second triangle neighbor of each pentagon
/// pair, such that the union of the seven tiles is an equilateral triangle
/// of side 3π/5. Returns the patches sorted by their tile-id sets.
pub fn find_magic_patches(t: &Tiling) -> Vec<MagicPatch> {
    let tiles = &t.tiles;
    let adj = full_edge_adjacency(tiles);
    let neighbors = |i: usize| adj[i].iter().flatten().copied().collect::<Vec<usize>>();

    let mut patches: Vec<MagicPatch> = Vec::new();
    for center in 0..tiles.len() {
        if !is_small_triangle(&tiles[center]) {
            continue;
        }
        let pents: Vec<usize> = neighbors(center)
            .into_iter()
            .filter(|&p| is_small_pentagon(&tiles[p]))
            .collect();
        if pents.len() != 3 {
            continue;
        }
        let mut ids = vec![center];
        ids.extend(&pents);
        let mut complete = true;
        for a in 0..3 {
            for b in (a + 1)..3 {
                let shared: Vec<usize> = neighbors(pents[a])
                    .into_iter()
                    .filter(|&m| {
                        m != center
                            && is_small_triangle(&tiles[m])
                            && neighbors(pents[b]).contains(&m)
                    })
                    .collect();
                match shared.as_slice() {
                    [m] => ids.push(*m),
                    _ => complete = false,
                }
            }
        }
        if !complete {
            continue;
        }
        ids.sort_unstable();
        ids.dedup();
        if ids.len() != 7 {
            continue;
        }

        // One corner of the union per pentagon: its vertex shared with no
        // other patch tile.
        let mut corners = Vec::new();
        for &p in &pents {
            let lonely: Vec<UnitVec> = tiles[p]
                .vertices()
                .iter()
                .filter(|v| {
                    !ids.iter().any(|&o| {
                        o != p
                            && tiles[o]
                                .vertices()
                                .iter()
                                .any(|u| u.coincides(v, TOL_VERTEX_CLUSTER))
                    })
                })
                .copied()
                .collect();
            if lonely.len() == 1 {
                corners.push(lonely[0]);
            }
        }
        if corners.len() != 3 {
            continue;
        }
        let side = 3.0 * PI / 5.0;
        let equilateral = (0..3).all(|i| {
            (crate::sphere::angular_distance(&corners[i], &corners[(i + 1) % 3]) - side).abs()
                <= 1e-8
        });
        let union_area: f64 = ids.iter().map(|&i| tiles[i].area()).sum();
        let magic_area = magic_triangle_spec().area();
        if !equilateral || (union_area - magic_area).abs() > 1e-8 {
            continue;
        }
        let mut corners = [corners[0], corners[1], corners[2]];
        if signed_triangle_excess(&corners[0], &corners[1], &corners[2]) < 0.0 {
            corners.swap(1, 2);
        }
        patches.push(MagicPatch { tile_ids: ids, center_tile: center, corners });
    }
    patches.sort_by(|a, b| a.tile_ids.cmp(&b.tile_ids));
    patches.dedup_by(|a, b| a.tile_ids == b.tile_ids);
    patches
}

/// Replaces each given patch (pairwise tile-disjoint, all present in
/// `find_magic_patches(t)`) by a single magic triangle tile.
pub fn compose_many(t: &Tiling, patches: &[&MagicPatch]) -> Result<Tiling> {
    let available = find_magic_patches(t);
    let mut removed = std::collections::BTreeSet::new();
    for patch in patches {
        if !available.iter().any(|p| p.tile_ids == patch.tile_ids) {
            return Err(Error::InvalidTarget(
                "patch is not a magic patch of this tiling".into(),
            ));
        }
        for &id in &patch.tile_ids {
            if !removed.insert(id) {
                return Err(Error::InvalidTarget(
                    "patches overlap: a tile appears in two of them".into(),
                ));
            }
        }
    }
    let mut tiles: Vec<PlacedTile> = t
        .tiles
        .iter()
        .enumerate()
        .filter(|(i, _)| !removed.contains(i))
        .map(|(_, tile)| tile.clone())
        .collect();
    for patch in patches {
        tiles.push(PlacedTile::new(magic_triangle_spec(), patch.corners.to_vec())?);
    }
    let mut provenance = t.provenance.clone();
    provenance.push(format!(
        "composed {} magic patch(es) into single magic triangles",
        patches.len()
    ));
    let tiling = Tiling {
        tiles,
        family: FamilyId::new(
            FamilyClass::Composed,
            format!("{}+{}-composed", t.family.variant, patches.len()),
        ),
        parameters: t.parameters.clone(),
        provenance,
    };
    tiling.audit_area()?;
    Ok(tiling)
}

/// Replaces one magic patch by a single magic triangle tile.
pub fn compose(t: &Tiling, patch: &MagicPatch) -> Result<Tiling> {
    compose_many(t, &[patch])
}

/// Replaces the tile at `tile_id` (which must be a non-reflex magic
/// triangle) by its seven-tile decomposition.
pub fn decompose(t: &Tiling, tile_id: usize) -> Result<Tiling> {
    let target = t
        .tiles
        .get(tile_id)
        .ok_or_else(|| Error::InvalidTarget(format!("no tile with id {tile_id}")))?;
    let pieces = magic_triangle_decomposition(target)?;
    let mut tiles: Vec<PlacedTile> = t
        .tiles
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != tile_id)
        .map(|(_, tile)| tile.clone())
        .collect();
    tiles.extend(pieces);
    let mut provenance = t.provenance.clone();
    provenance.push(format!("decomposed tile {tile_id} into 3 pentagons + 4 triangles"));
    let tiling = Tiling {
        tiles,
        family: FamilyId::new(
            FamilyClass::Composed,
            format!("{}+decomposed", t.family.variant),
        ),
        parameters: t.parameters.clone(),
        provenance,
    };
    tiling.audit_area()?;
    Ok(tiling)
}

// ---------------------------------------------------------------------------
// Composed catalog
// ---------------------------------------------------------------------------

/// Contact relation between the union triangles of two tile-disjoint magic
/// patches of the same tiling.
#[derive(Debug, Clone, Copy, PartialEq)]
enum PatchContact {
    SharesTiles,
    /// Boundaries share arcs of the given total length.
    SideOverlap(f64),
    /// Exactly touching at coinciding corners.
    VertexTouch,
    Disjoint,
}

fn patch_contact(a: &MagicPatch, b: &MagicPatch) -> PatchContact {
    if a.tile_ids.iter().any(|id| b.tile_ids.contains(id)) {
        return PatchContact::SharesTiles;
    }
    let tri_sides = |p: &MagicPatch| -> Vec<crate::sphere::Arc> {
        (0..3)
            .map(|i| crate::sphere::Arc::new(p.corners[i], p.corners[(i + 1) % 3]).unwrap())
            .collect()
    };
    let mut overlap = 0.0;
    for sa in tri_sides(a) {
        for sb in tri_sides(b) {
            if let ArcIntersection::SubArc(shared) = arcs_intersect(&sa, &sb, TOL_VERTEX_CLUSTER) {
                overlap += shared.length();
            }
        }
    }
    if overlap > TOL_VERTEX_CLUSTER {
        return PatchContact::SideOverlap(overlap);
    }
    let touches = a
        .corners
        .iter()
        .any(|ca| b.corners.iter().any(|cb| ca.coincides(cb, TOL_VERTEX_CLUSTER)));
    if touches { PatchContact::VertexTouch } else { PatchContact::Disjoint }
}

fn patches_opposite(a: &MagicPatch, b: &MagicPatch) -> bool {
    a.center().antipode().coincides(&b.center(), TOL_VERTEX_CLUSTER)
}

/// Deterministic searches over the icosidodecahedron's 20 magic patches for
/// the canonical composed configurations.
pub struct IcosidodecaPatches {
    pub tiling: Tiling,
    pub patches: Vec<MagicPatch>,
}

impl IcosidodecaPatches {
    pub fn new() -> Result<Self> {
        let tiling = edge_to_edge_reference("icosidodecahedron")?;
        let patches = find_magic_patches(&tiling);
        if patches.len() != 20 {
            return Err(Error::Construction(format!(
                "expected 20 magic patches on the icosidodecahedron, found {}",
                patches.len()
            )));
        }
        Ok(Self { tiling, patches })
    }

    fn contact(&self, i: usize, j: usize) -> PatchContact {
        patch_contact(&self.patches[i], &self.patches[j])
    }

    /// First pair whose union triangles' sides overlap by 2π/5.
    pub fn adjacent_pair(&self) -> Result<[usize; 2]> {
        let want = 2.0 * PI / 5.0;
        for i in 0..self.patches.len() {
            for j in (i + 1)..self.patches.len() {
                if let PatchContact::SideOverlap(len) = self.contact(i, j)
                    && (len - want).abs() <= 1e-7
                {
                    return Ok([i, j]);
                }
            }
        }
        Err(Error::Construction("no side-overlapping patch pair found".into()))
    }

    /// First pair whose union triangles touch at a single corner.
    pub fn touching_pair(&self) -> Result<[usize; 2]> {
        for i in 0..self.patches.len() {
            for j in (i + 1)..self.patches.len() {
                if self.contact(i, j) == PatchContact::VertexTouch {
                    return Ok([i, j]);
                }
            }
        }
        Err(Error::Construction("no vertex-touching patch pair found".into()))
    }

    /// First pair of patches centered at antipodal points.
    pub fn opposite_pair(&self) -> Result<[usize; 2]> {
        for i in 0..self.patches.len() {
            for j in (i + 1)..self.patches.len() {
                if self.contact(i, j) == PatchContact::Disjoint
                    && patches_opposite(&self.patches[i], &self.patches[j])
                {
                    return Ok([i, j]);
                }
            }
        }
        Err(Error::Construction("no opposite patch pair found".into()))
    }

    /// First triple of pairwise side-overlapping patches.
    pub fn adjacent_triple(&self) -> Result<[usize; 3]> {
        let want = 2.0 * PI / 5.0;
        let overlaps = |i: usize, j: usize| {
            matches!(self.contact(i, j), PatchContact::SideOverlap(len) if (len - want).abs() <= 1e-7)
        };
        for i in 0..self.patches.len() {
            for j in (i + 1)..self.patches.len() {
                if !overlaps(i, j) {
                    continue;
                }
                for k in (j + 1)..self.patches.len() {
                    if overlaps(i, k) && overlaps(j, k) {
                        return Ok([i, j, k]);
                    }
                }
            }
        }
        Err(Error::Construction("no pairwise-overlapping patch triple found".into()))
    }

    /// First triple with one vertex-touching pair, the third patch
    /// side-overlapping both.
    pub fn mixed_triple(&self) -> Result<[usize; 3]> {
        let want = 2.0 * PI / 5.0;
        let overlaps = |i: usize, j: usize| {
            matches!(self.contact(i, j), PatchContact::SideOverlap(len) if (len - want).abs() <= 1e-7)
        };
        for i in 0..self.patches.len() {
            for j in (i + 1)..self.patches.len() {
                if self.contact(i, j) != PatchContact::VertexTouch {
                    continue;
                }
                for k in 0..self.patches.len() {
                    if k != i && k != j && overlaps(i.min(k), i.max(k)) && overlaps(j.min(k), j.max(k))
                    {
                        return Ok([i, j, k]);
                    }
                }
            }
        }
        Err(Error::Construction("no mixed patch triple found".into()))
    }

    /// First quadruple of pairwise tile-disjoint patches.
    pub fn disjoint_quadruple(&self) -> Result<[usize; 4]> {
        let n = self.patches.len();
        let clear = |i: usize, j: usize| {
            !matches!(self.contact(i.min(j), i.max(j)), PatchContact::SharesTiles)
        };
        for i in 0..n {
            for j in (i + 1)..n {
                if !clear(i, j) {
                    continue;
                }
                for k in (j + 1)..n {
                    if !(clear(i, k) && clear(j, k)) {
                        continue;
                    }
                    for l in (k + 1)..n {
                        if clear(i, l) && clear(j, l) && clear(k, l) {
                            return Ok([i, j, k, l]);
                        }
                    }
                }
            }
        }
        Err(Error::Construction("no four pairwise-disjoint patches found".into()))
    }

    pub fn compose(&self, ids: &[usize], variant: &str) -> Result<Tiling> {
        let selected: Vec<&MagicPatch> = ids.iter().map(|&i| &self.patches[i]).collect();
        let mut tiling = compose_many(&self.tiling, &selected)?;
        tiling.family = FamilyId::new(FamilyClass::Composed, variant);
        Ok(tiling)
    }
}

/// Composes the first magic patch of a sporadic tiling (the one inside its
/// Type V lune).
fn composed_sporadic(order: [BigonType; 4]) -> Result<Tiling> {
    let base = sporadic(order)?;
    let patches = find_magic_patches(&base);
    let patch = patches.first().ok_or_else(|| {
        Error::Construction("sporadic tiling unexpectedly has no magic patch".into())
    })?;
    let mut tiling = compose(&base, patch)?;
    tiling.family = FamilyId::new(
        FamilyClass::Composed,
        format!("sporadic-{}-composed", sporadic_label(&order)),
    );
    Ok(tiling)
}

/// The seven rigid composed tilings: five icosidodecahedral configurations
/// (the compositions of two opposite patches and of four disjoint patches
/// are omitted because they reproduce a lunar tiling and a kaleidoscope
/// tiling) and the two sporadic tilings with their Type V lune's interior
/// composed.
pub fn composed_catalog() -> Result<Vec<Tiling>> {
    use BigonType::{I, II, III, IV, V};
    let icosi = IcosidodecaPatches::new()?;
    Ok(vec![
        icosi.compose(&[0], "icosidodeca-1-triangle")?,
        icosi.compose(&icosi.adjacent_pair()?, "icosidodeca-2-adjacent")?,
        icosi.compose(&icosi.touching_pair()?, "icosidodeca-2-touching")?,
        icosi.compose(&icosi.adjacent_triple()?, "icosidodeca-3-adjacent")?,
        icosi.compose(&icosi.mixed_triple()?, "icosidodeca-3-touching")?,
        composed_sporadic([I, IV, I, V])?,
        composed_sporadic([II, IV, III, V])?,
    ])
}

// ---------------------------------------------------------------------------
// The magic-triangle tiling
// ---------------------------------------------------------------------------

/// The unique tiling containing a tile of angle greater than π: a magic
/// triangle decomposed into its seven pieces, together with the reflex
/// complement triangle covering the rest of the sphere.
pub fn magic_triangle_tiling() -> Result<Tiling> {
    let spec = magic_triangle_spec();
    let magic = place_polygon_at_center(spec, UnitVec::north_pole(), 0.0)?;
    let mut tiles = magic_triangle_decomposition(&magic)?;
    let v = magic.vertices();
    let complement = PlacedTile::new(spec, vec![v[0], v[2], v[1]])?;
    if !complement.is_reflex() {
        return Err(Error::Construction("complement tile failed to come out reflex".into()));
    }
    tiles.push(complement);
    let tiling = Tiling {
        tiles,
        family: FamilyId::new(FamilyClass::MagicTriangleTiling, "magic-triangle"),
        parameters: BTreeMap::new(),
        provenance: vec![
            "decomposed magic triangle centered at the north pole plus its reflex complement"
                .to_string(),
        ],
    };
    tiling.audit_area()?;
    Ok(tiling)
}

// ---------------------------------------------------------------------------
// Family dispatch and manifest
// ---------------------------------------------------------------------------

fn hemisphere_kind_from_label(label: &str) -> Result<HemisphereKind> {
    match label {
        "octa" => Ok(HemisphereKind::Octa),
        "cubocta" => Ok(HemisphereKind::Cubocta),
        "icosidodeca" => Ok(HemisphereKind::Icosidodeca),
        "icosidodeca-composed" => Ok(HemisphereKind::IcosidodecaComposed),
        other => match other.strip_prefix("monogon-") {
            Some(n) => Ok(HemisphereKind::Monogon(n.parse().map_err(|_| {
                Error::InvalidFamily(format!("bad monogon vertex count in {label:?}"))
            })?)),
            None => Err(Error::InvalidFamily(format!("unknown hemisphere kind {label:?}"))),
        },
    }
}

/// Generates a tiling from its `class:variant` identifier and a parameter
/// map (recognized keys: `small_tile_angle` for kaleidoscopes, `twist` for
/// two-hemisphere tilings).
pub fn generate_family(id: &str, params: &BTreeMap<String, f64>) -> Result<Tiling> {
    let (class, variant) = id
        .split_once(':')
        .ok_or_else(|| Error::InvalidFamily(format!("family id {id:?} is not class:variant")))?;
    match class {
        "kaleidoscope" => {
            let angle = *params.get("small_tile_angle").ok_or_else(|| {
                Error::InvalidFamily("kaleidoscope needs a small_tile_angle parameter".into())
            })?;
            kaleidoscope(KaleidoscopeVariant::from_label(variant)?, angle)
        }
        "two-hemisphere" => {
            let (top, bottom) = variant.split_once('+').ok_or_else(|| {
                Error::InvalidFamily(format!("two-hemisphere variant {variant:?} is not top+bottom"))
            })?;
            let twist = params.get("twist").copied().unwrap_or(0.0);
            two_hemisphere(
                hemisphere_kind_from_label(top)?,
                hemisphere_kind_from_label(bottom)?,
                twist,
            )
        }
        "lunar" => lunar_from_label(variant),
        "sporadic" => sporadic_from_label(variant),
        "composed" => composed_catalog()?
            .into_iter()
            .find(|t| t.family.variant == variant)
            .ok_or_else(|| Error::InvalidFamily(format!("unknown composed variant {variant:?}"))),
        "magic-triangle-tiling" => magic_triangle_tiling(),
        "edge-to-edge-reference" => edge_to_edge_reference(variant),
        other => Err(Error::InvalidFamily(format!("unknown family class {other:?}"))),
    }
}

/// A parameter of a family, with its admissible interval. `None` bounds are
/// unbounded; `integer` marks discrete parameters.
#[derive(Debug, Clone, Serialize)]
pub struct ParameterSpec {
    pub name: String,
    pub lo: Option<f64>,
    pub hi: Option<f64>,
    pub lo_open: bool,
    pub hi_open: bool,
    pub integer: bool,
}

impl ParameterSpec {
    fn angle(lo: f64, hi: f64, hi_open: bool) -> Self {
        Self {
            name: "small_tile_angle".into(),
            lo: Some(lo),
            hi: Some(hi),
            lo_open: true,
            hi_open,
            integer: false,
        }
    }

    fn twist() -> Self {
        Self {
            name: "twist".into(),
            lo: Some(0.0),
            hi: Some(2.0 * PI),
            lo_open: false,
            hi_open: true,
            integer: false,
        }
    }

    fn gons(name: &str) -> Self {
        Self { name: name.into(), lo: Some(3.0), hi: None, lo_open: false, hi_open: true, integer: true }
    }
}

/// One expected tile multiset entry.
#[derive(Debug, Clone, Serialize)]
pub struct TileCount {
    pub gons: u32,
    /// `None` when the count depends on a parameter.
    pub count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl TileCount {
    fn plain(gons: u32, count: usize) -> Self {
        Self { gons, count: Some(count), note: None }
    }

    fn noted(gons: u32, count: usize, note: &str) -> Self {
        Self { gons, count: Some(count), note: Some(note.into()) }
    }
}

/// One row of the family manifest.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyDescriptor {
    pub class: String,
    pub variant: String,
    pub parameters: Vec<ParameterSpec>,
    pub tiles: Vec<TileCount>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl FamilyDescriptor {
    fn new(class: FamilyClass, variant: &str) -> Self {
        Self {
            class: class.label().to_string(),
            variant: variant.to_string(),
            parameters: Vec::new(),
            tiles: Vec::new(),
            note: None,
        }
    }

    fn params(mut self, parameters: Vec<ParameterSpec>) -> Self {
        self.parameters = parameters;
        self
    }

    fn tiles(mut self, tiles: Vec<TileCount>) -> Self {
        self.tiles = tiles;
        self
    }

    fn noted(mut self, note: &str) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// Caveat attached to the manifest: the classification states a count of 31
/// families without enumerating them; this list is the library's own
/// reconstruction of that count.
pub const MANIFEST_NOTE: &str = "31-row reconstruction of the classification's family count; \
rigid tilings reachable inside a parametric family are absorbed into it";

/// The 31 families, as a machine-readable manifest.
pub fn family_manifest() -> Vec<FamilyDescriptor> {
    let mut rows = Vec::new();

    for variant in KaleidoscopeVariant::all() {
        let iv = variant.interval();
        let (sg, lg) = (variant.small_gons(), variant.large_gons());
        let order = variant.group_order();
        rows.push(
            FamilyDescriptor::new(FamilyClass::Kaleidoscope, variant.label())
                .params(vec![ParameterSpec::angle(iv.lo, iv.hi, !iv.hi_closed)])
                .tiles(vec![
                    TileCount::noted(sg, order / sg as usize, "small"),
                    TileCount::noted(lg, order / lg as usize, "large"),
                ])
                .noted(&format!(
                    "degenerates to the {} at the low end; the {} sits at the high end",
                    iv.lo_limit, iv.hi_limit
                )),
        );
    }

    // Hemisphere menus: (label, tile counts) for the four basic kinds.
    let hemis: [(&str, Vec<TileCount>); 4] = [
        ("octa", vec![TileCount::plain(3, 4)]),
        ("cubocta", vec![TileCount::plain(3, 4), TileCount::plain(4, 3)]),
        ("icosidodeca", vec![TileCount::plain(3, 10), TileCount::plain(5, 6)]),
        ("monogon-n", vec![TileCount::noted(0, 1, "one n-gon of angle π; gons = n")]),
    ];
    for i in 0..hemis.len() {
        for j in i..hemis.len() {
            let mut params = vec![ParameterSpec::twist()];
            if hemis[i].0 == "monogon-n" {
                params.push(ParameterSpec::gons("top_gons"));
            }
            if hemis[j].0 == "monogon-n" {
                params.push(ParameterSpec::gons("bottom_gons"));
            }
            let mut tiles = hemis[i].1.clone();
            tiles.extend(hemis[j].1.clone());
            rows.push(
                FamilyDescriptor::new(
                    FamilyClass::TwoHemisphere,
                    &format!("{}+{}", hemis[i].0, hemis[j].0),
                )
                .params(params)
                .tiles(tiles),
            );
        }
    }
    rows.push(
        FamilyDescriptor::new(FamilyClass::TwoHemisphere, "icosidodeca-composed+any")
            .params(vec![ParameterSpec::twist()])
            .tiles(vec![
                TileCount::noted(3, 6, "top"),
                TileCount::noted(5, 3, "top"),
                TileCount::noted(3, 1, "top magic triangle, side 3π/5"),
            ])
            .noted(
                "top hemisphere is the icosidodecahedral filling with its magic patch fused; \
                 it pairs with any hemisphere kind, but pairings with icosidodeca or with \
                 itself reproduce compositions of the icosidodecahedron, so the family count \
                 rises by one",
            ),
    );

    let lunar_rows: [(&str, Vec<TileCount>); 4] = [
        ("II-triangle", vec![TileCount::plain(3, 8), TileCount::plain(4, 3)]),
        ("II-pentagon", vec![TileCount::plain(3, 10), TileCount::plain(4, 5), TileCount::plain(5, 2)]),
        ("IV-triangle", vec![TileCount::plain(3, 14), TileCount::plain(5, 6)]),
        ("IV-square", vec![TileCount::plain(3, 16), TileCount::plain(4, 2), TileCount::plain(5, 8)]),
    ];
    for (variant, tiles) in lunar_rows {
        rows.push(FamilyDescriptor::new(FamilyClass::Lunar, variant).tiles(tiles));
    }

    let sporadic_rows: [(&str, Vec<TileCount>); 3] = [
        ("I-II-I-III", vec![TileCount::plain(3, 8), TileCount::plain(4, 3)]),
        ("I-IV-I-V", vec![TileCount::plain(3, 14), TileCount::plain(5, 6)]),
        ("II-IV-III-V", vec![TileCount::plain(3, 14), TileCount::plain(4, 3), TileCount::plain(5, 6)]),
    ];
    for (variant, tiles) in sporadic_rows {
        rows.push(FamilyDescriptor::new(FamilyClass::Sporadic, variant).tiles(tiles));
    }

    let magic = |count: usize| TileCount::noted(3, count, "magic triangle, side 3π/5");
    let composed_rows: [(&str, Vec<TileCount>); 7] = [
        ("icosidodeca-1-triangle", vec![TileCount::plain(3, 16), TileCount::plain(5, 9), magic(1)]),
        ("icosidodeca-2-adjacent", vec![TileCount::plain(3, 12), TileCount::plain(5, 6), magic(2)]),
        ("icosidodeca-2-touching", vec![TileCount::plain(3, 12), TileCount::plain(5, 6), magic(2)]),
        ("icosidodeca-3-adjacent", vec![TileCount::plain(3, 8), TileCount::plain(5, 3), magic(3)]),
        ("icosidodeca-3-touching", vec![TileCount::plain(3, 8), TileCount::plain(5, 3), magic(3)]),
        (
            "sporadic-I-IV-I-V-composed",
            vec![TileCount::plain(3, 10), TileCount::plain(5, 3), magic(1)],
        ),
        (
            "sporadic-II-IV-III-V-composed",
            vec![TileCount::plain(3, 10), TileCount::plain(4, 3), TileCount::plain(5, 3), magic(1)],
        ),
    ];
    for (variant, tiles) in composed_rows {
        rows.push(FamilyDescriptor::new(FamilyClass::Composed, variant).tiles(tiles));
    }

    rows.push(
        FamilyDescriptor::new(FamilyClass::MagicTriangleTiling, "magic-triangle")
            .tiles(vec![
                TileCount::noted(3, 4, "side π/5"),
                TileCount::plain(5, 3),
                TileCount::noted(3, 1, "reflex complement, angle ≈ 243.435°"),
            ])
            .noted("the only tiling with a tile of angle greater than π"),
    );

    rows
}

/// One concrete, generatable instantiation per manifest row: a
/// `class:variant` identifier plus a parameter map accepted by
/// [`generate_family`]. Rows whose variant is a placeholder are made
/// concrete: `monogon-n` becomes a pentagonal cap and the composed
/// hemisphere is paired with the octahedral one.
pub fn sample_instantiations() -> Vec<(String, BTreeMap<String, f64>)> {
    family_manifest()
        .iter()
        .map(|row| {
            let variant = row.variant.replace("monogon-n", "monogon-5").replace("+any", "+octa");
            let id = format!("{}:{variant}", row.class);
            let mut params = BTreeMap::new();
            for p in &row.parameters {
                match p.name.as_str() {
                    "small_tile_angle" => {
                        let midpoint = 0.5 * (p.lo.unwrap() + p.hi.unwrap());
                        params.insert(p.name.clone(), midpoint);
                    }
                    "twist" => {
                        params.insert(p.name.clone(), 0.35);
                    }
                    // gons parameters are already baked into the concrete label
                    _ => {}
                }
            }
            (id, params)
        })
        .collect()
}

/// The seven edge-to-edge reference fixtures.
pub fn reference_manifest() -> Vec<FamilyDescriptor> {
    let rows: [(&str, Vec<TileCount>); 7] = [
        ("tetrahedron", vec![TileCount::plain(3, 4)]),
        ("octahedron", vec![TileCount::plain(3, 8)]),
        ("cube", vec![TileCount::plain(4, 6)]),
        ("dodecahedron", vec![TileCount::plain(5, 12)]),
        ("icosahedron", vec![TileCount::plain(3, 20)]),
        ("cuboctahedron", vec![TileCount::plain(3, 8), TileCount::plain(4, 6)]),
        ("icosidodecahedron", vec![TileCount::plain(3, 20), TileCount::plain(5, 12)]),
    ];
    rows.into_iter()
        .map(|(variant, tiles)| {
            FamilyDescriptor::new(FamilyClass::EdgeToEdgeReference, variant).tiles(tiles)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sphere::angular_distance;

    fn deg(d: f64) -> f64 {
        d.to_radians()
    }

    #[test]
    fn kaleidoscope_tri_tri_counts_and_area() {
        let t = kaleidoscope(KaleidoscopeVariant::TriTri, deg(70.0)).unwrap();
        assert_eq!(t.tiles.len(), 8);
        let counts = t.species_counts();
        assert_eq!(counts.get(&(3, false)), Some(&8));
        assert!((t.total_area() - 4.0 * PI).abs() < 1e-10);
        let small: usize = t
            .tiles
            .iter()
            .filter(|tile| (tile.spec().angle() - deg(70.0)).abs() < 1e-12)
            .count();
        assert_eq!(small, 4);
    }

    #[test]
    fn kaleidoscope_interval_errors_name_limits() {
        let low = kaleidoscope(KaleidoscopeVariant::TriTri, PI / 3.0).unwrap_err();
        assert!(low.to_string().contains("tetrahedron"));
        let high = kaleidoscope(KaleidoscopeVariant::TriTri, PI / 2.0).unwrap_err();
        assert!(high.to_string().contains("octahedron"));
        let sq = kaleidoscope(KaleidoscopeVariant::TriSquare, (1.0f64 / 3.0).acos()).unwrap_err();
        assert!(sq.to_string().contains("cuboctahedron"));
    }

    #[test]
    fn kaleidoscope_all_variants_close() {
        for variant in KaleidoscopeVariant::all() {
            let iv = variant.interval();
            let alpha = 0.5 * (iv.lo + iv.hi);
            let t = kaleidoscope(variant, alpha).unwrap();
            assert!((t.total_area() - 4.0 * PI).abs() < 1e-9, "{}", variant.label());
            let counts = t.species_counts();
            let order = variant.group_order();
            if variant.small_gons() == variant.large_gons() {
                assert_eq!(
                    counts.get(&(3, false)),
                    Some(&(2 * order / 3)),
                    "{}",
                    variant.label()
                );
            } else {
                assert_eq!(
                    counts.get(&(variant.small_gons(), false)),
                    Some(&(order / variant.small_gons() as usize))
                );
                assert_eq!(
                    counts.get(&(variant.large_gons(), false)),
                    Some(&(order / variant.large_gons() as usize))
                );
            }
        }
    }

    #[test]
    fn kaleidoscope_closed_endpoints_generate() {
        let cubocta = kaleidoscope(KaleidoscopeVariant::SquareTri, (-1.0f64 / 3.0).acos()).unwrap();
        assert_eq!(cubocta.tiles.len(), 14);
        let icosi = kaleidoscope(KaleidoscopeVariant::PentTri, PI - 2.0f64.atan()).unwrap();
        assert_eq!(icosi.tiles.len(), 32);
    }

    #[test]
    fn kaleidoscope_parameter_continuity() {
        // Near the shrinking end the small tiles' total area vanishes; near
        // the closed end the vertex sets approach the solid reached there.
        let small_total = |offset: f64| -> f64 {
            kaleidoscope(KaleidoscopeVariant::TriPent, PI / 3.0 + offset)
                .unwrap()
                .tiles
                .iter()
                .filter(|tile| tile.spec().n() == 3)
                .map(|tile| tile.area())
                .sum()
        };
        // 20 triangles of area 3(α − π/3) each: linear decay to zero.
        assert!((small_total(1e-3) - 0.06).abs() < 1e-6);
        assert!((small_total(1e-5) - 6e-4).abs() < 1e-8);

        let hi = (-1.0f64 / 3.0).acos();
        let near = kaleidoscope(KaleidoscopeVariant::SquareTri, hi - 1e-3).unwrap();
        let limit = kaleidoscope(KaleidoscopeVariant::SquareTri, hi).unwrap();
        for tile in &near.tiles {
            for v in tile.vertices() {
                let closest = limit
                    .tiles
                    .iter()
                    .flat_map(|lt| lt.vertices())
                    .map(|u| angular_distance(u, v))
                    .fold(f64::INFINITY, f64::min);
                assert!(closest < 1e-2, "vertex strayed {closest} from the limit tiling");
            }
        }
    }

    #[test]
    fn two_hemisphere_octa_pair() {
        let twisted = two_hemisphere(HemisphereKind::Octa, HemisphereKind::Octa, PI / 4.0).unwrap();
        assert_eq!(twisted.tiles.len(), 8);
        assert!((twisted.total_area() - 4.0 * PI).abs() < 1e-10);

        // Zero twist restores the octahedron (in vertex-at-pole pose): the
        // tile corners cluster to exactly 6 distinct vertices, while any
        // generic twist splits the equatorial square into 8 points.
        let distinct_vertices = |t: &Tiling| -> usize {
            let mut reps: Vec<UnitVec> = Vec::new();
            for tile in &t.tiles {
                for v in tile.vertices() {
                    if !reps.iter().any(|r| r.coincides(v, 1e-7)) {
                        reps.push(*v);
                    }
                }
            }
            reps.len()
        };
        let aligned = two_hemisphere(HemisphereKind::Octa, HemisphereKind::Octa, 0.0).unwrap();
        assert_eq!(distinct_vertices(&aligned), 6);
        assert_eq!(distinct_vertices(&twisted), 10);
    }

    #[test]
    fn two_hemisphere_mixed_kinds() {
        let t = two_hemisphere(HemisphereKind::Cubocta, HemisphereKind::Monogon(7), 0.3).unwrap();
        assert_eq!(t.tiles.len(), 8);
        assert!((t.total_area() - 4.0 * PI).abs() < 1e-9);
        let composed =
            two_hemisphere(HemisphereKind::IcosidodecaComposed, HemisphereKind::Icosidodeca, 0.2)
                .unwrap();
        assert_eq!(composed.tiles.len(), 26);
    }

    #[test]
    fn lunar_variants() {
        for (bigon, gons, tiles) in [
            (BigonType::II, 3, 11),
            (BigonType::II, 5, 17),
            (BigonType::IV, 3, 20),
            (BigonType::IV, 4, 26),
        ] {
            let t = lunar(bigon, gons).unwrap();
            assert_eq!(t.tiles.len(), tiles, "lunar {}-{}", bigon.label(), gons);
            assert!((t.total_area() - 4.0 * PI).abs() < 1e-9);
        }
        assert!(lunar(BigonType::II, 4).is_err());
        assert!(lunar(BigonType::I, 3).is_err());
    }

    #[test]
    fn lunar_polar_sides_have_expected_lengths() {
        let t = lunar(BigonType::IV, 4).unwrap();
        let square = &t.tiles[0];
        let want = ((3.0 - 5.0f64.sqrt()) / 2.0).acos();
        assert!((square.spec().side() - want).abs() < 1e-12);
        let magic = lunar(BigonType::IV, 3).unwrap();
        assert!((magic.tiles[0].spec().side() - 3.0 * PI / 5.0).abs() < 1e-12);
    }

    #[test]
    fn sporadic_variants() {
        for (order, tiles) in [
            (sporadic_orders()[0], 11),
            (sporadic_orders()[1], 20),
            (sporadic_orders()[2], 23),
        ] {
            let t = sporadic(order).unwrap();
            assert_eq!(t.tiles.len(), tiles, "sporadic {}", sporadic_label(&order));
            assert!((t.total_area() - 4.0 * PI).abs() < 1e-9);
        }
        use BigonType::{I, II};
        assert!(sporadic([I, I, II, II]).is_err());
    }

    #[test]
    fn reference_solids() {
        for (name, count) in [
            ("tetrahedron", 4),
            ("octahedron", 8),
            ("cube", 6),
            ("dodecahedron", 12),
            ("icosahedron", 20),
            ("cuboctahedron", 14),
            ("icosidodecahedron", 32),
        ] {
            let t = edge_to_edge_reference(name).unwrap();
            assert_eq!(t.tiles.len(), count, "{name}");
            assert!((t.total_area() - 4.0 * PI).abs() < 1e-9, "{name}");
        }
        assert!(edge_to_edge_reference("rhombicuboctahedron").is_err());
    }

    #[test]
    fn magic_patches_on_references() {
        let icosi = edge_to_edge_reference("icosidodecahedron").unwrap();
        assert_eq!(find_magic_patches(&icosi).len(), 20);
        let octa = edge_to_edge_reference("octahedron").unwrap();
        assert!(find_magic_patches(&octa).is_empty());
    }

    #[test]
    fn magic_patches_in_sporadic_type_v() {
        // The Type V lune is symmetric under a half turn through its waist,
        // so it carries two seven-tile sets composing to a magic triangle.
        use BigonType::{I, IV, V};
        let t = sporadic([I, IV, I, V]).unwrap();
        let patches = find_magic_patches(&t);
        assert_eq!(patches.len(), 2);
        for patch in &patches {
            for (a, b) in [(0, 1), (1, 2), (2, 0)] {
                let d = angular_distance(&patch.corners[a], &patch.corners[b]);
                assert!((d - 3.0 * PI / 5.0).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn compose_decompose_roundtrip() {
        let icosi = edge_to_edge_reference("icosidodecahedron").unwrap();
        let patches = find_magic_patches(&icosi);
        let composed = compose(&icosi, &patches[0]).unwrap();
        assert_eq!(composed.tiles.len(), 26);
        let counts = composed.species_counts();
        assert_eq!(counts.get(&(3, false)), Some(&17)); // 16 small + 1 magic
        assert_eq!(counts.get(&(5, false)), Some(&9));

        let magic_id = composed
            .tiles
            .iter()
            .position(|t| (t.spec().side() - 3.0 * PI / 5.0).abs() < 1e-9)
            .unwrap();
        let restored = decompose(&composed, magic_id).unwrap();
        assert_eq!(restored.tiles.len(), 32);
        assert_eq!(restored.species_counts(), icosi.species_counts());
    }

    #[test]
    fn composed_catalog_has_seven_rigid_tilings() {
        let tilings = composed_catalog().unwrap();
        assert_eq!(tilings.len(), 7);
        let expect: [(&str, usize); 7] = [
            ("icosidodeca-1-triangle", 26),
            ("icosidodeca-2-adjacent", 20),
            ("icosidodeca-2-touching", 20),
            ("icosidodeca-3-adjacent", 14),
            ("icosidodeca-3-touching", 14),
            ("sporadic-I-IV-I-V-composed", 14),
            ("sporadic-II-IV-III-V-composed", 17),
        ];
        for (t, (variant, tiles)) in tilings.iter().zip(expect) {
            assert_eq!(t.family.variant, variant);
            assert_eq!(t.tiles.len(), tiles, "{variant}");
            assert!((t.total_area() - 4.0 * PI).abs() < 1e-9, "{variant}");
        }
    }

    #[test]
    fn magic_triangle_tiling_shape() {
        let t = magic_triangle_tiling().unwrap();
        assert_eq!(t.tiles.len(), 8);
        let reflex: Vec<&PlacedTile> = t.tiles.iter().filter(|tile| tile.is_reflex()).collect();
        assert_eq!(reflex.len(), 1);
        let complement_angle = reflex[0].interior_angle();
        assert!((complement_angle.to_degrees() - 243.4349).abs() < 1e-3);
        assert!(complement_angle > PI);
        assert!((t.total_area() - 4.0 * PI).abs() < 1e-10);
    }

    #[test]
    fn generate_family_dispatch() {
        let mut params = BTreeMap::new();
        params.insert("small_tile_angle".to_string(), deg(70.0));
        assert_eq!(generate_family("kaleidoscope:tri-tri", &params).unwrap().tiles.len(), 8);
        params.insert("twist".to_string(), 0.4);
        assert_eq!(
            generate_family("two-hemisphere:octa+monogon-5", &params).unwrap().tiles.len(),
            5
        );
        assert_eq!(generate_family("lunar:II-pentagon", &BTreeMap::new()).unwrap().tiles.len(), 17);
        assert_eq!(
            generate_family("sporadic:I-II-I-III", &BTreeMap::new()).unwrap().tiles.len(),
            11
        );
        assert_eq!(
            generate_family("edge-to-edge-reference:cube", &BTreeMap::new()).unwrap().tiles.len(),
            6
        );
        assert!(generate_family("kaleidoscope", &BTreeMap::new()).is_err());
        assert!(generate_family("lunar:II-square", &BTreeMap::new()).is_err());
    }

    #[test]
    fn manifest_row_counts() {
        let families = family_manifest();
        assert_eq!(families.len(), 31);
        assert_eq!(reference_manifest().len(), 7);
        // Deterministic variant ids, unique within the manifest.
        let mut ids: Vec<String> =
            families.iter().map(|f| format!("{}:{}", f.class, f.variant)).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), 31);
    }

    #[test]
    fn every_sample_instantiation_generates() {
        let samples = sample_instantiations();
        assert_eq!(samples.len(), 31);
        for ((id, params), row) in samples.iter().zip(family_manifest()) {
            let tiling = generate_family(id, params)
                .unwrap_or_else(|e| panic!("sample {id} failed to generate: {e}"));
            assert!((tiling.total_area() - 4.0 * PI).abs() < 1e-8, "area deficit in {id}");
            let mut expected: usize = row.tiles.iter().map(|tc| tc.count.unwrap_or(0)).sum();
            if row.variant.ends_with("+any") {
                // The descriptor lists only the fixed hemisphere; the sample
                // pairs it with the octahedral one.
                expected += 4;
            }
            assert_eq!(tiling.tiles.len(), expected, "tile count mismatch in {id}");
        }
    }
}
