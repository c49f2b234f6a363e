//! Spherical tiling kernel: exact-side regular spherical polygons, patch
//! assembly, a catalog of non-edge-to-edge tilings of the sphere by regular
//! polygons, and a numerical verifier for them.
//!
//! Layering, bottom to top:
//! - [`sphere`]: unit-sphere points, arcs, isometries, angle measurement,
//!   arc intersection, point location.
//! - [`polygon`]: regular spherical polygons — side/angle/area/radius
//!   relations and their inverses.
//! - [`supp`]: the supplementary-angle side kernel — side-sum functions,
//!   their monotonicity windows, and root solving used to justify which
//!   mixed-species fits exist.
//! - [`forge`]: placing concrete tiles on the sphere and assembling bigons,
//!   hemispheres, and decomposition patches.
//! - [`catalog`]: the tiling families themselves, plus edge-to-edge
//!   reference solids and patch composition/decomposition.
//! - [`verify`]: the numerical verifier — vertex/edge audits, coverage and
//!   overlap checks, patch extraction, isometry matching.
//! - [`io`], [`render`]: deterministic JSON serialization, SVG and OBJ
//!   export.
//! - [`lemmas`]: the quantitative lemma harness backing the verifier's
//!   claims.

pub mod catalog;
pub mod error;
pub mod forge;
pub mod io;
pub mod lemmas;
pub mod patch;
pub mod polygon;
pub mod render;
pub mod sphere;
pub mod supp;
pub mod verify;

pub use error::{Error, Result};
pub use sphere::{Arc, ArcIntersection, Isometry, PointLocation, UnitVec};

/// Tolerance for treating two points, or a point and an arc, as coincident.
///
/// Constructions are closed-form up to iterative root solves that converge
/// to ~1e-12, so genuine coincidences land within ~1e-10 even after long
/// isometry chains; genuinely distinct features in these tilings are
/// separated by at least ~1e-2. 1e-9 sits safely between.
pub const TOL_COINCIDENCE: f64 = 1e-9;

/// Tolerance for clustering tile corners into tiling vertices. Looser than
/// [`TOL_COINCIDENCE`] so that a chain of placements around a full vertex
/// still clusters, but far below any genuine vertex separation.
pub const TOL_VERTEX_CLUSTER: f64 = 1e-7;

/// Tolerance for area bookkeeping: the tile areas of a tiling must sum to
/// the sphere's area 4π within this residual.
pub const TOL_AREA_RESIDUAL: f64 = 1e-8;

/// Maximum deviation from unit norm accepted when validating a point that
/// claims to be on the sphere.
pub const TOL_UNIT_NORM: f64 = 1e-12;
