//! The `sphtile/1` interchange format.
//!
//! A tiling file is UTF-8 JSON with keys in sorted order and every float
//! printed with 15 significant digits, so identical tilings serialize to
//! byte-identical files and golden files diff cleanly. Reading is lenient
//! where writing is strict: a loaded tile's vertices are renormalized and
//! *not* checked against its spec, so a corrupted file still loads into a
//! [`Tiling`] that the verifier can judge (and reject) on geometric
//! grounds rather than failing at parse time.

use crate::catalog::{FamilyClass, FamilyId, Tiling};
use crate::error::{Error, Result};
use crate::forge::PlacedTile;
use crate::polygon::RegularPolygonSpec;
use crate::sphere::UnitVec;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::io::Write as _;
use std::path::Path;

/// Format tag written to and required from every tiling file.
pub const FORMAT_TAG: &str = "sphtile/1";

/// Generator name + version recorded in file metadata.
pub const GENERATOR: &str = concat!("sphtile ", env!("CARGO_PKG_VERSION"));

// Struct fields are declared in alphabetical order: serde emits fields in
// declaration order, and the format promises sorted keys.

/// On-disk form of one tile.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TileRecord {
    /// Corner angle of the underlying regular polygon, radians. Always the
    /// spec angle (at most π); a complement placement is recognized from
    /// its vertices, whose measured corners are the explement.
    pub angle: f64,
    pub id: usize,
    pub n: u32,
    pub vertices: Vec<[f64; 3]>,
}

/// On-disk form of the family identifier.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FamilyRecord {
    pub class: String,
    pub variant: String,
}

/// File metadata block.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Metadata {
    /// True when the tiling is in the generator's canonical pose (seed tile
    /// at the north pole, azimuth zero).
    pub canonical_pose: bool,
    pub generator: String,
    #[serde(default)]
    pub provenance: Vec<String>,
}

/// Root object of a `sphtile/1` file.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TilingFile {
    pub family: FamilyRecord,
    pub format: String,
    pub metadata: Metadata,
    pub parameters: BTreeMap<String, f64>,
    pub tiles: Vec<TileRecord>,
}

impl TilingFile {
    /// Captures a tiling in file form.
    pub fn from_tiling(tiling: &Tiling) -> Self {
        let tiles = tiling
            .tiles
            .iter()
            .enumerate()
            .map(|(id, tile)| TileRecord {
                angle: tile.spec().angle(),
                id,
                n: tile.spec().n(),
                vertices: tile
                    .vertices()
                    .iter()
                    .map(|v| [v.x(), v.y(), v.z()])
                    .collect(),
            })
            .collect();
        TilingFile {
            family: FamilyRecord {
                class: tiling.family.class.label().to_string(),
                variant: tiling.family.variant.clone(),
            },
            format: FORMAT_TAG.to_string(),
            metadata: Metadata {
                canonical_pose: true,
                generator: GENERATOR.to_string(),
                provenance: tiling.provenance.clone(),
            },
            parameters: tiling.parameters.clone(),
            tiles,
        }
    }

    /// Reconstructs the tiling. Tile ids must be 0..len in order; vertices
    /// are renormalized (zero or non-finite vectors are format errors) and
    /// the tiles are built leniently so geometric defects survive for the
    /// verifier to report.
    pub fn into_tiling(self) -> Result<Tiling> {
        if self.format != FORMAT_TAG {
            return Err(Error::Format(format!(
                "unsupported format tag {:?}, expected {FORMAT_TAG:?}",
                self.format
            )));
        }
        let class = FamilyClass::from_label(&self.family.class)?;
        let mut tiles = Vec::with_capacity(self.tiles.len());
        for (i, record) in self.tiles.iter().enumerate() {
            if record.id != i {
                return Err(Error::Format(format!(
                    "tile ids must be sequential from 0: found {} at position {i}",
                    record.id
                )));
            }
            let spec = RegularPolygonSpec::from_angle(record.n, record.angle)?;
            let mut vertices = Vec::with_capacity(record.vertices.len());
            for (k, &[x, y, z]) in record.vertices.iter().enumerate() {
                let v = UnitVec::from_components(x, y, z).map_err(|_| {
                    Error::Format(format!("tile {i} vertex {k} is not a direction: [{x}, {y}, {z}]"))
                })?;
                vertices.push(v);
            }
            tiles.push(PlacedTile::new_lenient(spec, vertices)?);
        }
        Ok(Tiling {
            tiles,
            family: FamilyId::new(class, self.family.variant),
            parameters: self.parameters,
            provenance: self.metadata.provenance,
        })
    }
}

/// serde_json formatter that prints every float with 15 significant digits
/// (scientific form), the format's determinism contract.
struct FixedFloatFormatter;

impl serde_json::ser::Formatter for FixedFloatFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> std::io::Result<()>
    where
        W: ?Sized + std::io::Write,
    {
        write!(writer, "{}", format_float(value))
    }
}

/// 15-significant-digit float form used everywhere in `sphtile/1` files.
/// Reparsing and reformatting is idempotent: 15 digits are below f64's
/// 17-digit round-trip precision, so the nearest float to the printed
/// decimal prints back to the same decimal.
pub fn format_float(value: f64) -> String {
    format!("{value:.14e}")
}

/// Serializes any value under the format's conventions (sorted keys come
/// from field declaration order and BTreeMap; floats via [`format_float`]).
pub fn to_json_string<T: Serialize>(value: &T) -> Result<String> {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, FixedFloatFormatter);
    value
        .serialize(&mut ser)
        .map_err(|e| Error::Format(format!("serialization failed: {e}")))?;
    out.push(b'\n');
    String::from_utf8(out).map_err(|e| Error::Format(format!("non-UTF-8 output: {e}")))
}

/// Renders a tiling as a `sphtile/1` JSON document.
pub fn tiling_to_json(tiling: &Tiling) -> Result<String> {
    for (i, tile) in tiling.tiles.iter().enumerate() {
        for (k, v) in tile.vertices().iter().enumerate() {
            for c in [v.x(), v.y(), v.z()] {
                if !c.is_finite() {
                    return Err(Error::Format(format!("tile {i} vertex {k} is not finite")));
                }
            }
        }
    }
    to_json_string(&TilingFile::from_tiling(tiling))
}

/// Parses a `sphtile/1` JSON document.
pub fn tiling_from_json(text: &str) -> Result<Tiling> {
    let file: TilingFile =
        serde_json::from_str(text).map_err(|e| Error::Format(format!("invalid tiling file: {e}")))?;
    file.into_tiling()
}

/// Writes a tiling file to disk.
pub fn save(tiling: &Tiling, path: &Path) -> Result<()> {
    let text = tiling_to_json(tiling)?;
    let mut f = std::fs::File::create(path)
        .map_err(|e| Error::Format(format!("cannot create {}: {e}", path.display())))?;
    f.write_all(text.as_bytes())
        .map_err(|e| Error::Format(format!("cannot write {}: {e}", path.display())))
}

/// Reads a tiling file from disk.
pub fn load(path: &Path) -> Result<Tiling> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Format(format!("cannot read {}: {e}", path.display())))?;
    tiling_from_json(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{
        KaleidoscopeVariant, edge_to_edge_reference, kaleidoscope, magic_triangle_tiling,
    };
    use crate::verify::{Classification, full_report};

    #[test]
    fn round_trip_preserves_numbers_and_bytes() {
        let t = kaleidoscope(KaleidoscopeVariant::TriTri, 1.2217).unwrap();
        let text = tiling_to_json(&t).unwrap();
        let back = tiling_from_json(&text).unwrap();
        assert_eq!(back.tiles.len(), t.tiles.len());
        assert_eq!(back.family, t.family);
        assert_eq!(back.parameters, t.parameters);
        // Save-load-save is byte-identical.
        let text2 = tiling_to_json(&back).unwrap();
        assert_eq!(text, text2);
        // Numbers survive at 15 significant digits.
        for (a, b) in t.tiles.iter().zip(&back.tiles) {
            assert!((a.spec().angle() - b.spec().angle()).abs() < 1e-13);
            for (va, vb) in a.vertices().iter().zip(b.vertices()) {
                assert!(va.coincides(vb, 1e-13));
            }
        }
    }

    #[test]
    fn sorted_keys_and_fixed_floats() {
        let t = edge_to_edge_reference("tetrahedron").unwrap();
        let text = tiling_to_json(&t).unwrap();
        let family_pos = text.find("\"family\"").unwrap();
        let format_pos = text.find("\"format\"").unwrap();
        let metadata_pos = text.find("\"metadata\"").unwrap();
        let parameters_pos = text.find("\"parameters\"").unwrap();
        let tiles_pos = text.find("\"tiles\"").unwrap();
        assert!(family_pos < format_pos);
        assert!(format_pos < metadata_pos);
        assert!(metadata_pos < parameters_pos);
        assert!(parameters_pos < tiles_pos);
        // Every float is in the fixed scientific form.
        assert!(text.contains("e0") || text.contains("e-"));
        assert_eq!(format_float(0.5), "5.00000000000000e-1");
    }

    #[test]
    fn reflex_complement_survives_round_trip() {
        let t = magic_triangle_tiling().unwrap();
        let text = tiling_to_json(&t).unwrap();
        let back = tiling_from_json(&text).unwrap();
        let reflex: Vec<_> = back.tiles.iter().filter(|t| t.is_reflex()).collect();
        assert_eq!(reflex.len(), 1);
        let report = full_report(&back);
        assert_eq!(report.classification, Classification::NonEdgeToEdge);
    }

    #[test]
    fn corrupted_vertex_loads_and_fails_verification() {
        let t = edge_to_edge_reference("octahedron").unwrap();
        let mut file = TilingFile::from_tiling(&t);
        // Nudge one coordinate off the sphere by 1e-3; load renormalizes,
        // leaving a direction error for the verifier to catch.
        file.tiles[0].vertices[0][0] += 1e-3;
        let text = to_json_string(&file).unwrap();
        let back = tiling_from_json(&text).unwrap();
        let report = full_report(&back);
        assert_eq!(report.classification, Classification::Invalid);
    }

    #[test]
    fn malformed_inputs_are_format_errors() {
        assert!(matches!(tiling_from_json("{"), Err(Error::Format(_))));
        assert!(matches!(tiling_from_json("{}"), Err(Error::Format(_))));
        let t = edge_to_edge_reference("tetrahedron").unwrap();
        let mut file = TilingFile::from_tiling(&t);
        file.format = "sphtile/9".into();
        let text = to_json_string(&file).unwrap();
        assert!(matches!(tiling_from_json(&text), Err(Error::Format(_))));
        let mut zeroed = TilingFile::from_tiling(&t);
        zeroed.tiles[0].vertices[0] = [0.0, 0.0, 0.0];
        let text = to_json_string(&zeroed).unwrap();
        assert!(matches!(tiling_from_json(&text), Err(Error::Format(_))));
    }

    #[test]
    fn save_and_load_files() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("t.json");
        let t = kaleidoscope(KaleidoscopeVariant::PentTri, 2.0).unwrap();
        save(&t, &path).unwrap();
        let back = load(&path).unwrap();
        assert_eq!(back.tiles.len(), t.tiles.len());
        assert_eq!(tiling_to_json(&back).unwrap(), tiling_to_json(&t).unwrap());
    }
}

