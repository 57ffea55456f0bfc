//! Data packs: a directory with `manifest.json` and graph files in the
//! edge-list format. Loading verifies the checksum and re-checks the
//! recorded invariants.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::drg::intersection_array;
use crate::error::{Error, Result};
use crate::graph::io::{format_graph, parse_graph};
use crate::graph::Graph;

use super::cayley::{golay, Golay};
use super::named::m23_graph;

pub const MANIFEST: &str = "manifest.json";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PackEntry {
    pub name: String,
    pub file: String,
    pub n: usize,
    pub m: usize,
    pub sha256: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub valency: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub array: Option<String>,
    /// Expected automorphism group order, as a decimal string.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub aut_order: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub graphs: Vec<PackEntry>,
}

impl Manifest {
    pub fn find(&self, name: &str) -> Option<&PackEntry> {
        self.graphs.iter().find(|e| e.name == name)
    }
}

fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

pub fn read_manifest(dir: &Path) -> Result<Manifest> {
    let path = dir.join(MANIFEST);
    if !path.exists() {
        return Err(Error::DataPackMissing(path.display().to_string()));
    }
    Ok(serde_json::from_str(&fs::read_to_string(path)?)?)
}

/// Writes graphs with their recorded invariants and a manifest. Entries are
/// `(name, graph, aut_order)`.
pub fn write_pack(dir: &Path, graphs: &[(&str, &Graph, Option<String>)]) -> Result<Manifest> {
    fs::create_dir_all(dir)?;
    let mut manifest = Manifest::default();
    for &(name, g, ref aut) in graphs {
        let text = format_graph(g);
        let file = format!("{name}.g");
        fs::write(dir.join(&file), &text)?;
        manifest.graphs.push(PackEntry {
            name: name.into(),
            file,
            n: g.n(),
            m: g.m(),
            sha256: sha256_hex(text.as_bytes()),
            valency: g.valency(),
            array: intersection_array(g).ok().map(|a| a.to_string()),
            aut_order: aut.clone(),
        });
    }
    fs::write(dir.join(MANIFEST), serde_json::to_string_pretty(&manifest)?)?;
    Ok(manifest)
}

/// Loads one graph, verifying the checksum, size, valency and intersection
/// array against the manifest.
pub fn load_pack_graph(dir: &Path, name: &str) -> Result<(Graph, PackEntry)> {
    let manifest = read_manifest(dir)?;
    let entry = manifest.find(name).cloned().ok_or_else(|| Error::DataPackMissing(format!("{name} not listed in {}", dir.display())))?;
    let path = dir.join(&entry.file);
    if !path.exists() {
        return Err(Error::DataPackMissing(path.display().to_string()));
    }
    let bytes = fs::read(&path)?;
    let actual = sha256_hex(&bytes);
    if actual != entry.sha256 {
        return Err(Error::Checksum { file: entry.file.clone(), expected: entry.sha256.clone(), actual });
    }
    let g = parse_graph(&String::from_utf8_lossy(&bytes))?;
    if g.n() != entry.n || g.m() != entry.m {
        return Err(Error::InvariantMismatch(format!("{name}: manifest says n={}, m={}, file has n={}, m={}", entry.n, entry.m, g.n(), g.m())));
    }
    if let Some(k) = entry.valency {
        if g.valency() != Some(k) {
            return Err(Error::InvariantMismatch(format!("{name}: valency {:?}, manifest {k}", g.valency())));
        }
    }
    if let Some(a) = &entry.array {
        let computed = intersection_array(&g)?.to_string();
        if &computed != a {
            return Err(Error::InvariantMismatch(format!("{name}: array {computed}, manifest {a}")));
        }
    }
    Ok((g, entry))
}

/// The pack of graphs whose construction is costliest: Γ(C23) and the M23
/// graph.
pub fn write_standard_pack(dir: &Path) -> Result<Manifest> {
    let c23 = golay(Golay::C23)?;
    let m23 = m23_graph();
    write_pack(dir, &[("golay-c23", &c23.graph, None), ("m23", &m23.graph, None)])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let g = crate::families::hoffman_singleton().graph;
        write_pack(dir.path(), &[("hs", &g, Some("252000".into()))]).unwrap();
        let (back, entry) = load_pack_graph(dir.path(), "hs").unwrap();
        assert_eq!(back, g);
        assert_eq!(entry.array.as_deref(), Some("{7,6;1,1}"));
        let path = dir.path().join("hs.g");
        let mut text = fs::read_to_string(&path).unwrap();
        text.push_str("# tampered\n");
        fs::write(&path, text).unwrap();
        assert!(matches!(load_pack_graph(dir.path(), "hs"), Err(Error::Checksum { .. })));
        assert!(matches!(load_pack_graph(dir.path(), "nope"), Err(Error::DataPackMissing(_))));
    }
}
