//! Catalog and evidence files.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use deltalink_core::analysis::{parse_edge, EvidenceEdge, PathwayGraph};
use deltalink_core::catalog::CatalogError;
use deltalink_core::{Catalog, ConwayEngine};
use log::warn;

/// Catalog shipped with the crate.
pub const BUNDLED_CATALOG: &str = include_str!("../data/catalog.txt");
/// Published pathways without a replayable witness.
pub const BUNDLED_CITED: &str = include_str!("../data/cited_evidence.txt");
/// Search results shipped so tables do not rerun the search.
pub const BUNDLED_EVIDENCE: &str = include_str!("../data/evidence.txt");

/// Environment variable naming a catalog file to use instead of the bundled one.
pub const CATALOG_ENV: &str = "DELTALINK_CATALOG";

#[derive(Debug, thiserror::Error)]
pub enum DataError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("catalog {origin}: {source}")]
    Catalog {
        origin: String,
        source: CatalogError,
    },
    #[error("evidence {origin}, line {line}: {message}")]
    Evidence {
        origin: String,
        line: usize,
        message: String,
    },
}

fn read(path: &Path) -> Result<String, DataError> {
    fs::read_to_string(path).map_err(|source| DataError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Parses catalog text and logs its warnings.
pub fn parse_catalog(
    text: &str,
    origin: &str,
    engine: &mut ConwayEngine,
) -> Result<Catalog, DataError> {
    let cat = Catalog::parse(text, engine).map_err(|source| DataError::Catalog {
        origin: origin.into(),
        source,
    })?;
    for w in cat.warnings() {
        warn!("catalog {origin}: {w}");
    }
    Ok(cat)
}

/// Loads `path`, else the file named by `DELTALINK_CATALOG`, else the bundled catalog.
pub fn load_catalog(path: Option<&Path>, engine: &mut ConwayEngine) -> Result<Catalog, DataError> {
    let chosen = path
        .map(Path::to_path_buf)
        .or_else(|| std::env::var_os(CATALOG_ENV).map(PathBuf::from));
    match chosen {
        Some(p) => parse_catalog(&read(&p)?, &p.display().to_string(), engine),
        None => parse_catalog(BUNDLED_CATALOG, "(bundled)", engine),
    }
}

/// Parses evidence lines, skipping blank lines and `#` comments.
pub fn parse_evidence(text: &str, origin: &str) -> Result<Vec<EvidenceEdge>, DataError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let edge = parse_edge(line).map_err(|message| DataError::Evidence {
            origin: origin.into(),
            line: i + 1,
            message,
        })?;
        out.push(edge);
    }
    Ok(out)
}

pub fn read_evidence(path: &Path) -> Result<Vec<EvidenceEdge>, DataError> {
    parse_evidence(&read(path)?, &path.display().to_string())
}

/// Evidence file text: `#` header lines followed by one edge per line.
pub fn format_evidence(edges: &[EvidenceEdge], header: &[String]) -> String {
    let mut out = String::new();
    for h in header {
        out.push_str("# ");
        out.push_str(h);
        out.push('\n');
    }
    for e in edges {
        out.push_str(&e.to_string());
        out.push('\n');
    }
    out
}

pub fn write_evidence(
    path: &Path,
    edges: &[EvidenceEdge],
    header: &[String],
) -> Result<(), DataError> {
    fs::write(path, format_evidence(edges, header)).map_err(|source| DataError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Cited pathways plus the given evidence files, or the bundled search
/// results when none are given.
pub fn load_evidence(paths: &[PathBuf]) -> Result<PathwayGraph, DataError> {
    let mut graph = PathwayGraph::new();
    graph.extend(parse_evidence(BUNDLED_CITED, "(bundled cited)")?);
    if paths.is_empty() {
        graph.extend(parse_evidence(BUNDLED_EVIDENCE, "(bundled)")?);
    }
    for p in paths {
        graph.extend(read_evidence(p)?);
    }
    Ok(graph)
}
