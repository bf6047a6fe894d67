//! Command operands: a table file, or a group spec built on the fly.

use std::path::Path;

use anyhow::{bail, Context};
use wardforge::constructions::{build_group, GroupSpec};

use crate::tablefile::TableFile;

/// Reads `source` as a file when one exists at that path, and otherwise as
/// a group spec (pointed at its identity).
pub fn load(source: &str) -> anyhow::Result<TableFile> {
    let path = Path::new(source);
    if path.exists() {
        return TableFile::read(path);
    }
    match source.parse::<GroupSpec>() {
        Ok(spec) => {
            let g = build_group(&spec).with_context(|| format!("cannot build group {source}"))?;
            Ok(TableFile::new(g.magma().clone(), Some(g.point())))
        }
        Err(_) => bail!("{source:?} is neither an existing file nor a group spec"),
    }
}

/// Converts a 1-based point given on the command line.
pub fn point(k: usize, order: usize, flag: &str) -> anyhow::Result<usize> {
    if !(1..=order).contains(&k) {
        bail!("{flag} {k} is outside 1..{order}");
    }
    Ok(k - 1)
}
