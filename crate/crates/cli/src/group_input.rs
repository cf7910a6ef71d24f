//! Group loading from built-in specs or JSON files.

use std::path::Path;

use num_complex::Complex64;
use serde::Deserialize;
use wreath_core::{CharacterTable, FiniteGroup};

use crate::error::CliError;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupFile {
    order: usize,
    table: Vec<Vec<usize>>,
    #[serde(default)]
    characters: Option<Vec<Vec<[f64; 2]>>>,
}

fn is_builtin(spec: &str) -> bool {
    spec == "trivial" || ["cyclic:", "sym:", "dihedral:"].iter().any(|p| spec.starts_with(p))
}

pub fn load(spec: &str) -> Result<(FiniteGroup, CharacterTable), CliError> {
    if is_builtin(spec) {
        let g = FiniteGroup::from_spec(spec)?;
        let t = CharacterTable::compute(&g)?;
        return Ok((g, t));
    }
    let path = Path::new(spec);
    if !path.exists() {
        return Err(CliError::Core(wreath_core::Error::UnsupportedSpec(spec.into())));
    }
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{spec}: {e}")))?;
    parse(&text).map_err(|e| match e {
        CliError::GroupFile(m) => CliError::GroupFile(format!("{spec}: {m}")),
        other => other,
    })
}

pub fn parse(text: &str) -> Result<(FiniteGroup, CharacterTable), CliError> {
    let f: GroupFile = serde_json::from_str(text).map_err(|e| CliError::GroupFile(e.to_string()))?;
    if f.table.len() != f.order {
        return Err(CliError::GroupFile(format!("order is {} but the table has {} rows", f.order, f.table.len())));
    }
    let g = FiniteGroup::from_table(&f.table)?;
    let t = match f.characters {
        Some(rows) => {
            let rows = rows.into_iter().map(|r| r.into_iter().map(|[re, im]| Complex64::new(re, im)).collect()).collect();
            CharacterTable::from_rows(&g, rows)?
        }
        None => CharacterTable::compute(&g)?,
    };
    Ok((g, t))
}
