//! On-disk character table cache.
//!
//! The file is plain text: a header line followed by one `n|lambda|rho|value`
//! line per table entry. Loading checks every table for completeness and
//! orthogonality before it is installed.

use std::collections::BTreeMap;
use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;
use std::sync::Arc;

use crate::characters::{install_table, CharacterTable, ClassFunction};
use crate::error::{Error, Result};
use crate::partitions::{parse_partition, partitions_of, CycleType, Partition};

pub const CACHE_HEADER: &str = "AGUIAR-CHARTAB v1";

/// File name used inside a cache directory.
pub const CACHE_FILE: &str = "chartab.txt";

pub fn save_cache(path: &Path, tables: &[Arc<CharacterTable>]) -> Result<()> {
    let mut out = BufWriter::new(fs::File::create(path)?);
    writeln!(out, "{CACHE_HEADER}")?;
    for table in tables {
        for (lambda, row) in table.rows() {
            for (rho, value) in table.classes().iter().zip(row.values()) {
                writeln!(
                    out,
                    "{}|{}|{}|{}",
                    table.degree(),
                    lambda,
                    rho.shape(),
                    value
                )?;
            }
        }
    }
    out.flush()?;
    Ok(())
}

type Entries = BTreeMap<usize, BTreeMap<(Partition, Partition), i128>>;

fn parse_entries(text: &str) -> Result<Entries> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, header)) if header.trim_end() == CACHE_HEADER => {}
        Some((_, header)) => {
            return Err(Error::CacheVersion {
                found: header.trim_end().to_string(),
                expected: CACHE_HEADER,
            })
        }
        None => {
            return Err(Error::CacheParse {
                line: 1,
                reason: "empty file".into(),
            })
        }
    }
    let mut entries = Entries::new();
    for (idx, line) in lines {
        let lineno = idx + 1;
        let bad = |reason: String| Error::CacheParse {
            line: lineno,
            reason,
        };
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('|').collect();
        let [n, lambda, rho, value] = fields[..] else {
            return Err(bad(format!("expected 4 fields, found {}", fields.len())));
        };
        let n: usize = n.trim().parse().map_err(|e| bad(format!("degree: {e}")))?;
        let lambda = parse_partition(lambda).map_err(|e| bad(e.to_string()))?;
        let rho = parse_partition(rho).map_err(|e| bad(e.to_string()))?;
        let value: i128 = value
            .trim()
            .parse()
            .map_err(|e| bad(format!("value: {e}")))?;
        if lambda.weight() != n || rho.weight() != n {
            return Err(bad(format!("entry does not have degree {n}")));
        }
        if entries
            .entry(n)
            .or_default()
            .insert((lambda, rho), value)
            .is_some()
        {
            return Err(bad("duplicate entry".into()));
        }
    }
    Ok(entries)
}

fn assemble(
    n: usize,
    mut entries: BTreeMap<(Partition, Partition), i128>,
) -> Result<CharacterTable> {
    let classes = CycleType::all(n);
    let mut rows = Vec::new();
    for lambda in partitions_of(n).iter() {
        let mut values = Vec::with_capacity(classes.len());
        for rho in &classes {
            let value = entries
                .remove(&(lambda.clone(), rho.shape().clone()))
                .ok_or_else(|| {
                    Error::Inconsistent(format!(
                        "table {n} is missing chi^{lambda}({})",
                        rho.shape()
                    ))
                })?;
            values.push(value);
        }
        rows.push(ClassFunction::from_values(n, values)?);
    }
    let table = CharacterTable::from_rows(n, rows)?;
    table.verify_orthogonality()?;
    Ok(table)
}

/// Reads, validates and installs every table in the file.
pub fn load_cache(path: &Path) -> Result<Vec<Arc<CharacterTable>>> {
    let text = fs::read_to_string(path)?;
    let entries = parse_entries(&text)?;
    let tables = entries
        .into_iter()
        .map(|(n, e)| assemble(n, e))
        .collect::<Result<Vec<_>>>()?;
    Ok(tables.into_iter().map(install_table).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::character_table;

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join(CACHE_FILE);
        let tables: Vec<_> = (0..=5).map(|n| character_table(n).unwrap()).collect();
        save_cache(&path, &tables).unwrap();
        let loaded = load_cache(&path).unwrap();
        assert_eq!(loaded.len(), tables.len());
        for (a, b) in loaded.iter().zip(&tables) {
            assert_eq!(a.as_ref(), b.as_ref());
        }
    }

    #[test]
    fn rejects_other_versions() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join(CACHE_FILE);
        fs::write(&path, "AGUIAR-CHARTAB v2\n1|[1]|[1]|1\n").unwrap();
        assert!(matches!(load_cache(&path), Err(Error::CacheVersion { .. })));
    }

    #[test]
    fn reports_the_bad_line() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join(CACHE_FILE);
        fs::write(&path, format!("{CACHE_HEADER}\n1|[1]|[1]|1\n2|[2]|[1,1]\n")).unwrap();
        assert!(matches!(
            load_cache(&path),
            Err(Error::CacheParse { line: 3, .. })
        ));
        fs::write(&path, format!("{CACHE_HEADER}\n1|[1]|[1]|x\n")).unwrap();
        assert!(matches!(
            load_cache(&path),
            Err(Error::CacheParse { line: 2, .. })
        ));
    }

    #[test]
    fn rejects_incomplete_or_wrong_tables() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join(CACHE_FILE);
        fs::write(
            &path,
            format!("{CACHE_HEADER}\n2|[2]|[2]|1\n2|[2]|[1,1]|1\n"),
        )
        .unwrap();
        assert!(matches!(load_cache(&path), Err(Error::Inconsistent(_))));
        let wrong = "2|[2]|[2]|1\n2|[2]|[1,1]|1\n2|[1,1]|[2]|1\n2|[1,1]|[1,1]|1\n";
        fs::write(&path, format!("{CACHE_HEADER}\n{wrong}")).unwrap();
        assert!(matches!(load_cache(&path), Err(Error::Inconsistent(_))));
    }
}
