//! Catalog files: JSON lines, one record per case.
//!
//! Field order is fixed: `case_id`, `printed_label`, `function`,
//! `parameter`, `domain_radius`, `sample_points`, `status`. Blank lines and
//! lines starting with `#` are skipped on load.

use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{application_cases, find_case, ApplicationCase, CaseStatus, CatalogError, CatalogReport};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogRecord {
    pub case_id: String,
    pub printed_label: String,
    pub function: String,
    pub parameter: Option<f64>,
    pub domain_radius: f64,
    pub sample_points: Vec<f64>,
    pub status: Option<CaseStatus>,
}

impl CatalogRecord {
    pub fn from_case(case: &ApplicationCase) -> Self {
        Self {
            case_id: case.case_id.to_string(),
            printed_label: case.printed_label.to_string(),
            function: case.function.tag().to_string(),
            parameter: case.parameter(),
            domain_radius: case.domain.radius(),
            sample_points: case.default_samples(),
            status: None,
        }
    }
}

/// Every case at its default parameter and sample points, status unset.
pub fn default_records() -> Vec<CatalogRecord> {
    application_cases().iter().map(CatalogRecord::from_case).collect()
}

/// Records carrying the statuses measured in `report`.
pub fn records_from_report(records: &[CatalogRecord], report: &CatalogReport) -> Vec<CatalogRecord> {
    records
        .iter()
        .map(|r| {
            let status = report.rows.iter().find(|row| row.case_id == r.case_id).map(|row| row.status);
            CatalogRecord { status, ..r.clone() }
        })
        .collect()
}

pub fn load_catalog<R: BufRead>(reader: R) -> Result<Vec<CatalogRecord>, CatalogError> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let parse_err = |message: String| CatalogError::Parse { line: i + 1, message };
        let rec: CatalogRecord = serde_json::from_str(trimmed).map_err(|e| parse_err(e.to_string()))?;
        let case = find_case(&rec.case_id).map_err(|e| parse_err(e.to_string()))?;
        if rec.function != case.function.tag() {
            return Err(parse_err(format!("case {} is for '{}', not '{}'", rec.case_id, case.function.tag(), rec.function)));
        }
        if rec.sample_points.iter().any(|x| !x.is_finite()) || rec.parameter.is_some_and(|p| !p.is_finite()) {
            return Err(parse_err("non-finite number".into()));
        }
        out.push(rec);
    }
    Ok(out)
}

pub fn read_catalog(path: &Path) -> Result<Vec<CatalogRecord>, CatalogError> {
    load_catalog(BufReader::new(std::fs::File::open(path)?))
}

pub fn dump_catalog<W: Write>(records: &[CatalogRecord], mut w: W) -> Result<(), CatalogError> {
    for rec in records {
        let line = serde_json::to_string(rec).map_err(|e| std::io::Error::new(std::io::ErrorKind::InvalidData, e))?;
        writeln!(w, "{line}")?;
    }
    w.flush()?;
    Ok(())
}

/// Writes next to `path` and renames, so a failed write leaves no partial file.
pub fn write_catalog(records: &[CatalogRecord], path: &Path) -> Result<(), CatalogError> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    dump_catalog(records, &mut tmp)?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}
