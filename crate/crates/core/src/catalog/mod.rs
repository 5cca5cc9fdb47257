//! Tabulated special functions and the catalog of application identities
//! built from them.

mod cases;
mod file;
mod functions;

pub use cases::{
    alpha_power, application_cases, case_order_key, find_case, verify_all, verify_case, ApplicationCase, CaseDomain, CaseReport,
    CaseStatus, CatalogReport, PointReport, RhsParts, WeightRule,
};
pub use file::{
    default_records, dump_catalog, load_catalog, read_catalog, records_from_report, write_catalog, CatalogRecord,
};
pub use functions::{eval_by_representation, eval_oracle, SpecialFunctionId};

use thiserror::Error;

use crate::hypergeom::HypergeomError;
use crate::series::SeriesStatus;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown function '{0}'")]
    UnknownFunction(String),
    #[error("unknown case '{0}'")]
    UnknownCase(String),
    #[error("outside domain: {0}")]
    Domain(String),
    #[error("series did not converge: {0}")]
    NotConverged(SeriesStatus),
    #[error(transparent)]
    Hypergeom(#[from] HypergeomError),
    #[error("catalog line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
