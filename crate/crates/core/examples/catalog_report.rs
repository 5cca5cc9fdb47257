//! Runs the application catalog and prints measured ratios for failing cases.

use quintsect::catalog::{default_records, verify_all, CaseStatus};
use quintsect::series::ToleranceConfig;

fn main() {
    let report = verify_all(&default_records(), &ToleranceConfig::default(), 1e-9).unwrap();
    for row in &report.rows {
        println!("{:<17} {:<7} {:<11} max residual {:.2e}", row.case_id, row.printed_label, row.status, row.max_residual());
        for (x, r) in row.discrepant_ratios() {
            println!("    x = {x:<5} lhs/rhs = {:.12}", r.re);
        }
    }
    println!(
        "{} verified, {} discrepant, {} unverified",
        report.count(CaseStatus::Verified),
        report.count(CaseStatus::Discrepant),
        report.count(CaseStatus::Unverified)
    );
}
