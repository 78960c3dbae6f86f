//! Acceptance suite at full scale: one PASS/FAIL line per criterion.

use std::process::ExitCode;

use affine_schubert::selftest::{run_all, Scale};

fn main() -> ExitCode {
    let workers = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1);
    let report = run_all(Scale::Full, workers);
    for c in &report.criteria {
        let status = if c.passed { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {status} [{:.2}s] {}: {}", c.id, c.seconds, c.name, c.detail);
    }
    let failed = report.criteria.iter().filter(|c| !c.passed).count();
    println!("acceptance: {} passed, {failed} failed", report.criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
