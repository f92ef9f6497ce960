//! Runs the acceptance criteria and prints one line per criterion. Built
//! without the test harness so the lines show up in ordinary test output.

use std::process::ExitCode;

use jacobi_core::verify::{self, Status};
use jacobi_core::{Engine, EngineConfig};

fn main() -> ExitCode {
    let e = Engine::new(EngineConfig::default());
    let report = verify::run(&e, &[]).expect("suite names are valid");
    for c in &report.checks {
        let verdict = match c.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::ReportOnly => "report",
        };
        println!("criterion {:>2} {:<14} {verdict:<6} {:>7.1}s  {}", c.criterion, c.name, c.runtime.as_secs_f64(), c.actual);
        if c.status == Status::Fail {
            println!("             expected {}", c.expected);
        }
    }
    let criteria: Vec<u8> = report.checks.iter().map(|c| c.criterion).collect();
    if criteria != (1..=12).collect::<Vec<u8>>() {
        println!("acceptance: expected one check per criterion 1-12, got {criteria:?}");
        return ExitCode::FAILURE;
    }
    if report.passed() {
        println!("acceptance: all required criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: some required criteria failed");
        ExitCode::FAILURE
    }
}
