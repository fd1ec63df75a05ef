//! Runs every acceptance criterion at the full level and prints one line
//! per criterion. Exits nonzero when any check fails.

use injcolor_cli::acceptance::{run_acceptance, Level, Options, Status};

fn main() {
    let report = run_acceptance(Level::Full, &Options::default());
    for check in &report.checks {
        let label = match check.criterion {
            Some(n) => format!("criterion {n:>2}"),
            None => "info        ".to_string(),
        };
        let status = match check.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        };
        println!(
            "{label} {:<24} {status}  measured {} / expected {} ({} ms)",
            check.name, check.measured, check.expected, check.elapsed_ms
        );
        for detail in &check.details {
            println!("             {detail}");
        }
    }

    let injected = run_acceptance(
        Level::Quick,
        &Options {
            corrupt_pattern_a: true,
            only: vec![5, 9],
            ..Options::default()
        },
    );
    let caught = !injected.passed()
        && injected
            .checks
            .iter()
            .any(|c| c.criterion == Some(9) && c.status == Status::Fail);
    println!(
        "fault injection (corrupted pattern A) {}",
        if caught { "detected" } else { "NOT detected" }
    );

    let criteria = report
        .checks
        .iter()
        .filter(|c| c.criterion.is_some())
        .count();
    let ok = report.passed() && criteria == 10 && caught;
    println!("acceptance: {}", if ok { "PASS" } else { "FAIL" });
    if !ok {
        std::process::exit(1);
    }
}
