//! Runs the law harness over every structure and backend and prints a
//! one-line summary per run. Pass a seed as the first argument.

use bisemikit::harness::*;

fn main() {
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(0);
    for kind in StructureKind::ALL {
        for backend in HarnessBackend::ALL {
            let report =
                run_conformance(&StructureSpec::standard(kind, backend), 100, seed).unwrap();
            let failed: Vec<_> = report
                .verdicts
                .iter()
                .filter(|v| !v.holds)
                .map(|v| v.law.as_str())
                .collect();
            println!(
                "{:<14} {:<11} {}",
                kind.name(),
                backend.name(),
                if failed.is_empty() {
                    "ok".into()
                } else {
                    failed.join(", ")
                }
            );
        }
    }

    let z6 = StructureSpec::with_laws(
        StructureKind::Semiring,
        HarnessBackend::Z6,
        &["zero-divisor-free"],
    );
    let report = run_conformance(&z6, 100, seed).unwrap();
    println!("{}", report.to_json_string());
}
