//! The full acceptance battery: one printed pass/fail line per criterion.

use mpa::verify::run_all;

#[test]
fn acceptance() {
    let results = run_all();
    let mut all_passed = true;
    for r in &results {
        let status = if r.passed { "pass" } else { "FAIL" };
        println!("criterion {}: {} — {} ({})", r.id, status, r.name, r.detail);
        all_passed &= r.passed;
    }
    assert!(all_passed, "at least one acceptance criterion failed");
}
