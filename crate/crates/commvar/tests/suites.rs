//! Every verification suite must come back fully green at its default
//! scope. This is the library-level counterpart of `commvar verify --suite
//! all`.

use commvar::suites::{run_suite, RowVerdict, SuiteOptions, SUITE_NAMES};

#[test]
fn all_suites_match() {
    let opts = SuiteOptions::default();
    for name in SUITE_NAMES {
        let report = run_suite(name, &opts).expect("suite runs");
        let failing: Vec<String> = report
            .rows
            .iter()
            .filter(|r| r.verdict != RowVerdict::Match)
            .map(|r| format!("{}: expected {} computed {}", r.id, r.expected, r.computed))
            .collect();
        assert!(
            failing.is_empty(),
            "suite {name} has failing rows:\n{}",
            failing.join("\n")
        );
        println!("suite {name}: {} rows, all match", report.rows.len());
    }
}
