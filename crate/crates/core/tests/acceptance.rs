//! Runs every acceptance criterion, printing one PASS/FAIL line each.
//! Use `cargo test -p heisenberg-core --test acceptance -- --nocapture` to see
//! the report.
//!
//! Criterion 7 cannot pass as stated: 32 geodesic words of length 8 have no
//! dead-end completion of area at most 64. Their cheapest completion has area
//! 73. It is still run and reported as FAIL. The test checks that the failure
//! is exactly this shortfall and nothing else.

use std::time::Instant;

use heisenberg_core::verify::{completion_survey, run_criterion, CRITERIA};

const BLOCKED: &[u8] = &[7];

#[test]
fn acceptance_suite() {
    let mut failed = Vec::new();
    for &(id, name) in CRITERIA.iter() {
        let start = Instant::now();
        match run_criterion(id) {
            Ok(report) => {
                println!("{report} ({:.1}s)", start.elapsed().as_secs_f64());
                if !report.passed {
                    failed.push(id);
                }
            }
            Err(e) => {
                println!("[FAIL] {id:>2} {name}: error: {e}");
                failed.push(id);
            }
        }
    }
    let unexpected: Vec<_> = failed.iter().filter(|id| !BLOCKED.contains(id)).collect();
    assert!(unexpected.is_empty(), "failed criteria: {unexpected:?}");
}

#[test]
fn completion_shortfall_is_area_73() {
    let survey = completion_survey(8, 64, 128).unwrap();
    assert!(survey.invalid.is_empty(), "{:?}", survey.invalid);
    assert_eq!(survey.beyond_bound.len(), 32);
    for (w, area) in &survey.beyond_bound {
        assert_eq!(*area, Some(73), "{w}");
    }
    let widened = completion_survey(8, 73, 73).unwrap();
    assert!(widened.invalid.is_empty() && widened.beyond_bound.is_empty());
    assert_eq!(widened.max_area, 73);
    println!(
        "criterion 7 with max_area 73: {} words, all complete, {} checked on the BFS ball",
        widened.words, widened.oracle_checked
    );
}
