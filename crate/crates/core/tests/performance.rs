//! `analyze` must stay interactive on systems of up to ten sentences.

use std::time::{Duration, Instant};

use fsystems::generate::{cycle, random, yablo};
use fsystems::report::{analyze, emit_report, AnalysisOptions};
use fsystems::FSystem;

const BUDGET: Duration = Duration::from_secs(5);

fn indexed(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> FSystem {
    FSystem::from_index_edges(n, |i| format!("s{i}"), edges).unwrap()
}

fn hard_cases() -> Vec<(String, FSystem)> {
    let mut out = vec![
        ("isolated".to_string(), indexed(10, [])),
        ("complete".to_string(), indexed(10, (0..10).flat_map(|x| (0..10).map(move |y| (x, y))))),
        (
            "complete without loops".to_string(),
            indexed(10, (0..10).flat_map(|x| (0..10).filter(move |&y| y != x).map(move |y| (x, y)))),
        ),
        ("two-cycles".to_string(), indexed(10, (0..5).flat_map(|i| [(2 * i, 2 * i + 1), (2 * i + 1, 2 * i)]))),
        ("fan into sinks".to_string(), indexed(10, (0..5).flat_map(|x| (5..10).map(move |y| (x, y))))),
        ("yablo".to_string(), yablo(10).unwrap()),
        ("cycle".to_string(), cycle(10).unwrap()),
    ];
    for (i, p) in [0.1, 0.2, 0.3, 0.5, 0.7, 0.9].into_iter().enumerate() {
        for seed in 0..3 {
            out.push((format!("random p={p} seed={seed}"), random(10, p, 100 * i as u64 + seed).unwrap()));
        }
    }
    out
}

#[test]
fn analyze_ten_sentences_within_budget() {
    for (name, sys) in hard_cases() {
        let start = Instant::now();
        let report = analyze(&sys, &AnalysisOptions::default()).unwrap();
        let text = emit_report(&report);
        let elapsed = start.elapsed();
        assert!(!report.hit_ceiling(), "{name}: hit a ceiling");
        assert!(elapsed < BUDGET, "{name}: {elapsed:?}, {} bytes", text.len());
    }
}
