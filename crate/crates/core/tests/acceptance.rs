//! Acceptance suite: one PASS/FAIL line per criterion, then the per-entry
//! validator suites and a seed sweep over the randomized criteria. Runs
//! without the libtest harness so the lines are always printed.

use std::process::ExitCode;

use conelab::catalog::Catalog;
use conelab::repro::{entry_suite, run_all, run_criterion, CRITERIA, DEFAULT_SEED};

/// Extra seeds for the randomized criteria.
const SWEEP_SEEDS: [u64; 3] = [1, 2, 3];
const RANDOMIZED: [usize; 4] = [1, 2, 3, 4];

fn main() -> ExitCode {
    let catalog = match Catalog::embedded() {
        Ok(c) => c,
        Err(e) => {
            println!("[FAIL] embedded catalog does not load: {e}");
            return ExitCode::FAILURE;
        }
    };
    let mut failures = 0usize;

    println!("acceptance criteria (seed {DEFAULT_SEED})");
    let results = run_all(DEFAULT_SEED, &catalog);
    assert_eq!(results.len(), CRITERIA.len());
    for r in &results {
        println!("{r}");
        failures += usize::from(!r.passed);
    }

    println!("seed sweep");
    for seed in SWEEP_SEEDS {
        for id in RANDOMIZED {
            let r = run_criterion(id, seed, &catalog);
            if !r.passed {
                println!("seed {seed}: {r}");
                failures += 1;
            }
        }
    }
    let again = run_criterion(2, DEFAULT_SEED, &catalog);
    if again != results[1] {
        println!("[FAIL] C2 is not reproducible at seed {DEFAULT_SEED}");
        failures += 1;
    }
    println!("  {} seeds x {} randomized criteria rerun", SWEEP_SEEDS.len(), RANDOMIZED.len());

    println!("entry suites");
    for entry in catalog.iter() {
        let suite = entry_suite(entry);
        if suite.is_empty() {
            println!("[FAIL] {} has no validators", entry.name);
            failures += 1;
        }
        for item in &suite {
            println!("{item}");
            failures += usize::from(!item.passed);
        }
    }

    if failures == 0 {
        println!("acceptance: all passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failures} failure(s)");
        ExitCode::FAILURE
    }
}
