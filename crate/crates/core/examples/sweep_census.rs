//! Sweep every graph with at most `n` non-isolated vertices and `m` edges
//! (default 8 and 10), cross-check each decision against the oracles, and
//! print the exception censuses.
//!
//! ```text
//! cargo run --release --example sweep_census -- [n] [m]
//! ```

use coline::sweep::{run_sweep, SweepConfig};

fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>());
    let defaults = SweepConfig::default();
    let config = SweepConfig {
        max_vertices: args.next().and_then(Result::ok).unwrap_or(defaults.max_vertices),
        max_edges: args.next().and_then(Result::ok).unwrap_or(defaults.max_edges),
        ..defaults
    };
    let report = match run_sweep(&config) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("sweep failed: {e}");
            std::process::exit(2);
        }
    };
    for line in report.summary_lines() {
        println!("{line}");
    }
    for m in report.mismatches.iter().take(20) {
        println!("mismatch {} {}: theorem {} oracle {}", m.check, m.graph, m.theorem, m.oracle);
    }
    for (check, secs) in &report.timing {
        println!("time {check}: {secs:.2}s");
    }
    std::process::exit(if report.is_clean() { 0 } else { 1 });
}
