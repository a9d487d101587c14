//! Regenerate the exception catalog from scratch: sweep every graph with at
//! most 8 vertices and 10 edges without any catalog, let the oracles find
//! the exceptions, and write them in catalog format.
//!
//! ```text
//! cargo run --release --example bootstrap_catalog -- [output-path]
//! ```

use std::path::PathBuf;

use coline::sweep::{bootstrap_catalog, SweepConfig};

fn main() {
    let output = std::env::args().nth(1).map(PathBuf::from);
    let config = SweepConfig {
        output_path: output.clone(),
        ..SweepConfig::default()
    };
    match bootstrap_catalog(&config) {
        Ok((catalog, report)) => {
            for line in report.summary_lines() {
                println!("{line}");
            }
            println!("toughness exceptions: {}", catalog.toughness_exceptions.len());
            println!("trace exceptions: {}", catalog.trace_exceptions.len());
            println!("wu-meng graphs: {}", catalog.wu_meng_21.len());
            match output {
                Some(p) => println!("wrote {}", p.display()),
                None => print!("{}", catalog.to_text()),
            }
        }
        Err(e) => {
            eprintln!("bootstrap failed: {e}");
            std::process::exit(1);
        }
    }
}
