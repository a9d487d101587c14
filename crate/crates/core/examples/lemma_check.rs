//! Verify the structural properties of longest cycles in a few coline
//! graphs, then show every checker firing on a deliberately short cycle.
//!
//! ```text
//! cargo run --release --example lemma_check
//! ```

use coline::graphcore::{coline, named};
use coline::lemmacheck::{check_all, negative_controls, LongestCycleContext};

fn main() {
    for name in ["K5", "H1", "H3", "K3uP3", "C4uK2", "P6"] {
        let g = named(name).unwrap();
        let host = coline(&g).0;
        let ctx = match LongestCycleContext::longest(&host) {
            Ok(ctx) => ctx,
            Err(e) => {
                println!("{name}: {e}");
                continue;
            }
        };
        let tough = coline::oracle::is_tough(&host).tough;
        let violations = check_all(&ctx, tough.then_some(&g)).unwrap();
        println!(
            "{name:>6}: longest cycle {} of {}, {} off-cycle components, {} violations",
            ctx.cycle.len(),
            host.order(),
            ctx.off_cycle_components.len(),
            violations.len()
        );
    }

    println!("\nnegative controls:");
    for control in negative_controls() {
        let ctx = LongestCycleContext::with_cycle(&control.host, control.cycle.clone()).unwrap();
        let violations = check_all(&ctx, control.root.as_ref()).unwrap();
        println!("  {} ({} violations)", control.name, violations.len());
        for v in violations.iter().take(4) {
            let longer = v.longer_cycle.as_ref().map_or(0, Vec::len);
            println!("    {} {:?}: {} (longer cycle: {longer})", v.lemma, v.orientation, v.detail);
        }
    }
}
