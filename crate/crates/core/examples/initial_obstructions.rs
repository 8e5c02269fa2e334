//! The initial-object items agree: all true for trivial G, all false otherwise.

use xmodcat::fixtures;
use xmodcat::limits2d::obstruction_report;
use xmodcat::Budget;

fn main() -> xmodcat::Result<()> {
    for (name, xm) in fixtures::named() {
        let r = obstruction_report(&xm, Budget::DEFAULT)?;
        if let Some(reason) = &r.not_applicable {
            println!("{name:<26} not applicable ({reason})");
            continue;
        }
        println!("{name:<26} items {:?} consistent = {}", r.items(), r.consistent);
        for w in &r.witnesses {
            println!("    {}: {}", w.kind, w.detail);
        }
    }
    Ok(())
}
