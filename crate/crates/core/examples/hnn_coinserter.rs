//! Coinserters of groups as HNN-style presentations, checked by hom counts.

use xmodcat::fixtures;
use xmodcat::groupkit::library;
use xmodcat::grpcolim::{coinserter_presentation, verify_coinserter_by_homcount, verify_on_panel};
use xmodcat::Budget;

fn main() -> xmodcat::Result<()> {
    let panel = library::default_panel();
    for fx in fixtures::coinserter_fixtures() {
        let c = coinserter_presentation(&fx.f, &fx.g)?;
        println!("{:<16} {}", fx.name, c.presentation.render());
        let counts = verify_on_panel(&panel, |k| verify_coinserter_by_homcount(&c.presentation, &fx.f, &fx.g, k, Budget::DEFAULT))?;
        for h in counts {
            assert!(h.holds());
            print!("  {}: {}={}", h.group, h.lhs, h.rhs);
        }
        println!();
    }
    Ok(())
}
