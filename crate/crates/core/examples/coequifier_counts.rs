//! Coequifier and coidentifier presentations against hom counts.

use xmodcat::fixtures;
use xmodcat::groupkit::{count_homs, library};
use xmodcat::grpcolim::{coequifier_presentation, verify_coequifier_by_homcount};
use xmodcat::Budget;

fn main() -> xmodcat::Result<()> {
    let panel = library::default_panel();
    for fx in fixtures::coequifier_fixtures() {
        let p = coequifier_presentation(&fx.base, &fx.alpha, &fx.beta)?;
        print!("{:<16} {}\n ", fx.name, p.render());
        for (name, k) in &panel {
            let (lhs, rhs) = verify_coequifier_by_homcount(&p, &fx.base, &fx.alpha, &fx.beta, k, Budget::DEFAULT)?;
            assert_eq!(lhs, rhs);
            if fx.alpha == fx.beta {
                assert_eq!(lhs, count_homs(&fx.base, k, Budget::DEFAULT)?);
            }
            print!(" {name}: {lhs}={rhs}");
        }
        println!();
    }
    Ok(())
}
