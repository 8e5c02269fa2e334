//! Isotropy groups of deloopings and the comparison from a crossed module.

use xmodcat::fincat::FinCategory;
use xmodcat::groupkit::library;
use xmodcat::xmod::{canonical_comparison, compute_isotropy, conjugation_module_delooping, delta};
use xmodcat::Budget;

fn main() -> xmodcat::Result<()> {
    for (name, g) in [("Z2", library::cyclic(2)), ("S3", library::s3()), ("Z4", library::cyclic(4))] {
        let c = FinCategory::delooping(&g);
        let z = compute_isotropy(&c, 0, Budget::DEFAULT)?;
        let (d, _) = delta(&c, &z)?;
        println!("Z(B{name}) has order {}, delta injective = {}", z.order(), d.is_injective());
        let cmp = canonical_comparison(&conjugation_module_delooping(&g), Budget::DEFAULT)?;
        println!("  comparison unique = {}, isomorphism = {}", cmp.is_unique(), cmp.is_isomorphism());
    }
    let c = FinCategory::walking_arrow();
    for a in c.objects() {
        println!("Z({}) in 0 < 1 has order {}", c.obj_name(a), compute_isotropy(&c, a, Budget::DEFAULT)?.order());
    }
    Ok(())
}
