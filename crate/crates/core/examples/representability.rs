//! Searches for a representing pair `(R, τ)`.

use xmodcat::fincat::FinCategory;
use xmodcat::fixtures;
use xmodcat::limits2d::representability_search;
use xmodcat::xmod::CrossedModule;
use xmodcat::Budget;

fn main() -> xmodcat::Result<()> {
    let cases = vec![
        ("trivial on 0 < 1", CrossedModule::trivial(FinCategory::walking_arrow())),
        ("trivial on square", CrossedModule::trivial(fixtures::square())),
        ("conjugation on BZ2", fixtures::by_name("bz2-conj")?),
        ("conjugation on BS3", fixtures::by_name("bs3-conj")?),
    ];
    for (name, xm) in cases {
        let r = representability_search(&xm, Budget::DEFAULT)?;
        match r.found {
            Some((obj, tau)) => println!("{name:<20} represented by ({}, {tau})", xm.base.obj_name(obj)),
            None => println!("{name:<20} absent after {} pairs", r.pairs_checked),
        }
    }
    Ok(())
}
