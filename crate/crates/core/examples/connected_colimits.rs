//! Every connected colimit of the base is also two-dimensional.

use xmodcat::fincat::{enumerate_functors, FinCategory};
use xmodcat::fixtures;
use xmodcat::limits2d::{check_2d_colimit, colimit_1d, Cocone, Diagram};
use xmodcat::Budget;

fn main() -> xmodcat::Result<()> {
    let budget = Budget::DEFAULT;
    for name in ["bs3-conj", "poset-square", "arrow-z2", "groups-1-z2-s3"] {
        let xm = fixtures::by_name(name)?;
        let c = &xm.base;
        let mut checked = 0;
        for f in c.morphisms() {
            for &g in c.hom(c.dom(f), c.cod(f)) {
                let d = Diagram::parallel(f, g, c)?;
                if let Some(u) = colimit_1d(c, &d, budget)? {
                    let v = check_2d_colimit(&xm, &d, &Cocone { apex: u.apex, legs: u.legs }, budget)?;
                    assert!(v.exists(), "{name}: coequalizer of {f}, {g}: {v:?}");
                    checked += 1;
                }
            }
        }
        let span = FinCategory::span();
        for functor in enumerate_functors(&span, c, budget)?.into_iter().take(200) {
            let d = Diagram { shape: span.clone(), functor };
            if let Some(u) = colimit_1d(c, &d, budget)? {
                assert!(check_2d_colimit(&xm, &d, &Cocone { apex: u.apex, legs: u.legs }, budget)?.exists());
                checked += 1;
            }
        }
        println!("{name:<16} {checked} coequalizers and pushouts, all two-dimensional");
    }
    Ok(())
}
