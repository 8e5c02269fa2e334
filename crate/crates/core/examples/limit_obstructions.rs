//! Inserters, equifiers, commas and cotensors fail once the group is nontrivial.

use xmodcat::fixtures;
use xmodcat::limits2d::{search_weighted_limit, LimitShape};
use xmodcat::twocat::TwoCell;
use xmodcat::Budget;

fn main() -> xmodcat::Result<()> {
    for name in ["bz2-plus-initial", "elementary-abelian-2", "poset-meet-discontinuous"] {
        let xm = fixtures::by_name(name)?;
        let c = &xm.base;
        let zero = c.initial_object().expect("initial object");
        let a = *xm.nontrivial_objects().first().expect("nontrivial object");
        let (f, bang) = (c.id(a), c.hom(zero, a)[0]);
        let shapes = [
            LimitShape::Inserter { f, g: f },
            LimitShape::Equifier { alpha: TwoCell::identity(bang), beta: TwoCell { src: bang, element: 1 } },
            LimitShape::Comma { f, g: f },
            LimitShape::CotensorBy2 { object: a },
        ];
        for s in shapes {
            let v = search_weighted_limit(&xm, &s, Budget::DEFAULT)?;
            let w = v.witness().expect("witness");
            println!("{name:<26} {:<14} {:<11} {}: {}", s.name(), v.label(), w.kind, w.detail);
        }
    }
    Ok(())
}
