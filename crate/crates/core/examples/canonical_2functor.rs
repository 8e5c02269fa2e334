//! The canonical 2-functor into groups, and the negation example showing it
//! is not full on 2-cells.

use xmodcat::fixtures;
use xmodcat::twocat::two_cells;
use xmodcat::xfun::{canonical_2functor_to_groups, check_2functoriality, groups_target, validate_xmod_morphism};
use xmodcat::Budget;

fn main() -> xmodcat::Result<()> {
    for (name, xm) in fixtures::named() {
        let target = groups_target(&xm, Budget::DEFAULT)?;
        let (h, m) = canonical_2functor_to_groups(&xm, &target)?;
        let ok = validate_xmod_morphism(&xm, &h, &m).is_valid() && check_2functoriality(&xm, &h, &m).is_valid();
        println!("{name:<26} into {} group(s): valid = {ok}", target.groups.len());
    }
    let xm = fixtures::ab_negation()?;
    let c = &xm.base;
    let z3 = c.obj_names().iter().position(|n| n == "Z3").expect("Z3");
    let (f, neg) = (c.id(z3), xm.gamma[z3][1]);
    let target = groups_target(&xm, Budget::DEFAULT)?;
    let (h, m) = canonical_2functor_to_groups(&xm, &target)?;
    let up = two_cells(&xm, f, neg)?.len();
    let down = two_cells(&h, m.apply_one_cell(f), m.apply_one_cell(neg))?.len();
    println!("2-cells f ⇒ -f on Z3: {up} upstairs, {down} downstairs");
    Ok(())
}
