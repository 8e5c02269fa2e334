//! Validates the conjugation modules and shows each mutation being caught.

use xmodcat::fixtures;
use xmodcat::xmod::validate_crossed_module;

fn main() -> xmodcat::Result<()> {
    for name in ["bz2-conj", "bs3-conj", "groups-1-z2-s3"] {
        let xm = fixtures::by_name(name)?;
        let r = validate_crossed_module(&xm);
        println!("{name:<16} checked {:>5} instances, valid = {}", r.checked, r.is_valid());
    }
    for (name, xm, axiom) in fixtures::mutations() {
        let r = validate_crossed_module(&xm);
        let v = r.first(axiom).expect("mutation is caught");
        println!("{name:<24} rejected: {} {:?} ({})", v.axiom, v.witness, v.detail);
    }
    Ok(())
}
