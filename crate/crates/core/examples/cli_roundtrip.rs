//! Generates instances, round-trips them through JSON and runs the CLI in
//! process.

use xmodcat::cli::{self, schema::InstanceFile};
use xmodcat::fixtures::{self, RandomCaps};

fn main() -> xmodcat::Result<()> {
    let xm = fixtures::random_xmod(7, RandomCaps::default())?;
    let inst = InstanceFile::with_module("random-xmod-7", &xm);
    let text = inst.to_json();
    assert_eq!(InstanceFile::parse(&text)?, inst);
    let path = std::env::temp_dir().join("xmodcat-random-7.json");
    std::fs::write(&path, &text)?;
    for command in ["validate", "obstructions", "extend-functor"] {
        let mut out = Vec::new();
        let code = cli::run(["xmodcat", command, path.to_str().expect("utf-8 path")], &mut out, &mut std::io::sink());
        let report: serde_json::Value = serde_json::from_slice(&out).expect("report is JSON");
        println!("{command:<15} exit {code}: {}", report["summary"]);
    }
    Ok(())
}
