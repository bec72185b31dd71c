//! A quiver read from TOML: `A3` with the middle vertex as a sink. Objects are
//! keyed by orbit canonical forms since the orientation is not linear.

use nullspec::classify::classify_all;
use nullspec::modfd::{ModuleCategory, Quiver};
use nullspec::{Caps, NullityEngine, Spectrum, Universe};

const QUIVER: &str = r#"
name = "A3-sink"
vertices = 3
arrows = [[1, 2], [3, 2]]
"#;

pub fn run_example() -> nullspec::Result<()> {
    let q = Quiver::from_config_str(QUIVER)?;
    let cat = ModuleCategory::quiver(&q, 2, Caps::default())?;
    let universe = Universe::generate(&cat, 3)?;
    let indecomposables: Vec<String> = classify_all(&cat, &universe)?
        .into_iter()
        .filter(|r| r.indecomposable)
        .map(|r| r.object)
        .collect();
    println!("{} indecomposables: {}", indecomposables.len(), indecomposables.join(", "));

    let engine = NullityEngine::new(&universe);
    let spec = Spectrum::compute(&cat, &engine)?;
    for p in spec.points() {
        println!("  [{}] Supp = {}", p.label, spec.describe_set(spec.supp(p.canonical())));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> nullspec::Result<()> {
    run_example()
}
