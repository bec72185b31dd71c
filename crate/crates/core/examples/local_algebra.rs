//! Modules over `k[x, y]/(x², xy, y²)` of dimension at most 3.

use nullspec::classify::classify_all;
use nullspec::modfd::{local_algebra_443, ModuleCategory};
use nullspec::{Caps, Universe};

pub fn run_example() -> nullspec::Result<()> {
    let cat = ModuleCategory::new(local_algebra_443(2)?, Caps::default())?;
    let universe = Universe::generate(&cat, 3)?;
    println!("{} isomorphism classes of dimension <= 3", universe.len());
    for r in classify_all(&cat, &universe)? {
        println!(
            "  {:<24} indec={:<5} uniform={:<5} premonoform={}",
            r.object, r.indecomposable, r.uniform, r.premonoform
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> nullspec::Result<()> {
    run_example()
}
