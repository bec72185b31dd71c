//! The premonoform spectrum of `A2 = (1 <- 2)` over `F_2`: three points, their
//! supports, the closed subsets and which of them are extension closed.
//!
//! Run with `cargo run --example a2_spectrum`.

use nullspec::modfd::ModuleCategory;
use nullspec::{NullityEngine, Spectrum, Universe};

pub fn run_example() -> nullspec::Result<()> {
    let cat = ModuleCategory::a_n(2, 2)?;
    // extensions of objects of length <= 2 have length <= 4
    let universe = Universe::generate(&cat, 4)?;
    let engine = NullityEngine::new(&universe);
    let spec = Spectrum::compute(&cat, &engine)?;

    println!("{} isomorphism classes of length <= 4", universe.len());
    println!("Spec has {} points:", spec.len());
    for p in spec.points() {
        let m = p.canonical();
        println!("  [{}]  Supp = {}", p.label, spec.describe_set(spec.supp(m)));
    }

    let closed = spec.closed_subsets();
    println!("closed subsets:");
    for &phi in &closed {
        let tag = if spec.is_extension_closed(phi) { "" } else { "  (not extension closed)" };
        println!("  {}{tag}", spec.describe_set(phi));
    }
    let cec = spec.closed_ext_closed_subsets();
    println!("{} closed subsets, {} also extension closed", closed.len(), cec.len());

    assert_eq!(spec.len(), 3);
    assert_eq!(closed.len(), 6);
    assert_eq!(cec.len(), 5);
    Ok(())
}

#[allow(dead_code)]
fn main() -> nullspec::Result<()> {
    run_example()
}
