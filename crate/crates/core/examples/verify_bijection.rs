//! Checks the topology on Spec and the bijection between nullity classes and
//! closed, extension-closed subsets for `A3` over `F_2`.

use nullspec::modfd::ModuleCategory;
use nullspec::verify::{indecomposable_generator_sets, verify_bijection, verify_topology};
use nullspec::{NullityEngine, Spectrum, Universe};

pub fn run_example() -> nullspec::Result<()> {
    let bound = 3;
    let cat = ModuleCategory::a_n(3, 2)?;
    let universe = Universe::generate(&cat, 2 * bound)?;
    let engine = NullityEngine::new(&universe);
    let spec = Spectrum::compute(&cat, &engine)?;

    let topology = verify_topology(&cat, &spec)?;
    println!("{} closed subsets, {} topology violations", topology.closed_family.len(), topology.violations.len());

    let generators = indecomposable_generator_sets(&spec, bound, 20)?;
    let report = verify_bijection(&cat, &spec, &generators)?;
    println!("{}", report.summary());
    for v in &report.violations {
        println!("  violation: {v}");
    }
    assert!(topology.passed() && report.passed());
    Ok(())
}

#[allow(dead_code)]
fn main() -> nullspec::Result<()> {
    run_example()
}
