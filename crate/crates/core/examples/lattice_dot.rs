//! The lattice of nullity classes of `A2`, printed as a DOT Hasse diagram.
//!
//! `cargo run --example lattice_dot | dot -Tsvg > a2.svg`

use nullspec::dot::lattice_dot;
use nullspec::lattice::nullity_lattice;
use nullspec::modfd::ModuleCategory;
use nullspec::{NullityEngine, Spectrum, Universe};

pub fn run_example() -> nullspec::Result<()> {
    let cat = ModuleCategory::a_n(2, 2)?;
    let universe = Universe::generate(&cat, 4)?;
    let engine = NullityEngine::new(&universe);
    let spec = Spectrum::compute(&cat, &engine)?;
    let lattice = nullity_lattice(&spec)?;
    print!("{}", lattice_dot(&lattice));
    if let Some(p) = lattice.find_pentagon() {
        let name = |i: usize| lattice.nodes[i].label.as_str();
        eprintln!(
            "pentagon: {} < {} < {} < {}, with {} on the side",
            name(p.bottom),
            name(p.low),
            name(p.high),
            name(p.top),
            name(p.side)
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> nullspec::Result<()> {
    run_example()
}
