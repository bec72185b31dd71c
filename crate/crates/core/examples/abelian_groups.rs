//! Finite abelian 2-groups: subgroups of `Z/4 ⊕ Z/2`, a quotient, and the
//! one-point spectrum of the category.

use nullspec::abgrp::GroupCategory;
use nullspec::lattice::nullity_lattice;
use nullspec::{Caps, Category, NullityEngine, Spectrum, Universe};

pub fn run_example() -> nullspec::Result<()> {
    let cat = GroupCategory::new(2, Caps::default())?;
    let g = cat.group(&[2, 1])?;
    let subgroups = g.subgroups();
    println!("{} has {} subgroups", cat.describe(&g.key()), subgroups.len());
    for h in &subgroups {
        let (q, _) = cat.quotient(&g, h)?;
        println!("  |H| = {:<2}  G/H = {}", h.len(), cat.describe(&q.key()));
    }

    let universe = Universe::generate(&cat, 4)?;
    let engine = NullityEngine::new(&universe);
    let spec = Spectrum::compute(&cat, &engine)?;
    let labels: Vec<&str> = spec.points().iter().map(|p| p.label.as_str()).collect();
    println!("Spec = {labels:?} (within order 16)");
    let lattice = nullity_lattice(&spec)?;
    println!("{} nullity classes, {}", lattice.len(), lattice.verdict());
    assert!(lattice.is_chain());
    Ok(())
}

#[allow(dead_code)]
fn main() -> nullspec::Result<()> {
    run_example()
}
