//! Quotient, subobject and extension closures, and the nullity and Serre
//! classes they generate, on `A2`.

use nullspec::modfd::ModuleCategory;
use nullspec::{IsoSet, NullityEngine, Universe};

pub fn run_example() -> nullspec::Result<()> {
    let cat = ModuleCategory::a_n(2, 2)?;
    let universe = Universe::generate(&cat, 3)?;
    let engine = NullityEngine::new(&universe);
    let id = |name: &str| universe.id_of(&cat, &cat.named(name).expect("named module"));
    let (p1, p2, s2) = (id("P1")?, id("P2")?, id("S2")?);
    let show = |s: &IsoSet| s.iter().map(|&m| universe.label(&cat, m)).collect::<Vec<_>>().join(", ");

    println!("quotients of P2: {}", show(&engine.quot_closure(&IsoSet::from([p2]))));
    println!("subobjects of P2: {}", show(&engine.sub_closure(&IsoSet::from([p2]))));
    println!("P2 is an extension of S2 by P1: {}", engine.in_ext_closure(p2, &IsoSet::from([p1, s2])));
    println!("nullity class of P2: {}", show(&engine.nullity_trace(&IsoSet::from([p2]))));
    println!("P1 in the Serre class of P2: {}", engine.in_serre_closure(p1, &IsoSet::from([p2])));
    println!("P1 in the nullity class of P2: {}", engine.in_nullity_closure(p1, &IsoSet::from([p2])));
    Ok(())
}

#[allow(dead_code)]
fn main() -> nullspec::Result<()> {
    run_example()
}
