//! Simple, indecomposable, uniform, premonoform and monoform objects across
//! three backends, with the two standard separating examples.

use nullspec::abgrp::GroupCategory;
use nullspec::classify::{classify_all, is_indecomposable, is_monoform, is_premonoform, is_uniform};
use nullspec::modfd::{local_algebra_443, ModuleCategory};
use nullspec::{Caps, Universe};

pub fn run_example() -> nullspec::Result<()> {
    let a3 = ModuleCategory::a_n(3, 2)?;
    let u = Universe::generate(&a3, 3)?;
    println!("A3 over F_2, length <= 3:");
    for r in classify_all(&a3, &u)? {
        if r.indecomposable {
            println!(
                "  {:<8} uniform={} premonoform={} monoform={}",
                r.object, r.uniform, r.premonoform, r.monoform
            );
        }
        assert!(r.hierarchy_violations().is_empty());
    }

    // Z/4 has a unique minimal subgroup but maps onto its own subgroup Z/2
    let groups = GroupCategory::new(2, Caps::default())?;
    let z4 = groups.group(&[2])?;
    println!(
        "Z/4: uniform={} premonoform={} monoform={}",
        is_uniform(&groups, &z4)?,
        is_premonoform(&groups, &z4)?,
        is_monoform(&groups, &z4)?
    );

    // the regular module of k[x,y]/(x^2, xy, y^2) has socle k^2
    let local = ModuleCategory::new(local_algebra_443(2)?, Caps::default())?;
    let r = local.regular();
    println!(
        "k[x,y]/(x^2,xy,y^2): indecomposable={} uniform={} premonoform={}",
        is_indecomposable(&local, &r)?,
        is_uniform(&local, &r)?,
        is_premonoform(&local, &r)?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> nullspec::Result<()> {
    run_example()
}
