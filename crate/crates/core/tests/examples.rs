//! Every example under `examples/` is compiled into this test and run.

#[path = "../examples/a2_spectrum.rs"]
mod a2_spectrum;

#[test]
fn a2_spectrum_example_runs() {
    a2_spectrum::run_example().expect("a2_spectrum example should run");
}

#[path = "../examples/predicates.rs"]
mod predicates;

#[test]
fn predicates_example_runs() {
    predicates::run_example().expect("predicates example should run");
}

#[path = "../examples/abelian_groups.rs"]
mod abelian_groups;

#[test]
fn abelian_groups_example_runs() {
    abelian_groups::run_example().expect("abelian_groups example should run");
}

#[path = "../examples/local_algebra.rs"]
mod local_algebra;

#[test]
fn local_algebra_example_runs() {
    local_algebra::run_example().expect("local_algebra example should run");
}

#[path = "../examples/verify_bijection.rs"]
mod verify_bijection;

#[test]
fn verify_bijection_example_runs() {
    verify_bijection::run_example().expect("verify_bijection example should run");
}

#[path = "../examples/lattice_dot.rs"]
mod lattice_dot;

#[test]
fn lattice_dot_example_runs() {
    lattice_dot::run_example().expect("lattice_dot example should run");
}

#[path = "../examples/custom_quiver.rs"]
mod custom_quiver;

#[test]
fn custom_quiver_example_runs() {
    custom_quiver::run_example().expect("custom_quiver example should run");
}

#[path = "../examples/closures.rs"]
mod closures;

#[test]
fn closures_example_runs() {
    closures::run_example().expect("closures example should run");
}

#[path = "../examples/cli_cache.rs"]
mod cli_cache;

#[test]
fn cli_cache_example_runs() {
    cli_cache::run_example().expect("cli_cache example should run");
}
