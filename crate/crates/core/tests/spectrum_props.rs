//! Supports of objects and of generated classes.

mod common;

use nullspec::modfd::ModuleCategory;
use nullspec::{Category, IsoSet, NullityEngine, SpecSet, Spectrum, Universe};

use common::*;

fn check_supports<C: Category>(cat: &C, u: &Universe<C>, max_sum: usize) {
    let engine = NullityEngine::new(u);
    let spec = Spectrum::compute(cat, &engine).unwrap();
    for a in u.ids().skip(1) {
        // quotients shrink supports; extensions stay inside the class of their ends
        for &(s, q) in u.extensions(a) {
            assert!(spec.supp(q).is_subset(spec.supp(a)));
            assert!(spec.supp(a).is_subset(spec.supp_generated(&IsoSet::from([s, q]))));
        }
        for b in u.ids().skip(1) {
            let gens = IsoSet::from([a, b]);
            for m in u.ids() {
                assert_eq!(
                    engine.in_nullity_closure(m, &gens),
                    spec.supp(m).is_subset(spec.supp_generated(&gens)),
                    "{} against ⟨{}, {}⟩",
                    u.label(cat, m),
                    u.label(cat, a),
                    u.label(cat, b)
                );
            }
            if u.length(a) + u.length(b) <= max_sum {
                let sum = u.id_of(cat, &cat.direct_sum(u.object(a), u.object(b)).unwrap().object).unwrap();
                assert!(spec.supp(a).union(spec.supp(b)).is_subset(spec.supp(sum)));
                assert_eq!(spec.supp(sum), spec.supp_generated(&gens));
            }
        }
    }
}

#[test]
fn supports_on_a2() {
    let cat = a_n(2, 2);
    check_supports(&cat, &universe(&cat, 4), 4);
}

#[test]
fn supports_on_a3() {
    let cat = a_n(3, 2);
    check_supports(&cat, &universe(&cat, 3), 3);
}

#[test]
fn supports_on_2_groups() {
    let cat = groups();
    check_supports(&cat, &universe(&cat, 4), 4);
}

/// The support of a sum can be strictly larger than the union: `P1 ⊕ S2` reaches `P2`.
#[test]
fn support_of_a_sum_can_grow() {
    let cat = ModuleCategory::a_n(2, 2).unwrap();
    let u = universe(&cat, 4);
    let engine = NullityEngine::new(&u);
    let spec = Spectrum::compute(&cat, &engine).unwrap();
    let id = |name: &str| u.id_of(&cat, &cat.named(name).unwrap()).unwrap();
    let (p1, s2) = (id("P1"), id("S2"));
    let sum = u.id_of(&cat, &cat.direct_sum(u.object(p1), u.object(s2)).unwrap().object).unwrap();
    let union = spec.supp(p1).union(spec.supp(s2));
    assert_eq!(union.len(), 2);
    assert_eq!(spec.supp(sum), SpecSet::full(3));
    assert!(union.is_subset(spec.supp(sum)) && union != spec.supp(sum));
}

#[test]
fn supports_of_points_are_closed() {
    let cat = a_n(3, 2);
    let u = universe(&cat, 6);
    let engine = NullityEngine::new(&u);
    let spec = Spectrum::compute(&cat, &engine).unwrap();
    assert_eq!(spec.len(), 6);
    for m in u.ids() {
        assert!(spec.is_closed(spec.supp(m)));
    }
    // the closed subsets form a topology
    let closed = spec.closed_subsets();
    for &a in &closed {
        for &b in &closed {
            assert!(closed.contains(&a.union(b)) && closed.contains(&a.intersection(b)));
        }
    }
}
