//! Modules over path algebras and the local algebra against brute-force oracles.

mod common;

use nullspec::classify::classify_all;
use nullspec::linalg::{enumerate_subspaces, Matrix};
use nullspec::modfd::ModuleCategory;
use nullspec::Category;
use proptest::prelude::*;
use proptest::test_runner::TestRunner;

use common::*;

/// Gabriel: linear `A_n` has `n(n+1)/2` indecomposables, one per interval.
#[test]
fn indecomposable_counts_of_a_n() {
    for p in [2, 3] {
        for n in 1..=4 {
            let cat = a_n(n, p);
            let u = universe(&cat, n);
            assert_eq!(u.indecomposables().len(), n * (n + 1) / 2, "A{n} over F_{p}");
            if p == 3 && n == 4 {
                continue;
            }
            let reports = classify_all(&cat, &u).unwrap();
            assert_eq!(reports.iter().filter(|r| r.indecomposable).count(), n * (n + 1) / 2);
        }
    }
}

#[test]
fn submodules_match_stable_subspaces() {
    let corpora = [(a_n(2, 2), 3), (a_n(3, 2), 3), (a_n(2, 3), 3), (local(2), 3)];
    for (cat, bound) in &corpora {
        let u = universe(cat, *bound);
        for id in u.ids() {
            let m = u.object(id);
            let found = m.submodules(1 << 16).unwrap();
            // oracle: every subspace that all action matrices preserve
            let stable: Vec<_> = enumerate_subspaces(m.dim(), m.modulus() as u32, 1 << 16)
                .unwrap()
                .into_iter()
                .filter(|s| {
                    m.actions()
                        .iter()
                        .all(|a| s.basis_vectors().iter().all(|v| s.contains(&a.apply(v))))
                })
                .collect();
            let mut a = found.clone();
            a.sort();
            let mut b = stable.clone();
            b.sort();
            assert_eq!(a, b, "{}", u.label(cat, id));
            assert_eq!(u.subobject_count(id), stable.len());
        }
    }
}

#[test]
fn universes_are_closed_and_lengths_add() {
    for (cat, bound) in [(a_n(3, 2), 4), (local(2), 3), (a_n(2, 3), 3)] {
        let u = universe(&cat, bound);
        for id in u.ids() {
            for e in cat.subobjects(u.object(id)).unwrap() {
                assert!(u.id_of(&cat, &e.sub).is_ok() && u.id_of(&cat, &e.quotient).is_ok());
                assert_eq!(cat.length(&e.sub) + cat.length(&e.quotient), u.length(id));
            }
            for &(s, q) in u.extensions(id) {
                assert_eq!(u.length(s) + u.length(q), u.length(id));
            }
        }
    }
}

/// First isomorphism theorem: `M / ker f ≅ im f` for every map between small modules.
#[test]
fn first_isomorphism_theorem() {
    let cat = a_n(3, 2);
    let u = universe(&cat, 3);
    for a in u.ids() {
        for b in u.ids() {
            let (m, n) = (u.object(a), u.object(b));
            for f in cat.homs(m, n).unwrap() {
                let k = cat.kernel(&f).unwrap();
                let i = cat.image(&f).unwrap();
                assert!(cat.is_isomorphic(&k.quotient, &i.sub).unwrap());
                assert_eq!(cat.length(&k.sub) + cat.length(&i.sub), cat.length(m));
                assert_eq!(cat.is_monic(&f).unwrap(), cat.length(&k.sub) == 0);
            }
        }
    }
}

#[test]
fn barcode_keys_agree_with_raw_enumeration() {
    let fast = a_n(3, 2);
    let slow = ModuleCategory::a_n(3, 2).unwrap().without_fast_path();
    let uf = universe(&fast, 3);
    let us = universe(&slow, 3);
    assert_eq!(uf.len(), us.len());
    for id in us.ids() {
        assert!(uf.id_of(&fast, us.object(id)).is_ok());
    }
}

fn rep_strategy() -> impl Strategy<Value = (Vec<usize>, Vec<Vec<u32>>)> {
    prop::collection::vec(0usize..=2, 3).prop_flat_map(|dims| {
        let sizes = [dims[0] * dims[1], dims[1] * dims[2]];
        (
            Just(dims),
            (prop::collection::vec(0u32..2, sizes[0]), prop::collection::vec(0u32..2, sizes[1]))
                .prop_map(|(a, b)| vec![a, b]),
        )
    })
}

/// Random representations of `A3` land in the universe and keep their dimension vectors.
#[test]
fn random_representations_are_classified() {
    let cat = a_n(3, 2);
    let u = universe(&cat, 6);
    let mut runner = TestRunner::new(ProptestConfig::with_cases(256));
    runner
        .run(&rep_strategy(), |(dims, entries)| {
            let arrows = vec![
                Matrix::new(dims[0], dims[1], 2, entries[0].clone()).unwrap(),
                Matrix::new(dims[1], dims[2], 2, entries[1].clone()).unwrap(),
            ];
            let m = cat.rep(&dims, &arrows).unwrap();
            let id = u.id_of(&cat, &m).unwrap();
            prop_assert_eq!(u.object(id).block_dims(), dims);
            prop_assert_eq!(cat.iso_key(u.object(id)).unwrap(), cat.iso_key(&m).unwrap());
            Ok(())
        })
        .unwrap();
}
