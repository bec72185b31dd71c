//! Corpora and brute-force oracles shared by the integration tests. Nothing here
//! calls the engine's own closure code: extensions are rebuilt from
//! block upper-triangular actions and closed up breadth-first.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use nullspec::abgrp::GroupCategory;
use nullspec::linalg::Matrix;
use nullspec::modfd::{local_algebra_443, FdModule, ModuleCategory};
use nullspec::{Caps, Category, ObjId, Universe};

pub fn a_n(n: usize, p: u32) -> ModuleCategory {
    ModuleCategory::a_n(n, p).expect("A_n builds")
}

pub fn local(p: u32) -> ModuleCategory {
    ModuleCategory::new(local_algebra_443(p).expect("local algebra"), Caps::default()).expect("category")
}

pub fn groups() -> GroupCategory {
    GroupCategory::new(2, Caps::default()).expect("group category")
}

pub fn universe<C: Category>(cat: &C, bound: usize) -> Universe<C> {
    Universe::generate(cat, bound).expect("universe generates")
}

/// All `rows x cols` matrices over `F_p`.
pub fn matrices(rows: usize, cols: usize, p: u32) -> Vec<Matrix> {
    let n = rows * cols;
    let total = (p as usize).pow(n as u32);
    (0..total)
        .map(|mut code| {
            let mut entries = Vec::with_capacity(n);
            for _ in 0..n {
                entries.push((code % p as usize) as u32);
                code /= p as usize;
            }
            Matrix::new(rows, cols, p, entries).unwrap()
        })
        .collect()
}

fn block(m: &Matrix, r0: usize, rows: usize, c0: usize, cols: usize) -> Matrix {
    let p = m.modulus() as u32;
    let entries = (0..rows)
        .flat_map(|r| (0..cols).map(move |c| (r, c)))
        .map(|(r, c)| m.get(r0 + r, c0 + c) as u32)
        .collect();
    Matrix::new(rows, cols, p, entries).unwrap()
}

/// `[[a, d], [0, b]]`.
fn upper(a: &Matrix, d: &Matrix, b: &Matrix) -> Matrix {
    let p = a.modulus() as u32;
    let (r, c) = (a.rows() + b.rows(), a.cols() + b.cols());
    let mut e = vec![0u32; r * c];
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            e[i * c + j] = a.get(i, j) as u32;
        }
        for j in 0..d.cols() {
            e[i * c + a.cols() + j] = d.get(i, j) as u32;
        }
    }
    for i in 0..b.rows() {
        for j in 0..b.cols() {
            e[(a.rows() + i) * c + a.cols() + j] = b.get(i, j) as u32;
        }
    }
    Matrix::new(r, c, p, e).unwrap()
}

/// Vertex dimensions and arrow matrices of an adapted quiver module.
pub fn rep_of(cat: &ModuleCategory, m: &FdModule) -> (Vec<usize>, Vec<Matrix>) {
    assert!(m.is_adapted());
    let alg = cat.algebra();
    let q = alg.quiver().expect("path algebra");
    let dims = m.block_dims();
    let offsets: Vec<usize> = (0..dims.len()).map(|v| dims[..v].iter().sum()).collect();
    let arrows = q
        .arrows
        .iter()
        .enumerate()
        .map(|(i, &(s, t))| block(m.action(q.vertices + i), offsets[t], dims[t], offsets[s], dims[s]))
        .collect();
    (dims, arrows)
}

/// Ids of every `X` with `0 -> A -> X -> B -> 0`, built from representations.
pub fn quiver_middle_terms(cat: &ModuleCategory, u: &Universe<ModuleCategory>, a: ObjId, b: ObjId) -> BTreeSet<ObjId> {
    let q = cat.algebra().quiver().unwrap().clone();
    let p = cat.algebra().modulus() as u32;
    let (da, ra) = rep_of(cat, u.object(a));
    let (db, rb) = rep_of(cat, u.object(b));
    let dims: Vec<usize> = da.iter().zip(&db).map(|(x, y)| x + y).collect();
    let choices: Vec<Vec<Matrix>> = q.arrows.iter().map(|&(s, t)| matrices(da[t], db[s], p)).collect();
    let mut out = BTreeSet::new();
    let mut idx = vec![0usize; choices.len()];
    loop {
        let arrows: Vec<Matrix> = q
            .arrows
            .iter()
            .enumerate()
            .map(|(i, _)| upper(&ra[i], &choices[i][idx[i]], &rb[i]))
            .collect();
        let x = cat.rep(&dims, &arrows).expect("valid representation");
        out.insert(u.id_of(cat, &x).expect("middle term in universe"));
        let mut k = 0;
        loop {
            if k == idx.len() {
                return out;
            }
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Same for `k[x, y]/(x², xy, y²)`: the unit acts diagonally, `x` and `y` get free corners.
pub fn local_middle_terms(cat: &ModuleCategory, u: &Universe<ModuleCategory>, a: ObjId, b: ObjId) -> BTreeSet<ObjId> {
    let p = cat.algebra().modulus() as u32;
    let (ma, mb) = (u.object(a), u.object(b));
    let (na, nb) = (ma.dim(), mb.dim());
    let corners = matrices(na, nb, p);
    let zero = Matrix::new(na, nb, p, vec![0; na * nb]).unwrap();
    let mut out = BTreeSet::new();
    for dx in &corners {
        for dy in &corners {
            let action = vec![
                upper(ma.action(0), &zero, mb.action(0)),
                upper(ma.action(1), dx, mb.action(1)),
                upper(ma.action(2), dy, mb.action(2)),
            ];
            if let Ok(x) = FdModule::new(cat.algebra().clone(), na + nb, action) {
                out.insert(u.id_of(cat, &x).expect("middle term in universe"));
            }
        }
    }
    out
}

/// Middle terms for all nonzero pairs whose lengths fit in the universe.
pub fn extension_table<F>(u: &Universe<ModuleCategory>, middle: F) -> BTreeMap<(ObjId, ObjId), BTreeSet<ObjId>>
where
    F: Fn(ObjId, ObjId) -> BTreeSet<ObjId>,
{
    let mut table = BTreeMap::new();
    for a in u.ids().skip(1) {
        for b in u.ids().skip(1) {
            if u.length(a) + u.length(b) <= u.bound() {
                table.insert((a, b), middle(a, b));
            }
        }
    }
    table
}

/// `S^0 = Q ∪ {0}`, `S^{n+1}` adds every middle term of an extension between members of `S^n`.
pub fn bfs_ext_closure(table: &BTreeMap<(ObjId, ObjId), BTreeSet<ObjId>>, q: &BTreeSet<ObjId>) -> BTreeSet<ObjId> {
    let mut s: BTreeSet<ObjId> = q.clone();
    s.insert(0);
    loop {
        let mut next = s.clone();
        for (&(a, b), xs) in table {
            if s.contains(&a) && s.contains(&b) {
                next.extend(xs.iter().copied());
            }
        }
        if next == s {
            return s;
        }
        s = next;
    }
}
