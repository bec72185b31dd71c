//! Finite abelian p-groups by explicit elements.
//!
//! A group of type `[k_1, ..., k_r]` (sorted descending) is `⊕ Z/p^{k_i}`.
//! Elements are mixed-radix integers: coordinate `i` has weight `Π_{j<i} p^{k_j}`.
//! Morphisms are the images of the canonical generators.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::category::{Biproduct, Caps, Category, SubobjectEntry};
use crate::error::{Error, Result};
use crate::linalg::{check_prime, pow_u128};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupKey {
    pub length: usize,
    pub exps: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbGroup {
    p: u8,
    exps: Vec<u32>,
    radices: Vec<usize>,
    order: usize,
}

impl AbGroup {
    /// `⊕ Z/p^{k}` over the given exponents (any order; zeros dropped).
    pub fn new(p: u32, exps: &[u32], cap: u64) -> Result<Self> {
        let p = check_prime(p)?;
        let mut exps: Vec<u32> = exps.iter().copied().filter(|&k| k > 0).collect();
        exps.sort_unstable_by(|a, b| b.cmp(a));
        let total: u32 = exps.iter().sum();
        let order = pow_u128(p as u64, total as u64);
        Error::check_cap(|| format!("group of type {exps:?} over p = {p}"), order, cap)?;
        Ok(Self::trusted(p, exps))
    }

    fn trusted(p: u8, exps: Vec<u32>) -> Self {
        let radices: Vec<usize> = exps.iter().map(|&k| (p as usize).pow(k)).collect();
        let order = radices.iter().product();
        AbGroup { p, exps, radices, order }
    }

    pub fn cyclic(p: u32, k: u32) -> Result<Self> {
        AbGroup::new(p, &[k], Caps::default().group_order)
    }

    pub fn modulus(&self) -> u8 {
        self.p
    }

    /// Exponents, sorted descending.
    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn length(&self) -> usize {
        self.exps.iter().sum::<u32>() as usize
    }

    pub fn key(&self) -> GroupKey {
        GroupKey {
            length: self.length(),
            exps: self.exps.clone(),
        }
    }

    pub fn rank(&self) -> usize {
        self.exps.len()
    }

    pub fn coords(&self, mut x: usize) -> Vec<usize> {
        self.radices
            .iter()
            .map(|&r| {
                let c = x % r;
                x /= r;
                c
            })
            .collect()
    }

    pub fn element(&self, coords: &[usize]) -> usize {
        let mut x = 0;
        let mut w = 1;
        for (&c, &r) in coords.iter().zip(&self.radices) {
            x += (c % r) * w;
            w *= r;
        }
        x
    }

    /// The `i`-th canonical generator.
    pub fn generator(&self, i: usize) -> usize {
        self.radices[..i].iter().product()
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let mut x = 0;
        let mut w = 1;
        let (mut a, mut b) = (a, b);
        for &r in &self.radices {
            x += ((a % r + b % r) % r) * w;
            a /= r;
            b /= r;
            w *= r;
        }
        x
    }

    pub fn scale(&self, a: usize, n: usize) -> usize {
        let mut x = 0;
        let mut w = 1;
        let mut a = a;
        for &r in &self.radices {
            x += ((a % r) * (n % r) % r) * w;
            a /= r;
            w *= r;
        }
        x
    }

    pub fn neg(&self, a: usize) -> usize {
        let mut x = 0;
        let mut w = 1;
        let mut a = a;
        for &r in &self.radices {
            x += ((r - a % r) % r) * w;
            a /= r;
            w *= r;
        }
        x
    }

    /// Order of an element.
    pub fn element_order(&self, a: usize) -> usize {
        let p = self.p as usize;
        let mut n = 1;
        while self.scale(a, n) != 0 {
            n *= p;
        }
        n
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// Subgroup generated by a set of elements, as a sorted element list.
    pub fn span(&self, gens: &[usize]) -> Vec<usize> {
        gens.iter().fold(vec![0], |u, &g| self.join(&u, g))
    }

    /// Every subgroup, as sorted element lists, ordered by size and then elements.
    pub fn subgroups(&self) -> Vec<Vec<usize>> {
        let zero = vec![0usize];
        let mut seen: HashSet<Vec<usize>> = HashSet::from([zero.clone()]);
        let mut queue = VecDeque::from([zero]);
        while let Some(u) = queue.pop_front() {
            let members: HashSet<usize> = u.iter().copied().collect();
            for x in self.elements() {
                if members.contains(&x) {
                    continue;
                }
                let w = self.join(&u, x);
                if seen.insert(w.clone()) {
                    queue.push_back(w);
                }
            }
        }
        let mut out: Vec<Vec<usize>> = seen.into_iter().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// `U + <x>` for a subgroup `U`.
    fn join(&self, u: &[usize], x: usize) -> Vec<usize> {
        let mut set: BTreeSet<usize> = u.iter().copied().collect();
        let mut m = x;
        while m != 0 && !u.contains(&m) {
            for &v in u {
                set.insert(self.add(v, m));
            }
            m = self.add(m, x);
        }
        set.into_iter().collect()
    }

    fn is_subgroup(&self, u: &[usize]) -> bool {
        let set: HashSet<usize> = u.iter().copied().collect();
        set.contains(&0) && u.iter().all(|&a| u.iter().all(|&b| set.contains(&self.add(a, b))))
    }
}

/// A homomorphism given by the images of the source's canonical generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    pub source: AbGroup,
    pub target: AbGroup,
    pub images: Vec<usize>,
}

impl GroupHom {
    pub fn apply(&self, x: usize) -> usize {
        self.source
            .coords(x)
            .iter()
            .zip(&self.images)
            .fold(0, |acc, (&c, &img)| self.target.add(acc, self.target.scale(img, c)))
    }
}

/// A finite abelian p-group presented as a set of representatives with an addition.
struct View<'a> {
    elements: &'a [usize],
    add: &'a dyn Fn(usize, usize) -> usize,
    scale: &'a dyn Fn(usize, usize) -> usize,
}

impl View<'_> {
    fn order_of(&self, x: usize, p: usize) -> usize {
        let mut n = 1;
        while (self.scale)(x, n) != 0 {
            n *= p;
        }
        n
    }

    /// Type of the group from `N_j = |{x : p^j x = 0}|`.
    fn group_type(&self, p: usize) -> Vec<u32> {
        let mut counts = vec![1usize];
        let mut j = 0;
        loop {
            j += 1;
            let pj = p.pow(j);
            let n = self.elements.iter().filter(|&&x| (self.scale)(x, pj) == 0).count();
            counts.push(n);
            if n == self.elements.len() {
                break;
            }
        }
        // r_j = #{i : k_i >= j} = log_p(N_j / N_{j-1})
        let r: Vec<u32> = counts
            .windows(2)
            .map(|w| (w[1] / w[0]).ilog(p))
            .collect();
        let mut exps = Vec::new();
        for (j, &rj) in r.iter().enumerate() {
            let next = r.get(j + 1).copied().unwrap_or(0);
            for _ in 0..(rj - next) {
                exps.push(j as u32 + 1);
            }
        }
        exps.sort_unstable_by(|a, b| b.cmp(a));
        exps
    }

    /// Elements `b_i` of order `p^{k_i}` with `<b_1, ..., b_r>` the internal direct sum.
    fn basis(&self, p: usize, exps: &[u32]) -> Vec<usize> {
        fn go(view: &View<'_>, p: usize, exps: &[u32], span: &[usize], chosen: &mut Vec<usize>) -> bool {
            let i = chosen.len();
            if i == exps.len() {
                return true;
            }
            let ord = p.pow(exps[i]);
            let in_span: HashSet<usize> = span.iter().copied().collect();
            for &x in view.elements {
                if view.order_of(x, p) != ord {
                    continue;
                }
                // <x> ∩ span = 0
                if (1..ord).any(|c| in_span.contains(&(view.scale)(x, c))) {
                    continue;
                }
                let mut next = Vec::with_capacity(span.len() * ord);
                for c in 0..ord {
                    let cx = (view.scale)(x, c);
                    for &s in span {
                        next.push((view.add)(s, cx));
                    }
                }
                chosen.push(x);
                if go(view, p, exps, &next, chosen) {
                    return true;
                }
                chosen.pop();
            }
            false
        }
        let mut chosen = Vec::new();
        let found = go(self, p, exps, &[0], &mut chosen);
        assert!(found, "every finite abelian p-group has a basis of its type");
        chosen
    }
}

/// The category of finite abelian p-groups for one prime.
pub struct GroupCategory {
    p: u8,
    caps: Caps,
}

impl GroupCategory {
    pub fn new(p: u32, caps: Caps) -> Result<Self> {
        Ok(GroupCategory {
            p: check_prime(p)?,
            caps,
        })
    }

    pub fn modulus(&self) -> u8 {
        self.p
    }

    pub fn group(&self, exps: &[u32]) -> Result<AbGroup> {
        AbGroup::new(self.p as u32, exps, self.caps.group_order)
    }

    /// Builds a homomorphism, checking the order constraints `p^{k_i} · image_i = 0`.
    pub fn hom(&self, source: &AbGroup, target: &AbGroup, images: Vec<usize>) -> Result<GroupHom> {
        if images.len() != source.rank() || images.iter().any(|&x| x >= target.order()) {
            return Err(Error::ShapeMismatch("one image per generator, inside the target".into()));
        }
        for (i, &img) in images.iter().enumerate() {
            if target.scale(img, source.radices[i]) != 0 {
                return Err(Error::InvalidGroup(format!(
                    "generator {} has order {} but its image does not",
                    i + 1,
                    source.radices[i]
                )));
            }
        }
        Ok(GroupHom {
            source: source.clone(),
            target: target.clone(),
            images,
        })
    }

    /// Multiplication by `n` on `g`.
    pub fn multiplication(&self, g: &AbGroup, n: usize) -> GroupHom {
        GroupHom {
            source: g.clone(),
            target: g.clone(),
            images: (0..g.rank()).map(|i| g.scale(g.generator(i), n)).collect(),
        }
    }

    /// Quotient `g / u` for a subgroup `u` (sorted element list).
    pub fn quotient(&self, g: &AbGroup, u: &[usize]) -> Result<(AbGroup, GroupHom)> {
        if !g.is_subgroup(u) {
            return Err(Error::InvalidGroup("not a subgroup".into()));
        }
        let e = self.split(g, u.to_vec());
        Ok((e.quotient, e.proj))
    }

    fn split(&self, g: &AbGroup, u: Vec<usize>) -> SubobjectEntry<Self> {
        let p = g.p as usize;
        let add = |a: usize, b: usize| g.add(a, b);
        let scale = |a: usize, n: usize| g.scale(a, n);
        let sub_view = View {
            elements: &u,
            add: &add,
            scale: &scale,
        };
        let sub_exps = sub_view.group_type(p);
        let sub_basis = sub_view.basis(p, &sub_exps);
        let sub = AbGroup::trusted(g.p, sub_exps);
        let embed = GroupHom {
            source: sub.clone(),
            target: g.clone(),
            images: sub_basis,
        };

        // cosets, each represented by its least element
        let mut rep = vec![usize::MAX; g.order()];
        for x in g.elements() {
            if rep[x] == usize::MAX {
                for &h in &u {
                    rep[g.add(x, h)] = x;
                }
            }
        }
        let reps: Vec<usize> = g.elements().filter(|&x| rep[x] == x).collect();
        let qadd = |a: usize, b: usize| rep[g.add(a, b)];
        let qscale = |a: usize, n: usize| rep[g.scale(a, n)];
        let q_view = View {
            elements: &reps,
            add: &qadd,
            scale: &qscale,
        };
        let q_exps = q_view.group_type(p);
        let q_basis = q_view.basis(p, &q_exps);
        let quotient = AbGroup::trusted(g.p, q_exps);
        let mut to_canonical = vec![usize::MAX; g.order()];
        for y in quotient.elements() {
            let x = quotient
                .coords(y)
                .iter()
                .zip(&q_basis)
                .fold(0, |acc, (&c, &b)| qadd(acc, qscale(b, c)));
            to_canonical[x] = y;
        }
        let proj = GroupHom {
            source: g.clone(),
            target: quotient.clone(),
            images: (0..g.rank()).map(|i| to_canonical[rep[g.generator(i)]]).collect(),
        };
        SubobjectEntry {
            carrier: u,
            embed,
            sub,
            quotient,
            proj,
        }
    }

    /// Elements of `target` killed by `p^k`.
    fn torsion(&self, target: &AbGroup, radix: usize) -> Vec<usize> {
        target.elements().filter(|&x| target.scale(x, radix) == 0).collect()
    }

    fn log_order(&self, n: usize) -> usize {
        (n as u64).ilog(self.p as u64) as usize
    }
}

/// All partitions with parts sorted descending and total `<= bound`.
pub fn partitions_up_to(bound: usize) -> Vec<Vec<u32>> {
    fn go(left: usize, max: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        out.push(cur.clone());
        for k in (1..=max.min(left)).rev() {
            cur.push(k as u32);
            go(left - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(bound, bound, &mut Vec::new(), &mut out);
    out
}

impl Category for GroupCategory {
    type Object = AbGroup;
    type Morphism = GroupHom;
    type Carrier = Vec<usize>;
    type Key = GroupKey;

    fn fingerprint(&self) -> String {
        format!("abgrp:p{}", self.p)
    }

    fn caps(&self) -> &Caps {
        &self.caps
    }

    fn zero_object(&self) -> AbGroup {
        AbGroup::trusted(self.p, Vec::new())
    }

    fn length(&self, m: &AbGroup) -> usize {
        m.length()
    }

    fn iso_key(&self, m: &AbGroup) -> Result<GroupKey> {
        Ok(m.key())
    }

    fn describe(&self, key: &GroupKey) -> String {
        if key.exps.is_empty() {
            return "0".into();
        }
        let p = self.p as u64;
        let mut parts: Vec<(u32, usize)> = Vec::new();
        for &k in &key.exps {
            match parts.last_mut() {
                Some((e, n)) if *e == k => *n += 1,
                _ => parts.push((k, 1)),
            }
        }
        parts
            .iter()
            .map(|&(k, n)| {
                let base = format!("Z/{}", p.pow(k));
                if n > 1 {
                    format!("({base})^{n}")
                } else {
                    base
                }
            })
            .collect::<Vec<_>>()
            .join("⊕")
    }

    fn payload(&self, m: &AbGroup) -> serde_json::Value {
        serde_json::json!({ "p": m.p, "type": m.exps })
    }

    fn source<'a>(&self, f: &'a GroupHom) -> &'a AbGroup {
        &f.source
    }

    fn target<'a>(&self, f: &'a GroupHom) -> &'a AbGroup {
        &f.target
    }

    fn identity(&self, m: &AbGroup) -> GroupHom {
        GroupHom {
            source: m.clone(),
            target: m.clone(),
            images: (0..m.rank()).map(|i| m.generator(i)).collect(),
        }
    }

    fn zero_morphism(&self, from: &AbGroup, to: &AbGroup) -> GroupHom {
        GroupHom {
            source: from.clone(),
            target: to.clone(),
            images: vec![0; from.rank()],
        }
    }

    fn compose(&self, g: &GroupHom, f: &GroupHom) -> Result<GroupHom> {
        if f.target != g.source {
            return Err(Error::ShapeMismatch("morphisms are not composable".into()));
        }
        Ok(GroupHom {
            source: f.source.clone(),
            target: g.target.clone(),
            images: f.images.iter().map(|&x| g.apply(x)).collect(),
        })
    }

    fn same_morphism(&self, f: &GroupHom, g: &GroupHom) -> bool {
        f.images == g.images
    }

    fn is_zero_morphism(&self, f: &GroupHom) -> bool {
        f.images.iter().all(|&x| x == 0)
    }

    fn is_monic(&self, f: &GroupHom) -> Result<bool> {
        Ok(f.source.elements().skip(1).all(|x| f.apply(x) != 0))
    }

    fn hom_count(&self, from: &AbGroup, to: &AbGroup) -> Result<u128> {
        Ok(from
            .radices
            .iter()
            .map(|&r| self.torsion(to, r).len() as u128)
            .product())
    }

    fn try_for_each_hom<F>(&self, from: &AbGroup, to: &AbGroup, mut visit: F) -> Result<ControlFlow<()>>
    where
        F: FnMut(&GroupHom) -> ControlFlow<()>,
    {
        let size = self.hom_count(from, to)?;
        Error::check_cap(
            || format!("Hom({}, {})", self.describe(&from.key()), self.describe(&to.key())),
            size,
            self.caps.hom,
        )?;
        let choices: Vec<Vec<usize>> = from.radices.iter().map(|&r| self.torsion(to, r)).collect();
        let mut idx = vec![0usize; choices.len()];
        let mut f = self.zero_morphism(from, to);
        loop {
            for (slot, (c, &i)) in f.images.iter_mut().zip(choices.iter().zip(&idx)) {
                *slot = c[i];
            }
            if visit(&f).is_break() {
                return Ok(ControlFlow::Break(()));
            }
            let mut i = 0;
            loop {
                if i == idx.len() {
                    return Ok(ControlFlow::Continue(()));
                }
                idx[i] += 1;
                if idx[i] < choices[i].len() {
                    break;
                }
                idx[i] = 0;
                i += 1;
            }
        }
    }

    fn kernel(&self, f: &GroupHom) -> Result<SubobjectEntry<Self>> {
        let u: Vec<usize> = f.source.elements().filter(|&x| f.apply(x) == 0).collect();
        Ok(self.split(&f.source, u))
    }

    fn image(&self, f: &GroupHom) -> Result<SubobjectEntry<Self>> {
        let set: BTreeSet<usize> = f.source.elements().map(|x| f.apply(x)).collect();
        Ok(self.split(&f.target, set.into_iter().collect()))
    }

    fn subobjects(&self, m: &AbGroup) -> Result<Vec<SubobjectEntry<Self>>> {
        Error::check_cap(
            || format!("subgroups of {}", self.describe(&m.key())),
            m.order() as u128,
            self.caps.group_order,
        )?;
        Ok(m.subgroups().into_iter().map(|u| self.split(m, u)).collect())
    }

    fn carrier_length(&self, c: &Vec<usize>) -> usize {
        self.log_order(c.len())
    }

    fn intersection_length(&self, a: &Vec<usize>, b: &Vec<usize>) -> usize {
        let set: HashSet<usize> = a.iter().copied().collect();
        self.log_order(b.iter().filter(|x| set.contains(x)).count())
    }

    fn direct_sum(&self, a: &AbGroup, b: &AbGroup) -> Result<Biproduct<Self>> {
        if a.p != b.p {
            return Err(Error::BackendMismatch("groups for different primes".into()));
        }
        let mut exps = a.exps.clone();
        exps.extend_from_slice(&b.exps);
        let object = AbGroup::new(a.p as u32, &exps, self.caps.group_order)?;
        // stable assignment of each factor of a, then b, to a slot of the sorted type
        let mut taken = vec![false; object.rank()];
        let mut slot_of = |k: u32| {
            let s = (0..object.rank())
                .find(|&s| !taken[s] && object.exps[s] == k)
                .expect("factor present");
            taken[s] = true;
            s
        };
        let a_slots: Vec<usize> = a.exps.iter().map(|&k| slot_of(k)).collect();
        let b_slots: Vec<usize> = b.exps.iter().map(|&k| slot_of(k)).collect();
        let inj = |src: &AbGroup, slots: &[usize]| GroupHom {
            source: src.clone(),
            target: object.clone(),
            images: slots.iter().map(|&s| object.generator(s)).collect(),
        };
        let proj = |dst: &AbGroup, slots: &[usize]| GroupHom {
            source: object.clone(),
            target: dst.clone(),
            images: (0..object.rank())
                .map(|s| slots.iter().position(|&x| x == s).map_or(0, |i| dst.generator(i)))
                .collect(),
        };
        Ok(Biproduct {
            inj: [inj(a, &a_slots), inj(b, &b_slots)],
            proj: [proj(a, &a_slots), proj(b, &b_slots)],
            object,
        })
    }

    fn enumerate_objects(&self, bound: usize) -> Result<Vec<AbGroup>> {
        Error::check_cap(
            || format!("groups of order p^{bound} for p = {}", self.p),
            pow_u128(self.p as u64, bound as u64),
            self.caps.group_order,
        )?;
        Ok(partitions_up_to(bound)
            .into_iter()
            .map(|exps| AbGroup::trusted(self.p, exps))
            .collect())
    }
}
