//! Spectrum of premonoform classes, supports, and closed / extension-closed subsets.
//!
//! Everything is restricted to one finite universe: points are classes of
//! premonoform universe members, and supports are computed against the
//! generated nullity classes of universe members.

pub mod dot;
pub mod lattice;
pub mod verify;

use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::category::Category;
use crate::classify::is_premonoform;
use crate::error::{Error, Result};
use crate::nullity::{IsoSet, NullityEngine};
use crate::universe::{ObjId, Universe};

/// A subset of the spectrum, as a bitmask over point ids.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpecSet(pub u64);

impl SpecSet {
    pub const EMPTY: SpecSet = SpecSet(0);

    pub fn full(n: usize) -> Self {
        SpecSet(if n == 64 { u64::MAX } else { (1u64 << n) - 1 })
    }

    pub fn singleton(i: usize) -> Self {
        SpecSet(1 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn is_subset(self, other: SpecSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: SpecSet) -> SpecSet {
        SpecSet(self.0 | other.0)
    }

    pub fn intersection(self, other: SpecSet) -> SpecSet {
        SpecSet(self.0 & other.0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.contains(i))
    }
}

impl fmt::Debug for SpecSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for SpecSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SpecPoint {
    pub id: usize,
    pub label: String,
    /// Universe ids of the premonoform members of the class, ascending; the first is canonical.
    pub representatives: Vec<ObjId>,
}

impl SpecPoint {
    pub fn canonical(&self) -> ObjId {
        self.representatives[0]
    }
}

/// A nullity class seen through the universe: its members and its support.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassTrace {
    pub trace: IsoSet,
    pub support: SpecSet,
    pub quotient_stable: bool,
    pub extension_stable: bool,
}

impl ClassTrace {
    pub fn is_nullity_class(&self) -> bool {
        self.quotient_stable && self.extension_stable
    }
}

pub struct Spectrum<'e, 'u, C: Category> {
    engine: &'e NullityEngine<'u, C>,
    points: Vec<SpecPoint>,
    supports: Vec<SpecSet>,
}

impl<'e, 'u, C: Category> Spectrum<'e, 'u, C> {
    /// Groups premonoform universe members into classes and computes every support.
    ///
    /// Premonoform objects are indecomposable, so only indecomposable members are tested.
    pub fn compute(cat: &C, engine: &'e NullityEngine<'u, C>) -> Result<Self> {
        let u = engine.universe();
        let candidates = u.indecomposables();
        let flags: Vec<bool> = candidates
            .par_iter()
            .map(|&id| is_premonoform(cat, u.object(id)))
            .collect::<Result<_>>()?;
        let premonoform: Vec<ObjId> = candidates
            .iter()
            .zip(flags)
            .filter(|(_, f)| *f)
            .map(|(&id, _)| id)
            .collect();
        let mut classes: Vec<Vec<ObjId>> = Vec::new();
        for &m in &premonoform {
            let mut placed = false;
            for class in classes.iter_mut() {
                if engine.nullity_equivalent(class[0], m)? {
                    class.push(m);
                    placed = true;
                    break;
                }
            }
            if !placed {
                classes.push(vec![m]);
            }
        }
        let cap = cat.caps().spectrum_points.min(64);
        if classes.len() > cap {
            return Err(Error::cap("spectrum points", classes.len() as u128, cap as u64));
        }
        let points: Vec<SpecPoint> = classes
            .into_iter()
            .enumerate()
            .map(|(id, representatives)| SpecPoint {
                id,
                label: u.label(cat, representatives[0]),
                representatives,
            })
            .collect();

        let supports: Vec<SpecSet> = u
            .ids()
            .collect::<Vec<_>>()
            .par_iter()
            .map(|&m| support_of(cat, engine, &points, &engine.single(m)))
            .collect::<Result<_>>()?;
        Ok(Spectrum {
            engine,
            points,
            supports,
        })
    }

    pub fn engine(&self) -> &'e NullityEngine<'u, C> {
        self.engine
    }

    pub fn universe(&self) -> &'u Universe<C> {
        self.engine.universe()
    }

    pub fn points(&self) -> &[SpecPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn full(&self) -> SpecSet {
        SpecSet::full(self.points.len())
    }

    pub fn point_of(&self, m: ObjId) -> Option<usize> {
        self.points.iter().position(|pt| pt.representatives.contains(&m))
    }

    pub fn supp(&self, m: ObjId) -> SpecSet {
        self.supports[m]
    }

    /// Points inside the nullity class generated by `s`.
    pub fn supp_generated(&self, s: &IsoSet) -> SpecSet {
        let q = self.engine.quot_closure(s);
        let mut out = SpecSet::EMPTY;
        for pt in &self.points {
            if self.engine.in_ext_closure(pt.canonical(), &q) {
                out.insert(pt.id);
            }
        }
        out
    }

    /// Union of the supports of the given members.
    pub fn supp_of_set(&self, members: &IsoSet) -> SpecSet {
        members.iter().fold(SpecSet::EMPTY, |acc, &m| acc.union(self.supp(m)))
    }

    pub fn is_closed(&self, phi: SpecSet) -> bool {
        phi.iter().all(|i| self.supp(self.points[i].canonical()).is_subset(phi))
    }

    /// A short exact sequence `0 -> U -> X -> X/U -> 0` in the universe with outer supports in `phi` and `Supp X` not.
    pub fn extension_witness(&self, phi: SpecSet) -> Option<(ObjId, ObjId, ObjId)> {
        let u = self.universe();
        u.ids().find_map(|x| {
            if self.supp(x).is_subset(phi) {
                return None;
            }
            u.extensions(x)
                .iter()
                .find(|&&(s, q)| self.supp(s).is_subset(phi) && self.supp(q).is_subset(phi))
                .map(|&(s, q)| (x, s, q))
        })
    }

    pub fn is_extension_closed(&self, phi: SpecSet) -> bool {
        self.extension_witness(phi).is_none()
    }

    fn all_subsets(&self) -> impl Iterator<Item = SpecSet> {
        (0..1u64 << self.points.len()).map(SpecSet)
    }

    /// All closed subsets, ordered by size and then bitmask.
    pub fn closed_subsets(&self) -> Vec<SpecSet> {
        let mut out: Vec<SpecSet> = self.all_subsets().filter(|&phi| self.is_closed(phi)).collect();
        out.sort_by_key(|s| (s.len(), s.0));
        out
    }

    pub fn closed_ext_closed_subsets(&self) -> Vec<SpecSet> {
        self.closed_subsets()
            .into_iter()
            .filter(|&phi| self.is_extension_closed(phi))
            .collect()
    }

    /// `{M : Supp M ⊆ Φ}` over the universe, with stability flags.
    pub fn supp_inverse(&self, phi: SpecSet) -> ClassTrace {
        let trace: IsoSet = self.universe().ids().filter(|&m| self.supp(m).is_subset(phi)).collect();
        self.class_trace(trace)
    }

    /// Trace of the nullity class generated by `s`.
    pub fn generated(&self, s: &IsoSet) -> ClassTrace {
        self.class_trace(self.engine.nullity_trace(s))
    }

    fn class_trace(&self, trace: IsoSet) -> ClassTrace {
        let u = self.universe();
        let quotient_stable = trace
            .iter()
            .all(|&x| u.extensions(x).iter().all(|(_, q)| trace.contains(q)));
        let extension_stable = u.ids().all(|x| {
            trace.contains(&x)
                || !u
                    .extensions(x)
                    .iter()
                    .any(|(s, q)| trace.contains(s) && trace.contains(q))
        });
        ClassTrace {
            support: self.supp_of_set(&trace),
            trace,
            quotient_stable,
            extension_stable,
        }
    }

    /// Point labels of a subset, e.g. `{P2, S2}`.
    pub fn describe_set(&self, phi: SpecSet) -> String {
        let names: Vec<&str> = phi.iter().map(|i| self.points[i].label.as_str()).collect();
        format!("{{{}}}", names.join(", "))
    }
}

/// Points whose class lies in the nullity class generated by `s`; fails if representatives disagree.
fn support_of<C: Category>(cat: &C, engine: &NullityEngine<'_, C>, points: &[SpecPoint], s: &IsoSet) -> Result<SpecSet> {
    let q = engine.quot_closure(s);
    let mut out = SpecSet::EMPTY;
    for pt in points {
        let first = engine.in_ext_closure(pt.canonical(), &q);
        if let Some(&other) = pt
            .representatives
            .iter()
            .find(|&&r| engine.in_ext_closure(r, &q) != first)
        {
            let u = engine.universe();
            return Err(Error::IllDefinedSupport(format!(
                "{} and {} are equivalent but only one lies in the class generated by {:?}",
                u.label(cat, pt.canonical()),
                u.label(cat, other),
                s.iter().map(|&m| u.label(cat, m)).collect::<Vec<_>>()
            )));
        }
        if first {
            out.insert(pt.id);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modfd::ModuleCategory;

    #[test]
    fn specset_ops() {
        let a = SpecSet(0b101);
        assert!(a.contains(0) && !a.contains(1));
        assert_eq!(a.len(), 2);
        assert!(SpecSet(0b100).is_subset(a));
        assert_eq!(SpecSet::full(3), SpecSet(7));
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(serde_json::to_string(&a).unwrap(), "[0,2]");
    }

    #[test]
    fn a2_spectrum() {
        let cat = ModuleCategory::a_n(2, 2).unwrap();
        let u = Universe::generate(&cat, 4).unwrap();
        let engine = NullityEngine::new(&u);
        let spec = Spectrum::compute(&cat, &engine).unwrap();
        let labels: Vec<&str> = spec.points().iter().map(|p| p.label.as_str()).collect();
        assert_eq!(labels, vec!["P1", "S2", "P2"]);
        let id = |n: &str| u.id_of(&cat, &cat.named(n).unwrap()).unwrap();
        let pt = |n: &str| spec.point_of(id(n)).unwrap();
        let (a, b, c) = (pt("P1"), pt("P2"), pt("S2"));
        assert_eq!(spec.supp(id("P1")), SpecSet::singleton(a));
        assert_eq!(spec.supp(id("S2")), SpecSet::singleton(c));
        assert_eq!(spec.supp(id("P2")), SpecSet::singleton(b).union(SpecSet::singleton(c)));
        assert_eq!(spec.supp(0), SpecSet::EMPTY);
        let ac = SpecSet::singleton(a).union(SpecSet::singleton(c));
        assert!(spec.is_closed(ac));
        assert!(!spec.is_extension_closed(ac));
        assert!(!spec.is_closed(SpecSet::singleton(b)));
        assert_eq!(spec.closed_subsets().len(), 6);
        assert_eq!(spec.closed_ext_closed_subsets().len(), 5);
        let inv = spec.supp_inverse(ac);
        assert!(!inv.is_nullity_class());
        assert_eq!(spec.supp_inverse(SpecSet::EMPTY).trace, IsoSet::from([0]));
    }
}
