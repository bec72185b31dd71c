//! Closure operators and generated nullity / Serre classes over a universe.
//!
//! `⟨S⟩_ext` membership is decided by recursion on length: `B` is in the
//! extension closure of `Q` iff `B = 0`, `B ∈ Q`, or some subobject `U ≤ B`
//! with `U ∈ Q` has `B/U` in the closure.

use std::collections::{BTreeSet, HashMap};
use std::sync::Mutex;

use crate::category::Category;
use crate::error::{Error, Result};
use crate::universe::{ObjId, Universe};

/// A set of nonzero isomorphism classes, as universe ids.
pub type IsoSet = BTreeSet<ObjId>;

pub struct NullityEngine<'u, C: Category> {
    universe: &'u Universe<C>,
    sets: Mutex<HashMap<IsoSet, usize>>,
    memo: Mutex<HashMap<(ObjId, usize), bool>>,
}

impl<'u, C: Category> NullityEngine<'u, C> {
    pub fn new(universe: &'u Universe<C>) -> Self {
        NullityEngine {
            universe,
            sets: Mutex::new(HashMap::new()),
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn universe(&self) -> &'u Universe<C> {
        self.universe
    }

    fn intern(&self, q: &IsoSet) -> usize {
        let mut sets = self.sets.lock().unwrap();
        let next = sets.len();
        *sets.entry(q.clone()).or_insert(next)
    }

    /// Number of memoized ext-closure decisions.
    pub fn memo_len(&self) -> usize {
        self.memo.lock().unwrap().len()
    }

    /// Every memoized decision as `(object, generator set, member)`, sorted.
    pub fn export_memo(&self) -> Vec<(ObjId, IsoSet, bool)> {
        let sets = self.sets.lock().unwrap();
        let by_id: HashMap<usize, &IsoSet> = sets.iter().map(|(s, &i)| (i, s)).collect();
        let mut out: Vec<(ObjId, IsoSet, bool)> = self
            .memo
            .lock()
            .unwrap()
            .iter()
            .map(|(&(b, q), &v)| (b, by_id[&q].clone(), v))
            .collect();
        out.sort();
        out
    }

    /// Seeds a decision, e.g. from a persistent cache.
    pub fn seed(&self, b: ObjId, q: &IsoSet, member: bool) {
        let qi = self.intern(q);
        self.memo.lock().unwrap().insert((b, qi), member);
    }

    fn without_zero(&self, s: &IsoSet) -> IsoSet {
        s.iter().copied().filter(|&x| x != self.universe.zero()).collect()
    }

    /// `{m}`, or the empty set for the zero object.
    pub fn single(&self, m: ObjId) -> IsoSet {
        if m == self.universe.zero() {
            IsoSet::new()
        } else {
            IsoSet::from([m])
        }
    }

    /// All nonzero quotients of members of `s`.
    pub fn quot_closure(&self, s: &IsoSet) -> IsoSet {
        s.iter()
            .flat_map(|&m| self.universe.extensions(m).iter().map(|&(_, q)| q))
            .filter(|&q| q != self.universe.zero())
            .collect()
    }

    /// All nonzero subobjects of members of `s`.
    pub fn sub_closure(&self, s: &IsoSet) -> IsoSet {
        s.iter()
            .flat_map(|&m| self.universe.extensions(m).iter().map(|&(u, _)| u))
            .filter(|&u| u != self.universe.zero())
            .collect()
    }

    /// Nonzero quotients `M/N` with `N` nonzero.
    pub fn proper_quotients(&self, m: ObjId) -> IsoSet {
        let zero = self.universe.zero();
        self.universe
            .extensions(m)
            .iter()
            .filter(|&&(u, q)| u != zero && q != zero)
            .map(|&(_, q)| q)
            .collect()
    }

    pub fn in_ext_closure(&self, b: ObjId, q: &IsoSet) -> bool {
        let q = self.without_zero(q);
        let qi = self.intern(&q);
        self.ext(b, &q, qi)
    }

    fn ext(&self, b: ObjId, q: &IsoSet, qi: usize) -> bool {
        if b == self.universe.zero() || q.contains(&b) {
            return true;
        }
        if let Some(&hit) = self.memo.lock().unwrap().get(&(b, qi)) {
            return hit;
        }
        let zero = self.universe.zero();
        let member = self
            .universe
            .extensions(b)
            .iter()
            .any(|&(u, rest)| u != zero && rest != zero && q.contains(&u) && self.ext(rest, q, qi));
        self.memo.lock().unwrap().insert((b, qi), member);
        member
    }

    pub fn in_nullity_closure(&self, b: ObjId, s: &IsoSet) -> bool {
        self.in_ext_closure(b, &self.quot_closure(s))
    }

    pub fn in_serre_closure(&self, b: ObjId, s: &IsoSet) -> bool {
        self.in_ext_closure(b, &self.quot_closure(&self.sub_closure(s)))
    }

    /// `A ~ B`: each lies in the nullity class generated by the other.
    pub fn nullity_equivalent(&self, a: ObjId, b: ObjId) -> Result<bool> {
        if a == self.universe.zero() || b == self.universe.zero() {
            return Err(Error::ZeroObject);
        }
        Ok(self.in_nullity_closure(a, &IsoSet::from([b])) && self.in_nullity_closure(b, &IsoSet::from([a])))
    }

    /// Universe members of the nullity class generated by `s` (always contains 0).
    pub fn nullity_trace(&self, s: &IsoSet) -> IsoSet {
        let q = self.quot_closure(s);
        self.universe.ids().filter(|&b| self.in_ext_closure(b, &q)).collect()
    }

    /// `M ∉ ⟨proper quotients of M⟩_ext`, the quotient-based test for premonoform objects.
    pub fn premonoform_by_quotients(&self, m: ObjId) -> Result<bool> {
        if m == self.universe.zero() {
            return Err(Error::ZeroObject);
        }
        Ok(!self.in_ext_closure(m, &self.proper_quotients(m)))
    }

    /// Looks up an object in the universe.
    pub fn id_of(&self, cat: &C, m: &C::Object) -> Result<ObjId> {
        self.universe.id_of(cat, m)
    }
}
