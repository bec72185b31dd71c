//! Finite windows on a category: every isomorphism class up to a length bound.
//!
//! A [`Universe`] is closed under subobjects and quotients, so each object's
//! short exact sequences `0 -> U -> X -> X/U -> 0` can be recorded as pairs of
//! universe ids. Everything in the closure and spectrum layers works on those ids.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;

use crate::category::Category;
use crate::error::{Error, Result};

/// Index of an object inside a [`Universe`].
pub type ObjId = usize;

pub struct Universe<C: Category> {
    bound: usize,
    objects: Vec<C::Object>,
    keys: Vec<C::Key>,
    lengths: Vec<usize>,
    index: HashMap<C::Key, ObjId>,
    indecomposable: Vec<bool>,
    /// Distinct `(sub, quotient)` id pairs over all subobjects of each object.
    extensions: Vec<Vec<(ObjId, ObjId)>>,
    /// Number of concrete subobjects of each object (with multiplicity).
    subobject_counts: Vec<usize>,
}

impl<C: Category> Universe<C> {
    /// Enumerates all isomorphism classes of length `<= bound` and indexes their subquotients.
    ///
    /// Ids are assigned in `(length, key)` order, so id 0 is always the zero object.
    pub fn generate(cat: &C, bound: usize) -> Result<Self> {
        let candidates = cat.enumerate_objects(bound)?;
        let keyed: Vec<(C::Key, C::Object)> = candidates
            .into_par_iter()
            .map(|m| cat.iso_key(&m).map(|k| (k, m)))
            .collect::<Result<_>>()?;
        let mut reps: Vec<(usize, C::Key, C::Object)> = Vec::new();
        {
            let mut seen = HashMap::new();
            for (k, m) in keyed {
                if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(k.clone()) {
                    e.insert(());
                    reps.push((cat.length(&m), k, m));
                }
            }
        }
        reps.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        if reps.first().map(|r| r.0) != Some(0) {
            return Err(Error::UniverseNotClosed("zero object missing".into()));
        }

        let lengths: Vec<usize> = reps.iter().map(|r| r.0).collect();
        let keys: Vec<C::Key> = reps.iter().map(|r| r.1.clone()).collect();
        let objects: Vec<C::Object> = reps.into_iter().map(|r| r.2).collect();
        let index: HashMap<C::Key, ObjId> = keys.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();

        let lookup = |k: &C::Key, what: &str, parent: ObjId| -> Result<ObjId> {
            index.get(k).copied().ok_or_else(|| {
                Error::UniverseNotClosed(format!(
                    "{what} {} of {} is not in the universe",
                    cat.describe(k),
                    cat.describe(&keys[parent])
                ))
            })
        };

        let indexed: Vec<(Vec<(ObjId, ObjId)>, usize)> = objects
            .par_iter()
            .enumerate()
            .map(|(id, m)| {
                let entries = cat.subobjects(m)?;
                let mut pairs = BTreeSet::new();
                for e in &entries {
                    let s = lookup(&cat.iso_key(&e.sub)?, "subobject", id)?;
                    let q = lookup(&cat.iso_key(&e.quotient)?, "quotient", id)?;
                    pairs.insert((s, q));
                }
                Ok((pairs.into_iter().collect(), entries.len()))
            })
            .collect::<Result<_>>()?;
        let (extensions, subobject_counts): (Vec<_>, Vec<_>) = indexed.into_iter().unzip();

        // Krull-Schmidt: an object is decomposable iff it is a sum of two nonzero members.
        let n = objects.len();
        let pairs: Vec<(ObjId, ObjId)> = (1..n)
            .flat_map(|i| (i..n).map(move |j| (i, j)))
            .filter(|&(i, j)| lengths[i] + lengths[j] <= bound)
            .collect();
        let sums: Vec<ObjId> = pairs
            .par_iter()
            .map(|&(i, j)| {
                let s = cat.direct_sum(&objects[i], &objects[j])?;
                lookup(&cat.iso_key(&s.object)?, "direct sum", i)
            })
            .collect::<Result<_>>()?;
        let mut indecomposable = vec![true; n];
        indecomposable[0] = false;
        for s in sums {
            indecomposable[s] = false;
        }

        Ok(Universe {
            bound,
            objects,
            keys,
            lengths,
            index,
            indecomposable,
            extensions,
            subobject_counts,
        })
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn zero(&self) -> ObjId {
        0
    }

    pub fn ids(&self) -> std::ops::Range<ObjId> {
        0..self.objects.len()
    }

    pub fn object(&self, id: ObjId) -> &C::Object {
        &self.objects[id]
    }

    pub fn objects(&self) -> &[C::Object] {
        &self.objects
    }

    pub fn key(&self, id: ObjId) -> &C::Key {
        &self.keys[id]
    }

    pub fn length(&self, id: ObjId) -> usize {
        self.lengths[id]
    }

    pub fn is_indecomposable(&self, id: ObjId) -> bool {
        self.indecomposable[id]
    }

    pub fn indecomposables(&self) -> Vec<ObjId> {
        self.ids().filter(|&i| self.indecomposable[i]).collect()
    }

    /// Distinct `(sub, quotient)` classes realized by subobjects of `id`.
    pub fn extensions(&self, id: ObjId) -> &[(ObjId, ObjId)] {
        &self.extensions[id]
    }

    pub fn subobject_count(&self, id: ObjId) -> usize {
        self.subobject_counts[id]
    }

    pub fn id_of_key(&self, key: &C::Key) -> Option<ObjId> {
        self.index.get(key).copied()
    }

    /// Universe id of the class of `m`.
    pub fn id_of(&self, cat: &C, m: &C::Object) -> Result<ObjId> {
        let k = cat.iso_key(m)?;
        self.id_of_key(&k)
            .ok_or_else(|| Error::NotInUniverse(cat.describe(&k)))
    }

    pub fn label(&self, cat: &C, id: ObjId) -> String {
        cat.describe(&self.keys[id])
    }
}
