//! The contract every category backend implements.
//!
//! All higher layers (predicates, closures, spectrum) are written against
//! [`Category`] only. Objects are concrete (matrices, residue tuples) and
//! every operation is exact; enumeration-heavy operations are guarded by
//! [`Caps`].

use std::fmt;
use std::hash::Hash;
use std::ops::ControlFlow;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::Result;

/// Enumeration caps. Exceeding any of them is an error, never a truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Bound on `p^d` when enumerating vectors or subspaces of a `d`-dimensional space.
    pub subspace: u64,
    /// Bound on the size of an enumerated hom set.
    pub hom: u64,
    /// Bound on the order of a finite abelian group.
    pub group_order: u64,
    /// Bound on the size of a basis-change group scanned for canonical forms.
    pub orbit: u64,
    /// Bound on candidate objects visited while generating a universe.
    pub universe: u64,
    /// Bound on the number of spectrum points (subsets are enumerated exhaustively).
    pub spectrum_points: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            subspace: 1 << 16,
            hom: 1 << 16,
            group_order: 256,
            orbit: 1 << 16,
            universe: 1 << 22,
            spectrum_points: 20,
        }
    }
}

/// A concrete subobject `sub >-> parent ->> quotient`.
pub struct SubobjectEntry<C: Category + ?Sized> {
    /// The subobject as a concrete piece of the parent (a subspace, a set of elements).
    pub carrier: C::Carrier,
    pub embed: C::Morphism,
    pub sub: C::Object,
    pub quotient: C::Object,
    pub proj: C::Morphism,
}

impl<C: Category + ?Sized> Clone for SubobjectEntry<C> {
    fn clone(&self) -> Self {
        SubobjectEntry {
            carrier: self.carrier.clone(),
            embed: self.embed.clone(),
            sub: self.sub.clone(),
            quotient: self.quotient.clone(),
            proj: self.proj.clone(),
        }
    }
}

impl<C: Category + ?Sized> fmt::Debug for SubobjectEntry<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SubobjectEntry")
            .field("carrier", &self.carrier)
            .field("sub", &self.sub)
            .field("quotient", &self.quotient)
            .finish()
    }
}

/// `a ⊕ b` with its structure maps.
pub struct Biproduct<C: Category + ?Sized> {
    pub object: C::Object,
    pub inj: [C::Morphism; 2],
    pub proj: [C::Morphism; 2],
}

impl<C: Category + ?Sized> fmt::Debug for Biproduct<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Biproduct").field("object", &self.object).finish()
    }
}

/// A finite-length abelian category realized concretely.
pub trait Category: Send + Sync {
    type Object: Clone + fmt::Debug + Send + Sync;
    type Morphism: Clone + fmt::Debug + Send + Sync;
    type Carrier: Clone + fmt::Debug + Send + Sync;
    /// Canonical isomorphism-class key: equal keys iff isomorphic objects.
    type Key: Clone + Eq + Ord + Hash + fmt::Debug + Serialize + DeserializeOwned + Send + Sync;

    /// Identifies the category (backend and field) for caches and report headers.
    fn fingerprint(&self) -> String;
    fn caps(&self) -> &Caps;

    fn zero_object(&self) -> Self::Object;
    /// Composition length.
    fn length(&self, m: &Self::Object) -> usize;
    fn is_zero(&self, m: &Self::Object) -> bool {
        self.length(m) == 0
    }
    fn iso_key(&self, m: &Self::Object) -> Result<Self::Key>;
    fn is_isomorphic(&self, a: &Self::Object, b: &Self::Object) -> Result<bool> {
        if self.length(a) != self.length(b) {
            return Ok(false);
        }
        Ok(self.iso_key(a)? == self.iso_key(b)?)
    }
    /// Human-readable name for an isomorphism class.
    fn describe(&self, key: &Self::Key) -> String;
    /// Canonical JSON payload of an object.
    fn payload(&self, m: &Self::Object) -> serde_json::Value;

    fn source<'a>(&self, f: &'a Self::Morphism) -> &'a Self::Object;
    fn target<'a>(&self, f: &'a Self::Morphism) -> &'a Self::Object;
    fn identity(&self, m: &Self::Object) -> Self::Morphism;
    fn zero_morphism(&self, from: &Self::Object, to: &Self::Object) -> Self::Morphism;
    /// `g ∘ f`.
    fn compose(&self, g: &Self::Morphism, f: &Self::Morphism) -> Result<Self::Morphism>;
    fn same_morphism(&self, f: &Self::Morphism, g: &Self::Morphism) -> bool;
    fn is_zero_morphism(&self, f: &Self::Morphism) -> bool;
    fn is_monic(&self, f: &Self::Morphism) -> Result<bool> {
        Ok(self.length(&self.kernel(f)?.sub) == 0)
    }

    /// Size of `Hom(from, to)` as a finite set.
    fn hom_count(&self, from: &Self::Object, to: &Self::Object) -> Result<u128>;
    /// Visits every element of `Hom(from, to)` in a deterministic order.
    ///
    /// Fails with a cap error before visiting anything when the set is too large.
    fn try_for_each_hom<F>(&self, from: &Self::Object, to: &Self::Object, visit: F) -> Result<ControlFlow<()>>
    where
        F: FnMut(&Self::Morphism) -> ControlFlow<()>;
    fn homs(&self, from: &Self::Object, to: &Self::Object) -> Result<Vec<Self::Morphism>> {
        let mut out = Vec::new();
        let _ = self.try_for_each_hom(from, to, |f| {
            out.push(f.clone());
            ControlFlow::Continue(())
        })?;
        Ok(out)
    }

    fn kernel(&self, f: &Self::Morphism) -> Result<SubobjectEntry<Self>>;
    fn image(&self, f: &Self::Morphism) -> Result<SubobjectEntry<Self>>;
    fn cokernel(&self, f: &Self::Morphism) -> Result<Self::Object> {
        Ok(self.image(f)?.quotient)
    }

    /// Every subobject (as a concrete piece of `m`, not up to isomorphism), including 0 and `m`.
    fn subobjects(&self, m: &Self::Object) -> Result<Vec<SubobjectEntry<Self>>>;
    fn carrier_length(&self, c: &Self::Carrier) -> usize;
    /// Length of `a ∩ b` for two carriers of the same parent.
    fn intersection_length(&self, a: &Self::Carrier, b: &Self::Carrier) -> usize;

    fn direct_sum(&self, a: &Self::Object, b: &Self::Object) -> Result<Biproduct<Self>>;

    /// Candidate objects of length `<= bound`, covering every isomorphism class at least once.
    fn enumerate_objects(&self, bound: usize) -> Result<Vec<Self::Object>>;
}
