//! Object predicates: simple, indecomposable, uniform, premonoform, monoform.
//!
//! Quantifiers over morphisms run over the full finite hom set, since
//! "zero or monic" is not a linear condition.

use std::ops::ControlFlow;

use rayon::prelude::*;
use serde::Serialize;

use crate::category::Category;
use crate::error::{Error, Result};
use crate::universe::{ObjId, Universe};

fn nonzero<C: Category>(cat: &C, m: &C::Object) -> Result<()> {
    if cat.is_zero(m) {
        Err(Error::ZeroObject)
    } else {
        Ok(())
    }
}

/// No subobjects besides `0` and `m`.
pub fn is_simple<C: Category>(cat: &C, m: &C::Object) -> Result<bool> {
    nonzero(cat, m)?;
    Ok(cat.subobjects(m)?.len() == 2)
}

/// No idempotent endomorphism other than `0` and `1`.
pub fn is_indecomposable<C: Category>(cat: &C, m: &C::Object) -> Result<bool> {
    nonzero(cat, m)?;
    let id = cat.identity(m);
    let mut failure = None;
    let flow = cat.try_for_each_hom(m, m, |e| {
        if cat.is_zero_morphism(e) || cat.same_morphism(e, &id) {
            return ControlFlow::Continue(());
        }
        match cat.compose(e, e) {
            Ok(ee) if cat.same_morphism(&ee, e) => ControlFlow::Break(()),
            Ok(_) => ControlFlow::Continue(()),
            Err(err) => {
                failure = Some(err);
                ControlFlow::Break(())
            }
        }
    })?;
    if let Some(err) = failure {
        return Err(err);
    }
    Ok(flow.is_continue())
}

/// Any two nonzero subobjects meet nontrivially.
pub fn is_uniform<C: Category>(cat: &C, m: &C::Object) -> Result<bool> {
    nonzero(cat, m)?;
    let subs: Vec<C::Carrier> = cat
        .subobjects(m)?
        .into_iter()
        .map(|e| e.carrier)
        .filter(|c| cat.carrier_length(c) > 0)
        .collect();
    for (i, a) in subs.iter().enumerate() {
        for b in &subs[i + 1..] {
            if cat.intersection_length(a, b) == 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every map `from -> to` is zero or monic.
fn all_zero_or_monic<C: Category>(cat: &C, from: &C::Object, to: &C::Object) -> Result<bool> {
    let mut failure = None;
    let flow = cat.try_for_each_hom(from, to, |f| {
        if cat.is_zero_morphism(f) {
            return ControlFlow::Continue(());
        }
        match cat.is_monic(f) {
            Ok(true) => ControlFlow::Continue(()),
            Ok(false) => ControlFlow::Break(()),
            Err(err) => {
                failure = Some(err);
                ControlFlow::Break(())
            }
        }
    })?;
    if let Some(err) = failure {
        return Err(err);
    }
    Ok(flow.is_continue())
}

/// Every endomorphism is zero or monic.
pub fn is_premonoform<C: Category>(cat: &C, m: &C::Object) -> Result<bool> {
    nonzero(cat, m)?;
    all_zero_or_monic(cat, m, m)
}

/// For every subobject `N`, every map `N -> M` is zero or monic.
pub fn is_monoform<C: Category>(cat: &C, m: &C::Object) -> Result<bool> {
    nonzero(cat, m)?;
    for e in cat.subobjects(m)? {
        if cat.is_zero(&e.sub) {
            continue;
        }
        if !all_zero_or_monic(cat, &e.sub, m)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub id: ObjId,
    pub object: String,
    pub length: usize,
    pub simple: bool,
    pub indecomposable: bool,
    pub uniform: bool,
    pub premonoform: bool,
    pub monoform: bool,
}

impl ClassReport {
    /// Violated implications among simple ⇒ monoform ⇒ premonoform ⇒ indecomposable
    /// and uniform ⇒ indecomposable.
    pub fn hierarchy_violations(&self) -> Vec<String> {
        let checks = [
            (self.simple, self.monoform, "simple ⇒ monoform"),
            (self.monoform, self.premonoform, "monoform ⇒ premonoform"),
            (self.premonoform, self.indecomposable, "premonoform ⇒ indecomposable"),
            (self.uniform, self.indecomposable, "uniform ⇒ indecomposable"),
        ];
        checks
            .iter()
            .filter(|(a, b, _)| *a && !*b)
            .map(|(_, _, rule)| format!("{}: {rule} fails", self.object))
            .collect()
    }
}

pub fn classify<C: Category>(cat: &C, u: &Universe<C>, id: ObjId) -> Result<ClassReport> {
    let m = u.object(id);
    Ok(ClassReport {
        id,
        object: u.label(cat, id),
        length: u.length(id),
        simple: is_simple(cat, m)?,
        indecomposable: is_indecomposable(cat, m)?,
        uniform: is_uniform(cat, m)?,
        premonoform: is_premonoform(cat, m)?,
        monoform: is_monoform(cat, m)?,
    })
}

/// One report per nonzero universe object, in id order.
pub fn classify_all<C: Category>(cat: &C, u: &Universe<C>) -> Result<Vec<ClassReport>> {
    u.ids()
        .skip(1)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&id| classify(cat, u, id))
        .collect()
}
