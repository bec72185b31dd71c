//! Exhaustive checks of the topology on the spectrum and of the correspondence
//! between nullity classes and closed, extension-closed subsets.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::category::Category;
use crate::classify::is_premonoform;
use crate::error::{Error, Result};
use crate::nullity::IsoSet;
use crate::spectrum::{ClassTrace, SpecSet, Spectrum};
use crate::universe::ObjId;

#[derive(Clone, Debug, Serialize)]
pub struct TopologyReport {
    pub closed_family: Vec<SpecSet>,
    pub violations: Vec<String>,
}

impl TopologyReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Unions and intersections of closed sets, the covering criterion for closedness,
/// and the elementary support properties on every universe member.
pub fn verify_topology<C: Category>(cat: &C, spec: &Spectrum<'_, '_, C>) -> Result<TopologyReport> {
    let u = spec.universe();
    let engine = spec.engine();
    let closed = spec.closed_subsets();
    let family: BTreeSet<SpecSet> = closed.iter().copied().collect();
    let mut violations = Vec::new();
    let name = |phi: SpecSet| spec.describe_set(phi);

    for must in [SpecSet::EMPTY, spec.full()] {
        if !family.contains(&must) {
            violations.push(format!("{} is not closed", name(must)));
        }
    }
    for &a in &closed {
        for &b in &closed {
            if !family.contains(&a.union(b)) {
                violations.push(format!("union of {} and {} is not closed", name(a), name(b)));
            }
            if !family.contains(&a.intersection(b)) {
                violations.push(format!("intersection of {} and {} is not closed", name(a), name(b)));
            }
        }
    }

    // closed iff every point [M] of Φ has some H with [M] ∈ Supp H ⊆ Φ
    for mask in 0..1u64 << spec.len() {
        let phi = SpecSet(mask);
        let covered = phi
            .iter()
            .all(|i| u.ids().any(|h| spec.supp(h).contains(i) && spec.supp(h).is_subset(phi)));
        if covered != spec.is_closed(phi) {
            violations.push(format!("covering criterion disagrees with closedness on {}", name(phi)));
        }
    }

    for m in u.ids() {
        let label = || u.label(cat, m);
        let supp_m = spec.supp(m);
        if !spec.is_closed(supp_m) {
            violations.push(format!("Supp {} is not closed", label()));
        }
        for &(_, q) in u.extensions(m) {
            if !spec.supp(q).is_subset(supp_m) {
                violations.push(format!("Supp {} ⊄ Supp {}", u.label(cat, q), label()));
            }
        }
        if m == u.zero() {
            continue;
        }
        if u.is_indecomposable(m) && is_premonoform(cat, u.object(m))? {
            let pt = spec
                .point_of(m)
                .ok_or_else(|| Error::IllDefinedSupport(format!("premonoform {} has no point", label())))?;
            if !supp_m.contains(pt) {
                violations.push(format!("[{0}] ∉ Supp {0}", label()));
            }
            for n in u.ids() {
                let member = engine.in_nullity_closure(m, &engine.single(n));
                if member != supp_m.is_subset(spec.supp(n)) {
                    violations.push(format!(
                        "{} ∈ C({}) disagrees with Supp inclusion",
                        label(),
                        u.label(cat, n)
                    ));
                }
            }
        }
    }
    Ok(TopologyReport {
        closed_family: closed,
        violations,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Correspondence {
    pub support: SpecSet,
    pub support_labels: String,
    pub trace: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BijectionReport {
    pub generator_sets: usize,
    pub classes: usize,
    pub subsets: usize,
    pub order_preserved: bool,
    pub pairs: Vec<Correspondence>,
    pub violations: Vec<String>,
}

impl BijectionReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn summary(&self) -> String {
        format!(
            "{} nullity classes ↔ {} closed&ext-closed subsets; order {}",
            self.classes,
            self.subsets,
            if self.order_preserved { "preserved" } else { "NOT preserved" }
        )
    }
}

/// Every subset of the indecomposable members of length `<= bound`, together with the
/// canonical representative of each point (so every point can generate its own class).
pub fn indecomposable_generator_sets<C: Category>(spec: &Spectrum<'_, '_, C>, bound: usize, cap: usize) -> Result<Vec<IsoSet>> {
    let u = spec.universe();
    let gens: Vec<ObjId> = u
        .indecomposables()
        .into_iter()
        .filter(|&m| u.length(m) <= bound)
        .chain(spec.points().iter().map(|p| p.canonical()))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if gens.len() > cap.min(63) {
        return Err(Error::cap("generator subsets (indecomposables)", gens.len() as u128, cap as u64));
    }
    Ok((0..1u64 << gens.len())
        .map(|mask| {
            gens.iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &g)| g)
                .collect()
        })
        .collect())
}

pub fn verify_bijection<C: Category>(
    cat: &C,
    spec: &Spectrum<'_, '_, C>,
    generator_sets: &[IsoSet],
) -> Result<BijectionReport> {
    let u = spec.universe();
    let label_set = |s: &IsoSet| s.iter().map(|&m| u.label(cat, m)).collect::<Vec<_>>();
    let mut violations = Vec::new();

    // (i) generated classes: support is closed and extension closed, and the trace is Supp⁻¹ of it
    let mut by_trace: BTreeMap<IsoSet, SpecSet> = BTreeMap::new();
    for s in generator_sets {
        let generated: ClassTrace = spec.generated(s);
        let phi = spec.supp_generated(s);
        let gens = || format!("{:?}", label_set(s));
        if generated.support != phi {
            violations.push(format!("Supp of C{} differs from the points inside it", gens()));
        }
        if !spec.is_closed(phi) {
            violations.push(format!("Supp C{} = {} is not closed", gens(), spec.describe_set(phi)));
        }
        if let Some((x, a, b)) = spec.extension_witness(phi) {
            violations.push(format!(
                "Supp C{} is not extension closed: {} extends {} by {}",
                gens(),
                u.label(cat, x),
                u.label(cat, b),
                u.label(cat, a)
            ));
        }
        if !generated.is_nullity_class() {
            violations.push(format!("trace of C{} is not quotient and extension stable", gens()));
        }
        let inverse = spec.supp_inverse(phi);
        if inverse.trace != generated.trace {
            violations.push(format!(
                "C{} has trace {:?} but Supp⁻¹ of its support has {:?}",
                gens(),
                label_set(&generated.trace),
                label_set(&inverse.trace)
            ));
        }
        by_trace.insert(generated.trace, phi);
    }

    // (ii) round trip from the subset side
    let subsets = spec.closed_ext_closed_subsets();
    for &phi in &subsets {
        let inverse = spec.supp_inverse(phi);
        if inverse.support != phi {
            violations.push(format!(
                "Supp Supp⁻¹ {} = {}",
                spec.describe_set(phi),
                spec.describe_set(inverse.support)
            ));
        }
        if !inverse.is_nullity_class() {
            violations.push(format!("Supp⁻¹ {} is not a nullity class", spec.describe_set(phi)));
        }
    }

    // (iii) bijection and order, (iv) supports separate classes
    let supports: BTreeSet<SpecSet> = by_trace.values().copied().collect();
    if supports.len() != by_trace.len() {
        violations.push("two distinct classes share a support".into());
    }
    let family: BTreeSet<SpecSet> = subsets.iter().copied().collect();
    for phi in supports.difference(&family) {
        violations.push(format!("class support {} is not closed and extension closed", spec.describe_set(*phi)));
    }
    for phi in family.difference(&supports) {
        violations.push(format!("{} is not the support of any generated class", spec.describe_set(*phi)));
    }
    let mut order_preserved = true;
    for (t1, &s1) in &by_trace {
        for (t2, &s2) in &by_trace {
            if t1.is_subset(t2) != s1.is_subset(s2) {
                order_preserved = false;
                violations.push(format!(
                    "inclusion of {:?} in {:?} is not mirrored by supports",
                    label_set(t1),
                    label_set(t2)
                ));
            }
        }
    }

    let mut pairs: Vec<Correspondence> = by_trace
        .iter()
        .map(|(trace, &support)| Correspondence {
            support,
            support_labels: spec.describe_set(support),
            trace: label_set(trace),
        })
        .collect();
    pairs.sort_by_key(|c| (c.support.len(), c.support.0));
    Ok(BijectionReport {
        generator_sets: generator_sets.len(),
        classes: by_trace.len(),
        subsets: subsets.len(),
        order_preserved,
        pairs,
        violations,
    })
}
