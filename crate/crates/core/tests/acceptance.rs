//! Acceptance suite: one PASS/FAIL line per criterion, then a single assertion.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use nullspec::classify::{classify_all, is_indecomposable, is_monoform, is_premonoform, is_uniform};
use nullspec::lattice::nullity_lattice;
use nullspec::verify::{indecomposable_generator_sets, verify_bijection, verify_topology};
use nullspec::{cli, Category, IsoSet, NullityEngine, SpecSet, Spectrum, Universe};

use common::*;

/// Runtime limits are pinned here; all other criteria are exact.
const LIMIT_A2: Duration = Duration::from_secs(10);
const LIMIT_BIJECTION: Duration = Duration::from_secs(300);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn run(n: u8, title: &str, limit: Option<Duration>, body: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let mut o = body();
    let elapsed = start.elapsed();
    let timing = match limit {
        Some(l) => {
            if elapsed > l {
                o.pass = false;
            }
            format!("{:.2} s, limit {} s", elapsed.as_secs_f64(), l.as_secs())
        }
        None => format!("{:.2} s", elapsed.as_secs_f64()),
    };
    println!(
        "criterion {n:>2}: {} | {title} | {} [{timing}]",
        if o.pass { "PASS" } else { "FAIL" },
        o.detail
    );
    o.pass
}

fn a2_reproduction() -> Outcome {
    let cat = a_n(2, 2);
    let u = universe(&cat, 4);
    let engine = NullityEngine::new(&u);
    let spec = Spectrum::compute(&cat, &engine).unwrap();
    let id = |name: &str| u.id_of(&cat, &cat.named(name).unwrap()).unwrap();
    let pt = |name: &str| spec.point_of(id(name));
    let (Some(a), Some(b), Some(c)) = (pt("P1"), pt("P2"), pt("S2")) else {
        return outcome(false, "P1, P2 or S2 is not a point");
    };
    let set = |xs: &[usize]| xs.iter().fold(SpecSet::EMPTY, |s, &i| s.union(SpecSet::singleton(i)));
    let mut failures = Vec::new();
    if spec.len() != 3 {
        failures.push(format!("|Spec| = {}", spec.len()));
    }
    for (name, want) in [("P1", set(&[a])), ("S2", set(&[c])), ("P2", set(&[b, c]))] {
        if spec.supp(id(name)) != want {
            failures.push(format!("Supp {name} = {}", spec.describe_set(spec.supp(id(name)))));
        }
    }
    let closed: BTreeSet<SpecSet> = spec.closed_subsets().into_iter().collect();
    let expected: BTreeSet<SpecSet> = [set(&[]), set(&[a]), set(&[c]), set(&[b, c]), set(&[a, c]), set(&[a, b, c])]
        .into_iter()
        .collect();
    if closed != expected {
        failures.push(format!("closed family {closed:?}"));
    }
    let non_ext: Vec<SpecSet> = closed.iter().copied().filter(|&s| !spec.is_extension_closed(s)).collect();
    if non_ext != vec![set(&[a, c])] {
        failures.push(format!("closed but not extension closed: {non_ext:?}"));
    }
    let cec = spec.closed_ext_closed_subsets().len();
    if cec != 5 {
        failures.push(format!("{cec} closed & extension-closed subsets"));
    }
    if failures.is_empty() {
        outcome(true, "3 points, Supp a={a}, Supp c={c}, Supp b={b,c}, 6 closed, {a,c} unique non-ext-closed, 5 CEC")
    } else {
        outcome(false, failures.join("; "))
    }
}

fn bijection() -> Outcome {
    let mut lines = Vec::new();
    let mut pass = true;
    for n in 1..=3 {
        let cat = a_n(n, 2);
        let u = universe(&cat, 2 * n);
        let engine = NullityEngine::new(&u);
        let spec = Spectrum::compute(&cat, &engine).unwrap();
        let gens = indecomposable_generator_sets(&spec, n, 20).unwrap();
        let r = verify_bijection(&cat, &spec, &gens).unwrap();
        pass &= r.passed() && r.order_preserved && r.classes == r.subsets;
        lines.push(format!("A{n}: {} classes/{} violations", r.classes, r.violations.len()));
    }
    let cat = groups();
    let u = universe(&cat, 4);
    let engine = NullityEngine::new(&u);
    let spec = Spectrum::compute(&cat, &engine).unwrap();
    let gens = indecomposable_generator_sets(&spec, 2, 20).unwrap();
    let r = verify_bijection(&cat, &spec, &gens).unwrap();
    pass &= r.passed() && r.order_preserved;
    lines.push(format!("2-groups (order <= 16): {} classes/{} violations", r.classes, r.violations.len()));
    outcome(pass, lines.join(", "))
}

fn lattices() -> Outcome {
    let mut failures = Vec::new();
    let cat = a_n(2, 2);
    let u = universe(&cat, 4);
    let engine = NullityEngine::new(&u);
    let spec = Spectrum::compute(&cat, &engine).unwrap();
    let l = nullity_lattice(&spec).unwrap();
    if l.len() != 5 || l.find_pentagon().is_none() || l.distributivity_failure().is_none() {
        failures.push(format!("A2: {} nodes, verdict {}", l.len(), l.verdict()));
    }
    let cat = a_n(1, 2);
    let u = universe(&cat, 2);
    let engine = NullityEngine::new(&u);
    let spec = Spectrum::compute(&cat, &engine).unwrap();
    let l1 = nullity_lattice(&spec).unwrap();
    if !(l1.is_distributive() && l1.is_chain()) {
        failures.push(format!("A1: {}", l1.verdict()));
    }
    let cat = groups();
    let u = universe(&cat, 4);
    let engine = NullityEngine::new(&u);
    let spec = Spectrum::compute(&cat, &engine).unwrap();
    let lg = nullity_lattice(&spec).unwrap();
    if !(lg.is_distributive() && lg.is_chain()) {
        failures.push(format!("2-groups: {}", lg.verdict()));
    }
    if failures.is_empty() {
        outcome(
            true,
            format!(
                "A2: 5 nodes, pentagon, not distributive; A1: {}-chain; 2-groups: {}-chain",
                l1.len(),
                lg.len()
            ),
        )
    } else {
        outcome(false, failures.join("; "))
    }
}

/// Every universe used by the predicate criteria, as `(name, count of violations or disagreements)`.
fn over_corpora(mut f: impl FnMut(&str, &dyn CorpusRun) -> usize) -> (usize, Vec<String>) {
    let mut total = 0;
    let mut seen = Vec::new();
    for p in [2, 3] {
        for n in 1..=3 {
            let cat = a_n(n, p);
            let u = universe(&cat, n);
            let name = format!("A{n}/F{p}");
            total += f(&name, &(&cat, &u));
            seen.push(name);
        }
    }
    let g = groups();
    let ug = universe(&g, 4);
    total += f("2-groups<=16", &(&g, &ug));
    seen.push("2-groups<=16".into());
    let l = local(2);
    let ul = universe(&l, 3);
    total += f("local443/F2 dim<=3", &(&l, &ul));
    seen.push("local443/F2 dim<=3".into());
    (total, seen)
}

/// Type-erased access to a (category, universe) pair for the predicate criteria.
trait CorpusRun {
    fn hierarchy_violations(&self) -> usize;
    fn quotient_oracle_disagreements(&self) -> usize;
    fn topology_violations(&self) -> usize;
}

impl<C: Category> CorpusRun for (&C, &Universe<C>) {
    fn hierarchy_violations(&self) -> usize {
        classify_all(self.0, self.1)
            .unwrap()
            .iter()
            .map(|r| r.hierarchy_violations().len())
            .sum()
    }

    fn quotient_oracle_disagreements(&self) -> usize {
        let (cat, u) = *self;
        let engine = NullityEngine::new(u);
        u.ids()
            .skip(1)
            .filter(|&m| is_premonoform(cat, u.object(m)).unwrap() != engine.premonoform_by_quotients(m).unwrap())
            .count()
    }

    fn topology_violations(&self) -> usize {
        let (cat, u) = *self;
        let engine = NullityEngine::new(u);
        let spec = Spectrum::compute(cat, &engine).unwrap();
        verify_topology(cat, &spec).unwrap().violations.len()
    }
}

fn hierarchy() -> Outcome {
    let (violations, seen) = over_corpora(|_, c| c.hierarchy_violations());
    let g = groups();
    let z4 = g.group(&[2]).unwrap();
    let z4_ok = is_uniform(&g, &z4).unwrap() && !is_premonoform(&g, &z4).unwrap() && !is_monoform(&g, &z4).unwrap();
    let l = local(2);
    let r = l.regular();
    let r_ok =
        is_indecomposable(&l, &r).unwrap() && !is_uniform(&l, &r).unwrap() && !is_premonoform(&l, &r).unwrap();
    outcome(
        violations == 0 && z4_ok && r_ok,
        format!(
            "{violations} violations over {}; Z/4 witness {}; local regular witness {}",
            seen.join(", "),
            if z4_ok { "ok" } else { "WRONG" },
            if r_ok { "ok" } else { "WRONG" }
        ),
    )
}

fn coincidence_on_a_n() -> Outcome {
    let mut bad = Vec::new();
    for n in 1..=4 {
        let cat = a_n(n, 2);
        let u = universe(&cat, n);
        let reports = classify_all(&cat, &u).unwrap();
        let pick = |f: fn(&nullspec::classify::ClassReport) -> bool| -> BTreeSet<usize> {
            reports.iter().filter(|r| f(r)).map(|r| r.id).collect()
        };
        let mono = pick(|r| r.monoform);
        let pre = pick(|r| r.premonoform);
        let ind = pick(|r| r.indecomposable);
        if mono != pre || pre != ind {
            bad.push(format!("A{n}: {} / {} / {}", mono.len(), pre.len(), ind.len()));
        }
    }
    outcome(bad.is_empty(), if bad.is_empty() { "A1..A4 over F_2 at their length bounds".into() } else { bad.join("; ") })
}

fn groups_premonoform_is_monoform() -> Outcome {
    let g = groups();
    let u = universe(&g, 4);
    let reports = classify_all(&g, &u).unwrap();
    let bad: Vec<&str> = reports
        .iter()
        .filter(|r| r.premonoform != r.monoform)
        .map(|r| r.object.as_str())
        .collect();
    outcome(bad.is_empty(), format!("{} groups of order <= 16, {} disagreements {bad:?}", reports.len(), bad.len()))
}

fn quotient_oracle() -> Outcome {
    let (bad, seen) = over_corpora(|_, c| c.quotient_oracle_disagreements());
    outcome(bad == 0, format!("{bad} disagreements over {}", seen.join(", ")))
}

fn ext_closure_oracle() -> Outcome {
    let mut disagreements = 0;
    let mut checked = 0usize;
    let mut corpora = Vec::new();
    for n in 1..=3 {
        let cat = a_n(n, 2);
        corpora.push((format!("A{n}"), cat));
    }
    corpora.push(("local443".into(), local(2)));
    for (name, cat) in &corpora {
        let u = universe(cat, 3);
        let table = if name == "local443" {
            extension_table(&u, |a, b| local_middle_terms(cat, &u, a, b))
        } else {
            extension_table(&u, |a, b| quiver_middle_terms(cat, &u, a, b))
        };
        let engine = NullityEngine::new(&u);
        let nonzero: Vec<usize> = u.ids().skip(1).collect();
        let mut generators: Vec<IsoSet> = vec![IsoSet::new()];
        for (i, &x) in nonzero.iter().enumerate() {
            generators.push(IsoSet::from([x]));
            for &y in &nonzero[i + 1..] {
                generators.push(IsoSet::from([x, y]));
            }
        }
        let indec = u.indecomposables();
        for mask in 0..1u32 << indec.len() {
            generators.push(indec.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &m)| m).collect());
        }
        for q in &generators {
            let oracle = bfs_ext_closure(&table, q);
            for b in u.ids() {
                checked += 1;
                if engine.in_ext_closure(b, q) != oracle.contains(&b) {
                    disagreements += 1;
                }
            }
        }
    }
    outcome(
        disagreements == 0,
        format!("{disagreements} disagreements in {checked} membership checks (A1..A3, local443; F_2, length <= 3)"),
    )
}

fn topology() -> Outcome {
    let (mut bad, mut seen) = over_corpora(|_, c| c.topology_violations());
    for n in 1..=3 {
        let cat = a_n(n, 2);
        let u = universe(&cat, 2 * n);
        bad += (&cat, &u).topology_violations();
        seen.push(format!("A{n}/F2 at length {}", 2 * n));
    }
    outcome(bad == 0, format!("{bad} violations over {}", seen.join(", ")))
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_string_lossy().into_owned();
    let commands: [&[&str]; 6] = [
        &["verify", "--backend", "quiver:A2", "--p", "2", "--bound", "2", "--format", "json"],
        &["lattice", "--backend", "quiver:A2"],
        &["classify", "--backend", "abgrp", "--p", "2", "--bound", "3", "--format", "json"],
        &["spec", "--backend", "quiver:A3", "--format", "json"],
        &["supp", "--backend", "abgrp", "--format", "json"],
        &["verify", "--backend", "quiver:A3", "--bound", "2", "--format", "text"],
    ];
    let mut mismatches = Vec::new();
    for cmd in commands {
        let invoke = |extra: &[&str]| {
            let args: Vec<String> = std::iter::once("nullspec")
                .chain(cmd.iter().copied())
                .chain(extra.iter().copied())
                .map(String::from)
                .collect();
            cli::run(args)
        };
        let reference = invoke(&["--workers", "1", "--no-cache"]);
        let variants = [
            invoke(&["--workers", "4", "--no-cache"]),
            invoke(&["--workers", "2", "--cache-dir", &cache]),
            invoke(&["--workers", "3", "--cache-dir", &cache]),
            invoke(&["--no-cache"]),
        ];
        if reference.code != 0 || variants.iter().any(|v| v.stdout != reference.stdout || v.code != reference.code) {
            mismatches.push(cmd[..3].join(" "));
        }
    }
    let cached = std::fs::read_dir(dir.path()).unwrap().count();
    outcome(
        mismatches.is_empty() && cached > 0,
        format!(
            "6 commands x (workers 1/2/3/4/default, cache off/cold/warm): {} mismatches, {cached} cache files",
            mismatches.len()
        ),
    )
}

#[test]
fn acceptance() {
    let results = [
        run(1, "A2 over F_2 reproduction", Some(LIMIT_A2), a2_reproduction),
        run(2, "class/subset bijection", Some(LIMIT_BIJECTION), bijection),
        run(3, "lattice analysis", None, lattices),
        run(4, "predicate hierarchy", None, hierarchy),
        run(5, "monoform = premonoform = indecomposable on A_n", None, coincidence_on_a_n),
        run(6, "premonoform iff monoform for 2-groups", None, groups_premonoform_is_monoform),
        run(7, "premonoform iff outside ext-closure of proper quotients", None, quotient_oracle),
        run(8, "recursive ext-closure vs breadth-first oracle", None, ext_closure_oracle),
        run(9, "topology suite", None, topology),
        run(10, "determinism", None, determinism),
    ];
    let failed: Vec<usize> = results.iter().enumerate().filter(|(_, &ok)| !ok).map(|(i, _)| i + 1).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
