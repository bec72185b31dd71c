//! The `nullspec` command line: argument parsing, report rendering, exit codes.
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 1 | configuration error |
//! | 2 | hierarchy or verification violations |
//! | 3 | enumeration cap exceeded |

pub mod cache;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::abgrp::GroupCategory;
use crate::category::{Caps, Category};
use crate::classify::{classify, ClassReport};
use crate::error::{Error, Result};
use crate::modfd::{local_algebra_443, ModuleCategory, Quiver};
use crate::nullity::NullityEngine;
use crate::spectrum::dot::{lattice_dot, topology_dot};
use crate::spectrum::lattice::nullity_lattice;
use crate::spectrum::verify::{indecomposable_generator_sets, verify_bijection, verify_topology};
use crate::spectrum::Spectrum;
use crate::universe::{ObjId, Universe};
use cache::MemoCache;

pub const SCHEMA: &str = "nullspec/1";
/// The one environment variable the tool reads.
pub const CACHE_ENV: &str = "NULLSPEC_CACHE_DIR";

#[derive(Parser, Debug)]
#[command(name = "nullspec", version, about = "Premonoform spectra, supports and nullity classes of small abelian categories")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Run the predicate hierarchy on every object of the universe.
    Classify(CommonArgs),
    /// List the points of the spectrum and its closed subsets.
    Spec(CommonArgs),
    /// Print the support of every object.
    Supp(CommonArgs),
    /// Emit the lattice of nullity classes with a distributivity verdict.
    Lattice(CommonArgs),
    /// Check the topology and the class/subset correspondence.
    Verify(CommonArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Classify(_) => "classify",
            Command::Spec(_) => "spec",
            Command::Supp(_) => "supp",
            Command::Lattice(_) => "lattice",
            Command::Verify(_) => "verify",
        }
    }

    pub fn args(&self) -> &CommonArgs {
        match self {
            Command::Classify(a) | Command::Spec(a) | Command::Supp(a) | Command::Lattice(a) | Command::Verify(a) => a,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct CommonArgs {
    /// `quiver:A<n>`, `quiver:<file.toml>`, `local443` or `abgrp`.
    #[arg(long)]
    pub backend: String,
    /// Characteristic of the base field, or the prime for `abgrp`.
    #[arg(long, default_value_t = 2)]
    pub p: u32,
    /// Length bound of the verification window.
    #[arg(long)]
    pub bound: Option<usize>,
    /// Length bound of the enumerated universe (default: `bound` for classify, `2 * bound` otherwise).
    #[arg(long)]
    pub enum_bound: Option<usize>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Directory for the memo cache (overrides NULLSPEC_CACHE_DIR).
    #[arg(long)]
    pub cache_dir: Option<PathBuf>,
    #[arg(long)]
    pub no_cache: bool,
    /// Worker threads (0 = one per core). Results do not depend on it.
    #[arg(long, default_value_t = 0)]
    pub workers: usize,
    #[arg(long)]
    pub cap_subspace: Option<u64>,
    #[arg(long)]
    pub cap_hom: Option<u64>,
    #[arg(long)]
    pub cap_group_order: Option<u64>,
    #[arg(long)]
    pub cap_orbit: Option<u64>,
    #[arg(long)]
    pub cap_universe: Option<u64>,
    #[arg(long)]
    pub cap_points: Option<usize>,
    /// Log progress to stderr.
    #[arg(short, long)]
    pub verbose: bool,
}

#[derive(Clone, Debug)]
pub enum Backend {
    Quiver(Quiver),
    Local443,
    AbelianGroups,
}

impl Backend {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "local443" => return Ok(Backend::Local443),
            "abgrp" => return Ok(Backend::AbelianGroups),
            _ => {}
        }
        let Some(rest) = s.strip_prefix("quiver:") else {
            return Err(Error::Config(format!(
                "unknown backend {s:?} (expected quiver:A<n>, quiver:<file.toml>, local443 or abgrp)"
            )));
        };
        if let Some(n) = rest.strip_prefix('A').and_then(|n| n.parse::<usize>().ok()) {
            if n == 0 {
                return Err(Error::Config("A0 has no vertices".into()));
            }
            return Ok(Backend::Quiver(Quiver::a_n(n)?));
        }
        let text = std::fs::read_to_string(rest).map_err(|e| Error::Config(format!("cannot read quiver file {rest}: {e}")))?;
        Ok(Backend::Quiver(Quiver::from_config_str(&text)?))
    }

    fn default_bound(&self, command: &str) -> usize {
        match self {
            Backend::Quiver(q) => q.vertices,
            Backend::Local443 if command == "classify" => 3,
            Backend::Local443 => 1,
            Backend::AbelianGroups => 2,
        }
    }
}

/// Everything that determines a run's output. Worker count and cache location are
/// deliberately absent from reports.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: &'static str,
    pub backend_name: String,
    pub backend: Backend,
    pub p: u32,
    pub bound: usize,
    pub enum_bound: usize,
    pub caps: Caps,
    pub format: Format,
    pub cache_dir: Option<PathBuf>,
    pub workers: usize,
}

impl RunConfig {
    pub fn from_command(cmd: &Command) -> Result<Self> {
        let a = cmd.args();
        let command = cmd.name();
        let backend = Backend::parse(&a.backend)?;
        crate::linalg::check_prime(a.p)?;
        let bound = a.bound.unwrap_or_else(|| backend.default_bound(command));
        if bound == 0 {
            return Err(Error::Config("bound must be at least 1".into()));
        }
        let enum_bound = a
            .enum_bound
            .unwrap_or(if command == "classify" { bound } else { 2 * bound });
        if enum_bound < bound {
            return Err(Error::Config(format!("enumeration bound {enum_bound} is below bound {bound}")));
        }
        let mut caps = Caps::default();
        let set = |slot: &mut u64, v: Option<u64>| -> Result<()> {
            match v {
                Some(0) => Err(Error::Config("caps must be positive".into())),
                Some(v) => {
                    *slot = v;
                    Ok(())
                }
                None => Ok(()),
            }
        };
        set(&mut caps.subspace, a.cap_subspace)?;
        set(&mut caps.hom, a.cap_hom)?;
        set(&mut caps.group_order, a.cap_group_order)?;
        set(&mut caps.orbit, a.cap_orbit)?;
        set(&mut caps.universe, a.cap_universe)?;
        match a.cap_points {
            Some(0) => return Err(Error::Config("caps must be positive".into())),
            Some(v) if v > 63 => return Err(Error::Config("at most 63 spectrum points are supported".into())),
            Some(v) => caps.spectrum_points = v,
            None => {}
        }
        let format = a.format.unwrap_or(if command == "lattice" { Format::Dot } else { Format::Text });
        if format == Format::Dot && !matches!(command, "lattice" | "spec") {
            return Err(Error::Config(format!("--format dot is only available for lattice and spec, not {command}")));
        }
        let cache_dir = if a.no_cache {
            None
        } else {
            a.cache_dir
                .clone()
                .or_else(|| std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from))
        };
        Ok(RunConfig {
            command,
            backend_name: a.backend.clone(),
            backend,
            p: a.p,
            bound,
            enum_bound,
            caps,
            format,
            cache_dir,
            workers: a.workers,
        })
    }

    fn header(&self, fingerprint: &str) -> Value {
        json!({
            "command": self.command,
            "backend": self.backend_name,
            "fingerprint": fingerprint,
            "p": self.p,
            "bound": self.bound,
            "enumeration_bound": self.enum_bound,
            "caps": self.caps,
            "scope": format!("within bound {}", self.bound),
        })
    }
}

/// Result of one invocation, ready to print.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

/// Exit code for an error that escaped the engine.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::EnumerationCapExceeded { .. } => 3,
        Error::Config(_) | Error::NotPrime(_) | Error::CyclicQuiver | Error::Io(_) => 1,
        Error::InvalidAlgebra(_) | Error::InvalidModule(_) | Error::InvalidGroup(_) | Error::ShapeMismatch(_) => 1,
        _ => 2,
    }
}

fn error_outcome(format: Option<Format>, e: &Error) -> Outcome {
    let code = exit_code(e);
    let kind = match code {
        1 => "config",
        3 => "cap_exceeded",
        _ => "violation",
    };
    let stdout = if format == Some(Format::Json) {
        let v = json!({"schema": SCHEMA, "error": {"kind": kind, "message": e.to_string()}, "violations": [e.to_string()]});
        format!("{}\n", serde_json::to_string_pretty(&v).unwrap())
    } else {
        String::new()
    };
    Outcome {
        code,
        stdout,
        stderr: format!("nullspec: {e}\n"),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    run_command(&cli.command)
}

pub fn run_command(cmd: &Command) -> Outcome {
    let requested = cmd.args().format;
    let cfg = match RunConfig::from_command(cmd) {
        Ok(c) => c,
        Err(e) => return error_outcome(requested, &e),
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cfg.workers).build() {
        Ok(p) => p,
        Err(e) => return error_outcome(requested, &Error::Config(e.to_string())),
    };
    match pool.install(|| execute(&cfg)) {
        Ok(o) => o,
        Err(e) => error_outcome(Some(cfg.format), &e),
    }
}

/// Runs a validated configuration.
pub fn execute(cfg: &RunConfig) -> Result<Outcome> {
    match &cfg.backend {
        Backend::Quiver(q) => execute_on(&ModuleCategory::quiver(q, cfg.p, cfg.caps)?, cfg),
        Backend::Local443 => execute_on(&ModuleCategory::new(local_algebra_443(cfg.p)?, cfg.caps)?, cfg),
        Backend::AbelianGroups => execute_on(&GroupCategory::new(cfg.p, cfg.caps)?, cfg),
    }
}

/// Names the object a cap was hit on.
fn blame<'a, C: Category>(cat: &'a C, u: &'a Universe<C>, id: ObjId) -> impl Fn(Error) -> Error + 'a {
    move |e| match e {
        Error::EnumerationCapExceeded { what, size, cap } => Error::EnumerationCapExceeded {
            what: format!("{what} (object {})", u.label(cat, id)),
            size,
            cap,
        },
        other => other,
    }
}

struct Rendered {
    json: Value,
    text: String,
    dot: Option<String>,
    violations: Vec<String>,
}

fn execute_on<C: Category>(cat: &C, cfg: &RunConfig) -> Result<Outcome> {
    log::info!("generating universe of {} up to length {}", cat.fingerprint(), cfg.enum_bound);
    let u = Universe::generate(cat, cfg.enum_bound)?;
    log::info!("{} isomorphism classes", u.len());
    let fingerprint = cat.fingerprint();
    let mut r = if cfg.command == "classify" {
        render_classify(cat, &u)?
    } else {
        let engine = NullityEngine::new(&u);
        let cache = cfg.cache_dir.as_ref().map(|d| MemoCache::load(d, cat, &engine));
        let r = render_spectral(cat, cfg, &engine)?;
        if let Some(c) = &cache {
            match c.store(&engine) {
                Ok(n) => log::info!("cached {n} new decisions in {}", c.path().display()),
                Err(e) => log::warn!("could not write cache {}: {e}", c.path().display()),
            }
        }
        r
    };

    let header = cfg.header(&fingerprint);
    let code = if r.violations.is_empty() { 0 } else { 2 };
    let stdout = match cfg.format {
        Format::Json => {
            let mut doc = json!({"schema": SCHEMA, "header": header});
            if let (Value::Object(d), Value::Object(body)) = (&mut doc, std::mem::take(&mut r.json)) {
                d.extend(body);
            }
            doc["violations"] = json!(r.violations);
            format!("{}\n", serde_json::to_string_pretty(&doc)?)
        }
        Format::Dot => {
            let mut s = format!(
                "// nullspec {} --backend {} --p {} --bound {} --enum-bound {}\n",
                cfg.command, cfg.backend_name, cfg.p, cfg.bound, cfg.enum_bound
            );
            s.push_str(r.dot.as_deref().unwrap_or_default());
            s
        }
        Format::Text => {
            let mut s = format!(
                "# {} over {} (p = {}), within bound {} (enumerated at {})\n",
                cfg.command, cfg.backend_name, cfg.p, cfg.bound, cfg.enum_bound
            );
            s.push_str(&r.text);
            for v in &r.violations {
                let _ = writeln!(s, "VIOLATION: {v}");
            }
            s
        }
    };
    let stderr = if code == 0 {
        String::new()
    } else {
        format!("nullspec: {} violation(s)\n", r.violations.len())
    };
    Ok(Outcome { code, stdout, stderr })
}

fn render_classify<C: Category>(cat: &C, u: &Universe<C>) -> Result<Rendered> {
    let ids: Vec<ObjId> = u.ids().skip(1).collect();
    let reports: Vec<ClassReport> = ids
        .par_iter()
        .map(|&id| classify(cat, u, id).map_err(blame(cat, u, id)))
        .collect::<Result<_>>()?;
    let violations: Vec<String> = reports.iter().flat_map(|r| r.hierarchy_violations()).collect();
    let row = |cells: [String; 8]| {
        let line = format!(
            "{:>4}  {:<24} {:>3}  {:<6} {:<7} {:<7} {:<11} {}",
            cells[0], cells[1], cells[2], cells[3], cells[4], cells[5], cells[6], cells[7]
        );
        format!("{}\n", line.trim_end())
    };
    let mut text = row(["id", "object", "len", "simple", "indec", "uniform", "premonoform", "monoform"].map(String::from));
    for r in &reports {
        text.push_str(&row([
            r.id.to_string(),
            r.object.clone(),
            r.length.to_string(),
            r.simple.to_string(),
            r.indecomposable.to_string(),
            r.uniform.to_string(),
            r.premonoform.to_string(),
            r.monoform.to_string(),
        ]));
    }
    Ok(Rendered {
        json: json!({ "objects": reports }),
        text,
        dot: None,
        violations,
    })
}

fn render_spectral<C: Category>(cat: &C, cfg: &RunConfig, engine: &NullityEngine<'_, C>) -> Result<Rendered> {
    let u = engine.universe();
    let spec = Spectrum::compute(cat, engine)?;
    let labels = |s: &crate::nullity::IsoSet| s.iter().map(|&m| u.label(cat, m)).collect::<Vec<_>>();
    let points: Vec<Value> = spec
        .points()
        .iter()
        .map(|p| {
            json!({
                "id": p.id,
                "label": p.label,
                "representatives": p.representatives.iter().map(|&m| u.label(cat, m)).collect::<Vec<_>>(),
                "support": spec.describe_set(spec.supp(p.canonical())),
            })
        })
        .collect();
    let mut text = String::new();
    match cfg.command {
        "spec" => {
            let closed = spec.closed_subsets();
            let _ = writeln!(text, "{} point(s)", spec.len());
            for p in spec.points() {
                let reps = p.representatives.iter().map(|&m| u.label(cat, m)).collect::<Vec<_>>();
                let _ = writeln!(text, "  [{}] represented by {}", p.label, reps.join(", "));
            }
            let _ = writeln!(text, "{} closed subset(s):", closed.len());
            for &c in &closed {
                let ext = if spec.is_extension_closed(c) { "extension-closed" } else { "not extension-closed" };
                let _ = writeln!(text, "  {} ({ext})", spec.describe_set(c));
            }
            let closed_labels: Vec<String> = closed.iter().map(|&c| spec.describe_set(c)).collect();
            Ok(Rendered {
                json: json!({
                    "points": points,
                    "closed_subsets": closed.iter().map(|&c| json!({
                        "points": spec.describe_set(c),
                        "extension_closed": spec.is_extension_closed(c),
                    })).collect::<Vec<_>>(),
                }),
                text,
                dot: Some(topology_dot(&closed, &closed_labels)),
                violations: Vec::new(),
            })
        }
        "supp" => {
            let rows: Vec<Value> = u
                .ids()
                .map(|m| json!({"object": u.label(cat, m), "length": u.length(m), "support": spec.describe_set(spec.supp(m))}))
                .collect();
            for m in u.ids() {
                let _ = writeln!(text, "Supp {} = {}", u.label(cat, m), spec.describe_set(spec.supp(m)));
            }
            Ok(Rendered {
                json: json!({"points": points, "supports": rows}),
                text,
                dot: None,
                violations: Vec::new(),
            })
        }
        "lattice" => {
            let l = nullity_lattice(&spec)?;
            let verdict = l.verdict();
            let name = |i: usize| l.nodes[i].label.clone();
            let _ = writeln!(text, "{} nullity class(es)", l.len());
            for node in &l.nodes {
                let _ = writeln!(text, "  {}: {}", node.label, labels(&node.trace).join(", "));
            }
            let _ = writeln!(text, "verdict: {verdict}");
            let pentagon = l.find_pentagon().map(|p| [p.bottom, p.low, p.high, p.side, p.top].map(name));
            let diamond = l.find_diamond().map(|d| [d.bottom, d.atoms[0], d.atoms[1], d.atoms[2], d.top].map(name));
            let nodes: Vec<Value> = l
                .nodes
                .iter()
                .map(|n| json!({"label": n.label, "support": spec.describe_set(n.support), "trace": labels(&n.trace)}))
                .collect();
            let covers: Vec<[String; 2]> = l.covers().into_iter().map(|(a, b)| [name(a), name(b)]).collect();
            Ok(Rendered {
                json: json!({
                    "nodes": nodes,
                    "covers": covers,
                    "distributive": l.is_distributive(),
                    "chain": l.is_chain(),
                    "pentagon": pentagon,
                    "diamond": diamond,
                    "verdict": verdict,
                }),
                text,
                dot: Some(lattice_dot(&l)),
                violations: Vec::new(),
            })
        }
        _ => {
            let topo = verify_topology(cat, &spec)?;
            let gens = indecomposable_generator_sets(&spec, cfg.bound, cfg.caps.spectrum_points)?;
            let bij = verify_bijection(cat, &spec, &gens)?;
            let _ = writeln!(
                text,
                "topology: {} closed subset(s), {} violation(s)",
                topo.closed_family.len(),
                topo.violations.len()
            );
            let _ = writeln!(text, "{}", bij.summary());
            for c in &bij.pairs {
                let _ = writeln!(text, "  {} <- {}", c.support_labels, c.trace.join(", "));
            }
            let mut violations = topo.violations.clone();
            violations.extend(bij.violations.iter().cloned());
            Ok(Rendered {
                json: json!({
                    "points": points,
                    "topology": {"closed_subsets": topo.closed_family.iter().map(|&c| spec.describe_set(c)).collect::<Vec<_>>(), "violations": topo.violations},
                    "bijection": {
                        "summary": bij.summary(),
                        "generator_sets": bij.generator_sets,
                        "classes": bij.classes,
                        "subsets": bij.subsets,
                        "order_preserved": bij.order_preserved,
                        "pairs": bij.pairs,
                        "violations": bij.violations,
                    },
                }),
                text,
                dot: None,
                violations,
            })
        }
    }
}
