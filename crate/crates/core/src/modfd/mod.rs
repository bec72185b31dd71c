//! Left modules over finite-dimensional `F_p`-algebras.

pub mod algebra;
pub mod canonical;
pub mod module;
pub mod quiver;

use std::collections::HashMap;
use std::ops::ControlFlow;
use std::sync::Arc;

use sha2::{Digest, Sha256};

use crate::category::{Biproduct, Caps, Category, SubobjectEntry};
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, odometer, pow_u128, Matrix, Subspace};

pub use algebra::{local_algebra_443, path_algebra, Algebra};
pub use canonical::{Bar, KeyForm, LineData, ModuleKey};
pub use module::FdModule;
pub use quiver::{Path, Quiver};

/// Builds the module of a quiver representation.
///
/// `dims[v]` is the space at vertex `v`; `arrows[i]` is the `dims[t] x dims[s]` matrix of arrow `i: s -> t`.
/// The basis is ordered vertex by vertex, so the result is adapted.
pub fn rep_to_module(algebra: &Arc<Algebra>, dims: &[usize], arrows: &[Matrix]) -> Result<FdModule> {
    let (q, paths) = match (algebra.quiver(), algebra.paths()) {
        (Some(q), Some(paths)) => (q, paths),
        _ => return Err(Error::BackendMismatch(format!("{} is not a path algebra", algebra.name()))),
    };
    if dims.len() != q.vertices || arrows.len() != q.arrows.len() {
        return Err(Error::ShapeMismatch(format!(
            "{} dims and {} arrow matrices for a quiver with {} vertices and {} arrows",
            dims.len(),
            arrows.len(),
            q.vertices,
            q.arrows.len()
        )));
    }
    let p = algebra.modulus();
    for (i, (&(s, t), m)) in q.arrows.iter().zip(arrows).enumerate() {
        if m.rows() != dims[t] || m.cols() != dims[s] || m.modulus() != p {
            return Err(Error::ShapeMismatch(format!(
                "arrow {} needs a {}x{} matrix over F_{p}, got {}x{}",
                i + 1,
                dims[t],
                dims[s],
                m.rows(),
                m.cols()
            )));
        }
    }
    let offsets: Vec<usize> = dims
        .iter()
        .scan(0, |acc, &d| {
            let o = *acc;
            *acc += d;
            Some(o)
        })
        .collect();
    let total: usize = dims.iter().sum();
    let embed = |from: usize, to: usize, m: &Matrix| {
        let mut out = Matrix::zeros(total, total, p);
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                out.set(offsets[to] + r, offsets[from] + c, m.get(r, c));
            }
        }
        out
    };
    let action = paths
        .iter()
        .map(|path| {
            if path.is_trivial() {
                return embed(path.source, path.source, &Matrix::identity(dims[path.source], p));
            }
            let mut m = Matrix::identity(dims[path.source], p);
            for &a in &path.arrows {
                m = arrows[a].mul_unchecked(&m);
            }
            embed(path.source, path.target, &m)
        })
        .collect();
    FdModule::trusted(algebra.clone(), total, action)
}

/// A module homomorphism, stored as a `target.dim x source.dim` matrix.
#[derive(Clone, Debug)]
pub struct ModuleMorphism {
    pub source: FdModule,
    pub target: FdModule,
    pub matrix: Matrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KeyStrategy {
    /// Interval decomposition for linearly oriented `A_n`, orbit keys otherwise.
    Auto,
    /// Always use orbit keys.
    Orbit,
}

/// The category of finite-dimensional modules over one algebra.
pub struct ModuleCategory {
    algebra: Arc<Algebra>,
    caps: Caps,
    line: Option<LineData>,
    interval_fast_path: bool,
    named: Vec<(String, FdModule)>,
    names: HashMap<ModuleKey, String>,
    fingerprint: String,
}

impl ModuleCategory {
    pub fn new(algebra: Algebra, caps: Caps) -> Result<Self> {
        Self::with_strategy(algebra, caps, KeyStrategy::Auto)
    }

    pub fn with_strategy(algebra: Algebra, caps: Caps, strategy: KeyStrategy) -> Result<Self> {
        let line = match strategy {
            KeyStrategy::Auto => LineData::of(&algebra),
            KeyStrategy::Orbit => None,
        };
        let mut hasher = Sha256::new();
        hasher.update(algebra.dim().to_le_bytes());
        for i in 0..algebra.dim() {
            for j in 0..algebra.dim() {
                hasher.update(algebra.product(i, j));
            }
        }
        let digest = hex::encode(&hasher.finalize()[..6]);
        let fingerprint = format!("modfd:{}:p{}:{digest}", algebra.name(), algebra.modulus());
        let mut cat = ModuleCategory {
            algebra: Arc::new(algebra),
            caps,
            line,
            interval_fast_path: true,
            named: Vec::new(),
            names: HashMap::new(),
            fingerprint,
        };
        cat.build_names()?;
        Ok(cat)
    }

    /// Path algebra of a quiver over `F_p`.
    pub fn quiver(q: &Quiver, p: u32, caps: Caps) -> Result<Self> {
        ModuleCategory::new(path_algebra(q, p)?, caps)
    }

    /// Linearly oriented `A_n` over `F_p`.
    pub fn a_n(n: usize, p: u32) -> Result<Self> {
        ModuleCategory::quiver(&Quiver::a_n(n)?, p, Caps::default())
    }

    /// Disables the interval construction so universes come from raw enumeration.
    pub fn without_fast_path(mut self) -> Self {
        self.interval_fast_path = false;
        self
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    /// Named modules: `P1, S1, ...` for quivers, `R` and `k` for the local algebra.
    pub fn named(&self, name: &str) -> Option<FdModule> {
        self.named.iter().find(|(n, _)| n == name).map(|(_, m)| m.clone())
    }

    pub fn named_objects(&self) -> &[(String, FdModule)] {
        &self.named
    }

    pub fn module(&self, dim: usize, action: Vec<Matrix>) -> Result<FdModule> {
        Ok(FdModule::new(self.algebra.clone(), dim, action)?.adapted())
    }

    pub fn rep(&self, dims: &[usize], arrows: &[Matrix]) -> Result<FdModule> {
        rep_to_module(&self.algebra, dims, arrows)
    }

    pub fn regular(&self) -> FdModule {
        FdModule::regular(self.algebra.clone()).adapted()
    }

    pub fn morphism(&self, source: &FdModule, target: &FdModule, matrix: Matrix) -> Result<ModuleMorphism> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} matrix for a map of dimension {} -> {}",
                matrix.rows(),
                matrix.cols(),
                source.dim(),
                target.dim()
            )));
        }
        for (a, b) in target.actions().iter().zip(source.actions()) {
            if a.mul_unchecked(&matrix) != matrix.mul_unchecked(b) {
                return Err(Error::InvalidModule("matrix does not intertwine the actions".into()));
            }
        }
        Ok(ModuleMorphism {
            source: source.clone(),
            target: target.clone(),
            matrix,
        })
    }

    /// Basis of `Hom(m, n)` as morphisms.
    pub fn hom_basis(&self, m: &FdModule, n: &FdModule) -> Result<Vec<ModuleMorphism>> {
        Ok(m.hom_basis_matrices(n)?
            .into_iter()
            .map(|matrix| ModuleMorphism {
                source: m.clone(),
                target: n.clone(),
                matrix,
            })
            .collect())
    }

    fn build_names(&mut self) -> Result<()> {
        let alg = self.algebra.clone();
        let p = alg.modulus();
        let mut named = Vec::new();
        if let Some(q) = alg.quiver() {
            let paths = alg.paths().expect("quiver algebras keep their paths");
            let regular = FdModule::regular(alg.clone());
            for v in 0..q.vertices {
                let cols: Vec<Vec<u8>> = paths
                    .iter()
                    .enumerate()
                    .filter(|(_, path)| path.source == v)
                    .map(|(j, _)| {
                        let mut e = vec![0u8; alg.dim()];
                        e[j] = 1;
                        e
                    })
                    .collect();
                let u = Subspace::span(alg.dim(), p, &cols);
                named.push((format!("P{}", v + 1), regular.split_at(&u).0));
            }
            for v in 0..q.vertices {
                let mut dims = vec![0; q.vertices];
                dims[v] = 1;
                let arrows: Vec<Matrix> = q.arrows.iter().map(|&(s, t)| Matrix::zeros(dims[t], dims[s], p)).collect();
                named.push((format!("S{}", v + 1), rep_to_module(&alg, &dims, &arrows)?));
            }
        } else {
            named.push(("R".to_string(), FdModule::regular(alg.clone()).adapted()));
            if alg.idempotents().len() == 1 {
                // the residue field: only the unit acts nontrivially
                let action = (0..alg.dim())
                    .map(|b| Matrix::from_raw(1, 1, p, vec![alg.unit()[b]]))
                    .collect();
                let k = FdModule::trusted(alg.clone(), 1, action)?;
                if k.check_action().is_ok() {
                    named.push(("k".to_string(), k));
                }
            }
        }
        // first name wins, so P1 keeps its name when it is also S1
        for (name, m) in &named {
            let key = self.iso_key(m)?;
            self.names.entry(key).or_insert_with(|| name.clone());
        }
        self.named = named;
        Ok(())
    }

    fn bar_name(&self, line: &LineData, bar: &Bar) -> String {
        let key = ModuleKey {
            length: (bar.hi - bar.lo + 1) as usize,
            form: KeyForm::Bars(vec![Bar { mult: 1, ..*bar }]),
        };
        self.names.get(&key).cloned().unwrap_or_else(|| {
            format!("[{}..{}]", line.order[bar.lo as usize] + 1, line.order[bar.hi as usize] + 1)
        })
    }

    fn interval_module(&self, line: &LineData, lo: usize, hi: usize) -> Result<FdModule> {
        let q = self.algebra.quiver().expect("line data implies a quiver");
        let p = self.algebra.modulus();
        let mut dims = vec![0; q.vertices];
        for &v in &line.order[lo..=hi] {
            dims[v] = 1;
        }
        let arrows: Vec<Matrix> = q
            .arrows
            .iter()
            .map(|&(s, t)| {
                let mut m = Matrix::zeros(dims[t], dims[s], p);
                if dims[t] == 1 && dims[s] == 1 {
                    m.set(0, 0, 1);
                }
                m
            })
            .collect();
        rep_to_module(&self.algebra, &dims, &arrows)
    }

    fn enumerate_intervals(&self, line: &LineData, bound: usize) -> Result<Vec<FdModule>> {
        let n = line.positions();
        let mut intervals = Vec::new();
        for lo in 0..n {
            for hi in lo..n {
                intervals.push((hi - lo + 1, self.interval_module(line, lo, hi)?));
            }
        }
        let mut out = vec![FdModule::zero(self.algebra.clone())];
        // multisets as non-decreasing index sequences
        fn go(
            start: usize,
            budget: usize,
            current: &FdModule,
            intervals: &[(usize, FdModule)],
            out: &mut Vec<FdModule>,
            visited: &mut u64,
            cap: u64,
        ) -> Result<()> {
            for i in start..intervals.len() {
                let (len, m) = &intervals[i];
                if *len > budget {
                    continue;
                }
                *visited += 1;
                Error::check_cap(|| "interval-module sums".into(), *visited as u128, cap)?;
                let sum = current.raw_sum(m).adapted();
                out.push(sum.clone());
                go(i, budget - len, &sum, intervals, out, visited, cap)?;
            }
            Ok(())
        }
        let mut visited = 0;
        go(0, bound, &out[0].clone(), &intervals, &mut out, &mut visited, self.caps.universe)?;
        Ok(out)
    }

    fn enumerate_reps(&self, bound: usize) -> Result<Vec<FdModule>> {
        let q = self.algebra.quiver().expect("quiver algebra");
        let p = self.algebra.modulus();
        let mut out = Vec::new();
        let mut visited: u128 = 0;
        for dims in dimension_vectors(q.vertices, bound) {
            let entries: usize = q.arrows.iter().map(|&(s, t)| dims[s] * dims[t]).sum();
            visited += pow_u128(p as u64, entries as u64);
            Error::check_cap(
                || format!("representations of {} with dimension vector {dims:?}", q.name),
                visited,
                self.caps.universe,
            )?;
            let mut digits = vec![0u8; entries];
            loop {
                let mut offset = 0;
                let arrows: Vec<Matrix> = q
                    .arrows
                    .iter()
                    .map(|&(s, t)| {
                        let n = dims[s] * dims[t];
                        let m = Matrix::from_raw(dims[t], dims[s], p, digits[offset..offset + n].to_vec());
                        offset += n;
                        m
                    })
                    .collect();
                out.push(rep_to_module(&self.algebra, &dims, &arrows)?);
                if !odometer(&mut digits, p) {
                    break;
                }
            }
        }
        Ok(out)
    }

    /// Backtracking over actions of the non-idempotent basis elements, pruned by the relations.
    fn enumerate_actions(&self, bound: usize) -> Result<Vec<FdModule>> {
        let alg = &self.algebra;
        let p = alg.modulus();
        let free: Vec<usize> = (0..alg.dim()).filter(|b| !alg.idempotents().contains(b)).collect();
        let mut out = Vec::new();
        let mut visited: u128 = 0;
        for dims in dimension_vectors(alg.idempotents().len(), bound) {
            let d: usize = dims.iter().sum();
            let mut action: Vec<Option<Matrix>> = vec![None; alg.dim()];
            let mut offset = 0;
            for (&e, &de) in alg.idempotents().iter().zip(&dims) {
                let mut m = Matrix::zeros(d, d, p);
                for i in offset..offset + de {
                    m.set(i, i, 1);
                }
                action[e] = Some(m);
                offset += de;
            }
            let candidates = crate::modfd::module::all_matrices(d, p, self.caps.universe)?;
            self.assign(&free, 0, &mut action, &candidates, &mut out, &mut visited, d)?;
        }
        Ok(out)
    }

    #[allow(clippy::too_many_arguments)]
    fn assign(
        &self,
        free: &[usize],
        level: usize,
        action: &mut Vec<Option<Matrix>>,
        candidates: &[Matrix],
        out: &mut Vec<FdModule>,
        visited: &mut u128,
        d: usize,
    ) -> Result<()> {
        if level == free.len() {
            let full: Vec<Matrix> = action.iter().map(|a| a.clone().expect("all assigned")).collect();
            let m = FdModule::trusted(self.algebra.clone(), d, full)?;
            if m.check_action().is_ok() {
                out.push(m);
            }
            return Ok(());
        }
        for c in candidates {
            *visited += 1;
            Error::check_cap(
                || format!("module structures of dimension {d} over {}", self.algebra.name()),
                *visited,
                self.caps.universe,
            )?;
            action[free[level]] = Some(c.clone());
            if self.consistent(action) {
                self.assign(free, level + 1, action, candidates, out, visited, d)?;
            }
        }
        action[free[level]] = None;
        Ok(())
    }

    /// Checks every structure relation whose terms are all assigned.
    fn consistent(&self, action: &[Option<Matrix>]) -> bool {
        let alg = &self.algebra;
        for i in 0..alg.dim() {
            let Some(ai) = &action[i] else { continue };
            for j in 0..alg.dim() {
                let Some(aj) = &action[j] else { continue };
                let prod = alg.product(i, j);
                let mut rhs = Matrix::zeros(ai.rows(), ai.cols(), alg.modulus());
                let mut complete = true;
                for (k, &c) in prod.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    match &action[k] {
                        Some(ak) => rhs.axpy(c, ak),
                        None => {
                            complete = false;
                            break;
                        }
                    }
                }
                if complete && ai.mul_unchecked(aj) != rhs {
                    return false;
                }
            }
        }
        true
    }

    fn split_entry(&self, parent: &FdModule, u: Subspace) -> SubobjectEntry<Self> {
        let (sub, embed, quotient, proj) = parent.split_at(&u);
        SubobjectEntry {
            carrier: u,
            embed: ModuleMorphism {
                source: sub.clone(),
                target: parent.clone(),
                matrix: embed,
            },
            sub,
            quotient: quotient.clone(),
            proj: ModuleMorphism {
                source: parent.clone(),
                target: quotient,
                matrix: proj,
            },
        }
    }
}

/// All vectors of `n` nonnegative entries with sum `<= bound`, by total then lexicographically.
pub(crate) fn dimension_vectors(n: usize, bound: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn go(i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for d in 0..=left {
            cur[i] = d;
            go(i + 1, left - d, cur, out);
        }
        cur[i] = 0;
    }
    go(0, bound, &mut vec![0; n], &mut out);
    out.sort_by_key(|v| (v.iter().sum::<usize>(), v.clone()));
    out
}

impl Category for ModuleCategory {
    type Object = FdModule;
    type Morphism = ModuleMorphism;
    type Carrier = Subspace;
    type Key = ModuleKey;

    fn fingerprint(&self) -> String {
        self.fingerprint.clone()
    }

    fn caps(&self) -> &Caps {
        &self.caps
    }

    fn zero_object(&self) -> FdModule {
        FdModule::zero(self.algebra.clone())
    }

    fn length(&self, m: &FdModule) -> usize {
        // over a basic algebra with simple modules of dimension one, length = dimension
        m.dim()
    }

    fn iso_key(&self, m: &FdModule) -> Result<ModuleKey> {
        if let Some(line) = &self.line {
            return Ok(ModuleKey {
                length: m.dim(),
                form: KeyForm::Bars(line.bars(m)),
            });
        }
        canonical::orbit_key(&m.adapted(), self.caps.orbit)
    }

    fn describe(&self, key: &ModuleKey) -> String {
        if key.length == 0 {
            return "0".into();
        }
        if let Some(name) = self.names.get(key) {
            return name.clone();
        }
        match (&key.form, &self.line) {
            (KeyForm::Bars(bars), Some(line)) => bars
                .iter()
                .map(|b| {
                    let name = self.bar_name(line, b);
                    if b.mult > 1 {
                        format!("{name}^{}", b.mult)
                    } else {
                        name
                    }
                })
                .collect::<Vec<_>>()
                .join("⊕"),
            (KeyForm::Orbit { dims, entries }, _) => {
                let sep = if self.algebra.modulus() < 10 { "" } else { "," };
                let body: Vec<String> = entries.iter().map(|e| e.to_string()).collect();
                let dims: Vec<String> = dims.iter().map(|d| d.to_string()).collect();
                format!("M({})[{}]", dims.join(","), body.join(sep))
            }
            (KeyForm::Bars(_), None) => format!("{key:?}"),
        }
    }

    fn payload(&self, m: &FdModule) -> serde_json::Value {
        m.payload()
    }

    fn source<'a>(&self, f: &'a ModuleMorphism) -> &'a FdModule {
        &f.source
    }

    fn target<'a>(&self, f: &'a ModuleMorphism) -> &'a FdModule {
        &f.target
    }

    fn identity(&self, m: &FdModule) -> ModuleMorphism {
        ModuleMorphism {
            source: m.clone(),
            target: m.clone(),
            matrix: Matrix::identity(m.dim(), m.modulus()),
        }
    }

    fn zero_morphism(&self, from: &FdModule, to: &FdModule) -> ModuleMorphism {
        ModuleMorphism {
            source: from.clone(),
            target: to.clone(),
            matrix: Matrix::zeros(to.dim(), from.dim(), from.modulus()),
        }
    }

    fn compose(&self, g: &ModuleMorphism, f: &ModuleMorphism) -> Result<ModuleMorphism> {
        Ok(ModuleMorphism {
            source: f.source.clone(),
            target: g.target.clone(),
            matrix: g.matrix.try_mul(&f.matrix)?,
        })
    }

    fn same_morphism(&self, f: &ModuleMorphism, g: &ModuleMorphism) -> bool {
        f.matrix == g.matrix
    }

    fn is_zero_morphism(&self, f: &ModuleMorphism) -> bool {
        f.matrix.is_zero()
    }

    fn is_monic(&self, f: &ModuleMorphism) -> Result<bool> {
        Ok(f.matrix.rank() == f.source.dim())
    }

    fn hom_count(&self, from: &FdModule, to: &FdModule) -> Result<u128> {
        let basis = from.hom_basis_matrices(to)?;
        Ok(pow_u128(from.modulus() as u64, basis.len() as u64))
    }

    fn try_for_each_hom<F>(&self, from: &FdModule, to: &FdModule, mut visit: F) -> Result<ControlFlow<()>>
    where
        F: FnMut(&ModuleMorphism) -> ControlFlow<()>,
    {
        let basis = from.hom_basis_matrices(to)?;
        let p = from.modulus();
        let size = pow_u128(p as u64, basis.len() as u64);
        Error::check_cap(
            || format!("Hom(M, N) with dim M = {}, dim N = {} ({} basis maps)", from.dim(), to.dim(), basis.len()),
            size,
            self.caps.hom,
        )?;
        let mut f = self.zero_morphism(from, to);
        let mut digits = vec![0u8; basis.len()];
        loop {
            if visit(&f).is_break() {
                return Ok(ControlFlow::Break(()));
            }
            // odometer step: digit i goes up by one (add B_i) and lower digits wrap (subtract (p-1) B_j)
            let mut i = 0;
            loop {
                if i == digits.len() {
                    return Ok(ControlFlow::Continue(()));
                }
                digits[i] += 1;
                if digits[i] < p {
                    f.matrix.axpy(1, &basis[i]);
                    break;
                }
                digits[i] = 0;
                f.matrix.axpy(1, &basis[i]);
                i += 1;
            }
        }
    }

    fn kernel(&self, f: &ModuleMorphism) -> Result<SubobjectEntry<Self>> {
        Ok(self.split_entry(&f.source, kernel_basis(&f.matrix)))
    }

    fn image(&self, f: &ModuleMorphism) -> Result<SubobjectEntry<Self>> {
        let image = Subspace::row_space(&f.matrix.transpose());
        Ok(self.split_entry(&f.target, image))
    }

    fn subobjects(&self, m: &FdModule) -> Result<Vec<SubobjectEntry<Self>>> {
        Ok(m.submodules(self.caps.subspace)?
            .into_iter()
            .map(|u| self.split_entry(m, u))
            .collect())
    }

    fn carrier_length(&self, c: &Subspace) -> usize {
        c.dim()
    }

    fn intersection_length(&self, a: &Subspace, b: &Subspace) -> usize {
        a.intersection(b).dim()
    }

    fn direct_sum(&self, a: &FdModule, b: &FdModule) -> Result<Biproduct<Self>> {
        if a.algebra().name() != b.algebra().name() {
            return Err(Error::BackendMismatch("direct sum across algebras".into()));
        }
        let p = a.modulus();
        let (da, db) = (a.dim(), b.dim());
        let raw = a.raw_sum(b);
        let (object, t, t_inv) = if raw.is_adapted() {
            let id = Matrix::identity(da + db, p);
            (raw, id.clone(), id)
        } else {
            let t = raw.adapting_basis();
            let t_inv = t.inverse().expect("idempotents are complete");
            (raw.conjugated(&t, &t_inv), t, t_inv)
        };
        let mut ia = Matrix::zeros(da + db, da, p);
        let mut ib = Matrix::zeros(da + db, db, p);
        for i in 0..da {
            ia.set(i, i, 1);
        }
        for i in 0..db {
            ib.set(da + i, i, 1);
        }
        let pa = ia.transpose();
        let pb = ib.transpose();
        let mk = |s: &FdModule, tg: &FdModule, m: Matrix| ModuleMorphism {
            source: s.clone(),
            target: tg.clone(),
            matrix: m,
        };
        Ok(Biproduct {
            inj: [
                mk(a, &object, t_inv.mul_unchecked(&ia)),
                mk(b, &object, t_inv.mul_unchecked(&ib)),
            ],
            proj: [
                mk(&object, a, pa.mul_unchecked(&t)),
                mk(&object, b, pb.mul_unchecked(&t)),
            ],
            object,
        })
    }

    fn enumerate_objects(&self, bound: usize) -> Result<Vec<FdModule>> {
        match (&self.line, self.interval_fast_path, self.algebra.quiver()) {
            (Some(line), true, _) => self.enumerate_intervals(line, bound),
            (_, _, Some(_)) => self.enumerate_reps(bound),
            _ => self.enumerate_actions(bound),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> ModuleCategory {
        ModuleCategory::a_n(2, 2).unwrap()
    }

    #[test]
    fn projectives_and_simples_of_a2() {
        let cat = a2();
        let p1 = cat.named("P1").unwrap();
        let p2 = cat.named("P2").unwrap();
        let s2 = cat.named("S2").unwrap();
        assert_eq!(p1.block_dims(), vec![1, 0]);
        assert_eq!(p2.block_dims(), vec![1, 1]);
        assert_eq!(s2.block_dims(), vec![0, 1]);
        assert_eq!(cat.describe(&cat.iso_key(&cat.named("S1").unwrap()).unwrap()), "P1");
        assert_eq!(cat.describe(&cat.iso_key(&s2).unwrap()), "S2");
    }

    #[test]
    fn rep_to_module_examples() {
        let cat = a2();
        let p = 2;
        let b = cat.rep(&[1, 1], &[Matrix::identity(1, p)]).unwrap();
        assert_eq!(b.dim(), 2);
        b.check_action().unwrap();
        assert!(cat.is_isomorphic(&b, &cat.named("P2").unwrap()).unwrap());
        let c = cat.rep(&[0, 1], &[Matrix::zeros(0, 1, p)]).unwrap();
        assert_eq!(c.dim(), 1);
        let z = cat.rep(&[0, 0], &[Matrix::zeros(0, 0, p)]).unwrap();
        assert_eq!(cat.length(&z), 0);
        assert!(cat.rep(&[1, 1], &[Matrix::zeros(2, 1, p)]).is_err());
    }

    #[test]
    fn hom_dimensions() {
        let cat = a2();
        let p1 = cat.named("P1").unwrap();
        let p2 = cat.named("P2").unwrap();
        assert_eq!(cat.hom_basis(&p1, &p2).unwrap().len(), 1);
        assert_eq!(cat.hom_basis(&p2, &p1).unwrap().len(), 0);
        assert_eq!(cat.hom_basis(&p2, &p2).unwrap().len(), 1);
        assert!(cat.hom_basis(&cat.zero_object(), &p2).unwrap().is_empty());
    }

    #[test]
    fn subobjects_of_p2() {
        let cat = a2();
        let p2 = cat.named("P2").unwrap();
        let subs = cat.subobjects(&p2).unwrap();
        let names: Vec<String> = subs.iter().map(|e| cat.describe(&cat.iso_key(&e.sub).unwrap())).collect();
        assert_eq!(names, vec!["0", "P1", "P2"]);
        for e in &subs {
            assert!(cat.compose(&e.proj, &e.embed).unwrap().matrix.is_zero());
            assert_eq!(e.sub.dim() + e.quotient.dim(), 2);
            e.sub.check_action().unwrap();
            e.quotient.check_action().unwrap();
        }
    }

    #[test]
    fn hom_enumeration_visits_every_map() {
        let cat = a2();
        let m = cat.named("P1").unwrap();
        let m2 = cat.direct_sum(&m, &m).unwrap().object;
        let homs = cat.homs(&m2, &m2).unwrap();
        assert_eq!(homs.len(), 16);
        let distinct: std::collections::BTreeSet<_> = homs.iter().map(|f| f.matrix.clone()).collect();
        assert_eq!(distinct.len(), 16);
    }

    #[test]
    fn biproduct_maps_are_consistent() {
        let cat = ModuleCategory::a_n(3, 3).unwrap();
        let a = cat.named("P3").unwrap();
        let b = cat.named("S2").unwrap();
        let s = cat.direct_sum(&a, &b).unwrap();
        assert!(s.object.is_adapted());
        s.object.check_action().unwrap();
        let id_a = cat.compose(&s.proj[0], &s.inj[0]).unwrap();
        assert_eq!(id_a.matrix, Matrix::identity(a.dim(), 3));
        assert!(cat.compose(&s.proj[1], &s.inj[0]).unwrap().matrix.is_zero());
        for f in s.inj.iter().chain(&s.proj) {
            cat.morphism(&f.source, &f.target, f.matrix.clone()).unwrap();
        }
    }

    #[test]
    fn fast_path_matches_raw_enumeration() {
        for (n, bound) in [(1, 3), (2, 3), (3, 2)] {
            let fast = ModuleCategory::a_n(n, 2).unwrap();
            let slow = ModuleCategory::a_n(n, 2).unwrap().without_fast_path();
            let keys = |c: &ModuleCategory| {
                let mut k: Vec<ModuleKey> = c
                    .enumerate_objects(bound)
                    .unwrap()
                    .iter()
                    .map(|m| c.iso_key(m).unwrap())
                    .collect();
                k.sort();
                k.dedup();
                k
            };
            assert_eq!(keys(&fast), keys(&slow), "A{n} bound {bound}");
        }
    }

    #[test]
    fn barcode_agrees_with_orbit_keys() {
        let bars = ModuleCategory::a_n(2, 2).unwrap().without_fast_path();
        let orbit =
            ModuleCategory::with_strategy(path_algebra(&Quiver::a_n(2).unwrap(), 2).unwrap(), Caps::default(), KeyStrategy::Orbit)
                .unwrap();
        let objs = bars.enumerate_objects(3).unwrap();
        for a in &objs {
            for b in &objs {
                assert_eq!(
                    bars.iso_key(a).unwrap() == bars.iso_key(b).unwrap(),
                    orbit.iso_key(a).unwrap() == orbit.iso_key(b).unwrap()
                );
            }
        }
    }

    #[test]
    fn local_algebra_modules() {
        let cat = ModuleCategory::new(local_algebra_443(2).unwrap(), Caps::default()).unwrap();
        let r = cat.named("R").unwrap();
        assert_eq!(r.dim(), 3);
        let objs = cat.enumerate_objects(2).unwrap();
        let mut keys: Vec<_> = objs.iter().map(|m| cat.iso_key(m).unwrap()).collect();
        keys.sort();
        keys.dedup();
        // 0, k, k^2, and the uniserial modules F[t]/t^2 for each line of actions (x:y ratio): 3 over F_2
        assert_eq!(keys.len(), 6);
    }

    #[test]
    fn dimension_vector_order() {
        assert_eq!(dimension_vectors(2, 1), vec![vec![0, 0], vec![0, 1], vec![1, 0]]);
        assert_eq!(dimension_vectors(3, 2).len(), 10);
    }
}
