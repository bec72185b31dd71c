use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{enumerate_subspaces, odometer, pow_u128, solve_commutant, Matrix, Subspace};
use crate::modfd::algebra::Algebra;

/// A finite-dimensional left module: one `dim x dim` action matrix per algebra basis element.
#[derive(Clone)]
pub struct FdModule(Arc<ModuleData>);

struct ModuleData {
    algebra: Arc<Algebra>,
    dim: usize,
    action: Vec<Matrix>,
}

#[derive(Serialize)]
struct ModulePayload<'a> {
    algebra: &'a str,
    p: u8,
    dim: usize,
    action: Vec<&'a [u8]>,
}

impl FdModule {
    /// Builds a module and checks it against the structure constants.
    pub fn new(algebra: Arc<Algebra>, dim: usize, action: Vec<Matrix>) -> Result<Self> {
        let m = FdModule::trusted(algebra, dim, action)?;
        m.check_action()?;
        Ok(m)
    }

    pub(crate) fn trusted(algebra: Arc<Algebra>, dim: usize, action: Vec<Matrix>) -> Result<Self> {
        if action.len() != algebra.dim() {
            return Err(Error::ShapeMismatch(format!(
                "{} action matrices for an algebra of dimension {}",
                action.len(),
                algebra.dim()
            )));
        }
        if action
            .iter()
            .any(|a| a.rows() != dim || a.cols() != dim || a.modulus() != algebra.modulus())
        {
            return Err(Error::ShapeMismatch(format!("action matrices must be {dim}x{dim} over F_{}", algebra.modulus())));
        }
        Ok(FdModule(Arc::new(ModuleData { algebra, dim, action })))
    }

    pub fn zero(algebra: Arc<Algebra>) -> Self {
        let p = algebra.modulus();
        let action = vec![Matrix::zeros(0, 0, p); algebra.dim()];
        FdModule(Arc::new(ModuleData { algebra, dim: 0, action }))
    }

    /// The algebra acting on itself by left multiplication.
    pub fn regular(algebra: Arc<Algebra>) -> Self {
        let n = algebra.dim();
        let p = algebra.modulus();
        let action = (0..n)
            .map(|b| {
                let mut m = Matrix::zeros(n, n, p);
                for j in 0..n {
                    for k in 0..n {
                        m.set(k, j, algebra.constant(b, j, k));
                    }
                }
                m
            })
            .collect();
        FdModule(Arc::new(ModuleData { algebra, dim: n, action }))
    }

    /// Checks `A(e_i) A(e_j) = Σ_k c_ijk A(e_k)` for all basis pairs and that the unit acts as 1.
    pub fn check_action(&self) -> Result<()> {
        let alg = self.algebra();
        let d = self.dim();
        let p = alg.modulus();
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                let lhs = self.action(i).mul_unchecked(self.action(j));
                let mut rhs = Matrix::zeros(d, d, p);
                for (k, &c) in alg.product(i, j).iter().enumerate() {
                    if c != 0 {
                        rhs.axpy(c, self.action(k));
                    }
                }
                if lhs != rhs {
                    return Err(Error::InvalidModule(format!(
                        "action of {}·{} is not compatible with the structure constants",
                        alg.labels()[i],
                        alg.labels()[j]
                    )));
                }
            }
        }
        let mut unit = Matrix::zeros(d, d, p);
        for (k, &c) in alg.unit().iter().enumerate() {
            if c != 0 {
                unit.axpy(c, self.action(k));
            }
        }
        if unit != Matrix::identity(d, p) {
            return Err(Error::InvalidModule("unit does not act as the identity".into()));
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.0.algebra
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn modulus(&self) -> u8 {
        self.0.algebra.modulus()
    }

    pub fn action(&self, basis: usize) -> &Matrix {
        &self.0.action[basis]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.0.action
    }

    /// Dimension of `e M` for each idempotent `e` of the algebra.
    pub fn block_dims(&self) -> Vec<usize> {
        self.algebra()
            .idempotents()
            .iter()
            .map(|&e| self.action(e).rank())
            .collect()
    }

    /// Whether each idempotent acts as the projection onto a contiguous coordinate block,
    /// blocks in idempotent order.
    pub fn is_adapted(&self) -> bool {
        let p = self.modulus();
        let mut offset = 0;
        for (&e, d) in self.algebra().idempotents().iter().zip(self.block_dims()) {
            let mut expected = Matrix::zeros(self.dim(), self.dim(), p);
            for i in offset..offset + d {
                expected.set(i, i, 1);
            }
            if self.action(e) != &expected {
                return false;
            }
            offset += d;
        }
        true
    }

    /// Change of basis `T` (columns = new basis) making the module adapted.
    pub(crate) fn adapting_basis(&self) -> Matrix {
        let p = self.modulus();
        let mut cols = Vec::new();
        for &e in self.algebra().idempotents() {
            let image = Subspace::row_space(&self.action(e).transpose());
            cols.extend(image.basis_vectors());
        }
        Matrix::from_columns(self.dim(), p, &cols)
    }

    /// `T^{-1} A T` for every action matrix.
    pub(crate) fn conjugated(&self, t: &Matrix, t_inv: &Matrix) -> FdModule {
        let action = self
            .actions()
            .iter()
            .map(|a| t_inv.mul_unchecked(&a.mul_unchecked(t)))
            .collect();
        FdModule(Arc::new(ModuleData {
            algebra: self.algebra().clone(),
            dim: self.dim(),
            action,
        }))
    }

    /// Isomorphic copy whose basis is adapted to the idempotent decomposition.
    pub fn adapted(&self) -> FdModule {
        if self.is_adapted() {
            return self.clone();
        }
        let t = self.adapting_basis();
        let t_inv = t.inverse().expect("idempotents are complete");
        self.conjugated(&t, &t_inv)
    }

    pub fn payload(&self) -> serde_json::Value {
        let payload = ModulePayload {
            algebra: self.algebra().name(),
            p: self.modulus(),
            dim: self.dim(),
            action: self.actions().iter().map(|a| a.entries()).collect(),
        };
        serde_json::to_value(payload).expect("module payload serializes")
    }

    /// Cyclic submodule `R v`.
    pub fn cyclic_submodule(&self, v: &[u8]) -> Subspace {
        let vs: Vec<Vec<u8>> = self.actions().iter().map(|a| a.apply(v)).collect();
        Subspace::span(self.dim(), self.modulus(), &vs)
    }

    pub fn is_submodule(&self, u: &Subspace) -> bool {
        u.basis_vectors()
            .iter()
            .all(|v| self.actions().iter().all(|a| u.contains(&a.apply(v))))
    }

    /// Every submodule, found by closing under sums with cyclic submodules.
    /// Sorted by dimension, then basis.
    pub fn submodules(&self, cap: u64) -> Result<Vec<Subspace>> {
        let d = self.dim();
        let p = self.modulus();
        Error::check_cap(
            || format!("vectors of a module of dimension {d} over F_{p}"),
            pow_u128(p as u64, d as u64),
            cap,
        )?;
        let vectors = all_vectors(d, p);
        let zero = Subspace::zero(d, p);
        let mut seen: HashSet<Subspace> = HashSet::new();
        seen.insert(zero.clone());
        let mut queue = VecDeque::from([zero]);
        while let Some(u) = queue.pop_front() {
            for v in &vectors {
                if u.contains(v) {
                    continue;
                }
                let w = u.sum(&self.cyclic_submodule(v));
                if seen.insert(w.clone()) {
                    queue.push_back(w);
                }
            }
        }
        let mut out: Vec<Subspace> = seen.into_iter().collect();
        out.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    /// Submodules by filtering every subspace for stability.
    pub fn submodules_by_stability(&self, cap: u64) -> Result<Vec<Subspace>> {
        let mut out: Vec<Subspace> = enumerate_subspaces(self.dim(), self.modulus() as u32, cap)?
            .into_iter()
            .filter(|u| self.is_submodule(u))
            .collect();
        out.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    /// `0 -> U -> M -> M/U -> 0` for a submodule `U`, with bases read off the RREF of `U`.
    pub fn split_at(&self, u: &Subspace) -> (FdModule, Matrix, FdModule, Matrix) {
        let d = self.dim();
        let p = self.modulus();
        let k = u.dim();
        let pivots = u.pivots();
        let basis = u.basis_vectors();
        let embed = Matrix::from_columns(d, p, &basis);
        let free: Vec<usize> = (0..d).filter(|c| !pivots.contains(c)).collect();
        let mut proj = Matrix::zeros(d - k, d, p);
        for c in 0..d {
            let mut e = vec![0u8; d];
            e[c] = 1;
            let r = u.reduce(&e);
            for (i, &f) in free.iter().enumerate() {
                proj.set(i, c, r[f]);
            }
        }
        let lift = Matrix::from_columns(
            d,
            p,
            &free
                .iter()
                .map(|&f| {
                    let mut e = vec![0u8; d];
                    e[f] = 1;
                    e
                })
                .collect::<Vec<_>>(),
        );
        let mut sub_action = Vec::with_capacity(self.actions().len());
        let mut quot_action = Vec::with_capacity(self.actions().len());
        for a in self.actions() {
            let mut s = Matrix::zeros(k, k, p);
            for (j, v) in basis.iter().enumerate() {
                let img = a.apply(v);
                for (i, &pc) in pivots.iter().enumerate() {
                    s.set(i, j, img[pc]);
                }
            }
            sub_action.push(s);
            quot_action.push(proj.mul_unchecked(&a.mul_unchecked(&lift)));
        }
        let alg = self.algebra().clone();
        let sub = FdModule(Arc::new(ModuleData {
            algebra: alg.clone(),
            dim: k,
            action: sub_action,
        }));
        let quot = FdModule(Arc::new(ModuleData {
            algebra: alg,
            dim: d - k,
            action: quot_action,
        }));
        let (sub, embed) = if sub.is_adapted() {
            (sub, embed)
        } else {
            let t = sub.adapting_basis();
            let t_inv = t.inverse().expect("idempotents are complete");
            (sub.conjugated(&t, &t_inv), embed.mul_unchecked(&t))
        };
        let (quot, proj) = if quot.is_adapted() {
            (quot, proj)
        } else {
            let t = quot.adapting_basis();
            let t_inv = t.inverse().expect("idempotents are complete");
            (quot.conjugated(&t, &t_inv), t_inv.mul_unchecked(&proj))
        };
        (sub, embed, quot, proj)
    }

    /// Block-diagonal direct sum before adaptation.
    pub(crate) fn raw_sum(&self, other: &FdModule) -> FdModule {
        let action = self
            .actions()
            .iter()
            .zip(other.actions())
            .map(|(a, b)| a.block_diag(b))
            .collect();
        FdModule(Arc::new(ModuleData {
            algebra: self.algebra().clone(),
            dim: self.dim() + other.dim(),
            action,
        }))
    }

    /// Basis of `Hom_R(self, target)` as `target.dim x self.dim` matrices.
    pub fn hom_basis_matrices(&self, target: &FdModule) -> Result<Vec<Matrix>> {
        if !Arc::ptr_eq(self.algebra(), target.algebra()) && self.algebra().name() != target.algebra().name() {
            return Err(Error::BackendMismatch(format!(
                "modules over {} and {}",
                self.algebra().name(),
                target.algebra().name()
            )));
        }
        let constraints: Vec<(Matrix, Matrix)> = target
            .actions()
            .iter()
            .cloned()
            .zip(self.actions().iter().cloned())
            .collect();
        solve_commutant(self.modulus() as u32, target.dim(), self.dim(), &constraints)
    }
}

impl fmt::Debug for FdModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FdModule<{}>(dim {}, blocks {:?})", self.algebra().name(), self.dim(), self.block_dims())
    }
}

pub(crate) fn all_vectors(d: usize, p: u8) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut v = vec![0u8; d];
    loop {
        out.push(v.clone());
        if !odometer(&mut v, p) {
            break;
        }
    }
    out
}

/// Every `d x d` matrix over `F_p`, in odometer order.
pub(crate) fn all_matrices(d: usize, p: u8, cap: u64) -> Result<Vec<Matrix>> {
    Error::check_cap(
        || format!("{d}x{d} matrices over F_{p}"),
        pow_u128(p as u64, (d * d) as u64),
        cap,
    )?;
    Ok(all_vectors(d * d, p)
        .into_iter()
        .map(|v| Matrix::from_raw(d, d, p, v))
        .collect())
}
