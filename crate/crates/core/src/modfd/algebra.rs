use crate::error::{Error, Result};
use crate::linalg::{add, check_prime, mul};
use crate::modfd::quiver::{Path, Quiver};

/// A finite-dimensional associative unital F_p-algebra given by structure constants
/// `e_i · e_j = Σ_k c[i][j][k] e_k`.
#[derive(Clone, Debug)]
pub struct Algebra {
    name: String,
    p: u8,
    dim: usize,
    labels: Vec<String>,
    structure: Vec<u8>,
    unit: Vec<u8>,
    idempotents: Vec<usize>,
    generators: Vec<usize>,
    quiver: Option<(Quiver, Vec<Path>)>,
}

impl Algebra {
    /// Builds and validates an algebra.
    ///
    /// `idempotents` lists basis elements forming a complete set of orthogonal
    /// idempotents; `generators` lists basis elements whose actions, together with
    /// the idempotents, determine a module structure.
    pub fn new(
        name: impl Into<String>,
        p: u32,
        labels: Vec<String>,
        structure: Vec<u32>,
        unit: Vec<u32>,
        idempotents: Vec<usize>,
        generators: Vec<usize>,
    ) -> Result<Self> {
        let p = check_prime(p)?;
        let dim = labels.len();
        if structure.len() != dim * dim * dim || unit.len() != dim {
            return Err(Error::InvalidAlgebra(format!(
                "dimension {dim} needs {} structure constants and {dim} unit coefficients",
                dim * dim * dim
            )));
        }
        if idempotents.iter().chain(&generators).any(|&i| i >= dim) {
            return Err(Error::InvalidAlgebra("basis index out of range".into()));
        }
        let alg = Algebra {
            name: name.into(),
            p,
            dim,
            labels,
            structure: structure.into_iter().map(|c| (c % p as u32) as u8).collect(),
            unit: unit.into_iter().map(|c| (c % p as u32) as u8).collect(),
            idempotents,
            generators,
            quiver: None,
        };
        alg.check_associativity()?;
        alg.check_unit()?;
        alg.check_idempotents()?;
        Ok(alg)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn modulus(&self) -> u8 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[u8] {
        &self.unit
    }

    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn quiver(&self) -> Option<&Quiver> {
        self.quiver.as_ref().map(|(q, _)| q)
    }

    pub fn paths(&self) -> Option<&[Path]> {
        self.quiver.as_ref().map(|(_, p)| p.as_slice())
    }

    #[inline]
    pub fn constant(&self, i: usize, j: usize, k: usize) -> u8 {
        self.structure[(i * self.dim + j) * self.dim + k]
    }

    /// Coefficients of `e_i · e_j`.
    pub fn product(&self, i: usize, j: usize) -> &[u8] {
        let start = (i * self.dim + j) * self.dim;
        &self.structure[start..start + self.dim]
    }

    /// Product of two arbitrary elements given by coefficient vectors.
    pub fn multiply(&self, a: &[u8], b: &[u8]) -> Vec<u8> {
        let p = self.p;
        let mut out = vec![0u8; self.dim];
        for (i, &ai) in a.iter().enumerate().filter(|(_, &x)| x != 0) {
            for (j, &bj) in b.iter().enumerate().filter(|(_, &x)| x != 0) {
                let s = mul(ai, bj, p);
                for (o, &c) in out.iter_mut().zip(self.product(i, j)) {
                    *o = add(*o, mul(s, c, p), p);
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u8> {
        let mut v = vec![0u8; self.dim];
        v[i] = 1;
        v
    }

    /// Checks `(e_i e_j) e_k = e_i (e_j e_k)` on every basis triple.
    pub fn check_associativity(&self) -> Result<()> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let ei = self.basis_vector(i);
                    let ek = self.basis_vector(k);
                    let left = self.multiply(self.product(i, j), &ek);
                    let right = self.multiply(&ei, self.product(j, k));
                    if left != right {
                        return Err(Error::InvalidAlgebra(format!(
                            "associativity fails on ({}, {}, {})",
                            self.labels[i], self.labels[j], self.labels[k]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn check_unit(&self) -> Result<()> {
        for i in 0..self.dim {
            let ei = self.basis_vector(i);
            if self.multiply(&self.unit, &ei) != ei || self.multiply(&ei, &self.unit) != ei {
                return Err(Error::InvalidAlgebra(format!(
                    "unit does not act as identity on {}",
                    self.labels[i]
                )));
            }
        }
        Ok(())
    }

    fn check_idempotents(&self) -> Result<()> {
        let p = self.p;
        let mut total = vec![0u8; self.dim];
        for &a in &self.idempotents {
            for &b in &self.idempotents {
                let expected = if a == b { self.basis_vector(a) } else { vec![0; self.dim] };
                if self.product(a, b) != expected.as_slice() {
                    return Err(Error::InvalidAlgebra("idempotents are not orthogonal".into()));
                }
            }
            total[a] = add(total[a], 1, p);
        }
        if total != self.unit {
            return Err(Error::InvalidAlgebra("idempotents do not sum to the unit".into()));
        }
        Ok(())
    }
}

/// Path algebra of an acyclic quiver: basis = paths, product = concatenation or zero.
///
/// The product `q · r` means "first `r`, then `q`".
pub fn path_algebra(q: &Quiver, p: u32) -> Result<Algebra> {
    let paths = q.paths();
    let dim = paths.len();
    let index = |path: &Path| paths.iter().position(|x| x == path);
    let mut structure = vec![0u32; dim * dim * dim];
    for (i, a) in paths.iter().enumerate() {
        for (j, b) in paths.iter().enumerate() {
            if b.target != a.source {
                continue;
            }
            let mut arrows = b.arrows.clone();
            arrows.extend_from_slice(&a.arrows);
            let prod = Path {
                source: b.source,
                target: a.target,
                arrows,
            };
            let k = index(&prod).ok_or(Error::CyclicQuiver)?;
            structure[(i * dim + j) * dim + k] = 1;
        }
    }
    let unit: Vec<u32> = paths.iter().map(|x| x.is_trivial() as u32).collect();
    let labels = paths.iter().map(|x| path_label(x)).collect();
    let idempotents: Vec<usize> = (0..q.vertices).collect();
    let generators: Vec<usize> = (q.vertices..q.vertices + q.arrows.len()).collect();
    let mut alg = Algebra::new(q.name.clone(), p, labels, structure, unit, idempotents, generators)?;
    alg.quiver = Some((q.clone(), paths));
    Ok(alg)
}

fn path_label(path: &Path) -> String {
    if path.is_trivial() {
        return format!("e{}", path.source + 1);
    }
    path.arrows
        .iter()
        .rev()
        .map(|a| format!("a{}", a + 1))
        .collect::<Vec<_>>()
        .join("·")
}

/// The commutative local algebra `F_p[x, y]/(x², xy, y²)` with basis `{1, x, y}`.
pub fn local_algebra_443(p: u32) -> Result<Algebra> {
    let dim = 3;
    let mut structure = vec![0u32; 27];
    let mut set = |i: usize, j: usize, k: usize| structure[(i * dim + j) * dim + k] = 1;
    set(0, 0, 0);
    set(0, 1, 1);
    set(1, 0, 1);
    set(0, 2, 2);
    set(2, 0, 2);
    Algebra::new(
        "local443",
        p,
        vec!["1".into(), "x".into(), "y".into()],
        structure,
        vec![1, 0, 0],
        vec![0],
        vec![1, 2],
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_algebra_dimensions() {
        assert_eq!(path_algebra(&Quiver::a_n(1).unwrap(), 2).unwrap().dim(), 1);
        let a2 = path_algebra(&Quiver::a_n(2).unwrap(), 2).unwrap();
        assert_eq!(a2.dim(), 3);
        assert_eq!(a2.labels(), &["e1", "e2", "a1"]);
        assert_eq!(path_algebra(&Quiver::a_n(3).unwrap(), 3).unwrap().dim(), 6);
    }

    #[test]
    fn local_algebra_relations() {
        let r = local_algebra_443(2).unwrap();
        assert_eq!(r.product(1, 2), &[0, 0, 0]);
        assert_eq!(r.product(0, 1), &[0, 1, 0]);
        r.check_associativity().unwrap();
        r.check_unit().unwrap();
    }

    #[test]
    fn rejects_non_associative_constants() {
        // e0·e0 = e1, everything else zero except unit rows: not associative with unit e0
        let mut c = vec![0u32; 8];
        c[0] = 1;
        c[1] = 1;
        let err = Algebra::new("bad", 2, vec!["a".into(), "b".into()], c, vec![1, 0], vec![0], vec![]);
        assert!(err.is_err());
    }
}
