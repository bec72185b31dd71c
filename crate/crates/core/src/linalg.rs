//! Exact linear algebra over small prime fields.
//!
//! Everything here works with residues stored as `u8`, so the modulus is
//! limited to primes below 256. Matrices act on column vectors; subspaces
//! are stored as the row space of a matrix in reduced row-echelon form,
//! which makes `==` on [`Subspace`] the same thing as equality of subspaces.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default bound on `p^d` for subspace enumeration.
pub const DEFAULT_SUBSPACE_CAP: u64 = 1 << 16;

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Validates a modulus for use with this module.
pub fn check_prime(p: u32) -> Result<u8> {
    if !is_prime(p) || p > 251 {
        return Err(Error::NotPrime(p));
    }
    Ok(p as u8)
}

#[inline]
pub(crate) fn add(a: u8, b: u8, p: u8) -> u8 {
    ((a as u16 + b as u16) % p as u16) as u8
}

#[inline]
pub(crate) fn sub(a: u8, b: u8, p: u8) -> u8 {
    ((a as u16 + p as u16 - b as u16) % p as u16) as u8
}

#[inline]
pub(crate) fn mul(a: u8, b: u8, p: u8) -> u8 {
    ((a as u16 * b as u16) % p as u16) as u8
}

pub(crate) fn inv(a: u8, p: u8) -> u8 {
    debug_assert!(a % p != 0);
    // a^(p-2)
    let mut result = 1u8;
    let mut base = a % p;
    let mut e = p as u32 - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = mul(result, base, p);
        }
        base = mul(base, base, p);
        e >>= 1;
    }
    result
}

/// `p^e` as a `u128`, saturating.
pub(crate) fn pow_u128(p: u64, e: u64) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..e {
        acc = acc.saturating_mul(p as u128);
    }
    acc
}

/// Dense matrix over F_p in row-major order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    p: u8,
    data: Vec<u8>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, p: u32, entries: Vec<u32>) -> Result<Self> {
        let p = check_prime(p)?;
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {}x{} matrix",
                entries.len(),
                rows,
                cols
            )));
        }
        let data = entries.into_iter().map(|e| (e % p as u32) as u8).collect();
        Ok(Matrix { rows, cols, p, data })
    }

    /// Builds a matrix from nested rows; panics on ragged input.
    pub fn from_rows(p: u32, rows: &[&[u32]]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Matrix::new(r, c, p, rows.iter().flat_map(|row| row.iter().copied()).collect())
    }

    pub(crate) fn from_raw(rows: usize, cols: usize, p: u8, data: Vec<u8>) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        Matrix { rows, cols, p, data }
    }

    pub fn zeros(rows: usize, cols: usize, p: u8) -> Self {
        Matrix {
            rows,
            cols,
            p,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize, p: u8) -> Self {
        let mut m = Matrix::zeros(n, n, p);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> u8 {
        self.p
    }

    pub fn entries(&self) -> &[u8] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u8) {
        self.data[r * self.cols + c] = v % self.p;
    }

    pub fn row(&self, r: usize) -> &[u8] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u8> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows, self.p);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    fn check_same_field(&self, other: &Matrix) -> Result<()> {
        if self.p != other.p {
            return Err(Error::ShapeMismatch(format!(
                "moduli {} and {} differ",
                self.p, other.p
            )));
        }
        Ok(())
    }

    pub fn try_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        self.check_same_field(rhs)?;
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(self.mul_unchecked(rhs))
    }

    pub(crate) fn mul_unchecked(&self, rhs: &Matrix) -> Matrix {
        let p = self.p as u32;
        let mut out = vec![0u8; self.rows * rhs.cols];
        for r in 0..self.rows {
            for c in 0..rhs.cols {
                let mut acc = 0u32;
                for k in 0..self.cols {
                    acc += self.data[r * self.cols + k] as u32 * rhs.data[k * rhs.cols + c] as u32;
                }
                out[r * rhs.cols + c] = (acc % p) as u8;
            }
        }
        Matrix::from_raw(self.rows, rhs.cols, self.p, out)
    }

    pub fn try_add(&self, rhs: &Matrix) -> Result<Matrix> {
        self.check_same_field(rhs)?;
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::ShapeMismatch("addition of differently shaped matrices".into()));
        }
        Ok(self.add_unchecked(rhs))
    }

    pub(crate) fn add_unchecked(&self, rhs: &Matrix) -> Matrix {
        let p = self.p;
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(&a, &b)| add(a, b, p))
            .collect();
        Matrix::from_raw(self.rows, self.cols, p, data)
    }

    pub fn sub_matrix(&self, rhs: &Matrix) -> Result<Matrix> {
        self.check_same_field(rhs)?;
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::ShapeMismatch("subtraction of differently shaped matrices".into()));
        }
        let p = self.p;
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(&a, &b)| sub(a, b, p))
            .collect();
        Ok(Matrix::from_raw(self.rows, self.cols, p, data))
    }

    pub fn scale(&self, s: u8) -> Matrix {
        let p = self.p;
        let data = self.data.iter().map(|&a| mul(a, s % p, p)).collect();
        Matrix::from_raw(self.rows, self.cols, p, data)
    }

    /// `self += s * other`, shapes assumed equal.
    pub(crate) fn axpy(&mut self, s: u8, other: &Matrix) {
        let p = self.p;
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = add(*a, mul(s, b, p), p);
        }
    }

    pub fn apply(&self, v: &[u8]) -> Vec<u8> {
        debug_assert_eq!(v.len(), self.cols);
        let p = self.p as u32;
        (0..self.rows)
            .map(|r| {
                let acc: u32 = self
                    .row(r)
                    .iter()
                    .zip(v)
                    .map(|(&a, &b)| a as u32 * b as u32)
                    .sum();
                (acc % p) as u8
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        let (_, pivots) = rref_with_pivots(self);
        pivots.len()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let p = self.p;
        let mut aug = Matrix::zeros(n, 2 * n, p);
        for r in 0..n {
            for c in 0..n {
                aug.data[r * 2 * n + c] = self.get(r, c);
            }
            aug.data[r * 2 * n + n + r] = 1;
        }
        let (red, pivots) = rref_with_pivots(&aug);
        if pivots.len() < n || (n > 0 && pivots[n - 1] >= n) {
            return None;
        }
        let mut out = Matrix::zeros(n, n, p);
        for r in 0..n {
            for c in 0..n {
                out.data[r * n + c] = red.get(r, n + c);
            }
        }
        Some(out)
    }

    /// Block-diagonal sum `diag(self, other)`.
    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        let rows = self.rows + other.rows;
        let cols = self.cols + other.cols;
        let mut m = Matrix::zeros(rows, cols, self.p);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.data[r * cols + c] = self.get(r, c);
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                m.data[(self.rows + r) * cols + self.cols + c] = other.get(r, c);
            }
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub(crate) fn from_columns(rows: usize, p: u8, columns: &[Vec<u8>]) -> Matrix {
        let cols = columns.len();
        let mut m = Matrix::zeros(rows, cols, p);
        for (c, v) in columns.iter().enumerate() {
            for r in 0..rows {
                m.data[r * cols + c] = v[r];
            }
        }
        m
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        write!(f, "] mod {}", self.p)
    }
}

fn rref_with_pivots(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let p = a.p;
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| a.data[i * cols + c] != 0) else {
            continue;
        };
        if pr != r {
            for k in 0..cols {
                a.data.swap(pr * cols + k, r * cols + k);
            }
        }
        let s = inv(a.data[r * cols + c], p);
        for k in 0..cols {
            a.data[r * cols + k] = mul(a.data[r * cols + k], s, p);
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = a.data[i * cols + c];
            if f == 0 {
                continue;
            }
            for k in 0..cols {
                let v = mul(f, a.data[r * cols + k], p);
                a.data[i * cols + k] = sub(a.data[i * cols + k], v, p);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// Reduced row-echelon form; zero rows sink to the bottom and the shape is kept.
pub fn rref(m: &Matrix) -> Matrix {
    rref_with_pivots(m).0
}

/// A subspace of `F_p^ambient`, stored as an RREF basis with no zero rows.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(ambient: usize, p: u8) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient, p),
        }
    }

    pub fn full(ambient: usize, p: u8) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient, p),
        }
    }

    /// Row space of `m`.
    pub fn row_space(m: &Matrix) -> Self {
        let (red, pivots) = rref_with_pivots(m);
        let k = pivots.len();
        let cols = m.cols;
        Subspace {
            ambient: cols,
            basis: Matrix::from_raw(k, cols, m.p, red.data[..k * cols].to_vec()),
        }
    }

    pub fn span(ambient: usize, p: u8, vectors: &[Vec<u8>]) -> Self {
        let mut data = Vec::with_capacity(vectors.len() * ambient);
        for v in vectors {
            debug_assert_eq!(v.len(), ambient);
            data.extend_from_slice(v);
        }
        Subspace::row_space(&Matrix::from_raw(vectors.len(), ambient, p, data))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn modulus(&self) -> u8 {
        self.basis.p
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<u8>> {
        (0..self.dim()).map(|r| self.basis.row(r).to_vec()).collect()
    }

    /// Pivot column of each basis row.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.dim())
            .map(|r| {
                self.basis
                    .row(r)
                    .iter()
                    .position(|&x| x != 0)
                    .expect("rref basis has no zero rows")
            })
            .collect()
    }

    /// Reduces `v` modulo the subspace; the result vanishes on every pivot.
    pub fn reduce(&self, v: &[u8]) -> Vec<u8> {
        let p = self.modulus();
        let mut w = v.to_vec();
        for (r, piv) in self.pivots().into_iter().enumerate() {
            let f = w[piv];
            if f != 0 {
                for (x, &b) in w.iter_mut().zip(self.basis.row(r)) {
                    *x = sub(*x, mul(f, b, p), p);
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[u8]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        (0..self.dim()).all(|r| other.contains(self.basis.row(r)))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vs = self.basis_vectors();
        vs.extend(other.basis_vectors());
        Subspace::span(self.ambient, self.modulus(), &vs)
    }

    /// Vectors orthogonal to the subspace under the standard pairing.
    pub fn annihilator(&self) -> Subspace {
        kernel_basis(&self.basis)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        self.annihilator().sum(&other.annihilator()).annihilator()
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} of {}, {:?})", self.dim(), self.ambient, self.basis)
    }
}

/// Null space `{x : m x = 0}` as a subspace of `F_p^{cols}`.
pub fn kernel_basis(m: &Matrix) -> Subspace {
    let (red, pivots) = rref_with_pivots(m);
    let cols = m.cols;
    let p = m.p;
    let mut vectors = Vec::new();
    let mut is_pivot = vec![false; cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![0u8; cols];
        v[free] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = sub(0, red.get(r, free), p);
        }
        vectors.push(v);
    }
    Subspace::span(cols, p, &vectors)
}

/// Basis of `{X : A_i X = X B_i for all i}` where `X` is `rows x cols`.
///
/// Each `A_i` must be `rows x rows` and each `B_i` `cols x cols`.
pub fn solve_commutant(
    p: u32,
    rows: usize,
    cols: usize,
    constraints: &[(Matrix, Matrix)],
) -> Result<Vec<Matrix>> {
    let p = check_prime(p)?;
    let n = rows * cols;
    let mut eqs: Vec<u8> = Vec::new();
    let mut eq_count = 0;
    for (a, b) in constraints {
        if a.rows != rows || a.cols != rows || b.rows != cols || b.cols != cols {
            return Err(Error::ShapeMismatch(format!(
                "constraint pair {}x{} / {}x{} for unknown {}x{}",
                a.rows, a.cols, b.rows, b.cols, rows, cols
            )));
        }
        if a.p != p || b.p != p {
            return Err(Error::ShapeMismatch("constraint modulus differs".into()));
        }
        // (A X - X B)[r][c] = sum_k A[r][k] X[k][c] - sum_k X[r][k] B[k][c]
        for r in 0..rows {
            for c in 0..cols {
                let mut row = vec![0u8; n];
                for k in 0..rows {
                    let idx = k * cols + c;
                    row[idx] = add(row[idx], a.get(r, k), p);
                }
                for k in 0..cols {
                    let idx = r * cols + k;
                    row[idx] = sub(row[idx], b.get(k, c), p);
                }
                eqs.extend(row);
                eq_count += 1;
            }
        }
    }
    let system = Matrix::from_raw(eq_count, n, p, eqs);
    let sol = kernel_basis(&system);
    Ok(sol
        .basis_vectors()
        .into_iter()
        .map(|v| Matrix::from_raw(rows, cols, p, v))
        .collect())
}

/// Number of `k`-dimensional subspaces of `F_p^d`.
pub fn gaussian_binomial(d: usize, k: usize, p: u64) -> u128 {
    if k > d {
        return 0;
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= pow_u128(p, (d - i) as u64) - 1;
        den *= pow_u128(p, (i + 1) as u64) - 1;
    }
    num / den
}

/// All subspaces of `F_p^d` in canonical RREF form, sorted by dimension and then basis.
pub fn enumerate_subspaces(d: usize, p: u32, cap: u64) -> Result<Vec<Subspace>> {
    let pp = check_prime(p)?;
    Error::check_cap(
        || format!("subspaces of F_{p}^{d}"),
        pow_u128(p as u64, d as u64),
        cap,
    )?;
    let mut out = Vec::new();
    for k in 0..=d {
        for pivots in combinations(d, k) {
            // free slots: (row, col) with col > pivot[row] and col not a pivot
            let mut free = Vec::new();
            for (r, &pc) in pivots.iter().enumerate() {
                for c in pc + 1..d {
                    if !pivots.contains(&c) {
                        free.push((r, c));
                    }
                }
            }
            let mut digits = vec![0u8; free.len()];
            loop {
                let mut m = Matrix::zeros(k, d, pp);
                for (r, &pc) in pivots.iter().enumerate() {
                    m.data[r * d + pc] = 1;
                }
                for (&(r, c), &v) in free.iter().zip(&digits) {
                    m.data[r * d + c] = v;
                }
                out.push(Subspace { ambient: d, basis: m });
                if !odometer(&mut digits, pp) {
                    break;
                }
            }
        }
    }
    out.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.basis.data.cmp(&b.basis.data)));
    Ok(out)
}

/// Increments a base-`p` counter; returns false after wrapping to all zeros.
pub(crate) fn odometer(digits: &mut [u8], p: u8) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < p {
            return true;
        }
        *d = 0;
    }
    false
}

pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(p: u32, rows: &[&[u32]]) -> Matrix {
        Matrix::from_rows(p, rows).unwrap()
    }

    #[test]
    fn rref_examples() {
        let id = Matrix::identity(2, 2);
        assert_eq!(rref(&id), id);
        let z = Matrix::zeros(3, 3, 2);
        assert_eq!(rref(&z), z);
        assert_eq!(rref(&m(2, &[&[1, 1], &[1, 1]])), m(2, &[&[1, 1], &[0, 0]]));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&Matrix::zeros(3, 3, 2)).dim(), 3);
        assert_eq!(kernel_basis(&Matrix::identity(3, 2)).dim(), 0);
        let k = kernel_basis(&m(2, &[&[1, 1]]));
        assert_eq!(k, Subspace::span(2, 2, &[vec![1, 1]]));
    }

    #[test]
    fn commutant_examples() {
        let basis = solve_commutant(2, 2, 2, &[]).unwrap();
        assert_eq!(basis.len(), 4);
        let id = Matrix::identity(2, 2);
        assert_eq!(solve_commutant(2, 2, 2, &[(id.clone(), id)]).unwrap().len(), 4);
        let err = solve_commutant(2, 2, 2, &[(Matrix::identity(3, 2), Matrix::identity(2, 2))]);
        assert!(matches!(err, Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn subspace_counts() {
        let zero = enumerate_subspaces(0, 2, DEFAULT_SUBSPACE_CAP).unwrap();
        assert_eq!(zero.len(), 1);
        assert_eq!(zero[0].dim(), 0);
        assert_eq!(enumerate_subspaces(2, 2, DEFAULT_SUBSPACE_CAP).unwrap().len(), 5);
        assert_eq!(enumerate_subspaces(3, 2, DEFAULT_SUBSPACE_CAP).unwrap().len(), 16);
        let total: u128 = (0..=3).map(|k| gaussian_binomial(3, k, 3)).sum();
        assert_eq!(enumerate_subspaces(3, 3, DEFAULT_SUBSPACE_CAP).unwrap().len() as u128, total);
        assert!(matches!(
            enumerate_subspaces(17, 2, DEFAULT_SUBSPACE_CAP),
            Err(Error::EnumerationCapExceeded { .. })
        ));
    }

    #[test]
    fn inverse_and_intersection() {
        let a = m(3, &[&[1, 2], &[0, 1]]);
        let ai = a.inverse().unwrap();
        assert_eq!(a.try_mul(&ai).unwrap(), Matrix::identity(2, 3));
        assert!(m(2, &[&[1, 1], &[1, 1]]).inverse().is_none());
        let u = Subspace::span(3, 2, &[vec![1, 0, 0], vec![0, 1, 0]]);
        let v = Subspace::span(3, 2, &[vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(u.intersection(&v), Subspace::span(3, 2, &[vec![0, 1, 0]]));
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(matches!(Matrix::new(1, 1, 4, vec![1]), Err(Error::NotPrime(4))));
    }
}
