//! Isomorphism keys for modules.
//!
//! Two strategies:
//! * linearly oriented `A_n`: the multiset of interval summands, read off the
//!   ranks of the path actions by inclusion-exclusion;
//! * anything else: the lexicographically least tuple of generator actions over
//!   all block-diagonal changes of basis (capped by [`Caps::orbit`]).
//!
//! [`Caps::orbit`]: crate::category::Caps

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{pow_u128, Matrix, Subspace};
use crate::modfd::algebra::Algebra;
use crate::modfd::module::{all_vectors, FdModule};

/// An interval summand `[lo..hi]` (positions along the line, 0-based) with multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bar {
    pub lo: u8,
    pub hi: u8,
    pub mult: u16,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum KeyForm {
    Bars(Vec<Bar>),
    Orbit { dims: Vec<usize>, entries: Vec<u8> },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ModuleKey {
    pub length: usize,
    pub form: KeyForm,
}

/// Linear `A_n` data: vertex at each line position and the path between every pair of positions.
#[derive(Clone, Debug)]
pub struct LineData {
    pub order: Vec<usize>,
    /// `between[i][j]` for `i <= j`: basis index of the path joining positions `i` and `j`.
    pub between: Vec<Vec<usize>>,
}

impl LineData {
    pub fn of(algebra: &Algebra) -> Option<LineData> {
        let q = algebra.quiver()?;
        let paths = algebra.paths()?;
        let order = q.linear_order()?;
        let n = order.len();
        let mut between = vec![vec![usize::MAX; n]; n];
        for i in 0..n {
            for j in i..n {
                let (a, b) = (order[i], order[j]);
                let idx = paths.iter().position(|path| {
                    (path.source == a && path.target == b) || (path.source == b && path.target == a)
                })?;
                between[i][j] = idx;
            }
        }
        Some(LineData { order, between })
    }

    pub fn positions(&self) -> usize {
        self.order.len()
    }

    pub fn bars(&self, m: &FdModule) -> Vec<Bar> {
        let n = self.positions();
        let rank = |i: isize, j: usize| -> i64 {
            if i < 0 || j >= n {
                0
            } else {
                m.action(self.between[i as usize][j]).rank() as i64
            }
        };
        let mut bars = Vec::new();
        for i in 0..n {
            for j in i..n {
                let ii = i as isize;
                let mult = rank(ii, j) - rank(ii - 1, j) - rank(ii, j + 1) + rank(ii - 1, j + 1);
                debug_assert!(mult >= 0);
                if mult > 0 {
                    bars.push(Bar {
                        lo: i as u8,
                        hi: j as u8,
                        mult: mult as u16,
                    });
                }
            }
        }
        bars
    }
}

pub fn gl_order(d: usize, p: u64) -> u128 {
    let pd = pow_u128(p, d as u64);
    (0..d).fold(1u128, |acc, i| acc.saturating_mul(pd - pow_u128(p, i as u64)))
}

type GlList = Arc<Vec<(Matrix, Matrix)>>;

/// All `(g, g^{-1})` in `GL(d, p)`, built row by row; cached per `(d, p)`.
pub fn general_linear(d: usize, p: u8) -> GlList {
    static CACHE: OnceLock<Mutex<HashMap<(usize, u8), GlList>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().unwrap().get(&(d, p)) {
        return hit.clone();
    }
    let vectors = all_vectors(d, p);
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u8>> = Vec::new();
    fn extend(
        d: usize,
        p: u8,
        vectors: &[Vec<u8>],
        rows: &mut Vec<Vec<u8>>,
        out: &mut Vec<(Matrix, Matrix)>,
    ) {
        if rows.len() == d {
            let g = Matrix::from_raw(d, d, p, rows.concat());
            let inv = g.inverse().expect("rows are independent");
            out.push((g, inv));
            return;
        }
        let span = Subspace::span(d, p, rows);
        for v in vectors {
            if !span.contains(v) {
                rows.push(v.clone());
                extend(d, p, vectors, rows, out);
                rows.pop();
            }
        }
    }
    extend(d, p, &vectors, &mut rows, &mut out);
    let list = Arc::new(out);
    cache.lock().unwrap().insert((d, p), list.clone());
    list
}

/// Least generator-action tuple over all block-diagonal basis changes.
/// The module must be adapted to its idempotent blocks.
pub fn orbit_key(m: &FdModule, cap: u64) -> Result<ModuleKey> {
    debug_assert!(m.is_adapted());
    let p = m.modulus();
    let dims = m.block_dims();
    let size = dims
        .iter()
        .fold(1u128, |acc, &d| acc.saturating_mul(gl_order(d, p as u64)));
    Error::check_cap(
        || format!("basis changes of a module with blocks {dims:?}"),
        size,
        cap,
    )?;
    let groups: Vec<GlList> = dims.iter().map(|&d| general_linear(d, p)).collect();
    let gens = m.algebra().generators().to_vec();
    let mut best: Option<Vec<u8>> = None;
    let mut choice = vec![0usize; groups.len()];
    loop {
        let mut g = Matrix::zeros(0, 0, p);
        let mut g_inv = Matrix::zeros(0, 0, p);
        for (list, &c) in groups.iter().zip(&choice) {
            g = g.block_diag(&list[c].0);
            g_inv = g_inv.block_diag(&list[c].1);
        }
        let mut candidate = Vec::new();
        let mut worse = false;
        for &gen in &gens {
            let conj = g.mul_unchecked(&m.action(gen).mul_unchecked(&g_inv));
            candidate.extend_from_slice(conj.entries());
            if let Some(b) = &best {
                let n = candidate.len();
                match candidate[..].cmp(&b[..n]) {
                    std::cmp::Ordering::Greater => {
                        worse = true;
                        break;
                    }
                    std::cmp::Ordering::Less => {}
                    std::cmp::Ordering::Equal => continue,
                }
                // strictly smaller prefix: finish computing without comparisons
                for &rest in gens.iter().skip_while(|&&x| x != gen).skip(1) {
                    let conj = g.mul_unchecked(&m.action(rest).mul_unchecked(&g_inv));
                    candidate.extend_from_slice(conj.entries());
                }
                break;
            }
        }
        if !worse && best.as_ref().is_none_or(|b| candidate < *b) {
            best = Some(candidate);
        }
        // advance the mixed-radix counter over the group factors
        let mut i = 0;
        loop {
            if i == choice.len() {
                return Ok(ModuleKey {
                    length: m.dim(),
                    form: KeyForm::Orbit {
                        dims,
                        entries: best.unwrap_or_default(),
                    },
                });
            }
            choice[i] += 1;
            if choice[i] < groups[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl_sizes() {
        assert_eq!(gl_order(2, 2), 6);
        assert_eq!(gl_order(3, 2), 168);
        assert_eq!(general_linear(2, 2).len(), 6);
        assert_eq!(general_linear(2, 3).len() as u128, gl_order(2, 3));
        assert_eq!(general_linear(0, 2).len(), 1);
    }
}
