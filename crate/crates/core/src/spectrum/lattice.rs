//! The lattice of nullity classes, ordered by inclusion of traces.

use serde::Serialize;

use crate::category::Category;
use crate::error::{Error, Result};
use crate::nullity::IsoSet;
use crate::spectrum::{SpecSet, Spectrum};

#[derive(Clone, Debug, Serialize)]
pub struct LatticeNode {
    pub support: SpecSet,
    pub label: String,
    pub trace: IsoSet,
}

/// A five-element sublattice `bottom < low < high < top`, `side` incomparable to both.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Pentagon {
    pub bottom: usize,
    pub low: usize,
    pub high: usize,
    pub side: usize,
    pub top: usize,
}

/// Three pairwise incomparable elements with a common meet and a common join.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Diamond {
    pub bottom: usize,
    pub atoms: [usize; 3],
    pub top: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Lattice {
    pub nodes: Vec<LatticeNode>,
    /// `leq[i][j]` iff node `i` is contained in node `j`.
    pub leq: Vec<Vec<bool>>,
    pub meet: Vec<Vec<usize>>,
    pub join: Vec<Vec<usize>>,
}

impl Lattice {
    /// Builds the lattice from a partial order given by `leq`; fails if some pair lacks a meet or join.
    pub fn from_order(nodes: Vec<LatticeNode>, leq: Vec<Vec<bool>>) -> Result<Self> {
        let n = nodes.len();
        let bound = |i: usize, j: usize, upper: bool| -> Result<usize> {
            let candidates: Vec<usize> = (0..n)
                .filter(|&k| if upper { leq[i][k] && leq[j][k] } else { leq[k][i] && leq[k][j] })
                .collect();
            let best: Vec<usize> = candidates
                .iter()
                .copied()
                .filter(|&k| {
                    candidates
                        .iter()
                        .all(|&o| if upper { leq[k][o] } else { leq[o][k] })
                })
                .collect();
            match best.as_slice() {
                [k] => Ok(*k),
                _ => Err(Error::NotALattice(format!(
                    "{} and {} have no {}",
                    nodes[i].label,
                    nodes[j].label,
                    if upper { "join" } else { "meet" }
                ))),
            }
        };
        let mut meet = vec![vec![0; n]; n];
        let mut join = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                meet[i][j] = bound(i, j, false)?;
                join[i][j] = bound(i, j, true)?;
            }
        }
        Ok(Lattice { nodes, leq, meet, join })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq[a][b]
    }

    fn incomparable(&self, a: usize, b: usize) -> bool {
        !self.leq[a][b] && !self.leq[b][a]
    }

    pub fn is_chain(&self) -> bool {
        (0..self.len()).all(|a| (0..self.len()).all(|b| !self.incomparable(a, b)))
    }

    /// Exhaustive check of `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)` over all triples.
    pub fn distributivity_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.len();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = self.meet[x][self.join[y][z]];
                    let rhs = self.join[self.meet[x][y]][self.meet[x][z]];
                    if lhs != rhs {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_failure().is_none()
    }

    pub fn find_pentagon(&self) -> Option<Pentagon> {
        let n = self.len();
        for low in 0..n {
            for high in 0..n {
                if !self.lt(low, high) {
                    continue;
                }
                for side in 0..n {
                    if !self.incomparable(side, low) || !self.incomparable(side, high) {
                        continue;
                    }
                    let bottom = self.meet[low][side];
                    let top = self.join[low][side];
                    if self.meet[high][side] == bottom && self.join[high][side] == top {
                        return Some(Pentagon {
                            bottom,
                            low,
                            high,
                            side,
                            top,
                        });
                    }
                }
            }
        }
        None
    }

    pub fn find_diamond(&self) -> Option<Diamond> {
        let n = self.len();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if !(self.incomparable(a, b) && self.incomparable(a, c) && self.incomparable(b, c)) {
                        continue;
                    }
                    let bottom = self.meet[a][b];
                    let top = self.join[a][b];
                    if [self.meet[a][c], self.meet[b][c]].iter().all(|&m| m == bottom)
                        && [self.join[a][c], self.join[b][c]].iter().all(|&j| j == top)
                    {
                        return Some(Diamond {
                            bottom,
                            atoms: [a, b, c],
                            top,
                        });
                    }
                }
            }
        }
        None
    }

    /// Covering pairs `(lower, upper)` of the Hasse diagram.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.lt(a, b) && !(0..n).any(|c| self.lt(a, c) && self.lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn verdict(&self) -> String {
        if self.is_distributive() {
            if self.is_chain() {
                "distributive (chain)".into()
            } else {
                "distributive".into()
            }
        } else if self.find_pentagon().is_some() {
            "non-distributive: pentagon".into()
        } else {
            "non-distributive: diamond".into()
        }
    }
}

/// `⟨P2, S2⟩`-style label for the class with the given support.
pub fn class_label<C: Category>(spec: &Spectrum<'_, '_, C>, support: SpecSet) -> String {
    if support.is_empty() {
        return "⟨0⟩".into();
    }
    let names: Vec<&str> = support.iter().map(|i| spec.points()[i].label.as_str()).collect();
    format!("⟨{}⟩", names.join(", "))
}

/// Nodes are `Supp⁻¹ Φ` for the closed, extension-closed subsets `Φ`, ordered by trace inclusion.
pub fn nullity_lattice<C: Category>(spec: &Spectrum<'_, '_, C>) -> Result<Lattice> {
    let mut nodes: Vec<LatticeNode> = Vec::new();
    for phi in spec.closed_ext_closed_subsets() {
        let t = spec.supp_inverse(phi);
        if nodes.iter().any(|n| n.trace == t.trace) {
            continue;
        }
        nodes.push(LatticeNode {
            support: phi,
            label: class_label(spec, phi),
            trace: t.trace,
        });
    }
    let leq = nodes
        .iter()
        .map(|a| nodes.iter().map(|b| a.trace.is_subset(&b.trace)).collect())
        .collect();
    Lattice::from_order(nodes, leq)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poset(edges: &[(usize, usize)], n: usize) -> Lattice {
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in edges {
            leq[a][b] = true;
        }
        // transitive closure
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if leq[i][k] && leq[k][j] {
                        leq[i][j] = true;
                    }
                }
            }
        }
        let nodes = (0..n)
            .map(|i| LatticeNode {
                support: SpecSet(i as u64),
                label: i.to_string(),
                trace: IsoSet::new(),
            })
            .collect();
        Lattice::from_order(nodes, leq).unwrap()
    }

    #[test]
    fn pentagon_and_diamond() {
        // 0 < 1 < 2 < 4, 0 < 3 < 4
        let n5 = poset(&[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)], 5);
        assert!(!n5.is_distributive());
        assert!(n5.find_pentagon().is_some());
        assert!(n5.find_diamond().is_none());
        let m3 = poset(&[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)], 5);
        assert!(!m3.is_distributive());
        assert!(m3.find_pentagon().is_none());
        assert!(m3.find_diamond().is_some());
        let square = poset(&[(0, 1), (0, 2), (1, 3), (2, 3)], 4);
        assert!(square.is_distributive());
        assert!(!square.is_chain());
        assert_eq!(square.covers().len(), 4);
    }

    #[test]
    fn a2_is_a_pentagon() {
        use crate::modfd::ModuleCategory;
        use crate::nullity::NullityEngine;
        use crate::universe::Universe;
        let cat = ModuleCategory::a_n(2, 2).unwrap();
        let u = Universe::generate(&cat, 4).unwrap();
        let engine = NullityEngine::new(&u);
        let spec = Spectrum::compute(&cat, &engine).unwrap();
        let l = nullity_lattice(&spec).unwrap();
        assert_eq!(l.len(), 5);
        assert!(l.find_pentagon().is_some());
        assert!(l.distributivity_failure().is_some());
        assert_eq!(l.verdict(), "non-distributive: pentagon");
        let dot = crate::spectrum::dot::lattice_dot(&l);
        assert_eq!(dot.matches("[label=").count(), 5);
    }

    #[test]
    fn non_lattice_is_rejected() {
        let mut leq = vec![vec![false; 4]; 4];
        for i in 0..4 {
            leq[i][i] = true;
        }
        // two minimal elements below two maximal ones: no join of 0 and 1
        for (a, b) in [(0, 2), (0, 3), (1, 2), (1, 3)] {
            leq[a][b] = true;
        }
        let nodes = (0..4)
            .map(|i| LatticeNode {
                support: SpecSet(i),
                label: i.to_string(),
                trace: IsoSet::new(),
            })
            .collect();
        assert!(matches!(Lattice::from_order(nodes, leq), Err(Error::NotALattice(_))));
    }
}
