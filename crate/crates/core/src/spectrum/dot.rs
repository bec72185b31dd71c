//! DOT output for Hasse diagrams. Node ids come from support bitmasks, so they
//! are stable across runs and diff cleanly.

use std::fmt::Write;

use crate::spectrum::lattice::Lattice;
use crate::spectrum::SpecSet;

fn node_id(s: SpecSet) -> String {
    format!("s{:x}", s.0)
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Generic Hasse diagram over subsets of the spectrum, edges pointing upwards.
pub fn hasse_dot(name: &str, nodes: &[(SpecSet, String)], covers: &[(usize, usize)], comment: Option<&str>) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {} {{", escape(name)).unwrap();
    if let Some(c) = comment {
        writeln!(out, "  label=\"{}\";", escape(c)).unwrap();
    }
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=box];").unwrap();
    for (s, label) in nodes {
        writeln!(out, "  {} [label=\"{}\"];", node_id(*s), escape(label)).unwrap();
    }
    let mut edges: Vec<(SpecSet, SpecSet)> = covers.iter().map(|&(a, b)| (nodes[a].0, nodes[b].0)).collect();
    edges.sort();
    for (a, b) in edges {
        writeln!(out, "  {} -> {};", node_id(a), node_id(b)).unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn lattice_dot(lattice: &Lattice) -> String {
    let mut order: Vec<usize> = (0..lattice.len()).collect();
    order.sort_by_key(|&i| (lattice.nodes[i].support.len(), lattice.nodes[i].support.0));
    let pos: Vec<usize> = {
        let mut pos = vec![0; order.len()];
        for (k, &i) in order.iter().enumerate() {
            pos[i] = k;
        }
        pos
    };
    let nodes: Vec<(SpecSet, String)> = order
        .iter()
        .map(|&i| (lattice.nodes[i].support, lattice.nodes[i].label.clone()))
        .collect();
    let covers: Vec<(usize, usize)> = lattice.covers().into_iter().map(|(a, b)| (pos[a], pos[b])).collect();
    hasse_dot("nullity_lattice", &nodes, &covers, Some(&lattice.verdict()))
}

/// Closed subsets of the spectrum ordered by inclusion.
pub fn topology_dot(closed: &[SpecSet], labels: &[String]) -> String {
    let nodes: Vec<(SpecSet, String)> = closed.iter().copied().zip(labels.iter().cloned()).collect();
    let n = nodes.len();
    let lt = |a: usize, b: usize| a != b && nodes[a].0.is_subset(nodes[b].0);
    let mut covers = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if lt(a, b) && !(0..n).any(|c| lt(a, c) && lt(c, b)) {
                covers.push((a, b));
            }
        }
    }
    hasse_dot("closed_subsets", &nodes, &covers, None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_dot() {
        let closed = [SpecSet(0), SpecSet(1)];
        let dot = topology_dot(&closed, &["{}".into(), "{S1}".into()]);
        assert!(dot.contains("s0 -> s1;"));
        assert!(dot.starts_with("digraph closed_subsets {"));
    }
}
