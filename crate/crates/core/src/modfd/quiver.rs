use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite acyclic quiver. Vertices are `0..vertices`; arrows are `(source, target)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quiver {
    pub name: String,
    pub vertices: usize,
    pub arrows: Vec<(usize, usize)>,
}

/// A path in a quiver, arrows listed in traversal order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }
}

#[derive(Deserialize)]
struct QuiverFile {
    name: Option<String>,
    vertices: usize,
    #[serde(default)]
    arrows: Vec<[usize; 2]>,
}

impl Quiver {
    pub fn new(name: impl Into<String>, vertices: usize, arrows: Vec<(usize, usize)>) -> Result<Self> {
        if vertices == 0 {
            return Err(Error::Config("quiver needs at least one vertex".into()));
        }
        if let Some(&(s, t)) = arrows.iter().find(|&&(s, t)| s >= vertices || t >= vertices) {
            return Err(Error::Config(format!("arrow {s}->{t} leaves the vertex range")));
        }
        let q = Quiver {
            name: name.into(),
            vertices,
            arrows,
        };
        q.topological_order()?;
        Ok(q)
    }

    /// Linearly oriented `A_n`: `1 <- 2 <- ... <- n` (0-based arrows `v+1 -> v`).
    pub fn a_n(n: usize) -> Result<Self> {
        Quiver::new(format!("A{n}"), n, (0..n.saturating_sub(1)).map(|v| (v + 1, v)).collect())
    }

    /// Parses the small text format (TOML) with 1-based vertex labels:
    ///
    /// ```toml
    /// name = "D4"
    /// vertices = 4
    /// arrows = [[2, 1], [3, 1], [4, 1]]
    /// ```
    pub fn from_config_str(s: &str) -> Result<Self> {
        let f: QuiverFile = toml::from_str(s).map_err(|e| Error::Config(e.to_string()))?;
        let mut arrows = Vec::with_capacity(f.arrows.len());
        for [s, t] in f.arrows {
            if s == 0 || t == 0 {
                return Err(Error::Config("vertex labels are 1-based".into()));
            }
            arrows.push((s - 1, t - 1));
        }
        Quiver::new(f.name.unwrap_or_else(|| "custom".into()), f.vertices, arrows)
    }

    fn topological_order(&self) -> Result<Vec<usize>> {
        let mut indeg = vec![0usize; self.vertices];
        for &(_, t) in &self.arrows {
            indeg[t] += 1;
        }
        let mut ready: Vec<usize> = (0..self.vertices).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::new();
        while let Some(v) = ready.pop() {
            order.push(v);
            for &(s, t) in &self.arrows {
                if s == v {
                    indeg[t] -= 1;
                    if indeg[t] == 0 {
                        ready.push(t);
                    }
                }
            }
        }
        if order.len() != self.vertices {
            return Err(Error::CyclicQuiver);
        }
        Ok(order)
    }

    /// All paths: trivial ones first, then by length, then lexicographically by arrows.
    pub fn paths(&self) -> Vec<Path> {
        let mut out: Vec<Path> = (0..self.vertices).map(Path::trivial).collect();
        let mut frontier: Vec<Path> = self
            .arrows
            .iter()
            .enumerate()
            .map(|(i, &(s, t))| Path {
                source: s,
                target: t,
                arrows: vec![i],
            })
            .collect();
        while !frontier.is_empty() {
            frontier.sort();
            let mut next = Vec::new();
            for path in &frontier {
                for (i, &(s, t)) in self.arrows.iter().enumerate() {
                    if s == path.target {
                        let mut arrows = path.arrows.clone();
                        arrows.push(i);
                        next.push(Path {
                            source: path.source,
                            target: t,
                            arrows,
                        });
                    }
                }
            }
            out.append(&mut frontier);
            frontier = next;
        }
        out
    }

    /// Vertices along the line, sink end first, when the quiver is a linearly
    /// oriented `A_n` (all arrows pointing towards position 0).
    pub fn linear_order(&self) -> Option<Vec<usize>> {
        let n = self.vertices;
        if self.arrows.len() + 1 != n {
            return None;
        }
        let mut out_arrow = vec![None; n];
        let mut in_deg = vec![0; n];
        for &(s, t) in &self.arrows {
            if out_arrow[s].is_some() {
                return None;
            }
            out_arrow[s] = Some(t);
            in_deg[t] += 1;
        }
        if in_deg.iter().any(|&d| d > 1) {
            return None;
        }
        // walk backwards from the unique vertex without an outgoing arrow
        let sinks: Vec<usize> = (0..n).filter(|&v| out_arrow[v].is_none()).collect();
        if sinks.len() != 1 {
            return None;
        }
        let mut order = vec![sinks[0]];
        while order.len() < n {
            let cur = *order.last().unwrap();
            let prev = (0..n).find(|&v| out_arrow[v] == Some(cur))?;
            order.push(prev);
        }
        Some(order)
    }
}
