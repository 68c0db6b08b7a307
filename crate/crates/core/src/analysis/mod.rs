//! Structural predicates and invariants: regularity, short cycles, girth,
//! diameter, vertex connectivity and 5-cycle statistics.

mod connectivity;
mod cycles;
mod hypotheses;

pub use connectivity::{
    local_vertex_cut, three_component_separator_exists, vertex_connectivity, CutCertificate,
};
pub use cycles::{
    five_cycle_stats, five_cycle_stats_with, five_cycles, FiveCycleLimits, FiveCycleStats, TwoPath,
};
pub use hypotheses::{
    check_theorem_hypotheses, ConnectivityCheck, FiveCycleCheck, HypothesisReport, SeedingCheck,
};

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("instance too large for 5-cycle enumeration: {0}")]
    TooLarge(String),
}

/// A length that may be unbounded (girth of a forest, diameter of a
/// disconnected graph).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extent {
    Finite(usize),
    Infinite,
}

impl Extent {
    pub fn finite(self) -> Option<usize> {
        match self {
            Extent::Finite(v) => Some(v),
            Extent::Infinite => None,
        }
    }

    /// `true` when the extent is infinite or at least `bound`.
    pub fn at_least(self, bound: usize) -> bool {
        match self {
            Extent::Finite(v) => v >= bound,
            Extent::Infinite => true,
        }
    }
}

impl std::fmt::Display for Extent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Extent::Finite(v) => write!(f, "{v}"),
            Extent::Infinite => write!(f, "infinity"),
        }
    }
}

/// Finite values serialize as numbers, infinity as the string `"infinity"`.
impl Serialize for Extent {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Extent::Finite(v) => serializer.serialize_u64(*v as u64),
            Extent::Infinite => serializer.serialize_str("infinity"),
        }
    }
}

/// Common degree of all vertices, if the graph is regular and non-empty.
pub fn is_regular(g: &Graph) -> Option<usize> {
    let first = g.vertices().next().map(|v| g.degree(v))?;
    g.vertices().all(|v| g.degree(v) == first).then_some(first)
}

/// A 4-cycle `[a, x, b, y]` (in cyclic order), if any. Two vertices with
/// two common neighbors span one.
pub fn find_c4(g: &Graph) -> Option<[usize; 4]> {
    let n = g.vertex_count();
    let mut first_via = vec![usize::MAX; n];
    for a in g.vertices() {
        let mut touched = Vec::new();
        for &x in g.neighbors(a) {
            for &b in g.neighbors(x) {
                if b <= a {
                    continue;
                }
                if first_via[b] == usize::MAX {
                    first_via[b] = x;
                    touched.push(b);
                } else {
                    return Some([a, first_via[b], b, x]);
                }
            }
        }
        for b in touched {
            first_via[b] = usize::MAX;
        }
    }
    None
}

pub fn contains_c4(g: &Graph) -> bool {
    find_c4(g).is_some()
}

/// A triangle `[u, v, w]` with `u < v < w`, if any.
pub fn find_triangle(g: &Graph) -> Option<[usize; 3]> {
    g.edges().find_map(|(u, v)| {
        g.neighbors(u)
            .iter()
            .find(|&&w| w > v && g.has_edge(v, w))
            .map(|&w| [u, v, w])
    })
}

pub fn has_triangle(g: &Graph) -> bool {
    find_triangle(g).is_some()
}

/// Whether `v` lies on a triangle.
pub fn in_triangle(g: &Graph, v: usize) -> bool {
    let ns = g.neighbors(v);
    ns.iter()
        .enumerate()
        .any(|(i, &x)| ns[i + 1..].iter().any(|&y| g.has_edge(x, y)))
}

/// Length of a shortest cycle, by breadth-first search from every vertex.
pub fn girth(g: &Graph) -> Extent {
    let n = g.vertex_count();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for root in g.vertices() {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        queue.clear();
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            // No shorter cycle can be closed beyond this depth.
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Extent::Infinite
    } else {
        Extent::Finite(best)
    }
}

/// Diameter together with a pair of vertices realizing it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DiameterInfo {
    pub diameter: Extent,
    /// A farthest pair: lexicographically first among pairs at maximum
    /// distance, or the smallest vertices of the first two components when
    /// the graph is disconnected.
    pub witness: Option<(usize, usize)>,
}

pub fn diameter(g: &Graph) -> DiameterInfo {
    let components = g.components();
    if components.len() > 1 {
        return DiameterInfo {
            diameter: Extent::Infinite,
            witness: Some((components[0][0], components[1][0])),
        };
    }
    let mut best = 0;
    let mut witness = g.vertices().next().map(|v| (v, v));
    for v in g.vertices() {
        for (w, d) in g.bfs_distances(v).into_iter().enumerate().skip(v + 1) {
            let d = d.expect("connected graph");
            if d > best {
                best = d;
                witness = Some((v, w));
            }
        }
    }
    DiameterInfo {
        diameter: Extent::Finite(best),
        witness,
    }
}

/// Cached structural facts about a graph. Every present field must match a
/// fresh recomputation.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct GraphMetadata {
    pub regular_degree: Option<usize>,
    pub girth: Option<Extent>,
    pub has_c4: Option<bool>,
    pub has_triangle: Option<bool>,
}

impl GraphMetadata {
    pub fn compute(g: &Graph) -> Self {
        GraphMetadata {
            regular_degree: is_regular(g),
            girth: Some(girth(g)),
            has_c4: Some(contains_c4(g)),
            has_triangle: Some(has_triangle(g)),
        }
    }

    /// Names of the present fields that disagree with `g`.
    pub fn mismatches(&self, g: &Graph) -> Vec<&'static str> {
        let fresh = GraphMetadata::compute(g);
        let mut bad = Vec::new();
        if self.regular_degree.is_some() && self.regular_degree != fresh.regular_degree {
            bad.push("regular_degree");
        }
        if self.girth.is_some() && self.girth != fresh.girth {
            bad.push("girth");
        }
        if self.has_c4.is_some() && self.has_c4 != fresh.has_c4 {
            bad.push("has_c4");
        }
        if self.has_triangle.is_some() && self.has_triangle != fresh.has_triangle {
            bad.push("has_triangle");
        }
        bad
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, heawood, path, petersen};

    #[test]
    fn regularity() {
        assert_eq!(is_regular(&petersen()), Some(3));
        assert_eq!(is_regular(&complete_bipartite(4).unwrap()), Some(4));
        assert_eq!(is_regular(&path(3).unwrap()), None);
    }

    #[test]
    fn four_cycles() {
        assert!(!contains_c4(&petersen()));
        assert!(!contains_c4(&cycle(5).unwrap()));
        let k33 = complete_bipartite(3).unwrap();
        let [a, x, b, y] = find_c4(&k33).unwrap();
        for (p, q) in [(a, x), (x, b), (b, y), (y, a)] {
            assert!(k33.has_edge(p, q));
        }
        assert!(contains_c4(&cycle(4).unwrap()));
        assert!(contains_c4(&complete(4)));
    }

    #[test]
    fn triangles() {
        assert!(!has_triangle(&petersen()));
        assert_eq!(find_triangle(&complete(4)), Some([0, 1, 2]));
        assert!(!has_triangle(&cycle(6).unwrap()));
        assert!(in_triangle(&complete(3), 2));
        assert!(!in_triangle(&cycle(5).unwrap(), 0));
    }

    #[test]
    fn girths() {
        assert_eq!(girth(&petersen()), Extent::Finite(5));
        assert_eq!(girth(&heawood()), Extent::Finite(6));
        assert_eq!(girth(&complete_bipartite(2).unwrap()), Extent::Finite(4));
        assert_eq!(girth(&complete_bipartite(5).unwrap()), Extent::Finite(4));
        assert_eq!(girth(&path(6).unwrap()), Extent::Infinite);
        assert_eq!(girth(&cycle(11).unwrap()), Extent::Finite(11));
        assert_eq!(girth(&complete(5)), Extent::Finite(3));
    }

    #[test]
    fn diameters() {
        let p = diameter(&petersen());
        assert_eq!(p.diameter, Extent::Finite(2));
        let (v, w) = p.witness.unwrap();
        assert_eq!(petersen().bfs_distances(v)[w], Some(2));
        assert_eq!(diameter(&cycle(12).unwrap()).diameter, Extent::Finite(6));
        let two = complete(3).disjoint_union(&complete(3));
        let d = diameter(&two);
        assert_eq!(d.diameter, Extent::Infinite);
        assert_eq!(d.witness, Some((0, 3)));
    }

    #[test]
    fn extent_json() {
        assert_eq!(serde_json::to_string(&Extent::Finite(5)).unwrap(), "5");
        assert_eq!(
            serde_json::to_string(&Extent::Infinite).unwrap(),
            "\"infinity\""
        );
    }

    #[test]
    fn metadata_consistency() {
        let g = petersen();
        let meta = GraphMetadata::compute(&g);
        assert_eq!(meta.regular_degree, Some(3));
        assert!(meta.mismatches(&g).is_empty());
        let stale = GraphMetadata {
            has_c4: Some(true),
            ..GraphMetadata::default()
        };
        assert_eq!(stale.mismatches(&g), vec!["has_c4"]);
    }
}
