//! Simple undirected graphs in canonical adjacency-list form.
//!
//! Every [`Graph`] is immutable once built: neighbor lists are strictly
//! increasing, symmetric and free of self-loops, so structural equality is
//! plain `==`.

mod generators;
mod io;

pub use generators::{
    bridged, complete, complete_bipartite, cycle, edge_swap_join, heawood, path, petersen,
    random_c4_free_regular, two_port, with_port, RandomRegularConfig,
};
pub use io::{parse_dimacs, parse_edge_list, to_dimacs, to_edge_list};

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors raised while building, reading or generating graphs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid generator parameters: {0}")]
    InvalidParameters(String),
    #[error("no {degree}-regular C4-free graph on {vertex_count} vertices found within the retry budget")]
    BudgetExhausted { degree: usize, vertex_count: usize },
}

/// Immutable simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Graph on `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Repeated edges (in either
    /// orientation) collapse into one.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut sets = vec![BTreeSet::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: w,
                        vertex_count: n,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            sets[u].insert(v);
            sets[v].insert(u);
        }
        Ok(Graph {
            adjacency: sets.into_iter().map(|s| s.into_iter().collect()).collect(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.vertex_count()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Number of common neighbors of `u` and `v`.
    pub fn common_neighbor_count(&self, u: usize, v: usize) -> usize {
        let (a, b) = (&self.adjacency[u], &self.adjacency[v]);
        let (mut i, mut j, mut count) = (0, 0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }

    /// Breadth-first distances from `source`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for &w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Connected components of the subgraph induced by vertices not in
    /// `removed`, each sorted, ordered by smallest member.
    pub fn components_without(&self, removed: &[usize]) -> Vec<Vec<usize>> {
        let mut blocked = vec![false; self.vertex_count()];
        for &v in removed {
            blocked[v] = true;
        }
        let mut components = Vec::new();
        let mut seen = blocked.clone();
        for root in self.vertices() {
            if seen[root] {
                continue;
            }
            let mut component = vec![root];
            seen[root] = true;
            let mut head = 0;
            while head < component.len() {
                let u = component[head];
                head += 1;
                for &w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        component.push(w);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_without(&[])
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Vertices of `other` are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.vertex_count();
        let mut adjacency = self.adjacency.clone();
        adjacency.extend(
            other
                .adjacency
                .iter()
                .map(|ns| ns.iter().map(|&v| v + offset).collect()),
        );
        Graph { adjacency }
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        Graph::from_edges(self.vertex_count(), self.edges().chain([(u, v)]))
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let (a, b) = (u.min(v), u.max(v));
        let edges: Vec<_> = self.edges().filter(|&e| e != (a, b)).collect();
        Graph::from_edges(self.vertex_count(), edges).expect("subgraph of a valid graph")
    }

    /// Graph with extra isolated vertices appended.
    pub fn with_vertices(&self, extra: usize) -> Graph {
        let mut adjacency = self.adjacency.clone();
        adjacency.extend(std::iter::repeat_with(Vec::new).take(extra));
        Graph { adjacency }
    }

    /// Checks the canonical-form invariants; always true for graphs built
    /// through this module.
    pub fn check_invariants(&self) -> Result<(), String> {
        let n = self.vertex_count();
        for (v, ns) in self.adjacency.iter().enumerate() {
            if ns.windows(2).any(|w| w[0] >= w[1]) {
                return Err(format!("adjacency of {v} is not strictly increasing"));
            }
            for &w in ns {
                if w >= n {
                    return Err(format!("neighbor {w} of {v} out of range"));
                }
                if w == v {
                    return Err(format!("self-loop at {v}"));
                }
                if self.adjacency[w].binary_search(&v).is_err() {
                    return Err(format!("edge {v}-{w} is not symmetric"));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
        g.check_invariants().unwrap();
    }

    #[test]
    fn rejects_loops_and_out_of_range() {
        assert_eq!(
            Graph::from_edges(2, [(1, 1)]).unwrap_err(),
            GraphError::SelfLoop(1)
        );
        assert!(matches!(
            Graph::from_edges(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, .. })
        ));
    }

    #[test]
    fn components_after_removal() {
        let g = path(5).unwrap();
        assert_eq!(g.components_without(&[2]), vec![vec![0, 1], vec![3, 4]]);
        assert!(g.is_connected());
    }

    #[test]
    fn union_shifts_second_graph() {
        let g = cycle(3).unwrap().disjoint_union(&cycle(3).unwrap());
        assert_eq!(g.vertex_count(), 6);
        assert!(g.has_edge(3, 5));
        assert!(!g.has_edge(2, 3));
        assert_eq!(g.components().len(), 2);
    }
}
