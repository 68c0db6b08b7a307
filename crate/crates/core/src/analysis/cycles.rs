//! Exhaustive 5-cycle enumeration and per-edge / per-2-path statistics.

use std::collections::BTreeMap;

use super::AnalysisError;
use crate::graph::Graph;

/// Refusal thresholds for [`five_cycle_stats_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FiveCycleLimits {
    pub max_vertices: usize,
    /// Enumeration aborts once this many 5-cycles have been found.
    pub max_cycles: usize,
}

impl Default for FiveCycleLimits {
    fn default() -> Self {
        FiveCycleLimits {
            max_vertices: 512,
            max_cycles: 1_000_000,
        }
    }
}

/// A path `ends.0 - mid - ends.1` with `ends.0 < ends.1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwoPath {
    pub ends: (usize, usize),
    pub mid: usize,
}

impl TwoPath {
    pub fn new(a: usize, mid: usize, b: usize) -> Self {
        TwoPath {
            ends: (a.min(b), a.max(b)),
            mid,
        }
    }
}

/// Counts and packing numbers of 5-cycles through edges and 2-paths.
///
/// `max_edge_disjoint[e]` is the largest family of 5-cycles through `e`
/// whose pairwise intersection is exactly `e`; `max_path_disjoint[p]` is the
/// same for a 2-path `p`. Every edge and every 2-path of the graph has an
/// entry, zero when no 5-cycle passes through it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiveCycleStats {
    pub cycle_count: usize,
    pub per_edge_count: BTreeMap<(usize, usize), usize>,
    pub max_edge_disjoint: BTreeMap<(usize, usize), usize>,
    pub max_path_disjoint: BTreeMap<TwoPath, usize>,
}

/// All 5-cycles, each listed once in cyclic order starting from its
/// smallest vertex with the second vertex smaller than the last.
pub fn five_cycles(g: &Graph, max_cycles: usize) -> Result<Vec<[usize; 5]>, AnalysisError> {
    let mut out = Vec::new();
    for a in g.vertices() {
        let above = |x: &&usize| **x > a;
        for &b in g.neighbors(a).iter().filter(above) {
            for &c in g.neighbors(b).iter().filter(above) {
                for &d in g.neighbors(c).iter().filter(above) {
                    if d == b {
                        continue;
                    }
                    for &e in g.neighbors(d).iter().filter(above) {
                        if e == c || e <= b || !g.has_edge(e, a) {
                            continue;
                        }
                        out.push([a, b, c, d, e]);
                        if out.len() > max_cycles {
                            return Err(AnalysisError::TooLarge(format!(
                                "more than {max_cycles} five-cycles"
                            )));
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

pub fn five_cycle_stats(g: &Graph) -> Result<FiveCycleStats, AnalysisError> {
    five_cycle_stats_with(g, FiveCycleLimits::default())
}

pub fn five_cycle_stats_with(
    g: &Graph,
    limits: FiveCycleLimits,
) -> Result<FiveCycleStats, AnalysisError> {
    if g.vertex_count() > limits.max_vertices {
        return Err(AnalysisError::TooLarge(format!(
            "{} vertices exceeds the ceiling of {}",
            g.vertex_count(),
            limits.max_vertices
        )));
    }
    let cycles = five_cycles(g, limits.max_cycles)?;

    let mut by_edge: BTreeMap<(usize, usize), Vec<usize>> =
        g.edges().map(|e| (e, Vec::new())).collect();
    let mut by_path: BTreeMap<TwoPath, Vec<usize>> = BTreeMap::new();
    for m in g.vertices() {
        let ns = g.neighbors(m);
        for (i, &a) in ns.iter().enumerate() {
            for &b in &ns[i + 1..] {
                by_path.insert(TwoPath::new(a, m, b), Vec::new());
            }
        }
    }
    for (idx, cycle) in cycles.iter().enumerate() {
        for k in 0..5 {
            let (u, v) = (cycle[k], cycle[(k + 1) % 5]);
            by_edge
                .get_mut(&(u.min(v), u.max(v)))
                .expect("cycle edge is a graph edge")
                .push(idx);
            let path = TwoPath::new(cycle[(k + 4) % 5], u, v);
            by_path
                .get_mut(&path)
                .expect("cycle 2-path is a graph 2-path")
                .push(idx);
        }
    }

    let shared = |x: usize, y: usize| cycles[x].iter().filter(|v| cycles[y].contains(v)).count();
    let per_edge_count = by_edge.iter().map(|(&e, list)| (e, list.len())).collect();
    let max_edge_disjoint = by_edge
        .iter()
        .map(|(&e, list)| (e, max_packing(list, |x, y| shared(x, y) > 2)))
        .collect();
    let max_path_disjoint = by_path
        .iter()
        .map(|(&p, list)| (p, max_packing(list, |x, y| shared(x, y) > 3)))
        .collect();

    Ok(FiveCycleStats {
        cycle_count: cycles.len(),
        per_edge_count,
        max_edge_disjoint,
        max_path_disjoint,
    })
}

/// Maximum independent set size in the conflict graph on `items`.
fn max_packing(items: &[usize], conflict: impl Fn(usize, usize) -> bool) -> usize {
    let k = items.len();
    let adj: Vec<Vec<bool>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| i != j && conflict(items[i], items[j]))
                .collect()
        })
        .collect();
    let mut best = 0;
    branch(&adj, (0..k).collect(), 0, &mut best);
    best
}

fn branch(adj: &[Vec<bool>], candidates: Vec<usize>, size: usize, best: &mut usize) {
    if size + candidates.len() <= *best {
        return;
    }
    if candidates.is_empty() {
        *best = size;
        return;
    }
    let degree = |v: usize| candidates.iter().filter(|&&w| adj[v][w]).count();
    let pivot = *candidates
        .iter()
        .max_by_key(|&&v| (degree(v), std::cmp::Reverse(v)))
        .expect("non-empty");
    if degree(pivot) == 0 {
        // No conflicts left: take everything.
        *best = (*best).max(size + candidates.len());
        return;
    }
    let with: Vec<usize> = candidates
        .iter()
        .copied()
        .filter(|&w| w != pivot && !adj[pivot][w])
        .collect();
    branch(adj, with, size + 1, best);
    let without: Vec<usize> = candidates.into_iter().filter(|&w| w != pivot).collect();
    branch(adj, without, size, best);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, petersen};

    #[test]
    fn petersen_counts() {
        let stats = five_cycle_stats(&petersen()).unwrap();
        assert_eq!(stats.cycle_count, 12);
        assert!(stats.per_edge_count.values().all(|&c| c == 4));
        let total: usize = stats.per_edge_count.values().sum();
        assert_eq!(total, 5 * stats.cycle_count);
        for (e, &m) in &stats.max_edge_disjoint {
            assert!(m <= stats.per_edge_count[e]);
        }
    }

    #[test]
    fn c5_has_one_cycle() {
        let stats = five_cycle_stats(&cycle(5).unwrap()).unwrap();
        assert_eq!(stats.cycle_count, 1);
        assert!(stats.per_edge_count.values().all(|&c| c == 1));
        assert!(stats.max_edge_disjoint.values().all(|&c| c == 1));
        assert_eq!(stats.max_path_disjoint.len(), 5);
        assert!(stats.max_path_disjoint.values().all(|&c| c == 1));
    }

    #[test]
    fn c6_has_none() {
        let stats = five_cycle_stats(&cycle(6).unwrap()).unwrap();
        assert_eq!(stats.cycle_count, 0);
        assert!(stats.per_edge_count.values().all(|&c| c == 0));
        assert!(stats.max_edge_disjoint.values().all(|&c| c == 0));
    }

    #[test]
    fn k5_cycle_count() {
        // K_5 has 4!/2 = 12 Hamiltonian cycles.
        assert_eq!(five_cycles(&complete(5), 100).unwrap().len(), 12);
    }

    #[test]
    fn ceilings_refuse() {
        let limits = FiveCycleLimits {
            max_vertices: 9,
            max_cycles: 100,
        };
        assert!(five_cycle_stats_with(&petersen(), limits).is_err());
        assert!(five_cycles(&petersen(), 5).is_err());
    }

    #[test]
    fn packing_brute_force() {
        // 5-cycle conflict graph: MIS = 2.
        let items = [0, 1, 2, 3, 4];
        let conflict = |a: usize, b: usize| (a + 1) % 5 == b || (b + 1) % 5 == a;
        assert_eq!(max_packing(&items, conflict), 2);
        assert_eq!(max_packing(&items, |_, _| false), 5);
        assert_eq!(max_packing(&items, |a, b| a != b), 1);
        assert_eq!(max_packing(&[], |_, _| true), 0);
    }
}
