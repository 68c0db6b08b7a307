//! Exact b-chromatic number by backtracking, for small graphs.
//!
//! A b-coloring with `k` colors can be relabeled so that its dominating
//! vertices `D_1 < D_2 < ... < D_k` (one per color) carry colors `1..=k` in
//! index order. The search enumerates such increasing tuples among vertices
//! of degree at least `k - 1` and, for each, completes the coloring with
//! constraint propagation: every vertex keeps a domain of colors not on its
//! colored neighbors, and each `D_i` must still be able to collect its
//! missing colors on distinct uncolored neighbors (a bipartite matching
//! test).

use thiserror::Error;

use crate::constructive::Coloring;
use crate::graph::Graph;

/// Default refusal threshold on the number of vertices.
pub const DEFAULT_MAX_VERTICES: usize = 24;

/// Colors are tracked in 64-bit masks.
const MAX_COLORS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_vertices: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_vertices: DEFAULT_MAX_VERTICES,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {vertices} vertices, above the exact-search ceiling of {ceiling}")]
    TooLarge { vertices: usize, ceiling: usize },
    #[error("k = {k} is outside 1..={max}")]
    InvalidK { k: usize, max: usize },
}

/// Result of a single-`k` search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub witness: Option<Coloring>,
    /// Search nodes visited.
    pub explored: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub phi: usize,
    pub witness: Coloring,
    pub explored: u64,
}

fn check_size(g: &Graph, config: &OracleConfig) -> Result<(), OracleError> {
    let n = g.vertex_count();
    if n > config.max_vertices || g.max_degree() + 1 > MAX_COLORS {
        return Err(OracleError::TooLarge {
            vertices: n,
            ceiling: config.max_vertices,
        });
    }
    Ok(())
}

/// Searches for a b-coloring with exactly `k` colors, `1 <= k <= Delta + 1`.
pub fn exists_bcoloring_with_k(
    g: &Graph,
    k: usize,
    config: &OracleConfig,
) -> Result<SearchOutcome, OracleError> {
    check_size(g, config)?;
    let max = if g.vertex_count() == 0 {
        0
    } else {
        g.max_degree() + 1
    };
    if k == 0 || k > max {
        return Err(OracleError::InvalidK { k, max });
    }
    let mut search = Search::new(g, k);
    let witness = search
        .run()
        .map(|colors| Coloring::new(k, colors).expect("search assigns colors in 1..=k"));
    Ok(SearchOutcome {
        witness,
        explored: search.explored,
    })
}

/// Largest `k` admitting a b-coloring, scanning down from `Delta + 1`. The
/// empty graph has `phi = 0`.
pub fn exact_b_chromatic(g: &Graph, config: &OracleConfig) -> Result<OracleResult, OracleError> {
    check_size(g, config)?;
    if g.vertex_count() == 0 {
        return Ok(OracleResult {
            phi: 0,
            witness: Coloring::new(0, Vec::new()).expect("empty coloring"),
            explored: 0,
        });
    }
    let mut explored = 0;
    for k in (1..=g.max_degree() + 1).rev() {
        let outcome = exists_bcoloring_with_k(g, k, config)?;
        explored += outcome.explored;
        if let Some(witness) = outcome.witness {
            return Ok(OracleResult {
                phi: k,
                witness,
                explored,
            });
        }
    }
    unreachable!("a coloring with the chromatic number of colors is a b-coloring")
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    full: u64,
    /// `0` for uncolored, otherwise `1..=k`.
    color: Vec<usize>,
    dominators: Vec<usize>,
    explored: u64,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, k: usize) -> Self {
        Search {
            g,
            k,
            full: if k == 64 { u64::MAX } else { (1u64 << k) - 1 },
            color: vec![0; g.vertex_count()],
            dominators: Vec::with_capacity(k),
            explored: 0,
        }
    }

    fn run(&mut self) -> Option<Vec<usize>> {
        let candidates: Vec<usize> = self
            .g
            .vertices()
            .filter(|&v| self.g.degree(v) + 1 >= self.k)
            .collect();
        if candidates.len() < self.k {
            return None;
        }
        self.choose(&candidates, 0)
    }

    /// Picks `D_{i+1}` from `candidates[from..]`.
    fn choose(&mut self, candidates: &[usize], from: usize) -> Option<Vec<usize>> {
        let i = self.dominators.len();
        if i == self.k {
            return self.complete();
        }
        let remaining = self.k - i;
        for idx in from..=candidates.len() - remaining {
            let v = candidates[idx];
            self.explored += 1;
            if self.domain(v) & bit(i + 1) == 0 {
                continue;
            }
            self.color[v] = i + 1;
            self.dominators.push(v);
            if self.feasible() {
                if let Some(found) = self.choose(candidates, idx + 1) {
                    return Some(found);
                }
            }
            self.dominators.pop();
            self.color[v] = 0;
        }
        None
    }

    /// Colors still available to `v`.
    fn domain(&self, v: usize) -> u64 {
        let taken = self
            .g
            .neighbors(v)
            .iter()
            .filter(|&&w| self.color[w] != 0)
            .fold(0, |m, &w| m | bit(self.color[w]));
        self.full & !taken
    }

    /// Every uncolored vertex has a color left and every chosen dominator
    /// can still collect its missing colors on distinct free neighbors.
    fn feasible(&self) -> bool {
        if self
            .g
            .vertices()
            .any(|v| self.color[v] == 0 && self.domain(v) == 0)
        {
            return false;
        }
        self.dominators.iter().all(|&d| self.can_complete(d))
    }

    fn can_complete(&self, d: usize) -> bool {
        let mut present = bit(self.color[d]);
        let mut free = Vec::new();
        for &w in self.g.neighbors(d) {
            match self.color[w] {
                0 => free.push(self.domain(w)),
                c => present |= bit(c),
            }
        }
        let missing: Vec<usize> = (1..=self.k).filter(|&c| present & bit(c) == 0).collect();
        if missing.len() > free.len() {
            return false;
        }
        // Kuhn's algorithm: missing colors on the left, free neighbors right.
        let mut owner = vec![usize::MAX; free.len()];
        for (ci, &c) in missing.iter().enumerate() {
            let mut seen = vec![false; free.len()];
            if !augment(ci, &missing, &free, c, &mut owner, &mut seen) {
                return false;
            }
        }
        true
    }

    fn complete(&mut self) -> Option<Vec<usize>> {
        self.explored += 1;
        // Uncolored neighbors of dominators first, then everything else;
        // smallest domain wins within each group.
        let mut near = false;
        let mut best: Option<(usize, u32)> = None;
        for &d in &self.dominators {
            for &w in self.g.neighbors(d) {
                if self.color[w] == 0 {
                    let size = self.domain(w).count_ones();
                    if best.is_none_or(|(_, s)| size < s) {
                        best = Some((w, size));
                        near = true;
                    }
                }
            }
        }
        if !near {
            for v in self.g.vertices().filter(|&v| self.color[v] == 0) {
                let size = self.domain(v).count_ones();
                if best.is_none_or(|(_, s)| size < s) {
                    best = Some((v, size));
                }
            }
        }
        let Some((v, _)) = best else {
            return Some(self.color.clone());
        };
        let mut options = self.domain(v);
        while options != 0 {
            let c = options.trailing_zeros() as usize + 1;
            options &= options - 1;
            self.color[v] = c;
            if self.feasible() {
                if let Some(found) = self.complete() {
                    return Some(found);
                }
            }
            self.color[v] = 0;
        }
        None
    }
}

fn bit(color: usize) -> u64 {
    1u64 << (color - 1)
}

fn augment(
    ci: usize,
    missing: &[usize],
    free: &[u64],
    c: usize,
    owner: &mut [usize],
    seen: &mut [bool],
) -> bool {
    for j in 0..free.len() {
        if free[j] & bit(c) == 0 || seen[j] {
            continue;
        }
        seen[j] = true;
        if owner[j] == usize::MAX || {
            let other = owner[j];
            augment(other, missing, free, missing[other], owner, seen)
        } {
            owner[j] = ci;
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructive::verify_bcoloring;
    use crate::graph::{complete, complete_bipartite, cycle, heawood, petersen};

    fn phi(g: &Graph) -> usize {
        let r = exact_b_chromatic(g, &OracleConfig::default()).unwrap();
        let report = verify_bcoloring(g, &r.witness).unwrap();
        assert!(report.is_b_coloring);
        assert_eq!(report.color_count(), r.phi);
        r.phi
    }

    #[test]
    fn known_values() {
        assert_eq!(phi(&petersen()), 3);
        assert_eq!(phi(&heawood()), 4);
        assert_eq!(phi(&complete(4)), 4);
        assert_eq!(phi(&complete_bipartite(3).unwrap()), 2);
        assert_eq!(phi(&cycle(4).unwrap()), 2);
        assert_eq!(phi(&cycle(5).unwrap()), 3);
        assert_eq!(phi(&Graph::empty(3)), 1);
    }

    #[test]
    fn empty_graph_and_refusals() {
        assert_eq!(
            exact_b_chromatic(&Graph::empty(0), &OracleConfig::default())
                .unwrap()
                .phi,
            0
        );
        let small = OracleConfig { max_vertices: 9 };
        assert_eq!(
            exact_b_chromatic(&petersen(), &small).unwrap_err(),
            OracleError::TooLarge {
                vertices: 10,
                ceiling: 9
            }
        );
        assert!(matches!(
            exists_bcoloring_with_k(&petersen(), 5, &OracleConfig::default()),
            Err(OracleError::InvalidK { k: 5, max: 4 })
        ));
    }

    #[test]
    fn petersen_has_no_four_b_coloring() {
        let out = exists_bcoloring_with_k(&petersen(), 4, &OracleConfig::default()).unwrap();
        assert!(out.witness.is_none());
        assert!(out.explored > 0);
    }
}
