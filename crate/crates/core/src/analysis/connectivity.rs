//! Exact vertex connectivity with a separating-set certificate.

use std::collections::VecDeque;

use serde::Serialize;

use crate::graph::Graph;

/// Vertex connectivity `kappa` with a separator `U` of that size and the
/// connected components of `G - U`.
///
/// Complete graphs `K_n` report `kappa = n - 1`, separator `0..n-1` and the
/// single remaining vertex as the only component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutCertificate {
    pub kappa: usize,
    pub separator: Vec<usize>,
    pub components: Vec<Vec<usize>>,
}

impl CutCertificate {
    /// Re-derives the components from the separator and compares.
    pub fn check(&self, g: &Graph) -> Result<(), String> {
        if self.separator.len() != self.kappa {
            return Err(format!(
                "separator has {} vertices, kappa is {}",
                self.separator.len(),
                self.kappa
            ));
        }
        let fresh = g.components_without(&self.separator);
        if fresh != self.components {
            return Err("components do not match G - U".into());
        }
        if g.vertex_count() > 0 && fresh.len() < 2 && fresh.iter().map(Vec::len).sum::<usize>() != 1
        {
            return Err("separator neither disconnects nor isolates one vertex".into());
        }
        Ok(())
    }
}

struct Arc {
    to: usize,
    cap: usize,
}

/// Split-vertex flow network: `v` becomes `2v -> 2v+1` with unit capacity;
/// each edge `uv` becomes `2u+1 -> 2v` and `2v+1 -> 2u`.
struct FlowNetwork {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
}

impl FlowNetwork {
    fn new(g: &Graph, s: usize, t: usize) -> Self {
        let n = g.vertex_count();
        let big = n + 1;
        let mut net = FlowNetwork {
            arcs: Vec::with_capacity(2 * (n + 2 * g.edge_count())),
            out: vec![Vec::new(); 2 * n],
        };
        for v in g.vertices() {
            let cap = if v == s || v == t { big } else { 1 };
            net.add(2 * v, 2 * v + 1, cap);
        }
        for (u, v) in g.edges() {
            net.add(2 * u + 1, 2 * v, big);
            net.add(2 * v + 1, 2 * u, big);
        }
        net
    }

    fn add(&mut self, from: usize, to: usize, cap: usize) {
        self.out[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap });
        self.out[to].push(self.arcs.len());
        self.arcs.push(Arc { to: from, cap: 0 });
    }

    /// Breadth-first augmenting path; pushes one unit and returns `true`
    /// when the sink was reached.
    fn augment(&mut self, source: usize, sink: usize) -> bool {
        let mut via = vec![usize::MAX; self.out.len()];
        let mut seen = vec![false; self.out.len()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            if u == sink {
                break;
            }
            for &a in &self.out[u] {
                let w = self.arcs[a].to;
                if self.arcs[a].cap > 0 && !seen[w] {
                    seen[w] = true;
                    via[w] = a;
                    queue.push_back(w);
                }
            }
        }
        if !seen[sink] {
            return false;
        }
        let mut node = sink;
        while node != source {
            let a = via[node];
            self.arcs[a].cap -= 1;
            self.arcs[a ^ 1].cap += 1;
            node = self.arcs[a ^ 1].to;
        }
        true
    }

    fn reachable(&self, source: usize) -> Vec<bool> {
        let mut seen = vec![false; self.out.len()];
        seen[source] = true;
        let mut stack = vec![source];
        while let Some(u) = stack.pop() {
            for &a in &self.out[u] {
                let w = self.arcs[a].to;
                if self.arcs[a].cap > 0 && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }
}

/// Minimum vertex cut separating non-adjacent `s` and `t`.
///
/// Returns `None` once more than `limit` vertex-disjoint paths are found,
/// otherwise the (sorted) separator of minimum size.
pub fn local_vertex_cut(g: &Graph, s: usize, t: usize, limit: usize) -> Option<Vec<usize>> {
    assert!(
        s != t && !g.has_edge(s, t),
        "s and t must be distinct and non-adjacent"
    );
    let mut net = FlowNetwork::new(g, s, t);
    let (source, sink) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    while net.augment(source, sink) {
        flow += 1;
        if flow > limit {
            return None;
        }
    }
    let reach = net.reachable(source);
    let separator: Vec<usize> = g
        .vertices()
        .filter(|&v| reach[2 * v] && !reach[2 * v + 1])
        .collect();
    debug_assert_eq!(separator.len(), flow);
    Some(separator)
}

/// Exact vertex connectivity.
///
/// Pairs are swept in a fixed order: `i` over the first `kappa + 1`
/// vertices, `j > i` over vertices not adjacent to `i`. A minimum separator
/// must miss one of the first `kappa + 1` vertices and the smallest such
/// vertex has a non-neighbor of larger index on the far side, so the sweep
/// is exhaustive. The first strictly smaller cut found wins, which makes the
/// certificate deterministic.
pub fn vertex_connectivity(g: &Graph) -> CutCertificate {
    let n = g.vertex_count();
    let components = g.components();
    if components.len() != 1 {
        return CutCertificate {
            kappa: 0,
            separator: Vec::new(),
            components,
        };
    }
    if g.edge_count() == n * (n - 1) / 2 {
        let separator: Vec<usize> = (0..n - 1).collect();
        return CutCertificate {
            kappa: n - 1,
            components: vec![vec![n - 1]],
            separator,
        };
    }
    let mut best: Option<Vec<usize>> = None;
    let mut i = 0;
    while i < n && i <= best.as_ref().map_or(n, Vec::len) {
        for j in i + 1..n {
            if g.has_edge(i, j) {
                continue;
            }
            let limit = best.as_ref().map_or(n, |b| b.len() - 1);
            if let Some(cut) = local_vertex_cut(g, i, j, limit) {
                best = Some(cut);
            }
        }
        i += 1;
    }
    let separator = best.expect("a non-complete connected graph has a non-adjacent pair");
    CutCertificate {
        kappa: separator.len(),
        components: g.components_without(&separator),
        separator,
    }
}

/// Whether some separator of exactly `kappa` vertices leaves at least three
/// components. Subsets are enumerated exhaustively; `None` means more than
/// `max_subsets` subsets would be needed.
pub fn three_component_separator_exists(
    g: &Graph,
    cert: &CutCertificate,
    max_subsets: u64,
) -> Option<bool> {
    if cert.components.len() >= 3 {
        return Some(true);
    }
    let n = g.vertex_count();
    let k = cert.kappa;
    if k == 0 {
        return Some(false);
    }
    if binomial(n as u64, k as u64).is_none_or(|c| c > max_subsets) {
        return None;
    }
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        if g.components_without(&subset).len() >= 3 {
            return Some(true);
        }
        // Next k-subset in lexicographic order.
        let mut pos = k;
        while pos > 0 && subset[pos - 1] == n - k + pos - 1 {
            pos -= 1;
        }
        if pos == 0 {
            return Some(false);
        }
        subset[pos - 1] += 1;
        for q in pos..k {
            subset[q] = subset[q - 1] + 1;
        }
    }
}

fn binomial(n: u64, k: u64) -> Option<u64> {
    let k = k.min(n.saturating_sub(k));
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}
