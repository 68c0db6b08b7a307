//! Independent reference implementations shared by the integration tests.
#![allow(dead_code)]

use bchromatic::graph::{self, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// b-chromatic number by enumerating every partition of the vertex set
/// (restricted growth strings). Only for tiny graphs.
pub fn naive_b_chromatic(g: &Graph) -> usize {
    naive_b_spectrum(g).last().copied().unwrap_or(0)
}

/// Every `k` for which a b-coloring with exactly `k` colors exists.
pub fn naive_b_spectrum(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    if n == 0 {
        return Vec::new();
    }
    let mut found = vec![false; n + 1];
    let mut label = vec![0usize; n];
    loop {
        let k = label.iter().max().unwrap() + 1;
        if !found[k] && is_b_coloring(g, &label, k) {
            found[k] = true;
        }
        // Next restricted growth string.
        let mut i = n - 1;
        loop {
            let prefix_max = label[..i].iter().copied().max().unwrap_or(0);
            if i > 0 && label[i] <= prefix_max {
                label[i] += 1;
                for x in &mut label[i + 1..] {
                    *x = 0;
                }
                break;
            }
            if i <= 1 {
                return (1..=n).filter(|&k| found[k]).collect();
            }
            i -= 1;
        }
    }
}

/// `labels` are 0-based classes `0..k`.
pub fn is_b_coloring(g: &Graph, labels: &[usize], k: usize) -> bool {
    if g.edges().any(|(u, v)| labels[u] == labels[v]) {
        return false;
    }
    (0..k).all(|c| {
        g.vertices().filter(|&v| labels[v] == c).any(|v| {
            let mut seen = vec![false; k];
            for &w in g.neighbors(v) {
                seen[labels[w]] = true;
            }
            (0..k).all(|x| x == c || seen[x])
        })
    })
}

/// Perfect matching exists iff some permutation of the right side fits.
pub fn exhaustive_has_perfect_matching(k: usize, adj: &[Vec<bool>]) -> bool {
    fn go(row: usize, k: usize, adj: &[Vec<bool>], used: &mut [bool]) -> bool {
        if row == k {
            return true;
        }
        (0..k).any(|j| {
            if used[j] || !adj[row][j] {
                return false;
            }
            used[j] = true;
            let ok = go(row + 1, k, adj, used);
            used[j] = false;
            ok
        })
    }
    go(0, k, adj, &mut vec![false; k])
}

/// Erdos-Renyi graph with a fixed seed.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn cube() -> Graph {
    let edges = (0..8usize).flat_map(|u| {
        (0..3)
            .map(move |b| (u, u ^ (1 << b)))
            .filter(|&(u, v)| u < v)
    });
    Graph::from_edges(8, edges).unwrap()
}

/// Small graphs for oracle cross-checks.
pub fn small_corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = (3..=8)
        .map(|n| (format!("C{n}"), graph::cycle(n).unwrap()))
        .collect();
    out.push(("K4".into(), graph::complete(4)));
    out.push(("K33".into(), graph::complete_bipartite(3).unwrap()));
    out.push(("cube".into(), cube()));
    for seed in 0..30u64 {
        let n = 4 + (seed as usize % 5);
        let p = [0.3, 0.5, 0.7][seed as usize % 3];
        out.push((format!("gnp({n},{p},{seed})"), random_graph(n, p, seed)));
    }
    out
}

/// Proper coloring choosing uniformly among free colors in `1..=palette`,
/// visiting vertices in a random order; falls back to a fresh color when
/// the palette is exhausted.
pub fn random_proper_coloring(g: &Graph, palette: usize, seed: u64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = g.vertices().collect();
    for i in (1..order.len()).rev() {
        order.swap(i, rng.gen_range(0..=i));
    }
    let mut colors = vec![0; g.vertex_count()];
    for v in order {
        let taken: Vec<usize> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
        let free: Vec<usize> = (1..=palette).filter(|c| !taken.contains(c)).collect();
        colors[v] = if free.is_empty() {
            taken.iter().max().unwrap() + 1
        } else {
            free[rng.gen_range(0..free.len())]
        };
    }
    colors
}

/// Gadgets: cubic graphs without 4-cycles and diameter at least 6, built by
/// bridging two Petersen or Heawood graphs that each had one edge
/// subdivided.
pub fn cubic_large_diameter() -> Vec<(String, Graph)> {
    let p = graph::petersen();
    let h = graph::heawood();
    let (pa, pa_port) = graph::with_port(&p, (0, 1)).unwrap();
    let (pb, pb_port) = graph::with_port(&p, (0, 5)).unwrap();
    let (ha, ha_port) = graph::with_port(&h, (0, 1)).unwrap();
    vec![
        (
            "petersen-bridge-petersen".into(),
            graph::bridged(&pa, pa_port, &pa, pa_port).unwrap(),
        ),
        (
            "petersen-bridge-petersen'".into(),
            graph::bridged(&pa, pa_port, &pb, pb_port).unwrap(),
        ),
        (
            "petersen-bridge-heawood".into(),
            graph::bridged(&pa, pa_port, &ha, ha_port).unwrap(),
        ),
        (
            "heawood-bridge-heawood".into(),
            graph::bridged(&ha, ha_port, &ha, ha_port).unwrap(),
        ),
    ]
}

/// Cubic graphs without 4-cycles whose vertex connectivity is 2.
pub fn cubic_two_cuts() -> Vec<(String, Graph)> {
    let p = graph::petersen();
    let h = graph::heawood();
    vec![
        (
            "petersen-swap-petersen".into(),
            graph::edge_swap_join(&p, (0, 1), &p, (0, 1)).unwrap(),
        ),
        (
            "petersen-swap-heawood".into(),
            graph::edge_swap_join(&p, (0, 1), &h, (0, 1)).unwrap(),
        ),
        (
            "heawood-swap-heawood".into(),
            graph::edge_swap_join(&h, (0, 1), &h, (0, 1)).unwrap(),
        ),
    ]
}

/// Vertex counts used for the generated suite of degree `d`.
pub fn suite_sizes(d: usize) -> Vec<usize> {
    match d {
        3 => (10..=60).step_by(2).collect(),
        4 => (20..=60).collect(),
        5 => (34..=60).step_by(2).collect(),
        _ => (50..=60).collect(),
    }
}
