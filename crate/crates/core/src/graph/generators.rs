//! Named graph families, gadget combinators and a seeded random generator
//! for regular graphs without 4-cycles.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, GraphError};

fn invalid(message: impl Into<String>) -> GraphError {
    GraphError::InvalidParameters(message.into())
}

/// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`
/// (`i+5 ~ (i+2) mod 5 + 5`), spokes `i ~ i+5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
        edges.push((i, i + 5));
    }
    Graph::from_edges(10, edges).expect("static edge list")
}

/// The Heawood graph (3-regular, girth 6, 14 vertices): a 14-cycle with
/// chords `i ~ i+5` for even `i`.
pub fn heawood() -> Graph {
    let mut edges = Vec::with_capacity(21);
    for i in 0..14 {
        edges.push((i, (i + 1) % 14));
        if i % 2 == 0 {
            edges.push((i, (i + 5) % 14));
        }
    }
    Graph::from_edges(14, edges).expect("static edge list")
}

/// `K_{d,d}` with parts `0..d` and `d..2d`.
pub fn complete_bipartite(d: usize) -> Result<Graph, GraphError> {
    if d == 0 {
        return Err(invalid("K_{d,d} needs d >= 1"));
    }
    let edges = (0..d).flat_map(|u| (d..2 * d).map(move |v| (u, v)));
    Graph::from_edges(2 * d, edges)
}

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, edges).expect("complete graph")
}

/// The cycle `C_n` on `0..n`.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(invalid("a cycle needs at least 3 vertices"));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(invalid("a path needs at least 1 vertex"));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// Deletes the edge `{u, v}` and attaches a new vertex adjacent to both
/// endpoints. Returns the graph and the new vertex, which has degree 2.
pub fn with_port(base: &Graph, (u, v): (usize, usize)) -> Result<(Graph, usize), GraphError> {
    if !base.has_edge(u, v) {
        return Err(invalid(format!("{u}-{v} is not an edge")));
    }
    let port = base.vertex_count();
    let g = base
        .without_edge(u, v)
        .with_vertices(1)
        .with_edge(port, u)?
        .with_edge(port, v)?;
    Ok((g, port))
}

/// Deletes the edge `{u, v}`, leaving both endpoints one short of their
/// former degree.
pub fn two_port(base: &Graph, (u, v): (usize, usize)) -> Result<(Graph, usize, usize), GraphError> {
    if !base.has_edge(u, v) {
        return Err(invalid(format!("{u}-{v} is not an edge")));
    }
    Ok((base.without_edge(u, v), u, v))
}

/// Disjoint union of `a` and `b` plus the edge `a_port ~ b_port`
/// (`b_port` indexes `b`).
pub fn bridged(a: &Graph, a_port: usize, b: &Graph, b_port: usize) -> Result<Graph, GraphError> {
    a.disjoint_union(b)
        .with_edge(a_port, a.vertex_count() + b_port)
}

/// Removes `{u1, v1}` from `a` and `{u2, v2}` from `b`, then joins the
/// disjoint union with `u1 ~ u2` and `v1 ~ v2`. Degrees are preserved and
/// `{u1, v1}` separates the copy of `a` from the copy of `b`.
pub fn edge_swap_join(
    a: &Graph,
    (u1, v1): (usize, usize),
    b: &Graph,
    (u2, v2): (usize, usize),
) -> Result<Graph, GraphError> {
    if !a.has_edge(u1, v1) || !b.has_edge(u2, v2) {
        return Err(invalid("join edges must exist"));
    }
    let offset = a.vertex_count();
    a.without_edge(u1, v1)
        .disjoint_union(&b.without_edge(u2, v2))
        .with_edge(u1, u2 + offset)?
        .with_edge(v1, v2 + offset)
}

/// Retry budget for [`random_c4_free_regular`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomRegularConfig {
    /// Fresh random regular graphs tried before giving up.
    pub max_restarts: usize,
    /// Edge swaps attempted per restart, as a multiple of `n * d`.
    pub swaps_per_stub: usize,
}

impl Default for RandomRegularConfig {
    fn default() -> Self {
        RandomRegularConfig {
            max_restarts: 40,
            swaps_per_stub: 200,
        }
    }
}

/// Smallest vertex count attempted for a `d`-regular C4-free graph: the
/// girth-5 Moore bound `d^2 + 1` for `d >= 2`, and `d + 1` below that.
pub fn c4_free_vertex_floor(d: usize) -> usize {
    if d >= 2 {
        d * d + 1
    } else {
        d + 1
    }
}

/// Seeded random `d`-regular graph on `n` vertices without 4-cycles.
///
/// A simple regular graph is drawn by random stub pairing, then random
/// double-edge swaps that never increase the local 4-cycle count are applied
/// until no 4-cycle remains. Each restart gets a fixed swap budget; when all
/// restarts are spent the call fails rather than return an invalid graph.
/// Output is a pure function of `(d, n, seed)`.
pub fn random_c4_free_regular(d: usize, n: usize, seed: u64) -> Result<Graph, GraphError> {
    random_c4_free_regular_with(d, n, seed, RandomRegularConfig::default())
}

pub fn random_c4_free_regular_with(
    d: usize,
    n: usize,
    seed: u64,
    config: RandomRegularConfig,
) -> Result<Graph, GraphError> {
    if (n * d) % 2 == 1 {
        return Err(invalid(format!("n * d = {n} * {d} is odd")));
    }
    let floor = c4_free_vertex_floor(d);
    if n < floor {
        return Err(invalid(format!(
            "n = {n} is below the feasibility floor {floor} for d = {d}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..config.max_restarts {
        let Some(mut work) = Workspace::random_regular(d, n, &mut rng) else {
            continue;
        };
        if work.eliminate_c4(config.swaps_per_stub * n * d.max(1), &mut rng) {
            let g = work.into_graph();
            debug_assert!(g.vertices().all(|v| g.degree(v) == d));
            return Ok(g);
        }
    }
    Err(GraphError::BudgetExhausted {
        degree: d,
        vertex_count: n,
    })
}

/// Mutable adjacency used while generating.
struct Workspace {
    adjacency: Vec<Vec<usize>>,
}

impl Workspace {
    fn has(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(&v)
    }

    fn add(&mut self, u: usize, v: usize) {
        self.adjacency[u].push(v);
        self.adjacency[v].push(u);
    }

    fn remove(&mut self, u: usize, v: usize) {
        self.adjacency[u].retain(|&w| w != v);
        self.adjacency[v].retain(|&w| w != u);
    }

    /// Random stub pairing that only ever joins distinct, non-adjacent
    /// vertices. Returns `None` when it paints itself into a corner.
    fn random_regular(d: usize, n: usize, rng: &mut ChaCha8Rng) -> Option<Workspace> {
        let mut work = Workspace {
            adjacency: vec![Vec::with_capacity(d); n],
        };
        let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
        let mut failures = 0;
        while !stubs.is_empty() {
            let i = rng.gen_range(0..stubs.len());
            let j = rng.gen_range(0..stubs.len());
            let (u, v) = (stubs[i], stubs[j]);
            if i != j && u != v && !work.has(u, v) {
                work.add(u, v);
                let (hi, lo) = (i.max(j), i.min(j));
                stubs.swap_remove(hi);
                stubs.swap_remove(lo);
                failures = 0;
                continue;
            }
            failures += 1;
            if failures > 8 * stubs.len() + 16 {
                let mut pairs = Vec::new();
                for a in 0..stubs.len() {
                    for b in a + 1..stubs.len() {
                        if stubs[a] != stubs[b] && !work.has(stubs[a], stubs[b]) {
                            pairs.push((a, b));
                        }
                    }
                }
                let &(a, b) = pairs.choose(rng)?;
                work.add(stubs[a], stubs[b]);
                stubs.swap_remove(b);
                stubs.swap_remove(a);
                failures = 0;
            }
        }
        Some(work)
    }

    /// Some 4-cycle `[a, x, w, y]`, scanning from vertex `start`.
    fn find_c4(&self, start: usize) -> Option<[usize; 4]> {
        let n = self.adjacency.len();
        (0..n)
            .map(|k| (start + k) % n)
            .find_map(|a| self.c4_through(a).next())
    }

    fn c4_through(&self, a: usize) -> impl Iterator<Item = [usize; 4]> + '_ {
        let ns = &self.adjacency[a];
        ns.iter().enumerate().flat_map(move |(i, &x)| {
            ns[i + 1..].iter().flat_map(move |&y| {
                self.adjacency[x]
                    .iter()
                    .filter(move |&&w| w != a && self.has(w, y))
                    .map(move |&w| [a, x, w, y])
            })
        })
    }

    /// Number of distinct 4-cycles meeting any vertex of `touched`.
    fn local_c4_count(&self, touched: &[usize]) -> usize {
        let mut keys: Vec<[(usize, usize); 4]> = Vec::new();
        for &a in touched {
            for [p, q, r, s] in self.c4_through(a) {
                let mut key = [(p, q), (q, r), (r, s), (s, p)].map(|(u, v)| (u.min(v), u.max(v)));
                key.sort_unstable();
                keys.push(key);
            }
        }
        keys.sort_unstable();
        keys.dedup();
        keys.len()
    }

    fn eliminate_c4(&mut self, budget: usize, rng: &mut ChaCha8Rng) -> bool {
        let n = self.adjacency.len();
        if n == 0 {
            return true;
        }
        for _ in 0..budget {
            let Some(cycle) = self.find_c4(rng.gen_range(0..n)) else {
                return true;
            };
            let k = rng.gen_range(0..4);
            let (a, b) = (cycle[k], cycle[(k + 1) % 4]);
            let c = rng.gen_range(0..n);
            let Some(&e) = self.adjacency[c].choose(rng) else {
                continue;
            };
            if a == c || a == e || b == c || b == e || self.has(a, c) || self.has(b, e) {
                continue;
            }
            let touched = [a, b, c, e];
            let before = self.local_c4_count(&touched);
            self.remove(a, b);
            self.remove(c, e);
            self.add(a, c);
            self.add(b, e);
            let after = self.local_c4_count(&touched);
            // Sideways moves keep the walk mobile on plateaus; a rare uphill
            // move lets it leave shallow local minima.
            if after > before && !(after == before + 1 && rng.gen_bool(0.01)) {
                self.remove(a, c);
                self.remove(b, e);
                self.add(a, b);
                self.add(c, e);
            }
        }
        self.find_c4(0).is_none()
    }

    fn into_graph(self) -> Graph {
        let n = self.adjacency.len();
        let edges: Vec<_> = self
            .adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().map(move |&v| (u, v)))
            .collect();
        Graph::from_edges(n, edges).expect("generator keeps the graph simple")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn has_c4(g: &Graph) -> bool {
        g.vertices().any(|u| {
            g.vertices()
                .any(|v| u < v && g.common_neighbor_count(u, v) >= 2)
        })
    }

    #[test]
    fn petersen_shape() {
        let g = petersen();
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edge_count(), 15);
        assert!(g.vertices().all(|v| g.degree(v) == 3));
        assert!(g.has_edge(5, 7) && g.has_edge(9, 6) && g.has_edge(4, 9));
        g.check_invariants().unwrap();
    }

    #[test]
    fn heawood_shape() {
        let g = heawood();
        assert_eq!(g.edge_count(), 21);
        assert!(g.vertices().all(|v| g.degree(v) == 3));
        assert!(!has_c4(&g));
    }

    #[test]
    fn complete_bipartite_shapes() {
        assert_eq!(complete_bipartite(1).unwrap().edge_count(), 1);
        assert_eq!(complete_bipartite(4).unwrap().edge_count(), 16);
        assert!(has_c4(&complete_bipartite(3).unwrap()));
        assert!(complete_bipartite(0).is_err());
    }

    #[test]
    fn cycles() {
        assert!(cycle(2).is_err());
        assert_eq!(cycle(3).unwrap(), complete(3));
        assert!(has_c4(&cycle(4).unwrap()));
        assert!(!has_c4(&cycle(5).unwrap()));
    }

    #[test]
    fn port_gadgets_keep_degrees() {
        let (g, p) = with_port(&petersen(), (0, 1)).unwrap();
        assert_eq!(g.vertex_count(), 11);
        assert_eq!(g.degree(p), 2);
        assert!(g.vertices().filter(|&v| v != p).all(|v| g.degree(v) == 3));
        assert!(!has_c4(&g));
        let joined = bridged(&g, p, &g, p).unwrap();
        assert!(joined.vertices().all(|v| joined.degree(v) == 3));
        assert!(with_port(&petersen(), (0, 2)).is_err());
    }

    #[test]
    fn edge_swap_join_is_regular() {
        let g = edge_swap_join(&petersen(), (0, 1), &petersen(), (0, 1)).unwrap();
        assert_eq!(g.vertex_count(), 20);
        assert!(g.vertices().all(|v| g.degree(v) == 3));
        assert!(!has_c4(&g));
        assert_eq!(g.components_without(&[0, 1]).len(), 2);
    }

    #[test]
    fn random_rejects_infeasible() {
        assert!(matches!(
            random_c4_free_regular(3, 11, 0),
            Err(GraphError::InvalidParameters(_))
        ));
        assert!(matches!(
            random_c4_free_regular(3, 4, 0),
            Err(GraphError::InvalidParameters(_))
        ));
    }

    #[test]
    fn random_cubic_on_ten_vertices() {
        let g = random_c4_free_regular(3, 10, 7).unwrap();
        assert!(g.vertices().all(|v| g.degree(v) == 3));
        assert!(!has_c4(&g));
    }

    #[test]
    fn random_two_regular_is_cycle_union() {
        let g = random_c4_free_regular(2, 5, 3).unwrap();
        assert_eq!(g.edge_count(), 5);
        assert!(g.is_connected());
        assert!(!has_c4(&g));
    }

    #[test]
    fn random_is_deterministic() {
        assert_eq!(
            random_c4_free_regular(4, 30, 11).unwrap(),
            random_c4_free_regular(4, 30, 11).unwrap()
        );
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let tiny = RandomRegularConfig {
            max_restarts: 1,
            swaps_per_stub: 0,
        };
        // With no swaps allowed the first random cubic graph on 10 vertices
        // almost surely has a 4-cycle; either outcome must be valid.
        match random_c4_free_regular_with(3, 10, 1, tiny) {
            Ok(g) => assert!(!has_c4(&g)),
            Err(e) => assert!(matches!(e, GraphError::BudgetExhausted { .. })),
        }
    }
}
