//! Which lower bounds on the b-chromatic number a graph's structure implies.
//!
//! Every check assumes a `d`-regular graph without 4-cycles and reports
//! `applies: false` otherwise. The JSON keys of [`HypothesisReport`] are part
//! of the CLI's output contract.

use serde::Serialize;

use super::{
    contains_c4, diameter, five_cycle_stats, girth, has_triangle, is_regular,
    three_component_separator_exists, vertex_connectivity, Extent, FiveCycleStats, TwoPath,
};
use crate::graph::Graph;

/// Largest number of `kappa`-subsets scanned when looking for a separator
/// that leaves three components.
const SEPARATOR_SCAN_LIMIT: u64 = 200_000;

/// Neighborhood-seeding bound `floor((d+3)/2)`, or `floor((d+4)/2)` with a
/// triangle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeedingCheck {
    pub applies: bool,
    pub bound: Option<usize>,
}

/// A vertex whose incident edges (and, for the packing variant, 2-paths)
/// carry few 5-cycles forces `d + 1` colors. `None` when the 5-cycle
/// statistics were refused as too large.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiveCycleCheck {
    pub applies: Option<bool>,
    pub vertex: Option<usize>,
    /// Twice the admissible count: `d - 2`, or `d - 1` when the girth is 5.
    pub doubled_threshold: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectivityCheck {
    pub applies: bool,
    pub bound: Option<usize>,
    /// Whether some minimum separator leaves three or more components
    /// (`None` when the scan was skipped as too large).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub three_component_separator: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HypothesisReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub regular_degree: Option<usize>,
    pub c4_free: bool,
    pub has_triangle: bool,
    pub girth: Extent,
    pub diameter: Extent,
    pub kappa: usize,
    pub separator: Vec<usize>,
    pub neighborhood_seeding: SeedingCheck,
    pub edge_five_cycles: FiveCycleCheck,
    pub disjoint_five_cycles: FiveCycleCheck,
    pub large_diameter: SeedingCheck,
    pub low_connectivity: SeedingCheck,
    pub moderate_connectivity: ConnectivityCheck,
    /// Best lower bound on the b-chromatic number among applicable checks.
    pub implied_lower_bound: Option<usize>,
    /// `Delta + 1`.
    pub upper_bound: usize,
}

impl HypothesisReport {
    /// Checks that imply exactly `d + 1` colors.
    pub fn forces_full_palette(&self) -> bool {
        self.regular_degree
            .is_some_and(|d| self.implied_lower_bound == Some(d + 1))
    }
}

fn check(applies: bool, bound: usize) -> SeedingCheck {
    SeedingCheck {
        applies,
        bound: applies.then_some(bound),
    }
}

/// First vertex all of whose incident edges and 2-paths pass `edge_ok` /
/// `path_ok`.
fn find_quiet_vertex(
    g: &Graph,
    stats: &FiveCycleStats,
    edge_ok: impl Fn((usize, usize)) -> bool,
    path_ok: impl Fn(&TwoPath) -> bool,
) -> Option<usize> {
    g.vertices().find(|&v| {
        let edges_ok = g
            .neighbors(v)
            .iter()
            .all(|&u| edge_ok((u.min(v), u.max(v))));
        edges_ok
            && stats
                .max_path_disjoint
                .keys()
                .filter(|p| p.mid == v || p.ends.0 == v || p.ends.1 == v)
                .all(&path_ok)
    })
}

pub fn check_theorem_hypotheses(g: &Graph) -> HypothesisReport {
    let regular_degree = is_regular(g);
    let c4_free = !contains_c4(g);
    let triangle = has_triangle(g);
    let girth = girth(g);
    let diam = diameter(g).diameter;
    let cut = vertex_connectivity(g);
    let kappa = cut.kappa as i64;

    let class = regular_degree.filter(|_| c4_free);
    let d = class.map_or(0, |d| d as i64);
    let in_class = class.is_some();
    let full = class.map_or(0, |d| d + 1);

    let seeding_bound = class.map_or(0, |d| if triangle { (d + 4) / 2 } else { (d + 3) / 2 });
    let neighborhood_seeding = check(in_class, seeding_bound);

    let doubled = if girth == Extent::Finite(5) {
        d - 1
    } else {
        d - 2
    };
    let (edge_five_cycles, disjoint_five_cycles) = if !in_class {
        let no = FiveCycleCheck {
            applies: Some(false),
            vertex: None,
            doubled_threshold: None,
        };
        (no.clone(), no)
    } else {
        match five_cycle_stats(g) {
            Ok(stats) => {
                let small = |count: usize| 2 * count as i64 <= doubled;
                let by_count =
                    find_quiet_vertex(g, &stats, |e| small(stats.per_edge_count[&e]), |_| true);
                let by_packing = find_quiet_vertex(
                    g,
                    &stats,
                    |e| small(stats.max_edge_disjoint[&e]),
                    |p| small(stats.max_path_disjoint[p]),
                );
                let make = |vertex: Option<usize>| FiveCycleCheck {
                    applies: Some(vertex.is_some()),
                    vertex,
                    doubled_threshold: Some(doubled),
                };
                (make(by_count), make(by_packing))
            }
            Err(_) => {
                let unknown = FiveCycleCheck {
                    applies: None,
                    vertex: None,
                    doubled_threshold: Some(doubled),
                };
                (unknown.clone(), unknown)
            }
        }
    };

    let large_diameter = check(in_class && diam.at_least(6), full);
    let low_connectivity = check(in_class && 2 * kappa <= d + 1, full);

    let moderate = in_class && 3 * kappa < 2 * d - 1;
    let three = if moderate {
        three_component_separator_exists(g, &cut, SEPARATOR_SCAN_LIMIT)
    } else {
        None
    };
    let moderate_bound = class.map(|d| {
        if three == Some(true) {
            d + 1
        } else {
            (2 * ((d + 4) / 3)).min(d + 1)
        }
    });
    let moderate_connectivity = ConnectivityCheck {
        applies: moderate,
        bound: moderate_bound.filter(|_| moderate),
        three_component_separator: three,
    };

    let mut candidates = vec![neighborhood_seeding.bound];
    for c in [&edge_five_cycles, &disjoint_five_cycles] {
        if c.applies == Some(true) {
            candidates.push(Some(full));
        }
    }
    candidates.extend([
        large_diameter.bound,
        low_connectivity.bound,
        moderate_connectivity.bound,
    ]);
    let implied_lower_bound = candidates.into_iter().flatten().max();

    HypothesisReport {
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        regular_degree,
        c4_free,
        has_triangle: triangle,
        girth,
        diameter: diam,
        kappa: cut.kappa,
        separator: cut.separator,
        neighborhood_seeding,
        edge_five_cycles,
        disjoint_five_cycles,
        large_diameter,
        low_connectivity,
        moderate_connectivity,
        implied_lower_bound,
        upper_bound: g.max_degree() + 1,
    }
}
