//! End-to-end constructions for `d`-regular graphs without 4-cycles.

use std::collections::BTreeSet;

use super::{
    greedy_extend, plan_seed, reduce_unrealized, seed_dominating_neighborhood, seed_into,
    verify_bcoloring, ColorMap, Coloring, Construction, ConstructionError, ConstructionTrace,
    PartialColoring, Strategy,
};
use crate::analysis::{contains_c4, diameter, find_triangle, is_regular, vertex_connectivity};
use crate::graph::Graph;
use crate::oracle::{exists_bcoloring_with_k, OracleConfig};

/// Degree of a regular graph without 4-cycles, or a hypothesis error.
fn class_degree(g: &Graph) -> Result<usize, ConstructionError> {
    let d = is_regular(g).ok_or_else(|| {
        ConstructionError::Hypothesis("graph is not regular (or has no vertices)".into())
    })?;
    if contains_c4(g) {
        return Err(ConstructionError::Hypothesis(
            "graph contains a 4-cycle".into(),
        ));
    }
    Ok(d)
}

fn finish(
    g: &Graph,
    coloring: Coloring,
    strategy: Strategy,
    guaranteed: usize,
    trace: ConstructionTrace,
) -> Result<Construction, ConstructionError> {
    let coloring = coloring.compacted();
    let report = verify_bcoloring(g, &coloring)?;
    if !report.is_b_coloring || report.color_count() < guaranteed {
        return Err(ConstructionError::Invariant(format!(
            "{strategy:?} construction produced {} colors (b-coloring: {}), expected at least {guaranteed}",
            report.color_count(),
            report.is_b_coloring
        )));
    }
    Ok(Construction {
        coloring,
        strategy,
        guaranteed,
        trace,
    })
}

/// Direct `(d + 1)`-b-colorings for regular graphs of degree at most 2
/// without 4-cycles: one color for edgeless graphs, `1, 2` on each edge of
/// a perfect matching, and for unions of cycles `1, 2, 3` on a triangle or
/// `1, 2, 3, 1, 2` along five consecutive vertices of a longer cycle.
pub fn construct_small_case_bcoloring(g: &Graph) -> Result<Construction, ConstructionError> {
    let d = class_degree(g)?;
    let n = g.vertex_count();
    let colors = match d {
        0 => vec![1; n],
        1 => {
            let mut colors = vec![0; n];
            for (u, v) in g.edges() {
                colors[u] = 1;
                colors[v] = 2;
            }
            colors
        }
        2 => {
            // Walk the cycle through vertex 0 towards its smaller neighbor.
            let mut walk = vec![0, g.neighbors(0)[0]];
            while walk.len() < 5 {
                let (prev, cur) = (walk[walk.len() - 2], walk[walk.len() - 1]);
                let next = g
                    .neighbors(cur)
                    .iter()
                    .copied()
                    .find(|&w| w != prev)
                    .expect("degree 2");
                if next == walk[0] {
                    break;
                }
                walk.push(next);
            }
            let mut partial = PartialColoring::new(n, 3);
            for (i, &x) in walk.iter().enumerate() {
                partial.assign(g, x, i % 3 + 1)?;
            }
            greedy_extend(g, &partial, &[0])?.colors().to_vec()
        }
        _ => {
            return Err(ConstructionError::Hypothesis(format!(
                "direct construction covers degree at most 2, got {d}"
            )))
        }
    };
    let coloring = Coloring::new(d + 1, colors)?;
    finish(
        g,
        coloring,
        Strategy::SmallCase,
        d + 1,
        ConstructionTrace::default(),
    )
}

/// Seeds around one well-chosen center, completes greedily and removes
/// colors without dominating vertices. Yields at least `floor((d+3)/2)`
/// colors, or `floor((d+4)/2)` when `d` is even and the graph has a
/// triangle.
///
/// The center is the smallest vertex on a triangle in the even-degree
/// triangle case, and otherwise the vertex with the fewest edges inside its
/// neighborhood. For odd `d` the neighborhood of any vertex induces a
/// matching on an odd number of vertices, so a neighbor without neighbors
/// inside it always exists.
pub fn construct_lower_bound_bcoloring(g: &Graph) -> Result<Construction, ConstructionError> {
    let d = class_degree(g)?;
    if d <= 2 {
        return construct_small_case_bcoloring(g);
    }
    let triangle = if d % 2 == 0 { find_triangle(g) } else { None };
    let (center, steps, triangle_mode) = match triangle {
        Some(t) => (t[0], d / 2 + 1, true),
        None => {
            let inside = |v: usize| {
                let ns = g.neighbors(v);
                ns.iter()
                    .map(|&x| g.neighbors(x).iter().filter(|w| ns.contains(w)).count())
                    .sum::<usize>()
            };
            let center = g
                .vertices()
                .min_by_key(|&v| inside(v))
                .expect("regular graph is non-empty");
            (center, d.div_ceil(2), false)
        }
    };
    let plan = plan_seed(g, center, steps, triangle_mode, ColorMap::identity(d + 1))?;
    let (partial, seed) = seed_dominating_neighborhood(g, &plan)?;
    let full = greedy_extend(g, &partial, &[center])?;
    let (reduced, passes) = reduce_unrealized(g, &full)?;
    let trace = ConstructionTrace {
        seeds: vec![seed],
        reduction: passes,
        oracle_fallback: false,
    };
    finish(g, reduced, Strategy::LowerBound, steps + 1, trace)
}

/// Seeds two sides so that together they realize all `d + 1` colors, then
/// completes greedily. The seeded regions must be non-adjacent.
fn two_sided(
    g: &Graph,
    d: usize,
    (a, a_order, a_steps): (usize, Vec<usize>, usize),
    (b, b_order, b_steps): (usize, Vec<usize>, usize),
) -> Result<(Coloring, ConstructionTrace), ConstructionError> {
    let palette = d + 1;
    let first: Vec<usize> = (1..=a_steps + 1).collect();
    let second: Vec<usize> = (a_steps + 2..=palette).collect();
    let map_a = ColorMap::realizing(palette, a_steps, &first)?;
    let map_b = ColorMap::realizing(palette, b_steps, &second)?;
    let plan_a = super::SeedPlan::new(g, a, a_order, a_steps, map_a, false)?;
    let plan_b = super::SeedPlan::new(g, b, b_order, b_steps, map_b, false)?;
    let mut partial = PartialColoring::new(g.vertex_count(), palette);
    let seed_a = seed_into(g, &plan_a, &mut partial)?;
    let seed_b = seed_into(g, &plan_b, &mut partial)?;
    let coloring = greedy_extend(g, &partial, &[a, b])?;
    let trace = ConstructionTrace {
        seeds: vec![seed_a, seed_b],
        reduction: Vec::new(),
        oracle_fallback: false,
    };
    Ok((coloring, trace))
}

/// `d + 1` colors when the diameter is at least 6 (or the graph is
/// disconnected): the two ends `v`, `w` of a longest shortest path have
/// disjoint, non-adjacent 2-balls. `v` is seeded with `floor((d+1)/2)`
/// steps realizing `1..=floor((d+3)/2)` and `w` with the remaining steps
/// realizing the other colors.
pub fn construct_diameter_bcoloring(g: &Graph) -> Result<Construction, ConstructionError> {
    let d = class_degree(g)?;
    let info = diameter(g);
    if !info.diameter.at_least(6) {
        return Err(ConstructionError::Hypothesis(format!(
            "diameter {} is below 6",
            info.diameter
        )));
    }
    if d <= 2 {
        return construct_small_case_bcoloring(g);
    }
    let (v, w) = info
        .witness
        .expect("graph with diameter at least 6 has a farthest pair");
    let v_steps = d.div_ceil(2);
    let w_steps = d - v_steps - 1;
    let v_order = plan_seed(g, v, v_steps, false, ColorMap::identity(d + 1))?
        .neighbors()
        .to_vec();
    let w_order = g.neighbors(w).to_vec();
    let (coloring, trace) = two_sided(g, d, (v, v_order, v_steps), (w, w_order, w_steps))?;
    finish(g, coloring, Strategy::Diameter, d + 1, trace)
}

/// Smallest vertex of `component` with no neighbor in the separator and at
/// least `steps` neighbors not adjacent to the separator; returns it with a
/// neighbor order listing those first.
fn separator_anchor(
    g: &Graph,
    component: &[usize],
    separator: &BTreeSet<usize>,
    steps: usize,
) -> Option<(usize, Vec<usize>)> {
    let touches = |x: usize| g.neighbors(x).iter().any(|w| separator.contains(w));
    component.iter().copied().find_map(|a| {
        if touches(a) {
            return None;
        }
        let (free, attached): (Vec<usize>, Vec<usize>) =
            g.neighbors(a).iter().partition(|&&x| !touches(x));
        (free.len() >= steps).then(|| {
            let mut order = free;
            order.extend(attached);
            (a, order)
        })
    })
}

/// `d + 1` colors when `2 kappa <= d + 1`. For a minimum separator `U`, two
/// components of `G - U` each contain a vertex far enough from `U` that its
/// seeded region avoids `N[U]`; one side realizes `1..=floor(d/2)+1` and the
/// other the remaining colors.
///
/// For `d = 3` small components may leave no such vertex; the exact search
/// is then used when the graph is within the default oracle ceiling.
pub fn construct_connectivity_bcoloring(g: &Graph) -> Result<Construction, ConstructionError> {
    let d = class_degree(g)?;
    let cut = vertex_connectivity(g);
    if 2 * cut.kappa > d + 1 {
        return Err(ConstructionError::Hypothesis(format!(
            "connectivity {} exceeds (d+1)/2 for d = {d}",
            cut.kappa
        )));
    }
    if d <= 2 {
        return construct_small_case_bcoloring(g);
    }
    let first_steps = d / 2;
    let second_steps = d - first_steps - 1;
    let separator: BTreeSet<usize> = cut.separator.iter().copied().collect();
    let mut anchors = Vec::new();
    for comp in &cut.components {
        let steps = if anchors.is_empty() {
            first_steps
        } else {
            second_steps
        };
        if let Some(anchor) = separator_anchor(g, comp, &separator, steps) {
            anchors.push((anchor, steps));
            if anchors.len() == 2 {
                break;
            }
        }
    }
    if let [((a, a_order), a_steps), ((b, b_order), b_steps)] = anchors.as_slice() {
        let (coloring, trace) = two_sided(
            g,
            d,
            (*a, a_order.clone(), *a_steps),
            (*b, b_order.clone(), *b_steps),
        )?;
        return finish(g, coloring, Strategy::Connectivity, d + 1, trace);
    }
    if d == 3 {
        let config = OracleConfig::default();
        if g.vertex_count() <= config.max_vertices {
            let found = exists_bcoloring_with_k(g, d + 1, &config)
                .map_err(|e| ConstructionError::Invariant(e.to_string()))?;
            if let Some(coloring) = found.witness {
                let trace = ConstructionTrace {
                    oracle_fallback: true,
                    ..ConstructionTrace::default()
                };
                return finish(g, coloring, Strategy::Connectivity, d + 1, trace);
            }
            return Err(ConstructionError::Invariant(
                "exact search found no 4-b-coloring of a cubic graph with a small separator".into(),
            ));
        }
    }
    Err(ConstructionError::Invariant(format!(
        "no two components of G - U offer seed anchors (kappa = {}, {} components)",
        cut.kappa,
        cut.components.len()
    )))
}

/// Runs the requested strategy. `None` picks the first whose condition
/// holds, in the order connectivity, diameter, neighborhood seeding.
pub fn construct(g: &Graph, strategy: Option<Strategy>) -> Result<Construction, ConstructionError> {
    match strategy {
        Some(Strategy::LowerBound) => construct_lower_bound_bcoloring(g),
        Some(Strategy::Diameter) => construct_diameter_bcoloring(g),
        Some(Strategy::Connectivity) => construct_connectivity_bcoloring(g),
        Some(Strategy::SmallCase) => construct_small_case_bcoloring(g),
        None => {
            let d = class_degree(g)?;
            if d <= 2 {
                return construct_small_case_bcoloring(g);
            }
            if 2 * vertex_connectivity(g).kappa <= d + 1 {
                construct_connectivity_bcoloring(g)
            } else if diameter(g).diameter.at_least(6) {
                construct_diameter_bcoloring(g)
            } else {
                construct_lower_bound_bcoloring(g)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, cycle, heawood, petersen, Graph};

    #[test]
    fn petersen_lower_bound() {
        let c = construct_lower_bound_bcoloring(&petersen()).unwrap();
        assert!(c.coloring.used_count() >= 3);
        assert_eq!(c.strategy, Strategy::LowerBound);
    }

    #[test]
    fn petersen_rejected_by_full_palette_strategies() {
        assert!(matches!(
            construct_connectivity_bcoloring(&petersen()),
            Err(ConstructionError::Hypothesis(_))
        ));
        assert!(matches!(
            construct_diameter_bcoloring(&petersen()),
            Err(ConstructionError::Hypothesis(_))
        ));
    }

    #[test]
    fn k33_outside_class() {
        let g = complete_bipartite(3).unwrap();
        assert!(matches!(
            construct_lower_bound_bcoloring(&g),
            Err(ConstructionError::Hypothesis(_))
        ));
    }

    #[test]
    fn two_heawood_graphs_get_four_colors() {
        let g = heawood().disjoint_union(&heawood());
        for c in [
            construct_connectivity_bcoloring(&g).unwrap(),
            construct_diameter_bcoloring(&g).unwrap(),
        ] {
            assert_eq!(c.coloring.used_count(), 4);
            assert!(!c.trace.oracle_fallback);
        }
    }

    #[test]
    fn small_cases() {
        for g in [
            Graph::empty(3),
            Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap(),
            cycle(3).unwrap(),
            cycle(5).unwrap(),
            cycle(9).unwrap(),
            cycle(5).unwrap().disjoint_union(&cycle(3).unwrap()),
        ] {
            let d = g.max_degree();
            let c = construct(&g, None).unwrap();
            assert_eq!(c.coloring.used_count(), d + 1, "{g:?}");
            assert_eq!(c.strategy, Strategy::SmallCase);
        }
    }
}
