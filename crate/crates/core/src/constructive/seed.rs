//! Seeding a `d`-regular graph without 4-cycles around a center vertex so
//! that the center and its first few neighbors become dominating.
//!
//! With canonical colors, the center `v` gets `d + 1` and its `i`-th
//! neighbor `v_i` gets `i`. For each step `i`, the outer neighbors
//! `V_i = N(v_i) - ({v} + N(v))` receive exactly the colors `v_i` is still
//! missing, chosen by a perfect matching against what their already colored
//! neighbors allow. Without 4-cycles the sets `V_i` are pairwise disjoint
//! and every vertex of `V_i` has at most `i - 1` colored neighbors outside
//! `N[v]`, which keeps the matching degree high enough for the first
//! `floor((d+1)/2)` steps.

use std::collections::BTreeSet;

use serde::Serialize;

use super::{ConstructionError, PartialColoring};
use crate::analysis::contains_c4;
use crate::graph::Graph;
use crate::matching::{perfect_matching, BipartiteInstance, MatchOutcome};

/// Bijection on `1..=palette` applied to the canonical colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorMap {
    image: Vec<usize>,
}

impl ColorMap {
    pub fn identity(palette: usize) -> Self {
        ColorMap {
            image: (1..=palette).collect(),
        }
    }

    /// `images[c - 1]` is where color `c` goes.
    pub fn from_images(images: Vec<usize>) -> Result<Self, ConstructionError> {
        let k = images.len();
        let distinct: BTreeSet<usize> = images.iter().copied().collect();
        if distinct.len() != k || distinct.iter().any(|&c| c == 0 || c > k) {
            return Err(ConstructionError::Input(format!(
                "{images:?} is not a permutation of 1..={k}"
            )));
        }
        Ok(ColorMap { image: images })
    }

    /// Map sending the colors a seed with `steps` steps realizes
    /// (`1..=steps` and `palette`) onto `target` in increasing order, and the
    /// remaining colors onto the rest in increasing order.
    pub fn realizing(
        palette: usize,
        steps: usize,
        target: &[usize],
    ) -> Result<Self, ConstructionError> {
        let target: BTreeSet<usize> = target.iter().copied().collect();
        if target.len() != steps + 1 || target.iter().any(|&c| c == 0 || c > palette) {
            return Err(ConstructionError::Input(format!(
                "a seed of {steps} steps realizes {} colors, target is {target:?}",
                steps + 1
            )));
        }
        let mut canonical: Vec<usize> = (1..=steps).collect();
        canonical.push(palette);
        let rest_src = (1..=palette).filter(|c| !canonical.contains(c));
        let rest_dst = (1..=palette).filter(|c| !target.contains(c));
        let mut image = vec![0; palette];
        for (src, dst) in canonical.iter().zip(&target) {
            image[src - 1] = *dst;
        }
        for (src, dst) in rest_src.zip(rest_dst) {
            image[src - 1] = dst;
        }
        Ok(ColorMap { image })
    }

    pub fn palette(&self) -> usize {
        self.image.len()
    }

    pub fn apply(&self, canonical: usize) -> usize {
        self.image[canonical - 1]
    }
}

/// A validated seeding: center, neighbor order, number of matching steps
/// and the color map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedPlan {
    center: usize,
    degree: usize,
    neighbors: Vec<usize>,
    steps: usize,
    color_map: ColorMap,
    triangle_mode: bool,
}

impl SeedPlan {
    /// Checks that `g` is `d`-regular with `d >= 3` and no 4-cycle, that
    /// `ordered_neighbors` is an ordering of `N(center)` and `steps <= d`.
    ///
    /// When `steps` reaches `(d+1)/2` for odd `d`, the neighbor at that
    /// position must have no neighbor inside `N(center)`. In triangle mode
    /// (`d` even) the first neighbor must be adjacent to the one at position
    /// `(d+2)/2`.
    pub fn new(
        g: &Graph,
        center: usize,
        ordered_neighbors: Vec<usize>,
        steps: usize,
        color_map: ColorMap,
        triangle_mode: bool,
    ) -> Result<Self, ConstructionError> {
        let d = crate::analysis::is_regular(g)
            .ok_or_else(|| ConstructionError::Hypothesis("graph is not regular".into()))?;
        if d < 3 {
            return Err(ConstructionError::Hypothesis(format!(
                "seeding needs degree at least 3, got {d}"
            )));
        }
        if contains_c4(g) {
            return Err(ConstructionError::Hypothesis(
                "graph contains a 4-cycle".into(),
            ));
        }
        if center >= g.vertex_count() {
            return Err(ConstructionError::Input(format!(
                "center {center} out of range"
            )));
        }
        let mut sorted = ordered_neighbors.clone();
        sorted.sort_unstable();
        if sorted != g.neighbors(center) {
            return Err(ConstructionError::Input(format!(
                "{ordered_neighbors:?} is not an ordering of N({center})"
            )));
        }
        if steps > d {
            return Err(ConstructionError::Input(format!(
                "{steps} steps exceed degree {d}"
            )));
        }
        if color_map.palette() != d + 1 {
            return Err(ConstructionError::Input(format!(
                "color map covers {} colors, need {}",
                color_map.palette(),
                d + 1
            )));
        }
        let inside = |x: usize| g.neighbors(x).iter().any(|w| ordered_neighbors.contains(w));
        if d % 2 == 1 && steps >= d.div_ceil(2) && inside(ordered_neighbors[(d - 1) / 2]) {
            return Err(ConstructionError::Hypothesis(format!(
                "neighbor at position {} has a neighbor inside N({center})",
                d.div_ceil(2)
            )));
        }
        if triangle_mode {
            if d % 2 == 1 {
                return Err(ConstructionError::Input(
                    "triangle mode needs even degree".into(),
                ));
            }
            if !g.has_edge(ordered_neighbors[0], ordered_neighbors[d / 2]) {
                return Err(ConstructionError::Hypothesis(format!(
                    "neighbors at positions 1 and {} are not adjacent",
                    d / 2 + 1
                )));
            }
        }
        Ok(SeedPlan {
            center,
            degree: d,
            neighbors: ordered_neighbors,
            steps,
            color_map,
            triangle_mode,
        })
    }

    pub fn center(&self) -> usize {
        self.center
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn neighbors(&self) -> &[usize] {
        &self.neighbors
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    pub fn color_map(&self) -> &ColorMap {
        &self.color_map
    }

    pub fn triangle_mode(&self) -> bool {
        self.triangle_mode
    }

    /// Colors the finished seed realizes, after mapping.
    pub fn realized_colors(&self) -> BTreeSet<usize> {
        (1..=self.steps)
            .chain([self.degree + 1])
            .map(|c| self.color_map.apply(c))
            .collect()
    }

    /// Whether the matching at `step` is guaranteed by the degree condition.
    fn guaranteed(&self, step: usize) -> bool {
        let d = self.degree;
        step <= d / 2
            || (d % 2 == 1 && step == d.div_ceil(2))
            || (self.triangle_mode && step == d / 2 + 1)
    }
}

/// Plans a seed of `steps` steps around `center`.
///
/// Neighbors are ordered ascending, except that in triangle mode the
/// smallest adjacent pair inside `N(center)` takes positions 1 and
/// `(d+2)/2`, and for odd `d` with `steps >= (d+1)/2` the smallest neighbor
/// without neighbors inside `N(center)` takes position `(d+1)/2`.
pub fn plan_seed(
    g: &Graph,
    center: usize,
    steps: usize,
    triangle_mode: bool,
    color_map: ColorMap,
) -> Result<SeedPlan, ConstructionError> {
    if center >= g.vertex_count() {
        return Err(ConstructionError::Input(format!(
            "center {center} out of range"
        )));
    }
    let ns = g.neighbors(center).to_vec();
    let d = ns.len();
    let mut order: Vec<Option<usize>> = vec![None; d];
    if triangle_mode && d >= 2 {
        let (p, q) = ns
            .iter()
            .enumerate()
            .find_map(|(i, &p)| {
                ns[i + 1..]
                    .iter()
                    .find(|&&q| g.has_edge(p, q))
                    .map(|&q| (p, q))
            })
            .ok_or_else(|| {
                ConstructionError::Hypothesis(format!("vertex {center} is in no triangle"))
            })?;
        order[0] = Some(p);
        order[d / 2] = Some(q);
    } else if d % 2 == 1 && steps >= d.div_ceil(2) {
        let isolated = ns
            .iter()
            .copied()
            .find(|&x| !g.neighbors(x).iter().any(|w| ns.contains(w)))
            .ok_or_else(|| {
                ConstructionError::Hypothesis(format!(
                    "every neighbor of {center} has a neighbor inside N({center})"
                ))
            })?;
        order[(d - 1) / 2] = Some(isolated);
    }
    let placed: Vec<usize> = order.iter().flatten().copied().collect();
    let mut rest = ns.iter().copied().filter(|x| !placed.contains(x));
    let ordered = order
        .into_iter()
        .map(|slot| {
            slot.or_else(|| rest.next())
                .expect("as many slots as neighbors")
        })
        .collect();
    SeedPlan::new(g, center, ordered, steps, color_map, triangle_mode)
}

/// Record of one matching step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepTrace {
    pub step: usize,
    pub neighbor: usize,
    /// `|V_i|`.
    pub outer_size: usize,
    /// Minimum degree of the compatibility graph `H_i`.
    pub min_degree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeedTrace {
    pub center: usize,
    pub triangle_mode: bool,
    pub steps: Vec<StepTrace>,
    /// Colors of the center and of `v_1..v_t`, after mapping.
    pub realized: Vec<usize>,
}

/// Seeds a fresh partial coloring with palette `d + 1`.
pub fn seed_dominating_neighborhood(
    g: &Graph,
    plan: &SeedPlan,
) -> Result<(PartialColoring, SeedTrace), ConstructionError> {
    let mut partial = PartialColoring::new(g.vertex_count(), plan.degree + 1);
    let trace = seed_into(g, plan, &mut partial)?;
    Ok((partial, trace))
}

/// Seeds into an existing partial coloring, which must leave the seeded
/// region uncolored and use palette `d + 1`.
pub fn seed_into(
    g: &Graph,
    plan: &SeedPlan,
    partial: &mut PartialColoring,
) -> Result<SeedTrace, ConstructionError> {
    let d = plan.degree;
    if partial.palette() != d + 1 {
        return Err(ConstructionError::Input(format!(
            "partial coloring has palette {}, seeding needs {}",
            partial.palette(),
            d + 1
        )));
    }
    let v = plan.center;
    let map = &plan.color_map;
    let ns = &plan.neighbors;
    let closed: BTreeSet<usize> = std::iter::once(v).chain(ns.iter().copied()).collect();
    let outer: Vec<Vec<usize>> = ns[..plan.steps]
        .iter()
        .map(|&x| {
            g.neighbors(x)
                .iter()
                .copied()
                .filter(|w| !closed.contains(w))
                .collect()
        })
        .collect();
    let mut region = closed.clone();
    for set in &outer {
        for &x in set {
            if !region.insert(x) {
                return Err(ConstructionError::Invariant(format!(
                    "outer neighborhoods around {v} overlap at {x}"
                )));
            }
        }
    }
    if let Some(&x) = region.iter().find(|&&x| partial.is_colored(x)) {
        return Err(ConstructionError::Invariant(format!(
            "vertex {x} of the seeded region is already colored"
        )));
    }

    partial.assign(g, v, map.apply(d + 1))?;
    for (i, &x) in ns.iter().enumerate() {
        partial.assign(g, x, map.apply(i + 1))?;
    }

    let mut steps = Vec::with_capacity(plan.steps);
    for (idx, vset) in outer.iter().enumerate() {
        let i = idx + 1;
        let vi = ns[idx];
        let seen: BTreeSet<usize> = (1..=d).filter(|&j| g.has_edge(vi, ns[j - 1])).collect();
        let missing: Vec<usize> = (1..=d)
            .filter(|&j| j != i && !seen.contains(&j))
            .map(|j| map.apply(j))
            .collect();
        if missing.len() != vset.len() {
            return Err(ConstructionError::Invariant(format!(
                "step {i}: {} outer neighbors for {} missing colors",
                vset.len(),
                missing.len()
            )));
        }
        let mut edges = Vec::new();
        for &x in vset {
            let taken = partial.closed_neighborhood_colors(g, x);
            edges.extend(
                missing
                    .iter()
                    .filter(|c| !taken.contains(c))
                    .map(|&c| (x, c)),
            );
        }
        let h = BipartiteInstance::new(vset.clone(), missing.clone(), edges)
            .map_err(|e| ConstructionError::Invariant(e.to_string()))?;
        let min_degree = h.min_degree();
        if plan.guaranteed(i) && 2 * min_degree < vset.len() {
            return Err(ConstructionError::Invariant(format!(
                "step {i}: compatibility graph has minimum degree {min_degree} for {} nodes",
                vset.len()
            )));
        }
        match perfect_matching(&h).map_err(|e| ConstructionError::Invariant(e.to_string()))? {
            MatchOutcome::Perfect(m) => {
                for (x, c) in m.pairs {
                    partial.assign(g, x, c)?;
                }
            }
            MatchOutcome::Violator(violator) => {
                return Err(ConstructionError::NoMatching { step: i, violator });
            }
        }
        steps.push(StepTrace {
            step: i,
            neighbor: vi,
            outer_size: vset.len(),
            min_degree,
        });
    }

    let palette = d + 1;
    for &x in std::iter::once(&v).chain(&ns[..plan.steps]) {
        let seen = partial.closed_neighborhood_colors(g, x);
        if seen.len() != palette {
            return Err(ConstructionError::Invariant(format!(
                "seeded vertex {x} sees only {} of {palette} colors",
                seen.len()
            )));
        }
    }
    let mut realized: Vec<usize> = plan.realized_colors().into_iter().collect();
    realized.sort_unstable();
    Ok(SeedTrace {
        center: v,
        triangle_mode: plan.triangle_mode,
        steps,
        realized,
    })
}
