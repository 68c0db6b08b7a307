//! Completing a partial coloring greedily and removing colors that have no
//! dominating vertex.

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use super::{verify_bcoloring, Coloring, ConstructionError, PartialColoring};
use crate::graph::Graph;

/// Colors the remaining vertices in breadth-first order from `roots` (then
/// from any untouched component, lowest vertex first), each with the
/// smallest color absent from its neighbors.
///
/// Fails if the partial coloring is improper or some vertex has every
/// palette color on its neighbors, which cannot happen when the palette
/// exceeds the maximum degree.
pub fn greedy_extend(
    g: &Graph,
    partial: &PartialColoring,
    roots: &[usize],
) -> Result<Coloring, ConstructionError> {
    if partial.vertex_count() != g.vertex_count() {
        return Err(ConstructionError::Input(format!(
            "partial coloring covers {} vertices, graph has {}",
            partial.vertex_count(),
            g.vertex_count()
        )));
    }
    if !partial.is_proper(g) {
        return Err(ConstructionError::Input(
            "partial coloring is improper".into(),
        ));
    }
    let mut out = partial.clone();
    let mut visited = vec![false; g.vertex_count()];
    let starts = roots.iter().copied().chain(g.vertices());
    for start in starts {
        if start >= g.vertex_count() {
            return Err(ConstructionError::Input(format!(
                "root {start} out of range"
            )));
        }
        if visited[start] {
            continue;
        }
        visited[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            if !out.is_colored(u) {
                let taken: BTreeSet<usize> =
                    g.neighbors(u).iter().filter_map(|&w| out.get(w)).collect();
                let color = (1..=out.palette())
                    .find(|c| !taken.contains(c))
                    .ok_or_else(|| {
                        ConstructionError::Input(format!(
                            "vertex {u} sees all {} palette colors",
                            out.palette()
                        ))
                    })?;
                out.assign(g, u, color)?;
            }
            for &w in g.neighbors(u) {
                if !visited[w] {
                    visited[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    Ok(out.to_coloring().expect("every vertex was visited"))
}

/// One pass of [`reduce_unrealized`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionPass {
    pub removed_color: usize,
    /// `(vertex, new color)` in the order they were recolored.
    pub recolored: Vec<(usize, usize)>,
    pub colors_before: usize,
    pub colors_after: usize,
}

/// Repeatedly takes the smallest used color without a dominating vertex and
/// moves each of its vertices, in ascending order, to the smallest other
/// used color missing from its neighborhood. Such a color exists because
/// the vertex is not dominating, and the class being removed is
/// independent, so the coloring stays proper. Dominating vertices of the
/// surviving colors keep their color and still see every surviving color,
/// so the number of used colors strictly drops until every color is
/// realized.
pub fn reduce_unrealized(
    g: &Graph,
    coloring: &Coloring,
) -> Result<(Coloring, Vec<ReductionPass>), ConstructionError> {
    if !coloring.is_proper(g) {
        return Err(ConstructionError::Input("coloring is improper".into()));
    }
    let mut colors = coloring.colors().to_vec();
    let mut passes = Vec::new();
    loop {
        let current = Coloring::new(coloring.palette(), colors.clone())?;
        let report = verify_bcoloring(g, &current)?;
        let Some(&target) = report.unrealized().first() else {
            return Ok((current, passes));
        };
        let used: BTreeSet<usize> = report.used_colors.iter().copied().collect();
        let mut recolored = Vec::new();
        let class: Vec<usize> = g.vertices().filter(|&a| colors[a] == target).collect();
        for a in class {
            let around: BTreeSet<usize> = g.neighbors(a).iter().map(|&w| colors[w]).collect();
            let e = used
                .iter()
                .copied()
                .find(|&e| e != target && !around.contains(&e))
                .ok_or_else(|| {
                    ConstructionError::Invariant(format!(
                        "vertex {a} of unrealized color {target} is dominating"
                    ))
                })?;
            colors[a] = e;
            recolored.push((a, e));
        }
        let after = Coloring::new(coloring.palette(), colors.clone())?;
        if !after.is_proper(g) {
            return Err(ConstructionError::Invariant(format!(
                "removing color {target} broke properness"
            )));
        }
        for (&c, w) in &report.realized {
            if let Some(w) = *w {
                if c != target && !after.is_dominating(g, w) {
                    return Err(ConstructionError::Invariant(format!(
                        "vertex {w} stopped dominating for color {c}"
                    )));
                }
            }
        }
        let colors_after = after.used_count();
        if colors_after >= used.len() {
            return Err(ConstructionError::Invariant(format!(
                "removing color {target} did not reduce the color count"
            )));
        }
        passes.push(ReductionPass {
            removed_color: target,
            recolored,
            colors_before: used.len(),
            colors_after,
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, petersen};

    #[test]
    fn greedy_respects_existing_colors() {
        let g = cycle(5).unwrap();
        let mut p = PartialColoring::new(5, 3);
        p.assign(&g, 0, 3).unwrap();
        let c = greedy_extend(&g, &p, &[0]).unwrap();
        assert_eq!(c.colors(), &[3, 1, 2, 3, 1]);
        assert!(c.is_proper(&g));
    }

    #[test]
    fn greedy_fails_on_small_palette() {
        let g = cycle(5).unwrap();
        let p = PartialColoring::new(5, 2);
        assert!(greedy_extend(&g, &p, &[]).is_err());
    }

    #[test]
    fn greedy_covers_every_component() {
        let g = cycle(3).unwrap().disjoint_union(&cycle(3).unwrap());
        let c = greedy_extend(&g, &PartialColoring::new(6, 3), &[4]).unwrap();
        assert!(c.is_proper(&g));
        assert_eq!(c.color(4), 1);
    }

    #[test]
    fn reduction_reaches_b_coloring() {
        // C_6 colored 1,2,1,2,1,3: colors 2 and 3 lack dominating vertices.
        let g = cycle(6).unwrap();
        let c = Coloring::new(3, vec![1, 2, 1, 2, 1, 3]).unwrap();
        let (out, passes) = reduce_unrealized(&g, &c).unwrap();
        let r = verify_bcoloring(&g, &out).unwrap();
        assert!(r.is_b_coloring);
        assert!(!passes.is_empty());
        for p in &passes {
            assert!(p.colors_after < p.colors_before);
        }
    }

    #[test]
    fn reduction_leaves_b_colorings_alone() {
        let g = petersen();
        let c = Coloring::new(3, vec![1, 2, 1, 2, 3, 2, 3, 3, 1, 1]).unwrap();
        let (out, passes) = reduce_unrealized(&g, &c).unwrap();
        assert_eq!(out, c);
        assert!(passes.is_empty());
    }
}
