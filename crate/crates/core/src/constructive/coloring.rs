//! Partial and total colorings, the b-coloring verifier and the JSON
//! certificate format.
//!
//! Colors are `1..=palette`, so `0` never denotes a color.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::{ConstructionError, Strategy};
use crate::graph::Graph;

/// Proper coloring of some of the vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialColoring {
    palette: usize,
    colors: Vec<Option<usize>>,
}

impl PartialColoring {
    pub fn new(vertex_count: usize, palette: usize) -> Self {
        PartialColoring {
            palette,
            colors: vec![None; vertex_count],
        }
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn vertex_count(&self) -> usize {
        self.colors.len()
    }

    pub fn get(&self, v: usize) -> Option<usize> {
        self.colors[v]
    }

    pub fn is_colored(&self, v: usize) -> bool {
        self.colors[v].is_some()
    }

    pub fn colored_count(&self) -> usize {
        self.colors.iter().flatten().count()
    }

    /// Colors `v` with `color`, refusing anything that would break
    /// properness, recolor a vertex or leave the palette.
    pub fn assign(&mut self, g: &Graph, v: usize, color: usize) -> Result<(), ConstructionError> {
        if color == 0 || color > self.palette {
            return Err(ConstructionError::Input(format!(
                "color {color} outside palette 1..={}",
                self.palette
            )));
        }
        if let Some(old) = self.colors[v] {
            return Err(ConstructionError::Invariant(format!(
                "vertex {v} already has color {old}"
            )));
        }
        if let Some(&w) = g
            .neighbors(v)
            .iter()
            .find(|&&w| self.colors[w] == Some(color))
        {
            return Err(ConstructionError::Invariant(format!(
                "color {color} on {v} clashes with neighbor {w}"
            )));
        }
        self.colors[v] = Some(color);
        Ok(())
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        g.edges().all(|(u, v)| {
            self.colors[u].is_none() || self.colors[v].is_none() || self.colors[u] != self.colors[v]
        })
    }

    /// Colors present on `v` and its neighbors.
    pub fn closed_neighborhood_colors(&self, g: &Graph, v: usize) -> BTreeSet<usize> {
        std::iter::once(v)
            .chain(g.neighbors(v).iter().copied())
            .filter_map(|w| self.colors[w])
            .collect()
    }

    /// The total coloring, if every vertex is colored.
    pub fn to_coloring(&self) -> Option<Coloring> {
        let colors = self.colors.iter().copied().collect::<Option<Vec<_>>>()?;
        Some(Coloring {
            palette: self.palette,
            colors,
        })
    }
}

impl From<&Coloring> for PartialColoring {
    fn from(c: &Coloring) -> Self {
        PartialColoring {
            palette: c.palette,
            colors: c.colors.iter().map(|&x| Some(x)).collect(),
        }
    }
}

/// Total vertex coloring with colors in `1..=palette`. Properness is a
/// property checked against a graph, not an invariant of the type.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    palette: usize,
    colors: Vec<usize>,
}

impl Coloring {
    pub fn new(palette: usize, colors: Vec<usize>) -> Result<Self, ConstructionError> {
        if let Some(&bad) = colors.iter().find(|&&c| c == 0 || c > palette) {
            return Err(ConstructionError::Input(format!(
                "color {bad} outside palette 1..={palette}"
            )));
        }
        Ok(Coloring { palette, colors })
    }

    /// Palette is the largest color used.
    pub fn from_colors(colors: Vec<usize>) -> Result<Self, ConstructionError> {
        let palette = colors.iter().copied().max().unwrap_or(0);
        Coloring::new(palette, colors)
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn used_colors(&self) -> BTreeSet<usize> {
        self.colors.iter().copied().collect()
    }

    pub fn used_count(&self) -> usize {
        self.used_colors().len()
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        g.edges().all(|(u, v)| self.colors[u] != self.colors[v])
    }

    /// Whether `v` sees every other used color among its neighbors.
    pub fn is_dominating(&self, g: &Graph, v: usize) -> bool {
        let seen: BTreeSet<usize> = g.neighbors(v).iter().map(|&w| self.colors[w]).collect();
        self.used_colors()
            .iter()
            .all(|&c| c == self.colors[v] || seen.contains(&c))
    }

    pub fn dominating_vertices(&self, g: &Graph) -> Vec<usize> {
        let used = self.used_colors();
        g.vertices()
            .filter(|&v| {
                let own = self.colors[v];
                let seen: BTreeSet<usize> =
                    g.neighbors(v).iter().map(|&w| self.colors[w]).collect();
                used.iter().all(|&c| c == own || seen.contains(&c))
            })
            .collect()
    }

    /// Relabels the used colors to `1..=k` preserving their order.
    pub fn compacted(&self) -> Coloring {
        let relabel: BTreeMap<usize, usize> = self
            .used_colors()
            .into_iter()
            .enumerate()
            .map(|(i, c)| (c, i + 1))
            .collect();
        Coloring {
            palette: relabel.len(),
            colors: self.colors.iter().map(|c| relabel[c]).collect(),
        }
    }
}

/// Outcome of [`verify_bcoloring`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub proper: bool,
    pub used_colors: Vec<usize>,
    /// Smallest dominating vertex of each used color, if any.
    pub realized: BTreeMap<usize, Option<usize>>,
    pub is_b_coloring: bool,
}

impl VerificationReport {
    pub fn color_count(&self) -> usize {
        self.used_colors.len()
    }

    pub fn unrealized(&self) -> Vec<usize> {
        self.realized
            .iter()
            .filter(|(_, w)| w.is_none())
            .map(|(&c, _)| c)
            .collect()
    }
}

/// Checks properness and finds a dominating vertex for each used color.
pub fn verify_bcoloring(g: &Graph, c: &Coloring) -> Result<VerificationReport, ConstructionError> {
    if c.len() != g.vertex_count() {
        return Err(ConstructionError::Input(format!(
            "coloring covers {} vertices, graph has {}",
            c.len(),
            g.vertex_count()
        )));
    }
    let proper = c.is_proper(g);
    let used = c.used_colors();
    let mut realized: BTreeMap<usize, Option<usize>> = used.iter().map(|&x| (x, None)).collect();
    for v in c.dominating_vertices(g) {
        realized.entry(c.color(v)).or_insert(None).get_or_insert(v);
    }
    let is_b_coloring = proper && realized.values().all(Option::is_some);
    Ok(VerificationReport {
        proper,
        used_colors: used.into_iter().collect(),
        realized,
        is_b_coloring,
    })
}

/// JSON coloring certificate:
/// `{"palette", "assignment", "dominating", "strategy"}` with 1-based
/// colors, `assignment[v]` the color of vertex `v` and `dominating` mapping
/// each color (as a string key) to one of its dominating vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub palette: usize,
    pub assignment: Vec<usize>,
    #[serde(default)]
    pub dominating: BTreeMap<usize, usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strategy: Option<Strategy>,
}

impl Certificate {
    /// Certificate for `c`, listing the smallest dominating vertex of every
    /// realized color.
    pub fn new(g: &Graph, c: &Coloring, strategy: Option<Strategy>) -> Self {
        let mut dominating = BTreeMap::new();
        for v in c.dominating_vertices(g) {
            dominating.entry(c.color(v)).or_insert(v);
        }
        Certificate {
            palette: c.palette(),
            assignment: c.colors().to_vec(),
            dominating,
            strategy,
        }
    }

    pub fn coloring(&self) -> Result<Coloring, ConstructionError> {
        Coloring::new(self.palette, self.assignment.clone())
    }

    /// Checks that every listed witness really dominates for its color.
    pub fn check_witnesses(&self, g: &Graph) -> Result<(), ConstructionError> {
        let c = self.coloring()?;
        for (&color, &v) in &self.dominating {
            if v >= c.len() || c.color(v) != color || !c.is_dominating(g, v) {
                return Err(ConstructionError::Input(format!(
                    "vertex {v} is not a dominating vertex of color {color}"
                )));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, cycle, petersen};

    #[test]
    fn k33_two_coloring_is_b_coloring() {
        let g = complete_bipartite(3).unwrap();
        let c = Coloring::new(2, vec![1, 1, 1, 2, 2, 2]).unwrap();
        let r = verify_bcoloring(&g, &c).unwrap();
        assert!(r.proper && r.is_b_coloring);
        assert_eq!(r.realized[&1], Some(0));
        assert_eq!(r.realized[&2], Some(3));
    }

    #[test]
    fn monochromatic_edge_is_improper() {
        let g = cycle(5).unwrap();
        let c = Coloring::new(3, vec![1, 1, 2, 3, 2]).unwrap();
        let r = verify_bcoloring(&g, &c).unwrap();
        assert!(!r.proper);
        assert!(!r.is_b_coloring);
    }

    #[test]
    fn petersen_three_coloring() {
        // Outer 1,2,1,2,3 and inner chosen so every color has a witness.
        let g = petersen();
        let c = Coloring::new(3, vec![1, 2, 1, 2, 3, 2, 3, 3, 1, 1]).unwrap();
        let r = verify_bcoloring(&g, &c).unwrap();
        assert!(r.proper, "{r:?}");
        assert!(r.is_b_coloring, "{r:?}");
        assert_eq!(r.color_count(), 3);
    }

    #[test]
    fn unrealized_color_is_reported() {
        // Path-like coloring of C_6 where color 3 appears once, unseen.
        let g = cycle(6).unwrap();
        let c = Coloring::new(3, vec![1, 2, 1, 2, 1, 3]).unwrap();
        let r = verify_bcoloring(&g, &c).unwrap();
        assert!(r.proper);
        assert_eq!(r.unrealized(), vec![2, 3]);
    }

    #[test]
    fn wrong_length_is_an_error() {
        let g = cycle(5).unwrap();
        let c = Coloring::new(2, vec![1, 2]).unwrap();
        assert!(verify_bcoloring(&g, &c).is_err());
        assert!(Coloring::new(2, vec![0, 1]).is_err());
        assert!(Coloring::new(2, vec![3, 1]).is_err());
    }

    #[test]
    fn partial_assign_guards() {
        let g = cycle(5).unwrap();
        let mut p = PartialColoring::new(5, 3);
        p.assign(&g, 0, 1).unwrap();
        assert!(p.assign(&g, 1, 1).is_err());
        assert!(p.assign(&g, 0, 2).is_err());
        assert!(p.assign(&g, 2, 4).is_err());
        p.assign(&g, 2, 1).unwrap();
        assert_eq!(p.colored_count(), 2);
        assert!(p.to_coloring().is_none());
        assert_eq!(p.closed_neighborhood_colors(&g, 1), BTreeSet::from([1]));
    }

    #[test]
    fn compacting_relabels_in_order() {
        let c = Coloring::new(5, vec![5, 2, 5, 4]).unwrap().compacted();
        assert_eq!(c.colors(), &[3, 1, 3, 2]);
        assert_eq!(c.palette(), 3);
    }

    #[test]
    fn certificate_json_shape() {
        let g = complete_bipartite(2).unwrap();
        let c = Coloring::new(2, vec![1, 1, 2, 2]).unwrap();
        let cert = Certificate::new(&g, &c, Some(Strategy::LowerBound));
        let json = serde_json::to_string(&cert).unwrap();
        assert_eq!(
            json,
            r#"{"palette":2,"assignment":[1,1,2,2],"dominating":{"1":0,"2":2},"strategy":"lower-bound"}"#
        );
        let back: Certificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back, cert);
        back.check_witnesses(&g).unwrap();
    }
}
