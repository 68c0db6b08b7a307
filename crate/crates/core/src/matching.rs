//! Bipartite perfect matching by augmenting paths, with a Hall-violator
//! certificate when no perfect matching exists.
//!
//! Left nodes are processed in ascending id order and neighbors are tried
//! in ascending id order, so results are reproducible.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("unbalanced instance: {left} left nodes, {right} right nodes")]
    Unbalanced { left: usize, right: usize },
    #[error("edge ({0}, {1}) references an undeclared node")]
    UnknownEdgeNode(usize, usize),
    #[error("duplicate node id {0}")]
    DuplicateNode(usize),
    #[error("node {0} is not part of the instance")]
    UnknownNode(usize),
}

/// Bipartite graph between abstract left ids (e.g. vertices) and right ids
/// (e.g. colors).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteInstance {
    left: Vec<usize>,
    right: Vec<usize>,
    /// Neighbor lists indexed by position in `left`; entries are positions
    /// in `right`, ascending.
    adjacency: Vec<Vec<usize>>,
}

impl BipartiteInstance {
    pub fn new<I>(left: Vec<usize>, right: Vec<usize>, edges: I) -> Result<Self, MatchingError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut left = left;
        let mut right = right;
        left.sort_unstable();
        right.sort_unstable();
        for side in [&left, &right] {
            if let Some(w) = side.windows(2).find(|w| w[0] == w[1]) {
                return Err(MatchingError::DuplicateNode(w[0]));
            }
        }
        let mut sets = vec![BTreeSet::new(); left.len()];
        for (l, r) in edges {
            match (left.binary_search(&l), right.binary_search(&r)) {
                (Ok(i), Ok(j)) => {
                    sets[i].insert(j);
                }
                _ => return Err(MatchingError::UnknownEdgeNode(l, r)),
            }
        }
        Ok(BipartiteInstance {
            left,
            right,
            adjacency: sets.into_iter().map(|s| s.into_iter().collect()).collect(),
        })
    }

    pub fn left(&self) -> &[usize] {
        &self.left
    }

    pub fn right(&self) -> &[usize] {
        &self.right
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let (left, right) = (&self.left, &self.right);
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(move |(i, ns)| ns.iter().map(move |&j| (left[i], right[j])))
    }

    pub fn has_edge(&self, l: usize, r: usize) -> bool {
        match (self.left.binary_search(&l), self.right.binary_search(&r)) {
            (Ok(i), Ok(j)) => self.adjacency[i].binary_search(&j).is_ok(),
            _ => false,
        }
    }

    pub fn left_degree(&self, l: usize) -> Result<usize, MatchingError> {
        let i = self
            .left
            .binary_search(&l)
            .map_err(|_| MatchingError::UnknownNode(l))?;
        Ok(self.adjacency[i].len())
    }

    pub fn right_degree(&self, r: usize) -> Result<usize, MatchingError> {
        let j = self
            .right
            .binary_search(&r)
            .map_err(|_| MatchingError::UnknownNode(r))?;
        Ok(self
            .adjacency
            .iter()
            .filter(|ns| ns.binary_search(&j).is_ok())
            .count())
    }

    /// Smallest degree over both sides (0 for an empty instance).
    pub fn min_degree(&self) -> usize {
        let left = self.adjacency.iter().map(Vec::len).min();
        let mut right_deg = vec![0; self.right.len()];
        for ns in &self.adjacency {
            for &j in ns {
                right_deg[j] += 1;
            }
        }
        left.into_iter().chain(right_deg).min().unwrap_or(0)
    }

    /// Right ids adjacent to at least one of `lefts`.
    pub fn neighborhood(&self, lefts: &[usize]) -> BTreeSet<usize> {
        lefts
            .iter()
            .filter_map(|l| self.left.binary_search(l).ok())
            .flat_map(|i| self.adjacency[i].iter().map(|&j| self.right[j]))
            .collect()
    }
}

/// Matched `(left, right)` pairs, sorted by left id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pub pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn as_map(&self) -> BTreeMap<usize, usize> {
        self.pairs.iter().copied().collect()
    }

    pub fn is_perfect_for(&self, h: &BipartiteInstance) -> bool {
        self.pairs.len() == h.left.len()
    }
}

/// Left subset whose neighborhood is smaller than itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HallViolator {
    pub lefts: Vec<usize>,
    pub neighborhood: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatchOutcome {
    Perfect(Matching),
    Violator(HallViolator),
}

/// Perfect matching of a balanced instance, or a Hall violator.
///
/// A greedy pass first gives each left node its smallest free neighbor;
/// remaining left nodes are then augmented with depth-first alternating
/// paths. When augmentation from some left node fails, the left nodes
/// reached by that search together with their neighbors form the violator.
pub fn perfect_matching(h: &BipartiteInstance) -> Result<MatchOutcome, MatchingError> {
    if h.left.len() != h.right.len() {
        return Err(MatchingError::Unbalanced {
            left: h.left.len(),
            right: h.right.len(),
        });
    }
    let k = h.left.len();
    let mut match_left = vec![usize::MAX; k];
    let mut match_right = vec![usize::MAX; k];
    for i in 0..k {
        if let Some(&j) = h.adjacency[i]
            .iter()
            .find(|&&j| match_right[j] == usize::MAX)
        {
            match_left[i] = j;
            match_right[j] = i;
        }
    }
    for i in 0..k {
        if match_left[i] != usize::MAX {
            continue;
        }
        let mut seen_right = vec![false; k];
        let mut seen_left = vec![false; k];
        if !augment(
            h,
            i,
            &mut match_left,
            &mut match_right,
            &mut seen_left,
            &mut seen_right,
        ) {
            let lefts = (0..k)
                .filter(|&x| seen_left[x])
                .map(|x| h.left[x])
                .collect();
            let neighborhood = (0..k)
                .filter(|&y| seen_right[y])
                .map(|y| h.right[y])
                .collect();
            return Ok(MatchOutcome::Violator(HallViolator {
                lefts,
                neighborhood,
            }));
        }
    }
    let pairs = (0..k)
        .map(|i| (h.left[i], h.right[match_left[i]]))
        .collect();
    Ok(MatchOutcome::Perfect(Matching { pairs }))
}

fn augment(
    h: &BipartiteInstance,
    i: usize,
    match_left: &mut [usize],
    match_right: &mut [usize],
    seen_left: &mut [bool],
    seen_right: &mut [bool],
) -> bool {
    seen_left[i] = true;
    for &j in &h.adjacency[i] {
        if seen_right[j] {
            continue;
        }
        seen_right[j] = true;
        let owner = match_right[j];
        if owner == usize::MAX || augment(h, owner, match_left, match_right, seen_left, seen_right)
        {
            match_left[i] = j;
            match_right[j] = i;
            return true;
        }
    }
    false
}

/// Degree condition under which a balanced bipartite graph always has a
/// perfect matching: every node other than `u_star` (left) and `v_star`
/// (right) has degree at least half the side size, and those two have
/// positive degree.
pub fn check_lemma1_hypothesis(
    h: &BipartiteInstance,
    u_star: usize,
    v_star: usize,
) -> Result<bool, MatchingError> {
    if h.left.len() != h.right.len() {
        return Err(MatchingError::Unbalanced {
            left: h.left.len(),
            right: h.right.len(),
        });
    }
    let half_ok = |deg: usize| 2 * deg >= h.right.len();
    if h.left_degree(u_star)? == 0 || h.right_degree(v_star)? == 0 {
        return Ok(false);
    }
    for &l in h.left.iter().filter(|&&l| l != u_star) {
        if !half_ok(h.left_degree(l)?) {
            return Ok(false);
        }
    }
    for &r in h.right.iter().filter(|&&r| r != v_star) {
        if !half_ok(h.right_degree(r)?) {
            return Ok(false);
        }
    }
    Ok(true)
}
