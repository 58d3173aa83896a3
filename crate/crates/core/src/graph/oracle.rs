//! Exact exponential-time oracles: k-colourability, colouring enumeration,
//! chromatic number and clique number.
//!
//! Colouring search is backtracking with forward checking over per-vertex
//! colour domains. The branching vertex is the one with the fewest colours
//! left, ties broken by highest degree, then lowest index.

use super::{Colouring, VertexSet, VisibilityGraph};
use crate::error::{Error, Result};

/// Optional cap on the number of search nodes an oracle may expand.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget { max_nodes: None };

    pub fn nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes: Some(max_nodes),
        }
    }
}

/// How colour permutations are treated during search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symmetry {
    /// Every labelled colouring is distinct.
    None,
    /// A fresh colour is always the lowest unused one, so each colouring is
    /// produced once per permutation class.
    Canonical,
}

const UNCOLOURED: usize = usize::MAX;

struct ColourSearch<'g> {
    g: &'g VisibilityGraph,
    k: usize,
    symmetry: Symmetry,
    budget: Budget,
    nodes: u64,
    degree: Vec<usize>,
    colour: Vec<usize>,
    domain: Vec<u32>,
    trail: Vec<(usize, u32)>,
}

impl<'g> ColourSearch<'g> {
    fn new(g: &'g VisibilityGraph, k: usize, symmetry: Symmetry, budget: Budget) -> Self {
        assert!((1..=32).contains(&k), "colour count must be in 1..=32");
        let n = g.vertex_count();
        let full = if k == 32 { u32::MAX } else { (1u32 << k) - 1 };
        ColourSearch {
            g,
            k,
            symmetry,
            budget,
            nodes: 0,
            degree: (0..n).map(|v| g.degree(v)).collect(),
            colour: vec![UNCOLOURED; n],
            domain: vec![full; n],
            trail: Vec::new(),
        }
    }

    fn pick(&self) -> Option<usize> {
        let mut best: Option<(u32, std::cmp::Reverse<usize>, usize)> = None;
        for v in 0..self.colour.len() {
            if self.colour[v] != UNCOLOURED {
                continue;
            }
            let key = (self.domain[v].count_ones(), std::cmp::Reverse(self.degree[v]), v);
            if best.is_none_or(|b| key < b) {
                best = Some(key);
            }
        }
        best.map(|(_, _, v)| v)
    }

    /// Visits colourings depth-first; `visit` returns false to stop.
    fn run(&mut self, used: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> Result<bool> {
        self.nodes += 1;
        if let Some(limit) = self.budget.max_nodes {
            if self.nodes > limit {
                return Err(Error::BudgetExceeded { nodes: limit });
            }
        }
        let Some(v) = self.pick() else {
            return Ok(visit(&self.colour));
        };
        let limit = match self.symmetry {
            Symmetry::None => self.k,
            Symmetry::Canonical => (used + 1).min(self.k),
        };
        for c in 0..limit {
            if self.domain[v] & (1 << c) == 0 {
                continue;
            }
            let mark = self.trail.len();
            self.colour[v] = c;
            let mut wiped = false;
            for u in self.g.neighbours(v) {
                if self.colour[u] == UNCOLOURED && self.domain[u] & (1 << c) != 0 {
                    self.trail.push((u, self.domain[u]));
                    self.domain[u] &= !(1 << c);
                    if self.domain[u] == 0 {
                        wiped = true;
                        break;
                    }
                }
            }
            let keep_going = if wiped {
                true
            } else {
                self.run(used.max(c + 1), visit)?
            };
            while self.trail.len() > mark {
                let (u, d) = self.trail.pop().expect("trail entry");
                self.domain[u] = d;
            }
            self.colour[v] = UNCOLOURED;
            if !keep_going {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// A valid colouring with at most `k` colours, if one exists.
pub fn k_colourable(g: &VisibilityGraph, k: usize, budget: Budget) -> Result<Option<Colouring>> {
    if g.vertex_count() == 0 {
        return Ok(Some(Colouring::new(Vec::new())));
    }
    let mut search = ColourSearch::new(g, k, Symmetry::Canonical, budget);
    let mut found = None;
    search.run(0, &mut |colours| {
        found = Some(Colouring::new(colours.to_vec()));
        false
    })?;
    Ok(found)
}

/// Result of [`enumerate_colourings`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub colourings: Vec<Colouring>,
    /// False when the cap was hit before the search finished.
    pub complete: bool,
}

/// All valid colourings with at most `k` colours, stopping after `cap`.
pub fn enumerate_colourings(
    g: &VisibilityGraph,
    k: usize,
    cap: usize,
    symmetry: Symmetry,
    budget: Budget,
) -> Result<Enumeration> {
    if g.vertex_count() == 0 {
        return Ok(Enumeration {
            colourings: vec![Colouring::new(Vec::new())],
            complete: true,
        });
    }
    let mut search = ColourSearch::new(g, k, symmetry, budget);
    let mut colourings = Vec::new();
    let mut complete = true;
    search.run(0, &mut |colours| {
        if colourings.len() == cap {
            complete = false;
            return false;
        }
        colourings.push(Colouring::new(colours.to_vec()));
        true
    })?;
    Ok(Enumeration {
        colourings,
        complete,
    })
}

fn greedy_colour_count(g: &VisibilityGraph) -> usize {
    let n = g.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut colour = vec![UNCOLOURED; n];
    let mut count = 0;
    for v in order {
        let mut c = 0;
        while g.neighbours(v).any(|u| colour[u] == c) {
            c += 1;
        }
        colour[v] = c;
        count = count.max(c + 1);
    }
    count
}

/// Least `k` admitting a valid `k`-colouring, by binary search between the
/// largest clique found greedily and a greedy upper bound.
pub fn chromatic_number(g: &VisibilityGraph, budget: Budget) -> Result<usize> {
    if g.vertex_count() == 0 {
        return Ok(0);
    }
    let mut lo = 1;
    let mut hi = greedy_colour_count(g);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if k_colourable(g, mid, budget)?.is_some() {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(lo)
}

struct CliqueSearch<'g> {
    g: &'g VisibilityGraph,
    budget: Budget,
    nodes: u64,
    best: Vec<usize>,
}

impl CliqueSearch<'_> {
    /// Orders `candidates` by greedy colour class; the class number of the
    /// vertex at position i bounds the clique size reachable from
    /// candidates[..=i].
    fn colour_sort(&self, candidates: &VertexSet) -> (Vec<usize>, Vec<usize>) {
        let mut order = Vec::with_capacity(candidates.len());
        let mut bounds = Vec::with_capacity(candidates.len());
        let mut rest = candidates.clone();
        let mut class = 0;
        while !rest.is_empty() {
            class += 1;
            let mut open = rest.clone();
            while let Some(v) = open.first() {
                open.remove(v);
                for u in self.g.neighbours(v) {
                    open.remove(u);
                }
                rest.remove(v);
                order.push(v);
                bounds.push(class);
            }
        }
        (order, bounds)
    }

    fn expand(&mut self, clique: &mut Vec<usize>, mut candidates: VertexSet) -> Result<()> {
        self.nodes += 1;
        if let Some(limit) = self.budget.max_nodes {
            if self.nodes > limit {
                return Err(Error::BudgetExceeded { nodes: limit });
            }
        }
        let (order, bounds) = self.colour_sort(&candidates);
        for i in (0..order.len()).rev() {
            if clique.len() + bounds[i] <= self.best.len() {
                return Ok(());
            }
            let v = order[i];
            clique.push(v);
            let next = candidates.intersection(self.g.row(v));
            if next.is_empty() {
                if clique.len() > self.best.len() {
                    self.best = clique.clone();
                }
            } else {
                self.expand(clique, next)?;
            }
            clique.pop();
            candidates.remove(v);
        }
        Ok(())
    }
}

/// Vertices of a maximum clique, in increasing order.
pub fn maximum_clique(g: &VisibilityGraph, budget: Budget) -> Result<Vec<usize>> {
    let n = g.vertex_count();
    let mut search = CliqueSearch {
        g,
        budget,
        nodes: 0,
        best: Vec::new(),
    };
    if n > 0 {
        search.expand(&mut Vec::new(), VertexSet::full(n))?;
    }
    let mut best = search.best;
    best.sort_unstable();
    Ok(best)
}

pub fn clique_number(g: &VisibilityGraph, budget: Budget) -> Result<usize> {
    maximum_clique(g, budget).map(|c| c.len())
}
