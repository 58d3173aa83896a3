//! Graph side of a point visibility graph: dense adjacency, colourings and
//! the exact (exponential) oracles used for verification.

mod bits;
mod oracle;

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use bits::VertexSet;
pub use oracle::{
    chromatic_number, clique_number, enumerate_colourings, k_colourable, maximum_clique, Budget, Enumeration, Symmetry,
};

/// Undirected simple graph stored as a dense symmetric bit matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VisibilityGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl VisibilityGraph {
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64);
        VisibilityGraph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::empty(n);
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for a in 0..n {
            for b in a + 1..n {
                g.add_edge(a, b);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges)
    }

    /// Adds the edge `{a, b}`; self-loops are ignored.
    pub fn add_edge(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        self.rows[a * self.words + b / 64] |= 1 << (b % 64);
        self.rows[b * self.words + a / 64] |= 1 << (a % 64);
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.rows[a * self.words + b / 64] & (1 << (b % 64)) != 0
    }

    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn neighbour_set(&self, v: usize) -> VertexSet {
        VertexSet::from_words(self.row(v).to_vec())
    }

    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                (rest != 0).then(|| {
                    let bit = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    wi * 64 + bit
                })
            })
        })
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |a| self.neighbours(a).filter(move |&b| b > a).map(move |b| (a, b)))
    }

    /// Subgraph induced by `vertices`; vertex `k` of the result is
    /// `vertices[k]`.
    pub fn induced(&self, vertices: &[usize]) -> VisibilityGraph {
        let mut g = Self::empty(vertices.len());
        for (ka, &a) in vertices.iter().enumerate() {
            for (kb, &b) in vertices.iter().enumerate().skip(ka + 1) {
                if self.has_edge(a, b) {
                    g.add_edge(ka, kb);
                }
            }
        }
        g
    }

    /// Graph file: `n m` then one `i j` line per edge with `i < j`.
    pub fn to_graph_file(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edge_count());
        for (a, b) in self.edges() {
            let _ = writeln!(out, "{a} {b}");
        }
        out
    }

    pub fn parse_graph_file(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty());
        let (lineno, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing `n m` header"))?;
        let (n, m) = parse_pair(header, lineno + 1)?;
        let mut g = Self::empty(n);
        let mut seen = 0;
        for (lineno, line) in lines {
            let (a, b) = parse_pair(line, lineno + 1)?;
            if a >= b || b >= n {
                return Err(Error::parse(lineno + 1, format!("edge `{a} {b}` out of range")));
            }
            g.add_edge(a, b);
            seen += 1;
        }
        if seen != m {
            return Err(Error::parse(1, format!("header declares {m} edges, found {seen}")));
        }
        Ok(g)
    }
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
        _ => Err(Error::parse(lineno, format!("expected two integers, got `{line}`"))),
    }
}

/// Total map from vertices to colour indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Colouring(Vec<usize>);

impl Colouring {
    pub fn new(colours: Vec<usize>) -> Self {
        Colouring(colours)
    }

    pub fn colours(&self) -> &[usize] {
        &self.0
    }

    pub fn colour(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of distinct colours in use.
    pub fn colour_count(&self) -> usize {
        let mut used: Vec<usize> = self.0.clone();
        used.sort_unstable();
        used.dedup();
        used.len()
    }

    /// Relabels colours in order of first appearance, so two colourings
    /// that differ by a permutation of colours become equal.
    pub fn canonical(&self) -> Colouring {
        let mut relabel: Vec<(usize, usize)> = Vec::new();
        let colours = self
            .0
            .iter()
            .map(|&c| match relabel.iter().find(|(from, _)| *from == c) {
                Some(&(_, to)) => to,
                None => {
                    let to = relabel.len();
                    relabel.push((c, to));
                    to
                }
            })
            .collect();
        Colouring(colours)
    }

    /// Colouring file: one `vertex colour` line per vertex.
    pub fn to_file(&self) -> String {
        let mut out = String::new();
        for (v, c) in self.0.iter().enumerate() {
            let _ = writeln!(out, "{v} {c}");
        }
        out
    }

    pub fn parse_file(text: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            pairs.push(parse_pair(line, lineno + 1)?);
        }
        pairs.sort_unstable();
        let mut colours = Vec::with_capacity(pairs.len());
        for (k, (v, c)) in pairs.into_iter().enumerate() {
            if v != k {
                return Err(Error::parse(0, format!("vertex {k} missing or repeated")));
            }
            colours.push(c);
        }
        Ok(Colouring(colours))
    }
}

impl From<Vec<usize>> for Colouring {
    fn from(colours: Vec<usize>) -> Self {
        Colouring(colours)
    }
}

/// True iff every edge of `g` joins two differently coloured vertices.
pub fn is_valid_colouring(g: &VisibilityGraph, c: &Colouring) -> Result<bool> {
    if c.len() != g.vertex_count() {
        return Err(Error::SizeMismatch {
            graph: g.vertex_count(),
            colouring: c.len(),
        });
    }
    Ok(g.edges().all(|(a, b)| c.colour(a) != c.colour(b)))
}

/// Some four mutually adjacent vertices, in increasing order.
pub fn has_k4(g: &VisibilityGraph) -> Option<[usize; 4]> {
    for (a, b) in g.edges() {
        let common = g.neighbour_set(a).intersection(g.row(b));
        let mut c = common.next_after(b);
        while let Some(cv) = c {
            let rest = common.intersection(g.row(cv));
            if let Some(d) = rest.next_after(cv) {
                return Some([a, b, cv, d]);
            }
            c = common.next_after(cv);
        }
    }
    None
}

/// Some three mutually adjacent vertices, in increasing order.
pub fn find_triangle(g: &VisibilityGraph) -> Option<[usize; 3]> {
    g.edges().find_map(|(a, b)| {
        g.neighbour_set(a)
            .intersection(g.row(b))
            .next_after(b)
            .map(|c| [a, b, c])
    })
}

/// Lexicographically first triangle whose vertices all lie in `within`.
pub fn first_triangle_within(g: &VisibilityGraph, within: &VertexSet) -> Option<[usize; 3]> {
    for a in within.iter() {
        let around_a = within.intersection(g.row(a));
        let mut b = around_a.next_after(a);
        while let Some(bv) = b {
            if let Some(c) = around_a.intersection(g.row(bv)).next_after(bv) {
                return Some([a, bv, c]);
            }
            b = around_a.next_after(bv);
        }
    }
    None
}

pub fn triangle_free(g: &VisibilityGraph) -> bool {
    find_triangle(g).is_none()
}

/// True iff `g` is connected (the empty graph counts as connected).
pub fn is_connected(g: &VisibilityGraph) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return true;
    }
    let mut seen = VertexSet::new(n);
    seen.insert(0);
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        for u in g.neighbours(v) {
            if !seen.contains(u) {
                seen.insert(u);
                stack.push(u);
            }
        }
    }
    seen.len() == n
}
