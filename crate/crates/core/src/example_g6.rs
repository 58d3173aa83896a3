//! A point visibility graph with clique number 4 and chromatic number 6.
//!
//! Ten points p1..p10 on a horizontal line l1, twenty-three points
//! q1..q4, r1, b1, r2, .., b9, r10 on a parallel line l3, and blockers on a
//! line l2 between them cutting every l1–l3 pair except the declared joins.
//! The l1 ∪ l3 part is triangle-free but needs four colours; every l2 point
//! sees all of it and l2 is a path, so two more colours are needed.

use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::geometry::{build_pvg, Point, PointSet, Rational};
use crate::graph::{
    chromatic_number, is_valid_colouring, k_colourable, maximum_clique, triangle_free, Budget, Colouring,
    VisibilityGraph,
};
use crate::layout::{place_blockers, Line, PointMeta, SPAN};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum G6Role {
    P(usize),
    Q(usize),
    R(usize),
    B(usize),
    /// Blocks the pair (l1 rank, l3 rank).
    Blocker { l1: usize, l3: usize },
}

impl fmt::Display for G6Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            G6Role::P(i) => write!(f, "p{i}"),
            G6Role::Q(i) => write!(f, "q{i}"),
            G6Role::R(i) => write!(f, "r{i}"),
            G6Role::B(i) => write!(f, "b{i}"),
            G6Role::Blocker { l1, l3 } => write!(f, "blocker(l1:{l1},l3:{l3})"),
        }
    }
}

/// Points are stored l1 left to right, then l3, then l2.
#[derive(Clone, Debug)]
pub struct G6Embedding {
    pub points: PointSet,
    pub roles: Vec<G6Role>,
    pub lines: Vec<Line>,
    pub ranks: Vec<usize>,
    /// Declared l1–l3 edges as point indices (l1 point, l3 point).
    pub joins: Vec<(usize, usize)>,
    pub l1_len: usize,
    pub l3_len: usize,
}

impl G6Embedding {
    pub fn index_of(&self, role: G6Role) -> Option<usize> {
        self.roles.iter().position(|&r| r == role)
    }

    pub fn metadata(&self) -> Vec<PointMeta> {
        (0..self.points.len())
            .map(|index| PointMeta {
                index,
                line: self.lines[index],
                role: self.roles[index].to_string(),
                rank: self.ranks[index],
            })
            .collect()
    }
}

fn l3_roles() -> Vec<G6Role> {
    let mut roles: Vec<G6Role> = (1..=4).map(G6Role::Q).collect();
    for i in 1..=10 {
        if i > 1 {
            roles.push(G6Role::B(i - 1));
        }
        roles.push(G6Role::R(i));
    }
    roles
}

/// Declared joins as (p index, l3 role), p 1-based.
fn declared() -> Vec<(usize, G6Role)> {
    let mut joins = vec![
        (1, G6Role::Q(1)),
        (4, G6Role::Q(1)),
        (2, G6Role::Q(2)),
        (5, G6Role::Q(2)),
        (6, G6Role::Q(3)),
        (9, G6Role::Q(3)),
        (7, G6Role::Q(4)),
        (10, G6Role::Q(4)),
    ];
    for i in 1..=5 {
        joins.extend([(1, G6Role::R(i)), (3, G6Role::R(i)), (i + 5, G6Role::R(i))]);
    }
    for i in 6..=10 {
        joins.extend([(1, G6Role::R(i)), (4, G6Role::R(i)), (i, G6Role::R(i))]);
    }
    joins
}

pub fn build_g6() -> Result<G6Embedding> {
    let l3 = l3_roles();
    let joins: Vec<(usize, usize)> = declared()
        .into_iter()
        .map(|(p, r)| (p - 1, l3.iter().position(|&x| x == r).expect("declared l3 role")))
        .collect();
    let xs1: Vec<i64> = (0..10).collect();
    let xs3: Vec<i64> = (0..l3.len() as i64).collect();
    let layout = place_blockers(&xs1, &xs3, |i, j| joins.contains(&(i, j)))?;

    // l1 at height SPAN, l3 at 0, l2 at SPAN minus the offset from l1.
    let int = |v: i64| Rational::from_integer(v.into());
    let mut points = Vec::new();
    let mut roles = Vec::new();
    let mut lines = Vec::new();
    let mut ranks = Vec::new();
    for (rank, &x) in xs1.iter().enumerate() {
        points.push(Point::new(int(x), int(SPAN)));
        roles.push(G6Role::P(rank + 1));
        lines.push(Line::L1);
        ranks.push(rank);
    }
    for (rank, (&x, &role)) in xs3.iter().zip(&l3).enumerate() {
        points.push(Point::new(int(x), int(0)));
        roles.push(role);
        lines.push(Line::L3);
        ranks.push(rank);
    }
    let height = int(SPAN) - layout.across;
    for (rank, b) in layout.blockers.iter().enumerate() {
        points.push(Point::new(b.along.clone(), height.clone()));
        roles.push(G6Role::Blocker { l1: b.l1, l3: b.l3 });
        lines.push(Line::L2);
        ranks.push(rank);
    }
    Ok(G6Embedding {
        points: PointSet::new(points)?,
        roles,
        lines,
        ranks,
        joins: joins.into_iter().map(|(i, j)| (i, xs1.len() + j)).collect(),
        l1_len: xs1.len(),
        l3_len: xs3.len(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct G6Report {
    pub points: usize,
    pub blockers: usize,
    /// l1–l3 visible pairs are exactly the declared joins.
    pub joins_match: bool,
    pub l2_sees_all: bool,
    pub l2_is_path: bool,
    pub outer_triangle_free: bool,
    pub outer_three_colourable: bool,
    pub outer_four_colouring: Option<Colouring>,
    pub outer_chromatic_number: usize,
    /// Maximum clique of the whole graph, by exact search.
    pub maximum_clique: Vec<usize>,
    pub clique_number: usize,
    /// Outer chromatic number plus that of the l2 path.
    pub chromatic_number: usize,
    /// Validated colouring of the whole graph with `chromatic_number`
    /// colours.
    pub colouring: Option<Colouring>,
}

fn line_members(e: &G6Embedding, line: Line) -> Vec<usize> {
    (0..e.points.len()).filter(|&i| e.lines[i] == line).collect()
}

pub fn verify_g6(e: &G6Embedding, budget: Budget) -> Result<G6Report> {
    let g = build_pvg(&e.points);
    verify_with_graph(e, &g, budget)
}

fn verify_with_graph(e: &G6Embedding, g: &VisibilityGraph, budget: Budget) -> Result<G6Report> {
    let l1 = line_members(e, Line::L1);
    let l3 = line_members(e, Line::L3);
    let l2 = line_members(e, Line::L2);
    let outer: Vec<usize> = l1.iter().chain(&l3).copied().collect();

    let joins_match = l1
        .iter()
        .all(|&u| l3.iter().all(|&v| g.has_edge(u, v) == e.joins.contains(&(u, v))));
    let l2_sees_all = l2.iter().all(|&b| outer.iter().all(|&u| g.has_edge(b, u)));
    let l2_is_path = l2
        .iter()
        .enumerate()
        .all(|(a, &u)| l2.iter().enumerate().skip(a + 1).all(|(b, &v)| g.has_edge(u, v) == (b == a + 1)));

    let outer_graph = g.induced(&outer);
    let outer_triangle_free = triangle_free(&outer_graph);
    let outer_three_colourable = k_colourable(&outer_graph, 3, budget)?.is_some();
    let outer_four_colouring = k_colourable(&outer_graph, 4, budget)?;
    let outer_chromatic_number = chromatic_number(&outer_graph, budget)?;

    let maximum_clique = maximum_clique(g, budget)?;
    let l2_colours = l2.len().min(2);
    let chromatic_number = outer_chromatic_number + l2_colours;

    let colouring = outer_four_colouring.as_ref().and_then(|c| {
        let mut colour = vec![0; e.points.len()];
        for (k, &v) in outer.iter().enumerate() {
            colour[v] = c.colour(k);
        }
        let base = c.colour_count();
        for &b in &l2 {
            colour[b] = base + e.ranks[b] % 2;
        }
        let full = Colouring::new(colour);
        (is_valid_colouring(g, &full).ok()? && full.colour_count() == chromatic_number).then_some(full)
    });
    Ok(G6Report {
        points: e.points.len(),
        blockers: l2.len(),
        joins_match,
        l2_sees_all,
        l2_is_path,
        outer_triangle_free,
        outer_three_colourable,
        outer_four_colouring,
        outer_chromatic_number,
        clique_number: maximum_clique.len(),
        maximum_clique,
        chromatic_number,
        colouring,
    })
}
