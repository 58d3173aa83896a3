//! 3-SAT to 5-colouring of point visibility graphs.
//!
//! A formula is first compiled into a gadget graph ξ that is 3-colourable
//! iff the formula is satisfiable, then embedded as the point set ζ on three
//! vertical lines: ξ's points on the outer lines l1 and l3, separated by
//! dummy points, and blockers on the middle line l2 cutting every l1–l3 pair
//! that is not an edge of ξ. Every l2 point sees every other point of ζ and
//! l2 induces a path, so PVG(ζ) is 5-colourable iff the l1 ∪ l3 part is
//! 3-colourable.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{build_pvg, Point, PointSet, Rational};
use crate::graph::{is_valid_colouring, k_colourable, Budget, Colouring, VisibilityGraph};
use crate::layout::{place_blockers, Line, PointMeta, SPAN};

/// Nonzero variable index; negative for a negated variable.
pub type Literal = i32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<[Literal; 3]>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<[Literal; 3]>) -> Result<Self> {
        for (j, clause) in clauses.iter().enumerate() {
            for (k, &lit) in clause.iter().enumerate() {
                if lit == 0 || lit.unsigned_abs() as usize > num_vars {
                    return Err(Error::NotThreeSat {
                        clause: j,
                        message: format!("literal {lit} outside variables 1..={num_vars}"),
                    });
                }
                if clause[..k].contains(&lit) {
                    return Err(Error::NotThreeSat {
                        clause: j,
                        message: format!("literal {lit} repeated"),
                    });
                }
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[[Literal; 3]] {
        &self.clauses
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|&lit| assignment[lit.unsigned_abs() as usize - 1] == (lit > 0)))
    }

    /// A satisfying assignment found by exhaustive search, indexed by
    /// variable minus one.
    pub fn brute_force_sat(&self) -> Option<Vec<bool>> {
        assert!(self.num_vars < 32, "exhaustive search over {} variables", self.num_vars);
        (0u32..1 << self.num_vars)
            .map(|bits| (0..self.num_vars).map(|i| bits >> i & 1 == 1).collect::<Vec<_>>())
            .find(|a| self.is_satisfied_by(a))
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for [a, b, c] in &self.clauses {
            out.push_str(&format!("{a} {b} {c} 0\n"));
        }
        out
    }
}

/// Parses DIMACS CNF. Every clause must have exactly three distinct
/// literals.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
            continue;
        }
        last_line = lineno;
        if let Some(rest) = line.strip_prefix('p') {
            if header.is_some() {
                return Err(Error::parse(lineno, "second header"));
            }
            let fields: Vec<&str> = rest.split_whitespace().collect();
            let parsed = match fields.as_slice() {
                ["cnf", n, m] => n.parse().ok().zip(m.parse().ok()),
                _ => None,
            };
            header = Some(parsed.ok_or_else(|| Error::parse(lineno, format!("bad header `{line}`")))?);
            continue;
        }
        let Some((n, _)) = header else {
            return Err(Error::parse(lineno, "clause before `p cnf` header"));
        };
        for token in line.split_whitespace() {
            let lit: Literal = token
                .parse()
                .map_err(|_| Error::parse(lineno, format!("bad literal `{token}`")))?;
            if lit.unsigned_abs() as usize > n {
                return Err(Error::parse(lineno, format!("literal {lit} exceeds {n} variables")));
            }
            if lit != 0 {
                current.push(lit);
                continue;
            }
            let clause = std::mem::take(&mut current);
            let index = clauses.len();
            let arr: [Literal; 3] = clause.as_slice().try_into().map_err(|_| Error::NotThreeSat {
                clause: index,
                message: format!("{} literals", clause.len()),
            })?;
            clauses.push(arr);
        }
    }
    let (n, m) = header.ok_or_else(|| Error::parse(last_line.max(1), "missing `p cnf` header"))?;
    if !current.is_empty() {
        return Err(Error::parse(last_line, "clause not terminated by 0"));
    }
    if clauses.len() != m {
        return Err(Error::parse(
            last_line.max(1),
            format!("header declares {m} clauses, found {}", clauses.len()),
        ));
    }
    CnfFormula::new(n, clauses)
}

/// Non-input vertices of a clause gadget.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum GadgetSlot {
    P3,
    P4,
    P5,
    P7,
    P8,
    P9,
}

impl GadgetSlot {
    pub const ALL: [GadgetSlot; 6] = [
        GadgetSlot::P3,
        GadgetSlot::P4,
        GadgetSlot::P5,
        GadgetSlot::P7,
        GadgetSlot::P8,
        GadgetSlot::P9,
    ];

    fn offset(self) -> usize {
        self as usize
    }
}

impl fmt::Display for GadgetSlot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = [3, 4, 5, 7, 8, 9][self.offset()];
        write!(f, "p{k}")
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum XiVertex {
    Red,
    Blue,
    /// Variable `var` (1-based), or its negation when `positive` is false.
    Var { var: usize, positive: bool },
    Gadget { clause: usize, slot: GadgetSlot },
}

impl fmt::Display for XiVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            XiVertex::Red => f.write_str("pr"),
            XiVertex::Blue => f.write_str("pb"),
            XiVertex::Var { var, positive: true } => write!(f, "x{var}"),
            XiVertex::Var { var, positive: false } => write!(f, "-x{var}"),
            XiVertex::Gadget { clause, slot } => write!(f, "c{}.{slot}", clause + 1),
        }
    }
}

/// The gadget graph: `pr`, `pb`, a pair of points per variable and six per
/// clause.
#[derive(Clone, Debug)]
pub struct XiGraph {
    pub num_vars: usize,
    pub num_clauses: usize,
    pub graph: VisibilityGraph,
}

impl XiGraph {
    pub const RED: usize = 0;
    pub const BLUE: usize = 1;

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn literal(&self, lit: Literal) -> usize {
        2 + 2 * (lit.unsigned_abs() as usize - 1) + usize::from(lit < 0)
    }

    pub fn gadget(&self, clause: usize, slot: GadgetSlot) -> usize {
        2 + 2 * self.num_vars + 6 * clause + slot.offset()
    }

    pub fn label(&self, v: usize) -> XiVertex {
        match v {
            0 => XiVertex::Red,
            1 => XiVertex::Blue,
            v if v < 2 + 2 * self.num_vars => XiVertex::Var {
                var: (v - 2) / 2 + 1,
                positive: (v - 2) % 2 == 0,
            },
            v => {
                let k = v - 2 - 2 * self.num_vars;
                XiVertex::Gadget {
                    clause: k / 6,
                    slot: GadgetSlot::ALL[k % 6],
                }
            }
        }
    }
}

pub fn build_xi(f: &CnfFormula) -> XiGraph {
    let (n, m) = (f.num_vars, f.clauses.len());
    let mut xi = XiGraph {
        num_vars: n,
        num_clauses: m,
        graph: VisibilityGraph::empty(2 * n + 6 * m + 2),
    };
    let mut edges = vec![(XiGraph::RED, XiGraph::BLUE)];
    for var in 1..=n as Literal {
        let (pos, neg) = (xi.literal(var), xi.literal(-var));
        edges.extend([(XiGraph::BLUE, pos), (XiGraph::BLUE, neg), (pos, neg)]);
    }
    use GadgetSlot::*;
    for (j, &[a, b, c]) in f.clauses.iter().enumerate() {
        let p = |slot| xi.gadget(j, slot);
        let (p1, p2, p6) = (xi.literal(a), xi.literal(b), xi.literal(c));
        edges.extend([
            (p1, p(P3)),
            (p2, p(P4)),
            (p(P3), p(P4)),
            (p(P3), p(P5)),
            (p(P4), p(P5)),
            (p(P5), p(P7)),
            (p6, p(P8)),
            (p(P7), p(P8)),
            (p(P7), p(P9)),
            (p(P8), p(P9)),
            (p(P9), XiGraph::RED),
            (p(P9), XiGraph::BLUE),
        ]);
    }
    for (u, v) in edges {
        xi.graph.add_edge(u, v);
    }
    xi
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum ZetaRole {
    Xi(XiVertex),
    Dummy,
    /// Blocks the pair (l1 rank, l3 rank).
    Blocker { l1: usize, l3: usize },
}

impl fmt::Display for ZetaRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZetaRole::Xi(v) => v.fmt(f),
            ZetaRole::Dummy => f.write_str("dummy"),
            ZetaRole::Blocker { l1, l3 } => write!(f, "blocker(l1:{l1},l3:{l3})"),
        }
    }
}

/// The point set ζ. Points are stored l1 top to bottom, then l3 top to
/// bottom, then l2 top to bottom.
#[derive(Clone, Debug)]
pub struct ZetaEmbedding {
    pub points: PointSet,
    pub roles: Vec<ZetaRole>,
    pub lines: Vec<Line>,
    /// Position on its line, 0 at the top.
    pub ranks: Vec<usize>,
    pub xi: XiGraph,
    /// ξ vertex of each point, `None` for dummies and blockers.
    pub xi_vertex: Vec<Option<usize>>,
    /// Abscissa of l2; l1 is at 0 and l3 at 2.
    pub l2_abscissa: Rational,
    pub l1_len: usize,
    pub l3_len: usize,
}

impl ZetaEmbedding {
    pub fn blocker_count(&self) -> usize {
        self.points.len() - self.l1_len - self.l3_len
    }

    pub fn indices_on(&self, line: Line) -> impl Iterator<Item = usize> + '_ {
        (0..self.lines.len()).filter(move |&i| self.lines[i] == line)
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

/// Blocks of ξ vertices on a line, separated by single dummies.
fn with_dummies(blocks: Vec<Vec<usize>>) -> Vec<Option<usize>> {
    let mut out = Vec::new();
    for (k, block) in blocks.into_iter().enumerate() {
        if k > 0 {
            out.push(None);
        }
        out.extend(block.into_iter().map(Some));
    }
    out
}

pub fn build_zeta(f: &CnfFormula) -> Result<ZetaEmbedding> {
    let xi = build_xi(f);
    let (n, m) = (xi.num_vars, xi.num_clauses);
    use GadgetSlot::*;
    let mut l1_blocks: Vec<Vec<usize>> = (1..=n as Literal).map(|v| vec![xi.literal(v), xi.literal(-v)]).collect();
    for j in 0..m {
        l1_blocks.push(vec![xi.gadget(j, P5)]);
        l1_blocks.push(vec![xi.gadget(j, P9)]);
    }
    let mut l3_blocks = vec![vec![XiGraph::RED, XiGraph::BLUE]];
    for j in 0..m {
        l3_blocks.push(vec![xi.gadget(j, P3), xi.gadget(j, P4)]);
        l3_blocks.push(vec![xi.gadget(j, P7), xi.gadget(j, P8)]);
    }
    let l1 = with_dummies(l1_blocks);
    let l3 = with_dummies(l3_blocks);
    let top_down = |len: usize| (0..len).map(|r| (len - 1 - r) as i64).collect::<Vec<_>>();
    let (y1, y3) = (top_down(l1.len()), top_down(l3.len()));
    let joined = |i: usize, j: usize| match (l1[i], l3[j]) {
        (Some(u), Some(v)) => xi.graph.has_edge(u, v),
        _ => false,
    };
    let layout = place_blockers(&y1, &y3, joined)?;

    let int = |v: i64| Rational::from_integer(v.into());
    let mut points = Vec::new();
    let mut roles = Vec::new();
    let mut lines = Vec::new();
    let mut ranks = Vec::new();
    let mut xi_vertex = Vec::new();
    for (line, slots, ys, x) in [(Line::L1, &l1, &y1, 0), (Line::L3, &l3, &y3, SPAN)] {
        for (rank, (&slot, &y)) in slots.iter().zip(ys).enumerate() {
            points.push(Point::new(int(x), int(y)));
            roles.push(slot.map_or(ZetaRole::Dummy, |v| ZetaRole::Xi(xi.label(v))));
            lines.push(line);
            ranks.push(rank);
            xi_vertex.push(slot);
        }
    }
    for (rank, b) in layout.blockers.iter().enumerate() {
        points.push(Point::new(layout.across.clone(), b.along.clone()));
        roles.push(ZetaRole::Blocker { l1: b.l1, l3: b.l3 });
        lines.push(Line::L2);
        ranks.push(rank);
        xi_vertex.push(None);
    }
    Ok(ZetaEmbedding {
        points: PointSet::new(points)?,
        roles,
        lines,
        ranks,
        xi,
        xi_vertex,
        l2_abscissa: layout.across,
        l1_len: l1.len(),
        l3_len: l3.len(),
    })
}

pub const RED: usize = 0;
pub const GREEN: usize = 1;
pub const BLUE: usize = 2;

/// 3-colouring of ξ from a satisfying assignment: true literals green,
/// false ones red, `pb` blue, `pr` red, gadget interiors solved locally.
pub fn xi_colouring(xi: &XiGraph, f: &CnfFormula, assignment: &[bool]) -> Option<Colouring> {
    let mut colour = vec![usize::MAX; xi.vertex_count()];
    colour[XiGraph::RED] = RED;
    colour[XiGraph::BLUE] = BLUE;
    for var in 1..=f.num_vars {
        let truth = assignment[var - 1];
        colour[xi.literal(var as Literal)] = if truth { GREEN } else { RED };
        colour[xi.literal(-(var as Literal))] = if truth { RED } else { GREEN };
    }
    for j in 0..f.clauses.len() {
        let slots: Vec<usize> = GadgetSlot::ALL.iter().map(|&s| xi.gadget(j, s)).collect();
        let solved = (0..3usize.pow(6)).find_map(|code| {
            let mut trial = colour.clone();
            for (k, &v) in slots.iter().enumerate() {
                trial[v] = code / 3usize.pow(k as u32) % 3;
            }
            let ok = slots
                .iter()
                .all(|&v| xi.graph.neighbours(v).all(|u| trial[u] == usize::MAX || trial[u] != trial[v]));
            ok.then_some(trial)
        })?;
        colour = solved;
    }
    Some(Colouring::new(colour))
}

/// Explicit 5-colouring of PVG(ζ) from a satisfying assignment: ξ's points
/// as in [`xi_colouring`], each dummy the least colour its line neighbours
/// leave free, and l2 alternating colours 3 and 4.
pub fn five_colouring(z: &ZetaEmbedding, f: &CnfFormula, assignment: &[bool], g: &VisibilityGraph) -> Option<Colouring> {
    let base = xi_colouring(&z.xi, f, assignment)?;
    let mut colour = vec![usize::MAX; z.points.len()];
    for (i, v) in z.xi_vertex.iter().enumerate() {
        if let Some(v) = v {
            colour[i] = base.colour(*v);
        }
    }
    for i in 0..z.points.len() {
        match z.roles[i] {
            ZetaRole::Dummy => {
                let used: Vec<usize> = g
                    .neighbours(i)
                    .filter(|&u| z.lines[u] != Line::L2)
                    .map(|u| colour[u])
                    .collect();
                colour[i] = (0..3).find(|c| !used.contains(c))?;
            }
            ZetaRole::Blocker { .. } => colour[i] = 3 + z.ranks[i] % 2,
            ZetaRole::Xi(_) => {}
        }
    }
    Some(Colouring::new(colour))
}

/// Outcome of checking one formula against its embedding.
#[derive(Clone, Debug, Serialize)]
pub struct ReductionReport {
    pub num_vars: usize,
    pub num_clauses: usize,
    pub l1_points: usize,
    pub l3_points: usize,
    pub blockers: usize,
    /// l1–l3 edges of ξ.
    pub cross_edges: usize,
    /// The closed form 9m + 2n for the number of cross edges.
    pub closed_form_cross_edges: usize,
    pub satisfying_assignment: Option<Vec<bool>>,
    pub outer_three_colourable: bool,
    /// Every l2 point sees every point of l1 ∪ l3.
    pub l2_sees_all: bool,
    /// l2 induces a path in rank order.
    pub l2_is_path: bool,
    /// Visibility among l1 ∪ l3 points of ξ is exactly ξ's edge set.
    pub matches_xi: bool,
    pub five_colourable: bool,
    /// Explicit 5-colouring, validated, when the formula is satisfiable.
    pub five_colouring: Option<Colouring>,
    /// Satisfiable ⇔ outer part 3-colourable ⇔ PVG(ζ) 5-colourable.
    pub equivalent: bool,
}

pub fn verify_reduction(f: &CnfFormula, z: &ZetaEmbedding, budget: Budget) -> Result<ReductionReport> {
    let g = build_pvg(&z.points);
    let outer: Vec<usize> = (0..z.points.len()).filter(|&i| z.lines[i] != Line::L2).collect();
    let l2: Vec<usize> = z.indices_on(Line::L2).collect();

    let l2_sees_all = l2.iter().all(|&b| outer.iter().all(|&u| g.has_edge(b, u)));
    let l2_is_path = l2
        .iter()
        .enumerate()
        .all(|(a, &u)| l2.iter().enumerate().skip(a + 1).all(|(b, &v)| g.has_edge(u, v) == (b == a + 1)));
    let matches_xi = outer.iter().all(|&u| {
        outer.iter().all(|&v| match (z.xi_vertex[u], z.xi_vertex[v]) {
            (Some(a), Some(b)) if u != v => g.has_edge(u, v) == z.xi.graph.has_edge(a, b),
            _ => true,
        })
    });
    let cross_edges = z
        .xi
        .graph
        .edges()
        .filter(|&(a, b)| {
            let line = |x: usize| z.xi_vertex.iter().position(|&v| v == Some(x)).map(|i| z.lines[i]);
            line(a) != line(b)
        })
        .count();

    let satisfying_assignment = f.brute_force_sat();
    let mut five = None;
    if let Some(a) = &satisfying_assignment {
        five = five_colouring(z, f, a, &g).filter(|c| is_valid_colouring(&g, c).unwrap_or(false));
    }
    let outer_graph = g.induced(&outer);
    let outer_three_colourable = match &five {
        Some(_) => true,
        None => k_colourable(&outer_graph, 3, budget)?.is_some(),
    };
    let l2_colours = l2.len().min(2);
    let five_colourable = if l2_sees_all && l2_is_path {
        if l2_colours == 2 {
            outer_three_colourable
        } else {
            k_colourable(&outer_graph, 5 - l2_colours, budget)?.is_some()
        }
    } else {
        k_colourable(&g, 5, budget)?.is_some()
    };
    let equivalent = satisfying_assignment.is_some() == outer_three_colourable
        && outer_three_colourable == five_colourable
        && (satisfying_assignment.is_none() || five.is_some());
    Ok(ReductionReport {
        num_vars: f.num_vars,
        num_clauses: f.clauses.len(),
        l1_points: z.l1_len,
        l3_points: z.l3_len,
        blockers: z.blocker_count(),
        cross_edges,
        closed_form_cross_edges: 9 * f.clauses.len() + 2 * f.num_vars,
        satisfying_assignment,
        outer_three_colourable,
        l2_sees_all,
        l2_is_path,
        matches_xi,
        five_colourable,
        five_colouring: five,
        equivalent,
    })
}
