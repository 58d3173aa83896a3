//! Polynomial-time 4-colouring of point visibility graphs.
//!
//! The pipeline: return the structural 3-colouring when there is one;
//! otherwise peel off convex hull vertices that see a triangle until none is
//! left (the reduced set), enumerate the constant number of 4-colourings the
//! reduced set admits, and extend each by re-adding the peeled vertices in
//! reverse order, every one of which has its colour forced by the triangle it
//! saw.

use crate::error::{Error, Result};
use crate::geometry::{
    build_pvg, convex_hull, frontier_triples, ray_fan, Point, PointSet, RayFan, RayKind, TripleKind,
};
use crate::geometry::hull::hull_vertices;
use crate::graph::{
    enumerate_colourings, first_triangle_within, is_valid_colouring, Budget, Colouring, Symmetry, VertexSet,
    VisibilityGraph,
};
use crate::three_colour::three_colourable_with_graph;

/// Most 4-colourings, up to permutation, a reduced 3-colourable set plus its
/// last deleted point may have before the structural assumptions are
/// considered broken.
pub const REDUCED_PLUS_ONE_CAP: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Deletion {
    /// Index in the original point set.
    pub vertex: usize,
    /// Triangle of original indices seen by `vertex` when it was deleted.
    pub witness: [usize; 3],
}

#[derive(Clone, Debug)]
pub struct ReductionTrace {
    pub deletions: Vec<Deletion>,
    /// Original index of every vertex of `reduced`, in order.
    pub labels: Vec<usize>,
    pub reduced: PointSet,
}

/// Repeatedly deletes the lowest-indexed convex hull vertex that sees a
/// triangle among the remaining points.
pub fn reduce(ps: &PointSet) -> ReductionTrace {
    reduce_with_graph(ps, &build_pvg(ps))
}

pub(crate) fn reduce_with_graph(ps: &PointSet, g: &VisibilityGraph) -> ReductionTrace {
    let n = ps.len();
    let mut active = VertexSet::full(n);
    let mut alive: Vec<usize> = (0..n).collect();
    let mut deletions = Vec::new();
    'peel: loop {
        let mut hull = hull_vertices(ps, &alive);
        hull.sort_unstable();
        for v in hull {
            let around = active.intersection(g.row(v));
            if let Some(witness) = first_triangle_within(g, &around) {
                debug_assert!(
                    !alive.iter().any(|&a| alive.iter().any(|&b| a < b && ps.between(a, v, b))),
                    "hull vertex {v} blocks a pair"
                );
                active.remove(v);
                alive.retain(|&u| u != v);
                deletions.push(Deletion { vertex: v, witness });
                continue 'peel;
            }
        }
        break;
    }
    let reduced = ps.subset(&alive);
    ReductionTrace {
        deletions,
        labels: alive,
        reduced,
    }
}

/// True iff no convex hull vertex of `ps` sees a triangle.
pub fn reduced_is_reduced(ps: &PointSet) -> bool {
    let g = build_pvg(ps);
    convex_hull(ps)
        .vertices
        .iter()
        .all(|&v| first_triangle_within(&g, &g.neighbour_set(v)).is_none())
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// `index`-th colouring of the reduced set with its last deleted point.
    ReducedPlusOne { index: usize },
    /// `carries[i]`: whether the first big ray of the i-th hull vertex
    /// (clockwise) carries that vertex's colour.
    HullChoices { carries: [bool; 3] },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateColouring {
    pub assignment: Colouring,
    pub provenance: Provenance,
    pub valid: bool,
}

/// All 4-colourings, up to colour permutation, of `reduced` with `p`
/// appended as its last vertex.
pub fn enumerate_reduced_plus_one(reduced: &PointSet, p: Point) -> Result<Vec<CandidateColouring>> {
    let ps = reduced.with_point(p)?;
    let g = build_pvg(&ps);
    let found = enumerate_colourings(&g, 4, REDUCED_PLUS_ONE_CAP, Symmetry::Canonical, Budget::UNLIMITED)?;
    if !found.complete {
        return Err(Error::EnumerationOverflow {
            cap: REDUCED_PLUS_ONE_CAP,
        });
    }
    Ok(found
        .colourings
        .into_iter()
        .enumerate()
        .map(|(index, c)| CandidateColouring {
            assignment: c.canonical(),
            provenance: Provenance::ReducedPlusOne { index },
            valid: true,
        })
        .collect())
}

/// Shape of a reduced set that is not 3-colourable, checked against the
/// structure such sets must have.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuralReport {
    /// The three hull vertices, clockwise from the lexicographically
    /// smallest.
    pub hull: Vec<usize>,
    /// Ray fan of each hull vertex, same order as `hull`.
    pub fans: Vec<RayFan>,
    pub triples: Vec<Vec<TripleKind>>,
}

pub fn hull_structure_checks(reduced: &PointSet) -> Result<StructuralReport> {
    let hull = convex_hull(reduced);
    if hull.vertices.len() != 3 {
        return Err(Error::structural(
            "three hull vertices",
            format!("hull has {} vertices: {:?}", hull.vertices.len(), hull.vertices),
        ));
    }
    if hull.points.len() != 3 {
        return Err(Error::structural(
            "hull points are vertices",
            format!("boundary points {:?}, vertices {:?}", hull.points, hull.vertices),
        ));
    }
    let mut fans = Vec::with_capacity(3);
    let mut triples = Vec::with_capacity(3);
    for &h in &hull.vertices {
        let fan = ray_fan(reduced, h)?;
        if fan.internal_frontier().is_empty() {
            return Err(Error::structural(
                "internal frontier point",
                format!("hull vertex {h} has frontier {:?}", fan.frontier),
            ));
        }
        let kinds = frontier_triples(reduced, &fan);
        if let Some(i) = kinds.iter().position(|&t| t == TripleKind::Concave) {
            return Err(Error::structural(
                "no concave frontier triple",
                format!("hull vertex {h}: frontier triple at ray {i} is concave"),
            ));
        }
        if let Some(i) = kinds
            .iter()
            .enumerate()
            .position(|(i, &t)| t == TripleKind::Convex && fan.kinds[i + 1] != RayKind::Big)
        {
            return Err(Error::structural(
                "convex frontier vertex on a big ray",
                format!("hull vertex {h}: convex triple at ray {i} has a small middle ray"),
            ));
        }
        if fan.big_rays().count() < 2 {
            return Err(Error::structural(
                "two big rays",
                format!("hull vertex {h} has {} big rays", fan.big_rays().count()),
            ));
        }
        fans.push(fan);
        triples.push(kinds);
    }
    Ok(StructuralReport {
        hull: hull.vertices,
        fans,
        triples,
    })
}

/// Big rays of `fan` that carry the apex's colour, given whether the first
/// big ray does. Consecutive big rays alternate: neighbouring big rays see
/// each other completely, and across a run of small rays the second points
/// of the two bounding big rays still see each other.
fn carrying_rays(fan: &RayFan, first_carries: bool) -> Vec<usize> {
    fan.big_rays()
        .enumerate()
        .filter(|&(k, _)| (k % 2 == 0) == first_carries)
        .map(|(_, r)| r)
        .collect()
}

/// Colour class of `fan.apex`: the apex itself and every second point,
/// starting from the second, of each carrying big ray.
fn apex_class(fan: &RayFan, first_carries: bool) -> Vec<usize> {
    let mut class = vec![fan.apex];
    for r in carrying_rays(fan, first_carries) {
        class.extend(fan.rays[r].iter().skip(1).step_by(2));
    }
    class
}

/// The at most eight candidate 4-colourings of a reduced set that is not
/// 3-colourable: hull vertices take colours 0, 1, 2 clockwise; each colour
/// class follows from one binary choice on that vertex's fan; everything
/// left over takes colour 3.
pub fn eight_candidates(reduced: &PointSet) -> Result<Vec<CandidateColouring>> {
    let report = hull_structure_checks(reduced)?;
    eight_candidates_from(reduced, &report)
}

pub(crate) fn eight_candidates_from(reduced: &PointSet, report: &StructuralReport) -> Result<Vec<CandidateColouring>> {
    let g = build_pvg(reduced);
    let n = reduced.len();
    let mut out = Vec::with_capacity(8);
    for mask in 0..8u8 {
        let carries = [mask & 4 != 0, mask & 2 != 0, mask & 1 != 0];
        let mut colours = vec![usize::MAX; n];
        let mut clash = false;
        for (colour, fan) in report.fans.iter().enumerate() {
            for v in apex_class(fan, carries[colour]) {
                if colours[v] != usize::MAX {
                    clash = true;
                }
                colours[v] = colour;
            }
        }
        if clash {
            continue;
        }
        for c in colours.iter_mut().filter(|c| **c == usize::MAX) {
            *c = 3;
        }
        let assignment = Colouring::new(colours);
        let valid = is_valid_colouring(&g, &assignment)?;
        out.push(CandidateColouring {
            assignment,
            provenance: Provenance::HullChoices { carries },
            valid,
        });
    }
    Ok(out)
}

/// Re-adds deleted vertices in reverse deletion order, giving each the one
/// colour missing from its witness triangle. `base` colours the original
/// vertices already present; vertices it colours are skipped. Returns `None`
/// as soon as a re-added vertex clashes with a visible neighbour.
pub fn reinsert(
    g: &VisibilityGraph,
    trace: &ReductionTrace,
    base: &[Option<usize>],
) -> Result<Option<Colouring>> {
    let mut colour = base.to_vec();
    for d in trace.deletions.iter().rev() {
        if colour[d.vertex].is_some() {
            continue;
        }
        let seen: Option<Vec<usize>> = d.witness.iter().map(|&w| colour[w]).collect();
        let tricoloured = seen.filter(|s| s[0] != s[1] && s[1] != s[2] && s[0] != s[2] && s.iter().all(|&c| c < 4));
        let Some(seen) = tricoloured else {
            return Err(Error::WitnessNotTricoloured {
                vertex: d.vertex,
                witness: d.witness,
            });
        };
        let forced = (0..4).find(|c| !seen.contains(c)).expect("four colours, three used");
        if g.neighbours(d.vertex).any(|u| colour[u] == Some(forced)) {
            return Ok(None);
        }
        colour[d.vertex] = Some(forced);
    }
    let total: Option<Vec<usize>> = colour.into_iter().collect();
    Ok(total.map(Colouring::new))
}

/// Candidate 4-colourings of the reduced set, lifted to original indices.
fn reduced_candidates(
    ps: &PointSet,
    trace: &ReductionTrace,
) -> Result<Vec<Vec<Option<usize>>>> {
    let reduced_graph = build_pvg(&trace.reduced);
    let lift = |labels: &[usize], c: &Colouring| {
        let mut base = vec![None; ps.len()];
        for (k, &v) in labels.iter().enumerate() {
            base[v] = Some(c.colour(k));
        }
        base
    };
    if three_colourable_with_graph(&trace.reduced, &reduced_graph)?.is_some() {
        let last = trace.deletions.last().ok_or_else(|| {
            Error::InternalInconsistency("reduced set is 3-colourable but nothing was deleted".into())
        })?;
        let mut labels = trace.labels.clone();
        labels.push(last.vertex);
        let candidates = enumerate_reduced_plus_one(&trace.reduced, ps.point(last.vertex).clone())?;
        Ok(candidates.iter().map(|c| lift(&labels, &c.assignment)).collect())
    } else {
        let report = hull_structure_checks(&trace.reduced)?;
        let candidates = eight_candidates_from(&trace.reduced, &report)?;
        Ok(candidates
            .iter()
            .filter(|c| c.valid)
            .map(|c| lift(&trace.labels, &c.assignment))
            .collect())
    }
}

/// A valid colouring with at most four colours, or `None` if the visibility
/// graph of `ps` is not 4-colourable.
pub fn decide_four_colouring(ps: &PointSet) -> Result<Option<Colouring>> {
    let g = build_pvg(ps);
    if let Some(c) = three_colourable_with_graph(ps, &g)? {
        return Ok(Some(c));
    }
    let trace = reduce_with_graph(ps, &g);
    for base in reduced_candidates(ps, &trace)? {
        if let Some(c) = reinsert(&g, &trace, &base)? {
            if !is_valid_colouring(&g, &c)? || c.colours().iter().any(|&x| x >= 4) {
                return Err(Error::InternalInconsistency("reinsertion produced an improper colouring".into()));
            }
            return Ok(Some(c));
        }
    }
    Ok(None)
}
