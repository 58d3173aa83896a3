//! Structural characterisation of point sets whose visibility graphs are
//! 2- or 3-colourable.
//!
//! A point set is 3-colourable exactly when it is collinear, collinear but
//! for one point, collinear but for two mutually invisible points, or its
//! visibility graph is the octahedron K2,2,2; equivalently, when its
//! visibility graph has no K4. Both routes are computed and compared.

use crate::error::{Error, Result};
use crate::geometry::{build_pvg, convex_hull, Orientation, PointSet};
use crate::graph::{first_triangle_within, has_k4, is_valid_colouring, Colouring, VisibilityGraph};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum FormTag {
    AllCollinear,
    OneOffLine,
    TwoInvisibleOffPath,
    /// Collinear but for two mutually visible points on opposite sides of
    /// the line whose segment crosses it outside the span of the rest.
    /// Planar, not 3-colourable.
    TwoVisibleOffPath,
    Octahedron,
    None,
}

impl FormTag {
    pub fn is_three_colourable(self) -> bool {
        matches!(
            self,
            FormTag::AllCollinear | FormTag::OneOffLine | FormTag::TwoInvisibleOffPath | FormTag::Octahedron
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuralForm {
    pub tag: FormTag,
    /// Points on the common line, in order along it. Empty for the
    /// octahedron and for `None`.
    pub line: Vec<usize>,
    /// Points off the line; for the octahedron, the three invisible pairs
    /// flattened.
    pub off_line: Vec<usize>,
}

impl StructuralForm {
    fn new(tag: FormTag, line: Vec<usize>, off_line: Vec<usize>) -> Self {
        StructuralForm { tag, line, off_line }
    }
}

/// Lines through at least `n - 2` points, each with its off-line points.
fn near_lines(ps: &PointSet) -> Vec<(Vec<usize>, Vec<usize>)> {
    let n = ps.len();
    let anchors = n.min(5);
    let lattice = ps.lattice();
    let mut out: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for a in 0..anchors {
        for b in a + 1..anchors {
            let (mut on, off): (Vec<usize>, Vec<usize>) =
                (0..n).partition(|&c| ps.orient(a, b, c) == Orientation::Collinear);
            // `on` is ascending here, so equal lines compare equal.
            if off.len() > 2 || out.iter().any(|(_, seen_off)| *seen_off == off) {
                continue;
            }
            on.sort_by(|&u, &v| lattice.cmp_lexicographic(u, v));
            out.push((on, off));
        }
    }
    out
}

fn opposite_sides(ps: &PointSet, v: usize, w: usize, e1: usize, e2: usize) -> bool {
    let sv = ps.orient(e1, e2, v);
    let sw = ps.orient(e1, e2, w);
    sv != sw && sv != Orientation::Collinear && sw != Orientation::Collinear
}

fn segments_meet(ps: &PointSet, v: usize, w: usize, e1: usize, e2: usize) -> bool {
    let sv = ps.orient(e1, e2, v);
    let sw = ps.orient(e1, e2, w);
    if sv == sw {
        return false;
    }
    let s1 = ps.orient(v, w, e1);
    let s2 = ps.orient(v, w, e2);
    s1 == Orientation::Collinear || s2 == Orientation::Collinear || s1 != s2
}

fn is_octahedron(g: &VisibilityGraph) -> bool {
    g.vertex_count() == 6 && (0..6).all(|v| g.degree(v) == 4)
}

/// First matching structural form, tested in the order collinear, one off
/// the line, two invisible off the line, two visible off the line,
/// octahedron.
pub fn classify_form(ps: &PointSet) -> StructuralForm {
    let g = build_pvg(ps);
    classify_with_graph(ps, &g)
}

pub(crate) fn classify_with_graph(ps: &PointSet, g: &VisibilityGraph) -> StructuralForm {
    let n = ps.len();
    let all: Vec<usize> = (0..n).collect();
    if ps.all_collinear(&all) {
        let mut line = all;
        line.sort_by(|&u, &v| ps.lattice().cmp_lexicographic(u, v));
        return StructuralForm::new(FormTag::AllCollinear, line, Vec::new());
    }
    let lines = near_lines(ps);
    if let Some((line, off)) = lines.iter().find(|(_, off)| off.len() == 1) {
        return StructuralForm::new(FormTag::OneOffLine, line.clone(), off.clone());
    }
    let pairs: Vec<&(Vec<usize>, Vec<usize>)> = lines.iter().filter(|(_, off)| off.len() == 2).collect();
    if let Some((line, off)) = pairs.iter().find(|(_, off)| !g.has_edge(off[0], off[1])) {
        return StructuralForm::new(FormTag::TwoInvisibleOffPath, line.clone(), off.clone());
    }
    if let Some((line, off)) = pairs.iter().find(|(line, off)| {
        let (first, last) = (line[0], line[line.len() - 1]);
        opposite_sides(ps, off[0], off[1], first, last) && !segments_meet(ps, off[0], off[1], first, last)
    }) {
        return StructuralForm::new(FormTag::TwoVisibleOffPath, line.clone(), off.clone());
    }
    if is_octahedron(g) {
        let mut off = Vec::new();
        for v in 0..6 {
            let partner = (0..6).find(|&u| u != v && !g.has_edge(u, v)).expect("one non-neighbour");
            if v < partner {
                off.extend([v, partner]);
            }
        }
        return StructuralForm::new(FormTag::Octahedron, Vec::new(), off);
    }
    StructuralForm::new(FormTag::None, Vec::new(), Vec::new())
}

fn colouring_for_form(n: usize, form: &StructuralForm) -> Option<Colouring> {
    let mut colours = vec![usize::MAX; n];
    match form.tag {
        FormTag::AllCollinear | FormTag::OneOffLine | FormTag::TwoInvisibleOffPath => {
            for (k, &v) in form.line.iter().enumerate() {
                colours[v] = k % 2;
            }
            for &v in &form.off_line {
                colours[v] = 2;
            }
        }
        FormTag::Octahedron => {
            for (k, pair) in form.off_line.chunks(2).enumerate() {
                colours[pair[0]] = k;
                colours[pair[1]] = k;
            }
        }
        FormTag::TwoVisibleOffPath | FormTag::None => return None,
    }
    Some(Colouring::new(colours))
}

/// A valid colouring with at most three colours, built from the structural
/// form, or `None` when the visibility graph contains a K4.
pub fn three_colourable(ps: &PointSet) -> Result<Option<Colouring>> {
    let g = build_pvg(ps);
    three_colourable_with_graph(ps, &g)
}

pub(crate) fn three_colourable_with_graph(ps: &PointSet, g: &VisibilityGraph) -> Result<Option<Colouring>> {
    let form = classify_with_graph(ps, g);
    let colouring = colouring_for_form(ps.len(), &form);
    let k4 = has_k4(g);
    if colouring.is_some() == k4.is_some() {
        return Err(Error::InternalInconsistency(format!(
            "structural form {:?} disagrees with K4 witness {:?}",
            form.tag, k4
        )));
    }
    if let Some(c) = &colouring {
        if !is_valid_colouring(g, c)? {
            return Err(Error::InternalInconsistency(format!(
                "colouring built for {:?} is not proper",
                form.tag
            )));
        }
    }
    Ok(colouring)
}

/// The alternating colouring along the line when all points are collinear.
pub fn two_colourable(ps: &PointSet) -> Option<Colouring> {
    let all: Vec<usize> = (0..ps.len()).collect();
    if !ps.all_collinear(&all) {
        return None;
    }
    let mut line = all;
    line.sort_by(|&u, &v| ps.lattice().cmp_lexicographic(u, v));
    let mut colours = vec![0; ps.len()];
    for (k, &v) in line.iter().enumerate() {
        colours[v] = k % 2;
    }
    Some(Colouring::new(colours))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReducedThreeColouring {
    /// The only 3-colouring up to permutation, canonically labelled.
    Unique(Colouring),
    /// All points collinear: 3-colourable but not uniquely, which a reduced
    /// set produced by at least one deletion can never be.
    Collinear(Colouring),
    NotThreeColourable,
}

/// The unique 3-colouring of a reduced set. Fails with `NotReduced` if some
/// hull vertex still sees a triangle.
pub fn unique_3colouring_of_reduced(ps: &PointSet) -> Result<ReducedThreeColouring> {
    let g = build_pvg(ps);
    for &v in &convex_hull(ps).vertices {
        if let Some(witness) = first_triangle_within(&g, &g.neighbour_set(v)) {
            return Err(Error::NotReduced { vertex: v, witness });
        }
    }
    let form = classify_with_graph(ps, &g);
    Ok(match three_colourable_with_graph(ps, &g)? {
        None => ReducedThreeColouring::NotThreeColourable,
        Some(c) if form.tag == FormTag::AllCollinear => ReducedThreeColouring::Collinear(c.canonical()),
        Some(c) => ReducedThreeColouring::Unique(c.canonical()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(coords: &[(i64, i64)]) -> PointSet {
        PointSet::from_ints(coords).unwrap()
    }

    pub(crate) fn octahedron() -> PointSet {
        ints(&[(0, 0), (4, 0), (2, 0), (0, 2), (1, 1), (-1, -1)])
    }

    #[test]
    fn forms_in_order() {
        assert_eq!(classify_form(&ints(&[(0, 0), (1, 1), (2, 2), (3, 3), (9, 9)])).tag, FormTag::AllCollinear);
        let apex = ints(&[(0, 0), (1, 0), (2, 0), (3, 0), (1, 5)]);
        let form = classify_form(&apex);
        assert_eq!(form.tag, FormTag::OneOffLine);
        assert_eq!(form.off_line, vec![4]);
        assert_eq!(form.line, vec![0, 1, 2, 3]);
        let oct = classify_form(&octahedron());
        assert_eq!(oct.tag, FormTag::Octahedron);
        let mut pairs: Vec<[usize; 2]> = oct.off_line.chunks(2).map(|p| [p[0], p[1]]).collect();
        pairs.sort_unstable();
        assert_eq!(pairs, vec![[0, 1], [2, 3], [4, 5]]);
        assert_eq!(classify_form(&ints(&[(0, 0), (1, 0), (1, 1), (0, 1)])).tag, FormTag::None);
    }

    #[test]
    fn two_off_line_points() {
        // Opposite sides, blocked by (1, 0).
        let blocked = ints(&[(0, 0), (1, 0), (2, 0), (3, 0), (1, 2), (1, -2)]);
        assert_eq!(classify_form(&blocked).tag, FormTag::TwoInvisibleOffPath);
        // Opposite sides, crossing the line beyond its last point.
        let beyond = ints(&[(0, 0), (1, 0), (2, 0), (3, 0), (4, 2), (6, -2)]);
        assert_eq!(classify_form(&beyond).tag, FormTag::TwoVisibleOffPath);
        assert!(three_colourable(&beyond).unwrap().is_none());
        // Same side: the drawing has crossings.
        let same = ints(&[(0, 0), (1, 0), (2, 0), (3, 0), (1, 2), (2, 3)]);
        assert_eq!(classify_form(&same).tag, FormTag::None);
        // Opposite sides crossing the line between points: K4 present.
        let crossing = ints(&[(0, 0), (2, 0), (1, 2), (1, -2), (4, 0)]);
        let t = classify_form(&crossing).tag;
        assert_ne!(t, FormTag::TwoInvisibleOffPath);
        assert!(three_colourable(&crossing).unwrap().is_none());
    }

    #[test]
    fn three_colourings_by_form() {
        let line = ints(&[(0, 0), (1, 0), (2, 0), (3, 0), (4, 0), (5, 0), (6, 0)]);
        assert_eq!(three_colourable(&line).unwrap().unwrap().colours(), &[0, 1, 0, 1, 0, 1, 0]);
        let apex = ints(&[(0, 0), (1, 0), (2, 0), (3, 0), (1, 5)]);
        assert_eq!(three_colourable(&apex).unwrap().unwrap().colours(), &[0, 1, 0, 1, 2]);
        let oct = octahedron();
        let c = three_colourable(&oct).unwrap().unwrap();
        assert!(is_valid_colouring(&build_pvg(&oct), &c).unwrap());
        let mut sizes = [0; 3];
        for &col in c.colours() {
            sizes[col] += 1;
        }
        assert_eq!(sizes, [2, 2, 2]);
        assert_eq!(three_colourable(&ints(&[(0, 0), (1, 0), (1, 1), (0, 1)])).unwrap(), None);
    }

    #[test]
    fn two_colourings() {
        assert_eq!(two_colourable(&ints(&[(0, 0), (2, 2), (1, 1)])).unwrap().colours(), &[0, 0, 1]);
        assert_eq!(two_colourable(&ints(&[(0, 0), (1, 0), (0, 1)])), None);
        assert_eq!(two_colourable(&ints(&[(0, 0), (5, 1)])).unwrap().colours(), &[0, 1]);
    }

    #[test]
    fn reduced_sets() {
        match unique_3colouring_of_reduced(&octahedron()).unwrap() {
            ReducedThreeColouring::Unique(c) => assert_eq!(c.colour_count(), 3),
            other => panic!("unexpected {other:?}"),
        }
        let apex = ints(&[(0, 0), (1, 0), (2, 0), (3, 0), (1, 5)]);
        assert!(matches!(unique_3colouring_of_reduced(&apex).unwrap(), ReducedThreeColouring::Unique(_)));
        let line = ints(&[(0, 0), (1, 0), (2, 0)]);
        assert!(matches!(unique_3colouring_of_reduced(&line).unwrap(), ReducedThreeColouring::Collinear(_)));
        let k4 = ints(&[(0, 0), (3, 1), (1, 4), (5, 5)]);
        assert!(matches!(unique_3colouring_of_reduced(&k4), Err(Error::NotReduced { .. })));
    }
}
