use super::{Orientation, PointSet};

/// Convex hull of a point set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvexHull {
    /// Corners only, clockwise, starting from the lexicographically smallest
    /// point.
    pub vertices: Vec<usize>,
    /// Every point on the hull boundary, corners included, ascending.
    pub points: Vec<usize>,
}

impl ConvexHull {
    pub fn is_vertex(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }
}

pub fn convex_hull(ps: &PointSet) -> ConvexHull {
    let all: Vec<usize> = (0..ps.len()).collect();
    hull_of(ps, &all)
}

/// Hull of the sub-collection `subset` of `ps` (indices refer to `ps`).
pub(crate) fn hull_of(ps: &PointSet, subset: &[usize]) -> ConvexHull {
    let vertices = hull_vertices(ps, subset);
    let points = if vertices.len() <= 2 {
        let mut all = subset.to_vec();
        all.sort_unstable();
        all
    } else {
        let mut on_boundary: Vec<usize> = subset
            .iter()
            .copied()
            .filter(|&p| {
                vertices.contains(&p)
                    || (0..vertices.len()).any(|e| {
                        let a = vertices[e];
                        let b = vertices[(e + 1) % vertices.len()];
                        ps.between(a, p, b)
                    })
            })
            .collect();
        on_boundary.sort_unstable();
        on_boundary
    };
    ConvexHull { vertices, points }
}

/// Monotone chain; returns corners clockwise from the lexicographically
/// smallest point.
pub(crate) fn hull_vertices(ps: &PointSet, subset: &[usize]) -> Vec<usize> {
    let lattice = ps.lattice();
    let mut sorted = subset.to_vec();
    sorted.sort_by(|&a, &b| lattice.cmp_lexicographic(a, b));
    if sorted.len() <= 2 {
        return sorted;
    }
    let chain = |iter: &mut dyn Iterator<Item = usize>| {
        let mut h: Vec<usize> = Vec::new();
        for p in iter {
            while h.len() >= 2
                && ps.orient(h[h.len() - 2], h[h.len() - 1], p) != Orientation::CounterClockwise
            {
                h.pop();
            }
            h.push(p);
        }
        h
    };
    let mut lower = chain(&mut sorted.iter().copied());
    let mut upper = chain(&mut sorted.iter().rev().copied());
    lower.pop();
    upper.pop();
    lower.extend(upper);
    // `lower` is now counter-clockwise from the smallest point.
    lower[1..].reverse();
    lower
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(coords: &[(i64, i64)]) -> PointSet {
        PointSet::from_ints(coords).unwrap()
    }

    #[test]
    fn unit_square() {
        let h = convex_hull(&ints(&[(0, 0), (1, 0), (1, 1), (0, 1)]));
        // Clockwise from (0,0): up the left side first.
        assert_eq!(h.vertices, vec![0, 3, 2, 1]);
        assert_eq!(h.points, vec![0, 1, 2, 3]);
    }

    #[test]
    fn boundary_midpoint_is_a_point_not_a_vertex() {
        let h = convex_hull(&ints(&[(0, 0), (1, 0), (2, 0), (1, 1)]));
        assert_eq!(h.vertices, vec![0, 3, 2]);
        assert_eq!(h.points, vec![0, 1, 2, 3]);
    }

    #[test]
    fn collinear_sets_have_two_vertices() {
        let h = convex_hull(&ints(&[(2, 2), (0, 0), (4, 4), (1, 1), (3, 3)]));
        assert_eq!(h.vertices, vec![1, 2]);
        assert_eq!(h.points.len(), 5);
        assert_eq!(convex_hull(&ints(&[(5, 5)])).vertices, vec![0]);
    }

    #[test]
    fn interior_points_are_excluded() {
        let h = convex_hull(&ints(&[(0, 0), (4, 0), (0, 4), (1, 1), (2, 2)]));
        assert_eq!(h.vertices, vec![0, 2, 1]);
        assert_eq!(h.points, vec![0, 1, 2, 4]);
    }
}
