//! Angular decomposition of a point set around one of its hull vertices.

use super::hull::hull_vertices;
use super::{Orientation, PointSet};
use crate::error::{Error, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum RayKind {
    /// Two or more points.
    Big,
    /// Exactly one point.
    Small,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Odd,
    Even,
}

/// A maximal run of small rays with a big ray on each side.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Break {
    /// Index of the big ray preceding the run.
    pub after: usize,
    /// Index of the big ray following the run.
    pub before: usize,
    pub small_rays: usize,
    pub parity: Parity,
}

/// Open rays from `apex` in clockwise order. The first and last rays are the
/// tangents from `apex` to the hull of the remaining points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayFan {
    pub apex: usize,
    /// Each ray lists its points by increasing distance from `apex`.
    pub rays: Vec<Vec<usize>>,
    /// First point of every ray.
    pub frontier: Vec<usize>,
    pub kinds: Vec<RayKind>,
    pub breaks: Vec<Break>,
}

impl RayFan {
    pub fn big_rays(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.rays.len()).filter(|&r| self.kinds[r] == RayKind::Big)
    }

    /// Frontier points other than the two tangent ones.
    pub fn internal_frontier(&self) -> &[usize] {
        if self.frontier.len() <= 2 {
            &[]
        } else {
            &self.frontier[1..self.frontier.len() - 1]
        }
    }

    /// Index of the ray carrying `v`.
    pub fn ray_of(&self, v: usize) -> Option<usize> {
        self.rays.iter().position(|r| r.contains(&v))
    }
}

pub fn ray_fan(ps: &PointSet, apex: usize) -> Result<RayFan> {
    let all: Vec<usize> = (0..ps.len()).collect();
    if ps.len() < 2 || !hull_vertices(ps, &all).contains(&apex) {
        return Err(Error::NotHullVertex(apex));
    }
    let lattice = ps.lattice();
    let mut others: Vec<usize> = all.into_iter().filter(|&v| v != apex).collect();
    others.sort_by(|&a, &b| {
        lattice
            .cmp_clockwise(apex, a, b)
            .then_with(|| lattice.cmp_distance(apex, a, b))
    });
    let mut rays: Vec<Vec<usize>> = Vec::new();
    for v in others {
        match rays.last_mut() {
            Some(ray) if ps.orient(apex, ray[0], v) == Orientation::Collinear => ray.push(v),
            _ => rays.push(vec![v]),
        }
    }
    let frontier = rays.iter().map(|r| r[0]).collect();
    let kinds: Vec<RayKind> = rays
        .iter()
        .map(|r| if r.len() >= 2 { RayKind::Big } else { RayKind::Small })
        .collect();
    let breaks = find_breaks(&kinds);
    Ok(RayFan {
        apex,
        rays,
        frontier,
        kinds,
        breaks,
    })
}

fn find_breaks(kinds: &[RayKind]) -> Vec<Break> {
    let big: Vec<usize> = (0..kinds.len()).filter(|&r| kinds[r] == RayKind::Big).collect();
    big.windows(2)
        .filter(|w| w[1] > w[0] + 1)
        .map(|w| {
            let small_rays = w[1] - w[0] - 1;
            Break {
                after: w[0],
                before: w[1],
                small_rays,
                parity: if small_rays % 2 == 1 { Parity::Odd } else { Parity::Even },
            }
        })
        .collect()
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum TripleKind {
    /// The middle frontier point bends towards the apex.
    Convex,
    /// The middle frontier point bends away from the apex.
    Concave,
    Straight,
}

/// Classifies each run of three consecutive frontier points.
///
/// With rays in clockwise order a bend towards the apex is a
/// counter-clockwise turn in a y-up frame.
pub fn frontier_triples(ps: &PointSet, fan: &RayFan) -> Vec<TripleKind> {
    fan.frontier
        .windows(3)
        .map(|w| match ps.orient(w[0], w[1], w[2]) {
            Orientation::CounterClockwise => TripleKind::Convex,
            Orientation::Clockwise => TripleKind::Concave,
            Orientation::Collinear => TripleKind::Straight,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(coords: &[(i64, i64)]) -> PointSet {
        PointSet::from_ints(coords).unwrap()
    }

    #[test]
    fn big_and_small_rays() {
        let ps = ints(&[(0, 0), (1, 0), (2, 0), (0, 1)]);
        let fan = ray_fan(&ps, 0).unwrap();
        // Clockwise from the tangent along the y-axis.
        assert_eq!(fan.rays, vec![vec![3], vec![1, 2]]);
        assert_eq!(fan.kinds, vec![RayKind::Small, RayKind::Big]);
        assert_eq!(fan.frontier, vec![3, 1]);
        assert!(fan.breaks.is_empty());
    }

    #[test]
    fn distinct_angles_give_small_rays() {
        let ps = ints(&[(0, 0), (3, 1), (2, 2), (1, 3), (5, 1)]);
        let fan = ray_fan(&ps, 0).unwrap();
        assert_eq!(fan.rays.len(), 4);
        assert!(fan.kinds.iter().all(|&k| k == RayKind::Small));
        let mut frontier = fan.frontier.clone();
        frontier.sort_unstable();
        assert_eq!(frontier, vec![1, 2, 3, 4]);
        assert_eq!(fan.frontier, vec![3, 2, 1, 4]);
    }

    #[test]
    fn break_parity_counts_small_runs() {
        // apex at the origin, rays at slopes 4, 3, 2, 1, 1/2, 1/3 in clockwise
        // order; big, small, small, big, small, big.
        let ps = ints(&[
            (0, 0),
            (1, 4),
            (2, 8),
            (1, 3),
            (1, 2),
            (1, 1),
            (2, 2),
            (2, 1),
            (3, 1),
            (6, 2),
        ]);
        let fan = ray_fan(&ps, 0).unwrap();
        use RayKind::*;
        assert_eq!(fan.kinds, vec![Big, Small, Small, Big, Small, Big]);
        assert_eq!(
            fan.breaks,
            vec![
                Break { after: 0, before: 3, small_rays: 2, parity: Parity::Even },
                Break { after: 3, before: 5, small_rays: 1, parity: Parity::Odd },
            ]
        );
        assert_eq!(fan.rays[0], vec![1, 2]);
    }

    #[test]
    fn interior_apex_is_rejected() {
        let ps = ints(&[(0, 0), (4, 0), (0, 4), (1, 1)]);
        assert_eq!(ray_fan(&ps, 3), Err(Error::NotHullVertex(3)));
    }

    #[test]
    fn triples_toward_and_away_from_apex() {
        // Frontier bulging towards the apex at (0, 4).
        let toward = ints(&[(0, 4), (-2, 0), (0, 2), (2, 0)]);
        let fan = ray_fan(&toward, 0).unwrap();
        assert_eq!(frontier_triples(&toward, &fan), vec![TripleKind::Convex]);
        let away = ints(&[(0, 4), (-2, 0), (0, -2), (2, 0)]);
        let fan = ray_fan(&away, 0).unwrap();
        assert_eq!(frontier_triples(&away, &fan), vec![TripleKind::Concave]);
        let flat = ints(&[(0, 4), (-2, 0), (0, 0), (2, 0), (4, 0)]);
        let fan = ray_fan(&flat, 0).unwrap();
        assert_eq!(frontier_triples(&flat, &fan), vec![TripleKind::Straight; 2]);
    }
}
