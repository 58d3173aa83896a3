//! Exact planar geometry: points with rational coordinates, the predicates
//! that decide visibility, convex hulls and the ray decomposition around a
//! hull vertex.

mod fan;
pub(crate) mod hull;
mod io;
pub(crate) mod lattice;
mod visibility;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use lattice::Lattice;

pub use fan::{frontier_triples, ray_fan, Break, Parity, RayFan, RayKind, TripleKind};
pub use hull::{convex_hull, ConvexHull};
pub use io::{format_point_set, parse_point_set};
pub use visibility::{build_pvg, visible};

pub type Rational = BigRational;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point {
            x: Rational::from_integer(BigInt::from(x)),
            y: Rational::from_integer(BigInt::from(y)),
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Clockwise,
    CounterClockwise,
    Collinear,
}

/// Sign of `(b - a) x (c - a)`.
pub fn orientation(a: &Point, b: &Point, c: &Point) -> Orientation {
    let cross = (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x);
    if cross.is_zero() {
        Orientation::Collinear
    } else if cross.is_positive() {
        Orientation::CounterClockwise
    } else {
        Orientation::Clockwise
    }
}

/// True iff `m` lies in the open segment `(a, b)`.
pub fn strictly_between(a: &Point, m: &Point, b: &Point) -> bool {
    if orientation(a, m, b) != Orientation::Collinear || m == a || m == b {
        return false;
    }
    let along = (&m.x - &a.x) * (&b.x - &a.x) + (&m.y - &a.y) * (&b.y - &a.y);
    let back = (&m.x - &b.x) * (&a.x - &b.x) + (&m.y - &b.y) * (&a.y - &b.y);
    along.is_positive() && back.is_positive()
}

/// An ordered set of pairwise distinct points. Vertex `i` of every graph
/// derived from the set is `points()[i]`.
#[derive(Clone, Debug)]
pub struct PointSet {
    points: Vec<Point>,
    lattice: Lattice,
}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        let mut order: Vec<usize> = (0..points.len()).collect();
        order.sort_by(|&a, &b| points[a].cmp(&points[b]).then(a.cmp(&b)));
        for w in order.windows(2) {
            if points[w[0]] == points[w[1]] {
                return Err(Error::DuplicatePoints {
                    first: w[0].min(w[1]),
                    second: w[0].max(w[1]),
                });
            }
        }
        let lattice = Lattice::scale(&points);
        Ok(PointSet { points, lattice })
    }

    pub fn from_ints(coords: &[(i64, i64)]) -> Result<Self> {
        Self::new(coords.iter().map(|&(x, y)| Point::from_ints(x, y)).collect())
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    /// The points at `indices`, in that order.
    pub fn subset(&self, indices: &[usize]) -> PointSet {
        let points: Vec<Point> = indices.iter().map(|&i| self.points[i].clone()).collect();
        let lattice = Lattice::scale(&points);
        PointSet { points, lattice }
    }

    /// A copy with `extra` appended as the last vertex.
    pub fn with_point(&self, extra: Point) -> Result<PointSet> {
        let mut points = self.points.clone();
        points.push(extra);
        PointSet::new(points)
    }

    pub fn orient(&self, a: usize, b: usize, c: usize) -> Orientation {
        self.lattice.orient(a, b, c)
    }

    pub fn between(&self, a: usize, m: usize, b: usize) -> bool {
        self.lattice.strictly_between(a, m, b)
    }

    /// True iff the vertices in `indices` lie on one line.
    pub fn all_collinear(&self, indices: &[usize]) -> bool {
        let Some(&a) = indices.first() else {
            return true;
        };
        let Some(&b) = indices.iter().find(|&&i| i != a) else {
            return true;
        };
        indices
            .iter()
            .all(|&c| self.orient(a, b, c) == Orientation::Collinear)
    }

    pub(crate) fn lattice(&self) -> &Lattice {
        &self.lattice
    }
}

impl PartialEq for PointSet {
    fn eq(&self, other: &Self) -> bool {
        self.points == other.points
    }
}

impl Eq for PointSet {}
