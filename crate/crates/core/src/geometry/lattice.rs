//! Integer kernel behind [`PointSet`](super::PointSet).
//!
//! Every point set is scaled by the least common multiple of its coordinate
//! denominators, which maps it onto the integer lattice without changing any
//! orientation, betweenness or distance ordering. Sets whose scaled
//! coordinates stay below 2^62 in magnitude run on `i128` (cross products of
//! differences then fit with room to spare); anything larger falls back to
//! `BigInt`.

use std::cmp::Ordering;
use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use super::{Orientation, Point};

pub(crate) trait Scalar: Clone + Ord + Hash + Debug + Signed + Integer {}

impl<T: Clone + Ord + Hash + Debug + Signed + Integer> Scalar for T {}

const SMALL_LIMIT: i128 = 1 << 62;

#[derive(Clone, Debug)]
pub(crate) enum Lattice {
    Small(Vec<[i128; 2]>),
    Big(Vec<[BigInt; 2]>),
}

/// Runs `$body` with `$c` bound to the coordinate slice of either variant.
macro_rules! with_coords {
    ($lattice:expr, $c:ident => $body:expr) => {
        match $lattice {
            $crate::geometry::lattice::Lattice::Small($c) => $body,
            $crate::geometry::lattice::Lattice::Big($c) => $body,
        }
    };
}
pub(crate) use with_coords;

impl Lattice {
    pub(crate) fn scale(points: &[Point]) -> Lattice {
        let mut common = BigInt::from(1);
        for p in points {
            common = common.lcm(p.x.denom());
            common = common.lcm(p.y.denom());
        }
        let scaled: Vec<[BigInt; 2]> = points
            .iter()
            .map(|p| {
                [
                    p.x.numer() * (&common / p.x.denom()),
                    p.y.numer() * (&common / p.y.denom()),
                ]
            })
            .collect();
        let small: Option<Vec<[i128; 2]>> = scaled
            .iter()
            .map(|[x, y]| {
                let x = x.to_i128().filter(|v| v.abs() < SMALL_LIMIT)?;
                let y = y.to_i128().filter(|v| v.abs() < SMALL_LIMIT)?;
                Some([x, y])
            })
            .collect();
        match small {
            Some(coords) => Lattice::Small(coords),
            None => Lattice::Big(scaled),
        }
    }

    pub(crate) fn orient(&self, a: usize, b: usize, c: usize) -> Orientation {
        with_coords!(self, v => orient(&v[a], &v[b], &v[c]))
    }

    pub(crate) fn strictly_between(&self, a: usize, m: usize, b: usize) -> bool {
        with_coords!(self, v => strictly_between(&v[a], &v[m], &v[b]))
    }

    /// Compares |a - apex|^2 with |b - apex|^2.
    pub(crate) fn cmp_distance(&self, apex: usize, a: usize, b: usize) -> Ordering {
        with_coords!(self, v => {
            norm2(&v[apex], &v[a]).cmp(&norm2(&v[apex], &v[b]))
        })
    }

    /// Orders `a` before `b` when `b` is reached by turning clockwise from
    /// `a` around `apex`. Only a total order when every point lies in an
    /// open half-plane seen from `apex`.
    pub(crate) fn cmp_clockwise(&self, apex: usize, a: usize, b: usize) -> Ordering {
        match self.orient(apex, a, b) {
            Orientation::Clockwise => Ordering::Less,
            Orientation::CounterClockwise => Ordering::Greater,
            Orientation::Collinear => Ordering::Equal,
        }
    }

    pub(crate) fn cmp_lexicographic(&self, a: usize, b: usize) -> Ordering {
        with_coords!(self, v => v[a].cmp(&v[b]))
    }
}

pub(crate) fn orient<T: Scalar>(a: &[T; 2], b: &[T; 2], c: &[T; 2]) -> Orientation {
    let lhs = (b[0].clone() - a[0].clone()) * (c[1].clone() - a[1].clone());
    let rhs = (b[1].clone() - a[1].clone()) * (c[0].clone() - a[0].clone());
    match lhs.cmp(&rhs) {
        Ordering::Greater => Orientation::CounterClockwise,
        Ordering::Less => Orientation::Clockwise,
        Ordering::Equal => Orientation::Collinear,
    }
}

fn dot<T: Scalar>(origin: &[T; 2], u: &[T; 2], v: &[T; 2]) -> T {
    (u[0].clone() - origin[0].clone()) * (v[0].clone() - origin[0].clone())
        + (u[1].clone() - origin[1].clone()) * (v[1].clone() - origin[1].clone())
}

fn norm2<T: Scalar>(origin: &[T; 2], u: &[T; 2]) -> T {
    dot(origin, u, u)
}

pub(crate) fn strictly_between<T: Scalar>(a: &[T; 2], m: &[T; 2], b: &[T; 2]) -> bool {
    orient(a, m, b) == Orientation::Collinear
        && dot(a, m, b) > T::zero()
        && dot(b, m, a) > T::zero()
        && m != a
        && m != b
}

/// Primitive lattice direction from `from` to `to` and the multiple of it
/// that reaches `to`. Points sharing a direction lie on one open ray and the
/// multiple orders them by distance.
pub(crate) fn direction<T: Scalar>(from: &[T; 2], to: &[T; 2]) -> ([T; 2], T) {
    let dx = to[0].clone() - from[0].clone();
    let dy = to[1].clone() - from[1].clone();
    let g = dx.gcd(&dy);
    debug_assert!(g > T::zero());
    ([dx / g.clone(), dy / g.clone()], g)
}
