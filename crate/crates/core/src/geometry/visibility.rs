use std::collections::HashMap;

use super::lattice::{direction, with_coords, Scalar};
use super::{strictly_between, PointSet};
use crate::graph::VisibilityGraph;

/// True iff no third point of `ps` lies in the open segment between
/// points `i` and `j`.
pub fn visible(ps: &PointSet, i: usize, j: usize) -> bool {
    let (a, b) = (ps.point(i), ps.point(j));
    !(0..ps.len()).any(|k| k != i && k != j && strictly_between(a, ps.point(k), b))
}

/// Point visibility graph of `ps`.
///
/// Around each point the others are grouped by primitive lattice direction;
/// only the nearest point in each direction is unobstructed.
pub fn build_pvg(ps: &PointSet) -> VisibilityGraph {
    let mut g = VisibilityGraph::empty(ps.len());
    with_coords!(ps.lattice(), coords => nearest_per_direction(coords, &mut g));
    g
}

fn nearest_per_direction<T: Scalar>(coords: &[[T; 2]], g: &mut VisibilityGraph) {
    let n = coords.len();
    let mut nearest: HashMap<[T; 2], (T, usize)> = HashMap::new();
    for i in 0..n {
        nearest.clear();
        for j in 0..n {
            if j == i {
                continue;
            }
            let (dir, mult) = direction(&coords[i], &coords[j]);
            nearest
                .entry(dir)
                .and_modify(|slot| {
                    if mult < slot.0 {
                        *slot = (mult.clone(), j);
                    }
                })
                .or_insert((mult, j));
        }
        for (_, j) in nearest.values() {
            if *j > i {
                g.add_edge(i, *j);
            }
        }
    }
}
