//! Seeded corpora and independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use pvg_colour::four_colour::reduced_is_reduced;
use pvg_colour::geometry::{build_pvg, convex_hull, ray_fan, Point, PointSet, Rational};
use pvg_colour::graph::{has_k4, VisibilityGraph};
use pvg_colour::sat_reduction::{CnfFormula, Literal};
use pvg_colour::three_colour::three_colourable;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `count` distinct sets of `sizes` points from the `side`×`side` lattice.
pub fn lattice_corpus(seed: u64, side: i64, sizes: std::ops::RangeInclusive<usize>, count: usize) -> Vec<PointSet> {
    let mut rng = rng(seed);
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(sizes.clone());
        let mut pts = BTreeSet::new();
        while pts.len() < n {
            pts.insert((rng.gen_range(0..side), rng.gen_range(0..side)));
        }
        if seen.insert(pts.clone()) {
            let coords: Vec<(i64, i64)> = pts.into_iter().collect();
            out.push(PointSet::from_ints(&coords).unwrap());
        }
    }
    out
}

/// Visibility straight from the definition, in plain rational arithmetic:
/// `m` blocks `a`–`b` iff `m = a + t (b - a)` for some `0 < t < 1`.
pub fn naive_blocks(a: &Point, m: &Point, b: &Point) -> bool {
    let (dx, dy) = (&b.x - &a.x, &b.y - &a.y);
    let (ex, ey) = (&m.x - &a.x, &m.y - &a.y);
    if &dx * &ey != &dy * &ex {
        return false;
    }
    let t = if !dx.is_zero() { ex / dx } else { ey / dy };
    t > Rational::zero() && t < Rational::one()
}

pub fn naive_pvg(ps: &PointSet) -> VisibilityGraph {
    let pts = ps.points();
    let mut g = VisibilityGraph::empty(pts.len());
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            if !(0..pts.len()).any(|k| k != i && k != j && naive_blocks(&pts[i], &pts[k], &pts[j])) {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// Rational affine map with nonzero determinant.
#[derive(Clone, Debug)]
pub struct Affine([Rational; 6]);

impl Affine {
    pub fn random(rng: &mut ChaCha8Rng) -> Affine {
        loop {
            let mut r = || Rational::new(BigInt::from(rng.gen_range(-9i64..=9)), BigInt::from(rng.gen_range(1i64..=7)));
            let m = [r(), r(), r(), r(), r(), r()];
            if &m[0] * &m[4] != &m[1] * &m[3] {
                return Affine(m);
            }
        }
    }

    pub fn apply(&self, ps: &PointSet) -> PointSet {
        let m = &self.0;
        let pts = ps
            .points()
            .iter()
            .map(|p| Point::new(&m[0] * &p.x + &m[1] * &p.y + &m[2], &m[3] * &p.x + &m[4] * &p.y + &m[5]))
            .collect();
        PointSet::new(pts).unwrap()
    }
}

/// Projective map whose denominator stays positive on `ps`. Such maps
/// preserve collinearity and the order of points along every segment
/// inside the convex hull, hence the visibility graph.
pub fn random_projective(rng: &mut ChaCha8Rng, ps: &PointSet) -> PointSet {
    let reach = ps
        .points()
        .iter()
        .flat_map(|p| [p.x.abs(), p.y.abs()])
        .max()
        .unwrap_or_else(Rational::one)
        .max(Rational::one());
    loop {
        let mut small = || int(rng.gen_range(-4i64..=4));
        let (a, b, c, d, e, f) = (small(), small(), small(), small(), small(), small());
        // |g x| + |h y| <= 1/2 on the input, so the denominator is >= 1/2.
        let g = Rational::from_integer(BigInt::from(rng.gen_range(-1i64..=1))) / (&reach * int(4));
        let h = Rational::from_integer(BigInt::from(rng.gen_range(-1i64..=1))) / (&reach * int(4));
        let det = &a * (&e - &f * &h) - &b * (&d - &f * &g) + &c * (&d * &h - &e * &g);
        if det.is_zero() {
            continue;
        }
        let pts: Vec<Point> = ps
            .points()
            .iter()
            .map(|p| {
                let w = &g * &p.x + &h * &p.y + Rational::one();
                Point::new((&a * &p.x + &b * &p.y + &c) / &w, (&d * &p.x + &e * &p.y + &f) / &w)
            })
            .collect();
        if let Ok(image) = PointSet::new(pts) {
            return image;
        }
    }
}

/// True iff `ps` is reduced and its visibility graph contains a K4.
pub fn reduced_and_not_three_colourable(ps: &PointSet) -> bool {
    reduced_is_reduced(ps) && three_colourable(ps).unwrap().is_none()
}

/// Triangles seen by hull vertex `apex`, or `None` without a K4 anywhere.
fn triangles_seen(g: &VisibilityGraph, apex: usize) -> Option<usize> {
    has_k4(g)?;
    let nb: Vec<usize> = g.neighbours(apex).collect();
    let mut count = 0;
    for (i, &a) in nb.iter().enumerate() {
        for (j, &b) in nb.iter().enumerate().skip(i + 1) {
            if !g.has_edge(a, b) {
                continue;
            }
            count += nb[j + 1..].iter().filter(|&&c| g.has_edge(a, c) && g.has_edge(b, c)).count();
        }
    }
    Some(count)
}

/// Searches for reduced sets without a 3-colouring inside the triangle
/// (0,0), (d,0), (0,d). Interior lattice points are switched on and off in
/// whole orbits of the affine rotation permuting the triangle's corners, so
/// one corner's neighbourhood stands for all three; annealing drives the
/// number of triangles that corner sees to zero while keeping a K4.
pub fn symmetric_reduced_search(seed: u64, trials: usize, steps: usize) -> Vec<PointSet> {
    let mut rng = rng(seed);
    let mut found = Vec::new();
    let mut seen = BTreeSet::new();
    for _ in 0..trials {
        let d: i64 = rng.gen_range(12..48);
        let mut orbits: Vec<Vec<(i64, i64)>> = Vec::new();
        let mut covered = BTreeSet::new();
        for b in 1..d {
            for c in 1..d - b {
                let a = d - b - c;
                if covered.contains(&(b, c)) {
                    continue;
                }
                let orbit: BTreeSet<(i64, i64)> = [(b, c), (a, b), (c, a)].into_iter().collect();
                covered.extend(orbit.iter().copied());
                orbits.push(orbit.into_iter().collect());
            }
        }
        let build = |on: &[bool]| {
            let mut coords = vec![(0, 0), (d, 0), (0, d)];
            for (o, &flag) in orbits.iter().zip(on) {
                if flag {
                    coords.extend(o.iter().copied());
                }
            }
            PointSet::from_ints(&coords).unwrap()
        };
        let score = |on: &[bool]| triangles_seen(&build_pvg(&build(on)), 0).unwrap_or(usize::MAX / 2);
        let mut on: Vec<bool> = (0..orbits.len()).map(|_| rng.gen_bool(0.15)).collect();
        let mut current = score(&on);
        let mut temperature = 2.0f64;
        for _ in 0..steps {
            let mut next = on.clone();
            let i = rng.gen_range(0..next.len());
            next[i] = !next[i];
            if rng.gen_bool(0.5) {
                let j = rng.gen_range(0..next.len());
                next[j] = !next[j];
            }
            let s = score(&next);
            let accept = s <= current || rng.gen_bool(((current as f64 - s as f64) / temperature).exp().min(1.0));
            if accept {
                current = s;
                on = next;
            }
            temperature = (temperature * 0.999).max(0.05);
            if current == 0 {
                let ps = build(&on);
                if reduced_and_not_three_colourable(&ps) && seen.insert(ps.points().to_vec()) {
                    found.push(ps);
                }
                // Keep exploring from a nearby state.
                let j = rng.gen_range(0..on.len());
                on[j] = !on[j];
                current = score(&on);
            }
        }
    }
    found
}

/// Combinatorial fingerprint, invariant under reflection: sorted degree
/// sequence and ray-size pattern around each hull vertex.
pub fn fingerprint(ps: &PointSet) -> (Vec<usize>, Vec<Vec<usize>>) {
    let g = build_pvg(ps);
    let mut degrees: Vec<usize> = (0..ps.len()).map(|v| g.degree(v)).collect();
    degrees.sort_unstable();
    let fans: Vec<Vec<usize>> = convex_hull(ps)
        .vertices
        .iter()
        .map(|&h| ray_fan(ps, h).unwrap().rays.iter().map(Vec::len).collect())
        .collect();
    let mut forward = fans.clone();
    forward.sort();
    let mut mirrored: Vec<Vec<usize>> = fans.into_iter().map(|f| f.into_iter().rev().collect()).collect();
    mirrored.sort();
    (degrees, forward.min(mirrored))
}

/// Random 3-CNF with distinct literals per clause.
pub fn random_formula(rng: &mut ChaCha8Rng, n: usize, m: usize) -> CnfFormula {
    let literals: Vec<Literal> = (1..=n as Literal).flat_map(|v| [v, -v]).collect();
    let clauses = (0..m)
        .map(|_| {
            let pick: Vec<Literal> = literals.choose_multiple(rng, 3).copied().collect();
            [pick[0], pick[1], pick[2]]
        })
        .collect();
    CnfFormula::new(n, clauses).unwrap()
}

/// All eight sign patterns over the given three variables.
pub fn all_sign_patterns(n: usize, vars: [Literal; 3]) -> CnfFormula {
    let clauses = (0..8)
        .map(|s| {
            let sign = |bit: i32, v: Literal| if s >> bit & 1 == 1 { -v } else { v };
            [sign(0, vars[0]), sign(1, vars[1]), sign(2, vars[2])]
        })
        .collect();
    CnfFormula::new(n, clauses).unwrap()
}

/// Reduced sets without a 3-colouring, found by `symmetric_reduced_search`.
pub const REDUCED_SEEDS: [&[(i64, i64)]; 4] = [
    &[(0, 0), (21, 0), (0, 21), (1, 4), (4, 16), (16, 1), (3, 12), (6, 3), (12, 6)],
    &[(0, 0), (26, 0), (0, 26), (2, 6), (6, 18), (18, 2), (4, 12), (10, 4), (12, 10), (5, 15), (6, 5), (15, 6)],
    &[(0, 0), (42, 0), (0, 42), (6, 12), (12, 24), (24, 6), (9, 18), (15, 9), (18, 15), (10, 20), (12, 10), (20, 12)],
    &[(0, 0), (43, 0), (0, 43), (1, 6), (6, 36), (36, 1), (4, 24), (15, 4), (24, 15), (5, 30), (8, 5), (30, 8)],
];

/// `count` distinct reduced sets without a 3-colouring: the seeds, their
/// mirror images and projective images of both.
pub fn reduced_corpus(seed: u64, count: usize) -> Vec<PointSet> {
    let mut rng = rng(seed);
    let mut bases = Vec::new();
    for coords in REDUCED_SEEDS {
        bases.push(PointSet::from_ints(coords).unwrap());
        let mirrored: Vec<(i64, i64)> = coords.iter().map(|&(x, y)| (y, x)).collect();
        bases.push(PointSet::from_ints(&mirrored).unwrap());
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for b in &bases {
        if seen.insert(b.points().to_vec()) {
            out.push(b.clone());
        }
    }
    while out.len() < count {
        let base = &bases[out.len() % bases.len()];
        let image = random_projective(&mut rng, base);
        if seen.insert(image.points().to_vec()) {
            out.push(image);
        }
    }
    out
}
