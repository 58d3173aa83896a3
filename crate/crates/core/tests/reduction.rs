mod common;

use proptest::prelude::*;
use pvg_colour::geometry::build_pvg;
use pvg_colour::graph::{is_valid_colouring, k_colourable, Budget, VisibilityGraph};
use pvg_colour::layout::Line;
use pvg_colour::sat_reduction::{
    build_xi, build_zeta, five_colouring, parse_dimacs, verify_reduction, xi_colouring, CnfFormula, GadgetSlot,
    XiGraph, ZetaEmbedding, ZetaRole, BLUE, GREEN, RED,
};

use common::*;

/// Whether the clause gadget admits a 3-colouring with its inputs pinned.
fn gadget_colourable(xi: &XiGraph, inputs: [usize; 3], pinned: [usize; 3]) -> bool {
    let slots: Vec<usize> = GadgetSlot::ALL.iter().map(|&s| xi.gadget(0, s)).collect();
    let mut colour = vec![None; xi.vertex_count()];
    colour[XiGraph::RED] = Some(RED);
    colour[XiGraph::BLUE] = Some(BLUE);
    for (v, c) in inputs.into_iter().zip(pinned) {
        colour[v] = Some(c);
    }
    (0..3usize.pow(6)).any(|code| {
        let mut trial = colour.clone();
        for (k, &v) in slots.iter().enumerate() {
            trial[v] = Some(code / 3usize.pow(k as u32) % 3);
        }
        xi.graph
            .edges()
            .all(|(a, b)| trial[a].is_none() || trial[b].is_none() || trial[a] != trial[b])
    })
}

#[test]
fn gadget_output_is_green_iff_an_input_is() {
    let f = CnfFormula::new(3, vec![[1, 2, 3]]).unwrap();
    let xi = build_xi(&f);
    let inputs = [xi.literal(1), xi.literal(2), xi.literal(3)];
    let p9 = xi.gadget(0, GadgetSlot::P9);
    assert!(xi.graph.has_edge(p9, XiGraph::RED) && xi.graph.has_edge(p9, XiGraph::BLUE));
    for mask in 0..8 {
        let pinned = [0, 1, 2].map(|i| if mask >> i & 1 == 1 { GREEN } else { RED });
        assert_eq!(gadget_colourable(&xi, inputs, pinned), mask != 0, "inputs {pinned:?}");
    }
}

fn cross_edges(z: &ZetaEmbedding, g: &VisibilityGraph) -> usize {
    let l1: Vec<usize> = z.indices_on(Line::L1).collect();
    let l3: Vec<usize> = z.indices_on(Line::L3).collect();
    l1.iter().map(|&u| l3.iter().filter(|&&v| g.has_edge(u, v)).count()).sum()
}

fn formula() -> impl Strategy<Value = CnfFormula> {
    (2usize..=4, 1usize..=8, any::<u64>()).prop_map(|(n, m, seed)| random_formula(&mut rng(seed), n, m))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn embedding_layout_invariants(f in formula()) {
        let (n, m) = (f.num_vars(), f.clauses().len());
        let z = build_zeta(&f).unwrap();
        let g = build_pvg(&z.points);
        let l1: Vec<usize> = z.indices_on(Line::L1).collect();
        let l2: Vec<usize> = z.indices_on(Line::L2).collect();
        let l3: Vec<usize> = z.indices_on(Line::L3).collect();
        prop_assert_eq!(l1.len(), 3 * n + 4 * m - 1);
        prop_assert_eq!(l3.len(), 6 * m + 2);
        prop_assert_eq!(l2.len(), l1.len() * l3.len() - cross_edges(&z, &g));

        // Each line is a path in rank order.
        for line in [&l1, &l2, &l3] {
            let mut by_rank = line.to_vec();
            by_rank.sort_by_key(|&v| z.ranks[v]);
            for (a, &u) in by_rank.iter().enumerate() {
                for (b, &v) in by_rank.iter().enumerate().skip(a + 1) {
                    prop_assert_eq!(g.has_edge(u, v), b == a + 1);
                }
            }
        }
        // l2 sees everything off its own line.
        for &b in &l2 {
            prop_assert!(l1.iter().chain(&l3).all(|&u| g.has_edge(b, u)));
        }
        // Every blocker lies on exactly one cross segment, the one it is named for.
        for &b in &l2 {
            let ZetaRole::Blocker { l1: r1, l3: r3 } = z.roles[b] else { panic!("l2 point without blocker role") };
            let mut hits = Vec::new();
            for &u in &l1 {
                for &v in &l3 {
                    if z.points.between(u, b, v) {
                        hits.push((z.ranks[u], z.ranks[v]));
                    }
                }
            }
            prop_assert_eq!(hits, vec![(r1, r3)]);
        }
        // The lattice kernel against plain rational arithmetic, on a sample.
        for &b in l2.iter().step_by(37) {
            for &u in &l1 {
                for &v in &l3 {
                    let (pu, pb, pv) = (z.points.point(u), z.points.point(b), z.points.point(v));
                    prop_assert_eq!(z.points.between(u, b, v), naive_blocks(pu, pb, pv));
                }
            }
        }
        // Edges between ξ vertices on l1 ∪ l3 are exactly the edges of ξ.
        let xi_points: Vec<usize> = (0..z.points.len()).filter(|&v| z.xi_vertex[v].is_some()).collect();
        for (a, &u) in xi_points.iter().enumerate() {
            for &v in &xi_points[a + 1..] {
                if z.lines[u] != z.lines[v] {
                    let (xu, xv) = (z.xi_vertex[u].unwrap(), z.xi_vertex[v].unwrap());
                    prop_assert_eq!(g.has_edge(u, v), z.xi.graph.has_edge(xu, xv));
                }
            }
        }
    }

    #[test]
    fn satisfiable_iff_outer_three_colourable_iff_five_colourable(f in formula()) {
        let z = build_zeta(&f).unwrap();
        let g = build_pvg(&z.points);
        let outer: Vec<usize> = (0..z.points.len()).filter(|&v| z.lines[v] != Line::L2).collect();
        let sat = f.brute_force_sat();
        let outer_oracle = k_colourable(&g.induced(&outer), 3, Budget::UNLIMITED).unwrap();
        prop_assert_eq!(outer_oracle.is_some(), sat.is_some());
        let report = verify_reduction(&f, &z, Budget::UNLIMITED).unwrap();
        prop_assert!(report.equivalent && report.matches_xi);
        prop_assert_eq!(report.five_colourable, sat.is_some());
        if let Some(assignment) = sat {
            let c = five_colouring(&z, &f, &assignment, &g).unwrap();
            prop_assert!(is_valid_colouring(&g, &c).unwrap());
            prop_assert!(c.colour_count() <= 5);
            let xc = xi_colouring(&z.xi, &f, &assignment).unwrap();
            prop_assert!(is_valid_colouring(&z.xi.graph, &xc).unwrap());
        }
    }

    #[test]
    fn dimacs_round_trips(f in formula()) {
        let back = parse_dimacs(&f.to_dimacs()).unwrap();
        prop_assert_eq!(back.num_vars(), f.num_vars());
        prop_assert_eq!(back.clauses(), f.clauses());
    }
}

#[test]
fn unsatisfiable_formula_has_no_outer_three_colouring() {
    let f = all_sign_patterns(3, [1, 2, 3]);
    assert!(f.brute_force_sat().is_none());
    let z = build_zeta(&f).unwrap();
    let report = verify_reduction(&f, &z, Budget::UNLIMITED).unwrap();
    assert!(!report.outer_three_colourable);
    assert!(!report.five_colourable);
    assert!(report.five_colouring.is_none());
    assert!(report.equivalent);
}
