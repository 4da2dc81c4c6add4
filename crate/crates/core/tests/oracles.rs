// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Invariants checked against independent brute-force oracles.

use std::collections::BTreeMap;

use jarr::arrangement::{build_jn, Subarrangement};
use jarr::census::{gamma_bruteforce_table, CensusEngine, CountTable};
use jarr::charpoly::{
    bounded_chambers, chambers, charpoly_bruteforce, charpoly_census, charpoly_graph, finite_field_count, IntPolynomial,
    SweepOptions,
};
use jarr::graph::{enumerate_colored_graphs, lex_pairs, Color, ColoredGraph};
use jarr::limits::Limits;
use jarr::rank::{build_cincidence, build_cincidence_ordered, rank_exact, rank_formula, spanning_tree_rank_check};
use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

fn colored_graph(max_n: usize) -> impl Strategy<Value = ColoredGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = lex_pairs(n);
        (
            prop::collection::vec(-1i64..=1, n),
            prop::collection::vec(any::<bool>(), pairs.len()),
        )
            .prop_map(move |(colors, keep)| {
                let edges = pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| *e);
                ColoredGraph::from_values(&colors, edges).unwrap()
            })
    })
}

fn permuted(g: ColoredGraph) -> impl Strategy<Value = (ColoredGraph, Vec<usize>)> {
    let n = g.n();
    (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
}

/// Bipartite by trying all 2^n side assignments.
fn bipartite_by_assignment(g: &ColoredGraph, comp: &[usize]) -> bool {
    (0u32..1 << comp.len()).any(|mask| {
        let side = |v: usize| {
            let pos = comp.iter().position(|&c| c == v).unwrap();
            mask >> pos & 1
        };
        g.edges().iter().filter(|(a, _)| comp.contains(a)).all(|&(a, b)| side(a) != side(b))
    })
}

fn all_simple_graphs(n: usize) -> impl Iterator<Item = ColoredGraph> {
    let pairs = lex_pairs(n);
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| *e);
        ColoredGraph::colorless(n, edges).unwrap()
    })
}

#[test]
fn decomposition_partitions_vertices_exhaustively() {
    for n in 1..=4 {
        for g in enumerate_colored_graphs(n, &Limits::default()).unwrap() {
            let d = g.decompose_kinds();
            let mut all: Vec<usize> = d.first.iter().flatten().chain(&d.second).chain(d.third.iter().flatten()).copied().collect();
            all.sort_unstable();
            assert_eq!(all, (0..n).collect::<Vec<_>>());
            for comp in &d.first {
                assert!(comp.iter().all(|&v| !g.color(v).is_colored()));
            }
            for &v in &d.second {
                assert!(g.color(v).is_colored());
                assert!(g.edges().iter().all(|&(a, b)| a != v && b != v));
            }
            for comp in &d.third {
                assert!(comp.iter().any(|&v| g.color(v).is_colored()));
                assert!(g.edges().iter().any(|&(a, _)| comp.contains(&a)));
            }
        }
    }
}

#[test]
fn bipartite_matches_assignment_search() {
    for n in 1..=5 {
        for g in all_simple_graphs(n) {
            for comp in g.components() {
                let sides = g.bipartition(&comp).unwrap();
                assert_eq!(sides.is_some(), bipartite_by_assignment(&g, &comp), "{g}");
                if let Some(b) = sides {
                    assert!(g.edges().iter().filter(|(a, _)| comp.contains(a)).all(|&(a, c)| b.left.contains(&a) != b.left.contains(&c)));
                }
            }
        }
    }
}

#[test]
fn rank_dichotomy_for_connected_colorless_graphs() {
    for n in 1..=5 {
        for g in all_simple_graphs(n) {
            let comps = g.components();
            if comps.len() != 1 {
                continue;
            }
            let expected = if g.is_bipartite(&comps[0]).unwrap() { n - 1 } else { n };
            assert_eq!(rank_exact(&build_cincidence(&g)), expected, "{g}");
            if expected == n - 1 {
                assert!(spanning_tree_rank_check(&g).unwrap());
            }
        }
    }
}

#[test]
fn cutting_an_even_cycle_edge_keeps_rank() {
    // hexagon with a chord making two 4-cycles; every cycle is even
    let g = ColoredGraph::colorless(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (0, 3)]).unwrap();
    let r = rank_exact(&build_cincidence(&g));
    for skip in 0..g.edges().len() {
        let rest = g.edges().iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, e)| *e);
        let cut = ColoredGraph::colorless(6, rest).unwrap();
        if cut.components().len() == 1 {
            assert_eq!(rank_exact(&build_cincidence(&cut)), r);
        }
    }
}

proptest! {
    #[test]
    fn random_decomposition_partitions(g in colored_graph(8)) {
        let d = g.decompose_kinds();
        let total = d.first.iter().map(Vec::len).sum::<usize>() + d.second.len() + d.third.iter().map(Vec::len).sum::<usize>();
        prop_assert_eq!(total, g.n());
    }

    #[test]
    fn centrality_ignores_global_color_flip(g in colored_graph(7)) {
        prop_assert_eq!(g.is_central(), g.with_flipped_colors().is_central());
    }

    #[test]
    fn centrality_and_rank_are_relabeling_invariant((g, perm) in colored_graph(7).prop_flat_map(permuted)) {
        let h = g.relabeled(&perm).unwrap();
        prop_assert_eq!(g.is_central(), h.is_central());
        prop_assert_eq!(rank_formula(&g), rank_formula(&h));
        prop_assert_eq!(rank_exact(&build_cincidence(&g)), rank_exact(&build_cincidence(&h)));
        prop_assert_eq!(g.cardinality(), h.cardinality());
    }

    #[test]
    fn central_iff_components_central(g in colored_graph(8)) {
        let parts: Vec<ColoredGraph> = g.components().iter().map(|c| g.induced(c).unwrap()).collect();
        prop_assert_eq!(g.is_central(), parts.iter().all(ColoredGraph::is_central));
        let additive: usize = parts.iter().map(|p| rank_exact(&build_cincidence(p))).sum();
        prop_assert_eq!(rank_exact(&build_cincidence(&g)), additive);
    }

    #[test]
    fn rank_independent_of_edge_order(
        (g, order) in colored_graph(7).prop_flat_map(|g| {
            let edges = g.edges().to_vec();
            (Just(g), Just(edges).prop_shuffle())
        })
    ) {
        let m = build_cincidence_ordered(&g, &order).unwrap();
        prop_assert_eq!(rank_exact(&m), rank_exact(&build_cincidence(&g)));
    }

    #[test]
    fn linear_rank_bounded_and_monotone(mask in 0u64..1 << 14, extra in 0usize..14) {
        let walls = build_jn(4);
        let s = Subarrangement::from_mask(4, &walls, mask).unwrap();
        let bigger = Subarrangement::from_mask(4, &walls, mask | 1 << extra).unwrap();
        prop_assert!(s.rank_linear() <= s.len().min(4));
        prop_assert!(s.rank_linear() <= bigger.rank_linear());
    }

    #[test]
    fn count_table_json_round_trip(n in 1usize..=6) {
        let t = CensusEngine::up_to(n).gamma_table(n);
        let back: CountTable = serde_json::from_str(&serde_json::to_string(&t).unwrap()).unwrap();
        prop_assert_eq!(back, t);
    }

    #[test]
    fn polynomial_text_and_json_round_trip(coeffs in prop::collection::vec(-1000i64..1000, 1..8)) {
        let p = IntPolynomial::from_i64(&coeffs);
        prop_assert_eq!(p.to_string().parse::<IntPolynomial>().unwrap(), p.clone());
        let back: IntPolynomial = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
        prop_assert_eq!(back, p);
    }
}

// Frozen from the subset brute force.
fn frozen(n: usize) -> IntPolynomial {
    match n {
        1 => IntPolynomial::from_i64(&[-2, 1]),
        2 => IntPolynomial::from_i64(&[6, -5, 1]),
        3 => IntPolynomial::from_i64(&[-27, 27, -9, 1]),
        4 => IntPolynomial::from_i64(&[165, -181, 75, -14, 1]),
        5 => IntPolynomial::from_i64(&[-1263, 1480, -695, 165, -20, 1]),
        _ => unreachable!(),
    }
}

#[test]
fn charpoly_regression_values() {
    let opts = SweepOptions::default();
    for n in 1..=4 {
        let p = charpoly_bruteforce(n, &opts).unwrap();
        assert_eq!(p, frozen(n), "n = {n}");
        assert_eq!(charpoly_graph(n, &opts).unwrap(), p);
        assert_eq!(charpoly_census(n, &Limits::default()).unwrap(), p);
        assert_eq!(*p.leading(), BigInt::from(1));
        assert_eq!(p.degree(), n);
        assert_eq!(p.eval_i64(0), p.coeff(0));
        for (power, c) in p.coeffs().iter().enumerate() {
            let sign_ok = if (n - power) % 2 == 0 { *c >= BigInt::from(0) } else { *c <= BigInt::from(0) };
            assert!(sign_ok, "n = {n}, t^{power} coefficient {c}");
        }
    }
    assert_eq!(charpoly_census(5, &Limits::default()).unwrap(), frozen(5));
}

#[test]
fn chamber_counts_agree_across_routes() {
    let opts = SweepOptions::default();
    let expected: BTreeMap<usize, (u64, u64)> = [(1, (3, 1)), (2, (12, 2)), (3, (64, 8)), (4, (436, 46))].into();
    for (&n, &(ch, bd)) in &expected {
        for p in [
            charpoly_bruteforce(n, &opts).unwrap(),
            charpoly_graph(n, &opts).unwrap(),
            charpoly_census(n, &Limits::default()).unwrap(),
        ] {
            assert_eq!(chambers(&p, n).unwrap(), BigInt::from(ch));
            assert_eq!(bounded_chambers(&p, n).unwrap(), BigInt::from(bd));
        }
    }
}

#[test]
fn point_counts_match_polynomial() {
    let limits = Limits::default();
    for n in 1..=3 {
        let p = frozen(n);
        for q in [5u64, 7, 11, 13] {
            assert_eq!(p.eval_i64(q as i64), BigInt::from(finite_field_count(n, q, &limits).unwrap()), "n={n} q={q}");
        }
    }
}

#[test]
fn bipartite_counts_vanish_outside_feasible_range() {
    let engine = CensusEngine::up_to(8);
    for k in 1usize..=8 {
        let max = (k / 2) * k.div_ceil(2);
        for s in 0..=k * (k - 1) / 2 {
            if s + 1 < k || s > max {
                assert_eq!(engine.nu_bipartite_connected(k, s), BigUint::from(0u32), "k={k} s={s}");
            }
        }
    }
}

#[test]
fn gamma_total_counts_central_graphs() {
    let limits = Limits::default();
    for n in 1..=4 {
        let central = enumerate_colored_graphs(n, &limits).unwrap().filter(ColoredGraph::is_central).count();
        let table = gamma_bruteforce_table(n, &limits, 1).unwrap();
        assert_eq!(table.total(), BigUint::from(central));
        assert_eq!(CensusEngine::up_to(n).gamma_table(n).total(), BigUint::from(central));
    }
}

#[test]
fn colorless_graphs_are_central() {
    for g in all_simple_graphs(5) {
        assert!(g.is_central());
        let colored = ColoredGraph::new(5, vec![Color::Colorless; 5], g.edges().iter().copied()).unwrap();
        assert_eq!(colored, g);
    }
}
