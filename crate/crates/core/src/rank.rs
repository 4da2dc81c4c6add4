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

//! Rank of 3-colored graphs: the c-incidence matrix, its exact rank, and the
//! closed form `n - (bipartite colorless components)`.

use crate::graph::ColoredGraph;
use crate::linalg::integer_rank;
use crate::{Error, Result};

/// `(|E| + n) x n` matrix: one row `e_a + e_b` per edge in lexicographic
/// order, then one row `color(i) * e_i` per vertex. Colorless vertices keep
/// their zero row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CIncidenceMatrix {
    pub n: usize,
    pub rows: Vec<Vec<i64>>,
    pub edge_order: Vec<(usize, usize)>,
}

impl CIncidenceMatrix {
    pub fn edge_rows(&self) -> &[Vec<i64>] {
        &self.rows[..self.edge_order.len()]
    }

    pub fn vertex_rows(&self) -> &[Vec<i64>] {
        &self.rows[self.edge_order.len()..]
    }
}

pub fn build_cincidence(g: &ColoredGraph) -> CIncidenceMatrix {
    build_with_edge_order(g, g.edges().to_vec())
}

fn build_with_edge_order(g: &ColoredGraph, edge_order: Vec<(usize, usize)>) -> CIncidenceMatrix {
    let n = g.n();
    let mut rows = Vec::with_capacity(edge_order.len() + n);
    for &(a, b) in &edge_order {
        let mut r = vec![0; n];
        r[a] = 1;
        r[b] = 1;
        rows.push(r);
    }
    for (i, c) in g.colors().iter().enumerate() {
        let mut r = vec![0; n];
        r[i] = c.value();
        rows.push(r);
    }
    CIncidenceMatrix { n, rows, edge_order }
}

/// Same matrix with the edge block in a caller-chosen order. Every listed
/// edge must belong to `g` and appear once.
pub fn build_cincidence_ordered(g: &ColoredGraph, edge_order: &[(usize, usize)]) -> Result<CIncidenceMatrix> {
    let mut sorted: Vec<(usize, usize)> = edge_order.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    let normalized = sorted.clone();
    sorted.sort_unstable();
    if sorted != g.edges() {
        return Err(Error::Precondition("edge order must be a permutation of the graph's edges".into()));
    }
    Ok(build_with_edge_order(g, normalized))
}

/// Rank over the rationals, by exact elimination.
pub fn rank_exact(m: &CIncidenceMatrix) -> usize {
    integer_rank(&m.rows, m.n)
}

/// `n` minus the number of bipartite components among the colorless ones.
pub fn rank_formula(g: &ColoredGraph) -> usize {
    let kinds = g.decompose_kinds();
    let bipartite = kinds
        .first
        .iter()
        .filter(|comp| g.is_bipartite(comp).expect("components from decompose_kinds"))
        .count();
    g.n() - bipartite
}

/// Spanning forest edges found by depth-first search from each component's
/// smallest vertex.
pub fn spanning_forest(g: &ColoredGraph) -> Vec<(usize, usize)> {
    let adj = g.adjacency();
    let mut seen = vec![false; g.n()];
    let mut tree = Vec::new();
    for root in 0..g.n() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    tree.push((u.min(w), u.max(w)));
                    stack.push(w);
                }
            }
        }
    }
    tree
}

/// For a connected, colorless, bipartite graph: does the exact rank agree
/// with that of a spanning tree, both being `n - 1`?
pub fn spanning_tree_rank_check(g: &ColoredGraph) -> Result<bool> {
    if g.colored_vertex_count() != 0 {
        return Err(Error::Precondition("graph must be colorless".into()));
    }
    let comps = g.components();
    if comps.len() != 1 {
        return Err(Error::Precondition("graph must be connected".into()));
    }
    if !g.is_bipartite(&comps[0])? {
        return Err(Error::Precondition("graph must be bipartite".into()));
    }
    let tree = ColoredGraph::colorless(g.n(), spanning_forest(g))?;
    let full = rank_exact(&build_cincidence(g));
    let cut = rank_exact(&build_cincidence(&tree));
    Ok(full == cut && full == g.n() - 1)
}
