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

//! 3-colored graphs: labeled simple graphs whose vertices carry a color in
//! `{-1, 0, +1}`, with 0 meaning colorless.
//!
//! Text format, one record per graph (vertex labels 1-based):
//!
//! ```text
//! n 3
//! c 1 1
//! c 3 -1
//! e 1 2
//! e 2 3
//! ```
//!
//! Vertices without a `c` line are colorless. Blank lines and lines starting
//! with `#` are ignored. A new `n` line starts a new record.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::limits::{check_budget, colored_graph_count, Limits};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Minus,
    Colorless,
    Plus,
}

impl Color {
    pub fn value(self) -> i64 {
        match self {
            Color::Minus => -1,
            Color::Colorless => 0,
            Color::Plus => 1,
        }
    }

    pub fn from_value(v: i64) -> Result<Self> {
        match v {
            -1 => Ok(Color::Minus),
            0 => Ok(Color::Colorless),
            1 => Ok(Color::Plus),
            other => Err(Error::InvalidColor(other)),
        }
    }

    pub fn is_colored(self) -> bool {
        self != Color::Colorless
    }

    pub fn flipped(self) -> Self {
        match self {
            Color::Minus => Color::Plus,
            Color::Colorless => Color::Colorless,
            Color::Plus => Color::Minus,
        }
    }
}

/// A labeled simple graph on `0..n` with a color per vertex.
///
/// Edges are stored as `(a, b)` with `a < b`, sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoredGraph {
    n: usize,
    colors: Vec<Color>,
    edges: Vec<(usize, usize)>,
}

/// The two sides of a proper 2-coloring of one component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

/// Split of the vertex set into colorless components, isolated colored
/// vertices, and components carrying both a color and an edge.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KindDecomposition {
    pub first: Vec<Vec<usize>>,
    pub second: Vec<usize>,
    pub third: Vec<Vec<usize>>,
}

impl ColoredGraph {
    /// Builds a graph, rejecting loops, repeated edges and out-of-range
    /// endpoints. Edge endpoints may be given in either order.
    pub fn new<I>(n: usize, colors: Vec<Color>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        if colors.len() != n {
            return Err(Error::ColorCount { expected: n, got: colors.len() });
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::Loop(a));
            }
            let e = (a.min(b), a.max(b));
            if !set.insert(e) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
        }
        Ok(ColoredGraph { n, colors, edges: set.into_iter().collect() })
    }

    pub fn colorless<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        ColoredGraph::new(n, vec![Color::Colorless; n], edges)
    }

    /// Convenience constructor from integer colors.
    pub fn from_values<I>(values: &[i64], edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let colors = values.iter().map(|&v| Color::from_value(v)).collect::<Result<Vec<_>>>()?;
        ColoredGraph::new(values.len(), colors, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> Color {
        self.colors[v]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    pub fn colored_vertex_count(&self) -> usize {
        self.colors.iter().filter(|c| c.is_colored()).count()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    fn component_of(&self, adj: &[Vec<usize>], comp: &[usize]) -> Result<()> {
        let Some(&start) = comp.first() else {
            return Err(Error::NotAComponent);
        };
        if comp.iter().any(|&v| v >= self.n) {
            return Err(Error::NotAComponent);
        }
        let mut seen = vec![false; self.n];
        seen[start] = true;
        let mut reach = vec![start];
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    reach.push(w);
                    stack.push(w);
                }
            }
        }
        reach.sort_unstable();
        let mut given = comp.to_vec();
        given.sort_unstable();
        given.dedup();
        if reach == given && given.len() == comp.len() {
            Ok(())
        } else {
            Err(Error::NotAComponent)
        }
    }

    fn two_color(adj: &[Vec<usize>], comp: &[usize], side: &mut [u8]) -> bool {
        let start = comp[0];
        side[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if side[w] == u8::MAX {
                    side[w] = side[u] ^ 1;
                    queue.push_back(w);
                } else if side[w] == side[u] {
                    return false;
                }
            }
        }
        true
    }

    /// Proper 2-coloring of a connected component, or `None` if it contains
    /// an odd cycle. The side holding the component's first listed vertex is
    /// `left`.
    pub fn bipartition(&self, comp: &[usize]) -> Result<Option<Bipartition>> {
        let adj = self.adjacency();
        self.component_of(&adj, comp)?;
        let mut side = vec![u8::MAX; self.n];
        if !Self::two_color(&adj, comp, &mut side) {
            return Ok(None);
        }
        let mut left: Vec<usize> = comp.iter().copied().filter(|&v| side[v] == 0).collect();
        let mut right: Vec<usize> = comp.iter().copied().filter(|&v| side[v] == 1).collect();
        left.sort_unstable();
        right.sort_unstable();
        Ok(Some(Bipartition { left, right }))
    }

    pub fn is_bipartite(&self, comp: &[usize]) -> Result<bool> {
        Ok(self.bipartition(comp)?.is_some())
    }

    pub fn decompose_kinds(&self) -> KindDecomposition {
        let mut kinds = KindDecomposition::default();
        for comp in self.components() {
            let colored = comp.iter().any(|&v| self.colors[v].is_colored());
            if !colored {
                kinds.first.push(comp);
            } else if comp.len() == 1 {
                kinds.second.push(comp[0]);
            } else {
                kinds.third.push(comp);
            }
        }
        kinds
    }

    /// Number of edges plus number of colored vertices.
    pub fn cardinality(&self) -> usize {
        self.edges.len() + self.colored_vertex_count()
    }

    /// Centrality, decided per component: a component with a colored vertex
    /// must be bipartite, the colored vertices on each side must agree, and
    /// the two sides must carry opposite colors.
    pub fn is_central(&self) -> bool {
        let adj = self.adjacency();
        let mut side = vec![u8::MAX; self.n];
        for comp in self.components() {
            if !comp.iter().any(|&v| self.colors[v].is_colored()) {
                continue;
            }
            if !Self::two_color(&adj, &comp, &mut side) {
                return false;
            }
            // sign[s] is the color required on side s, fixed by the first colored vertex seen.
            let mut required: Option<(u8, Color)> = None;
            for &v in &comp {
                let c = self.colors[v];
                if !c.is_colored() {
                    continue;
                }
                match required {
                    None => required = Some((side[v], c)),
                    Some((s, rc)) => {
                        let expect = if side[v] == s { rc } else { rc.flipped() };
                        if c != expect {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// The graph obtained by sending vertex `v` to `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::Precondition("permutation length must equal n".into()));
        }
        let mut colors = vec![Color::Colorless; self.n];
        let mut hit = vec![false; self.n];
        for (v, &p) in perm.iter().enumerate() {
            if p >= self.n || hit[p] {
                return Err(Error::Precondition("not a permutation".into()));
            }
            hit[p] = true;
            colors[p] = self.colors[v];
        }
        ColoredGraph::new(self.n, colors, self.edges.iter().map(|&(a, b)| (perm[a], perm[b])))
    }

    pub fn with_flipped_colors(&self) -> Self {
        ColoredGraph {
            n: self.n,
            colors: self.colors.iter().map(|c| c.flipped()).collect(),
            edges: self.edges.clone(),
        }
    }

    pub fn forget_colors(&self) -> Self {
        ColoredGraph {
            n: self.n,
            colors: vec![Color::Colorless; self.n],
            edges: self.edges.clone(),
        }
    }

    /// Subgraph induced on `vertices`, relabeled to `0..vertices.len()` in
    /// the order given.
    pub fn induced(&self, vertices: &[usize]) -> Result<Self> {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
            index[v] = i;
        }
        let colors = vertices.iter().map(|&v| self.colors[v]).collect();
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| index[a] != usize::MAX && index[b] != usize::MAX)
            .map(|&(a, b)| (index[a], index[b]));
        ColoredGraph::new(vertices.len(), colors, edges)
    }

    /// Parses every record in `text`.
    pub fn parse_many(text: &str) -> Result<Vec<Self>> {
        let mut out = Vec::new();
        let mut current: Option<RecordBuilder> = None;
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let err = |msg: &str| Error::Parse { line: line_no, msg: msg.to_string() };
            match fields[0] {
                "n" => {
                    if let Some(b) = current.take() {
                        out.push(b.finish()?);
                    }
                    let [_, count] = fields[..] else {
                        return Err(err("expected `n <count>`"));
                    };
                    let n = parse_usize(count, line_no)?;
                    if n == 0 {
                        return Err(err("n must be positive"));
                    }
                    current = Some(RecordBuilder::new(n));
                }
                "c" | "e" => {
                    let b = current.as_mut().ok_or_else(|| err("record must start with `n`"))?;
                    let [tag, x, y] = fields[..] else {
                        return Err(err("expected three fields"));
                    };
                    let x = b.vertex(x, line_no)?;
                    if tag == "c" {
                        let v: i64 = y.parse().map_err(|_| err("bad color"))?;
                        if v != 1 && v != -1 {
                            return Err(err("color must be -1 or 1"));
                        }
                        if b.colors[x].is_colored() {
                            return Err(err("vertex colored twice"));
                        }
                        b.colors[x] = Color::from_value(v)?;
                    } else {
                        let y = b.vertex(y, line_no)?;
                        if x >= y {
                            return Err(err(if x == y { "loop" } else { "edge must satisfy a < b" }));
                        }
                        if !b.edges.insert((x, y)) {
                            return Err(err("duplicate edge"));
                        }
                    }
                }
                other => return Err(err(&format!("unknown record tag `{other}`"))),
            }
        }
        if let Some(b) = current.take() {
            out.push(b.finish()?);
        }
        Ok(out)
    }

    /// Renders the graph in the text format.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

struct RecordBuilder {
    n: usize,
    colors: Vec<Color>,
    edges: BTreeSet<(usize, usize)>,
}

impl RecordBuilder {
    fn new(n: usize) -> Self {
        RecordBuilder { n, colors: vec![Color::Colorless; n], edges: BTreeSet::new() }
    }

    fn vertex(&self, field: &str, line: usize) -> Result<usize> {
        let v = parse_usize(field, line)?;
        if v == 0 || v > self.n {
            return Err(Error::Parse { line, msg: format!("vertex {v} out of range 1..={}", self.n) });
        }
        Ok(v - 1)
    }

    fn finish(self) -> Result<ColoredGraph> {
        ColoredGraph::new(self.n, self.colors, self.edges)
    }
}

pub(crate) fn parse_usize(field: &str, line: usize) -> Result<usize> {
    field
        .parse()
        .map_err(|_| Error::Parse { line, msg: format!("expected a nonnegative integer, got `{field}`") })
}

impl fmt::Display for ColoredGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n {}", self.n)?;
        for (v, c) in self.colors.iter().enumerate() {
            if c.is_colored() {
                writeln!(f, "c {} {}", v + 1, c.value())?;
            }
        }
        for &(a, b) in &self.edges {
            writeln!(f, "e {} {}", a + 1, b + 1)?;
        }
        Ok(())
    }
}

impl FromStr for ColoredGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut graphs = ColoredGraph::parse_many(s)?;
        match graphs.len() {
            1 => Ok(graphs.pop().unwrap()),
            got => Err(Error::Parse { line: 0, msg: format!("expected one graph record, found {got}") }),
        }
    }
}

/// All pairs `(a, b)` with `a < b < n`, in lexicographic order.
pub fn lex_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}

/// Deterministic stream over every colored graph on `n` vertices.
///
/// Graph `i` has color digits `i mod 3^n` in base 3 (vertex 0 least
/// significant; digit 0 colorless, 1 plus, 2 minus) and edge mask
/// `i / 3^n` over [`lex_pairs`].
#[derive(Clone, Debug)]
pub struct ColoredGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    color_count: u64,
    next: u64,
    end: u64,
}

impl ColoredGraphs {
    pub fn len(&self) -> u64 {
        self.end - self.next
    }

    pub fn is_empty(&self) -> bool {
        self.next >= self.end
    }

    /// Restricts the stream to indices in `range`, for sharding.
    pub fn shard(mut self, range: std::ops::Range<u64>) -> Self {
        self.end = self.end.min(range.end);
        self.next = self.next.max(range.start).min(self.end);
        self
    }

    pub fn get(&self, index: u64) -> ColoredGraph {
        let mut digits = index % self.color_count;
        let mut mask = index / self.color_count;
        let colors = (0..self.n)
            .map(|_| {
                let c = match digits % 3 {
                    0 => Color::Colorless,
                    1 => Color::Plus,
                    _ => Color::Minus,
                };
                digits /= 3;
                c
            })
            .collect();
        let mut edges = Vec::new();
        for &p in &self.pairs {
            if mask & 1 == 1 {
                edges.push(p);
            }
            mask >>= 1;
        }
        ColoredGraph { n: self.n, colors, edges }
    }
}

impl Iterator for ColoredGraphs {
    type Item = ColoredGraph;

    fn next(&mut self) -> Option<ColoredGraph> {
        if self.next >= self.end {
            return None;
        }
        let g = self.get(self.next);
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

/// Every colored graph on `n` vertices, subject to `limits.graphs`.
pub fn enumerate_colored_graphs(n: usize, limits: &Limits) -> Result<ColoredGraphs> {
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    let total = colored_graph_count(n);
    check_budget("colored graph enumeration", total, limits.graphs)?;
    if total > u64::MAX as u128 {
        return Err(Error::BudgetExceeded { what: "colored graph enumeration", size: total, budget: u64::MAX as u128 });
    }
    Ok(ColoredGraphs {
        n,
        pairs: lex_pairs(n),
        color_count: 3u64.pow(n as u32),
        next: 0,
        end: total as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(colors: &[i64], edges: &[(usize, usize)]) -> ColoredGraph {
        ColoredGraph::from_values(colors, edges.iter().copied()).unwrap()
    }

    fn triangle(colors: &[i64]) -> ColoredGraph {
        g(colors, &[(0, 1), (1, 2), (0, 2)])
    }

    #[test]
    fn components_examples() {
        assert_eq!(g(&[0, 0, 0], &[(0, 1)]).components(), vec![vec![0, 1], vec![2]]);
        assert_eq!(g(&[0], &[]).components(), vec![vec![0]]);
        assert_eq!(g(&[0; 4], &[(0, 1), (1, 2), (2, 3)]).components(), vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn bipartite_examples() {
        let t = triangle(&[0, 0, 0]);
        assert_eq!(t.bipartition(&[0, 1, 2]).unwrap(), None);

        let c4 = g(&[0; 4], &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        let sides = c4.bipartition(&[0, 1, 2, 3]).unwrap().unwrap();
        assert_eq!(sides, Bipartition { left: vec![0, 2], right: vec![1, 3] });

        let single = g(&[0, 0], &[]);
        let sides = single.bipartition(&[1]).unwrap().unwrap();
        assert_eq!(sides, Bipartition { left: vec![1], right: vec![] });
    }

    #[test]
    fn bipartite_rejects_non_component() {
        let p = g(&[0, 0, 0], &[(0, 1)]);
        assert_eq!(p.is_bipartite(&[0]), Err(Error::NotAComponent));
        assert_eq!(p.is_bipartite(&[0, 1, 2]), Err(Error::NotAComponent));
        assert_eq!(p.is_bipartite(&[]), Err(Error::NotAComponent));
        assert_eq!(p.is_bipartite(&[0, 1, 1]), Err(Error::NotAComponent));
        assert_eq!(p.is_bipartite(&[2]), Ok(true));
    }

    #[test]
    fn decompose_examples() {
        let d = g(&[0, 0, 1], &[(0, 1)]).decompose_kinds();
        assert_eq!(d, KindDecomposition { first: vec![vec![0, 1]], second: vec![2], third: vec![] });
        let d = g(&[1, 0], &[(0, 1)]).decompose_kinds();
        assert_eq!(d, KindDecomposition { first: vec![], second: vec![], third: vec![vec![0, 1]] });
        let d = g(&[1, -1], &[]).decompose_kinds();
        assert_eq!(d, KindDecomposition { first: vec![], second: vec![0, 1], third: vec![] });
    }

    #[test]
    fn cardinality_examples() {
        assert_eq!(g(&[1, 0], &[(0, 1)]).cardinality(), 2);
        assert_eq!(g(&[0, 0, 0], &[]).cardinality(), 0);
        assert_eq!(g(&[1, -1], &[(0, 1)]).cardinality(), 3);
    }

    #[test]
    fn central_examples() {
        assert!(!g(&[1, 1], &[(0, 1)]).is_central());
        assert!(g(&[1, -1], &[(0, 1)]).is_central());
        assert!(!triangle(&[1, 0, 0]).is_central());
        assert!(triangle(&[0, 0, 0]).is_central());
        assert!(g(&[0; 5], &[(0, 1), (1, 2), (2, 0), (3, 4)]).is_central());
    }

    #[test]
    fn colored_vertex_off_the_odd_cycle_is_not_central() {
        // triangle 0-1-2 with a pendant colored vertex 3 hanging off vertex 0
        let pendant = g(&[0, 0, 0, 1], &[(0, 1), (1, 2), (0, 2), (0, 3)]);
        assert!(!pendant.is_central());
    }

    #[test]
    fn even_path_parity() {
        // 0 - 1 - 2: endpoints at even distance must share a color
        assert!(g(&[1, 0, 1], &[(0, 1), (1, 2)]).is_central());
        assert!(!g(&[1, 0, -1], &[(0, 1), (1, 2)]).is_central());
        assert!(g(&[1, -1, 1], &[(0, 1), (1, 2)]).is_central());
    }

    #[test]
    fn constructor_rejects_bad_input() {
        assert_eq!(ColoredGraph::colorless(2, [(0, 0)]), Err(Error::Loop(0)));
        assert_eq!(ColoredGraph::colorless(2, [(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(
            ColoredGraph::colorless(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(ColoredGraph::colorless(0, []), Err(Error::ZeroDimension));
        assert_eq!(Color::from_value(2), Err(Error::InvalidColor(2)));
    }

    #[test]
    fn enumeration_counts() {
        let limits = Limits::default();
        assert_eq!(enumerate_colored_graphs(1, &limits).unwrap().count(), 3);
        assert_eq!(enumerate_colored_graphs(2, &limits).unwrap().count(), 18);
        let all: Vec<_> = enumerate_colored_graphs(3, &limits).unwrap().collect();
        assert_eq!(all.len(), 216);
        let distinct: std::collections::HashSet<_> = all.iter().collect();
        assert_eq!(distinct.len(), 216);
        assert!(matches!(
            enumerate_colored_graphs(7, &limits),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn enumeration_order_is_colors_then_edges() {
        let stream = enumerate_colored_graphs(2, &Limits::default()).unwrap();
        let first: Vec<_> = stream.clone().take(4).collect();
        assert_eq!(first[0], g(&[0, 0], &[]));
        assert_eq!(first[1], g(&[1, 0], &[]));
        assert_eq!(first[2], g(&[-1, 0], &[]));
        assert_eq!(first[3], g(&[0, 1], &[]));
        assert_eq!(stream.get(9), g(&[0, 0], &[(0, 1)]));
        let sharded: Vec<_> = stream.clone().shard(5..7).collect();
        assert_eq!(sharded, vec![stream.get(5), stream.get(6)]);
    }

    #[test]
    fn text_format() {
        let t: ColoredGraph = "n 3\nc 1 1\nc 3 -1\ne 1 2\ne 2 3\n".parse().unwrap();
        assert_eq!(t, g(&[1, 0, -1], &[(0, 1), (1, 2)]));
        assert_eq!(t.to_text().parse::<ColoredGraph>().unwrap(), t);

        for bad in [
            "n 2\ne 1 1\n",
            "n 2\ne 1 2\ne 1 2\n",
            "n 2\ne 1 3\n",
            "n 2\ne 2 1\n",
            "n 2\nc 1 0\n",
            "n 2\nc 1 1\nc 1 -1\n",
            "e 1 2\n",
            "n 0\n",
            "n 2\nx 1\n",
        ] {
            assert!(bad.parse::<ColoredGraph>().is_err(), "accepted {bad:?}");
        }

        let many = ColoredGraph::parse_many("# two graphs\nn 1\n\nn 2\ne 1 2\n").unwrap();
        assert_eq!(many.len(), 2);
    }
}
