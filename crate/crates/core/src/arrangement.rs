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

//! The arrangement `J_n` and its sub-arrangements.
//!
//! Text format for a sub-arrangement (labels 1-based):
//!
//! ```text
//! n 2
//! I 1 2
//! II 1 0
//! ```
//!
//! `I a b` is the wall `x_a + x_b = 1` and `II i v` is `x_i = v`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::graph::{parse_usize, Color, ColoredGraph};
use crate::linalg::integer_rank;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Wall {
    /// `x_a + x_b = 1` with `a < b`.
    Sum { a: usize, b: usize },
    /// `2 x_a = 1`. Only produced when diagonal walls are requested.
    Diagonal { a: usize },
    /// `x_i = value` with `value` 0 or 1.
    Coordinate { i: usize, value: u8 },
}

impl Wall {
    pub fn sum(a: usize, b: usize) -> Self {
        Wall::Sum { a: a.min(b), b: a.max(b) }
    }

    pub fn zero(i: usize) -> Self {
        Wall::Coordinate { i, value: 0 }
    }

    pub fn one(i: usize) -> Self {
        Wall::Coordinate { i, value: 1 }
    }

    fn validate(&self, n: usize) -> Result<()> {
        let (vs, ok): (Vec<usize>, bool) = match *self {
            Wall::Sum { a, b } => (vec![a, b], a < b),
            Wall::Diagonal { a } => (vec![a], true),
            Wall::Coordinate { i, value } => (vec![i], value <= 1),
        };
        if let Some(&v) = vs.iter().find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if !ok {
            return Err(Error::Precondition(format!("malformed wall {self}")));
        }
        Ok(())
    }

    /// Left-hand side coefficients in `R^n`.
    pub fn coefficients(&self, n: usize) -> Vec<i64> {
        let mut row = vec![0; n];
        match *self {
            Wall::Sum { a, b } => {
                row[a] = 1;
                row[b] = 1;
            }
            Wall::Diagonal { a } => row[a] = 2,
            Wall::Coordinate { i, .. } => row[i] = 1,
        }
        row
    }

    pub fn rhs(&self) -> i64 {
        match *self {
            Wall::Sum { .. } | Wall::Diagonal { .. } => 1,
            Wall::Coordinate { value, .. } => value as i64,
        }
    }
}

impl fmt::Display for Wall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Wall::Sum { a, b } => write!(f, "H_{{{},{}}}", a + 1, b + 1),
            Wall::Diagonal { a } => write!(f, "D_{}", a + 1),
            Wall::Coordinate { i, value } => write!(f, "{}_{}", value, i + 1),
        }
    }
}

/// The walls of `J_n`: the `x_a + x_b = 1` walls in lexicographic order,
/// then `0_1, 1_1, ..., 0_n, 1_n`.
pub fn build_jn(n: usize) -> Vec<Wall> {
    build_jn_with(n, false)
}

/// [`build_jn`], optionally with the diagonal walls `2 x_a = 1` inserted
/// after the sum walls.
pub fn build_jn_with(n: usize, include_diagonal: bool) -> Vec<Wall> {
    let mut walls: Vec<Wall> = crate::graph::lex_pairs(n).into_iter().map(|(a, b)| Wall::Sum { a, b }).collect();
    if include_diagonal {
        walls.extend((0..n).map(|a| Wall::Diagonal { a }));
    }
    for i in 0..n {
        walls.push(Wall::zero(i));
        walls.push(Wall::one(i));
    }
    walls
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subarrangement {
    n: usize,
    walls: BTreeSet<Wall>,
}

/// Result of mapping a sub-arrangement to a colored graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphImage {
    Graph(ColoredGraph),
    /// Both `0_i` and `1_i` are present for some `i`.
    Conflict,
}

impl Subarrangement {
    pub fn new<I>(n: usize, walls: I) -> Result<Self>
    where
        I: IntoIterator<Item = Wall>,
    {
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut set = BTreeSet::new();
        for w in walls {
            w.validate(n)?;
            if !set.insert(w) {
                return Err(Error::DuplicateWall(w.to_string()));
            }
        }
        Ok(Subarrangement { n, walls: set })
    }

    /// Walls of `universe` selected by the bits of `mask`.
    pub fn from_mask(n: usize, universe: &[Wall], mask: u64) -> Result<Self> {
        Subarrangement::new(
            n,
            universe.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, w)| *w),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn walls(&self) -> impl Iterator<Item = &Wall> {
        self.walls.iter()
    }

    pub fn len(&self) -> usize {
        self.walls.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walls.is_empty()
    }

    pub fn coefficient_rows(&self) -> Vec<Vec<i64>> {
        self.walls.iter().map(|w| w.coefficients(self.n)).collect()
    }

    pub fn augmented_rows(&self) -> Vec<Vec<i64>> {
        self.walls
            .iter()
            .map(|w| {
                let mut r = w.coefficients(self.n);
                r.push(w.rhs());
                r
            })
            .collect()
    }

    pub fn to_colored_graph(&self) -> Result<GraphImage> {
        let mut colors = vec![Color::Colorless; self.n];
        let mut edges = Vec::new();
        for w in &self.walls {
            match *w {
                Wall::Sum { a, b } => edges.push((a, b)),
                Wall::Diagonal { .. } => return Err(Error::DiagonalWall),
                Wall::Coordinate { i, value } => {
                    let c = if value == 0 { Color::Minus } else { Color::Plus };
                    if colors[i].is_colored() {
                        return Ok(GraphImage::Conflict);
                    }
                    colors[i] = c;
                }
            }
        }
        Ok(GraphImage::Graph(ColoredGraph::new(self.n, colors, edges)?))
    }

    /// Nonempty common intersection, i.e. a consistent linear system.
    pub fn is_central_linear(&self) -> bool {
        system_is_consistent(&self.coefficient_rows(), &self.augmented_rows(), self.n)
    }

    pub fn rank_linear(&self) -> usize {
        integer_rank(&self.coefficient_rows(), self.n)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut n = None;
        let mut walls = Vec::new();
        let mut seen = BTreeSet::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: String| Error::Parse { line: line_no, msg };
            let fields: Vec<&str> = line.split_whitespace().collect();
            let vertex = |field: &str, n: usize| -> Result<usize> {
                let v = parse_usize(field, line_no)?;
                if v == 0 || v > n {
                    return Err(err(format!("index {v} out of range 1..={n}")));
                }
                Ok(v - 1)
            };
            let wall = match (fields[0], n) {
                ("n", None) => {
                    let [_, count] = fields[..] else {
                        return Err(err("expected `n <count>`".into()));
                    };
                    let count = parse_usize(count, line_no)?;
                    if count == 0 {
                        return Err(err("n must be positive".into()));
                    }
                    n = Some(count);
                    continue;
                }
                ("n", Some(_)) => return Err(err("repeated `n` line".into())),
                (_, None) => return Err(err("file must start with `n <count>`".into())),
                ("I", Some(n)) => {
                    let [_, a, b] = fields[..] else {
                        return Err(err("expected `I <a> <b>`".into()));
                    };
                    let (a, b) = (vertex(a, n)?, vertex(b, n)?);
                    if a >= b {
                        return Err(err("type I wall needs a < b".into()));
                    }
                    Wall::Sum { a, b }
                }
                ("II", Some(n)) => {
                    let [_, i, v] = fields[..] else {
                        return Err(err("expected `II <i> <0|1>`".into()));
                    };
                    let i = vertex(i, n)?;
                    let value = match v {
                        "0" => 0,
                        "1" => 1,
                        _ => return Err(err("type II value must be 0 or 1".into())),
                    };
                    Wall::Coordinate { i, value }
                }
                (tag, _) => return Err(err(format!("unknown wall tag `{tag}`"))),
            };
            if !seen.insert(wall) {
                return Err(err(format!("duplicate wall {wall}")));
            }
            walls.push(wall);
        }
        let n = n.ok_or(Error::Parse { line: 0, msg: "missing `n <count>` line".into() })?;
        Subarrangement::new(n, walls)
    }
}

pub(crate) fn system_is_consistent(coefficients: &[Vec<i64>], augmented: &[Vec<i64>], n: usize) -> bool {
    integer_rank(coefficients, n) == integer_rank(augmented, n + 1)
}

impl fmt::Display for Subarrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n {}", self.n)?;
        for w in &self.walls {
            match *w {
                Wall::Sum { a, b } => writeln!(f, "I {} {}", a + 1, b + 1)?,
                Wall::Coordinate { i, value } => writeln!(f, "II {} {}", i + 1, value)?,
                Wall::Diagonal { a } => writeln!(f, "# diagonal wall 2x_{} = 1", a + 1)?,
            }
        }
        Ok(())
    }
}

impl FromStr for Subarrangement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Subarrangement::parse(s)
    }
}
