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

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("duplicate wall {0}")]
    DuplicateWall(String),
    #[error("expected {expected} colors, got {got}")]
    ColorCount { expected: usize, got: usize },
    #[error("invalid color {0}, expected -1, 0 or 1")]
    InvalidColor(i64),
    #[error("vertex set is not a connected component")]
    NotAComponent,
    #[error("n must be positive")]
    ZeroDimension,
    #[error("{what}: {size} exceeds the enumeration budget {budget}")]
    BudgetExceeded { what: &'static str, size: u128, budget: u128 },
    #[error("n = {n} exceeds the limit {limit} for {what}")]
    LimitExceeded { what: &'static str, n: usize, limit: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parts sum to {got}, expected {expected}")]
    PartitionSum { expected: usize, got: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} is below 5")]
    PrimeTooSmall(u64),
    #[error("chamber count must be positive, got {0}")]
    NonPositiveChambers(String),
    #[error("bounded chamber count must be nonnegative, got {0}")]
    NegativeBoundedChambers(String),
    #[error("diagonal walls have no colored-graph image")]
    DiagonalWall,
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
