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

//! Exact enumeration toolkit for the arrangement `J_n` in `R^n`, whose walls
//! are `x_a + x_b = 1` for `a < b` together with `x_i = 0` and `x_i = 1`.
//!
//! Sub-arrangements correspond to 3-colored graphs (colors in `{-1, 0, +1}`),
//! and the characteristic polynomial can be assembled four ways:
//!
//! * [`charpoly::charpoly_bruteforce`] sums over every subset of walls,
//! * [`charpoly::charpoly_graph`] sums over every central colored graph,
//! * [`charpoly::charpoly_census`] uses closed-form component counts,
//! * [`charpoly::finite_field_count`] counts points of the complement over `F_q`.
//!
//! Vertices are indexed from 0 in the API. The text formats in [`graph`] and
//! [`arrangement`] use 1-based labels.

pub mod arrangement;
pub mod census;
pub mod charpoly;
pub mod cli;
mod error;
pub mod graph;
pub mod limits;
pub mod linalg;
pub mod rank;
mod sweep;

pub use error::{Error, Result};
