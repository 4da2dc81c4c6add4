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

//! Enumeration budgets.
//!
//! Every exponential sweep checks its item count against a budget before it
//! starts. The defaults admit subset sweeps of `J_5` (2^20 subsets), colored
//! graph sweeps on 6 vertices, and 10^8 finite-field points. Setting the
//! `CENSUS_BUDGET` environment variable replaces all three item budgets with
//! one value.

use crate::{Error, Result};

pub const BUDGET_ENV: &str = "CENSUS_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of wall subsets a brute-force sweep may visit.
    pub subsets: u128,
    /// Maximum number of colored graphs an enumeration may visit.
    pub graphs: u128,
    /// Maximum number of points of `F_q^n` a point count may visit.
    pub points: u128,
    /// Largest `n` accepted by the closed-form census.
    pub census_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            subsets: 1 << 20,
            graphs: colored_graph_count(6),
            points: 100_000_000,
            census_n: 10,
        }
    }
}

impl Limits {
    /// Defaults, with the item budgets overridden by `CENSUS_BUDGET` when set.
    pub fn from_env() -> Result<Self> {
        let mut limits = Limits::default();
        if let Ok(raw) = std::env::var(BUDGET_ENV) {
            let budget: u128 = raw.trim().parse().map_err(|_| Error::Parse {
                line: 0,
                msg: format!("{BUDGET_ENV} must be a positive integer, got {raw:?}"),
            })?;
            if budget == 0 {
                return Err(Error::Precondition(format!("{BUDGET_ENV} must be positive")));
            }
            limits.subsets = budget;
            limits.graphs = budget;
            limits.points = budget;
        }
        Ok(limits)
    }

    pub fn unlimited() -> Self {
        Limits {
            subsets: u128::MAX,
            graphs: u128::MAX,
            points: u128::MAX,
            census_n: usize::MAX,
        }
    }
}

/// `3^n * 2^(n choose 2)`, saturating.
pub fn colored_graph_count(n: usize) -> u128 {
    let pairs = n * n.saturating_sub(1) / 2;
    if pairs >= 127 || n >= 80 {
        return u128::MAX;
    }
    3u128.pow(n as u32).saturating_mul(1u128 << pairs)
}

pub(crate) fn check_budget(what: &'static str, size: u128, budget: u128) -> Result<()> {
    if size > budget {
        Err(Error::BudgetExceeded { what, size, budget })
    } else {
        Ok(())
    }
}
