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

//! Sharded index-range sweeps.
//!
//! Results are combined with an associative merge, so the outcome does not
//! depend on the number of workers.

use rayon::prelude::*;

fn pool(jobs: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("failed to build worker pool")
}

/// Folds `visit` over `0..count` and merges the per-shard accumulators.
pub(crate) fn fold_range<A, F, M>(count: u64, jobs: usize, visit: F, merge: M) -> A
where
    A: Default + Send,
    F: Fn(&mut A, u64) + Sync,
    M: Fn(A, A) -> A + Sync,
{
    if jobs <= 1 {
        let mut acc = A::default();
        for i in 0..count {
            visit(&mut acc, i);
        }
        return acc;
    }
    pool(jobs).install(|| {
        (0..count)
            .into_par_iter()
            .fold(A::default, |mut acc, i| {
                visit(&mut acc, i);
                acc
            })
            .reduce(A::default, &merge)
    })
}

/// Smallest index in `0..count` for which `check` returns `Some`.
pub(crate) fn find_first<T, F>(count: u64, jobs: usize, check: F) -> Option<(u64, T)>
where
    T: Send,
    F: Fn(u64) -> Option<T> + Sync,
{
    if jobs <= 1 {
        return (0..count).find_map(|i| check(i).map(|t| (i, t)));
    }
    pool(jobs).install(|| {
        (0..count)
            .into_par_iter()
            .filter_map(|i| check(i).map(|t| (i, t)))
            .find_first(|_| true)
    })
}
