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

//! Exact rank of integer matrices by fraction-free (Bareiss) elimination.
//!
//! The fast path runs in `i64` with checked arithmetic and restarts in
//! arbitrary precision on overflow, so the result is always the rank over
//! the rationals.

use num_bigint::BigInt;
use num_traits::{One, Zero};

trait Entry: Clone {
    fn is_zero(&self) -> bool;
    /// `(a * d - b * c) / p`, exact by the Bareiss identity.
    fn bareiss_step(a: &Self, d: &Self, b: &Self, c: &Self, p: &Self) -> Option<Self>;
    fn one() -> Self;
}

impl Entry for i64 {
    fn is_zero(&self) -> bool {
        *self == 0
    }

    fn bareiss_step(a: &i64, d: &i64, b: &i64, c: &i64, p: &i64) -> Option<i64> {
        let num = a.checked_mul(*d)?.checked_sub(b.checked_mul(*c)?)?;
        debug_assert_eq!(num % p, 0);
        Some(num / p)
    }

    fn one() -> i64 {
        1
    }
}

impl Entry for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn bareiss_step(a: &BigInt, d: &BigInt, b: &BigInt, c: &BigInt, p: &BigInt) -> Option<BigInt> {
        Some((a * d - b * c) / p)
    }

    fn one() -> BigInt {
        One::one()
    }
}

fn bareiss<T: Entry>(rows: &mut Vec<Vec<T>>, cols: usize) -> Option<usize> {
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    let mut rank = 0;
    let mut prev = T::one();
    for col in 0..cols {
        if rank == rows.len() {
            break;
        }
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let prow = &head[rank];
        for row in tail.iter_mut() {
            for j in col + 1..cols {
                row[j] = T::bareiss_step(&prow[col], &row[j], &row[col], &prow[j], &prev)?;
            }
            row[col] = T::bareiss_step(&prow[col], &row[col], &row[col], &prow[col], &prev)?;
        }
        prev = head[rank][col].clone();
        rank += 1;
    }
    Some(rank)
}

/// Rank over the rationals of the matrix with the given rows, each of length
/// `cols`. Zero rows are allowed.
pub fn integer_rank(rows: &[Vec<i64>], cols: usize) -> usize {
    let mut small: Vec<Vec<i64>> = rows.to_vec();
    if let Some(r) = bareiss(&mut small, cols) {
        return r;
    }
    let mut big: Vec<Vec<BigInt>> =
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    bareiss(&mut big, cols).expect("arbitrary precision elimination cannot overflow")
}

/// Rank over the rationals, always in arbitrary precision.
pub fn integer_rank_big(rows: &[Vec<BigInt>], cols: usize) -> usize {
    let mut big = rows.to_vec();
    bareiss(&mut big, cols).expect("arbitrary precision elimination cannot overflow")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_ranks() {
        assert_eq!(integer_rank(&[], 3), 0);
        assert_eq!(integer_rank(&[vec![0, 0], vec![0, 0]], 2), 0);
        assert_eq!(integer_rank(&[vec![1, 1], vec![1, 0], vec![0, 1]], 2), 2);
        assert_eq!(integer_rank(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]], 3), 2);
        // odd cycle incidence is full rank over Q (det 2), not over F_2
        assert_eq!(integer_rank(&[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]], 3), 3);
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let big = i64::MAX / 2;
        let rows = vec![vec![big, big - 1, 3], vec![big - 1, big, 5], vec![7, big, big]];
        let as_big: Vec<Vec<BigInt>> =
            rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        assert_eq!(integer_rank(&rows, 3), integer_rank_big(&as_big, 3));
        assert_eq!(integer_rank(&rows, 3), 3);
    }

    /// Rank over Q via exact rational Gauss-Jordan with i128 numerators and
    /// denominators; entries stay tiny for the generated matrices.
    fn rational_rank(rows: &[Vec<i64>], cols: usize) -> usize {
        use num_integer::Integer;
        let mut m: Vec<Vec<(i128, i128)>> =
            rows.iter().map(|r| r.iter().map(|&x| (x as i128, 1)).collect()).collect();
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..m.len()).find(|&r| m[r][c].0 != 0) else { continue };
            m.swap(rank, p);
            for r in 0..m.len() {
                if r == rank || m[r][c].0 == 0 {
                    continue;
                }
                let (pn, pd) = m[rank][c];
                let (xn, xd) = m[r][c];
                // factor = x / p
                let (fn_, fd) = (xn * pd, xd * pn);
                for j in 0..cols {
                    let (an, ad) = m[r][j];
                    let (bn, bd) = m[rank][j];
                    let num = an * bd * fd - bn * fn_ * ad;
                    let den = ad * bd * fd;
                    let g = num.gcd(&den).max(1);
                    let (mut num, mut den) = (num / g, den / g);
                    if den < 0 {
                        num = -num;
                        den = -den;
                    }
                    m[r][j] = (num, den);
                }
            }
            rank += 1;
        }
        rank
    }

    proptest! {
        #[test]
        fn matches_rational_elimination(
            rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 0..7)
        ) {
            prop_assert_eq!(integer_rank(&rows, 4), rational_rank(&rows, 4));
        }
    }
}
