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

//! Characteristic polynomial of `J_n` and the chamber counts derived from it.
//!
//! `chi(t) = sum over central B of (-1)^|B| t^(n - rank B)`, assembled from
//! wall subsets, from central colored graphs, or from the closed-form census
//! table. Point counts of the complement over `F_q` give an independent check.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arrangement::{build_jn_with, system_is_consistent, Subarrangement};
use crate::census::{CensusEngine, CountTable};
use crate::graph::enumerate_colored_graphs;
use crate::limits::{check_budget, Limits};
use crate::rank::rank_formula;
use crate::sweep::fold_range;
use crate::{Error, Result};

/// Integer polynomial in `t`; `coeffs[i]` is the coefficient of `t^i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Trailing zero coefficients are dropped.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn monomial(degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = BigInt::one();
        IntPolynomial { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, power: usize) -> BigInt {
        self.coeffs.get(power).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("nonempty")
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    pub fn eval_i64(&self, t: i64) -> BigInt {
        self.eval(&BigInt::from(t))
    }
}

impl fmt::Display for IntPolynomial {
    /// Descending powers, e.g. `t^2 - 5t + 6`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() && !(first && power == 0) {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = power == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match power {
                0 => {}
                1 => write!(f, "t")?,
                p => write!(f, "t^{p}")?,
            }
        }
        Ok(())
    }
}

/// Parses the [`fmt::Display`] form back.
impl FromStr for IntPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |msg: &str| Error::Parse { line: 0, msg: format!("{msg} in polynomial `{s}`") };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty input"));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && i > 0 {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);
        let mut coeffs: Vec<BigInt> = Vec::new();
        for term in terms {
            let (neg, body) = match term.strip_prefix('-') {
                Some(b) => (true, b),
                None => (false, term.strip_prefix('+').unwrap_or(term)),
            };
            let (mag, power) = match body.find('t') {
                None => (body, 0),
                Some(pos) => {
                    let power = match &body[pos + 1..] {
                        "" => 1,
                        rest => rest.strip_prefix('^').and_then(|p| p.parse().ok()).ok_or_else(|| err("bad exponent"))?,
                    };
                    (&body[..pos], power)
                }
            };
            let mut c: BigInt = if mag.is_empty() {
                if power == 0 {
                    return Err(err("empty term"));
                }
                BigInt::one()
            } else {
                mag.parse().map_err(|_| err("bad coefficient"))?
            };
            if neg {
                c = -c;
            }
            if coeffs.len() <= power {
                coeffs.resize(power + 1, BigInt::zero());
            }
            coeffs[power] += c;
        }
        Ok(IntPolynomial::new(coeffs))
    }
}

/// JSON form: ascending coefficients as decimal strings.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        strings.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(deserializer)?;
        let coeffs = strings
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(IntPolynomial::new(coeffs))
    }
}

#[derive(Clone, Debug)]
pub struct SweepOptions {
    pub limits: Limits,
    pub jobs: usize,
    /// Adds the walls `2 x_a = 1` to the subset sweep.
    pub include_diagonal: bool,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions { limits: Limits::default(), jobs: 1, include_diagonal: false }
    }
}

fn merge_vec(mut a: Vec<i64>, b: Vec<i64>) -> Vec<i64> {
    if a.len() < b.len() {
        a.resize(b.len(), 0);
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

fn from_signed_tally(tally: Vec<i64>, n: usize) -> IntPolynomial {
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for (power, c) in tally.into_iter().enumerate() {
        coeffs[power] += c;
    }
    IntPolynomial::new(coeffs)
}

/// Sum over every central subset of walls.
pub fn charpoly_bruteforce(n: usize, opts: &SweepOptions) -> Result<IntPolynomial> {
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    let walls = build_jn_with(n, opts.include_diagonal);
    let count = if walls.len() >= 127 { u128::MAX } else { 1u128 << walls.len() };
    check_budget("wall subset sweep", count, opts.limits.subsets)?;
    if walls.len() >= 64 {
        return Err(Error::BudgetExceeded { what: "wall subset sweep", size: count, budget: u64::MAX as u128 });
    }
    let coefficient: Vec<Vec<i64>> = walls.iter().map(|w| w.coefficients(n)).collect();
    let augmented: Vec<Vec<i64>> = walls
        .iter()
        .map(|w| {
            let mut r = w.coefficients(n);
            r.push(w.rhs());
            r
        })
        .collect();
    let tally = fold_range(
        count as u64,
        opts.jobs,
        |acc: &mut Vec<i64>, mask| {
            if acc.is_empty() {
                acc.resize(n + 1, 0);
            }
            let chosen = (0..walls.len()).filter(|&i| mask >> i & 1 == 1);
            let coef: Vec<Vec<i64>> = chosen.clone().map(|i| coefficient[i].clone()).collect();
            let aug: Vec<Vec<i64>> = chosen.map(|i| augmented[i].clone()).collect();
            if system_is_consistent(&coef, &aug, n) {
                let rank = crate::linalg::integer_rank(&coef, n);
                acc[n - rank] += if mask.count_ones() % 2 == 0 { 1 } else { -1 };
            }
        },
        merge_vec,
    );
    Ok(from_signed_tally(tally, n))
}

/// Sum over every central colored graph on `n` vertices.
pub fn charpoly_graph(n: usize, opts: &SweepOptions) -> Result<IntPolynomial> {
    let graphs = enumerate_colored_graphs(n, &opts.limits)?;
    let count = graphs.len();
    let tally = fold_range(
        count,
        opts.jobs,
        |acc: &mut Vec<i64>, i| {
            if acc.is_empty() {
                acc.resize(n + 1, 0);
            }
            let g = graphs.get(i);
            if g.is_central() {
                acc[n - rank_formula(&g)] += if g.cardinality() % 2 == 0 { 1 } else { -1 };
            }
        },
        merge_vec,
    );
    Ok(from_signed_tally(tally, n))
}

/// `sum_{k,s} (-1)^s gamma_{k,s} t^(n-k)`.
pub fn charpoly_from_table(table: &CountTable) -> IntPolynomial {
    let n = table.n();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for ((k, s), count) in table.iter() {
        let c = BigInt::from(count.clone());
        if s % 2 == 0 {
            coeffs[n - k] += c;
        } else {
            coeffs[n - k] -= c;
        }
    }
    IntPolynomial::new(coeffs)
}

/// From the closed-form census table; no exponential enumeration.
pub fn charpoly_census(n: usize, limits: &Limits) -> Result<IntPolynomial> {
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    if n > limits.census_n {
        return Err(Error::LimitExceeded { what: "closed-form census", n, limit: limits.census_n });
    }
    let table = CensusEngine::up_to(n).gamma_table(n);
    Ok(charpoly_from_table(&table))
}

/// `(-1)^n chi(-1)`, required to be positive.
pub fn chambers(p: &IntPolynomial, n: usize) -> Result<BigInt> {
    if p.degree() != n {
        return Err(Error::Precondition(format!("polynomial has degree {}, expected {n}", p.degree())));
    }
    let mut v = p.eval_i64(-1);
    if n % 2 == 1 {
        v = -v;
    }
    if v.is_positive() {
        Ok(v)
    } else {
        Err(Error::NonPositiveChambers(v.to_string()))
    }
}

/// `(-1)^r chi(1)` with `r` the rank of the whole arrangement.
pub fn bounded_chambers(p: &IntPolynomial, r: usize) -> Result<BigInt> {
    let mut v = p.eval_i64(1);
    if r % 2 == 1 {
        v = -v;
    }
    if v.is_negative() {
        Err(Error::NegativeBoundedChambers(v.to_string()))
    } else {
        Ok(v)
    }
}

/// Rank of the full arrangement `J_n`, computed rather than assumed.
pub fn full_rank(n: usize) -> Result<usize> {
    Ok(Subarrangement::new(n, build_jn_with(n, false))?.rank_linear())
}

pub fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Number of `x` in `F_q^n` with `x_i` not in `{0, 1}` and `x_a + x_b != 1`
/// for all `a < b`.
pub fn finite_field_count(n: usize, q: u64, limits: &Limits) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    if q < 5 {
        return Err(Error::PrimeTooSmall(q));
    }
    let points = (q as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    check_budget("finite field point count", points, limits.points)?;
    let mut x = vec![0u64; n];
    Ok(count_points(&mut x, 0, q))
}

// Depth-first over coordinates; each partial point is checked against the
// walls it already determines.
fn count_points(x: &mut [u64], depth: usize, q: u64) -> u64 {
    if depth == x.len() {
        return 1;
    }
    let mut total = 0;
    for v in 0..q {
        if v == 0 || v == 1 {
            continue;
        }
        // x_a + v == 1 (mod q) iff x_a == 1 - v
        let forbidden = (1 + q - v) % q;
        if x[..depth].iter().any(|&a| a == forbidden) {
            continue;
        }
        x[depth] = v;
        total += count_points(x, depth + 1, q);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> SweepOptions {
        SweepOptions::default()
    }

    #[test]
    fn bruteforce_small() {
        assert_eq!(charpoly_bruteforce(1, &opts()).unwrap(), IntPolynomial::from_i64(&[-2, 1]));
        assert_eq!(charpoly_bruteforce(2, &opts()).unwrap(), IntPolynomial::from_i64(&[6, -5, 1]));
    }

    #[test]
    fn graph_small() {
        assert_eq!(charpoly_graph(1, &opts()).unwrap(), IntPolynomial::from_i64(&[-2, 1]));
        assert_eq!(charpoly_graph(2, &opts()).unwrap(), IntPolynomial::from_i64(&[6, -5, 1]));
        assert_eq!(charpoly_graph(3, &opts()).unwrap(), charpoly_bruteforce(3, &opts()).unwrap());
    }

    #[test]
    fn census_small() {
        let limits = Limits::default();
        assert_eq!(charpoly_census(1, &limits).unwrap(), IntPolynomial::from_i64(&[-2, 1]));
        assert_eq!(charpoly_census(2, &limits).unwrap(), IntPolynomial::from_i64(&[6, -5, 1]));
        assert!(matches!(charpoly_census(11, &limits), Err(Error::LimitExceeded { .. })));
    }

    #[test]
    fn bruteforce_budget() {
        assert!(matches!(charpoly_bruteforce(6, &opts()), Err(Error::BudgetExceeded { .. })));
        let diag = SweepOptions { include_diagonal: true, ..opts() };
        // 2x = 1 adds a third wall at x = 1/2 on the line
        assert_eq!(charpoly_bruteforce(1, &diag).unwrap(), IntPolynomial::from_i64(&[-3, 1]));
    }

    #[test]
    fn chamber_examples() {
        let p1 = IntPolynomial::from_i64(&[-2, 1]);
        let p2 = IntPolynomial::from_i64(&[6, -5, 1]);
        assert_eq!(chambers(&p1, 1).unwrap(), BigInt::from(3));
        assert_eq!(chambers(&p2, 2).unwrap(), BigInt::from(12));
        assert_eq!(bounded_chambers(&p1, 1).unwrap(), BigInt::from(1));
        assert_eq!(bounded_chambers(&p2, 2).unwrap(), BigInt::from(2));
        assert_eq!(bounded_chambers(&IntPolynomial::monomial(3), 0).unwrap(), BigInt::from(1));
        assert_eq!(chambers(&IntPolynomial::monomial(3), 3).unwrap(), BigInt::from(1));
        assert!(chambers(&p2, 3).is_err());
        assert!(matches!(chambers(&IntPolynomial::from_i64(&[1, 1]), 1), Err(Error::NonPositiveChambers(_))));
        assert!(matches!(
            bounded_chambers(&IntPolynomial::from_i64(&[-3, 1]), 0),
            Err(Error::NegativeBoundedChambers(_))
        ));
    }

    #[test]
    fn full_rank_is_n() {
        for n in 1..=6 {
            assert_eq!(full_rank(n).unwrap(), n);
        }
    }

    #[test]
    fn point_counts() {
        let limits = Limits::default();
        assert_eq!(finite_field_count(1, 7, &limits).unwrap(), 5);
        assert_eq!(finite_field_count(2, 7, &limits).unwrap(), 20);
        assert_eq!(finite_field_count(2, 11, &limits).unwrap(), 9 * 8);
        assert_eq!(finite_field_count(1, 4, &limits), Err(Error::NotPrime(4)));
        assert_eq!(finite_field_count(1, 3, &limits), Err(Error::PrimeTooSmall(3)));
        let tight = Limits { points: 100, ..limits };
        assert!(matches!(finite_field_count(3, 5, &tight), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn display_and_parse() {
        let p = IntPolynomial::from_i64(&[6, -5, 1]);
        assert_eq!(p.to_string(), "t^2 - 5t + 6");
        assert_eq!(IntPolynomial::from_i64(&[-2, 1]).to_string(), "t - 2");
        assert_eq!(IntPolynomial::from_i64(&[0, -1, 0, 3]).to_string(), "3t^3 - t");
        assert_eq!(IntPolynomial::from_i64(&[0]).to_string(), "0");
        for p in [
            IntPolynomial::from_i64(&[6, -5, 1]),
            IntPolynomial::from_i64(&[0, -1, 0, 3]),
            IntPolynomial::from_i64(&[-7]),
            IntPolynomial::monomial(4),
        ] {
            assert_eq!(p.to_string().parse::<IntPolynomial>().unwrap(), p);
        }
        assert!("t^".parse::<IntPolynomial>().is_err());
        assert!("".parse::<IntPolynomial>().is_err());
    }

    #[test]
    fn json_round_trip() {
        let p = IntPolynomial::new(vec!["-123456789012345678901234567890".parse().unwrap(), BigInt::one()]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"["-123456789012345678901234567890","1"]"#);
        assert_eq!(serde_json::from_str::<IntPolynomial>(&json).unwrap(), p);
    }
}
