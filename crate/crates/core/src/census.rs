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

//! Counting central colored graphs by rank and cardinality.
//!
//! A central graph splits into colorless bipartite components, colorless
//! non-bipartite components, isolated colored vertices, and connected
//! colored components with at least one edge. Each class is counted by
//! component type `(order, cardinality)` and the classes are combined with
//! multinomial vertex choices; the rank is `n` minus the number of colorless
//! bipartite components.
//!
//! Component counts:
//!
//! * `nu_connected(k, s)`: connected labeled graphs on `k` vertices with `s`
//!   edges, by the pointed-component recurrence
//!   `c(k,s) = g(k,s) - sum_{m<k} sum_j C(k-1,m-1) c(m,j) g(k-m,s-j)`,
//!   `g(k,s) = C(k(k-1)/2, s)`.
//! * `nu_bipartite_connected(k, s)`: half the connected 2-colored graphs,
//!   extracted by the same recurrence from `b(k,s) = sum_j C(k,j) C(j(k-j), s)`.
//! * `nu_second(k, s) = 2^k` when `s = k`.
//! * `nu_third(k, s) = sum_{t=1}^{s-k+1} 2 nu_b(k, s-t) C(k, t)`, taken over
//!   terms with at least one edge.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::graph::enumerate_colored_graphs;
use crate::limits::Limits;
use crate::rank::rank_formula;
use crate::sweep::fold_range;
use crate::{Error, Result};

/// Non-increasing list of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionMultiset {
    parts: Vec<usize>,
}

impl PartitionMultiset {
    /// Sorts the parts; zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Precondition("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(PartitionMultiset { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `(value, multiplicity)` for each distinct part, largest first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

/// Partitions of `total` in reverse lexicographic order (`[3], [2,1],
/// [1,1,1]`), optionally with at most `max_parts` parts.
pub fn partitions(total: usize, max_parts: Option<usize>) -> Vec<PartitionMultiset> {
    fn go(rest: usize, cap: usize, max_parts: usize, cur: &mut Vec<usize>, out: &mut Vec<PartitionMultiset>) {
        if rest == 0 {
            out.push(PartitionMultiset { parts: cur.clone() });
            return;
        }
        if cur.len() == max_parts {
            return;
        }
        for p in (1..=cap.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, max_parts, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, total, max_parts.unwrap_or(usize::MAX), &mut Vec::new(), &mut out);
    out
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

fn binom(n: usize, k: usize) -> BigUint {
    if k > n {
        BigUint::zero()
    } else {
        binomial(BigUint::from(n), BigUint::from(k))
    }
}

/// `total! / prod(part!)`, further divided by `m!` for each part value
/// that repeats `m` times.
pub fn reduced_multinomial(total: usize, parts: &PartitionMultiset) -> Result<BigUint> {
    if parts.total() != total {
        return Err(Error::PartitionSum { expected: total, got: parts.total() });
    }
    let mut denom = BigUint::one();
    for &p in parts.parts() {
        denom *= factorial(p);
    }
    for (_, m) in parts.multiplicities() {
        denom *= factorial(m);
    }
    Ok(factorial(total) / denom)
}

/// Ways to split `total` labeled vertices into unordered blocks whose
/// `(order, cardinality)` types are `pairs`: `total! / prod(order!)`
/// divided by `m!` for each type repeated `m` times.
pub fn reduced_multinomial_pairs(total: usize, pairs: &[(usize, usize)]) -> Result<BigUint> {
    let got: usize = pairs.iter().map(|p| p.0).sum();
    if got != total {
        return Err(Error::PartitionSum { expected: total, got });
    }
    let mut sorted = pairs.to_vec();
    sorted.sort_unstable();
    let mut denom = BigUint::one();
    let mut run = 0;
    for (i, p) in sorted.iter().enumerate() {
        denom *= factorial(p.0);
        run = if i > 0 && sorted[i - 1] == *p { run + 1 } else { 1 };
        denom *= BigUint::from(run as u64);
    }
    Ok(factorial(total) / denom)
}

/// Counts `gamma_{k,s}` indexed by `(rank, cardinality)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    n: usize,
    entries: BTreeMap<(usize, usize), BigUint>,
}

#[derive(Serialize, Deserialize)]
struct CountTableRepr {
    n: usize,
    entries: Vec<CountEntry>,
}

#[derive(Serialize, Deserialize)]
struct CountEntry {
    k: usize,
    s: usize,
    count: String,
}

impl CountTable {
    pub fn new(n: usize) -> Self {
        CountTable { n, entries: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Adds to an entry; zero counts are not stored.
    pub fn add(&mut self, k: usize, s: usize, count: BigUint) {
        if count.is_zero() {
            return;
        }
        *self.entries.entry((k, s)).or_default() += count;
    }

    pub fn get(&self, k: usize, s: usize) -> BigUint {
        self.entries.get(&(k, s)).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &BigUint)> {
        self.entries.iter().map(|(&key, v)| (key, v))
    }

    pub fn total(&self) -> BigUint {
        self.entries.values().sum()
    }

    pub fn max_cardinality(&self) -> usize {
        self.entries.keys().map(|&(_, s)| s).max().unwrap_or(0)
    }

    /// Entries in `self` or `other` whose counts differ.
    pub fn diff(&self, other: &CountTable) -> Vec<((usize, usize), BigUint, BigUint)> {
        let mut keys: Vec<(usize, usize)> = self.entries.keys().chain(other.entries.keys()).copied().collect();
        keys.sort_unstable();
        keys.dedup();
        keys.into_iter()
            .filter_map(|(k, s)| {
                let (a, b) = (self.get(k, s), other.get(k, s));
                (a != b).then_some(((k, s), a, b))
            })
            .collect()
    }
}

impl Serialize for CountTable {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        CountTableRepr {
            n: self.n,
            entries: self.iter().map(|((k, s), c)| CountEntry { k, s, count: c.to_string() }).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CountTable {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = CountTableRepr::deserialize(deserializer)?;
        let mut table = CountTable::new(repr.n);
        for e in repr.entries {
            let c: BigUint = e.count.parse().map_err(serde::de::Error::custom)?;
            table.add(e.k, e.s, c);
        }
        Ok(table)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Class {
    Bipartite,
    NonBipartite,
    Third,
}

/// `(cardinality, component count) -> ways` for one class on a fixed
/// number of labeled vertices.
type ClassTable = BTreeMap<(usize, usize), BigUint>;

/// Component counts up to a fixed order, with memoized class tables.
pub struct CensusEngine {
    max_k: usize,
    connected: Vec<Vec<BigUint>>,
    bipartite: Vec<Vec<BigUint>>,
    groups: RefCell<HashMap<(Class, usize, usize), BTreeMap<usize, BigUint>>>,
    classes: RefCell<HashMap<(Class, usize), ClassTable>>,
}

fn max_edges(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// Connected part of a family of labeled structures `total[k][s]` (indexed
/// from `k = 1`) by the pointed-component recurrence.
fn connected_part(total: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let max_k = total.len() - 1;
    let mut conn: Vec<Vec<BigInt>> = vec![Vec::new(); max_k + 1];
    for k in 1..=max_k {
        let width = total[k].len();
        let mut row = total[k].clone();
        for m in 1..k {
            let choose = BigInt::from(binom(k - 1, m - 1));
            for (j, c) in conn[m].iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (rest, g) in total[k - m].iter().enumerate() {
                    if j + rest < width && !g.is_zero() {
                        row[j + rest] -= &choose * c * g;
                    }
                }
            }
        }
        conn[k] = row;
    }
    conn
}

fn to_unsigned(rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigUint>> {
    rows.into_iter()
        .map(|r| r.into_iter().map(|x| x.to_biguint().expect("counts are nonnegative")).collect())
        .collect()
}

impl CensusEngine {
    pub fn up_to(max_k: usize) -> Self {
        let mut all: Vec<Vec<BigInt>> = vec![Vec::new(); max_k + 1];
        let mut bicolored: Vec<Vec<BigInt>> = vec![Vec::new(); max_k + 1];
        for k in 1..=max_k {
            all[k] = (0..=max_edges(k)).map(|s| BigInt::from(binom(max_edges(k), s))).collect();
            bicolored[k] = (0..=max_edges(k))
                .map(|s| (0..=k).map(|j| BigInt::from(binom(k, j) * binom(j * (k - j), s))).sum())
                .collect();
        }
        let connected = to_unsigned(connected_part(&all));
        let bipartite = to_unsigned(connected_part(&bicolored))
            .into_iter()
            .map(|r| r.into_iter().map(|x| x / 2u32).collect())
            .collect();
        CensusEngine {
            max_k,
            connected,
            bipartite,
            groups: RefCell::new(HashMap::new()),
            classes: RefCell::new(HashMap::new()),
        }
    }

    pub fn max_k(&self) -> usize {
        self.max_k
    }

    fn check_k(&self, k: usize) {
        assert!(k <= self.max_k, "order {k} beyond engine capacity {}", self.max_k);
    }

    pub fn nu_connected(&self, k: usize, s: usize) -> BigUint {
        self.check_k(k);
        self.connected.get(k).and_then(|r| r.get(s)).cloned().unwrap_or_default()
    }

    pub fn nu_bipartite_connected(&self, k: usize, s: usize) -> BigUint {
        self.check_k(k);
        self.bipartite.get(k).and_then(|r| r.get(s)).cloned().unwrap_or_default()
    }

    pub fn nu_non_bipartite_connected(&self, k: usize, s: usize) -> BigUint {
        self.nu_connected(k, s) - self.nu_bipartite_connected(k, s)
    }

    /// Connected central graphs on `k` vertices with a colored vertex, an
    /// edge, and cardinality `s`: choose `t` vertices to color, then one of
    /// two sign patterns fixed by the bipartition.
    pub fn nu_third(&self, k: usize, s: usize) -> BigUint {
        self.check_k(k);
        if s < k {
            return BigUint::zero();
        }
        let mut total = BigUint::zero();
        for t in 1..=(s + 1 - k).min(k) {
            let edges = s - t;
            if edges == 0 {
                continue;
            }
            total += 2u32 * self.nu_bipartite_connected(k, edges) * binom(k, t);
        }
        total
    }

    /// The alternative reading with the bipartite count on `k - 1` vertices
    /// and upper limit `s - k`. Kept for diagnostics; it disagrees with
    /// direct enumeration.
    pub fn nu_third_shifted(&self, k: usize, s: usize) -> BigUint {
        self.check_k(k);
        if k < 2 || s <= k {
            return BigUint::zero();
        }
        (1..=s - k).map(|t| 2u32 * self.nu_bipartite_connected(k - 1, s - t) * binom(k, t)).sum()
    }

    fn component_count(&self, class: Class, m: usize, s: usize) -> BigUint {
        match class {
            Class::Bipartite => self.nu_bipartite_connected(m, s),
            Class::NonBipartite => self.nu_non_bipartite_connected(m, s),
            Class::Third => self.nu_third(m, s),
        }
    }

    fn max_cardinality(class: Class, m: usize) -> usize {
        match class {
            Class::Third => max_edges(m) + m,
            _ => max_edges(m),
        }
    }

    /// `mult` components of one class, each of order `size`, on
    /// `size * mult` labeled vertices: cardinality -> count. Each multiset of
    /// cardinalities contributes its pair-reduced multinomial times the
    /// product of component counts.
    fn group(&self, class: Class, size: usize, mult: usize) -> BTreeMap<usize, BigUint> {
        if let Some(hit) = self.groups.borrow().get(&(class, size, mult)) {
            return hit.clone();
        }
        let options: Vec<(usize, BigUint)> = (0..=Self::max_cardinality(class, size))
            .map(|s| (s, self.component_count(class, size, s)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let mut out = BTreeMap::new();
        let mut chosen = Vec::with_capacity(mult);
        self.group_rec(size, mult, &options, 0, &mut chosen, &mut out);
        self.groups.borrow_mut().insert((class, size, mult), out.clone());
        out
    }

    fn group_rec(
        &self,
        size: usize,
        mult: usize,
        options: &[(usize, BigUint)],
        from: usize,
        chosen: &mut Vec<usize>,
        out: &mut BTreeMap<usize, BigUint>,
    ) {
        if chosen.len() == mult {
            let pairs: Vec<(usize, usize)> = chosen.iter().map(|&i| (size, options[i].0)).collect();
            let mut weight = reduced_multinomial_pairs(size * mult, &pairs).expect("orders sum by construction");
            for &i in chosen.iter() {
                weight *= &options[i].1;
            }
            let card: usize = pairs.iter().map(|p| p.1).sum();
            *out.entry(card).or_default() += weight;
            return;
        }
        for i in from..options.len() {
            chosen.push(i);
            self.group_rec(size, mult, options, i, chosen, out);
            chosen.pop();
        }
    }

    /// All structures of one class on `order` labeled vertices, keyed by
    /// `(cardinality, number of components)`.
    fn class_table(&self, class: Class, order: usize) -> ClassTable {
        if let Some(hit) = self.classes.borrow().get(&(class, order)) {
            return hit.clone();
        }
        let mut table = ClassTable::new();
        for lambda in partitions(order, None) {
            let groups = lambda.multiplicities();
            // vertex choice between groups; within-group choice lives in `group`
            let blocks: Vec<usize> = groups.iter().map(|&(size, m)| size * m).collect();
            let mut acc: BTreeMap<usize, BigUint> = BTreeMap::from([(0, multinomial(order, &blocks))]);
            for &(size, m) in &groups {
                let g = self.group(class, size, m);
                acc = convolve(&acc, &g);
                if acc.is_empty() {
                    break;
                }
            }
            for (card, c) in acc {
                *table.entry((card, lambda.len())).or_default() += c;
            }
        }
        self.classes.borrow_mut().insert((class, order), table.clone());
        table
    }

    /// Central colored graphs on `n` vertices by `(rank, cardinality)`.
    pub fn gamma_table(&self, n: usize) -> CountTable {
        self.check_k(n);
        let mut table = CountTable::new(n);
        for n_b in 0..=n {
            let bip = self.class_table(Class::Bipartite, n_b);
            for n_nb in 0..=n - n_b {
                let nonbip = self.class_table(Class::NonBipartite, n_nb);
                for n_2 in 0..=n - n_b - n_nb {
                    let n_3 = n - n_b - n_nb - n_2;
                    let third = self.class_table(Class::Third, n_3);
                    let base = multinomial(n, &[n_b, n_nb, n_2, n_3]) * (BigUint::one() << n_2);
                    for (&(s_b, ell), cb) in &bip {
                        let rank = n - ell;
                        let head = &base * cb;
                        for (&(s_nb, _), cn) in &nonbip {
                            let mid = &head * cn;
                            for (&(s_3, _), c3) in &third {
                                table.add(rank, s_b + s_nb + n_2 + s_3, &mid * c3);
                            }
                        }
                    }
                }
            }
        }
        table
    }
}

fn multinomial(total: usize, blocks: &[usize]) -> BigUint {
    debug_assert_eq!(blocks.iter().sum::<usize>(), total);
    blocks.iter().fold(factorial(total), |acc, &b| acc / factorial(b))
}

fn convolve(a: &BTreeMap<usize, BigUint>, b: &BTreeMap<usize, BigUint>) -> BTreeMap<usize, BigUint> {
    let mut out = BTreeMap::new();
    for (i, x) in a {
        for (j, y) in b {
            *out.entry(i + j).or_default() += x * y;
        }
    }
    out
}

pub fn nu_connected(k: usize, s: usize) -> BigUint {
    CensusEngine::up_to(k).nu_connected(k, s)
}

pub fn nu_bipartite_connected(k: usize, s: usize) -> BigUint {
    CensusEngine::up_to(k).nu_bipartite_connected(k, s)
}

pub fn nu_second(k: usize, s: usize) -> BigUint {
    if k == s {
        BigUint::one() << k
    } else {
        BigUint::zero()
    }
}

pub fn nu_third(k: usize, s: usize) -> BigUint {
    CensusEngine::up_to(k).nu_third(k, s)
}

pub fn nu_third_shifted(k: usize, s: usize) -> BigUint {
    CensusEngine::up_to(k).nu_third_shifted(k, s)
}

/// `gamma_{k,s}` on `n` vertices from the closed form.
pub fn gamma_census(n: usize, k: usize, s: usize) -> BigUint {
    CensusEngine::up_to(n).gamma_table(n).get(k, s)
}

/// Enumerates every colored graph on `k` vertices and tallies the
/// connected, central, third-kind ones by cardinality. Fails if one of them
/// does not have full rank.
pub fn third_kind_bruteforce_table(k: usize, limits: &Limits, jobs: usize) -> Result<BTreeMap<usize, u64>> {
    let graphs = enumerate_colored_graphs(k, limits)?;
    let tally = fold_range(
        graphs.len(),
        jobs,
        |acc: &mut (BTreeMap<usize, u64>, Option<u64>), i| {
            let g = graphs.get(i);
            if g.edges().is_empty() || g.colored_vertex_count() == 0 || !g.is_central() {
                return;
            }
            if g.components().len() != 1 {
                return;
            }
            if rank_formula(&g) != k {
                acc.1 = Some(acc.1.map_or(i, |j| j.min(i)));
            }
            *acc.0.entry(g.cardinality()).or_default() += 1;
        },
        |mut a, b| {
            for (s, c) in b.0 {
                *a.0.entry(s).or_default() += c;
            }
            a.1 = match (a.1, b.1) {
                (Some(x), Some(y)) => Some(x.min(y)),
                (x, y) => x.or(y),
            };
            a
        },
    );
    if let Some(i) = tally.1 {
        return Err(Error::Precondition(format!(
            "third-kind graph without full rank:\n{}",
            graphs.get(i)
        )));
    }
    Ok(tally.0)
}

pub fn nu_third_bruteforce(k: usize, s: usize, limits: &Limits) -> Result<BigUint> {
    Ok(BigUint::from(third_kind_bruteforce_table(k, limits, 1)?.get(&s).copied().unwrap_or(0)))
}

/// `gamma_{k,s}` for every `(k, s)` by enumerating all colored graphs.
pub fn gamma_bruteforce_table(n: usize, limits: &Limits, jobs: usize) -> Result<CountTable> {
    let graphs = enumerate_colored_graphs(n, limits)?;
    let tally = fold_range(
        graphs.len(),
        jobs,
        |acc: &mut BTreeMap<(usize, usize), u64>, i| {
            let g = graphs.get(i);
            if g.is_central() {
                *acc.entry((rank_formula(&g), g.cardinality())).or_default() += 1;
            }
        },
        |mut a, b| {
            for (key, c) in b {
                *a.entry(key).or_default() += c;
            }
            a
        },
    );
    let mut table = CountTable::new(n);
    for ((k, s), c) in tally {
        table.add(k, s, BigUint::from(c));
    }
    Ok(table)
}

pub fn gamma_bruteforce(n: usize, k: usize, s: usize, limits: &Limits) -> Result<BigUint> {
    Ok(gamma_bruteforce_table(n, limits, 1)?.get(k, s))
}

/// Small helper for reports: a count as `u64` when it fits.
pub fn as_u64(x: &BigUint) -> Option<u64> {
    x.to_u64()
}
