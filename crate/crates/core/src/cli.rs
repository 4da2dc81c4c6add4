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

//! Command-line front end.
//!
//! Every subcommand writes a deterministic report; identical arguments give
//! byte-identical output for any `--jobs`. Exit status is 0 on success, 1
//! when a cross-check fails, and 2 for invalid input or exceeded budgets.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::arrangement::{build_jn, GraphImage, Subarrangement};
use crate::census::{gamma_bruteforce_table, third_kind_bruteforce_table, CensusEngine, CountTable};
use crate::charpoly::{
    bounded_chambers, chambers, charpoly_bruteforce, charpoly_census, charpoly_graph, finite_field_count, full_rank,
    IntPolynomial, SweepOptions,
};
use crate::graph::{enumerate_colored_graphs, lex_pairs, Color, ColoredGraph};
use crate::limits::{check_budget, Limits};
use crate::rank::{build_cincidence, rank_exact, rank_formula};
use crate::sweep::find_first;
use crate::{Error, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Parser, Debug, Clone)]
#[command(name = "jarr", version, about = "Characteristic polynomial and chamber counts of the J_n arrangement")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads for enumerations.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: u16,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Characteristic polynomial, chambers and bounded chambers.
    Charpoly {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::All)]
        method: Method,
        /// Add the walls 2x_a = 1 to the subset sweep.
        #[arg(long)]
        include_diagonal: bool,
    },
    /// Table of central graph counts by rank and cardinality.
    Census {
        #[arg(long)]
        n: usize,
        /// Add the enumeration count and a PASS/FAIL diff.
        #[arg(long)]
        oracle: bool,
    },
    /// Connected component counts on K vertices by cardinality.
    Counts {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        oracle: bool,
        /// For `third`: also print the shifted reading (bipartite count on K-1 vertices).
        #[arg(long)]
        variants: bool,
    },
    /// Exact and closed-form rank of each graph in FILE.
    Rank { file: PathBuf },
    /// Centrality of the sub-arrangement in FILE, by graph and by linear algebra.
    Central { file: PathBuf },
    /// Compare chi(q) with point counts over F_q.
    Ffcheck {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', default_value = "5,7,11,13")]
        primes: Vec<u64>,
    },
    /// Run every cross-check up to N.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random graphs with 6 to 9 vertices for the rank check.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Bruteforce,
    Graph,
    Census,
    All,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Connected,
    Bipartite,
    Third,
}

struct Report {
    body: String,
    ok: bool,
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(config) => run(&config, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            code
        }
    }
}

pub fn run(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = Limits::from_env().and_then(|limits| dispatch(config, &limits));
    match result {
        Ok(report) => {
            let _ = write!(out, "{}", report.body);
            if report.ok {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INVALID
        }
    }
}

fn dispatch(config: &RunConfig, limits: &Limits) -> Result<Report> {
    let jobs = config.jobs as usize;
    let format = config.format;
    match &config.command {
        Command::Charpoly { n, method, include_diagonal } => {
            cmd_charpoly(*n, *method, *include_diagonal, format, limits, jobs)
        }
        Command::Census { n, oracle } => cmd_census(*n, *oracle, format, limits, jobs),
        Command::Counts { kind, k, oracle, variants } => cmd_counts(*kind, *k, *oracle, *variants, format, limits, jobs),
        Command::Rank { file } => cmd_rank(&read(file)?, format),
        Command::Central { file } => cmd_central(&read(file)?, format),
        Command::Ffcheck { n, primes } => cmd_ffcheck(*n, primes, format, limits),
        Command::Verify { n, seed, samples } => cmd_verify(*n, *seed, *samples, format, limits, jobs),
    }
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Parse { line: 0, msg: format!("cannot read {}: {e}", path.display()) })
}

fn positive(n: usize) -> Result<usize> {
    if n == 0 {
        Err(Error::ZeroDimension)
    } else {
        Ok(n)
    }
}

fn coeff_strings(p: &IntPolynomial) -> Vec<String> {
    p.coeffs().iter().map(ToString::to_string).collect()
}

fn json_body(value: serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(&value).expect("json values serialize");
    s.push('\n');
    s
}

fn cmd_charpoly(
    n: usize,
    method: Method,
    include_diagonal: bool,
    format: Format,
    limits: &Limits,
    jobs: usize,
) -> Result<Report> {
    positive(n)?;
    let opts = SweepOptions { limits: *limits, jobs, include_diagonal };
    let methods: Vec<Method> = match method {
        Method::All => vec![Method::Bruteforce, Method::Graph, Method::Census],
        m => vec![m],
    };
    let r = full_rank(n)?;
    let mut rows = Vec::new();
    for m in methods {
        let (name, p) = match m {
            Method::Bruteforce => ("bruteforce", charpoly_bruteforce(n, &opts)?),
            Method::Graph => ("graph", charpoly_graph(n, &opts)?),
            Method::Census => ("census", charpoly_census(n, limits)?),
            Method::All => unreachable!(),
        };
        let ch = chambers(&p, n)?;
        let bd = bounded_chambers(&p, r)?;
        rows.push((name, p, ch, bd));
    }
    let comparable = !include_diagonal || rows.len() == 1;
    let agree = rows.windows(2).all(|w| w[0].1 == w[1].1);
    let ok = !comparable || agree;
    let body = match format {
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "n = {n}").unwrap();
            if include_diagonal {
                writeln!(s, "bruteforce includes diagonal walls 2x_a = 1").unwrap();
            }
            for (name, p, ch, bd) in &rows {
                writeln!(s, "{name}: {p}  chambers={ch} bounded={bd}").unwrap();
            }
            if rows.len() > 1 {
                if comparable {
                    writeln!(s, "agreement: {}", pass(agree)).unwrap();
                } else {
                    writeln!(s, "agreement: n/a (diagonal walls only in bruteforce)").unwrap();
                }
            }
            s
        }
        Format::Json => json_body(json!({
            "n": n,
            "include_diagonal": include_diagonal,
            "results": rows.iter().map(|(name, p, ch, bd)| json!({
                "method": name,
                "polynomial": p.to_string(),
                "coefficients": coeff_strings(p),
                "chambers": ch.to_string(),
                "bounded_chambers": bd.to_string(),
            })).collect::<Vec<_>>(),
            "agree": if comparable { json!(agree) } else { serde_json::Value::Null },
        })),
        Format::Csv => {
            let mut s = String::from("method,polynomial,coefficients,chambers,bounded_chambers\n");
            for (name, p, ch, bd) in &rows {
                writeln!(s, "{name},{p},{},{ch},{bd}", coeff_strings(p).join(";")).unwrap();
            }
            s
        }
    };
    Ok(Report { body, ok })
}

fn table_text(title: &str, table: &CountTable, width: usize) -> String {
    let n = table.n();
    let mut s = String::new();
    writeln!(s, "{title}").unwrap();
    write!(s, "k\\s").unwrap();
    for c in 0..=width {
        write!(s, " {c:>w$}", w = cell_width(table, width)).unwrap();
    }
    s.push('\n');
    for k in 0..=n {
        write!(s, "{k:>3}").unwrap();
        for c in 0..=width {
            write!(s, " {:>w$}", table.get(k, c), w = cell_width(table, width)).unwrap();
        }
        s.push('\n');
    }
    s
}

fn cell_width(table: &CountTable, width: usize) -> usize {
    let widest = table.iter().map(|(_, c)| c.to_string().len()).max().unwrap_or(1);
    widest.max(width.to_string().len())
}

fn cmd_census(n: usize, oracle: bool, format: Format, limits: &Limits, jobs: usize) -> Result<Report> {
    positive(n)?;
    if n > limits.census_n {
        return Err(Error::LimitExceeded { what: "closed-form census", n, limit: limits.census_n });
    }
    let census = CensusEngine::up_to(n).gamma_table(n);
    let brute = if oracle { Some(gamma_bruteforce_table(n, limits, jobs)?) } else { None };
    let diff = brute.as_ref().map(|b| census.diff(b)).unwrap_or_default();
    let ok = diff.is_empty();
    let width = census.max_cardinality().max(brute.as_ref().map_or(0, CountTable::max_cardinality));
    let body = match format {
        Format::Text => {
            let mut s = table_text(&format!("census gamma table, n = {n} (rows k, columns s)"), &census, width);
            if let Some(b) = &brute {
                s += &table_text("bruteforce gamma table", b, width);
                for ((k, c), a, b) in &diff {
                    writeln!(s, "mismatch k={k} s={c}: census={a} bruteforce={b}").unwrap();
                }
                writeln!(s, "oracle: {}", pass(ok)).unwrap();
            }
            s
        }
        Format::Json => {
            let mut v = json!({ "n": n, "census": census });
            if let Some(b) = &brute {
                v["bruteforce"] = json!(b);
                v["agree"] = json!(ok);
            }
            json_body(v)
        }
        Format::Csv => {
            let mut s = String::from(if oracle { "k,s,census,bruteforce\n" } else { "k,s,census\n" });
            let mut keys: Vec<(usize, usize)> = census.iter().map(|(k, _)| k).collect();
            if let Some(b) = &brute {
                keys.extend(b.iter().map(|(k, _)| k));
            }
            keys.sort_unstable();
            keys.dedup();
            for (k, c) in keys {
                write!(s, "{k},{c},{}", census.get(k, c)).unwrap();
                if let Some(b) = &brute {
                    write!(s, ",{}", b.get(k, c)).unwrap();
                }
                s.push('\n');
            }
            s
        }
    };
    Ok(Report { body, ok })
}

/// Connected and connected-bipartite colorless graphs on `k` vertices by
/// edge count, by enumerating all edge subsets.
pub fn simple_graph_bruteforce_counts(k: usize, limits: &Limits) -> Result<(BTreeMap<usize, u64>, BTreeMap<usize, u64>)> {
    positive(k)?;
    let pairs = lex_pairs(k);
    let count = 1u128.checked_shl(pairs.len() as u32).unwrap_or(u128::MAX);
    check_budget("simple graph enumeration", count, limits.graphs)?;
    let mut connected = BTreeMap::new();
    let mut bipartite = BTreeMap::new();
    for mask in 0..count as u64 {
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        let g = ColoredGraph::colorless(k, edges)?;
        let comps = g.components();
        if comps.len() != 1 {
            continue;
        }
        let s = g.edges().len();
        *connected.entry(s).or_default() += 1;
        if g.is_bipartite(&comps[0])? {
            *bipartite.entry(s).or_default() += 1;
        }
    }
    Ok((connected, bipartite))
}

fn cmd_counts(
    kind: Kind,
    k: usize,
    oracle: bool,
    variants: bool,
    format: Format,
    limits: &Limits,
    jobs: usize,
) -> Result<Report> {
    positive(k)?;
    if k > limits.census_n.max(1) * 4 {
        return Err(Error::LimitExceeded { what: "component counts", n: k, limit: limits.census_n * 4 });
    }
    let engine = CensusEngine::up_to(k);
    let max_s = match kind {
        Kind::Third => k * (k - 1) / 2 + k,
        _ => k * (k - 1) / 2,
    };
    let brute: Option<BTreeMap<usize, u64>> = if oracle {
        Some(match kind {
            Kind::Connected => simple_graph_bruteforce_counts(k, limits)?.0,
            Kind::Bipartite => simple_graph_bruteforce_counts(k, limits)?.1,
            Kind::Third => third_kind_bruteforce_table(k, limits, jobs)?,
        })
    } else {
        None
    };
    let show_variant = variants && kind == Kind::Third;
    let mut rows = Vec::new();
    let mut ok = true;
    let mut variant_fails = Vec::new();
    for s in 0..=max_s {
        let value = match kind {
            Kind::Connected => engine.nu_connected(k, s),
            Kind::Bipartite => engine.nu_bipartite_connected(k, s),
            Kind::Third => engine.nu_third(k, s),
        };
        let shifted = show_variant.then(|| engine.nu_third_shifted(k, s));
        let oracle_value = brute.as_ref().map(|b| BigUint::from(b.get(&s).copied().unwrap_or(0)));
        if let Some(o) = &oracle_value {
            ok &= *o == value;
            if let Some(v) = &shifted {
                if v != o {
                    variant_fails.push(s);
                }
            }
        }
        rows.push((s, value, shifted, oracle_value));
    }
    let name = match kind {
        Kind::Connected => "connected",
        Kind::Bipartite => "bipartite",
        Kind::Third => "third",
    };
    let body = match format {
        Format::Text | Format::Csv => {
            let mut s = String::new();
            if format == Format::Text {
                writeln!(s, "{name} component counts on k = {k} vertices").unwrap();
            }
            let mut header = vec!["s", name];
            if show_variant {
                header.push("shifted");
            }
            if oracle {
                header.push("bruteforce");
            }
            let sep = if format == Format::Csv { "," } else { " " };
            writeln!(s, "{}", header.join(sep)).unwrap();
            for (c, v, sh, o) in &rows {
                let mut cells = vec![c.to_string(), v.to_string()];
                if let Some(x) = sh {
                    cells.push(x.to_string());
                }
                if let Some(x) = o {
                    cells.push(x.to_string());
                }
                writeln!(s, "{}", cells.join(sep)).unwrap();
            }
            if format == Format::Text && oracle {
                writeln!(s, "oracle: {}", pass(ok)).unwrap();
                if show_variant {
                    if variant_fails.is_empty() {
                        writeln!(s, "shifted reading: agrees on every s (discrepancy vacuous for k = {k})").unwrap();
                    } else {
                        writeln!(s, "shifted reading: FAILS at s = {:?}", variant_fails).unwrap();
                    }
                }
            }
            s
        }
        Format::Json => {
            let mut v = json!({
                "kind": name,
                "k": k,
                "rows": rows.iter().map(|(c, v, sh, o)| {
                    let mut row = json!({ "s": c, "count": v.to_string() });
                    if let Some(x) = sh { row["shifted"] = json!(x.to_string()); }
                    if let Some(x) = o { row["bruteforce"] = json!(x.to_string()); }
                    row
                }).collect::<Vec<_>>(),
            });
            if oracle {
                v["agree"] = json!(ok);
                if show_variant {
                    v["shifted_failures"] = json!(variant_fails);
                }
            }
            json_body(v)
        }
    };
    Ok(Report { body, ok })
}

fn cmd_rank(text: &str, format: Format) -> Result<Report> {
    let graphs = ColoredGraph::parse_many(text)?;
    if graphs.is_empty() {
        return Err(Error::Parse { line: 0, msg: "no graph records".into() });
    }
    let results: Vec<(usize, usize)> =
        graphs.iter().map(|g| (rank_exact(&build_cincidence(g)), rank_formula(g))).collect();
    let ok = results.iter().all(|(a, b)| a == b);
    let body = match format {
        Format::Text => results.iter().map(|(e, f)| format!("exact={e} formula={f} {}\n", pass(e == f))).collect(),
        Format::Csv => {
            let mut s = String::from("record,exact,formula,agree\n");
            for (i, (e, f)) in results.iter().enumerate() {
                writeln!(s, "{},{e},{f},{}", i + 1, e == f).unwrap();
            }
            s
        }
        Format::Json => json_body(json!(results
            .iter()
            .map(|(e, f)| json!({ "exact": e, "formula": f, "agree": e == f }))
            .collect::<Vec<_>>())),
    };
    Ok(Report { body, ok })
}

/// Graph-side and linear-side verdicts for one sub-arrangement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralityCheck {
    pub conflict: bool,
    pub graph_central: bool,
    pub linear_central: bool,
    pub graph_rank: Option<usize>,
    pub linear_rank: usize,
    pub graph_cardinality: Option<usize>,
    pub size: usize,
}

impl CentralityCheck {
    pub fn of(s: &Subarrangement) -> Result<Self> {
        let linear_central = s.is_central_linear();
        let linear_rank = s.rank_linear();
        Ok(match s.to_colored_graph()? {
            GraphImage::Conflict => CentralityCheck {
                conflict: true,
                graph_central: false,
                linear_central,
                graph_rank: None,
                linear_rank,
                graph_cardinality: None,
                size: s.len(),
            },
            GraphImage::Graph(g) => CentralityCheck {
                conflict: false,
                graph_central: g.is_central(),
                linear_central,
                graph_rank: Some(rank_formula(&g)),
                linear_rank,
                graph_cardinality: Some(g.cardinality()),
                size: s.len(),
            },
        })
    }

    /// Agreement of centrality, and of rank and size where a graph exists.
    pub fn agrees(&self) -> bool {
        if self.conflict {
            return !self.linear_central;
        }
        self.graph_central == self.linear_central
            && self.graph_rank == Some(self.linear_rank)
            && self.graph_cardinality == Some(self.size)
    }
}

fn cmd_central(text: &str, format: Format) -> Result<Report> {
    let s = Subarrangement::parse(text)?;
    let c = CentralityCheck::of(&s)?;
    let ok = c.agrees();
    let graph = if c.conflict { "CONFLICT".to_string() } else { c.graph_central.to_string() };
    let body = match format {
        Format::Text => format!(
            "graph={graph} linear={} rank_graph={} rank_linear={} {}\n",
            c.linear_central,
            c.graph_rank.map_or("-".into(), |r| r.to_string()),
            c.linear_rank,
            pass(ok)
        ),
        Format::Csv => format!(
            "graph,linear,rank_graph,rank_linear,agree\n{graph},{},{},{},{ok}\n",
            c.linear_central,
            c.graph_rank.map_or(String::new(), |r| r.to_string()),
            c.linear_rank
        ),
        Format::Json => json_body(json!({
            "graph": graph,
            "linear": c.linear_central,
            "rank_graph": c.graph_rank,
            "rank_linear": c.linear_rank,
            "agree": ok,
        })),
    };
    Ok(Report { body, ok })
}

fn cmd_ffcheck(n: usize, primes: &[u64], format: Format, limits: &Limits) -> Result<Report> {
    positive(n)?;
    let p = charpoly_census(n, limits)?;
    let mut rows = Vec::new();
    for &q in primes {
        let points = finite_field_count(n, q, limits)?;
        let value = p.eval_i64(q as i64);
        rows.push((q, value.clone(), points, value == points.into()));
    }
    let ok = rows.iter().all(|r| r.3);
    let body = match format {
        Format::Text => {
            let mut s = format!("n = {n}, chi = {p}\n");
            for (q, v, pts, agree) in &rows {
                writeln!(s, "q={q} chi(q)={v} points={pts} {}", pass(*agree)).unwrap();
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("q,chi_q,points,agree\n");
            for (q, v, pts, agree) in &rows {
                writeln!(s, "{q},{v},{pts},{agree}").unwrap();
            }
            s
        }
        Format::Json => json_body(json!({
            "n": n,
            "polynomial": p.to_string(),
            "coefficients": coeff_strings(&p),
            "checks": rows.iter().map(|(q, v, pts, agree)| json!({
                "q": q, "chi_q": v.to_string(), "points": pts, "agree": agree
            })).collect::<Vec<_>>(),
            "agree": ok,
        })),
    };
    Ok(Report { body, ok })
}

#[derive(Debug, Clone)]
struct Check {
    name: String,
    status: Status,
}

#[derive(Debug, Clone)]
enum Status {
    Pass(String),
    Fail(String),
    Skip(String),
}

/// Random colored graph on `n` vertices: each edge present with
/// probability 1/2, each color uniform.
pub fn random_colored_graph(rng: &mut impl Rng, n: usize) -> ColoredGraph {
    let colors = (0..n)
        .map(|_| match rng.gen_range(0..3) {
            0 => Color::Colorless,
            1 => Color::Plus,
            _ => Color::Minus,
        })
        .collect();
    let edges: Vec<(usize, usize)> = lex_pairs(n).into_iter().filter(|_| rng.gen_bool(0.5)).collect();
    ColoredGraph::new(n, colors, edges).expect("generated graph is valid")
}

fn verify_rank_exhaustive(m: usize, limits: &Limits, jobs: usize) -> Result<Status> {
    let graphs = enumerate_colored_graphs(m, limits)?;
    let total = graphs.len();
    let bad = find_first(total, jobs, |i| {
        let g = graphs.get(i);
        let exact = rank_exact(&build_cincidence(&g));
        let formula = rank_formula(&g);
        (exact != formula).then_some((g, exact, formula))
    });
    Ok(match bad {
        None => Status::Pass(format!("{total} graphs")),
        Some((i, (g, e, f))) => Status::Fail(format!("graph #{i}: exact={e} formula={f}\n{g}")),
    })
}

fn verify_centrality(m: usize, limits: &Limits, jobs: usize) -> Result<Status> {
    let walls = build_jn(m);
    let count = 1u128 << walls.len();
    check_budget("wall subset sweep", count, limits.subsets)?;
    let bad = find_first(count as u64, jobs, |mask| {
        let s = Subarrangement::from_mask(m, &walls, mask).expect("walls of J_n are valid");
        let c = CentralityCheck::of(&s).expect("no diagonal walls");
        (!c.agrees()).then_some((s, c))
    });
    Ok(match bad {
        None => Status::Pass(format!("{count} subsets")),
        Some((mask, (s, c))) => Status::Fail(format!("subset #{mask}: {c:?}\n{s}")),
    })
}

fn budget_gate(result: Result<Status>) -> Result<Status> {
    match result {
        Err(Error::BudgetExceeded { what, size, budget }) => {
            Ok(Status::Skip(format!("{what}: {size} items over budget {budget}")))
        }
        other => other,
    }
}

fn cmd_verify(n: usize, seed: u64, samples: usize, format: Format, limits: &Limits, jobs: usize) -> Result<Report> {
    positive(n)?;
    if n > limits.census_n {
        return Err(Error::LimitExceeded { what: "verify", n, limit: limits.census_n });
    }
    let mut checks = Vec::new();
    let mut push = |name: String, status: Status| checks.push(Check { name, status });
    let opts = SweepOptions { limits: *limits, jobs, include_diagonal: false };
    let engine = CensusEngine::up_to(n);

    for m in 1..=n {
        push(format!("rank exhaustive n={m}"), budget_gate(verify_rank_exhaustive(m, limits, jobs))?);
    }
    if samples > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let graphs: Vec<ColoredGraph> = (0..samples)
            .map(|_| {
                let m = rng.gen_range(6..=9);
                random_colored_graph(&mut rng, m)
            })
            .collect();
        let bad = find_first(graphs.len() as u64, jobs, |i| {
            let g = &graphs[i as usize];
            let (e, f) = (rank_exact(&build_cincidence(g)), rank_formula(g));
            (e != f).then_some((e, f))
        });
        let status = match bad {
            None => Status::Pass(format!("{samples} graphs, seed {seed}")),
            Some((i, (e, f))) => Status::Fail(format!("sample #{i}: exact={e} formula={f}\n{}", graphs[i as usize])),
        };
        push("rank random 6<=n<=9".into(), status);
    }
    for m in 1..=n {
        push(format!("centrality correspondence n={m}"), budget_gate(verify_centrality(m, limits, jobs))?);
    }

    let census = charpoly_census(n, limits)?;
    for (name, route) in [
        ("bruteforce", charpoly_bruteforce(n, &opts)),
        ("graph", charpoly_graph(n, &opts)),
    ] {
        let status = budget_gate(route.map(|p| {
            if p == census {
                Status::Pass(p.to_string())
            } else {
                Status::Fail(format!("{name}={p} census={census}"))
            }
        }))?;
        push(format!("charpoly {name} = census n={n}"), status);
    }

    for k in 1..=n {
        let status = budget_gate(third_kind_bruteforce_table(k, limits, jobs).map(|table| {
            let max_s = k * (k - 1) / 2 + k;
            match (0..=max_s).find(|&s| engine.nu_third(k, s) != BigUint::from(table.get(&s).copied().unwrap_or(0))) {
                None => Status::Pass(format!("s <= {max_s}")),
                Some(s) => Status::Fail(format!(
                    "k={k} s={s}: formula={} bruteforce={}",
                    engine.nu_third(k, s),
                    table.get(&s).copied().unwrap_or(0)
                )),
            }
        }))?;
        push(format!("third-kind counts k={k}"), status);
    }
    for k in 1..=n {
        let status = budget_gate(simple_graph_bruteforce_counts(k, limits).map(|(conn, bip)| {
            let max_s = k * (k - 1) / 2;
            let bad = (0..=max_s).find(|&s| {
                engine.nu_connected(k, s) != BigUint::from(conn.get(&s).copied().unwrap_or(0))
                    || engine.nu_bipartite_connected(k, s) != BigUint::from(bip.get(&s).copied().unwrap_or(0))
            });
            match bad {
                None => Status::Pass(format!("s <= {max_s}")),
                Some(s) => Status::Fail(format!("k={k} s={s}")),
            }
        }))?;
        push(format!("connected/bipartite counts k={k}"), status);
    }
    for m in 1..=n {
        let status = budget_gate(gamma_bruteforce_table(m, limits, jobs).map(|brute| {
            let diff = engine.gamma_table(m).diff(&brute);
            match diff.first() {
                None => Status::Pass(format!("{} entries", brute.iter().count())),
                Some(((k, s), a, b)) => Status::Fail(format!("k={k} s={s}: census={a} bruteforce={b}")),
            }
        }))?;
        push(format!("gamma census = bruteforce n={m}"), status);
    }
    for m in 1..=n {
        let p = charpoly_census(m, limits)?;
        for q in [5u64, 7, 11, 13] {
            let status = budget_gate(finite_field_count(m, q, limits).map(|points| {
                let v = p.eval_i64(q as i64);
                if v == points.into() {
                    Status::Pass(format!("{points} points"))
                } else {
                    Status::Fail(format!("chi({q})={v} points={points}"))
                }
            }))?;
            push(format!("finite field n={m} q={q}"), status);
        }
    }
    let p = census;
    let ch = chambers(&p, n)?;
    let bd = bounded_chambers(&p, full_rank(n)?)?;

    let ok = checks.iter().all(|c| !matches!(c.status, Status::Fail(_)));
    let body = match format {
        Format::Text => {
            let mut s = String::new();
            for c in &checks {
                match &c.status {
                    Status::Pass(d) => writeln!(s, "PASS {} ({})", c.name, first_line(d)).unwrap(),
                    Status::Skip(d) => writeln!(s, "SKIP {} ({d})", c.name).unwrap(),
                    Status::Fail(d) => writeln!(s, "FAIL {}: {d}", c.name).unwrap(),
                }
            }
            writeln!(s, "chi = {p}, chambers = {ch}, bounded = {bd}").unwrap();
            writeln!(s, "verify: {}", pass(ok)).unwrap();
            s
        }
        Format::Csv => {
            let mut s = String::from("check,status,detail\n");
            for c in &checks {
                let (st, d) = match &c.status {
                    Status::Pass(d) => ("PASS", d),
                    Status::Skip(d) => ("SKIP", d),
                    Status::Fail(d) => ("FAIL", d),
                };
                writeln!(s, "{},{st},\"{}\"", c.name, d.replace('\n', "; ").replace('"', "'")).unwrap();
            }
            s
        }
        Format::Json => json_body(json!({
            "n": n,
            "checks": checks.iter().map(|c| {
                let (st, d) = match &c.status {
                    Status::Pass(d) => ("PASS", d),
                    Status::Skip(d) => ("SKIP", d),
                    Status::Fail(d) => ("FAIL", d),
                };
                json!({ "check": c.name, "status": st, "detail": d })
            }).collect::<Vec<_>>(),
            "polynomial": p.to_string(),
            "chambers": ch.to_string(),
            "bounded_chambers": bd.to_string(),
            "ok": ok,
        })),
    };
    Ok(Report { body, ok })
}

fn first_line(s: &str) -> &str {
    s.lines().next().unwrap_or("")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_args(std::iter::once("jarr").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn charpoly_all_n2() {
        let (code, out, _) = run_str(&["charpoly", "--n", "2", "--method", "all"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.matches("t^2 - 5t + 6  chambers=12 bounded=2").count(), 3);
        assert!(out.contains("agreement: PASS"));
    }

    #[test]
    fn invalid_config_exits_2() {
        assert_eq!(run_str(&["charpoly", "--n", "0"]).0, EXIT_INVALID);
        assert_eq!(run_str(&["charpoly"]).0, EXIT_INVALID);
        assert_eq!(run_str(&["charpoly", "--n", "7", "--method", "bruteforce"]).0, EXIT_INVALID);
        assert_eq!(run_str(&["ffcheck", "--n", "2", "--primes", "4"]).0, EXIT_INVALID);
        assert_eq!(run_str(&["verify", "--n", "2", "--jobs", "0"]).0, EXIT_INVALID);
        assert_eq!(run_str(&["rank", "/nonexistent/graph.txt"]).0, EXIT_INVALID);
    }

    #[test]
    fn counts_variants_report_both() {
        let (code, out, _) = run_str(&["counts", "--kind", "third", "--k", "3", "--oracle", "--variants"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("s third shifted bruteforce"));
        assert!(out.contains("oracle: PASS"));
        assert!(out.contains("shifted reading: FAILS"));
    }
}
