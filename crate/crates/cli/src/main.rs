//! `ramsey`: command-line driver for the Ramsey toolkit.
//!
//! Exit codes: 0 success, 1 bad input, 2 validation failure or non-exact
//! result, 3 oracle insufficient.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use ramsey_core::constructions::{
    biclique_path_graph, build_g, clique_path_graph, double_star, multipartite_path_graph, select_t_case1,
    select_t_case2, Preset, RamseyOracle,
};
use ramsey_core::engine::{
    find_mono_copy, local_search_witness, path_edge_expression, path_ramsey_oracle, ramsey_number_with, EngineConfig,
    ResultRecord, SearchBudget, WitnessSearch,
};
use ramsey_core::extraction::{extract_case1_traced, extract_case2_traced, Trace, TraceOutcome};
use ramsey_core::graph::{parse_graph6, write_graph6};
use ramsey_core::lower_bounds::{r3_lower_bound, random_biclique_witness, witness_text};
use ramsey_core::spectrum::{check_interval_inclusion, spectrum, Ratio};
use ramsey_core::{ConstructionError, EdgeColouring, Graph, LowerBoundError, OracleError};

#[derive(Parser)]
#[command(name = "ramsey", version, about = "Exact small Ramsey numbers, constructions and certificates")]
struct Cli {
    /// Worker threads for the engine (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Directory holding the oracle ledger.
    #[arg(long, global = true, env = "RAMSEY_CACHE")]
    cache: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Two- or three-colour Ramsey number of a pattern.
    Ramsey(RamseyArgs),
    /// Build the n-vertex graph for a growth function f.
    Construct(ConstructArgs),
    /// Run an extraction pipeline on a two-colouring.
    Extract(ExtractArgs),
    /// Produce a witness colouring.
    Witness {
        #[command(subcommand)]
        kind: WitnessKind,
    },
    /// Ramsey values of all graphs on n vertices.
    Spectrum(SpectrumArgs),
    /// Replay a colouring, trace or result record.
    Verify(VerifyArgs),
}

#[derive(Args, Clone)]
struct BudgetArgs {
    /// Pair assignments before the search gives up.
    #[arg(long, default_value_t = 100_000_000)]
    max_nodes: u64,
    /// Wall-clock limit in seconds.
    #[arg(long, default_value_t = 600.0)]
    max_seconds: f64,
}

impl BudgetArgs {
    fn config(&self, seed: Option<u64>) -> Result<EngineConfig> {
        if self.max_nodes == 0 || self.max_seconds.is_nan() || self.max_seconds <= 0.0 {
            bail!("budget must be positive");
        }
        let mut cfg = EngineConfig::with_budget(SearchBudget::new(self.max_nodes, self.max_seconds));
        cfg.witness_search = seed.map(|seed| WitnessSearch {
            seed,
            ..WitnessSearch::default()
        });
        Ok(cfg)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    Path,
    Cycle,
    Clique,
    Star,
    Biclique,
    DoubleStar,
    Empty,
}

#[derive(Args)]
struct RamseyArgs {
    /// Pattern in graph6.
    #[arg(long, conflicts_with = "family")]
    pattern: Option<String>,
    #[arg(long, requires = "v")]
    family: Option<FamilyName>,
    /// Family size: vertices for path/cycle/clique/empty, leaves for star,
    /// first side for biclique and double-star.
    #[arg(long)]
    v: Option<usize>,
    /// Second side for biclique and double-star (default: v).
    #[arg(long)]
    b: Option<usize>,
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(2..=3))]
    colours: u8,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Enables seeded local search for lower bounds when the budget runs out.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Variant {
    Auto,
    Case1,
    Case2,
    Multipartite,
}

#[derive(Args)]
struct ConstructArgs {
    /// f=n, f=2nlog2n or f=2^{n/8}.
    #[arg(long, conflicts_with = "f", value_parser = parse_preset)]
    preset: Option<Preset>,
    /// Table file with lines `n f(n)`.
    #[arg(long)]
    f: Option<PathBuf>,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Variant::Auto)]
    variant: Variant,
    /// Number of parts (multipartite variant).
    #[arg(long)]
    k: Option<usize>,
    /// Part size (multipartite variant).
    #[arg(long)]
    t: Option<usize>,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Args)]
struct ExtractArgs {
    /// Colouring file in the text format.
    #[arg(long, conflicts_with = "random")]
    colouring: Option<PathBuf>,
    /// Use a random two-colouring of K_N instead (needs --seed).
    #[arg(long, requires = "seed")]
    random: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long = "case", value_parser = clap::value_parser!(u8).range(1..=2))]
    case: u8,
    #[arg(long)]
    t: usize,
    #[arg(long)]
    n: usize,
    /// Write the trace here instead of stdout.
    #[arg(long)]
    trace_out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum WitnessKind {
    /// Random two-colouring of K_N without a monochromatic K_{t,t}.
    Biclique {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        tries: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Local search for a colouring of K_N without a monochromatic pattern.
    Search {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(2..=3))]
        colours: u8,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 200_000)]
        steps: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Blocked three-colouring without a monochromatic G, built from H inside G.
    Blocked {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SpectrumArgs {
    #[arg(long)]
    n: usize,
    /// Gap ratio, as p/q or a decimal.
    #[arg(long, default_value = "3/2")]
    c: Ratio,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Enables seeded local search for lower bounds of unresolved classes.
    #[arg(long)]
    seed: Option<u64>,
    /// Also check the double-star interval for graphs on this many vertices.
    #[arg(long)]
    inclusion: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    file: PathBuf,
    /// Pattern for a colouring file without a header.
    #[arg(long)]
    pattern: Option<String>,
}

enum Status {
    Ok,
    Invalid,
    Insufficient,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(&cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Invalid) => ExitCode::from(2),
        Ok(Status::Insufficient) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<Status> {
    match &cli.command {
        Command::Ramsey(a) => ramsey(a),
        Command::Construct(a) => construct(a, cli.cache.as_deref()),
        Command::Extract(a) => extract(a),
        Command::Witness { kind } => witness(kind, cli.cache.as_deref()),
        Command::Spectrum(a) => run_spectrum(a),
        Command::Verify(a) => verify(a),
    }
}

fn graph6(text: &str) -> Result<Graph> {
    parse_graph6(text.trim()).with_context(|| format!("invalid graph6 {text:?}"))
}

fn family_pattern(f: FamilyName, v: usize, b: Option<usize>) -> Result<Graph> {
    let b = b.unwrap_or(v);
    let too_big = |n: usize| n > 64;
    let g = match f {
        FamilyName::Path if (1..=64).contains(&v) => Graph::path(v),
        FamilyName::Cycle if (3..=64).contains(&v) => Graph::cycle(v),
        FamilyName::Clique if (1..=64).contains(&v) => Graph::complete(v),
        FamilyName::Empty if (1..=64).contains(&v) => Graph::empty(v),
        FamilyName::Star if v < 64 => Graph::star(v),
        FamilyName::Biclique if v >= 1 && b >= 1 && !too_big(v + b) => Graph::complete_bipartite(v, b),
        FamilyName::DoubleStar if !too_big(v + b + 2) => double_star(v, b)?,
        _ => bail!("family size out of range"),
    };
    Ok(g)
}

fn ramsey(a: &RamseyArgs) -> Result<Status> {
    let pattern = match (&a.pattern, a.family) {
        (Some(p), _) => graph6(p)?,
        (None, Some(f)) => family_pattern(f, a.v.expect("required by clap"), a.b)?,
        (None, None) => bail!("give --pattern or --family"),
    };
    if pattern.n() == 0 {
        bail!("pattern must have at least one vertex");
    }
    let cfg = a.budget.config(a.seed)?;
    let res = ramsey_number_with(&pattern, a.colours, &cfg)?;
    match res.value() {
        Some(v) => println!("exact {v}"),
        None => println!("interval {} {}", res.lo, res.hi.map_or("inf".into(), |h| h.to_string())),
    }
    println!("{}", serde_json::to_string(&res.record(&pattern, a.colours))?);
    if matches!(a.family, Some(FamilyName::Path)) && pattern.n() >= 2 && a.colours == 2 {
        let v = pattern.n();
        let m = v - 1;
        let law = path_ramsey_oracle(v);
        let expr = path_edge_expression(m);
        println!("path_law {law}");
        if expr == law {
            println!("edge_expression {expr} m={m}");
        } else {
            println!("edge_expression {expr} m={m} DISCREPANCY");
        }
    }
    Ok(if res.exact() { Status::Ok } else { Status::Invalid })
}

fn parse_preset(s: &str) -> Result<Preset, String> {
    match s.replace(' ', "").as_str() {
        "f=n" | "n" => Ok(Preset::Linear),
        "f=2nlog2n" | "2nlog2n" => Ok(Preset::TwoNLogN),
        "f=2^{n/8}" | "f=2^(n/8)" | "2^{n/8}" => Ok(Preset::Exponential),
        _ => Err(format!("unknown preset {s:?} (f=n, f=2nlog2n, f=2^{{n/8}})")),
    }
}

fn read_f_table(path: &Path) -> Result<BTreeMap<usize, u64>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut table = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        let (Some(n), Some(f), None) = (it.next(), it.next(), it.next()) else {
            bail!("{}:{}: expected `n f`", path.display(), i + 1);
        };
        let n: usize = n.parse().with_context(|| format!("{}:{}: bad n", path.display(), i + 1))?;
        let f: u64 = f.parse().with_context(|| format!("{}:{}: bad f", path.display(), i + 1))?;
        if table.insert(n, f).is_some() {
            bail!("{}:{}: duplicate n = {n}", path.display(), i + 1);
        }
    }
    Ok(table)
}

fn make_oracle(budget: &BudgetArgs, cache: Option<&Path>) -> Result<RamseyOracle> {
    let oracle = RamseyOracle::new(budget.config(None)?);
    Ok(match cache {
        Some(dir) => oracle.with_cache_dir(dir)?,
        None => oracle,
    })
}

fn print_oracle(oracle: &RamseyOracle) {
    for ((family, t), r) in oracle.snapshot().iter() {
        let hi = r.hi.map_or("inf".into(), |h| h.to_string());
        println!("oracle {} {} {} {}", family.name(*t), r.lo, hi, r.upper_certificate);
    }
}

fn construct(a: &ConstructArgs, cache: Option<&Path>) -> Result<Status> {
    if a.variant == Variant::Multipartite {
        let (Some(k), Some(t)) = (a.k, a.t) else {
            bail!("the multipartite variant needs --k and --t");
        };
        let g = match multipartite_path_graph(k, t, a.n) {
            Ok(g) => g,
            Err(e) => {
                println!("INVALID {e}");
                return Ok(Status::Invalid);
            }
        };
        println!("graph6 {}", write_graph6(&g));
        println!("n {}\nvariant multipartite\nk {k}\nt {t}", a.n);
        return Ok(Status::Ok);
    }
    let table = match (&a.preset, &a.f) {
        (Some(p), _) => p.table(a.n),
        (None, Some(path)) => read_f_table(path)?,
        (None, None) => bail!("give --preset or --f"),
    };
    let oracle = make_oracle(&a.budget, cache)?;
    let built = match a.variant {
        Variant::Auto => build_g(&table, a.n, &oracle).map(|b| (b.graph, b.t, format!("{:?}", b.case), format!("{:?}", b.regime), b.fn_value)),
        Variant::Case1 | Variant::Case2 => {
            let f = *table.get(&a.n).ok_or_else(|| anyhow!("f({}) missing from the table", a.n))?;
            let r = if a.variant == Variant::Case1 {
                select_t_case1(f, &oracle)
                    .map_err(ConstructionError::from)
                    .and_then(|t| Ok((biclique_path_graph(t, a.n)?, t, "One")))
            } else {
                select_t_case2(f, &oracle)
                    .map_err(ConstructionError::from)
                    .and_then(|t| Ok((clique_path_graph(t, a.n)?, t, "Two")))
            };
            r.map(|(g, t, case)| (g, t, case.to_string(), "Forced".to_string(), f))
        }
        Variant::Multipartite => unreachable!(),
    };
    let status = match built {
        Ok((g, t, case, regime, f)) => {
            println!("graph6 {}", write_graph6(&g));
            println!("n {}\ncase {case}\nregime {regime}\nt {t}\nf {f}", a.n);
            Status::Ok
        }
        Err(ConstructionError::Oracle(OracleError::Insufficient(s))) => {
            println!("ORACLE_INSUFFICIENT {s}");
            Status::Insufficient
        }
        Err(ConstructionError::Oracle(e)) => return Err(e.into()),
        Err(e) => {
            println!("INVALID {e}");
            Status::Invalid
        }
    };
    print_oracle(&oracle);
    Ok(status)
}

fn read_colouring(path: &Path) -> Result<(String, EdgeColouring)> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let c = text.parse().with_context(|| format!("parsing colouring {}", path.display()))?;
    Ok((text, c))
}

fn extract(a: &ExtractArgs) -> Result<Status> {
    let c = match (&a.colouring, a.random) {
        (Some(path), _) => read_colouring(path)?.1,
        (None, Some(n)) => EdgeColouring::random(n, 2, a.seed.expect("required by clap"))?,
        (None, None) => bail!("give --colouring or --random"),
    };
    if c.colours() != 2 || c.n() < 2 {
        bail!("extraction needs a two-colouring of K_N with N >= 2");
    }
    let (res, trace) = match a.case {
        1 if a.t >= 1 && a.n >= 2 * a.t => extract_case1_traced(&c, a.t, a.n),
        2 if a.t >= 1 && a.n >= a.t => extract_case2_traced(&c, a.t, a.n),
        _ => bail!("case 1 needs n >= 2t >= 2, case 2 needs n >= t >= 1"),
    };
    match &res {
        Ok(m) => println!("EMBEDDING colour {} map {:?}", m.colour, m.embedding.map),
        Err(f) => println!("FAILURE {}", f.name()),
    }
    let json = trace.to_json();
    match &a.trace_out {
        Some(path) => fs::write(path, json + "\n").with_context(|| format!("writing {}", path.display()))?,
        None => println!("{json}"),
    }
    Ok(Status::Ok)
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn witness(kind: &WitnessKind, cache: Option<&Path>) -> Result<Status> {
    match kind {
        WitnessKind::Biclique { t, n, seed, tries, out } => {
            if *t == 0 || !(1..=64).contains(n) {
                bail!("need t >= 1 and 1 <= N <= 64");
            }
            match random_biclique_witness(*t, *n, *seed, *tries) {
                Some(c) => emit(&witness_text(&c, &Graph::complete_bipartite(*t, *t)), out.as_deref())?,
                None => {
                    println!("NONE");
                    return Ok(Status::Invalid);
                }
            }
        }
        WitnessKind::Search {
            pattern,
            n,
            colours,
            seed,
            steps,
            out,
        } => {
            let p = graph6(pattern)?;
            if !(1..=64).contains(n) {
                bail!("need 1 <= N <= 64");
            }
            let params = WitnessSearch {
                seed: *seed,
                max_steps: *steps,
            };
            match local_search_witness(*n, *colours, &p, &params) {
                Some(c) => emit(&witness_text(&c, &p), out.as_deref())?,
                None => {
                    println!("NONE");
                    return Ok(Status::Invalid);
                }
            }
        }
        WitnessKind::Blocked { g, h, budget, out } => {
            let (g, h) = (graph6(g)?, graph6(h)?);
            let oracle = make_oracle(budget, cache)?;
            match r3_lower_bound(&g, &h, &oracle) {
                Ok(b) => {
                    eprintln!("chi(H) = {}, R_2(H) = {}, R_3(G) >= {}", b.chi_h, b.r2_h, b.value);
                    emit(&witness_text(&b.witness, &g), out.as_deref())?;
                }
                Err(LowerBoundError::Oracle(OracleError::Insufficient(s))) => {
                    println!("ORACLE_INSUFFICIENT {s}");
                    return Ok(Status::Insufficient);
                }
                Err(LowerBoundError::Oracle(e)) => return Err(e.into()),
                Err(e) => {
                    println!("INVALID {e}");
                    return Ok(Status::Invalid);
                }
            }
        }
    }
    Ok(Status::Ok)
}

fn run_spectrum(a: &SpectrumArgs) -> Result<Status> {
    if !(1..=6).contains(&a.n) {
        bail!("spectrum supports 1 <= n <= 6");
    }
    if a.c.num <= a.c.den {
        bail!("c must exceed 1");
    }
    let cfg = a.budget.config(a.seed)?;
    print!("{}", spectrum(a.n, &cfg).render(a.c));
    let mut status = Status::Ok;
    if let Some(m) = a.inclusion {
        if !(1..=64).contains(&m) {
            bail!("inclusion order must be in 1..=64");
        }
        let rep = check_interval_inclusion(m, &cfg);
        println!("inclusion n={} interval [{}, {}]", rep.n, rep.lo, rep.hi);
        for e in &rep.entries {
            println!("inclusion {} a={} i={} {} {}", e.value, e.a, e.i, e.graph6, e.status);
        }
        println!("inclusion {}", if rep.passed() { "PASS" } else { "FAIL" });
        if !rep.passed() {
            status = Status::Invalid;
        }
    }
    Ok(status)
}

fn verify(a: &VerifyArgs) -> Result<Status> {
    let text = fs::read_to_string(&a.file).with_context(|| format!("reading {}", a.file.display()))?;
    let verdict = if text.trim_start().starts_with('{') {
        let value: serde_json::Value = serde_json::from_str(&text).context("parsing JSON")?;
        if value.get("outcome").is_some() {
            let trace = Trace::from_json(&text).map_err(|e| anyhow!("parsing trace: {e}"))?;
            let what = match &trace.outcome {
                TraceOutcome::Embedding(_) => "embedding".to_string(),
                TraceOutcome::Failure(f) => f.name().to_string(),
            };
            trace.verify().map(|()| format!("trace {what}"))
        } else {
            let rec: ResultRecord = serde_json::from_value(value).context("parsing result record")?;
            verify_record(&rec)?
        }
    } else {
        let c: EdgeColouring = text.parse().context("parsing colouring")?;
        verify_colouring(&text, &c, a.pattern.as_deref())?
    };
    match verdict {
        Ok(what) => {
            println!("VALID {what}");
            Ok(Status::Ok)
        }
        Err(why) => {
            println!("INVALID {why}");
            Ok(Status::Invalid)
        }
    }
}

fn no_mono(c: &EdgeColouring, p: &Graph) -> Result<(), String> {
    match find_mono_copy(c, p) {
        None => Ok(()),
        Some((colour, e)) => Err(format!("monochromatic copy in colour {colour} at {:?}", e.map)),
    }
}

fn verify_record(rec: &ResultRecord) -> Result<Result<String, String>> {
    let p = graph6(&rec.pattern)?;
    if rec.exact != (rec.hi == Some(rec.lo)) {
        return Ok(Err("exact flag disagrees with the interval".into()));
    }
    let Some(w) = &rec.witness else {
        return Ok(Ok("record (no witness)".into()));
    };
    let c: EdgeColouring = w.parse().context("parsing record witness")?;
    if c.n() + 1 != rec.lo || c.colours() != rec.colours {
        return Ok(Err(format!("witness on K_{} with {} colours does not match lo = {}", c.n(), c.colours(), rec.lo)));
    }
    Ok(no_mono(&c, &p).map(|()| format!("record witness R >= {}", rec.lo)))
}

fn verify_colouring(text: &str, c: &EdgeColouring, pattern: Option<&str>) -> Result<Result<String, String>> {
    let mut header_pattern = None;
    let mut header_bound = None;
    for line in text.lines().map(str::trim).filter(|l| l.starts_with('#')) {
        let body = line.trim_start_matches('#').trim();
        if let Some(g) = body.strip_prefix("no monochromatic ") {
            header_pattern = Some(g.trim().to_string());
        } else if let Some((lhs, k)) = body.split_once(">=") {
            let r = lhs.trim().strip_prefix("R_").and_then(|s| s.split('(').next()).and_then(|s| s.parse::<u8>().ok());
            header_bound = Some((r, k.trim().parse::<usize>().ok()));
        }
    }
    let Some(p) = pattern.map(str::to_string).or(header_pattern) else {
        bail!("no pattern: pass --pattern or use a witness header");
    };
    let p = graph6(&p)?;
    if let Some((r, k)) = header_bound {
        if r != Some(c.colours()) || k != Some(c.n() + 1) {
            return Ok(Err("header bound does not match the colouring".into()));
        }
    }
    Ok(no_mono(c, &p).map(|()| format!("R_{}({}) >= {}", c.colours(), write_graph6(&p), c.n() + 1)))
}
