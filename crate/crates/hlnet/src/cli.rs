//! The `hlnet` command line.
//!
//! ```text
//! hlnet eg --g-max 16
//! hlnet cut --n 8 --recipe random:seed=7 --g 16 --cut f.txt
//! hlnet oracle-eg --n 3 --recipe g84 --g-all
//! hlnet suite --g-max 4096 --n-max 24 --format csv
//! ```
//!
//! Exit codes: 0 when every check passes, 1 when one fails, 2 on usage
//! errors (including domain violations in strict mode), 3 when an oracle ran
//! out of budget.

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use hlnet_core::ms::build_component_cut_in;
use hlnet_core::oracle::{SearchLimits, SearchStatus};
use hlnet_core::topology::induced_edge_count;
use hlnet_core::{algorithm_ms, c_lambda, e_g, g84, hypercube, materialize, random_hl, verify_cut, CLambdaMode, HlError, Recipe};

use crate::error::{Error, Result};
use crate::report::{emit_report, ReportFormat, ReportRow};
use crate::suite::{gap_status, run_suite, SuiteConfig};
use crate::{edgelist, parallel, recipe_file};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Write a recipe document (and optionally its edge list).
    Gen,
    /// Tabulate e_g over a range of g.
    Eg,
    /// Build the component cut for one g and report on it.
    Cut,
    /// Load a graph and a cut edge list and report the components left behind.
    Verify,
    /// Brute-force maximum induced edges against e_g.
    OracleEg,
    /// Brute-force minimum component cuts against n g - e_g.
    OracleClambda,
    /// Run the property suite.
    Suite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum ModeArg {
    #[default]
    Strict,
    Permissive,
}

impl From<ModeArg> for CLambdaMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Strict => CLambdaMode::Strict,
            ModeArg::Permissive => CLambdaMode::Permissive,
        }
    }
}

/// Where a network comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RecipeSource {
    Hypercube,
    G84,
    /// `random` takes its seed from `--seed`; `random:seed=N` fixes it.
    Random { seed: Option<u64> },
    File(PathBuf),
}

impl FromStr for RecipeSource {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "hypercube" => Ok(RecipeSource::Hypercube),
            "g84" => Ok(RecipeSource::G84),
            "random" => Ok(RecipeSource::Random { seed: None }),
            _ => {
                if let Some(rest) = s.strip_prefix("random:seed=") {
                    let seed = rest.parse().map_err(|_| format!("bad seed in {s:?}"))?;
                    Ok(RecipeSource::Random { seed: Some(seed) })
                } else if let Some(path) = s.strip_prefix("file:") {
                    Ok(RecipeSource::File(path.into()))
                } else {
                    Err(format!("unknown recipe {s:?}; expected hypercube, g84, random, random:seed=N or file:PATH"))
                }
            }
        }
    }
}

#[derive(Debug, Clone, Parser)]
#[command(name = "hlnet", version, about = "Extremal subgraphs and component cuts in hypercube-like networks")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Dimension.
    #[arg(long, global = true)]
    pub n: Option<u32>,

    /// A single g.
    #[arg(long, global = true, conflicts_with_all = ["g_max", "g_all"])]
    pub g: Option<u64>,

    /// Range 1..=G_MAX; for `suite`, the bound on the formula sweeps.
    #[arg(long, global = true)]
    pub g_max: Option<u64>,

    /// Every g from 1 to 2^n.
    #[arg(long, global = true)]
    pub g_all: bool,

    /// hypercube | g84 | random | random:seed=N | file:PATH
    #[arg(long, global = true, default_value = "hypercube")]
    pub recipe: RecipeSource,

    /// Seed for `random` recipes and the suite's random samples.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,

    #[arg(long, global = true, value_enum, default_value_t)]
    pub mode: ModeArg,

    #[arg(long, global = true, value_enum, default_value_t)]
    pub format: ReportFormat,

    /// Report destination (for `gen`, the recipe document); stdout otherwise.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Wall-clock budget for oracle searches, in seconds.
    #[arg(long, global = true)]
    pub time_budget: Option<f64>,

    /// For `suite`, the largest n of the slack sweep.
    #[arg(long, global = true)]
    pub n_max: Option<u32>,

    /// Graph edge list: written by `gen`, read by `verify`.
    #[arg(long, global = true)]
    pub graph: Option<PathBuf>,

    /// Cut edge list: written by `cut`, read by `verify`.
    #[arg(long, global = true)]
    pub cut: Option<PathBuf>,

    /// Fill the elapsed_ms column. Reports are then no longer reproducible.
    #[arg(long, global = true)]
    pub timings: bool,
}

/// Rows plus everything that decides the exit code.
#[derive(Debug, Default)]
struct Outcome {
    rows: Vec<ReportRow>,
    failed: bool,
    incomplete: bool,
}

impl Outcome {
    fn push(&mut self, row: ReportRow, ok: bool) {
        self.failed |= !ok || !row.is_consistent();
        self.rows.push(row);
    }

    fn exit_code(&self) -> i32 {
        if self.failed {
            EXIT_FAIL
        } else if self.incomplete {
            EXIT_BUDGET
        } else {
            EXIT_PASS
        }
    }
}

/// Parses `args` (program name first) and runs; parse failures print clap's
/// message and map to its exit code.
pub fn main_with_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(config) => run(&config, stdout, stderr),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            code
        }
    }
}

pub fn run(config: &RunConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    match dispatch(config, stderr) {
        Ok(mut outcome) => {
            if matches!(config.command, Command::Gen) {
                return outcome.exit_code();
            }
            outcome.rows.sort_by_key(|r| (r.n, r.g));
            match emit(config, &outcome.rows, stdout) {
                Ok(()) => outcome.exit_code(),
                Err(e) => {
                    let _ = writeln!(stderr, "error: {e}");
                    EXIT_FAIL
                }
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            match e {
                Error::Usage(_) | Error::Core(HlError::Domain(_)) => EXIT_USAGE,
                _ => EXIT_FAIL,
            }
        }
    }
}

fn emit(config: &RunConfig, rows: &[ReportRow], stdout: &mut dyn Write) -> Result<()> {
    let text = emit_report(rows, config.format)?;
    match &config.out {
        Some(path) => std::fs::write(path, text).map_err(|e| Error::io(path, e)),
        None => Ok(stdout.write_all(text.as_bytes())?),
    }
}

fn dispatch(config: &RunConfig, stderr: &mut dyn Write) -> Result<Outcome> {
    match config.command {
        Command::Gen => gen(config, stderr),
        Command::Eg => eg(config),
        Command::Cut => cut(config, stderr),
        Command::Verify => verify(config),
        Command::OracleEg => oracle_eg(config),
        Command::OracleClambda => oracle_clambda(config, stderr),
        Command::Suite => suite(config, stderr),
    }
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}

fn require_n(config: &RunConfig) -> Result<u32> {
    config.n.ok_or_else(|| usage(format!("{:?} needs --n", config.command)))
}

/// Builds the configured recipe. `--n` is required except for `g84`
/// (dimension 3) and files, where it is checked if given.
pub fn load_recipe(config: &RunConfig) -> Result<Recipe> {
    let recipe = match &config.recipe {
        RecipeSource::Hypercube => hypercube(require_n(config)?)?,
        RecipeSource::Random { seed } => random_hl(require_n(config)?, seed.unwrap_or(config.seed))?,
        RecipeSource::G84 => g84(),
        RecipeSource::File(path) => recipe_file::load_recipe(path)?,
    };
    match config.n {
        Some(n) if n != recipe.dim() => {
            Err(usage(format!("--n {n} does not match the recipe dimension {}", recipe.dim())))
        }
        _ => Ok(recipe),
    }
}

/// The g values selected by `--g`, `--g-max` or `--g-all` (which needs `n`).
fn g_values(config: &RunConfig, n: Option<u32>) -> Result<Vec<u64>> {
    if let Some(g) = config.g {
        return Ok(vec![g]);
    }
    if config.g_all {
        let n = n.ok_or_else(|| usage("--g-all needs a dimension"))?;
        if n > 24 {
            return Err(usage("--g-all is limited to n <= 24"));
        }
        return Ok((1..=1u64 << n).collect());
    }
    match config.g_max {
        Some(max) => Ok((1..=max).collect()),
        None => Err(usage("give one of --g, --g-max or --g-all")),
    }
}

fn limits(config: &RunConfig) -> Result<SearchLimits> {
    let mut limits = SearchLimits::unlimited();
    if let Some(secs) = config.time_budget {
        limits.time_budget =
            Some(Duration::try_from_secs_f64(secs).map_err(|_| usage(format!("bad --time-budget {secs}")))?);
    }
    Ok(limits)
}

/// `c_lambda` honoring `--mode`; prints the permissive-mode warning once
/// per run when a value falls outside the proven range.
fn clambda(config: &RunConfig, n: u32, g: u64, warned: &mut bool, stderr: &mut dyn Write) -> Result<u64> {
    let value = c_lambda(n, g, config.mode.into()).map_err(|e| match e {
        HlError::Domain(msg) if config.mode == ModeArg::Strict => {
            usage(format!("{msg} (pass --mode permissive to evaluate n g - e_g as an upper bound)"))
        }
        other => other.into(),
    })?;
    if !value.proven && !*warned {
        *warned = true;
        let _ = writeln!(
            stderr,
            "warning: permissive mode: n g - e_g is only an upper bound outside n >= 8, g <= 2^ceil(n/2)"
        );
    }
    Ok(value.value)
}

fn gen(config: &RunConfig, stderr: &mut dyn Write) -> Result<Outcome> {
    let recipe = load_recipe(config)?;
    match &config.out {
        Some(path) => recipe_file::save_recipe(&recipe, path)?,
        None if config.graph.is_none() => recipe_file::write_recipe(&recipe, std::io::stdout().lock())?,
        None => {}
    }
    if let Some(path) = &config.graph {
        let graph = materialize(&recipe)?;
        let file = File::create(path).map_err(|e| Error::io(path, e))?;
        let mut out = BufWriter::new(file);
        edgelist::write_graph(&graph, &mut out)?;
        out.flush().map_err(|e| Error::io(path, e))?;
        let _ = writeln!(stderr, "wrote {} ({} vertices, {} edges)", path.display(), graph.vertex_count(), graph.edge_count());
    }
    Ok(Outcome::default())
}

fn eg(config: &RunConfig) -> Result<Outcome> {
    let mut out = Outcome::default();
    let built = match config.n {
        Some(_) => {
            let recipe = load_recipe(config)?;
            let graph = materialize(&recipe)?;
            Some((recipe, graph))
        }
        None => None,
    };
    let n = built.as_ref().map(|(r, _)| r.dim());
    for g in g_values(config, n)? {
        let mut row = ReportRow::new("e_g", n.unwrap_or(0), g, e_g(g)?);
        if let Some((recipe, graph)) = &built {
            if g < recipe.vertex_count() {
                let trace = algorithm_ms(recipe, g)?;
                row.construction_value = Some(induced_edge_count(graph, &trace.union)?);
            }
        }
        row.status = if row.is_consistent() { "pass" } else { "fail" }.into();
        out.push(row, true);
    }
    Ok(out)
}

fn cut(config: &RunConfig, stderr: &mut dyn Write) -> Result<Outcome> {
    let recipe = load_recipe(config)?;
    let n = recipe.dim();
    let g = config.g.ok_or_else(|| usage("cut needs --g"))?;
    let mut warned = false;
    let predicted = clambda(config, n, g, &mut warned, stderr)?;
    let graph = materialize(&recipe)?;
    let edges = build_component_cut_in(&graph, &recipe, g)?;
    let report = verify_cut(&graph, &edges, g)?;
    if let Some(path) = &config.cut {
        let file = File::create(path).map_err(|e| Error::io(path, e))?;
        let mut w = BufWriter::new(file);
        edgelist::write_cut(n, g, &edges, &mut w)?;
        w.flush().map_err(|e| Error::io(path, e))?;
    }
    let ok = report.cut_size == predicted && report.component_count > g && report.isolated_count == g;
    let mut row = ReportRow::new("cut", n, g, predicted);
    row.construction_value = Some(report.cut_size);
    row.status = format!(
        "{} components={} isolated={}",
        if ok { "pass" } else { "fail" },
        report.component_count,
        report.isolated_count
    );
    let mut out = Outcome::default();
    out.push(row, ok);
    Ok(out)
}

fn verify(config: &RunConfig) -> Result<Outcome> {
    let graph_path = config.graph.as_ref().ok_or_else(|| usage("verify needs --graph"))?;
    let cut_path = config.cut.as_ref().ok_or_else(|| usage("verify needs --cut"))?;
    let open = |p: &PathBuf| File::open(p).map(BufReader::new).map_err(|e| Error::io(p, e));
    let graph = edgelist::read_graph(open(graph_path)?)?;
    let file = edgelist::read_cut(open(cut_path)?)?;
    if file.dim != graph.dim() {
        return Err(usage(format!("cut file is for n={}, graph has n={}", file.dim, graph.dim())));
    }
    let g = config.g.unwrap_or(file.g);
    let report = verify_cut(&graph, &file.edges, g)?;
    let ok = report.component_count > g && report.matches_prediction;
    let mut row = ReportRow::new("verify", graph.dim(), g, report.predicted_size);
    row.construction_value = Some(report.cut_size);
    row.status = format!(
        "{} components={} isolated={}",
        if ok { "pass" } else { "fail" },
        report.component_count,
        report.isolated_count
    );
    let mut out = Outcome::default();
    out.push(row, ok);
    Ok(out)
}

fn oracle_eg(config: &RunConfig) -> Result<Outcome> {
    let recipe = load_recipe(config)?;
    let graph = materialize(&recipe)?;
    let limits = limits(config)?;
    let mut out = Outcome::default();
    for g in g_values(config, Some(recipe.dim()))? {
        if g > recipe.vertex_count() {
            return Err(usage(format!("g={g} exceeds the {} vertices", recipe.vertex_count())));
        }
        let mut row = ReportRow::new("oracle-e_g", recipe.dim(), g, e_g(g)?);
        if g < recipe.vertex_count() {
            let trace = algorithm_ms(&recipe, g)?;
            row.construction_value = Some(induced_edge_count(&graph, &trace.union)?);
        }
        let found = parallel::max_induced_edges(&graph, g as usize, &limits)?;
        row.oracle_value = Some(found.value);
        let ok = match found.status {
            SearchStatus::Complete => found.value == row.formula_value,
            SearchStatus::Incomplete => {
                out.incomplete = true;
                found.value <= row.formula_value
            }
        };
        row.status = match (found.status, ok) {
            (SearchStatus::Incomplete, true) => "incomplete",
            (_, true) => "pass",
            (_, false) => "fail",
        }
        .into();
        out.push(row, ok);
    }
    Ok(out)
}

fn oracle_clambda(config: &RunConfig, stderr: &mut dyn Write) -> Result<Outcome> {
    let recipe = load_recipe(config)?;
    let n = recipe.dim();
    let graph = materialize(&recipe)?;
    let limits = limits(config)?;
    let mut warned = false;
    let mut out = Outcome::default();
    let gs = if config.g.is_none() && config.g_max.is_none() && !config.g_all {
        (1..=3u64.min(recipe.vertex_count() - 1)).collect()
    } else {
        g_values(config, Some(n))?
    };
    for g in gs {
        if g + 1 > recipe.vertex_count() {
            return Err(usage(format!("g={g} needs {} parts but there are {} vertices", g + 1, recipe.vertex_count())));
        }
        let formula = clambda(config, n, g, &mut warned, stderr)?;
        let mut row = ReportRow::new("oracle-clambda", n, g, formula);
        row.construction_value = Some(build_component_cut_in(&graph, &recipe, g)?.len() as u64);
        let found = parallel::min_component_edge_cut(&graph, g as usize + 1, &limits)?;
        let complete = found.status == SearchStatus::Complete;
        out.incomplete |= !complete;
        row.oracle_value = Some(found.value);
        row.status = gap_status(found.value, formula, complete);
        let ok = !complete || found.value <= formula;
        out.push(row, ok);
    }
    Ok(out)
}

fn suite(config: &RunConfig, stderr: &mut dyn Write) -> Result<Outcome> {
    let mut suite = SuiteConfig::new(config.g_max.unwrap_or(1 << 12), config.n_max.unwrap_or(24));
    suite.seed = config.seed;
    suite.limits = limits(config)?;
    suite.timings = config.timings;
    let result = run_suite(&suite)?;
    for v in &result.violations {
        let _ = writeln!(stderr, "{v}");
    }
    let mut out = Outcome { failed: !result.passed(), incomplete: result.incomplete > 0, ..Outcome::default() };
    for row in result.rows {
        let ok = row.status == "pass";
        out.push(row, ok);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = main_with_args(std::iter::once("hlnet").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn recipe_sources_parse() {
        assert_eq!("g84".parse::<RecipeSource>(), Ok(RecipeSource::G84));
        assert_eq!("random:seed=7".parse::<RecipeSource>(), Ok(RecipeSource::Random { seed: Some(7) }));
        assert_eq!("file:a/b.json".parse::<RecipeSource>(), Ok(RecipeSource::File("a/b.json".into())));
        assert!("torus".parse::<RecipeSource>().is_err());
        assert!("random:seed=x".parse::<RecipeSource>().is_err());
    }

    #[test]
    fn eg_table() {
        let (code, out, _) = run_args(&["eg", "--g-max", "4", "--format", "csv"]);
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "check,n,g,formula_value,construction_value,oracle_value,status,elapsed_ms\n\
             e_g,0,1,0,,,pass,\ne_g,0,2,1,,,pass,\ne_g,0,3,2,,,pass,\ne_g,0,4,4,,,pass,\n"
        );
    }

    #[test]
    fn strict_mode_rejects_small_n() {
        let (code, _, err) = run_args(&["cut", "--n", "4", "--g", "2"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("--mode permissive"), "{err}");
        let (code, _, err) = run_args(&["cut", "--n", "4", "--g", "2", "--mode", "permissive"]);
        assert_eq!(code, 0);
        assert!(err.contains("warning"), "{err}");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_args(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["eg"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["cut", "--g", "3"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["eg", "--n", "4", "--recipe", "g84", "--g", "1"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["eg", "--g", "1", "--g-max", "3"]).0, EXIT_USAGE);
    }

    #[test]
    fn zero_budget_exhausts() {
        let (code, out, _) =
            run_args(&["oracle-clambda", "--n", "4", "--g", "3", "--mode", "permissive", "--time-budget", "0"]);
        assert_eq!(code, EXIT_BUDGET);
        assert!(out.contains("incomplete"), "{out}");
    }
}
