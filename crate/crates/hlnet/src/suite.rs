//! The property suite: inequality sweeps over the closed-form formulas,
//! construction checks on materialized networks, and oracle cross-checks.
//!
//! Each check returns report rows (one per dimension, or one overall) where
//! `formula_value` counts the cases examined and `construction_value` counts
//! the cases that held, plus a [`Violation`] for every failing case.

use std::fmt;
use std::ops::RangeInclusive;
use std::time::Instant;

use hlnet_core::extremal::{
    self, merge_sides, proven_g_max, slack_sides, strict_increase_sides, superadditive_sides, CLambdaMode,
};
use hlnet_core::ms::{build_component_cut_in, verify_cut};
use hlnet_core::oracle::{isomorphic_small, SearchLimits, SearchStatus};
use hlnet_core::topology::induced_edge_count;
use hlnet_core::{algorithm_ms, c_lambda, delta_e, e_g, g84, hypercube, materialize, random_hl, Recipe};

use crate::error::Result;
use crate::parallel;
use crate::report::ReportRow;

/// A failing case: which check, at which arguments, and both sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub check: &'static str,
    pub witness: String,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} violated at ({}): {}", self.check, self.witness, self.detail)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckResult {
    pub rows: Vec<ReportRow>,
    pub violations: Vec<Violation>,
    /// Oracle searches that ran out of budget.
    pub incomplete: usize,
}

impl CheckResult {
    fn merge(&mut self, other: CheckResult) {
        self.rows.extend(other.rows);
        self.violations.extend(other.violations);
        self.incomplete += other.incomplete;
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.rows.iter().all(ReportRow::is_consistent)
    }
}

/// Tally of one row's worth of cases.
struct Tally {
    check: &'static str,
    n: u32,
    g: u64,
    cases: u64,
    held: u64,
    started: Instant,
}

impl Tally {
    fn new(check: &'static str, n: u32) -> Self {
        Tally { check, n, g: 0, cases: 0, held: 0, started: Instant::now() }
    }

    fn record(&mut self, g: u64, ok: bool) {
        self.cases += 1;
        self.held += ok as u64;
        self.g = self.g.max(g);
    }

    fn finish(self, timings: bool) -> ReportRow {
        let mut row = ReportRow::new(self.check, self.n, self.g, self.cases);
        row.construction_value = Some(self.held);
        row.status = if self.cases == self.held { "pass" } else { "fail" }.into();
        if timings {
            row.elapsed_ms = Some(self.started.elapsed().as_millis() as u64);
        }
        row
    }
}

/// Formula values `e_0 ..= e_max`.
fn e_table(max: u64) -> Result<Vec<u64>> {
    (0..=max).map(|g| Ok(e_g(g)?)).collect()
}

/// `e_{i+1} - e_i = s + 1` for `1 <= i <= max`, with `s + 1` read off the
/// binary expansion of `i` rather than by subtraction.
pub fn check_increment_identity(max: u64, timings: bool) -> Result<CheckResult> {
    let table = e_table(max + 1)?;
    let mut out = CheckResult::default();
    let mut tally = Tally::new("increment-identity", 0);
    for i in 1..=max {
        let step = table[i as usize + 1] - table[i as usize];
        let predicted = delta_e(i)?;
        let ok = step == predicted;
        tally.record(i, ok);
        if !ok {
            out.violations.push(Violation {
                check: "increment-identity",
                witness: format!("i={i}"),
                detail: format!("e_(i+1) - e_i = {step}, s + 1 = {predicted}"),
            });
        }
    }
    out.rows.push(tally.finish(timings));
    Ok(out)
}

/// `e_{g0+g1} >= e_{g0} + e_{g1} + g0` for `1 <= g0 <= g1`, `g0 + g1 <= sum_max`.
pub fn check_superadditivity(sum_max: u64, timings: bool) -> Result<CheckResult> {
    let mut out = CheckResult::default();
    let mut tally = Tally::new("superadditivity", 0);
    for g0 in 1..=sum_max / 2 {
        for g1 in g0..=sum_max - g0 {
            let sides = superadditive_sides(g0, g1)?;
            tally.record(g0 + g1, sides.holds());
            if !sides.holds() {
                out.violations.push(Violation {
                    check: "superadditivity",
                    witness: format!("g0={g0}, g1={g1}"),
                    detail: format!("e_(g0+g1) >= e_g0 + e_g1 + g0 fails: {sides}"),
                });
            }
        }
    }
    out.rows.push(tally.finish(timings));
    Ok(out)
}

/// `e_{i+1} + e_j <= e_{i+j}` for `1 <= i <= j`, `i + j <= sum_max`.
pub fn check_merge(sum_max: u64, timings: bool) -> Result<CheckResult> {
    let mut out = CheckResult::default();
    let mut tally = Tally::new("merge", 0);
    for i in 1..=sum_max / 2 {
        for j in i..=sum_max - i {
            let sides = merge_sides(i, j)?;
            tally.record(i + j, sides.holds());
            if !sides.holds() {
                out.violations.push(Violation {
                    check: "merge",
                    witness: format!("i={i}, j={j}"),
                    detail: format!("e_(i+1) + e_j <= e_(i+j) fails: {sides}"),
                });
            }
        }
    }
    out.rows.push(tally.finish(timings));
    Ok(out)
}

/// `(n-2) g >= 2 e_g` for `2 <= n <= n_max`, `1 <= g <= min(2^(n-2), g_cap)`.
pub fn check_slack(n_max: u32, g_cap: u64, timings: bool) -> Result<CheckResult> {
    let mut out = CheckResult::default();
    for n in 2..=n_max {
        let mut tally = Tally::new("slack", n);
        for g in 1..=(1u64 << (n - 2)).min(g_cap) {
            let sides = slack_sides(n, g)?;
            tally.record(g, sides.holds());
            if !sides.holds() {
                out.violations.push(Violation {
                    check: "slack",
                    witness: format!("n={n}, g={g}"),
                    detail: format!("(n-2) g >= 2 e_g fails: {sides}"),
                });
            }
        }
        out.rows.push(tally.finish(timings));
    }
    Ok(out)
}

/// `n g - e_g` strictly increasing for `1 <= g < min(2^ceil(n/2), g_cap + 1)`.
pub fn check_strict_increase(n_max: u32, g_cap: u64, timings: bool) -> Result<CheckResult> {
    let mut out = CheckResult::default();
    for n in 2..=n_max.min(64) {
        let mut tally = Tally::new("strict-increase", n);
        let end = proven_g_max(n).min(g_cap + 1);
        for g in 1..end {
            let sides = strict_increase_sides(n, g)?;
            tally.record(g, sides.holds());
            if !sides.holds() {
                out.violations.push(Violation {
                    check: "strict-increase",
                    witness: format!("n={n}, g={g}"),
                    detail: format!("n(g+1) - e_(g+1) > n g - e_g fails: {sides}"),
                });
            }
        }
        out.rows.push(tally.finish(timings));
    }
    Ok(out)
}

/// The hypercube, `g84` when `n = 3`, and one random recipe per seed.
pub fn recipes_for(n: u32, seeds: &[u64]) -> Result<Vec<(String, Recipe)>> {
    let mut out = vec![("hypercube".to_string(), hypercube(n)?)];
    if n == 3 {
        out.push(("g84".to_string(), g84()));
    }
    for &seed in seeds {
        out.push((format!("random:seed={seed}"), random_hl(n, seed)?));
    }
    Ok(out)
}

/// Seeds `base, base + 1, ..., base + count - 1`.
pub fn seeds(base: u64, count: u64) -> Vec<u64> {
    (0..count).map(|k| base.wrapping_add(k)).collect()
}

/// The selection of the extremal subgraph builder induces exactly `e_g`
/// edges, for all `1 <= g <= min(2^ceil(n/2), 2^n - 1)`.
pub fn check_ms_optimality(dims: RangeInclusive<u32>, seeds: &[u64], timings: bool) -> Result<CheckResult> {
    let mut out = CheckResult::default();
    for n in dims {
        let mut tally = Tally::new("ms-optimality", n);
        for (label, recipe) in recipes_for(n, seeds)? {
            let graph = materialize(&recipe)?;
            for g in 1..=proven_g_max(n).min((1 << n) - 1) {
                let trace = algorithm_ms(&recipe, g)?;
                let edges = induced_edge_count(&graph, &trace.union)?;
                let expected = e_g(g)?;
                let ok = edges == expected && trace.union.len() as u64 == g;
                tally.record(g, ok);
                if !ok {
                    out.violations.push(Violation {
                        check: "ms-optimality",
                        witness: format!("recipe={label}, n={n}, g={g}"),
                        detail: format!("selection of {} vertices induces {edges} edges, e_g = {expected}", trace.union.len()),
                    });
                }
            }
        }
        out.rows.push(tally.finish(timings));
    }
    Ok(out)
}

/// `1, 2, 3` and `2^k - 1, 2^k, 2^k + 1` for `2^k <= 2^ceil(n/2)`, kept
/// within `1 ..= 2^ceil(n/2)`.
pub fn sampled_g(n: u32) -> Vec<u64> {
    let top = proven_g_max(n).min((1u64 << n) - 1);
    let mut gs = vec![1, 2, 3];
    let mut p = 1u64;
    while p <= proven_g_max(n) {
        gs.extend([p - 1, p, p + 1]);
        p *= 2;
    }
    gs.retain(|&g| g >= 1 && g <= top);
    gs.sort_unstable();
    gs.dedup();
    gs
}

/// The constructed cut has `n g - e_g` edges, leaves at least `g + 1`
/// components, and exactly `g` isolated vertices.
pub fn check_cut_construction(dims: RangeInclusive<u32>, seeds: &[u64], timings: bool) -> Result<CheckResult> {
    let mut out = CheckResult::default();
    for n in dims {
        let mut tally = Tally::new("cut-construction", n);
        let mode = if n >= 8 { CLambdaMode::Strict } else { CLambdaMode::Permissive };
        for (label, recipe) in recipes_for(n, seeds)? {
            let graph = materialize(&recipe)?;
            for g in sampled_g(n) {
                let predicted = c_lambda(n, g, mode)?.value;
                let cut = build_component_cut_in(&graph, &recipe, g)?;
                let report = verify_cut(&graph, &cut, g)?;
                let ok = report.cut_size == predicted && report.component_count > g && report.isolated_count == g;
                tally.record(g, ok);
                if !ok {
                    out.violations.push(Violation {
                        check: "cut-construction",
                        witness: format!("recipe={label}, n={n}, g={g}"),
                        detail: format!(
                            "|F| = {} (expected {predicted}), components = {} (need >= {}), isolated = {} (need {g})",
                            report.cut_size,
                            report.component_count,
                            g + 1,
                            report.isolated_count
                        ),
                    });
                }
            }
        }
        out.rows.push(tally.finish(timings));
    }
    Ok(out)
}

/// Brute-force maximum induced edges equals `e_g` for every `1 <= g <= 2^n`.
pub fn check_oracle_e_g(dims: RangeInclusive<u32>, seeds: &[u64], limits: &SearchLimits, timings: bool) -> Result<CheckResult> {
    let mut out = CheckResult::default();
    for n in dims {
        let mut tally = Tally::new("oracle-e_g", n);
        for (label, recipe) in recipes_for(n, seeds)? {
            let graph = materialize(&recipe)?;
            for g in 1..=1u64 << n {
                let found = parallel::max_induced_edges(&graph, g as usize, limits)?;
                if found.status == SearchStatus::Incomplete {
                    out.incomplete += 1;
                    continue;
                }
                let expected = e_g(g)?;
                let ok = found.value == expected;
                tally.record(g, ok);
                if !ok {
                    out.violations.push(Violation {
                        check: "oracle-e_g",
                        witness: format!("recipe={label}, n={n}, g={g}"),
                        detail: format!("oracle = {}, e_g = {expected}", found.value),
                    });
                }
            }
        }
        out.rows.push(tally.finish(timings));
    }
    Ok(out)
}

/// One line of the brute-force versus formula comparison for component cuts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapEntry {
    pub recipe: String,
    pub n: u32,
    pub g: u64,
    pub oracle: u64,
    pub formula: u64,
    /// Size of the constructed cut, when `g < 2^n`.
    pub construction: Option<u64>,
    pub complete: bool,
}

impl GapEntry {
    pub fn to_row(&self) -> ReportRow {
        let mut row = ReportRow::new(format!("oracle-clambda {}", self.recipe), self.n, self.g, self.formula);
        row.construction_value = self.construction;
        row.oracle_value = Some(self.oracle);
        row.status = gap_status(self.oracle, self.formula, self.complete);
        row
    }
}

pub fn gap_status(oracle: u64, formula: u64, complete: bool) -> String {
    if !complete {
        "incomplete".into()
    } else if oracle > formula {
        format!("fail: oracle exceeds construction by {}", oracle - formula)
    } else if oracle == formula {
        "equal".into()
    } else {
        format!("gap={}", formula - oracle)
    }
}

/// Exact minimum `(g+1)`-component cuts against `n g - e_g`, which the
/// construction achieves for every `g`. Only `oracle <= formula` is asserted;
/// the gap table is returned for reporting.
pub fn check_clambda_bound(
    dims: RangeInclusive<u32>,
    parts: RangeInclusive<usize>,
    seeds: &[u64],
    limits: &SearchLimits,
    timings: bool,
) -> Result<(CheckResult, Vec<GapEntry>)> {
    let mut out = CheckResult::default();
    let mut gaps = Vec::new();
    for n in dims {
        let mut tally = Tally::new("clambda-bound", n);
        for (label, recipe) in recipes_for(n, seeds)? {
            let graph = materialize(&recipe)?;
            for p in parts.clone() {
                if p > graph.vertex_count() {
                    continue;
                }
                let g = p as u64 - 1;
                let formula = c_lambda(n, g, CLambdaMode::Permissive)?.value;
                let construction = if g < recipe.vertex_count() {
                    Some(build_component_cut_in(&graph, &recipe, g)?.len() as u64)
                } else {
                    None
                };
                let found = parallel::min_component_edge_cut(&graph, p, limits)?;
                let complete = found.status == SearchStatus::Complete;
                gaps.push(GapEntry { recipe: label.clone(), n, g, oracle: found.value, formula, construction, complete });
                if !complete {
                    out.incomplete += 1;
                    continue;
                }
                let ok = found.value <= formula;
                tally.record(g, ok);
                if !ok {
                    out.violations.push(Violation {
                        check: "clambda-bound",
                        witness: format!("recipe={label}, n={n}, g={g}"),
                        detail: format!("oracle <= n g - e_g fails: {} <= {formula}", found.value),
                    });
                }
            }
        }
        out.rows.push(tally.finish(timings));
    }
    Ok((out, gaps))
}

/// Every random 3-dimensional recipe is isomorphic to exactly one of the
/// 3-cube and `g84`, and those two are not isomorphic to each other.
pub fn check_hl3_classification(samples: u64, base_seed: u64, timings: bool) -> Result<CheckResult> {
    let mut out = CheckResult::default();
    let mut tally = Tally::new("hl3-classification", 3);
    let q3 = materialize(&hypercube(3)?)?;
    let other = materialize(&g84())?;
    let distinct = !isomorphic_small(&q3, &other)?;
    tally.record(0, distinct);
    if !distinct {
        out.violations.push(Violation {
            check: "hl3-classification",
            witness: "hypercube(3), g84".into(),
            detail: "the two reference networks are isomorphic".into(),
        });
    }
    for seed in seeds(base_seed, samples) {
        let graph = materialize(&random_hl(3, seed)?)?;
        let (a, b) = (isomorphic_small(&graph, &q3)?, isomorphic_small(&graph, &other)?);
        let ok = a != b;
        tally.record(0, ok);
        if !ok {
            out.violations.push(Violation {
                check: "hl3-classification",
                witness: format!("random:seed={seed}"),
                detail: format!("isomorphic to 3-cube: {a}, isomorphic to g84: {b}"),
            });
        }
    }
    out.rows.push(tally.finish(timings));
    Ok(out)
}

/// Ranges for a full suite run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    pub increment_max: u64,
    /// Bound on `g0 + g1` (superadditivity) and `i + j` (merge).
    pub pair_sum_max: u64,
    pub slack_n_max: u32,
    pub strict_n_max: u32,
    /// Cap on `g` for the slack and strict-increase sweeps.
    pub g_cap: u64,
    pub ms_dims: RangeInclusive<u32>,
    pub cut_dims: RangeInclusive<u32>,
    pub oracle_dims: RangeInclusive<u32>,
    pub clambda_parts: RangeInclusive<usize>,
    pub random_recipes: u64,
    pub classification_samples: u64,
    pub seed: u64,
    pub limits: SearchLimits,
    pub timings: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig::new(1 << 12, 24)
    }
}

impl SuiteConfig {
    /// Formula sweeps up to `g_max`, slack up to `n_max`, constructions for
    /// `n <= 12` and oracles for `n <= 4`.
    pub fn new(g_max: u64, n_max: u32) -> Self {
        SuiteConfig {
            increment_max: g_max,
            pair_sum_max: g_max,
            slack_n_max: n_max,
            strict_n_max: 64,
            g_cap: g_max,
            ms_dims: 2..=12,
            cut_dims: 8..=10,
            oracle_dims: 2..=4,
            clambda_parts: 2..=4,
            random_recipes: 5,
            classification_samples: 50,
            seed: 1,
            limits: SearchLimits::unlimited(),
            timings: false,
        }
    }
}

pub fn run_suite(config: &SuiteConfig) -> Result<CheckResult> {
    let t = config.timings;
    let seeds = seeds(config.seed, config.random_recipes);
    let mut out = CheckResult::default();
    out.merge(check_increment_identity(config.increment_max, t)?);
    out.merge(check_superadditivity(config.pair_sum_max, t)?);
    out.merge(check_merge(config.pair_sum_max, t)?);
    out.merge(check_slack(config.slack_n_max.min(extremal::MAX_FORMULA_DIM), config.g_cap, t)?);
    out.merge(check_strict_increase(config.strict_n_max, config.g_cap, t)?);
    out.merge(check_ms_optimality(config.ms_dims.clone(), &seeds, t)?);
    out.merge(check_cut_construction(config.cut_dims.clone(), &seeds, t)?);
    out.merge(check_oracle_e_g(config.oracle_dims.clone(), &seeds, &config.limits, t)?);
    let (clambda, _) =
        check_clambda_bound(config.oracle_dims.clone(), config.clambda_parts.clone(), &seeds, &config.limits, t)?;
    out.merge(clambda);
    out.merge(check_hl3_classification(config.classification_samples, config.seed, t)?);
    Ok(out)
}
