//! One function per subcommand, each returning a renderable output.

use std::fmt::Write as _;

use serde::Serialize;
use wallcross::conjectures::{
    check_rim_remark, check_sign_conjecture, Bracket, Fit, GoodBoxDiffReport, RimReport, Semantics,
    ThresholdReport, TwoBlockShape, Verdict,
};
use wallcross::crossing::{orbit_prefix, OrbitMode, OrbitTrace, Variant};
use wallcross::crystal::{good_addable, good_removable, reduced_signature, signature};
use wallcross::mullineux::{mullineux, mullineux_restricted, symbol_certificate};
use wallcross::order::{chamber_partition, rc_regularize, TieBreak};
use wallcross::{enumerate_partitions, farey_walls, Base, BoxPos, Partition, Wall};

use crate::config::{Command, MullVariant, RunConfig};
use crate::error::CliError;
use crate::output::{CommandOutput, Outcome, Table};
use crate::sweep::run_sweep;
use crate::verify::run_verify_chain;

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or(String::new(), |x| x.to_string())
}

fn opt_cell(b: Option<BoxPos>) -> String {
    b.map_or(String::new(), |b| b.to_string())
}

pub fn execute(cfg: &RunConfig) -> Result<CommandOutput, CliError> {
    cfg.validate()?;
    match &cfg.command {
        Command::Mull {
            partition,
            base,
            variant,
        } => mull(partition, *base, *variant),
        Command::Farey { order, upper } => farey(*order, *upper),
        Command::Crystal {
            partition,
            base,
            residue,
        } => crystal(partition, *base, *residue),
        Command::Chamber { n, wall, tie } => chamber(*n, *wall, *tie),
        Command::Regularize { partition, wall } => regularize(partition, *wall),
        Command::Orbit {
            partition,
            upper,
            mode,
            variant,
        } => orbit(partition, *upper, *mode, *variant),
        Command::OrbitAll {
            n,
            upper,
            mode,
            variant,
        } => orbit_all(*n, *upper, *mode, *variant, cfg.jobs),
        Command::VerifyThm2 { n_max, tie } => verify_thm2(*n_max, *tie, cfg.jobs),
        Command::CheckSign {
            n,
            variant,
            allow_composite,
            rim,
        } => check_sign(n, *variant, *allow_composite, *rim, cfg.jobs),
        Command::CheckGoodbox {
            m,
            variant,
            semantics,
        } => check_goodbox(*m, *variant, semantics, cfg.jobs),
    }
}

#[derive(Serialize)]
struct MullResult<'a> {
    partition: &'a Partition,
    base: Base,
    variant: MullVariant,
    image: Partition,
    certificate: bool,
}

fn mull(p: &Partition, e: Base, variant: MullVariant) -> Result<CommandOutput, CliError> {
    let (image, certificate) = match variant {
        MullVariant::Regular => {
            let m = mullineux(p, e)?;
            let ok = symbol_certificate(p, &m, e)?;
            (m, ok)
        }
        MullVariant::Restricted => {
            let m = mullineux_restricted(p, e)?;
            let ok = symbol_certificate(&p.transpose(), &m.transpose(), e)?;
            (m, ok)
        }
    };
    let text = format!(
        "M_{}({p}) = {image}\nsymbol certificate: {}",
        e.get(),
        if certificate { "pass" } else { "FAIL" }
    );
    let mut table = Table::new(&["partition", "base", "image", "certificate"]);
    table.push(vec![
        p.to_string(),
        e.get().to_string(),
        image.to_string(),
        certificate.to_string(),
    ]);
    let result = MullResult {
        partition: p,
        base: e,
        variant,
        image,
        certificate,
    };
    CommandOutput::new(Outcome::from_pass(certificate), &result, text, table)
}

#[derive(Serialize)]
struct FareyResult {
    order: usize,
    upper: Wall,
    count: usize,
    walls: Vec<Wall>,
}

fn farey(order: usize, upper: Wall) -> Result<CommandOutput, CliError> {
    let seq = farey_walls(order, upper)?;
    let text = seq
        .iter()
        .map(Wall::to_string)
        .collect::<Vec<_>>()
        .join(" ");
    let mut table = Table::new(&["numer", "denom"]);
    for w in &seq {
        table.push(vec![w.numer().to_string(), w.denom().to_string()]);
    }
    let result = FareyResult {
        order,
        upper,
        count: seq.len(),
        walls: seq.walls,
    };
    CommandOutput::new(Outcome::Pass, &result, text, table)
}

#[derive(Serialize)]
struct ResidueRow {
    residue: u32,
    signature: String,
    cells: String,
    reduced: String,
    good_removable: Option<BoxPos>,
    good_addable: Option<BoxPos>,
}

fn crystal(p: &Partition, e: Base, residue: Option<u32>) -> Result<CommandOutput, CliError> {
    let residues: Vec<u32> = match residue {
        Some(i) => vec![i],
        None => (0..e.get()).collect(),
    };
    let mut rows = Vec::new();
    let mut table = Table::new(&[
        "residue",
        "signature",
        "reduced",
        "good_removable",
        "good_addable",
    ]);
    let mut text = String::new();
    for i in residues {
        let word = signature(p, e, i)?;
        let row = ResidueRow {
            residue: i,
            signature: word.word(),
            cells: word.to_string(),
            reduced: reduced_signature(p, e, i)?.word(),
            good_removable: good_removable(p, e, i)?,
            good_addable: good_addable(p, e, i)?,
        };
        let _ = writeln!(
            text,
            "i={i}: {} [{}] reduced {:?} good removable {} good addable {}",
            row.signature,
            row.cells,
            row.reduced,
            row.good_removable.map_or("none".into(), |b| b.to_string()),
            row.good_addable.map_or("none".into(), |b| b.to_string()),
        );
        table.push(vec![
            i.to_string(),
            row.signature.clone(),
            row.reduced.clone(),
            opt_cell(row.good_removable),
            opt_cell(row.good_addable),
        ]);
        rows.push(row);
    }
    CommandOutput::new(Outcome::Pass, &rows, text, table)
}

#[derive(Serialize)]
struct ChamberResult {
    n: usize,
    wall: Wall,
    tie: TieBreak,
    partition: Partition,
}

fn chamber(n: usize, wall: Wall, tie: TieBreak) -> Result<CommandOutput, CliError> {
    let partition = chamber_partition(n, wall, tie)?;
    let mut table = Table::new(&["n", "wall", "partition"]);
    table.push(vec![n.to_string(), wall.to_string(), partition.to_string()]);
    let text = partition.to_string();
    let result = ChamberResult {
        n,
        wall,
        tie,
        partition,
    };
    CommandOutput::new(Outcome::Pass, &result, text, table)
}

#[derive(Serialize)]
struct RegularizeResult<'a> {
    partition: &'a Partition,
    wall: Wall,
    result: Partition,
}

fn regularize(p: &Partition, wall: Wall) -> Result<CommandOutput, CliError> {
    let result = rc_regularize(p, wall)?;
    let mut table = Table::new(&["partition", "wall", "result"]);
    table.push(vec![p.to_string(), wall.to_string(), result.to_string()]);
    let text = result.to_string();
    CommandOutput::new(
        Outcome::Pass,
        &RegularizeResult {
            partition: p,
            wall,
            result,
        },
        text,
        table,
    )
}

/// A trace, plus the error that stopped it early if any.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitResult {
    #[serde(flatten)]
    pub trace: OrbitTrace,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

pub fn run_orbit(p: &Partition, upper: Wall, mode: OrbitMode, variant: Variant) -> OrbitResult {
    let walls = match p.size() {
        0 => Vec::new(),
        n => match farey_walls(n, upper) {
            Ok(s) => s.walls,
            Err(e) => {
                return OrbitResult {
                    trace: OrbitTrace {
                        start: p.clone(),
                        mode,
                        steps: Vec::new(),
                    },
                    error: Some(e.to_string()),
                }
            }
        },
    };
    let (trace, error) = orbit_prefix(p, walls, variant, mode);
    OrbitResult {
        trace,
        error: error.map(|e| e.to_string()),
    }
}

const ORBIT_COLUMNS: [&str; 8] = [
    "start", "step", "wall", "base", "variant", "image", "post", "error",
];

fn orbit_rows(r: &OrbitResult, table: &mut Table, text: &mut String) {
    let _ = writeln!(text, "start {}", r.trace.start);
    for (k, s) in r.trace.steps.iter().enumerate() {
        let variant = format!("{:?}", s.variant).to_lowercase();
        let _ = writeln!(
            text,
            "  {} (base {}, {variant}): {} -> {}",
            s.wall, s.base, s.image, s.post
        );
        table.push(vec![
            r.trace.start.to_string(),
            (k + 1).to_string(),
            s.wall.to_string(),
            s.base.to_string(),
            variant,
            s.image.to_string(),
            s.post.to_string(),
            String::new(),
        ]);
    }
    if let Some(e) = &r.error {
        let _ = writeln!(text, "  stopped: {e}");
        let mut row = vec![String::new(); ORBIT_COLUMNS.len()];
        row[0] = r.trace.start.to_string();
        row[7] = e.clone();
        table.push(row);
    }
}

fn orbit(
    p: &Partition,
    upper: Wall,
    mode: OrbitMode,
    variant: Variant,
) -> Result<CommandOutput, CliError> {
    let r = run_orbit(p, upper, mode, variant);
    let mut table = Table::new(&ORBIT_COLUMNS);
    let mut text = String::new();
    orbit_rows(&r, &mut table, &mut text);
    CommandOutput::new(Outcome::from_pass(r.error.is_none()), &r, text, table)
}

/// Orbits of every partition of `n`, in enumeration order.
pub fn orbit_sweep(
    n: usize,
    upper: Wall,
    mode: OrbitMode,
    variant: Variant,
    jobs: usize,
) -> Result<Vec<OrbitResult>, CliError> {
    let starts: Vec<Partition> = enumerate_partitions(n).collect();
    run_sweep(&starts, jobs, |p| run_orbit(p, upper, mode, variant))
}

fn orbit_all(
    n: usize,
    upper: Wall,
    mode: OrbitMode,
    variant: Variant,
    jobs: usize,
) -> Result<CommandOutput, CliError> {
    let results = orbit_sweep(n, upper, mode, variant, jobs)?;
    let mut table = Table::new(&ORBIT_COLUMNS);
    let mut text = String::new();
    for r in &results {
        orbit_rows(r, &mut table, &mut text);
    }
    let failed = results.iter().filter(|r| r.error.is_some()).count();
    let _ = writeln!(text, "{} orbits, {failed} stopped early", results.len());
    CommandOutput::new(Outcome::from_pass(failed == 0), &results, text, table)
}

fn verify_thm2(n_max: usize, tie: TieBreak, jobs: usize) -> Result<CommandOutput, CliError> {
    let summary = run_verify_chain(n_max, tie, jobs)?;
    let mut table = Table::new(&["n", "chambers", "pass", "failure_wall", "detail", "millis"]);
    let mut text = String::new();
    for r in &summary.rows {
        let wall = r.failure.as_ref().map(|f| opt(f.wall)).unwrap_or_default();
        let detail = r
            .failure
            .as_ref()
            .map(|f| f.detail.clone())
            .unwrap_or_default();
        let _ = writeln!(
            text,
            "n={:>3} {} chambers={} {}ms{}",
            r.n,
            if r.pass { "PASS" } else { "FAIL" },
            r.chambers,
            r.millis,
            if r.pass {
                String::new()
            } else {
                format!(" after {wall:?}: {detail}")
            }
        );
        table.push(vec![
            r.n.to_string(),
            r.chambers.to_string(),
            r.pass.to_string(),
            wall,
            detail,
            r.millis.to_string(),
        ]);
    }
    CommandOutput::new(Outcome::from_pass(summary.pass), &summary, text, table)
}

#[derive(Debug, Clone, Serialize)]
pub struct SignEntry {
    pub report: ThresholdReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rim: Option<RimReport>,
}

impl SignEntry {
    pub fn pass(&self) -> bool {
        self.report.verdict != Verdict::Fail
            && self.rim.as_ref().is_none_or(|r| r.verdict != Verdict::Fail)
    }
}

fn shape_cells(s: Option<TwoBlockShape>) -> [String; 4] {
    match s {
        Some(s) => [s.x, s.y, s.z, s.t].map(|v| v.to_string()),
        None => Default::default(),
    }
}

fn check_sign(
    ns: &[usize],
    variant: Variant,
    allow_composite: bool,
    rim: bool,
    jobs: usize,
) -> Result<CommandOutput, CliError> {
    let entries = run_sweep(ns, jobs, |&n| -> Result<SignEntry, CliError> {
        let report = check_sign_conjecture(n, variant, allow_composite)?;
        let rim = if rim {
            Some(check_rim_remark(n, variant, allow_composite)?)
        } else {
            None
        };
        Ok(SignEntry { report, rim })
    })?
    .into_iter()
    .collect::<Result<Vec<_>, _>>()?;

    let mut table = Table::new(&[
        "n",
        "lower",
        "upper",
        "wall",
        "state",
        "x",
        "y",
        "z",
        "t",
        "eq_a",
        "eq_b",
        "eq_size",
        "diophantine",
        "verdict",
    ]);
    let mut text = String::new();
    for entry in &entries {
        let r = &entry.report;
        let thresholds: Vec<String> = r.thresholds.iter().map(Wall::to_string).collect();
        let _ = writeln!(
            text,
            "n={} thresholds [{}] verdict {:?}",
            r.n,
            thresholds.join(", "),
            r.verdict
        );
        for c in &r.chambers {
            let (lower, upper) = match c.bracket {
                Bracket::Between { lower, upper } => (lower.to_string(), upper.to_string()),
                Bracket::AtThreshold => (String::new(), String::new()),
            };
            let shape = match &c.fit {
                Fit::Exact(s) => Some(*s),
                _ => c.solved,
            };
            let eq = c.equations.map_or([None; 3], |e| e.map(Some));
            let _ = writeln!(
                text,
                "  {} {} ({}) {:?}",
                c.wall, c.state, c.exponent, c.verdict
            );
            let [x, y, z, t] = shape_cells(shape);
            table.push(vec![
                r.n.to_string(),
                lower,
                upper,
                c.wall.to_string(),
                c.state.to_string(),
                x,
                y,
                z,
                t,
                opt(eq[0]),
                opt(eq[1]),
                opt(eq[2]),
                opt(c.diophantine),
                format!("{:?}", c.verdict).to_lowercase(),
            ]);
        }
        if let Some(e) = &r.pipeline_error {
            let _ = writeln!(text, "  pipeline stopped: {e}");
        }
        if let Some(c) = &r.counterexample {
            let _ = writeln!(text, "  counterexample: {c}");
        }
        if let Some(rim) = &entry.rim {
            let _ = writeln!(text, "  rim remark verdict {:?}", rim.verdict);
        }
    }
    let pass = entries.iter().all(SignEntry::pass);
    CommandOutput::new(Outcome::from_pass(pass), &entries, text, table)
}

#[derive(Debug, Clone, Serialize)]
pub struct GoodboxSummary {
    pub pairs: usize,
    pub pipeline_errors: usize,
    /// Pairs with a non-final chamber whose states do not differ by one box.
    pub not_single_box: usize,
    /// Per semantics: pairs with at least one failing non-final chamber.
    pub failing_pairs: Vec<(Semantics, usize)>,
    /// Non-final single-box chambers where no requested semantics holds.
    pub ungood_chambers: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct GoodboxResult {
    pub m: usize,
    pub summary: GoodboxSummary,
    pub pairs: Vec<GoodBoxDiffReport>,
}

impl GoodboxResult {
    /// The hard check: no errors and one extra box in every non-final chamber.
    pub fn single_box_holds(&self) -> bool {
        self.summary.pipeline_errors == 0 && self.summary.not_single_box == 0
    }
}

pub fn goodbox_sweep(
    m: usize,
    variant: Variant,
    semantics: &[Semantics],
    jobs: usize,
) -> Result<GoodboxResult, CliError> {
    // One work unit per pair, in enumeration order of the smaller diagram.
    let lambdas: Vec<Partition> = enumerate_partitions(m - 1).collect();
    let pairs = run_sweep(&lambdas, jobs, |lambda| {
        let mu = lambda.add_box(BoxPos::new(1, lambda.part(1) + 1))?;
        wallcross::conjectures::compare_orbits(lambda, &mu, variant, semantics)
    })?
    .into_iter()
    .collect::<Result<Vec<_>, _>>()?;
    let non_final = |r: &GoodBoxDiffReport| -> Vec<usize> {
        (0..r.chambers.len())
            .filter(|&k| r.chambers[k].upper.is_some())
            .collect()
    };
    let not_single_box = pairs
        .iter()
        .filter(|r| {
            non_final(r)
                .iter()
                .any(|&k| r.chambers[k].difference.is_none())
        })
        .count();
    let ungood_chambers = pairs
        .iter()
        .flat_map(|r| r.chambers.iter().filter(|c| c.upper.is_some()))
        .filter(|c| c.difference.is_some() && !c.good.values().any(|v| *v == Some(true)))
        .count();
    let failing_pairs = semantics
        .iter()
        .map(|&s| {
            (
                s,
                pairs.iter().filter(|r| !r.failures(s).is_empty()).count(),
            )
        })
        .collect();
    let summary = GoodboxSummary {
        pairs: pairs.len(),
        pipeline_errors: pairs.iter().filter(|r| r.error.is_some()).count(),
        not_single_box,
        failing_pairs,
        ungood_chambers,
    };
    Ok(GoodboxResult { m, summary, pairs })
}

fn check_goodbox(
    m: usize,
    variant: Variant,
    semantics: &[Semantics],
    jobs: usize,
) -> Result<CommandOutput, CliError> {
    let result = goodbox_sweep(m, variant, semantics, jobs)?;
    let mut headers = vec![
        "smaller",
        "larger",
        "lower",
        "upper",
        "smaller_state",
        "larger_state",
        "difference",
    ];
    headers.extend(semantics.iter().map(|s| s.name()));
    let mut table = Table::new(&headers);
    let mut text = String::new();
    for r in &result.pairs {
        let _ = writeln!(text, "{} < {}", r.smaller, r.larger);
        for c in &r.chambers {
            let verdicts: Vec<String> = c
                .good
                .iter()
                .map(|(s, v)| format!("{}={}", s.name(), opt(*v)))
                .collect();
            let _ = writeln!(
                text,
                "  ({}, {}) {} vs {} diff {} {}",
                opt(c.lower),
                opt(c.upper),
                c.smaller,
                c.larger,
                opt_cell(c.difference),
                verdicts.join(" ")
            );
            let mut row = vec![
                r.smaller.to_string(),
                r.larger.to_string(),
                opt(c.lower),
                opt(c.upper),
                c.smaller.to_string(),
                c.larger.to_string(),
                opt_cell(c.difference),
            ];
            row.extend(
                semantics
                    .iter()
                    .map(|s| opt(c.good.get(s).copied().flatten())),
            );
            table.push(row);
        }
        if let Some(e) = &r.error {
            let _ = writeln!(text, "  stopped: {e}");
        }
    }
    let s = &result.summary;
    let _ = writeln!(
        text,
        "pairs {} errors {} not-single-box {} ungood chambers {}",
        s.pairs, s.pipeline_errors, s.not_single_box, s.ungood_chambers
    );
    for (sem, k) in &s.failing_pairs {
        let _ = writeln!(text, "  {}: {k} pairs with a failing chamber", sem.name());
    }
    let pass = result.single_box_holds() && s.ungood_chambers == 0;
    CommandOutput::new(Outcome::from_pass(pass), &result, text, table)
}
