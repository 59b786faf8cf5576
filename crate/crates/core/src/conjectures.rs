//! Experimental harnesses for the sign-representation shape law, the rim
//! remark that accompanies it, and the one-good-box difference between the
//! orbits of `λ` and `λ` plus a first-row box.
//!
//! None of these harnesses assume the statements they test. Violations are
//! collected into reports with the first counterexample pinned down.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::crossing::{
    cross_wall, is_prime, orbit_prefix, sign_walls, OrbitMode, OrbitTrace, Variant,
};
use crate::crystal::is_good_addable;
use crate::error::{Error, Result};
use crate::farey::{farey_walls, Wall};
use crate::mullineux::e_rim;
use crate::partition::{Base, BoxPos, Partition};

/// A partition `z^t x^y`: `t` parts equal to `z` and `y` parts equal to `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct TwoBlockShape {
    pub x: usize,
    pub y: usize,
    pub z: usize,
    pub t: usize,
}

impl TwoBlockShape {
    pub fn size(&self) -> usize {
        self.x * self.y + self.z * self.t
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "shapes", rename_all = "lowercase")]
pub enum Fit {
    /// Exactly two distinct part sizes; `z < x`.
    Exact(TwoBlockShape),
    /// One distinct part size, or the empty partition. Each listed shape has
    /// one block of multiplicity zero whose part size is left free (shown as 0).
    Degenerate(Vec<TwoBlockShape>),
    /// Three or more distinct part sizes.
    None,
}

pub fn fit_two_block(p: &Partition) -> Fit {
    let m = p.multiplicities();
    match m.as_slice() {
        [] => Fit::Degenerate(vec![TwoBlockShape {
            x: 0,
            y: 0,
            z: 0,
            t: 0,
        }]),
        &[(s, k)] => Fit::Degenerate(vec![
            TwoBlockShape {
                x: s,
                y: k,
                z: 0,
                t: 0,
            },
            TwoBlockShape {
                x: 0,
                y: 0,
                z: s,
                t: k,
            },
        ]),
        &[(z, t), (x, y)] => Fit::Exact(TwoBlockShape { x, y, z, t }),
        _ => Fit::None,
    }
}

/// `x b - y (b' - b) + b (b' - b) = n`.
pub fn diophantine_identity(s: &TwoBlockShape, b: i64, b_next: i64, n: i64) -> bool {
    let (x, y) = (s.x as i64, s.y as i64);
    x * b - y * (b_next - b) + b * (b_next - b) == n
}

/// The conditions `z + y = b`, `y + t + z - x = b'`, `x y + z t = n`.
pub fn shape_equations(s: &TwoBlockShape, b: i64, b_next: i64, n: i64) -> [bool; 3] {
    let (x, y, z, t) = (s.x as i64, s.y as i64, s.z as i64, s.t as i64);
    [z + y == b, y + t + z - x == b_next, x * y + z * t == n]
}

/// Finds an assignment of the fit satisfying all three conditions. For a
/// degenerate fit the free part size is solved for.
pub fn solve_shape(fit: &Fit, b: i64, b_next: i64, n: i64) -> Option<TwoBlockShape> {
    let candidates: Vec<TwoBlockShape> = match fit {
        Fit::Exact(s) => vec![*s],
        Fit::None => vec![],
        Fit::Degenerate(shapes) => shapes
            .iter()
            .filter_map(|s| {
                let mut s = *s;
                if s.t == 0 && s.y > 0 {
                    // z is free: z = b - y.
                    let z = b - s.y as i64;
                    s.z = usize::try_from(z).ok()?;
                } else if s.y == 0 && s.t > 0 {
                    // x is free: x = t + z - b'.
                    let x = (s.t + s.z) as i64 - b_next;
                    s.x = usize::try_from(x).ok()?;
                }
                Some(s)
            })
            .collect(),
    };
    candidates
        .into_iter()
        .find(|s| shape_equations(s, b, b_next, n).iter().all(|&ok| ok))
}

/// A fraction `a/b` in `[0, 1]`, used for threshold walls including the
/// sentinels `0/1` and `1/1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fraction {
    pub numer: u32,
    pub denom: u32,
}

impl Fraction {
    pub const ZERO: Fraction = Fraction { numer: 0, denom: 1 };
    pub const ONE: Fraction = Fraction { numer: 1, denom: 1 };
}

impl From<Wall> for Fraction {
    fn from(w: Wall) -> Self {
        Fraction {
            numer: w.numer(),
            denom: w.denom(),
        }
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer, self.denom)
    }
}

impl Serialize for Fraction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// Nothing to check (e.g. the state sits exactly on a threshold).
    Skip,
}

/// Where a swept wall sits relative to the detected thresholds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Bracket {
    Between { lower: Fraction, upper: Fraction },
    AtThreshold,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignChamber {
    /// The wall `r` whose state `N_r(1^n)` is recorded.
    pub wall: Wall,
    pub state: Partition,
    pub exponent: String,
    pub distinct_parts: usize,
    pub fit: Fit,
    pub bracket: Bracket,
    /// Assignment satisfying (a), (b) and the size equation, if any.
    pub solved: Option<TwoBlockShape>,
    /// `[z+y=b_i, y+t+z-x=b_{i+1}, xy+zt=n]` for the exact fit.
    pub equations: Option<[bool; 3]>,
    pub diophantine: Option<bool>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThresholdReport {
    pub n: usize,
    pub variant: Variant,
    /// Walls at which the state changes, ascending.
    pub thresholds: Vec<Wall>,
    pub chambers: Vec<SignChamber>,
    /// Set when the orbit itself could not be computed past some wall.
    pub pipeline_error: Option<String>,
    pub counterexample: Option<String>,
    pub verdict: Verdict,
}

struct SignSweep {
    trace: OrbitTrace,
    error: Option<String>,
    thresholds: Vec<Wall>,
}

fn sweep_sign(n: usize, variant: Variant, allow_composite: bool) -> Result<SignSweep> {
    if !allow_composite && !is_prime(n) {
        return Err(Error::NotPrime(n));
    }
    let walls = sign_walls(n, Wall::ONE)?;
    let (trace, error) = orbit_prefix(&Partition::column(n), walls, variant, OrbitMode::Plain);
    let error = error.map(|e| e.to_string());
    let mut thresholds = Vec::new();
    let mut prev = &trace.start;
    for s in &trace.steps {
        if s.post != *prev {
            thresholds.push(s.wall);
        }
        prev = &s.post;
    }
    Ok(SignSweep {
        trace,
        error,
        thresholds,
    })
}

fn bracket_of(w: Wall, thresholds: &[Wall]) -> Bracket {
    if thresholds.contains(&w) {
        return Bracket::AtThreshold;
    }
    let lower = thresholds
        .iter()
        .rev()
        .find(|t| **t < w)
        .map_or(Fraction::ZERO, |t| (*t).into());
    let upper = thresholds
        .iter()
        .find(|t| **t > w)
        .map_or(Fraction::ONE, |t| (*t).into());
    Bracket::Between { lower, upper }
}

/// Runs the sign orbit of `1^n` and tests every state against the two-block
/// shape law with change-point thresholds.
pub fn check_sign_conjecture(
    n: usize,
    variant: Variant,
    allow_composite: bool,
) -> Result<ThresholdReport> {
    let sweep = sweep_sign(n, variant, allow_composite)?;
    let ni = n as i64;
    let mut counterexample = sweep
        .error
        .as_ref()
        .map(|e| format!("n={n}: orbit undefined: {e}"));
    let mut chambers = Vec::with_capacity(sweep.trace.steps.len());
    for step in &sweep.trace.steps {
        let state = step.post.clone();
        let fit = fit_two_block(&state);
        let distinct_parts = state.multiplicities().len();
        let bracket = bracket_of(step.wall, &sweep.thresholds);
        let (solved, equations, diophantine) = match bracket {
            Bracket::Between { lower, upper } => {
                let (b, b_next) = (lower.denom as i64, upper.denom as i64);
                let solved = solve_shape(&fit, b, b_next, ni);
                let equations = match &fit {
                    Fit::Exact(s) => Some(shape_equations(s, b, b_next, ni)),
                    _ => None,
                };
                let dio = solved.map(|s| diophantine_identity(&s, b, b_next, ni));
                (solved, equations, dio)
            }
            Bracket::AtThreshold => (None, None, None),
        };
        let verdict = if distinct_parts > 2 {
            Verdict::Fail
        } else {
            match bracket {
                Bracket::AtThreshold => Verdict::Skip,
                Bracket::Between { .. } if solved.is_some() && diophantine == Some(true) => {
                    Verdict::Pass
                }
                Bracket::Between { .. } => Verdict::Fail,
            }
        };
        if verdict == Verdict::Fail && counterexample.is_none() {
            counterexample = Some(match bracket {
                _ if distinct_parts > 2 => format!(
                    "n={n}, r={}: {} has {distinct_parts} distinct part sizes",
                    step.wall, state
                ),
                Bracket::Between { lower, upper } => format!(
                    "n={n}, r={} in ({lower}, {upper}): {} ({}) has no z^t x^y with z+y={} and y+t+z-x={}",
                    step.wall,
                    state,
                    state.exponent_string(),
                    lower.denom,
                    upper.denom
                ),
                Bracket::AtThreshold => unreachable!(),
            });
        }
        chambers.push(SignChamber {
            wall: step.wall,
            exponent: state.exponent_string(),
            state,
            distinct_parts,
            fit,
            bracket,
            solved,
            equations,
            diophantine,
            verdict,
        });
    }
    let verdict = if counterexample.is_some() {
        Verdict::Fail
    } else {
        Verdict::Pass
    };
    Ok(ThresholdReport {
        n,
        variant,
        thresholds: sweep.thresholds,
        chambers,
        pipeline_error: sweep.error,
        counterexample,
        verdict,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RimRow {
    pub wall: Wall,
    pub state: Partition,
    pub bracket: Bracket,
    /// The `b_{i+1}`-rim of the state is its rim without the top row.
    pub upper_rim_skips_top_row: Option<bool>,
    /// The `b_i`-rim of the transpose is its rim without the top row.
    pub lower_rim_of_transpose_skips_top_row: Option<bool>,
    /// After stripping the first `b_{i+1}`-rim at most two part sizes remain.
    pub remainder_two_sizes: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RimReport {
    pub n: usize,
    pub variant: Variant,
    pub thresholds: Vec<Wall>,
    pub rows: Vec<RimRow>,
    pub pipeline_error: Option<String>,
    pub verdict: Verdict,
}

fn rim_without_top_row(p: &Partition) -> Vec<BoxPos> {
    p.rim().into_iter().filter(|b| b.row > 1).collect()
}

fn same_cells(mut a: Vec<BoxPos>, mut b: Vec<BoxPos>) -> bool {
    a.sort_unstable();
    b.sort_unstable();
    a == b
}

pub fn check_rim_remark(n: usize, variant: Variant, allow_composite: bool) -> Result<RimReport> {
    let sweep = sweep_sign(n, variant, allow_composite)?;
    let mut rows = Vec::new();
    for step in &sweep.trace.steps {
        let p = &step.post;
        let bracket = bracket_of(step.wall, &sweep.thresholds);
        let (mut c1, mut c2, mut c3) = (None, None, None);
        if let Bracket::Between { lower, upper } = bracket {
            if let (Ok(e_up), false) = (Base::new(upper.denom), p.is_empty()) {
                let rim = e_rim(p, e_up)?;
                c1 = Some(same_cells(rim.clone(), rim_without_top_row(p)));
                let rest = p.remove_boxes(&rim)?;
                c3 = Some(rest.multiplicities().len() <= 2);
            }
            if let (Ok(e_lo), false) = (Base::new(lower.denom), p.is_empty()) {
                let pt = p.transpose();
                c2 = Some(same_cells(e_rim(&pt, e_lo)?, rim_without_top_row(&pt)));
            }
        }
        rows.push(RimRow {
            wall: step.wall,
            state: p.clone(),
            bracket,
            upper_rim_skips_top_row: c1,
            lower_rim_of_transpose_skips_top_row: c2,
            remainder_two_sizes: c3,
        });
    }
    let any_fail = rows.iter().any(|r| {
        [
            r.upper_rim_skips_top_row,
            r.lower_rim_of_transpose_skips_top_row,
            r.remainder_two_sizes,
        ]
        .contains(&Some(false))
    });
    let verdict = if any_fail || sweep.error.is_some() {
        Verdict::Fail
    } else {
        Verdict::Pass
    };
    Ok(RimReport {
        n,
        variant,
        thresholds: sweep.thresholds,
        rows,
        pipeline_error: sweep.error,
        verdict,
    })
}

/// How "good" is read for the difference box in a chamber.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Semantics {
    /// Good addable in the smaller state, base = next wall's denominator.
    DirectUpcoming,
    /// Good addable in the smaller state, base = last crossed denominator.
    DirectLast,
    /// Good addable in the transposed smaller state, base = next denominator.
    ConjugateUpcoming,
    /// Good addable in the transposed smaller state, base = last denominator.
    ConjugateLast,
}

impl Semantics {
    pub const ALL: [Semantics; 4] = [
        Semantics::DirectUpcoming,
        Semantics::DirectLast,
        Semantics::ConjugateUpcoming,
        Semantics::ConjugateLast,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Semantics::DirectUpcoming => "direct_upcoming",
            Semantics::DirectLast => "direct_last",
            Semantics::ConjugateUpcoming => "conjugate_upcoming",
            Semantics::ConjugateLast => "conjugate_last",
        }
    }
}

impl std::str::FromStr for Semantics {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Semantics::ALL
            .into_iter()
            .find(|x| x.name() == s || x.name().replace('_', "-") == s)
            .ok_or_else(|| format!("unknown semantics {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChamberDiff {
    /// Last crossed wall (`None` for the initial chamber).
    pub lower: Option<Wall>,
    /// Next wall (`None` for the final chamber).
    pub upper: Option<Wall>,
    pub smaller: Partition,
    pub larger: Partition,
    /// The single extra cell of the larger state, if it is one.
    pub difference: Option<BoxPos>,
    /// `None` where the semantics has no wall to take a base from.
    pub good: BTreeMap<Semantics, Option<bool>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GoodBoxDiffReport {
    pub smaller: Partition,
    pub larger: Partition,
    pub chambers: Vec<ChamberDiff>,
    pub error: Option<String>,
}

impl GoodBoxDiffReport {
    /// Every chamber differs by exactly one cell.
    pub fn single_box_everywhere(&self) -> bool {
        self.error.is_none() && self.chambers.iter().all(|c| c.difference.is_some())
    }

    /// Non-final chambers where the difference is not a single box, or where
    /// `sem` applies and rejects the box.
    pub fn failures(&self, sem: Semantics) -> Vec<&ChamberDiff> {
        self.chambers
            .iter()
            .filter(|c| c.upper.is_some())
            .filter(|c| {
                c.difference.is_none() || c.good.get(&sem).copied().flatten() == Some(false)
            })
            .collect()
    }
}

fn goodness(
    smaller: &Partition,
    cell: BoxPos,
    lower: Option<Wall>,
    upper: Option<Wall>,
    semantics: &[Semantics],
) -> BTreeMap<Semantics, Option<bool>> {
    semantics
        .iter()
        .map(|&sem| {
            let wall = match sem {
                Semantics::DirectUpcoming | Semantics::ConjugateUpcoming => upper,
                Semantics::DirectLast | Semantics::ConjugateLast => lower,
            };
            let verdict = wall.and_then(|w| w.base()).map(|e: Base| match sem {
                Semantics::DirectUpcoming | Semantics::DirectLast => {
                    is_good_addable(smaller, e, cell)
                }
                _ => is_good_addable(&smaller.transpose(), e, cell.transpose()),
            });
            (sem, verdict)
        })
        .collect()
}

/// Evolves `smaller` (walls of order `|smaller|`) and `larger` (walls of
/// order `|larger|`) through one merged ascending sweep and records the
/// difference in every chamber.
pub fn compare_orbits(
    smaller: &Partition,
    larger: &Partition,
    variant: Variant,
    semantics: &[Semantics],
) -> Result<GoodBoxDiffReport> {
    let m = larger.size();
    let walls = if m == 0 {
        vec![]
    } else {
        farey_walls(m, Wall::ONE)?.walls
    };
    let small_order = smaller.size() as u32;
    let mut s = smaller.clone();
    let mut l = larger.clone();
    let mut chambers = Vec::with_capacity(walls.len() + 1);
    let mut error = None;
    let mut record = |lower: Option<Wall>, upper: Option<Wall>, s: &Partition, l: &Partition| {
        let difference = l.single_box_difference(s);
        let good = match difference {
            Some(cell) => goodness(s, cell, lower, upper, semantics),
            None => semantics.iter().map(|&x| (x, None)).collect(),
        };
        chambers.push(ChamberDiff {
            lower,
            upper,
            smaller: s.clone(),
            larger: l.clone(),
            difference,
            good,
        });
    };
    record(None, walls.first().copied(), &s, &l);
    for (i, &w) in walls.iter().enumerate() {
        let step = |p: &Partition| cross_wall(p, w, variant).map(|r| r.post);
        let next_l = step(&l);
        let next_s = if w.denom() <= small_order {
            step(&s)
        } else {
            Ok(s.clone())
        };
        match (next_s, next_l) {
            (Ok(ns), Ok(nl)) => {
                s = ns;
                l = nl;
            }
            (Err(e), _) | (_, Err(e)) => {
                error = Some(format!("at wall {w}: {e}"));
                break;
            }
        }
        record(Some(w), walls.get(i + 1).copied(), &s, &l);
    }
    Ok(GoodBoxDiffReport {
        smaller: smaller.clone(),
        larger: larger.clone(),
        chambers,
        error,
    })
}

/// One report per `λ ⊢ m-1`, comparing it with `λ` plus a first-row box.
pub fn check_goodbox_conjecture(
    m: usize,
    variant: Variant,
    semantics: &[Semantics],
) -> Result<Vec<GoodBoxDiffReport>> {
    crate::partition::enumerate_partitions(m.saturating_sub(1))
        .map(|lambda| {
            let mu = lambda.add_box(BoxPos::new(1, lambda.part(1) + 1))?;
            compare_orbits(&lambda, &mu, variant, semantics)
        })
        .collect()
}
