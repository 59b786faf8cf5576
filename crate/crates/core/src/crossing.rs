//! Wall-crossing steps and their compositions.
//!
//! Crossing a wall `a/b` applies the base-`b` Mullineux involution followed
//! by the transpose. Orbits cross every wall of the Farey sequence of the
//! partition's size in ascending order. The plain mode skips the transpose
//! and is used for the sign-representation sweep.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::farey::{farey_walls, Wall};
use crate::mullineux::{mullineux, mullineux_restricted};
use crate::partition::{Base, Partition};

/// Which Mullineux map a step may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Regular,
    Restricted,
    /// Regular when the state is `b`-regular, otherwise restricted.
    #[default]
    Auto,
}

/// The map actually applied at a step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AppliedVariant {
    Regular,
    Restricted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrbitMode {
    /// Each step is transpose after Mullineux.
    #[default]
    Crossing,
    /// Each step is the Mullineux image alone.
    Plain,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepRecord {
    pub wall: Wall,
    pub base: u32,
    pub variant: AppliedVariant,
    #[serde(skip)]
    pub pre: Partition,
    pub image: Partition,
    pub post: Partition,
    /// Under [`Variant::Auto`], the restricted image when the state was both
    /// regular and restricted and the two maps disagreed. Kept out of the
    /// serialized trace.
    #[serde(skip)]
    pub restricted_image: Option<Partition>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitTrace {
    pub start: Partition,
    pub mode: OrbitMode,
    pub steps: Vec<StepRecord>,
}

impl OrbitTrace {
    /// The start followed by every post-state.
    pub fn states(&self) -> impl Iterator<Item = &Partition> {
        std::iter::once(&self.start).chain(self.steps.iter().map(|s| &s.post))
    }

    pub fn final_state(&self) -> &Partition {
        self.steps.last().map_or(&self.start, |s| &s.post)
    }
}

fn wall_base(w: Wall) -> Result<Base> {
    w.base().ok_or(Error::InvalidBase(w.denom()))
}

fn apply(p: &Partition, w: Wall, variant: Variant, mode: OrbitMode) -> Result<StepRecord> {
    let e = wall_base(w)?;
    let regular = p.is_regular(e);
    let restricted = p.is_restricted(e);
    let (applied, image, restricted_image) = match variant {
        Variant::Regular => (AppliedVariant::Regular, mullineux(p, e)?, None),
        Variant::Restricted => (
            AppliedVariant::Restricted,
            mullineux_restricted(p, e)?,
            None,
        ),
        Variant::Auto if regular => {
            let image = mullineux(p, e)?;
            let other = if restricted {
                Some(mullineux_restricted(p, e)?).filter(|r| *r != image)
            } else {
                None
            };
            if let Some(r) = &other {
                log::info!("{p} at {w}: regular image {image}, restricted image {r}");
            }
            (AppliedVariant::Regular, image, other)
        }
        Variant::Auto if restricted => (
            AppliedVariant::Restricted,
            mullineux_restricted(p, e)?,
            None,
        ),
        Variant::Auto => {
            return Err(Error::NeitherRegularNorRestricted {
                partition: p.clone(),
                base: e.get(),
            })
        }
    };
    let post = match mode {
        OrbitMode::Crossing => image.transpose(),
        OrbitMode::Plain => image.clone(),
    };
    Ok(StepRecord {
        wall: w,
        base: e.get(),
        variant: applied,
        pre: p.clone(),
        image,
        post,
        restricted_image,
    })
}

/// One crossing: `post = transpose(M_b(p))` with `b` the wall denominator.
pub fn cross_wall(p: &Partition, w: Wall, variant: Variant) -> Result<StepRecord> {
    apply(p, w, variant, OrbitMode::Crossing)
}

/// Runs steps until the first failure. Returns the trace so far and the
/// error, if any, with its wall attached.
pub fn orbit_prefix(
    start: &Partition,
    walls: impl IntoIterator<Item = Wall>,
    variant: Variant,
    mode: OrbitMode,
) -> (OrbitTrace, Option<Error>) {
    let mut steps: Vec<StepRecord> = Vec::new();
    let mut cur = start.clone();
    let mut error = None;
    for w in walls {
        match apply(&cur, w, variant, mode) {
            Ok(step) => {
                cur = step.post.clone();
                steps.push(step);
            }
            Err(e) => {
                error = Some(Error::Step {
                    wall: w,
                    source: Box::new(e),
                });
                break;
            }
        }
    }
    let trace = OrbitTrace {
        start: start.clone(),
        mode,
        steps,
    };
    (trace, error)
}

fn run_orbit(
    start: &Partition,
    walls: impl IntoIterator<Item = Wall>,
    variant: Variant,
    mode: OrbitMode,
) -> Result<OrbitTrace> {
    match orbit_prefix(start, walls, variant, mode) {
        (trace, None) => Ok(trace),
        (_, Some(e)) => Err(e),
    }
}

/// The walls of order `n` that are at most `through`.
pub fn sign_walls(n: usize, through: Wall) -> Result<Vec<Wall>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    Ok(farey_walls(n, Wall::ONE)?
        .walls
        .into_iter()
        .filter(|w| *w <= through)
        .collect())
}

/// Crosses every wall of order `|p|` below `upper`, smallest first.
pub fn compose_orbit(p: &Partition, upper: Wall, variant: Variant) -> Result<OrbitTrace> {
    let n = p.size();
    if n == 0 {
        return run_orbit(p, [], variant, OrbitMode::Crossing);
    }
    let walls = farey_walls(n, upper)?;
    run_orbit(p, walls.walls, variant, OrbitMode::Crossing)
}

/// Same walls as [`compose_orbit`] but with an explicit mode.
pub fn orbit_with_mode(
    p: &Partition,
    upper: Wall,
    variant: Variant,
    mode: OrbitMode,
) -> Result<OrbitTrace> {
    let n = p.size();
    if n == 0 {
        return run_orbit(p, [], variant, mode);
    }
    let walls = farey_walls(n, upper)?;
    run_orbit(p, walls.walls, variant, mode)
}

pub fn is_prime(n: usize) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// The plain-mode orbit of the column `1^n` through every wall `<= through`.
///
/// With `through = r`, the final state is `N_r(1^n)`.
pub fn sign_orbit(
    n: usize,
    through: Wall,
    variant: Variant,
    allow_composite: bool,
) -> Result<OrbitTrace> {
    if !allow_composite && !is_prime(n) {
        return Err(Error::NotPrime(n));
    }
    let start = Partition::column(n);
    run_orbit(&start, sign_walls(n, through)?, variant, OrbitMode::Plain)
}
