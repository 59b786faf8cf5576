//! Reduced fractions in `(0, 1]` and Farey wall sequences.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::Base;

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A reduced fraction `a/b` with `0 < a/b <= 1`. The value `1/1` only appears
/// as the terminal wall.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Wall {
    a: u32,
    b: u32,
}

impl Wall {
    pub const ONE: Wall = Wall { a: 1, b: 1 };

    /// Builds `a/b`, rejecting non-reduced input and values outside `(0, 1]`.
    pub fn new(a: u32, b: u32) -> Result<Self> {
        let invalid = || Error::InvalidWall {
            a: a as u64,
            b: b as u64,
        };
        if a == 0 || b == 0 || a > b || gcd(a as u64, b as u64) != 1 {
            return Err(invalid());
        }
        Ok(Wall { a, b })
    }

    /// Builds `a/b` after reducing to lowest terms. The flag reports whether a
    /// reduction happened.
    pub fn reduced(a: u64, b: u64) -> Result<(Self, bool)> {
        if a == 0 || b == 0 || a > b {
            return Err(Error::InvalidWall { a, b });
        }
        let g = gcd(a, b);
        let (ra, rb) = (a / g, b / g);
        let (ra, rb) = match (u32::try_from(ra), u32::try_from(rb)) {
            (Ok(x), Ok(y)) => (x, y),
            _ => return Err(Error::InvalidWall { a, b }),
        };
        Ok((Wall { a: ra, b: rb }, g != 1))
    }

    #[inline]
    pub fn numer(self) -> u32 {
        self.a
    }

    #[inline]
    pub fn denom(self) -> u32 {
        self.b
    }

    /// The Mullineux base at this wall: its denominator. `None` for `1/1`.
    pub fn base(self) -> Option<Base> {
        Base::new(self.b).ok()
    }

    pub fn is_one(self) -> bool {
        self.a == self.b
    }
}

impl Ord for Wall {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.a as u64 * other.b as u64).cmp(&(other.a as u64 * self.b as u64))
    }
}

impl PartialOrd for Wall {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Wall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.a, self.b)
    }
}

impl FromStr for Wall {
    type Err = Error;

    /// Parses `a/b`. Input not in lowest terms is reduced with a logged
    /// warning; `1` is accepted as `1/1`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseWall(s.to_string());
        let t = s.trim();
        let (a, b) = match t.split_once('/') {
            Some((a, b)) => (
                a.trim().parse::<u64>().map_err(|_| bad())?,
                b.trim().parse::<u64>().map_err(|_| bad())?,
            ),
            None => (t.parse::<u64>().map_err(|_| bad())?, 1),
        };
        let (w, was_reduced) = Wall::reduced(a, b)?;
        if was_reduced {
            log::warn!("wall {t} is not in lowest terms; using {w}");
        }
        Ok(w)
    }
}

impl Serialize for Wall {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The Farey fractions of order `order` strictly between `0` and `upper`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WallSequence {
    pub order: usize,
    pub upper: Wall,
    pub walls: Vec<Wall>,
}

impl WallSequence {
    pub fn iter(&self) -> std::slice::Iter<'_, Wall> {
        self.walls.iter()
    }

    pub fn len(&self) -> usize {
        self.walls.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walls.is_empty()
    }

    /// The wall after `walls[i]`, or `upper` for the last one.
    pub fn successor(&self, i: usize) -> Wall {
        self.walls.get(i + 1).copied().unwrap_or(self.upper)
    }
}

impl<'a> IntoIterator for &'a WallSequence {
    type Item = &'a Wall;
    type IntoIter = std::slice::Iter<'a, Wall>;

    fn into_iter(self) -> Self::IntoIter {
        self.walls.iter()
    }
}

/// All reduced fractions with denominator at most `n` in `(0, upper)`,
/// ascending.
///
/// Uses the next-term recurrence: from neighbors `a/b < c/d` the next term is
/// `(k c - a) / (k d - b)` with `k = (n + b) / d`.
pub fn farey_walls(n: usize, upper: Wall) -> Result<WallSequence> {
    if n == 0 {
        return Err(Error::InvalidOrder);
    }
    let n64 = n as u64;
    assert!(n64 < (1 << 31), "Farey order too large");
    let mut walls = Vec::new();
    let (mut a, mut b, mut c, mut d) = (0u64, 1u64, 1u64, n64);
    // c/d < upper  <=>  c * upper.b < upper.a * d
    let (ua, ub) = (upper.a as u64, upper.b as u64);
    while c < d && c * ub < ua * d {
        walls.push(Wall {
            a: c as u32,
            b: d as u32,
        });
        let k = (n64 + b) / d;
        (a, b, c, d) = (c, d, k * c - a, k * d - b);
    }
    Ok(WallSequence {
        order: n,
        upper,
        walls,
    })
}

/// Farey-neighbor test for `w1 < w2`: `a2 b1 - a1 b2 = 1`.
pub fn neighbor_check(w1: Wall, w2: Wall) -> bool {
    w2.a as i64 * w1.b as i64 - w1.a as i64 * w2.b as i64 == 1
}
