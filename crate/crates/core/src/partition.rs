//! Partitions, Young diagram cells, residues and rims.
//!
//! Rows and columns are 1-based and counted top-down and left-right. The
//! diagram sits in the fourth quadrant with cell `(row, col)` at the lattice
//! point `(x, y) = (col, -row)`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A modulus `e >= 2` used for residues, regularity and Mullineux maps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Base(u32);

impl Base {
    pub fn new(e: u32) -> Result<Self> {
        if e < 2 {
            return Err(Error::InvalidBase(e));
        }
        Ok(Base(e))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    /// `-i mod e`.
    #[inline]
    pub fn negate(self, i: u32) -> u32 {
        (self.0 - i % self.0) % self.0
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A cell of a Young diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoxPos {
    pub row: usize,
    pub col: usize,
}

impl BoxPos {
    pub const fn new(row: usize, col: usize) -> Self {
        BoxPos { row, col }
    }

    /// Fourth-quadrant coordinates `(col, -row)`.
    #[inline]
    pub fn quadrant(self) -> (i64, i64) {
        (self.col as i64, -(self.row as i64))
    }

    /// Inverse of [`BoxPos::quadrant`]; `None` outside the open quadrant.
    pub fn from_quadrant(x: i64, y: i64) -> Option<Self> {
        (x >= 1 && y <= -1).then(|| BoxPos::new((-y) as usize, x as usize))
    }

    pub fn transpose(self) -> Self {
        BoxPos::new(self.col, self.row)
    }

    /// Content `col - row`.
    #[inline]
    pub fn content(self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

impl fmt::Display for BoxPos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl Serialize for BoxPos {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.row, self.col].serialize(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    pub value: u32,
    pub modulus: Base,
}

/// `(col - row) mod e`.
pub fn residue(b: BoxPos, e: Base) -> Residue {
    let m = e.get() as i64;
    Residue {
        value: b.content().rem_euclid(m) as u32,
        modulus: e,
    }
}

/// A weakly decreasing sequence of positive integers. Trailing zeros are never
/// stored, so the empty partition has no parts.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidParts(parts));
        }
        Ok(Partition { parts })
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The one-column partition `1^n`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    #[inline]
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    #[inline]
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `row` (1-based); zero beyond the last part.
    #[inline]
    pub fn part(&self, row: usize) -> usize {
        if row == 0 {
            return usize::MAX;
        }
        self.parts.get(row - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, b: BoxPos) -> bool {
        b.row >= 1 && b.col >= 1 && b.col <= self.part(b.row)
    }

    /// All cells, row by row, left to right.
    pub fn boxes(&self) -> impl Iterator<Item = BoxPos> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |c| BoxPos::new(i + 1, c)))
    }

    pub fn transpose(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let mut cols = Vec::with_capacity(width);
        for c in 1..=width {
            cols.push(self.parts.iter().take_while(|&&p| p >= c).count());
        }
        Partition { parts: cols }
    }

    /// True iff no part value occurs `e` or more times.
    pub fn is_regular(&self, e: Base) -> bool {
        let e = e.get() as usize;
        let mut run = 0;
        for (i, &p) in self.parts.iter().enumerate() {
            run = if i > 0 && self.parts[i - 1] == p {
                run + 1
            } else {
                1
            };
            if run >= e {
                return false;
            }
        }
        true
    }

    /// True iff consecutive differences (with a trailing zero) are below `e`.
    pub fn is_restricted(&self, e: Base) -> bool {
        let e = e.get() as usize;
        self.parts
            .iter()
            .zip(self.parts.iter().skip(1).chain(std::iter::once(&0)))
            .all(|(&a, &b)| a - b < e)
    }

    /// Cells whose addition leaves a partition, by increasing row.
    pub fn addable_boxes(&self) -> Vec<BoxPos> {
        let mut out = Vec::new();
        for row in 1..=self.len() + 1 {
            let len = self.part(row);
            if row == 1 || self.part(row - 1) > len {
                out.push(BoxPos::new(row, len + 1));
            }
        }
        out
    }

    /// Cells whose removal leaves a partition, by increasing row.
    pub fn removable_boxes(&self) -> Vec<BoxPos> {
        (1..=self.len())
            .filter(|&row| self.part(row) > self.part(row + 1))
            .map(|row| BoxPos::new(row, self.part(row)))
            .collect()
    }

    pub fn is_addable(&self, b: BoxPos) -> bool {
        b.row >= 1 && b.col == self.part(b.row) + 1 && (b.row == 1 || self.part(b.row - 1) >= b.col)
    }

    pub fn is_removable(&self, b: BoxPos) -> bool {
        b.row >= 1 && b.col >= 1 && b.col == self.part(b.row) && self.part(b.row + 1) < b.col
    }

    pub fn add_box(&self, b: BoxPos) -> Result<Partition> {
        if !self.is_addable(b) {
            return Err(Error::NotAddable(b, self.clone()));
        }
        let mut parts = self.parts.clone();
        if b.row > parts.len() {
            parts.push(1);
        } else {
            parts[b.row - 1] += 1;
        }
        Ok(Partition { parts })
    }

    pub fn remove_box(&self, b: BoxPos) -> Result<Partition> {
        if !self.is_removable(b) {
            return Err(Error::NotRemovable(b, self.clone()));
        }
        let mut parts = self.parts.clone();
        parts[b.row - 1] -= 1;
        if parts[b.row - 1] == 0 {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Boxes `(i, j)` with `(i+1, j+1)` outside the diagram, in path order: row 1
    /// right to left, then row 2 right to left, and so on.
    pub fn rim(&self) -> Vec<BoxPos> {
        let mut out = Vec::new();
        for row in 1..=self.len() {
            let lo = self.part(row + 1).max(1);
            for col in (lo..=self.part(row)).rev() {
                out.push(BoxPos::new(row, col));
            }
        }
        out
    }

    /// Removes a set of cells; fails if the remainder is not a partition.
    pub fn remove_boxes(&self, cells: &[BoxPos]) -> Result<Partition> {
        let mut parts = self.parts.clone();
        for b in cells {
            if !self.contains(*b) {
                return Err(Error::NotRemovable(*b, self.clone()));
            }
            parts[b.row - 1] -= 1;
        }
        // Each row must lose a suffix of its cells.
        for b in cells {
            if b.col <= parts[b.row - 1] {
                return Err(Error::NotRemovable(*b, self.clone()));
            }
        }
        Partition::new(parts).map_err(|_| Error::NotRemovable(cells[0], self.clone()))
    }

    /// `(part size, multiplicity)` pairs with sizes ascending.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in self.parts.iter().rev() {
            match out.last_mut() {
                Some((s, m)) if *s == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Exponent notation with sizes ascending, e.g. `1^2 3^2`.
    pub fn exponent_string(&self) -> String {
        self.multiplicities()
            .iter()
            .map(|(s, m)| format!("{s}^{m}"))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// If `self` is obtained from `smaller` by adding exactly one cell, returns it.
    pub fn single_box_difference(&self, smaller: &Partition) -> Option<BoxPos> {
        if self.size() != smaller.size() + 1 {
            return None;
        }
        let mut diff = None;
        for row in 1..=self.len() {
            match self.part(row).checked_sub(smaller.part(row)) {
                Some(0) => {}
                Some(1) if diff.is_none() => diff = Some(BoxPos::new(row, self.part(row))),
                _ => return None,
            }
        }
        diff
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `[3,1]`, `3,1`, `[]` and whitespace around tokens.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParsePartition(s.to_string());
        let t = s.trim();
        let t = t.strip_prefix('[').unwrap_or(t);
        let t = t.strip_suffix(']').unwrap_or(t).trim();
        if t.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|tok| tok.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

/// All partitions of `n`, in lexicographically descending order.
pub fn enumerate_partitions(n: usize) -> Partitions {
    Partitions {
        next: Some(Partition::row(n)),
    }
}

#[derive(Debug, Clone)]
pub struct Partitions {
    next: Option<Partition>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        let parts = &current.parts;
        // Rightmost part exceeding 1 gets decremented; the freed cells are
        // refilled greedily with parts no larger than the new value.
        if let Some(k) = parts.iter().rposition(|&p| p > 1) {
            let v = parts[k] - 1;
            let mut rest = parts.len() - k;
            let mut next = parts[..k].to_vec();
            next.push(v);
            while rest > 0 {
                let take = rest.min(v);
                next.push(take);
                rest -= take;
            }
            self.next = Some(Partition { parts: next });
        }
        Some(current)
    }
}
