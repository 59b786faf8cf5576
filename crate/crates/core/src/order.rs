//! The slope order attached to a wall, chamber partitions, ladders and
//! generalized column regularization.
//!
//! For a wall `a/b` the linear form is `f(x, y) = a x - (b - a) y` evaluated at
//! the quadrant point `(x, y) = (col, -row)`, i.e. `a col + (b - a) row`. Cells
//! with equal `f` form a ladder; consecutive ladder cells differ by `b - a`
//! columns and `a` rows.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::farey::{neighbor_check, Wall};
use crate::partition::{BoxPos, Partition};

/// Tie-break between cells with equal `f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TieBreak {
    /// The cell in the higher row is smaller.
    #[default]
    ShallowFirst,
    /// The cell in the higher row is larger, as the order is literally
    /// written (`y_1 > y_2` ranks the first cell above).
    Literal,
}

/// `a x - (b - a) y` at `(x, y) = (col, -row)`.
#[inline]
pub fn f_ab(w: Wall, b: BoxPos) -> i64 {
    let (x, y) = b.quadrant();
    let (a, d) = (w.numer() as i64, w.denom() as i64);
    a * x - (d - a) * y
}

pub fn box_cmp(w: Wall, b1: BoxPos, b2: BoxPos, tie: TieBreak) -> Ordering {
    f_ab(w, b1).cmp(&f_ab(w, b2)).then_with(|| match tie {
        TieBreak::ShallowFirst => b1.row.cmp(&b2.row),
        TieBreak::Literal => b2.row.cmp(&b1.row),
    })
}

/// Counts cells per row and checks the set is a Young diagram.
fn diagram_from_cells(cells: &[BoxPos], ladder_of: impl Fn(BoxPos) -> i64) -> Result<Partition> {
    let rows = cells.iter().map(|b| b.row).max().unwrap_or(0);
    let mut counts = vec![0usize; rows];
    let mut max_col = vec![0usize; rows];
    for b in cells {
        counts[b.row - 1] += 1;
        max_col[b.row - 1] = max_col[b.row - 1].max(b.col);
    }
    for r in 0..rows {
        let broken_row = counts[r] != max_col[r];
        let broken_stack = r > 0 && counts[r] > counts[r - 1];
        if broken_row || broken_stack {
            // Report the ladder of the first cell that lacks support.
            let offender = cells
                .iter()
                .filter(|b| b.row == r + 1)
                .max_by_key(|b| b.col)
                .copied()
                .expect("row with cells");
            return Err(Error::NotAYoungDiagram {
                ladder: ladder_of(offender),
            });
        }
    }
    Partition::new(counts).map_err(|_| Error::NotAYoungDiagram { ladder: 0 })
}

/// The union of the `n` smallest cells under [`box_cmp`].
///
/// Candidates are the cells with `row + col <= n + 1`, which contain every
/// cell of every `n`-box diagram.
pub fn chamber_partition(n: usize, w: Wall, tie: TieBreak) -> Result<Partition> {
    let mut cells: Vec<BoxPos> = (1..=n)
        .flat_map(|row| (1..=n + 1 - row).map(move |col| BoxPos::new(row, col)))
        .collect();
    cells.sort_unstable_by(|x, y| box_cmp(w, *x, *y, tie));
    cells.truncate(n);
    diagram_from_cells(&cells, |b| f_ab(w, b))
}

/// Quadrant cells with the same `f` as `through`, within `row <= bound` and
/// `col <= bound`, from the shallowest to the deepest.
pub fn ladder_positions(w: Wall, through: BoxPos, bound: usize) -> Vec<BoxPos> {
    let c = f_ab(w, through);
    ladder_cells(w, c, bound, bound)
}

fn ladder_cells(w: Wall, c: i64, max_row: usize, max_col: usize) -> Vec<BoxPos> {
    let (a, d) = (w.numer() as i64, w.denom() as i64);
    (1..=max_row)
        .filter_map(|row| {
            let rest = c - (d - a) * row as i64;
            (rest >= a && rest % a == 0)
                .then(|| (rest / a) as usize)
                .filter(|&col| col <= max_col)
                .map(|col| BoxPos::new(row, col))
        })
        .collect()
}

/// Generalized column regularization: on every ladder, the cells of `p` are
/// slid to the deepest positions of that ladder.
pub fn rc_regularize(p: &Partition, w: Wall) -> Result<Partition> {
    let (a, d) = (w.numer() as i64, w.denom() as i64);
    let mut per_ladder: BTreeMap<i64, usize> = BTreeMap::new();
    for b in p.boxes() {
        *per_ladder.entry(f_ab(w, b)).or_default() += 1;
    }
    let mut cells = Vec::with_capacity(p.size());
    for (&c, &count) in &per_ladder {
        // Ladders are finite below 1; at 1/1 they are vertical and cut at |p|.
        let max_row = if d > a {
            ((c - a) / (d - a)).max(0) as usize
        } else {
            p.size()
        };
        let positions = ladder_cells(w, c, max_row, usize::MAX);
        debug_assert!(positions.len() >= count);
        cells.extend(positions.iter().rev().take(count));
    }
    diagram_from_cells(&cells, |b| f_ab(w, b))
}

/// Outcome of the crossing-free check between two walls.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaCheck {
    /// Whether the walls are Farey neighbors.
    pub neighbors: bool,
    /// A pair `(p, q)` with `f_1(p) < f_1(q)` but `f_2(p) > f_2(q)`.
    pub counterexample: Option<(BoxPos, BoxPos)>,
}

impl LemmaCheck {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Size of the smallest diagram containing both cells.
fn joint_size(p: BoxPos, q: BoxPos) -> usize {
    p.row * p.col + q.row * q.col - p.row.min(q.row) * p.col.min(q.col)
}

/// Searches for two cells of one `n`-box diagram whose `f`-order is strictly
/// reversed between `w1` and `w2`.
pub fn lemma1_no_crossing(w1: Wall, w2: Wall, n: usize) -> LemmaCheck {
    let neighbors = neighbor_check(w1, w2);
    if !neighbors {
        log::warn!("{w1} and {w2} are not Farey neighbors");
    }
    let cells: Vec<BoxPos> = (1..=n)
        .flat_map(|row| (1..=n + 1 - row).map(move |col| BoxPos::new(row, col)))
        .collect();
    let vals: Vec<(i64, i64)> = cells.iter().map(|&b| (f_ab(w1, b), f_ab(w2, b))).collect();
    let mut counterexample = None;
    'outer: for i in 0..cells.len() {
        for j in 0..cells.len() {
            let reversed = vals[i].0 < vals[j].0 && vals[i].1 > vals[j].1;
            if reversed && joint_size(cells[i], cells[j]) <= n {
                counterexample = Some((cells[i], cells[j]));
                break 'outer;
            }
        }
    }
    LemmaCheck {
        neighbors,
        counterexample,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn w(a: u32, b: u32) -> Wall {
        Wall::new(a, b).unwrap()
    }

    fn bx(row: usize, col: usize) -> BoxPos {
        BoxPos::new(row, col)
    }

    #[test]
    fn linear_form() {
        assert_eq!(f_ab(w(1, 2), bx(1, 2)), 3);
        assert_eq!(f_ab(w(2, 3), bx(3, 1)), 5);
        for (r, c) in [(1, 1), (4, 2), (2, 7)] {
            assert_eq!(f_ab(Wall::ONE, bx(r, c)), c as i64);
        }
    }

    #[test]
    fn comparisons() {
        use TieBreak::*;
        assert_eq!(
            box_cmp(w(1, 2), bx(1, 2), bx(2, 1), ShallowFirst),
            Ordering::Less
        );
        assert_eq!(
            box_cmp(w(1, 2), bx(1, 1), bx(1, 2), ShallowFirst),
            Ordering::Less
        );
        assert_eq!(
            box_cmp(w(1, 2), bx(1, 1), bx(1, 2), Literal),
            Ordering::Less
        );
        assert_eq!(
            box_cmp(w(1, 2), bx(1, 2), bx(2, 1), Literal),
            Ordering::Greater
        );
    }

    #[test]
    fn chambers() {
        let t = TieBreak::ShallowFirst;
        assert_eq!(chamber_partition(3, w(1, 2), t).unwrap(), p("[2,1]"));
        assert_eq!(chamber_partition(4, Wall::ONE, t).unwrap(), p("[1,1,1,1]"));
        assert_eq!(chamber_partition(5, w(1, 5), t).unwrap(), p("[5]"));
        assert_eq!(chamber_partition(0, w(1, 2), t).unwrap(), p("[]"));
        // The literal tie-break starts the first chamber at (n-1, 1).
        assert_eq!(
            chamber_partition(5, w(1, 5), TieBreak::Literal).unwrap(),
            p("[4,1]")
        );
    }

    #[test]
    fn ladders() {
        assert_eq!(
            ladder_positions(w(1, 3), bx(1, 3), 4),
            vec![bx(1, 3), bx(2, 1)]
        );
        assert_eq!(
            ladder_positions(w(1, 2), bx(1, 2), 4),
            vec![bx(1, 2), bx(2, 1)]
        );
        assert_eq!(
            ladder_positions(Wall::ONE, bx(1, 1), 3),
            vec![bx(1, 1), bx(2, 1), bx(3, 1)]
        );
    }

    #[test]
    fn regularization() {
        assert_eq!(rc_regularize(&p("[3]"), w(1, 3)).unwrap(), p("[2,1]"));
        assert_eq!(rc_regularize(&p("[3,1]"), w(1, 2)).unwrap(), p("[2,1,1]"));
        assert_eq!(rc_regularize(&p("[1,1,1]"), w(1, 3)).unwrap(), p("[1,1,1]"));
        assert_eq!(rc_regularize(&p("[]"), w(1, 3)).unwrap(), p("[]"));
    }

    #[test]
    fn regularization_failures_are_reported() {
        for q in crate::partition::enumerate_partitions(6) {
            match rc_regularize(&q, w(2, 5)) {
                Ok(r) => assert_eq!(r.size(), 6),
                Err(Error::NotAYoungDiagram { .. }) => {}
                Err(other) => panic!("unexpected {other}"),
            }
        }
    }

    #[test]
    fn lemma_examples() {
        assert!(lemma1_no_crossing(w(1, 3), w(1, 2), 3).holds());
        assert!(lemma1_no_crossing(w(1, 4), w(1, 3), 4).holds());
        let c = lemma1_no_crossing(w(1, 3), w(2, 3), 3);
        assert!(!c.neighbors);
        assert_eq!(c.counterexample, Some((bx(1, 2), bx(2, 1))));
        // (1,4) and (3,1) reverse between 1/3 and 1/2 but need six boxes.
        assert!(lemma1_no_crossing(w(1, 3), w(1, 2), 4).holds());
        assert_eq!(joint_size(bx(1, 4), bx(3, 1)), 6);
    }
}
