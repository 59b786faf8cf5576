//! Residue signatures and good boxes.
//!
//! For residue `i`, the addable (`+`) and removable (`-`) cells of that
//! residue are read from the bottom row upwards. Adjacent `-+` pairs cancel
//! until the word has the form `+^a -^b`. The lowest surviving `-` is the good
//! removable box and the topmost surviving `+` is the good addable box.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{residue, Base, BoxPos, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Addable,
    Removable,
}

impl Sign {
    pub fn symbol(self) -> char {
        match self {
            Sign::Addable => '+',
            Sign::Removable => '-',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignatureWord {
    pub residue: u32,
    pub base: Base,
    /// Cells in reading order (strictly decreasing row).
    pub entries: Vec<(BoxPos, Sign)>,
}

impl SignatureWord {
    pub fn word(&self) -> String {
        self.entries.iter().map(|(_, s)| s.symbol()).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Cancels adjacent `-+` pairs until none remain.
    pub fn reduce(&self) -> SignatureWord {
        let mut stack: Vec<(BoxPos, Sign)> = Vec::with_capacity(self.entries.len());
        for &(b, s) in &self.entries {
            if s == Sign::Addable && matches!(stack.last(), Some((_, Sign::Removable))) {
                stack.pop();
            } else {
                stack.push((b, s));
            }
        }
        SignatureWord {
            residue: self.residue,
            base: self.base,
            entries: stack,
        }
    }
}

impl fmt::Display for SignatureWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (b, s)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}{}", s.symbol(), b)?;
        }
        Ok(())
    }
}

fn check_residue(e: Base, i: u32) -> Result<()> {
    if i >= e.get() {
        return Err(Error::ResidueOutOfRange {
            residue: i,
            base: e.get(),
        });
    }
    Ok(())
}

/// The unreduced residue-`i` word, read bottom to top.
pub fn signature(p: &Partition, e: Base, i: u32) -> Result<SignatureWord> {
    check_residue(e, i)?;
    let mut entries: Vec<(BoxPos, Sign)> = p
        .addable_boxes()
        .into_iter()
        .map(|b| (b, Sign::Addable))
        .chain(
            p.removable_boxes()
                .into_iter()
                .map(|b| (b, Sign::Removable)),
        )
        .filter(|(b, _)| residue(*b, e).value == i)
        .collect();
    entries.sort_by_key(|e| std::cmp::Reverse(e.0.row));
    debug_assert!(entries.windows(2).all(|w| w[0].0.row > w[1].0.row));
    Ok(SignatureWord {
        residue: i,
        base: e,
        entries,
    })
}

pub fn reduced_signature(p: &Partition, e: Base, i: u32) -> Result<SignatureWord> {
    Ok(signature(p, e, i)?.reduce())
}

/// Lowest surviving removable cell of residue `i`.
pub fn good_removable(p: &Partition, e: Base, i: u32) -> Result<Option<BoxPos>> {
    Ok(reduced_signature(p, e, i)?
        .entries
        .into_iter()
        .find(|(_, s)| *s == Sign::Removable)
        .map(|(b, _)| b))
}

/// Topmost surviving addable cell of residue `i`.
pub fn good_addable(p: &Partition, e: Base, i: u32) -> Result<Option<BoxPos>> {
    Ok(reduced_signature(p, e, i)?
        .entries
        .into_iter()
        .rev()
        .find(|(_, s)| *s == Sign::Addable)
        .map(|(b, _)| b))
}

/// Good boxes of one residue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GoodBoxes {
    pub removable: Option<BoxPos>,
    pub addable: Option<BoxPos>,
}

/// Good boxes for every residue `0..e`, from one bottom-to-top pass over the
/// rows. Agrees with [`good_removable`] and [`good_addable`].
pub fn good_boxes(p: &Partition, e: Base) -> Vec<GoodBoxes> {
    let m = e.get() as usize;
    // Per residue: surviving `+` cells (bottom to top) and the stack of
    // uncancelled `-` cells.
    let mut plus: Vec<Option<BoxPos>> = vec![None; m];
    let mut minus: Vec<Vec<BoxPos>> = vec![Vec::new(); m];
    let mut push = |b: BoxPos, s: Sign| {
        let i = residue(b, e).value as usize;
        match s {
            Sign::Removable => minus[i].push(b),
            Sign::Addable => {
                if minus[i].pop().is_none() {
                    plus[i] = Some(b);
                }
            }
        }
    };
    for row in (1..=p.len() + 1).rev() {
        let len = p.part(row);
        // The two cells of one row have different residues.
        if row <= p.len() && len > p.part(row + 1) {
            push(BoxPos::new(row, len), Sign::Removable);
        }
        if row == 1 || p.part(row - 1) > len {
            push(BoxPos::new(row, len + 1), Sign::Addable);
        }
    }
    plus.into_iter()
        .zip(minus.iter().map(|stack| stack.first().copied()))
        .map(|(addable, removable)| GoodBoxes { removable, addable })
        .collect()
}

/// Whether `b` is the good addable box of its own residue in `p`.
pub fn is_good_addable(p: &Partition, e: Base, b: BoxPos) -> bool {
    let i = residue(b, e).value;
    matches!(good_addable(p, e, i), Ok(Some(g)) if g == b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn e(v: u32) -> Base {
        Base::new(v).unwrap()
    }

    fn bx(row: usize, col: usize) -> BoxPos {
        BoxPos::new(row, col)
    }

    #[test]
    fn reduced_words() {
        let s = reduced_signature(&p("[2,1]"), e(3), 2).unwrap();
        assert_eq!(signature(&p("[2,1]"), e(3), 2).unwrap().word(), "-+");
        assert!(s.is_empty());

        let s = reduced_signature(&p("[1]"), e(2), 1).unwrap();
        assert_eq!(s.word(), "++");
        assert_eq!(
            s.entries.iter().map(|x| x.0).collect::<Vec<_>>(),
            vec![bx(2, 1), bx(1, 2)]
        );

        // (3,1) is addable with residue 0 as well, so the word has three letters.
        let s = reduced_signature(&p("[3,1]"), e(2), 0).unwrap();
        assert_eq!(s.word(), "++-");
        assert_eq!(
            s.entries.iter().map(|x| x.0).collect::<Vec<_>>(),
            vec![bx(3, 1), bx(2, 2), bx(1, 3)]
        );
    }

    #[test]
    fn good_removable_examples() {
        assert_eq!(
            good_removable(&p("[2,1,1]"), e(3), 1).unwrap(),
            Some(bx(3, 1))
        );
        assert_eq!(good_removable(&p("[2]"), e(2), 1).unwrap(), Some(bx(1, 2)));
        assert_eq!(good_removable(&p("[2,1]"), e(3), 2).unwrap(), None);
    }

    #[test]
    fn good_addable_examples() {
        assert_eq!(good_addable(&p("[1,1]"), e(3), 1).unwrap(), Some(bx(1, 2)));
        assert_eq!(good_addable(&p("[2]"), e(3), 2).unwrap(), Some(bx(1, 3)));
        assert_eq!(good_addable(&p("[2]"), e(2), 1).unwrap(), Some(bx(2, 1)));
    }

    #[test]
    fn calibration_anchors() {
        assert_eq!(good_addable(&p("[1]"), e(2), 1).unwrap(), Some(bx(1, 2)));
        assert_eq!(good_addable(&p("[2]"), e(3), 2).unwrap(), Some(bx(1, 3)));
    }

    #[test]
    fn one_pass_agrees_with_words() {
        for n in 0..=9 {
            for q in crate::partition::enumerate_partitions(n) {
                for v in 2..=n as u32 + 2 {
                    let all = good_boxes(&q, e(v));
                    for i in 0..v {
                        let g = all[i as usize];
                        assert_eq!(g.removable, good_removable(&q, e(v), i).unwrap());
                        assert_eq!(g.addable, good_addable(&q, e(v), i).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn residue_out_of_range() {
        assert!(signature(&p("[1]"), e(2), 2).is_err());
    }

    #[test]
    fn display_lists_cells() {
        let s = signature(&p("[2]"), e(2), 1).unwrap();
        assert_eq!(s.to_string(), "+(2,1) -(1,2)");
    }
}
