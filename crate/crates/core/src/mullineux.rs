//! The `e`-Mullineux involution.
//!
//! The map itself is computed by the good-box recursion
//! `M(f_i λ) = f_{-i} M(λ)`. Mullineux's rim symbol is computed separately and
//! only used to certify a computed image: the symbol of `M(λ)` must carry the
//! same rim sizes `a_i` as `λ` and row counts `a_i - r_i + ε_i`, where
//! `ε_i = 0` if `e | a_i` and `1` otherwise.

use serde::Serialize;

use crate::crystal::good_boxes;
use crate::error::{Error, Result};
use crate::partition::{Base, BoxPos, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MullineuxSymbol {
    pub base: Base,
    /// Sizes of the successive `e`-rims.
    pub rims: Vec<usize>,
    /// Number of rows at the time each `e`-rim is stripped.
    pub rows: Vec<usize>,
}

impl MullineuxSymbol {
    /// Row counts predicted for the image: `a_i - r_i + ε_i`.
    pub fn dual_rows(&self) -> Vec<i64> {
        let e = self.base.get() as usize;
        self.rims
            .iter()
            .zip(&self.rows)
            .map(|(&a, &r)| a as i64 - r as i64 + i64::from(a % e != 0))
            .collect()
    }
}

/// The `e`-rim: the rim walked in path order in segments of `e` cells, each
/// new segment starting on the row below the end of the previous one.
pub fn e_rim(p: &Partition, e: Base) -> Result<Vec<BoxPos>> {
    if p.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let e = e.get() as usize;
    let rim = p.rim();
    let mut out = Vec::new();
    let mut in_segment = 0;
    let mut skip_row = 0;
    for b in rim {
        if b.row <= skip_row {
            continue;
        }
        out.push(b);
        in_segment += 1;
        if in_segment == e {
            in_segment = 0;
            skip_row = b.row;
        }
    }
    Ok(out)
}

/// Strips `e`-rims until the partition is empty.
pub fn mullineux_symbol(p: &Partition, e: Base) -> Result<MullineuxSymbol> {
    if !p.is_regular(e) {
        return Err(Error::NotRegular {
            partition: p.clone(),
            base: e.get(),
        });
    }
    let mut rims = Vec::new();
    let mut rows = Vec::new();
    let mut cur = p.clone();
    while !cur.is_empty() {
        let strip = e_rim(&cur, e)?;
        rims.push(strip.len());
        rows.push(cur.len());
        cur = cur.remove_boxes(&strip)?;
    }
    Ok(MullineuxSymbol {
        base: e,
        rims,
        rows,
    })
}

/// Removes good boxes down to the empty partition, letting `choose` pick the
/// residue at each step from the ascending list of residues that have a good
/// removable box. Returns the residues in removal order.
fn strip_good_boxes(
    p: &Partition,
    e: Base,
    mut choose: impl FnMut(&Partition, &[u32]) -> usize,
) -> Result<Vec<u32>> {
    let mut cur = p.clone();
    let mut seq = Vec::with_capacity(p.size());
    let mut options: Vec<(u32, BoxPos)> = Vec::with_capacity(e.get() as usize);
    while !cur.is_empty() {
        options.clear();
        for (i, g) in good_boxes(&cur, e).into_iter().enumerate() {
            if let Some(b) = g.removable {
                options.push((i as u32, b));
            }
        }
        // Every nonempty e-regular partition has a good removable box.
        let residues: Vec<u32> = options.iter().map(|o| o.0).collect();
        if residues.is_empty() {
            return Err(Error::NotRegular {
                partition: cur,
                base: e.get(),
            });
        }
        let (i, b) = options[choose(&cur, &residues)];
        seq.push(i);
        cur = cur.remove_box(b)?;
    }
    Ok(seq)
}

fn rebuild(seq: &[u32], e: Base) -> Result<Partition> {
    let mut cur = Partition::empty();
    for &i in seq.iter().rev() {
        let j = e.negate(i);
        let b =
            good_boxes(&cur, e)[j as usize]
                .addable
                .ok_or_else(|| Error::MissingGoodAddable {
                    partition: cur.clone(),
                    base: e.get(),
                    residue: j,
                })?;
        cur = cur.add_box(b)?;
    }
    Ok(cur)
}

/// `M_e(p)` for an `e`-regular partition, picking the smallest residue with a
/// good removable box at each step.
pub fn mullineux(p: &Partition, e: Base) -> Result<Partition> {
    mullineux_with_choice(p, e, |_, _| 0)
}

/// Like [`mullineux`] but with a caller-chosen residue at every step. `choose`
/// receives the current partition and the ascending candidate residues and
/// returns an index into them.
pub fn mullineux_with_choice(
    p: &Partition,
    e: Base,
    choose: impl FnMut(&Partition, &[u32]) -> usize,
) -> Result<Partition> {
    if !p.is_regular(e) {
        return Err(Error::NotRegular {
            partition: p.clone(),
            base: e.get(),
        });
    }
    let seq = strip_good_boxes(p, e, choose)?;
    rebuild(&seq, e)
}

/// The conjugated variant on `e`-restricted partitions: `(M_e(p^t))^t`.
pub fn mullineux_restricted(p: &Partition, e: Base) -> Result<Partition> {
    if !p.is_restricted(e) {
        return Err(Error::NotRestricted {
            partition: p.clone(),
            base: e.get(),
        });
    }
    Ok(mullineux(&p.transpose(), e)?.transpose())
}

/// Checks the symbol law between `p` and a claimed image.
pub fn symbol_certificate(p: &Partition, image: &Partition, e: Base) -> Result<bool> {
    if p.size() != image.size() {
        return Err(Error::SizeMismatch(p.size(), image.size()));
    }
    let src = mullineux_symbol(p, e)?;
    let dst = mullineux_symbol(image, e)?;
    if src.rims != dst.rims {
        return Ok(false);
    }
    Ok(src
        .dual_rows()
        .iter()
        .zip(&dst.rows)
        .all(|(&want, &got)| want == got as i64))
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
    fn e_rim_examples() {
        assert_eq!(e_rim(&p("[3]"), e(2)).unwrap(), vec![bx(1, 3), bx(1, 2)]);
        assert_eq!(
            e_rim(&p("[3,1]"), e(3)).unwrap(),
            vec![bx(1, 3), bx(1, 2), bx(1, 1), bx(2, 1)]
        );
        assert_eq!(e_rim(&p("[1]"), e(5)).unwrap(), vec![bx(1, 1)]);
        assert_eq!(e_rim(&p("[]"), e(2)), Err(Error::EmptyPartition));
    }

    #[test]
    fn symbol_examples() {
        let s = mullineux_symbol(&p("[3]"), e(2)).unwrap();
        assert_eq!((s.rims, s.rows), (vec![2, 1], vec![1, 1]));
        let s = mullineux_symbol(&p("[3,1]"), e(3)).unwrap();
        assert_eq!((s.rims, s.rows), (vec![4], vec![2]));
        let s = mullineux_symbol(&p("[2,1]"), e(3)).unwrap();
        assert_eq!((s.rims, s.rows), (vec![3], vec![2]));
        assert!(mullineux_symbol(&p("[1,1]"), e(2)).is_err());
    }

    #[test]
    fn mullineux_examples() {
        assert_eq!(mullineux(&p("[3]"), e(3)).unwrap(), p("[2,1]"));
        assert_eq!(mullineux(&p("[3,1]"), e(2)).unwrap(), p("[3,1]"));
        assert_eq!(mullineux(&p("[3,1]"), e(5)).unwrap(), p("[2,1,1]"));
        assert_eq!(mullineux(&p("[]"), e(3)).unwrap(), p("[]"));
        assert!(matches!(
            mullineux(&p("[1,1,1]"), e(3)),
            Err(Error::NotRegular { .. })
        ));
    }

    #[test]
    fn restricted_examples() {
        assert_eq!(
            mullineux_restricted(&p("[1,1,1]"), e(3)).unwrap(),
            p("[2,1]")
        );
        assert_eq!(mullineux_restricted(&p("[1,1]"), e(2)).unwrap(), p("[1,1]"));
        assert_eq!(
            mullineux_restricted(&p("[2,1]"), e(3)).unwrap(),
            p("[1,1,1]")
        );
        assert!(matches!(
            mullineux_restricted(&p("[3]"), e(3)),
            Err(Error::NotRestricted { .. })
        ));
    }

    #[test]
    fn certificate_examples() {
        assert!(symbol_certificate(&p("[3,1]"), &p("[2,1,1]"), e(3)).unwrap());
        assert!(symbol_certificate(&p("[3]"), &p("[3]"), e(2)).unwrap());
        assert!(symbol_certificate(&p("[2,1]"), &p("[3]"), e(3)).unwrap());
        assert!(!symbol_certificate(&p("[3]"), &p("[3]"), e(3)).unwrap());
        assert!(symbol_certificate(&p("[3]"), &p("[2,1]"), e(3)).unwrap());
        assert!(matches!(
            symbol_certificate(&p("[3]"), &p("[2]"), e(3)),
            Err(Error::SizeMismatch(3, 2))
        ));
    }
}
