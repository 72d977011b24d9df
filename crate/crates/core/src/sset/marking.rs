use std::collections::BTreeSet;

use super::{horn_check, opposite_sset, CellId, HornMode, TruncatedSSet};
use crate::error::{Error, Result};

/// A simplicial set with a distinguished set of edges containing every
/// degenerate edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedSSet {
    pub base: TruncatedSSet,
    pub marked: BTreeSet<CellId>,
}

impl MarkedSSet {
    pub fn new(base: TruncatedSSet, marked: BTreeSet<CellId>) -> Result<Self> {
        if base.cap() >= 1 {
            if let Some(e) = (0..base.count(1)).find(|&e| base.is_degenerate(1, e) && !marked.contains(&e)) {
                return Err(Error::malformed("marking", format!("degenerate edge {} unmarked", base.name(1, e))));
            }
        }
        if let Some(&e) = marked.iter().find(|&&e| e >= base.count(1)) {
            return Err(Error::malformed("marking", format!("edge index {e} out of range")));
        }
        Ok(Self { base, marked })
    }

    pub fn is_marked(&self, e: CellId) -> bool {
        self.marked.contains(&e)
    }

    /// Order reversal keeps the marked edges.
    pub fn opposite(&self) -> MarkedSSet {
        MarkedSSet { base: opposite_sset(&self.base), marked: self.marked.clone() }
    }
}

pub fn mark_sharp(x: &TruncatedSSet) -> MarkedSSet {
    let marked = if x.cap() >= 1 { (0..x.count(1)).collect() } else { BTreeSet::new() };
    MarkedSSet { base: x.clone(), marked }
}

/// Marks the edges invertible in the homotopy category built from cells of
/// dimension at most 2.
///
/// An edge `e : a -> b` is marked when some 2-cell has `d_2 = e` and
/// `d_1 = id_a` (a left inverse) and some 2-cell has `d_0 = e` and
/// `d_1 = id_b` (a right inverse).
pub fn mark_natural(x: &TruncatedSSet) -> Result<MarkedSSet> {
    if x.cap() < 2 {
        return Err(Error::BeyondCap { requested: 2, cap: x.cap() });
    }
    let report = horn_check(x, HornMode::Inner, 2)?;
    if let Some(entry) = report.first_failure() {
        return Err(Error::NotInnerFillable(entry.witness.clone().unwrap_or_default().join(", ")));
    }
    let mut has_left = vec![false; x.count(1)];
    let mut has_right = vec![false; x.count(1)];
    for t in 0..x.count(2) {
        let (d0, d1, d2) = (x.face(2, 0, t), x.face(2, 1, t), x.face(2, 2, t));
        let a = x.face(1, 1, d2);
        if d1 == x.degen(0, 0, a) {
            has_left[d2] = true;
        }
        let b = x.face(1, 0, d0);
        if d1 == x.degen(0, 0, b) {
            has_right[d0] = true;
        }
    }
    let marked = (0..x.count(1)).filter(|&e| has_left[e] && has_right[e]).collect();
    Ok(MarkedSSet { base: x.clone(), marked })
}
