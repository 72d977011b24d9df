use serde::{Deserialize, Serialize};

use super::{CellId, TruncatedSSet};
use crate::report::ValidationReport;

/// A dimension-wise assignment of cells; whether it is simplicial is
/// decided by [`SSetMap::validate`] against a source and target.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SSetMap {
    pub assign: Vec<Vec<CellId>>,
}

impl SSetMap {
    pub fn new(assign: Vec<Vec<CellId>>) -> Self {
        Self { assign }
    }

    pub fn identity(x: &TruncatedSSet) -> Self {
        Self { assign: (0..=x.cap()).map(|k| (0..x.count(k)).collect()).collect() }
    }

    /// Map sending every cell of `x` to the unique cell of a point.
    pub fn to_point(x: &TruncatedSSet) -> Self {
        Self { assign: (0..=x.cap()).map(|k| vec![0; x.count(k)]).collect() }
    }

    pub fn apply(&self, k: usize, x: CellId) -> CellId {
        self.assign[k][x]
    }

    pub fn cap(&self) -> usize {
        self.assign.len().saturating_sub(1)
    }

    /// `after ∘ self`.
    pub fn then(&self, after: &SSetMap) -> SSetMap {
        SSetMap {
            assign: self
                .assign
                .iter()
                .zip(&after.assign)
                .map(|(f, g)| f.iter().map(|&y| g[y]).collect())
                .collect(),
        }
    }

    pub fn validate(&self, source: &TruncatedSSet, target: &TruncatedSSet) -> ValidationReport {
        let mut report = ValidationReport::new();
        let cap = source.cap().min(target.cap());
        if self.assign.len() < cap + 1 {
            report.push("map covers every dimension", format!("{} of {} dimensions", self.assign.len(), cap + 1));
            return report;
        }
        for k in 0..=cap {
            if self.assign[k].len() != source.count(k) {
                report.push("map defined on every cell", format!("dimension {k}"));
                return report;
            }
            if let Some(&bad) = self.assign[k].iter().find(|&&y| y >= target.count(k)) {
                report.push("map lands in target", format!("dimension {k} value {bad}"));
                return report;
            }
        }
        for k in 0..=cap {
            for x in 0..source.count(k) {
                let fx = self.assign[k][x];
                if k > 0 {
                    for i in 0..=k {
                        if self.assign[k - 1][source.face(k, i, x)] != target.face(k, i, fx) {
                            report.push(format!("map commutes with d_{i}"), format!("{k}-cell {}", source.name(k, x)));
                        }
                    }
                }
                if k < cap {
                    for i in 0..=k {
                        if self.assign[k + 1][source.degen(k, i, x)] != target.degen(k, i, fx) {
                            report.push(format!("map commutes with s_{i}"), format!("{k}-cell {}", source.name(k, x)));
                        }
                    }
                }
                if report.full() {
                    return report;
                }
            }
        }
        report
    }

    pub fn is_bijective(&self, target: &TruncatedSSet) -> bool {
        self.assign.iter().enumerate().all(|(k, f)| {
            if f.len() != target.count(k) {
                return false;
            }
            let mut seen = vec![false; f.len()];
            f.iter().all(|&y| y < seen.len() && !std::mem::replace(&mut seen[y], true))
        })
    }

    pub fn inverse(&self) -> SSetMap {
        SSetMap {
            assign: self
                .assign
                .iter()
                .map(|f| {
                    let mut inv = vec![0; f.len()];
                    for (x, &y) in f.iter().enumerate() {
                        inv[y] = x;
                    }
                    inv
                })
                .collect(),
        }
    }

    pub fn truncate(&self, cap: usize) -> SSetMap {
        SSetMap { assign: self.assign[..=cap.min(self.cap())].to_vec() }
    }
}
