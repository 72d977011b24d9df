use rayon::prelude::*;

use super::{CellId, TruncatedSSet};
use crate::report::ValidationReport;

/// Checks every simplicial identity inside the truncation and that each
/// cell has exactly one Eilenberg–Zilber decomposition.
pub fn validate_sset(x: &TruncatedSSet) -> ValidationReport {
    let cap = x.cap();
    let per_dim: Vec<ValidationReport> = (0..=cap).into_par_iter().map(|k| validate_dim(x, k)).collect();
    let mut report = ValidationReport::new();
    for r in per_dim {
        for v in r.violations {
            report.push(v.rule, v.witness);
        }
    }
    report
}

fn validate_dim(x: &TruncatedSSet, k: usize) -> ValidationReport {
    let cap = x.cap();
    let mut report = ValidationReport::new();
    let name = |c: CellId| format!("{k}-cell {}", x.name(k, c));
    for c in 0..x.count(k) {
        if k >= 2 {
            for j in 1..=k {
                for i in 0..j {
                    let lhs = x.face(k - 1, i, x.face(k, j, c));
                    let rhs = x.face(k - 1, j - 1, x.face(k, i, c));
                    if lhs != rhs {
                        report.push(format!("d_{i} d_{j} = d_{} d_{i}", j - 1), name(c));
                    }
                }
            }
        }
        if k + 2 <= cap {
            for j in 0..=k {
                for i in 0..=j {
                    let lhs = x.degen(k + 1, i, x.degen(k, j, c));
                    let rhs = x.degen(k + 1, j + 1, x.degen(k, i, c));
                    if lhs != rhs {
                        report.push(format!("s_{i} s_{j} = s_{} s_{i}", j + 1), name(c));
                    }
                }
            }
        }
        if k < cap {
            for j in 0..=k {
                let s = x.degen(k, j, c);
                for i in 0..=k + 1 {
                    let lhs = x.face(k + 1, i, s);
                    let (rhs, rule) = if i == j || i == j + 1 {
                        (c, format!("d_{i} s_{j} = id"))
                    } else if i < j {
                        (x.degen(k - 1, j - 1, x.face(k, i, c)), format!("d_{i} s_{j} = s_{} d_{i}", j - 1))
                    } else {
                        (x.degen(k - 1, j, x.face(k, i - 1, c)), format!("d_{i} s_{j} = s_{j} d_{}", i - 1))
                    };
                    if lhs != rhs {
                        report.push(rule, name(c));
                    }
                }
            }
        }
        let forms = x.all_ez_forms(k, c);
        if forms.len() != 1 {
            report.push("unique Eilenberg–Zilber decomposition", format!("{} ({} decompositions)", name(c), forms.len()));
        } else {
            let f = &forms[0];
            if f.dim < k && x.act(f.dim, f.base, &f.surjection) != c {
                report.push("Eilenberg–Zilber decomposition reproduces the cell", name(c));
            }
        }
        if report.full() {
            break;
        }
    }
    report
}
