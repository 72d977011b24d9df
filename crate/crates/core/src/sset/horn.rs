use std::collections::{HashMap, HashSet};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{CellId, TruncatedSSet};
use crate::certificate::{Certificate, CountRow};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum HornMode {
    /// Only `Λ^n_k` with `0 < k < n`.
    Inner,
    /// Every `Λ^n_k`.
    All,
}

/// Filler statistics for one horn shape `Λ^n_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HornEntry {
    pub n: usize,
    pub k: usize,
    pub horns: usize,
    pub unfilled: usize,
    /// Face ids `(d_i)_{i != k}` of the first unfillable horn found.
    pub witness: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HornReport {
    pub mode: HornMode,
    pub checked_up_to: usize,
    pub entries: Vec<HornEntry>,
    /// Fillability above the truncation is never claimed.
    pub unknown_beyond: usize,
}

impl HornReport {
    pub fn is_ok(&self) -> bool {
        self.entries.iter().all(|e| e.unfilled == 0)
    }

    pub fn first_failure(&self) -> Option<&HornEntry> {
        self.entries.iter().find(|e| e.unfilled > 0)
    }
}

/// All horns `Λ^n_k -> X`, each given as the faces `y_i` for `i != k` in
/// increasing `i`, subject to `d_i y_j = d_{j-1} y_i` for `i < j`.
pub fn enumerate_horns(x: &TruncatedSSet, n: usize, k: usize) -> Vec<Vec<CellId>> {
    let mut out = Vec::new();
    for_each_horn(x, n, k, |h| out.push(h.to_vec()));
    out
}

fn for_each_horn(x: &TruncatedSSet, n: usize, k: usize, mut visit: impl FnMut(&[CellId])) {
    assert!(n >= 1 && k <= n && n - 1 <= x.cap());
    let slots: Vec<usize> = (0..=n).filter(|&i| i != k).collect();
    let by_face = face_index(x, n - 1);
    let mut chosen: Vec<CellId> = Vec::with_capacity(slots.len());
    search(x, n, &slots, &by_face, &mut chosen, &mut visit);
}

/// For `(n-1)`-cells: `(i, d_i y) -> [y]`.
fn face_index(x: &TruncatedSSet, dim: usize) -> HashMap<(usize, CellId), Vec<CellId>> {
    let mut m: HashMap<(usize, CellId), Vec<CellId>> = HashMap::new();
    if dim > 0 {
        for y in 0..x.count(dim) {
            for i in 0..=dim {
                m.entry((i, x.face(dim, i, y))).or_default().push(y);
            }
        }
    }
    m
}

fn search(
    x: &TruncatedSSet,
    n: usize,
    slots: &[usize],
    by_face: &HashMap<(usize, CellId), Vec<CellId>>,
    chosen: &mut Vec<CellId>,
    visit: &mut impl FnMut(&[CellId]),
) {
    let pos = chosen.len();
    if pos == slots.len() {
        visit(chosen);
        return;
    }
    let j = slots[pos];
    let dim = n - 1;
    let compatible = |y: CellId, chosen: &[CellId]| {
        slots[..pos].iter().zip(chosen).all(|(&i, &yi)| x.face(dim, i, y) == x.face(dim, j - 1, yi))
    };
    if pos == 0 || dim == 0 {
        for y in 0..x.count(dim) {
            if compatible(y, chosen) {
                chosen.push(y);
                search(x, n, slots, by_face, chosen, visit);
                chosen.pop();
            }
        }
        return;
    }
    let (i0, y0) = (slots[0], chosen[0]);
    let key = (i0, x.face(dim, j - 1, y0));
    if let Some(cands) = by_face.get(&key) {
        for &y in cands {
            if compatible(y, &chosen[..]) {
                chosen.push(y);
                search(x, n, slots, by_face, chosen, visit);
                chosen.pop();
            }
        }
    }
}

/// The `n`-cells whose faces other than `d_k` are `faces` (given in
/// increasing face index).
pub fn horn_fillers(x: &TruncatedSSet, n: usize, k: usize, faces: &[CellId]) -> Vec<CellId> {
    (0..x.count(n))
        .filter(|&c| (0..=n).filter(|&i| i != k).zip(faces).all(|(i, &y)| x.face(n, i, c) == y))
        .collect()
}

/// Horn-filler search for every horn shape up to dimension `d`.
pub fn horn_check(x: &TruncatedSSet, mode: HornMode, d: usize) -> Result<HornReport> {
    if d > x.cap() {
        return Err(Error::BeyondCap { requested: d, cap: x.cap() });
    }
    let shapes: Vec<(usize, usize)> = (1..=d)
        .flat_map(|n| (0..=n).map(move |k| (n, k)))
        .filter(|&(n, k)| mode == HornMode::All || (0 < k && k < n))
        .collect();
    let entries = shapes.into_par_iter().map(|(n, k)| check_shape(x, n, k)).collect();
    Ok(HornReport { mode, checked_up_to: d, entries, unknown_beyond: x.cap() })
}

/// Certificate that every inner horn of `x` up to dimension `d` fills.
pub fn check_quasicategory(x: &TruncatedSSet, d: usize) -> Result<Certificate> {
    let start = Instant::now();
    let report = horn_check(x, HornMode::Inner, d)?;
    let mut cert = Certificate::new(format!("check quasicat --cap {d}"));
    for e in &report.entries {
        let name = format!("Λ^{}_{} fills", e.n, e.k);
        match &e.witness {
            Some(w) => cert.fail(name, format!("{} of {} horns unfilled, first with faces ({})", e.unfilled, e.horns, w.join(", "))),
            None => {
                cert.check(name, true, format!("{} horns", e.horns));
            }
        }
    }
    if report.entries.is_empty() {
        cert.check("no inner horns below dimension 2", true, "");
    }
    let columns: Vec<String> = (0..=x.cap()).map(|k| k.to_string()).collect();
    let columns: Vec<&str> = columns.iter().map(String::as_str).collect();
    cert.table("cells per dimension", &columns, vec![CountRow { label: "X".into(), values: x.counts() }]);
    if d < x.cap() {
        cert.note(format!("horns above dimension {d} not checked"));
    }
    Ok(cert.timed(start))
}

fn check_shape(x: &TruncatedSSet, n: usize, k: usize) -> HornEntry {
    let filled: HashSet<Vec<CellId>> = (0..x.count(n))
        .map(|c| (0..=n).filter(|&i| i != k).map(|i| x.face(n, i, c)).collect())
        .collect();
    let mut horns = 0;
    let mut unfilled = 0;
    let mut witness = None;
    for_each_horn(x, n, k, |h| {
        horns += 1;
        if !filled.contains(h) {
            unfilled += 1;
            if witness.is_none() {
                witness = Some(h.iter().map(|&y| x.name(n - 1, y).to_string()).collect());
            }
        }
    });
    HornEntry { n, k, horns, unfilled, witness }
}
