//! Finite simplicial sets truncated at a dimension cap.
//!
//! Cells are stored in every dimension up to the cap, degenerate ones
//! included. Within a dimension a cell is addressed by its index; the
//! string names are the external identifiers used by documents.

mod build;
mod horn;
mod iso;
mod map;
mod marking;
mod ops;
mod validate;

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::simplex;

pub use build::{from_model, ModelIndex};
pub use horn::{check_quasicategory, enumerate_horns, horn_check, horn_fillers, HornEntry, HornMode, HornReport};
pub use iso::{all_sset_maps, sset_iso, IsoFamily};
pub use map::SSetMap;
pub use marking::{mark_natural, mark_sharp, MarkedSSet};
pub(crate) use ops::{product_index, product_parts, product_with_cap};
pub use ops::{
    binary_product, disjoint_union, discrete, horn_complex, labelled_coproduct, opposite_sset, point, product_many,
    fiber, pullback, standard_simplex, Pullback,
};
pub use validate::validate_sset;

pub type CellId = usize;

/// Eilenberg–Zilber form of a cell: `cell = surjection^* base` with `base`
/// nondegenerate of dimension `dim`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EzForm {
    pub dim: usize,
    pub base: CellId,
    pub surjection: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct TruncatedSSet {
    cap: usize,
    names: Vec<Vec<String>>,
    /// `face[k][i][x]`; `face[0]` is empty.
    face: Vec<Vec<Vec<CellId>>>,
    /// `degen[k][i][x]` for `k < cap`.
    degen: Vec<Vec<Vec<CellId>>>,
    boundary: OnceLock<Vec<HashMap<Vec<CellId>, Vec<CellId>>>>,
    lookup: OnceLock<Vec<HashMap<String, CellId>>>,
}

impl PartialEq for TruncatedSSet {
    fn eq(&self, other: &Self) -> bool {
        self.cap == other.cap
            && self.names == other.names
            && self.face == other.face
            && self.degen == other.degen
    }
}

impl Eq for TruncatedSSet {}

impl TruncatedSSet {
    /// Assembles a simplicial set from raw tables, checking only shapes and
    /// index ranges. Simplicial identities are the business of
    /// [`validate_sset`].
    pub fn from_tables(
        cap: usize,
        names: Vec<Vec<String>>,
        face: Vec<Vec<Vec<CellId>>>,
        degen: Vec<Vec<Vec<CellId>>>,
    ) -> Result<Self> {
        if names.len() != cap + 1 {
            return Err(Error::malformed("simplicial set", "need one cell list per dimension"));
        }
        if face.len() != cap + 1 || degen.len() != cap + 1 {
            return Err(Error::malformed("simplicial set", "face/degeneracy tables misshapen"));
        }
        for k in 0..=cap {
            let mut seen = HashMap::new();
            for (x, n) in names[k].iter().enumerate() {
                if let Some(prev) = seen.insert(n.as_str(), x) {
                    return Err(Error::malformed(
                        "simplicial set",
                        format!("duplicate id `{n}` in dimension {k} (cells {prev} and {x})"),
                    ));
                }
            }
            let expect_faces = if k == 0 { 0 } else { k + 1 };
            if face[k].len() != expect_faces {
                return Err(Error::malformed("simplicial set", format!("dimension {k} needs {expect_faces} face maps")));
            }
            for (i, table) in face[k].iter().enumerate() {
                if table.len() != names[k].len() || table.iter().any(|&y| y >= names[k - 1].len()) {
                    return Err(Error::malformed("simplicial set", format!("face {k}.{i} misaligned or out of range")));
                }
            }
            let expect_degens = if k < cap { k + 1 } else { 0 };
            if degen[k].len() != expect_degens {
                return Err(Error::malformed("simplicial set", format!("dimension {k} needs {expect_degens} degeneracy maps")));
            }
            for (i, table) in degen[k].iter().enumerate() {
                if table.len() != names[k].len() || table.iter().any(|&y| y >= names[k + 1].len()) {
                    return Err(Error::malformed("simplicial set", format!("degeneracy {k}.{i} misaligned or out of range")));
                }
            }
        }
        Ok(Self { cap, names, face, degen, boundary: OnceLock::new(), lookup: OnceLock::new() })
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn count(&self, k: usize) -> usize {
        self.names.get(k).map_or(0, Vec::len)
    }

    pub fn counts(&self) -> Vec<usize> {
        (0..=self.cap).map(|k| self.count(k)).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.count(0) == 0
    }

    pub fn names(&self, k: usize) -> &[String] {
        &self.names[k]
    }

    pub fn name(&self, k: usize, x: CellId) -> &str {
        &self.names[k][x]
    }

    pub fn find(&self, k: usize, name: &str) -> Option<CellId> {
        let lookup = self.lookup.get_or_init(|| {
            self.names
                .iter()
                .map(|dim| dim.iter().enumerate().map(|(i, n)| (n.clone(), i)).collect())
                .collect()
        });
        lookup.get(k)?.get(name).copied()
    }

    pub fn face(&self, k: usize, i: usize, x: CellId) -> CellId {
        self.face[k][i][x]
    }

    pub fn degen(&self, k: usize, i: usize, x: CellId) -> CellId {
        self.degen[k][i][x]
    }

    pub(crate) fn face_table(&self, k: usize, i: usize) -> &[CellId] {
        &self.face[k][i]
    }

    pub(crate) fn degen_table(&self, k: usize, i: usize) -> &[CellId] {
        &self.degen[k][i]
    }

    pub fn faces_of(&self, k: usize, x: CellId) -> Vec<CellId> {
        if k == 0 {
            return Vec::new();
        }
        (0..=k).map(|i| self.face[k][i][x]).collect()
    }

    /// All `k`-cells whose face tuple `(d_0 x, ..., d_k x)` equals `faces`.
    pub fn cells_with_boundary(&self, k: usize, faces: &[CellId]) -> &[CellId] {
        let index = self.boundary.get_or_init(|| {
            (0..=self.cap)
                .map(|k| {
                    let mut m: HashMap<Vec<CellId>, Vec<CellId>> = HashMap::new();
                    if k > 0 {
                        for x in 0..self.count(k) {
                            m.entry(self.faces_of(k, x)).or_default().push(x);
                        }
                    }
                    m
                })
                .collect()
        });
        index.get(k).and_then(|m| m.get(faces)).map_or(&[], Vec::as_slice)
    }

    /// Acts on a `k`-cell by a monotone map `α : [m] -> [k]`, returning `α^* x`.
    ///
    /// Panics if `m` exceeds the cap.
    pub fn act(&self, k: usize, x: CellId, alpha: &[usize]) -> CellId {
        assert!(alpha.len() - 1 <= self.cap, "operator leaves the truncation");
        let fac = simplex::factorise(alpha, k);
        let mut cell = x;
        let mut dim = k;
        for &i in fac.missing.iter().rev() {
            cell = self.face[dim][i][cell];
            dim -= 1;
        }
        for &j in &fac.repeats {
            cell = self.degen[dim][j][cell];
            dim += 1;
        }
        cell
    }

    /// Iterated `s_0` of a vertex up to dimension `k`.
    pub fn degenerate_vertex(&self, v: CellId, k: usize) -> CellId {
        (0..k).fold(v, |c, d| self.degen[d][0][c])
    }

    /// Vertices of a `k`-cell in order.
    pub fn vertices_of(&self, k: usize, x: CellId) -> Vec<CellId> {
        (0..=k).map(|i| self.act(k, x, &[i])).collect()
    }

    pub fn is_degenerate(&self, k: usize, x: CellId) -> bool {
        k > 0 && (0..k).any(|i| self.degen[k - 1][i][self.face[k][i][x]] == x)
    }

    pub fn nondegenerate(&self, k: usize) -> Vec<CellId> {
        (0..self.count(k)).filter(|&x| !self.is_degenerate(k, x)).collect()
    }

    pub fn nondegenerate_counts(&self) -> Vec<usize> {
        (0..=self.cap).map(|k| self.nondegenerate(k).len()).collect()
    }

    /// Eilenberg–Zilber form, peeling the lowest available degeneracy first.
    pub fn ez(&self, k: usize, x: CellId) -> EzForm {
        for i in 0..k {
            let y = self.face[k][i][x];
            if self.degen[k - 1][i][y] == x {
                let inner = self.ez(k - 1, y);
                let sigma = simplex::codegeneracy(k - 1, i);
                return EzForm {
                    dim: inner.dim,
                    base: inner.base,
                    surjection: simplex::compose(&inner.surjection, &sigma),
                };
            }
        }
        EzForm { dim: k, base: x, surjection: simplex::identity(k) }
    }

    /// Every decomposition reachable by peeling degeneracies in any order.
    pub(crate) fn all_ez_forms(&self, k: usize, x: CellId) -> Vec<EzForm> {
        let mut out: Vec<EzForm> = Vec::new();
        let mut any = false;
        for i in 0..k {
            let y = self.face[k][i][x];
            if self.degen[k - 1][i][y] == x {
                any = true;
                let sigma = simplex::codegeneracy(k - 1, i);
                for inner in self.all_ez_forms(k - 1, y) {
                    let form = EzForm {
                        dim: inner.dim,
                        base: inner.base,
                        surjection: simplex::compose(&inner.surjection, &sigma),
                    };
                    if !out.contains(&form) {
                        out.push(form);
                    }
                }
            }
        }
        if !any {
            out.push(EzForm { dim: k, base: x, surjection: simplex::identity(k) });
        }
        out
    }

    /// Same cells, with the top dimension(s) beyond `cap` discarded.
    pub fn truncate(&self, cap: usize) -> Result<Self> {
        if cap > self.cap {
            return Err(Error::BeyondCap { requested: cap, cap: self.cap });
        }
        let names = self.names[..=cap].to_vec();
        let face = self.face[..=cap].to_vec();
        let mut degen = self.degen[..=cap].to_vec();
        degen[cap] = Vec::new();
        Self::from_tables(cap, names, face, degen)
    }
}

#[cfg(test)]
mod tests;
