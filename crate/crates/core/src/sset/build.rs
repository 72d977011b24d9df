use std::collections::HashMap;
use std::hash::Hash;

use rayon::prelude::*;

use super::{CellId, TruncatedSSet};
use crate::error::{Error, Result};

/// Lookup between model values and cell ids of a built simplicial set.
#[derive(Clone, Debug)]
pub struct ModelIndex<T> {
    cells: Vec<Vec<T>>,
    index: Vec<HashMap<T, CellId>>,
}

impl<T: Clone + Eq + Hash> ModelIndex<T> {
    pub fn get(&self, k: usize, value: &T) -> Option<CellId> {
        self.index.get(k)?.get(value).copied()
    }

    pub fn cell(&self, k: usize, id: CellId) -> &T {
        &self.cells[k][id]
    }

    pub fn cells(&self, k: usize) -> &[T] {
        &self.cells[k]
    }
}

/// Builds a simplicial set from an explicit model: the cells of each
/// dimension plus face and degeneracy operations on model values.
///
/// Cell ids follow the order of `cells[k]`. Every face or degeneracy must
/// land on a listed value.
pub fn from_model<T, N, Fa, De>(
    cap: usize,
    cells: Vec<Vec<T>>,
    name: N,
    face: Fa,
    degen: De,
) -> Result<(TruncatedSSet, ModelIndex<T>)>
where
    T: Clone + Eq + Hash + Send + Sync + std::fmt::Debug,
    N: Fn(usize, &T) -> String + Sync,
    Fa: Fn(usize, usize, &T) -> T + Sync,
    De: Fn(usize, usize, &T) -> T + Sync,
{
    if cells.len() != cap + 1 {
        return Err(Error::malformed("simplicial model", "need one cell list per dimension"));
    }
    let index: Vec<HashMap<T, CellId>> = cells
        .iter()
        .map(|dim| dim.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect())
        .collect();
    for (k, dim) in cells.iter().enumerate() {
        if index[k].len() != dim.len() {
            return Err(Error::malformed("simplicial model", format!("repeated cell in dimension {k}")));
        }
    }
    let lookup = |k: usize, v: T, what: &str| -> Result<CellId> {
        index[k].get(&v).copied().ok_or_else(|| {
            Error::malformed("simplicial model", format!("{what} lands outside dimension {k}: {v:?}"))
        })
    };
    let names: Vec<Vec<String>> =
        cells.iter().enumerate().map(|(k, dim)| dim.par_iter().map(|c| name(k, c)).collect()).collect();
    let mut faces = vec![Vec::new()];
    for k in 1..=cap {
        let mut per = Vec::with_capacity(k + 1);
        for i in 0..=k {
            let table: Result<Vec<CellId>> =
                cells[k].par_iter().map(|c| lookup(k - 1, face(k, i, c), "face")).collect();
            per.push(table?);
        }
        faces.push(per);
    }
    let mut degens = Vec::new();
    for k in 0..=cap {
        let mut per = Vec::new();
        if k < cap {
            for i in 0..=k {
                let table: Result<Vec<CellId>> =
                    cells[k].par_iter().map(|c| lookup(k + 1, degen(k, i, c), "degeneracy")).collect();
                per.push(table?);
            }
        }
        degens.push(per);
    }
    let sset = TruncatedSSet::from_tables(cap, names, faces, degens)?;
    Ok((sset, ModelIndex { cells, index }))
}
