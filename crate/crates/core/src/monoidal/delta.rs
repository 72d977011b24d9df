use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::scat::{Arrow, ArrowId, FinCat, ObjId};
use crate::simplex;

/// `Δ^op` on the objects `[0], ..., [M]`. An arrow `[n] -> [m]` is a
/// monotone map `[m] -> [n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaOp {
    pub bound: usize,
    pub category: FinCat,
    /// Per arrow: the underlying map `[m] -> [n]` as its value vector.
    pub maps: Vec<Vec<usize>>,
    index: HashMap<(usize, Vec<usize>), ArrowId>,
}

fn arrow_name(map: &[usize], target: usize) -> String {
    let values: Vec<String> = map.iter().map(|v| v.to_string()).collect();
    let sep = if target < 10 { "" } else { "," };
    format!("{}→{}:{}", map.len() - 1, target, values.join(sep))
}

impl DeltaOp {
    pub fn new(bound: usize) -> Result<Self> {
        let objects: Vec<String> = (0..=bound).map(|n| format!("[{n}]")).collect();
        let mut arrows = Vec::new();
        let mut maps = Vec::new();
        let mut index = HashMap::new();
        for n in 0..=bound {
            for m in 0..=bound {
                for map in simplex::monotone_maps(m, n) {
                    index.insert((n, map.clone()), arrows.len());
                    arrows.push(Arrow { name: arrow_name(&map, n), src: n, tgt: m });
                    maps.push(map);
                }
            }
        }
        let identities = (0..=bound).map(|n| index[&(n, simplex::identity(n))]).collect();
        let category = FinCat::from_parts(objects, arrows.clone(), identities, |g, f| {
            // g ∘ f in Δ^op is f ∘ g in Δ
            index.get(&(arrows[f].src, simplex::compose(&maps[f], &maps[g]))).copied()
        })?;
        Ok(Self { bound, category, maps, index })
    }

    /// The arrow `[n] -> [m]` of `f : [m] -> [n]`.
    pub fn arrow(&self, f: &[usize], n: usize) -> Result<ArrowId> {
        self.index
            .get(&(n, f.to_vec()))
            .copied()
            .ok_or_else(|| Error::NotAnArrow(format!("{f:?} into [{n}] within level {}", self.bound)))
    }

    /// Source level `n` of the arrow, the codomain of the underlying map.
    pub fn source(&self, a: ArrowId) -> ObjId {
        self.category.arrow_info(a).src
    }

    pub fn target(&self, a: ArrowId) -> ObjId {
        self.category.arrow_info(a).tgt
    }

    pub fn map(&self, a: ArrowId) -> &[usize] {
        &self.maps[a]
    }
}
