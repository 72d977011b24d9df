use serde::{Deserialize, Serialize};

use crate::scat::{ArrowId, FinCat, ObjId};
use crate::sset::{from_model, CellId, ModelIndex, TruncatedSSet};

/// A string of composable arrows `d_0 -> d_1 -> ... -> d_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Chain {
    pub objects: Vec<ObjId>,
    pub arrows: Vec<ArrowId>,
}

impl Chain {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// The composite `d_i -> d_j` for `i <= j`.
    pub fn arrow_between(&self, d: &FinCat, i: usize, j: usize) -> ArrowId {
        let mut a = d.identity(self.objects[i]);
        for t in i..j {
            a = d.compose(self.arrows[t], a).expect("chain arrows are composable");
        }
        a
    }

    /// Reindexing along a monotone map `[m] -> [k]`.
    pub fn reindex(&self, d: &FinCat, alpha: &[usize]) -> Chain {
        Chain {
            objects: alpha.iter().map(|&v| self.objects[v]).collect(),
            arrows: alpha.windows(2).map(|w| self.arrow_between(d, w[0], w[1])).collect(),
        }
    }
}

/// All `k`-chains of `d`, extended arrow by arrow.
pub fn chains(d: &FinCat, k: usize) -> Vec<Chain> {
    let mut level: Vec<Chain> =
        (0..d.object_count()).map(|o| Chain { objects: vec![o], arrows: Vec::new() }).collect();
    for _ in 0..k {
        let mut next = Vec::new();
        for c in &level {
            let last = *c.objects.last().expect("chains are nonempty");
            for (a, arrow) in d.arrows().iter().enumerate() {
                if arrow.src == last {
                    let mut e = c.clone();
                    e.objects.push(arrow.tgt);
                    e.arrows.push(a);
                    next.push(e);
                }
            }
        }
        level = next;
    }
    level
}

#[derive(Clone, Debug)]
pub struct OrdinaryNerve {
    pub sset: TruncatedSSet,
    pub chains: ModelIndex<Chain>,
}

impl OrdinaryNerve {
    pub fn chain(&self, k: usize, x: CellId) -> &Chain {
        self.chains.cell(k, x)
    }

    pub fn find(&self, k: usize, chain: &Chain) -> Option<CellId> {
        self.chains.get(k, chain)
    }
}

/// Nerve of a finite category: `k`-cells are composable `k`-chains.
pub fn ordinary_nerve(d: &FinCat, cap: usize) -> OrdinaryNerve {
    let cells = (0..=cap).map(|k| chains(d, k)).collect();
    let (sset, chains) = from_model(
        cap,
        cells,
        |k, c| {
            if k == 0 {
                d.objects()[c.objects[0]].clone()
            } else {
                c.arrows.iter().map(|&a| d.arrow_info(a).name.as_str()).collect::<Vec<_>>().join("|")
            }
        },
        |k, i, c| c.reindex(d, &crate::simplex::coface(k, i)),
        |k, i, c| c.reindex(d, &crate::simplex::codegeneracy(k, i)),
    )
    .expect("chains are closed under reindexing");
    OrdinaryNerve { sset, chains }
}
