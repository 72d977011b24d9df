use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::simplex::{self, Mask};

/// An ordered partition `⟨I_0 | I_1 | ... | I_r⟩` of `I` with `I_0` the
/// endpoint pair.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BeadShape {
    pub blocks: Vec<Mask>,
}

impl BeadShape {
    pub fn dim(&self) -> usize {
        self.blocks.len() - 1
    }

    pub fn ground(&self) -> Mask {
        self.blocks.iter().fold(0, |m, b| m | b)
    }

    /// The flag `I_0 ⊂ I_0 ∪ I_1 ⊂ ... ⊂ I` of partial unions.
    pub fn chain(&self) -> Vec<Mask> {
        let mut acc = 0;
        self.blocks
            .iter()
            .map(|b| {
                acc |= b;
                acc
            })
            .collect()
    }

    pub fn from_chain(chain: &[Mask]) -> BeadShape {
        let mut prev = 0;
        BeadShape {
            blocks: chain
                .iter()
                .map(|&t| {
                    let b = t & !prev;
                    prev = t;
                    b
                })
                .collect(),
        }
    }

    pub fn is_valid(&self) -> bool {
        let ground = self.ground();
        let (lo, hi) = (simplex::min_elem(ground), simplex::max_elem(ground));
        let pairwise_disjoint = self.blocks.iter().map(|b| b.count_ones()).sum::<u32>() == ground.count_ones();
        lo < hi
            && self.blocks[0] == (1 << lo) | (1 << hi)
            && self.blocks.iter().all(|&b| b != 0)
            && pairwise_disjoint
    }
}

impl fmt::Display for BeadShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|&b| {
                let elems = simplex::elements(b);
                if elems.iter().all(|&e| e < 10) {
                    elems.iter().map(|e| e.to_string()).collect()
                } else {
                    elems.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
                }
            })
            .collect();
        write!(f, "⟨{}⟩", parts.join("|"))
    }
}

/// Every bead shape of `ground`, sorted by dimension; within a dimension
/// the order is lexicographic in the block masks.
pub fn enumerate_bead_shapes(ground: &[usize]) -> Result<Vec<BeadShape>> {
    let mut elems = ground.to_vec();
    elems.sort_unstable();
    elems.dedup();
    if elems.len() < 2 {
        return Err(Error::malformed("bead ground set", "needs at least two elements"));
    }
    let ends = simplex::mask_of(&[elems[0], *elems.last().expect("nonempty")]);
    let interior = &elems[1..elems.len() - 1];
    let mut out = Vec::new();
    ordered_partitions(interior, &mut vec![ends], &mut out);
    out.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.blocks.cmp(&b.blocks)));
    Ok(out)
}

fn ordered_partitions(rest: &[usize], blocks: &mut Vec<Mask>, out: &mut Vec<BeadShape>) {
    if rest.is_empty() {
        out.push(BeadShape { blocks: blocks.clone() });
        return;
    }
    let remaining = simplex::mask_of(rest);
    // every nonempty subset of what is left may be the next block
    let mut sub = remaining;
    while sub != 0 {
        let left: Vec<usize> = rest.iter().copied().filter(|&e| sub & (1 << e) == 0).collect();
        blocks.push(sub);
        ordered_partitions(&left, blocks, out);
        blocks.pop();
        sub = (sub - 1) & remaining;
    }
}

/// A bead of `[n]`: a ground set `I ⊆ [n]` together with one of its shapes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bead {
    pub ground: Mask,
    pub chain: Vec<Mask>,
}

impl Bead {
    pub fn dim(&self) -> usize {
        self.chain.len() - 1
    }

    pub fn source(&self) -> usize {
        simplex::min_elem(self.ground)
    }

    pub fn target(&self) -> usize {
        simplex::max_elem(self.ground)
    }

    pub fn shape(&self) -> BeadShape {
        BeadShape::from_chain(&self.chain)
    }
}

/// Every bead of `[n]`, ordered by ground-set size and then dimension so
/// that the boundary of a bead only involves earlier ones.
#[derive(Clone, Debug)]
pub struct BeadCatalog {
    pub n: usize,
    pub beads: Vec<Bead>,
    index: HashMap<Vec<Mask>, usize>,
}

impl BeadCatalog {
    pub fn new(n: usize) -> Self {
        let mut beads = Vec::new();
        let full: Mask = simplex::interval(0, n);
        let mut grounds: Vec<Mask> = (1..=full).filter(|&m| m & !full == 0 && m.count_ones() >= 2).collect();
        grounds.sort_by_key(|&m| (m.count_ones(), m));
        for g in grounds {
            for shape in enumerate_bead_shapes(&simplex::elements(g)).expect("ground has two elements") {
                beads.push(Bead { ground: g, chain: shape.chain() });
            }
        }
        beads.sort_by_key(|b| (b.ground.count_ones(), b.dim()));
        let index = beads.iter().enumerate().map(|(i, b)| (b.chain.clone(), i)).collect();
        Self { n, beads, index }
    }

    pub fn len(&self) -> usize {
        self.beads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.beads.is_empty()
    }

    /// Position of the bead whose flag is `chain`.
    pub fn position(&self, chain: &[Mask]) -> Option<usize> {
        self.index.get(chain).copied()
    }
}
