use rayon::prelude::*;

use super::bead::BeadCatalog;
use crate::error::{Error, Result};
use crate::scat::{ObjId, SCat, SFunctor};
use crate::simplex::{self, Mask};
use crate::sset::{from_model, CellId, ModelIndex, SSetMap, TruncatedSSet};

/// An `n`-simplex of the coherent nerve: objects `S_0..S_n` and one hom
/// cell per bead of `[n]`, in [`BeadCatalog`] order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoherentSimplex {
    pub objects: Vec<ObjId>,
    pub cells: Vec<CellId>,
}

impl CoherentSimplex {
    pub fn dim(&self) -> usize {
        self.objects.len() - 1
    }
}

/// Value of the simplicial functor `C[Δ^n] -> K` on an arbitrary flag
/// `T_0 ⊆ ... ⊆ T_r` of subsets sharing minimum `i` and maximum `j`.
///
/// Flags whose first set has an interior point split as a composite at
/// the smallest one; repeated sets are degeneracies; what remains is a
/// bead, read from `cells`.
pub fn evaluate(k: &SCat, objects: &[ObjId], catalog: &BeadCatalog, cells: &[CellId], chain: &[Mask]) -> CellId {
    let r = chain.len() - 1;
    let (i, j) = (simplex::min_elem(chain[0]), simplex::max_elem(chain[0]));
    if i == j {
        return k.identity_at(objects[i], r);
    }
    let interior = chain[0] & !((1 << i) | (1 << j));
    if interior != 0 {
        let p = simplex::min_elem(interior);
        let left: Vec<Mask> = chain.iter().map(|&t| t & simplex::interval(i, p)).collect();
        let right: Vec<Mask> = chain.iter().map(|&t| t & simplex::interval(p, j)).collect();
        let g = evaluate(k, objects, catalog, cells, &right);
        let f = evaluate(k, objects, catalog, cells, &left);
        return k.compose(objects[i], objects[p], objects[j], r, g, f);
    }
    if let Some(t) = (0..r).find(|&t| chain[t] == chain[t + 1]) {
        let mut shorter = chain.to_vec();
        shorter.remove(t + 1);
        let inner = evaluate(k, objects, catalog, cells, &shorter);
        return k.hom(objects[i], objects[j]).degen(r - 1, t, inner);
    }
    cells[catalog.position(chain).expect("nondegenerate flag with endpoint start is a bead")]
}

/// The faces a bead cell must have: `d_t` is the value on the flag with
/// `T_t` removed.
pub fn bead_boundary(k: &SCat, objects: &[ObjId], catalog: &BeadCatalog, cells: &[CellId], chain: &[Mask]) -> Vec<CellId> {
    (0..chain.len())
        .map(|t| {
            let mut sub = chain.to_vec();
            sub.remove(t);
            evaluate(k, objects, catalog, cells, &sub)
        })
        .collect()
}

/// Checks every bead cell lies in the right hom and has the boundary
/// forced by the lower beads.
pub fn check_boundary(k: &SCat, s: &CoherentSimplex, catalog: &BeadCatalog) -> bool {
    if s.cells.len() != catalog.len() || s.objects.iter().any(|&o| o >= k.object_count()) {
        return false;
    }
    catalog.beads.iter().zip(&s.cells).all(|(b, &cell)| {
        let hom = k.hom(s.objects[b.source()], s.objects[b.target()]);
        let r = b.dim();
        if r > hom.cap() || cell >= hom.count(r) {
            return false;
        }
        r == 0 || hom.faces_of(r, cell) == bead_boundary(k, &s.objects, catalog, &s.cells, &b.chain)
    })
}

/// Transport of a coherent simplex along a monotone map `α : [m] -> [n]`.
pub fn reindex_coherent(k: &SCat, s: &CoherentSimplex, from: &BeadCatalog, to: &BeadCatalog, alpha: &[usize]) -> CoherentSimplex {
    let objects: Vec<ObjId> = alpha.iter().map(|&v| s.objects[v]).collect();
    let cells = to
        .beads
        .iter()
        .map(|b| {
            let image: Vec<Mask> = b.chain.iter().map(|&t| simplex::image_mask(alpha, t)).collect();
            evaluate(k, &s.objects, from, &s.cells, &image)
        })
        .collect();
    CoherentSimplex { objects, cells }
}

/// All coherent `n`-simplices, objects first and then bead cells in
/// catalog order, each constrained by its boundary.
pub fn coherent_simplices(k: &SCat, catalog: &BeadCatalog) -> Vec<CoherentSimplex> {
    let n = catalog.n;
    let objs = k.object_count();
    let tuples = objs.checked_pow(n as u32 + 1).unwrap_or(0);
    // edges are filled shortest first so a long edge can be pruned against
    // the composite of shorter ones
    let mut order: Vec<usize> = (0..catalog.len()).collect();
    order.sort_by_key(|&p| {
        let b = &catalog.beads[p];
        (b.ground.count_ones(), b.dim(), b.target() - b.source(), b.source())
    });
    let per: Vec<Vec<CoherentSimplex>> = (0..tuples)
        .into_par_iter()
        .map(|code| {
            let mut rest = code;
            let mut objects = vec![0; n + 1];
            for slot in objects.iter_mut().rev() {
                *slot = rest % objs;
                rest /= objs;
            }
            let mut out = Vec::new();
            let mut cells = vec![CellId::MAX; catalog.len()];
            fill(k, catalog, &order, &objects, 0, &mut cells, &mut out);
            out.sort_unstable_by(|x, y| x.cells.cmp(&y.cells));
            out
        })
        .collect();
    per.into_iter().flatten().collect()
}

fn fill(k: &SCat, catalog: &BeadCatalog, order: &[usize], objects: &[ObjId], depth: usize, cells: &mut Vec<CellId>, out: &mut Vec<CoherentSimplex>) {
    if depth == order.len() {
        out.push(CoherentSimplex { objects: objects.to_vec(), cells: cells.clone() });
        return;
    }
    let pos = order[depth];
    let b = &catalog.beads[pos];
    let (i, j) = (b.source(), b.target());
    let hom = k.hom(objects[i], objects[j]);
    let r = b.dim();
    let candidates: Vec<CellId> = if r == 0 && j > i + 1 {
        // the bead ⟨ij|i+1⟩ joins the composite through i+1 to this vertex
        let composite = evaluate(k, objects, catalog, cells, &[simplex::mask_of(&[i, i + 1, j])]);
        let mut reach: Vec<CellId> = (0..hom.count(1)).filter(|&c| hom.face(1, 0, c) == composite).map(|c| hom.face(1, 1, c)).collect();
        reach.sort_unstable();
        reach.dedup();
        reach
    } else if r == 0 {
        (0..hom.count(0)).collect()
    } else {
        let faces = bead_boundary(k, objects, catalog, cells, &b.chain);
        hom.cells_with_boundary(r, &faces).to_vec()
    };
    for c in candidates {
        cells[pos] = c;
        fill(k, catalog, order, objects, depth + 1, cells, out);
    }
    cells[pos] = CellId::MAX;
}

#[derive(Clone, Debug)]
pub struct CoherentNerve {
    pub sset: TruncatedSSet,
    pub simplices: ModelIndex<CoherentSimplex>,
    pub catalogs: Vec<BeadCatalog>,
}

impl CoherentNerve {
    pub fn simplex(&self, n: usize, x: CellId) -> &CoherentSimplex {
        self.simplices.cell(n, x)
    }

    pub fn find(&self, n: usize, s: &CoherentSimplex) -> Option<CellId> {
        self.simplices.get(n, s)
    }

    /// The cell a simplex assigns to a bead given by its flag.
    pub fn bead_cell(&self, n: usize, x: CellId, chain: &[Mask]) -> Option<CellId> {
        let pos = self.catalogs[n].position(chain)?;
        Some(self.simplex(n, x).cells[pos])
    }

    /// Human-readable description of a cell: objects and bead assignments.
    pub fn describe(&self, k: &SCat, n: usize, x: CellId) -> String {
        let s = self.simplex(n, x);
        let objs: Vec<&str> = s.objects.iter().map(|&o| k.object_name(o)).collect();
        let beads: Vec<String> = self.catalogs[n]
            .beads
            .iter()
            .zip(&s.cells)
            .map(|(b, &c)| {
                let hom = k.hom(s.objects[b.source()], s.objects[b.target()]);
                format!("{}={}", b.shape(), hom.name(b.dim(), c))
            })
            .collect();
        format!("{} {}", objs.join(","), beads.join(" "))
    }
}

/// Homotopy-coherent nerve of `K` through dimension `cap`, presented by
/// bead data. Dimension `n` needs hom cells up to dimension `n - 1`.
pub fn coherent_nerve(k: &SCat, cap: usize) -> Result<CoherentNerve> {
    if cap >= 1 && k.cap() + 1 < cap {
        return Err(Error::BeyondCap { requested: cap, cap: k.cap() + 1 });
    }
    let catalogs: Vec<BeadCatalog> = (0..=cap + 1).map(BeadCatalog::new).collect();
    let cells: Vec<Vec<CoherentSimplex>> = (0..=cap).map(|n| coherent_simplices(k, &catalogs[n])).collect();
    let (sset, simplices) = from_model(
        cap,
        cells,
        |n, s| {
            let objs: Vec<&str> = s.objects.iter().map(|&o| k.object_name(o)).collect();
            if n == 0 {
                return objs[0].to_string();
            }
            let beads: Vec<&str> = catalogs[n]
                .beads
                .iter()
                .zip(&s.cells)
                .map(|(b, &c)| k.hom(s.objects[b.source()], s.objects[b.target()]).name(b.dim(), c))
                .collect();
            format!("{}; {}", objs.join(" "), beads.join(" "))
        },
        |n, i, s| reindex_coherent(k, s, &catalogs[n], &catalogs[n - 1], &simplex::coface(n, i)),
        |n, i, s| reindex_coherent(k, s, &catalogs[n], &catalogs[n + 1], &simplex::codegeneracy(n, i)),
    )?;
    Ok(CoherentNerve { sset, simplices, catalogs })
}

/// `N(F) : N(C) -> N(D)` for a strict functor.
pub fn coherent_nerve_map(f: &SFunctor, source: &CoherentNerve, target: &CoherentNerve) -> Result<SSetMap> {
    let cap = source.sset.cap().min(target.sset.cap());
    let mut assign = Vec::with_capacity(cap + 1);
    for n in 0..=cap {
        let catalog = &source.catalogs[n];
        let col: Option<Vec<CellId>> = (0..source.sset.count(n))
            .into_par_iter()
            .map(|x| {
                let s = source.simplex(n, x);
                let image = CoherentSimplex {
                    objects: s.objects.iter().map(|&o| f.apply_object(o)).collect(),
                    cells: catalog
                        .beads
                        .iter()
                        .zip(&s.cells)
                        .map(|(b, &c)| f.apply_cell(s.objects[b.source()], s.objects[b.target()], b.dim(), c))
                        .collect(),
                };
                target.find(n, &image)
            })
            .collect();
        assign.push(col.ok_or_else(|| Error::InvalidFunctor("image of a coherent simplex is not coherent".into()))?);
    }
    Ok(SSetMap::new(assign))
}

/// The canonical identification `N(C^op)_n = N(C)_n`: objects reflected
/// `T_i = S_{n-i}` and each bead read at the reflected flag. As a map
/// `N(C^op) -> op_Δ N(C)` it is simplicial.
pub fn opcommute_map(nerve_op: &CoherentNerve, nerve: &CoherentNerve) -> Result<SSetMap> {
    let cap = nerve_op.sset.cap().min(nerve.sset.cap());
    let mut assign = Vec::with_capacity(cap + 1);
    for n in 0..=cap {
        let catalog = &nerve_op.catalogs[n];
        let col: Option<Vec<CellId>> = (0..nerve_op.sset.count(n))
            .into_par_iter()
            .map(|x| {
                let t = nerve_op.simplex(n, x);
                let objects: Vec<ObjId> = t.objects.iter().rev().copied().collect();
                let mut cells = vec![0; catalog.len()];
                for (b, &c) in catalog.beads.iter().zip(&t.cells) {
                    let reflected: Vec<Mask> = b.chain.iter().map(|&m| simplex::reflect_mask(n, m)).collect();
                    cells[nerve.catalogs[n].position(&reflected)?] = c;
                }
                nerve.find(n, &CoherentSimplex { objects, cells })
            })
            .collect();
        assign.push(col.ok_or_else(|| Error::Counterexample(format!("reflected {n}-simplex is not coherent")))?);
    }
    Ok(SSetMap::new(assign))
}
