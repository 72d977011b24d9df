use rayon::prelude::*;

use super::ordinary::{chains, ordinary_nerve, Chain, OrdinaryNerve};
use crate::error::{Error, Result};
use crate::report::ValidationReport;
use crate::scat::{ArrowId, FinCat, ObjId};
use crate::simplex::{self, Mask};
use crate::sset::{from_model, CellId, ModelIndex, SSetMap, TruncatedSSet};

/// A strict functor from a finite category to simplicial sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramSSet {
    pub base: FinCat,
    pub values: Vec<TruncatedSSet>,
    /// One map per arrow of the base, `values[src] -> values[tgt]`.
    pub actions: Vec<SSetMap>,
}

impl DiagramSSet {
    pub fn constant(base: &FinCat, value: &TruncatedSSet) -> Self {
        Self {
            base: base.clone(),
            values: vec![value.clone(); base.object_count()],
            actions: vec![SSetMap::identity(value); base.arrows().len()],
        }
    }

    pub fn cap(&self) -> usize {
        self.values.first().map_or(0, TruncatedSSet::cap)
    }

    pub fn value(&self, d: ObjId) -> &TruncatedSSet {
        &self.values[d]
    }

    pub fn act(&self, a: ArrowId, k: usize, x: CellId) -> CellId {
        self.actions[a].apply(k, x)
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        let d = &self.base;
        if self.values.len() != d.object_count() || self.actions.len() != d.arrows().len() {
            report.push("diagram covers the base", "value or action table misshapen");
            return report;
        }
        let cap = self.cap();
        for (o, v) in self.values.iter().enumerate() {
            if v.cap() != cap {
                report.push("values share a cap", d.objects()[o].clone());
            }
        }
        if !report.is_ok() {
            return report;
        }
        for (a, arrow) in d.arrows().iter().enumerate() {
            let r = self.actions[a].validate(&self.values[arrow.src], &self.values[arrow.tgt]);
            report.extend_prefixed(&format!("action of {}", arrow.name), r);
        }
        if !report.is_ok() {
            return report;
        }
        for o in 0..d.object_count() {
            if self.actions[d.identity(o)] != SSetMap::identity(&self.values[o]) {
                report.push("identities act trivially", d.objects()[o].clone());
            }
        }
        for g in 0..d.arrows().len() {
            for f in 0..d.arrows().len() {
                if let Some(gf) = d.compose(g, f) {
                    if self.actions[f].then(&self.actions[g]) != self.actions[gf] {
                        report.push(
                            "action is functorial",
                            format!("{} ∘ {}", d.arrow_info(g).name, d.arrow_info(f).name),
                        );
                    }
                }
            }
        }
        report
    }
}

/// An `n`-simplex of the relative nerve: a base chain and, for every
/// nonempty `J ⊆ [n]`, the top cell of `s^J : Δ^J -> f(d_{max J})`.
/// `family[J - 1]` holds the cell for the mask `J`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RelNerveSimplex {
    pub chain: Chain,
    pub family: Vec<CellId>,
}

impl RelNerveSimplex {
    pub fn cell(&self, j: Mask) -> CellId {
        self.family[j as usize - 1]
    }
}

/// Nonempty subsets of `[n]` ordered by size; the order in which families
/// are filled.
pub(crate) fn subsets_by_size(n: usize) -> Vec<Mask> {
    let full = simplex::interval(0, n);
    let mut out: Vec<Mask> = (1..=full).collect();
    out.sort_by_key(|m| (m.count_ones(), *m));
    out
}

/// Required faces of `s^J`: `d_p s^J = f(d_{max I, max J}) s^I` for
/// `I = J ∖ {j_p}`.
fn required_faces(f: &DiagramSSet, chain: &Chain, family: &[CellId], j: Mask) -> Vec<CellId> {
    let elems = simplex::elements(j);
    let top = *elems.last().expect("nonempty");
    let dim = elems.len() - 2;
    elems
        .iter()
        .map(|&e| {
            let i_mask = j & !(1 << e);
            let arrow = chain.arrow_between(&f.base, simplex::max_elem(i_mask), top);
            f.act(arrow, dim, family[i_mask as usize - 1])
        })
        .collect()
}

fn check_family(f: &DiagramSSet, s: &RelNerveSimplex, n: usize) -> bool {
    subsets_by_size(n).into_iter().all(|j| {
        let value = f.value(s.chain.objects[simplex::max_elem(j)]);
        let dim = j.count_ones() as usize - 1;
        let cell = s.cell(j);
        cell < value.count(dim) && (dim == 0 || value.faces_of(dim, cell) == required_faces(f, &s.chain, &s.family, j))
    })
}

pub fn reindex_relative(f: &DiagramSSet, s: &RelNerveSimplex, alpha: &[usize]) -> RelNerveSimplex {
    let m = alpha.len() - 1;
    let chain = s.chain.reindex(&f.base, alpha);
    let family = (1..=simplex::interval(0, m))
        .map(|jp| {
            let j = simplex::image_mask(alpha, jp);
            // the surjection J' -> α(J') as a map of ordinals
            let image = simplex::elements(j);
            let surj: Vec<usize> = simplex::elements(jp)
                .iter()
                .map(|&e| image.iter().position(|&v| v == alpha[e]).expect("in image"))
                .collect();
            let target = f.value(s.chain.objects[simplex::max_elem(j)]);
            target.act(image.len() - 1, s.cell(j), &surj)
        })
        .collect();
    RelNerveSimplex { chain, family }
}

fn fill_families(f: &DiagramSSet, chain: &Chain, order: &[Mask], family: &mut Vec<CellId>, pos: usize, out: &mut Vec<RelNerveSimplex>) {
    if pos == order.len() {
        out.push(RelNerveSimplex { chain: chain.clone(), family: family.clone() });
        return;
    }
    let j = order[pos];
    let value = f.value(chain.objects[simplex::max_elem(j)]);
    let dim = j.count_ones() as usize - 1;
    let candidates: Vec<CellId> = if dim == 0 {
        (0..value.count(0)).collect()
    } else {
        value.cells_with_boundary(dim, &required_faces(f, chain, family, j)).to_vec()
    };
    for c in candidates {
        family[j as usize - 1] = c;
        fill_families(f, chain, order, family, pos + 1, out);
    }
}

pub fn relative_simplices(f: &DiagramSSet, n: usize) -> Vec<RelNerveSimplex> {
    let order = subsets_by_size(n);
    let size = simplex::interval(0, n) as usize;
    let per: Vec<Vec<RelNerveSimplex>> = chains(&f.base, n)
        .into_par_iter()
        .map(|chain| {
            let mut out = Vec::new();
            let mut family = vec![0; size];
            fill_families(f, &chain, &order, &mut family, 0, &mut out);
            out
        })
        .collect();
    per.into_iter().flatten().collect()
}

#[derive(Clone, Debug)]
pub struct RelativeNerve {
    pub sset: TruncatedSSet,
    pub simplices: ModelIndex<RelNerveSimplex>,
    pub base_nerve: OrdinaryNerve,
    /// Forgets the family.
    pub projection: SSetMap,
}

impl RelativeNerve {
    pub fn simplex(&self, n: usize, x: CellId) -> &RelNerveSimplex {
        self.simplices.cell(n, x)
    }

    pub fn find(&self, n: usize, s: &RelNerveSimplex) -> Option<CellId> {
        self.simplices.get(n, s)
    }

    pub fn is_valid_simplex(f: &DiagramSSet, s: &RelNerveSimplex, n: usize) -> bool {
        s.chain.objects.len() == n + 1 && s.family.len() == simplex::interval(0, n) as usize && check_family(f, s, n)
    }
}

/// Nerve of the base relative to `f`, with its projection to `N(D)`.
pub fn relative_nerve(f: &DiagramSSet, cap: usize) -> Result<RelativeNerve> {
    if cap > f.cap() {
        return Err(Error::CapMismatch { left: cap, right: f.cap() });
    }
    let report = f.validate();
    if !report.is_ok() {
        return Err(Error::InvalidDiagram(report.to_string()));
    }
    let cells: Vec<Vec<RelNerveSimplex>> = (0..=cap).map(|n| relative_simplices(f, n)).collect();
    let d = &f.base;
    let (sset, simplices) = from_model(
        cap,
        cells,
        |n, s| {
            let base: Vec<&str> = if n == 0 {
                vec![d.objects()[s.chain.objects[0]].as_str()]
            } else {
                s.chain.arrows.iter().map(|&a| d.arrow_info(a).name.as_str()).collect()
            };
            let fam: Vec<&str> = (1..=simplex::interval(0, n))
                .map(|j| {
                    let value = f.value(s.chain.objects[simplex::max_elem(j)]);
                    value.name(j.count_ones() as usize - 1, s.cell(j))
                })
                .collect();
            format!("{}; {}", base.join("|"), fam.join(" "))
        },
        |n, i, s| reindex_relative(f, s, &simplex::coface(n, i)),
        |n, i, s| reindex_relative(f, s, &simplex::codegeneracy(n, i)),
    )?;
    let base_nerve = ordinary_nerve(d, cap);
    let projection = SSetMap::new(
        (0..=cap)
            .map(|n| {
                simplices
                    .cells(n)
                    .iter()
                    .map(|s| base_nerve.find(n, &s.chain).expect("chains of the base are nerve cells"))
                    .collect()
            })
            .collect(),
    );
    Ok(RelativeNerve { sset, simplices, base_nerve, projection })
}
