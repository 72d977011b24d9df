use std::time::Instant;

use rayon::prelude::*;

use super::construction::{grothendieck, GrCat};
use super::diagram::{DiagramNerve, DiagramSCat};
use crate::certificate::{Certificate, CountRow};
use crate::error::{Error, Result};
use crate::nerves::{coherent_nerve, relative_nerve, Chain, CoherentNerve, CoherentSimplex, RelNerveSimplex, RelativeNerve};
use crate::simplex::{self, Mask};
use crate::sset::{CellId, SSetMap};

/// Base chain of a coherent simplex of `N(Gr F)`, read off the edges
/// `S_⟨i,i+1⟩`.
pub fn gr_simplex_chain(e: &GrCat, s: &CoherentSimplex, nerve: &CoherentNerve) -> Chain {
    let n = s.dim();
    let catalog = &nerve.catalogs[n];
    let objects = s.objects.iter().map(|&o| e.split_object(o).0).collect();
    let arrows = (0..n)
        .map(|i| {
            let pos = catalog.position(&[simplex::mask_of(&[i, i + 1])]).expect("edge bead");
            e.decompose(s.objects[i], s.objects[i + 1], 0, s.cells[pos]).0
        })
        .collect();
    Chain { objects, arrows }
}

/// `N(Gr F)_n -> N_f(D)_n`: `s^J` is the coherent simplex of `F d_j` with
/// vertices `F d_{ij} x_i` whose bead cells are the fiber components of
/// `S`, pushed forward along `F d_{i_m j}`.
pub fn gr_simplex_to_relnerve(e: &GrCat, f: &DiagramSCat, fn_nerve: &DiagramNerve, gr_nerve: &CoherentNerve, s: &CoherentSimplex) -> Result<RelNerveSimplex> {
    let n = s.dim();
    let chain = gr_simplex_chain(e, s, gr_nerve);
    let d = &f.base;
    let catalog = &gr_nerve.catalogs[n];
    let mut family = Vec::with_capacity(simplex::interval(0, n) as usize);
    for j_mask in 1..=simplex::interval(0, n) {
        let elems = simplex::elements(j_mask);
        let top = *elems.last().expect("nonempty");
        let cj = chain.objects[top];
        let to_top = |i: usize| chain.arrow_between(d, i, top);
        let objects: Vec<usize> = elems.iter().map(|&i| e.push(to_top(i), e.split_object(s.objects[i]).1)).collect();
        let sub = &fn_nerve.nerves[cj].catalogs[elems.len() - 1];
        let cells = sub
            .beads
            .iter()
            .map(|b| {
                let flag: Vec<Mask> = b.chain.iter().map(|&t| simplex::image_mask(&elems, t)).collect();
                let (lo, hi) = (elems[b.source()], elems[b.target()]);
                let cell = s.cells[catalog.position(&flag).expect("bead of [n]")];
                let (arrow, inner) = e.decompose(s.objects[lo], s.objects[hi], b.dim(), cell);
                if arrow != chain.arrow_between(d, lo, hi) {
                    return Err(Error::Counterexample(format!("bead {} lies over the wrong base arrow", b.shape())));
                }
                let x_lo = e.push(chain.arrow_between(d, lo, hi), e.split_object(s.objects[lo]).1);
                let y_hi = e.split_object(s.objects[hi]).1;
                Ok(f.action(to_top(hi)).apply_cell(x_lo, y_hi, b.dim(), inner))
            })
            .collect::<Result<Vec<_>>>()?;
        let id = fn_nerve.nerves[cj]
            .find(elems.len() - 1, &CoherentSimplex { objects, cells })
            .ok_or_else(|| Error::Counterexample(format!("s^{elems:?} is not a coherent simplex")))?;
        family.push(id);
    }
    Ok(RelNerveSimplex { chain, family })
}

/// `N_f(D)_n -> N(Gr F)_n`: objects `(s^{i}, d_i)` and the bead cell
/// indexed by `⟨I_0|...|I_r⟩` taken from `s^I` in the summand of `d_{i_0 i_m}`.
pub fn relnerve_simplex_to_gr(e: &GrCat, f: &DiagramSCat, fn_nerve: &DiagramNerve, gr_nerve: &CoherentNerve, t: &RelNerveSimplex) -> Result<CoherentSimplex> {
    let n = t.chain.objects.len() - 1;
    if !RelativeNerve::is_valid_simplex(&fn_nerve.diagram, t, n) {
        return Err(Error::malformed("relative nerve simplex", "family violates the compatibility squares"));
    }
    let d = &f.base;
    let vertex = |i: usize| {
        let c = t.chain.objects[i];
        let s = fn_nerve.nerves[c].simplex(0, t.cell(1 << i));
        e.object(c, s.objects[0])
    };
    let objects: Vec<usize> = (0..=n).map(vertex).collect();
    let catalog = &gr_nerve.catalogs[n];
    let cells = catalog
        .beads
        .iter()
        .map(|b| {
            let elems = simplex::elements(b.ground);
            let (lo, hi) = (b.source(), b.target());
            let local: Vec<Mask> = b
                .chain
                .iter()
                .map(|&m| simplex::mask_of(&simplex::elements(m).iter().map(|v| elems.iter().position(|w| w == v).expect("in ground")).collect::<Vec<_>>()))
                .collect();
            let cj = t.chain.objects[hi];
            let nerve = &fn_nerve.nerves[cj];
            let s_i = nerve.simplex(elems.len() - 1, t.cell(b.ground));
            let pos = nerve.catalogs[elems.len() - 1].position(&local).expect("bead of the ground set");
            e.encode(objects[lo], objects[hi], t.chain.arrow_between(d, lo, hi), b.dim(), s_i.cells[pos])
                .ok_or_else(|| Error::malformed("relative nerve simplex", format!("bead {} leaves its summand", b.shape())))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CoherentSimplex { objects, cells })
}

fn build_map<T: Sync>(
    cap: usize,
    counts: impl Fn(usize) -> usize,
    source: impl Fn(usize, CellId) -> T + Sync,
    image: impl Fn(usize, &T) -> Result<Option<CellId>> + Sync,
    label: &str,
) -> std::result::Result<SSetMap, String> {
    let mut assign = Vec::with_capacity(cap + 1);
    for n in 0..=cap {
        let col: Vec<std::result::Result<CellId, String>> = (0..counts(n))
            .into_par_iter()
            .map(|x| match image(n, &source(n, x)) {
                Ok(Some(y)) => Ok(y),
                Ok(None) => Err(format!("{label}: image of {n}-cell #{x} is not a cell")),
                Err(err) => Err(format!("{label}: {n}-cell #{x}: {err}")),
            })
            .collect();
        assign.push(col.into_iter().collect::<std::result::Result<Vec<_>, _>>()?);
    }
    Ok(SSetMap::new(assign))
}

/// Everything the comparison builds, kept for callers that want to reuse
/// the maps.
pub struct GrRelNerveComparison {
    pub gr: GrCat,
    pub gr_nerve: CoherentNerve,
    pub fn_nerve: DiagramNerve,
    pub relative: RelativeNerve,
    pub forward: Option<SSetMap>,
    pub backward: Option<SSetMap>,
    pub certificate: Certificate,
}

/// `N(Gr F) ≅ N_{N∘F}(D)` through dimension `n_max`: equal counts, the two
/// explicit maps simplicial and mutually inverse, and both commuting with
/// the projections to `N(D)`.
pub fn compare_gr_relnerve(f: &DiagramSCat, n_max: usize) -> Result<GrRelNerveComparison> {
    let start = Instant::now();
    let gr = grothendieck(f)?;
    let gr_nerve = coherent_nerve(&gr.total, n_max)?;
    let fn_nerve = f.nerve(n_max)?;
    let relative = relative_nerve(&fn_nerve.diagram, n_max)?;
    let mut cert = Certificate::new(format!("check gr-relnerve --nmax {n_max}"));
    let (left, right) = (gr_nerve.sset.counts(), relative.sset.counts());
    let columns: Vec<String> = (0..=n_max).map(|n| n.to_string()).collect();
    let columns: Vec<&str> = columns.iter().map(String::as_str).collect();
    cert.table(
        "cells per dimension",
        &columns,
        vec![CountRow { label: "N(Gr F)".into(), values: left.clone() }, CountRow { label: "N_f(D)".into(), values: right.clone() }],
    );
    if let Some(n) = (0..=n_max).find(|&n| left[n] != right[n]) {
        cert.fail("cell counts agree", format!("dimension {n}: {} against {}", left[n], right[n]));
        return Ok(GrRelNerveComparison { gr, gr_nerve, fn_nerve, relative, forward: None, backward: None, certificate: cert.timed(start) });
    }
    cert.check("cell counts agree", true, format!("{left:?}"));

    let forward = build_map(
        n_max,
        |n| gr_nerve.sset.count(n),
        |n, x| gr_nerve.simplex(n, x).clone(),
        |n, s| Ok(relative.find(n, &gr_simplex_to_relnerve(&gr, f, &fn_nerve, &gr_nerve, s)?)),
        "N(Gr F) -> N_f(D)",
    );
    let backward = build_map(
        n_max,
        |n| relative.sset.count(n),
        |n, x| relative.simplex(n, x).clone(),
        |n, t| Ok(gr_nerve.find(n, &relnerve_simplex_to_gr(&gr, f, &fn_nerve, &gr_nerve, t)?)),
        "N_f(D) -> N(Gr F)",
    );
    let (forward, backward) = match (forward, backward) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(w), _) | (_, Err(w)) => {
            cert.fail("explicit maps are defined", w);
            return Ok(GrRelNerveComparison { gr, gr_nerve, fn_nerve, relative, forward: None, backward: None, certificate: cert.timed(start) });
        }
    };
    cert.check("explicit maps are defined", true, "");

    let fwd_report = forward.validate(&gr_nerve.sset, &relative.sset);
    let bwd_report = backward.validate(&relative.sset, &gr_nerve.sset);
    if fwd_report.is_ok() && bwd_report.is_ok() {
        cert.check("maps commute with faces and degeneracies", true, "");
    } else {
        let w = if fwd_report.is_ok() { bwd_report } else { fwd_report };
        cert.fail("maps commute with faces and degeneracies", format!("{}: {}", w.violations[0].rule, w.violations[0].witness));
    }

    let roundtrip = |a: &SSetMap, b: &SSetMap| (0..=n_max).find_map(|n| (0..a.assign[n].len()).find(|&x| b.apply(n, a.apply(n, x)) != x).map(|x| (n, x)));
    match (roundtrip(&forward, &backward), roundtrip(&backward, &forward)) {
        (None, None) => {
            cert.check("maps are mutually inverse", true, "");
        }
        (Some((n, x)), _) => cert.fail("maps are mutually inverse", format!("{n}-cell {} of N(Gr F)", gr_nerve.sset.name(n, x))),
        (_, Some((n, x))) => cert.fail("maps are mutually inverse", format!("{n}-cell {} of N_f(D)", relative.sset.name(n, x))),
    }

    let base = &relative.base_nerve;
    let gr_projection = (0..=n_max).find_map(|n| {
        (0..gr_nerve.sset.count(n)).find(|&x| {
            let chain = gr_simplex_chain(&gr, gr_nerve.simplex(n, x), &gr_nerve);
            base.find(n, &chain) != Some(relative.projection.apply(n, forward.apply(n, x)))
        })
        .map(|x| (n, x))
    });
    match gr_projection {
        None => {
            cert.check("maps commute with the projections to N(D)", true, "");
        }
        Some((n, x)) => cert.fail("maps commute with the projections to N(D)", format!("{n}-cell {}", gr_nerve.sset.name(n, x))),
    }
    Ok(GrRelNerveComparison { gr, gr_nerve, fn_nerve, relative, forward: Some(forward), backward: Some(backward), certificate: cert.timed(start) })
}

pub fn check_gr_relnerve_iso(f: &DiagramSCat, n_max: usize) -> Result<Certificate> {
    Ok(compare_gr_relnerve(f, n_max)?.certificate)
}
