use std::collections::HashMap;
use std::time::Instant;

use rayon::prelude::*;

use super::bullet::c_simplicial_object;
use super::operators::{c_otimes, verify_cotimes_gr, OperArrow, OperatorCat};
use super::structure::{apply_cf, apply_cf_cells, opposite_monoidal, MonSCat};
use crate::certificate::{Certificate, CountRow};
use crate::error::{Error, Result};
use crate::grothendieck::{fiberwise_op_split, grothendieck};
use crate::nerves::{coherent_nerve, coherent_nerve_map, opcommute_map, ordinary_nerve, Chain, CoherentNerve, CoherentSimplex, OrdinaryNerve};
use crate::scat::{is_locally_kan, opposite_scat, ObjId};
use crate::simplex;
use crate::sset::{fiber, opposite_sset, product_index, product_with_cap, CellId, SSetMap, TruncatedSSet};

/// `N^⊗(C) = N(C^⊗)` with its projection to `N(Δ^op_{≤M})`.
#[derive(Clone, Debug)]
pub struct OperadicNerve {
    pub operators: OperatorCat,
    pub nerve: CoherentNerve,
    pub base: OrdinaryNerve,
    pub projection: SSetMap,
}

impl OperadicNerve {
    pub fn cap(&self) -> usize {
        self.nerve.sset.cap()
    }

    /// The edge of `N^⊗(C)` given by an arrow of `C^⊗`.
    pub fn edge(&self, a: &OperArrow) -> Option<CellId> {
        self.nerve.find(1, &CoherentSimplex { objects: vec![a.source, a.target], cells: vec![a.vertex] })
    }

    /// `N^⊗(C)_{[n]}` with its inclusion.
    pub fn fiber(&self, level: usize) -> Result<(TruncatedSSet, SSetMap)> {
        let vertex = self
            .base
            .find(0, &Chain { objects: vec![level], arrows: Vec::new() })
            .ok_or_else(|| Error::malformed("level", format!("[{level}] beyond the bound {}", self.operators.delta.bound)))?;
        fiber(&self.nerve.sset, &self.projection, &self.base.sset, vertex)
    }
}

/// Base chain of a coherent simplex of `N(C^⊗)`.
fn simplex_chain(o: &OperatorCat, nerve: &CoherentNerve, s: &CoherentSimplex) -> Chain {
    let n = s.dim();
    let catalog = &nerve.catalogs[n];
    let arrows = (0..n)
        .map(|i| {
            let pos = catalog.position(&[simplex::mask_of(&[i, i + 1])]).expect("edge bead");
            o.decompose(s.objects[i], s.objects[i + 1], 0, s.cells[pos]).0
        })
        .collect();
    Chain { objects: s.objects.iter().map(|&x| o.level(x)).collect(), arrows }
}

/// The operadic nerve through dimension `cap`; `C` must be locally Kan.
pub fn operadic_nerve(c: &MonSCat, bound: usize, cap: usize) -> Result<OperadicNerve> {
    let kan = is_locally_kan(&c.underlying, c.cap())?;
    if let Some(v) = kan.violations.first() {
        return Err(Error::NotLocallyKan { dim: c.cap(), witness: format!("{}: {}", v.rule, v.witness) });
    }
    let operators = c_otimes(c, bound)?;
    let nerve = coherent_nerve(&operators.total, cap)?;
    let base = ordinary_nerve(&operators.delta.category, cap);
    let assign = (0..=cap)
        .map(|n| {
            (0..nerve.sset.count(n))
                .into_par_iter()
                .map(|x| base.find(n, &simplex_chain(&operators, &nerve, nerve.simplex(n, x))).expect("chains of Δ^op lie in its nerve"))
                .collect()
        })
        .collect();
    Ok(OperadicNerve { operators, nerve, base, projection: SSetMap::new(assign) })
}

/// Pushes a coherent simplex lying over `[n]` along `C^f`, `f : [m] -> [n]`,
/// computed factorwise from the closed formula.
fn push_along(x: &OperadicNerve, s: &CoherentSimplex, f: &[usize], n: usize) -> Result<CoherentSimplex> {
    let o = &x.operators;
    let c = &o.monoidal;
    let objects: Vec<ObjId> = s
        .objects
        .iter()
        .map(|&v| apply_cf(c, f, n, o.sequence(v)).map(|ys| o.object(&ys).expect("levels stay within the bound")))
        .collect::<Result<_>>()?;
    let id_m = o.delta.category.identity(f.len() - 1);
    let catalog = &x.nerve.catalogs[s.dim()];
    let cells = catalog
        .beads
        .iter()
        .zip(&s.cells)
        .map(|(b, &cell)| {
            let (lo, hi) = (s.objects[b.source()], s.objects[b.target()]);
            let (_, parts) = o.decompose(lo, hi, b.dim(), cell);
            let triples: Vec<(ObjId, ObjId, CellId)> =
                o.sequence(lo).iter().zip(o.sequence(hi)).zip(parts).map(|((&a, &z), p)| (a, z, p)).collect();
            let pushed = apply_cf_cells(c, f, n, b.dim(), &triples)?;
            o.encode(objects[b.source()], objects[b.target()], id_m, b.dim(), &pushed)
                .ok_or_else(|| Error::Counterexample(format!("bead {} leaves the fiber", b.shape())))
        })
        .collect::<Result<_>>()?;
    Ok(CoherentSimplex { objects, cells })
}

fn inverse_index(inclusion: &SSetMap) -> Vec<HashMap<CellId, CellId>> {
    inclusion.assign.iter().map(|col| col.iter().enumerate().map(|(i, &c)| (c, i)).collect()).collect()
}

fn record_iso(cert: &mut Certificate, name: &str, map: &SSetMap, source: &TruncatedSSet, target: &TruncatedSSet) -> bool {
    let report = map.validate(source, target);
    if let Some(v) = report.violations.first() {
        cert.fail(name, format!("{}: {}", v.rule, v.witness));
        return false;
    }
    if !map.is_bijective(target) {
        let k = (0..=source.cap()).find(|&k| source.count(k) != target.count(k)).unwrap_or(0);
        cert.fail(name, format!("dimension {k}: {} cells against {}", source.count(k), target.count(k)));
        return false;
    }
    cert.check(name, true, format!("{:?}", source.counts()))
}

fn count_columns(cap: usize) -> Vec<String> {
    (0..=cap).map(|k| k.to_string()).collect()
}

/// `N^⊗(C)_{[n]} -> (N^⊗(C)_{[1]})^n` along the maps `ρ_i : [1] -> [n]`,
/// `0 ↦ i - 1, 1 ↦ i`, and `N^⊗(C)_{[1]} ≅ N(C)`; both must be isomorphisms.
pub fn check_monoidal_fibers(x: &OperadicNerve, n: usize) -> Result<Certificate> {
    let start = Instant::now();
    let bound = x.operators.delta.bound;
    if n > bound {
        return Err(Error::malformed("level", format!("[{n}] beyond the bound {bound}")));
    }
    let cap = x.cap();
    let mut cert = Certificate::new(format!("check fibers --level {n} --delta-max {bound} --cap {cap}"));
    let (fiber_n, incl_n) = x.fiber(n)?;
    let (fiber_1, incl_1) = x.fiber(1)?;
    let back_1 = inverse_index(&incl_1);
    let factors: Vec<&TruncatedSSet> = vec![&fiber_1; n];
    let power = product_with_cap(&factors, cap);

    let comparison = (0..=cap)
        .map(|k| {
            (0..fiber_n.count(k))
                .into_par_iter()
                .map(|cell| {
                    let s = x.nerve.simplex(k, incl_n.apply(k, cell));
                    let coords = (1..=n)
                        .map(|i| {
                            let pushed = push_along(x, s, &[i - 1, i], n)?;
                            let id = x.nerve.find(k, &pushed).ok_or_else(|| Error::Counterexample("pushed simplex is not coherent".into()))?;
                            back_1[k].get(&id).copied().ok_or_else(|| Error::Counterexample("pushed simplex leaves the fiber over [1]".into()))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    Ok(product_index(&factors, k, &coords))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>();

    let nc = coherent_nerve(&x.operators.monoidal.underlying, cap)?;
    let columns = count_columns(cap);
    let columns: Vec<&str> = columns.iter().map(String::as_str).collect();
    cert.table(
        "cells per dimension",
        &columns,
        vec![
            CountRow { label: format!("fiber over [{n}]"), values: fiber_n.counts() },
            CountRow { label: format!("(fiber over [1])^{n}"), values: power.counts() },
            CountRow { label: "fiber over [1]".into(), values: fiber_1.counts() },
            CountRow { label: "N(C)".into(), values: nc.sset.counts() },
        ],
    );
    match comparison {
        Ok(assign) => {
            record_iso(&mut cert, &format!("fiber over [{n}] ≅ (fiber over [1])^{n}"), &SSetMap::new(assign), &fiber_n, &power);
        }
        Err(e) => cert.fail(format!("fiber over [{n}] ≅ (fiber over [1])^{n}"), e.to_string()),
    }

    // a simplex over [1] is a coherent simplex of C on its single coordinate
    let o = &x.operators;
    let to_nc = (0..=cap)
        .map(|k| {
            (0..fiber_1.count(k))
                .map(|cell| {
                    let s = x.nerve.simplex(k, incl_1.apply(k, cell));
                    let catalog = &x.nerve.catalogs[k];
                    let image = CoherentSimplex {
                        objects: s.objects.iter().map(|&v| o.sequence(v)[0]).collect(),
                        cells: catalog
                            .beads
                            .iter()
                            .zip(&s.cells)
                            .map(|(b, &c)| o.decompose(s.objects[b.source()], s.objects[b.target()], b.dim(), c).1[0])
                            .collect(),
                    };
                    nc.find(k, &image).ok_or_else(|| Error::Counterexample(format!("{k}-cell {} of the fiber", fiber_1.name(k, cell))))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>();
    match to_nc {
        Ok(assign) => {
            record_iso(&mut cert, "fiber over [1] ≅ N(C)", &SSetMap::new(assign), &fiber_1, &nc.sset);
        }
        Err(e) => cert.fail("fiber over [1] ≅ N(C)", e.to_string()),
    }
    Ok(cert.timed(start))
}

/// The strict shadow of the opposite theorems for `C`:
/// (a) `(C^•)^op = (C^op)^•` as data;
/// (b) `Gr((C^•)^op)` is the fiberwise opposite of `Gr C^•` and equals `Gr (C^op)^•`;
/// (c) `N(op_s C^⊗) -> op_Δ N^⊗(C)` is the canonical bijection;
/// (d) `N^⊗(C^op)` matches the nerve of the fiberwise opposite, and over
/// `[1]` `N(C^op) ≅ op_Δ N(C)`.
pub fn check_op_theorems(c: &MonSCat, bound: usize, cap: usize) -> Result<Certificate> {
    let start = Instant::now();
    let mut cert = Certificate::new(format!("check opposites --delta-max {bound} --cap {cap}"));
    cert.note("strict shadow: legs are verified as isomorphisms of strict data, not as equivalences");
    let c_op = opposite_monoidal(c);

    let bullet = c_simplicial_object(c, bound)?;
    let bullet_op = c_simplicial_object(&c_op, bound)?;
    cert.check("(a) (C^•)^op = (C^op)^•", bullet.opposite() == bullet_op, "fibers and actions compared as tables");

    let gr = grothendieck(&bullet)?;
    let split = fiberwise_op_split(&gr)?;
    let gr_op = grothendieck(&bullet_op)?;
    let same_objects = split.total.objects() == gr.total.objects();
    let equal = split.total == gr_op.total && split.projection == gr_op.projection;
    cert.check(
        "(b) Gr((C^•)^op) = fiberwise opposite of Gr C^• = Gr (C^op)^•",
        same_objects && equal,
        format!("{} objects", split.object_count()),
    );

    let x = operadic_nerve(c, bound, cap)?;
    let nerve_op = coherent_nerve(&opposite_scat(&x.operators.total), cap)?;
    let target = opposite_sset(&x.nerve.sset);
    match opcommute_map(&nerve_op, &x.nerve) {
        Ok(m) => {
            record_iso(&mut cert, "(c) N(op_s C^⊗) ≅ op_Δ N^⊗(C)", &m, &nerve_op.sset, &target);
        }
        Err(e) => cert.fail("(c) N(op_s C^⊗) ≅ op_Δ N^⊗(C)", e.to_string()),
    }

    let x_op = operadic_nerve(&c_op, bound, cap)?;
    let mut sub = Certificate::new("");
    match verify_cotimes_gr(&x_op.operators, &split, &mut sub) {
        Some(f) => {
            let split_nerve = coherent_nerve(&split.total, cap)?;
            match coherent_nerve_map(&f, &x_op.nerve, &split_nerve) {
                Ok(m) => {
                    record_iso(&mut cert, "(d) N^⊗(C^op) ≅ N(fiberwise opposite of Gr C^•)", &m, &x_op.nerve.sset, &split_nerve.sset);
                }
                Err(e) => cert.fail("(d) N^⊗(C^op) ≅ N(fiberwise opposite of Gr C^•)", e.to_string()),
            }
        }
        None => cert.fail("(d) N^⊗(C^op) ≅ N(fiberwise opposite of Gr C^•)", "no isomorphism C^⊗ of C^op -> Gr"),
    }
    cert.absorb("(d) C^⊗ of C^op -> Gr((C^•)^op)", sub);
    let fibers = check_monoidal_fibers(&x_op, 1)?;
    cert.absorb("(d)", fibers);
    let nc = coherent_nerve(&c.underlying, cap)?;
    let nc_op = coherent_nerve(&c_op.underlying, cap)?;
    match opcommute_map(&nc_op, &nc) {
        Ok(m) => {
            record_iso(&mut cert, "(d) N(C^op) ≅ op_Δ N(C)", &m, &nc_op.sset, &opposite_sset(&nc.sset));
        }
        Err(e) => cert.fail("(d) N(C^op) ≅ op_Δ N(C)", e.to_string()),
    }
    Ok(cert.timed(start))
}

/// `N^⊗(C) ≅ N(Gr C^•) ≅ N_{N∘C^•}(Δ^op)` through dimension `n_max`: the
/// nerve of `C^⊗ -> Gr C^•` followed by the explicit map to the relative
/// nerve must be a simplicial bijection.
pub fn check_operadic_relnerve(c: &MonSCat, bound: usize, n_max: usize) -> Result<Certificate> {
    let start = Instant::now();
    let mut cert = Certificate::new(format!("check cotimes-gr --delta-max {bound} --nmax {n_max}"));
    let o = c_otimes(c, bound)?;
    let bullet = c_simplicial_object(c, bound)?;
    let cmp = crate::grothendieck::compare_gr_relnerve(&bullet, n_max)?;
    let mut sub = Certificate::new("");
    let f = verify_cotimes_gr(&o, &cmp.gr, &mut sub);
    cert.absorb("C^⊗ ≅ Gr C^•", sub);
    cert.absorb("N(Gr C^•) ≅ N_f(Δ^op)", cmp.certificate);
    let (Some(f), Some(forward)) = (f, cmp.forward) else {
        return Ok(cert.timed(start));
    };
    let nerve = coherent_nerve(&o.total, n_max)?;
    match coherent_nerve_map(&f, &nerve, &cmp.gr_nerve) {
        Ok(m) => {
            record_iso(&mut cert, "N^⊗(C) ≅ N_f(Δ^op)", &m.then(&forward), &nerve.sset, &cmp.relative.sset);
        }
        Err(e) => cert.fail("N^⊗(C) ≅ N_f(Δ^op)", e.to_string()),
    }
    Ok(cert.timed(start))
}
