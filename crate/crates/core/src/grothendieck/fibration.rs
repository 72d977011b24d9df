use std::collections::{HashMap, HashSet};

use std::time::Instant;

use rayon::prelude::*;

use super::construction::{GrArrow, GrCat};
use crate::certificate::{Certificate, CountRow};
use crate::error::{Error, Result};
use crate::report::ValidationReport;
use crate::scat::{ObjId, SCat, SFunctor};
use crate::sset::{enumerate_horns, pullback, CellId, SSetMap, TruncatedSSet};

/// An enriched functor onto a discrete base, as consumed by the fibration
/// criteria.
#[derive(Clone, Debug)]
pub struct Fibration {
    pub total: SCat,
    pub base: SCat,
    pub projection: SFunctor,
}

impl Fibration {
    pub fn of(e: &GrCat) -> Self {
        Self { total: e.total.clone(), base: e.base_scat.clone(), projection: e.projection.clone() }
    }

    pub fn is_pcocartesian(&self, source: ObjId, target: ObjId, vertex: CellId, d: usize) -> Result<ValidationReport> {
        is_pcocartesian(&self.projection, &self.total, &self.base, source, target, vertex, d)
    }

    pub fn is_opfibration(&self, d: usize) -> Result<ValidationReport> {
        is_opfibration(&self.projection, &self.total, &self.base, d)
    }
}

fn prefix_map(hom: &TruncatedSSet, d: usize, image: impl Fn(usize, CellId) -> CellId) -> SSetMap {
    SSetMap::new((0..=d).map(|k| (0..hom.count(k)).map(|c| image(k, c)).collect()).collect())
}

/// Pullback criterion for the arrow `vertex : source -> target` of `total`
/// over a discrete base: for every object `z` the comparison
/// `E(target, z) -> E(source, z) ×_{B(Ps, Pz)} B(Pt, Pz)`,
/// `g ↦ (g ∘ χ, P g)`, must be a bijection in every dimension up to `d`.
pub fn is_pcocartesian(
    p: &SFunctor,
    total: &SCat,
    base: &SCat,
    source: ObjId,
    target: ObjId,
    vertex: CellId,
    d: usize,
) -> Result<ValidationReport> {
    if !base.is_discrete() {
        return Err(Error::NonDiscreteBase);
    }
    if d > total.cap() || d > base.cap() {
        return Err(Error::BeyondCap { requested: d, cap: total.cap().min(base.cap()) });
    }
    if vertex >= total.hom(source, target).count(0) {
        return Err(Error::malformed("arrow", format!("vertex {vertex} outside its hom")));
    }
    let (ps, pt) = (p.apply_object(source), p.apply_object(target));
    let base_vertex = p.apply_cell(source, target, 0, vertex);
    let per: Vec<Result<Option<String>>> = (0..total.object_count())
        .into_par_iter()
        .map(|z| {
            let pz = p.apply_object(z);
            let e_tz = total.hom(target, z).truncate(d)?;
            let e_sz = total.hom(source, z).truncate(d)?;
            let b_tz = base.hom(pt, pz).truncate(d)?;
            let b_sz = base.hom(ps, pz).truncate(d)?;
            let chi = |k: usize| total.hom(source, target).degenerate_vertex(vertex, k);
            let base_chi = |k: usize| base.hom(ps, pt).degenerate_vertex(base_vertex, k);
            let p_sz = prefix_map(&e_sz, d, |k, a| p.apply_cell(source, z, k, a));
            let pre_b = prefix_map(&b_tz, d, |k, b| base.compose(ps, pt, pz, k, b, base_chi(k)));
            let square = pullback(&p_sz, &e_sz, &pre_b, &b_tz, &b_sz)?;
            for k in 0..=d {
                let index: HashMap<(CellId, CellId), CellId> = (0..square.sset.count(k))
                    .map(|c| ((square.proj1.apply(k, c), square.proj2.apply(k, c)), c))
                    .collect();
                let mut hit = vec![false; square.sset.count(k)];
                for g in 0..e_tz.count(k) {
                    let pair = (total.compose(source, target, z, k, g, chi(k)), p.apply_cell(target, z, k, g));
                    match index.get(&pair) {
                        Some(&c) if !hit[c] => hit[c] = true,
                        Some(_) => {
                            return Ok(Some(format!(
                                "z = {}, dimension {k}: two cells of E(target, z) compare to the same pair",
                                total.object_name(z)
                            )))
                        }
                        None => unreachable!("comparison lands in the pullback"),
                    }
                }
                if hit.iter().any(|&h| !h) {
                    return Ok(Some(format!(
                        "z = {}, dimension {k}: {} cells of E(target, z) against {} in the pullback",
                        total.object_name(z),
                        e_tz.count(k),
                        square.sset.count(k)
                    )));
                }
            }
            Ok(None)
        })
        .collect();
    let mut report = ValidationReport::new();
    for r in per {
        if let Some(w) = r? {
            report.push(
                format!("{} -> {} is P-coCartesian", total.object_name(source), total.object_name(target)),
                w,
            );
        }
    }
    Ok(report)
}

/// [`is_pcocartesian`] for an arrow of a Grothendieck construction.
pub fn is_pcocartesian_arrow(e: &GrCat, a: &GrArrow, d: usize) -> Result<ValidationReport> {
    let vertex = e.arrow_vertex(a).ok_or_else(|| Error::malformed("arrow", e.describe_arrow(a)))?;
    is_pcocartesian(&e.projection, &e.total, &e.base_scat, a.source, a.target, vertex, d)
}

/// Looks for a lift of `φ : Pe -> c` passing the pullback criterion; on
/// failure returns why each candidate over `φ` was rejected.
fn search_lift(
    p: &SFunctor,
    total: &SCat,
    base: &SCat,
    e: ObjId,
    c: ObjId,
    phi: CellId,
    d: usize,
) -> Result<std::result::Result<(ObjId, CellId), Vec<String>>> {
    let mut rejected = Vec::new();
    for t in (0..total.object_count()).filter(|&t| p.apply_object(t) == c) {
        for v in 0..total.hom(e, t).count(0) {
            if p.apply_cell(e, t, 0, v) != phi {
                continue;
            }
            let report = is_pcocartesian(p, total, base, e, t, v, d)?;
            match report.violations.first() {
                None => return Ok(Ok((t, v))),
                Some(w) => rejected.push(format!("{} -> {}: {}", total.hom(e, t).name(0, v), total.object_name(t), w.witness)),
            }
        }
    }
    Ok(Err(rejected))
}

/// Searches, for every object `e` and base arrow out of `Pe`, a lift
/// passing the pullback criterion.
pub fn is_opfibration(p: &SFunctor, total: &SCat, base: &SCat, d: usize) -> Result<ValidationReport> {
    if !base.is_discrete() {
        return Err(Error::NonDiscreteBase);
    }
    let mut report = ValidationReport::new();
    for e in 0..total.object_count() {
        let pe = p.apply_object(e);
        for c in 0..base.object_count() {
            for phi in 0..base.hom(pe, c).count(0) {
                if search_lift(p, total, base, e, c, phi, d)?.is_err() {
                    report.push(
                        "every base arrow has a P-coCartesian lift",
                        format!("e = {}, φ = {}", total.object_name(e), base.hom(pe, c).name(0, phi)),
                    );
                }
            }
        }
    }
    Ok(report)
}

/// Certificate that every given arrow `(source, target, vertex)` passes
/// the pullback criterion up to dimension `d`, and that every base arrow
/// out of every object has a lift that does.
pub fn check_opfibration(fib: &Fibration, lifts: &[(ObjId, ObjId, CellId)], d: usize) -> Result<Certificate> {
    let start = Instant::now();
    let (p, total, base) = (&fib.projection, &fib.total, &fib.base);
    if !base.is_discrete() {
        return Err(Error::NonDiscreteBase);
    }
    let mut cert = Certificate::new(format!("check opfibration --cap {d}"));
    let mut failed = None;
    for &(s, t, v) in lifts {
        let report = is_pcocartesian(p, total, base, s, t, v, d)?;
        if let Some(w) = report.violations.first() {
            failed = Some(format!("{} : {} -> {}: {}", total.hom(s, t).name(0, v), total.object_name(s), total.object_name(t), w.witness));
            break;
        }
    }
    match failed {
        None => {
            cert.check(format!("given arrows are P-coCartesian up to dimension {d}"), true, format!("{} arrows", lifts.len()));
        }
        Some(w) => cert.fail(format!("given arrows are P-coCartesian up to dimension {d}"), w),
    }
    let mut searched = 0;
    let mut missing = Vec::new();
    for e in 0..total.object_count() {
        let pe = p.apply_object(e);
        for c in 0..base.object_count() {
            for phi in 0..base.hom(pe, c).count(0) {
                searched += 1;
                if let Err(rejected) = search_lift(p, total, base, e, c, phi, d)? {
                    let why = if rejected.is_empty() { "no arrow over φ".to_string() } else { rejected.join("; ") };
                    missing.push(format!("e = {}, φ = {} ({why})", total.object_name(e), base.hom(pe, c).name(0, phi)));
                }
            }
        }
    }
    if missing.is_empty() {
        cert.check("every base arrow has a P-coCartesian lift", true, format!("{searched} base arrows searched"));
    } else {
        cert.fail("every base arrow has a P-coCartesian lift", missing.join(" | "));
    }
    cert.table(
        "objects and lifts",
        &["objects", "base objects", "arrows checked", "base arrows searched"],
        vec![CountRow { label: "P".into(), values: vec![total.object_count(), base.object_count(), lifts.len(), searched] }],
    );
    Ok(cert.timed(start))
}

/// Relative `Λ^n_0` extension problems along `p : X -> S` whose leading
/// edge is `edge`, for `2 <= n <= d`: every horn together with a base
/// simplex under it must have a filler over that simplex.
pub fn cocartesian_edge_fillers(x: &TruncatedSSet, s: &TruncatedSSet, p: &SSetMap, edge: CellId, d: usize) -> Result<ValidationReport> {
    if d > x.cap() || d > s.cap() {
        return Err(Error::BeyondCap { requested: d, cap: x.cap().min(s.cap()) });
    }
    let mut report = ValidationReport::new();
    for n in 2..=d {
        let filled: HashSet<(Vec<CellId>, CellId)> =
            (0..x.count(n)).map(|c| ((1..=n).map(|i| x.face(n, i, c)).collect(), p.apply(n, c))).collect();
        for horn in enumerate_horns(x, n, 0) {
            let last = horn[n - 1];
            if x.act(n - 1, last, &[0, 1]) != edge {
                continue;
            }
            let below: Vec<CellId> = horn.iter().map(|&y| p.apply(n - 1, y)).collect();
            for sigma in 0..s.count(n) {
                if (1..=n).all(|i| s.face(n, i, sigma) == below[i - 1]) && !filled.contains(&(horn.clone(), sigma)) {
                    let names: Vec<&str> = horn.iter().map(|&y| x.name(n - 1, y)).collect();
                    report.push(format!("Λ^{n}_0 with leading edge {} fills over the base", x.name(1, edge)), names.join(", "));
                }
            }
        }
    }
    Ok(report)
}
