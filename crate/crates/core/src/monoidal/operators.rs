use std::time::Instant;

use super::bullet::{c_simplicial_object, encode_tuple, simplicial_object_over};
use super::delta::DeltaOp;
use super::structure::{apply_cf, tuple_factors, validate_monoidal, MonSCat, SeqObject};
use crate::certificate::{Certificate, CountRow};
use crate::error::{Error, Result};
use crate::grothendieck::{grothendieck, Fibration, GrCat};
use crate::report::ValidationReport;
use crate::scat::{discrete_scat, validate_sfunctor, ArrowId, ObjId, SCat, SFunctor};
use crate::simplex;
use crate::sset::{labelled_coproduct, product_index, product_parts, product_with_cap, CellId, SSetMap, TruncatedSSet};

/// The summand of a hom of `C^⊗` over one arrow of `Δ^op`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperComponent {
    pub arrow: ArrowId,
    pub offsets: Vec<usize>,
    pub counts: Vec<usize>,
    /// `((C^f x)_i, y_i)`: source and target of the `i`-th factor.
    pub factors: Vec<(ObjId, ObjId)>,
}

/// An arrow `[f; f_1, ..., f_m]` of `C^⊗` as a vertex of its hom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OperArrow {
    pub source: ObjId,
    pub target: ObjId,
    pub vertex: CellId,
}

/// The category of operators `C^⊗` on sequences of level `≤ M`, with its
/// projection onto `Δ^op_{≤M}`.
#[derive(Clone, Debug)]
pub struct OperatorCat {
    pub total: SCat,
    pub delta: DeltaOp,
    pub base_scat: SCat,
    pub projection: SFunctor,
    pub monoidal: MonSCat,
    sequences: Vec<SeqObject>,
    level_start: Vec<ObjId>,
    components: Vec<Vec<OperComponent>>,
}

impl OperatorCat {
    pub fn object_count(&self) -> usize {
        self.sequences.len()
    }

    pub fn sequence(&self, o: ObjId) -> &[ObjId] {
        &self.sequences[o]
    }

    pub fn level(&self, o: ObjId) -> usize {
        self.sequences[o].len()
    }

    pub fn object(&self, xs: &[ObjId]) -> Option<ObjId> {
        let start = *self.level_start.get(xs.len())?;
        let count = self.monoidal.object_count();
        if xs.iter().any(|&x| x >= count) {
            return None;
        }
        Some(start + encode_tuple(count, xs))
    }

    pub fn components(&self, source: ObjId, target: ObjId) -> &[OperComponent] {
        &self.components[source * self.sequences.len() + target]
    }

    /// The `Δ^op` arrow and the factor cells `f_1, ..., f_m` of a `k`-cell.
    pub fn decompose(&self, source: ObjId, target: ObjId, k: usize, cell: CellId) -> (ArrowId, Vec<CellId>) {
        let comp = self
            .components(source, target)
            .iter()
            .find(|c| cell < c.offsets[k] + c.counts[k])
            .unwrap_or_else(|| panic!("cell {cell} outside hom in dimension {k}"));
        let factors = self.factor_homs(comp);
        (comp.arrow, product_parts(&factors, k, cell - comp.offsets[k]))
    }

    pub fn encode(&self, source: ObjId, target: ObjId, arrow: ArrowId, k: usize, parts: &[CellId]) -> Option<CellId> {
        let comp = self.components(source, target).iter().find(|c| c.arrow == arrow)?;
        let factors = self.factor_homs(comp);
        if parts.len() != factors.len() || parts.iter().zip(&factors).any(|(&p, h)| p >= h.count(k)) {
            return None;
        }
        Some(comp.offsets[k] + product_index(&factors, k, parts))
    }

    fn factor_homs(&self, comp: &OperComponent) -> Vec<&TruncatedSSet> {
        comp.factors.iter().map(|&(x, y)| self.monoidal.underlying.hom(x, y)).collect()
    }

    /// `[f; 1_{y_1}, ..., 1_{y_m}]` out of `source`, with `y` from `C^f`.
    pub fn chosen_lift(&self, source: ObjId, arrow: ArrowId) -> Result<OperArrow> {
        let n = self.level(source);
        if arrow >= self.delta.maps.len() || self.delta.source(arrow) != n {
            return Err(Error::NotAnArrow(format!("#{arrow} out of [{n}]")));
        }
        let ys = apply_cf(&self.monoidal, self.delta.map(arrow), n, self.sequence(source))?;
        let target = self.object(&ys).expect("levels stay within the bound");
        let ids: Vec<CellId> = ys.iter().map(|&y| self.monoidal.underlying.ident(y)).collect();
        let vertex = self.encode(source, target, arrow, 0, &ids).expect("identity components present");
        Ok(OperArrow { source, target, vertex })
    }

    pub fn fibration(&self) -> Fibration {
        Fibration { total: self.total.clone(), base: self.base_scat.clone(), projection: self.projection.clone() }
    }

    pub fn describe_arrow(&self, a: &OperArrow) -> String {
        format!(
            "{} -> {} ({})",
            self.total.object_name(a.source),
            self.total.object_name(a.target),
            self.total.hom(a.source, a.target).name(0, a.vertex)
        )
    }
}

/// `C^⊗`: objects the sequences of level `≤ M`, homs
/// `∐_{f ∈ Δ([m],[n])} ∏_i C(x_{f(i-1)+1} ⊗ ... ⊗ x_{f(i)}, y_i)` and
/// composite `[g; g_i] ∘ [f; f_j] = [f ∘ g; g_i ∘ (f_{g(i-1)+1} ⊗ ... ⊗ f_{g(i)})]`.
pub fn c_otimes(c: &MonSCat, bound: usize) -> Result<OperatorCat> {
    if bound < 1 {
        return Err(Error::malformed("level bound", "need M ≥ 1"));
    }
    let report = validate_monoidal(c);
    if !report.is_ok() {
        return Err(Error::InvalidMonoidal(report.to_string()));
    }
    let delta = DeltaOp::new(bound)?;
    let u = &c.underlying;
    let cap = c.cap();
    let count = u.object_count();
    let mut sequences: Vec<SeqObject> = Vec::new();
    let mut level_start = Vec::with_capacity(bound + 1);
    for n in 0..=bound {
        level_start.push(sequences.len());
        for t in 0..count.pow(n as u32) {
            sequences.push(super::bullet::decode_tuple(count, n, t));
        }
    }
    let names: Vec<String> =
        sequences.iter().map(|s| format!("[{}]", s.iter().map(|&x| u.object_name(x)).collect::<Vec<_>>().join(","))).collect();
    let total_objects = sequences.len();
    let mut homs = Vec::with_capacity(total_objects * total_objects);
    let mut components = Vec::with_capacity(total_objects * total_objects);
    for xs in &sequences {
        for ys in &sequences {
            let arrows = delta.category.hom(xs.len(), ys.len());
            let mut offsets = vec![0; cap + 1];
            let mut comps = Vec::with_capacity(arrows.len());
            let mut parts = Vec::with_capacity(arrows.len());
            for &a in arrows {
                let src = apply_cf(c, delta.map(a), xs.len(), xs)?;
                let hom = product_with_cap(&tuple_factors(u, &src, ys), cap);
                let counts = hom.counts();
                comps.push(OperComponent {
                    arrow: a,
                    offsets: offsets.clone(),
                    counts: counts.clone(),
                    factors: src.iter().copied().zip(ys.iter().copied()).collect(),
                });
                for k in 0..=cap {
                    offsets[k] += counts[k];
                }
                parts.push((delta.category.arrow_info(a).name.clone(), hom));
            }
            let refs: Vec<(String, &TruncatedSSet)> = parts.iter().map(|(name, h)| (name.clone(), h)).collect();
            homs.push(labelled_coproduct(cap, &refs)?);
            components.push(comps);
        }
    }
    let base_scat = discrete_scat(&delta.category, cap);
    let mut o = OperatorCat {
        total: base_scat.clone(),
        delta,
        base_scat,
        projection: SFunctor { on_objects: Vec::new(), on_homs: Vec::new() },
        monoidal: c.clone(),
        sequences,
        level_start,
        components,
    };
    let ident: Vec<CellId> = (0..total_objects)
        .map(|x| {
            let ids: Vec<CellId> = o.sequences[x].iter().map(|&a| u.ident(a)).collect();
            let id_arrow = o.delta.category.identity(o.level(x));
            o.encode(x, x, id_arrow, 0, &ids).expect("identity component present")
        })
        .collect();
    let total = SCat::from_rule(cap, names, homs, ident, |x, y, z, k, g, f| {
        let (fa, fs) = o.decompose(x, y, k, f);
        let (ga, gs) = o.decompose(y, z, k, g);
        let f_comp = o.components(x, y).iter().find(|c| c.arrow == fa).expect("component");
        let g_comp = o.components(y, z).iter().find(|c| c.arrow == ga).expect("component");
        let (fm, gm) = (o.delta.map(fa), o.delta.map(ga));
        let hs: Vec<CellId> = gm
            .windows(2)
            .enumerate()
            .map(|(i, w)| {
                let block: Vec<(ObjId, ObjId, CellId)> =
                    (w[0]..w[1]).map(|j| (f_comp.factors[j].0, f_comp.factors[j].1, fs[j])).collect();
                let pushed = c.tensor_many_cells(k, &block);
                let src = c.tensor_many(&block.iter().map(|b| b.0).collect::<Vec<_>>());
                let (mid, tgt) = g_comp.factors[i];
                u.compose(src, mid, tgt, k, gs[i], pushed)
            })
            .collect();
        let composite = o.delta.arrow(&simplex::compose(fm, gm), o.level(x)).expect("composite within the bound");
        o.encode(x, z, composite, k, &hs).expect("composite lands in its component")
    })?;
    let n = total_objects;
    let projection = SFunctor {
        on_objects: o.sequences.iter().map(Vec::len).collect(),
        on_homs: (0..n * n)
            .map(|t| {
                let (x, y) = (t / n, t % n);
                let (lx, ly) = (o.level(x), o.level(y));
                let arrows = o.delta.category.hom(lx, ly);
                SSetMap::new(
                    (0..=cap)
                        .map(|k| {
                            (0..total.hom(x, y).count(k))
                                .map(|cell| {
                                    let a = o.decompose(x, y, k, cell).0;
                                    arrows.iter().position(|&b| b == a).expect("arrow in its hom")
                                })
                                .collect()
                        })
                        .collect(),
                )
            })
            .collect(),
    };
    o.total = total;
    o.projection = projection;
    Ok(o)
}

/// The split cleavage: the chosen lift of `β ∘ α` is the chosen lift of
/// `β` after the chosen lift of `α`, for every object and composable pair.
pub fn check_split_cleavage(o: &OperatorCat) -> Result<ValidationReport> {
    let d = &o.delta.category;
    let mut report = ValidationReport::new();
    for s in 0..o.object_count() {
        for m in 0..d.object_count() {
            for &alpha in d.hom(o.level(s), m) {
                let first = o.chosen_lift(s, alpha)?;
                for l in 0..d.object_count() {
                    for &beta in d.hom(m, l) {
                        let second = o.chosen_lift(first.target, beta)?;
                        let composite = o.chosen_lift(s, d.compose(beta, alpha).expect("composable"))?;
                        let glued = o.total.compose(s, first.target, second.target, 0, second.vertex, first.vertex);
                        if composite.target != second.target || composite.vertex != glued {
                            report.push(
                                "chosen lifts compose strictly",
                                format!(
                                    "at {}: {} then {}",
                                    o.total.object_name(s),
                                    d.arrow_info(alpha).name,
                                    d.arrow_info(beta).name
                                ),
                            );
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

/// `F : C^⊗ -> Gr C^•`, `[x_1, ..., x_n] ↦ ((x_1, ..., x_n), [n])`, and on
/// each summand the identification of `∏_i C((C^f x)_i, y_i)` with the hom
/// of `C^m`.
pub fn cotimes_to_gr(o: &OperatorCat, gr: &GrCat) -> Result<SFunctor> {
    let n = o.object_count();
    let count = o.monoidal.object_count();
    if gr.object_count() != n {
        return Err(Error::Counterexample(format!("{} objects against {} in Gr C^•", n, gr.object_count())));
    }
    let on_objects: Vec<ObjId> = (0..n).map(|x| gr.object(o.level(x), encode_tuple(count, o.sequence(x)))).collect();
    let cap = o.total.cap();
    let mut on_homs = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let assign = (0..=cap)
                .map(|k| {
                    (0..o.total.hom(x, y).count(k))
                        .map(|cell| {
                            let (a, parts) = o.decompose(x, y, k, cell);
                            let comp = o.components(x, y).iter().find(|c| c.arrow == a).expect("component");
                            let inner = product_index(&o.factor_homs(comp), k, &parts);
                            gr.encode(on_objects[x], on_objects[y], a, k, inner).ok_or_else(|| {
                                Error::Counterexample(format!(
                                    "{k}-cell {} of C^⊗({}, {}) has no image",
                                    o.total.hom(x, y).name(k, cell),
                                    o.total.object_name(x),
                                    o.total.object_name(y)
                                ))
                            })
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            on_homs.push(SSetMap::new(assign));
        }
    }
    Ok(SFunctor { on_objects, on_homs })
}

fn hom_totals(c: &SCat) -> Vec<usize> {
    let mut out = vec![0; c.cap() + 1];
    for h in c.homs() {
        for (k, slot) in out.iter_mut().enumerate() {
            *slot += h.count(k);
        }
    }
    out
}

/// Verifies `F : C^⊗ -> Gr C^•` is an isomorphism of enriched categories
/// over `Δ^op`: bijective on objects and on every hom, an enriched functor,
/// and compatible with both projections.
pub fn verify_cotimes_gr(o: &OperatorCat, gr: &GrCat, cert: &mut Certificate) -> Option<SFunctor> {
    let columns: Vec<String> = (0..=o.total.cap()).map(|k| k.to_string()).collect();
    let columns: Vec<&str> = columns.iter().map(String::as_str).collect();
    cert.table(
        "hom cells per dimension",
        &columns,
        vec![
            CountRow { label: "C^⊗".into(), values: hom_totals(&o.total) },
            CountRow { label: "Gr C^•".into(), values: hom_totals(&gr.total) },
        ],
    );
    let f = match cotimes_to_gr(o, gr) {
        Ok(f) => f,
        Err(e) => {
            cert.fail("functor is defined", e.to_string());
            return None;
        }
    };
    cert.check("functor is defined", true, "");
    let n = o.object_count();
    let mut seen = vec![false; n];
    for &y in &f.on_objects {
        seen[y] = true;
    }
    cert.check("bijective on objects", seen.iter().all(|&s| s), format!("{n} objects"));
    let bad_hom = (0..n * n).find(|&t| !f.on_homs[t].is_bijective(gr.total.hom(f.on_objects[t / n], f.on_objects[t % n])));
    match bad_hom {
        None => {
            cert.check("bijective on every hom", true, "");
        }
        Some(t) => cert.fail("bijective on every hom", format!("hom({}, {})", o.total.object_name(t / n), o.total.object_name(t % n))),
    }
    let report = validate_sfunctor(&f, &o.total, &gr.total);
    if report.is_ok() {
        cert.check("preserves composition, identities, faces and degeneracies", true, "");
    } else {
        let v = &report.violations[0];
        cert.fail("preserves composition, identities, faces and degeneracies", format!("{}: {}", v.rule, v.witness));
    }
    let projected = f.then(&gr.projection);
    cert.check("commutes with the projections to Δ^op", projected == o.projection, "");
    Some(f)
}

/// `C^⊗ ≅ Gr C^•` within the bound `M`.
pub fn check_cotimes_gr_iso(c: &MonSCat, bound: usize) -> Result<Certificate> {
    let start = Instant::now();
    let mut cert = Certificate::new(format!("check cotimes-gr --delta-max {bound}"));
    let o = c_otimes(c, bound)?;
    let bullet = c_simplicial_object(c, bound)?;
    let gr = grothendieck(&bullet)?;
    verify_cotimes_gr(&o, &gr, &mut cert);
    Ok(cert.timed(start))
}

/// `Gr C^•` of the same truncation as an existing `C^⊗`.
pub fn gr_of_bullet(o: &OperatorCat) -> Result<GrCat> {
    grothendieck(&simplicial_object_over(&o.monoidal, &o.delta)?)
}
