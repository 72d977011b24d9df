use super::enriched::SCat;
use super::fincat::ObjId;
use crate::report::ValidationReport;
use crate::sset::{all_sset_maps, SSetMap};

/// Object and hom assignments of a strict enriched functor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SFunctor {
    pub on_objects: Vec<ObjId>,
    /// Indexed `x * |source| + y`.
    pub on_homs: Vec<SSetMap>,
}

impl SFunctor {
    pub fn identity(c: &SCat) -> Self {
        Self { on_objects: (0..c.object_count()).collect(), on_homs: c.homs().iter().map(SSetMap::identity).collect() }
    }

    pub fn hom_map(&self, x: ObjId, y: ObjId) -> &SSetMap {
        let n = self.on_objects.len();
        &self.on_homs[x * n + y]
    }

    pub fn apply_object(&self, x: ObjId) -> ObjId {
        self.on_objects[x]
    }

    pub fn apply_cell(&self, x: ObjId, y: ObjId, k: usize, cell: usize) -> usize {
        self.hom_map(x, y).apply(k, cell)
    }

    /// `after ∘ self`.
    pub fn then(&self, after: &SFunctor) -> SFunctor {
        let n = self.on_objects.len();
        let on_objects = self.on_objects.iter().map(|&x| after.on_objects[x]).collect();
        let on_homs = (0..n * n)
            .map(|t| {
                let (x, y) = (t / n, t % n);
                self.on_homs[t].then(after.hom_map(self.on_objects[x], self.on_objects[y]))
            })
            .collect();
        SFunctor { on_objects, on_homs }
    }

    /// The same functor viewed as `C^op -> D^op`.
    pub fn opposite(&self) -> SFunctor {
        let n = self.on_objects.len();
        SFunctor {
            on_objects: self.on_objects.clone(),
            on_homs: (0..n * n).map(|t| self.on_homs[(t % n) * n + t / n].clone()).collect(),
        }
    }
}

pub fn validate_sfunctor(f: &SFunctor, source: &SCat, target: &SCat) -> ValidationReport {
    let mut report = ValidationReport::new();
    let n = source.object_count();
    if f.on_objects.len() != n || f.on_homs.len() != n * n {
        report.push("functor covers the source", "assignment tables misshapen");
        return report;
    }
    if let Some(&bad) = f.on_objects.iter().find(|&&y| y >= target.object_count()) {
        report.push("objects land in the target", bad.to_string());
        return report;
    }
    for x in 0..n {
        for y in 0..n {
            let r = f.hom_map(x, y).validate(source.hom(x, y), target.hom(f.on_objects[x], f.on_objects[y]));
            if !r.is_ok() {
                report.extend_prefixed(&format!("hom({}, {})", source.object_name(x), source.object_name(y)), r);
                return report;
            }
        }
    }
    for x in 0..n {
        if f.hom_map(x, x).apply(0, source.ident(x)) != target.ident(f.on_objects[x]) {
            report.push("functor preserves identities", source.object_name(x).to_string());
        }
    }
    let cap = source.cap().min(target.cap());
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (fx, fy, fz) = (f.on_objects[x], f.on_objects[y], f.on_objects[z]);
                'dims: for k in 0..=cap {
                    for g in 0..source.hom(y, z).count(k) {
                        for h in 0..source.hom(x, y).count(k) {
                            let lhs = f.apply_cell(x, z, k, source.compose(x, y, z, k, g, h));
                            let rhs = target.compose(fx, fy, fz, k, f.apply_cell(y, z, k, g), f.apply_cell(x, y, k, h));
                            if lhs != rhs {
                                report.push(
                                    "functor preserves composition",
                                    format!(
                                        "({}, {}, {}) {k}-cells {}, {}",
                                        source.object_name(x),
                                        source.object_name(y),
                                        source.object_name(z),
                                        source.hom(y, z).name(k, g),
                                        source.hom(x, y).name(k, h)
                                    ),
                                );
                                break 'dims;
                            }
                        }
                    }
                }
            }
        }
    }
    report
}

/// Every strict functor `C -> D`. Exponential; meant for tiny inputs.
pub fn enumerate_sfunctors(c: &SCat, d: &SCat) -> Vec<SFunctor> {
    let n = c.object_count();
    let m = d.object_count();
    let mut out = Vec::new();
    let total = m.checked_pow(n as u32).unwrap_or(0);
    for code in 0..total {
        let mut rest = code;
        let on_objects: Vec<ObjId> = (0..n)
            .map(|_| {
                let v = rest % m;
                rest /= m;
                v
            })
            .collect();
        let options: Vec<Vec<SSetMap>> = (0..n * n)
            .map(|t| {
                let (x, y) = (t / n, t % n);
                let src = c.hom(x, y);
                all_sset_maps(src, d.hom(on_objects[x], on_objects[y]))
                    .into_iter()
                    .filter(|map| x != y || map.apply(0, c.ident(x)) == d.ident(on_objects[x]))
                    .collect()
            })
            .collect();
        let mut chosen: Vec<SSetMap> = Vec::with_capacity(n * n);
        extend(c, d, &on_objects, &options, &mut chosen, &mut out);
    }
    out
}

fn extend(c: &SCat, d: &SCat, objs: &[ObjId], options: &[Vec<SSetMap>], chosen: &mut Vec<SSetMap>, out: &mut Vec<SFunctor>) {
    let n = objs.len();
    if chosen.len() == n * n {
        let f = SFunctor { on_objects: objs.to_vec(), on_homs: chosen.clone() };
        if validate_sfunctor(&f, c, d).is_ok() {
            out.push(f);
        }
        return;
    }
    for option in &options[chosen.len()] {
        chosen.push(option.clone());
        extend(c, d, objs, options, chosen, out);
        chosen.pop();
    }
}
