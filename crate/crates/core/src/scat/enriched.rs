use rayon::prelude::*;

use super::fincat::{FinCat, ObjId};
use super::functor::SFunctor;
use crate::error::{Error, Result};
use crate::report::ValidationReport;
use crate::sset::{discrete, horn_check, product_with_cap, validate_sset, CellId, HornMode, SSetMap, TruncatedSSet};

/// A finite simplicially enriched category.
///
/// Hom complexes are stored row-major (`hom(x, y)` at `x * n + y`) and
/// composition `hom(y,z) × hom(x,y) -> hom(x,z)` as one dense table per
/// triple and dimension, indexed by `g * |hom(x,y)_k| + f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SCat {
    cap: usize,
    objects: Vec<String>,
    homs: Vec<TruncatedSSet>,
    comp: Vec<Vec<Vec<u32>>>,
    ident: Vec<CellId>,
}

impl SCat {
    /// Assembles an enriched category from its homs, a composition rule
    /// `compose(x, y, z, k, g, f)` and identity vertices. Axioms are the job
    /// of [`validate_scat`].
    pub fn from_rule<C>(cap: usize, objects: Vec<String>, homs: Vec<TruncatedSSet>, ident: Vec<CellId>, compose: C) -> Result<Self>
    where
        C: Fn(ObjId, ObjId, ObjId, usize, CellId, CellId) -> CellId + Sync,
    {
        let n = objects.len();
        if homs.len() != n * n || ident.len() != n {
            return Err(Error::malformed("enriched category", "hom or identity table misshapen"));
        }
        for h in &homs {
            Error::cap_check(cap, h.cap())?;
        }
        for (x, &v) in ident.iter().enumerate() {
            if v >= homs[x * n + x].count(0) {
                return Err(Error::malformed("enriched category", format!("identity of `{}` missing", objects[x])));
            }
        }
        let comp: Vec<Vec<Vec<u32>>> = (0..n * n * n)
            .into_par_iter()
            .map(|t| {
                let (x, y, z) = (t / (n * n), (t / n) % n, t % n);
                let (hxy, hyz) = (&homs[x * n + y], &homs[y * n + z]);
                (0..=cap)
                    .map(|k| {
                        let (a, b) = (hxy.count(k), hyz.count(k));
                        let mut table = Vec::with_capacity(a * b);
                        for g in 0..b {
                            for f in 0..a {
                                table.push(compose(x, y, z, k, g, f) as u32);
                            }
                        }
                        table
                    })
                    .collect()
            })
            .collect();
        for (t, per) in comp.iter().enumerate() {
            let (x, z) = (t / (n * n), t % n);
            for (k, table) in per.iter().enumerate() {
                if table.iter().any(|&c| c as usize >= homs[x * n + z].count(k)) {
                    return Err(Error::malformed("enriched category", format!("composite out of range in dimension {k}")));
                }
            }
        }
        Ok(Self { cap, objects, homs, comp, ident })
    }

    /// Builds from explicit tables, as read from a document.
    pub fn from_tables(
        cap: usize,
        objects: Vec<String>,
        homs: Vec<TruncatedSSet>,
        comp: Vec<Vec<Vec<u32>>>,
        ident: Vec<CellId>,
    ) -> Result<Self> {
        let n = objects.len();
        if comp.len() != n * n * n {
            return Err(Error::malformed("enriched category", "composition table misshapen"));
        }
        for t in 0..n * n * n {
            let (x, y, z) = (t / (n * n), (t / n) % n, t % n);
            if comp[t].len() != cap + 1 {
                return Err(Error::malformed("enriched category", "composition table misses dimensions"));
            }
            for k in 0..=cap {
                if comp[t][k].len() != homs[x * n + y].count(k) * homs[y * n + z].count(k) {
                    return Err(Error::malformed(
                        "enriched category",
                        format!("composition {} {} {} in dimension {k} misaligned", objects[x], objects[y], objects[z]),
                    ));
                }
            }
        }
        let rule = |x: usize, y: usize, z: usize, k: usize, g: usize, f: usize| {
            comp[(x * n + y) * n + z][k][g * homs[x * n + y].count(k) + f] as CellId
        };
        Self::from_rule(cap, objects.clone(), homs.clone(), ident, rule)
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn object_name(&self, x: ObjId) -> &str {
        &self.objects[x]
    }

    pub fn find_object(&self, name: &str) -> Option<ObjId> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn hom(&self, x: ObjId, y: ObjId) -> &TruncatedSSet {
        &self.homs[x * self.objects.len() + y]
    }

    pub fn homs(&self) -> &[TruncatedSSet] {
        &self.homs
    }

    /// `g ∘ f` for `k`-cells `f ∈ hom(x,y)`, `g ∈ hom(y,z)`.
    pub fn compose(&self, x: ObjId, y: ObjId, z: ObjId, k: usize, g: CellId, f: CellId) -> CellId {
        let n = self.objects.len();
        self.comp[(x * n + y) * n + z][k][g * self.homs[x * n + y].count(k) + f] as CellId
    }

    pub(crate) fn comp_table(&self, x: ObjId, y: ObjId, z: ObjId, k: usize) -> &[u32] {
        let n = self.objects.len();
        &self.comp[(x * n + y) * n + z][k]
    }

    pub fn ident(&self, x: ObjId) -> CellId {
        self.ident[x]
    }

    pub fn idents(&self) -> &[CellId] {
        &self.ident
    }

    /// The identity of `x` as a degenerate `k`-cell.
    pub fn identity_at(&self, x: ObjId, k: usize) -> CellId {
        self.hom(x, x).degenerate_vertex(self.ident[x], k)
    }

    /// Same data restricted to dimensions `≤ cap`.
    pub fn truncate(&self, cap: usize) -> Result<SCat> {
        if cap > self.cap {
            return Err(Error::BeyondCap { requested: cap, cap: self.cap });
        }
        let homs = self.homs.iter().map(|h| h.truncate(cap)).collect::<Result<Vec<_>>>()?;
        let comp = self.comp.iter().map(|per| per[..=cap].to_vec()).collect();
        Ok(SCat { cap, objects: self.objects.clone(), homs, comp, ident: self.ident.clone() })
    }

    pub fn is_discrete(&self) -> bool {
        self.homs.iter().all(|h| h.nondegenerate_counts().iter().skip(1).all(|&c| c == 0))
    }
}

pub fn validate_scat(c: &SCat) -> ValidationReport {
    let n = c.object_count();
    let cap = c.cap;
    let mut report = ValidationReport::new();
    for x in 0..n {
        for y in 0..n {
            let r = validate_sset(c.hom(x, y));
            report.extend_prefixed(&format!("hom({}, {})", c.objects[x], c.objects[y]), r);
        }
    }
    let triples: Vec<ValidationReport> = (0..n * n * n)
        .into_par_iter()
        .map(|t| {
            let (x, y, z) = (t / (n * n), (t / n) % n, t % n);
            let mut r = ValidationReport::new();
            let (hxy, hyz, hxz) = (c.hom(x, y), c.hom(y, z), c.hom(x, z));
            let label = || format!("({}, {}, {})", c.objects[x], c.objects[y], c.objects[z]);
            'dims: for k in 0..=cap {
                for g in 0..hyz.count(k) {
                    for f in 0..hxy.count(k) {
                        let gf = c.compose(x, y, z, k, g, f);
                        if k > 0 {
                            for i in 0..=k {
                                let lhs = hxz.face(k, i, gf);
                                let rhs = c.compose(x, y, z, k - 1, hyz.face(k, i, g), hxy.face(k, i, f));
                                if lhs != rhs {
                                    r.push(format!("composition commutes with d_{i}"), label());
                                    break 'dims;
                                }
                            }
                        }
                        if k < cap {
                            for i in 0..=k {
                                let lhs = hxz.degen(k, i, gf);
                                let rhs = c.compose(x, y, z, k + 1, hyz.degen(k, i, g), hxy.degen(k, i, f));
                                if lhs != rhs {
                                    r.push(format!("composition commutes with s_{i}"), label());
                                    break 'dims;
                                }
                            }
                        }
                    }
                }
            }
            // unit laws on hom(x, y), recorded once per pair
            if y == z {
                for k in 0..=cap {
                    let iy = c.identity_at(y, k);
                    let ix = c.identity_at(x, k);
                    for f in 0..hxy.count(k) {
                        if c.compose(x, y, y, k, iy, f) != f || c.compose(x, x, y, k, f, ix) != f {
                            r.push("unit laws", format!("hom({}, {}) {k}-cell {}", c.objects[x], c.objects[y], hxy.name(k, f)));
                            break;
                        }
                    }
                }
            }
            r
        })
        .collect();
    for r in triples {
        for v in r.violations {
            report.push(v.rule, v.witness);
        }
    }
    let quads: Vec<ValidationReport> = (0..n * n * n * n)
        .into_par_iter()
        .map(|q| {
            let (w, x, y, z) = (q / (n * n * n), (q / (n * n)) % n, (q / n) % n, q % n);
            let mut r = ValidationReport::new();
            for k in 0..=cap {
                let (a, b, d) = (c.hom(w, x).count(k), c.hom(x, y).count(k), c.hom(y, z).count(k));
                for h in 0..d {
                    for g in 0..b {
                        let hg = c.compose(x, y, z, k, h, g);
                        for f in 0..a {
                            let lhs = c.compose(w, x, z, k, hg, f);
                            let rhs = c.compose(w, y, z, k, h, c.compose(w, x, y, k, g, f));
                            if lhs != rhs {
                                r.push(
                                    "associativity",
                                    format!(
                                        "({}, {}, {}, {}) {k}-cells {}, {}, {}",
                                        c.objects[w],
                                        c.objects[x],
                                        c.objects[y],
                                        c.objects[z],
                                        c.hom(y, z).name(k, h),
                                        c.hom(x, y).name(k, g),
                                        c.hom(w, x).name(k, f)
                                    ),
                                );
                                return r;
                            }
                        }
                    }
                }
            }
            r
        })
        .collect();
    for r in quads {
        for v in r.violations {
            report.push(v.rule, v.witness);
        }
    }
    report
}

/// `op_s`: `C^op(x, y) = C(y, x)` with composition transposed.
pub fn opposite_scat(c: &SCat) -> SCat {
    let n = c.object_count();
    let homs = (0..n * n).map(|t| c.homs[(t % n) * n + t / n].clone()).collect();
    let mut comp = Vec::with_capacity(n * n * n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                // g ∈ C(z, y), f ∈ C(y, x); result f ∘ g in C(z, x)
                let per = (0..=c.cap)
                    .map(|k| {
                        let (a, b) = (c.hom(y, x).count(k), c.hom(z, y).count(k));
                        let src = c.comp_table(z, y, x, k);
                        let mut table = Vec::with_capacity(a * b);
                        for g in 0..b {
                            for f in 0..a {
                                table.push(src[f * b + g]);
                            }
                        }
                        table
                    })
                    .collect();
                comp.push(per);
            }
        }
    }
    SCat { cap: c.cap, objects: c.objects.clone(), homs, comp, ident: c.ident.clone() }
}

/// A category viewed as enriched in discrete simplicial sets.
pub fn discrete_scat(d: &FinCat, cap: usize) -> SCat {
    let n = d.object_count();
    let homs: Vec<TruncatedSSet> = (0..n * n)
        .map(|t| {
            let names: Vec<String> = d.hom(t / n, t % n).iter().map(|&a| d.arrow_info(a).name.clone()).collect();
            discrete(&names, cap)
        })
        .collect();
    let position = |c: usize, e: usize, a: usize| d.hom(c, e).iter().position(|&b| b == a).expect("composite lies in its hom");
    let ident = (0..n).map(|c| position(c, c, d.identity(c))).collect();
    SCat::from_rule(cap, d.objects().to_vec(), homs, ident, |x, y, z, _, g, f| {
        let (ga, fa) = (d.hom(y, z)[g], d.hom(x, y)[f]);
        position(x, z, d.compose(ga, fa).expect("composable"))
    })
    .expect("discrete enrichment of a category")
}

pub fn terminal_scat(cap: usize) -> SCat {
    discrete_scat(&FinCat::terminal(), cap)
}

/// Product of enriched categories; objects in mixed radix with the
/// leftmost factor most significant.
pub fn scat_product_many(factors: &[&SCat], cap: usize) -> Result<SCat> {
    for f in factors {
        Error::cap_check(cap, f.cap)?;
    }
    if factors.len() == 1 {
        return Ok(factors[0].clone());
    }
    let sizes: Vec<usize> = factors.iter().map(|f| f.object_count()).collect();
    let total: usize = sizes.iter().product();
    let decode = |mut idx: usize| -> Vec<usize> {
        let mut out = vec![0; sizes.len()];
        for (slot, &s) in out.iter_mut().zip(&sizes).rev() {
            *slot = idx % s;
            idx /= s;
        }
        out
    };
    let objects: Vec<String> = (0..total)
        .map(|o| {
            let parts: Vec<&str> = decode(o).iter().zip(factors).map(|(&p, f)| f.object_name(p)).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let decoded: Vec<Vec<usize>> = (0..total).map(decode).collect();
    let homs: Vec<TruncatedSSet> = (0..total * total)
        .into_par_iter()
        .map(|t| {
            let (a, b) = (&decoded[t / total], &decoded[t % total]);
            let parts: Vec<&TruncatedSSet> = factors.iter().enumerate().map(|(i, f)| f.hom(a[i], b[i])).collect();
            product_with_cap(&parts, cap)
        })
        .collect();
    let ident = decoded
        .iter()
        .map(|a| {
            let parts: Vec<&TruncatedSSet> = factors.iter().enumerate().map(|(i, f)| f.hom(a[i], a[i])).collect();
            let cells: Vec<CellId> = factors.iter().enumerate().map(|(i, f)| f.ident(a[i])).collect();
            crate::sset::product_index(&parts, 0, &cells)
        })
        .collect();
    SCat::from_rule(cap, objects, homs, ident, |x, y, z, k, g, f| {
        let (ax, ay, az) = (&decoded[x], &decoded[y], &decoded[z]);
        let pxy: Vec<&TruncatedSSet> = factors.iter().enumerate().map(|(i, c)| c.hom(ax[i], ay[i])).collect();
        let pyz: Vec<&TruncatedSSet> = factors.iter().enumerate().map(|(i, c)| c.hom(ay[i], az[i])).collect();
        let pxz: Vec<&TruncatedSSet> = factors.iter().enumerate().map(|(i, c)| c.hom(ax[i], az[i])).collect();
        let fs = crate::sset::product_parts(&pxy, k, f);
        let gs = crate::sset::product_parts(&pyz, k, g);
        let hs: Vec<CellId> =
            factors.iter().enumerate().map(|(i, c)| c.compose(ax[i], ay[i], az[i], k, gs[i], fs[i])).collect();
        crate::sset::product_index(&pxz, k, &hs)
    })
}

pub fn scat_product(c: &SCat, d: &SCat) -> Result<SCat> {
    Error::cap_check(c.cap, d.cap)?;
    scat_product_many(&[c, d], c.cap)
}

/// `C^n`; `C^0` is the terminal enriched category.
pub fn scat_power(c: &SCat, n: usize) -> SCat {
    if n == 0 {
        return terminal_scat(c.cap);
    }
    let factors = vec![c; n];
    scat_product_many(&factors, c.cap).expect("factors share a cap")
}

/// Runs the horn check in every hom complex.
pub fn is_locally_kan(c: &SCat, d: usize) -> Result<ValidationReport> {
    if d > c.cap {
        return Err(Error::BeyondCap { requested: d, cap: c.cap });
    }
    let n = c.object_count();
    let mut report = ValidationReport::new();
    for x in 0..n {
        for y in 0..n {
            let r = horn_check(c.hom(x, y), HornMode::All, d)?;
            if let Some(e) = r.first_failure() {
                report.push(
                    format!("hom({}, {}) fills Λ^{}_{}", c.objects[x], c.objects[y], e.n, e.k),
                    e.witness.clone().unwrap_or_default().join(", "),
                );
            }
        }
    }
    Ok(report)
}

/// Sub-enriched category on all objects, keeping the cells accepted by
/// `keep(x, y, k, cell)`. The kept cells must form sub-complexes closed
/// under composition and containing identities. Returns the inclusion.
pub fn sub_scat(c: &SCat, keep: impl Fn(ObjId, ObjId, usize, CellId) -> bool) -> Result<(SCat, SFunctor)> {
    let n = c.object_count();
    let cap = c.cap;
    let mut new_ids: Vec<Vec<Vec<Option<CellId>>>> = Vec::with_capacity(n * n);
    let mut kept: Vec<Vec<Vec<CellId>>> = Vec::with_capacity(n * n);
    for t in 0..n * n {
        let h = &c.homs[t];
        let (x, y) = (t / n, t % n);
        let mut ids = Vec::new();
        let mut cells = Vec::new();
        for k in 0..=cap {
            let list: Vec<CellId> = (0..h.count(k)).filter(|&cell| keep(x, y, k, cell)).collect();
            let mut map = vec![None; h.count(k)];
            for (i, &cell) in list.iter().enumerate() {
                map[cell] = Some(i);
            }
            ids.push(map);
            cells.push(list);
        }
        new_ids.push(ids);
        kept.push(cells);
    }
    let not_closed = |what: &str, x: ObjId, y: ObjId| {
        Error::malformed("sub-category", format!("{what} leaves the kept cells of hom({}, {})", c.objects[x], c.objects[y]))
    };
    let mut homs = Vec::with_capacity(n * n);
    for t in 0..n * n {
        let h = &c.homs[t];
        let (x, y) = (t / n, t % n);
        let names = (0..=cap).map(|k| kept[t][k].iter().map(|&cell| h.name(k, cell).to_string()).collect()).collect();
        let mut face = Vec::new();
        let mut degen = Vec::new();
        for k in 0..=cap {
            let mut fk = Vec::new();
            if k > 0 {
                for i in 0..=k {
                    let col: Option<Vec<CellId>> = kept[t][k].iter().map(|&cell| new_ids[t][k - 1][h.face(k, i, cell)]).collect();
                    fk.push(col.ok_or_else(|| not_closed("a face", x, y))?);
                }
            }
            face.push(fk);
            let mut dk = Vec::new();
            if k < cap {
                for i in 0..=k {
                    let col: Option<Vec<CellId>> = kept[t][k].iter().map(|&cell| new_ids[t][k + 1][h.degen(k, i, cell)]).collect();
                    dk.push(col.ok_or_else(|| not_closed("a degeneracy", x, y))?);
                }
            }
            degen.push(dk);
        }
        homs.push(TruncatedSSet::from_tables(cap, names, face, degen)?);
    }
    let mut ident = Vec::with_capacity(n);
    for x in 0..n {
        ident.push(new_ids[x * n + x][0][c.ident(x)].ok_or_else(|| not_closed("an identity", x, x))?);
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for k in 0..=cap {
                    for &g in &kept[y * n + z][k] {
                        for &f in &kept[x * n + y][k] {
                            if new_ids[x * n + z][k][c.compose(x, y, z, k, g, f)].is_none() {
                                return Err(not_closed("composition", x, z));
                            }
                        }
                    }
                }
            }
        }
    }
    let sub = SCat::from_rule(cap, c.objects.clone(), homs, ident, |x, y, z, k, g, f| {
        let (og, of) = (kept[y * n + z][k][g], kept[x * n + y][k][f]);
        new_ids[x * n + z][k][c.compose(x, y, z, k, og, of)].expect("closure checked")
    })?;
    let inclusion = SFunctor {
        on_objects: (0..n).collect(),
        on_homs: kept.into_iter().map(SSetMap::new).collect(),
    };
    Ok((sub, inclusion))
}
