//! JSON documents for simplicial sets, enriched categories, functors,
//! diagrams and monoidal structures.
//!
//! Cells and objects are referred to by their string identifiers. Keyed
//! tables may come in any order; only arrays aligned with a cell list are
//! positional.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grothendieck::DiagramSCat;
use crate::monoidal::MonSCat;
use crate::scat::{scat_product, validate_scat, Arrow, FinCat, SCat, SFunctor};
use crate::sset::{validate_sset, CellId, SSetMap, TruncatedSSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SSetDoc {
    pub cap: usize,
    pub cells: Vec<Vec<String>>,
    /// `"k.i"` -> ids of `d_i` of each `k`-cell, aligned with `cells[k]`.
    pub face: BTreeMap<String, Vec<String>>,
    /// `"k.i"` -> ids of `s_i` of each `k`-cell.
    pub degen: BTreeMap<String, Vec<String>>,
}

/// A nerve output: the complex plus, per cell, the data defining it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NerveDoc {
    pub sset: SSetDoc,
    /// Aligned with `sset.cells`.
    pub data: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowDoc {
    pub name: String,
    pub source: String,
    pub target: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinCatDoc {
    pub objects: Vec<String>,
    pub arrows: Vec<ArrowDoc>,
    /// object -> identity arrow
    pub identities: BTreeMap<String, String>,
    /// `[g, f, g ∘ f]` for every composable pair
    pub compose: Vec<[String; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomDoc {
    pub source: String,
    pub target: String,
    pub complex: SSetDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompDoc {
    pub source: String,
    pub middle: String,
    pub target: String,
    /// Per dimension, `[g, f, g ∘ f]` for every pair of cells.
    pub cells: Vec<Vec<[String; 3]>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScatDoc {
    pub cap: usize,
    pub objects: Vec<String>,
    pub homs: Vec<HomDoc>,
    pub comp: Vec<CompDoc>,
    /// object -> identity vertex
    pub ident: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomMapDoc {
    pub source: String,
    pub target: String,
    /// Per dimension, the image of each cell of the source hom.
    pub cells: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctorDoc {
    pub objects: BTreeMap<String, String>,
    pub homs: Vec<HomMapDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramDoc {
    pub base: FinCatDoc,
    /// base object -> fiber
    pub fibers: BTreeMap<String, ScatDoc>,
    /// base arrow -> action
    pub actions: BTreeMap<String, FunctorDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidalDoc {
    pub category: ScatDoc,
    /// `μ` on the product `C × C`, whose objects and cells are named `(a,b)`
    /// after their components.
    pub tensor: FunctorDoc,
    pub unit: String,
}

/// An enriched functor onto a base, as produced by the Grothendieck
/// construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FibrationDoc {
    pub total: ScatDoc,
    pub base: ScatDoc,
    pub projection: FunctorDoc,
}

fn index_of<'a>(what: &'static str, names: &'a [String]) -> Result<HashMap<&'a str, usize>> {
    let mut out = HashMap::with_capacity(names.len());
    for (i, n) in names.iter().enumerate() {
        if out.insert(n.as_str(), i).is_some() {
            return Err(Error::malformed(what, format!("duplicate id `{n}`")));
        }
    }
    Ok(out)
}

fn resolve(what: &'static str, index: &HashMap<&str, usize>, name: &str) -> Result<usize> {
    index.get(name).copied().ok_or_else(|| Error::malformed(what, format!("unknown id `{name}`")))
}

pub fn sset_to_doc(x: &TruncatedSSet) -> SSetDoc {
    let cap = x.cap();
    let mut face = BTreeMap::new();
    let mut degen = BTreeMap::new();
    for k in 0..=cap {
        if k > 0 {
            for i in 0..=k {
                let col = (0..x.count(k)).map(|c| x.name(k - 1, x.face(k, i, c)).to_string()).collect();
                face.insert(format!("{k}.{i}"), col);
            }
        }
        if k < cap {
            for i in 0..=k {
                let col = (0..x.count(k)).map(|c| x.name(k + 1, x.degen(k, i, c)).to_string()).collect();
                degen.insert(format!("{k}.{i}"), col);
            }
        }
    }
    SSetDoc { cap, cells: (0..=cap).map(|k| x.names(k).to_vec()).collect(), face, degen }
}

fn operator_table(
    what: &'static str,
    doc: &BTreeMap<String, Vec<String>>,
    cells: &[Vec<String>],
    index: &[HashMap<&str, usize>],
    k: usize,
    i: usize,
    into: usize,
) -> Result<Vec<CellId>> {
    let key = format!("{k}.{i}");
    let col = doc.get(&key).ok_or_else(|| Error::malformed("simplicial set", format!("{what} table `{key}` missing")))?;
    if col.len() != cells[k].len() {
        return Err(Error::malformed("simplicial set", format!("{what} table `{key}` not aligned with its cells")));
    }
    col.iter().map(|n| resolve("simplicial set", &index[into], n)).collect()
}

/// Reads a simplicial set and checks the simplicial identities.
pub fn sset_from_doc(doc: &SSetDoc) -> Result<TruncatedSSet> {
    let cap = doc.cap;
    if doc.cells.len() != cap + 1 {
        return Err(Error::malformed("simplicial set", format!("`cells` needs {} dimensions", cap + 1)));
    }
    let index: Vec<HashMap<&str, usize>> = doc.cells.iter().map(|c| index_of("simplicial set", c)).collect::<Result<_>>()?;
    let expected_keys = |top: usize| (0..=top).flat_map(|k| (0..=k).map(move |i| format!("{k}.{i}"))).collect::<Vec<_>>();
    let face_keys: Vec<String> = expected_keys(cap).into_iter().filter(|key| !key.starts_with("0.")).collect();
    let degen_keys: Vec<String> = if cap == 0 { Vec::new() } else { expected_keys(cap - 1) };
    if let Some(extra) = doc.face.keys().find(|key| !face_keys.contains(key)) {
        return Err(Error::malformed("simplicial set", format!("unexpected face table `{extra}`")));
    }
    if let Some(extra) = doc.degen.keys().find(|key| !degen_keys.contains(key)) {
        return Err(Error::malformed("simplicial set", format!("unexpected degeneracy table `{extra}`")));
    }
    let mut face = vec![Vec::new(); cap + 1];
    let mut degen = vec![Vec::new(); cap + 1];
    for k in 0..=cap {
        if k > 0 {
            face[k] = (0..=k).map(|i| operator_table("face", &doc.face, &doc.cells, &index, k, i, k - 1)).collect::<Result<_>>()?;
        }
        if k < cap {
            degen[k] =
                (0..=k).map(|i| operator_table("degeneracy", &doc.degen, &doc.cells, &index, k, i, k + 1)).collect::<Result<_>>()?;
        }
    }
    let x = TruncatedSSet::from_tables(cap, doc.cells.clone(), face, degen)?;
    let report = validate_sset(&x);
    if !report.is_ok() {
        return Err(Error::malformed("simplicial set", report.to_string()));
    }
    Ok(x)
}

pub fn nerve_doc(x: &TruncatedSSet, describe: impl Fn(usize, CellId) -> String) -> NerveDoc {
    NerveDoc { sset: sset_to_doc(x), data: (0..=x.cap()).map(|k| (0..x.count(k)).map(|c| describe(k, c)).collect()).collect() }
}

pub fn fincat_to_doc(d: &FinCat) -> FinCatDoc {
    let objects = d.objects().to_vec();
    let arrows: Vec<ArrowDoc> = d
        .arrows()
        .iter()
        .map(|a| ArrowDoc { name: a.name.clone(), source: objects[a.src].clone(), target: objects[a.tgt].clone() })
        .collect();
    let identities = (0..d.object_count()).map(|c| (objects[c].clone(), d.arrow_info(d.identity(c)).name.clone())).collect();
    let mut compose = Vec::new();
    for g in 0..arrows.len() {
        for f in 0..arrows.len() {
            if let Some(h) = d.compose(g, f) {
                compose.push([arrows[g].name.clone(), arrows[f].name.clone(), arrows[h].name.clone()]);
            }
        }
    }
    FinCatDoc { objects, arrows, identities, compose }
}

/// Reads a finite category and checks the category axioms.
pub fn fincat_from_doc(doc: &FinCatDoc) -> Result<FinCat> {
    let objects = index_of("category", &doc.objects)?;
    let names: Vec<String> = doc.arrows.iter().map(|a| a.name.clone()).collect();
    let arrow_index = index_of("category", &names)?;
    let arrows = doc
        .arrows
        .iter()
        .map(|a| {
            Ok(Arrow {
                name: a.name.clone(),
                src: resolve("category", &objects, &a.source)?,
                tgt: resolve("category", &objects, &a.target)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let identities = doc
        .objects
        .iter()
        .map(|o| {
            let name = doc.identities.get(o).ok_or_else(|| Error::malformed("category", format!("no identity for `{o}`")))?;
            resolve("category", &arrow_index, name)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut table = HashMap::new();
    for [g, f, h] in &doc.compose {
        let key = (resolve("category", &arrow_index, g)?, resolve("category", &arrow_index, f)?);
        if table.insert(key, resolve("category", &arrow_index, h)?).is_some() {
            return Err(Error::malformed("category", format!("composite {g} ∘ {f} given twice")));
        }
    }
    let d = FinCat::from_parts(doc.objects.clone(), arrows, identities, |g, f| table.get(&(g, f)).copied())?;
    let report = d.validate();
    if !report.is_ok() {
        return Err(Error::malformed("category", report.to_string()));
    }
    Ok(d)
}

pub fn scat_to_doc(c: &SCat) -> ScatDoc {
    let n = c.object_count();
    let objects = c.objects().to_vec();
    let mut homs = Vec::with_capacity(n * n);
    let mut comp = Vec::with_capacity(n * n * n);
    for x in 0..n {
        for y in 0..n {
            homs.push(HomDoc { source: objects[x].clone(), target: objects[y].clone(), complex: sset_to_doc(c.hom(x, y)) });
            for z in 0..n {
                let (hxy, hyz, hxz) = (c.hom(x, y), c.hom(y, z), c.hom(x, z));
                let cells = (0..=c.cap())
                    .map(|k| {
                        let mut entries = Vec::with_capacity(hxy.count(k) * hyz.count(k));
                        for g in 0..hyz.count(k) {
                            for f in 0..hxy.count(k) {
                                let gf = c.compose(x, y, z, k, g, f);
                                entries.push([hyz.name(k, g).to_string(), hxy.name(k, f).to_string(), hxz.name(k, gf).to_string()]);
                            }
                        }
                        entries
                    })
                    .collect();
                comp.push(CompDoc { source: objects[x].clone(), middle: objects[y].clone(), target: objects[z].clone(), cells });
            }
        }
    }
    let ident = (0..n).map(|x| (objects[x].clone(), c.hom(x, x).name(0, c.ident(x)).to_string())).collect();
    ScatDoc { cap: c.cap(), objects, homs, comp, ident }
}

/// Reads an enriched category and checks its axioms.
pub fn scat_from_doc(doc: &ScatDoc) -> Result<SCat> {
    let n = doc.objects.len();
    let objects = index_of("enriched category", &doc.objects)?;
    let mut homs: Vec<Option<TruncatedSSet>> = vec![None; n * n];
    for h in &doc.homs {
        let t = resolve("enriched category", &objects, &h.source)? * n + resolve("enriched category", &objects, &h.target)?;
        if homs[t].is_some() {
            return Err(Error::malformed("enriched category", format!("hom {} -> {} given twice", h.source, h.target)));
        }
        let complex = sset_from_doc(&h.complex)?;
        Error::cap_check(doc.cap, complex.cap())?;
        homs[t] = Some(complex);
    }
    let homs: Vec<TruncatedSSet> = homs
        .into_iter()
        .enumerate()
        .map(|(t, h)| h.ok_or_else(|| Error::malformed("enriched category", format!("hom {} -> {} missing", doc.objects[t / n], doc.objects[t % n]))))
        .collect::<Result<_>>()?;
    let cell_index = |h: &TruncatedSSet, k: usize, name: &str| h.find(k, name).ok_or_else(|| Error::malformed("enriched category", format!("unknown cell `{name}`")));
    let mut comp: Vec<Option<Vec<Vec<u32>>>> = vec![None; n * n * n];
    for entry in &doc.comp {
        let x = resolve("enriched category", &objects, &entry.source)?;
        let y = resolve("enriched category", &objects, &entry.middle)?;
        let z = resolve("enriched category", &objects, &entry.target)?;
        let t = (x * n + y) * n + z;
        if comp[t].is_some() {
            return Err(Error::malformed("enriched category", format!("composition {x} {y} {z} given twice")));
        }
        if entry.cells.len() != doc.cap + 1 {
            return Err(Error::malformed("enriched category", "composition table misses dimensions"));
        }
        let (hxy, hyz, hxz) = (&homs[x * n + y], &homs[y * n + z], &homs[x * n + z]);
        let mut per = Vec::with_capacity(doc.cap + 1);
        for (k, entries) in entry.cells.iter().enumerate() {
            let size = hxy.count(k) * hyz.count(k);
            let mut table = vec![None; size];
            for [g, f, gf] in entries {
                let (g, f, gf) = (cell_index(hyz, k, g)?, cell_index(hxy, k, f)?, cell_index(hxz, k, gf)?);
                if table[g * hxy.count(k) + f].replace(gf as u32).is_some() {
                    return Err(Error::malformed("enriched category", "composite given twice"));
                }
            }
            let table: Option<Vec<u32>> = table.into_iter().collect();
            per.push(table.ok_or_else(|| {
                Error::malformed(
                    "enriched category",
                    format!("composition {} {} {} in dimension {k} incomplete", entry.source, entry.middle, entry.target),
                )
            })?);
        }
        comp[t] = Some(per);
    }
    let comp: Vec<Vec<Vec<u32>>> =
        comp.into_iter().map(|t| t.ok_or_else(|| Error::malformed("enriched category", "composition table missing"))).collect::<Result<_>>()?;
    let ident = doc
        .objects
        .iter()
        .enumerate()
        .map(|(x, o)| {
            let v = doc.ident.get(o).ok_or_else(|| Error::malformed("enriched category", format!("no identity for `{o}`")))?;
            cell_index(&homs[x * n + x], 0, v)
        })
        .collect::<Result<Vec<_>>>()?;
    let c = SCat::from_tables(doc.cap, doc.objects.clone(), homs, comp, ident)?;
    let report = validate_scat(&c);
    if !report.is_ok() {
        return Err(Error::malformed("enriched category", report.to_string()));
    }
    Ok(c)
}

pub fn functor_to_doc(f: &SFunctor, source: &SCat, target: &SCat) -> FunctorDoc {
    let n = source.object_count();
    let objects = (0..n).map(|x| (source.object_name(x).to_string(), target.object_name(f.apply_object(x)).to_string())).collect();
    let mut homs = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let (from, to) = (source.hom(x, y), target.hom(f.apply_object(x), f.apply_object(y)));
            let cells = (0..=source.cap()).map(|k| (0..from.count(k)).map(|c| to.name(k, f.apply_cell(x, y, k, c)).to_string()).collect()).collect();
            homs.push(HomMapDoc { source: source.object_name(x).to_string(), target: source.object_name(y).to_string(), cells });
        }
    }
    FunctorDoc { objects, homs }
}

/// Reads a functor between known enriched categories; it is checked to be
/// defined everywhere, not to be functorial.
pub fn functor_from_doc(doc: &FunctorDoc, source: &SCat, target: &SCat) -> Result<SFunctor> {
    let n = source.object_count();
    let src_index = index_of("functor", source.objects())?;
    let tgt_index = index_of("functor", target.objects())?;
    let on_objects = source
        .objects()
        .iter()
        .map(|o| {
            let image = doc.objects.get(o).ok_or_else(|| Error::malformed("functor", format!("object `{o}` unmapped")))?;
            resolve("functor", &tgt_index, image)
        })
        .collect::<Result<Vec<_>>>()?;
    if doc.objects.len() != n {
        return Err(Error::malformed("functor", "object table names unknown objects"));
    }
    let mut on_homs: Vec<Option<SSetMap>> = vec![None; n * n];
    for h in &doc.homs {
        let (x, y) = (resolve("functor", &src_index, &h.source)?, resolve("functor", &src_index, &h.target)?);
        let (from, to) = (source.hom(x, y), target.hom(on_objects[x], on_objects[y]));
        if h.cells.len() != source.cap() + 1 {
            return Err(Error::malformed("functor", format!("hom {} -> {} misses dimensions", h.source, h.target)));
        }
        let mut assign = Vec::with_capacity(h.cells.len());
        for (k, col) in h.cells.iter().enumerate() {
            if col.len() != from.count(k) {
                return Err(Error::malformed("functor", format!("hom {} -> {} not aligned in dimension {k}", h.source, h.target)));
            }
            let images = col
                .iter()
                .map(|name| to.find(k, name).ok_or_else(|| Error::malformed("functor", format!("unknown cell `{name}`"))))
                .collect::<Result<Vec<_>>>()?;
            assign.push(images);
        }
        if on_homs[x * n + y].replace(SSetMap::new(assign)).is_some() {
            return Err(Error::malformed("functor", format!("hom {} -> {} given twice", h.source, h.target)));
        }
    }
    let on_homs = on_homs.into_iter().map(|m| m.ok_or_else(|| Error::malformed("functor", "hom table incomplete"))).collect::<Result<_>>()?;
    Ok(SFunctor { on_objects, on_homs })
}

pub fn diagram_to_doc(f: &DiagramSCat) -> DiagramDoc {
    let d = &f.base;
    let fibers = (0..d.object_count()).map(|c| (d.objects()[c].clone(), scat_to_doc(f.fiber(c)))).collect();
    let actions = d
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, info)| (info.name.clone(), functor_to_doc(f.action(a), f.fiber(info.src), f.fiber(info.tgt))))
        .collect();
    DiagramDoc { base: fincat_to_doc(d), fibers, actions }
}

/// Reads a diagram and checks functoriality.
pub fn diagram_from_doc(doc: &DiagramDoc) -> Result<DiagramSCat> {
    let base = fincat_from_doc(&doc.base)?;
    if doc.fibers.len() != base.object_count() || doc.actions.len() != base.arrows().len() {
        return Err(Error::malformed("diagram", "fiber or action table does not match the base"));
    }
    let fibers = base
        .objects()
        .iter()
        .map(|o| scat_from_doc(doc.fibers.get(o).ok_or_else(|| Error::malformed("diagram", format!("no fiber over `{o}`")))?))
        .collect::<Result<Vec<_>>>()?;
    if let Some(c) = fibers.iter().find(|c| c.cap() != fibers[0].cap()) {
        return Err(Error::CapMismatch { left: fibers[0].cap(), right: c.cap() });
    }
    let actions = base
        .arrows()
        .iter()
        .map(|a| {
            let action = doc.actions.get(&a.name).ok_or_else(|| Error::malformed("diagram", format!("no action for `{}`", a.name)))?;
            functor_from_doc(action, &fibers[a.src], &fibers[a.tgt])
        })
        .collect::<Result<Vec<_>>>()?;
    DiagramSCat::new(base, fibers, actions)
}

pub fn monoidal_to_doc(m: &MonSCat) -> MonoidalDoc {
    let c = &m.underlying;
    let square = scat_product(c, c).expect("a category is cap-compatible with itself");
    MonoidalDoc {
        category: scat_to_doc(c),
        tensor: functor_to_doc(&m.tensor, &square, c),
        unit: c.object_name(m.unit).to_string(),
    }
}

/// Reads a monoidal structure. The monoidal laws are left to
/// [`crate::monoidal::validate_monoidal`].
pub fn monoidal_from_doc(doc: &MonoidalDoc) -> Result<MonSCat> {
    let c = scat_from_doc(&doc.category)?;
    let square = scat_product(&c, &c)?;
    let tensor = functor_from_doc(&doc.tensor, &square, &c)?;
    let unit = c.find_object(&doc.unit).ok_or_else(|| Error::malformed("monoidal structure", format!("unknown unit `{}`", doc.unit)))?;
    Ok(MonSCat { underlying: c, tensor, unit })
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    serde_json::to_string_pretty(doc).expect("documents serialize")
}

pub fn from_json<T: for<'de> Deserialize<'de>>(what: &'static str, text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::malformed(what, e.to_string()))
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::corpus;
    use crate::sset::standard_simplex;

    #[test]
    fn scat_round_trips() {
        for name in corpus::SCAT_NAMES {
            let c = corpus::scat(name, 2).unwrap();
            let text = to_json(&scat_to_doc(&c));
            assert_eq!(scat_from_doc(&from_json("scat", &text).unwrap()).unwrap(), c, "{name}");
        }
    }

    #[test]
    fn category_round_trips() {
        for name in corpus::CATEGORY_NAMES {
            let d = corpus::category(name).unwrap();
            assert_eq!(fincat_from_doc(&fincat_to_doc(&d)).unwrap(), d, "{name}");
        }
    }

    #[test]
    fn diagram_round_trips() {
        for name in corpus::DIAGRAM_NAMES {
            let f = corpus::diagram(name, 1).unwrap();
            let text = to_json(&diagram_to_doc(&f));
            assert_eq!(diagram_from_doc(&from_json("diagram", &text).unwrap()).unwrap(), f, "{name}");
        }
    }

    #[test]
    fn monoidal_round_trips() {
        for name in corpus::MONOIDAL_NAMES.iter().chain(corpus::INVALID_MONOIDAL_NAMES) {
            let m = corpus::monoidal(name, 1).unwrap();
            let text = to_json(&monoidal_to_doc(&m));
            assert_eq!(monoidal_from_doc(&from_json("monoidal", &text).unwrap()).unwrap(), m, "{name}");
        }
    }

    #[test]
    fn broken_documents_are_malformed() {
        let mut doc = sset_to_doc(&standard_simplex(1, 2));
        doc.face.get_mut("1.0").unwrap()[0] = "nowhere".into();
        assert!(matches!(sset_from_doc(&doc), Err(Error::Malformed { .. })));

        let mut doc = sset_to_doc(&standard_simplex(1, 2));
        doc.face.remove("2.1");
        assert!(matches!(sset_from_doc(&doc), Err(Error::Malformed { .. })));

        // faces of a degenerate edge swapped onto distinct vertices
        let mut doc = sset_to_doc(&standard_simplex(1, 1));
        let col = doc.face.get_mut("1.0").unwrap();
        let deg = doc.cells[1].iter().position(|c| c == "00").unwrap();
        col[deg] = "1".into();
        assert!(matches!(sset_from_doc(&doc), Err(Error::Malformed { .. })));

        let mut doc = scat_to_doc(&corpus::scat("bz2", 1).unwrap());
        doc.comp[0].cells[0].pop();
        assert!(matches!(scat_from_doc(&doc), Err(Error::Malformed { .. })));

        assert!(matches!(from_json::<SSetDoc>("simplicial set", "{\"cap\": 1}"), Err(Error::Malformed { .. })));
    }

    proptest! {
        #[test]
        fn simplices_round_trip(n in 0usize..4, cap in 0usize..4) {
            let x = standard_simplex(n, cap);
            let text = to_json(&sset_to_doc(&x));
            prop_assert_eq!(sset_from_doc(&from_json("simplicial set", &text).unwrap()).unwrap(), x);
        }
    }
}
