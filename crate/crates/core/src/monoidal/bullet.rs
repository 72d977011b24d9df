use std::collections::HashMap;

use rayon::prelude::*;

use super::delta::DeltaOp;
use super::structure::{apply_cf, apply_cf_cells, tuple_factors, validate_monoidal, MonSCat};
use crate::error::{Error, Result};
use crate::grothendieck::DiagramSCat;
use crate::report::ValidationReport;
use crate::scat::{scat_power, ObjId, SCat, SFunctor};
use crate::simplex;
use crate::sset::{product_index, product_parts, CellId, SSetMap};

/// Tuple of `C`-objects behind an object of `C^n`.
pub(crate) fn decode_tuple(objects: usize, n: usize, mut idx: ObjId) -> Vec<ObjId> {
    let mut out = vec![0; n];
    for slot in out.iter_mut().rev() {
        *slot = idx % objects;
        idx /= objects;
    }
    out
}

pub(crate) fn encode_tuple(objects: usize, xs: &[ObjId]) -> ObjId {
    xs.iter().fold(0, |acc, &x| acc * objects + x)
}

/// A functor `C^n -> C^m` given coordinatewise on objects and on the
/// tuples of `k`-cells `(x_j, y_j, φ_j)` of a hom.
fn tuple_functor<O, H>(c: &SCat, n: usize, m: usize, objects: O, cells: H) -> Result<SFunctor>
where
    O: Fn(&[ObjId]) -> Result<Vec<ObjId>> + Sync,
    H: Fn(usize, &[(ObjId, ObjId, CellId)]) -> Result<Vec<CellId>> + Sync,
{
    let count = c.object_count();
    let size = count.pow(n as u32);
    let tuples: Vec<Vec<ObjId>> = (0..size).map(|o| decode_tuple(count, n, o)).collect();
    let images: Vec<Vec<ObjId>> = tuples.iter().map(|t| objects(t)).collect::<Result<_>>()?;
    if images.iter().any(|t| t.len() != m) {
        return Err(Error::malformed("tuple functor", format!("image level differs from {m}")));
    }
    let on_homs: Vec<Result<SSetMap>> = (0..size * size)
        .into_par_iter()
        .map(|t| {
            let (xs, ys) = (&tuples[t / size], &tuples[t % size]);
            let source = tuple_factors(c, xs, ys);
            let target = tuple_factors(c, &images[t / size], &images[t % size]);
            let assign = (0..=c.cap())
                .map(|k| {
                    let total: usize = source.iter().map(|h| h.count(k)).product();
                    (0..total)
                        .map(|cell| {
                            let parts = product_parts(&source, k, cell);
                            let triples: Vec<(ObjId, ObjId, CellId)> =
                                xs.iter().zip(ys).zip(parts).map(|((&x, &y), p)| (x, y, p)).collect();
                            Ok(product_index(&target, k, &cells(k, &triples)?))
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(SSetMap::new(assign))
        })
        .collect();
    Ok(SFunctor {
        on_objects: images.iter().map(|t| encode_tuple(count, t)).collect(),
        on_homs: on_homs.into_iter().collect::<Result<_>>()?,
    })
}

/// `C^f : C^n -> C^m` for `f : [m] -> [n]` from the closed formula.
pub fn cf_functor(c: &MonSCat, f: &[usize], n: usize) -> Result<SFunctor> {
    tuple_functor(&c.underlying, n, f.len() - 1, |xs| apply_cf(c, f, n, xs), |k, cells| apply_cf_cells(c, f, n, k, cells))
}

/// `C^{δ_i} : C^n -> C^{n-1}`: `μ` on coordinates `i, i+1` for `0 < i < n`,
/// and the first or last coordinate dropped at the ends.
pub fn face_functor(c: &MonSCat, n: usize, i: usize) -> Result<SFunctor> {
    if n == 0 || i > n {
        return Err(Error::malformed("face", format!("δ_{i} out of [{n}]")));
    }
    let u = &c.underlying;
    tuple_functor(
        u,
        n,
        n - 1,
        |xs| {
            Ok(match i {
                0 => xs[1..].to_vec(),
                _ if i == n => xs[..n - 1].to_vec(),
                _ => {
                    let mut v = xs[..i - 1].to_vec();
                    v.push(c.tensor_objects(xs[i - 1], xs[i]));
                    v.extend_from_slice(&xs[i + 1..]);
                    v
                }
            })
        },
        |k, cells| {
            let ids: Vec<CellId> = cells.iter().map(|t| t.2).collect();
            Ok(match i {
                0 => ids[1..].to_vec(),
                _ if i == n => ids[..n - 1].to_vec(),
                _ => {
                    let ((x, y, a), (x2, y2, b)) = (cells[i - 1], cells[i]);
                    let mut v = ids[..i - 1].to_vec();
                    v.push(c.tensor_cells(x, y, x2, y2, k, a, b));
                    v.extend_from_slice(&ids[i + 1..]);
                    v
                }
            })
        },
    )
}

/// `C^{σ_i} : C^n -> C^{n+1}` for `σ_i : [n+1] -> [n]`: the unit inserted
/// as coordinate `i` (counting from zero).
pub fn degeneracy_functor(c: &MonSCat, n: usize, i: usize) -> Result<SFunctor> {
    if i > n {
        return Err(Error::malformed("degeneracy", format!("σ_{i} out of [{n}]")));
    }
    let u = &c.underlying;
    tuple_functor(
        u,
        n,
        n + 1,
        |xs| {
            let mut v = xs.to_vec();
            v.insert(i, c.unit);
            Ok(v)
        },
        |k, cells| {
            let mut v: Vec<CellId> = cells.iter().map(|t| t.2).collect();
            v.insert(i, u.identity_at(c.unit, k));
            Ok(v)
        },
    )
}

/// A generator of `Δ` acting on `C^•`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    /// `δ_i : [n-1] -> [n]`.
    Face { n: usize, i: usize },
    /// `σ_i : [n+1] -> [n]`.
    Degeneracy { n: usize, i: usize },
}

impl Generator {
    pub fn map(self) -> Vec<usize> {
        match self {
            Generator::Face { n, i } => simplex::coface(n, i),
            Generator::Degeneracy { n, i } => simplex::codegeneracy(n, i),
        }
    }

    /// Codomain of the map, the level the functor starts from.
    pub fn codomain(self) -> usize {
        match self {
            Generator::Face { n, .. } | Generator::Degeneracy { n, .. } => n,
        }
    }

    pub fn functor(self, c: &MonSCat) -> Result<SFunctor> {
        match self {
            Generator::Face { n, i } => face_functor(c, n, i),
            Generator::Degeneracy { n, i } => degeneracy_functor(c, n, i),
        }
    }
}

/// A word `f = g_1 ∘ ... ∘ g_r` in generators; `C^f` applies `g_1` first.
/// Faces are peeled off at the largest missing value, then degeneracies at
/// the first repeat, so the empty word is returned only for identities.
pub fn generator_word(f: &[usize], n: usize) -> Vec<Generator> {
    let mut word = Vec::new();
    let mut f = f.to_vec();
    let mut n = n;
    loop {
        let fact = simplex::factorise(&f, n);
        if let Some(&i) = fact.missing.last() {
            word.push(Generator::Face { n, i });
            f = f.iter().map(|&v| if v > i { v - 1 } else { v }).collect();
            n -= 1;
        } else if let Some(&j) = fact.repeats.first() {
            // f = f'' ∘ σ_j with σ_j : [m] -> [m-1]; the outer part acts first
            let m = f.len() - 1;
            let outer: Vec<usize> = (0..m).map(|t| if t <= j { f[t] } else { f[t + 1] }).collect();
            let mut rest = generator_word(&outer, n);
            rest.push(Generator::Degeneracy { n: m - 1, i: j });
            word.extend(rest);
            return word;
        } else {
            return word;
        }
    }
}

/// Map of a word, read as a composite in `Δ`.
pub fn word_map(word: &[Generator], n: usize) -> Vec<usize> {
    word.iter().fold(simplex::identity(n), |acc, g| simplex::compose(&acc, &g.map()))
}

fn word_functor(c: &MonSCat, word: &[Generator], n: usize) -> Result<SFunctor> {
    let mut out = SFunctor::identity(&scat_power(&c.underlying, n));
    for g in word {
        out = out.then(&g.functor(c)?);
    }
    Ok(out)
}

fn generators(bound: usize) -> Vec<Generator> {
    let mut out = Vec::new();
    for n in 0..=bound {
        if n >= 1 {
            out.extend((0..=n).map(|i| Generator::Face { n, i }));
        }
        if n < bound {
            out.extend((0..=n).map(|i| Generator::Degeneracy { n, i }));
        }
    }
    out
}

fn domain(g: Generator) -> usize {
    g.map().len() - 1
}

/// The simplicial identities as functor equalities: every pair of
/// composable generator words of length two with the same composite in `Δ`
/// acts by the same functor, and words composing to an identity act
/// trivially.
pub fn check_simplicial_identities(c: &MonSCat, bound: usize) -> Result<ValidationReport> {
    let gens = generators(bound);
    let mut cache: HashMap<Generator, SFunctor> = HashMap::new();
    for &g in &gens {
        cache.insert(g, g.functor(c)?);
    }
    let mut groups: HashMap<(usize, Vec<usize>), Vec<(Generator, Generator, SFunctor)>> = HashMap::new();
    for &a in &gens {
        for &b in &gens {
            // a acts first: its map is the outer factor of a ∘ b in Δ
            if domain(a) == b.codomain() {
                let composite = simplex::compose(&a.map(), &b.map());
                groups.entry((a.codomain(), composite)).or_default().push((a, b, cache[&a].then(&cache[&b])));
            }
        }
    }
    let mut keys: Vec<_> = groups.keys().cloned().collect();
    keys.sort();
    let mut report = ValidationReport::new();
    for key in keys {
        let group = &groups[&key];
        let (n, map) = &key;
        if *map == simplex::identity(*n) {
            let id = SFunctor::identity(&scat_power(&c.underlying, *n));
            for (a, b, f) in group {
                if *f != id {
                    report.push("simplicial identity", format!("{a:?} then {b:?} is not the identity"));
                }
            }
        }
        let (a0, b0, f0) = &group[0];
        for (a, b, f) in &group[1..] {
            if f != f0 {
                report.push("simplicial identity", format!("{a0:?} then {b0:?} differs from {a:?} then {b:?}"));
            }
        }
    }
    Ok(report)
}

/// `C^f` from its generator word against the closed formula, for every
/// monotone map between levels `≤ bound`.
pub fn check_generator_decomposition(c: &MonSCat, bound: usize) -> Result<ValidationReport> {
    let mut report = ValidationReport::new();
    for n in 0..=bound {
        for m in 0..=bound {
            for f in simplex::monotone_maps(m, n) {
                let word = generator_word(&f, n);
                if word_map(&word, n) != f {
                    report.push("generator word composes to the map", format!("{f:?} into [{n}]"));
                    continue;
                }
                if word_functor(c, &word, n)? != cf_functor(c, &f, n)? {
                    report.push("generator decomposition matches the closed formula", format!("{f:?} into [{n}]"));
                }
            }
        }
    }
    Ok(report)
}

/// `C^• : Δ^op_{≤M} -> sCat`, `[n] ↦ C^n`, acting by `C^f`.
pub fn c_simplicial_object(c: &MonSCat, bound: usize) -> Result<DiagramSCat> {
    if bound < 1 {
        return Err(Error::malformed("level bound", "need M ≥ 1"));
    }
    let report = validate_monoidal(c);
    if !report.is_ok() {
        return Err(Error::InvalidMonoidal(report.to_string()));
    }
    let mut report = check_simplicial_identities(c, bound)?;
    report.violations.extend(check_generator_decomposition(c, bound)?.violations);
    if !report.is_ok() {
        return Err(Error::InvalidMonoidal(report.to_string()));
    }
    let delta = DeltaOp::new(bound)?;
    simplicial_object_over(c, &delta)
}

pub(crate) fn simplicial_object_over(c: &MonSCat, delta: &DeltaOp) -> Result<DiagramSCat> {
    let fibers: Vec<SCat> = (0..=delta.bound).map(|n| scat_power(&c.underlying, n)).collect();
    let actions: Vec<SFunctor> = (0..delta.maps.len())
        .into_par_iter()
        .map(|a| cf_functor(c, delta.map(a), delta.source(a)))
        .collect::<Result<_>>()?;
    DiagramSCat::new(delta.category.clone(), fibers, actions)
}
