use std::collections::HashMap;

use super::{from_model, CellId, SSetMap, TruncatedSSet};
use crate::error::{Error, Result};
use crate::simplex;

fn simplex_name(map: &[usize]) -> String {
    if map.iter().all(|&v| v < 10) {
        map.iter().map(|v| v.to_string()).collect()
    } else {
        map.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// `Δ^n` truncated at `cap`: `k`-cells are monotone maps `[k] -> [n]`.
pub fn standard_simplex(n: usize, cap: usize) -> TruncatedSSet {
    let cells = (0..=cap).map(|k| simplex::monotone_maps(k, n)).collect();
    from_model(
        cap,
        cells,
        |_, c| simplex_name(c),
        |k, i, c| simplex::compose(c, &simplex::coface(k, i)),
        |k, i, c| simplex::compose(c, &simplex::codegeneracy(k, i)),
    )
    .expect("monotone maps are closed under cofaces and codegeneracies")
    .0
}

/// The union `Λ^n_k ⊆ Δ^n` of all faces except the `k`-th.
pub fn horn_complex(n: usize, k: usize, cap: usize) -> Result<TruncatedSSet> {
    if n == 0 || k > n {
        return Err(Error::malformed("horn", format!("Λ^{n}_{k} does not exist")));
    }
    let in_horn = |c: &Vec<usize>| (0..=n).any(|j| j != k && !c.contains(&j));
    let cells = (0..=cap).map(|d| simplex::monotone_maps(d, n).into_iter().filter(in_horn).collect()).collect();
    Ok(from_model(
        cap,
        cells,
        |_, c| simplex_name(c),
        |d, i, c| simplex::compose(c, &simplex::coface(d, i)),
        |d, i, c| simplex::compose(c, &simplex::codegeneracy(d, i)),
    )?
    .0)
}

/// A discrete simplicial set: the given points in every dimension, all
/// structure maps identities.
pub fn discrete(points: &[String], cap: usize) -> TruncatedSSet {
    let len = points.len();
    let names = vec![points.to_vec(); cap + 1];
    let face = (0..=cap).map(|k| if k == 0 { Vec::new() } else { vec![(0..len).collect(); k + 1] }).collect();
    let degen = (0..=cap).map(|k| if k < cap { vec![(0..len).collect(); k + 1] } else { Vec::new() }).collect();
    TruncatedSSet::from_tables(cap, names, face, degen).expect("discrete tables are well formed")
}

pub fn point(cap: usize) -> TruncatedSSet {
    discrete(&["*".to_string()], cap)
}

/// Coproduct; cell names are prefixed by the summand index.
pub fn disjoint_union(parts: &[&TruncatedSSet]) -> Result<TruncatedSSet> {
    let cap = match parts.first() {
        Some(p) => p.cap(),
        None => return Err(Error::malformed("coproduct", "no summands")),
    };
    let labelled: Vec<(String, &TruncatedSSet)> = parts.iter().enumerate().map(|(i, p)| (i.to_string(), *p)).collect();
    labelled_coproduct(cap, &labelled)
}

/// Coproduct with cell names `label:name`; summands are laid out in order
/// in every dimension.
pub fn labelled_coproduct(cap: usize, parts: &[(String, &TruncatedSSet)]) -> Result<TruncatedSSet> {
    for (_, p) in parts {
        Error::cap_check(cap, p.cap())?;
    }
    let mut names = vec![Vec::new(); cap + 1];
    let mut face: Vec<Vec<Vec<CellId>>> = (0..=cap).map(|k| vec![Vec::new(); if k == 0 { 0 } else { k + 1 }]).collect();
    let mut degen: Vec<Vec<Vec<CellId>>> = (0..=cap).map(|k| vec![Vec::new(); if k < cap { k + 1 } else { 0 }]).collect();
    let mut offsets = vec![0usize; cap + 1];
    for (label, p) in parts {
        for k in 0..=cap {
            names[k].extend(p.names(k).iter().map(|n| format!("{label}:{n}")));
            if k > 0 {
                for i in 0..=k {
                    face[k][i].extend(p.face_table(k, i).iter().map(|&y| y + offsets[k - 1]));
                }
            }
            if k < cap {
                for i in 0..=k {
                    degen[k][i].extend(p.degen_table(k, i).iter().map(|&y| y + offsets[k + 1]));
                }
            }
        }
        for k in 0..=cap {
            offsets[k] += p.count(k);
        }
    }
    TruncatedSSet::from_tables(cap, names, face, degen)
}

/// Reverses the order of every simplex: `d_i ↦ d_{k-i}`, `s_i ↦ s_{k-i}`.
pub fn opposite_sset(x: &TruncatedSSet) -> TruncatedSSet {
    let cap = x.cap();
    let names = (0..=cap).map(|k| x.names(k).to_vec()).collect();
    let face = (0..=cap)
        .map(|k| if k == 0 { Vec::new() } else { (0..=k).map(|i| x.face_table(k, k - i).to_vec()).collect() })
        .collect();
    let degen = (0..=cap)
        .map(|k| if k < cap { (0..=k).map(|i| x.degen_table(k, k - i).to_vec()).collect() } else { Vec::new() })
        .collect();
    TruncatedSSet::from_tables(cap, names, face, degen).expect("reindexing preserves shapes")
}

/// `X × Y`, the pair `(a, b)` of `k`-cells stored at `a * |Y_k| + b`.
pub fn binary_product(x: &TruncatedSSet, y: &TruncatedSSet) -> Result<TruncatedSSet> {
    product_many(&[x, y])
}

/// Iterated product in mixed radix, leftmost factor most significant.
/// The empty product is the point.
pub fn product_many(factors: &[&TruncatedSSet]) -> Result<TruncatedSSet> {
    let Some(first) = factors.first() else {
        return Err(Error::malformed("product", "use an explicit cap for the empty product"));
    };
    let cap = first.cap();
    for f in factors {
        Error::cap_check(cap, f.cap())?;
    }
    Ok(product_with_cap(factors, cap))
}

pub(crate) fn product_with_cap(factors: &[&TruncatedSSet], cap: usize) -> TruncatedSSet {
    if factors.is_empty() {
        return discrete(&["()".to_string()], cap);
    }
    if factors.len() == 1 {
        return factors[0].clone();
    }
    let sizes: Vec<Vec<usize>> = (0..=cap).map(|k| factors.iter().map(|f| f.count(k)).collect()).collect();
    let decode = |k: usize, mut idx: usize| -> Vec<usize> {
        let mut out = vec![0; factors.len()];
        for (slot, &n) in out.iter_mut().zip(&sizes[k]).rev() {
            *slot = idx % n;
            idx /= n;
        }
        out
    };
    let encode = |k: usize, parts: &[usize]| parts.iter().zip(&sizes[k]).fold(0, |acc, (&p, &n)| acc * n + p);
    let total = |k: usize| sizes[k].iter().product::<usize>();
    let names = (0..=cap)
        .map(|k| {
            (0..total(k))
                .map(|idx| {
                    let parts = decode(k, idx);
                    let inner: Vec<&str> = parts.iter().zip(factors).map(|(&p, f)| f.name(k, p)).collect();
                    format!("({})", inner.join(","))
                })
                .collect()
        })
        .collect();
    let face = (0..=cap)
        .map(|k| {
            if k == 0 {
                return Vec::new();
            }
            (0..=k)
                .map(|i| {
                    (0..total(k))
                        .map(|idx| {
                            let parts: Vec<usize> =
                                decode(k, idx).iter().zip(factors).map(|(&p, f)| f.face(k, i, p)).collect();
                            encode(k - 1, &parts)
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let degen = (0..=cap)
        .map(|k| {
            if k == cap {
                return Vec::new();
            }
            (0..=k)
                .map(|i| {
                    (0..total(k))
                        .map(|idx| {
                            let parts: Vec<usize> =
                                decode(k, idx).iter().zip(factors).map(|(&p, f)| f.degen(k, i, p)).collect();
                            encode(k + 1, &parts)
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    TruncatedSSet::from_tables(cap, names, face, degen).expect("product tables are well formed")
}

/// Index of a tuple of cells in [`product_many`] output.
pub(crate) fn product_index(factors: &[&TruncatedSSet], k: usize, parts: &[CellId]) -> CellId {
    parts.iter().zip(factors).fold(0, |acc, (&p, f)| acc * f.count(k) + p)
}

/// Decomposition of a [`product_many`] cell into its components.
pub(crate) fn product_parts(factors: &[&TruncatedSSet], k: usize, mut idx: CellId) -> Vec<CellId> {
    let mut out = vec![0; factors.len()];
    for (slot, f) in out.iter_mut().zip(factors).rev() {
        *slot = idx % f.count(k);
        idx /= f.count(k);
    }
    out
}

/// `X ×_Z Y` with its two projections.
#[derive(Clone, Debug)]
pub struct Pullback {
    pub sset: TruncatedSSet,
    pub proj1: SSetMap,
    pub proj2: SSetMap,
}

pub fn pullback(
    f: &SSetMap,
    x: &TruncatedSSet,
    g: &SSetMap,
    y: &TruncatedSSet,
    z: &TruncatedSSet,
) -> Result<Pullback> {
    let cap = z.cap();
    Error::cap_check(cap, x.cap())?;
    Error::cap_check(cap, y.cap())?;
    if f.cap() != cap || g.cap() != cap {
        return Err(Error::TargetMismatch);
    }
    for k in 0..=cap {
        if f.assign[k].iter().chain(&g.assign[k]).any(|&c| c >= z.count(k)) {
            return Err(Error::TargetMismatch);
        }
    }
    let cells: Vec<Vec<(CellId, CellId)>> = (0..=cap)
        .map(|k| {
            let mut by_value: HashMap<CellId, Vec<CellId>> = HashMap::new();
            for b in 0..y.count(k) {
                by_value.entry(g.apply(k, b)).or_default().push(b);
            }
            let mut out = Vec::new();
            for a in 0..x.count(k) {
                if let Some(bs) = by_value.get(&f.apply(k, a)) {
                    out.extend(bs.iter().map(|&b| (a, b)));
                }
            }
            out
        })
        .collect();
    let (sset, index) = from_model(
        cap,
        cells,
        |k, &(a, b)| format!("({},{})", x.name(k, a), y.name(k, b)),
        |k, i, &(a, b)| (x.face(k, i, a), y.face(k, i, b)),
        |k, i, &(a, b)| (x.degen(k, i, a), y.degen(k, i, b)),
    )?;
    let proj1 = SSetMap::new((0..=cap).map(|k| index.cells(k).iter().map(|p| p.0).collect()).collect());
    let proj2 = SSetMap::new((0..=cap).map(|k| index.cells(k).iter().map(|p| p.1).collect()).collect());
    Ok(Pullback { sset, proj1, proj2 })
}

/// The fiber `X_v` of `p : X -> S` over a vertex: cells sent to the
/// degenerate simplex on `v`. Returns it with its inclusion into `X`.
pub fn fiber(x: &TruncatedSSet, p: &SSetMap, s: &TruncatedSSet, vertex: CellId) -> Result<(TruncatedSSet, SSetMap)> {
    let cap = x.cap();
    Error::cap_check(cap, s.cap())?;
    if vertex >= s.count(0) || p.cap() != cap {
        return Err(Error::TargetMismatch);
    }
    let cells: Vec<Vec<CellId>> =
        (0..=cap).map(|k| (0..x.count(k)).filter(|&c| p.apply(k, c) == s.degenerate_vertex(vertex, k)).collect()).collect();
    let (sset, index) = from_model(
        cap,
        cells,
        |k, &c| x.name(k, c).to_string(),
        |k, i, &c| x.face(k, i, c),
        |k, i, &c| x.degen(k, i, c),
    )?;
    let inclusion = SSetMap::new((0..=cap).map(|k| index.cells(k).to_vec()).collect());
    Ok((sset, inclusion))
}
