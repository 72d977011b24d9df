use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::report::ValidationReport;
use crate::scat::{opposite_scat, scat_product, validate_sfunctor, ObjId, SCat, SFunctor};
use crate::simplex;
use crate::sset::{product_index, product_parts, CellId, SSetMap, TruncatedSSet};

/// A strict monoidal enriched category: a monoid in `(sCat, ×, ∗)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonSCat {
    pub underlying: SCat,
    /// `μ : C × C -> C`, on the product in [`scat_product`] layout.
    pub tensor: SFunctor,
    pub unit: ObjId,
}

/// A finite sequence `[x_1, ..., x_n]` of objects; its level is its length.
pub type SeqObject = Vec<ObjId>;

impl MonSCat {
    /// Tabulates `μ` from a rule on objects and on pairs of `k`-cells
    /// `a ∈ C(x, y)`, `b ∈ C(x', y')`, called as `cells(x, y, x', y', k, a, b)`.
    /// The laws are the job of [`validate_monoidal`].
    pub fn from_rule<O, T>(underlying: SCat, unit: ObjId, objects: O, cells: T) -> Result<Self>
    where
        O: Fn(ObjId, ObjId) -> ObjId,
        T: Fn(ObjId, ObjId, ObjId, ObjId, usize, CellId, CellId) -> CellId + Sync,
    {
        let n = underlying.object_count();
        let cap = underlying.cap();
        if unit >= n {
            return Err(Error::malformed("monoidal structure", "unit is not an object"));
        }
        let on_objects: Vec<ObjId> = (0..n * n).map(|p| objects(p / n, p % n)).collect();
        if on_objects.iter().any(|&o| o >= n) {
            return Err(Error::malformed("monoidal structure", "tensor of objects is not an object"));
        }
        let c = &underlying;
        let on_homs: Vec<Result<SSetMap>> = (0..n * n * n * n)
            .into_par_iter()
            .map(|t| {
                let (p, q) = (t / (n * n), t % (n * n));
                let (x, x2, y, y2) = (p / n, p % n, q / n, q % n);
                let factors = [c.hom(x, y), c.hom(x2, y2)];
                let target = c.hom(on_objects[p], on_objects[q]);
                let assign = (0..=cap)
                    .map(|k| {
                        let total = factors[0].count(k) * factors[1].count(k);
                        (0..total)
                            .map(|cell| {
                                let ab = product_parts(&factors, k, cell);
                                let image = cells(x, y, x2, y2, k, ab[0], ab[1]);
                                if image < target.count(k) {
                                    Ok(image)
                                } else {
                                    Err(Error::malformed("monoidal structure", format!("tensor of {k}-cells out of range")))
                                }
                            })
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(SSetMap::new(assign))
            })
            .collect();
        let tensor = SFunctor { on_objects, on_homs: on_homs.into_iter().collect::<Result<_>>()? };
        Ok(Self { underlying, tensor, unit })
    }

    pub fn cap(&self) -> usize {
        self.underlying.cap()
    }

    pub fn object_count(&self) -> usize {
        self.underlying.object_count()
    }

    pub fn tensor_objects(&self, x: ObjId, y: ObjId) -> ObjId {
        self.tensor.apply_object(x * self.object_count() + y)
    }

    /// `a ⊗ b ∈ C(x ⊗ x', y ⊗ y')_k` for `a ∈ C(x, y)_k`, `b ∈ C(x', y')_k`.
    pub fn tensor_cells(&self, x: ObjId, y: ObjId, x2: ObjId, y2: ObjId, k: usize, a: CellId, b: CellId) -> CellId {
        let n = self.object_count();
        let c = &self.underlying;
        let cell = product_index(&[c.hom(x, y), c.hom(x2, y2)], k, &[a, b]);
        self.tensor.apply_cell(x * n + x2, y * n + y2, k, cell)
    }

    /// `x_1 ⊗ ... ⊗ x_n`, the unit when empty.
    pub fn tensor_many(&self, xs: &[ObjId]) -> ObjId {
        xs.iter().fold(self.unit, |acc, &x| self.tensor_objects(acc, x))
    }

    /// `φ_1 ⊗ ... ⊗ φ_n` for `φ_i ∈ C(x_i, y_i)_k` given as `(x_i, y_i, φ_i)`;
    /// the identity of the unit when empty.
    pub fn tensor_many_cells(&self, k: usize, cells: &[(ObjId, ObjId, CellId)]) -> CellId {
        let start = (self.unit, self.unit, self.underlying.identity_at(self.unit, k));
        cells
            .iter()
            .fold(start, |(x, y, acc), &(x2, y2, b)| {
                (self.tensor_objects(x, x2), self.tensor_objects(y, y2), self.tensor_cells(x, y, x2, y2, k, acc, b))
            })
            .2
    }
}

/// Strict associativity and unit laws as data equalities, on objects and on
/// hom cells, plus `μ` being an enriched functor (the interchange law).
pub fn validate_monoidal(c: &MonSCat) -> ValidationReport {
    let mut report = ValidationReport::new();
    let u = &c.underlying;
    let n = u.object_count();
    let cap = u.cap();
    if c.unit >= n || c.tensor.on_objects.len() != n * n {
        report.push("tensor covers C × C", "unit or object table misshapen");
        return report;
    }
    let product = match scat_product(u, u) {
        Ok(p) => p,
        Err(e) => {
            report.push("tensor covers C × C", e.to_string());
            return report;
        }
    };
    report.extend_prefixed("tensor is an enriched functor (interchange)", validate_sfunctor(&c.tensor, &product, u));
    if !report.is_ok() {
        return report;
    }
    let name = |x: ObjId| u.object_name(x);
    for x in 0..n {
        if c.tensor_objects(c.unit, x) != x || c.tensor_objects(x, c.unit) != x {
            report.push("unit law on objects", name(x).to_string());
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if c.tensor_objects(c.tensor_objects(x, y), z) != c.tensor_objects(x, c.tensor_objects(y, z)) {
                    report.push("associativity on objects", format!("({}, {}, {})", name(x), name(y), name(z)));
                }
            }
        }
    }
    if !report.is_ok() {
        return report;
    }
    for x in 0..n {
        for y in 0..n {
            let h = u.hom(x, y);
            for k in 0..=cap {
                let id = u.identity_at(c.unit, k);
                if let Some(a) = (0..h.count(k))
                    .find(|&a| c.tensor_cells(c.unit, c.unit, x, y, k, id, a) != a || c.tensor_cells(x, y, c.unit, c.unit, k, a, id) != a)
                {
                    report.push("unit law on cells", format!("hom({}, {}) {k}-cell {}", name(x), name(y), h.name(k, a)));
                }
            }
        }
    }
    let pairs: Vec<(ObjId, ObjId)> = (0..n * n).map(|p| (p / n, p % n)).collect();
    let per: Vec<Option<String>> = (0..pairs.len().pow(3))
        .into_par_iter()
        .map(|t| {
            let m = pairs.len();
            let ((x1, y1), (x2, y2), (x3, y3)) = (pairs[t / (m * m)], pairs[(t / m) % m], pairs[t % m]);
            let (x12, y12) = (c.tensor_objects(x1, x2), c.tensor_objects(y1, y2));
            let (x23, y23) = (c.tensor_objects(x2, x3), c.tensor_objects(y2, y3));
            for k in 0..=cap {
                for a in 0..u.hom(x1, y1).count(k) {
                    for b in 0..u.hom(x2, y2).count(k) {
                        let ab = c.tensor_cells(x1, y1, x2, y2, k, a, b);
                        for d in 0..u.hom(x3, y3).count(k) {
                            let left = c.tensor_cells(x12, y12, x3, y3, k, ab, d);
                            let right = c.tensor_cells(x1, y1, x23, y23, k, a, c.tensor_cells(x2, y2, x3, y3, k, b, d));
                            if left != right {
                                return Some(format!(
                                    "{k}-cells ({}, {}, {})",
                                    u.hom(x1, y1).name(k, a),
                                    u.hom(x2, y2).name(k, b),
                                    u.hom(x3, y3).name(k, d)
                                ));
                            }
                        }
                    }
                }
            }
            None
        })
        .collect();
    if let Some(w) = per.into_iter().flatten().next() {
        report.push("associativity on cells", w);
    }
    report
}

fn check_map(f: &[usize], target: usize, xs_len: usize) -> Result<()> {
    if f.is_empty() || !simplex::is_monotone(f, target) {
        return Err(Error::malformed("monotone map", format!("{f:?} into [{target}]")));
    }
    if xs_len != target {
        return Err(Error::LevelMismatch { expected: target, found: xs_len });
    }
    Ok(())
}

/// `C^f` on objects for `f : [m] -> [target]`:
/// `y_i = x_{f(i-1)+1} ⊗ ... ⊗ x_{f(i)}`, the unit when `f(i-1) = f(i)`.
pub fn apply_cf(c: &MonSCat, f: &[usize], target: usize, xs: &[ObjId]) -> Result<SeqObject> {
    check_map(f, target, xs.len())?;
    Ok(f.windows(2).map(|w| c.tensor_many(&xs[w[0]..w[1]])).collect())
}

/// `C^f` on `k`-cells: `ψ_i = φ_{f(i-1)+1} ⊗ ... ⊗ φ_{f(i)}`, each `φ_j`
/// given as `(x_j, y_j, cell)`.
pub fn apply_cf_cells(c: &MonSCat, f: &[usize], target: usize, k: usize, cells: &[(ObjId, ObjId, CellId)]) -> Result<Vec<CellId>> {
    check_map(f, target, cells.len())?;
    if k > c.cap() {
        return Err(Error::BeyondCap { requested: k, cap: c.cap() });
    }
    Ok(f.windows(2).map(|w| c.tensor_many_cells(k, &cells[w[0]..w[1]])).collect())
}

/// `C^op` with the transposed tensor; objects and unit unchanged.
pub fn opposite_monoidal(c: &MonSCat) -> MonSCat {
    MonSCat { underlying: opposite_scat(&c.underlying), tensor: c.tensor.opposite(), unit: c.unit }
}

/// Hom complexes of `C^n` between two tuples, as product factors.
pub(crate) fn tuple_factors<'a>(c: &'a SCat, xs: &[ObjId], ys: &[ObjId]) -> Vec<&'a TruncatedSSet> {
    xs.iter().zip(ys).map(|(&x, &y)| c.hom(x, y)).collect()
}
