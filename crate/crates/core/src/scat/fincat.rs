use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::ValidationReport;

pub type ObjId = usize;
pub type ArrowId = usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub src: ObjId,
    pub tgt: ObjId,
}

/// A finite category given by explicit tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinCat {
    objects: Vec<String>,
    arrows: Vec<Arrow>,
    identities: Vec<ArrowId>,
    /// `compose[g * arrows + f] = g ∘ f`, defined when `tgt f = src g`.
    compose: Vec<Option<ArrowId>>,
    homs: Vec<Vec<ArrowId>>,
}

impl FinCat {
    /// Assembles a category from tables. `composite(g, f)` is consulted
    /// only for composable pairs. Axioms are checked by [`FinCat::validate`].
    pub fn from_parts(
        objects: Vec<String>,
        arrows: Vec<Arrow>,
        identities: Vec<ArrowId>,
        composite: impl Fn(ArrowId, ArrowId) -> Option<ArrowId>,
    ) -> Result<Self> {
        if identities.len() != objects.len() {
            return Err(Error::malformed("category", "one identity per object required"));
        }
        let n = objects.len();
        if let Some(a) = arrows.iter().find(|a| a.src >= n || a.tgt >= n) {
            return Err(Error::malformed("category", format!("arrow `{}` has an unknown endpoint", a.name)));
        }
        if identities.iter().any(|&i| i >= arrows.len()) {
            return Err(Error::malformed("category", "identity is not an arrow"));
        }
        let count = arrows.len();
        let mut compose = vec![None; count * count];
        for g in 0..count {
            for f in 0..count {
                if arrows[f].tgt == arrows[g].src {
                    match composite(g, f) {
                        Some(h) if h < count => compose[g * count + f] = Some(h),
                        Some(h) => return Err(Error::malformed("category", format!("composite index {h} out of range"))),
                        None => {
                            return Err(Error::malformed(
                                "category",
                                format!("missing composite {} ∘ {}", arrows[g].name, arrows[f].name),
                            ))
                        }
                    }
                }
            }
        }
        let mut homs = vec![Vec::new(); n * n];
        for (i, a) in arrows.iter().enumerate() {
            homs[a.src * n + a.tgt].push(i);
        }
        Ok(Self { objects, arrows, identities, compose, homs })
    }

    pub fn terminal() -> Self {
        Self::poset(&["•"], |_, _| true)
    }

    /// `[1] = {0 -> 1}`.
    pub fn arrow() -> Self {
        Self::poset(&["0", "1"], |a, b| a <= b)
    }

    /// The ordinal `[n]`.
    pub fn ordinal(n: usize) -> Self {
        let names: Vec<String> = (0..=n).map(|i| i.to_string()).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        Self::poset(&refs, |a, b| a <= b)
    }

    /// `[1] × [1]`, objects `00, 10, 01, 11`.
    pub fn commutative_square() -> Self {
        let coords = [(0, 0), (1, 0), (0, 1), (1, 1)];
        Self::poset(&["00", "10", "01", "11"], |a, b| coords[a].0 <= coords[b].0 && coords[a].1 <= coords[b].1)
    }

    /// Poset on the named objects; arrows are named `"a<b"`, identities `"id_a"`.
    pub fn poset(objects: &[&str], le: impl Fn(usize, usize) -> bool) -> Self {
        let n = objects.len();
        let mut arrows = Vec::new();
        let mut index = vec![None; n * n];
        for a in 0..n {
            for b in 0..n {
                if le(a, b) {
                    let name = if a == b { format!("id_{}", objects[a]) } else { format!("{}<{}", objects[a], objects[b]) };
                    index[a * n + b] = Some(arrows.len());
                    arrows.push(Arrow { name, src: a, tgt: b });
                }
            }
        }
        let identities = (0..n).map(|a| index[a * n + a].expect("poset relation is reflexive")).collect();
        let arrows_copy = arrows.clone();
        Self::from_parts(objects.iter().map(|s| s.to_string()).collect(), arrows, identities, |g, f| {
            index[arrows_copy[f].src * n + arrows_copy[g].tgt]
        })
        .expect("poset relation is transitive")
    }

    /// One-object category of a monoid given by its multiplication table,
    /// `table[a][b] = a · b`, composed as `g ∘ f = g · f`. Element 0 is the unit.
    pub fn from_monoid(elements: &[&str], table: &[Vec<usize>]) -> Result<Self> {
        let arrows = elements.iter().map(|e| Arrow { name: e.to_string(), src: 0, tgt: 0 }).collect();
        Self::from_parts(vec!["•".to_string()], arrows, vec![0], |g, f| table.get(g).and_then(|r| r.get(f)).copied())
    }

    /// Cyclic group `Z/n` as a one-object category.
    pub fn cyclic(n: usize) -> Self {
        let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::from_monoid(&refs, &table).expect("cyclic group table is total")
    }

    /// Indiscrete groupoid: exactly one arrow between any two objects.
    pub fn indiscrete(objects: &[&str]) -> Self {
        Self::poset(objects, |_, _| true)
    }

    pub fn opposite(&self) -> Self {
        let arrows = self.arrows.iter().map(|a| Arrow { name: a.name.clone(), src: a.tgt, tgt: a.src }).collect();
        Self::from_parts(self.objects.clone(), arrows, self.identities.clone(), |g, f| self.compose(f, g))
            .expect("opposite of a valid table")
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_info(&self, a: ArrowId) -> &Arrow {
        &self.arrows[a]
    }

    pub fn identity(&self, c: ObjId) -> ArrowId {
        self.identities[c]
    }

    pub fn is_identity(&self, a: ArrowId) -> bool {
        self.identities[self.arrows[a].src] == a
    }

    /// `g ∘ f` when composable.
    pub fn compose(&self, g: ArrowId, f: ArrowId) -> Option<ArrowId> {
        self.compose[g * self.arrows.len() + f]
    }

    pub fn hom(&self, c: ObjId, d: ObjId) -> &[ArrowId] {
        &self.homs[c * self.objects.len() + d]
    }

    pub fn find_object(&self, name: &str) -> Option<ObjId> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn find_arrow(&self, name: &str) -> Option<ArrowId> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        for (c, &i) in self.identities.iter().enumerate() {
            let a = &self.arrows[i];
            if a.src != c || a.tgt != c {
                report.push("identity is an endomorphism of its object", self.objects[c].clone());
            }
        }
        for f in 0..self.arrows.len() {
            let (s, t) = (self.arrows[f].src, self.arrows[f].tgt);
            if self.compose(self.identities[t], f) != Some(f) || self.compose(f, self.identities[s]) != Some(f) {
                report.push("unit laws", self.arrows[f].name.clone());
            }
            for g in 0..self.arrows.len() {
                let Some(gf) = self.compose(g, f) else { continue };
                if self.arrows[gf].src != s || self.arrows[gf].tgt != self.arrows[g].tgt {
                    report.push("composite has the right endpoints", format!("{} ∘ {}", self.arrows[g].name, self.arrows[f].name));
                    continue;
                }
                for h in 0..self.arrows.len() {
                    let Some(hg) = self.compose(h, g) else { continue };
                    if self.compose(h, gf) != self.compose(hg, f) {
                        report.push(
                            "associativity",
                            format!("{}, {}, {}", self.arrows[h].name, self.arrows[g].name, self.arrows[f].name),
                        );
                    }
                }
            }
        }
        report
    }
}
