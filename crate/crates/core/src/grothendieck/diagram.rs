use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::nerves::{coherent_nerve, coherent_nerve_map, CoherentNerve, DiagramSSet};
use crate::report::ValidationReport;
use crate::scat::{opposite_scat, validate_sfunctor, ArrowId, FinCat, ObjId, SCat, SFunctor};

/// A strict functor `F : D -> sCat` from a finite category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramSCat {
    pub base: FinCat,
    pub fibers: Vec<SCat>,
    /// One enriched functor per arrow of the base, `fibers[src] -> fibers[tgt]`.
    pub actions: Vec<SFunctor>,
}

/// `N ∘ F` together with the coherent nerves it was built from.
#[derive(Clone, Debug)]
pub struct DiagramNerve {
    pub diagram: DiagramSSet,
    pub nerves: Vec<CoherentNerve>,
}

impl DiagramSCat {
    pub fn new(base: FinCat, fibers: Vec<SCat>, actions: Vec<SFunctor>) -> Result<Self> {
        let f = Self { base, fibers, actions };
        let report = f.validate();
        if !report.is_ok() {
            return Err(Error::InvalidDiagram(report.to_string()));
        }
        Ok(f)
    }

    pub fn constant(base: &FinCat, value: &SCat) -> Self {
        Self {
            base: base.clone(),
            fibers: vec![value.clone(); base.object_count()],
            actions: vec![SFunctor::identity(value); base.arrows().len()],
        }
    }

    pub fn cap(&self) -> usize {
        self.fibers.first().map_or(0, SCat::cap)
    }

    pub fn fiber(&self, c: ObjId) -> &SCat {
        &self.fibers[c]
    }

    pub fn action(&self, a: ArrowId) -> &SFunctor {
        &self.actions[a]
    }

    /// Functoriality on the nose, plus each action being an enriched functor.
    /// The fibers themselves are assumed valid.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        let d = &self.base;
        if self.fibers.len() != d.object_count() || self.actions.len() != d.arrows().len() {
            report.push("diagram covers the base", "fiber or action table misshapen");
            return report;
        }
        let cap = self.cap();
        for (c, fiber) in self.fibers.iter().enumerate() {
            if fiber.cap() != cap {
                report.push("fibers share a cap", d.objects()[c].clone());
            }
        }
        if !report.is_ok() {
            return report;
        }
        let per: Vec<ValidationReport> = d
            .arrows()
            .par_iter()
            .enumerate()
            .map(|(a, arrow)| validate_sfunctor(&self.actions[a], &self.fibers[arrow.src], &self.fibers[arrow.tgt]))
            .collect();
        for (a, r) in per.into_iter().enumerate() {
            report.extend_prefixed(&format!("action of {}", d.arrow_info(a).name), r);
        }
        if !report.is_ok() {
            return report;
        }
        for c in 0..d.object_count() {
            if self.actions[d.identity(c)] != SFunctor::identity(&self.fibers[c]) {
                report.push("identities act trivially", d.objects()[c].clone());
            }
        }
        for g in 0..d.arrows().len() {
            for f in 0..d.arrows().len() {
                if let Some(gf) = d.compose(g, f) {
                    if self.actions[f].then(&self.actions[g]) != self.actions[gf] {
                        report.push("action is functorial", format!("{} ∘ {}", d.arrow_info(g).name, d.arrow_info(f).name));
                    }
                }
            }
        }
        report
    }

    /// `op_s ∘ F`: every fiber and every action replaced by its opposite.
    pub fn opposite(&self) -> Self {
        Self {
            base: self.base.clone(),
            fibers: self.fibers.iter().map(opposite_scat).collect(),
            actions: self.actions.iter().map(SFunctor::opposite).collect(),
        }
    }

    /// `N ∘ F` through dimension `cap`.
    pub fn nerve(&self, cap: usize) -> Result<DiagramNerve> {
        let nerves: Vec<CoherentNerve> = self.fibers.iter().map(|k| coherent_nerve(k, cap)).collect::<Result<_>>()?;
        let actions = self
            .base
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arrow)| coherent_nerve_map(&self.actions[a], &nerves[arrow.src], &nerves[arrow.tgt]))
            .collect::<Result<_>>()?;
        let diagram = DiagramSSet { base: self.base.clone(), values: nerves.iter().map(|n| n.sset.clone()).collect(), actions };
        Ok(DiagramNerve { diagram, nerves })
    }
}
