use super::diagram::DiagramSCat;
use crate::error::{Error, Result};
use crate::scat::{discrete_scat, ArrowId, FinCat, ObjId, SCat, SFunctor};
use crate::sset::{labelled_coproduct, CellId, SSetMap, TruncatedSSet};

/// The summand of a total hom complex lying over one base arrow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomComponent {
    pub arrow: ArrowId,
    /// First cell of the summand in each dimension.
    pub offsets: Vec<usize>,
    pub counts: Vec<usize>,
}

/// The Grothendieck construction: total enriched category, its projection
/// onto the discrete base, and the bookkeeping relating total cells to
/// fiber cells.
#[derive(Clone, Debug)]
pub struct GrCat {
    pub total: SCat,
    pub base: FinCat,
    pub base_scat: SCat,
    pub projection: SFunctor,
    pub provenance: Option<DiagramSCat>,
    /// `(c, x)` for every total object, grouped by `c`.
    objects: Vec<(ObjId, ObjId)>,
    object_index: Vec<Vec<ObjId>>,
    /// `push[φ][x] = Fφ x`.
    push: Vec<Vec<ObjId>>,
    components: Vec<Vec<HomComponent>>,
}

/// An arrow `(Fφ x -σ-> y, φ)` of the total category.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GrArrow {
    pub source: ObjId,
    pub target: ObjId,
    pub arrow: ArrowId,
    /// A vertex of `Fd(Fφ x, y)`.
    pub component: CellId,
}

impl GrCat {
    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    /// `(c, x)` of a total object.
    pub fn split_object(&self, o: ObjId) -> (ObjId, ObjId) {
        self.objects[o]
    }

    pub fn object(&self, c: ObjId, x: ObjId) -> ObjId {
        self.object_index[c][x]
    }

    /// `Fφ x` on fiber objects.
    pub fn push(&self, arrow: ArrowId, x: ObjId) -> ObjId {
        self.push[arrow][x]
    }

    pub fn components(&self, source: ObjId, target: ObjId) -> &[HomComponent] {
        &self.components[source * self.objects.len() + target]
    }

    /// The base arrow and fiber cell of a `k`-cell of a total hom.
    pub fn decompose(&self, source: ObjId, target: ObjId, k: usize, cell: CellId) -> (ArrowId, CellId) {
        for comp in self.components(source, target) {
            if cell < comp.offsets[k] + comp.counts[k] {
                return (comp.arrow, cell - comp.offsets[k]);
            }
        }
        panic!("cell {cell} outside hom in dimension {k}")
    }

    pub fn encode(&self, source: ObjId, target: ObjId, arrow: ArrowId, k: usize, inner: CellId) -> Option<CellId> {
        let comp = self.components(source, target).iter().find(|c| c.arrow == arrow)?;
        (inner < comp.counts[k]).then(|| comp.offsets[k] + inner)
    }

    pub fn arrow_vertex(&self, a: &GrArrow) -> Option<CellId> {
        self.encode(a.source, a.target, a.arrow, 0, a.component)
    }

    pub fn arrow_at(&self, source: ObjId, target: ObjId, vertex: CellId) -> GrArrow {
        let (arrow, component) = self.decompose(source, target, 0, vertex);
        GrArrow { source, target, arrow, component }
    }

    pub fn describe_arrow(&self, a: &GrArrow) -> String {
        let vertex = self.arrow_vertex(a).map_or("?", |v| self.total.hom(a.source, a.target).name(0, v));
        format!("{} -> {} ({})", self.total.object_name(a.source), self.total.object_name(a.target), vertex)
    }
}

/// `Gr F`: objects `(x, c)` with `x ∈ Fc`, homs
/// `∐_{φ : c -> d} Fd(Fφ x, y)` and composite
/// `(τ, ψ) ∘ (σ, φ) = (τ ∘ Fψ σ, ψφ)`.
pub fn grothendieck(f: &DiagramSCat) -> Result<GrCat> {
    let report = f.validate();
    if !report.is_ok() {
        return Err(Error::InvalidDiagram(report.to_string()));
    }
    let d = &f.base;
    let cap = f.cap();
    let mut objects = Vec::new();
    let mut object_index = Vec::with_capacity(d.object_count());
    let mut names = Vec::new();
    for c in 0..d.object_count() {
        let mut row = Vec::new();
        for x in 0..f.fiber(c).object_count() {
            row.push(objects.len());
            objects.push((c, x));
            names.push(format!("({},{})", f.fiber(c).object_name(x), d.objects()[c]));
        }
        object_index.push(row);
    }
    let push: Vec<Vec<ObjId>> = f.actions.iter().map(|a| a.on_objects.clone()).collect();
    let n = objects.len();
    let mut homs: Vec<TruncatedSSet> = Vec::with_capacity(n * n);
    let mut components = Vec::with_capacity(n * n);
    for &(c, x) in &objects {
        for &(e, y) in &objects {
            let arrows = d.hom(c, e);
            let fiber = f.fiber(e);
            let parts: Vec<(String, &TruncatedSSet)> =
                arrows.iter().map(|&phi| (d.arrow_info(phi).name.clone(), fiber.hom(push[phi][x], y))).collect();
            let mut offsets = vec![0; cap + 1];
            let mut comps = Vec::with_capacity(arrows.len());
            for (&phi, (_, h)) in arrows.iter().zip(&parts) {
                let counts = h.counts();
                comps.push(HomComponent { arrow: phi, offsets: offsets.clone(), counts: counts.clone() });
                for k in 0..=cap {
                    offsets[k] += counts[k];
                }
            }
            homs.push(labelled_coproduct(cap, &parts)?);
            components.push(comps);
        }
    }
    let mut gr = GrCat {
        total: discrete_scat(&FinCat::terminal(), cap),
        base: d.clone(),
        base_scat: discrete_scat(d, cap),
        projection: SFunctor { on_objects: Vec::new(), on_homs: Vec::new() },
        provenance: Some(f.clone()),
        objects,
        object_index,
        push,
        components,
    };
    let ident: Vec<CellId> = (0..n)
        .map(|o| {
            let (c, x) = gr.objects[o];
            gr.encode(o, o, d.identity(c), 0, f.fiber(c).ident(x)).expect("identity component present")
        })
        .collect();
    let total = SCat::from_rule(cap, names, homs, ident, |xo, yo, zo, k, g, fc| {
        let ((_, x), (_, y), (e, z)) = (gr.objects[xo], gr.objects[yo], gr.objects[zo]);
        let (phi, sigma) = gr.decompose(xo, yo, k, fc);
        let (psi, tau) = gr.decompose(yo, zo, k, g);
        let pushed = f.action(psi).apply_cell(gr.push[phi][x], y, k, sigma);
        let inner = f.fiber(e).compose(gr.push[psi][gr.push[phi][x]], gr.push[psi][y], z, k, tau, pushed);
        let composite = d.compose(psi, phi).expect("composable base arrows");
        gr.encode(xo, zo, composite, k, inner).expect("composite lands in its component")
    })?;
    let projection = SFunctor {
        on_objects: gr.objects.iter().map(|&(c, _)| c).collect(),
        on_homs: (0..n * n)
            .map(|t| {
                let (xo, yo) = (t / n, t % n);
                let (c, e) = (gr.objects[xo].0, gr.objects[yo].0);
                let position = |a: ArrowId| d.hom(c, e).iter().position(|&b| b == a).expect("arrow in its hom");
                SSetMap::new(
                    (0..=cap)
                        .map(|k| (0..total.hom(xo, yo).count(k)).map(|cell| position(gr.decompose(xo, yo, k, cell).0)).collect())
                        .collect(),
                )
            })
            .collect(),
    };
    gr.total = total;
    gr.projection = projection;
    Ok(gr)
}

/// The chosen lift `(id_{Fφ x}, φ)` of `φ` at the object `source`.
pub fn cocartesian_lift(e: &GrCat, source: ObjId, arrow: ArrowId) -> Result<GrArrow> {
    let (c, x) = e.split_object(source);
    let info = e.base.arrows().get(arrow).ok_or_else(|| Error::NotAnArrow(format!("#{arrow}")))?;
    if info.src != c {
        return Err(Error::NotAnArrow(format!("{} out of {}", info.name, e.base.objects()[c])));
    }
    let target = e.object(info.tgt, e.push(arrow, x));
    // Fd(Fφ x, Fφ x) is the identity summand of the target's endomorphisms
    let (_, component) = e.decompose(target, target, 0, e.total.ident(target));
    Ok(GrArrow { source, target, arrow, component })
}

/// `Gr(op_s ∘ F)`, available when the input remembers its diagram.
pub fn fiberwise_op_split(e: &GrCat) -> Result<GrCat> {
    let f = e.provenance.as_ref().ok_or(Error::MissingProvenance)?;
    grothendieck(&f.opposite())
}
