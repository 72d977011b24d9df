//! Named fixtures: small categories, enriched categories, diagrams and
//! strict monoidal structures.

use crate::error::{Error, Result};
use crate::grothendieck::{cocartesian_lift, grothendieck, DiagramSCat, Fibration};
use crate::monoidal::MonSCat;
use crate::scat::{discrete_scat, sub_scat, terminal_scat, ArrowId, FinCat, ObjId, SCat, SFunctor};
use crate::sset::{from_model, CellId, SSetMap, TruncatedSSet};

/// Simplicial set whose `k`-cells are all words of length `k + 1` over
/// `0..letters` accepted by `keep`, with faces deleting and degeneracies
/// doubling a letter.
fn word_sset(cap: usize, letters: u8, keep: impl Fn(&[u8]) -> bool) -> TruncatedSSet {
    let cells: Vec<Vec<Vec<u8>>> = (0..=cap)
        .map(|k| {
            let total = (letters as usize).pow(k as u32 + 1);
            (0..total)
                .map(|mut code| {
                    let mut w = vec![0u8; k + 1];
                    for slot in w.iter_mut().rev() {
                        *slot = (code % letters as usize) as u8;
                        code /= letters as usize;
                    }
                    w
                })
                .filter(|w| keep(w))
                .collect()
        })
        .collect();
    from_model(
        cap,
        cells,
        |_, w| w.iter().map(|b| b.to_string()).collect(),
        |_, i, w| {
            let mut v = w.clone();
            v.remove(i);
            v
        },
        |_, i, w| {
            let mut v = w.clone();
            v.insert(i, w[i]);
            v
        },
    )
    .expect("words are closed under deletion and doubling")
    .0
}

/// One-object enriched category on `hom` with a pointwise binary operation
/// on letters and the constant word `unit` as identity.
fn pointwise_monoid(cap: usize, hom: TruncatedSSet, unit: u8, op: fn(u8, u8) -> u8) -> SCat {
    let letters = |k: usize, c: CellId| -> Vec<u8> { hom.name(k, c).bytes().map(|b| b - b'0').collect() };
    let ident = hom.find(0, &unit.to_string()).expect("unit letter present");
    let homs = vec![hom.clone()];
    SCat::from_rule(cap, vec!["•".to_string()], homs, vec![ident], |_, _, _, k, g, f| {
        let word: String = letters(k, g).iter().zip(letters(k, f)).map(|(&a, b)| op(a, b).to_string()).collect();
        hom.find(k, &word).expect("pointwise operation stays in the complex")
    })
    .expect("one-object tables are well formed")
}

/// Hom complex `E(Z/2)`, the nerve of the indiscrete groupoid on `{0, 1}`,
/// with pointwise addition mod 2.
pub fn egroupoid(cap: usize) -> SCat {
    pointwise_monoid(cap, word_sset(cap, 2, |_| true), 0, |a, b| a ^ b)
}

/// Hom complex `Δ^1` with pointwise maximum; not locally Kan.
pub fn interval(cap: usize) -> SCat {
    pointwise_monoid(cap, word_sset(cap, 2, |w| w.windows(2).all(|p| p[0] <= p[1])), 0, |a, b| a.max(b))
}

/// `{e, a}` with `a · a = a`.
pub fn idempotent_monoid() -> FinCat {
    FinCat::from_monoid(&["e", "a"], &[vec![0, 1], vec![1, 1]]).expect("valid table")
}

/// `{e, a, b}` with `x · y = x` for `x, y ∈ {a, b}`; noncommutative.
pub fn left_zero_monoid() -> FinCat {
    FinCat::from_monoid(&["e", "a", "b"], &[vec![0, 1, 2], vec![1, 1, 1], vec![2, 2, 2]]).expect("valid table")
}

/// Discrete category `{a, b}` and the free arrow `{a -> b}`.
pub fn two_points() -> FinCat {
    FinCat::poset(&["a", "b"], |x, y| x == y)
}

pub fn free_arrow() -> FinCat {
    FinCat::poset(&["a", "b"], |x, y| x <= y)
}

pub const CATEGORY_NAMES: &[&str] = &["terminal", "arrow", "square", "bz2", "bz3", "idempotent", "left_zero", "free_arrow", "two_points"];

pub fn category(name: &str) -> Result<FinCat> {
    Ok(match name {
        "terminal" => FinCat::terminal(),
        "arrow" => FinCat::arrow(),
        "square" => FinCat::commutative_square(),
        "bz2" => FinCat::cyclic(2),
        "bz3" => FinCat::cyclic(3),
        "idempotent" => idempotent_monoid(),
        "left_zero" => left_zero_monoid(),
        "free_arrow" => free_arrow(),
        "two_points" => two_points(),
        _ => return Err(Error::Unknown { what: "category fixture", name: name.to_string() }),
    })
}

pub const SCAT_NAMES: &[&str] =
    &["terminal", "arrow", "square", "bz2", "bz3", "idempotent", "left_zero", "free_arrow", "two_points", "egroupoid", "interval"];

/// Discrete fixtures are the enrichments of [`category`]; `egroupoid` and
/// `interval` have nondiscrete homs.
pub fn scat(name: &str, cap: usize) -> Result<SCat> {
    match name {
        "egroupoid" => Ok(egroupoid(cap)),
        "interval" => Ok(interval(cap)),
        _ => category(name).map(|d| discrete_scat(&d, cap)),
    }
}

/// Enriched functor out of a discrete enriched category, determined by
/// where it sends objects and vertices; higher cells are degenerate.
fn discrete_functor(source: &SCat, target: &SCat, on_objects: Vec<ObjId>, vertex: impl Fn(ObjId, ObjId, CellId) -> CellId) -> SFunctor {
    let n = source.object_count();
    let cap = source.cap();
    let on_homs = (0..n * n)
        .map(|t| {
            let (x, y) = (t / n, t % n);
            let h = target.hom(on_objects[x], on_objects[y]);
            SSetMap::new((0..=cap).map(|k| (0..source.hom(x, y).count(k)).map(|c| h.degenerate_vertex(vertex(x, y, c), k)).collect()).collect())
        })
        .collect();
    SFunctor { on_objects, on_homs }
}

/// The functor from the terminal enriched category picking out `x`.
fn point_functor(target: &SCat, x: ObjId) -> SFunctor {
    discrete_functor(&terminal_scat(target.cap()), target, vec![x], |_, _, _| target.ident(x))
}

/// `BZ/2 -> E(Z/2)`, each group element to the constant word on it.
fn bz2_into_egroupoid(cap: usize) -> SFunctor {
    let (bz2, eg) = (discrete_scat(&FinCat::cyclic(2), cap), egroupoid(cap));
    let hom = eg.hom(0, 0).clone();
    discrete_functor(&bz2, &eg, vec![0], move |_, _, c| hom.find(0, &c.to_string()).expect("letter present"))
}

pub const DIAGRAM_NAMES: &[&str] = &[
    "constant_point",
    "constant_point_square",
    "bz2_over_arrow",
    "point_to_arrow",
    "point_to_two_points",
    "bz2_into_egroupoid",
    "square_into_egroupoid",
];

/// Diagrams of enriched categories. `constant_point` lives over `[1]`; the
/// square fixtures over `[1] × [1]`.
pub fn diagram(name: &str, cap: usize) -> Result<DiagramSCat> {
    let arrow = FinCat::arrow();
    let over_arrow = |f0: SCat, f1: SCat, phi: SFunctor| {
        let ids = [SFunctor::identity(&f0), SFunctor::identity(&f1)];
        let actions = arrow
            .arrows()
            .iter()
            .map(|a| if a.src == a.tgt { ids[a.src].clone() } else { phi.clone() })
            .collect();
        DiagramSCat::new(arrow.clone(), vec![f0, f1], actions)
    };
    match name.replace('-', "_").as_str() {
        "constant_point" => Ok(DiagramSCat::constant(&arrow, &terminal_scat(cap))),
        "constant_point_square" => Ok(DiagramSCat::constant(&FinCat::commutative_square(), &terminal_scat(cap))),
        "bz2_over_arrow" => Ok(DiagramSCat::constant(&arrow, &discrete_scat(&FinCat::cyclic(2), cap))),
        "point_to_arrow" => {
            let target = discrete_scat(&free_arrow(), cap);
            over_arrow(terminal_scat(cap), target.clone(), point_functor(&target, 0))
        }
        "point_to_two_points" => {
            let target = discrete_scat(&two_points(), cap);
            over_arrow(terminal_scat(cap), target.clone(), point_functor(&target, 0))
        }
        "bz2_into_egroupoid" => over_arrow(discrete_scat(&FinCat::cyclic(2), cap), egroupoid(cap), bz2_into_egroupoid(cap)),
        "square_into_egroupoid" => {
            let square = FinCat::commutative_square();
            let bz2 = discrete_scat(&FinCat::cyclic(2), cap);
            let eg = egroupoid(cap);
            let point = terminal_scat(cap);
            let fibers = vec![point.clone(), bz2.clone(), bz2.clone(), eg.clone()];
            let actions = square
                .arrows()
                .iter()
                .map(|a| match (a.src, a.tgt) {
                    (s, t) if s == t => SFunctor::identity(&fibers[s]),
                    (0, t) => point_functor(&fibers[t], 0),
                    _ => bz2_into_egroupoid(cap),
                })
                .collect();
            DiagramSCat::new(square, fibers, actions)
        }
        _ => Err(Error::Unknown { what: "diagram fixture", name: name.to_string() }),
    }
}

/// `Gr` of `point_to_two_points` with the chosen lift `(id_a, φ)` removed:
/// the object over `0` has no lift of `φ` left.
pub fn opfibration_negative(cap: usize) -> Result<Fibration> {
    let gr = grothendieck(&diagram("point_to_two_points", cap)?)?;
    let lift = cocartesian_lift(&gr, gr.object(0, 0), FinCat::arrow().find_arrow("0<1").expect("arrow of [1]"))?;
    let (source, target) = (lift.source, lift.target);
    let (total, inclusion) = sub_scat(&gr.total, |x, y, _, _| !(x == source && y == target))?;
    let projection = inclusion.then(&gr.projection);
    Ok(Fibration { total, base: gr.base_scat.clone(), projection })
}

/// Strict tensor on a discrete enriched category, given on objects and on
/// arrows `a : x -> y`, `b : x' -> y'` as `arrows(a, b)`.
fn discrete_monoidal(
    d: &FinCat,
    cap: usize,
    unit: ObjId,
    objects: impl Fn(ObjId, ObjId) -> ObjId,
    arrows: impl Fn(ArrowId, ArrowId) -> ArrowId + Sync,
) -> Result<MonSCat> {
    let c = discrete_scat(d, cap);
    let tensor_objects = |x, y| objects(x, y);
    let targets: Vec<ObjId> = (0..d.object_count() * d.object_count()).map(|p| objects(p / d.object_count(), p % d.object_count())).collect();
    let n = d.object_count();
    let hom = c.clone();
    MonSCat::from_rule(c, unit, tensor_objects, move |x, y, x2, y2, k, a, b| {
        let vertex = |h: &TruncatedSSet, cell: CellId| h.act(k, cell, &[0]);
        let ga = d.hom(x, y)[vertex(hom.hom(x, y), a)];
        let gb = d.hom(x2, y2)[vertex(hom.hom(x2, y2), b)];
        let (s, t) = (targets[x * n + x2], targets[y * n + y2]);
        let image = arrows(ga, gb);
        let position = d.hom(s, t).iter().position(|&e| e == image).expect("tensor of arrows lands in its hom");
        hom.hom(s, t).degenerate_vertex(position, k)
    })
}

/// One-object monoid with tensor its multiplication; a functor exactly
/// when the monoid is commutative.
fn monoid_monoidal(d: &FinCat, cap: usize) -> Result<MonSCat> {
    discrete_monoidal(d, cap, 0, |_, _| 0, |a, b| d.compose(a, b).expect("one object"))
}

/// `E(Z/2)` with the pointwise sum of words as tensor.
fn egroupoid_monoidal(cap: usize) -> Result<MonSCat> {
    let c = egroupoid(cap);
    let hom = c.hom(0, 0).clone();
    MonSCat::from_rule(c, 0, |_, _| 0, move |_, _, _, _, k, a, b| {
        let word: String = hom.name(k, a).bytes().zip(hom.name(k, b).bytes()).map(|(p, q)| (((p - b'0') ^ (q - b'0')) + b'0') as char).collect();
        hom.find(k, &word).expect("pointwise sum stays in the complex")
    })
}

pub const MONOIDAL_NAMES: &[&str] = &["terminal", "bz2", "bz3", "idempotent", "arrow_meet", "egroupoid"];

/// Fixtures that [`crate::monoidal::validate_monoidal`] rejects.
pub const INVALID_MONOIDAL_NAMES: &[&str] = &["left_zero", "nonassociative"];

/// Strict monoidal fixtures. `arrow_meet` is `[1]` with `min` and unit `1`;
/// `left_zero` fails interchange and `nonassociative` (`a ⊗ a = b`, all other
/// tensors `a`) fails associativity.
pub fn monoidal(name: &str, cap: usize) -> Result<MonSCat> {
    match name.replace('-', "_").as_str() {
        "terminal" => discrete_monoidal(&FinCat::terminal(), cap, 0, |_, _| 0, |a, _| a),
        "bz2" => monoid_monoidal(&FinCat::cyclic(2), cap),
        "bz3" => monoid_monoidal(&FinCat::cyclic(3), cap),
        "idempotent" => monoid_monoidal(&idempotent_monoid(), cap),
        "left_zero" => monoid_monoidal(&left_zero_monoid(), cap),
        "egroupoid" => egroupoid_monoidal(cap),
        "arrow_meet" => {
            let d = FinCat::arrow();
            let meet = d.clone();
            discrete_monoidal(&d, cap, 1, |x, y| x.min(y), move |a, b| {
                let (fa, fb) = (meet.arrow_info(a), meet.arrow_info(b));
                meet.hom(fa.src.min(fb.src), fa.tgt.min(fb.tgt))[0]
            })
        }
        "nonassociative" => {
            let d = two_points();
            let table = |x: ObjId, y: ObjId| usize::from(x == 0 && y == 0);
            let ids = d.clone();
            discrete_monoidal(&d, cap, 0, table, move |a, b| ids.identity(table(ids.arrow_info(a).src, ids.arrow_info(b).src)))
        }
        _ => Err(Error::Unknown { what: "monoidal fixture", name: name.to_string() }),
    }
}
