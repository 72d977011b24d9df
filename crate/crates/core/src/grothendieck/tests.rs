use super::*;
use crate::corpus::{self, DIAGRAM_NAMES};
use crate::error::Error;
use crate::nerves::{coherent_nerve, coherent_nerve_map, CoherentSimplex};
use crate::scat::{discrete_scat, validate_scat, validate_sfunctor, FinCat, ObjId, SCat, SFunctor};
use crate::sset::{horn_check, CellId, HornMode, SSetMap, TruncatedSSet};

fn gr(name: &str, cap: usize) -> GrCat {
    grothendieck(&corpus::diagram(name, cap).unwrap()).unwrap()
}

#[test]
fn constant_point_gives_the_base() {
    for base in [FinCat::arrow(), FinCat::commutative_square(), FinCat::cyclic(2)] {
        let point = discrete_scat(&FinCat::terminal(), 2);
        let e = grothendieck(&DiagramSCat::constant(&base, &point)).unwrap();
        let b = discrete_scat(&base, 2);
        assert_eq!(e.total.object_count(), b.object_count());
        assert!(validate_sfunctor(&e.projection, &e.total, &b).is_ok());
        let n = b.object_count();
        for x in 0..n {
            for y in 0..n {
                assert!(e.projection.hom_map(x, y).is_bijective(b.hom(x, y)));
            }
        }
    }
}

#[test]
fn hom_components() {
    let e = gr("bz2_over_arrow", 2);
    assert_eq!(e.total.object_count(), 2);
    assert_eq!(e.total.hom(0, 1).count(0), 2);
    assert_eq!(e.total.hom(1, 0).count(0), 0);

    let e = gr("point_to_arrow", 2);
    let (src, b1) = (e.object(0, 0), e.object(1, 1));
    assert_eq!(e.total.object_name(b1), "(b,1)");
    assert_eq!(e.total.hom(src, b1).names(0), ["0<1:a<b"]);
}

#[test]
fn corpus_totals_validate() {
    for name in DIAGRAM_NAMES {
        let e = gr(name, 2);
        assert!(validate_scat(&e.total).is_ok(), "{name}");
        assert!(validate_sfunctor(&e.projection, &e.total, &e.base_scat).is_ok(), "{name}");
    }
}

#[test]
fn functoriality_failure_is_rejected() {
    let bz2 = discrete_scat(&FinCat::cyclic(2), 1);
    let trivial = SFunctor {
        on_objects: vec![0],
        on_homs: vec![SSetMap::new((0..=1).map(|k| vec![bz2.identity_at(0, k); 2]).collect())],
    };
    assert!(validate_sfunctor(&trivial, &bz2, &bz2).is_ok());
    let base = FinCat::terminal();
    let err = DiagramSCat::new(base, vec![bz2.clone()], vec![trivial]).unwrap_err();
    assert!(matches!(err, Error::InvalidDiagram(ref w) if w.contains("identities act trivially")));
}

#[test]
fn chosen_lifts_are_cocartesian() {
    for name in DIAGRAM_NAMES {
        let e = gr(name, 3);
        for o in 0..e.object_count() {
            let c = e.split_object(o).0;
            for (a, arrow) in e.base.arrows().iter().enumerate().filter(|(_, a)| a.src == c) {
                let lift = cocartesian_lift(&e, o, a).unwrap();
                if e.base.is_identity(a) {
                    assert_eq!((lift.target, lift.arrow), (o, a));
                    assert_eq!(e.arrow_vertex(&lift), Some(e.total.ident(o)));
                }
                assert_eq!(lift.arrow, a, "{name}: {}", arrow.name);
                let report = is_pcocartesian_arrow(&e, &lift, 3).unwrap();
                assert!(report.is_ok(), "{name}: {report}");
            }
        }
    }
}

#[test]
fn lift_rejects_foreign_arrows() {
    let e = gr("bz2_over_arrow", 1);
    let phi = e.base.find_arrow("0<1").unwrap();
    assert!(matches!(cocartesian_lift(&e, e.object(1, 0), phi), Err(Error::NotAnArrow(_))));
    let lift = cocartesian_lift(&e, e.object(0, 0), phi).unwrap();
    assert_eq!(e.total.hom(lift.source, lift.target).name(0, e.arrow_vertex(&lift).unwrap()), "0<1:0");
}

#[test]
fn noninvertible_component_fails_the_criterion() {
    let e = gr("point_to_arrow", 2);
    let (src, b1) = (e.object(0, 0), e.object(1, 1));
    let report = is_pcocartesian(&e.projection, &e.total, &e.base_scat, src, b1, 0, 2).unwrap();
    assert_eq!(report.violations.len(), 1);
    assert_eq!(report.violations[0].witness, "z = (a,1), dimension 0: 0 cells of E(target, z) against 1 in the pullback");
}

#[test]
fn nondiscrete_base_is_refused() {
    let eg = corpus::egroupoid(1);
    let id = SFunctor::identity(&eg);
    assert_eq!(is_pcocartesian(&id, &eg, &eg, 0, 0, 0, 1).unwrap_err(), Error::NonDiscreteBase);
    assert_eq!(is_opfibration(&id, &eg, &eg, 1).unwrap_err(), Error::NonDiscreteBase);
}

#[test]
fn opfibrations() {
    for name in DIAGRAM_NAMES {
        let e = gr(name, 2);
        assert!(Fibration::of(&e).is_opfibration(2).unwrap().is_ok(), "{name}");
    }
    let d = discrete_scat(&FinCat::commutative_square(), 2);
    assert!(is_opfibration(&SFunctor::identity(&d), &d, &d, 2).unwrap().is_ok());

    let cut = corpus::opfibration_negative(2).unwrap();
    let report = cut.is_opfibration(2).unwrap();
    assert_eq!(report.violations.len(), 1);
    assert_eq!(report.violations[0].witness, "e = (•,0), φ = 0<1");
}

#[test]
fn fiberwise_opposites() {
    let point = gr("constant_point_square", 2);
    let op = fiberwise_op_split(&point).unwrap();
    assert_eq!(op.total, point.total);

    for name in DIAGRAM_NAMES {
        let e = gr(name, 2);
        let op = fiberwise_op_split(&e).unwrap();
        let twice = fiberwise_op_split(&op).unwrap();
        assert_eq!(twice.total, e.total, "{name}");
        assert_eq!(twice.provenance, e.provenance);
        assert_eq!(op.total.objects(), e.total.objects());
        let f = e.provenance.as_ref().unwrap();
        for x in 0..e.object_count() {
            for y in 0..e.object_count() {
                let ((cx, ox), (cy, oy)) = (e.split_object(x), e.split_object(y));
                for comp in op.components(x, y) {
                    let fiber = f.fiber(cy).hom(oy, e.push(comp.arrow, ox));
                    assert_eq!(comp.counts, fiber.counts(), "{name} {cx}->{cy}");
                }
            }
        }
    }
    let bz2 = gr("bz2_over_arrow", 2);
    assert_eq!(fiberwise_op_split(&bz2).unwrap().total, bz2.total);

    let mut bare = bz2.clone();
    bare.provenance = None;
    assert_eq!(fiberwise_op_split(&bare).unwrap_err(), Error::MissingProvenance);
}

/// Brute-force count of `n`-chains in an ordinary category given by its
/// composition rule on arrow triples.
fn count_chains(objects: usize, arrows: &[(usize, usize)], n: usize) -> usize {
    if n == 0 {
        return objects;
    }
    let mut count = 0;
    let mut stack: Vec<Vec<usize>> = (0..arrows.len()).map(|a| vec![a]).collect();
    while let Some(path) = stack.pop() {
        if path.len() == n {
            count += 1;
            continue;
        }
        let end = arrows[*path.last().unwrap()].1;
        for (b, &(s, _)) in arrows.iter().enumerate() {
            if s == end {
                let mut p = path.clone();
                p.push(b);
                stack.push(p);
            }
        }
    }
    count
}

#[test]
fn bz2_over_arrow_counts_match_an_independent_enumeration() {
    // [1] × Z/2: arrows (i <= j, g)
    let mut arrows = Vec::new();
    for (i, j) in [(0, 0), (0, 1), (1, 1)] {
        for _g in 0..2 {
            arrows.push((i, j));
        }
    }
    let oracle: Vec<usize> = (0..=3).map(|n| count_chains(2, &arrows, n)).collect();
    assert_eq!(oracle, [2, 6, 16, 40]);

    let cmp = compare_gr_relnerve(&corpus::diagram("bz2_over_arrow", 3).unwrap(), 3).unwrap();
    assert!(cmp.certificate.passed(), "{}", cmp.certificate.render(crate::certificate::Format::Text));
    assert_eq!(cmp.gr_nerve.sset.counts(), oracle);
    assert_eq!(cmp.relative.sset.counts(), oracle);
}

#[test]
fn one_cells_correspond() {
    let f = corpus::diagram("bz2_over_arrow", 2).unwrap();
    let cmp = compare_gr_relnerve(&f, 2).unwrap();
    let fwd = cmp.forward.as_ref().unwrap();
    assert_eq!(cmp.gr_nerve.sset.count(1), 6);
    let mut seen = std::collections::HashSet::new();
    for x in 0..6 {
        let s = cmp.gr_nerve.simplex(1, x);
        let t = gr_simplex_to_relnerve(&cmp.gr, &f, &cmp.fn_nerve, &cmp.gr_nerve, s).unwrap();
        assert_eq!(cmp.relative.find(1, &t), Some(fwd.apply(1, x)));
        assert_eq!(&relnerve_simplex_to_gr(&cmp.gr, &f, &cmp.fn_nerve, &cmp.gr_nerve, &t).unwrap(), s);
        seen.insert(fwd.apply(1, x));
    }
    assert_eq!(seen.len(), 6);

    let v = cmp.gr_nerve.simplex(0, 1);
    let t = gr_simplex_to_relnerve(&cmp.gr, &f, &cmp.fn_nerve, &cmp.gr_nerve, v).unwrap();
    assert_eq!(t.chain.objects, [cmp.gr.split_object(v.objects[0]).0]);
    assert_eq!(t.family.len(), 1);
}

#[test]
fn constant_point_relative_nerve_recovers_chains() {
    let f = corpus::diagram("constant_point_square", 2).unwrap();
    let cmp = compare_gr_relnerve(&f, 2).unwrap();
    assert!(cmp.certificate.passed());
    assert_eq!(cmp.relative.sset.counts(), cmp.relative.base_nerve.sset.counts());
}

#[test]
fn theorem_holds_on_the_corpus() {
    for name in DIAGRAM_NAMES {
        let cert = check_gr_relnerve_iso(&corpus::diagram(name, 2).unwrap(), 2).unwrap();
        assert!(cert.passed(), "{name}: {}", cert.render(crate::certificate::Format::Text));
    }
}

#[test]
fn corrupted_family_is_malformed() {
    let f = corpus::diagram("point_to_arrow", 1).unwrap();
    let cmp = compare_gr_relnerve(&f, 1).unwrap();
    // an edge over 0<1 whose far vertex is moved to the other object of F1
    let edge = (0..cmp.relative.sset.count(1))
        .map(|x| cmp.relative.simplex(1, x).clone())
        .find(|t| t.chain.objects == [0, 1])
        .unwrap();
    let mut bad = edge.clone();
    bad.family[1] = 1 - bad.family[1];
    assert!(!crate::nerves::RelativeNerve::is_valid_simplex(&cmp.fn_nerve.diagram, &bad, 1));
    let err = relnerve_simplex_to_gr(&cmp.gr, &f, &cmp.fn_nerve, &cmp.gr_nerve, &bad).unwrap_err();
    assert!(matches!(err, Error::Malformed { .. }));
}

/// Connected components of the vertices of a complex.
fn pi0(h: &TruncatedSSet) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..h.count(0)).collect();
    fn root(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            x = p[x];
        }
        x
    }
    if h.cap() >= 1 {
        for e in 0..h.count(1) {
            let (a, b) = (root(&mut parent, h.face(1, 0, e)), root(&mut parent, h.face(1, 1, e)));
            parent[a] = b;
        }
    }
    (0..h.count(0)).map(|v| root(&mut parent, v)).collect()
}

fn invertible_up_to_homotopy(c: &SCat, x: ObjId, y: ObjId, sigma: CellId) -> bool {
    let (cx, cy) = (pi0(c.hom(x, x)), pi0(c.hom(y, y)));
    (0..c.hom(y, x).count(0)).any(|tau| {
        cx[c.compose(x, y, x, 0, tau, sigma)] == cx[c.ident(x)] && cy[c.compose(y, x, y, 0, sigma, tau)] == cy[c.ident(y)]
    })
}

#[test]
fn cocartesian_arrows_have_invertible_components() {
    for name in DIAGRAM_NAMES {
        let e = gr(name, 2);
        let f = e.provenance.clone().unwrap();
        for s in 0..e.object_count() {
            for t in 0..e.object_count() {
                for v in 0..e.total.hom(s, t).count(0) {
                    if is_pcocartesian(&e.projection, &e.total, &e.base_scat, s, t, v, 2).unwrap().is_ok() {
                        let a = e.arrow_at(s, t, v);
                        let ((_, x), (d, y)) = (e.split_object(s), e.split_object(t));
                        assert!(invertible_up_to_homotopy(f.fiber(d), e.push(a.arrow, x), y, a.component), "{name}");
                    }
                }
            }
        }
    }
}

#[test]
fn nerves_of_locally_kan_diagrams_are_quasicategories() {
    for name in DIAGRAM_NAMES {
        let f = corpus::diagram(name, 2).unwrap();
        if !f.fibers.iter().all(|k| crate::scat::is_locally_kan(k, 2).unwrap().is_ok()) {
            continue;
        }
        let e = grothendieck(&f).unwrap();
        let nerve = coherent_nerve(&e.total, 3).unwrap();
        assert!(horn_check(&nerve.sset, HornMode::Inner, 3).unwrap().is_ok(), "{name}");

        let base = coherent_nerve(&e.base_scat, 3).unwrap();
        let p = coherent_nerve_map(&e.projection, &nerve, &base).unwrap();
        for o in 0..e.object_count() {
            let c = e.split_object(o).0;
            for a in (0..e.base.arrows().len()).filter(|&a| e.base.arrow_info(a).src == c) {
                let lift = cocartesian_lift(&e, o, a).unwrap();
                let edge = CoherentSimplex { objects: vec![lift.source, lift.target], cells: vec![e.arrow_vertex(&lift).unwrap()] };
                let id = nerve.find(1, &edge).unwrap();
                let report = cocartesian_edge_fillers(&nerve.sset, &base.sset, &p, id, 3).unwrap();
                assert!(report.is_ok(), "{name}: {report}");
            }
        }
    }
}
