use proptest::prelude::*;

use super::*;
use crate::corpus;
use crate::scat::{discrete_scat, opposite_scat, scat_product, FinCat};
use crate::simplex::{mask_of, monotone_maps};
use crate::sset::{binary_product, horn_check, opposite_sset, sset_iso, standard_simplex, validate_sset, HornMode};

#[test]
fn ordinary_nerve_shapes() {
    let t = ordinary_nerve(&FinCat::terminal(), 2);
    assert!(sset_iso(&t.sset, &standard_simplex(0, 2)).is_some());
    let a = ordinary_nerve(&FinCat::arrow(), 3);
    assert!(sset_iso(&a.sset, &standard_simplex(1, 3)).is_some());
    let z2 = ordinary_nerve(&FinCat::cyclic(2), 3);
    assert_eq!(z2.sset.counts(), vec![1, 2, 4, 8]);
    assert_eq!(z2.sset.nondegenerate_counts(), vec![1, 1, 1, 1]);
    assert!(validate_sset(&z2.sset).is_ok());
    assert!(horn_check(&z2.sset, HornMode::All, 3).unwrap().is_ok());
    let z2z2 = ordinary_nerve(&FinCat::from_monoid(&["00", "10", "01", "11"], &(0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect::<Vec<_>>()).unwrap(), 3);
    assert!(sset_iso(&binary_product(&z2.sset, &z2.sset).unwrap(), &z2z2.sset).is_some());
}

#[test]
fn nerves_of_categories_are_quasicategories() {
    for name in corpus::CATEGORY_NAMES {
        let d = corpus::category(name).unwrap();
        let n = ordinary_nerve(&d, 3);
        assert!(validate_sset(&n.sset).is_ok(), "{name}");
        assert!(horn_check(&n.sset, HornMode::Inner, 3).unwrap().is_ok(), "{name}");
    }
    let groupoid = ordinary_nerve(&FinCat::indiscrete(&["0", "1"]), 3);
    assert!(horn_check(&groupoid.sset, HornMode::All, 3).unwrap().is_ok());
    assert!(!horn_check(&ordinary_nerve(&FinCat::arrow(), 3).sset, HornMode::All, 2).unwrap().is_ok());
}

#[test]
fn opposite_nerve_of_arrow() {
    let a = FinCat::arrow();
    let lhs = opposite_sset(&ordinary_nerve(&a, 3).sset);
    let rhs = ordinary_nerve(&a.opposite(), 3).sset;
    assert!(sset_iso(&lhs, &rhs).is_some());
}

#[test]
fn natural_markings_of_nerves() {
    let z2 = ordinary_nerve(&FinCat::cyclic(2), 2);
    assert_eq!(crate::sset::mark_natural(&z2.sset).unwrap().marked.len(), z2.sset.count(1));
    let arrow = ordinary_nerve(&FinCat::arrow(), 2);
    let m = crate::sset::mark_natural(&arrow.sset).unwrap();
    assert!(m.marked.iter().all(|&e| arrow.sset.is_degenerate(1, e)));
    assert_eq!(m.marked.len(), 2);
    let groupoid = ordinary_nerve(&FinCat::indiscrete(&["0", "1"]), 2);
    assert_eq!(crate::sset::mark_natural(&groupoid.sset).unwrap().marked.len(), 4);
}

/// Counts strictly increasing flags `∅ = U_0 ⊊ U_1 ⊊ ... ⊊ U_r = S` in the
/// Boolean lattice, by recursion on the last step.
fn flags_to(set: u64) -> usize {
    if set == 0 {
        return 1;
    }
    let mut total = 0;
    let mut sub = (set - 1) & set;
    loop {
        total += flags_to(sub);
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & set;
    }
    total
}

#[test]
fn bead_shapes() {
    let two = enumerate_bead_shapes(&[0, 3]).unwrap();
    assert_eq!(two.len(), 1);
    assert_eq!(two[0].to_string(), "⟨03⟩");
    assert_eq!(two[0].dim(), 0);
    let big = enumerate_bead_shapes(&[0, 1, 2, 3, 5, 6]).unwrap();
    let example = BeadShape { blocks: vec![mask_of(&[0, 6]), mask_of(&[3]), mask_of(&[1, 2, 5])] };
    assert!(big.contains(&example));
    assert_eq!(example.to_string(), "⟨06|3|125⟩");
    assert_eq!(example.dim(), 2);
    let four: Vec<String> = enumerate_bead_shapes(&[0, 1, 2, 3]).unwrap().iter().map(|b| b.to_string()).collect();
    let mut sorted = four.clone();
    sorted.sort();
    assert_eq!(sorted, vec!["⟨03|12⟩", "⟨03|1|2⟩", "⟨03|2|1⟩"]);
    assert_eq!(four[0], "⟨03|12⟩");
    assert!(enumerate_bead_shapes(&[4]).is_err());
    for size in 2..=7usize {
        let ground: Vec<usize> = (0..size).collect();
        let shapes = enumerate_bead_shapes(&ground).unwrap();
        assert!(shapes.iter().all(BeadShape::is_valid));
        assert!(shapes.windows(2).all(|w| w[0].dim() <= w[1].dim()));
        let interior = if size > 2 { mask_of(&ground[1..size - 1]) } else { 0 };
        assert_eq!(shapes.len(), flags_to(interior), "|I| = {size}");
    }
}

#[test]
fn discrete_coherent_nerve_is_ordinary_nerve() {
    for name in corpus::CATEGORY_NAMES {
        let d = corpus::category(name).unwrap();
        let coherent = coherent_nerve(&discrete_scat(&d, 2), 3).unwrap();
        let ordinary = ordinary_nerve(&d, 3);
        assert_eq!(coherent.sset.counts(), ordinary.sset.counts(), "{name}");
        assert!(sset_iso(&coherent.sset, &ordinary.sset).is_some(), "{name}");
    }
}

#[test]
fn two_simplex_layout() {
    let cat = BeadCatalog::new(2);
    let shapes: Vec<String> = cat.beads.iter().map(|b| b.shape().to_string()).collect();
    assert_eq!(shapes, vec!["⟨01⟩", "⟨02⟩", "⟨12⟩", "⟨02|1⟩"]);
    // the edge S_⟨02|1⟩ runs from S_⟨02⟩ to the composite S_⟨12⟩ S_⟨01⟩
    let k = corpus::egroupoid(1);
    let nerve = coherent_nerve(&k, 2).unwrap();
    let hom = k.hom(0, 0);
    for x in 0..nerve.sset.count(2) {
        let s = nerve.simplex(2, x);
        let (s01, s02, s12, e) = (s.cells[0], s.cells[1], s.cells[2], s.cells[3]);
        assert_eq!(hom.face(1, 1, e), s02);
        assert_eq!(hom.face(1, 0, e), k.compose(0, 0, 0, 0, s12, s01));
    }
    // three free vertices, and exactly one edge of E(Z/2) between any two vertices
    assert_eq!(nerve.sset.count(2), 8);
}

#[test]
fn coherent_nerves_of_locally_kan_fixtures() {
    for k in [corpus::egroupoid(2), discrete_scat(&FinCat::commutative_square(), 2), discrete_scat(&FinCat::cyclic(3), 2)] {
        let nerve = coherent_nerve(&k, 3).unwrap();
        assert!(validate_sset(&nerve.sset).is_ok());
        assert!(horn_check(&nerve.sset, HornMode::Inner, 3).unwrap().is_ok());
    }
    assert!(coherent_nerve(&corpus::egroupoid(1), 3).is_err());
}

#[test]
fn coherent_nerve_preserves_products() {
    let c = corpus::egroupoid(1);
    let d = discrete_scat(&FinCat::arrow(), 1);
    let lhs = coherent_nerve(&scat_product(&c, &d).unwrap(), 2).unwrap();
    let rhs = binary_product(&coherent_nerve(&c, 2).unwrap().sset, &coherent_nerve(&d, 2).unwrap().sset).unwrap();
    assert!(sset_iso(&lhs.sset, &rhs).is_some());
}

#[test]
fn opcommute_is_canonical() {
    for name in corpus::SCAT_NAMES {
        let c = corpus::scat(name, 2).unwrap();
        let nerve = coherent_nerve(&c, 3).unwrap();
        let nerve_op = coherent_nerve(&opposite_scat(&c), 3).unwrap();
        let phi = opcommute_map(&nerve_op, &nerve).unwrap();
        let target = opposite_sset(&nerve.sset);
        assert!(phi.is_bijective(&target), "{name}");
        assert!(phi.validate(&nerve_op.sset, &target).is_ok(), "{name}");
    }
}

#[test]
fn reindexing() {
    let k = corpus::egroupoid(2);
    let nerve = coherent_nerve(&k, 3).unwrap();
    for n in 0..=2 {
        let from = &nerve.catalogs[n];
        for x in 0..nerve.sset.count(n) {
            let s = nerve.simplex(n, x);
            assert!(check_boundary(&k, s, from));
            assert_eq!(&reindex_coherent(&k, s, from, from, &crate::simplex::identity(n)), s);
            for i in 0..=n {
                let to = &nerve.catalogs[n + 1];
                let d = reindex_coherent(&k, s, from, to, &crate::simplex::codegeneracy(n, i));
                assert!(check_boundary(&k, &d, to));
                assert!(nerve.sset.is_degenerate(n + 1, nerve.find(n + 1, &d).unwrap()));
            }
        }
    }
    // any operator equals the composite of its faces and degeneracies
    for n in 0..=3 {
        for m in 0..=3 {
            for alpha in monotone_maps(m, n) {
                for x in 0..nerve.sset.count(n).min(40) {
                    let direct = reindex_coherent(&k, nerve.simplex(n, x), &nerve.catalogs[n], &nerve.catalogs[m], &alpha);
                    assert_eq!(nerve.find(m, &direct), Some(nerve.sset.act(n, x, &alpha)));
                }
            }
        }
    }
}

#[test]
fn relative_nerve_examples() {
    let square = FinCat::commutative_square();
    let point = DiagramSSet::constant(&square, &standard_simplex(0, 3));
    let rel = relative_nerve(&point, 3).unwrap();
    assert!(sset_iso(&rel.sset, &ordinary_nerve(&square, 3).sset).is_some());
    assert!(rel.projection.is_bijective(&rel.base_nerve.sset));

    let x = coherent_nerve(&corpus::egroupoid(2), 3).unwrap().sset;
    let over_point = DiagramSSet::constant(&FinCat::terminal(), &x);
    let rel = relative_nerve(&over_point, 3).unwrap();
    assert!(sset_iso(&rel.sset, &x).is_some());

    let bz2 = ordinary_nerve(&FinCat::cyclic(2), 3).sset;
    let f = DiagramSSet::constant(&FinCat::arrow(), &bz2);
    let rel = relative_nerve(&f, 3).unwrap();
    assert_eq!(rel.sset.count(1), 6);
    assert!(validate_sset(&rel.sset).is_ok());
    assert!(rel.projection.validate(&rel.sset, &rel.base_nerve.sset).is_ok());
    for n in 0..=3 {
        for s in 0..rel.sset.count(n) {
            assert!(RelativeNerve::is_valid_simplex(&f, rel.simplex(n, s), n));
        }
    }
    assert!(relative_nerve(&f, 4).is_err());
}

#[test]
fn relative_nerve_fibers() {
    let x = coherent_nerve(&corpus::egroupoid(2), 3).unwrap().sset;
    let f = DiagramSSet::constant(&FinCat::arrow(), &x);
    let rel = relative_nerve(&f, 3).unwrap();
    for n in 0..=3 {
        let hit: std::collections::HashSet<_> = rel.projection.assign[n].iter().collect();
        assert_eq!(hit.len(), rel.base_nerve.sset.count(n));
    }
    // the fibre over each vertex: cells over the degenerate chain at d
    for d in 0..2 {
        let counts: Vec<usize> = (0..=3)
            .map(|n| {
                let chain = rel.base_nerve.sset.degenerate_vertex(d, n);
                rel.projection.assign[n].iter().filter(|&&c| c == chain).count()
            })
            .collect();
        assert_eq!(counts, x.counts());
    }
}

proptest! {
    #[test]
    fn coherent_product_counts(a in 0usize..4, b in 0usize..4) {
        let names = ["terminal", "arrow", "bz2", "two_points"];
        let c = corpus::scat(names[a], 1).unwrap();
        let d = corpus::scat(names[b], 1).unwrap();
        let lhs = coherent_nerve(&scat_product(&c, &d).unwrap(), 2).unwrap().sset;
        let rhs = binary_product(&coherent_nerve(&c, 2).unwrap().sset, &coherent_nerve(&d, 2).unwrap().sset).unwrap();
        prop_assert_eq!(lhs.counts(), rhs.counts());
        prop_assert_eq!(lhs.nondegenerate_counts(), rhs.nondegenerate_counts());
    }
}
