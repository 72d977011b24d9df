use proptest::prelude::*;

use super::*;
use crate::simplex::monotone_maps;

#[test]
fn standard_simplex_counts() {
    let pt = standard_simplex(0, 2);
    assert_eq!(pt.counts(), vec![1, 1, 1]);
    let d1 = standard_simplex(1, 1);
    assert_eq!(d1.counts(), vec![2, 3]);
    assert_eq!(d1.nondegenerate_counts(), vec![2, 1]);
    let d2 = standard_simplex(2, 2);
    // C(k+3, k+1)
    assert_eq!(d2.counts(), vec![3, 6, 10]);
    assert!(validate_sset(&standard_simplex(2, 3)).is_ok());
}

#[test]
fn corrupted_face_is_reported() {
    let x = standard_simplex(2, 2);
    let mut face: Vec<Vec<Vec<CellId>>> = (0..=2).map(|k| (0..if k == 0 { 0 } else { k + 1 }).map(|i| x.face_table(k, i).to_vec()).collect()).collect();
    let degen = (0..=2).map(|k| (0..if k < 2 { k + 1 } else { 0 }).map(|i| x.degen_table(k, i).to_vec()).collect()).collect();
    let top = x.find(2, "012").unwrap();
    // send d_1 of the top cell to a wrong edge
    face[2][1][top] = x.find(1, "01").unwrap();
    let names = (0..=2).map(|k| x.names(k).to_vec()).collect();
    let bad = TruncatedSSet::from_tables(2, names, face, degen).unwrap();
    let report = validate_sset(&bad);
    assert!(!report.is_ok());
    assert!(report.mentions("012"));
}

#[test]
fn opposite_is_an_involution() {
    let x = standard_simplex(3, 3);
    assert_eq!(opposite_sset(&opposite_sset(&x)), x);
    let y = standard_simplex(2, 2);
    assert!(sset_iso(&opposite_sset(&y), &y).is_some());
}

#[test]
fn square_product_counts() {
    let d1 = standard_simplex(1, 2);
    let sq = binary_product(&d1, &d1).unwrap();
    assert_eq!(sq.counts(), vec![4, 9, 16]);
    // independent classification: a pair is degenerate iff both coordinates repeat at one spot
    let expected: Vec<usize> = (0..=2)
        .map(|k| {
            let maps = monotone_maps(k, 1);
            let mut n = 0;
            for a in &maps {
                for b in &maps {
                    if !(0..k).any(|j| a[j] == a[j + 1] && b[j] == b[j + 1]) {
                        n += 1;
                    }
                }
            }
            n
        })
        .collect();
    assert_eq!(expected, vec![4, 5, 2]);
    assert_eq!(sq.nondegenerate_counts(), expected);
    assert!(validate_sset(&sq).is_ok());
}

#[test]
fn product_with_point_is_unit() {
    let x = standard_simplex(2, 2);
    let p = binary_product(&x, &standard_simplex(0, 2)).unwrap();
    assert!(sset_iso(&p, &x).is_some());
    assert!(binary_product(&x, &standard_simplex(0, 3)).is_err());
}

#[test]
fn pullback_over_point_is_product() {
    let x = standard_simplex(1, 2);
    let y = standard_simplex(2, 2);
    let z = standard_simplex(0, 2);
    let pb = pullback(&SSetMap::to_point(&x), &x, &SSetMap::to_point(&y), &y, &z).unwrap();
    let prod = binary_product(&x, &y).unwrap();
    assert!(sset_iso(&pb.sset, &prod).is_some());
    assert!(pb.proj1.validate(&pb.sset, &x).is_ok());
    assert!(pb.proj2.validate(&pb.sset, &y).is_ok());
}

#[test]
fn pullback_of_inclusion_along_itself() {
    let horn = horn_complex(2, 1, 2).unwrap();
    let simplex = standard_simplex(2, 2);
    let incl = SSetMap::new(
        (0..=2).map(|k| (0..horn.count(k)).map(|c| simplex.find(k, horn.name(k, c)).unwrap()).collect()).collect(),
    );
    assert!(incl.validate(&horn, &simplex).is_ok());
    let pb = pullback(&incl, &horn, &incl, &horn, &simplex).unwrap();
    assert!(sset_iso(&pb.sset, &horn).is_some());
}

#[test]
fn horn_checks() {
    let d3 = standard_simplex(3, 3);
    assert!(horn_check(&d3, HornMode::Inner, 3).unwrap().is_ok());
    let horn = horn_complex(2, 1, 2).unwrap();
    let report = horn_check(&horn, HornMode::Inner, 2).unwrap();
    assert!(!report.is_ok());
    let failure = report.first_failure().unwrap();
    assert_eq!((failure.n, failure.k), (2, 1));
    assert_eq!(failure.witness.as_deref(), Some(&["12".to_string(), "01".to_string()][..]));
    assert!(horn_check(&d3, HornMode::All, 4).is_err());
    assert!(!horn_check(&standard_simplex(1, 2), HornMode::All, 2).unwrap().is_ok());
}

#[test]
fn horn_enumeration_matches_brute_force() {
    let x = standard_simplex(2, 3);
    for n in 1..=3 {
        for k in 0..=n {
            let fast = enumerate_horns(&x, n, k);
            let slots: Vec<usize> = (0..=n).filter(|&i| i != k).collect();
            let mut brute = 0;
            let m = x.count(n - 1);
            let total = m.pow(slots.len() as u32);
            for code in 0..total {
                let mut c = code;
                let ys: Vec<usize> = slots.iter().map(|_| { let v = c % m; c /= m; v }).collect();
                let ok = slots.iter().enumerate().all(|(a, &i)| {
                    slots.iter().enumerate().all(|(b, &j)| i >= j || x.face(n - 1, i, ys[b]) == x.face(n - 1, j - 1, ys[a]))
                });
                if ok {
                    brute += 1;
                }
            }
            assert_eq!(fast.len(), brute, "Λ^{n}_{k}");
        }
    }
}

#[test]
fn iso_search() {
    let x = standard_simplex(2, 3);
    let id = sset_iso(&x, &x).unwrap();
    assert!(id.validate(&x, &x).is_ok());
    let pts = disjoint_union(&[&standard_simplex(0, 1), &standard_simplex(0, 1)]).unwrap();
    assert!(sset_iso(&standard_simplex(1, 1), &pts).is_none());
    // same counts, different shape: two edges out of one vertex vs. two composable edges
    let composable = horn_complex(2, 1, 2).unwrap();
    let spread = horn_complex(2, 0, 2).unwrap();
    assert_eq!(composable.counts(), spread.counts());
    assert!(sset_iso(&composable, &spread).is_none());
    assert!(sset_iso(&horn_complex(2, 0, 2).unwrap(), &opposite_sset(&horn_complex(2, 2, 2).unwrap())).is_some());
}

#[test]
fn markings() {
    let d0 = standard_simplex(0, 2);
    assert_eq!(mark_sharp(&d0).marked.len(), 1);
    let d1 = standard_simplex(1, 2);
    assert_eq!(mark_sharp(&d1).marked.len(), 3);
    assert_eq!(mark_sharp(&d1).opposite(), mark_sharp(&opposite_sset(&d1)));
    let natural = mark_natural(&d1).unwrap();
    let marked: Vec<&str> = natural.marked.iter().map(|&e| d1.name(1, e)).collect();
    assert_eq!(marked, vec!["00", "11"]);
    assert!(mark_natural(&standard_simplex(1, 1)).is_err());
    assert!(matches!(mark_natural(&horn_complex(2, 1, 2).unwrap()), Err(Error::NotInnerFillable(_))));
}

#[test]
fn truncation_and_ez() {
    let x = standard_simplex(1, 3);
    let t = x.truncate(2).unwrap();
    assert_eq!(t.counts(), vec![2, 3, 4]);
    assert!(validate_sset(&t).is_ok());
    let c = x.find(3, "0011").unwrap();
    let ez = x.ez(3, c);
    assert_eq!(x.name(ez.dim, ez.base), "01");
    assert_eq!(ez.surjection, vec![0, 0, 1, 1]);
}

fn arb_map() -> impl Strategy<Value = (usize, usize, Vec<usize>)> {
    (0usize..4, 0usize..4).prop_flat_map(|(m, n)| {
        let maps = monotone_maps(m, n);
        (Just(m), Just(n), proptest::sample::select(maps))
    })
}

proptest! {
    #[test]
    fn act_on_simplex_is_precomposition((m, n, alpha) in arb_map(), cell in 0usize..20) {
        let x = standard_simplex(3, 3);
        let c = cell % x.count(n);
        let got = x.act(n, c, &alpha);
        let expect = crate::simplex::compose(&monotone_maps(n, 3)[c], &alpha);
        prop_assert_eq!(x.name(m, got), expect.iter().map(|v| v.to_string()).collect::<String>());
    }

    #[test]
    fn constructors_validate(n in 0usize..4, cap in 0usize..4, hk in 0usize..3) {
        prop_assert!(validate_sset(&standard_simplex(n, cap)).is_ok());
        prop_assert!(validate_sset(&opposite_sset(&standard_simplex(n, cap))).is_ok());
        if hk <= 2 {
            prop_assert!(validate_sset(&horn_complex(2, hk, cap).unwrap()).is_ok());
        }
        let a = standard_simplex(n.min(2), cap.min(2));
        let b = standard_simplex(1, cap.min(2));
        prop_assert!(validate_sset(&binary_product(&a, &b).unwrap()).is_ok());
    }

    #[test]
    fn natural_marking_commutes_with_opposite(n in 0usize..3) {
        let x = standard_simplex(n, 3);
        prop_assert_eq!(mark_natural(&opposite_sset(&x)).unwrap(), mark_natural(&x).unwrap().opposite());
    }
}
