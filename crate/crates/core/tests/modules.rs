mod common;

use common::example_algebra;
use syzygy::algebra::{
    cosyzygy, decompose, is_projective, isomorphism, lambda_dual, proj_cosyzygy, stable_hom, strip_projectives, syzygy,
    transpose, FdModule,
};
use syzygy::homological::{check_g_n, global_dimension, iwanaga_gorenstein, GDimReport};

#[test]
fn arrow_syzygy_of_top_simple_is_socle_simple() {
    let a = example_algebra("arrow.json");
    let s = FdModule::simples(&a);
    assert!(isomorphism(&syzygy(&s[0]), &s[1]).unwrap().is_some());
    assert!(is_projective(&s[1]));
    assert!(!is_projective(&s[0]));
}

#[test]
fn arrow_cosyzygy_of_socle_simple_is_top_simple() {
    let a = example_algebra("arrow.json");
    let s = FdModule::simples(&a);
    assert!(isomorphism(&cosyzygy(&s[1]), &s[0]).unwrap().is_some());
    // the socle simple is projective: its projective approximation is the identity
    assert_eq!(proj_cosyzygy(&s[1]).unwrap().dim(), 0);
}

#[test]
fn arrow_transpose_of_projective_vanishes() {
    let a = example_algebra("arrow.json");
    let s = FdModule::simples(&a);
    assert_eq!(transpose(&s[1]).unwrap().dim(), 0);
    let t = transpose(&s[0]).unwrap();
    assert_eq!(t.dim(), 1);
    assert!(t.algebra().same_as(&a.opposite()));
}

#[test]
fn arrow_homological_invariants() {
    let a = example_algebra("arrow.json");
    assert_eq!(global_dimension(&a, 10), GDimReport::Finite(1));
    assert_eq!(iwanaga_gorenstein(&a, 10), Some(1));
    let projectives: Vec<FdModule> = (0..2).map(|i| FdModule::indecomposable_projective(&a, i)).collect();
    let mut all = projectives.clone();
    all.extend(FdModule::simples(&a));
    assert!(check_g_n(&all, 1, 10).unwrap());
}

#[test]
fn lambda_dual_of_regular_is_regular() {
    let a = example_algebra("kt2.json");
    let star = lambda_dual(&FdModule::regular(&a)).unwrap();
    assert_eq!(star.module.dim(), a.dim());
    assert!(is_projective(&star.module));
}

#[test]
fn stable_hom_kills_projective_maps() {
    let a = example_algebra("kt2.json");
    let k = FdModule::simple(&a, 0);
    let reg = FdModule::regular(&a);
    assert_eq!(stable_hom(&k, &reg).unwrap().dim, 0);
    assert_eq!(stable_hom(&k, &k).unwrap().dim, 1);
    let sum = FdModule::direct_sum(&[&k, &reg, &k]).unwrap();
    let parts = decompose(&sum).unwrap();
    assert_eq!(parts.iter().map(|(_, n)| *n).collect::<Vec<_>>(), vec![2, 1]);
    assert_eq!(strip_projectives(&sum).unwrap().len(), 1);
}
