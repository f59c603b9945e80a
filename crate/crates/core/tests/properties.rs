mod common;

use proptest::prelude::*;

use common::{cyclic_nakayama, hom_dim_oracle, linear_nakayama, small_catalog, stably_isomorphic};
use syzygy::algebra::{
    cosyzygy, decompose, hom_space, isomorphism, proj_cosyzygy, projective_cover, splice_syzygy_sequence, stable_hom,
    syzygy, transpose, Algebra, FdModule, ShortExact,
};
use syzygy::homological::{
    global_dimension, is_gorenstein_projective, is_selfinjective, iwanaga_gorenstein, GDimReport,
};
use syzygy::linalg::{Field, Mat, Poly};
use syzygy::mf::{mf_check, mf_cokernel, mf_syzygy, MatrixFactorization};
use syzygy::pipeline::analyze;

fn field_strategy() -> impl Strategy<Value = Field> {
    prop_oneof![Just(0u32), Just(2), Just(3), Just(5), Just(7), Just(101)]
        .prop_map(|c| Field::from_characteristic(c).unwrap())
}

fn mat_strategy() -> impl Strategy<Value = (Field, usize, usize, Vec<i64>)> {
    (field_strategy(), 1usize..6, 1usize..6)
        .prop_flat_map(|(f, r, c)| (Just(f), Just(r), Just(c), proptest::collection::vec(-3i64..=3, r * c)))
}

/// A catalog module, picked by indices into the small catalog over `field`.
fn catalog_module(field: Field, a: usize, m: usize) -> FdModule {
    let cat = small_catalog(field);
    let (_, _, ms) = &cat[a % cat.len()];
    ms[m % ms.len()].clone()
}

fn random_invertible(field: Field, n: usize, seed: &[i64]) -> Mat {
    // unit lower triangular times unit upper triangular
    let mut l = Mat::identity(field, n);
    let mut u = Mat::identity(field, n);
    let mut it = seed.iter().cycle();
    for r in 0..n {
        for c in 0..r {
            l[(r, c)] = field.from_i64(*it.next().unwrap());
            u[(c, r)] = field.from_i64(*it.next().unwrap());
        }
    }
    &l * &u
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 32, ..ProptestConfig::default() })]

    #[test]
    fn rank_nullity((f, r, c, e) in mat_strategy()) {
        let m = Mat::from_i64(f, r, c, &e);
        let k = m.kernel_basis();
        prop_assert_eq!(m.rank() + k.cols(), c);
        prop_assert!((&m * &k).is_zero());
        let (red, pivots) = m.rref();
        prop_assert_eq!(red.rref().0, red.clone());
        prop_assert_eq!(pivots.len(), m.rank());
        prop_assert_eq!(m.transpose().rank(), m.rank());
    }

    #[test]
    fn inverse_is_two_sided(f in field_strategy(), n in 1usize..5, seed in proptest::collection::vec(-4i64..=4, 16)) {
        let m = random_invertible(f, n, &seed);
        let inv = m.inverse().unwrap();
        prop_assert_eq!(&m * &inv, Mat::identity(f, n));
        prop_assert_eq!(&inv * &m, Mat::identity(f, n));
    }

    #[test]
    fn polynomial_gcd_identity(f in field_strategy(), a in proptest::collection::vec(-5i64..=5, 1..6), b in proptest::collection::vec(-5i64..=5, 1..6)) {
        let pa = Poly::new(f, a.iter().map(|&c| f.from_i64(c)).collect());
        let pb = Poly::new(f, b.iter().map(|&c| f.from_i64(c)).collect());
        prop_assume!(!pa.is_zero() || !pb.is_zero());
        let (g, s, t) = pa.ext_gcd(&pb);
        prop_assert_eq!(s.mul(&pa).add(&t.mul(&pb)), g.clone());
        prop_assert!(pa.rem(&g).is_zero());
        prop_assert!(pb.rem(&g).is_zero());
        let printed = Poly::parse(f, &pa.to_string());
        if !pa.is_zero() {
            prop_assert_eq!(printed.unwrap(), pa);
        }
    }

    #[test]
    fn swap_is_an_involution(f in field_strategy(), n in 2usize..7, i in 1usize..6, a in -3i64..=3, c in 1i64..=4) {
        prop_assume!(i < n);
        let c = f.from_i64(c);
        prop_assume!(!c.is_zero());
        let lin = Poly::linear(f, &f.from_i64(a));
        let poly = lin.pow(n).scale(&c);
        let mf = MatrixFactorization::rank_one(&poly, lin.pow(i), lin.pow(n - i).scale(&c)).unwrap();
        prop_assert!(mf_check(mf.phi(), mf.psi(), &poly).unwrap());
        prop_assert_eq!(mf_syzygy(&mf_syzygy(&mf)), mf.clone());
        prop_assert_eq!(mf_cokernel(&mf).unwrap().module.dim(), i);
    }

    #[test]
    fn rebased_modules_are_isomorphic(a in 0usize..16, x in 0usize..8, y in 0usize..8, seed in proptest::collection::vec(-3i64..=3, 40)) {
        let f = Field::rationals();
        let mx = catalog_module(f, a, x);
        let my = catalog_module(f, a, y);
        let sum = FdModule::direct_sum(&[&mx, &my]).unwrap();
        let p = random_invertible(f, sum.dim(), &seed);
        let moved = sum.rebase(&p).unwrap();
        prop_assert!(isomorphism(&sum, &moved).unwrap().is_some());
        let dims = |m: &FdModule| decompose(m).unwrap().iter().map(|(s, k)| (s.dim(), *k)).collect::<Vec<_>>();
        prop_assert_eq!(dims(&sum), dims(&moved));
        prop_assert_eq!(hom_space(&mx, &moved).unwrap().len(), hom_dim_oracle(&mx, &sum));
    }

    #[test]
    fn transpose_twice_is_stably_identity(a in 0usize..16, x in 0usize..8) {
        let m = catalog_module(Field::rationals(), a, x);
        let tt = transpose(&transpose(&m).unwrap()).unwrap();
        prop_assert!(tt.algebra().same_as(m.algebra()));
        prop_assert!(stably_isomorphic(&tt, &m));
    }

    #[test]
    fn cosyzygy_inverts_syzygy_over_selfinjective(a in 0usize..16, x in 0usize..8) {
        let m = catalog_module(Field::rationals(), a, x);
        prop_assume!(is_selfinjective(m.algebra()));
        let back = cosyzygy(&syzygy(&m));
        prop_assert!(stably_isomorphic(&back, &m));
        prop_assert!(stably_isomorphic(&proj_cosyzygy(&m).unwrap(), &cosyzygy(&m)));
    }

    #[test]
    fn splice_joints_are_exact(a in 0usize..16, x in 0usize..8, y in 0usize..8, split in any::<bool>()) {
        let f = Field::rationals();
        let m = catalog_module(f, a, x);
        let s = if split {
            ShortExact::split(&m, &catalog_module(f, a, y)).unwrap()
        } else {
            let cover = projective_cover(&m);
            let incl = cover.surjection.kernel_basis();
            let omega = cover.projective.module.submodule(&incl);
            ShortExact::new(omega, cover.projective.module.clone(), m, incl, cover.surjection).unwrap()
        };
        let seq = splice_syzygy_sequence(&s, 6).unwrap();
        for t in &seq.sequences {
            prop_assert!(t.verify().is_ok());
        }
        let terms = seq.terms();
        let maps = seq.maps();
        for k in 0..maps.len() - 1 {
            let composite = maps[k] * maps[k + 1];
            prop_assert!(stable_hom(terms[k + 2], terms[k]).unwrap().is_stably_zero(&composite).unwrap());
        }
    }

    #[test]
    fn finite_global_dimension_means_trivial(f in field_strategy(), n in 1usize..5, len in 2usize..5, cyclic in any::<bool>()) {
        let a = if cyclic { cyclic_nakayama(f, n, len) } else { linear_nakayama(f, n.max(2), len) };
        let r = analyze("random", &a, 12);
        prop_assert!(r.is_consistent(), "{:?}", r.inconsistencies);
        if r.gldim.finite().is_some() {
            prop_assert_eq!(r.dsg_label(), "trivial");
        }
        if cyclic {
            prop_assert!(r.selfinjective);
            prop_assert!(r.gldim.is_infinite());
        } else {
            prop_assert!(matches!(r.gldim, GDimReport::Finite(_)));
        }
    }

    #[test]
    fn high_syzygies_of_simples_are_gp(f in field_strategy(), n in 2usize..4, len in 2usize..4, extra in 0usize..2) {
        let a = if extra == 0 { cyclic_nakayama(f, n, len) } else { linear_nakayama(f, n + 1, len) };
        if let Some(g) = iwanaga_gorenstein(&a, 12) {
            for s in FdModule::simples(&a) {
                let top = (0..g).fold(s, |m, _| syzygy(&m));
                prop_assert!(is_gorenstein_projective(&top, 12).unwrap().is_gp);
            }
        }
    }
}

#[test]
fn catalog_sweep_has_no_violations() {
    for field in common::fields() {
        let bad = common::property_violations(field);
        assert!(bad.is_empty(), "{field}: {bad:#?}");
    }
}

#[test]
fn global_dimension_of_linear_nakayama() {
    // 1 -> 2 -> 3 with the length-two path zero
    let a = linear_nakayama(Field::rationals(), 3, 2);
    assert_eq!(global_dimension(&a, 10), GDimReport::Finite(2));
    let b = Algebra::product_of_fields(Field::rationals(), 3);
    assert_eq!(global_dimension(&b, 10), GDimReport::Finite(0));
}
