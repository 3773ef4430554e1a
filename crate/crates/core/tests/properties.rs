mod common;

use std::collections::BTreeMap;

use proptest::prelude::*;

use hopfgc::fixtures::{
    build_corpus, random_family, random_matrix, random_t, random_t_pair, random_z, random_z_pair,
    rng,
};
use hopfgc::turaev::{t_coequalizer, t_coequalizer_mediate, t_equalizer, t_equalizer_mediate};
use hopfgc::zunino::{
    dualize_t, dualize_z, z_coequalizer, z_coequalizer_mediate, z_equalizer, z_equalizer_mediate,
};
use hopfgc::{Field, Matrix, Morphism, TMorphism, ZMorphism};

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::Rationals),
        Just(Field::Prime(2)),
        Just(Field::Prime(5))
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kron_mixed_product(seed: u64, f in field(), dims in prop::array::uniform6(0usize..4)) {
        let mut r = rng(seed);
        let [m, n, p, q, s, t] = dims;
        let a = random_matrix(&mut r, f, m, n);
        let b = random_matrix(&mut r, f, p, q);
        let c = random_matrix(&mut r, f, n, s);
        let d = random_matrix(&mut r, f, q, t);
        let lhs = a.kron(&b).mul(&c.kron(&d)).unwrap();
        let rhs = a.mul(&c).unwrap().kron(&b.mul(&d).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn swap_exchanges_factors(seed: u64, f in field(), m in 0usize..4, n in 0usize..4) {
        let mut r = rng(seed);
        let u = random_matrix(&mut r, f, m, 1);
        let v = random_matrix(&mut r, f, n, 1);
        prop_assert_eq!(Matrix::swap(f, m, n).mul(&u.kron(&v)).unwrap(), v.kron(&u));
        prop_assert_eq!(
            Matrix::swap(f, n, m).mul(&Matrix::swap(f, m, n)).unwrap(),
            Matrix::identity(f, m * n)
        );
    }

    #[test]
    fn rank_nullity(seed: u64, f in field(), rows in 0usize..5, cols in 0usize..5) {
        let a = random_matrix(&mut rng(seed), f, rows, cols);
        let k = a.kernel_matrix();
        prop_assert_eq!(a.rank() + k.cols(), cols);
        prop_assert!(a.mul(&k).unwrap().is_zero());
    }

    #[test]
    fn t_composition_is_associative(seed: u64, f in field()) {
        let mut r = rng(seed);
        let a = random_family(&mut r, f, 3, 3);
        let b = random_family(&mut r, f, 3, 3);
        let c = random_family(&mut r, f, 3, 3);
        let d = random_family(&mut r, f, 3, 3);
        let x = random_t(&mut r, &a, &b).unwrap();
        let y = random_t(&mut r, &b, &c).unwrap();
        let z = random_t(&mut r, &c, &d).unwrap();
        prop_assert_eq!(z.compose(&y).unwrap().compose(&x).unwrap(), z.compose(&y.compose(&x).unwrap()).unwrap());
        prop_assert_eq!(x.compose(&TMorphism::identity(&a)).unwrap(), x.clone());
        prop_assert_eq!(TMorphism::identity(&b).compose(&x).unwrap(), x);
    }

    #[test]
    fn z_composition_is_associative(seed: u64, f in field()) {
        let mut r = rng(seed);
        let a = random_family(&mut r, f, 3, 3);
        let b = random_family(&mut r, f, 3, 3);
        let c = random_family(&mut r, f, 3, 3);
        let d = random_family(&mut r, f, 3, 3);
        let x = random_z(&mut r, &a, &b).unwrap();
        let y = random_z(&mut r, &b, &c).unwrap();
        let z = random_z(&mut r, &c, &d).unwrap();
        prop_assert_eq!(z.compose(&y).unwrap().compose(&x).unwrap(), z.compose(&y.compose(&x).unwrap()).unwrap());
        prop_assert_eq!(ZMorphism::identity(&b).compose(&x).unwrap(), x);
    }

    #[test]
    fn dualization_is_a_contravariant_involution(seed: u64, f in field()) {
        let mut r = rng(seed);
        let a = random_family(&mut r, f, 3, 3);
        let b = random_family(&mut r, f, 3, 3);
        let c = random_family(&mut r, f, 3, 3);
        let x = random_t(&mut r, &a, &b).unwrap();
        let y = random_t(&mut r, &b, &c).unwrap();
        prop_assert_eq!(dualize_z(&dualize_t(&x)), x.clone());
        prop_assert_eq!(
            dualize_t(&y.compose(&x).unwrap()),
            dualize_t(&x).compose(&dualize_t(&y)).unwrap()
        );
        let u = random_z(&mut r, &a, &b).unwrap();
        let v = random_z(&mut r, &b, &c).unwrap();
        prop_assert_eq!(dualize_t(&dualize_z(&u)), u.clone());
        prop_assert_eq!(
            dualize_z(&v.compose(&u).unwrap()),
            dualize_z(&u).compose(&dualize_z(&v)).unwrap()
        );
    }

    #[test]
    fn tensor_is_functorial(seed: u64, f in field()) {
        let mut r = rng(seed);
        let fam: Vec<_> = (0..4).map(|_| random_family(&mut r, f, 2, 2)).collect();
        let x = random_t(&mut r, &fam[0], &fam[1]).unwrap();
        let y = random_t(&mut r, &fam[1], &fam[2]).unwrap();
        let z = random_t(&mut r, &fam[3], &fam[3]).unwrap();
        let w = random_t(&mut r, &fam[3], &fam[3]).unwrap();
        prop_assert_eq!(
            y.compose(&x).unwrap().tensor(&w.compose(&z).unwrap()),
            y.tensor(&w).compose(&x.tensor(&z)).unwrap()
        );
        let s = TMorphism::symmetry(&fam[0], &fam[1]);
        prop_assert_eq!(
            TMorphism::symmetry(&fam[1], &fam[0]).compose(&s).unwrap(),
            TMorphism::identity(&fam[0].tensor(&fam[1]))
        );
    }

    #[test]
    fn t_limits_match_oracle_and_factor(seed: u64, f in field()) {
        let mut r = rng(seed);
        let (phi, psi) = random_t_pair(&mut r, f);
        let eq = t_equalizer(&phi, &psi).unwrap();
        let dims: BTreeMap<Vec<usize>, usize> =
            eq.classes.iter().enumerate().map(|(c, cl)| (cl.clone(), eq.object.dim(c))).collect();
        prop_assert_eq!(dims, common::t_equalizer_dims(&phi, &psi));
        let p = random_family(&mut r, f, 3, 2);
        let u = random_t(&mut r, &p, &eq.object).unwrap();
        let m = t_equalizer_mediate(&phi, &psi, &eq, &eq.inclusion.compose(&u).unwrap()).unwrap();
        prop_assert!(m.unique);
        prop_assert_eq!(m.morphism, u);

        let co = t_coequalizer(&phi, &psi).unwrap();
        prop_assert_eq!(co.projection.compose(&phi).unwrap(), co.projection.compose(&psi).unwrap());
        let dims: BTreeMap<usize, usize> =
            co.agreeing.iter().enumerate().map(|(k, &u)| (u, co.object.dim(k))).collect();
        prop_assert_eq!(dims, common::t_coequalizer_dims(&phi, &psi));
        let q = random_family(&mut r, f, 3, 2);
        if let Some(v) = random_t(&mut r, &co.object, &q) {
            let m = t_coequalizer_mediate(&phi, &psi, &co, &v.compose(&co.projection).unwrap()).unwrap();
            prop_assert_eq!(m.morphism, v);
        }
    }

    #[test]
    fn z_limits_match_oracle_and_factor(seed: u64, f in field()) {
        let mut r = rng(seed);
        let (phi, psi) = random_z_pair(&mut r, f);
        let eq = z_equalizer(&phi, &psi).unwrap();
        prop_assert_eq!(phi.compose(&eq.inclusion).unwrap(), psi.compose(&eq.inclusion).unwrap());
        let dims: BTreeMap<usize, usize> =
            eq.agreeing.iter().enumerate().map(|(k, &x)| (x, eq.object.dim(k))).collect();
        prop_assert_eq!(dims, common::z_equalizer_dims(&phi, &psi));
        let p = random_family(&mut r, f, 3, 2);
        if let Some(u) = random_z(&mut r, &p, &eq.object) {
            let m = z_equalizer_mediate(&phi, &psi, &eq, &eq.inclusion.compose(&u).unwrap()).unwrap();
            prop_assert_eq!(m.morphism, u);
        }

        let co = z_coequalizer(&phi, &psi).unwrap();
        prop_assert_eq!(co.projection.compose(&phi).unwrap(), co.projection.compose(&psi).unwrap());
        let dims: BTreeMap<Vec<usize>, usize> =
            co.classes.iter().enumerate().map(|(c, cl)| (cl.clone(), co.object.dim(c))).collect();
        prop_assert_eq!(dims, common::z_coequalizer_dims(&phi, &psi));
        let q = random_family(&mut r, f, 3, 2);
        let v = random_z(&mut r, &co.object, &q).unwrap();
        let m = z_coequalizer_mediate(&phi, &psi, &co, &v.compose(&co.projection).unwrap()).unwrap();
        prop_assert!(m.unique);
        prop_assert_eq!(m.morphism, v);
    }
}

#[test]
fn corpus_is_deterministic() {
    for f in [Field::Rationals, Field::Prime(3)] {
        let a = build_corpus(f);
        let b = build_corpus(f);
        for (x, y) in a.hopf.iter().zip(&b.hopf) {
            assert_eq!(x.value, y.value, "{}", x.id);
        }
        for (x, y) in a.hopf_modules.iter().zip(&b.hopf_modules) {
            assert_eq!(x.value, y.value, "{}", x.id);
        }
    }
}
