//! Deterministic test corpus: Hopf structures over the built-in groups,
//! crossed structures, Hopf and Yetter-Drinfeld modules, single-entry
//! mutations with the laws they are expected to break, and seeded random
//! morphisms for the (co)equalizer checks.

use std::collections::BTreeSet;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::category::{Family, Morphism};
use crate::field::Field;
use crate::hopf::{
    constant_family, graded_dual_crossed, graded_group_algebra, group_hopf_algebra, trivial_hopf,
    CrossedHopfGC, HopfGA, HopfGC,
};
use crate::matrix::Matrix;
use crate::modules::{TComodule, THopfModule};
use crate::report::Report;
use crate::setcat::{cyclic, s3, Group, Homomorphism, RightGSet, SetHopfModule};
use crate::turaev::TMorphism;
use crate::yd::YdModule;
use crate::zunino::ZMorphism;

pub type Laws = BTreeSet<String>;

fn laws(names: &[&str]) -> Laws {
    names.iter().map(|s| s.to_string()).collect()
}

#[derive(Clone, Debug, PartialEq)]
pub enum Structure {
    Coalgebra(HopfGC),
    Algebra(HopfGA),
}

impl Structure {
    pub fn verify(&self) -> Report {
        match self {
            Structure::Coalgebra(h) => h.verify(),
            Structure::Algebra(h) => h.verify(),
        }
    }

    pub fn dual(&self) -> Structure {
        match self {
            Structure::Coalgebra(h) => Structure::Algebra(h.dual()),
            Structure::Algebra(h) => Structure::Coalgebra(h.dual()),
        }
    }
}

/// One corpus item with the laws it is expected to fail (empty for a
/// passing entry).
#[derive(Clone, Debug)]
pub struct Entry<T> {
    pub id: String,
    pub constructor: String,
    pub value: T,
    pub expected: Laws,
}

impl<T> Entry<T> {
    fn pass(id: &str, constructor: &str, value: T) -> Entry<T> {
        Entry {
            id: id.into(),
            constructor: constructor.into(),
            value,
            expected: Laws::new(),
        }
    }

    fn failing(id: &str, constructor: &str, value: T, expected: &[&str]) -> Entry<T> {
        Entry {
            id: id.into(),
            constructor: constructor.into(),
            value,
            expected: laws(expected),
        }
    }
}

/// Inputs for the conjugacy-class construction.
#[derive(Clone, Debug)]
pub struct LiftInput {
    pub crossed: CrossedHopfGC,
    pub element: usize,
    pub lambda: Matrix,
    pub rho: Vec<Matrix>,
    /// Whether the construction must be refused.
    pub refused: bool,
}

#[derive(Clone, Debug)]
pub struct Corpus {
    pub field: Field,
    pub hopf: Vec<Entry<Structure>>,
    pub crossed: Vec<Entry<CrossedHopfGC>>,
    pub comodules: Vec<Entry<TComodule>>,
    pub hopf_modules: Vec<Entry<THopfModule>>,
    pub yd: Vec<Entry<YdModule>>,
    pub lifts: Vec<Entry<LiftInput>>,
}

impl LiftInput {
    /// Failed laws of the lift, or `{"refused"}` when the choices of
    /// conjugator disagree.
    pub fn failed_laws(&self) -> crate::error::Result<Laws> {
        match crate::yd::conjugacy_class_lift(&self.crossed, self.element, &self.lambda, &self.rho)
        {
            Ok(l) => Ok(l.report.failed_laws()),
            Err(crate::error::Error::IllDefined { .. }) => Ok(laws(&["refused"])),
            Err(e) => Err(e),
        }
    }
}

pub fn c2() -> Group {
    cyclic(2, "s")
}

/// kΓ repeated over `G`.
pub fn constant(field: Field, gamma: &Group, g: &Group) -> HopfGC {
    constant_family(&group_hopf_algebra(field, gamma).expect("group algebra"), g)
        .expect("constant family")
}

/// Dual of kS3 graded by the sign.
pub fn s3_fiber_dual(field: Field) -> HopfGC {
    graded_group_algebra(field, &Homomorphism::sign())
        .expect("graded")
        .dual()
}

/// Classical YD module over kC2 (generator `x`): `M = k²` graded by
/// `e1 ↦ 1`, `e2 ↦ x`, with `x` acting as `diag(1, -1)`.
pub fn classical_yd(field: Field) -> YdModule {
    let h = group_hopf_algebra(field, &cyclic(2, "x")).expect("kC2");
    YdModule::point(&h, vec![classical_rho(field)], classical_psi(field)).expect("classical YD")
}

fn classical_rho(field: Field) -> Matrix {
    Matrix::from_rows_i64(field, &[vec![1, 0], vec![0, 0], vec![0, 0], vec![0, 1]])
}

fn classical_psi(field: Field) -> Matrix {
    Matrix::from_rows_i64(field, &[vec![1, 1, 0, 0], vec![0, 0, 1, -1]])
}

/// The classical YD data spread over the regular C2-set with `ν ≡ 1`,
/// over the constant family `kC2` on C2.
pub fn spread_yd(field: Field) -> YdModule {
    let g = c2();
    let h = constant(field, &cyclic(2, "x"), &g);
    let carrier = RightGSet::regular(&g);
    let comodule = TComodule::constant(
        h.coalgebra.clone(),
        carrier,
        2,
        vec![classical_rho(field); 2],
    )
    .expect("comodule");
    let module = crate::modules::TModule::new(
        h.clone(),
        g.labels().to_vec(),
        vec![2, 2],
        vec![g.unit(); 2],
        vec![classical_psi(field); 2],
    )
    .expect("module");
    YdModule::new(comodule, module).expect("YD")
}

pub fn build_corpus(field: Field) -> Corpus {
    let f = field;
    let g2 = c2();
    let s3g = s3();
    let kc2 = cyclic(2, "x");
    let kc3 = cyclic(3, "g");
    let one = f.one();

    let const_c2 = constant(f, &kc2, &g2);
    let const_c3 = constant(f, &kc3, &g2);
    let const_s3 = constant(f, &kc2, &s3g);
    let dual_s3 = s3_fiber_dual(f);
    let graded_s3 = graded_group_algebra(f, &Homomorphism::sign()).expect("graded");
    let graded_c4 = graded_group_algebra(f, &Homomorphism::c4_to_c2()).expect("graded");

    let mut hopf = vec![
        Entry::pass(
            "const-kC2-C2",
            "constant_family(kC2, C2)",
            Structure::Coalgebra(const_c2.clone()),
        ),
        Entry::pass(
            "const-kC3-C2",
            "constant_family(kC3, C2)",
            Structure::Coalgebra(const_c3.clone()),
        ),
        Entry::pass(
            "const-kC2-S3",
            "constant_family(kC2, S3)",
            Structure::Coalgebra(const_s3.clone()),
        ),
        Entry::pass(
            "const-k-S3",
            "constant_family(k, S3)",
            Structure::Coalgebra(constant_family(&trivial_hopf(f), &s3g).expect("k")),
        ),
        Entry::pass(
            "kC3",
            "group_hopf_algebra(C3)",
            Structure::Coalgebra(group_hopf_algebra(f, &kc3).expect("kC3")),
        ),
        Entry::pass(
            "graded-S3-sign",
            "graded_group_algebra(S3, sign)",
            Structure::Algebra(graded_s3.clone()),
        ),
        Entry::pass(
            "graded-C4-C2",
            "graded_group_algebra(C4, quotient)",
            Structure::Algebra(graded_c4.clone()),
        ),
        Entry::pass(
            "dual-graded-S3-sign",
            "dual(graded_group_algebra(S3, sign))",
            Structure::Coalgebra(dual_s3.clone()),
        ),
        Entry::pass(
            "dual-graded-C4-C2",
            "dual(graded_group_algebra(C4, quotient))",
            Structure::Coalgebra(graded_c4.dual()),
        ),
    ];
    // Δ_{1,s}(x) gains a 1⊗x term
    let mut m = const_c2.clone();
    m.coalgebra.delta[0][1] = m.coalgebra.delta[0][1].with_entry(1, 1, one.clone());
    hopf.push(Entry::failing(
        "mut-delta-const-kC2-C2",
        "constant_family(kC2, C2), Δ_{1,s}[1⊗x, x] = 1",
        Structure::Coalgebra(m),
        &["coassociativity", "counit", "bialgebra Δ∘μ"],
    ));
    // S_s(1) = 0
    let mut m = const_c3.clone();
    let s = m.antipode.as_mut().expect("antipode");
    s[1] = s[1].with_entry(0, 0, f.zero());
    hopf.push(Entry::failing(
        "mut-antipode-const-kC3-C2",
        "constant_family(kC3, C2), S_s[1, 1] = 0",
        Structure::Coalgebra(m),
        &["antipode S*id", "antipode id*S"],
    ));
    // S_s((13)) = (13) + (12)
    let mut m = graded_s3.clone();
    let s = m.antipode.as_mut().expect("antipode");
    s[1] = s[1].with_entry(0, 1, one.clone());
    hopf.push(Entry::failing(
        "mut-antipode-graded-S3",
        "graded_group_algebra(S3, sign), S_s[(12), (13)] = 1",
        Structure::Algebra(m),
        &["antipode S*id", "antipode id*S"],
    ));

    let transposition = s3g.find("(12)").expect("(12)");
    let crossed = vec![
        Entry::pass(
            "crossed-const-kC2-S3",
            "constant_family(kC2, S3) with φ = id",
            CrossedHopfGC::with_identity(const_s3.clone()).expect("crossed"),
        ),
        Entry::pass(
            "crossed-dual-graded-S3-id",
            "dual(graded(S3, sign)) with φ = id",
            CrossedHopfGC::with_identity(dual_s3.clone()).expect("crossed"),
        ),
        Entry::failing(
            "crossed-dual-graded-S3-section",
            "dual(graded(S3, sign)) with φ_h = conjugation by σ(h), σ(s) = (12)",
            graded_dual_crossed(f, &Homomorphism::sign(), &[s3g.unit(), transposition])
                .expect("crossed"),
            &["conjugation independence"],
        ),
    ];

    let comodules = vec![
        Entry::pass(
            "trivial-comodule-C2",
            "X = regular C2-set, M = k, ρ_g = η_g",
            TComodule::constant(const_c2.coalgebra.clone(), RightGSet::regular(&g2), 1, {
                let mut v = Vec::new();
                for a in g2.elements() {
                    v.push(const_c2.eta[a].clone());
                }
                v
            })
            .expect("comodule"),
        ),
        Entry::pass(
            "grouplike-comodule-S3",
            "X = two fixed points over S3, M = k, ρ_g(m) = m ⊗ x",
            TComodule::constant(
                const_s3.coalgebra.clone(),
                RightGSet::trivial(&s3g, &["a", "b"]),
                1,
                vec![Matrix::unit_vector(f, 2, 1); 6],
            )
            .expect("comodule"),
        ),
    ];

    let unit = Family::unit(f);
    let two = Family::new(f, vec!["a".into(), "b".into()], vec![2, 1]);
    let mut hopf_modules = vec![
        Entry::pass(
            "free-unit-const-kC2-C2",
            "free_hopf_module(k, kC2 over C2)",
            THopfModule::free(&unit, &const_c2).expect("free"),
        ),
        Entry::pass(
            "free-ab-const-kC2-C2",
            "free_hopf_module(({a,b},(2,1)), kC2 over C2)",
            THopfModule::free(&two, &const_c2).expect("free"),
        ),
        Entry::pass(
            "free-unit-dual-S3",
            "free_hopf_module(k, dual graded S3)",
            THopfModule::free(&unit, &dual_s3).expect("free"),
        ),
        Entry::pass(
            "free-unit-dual-C4",
            "free_hopf_module(k, dual graded C4)",
            THopfModule::free(&unit, &graded_c4.dual()).expect("free"),
        ),
        Entry::pass(
            "free-unit-const-kC3-C2",
            "free_hopf_module(k, kC3 over C2)",
            THopfModule::free(&unit, &const_c3).expect("free"),
        ),
        Entry::pass(
            "induced-regular-const-kC2-S3",
            "induced(regular S3, kC2 over S3)",
            THopfModule::induced(&SetHopfModule::regular(&s3g), &const_s3).expect("induced"),
        ),
        Entry::pass(
            "induced-diagonal-dual-S3",
            "induced(diagonal C2 x C2, dual graded S3)",
            THopfModule::induced(&SetHopfModule::diagonal(&g2), &dual_s3).expect("induced"),
        ),
        Entry::pass(
            "free-zero-const-kC2-C2",
            "free_hopf_module(({*}, 0), kC2 over C2)",
            THopfModule::free(&Family::from_dims(f, &[0]), &const_c2).expect("free"),
        ),
    ];
    let mut m = THopfModule::free(&unit, &const_c2).expect("free");
    m.module.weight[0] = 1;
    hopf_modules.push(Entry::failing(
        "mut-weight-free-unit-const-kC2-C2",
        "free_hopf_module(k, kC2 over C2), f(1) = s",
        m,
        &["equivariance"],
    ));
    let mut m = THopfModule::free(&unit, &const_c2).expect("free");
    m.comodule.rho[0][1] = m.comodule.rho[0][1].with_entry(1, 1, one.clone());
    hopf_modules.push(Entry::failing(
        "mut-rho-free-unit-const-kC2-C2",
        "free_hopf_module(k, kC2 over C2), ρ_{1,s}[1⊗x, x] = 1",
        m,
        &["comodule coassociativity", "Hopf module compatibility"],
    ));

    let classical = classical_yd(f);
    let spread = spread_yd(f);
    let point_s3 =
        YdModule::point(&const_s3, vec![classical_rho(f); 6], classical_psi(f)).expect("YD");
    let mut yd = vec![
        Entry::pass(
            "yd-classical-kC2",
            "classical YD over kC2, trivial group",
            classical.clone(),
        ),
        Entry::pass(
            "yd-spread-C2",
            "classical YD spread over regular C2, ν ≡ 1",
            spread.clone(),
        ),
        Entry::pass(
            "yd-point-S3",
            "classical YD at one point over kC2 on S3",
            point_s3,
        ),
        Entry::failing(
            "yd-adjoint-const-kC2-C2",
            "H over V = G adjoint, ν = id, ρ = Δ, ψ = μ",
            YdModule::adjoint_candidate(&const_c2).expect("candidate"),
            &["YD compatibility"],
        ),
    ];
    let mut m = classical.clone();
    m.module.psi[0] = m.module.psi[0].with_entry(1, 1, one.clone());
    yd.push(Entry::failing(
        "mut-psi-yd-classical",
        "classical YD, ψ[e2, e1⊗x] = 1",
        m,
        &["YD compatibility"],
    ));
    let mut m = classical.clone();
    m.comodule.rho[0][0] = m.comodule.rho[0][0].with_entry(0, 1, one.clone());
    yd.push(Entry::failing(
        "mut-rho-yd-classical",
        "classical YD, ρ[e1⊗1, e2] = 1",
        m,
        &[
            "comodule counit",
            "comodule coassociativity",
            "YD compatibility",
        ],
    ));
    let mut m = spread.clone();
    m.module.weight[1] = 1;
    yd.push(Entry::failing(
        "mut-nu-yd-spread",
        "spread YD, ν(s) = s",
        m,
        &["crossed"],
    ));

    let crossed_s3 = CrossedHopfGC::with_identity(const_s3.clone()).expect("crossed");
    let x_elt = 1;
    let eps = const_s3.eps().clone();
    let sign = Matrix::from_rows_i64(f, &[vec![1, -1]]);
    let trivial_rho: Vec<Matrix> = const_s3.eta.clone();
    let grouplike_rho = vec![Matrix::unit_vector(f, 2, x_elt); 6];
    let mut lifts = vec![
        Entry::pass(
            "lift-S3-(12)-trivial",
            "class of (12), M = k trivial, ρ_l(m) = m ⊗ 1",
            LiftInput {
                crossed: crossed_s3.clone(),
                element: transposition,
                lambda: eps.clone(),
                rho: trivial_rho.clone(),
                refused: false,
            },
        ),
        Entry::pass(
            "lift-S3-(12)-sign-grouplike",
            "class of (12), M = k with x ↦ -1, ρ_l(m) = m ⊗ x",
            LiftInput {
                crossed: crossed_s3.clone(),
                element: transposition,
                lambda: sign.clone(),
                rho: grouplike_rho.clone(),
                refused: false,
            },
        ),
        Entry::pass(
            "lift-S3-(123)-sign-grouplike",
            "class of (123), M = k with x ↦ -1, ρ_l(m) = m ⊗ x",
            LiftInput {
                crossed: crossed_s3.clone(),
                element: s3g.find("(123)").expect("(123)"),
                lambda: sign,
                rho: grouplike_rho,
                refused: false,
            },
        ),
        Entry::pass(
            "lift-S3-unit",
            "class of 1, M = k trivial, ρ_l(m) = m ⊗ 1",
            LiftInput {
                crossed: crossed_s3,
                element: s3g.unit(),
                lambda: eps,
                rho: trivial_rho,
                refused: false,
            },
        ),
    ];
    let dual_id = CrossedHopfGC::with_identity(dual_s3.clone()).expect("crossed");
    let dual_sec = graded_dual_crossed(f, &Homomorphism::sign(), &[s3g.unit(), transposition])
        .expect("crossed");
    // M = k with the odd functions acting by evaluation at (12)
    let at_12 = Matrix::from_rows_i64(f, &[vec![1, 0, 0]]);
    let unit_rho: Vec<Matrix> = dual_id.hopf.eta.clone();
    // f((12)y) and f(y(12)) differ, so the trivial coaction is incompatible
    lifts.push(Entry::failing(
        "lift-dual-S3-s-id",
        "dual graded S3 with φ = id, class of s, M = k via evaluation at (12)",
        LiftInput {
            crossed: dual_id.clone(),
            element: 1,
            lambda: at_12,
            rho: unit_rho.clone(),
            refused: false,
        },
        &[
            "conjugated condition (h = 1)",
            "g-YD condition (α = g)",
            "left-right YD compatibility",
        ],
    ));
    lifts.push(Entry::pass(
        "lift-dual-S3-1-id",
        "dual graded S3 with φ = id, class of 1, M = k via evaluation at 1",
        LiftInput {
            crossed: dual_id,
            element: 0,
            lambda: Matrix::from_rows_i64(f, &[vec![1, 0, 0]]),
            rho: unit_rho.clone(),
            refused: false,
        },
    ));
    lifts.push(Entry::failing(
        "lift-dual-S3-1-section",
        "dual graded S3 with section conjugation, class of 1, M = k via evaluation at (123)",
        LiftInput {
            crossed: dual_sec,
            element: 0,
            lambda: Matrix::from_rows_i64(f, &[vec![0, 1, 0]]),
            rho: unit_rho,
            refused: true,
        },
        &["refused"],
    ));

    Corpus {
        field,
        hopf,
        crossed,
        comodules,
        hopf_modules,
        yd,
        lifts,
    }
}

/// Small exact entries in `-2..=2`.
pub fn random_matrix(rng: &mut ChaCha8Rng, field: Field, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(field, rows, cols, |_, _| {
        field.from_i64(rng.gen_range(-2..=2))
    })
}

pub fn random_family(rng: &mut ChaCha8Rng, field: Field, max_len: usize, max_dim: usize) -> Family {
    let n = rng.gen_range(1..=max_len);
    let dims: Vec<usize> = (0..n).map(|_| rng.gen_range(0..=max_dim)).collect();
    Family::from_dims(field, &dims)
}

/// A random Turaev morphism; `None` when the source is empty but the
/// target is not.
pub fn random_t(rng: &mut ChaCha8Rng, source: &Family, target: &Family) -> Option<TMorphism> {
    if source.is_empty() && !target.is_empty() {
        return None;
    }
    let f = source.field();
    let index: Vec<usize> = (0..target.len())
        .map(|_| rng.gen_range(0..source.len()))
        .collect();
    let maps = index
        .iter()
        .enumerate()
        .map(|(y, &x)| random_matrix(rng, f, target.dim(y), source.dim(x)))
        .collect();
    Some(TMorphism::new(source.clone(), target.clone(), index, maps).expect("random shapes"))
}

pub fn random_z(rng: &mut ChaCha8Rng, source: &Family, target: &Family) -> Option<ZMorphism> {
    if target.is_empty() && !source.is_empty() {
        return None;
    }
    let f = source.field();
    let index: Vec<usize> = (0..source.len())
        .map(|_| rng.gen_range(0..target.len()))
        .collect();
    let maps = index
        .iter()
        .enumerate()
        .map(|(x, &y)| random_matrix(rng, f, target.dim(y), source.dim(x)))
        .collect();
    Some(ZMorphism::new(source.clone(), target.clone(), index, maps).expect("random shapes"))
}

/// A parallel pair sharing most of its data, so that equalizers and
/// coequalizers are usually nontrivial.
pub fn random_t_pair(rng: &mut ChaCha8Rng, field: Field) -> (TMorphism, TMorphism) {
    let a = random_family(rng, field, 5, 3);
    let b = random_family(rng, field, 5, 3);
    let phi = random_t(rng, &a, &b).expect("nonempty source");
    let mut index = phi.index_map().to_vec();
    let mut maps = phi.maps().to_vec();
    for y in 0..b.len() {
        if rng.gen_bool(0.25) {
            index[y] = rng.gen_range(0..a.len());
            maps[y] = random_matrix(rng, field, b.dim(y), a.dim(index[y]));
        } else if rng.gen_bool(0.4) {
            let u = random_matrix(rng, field, b.dim(y), 1);
            let v = random_matrix(rng, field, 1, a.dim(index[y]));
            maps[y] = maps[y]
                .add(&u.mul(&v).expect("rank one"))
                .expect("same shape");
        }
    }
    let psi = TMorphism::new(a, b, index, maps).expect("perturbed shapes");
    (phi, psi)
}

pub fn random_z_pair(rng: &mut ChaCha8Rng, field: Field) -> (ZMorphism, ZMorphism) {
    let a = random_family(rng, field, 5, 3);
    let b = random_family(rng, field, 5, 3);
    let phi = random_z(rng, &a, &b).expect("nonempty target");
    let mut index = phi.index_map().to_vec();
    let mut maps = phi.maps().to_vec();
    for x in 0..a.len() {
        if rng.gen_bool(0.25) {
            index[x] = rng.gen_range(0..b.len());
            maps[x] = random_matrix(rng, field, b.dim(index[x]), a.dim(x));
        } else if rng.gen_bool(0.4) {
            let u = random_matrix(rng, field, b.dim(index[x]), 1);
            let v = random_matrix(rng, field, 1, a.dim(x));
            maps[x] = maps[x]
                .add(&u.mul(&v).expect("rank one"))
                .expect("same shape");
        }
    }
    let psi = ZMorphism::new(a, b, index, maps).expect("perturbed shapes");
    (phi, psi)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Whether a morphism is an identity.
pub fn is_identity<M: Morphism>(m: &M) -> bool {
    m.source() == m.target() && *m == M::identity(m.source())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_verdicts_match_expectations() {
        for f in [Field::Rationals, Field::Prime(3)] {
            let c = build_corpus(f);
            for e in &c.hopf {
                assert_eq!(e.value.verify().failed_laws(), e.expected, "{}", e.id);
            }
            for e in &c.crossed {
                assert_eq!(e.value.verify().failed_laws(), e.expected, "{}", e.id);
            }
            for e in &c.comodules {
                assert_eq!(e.value.verify().failed_laws(), e.expected, "{}", e.id);
            }
            for e in &c.hopf_modules {
                assert_eq!(e.value.verify().failed_laws(), e.expected, "{}", e.id);
            }
            for e in &c.yd {
                assert_eq!(e.value.verify().failed_laws(), e.expected, "{}", e.id);
            }
            for e in &c.lifts {
                assert_eq!(e.value.failed_laws().unwrap(), e.expected, "{}", e.id);
                assert_eq!(e.value.refused, e.expected.contains("refused"), "{}", e.id);
            }
        }
    }

    #[test]
    fn random_pairs_are_parallel_and_deterministic() {
        let mut a = rng(7);
        let mut b = rng(7);
        for _ in 0..20 {
            let (p, q) = random_t_pair(&mut a, Field::Rationals);
            assert_eq!(p.source(), q.source());
            assert_eq!((p, q), random_t_pair(&mut b, Field::Rationals));
        }
    }
}
