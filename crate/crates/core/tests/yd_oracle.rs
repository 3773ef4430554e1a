//! Classical right-right Yetter-Drinfeld modules over `kG`, checked against
//! a direct Sweedler-notation evaluation on basis vectors.

use rand::Rng;

use hopfgc::fixtures::{random_matrix, rng};
use hopfgc::hopf::group_hopf_algebra;
use hopfgc::setcat::{cyclic, s3, Group};
use hopfgc::yd::YdModule;
use hopfgc::{Field, Matrix, Scalar};

/// `(m·h)₀ ⊗ h(m·h)₁ = m₀·h ⊗ m₁h` for grouplike `h`, coordinates of
/// `M ⊗ kG` with the group index fastest.
fn compatible(g: &Group, rho: &Matrix, psi: &Matrix) -> bool {
    let f = rho.field();
    let n = g.order();
    let d = psi.rows();
    for i in 0..d {
        for h in g.elements() {
            let mut lhs = vec![f.zero(); d * n];
            let mut rhs = vec![f.zero(); d * n];
            // lhs: ρ(m·h), then h acts on the left of the second factor
            let mh: Vec<Scalar> = (0..d).map(|j| psi.get(j, i * n + h).clone()).collect();
            for (j, cj) in mh.iter().enumerate() {
                for k in 0..d {
                    for a in g.elements() {
                        let coeff = cj.mul_ref(rho.get(k * n + a, j));
                        lhs[k * n + g.mul(h, a)].add_assign_ref(&coeff);
                    }
                }
            }
            // rhs: ρ(m) = Σ m_k ⊗ a, then m_k·h ⊗ ah
            for k in 0..d {
                for a in g.elements() {
                    let c = rho.get(k * n + a, i);
                    if c.is_zero() {
                        continue;
                    }
                    for l in 0..d {
                        let coeff = c.mul_ref(psi.get(l, k * n + h));
                        rhs[l * n + g.mul(a, h)].add_assign_ref(&coeff);
                    }
                }
            }
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// A grading `e_i ↦ a_i` as a coaction matrix.
fn grading(f: Field, n: usize, degrees: &[usize]) -> Matrix {
    let d = degrees.len();
    Matrix::from_fn(f, d * n, d, |r, c| {
        if r == c * n + degrees[c] {
            f.one()
        } else {
            f.zero()
        }
    })
}

/// `e_i·h = ±e_j`, with `j` of degree `h⁻¹a_ih` when `coherent` (so some
/// samples are YD) and random otherwise.
fn action(f: Field, g: &Group, r: &mut impl Rng, degrees: &[usize], coherent: bool) -> Matrix {
    let n = g.order();
    let d = degrees.len();
    let mut m = Matrix::zeros(f, d, d * n);
    for i in 0..d {
        m.set(i, i * n + g.unit(), f.one());
        for h in g.elements().filter(|&h| h != g.unit()) {
            let target = if coherent {
                // move to a vector of degree h⁻¹ a h when there is one
                let want = g.conjugate(g.inv(h), degrees[i]);
                (0..d).find(|&j| degrees[j] == want).unwrap_or(i)
            } else {
                r.gen_range(0..d)
            };
            let sign = if r.gen_bool(0.5) { 1 } else { -1 };
            m.set(target, i * n + h, f.from_i64(sign));
        }
    }
    m
}

fn law_passes(m: &YdModule) -> bool {
    !m.verify().failed_laws().contains("YD compatibility")
}

#[test]
fn compatibility_matches_sweedler_oracle() {
    let mut agree = 0;
    let mut passing = 0;
    for f in [Field::Rationals, Field::Prime(3)] {
        for g in [cyclic(2, "x"), cyclic(3, "g"), s3()] {
            let h = group_hopf_algebra(f, &g).unwrap();
            let n = g.order();
            for seed in 0..40u64 {
                let mut r = rng(seed);
                let d = r.gen_range(1..=3);
                let degrees: Vec<usize> = (0..d).map(|_| r.gen_range(0..n)).collect();
                let rho = if seed % 5 == 4 {
                    random_matrix(&mut r, f, d * n, d)
                } else {
                    grading(f, n, &degrees)
                };
                let psi = if seed % 3 == 2 {
                    random_matrix(&mut r, f, d, d * n)
                } else {
                    action(f, &g, &mut r, &degrees, seed % 3 == 0)
                };
                let m = YdModule::point(&h, vec![rho.clone()], psi.clone()).unwrap();
                let oracle = compatible(&g, &rho, &psi);
                assert_eq!(law_passes(&m), oracle, "{} seed {seed} over {f}", g.name());
                agree += 1;
                passing += oracle as usize;
            }
        }
    }
    assert_eq!(agree, 240);
    assert!(passing > 10, "only {passing} compatible samples");
}

#[test]
fn diagonal_signs_over_abelian_gradings_are_yd() {
    let f = Field::Rationals;
    let g = cyclic(2, "x");
    let h = group_hopf_algebra(f, &g).unwrap();
    let rho = grading(f, 2, &[0, 1, 1]);
    let psi = Matrix::from_rows_i64(
        f,
        &[
            vec![1, -1, 0, 0, 0, 0],
            vec![0, 0, 1, 1, 0, 0],
            vec![0, 0, 0, 0, 1, -1],
        ],
    );
    assert!(compatible(&g, &rho, &psi));
    let m = YdModule::point(&h, vec![rho], psi).unwrap();
    assert!(m.verify().all_passed(), "{}", m.verify().to_text());
}
