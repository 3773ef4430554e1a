//! Group-coalgebras, group-algebras and their Hopf versions as families of
//! structure-constant matrices, with exhaustive componentwise checkers,
//! packing into the Turaev/Zunino categories, duality and the standard
//! constructors.

use crate::category::{BialgebraData, Family};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::report::{idx, Report};
use crate::setcat::{trivial_group, Group, Homomorphism, Monoid};
use crate::turaev::TMorphism;
use crate::zunino::ZMorphism;

fn expect_shape(what: &str, m: &Matrix, rows: usize, cols: usize, field: Field) -> Result<()> {
    if m.field() != field {
        return Err(Error::FieldMismatch(field, m.field()));
    }
    if m.shape() != (rows, cols) {
        return Err(Error::Parse(format!(
            "{what} must be {rows}x{cols}, found {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

/// `I_a ⊗ τ_{b,c} ⊗ I_d`.
pub(crate) fn middle_swap(field: Field, a: usize, b: usize, c: usize, d: usize) -> Matrix {
    Matrix::identity(field, a)
        .kron(&Matrix::swap(field, b, c))
        .kron(&Matrix::identity(field, d))
}

fn id(field: Field, n: usize) -> Matrix {
    Matrix::identity(field, n)
}

/// `Δ_{g,h}: C_{gh} → C_g ⊗ C_h` and `ε: C_1 → k`.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupCoalgebra {
    pub group: Monoid,
    pub field: Field,
    pub dims: Vec<usize>,
    /// `delta[g][h]`.
    pub delta: Vec<Vec<Matrix>>,
    pub eps: Matrix,
}

impl GroupCoalgebra {
    pub fn new(
        group: Monoid,
        field: Field,
        dims: Vec<usize>,
        delta: Vec<Vec<Matrix>>,
        eps: Matrix,
    ) -> Result<GroupCoalgebra> {
        let n = group.order();
        if dims.len() != n || delta.len() != n || delta.iter().any(|r| r.len() != n) {
            return Err(Error::Parse(
                "one fiber and one Δ per index pair are required".into(),
            ));
        }
        for g in group.elements() {
            for h in group.elements() {
                expect_shape(
                    &format!("Δ_{{{},{}}}", group.label(g), group.label(h)),
                    &delta[g][h],
                    dims[g] * dims[h],
                    dims[group.mul(g, h)],
                    field,
                )?;
            }
        }
        expect_shape("ε", &eps, 1, dims[group.unit()], field)?;
        Ok(GroupCoalgebra {
            group,
            field,
            dims,
            delta,
            eps,
        })
    }

    pub fn verify(&self) -> Report {
        let mut r = Report::new("group coalgebra");
        self.check_into(&mut r);
        r
    }

    fn check_into(&self, r: &mut Report) {
        let g = &self.group;
        let f = self.field;
        let d = &self.dims;
        let e = g.unit();
        for a in g.elements() {
            for b in g.elements() {
                for c in g.elements() {
                    let ab = g.mul(a, b);
                    let bc = g.mul(b, c);
                    let lhs =
                        Matrix::chain(&[&self.delta[ab][c], &self.delta[a][b].kron(&id(f, d[c]))]);
                    let rhs =
                        Matrix::chain(&[&self.delta[a][bc], &id(f, d[a]).kron(&self.delta[b][c])]);
                    r.compare(
                        "coassociativity",
                        "(Δ_{g,h}⊗C_k)∘Δ_{gh,k} = (C_g⊗Δ_{h,k})∘Δ_{g,hk}",
                        idx([g.label(a), g.label(b), g.label(c)]),
                        lhs,
                        rhs,
                    );
                }
            }
            r.compare(
                "counit",
                "(ε⊗C_g)∘Δ_{1,g} = C_g",
                idx([g.label(a), "left"]),
                Matrix::chain(&[&self.delta[e][a], &self.eps.kron(&id(f, d[a]))]),
                Ok(id(f, d[a])),
            );
            r.compare(
                "counit",
                "(C_g⊗ε)∘Δ_{g,1} = C_g",
                idx([g.label(a), "right"]),
                Matrix::chain(&[&self.delta[a][e], &id(f, d[a]).kron(&self.eps)]),
                Ok(id(f, d[a])),
            );
        }
    }

    pub fn dual(&self) -> GroupAlgebra {
        GroupAlgebra {
            group: self.group.clone(),
            field: self.field,
            dims: self.dims.clone(),
            mu: self
                .delta
                .iter()
                .map(|row| row.iter().map(Matrix::transpose).collect())
                .collect(),
            eta: self.eps.transpose(),
        }
    }
}

/// `μ_{g,h}: A_g ⊗ A_h → A_{gh}` and `η: k → A_1`.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupAlgebra {
    pub group: Monoid,
    pub field: Field,
    pub dims: Vec<usize>,
    /// `mu[g][h]`.
    pub mu: Vec<Vec<Matrix>>,
    pub eta: Matrix,
}

impl GroupAlgebra {
    pub fn new(
        group: Monoid,
        field: Field,
        dims: Vec<usize>,
        mu: Vec<Vec<Matrix>>,
        eta: Matrix,
    ) -> Result<GroupAlgebra> {
        let n = group.order();
        if dims.len() != n || mu.len() != n || mu.iter().any(|r| r.len() != n) {
            return Err(Error::Parse(
                "one fiber and one μ per index pair are required".into(),
            ));
        }
        for g in group.elements() {
            for h in group.elements() {
                expect_shape(
                    &format!("μ_{{{},{}}}", group.label(g), group.label(h)),
                    &mu[g][h],
                    dims[group.mul(g, h)],
                    dims[g] * dims[h],
                    field,
                )?;
            }
        }
        expect_shape("η", &eta, dims[group.unit()], 1, field)?;
        Ok(GroupAlgebra {
            group,
            field,
            dims,
            mu,
            eta,
        })
    }

    pub fn verify(&self) -> Report {
        let mut r = Report::new("group algebra");
        self.check_into(&mut r);
        r
    }

    fn check_into(&self, r: &mut Report) {
        let g = &self.group;
        let f = self.field;
        let d = &self.dims;
        let e = g.unit();
        for a in g.elements() {
            for b in g.elements() {
                for c in g.elements() {
                    let ab = g.mul(a, b);
                    let bc = g.mul(b, c);
                    let lhs = Matrix::chain(&[&self.mu[a][b].kron(&id(f, d[c])), &self.mu[ab][c]]);
                    let rhs = Matrix::chain(&[&id(f, d[a]).kron(&self.mu[b][c]), &self.mu[a][bc]]);
                    r.compare(
                        "associativity",
                        "μ_{gh,k}∘(μ_{g,h}⊗A_k) = μ_{g,hk}∘(A_g⊗μ_{h,k})",
                        idx([g.label(a), g.label(b), g.label(c)]),
                        lhs,
                        rhs,
                    );
                }
            }
            r.compare(
                "unit",
                "μ_{g,1}∘(A_g⊗η) = A_g",
                idx([g.label(a), "right"]),
                Matrix::chain(&[&id(f, d[a]).kron(&self.eta), &self.mu[a][e]]),
                Ok(id(f, d[a])),
            );
            r.compare(
                "unit",
                "μ_{1,g}∘(η⊗A_g) = A_g",
                idx([g.label(a), "left"]),
                Matrix::chain(&[&self.eta.kron(&id(f, d[a])), &self.mu[e][a]]),
                Ok(id(f, d[a])),
            );
        }
    }

    pub fn dual(&self) -> GroupCoalgebra {
        GroupCoalgebra {
            group: self.group.clone(),
            field: self.field,
            dims: self.dims.clone(),
            delta: self
                .mu
                .iter()
                .map(|row| row.iter().map(Matrix::transpose).collect())
                .collect(),
            eps: self.eta.transpose(),
        }
    }
}

/// A (semi-)Hopf group-coalgebra: a group coalgebra whose fibers are
/// algebras, with optional antipodes `S_g: H_{g⁻¹} → H_g`.
#[derive(Clone, Debug, PartialEq)]
pub struct HopfGC {
    pub coalgebra: GroupCoalgebra,
    /// `mu[g]: H_g ⊗ H_g → H_g`.
    pub mu: Vec<Matrix>,
    /// `eta[g]: k → H_g`.
    pub eta: Vec<Matrix>,
    pub antipode: Option<Vec<Matrix>>,
}

impl HopfGC {
    pub fn new(
        coalgebra: GroupCoalgebra,
        mu: Vec<Matrix>,
        eta: Vec<Matrix>,
        antipode: Option<Vec<Matrix>>,
    ) -> Result<HopfGC> {
        let g = &coalgebra.group;
        let d = &coalgebra.dims;
        let f = coalgebra.field;
        if mu.len() != g.order() || eta.len() != g.order() {
            return Err(Error::Parse(
                "one μ and one η per index are required".into(),
            ));
        }
        for a in g.elements() {
            expect_shape(&format!("μ_{}", g.label(a)), &mu[a], d[a], d[a] * d[a], f)?;
            expect_shape(&format!("η_{}", g.label(a)), &eta[a], d[a], 1, f)?;
        }
        if let Some(s) = &antipode {
            g.require_group()?;
            if s.len() != g.order() {
                return Err(Error::Parse("one antipode per index is required".into()));
            }
            for a in g.elements() {
                expect_shape(&format!("S_{}", g.label(a)), &s[a], d[a], d[g.inv(a)], f)?;
            }
        }
        Ok(HopfGC {
            coalgebra,
            mu,
            eta,
            antipode,
        })
    }

    pub fn group(&self) -> &Monoid {
        &self.coalgebra.group
    }

    pub fn field(&self) -> Field {
        self.coalgebra.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.coalgebra.dims
    }

    pub fn dim(&self, g: usize) -> usize {
        self.coalgebra.dims[g]
    }

    pub fn delta(&self, g: usize, h: usize) -> &Matrix {
        &self.coalgebra.delta[g][h]
    }

    pub fn eps(&self) -> &Matrix {
        &self.coalgebra.eps
    }

    pub fn object(&self) -> Family {
        Family::new(
            self.field(),
            self.group().labels().to_vec(),
            self.dims().to_vec(),
        )
    }

    pub fn verify(&self) -> Report {
        let mut r = Report::new("Hopf group-coalgebra");
        self.coalgebra.check_into(&mut r);
        let g = self.group();
        let f = self.field();
        let d = self.dims();
        let e = g.unit();
        for a in g.elements() {
            let la = g.label(a);
            r.compare(
                "associativity",
                "μ_g∘(μ_g⊗H_g) = μ_g∘(H_g⊗μ_g)",
                idx([la]),
                Matrix::chain(&[&self.mu[a].kron(&id(f, d[a])), &self.mu[a]]),
                Matrix::chain(&[&id(f, d[a]).kron(&self.mu[a]), &self.mu[a]]),
            );
            r.compare(
                "unit",
                "μ_g∘(η_g⊗H_g) = H_g",
                idx([la, "left"]),
                Matrix::chain(&[&self.eta[a].kron(&id(f, d[a])), &self.mu[a]]),
                Ok(id(f, d[a])),
            );
            r.compare(
                "unit",
                "μ_g∘(H_g⊗η_g) = H_g",
                idx([la, "right"]),
                Matrix::chain(&[&id(f, d[a]).kron(&self.eta[a]), &self.mu[a]]),
                Ok(id(f, d[a])),
            );
            for b in g.elements() {
                let ab = g.mul(a, b);
                let dl = self.delta(a, b);
                r.compare(
                    "bialgebra Δ∘μ",
                    "Δ_{g,h}∘μ_{gh} = (μ_g⊗μ_h)∘(H_g⊗τ⊗H_h)∘(Δ_{g,h}⊗Δ_{g,h})",
                    idx([la, g.label(b)]),
                    Matrix::chain(&[&self.mu[ab], dl]),
                    Matrix::chain(&[
                        &dl.kron(dl),
                        &middle_swap(f, d[a], d[b], d[a], d[b]),
                        &self.mu[a].kron(&self.mu[b]),
                    ]),
                );
                r.compare(
                    "bialgebra Δ∘η",
                    "Δ_{g,h}∘η_{gh} = η_g⊗η_h",
                    idx([la, g.label(b)]),
                    Matrix::chain(&[&self.eta[ab], dl]),
                    Ok(self.eta[a].kron(&self.eta[b])),
                );
            }
        }
        r.compare(
            "bialgebra ε∘μ",
            "ε∘μ_1 = ε⊗ε",
            vec![],
            Matrix::chain(&[&self.mu[e], self.eps()]),
            Ok(self.eps().kron(self.eps())),
        );
        r.compare(
            "bialgebra ε∘η",
            "ε∘η_1 = 1",
            vec![],
            Matrix::chain(&[&self.eta[e], self.eps()]),
            Ok(id(f, 1)),
        );
        if let Some(s) = &self.antipode {
            for a in g.elements() {
                let ai = g.inv(a);
                let unit = Matrix::chain(&[self.eps(), &self.eta[a]]);
                r.compare(
                    "antipode S*id",
                    "μ_g∘(S_g⊗H_g)∘Δ_{g⁻¹,g} = η_g∘ε",
                    idx([g.label(a)]),
                    Matrix::chain(&[self.delta(ai, a), &s[a].kron(&id(f, d[a])), &self.mu[a]]),
                    unit.clone(),
                );
                r.compare(
                    "antipode id*S",
                    "μ_g∘(H_g⊗S_g)∘Δ_{g,g⁻¹} = η_g∘ε",
                    idx([g.label(a)]),
                    Matrix::chain(&[self.delta(a, ai), &id(f, d[a]).kron(&s[a]), &self.mu[a]]),
                    unit,
                );
            }
        }
        r
    }

    /// The structure as maps in the Turaev category: Δ has index map
    /// `(g, h) ↦ gh`, ε picks `1`, μ is `g ↦ (g, g)`, S is `g ↦ g⁻¹`.
    pub fn pack(&self) -> BialgebraData<TMorphism> {
        let g = self.group();
        let n = g.order();
        let f = self.field();
        let h = self.object();
        let hh = h.tensor(&h);
        let unit = Family::unit(f);
        let mut d_index = Vec::with_capacity(n * n);
        let mut d_maps = Vec::with_capacity(n * n);
        for a in g.elements() {
            for b in g.elements() {
                d_index.push(g.mul(a, b));
                d_maps.push(self.delta(a, b).clone());
            }
        }
        let delta = TMorphism::new(h.clone(), hh.clone(), d_index, d_maps).expect("Δ shapes");
        let eps = TMorphism::new(
            h.clone(),
            unit.clone(),
            vec![g.unit()],
            vec![self.eps().clone()],
        )
        .expect("ε shape");
        let mu = TMorphism::new(
            hh,
            h.clone(),
            g.elements().map(|a| a * n + a).collect(),
            self.mu.clone(),
        )
        .expect("μ shapes");
        let eta = TMorphism::new(unit, h.clone(), vec![0; n], self.eta.clone()).expect("η shapes");
        let antipode = self.antipode.as_ref().map(|s| {
            TMorphism::new(
                h.clone(),
                h.clone(),
                g.elements().map(|a| g.inv(a)).collect(),
                s.clone(),
            )
            .expect("S shapes")
        });
        BialgebraData {
            object: h,
            mu,
            eta,
            delta,
            eps,
            antipode,
        }
    }

    /// Reads the componentwise data back from Turaev-category maps; the
    /// group law is recovered from the index map of Δ.
    pub fn unpack(data: &BialgebraData<TMorphism>) -> Result<HopfGC> {
        let h = &data.object;
        let n = h.len();
        let labels = h.labels().to_vec();
        let table = (0..n)
            .map(|a| (0..n).map(|b| data.delta.index_map()[a * n + b]).collect())
            .collect();
        let group = Monoid::new("recovered", labels, table)?;
        let mismatch = |what: &str| Error::Invariant(format!("{what} has the wrong index map"));
        if data.eps.index_map() != [group.unit()] {
            return Err(mismatch("ε"));
        }
        if data.mu.index_map() != (0..n).map(|a| a * n + a).collect::<Vec<_>>() {
            return Err(mismatch("μ"));
        }
        if data.eta.index_map() != vec![0; n] {
            return Err(mismatch("η"));
        }
        let antipode = match &data.antipode {
            Some(s) => {
                group.require_group()?;
                if s.index_map() != (0..n).map(|a| group.inv(a)).collect::<Vec<_>>() {
                    return Err(mismatch("S"));
                }
                Some(s.maps().to_vec())
            }
            None => None,
        };
        let delta = (0..n)
            .map(|a| (0..n).map(|b| data.delta.map(a * n + b).clone()).collect())
            .collect();
        let coalgebra = GroupCoalgebra::new(
            group,
            h.field(),
            h.dims().to_vec(),
            delta,
            data.eps.map(0).clone(),
        )?;
        HopfGC::new(
            coalgebra,
            data.mu.maps().to_vec(),
            data.eta.maps().to_vec(),
            antipode,
        )
    }

    pub fn dual(&self) -> HopfGA {
        HopfGA {
            algebra: self.coalgebra.dual(),
            delta: self.mu.iter().map(Matrix::transpose).collect(),
            eps: self.eta.iter().map(Matrix::transpose).collect(),
            antipode: self
                .antipode
                .as_ref()
                .map(|s| s.iter().map(Matrix::transpose).collect()),
        }
    }

    /// `p: H_g → k` with `p(1_g) = 1`, supported on the first basis
    /// vector where `1_g` is nonzero.
    pub fn unit_functional(&self, g: usize) -> Option<Matrix> {
        let eta = &self.eta[g];
        let i = (0..eta.rows()).find(|&i| !eta.get(i, 0).is_zero())?;
        let f = self.field();
        let mut p = Matrix::zeros(f, 1, eta.rows());
        p.set(0, i, eta.get(i, 0).inv().expect("nonzero"));
        Some(p)
    }
}

/// A (semi-)Hopf group-algebra: a group algebra whose fibers are coalgebras,
/// with optional antipodes `S_g: H_g → H_{g⁻¹}`.
#[derive(Clone, Debug, PartialEq)]
pub struct HopfGA {
    pub algebra: GroupAlgebra,
    /// `delta[g]: H_g → H_g ⊗ H_g`.
    pub delta: Vec<Matrix>,
    /// `eps[g]: H_g → k`.
    pub eps: Vec<Matrix>,
    pub antipode: Option<Vec<Matrix>>,
}

impl HopfGA {
    pub fn new(
        algebra: GroupAlgebra,
        delta: Vec<Matrix>,
        eps: Vec<Matrix>,
        antipode: Option<Vec<Matrix>>,
    ) -> Result<HopfGA> {
        let g = &algebra.group;
        let d = &algebra.dims;
        let f = algebra.field;
        if delta.len() != g.order() || eps.len() != g.order() {
            return Err(Error::Parse(
                "one Δ and one ε per index are required".into(),
            ));
        }
        for a in g.elements() {
            expect_shape(
                &format!("Δ_{}", g.label(a)),
                &delta[a],
                d[a] * d[a],
                d[a],
                f,
            )?;
            expect_shape(&format!("ε_{}", g.label(a)), &eps[a], 1, d[a], f)?;
        }
        if let Some(s) = &antipode {
            g.require_group()?;
            if s.len() != g.order() {
                return Err(Error::Parse("one antipode per index is required".into()));
            }
            for a in g.elements() {
                expect_shape(&format!("S_{}", g.label(a)), &s[a], d[g.inv(a)], d[a], f)?;
            }
        }
        Ok(HopfGA {
            algebra,
            delta,
            eps,
            antipode,
        })
    }

    pub fn group(&self) -> &Monoid {
        &self.algebra.group
    }

    pub fn field(&self) -> Field {
        self.algebra.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.algebra.dims
    }

    pub fn object(&self) -> Family {
        Family::new(
            self.field(),
            self.group().labels().to_vec(),
            self.dims().to_vec(),
        )
    }

    pub fn verify(&self) -> Report {
        let mut r = Report::new("Hopf group-algebra");
        self.algebra.check_into(&mut r);
        let g = self.group();
        let f = self.field();
        let d = self.dims();
        let e = g.unit();
        let eta = &self.algebra.eta;
        for a in g.elements() {
            let la = g.label(a);
            let da = &self.delta[a];
            r.compare(
                "coassociativity",
                "(Δ_g⊗H_g)∘Δ_g = (H_g⊗Δ_g)∘Δ_g",
                idx([la]),
                Matrix::chain(&[da, &da.kron(&id(f, d[a]))]),
                Matrix::chain(&[da, &id(f, d[a]).kron(da)]),
            );
            r.compare(
                "counit",
                "(ε_g⊗H_g)∘Δ_g = H_g",
                idx([la, "left"]),
                Matrix::chain(&[da, &self.eps[a].kron(&id(f, d[a]))]),
                Ok(id(f, d[a])),
            );
            r.compare(
                "counit",
                "(H_g⊗ε_g)∘Δ_g = H_g",
                idx([la, "right"]),
                Matrix::chain(&[da, &id(f, d[a]).kron(&self.eps[a])]),
                Ok(id(f, d[a])),
            );
            for b in g.elements() {
                let ab = g.mul(a, b);
                let m = &self.algebra.mu[a][b];
                r.compare(
                    "bialgebra Δ∘μ",
                    "Δ_{gh}∘μ_{g,h} = (μ_{g,h}⊗μ_{g,h})∘(H_g⊗τ⊗H_h)∘(Δ_g⊗Δ_h)",
                    idx([la, g.label(b)]),
                    Matrix::chain(&[m, &self.delta[ab]]),
                    Matrix::chain(&[
                        &self.delta[a].kron(&self.delta[b]),
                        &middle_swap(f, d[a], d[a], d[b], d[b]),
                        &m.kron(m),
                    ]),
                );
                r.compare(
                    "bialgebra ε∘μ",
                    "ε_{gh}∘μ_{g,h} = ε_g⊗ε_h",
                    idx([la, g.label(b)]),
                    Matrix::chain(&[m, &self.eps[ab]]),
                    Ok(self.eps[a].kron(&self.eps[b])),
                );
            }
        }
        r.compare(
            "bialgebra Δ∘η",
            "Δ_1∘η = η⊗η",
            vec![],
            Matrix::chain(&[eta, &self.delta[e]]),
            Ok(eta.kron(eta)),
        );
        r.compare(
            "bialgebra ε∘η",
            "ε_1∘η = 1",
            vec![],
            Matrix::chain(&[eta, &self.eps[e]]),
            Ok(id(f, 1)),
        );
        if let Some(s) = &self.antipode {
            for a in g.elements() {
                let ai = g.inv(a);
                let unit = Matrix::chain(&[&self.eps[a], eta]);
                r.compare(
                    "antipode S*id",
                    "μ_{g⁻¹,g}∘(S_g⊗H_g)∘Δ_g = η∘ε_g",
                    idx([g.label(a)]),
                    Matrix::chain(&[
                        &self.delta[a],
                        &s[a].kron(&id(f, d[a])),
                        &self.algebra.mu[ai][a],
                    ]),
                    unit.clone(),
                );
                r.compare(
                    "antipode id*S",
                    "μ_{g,g⁻¹}∘(H_g⊗S_g)∘Δ_g = η∘ε_g",
                    idx([g.label(a)]),
                    Matrix::chain(&[
                        &self.delta[a],
                        &id(f, d[a]).kron(&s[a]),
                        &self.algebra.mu[a][ai],
                    ]),
                    unit,
                );
            }
        }
        r
    }

    /// The structure as maps in the Zunino category: μ has index map
    /// `(g, h) ↦ gh`, η picks `1`, Δ is `g ↦ (g, g)`, S is `g ↦ g⁻¹`.
    pub fn pack(&self) -> BialgebraData<ZMorphism> {
        let g = self.group();
        let n = g.order();
        let f = self.field();
        let h = self.object();
        let hh = h.tensor(&h);
        let unit = Family::unit(f);
        let mut m_index = Vec::with_capacity(n * n);
        let mut m_maps = Vec::with_capacity(n * n);
        for a in g.elements() {
            for b in g.elements() {
                m_index.push(g.mul(a, b));
                m_maps.push(self.algebra.mu[a][b].clone());
            }
        }
        let mu = ZMorphism::new(hh.clone(), h.clone(), m_index, m_maps).expect("μ shapes");
        let eta = ZMorphism::new(
            unit.clone(),
            h.clone(),
            vec![g.unit()],
            vec![self.algebra.eta.clone()],
        )
        .expect("η shape");
        let delta = ZMorphism::new(
            h.clone(),
            hh,
            g.elements().map(|a| a * n + a).collect(),
            self.delta.clone(),
        )
        .expect("Δ shapes");
        let eps = ZMorphism::new(h.clone(), unit, vec![0; n], self.eps.clone()).expect("ε shapes");
        let antipode = self.antipode.as_ref().map(|s| {
            ZMorphism::new(
                h.clone(),
                h.clone(),
                g.elements().map(|a| g.inv(a)).collect(),
                s.clone(),
            )
            .expect("S shapes")
        });
        BialgebraData {
            object: h,
            mu,
            eta,
            delta,
            eps,
            antipode,
        }
    }

    /// Reads the componentwise data back from Zunino-category maps; the
    /// group law is recovered from the index map of μ.
    pub fn unpack(data: &BialgebraData<ZMorphism>) -> Result<HopfGA> {
        let h = &data.object;
        let n = h.len();
        let table = (0..n)
            .map(|a| (0..n).map(|b| data.mu.index_map()[a * n + b]).collect())
            .collect();
        let group = Monoid::new("recovered", h.labels().to_vec(), table)?;
        let mismatch = |what: &str| Error::Invariant(format!("{what} has the wrong index map"));
        if data.eta.index_map() != [group.unit()] {
            return Err(mismatch("η"));
        }
        if data.delta.index_map() != (0..n).map(|a| a * n + a).collect::<Vec<_>>() {
            return Err(mismatch("Δ"));
        }
        if data.eps.index_map() != vec![0; n] {
            return Err(mismatch("ε"));
        }
        let antipode = match &data.antipode {
            Some(s) => {
                group.require_group()?;
                if s.index_map() != (0..n).map(|a| group.inv(a)).collect::<Vec<_>>() {
                    return Err(mismatch("S"));
                }
                Some(s.maps().to_vec())
            }
            None => None,
        };
        let mu = (0..n)
            .map(|a| (0..n).map(|b| data.mu.map(a * n + b).clone()).collect())
            .collect();
        let algebra = GroupAlgebra::new(
            group,
            h.field(),
            h.dims().to_vec(),
            mu,
            data.eta.map(0).clone(),
        )?;
        HopfGA::new(
            algebra,
            data.delta.maps().to_vec(),
            data.eps.maps().to_vec(),
            antipode,
        )
    }

    pub fn dual(&self) -> HopfGC {
        HopfGC {
            coalgebra: self.algebra.dual(),
            mu: self.delta.iter().map(Matrix::transpose).collect(),
            eta: self.eps.iter().map(Matrix::transpose).collect(),
            antipode: self
                .antipode
                .as_ref()
                .map(|s| s.iter().map(Matrix::transpose).collect()),
        }
    }
}

/// A Hopf group-coalgebra with conjugation isomorphisms
/// `φ^k_h: H_k → H_{hkh⁻¹}`.
#[derive(Clone, Debug, PartialEq)]
pub struct CrossedHopfGC {
    pub hopf: HopfGC,
    /// `phi[h][k] = φ^k_h`.
    pub phi: Vec<Vec<Matrix>>,
}

impl CrossedHopfGC {
    pub fn new(hopf: HopfGC, phi: Vec<Vec<Matrix>>) -> Result<CrossedHopfGC> {
        let g = hopf.group();
        g.require_group()?;
        let n = g.order();
        if phi.len() != n || phi.iter().any(|r| r.len() != n) {
            return Err(Error::Parse("one φ per pair (h, k) is required".into()));
        }
        for h in g.elements() {
            for k in g.elements() {
                expect_shape(
                    &format!("φ^{}_{}", g.label(k), g.label(h)),
                    &phi[h][k],
                    hopf.dim(g.conjugate(h, k)),
                    hopf.dim(k),
                    hopf.field(),
                )?;
            }
        }
        Ok(CrossedHopfGC { hopf, phi })
    }

    /// All `φ^k_h` identities; valid when every `H_k` is one space and the
    /// structure is invariant under relabelling by conjugation.
    pub fn with_identity(hopf: HopfGC) -> Result<CrossedHopfGC> {
        let g = hopf.group().clone();
        g.require_group()?;
        let phi = g
            .elements()
            .map(|h| {
                g.elements()
                    .map(|k| {
                        let rows = hopf.dim(g.conjugate(h, k));
                        let cols = hopf.dim(k);
                        if rows == cols {
                            Matrix::identity(hopf.field(), cols)
                        } else {
                            Matrix::zeros(hopf.field(), rows, cols)
                        }
                    })
                    .collect()
            })
            .collect();
        CrossedHopfGC::new(hopf, phi)
    }

    pub fn verify(&self) -> Report {
        let mut r = Report::new("crossed Hopf group-coalgebra");
        let hp = &self.hopf;
        let g = hp.group();
        let f = hp.field();
        let e = g.unit();
        for h in g.elements() {
            for k in g.elements() {
                let hk = g.conjugate(h, k);
                let p = &self.phi[h][k];
                let lk = idx([g.label(h), g.label(k)]);
                r.record(
                    "crossed invertible",
                    "φ^k_h is invertible",
                    lk.clone(),
                    p.inverse().is_none().then(|| format!("rank {}", p.rank())),
                );
                r.compare(
                    "crossed multiplicative",
                    "φ^k_h∘μ_k = μ_{hkh⁻¹}∘(φ^k_h⊗φ^k_h)",
                    lk.clone(),
                    Matrix::chain(&[&hp.mu[k], p]),
                    Matrix::chain(&[&p.kron(p), &hp.mu[hk]]),
                );
                r.compare(
                    "crossed unital",
                    "φ^k_h∘η_k = η_{hkh⁻¹}",
                    lk.clone(),
                    Matrix::chain(&[&hp.eta[k], p]),
                    Ok(hp.eta[hk].clone()),
                );
                for l in g.elements() {
                    // φ_h∘φ_k on H_l equals φ_{hk}
                    let kl = g.conjugate(k, l);
                    r.compare(
                        "crossed composition",
                        "φ^{klk⁻¹}_h∘φ^l_k = φ^l_{hk}",
                        idx([g.label(h), g.label(k), g.label(l)]),
                        Matrix::chain(&[&self.phi[k][l], &self.phi[h][kl]]),
                        Ok(self.phi[g.mul(h, k)][l].clone()),
                    );
                    // (φ_k⊗φ_k)∘Δ_{l,h} = Δ_{klk⁻¹,khk⁻¹}∘φ_k on H_{lh}
                    let (l1, h1) = (g.conjugate(k, l), g.conjugate(k, h));
                    let lh = g.mul(l, h);
                    r.compare(
                        "crossed comultiplication",
                        "(φ_k⊗φ_k)∘Δ_{l,h} = Δ_{klk⁻¹,khk⁻¹}∘φ_k",
                        idx([g.label(k), g.label(l), g.label(h)]),
                        Matrix::chain(&[hp.delta(l, h), &self.phi[k][l].kron(&self.phi[k][h])]),
                        Matrix::chain(&[&self.phi[k][lh], hp.delta(l1, h1)]),
                    );
                    let (c1, c2) = (g.conjugate(h, l), g.conjugate(k, l));
                    if c1 == c2 {
                        r.compare(
                            "conjugation independence",
                            "φ^l_h = φ^l_k when hlh⁻¹ = klk⁻¹",
                            idx([g.label(l), g.label(h), g.label(k)]),
                            Ok(self.phi[h][l].clone()),
                            Ok(self.phi[k][l].clone()),
                        );
                    }
                }
            }
            r.compare(
                "crossed counit",
                "ε∘φ^1_g = ε",
                idx([g.label(h)]),
                Matrix::chain(&[&self.phi[h][e], hp.eps()]),
                Ok(hp.eps().clone()),
            );
            r.compare(
                "crossed unit",
                "φ^k_1 = H_k",
                idx([g.label(h)]),
                Ok(self.phi[e][h].clone()),
                Ok(id(f, hp.dim(h))),
            );
        }
        r
    }
}

/// The group algebra `kΓ` as a Hopf algebra over the trivial group.
pub fn group_hopf_algebra(field: Field, gamma: &Group) -> Result<HopfGC> {
    gamma.require_group()?;
    let n = gamma.order();
    let one = field.one();
    let mut delta = Matrix::zeros(field, n * n, n);
    let mut mu = Matrix::zeros(field, n, n * n);
    let mut s = Matrix::zeros(field, n, n);
    for a in gamma.elements() {
        delta.set(a * n + a, a, one.clone());
        s.set(gamma.inv(a), a, one.clone());
        for b in gamma.elements() {
            mu.set(gamma.mul(a, b), a * n + b, one.clone());
        }
    }
    let eps = Matrix::from_fn(field, 1, n, |_, _| one.clone());
    let eta = Matrix::unit_vector(field, n, gamma.unit());
    let coalgebra = GroupCoalgebra::new(trivial_group(), field, vec![n], vec![vec![delta]], eps)?;
    HopfGC::new(coalgebra, vec![mu], vec![eta], Some(vec![s]))
}

/// The ground field as a Hopf algebra over the trivial group.
pub fn trivial_hopf(field: Field) -> HopfGC {
    group_hopf_algebra(field, &trivial_group()).expect("k is a Hopf algebra")
}

/// Repeats an ordinary (trivial-group) Hopf algebra over every element of
/// `group`: `H_g = H`, `Δ_{g,h} = Δ`, `S_g = S`.
pub fn constant_family(h: &HopfGC, group: &Group) -> Result<HopfGC> {
    if h.group().order() != 1 {
        return Err(Error::Precondition(
            "the constant family needs a Hopf algebra over the trivial group".into(),
        ));
    }
    let report = h.verify();
    if !report.all_passed() {
        return Err(Error::Unverified(format!(
            "input fails {:?}",
            report.failed_laws()
        )));
    }
    if h.antipode.is_some() {
        group.require_group()?;
    }
    let n = group.order();
    let d = h.dim(0);
    let delta = vec![vec![h.delta(0, 0).clone(); n]; n];
    let coalgebra =
        GroupCoalgebra::new(group.clone(), h.field(), vec![d; n], delta, h.eps().clone())?;
    HopfGC::new(
        coalgebra,
        vec![h.mu[0].clone(); n],
        vec![h.eta[0].clone(); n],
        h.antipode.as_ref().map(|s| vec![s[0].clone(); n]),
    )
}

/// `kΓ` graded along `π: Γ → G`: `A_g` is spanned by `π⁻¹(g)` (in the order
/// of Γ), multiplication and the Hopf structure are those of `kΓ`.
pub fn graded_group_algebra(field: Field, pi: &Homomorphism) -> Result<HopfGA> {
    let gamma = &pi.source;
    let g = &pi.target;
    gamma.require_group()?;
    g.require_group()?;
    let fibers: Vec<Vec<usize>> = g
        .elements()
        .map(|a| gamma.elements().filter(|&x| pi.apply(x) == a).collect())
        .collect();
    let pos = |x: usize| {
        fibers[pi.apply(x)]
            .iter()
            .position(|&y| y == x)
            .expect("in fiber")
    };
    let dims: Vec<usize> = fibers.iter().map(Vec::len).collect();
    let one = field.one();
    let mut mu = Vec::with_capacity(g.order());
    for a in g.elements() {
        let mut row = Vec::with_capacity(g.order());
        for b in g.elements() {
            let ab = g.mul(a, b);
            let mut m = Matrix::zeros(field, dims[ab], dims[a] * dims[b]);
            for (i, &x) in fibers[a].iter().enumerate() {
                for (j, &y) in fibers[b].iter().enumerate() {
                    m.set(pos(gamma.mul(x, y)), i * dims[b] + j, one.clone());
                }
            }
            row.push(m);
        }
        mu.push(row);
    }
    let eta = Matrix::unit_vector(field, dims[g.unit()], pos(gamma.unit()));
    let algebra = GroupAlgebra::new(g.clone(), field, dims.clone(), mu, eta)?;
    let mut delta = Vec::new();
    let mut eps = Vec::new();
    let mut s = Vec::new();
    for a in g.elements() {
        let d = dims[a];
        let mut dl = Matrix::zeros(field, d * d, d);
        for i in 0..d {
            dl.set(i * d + i, i, one.clone());
        }
        delta.push(dl);
        eps.push(Matrix::from_fn(field, 1, d, |_, _| one.clone()));
        let ai = g.inv(a);
        let mut sa = Matrix::zeros(field, dims[ai], d);
        for (i, &x) in fibers[a].iter().enumerate() {
            sa.set(pos(gamma.inv(x)), i, one.clone());
        }
        s.push(sa);
    }
    HopfGA::new(algebra, delta, eps, Some(s))
}

/// The dual of [`graded_group_algebra`] with `φ^k_h` conjugating the basis
/// of functions on `π⁻¹(k)` by `σ(h)`, for a section `σ: G → Γ`.
pub fn graded_dual_crossed(
    field: Field,
    pi: &Homomorphism,
    section: &[usize],
) -> Result<CrossedHopfGC> {
    let dual = graded_group_algebra(field, pi)?.dual();
    let gamma = &pi.source;
    let g = &pi.target;
    if section.len() != g.order() || g.elements().any(|a| pi.apply(section[a]) != a) {
        return Err(Error::Precondition("σ is not a section of π".into()));
    }
    let fibers: Vec<Vec<usize>> = g
        .elements()
        .map(|a| gamma.elements().filter(|&x| pi.apply(x) == a).collect())
        .collect();
    let pos = |x: usize| {
        fibers[pi.apply(x)]
            .iter()
            .position(|&y| y == x)
            .expect("in fiber")
    };
    let one = field.one();
    let phi = g
        .elements()
        .map(|h| {
            g.elements()
                .map(|k| {
                    let target = g.conjugate(h, k);
                    let mut m = Matrix::zeros(field, fibers[target].len(), fibers[k].len());
                    for (i, &x) in fibers[k].iter().enumerate() {
                        m.set(pos(gamma.conjugate(section[h], x)), i, one.clone());
                    }
                    m
                })
                .collect()
        })
        .collect();
    CrossedHopfGC::new(dual, phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::check_bialgebra;
    use crate::setcat::{cyclic, s3};

    const Q: Field = Field::Rationals;

    #[test]
    fn kc2_over_c2_passes() {
        let c2 = cyclic(2, "s");
        let h = constant_family(&group_hopf_algebra(Q, &c2).unwrap(), &c2).unwrap();
        let r = h.verify();
        assert!(r.all_passed(), "{}", r.to_text());
        assert_eq!(h.dims(), &[2, 2]);
    }

    #[test]
    fn trivial_hopf_is_all_ones() {
        let h = constant_family(&trivial_hopf(Q), &s3()).unwrap();
        assert!(h.verify().all_passed());
        assert!(h.dims().iter().all(|&d| d == 1));
    }

    #[test]
    fn kc3_over_gf2() {
        let f = Field::Prime(2);
        let h = constant_family(
            &group_hopf_algebra(f, &cyclic(3, "g")).unwrap(),
            &cyclic(2, "s"),
        )
        .unwrap();
        assert!(h.verify().all_passed());
    }

    #[test]
    fn graded_sign_fibers() {
        let a = graded_group_algebra(Q, &Homomorphism::sign()).unwrap();
        assert_eq!(a.dims(), &[3, 3]);
        let r = a.verify();
        assert!(r.all_passed(), "{}", r.to_text());
        let c4 = graded_group_algebra(Q, &Homomorphism::c4_to_c2()).unwrap();
        assert_eq!(c4.dims(), &[2, 2]);
        assert!(c4.verify().all_passed());
    }

    #[test]
    fn pack_round_trip_and_generic_agreement() {
        let c2 = cyclic(2, "s");
        let h = constant_family(&group_hopf_algebra(Q, &c2).unwrap(), &c2).unwrap();
        let packed = h.pack();
        let back = HopfGC::unpack(&packed).unwrap();
        assert_eq!(back.coalgebra.group.labels(), h.group().labels());
        assert_eq!(
            (&back.coalgebra.delta, &back.mu, &back.antipode),
            (&h.coalgebra.delta, &h.mu, &h.antipode)
        );
        assert!(check_bialgebra(&packed, "generic").all_passed());
        let a = graded_group_algebra(Q, &Homomorphism::sign()).unwrap();
        assert!(check_bialgebra(&a.pack(), "generic").all_passed());
    }

    #[test]
    fn duality_round_trip() {
        let a = graded_group_algebra(Q, &Homomorphism::sign()).unwrap();
        let d = a.dual();
        assert!(d.verify().all_passed());
        assert_eq!(d.dual(), a);
    }

    #[test]
    fn identity_crossing_on_constant_family() {
        let s3 = s3();
        let h = constant_family(&group_hopf_algebra(Q, &cyclic(2, "s")).unwrap(), &s3).unwrap();
        let x = CrossedHopfGC::with_identity(h).unwrap();
        let r = x.verify();
        assert!(r.all_passed(), "{}", r.to_text());
    }
}
