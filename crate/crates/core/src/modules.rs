//! Comodules, modules and Hopf modules over a Hopf group-coalgebra in the
//! Turaev category, coinvariants, the isomorphism `M^co ⊗ H ≅ M` with its
//! explicit inverse, and the comparison with componentwise coinvariants.

use crate::category::{check_comodule, check_hopf_module_compat, check_module, Family, Morphism};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hopf::{middle_swap, GroupCoalgebra, HopfGC};
use crate::matrix::Matrix;
use crate::report::{idx, Report};
use crate::setcat::{RightGSet, SetHopfModule};
use crate::turaev::{t_equalizer, t_equalizer_mediate, TEqualizer, TMorphism};

fn id(field: Field, n: usize) -> Matrix {
    Matrix::identity(field, n)
}

fn check_fiber(what: &str, m: &Matrix, shape: (usize, usize), field: Field) -> Result<()> {
    if m.field() != field {
        return Err(Error::FieldMismatch(field, m.field()));
    }
    if m.shape() != shape {
        return Err(Error::Parse(format!(
            "{what} must be {}x{}, found {}x{}",
            shape.0,
            shape.1,
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

/// Right comodule: a right G-set `X`, fibers `M_x`, and
/// `ρ_{x,g}: M_{x·g} → M_x ⊗ C_g`.
#[derive(Clone, Debug, PartialEq)]
pub struct TComodule {
    pub coalgebra: GroupCoalgebra,
    pub carrier: RightGSet,
    pub dims: Vec<usize>,
    /// `rho[x][g]`.
    pub rho: Vec<Vec<Matrix>>,
}

impl TComodule {
    pub fn new(
        coalgebra: GroupCoalgebra,
        carrier: RightGSet,
        dims: Vec<usize>,
        rho: Vec<Vec<Matrix>>,
    ) -> Result<TComodule> {
        if carrier.group().table() != coalgebra.group.table() {
            return Err(Error::Precondition(
                "carrier is a G-set for another monoid".into(),
            ));
        }
        let n = coalgebra.group.order();
        if dims.len() != carrier.len()
            || rho.len() != carrier.len()
            || rho.iter().any(|r| r.len() != n)
        {
            return Err(Error::Parse(
                "one fiber and one coaction per (x, g) are required".into(),
            ));
        }
        for x in 0..carrier.len() {
            for g in 0..n {
                check_fiber(
                    &format!("ρ_{{{},{}}}", carrier.label(x), coalgebra.group.label(g)),
                    &rho[x][g],
                    (dims[x] * coalgebra.dims[g], dims[carrier.act(x, g)]),
                    coalgebra.field,
                )?;
            }
        }
        Ok(TComodule {
            coalgebra,
            carrier,
            dims,
            rho,
        })
    }

    /// The same comodule `M` repeated over every point of `X`, with
    /// `ρ_{x,g} = ρ_g`.
    pub fn constant(
        coalgebra: GroupCoalgebra,
        carrier: RightGSet,
        dim: usize,
        rho: Vec<Matrix>,
    ) -> Result<TComodule> {
        let n = carrier.len();
        TComodule::new(coalgebra, carrier, vec![dim; n], vec![rho; n])
    }

    pub fn field(&self) -> Field {
        self.coalgebra.field
    }

    pub fn object(&self) -> Family {
        Family::new(
            self.field(),
            self.carrier.labels().to_vec(),
            self.dims.clone(),
        )
    }

    /// `ρ` as a Turaev morphism `M → M ⊗ H`, index `(x, g) ↦ x·g`.
    pub fn rho_morphism(&self, h: &Family) -> Result<TMorphism> {
        let n = self.coalgebra.group.order();
        let m = self.object();
        let mut index = Vec::new();
        let mut maps = Vec::new();
        for x in 0..self.carrier.len() {
            for g in 0..n {
                index.push(self.carrier.act(x, g));
                maps.push(self.rho[x][g].clone());
            }
        }
        TMorphism::new(m.clone(), m.tensor(h), index, maps)
    }

    pub fn verify(&self) -> Report {
        let mut r = Report::new("comodule");
        self.check_into(&mut r);
        r
    }

    fn check_into(&self, r: &mut Report) {
        let c = &self.coalgebra;
        let g = &c.group;
        let f = self.field();
        let e = g.unit();
        for x in 0..self.carrier.len() {
            let lx = self.carrier.label(x);
            let dx = self.dims[x];
            r.compare(
                "comodule counit",
                "(M_x⊗ε)∘ρ_{x,1} = M_x",
                idx([lx]),
                Matrix::chain(&[&self.rho[x][e], &id(f, dx).kron(&c.eps)]),
                Ok(id(f, dx)),
            );
            for a in g.elements() {
                let xa = self.carrier.act(x, a);
                for b in g.elements() {
                    r.compare(
                        "comodule coassociativity",
                        "(ρ_{x,g}⊗C_h)∘ρ_{xg,h} = (M_x⊗Δ_{g,h})∘ρ_{x,gh}",
                        idx([lx, g.label(a), g.label(b)]),
                        Matrix::chain(&[&self.rho[xa][b], &self.rho[x][a].kron(&id(f, c.dims[b]))]),
                        Matrix::chain(&[
                            &self.rho[x][g.mul(a, b)],
                            &id(f, dx).kron(&c.delta[a][b]),
                        ]),
                    );
                }
            }
        }
    }
}

/// Right module over the algebra part of a Hopf group-coalgebra: a weight
/// `f: X → G` and actions `ψ_x: M_x ⊗ H_{f(x)} → M_x`.
#[derive(Clone, Debug, PartialEq)]
pub struct TModule {
    pub hopf: HopfGC,
    pub labels: Vec<String>,
    pub dims: Vec<usize>,
    pub weight: Vec<usize>,
    pub psi: Vec<Matrix>,
}

impl TModule {
    pub fn new(
        hopf: HopfGC,
        labels: Vec<String>,
        dims: Vec<usize>,
        weight: Vec<usize>,
        psi: Vec<Matrix>,
    ) -> Result<TModule> {
        let n = labels.len();
        if dims.len() != n || weight.len() != n || psi.len() != n {
            return Err(Error::Parse(
                "one fiber, weight and action per index are required".into(),
            ));
        }
        for x in 0..n {
            if weight[x] >= hopf.group().order() {
                return Err(Error::Parse(format!(
                    "weight of {} is out of range",
                    labels[x]
                )));
            }
            check_fiber(
                &format!("ψ_{}", labels[x]),
                &psi[x],
                (dims[x], dims[x] * hopf.dim(weight[x])),
                hopf.field(),
            )?;
        }
        Ok(TModule {
            hopf,
            labels,
            dims,
            weight,
            psi,
        })
    }

    /// `H` acting on itself by multiplication, weight `id`.
    pub fn regular(hopf: &HopfGC) -> TModule {
        let g = hopf.group();
        TModule::new(
            hopf.clone(),
            g.labels().to_vec(),
            hopf.dims().to_vec(),
            g.elements().collect(),
            hopf.mu.clone(),
        )
        .expect("regular module")
    }

    /// `({*}, k)` with weight `1` and action through `ε`.
    pub fn unit(hopf: &HopfGC) -> TModule {
        TModule::new(
            hopf.clone(),
            vec!["*".into()],
            vec![1],
            vec![hopf.group().unit()],
            vec![hopf.eps().clone()],
        )
        .expect("unit module")
    }

    /// `N ⊗ H` for a plain family `N`: index `(n, g)`, weight `g`,
    /// action on the `H` factor.
    pub fn free(hopf: &HopfGC, n: &Family) -> TModule {
        let g = hopf.group();
        let f = hopf.field();
        let mut labels = Vec::new();
        let mut dims = Vec::new();
        let mut weight = Vec::new();
        let mut psi = Vec::new();
        for i in 0..n.len() {
            for a in g.elements() {
                labels.push(format!("{},{}", n.label(i), g.label(a)));
                dims.push(n.dim(i) * hopf.dim(a));
                weight.push(a);
                psi.push(id(f, n.dim(i)).kron(&hopf.mu[a]));
            }
        }
        TModule::new(hopf.clone(), labels, dims, weight, psi).expect("free module")
    }

    pub fn field(&self) -> Field {
        self.hopf.field()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn object(&self) -> Family {
        Family::new(self.field(), self.labels.clone(), self.dims.clone())
    }

    /// `ψ` as a Turaev morphism `M ⊗ H → M`, index `x ↦ (x, f(x))`.
    pub fn psi_morphism(&self) -> Result<TMorphism> {
        let n = self.hopf.group().order();
        let m = self.object();
        TMorphism::new(
            m.tensor(&self.hopf.object()),
            m,
            (0..self.len()).map(|x| x * n + self.weight[x]).collect(),
            self.psi.clone(),
        )
    }

    /// Tensor product: weight `f(x) g(y)`, `(p ⊗ q)·h = p h_(1) ⊗ q h_(2)`
    /// through `Δ_{f(x), g(y)}`.
    pub fn tensor(&self, other: &TModule) -> Result<TModule> {
        if self.hopf != other.hopf {
            return Err(Error::Precondition(
                "modules over different Hopf structures".into(),
            ));
        }
        let h = &self.hopf;
        let g = h.group();
        let f = self.field();
        let mut labels = Vec::new();
        let mut dims = Vec::new();
        let mut weight = Vec::new();
        let mut psi = Vec::new();
        for x in 0..self.len() {
            for y in 0..other.len() {
                let (a, b) = (self.weight[x], other.weight[y]);
                let (dp, dq) = (self.dims[x], other.dims[y]);
                labels.push(format!("{},{}", self.labels[x], other.labels[y]));
                dims.push(dp * dq);
                weight.push(g.mul(a, b));
                psi.push(Matrix::chain(&[
                    &id(f, dp * dq).kron(h.delta(a, b)),
                    &middle_swap(f, dp, dq, h.dim(a), h.dim(b)),
                    &self.psi[x].kron(&other.psi[y]),
                ])?);
            }
        }
        TModule::new(h.clone(), labels, dims, weight, psi)
    }

    pub fn verify(&self) -> Report {
        let mut r = Report::new("module");
        self.check_into(&mut r);
        r
    }

    fn check_into(&self, r: &mut Report) {
        let h = &self.hopf;
        let f = self.field();
        for x in 0..self.len() {
            let a = self.weight[x];
            let dx = self.dims[x];
            let p = &self.psi[x];
            r.compare(
                "module associativity",
                "ψ_x∘(ψ_x⊗H) = ψ_x∘(M_x⊗μ_{f(x)})",
                idx([&self.labels[x]]),
                Matrix::chain(&[&p.kron(&id(f, h.dim(a))), p]),
                Matrix::chain(&[&id(f, dx).kron(&h.mu[a]), p]),
            );
            r.compare(
                "module unit",
                "ψ_x∘(M_x⊗η_{f(x)}) = M_x",
                idx([&self.labels[x]]),
                Matrix::chain(&[&id(f, dx).kron(&h.eta[a]), p]),
                Ok(id(f, dx)),
            );
        }
    }

    /// Module laws checked on the packed Turaev morphisms.
    pub fn verify_generic(&self) -> Result<Report> {
        let mut r = Report::new("module (generic)");
        let d = self.hopf.pack();
        check_module(&self.object(), &self.psi_morphism()?, &d.mu, &d.eta, &mut r);
        Ok(r)
    }

    /// Whether a Turaev morphism between modules commutes with the actions.
    pub fn is_linear(&self, target: &TModule, xi: &TMorphism) -> Result<Option<String>> {
        let hid = TMorphism::identity(&self.hopf.object());
        let lhs = xi.compose(&self.psi_morphism()?)?;
        let rhs = target.psi_morphism()?.compose(&xi.tensor(&hid))?;
        Ok(lhs.first_difference(&rhs))
    }
}

/// Comodule and module on a shared carrier with an equivariant weight.
#[derive(Clone, Debug, PartialEq)]
pub struct THopfModule {
    pub comodule: TComodule,
    pub module: TModule,
}

impl THopfModule {
    pub fn new(comodule: TComodule, module: TModule) -> Result<THopfModule> {
        if module.hopf.coalgebra != comodule.coalgebra {
            return Err(Error::Precondition(
                "module and comodule use different structures".into(),
            ));
        }
        if module.dims != comodule.dims || module.labels != comodule.carrier.labels() {
            return Err(Error::Precondition(
                "module and comodule carriers differ".into(),
            ));
        }
        Ok(THopfModule { comodule, module })
    }

    /// `N ⊗ H` with `N` a plain family over `X₀`: carrier `X₀ × G` with
    /// `(x₀, g)·h = (x₀, gh)`, action by `μ` and coaction by `Δ` on the
    /// `H` factor.
    pub fn free(n: &Family, hopf: &HopfGC) -> Result<THopfModule> {
        let report = hopf.verify();
        if !report.all_passed() {
            return Err(Error::Unverified(format!(
                "Hopf structure fails {:?}",
                report.failed_laws()
            )));
        }
        let g = hopf.group();
        let f = hopf.field();
        let k = g.order();
        let module = TModule::free(hopf, n);
        let carrier = RightGSet::new(
            g.clone(),
            module.labels.clone(),
            (0..module.len())
                .map(|p| {
                    g.elements()
                        .map(|b| (p / k) * k + g.mul(p % k, b))
                        .collect()
                })
                .collect(),
        )?;
        let rho = (0..module.len())
            .map(|p| {
                let (i, a) = (p / k, p % k);
                g.elements()
                    .map(|b| id(f, n.dim(i)).kron(hopf.delta(a, b)))
                    .collect()
            })
            .collect();
        let comodule = TComodule::new(hopf.coalgebra.clone(), carrier, module.dims.clone(), rho)?;
        THopfModule::new(comodule, module)
    }

    /// `M_x = H_{f(x)}` over a set-level Hopf module `(X, f)`, with
    /// `ρ_{x,g} = Δ_{f(x),g}` and `ψ_x = μ_{f(x)}`.
    pub fn induced(shape: &SetHopfModule, hopf: &HopfGC) -> Result<THopfModule> {
        let g = hopf.group();
        if shape.group().table() != g.table() {
            return Err(Error::Precondition("shape is over another monoid".into()));
        }
        let x = &shape.base;
        let w = &shape.weight;
        let dims: Vec<usize> = w.iter().map(|&a| hopf.dim(a)).collect();
        let psi = w.iter().map(|&a| hopf.mu[a].clone()).collect();
        let module = TModule::new(
            hopf.clone(),
            x.labels().to_vec(),
            dims.clone(),
            w.clone(),
            psi,
        )?;
        let rho = w
            .iter()
            .map(|&a| g.elements().map(|b| hopf.delta(a, b).clone()).collect())
            .collect();
        let comodule = TComodule::new(hopf.coalgebra.clone(), x.clone(), dims, rho)?;
        THopfModule::new(comodule, module)
    }

    pub fn hopf(&self) -> &HopfGC {
        &self.module.hopf
    }

    pub fn carrier(&self) -> &RightGSet {
        &self.comodule.carrier
    }

    pub fn weight(&self) -> &[usize] {
        &self.module.weight
    }

    pub fn field(&self) -> Field {
        self.hopf().field()
    }

    pub fn object(&self) -> Family {
        self.comodule.object()
    }

    pub fn len(&self) -> usize {
        self.carrier().len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier().is_empty()
    }

    pub fn rho_morphism(&self) -> Result<TMorphism> {
        self.comodule.rho_morphism(&self.hopf().object())
    }

    pub fn psi_morphism(&self) -> Result<TMorphism> {
        self.module.psi_morphism()
    }

    /// The underlying set-level Hopf module `(X, f)`.
    pub fn shadow(&self) -> SetHopfModule {
        SetHopfModule {
            base: self.carrier().clone(),
            weight: self.weight().to_vec(),
        }
    }

    pub fn verify(&self) -> Report {
        let mut r = Report::new("Hopf module");
        r.extend(self.shadow().check());
        self.comodule.check_into(&mut r);
        self.module.check_into(&mut r);
        let h = self.hopf();
        let g = h.group();
        let f = h.field();
        let x_set = self.carrier();
        for x in 0..self.len() {
            let fx = self.weight()[x];
            let dx = self.comodule.dims[x];
            for a in g.elements() {
                let xa = x_set.act(x, a);
                r.compare(
                    "Hopf module compatibility",
                    "ρ_{x,g}∘ψ_{xg} = (ψ_x⊗μ_g)∘(M_x⊗τ⊗H_g)∘(ρ_{x,g}⊗Δ_{f(x),g})",
                    idx([x_set.label(x), g.label(a)]),
                    Matrix::chain(&[&self.module.psi[xa], &self.comodule.rho[x][a]]),
                    Matrix::chain(&[
                        &self.comodule.rho[x][a].kron(h.delta(fx, a)),
                        &middle_swap(f, dx, h.dim(a), h.dim(fx), h.dim(a)),
                        &self.module.psi[x].kron(&h.mu[a]),
                    ]),
                );
            }
        }
        r
    }

    /// All laws re-checked on packed Turaev morphisms.
    pub fn verify_generic(&self) -> Result<Report> {
        let mut r = Report::new("Hopf module (generic)");
        let d = self.hopf().pack();
        let m = self.object();
        let rho = self.rho_morphism()?;
        let psi = self.psi_morphism()?;
        check_comodule(&m, &rho, &d.delta, &d.eps, &mut r);
        check_module(&m, &psi, &d.mu, &d.eta, &mut r);
        check_hopf_module_compat(&m, &d.object, &rho, &psi, &d.mu, &d.delta, &mut r);
        Ok(r)
    }

    /// `M ⊗ η: M → M ⊗ H`, index `(x, g) ↦ x`.
    pub fn trivial_coaction(&self) -> Result<TMorphism> {
        let h = self.hopf();
        let m = self.object();
        let n = h.group().order();
        let f = h.field();
        let mut index = Vec::new();
        let mut maps = Vec::new();
        for x in 0..self.len() {
            for a in 0..n {
                index.push(x);
                maps.push(id(f, m.dim(x)).kron(&h.eta[a]));
            }
        }
        TMorphism::new(m.clone(), m.tensor(&h.object()), index, maps)
    }
}

/// `M^co`: one fiber per orbit, cut out of `∏_{y∈x̄} M_y` by
/// `ρ_{y,g}(m_{y·g}) = m_y ⊗ 1_g`.
#[derive(Clone, Debug)]
pub struct Coinvariants {
    pub object: Family,
    pub orbits: Vec<Vec<usize>>,
    pub orbit_of: Vec<usize>,
    /// Basis of each fiber inside the stacked product, in orbit order.
    pub bases: Vec<Matrix>,
    /// The same object computed as the equalizer of `ρ` and `M ⊗ η`.
    pub equalizer: TEqualizer,
}

impl Coinvariants {
    /// Block of an orbit basis at one member `x`.
    pub fn component(&self, m: &THopfModule, x: usize) -> Matrix {
        let c = self.orbit_of[x];
        let mut at = 0;
        for &y in &self.orbits[c] {
            if y == x {
                break;
            }
            at += m.comodule.dims[y];
        }
        self.bases[c].block(at, m.comodule.dims[x], 0, self.bases[c].cols())
    }
}

/// Coinvariants from the explicit description, cross-checked against the
/// generic equalizer.
pub fn coinvariants(m: &THopfModule) -> Result<Coinvariants> {
    let h = m.hopf();
    let g = h.group();
    let f = h.field();
    let x_set = m.carrier();
    let dims = &m.comodule.dims;
    let orbits = x_set.orbits();
    let mut orbit_of = vec![0; m.len()];
    for (c, o) in orbits.iter().enumerate() {
        for &x in o {
            orbit_of[x] = c;
        }
    }
    let mut bases = Vec::with_capacity(orbits.len());
    for o in &orbits {
        let mut offset = vec![0; m.len()];
        let mut total = 0;
        for &y in o {
            offset[y] = total;
            total += dims[y];
        }
        let mut blocks = Vec::new();
        for &y in o {
            for a in g.elements() {
                let ya = x_set.act(y, a);
                let rows = dims[y] * h.dim(a);
                let mut row = Matrix::zeros(f, rows, total);
                let rho = &m.comodule.rho[y][a];
                let triv = id(f, dims[y]).kron(&h.eta[a]);
                for r in 0..rows {
                    for k in 0..dims[ya] {
                        let mut v = row.get(r, offset[ya] + k).clone();
                        v.add_assign_ref(rho.get(r, k));
                        row.set(r, offset[ya] + k, v);
                    }
                    for k in 0..dims[y] {
                        let v = row.get(r, offset[y] + k).sub_ref(triv.get(r, k));
                        row.set(r, offset[y] + k, v);
                    }
                }
                blocks.push(row);
            }
        }
        let parts: Vec<&Matrix> = blocks.iter().collect();
        bases.push(Matrix::vstack(&parts, f, total)?.kernel_matrix());
    }
    let equalizer = t_equalizer(&m.rho_morphism()?, &m.trivial_coaction()?)?;
    if equalizer.classes != orbits {
        return Err(Error::Invariant(
            "equalizer index set differs from the orbit set".into(),
        ));
    }
    for (c, basis) in bases.iter().enumerate() {
        let other = &equalizer.bases[c];
        if basis.shape() != other.shape() || !basis.same_column_space(other) {
            return Err(Error::Invariant(format!(
                "coinvariant fiber {} differs from the equalizer fiber",
                equalizer.object.label(c)
            )));
        }
    }
    Ok(Coinvariants {
        object: equalizer.object.clone(),
        orbits,
        orbit_of,
        bases,
        equalizer,
    })
}

fn require_fthm(m: &THopfModule) -> Result<()> {
    let h = m.hopf();
    h.group().require_group()?;
    if h.antipode.is_none() {
        return Err(Error::Precondition("an antipode is required".into()));
    }
    let hr = h.verify();
    if !hr.all_passed() {
        return Err(Error::Unverified(format!(
            "Hopf structure fails {:?}",
            hr.failed_laws()
        )));
    }
    let mr = m.verify();
    if !mr.all_passed() {
        return Err(Error::Unverified(format!(
            "Hopf module fails {:?}",
            mr.failed_laws()
        )));
    }
    Ok(())
}

/// `φ: M^co ⊗ H → M`, index `x ↦ (x̄, f(x))`, `(m_y) ⊗ h ↦ m_x·h`.
pub fn fthm_phi(m: &THopfModule) -> Result<TMorphism> {
    require_fthm(m)?;
    phi_from(m, &coinvariants(m)?)
}

fn phi_from(m: &THopfModule, co: &Coinvariants) -> Result<TMorphism> {
    let h = m.hopf();
    let n = h.group().order();
    let f = h.field();
    let source = co.object.tensor(&h.object());
    let mut index = Vec::with_capacity(m.len());
    let mut maps = Vec::with_capacity(m.len());
    for x in 0..m.len() {
        let fx = m.weight()[x];
        index.push(co.orbit_of[x] * n + fx);
        maps.push(Matrix::chain(&[
            &co.component(m, x).kron(&id(f, h.dim(fx))),
            &m.module.psi[x],
        ])?);
    }
    TMorphism::new(source, m.object(), index, maps)
}

/// `ψ∘(M⊗S)∘ρ: M → M`, index `x ↦ x·f(x)⁻¹`.
pub fn coinvariant_probe(m: &THopfModule) -> Result<TMorphism> {
    let h = m.hopf();
    let d = h.pack();
    let s = d
        .antipode
        .ok_or_else(|| Error::Precondition("an antipode is required".into()))?;
    let ms = TMorphism::identity(&m.object()).tensor(&s);
    crate::category::chain(&[&m.rho_morphism()?, &ms, &m.psi_morphism()?])
}

/// `φ⁻¹ = (R ⊗ H)∘ρ` with `R` the factorization of `ψ∘(M⊗S)∘ρ` through the
/// coinvariants. Conflicting orbit representatives are reported as
/// [`Error::IllDefined`].
pub fn fthm_phi_inv(m: &THopfModule) -> Result<TMorphism> {
    require_fthm(m)?;
    phi_inv_from(m, &coinvariants(m)?)
}

fn phi_inv_from(m: &THopfModule, co: &Coinvariants) -> Result<TMorphism> {
    let h = m.hopf();
    let probe = coinvariant_probe(m)?;
    let med = t_equalizer_mediate(
        &m.rho_morphism()?,
        &m.trivial_coaction()?,
        &co.equalizer,
        &probe,
    )?;
    let r = med.morphism.tensor(&TMorphism::identity(&h.object()));
    r.compose(&m.rho_morphism()?)
}

/// Everything the isomorphism check produces.
#[derive(Clone, Debug)]
pub struct FthmOutcome {
    pub coinvariants: Coinvariants,
    pub phi: TMorphism,
    pub phi_inv: TMorphism,
    pub report: Report,
}

pub fn fundamental_theorem(m: &THopfModule) -> Result<FthmOutcome> {
    require_fthm(m)?;
    let co = coinvariants(m)?;
    let phi = phi_from(m, &co)?;
    let phi_inv = phi_inv_from(m, &co)?;
    let h = m.hopf();
    let g = h.group();
    let mut r = Report::new("isomorphism M^co ⊗ H → M");
    let id_m = TMorphism::identity(&m.object());
    let id_co = TMorphism::identity(phi.source());
    let w = match phi.compose(&phi_inv) {
        Ok(c) => c.first_difference(&id_m),
        Err(e) => Some(e.to_string()),
    };
    r.record("φ∘φ⁻¹", "φ∘φ⁻¹ = M", vec![], w);
    let w = match phi_inv.compose(&phi) {
        Ok(c) => c.first_difference(&id_co),
        Err(e) => Some(e.to_string()),
    };
    r.record("φ⁻¹∘φ", "φ⁻¹∘φ = M^co⊗H", vec![], w);
    for x in 0..m.len() {
        let fx = m.weight()[x];
        let lhs = co.object.dim(co.orbit_of[x]) * h.dim(fx);
        let rhs = m.comodule.dims[x];
        r.record(
            "dimension",
            "dim M^co_x̄ · dim H_f(x) = dim M_x",
            idx([m.carrier().label(x), g.label(fx)]),
            (lhs != rhs).then(|| format!("{lhs} vs {rhs}")),
        );
    }
    for (c, o) in co.orbits.iter().enumerate() {
        r.note(format!(
            "orbit {}: {} points, coinvariant dimension {}",
            co.object.label(c),
            o.len(),
            co.object.dim(c)
        ));
    }
    Ok(FthmOutcome {
        coinvariants: co,
        phi,
        phi_inv,
        report: r,
    })
}

/// Projection of the single coinvariant fiber onto one coordinate, for
/// Hopf modules whose carrier is `G` itself with `f = id`.
#[derive(Clone, Debug)]
pub struct ComponentProjection {
    pub element: usize,
    pub matrix: Matrix,
    pub injective: bool,
    /// Whether every coinvariant string is recovered from its entry at
    /// `element` as `m_h = (M_h ⊗ p)ρ_{h, h⁻¹g}(m_g)`.
    pub reconstructs: bool,
}

pub fn is_regular_shape(m: &THopfModule) -> bool {
    let g = m.hopf().group();
    m.len() == g.order()
        && m.carrier().action_table() == g.table()
        && m.weight().iter().enumerate().all(|(x, &fx)| x == fx)
}

pub fn component_projection(m: &THopfModule, element: usize) -> Result<ComponentProjection> {
    if !is_regular_shape(m) {
        return Err(Error::Precondition(
            "carrier must be the regular G-set with identity weight".into(),
        ));
    }
    let h = m.hopf();
    let g = h.group();
    g.require_group()?;
    let co = coinvariants(m)?;
    let p = co.component(m, element);
    let injective = p.rank() == p.cols();
    let basis = &co.bases[0];
    let mut reconstructs = true;
    'outer: for b in g.elements() {
        let k = g.mul(g.inv(b), element);
        let Some(unit) = h.unit_functional(k) else {
            reconstructs = basis.cols() == 0;
            break;
        };
        let map = Matrix::chain(&[
            &m.comodule.rho[b][k],
            &id(h.field(), m.comodule.dims[b]).kron(&unit),
        ])?;
        let recovered = map.mul(&p)?;
        if recovered != co.component(m, b) {
            reconstructs = false;
            break 'outer;
        }
    }
    Ok(ComponentProjection {
        element,
        matrix: p,
        injective,
        reconstructs,
    })
}
