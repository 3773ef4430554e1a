//! Yetter-Drinfeld modules over a (semi-)Hopf group-coalgebra, the
//! half-braiding they induce on right modules, the center axioms checked
//! over a registry of probe modules, and the left-right variant with the
//! conjugacy-class construction.

use crate::category::{chain, Family, Morphism};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hopf::{middle_swap, CrossedHopfGC, HopfGC};
use crate::matrix::Matrix;
use crate::modules::{TComodule, TModule};
use crate::report::{idx, Report};
use crate::setcat::{half_braiding_comodule_sets, CrossedGSet, RightGSet, SetComodule};
use crate::turaev::TMorphism;

fn id(field: Field, n: usize) -> Matrix {
    Matrix::identity(field, n)
}

fn swap(field: Field, m: usize, n: usize) -> Matrix {
    Matrix::swap(field, m, n)
}

/// Records one check per target index of two Turaev morphisms.
fn compare_per_index(
    r: &mut Report,
    law: &str,
    formula: &str,
    lhs: Result<TMorphism>,
    rhs: Result<TMorphism>,
) {
    let (l, rr) = match (lhs, rhs) {
        (Ok(l), Ok(rr)) => (l, rr),
        (Err(e), _) | (_, Err(e)) => {
            r.fail(law, formula, vec![], format!("composite undefined: {e}"));
            return;
        }
    };
    if l.source() != rr.source() || l.target() != rr.target() {
        r.fail(law, formula, vec![], "sides have different types".into());
        return;
    }
    let t = l.target().clone();
    for y in 0..t.len() {
        let witness = if l.index_map()[y] != rr.index_map()[y] {
            Some(format!(
                "reads {} vs {}",
                l.source().label(l.index_map()[y]),
                rr.source().label(rr.index_map()[y])
            ))
        } else {
            l.map(y).first_difference(rr.map(y)).map(|c| {
                format!(
                    "basis vector {c}: {} vs {}",
                    l.map(y).column_string(c),
                    rr.map(y).column_string(c)
                )
            })
        };
        r.record(law, formula, idx([t.label(y)]), witness);
    }
}

/// Right-right Yetter-Drinfeld data: a comodule and a module on one
/// carrier, the module weight playing the role of `ν: V → G`.
#[derive(Clone, Debug, PartialEq)]
pub struct YdModule {
    pub comodule: TComodule,
    pub module: TModule,
}

impl YdModule {
    pub fn new(comodule: TComodule, module: TModule) -> Result<YdModule> {
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
        Ok(YdModule { comodule, module })
    }

    /// `({*}, M)` with `ν(*) = 1` from a classical-style family
    /// `ρ_g: M → M ⊗ H_g` and an `H_1`-action.
    pub fn point(hopf: &HopfGC, rho: Vec<Matrix>, psi: Matrix) -> Result<YdModule> {
        let g = hopf.group();
        let dim = psi.rows();
        let carrier = RightGSet::trivial(g, &["*"]);
        let comodule = TComodule::constant(hopf.coalgebra.clone(), carrier, dim, rho)?;
        let module = TModule::new(
            hopf.clone(),
            vec!["*".into()],
            vec![dim],
            vec![g.unit()],
            vec![psi],
        )?;
        YdModule::new(comodule, module)
    }

    /// `H` over `V = G` with the adjoint action, `ν = id`, `ρ_{v,g} = Δ_{v,g}`
    /// and `ψ_v = μ_v`; needs all fibers of one dimension.
    pub fn adjoint_candidate(hopf: &HopfGC) -> Result<YdModule> {
        let g = hopf.group();
        g.require_group()?;
        let d = hopf.dim(g.unit());
        if hopf.dims().iter().any(|&x| x != d) {
            return Err(Error::Precondition("fibers of different dimensions".into()));
        }
        let carrier = RightGSet::from_fn(g.clone(), g.labels().to_vec(), |v, k| {
            g.mul(g.mul(g.inv(k), v), k)
        })?;
        let rho = g
            .elements()
            .map(|v| g.elements().map(|k| hopf.delta(v, k).clone()).collect())
            .collect();
        let comodule = TComodule::new(hopf.coalgebra.clone(), carrier, hopf.dims().to_vec(), rho)?;
        YdModule::new(comodule, TModule::regular(hopf))
    }

    pub fn hopf(&self) -> &HopfGC {
        &self.module.hopf
    }

    pub fn field(&self) -> Field {
        self.hopf().field()
    }

    pub fn carrier(&self) -> &RightGSet {
        &self.comodule.carrier
    }

    pub fn nu(&self) -> &[usize] {
        &self.module.weight
    }

    pub fn crossed(&self) -> CrossedGSet {
        CrossedGSet {
            base: self.carrier().clone(),
            nu: self.nu().to_vec(),
        }
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

    /// `(M_v ⊗ μ_g)∘(τ⊗H_g)∘(H_g ⊗ ρ_{v,g})∘(H_g ⊗ ψ_{vg})∘(τ⊗H)∘(M ⊗ Δ_{g,ν(vg)})`,
    /// the left side of the compatibility, on `M_{vg} ⊗ H_{ν(v)g}`.
    fn compat_lhs(&self, v: usize, a: usize) -> Result<Matrix> {
        let h = self.hopf();
        let f = self.field();
        let w = self.carrier().act(v, a);
        let nw = self.nu()[w];
        let (dv, dw) = (self.comodule.dims[v], self.comodule.dims[w]);
        let ha = h.dim(a);
        Matrix::chain(&[
            &id(f, dw).kron(h.delta(a, nw)),
            &swap(f, dw, ha).kron(&id(f, h.dim(nw))),
            &id(f, ha).kron(&self.module.psi[w]),
            &id(f, ha).kron(&self.comodule.rho[v][a]),
            &swap(f, ha, dv).kron(&id(f, ha)),
            &id(f, dv).kron(&h.mu[a]),
        ])
    }

    /// `(ψ_v ⊗ μ_g)∘(M⊗τ⊗H)∘(ρ_{v,g} ⊗ Δ_{ν(v),g})`.
    fn compat_rhs(&self, v: usize, a: usize) -> Result<Matrix> {
        let h = self.hopf();
        let f = self.field();
        let nv = self.nu()[v];
        let dv = self.comodule.dims[v];
        Matrix::chain(&[
            &self.comodule.rho[v][a].kron(h.delta(nv, a)),
            &middle_swap(f, dv, h.dim(a), h.dim(nv), h.dim(a)),
            &self.module.psi[v].kron(&h.mu[a]),
        ])
    }

    /// Crossed-set axiom, comodule and module laws, and the compatibility
    /// for every `(v, g)`.
    pub fn verify(&self) -> Report {
        let mut r = Report::new("Yetter-Drinfeld module");
        r.extend(self.crossed().check());
        r.extend(self.comodule.verify());
        r.extend(self.module.verify());
        let g = self.hopf().group();
        for v in 0..self.len() {
            for a in g.elements() {
                r.compare(
                    "YD compatibility",
                    "(mh₂)₀ ⊗ h₁(mh₂)₁ = m₀h₁ ⊗ m₁h₂",
                    idx([self.carrier().label(v), g.label(a)]),
                    self.compat_lhs(v, a),
                    self.compat_rhs(v, a),
                );
            }
        }
        r
    }
}

/// Right modules and module maps used to probe a half-braiding.
#[derive(Clone, Debug)]
pub struct ModuleRegistry {
    pub modules: Vec<(String, TModule)>,
    /// `(name, source, target, map)`.
    pub morphisms: Vec<(String, usize, usize, TMorphism)>,
}

impl ModuleRegistry {
    pub fn empty() -> ModuleRegistry {
        ModuleRegistry {
            modules: vec![],
            morphisms: vec![],
        }
    }

    pub fn unit_only(hopf: &HopfGC) -> ModuleRegistry {
        ModuleRegistry {
            modules: vec![("unit".into(), TModule::unit(hopf))],
            morphisms: vec![],
        }
    }

    /// `H`, the unit, `N ⊗ H` with `N = ({a, b}, (1, 1))`, and the maps
    /// `ε: H → k`, `H → N⊗H` onto the `a` summand and its retraction.
    pub fn standard(hopf: &HopfGC) -> ModuleRegistry {
        let f = hopf.field();
        let g = hopf.group();
        let n = g.order();
        let reg = TModule::regular(hopf);
        let unit = TModule::unit(hopf);
        let n_fam = Family::new(f, vec!["a".into(), "b".into()], vec![1, 1]);
        let free = TModule::free(hopf, &n_fam);
        let hobj = reg.object();
        let eps = TMorphism::new(
            hobj.clone(),
            unit.object(),
            vec![g.unit()],
            vec![hopf.eps().clone()],
        )
        .expect("ε");
        let include = TMorphism::new(
            hobj.clone(),
            free.object(),
            (0..2 * n).map(|p| p % n).collect(),
            (0..2 * n)
                .map(|p| {
                    let d = hopf.dim(p % n);
                    if p < n {
                        id(f, d)
                    } else {
                        Matrix::zeros(f, d, d)
                    }
                })
                .collect(),
        )
        .expect("inclusion");
        let retract = TMorphism::new(
            free.object(),
            hobj,
            (0..n).collect(),
            g.elements().map(|a| id(f, hopf.dim(a))).collect(),
        )
        .expect("retraction");
        ModuleRegistry {
            modules: vec![
                ("H".into(), reg),
                ("unit".into(), unit),
                ("N⊗H".into(), free),
            ],
            morphisms: vec![
                ("ε".into(), 0, 1, eps),
                ("include a".into(), 0, 2, include),
                ("project a".into(), 2, 0, retract),
            ],
        }
    }

    /// Position of the regular module, if registered.
    pub fn regular(&self) -> Option<usize> {
        self.modules.iter().position(|(_, m)| {
            m.labels == m.hopf.group().labels()
                && m.psi == m.hopf.mu
                && m.weight.iter().enumerate().all(|(x, &w)| x == w)
        })
    }

    /// `h ↦ p·h` from `H` into `P`, one for every basis vector `p` of every
    /// fiber (other fibers map by zero).
    pub fn probes(&self) -> Vec<(String, usize, TMorphism)> {
        let mut out = Vec::new();
        for (k, (name, p)) in self.modules.iter().enumerate() {
            let hopf = &p.hopf;
            let f = hopf.field();
            for x in 0..p.len() {
                for i in 0..p.dims[x] {
                    let maps = (0..p.len())
                        .map(|y| {
                            let fy = p.weight[y];
                            let vec = if y == x {
                                Matrix::unit_vector(f, p.dims[y], i)
                            } else {
                                Matrix::zeros(f, p.dims[y], 1)
                            };
                            Matrix::chain(&[&vec.kron(&id(f, hopf.dim(fy))), &p.psi[y]])
                                .expect("probe shapes")
                        })
                        .collect();
                    let phi = TMorphism::new(hopf.object(), p.object(), p.weight.clone(), maps)
                        .expect("probe");
                    out.push((format!("{name}: p = e{i} at {}", p.labels[x]), k, phi));
                }
            }
        }
        out
    }
}

/// `t_P: P ⊗ M → M ⊗ P`, index `(v, x) ↦ (x, v·f(x))`, fiber map
/// `p ⊗ m ↦ m₀ ⊗ p·m₁`.
pub fn half_braiding(m: &YdModule, p: &TModule) -> Result<TMorphism> {
    let f = m.field();
    let nv = m.len();
    let nx = p.len();
    let mut index = Vec::with_capacity(nv * nx);
    let mut maps = Vec::with_capacity(nv * nx);
    for v in 0..nv {
        for x in 0..nx {
            let fx = p.weight[x];
            index.push(x * nv + m.carrier().act(v, fx));
            let (dp, dv) = (p.dims[x], m.comodule.dims[v]);
            maps.push(Matrix::chain(&[
                &id(f, dp).kron(&m.comodule.rho[v][fx]),
                &swap(f, dp, dv).kron(&id(f, m.hopf().dim(fx))),
                &id(f, dv).kron(&p.psi[x]),
            ])?);
        }
    }
    TMorphism::new(
        p.object().tensor(&m.object()),
        m.object().tensor(&p.object()),
        index,
        maps,
    )
}

/// [`half_braiding`] for verified inputs, asserted to be right linear.
pub fn half_braiding_from_yd(m: &YdModule, p: &TModule) -> Result<TMorphism> {
    let r = m.verify();
    if !r.all_passed() {
        return Err(Error::Unverified(format!(
            "YD module fails {:?}",
            r.failed_laws()
        )));
    }
    let r = p.verify();
    if !r.all_passed() {
        return Err(Error::Unverified(format!(
            "module fails {:?}",
            r.failed_laws()
        )));
    }
    let t = half_braiding(m, p)?;
    if let Some(w) = p.tensor(&m.module)?.is_linear(&m.module.tensor(p)?, &t)? {
        return Err(Error::Invariant(format!(
            "half-braiding is not linear: {w}"
        )));
    }
    Ok(t)
}

/// Half-braiding evaluated on every registered module.
#[derive(Clone, Debug, PartialEq)]
pub struct HalfBraiding {
    pub maps: Vec<TMorphism>,
}

pub fn half_braiding_on(m: &YdModule, registry: &ModuleRegistry) -> Result<HalfBraiding> {
    let maps = registry
        .modules
        .iter()
        .map(|(_, p)| half_braiding(m, p))
        .collect::<Result<_>>()?;
    Ok(HalfBraiding { maps })
}

/// The center axioms for `(M, t)` over a registry: module carrier,
/// naturality (registered maps and generated probes), tensor condition over
/// all ordered pairs, unit condition, and linearity of each `t_P`.
pub fn verify_center_object(m: &YdModule, registry: &ModuleRegistry) -> Report {
    let mut r = Report::new("center object");
    let carrier = m.module.verify();
    r.record(
        "module carrier",
        "M is a right H-module",
        vec![],
        (!carrier.all_passed()).then(|| format!("fails {:?}", carrier.failed_laws())),
    );
    if registry.modules.is_empty() {
        r.note("empty registry: the center conditions hold vacuously");
        return r;
    }
    let ts: Vec<Result<TMorphism>> = registry
        .modules
        .iter()
        .map(|(_, p)| half_braiding(m, p))
        .collect();
    let mobj = m.object();
    let id_m = TMorphism::identity(&mobj);
    let naturality = |r: &mut Report, name: &str, s: usize, t: usize, xi: &TMorphism| {
        let w = match (&ts[s], &ts[t]) {
            (Ok(tp), Ok(tq)) => {
                let lhs = tq.compose(&xi.tensor(&id_m));
                let rhs = id_m.tensor(xi).compose(tp);
                match (lhs, rhs) {
                    (Ok(a), Ok(b)) => a.first_difference(&b),
                    (Err(e), _) | (_, Err(e)) => Some(e.to_string()),
                }
            }
            (Err(e), _) | (_, Err(e)) => Some(e.to_string()),
        };
        r.record("naturality", "t_Q∘(ξ⊗M) = (M⊗ξ)∘t_P", idx([name]), w);
    };
    for (name, s, t, xi) in &registry.morphisms {
        naturality(&mut r, name, *s, *t, xi);
    }
    if let Some(hpos) = registry.regular() {
        for (name, t, xi) in registry.probes() {
            naturality(&mut r, &name, hpos, t, &xi);
        }
    } else {
        r.note("registry lacks H: probe morphisms skipped");
    }
    for (i, (pn, p)) in registry.modules.iter().enumerate() {
        for (j, (qn, q)) in registry.modules.iter().enumerate() {
            let w = (|| -> Result<Option<String>> {
                let pq = p.tensor(q)?;
                let t_pq = half_braiding(m, &pq)?;
                let tp = ts[i].clone()?;
                let tq = ts[j].clone()?;
                let id_p = TMorphism::identity(&p.object());
                let id_q = TMorphism::identity(&q.object());
                let composite = chain(&[&id_p.tensor(&tq), &tp.tensor(&id_q)])?;
                Ok(composite.first_difference(&t_pq))
            })();
            let w = w.unwrap_or_else(|e| Some(e.to_string()));
            r.record("tensor", "(t_P⊗Q)∘(P⊗t_Q) = t_{P⊗Q}", idx([pn, qn]), w);
        }
    }
    let w = (|| -> Result<Option<String>> {
        let t_k = half_braiding(m, &TModule::unit(m.hopf()))?;
        Ok(t_k.first_difference(&id_m))
    })();
    r.record(
        "unit",
        "t_k = M",
        vec![],
        w.unwrap_or_else(|e| Some(e.to_string())),
    );
    for (k, (name, p)) in registry.modules.iter().enumerate() {
        let w = (|| -> Result<Option<String>> {
            let t = ts[k].clone()?;
            p.tensor(&m.module)?.is_linear(&m.module.tensor(p)?, &t)
        })();
        r.record(
            "linearity",
            "t_P is right H-linear",
            idx([name]),
            w.unwrap_or_else(|e| Some(e.to_string())),
        );
    }
    r
}

/// Rebuilds the YD structure from a half-braiding: the action on `V` from
/// the index map of `t_H`, `ρ = t_H∘(η⊗M)`, and then checks that the
/// regenerated half-braiding reproduces `t` on the whole registry.
pub fn yd_from_half_braiding(
    module: &TModule,
    t: &HalfBraiding,
    registry: &ModuleRegistry,
) -> Result<YdModule> {
    let hpos = registry
        .regular()
        .ok_or_else(|| Error::Precondition("the registry must contain H".into()))?;
    let hopf = &module.hopf;
    let g = hopf.group();
    let n = g.order();
    let nv = module.len();
    let t_h = &t.maps[hpos];
    let action: Vec<Vec<usize>> = (0..nv)
        .map(|v| {
            g.elements()
                .map(|a| t_h.index_map()[v * n + a] % nv)
                .collect()
        })
        .collect();
    let carrier = RightGSet::new(g.clone(), module.labels.clone(), action)?;
    let d = hopf.pack();
    let mobj = module.object();
    let eta_m = d.eta.tensor(&TMorphism::identity(&mobj));
    let rho_t = t_h.compose(&eta_m)?;
    let mut rho = vec![Vec::with_capacity(n); nv];
    for v in 0..nv {
        for a in g.elements() {
            if rho_t.index_map()[v * n + a] != carrier.act(v, a) {
                return Err(Error::Invariant(format!(
                    "t_H does not read (g, v·g) at ({}, {})",
                    module.labels[v],
                    g.label(a)
                )));
            }
            rho[v].push(rho_t.map(v * n + a).clone());
        }
    }
    let comodule = TComodule::new(hopf.coalgebra.clone(), carrier, module.dims.clone(), rho)?;
    let yd = YdModule::new(comodule, module.clone())?;
    let regenerated = half_braiding_on(&yd, registry)?;
    for (k, (name, _)) in registry.modules.iter().enumerate() {
        if let Some(w) = regenerated.maps[k].first_difference(&t.maps[k]) {
            return Err(Error::Invariant(format!(
                "regenerated t_{name} differs: {w}"
            )));
        }
    }
    Ok(yd)
}

/// Index maps of `t_P` agree with the set-level half-braiding of the
/// crossed set `(V, ν)` on `(X, f)` seen as a set over `G`.
pub fn shadow_matches(m: &YdModule, p: &TModule) -> Result<bool> {
    let t = half_braiding(m, p)?;
    let labels: Vec<&str> = p.labels.iter().map(String::as_str).collect();
    let x = SetComodule::new(&labels, p.weight.clone());
    Ok(t.index_map() == half_braiding_comodule_sets(&m.crossed(), &x))
}

/// Left module `ψ_v: H_{ν(v)} ⊗ M_v → M_v` with a right comodule on the
/// same carrier.
#[derive(Clone, Debug, PartialEq)]
pub struct LeftRightYd {
    pub hopf: HopfGC,
    pub comodule: TComodule,
    pub nu: Vec<usize>,
    pub psi: Vec<Matrix>,
}

impl LeftRightYd {
    pub fn new(
        hopf: HopfGC,
        comodule: TComodule,
        nu: Vec<usize>,
        psi: Vec<Matrix>,
    ) -> Result<LeftRightYd> {
        if hopf.coalgebra != comodule.coalgebra {
            return Err(Error::Precondition(
                "comodule over another structure".into(),
            ));
        }
        let nv = comodule.carrier.len();
        if nu.len() != nv || psi.len() != nv {
            return Err(Error::Parse(
                "one weight and one action per index are required".into(),
            ));
        }
        for v in 0..nv {
            let d = comodule.dims[v];
            if nu[v] >= hopf.group().order() || psi[v].shape() != (d, hopf.dim(nu[v]) * d) {
                return Err(Error::Parse(format!(
                    "left action at {} has the wrong shape",
                    comodule.carrier.label(v)
                )));
            }
        }
        Ok(LeftRightYd {
            hopf,
            comodule,
            nu,
            psi,
        })
    }

    pub fn object(&self) -> Family {
        self.comodule.object()
    }

    /// `ψ: H ⊗ M → M`, index `v ↦ (ν(v), v)`.
    pub fn psi_morphism(&self) -> Result<TMorphism> {
        let m = self.object();
        let nv = m.len();
        TMorphism::new(
            self.hopf.object().tensor(&m),
            m,
            (0..nv).map(|v| self.nu[v] * nv + v).collect(),
            self.psi.clone(),
        )
    }

    pub fn verify(&self) -> Report {
        let mut r = Report::new("left-right Yetter-Drinfeld module");
        r.extend(self.comodule.verify());
        let h = &self.hopf;
        let f = h.field();
        for v in 0..self.nu.len() {
            let a = self.nu[v];
            let d = self.comodule.dims[v];
            let p = &self.psi[v];
            let lv = idx([self.comodule.carrier.label(v)]);
            r.compare(
                "left module associativity",
                "ψ_v∘(μ⊗M_v) = ψ_v∘(H⊗ψ_v)",
                lv.clone(),
                Matrix::chain(&[&h.mu[a].kron(&id(f, d)), p]),
                Matrix::chain(&[&id(f, h.dim(a)).kron(p), p]),
            );
            r.compare(
                "left module unit",
                "ψ_v∘(η⊗M_v) = M_v",
                lv,
                Matrix::chain(&[&h.eta[a].kron(&id(f, d)), p]),
                Ok(id(f, d)),
            );
        }
        let (lhs, rhs) = self.composites();
        compare_per_index(
            &mut r,
            "left-right YD compatibility",
            "(ψ⊗μ)∘(H⊗τ⊗H)∘(Δ⊗ρ) = (M⊗μ)∘(ρ⊗H)∘τ∘(H⊗ψ)∘(Δ⊗M)",
            lhs,
            rhs,
        );
        r
    }

    /// Both sides of the compatibility as Turaev morphisms `H⊗M → M⊗H`.
    pub fn composites(&self) -> (Result<TMorphism>, Result<TMorphism>) {
        let d = self.hopf.pack();
        let hobj = &d.object;
        let m = self.object();
        let id_h = TMorphism::identity(hobj);
        let id_m = TMorphism::identity(&m);
        let build = || -> Result<(TMorphism, TMorphism)> {
            let rho = self.comodule.rho_morphism(hobj)?;
            let psi = self.psi_morphism()?;
            let tau_hm = TMorphism::symmetry(hobj, &m);
            let lhs = chain(&[
                &d.delta.tensor(&rho),
                &id_h.tensor(&tau_hm).tensor(&id_h),
                &psi.tensor(&d.mu),
            ])?;
            let rhs = chain(&[
                &d.delta.tensor(&id_m),
                &id_h.tensor(&psi),
                &tau_hm,
                &rho.tensor(&id_h),
                &id_m.tensor(&d.mu),
            ])?;
            Ok((lhs, rhs))
        };
        match build() {
            Ok((l, r)) => (Ok(l), Ok(r)),
            Err(e) => (Err(e.clone()), Err(e)),
        }
    }
}

/// Output of the conjugacy-class construction.
#[derive(Clone, Debug)]
pub struct ConjugacyLift {
    pub element: usize,
    /// Group elements making up `V`, in carrier order.
    pub class: Vec<usize>,
    pub bundle: LeftRightYd,
    /// The compatibility specialized at `h = 1`, one verdict per `l`.
    pub conjugated: Vec<bool>,
    /// The g-Yetter-Drinfeld condition with the conjugation taken by `g⁻¹`.
    pub g_yd: Vec<bool>,
    pub report: Report,
}

impl ConjugacyLift {
    pub fn conjugated_holds(&self) -> bool {
        self.conjugated.iter().all(|&b| b)
    }

    pub fn g_yd_holds(&self) -> bool {
        self.g_yd.iter().all(|&b| b)
    }
}

/// Builds the left-right bundle on the conjugacy class `V` of `g` from a
/// left `H_g`-module `λ: H_g ⊗ M → M` and a family `ρ_l: M → M ⊗ H_l`:
/// `M_v = M`, `a·m = φ^v_h(a) m` for `v = h⁻¹gh`, `ρ_{v,k} = ρ_k`.
///
/// Refused when different `h` give different actions.
pub fn conjugacy_class_lift(
    h: &CrossedHopfGC,
    element: usize,
    lambda: &Matrix,
    rho_l: &[Matrix],
) -> Result<ConjugacyLift> {
    let hp = &h.hopf;
    let g = hp.group();
    let f = hp.field();
    g.require_group()?;
    let crossed = h.verify();
    let broken: Vec<_> = crossed
        .failed_laws()
        .into_iter()
        .filter(|l| l != "conjugation independence")
        .collect();
    if !broken.is_empty() {
        return Err(Error::Unverified(format!(
            "crossed structure fails {broken:?}"
        )));
    }
    let d = lambda.rows();
    let hg = hp.dim(element);
    if lambda.shape() != (d, hg * d) {
        return Err(Error::Parse("λ must map H_g ⊗ M to M".into()));
    }
    let lam_check = LeftRightYd {
        hopf: hp.clone(),
        comodule: TComodule::constant(
            hp.coalgebra.clone(),
            RightGSet::trivial(g, &["*"]),
            d,
            rho_l.to_vec(),
        )?,
        nu: vec![element],
        psi: vec![lambda.clone()],
    };
    let pre = lam_check.verify();
    let pre_fail: Vec<_> = pre
        .failed_laws()
        .into_iter()
        .filter(|l| l != "left-right YD compatibility")
        .collect();
    if !pre_fail.is_empty() {
        return Err(Error::Unverified(format!("M or ρ fails {pre_fail:?}")));
    }
    let cs = CrossedGSet::conjugacy_class(g, element)?;
    let class = cs.nu.clone();
    let nv = class.len();
    let mut psi = Vec::with_capacity(nv);
    for &v in &class {
        let mut chosen: Option<(usize, Matrix)> = None;
        for k in g.elements() {
            if g.conjugate(g.inv(k), element) != v {
                continue;
            }
            let action = Matrix::chain(&[&h.phi[k][v].kron(&id(f, d)), lambda])?;
            match &chosen {
                None => chosen = Some((k, action)),
                Some((k0, a0)) if *a0 != action => {
                    return Err(Error::IllDefined {
                        class: g.label(v).to_string(),
                        first: g.label(*k0).to_string(),
                        second: g.label(k).to_string(),
                    });
                }
                Some(_) => {}
            }
        }
        psi.push(chosen.expect("class member is a conjugate").1);
    }
    let comodule = TComodule::constant(hp.coalgebra.clone(), cs.base.clone(), d, rho_l.to_vec())?;
    let bundle = LeftRightYd::new(hp.clone(), comodule, class.clone(), psi)?;
    let mut report = bundle.verify();
    report.title = format!("conjugacy-class lift at {}", g.label(element));

    let mut conjugated = Vec::new();
    let mut g_yd = Vec::new();
    let gi = g.inv(element);
    for l in g.elements() {
        let hl = hp.dim(l);
        let lhs = Matrix::chain(&[
            &hp.delta(element, l).kron(&rho_l[l]),
            &middle_swap(f, hg, hl, d, hl),
            &lambda.kron(&hp.mu[l]),
        ]);
        let tail = |conj: &Matrix, split: &Matrix| {
            Matrix::chain(&[
                &split.kron(&id(f, d)),
                conj,
                &id(f, hl).kron(lambda),
                &id(f, hl).kron(&rho_l[l]),
                &swap(f, hl, d * hl),
                &id(f, d).kron(&hp.mu[l]),
            ])
        };
        let c = g.conjugate(g.inv(l), element);
        let rhs = tail(
            &id(f, hl).kron(&h.phi[l][c]).kron(&id(f, d)),
            hp.delta(l, c),
        );
        let w = crate::matrix::difference(&lhs, &rhs);
        conjugated.push(w.is_none());
        report.record(
            "conjugated condition (h = 1)",
            "a₁m₀ ⊗ a₂m₁ = (φ_l(a₂)m)₀ ⊗ (φ_l(a₂)m)₁a₁",
            idx([g.label(l)]),
            w,
        );
        let c2 = g.conjugate(element, l);
        let rhs2 = tail(
            &h.phi[gi][c2].kron(&id(f, hg)).kron(&id(f, d)),
            hp.delta(c2, element),
        );
        let w2 = crate::matrix::difference(&lhs, &rhs2);
        g_yd.push(w2.is_none());
        report.record(
            "g-YD condition (α = g)",
            "a₁m₀ ⊗ a₂m₁ = (a₂m)₀ ⊗ (a₂m)₁φ_{g⁻¹}(a₁)",
            idx([g.label(l)]),
            w2,
        );
    }
    report.note("the conjugation in the g-YD condition is read as φ_{g⁻¹} (α = g)");
    Ok(ConjugacyLift {
        element,
        class,
        bundle,
        conjugated,
        g_yd,
        report,
    })
}
