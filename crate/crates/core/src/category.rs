//! Set-indexed families of vector spaces and the operations shared by the
//! Turaev and Zunino categories, together with the generic (co)algebra,
//! bialgebra and Hopf-algebra laws stated purely in terms of composition,
//! tensor product and symmetry.

use std::fmt;

use crate::error::Result;
use crate::field::Field;
use crate::report::Report;

/// An object of either category: finitely many indices, each carrying a
/// vector space given by its dimension (with its standard basis).
///
/// Equality compares the field and the dimension list only; labels are
/// cosmetic. This makes the strictness identifications `(X⊗Y)⊗Z = X⊗(Y⊗Z)`
/// and `X⊗I = X` literal.
#[derive(Clone, Debug, Eq)]
pub struct Family {
    field: Field,
    labels: Vec<String>,
    dims: Vec<usize>,
}

impl PartialEq for Family {
    fn eq(&self, other: &Family) -> bool {
        self.field == other.field && self.dims == other.dims
    }
}

impl Family {
    pub fn new(field: Field, labels: Vec<String>, dims: Vec<usize>) -> Family {
        assert_eq!(labels.len(), dims.len(), "one dimension per index");
        Family {
            field,
            labels,
            dims,
        }
    }

    /// Indices labelled `0, 1, ...`.
    pub fn from_dims(field: Field, dims: &[usize]) -> Family {
        let labels = (0..dims.len()).map(|i| i.to_string()).collect();
        Family::new(field, labels, dims.to_vec())
    }

    /// The unit object `({*}, k)`.
    pub fn unit(field: Field) -> Family {
        Family::new(field, vec!["*".into()], vec![1])
    }

    pub fn empty(field: Field) -> Family {
        Family::new(field, vec![], vec![])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn dim(&self, i: usize) -> usize {
        self.dims[i]
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Product index set, pair `(x, y)` at `x * |Y| + y`, labels joined by a
    /// comma.
    pub fn tensor(&self, other: &Family) -> Family {
        assert_eq!(self.field, other.field, "tensor across fields");
        let mut labels = Vec::with_capacity(self.len() * other.len());
        let mut dims = Vec::with_capacity(self.len() * other.len());
        for (a, &da) in self.labels.iter().zip(&self.dims) {
            for (b, &db) in other.labels.iter().zip(&other.dims) {
                labels.push(format!("{a},{b}"));
                dims.push(da * db);
            }
        }
        Family::new(self.field, labels, dims)
    }

    pub fn relabel(&self, labels: Vec<String>) -> Family {
        Family::new(self.field, labels, self.dims.clone())
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .labels
            .iter()
            .zip(&self.dims)
            .map(|(l, d)| format!("{l}: {d}"))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// What the generic checkers need from a category of families.
pub trait Morphism: Clone + PartialEq + Sized {
    fn source(&self) -> &Family;
    fn target(&self) -> &Family;
    fn identity(object: &Family) -> Self;
    /// `self ∘ first`.
    fn compose(&self, first: &Self) -> Result<Self>;
    fn tensor(&self, other: &Self) -> Self;
    /// The switch `a ⊗ b → b ⊗ a`.
    fn symmetry(a: &Family, b: &Family) -> Self;
    /// Description of the first index (and basis column) where two parallel
    /// morphisms disagree.
    fn first_difference(&self, other: &Self) -> Option<String>;
}

/// Composes a chain given in application order: `chain(&[f, g, h])` is
/// `h ∘ g ∘ f`.
pub fn chain<M: Morphism>(maps: &[&M]) -> Result<M> {
    let mut acc = maps[0].clone();
    for m in &maps[1..] {
        acc = m.compose(&acc)?;
    }
    Ok(acc)
}

fn compare<M: Morphism>(r: &mut Report, law: &str, formula: &str, lhs: Result<M>, rhs: Result<M>) {
    let witness = match (lhs, rhs) {
        (Ok(l), Ok(r)) => {
            if l.source() != r.source() || l.target() != r.target() {
                Some(format!(
                    "sides have different types: {} → {} vs {} → {}",
                    l.source(),
                    l.target(),
                    r.source(),
                    r.target()
                ))
            } else {
                l.first_difference(&r)
            }
        }
        (Err(e), _) | (_, Err(e)) => Some(format!("composite undefined: {e}")),
    };
    r.record(law, formula, vec![], witness);
}

/// Structure maps of a (co)algebra-type object in a category of families.
#[derive(Clone, Debug)]
pub struct BialgebraData<M> {
    pub object: Family,
    pub mu: M,
    pub eta: M,
    pub delta: M,
    pub eps: M,
    pub antipode: Option<M>,
}

pub fn check_algebra<M: Morphism>(h: &Family, mu: &M, eta: &M, r: &mut Report) {
    let id = M::identity(h);
    compare(
        r,
        "associativity",
        "μ∘(μ⊗H) = μ∘(H⊗μ)",
        mu.compose(&mu.tensor(&id)),
        mu.compose(&id.tensor(mu)),
    );
    compare(
        r,
        "unit",
        "μ∘(η⊗H) = H",
        mu.compose(&eta.tensor(&id)),
        Ok(id.clone()),
    );
    compare(
        r,
        "unit",
        "μ∘(H⊗η) = H",
        mu.compose(&id.tensor(eta)),
        Ok(id),
    );
}

pub fn check_coalgebra<M: Morphism>(h: &Family, delta: &M, eps: &M, r: &mut Report) {
    let id = M::identity(h);
    compare(
        r,
        "coassociativity",
        "(Δ⊗H)∘Δ = (H⊗Δ)∘Δ",
        delta.tensor(&id).compose(delta),
        id.tensor(delta).compose(delta),
    );
    compare(
        r,
        "counit",
        "(ε⊗H)∘Δ = H",
        eps.tensor(&id).compose(delta),
        Ok(id.clone()),
    );
    compare(
        r,
        "counit",
        "(H⊗ε)∘Δ = H",
        id.tensor(eps).compose(delta),
        Ok(id),
    );
}

/// `μ ∘ (f ⊗ g) ∘ Δ`.
pub fn convolution<M: Morphism>(mu: &M, delta: &M, f: &M, g: &M) -> Result<M> {
    chain(&[delta, &f.tensor(g), mu])
}

/// Generic bialgebra (and, when an antipode is present, Hopf algebra) laws.
pub fn check_bialgebra<M: Morphism>(d: &BialgebraData<M>, title: &str) -> Report {
    let mut r = Report::new(title);
    let h = &d.object;
    let id = M::identity(h);
    check_algebra(h, &d.mu, &d.eta, &mut r);
    check_coalgebra(h, &d.delta, &d.eps, &mut r);
    let tau = M::symmetry(h, h);
    let middle = id.tensor(&tau).tensor(&id);
    compare(
        &mut r,
        "bialgebra Δ∘μ",
        "Δ∘μ = (μ⊗μ)∘(H⊗τ⊗H)∘(Δ⊗Δ)",
        d.delta.compose(&d.mu),
        chain(&[&d.delta.tensor(&d.delta), &middle, &d.mu.tensor(&d.mu)]),
    );
    compare(
        &mut r,
        "bialgebra ε∘μ",
        "ε∘μ = ε⊗ε",
        d.eps.compose(&d.mu),
        Ok(d.eps.tensor(&d.eps)),
    );
    compare(
        &mut r,
        "bialgebra Δ∘η",
        "Δ∘η = η⊗η",
        d.delta.compose(&d.eta),
        Ok(d.eta.tensor(&d.eta)),
    );
    compare(
        &mut r,
        "bialgebra ε∘η",
        "ε∘η = id",
        d.eps.compose(&d.eta),
        Ok(M::identity(d.eta.source())),
    );
    if let Some(s) = &d.antipode {
        let unit = d.eta.compose(&d.eps);
        compare(
            &mut r,
            "antipode S*id",
            "μ∘(S⊗H)∘Δ = η∘ε",
            convolution(&d.mu, &d.delta, s, &id),
            unit.clone(),
        );
        compare(
            &mut r,
            "antipode id*S",
            "μ∘(H⊗S)∘Δ = η∘ε",
            convolution(&d.mu, &d.delta, &id, s),
            unit,
        );
    }
    r
}

/// Right module laws for `ψ: M⊗H → M`.
pub fn check_module<M: Morphism>(m: &Family, psi: &M, mu: &M, eta: &M, r: &mut Report) {
    let id_m = M::identity(m);
    let id_h = M::identity(eta.target());
    compare(
        r,
        "module associativity",
        "ψ∘(ψ⊗H) = ψ∘(M⊗μ)",
        psi.compose(&psi.tensor(&id_h)),
        psi.compose(&id_m.tensor(mu)),
    );
    compare(
        r,
        "module unit",
        "ψ∘(M⊗η) = M",
        psi.compose(&id_m.tensor(eta)),
        Ok(id_m),
    );
}

/// Right comodule laws for `ρ: M → M⊗H`.
pub fn check_comodule<M: Morphism>(m: &Family, rho: &M, delta: &M, eps: &M, r: &mut Report) {
    let id_m = M::identity(m);
    let id_h = M::identity(eps.source());
    compare(
        r,
        "comodule coassociativity",
        "(ρ⊗H)∘ρ = (M⊗Δ)∘ρ",
        rho.tensor(&id_h).compose(rho),
        id_m.tensor(delta).compose(rho),
    );
    compare(
        r,
        "comodule counit",
        "(M⊗ε)∘ρ = M",
        id_m.tensor(eps).compose(rho),
        Ok(id_m),
    );
}

/// Hopf-module compatibility `ρ∘ψ = (ψ⊗μ)∘(M⊗τ⊗H)∘(ρ⊗Δ)`.
pub fn check_hopf_module_compat<M: Morphism>(
    m: &Family,
    h: &Family,
    rho: &M,
    psi: &M,
    mu: &M,
    delta: &M,
    r: &mut Report,
) {
    let id_m = M::identity(m);
    let id_h = M::identity(h);
    let tau = M::symmetry(h, h);
    compare(
        r,
        "Hopf module compatibility",
        "ρ∘ψ = (ψ⊗μ)∘(M⊗τ⊗H)∘(ρ⊗Δ)",
        rho.compose(psi),
        chain(&[
            &rho.tensor(delta),
            &id_m.tensor(&tau).tensor(&id_h),
            &psi.tensor(mu),
        ]),
    );
}
