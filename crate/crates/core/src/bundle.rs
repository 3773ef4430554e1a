//! JSON bundles: groups, Hopf structures, modules and morphisms stored by
//! id, with cross-references by id. Scalars travel as strings (`"3/4"`,
//! `"2 mod 5"`), and index pairs are keyed as `"g,h"`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::category::Family;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::fixtures::LiftInput;
use crate::hopf::{CrossedHopfGC, GroupAlgebra, GroupCoalgebra, HopfGA, HopfGC};
use crate::matrix::Matrix;
use crate::modules::{TComodule, THopfModule, TModule};
use crate::setcat::{Monoid, RightGSet};
use crate::turaev::TMorphism;
use crate::yd::YdModule;
use crate::zunino::ZMorphism;

pub const SCHEMA_VERSION: u32 = 1;

/// Row-major table of scalar strings.
pub type MatrixSpec = Vec<Vec<String>>;
pub type Table<T> = BTreeMap<String, T>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Bundle {
    pub schema_version: u32,
    /// `q` or `gf:p`.
    pub field: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub groups: Table<GroupSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub entries: Table<EntrySpec>,
}

/// Cayley table: `table[i][j]` is the label of `elements[i]·elements[j]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    pub elements: Vec<String>,
    pub table: Vec<Vec<String>>,
}

/// Right action table: `action[i][j]` is `points[i]·elements[j]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GSetSpec {
    pub points: Vec<String>,
    pub action: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum EntrySpec {
    HopfGc(HopfGcSpec),
    HopfGa(HopfGaSpec),
    CrossedHopfGc(CrossedSpec),
    Module(ModuleSpec),
    HopfModule(HopfModuleSpec),
    YdModule(YdSpec),
    ConjugacyLift(LiftSpec),
    TMorphism(MorphismSpec),
    ZMorphism(MorphismSpec),
}

impl EntrySpec {
    pub fn kind(&self) -> &'static str {
        match self {
            EntrySpec::HopfGc(_) => "hopf-gc",
            EntrySpec::HopfGa(_) => "hopf-ga",
            EntrySpec::CrossedHopfGc(_) => "crossed-hopf-gc",
            EntrySpec::Module(_) => "module",
            EntrySpec::HopfModule(_) => "hopf-module",
            EntrySpec::YdModule(_) => "yd-module",
            EntrySpec::ConjugacyLift(_) => "conjugacy-lift",
            EntrySpec::TMorphism(_) => "t-morphism",
            EntrySpec::ZMorphism(_) => "z-morphism",
        }
    }

    /// Laws the entry is recorded to fail, if the bundle says so.
    pub fn expected_failures(&self) -> Option<&BTreeSet<String>> {
        match self {
            EntrySpec::HopfGc(s) => s.expected_failures.as_ref(),
            EntrySpec::HopfGa(s) => s.expected_failures.as_ref(),
            EntrySpec::CrossedHopfGc(s) => s.expected_failures.as_ref(),
            EntrySpec::Module(s) => s.expected_failures.as_ref(),
            EntrySpec::HopfModule(s) => s.expected_failures.as_ref(),
            EntrySpec::YdModule(s) => s.expected_failures.as_ref(),
            EntrySpec::ConjugacyLift(s) => s.expected_failures.as_ref(),
            EntrySpec::TMorphism(_) | EntrySpec::ZMorphism(_) => None,
        }
    }
}

/// Δ keyed `"g,h"`, μ/η/S keyed by element.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfGcSpec {
    pub group: String,
    pub fibers: Table<usize>,
    pub delta: Table<MatrixSpec>,
    pub eps: MatrixSpec,
    pub mu: Table<MatrixSpec>,
    pub eta: Table<MatrixSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Table<MatrixSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_failures: Option<BTreeSet<String>>,
}

/// μ keyed `"g,h"`, Δ/ε/S keyed by element.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfGaSpec {
    pub group: String,
    pub fibers: Table<usize>,
    pub mu: Table<MatrixSpec>,
    pub eta: MatrixSpec,
    pub delta: Table<MatrixSpec>,
    pub eps: Table<MatrixSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Table<MatrixSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_failures: Option<BTreeSet<String>>,
}

/// `phi["k,h"]` is conjugation by `k` restricted to `H_h`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CrossedSpec {
    pub hopf: String,
    pub phi: Table<MatrixSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_failures: Option<BTreeSet<String>>,
}

/// A right module over a Hopf group-coalgebra, used in registries.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    pub hopf: String,
    pub points: Vec<String>,
    pub dims: Table<usize>,
    pub weight: Table<String>,
    pub psi: Table<MatrixSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_failures: Option<BTreeSet<String>>,
}

/// `rho[x][g]: M_{x·g} → M_x ⊗ H_g`, `psi[x]: M_x ⊗ H_{f(x)} → M_x`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfModuleSpec {
    pub hopf: String,
    pub carrier: GSetSpec,
    pub dims: Table<usize>,
    pub weight: Table<String>,
    pub rho: Table<Table<MatrixSpec>>,
    pub psi: Table<MatrixSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_failures: Option<BTreeSet<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct YdSpec {
    pub hopf: String,
    pub carrier: GSetSpec,
    pub dims: Table<usize>,
    pub nu: Table<String>,
    pub rho: Table<Table<MatrixSpec>>,
    pub psi: Table<MatrixSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_failures: Option<BTreeSet<String>>,
}

/// `lambda: H_g ⊗ M → M` and `rho[l]: M → M ⊗ H_l`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LiftSpec {
    pub crossed: String,
    pub element: String,
    pub lambda: MatrixSpec,
    pub rho: Table<MatrixSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_failures: Option<BTreeSet<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObjectSpec {
    pub index: Vec<String>,
    pub dims: Table<usize>,
}

/// For `t-morphism` the index map and maps are keyed by target labels and
/// point backwards; for `z-morphism` they are keyed by source labels.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismSpec {
    pub source: ObjectSpec,
    pub target: ObjectSpec,
    pub direction: Direction,
    pub index_map: Table<String>,
    pub maps: Table<MatrixSpec>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    TargetToSource,
    SourceToTarget,
}

/// A resolved bundle entry.
#[derive(Clone, Debug)]
pub enum Item {
    HopfGc(HopfGC),
    HopfGa(HopfGA),
    Crossed(CrossedHopfGC),
    Module(TModule),
    HopfModule(THopfModule),
    Yd(YdModule),
    Lift(LiftInput),
    TMorphism(TMorphism),
    ZMorphism(ZMorphism),
}

fn parse_err(loc: &str, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("{loc}: {msg}"))
}

fn pair(a: &str, b: &str) -> String {
    format!("{a},{b}")
}

/// Values of `table` in `keys` order; rejects missing and unexpected keys.
fn take<'a, T>(loc: &str, table: &'a Table<T>, keys: &[String]) -> Result<Vec<&'a T>> {
    if let Some(k) = table.keys().find(|k| !keys.contains(k)) {
        return Err(parse_err(loc, format!("unexpected key {k:?}")));
    }
    keys.iter()
        .map(|k| {
            table
                .get(k)
                .ok_or_else(|| parse_err(loc, format!("missing key {k:?}")))
        })
        .collect()
}

fn pair_keys(a: &[String], b: &[String]) -> Vec<String> {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| pair(x, y)))
        .collect()
}

fn is_integer_text(s: &str) -> bool {
    let s = s.trim();
    let s = s
        .strip_prefix('-')
        .or_else(|| s.strip_prefix('\u{2212}'))
        .unwrap_or(s);
    !s.is_empty() && s.chars().all(|c| c.is_ascii_digit())
}

fn matrix_spec(m: &Matrix) -> MatrixSpec {
    m.to_strings()
}

impl Bundle {
    pub fn new(field: Field) -> Bundle {
        Bundle {
            schema_version: SCHEMA_VERSION,
            field: field.spec_string(),
            groups: Table::new(),
            entries: Table::new(),
        }
    }

    pub fn from_json(text: &str) -> Result<Bundle> {
        let b: Bundle = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if b.schema_version != SCHEMA_VERSION {
            return Err(Error::Parse(format!(
                "schema_version {} is not supported (expected {SCHEMA_VERSION})",
                b.schema_version
            )));
        }
        Ok(b)
    }

    /// Pretty JSON with sorted keys and a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("bundles serialize");
        s.push('\n');
        s
    }

    pub fn declared_field(&self) -> Result<Field> {
        self.field.parse().map_err(|e| parse_err("field", e))
    }

    /// A resolver over the declared field, or over `field_override` when
    /// every scalar of every entry is an integer.
    pub fn resolver(&self, field_override: Option<Field>) -> Result<Resolver<'_>> {
        let declared = self.declared_field()?;
        let r = Resolver {
            bundle: self,
            field: field_override.unwrap_or(declared),
            integral_only: field_override.is_some_and(|f| f != declared),
        };
        if r.integral_only {
            for id in self.entries.keys() {
                r.item(id)?;
            }
        }
        Ok(r)
    }

    pub fn entry(&self, id: &str) -> Result<&EntrySpec> {
        self.entries
            .get(id)
            .ok_or_else(|| parse_err("entries", format!("no entry named {id:?}")))
    }

    /// Adds `g` under its name, or under a suffixed name when a different
    /// group already uses it; returns the id.
    pub fn add_group(&mut self, g: &Monoid) -> String {
        let spec = GroupSpec {
            elements: g.labels().to_vec(),
            table: g
                .table()
                .iter()
                .map(|row| row.iter().map(|&c| g.label(c).to_string()).collect())
                .collect(),
        };
        let mut id = g.name().to_string();
        let mut n = 2;
        loop {
            match self.groups.get(&id) {
                Some(existing) if *existing == spec => return id,
                Some(_) => {
                    id = format!("{}#{n}", g.name());
                    n += 1;
                }
                None => {
                    self.groups.insert(id.clone(), spec);
                    return id;
                }
            }
        }
    }

    pub fn add_hopf_gc(&mut self, id: &str, h: &HopfGC, expected: Option<&BTreeSet<String>>) {
        let g = h.group();
        let group = self.add_group(g);
        let l = |a: usize| g.label(a).to_string();
        let mut delta = Table::new();
        for a in g.elements() {
            for b in g.elements() {
                delta.insert(pair(g.label(a), g.label(b)), matrix_spec(h.delta(a, b)));
            }
        }
        let per = |v: &[Matrix]| -> Table<MatrixSpec> {
            g.elements().map(|a| (l(a), matrix_spec(&v[a]))).collect()
        };
        let spec = HopfGcSpec {
            group,
            fibers: g.elements().map(|a| (l(a), h.dim(a))).collect(),
            delta,
            eps: matrix_spec(h.eps()),
            mu: per(&h.mu),
            eta: per(&h.eta),
            antipode: h.antipode.as_deref().map(per),
            expected_failures: expected.cloned(),
        };
        self.entries.insert(id.to_string(), EntrySpec::HopfGc(spec));
    }

    pub fn add_hopf_ga(&mut self, id: &str, h: &HopfGA, expected: Option<&BTreeSet<String>>) {
        let g = h.group();
        let group = self.add_group(g);
        let l = |a: usize| g.label(a).to_string();
        let mut mu = Table::new();
        for a in g.elements() {
            for b in g.elements() {
                mu.insert(
                    pair(g.label(a), g.label(b)),
                    matrix_spec(&h.algebra.mu[a][b]),
                );
            }
        }
        let per = |v: &[Matrix]| -> Table<MatrixSpec> {
            g.elements().map(|a| (l(a), matrix_spec(&v[a]))).collect()
        };
        let spec = HopfGaSpec {
            group,
            fibers: g.elements().map(|a| (l(a), h.dims()[a])).collect(),
            mu,
            eta: matrix_spec(&h.algebra.eta),
            delta: per(&h.delta),
            eps: per(&h.eps),
            antipode: h.antipode.as_deref().map(per),
            expected_failures: expected.cloned(),
        };
        self.entries.insert(id.to_string(), EntrySpec::HopfGa(spec));
    }

    /// Adds the crossed structure and its Hopf group-coalgebra as `"{id}.hopf"`.
    pub fn add_crossed(
        &mut self,
        id: &str,
        c: &CrossedHopfGC,
        expected: Option<&BTreeSet<String>>,
    ) {
        let hopf = format!("{id}.hopf");
        self.add_hopf_gc(&hopf, &c.hopf, None);
        let g = c.hopf.group();
        let mut phi = Table::new();
        for k in g.elements() {
            for h in g.elements() {
                phi.insert(pair(g.label(k), g.label(h)), matrix_spec(&c.phi[k][h]));
            }
        }
        self.entries.insert(
            id.to_string(),
            EntrySpec::CrossedHopfGc(CrossedSpec {
                hopf,
                phi,
                expected_failures: expected.cloned(),
            }),
        );
    }

    pub fn add_module(&mut self, id: &str, hopf: &str, m: &TModule) {
        let g = m.hopf.group();
        let spec = ModuleSpec {
            hopf: hopf.to_string(),
            points: m.labels.clone(),
            dims: m
                .labels
                .iter()
                .cloned()
                .zip(m.dims.iter().copied())
                .collect(),
            weight: m
                .labels
                .iter()
                .zip(&m.weight)
                .map(|(x, &w)| (x.clone(), g.label(w).to_string()))
                .collect(),
            psi: m
                .labels
                .iter()
                .cloned()
                .zip(m.psi.iter().map(matrix_spec))
                .collect(),
            expected_failures: None,
        };
        self.entries.insert(id.to_string(), EntrySpec::Module(spec));
    }

    fn carrier_parts(c: &TComodule) -> (GSetSpec, Table<usize>, Table<Table<MatrixSpec>>) {
        let g = &c.coalgebra.group;
        let x = &c.carrier;
        let carrier = GSetSpec {
            points: x.labels().to_vec(),
            action: x
                .action_table()
                .iter()
                .map(|row| row.iter().map(|&y| x.label(y).to_string()).collect())
                .collect(),
        };
        let dims = x
            .labels()
            .iter()
            .cloned()
            .zip(c.dims.iter().copied())
            .collect();
        let rho = (0..x.len())
            .map(|p| {
                let row = g
                    .elements()
                    .map(|a| (g.label(a).to_string(), matrix_spec(&c.rho[p][a])));
                (x.label(p).to_string(), row.collect())
            })
            .collect();
        (carrier, dims, rho)
    }

    fn weight_table(m: &TModule) -> Table<String> {
        let g = m.hopf.group();
        m.labels
            .iter()
            .zip(&m.weight)
            .map(|(x, &w)| (x.clone(), g.label(w).to_string()))
            .collect()
    }

    /// Adds the Hopf module and its structure as `"{id}.hopf"`.
    pub fn add_hopf_module(
        &mut self,
        id: &str,
        m: &THopfModule,
        expected: Option<&BTreeSet<String>>,
    ) {
        let hopf = format!("{id}.hopf");
        self.add_hopf_gc(&hopf, &m.module.hopf, None);
        let (carrier, dims, rho) = Bundle::carrier_parts(&m.comodule);
        let spec = HopfModuleSpec {
            hopf,
            carrier,
            dims,
            weight: Bundle::weight_table(&m.module),
            rho,
            psi: m
                .module
                .labels
                .iter()
                .cloned()
                .zip(m.module.psi.iter().map(matrix_spec))
                .collect(),
            expected_failures: expected.cloned(),
        };
        self.entries
            .insert(id.to_string(), EntrySpec::HopfModule(spec));
    }

    /// Adds the YD module and its structure as `"{id}.hopf"`.
    pub fn add_yd(&mut self, id: &str, m: &YdModule, expected: Option<&BTreeSet<String>>) {
        let hopf = format!("{id}.hopf");
        self.add_hopf_gc(&hopf, m.hopf(), None);
        let (carrier, dims, rho) = Bundle::carrier_parts(&m.comodule);
        let spec = YdSpec {
            hopf,
            carrier,
            dims,
            nu: Bundle::weight_table(&m.module),
            rho,
            psi: m
                .module
                .labels
                .iter()
                .cloned()
                .zip(m.module.psi.iter().map(matrix_spec))
                .collect(),
            expected_failures: expected.cloned(),
        };
        self.entries
            .insert(id.to_string(), EntrySpec::YdModule(spec));
    }

    /// Adds the lift input and its crossed structure as `"{id}.crossed"`.
    pub fn add_lift(&mut self, id: &str, l: &LiftInput, expected: Option<&BTreeSet<String>>) {
        let crossed = format!("{id}.crossed");
        self.add_crossed(&crossed, &l.crossed, None);
        let g = l.crossed.hopf.group();
        let spec = LiftSpec {
            crossed,
            element: g.label(l.element).to_string(),
            lambda: matrix_spec(&l.lambda),
            rho: g
                .elements()
                .map(|a| (g.label(a).to_string(), matrix_spec(&l.rho[a])))
                .collect(),
            expected_failures: expected.cloned(),
        };
        self.entries
            .insert(id.to_string(), EntrySpec::ConjugacyLift(spec));
    }

    fn object_spec(f: &Family) -> ObjectSpec {
        ObjectSpec {
            index: f.labels().to_vec(),
            dims: f
                .labels()
                .iter()
                .cloned()
                .zip(f.dims().iter().copied())
                .collect(),
        }
    }

    /// Labels must be distinct for the morphism to round-trip.
    pub fn add_t_morphism(&mut self, id: &str, m: &TMorphism) {
        use crate::category::Morphism;
        let (s, t) = (m.source(), m.target());
        let spec = MorphismSpec {
            source: Bundle::object_spec(s),
            target: Bundle::object_spec(t),
            direction: Direction::TargetToSource,
            index_map: (0..t.len())
                .map(|y| {
                    (
                        t.label(y).to_string(),
                        s.label(m.index_map()[y]).to_string(),
                    )
                })
                .collect(),
            maps: (0..t.len())
                .map(|y| (t.label(y).to_string(), matrix_spec(m.map(y))))
                .collect(),
        };
        self.entries
            .insert(id.to_string(), EntrySpec::TMorphism(spec));
    }

    pub fn add_z_morphism(&mut self, id: &str, m: &ZMorphism) {
        use crate::category::Morphism;
        let (s, t) = (m.source(), m.target());
        let spec = MorphismSpec {
            source: Bundle::object_spec(s),
            target: Bundle::object_spec(t),
            direction: Direction::SourceToTarget,
            index_map: (0..s.len())
                .map(|x| {
                    (
                        s.label(x).to_string(),
                        t.label(m.index_map()[x]).to_string(),
                    )
                })
                .collect(),
            maps: (0..s.len())
                .map(|x| (s.label(x).to_string(), matrix_spec(m.map(x))))
                .collect(),
        };
        self.entries
            .insert(id.to_string(), EntrySpec::ZMorphism(spec));
    }

    /// Adds a resolved item under `id`, with its dependencies.
    pub fn add_item(&mut self, id: &str, item: &Item, expected: Option<&BTreeSet<String>>) {
        match item {
            Item::HopfGc(h) => self.add_hopf_gc(id, h, expected),
            Item::HopfGa(h) => self.add_hopf_ga(id, h, expected),
            Item::Crossed(c) => self.add_crossed(id, c, expected),
            Item::Module(m) => {
                let hopf = format!("{id}.hopf");
                self.add_hopf_gc(&hopf, &m.hopf, None);
                self.add_module(id, &hopf, m);
            }
            Item::HopfModule(m) => self.add_hopf_module(id, m, expected),
            Item::Yd(m) => self.add_yd(id, m, expected),
            Item::Lift(l) => self.add_lift(id, l, expected),
            Item::TMorphism(m) => self.add_t_morphism(id, m),
            Item::ZMorphism(m) => self.add_z_morphism(id, m),
        }
    }
}

/// Turns specs into checked structures over one field.
pub struct Resolver<'a> {
    bundle: &'a Bundle,
    field: Field,
    integral_only: bool,
}

impl<'a> Resolver<'a> {
    pub fn field(&self) -> Field {
        self.field
    }

    fn matrix(&self, loc: &str, spec: &MatrixSpec, rows: usize, cols: usize) -> Result<Matrix> {
        if self.integral_only {
            if let Some(s) = spec.iter().flatten().find(|s| !is_integer_text(s)) {
                return Err(parse_err(
                    loc,
                    format!("field override refused: entry {s:?} is not an integer"),
                ));
            }
        }
        Matrix::from_strings(self.field, rows, cols, spec).map_err(|e| parse_err(loc, e))
    }

    pub fn group(&self, id: &str) -> Result<Monoid> {
        let loc = format!("groups.{id}");
        let spec = self
            .bundle
            .groups
            .get(id)
            .ok_or_else(|| parse_err("groups", format!("no group named {id:?}")))?;
        let pos = |l: &str| {
            spec.elements
                .iter()
                .position(|e| e == l)
                .ok_or_else(|| parse_err(&loc, format!("unknown element {l:?}")))
        };
        if let Some(e) = spec.elements.iter().find(|e| e.contains(',')) {
            return Err(parse_err(
                &loc,
                format!("element label {e:?} contains a comma"),
            ));
        }
        let table = spec
            .table
            .iter()
            .map(|row| row.iter().map(|l| pos(l)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Monoid::new(id, spec.elements.clone(), table).map_err(|e| parse_err(&loc, e))
    }

    fn element(&self, loc: &str, g: &Monoid, label: &str) -> Result<usize> {
        g.find(label)
            .ok_or_else(|| parse_err(loc, format!("unknown element {label:?}")))
    }

    pub fn item(&self, id: &str) -> Result<Item> {
        let loc = format!("entries.{id}");
        match self.bundle.entry(id)? {
            EntrySpec::HopfGc(s) => self.hopf_gc_spec(&loc, s).map(Item::HopfGc),
            EntrySpec::HopfGa(s) => self.hopf_ga_spec(&loc, s).map(Item::HopfGa),
            EntrySpec::CrossedHopfGc(s) => self.crossed_spec(&loc, s).map(Item::Crossed),
            EntrySpec::Module(s) => self.module_spec(&loc, s).map(Item::Module),
            EntrySpec::HopfModule(s) => self.hopf_module_spec(&loc, s).map(Item::HopfModule),
            EntrySpec::YdModule(s) => self.yd_spec(&loc, s).map(Item::Yd),
            EntrySpec::ConjugacyLift(s) => self.lift_spec(&loc, s).map(Item::Lift),
            EntrySpec::TMorphism(s) => self.t_morphism_spec(&loc, s).map(Item::TMorphism),
            EntrySpec::ZMorphism(s) => self.z_morphism_spec(&loc, s).map(Item::ZMorphism),
        }
    }

    pub fn hopf_gc(&self, id: &str) -> Result<HopfGC> {
        match self.item(id)? {
            Item::HopfGc(h) => Ok(h),
            _ => Err(parse_err(
                &format!("entries.{id}"),
                format!(
                    "expected a hopf-gc, found {}",
                    self.bundle.entry(id)?.kind()
                ),
            )),
        }
    }

    pub fn crossed(&self, id: &str) -> Result<CrossedHopfGC> {
        match self.item(id)? {
            Item::Crossed(c) => Ok(c),
            _ => Err(parse_err(
                &format!("entries.{id}"),
                format!(
                    "expected a crossed-hopf-gc, found {}",
                    self.bundle.entry(id)?.kind()
                ),
            )),
        }
    }

    pub fn module(&self, id: &str) -> Result<TModule> {
        match self.item(id)? {
            Item::Module(m) => Ok(m),
            _ => Err(parse_err(
                &format!("entries.{id}"),
                format!("expected a module, found {}", self.bundle.entry(id)?.kind()),
            )),
        }
    }

    fn fibers(&self, loc: &str, g: &Monoid, fibers: &Table<usize>) -> Result<Vec<usize>> {
        Ok(take(&format!("{loc}.fibers"), fibers, g.labels())?
            .into_iter()
            .copied()
            .collect())
    }

    fn per_element(
        &self,
        loc: &str,
        g: &Monoid,
        table: &Table<MatrixSpec>,
        shape: impl Fn(usize) -> (usize, usize),
    ) -> Result<Vec<Matrix>> {
        let specs = take(loc, table, g.labels())?;
        g.elements()
            .map(|a| {
                let (r, c) = shape(a);
                self.matrix(&format!("{loc}[{:?}]", g.label(a)), specs[a], r, c)
            })
            .collect()
    }

    fn per_pair(
        &self,
        loc: &str,
        g: &Monoid,
        table: &Table<MatrixSpec>,
        shape: impl Fn(usize, usize) -> (usize, usize),
    ) -> Result<Vec<Vec<Matrix>>> {
        let keys = pair_keys(g.labels(), g.labels());
        let specs = take(loc, table, &keys)?;
        let n = g.order();
        g.elements()
            .map(|a| {
                g.elements()
                    .map(|b| {
                        let (r, c) = shape(a, b);
                        self.matrix(
                            &format!("{loc}[{:?}]", keys[a * n + b]),
                            specs[a * n + b],
                            r,
                            c,
                        )
                    })
                    .collect()
            })
            .collect()
    }

    fn require_inverses(&self, loc: &str, g: &Monoid) -> Result<()> {
        g.require_group()
            .map_err(|e| parse_err(&format!("{loc}.antipode"), e))
    }

    fn hopf_gc_spec(&self, loc: &str, s: &HopfGcSpec) -> Result<HopfGC> {
        let g = self.group(&s.group)?;
        let d = self.fibers(loc, &g, &s.fibers)?;
        let delta = self.per_pair(&format!("{loc}.delta"), &g, &s.delta, |a, b| {
            (d[a] * d[b], d[g.mul(a, b)])
        })?;
        let eps = self.matrix(&format!("{loc}.eps"), &s.eps, 1, d[g.unit()])?;
        let mu = self.per_element(&format!("{loc}.mu"), &g, &s.mu, |a| (d[a], d[a] * d[a]))?;
        let eta = self.per_element(&format!("{loc}.eta"), &g, &s.eta, |a| (d[a], 1))?;
        let antipode = match &s.antipode {
            Some(t) => {
                self.require_inverses(loc, &g)?;
                Some(self.per_element(&format!("{loc}.antipode"), &g, t, |a| (d[a], d[g.inv(a)]))?)
            }
            None => None,
        };
        let field = self.field;
        let coalgebra =
            GroupCoalgebra::new(g, field, d, delta, eps).map_err(|e| parse_err(loc, e))?;
        HopfGC::new(coalgebra, mu, eta, antipode).map_err(|e| parse_err(loc, e))
    }

    fn hopf_ga_spec(&self, loc: &str, s: &HopfGaSpec) -> Result<HopfGA> {
        let g = self.group(&s.group)?;
        let d = self.fibers(loc, &g, &s.fibers)?;
        let mu = self.per_pair(&format!("{loc}.mu"), &g, &s.mu, |a, b| {
            (d[g.mul(a, b)], d[a] * d[b])
        })?;
        let eta = self.matrix(&format!("{loc}.eta"), &s.eta, d[g.unit()], 1)?;
        let delta = self.per_element(&format!("{loc}.delta"), &g, &s.delta, |a| {
            (d[a] * d[a], d[a])
        })?;
        let eps = self.per_element(&format!("{loc}.eps"), &g, &s.eps, |a| (1, d[a]))?;
        let antipode = match &s.antipode {
            Some(t) => {
                self.require_inverses(loc, &g)?;
                Some(self.per_element(&format!("{loc}.antipode"), &g, t, |a| (d[g.inv(a)], d[a]))?)
            }
            None => None,
        };
        let field = self.field;
        let algebra = GroupAlgebra::new(g, field, d, mu, eta).map_err(|e| parse_err(loc, e))?;
        HopfGA::new(algebra, delta, eps, antipode).map_err(|e| parse_err(loc, e))
    }

    fn crossed_spec(&self, loc: &str, s: &CrossedSpec) -> Result<CrossedHopfGC> {
        let hopf = self.hopf_gc(&s.hopf)?;
        let g = hopf.group().clone();
        g.require_group().map_err(|e| parse_err(loc, e))?;
        let phi = self.per_pair(&format!("{loc}.phi"), &g, &s.phi, |k, h| {
            (hopf.dim(g.conjugate(k, h)), hopf.dim(h))
        })?;
        CrossedHopfGC::new(hopf, phi).map_err(|e| parse_err(loc, e))
    }

    fn weights(
        &self,
        loc: &str,
        g: &Monoid,
        points: &[String],
        table: &Table<String>,
    ) -> Result<Vec<usize>> {
        take(loc, table, points)?
            .into_iter()
            .map(|l| self.element(loc, g, l))
            .collect()
    }

    fn module_parts(
        &self,
        loc: &str,
        hopf: &HopfGC,
        points: &[String],
        dims: &Table<usize>,
        weight: &Table<String>,
        psi: &Table<MatrixSpec>,
    ) -> Result<TModule> {
        let g = hopf.group();
        let d: Vec<usize> = take(&format!("{loc}.dims"), dims, points)?
            .into_iter()
            .copied()
            .collect();
        let w = self.weights(&format!("{loc}.weight"), g, points, weight)?;
        let specs = take(&format!("{loc}.psi"), psi, points)?;
        let psi = (0..points.len())
            .map(|x| {
                self.matrix(
                    &format!("{loc}.psi[{:?}]", points[x]),
                    specs[x],
                    d[x],
                    d[x] * hopf.dim(w[x]),
                )
            })
            .collect::<Result<Vec<_>>>()?;
        TModule::new(hopf.clone(), points.to_vec(), d, w, psi).map_err(|e| parse_err(loc, e))
    }

    fn module_spec(&self, loc: &str, s: &ModuleSpec) -> Result<TModule> {
        let hopf = self.hopf_gc(&s.hopf)?;
        self.module_parts(loc, &hopf, &s.points, &s.dims, &s.weight, &s.psi)
    }

    fn gset(&self, loc: &str, g: &Monoid, s: &GSetSpec) -> Result<RightGSet> {
        let pos = |l: &str| {
            s.points
                .iter()
                .position(|p| p == l)
                .ok_or_else(|| parse_err(loc, format!("unknown point {l:?}")))
        };
        let action = s
            .action
            .iter()
            .map(|row| row.iter().map(|l| pos(l)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        RightGSet::new(g.clone(), s.points.clone(), action).map_err(|e| parse_err(loc, e))
    }

    fn comodule_parts(
        &self,
        loc: &str,
        hopf: &HopfGC,
        carrier: &GSetSpec,
        dims: &Table<usize>,
        rho: &Table<Table<MatrixSpec>>,
    ) -> Result<TComodule> {
        let g = hopf.group();
        let x = self.gset(&format!("{loc}.carrier"), g, carrier)?;
        let d: Vec<usize> = take(&format!("{loc}.dims"), dims, x.labels())?
            .into_iter()
            .copied()
            .collect();
        let rows = take(&format!("{loc}.rho"), rho, x.labels())?;
        let rho = (0..x.len())
            .map(|p| {
                let at = format!("{loc}.rho[{:?}]", x.label(p));
                let specs = take(&at, rows[p], g.labels())?;
                g.elements()
                    .map(|a| {
                        self.matrix(
                            &format!("{at}[{:?}]", g.label(a)),
                            specs[a],
                            d[p] * hopf.dim(a),
                            d[x.act(p, a)],
                        )
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        TComodule::new(hopf.coalgebra.clone(), x, d, rho).map_err(|e| parse_err(loc, e))
    }

    fn hopf_module_spec(&self, loc: &str, s: &HopfModuleSpec) -> Result<THopfModule> {
        let hopf = self.hopf_gc(&s.hopf)?;
        let comodule = self.comodule_parts(loc, &hopf, &s.carrier, &s.dims, &s.rho)?;
        let module =
            self.module_parts(loc, &hopf, &s.carrier.points, &s.dims, &s.weight, &s.psi)?;
        THopfModule::new(comodule, module).map_err(|e| parse_err(loc, e))
    }

    fn yd_spec(&self, loc: &str, s: &YdSpec) -> Result<YdModule> {
        let hopf = self.hopf_gc(&s.hopf)?;
        let comodule = self.comodule_parts(loc, &hopf, &s.carrier, &s.dims, &s.rho)?;
        let module = self.module_parts(loc, &hopf, &s.carrier.points, &s.dims, &s.nu, &s.psi)?;
        YdModule::new(comodule, module).map_err(|e| parse_err(loc, e))
    }

    fn lift_spec(&self, loc: &str, s: &LiftSpec) -> Result<LiftInput> {
        let crossed = self.crossed(&s.crossed)?;
        let g = crossed.hopf.group().clone();
        let element = self.element(&format!("{loc}.element"), &g, &s.element)?;
        let d = s.lambda.len();
        let lambda = self.matrix(
            &format!("{loc}.lambda"),
            &s.lambda,
            d,
            crossed.hopf.dim(element) * d,
        )?;
        let rho = self.per_element(&format!("{loc}.rho"), &g, &s.rho, |a| {
            (d * crossed.hopf.dim(a), d)
        })?;
        let refused = s
            .expected_failures
            .as_ref()
            .is_some_and(|e| e.contains("refused"));
        Ok(LiftInput {
            crossed,
            element,
            lambda,
            rho,
            refused,
        })
    }

    fn object(&self, loc: &str, s: &ObjectSpec) -> Result<Family> {
        let set: BTreeSet<&String> = s.index.iter().collect();
        if set.len() != s.index.len() {
            return Err(parse_err(loc, "duplicate index label"));
        }
        let d = take(&format!("{loc}.dims"), &s.dims, &s.index)?
            .into_iter()
            .copied()
            .collect();
        Ok(Family::new(self.field, s.index.clone(), d))
    }

    fn morphism_parts(
        &self,
        loc: &str,
        s: &MorphismSpec,
        expected: Direction,
    ) -> Result<(Family, Family, Vec<usize>, Vec<Matrix>)> {
        if s.direction != expected {
            return Err(parse_err(
                &format!("{loc}.direction"),
                "direction does not match the kind",
            ));
        }
        let source = self.object(&format!("{loc}.source"), &s.source)?;
        let target = self.object(&format!("{loc}.target"), &s.target)?;
        let (from, to) = match expected {
            Direction::TargetToSource => (&target, &source),
            Direction::SourceToTarget => (&source, &target),
        };
        let keys = from.labels();
        let image = take(&format!("{loc}.index_map"), &s.index_map, keys)?;
        let index = image
            .iter()
            .map(|l| {
                to.labels().iter().position(|x| x == *l).ok_or_else(|| {
                    parse_err(&format!("{loc}.index_map"), format!("unknown index {l:?}"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let specs = take(&format!("{loc}.maps"), &s.maps, keys)?;
        let maps = (0..from.len())
            .map(|i| {
                let (r, c) = match expected {
                    Direction::TargetToSource => (target.dim(i), source.dim(index[i])),
                    Direction::SourceToTarget => (target.dim(index[i]), source.dim(i)),
                };
                self.matrix(&format!("{loc}.maps[{:?}]", keys[i]), specs[i], r, c)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((source, target, index, maps))
    }

    fn t_morphism_spec(&self, loc: &str, s: &MorphismSpec) -> Result<TMorphism> {
        let (a, b, i, m) = self.morphism_parts(loc, s, Direction::TargetToSource)?;
        TMorphism::new(a, b, i, m).map_err(|e| parse_err(loc, e))
    }

    fn z_morphism_spec(&self, loc: &str, s: &MorphismSpec) -> Result<ZMorphism> {
        let (a, b, i, m) = self.morphism_parts(loc, s, Direction::SourceToTarget)?;
        ZMorphism::new(a, b, i, m).map_err(|e| parse_err(loc, e))
    }
}

/// Dual bundle of one entry: Hopf group-coalgebras and group-algebras swap,
/// T_k and Z_k morphisms swap.
pub fn dualize_entry(bundle: &Bundle, id: &str, field_override: Option<Field>) -> Result<Bundle> {
    let r = bundle.resolver(field_override)?;
    let expected = bundle.entry(id)?.expected_failures().cloned();
    let dual = match r.item(id)? {
        Item::HopfGc(h) => Item::HopfGa(h.dual()),
        Item::HopfGa(h) => Item::HopfGc(h.dual()),
        Item::TMorphism(m) => Item::ZMorphism(crate::zunino::dualize_t(&m)),
        Item::ZMorphism(m) => Item::TMorphism(crate::zunino::dualize_z(&m)),
        _ => {
            return Err(Error::Precondition(format!(
                "entries.{id}: kind {} has no dual",
                bundle.entry(id)?.kind()
            )))
        }
    };
    let mut out = Bundle::new(r.field());
    out.add_item(id, &dual, expected.as_ref());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{build_corpus, Structure};

    #[test]
    fn corpus_round_trips_through_json() {
        for f in [Field::Rationals, Field::Prime(3)] {
            let c = build_corpus(f);
            let mut b = Bundle::new(f);
            for e in &c.hopf {
                match &e.value {
                    Structure::Coalgebra(h) => b.add_hopf_gc(&e.id, h, Some(&e.expected)),
                    Structure::Algebra(h) => b.add_hopf_ga(&e.id, h, Some(&e.expected)),
                }
            }
            for e in &c.hopf_modules {
                b.add_hopf_module(&e.id, &e.value, Some(&e.expected));
            }
            for e in &c.yd {
                b.add_yd(&e.id, &e.value, Some(&e.expected));
            }
            for e in &c.lifts {
                b.add_lift(&e.id, &e.value, Some(&e.expected));
            }
            let text = b.to_json();
            let back = Bundle::from_json(&text).unwrap();
            assert_eq!(back, b);
            let r = back.resolver(None).unwrap();
            for e in &c.hopf_modules {
                match r.item(&e.id).unwrap() {
                    Item::HopfModule(m) => {
                        assert_eq!(m.comodule.rho, e.value.comodule.rho);
                        assert_eq!(m.module.weight, e.value.module.weight);
                        assert_eq!(m.verify().failed_laws(), e.expected, "{}", e.id);
                    }
                    other => panic!("{other:?}"),
                }
            }
            for e in &c.yd {
                match r.item(&e.id).unwrap() {
                    Item::Yd(m) => assert_eq!(m.verify().failed_laws(), e.expected, "{}", e.id),
                    other => panic!("{other:?}"),
                }
            }
            for e in &c.lifts {
                match r.item(&e.id).unwrap() {
                    Item::Lift(l) => assert_eq!(l.failed_laws().unwrap(), e.expected, "{}", e.id),
                    other => panic!("{other:?}"),
                }
            }
        }
    }

    #[test]
    fn dualize_twice_is_byte_identical() {
        let c = build_corpus(Field::Rationals);
        let mut b = Bundle::new(Field::Rationals);
        let Structure::Algebra(h) = &c
            .hopf
            .iter()
            .find(|e| e.id == "graded-S3-sign")
            .unwrap()
            .value
        else {
            panic!()
        };
        b.add_hopf_ga("A", h, None);
        let once = dualize_entry(&b, "A", None).unwrap();
        assert!(matches!(once.entry("A").unwrap(), EntrySpec::HopfGc(_)));
        let twice = dualize_entry(&once, "A", None).unwrap();
        assert_eq!(twice.to_json(), b.to_json());
    }

    #[test]
    fn shape_mismatch_names_location() {
        let c = build_corpus(Field::Rationals);
        let mut b = Bundle::new(Field::Rationals);
        let Structure::Coalgebra(h) = &c.hopf[0].value else {
            panic!()
        };
        b.add_hopf_gc("H", h, None);
        if let EntrySpec::HopfGc(s) = b.entries.get_mut("H").unwrap() {
            s.eps[0].push("0".into());
        }
        let err = b.resolver(None).unwrap().item("H").unwrap_err().to_string();
        assert!(err.contains("entries.H.eps"), "{err}");
    }

    #[test]
    fn missing_field_is_named() {
        let err = Bundle::from_json("{}").unwrap_err().to_string();
        assert!(err.contains("schema_version"), "{err}");
    }

    #[test]
    fn field_override_needs_integers() {
        let mut b = Bundle::new(Field::Rationals);
        let c = build_corpus(Field::Rationals);
        let Structure::Coalgebra(h) = &c.hopf[0].value else {
            panic!()
        };
        b.add_hopf_gc("H", h, None);
        let r = b.resolver(Some(Field::Prime(5))).unwrap();
        assert_eq!(r.field(), Field::Prime(5));
        if let EntrySpec::HopfGc(s) = b.entries.get_mut("H").unwrap() {
            s.eps[0][0] = "1/2".into();
        }
        assert!(b.resolver(Some(Field::Prime(5))).is_err());
        assert!(b.resolver(None).is_ok());
    }
}
