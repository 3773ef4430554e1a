//! Command implementations behind the `hopfgc` binary. Every command
//! returns reports keyed by entry id; rendering and exit codes live here so
//! the binary stays a thin argument parser.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use rayon::prelude::*;

use crate::bundle::{dualize_entry, Bundle, EntrySpec, Item, Resolver};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::fixtures::{build_corpus, Structure};
use crate::modules::{component_projection, fundamental_theorem, is_regular_shape};
use crate::report::{idx, Report};
use crate::setcat::{
    builtin_groups, check_center_comodule_sets, check_center_gsets, check_group_hopf_axioms,
    coinvariant_bijection, orbit_bijection, ComoduleRegistry, CrossedGSet, GSetRegistry,
    SetHopfModule,
};
use crate::yd::{
    conjugacy_class_lift, half_braiding_on, verify_center_object, yd_from_half_braiding,
    ModuleRegistry, YdModule,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// Reports by id, rendered in id order.
pub type Reports = BTreeMap<String, Report>;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

pub fn exit_code(reports: &Reports) -> i32 {
    if reports.values().all(Report::all_passed) {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

pub fn render(reports: &Reports, format: Format) -> String {
    let normalized: Reports = reports
        .iter()
        .map(|(k, r)| (k.clone(), r.clone().normalized()))
        .collect();
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&normalized).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut out = String::new();
            for (id, r) in &normalized {
                let _ = writeln!(out, "[{id}]");
                out.push_str(&r.to_text());
            }
            out
        }
    }
}

pub fn load(path: &Path) -> Result<Bundle> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    Bundle::from_json(&text).map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        e => e,
    })
}

fn pool(workers: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::Precondition(format!("cannot start workers: {e}")))
}

/// Runs the checker of the entry's kind.
fn verify_item(r: &Resolver<'_>, bundle: &Bundle, id: &str) -> Result<Report> {
    let mut report = match r.item(id)? {
        Item::HopfGc(h) => h.verify(),
        Item::HopfGa(h) => h.verify(),
        Item::Crossed(c) => c.verify(),
        Item::Module(m) => m.verify(),
        Item::HopfModule(m) => m.verify(),
        Item::Yd(m) => m.verify(),
        Item::Lift(l) => lift_report(&l.crossed, l.element, &l.lambda, &l.rho)?,
        Item::TMorphism(_) | Item::ZMorphism(_) => {
            return Err(Error::Precondition(format!(
                "entries.{id}: kind {} has no checker",
                bundle.entry(id)?.kind()
            )))
        }
    };
    if let Some(expected) = bundle.entry(id)?.expected_failures() {
        let actual = report.failed_laws();
        if &actual != expected {
            report.note(format!(
                "recorded failures {expected:?} differ from {actual:?}"
            ));
        }
    }
    Ok(report)
}

/// Checks one entry, or every checkable entry when `target` is `None`.
pub fn cmd_verify(
    bundle: &Bundle,
    target: Option<&str>,
    field: Option<Field>,
    workers: usize,
) -> Result<Reports> {
    let r = bundle.resolver(field)?;
    let ids: Vec<String> = match target {
        Some(id) => {
            bundle.entry(id)?;
            vec![id.to_string()]
        }
        None => bundle
            .entries
            .iter()
            .filter(|(_, e)| !matches!(e, EntrySpec::TMorphism(_) | EntrySpec::ZMorphism(_)))
            .map(|(id, _)| id.clone())
            .collect(),
    };
    let results: Vec<Result<Report>> = pool(workers)?.install(|| {
        ids.par_iter()
            .map(|id| verify_item(&r, bundle, id))
            .collect()
    });
    ids.into_iter()
        .zip(results)
        .map(|(id, rep)| Ok((id, rep?)))
        .collect()
}

pub fn cmd_dualize(bundle: &Bundle, target: &str, field: Option<Field>) -> Result<Bundle> {
    dualize_entry(bundle, target, field)
}

/// Coinvariants, `φ` and `φ⁻¹` for a Hopf module, plus the component
/// projections when the module is `H` itself.
pub fn cmd_fthm(
    bundle: &Bundle,
    target: &str,
    field: Option<Field>,
    matrices: bool,
) -> Result<Reports> {
    let r = bundle.resolver(field)?;
    let m = match r.item(target)? {
        Item::HopfModule(m) => m,
        _ => {
            return Err(Error::Precondition(format!(
                "entries.{target}: expected a hopf-module, found {}",
                bundle.entry(target)?.kind()
            )))
        }
    };
    let outcome = match fundamental_theorem(&m) {
        Ok(o) => o,
        Err(Error::Unverified(_)) => {
            let mut rep = m.verify();
            rep.note("the module fails its axioms; the isomorphism was not built");
            return Ok(Reports::from([(target.to_string(), rep)]));
        }
        Err(e) => return Err(e),
    };
    let mut rep = outcome.report;
    let c = &outcome.coinvariants;
    let dims: Vec<String> = (0..c.object.len())
        .map(|i| format!("{}: {}", c.object.label(i), c.object.dim(i)))
        .collect();
    rep.note(format!("coinvariant fibers {{{}}}", dims.join(", ")));
    if matrices {
        rep.note(format!("φ = {:?}", outcome.phi));
        rep.note(format!("φ⁻¹ = {:?}", outcome.phi_inv));
    }
    if is_regular_shape(&m) {
        let g = m.hopf().group();
        for a in g.elements() {
            let p = component_projection(&m, a)?;
            let l = idx([g.label(a)]);
            rep.record(
                "component projection injective",
                "p_g: coinvariants → H_g has trivial kernel",
                l.clone(),
                (!p.injective).then(|| format!("rank below {}", p.matrix.cols())),
            );
            rep.record(
                "component projection reconstruction",
                "ε-pivot reconstruction recovers each coinvariant",
                l,
                (!p.reconstructs).then(|| "reconstruction differs".to_string()),
            );
        }
    }
    Ok(Reports::from([(target.to_string(), rep)]))
}

/// Registry selection: `standard`, `unit`, `none`, or comma-separated
/// `module` entry ids.
pub fn registry(
    spec: &str,
    hopf: &crate::hopf::HopfGC,
    r: &Resolver<'_>,
) -> Result<ModuleRegistry> {
    match spec {
        "standard" => Ok(ModuleRegistry::standard(hopf)),
        "unit" => Ok(ModuleRegistry::unit_only(hopf)),
        "none" | "" => Ok(ModuleRegistry::empty()),
        ids => {
            let mut reg = ModuleRegistry::empty();
            for id in ids.split(',') {
                let m = r.module(id.trim())?;
                if m.hopf != *hopf {
                    return Err(Error::Precondition(format!(
                        "registry module {id} is over a different structure"
                    )));
                }
                reg.modules.push((id.trim().to_string(), m));
            }
            Ok(reg)
        }
    }
}

fn yd_report(m: &YdModule, reg: &ModuleRegistry) -> Result<Report> {
    let mut rep = m.verify();
    rep.title = "Yetter-Drinfeld module and center object".into();
    let center = verify_center_object(m, reg);
    let (yd_ok, center_ok) = (rep.all_passed(), center.all_passed());
    rep.extend(center);
    rep.record(
        "YD iff center",
        "YD axioms hold exactly when the center axioms hold",
        vec![],
        (yd_ok != center_ok).then(|| format!("YD {yd_ok}, center {center_ok}")),
    );
    if yd_ok && reg.regular().is_some() {
        let w = (|| -> Result<Option<String>> {
            let t = half_braiding_on(m, reg)?;
            let back = yd_from_half_braiding(&m.module, &t, reg)?;
            Ok((back != *m).then(|| "recovered comodule differs".to_string()))
        })();
        rep.record(
            "half-braiding round trip",
            "YD data rebuilt from t_H equals the input",
            vec![],
            w.unwrap_or_else(|e| Some(e.to_string())),
        );
    }
    Ok(rep)
}

fn lift_report(
    h: &crate::hopf::CrossedHopfGC,
    element: usize,
    lambda: &crate::matrix::Matrix,
    rho: &[crate::matrix::Matrix],
) -> Result<Report> {
    match conjugacy_class_lift(h, element, lambda, rho) {
        Ok(l) => {
            let g = h.hopf.group();
            let mut rep = l.report;
            for a in g.elements() {
                rep.note(format!(
                    "l = {}: conjugated condition {}, g-YD condition {}",
                    g.label(a),
                    l.conjugated[a],
                    l.g_yd[a]
                ));
            }
            Ok(rep)
        }
        Err(e @ Error::IllDefined { .. }) => {
            let mut rep = Report::new("conjugacy-class lift");
            rep.fail(
                "refused",
                "the action does not depend on the chosen conjugator",
                vec![],
                e.to_string(),
            );
            Ok(rep)
        }
        Err(e) => Err(e),
    }
}

pub fn cmd_yd(bundle: &Bundle, target: &str, field: Option<Field>, reg: &str) -> Result<Reports> {
    let r = bundle.resolver(field)?;
    let rep = match r.item(target)? {
        Item::Yd(m) => {
            let reg = registry(reg, m.hopf(), &r)?;
            yd_report(&m, &reg)?
        }
        Item::Lift(l) => lift_report(&l.crossed, l.element, &l.lambda, &l.rho)?,
        _ => {
            return Err(Error::Precondition(format!(
                "entries.{target}: expected a yd-module or conjugacy-lift, found {}",
                bundle.entry(target)?.kind()
            )))
        }
    };
    Ok(Reports::from([(target.to_string(), rep)]))
}

/// Set-level demonstrations on the built-in groups.
pub fn cmd_set_demo(group: Option<&str>) -> Result<Reports> {
    let groups = builtin_groups();
    let selected: Vec<_> = match group {
        Some(name) => {
            let g = groups
                .into_iter()
                .find(|g| g.name() == name)
                .ok_or_else(|| Error::Parse(format!("unknown built-in group {name:?}")))?;
            vec![g]
        }
        None => groups,
    };
    let mut out = Reports::new();
    for g in selected {
        let mut rep = check_group_hopf_axioms(&g)?;
        rep.title = format!("set-level demonstrations over {}", g.name());
        let shapes = [
            ("regular", SetHopfModule::regular(&g)),
            ("free", SetHopfModule::free(&g, &["a", "b"])),
            ("diagonal", SetHopfModule::diagonal(&g)),
        ];
        for (name, m) in &shapes {
            let mut a = coinvariant_bijection(m)?.report;
            let mut b = orbit_bijection(m)?.report;
            for c in a.checks.iter_mut().chain(b.checks.iter_mut()) {
                c.index.insert(0, name.to_string());
            }
            rep.extend(a);
            rep.extend(b);
        }
        let reg = GSetRegistry::standard(&g);
        let comodules = ComoduleRegistry::standard(&g);
        for c in g.elements() {
            let v = CrossedGSet::conjugacy_class(&g, c)?;
            let mut center = check_center_gsets(&v, &reg);
            center.extend(check_center_comodule_sets(&v, &comodules));
            for ch in &mut center.checks {
                ch.index.insert(0, format!("class of {}", g.label(c)));
            }
            rep.extend(center);
        }
        out.insert(g.name().to_string(), rep);
    }
    Ok(out)
}

/// One single-entry bundle per corpus entry, with its recorded verdict.
pub fn corpus_bundles(field: Field) -> Vec<(String, Bundle)> {
    let c = build_corpus(field);
    let mut bundles: Vec<(String, Bundle)> = Vec::new();
    let mut push = |id: &str, item: Item, expected| {
        let mut b = Bundle::new(field);
        b.add_item(id, &item, Some(expected));
        bundles.push((id.to_string(), b));
    };
    for e in &c.hopf {
        let item = match &e.value {
            Structure::Coalgebra(h) => Item::HopfGc(h.clone()),
            Structure::Algebra(h) => Item::HopfGa(h.clone()),
        };
        push(&e.id, item, &e.expected);
    }
    for e in &c.crossed {
        push(&e.id, Item::Crossed(e.value.clone()), &e.expected);
    }
    for e in &c.hopf_modules {
        push(&e.id, Item::HopfModule(e.value.clone()), &e.expected);
    }
    for e in &c.yd {
        push(&e.id, Item::Yd(e.value.clone()), &e.expected);
    }
    for e in &c.lifts {
        push(&e.id, Item::Lift(e.value.clone()), &e.expected);
    }
    bundles
}

/// Writes one bundle per corpus entry into `dir`; returns the file names.
pub fn cmd_export_corpus(dir: &Path, field: Field) -> Result<Vec<String>> {
    std::fs::create_dir_all(dir).map_err(|e| Error::Parse(format!("{}: {e}", dir.display())))?;
    let mut names = Vec::new();
    for (id, b) in corpus_bundles(field) {
        let name = format!("{id}.json");
        let path = dir.join(&name);
        std::fs::write(&path, b.to_json())
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        names.push(name);
    }
    Ok(names)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_demo_passes_on_builtin_groups() {
        let reps = cmd_set_demo(None).unwrap();
        assert_eq!(reps.len(), 4);
        for (g, r) in &reps {
            assert!(r.all_passed(), "{g}: {:?}", r.failed_laws());
        }
    }

    #[test]
    fn rendering_is_sorted() {
        let mut r = Report::new("x");
        r.pass("b", "", vec![]);
        r.pass("a", "", vec![]);
        let text = render(&Reports::from([("id".to_string(), r)]), Format::Text);
        assert!(text.find("ok   a").unwrap() < text.find("ok   b").unwrap());
    }
}
