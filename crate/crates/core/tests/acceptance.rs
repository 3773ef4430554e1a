//! One PASS/FAIL line per acceptance criterion, exact arithmetic, each with
//! a pinned runtime bound. Runs without the test harness so the lines are
//! always printed.

mod common;

use std::collections::BTreeMap;
use std::process::Command;
use std::time::{Duration, Instant};

use hopfgc::bundle::Bundle;
use hopfgc::category::{check_bialgebra, Family, Morphism};
use hopfgc::fixtures::{
    build_corpus, random_family, random_t, random_t_pair, random_z, random_z_pair, rng, Corpus,
    Structure,
};
use hopfgc::modules::{coinvariants, component_projection, fundamental_theorem, THopfModule};
use hopfgc::setcat::{
    builtin_groups, check_group_hopf_axioms, coinvariant_bijection, orbit_bijection, RightGSet,
    SetHopfModule,
};
use hopfgc::turaev::{t_coequalizer, t_coequalizer_mediate, t_equalizer, t_equalizer_mediate};
use hopfgc::yd::{
    conjugacy_class_lift, half_braiding_on, verify_center_object, yd_from_half_braiding,
    ModuleRegistry,
};
use hopfgc::zunino::{z_coequalizer, z_coequalizer_mediate, z_equalizer, z_equalizer_mediate};
use hopfgc::{Error, Field, TMorphism};

type Outcome = Result<String, String>;

const FIELDS: [Field; 2] = [Field::Rationals, Field::Prime(3)];

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn corpora() -> Vec<Corpus> {
    FIELDS.iter().map(|&f| build_corpus(f)).collect()
}

fn set_modules(g: &hopfgc::setcat::Group) -> Vec<(&'static str, SetHopfModule)> {
    let reg = RightGSet::regular(g);
    let cls = RightGSet::conjugacy_class(g, if g.order() > 1 { 1 } else { 0 })
        .unwrap()
        .0;
    let twisted = reg.product(&cls);
    let k = cls.len();
    let twisted = SetHopfModule::new(twisted, (0..g.order() * k).map(|p| p / k).collect()).unwrap();
    let mut out = vec![
        ("regular", SetHopfModule::regular(g)),
        ("free a,b,c", SetHopfModule::free(g, &["a", "b", "c"])),
        ("G x class", twisted),
    ];
    if g.order() * g.order() <= 24 {
        out.push(("diagonal", SetHopfModule::diagonal(g)));
    }
    out
}

fn criterion_1() -> Outcome {
    let mut modules = 0;
    for g in builtin_groups() {
        let r = check_group_hopf_axioms(&g).map_err(|e| e.to_string())?;
        ensure!(r.all_passed(), "{}: {:?}", g.name(), r.failed_laws());
        let shapes = set_modules(&g);
        ensure!(shapes.len() >= 3, "{}: too few modules", g.name());
        for (name, m) in shapes {
            ensure!(
                m.base.len() <= 24,
                "{} {name}: |X| = {}",
                g.name(),
                m.base.len()
            );
            let a = coinvariant_bijection(&m).map_err(|e| e.to_string())?;
            let b = orbit_bijection(&m).map_err(|e| e.to_string())?;
            ensure!(
                a.verified && a.report.all_passed(),
                "{} {name}: coinvariant bijection",
                g.name()
            );
            ensure!(
                b.verified && b.report.all_passed(),
                "{} {name}: orbit bijection",
                g.name()
            );
            // coinvariants x G ≅ X
            ensure!(
                a.domain.len() == m.base.len(),
                "{} {name}: |X^co x G| ≠ |X|",
                g.name()
            );
            modules += 1;
        }
    }
    Ok(format!("4 groups, {modules} Hopf G-sets"))
}

fn criterion_2() -> Outcome {
    let mut n = 0;
    for c in corpora() {
        for e in &c.hopf {
            let (componentwise, generic) = match &e.value {
                Structure::Coalgebra(h) => (h.verify(), check_bialgebra(&h.pack(), "generic")),
                Structure::Algebra(h) => (h.verify(), check_bialgebra(&h.pack(), "generic")),
            };
            ensure!(
                componentwise.failed_laws() == generic.failed_laws(),
                "{} over {}: componentwise {:?}, generic {:?}",
                e.id,
                c.field,
                componentwise.failed_laws(),
                generic.failed_laws()
            );
            n += 1;
        }
        for e in &c.hopf_modules {
            let generic = e
                .value
                .verify_generic()
                .map_err(|err| format!("{}: {err}", e.id))?;
            ensure!(
                e.value.verify().all_passed() == generic.all_passed(),
                "{} over {}: module verdicts differ",
                e.id,
                c.field
            );
            n += 1;
        }
    }
    Ok(format!("{n} entries agree"))
}

fn criterion_3() -> Outcome {
    let field = Field::Rationals;
    let mut r = rng(2024);
    let pairs = 60;
    let mut probes = 0;
    let mut rejected = 0;
    let err = |k: &str, i: usize, e: Error| format!("{k} pair {i}: {e}");
    for i in 0..pairs {
        // T_k equalizer
        let (phi, psi) = random_t_pair(&mut r, field);
        let eq = t_equalizer(&phi, &psi).map_err(|e| err("T eq", i, e))?;
        let dims: BTreeMap<Vec<usize>, usize> = eq
            .classes
            .iter()
            .enumerate()
            .map(|(c, cl)| (cl.clone(), eq.object.dim(c)))
            .collect();
        ensure!(
            dims == common::t_equalizer_dims(&phi, &psi),
            "T eq pair {i}: fiber dimensions"
        );
        ensure!(
            phi.compose(&eq.inclusion).unwrap() == psi.compose(&eq.inclusion).unwrap(),
            "T eq pair {i}: inclusion does not equalize"
        );
        for _ in 0..3 {
            let p = random_family(&mut r, field, 3, 3);
            let u = random_t(&mut r, &p, &eq.object).expect("P is nonempty");
            let probe = eq.inclusion.compose(&u).unwrap();
            let m = t_equalizer_mediate(&phi, &psi, &eq, &probe).map_err(|e| err("T eq", i, e))?;
            ensure!(
                m.unique && m.morphism == u,
                "T eq pair {i}: mediation is not the unique factor"
            );
            probes += 1;
        }
        let p = random_family(&mut r, field, 3, 3);
        let stray = random_t(&mut r, &p, phi.source()).expect("P is nonempty");
        if phi.compose(&stray).unwrap() != psi.compose(&stray).unwrap() {
            ensure!(
                matches!(
                    t_equalizer_mediate(&phi, &psi, &eq, &stray),
                    Err(Error::NotEqualizing { .. })
                ),
                "T eq pair {i}: non-equalizing probe accepted"
            );
            rejected += 1;
        }

        // T_k coequalizer
        let co = t_coequalizer(&phi, &psi).map_err(|e| err("T coeq", i, e))?;
        let dims: BTreeMap<usize, usize> = co
            .agreeing
            .iter()
            .enumerate()
            .map(|(k, &u)| (u, co.object.dim(k)))
            .collect();
        ensure!(
            dims == common::t_coequalizer_dims(&phi, &psi),
            "T coeq pair {i}: fiber dimensions"
        );
        for _ in 0..3 {
            let q = if co.object.is_empty() {
                Family::empty(field)
            } else {
                random_family(&mut r, field, 3, 3)
            };
            let v = random_t(&mut r, &co.object, &q).expect("q chosen to fit");
            let probe = v.compose(&co.projection).unwrap();
            let m =
                t_coequalizer_mediate(&phi, &psi, &co, &probe).map_err(|e| err("T coeq", i, e))?;
            ensure!(
                m.unique && m.morphism == v,
                "T coeq pair {i}: mediation is not the unique factor"
            );
            probes += 1;
        }

        // Z_k equalizer
        let (phi, psi) = random_z_pair(&mut r, field);
        let eq = z_equalizer(&phi, &psi).map_err(|e| err("Z eq", i, e))?;
        let dims: BTreeMap<usize, usize> = eq
            .agreeing
            .iter()
            .enumerate()
            .map(|(k, &x)| (x, eq.object.dim(k)))
            .collect();
        ensure!(
            dims == common::z_equalizer_dims(&phi, &psi),
            "Z eq pair {i}: fiber dimensions"
        );
        for _ in 0..3 {
            let p = if eq.object.is_empty() {
                Family::empty(field)
            } else {
                random_family(&mut r, field, 3, 3)
            };
            let u = random_z(&mut r, &p, &eq.object).expect("p chosen to fit");
            let probe = eq.inclusion.compose(&u).unwrap();
            let m = z_equalizer_mediate(&phi, &psi, &eq, &probe).map_err(|e| err("Z eq", i, e))?;
            ensure!(
                m.unique && m.morphism == u,
                "Z eq pair {i}: mediation is not the unique factor"
            );
            probes += 1;
        }
        let p = random_family(&mut r, field, 3, 3);
        let stray = random_z(&mut r, &p, phi.source()).expect("source is nonempty");
        if phi.compose(&stray).unwrap() != psi.compose(&stray).unwrap() {
            ensure!(
                z_equalizer_mediate(&phi, &psi, &eq, &stray).is_err(),
                "Z eq pair {i}: non-equalizing probe accepted"
            );
            rejected += 1;
        }

        // Z_k coequalizer
        let co = z_coequalizer(&phi, &psi).map_err(|e| err("Z coeq", i, e))?;
        let dims: BTreeMap<Vec<usize>, usize> = co
            .classes
            .iter()
            .enumerate()
            .map(|(c, cl)| (cl.clone(), co.object.dim(c)))
            .collect();
        ensure!(
            dims == common::z_coequalizer_dims(&phi, &psi),
            "Z coeq pair {i}: fiber dimensions"
        );
        for _ in 0..3 {
            let q = random_family(&mut r, field, 3, 3);
            let v = random_z(&mut r, &co.object, &q).expect("Q is nonempty");
            let probe = v.compose(&co.projection).unwrap();
            let m =
                z_coequalizer_mediate(&phi, &psi, &co, &probe).map_err(|e| err("Z coeq", i, e))?;
            ensure!(
                m.unique && m.morphism == v,
                "Z coeq pair {i}: mediation is not the unique factor"
            );
            probes += 1;
        }
    }
    Ok(format!(
        "{pairs} pairs per category, {probes} factoring probes, {rejected} stray probes rejected"
    ))
}

fn criterion_4() -> Outcome {
    let mut n = 0;
    for c in corpora() {
        for e in &c.hopf {
            let dual = e.value.dual();
            ensure!(
                dual.dual() == e.value,
                "{} over {}: double dual differs",
                e.id,
                c.field
            );
            ensure!(
                dual.verify().all_passed() == e.value.verify().all_passed(),
                "{} over {}: dual verdict differs",
                e.id,
                c.field
            );
            n += 1;
        }
        for id in ["graded-S3-sign", "graded-C4-C2"] {
            let e = c
                .hopf
                .iter()
                .find(|e| e.id == id)
                .ok_or(format!("{id} missing"))?;
            let Structure::Algebra(a) = &e.value else {
                return Err(format!("{id} is not a group-algebra"));
            };
            ensure!(a.verify().all_passed(), "{id}: group-algebra fails");
            ensure!(
                a.dual().verify().all_passed(),
                "{id}: dual group-coalgebra fails"
            );
        }
        for i in 0..20 {
            let mut r = rng(i);
            let (phi, _) = random_t_pair(&mut r, c.field);
            ensure!(
                hopfgc::zunino::dualize_z(&hopfgc::zunino::dualize_t(&phi)) == phi,
                "T morphism {i}"
            );
            let (phi, _) = random_z_pair(&mut r, c.field);
            ensure!(
                hopfgc::zunino::dualize_t(&hopfgc::zunino::dualize_z(&phi)) == phi,
                "Z morphism {i}"
            );
        }
    }
    Ok(format!("{n} structures, 80 morphisms"))
}

fn regular_shape(c: &Corpus) -> Vec<(String, THopfModule)> {
    c.hopf
        .iter()
        .filter_map(|e| match &e.value {
            Structure::Coalgebra(h)
                if e.expected.is_empty() && h.antipode.is_some() && h.group().is_group() =>
            {
                let shape = SetHopfModule::regular(h.group());
                Some((
                    format!("regular over {}", e.id),
                    THopfModule::induced(&shape, h).ok()?,
                ))
            }
            _ => None,
        })
        .collect()
}

fn criterion_5() -> Outcome {
    let mut n = 0;
    for c in corpora() {
        let mut modules: Vec<(String, THopfModule)> = c
            .hopf_modules
            .iter()
            .filter(|e| e.expected.is_empty())
            .map(|e| (e.id.clone(), e.value.clone()))
            .collect();
        modules.extend(regular_shape(&c));
        for (id, m) in &modules {
            let o = fundamental_theorem(m).map_err(|e| format!("{id}: {e}"))?;
            let id_m = TMorphism::identity(&m.object());
            let id_p = TMorphism::identity(o.phi.source());
            ensure!(
                o.phi.compose(&o.phi_inv).unwrap() == id_m,
                "{id} over {}: φ∘φ⁻¹ ≠ id",
                c.field
            );
            ensure!(
                o.phi_inv.compose(&o.phi).unwrap() == id_p,
                "{id} over {}: φ⁻¹∘φ ≠ id",
                c.field
            );
            let co = coinvariants(m).map_err(|e| format!("{id}: {e}"))?;
            let eq =
                t_equalizer(&m.rho_morphism().unwrap(), &m.trivial_coaction().unwrap()).unwrap();
            ensure!(
                eq.classes == co.orbits,
                "{id}: equalizer classes are not the orbits"
            );
            for (k, basis) in co.bases.iter().enumerate() {
                ensure!(
                    basis.same_column_space(&eq.bases[k]),
                    "{id}: coinvariant fiber {k} differs"
                );
            }
            n += 1;
        }
        // free modules N ⊗ H have coinvariants N
        for e in c
            .hopf_modules
            .iter()
            .filter(|e| e.id.starts_with("free-") && e.expected.is_empty())
        {
            let co = coinvariants(&e.value).unwrap();
            let h = e.value.hopf();
            let per_orbit = h.group().order();
            let expected: Vec<usize> = co
                .orbits
                .iter()
                .map(|o| e.value.module.dims[o[0]] / h.dim(e.value.weight()[o[0]]))
                .collect();
            ensure!(
                co.orbits.iter().all(|o| o.len() == per_orbit),
                "{}: orbits are not free",
                e.id
            );
            ensure!(
                co.object.dims() == expected.as_slice(),
                "{}: coinvariants {:?} vs {:?}",
                e.id,
                co.object.dims(),
                expected
            );
        }
        // a monoid that is not a group is refused
        let monoid = hopfgc::hopf::constant_family(
            &hopfgc::hopf::HopfGC {
                antipode: None,
                ..hopfgc::hopf::group_hopf_algebra(c.field, &hopfgc::setcat::cyclic(2, "x"))
                    .unwrap()
            },
            &hopfgc::setcat::two_element_monoid(),
        )
        .unwrap();
        let m = THopfModule::free(&Family::unit(c.field), &monoid).unwrap();
        ensure!(
            matches!(fundamental_theorem(&m), Err(Error::Precondition(_))),
            "monoid not refused"
        );
    }
    Ok(format!("{n} Hopf modules round-trip"))
}

fn criterion_6() -> Outcome {
    let mut n = 0;
    for c in corpora() {
        for (id, m) in regular_shape(&c) {
            for g in m.hopf().group().elements() {
                let p = component_projection(&m, g).map_err(|e| format!("{id}: {e}"))?;
                ensure!(p.injective, "{id} over {}: p_{g} not injective", c.field);
                ensure!(
                    p.reconstructs,
                    "{id} over {}: reconstruction fails at {g}",
                    c.field
                );
                n += 1;
            }
        }
    }
    Ok(format!("{n} projections injective and reconstructing"))
}

fn criterion_7() -> Outcome {
    let mut n = 0;
    for c in corpora() {
        for e in &c.yd {
            let m = &e.value;
            let reg = ModuleRegistry::standard(m.hopf());
            let yd = m.verify();
            let center = verify_center_object(m, &reg);
            ensure!(
                yd.all_passed() == center.all_passed(),
                "{} over {}: YD {} but center {} ({:?})",
                e.id,
                c.field,
                yd.all_passed(),
                center.all_passed(),
                center.failed_laws()
            );
            ensure!(
                yd.failed_laws() == e.expected,
                "{} over {}: failed {:?}, expected {:?}",
                e.id,
                c.field,
                yd.failed_laws(),
                e.expected
            );
            if yd.all_passed() {
                let t = half_braiding_on(m, &reg).map_err(|err| format!("{}: {err}", e.id))?;
                let back = yd_from_half_braiding(&m.module, &t, &reg)
                    .map_err(|err| format!("{}: {err}", e.id))?;
                ensure!(back == *m, "{}: half-braiding round trip differs", e.id);
            }
            n += 1;
        }
    }
    Ok(format!("{n} YD entries"))
}

fn criterion_8() -> Outcome {
    let mut lines = Vec::new();
    let c = build_corpus(Field::Rationals);
    let s3 = hopfgc::setcat::s3();
    let transposition = s3.find("(12)").unwrap();
    let mut transposition_seen = false;
    for e in &c.lifts {
        let l = &e.value;
        let first = conjugacy_class_lift(&l.crossed, l.element, &l.lambda, &l.rho);
        let second = conjugacy_class_lift(&l.crossed, l.element, &l.lambda, &l.rho);
        match (first, second) {
            (Ok(a), Ok(b)) => {
                ensure!(
                    a.conjugated == b.conjugated && a.g_yd == b.g_yd && a.report == b.report,
                    "{}: not deterministic",
                    e.id
                );
                if l.crossed.hopf.group().table() == s3.table() && l.element == transposition {
                    transposition_seen = true;
                }
                let fmt = |v: &[bool]| {
                    v.iter()
                        .map(|&b| if b { 'T' } else { 'F' })
                        .collect::<String>()
                };
                lines.push(format!(
                    "{}: conjugated {} g-YD {}",
                    e.id,
                    fmt(&a.conjugated),
                    fmt(&a.g_yd)
                ));
            }
            (Err(a), Err(b)) => {
                ensure!(a == b, "{}: refusal not deterministic", e.id);
                ensure!(l.refused, "{}: unexpected refusal {a}", e.id);
                lines.push(format!("{}: refused", e.id));
            }
            _ => return Err(format!("{}: outcome not deterministic", e.id)),
        }
    }
    ensure!(transposition_seen, "no lift at a transposition over S3");
    for l in &lines {
        println!("      {l}");
    }
    Ok(format!("{} lifts", lines.len()))
}

fn run_cli(args: &[&str]) -> Result<(i32, Vec<u8>), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_hopfgc"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    Ok((out.status.code().unwrap_or(-1), out.stdout))
}

fn criterion_9() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let d = dir.path();
    let corpus = build_corpus(Field::Rationals);
    let mut all = Bundle::new(Field::Rationals);
    for e in &corpus.hopf {
        match &e.value {
            Structure::Coalgebra(h) => all.add_hopf_gc(&e.id, h, Some(&e.expected)),
            Structure::Algebra(h) => all.add_hopf_ga(&e.id, h, Some(&e.expected)),
        }
    }
    for e in &corpus.hopf_modules {
        all.add_hopf_module(&e.id, &e.value, Some(&e.expected));
    }
    for e in &corpus.yd {
        all.add_yd(&e.id, &e.value, Some(&e.expected));
    }
    let big = d.join("all.json");
    std::fs::write(&big, all.to_json()).map_err(|e| e.to_string())?;
    let big = big.to_str().unwrap();

    let (code_a, out_a) = run_cli(&["verify", big, "--report", "json"])?;
    let (code_b, out_b) = run_cli(&["verify", big, "--report", "json"])?;
    let (code_c, out_c) = run_cli(&["verify", big, "--report", "json", "--workers", "4"])?;
    ensure!(out_a == out_b, "two runs differ");
    ensure!(out_a == out_c, "worker counts change the report");
    ensure!(
        code_a == 1 && code_b == 1 && code_c == 1,
        "mixed bundle exit {code_a}"
    );
    let (_, text_a) = run_cli(&["verify", big, "--workers", "3"])?;
    let (_, text_b) = run_cli(&["verify", big])?;
    ensure!(text_a == text_b, "text report depends on workers");

    let mut pass = Bundle::new(Field::Rationals);
    let Structure::Coalgebra(h) = &corpus.hopf[0].value else {
        return Err("corpus order".into());
    };
    pass.add_hopf_gc("H", h, None);
    let pass_path = d.join("pass.json");
    std::fs::write(&pass_path, pass.to_json()).map_err(|e| e.to_string())?;
    let (code, _) = run_cli(&["verify", pass_path.to_str().unwrap(), "--target", "H"])?;
    ensure!(code == 0, "pass bundle exit {code}");

    let mut fail = Bundle::new(Field::Rationals);
    let e = corpus
        .hopf
        .iter()
        .find(|e| e.id == "mut-delta-const-kC2-C2")
        .unwrap();
    let Structure::Coalgebra(h) = &e.value else {
        return Err("mutation kind".into());
    };
    fail.add_hopf_gc("H", h, None);
    let fail_path = d.join("fail.json");
    std::fs::write(&fail_path, fail.to_json()).map_err(|e| e.to_string())?;
    let (code, out) = run_cli(&["verify", fail_path.to_str().unwrap(), "--target", "H"])?;
    ensure!(code == 1, "fail bundle exit {code}");
    ensure!(
        String::from_utf8_lossy(&out).contains("basis vector"),
        "no counterexample printed"
    );

    let bad = d.join("bad.json");
    std::fs::write(
        &bad,
        "{\"schema_version\": 1, \"field\": \"q\", \"entries\": {\"H\": {\"kind\": \"hopf-gc\"}}}",
    )
    .map_err(|e| e.to_string())?;
    let (code, _) = run_cli(&["verify", bad.to_str().unwrap()])?;
    ensure!(code == 2, "malformed bundle exit {code}");
    Ok("deterministic across runs and workers; exit codes 0/1/2".into())
}

fn main() {
    let criteria: [(u32, &str, Duration, fn() -> Outcome); 9] = [
        (1, "sets layer", Duration::from_secs(1), criterion_1),
        (
            2,
            "structure transfer",
            Duration::from_secs(10),
            criterion_2,
        ),
        (3, "(co)equalizers", Duration::from_secs(30), criterion_3),
        (4, "duality", Duration::from_secs(5), criterion_4),
        (
            5,
            "fundamental theorem",
            Duration::from_secs(10),
            criterion_5,
        ),
        (
            6,
            "component projection",
            Duration::from_secs(2),
            criterion_6,
        ),
        (
            7,
            "Yetter-Drinfeld / center",
            Duration::from_secs(30),
            criterion_7,
        ),
        (
            8,
            "conjugacy-class lift",
            Duration::from_secs(30),
            criterion_8,
        ),
        (9, "CLI", Duration::from_secs(60), criterion_9),
    ];
    let mut failed = 0;
    for (n, name, bound, f) in criteria {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        let timing = format!(
            "{:.2} s, bound {} s",
            elapsed.as_secs_f64(),
            bound.as_secs()
        );
        match outcome {
            Ok(detail) if elapsed <= bound => println!("PASS {n} {name}: {detail} ({timing})"),
            Ok(detail) => {
                failed += 1;
                println!("FAIL {n} {name}: over time bound; {detail} ({timing})");
            }
            Err(why) => {
                failed += 1;
                println!("FAIL {n} {name}: {why} ({timing})");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
