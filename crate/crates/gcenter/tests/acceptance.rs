//! Acceptance criteria, one line per criterion. Exits nonzero when any fails.

use std::collections::BTreeMap;
use std::path::Path;
use std::process::ExitCode;
use std::thread;
use std::time::Instant;

use gcenter::braiding::{equal_up_to_permutation, s_matrix, Braided};
use gcenter::category::{validate, Category, FusionData};
use gcenter::center;
use gcenter::coend::{build_coend, coend_checks, CoendCheckOptions};
use gcenter::error::Error;
use gcenter::examples::{self, compare_center_vs_dpi, named_epi, BUNDLED};
use gcenter::linalg::Matrix;
use gcenter::suite::{run_suite, SuiteOptions};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn category(name: &str) -> Result<Category, String> {
    let d = examples::named(name).map_err(|e| e.to_string())?;
    Category::new(d).map_err(|e| e.to_string())
}

fn axiom_suites() -> Outcome {
    let names = ["z2_to_1", "id_z2", "z4_to_z2", "z6_to_z3", "z8_to_z2"];
    let results: Vec<_> = thread::scope(|s| {
        let hs: Vec<_> = names
            .iter()
            .map(|n| {
                s.spawn(move || {
                    let d = examples::named(n).map_err(|e| e.to_string())?;
                    let opts = SuiteOptions::for_rank(d.rank());
                    run_suite(d, opts).map_err(|e| format!("{n}: {e}"))
                })
            })
            .collect();
        hs.into_iter().map(|h| h.join().expect("suite thread")).collect()
    });
    let mut total = 0;
    for r in results {
        let r = r?;
        if let Some(f) = r.failures().first() {
            return Err(format!("{}: {} {} ({})", r.name, f.suite, f.axiom, f.detail));
        }
        for suite in ["category", "half-braiding", "monad", "crossing", "braiding", "ribbon", "coend"] {
            ensure(r.checks.iter().any(|c| c.suite == suite), format!("{}: suite {suite} did not run", r.name))?;
        }
        ensure(r.checks.iter().any(|c| c.axiom.starts_with("coend-defining-relation")), "coend-defining-relation missing")?;
        total += r.checks.len();
    }
    Ok(format!("{total} checks on {} categories", names.len()))
}

fn running_example_counts() -> Outcome {
    let c = category("z4_to_z2")?;
    let e = named_epi("z4_to_z2").map_err(|e| e.to_string())?;
    let dim1 = c.dim_component(0);
    ensure(dim1 == c.scalar(e.kernel.len() as i64), format!("dim(C_1) = {dim1}"))?;
    ensure(dim1 == c.scalar(2), "dim(C_1) != 2")?;
    let mut counts = Vec::new();
    for g in 0..2 {
        let engine = center::simple_objects(&c, g).map_err(|e| e.to_string())?.len();
        let mut oracle = 0;
        for i in c.data.simples_of_grade(g) {
            oracle += center::brute_force_scalar_braidings(&c, i).map_err(|e| e.to_string())?.len();
        }
        ensure(engine == oracle, format!("grade {g}: engine {engine}, brute force {oracle}"))?;
        ensure(engine == 4, format!("grade {g}: {engine} simples"))?;
        counts.push(engine);
    }
    Ok(format!("dim(C_1) = 2, simples per grade {counts:?}, brute force agrees"))
}

fn neutral_s_matrix() -> Outcome {
    let c = category("z4_to_z2")?;
    let r = s_matrix(&c).map_err(|e| e.to_string())?;
    let h = Matrix::from_ints(c.order(), &[&[1, 1, 1, 1], &[1, 1, -1, -1], &[1, -1, 1, -1], &[1, -1, -1, 1]]);
    ensure(equal_up_to_permutation(&r.s, &h), format!("S = {:?}", r.s_matrix))?;
    let d = &r.det;
    ensure(*d == c.scalar(16) || *d == c.scalar(-16), format!("det = {d}"))?;
    ensure(r.is_g_modular, "modular verdict false")?;
    Ok(format!("S Hadamard up to permutation, det {}, modular", r.determinant))
}

fn ribbon() -> Outcome {
    let mut n = 0;
    for name in BUNDLED {
        let c = category(name)?;
        let br = Braided::new(&c).map_err(|e| e.to_string())?;
        let simples = center::all_simples(&c).map_err(|e| e.to_string())?;
        let crit = br.ribbon_check(&simples).map_err(|e| e.to_string())?;
        ensure(crit, format!("{name}: ribbon criterion false"))?;
        for s in &simples {
            let sd = br.twist_self_dual(&s.hb).map_err(|e| e.to_string())?;
            let mut per = true;
            for u in c.representatives(s.grade) {
                per &= br.ribbon_criterion(&s.hb, &c.simple(u)).map_err(|e| e.to_string())?;
            }
            ensure(sd && per == sd, format!("{name} {}: self-dual {sd}, criterion {per}", s.label))?;
            n += 1;
        }
    }
    Ok(format!("criterion and self-duality agree on {n} simples"))
}

fn dpi_matching() -> Outcome {
    let mut runs = 0;
    for name in BUNDLED {
        let e = named_epi(name).map_err(|e| e.to_string())?;
        let order = e.default_order();
        let mut epis = vec![e.clone()];
        for s in e.alternative_sections() {
            epis.push(e.with_section(s).map_err(|e| e.to_string())?);
        }
        for epi in &epis {
            let r = compare_center_vs_dpi(epi, order).map_err(|e| e.to_string())?;
            ensure(r.ok, format!("{name} section {:?}: {}", r.section, r.discrepancy.unwrap_or_default()))?;
            let total = center::all_simples(&category(name)?).map_err(|e| e.to_string())?.len();
            ensure(r.matching.len() == total, format!("{name}: partial matching"))?;
            runs += 1;
        }
        if name != "z2_to_1" && name != "id_z2" {
            ensure(epis.len() > 1, format!("{name}: no second section"))?;
        }
    }
    Ok(format!("{runs} matchings over {} epimorphisms", BUNDLED.len()))
}

fn coend_running_example() -> Outcome {
    let c = category("z4_to_z2")?;
    let mut seen = BTreeMap::new();
    for a in 0..2 {
        for b in 0..2 {
            let co = build_coend(&c, a, b).map_err(|e| e.to_string())?;
            let opts = CoendCheckOptions { composite: true, decomposition: true };
            for ch in coend_checks(&c, &co, opts).map_err(|e| e.to_string())? {
                ensure(ch.ok, format!("({a},{b}) {}: {}", ch.axiom, ch.detail))?;
                *seen.entry(ch.axiom).or_insert(0) += 1;
            }
        }
    }
    for k in ["coend-grade-commutator", "coend-half-braiding", "coend-defining-relation", "coend-dinaturality"] {
        ensure(seen.get(k) == Some(&4), format!("{k} not run on all pairs"))?;
    }
    Ok("grade, half braiding, coend-defining-relation, dinaturality on all four pairs".into())
}

fn load_fixture(name: &str) -> Result<FusionData, String> {
    let p = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name);
    let text = std::fs::read_to_string(&p).map_err(|e| format!("{}: {e}", p.display()))?;
    FusionData::parse_json(&text).map_err(|e| e.to_string())
}

fn negative_controls() -> Outcome {
    let bad = load_fixture("corrupted_fusion.json")?;
    let rep = validate(&bad, true);
    ensure(!rep.ok(), "corrupted fusion accepted")?;
    ensure(rep.get("associativity").is_some_and(|c| !c.ok), "associativity not named")?;
    let bad = load_fixture("wrong_grade.json")?;
    let rep = validate(&bad, true);
    ensure(!rep.ok(), "wrong grade accepted")?;
    ensure(rep.get("grading").is_some_and(|c| !c.ok), "grading not named")?;
    let small = examples::named_with_order("z8_to_z2", 2).map_err(|e| e.to_string())?;
    let c = Category::new(small).map_err(|e| e.to_string())?;
    match center::all_simples(&c) {
        Err(Error::NonSplit(_)) => {}
        Err(e) => return Err(format!("order 2: {e}")),
        Ok(s) => return Err(format!("order 2 produced {} simples", s.len())),
    }
    Ok("associativity and grading named; order 2 on z8_to_z2 is NonSplit".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("axiom suites on five categories", axiom_suites),
        ("z4_to_z2 dimensions and simple counts", running_example_counts),
        ("neutral S-matrix and modularity", neutral_s_matrix),
        ("ribbon criterion and twist self-duality", ribbon),
        ("center versus D(pi) under two sections", dpi_matching),
        ("coend objects of z4_to_z2", coend_running_example),
        ("negative controls", negative_controls),
    ];
    let t = Instant::now();
    let results: Vec<(usize, &str, Outcome, f64)> = thread::scope(|s| {
        let hs: Vec<_> = criteria
            .iter()
            .enumerate()
            .map(|(k, (name, f))| {
                s.spawn(move || {
                    let t = Instant::now();
                    let r = f();
                    (k + 1, *name, r, t.elapsed().as_secs_f64())
                })
            })
            .collect();
        hs.into_iter().map(|h| h.join().expect("criterion thread")).collect()
    });
    let mut failed = 0;
    for (k, name, r, secs) in &results {
        match r {
            Ok(msg) => println!("PASS [{k}] {name}: {msg} ({secs:.1}s)"),
            Err(msg) => {
                failed += 1;
                println!("FAIL [{k}] {name}: {msg} ({secs:.1}s)");
            }
        }
    }
    println!("{} of {} criteria passed in {:.1}s", results.len() - failed, results.len(), t.elapsed().as_secs_f64());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
