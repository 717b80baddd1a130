//! Command line front end.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::braiding::{s_matrix, Braided};
use crate::category::{validate, Category, FusionData};
use crate::center;
use crate::coend::{build_coend, coend_checks, decomposition, verify_universality, CoendCheckOptions};
use crate::error::{Error, Result};
use crate::examples::{self, compare_center_vs_dpi, named_epi};
use crate::suite::{run_suite, SuiteOptions};

#[derive(Parser, Debug)]
#[command(name = "gcenter", version, about = "Graded centers of G-fusion categories, computed exactly")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    #[value(alias = "structured")]
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct Input {
    /// Category file, or a bundled example name
    pub input: String,
    /// Cyclotomic order for a bundled example
    #[arg(long)]
    pub order: Option<u32>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the axioms of a category file
    Validate {
        #[command(flatten)]
        input: Input,
        /// Skip the pentagon equation
        #[arg(long)]
        no_pentagon: bool,
    },
    /// Dimensions of simples and graded components
    Dims {
        #[command(flatten)]
        input: Input,
    },
    /// Simple objects of the graded center
    CenterSimples {
        #[command(flatten)]
        input: Input,
        /// Only this grade (group element index)
        #[arg(long)]
        grade: Option<usize>,
    },
    /// The crossing as a permutation of center simples
    CrossingTable {
        #[command(flatten)]
        input: Input,
        /// Only this group element
        #[arg(long)]
        alpha: Option<usize>,
    },
    /// S-matrix and twists of the neutral component
    Smatrix {
        #[command(flatten)]
        input: Input,
    },
    /// Modularity verdict
    Modular {
        #[command(flatten)]
        input: Input,
    },
    /// The coend object C_{alpha,beta}
    Coend {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        alpha: usize,
        #[arg(long)]
        beta: usize,
    },
    /// Write a bundled example as a category file
    GenExample {
        /// One of z4_to_z2, z2_to_1, id_z2, z6_to_z3, z8_to_z2
        name: String,
        #[arg(long)]
        order: Option<u32>,
        /// Output path (stdout when absent)
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Compare the center with the reference model D(pi)
    CompareDpi {
        /// Bundled epimorphism name
        name: String,
        #[arg(long)]
        order: Option<u32>,
        /// Section as comma separated elements of H, one per element of G
        #[arg(long, value_delimiter = ',')]
        section: Option<Vec<usize>>,
    },
    /// Run every invariant suite
    Selftest {
        #[command(flatten)]
        input: Input,
    },
}

/// Exit status and the report written to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let (text, code) = execute(cli)?;
    out.write_all(text.as_bytes()).map_err(|e| Error::Internal(e.to_string()))?;
    Ok(code)
}

/// Parse arguments, run, print, and return the process exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let stdout = std::io::stdout();
    match run(&cli, &mut stdout.lock()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn load(input: &Input) -> Result<FusionData> {
    let path = std::path::Path::new(&input.input);
    if path.exists() {
        if input.order.is_some() {
            return Err(Error::Parse("--order applies to bundled examples only".into()));
        }
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", input.input)))?;
        return FusionData::parse_json(&text);
    }
    match input.order {
        Some(n) => examples::named_with_order(&input.input, n),
        None => examples::named(&input.input),
    }
}

fn load_valid(input: &Input) -> Result<Category> {
    let data = load(input)?;
    let rep = validate(&data, true);
    if !rep.ok() {
        let names: Vec<String> = rep.failures().iter().map(|c| format!("{} ({})", c.axiom, c.detail)).collect();
        return Err(Error::Validation(names.join(", ")));
    }
    Category::new(data)
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn execute(cli: &Cli) -> Result<(String, i32)> {
    let json = cli.format == Format::Json;
    let mut t = String::new();
    match &cli.command {
        Command::Validate { input, no_pentagon } => {
            let data = load(input)?;
            let rep = validate(&data, !no_pentagon);
            let code = if rep.ok() { 0 } else { 3 };
            if json {
                return Ok((to_json(&json!({"name": data.name, "valid": rep.ok(), "checks": rep.checks})), code));
            }
            for ch in &rep.checks {
                if ch.ok {
                    writeln!(t, "ok    {}", ch.axiom).unwrap();
                } else {
                    writeln!(t, "FAIL  {}: {}", ch.axiom, ch.detail).unwrap();
                }
            }
            writeln!(t, "{}: {}", data.name, if rep.ok() { "valid" } else { "invalid" }).unwrap();
            Ok((t, code))
        }
        Command::Dims { input } => {
            let c = load_valid(input)?;
            let d = &c.data;
            let simples: Vec<_> = (0..c.rank())
                .map(|i| json!({"label": d.labels[i], "grade": d.grade[i], "dim": c.dim_l(i).to_string()}))
                .collect();
            let comps: Vec<_> = (0..d.group.size)
                .map(|g| json!({"grade": g, "simples": d.simples_of_grade(g).len(), "dim": c.dim_component(g).to_string()}))
                .collect();
            if json {
                return Ok((to_json(&json!({"name": d.name, "simples": simples, "components": comps})), 0));
            }
            for i in 0..c.rank() {
                writeln!(t, "{:<8} grade {:<3} dim {}", d.labels[i], d.grade[i], c.dim_l(i)).unwrap();
            }
            for g in 0..d.group.size {
                writeln!(t, "dim(C_{g}) = {}", c.dim_component(g)).unwrap();
            }
            Ok((t, 0))
        }
        Command::CenterSimples { input, grade } => {
            let c = load_valid(input)?;
            let grades: Vec<usize> = match grade {
                Some(g) if *g >= c.data.group.size => return Err(Error::Parse(format!("no group element {g}"))),
                Some(g) => vec![*g],
                None => (0..c.data.group.size).collect(),
            };
            let mut rows = Vec::new();
            for g in grades {
                for s in center::simple_objects(&c, g)? {
                    rows.push(json!({
                        "label": s.label,
                        "grade": s.grade,
                        "object": c.label(&s.hb.a),
                        "dim": c.dim_obj(&s.hb.a).to_string(),
                    }));
                }
            }
            if json {
                return Ok((to_json(&json!({"name": c.data.name, "simples": rows})), 0));
            }
            for r in &rows {
                writeln!(t, "{:<12} grade {:<3} object {:<12} dim {}", r["label"].as_str().unwrap(), r["grade"], r["object"].as_str().unwrap(), r["dim"].as_str().unwrap()).unwrap();
            }
            writeln!(t, "{} simples", rows.len()).unwrap();
            Ok((t, 0))
        }
        Command::CrossingTable { input, alpha } => {
            let c = load_valid(input)?;
            let n = c.data.group.size;
            let alphas: Vec<usize> = match alpha {
                Some(a) if *a >= n => return Err(Error::Parse(format!("no group element {a}"))),
                Some(a) => vec![*a],
                None => (0..n).collect(),
            };
            let simples = center::all_simples(&c)?;
            let br = Braided::new(&c)?;
            let mut table = Vec::new();
            for &a in &alphas {
                let mut row = Vec::new();
                for s in &simples {
                    let img = br.cr.phi(a, &s.hb)?;
                    row.push(simples[center::identify(&c, &simples, &img.gamma)?].label.clone());
                }
                table.push(row);
            }
            if json {
                let rows: Vec<_> = alphas.iter().zip(&table).map(|(a, r)| json!({"alpha": a, "images": r})).collect();
                let labels: Vec<&String> = simples.iter().map(|s| &s.label).collect();
                return Ok((to_json(&json!({"name": c.data.name, "simples": labels, "table": rows})), 0));
            }
            for (a, row) in alphas.iter().zip(&table) {
                writeln!(t, "phi_{a}:").unwrap();
                for (s, img) in simples.iter().zip(row) {
                    writeln!(t, "  {} -> {}", s.label, img).unwrap();
                }
            }
            Ok((t, 0))
        }
        Command::Smatrix { input } => {
            let c = load_valid(input)?;
            let r = s_matrix(&c)?;
            if json {
                return Ok((
                    to_json(&json!({"labels": r.labels, "s_matrix": r.s_matrix, "twists": r.twists, "determinant": r.determinant})),
                    0,
                ));
            }
            writeln!(t, "labels: {}", r.labels.join(" ")).unwrap();
            for row in &r.s_matrix {
                writeln!(t, "  [{}]", row.join(", ")).unwrap();
            }
            writeln!(t, "twists: {}", r.twists.join(" ")).unwrap();
            writeln!(t, "det = {}", r.determinant).unwrap();
            Ok((t, 0))
        }
        Command::Modular { input } => {
            let c = load_valid(input)?;
            let r = s_matrix(&c)?;
            if json {
                return Ok((to_json(&r), 0));
            }
            writeln!(t, "dim(C_1) = {}", r.dim_neutral).unwrap();
            writeln!(t, "det S = {}", r.determinant).unwrap();
            writeln!(t, "invertible: {}", r.is_invertible).unwrap();
            writeln!(t, "ribbon: {}", r.ribbon_ok).unwrap();
            writeln!(t, "spherical: {}", r.spherical_ok).unwrap();
            writeln!(t, "G-fusion: {}", r.fusion_ok).unwrap();
            writeln!(t, "is_g_modular = {}", r.is_g_modular).unwrap();
            Ok((t, 0))
        }
        Command::Coend { input, alpha, beta } => {
            let c = load_valid(input)?;
            let n = c.data.group.size;
            if *alpha >= n || *beta >= n {
                return Err(Error::Parse(format!("group elements are 0..{n}")));
            }
            let co = build_coend(&c, *alpha, *beta)?;
            let checks = coend_checks(&c, &co, CoendCheckOptions { composite: true, decomposition: false })?;
            let universal = verify_universality(&c, &co)?;
            let dec = decomposition(&c, &co)?;
            let ok = checks.iter().all(|c| c.ok) && universal && dec.multiplicities == dec.expected;
            let grade = c.grade_of(co.obj());
            let code = if ok { 0 } else { 3 };
            if json {
                let v = json!({
                    "alpha": alpha, "beta": beta,
                    "underlying": c.label(co.obj()),
                    "multiplicities": co.obj().mult,
                    "grade": grade,
                    "commutator": c.data.group.commutator(*alpha, *beta),
                    "checks": checks,
                    "universal": universal,
                    "decomposition": dec,
                    "ok": ok,
                });
                return Ok((to_json(&v), code));
            }
            writeln!(t, "C_({alpha},{beta}) = {}", c.label(co.obj())).unwrap();
            let gs = grade.map_or("inhomogeneous".to_string(), |g| g.to_string());
            writeln!(t, "grade {gs}, commutator {}", c.data.group.commutator(*alpha, *beta)).unwrap();
            for ch in &checks {
                writeln!(t, "{:<5} {}", if ch.ok { "ok" } else { "FAIL" }, ch.axiom).unwrap();
            }
            writeln!(t, "{:<5} universality", if universal { "ok" } else { "FAIL" }).unwrap();
            writeln!(t, "decomposition:").unwrap();
            for (k, l) in dec.labels.iter().enumerate() {
                if dec.multiplicities[k] > 0 || dec.expected[k] > 0 {
                    writeln!(t, "  {} x{} (coend formula {})", l, dec.multiplicities[k], dec.expected[k]).unwrap();
                }
            }
            Ok((t, code))
        }
        Command::GenExample { name, order, out } => {
            let data = match order {
                Some(n) => examples::named_with_order(name, *n)?,
                None => examples::named(name)?,
            };
            let text = data.to_json_string() + "\n";
            match out {
                Some(p) => {
                    std::fs::write(p, &text).map_err(|e| Error::Internal(format!("{}: {e}", p.display())))?;
                    writeln!(t, "wrote {}", p.display()).unwrap();
                    Ok((t, 0))
                }
                None => Ok((text, 0)),
            }
        }
        Command::CompareDpi { name, order, section } => {
            let mut e = named_epi(name)?;
            if let Some(s) = section {
                e = e.with_section(s.clone()).map_err(|err| Error::Parse(err.to_string()))?;
            }
            let n = order.unwrap_or_else(|| e.default_order());
            let mut reports = vec![compare_center_vs_dpi(&e, n)?];
            if section.is_none() {
                for s in e.alternative_sections() {
                    reports.push(compare_center_vs_dpi(&e.with_section(s)?, n)?);
                }
            }
            let ok = reports.iter().all(|r| r.ok);
            let code = if ok { 0 } else { 3 };
            if json {
                return Ok((to_json(&json!({"ok": ok, "reports": reports})), code));
            }
            for r in &reports {
                writeln!(t, "{} section {:?}: {}", r.epi, r.section, if r.ok { "matched" } else { "MISMATCH" }).unwrap();
                for (a, b) in &r.matching {
                    writeln!(t, "  {a} <-> {b}").unwrap();
                }
                if let Some(d) = &r.discrepancy {
                    writeln!(t, "  {d}").unwrap();
                }
            }
            Ok((t, code))
        }
        Command::Selftest { input } => {
            let data = load(input)?;
            let opts = SuiteOptions::for_rank(data.rank());
            let r = run_suite(data, opts)?;
            let code = if r.ok { 0 } else { 3 };
            if json {
                return Ok((to_json(&r), code));
            }
            for ch in &r.checks {
                let mark = if ch.ok { "ok" } else { "FAIL" };
                writeln!(t, "{mark:<5} {:<14} {}", ch.suite, ch.axiom).unwrap();
                if !ch.ok {
                    writeln!(t, "      {}", ch.detail).unwrap();
                }
            }
            let failed = r.failures().len();
            writeln!(t, "{}: {} checks, {} failed", r.name, r.checks.len(), failed).unwrap();
            Ok((t, code))
        }
    }
}
