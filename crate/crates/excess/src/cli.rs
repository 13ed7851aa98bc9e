//! The command-line surface: `build`, `analyze`, `verify`, `corpus`,
//! `identify`. Exit codes: 0 success, 1 check failure, 2 input or parse
//! errors.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::analysis::{classify_with, excess_profile, ExcessProfile, StructureReport};
use crate::dsl;
use crate::error::{Error, Result};
use crate::family::identify_family;
use crate::format;
use crate::harness::{builtin_checks, generate_corpus, run_suite, CorpusSpec, SuiteItem, TheoremCheck};
use crate::lattice::face_lattice;
use crate::polytope::IncidencePolytope;
use crate::sanity::sanity_check;

#[derive(Parser)]
#[command(
    name = "excess",
    version,
    about = "Combinatorial polytope engine: constructions, excess-degree analysis, structural checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a construction expression and write the polytope as JSON.
    Build {
        /// Construction expression, e.g. "pyramid(delta(2,3),1)".
        expr: String,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Report the excess profile and structural classification of a target.
    Analyze {
        /// Polytope file or construction expression.
        target: String,
        #[arg(long)]
        json: bool,
    },
    /// Run the built-in structural checks on a file, directory or expression.
    Verify {
        target: String,
        /// Comma-separated check ids; all checks when omitted.
        #[arg(long)]
        checks: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Generate a seeded corpus into a directory.
    Corpus {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 12)]
        max_dim: usize,
        #[arg(long, default_value_t = 48)]
        max_vertices: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Match a target against the catalogue families.
    Identify { target: String },
}

/// Runs the CLI on the given arguments (including the program name) and
/// returns the exit code.
pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Build { expr, output } => {
            let p = dsl::eval(&dsl::parse(&expr)?)?;
            let json = format::to_json(&p);
            match output {
                Some(path) => std::fs::write(path, json)?,
                None => print!("{json}"),
            }
            Ok(0)
        }
        Command::Analyze { target, json } => {
            let (p, _) = load_target(&target)?;
            analyze_one(&p, json)?;
            Ok(0)
        }
        Command::Verify {
            target,
            checks,
            json,
        } => verify(&target, checks.as_deref(), json),
        Command::Corpus {
            seed,
            count,
            max_dim,
            max_vertices,
            out,
        } => corpus(seed, count, max_dim, max_vertices, &out),
        Command::Identify { target } => {
            let (p, _) = load_target(&target)?;
            println!("{}", identify_family(&p)?);
            Ok(0)
        }
    }
}

/// Loads a polytope from a file path or, when no such file exists, by
/// parsing the target as a construction expression.
fn load_target(target: &str) -> Result<(IncidencePolytope, String)> {
    let path = Path::new(target);
    if path.is_file() {
        let p = format::read_file(path)?;
        let label = p
            .provenance
            .clone()
            .unwrap_or_else(|| target.to_string());
        Ok((p, label))
    } else {
        let expr = dsl::parse(target)?;
        let p = dsl::eval(&expr)?;
        let label = expr.to_string();
        Ok((p, label))
    }
}

#[derive(Serialize)]
struct AnalyzeOutput<'a> {
    dim: usize,
    n_vertices: usize,
    n_facets: usize,
    f_vector: &'a [usize],
    excess_profile: &'a ExcessProfile,
    structure: &'a StructureReport,
}

fn analyze_one(p: &IncidencePolytope, json: bool) -> Result<()> {
    let lattice = face_lattice(p)?;
    let profile = excess_profile(p)?;
    let structure = classify_with(p, &lattice, &profile);
    if json {
        let out = AnalyzeOutput {
            dim: p.dim(),
            n_vertices: p.n_vertices(),
            n_facets: p.n_facets(),
            f_vector: lattice.f_vector(),
            excess_profile: &profile,
            structure: &structure,
        };
        let mut s = serde_json::to_string_pretty(&out)?;
        s.push('\n');
        print!("{s}");
        return Ok(());
    }
    if let Some(prov) = &p.provenance {
        println!("provenance:    {prov}");
    }
    println!("dim:           {}", p.dim());
    println!("vertices:      {}", p.n_vertices());
    println!("facets:        {}", p.n_facets());
    println!("f-vector:      {:?}", lattice.f_vector());
    println!("excess degree: {}", profile.xi);
    println!(
        "nonsimple:     {:?} (excesses {:?})",
        profile.nonsimple,
        profile
            .nonsimple
            .iter()
            .map(|&v| profile.excesses[v])
            .collect::<Vec<_>>()
    );
    println!("simple:        {}", structure.is_simple);
    println!("semisimple:    {}", structure.is_semisimple);
    println!("super-Kirkman: {}", structure.is_super_kirkman);
    println!("2-neighbourly: {}", structure.is_two_neighbourly);
    println!("pyramidal:     {}", structure.is_pyramidal);
    let ns = &structure.nonsimple_subgraph;
    println!(
        "nonsimple subgraph: same-degree={} components={} face={} missing-face={} phantom-simplex={}",
        ns.same_degree,
        ns.component_count,
        ns.is_face,
        ns.is_missing_face
            .map(|b| b.to_string())
            .unwrap_or_else(|| "skipped".into()),
        ns.is_phantom_simplex
    );
    Ok(())
}

fn selected_checks(filter: Option<&str>) -> Result<Vec<TheoremCheck>> {
    let all = builtin_checks();
    let Some(filter) = filter else {
        return Ok(all);
    };
    let wanted: Vec<&str> = filter.split(',').map(str::trim).collect();
    for w in &wanted {
        if !all.iter().any(|c| c.id == *w) {
            let valid: Vec<&str> = all.iter().map(|c| c.id).collect();
            return Err(Error::input(format!(
                "unknown check `{w}`; valid ids: {}",
                valid.join(", ")
            )));
        }
    }
    Ok(all
        .into_iter()
        .filter(|c| wanted.contains(&c.id))
        .collect())
}

fn verify(target: &str, checks: Option<&str>, json: bool) -> Result<i32> {
    let checks = selected_checks(checks)?;
    let path = Path::new(target);
    let mut items: Vec<SuiteItem> = Vec::new();
    if path.is_dir() {
        let mut files: Vec<PathBuf> = std::fs::read_dir(path)?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "json"))
            .filter(|p| p.file_name().is_some_and(|n| n != "manifest.json"))
            .collect();
        files.sort();
        if files.is_empty() {
            return Err(Error::input(format!(
                "no polytope files in {}",
                path.display()
            )));
        }
        for file in files {
            items.push(gated_item(&file)?);
        }
    } else if path.is_file() {
        items.push(gated_item(path)?);
    } else {
        let (p, label) = load_target(target)?;
        items.push(SuiteItem { label, polytope: p });
    }
    let report = run_suite(&items, &checks)?;
    if json {
        print!("{}", report.to_json());
    } else {
        println!("corpus fingerprint: {}", report.corpus_fingerprint);
        for c in &report.checks {
            println!(
                "{:18} pass={:<6} fail={:<6} vacuous={}",
                c.id, c.pass, c.fail, c.vacuous
            );
            for detail in &c.failure_details {
                println!("    witness: {detail}");
            }
        }
        println!("suite: {}", if report.failed() { "FAIL" } else { "PASS" });
    }
    Ok(if report.failed() { 1 } else { 0 })
}

/// Loads a file and runs the sanity gate; rejection is an input error.
fn gated_item(path: &Path) -> Result<SuiteItem> {
    let p = format::read_file(path)?;
    let report = sanity_check(&p)?;
    if !report.passed() {
        return Err(Error::input(format!(
            "{} rejected by the sanity gate: {}",
            path.display(),
            report.failures().join("; ")
        )));
    }
    let label = p
        .provenance
        .clone()
        .unwrap_or_else(|| path.display().to_string());
    Ok(SuiteItem { label, polytope: p })
}

#[derive(Serialize)]
struct Manifest<'a> {
    seed: u64,
    count: usize,
    max_dim: usize,
    max_vertices: usize,
    fingerprint: String,
    rejections: &'a crate::harness::GenerationLog,
    files: Vec<String>,
}

fn corpus(seed: u64, count: usize, max_dim: usize, max_vertices: usize, out: &Path) -> Result<i32> {
    let spec = CorpusSpec {
        seed,
        count,
        max_dim,
        max_vertices,
        weights: Default::default(),
    };
    let (members, log) = generate_corpus(&spec)?;
    std::fs::create_dir_all(out)?;
    let mut files = Vec::with_capacity(members.len());
    for (i, m) in members.iter().enumerate() {
        let name = format!("{i:04}.json");
        format::write_file(&out.join(&name), &m.polytope)?;
        files.push(name);
    }
    let items = crate::harness::suite_items(&members);
    let fingerprint = crate::harness::corpus_fingerprint(&items);
    let manifest = Manifest {
        seed,
        count,
        max_dim,
        max_vertices,
        fingerprint: fingerprint.clone(),
        rejections: &log,
        files,
    };
    let mut text = serde_json::to_string_pretty(&manifest)?;
    text.push('\n');
    std::fs::write(out.join("manifest.json"), text)?;
    println!(
        "wrote {} polytopes to {} (fingerprint {fingerprint})",
        members.len(),
        out.display()
    );
    Ok(0)
}
