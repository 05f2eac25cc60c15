//! `mpack`: build, reduce, solve and verify matroid partition instances.
//!
//! Exit codes: 0 YES or ok, 1 NO or rejected, 2 usage or format error,
//! 3 resource cap exceeded.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use matroid_packing::adversary::{build_adversary, disagreements, run_indistinguishability, BuiltinSolver};
use matroid_packing::axioms::check_independence_axioms;
use matroid_packing::certificate::{verify_certificate, Instance, Problem};
use matroid_packing::formats::{
    bipartite_dot, digraph_dot, gadget_dot, multigraph_dot, read_certificate_json, read_instance, CertificateDocument,
    GadgetDocument, InputFormat, InstanceDocument, MatroidDoc, ReductionDocument,
};
use matroid_packing::gadget::{build_gadget, certified_labeling, search_block_labeling, verify_gadget};
use matroid_packing::matroid::Matroid;
use matroid_packing::reductions::{
    r1_modular_to_common, r2_naesat_to_modular_trees, r3_evenfactor_to_c4k2, r4_c4k2_to_paritybases,
    r5_to_partition_matroid_case, ModularInstance,
};
use matroid_packing::solvers::{default_cap, solve, solve_modular_bases};
use matroid_packing::DEFAULT_EXHAUSTIVE_CAP;

#[derive(Parser)]
#[command(name = "mpack", version, about = "Matroid partition problems, reductions and certificates")]
struct Cli {
    /// Worker threads for parallel sweeps (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dimacs,
    Arcs,
    Bipartite,
}

impl From<Format> for InputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Json => InputFormat::Json,
            Format::Dimacs => InputFormat::Dimacs,
            Format::Arcs => InputFormat::ArcList,
            Format::Bipartite => InputFormat::Bipartite,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Rule {
    R1,
    R2,
    R3,
    R4,
    R5,
}

#[derive(clap::Args)]
struct InputArgs {
    /// Input file; `-` or absent reads standard input.
    input: Option<PathBuf>,
    /// Input format; guessed from the content when absent.
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate an instance, print it as an instance JSON document.
    Build(InputArgs),
    /// Apply a reduction and print a reduction document.
    Reduce {
        #[arg(long, value_enum)]
        rule: Rule,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Decide an instance; prints a certificate document (exit 0) or NO (exit 1).
    Solve {
        /// Expected problem; a different input problem is an error.
        #[arg(long)]
        problem: Option<Problem>,
        /// Size cap for exhaustive search (default depends on the problem).
        #[arg(long)]
        cap: Option<usize>,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Check a certificate document against an instance.
    Verify {
        instance: PathBuf,
        certificate: PathBuf,
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Size cap for confirming a NO answer by search.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Gadget labeling search and exhaustive certification.
    Gadget {
        #[command(subcommand)]
        action: GadgetAction,
    },
    /// Indistinguishability experiment on the hidden-basis paving pair.
    Adversary {
        #[arg(long)]
        t: usize,
        /// Solver to run: parity-bases, size-order or avoid-parity (default: all).
        #[arg(long)]
        solver: Option<String>,
        #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_CAP)]
        cap: usize,
    },
    /// Exhaustive independence axiom report for every matroid of an instance
    /// or a matroid document (`{"descriptor": ..., "labels": ...}`).
    Axioms {
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 16)]
        cap: usize,
    },
    /// Graphviz DOT for an instance graph or a gadget.
    EmitDot {
        #[command(flatten)]
        input: InputArgs,
        /// Draw the gadget pair with this many blocks instead of an instance.
        #[arg(long)]
        gadget_ell: Option<usize>,
        /// Highlight a certificate document's solution.
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GadgetAction {
    /// Search block labelings; prints the first certified one.
    Search,
    /// Sweep all bipartitions of the `l`-block gadget; prints the certificate.
    Verify {
        #[arg(long)]
        ell: usize,
        #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_CAP)]
        cap: usize,
    },
}

/// The process outcome apart from errors.
enum Outcome {
    Yes,
    No,
}

fn read_text(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) if p != Path::new("-") => fs::read_to_string(p).with_context(|| format!("reading {}", p.display())),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("reading standard input")?;
            Ok(s)
        }
    }
}

fn load_instance(args: &InputArgs) -> Result<Instance> {
    let text = read_text(args.input.as_deref())?;
    let (inst, warnings) = read_instance(&text, args.format.map(Into::into))?;
    for w in warnings {
        eprintln!("warning: {w}");
    }
    Ok(inst)
}

fn print_json(value: &impl serde::Serialize) -> Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn as_modular(inst: Instance) -> Result<ModularInstance> {
    Ok(match inst {
        Instance::ModularBases(m) => m,
        Instance::ParityBases(p) => ModularInstance::new(p.matroid().clone(), p.pairs().clone())?,
        Instance::ModularTrees(t) => ModularInstance::new(t.matroid(), t.modules().clone())?,
        other => bail!("r1 takes a modular, parity or modular-trees instance, got {}", other.problem()),
    })
}

fn reduce(rule: Rule, inst: Instance) -> Result<ReductionDocument> {
    let doc = match (rule, &inst) {
        (Rule::R1, _) => {
            let source = as_modular(inst.clone())?;
            let out = r1_modular_to_common(&source, certified_labeling())?;
            ReductionDocument::new("r1", &inst, &Instance::CommonBases(out.instance), &out.provenance)?
        }
        (Rule::R2, Instance::Naesat(f)) => {
            let out = r2_naesat_to_modular_trees(f)?;
            ReductionDocument::new("r2", &inst, &Instance::ModularTrees(out.instance), &out.provenance)?
        }
        (Rule::R3, Instance::PerfectEvenFactor(d)) => {
            let out = r3_evenfactor_to_c4k2(d)?;
            ReductionDocument::new("r3", &inst, &Instance::C4k2TwoFactor(out.graph), &out.provenance)?
        }
        (Rule::R4, Instance::C4k2TwoFactor(g)) => {
            let out = r4_c4k2_to_paritybases(g)?;
            if out.trivial_no {
                eprintln!("warning: |S| != |T|, emitting a fixed NO instance");
            }
            ReductionDocument::new("r4", &inst, &Instance::ParityBases(out.instance), &out.provenance)?
        }
        (Rule::R5, Instance::CommonBases(c)) => {
            let out = r5_to_partition_matroid_case(c)?;
            ReductionDocument::new("r5", &inst, &Instance::CommonBases(out.instance), &out.provenance)?
        }
        (rule, other) => {
            let expected = match rule {
                Rule::R2 => Problem::Naesat,
                Rule::R3 => Problem::PerfectEvenFactor,
                Rule::R4 => Problem::C4k2TwoFactor,
                _ => Problem::CommonBases,
            };
            bail!("rule takes a {expected} instance, got {}", other.problem());
        }
    };
    Ok(doc)
}

fn run_solve(problem: Option<Problem>, cap: Option<usize>, input: &InputArgs) -> Result<Outcome> {
    let inst = load_instance(input)?;
    if let Some(p) = problem {
        if p != inst.problem() {
            bail!("--problem {p} but the input is a {} instance", inst.problem());
        }
    }
    let cap = cap.unwrap_or_else(|| default_cap(inst.problem()));
    let cert = solve(&inst, cap)?;
    if let Some(c) = &cert {
        verify_certificate(&inst, c).context("solver produced an invalid certificate")?;
    }
    print_json(&CertificateDocument::new(&inst, cert.as_ref()))?;
    Ok(if cert.is_some() { Outcome::Yes } else { Outcome::No })
}

fn run_verify(instance: &Path, certificate: &Path, format: Option<Format>, cap: Option<usize>) -> Result<Outcome> {
    let args = InputArgs {
        input: Some(instance.to_path_buf()),
        format,
    };
    let inst = load_instance(&args)?;
    let doc = read_certificate_json(&read_text(Some(certificate))?)?;
    match doc.certificate_for(&inst)? {
        Some(cert) => match verify_certificate(&inst, &cert) {
            Ok(()) => {
                println!("valid: YES certificate for {}", inst.problem());
                Ok(Outcome::Yes)
            }
            Err(e) => {
                println!("rejected: {e}");
                Ok(Outcome::No)
            }
        },
        None => {
            let cap = cap.unwrap_or_else(|| default_cap(inst.problem()));
            match solve(&inst, cap)? {
                None => {
                    println!("valid: exhaustive search confirms NO for {}", inst.problem());
                    Ok(Outcome::Yes)
                }
                Some(found) => {
                    println!("rejected: answer is NO but a solution exists");
                    print_json(&CertificateDocument::new(&inst, Some(&found)))?;
                    Ok(Outcome::No)
                }
            }
        }
    }
}

fn run_gadget(action: &GadgetAction) -> Result<Outcome> {
    match action {
        GadgetAction::Search => {
            let found = search_block_labeling()?;
            print_json(&json!({
                "candidates_tried": found.candidates_tried,
                "gadget": GadgetDocument::new(&found.labeling),
            }))?;
            Ok(Outcome::Yes)
        }
        GadgetAction::Verify { ell, cap } => {
            let pair = build_gadget(certified_labeling(), *ell)?;
            let cert = verify_gadget(&pair, *cap)?;
            let mut value = serde_json::to_value(&cert)?;
            value["condition_a"] = json!(cert.condition_a());
            value["condition_b"] = json!(cert.condition_b());
            value["certified"] = json!(cert.certified());
            value["labeling"] = serde_json::to_value(GadgetDocument::new(certified_labeling()))?;
            print_json(&value)?;
            Ok(if cert.certified() { Outcome::Yes } else { Outcome::No })
        }
    }
}

fn run_adversary(t: usize, solver: Option<&str>, cap: usize) -> Result<Outcome> {
    let pair = build_adversary(t, None, None)?;
    let diff = disagreements(&pair, cap)?;
    let hidden = pair.hidden_sets();
    let exact = diff.len() == 2 && hidden.iter().all(|h| diff.contains(h));
    let on_m = solve_modular_bases(&ModularInstance::new(pair.m.clone(), pair.pairing.clone())?, cap)?.is_some();
    let on_m0 = solve_modular_bases(&ModularInstance::new(pair.m0.clone(), pair.pairing.clone())?, cap)?.is_some();
    let solvers = match solver {
        Some(name) => vec![BuiltinSolver::from_name(name)?],
        None => BuiltinSolver::ALL.to_vec(),
    };
    let reports = solvers
        .iter()
        .map(|s| run_indistinguishability(&pair, s))
        .collect::<matroid_packing::Result<Vec<_>>>()?;
    let ok = exact && !on_m && on_m0 && reports.iter().all(|r| r.agreement_verified);
    print_json(&json!({
        "t": t,
        "ground_size": pair.ground_size(),
        "x0": pair.x0.to_vec(),
        "hyperplanes_m": pair.hyperplanes.len(),
        "disagreements": diff.iter().map(|d| d.to_vec()).collect::<Vec<_>>(),
        "disagreements_are_hidden_pair": exact,
        "modular_bases_on_m": on_m,
        "modular_bases_on_m0": on_m0,
        "experiments": reports,
        "ok": ok,
    }))?;
    Ok(if ok { Outcome::Yes } else { Outcome::No })
}

fn matroids_of(text: &str) -> Result<Vec<(String, Matroid)>> {
    let value: Value = serde_json::from_str(text).map_err(matroid_packing::Error::from)?;
    if value.get("descriptor").is_some() {
        let doc: MatroidDoc = serde_json::from_value(value).map_err(matroid_packing::Error::from)?;
        return Ok(vec![("matroid".into(), doc.build()?)]);
    }
    let (inst, _) = read_instance(text, Some(InputFormat::Json))?;
    Ok(match inst {
        Instance::CommonBases(c) => vec![("m1".into(), c.m1().clone()), ("m2".into(), c.m2().clone())],
        Instance::ModularBases(m) => vec![("matroid".into(), m.matroid().clone())],
        Instance::ParityBases(p) => vec![("matroid".into(), p.matroid().clone())],
        Instance::ModularTrees(t) => vec![("graphic".into(), t.matroid())],
        other => bail!("a {} instance has no matroid", other.problem()),
    })
}

fn run_axioms(input: Option<&Path>, cap: usize) -> Result<Outcome> {
    let text = read_text(input)?;
    let mut all_pass = true;
    let mut reports = serde_json::Map::new();
    for (name, m) in matroids_of(&text)? {
        let report = check_independence_axioms(&m, cap)?;
        all_pass &= report.passed();
        reports.insert(
            name,
            json!({ "kind": m.kind_name(), "size": m.size(), "passed": report.passed(), "axioms": report }),
        );
    }
    print_json(&reports)?;
    Ok(if all_pass { Outcome::Yes } else { Outcome::No })
}

fn run_emit_dot(input: &InputArgs, gadget_ell: Option<usize>, certificate: Option<&Path>) -> Result<Outcome> {
    if let Some(ell) = gadget_ell {
        print!("{}", gadget_dot(&build_gadget(certified_labeling(), ell)?));
        return Ok(Outcome::Yes);
    }
    let inst = load_instance(input)?;
    let cert = match certificate {
        Some(p) => read_certificate_json(&read_text(Some(p))?)?.certificate_for(&inst)?,
        None => None,
    };
    use matroid_packing::certificate::Certificate;
    let dot = match (&inst, &cert) {
        (Instance::ModularTrees(t), c) => multigraph_dot(t.graph(), "modular_trees", c.as_ref().and_then(Certificate::classes)),
        (Instance::PerfectEvenFactor(d), Some(Certificate::ArcSet(a))) => digraph_dot(d, "digraph", Some(a)),
        (Instance::PerfectEvenFactor(d), _) => digraph_dot(d, "digraph", None),
        (Instance::C4k2TwoFactor(g), Some(Certificate::EdgeSet(e))) => bipartite_dot(g, "bipartite", Some(e)),
        (Instance::C4k2TwoFactor(g), _) => bipartite_dot(g, "bipartite", None),
        (other, _) => bail!("a {} instance has no graph to draw", other.problem()),
    };
    print!("{dot}");
    Ok(Outcome::Yes)
}

fn run(cli: Cli) -> Result<Outcome> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| anyhow!("thread pool: {e}"))?;
    }
    match &cli.command {
        Command::Build(input) => {
            print_json(&InstanceDocument::of(&load_instance(input)?)?)?;
            Ok(Outcome::Yes)
        }
        Command::Reduce { rule, input } => {
            print_json(&reduce(*rule, load_instance(input)?)?)?;
            Ok(Outcome::Yes)
        }
        Command::Solve { problem, cap, input } => run_solve(*problem, *cap, input),
        Command::Verify {
            instance,
            certificate,
            format,
            cap,
        } => run_verify(instance, certificate, *format, *cap),
        Command::Gadget { action } => run_gadget(action),
        Command::Adversary { t, solver, cap } => run_adversary(*t, solver.as_deref(), *cap),
        Command::Axioms { input, cap } => run_axioms(input.as_deref(), *cap),
        Command::EmitDot {
            input,
            gadget_ell,
            certificate,
        } => run_emit_dot(input, *gadget_ell, certificate.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(Outcome::Yes) => ExitCode::SUCCESS,
        Ok(Outcome::No) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            let capped = e
                .chain()
                .any(|c| matches!(c.downcast_ref(), Some(matroid_packing::Error::ResourceLimit { .. })));
            ExitCode::from(if capped { 3 } else { 2 })
        }
    }
}
