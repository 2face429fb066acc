//! `gencay`: groups, generalized Cayley graphs and the cubic census from the
//! command line. Exit status 0 on success, 1 on a failed check or
//! disagreement, 2 on bad input.

use std::io::{self, Write};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use gencay_core::automorphism::{automorphism_group, involution_conjugacy_classes, involutory_automorphisms};
use gencay_core::catalog::{build_str, Kind, CATALOG_ORDERS};
use gencay_core::census::{cayley_sum_census, reproduce_table1, run_census, run_fixtures, CensusOptions, GroupVerdict, ReportFormat};
use gencay_core::criteria::{bipartite_algebraic, bipartite_when_connected, connected_algebraic, connected_coset_criterion};
use gencay_core::gcs::{alpha_partition, enumerate_gcs, validate_gcs, GCSubset};
use gencay_core::graph::{build_gc_graph, export_graph, integral_spectrum, GraphFormat};
use gencay_core::notation::{parse_alpha, parse_element_set};
use gencay_core::{Error, FiniteGroup};

/// Writes to stdout; a closed pipe (`gencay ... | head`) ends the process quietly.
fn emit(args: std::fmt::Arguments) {
    if let Err(e) = io::stdout().lock().write_fmt(args) {
        if e.kind() == io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        panic!("failed writing to stdout: {e}");
    }
}

macro_rules! out {
    ($($t:tt)*) => { emit(format_args!($($t)*)) };
}

macro_rules! outln {
    ($($t:tt)*) => { emit(format_args!("{}\n", format_args!($($t)*))) };
}

const GRAMMAR: &str = "\
group expressions: Zn, Z2^k, Dn (n even), Tn (n divisible by 4), Q8, Sn, An, SL23, F54, U24, V24, U30,
                   products `G x H`, powers `(G)^k`, parentheses
alpha:             id | inv | conj:<element> | comma-separated images, e.g. \"a->a^-1, b->b\"
elements:          words in the generators (a^2b, b^-1), integers in cyclic groups,
                   tuples (a,1) in products, cycles (12)(34) in Sn/An, matrices [[0,1],[2,0]] in SL23";

#[derive(Parser)]
#[command(name = "gencay", version, about = "Generalized Cayley graphs of small groups", after_help = GRAMMAR)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Group structure.
    Group {
        #[command(subcommand)]
        command: GroupCommand,
    },
    /// Automorphisms of a group.
    Aut {
        expr: String,
        /// List the non-identity involutory automorphisms.
        #[arg(long)]
        involutions: bool,
        /// Group involutions into Aut(G)-conjugacy classes.
        #[arg(long)]
        classes: bool,
    },
    /// Generalized Cayley subsets.
    Gcs {
        #[command(subcommand)]
        command: GcsCommand,
    },
    /// Graph construction and export.
    Graph {
        #[command(subcommand)]
        command: GraphCommand,
    },
    /// Connectivity, bipartiteness and integrality, by criterion and by search.
    Check(SubsetArgs),
    /// Classify catalog groups by their generalized Cayley graphs.
    Census {
        #[arg(long, value_delimiter = ',', default_values_t = CATALOG_ORDERS.to_vec())]
        orders: Vec<usize>,
        #[arg(long, default_value = "all")]
        kind: Kind,
        /// Report format; omit for a one-line-per-group summary.
        #[arg(long)]
        format: Option<ReportFormat>,
        #[arg(long, default_value_t = 3)]
        size: usize,
        /// Iterate every involution instead of one per conjugacy class.
        #[arg(long)]
        no_reduction: bool,
        /// Also use the identity automorphism.
        #[arg(long)]
        include_identity_alpha: bool,
    },
    /// Check every square-free Cayley sum graph of the abelian catalog groups.
    SumCensus {
        #[arg(long, value_delimiter = ',', default_values_t = CATALOG_ORDERS.to_vec())]
        orders: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        size: usize,
    },
    /// Named instances with expected verdicts.
    Fixtures {
        #[command(subcommand)]
        command: FixturesCommand,
    },
    /// The involutions of Aut(D8), compared against the golden table.
    Table1,
}

#[derive(Subcommand)]
enum GroupCommand {
    Info { expr: String },
}

#[derive(Subcommand)]
enum GcsCommand {
    Enumerate {
        expr: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long)]
        size: usize,
    },
}

#[derive(Subcommand)]
enum GraphCommand {
    Build {
        #[command(flatten)]
        subset: SubsetArgs,
        #[arg(long, default_value = "dot")]
        format: GraphFormat,
    },
}

#[derive(Subcommand)]
enum FixturesCommand {
    Run,
}

#[derive(Args)]
struct SubsetArgs {
    expr: String,
    #[arg(long, allow_hyphen_values = true)]
    alpha: String,
    #[arg(long, allow_hyphen_values = true)]
    set: String,
}

/// Failure with an exit code.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::UnknownElement(_) => Failure(2, format!("{e}\n\n{GRAMMAR}")),
            _ => Failure(1, e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn group(expr: &str) -> Result<Arc<FiniteGroup>, Failure> {
    Ok(Arc::new(build_str(expr)?))
}

fn subset(args: &SubsetArgs) -> Result<GCSubset, Failure> {
    let g = group(&args.expr)?;
    let alpha = parse_alpha(&g, &args.alpha)?;
    let s = parse_element_set(&g, &args.set)?;
    Ok(validate_gcs(&g, &alpha, &s)?)
}

fn group_info(expr: &str) -> Outcome {
    let g = group(expr)?;
    outln!("group: {}", g.name());
    outln!("order: {}", g.order());
    outln!("abelian: {}", g.is_abelian());
    let gens: Vec<String> = g.generators().iter().map(|(n, x)| format!("{n} = {}", g.element_name(*x))).collect();
    if !gens.is_empty() {
        outln!("generators: {}", gens.join(", "));
    }
    let hist = g.order_histogram();
    let orders: Vec<String> =
        hist.iter().enumerate().filter(|(_, &c)| c > 0).map(|(k, c)| format!("{c} of order {k}")).collect();
    outln!("element orders: {}", orders.join(", "));
    outln!("elements: {}", g.names().join(" "));
    Ok(())
}

fn aut(expr: &str, involutions: bool, classes: bool) -> Outcome {
    let g = group(expr)?;
    outln!("|Aut({})| = {}", g.name(), automorphism_group(&g)?.len());
    if involutions {
        let all = involutory_automorphisms(&g, false)?;
        outln!("involutions: {}", all.len());
        for a in &all {
            outln!("  {}", a.describe(&g));
        }
    }
    if classes {
        let cls = involution_conjugacy_classes(&g)?;
        outln!("involution classes: {}", cls.len());
        for (i, c) in cls.iter().enumerate() {
            let p = alpha_partition(&g, &c[0])?;
            outln!(
                "  class {i}: size {}, representative {}, |omega| = {}, |Omega| = {}",
                c.len(),
                c[0].describe(&g),
                p.omega.len(),
                p.big_omega.len()
            );
        }
    }
    Ok(())
}

fn enumerate(expr: &str, alpha: &str, size: usize) -> Outcome {
    let g = group(expr)?;
    let a = parse_alpha(&g, alpha)?;
    let p = alpha_partition(&g, &a)?;
    outln!("omega: {}", g.format_set(&p.omega));
    outln!("Omega: {}", g.format_set(&p.big_omega));
    outln!("mho: {}", g.format_set(&p.mho));
    let subsets = enumerate_gcs(&g, &a, size)?;
    outln!("subsets of size {size}: {}", subsets.len());
    for s in subsets {
        outln!("  {}", s.format());
    }
    Ok(())
}

fn check(args: &SubsetArgs) -> Outcome {
    let s = subset(args)?;
    let g = s.group();
    let graph = build_gc_graph(&s)?;
    outln!("group: {}", g.name());
    outln!("alpha: {}", s.alpha().describe(g));
    outln!("subset: {}", s.format());
    let mut disagreements = Vec::new();

    let search = graph.is_connected();
    let direct = connected_algebraic(&s);
    let coset = connected_coset_criterion(&s);
    outln!(
        "connected={search} (search); {} (generation/index, {}); {} (coset, {})",
        direct.connected, direct.branch, coset.connected, coset.branch
    );
    if direct.connected != search || coset.connected != search {
        disagreements.push("connectivity");
    }

    let two_colourable = graph.is_bipartite();
    let mut line = format!("bipartite={two_colourable} (search)");
    if g.is_abelian() {
        let v = bipartite_algebraic(&s)?;
        line += &format!("; {} (odd product criterion", v.bipartite);
        if let Some(w) = &v.witness {
            line += &format!(", witness {} = {}", w.text, w.product);
        }
        line += ")";
        if v.bipartite != two_colourable {
            disagreements.push("bipartiteness");
        }
    }
    if search {
        match bipartite_when_connected(&s) {
            Ok(v) => line += &format!("; {} (|<SS^-1>| = |G|/2)", v.half_order_product),
            Err(_) => disagreements.push("connected bipartiteness"),
        }
    }
    outln!("{line}");

    let spectrum = integral_spectrum(&graph)?;
    if spectrum.integral {
        outln!("integral=true (eigenvalues {:?})", spectrum.roots);
    } else {
        outln!("integral=false (integer eigenvalues {:?}, remaining factor {})", spectrum.roots, spectrum.remainder);
    }
    if disagreements.is_empty() {
        Ok(())
    } else {
        Err(Failure(1, format!("criterion and search disagree on {}", disagreements.join(", "))))
    }
}

fn census(
    orders: &[usize],
    kind: Kind,
    format: Option<ReportFormat>,
    options: CensusOptions,
) -> Outcome {
    let report = run_census(orders, kind, &options)?;
    if let Some(f) = format {
        out!("{}", report.render(f)?);
        return Ok(());
    }
    for g in &report.groups {
        let verdict = match (g.verdict, g.witness()) {
            (GroupVerdict::Excluded { .. }, Some(w)) => {
                format!("excluded by {} under [{}] (connected={}, integral={})", w.subset, w.alpha, w.connected, w.integral)
            }
            (GroupVerdict::NoCubicGCS, _) => format!("no subsets of size {}", options.subset_size),
            _ => format!("all {} graphs connected and integral", g.rows.len()),
        };
        outln!("{:<10} {verdict}", g.group);
    }
    outln!("survivors: {}", report.survivor_line());
    Ok(())
}

fn sum_census(orders: &[usize], size: usize) -> Outcome {
    let r = cayley_sum_census(orders, size)?;
    for g in &r.groups {
        let status = match &g.first_failure {
            _ if g.subsets == 0 => "no square-free subsets".to_string(),
            None => format!("all {} graphs connected and integral", g.subsets),
            Some(f) => format!(
                "{} subsets, {} disconnected, {} non-integral; first: {f}",
                g.subsets, g.disconnected, g.non_integral
            ),
        };
        outln!("{:<10} {status}", g.group);
    }
    outln!("survivors: {}", r.survivors.join(", "));
    outln!("integral only: {}", r.integral_only.join(", "));
    Ok(())
}

fn fixtures() -> Outcome {
    let outcomes = run_fixtures();
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    for o in &outcomes {
        let status = if o.passed { "pass" } else { "FAIL" };
        outln!("{status} {:<22} {}", o.id, o.anchor);
        for f in &o.failures {
            outln!("     {f}");
        }
    }
    outln!("{} of {} fixtures passed", outcomes.len() - failed, outcomes.len());
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure(1, format!("{failed} fixtures failed")))
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Group { command: GroupCommand::Info { expr } } => group_info(&expr),
        Command::Aut { expr, involutions, classes } => aut(&expr, involutions, classes),
        Command::Gcs { command: GcsCommand::Enumerate { expr, alpha, size } } => enumerate(&expr, &alpha, size),
        Command::Graph { command: GraphCommand::Build { subset: args, format } } => {
            let s = subset(&args)?;
            outln!("{}", export_graph(&build_gc_graph(&s)?, format));
            Ok(())
        }
        Command::Check(args) => check(&args),
        Command::Census { orders, kind, format, size, no_reduction, include_identity_alpha } => census(
            &orders,
            kind,
            format,
            CensusOptions { subset_size: size, use_conjugacy_reduction: !no_reduction, include_identity_alpha },
        ),
        Command::SumCensus { orders, size } => sum_census(&orders, size),
        Command::Fixtures { command: FixturesCommand::Run } => fixtures(),
        Command::Table1 => {
            out!("{}", reproduce_table1()?);
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors.
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
