use std::fmt::Display;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use cliffgroups::claims::{self, Tier};
use cliffgroups::matgrp::{closure, io, VectorAction};
use cliffgroups::permgrp::{abelian_invariants, fingerprint, PermGroup};
use cliffgroups::quantum::{mub_chain, named_generators, quadrangle_checks, AutOrder, PauliGraph};
use cliffgroups::structlab::{automorphism_group, construct, AutTier};
use cliffgroups::Limits;

#[derive(Parser)]
#[command(
    name = "cliffgroups",
    version,
    about = "Exact group theory for Pauli, Clifford and Bell gate groups"
)]
struct Cli {
    /// Capacity overrides, e.g. `enumeration=400000,iso_order=30000`
    /// (applied after CLIFFGROUPS_LIMITS).
    #[arg(long, global = true)]
    limits: Option<String>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Enumerate a gate group (p1, p2, p3, p2five, c1, c2, b2).
    Build {
        name: String,
        /// Write generators to FILE.
        #[arg(long)]
        export: Option<PathBuf>,
        /// Include every element in the export.
        #[arg(long, requires = "export")]
        elements: bool,
    },
    /// Structure report for a gate group name, a group spec or a generator file.
    Analyze {
        expr: String,
        /// Allow the larger automorphism tier.
        #[arg(long)]
        extended: bool,
    },
    /// Claims ledger.
    Claims {
        #[command(subcommand)]
        cmd: ClaimsCmd,
    },
    /// Pauli commutation graphs.
    Graph {
        #[command(subcommand)]
        cmd: GraphCmd,
    },
    /// Groups generated by growing prefixes of a maximum independent set.
    MubChain {
        #[arg(short)]
        n: usize,
        #[arg(long)]
        extended: bool,
    },
}

#[derive(Subcommand)]
enum ClaimsCmd {
    Run {
        #[arg(long, value_enum, default_value = "core")]
        suite: Suite,
        /// Ledger file; the built-in ledger when omitted.
        #[arg(long)]
        ledger: Option<PathBuf>,
        /// Write a JSON-lines report to FILE.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GraphCmd {
    Pauli {
        #[arg(short)]
        n: usize,
        /// Write Graphviz output to FILE.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Core,
    Long,
    Extended,
}

impl From<Suite> for Tier {
    fn from(s: Suite) -> Tier {
        match s {
            Suite::Core => Tier::Core,
            Suite::Long => Tier::Long,
            Suite::Extended => Tier::Extended,
        }
    }
}

fn limits(cli: &Cli) -> Result<Limits> {
    let mut l = Limits::from_env()?;
    if let Some(s) = &cli.limits {
        l.apply_overrides(s)?;
    }
    Ok(l)
}

fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn field<T: Display>(name: &str, v: cliffgroups::Result<T>) {
    match v {
        Ok(x) => println!("{name:<20}{x}"),
        Err(e) if e.is_inconclusive() => println!("{name:<20}inconclusive ({e})"),
        Err(e) => println!("{name:<20}error ({e})"),
    }
}

fn list<T: Display>(v: &[T]) -> String {
    format!(
        "[{}]",
        v.iter().map(T::to_string).collect::<Vec<_>>().join(", ")
    )
}

/// A gate group name, a file of generators, or a group spec.
fn resolve(expr: &str, l: &Limits) -> Result<PermGroup> {
    if let Ok(gens) = named_generators(expr) {
        return Ok(VectorAction::new(&gens, l.enumeration)?.perm_group(&gens)?);
    }
    let path = Path::new(expr);
    if path.is_file() {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {expr}"))?;
        let first = text
            .lines()
            .map(str::trim)
            .find(|s| !s.is_empty() && !s.starts_with('#'));
        if first.is_some_and(|s| s.starts_with("dim")) {
            let g = io::import(&text, l.closure_budget)?;
            return Ok(VectorAction::new(g.gens(), l.enumeration)?.perm_group(g.gens())?);
        }
        return Ok(PermGroup::parse_file(&text)?);
    }
    construct(expr).with_context(|| format!("{expr:?} is not a gate group, a file or a group spec"))
}

fn analyze(expr: &str, extended: bool, l: &Limits) -> Result<()> {
    let g = resolve(expr, l)?;
    println!("{:<20}{}", "group", expr);
    println!("{:<20}{}", "degree", g.degree());
    println!("{:<20}{}", "order", g.order());
    field("center order", g.center(l.enumeration).map(|z| z.order()));
    let d = g.derived_subgroup();
    println!("{:<20}{}", "derived order", d.order());
    println!("{:<20}{}", "perfect", d.order() == g.order());
    println!(
        "{:<20}{}",
        "derived series",
        list(&g.derived_series_orders())
    );
    field(
        "abelian invariants",
        abelian_invariants(&g, l).map(|v| list(&v)),
    );
    match fingerprint(&g, l) {
        Ok(f) => {
            println!("{:<20}{}", "classes", f.class_sizes.len());
            let h: Vec<String> = f
                .order_histogram
                .iter()
                .map(|(o, c)| format!("{o}:{c}"))
                .collect();
            println!("{:<20}{}", "element orders", h.join(" "));
        }
        Err(e) => field::<u8>("fingerprint", Err(e)),
    }
    let tier = if extended {
        AutTier::Extended
    } else {
        AutTier::Required
    };
    field(
        "aut order",
        automorphism_group(&g, l, tier).map(|a| a.order),
    );
    Ok(())
}

fn build(name: &str, export: Option<&Path>, elements: bool, l: &Limits) -> Result<()> {
    let gens = named_generators(name)?;
    let start = std::time::Instant::now();
    let g = closure(&gens, l.closure_budget)?;
    println!(
        "{name}: order {} (dimension {}, {:.2?})",
        g.order(),
        g.dim(),
        start.elapsed()
    );
    if let Some(p) = export {
        write(p, &io::export(&g, elements))?;
        println!("wrote {}", p.display());
    }
    Ok(())
}

fn graph(n: usize, dot: Option<&Path>) -> Result<()> {
    let pg = PauliGraph::new(n)?;
    let g = &pg.graph;
    let mut degrees: Vec<usize> = (0..g.len()).map(|v| g.degree(v)).collect();
    degrees.sort();
    degrees.dedup();
    println!(
        "vertices {}  edges {}  degrees {}",
        g.len(),
        g.edge_count(),
        list(&degrees)
    );
    let mis: Vec<&str> = g
        .max_independent_set()
        .iter()
        .map(|&v| pg.labels[v].as_str())
        .collect();
    println!("maximum independent set ({}): {}", mis.len(), mis.join(" "));
    if n == 2 {
        let r = quadrangle_checks(&pg)?;
        println!(
            "lines {}  graph automorphisms {}",
            r.lines.len(),
            r.automorphisms
        );
        println!(
            "complement of the independent set is Petersen: {}",
            r.petersen_map.is_some()
        );
        for f in &r.failures {
            println!("FAILED: {f}");
        }
    }
    if let Some(p) = dot {
        write(p, &pg.to_dot())?;
        println!("wrote {}", p.display());
    }
    Ok(())
}

fn chain(n: usize, extended: bool, l: &Limits) -> Result<()> {
    let tier = if extended {
        AutTier::Extended
    } else {
        AutTier::Required
    };
    let steps = mub_chain(n, l, tier)?;
    println!("{:<4}{:>8}  |Aut|", "g", "order");
    for s in &steps {
        let aut = match &s.aut {
            AutOrder::Known(o) => o.to_string(),
            AutOrder::Inconclusive(why) => format!("inconclusive ({why})"),
        };
        println!("g{:<3}{:>8}  {aut}", s.k, s.group.order());
    }
    Ok(())
}

fn run_claims(
    suite: Suite,
    ledger: Option<&Path>,
    report: Option<&Path>,
    l: &Limits,
) -> Result<ExitCode> {
    let text = match ledger {
        Some(p) => {
            std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?
        }
        None => claims::DEFAULT_LEDGER.to_string(),
    };
    let ledger = claims::parse_ledger(&text)?;
    let reports = claims::run_claims(&ledger, suite.into(), l);
    print!("{}", claims::report_table(&reports));
    if let Some(p) = report {
        let now = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map_or(0, |d| d.as_secs());
        write(p, &claims::report_jsonl(&reports, suite.into(), now))?;
    }
    Ok(ExitCode::from(claims::exit_code(&reports) as u8))
}

fn main() -> Result<ExitCode> {
    let cli = Cli::parse();
    let l = limits(&cli)?;
    match &cli.cmd {
        Cmd::Build {
            name,
            export,
            elements,
        } => build(name, export.as_deref(), *elements, &l)?,
        Cmd::Analyze { expr, extended } => analyze(expr, *extended, &l)?,
        Cmd::Claims {
            cmd:
                ClaimsCmd::Run {
                    suite,
                    ledger,
                    report,
                },
        } => {
            return run_claims(*suite, ledger.as_deref(), report.as_deref(), &l);
        }
        Cmd::Graph {
            cmd: GraphCmd::Pauli { n, dot },
        } => graph(*n, dot.as_deref())?,
        Cmd::MubChain { n, extended } => chain(*n, *extended, &l)?,
    }
    Ok(ExitCode::SUCCESS)
}
