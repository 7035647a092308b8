//! Command-line front end: group-file ingestion, lattice and chain
//! reports, theorem check suites, DOT/JSON export, and rational-function
//! verification scenarios.
//!
//! Exit codes: 0 all checks pass, 1 a verification failed, 2 usage or
//! input errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use kleinlat::blocks;
use kleinlat::chains::ritt_theorem_check;
use kleinlat::interval::{build_interval, dedekind_embedding, BuildStrategy, IntervalLattice};
use kleinlat::jh::{is_hamiltonian, jh_holds, transitive_hamiltonian_subgroup};
use kleinlat::perm::{
    close, format_group_file, parse_group_file, GroupTable, DEFAULT_ORDER_CAP,
};
use kleinlat::props::{find_dihedral_interval, structure_tag};
use kleinlat::ratfunc::scenario::run_scenario;

const SCHEMA: &str = "kleinlat.report/1";
const CAP_ENV: &str = "KLEINLAT_ORDER_CAP";

#[derive(Parser)]
#[command(name = "kleinlat", version, about = "Interval subgroup lattices and decomposition checks")]
struct Cli {
    /// Group order cap (default 20000; env KLEINLAT_ORDER_CAP overrides)
    #[arg(long, global = true)]
    cap: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Strategy {
    ViaBlocks,
    ViaEnumeration,
}

impl From<Strategy> for BuildStrategy {
    fn from(s: Strategy) -> BuildStrategy {
        match s {
            Strategy::ViaBlocks => BuildStrategy::ViaBlocks,
            Strategy::ViaEnumeration => BuildStrategy::ViaSubgroupEnumeration,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Property {
    LowerSemimodular,
    Semimodular,
    Modular,
    Ritt,
    Jh,
    Hamiltonian,
    TwoOrbit,
    Dedekind,
}

#[derive(Subcommand)]
enum Command {
    /// Basic facts about a group file
    GroupInfo { path: PathBuf },
    /// Interval lattice of the point stabilizer
    Lattice {
        path: PathBuf,
        #[arg(long, default_value_t = 1)]
        omega: usize,
        #[arg(long, value_enum, default_value_t = Strategy::ViaBlocks)]
        strategy: Strategy,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Verify a lattice/chain/group property with witnesses
    Check {
        #[arg(value_enum)]
        property: Property,
        path: PathBuf,
        #[arg(long, default_value_t = 1)]
        omega: usize,
        #[arg(long, value_enum, default_value_t = Strategy::ViaBlocks)]
        strategy: Strategy,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a VERIFY scenario of rational-function identities
    Ratfunc {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Emit the right-regular presentation of a group file
    Regularize {
        path: PathBuf,
        /// Output file (stdout when omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// Usage/input problem (exit 2), as opposed to a failed check (exit 1).
struct UsageError(String);

macro_rules! usage_from {
    ($($ty:ty),*) => {$(
        impl From<$ty> for UsageError {
            fn from(e: $ty) -> Self {
                UsageError(e.to_string())
            }
        }
    )*};
}

usage_from!(
    kleinlat::perm::PermError,
    kleinlat::blocks::BlockError,
    kleinlat::interval::IntervalError,
    kleinlat::props::PropsError,
    kleinlat::ratfunc::scenario::ScenarioError
);

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cap = cli
        .cap
        .or_else(|| {
            std::env::var(CAP_ENV)
                .ok()
                .and_then(|s| s.parse::<usize>().ok())
        })
        .unwrap_or(DEFAULT_ORDER_CAP);
    if cap == 0 {
        eprintln!("error: cap must be at least 1");
        return ExitCode::from(2);
    }
    match run(cli.command, cap) {
        Ok(true) => ExitCode::from(0),
        Ok(false) => ExitCode::from(1),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load_group(path: &PathBuf, cap: usize) -> Result<GroupTable, UsageError> {
    let text = fs::read_to_string(path)
        .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    let spec = parse_group_file(&text)?;
    Ok(close(&spec, cap)?)
}

fn run(command: Command, cap: usize) -> Result<bool, UsageError> {
    match command {
        Command::GroupInfo { path } => cmd_group_info(&path, cap),
        Command::Lattice {
            path,
            omega,
            strategy,
            format,
        } => cmd_lattice(&path, omega, strategy, format, cap),
        Command::Check {
            property,
            path,
            omega,
            strategy,
            format,
        } => cmd_check(property, &path, omega, strategy, format, cap),
        Command::Ratfunc { path, format } => cmd_ratfunc(&path, format),
        Command::Regularize { path, output } => cmd_regularize(&path, output, cap),
    }
}

/// The element of G whose cyclic group has the fewest orbits (ties to
/// the smallest element), with its orbit lengths.
fn best_cyclic_probe(g: &GroupTable) -> (Vec<usize>, String) {
    let mut best: Option<(usize, Vec<usize>, String)> = None;
    for p in g.elements() {
        let lengths: Vec<usize> = p.orbit_partition().iter().map(|o| o.len()).collect();
        if best.as_ref().is_none_or(|(n, _, _)| lengths.len() < *n) {
            best = Some((lengths.len(), lengths, p.format_cycles()));
        }
    }
    let (_, lengths, cycles) = best.expect("groups are nonempty");
    (lengths, cycles)
}

fn cmd_group_info(path: &PathBuf, cap: usize) -> Result<bool, UsageError> {
    let g = load_group(path, cap)?;
    let (orbit_lengths, probe) = best_cyclic_probe(&g);
    println!("degree: {}", g.degree());
    println!("order: {}", g.order());
    println!("transitive: {}", g.is_transitive());
    for gen in g.generators() {
        let lens: Vec<String> = gen
            .orbit_partition()
            .iter()
            .map(|o| o.len().to_string())
            .collect();
        println!(
            "generator {}: orbit lengths ({})",
            gen.format_cycles(),
            lens.join(", ")
        );
    }
    println!(
        "fewest-orbit element: {} with orbit lengths ({})",
        probe,
        orbit_lengths
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );
    println!(
        "cyclic subgroup with at most two orbits: {}",
        orbit_lengths.len() <= 2
    );
    if orbit_lengths.len() == 2 {
        println!(
            "two-orbit lengths differ: {}",
            orbit_lengths[0] != orbit_lengths[1]
        );
    }
    Ok(true)
}

fn lattice_json(interval: &IntervalLattice) -> Value {
    let lat = interval.lattice();
    json!({
        "schema": SCHEMA,
        "omega": interval.omega(),
        "node_count": interval.len(),
        "nodes": interval
            .nodes()
            .iter()
            .enumerate()
            .map(|(i, n)| json!({
                "index": i,
                "order": n.order(),
                "tag": structure_tag(n),
            }))
            .collect::<Vec<_>>(),
        "covers": lat.cover_pairs(),
        "bottom": lat.bottom(),
        "top": lat.top(),
        "modular": lat.is_modular(),
        "semimodular": lat.is_semimodular(),
        "lower_semimodular": lat.is_lower_semimodular(),
    })
}

fn cmd_lattice(
    path: &PathBuf,
    omega: usize,
    strategy: Strategy,
    format: Format,
    cap: usize,
) -> Result<bool, UsageError> {
    let g = load_group(path, cap)?;
    let interval = build_interval(&g, omega, strategy.into())?;
    match format {
        Format::Dot => print!("{}", interval.to_dot(structure_tag)),
        Format::Json => println!("{}", lattice_json(&interval)),
        Format::Text => {
            let lat = interval.lattice();
            println!("nodes: {}", interval.len());
            for (i, n) in interval.nodes().iter().enumerate() {
                println!("  n{i}: {} (order {})", structure_tag(n), n.order());
            }
            println!(
                "covers: {}",
                lat.cover_pairs()
                    .iter()
                    .map(|(a, b)| format!("n{a}<n{b}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            println!("modular: {}", lat.is_modular());
            println!("semimodular: {}", lat.is_semimodular());
            println!("lower semimodular: {}", lat.is_lower_semimodular());
        }
    }
    Ok(true)
}

fn chain_orders(interval: &IntervalLattice, chain: &[usize]) -> Vec<usize> {
    chain.iter().map(|&i| interval.node(i).order()).collect()
}

fn cmd_check(
    property: Property,
    path: &PathBuf,
    omega: usize,
    strategy: Strategy,
    format: Format,
    cap: usize,
) -> Result<bool, UsageError> {
    let g = load_group(path, cap)?;
    let interval = build_interval(&g, omega, strategy.into())?;
    let lat = interval.lattice();
    let mut detail = json!({});
    let pass = match property {
        Property::LowerSemimodular => lat.is_lower_semimodular(),
        Property::Semimodular => lat.is_semimodular(),
        Property::Modular => {
            let modular = lat.is_modular();
            if !modular {
                // produce and verify the dihedral interval witness
                let witness = find_dihedral_interval(&interval)?;
                match witness {
                    Some((a, b, w)) => {
                        detail = json!({
                            "dihedral_witness": {
                                "nodes": [a, b],
                                "m": w.m,
                                "kernel_order": w.normal_subgroup.order(),
                                "quotient_tag": structure_tag(&w.quotient),
                            }
                        });
                    }
                    None => {
                        detail = json!({ "dihedral_witness": Value::Null });
                    }
                }
            }
            modular
        }
        Property::Ritt => {
            let report = ritt_theorem_check(lat);
            detail = json!({
                "chain_count": report.chain_count,
                "length_histogram": report.length_histogram,
                "class_count": report.class_count,
                "class_sizes": report.class_sizes,
                "hypothesis_applies": report.hypothesis_applies,
                "counterexample": report.counterexample,
            });
            report.class_count == 1
        }
        Property::Jh => {
            let report = jh_holds(&interval);
            detail = json!({
                "chain_count": report.chain_count,
                "counterexample": report.counterexample.as_ref().map(|(c1, c2)| json!({
                    "chain1_orders": chain_orders(&interval, c1),
                    "chain2_orders": chain_orders(&interval, c2),
                })),
            });
            report.holds
        }
        Property::Hamiltonian => {
            let whole = is_hamiltonian(&g);
            let sub = transitive_hamiltonian_subgroup(&g);
            detail = json!({
                "group_hamiltonian": whole,
                "transitive_hamiltonian_subgroup_order": sub.as_ref().map(|s| s.order()),
            });
            sub.is_some()
        }
        Property::TwoOrbit => {
            let (lengths, probe) = best_cyclic_probe(&g);
            let found = lengths.len() <= 2;
            detail = json!({
                "element": probe,
                "orbit_lengths": lengths,
                "different_lengths": lengths.len() == 2 && lengths[0] != lengths[1],
            });
            found
        }
        Property::Dedekind => {
            let cyclic = g
                .elements()
                .iter()
                .find(|p| p.orbit_partition().len() == 1)
                .cloned();
            match cyclic {
                None => {
                    detail = json!({ "error": "no transitive cyclic subgroup" });
                    false
                }
                Some(c) => {
                    let sub = kleinlat::perm::generated_subgroup(&g, [c]);
                    match dedekind_embedding(&interval, &sub) {
                        Ok(emb) => {
                            detail = json!({
                                "modulus": emb.modulus,
                                "divisors": emb.image,
                                "modular": lat.is_modular(),
                            });
                            lat.is_modular()
                        }
                        Err(e) => {
                            detail = json!({ "error": e.to_string() });
                            false
                        }
                    }
                }
            }
        }
    };
    let block_system_count = blocks::all_block_systems(&g, omega)?.len();
    match format {
        Format::Json => println!(
            "{}",
            json!({
                "schema": SCHEMA,
                "property": format!("{property:?}"),
                "pass": pass,
                "node_count": interval.len(),
                "block_system_count": block_system_count,
                "detail": detail,
            })
        ),
        _ => {
            println!("property: {property:?}");
            println!("nodes: {}", interval.len());
            println!("detail: {detail}");
            println!("verdict: {}", if pass { "PASS" } else { "FAIL" });
        }
    }
    Ok(pass)
}

fn cmd_ratfunc(path: &PathBuf, format: Format) -> Result<bool, UsageError> {
    let text = fs::read_to_string(path)
        .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    let report = run_scenario(&text)?;
    match format {
        Format::Json => println!(
            "{}",
            json!({
                "schema": SCHEMA,
                "passed": report.passed,
                "failed": report.failed,
                "results": report.results,
            })
        ),
        _ => {
            for r in &report.results {
                let verdict = if r.pass { "PASS" } else { "FAIL" };
                match &r.mismatch {
                    None => println!("line {}: {verdict}  {}", r.line, r.text),
                    Some((side, power, got, want)) => println!(
                        "line {}: {verdict}  {}  (first mismatch: {side} z^{power}: {got} vs {want})",
                        r.line, r.text
                    ),
                }
            }
            println!("passed {} / {}", report.passed, report.results.len());
        }
    }
    Ok(report.all_passed())
}

fn cmd_regularize(
    path: &PathBuf,
    output: Option<PathBuf>,
    cap: usize,
) -> Result<bool, UsageError> {
    let g = load_group(path, cap)?;
    let spec = g.regular_representation();
    let text = format_group_file(&spec);
    match output {
        None => print!("{text}"),
        Some(out) => fs::write(&out, text)
            .map_err(|e| UsageError(format!("{}: {e}", out.display())))?,
    }
    Ok(true)
}
