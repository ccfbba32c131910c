//! Command-line front end: parses weights and partitions, dispatches the
//! library computations, and emits JSON tables, text summaries or DOT
//! diagrams.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use ola_core::error::Error;
use ola_core::kl::{KlTable, PermWord};
use ola_core::olamult::{
    injective_standard_flag, la_dual_decomposition, parabolic_verma_multiplicity,
    socle_layers_tensor_injective, standard_psi_layer, standard_simple_multiplicity_at_rank,
    PartitionTuple,
};
use ola_core::order::{block_class, interval, leq_order, triangle_down, EdgeKind};
use ola_core::weights::{parse_weight, EligibleWeight, Half};
use ola_core::{kl, lr_coefficient, oracle, Partition};

#[derive(Parser)]
#[command(
    name = "ola",
    about = "Multiplicity tables for a highest weight category of gl(∞)-modules",
    version
)]
struct Cli {
    /// Number of blocks n of the Levi subalgebra.
    #[arg(long, global = true, default_value_t = 1)]
    n: u32,
    /// Truncation rank override; may only raise the automatic rank.
    #[arg(long, global = true)]
    rank: Option<i64>,
    /// Output format.
    #[arg(long, global = true, value_parser = ["json", "text", "dot"], default_value = "json")]
    format: String,
    /// Cap on the symmetric-group degree used by the KL recursion.
    #[arg(long, global = true, default_value_t = kl::DEFAULT_KL_BOUND)]
    kl_bound: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Simple multiplicities of standard and Verma-type modules.
    Mult {
        #[command(subcommand)]
        which: MultCommand,
    },
    /// Filtration tables: standard flags of injectives, ψ-layer flags.
    Flag {
        #[command(subcommand)]
        which: FlagCommand,
    },
    /// Socle filtration layers of a tensor injective I(λ, μ).
    Socle(TuplePairArgs),
    /// Decomposition of the large-annihilator dual of I(λ, μ).
    Ladual(TuplePairArgs),
    /// The interval-finite order: comparisons, intervals, Hasse diagrams.
    Order {
        #[command(subcommand)]
        which: OrderCommand,
    },
    /// Block classification of a weight.
    Block {
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// A Kazhdan-Lusztig polynomial P_{x,w}.
    Kl {
        #[arg(long)]
        x: String,
        #[arg(long)]
        w: String,
    },
    /// A Littlewood-Richardson coefficient c^ν_{λμ}.
    Lr {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
    },
    /// Run every oracle-overlap suite.
    Certify,
}

#[derive(Subcommand)]
enum MultCommand {
    /// [A(λ) : L(μ)], the standard-module simple multiplicity.
    Standard(WeightPairArgs),
    /// m(λ, μ), the Verma multiplicity of the finite factor.
    Verma(WeightPairArgs),
    /// [M_r(λ) : L(μ)] for the rank-r parabolic Verma module.
    Parabolic(WeightPairArgs),
}

#[derive(Subcommand)]
enum FlagCommand {
    /// Standard filtration multiplicities of the injective envelope I(λ).
    Injective {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Dual-Verma flag of one ψ-filtration layer of the standard module.
    Psi {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// ψ-degree of the layer; integers or halves like "-3/2".
        #[arg(long, allow_hyphen_values = true)]
        degree: String,
    },
}

#[derive(Subcommand)]
enum OrderCommand {
    /// Is lower ≤ upper in the interval-finite order?
    Check(BoundsArgs),
    /// All weights between lower and upper.
    Interval(BoundsArgs),
    /// The Hasse diagram of the interval, optionally as DOT.
    Hasse {
        #[command(flatten)]
        bounds: BoundsArgs,
        /// Emit DOT even when the format is json.
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Args)]
struct WeightPairArgs {
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    #[arg(long, allow_hyphen_values = true)]
    mu: String,
}

#[derive(Args)]
struct TuplePairArgs {
    #[arg(long)]
    lambda: String,
    #[arg(long)]
    mu: String,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long, allow_hyphen_values = true)]
    lower: String,
    #[arg(long, allow_hyphen_values = true)]
    upper: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(output) => {
            println!("{output}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::Resource { .. } | Error::Overflow(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

/// Effective truncation rank: the automatic rank raised by --rank.
fn effective_rank(auto: i64, user: Option<i64>) -> i64 {
    user.map_or(auto, |r| r.max(auto))
}

fn run(cli: &Cli) -> Result<String, Error> {
    let n = cli.n;
    if n == 0 {
        return Err(Error::Domain("block count must be at least 1".into()));
    }
    match &cli.command {
        Command::Mult { which } => match which {
            MultCommand::Standard(args) => {
                let lambda = parse_weight(&args.lambda, n)?;
                let mu = parse_weight(&args.mu, n)?;
                let auto = lambda.eligibility_rank().max(mu.eligibility_rank()) + 1;
                let rank = effective_rank(auto, cli.rank);
                let m = standard_simple_multiplicity_at_rank(&lambda, &mu, rank)?;
                let stabilized = standard_simple_multiplicity_at_rank(&lambda, &mu, rank + 1)
                    .is_ok_and(|m2| m2 == m);
                emit(
                    cli,
                    json!({"op": "mult standard", "lambda": lambda.render(), "mu": mu.render()}),
                    Some(rank),
                    stabilized,
                    json!({"multiplicity": m}),
                    format!("multiplicity: {m}"),
                )
            }
            MultCommand::Verma(args) => {
                let lambda = parse_weight(&args.lambda, n)?;
                let mu = parse_weight(&args.mu, n)?;
                let auto = lambda.eligibility_rank().max(mu.eligibility_rank()) + 1;
                let rank = effective_rank(auto, cli.rank);
                let m = kl::verma_multiplicity_at_rank(&lambda, &mu, rank, cli.kl_bound)?;
                let stabilized =
                    kl::verma_multiplicity_at_rank(&lambda, &mu, rank + 1, cli.kl_bound)
                        .is_ok_and(|m2| m2 == m);
                emit(
                    cli,
                    json!({"op": "mult verma", "lambda": lambda.render(), "mu": mu.render()}),
                    Some(rank),
                    stabilized,
                    json!({"multiplicity": m}),
                    format!("multiplicity: {m}"),
                )
            }
            MultCommand::Parabolic(args) => {
                let lambda = parse_weight(&args.lambda, n)?;
                let mu = parse_weight(&args.mu, n)?;
                let rank = cli.rank.ok_or_else(|| {
                    Error::Domain("mult parabolic requires an explicit --rank".into())
                })?;
                let m = parabolic_verma_multiplicity(&lambda, &mu, rank)?;
                emit(
                    cli,
                    json!({"op": "mult parabolic", "lambda": lambda.render(), "mu": mu.render()}),
                    Some(rank),
                    true,
                    json!({"multiplicity": m}),
                    format!("multiplicity: {m}"),
                )
            }
        },
        Command::Flag { which } => match which {
            FlagCommand::Injective { lambda } => {
                let lambda = parse_weight(lambda, n)?;
                let table = injective_standard_flag(&lambda)?;
                let entries: Vec<Value> = table
                    .entries
                    .iter()
                    .map(|(mu, m)| json!({"mu": mu.render(), "multiplicity": m}))
                    .collect();
                let mut text = String::new();
                for (mu, m) in &table.entries {
                    text.push_str(&format!("{}  x{}\n", mu.render(), m));
                }
                emit(
                    cli,
                    json!({"op": "flag injective", "lambda": lambda.render()}),
                    Some(table.rank_used),
                    table.stabilized,
                    json!({"base": table.base.render(), "entries": entries}),
                    text.trim_end().to_string(),
                )
            }
            FlagCommand::Psi { lambda, degree } => {
                let lambda = parse_weight(lambda, n)?;
                let p: Half = degree.parse()?;
                let auto = lambda.eligibility_rank() + 1;
                let rank = effective_rank(auto, cli.rank);
                let mut layers = standard_psi_layer(&lambda, p, rank)?;
                layers.sort_by(|a, b| a.weight.cmp(&b.weight));
                let stabilized = match standard_psi_layer(&lambda, p, rank + 1) {
                    Ok(bigger) => {
                        let restricted: Vec<_> = bigger
                            .into_iter()
                            .filter(|l| l.weight.is_r_eligible(rank))
                            .collect();
                        restricted.len() == layers.len()
                            && layers.iter().all(|l| {
                                restricted.iter().any(|r| {
                                    r.weight == l.weight && r.multiplicity == l.multiplicity
                                })
                            })
                    }
                    Err(_) => false,
                };
                let entries: Vec<Value> = layers
                    .iter()
                    .map(|l| {
                        json!({
                            "weight": l.weight.render(),
                            "multiplicity": l.multiplicity,
                            "psi_degree": l.psi_degree.to_string(),
                        })
                    })
                    .collect();
                let mut text = String::new();
                for l in &layers {
                    text.push_str(&format!("{}  x{}\n", l.weight.render(), l.multiplicity));
                }
                emit(
                    cli,
                    json!({"op": "flag psi", "lambda": lambda.render(), "degree": p.to_string()}),
                    Some(rank),
                    stabilized,
                    json!({"layers": entries}),
                    text.trim_end().to_string(),
                )
            }
        },
        Command::Socle(args) => {
            let lambda = PartitionTuple::parse(&args.lambda, n as usize)?;
            let mu = PartitionTuple::parse(&args.mu, n as usize)?;
            let layers = socle_layers_tensor_injective(&lambda, &mu)?;
            let rendered: Vec<Value> = layers
                .iter()
                .map(|(idx, table)| {
                    let entries: Vec<Value> = table
                        .iter()
                        .map(|((a, b), c)| {
                            json!({"lambda": a.render(), "mu": b.render(), "multiplicity": c})
                        })
                        .collect();
                    json!({"layer": idx, "entries": entries})
                })
                .collect();
            let mut text = String::new();
            for (idx, table) in &layers {
                text.push_str(&format!("layer {idx}:\n"));
                for ((a, b), c) in table {
                    text.push_str(&format!("  ({}, {})  x{}\n", a.render(), b.render(), c));
                }
            }
            emit(
                cli,
                json!({"op": "socle", "lambda": lambda.render(), "mu": mu.render()}),
                None,
                true,
                json!({"layers": rendered}),
                text.trim_end().to_string(),
            )
        }
        Command::Ladual(args) => {
            let lambda = PartitionTuple::parse(&args.lambda, n as usize)?;
            let mu = PartitionTuple::parse(&args.mu, n as usize)?;
            let table = la_dual_decomposition(&lambda, &mu)?;
            let entries: Vec<Value> = table
                .iter()
                .map(|((a, b), c)| {
                    json!({"alpha": a.render(), "beta": b.render(), "multiplicity": c})
                })
                .collect();
            let mut text = String::new();
            for ((a, b), c) in &table {
                text.push_str(&format!("I({}, {})  x{}\n", a.render(), b.render(), c));
            }
            emit(
                cli,
                json!({"op": "ladual", "lambda": lambda.render(), "mu": mu.render()}),
                None,
                true,
                json!({"entries": entries}),
                text.trim_end().to_string(),
            )
        }
        Command::Order { which } => match which {
            OrderCommand::Check(bounds) => {
                let lower = parse_weight(&bounds.lower, n)?;
                let upper = parse_weight(&bounds.upper, n)?;
                let related = leq_order(&lower, &upper)?;
                let rank = lower.eligibility_rank().max(upper.eligibility_rank()) + 1;
                emit(
                    cli,
                    json!({"op": "order check", "lower": lower.render(), "upper": upper.render()}),
                    Some(rank),
                    true,
                    json!({"related": related}),
                    format!("related: {related}"),
                )
            }
            OrderCommand::Interval(bounds) => {
                let lower = parse_weight(&bounds.lower, n)?;
                let upper = parse_weight(&bounds.upper, n)?;
                let members = interval(&lower, &upper)?;
                let rank = lower.eligibility_rank().max(upper.eligibility_rank()) + 1;
                let rendered: Vec<String> = members.iter().map(|w| w.render()).collect();
                emit(
                    cli,
                    json!({"op": "order interval", "lower": lower.render(), "upper": upper.render()}),
                    Some(rank),
                    true,
                    json!({"members": rendered}),
                    rendered.join("\n"),
                )
            }
            OrderCommand::Hasse { bounds, dot } => {
                let lower = parse_weight(&bounds.lower, n)?;
                let upper = parse_weight(&bounds.upper, n)?;
                let rank = lower.eligibility_rank().max(upper.eligibility_rank()) + 1;
                let (nodes, edges) = hasse_diagram(&lower, &upper)?;
                if *dot || cli.format == "dot" {
                    return Ok(render_dot(&nodes, &edges));
                }
                let edge_values: Vec<Value> = edges
                    .iter()
                    .map(|(lo, up, kind)| {
                        json!({"lower": lo.render(), "upper": up.render(), "kind": kind_name(*kind)})
                    })
                    .collect();
                let node_values: Vec<String> = nodes.iter().map(|w| w.render()).collect();
                let mut text = String::new();
                for (lo, up, kind) in &edges {
                    text.push_str(&format!(
                        "{} -> {} [{}]\n",
                        lo.render(),
                        up.render(),
                        kind_name(*kind)
                    ));
                }
                emit(
                    cli,
                    json!({"op": "order hasse", "lower": lower.render(), "upper": upper.render()}),
                    Some(rank),
                    true,
                    json!({"nodes": node_values, "edges": edge_values}),
                    text.trim_end().to_string(),
                )
            }
        },
        Command::Block { weight } => {
            let w = parse_weight(weight, n)?;
            let (level, total) = block_class(&w);
            let tag = format!(
                "level=({});finite-sum={}",
                level
                    .iter()
                    .map(|a| a.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
                total
            );
            emit(
                cli,
                json!({"op": "block", "weight": w.render()}),
                None,
                true,
                json!({"level": level, "finite_total": total, "tag": tag}),
                format!("block: {tag}"),
            )
        }
        Command::Kl { x, w } => {
            let x: PermWord = x.parse()?;
            let w: PermWord = w.parse()?;
            let mut table = KlTable::new(cli.kl_bound);
            let p = table.polynomial(&x, &w)?;
            emit(
                cli,
                json!({"op": "kl", "x": x.to_string(), "w": w.to_string()}),
                None,
                true,
                json!({"polynomial": p.to_string(), "coeffs": p.coeffs()}),
                format!("P = {p}"),
            )
        }
        Command::Lr { lambda, mu, nu } => {
            let lambda: Partition = lambda.parse()?;
            let mu: Partition = mu.parse()?;
            let nu: Partition = nu.parse()?;
            let c = lr_coefficient(&lambda, &mu, &nu);
            emit(
                cli,
                json!({"op": "lr", "lambda": lambda.to_string(), "mu": mu.to_string(), "nu": nu.to_string()}),
                None,
                true,
                json!({"coefficient": c}),
                format!("coefficient: {c}"),
            )
        }
        Command::Certify => {
            let reports = oracle::certify()?;
            let passed = reports.iter().all(|r| r.passed());
            let rendered: Vec<Value> = reports
                .iter()
                .map(|r| json!({"name": r.name, "cases": r.cases, "mismatches": r.mismatches}))
                .collect();
            let mut text = String::new();
            for r in &reports {
                text.push_str(&format!(
                    "{}: {} cases, {} mismatches\n",
                    r.name, r.cases, r.mismatches
                ));
            }
            let out = emit(
                cli,
                json!({"op": "certify"}),
                None,
                true,
                json!({"suites": rendered, "passed": passed}),
                text.trim_end().to_string(),
            )?;
            if !passed {
                eprintln!("{out}");
                return Err(Error::Domain("oracle certification failed".into()));
            }
            Ok(out)
        }
    }
}

fn kind_name(kind: EdgeKind) -> &'static str {
    match kind {
        EdgeKind::DotReflection => "dot-reflection",
        EdgeKind::PsiNegativeRoot => "psi-negative-root",
    }
}

/// Interval members plus the covering edges among them, each labelled by
/// the one-step kind that realizes the cover.
#[allow(clippy::type_complexity)]
fn hasse_diagram(
    lower: &EligibleWeight,
    upper: &EligibleWeight,
) -> Result<(Vec<EligibleWeight>, Vec<(EligibleWeight, EligibleWeight, EdgeKind)>), Error> {
    let members = interval(lower, upper)?;
    let rank = lower.eligibility_rank().max(upper.eligibility_rank()) + 1;
    let mut edges = Vec::new();
    for up in &members {
        // one-step lowers of `up` that land inside the interval
        let mut steps: Vec<(EligibleWeight, EdgeKind)> = Vec::new();
        for edge in triangle_down(up, rank.max(up.eligibility_rank())).unwrap_or_default() {
            if members.contains(&edge.lower) {
                steps.push((edge.lower, edge.kind));
            }
        }
        for (lo, kind) in steps {
            if lo == *up {
                continue;
            }
            // keep covers only: no interval member strictly between
            let mut is_cover = true;
            for mid in &members {
                if mid == &lo || mid == up {
                    continue;
                }
                if leq_order(&lo, mid)? && leq_order(mid, up)? {
                    is_cover = false;
                    break;
                }
            }
            if is_cover && !edges.iter().any(|(a, b, _)| a == &lo && b == up) {
                edges.push((lo, up.clone(), kind));
            }
        }
    }
    Ok((members, edges))
}

fn render_dot(
    nodes: &[EligibleWeight],
    edges: &[(EligibleWeight, EligibleWeight, EdgeKind)],
) -> String {
    let mut out = String::from("digraph interval {\n  rankdir=BT;\n");
    for (i, node) in nodes.iter().enumerate() {
        out.push_str(&format!("  n{} [label=\"{}\"];\n", i, node.render()));
    }
    let index = |w: &EligibleWeight| nodes.iter().position(|x| x == w).unwrap();
    for (lo, up, kind) in edges {
        out.push_str(&format!(
            "  n{} -> n{} [label=\"{}\"];\n",
            index(lo),
            index(up),
            kind_name(*kind)
        ));
    }
    out.push('}');
    out
}

fn emit(
    cli: &Cli,
    query: Value,
    rank_used: Option<i64>,
    stabilized: bool,
    result: Value,
    text: String,
) -> Result<String, Error> {
    match cli.format.as_str() {
        "json" => {
            let doc = json!({
                "query": query,
                "n": cli.n,
                "rank_used": rank_used,
                "stabilized": stabilized,
                "result": result,
            });
            Ok(serde_json::to_string(&doc).expect("trees of plain values"))
        }
        _ => Ok(text),
    }
}
