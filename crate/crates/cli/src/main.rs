//! `hexohm` — exact resistance distances, Kirchhoff indices, circuit
//! reduction and verification sweeps for hexagonal chain networks.
//!
//! Exit codes: 0 success, 1 verification/reduction failure, 2 usage or
//! input errors.

use std::fmt::Display;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hexohm::chains::{
    asymptotic_limits, build_chain, extremal_pairs, ChainKind, VertexLabel,
};
use hexohm::oracle;
use hexohm::quad::{f64_to_sig_string, QuadNum};
use hexohm::reduce::{reduce_to_terminals, ReductionTrace};
use hexohm::ResistorNetwork;

#[derive(Parser)]
#[command(
    name = "hexohm",
    version,
    about = "Exact resistance distances and Kirchhoff indices for hexagonal chains",
    after_help = "Vertex labels use family:index syntax (p:0, q:3, u:1, v:2).\n\
                  Linear chains index rungs 0..=n and interiors 0..n; cylinder\n\
                  chains index everything 1..=n."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Resistance between two labelled chain vertices
    Resist(ResistArgs),
    /// Kirchhoff index of a chain
    Kf(KfArgs),
    /// Full pair-resistance table (CSV or JSON)
    Table(TableArgs),
    /// Extremal (maximum and minimum) resistance pairs of a chain
    Extremal(ExtremalArgs),
    /// Reduce a network file to 2 or 3 terminals, emitting a step trace
    Reduce(ReduceArgs),
    /// Formula-vs-oracle verification sweep
    Verify(VerifyArgs),
    /// Asymptotic constants of a chain family
    Limits(LimitsArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ChainArg {
    Linear,
    Cylinder,
}

#[derive(Clone, Copy, ValueEnum)]
enum ChainSetArg {
    Linear,
    Cylinder,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    /// Closed-form evaluation in ℚ(√2)
    Formula,
    /// Laplacian-pseudoinverse solve
    Oracle,
    /// Series/parallel/Δ-Y circuit reduction
    Reduction,
}

impl MethodArg {
    fn name(self) -> &'static str {
        match self {
            MethodArg::Formula => "formula",
            MethodArg::Oracle => "oracle",
            MethodArg::Reduction => "reduction",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

fn parse_label(s: &str) -> Result<VertexLabel, String> {
    s.parse().map_err(|e: hexohm::chains::ChainError| e.to_string())
}

#[derive(Args)]
struct ResistArgs {
    #[arg(long, value_enum)]
    chain: ChainArg,
    #[arg(long)]
    n: usize,
    /// First vertex label, e.g. p:1
    #[arg(long, value_parser = parse_label)]
    a: VertexLabel,
    /// Second vertex label, e.g. q:1
    #[arg(long, value_parser = parse_label)]
    b: VertexLabel,
    /// Print only the exact value in the textual ℚ(√2) grammar
    #[arg(long)]
    exact: bool,
    /// Significant digits for decimal output
    #[arg(long, default_value_t = 12)]
    digits: u32,
    #[arg(long, value_enum, default_value_t = MethodArg::Formula)]
    method: MethodArg,
    /// Cross-check the value against the oracle and report the delta
    #[arg(long)]
    check: bool,
    /// Emit the report as JSON
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct KfArgs {
    #[arg(long, value_enum)]
    chain: ChainArg,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    exact: bool,
    #[arg(long, default_value_t = 12)]
    digits: u32,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, value_enum)]
    chain: ChainArg,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    format: TableFormat,
    #[arg(long, default_value_t = 12)]
    digits: u32,
}

#[derive(Args)]
struct ExtremalArgs {
    #[arg(long, value_enum)]
    chain: ChainArg,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 12)]
    digits: u32,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ReduceArgs {
    /// Network file (line format: `vertices N`, `name I S`, `edge U V R`)
    #[arg(long)]
    input: std::path::PathBuf,
    /// Comma-separated terminals: vertex indices or vertex names
    #[arg(long)]
    terminals: String,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = ChainSetArg::Both)]
    chain: ChainSetArg,
    #[arg(long, default_value_t = 6)]
    n_max: usize,
    /// Maximum tolerated |formula − oracle| per pair
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
}

#[derive(Args)]
struct LimitsArgs {
    #[arg(long, value_enum)]
    chain: ChainArg,
    #[arg(long, default_value_t = 12)]
    digits: u32,
    #[arg(long)]
    json: bool,
}

/// Failures carrying their process exit code.
enum CliError {
    /// Bad labels, ranges, files: exit 2.
    Usage(String),
    /// A requested computation failed (verification over tolerance,
    /// reduction stuck): exit 1.
    Failed(String),
}

impl CliError {
    fn usage(e: impl Display) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Resist(args) => cmd_resist(args),
        Command::Kf(args) => cmd_kf(args),
        Command::Table(args) => cmd_table(args),
        Command::Extremal(args) => cmd_extremal(args),
        Command::Reduce(args) => cmd_reduce(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Limits(args) => cmd_limits(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Failed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn make_kind(chain: ChainArg, n: usize) -> Result<ChainKind, CliError> {
    match chain {
        ChainArg::Linear => ChainKind::linear(n),
        ChainArg::Cylinder => ChainKind::cylinder(n),
    }
    .map_err(CliError::usage)
}

#[derive(Serialize)]
struct ResistanceReport {
    chain: &'static str,
    n: usize,
    a: String,
    b: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    exact: Option<String>,
    decimal: String,
    method: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    delta: Option<f64>,
}

fn cmd_resist(args: ResistArgs) -> Result<(), CliError> {
    let kind = make_kind(args.chain, args.n)?;
    let method = args.method;

    // Exact value where the method provides one, decimal always.
    let (exact, value): (Option<QuadNum>, f64) = match method {
        MethodArg::Formula => {
            let r = kind.resistance(args.a, args.b).map_err(CliError::usage)?;
            (Some(r.clone()), r.to_f64())
        }
        MethodArg::Oracle => {
            let net = build_chain(kind);
            let ia = kind.vertex_index(args.a).map_err(CliError::usage)?;
            let ib = kind.vertex_index(args.b).map_err(CliError::usage)?;
            let r = oracle::effective_resistance(&net, ia, ib).map_err(CliError::usage)?;
            (None, r)
        }
        MethodArg::Reduction => {
            let net = build_chain(kind);
            let ia = kind.vertex_index(args.a).map_err(CliError::usage)?;
            let ib = kind.vertex_index(args.b).map_err(CliError::usage)?;
            if ia == ib {
                (Some(QuadNum::zero()), 0.0)
            } else {
                match hexohm::reduce::two_terminal_resistance(&net, ia, ib)
                    .map_err(CliError::usage)?
                {
                    hexohm::reduce::TwoTerminalResistance::Exact(r) => {
                        let f = r.to_f64();
                        (Some(r), f)
                    }
                    hexohm::reduce::TwoTerminalResistance::Stuck(_) => {
                        return Err(CliError::Failed(format!(
                            "reduction got stuck on {} n={} between {} and {}",
                            kind.kind_name(),
                            kind.n(),
                            args.a,
                            args.b
                        )));
                    }
                }
            }
        }
    };

    let delta = if args.check && !matches!(method, MethodArg::Oracle) {
        let net = build_chain(kind);
        let ia = kind.vertex_index(args.a).map_err(CliError::usage)?;
        let ib = kind.vertex_index(args.b).map_err(CliError::usage)?;
        let reference = oracle::effective_resistance(&net, ia, ib).map_err(CliError::usage)?;
        Some((value - reference).abs())
    } else {
        None
    };

    let decimal = match &exact {
        Some(r) => r.decimal(args.digits),
        None => f64_to_sig_string(value, args.digits),
    };

    if args.exact {
        match &exact {
            Some(r) => println!("{r}"),
            None => {
                return Err(CliError::Usage(
                    "the oracle method has no exact value; drop --exact or use --method formula"
                        .into(),
                ))
            }
        }
        return Ok(());
    }

    let report = ResistanceReport {
        chain: kind.kind_name(),
        n: kind.n(),
        a: args.a.to_string(),
        b: args.b.to_string(),
        exact: exact.as_ref().map(QuadNum::to_string),
        decimal,
        method: method.name(),
        delta,
    };
    if args.json {
        println!("{}", serde_json::to_string(&report).expect("report serializes"));
    } else {
        print!(
            "r({}, {}) on {} n={} = {}",
            report.a, report.b, report.chain, report.n, report.decimal
        );
        if let Some(e) = &report.exact {
            print!("  [{e}]");
        }
        print!("  ({})", report.method);
        if let Some(d) = report.delta {
            print!("  |Δ vs oracle| = {d:.3e}");
        }
        println!();
    }
    Ok(())
}

fn cmd_kf(args: KfArgs) -> Result<(), CliError> {
    let kind = make_kind(args.chain, args.n)?;
    let kf = kind.kirchhoff();
    if args.exact {
        println!("{kf}");
    } else if args.json {
        println!(
            "{}",
            serde_json::json!({
                "chain": kind.kind_name(),
                "n": kind.n(),
                "exact": kf.to_string(),
                "decimal": kf.decimal(args.digits),
            })
        );
    } else {
        println!("{}", kf.decimal(args.digits));
    }
    Ok(())
}

fn cmd_table(args: TableArgs) -> Result<(), CliError> {
    let kind = make_kind(args.chain, args.n)?;
    let labels = kind.labels();
    match args.format {
        TableFormat::Csv => {
            let header: Vec<String> = labels.iter().map(ToString::to_string).collect();
            println!(",{}", header.join(","));
            for a in &labels {
                let mut row = vec![a.to_string()];
                for b in &labels {
                    let r = kind.resistance(*a, *b).map_err(CliError::usage)?;
                    row.push(r.decimal(args.digits));
                }
                println!("{}", row.join(","));
            }
        }
        TableFormat::Json => {
            let mut reports = Vec::new();
            for (i, a) in labels.iter().enumerate() {
                for b in labels.iter().skip(i + 1) {
                    let r = kind.resistance(*a, *b).map_err(CliError::usage)?;
                    reports.push(ResistanceReport {
                        chain: kind.kind_name(),
                        n: kind.n(),
                        a: a.to_string(),
                        b: b.to_string(),
                        decimal: r.decimal(args.digits),
                        exact: Some(r.to_string()),
                        method: "formula",
                        delta: None,
                    });
                }
            }
            println!("{}", serde_json::to_string(&reports).expect("reports serialize"));
        }
    }
    Ok(())
}

fn cmd_extremal(args: ExtremalArgs) -> Result<(), CliError> {
    let kind = make_kind(args.chain, args.n)?;
    let ex = extremal_pairs(kind);
    if args.json {
        println!(
            "{}",
            serde_json::json!({
                "chain": kind.kind_name(),
                "n": kind.n(),
                "max": {
                    "pair": [ex.max_pair.0.to_string(), ex.max_pair.1.to_string()],
                    "exact": ex.max_value.to_string(),
                    "decimal": ex.max_value.decimal(args.digits),
                },
                "min": {
                    "pair": [ex.min_pair.0.to_string(), ex.min_pair.1.to_string()],
                    "exact": ex.min_value.to_string(),
                    "decimal": ex.min_value.decimal(args.digits),
                },
            })
        );
    } else {
        println!(
            "max  ({}, {})  = {}  [{}]",
            ex.max_pair.0,
            ex.max_pair.1,
            ex.max_value.decimal(args.digits),
            ex.max_value
        );
        println!(
            "min  ({}, {})  = {}  [{}]",
            ex.min_pair.0,
            ex.min_pair.1,
            ex.min_value.decimal(args.digits),
            ex.min_value
        );
    }
    Ok(())
}

fn parse_terminals(net: &ResistorNetwork, list: &str) -> Result<Vec<usize>, CliError> {
    let mut out = Vec::new();
    for token in list.split(',') {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        if let Ok(idx) = token.parse::<usize>() {
            out.push(idx);
            continue;
        }
        // Accept vertex names as written in the file, and label syntax
        // (p:3) as an alias for the generated name p_3.
        let as_name = net.vertex_by_name(token).or_else(|| {
            token
                .parse::<VertexLabel>()
                .ok()
                .and_then(|l| net.vertex_by_name(&l.vertex_name()))
        });
        match as_name {
            Some(idx) => out.push(idx),
            None => {
                return Err(CliError::Usage(format!(
                    "terminal `{token}` is neither an index nor a vertex name"
                )))
            }
        }
    }
    Ok(out)
}

fn cmd_reduce(args: ReduceArgs) -> Result<(), CliError> {
    let text = std::fs::read_to_string(&args.input)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", args.input.display())))?;
    let net = ResistorNetwork::parse(&text).map_err(CliError::usage)?;
    let terminals = parse_terminals(&net, &args.terminals)?;
    let trace = reduce_to_terminals(&net, &terminals).map_err(CliError::usage)?;

    // One step object per line, then a result line.
    let steps = trace.steps_to_json_lines();
    if !steps.is_empty() {
        println!("{steps}");
    }
    println!(
        "{}",
        serde_json::json!({
            "result": {
                "stuck": trace.stuck,
                "terminals": trace.terminals,
                "vertices": trace.final_net.vertices,
                "edges": trace.final_net.edges,
            }
        })
    );
    summarize_reduction(&trace);
    Ok(())
}

fn summarize_reduction(trace: &ReductionTrace) {
    if trace.stuck {
        eprintln!(
            "stuck after {} steps with {} vertices left",
            trace.steps.len(),
            trace.final_net.vertices.len()
        );
    } else if trace.terminals.len() == 2 && trace.final_net.edges.len() == 1 {
        let r = &trace.final_net.edges[0].resistance;
        eprintln!(
            "reduced in {} steps: r({}, {}) = {} ≈ {}",
            trace.steps.len(),
            trace.terminals[0],
            trace.terminals[1],
            r,
            r.decimal(12)
        );
    } else {
        eprintln!(
            "reduced in {} steps to {} terminal vertices",
            trace.steps.len(),
            trace.final_net.vertices.len()
        );
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<(), CliError> {
    let kinds: Vec<ChainKind> = {
        let mut v = Vec::new();
        let (linear, cylinder) = match args.chain {
            ChainSetArg::Linear => (true, false),
            ChainSetArg::Cylinder => (false, true),
            ChainSetArg::Both => (true, true),
        };
        if linear {
            if args.n_max < 1 {
                return Err(CliError::Usage("linear sweep needs --n-max ≥ 1".into()));
            }
            v.extend((1..=args.n_max).map(|n| ChainKind::linear(n).unwrap()));
        }
        if cylinder {
            if args.n_max < 3 {
                return Err(CliError::Usage("cylinder sweep needs --n-max ≥ 3".into()));
            }
            v.extend((3..=args.n_max).map(|n| ChainKind::cylinder(n).unwrap()));
        }
        v
    };

    let mut worst: f64 = 0.0;
    for kind in kinds {
        let net = build_chain(kind);
        let matrix = oracle::resistance_matrix(&net).map_err(CliError::usage)?;
        let labels = kind.labels();
        let mut local: f64 = 0.0;
        let mut pairs = 0usize;
        for (i, a) in labels.iter().enumerate() {
            for (j, b) in labels.iter().enumerate().skip(i + 1) {
                let exact = kind.resistance(*a, *b).map_err(CliError::usage)?;
                local = local.max((exact.to_f64() - matrix[i][j]).abs());
                pairs += 1;
            }
        }
        println!(
            "{} n={}: {} pairs, max |formula − oracle| = {:.3e}",
            kind.kind_name(),
            kind.n(),
            pairs,
            local
        );
        worst = worst.max(local);
    }
    println!("max delta = {worst:.3e} (tolerance {:.1e})", args.tol);
    if worst <= args.tol {
        Ok(())
    } else {
        Err(CliError::Failed(format!(
            "verification failed: max delta {worst:.3e} exceeds tolerance {:.1e}",
            args.tol
        )))
    }
}

fn cmd_limits(args: LimitsArgs) -> Result<(), CliError> {
    // Any valid n selects the family; the limits depend only on the kind.
    let kind = make_kind(args.chain, if matches!(args.chain, ChainArg::Linear) { 1 } else { 3 })?;
    let limits = asymptotic_limits(kind);
    if args.json {
        let rows: Vec<_> = limits
            .iter()
            .map(|l| {
                serde_json::json!({
                    "name": l.name,
                    "description": l.description,
                    "exact": l.value.to_string(),
                    "decimal": l.value.decimal(args.digits),
                })
            })
            .collect();
        println!("{}", serde_json::to_string(&rows).expect("limits serialize"));
    } else {
        for l in limits {
            println!(
                "{:<22} {}  [{}]  — {}",
                l.name,
                l.value.decimal(args.digits),
                l.value,
                l.description
            );
        }
    }
    Ok(())
}
