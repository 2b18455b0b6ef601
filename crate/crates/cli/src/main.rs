use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use mlsub_core::gadgets::{
    biclique_to_piml, gen_colored_source, has_biclique, has_multicolored_biclique,
    has_multicolored_clique, mcb_to_hamiltonian, mcc_to_cfactor, mcc_to_matching, SourceMode,
};
use mlsub_core::mlg::serialize_mlg_with_comments;
use mlsub_core::solve::kernel::{reduce_to_2chs, sunflower_kernelize};
use mlsub_core::{
    check, parse_mlg, solve, Algorithm, Answer, Instance, MultiLayerGraph, PropertySpec,
};

/// Exact solvers for finding vertex sets that induce a graph with a given
/// property in many layers of a multi-layer graph.
#[derive(Parser)]
#[command(name = "mlsub", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide an instance with a chosen algorithm.
    Solve {
        #[command(flatten)]
        query: Query,
        #[arg(long, default_value = "auto")]
        algo: Algorithm,
    },
    /// Decide an instance by exhaustive search.
    Oracle {
        #[command(flatten)]
        query: Query,
    },
    /// Test one layer of a graph for a property.
    Check {
        #[arg(long)]
        input: PathBuf,
        /// 1-based layer index.
        #[arg(long)]
        layer: usize,
        #[arg(long)]
        property: String,
    },
    /// Write the sunflower kernel of a forbidden-subgraph instance.
    Kernelize {
        #[command(flatten)]
        query: Query,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
    /// Build a labelled instance from a random coloured source graph.
    Generate(Generate),
}

#[derive(Args)]
struct Query {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    property: String,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    ell: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Source {
    Clique,
    Biclique,
}

#[derive(Clone, Copy, ValueEnum)]
enum YesNo {
    Yes,
    No,
}

#[derive(Args)]
struct Generate {
    #[arg(long = "from", value_enum)]
    from: Source,
    #[arg(long)]
    target: String,
    #[arg(long)]
    h: usize,
    #[arg(long)]
    c: Option<usize>,
    #[arg(long, default_value_t = 2)]
    per_color: usize,
    #[arg(long, default_value_t = 0.5)]
    edge_prob: f64,
    #[arg(long, value_enum, default_value = "yes")]
    plant: YesNo,
    #[arg(long)]
    seed: u64,
    /// Output file; standard output when absent.
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
}

fn read_graph(path: &PathBuf) -> Result<MultiLayerGraph> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_mlg(&text).with_context(|| format!("{}", path.display()))
}

fn instance(q: &Query) -> Result<Instance> {
    let graph = read_graph(&q.input)?;
    let pi: PropertySpec = q.property.parse()?;
    Ok(Instance::new(graph, pi, q.k, q.ell)?)
}

fn answer_exit(answer: &Answer) -> ExitCode {
    println!("{answer}");
    if answer.is_yes() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn generate(args: &Generate) -> Result<String> {
    let target: PropertySpec = args.target.parse()?;
    if let (Some(c), PropertySpec::CFactor(t)) = (args.c, &target) {
        if c != *t {
            bail!("--c {c} conflicts with target {target}");
        }
    }
    let plant = matches!(args.plant, YesNo::Yes);
    let h = args.h;
    let (inst, truth) = match args.from {
        Source::Clique => {
            let g = gen_colored_source(
                h,
                args.per_color,
                args.edge_prob,
                plant,
                args.seed,
                SourceMode::Clique,
            )?;
            let inst = match target {
                PropertySpec::Matching => mcc_to_matching(&g, h)?,
                PropertySpec::CFactor(c) => mcc_to_cfactor(&g, h, c)?,
                _ => bail!("no clique reduction targets {target}"),
            };
            (inst, has_multicolored_clique(&g, h).is_some())
        }
        Source::Biclique => {
            let g = gen_colored_source(
                h,
                args.per_color,
                args.edge_prob,
                plant,
                args.seed,
                SourceMode::Biclique,
            )?;
            if target == PropertySpec::Hamiltonian {
                (
                    mcb_to_hamiltonian(&g, h)?,
                    has_multicolored_biclique(&g, h).is_some(),
                )
            } else {
                (
                    biclique_to_piml(g.base(), h, &target)?,
                    has_biclique(g.base(), h),
                )
            }
        }
    };
    let comments = [
        format!(
            "ground-truth: {} source-seed {}",
            if truth { "yes" } else { "no" },
            args.seed
        ),
        format!("property {}", inst.pi()),
        format!("k {}", inst.k()),
        format!("ell {}", inst.ell()),
    ];
    Ok(serialize_mlg_with_comments(inst.graph(), &comments))
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Solve { query, algo } => {
            let inst = instance(&query)?;
            Ok(answer_exit(&solve(&inst, algo)?))
        }
        Command::Oracle { query } => {
            let inst = instance(&query)?;
            Ok(answer_exit(&solve(&inst, Algorithm::Brute)?))
        }
        Command::Check {
            input,
            layer,
            property,
        } => {
            let graph = read_graph(&input)?;
            let pi: PropertySpec = property.parse()?;
            if layer == 0 || layer > graph.t() {
                bail!("layer {layer} out of range 1..={}", graph.t());
            }
            let yes = check(graph.layer(layer - 1), &pi);
            println!("{}", if yes { "YES" } else { "NO" });
            Ok(if yes {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Kernelize { query, output } => {
            let inst = instance(&query)?;
            let kernel = sunflower_kernelize(&reduce_to_2chs(&inst)?);
            fs::write(&output, kernel.to_hs())
                .with_context(|| format!("cannot write {}", output.display()))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Generate(args) => {
            let text = generate(&args)?;
            match &args.output {
                Some(path) => fs::write(path, text)
                    .with_context(|| format!("cannot write {}", path.display()))?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            let msg = format!("{e:#}");
            eprintln!("error: {}", msg.lines().next().unwrap_or_default());
            ExitCode::from(2)
        }
    }
}
