use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use shortcut_forge::{
    approx_shortcut, approx_tc_spanner, combined_size_cap, gen, io, verify_shortcut,
    verify_tc_spanner, DiGraph, Error, ShortcutSet, SolveParams, DEFAULT_MAX_RETRIES,
};

const CSV_HEADER: &str = "graph,n,m,s,d,alpha_d,size,cap,ok,regime,retries,ms,seed";

#[derive(Parser)]
#[command(
    name = "shortcut-forge",
    about = "Shortcut sets and TC spanners for digraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance and write it as an edge list.
    Gen(GenArgs),
    /// Compute a verified (α_S·s, α_D·d) shortcut set.
    Shortcut(SolveArgs),
    /// Compute a verified TC spanner (DAG input).
    Tcspanner(SolveArgs),
    /// Check an edge file against a graph at a hop bound.
    Verify(VerifyArgs),
    /// Run a solver grid and emit one CSV row per cell.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Path,
    Random,
    Layered,
    Labelcover,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    kind: GenKind,
    #[arg(long, default_value_t = 10)]
    n: usize,
    #[arg(long, default_value_t = 0.1)]
    edge_prob: f64,
    #[arg(long, default_value_t = 4)]
    layers: usize,
    /// LabelCover side size Δ.
    #[arg(long, default_value_t = 3)]
    delta: usize,
    /// LabelCover label count |L|.
    #[arg(long, default_value_t = 3)]
    labels: usize,
    /// LabelCover path-length parameter ρ.
    #[arg(long, default_value_t = 4)]
    rho: usize,
    /// LabelCover constraint-edge density.
    #[arg(long, default_value_t = 0.5)]
    density: f64,
    /// Plant a covering labeling (LabelCover only).
    #[arg(long)]
    satisfiable: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(short, long)]
    out: PathBuf,
}

#[derive(Args)]
struct SolveArgs {
    graph: PathBuf,
    #[arg(long)]
    s: usize,
    #[arg(long)]
    d: usize,
    #[arg(long, default_value_t = 1)]
    alpha_d: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(short, long)]
    out: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyMode {
    Shortcut,
    Tcspanner,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    edges: PathBuf,
    #[arg(long, value_enum)]
    mode: VerifyMode,
    #[arg(long)]
    bound: usize,
}

#[derive(Args)]
struct BenchArgs {
    /// Generator kinds to run (path, random, layered).
    #[arg(long, value_enum, num_args = 1.., default_values_t = [GenKind::Random])]
    kinds: Vec<GenKind>,
    #[arg(long, num_args = 1.., default_values_t = [20usize, 50])]
    ns: Vec<usize>,
    #[arg(long, num_args = 1.., default_values_t = [2usize])]
    ds: Vec<usize>,
    #[arg(long, num_args = 1.., default_values_t = [2usize])]
    alpha_ds: Vec<usize>,
    /// Seeds 0..count per cell.
    #[arg(long, default_value_t = 1)]
    seeds: u64,
    #[arg(long, default_value_t = 0.1)]
    edge_prob: f64,
    #[arg(long, default_value_t = 4)]
    layers: usize,
    #[arg(short, long)]
    out: PathBuf,
}

fn max_retries_from_env() -> u32 {
    std::env::var("SHORTCUT_FORGE_MAX_RETRIES")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_RETRIES)
}

fn exit_for(err: &Error) -> ExitCode {
    match err {
        Error::Infeasible { .. } => ExitCode::from(3),
        Error::RetryExhausted(_) => ExitCode::from(4),
        _ => ExitCode::from(2),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Shortcut(a) => cmd_shortcut(a),
        Command::Tcspanner(a) => cmd_tcspanner(a),
        Command::Verify(a) => return cmd_verify(a),
        Command::Bench(a) => cmd_bench(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            if let Error::Infeasible { pool, .. } = &e {
                eprint!("certifying constraints:\n{}", pool.dump());
            }
            exit_for(&e)
        }
    }
}

fn gen_instance(kind: GenKind, a: &BenchArgs, n: usize, seed: u64) -> (String, DiGraph) {
    match kind {
        GenKind::Path => ("path".into(), gen::gen_path(n)),
        GenKind::Random => ("random".into(), gen::gen_random_dag(n, a.edge_prob, seed)),
        GenKind::Layered => (
            "layered".into(),
            gen::gen_layered(n, a.layers, a.edge_prob, seed),
        ),
        GenKind::Labelcover => unreachable!("not a bench kind"),
    }
}

fn cmd_gen(a: GenArgs) -> Result<(), Error> {
    match a.kind {
        GenKind::Path => io::write_graph(&a.out, &gen::gen_path(a.n)),
        GenKind::Random => io::write_graph(&a.out, &gen::gen_random_dag(a.n, a.edge_prob, a.seed)),
        GenKind::Layered => io::write_graph(
            &a.out,
            &gen::gen_layered(a.n, a.layers, a.edge_prob, a.seed),
        ),
        GenKind::Labelcover => {
            let (inst, _) =
                gen::gen_labelcover_instance(a.delta, a.labels, a.density, a.seed, a.satisfiable)?;
            let lc = gen::gen_labelcover_graph(&inst, a.rho)?;
            io::write_graph(&a.out, &lc.graph)?;
            let mut names = String::new();
            for (i, name) in lc.names.iter().enumerate() {
                names.push_str(&format!("{i} {name}\n"));
            }
            let mut sidecar = a.out.clone().into_os_string();
            sidecar.push(".names");
            std::fs::write(sidecar, names)?;
            Ok(())
        }
    }
}

/// One solver run in CSV shape; the `ok` column is always re-derived by a
/// verifier, never trusted from the solver.
struct RunRecord {
    label: String,
    n: usize,
    m: usize,
    s: usize,
    d: usize,
    alpha_d: usize,
    size: usize,
    ok: bool,
    regime: String,
    retries: u32,
    ms: u128,
    seed: u64,
}

impl RunRecord {
    fn csv_row(&self) -> String {
        let cap = combined_size_cap(self.n, self.s, self.d, self.alpha_d);
        format!(
            "{},{},{},{},{},{},{},{cap:.1},{},{},{},{},{}",
            self.label,
            self.n,
            self.m,
            self.s,
            self.d,
            self.alpha_d,
            self.size,
            self.ok,
            self.regime,
            self.retries,
            self.ms,
            self.seed
        )
    }
}

fn cmd_shortcut(a: SolveArgs) -> Result<(), Error> {
    let g = io::read_graph(&a.graph)?;
    let mut p = SolveParams::new(a.s, a.d, a.alpha_d, a.seed);
    p.max_retries = max_retries_from_env();
    let start = Instant::now();
    let sol = approx_shortcut(&g, &p)?;
    let ms = start.elapsed().as_millis();
    io::write_edge_set(&a.out, sol.edges.iter())?;
    let record = RunRecord {
        label: a.graph.display().to_string(),
        n: g.n(),
        m: g.m(),
        s: a.s,
        d: a.d,
        alpha_d: a.alpha_d,
        size: sol.edges.len(),
        ok: verify_shortcut(&g, &sol.edges, sol.verified_bound).valid,
        regime: sol.dag.regime.name().into(),
        retries: sol.dag.retries,
        ms,
        seed: a.seed,
    };
    println!("{}", record.csv_row());
    Ok(())
}

fn cmd_tcspanner(a: SolveArgs) -> Result<(), Error> {
    let g = io::read_graph(&a.graph)?;
    let mut p = SolveParams::new(a.s, a.d, a.alpha_d, a.seed);
    p.max_retries = max_retries_from_env();
    let start = Instant::now();
    let h = approx_tc_spanner(&g, &p)?;
    let ms = start.elapsed().as_millis();
    io::write_edge_set(&a.out, h.iter().copied())?;
    let record = RunRecord {
        label: a.graph.display().to_string(),
        n: g.n(),
        m: g.m(),
        s: a.s,
        d: a.d,
        alpha_d: a.alpha_d,
        size: h.len(),
        ok: verify_tc_spanner(&g, &h, p.bound()).valid,
        regime: "tcspanner".into(),
        retries: 0,
        ms,
        seed: a.seed,
    };
    println!("{}", record.csv_row());
    Ok(())
}

fn cmd_verify(a: VerifyArgs) -> ExitCode {
    let run = || -> Result<shortcut_forge::Report, Error> {
        let g = io::read_graph(&a.graph)?;
        let edges = io::read_edge_set(&a.edges)?;
        Ok(match a.mode {
            VerifyMode::Shortcut => verify_shortcut(&g, &ShortcutSet::detached(edges), a.bound),
            VerifyMode::Tcspanner => verify_tc_spanner(&g, &edges, a.bound),
        })
    };
    match run() {
        Ok(report) if report.valid => {
            println!("valid (size {})", report.size);
            ExitCode::SUCCESS
        }
        Ok(report) => {
            match &report.violation {
                Some(v) => println!("invalid: {v}"),
                None => println!("invalid"),
            }
            if let Some((u, v)) = report.worst_pair {
                println!("worst pair: ({u}, {v})");
            }
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn cmd_bench(a: BenchArgs) -> Result<(), Error> {
    let mut rows = Vec::new();
    for &kind in &a.kinds {
        for &n in &a.ns {
            for &d in &a.ds {
                for &alpha_d in &a.alpha_ds {
                    for seed in 0..a.seeds {
                        let (label, g) = gen_instance(kind, &a, n, seed);
                        let mut p = SolveParams::new(n, d, alpha_d, seed);
                        p.max_retries = max_retries_from_env();
                        let start = Instant::now();
                        let sol = approx_shortcut(&g, &p)?;
                        let ms = start.elapsed().as_millis();
                        let ok = verify_shortcut(&g, &sol.edges, sol.verified_bound).valid;
                        let cap = combined_size_cap(n, n, d, alpha_d);
                        rows.push(format!(
                            "{label},{n},{},{n},{d},{alpha_d},{},{cap:.1},{ok},{},{},{ms},{seed}",
                            g.m(),
                            sol.edges.len(),
                            sol.dag.regime.name(),
                            sol.dag.retries
                        ));
                    }
                }
            }
        }
    }
    rows.sort();
    let mut csv = String::from(CSV_HEADER);
    csv.push('\n');
    for r in rows {
        csv.push_str(&r);
        csv.push('\n');
    }
    std::fs::write(&a.out, csv)?;
    Ok(())
}
