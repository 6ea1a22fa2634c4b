use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use domino_cells_core::cells::{combinatorial_cells, Side};
use domino_cells_core::constructible::{
    admissible_involutions, c_partition, c_symbol, c_symbol_terms, families, involution_of,
};
use domino_cells_core::hecke::WeightFunction;
use domino_cells_core::partition::{Partition, Square};
use domino_cells_core::rs::{g_r, g_r_inverse};
use domino_cells_core::tableau::{all_cycle_structure_sets, CycleStructureSet};
use domino_cells_core::{SignedPermutation, Symbol};
use domino_cells::caps::{self, Workload};
use domino_cells::dot::emit_cells_dot;
use domino_cells::format::{CellsJson, ModuleJson, RsJson, SymbolJson, TableauJson};
use domino_cells::kl_cache::{kl_cells_parallel, load_or_compute, CacheStatus};
use domino_cells::verify::{verify_all, Bounds, Proposition};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "domino-cells", version, about = "Domino tableaux, combinatorial cells and Kazhdan-Lusztig cells in type B_n")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads (defaults to the number of CPUs).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Rank-r domino Robinson-Schensted maps.
    #[command(subcommand)]
    Rs(RsCommand),
    /// Rank data of a partition: core, corners and holes, heart, cycle-structure sets.
    Partition {
        /// Parts, e.g. 4,3,3,1.
        partition: Partition,
    },
    /// Combinatorial cells.
    #[command(subcommand)]
    Cells(CellsCommand),
    /// Symbols and the partition/bipartition bijections.
    #[command(subcommand)]
    Symbol(SymbolCommand),
    /// Constructible modules c(p, sigma) or c(Lambda, iota).
    Constructible(ConstructibleArgs),
    /// Families of rank s-1 partitions of n dominoes.
    Families {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        s: u32,
    },
    /// Kazhdan-Lusztig cells.
    #[command(subcommand)]
    Kl(KlCommand),
    /// Run verification suites; exits nonzero unless all pass.
    Verify(VerifyArgs),
    /// Graphviz rendering of combinatorial cells.
    EmitDot(CellsArgs),
}

#[derive(Subcommand)]
enum RsCommand {
    /// G_r(w) = (S_r(w), T_r(w)).
    Map {
        /// Window, e.g. 2,-1,3.
        #[arg(long, allow_hyphen_values = true)]
        word: SignedPermutation,
        #[arg(long, default_value_t = 0)]
        rank: u32,
    },
    /// The element with a given tableau pair, read as JSON with "left" and "right" tableaux.
    Inverse {
        /// JSON file, or - for standard input.
        #[arg(long, default_value = "-")]
        input: PathBuf,
    },
}

#[derive(Subcommand)]
enum CellsCommand {
    /// Cells of W_n in rank r.
    Enumerate(CellsArgs),
}

#[derive(Args)]
struct CellsArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    rank: u32,
    #[arg(long, default_value = "left")]
    side: Side,
}

#[derive(Subcommand)]
enum SymbolCommand {
    /// The symbol of a partition, of defect rank + 1.
    FromPartition { partition: Partition },
    /// The partition of a symbol, e.g. "0 1 3 4 / 2".
    ToPartition { symbol: Symbol },
}

#[derive(Args)]
struct ConstructibleArgs {
    /// Partition p; lists c(p, sigma) for every cycle-structure set unless --sigma is given.
    #[arg(long, conflicts_with = "symbol")]
    partition: Option<Partition>,
    /// Symbol Lambda; lists c(Lambda, iota) over the admissible involutions.
    #[arg(long)]
    symbol: Option<Symbol>,
    /// Expected defect s; must match the input's.
    #[arg(long)]
    defect: Option<u32>,
    /// One cycle-structure set, e.g. s33-s42.
    #[arg(long, requires = "partition")]
    sigma: Option<CycleStructureSet>,
}

#[derive(Subcommand)]
enum KlCommand {
    /// Cells of W_n for L(t) = b, L(s_i) = a.
    Cells {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        a: u32,
        #[arg(long, default_value_t = 1)]
        b: u32,
        #[arg(long, default_value = "left")]
        side: Side,
        /// Directory for the basis cache.
        #[arg(long, env = "DOMINO_CELLS_CACHE")]
        cache: Option<PathBuf>,
        /// Also compare with the combinatorial cells of rank b/a - 1.
        #[arg(long)]
        compare: bool,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Proposition ids, or "all".
    #[arg(required = true)]
    props: Vec<String>,
    #[arg(long)]
    n_max: Option<u32>,
    #[arg(long)]
    r_max: Option<u32>,
    #[arg(long)]
    s_max: Option<u32>,
    #[arg(long)]
    size_max: Option<u32>,
}

type Res = Result<bool, String>;

/// Writes to standard output; a closed pipe ends the process quietly.
fn emit(text: &str) {
    let mut out = io::stdout().lock();
    if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
        std::process::exit(0);
    }
}

macro_rules! say {
    ($($t:tt)*) => { emit(&format!("{}\n", format_args!($($t)*))) };
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global() {
            eprintln!("warning: {e}");
        }
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn print_json(v: &impl serde::Serialize) {
    say!("{}", serde_json::to_string_pretty(v).expect("values serialize"));
}

fn no_dot(f: Format) -> Result<(), String> {
    if f == Format::Dot {
        return Err("--format dot applies to cell output only".into());
    }
    Ok(())
}

fn cap(w: Workload, n: usize) -> Result<(), String> {
    if let Some(msg) = caps::check(w, n).map_err(|e| e.to_string())? {
        eprintln!("{msg}");
    }
    Ok(())
}

fn run(cli: &Cli) -> Res {
    let f = cli.format;
    match &cli.command {
        Command::Rs(RsCommand::Map { word, rank }) => {
            no_dot(f)?;
            let pair = g_r(word, *rank);
            match f {
                Format::Json => print_json(&RsJson::new(word, *rank, &pair)),
                _ => {
                    say!("shape {}", pair.left.shape());
                    say!("S {}", pair.left);
                    say!("T {}", pair.right);
                }
            }
        }
        Command::Rs(RsCommand::Inverse { input }) => {
            no_dot(f)?;
            let text = if input.as_os_str() == "-" {
                let mut s = String::new();
                io::stdin().read_to_string(&mut s).map_err(|e| e.to_string())?;
                s
            } else {
                std::fs::read_to_string(input).map_err(|e| format!("{}: {e}", input.display()))?
            };
            let v: Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
            let left: TableauJson = serde_json::from_value(v["left"].clone()).map_err(|e| format!("left: {e}"))?;
            let right: TableauJson = serde_json::from_value(v["right"].clone()).map_err(|e| format!("right: {e}"))?;
            let pair = domino_cells_core::TableauPair {
                left: (&left).try_into().map_err(|e| format!("left: {e}"))?,
                right: (&right).try_into().map_err(|e| format!("right: {e}"))?,
            };
            let w = g_r_inverse(&pair).map_err(|e| e.to_string())?;
            match f {
                Format::Json => print_json(&json!({ "word": w.window() })),
                _ => say!("{w}"),
            }
        }
        Command::Partition { partition: p } => {
            no_dot(f)?;
            partition_info(p, f);
        }
        Command::Cells(CellsCommand::Enumerate(a)) => {
            cap(Workload::Combinatorial, a.n)?;
            let cells = combinatorial_cells(a.n, a.rank, a.side);
            match f {
                Format::Json => print_json(&CellsJson::new(&cells, None)),
                Format::Dot => emit(&emit_cells_dot(&cells)),
                Format::Text => {
                    say!("{} {} cells of W_{} in rank {}", cells.blocks.len(), a.side, a.n, a.rank);
                    for b in &cells.blocks {
                        let ws: Vec<String> = b.iter().map(|w| format!("[{w}]")).collect();
                        say!("{}", ws.join(" "));
                    }
                }
            }
        }
        Command::EmitDot(a) => {
            cap(Workload::Combinatorial, a.n)?;
            emit(&emit_cells_dot(&combinatorial_cells(a.n, a.rank, a.side)));
        }
        Command::Symbol(SymbolCommand::FromPartition { partition: p }) => {
            no_dot(f)?;
            let s = Symbol::from_partition(p);
            let bp = s.to_bipartition();
            match f {
                Format::Json => print_json(&json!({
                    "partition": p.parts(),
                    "rank": p.rank(),
                    "symbol": SymbolJson::from(&s),
                    "bipartition": [bp.first.parts(), bp.second.parts()],
                })),
                _ => say!("{s}"),
            }
        }
        Command::Symbol(SymbolCommand::ToPartition { symbol: s }) => {
            no_dot(f)?;
            let p = s.to_partition().map_err(|e| e.to_string())?;
            match f {
                Format::Json => print_json(&json!({ "symbol": SymbolJson::from(s), "partition": p.parts(), "rank": p.rank() })),
                _ => say!("{p}"),
            }
        }
        Command::Constructible(a) => {
            no_dot(f)?;
            constructible(a, f)?;
        }
        Command::Families { n, s } => {
            no_dot(f)?;
            if *s == 0 {
                return Err("the defect s must be positive".into());
            }
            let fams = families(*n, *s);
            match f {
                Format::Json => print_json(&json!({
                    "n": n,
                    "s": s,
                    "families": fams.iter().map(|fam| fam.iter().map(|p| p.parts().to_vec()).collect::<Vec<_>>()).collect::<Vec<_>>(),
                })),
                _ => {
                    for fam in &fams {
                        let names: Vec<String> = fam.iter().map(Partition::exponent_notation).collect();
                        say!("{}", names.join(" "));
                    }
                }
            }
        }
        Command::Kl(KlCommand::Cells { n, a, b, side, cache, compare }) => {
            cap(Workload::KazhdanLusztig, *n)?;
            let weight = WeightFunction::new(*a, *b).ok_or("the parameters a and b must be positive")?;
            let (basis, status) = load_or_compute(cache.as_deref(), *n, weight).map_err(|e| e.to_string())?;
            match status {
                CacheStatus::Hit => eprintln!("loaded basis from cache"),
                CacheStatus::Stored => eprintln!("stored basis in cache"),
                CacheStatus::Disabled => {}
            }
            let data = kl_cells_parallel(&basis);
            let cells = data.cells(*side);
            let mut agrees = true;
            if *compare {
                let s = weight.s_ratio().ok_or("--compare needs b/a to be an integer")?;
                agrees = cells.same_blocks(&combinatorial_cells(*n, s - 1, *side));
                eprintln!(
                    "{} combinatorial cells of rank {}",
                    if agrees { "equal to the" } else { "DIFFERENT from the" },
                    s - 1
                );
            }
            match f {
                Format::Json => print_json(&CellsJson::new(cells, Some([*a, *b]))),
                Format::Dot => emit(&emit_cells_dot(cells)),
                Format::Text => {
                    say!("{} {} Kazhdan-Lusztig cells of W_{n} for L(s_i) = {a}, L(t) = {b}", cells.blocks.len(), side);
                    for blk in &cells.blocks {
                        let ws: Vec<String> = blk.iter().map(|w| format!("[{w}]")).collect();
                        say!("{}", ws.join(" "));
                    }
                }
            }
            return Ok(agrees);
        }
        Command::Verify(a) => {
            no_dot(f)?;
            let props: Vec<Proposition> = if a.props.iter().any(|p| p == "all") {
                Proposition::ALL.to_vec()
            } else {
                a.props.iter().map(|p| p.parse::<Proposition>()).collect::<Result<_, _>>().map_err(|e| e.to_string())?
            };
            let bounds = Bounds { n_max: a.n_max, r_max: a.r_max, s_max: a.s_max, size_max: a.size_max };
            let reports = verify_all(&props, bounds).map_err(|e| e.to_string())?;
            for r in &reports {
                for w in &r.warnings {
                    eprintln!("{w}");
                }
            }
            match f {
                Format::Json => print_json(&reports),
                _ => reports.iter().for_each(|r| say!("{r}")),
            }
            return Ok(reports.iter().all(|r| r.passed()));
        }
    }
    Ok(true)
}

fn squares(v: &[Square]) -> String {
    v.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ")
}

fn partition_info(p: &Partition, f: Format) {
    let d = p.corner_hole_data();
    let sets = all_cycle_structure_sets(p);
    let pairs = |v: &[Square]| v.iter().map(|s| [s.row, s.col]).collect::<Vec<_>>();
    match f {
        Format::Json => print_json(&json!({
            "partition": p.parts(),
            "rank": p.rank(),
            "core": p.core().parts(),
            "hc": pairs(&d.hc),
            "corners": pairs(&d.corners),
            "holes": pairs(&d.holes),
            "filled": pairs(&d.filled),
            "gamma": d.gamma,
            "kappa": d.kappa,
            "heart": p.heart().parts(),
            "cycle_structure_sets": sets.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
        })),
        _ => {
            say!("partition {}", p.exponent_notation());
            say!("rank {}", p.rank());
            say!("HC {}", squares(&d.hc));
            say!("corners {}", squares(&d.corners));
            say!("holes {}", squares(&d.holes));
            say!("filled {}", squares(&d.filled));
            say!("gamma {}  kappa {}", d.gamma, d.kappa);
            say!("heart {}", p.heart().exponent_notation());
            for s in &sets {
                say!("sigma {{{s}}}");
            }
        }
    }
}

fn constructible(a: &ConstructibleArgs, f: Format) -> Result<(), String> {
    let check_defect = |s: u32| match a.defect {
        Some(d) if d != s => Err(format!("input has defect {s}, not {d}")),
        _ => Ok(()),
    };
    let mut rows = Vec::new();
    if let Some(p) = &a.partition {
        check_defect(p.rank() + 1)?;
        let sets = match &a.sigma {
            Some(s) => vec![s.clone()],
            None => all_cycle_structure_sets(p),
        };
        for sigma in sets {
            let module = c_partition(p, &sigma).map_err(|e| e.to_string())?;
            let iota = involution_of(p, &sigma);
            rows.push(json!({
                "sigma": sigma.to_string(),
                "involution": iota.to_string(),
                "module": ModuleJson::from(&module),
            }));
        }
    } else if let Some(lambda) = &a.symbol {
        check_defect(lambda.defect())?;
        let (z1, _) = lambda.singles_doubles();
        for iota in admissible_involutions(&z1, lambda.defect()).map_err(|e| e.to_string())? {
            let terms = c_symbol_terms(lambda, &iota).map_err(|e| e.to_string())?;
            let module = c_symbol(lambda, &iota).map_err(|e| e.to_string())?;
            rows.push(json!({
                "involution": iota.to_string(),
                "terms": terms.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                "module": ModuleJson::from(&module),
            }));
        }
    } else {
        return Err("give --partition or --symbol".into());
    }
    match f {
        Format::Json => print_json(&rows),
        _ => {
            for r in &rows {
                let head = r.get("sigma").map_or_else(
                    || r["involution"].as_str().unwrap_or_default().to_string(),
                    |s| format!("{{{}}} {}", s.as_str().unwrap_or_default(), r["involution"].as_str().unwrap_or_default()),
                );
                say!("{head}: {}", r["module"]["text"].as_str().unwrap_or_default());
            }
        }
    }
    Ok(())
}
