mod export;

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use cotree::cotree4::{build_tree_pair, certificate};
use cotree::format::{parse_edge_list, parse_graph, write_edge_list, write_graph, write_wood};
use cotree::gen::{corpus, default_roots, generate, GeneratorSpec, Profile, BENCH_SIZES};
use cotree::verify::{certify_tree, check_cut_cycle, check_root_degrees, oracle_best_pair, Certificate, Kind};
use cotree::{Error, PlaneGraph, Suspension};

#[derive(Parser)]
#[command(name = "cotree", version, about = "Spanning trees whose tree and co-tree have maximum degree at most 4")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated graph, or a whole corpus into a directory.
    Generate {
        /// Family name such as `wheel-6`, `cube`, `example`, `g-5`,
        /// `triangulation-100-s3` or `cubic-20-s1`.
        family: Option<String>,
        #[arg(long, value_enum, conflicts_with = "family", requires = "out_dir")]
        profile: Option<CorpusProfile>,
        #[arg(long)]
        out_dir: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compute a tree pair and print tree, co-tree and certificate blocks.
    Solve {
        graph: PathBuf,
        #[arg(long, num_args = 3, value_names = ["R1", "R2", "R3"])]
        roots: Option<Vec<usize>>,
        /// Also print the minimal wood.
        #[arg(long)]
        dump_wood: bool,
        /// Also print the green path partitions of the graph and its dual.
        #[arg(long)]
        dump_opp: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a tree given as an edge list, a file of edges, or solve output.
    Verify {
        graph: PathBuf,
        #[arg(long)]
        tree: String,
        /// Primal edges whose duals should form the co-tree; defaults to the
        /// complement of the tree.
        #[arg(long)]
        cotree: Option<String>,
        #[arg(long, default_value_t = 4)]
        bound: usize,
    },
    /// Enumerate all spanning trees and report the best degree pair.
    Oracle {
        graph: PathBuf,
        #[arg(long, default_value_t = 10_000_000)]
        limit: u128,
        /// Look up the degrees of this tree during the enumeration.
        #[arg(long)]
        tree: Option<String>,
    },
    /// Time the construction on random triangulations; CSV on stdout.
    Bench {
        #[arg(long, value_enum, default_value_t = BenchProfile::Bench)]
        profile: BenchProfile,
        /// Comma separated sizes, overriding the profile.
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<usize>>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Render the graph with its wood, tree and co-tree.
    Export {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        #[arg(long, num_args = 3, value_names = ["R1", "R2", "R3"])]
        roots: Option<Vec<usize>>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CorpusProfile {
    Small,
    Medium,
    Bench,
    Negative,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BenchProfile {
    /// 1250 to 20000 vertices.
    Bench,
    /// 250 to 2000 vertices.
    Quick,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Svg,
}

/// Exit status beyond clap's own usage errors.
enum Failure {
    /// Bad input: exit 2.
    Usage(anyhow::Error),
    /// A check did not pass: exit 1.
    Verification,
    /// The construction broke one of its own guarantees: exit 3.
    Internal(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Failure {
        match e.downcast_ref::<Error>() {
            Some(Error::PostconditionFailure(msg)) => Failure::Internal(msg.clone()),
            _ => Failure::Usage(e),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::from(anyhow::Error::new(e))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn emit(output: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match output {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load(path: &Path, roots: Option<Vec<usize>>) -> anyhow::Result<Suspension> {
    let file = parse_graph(&read(path)?).with_context(|| format!("parsing {}", path.display()))?;
    let roots = match roots {
        Some(r) => [r[0], r[1], r[2]],
        None => file.roots.unwrap_or_else(|| default_roots(&file.graph)),
    };
    Ok(Suspension::new(file.graph, roots)?)
}

/// The lines of block `name:` if the text has block headers, else all of it.
fn block<'a>(text: &'a str, name: &str) -> &'a str {
    let header = format!("{name}:");
    let Some(start) = text.lines().position(|l| l.trim() == header) else { return text };
    let body_start: usize = text.lines().take(start + 1).map(|l| l.len() + 1).sum();
    let rest = &text[body_start.min(text.len())..];
    let end = rest
        .lines()
        .scan(0, |off, l| {
            let at = *off;
            *off += l.len() + 1;
            Some((at, l))
        })
        .find(|(_, l)| l.trim_end().ends_with(':'))
        .map_or(rest.len(), |(at, _)| at);
    &rest[..end]
}

/// Edges from an inline list or a file, taking block `name` from solve
/// output.
fn edges_arg(g: &PlaneGraph, arg: &str, name: &str) -> anyhow::Result<Vec<usize>> {
    let path = Path::new(arg);
    let text = if path.is_file() { read(path)? } else { arg.to_string() };
    parse_edge_list(g, block(&text, name)).with_context(|| format!("reading {name} edges"))
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Generate { family, profile, out_dir, output } => {
            if let Some(profile) = profile {
                let dir = out_dir.expect("clap requires out_dir");
                fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
                let profile = match profile {
                    CorpusProfile::Small => Profile::Small,
                    CorpusProfile::Medium => Profile::Medium,
                    CorpusProfile::Bench => Profile::Bench,
                    CorpusProfile::Negative => Profile::Negative,
                };
                for inst in corpus(profile)? {
                    let text = write_graph(&inst.graph, Some(inst.roots));
                    emit(Some(&dir.join(format!("{}.graph", inst.name))), &text)?;
                }
                return Ok(());
            }
            let Some(family) = family else {
                return Err(Failure::Usage(anyhow::anyhow!("give a family name or --profile")));
            };
            let inst = generate(family.parse::<GeneratorSpec>()?)?;
            emit(output.as_deref(), &write_graph(&inst.graph, Some(inst.roots)))?;
        }
        Command::Solve { graph, roots, dump_wood, dump_opp, output } => {
            let s = load(&graph, roots)?;
            let g = s.graph();
            let pair = build_tree_pair(&s)?;
            let mut out = String::new();
            let [r1, r2, r3] = s.roots();
            writeln!(out, "# n={} m={} faces={} roots {r1} {r2} {r3}", g.n(), g.m(), g.num_faces()).unwrap();
            writeln!(out, "tree:\n{}", write_edge_list(g, &pair.tree)).unwrap();
            writeln!(out, "cotree:\n{}", write_edge_list(g, &pair.co_tree)).unwrap();
            out.push_str("certificate:\n");
            out.push_str(&certificate(g, &pair));
            for c in certify_tree(g, &pair.tree, 4).into_iter().chain([check_root_degrees(&s, &pair)]) {
                writeln!(out, "{c}").unwrap();
            }
            if dump_wood {
                write!(out, "\nwood:\n{}", write_wood(g, &pair.wood)).unwrap();
            }
            if dump_opp {
                write!(out, "\nopp:\n{}", pair.primal.opp.dump()).unwrap();
                write!(out, "\ndual-opp:\n{}", pair.dual.opp.dump()).unwrap();
            }
            emit(output.as_deref(), &out)?;
        }
        Command::Verify { graph, tree, cotree, bound } => {
            let file = parse_graph(&read(&graph)?).with_context(|| format!("parsing {}", graph.display()))?;
            let g = &file.graph;
            let tree = edges_arg(g, &tree, "tree")?;
            let mut certs = certify_tree(g, &tree, bound);
            let complement: Vec<usize> = (0..g.m()).filter(|e| !tree.contains(e)).collect();
            if let Some(cotree) = cotree {
                let mut given = edges_arg(g, &cotree, "cotree")?;
                given.sort_unstable();
                let pass = given == complement;
                let witness: Vec<usize> = if pass {
                    Vec::new()
                } else {
                    (0..g.m()).filter(|e| given.contains(e) == complement.contains(e)).collect()
                };
                let detail = if pass { "co-tree is the complement of the tree" } else { "edges in both or neither" };
                certs.push(Certificate { kind: Kind::CoTreeDuality, pass, witness, detail: detail.into() });
            }
            // a fundamental cycle of the tree is a cycle whose dual is a minimal cut
            if let Some(&e) = complement.first() {
                if let Some(cycle) = fundamental_cycle(g, &tree, e) {
                    certs.push(check_cut_cycle(g, &cycle));
                }
            }
            for c in &certs {
                println!("{c}");
            }
            if !certs.iter().all(|c| c.pass) {
                return Err(Failure::Verification);
            }
        }
        Command::Oracle { graph, limit, tree } => {
            let file = parse_graph(&read(&graph)?).with_context(|| format!("parsing {}", graph.display()))?;
            let g = &file.graph;
            let query = tree.map(|t| edges_arg(g, &t, "tree")).transpose()?;
            let r = oracle_best_pair(g, limit, query.as_deref())?;
            println!("trees {}", r.trees);
            println!("optimum {}", r.optimum);
            println!("pairs-within-4 {}", r.pairs_within_4);
            println!("has-3-3 {}", r.has_3_3);
            if let Some(q) = &query {
                match r.query {
                    Some((t, c)) => println!("query {t} {c}"),
                    None => println!("query not-a-spanning-tree ({} edges)", q.len()),
                }
            }
            print!("witness:\n{}", write_edge_list(g, &r.witness));
        }
        Command::Bench { profile, sizes, seed } => {
            let sizes = sizes.unwrap_or_else(|| match profile {
                BenchProfile::Bench => BENCH_SIZES.to_vec(),
                BenchProfile::Quick => vec![250, 500, 1000, 2000],
            });
            if sizes.iter().any(|&n| n < 4) {
                return Err(Failure::Usage(anyhow::anyhow!("sizes must be at least 4")));
            }
            let timings = cotree::bench::run(&sizes, seed)?;
            println!("n,wall_time");
            for t in &timings {
                println!("{},{:.6}", t.n, t.seconds);
            }
            println!("# slope {:.3}", cotree::bench::log_log_slope(&timings));
        }
        Command::Export { graph, format, roots, output } => {
            let s = load(&graph, roots)?;
            let pair = build_tree_pair(&s)?;
            let text = match format {
                Format::Dot => export::dot(&s, &pair),
                Format::Svg => export::svg(&s, &pair),
            };
            emit(output.as_deref(), &text)?;
        }
    }
    Ok(())
}

/// The cycle closed by adding edge `e` to `tree`, if `tree` connects its
/// ends.
fn fundamental_cycle(g: &PlaneGraph, tree: &[usize], e: usize) -> Option<Vec<usize>> {
    let mut adj = vec![Vec::new(); g.n()];
    for &t in tree {
        let (u, v) = g.endpoints(t);
        adj[u].push((v, t));
        adj[v].push((u, t));
    }
    let (from, to) = g.endpoints(e);
    let mut via = vec![None; g.n()];
    let mut seen = vec![false; g.n()];
    seen[from] = true;
    let mut stack = vec![from];
    while let Some(x) = stack.pop() {
        for &(y, t) in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                via[y] = Some((x, t));
                stack.push(y);
            }
        }
    }
    if !seen[to] {
        return None;
    }
    let mut cycle = vec![e];
    let mut x = to;
    while let Some((p, t)) = via[x] {
        cycle.push(t);
        x = p;
    }
    Some(cycle)
}
