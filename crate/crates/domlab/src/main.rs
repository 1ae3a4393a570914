//! `domlab` command-line interface: generators, checkers, solvers,
//! normalization, classification, tree enumeration, the verification
//! suites, gap search, and census output.
//!
//! Exit codes: 0 on success/pass, 1 when a check or a proved claim fails,
//! 2 on usage errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use domlab::edgelist::{parse_edge_list, to_edge_list};
use domlab::families::{generate, t1, FamilySpec};
use domlab::graph::{root_at, Graph};
use domlab::graph6::{parse_graph6, to_graph6};
use domlab::harness::{
    census, gap_search, verify_bounds, verify_characterization, verify_counterexample,
    verify_family, verify_lemma6, verify_prop1, TreeSource, VerificationReport,
};
use domlab::labelings::{
    is_dominating_set, labeling_to_csv, parse_labeling_csv, violations_didf, violations_drdf,
};
use domlab::normal_form::{normalize, LabelingKind};
use domlab::recognizers::{
    recognize_double_star, recognize_healthy_spider, recognize_star, recognize_wounded_spider,
};
use domlab::solvers::{
    didf_bruteforce_with_limit, didf_tree_dp, drdf_bruteforce_no_ones_with_limit,
    drdf_bruteforce_with_limit, drdf_tree_dp, drdf_tree_dp_no_ones, gamma_bruteforce_with_limit,
    gamma_tree_dp, SolveResult, Witness, GAMMA_BRUTEFORCE_DEFAULT_LIMIT,
    LABELING_BRUTEFORCE_DEFAULT_LIMIT,
};
use domlab::tree_enum::{enumerate_free_trees, load_graph6_trees};

#[derive(Parser)]
#[command(
    name = "domlab",
    version,
    about = "Exact domination, double Roman, and double Italian domination computations on graphs and trees"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Graph6,
    Edges,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    Didf,
    Drdf,
    Domset,
}

#[derive(Clone, Copy, ValueEnum)]
enum Param {
    Gamma,
    Ddr,
    Didf,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Auto,
    Dp,
    Brute,
}

#[derive(Clone, Copy, ValueEnum)]
enum NormKind {
    Didf,
    Drdf,
}

#[derive(Args)]
struct HarnessArgs {
    /// Read trees from a graph6 file instead of the builtin enumerator.
    #[arg(long, value_name = "FILE")]
    trees_from: Option<PathBuf>,
    /// Worker threads; defaults to the number of cores.
    #[arg(long, value_name = "K")]
    jobs: Option<usize>,
    /// Emit the machine-readable report.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a named tree family member.
    Generate {
        /// One of: path, star, double_star, wounded_spider, healthy_spider,
        /// subdivided_double_star, t1.
        kind: String,
        /// Family parameters, e.g. `wounded_spider 3 2`.
        params: Vec<usize>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        format: GraphFormat,
    },
    /// Check a labeling or vertex set against its definition.
    Check {
        #[arg(long, value_enum)]
        kind: CheckKind,
        #[arg(long, value_name = "FILE")]
        graph: PathBuf,
        /// CSV of `vertex,value` rows (0/1 membership for domset).
        #[arg(long, value_name = "CSV")]
        labeling: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Solve for a domination parameter; prints a JSON result.
    Solve {
        #[arg(long, value_enum)]
        param: Param,
        #[arg(long, value_name = "FILE")]
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Restrict double Roman labels to {0,2,3}.
        #[arg(long)]
        no_ones: bool,
        /// Include the optimal witness in the output.
        #[arg(long)]
        witness: bool,
        /// Override the brute-force order limit.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Rewrite a valid labeling into leaf normal form.
    Normalize {
        #[arg(long, value_enum)]
        kind: NormKind,
        #[arg(long, value_name = "FILE")]
        graph: PathBuf,
        #[arg(long, value_name = "CSV")]
        labeling: PathBuf,
        /// Write the normalized CSV here instead of stdout.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Structural classification of a tree (JSON).
    Classify {
        #[arg(long, value_name = "FILE")]
        graph: PathBuf,
    },
    /// Enumerate all non-isomorphic free trees of an order.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        format: GraphFormat,
        #[arg(long)]
        count_only: bool,
    },
    /// Run a verification suite.
    Verify {
        #[command(subcommand)]
        suite: VerifySuite,
    },
    /// List every tree with gamma_dI < gamma_dR up to an order.
    GapSearch {
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        #[command(flatten)]
        harness: HarnessArgs,
    },
    /// Produce the per-tree census CSV.
    Census {
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        /// Output path; `-` writes to stdout.
        #[arg(long, value_name = "PATH")]
        out: PathBuf,
        #[command(flatten)]
        harness: HarnessArgs,
    },
}

#[derive(Subcommand)]
enum VerifySuite {
    /// The T1 counterexample values and drawing labelings.
    Counterexample {
        #[command(flatten)]
        harness: HarnessArgs,
    },
    /// Lower bounds and the sandwich over all trees up to --n-max.
    Bounds {
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        #[command(flatten)]
        harness: HarnessArgs,
    },
    /// Wounded-spider tightness characterization up to --n-max.
    Characterization {
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        #[command(flatten)]
        harness: HarnessArgs,
    },
    /// Strict gap over the subdivided-double-star grid.
    Family {
        #[arg(long, default_value_t = 3)]
        p_max: usize,
        #[arg(long, default_value_t = 3)]
        q_max: usize,
        #[command(flatten)]
        harness: HarnessArgs,
    },
    /// Randomized normalization properties plus minimum preservation.
    Lemma6 {
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[command(flatten)]
        harness: HarnessArgs,
    },
    /// Restricted {0,2,3} double Roman minimum equals the unrestricted one.
    Prop1 {
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        #[command(flatten)]
        harness: HarnessArgs,
    },
}

/// Errors that indicate misuse rather than a failed mathematical check.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn read_to_string(path: &Path) -> Result<String, UsageError> {
    fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

/// Loads a graph from either supported text format: an `n m` header makes
/// it an edge list, otherwise the first line is parsed as graph6.
fn load_graph(path: &Path) -> Result<Graph, UsageError> {
    let text = read_to_string(path)?;
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .ok_or_else(|| UsageError(format!("{}: empty graph file", path.display())))?;
    let looks_like_edge_list = {
        let mut parts = first.split_whitespace();
        let two_ints = parts.next().is_some_and(|t| t.parse::<usize>().is_ok())
            && parts.next().is_some_and(|t| t.parse::<usize>().is_ok());
        two_ints && parts.next().is_none()
    };
    if looks_like_edge_list {
        Ok(parse_edge_list(&text)?)
    } else {
        Ok(parse_graph6(first)?)
    }
}

fn emit_graph(g: &Graph, format: GraphFormat) -> Result<String, UsageError> {
    match format {
        GraphFormat::Graph6 => Ok(to_graph6(g)? + "\n"),
        GraphFormat::Edges => Ok(to_edge_list(g)),
    }
}

fn tree_source(args: &HarnessArgs) -> Result<TreeSource, UsageError> {
    match &args.trees_from {
        None => Ok(TreeSource::Builtin),
        Some(path) => {
            let text = read_to_string(path)?;
            Ok(TreeSource::Trees(load_graph6_trees(&text)?))
        }
    }
}

fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, UsageError> {
    match jobs {
        None => Ok(f()),
        Some(0) => Err(UsageError("--jobs must be at least 1".into())),
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(k).build()?;
            Ok(pool.install(f))
        }
    }
}

fn finish_report(report: &VerificationReport, json: bool) -> ExitCode {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(report).expect("report serializes")
        );
    } else {
        print!("{}", report.render());
    }
    if report.pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn witness_json(w: &Witness) -> serde_json::Value {
    match w {
        Witness::DominatingSet(s) => json!(s),
        Witness::Labeling(f) => json!(f.values()),
    }
}

fn run_solve(
    param: Param,
    graph: &Graph,
    method: Method,
    no_ones: bool,
    limit: Option<usize>,
) -> Result<(SolveResult, &'static str), UsageError> {
    if no_ones && !matches!(param, Param::Ddr) {
        return Err(UsageError("--no-ones only applies to --param ddr".into()));
    }
    let use_dp = match method {
        Method::Dp => {
            if !graph.is_tree() {
                return Err(UsageError("--method dp requires a tree".into()));
            }
            true
        }
        Method::Brute => false,
        Method::Auto => graph.is_tree(),
    };
    if use_dp {
        let t = root_at(graph, 0).expect("tree checked above");
        let res = match param {
            Param::Gamma => gamma_tree_dp(&t),
            Param::Didf => didf_tree_dp(&t),
            Param::Ddr if no_ones => drdf_tree_dp_no_ones(&t),
            Param::Ddr => drdf_tree_dp(&t),
        };
        Ok((res, "dp"))
    } else {
        let labeling_limit = limit.unwrap_or(LABELING_BRUTEFORCE_DEFAULT_LIMIT);
        let res = match param {
            Param::Gamma => {
                gamma_bruteforce_with_limit(graph, limit.unwrap_or(GAMMA_BRUTEFORCE_DEFAULT_LIMIT))?
            }
            Param::Didf => didf_bruteforce_with_limit(graph, labeling_limit)?,
            Param::Ddr if no_ones => drdf_bruteforce_no_ones_with_limit(graph, labeling_limit)?,
            Param::Ddr => drdf_bruteforce_with_limit(graph, labeling_limit)?,
        };
        Ok((res, "brute"))
    }
}

fn spider_json(s: &Option<domlab::recognizers::SpiderStructure>) -> serde_json::Value {
    match s {
        None => serde_json::Value::Null,
        Some(s) => json!({
            "head": s.head,
            "feet": s.feet,
            "subdivision_vertices": s.subdivision_vertices,
            "pendant_leaves": s.pendant_leaves,
        }),
    }
}

fn run(cli: Cli) -> Result<ExitCode, UsageError> {
    match cli.command {
        Command::Generate {
            kind,
            params,
            format,
        } => {
            let graph = if kind == "t1" {
                if !params.is_empty() {
                    return Err(UsageError("t1 takes no parameters".into()));
                }
                t1().graph
            } else {
                let spec = FamilySpec::from_kind_params(&kind, &params)?;
                generate(spec)?.graph
            };
            print!("{}", emit_graph(&graph, format)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Check {
            kind,
            graph,
            labeling,
            json,
        } => {
            let g = load_graph(&graph)?;
            let f = parse_labeling_csv(&read_to_string(&labeling)?, g.order())?;
            let (valid, violations): (bool, Vec<String>) = match kind {
                CheckKind::Didf => {
                    let v = violations_didf(&g, &f);
                    (v.is_empty(), v.iter().map(|x| x.to_string()).collect())
                }
                CheckKind::Drdf => {
                    let v = violations_drdf(&g, &f);
                    (v.is_empty(), v.iter().map(|x| x.to_string()).collect())
                }
                CheckKind::Domset => {
                    if let Some(v) = f.values().iter().position(|&x| x > 1) {
                        return Err(UsageError(format!(
                            "domset membership must be 0/1, vertex {v} has {}",
                            f.value(v)
                        )));
                    }
                    let set = f.class(1);
                    let uncovered: Vec<String> = (0..g.order())
                        .filter(|&u| {
                            f.value(u) == 0 && g.neighbors(u).iter().all(|&w| f.value(w) == 0)
                        })
                        .map(|u| format!("vertex {u} is uncovered"))
                        .collect();
                    (is_dominating_set(&g, &set), uncovered)
                }
            };
            if json {
                let out = json!({ "valid": valid, "violations": violations });
                println!(
                    "{}",
                    serde_json::to_string_pretty(&out).expect("serializes")
                );
            } else if valid {
                println!("valid");
            } else {
                println!("invalid");
                for v in &violations {
                    println!("  {v}");
                }
            }
            Ok(if valid {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::Solve {
            param,
            graph,
            method,
            no_ones,
            witness,
            limit,
        } => {
            let g = load_graph(&graph)?;
            let start = Instant::now();
            let (res, method_used) = run_solve(param, &g, method, no_ones, limit)?;
            let elapsed_ms = start.elapsed().as_millis();
            let out = json!({
                "value": res.value,
                "witness": if witness { witness_json(&res.witness) } else { serde_json::Value::Null },
                "method": method_used,
                "elapsed_ms": elapsed_ms,
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&out).expect("serializes")
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Normalize {
            kind,
            graph,
            labeling,
            out,
        } => {
            let g = load_graph(&graph)?;
            let f = parse_labeling_csv(&read_to_string(&labeling)?, g.order())?;
            let kind = match kind {
                NormKind::Didf => LabelingKind::Didf,
                NormKind::Drdf => LabelingKind::Drdf,
            };
            let normalized = normalize(&g, &f, kind)?;
            let csv = labeling_to_csv(&normalized);
            match out {
                Some(path) => fs::write(&path, csv)
                    .map_err(|e| UsageError(format!("{}: {e}", path.display())))?,
                None => print!("{csv}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { graph } => {
            let g = load_graph(&graph)?;
            let wounded = recognize_wounded_spider(&g)?;
            let healthy = recognize_healthy_spider(&g)?;
            let star = recognize_star(&g)?;
            let double_star = recognize_double_star(&g)?;
            let out = json!({
                "order": g.order(),
                "wounded_spider": spider_json(&wounded),
                "healthy_spider": spider_json(&healthy),
                "star": star.map(|(center, t)| json!({"center": center, "t": t})),
                "double_star": double_star.map(|(p, q)| json!({"p": p, "q": q})),
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&out).expect("serializes")
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate {
            n,
            format,
            count_only,
        } => {
            let stream = enumerate_free_trees(n)?;
            if count_only {
                println!("{}", stream.count());
                return Ok(ExitCode::SUCCESS);
            }
            let mut stdout = std::io::stdout().lock();
            for (i, g) in stream.enumerate() {
                match format {
                    GraphFormat::Graph6 => writeln!(stdout, "{}", to_graph6(&g)?),
                    GraphFormat::Edges => {
                        if i > 0 {
                            writeln!(stdout)?;
                        }
                        write!(stdout, "{}", to_edge_list(&g))
                    }
                }
                .map_err(|e| UsageError(e.to_string()))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite } => {
            let reject_trees_from = |args: &HarnessArgs, suite: &str| {
                if args.trees_from.is_some() {
                    Err(UsageError(format!("`verify {suite}` generates its own instances and does not take --trees-from")))
                } else {
                    Ok(())
                }
            };
            let (harness, report) = match suite {
                VerifySuite::Counterexample { harness } => {
                    reject_trees_from(&harness, "counterexample")?;
                    let r = with_jobs(harness.jobs, verify_counterexample)?;
                    (harness, r)
                }
                VerifySuite::Bounds { n_max, harness } => {
                    let source = tree_source(&harness)?;
                    let r = with_jobs(harness.jobs, || verify_bounds(n_max, &source))??;
                    (harness, r)
                }
                VerifySuite::Characterization { n_max, harness } => {
                    let source = tree_source(&harness)?;
                    let r = with_jobs(harness.jobs, || verify_characterization(n_max, &source))??;
                    (harness, r)
                }
                VerifySuite::Family {
                    p_max,
                    q_max,
                    harness,
                } => {
                    reject_trees_from(&harness, "family")?;
                    if p_max < 2 || q_max < 2 {
                        return Err(UsageError("--p-max and --q-max must be at least 2".into()));
                    }
                    let r = with_jobs(harness.jobs, || verify_family(p_max, q_max))?;
                    (harness, r)
                }
                VerifySuite::Lemma6 {
                    samples,
                    n_max,
                    seed,
                    harness,
                } => {
                    reject_trees_from(&harness, "lemma6")?;
                    let r = with_jobs(harness.jobs, || verify_lemma6(samples, n_max, seed))?;
                    (harness, r)
                }
                VerifySuite::Prop1 { n_max, harness } => {
                    let source = tree_source(&harness)?;
                    let r = with_jobs(harness.jobs, || verify_prop1(n_max, &source))??;
                    (harness, r)
                }
            };
            Ok(finish_report(&report, harness.json))
        }
        Command::GapSearch { n_max, harness } => {
            let source = tree_source(&harness)?;
            let records = with_jobs(harness.jobs, || gap_search(n_max, &source))??;
            if harness.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&records).expect("serializes")
                );
            } else if records.is_empty() {
                println!("no gap trees with n <= {n_max}");
            } else {
                println!("{} gap tree(s) with n <= {n_max}:", records.len());
                for r in &records {
                    println!(
                        "  n={} {} gamma={} gamma_dR={} gamma_dI={} gap={}",
                        r.n, r.g6, r.gamma, r.gamma_dr, r.gamma_di, r.gap
                    );
                }
                let smallest = records[0].n;
                println!("optimal labelings of the smallest gap tree(s), n = {smallest}:");
                for r in records.iter().take_while(|r| r.n == smallest) {
                    let g = parse_graph6(&r.g6).expect("records carry valid graph6");
                    let t = root_at(&g, 0).expect("gap trees are trees");
                    let didf = didf_tree_dp(&t);
                    let drdf = drdf_tree_dp(&t);
                    println!(
                        "  {} didf={:?} drdf={:?}",
                        r.g6,
                        didf.witness.as_labeling().unwrap().values(),
                        drdf.witness.as_labeling().unwrap().values()
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Census {
            n_max,
            out,
            harness,
        } => {
            let source = tree_source(&harness)?;
            let mut buf = Vec::new();
            let rows = with_jobs(harness.jobs, || census(n_max, &source, &mut buf))??;
            if out.as_os_str() == "-" {
                std::io::stdout()
                    .write_all(&buf)
                    .map_err(|e| UsageError(e.to_string()))?;
            } else {
                fs::write(&out, &buf).map_err(|e| UsageError(format!("{}: {e}", out.display())))?;
                eprintln!("wrote {rows} rows to {}", out.display());
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
