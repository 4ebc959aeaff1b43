//! `dcgraph`: command-line workbench for transition graphs.
//!
//! Exit status 0 on success, 1 when a checked property fails, 2 on usage
//! or input errors. Every file argument accepts `-` for standard input.

mod io;

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use dcgraph::bp::bp_evaluate;
use dcgraph::classes::{classify, evaluate_write_once};
use dcgraph::closure::closure;
use dcgraph::dot::{export_bp_dot, export_dot, LabelNaming};
use dcgraph::format::{print_dimacs, print_nbp, print_tg, print_tt};
use dcgraph::generators::{
    clique_indicator_graph, eq_graph, from_monotone_bp, not_p3f_graph, p3f_branching_program,
    sat_reduction, slice_graph, symmetric_graph, threshold_graph, xor_graph,
};
use dcgraph::random::{self, DEFAULT_SEED};
use dcgraph::report::{upper_bound_report, ReportFamily, ReportRow};
use dcgraph::search::{
    min_dc, verify_uniform_hardness, SearchConfig, SearchStatus, SubfamilyVerdict, DEFAULT_CANDIDATE_BUDGET,
    DEFAULT_LABEL_CAP,
};
use dcgraph::semantics::{enumerate_accepted, evaluate};
use dcgraph::structure::{check_structure, Preconditions, StructureFamily, StructureOptions};
use dcgraph::transform::{normalize_singletons, to_dag, trim};
use dcgraph::{Assignment, Execution, TransitionGraph};

use io::{emit, read_dimacs, read_nbp, read_tg, read_tt, write_file, Failure, Outcome};

#[derive(Parser)]
#[command(name = "dcgraph", version, about = "Transition graph workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a `tg 1` file for range errors and describe its shape.
    Validate { file: PathBuf },
    /// Evaluate a graph on one assignment; prints 0 or 1.
    Eval {
        file: PathBuf,
        /// Bitstring, variable 0 leftmost (`-` for no variables).
        #[arg(long)]
        input: String,
        /// Use the polynomial write-once evaluator.
        #[arg(long)]
        write_once: bool,
    },
    /// Print the accepted family as a `tt 1` truth table.
    Enumerate { file: PathBuf },
    /// Drop vertices on no initial-to-terminal walk.
    Trim { file: PathBuf },
    /// Split multi-variable labels into singleton chains.
    Normalize { file: PathBuf },
    /// Unroll a cyclic graph into an equivalent DAG.
    ToDag { file: PathBuf },
    /// Enlarge labels by the variables forced on them.
    Closure { file: PathBuf },
    /// Report the streaming, adaptive and write-once classes.
    Classify { file: PathBuf },
    /// Check the prefix-structure properties of a closed graph.
    CheckStructure {
        #[arg(long, value_enum)]
        family: Family,
        /// Skip the closedness and accepted-family checks.
        #[arg(long)]
        no_precheck: bool,
        #[arg(long)]
        budget: Option<usize>,
        file: PathBuf,
    },
    /// Write a named construction.
    Gen {
        #[command(subcommand)]
        which: Gen,
    },
    /// Branching programs in `nbp 1` format.
    Bp {
        #[command(subcommand)]
        which: Bp,
    },
    /// Fewest edges of a graph representing a truth table.
    Mindc {
        #[arg(long)]
        function: PathBuf,
        #[arg(long)]
        max_edges: usize,
        #[command(flatten)]
        search: SearchArgs,
        /// Write the witness as `tg 1`.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Check that every subfamily needs one edge per accepted set.
    VerifyUniform {
        #[arg(long)]
        function: PathBuf,
        /// Defaults to the size of the family.
        #[arg(long)]
        max_edges: Option<usize>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Construction size next to the accepted-set count.
    Report {
        /// xor, thr:K, slice:K, sym:C1,C2,..., eq, clique, not-p3f, p3f-bp
        family: String,
        #[arg(required = true)]
        n: Vec<usize>,
    },
    /// Graphviz export of a `tg 1` (or, with --bp, `nbp 1`) file.
    Dot {
        file: PathBuf,
        #[arg(long)]
        bp: bool,
        /// Name pair-indexed variables as vertex pairs.
        #[arg(long)]
        pairs: bool,
    },
    /// Seeded random instances.
    Random {
        #[command(subcommand)]
        which: RandomKind,
        #[arg(long, default_value_t = DEFAULT_SEED, global = true)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    P3f,
    Clique,
}

#[derive(clap::Args)]
struct SearchArgs {
    #[arg(long, default_value_t = DEFAULT_LABEL_CAP)]
    label_cap: usize,
    /// Worker threads; 1 searches sequentially.
    #[arg(long)]
    jobs: Option<usize>,
    /// Candidate budget.
    #[arg(long, default_value_t = DEFAULT_CANDIDATE_BUDGET)]
    budget: u64,
}

#[derive(Subcommand)]
enum Gen {
    Xor { n: usize },
    Thr { n: usize, k: usize },
    Slice { n: usize, k: usize },
    /// Accepted counts as a comma-separated list.
    Sym { n: usize, counts: String },
    Eq { n: usize },
    Clique { n: usize },
    NotP3f { n: usize },
    /// Writes `nbp 1`.
    P3fBp { n: usize },
    /// SAT reduction of a DIMACS file; the target assignment follows as a
    /// `# target` comment.
    FromCnf { file: PathBuf },
}

#[derive(Subcommand)]
enum Bp {
    Eval {
        file: PathBuf,
        #[arg(long)]
        input: String,
    },
    /// Simulate a monotone program by a transition graph.
    ToTg { file: PathBuf },
    Gen {
        #[command(subcommand)]
        which: BpGen,
    },
}

#[derive(Subcommand)]
enum BpGen {
    P3f { n: usize },
}

#[derive(Subcommand)]
enum RandomKind {
    /// A graph, cyclic unless --dag.
    Tg {
        #[arg(long, default_value_t = 4)]
        universe: usize,
        #[arg(long, default_value_t = 6)]
        vertices: usize,
        #[arg(long, default_value_t = 10)]
        edges: usize,
        #[arg(long)]
        dag: bool,
    },
    /// A layered branching program.
    Nbp {
        #[arg(long, default_value_t = 4)]
        vars: usize,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long, default_value_t = 3)]
        width: usize,
        #[arg(long)]
        monotone: bool,
    },
    /// A truth table, each set kept with probability 0.3.
    Tt {
        #[arg(long, default_value_t = 4)]
        vars: usize,
    },
    /// A DIMACS formula.
    Cnf {
        #[arg(long, default_value_t = 5)]
        vars: usize,
        #[arg(long, default_value_t = 8)]
        clauses: usize,
    },
}

fn parse_input(bits: &str, n: usize) -> Outcome<Assignment> {
    let x = if bits == "-" {
        Some(Assignment::new(Vec::new()))
    } else {
        Assignment::parse_bits(bits)
    };
    let x = x.ok_or_else(|| Failure::Usage(format!("--input `{bits}` is not a bitstring")))?;
    if x.len() != n {
        return Err(Failure::Usage(format!("--input has {} bits, expected {n}", x.len())));
    }
    Ok(x)
}

fn as_dag(g: TransitionGraph) -> TransitionGraph {
    if g.is_dag() {
        g
    } else {
        to_dag(&g)
    }
}

fn execution(jobs: Option<usize>) -> Execution {
    match jobs {
        Some(1) => Execution::Sequential,
        _ => Execution::Parallel,
    }
}

/// Runs `f` on a pool of `jobs` threads when one was requested.
fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Outcome<T> {
    match jobs {
        Some(0) => Err(Failure::Usage("--jobs must be at least 1".into())),
        #[cfg(feature = "parallel")]
        Some(j) if j > 1 => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map(|pool| pool.install(f))
            .map_err(|e| Failure::Usage(e.to_string())),
        _ => Ok(f()),
    }
}

fn search_config(max_edges: usize, args: &SearchArgs) -> SearchConfig {
    let mut c = SearchConfig::new(max_edges);
    c.label_cap = args.label_cap;
    c.candidate_budget = args.budget;
    c.execution = execution(args.jobs);
    c
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Validate { file } => {
            let g = read_tg(&file)?;
            let violations = g.validate();
            if !violations.is_empty() {
                let list: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
                return Err(Failure::Check(list.join("\n")));
            }
            emit(&format!(
                "valid: {} vertices, {} edges, {}, {}\n",
                g.vertex_count,
                g.size(),
                if g.is_dag() { "acyclic" } else { "cyclic" },
                if g.is_trimmed() { "trimmed" } else { "not trimmed" }
            ));
        }
        Command::Eval { file, input, write_once } => {
            let g = read_tg(&file)?;
            let x = parse_input(&input, g.universe_size)?;
            let value = if write_once {
                evaluate_write_once(&g, &x)?
            } else {
                evaluate(&as_dag(g), &x)?
            };
            emit(if value { "1\n" } else { "0\n" });
        }
        Command::Enumerate { file } => {
            let g = as_dag(read_tg(&file)?);
            emit(&print_tt(&enumerate_accepted(&g)?));
        }
        Command::Trim { file } => emit(&print_tg(&trim(&read_tg(&file)?))),
        Command::Normalize { file } => emit(&print_tg(&normalize_singletons(&read_tg(&file)?))),
        Command::ToDag { file } => emit(&print_tg(&to_dag(&read_tg(&file)?))),
        Command::Closure { file } => emit(&print_tg(&closure(&read_tg(&file)?)?)),
        Command::Classify { file } => {
            let c = classify(&read_tg(&file)?)?;
            let order = match &c.adaptive_order {
                Some(o) => o.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "),
                None => "none".into(),
            };
            emit(&format!(
                "streaming: {}\nadaptive: {}\nadaptive_order: {order}\nwrite_once: {}\n",
                c.is_streaming_under_identity_order,
                c.adaptive_order.is_some(),
                c.is_write_once
            ));
        }
        Command::CheckStructure {
            family,
            no_precheck,
            budget,
            file,
        } => {
            let g = read_tg(&file)?;
            let mut opts = StructureOptions::default();
            if no_precheck {
                opts.preconditions = Preconditions::Skip;
            }
            if let Some(b) = budget {
                opts.budget = b;
            }
            let family = match family {
                Family::P3f => StructureFamily::P3Free,
                Family::Clique => StructureFamily::Clique,
            };
            let r = match check_structure(&g, family, opts) {
                Ok(r) => r,
                Err(e @ dcgraph::Error::FamilyPrecondition { .. }) | Err(e @ dcgraph::Error::NotClosed { .. }) => {
                    return Err(Failure::Check(format!("precondition failed: {e}")))
                }
                Err(e) => return Err(e.into()),
            };
            let mut out = format!(
                "family: {}\nedges checked: {}\nprefix states checked: {}\nviolations: {}\n",
                r.family,
                r.edges_checked,
                r.states_checked,
                r.violations.len()
            );
            for v in &r.violations {
                writeln!(out, "  {v}").unwrap();
            }
            emit(&out);
            if !r.passed() {
                return Err(Failure::Check(format!("{} violation(s)", r.violations.len())));
            }
        }
        Command::Gen { which } => gen(which)?,
        Command::Bp { which } => bp(which)?,
        Command::Mindc {
            function,
            max_edges,
            search,
            witness,
        } => {
            let f = read_tt(&function)?;
            let config = search_config(max_edges, &search);
            let r = with_jobs(search.jobs, || min_dc(&f, &config))??;
            let opt = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
            let status = match r.status {
                SearchStatus::Found => "found",
                SearchStatus::NotFound => "not_found",
                SearchStatus::BudgetExceeded => "budget_exceeded",
            };
            emit(&format!(
                "target_sets {}\nuniverse {}\nmax_edges {max_edges}\nlabel_cap {}\nexact {}\nstatus {status}\nminimal_size {}\nexhausted_up_to {}\ncandidates {}\npruned {}\nevaluated {}\n",
                f.len(),
                f.universe_size(),
                r.label_cap,
                r.exact,
                opt(r.minimal_size),
                opt(r.exhausted_up_to),
                r.stats.candidates,
                r.stats.pruned,
                r.stats.evaluated
            ));
            if let (Some(path), Some(w)) = (witness, &r.witness) {
                write_file(&path, &print_tg(w))?;
            }
            if r.status == SearchStatus::BudgetExceeded {
                return Err(Failure::Check("candidate budget exceeded; result is partial".into()));
            }
        }
        Command::VerifyUniform {
            function,
            max_edges,
            search,
        } => {
            let f = read_tt(&function)?;
            let config = search_config(max_edges.unwrap_or(f.len()), &search);
            let r = with_jobs(search.jobs, || verify_uniform_hardness(&f, &config))??;
            let mut out = String::new();
            for (sub, verdict) in &r.verdicts {
                let sets: Vec<String> = sub.iter().map(|s| s.to_bitstring(f.universe_size())).collect();
                let sets = if sets.is_empty() { "-".into() } else { sets.join(",") };
                let verdict = match verdict {
                    SubfamilyVerdict::Hard => format!("hard {}", sub.len()),
                    SubfamilyVerdict::NotHard { minimal_size } => format!("not_hard {minimal_size} < {}", sub.len()),
                    SubfamilyVerdict::Unverified { exhausted_up_to } => format!(
                        "unverified exhausted_up_to {}",
                        exhausted_up_to.map_or("-".to_string(), |k| k.to_string())
                    ),
                };
                writeln!(out, "{sets} {verdict}").unwrap();
            }
            writeln!(out, "subfamilies {}", r.subfamilies_total).unwrap();
            writeln!(out, "violations {}", r.violations().count()).unwrap();
            writeln!(out, "unverified {}", r.unverified().count()).unwrap();
            writeln!(out, "uniformly_hard {}", r.uniformly_hard()).unwrap();
            emit(&out);
            if !r.uniformly_hard() {
                return Err(Failure::Check("not verified uniformly hard".into()));
            }
        }
        Command::Report { family, n } => {
            let family: ReportFamily = family.parse()?;
            let mut out = format!("{}\n", ReportRow::HEADER);
            for n in n {
                writeln!(out, "{}", upper_bound_report(&family, n)?).unwrap();
            }
            emit(&out);
        }
        Command::Dot { file, bp, pairs } => {
            let naming = if pairs { LabelNaming::Pairs } else { LabelNaming::Indices };
            let text = if bp {
                export_bp_dot(&read_nbp(&file)?, naming)?
            } else {
                export_dot(&read_tg(&file)?, naming)?
            };
            emit(&text);
        }
        Command::Random { which, seed } => {
            let mut rng = random::rng(seed);
            let text = match which {
                RandomKind::Tg {
                    universe,
                    vertices,
                    edges,
                    dag,
                } => {
                    if vertices < 1 + dag as usize {
                        return Err(Failure::Usage("too few vertices".into()));
                    }
                    let g = if dag {
                        random::random_trimmed_dag(&mut rng, universe, vertices, edges, 0.3)
                    } else {
                        random::random_graph(&mut rng, universe, vertices, edges, 0.3)
                    };
                    print_tg(&g)
                }
                RandomKind::Nbp {
                    vars,
                    depth,
                    width,
                    monotone,
                } => {
                    if vars == 0 || width == 0 {
                        return Err(Failure::Usage("--vars and --width must be positive".into()));
                    }
                    print_nbp(&random::random_bp(&mut rng, vars, depth, width, 0.5, monotone))
                }
                RandomKind::Tt { vars } => {
                    if vars > 20 {
                        return Err(Failure::Usage("--vars is limited to 20".into()));
                    }
                    print_tt(&random::random_family(&mut rng, vars, 0.3))
                }
                RandomKind::Cnf { vars, clauses } => {
                    if vars == 0 {
                        return Err(Failure::Usage("--vars must be positive".into()));
                    }
                    print_dimacs(&random::random_cnf(&mut rng, vars, clauses, 3))
                }
            };
            emit(&text);
        }
    }
    Ok(())
}

fn gen(which: Gen) -> Outcome {
    let g = match which {
        Gen::Xor { n } => xor_graph(n)?,
        Gen::Thr { n, k } => threshold_graph(n, k)?,
        Gen::Slice { n, k } => slice_graph(n, k)?,
        Gen::Sym { n, counts } => {
            let counts: BTreeSet<usize> = if counts.is_empty() {
                BTreeSet::new()
            } else {
                counts
                    .split(',')
                    .map(|c| c.parse().map_err(|_| Failure::Usage(format!("bad count `{c}`"))))
                    .collect::<Outcome<_>>()?
            };
            symmetric_graph(n, &counts)?
        }
        Gen::Eq { n } => eq_graph(n)?,
        Gen::Clique { n } => clique_indicator_graph(n)?,
        Gen::NotP3f { n } => not_p3f_graph(n)?,
        Gen::P3fBp { n } => {
            emit(&print_nbp(&p3f_branching_program(n)?));
            return Ok(());
        }
        Gen::FromCnf { file } => {
            let (g, x) = sat_reduction(&read_dimacs(&file)?);
            let bits = if x.is_empty() { "-".into() } else { x.to_bitstring() };
            emit(&format!("{}# target {bits}\n", print_tg(&g)));
            return Ok(());
        }
    };
    emit(&print_tg(&g));
    Ok(())
}

fn bp(which: Bp) -> Outcome {
    match which {
        Bp::Eval { file, input } => {
            let b = read_nbp(&file)?;
            let x = parse_input(&input, b.variable_count)?;
            emit(if bp_evaluate(&b, &x)? { "1\n" } else { "0\n" });
        }
        Bp::ToTg { file } => emit(&print_tg(&from_monotone_bp(&read_nbp(&file)?)?)),
        Bp::Gen {
            which: BpGen::P3f { n },
        } => emit(&print_nbp(&p3f_branching_program(n)?)),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(m)) => {
            eprintln!("dcgraph: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("dcgraph: {m}");
            ExitCode::from(2)
        }
    }
}
