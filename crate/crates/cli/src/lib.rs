//! Argument parsing and command dispatch for the `mpart` binary.
//!
//! [`run`] never exits the process; it returns the exit status together with
//! what would be written to stdout and stderr, so the commands can be driven
//! from tests.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use itertools::Itertools;
use thiserror::Error;

use mpart::random::{
    check_neighborhood_lemma, exact_membership_probability, plant_at_first, sample_type, CheckMode, Experiment,
    LemmaId, LemmaReport, Model, RandomError, RandomSpec, Scenario, Witness,
};
use mpart::solver::{obstruction_forms, SearchOutcome, SolverError};
use mpart::{
    claim2_embedding, extend_embedding, find_embedding, find_subtype_copy, is_embedding, obstruction_graph,
    parse_graph, parse_matrix, reduction_graph, restricted_unsat_check, rho_theorem1, rho_theorem3, write_graph,
    write_type, ConstructionError, ParseError, PartitionMatrix, Rational, SolverConfig, TypeGraph,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error(transparent)]
    Random(#[from] RandomError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Limit(SolverError),
}

impl CliError {
    fn status(&self) -> i32 {
        match self {
            CliError::Limit(_) | CliError::Random(RandomError::TooLarge { .. }) => EXIT_LIMIT,
            _ => EXIT_INPUT,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "mpart", version, about = "Matrix partitions, types and their obstructions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModelArg {
    General,
    Friendly,
}

impl From<ModelArg> for Model {
    fn from(m: ModelArg) -> Self {
        match m {
            ModelArg::General => Model::General,
            ModelArg::Friendly => Model::Friendly,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RhoArg {
    Thm1,
    Thm3,
}

impl RhoArg {
    fn pattern(self) -> TypeGraph {
        match self {
            RhoArg::Thm1 => rho_theorem1(),
            RhoArg::Thm3 => rho_theorem3(),
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum LemmaArg {
    Nsize,
    Nsize2,
    Nsize3,
}

impl From<LemmaArg> for LemmaId {
    fn from(l: LemmaArg) -> Self {
        match l {
            LemmaArg::Nsize => LemmaId::Nsize,
            LemmaArg::Nsize2 => LemmaId::Nsize2,
            LemmaArg::Nsize3 => LemmaId::Nsize3,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sample a random type and write it in matrix format.
    GenType {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        model: ModelArg,
        #[arg(long)]
        seed: u64,
        /// Overwrite the first vertices of each colour with this pattern.
        #[arg(long, value_enum)]
        plant: Option<RhoArg>,
        /// Write the type here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that no star joins two rows of the same diagonal entry.
    CheckFriendly {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Search for an embedding of a graph into a type.
    Solve {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long = "type")]
        type_file: PathBuf,
        #[arg(long)]
        node_limit: Option<u64>,
    },
    /// List the minimal obstructions of a matrix up to a number of vertices.
    Obstructions {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        max_n: usize,
    },
    /// Check a common-neighbourhood bound on a given or sampled type.
    Lemma {
        #[arg(long, value_enum)]
        which: LemmaArg,
        #[arg(long, conflicts_with = "sample", required_unless_present = "sample")]
        type_file: Option<PathBuf>,
        /// Sample types of this size (friendly model for nsize/nsize2, general for nsize3).
        #[arg(long, requires = "seeds")]
        sample: Option<usize>,
        /// Number of sampled types, seeds 0..k.
        #[arg(long)]
        seeds: Option<u64>,
        /// Check this many random tuples per part instead of all of them.
        #[arg(long)]
        tuples: Option<usize>,
    },
    /// Build the path-gadget graph for a planted copy in a random friendly type.
    ConstructObstruction {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        seed: u64,
        /// Validate every deleted-vertex embedding and the restricted unsatisfiability.
        #[arg(long)]
        check: bool,
    },
    /// Pad a graph with the common neighbourhood of a pattern copy in a type.
    Reduce {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long = "type")]
        type_file: PathBuf,
        #[arg(long, value_enum, default_value = "thm3")]
        rho: RhoArg,
        /// If the graph embeds into the pattern, confirm the lifted embedding.
        #[arg(long)]
        verify: bool,
    },
    /// Exact membership probability for a scenario file.
    Prob {
        #[arg(long)]
        scenario: PathBuf,
    },
    /// Run a Monte Carlo experiment file.
    Experiment {
        #[arg(long)]
        spec: PathBuf,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { status: EXIT_INPUT, stdout: String::new(), stderr: text }
            } else {
                Outcome { status: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    let mut out = String::new();
    match dispatch(cli.command, &mut out) {
        Ok(status) => Outcome { status, stdout: out, stderr: String::new() },
        Err(e) => Outcome { status: e.status(), stdout: out, stderr: format!("error: {e}\n") },
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

fn read_matrix(path: &Path) -> Result<PartitionMatrix, CliError> {
    parse_matrix(&read(path)?).map_err(|source| CliError::Parse { path: path.to_owned(), source })
}

fn read_graph(path: &Path) -> Result<mpart::SimpleGraph, CliError> {
    parse_graph(&read(path)?).map_err(|source| CliError::Parse { path: path.to_owned(), source })
}

fn kv(out: &mut String, key: &str, value: impl std::fmt::Display) {
    let _ = writeln!(out, "{key}: {value}");
}

fn status_for(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_PROPERTY_FAILED
    }
}

fn dispatch(command: Command, out: &mut String) -> Result<i32, CliError> {
    match command {
        Command::GenType { n, model, seed, plant, out: path } => {
            let model = Model::from(model);
            let mut tau = sample_type(&RandomSpec::new(n, model, seed)?);
            kv(out, "n", n);
            kv(out, "model", model.name());
            kv(out, "seed", seed);
            if let Some(p) = plant {
                let (planted, copy) = plant_at_first(&tau, &p.pattern())?;
                tau = planted;
                kv(out, "planted", if p == RhoArg::Thm1 { "thm1" } else { "thm3" });
                kv(out, "copy", copy.image.iter().join(" "));
            }
            let text = write_type(&tau);
            match path {
                Some(path) => {
                    std::fs::write(&path, &text).map_err(|source| CliError::Io { path: path.clone(), source })?;
                    kv(out, "out", path.display());
                }
                None => out.push_str(&text),
            }
            Ok(EXIT_OK)
        }
        Command::CheckFriendly { matrix } => {
            let m = read_matrix(&matrix)?;
            let friendly = m.is_friendly();
            let rows = m.block_row_distinctness();
            kv(out, "dim", m.dim());
            kv(out, "friendly", friendly);
            kv(out, "a_rows_distinct", rows.a_rows_distinct);
            kv(out, "b_rows_distinct", rows.b_rows_distinct);
            kv(out, "no_three_rows_equal_a", rows.no_three_rows_equal_a);
            kv(out, "no_three_rows_equal_b", rows.no_three_rows_equal_b);
            Ok(status_for(friendly))
        }
        Command::Solve { graph, type_file, node_limit } => {
            let g = read_graph(&graph)?;
            let tau = TypeGraph::from(&read_matrix(&type_file)?);
            let mut cfg = SolverConfig::default();
            if let Some(limit) = node_limit {
                cfg = cfg.with_node_limit(limit);
            }
            let report = find_embedding(&g, &tau, &cfg);
            let status = match &report.outcome {
                SearchOutcome::Found(psi) => {
                    kv(out, "embedding", psi.image().iter().join(" "));
                    EXIT_OK
                }
                SearchOutcome::NoEmbedding => {
                    kv(out, "embedding", "none");
                    EXIT_OK
                }
                SearchOutcome::LimitExceeded => {
                    kv(out, "embedding", "unknown");
                    EXIT_LIMIT
                }
            };
            kv(out, "nodes", report.stats.nodes);
            kv(out, "max_depth", report.stats.max_depth);
            Ok(status)
        }
        Command::Obstructions { matrix, max_n } => {
            let tau = TypeGraph::from(&read_matrix(&matrix)?);
            let forms = obstruction_forms(&tau, max_n).map_err(CliError::Limit)?;
            kv(out, "max_n", max_n);
            kv(out, "count", forms.len());
            for f in &forms {
                let g = f.to_graph();
                let edges = g.edges().map(|(u, v)| format!("{u}-{v}")).join(",");
                let _ = writeln!(out, "obstruction: {} {} {}", f.order(), f.bitstring(), edges);
            }
            Ok(EXIT_OK)
        }
        Command::Lemma { which, type_file, sample, seeds, tuples } => {
            let lemma = LemmaId::from(which);
            let mode = |seed| match tuples {
                Some(k) => CheckMode::Sampled { tuples: k, seed },
                None => CheckMode::Exhaustive,
            };
            kv(out, "lemma", lemma.name());
            kv(out, "threshold_i", lemma.thresholds().0);
            kv(out, "threshold_ii", lemma.thresholds().1);
            if let Some(path) = type_file {
                let tau = TypeGraph::from(&read_matrix(&path)?);
                let report = check_neighborhood_lemma(&tau, lemma, mode(0))?;
                write_lemma_report(out, &report);
                Ok(status_for(report.part_i_holds && report.part_ii_holds))
            } else {
                let n = sample.expect("clap enforces --type-file or --sample");
                let k = seeds.expect("clap enforces --seeds with --sample");
                let model = if lemma == LemmaId::Nsize3 { Model::General } else { Model::Friendly };
                let (mut holds_i, mut holds_ii) = (0u64, 0u64);
                for seed in 0..k {
                    let tau = sample_type(&RandomSpec::new(n, model, seed)?);
                    let report = check_neighborhood_lemma(&tau, lemma, mode(seed))?;
                    holds_i += report.part_i_holds as u64;
                    holds_ii += report.part_ii_holds as u64;
                    let _ = writeln!(
                        out,
                        "seed {seed}: part_i={} part_ii={} min_i={} max_ii={}",
                        report.part_i_holds,
                        report.part_ii_holds,
                        witness_size(&report.worst_i),
                        witness_size(&report.worst_ii),
                    );
                }
                kv(out, "model", model.name());
                kv(out, "n", n);
                kv(out, "seeds", k);
                kv(out, "part_i_holds", holds_i);
                kv(out, "part_ii_holds", holds_ii);
                Ok(status_for(holds_i == k && holds_ii == k))
            }
        }
        Command::ConstructObstruction { n, m, seed, check } => {
            let tau = sample_type(&RandomSpec::new(n, Model::Friendly, seed)?);
            let (tau, copy) = plant_at_first(&tau, &rho_theorem1())?;
            let inst = obstruction_graph(&tau, &copy, m)?;
            kv(out, "n", n);
            kv(out, "m", m);
            kv(out, "seed", seed);
            kv(out, "sigma_size", inst.sigma.len());
            kv(out, "order", inst.graph.order());
            let mut ok = true;
            if check {
                let claim2 = (1..=m)
                    .all(|i| claim2_embedding(&inst, i).map(|(g, psi)| is_embedding(&g, &tau, &psi)).unwrap_or(false));
                let unsat = restricted_unsat_check(&inst);
                kv(out, "claim2_valid", claim2);
                kv(out, "restricted_unsat", unsat);
                ok = claim2 && unsat;
            }
            out.push_str("instance:\n");
            out.push_str(&inst.to_text());
            Ok(status_for(ok))
        }
        Command::Reduce { graph, type_file, rho, verify } => {
            let g = read_graph(&graph)?;
            let tau = TypeGraph::from(&read_matrix(&type_file)?);
            let pattern = rho.pattern();
            let copy = find_subtype_copy(&tau, &pattern)
                .ok_or_else(|| CliError::Input("the type contains no copy of the pattern".into()))?;
            let inst = reduction_graph(&g, &tau, &copy)?;
            kv(out, "copy", copy.image.iter().join(" "));
            kv(out, "sigma_size", inst.sigma.len());
            let mut ok = true;
            if verify {
                match find_embedding(&g, &pattern, &SolverConfig::default()).outcome {
                    SearchOutcome::Found(psi) => {
                        let lifted = extend_embedding(&psi, &inst)?;
                        ok = is_embedding(&inst.output, &tau, &lifted);
                        kv(out, "source_embeds", true);
                        kv(out, "lifted_valid", ok);
                    }
                    SearchOutcome::NoEmbedding => kv(out, "source_embeds", false),
                    SearchOutcome::LimitExceeded => unreachable!("no node limit configured"),
                }
            }
            out.push_str("graph:\n");
            out.push_str(&write_graph(&inst.output));
            Ok(status_for(ok))
        }
        Command::Prob { scenario } => {
            let s = Scenario::parse(&read(&scenario)?)?;
            let p = exact_membership_probability::<Rational>(&s)?;
            kv(out, "probability", p.value);
            kv(out, "admissible", p.admissible);
            kv(out, "total", p.total);
            kv(out, "decimal", format!("{:.6}", p.admissible as f64 / p.total as f64));
            Ok(EXIT_OK)
        }
        Command::Experiment { spec } => {
            let e = Experiment::parse(&read(&spec)?)?;
            let summaries = e.run()?;
            out.push_str(&e.render(&summaries));
            Ok(status_for(e.passes(&summaries)))
        }
    }
}

fn witness_size(w: &Option<Witness>) -> String {
    w.as_ref().map_or_else(|| "-".into(), |w| w.size.to_string())
}

fn write_lemma_report(out: &mut String, r: &LemmaReport) {
    kv(out, "n", r.n);
    kv(out, "part_i_holds", r.part_i_holds);
    kv(out, "part_ii_holds", r.part_ii_holds);
    kv(out, "part_i_checked", r.part_i_checked);
    kv(out, "part_ii_checked", r.part_ii_checked);
    for (key, w) in [("worst_i", &r.worst_i), ("worst_ii", &r.worst_ii)] {
        match w {
            Some(w) => kv(out, key, format!("{} [{}]", w.size, w.vertices.iter().join(" "))),
            None => kv(out, key, "-"),
        }
    }
}
