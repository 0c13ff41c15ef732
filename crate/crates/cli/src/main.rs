use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use conjlab_core::classgraph::{build_gamma, divisor_pair, is_primitive};
use conjlab_core::families::FamilyRequest;
use conjlab_core::groups::DEFAULT_ORDER_CAP;
use conjlab_core::report::analyze;
use conjlab_core::specfile::{parse_group_spec, GroupSpecFile};
use conjlab_core::verify::{run_all, Status, VerifyOptions, DEFAULT_SEED};
use conjlab_core::Error;

/// Conjugacy class sizes, cover digraphs and SP-group recognition.
#[derive(Parser)]
#[command(name = "conjlab", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a group-spec file; prints a text report.
    Analyze {
        spec: PathBuf,
        /// Also write the JSON report here.
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
        /// Also write the cover digraph of N(G) here, as DOT.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
        #[arg(long, env = "CONJLAB_MAX_ORDER", default_value_t = DEFAULT_ORDER_CAP)]
        max_order: usize,
    },
    /// Write a group-spec file for a named family, e.g. `sl2 7` or `type3 7 3`.
    ///
    /// Families: sym n, alt n, dihedral n, cyclic n, elem_abelian p k,
    /// quaternion, heisenberg p, sl2 q, gl2 q, agl1 q, type3 p d, remark p,
    /// product "<family>" "<family>", regular "<family>".
    Construct {
        family: String,
        params: Vec<String>,
        #[arg(short = 'o', long = "output", value_name = "PATH")]
        output: PathBuf,
        #[arg(long, env = "CONJLAB_MAX_ORDER", default_value_t = DEFAULT_ORDER_CAP)]
        max_order: usize,
    },
    /// Cover digraph of a comma-separated integer set.
    Gamma {
        set: String,
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
    /// Run every verification suite over the bundled corpus.
    Verify {
        /// Extra group-spec files plus an optional expectations.json.
        #[arg(long, value_name = "DIR")]
        corpus: Option<PathBuf>,
        /// Generator file for the order-2160 cover of PSL(2,9).
        #[arg(long, value_name = "PATH")]
        schur_cover: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Worker threads; defaults to available parallelism.
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long, env = "CONJLAB_MAX_ORDER", default_value_t = DEFAULT_ORDER_CAP)]
        max_order: usize,
    },
}

fn write_file(path: &Path, contents: &[u8]) -> Result<(), Error> {
    std::fs::write(path, contents).map_err(|e| Error::Io {
        path: path.display().to_string(),
        source: e,
    })
}

fn read_file(path: &Path) -> Result<Vec<u8>, Error> {
    std::fs::read(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        source: e,
    })
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Analyze {
            spec,
            json,
            dot,
            max_order,
        } => {
            let stem = spec.file_stem().and_then(|s| s.to_str()).unwrap_or("group").to_string();
            let g = parse_group_spec(&read_file(&spec)?, &stem, max_order)?;
            let a = analyze(&g)?;
            print!("{}", a.to_text(&g));
            if let Some(path) = json {
                write_file(&path, a.to_json().as_bytes())?;
            }
            if let Some(path) = dot {
                write_file(&path, a.report.gamma.to_dot().as_bytes())?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Construct {
            family,
            params,
            output,
            max_order,
        } => {
            let mut args = vec![family.as_str()];
            args.extend(params.iter().map(String::as_str));
            let request = FamilyRequest::parse(&args)?;
            let g = request.build(max_order)?;
            write_file(&output, GroupSpecFile::from_group(&g)?.to_json().as_bytes())?;
            println!("wrote {} (order {}) to {}", g.name(), g.len(), output.display());
            Ok(ExitCode::SUCCESS)
        }
        Command::Gamma { set, dot } => {
            let theta = set
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse::<u64>()
                        .map_err(|_| Error::invalid(format!("not a positive integer: {s:?}")))
                })
                .collect::<Result<Vec<u64>, Error>>()?;
            let gamma = build_gamma(&theta)?;
            let primitive = is_primitive(&theta)?;
            if primitive != divisor_pair(&theta)?.is_none() {
                return Err(Error::Inconsistent(format!("primitivity checks disagree on {theta:?}")));
            }
            if gamma.edges.is_empty() {
                println!("edges: none");
            }
            for [a, b] in &gamma.edges {
                println!("{a} -> {b}");
            }
            println!("primitive: {primitive}");
            if let Some(path) = dot {
                write_file(&path, gamma.to_dot().as_bytes())?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            corpus,
            schur_cover,
            seed,
            threads,
            max_order,
        } => {
            if let Some(n) = threads {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global()
                    .map_err(|e| Error::invalid(format!("thread pool: {e}")))?;
            }
            let options = VerifyOptions {
                corpus_dir: corpus,
                schur_cover,
                seed,
                cap: max_order,
            };
            let reports = run_all(&options)?;
            let mut totals = [0usize; 3];
            for r in &reports {
                print!("{r}");
                for (i, s) in [Status::Pass, Status::Fail, Status::Skipped].into_iter().enumerate() {
                    totals[i] += r.count(s);
                }
            }
            println!(
                "total: {} passed, {} failed, {} skipped",
                totals[0], totals[1], totals[2]
            );
            Ok(if totals[1] == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // clap reports usage errors with 2, which is reserved for failed verification.
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
