use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use charlab_core::catalog::report::{write_report, GroupSummary, ReportDocument, ReportFormat};
use charlab_core::catalog::{bundled_catalog, parse_recipe, read_group_file, GroupRecipe};
use charlab_core::chartab::character_table;
use charlab_core::group::FiniteGroup;
use charlab_core::verify::{GroupContext, VerificationReport, VerifierRegistry};
use charlab_core::{Error, Limits};

mod analyze;

#[derive(Parser)]
#[command(name = "charlab", version, about = "Character tables and GVZ-group checks for finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    config: Config,
}

#[derive(Args)]
struct Config {
    /// Largest group order to build.
    #[arg(long, global = true, env = "CHARLAB_MAX_ORDER", default_value_t = 2048,
          value_parser = clap::value_parser!(u64).range(1..))]
    max_order: u64,
    /// Node budget for isomorphism and isoclinism searches.
    #[arg(long, global = true, default_value_t = 10_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    iso_search_cap: u64,
    /// Largest normal subgroup lattice to enumerate.
    #[arg(long, global = true, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
    normal_lattice_cap: u64,
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for scans (default: available parallelism).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: Option<u64>,
}

impl Config {
    fn limits(&self) -> Limits {
        Limits {
            max_order: self.max_order as usize,
            iso_search_cap: self.iso_search_cap,
            normal_lattice_cap: self.normal_lattice_cap as usize,
            ..Limits::default()
        }
    }

    fn format(&self) -> ReportFormat {
        match self.output {
            Output::Text => ReportFormat::Text,
            Output::Structured => ReportFormat::Structured,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Structured,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// A bundled group name or a recipe such as `dihedral:8`, `heisenberg:4`, `D8 x C2`.
    #[arg(long)]
    recipe: Option<String>,
    /// A `.grp` file.
    #[arg(long)]
    file: Option<PathBuf>,
}

impl Input {
    fn recipe(&self) -> Result<GroupRecipe, Error> {
        match (&self.recipe, &self.file) {
            (Some(r), _) => parse_recipe(r),
            (None, Some(f)) => read_group_file(f),
            (None, None) => unreachable!("clap requires one input"),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the character table.
    Table(Input),
    /// Classify a group: center, derived subgroup, degrees, GVZ evidence.
    Analyze(Input),
    /// Run verifiers on one group.
    Verify {
        #[command(flatten)]
        input: Input,
        /// Theorem id or alias; repeat to select several (default: all).
        #[arg(long = "theorem")]
        theorems: Vec<String>,
        /// Corrupt one character value before verifying.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Run verifiers on every group of a catalog.
    Scan {
        /// Directory of `.grp` files.
        #[arg(required_unless_present = "bundled", conflicts_with = "bundled")]
        dir: Option<PathBuf>,
        /// Scan the bundled catalog.
        #[arg(long)]
        bundled: bool,
        #[arg(long = "theorem")]
        theorems: Vec<String>,
    },
}

/// Why a command did not succeed, in exit-code order.
enum Failure {
    Verification,
    Input(Error),
    Cap(Error),
    Internal(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_resource_cap() {
            return Failure::Cap(e);
        }
        match e {
            Error::Parse { .. }
            | Error::Io(_)
            | Error::BadRecipe(_)
            | Error::InvalidPermutation(_)
            | Error::NotAssociative { .. }
            | Error::NoIdentity
            | Error::NoInverse { .. }
            | Error::BadTable(_)
            | Error::UnknownTheorem(_)
            | Error::NeitherNormal
            | Error::NotNormal => Failure::Input(e),
            e => Failure::Internal(e),
        }
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Verification | Failure::Internal(_) => 1,
            Failure::Input(_) => 2,
            Failure::Cap(_) => 3,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Verification => {}
                Failure::Input(e) | Failure::Cap(e) | Failure::Internal(e) => eprintln!("error: {e}"),
            }
            ExitCode::from(f.exit_code())
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let config = &cli.config;
    let limits = config.limits();
    match &cli.command {
        Command::Table(input) => {
            let recipe = input.recipe()?;
            let g = recipe.build(limits.max_order)?;
            let t = character_table(&g)?;
            let text = match config.output {
                Output::Text => format!("{}\n{}", recipe.name, t.render(&g)),
                Output::Structured => analyze::table_json(&recipe.name, &g, &t),
            };
            emit(config, &text)
        }
        Command::Analyze(input) => {
            let recipe = input.recipe()?;
            let g = recipe.build(limits.max_order)?;
            let ctx = GroupContext::new(recipe.name.clone(), g, limits)?;
            let text = match config.output {
                Output::Text => analyze::text(&ctx),
                Output::Structured => analyze::json(&ctx),
            };
            emit(config, &text)
        }
        Command::Verify {
            input,
            theorems,
            inject_fault,
        } => {
            let registry = VerifierRegistry::standard();
            registry.select(theorems)?;
            let recipe = input.recipe()?;
            let g = recipe.build(limits.max_order)?;
            let mut ctx = GroupContext::new(recipe.name.clone(), g, limits)?;
            if *inject_fault {
                ctx = ctx.with_injected_fault();
            }
            let reports = registry.run_selected(theorems, &ctx)?;
            let doc = ReportDocument::new(vec![GroupSummary::new(&ctx, &reports)], reports);
            emit(config, &write_report(&doc, config.format()))?;
            if doc.failures() > 0 {
                return Err(Failure::Verification);
            }
            Ok(())
        }
        Command::Scan { dir, bundled, theorems } => {
            let registry = VerifierRegistry::standard();
            registry.select(theorems)?;
            let jobs: Vec<Job> = if *bundled {
                bundled_catalog().into_iter().map(Job::Recipe).collect()
            } else {
                scan_dir(dir.as_deref().expect("clap requires a directory"))?
            };
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(config.jobs.unwrap_or(0) as usize)
                .build()
                .map_err(|e| Error::Io(e.to_string()))?;
            let results: Vec<ScanResult> =
                pool.install(|| jobs.par_iter().map(|j| scan_one(j, &registry, theorems, limits)).collect());

            let mut groups = Vec::with_capacity(results.len());
            let mut records = Vec::new();
            let mut worst: Option<Failure> = None;
            for r in results {
                groups.push(r.summary);
                records.extend(r.reports);
                if let Some(e) = r.error {
                    let f = Failure::from(e);
                    if worst.as_ref().is_none_or(|w| f.exit_code() > w.exit_code()) {
                        worst = Some(f);
                    }
                }
            }
            let doc = ReportDocument::new(groups, records);
            emit(config, &write_report(&doc, config.format()))?;
            if doc.failures() > 0 {
                return Err(Failure::Verification);
            }
            match worst {
                // already recorded in the report
                Some(f) => Err(match f {
                    Failure::Input(_) => Failure::Input(Error::Io("some groups could not be read".into())),
                    Failure::Cap(_) => Failure::Cap(Error::Io("some groups exceeded a resource cap".into())),
                    other => other,
                }),
                None => Ok(()),
            }
        }
    }
}

enum Job {
    Recipe(GroupRecipe),
    Unreadable { name: String, error: Error },
}

struct ScanResult {
    summary: GroupSummary,
    reports: Vec<VerificationReport>,
    error: Option<Error>,
}

fn scan_dir(dir: &Path) -> Result<Vec<Job>, Failure> {
    let entries = std::fs::read_dir(dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
    let mut paths: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "grp"))
        .collect();
    paths.sort();
    Ok(paths
        .into_iter()
        .map(|p| match read_group_file(&p) {
            Ok(r) => Job::Recipe(r),
            Err(error) => Job::Unreadable {
                name: p.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default(),
                error,
            },
        })
        .collect())
}

fn scan_one(job: &Job, registry: &VerifierRegistry, theorems: &[String], limits: Limits) -> ScanResult {
    let failed = |name: &str, order: usize, error: Error| ScanResult {
        summary: GroupSummary::errored(name, order, &error),
        reports: Vec::new(),
        error: Some(error),
    };
    let recipe = match job {
        Job::Recipe(r) => r,
        Job::Unreadable { name, error } => return failed(name, 0, error.clone()),
    };
    let g: FiniteGroup = match recipe.build(limits.max_order) {
        Ok(g) => g,
        Err(e) => return failed(&recipe.name, recipe.expected_order().unwrap_or(0), e),
    };
    let order = g.order();
    let result = GroupContext::new(recipe.name.clone(), g, limits)
        .and_then(|ctx| registry.run_selected(theorems, &ctx).map(|reports| (ctx, reports)));
    match result {
        Ok((ctx, reports)) => ScanResult {
            summary: GroupSummary::new(&ctx, &reports),
            reports,
            error: None,
        },
        Err(e) => failed(&recipe.name, order, e),
    }
}

fn emit(config: &Config, text: &str) -> Result<(), Failure> {
    match &config.out {
        Some(path) => std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())).into()),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
