use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hardtally_cli::commands::{
    self, CheckDomain, CommandError, CommandOutput, DomainAssertion, Method, Rule, RunConfig,
};
use hardtally_cli::report::OutputFormat;
use hardtally_core::forge::VerifyMode;
use hardtally_core::oracles::OracleBudget;

/// Young, Dodgson, Kemeny and Slater scores and winners, with fast
/// algorithms on dichotomous, single-peaked and single-crossing electorates
/// and exhaustive oracles everywhere else.
#[derive(Parser)]
#[command(name = "hardtally", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a candidate's score under a rule.
    Score {
        #[arg(long, value_enum)]
        rule: RuleArg,
        #[arg(long)]
        candidate: String,
        #[arg(long, value_enum, default_value = "none")]
        domain: DomainArg,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
        /// Group bound for the (2,k) rules.
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Election file (.elx).
        file: PathBuf,
    },
    /// Compute the winner set under a rule.
    Winner {
        #[arg(long, value_enum)]
        rule: RuleArg,
        #[arg(long, value_enum, default_value = "none")]
        domain: DomainArg,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
        #[command(flatten)]
        budget: BudgetArgs,
        file: PathBuf,
    },
    /// Check membership of an election in a restricted domain.
    Check {
        #[arg(long, value_enum)]
        domain: CheckDomainArg,
        /// Group bound for the k-chotomous check.
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
        file: PathBuf,
    },
    /// Generate a reduction instance from one or two graphs.
    Forge {
        /// One of: youngscore, strongyoungscore, youngranking,
        /// strongyoungranking, strongyoungwinner, trichotomous-youngwinner.
        #[arg(long)]
        kind: String,
        /// Graph file for G.
        #[arg(long)]
        graph: PathBuf,
        /// Graph file for H (ranking and winner kinds).
        #[arg(long)]
        graph2: Option<PathBuf>,
        /// Election output path (.elx).
        #[arg(long)]
        out: PathBuf,
        /// Claims sidecar output path; defaults to the election path with
        /// a .claims.json suffix.
        #[arg(long)]
        claims: Option<PathBuf>,
    },
    /// Re-check a forged instance against its claims sidecar.
    VerifyForge {
        #[arg(long, value_enum, default_value = "full")]
        mode: ModeArg,
        /// Election file (.elx).
        election: PathBuf,
        /// Claims sidecar (.claims.json).
        claims: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Run the acceptance suite and print one line per criterion.
    Selftest,
}

#[derive(Clone, Copy, ValueEnum)]
enum RuleArg {
    Young,
    Strongyoung,
    Dodgson,
    Weakdodgson,
    Kemeny,
    Kemeny22,
    Kemeny2m,
    Slater,
    Slater2k,
}

impl From<RuleArg> for Rule {
    fn from(arg: RuleArg) -> Rule {
        match arg {
            RuleArg::Young => Rule::Young,
            RuleArg::Strongyoung => Rule::StrongYoung,
            RuleArg::Dodgson => Rule::Dodgson,
            RuleArg::Weakdodgson => Rule::WeakDodgson,
            RuleArg::Kemeny => Rule::Kemeny,
            RuleArg::Kemeny22 => Rule::Kemeny22,
            RuleArg::Kemeny2m => Rule::Kemeny2m,
            RuleArg::Slater => Rule::Slater,
            RuleArg::Slater2k => Rule::Slater2k,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum DomainArg {
    None,
    Dichotomous,
    SinglePeaked,
    SingleCrossing,
}

impl From<DomainArg> for DomainAssertion {
    fn from(arg: DomainArg) -> DomainAssertion {
        match arg {
            DomainArg::None => DomainAssertion::None,
            DomainArg::Dichotomous => DomainAssertion::Dichotomous,
            DomainArg::SinglePeaked => DomainAssertion::SinglePeaked,
            DomainArg::SingleCrossing => DomainAssertion::SingleCrossing,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckDomainArg {
    Dichotomous,
    KChotomous,
    SinglePeaked,
    SingleCrossing,
}

impl From<CheckDomainArg> for CheckDomain {
    fn from(arg: CheckDomainArg) -> CheckDomain {
        match arg {
            CheckDomainArg::Dichotomous => CheckDomain::Dichotomous,
            CheckDomainArg::KChotomous => CheckDomain::KChotomous,
            CheckDomainArg::SinglePeaked => CheckDomain::SinglePeaked,
            CheckDomainArg::SingleCrossing => CheckDomain::SingleCrossing,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Fast,
    Exact,
}

impl From<MethodArg> for Method {
    fn from(arg: MethodArg) -> Method {
        match arg {
            MethodArg::Auto => Method::Auto,
            MethodArg::Fast => Method::Fast,
            MethodArg::Exact => Method::Exact,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

impl From<FormatArg> for OutputFormat {
    fn from(arg: FormatArg) -> OutputFormat {
        match arg {
            FormatArg::Text => OutputFormat::Text,
            FormatArg::Json => OutputFormat::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Full,
    WitnessOnly,
}

#[derive(Args)]
struct BudgetArgs {
    /// Largest voter count for exhaustive subset enumeration.
    #[arg(long, default_value_t = 18)]
    max_subset_voters: usize,
    /// Largest candidate count for consensus-order enumeration.
    #[arg(long, default_value_t = 7)]
    max_order_candidates: usize,
    /// Largest state count for edit-plan searches.
    #[arg(long, default_value_t = 5_000_000)]
    max_search_states: usize,
}

impl From<&BudgetArgs> for OracleBudget {
    fn from(args: &BudgetArgs) -> OracleBudget {
        OracleBudget {
            max_subset_voters: args.max_subset_voters,
            max_order_candidates: args.max_order_candidates,
            max_search_states: args.max_search_states,
        }
    }
}

fn read(path: &Path) -> Result<String, CommandError> {
    std::fs::read_to_string(path)
        .map_err(|e| CommandError::Io(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, contents: &str) -> Result<(), CommandError> {
    std::fs::write(path, contents)
        .map_err(|e| CommandError::Io(format!("cannot write {}: {e}", path.display())))
}

fn dispatch(cli: Cli) -> Result<CommandOutput, CommandError> {
    match cli.command {
        Command::Score {
            rule,
            candidate,
            domain,
            method,
            k,
            format,
            budget,
            file,
        } => {
            let config = RunConfig {
                rule: rule.into(),
                domain: domain.into(),
                method: method.into(),
                k,
                budget: (&budget).into(),
                format: format.into(),
            };
            commands::run_score(&config, &candidate, &read(&file)?)
        }
        Command::Winner {
            rule,
            domain,
            method,
            k,
            format,
            budget,
            file,
        } => {
            let config = RunConfig {
                rule: rule.into(),
                domain: domain.into(),
                method: method.into(),
                k,
                budget: (&budget).into(),
                format: format.into(),
            };
            commands::run_winner(&config, &read(&file)?)
        }
        Command::Check {
            domain,
            k,
            format,
            file,
        } => commands::run_check(domain.into(), k, format.into(), &read(&file)?),
        Command::Forge {
            kind,
            graph,
            graph2,
            out,
            claims,
        } => {
            let graph_text = read(&graph)?;
            let graph2_text = graph2.as_deref().map(read).transpose()?;
            let (elx, claims_json, summary) =
                commands::run_forge(&kind, &graph_text, graph2_text.as_deref())?;
            let claims_path = claims.unwrap_or_else(|| {
                let mut p = out.as_os_str().to_owned();
                p.push(".claims.json");
                PathBuf::from(p)
            });
            write(&out, &elx)?;
            let rendered =
                serde_json::to_string_pretty(&claims_json).expect("claims are serializable");
            write(&claims_path, &format!("{rendered}\n"))?;
            Ok(CommandOutput {
                text: format!(
                    "{summary}wrote {} and {}\n",
                    out.display(),
                    claims_path.display()
                ),
                exit_code: 0,
            })
        }
        Command::VerifyForge {
            mode,
            election,
            claims,
            budget,
        } => {
            let mode = match mode {
                ModeArg::Full => VerifyMode::Full,
                ModeArg::WitnessOnly => VerifyMode::WitnessOnly,
            };
            commands::run_verify_forge(mode, &read(&election)?, &read(&claims)?, &(&budget).into())
        }
        Command::Selftest => {
            let report = hardtally_cli::selftest::run();
            Ok(CommandOutput {
                text: report.render(),
                exit_code: if report.passed() { 0 } else { 4 },
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(output) => {
            print!("{}", output.text);
            ExitCode::from(output.exit_code)
        }
        Err(error) => {
            eprintln!("{}", error.message());
            ExitCode::from(error.exit_code())
        }
    }
}
