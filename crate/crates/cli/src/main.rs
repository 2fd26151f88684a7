//! domkit command line: exact domination numbers, dominion counts,
//! word enumeration, robustness indices and the verification harness.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use domkit::{
    build_family_str, check_structure, composite_report, count_min_words, cross_check,
    enumerate_min_words, prism_formula, solve, verify_explicit_sets, verify_prism_table,
    verify_robustness_tables, DiffReport, RobustnessReport, DEFAULT_BUDGET,
};

/// Exact-domination toolkit for prisms and small graph families.
#[derive(Parser)]
#[command(name = "domkit", version, disable_help_subcommand = true)]
struct Cli {
    /// Cap on brute-force subset tests (fallback: DOMKIT_BUDGET, then 2^31).
    #[arg(long, global = true)]
    budget: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Format {
    /// Emit machine-readable JSON.
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    /// Emit CSV (indices and tables only).
    #[arg(long)]
    csv: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Domination number of a family graph (brute force).
    Gamma {
        spec: String,
        #[command(flatten)]
        format: Format,
    },
    /// Domination number and dominion; optionally list every minimum set.
    Zeta {
        spec: String,
        /// Print each minimum dominating set.
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        format: Format,
    },
    /// Minimum-weight word count for the order-n prism via the transfer
    /// automaton; optionally list the words.
    Words {
        n: usize,
        /// Print each minimum word.
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        format: Format,
    },
    /// Structural survey of all minimum words for the order-n prism.
    Structure {
        n: usize,
        #[command(flatten)]
        format: Format,
    },
    /// Full robustness index report for a family graph.
    Indices {
        spec: String,
        #[command(flatten)]
        format: Format,
    },
    /// Closed-form gamma and zeta.
    Formula {
        #[command(subcommand)]
        family: FormulaFamily,
    },
    /// Recompute a reference table.
    Tables {
        #[command(subcommand)]
        which: Table,
    },
    /// Run the verification harness; exits 1 on any failing cell.
    Verify(VerifyArgs),
    /// DOT rendering of a family graph.
    Dot { spec: String },
}

#[derive(Subcommand)]
enum FormulaFamily {
    /// Prism on 2n vertices.
    Prism {
        n: usize,
        #[command(flatten)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum Table {
    /// Small-prism gamma/zeta table (orders 3..=10).
    Prisms,
    /// Robustness summary for the five-vertex families.
    N5,
    /// Robustness summary for the six-vertex families.
    N6,
}

#[derive(Args)]
struct VerifyArgs {
    /// Run every harness section (default when no section is chosen).
    #[arg(long)]
    all: bool,
    /// Reference tables: small prisms plus robustness rows.
    #[arg(long)]
    tables: bool,
    /// Explicit minimum-set lists for prism orders 3, 4, 5, 8.
    #[arg(long)]
    sets: bool,
    /// Engine cross-check (brute force vs automaton vs closed forms).
    #[arg(long)]
    cross: bool,
    /// Largest order brute-forced in the cross-check.
    #[arg(long, default_value_t = 14)]
    max_brute: usize,
    /// Largest order for automaton-vs-formula comparison.
    #[arg(long, default_value_t = 200)]
    max_dp: usize,
    #[command(flatten)]
    format: Format,
}

fn budget_from(cli_flag: Option<u64>) -> u64 {
    cli_flag
        .or_else(|| {
            std::env::var("DOMKIT_BUDGET")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(DEFAULT_BUDGET)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = budget_from(cli.budget);
    match run(cli.command, budget) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                domkit::Error::FamilySpec(_)
                | domkit::Error::ParamRange { .. }
                | domkit::Error::WordTooShort(_)
                | domkit::Error::BadLetter(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn run(command: Command, budget: u64) -> domkit::Result<ExitCode> {
    match command {
        Command::Gamma { spec, format } => {
            let g = build_family_str(&spec)?;
            let r = solve(&g, budget)?;
            if format.json {
                println!(
                    "{}",
                    serde_json::json!({ "family": g.family(), "gamma": r.gamma })
                );
            } else {
                println!("gamma={}", r.gamma);
            }
        }
        Command::Zeta { spec, list, format } => {
            let g = build_family_str(&spec)?;
            let r = solve(&g, budget)?;
            if format.json {
                let mut obj = serde_json::json!({
                    "family": g.family(), "gamma": r.gamma, "zeta": r.zeta,
                });
                if list {
                    let sets: Vec<Vec<usize>> =
                        r.sets.iter().map(|s| s.iter().collect()).collect();
                    obj["sets"] = serde_json::json!(sets);
                }
                println!("{obj}");
            } else {
                println!("gamma={} zeta={}", r.gamma, r.zeta);
                if list {
                    for s in &r.sets {
                        let ids: Vec<String> = s.iter().map(|v| v.to_string()).collect();
                        println!("{{{}}}", ids.join(","));
                    }
                }
            }
        }
        Command::Words { n, list, format } => {
            let (gamma, zeta) = count_min_words(n)?;
            let words = if list { enumerate_min_words(n)? } else { Vec::new() };
            if format.json {
                let mut obj = serde_json::json!({ "n": n, "gamma": gamma, "zeta": zeta });
                if list {
                    obj["words"] =
                        serde_json::json!(words.iter().map(|w| w.to_string()).collect::<Vec<_>>());
                }
                println!("{obj}");
            } else {
                println!("gamma={gamma} zeta={zeta}");
                for w in &words {
                    println!("{w}");
                }
            }
        }
        Command::Structure { n, format } => {
            let report = check_structure(n)?;
            if format.json {
                println!("{}", serde_json::to_string_pretty(&report).expect("serializes"));
            } else {
                print!("{}", report.to_text());
            }
            if !report.all_passed() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Indices { spec, format } => {
            let g = build_family_str(&spec)?;
            let r = composite_report(&g, budget)?;
            if format.json {
                println!("{}", r.to_json());
            } else if format.csv {
                println!("{}", RobustnessReport::CSV_HEADER);
                println!("{}", r.csv_row());
            } else {
                println!("{}", RobustnessReport::TABLE_HEADER);
                println!("{}", r.table_row());
            }
        }
        Command::Formula { family } => {
            let FormulaFamily::Prism { n, format } = family;
            let r = prism_formula(n)?;
            if format.json {
                println!("{}", serde_json::to_string(&r).expect("serializes"));
            } else {
                println!("gamma={} zeta={}", r.gamma, r.zeta);
            }
        }
        Command::Tables { which } => match which {
            Table::Prisms => {
                let results: Vec<(usize, u64)> = (3..=10)
                    .map(count_min_words)
                    .collect::<domkit::Result<_>>()?;
                println!("n      3    4    5    6    7    8    9   10");
                let row = |label: &str, vals: Vec<u64>| {
                    let cells: Vec<String> = vals.iter().map(|v| format!("{v:>4}")).collect();
                    println!("{label} {}", cells.join(" "));
                };
                row("gamma", results.iter().map(|r| r.0 as u64).collect());
                row("zeta ", results.iter().map(|r| r.1).collect());
            }
            Table::N5 => print_table(
                &["complete:5", "path:5", "cycle:5", "fan:5", "wheel:5", "star:5",
                  "bintree:5", "house", "kbipartite:2,3"],
                budget,
            )?,
            Table::N6 => print_table(
                &["complete:6", "path:6", "cycle:6", "fan:6", "wheel:6", "star:6",
                  "bintree:6", "ladder:3", "prism:3", "kbipartite:3,3"],
                budget,
            )?,
        },
        Command::Verify(args) => return run_verify(args, budget),
        Command::Dot { spec } => {
            print!("{}", build_family_str(&spec)?.to_dot());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_table(specs: &[&str], budget: u64) -> domkit::Result<()> {
    println!("{}", RobustnessReport::TABLE_HEADER);
    for spec in specs {
        let g = build_family_str(spec)?;
        println!("{}", composite_report(&g, budget)?.table_row());
    }
    Ok(())
}

fn run_verify(args: VerifyArgs, budget: u64) -> domkit::Result<ExitCode> {
    let all = args.all || !(args.tables || args.sets || args.cross);
    let mut sections: Vec<DiffReport> = Vec::new();
    if all || args.tables {
        sections.push(verify_prism_table(budget)?);
        sections.push(verify_robustness_tables(budget)?);
    }
    if all || args.sets {
        sections.push(verify_explicit_sets(budget)?);
    }
    if all || args.cross {
        sections.push(cross_check(args.max_brute, args.max_dp, budget)?);
    }

    let pass = sections.iter().all(|r| r.pass());
    if args.format.json {
        println!("{}", serde_json::to_string_pretty(&sections).expect("serializes"));
    } else {
        for r in &sections {
            print!("{}", r.to_text());
        }
        println!("verify: {}", if pass { "PASS" } else { "FAIL" });
    }
    Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
