use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use icalc::script::{parse_script, repro, run_script, ReportDocument, RunOptions, ScriptError};
use icalc::suites::{run_all, SuiteConfig, DEFAULT_CASES};
use icalc::MonomialOrder;

#[derive(Parser)]
#[command(name = "icalc", version, about = "Ideal calculus and closure diagnostics over F_p")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Lex,
    Grevlex,
}

#[derive(Subcommand)]
enum Command {
    /// Run an .icl script
    Run {
        file: PathBuf,
        /// Write the JSON report here (`-` or no value: stdout instead of text)
        #[arg(long, num_args = 0..=1, default_missing_value = "-")]
        json: Option<String>,
        #[arg(long, value_enum)]
        order: Option<OrderArg>,
        #[arg(long, default_value_t = 5)]
        emax: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run a built-in scenario: badintersect, badcolon, contain-demo, cmdvr-demo
    Repro {
        name: String,
        #[arg(long, num_args = 0..=1, default_missing_value = "-")]
        json: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run every property suite
    CheckSuite {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_CASES)]
        cases: usize,
    },
}

fn emit(doc: &ReportDocument, json: Option<&str>) -> Result<(), String> {
    match json {
        Some("-") => print!("{}", doc.to_json()),
        Some(path) => {
            print!("{}", doc.to_text());
            fs::write(path, doc.to_json()).map_err(|e| format!("cannot write {path}: {e}"))?;
        }
        None => print!("{}", doc.to_text()),
    }
    Ok(())
}

fn finish(result: Result<ReportDocument, ScriptError>, json: Option<&str>) -> ExitCode {
    match result {
        Ok(doc) => match emit(&doc, json) {
            Ok(()) => ExitCode::from(doc.exit_code() as u8),
            Err(e) => {
                eprintln!("icalc: {e}");
                ExitCode::from(2)
            }
        },
        Err(e) => {
            eprintln!("icalc: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match cli.command {
        Command::Run {
            file,
            json,
            order,
            emax,
            seed,
        } => {
            let src = match fs::read_to_string(&file) {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("icalc: cannot read {}: {e}", file.display());
                    return ExitCode::from(2);
                }
            };
            let opts = RunOptions {
                scenario: file.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default(),
                order: order.map(|o| match o {
                    OrderArg::Lex => MonomialOrder::Lex,
                    OrderArg::Grevlex => MonomialOrder::GrevLex,
                }),
                emax,
                seed,
            };
            let result = parse_script(&src).and_then(|s| run_script(&s, &opts));
            finish(result, json.as_deref())
        }
        Command::Repro { name, json, seed } => finish(repro(&name, seed), json.as_deref()),
        Command::CheckSuite { seed, cases } => match run_all(SuiteConfig { seed, cases }) {
            Ok(outcomes) => {
                let mut ok = true;
                for o in &outcomes {
                    println!(
                        "{} {:<11} {} cases, {} failures{}",
                        if o.passed() { "PASS" } else { "FAIL" },
                        o.name,
                        o.cases,
                        o.failures.len(),
                        if o.notes.is_empty() { String::new() } else { format!(" ({})", o.notes.join("; ")) }
                    );
                    for f in &o.failures {
                        println!("    {f}");
                    }
                    ok &= o.passed();
                }
                ExitCode::from(if ok { 0 } else { 1 })
            }
            Err(e) => {
                eprintln!("icalc: {e}");
                ExitCode::from(3)
            }
        },
    }
}
