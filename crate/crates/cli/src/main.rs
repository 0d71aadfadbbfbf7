//! Batch front end: load a structure document, run validations,
//! operations, enumerations or the law suite, and report results.
//!
//! Exit codes are the contract: 0 success / all-pass, 1 a check failed
//! (axiom violations, law failure, non-regular, not an ideal), 2 input
//! or usage errors. Stdout formatting may evolve; exit codes may not.

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use gammafuzz::doc::{load_structure, DocError, LoadedDoc};
use gammafuzz::{
    compose, enumerate_ideals_with, gamma_product, run_suite_with, sum_oplus, Chain,
    EnumerateOptions, FuzzySubset, IdealClass, IdealKind, Membership, Outcome, Regularity,
    VerifyOptions, VerifyReport, DEFAULT_BUDGET,
};

#[derive(Parser)]
#[command(
    name = "gammafuzz",
    version,
    about = "Finite gamma-semiring kernel: fuzzy ideal operations and law checking"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Enumeration candidate budget (overrides GAMMAFUZZ_BUDGET)
    #[arg(long, global = true)]
    budget: Option<u128>,

    /// Do not pin mu(0) = 1 during enumeration
    #[arg(long = "no-zero-convention", global = true)]
    no_zero_convention: bool,

    /// Worker threads for the law suite (default: rayon's choice)
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Check every structure axiom; exit 0 clean, 1 violations, 2 bad input
    Validate { path: PathBuf },
    /// Classify a fuzzy subset; exit 0 if it is a left or right ideal
    CheckIdeal { path: PathBuf, subset: String },
    /// Apply a binary operation to two subsets and print the result
    Op {
        path: PathBuf,
        #[arg(value_enum)]
        op: OpName,
        lhs: String,
        rhs: String,
    },
    /// List all fuzzy ideals of a kind over a grade chain
    Enumerate {
        path: PathBuf,
        #[arg(long)]
        chain: Option<String>,
        #[arg(long, default_value = "two-sided")]
        kind: String,
    },
    /// Run law checks; exit 0 all pass, 1 any fail, 2 bad input
    Verify {
        path: PathBuf,
        #[arg(long)]
        chain: Option<String>,
        /// Law selectors, comma separated (e.g. all or 3.3,3.10.iv-left)
        #[arg(long, value_delimiter = ',', default_value = "all")]
        laws: Vec<String>,
    },
    /// Decide multiplicative regularity and cross-check the fuzzy side
    Regular { path: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum OpName {
    Sum,
    Prod,
    Compose,
    Meet,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    };
    ExitCode::from(code)
}

fn effective_budget(cli: &Cli) -> Result<u128, String> {
    if let Some(b) = cli.budget {
        return Ok(b);
    }
    match std::env::var("GAMMAFUZZ_BUDGET") {
        Ok(v) => v
            .parse()
            .map_err(|_| format!("GAMMAFUZZ_BUDGET={v:?} is not an integer")),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn load(path: &PathBuf) -> Result<LoadedDoc, String> {
    load_structure(path).map_err(|e| e.to_string())
}

/// Chain from the flag, falling back to the document default.
fn resolve_chain(arg: &Option<String>, doc: &LoadedDoc) -> Result<Chain, String> {
    match arg {
        Some(text) => Chain::from_str(text).map_err(|e| e.to_string()),
        None => doc
            .default_chain
            .clone()
            .ok_or_else(|| "no --chain given and the document has no default_chain".to_string()),
    }
}

/// Operand resolution: inline "[1,1/2]" literals, then named subsets
/// from the document, then the built-ins theta and one.
fn resolve_subset(doc: &LoadedDoc, text: &str) -> Result<FuzzySubset, String> {
    let t = text.trim();
    if let Some(inner) = t.strip_prefix('[') {
        let inner = inner
            .strip_suffix(']')
            .ok_or_else(|| format!("unterminated subset literal {t:?}"))?;
        let grades = inner
            .split(',')
            .map(|s| Membership::from_str(s).map_err(|e| e.to_string()))
            .collect::<Result<Vec<_>, _>>()?;
        if grades.len() != doc.structure.s_size() {
            return Err(format!(
                "subset literal has {} grades, the carrier has {}",
                grades.len(),
                doc.structure.s_size()
            ));
        }
        return Ok(
            FuzzySubset::new(Arc::clone(&doc.structure), grades).expect("length checked above")
        );
    }
    if let Some(named) = doc.subsets.get(t) {
        return Ok(named.clone());
    }
    match t {
        "theta" => Ok(FuzzySubset::theta(&doc.structure)),
        "one" => Ok(FuzzySubset::one(&doc.structure)),
        other => Err(format!("unknown subset {other:?}")),
    }
}

fn run(cli: &Cli) -> Result<u8, String> {
    match &cli.command {
        Command::Validate { path } => cmd_validate(cli, path),
        Command::CheckIdeal { path, subset } => cmd_check_ideal(cli, path, subset),
        Command::Op { path, op, lhs, rhs } => cmd_op(cli, path, *op, lhs, rhs),
        Command::Enumerate { path, chain, kind } => cmd_enumerate(cli, path, chain, kind),
        Command::Verify { path, chain, laws } => cmd_verify(cli, path, chain, laws),
        Command::Regular { path } => cmd_regular(cli, path),
    }
}

fn cmd_validate(cli: &Cli, path: &PathBuf) -> Result<u8, String> {
    match load_structure(path) {
        Ok(doc) => {
            if cli.json {
                println!(
                    "{{\"name\": {:?}, \"valid\": true, \"violations\": []}}",
                    doc.structure.name()
                );
            } else {
                println!(
                    "{}: valid ({} elements, {} operators)",
                    doc.structure.name(),
                    doc.structure.s_size(),
                    doc.structure.g_size()
                );
            }
            Ok(0)
        }
        Err(DocError::Invalid { violations, .. }) => {
            if cli.json {
                #[derive(Serialize)]
                struct Out<'a> {
                    valid: bool,
                    violations: &'a [gammafuzz::AxiomViolation],
                }
                println!(
                    "{}",
                    serde_json::to_string_pretty(&Out {
                        valid: false,
                        violations: &violations
                    })
                    .expect("reports serialize")
                );
            } else {
                println!("invalid: {} axiom violation(s)", violations.len());
                for v in &violations {
                    println!("  {v}");
                }
            }
            Ok(1)
        }
        Err(other) => Err(other.to_string()),
    }
}

fn cmd_check_ideal(cli: &Cli, path: &PathBuf, subset: &str) -> Result<u8, String> {
    let doc = load(path)?;
    let mu = resolve_subset(&doc, subset)?;
    let class = mu.classify();
    print_subset_class(cli, &mu, &class);
    Ok(u8::from(!(class.nonempty && (class.left || class.right))))
}

fn cmd_op(cli: &Cli, path: &PathBuf, op: OpName, lhs: &str, rhs: &str) -> Result<u8, String> {
    let doc = load(path)?;
    let a = resolve_subset(&doc, lhs)?;
    let b = resolve_subset(&doc, rhs)?;
    let result = match op {
        OpName::Sum => sum_oplus(&a, &b),
        OpName::Prod => gamma_product(&a, &b),
        OpName::Compose => compose(&a, &b),
        OpName::Meet => a.meet(&b),
    }
    .map_err(|e| e.to_string())?;
    let class = result.classify();
    print_subset_class(cli, &result, &class);
    Ok(0)
}

fn print_subset_class(cli: &Cli, mu: &FuzzySubset, class: &IdealClass) {
    if cli.json {
        #[derive(Serialize)]
        struct Out<'a> {
            result: Vec<String>,
            class: &'a IdealClass,
        }
        let out = Out {
            result: mu.grades().iter().map(|g| g.to_string()).collect(),
            class,
        };
        println!(
            "{}",
            serde_json::to_string_pretty(&out).expect("serializes")
        );
    } else {
        println!("{mu}");
        println!(
            "nonempty={} zero-is-one={} left={} right={} two-sided={} left-k={} right-k={}",
            class.nonempty,
            class.zero_is_one,
            class.left,
            class.right,
            class.two_sided,
            class.left_k,
            class.right_k
        );
    }
}

fn cmd_enumerate(
    cli: &Cli,
    path: &PathBuf,
    chain: &Option<String>,
    kind: &str,
) -> Result<u8, String> {
    let doc = load(path)?;
    let chain = resolve_chain(chain, &doc)?;
    let kind = IdealKind::from_str(kind)?;
    let opts = EnumerateOptions {
        budget: effective_budget(cli)?,
        zero_convention: !cli.no_zero_convention,
    };
    let fam =
        enumerate_ideals_with(&doc.structure, &chain, kind, &opts).map_err(|e| e.to_string())?;
    if cli.json {
        #[derive(Serialize)]
        struct Out {
            fixture: String,
            chain: Vec<String>,
            kind: IdealKind,
            count: usize,
            members: Vec<Vec<String>>,
        }
        let out = Out {
            fixture: doc.structure.name().to_string(),
            chain: chain.values().iter().map(|v| v.to_string()).collect(),
            kind,
            count: fam.len(),
            members: fam
                .members()
                .iter()
                .map(|m| m.grades().iter().map(|g| g.to_string()).collect())
                .collect(),
        };
        println!(
            "{}",
            serde_json::to_string_pretty(&out).expect("serializes")
        );
    } else {
        println!(
            "{}: {} fuzzy {} ideal(s) over {}",
            doc.structure.name(),
            fam.len(),
            kind,
            chain
        );
        for m in fam.members() {
            println!("  {m}");
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct VerifyDocument<'a> {
    fixture: &'a str,
    chain: Vec<String>,
    reports: &'a [VerifyReport],
    summary: Summary,
}

#[derive(Serialize, Clone, Copy)]
struct Summary {
    pass: usize,
    fail: usize,
    not_applicable: usize,
}

fn cmd_verify(
    cli: &Cli,
    path: &PathBuf,
    chain: &Option<String>,
    laws: &[String],
) -> Result<u8, String> {
    let doc = load(path)?;
    let chain = resolve_chain(chain, &doc)?;
    let opts = VerifyOptions {
        budget: effective_budget(cli)?,
        subfamily_cap: 3,
    };
    let g = &doc.structure;
    let suite = || run_suite_with(g, &chain, laws, &opts);
    let reports = match cli.threads {
        None => suite(),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| e.to_string())?
            .install(suite),
    }
    .map_err(|e| e.to_string())?;

    let summary = Summary {
        pass: reports
            .iter()
            .filter(|r| r.outcome == Outcome::Pass)
            .count(),
        fail: reports
            .iter()
            .filter(|r| r.outcome == Outcome::Fail)
            .count(),
        not_applicable: reports
            .iter()
            .filter(|r| r.outcome == Outcome::NotApplicable)
            .count(),
    };

    if cli.json {
        let out = VerifyDocument {
            fixture: doc.structure.name(),
            chain: chain.values().iter().map(|v| v.to_string()).collect(),
            reports: &reports,
            summary,
        };
        println!(
            "{}",
            serde_json::to_string_pretty(&out).expect("serializes")
        );
    } else {
        for r in &reports {
            match r.outcome {
                Outcome::Pass => println!("pass  {}  (checked {})", r.law_id, r.checked_count),
                Outcome::Fail => {
                    println!("FAIL  {}  (checked {})", r.law_id, r.checked_count);
                    if let Some(w) = &r.witness {
                        println!("      {}: lhs={} rhs={}", w.note, w.lhs, w.rhs);
                    }
                }
                Outcome::NotApplicable => println!(
                    "n/a   {}  ({})",
                    r.law_id,
                    r.not_applicable_reason.as_deref().unwrap_or("")
                ),
            }
        }
        println!(
            "{} pass, {} fail, {} not applicable",
            summary.pass, summary.fail, summary.not_applicable
        );
    }
    Ok(u8::from(summary.fail > 0))
}

fn cmd_regular(cli: &Cli, path: &PathBuf) -> Result<u8, String> {
    let doc = load(path)?;
    let g = &doc.structure;
    let regularity = g.is_multiplicatively_regular();

    // cross-check the fuzzy characterization over {0,1}
    let thm =
        gammafuzz::check_law("thm-3.7", g, &Chain::bool_chain()).map_err(|e| e.to_string())?;
    if thm.outcome == Outcome::Fail {
        return Err(format!(
            "regularity and the fuzzy characterization disagree: {:?}",
            thm.witness
        ));
    }

    match &regularity {
        Regularity::Regular { witnesses } => {
            if cli.json {
                #[derive(Serialize)]
                struct Out {
                    regular: bool,
                    witnesses: Vec<[usize; 4]>,
                }
                let out = Out {
                    regular: true,
                    witnesses: witnesses
                        .iter()
                        .enumerate()
                        .map(|(c, (x, g1, g2))| [c, x.0, g1.0, g2.0])
                        .collect(),
                };
                println!(
                    "{}",
                    serde_json::to_string_pretty(&out).expect("serializes")
                );
            } else {
                println!("regular");
                for (c, (x, g1, g2)) in witnesses.iter().enumerate() {
                    println!("  c={c}: c = (c γ{} {}) γ{} c", g1.0, x.0, g2.0);
                }
            }
            Ok(0)
        }
        Regularity::NotRegular { failing } => {
            if cli.json {
                println!("{{\"regular\": false, \"witness_element\": {}}}", failing.0);
            } else {
                println!("not regular; witness element {}", failing.0);
            }
            Ok(1)
        }
    }
}
