//! File-driven command-line interface. All analysis lives in the library;
//! this binary parses arguments, loads instances, and prints reports.

use std::process::ExitCode;

use skewring::format::{parse_graph, InstanceFile};
use skewring::linalg::PrimeField;
use skewring::report::{analyze_action, analyze_dynamics, analyze_graph, run_fuzz, Report};

const USAGE: &str = "\
usage: skewring <command> [args] [flags]

commands:
  validate <instance.json>          check the partial-action axioms
  analyze  <instance.json>          run all checks and cross-checks
  leavitt  <graph file> [--construct]
                                    graph criteria; with --construct, build
                                    the boundary-path ring (acyclic only)
  dynamics <instance.json>          discrete-model freeness/minimality checks
  fuzz [--seed <u64>] [--count <n>] [--group c<K>] [--max-carrier <m>]
                                    seeded random instances, all cross-checks

global flags:
  --field <p>     prime field modulus (default 2)
  --budget <b>    oracle enumeration budget log2 (default 16)
  --json          machine-readable output
  --timings       per-check wall times on stderr

exit codes: 0 success or agreement, 1 falsified cross-check, 2 invalid input";

struct Options {
    field: Option<u32>,
    budget: u32,
    json: bool,
    timings: bool,
    construct: bool,
    seed: u64,
    count: usize,
    group_order: usize,
    max_carrier: usize,
    positional: Vec<String>,
}

fn parse_args(args: &[String]) -> Result<Options, String> {
    let mut opt = Options {
        field: None,
        budget: 16,
        json: false,
        timings: false,
        construct: false,
        seed: 0,
        count: 100,
        group_order: 4,
        max_carrier: 4,
        positional: Vec::new(),
    };
    let mut it = args.iter();
    while let Some(arg) = it.next() {
        let mut take = |name: &str| -> Result<String, String> {
            it.next().cloned().ok_or_else(|| format!("{name} expects a value"))
        };
        match arg.as_str() {
            "--field" => {
                opt.field = Some(take("--field")?.parse().map_err(|e| format!("--field: {e}"))?)
            }
            "--budget" => opt.budget = take("--budget")?.parse().map_err(|e| format!("--budget: {e}"))?,
            "--seed" => opt.seed = take("--seed")?.parse().map_err(|e| format!("--seed: {e}"))?,
            "--count" => opt.count = take("--count")?.parse().map_err(|e| format!("--count: {e}"))?,
            "--max-carrier" => {
                opt.max_carrier =
                    take("--max-carrier")?.parse().map_err(|e| format!("--max-carrier: {e}"))?
            }
            "--group" => {
                let v = take("--group")?;
                let order = v
                    .strip_prefix('c')
                    .or_else(|| v.strip_prefix('C'))
                    .unwrap_or(&v)
                    .parse::<usize>()
                    .map_err(|_| format!("--group expects c<K>, got {v:?}"))?;
                if order == 0 {
                    return Err("--group order must be positive".to_string());
                }
                opt.group_order = order;
            }
            "--json" => opt.json = true,
            "--timings" => opt.timings = true,
            "--construct" => opt.construct = true,
            other if other.starts_with("--") => return Err(format!("unknown flag {other}")),
            other => opt.positional.push(other.to_string()),
        }
    }
    Ok(opt)
}

fn read_file(path: &str) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))
}

fn emit(report: &Report, opt: &Options) -> ExitCode {
    if opt.json {
        println!("{}", report.to_json());
    } else {
        print!("{report}");
    }
    if opt.timings {
        for (name, ms) in report.timings() {
            eprintln!("timing {name}: {ms:.2} ms");
        }
    }
    ExitCode::from(report.exit_code() as u8)
}

fn load_instance(
    path: &str,
    opt: &Options,
) -> Result<(PrimeField, skewring::paction::SetPartialAction), String> {
    let text = read_file(path)?;
    let file = InstanceFile::from_json(&text).map_err(|e| e.to_string())?;
    let (field, action) = file.build().map_err(|e| e.to_string())?;
    // An explicit --field overrides the file's field.
    let field = match opt.field {
        Some(p) => PrimeField::new(p).map_err(|e| e.to_string())?,
        None => field,
    };
    Ok((field, action))
}

fn flag_field(opt: &Options) -> Result<PrimeField, String> {
    PrimeField::new(opt.field.unwrap_or(2)).map_err(|e| e.to_string())
}

fn run() -> Result<ExitCode, String> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if args.is_empty() {
        eprintln!("{USAGE}");
        return Ok(ExitCode::from(2));
    }
    let command = args[0].clone();
    let opt = parse_args(&args[1..])?;

    match command.as_str() {
        "validate" => {
            let path = opt.positional.first().ok_or("validate expects an instance file")?;
            let (_, action) = load_instance(path, &opt)?;
            let report = action.validate();
            if opt.json {
                let violations: Vec<String> =
                    report.violations.iter().map(|v| v.to_string()).collect();
                let value = serde_json::json!({
                    "instance": path,
                    "valid": report.is_valid(),
                    "violations": violations,
                });
                println!("{}", serde_json::to_string_pretty(&value).expect("serializes"));
            } else {
                println!("{report}");
            }
            Ok(ExitCode::from(if report.is_valid() { 0 } else { 2 }))
        }
        "analyze" => {
            let path = opt.positional.first().ok_or("analyze expects an instance file")?;
            let (field, action) = load_instance(path, &opt)?;
            let report = analyze_action(path, field, &action, opt.budget);
            Ok(emit(&report, &opt))
        }
        "dynamics" => {
            let path = opt.positional.first().ok_or("dynamics expects an instance file")?;
            let (field, action) = load_instance(path, &opt)?;
            let report = analyze_dynamics(path, field, &action, opt.budget);
            Ok(emit(&report, &opt))
        }
        "leavitt" => {
            let path = opt.positional.first().ok_or("leavitt expects a graph file")?;
            let text = read_file(path)?;
            let graph = parse_graph(&text).map_err(|e| e.to_string())?;
            let field = flag_field(&opt)?;
            let report = analyze_graph(path, &graph, field, opt.construct, opt.budget)
                .map_err(|e| e.to_string())?;
            Ok(emit(&report, &opt))
        }
        "fuzz" => {
            let field = flag_field(&opt)?;
            let summary = run_fuzz(
                opt.seed,
                opt.count,
                opt.group_order,
                opt.max_carrier,
                field,
                opt.budget,
            );
            if opt.json {
                println!("{}", summary.to_json());
            } else {
                println!("{summary}");
            }
            Ok(ExitCode::from(summary.exit_code() as u8))
        }
        "--help" | "-h" | "help" => {
            println!("{USAGE}");
            Ok(ExitCode::SUCCESS)
        }
        other => Err(format!("unknown command {other:?}\n{USAGE}")),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
