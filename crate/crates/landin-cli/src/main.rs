use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use landin::harness::{self, compare, engine, fib_cps_trace, fib_def_trace, FibTrace, Subset, DEFAULT_FUEL};
use landin::outcome::{Observation, Outcome};
use landin::sims::{self, Simulation, Variant};
use landin::syntax::{parse_program, Program};

const EXIT_STUCK: u8 = 1;
const EXIT_FUEL: u8 = 2;
const EXIT_PARSE: u8 = 3;
const EXIT_DISSENT: u8 = 4;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "landin", about = "Run and compare semantics for applicative expressions with J")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a program with one engine.
    Run {
        #[arg(long)]
        semantics: String,
        #[arg(long, default_value_t = DEFAULT_FUEL)]
        fuel: u64,
        /// Print every configuration before the result.
        #[arg(long)]
        trace: bool,
        file: PathBuf,
    },
    /// Evaluate a program with every applicable engine.
    Compare {
        #[arg(long, default_value_t = DEFAULT_FUEL)]
        fuel: u64,
        /// Run only engines accepting this fragment.
        #[arg(long)]
        subset: Option<Subset>,
        #[arg(long)]
        json: bool,
        file: PathBuf,
    },
    /// Print the image of a program under a simulation.
    Translate {
        #[arg(long)]
        simulation: String,
        file: PathBuf,
    },
    /// Run the invariant suite, including fuzzing.
    Check {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        cases: usize,
    },
    /// Print both traced Fibonacci computations.
    Fib { n: i64 },
}

fn load(file: &PathBuf) -> Result<Program, ExitCode> {
    let src = if file.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(file)
    };
    let src = src.map_err(|e| {
        eprintln!("{}: {e}", file.display());
        ExitCode::from(EXIT_PARSE)
    })?;
    parse_program(&src).map_err(|e| {
        eprintln!("{}: {e}", file.display());
        ExitCode::from(EXIT_PARSE)
    })
}

fn run(semantics: &str, fuel: u64, trace: bool, file: &PathBuf) -> Result<ExitCode, ExitCode> {
    let e = engine(semantics).ok_or_else(|| {
        eprintln!("unknown engine `{semantics}`");
        ExitCode::from(EXIT_USAGE)
    })?;
    let p = load(file)?;
    let outcome = if trace {
        let (lines, outcome) = e.trace(&p, fuel).ok_or_else(|| {
            eprintln!("engine `{semantics}` has no first-order trace");
            ExitCode::from(EXIT_USAGE)
        })?;
        for l in lines {
            println!("{l}");
        }
        outcome
    } else {
        e.run(&p, fuel).outcome
    };
    println!("{outcome}");
    Ok(match outcome {
        Outcome::Final(_) => ExitCode::SUCCESS,
        Outcome::Stuck(_) => ExitCode::from(EXIT_STUCK),
        Outcome::OutOfFuel(_) => ExitCode::from(EXIT_FUEL),
    })
}

fn json_observation(o: Observation) -> serde_json::Value {
    match o {
        Observation::Num(n) => n.into(),
        o => o.to_string().into(),
    }
}

fn compare_cmd(fuel: u64, subset: Option<Subset>, json: bool, file: &PathBuf) -> Result<ExitCode, ExitCode> {
    let p = load(file)?;
    let r = compare(&file.display().to_string(), &p, fuel, subset);
    if json {
        let map: serde_json::Map<String, serde_json::Value> = r
            .rows
            .iter()
            .map(|row| (row.engine.clone(), json_observation(row.observation)))
            .collect();
        println!("{}", serde_json::Value::Object(map));
    } else {
        println!("{r}");
    }
    Ok(if r.agree {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_DISSENT)
    })
}

fn translate(simulation: &str, file: &PathBuf) -> Result<ExitCode, ExitCode> {
    let (id, variant) = match simulation.split_once(':') {
        Some((id, tag)) => (id, Some(tag)),
        None => (simulation, None),
    };
    let s = Simulation::from_id(id).ok_or_else(|| {
        eprintln!("unknown simulation `{simulation}`");
        ExitCode::from(EXIT_USAGE)
    })?;
    let v = match variant {
        None => Variant::Standard,
        Some(tag) => variant_of(tag).ok_or_else(|| {
            eprintln!("unknown variant `{tag}`");
            ExitCode::from(EXIT_USAGE)
        })?,
    };
    let p = load(file)?;
    match sims::translate_program(s, v, &p) {
        Ok(t) => {
            println!("{t}");
            Ok(ExitCode::SUCCESS)
        }
        Err(e) => {
            eprintln!("{e}");
            Ok(ExitCode::from(EXIT_STUCK))
        }
    }
}

fn variant_of(tag: &str) -> Option<Variant> {
    Some(match tag {
        "callcc" => Variant::CallccFlavor,
        "control" => Variant::ControlFlavor,
        "reset-free" => Variant::ResetFree,
        "via-ji" => Variant::ViaJi,
        "as-printed" => Variant::AsPrinted,
        _ => return None,
    })
}

fn show(t: &FibTrace) -> String {
    let items: Vec<String> = t.trace.iter().map(i64::to_string).collect();
    format!("({},[{}])", t.result, items.join(","))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let r = match cli.command {
        Command::Run {
            semantics,
            fuel,
            trace,
            file,
        } => run(&semantics, fuel, trace, &file),
        Command::Compare {
            fuel,
            subset,
            json,
            file,
        } => compare_cmd(fuel, subset, json, &file),
        Command::Translate { simulation, file } => translate(&simulation, &file),
        Command::Check { seed, cases } => {
            let results = harness::check(seed, cases);
            for r in &results {
                println!("{r}");
            }
            Ok(if results.iter().all(|r| r.passed) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_DISSENT)
            })
        }
        Command::Fib { n } => {
            if n < 0 {
                eprintln!("n must be non-negative");
                Err(ExitCode::from(EXIT_USAGE))
            } else {
                println!("cps\t{}", show(&fib_cps_trace(n)));
                println!("defunctionalized\t{}", show(&fib_def_trace(n)));
                Ok(ExitCode::SUCCESS)
            }
        }
    };
    r.unwrap_or_else(|code| code)
}
