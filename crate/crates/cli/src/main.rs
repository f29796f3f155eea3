//! `sts`: decode, generate, validate and analyse Steiner triple systems.

mod input;
mod report;

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use sts_core::codec::order_for_length;
use sts_core::configurations::{instances, ConfigKind};
use sts_core::format::write_triples;
use sts_core::resolvability::DEFAULT_PAIR_BUDGET;
use sts_core::trades::{classify_twins, switch_pasch};
use sts_core::{
    are_isomorphic, automorphism_group, decode_compact, direct_product, encode_compact, fixtures, CyclicSpec,
    StsError, TripleSystem,
};

use input::{resolve, InputArgs};
use report::{analyze, Op, Settings};

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Budget(String),
}

impl From<StsError> for CliError {
    fn from(e: StsError) -> Self {
        match e {
            StsError::Budget(b) => CliError::Budget(b.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(name = "sts", version, about = "Steiner triple system toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decode compact codes (arguments, or one per line on standard input) into block lists.
    Decode {
        codes: Vec<String>,
        #[arg(long)]
        order: Option<usize>,
    },
    /// Print the compact code of each input system.
    Encode(InputArgs),
    /// Construct a system.
    #[command(subcommand)]
    Gen(Gen),
    /// Check that every input is a Steiner triple system.
    Validate(InputArgs),
    /// Compute per-system properties and emit a JSON report.
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        /// Analyses to run, comma separated.
        #[arg(long, value_enum, value_delimiter = ',', default_value = "all")]
        ops: Vec<Op>,
        /// Search budget for double resolvability, rainbow analysis and group enumeration.
        #[arg(long, default_value_t = DEFAULT_PAIR_BUDGET)]
        budget: u64,
        /// Also run double resolvability and the rainbow-set analysis.
        #[arg(long)]
        heavy: bool,
        /// Worker threads for batch input (default: all cores).
        #[arg(long)]
        threads: Option<usize>,
        /// Write the report here instead of standard output.
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
        /// Leave out per-analysis timings so reports are reproducible byte for byte.
        #[arg(long)]
        no_timings: bool,
    },
    /// Test two systems for isomorphism; prints a witness permutation.
    Iso {
        a: String,
        b: String,
        #[arg(long)]
        order: Option<usize>,
    },
    /// Automorphism group order, orbits and generators.
    Aut(InputArgs),
    /// Switch a Pasch configuration; without `--instance`, list the candidates.
    SwitchPasch {
        system: String,
        /// Index into the listed Pasch configurations.
        #[arg(long)]
        instance: Option<usize>,
        #[arg(long)]
        order: Option<usize>,
        /// Print the result as a block list rather than a compact code.
        #[arg(long)]
        triples: bool,
    },
    /// Classify systems with a single Pasch configuration as twins.
    Twins(InputArgs),
    /// The built-in reference systems.
    #[command(subcommand)]
    Fixtures(FixturesCmd),
}

#[derive(Subcommand)]
enum Gen {
    /// Develop base blocks modulo v, e.g. `gen cyclic 21 0,1,5 0,2,10 0,3,9 0,7,14`.
    Cyclic {
        modulus: usize,
        #[arg(required = true)]
        base_blocks: Vec<String>,
        #[arg(long)]
        triples: bool,
    },
    /// Direct product of two systems (fixture ids, files or codes).
    Product {
        a: String,
        b: String,
        #[arg(long)]
        triples: bool,
    },
}

#[derive(Subcommand)]
enum FixturesCmd {
    /// Id, order and description of each fixture.
    List,
    /// Every fixture as a loadable document.
    Dump,
}

fn emit(sys: &TripleSystem, triples: bool) -> String {
    if triples {
        write_triples(sys)
    } else {
        format!("{}\n", encode_compact(sys))
    }
}

fn decode(codes: Vec<String>, order: Option<usize>) -> Result<String, CliError> {
    let lines: Vec<(usize, String)> = if codes.is_empty() {
        let text = std::io::read_to_string(std::io::stdin()).map_err(|e| CliError::Input(e.to_string()))?;
        text.lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim().to_string()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .collect()
    } else {
        codes.into_iter().enumerate().map(|(i, c)| (i + 1, c)).collect()
    };
    let mut out = String::new();
    for (line, code) in lines {
        let v = order.or_else(|| order_for_length(code.chars().count())).unwrap_or(21);
        let sys = decode_compact(&code, v).map_err(|e| CliError::Input(format!("line {line}: {e}")))?;
        out.push_str(&write_triples(&sys));
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<String, CliError> {
    let mut out = String::new();
    match cli.command {
        Command::Decode { codes, order } => return decode(codes, order),
        Command::Encode(input) => {
            for n in input.load()? {
                writeln!(out, "{}", encode_compact(&n.system)).unwrap();
            }
        }
        Command::Gen(Gen::Cyclic { modulus, base_blocks, triples }) => {
            let spec: CyclicSpec = format!("cyclic v={modulus} {}", base_blocks.join(";")).parse()?;
            out = emit(&spec.generate()?, triples);
        }
        Command::Gen(Gen::Product { a, b, triples }) => {
            let (a, b) = (resolve(&a, None)?, resolve(&b, None)?);
            out = emit(&direct_product(&a.system, &b.system)?, triples);
        }
        Command::Validate(input) => {
            for n in input.load()? {
                writeln!(out, "{}: ok, v={}, {} blocks", n.label, n.system.order(), n.system.num_blocks()).unwrap();
            }
        }
        Command::Analyze {
            input,
            ops,
            budget,
            heavy,
            threads,
            json,
            no_timings,
        } => {
            let systems = input.load()?;
            let cfg = Settings {
                ops,
                budget,
                heavy,
                timings: !no_timings,
            };
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads.unwrap_or(0))
                .build()
                .map_err(|e| CliError::Input(e.to_string()))?;
            let reports: Vec<_> =
                pool.install(|| systems.par_iter().map(|n| analyze(&n.label, &n.system, &cfg)).collect());
            let text = serde_json::to_string_pretty(&reports).expect("reports serialise") + "\n";
            let exceeded: Vec<&str> = reports.iter().filter(|r| r.budget_exceeded()).map(|r| r.label.as_str()).collect();
            match json {
                Some(path) => {
                    fs::write(&path, &text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
                }
                None => out = text,
            }
            if !exceeded.is_empty() {
                print!("{out}");
                return Err(CliError::Budget(format!("budget of {budget} exceeded for {}", exceeded.join(", "))));
            }
        }
        Command::Iso { a, b, order } => {
            let (a, b) = (resolve(&a, order)?, resolve(&b, order)?);
            match are_isomorphic(&a.system, &b.system) {
                Some(p) => {
                    let images: Vec<String> = p.images().iter().map(|x| x.to_string()).collect();
                    writeln!(out, "isomorphic\n{}", images.join(" ")).unwrap();
                }
                None => out.push_str("not isomorphic\n"),
            }
        }
        Command::Aut(input) => {
            for n in input.load()? {
                let g = automorphism_group(&n.system);
                writeln!(out, "{}: order {}, orbit sizes {:?}", n.label, g.order(), g.orbit_sizes()).unwrap();
                for gen in g.generators() {
                    let images: Vec<String> = gen.images().iter().map(|x| x.to_string()).collect();
                    writeln!(out, "  generator {} (cycle type {:?})", images.join(" "), gen.cycle_type()).unwrap();
                }
            }
        }
        Command::SwitchPasch {
            system,
            instance,
            order,
            triples,
        } => {
            let n = resolve(&system, order)?;
            let paschs = instances(&n.system, ConfigKind::Pasch);
            match instance {
                None => {
                    for (k, p) in paschs.iter().enumerate() {
                        let blocks: Vec<String> = p.blocks.iter().map(|&b| n.system.block(b).to_string()).collect();
                        writeln!(out, "{k}: {}", blocks.join(" ")).unwrap();
                    }
                }
                Some(k) => {
                    let inst = paschs.get(k).ok_or_else(|| {
                        CliError::Input(format!("instance {k} out of range; the system has {} Pasch configurations", paschs.len()))
                    })?;
                    out = emit(&switch_pasch(&n.system, inst)?.system, triples);
                }
            }
        }
        Command::Twins(input) => {
            for n in input.load()? {
                let r = classify_twins(&n.system);
                write!(out, "{}: {} (pasch {})", n.label, r.class.name(), r.pasch_count).unwrap();
                if let (Some(p), Some(order)) = (&r.partner, r.partner_group_order) {
                    write!(out, ", partner {} with group order {order}", encode_compact(p)).unwrap();
                }
                out.push('\n');
            }
        }
        Command::Fixtures(FixturesCmd::List) => {
            for f in fixtures::all() {
                writeln!(out, "{}\t{}\t{}", f.id, f.order(), f.description).unwrap();
            }
        }
        Command::Fixtures(FixturesCmd::Dump) => {
            for f in fixtures::all() {
                writeln!(out, "# {}: {}\n{}", f.id, f.description, f.to_line()).unwrap();
            }
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(CliError::Input(msg)) => {
            eprintln!("sts: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Budget(msg)) => {
            eprintln!("sts: {msg}");
            ExitCode::from(2)
        }
    }
}
