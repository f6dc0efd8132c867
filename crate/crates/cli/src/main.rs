use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use pbheap_cli::{
    exit, format_integers, heap_sort, parse_integers, run_bench, run_check, write_csv, CheckedOrder,
};

#[derive(Parser)]
#[command(
    name = "pbheap",
    version,
    about = "Persistent binary heap: sort, self-check and benchmark"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sort newline-separated 64-bit integers from a file or stdin.
    Sort {
        /// Input file; reads stdin when omitted or "-".
        input: Option<PathBuf>,
    },
    /// Run the differential and invariant checks against the array oracle.
    Check {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        ops: usize,
        /// Invert the comparator under test (mutation smoke test).
        #[arg(long, hide = true)]
        flip_compare: bool,
    },
    /// Write instrumented measurements of heapify, insert and remove as CSV.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "1023,16383,262143",
              value_parser = clap::value_parser!(u64).range(1..))]
        sizes: Vec<u64>,
        #[arg(long, default_value_t = 5)]
        reps: u32,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Output path; stdout when omitted or "-".
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Sort { input } => sort(input),
        Command::Check {
            seed,
            ops,
            flip_compare,
        } => {
            let report = run_check(
                seed,
                ops,
                CheckedOrder {
                    flipped: flip_compare,
                },
            );
            print!("{report}");
            if report.all_passed() {
                exit::SUCCESS
            } else {
                exit::PROPERTY_FAILURE
            }
        }
        Command::Bench {
            sizes,
            reps,
            seed,
            out,
        } => bench(&sizes, reps, seed, out),
    };
    ExitCode::from(code)
}

fn is_stdio(path: &Option<PathBuf>) -> bool {
    path.as_ref().is_none_or(|p| p.as_os_str() == "-")
}

fn sort(input: Option<PathBuf>) -> u8 {
    let mut bytes = Vec::new();
    let read = if is_stdio(&input) {
        io::stdin().read_to_end(&mut bytes).map(drop)
    } else {
        File::open(input.as_ref().unwrap())
            .and_then(|mut f| f.read_to_end(&mut bytes))
            .map(drop)
    };
    if let Err(e) = read {
        eprintln!("pbheap sort: cannot read input: {e}");
        return exit::INPUT_ERROR;
    }
    let values = match parse_integers(&bytes) {
        Ok(values) => values,
        Err(e) => {
            eprintln!("pbheap sort: {e}");
            return exit::INPUT_ERROR;
        }
    };
    let sorted = heap_sort(values);
    let mut stdout = io::stdout().lock();
    if let Err(e) = stdout
        .write_all(format_integers(&sorted).as_bytes())
        .and_then(|_| stdout.flush())
    {
        eprintln!("pbheap sort: cannot write output: {e}");
        return exit::INPUT_ERROR;
    }
    exit::SUCCESS
}

fn bench(sizes: &[u64], reps: u32, seed: u64, out: Option<PathBuf>) -> u8 {
    let sizes: Vec<usize> = sizes.iter().map(|&n| n as usize).collect();
    let sink: Box<dyn Write> = if is_stdio(&out) {
        Box::new(io::stdout().lock())
    } else {
        match File::create(out.as_ref().unwrap()) {
            Ok(f) => Box::new(BufWriter::new(f)),
            Err(e) => {
                eprintln!(
                    "pbheap bench: cannot create {}: {e}",
                    out.unwrap().display()
                );
                return exit::INPUT_ERROR;
            }
        }
    };
    let records = run_bench(&sizes, reps, seed);
    match write_csv(&records, sink) {
        Ok(()) => exit::SUCCESS,
        Err(e) => {
            eprintln!("pbheap bench: cannot write CSV: {e}");
            exit::INPUT_ERROR
        }
    }
}
