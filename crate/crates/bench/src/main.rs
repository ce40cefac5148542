// Copyright 2026 The samplesort Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use samplesort::datagen::WorkloadKind;
use samplesort::{BlockSort, MergeStrategy, PivotStrategy};
use samplesort_bench::{
    run_suite, write_csv, SuitePlan, DEFAULT_MEM_BUDGET, DEFAULT_REPS, DEFAULT_WARMUP,
};

/// Times the samplesort driver over generated workloads and writes CSV.
///
/// List-valued flags take comma-separated values and are swept as a cross
/// product.
#[derive(Parser, Debug)]
#[command(name = "benchcli", version)]
struct Args {
    /// Pivot strategies: psrs, pses, random
    #[arg(long, value_delimiter = ',', default_values = ["psrs", "pses"])]
    algo: Vec<PivotStrategy>,

    /// Block sorts: intro, pdq, block, heap
    #[arg(long, value_delimiter = ',', default_values = ["block"])]
    block_sort: Vec<BlockSort>,

    /// Merge strategies: tree, heap, sort
    #[arg(long, value_delimiter = ',', default_values = ["tree"])]
    merge: Vec<MergeStrategy>,

    /// Inputs: uint, float, almost, dup3, pair, particle [default: all]
    #[arg(long, value_delimiter = ',')]
    input: Vec<WorkloadKind>,

    /// Element counts; scientific notation such as 1e7 is accepted
    /// [default: 1e7,1e8]
    #[arg(long, value_delimiter = ',', value_parser = parse_count)]
    n: Vec<usize>,

    /// Thread counts [default: 1,2,4,8,12,24,48 up to the available cores]
    #[arg(long, value_delimiter = ',', value_parser = clap::value_parser!(u32).range(1..))]
    threads: Vec<u32>,

    #[arg(long, default_value_t = DEFAULT_REPS)]
    reps: usize,

    /// Untimed runs per configuration
    #[arg(long, default_value_t = DEFAULT_WARMUP)]
    warmup: usize,

    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Output CSV path [default: stdout]
    #[arg(long)]
    out: Option<PathBuf>,

    /// Sizes are clamped so that three copies of the input fit in this many
    /// bytes
    #[arg(long, default_value_t = DEFAULT_MEM_BUDGET)]
    mem_budget: usize,
}

fn parse_count(s: &str) -> Result<usize, String> {
    if let Ok(n) = s.parse::<usize>() {
        return Ok(n);
    }
    match s.parse::<f64>() {
        Ok(x) if x >= 0.0 && x.fract() == 0.0 && x < 2f64.powi(63) => Ok(x as usize),
        _ => Err(format!("not a non-negative integer: {s}")),
    }
}

fn plan_from(args: &Args) -> SuitePlan {
    let mut plan = SuitePlan::default();
    plan.pivots.clone_from(&args.algo);
    plan.block_sorts.clone_from(&args.block_sort);
    plan.merges.clone_from(&args.merge);
    if !args.input.is_empty() {
        plan.inputs.clone_from(&args.input);
    }
    if !args.n.is_empty() {
        plan.sizes.clone_from(&args.n);
    }
    if !args.threads.is_empty() {
        plan.threads = args.threads.iter().map(|&t| t as usize).collect();
    }
    plan.reps = args.reps;
    plan.warmup = args.warmup;
    plan.seed = args.seed;
    plan.mem_budget = Some(args.mem_budget);
    plan
}

fn main() -> ExitCode {
    let args = Args::parse();
    let plan = plan_from(&args);
    for &kind in &plan.inputs {
        let sizes = plan.sizes_for(kind);
        if sizes.len() != plan.sizes.len() || sizes.iter().zip(&plan.sizes).any(|(a, b)| a != b) {
            eprintln!("note: {kind} sizes clamped to {sizes:?} by --mem-budget");
        }
    }

    let result = run_suite(&plan, |row| match row.elapsed_s {
        Some(t) => eprintln!(
            "{} {} n={} t={} rep={} {:.6}s",
            row.algo, row.input, row.n, row.threads, row.rep, t
        ),
        None => eprintln!(
            "FAILED {} {} n={} t={} rep={}",
            row.algo, row.input, row.n, row.threads, row.rep
        ),
    });
    let result = match result {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
    };

    let written = match &args.out {
        Some(path) => File::create(path)
            .map_err(Into::into)
            .and_then(|f| write_csv(BufWriter::new(f), &result.rows, &result.summary)),
        None => write_csv(io::stdout().lock(), &result.rows, &result.summary),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::FAILURE;
    }
    let _ = io::stderr().flush();
    if result.failures > 0 {
        eprintln!("{} configuration(s) failed verification", result.failures);
        return ExitCode::FAILURE;
    }
    ExitCode::SUCCESS
}
