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

//! Benchmark harness: timed repetitions of the samplesort driver over
//! generated workloads, with per-run verification and CSV output.

mod checksum;
mod results;
mod suite;

pub use checksum::{checksum_keys, oracle_checksum};
pub use results::{read_csv, write_csv, BenchRow, SummaryRow, SUMMARY_MARKER};
pub use suite::{
    algo_label, clamp_size, default_sizes, default_threads, run_suite, summarize, ConfigOutcome,
    SuitePlan, SuiteResult, DEFAULT_MEM_BUDGET, DEFAULT_REPS, DEFAULT_WARMUP,
};

#[derive(Debug, thiserror::Error)]
pub enum BenchError {
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed results file: {0}")]
    Format(String),
    #[error(transparent)]
    Sort(#[from] samplesort::Error),
}
