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

use std::time::{Duration, Instant};

use samplesort::datagen::{generate, Workload, WorkloadKind, WorkloadSpec};
use samplesort::{
    key_less, thread_efficiency, BlockSort, MergeStrategy, PivotStrategy, SamplesortConfig,
    SortRecord, Sorter,
};

use crate::checksum::{checksum_keys, oracle_checksum};
use crate::results::{BenchRow, SummaryRow};
use crate::BenchError;

pub const DEFAULT_REPS: usize = 20;
pub const DEFAULT_WARMUP: usize = 2;
pub const DEFAULT_MEM_BUDGET: usize = 4 << 30;

const DEFAULT_THREAD_SWEEP: [usize; 7] = [1, 2, 4, 8, 12, 24, 48];

/// Pristine input, scratch and output are live at once.
const COPIES: usize = 3;

/// Cross product of algorithm choices, workloads, sizes and thread counts.
#[derive(Clone, Debug)]
pub struct SuitePlan {
    pub pivots: Vec<PivotStrategy>,
    pub block_sorts: Vec<BlockSort>,
    pub merges: Vec<MergeStrategy>,
    pub inputs: Vec<WorkloadKind>,
    pub sizes: Vec<usize>,
    pub threads: Vec<usize>,
    pub reps: usize,
    pub warmup: usize,
    pub seed: u64,
    pub mem_budget: Option<usize>,
}

impl Default for SuitePlan {
    fn default() -> Self {
        Self {
            pivots: vec![PivotStrategy::Psrs, PivotStrategy::Pses],
            block_sorts: vec![BlockSort::BlockQuicksort],
            merges: vec![MergeStrategy::SelectionTree],
            inputs: WorkloadKind::ALL.to_vec(),
            sizes: default_sizes(),
            threads: default_threads(available_cores()),
            reps: DEFAULT_REPS,
            warmup: DEFAULT_WARMUP,
            seed: 0,
            mem_budget: Some(DEFAULT_MEM_BUDGET),
        }
    }
}

impl SuitePlan {
    /// Sizes actually run for `kind` once clamped to the memory budget.
    pub fn sizes_for(&self, kind: WorkloadKind) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        for &n in &self.sizes {
            let n = match self.mem_budget {
                Some(budget) => clamp_size(n, kind, budget),
                None => n,
            };
            if !out.contains(&n) {
                out.push(n);
            }
        }
        out
    }
}

fn available_cores() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// The default thread sweep restricted to `cores`.
pub fn default_threads(cores: usize) -> Vec<usize> {
    DEFAULT_THREAD_SWEEP
        .into_iter()
        .filter(|&t| t <= cores.max(1))
        .collect()
}

pub fn default_sizes() -> Vec<usize> {
    vec![10_000_000, 100_000_000]
}

/// Largest size not above `n` whose working set fits in `budget` bytes.
pub fn clamp_size(n: usize, kind: WorkloadKind, budget: usize) -> usize {
    n.min(budget / (COPIES * kind.record_size()))
}

pub fn algo_label(pivot: PivotStrategy, block_sort: BlockSort, merge: MergeStrategy) -> String {
    format!("{pivot}+{block_sort}+{merge}")
}

#[derive(Clone, Debug)]
pub struct ConfigOutcome {
    pub rows: Vec<BenchRow>,
    pub failed: bool,
}

#[derive(Clone, Debug, Default)]
pub struct SuiteResult {
    pub rows: Vec<BenchRow>,
    pub summary: Vec<SummaryRow>,
    pub failures: usize,
}

#[derive(Clone, Copy)]
struct ConfigKey {
    pivot: PivotStrategy,
    block_sort: BlockSort,
    merge: MergeStrategy,
    input: WorkloadKind,
    n: usize,
    threads: usize,
}

impl ConfigKey {
    fn row(&self, rep: usize, elapsed: Option<Duration>, checksum: u64) -> BenchRow {
        BenchRow {
            algo: algo_label(self.pivot, self.block_sort, self.merge),
            pivot: self.pivot,
            block_sort: self.block_sort,
            merge: self.merge,
            input: self.input,
            n: self.n,
            threads: self.threads,
            rep,
            elapsed_s: elapsed.map(|d| d.as_secs_f64()),
            checksum,
        }
    }
}

macro_rules! with_records {
    ($workload:expr, |$v:ident| $body:expr) => {
        match $workload {
            Workload::UniformInt($v) | Workload::AlmostSorted($v) | Workload::Duplicate3($v) => {
                $body
            }
            Workload::UniformFloat($v) => $body,
            Workload::Pair($v) => $body,
            Workload::Particle($v) => $body,
        }
    };
}

fn is_sorted<T: SortRecord>(v: &[T]) -> bool {
    v.windows(2).all(|w| !key_less(&w[1], &w[0]))
}

/// Warmup runs are untimed but still verified. The first failing run ends
/// the configuration with a failure row.
fn run_config<T: SortRecord>(
    pristine: &[T],
    oracle: u64,
    sorter: &Sorter,
    key: &ConfigKey,
    reps: usize,
    warmup: usize,
    observe: &mut dyn FnMut(&BenchRow),
) -> ConfigOutcome {
    let mut scratch = pristine.to_vec();
    let mut out = pristine.to_vec();
    let mut rows = Vec::with_capacity(reps);
    for i in 0..warmup + reps {
        scratch.copy_from_slice(pristine);
        let start = Instant::now();
        let result = sorter.sort_into(&mut scratch, &mut out);
        let elapsed = start.elapsed();
        let checksum = checksum_keys(&out);
        let ok = result.is_ok() && checksum == oracle && is_sorted(&out);
        let rep = i.saturating_sub(warmup);
        if !ok {
            let row = key.row(rep, None, checksum);
            observe(&row);
            rows.push(row);
            return ConfigOutcome { rows, failed: true };
        }
        if i >= warmup {
            let row = key.row(rep, Some(elapsed), checksum);
            observe(&row);
            rows.push(row);
        }
    }
    ConfigOutcome {
        rows,
        failed: false,
    }
}

/// Runs every configuration of `plan`, calling `observe` on each row as it
/// is recorded. The input of each (workload, size) pair is generated once
/// and copied into the working array before every repetition.
pub fn run_suite(
    plan: &SuitePlan,
    mut observe: impl FnMut(&BenchRow),
) -> Result<SuiteResult, BenchError> {
    let mut result = SuiteResult::default();
    for &input in &plan.inputs {
        for n in plan.sizes_for(input) {
            let workload = generate(&WorkloadSpec::new(input, n, plan.seed));
            let oracle = with_records!(&workload, |v| oracle_checksum(v));
            for &pivot in &plan.pivots {
                for &block_sort in &plan.block_sorts {
                    for &merge in &plan.merges {
                        for &threads in &plan.threads {
                            let config = SamplesortConfig::with_threads(threads)
                                .pivot_strategy(pivot)
                                .block_sort(block_sort)
                                .merge_strategy(merge)
                                .seed(plan.seed);
                            let sorter = Sorter::new(config)?;
                            let key = ConfigKey {
                                pivot,
                                block_sort,
                                merge,
                                input,
                                n,
                                threads,
                            };
                            let outcome = with_records!(&workload, |v| run_config(
                                v,
                                oracle,
                                &sorter,
                                &key,
                                plan.reps,
                                plan.warmup,
                                &mut observe
                            ));
                            result.failures += outcome.failed as usize;
                            result.rows.extend(outcome.rows);
                        }
                    }
                }
            }
        }
    }
    result.summary = summarize(&result.rows);
    Ok(result)
}

fn same_config(a: &BenchRow, b: &BenchRow) -> bool {
    a.algo == b.algo && a.input == b.input && a.n == b.n && a.threads == b.threads
}

/// Mean elapsed time per configuration, in order of first appearance, and
/// efficiency against the single-thread mean of the same algorithm, input
/// and size.
pub fn summarize(rows: &[BenchRow]) -> Vec<SummaryRow> {
    let mut summary: Vec<SummaryRow> = Vec::new();
    let mut firsts: Vec<&BenchRow> = Vec::new();
    for row in rows {
        if firsts.iter().any(|f| same_config(f, row)) {
            continue;
        }
        firsts.push(row);
        let group: Vec<&BenchRow> = rows.iter().filter(|r| same_config(r, row)).collect();
        let mean_s = if group.iter().any(|r| r.is_failure()) {
            None
        } else {
            Some(group.iter().filter_map(|r| r.elapsed_s).sum::<f64>() / group.len() as f64)
        };
        summary.push(SummaryRow {
            algo: row.algo.clone(),
            pivot: row.pivot,
            block_sort: row.block_sort,
            merge: row.merge,
            input: row.input,
            n: row.n,
            threads: row.threads,
            mean_s,
            efficiency: None,
        });
    }
    let base: Vec<Option<f64>> = summary
        .iter()
        .map(|s| {
            summary
                .iter()
                .find(|b| b.threads == 1 && b.algo == s.algo && b.input == s.input && b.n == s.n)
                .and_then(|b| b.mean_s)
        })
        .collect();
    for (s, t1) in summary.iter_mut().zip(base) {
        s.efficiency = match (t1, s.mean_s) {
            (Some(t1), Some(tn)) => thread_efficiency(
                Duration::from_secs_f64(t1),
                Duration::from_secs_f64(tn),
                s.threads,
            )
            .ok(),
            _ => None,
        };
    }
    summary
}
