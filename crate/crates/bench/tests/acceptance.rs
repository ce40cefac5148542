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

//! Acceptance suite. Prints one PASS/FAIL line per criterion.
//!
//! Criteria that are only defined on a machine with at least eight cores
//! still run and report their measured values everywhere. On smaller hosts
//! their FAIL lines are reported but do not fail the target unless
//! `SAMPLESORT_ACCEPTANCE_STRICT=1` is set.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::Instant;

use samplesort::datagen::rng::SeededRng;
use samplesort::datagen::{generate, Workload, WorkloadKind, WorkloadSpec};
use samplesort::kmerge::{total_len, SelectionTree};
use samplesort::pivots::{partition_blocks, pses_select};
use samplesort::seqsort::sort_with_stats;
use samplesort::{
    key_less, BlockSort, MergeStrategy, PairRecord, PivotStrategy, SamplesortConfig, SortRecord,
    Sorter,
};
use samplesort_bench::{oracle_checksum, read_csv, run_suite, SuitePlan, SummaryRow};

const MIN_CORES: usize = 8;

/// Name, whether it needs `MIN_CORES`, and the check.
type Criterion = (&'static str, bool, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
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

fn oracle_bits<T: SortRecord>(input: &[T]) -> Vec<u64> {
    let mut v = input.to_vec();
    v.sort_by(|a, b| a.key().partial_cmp(&b.key()).unwrap());
    v.iter().map(|r| r.key_bits()).collect()
}

fn sorted_bits<T: SortRecord>(input: &[T], sorter: &Sorter) -> Option<Vec<u64>> {
    let mut scratch = input.to_vec();
    let mut out = input.to_vec();
    sorter.sort_into(&mut scratch, &mut out).ok()?;
    Some(out.iter().map(|r| r.key_bits()).collect())
}

fn oracle_matrix() -> Outcome {
    let sizes = [0usize, 1, 2, 1_000, 100_000];
    let inputs: Vec<Workload> = WorkloadKind::ALL
        .iter()
        .flat_map(|&k| sizes.map(|n| generate(&WorkloadSpec::new(k, n, 1 + n as u64))))
        .collect();
    let expected: Vec<Vec<u64>> = inputs
        .iter()
        .map(|w| with_records!(w, |v| oracle_bits(v)))
        .collect();
    let mut runs = 0;
    let mut failures = Vec::new();
    for threads in [1usize, 2, 4, 8] {
        for &p in PivotStrategy::ALL {
            for &b in BlockSort::ALL {
                for &m in MergeStrategy::ALL {
                    let config = SamplesortConfig::with_threads(threads)
                        .pivot_strategy(p)
                        .block_sort(b)
                        .merge_strategy(m);
                    let sorter = Sorter::new(config).unwrap();
                    for (w, exp) in inputs.iter().zip(&expected) {
                        runs += 1;
                        let got = with_records!(w, |v| sorted_bits(v, &sorter));
                        if got.as_ref() != Some(exp) {
                            failures.push(format!(
                                "{p}/{b}/{m} t={threads} {} n={}",
                                w.kind(),
                                w.len()
                            ));
                        }
                    }
                }
            }
        }
    }
    outcome(
        failures.is_empty(),
        format!(
            "{runs} runs, {} mismatches {:?}",
            failures.len(),
            &failures[..failures.len().min(3)]
        ),
    )
}

/// Brute-force global partition sizes implied by `pivots` and `ties`.
fn brute_sizes(data: &[u32], pivots: &[u32], ties: &[usize]) -> Vec<usize> {
    let mut cuts = vec![0];
    for (&p, &c) in pivots.iter().zip(ties) {
        cuts.push(data.iter().filter(|&&x| x < p).count() + c);
    }
    cuts.push(data.len());
    cuts.windows(2).map(|w| w[1] - w[0]).collect()
}

fn pses_exactness() -> Outcome {
    let plan = pses_select(&[&[1u32, 1, 4], &[1, 1, 1]], 2, &key_less::<u32>);
    let example = plan.pivots == [1] && plan.tie_counts == Some(vec![3]);

    let mut rng = SeededRng::new(2024);
    let mut bad = Vec::new();
    for case in 0..1000 {
        let n = rng.below(10_001) as usize;
        let n_p = 1 + rng.below(16) as usize;
        let n_b = 1 + rng.below(16) as usize;
        let shape = case % 4;
        let data: Vec<u32> = match shape {
            0 => (0..n).map(|_| rng.next_u32()).collect(),
            1 => (0..n).map(|_| rng.below(3) as u32).collect(),
            2 => vec![7; n],
            _ => match generate(&WorkloadSpec::new(WorkloadKind::Duplicate3, n, case)) {
                Workload::Duplicate3(v) => v,
                _ => unreachable!(),
            },
        };
        let config = SamplesortConfig::with_threads(2)
            .blocks(n_b)
            .partitions(n_p);
        let sorter = Sorter::new(config).unwrap();
        let mut scratch = data.clone();
        let mut out = data.clone();
        let Ok(report) = sorter.sort_into(&mut scratch, &mut out) else {
            bad.push(format!("case {case}: error"));
            continue;
        };
        let sizes: Vec<usize> = report.merge_tasks.iter().map(|t| t.len).collect();
        let (lo, hi) = (n / n_p, n.div_ceil(n_p));
        let balanced = sizes.len() == n_p && sizes.iter().all(|&s| s == lo || s == hi);

        // the pivots and tie counts themselves, checked by counting
        let blocks: Vec<&[u32]> = report
            .layout
            .block_ranges
            .iter()
            .map(|r| &scratch[r.clone()])
            .collect();
        let plan = pses_select(&blocks, n_p, &key_less::<u32>);
        let ties = plan.tie_counts.clone().unwrap_or_default();
        let counted = n == 0 || brute_sizes(&data, &plan.pivots, &ties) == sizes;
        let matrix_ok = partition_blocks(&blocks, &plan, &key_less::<u32>)
            .is_ok_and(|m| m.partition_sizes() == sizes);
        let sorted = out.windows(2).all(|w| w[0] <= w[1]);
        if !(balanced && counted && matrix_ok && sorted) {
            bad.push(format!(
                "case {case}: n={n} n_p={n_p} n_b={n_b} sizes={sizes:?}"
            ));
        }
    }
    outcome(
        example && bad.is_empty(),
        format!(
            "duplicate-pivot example {}, 1000 cases, {} violations {:?}",
            if example { "ok" } else { "WRONG" },
            bad.len(),
            &bad[..bad.len().min(2)]
        ),
    )
}

fn means(summary: &[SummaryRow], pivot: PivotStrategy, threads: usize) -> Option<f64> {
    summary
        .iter()
        .find(|s| s.pivot == pivot && s.threads == threads)
        .and_then(|s| s.mean_s)
}

fn timed_plan(input: WorkloadKind, pivots: Vec<PivotStrategy>, threads: Vec<usize>) -> SuitePlan {
    SuitePlan {
        pivots,
        block_sorts: vec![BlockSort::BlockQuicksort],
        merges: vec![MergeStrategy::SelectionTree],
        inputs: vec![input],
        sizes: vec![10_000_000],
        threads,
        reps: 3,
        warmup: 1,
        seed: 5,
        mem_budget: None,
    }
}

fn cores() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn duplicate_pathology() -> Outcome {
    let plan = timed_plan(
        WorkloadKind::Duplicate3,
        vec![PivotStrategy::Psrs, PivotStrategy::Pses],
        vec![4, 8],
    );
    let result = run_suite(&plan, |_| {}).unwrap();
    let (Some(psrs4), Some(psrs8), Some(pses8)) = (
        means(&result.summary, PivotStrategy::Psrs, 4),
        means(&result.summary, PivotStrategy::Psrs, 8),
        means(&result.summary, PivotStrategy::Pses, 8),
    ) else {
        return outcome(
            false,
            format!("{} configurations failed verification", result.failures),
        );
    };
    let ratio = pses8 / psrs8;
    let speedup = psrs4 / psrs8;
    outcome(
        ratio <= 0.6 && speedup < 1.15,
        format!(
            "PSES/PSRS at t=8 = {ratio:.3} (need <= 0.6), PSRS t4->t8 speedup = {speedup:.3} (need < 1.15); host cores = {}",
            cores()
        ),
    )
}

fn scaling_trend() -> Outcome {
    let plan = timed_plan(
        WorkloadKind::UniformInt,
        vec![PivotStrategy::Pses],
        vec![1, 8],
    );
    let result = run_suite(&plan, |_| {}).unwrap();
    let (Some(t1), Some(t8)) = (
        means(&result.summary, PivotStrategy::Pses, 1),
        means(&result.summary, PivotStrategy::Pses, 8),
    ) else {
        return outcome(
            false,
            format!("{} configurations failed verification", result.failures),
        );
    };
    let speedup = t1 / t8;
    outcome(
        speedup >= 3.0,
        format!(
            "t1 = {t1:.3}s, t8 = {t8:.3}s, speedup = {speedup:.2} (need >= 3); host cores = {}",
            cores()
        ),
    )
}

fn random_runs(rng: &mut SeededRng) -> Vec<Vec<PairRecord>> {
    let k = rng.below(33) as usize;
    let range = [2, 100, u64::MAX][rng.below(3) as usize];
    (0..k)
        .map(|run| {
            let len = rng.below(60) as usize;
            let mut v: Vec<PairRecord> = (0..len)
                .map(|i| PairRecord {
                    key: if range == u64::MAX {
                        rng.next_u64()
                    } else {
                        rng.below(range)
                    },
                    index: ((run as u64) << 32) | i as u64,
                })
                .collect();
            v.sort_by_key(|p| p.key);
            v
        })
        .collect()
}

fn merge_equivalence() -> Outcome {
    let mut rng = SeededRng::new(99);
    let mut mismatches = 0;
    let mut touch_errors = 0;
    let mut pops_total = 0u64;
    for _ in 0..10_000 {
        let runs = random_runs(&mut rng);
        let refs: Vec<&[PairRecord]> = runs.iter().map(|r| r.as_slice()).collect();
        let n = total_len(&refs);
        let outs: Vec<Vec<u64>> = MergeStrategy::ALL
            .iter()
            .map(|s| {
                let mut out = vec![PairRecord::default(); n];
                s.merge(&refs, &mut out).unwrap();
                out.iter().map(|p| p.key).collect()
            })
            .collect();
        let mut expected: Vec<u64> = runs.iter().flatten().map(|p| p.key).collect();
        expected.sort_unstable();
        mismatches += outs.iter().filter(|o| **o != expected).count();

        let depth = u64::from(refs.len().next_power_of_two().trailing_zeros());
        let ceil_log2 = if refs.len() <= 1 {
            0
        } else {
            u64::from(usize::BITS - (refs.len() - 1).leading_zeros())
        };
        let mut tree = SelectionTree::new(&refs, key_less::<PairRecord>);
        let mut pops = 0;
        while tree.pop().unwrap().is_some() {
            pops += 1;
            if tree.node_touches() != pops * ceil_log2 || depth != ceil_log2 {
                touch_errors += 1;
                break;
            }
        }
        pops_total += pops;
    }
    outcome(
        mismatches == 0 && touch_errors == 0,
        format!("10000 run sets, {pops_total} pops, {mismatches} sequence mismatches, {touch_errors} touch-count violations"),
    )
}

fn sequential_robustness() -> Outcome {
    let n = 100_000usize;
    let bound = 4.0 * n as f64 * (n as f64).log2();
    let mut details = Vec::new();
    let mut pass = true;
    for algo in [BlockSort::Introsort, BlockSort::Pdqsort] {
        let mut v: Vec<u32> = (0..n as u32).rev().collect();
        let stats = sort_with_stats(algo, &mut v, |a, b| a < b, false);
        let ok = stats.comparisons as f64 <= bound && v.windows(2).all(|w| w[0] <= w[1]);
        pass &= ok;
        details.push(format!(
            "{algo} reverse: {:.2} N log2 N",
            stats.comparisons as f64 / (bound / 4.0)
        ));
    }
    let mut cs = Vec::new();
    for n in [1_000usize, 10_000, 100_000] {
        let Workload::Duplicate3(mut v) =
            generate(&WorkloadSpec::new(WorkloadKind::Duplicate3, n, 17))
        else {
            unreachable!()
        };
        let stats = sort_with_stats(BlockSort::Pdqsort, &mut v, |a, b| a < b, false);
        cs.push(stats.comparisons as f64 / (n as f64 * 3.0));
    }
    let (lo, hi) = cs
        .iter()
        .fold((f64::MAX, 0f64), |(lo, hi), &c| (lo.min(c), hi.max(c)));
    pass &= hi / lo <= 2.0;
    details.push(format!(
        "pdq dup3 C = {cs:.2?} (max/min {:.2}, need <= 2)",
        hi / lo
    ));
    outcome(pass, details.join("; "))
}

fn protocol_fidelity() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bench.csv");
    let (n, seed) = (100_000usize, 42u64);
    let status = Command::new(env!("CARGO_BIN_EXE_benchcli"))
        .args([
            "--algo",
            "psrs,pses",
            "--input",
            "uint,dup3,pair",
            "--n",
            "1e5",
        ])
        .args(["--threads", "1,2", "--reps", "20", "--seed", "42", "--out"])
        .arg(&path)
        .stderr(std::process::Stdio::null())
        .status()
        .unwrap();
    if !status.success() {
        return outcome(false, format!("benchcli exited with {status}"));
    }
    let (rows, summary) = read_csv(std::fs::File::open(&path).unwrap()).unwrap();
    let mut problems = Vec::new();
    for s in &summary {
        let group: Vec<_> = rows
            .iter()
            .filter(|r| {
                r.algo == s.algo && r.input == s.input && r.n == s.n && r.threads == s.threads
            })
            .collect();
        if group.len() != 20 {
            problems.push(format!(
                "{} {} t={}: {} rows",
                s.algo,
                s.input,
                s.threads,
                group.len()
            ));
            continue;
        }
        let mean = group.iter().filter_map(|r| r.elapsed_s).sum::<f64>() / 20.0;
        if s.mean_s.is_none_or(|m| (m - mean).abs() > 1e-12 * mean) {
            problems.push(format!(
                "{} {} t={}: mean {:?} vs {mean}",
                s.algo, s.input, s.threads, s.mean_s
            ));
        }
        let oracle = with_records!(&generate(&WorkloadSpec::new(s.input, n, seed)), |v| {
            oracle_checksum(v)
        });
        if group
            .iter()
            .any(|r| r.checksum != oracle || r.elapsed_s.is_none())
        {
            problems.push(format!(
                "{} {} t={}: checksum mismatch",
                s.algo, s.input, s.threads
            ));
        }
    }
    let expected_configs = 2 * 3 * 2;
    if summary.len() != expected_configs || rows.len() != 20 * expected_configs {
        problems.push(format!(
            "{} summary rows, {} rows",
            summary.len(),
            rows.len()
        ));
    }
    outcome(
        problems.is_empty(),
        format!(
            "{} configurations x 20 reps, {} problems {:?}",
            summary.len(),
            problems.len(),
            problems
        ),
    )
}

fn main() -> ExitCode {
    let strict = std::env::var("SAMPLESORT_ACCEPTANCE_STRICT").is_ok_and(|v| v == "1");
    let criteria: [Criterion; 7] = [
        ("oracle correctness matrix", false, oracle_matrix),
        ("PSES exactness", false, pses_exactness),
        ("duplicate pathology", true, duplicate_pathology),
        ("scaling trend", true, scaling_trend),
        ("merge-strategy equivalence", false, merge_equivalence),
        ("sequential-sort robustness", false, sequential_robustness),
        ("benchmark protocol fidelity", false, protocol_fidelity),
    ];
    let mut blocking = 0;
    let mut failed = 0;
    for (name, needs_cores, run) in criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            outcome(false, format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        let verdict = if result.pass { "PASS" } else { "FAIL" };
        let mut note = String::new();
        if !result.pass {
            failed += 1;
            if needs_cores && cores() < MIN_CORES && !strict {
                note = format!(" [needs >= {MIN_CORES} cores; not counted]");
            } else {
                blocking += 1;
            }
        }
        println!("{verdict} {name}: {} ({secs:.1}s){note}", result.detail);
    }
    println!(
        "acceptance: {} passed, {failed} failed, {blocking} counted",
        7 - failed
    );
    if blocking > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
