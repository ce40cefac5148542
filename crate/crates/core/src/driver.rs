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

//! The four-step parallel samplesort.

use std::time::Duration;

use rayon::prelude::*;
use rayon::{ThreadPool, ThreadPoolBuilder};

use crate::config::{make_block_layout, BlockLayout, SamplesortConfig};
use crate::error::{Error, Result};
use crate::pivots::{partition_blocks, select_pivots, PivotPlan};
use crate::record::{key_less, SortRecord};

/// One step-4 merge: partition `partition` of every block is merged into
/// `output[offset..offset + len]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MergeTask {
    pub partition: usize,
    pub offset: usize,
    pub len: usize,
}

/// What a sort did, for inspection and tests.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SortReport {
    pub layout: BlockLayout,
    pub pivot_count: usize,
    pub merge_tasks: Vec<MergeTask>,
}

impl SortReport {
    /// Largest minus smallest merge task.
    pub fn merge_imbalance(&self) -> usize {
        let lens = self.merge_tasks.iter().map(|t| t.len);
        lens.clone().max().unwrap_or(0) - lens.min().unwrap_or(0)
    }
}

/// A configured sorter owning its thread team.
pub struct Sorter {
    config: SamplesortConfig,
    pool: ThreadPool,
}

fn split_by_lens<T>(mut rest: &mut [T], lens: impl IntoIterator<Item = usize>) -> Vec<&mut [T]> {
    lens.into_iter()
        .map(|len| {
            let (head, tail) = std::mem::take(&mut rest).split_at_mut(len);
            rest = tail;
            head
        })
        .collect()
}

impl Sorter {
    pub fn new(config: SamplesortConfig) -> Result<Self> {
        config.validate()?;
        let pool = ThreadPoolBuilder::new()
            .num_threads(config.threads)
            .thread_name(|i| format!("samplesort-{i}"))
            .build()
            .map_err(|e| Error::ThreadPool(e.to_string()))?;
        Ok(Self { config, pool })
    }

    pub fn config(&self) -> &SamplesortConfig {
        &self.config
    }

    /// Sorts `input` into `output` by `is_less`. `input` is used as scratch
    /// and left with its blocks sorted.
    ///
    /// Each block is sorted by a worker of the team, so pages the caller has
    /// not touched yet are first touched by their sorting worker; the same
    /// holds for the output range a merge task writes.
    pub fn sort_into_by<T, F>(
        &self,
        input: &mut [T],
        output: &mut [T],
        is_less: F,
    ) -> Result<SortReport>
    where
        T: Copy + Send + Sync,
        F: Fn(&T, &T) -> bool + Sync,
    {
        if output.len() != input.len() {
            return Err(Error::LengthMismatch {
                expected: input.len(),
                actual: output.len(),
            });
        }
        let config = &self.config;
        let layout = make_block_layout(input.len(), config.n_blocks);
        if input.is_empty() {
            return Ok(SortReport {
                layout,
                pivot_count: 0,
                merge_tasks: Vec::new(),
            });
        }
        self.pool.install(|| {
            // 1. sort every block
            let lens = layout.block_ranges.iter().map(|r| r.len());
            split_by_lens(input, lens)
                .into_par_iter()
                .for_each(|block| {
                    config.block_sort.sort_by(block, |a, b| is_less(a, b));
                });
            let blocks: Vec<&[T]> = layout
                .block_ranges
                .iter()
                .map(|r| &input[r.clone()])
                .collect();

            // 2. pivots
            let plan: PivotPlan<T> = select_pivots(&blocks, config, &is_less);

            // 3. per-block boundaries
            let matrix = partition_blocks(&blocks, &plan, &is_less)?;

            // 4. offsets, then one merge per partition
            let sizes = matrix.partition_sizes();
            let mut offset = 0;
            let merge_tasks: Vec<MergeTask> = sizes
                .iter()
                .enumerate()
                .map(|(partition, &len)| {
                    let task = MergeTask {
                        partition,
                        offset,
                        len,
                    };
                    offset += len;
                    task
                })
                .collect();
            debug_assert_eq!(offset, input.len());

            split_by_lens(output, sizes.iter().copied())
                .into_par_iter()
                .enumerate()
                .try_for_each(|(k, out)| {
                    let runs: Vec<&[T]> = blocks
                        .iter()
                        .enumerate()
                        .map(|(b, block)| &block[matrix.range(b, k)])
                        .collect();
                    config
                        .merge_strategy
                        .merge_by(&runs, out, |a, b| is_less(a, b))
                })?;

            Ok(SortReport {
                layout: layout.clone(),
                pivot_count: plan.pivots.len(),
                merge_tasks,
            })
        })
    }

    pub fn sort_into<T: SortRecord>(
        &self,
        input: &mut [T],
        output: &mut [T],
    ) -> Result<SortReport> {
        self.sort_into_by(input, output, key_less::<T>)
    }

    /// Sorts in place through a scratch copy.
    pub fn sort<T: SortRecord>(&self, records: &mut [T]) -> Result<SortReport> {
        let mut scratch = records.to_vec();
        self.sort_into(&mut scratch, records)
    }
}

/// Sorts `input` into `output` with a thread team built for this call.
pub fn parallel_samplesort<T, F>(
    input: &mut [T],
    output: &mut [T],
    config: &SamplesortConfig,
    is_less: F,
) -> Result<SortReport>
where
    T: Copy + Send + Sync,
    F: Fn(&T, &T) -> bool + Sync,
{
    Sorter::new(config.clone())?.sort_into_by(input, output, is_less)
}

pub fn sort_into<T: SortRecord>(
    input: &mut [T],
    output: &mut [T],
    config: &SamplesortConfig,
) -> Result<SortReport> {
    parallel_samplesort(input, output, config, key_less::<T>)
}

/// Sorts `records` ascending by key.
pub fn sort<T: SortRecord>(records: &mut [T], config: &SamplesortConfig) -> Result<()> {
    Sorter::new(config.clone())?.sort(records).map(drop)
}

/// Sorts `records` ascending by `key`; keys must be totally ordered on the
/// given data (no NaN).
pub fn sort_by_key<T, K, F>(records: &mut [T], key: F, config: &SamplesortConfig) -> Result<()>
where
    T: Copy + Send + Sync,
    K: PartialOrd,
    F: Fn(&T) -> K + Sync,
{
    let mut scratch = records.to_vec();
    parallel_samplesort(&mut scratch, records, config, |a, b| key(a) < key(b)).map(drop)
}

/// Parallel efficiency `t1 / (threads · tn)`.
pub fn thread_efficiency(t1: Duration, tn: Duration, threads: usize) -> Result<f64> {
    if t1.is_zero() || tn.is_zero() {
        return Err(Error::NonPositiveDuration);
    }
    if threads == 0 {
        return Err(Error::InvalidConfig("threads must be positive"));
    }
    Ok(t1.as_secs_f64() / (threads as f64 * tn.as_secs_f64()))
}
