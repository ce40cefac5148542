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

//! Pivot selection and per-block partition boundaries.

mod partition;
mod pses;
mod psrs;
mod random;

pub use partition::{partition_blocks, BoundaryMatrix};
pub use pses::{pses_select, pses_select_pivot};
pub use psrs::psrs_select;
pub use random::random_sample_select;

use crate::config::{PivotStrategy, SamplesortConfig};

/// The `n_partitions - 1` pivots, plus the tie counts when the plan comes
/// from exact splitting.
///
/// With tie counts, boundary `k` takes every element below `pivots[k]` and
/// exactly `tie_counts[k]` elements equal to it. Without them, boundary `k`
/// takes every element `<= pivots[k]`.
#[derive(Debug, Clone, PartialEq)]
pub struct PivotPlan<T> {
    pub pivots: Vec<T>,
    pub tie_counts: Option<Vec<usize>>,
}

impl<T> PivotPlan<T> {
    /// No pivots: one partition holding everything.
    pub fn empty(exact: bool) -> Self {
        Self {
            pivots: Vec::new(),
            tie_counts: exact.then(Vec::new),
        }
    }

    pub fn n_partitions(&self) -> usize {
        self.pivots.len() + 1
    }
}

/// First index whose element is not `< x`.
#[inline]
pub(crate) fn lower_bound<T, F: Fn(&T, &T) -> bool>(block: &[T], x: &T, is_less: &F) -> usize {
    block.partition_point(|y| is_less(y, x))
}

/// First index whose element is `> x`.
#[inline]
pub(crate) fn upper_bound<T, F: Fn(&T, &T) -> bool>(block: &[T], x: &T, is_less: &F) -> usize {
    block.partition_point(|y| !is_less(x, y))
}

/// Picks `count` entries at regular intervals from a sorted sample array:
/// entry `j` is `samples[⌊(j+1)·m/(count+1)⌋ - 1]`, clamped at zero.
pub(crate) fn regular_picks<T: Copy>(samples: &[T], count: usize) -> Vec<T> {
    let m = samples.len();
    let parts = count + 1;
    (0..count)
        .map(|j| samples[((j + 1) * m / parts).saturating_sub(1)])
        .collect()
}

/// Dispatches on `config.pivot_strategy`; `blocks` must already be sorted.
pub fn select_pivots<T, F>(blocks: &[&[T]], config: &SamplesortConfig, is_less: &F) -> PivotPlan<T>
where
    T: Copy + Send + Sync,
    F: Fn(&T, &T) -> bool + Sync,
{
    let n_p = config.n_partitions;
    match config.pivot_strategy {
        PivotStrategy::Psrs => psrs_select(blocks, n_p, is_less),
        PivotStrategy::Pses => pses_select(blocks, n_p, is_less),
        PivotStrategy::RandomSample => {
            random_sample_select(blocks, n_p, config.oversample, config.seed, is_less)
        }
    }
}
