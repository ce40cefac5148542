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

use super::{regular_picks, PivotPlan};
use crate::seqsort::introsort;

/// Regular sampling: block `b` of length `L` contributes the elements at
/// `⌊(j+1)·L/n_P⌋` for `j < n_P - 1` (clamped to the block), the samples are
/// sorted, and the pivots are taken from them at regular intervals.
pub fn psrs_select<T: Copy, F: Fn(&T, &T) -> bool>(
    sorted_blocks: &[&[T]],
    n_partitions: usize,
    is_less: &F,
) -> PivotPlan<T> {
    if n_partitions <= 1 {
        return PivotPlan::empty(false);
    }
    let per_block = n_partitions - 1;
    let mut samples = Vec::with_capacity(sorted_blocks.len() * per_block);
    for block in sorted_blocks.iter().filter(|b| !b.is_empty()) {
        let len = block.len();
        samples.extend((0..per_block).map(|j| block[((j + 1) * len / n_partitions).min(len - 1)]));
    }
    if samples.is_empty() {
        return PivotPlan::empty(false);
    }
    introsort(&mut samples, is_less);
    PivotPlan {
        pivots: regular_picks(&samples, per_block),
        tie_counts: None,
    }
}
