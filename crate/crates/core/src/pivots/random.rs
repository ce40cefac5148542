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
use crate::datagen::rng::SeededRng;
use crate::seqsort::introsort;

/// Draws `oversample · n_partitions` positions uniformly from every
/// non-empty block, sorts the drawn elements and picks the pivots from them
/// at regular intervals. The blocks need not be sorted.
pub fn random_sample_select<T: Copy, F: Fn(&T, &T) -> bool>(
    blocks: &[&[T]],
    n_partitions: usize,
    oversample: usize,
    seed: u64,
    is_less: &F,
) -> PivotPlan<T> {
    if n_partitions <= 1 {
        return PivotPlan::empty(false);
    }
    let draws = oversample.max(1) * n_partitions;
    let mut rng = SeededRng::new(seed);
    let mut samples = Vec::with_capacity(blocks.len() * draws);
    for block in blocks.iter().filter(|b| !b.is_empty()) {
        samples.extend((0..draws).map(|_| block[rng.below(block.len() as u64) as usize]));
    }
    if samples.is_empty() {
        return PivotPlan::empty(false);
    }
    introsort(&mut samples, is_less);
    PivotPlan {
        pivots: regular_picks(&samples, n_partitions - 1),
        tie_counts: None,
    }
}
