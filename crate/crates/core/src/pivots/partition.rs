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

use std::ops::Range;

use rayon::prelude::*;

use super::{lower_bound, upper_bound, PivotPlan};
use crate::error::{Error, Result};

/// Cut points of every block: partition `k` of block `b` is
/// `bounds[b][k]..bounds[b][k + 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub bounds: Vec<Vec<usize>>,
}

impl BoundaryMatrix {
    pub fn n_blocks(&self) -> usize {
        self.bounds.len()
    }

    pub fn n_partitions(&self) -> usize {
        self.bounds.first().map_or(0, |b| b.len() - 1)
    }

    pub fn range(&self, block: usize, partition: usize) -> Range<usize> {
        self.bounds[block][partition]..self.bounds[block][partition + 1]
    }

    /// Global size of every partition, summed over blocks.
    pub fn partition_sizes(&self) -> Vec<usize> {
        (0..self.n_partitions())
            .map(|k| (0..self.n_blocks()).map(|b| self.range(b, k).len()).sum())
            .collect()
    }

    /// Cuts start at 0, end at the block length and never decrease.
    pub fn is_valid_for(&self, block_lens: &[usize]) -> bool {
        self.bounds.len() == block_lens.len()
            && self.bounds.iter().zip(block_lens).all(|(cuts, &len)| {
                cuts.first() == Some(&0)
                    && cuts.last() == Some(&len)
                    && cuts.windows(2).all(|w| w[0] <= w[1])
                    && cuts.len() == self.n_partitions() + 1
            })
    }
}

/// Cuts the sorted blocks at the plan's pivots.
///
/// Without tie counts boundary `k` sits after the last element `<= P_k` of
/// each block. With tie counts it sits after the elements `< P_k` plus a
/// share of the elements equal to `P_k`; the `c_k` ties are handed out
/// greedily starting from block 0.
pub fn partition_blocks<T, F>(
    sorted_blocks: &[&[T]],
    plan: &PivotPlan<T>,
    is_less: &F,
) -> Result<BoundaryMatrix>
where
    T: Copy + Send + Sync,
    F: Fn(&T, &T) -> bool + Sync,
{
    let pivots = &plan.pivots;
    if pivots.windows(2).any(|w| is_less(&w[1], &w[0])) {
        return Err(Error::InvalidPlan("pivots must be non-decreasing"));
    }
    let Some(ties) = &plan.tie_counts else {
        let bounds = sorted_blocks
            .par_iter()
            .map(|block| {
                let mut cuts = Vec::with_capacity(pivots.len() + 2);
                cuts.push(0);
                cuts.extend(pivots.iter().map(|p| upper_bound(block, p, is_less)));
                cuts.push(block.len());
                cuts
            })
            .collect();
        return Ok(BoundaryMatrix { bounds });
    };
    if ties.len() != pivots.len() {
        return Err(Error::InvalidPlan("one tie count per pivot is required"));
    }

    // (first index not < P_k, number equal to P_k) per block and pivot.
    let ranks: Vec<Vec<(usize, usize)>> = sorted_blocks
        .par_iter()
        .map(|block| {
            pivots
                .iter()
                .map(|p| {
                    let lower = lower_bound(block, p, is_less);
                    (lower, upper_bound(block, p, is_less) - lower)
                })
                .collect()
        })
        .collect();

    let mut bounds: Vec<Vec<usize>> = sorted_blocks
        .iter()
        .map(|_| Vec::with_capacity(pivots.len() + 2))
        .collect();
    for cuts in &mut bounds {
        cuts.push(0);
    }
    for (k, &requested) in ties.iter().enumerate() {
        let mut remaining = requested;
        for (b, cuts) in bounds.iter_mut().enumerate() {
            let (lower, equal) = ranks[b][k];
            let take = remaining.min(equal);
            remaining -= take;
            cuts.push(lower + take);
        }
        if remaining > 0 {
            return Err(Error::TieCountExceeded {
                pivot: k + 1,
                requested,
                available: requested - remaining,
            });
        }
    }
    for (cuts, block) in bounds.iter_mut().zip(sorted_blocks) {
        cuts.push(block.len());
    }
    Ok(BoundaryMatrix { bounds })
}
