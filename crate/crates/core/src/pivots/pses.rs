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

use rayon::prelude::*;

use super::PivotPlan;

/// Boundary rank `⌊k·N/n_P⌋` of pivot `k`.
pub(crate) fn boundary_rank(k: usize, total: usize, n_partitions: usize) -> usize {
    (k as u128 * total as u128 / n_partitions as u128) as usize
}

/// Global `(count < x, count <= x)` over the blocks, searching only inside
/// the given windows; every element before `lo[b]` is known to be `< x` and
/// every element from `hi[b]` on to be `> x`.
fn windowed_ranks<T, F: Fn(&T, &T) -> bool>(
    blocks: &[&[T]],
    lo: &[usize],
    hi: &[usize],
    x: &T,
    is_less: &F,
) -> (Vec<usize>, Vec<usize>) {
    blocks
        .iter()
        .enumerate()
        .map(|(b, block)| {
            let window = &block[lo[b]..hi[b]];
            (
                lo[b] + window.partition_point(|y| is_less(y, x)),
                lo[b] + window.partition_point(|y| !is_less(x, y)),
            )
        })
        .unzip()
}

/// Element of 0-based global rank `rank` in the union of the sorted blocks,
/// found by multisequence selection, together with its global count of
/// strictly smaller elements.
fn select_rank<T: Copy, F: Fn(&T, &T) -> bool>(
    blocks: &[&[T]],
    rank: usize,
    is_less: &F,
) -> (T, usize) {
    let mut lo = vec![0usize; blocks.len()];
    let mut hi: Vec<usize> = blocks.iter().map(|b| b.len()).collect();
    loop {
        let (probe_block, _) = lo
            .iter()
            .zip(&hi)
            .map(|(l, h)| h - l)
            .enumerate()
            .max_by_key(|&(b, width)| (width, std::cmp::Reverse(b)))
            .expect("at least one block");
        assert!(
            hi[probe_block] > lo[probe_block],
            "rank {rank} out of range"
        );
        let probe = blocks[probe_block][(lo[probe_block] + hi[probe_block]) / 2];
        let (less, leq) = windowed_ranks(blocks, &lo, &hi, &probe, is_less);
        let below: usize = less.iter().sum();
        let at_most: usize = leq.iter().sum();
        if below <= rank && rank < at_most {
            return (probe, below);
        }
        if at_most <= rank {
            lo = leq;
        } else {
            hi = less;
        }
    }
}

/// Pivot `k` (1-based) and its tie count.
///
/// The pivot is the smallest value `P` with `|{x <= P}| >= r_k`, where
/// `r_k = ⌊k·N/n_P⌋`, so `|{x < P}| <= r_k <= |{x <= P}|` and the tie count
/// is `r_k - |{x < P}|`. Returns `None` for empty input.
pub fn pses_select_pivot<T: Copy, F: Fn(&T, &T) -> bool>(
    sorted_blocks: &[&[T]],
    k: usize,
    n_partitions: usize,
    is_less: &F,
) -> Option<(T, usize)> {
    let total: usize = sorted_blocks.iter().map(|b| b.len()).sum();
    if total == 0 {
        return None;
    }
    let target = boundary_rank(k, total, n_partitions);
    let (pivot, below) = select_rank(sorted_blocks, target.saturating_sub(1), is_less);
    Some((pivot, target - below))
}

/// Exact splitting: pivots and tie counts such that every partition holds
/// `⌊N/n_P⌋` or `⌈N/n_P⌉` elements. The per-pivot searches are independent
/// and run in parallel on the current rayon pool.
pub fn pses_select<T, F>(sorted_blocks: &[&[T]], n_partitions: usize, is_less: &F) -> PivotPlan<T>
where
    T: Copy + Send + Sync,
    F: Fn(&T, &T) -> bool + Sync,
{
    let total: usize = sorted_blocks.iter().map(|b| b.len()).sum();
    if n_partitions <= 1 || total == 0 {
        return PivotPlan::empty(true);
    }
    let (pivots, ties) = (1..n_partitions)
        .into_par_iter()
        .map(|k| {
            pses_select_pivot(sorted_blocks, k, n_partitions, is_less).expect("non-empty input")
        })
        .unzip();
    PivotPlan {
        pivots,
        tie_counts: Some(ties),
    }
}
