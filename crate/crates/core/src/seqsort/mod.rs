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

//! Sequential in-place sorts used for the blocks.
//!
//! Every algorithm takes an `is_less` strict-weak-order predicate, like
//! `slice::sort_unstable_by` does with an `Ordering`. Ranges shorter than
//! [`SMALL_SORT_THRESHOLD`] are finished with insertion sort.

mod block;
mod heap;
mod insertion;
mod intro;
mod pdq;
mod stats;

pub use stats::SeqSortStats;

use crate::config::BlockSort;
use crate::record::{key_less, SortRecord};
use stats::Probe;

/// Ranges below this length go to insertion sort in every quicksort variant.
pub const SMALL_SORT_THRESHOLD: usize = 24;

/// Offsets buffered per side by the block partition.
pub const BLOCK_BUFFER_LEN: usize = 128;

/// Above this length BlockQuicksort picks the median of `⌊√n⌋` samples
/// instead of the median of three.
pub const SQRT_PIVOT_THRESHOLD: usize = 20_000;

pub fn insertion_sort<T: Copy, F: FnMut(&T, &T) -> bool>(v: &mut [T], mut is_less: F) {
    insertion::insertion_sort(v, &mut is_less, &mut ());
}

pub fn heapsort<T: Copy, F: FnMut(&T, &T) -> bool>(v: &mut [T], mut is_less: F) {
    heap::heapsort(v, &mut is_less, &mut ());
}

/// Median-of-three quicksort that switches to heapsort once the recursion
/// depth reaches `2·⌊log2 n⌋`.
pub fn introsort<T: Copy, F: FnMut(&T, &T) -> bool>(v: &mut [T], mut is_less: F) {
    intro::introsort(v, &mut is_less, &mut ());
}

/// Quicksort with three-way partitioning and a bad-partition budget of
/// `⌊log2 n⌋` before heapsort takes over.
pub fn pdqsort<T: Copy, F: FnMut(&T, &T) -> bool>(v: &mut [T], mut is_less: F) {
    pdq::pdqsort(v, &mut is_less, &mut ());
}

/// Quicksort whose partition step buffers the offsets of misplaced elements
/// with branch-free comparisons and exchanges them in a separate pass.
pub fn block_quicksort<T: Copy, F: FnMut(&T, &T) -> bool>(v: &mut [T], mut is_less: F) {
    block::block_quicksort(v, &mut is_less, &mut ());
}

impl BlockSort {
    pub fn sort_by<T: Copy, F: FnMut(&T, &T) -> bool>(self, v: &mut [T], is_less: F) {
        match self {
            BlockSort::Introsort => introsort(v, is_less),
            BlockSort::Pdqsort => pdqsort(v, is_less),
            BlockSort::BlockQuicksort => block_quicksort(v, is_less),
            BlockSort::Heapsort => heapsort(v, is_less),
        }
    }

    pub fn sort<T: SortRecord>(self, v: &mut [T]) {
        self.sort_by(v, key_less::<T>)
    }
}

/// Runs `algorithm` with instrumentation and returns its counters.
///
/// With `audit_exchanges` set, the block partition re-checks every buffered
/// pair before exchanging it; those extra predicate calls are included in
/// `comparisons`.
pub fn sort_with_stats<T: Copy, F: FnMut(&T, &T) -> bool>(
    algorithm: BlockSort,
    v: &mut [T],
    mut is_less: F,
    audit_exchanges: bool,
) -> SeqSortStats {
    let mut stats = SeqSortStats {
        audit_exchanges,
        ..SeqSortStats::default()
    };
    let mut comparisons = 0u64;
    let mut counting = |a: &T, b: &T| {
        comparisons += 1;
        is_less(a, b)
    };
    match algorithm {
        BlockSort::Introsort => intro::introsort(v, &mut counting, &mut stats),
        BlockSort::Pdqsort => pdq::pdqsort(v, &mut counting, &mut stats),
        BlockSort::BlockQuicksort => block::block_quicksort(v, &mut counting, &mut stats),
        BlockSort::Heapsort => heap::heapsort(v, &mut counting, &mut stats),
    }
    stats.comparisons = comparisons;
    stats
}

/// Instrumented insertion sort.
pub fn insertion_sort_with_stats<T: Copy, F: FnMut(&T, &T) -> bool>(
    v: &mut [T],
    mut is_less: F,
) -> SeqSortStats {
    let mut stats = SeqSortStats::default();
    let mut comparisons = 0u64;
    let mut counting = |a: &T, b: &T| {
        comparisons += 1;
        is_less(a, b)
    };
    insertion::insertion_sort(v, &mut counting, &mut stats);
    stats.comparisons = comparisons;
    stats
}

#[inline]
pub(crate) fn floor_log2(n: usize) -> usize {
    debug_assert!(n > 0);
    (usize::BITS - 1 - n.leading_zeros()) as usize
}

/// Orders the three indices by the values they point at (three comparisons).
fn sort3<T, F: FnMut(&T, &T) -> bool>(
    v: &[T],
    mut a: usize,
    mut b: usize,
    mut c: usize,
    is_less: &mut F,
) -> [usize; 3] {
    if is_less(&v[b], &v[a]) {
        std::mem::swap(&mut a, &mut b);
    }
    if is_less(&v[c], &v[b]) {
        std::mem::swap(&mut b, &mut c);
        if is_less(&v[b], &v[a]) {
            std::mem::swap(&mut a, &mut b);
        }
    }
    [a, b, c]
}

/// Index of the median of `v[a]`, `v[b]`, `v[c]`, and whether it equals one
/// of its neighbours in sorted order.
fn median3<T, F: FnMut(&T, &T) -> bool>(
    v: &[T],
    a: usize,
    b: usize,
    c: usize,
    is_less: &mut F,
) -> (usize, bool) {
    let [lo, mid, hi] = sort3(v, a, b, c, is_less);
    let tie = !is_less(&v[lo], &v[mid]) || !is_less(&v[mid], &v[hi]);
    (mid, tie)
}

/// Moves the elements satisfying `goes_left` to the front with a two-sided
/// scan and returns how many there are.
fn partition_by<T, G: FnMut(&T) -> bool, P: Probe>(
    v: &mut [T],
    goes_left: &mut G,
    probe: &mut P,
) -> usize {
    let (mut l, mut r) = (0, v.len());
    loop {
        while l < r && goes_left(&v[l]) {
            l += 1;
        }
        while l < r && !goes_left(&v[r - 1]) {
            r -= 1;
        }
        if l >= r {
            return l;
        }
        v.swap(l, r - 1);
        probe.swap();
        l += 1;
        r -= 1;
    }
}
