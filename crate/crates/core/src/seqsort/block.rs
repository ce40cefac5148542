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

use super::heap::heapsort;
use super::insertion::insertion_sort;
use super::intro::{depth_limit, introsort};
use super::stats::Probe;
use super::{median3, BLOCK_BUFFER_LEN, SMALL_SORT_THRESHOLD, SQRT_PIVOT_THRESHOLD};

const BLOCK: usize = BLOCK_BUFFER_LEN;
const _: () = assert!(BLOCK <= u8::MAX as usize + 1);

pub(crate) fn block_quicksort<T: Copy, F: FnMut(&T, &T) -> bool, P: Probe>(
    v: &mut [T],
    is_less: &mut F,
    probe: &mut P,
) {
    if v.len() < 2 {
        return;
    }
    let limit = depth_limit(v.len());
    quicksort(v, is_less, limit, 0, probe);
}

/// Median of `⌊√len⌋` equally spaced samples, plus whether a sample adjacent
/// to the median in sorted order equals it.
fn sqrt_sample_pivot<T: Copy, F: FnMut(&T, &T) -> bool>(v: &[T], is_less: &mut F) -> (usize, bool) {
    let len = v.len();
    let count = (len as f64).sqrt() as usize;
    let step = len / count;
    let mut samples: Vec<usize> = (0..count).map(|i| i * step + step / 2).collect();
    introsort(
        &mut samples,
        &mut |&a: &usize, &b: &usize| is_less(&v[a], &v[b]),
        &mut (),
    );
    let m = count / 2;
    let pivot = &v[samples[m]];
    let tie = !is_less(&v[samples[m - 1]], pivot)
        || (m + 1 < count && !is_less(pivot, &v[samples[m + 1]]));
    (samples[m], tie)
}

fn quicksort<T: Copy, F: FnMut(&T, &T) -> bool, P: Probe>(
    mut v: &mut [T],
    is_less: &mut F,
    limit: usize,
    mut depth: usize,
    probe: &mut P,
) {
    loop {
        let len = v.len();
        if len < SMALL_SORT_THRESHOLD {
            insertion_sort(v, is_less, probe);
            return;
        }
        if depth >= limit {
            probe.heapsort_fallback();
            heapsort(v, is_less, probe);
            return;
        }
        probe.partition(depth);
        let (pivot_index, tie) = if len < SQRT_PIVOT_THRESHOLD {
            median3(v, 0, len / 2, len - 1, is_less)
        } else {
            sqrt_sample_pivot(v, is_less)
        };
        // The pivot stays where it is: moving it would disturb presorted runs.
        let pivot = v[pivot_index];
        let lt = block_partition(v, &mut |x: &T| is_less(x, &pivot), probe);
        let mut eq_end = lt;
        if tie || lt == 0 {
            // v[lt..] holds at least one copy of the pivot, so this always
            // makes progress.
            eq_end += block_partition(&mut v[lt..], &mut |x: &T| !is_less(&pivot, x), probe);
        }

        let (left, rest) = std::mem::take(&mut v).split_at_mut(lt);
        let right = &mut rest[eq_end - lt..];
        depth += 1;
        if left.len() < right.len() {
            quicksort(left, is_less, limit, depth, probe);
            v = right;
        } else {
            quicksort(right, is_less, limit, depth, probe);
            v = left;
        }
    }
}

/// Moves the elements satisfying `goes_left` to the front and returns their
/// count.
///
/// Blocks of `BLOCK` elements are scanned from both ends. The scan writes
/// every candidate offset into the buffer and advances the write cursor by
/// the 0/1 comparison result, so the loop body has no data-dependent branch.
/// Buffered pairs are exchanged afterwards. The final `<= 2·BLOCK` elements
/// go through a branch-free Lomuto pass.
pub(crate) fn block_partition<T, G: FnMut(&T) -> bool, P: Probe>(
    v: &mut [T],
    goes_left: &mut G,
    probe: &mut P,
) -> usize {
    let mut offsets_l = [0u8; BLOCK];
    let mut offsets_r = [0u8; BLOCK];
    let (mut start_l, mut num_l) = (0usize, 0usize);
    let (mut start_r, mut num_r) = (0usize, 0usize);
    let (mut l, mut r) = (0usize, v.len());

    while r - l > 2 * BLOCK {
        if num_l == 0 {
            start_l = 0;
            let block = &v[l..l + BLOCK];
            for (i, x) in block.iter().enumerate() {
                offsets_l[num_l] = i as u8;
                num_l += usize::from(!goes_left(x));
            }
        }
        if num_r == 0 {
            start_r = 0;
            let block = &v[r - BLOCK..r];
            for (i, x) in block.iter().rev().enumerate() {
                offsets_r[num_r] = i as u8;
                num_r += usize::from(goes_left(x));
            }
        }

        let count = num_l.min(num_r);
        for j in 0..count {
            let a = l + usize::from(offsets_l[start_l + j]);
            let b = r - 1 - usize::from(offsets_r[start_r + j]);
            if probe.audits_exchanges() {
                let ok = !goes_left(&v[a]) && goes_left(&v[b]);
                probe.exchange_audited(ok);
            }
            v.swap(a, b);
            probe.swap();
        }
        start_l += count;
        num_l -= count;
        start_r += count;
        num_r -= count;
        if num_l == 0 {
            l += BLOCK;
        }
        if num_r == 0 {
            r -= BLOCK;
        }
    }

    // Everything before l goes left, everything from r on stays right.
    let mut w = l;
    for i in l..r {
        let left = goes_left(&v[i]);
        v.swap(i, w);
        probe.swap();
        w += usize::from(left);
    }
    w
}
