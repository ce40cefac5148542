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
use super::stats::Probe;
use super::{floor_log2, median3, SMALL_SORT_THRESHOLD};

pub(crate) fn depth_limit(len: usize) -> usize {
    2 * floor_log2(len)
}

pub(crate) fn introsort<T: Copy, F: FnMut(&T, &T) -> bool, P: Probe>(
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
        let (pivot, _) = median3(v, 0, len / 2, len - 1, is_less);
        let pivot = v[pivot];
        let mid = hoare_partition(v, &pivot, is_less, probe);
        let (left, right) = std::mem::take(&mut v).split_at_mut(mid);
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

/// Hoare partition around a pivot value taken from `v`. Returns `m` with
/// `v[..m] <= pivot <= v[m..]`; the pivot element itself is not set aside.
fn hoare_partition<T, F: FnMut(&T, &T) -> bool, P: Probe>(
    v: &mut [T],
    pivot: &T,
    is_less: &mut F,
    probe: &mut P,
) -> usize {
    let (mut i, mut j) = (0, v.len() - 1);
    loop {
        // The pivot value (and later the swapped elements) bound both scans.
        while is_less(&v[i], pivot) {
            i += 1;
        }
        while is_less(pivot, &v[j]) {
            j -= 1;
        }
        if i >= j {
            return j + 1;
        }
        v.swap(i, j);
        probe.swap();
        i += 1;
        j -= 1;
    }
}
