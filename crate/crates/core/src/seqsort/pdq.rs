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
use super::{floor_log2, median3, partition_by, sort3, SMALL_SORT_THRESHOLD};

const NINTHER_THRESHOLD: usize = 128;

pub(crate) fn pdqsort<T: Copy, F: FnMut(&T, &T) -> bool, P: Probe>(
    v: &mut [T],
    is_less: &mut F,
    probe: &mut P,
) {
    if v.len() < 2 {
        return;
    }
    let budget = floor_log2(v.len());
    recurse(v, is_less, None, budget, 0, probe);
}

/// Pivot index plus whether the pivot sample contained equal elements.
fn choose_pivot<T, F: FnMut(&T, &T) -> bool>(v: &[T], is_less: &mut F) -> (usize, bool) {
    let len = v.len();
    let (a, b, c) = (len / 4, len / 2, 3 * len / 4);
    if len >= NINTHER_THRESHOLD {
        let [_, a, _] = sort3(v, a - 1, a, a + 1, is_less);
        let [_, b, _] = sort3(v, b - 1, b, b + 1, is_less);
        let [_, c, _] = sort3(v, c - 1, c, c + 1, is_less);
        median3(v, a, b, c, is_less)
    } else {
        median3(v, a, b, c, is_less)
    }
}

/// `pred` is the element just left of `v` in the parent range, if any; every
/// element of `v` is `>=` it.
fn recurse<T: Copy, F: FnMut(&T, &T) -> bool, P: Probe>(
    mut v: &mut [T],
    is_less: &mut F,
    mut pred: Option<T>,
    mut bad_budget: usize,
    mut depth: usize,
    probe: &mut P,
) {
    loop {
        let len = v.len();
        if len < SMALL_SORT_THRESHOLD {
            insertion_sort(v, is_less, probe);
            return;
        }
        if bad_budget == 0 {
            probe.heapsort_fallback();
            heapsort(v, is_less, probe);
            return;
        }
        probe.partition(depth);
        let (pivot_index, tie) = choose_pivot(v, is_less);
        let pivot = v[pivot_index];

        // Pivot equal to the predecessor: v holds nothing smaller, so peel off
        // the elements equal to it and continue with the strictly greater ones.
        if let Some(p) = pred {
            if !is_less(&p, &pivot) {
                let eq = partition_by(v, &mut |x: &T| !is_less(&pivot, x), probe);
                v = &mut std::mem::take(&mut v)[eq..];
                continue;
            }
        }

        v.swap(0, pivot_index);
        let lt = partition_by(&mut v[1..], &mut |x: &T| is_less(x, &pivot), probe);
        v.swap(0, lt);
        probe.swap();
        let mut eq_end = lt + 1;
        if tie {
            eq_end += partition_by(&mut v[eq_end..], &mut |x: &T| !is_less(&pivot, x), probe);
        }

        let (less, greater) = (lt, len - eq_end);
        if len - less.max(greater) < len / 8 {
            probe.bad_partition();
            bad_budget -= 1;
        }

        let (left, rest) = std::mem::take(&mut v).split_at_mut(lt);
        let right = &mut rest[eq_end - lt..];
        depth += 1;
        if left.len() < right.len() {
            recurse(left, is_less, pred, bad_budget, depth, probe);
            pred = Some(pivot);
            v = right;
        } else {
            recurse(right, is_less, Some(pivot), bad_budget, depth, probe);
            v = left;
        }
    }
}
