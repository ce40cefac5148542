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

use super::stats::Probe;

fn sift_down<T, F: FnMut(&T, &T) -> bool, P: Probe>(
    v: &mut [T],
    mut node: usize,
    end: usize,
    is_less: &mut F,
    probe: &mut P,
) {
    loop {
        let mut child = 2 * node + 1;
        if child >= end {
            return;
        }
        if child + 1 < end && is_less(&v[child], &v[child + 1]) {
            child += 1;
        }
        if !is_less(&v[node], &v[child]) {
            return;
        }
        v.swap(node, child);
        probe.swap();
        node = child;
    }
}

pub(crate) fn heapsort<T, F: FnMut(&T, &T) -> bool, P: Probe>(
    v: &mut [T],
    is_less: &mut F,
    probe: &mut P,
) {
    let len = v.len();
    for node in (0..len / 2).rev() {
        sift_down(v, node, len, is_less, probe);
    }
    for end in (1..len).rev() {
        v.swap(0, end);
        probe.swap();
        sift_down(v, 0, end, is_less, probe);
    }
}
