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

use super::check_output_len;
use crate::error::{Error, Result};

/// Min-heap of run indices keyed by their current head.
struct HeadHeap<'r, T, F> {
    runs: &'r [&'r [T]],
    heads: Vec<usize>,
    heap: Vec<usize>,
    is_less: F,
}

impl<'r, T: Copy, F: FnMut(&T, &T) -> bool> HeadHeap<'r, T, F> {
    #[inline]
    fn before(&mut self, a: usize, b: usize) -> bool {
        let x = &self.runs[a][self.heads[a]];
        let y = &self.runs[b][self.heads[b]];
        if a < b {
            !(self.is_less)(y, x)
        } else {
            (self.is_less)(x, y)
        }
    }

    fn sift_down(&mut self, mut node: usize) {
        let len = self.heap.len();
        loop {
            let mut child = 2 * node + 1;
            if child >= len {
                return;
            }
            if child + 1 < len && self.before(self.heap[child + 1], self.heap[child]) {
                child += 1;
            }
            if !self.before(self.heap[child], self.heap[node]) {
                return;
            }
            self.heap.swap(node, child);
            node = child;
        }
    }
}

pub fn merge_binary_heap<T: Copy, F: FnMut(&T, &T) -> bool>(
    runs: &[&[T]],
    out: &mut [T],
    is_less: F,
) -> Result<()> {
    check_output_len(runs, out)?;
    let mut h = HeadHeap {
        runs,
        heads: vec![0; runs.len()],
        heap: (0..runs.len()).filter(|&r| !runs[r].is_empty()).collect(),
        is_less,
    };
    for node in (0..h.heap.len() / 2).rev() {
        h.sift_down(node);
    }
    for slot in out.iter_mut() {
        let run = h.heap[0];
        let value = runs[run][h.heads[run]];
        *slot = value;
        h.heads[run] += 1;
        let head = h.heads[run];
        if head == runs[run].len() {
            h.heap.swap_remove(0);
        } else if (h.is_less)(&runs[run][head], &value) {
            return Err(Error::UnsortedRun {
                run,
                position: head,
            });
        }
        if !h.heap.is_empty() {
            h.sift_down(0);
        }
    }
    Ok(())
}
