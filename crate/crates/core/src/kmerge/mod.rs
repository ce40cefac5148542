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

//! k-way merging of sorted runs.
//!
//! All strategies fill `out` with the ascending merge of `runs`. The tree and
//! heap strategies only ever advance run heads, so equal keys from one run
//! keep their relative order; between runs the lower run index wins ties.

mod binary_heap;
mod loser_tree;

pub use binary_heap::merge_binary_heap;
pub use loser_tree::{merge_selection_tree, SelectionTree};

use crate::config::MergeStrategy;
use crate::error::{Error, Result};
use crate::record::{key_less, SortRecord};
use crate::seqsort::introsort;

/// Total number of elements across all runs.
pub fn total_len<T>(runs: &[&[T]]) -> usize {
    runs.iter().map(|r| r.len()).sum()
}

fn check_output_len<T>(runs: &[&[T]], out: &[T]) -> Result<()> {
    let expected = total_len(runs);
    if out.len() != expected {
        return Err(Error::LengthMismatch {
            expected,
            actual: out.len(),
        });
    }
    Ok(())
}

/// Concatenates the runs into `out` and sorts it with introsort.
pub fn merge_by_sorting<T: Copy, F: FnMut(&T, &T) -> bool>(
    runs: &[&[T]],
    out: &mut [T],
    is_less: F,
) -> Result<()> {
    check_output_len(runs, out)?;
    let mut at = 0;
    for run in runs {
        out[at..at + run.len()].copy_from_slice(run);
        at += run.len();
    }
    introsort(out, is_less);
    Ok(())
}

impl MergeStrategy {
    pub fn merge_by<T: Copy, F: FnMut(&T, &T) -> bool>(
        self,
        runs: &[&[T]],
        out: &mut [T],
        is_less: F,
    ) -> Result<()> {
        match self {
            MergeStrategy::SelectionTree => merge_selection_tree(runs, out, is_less),
            MergeStrategy::BinaryHeap => merge_binary_heap(runs, out, is_less),
            MergeStrategy::SortMerge => merge_by_sorting(runs, out, is_less),
        }
    }

    pub fn merge<T: SortRecord>(self, runs: &[&[T]], out: &mut [T]) -> Result<()> {
        self.merge_by(runs, out, key_less::<T>)
    }
}
