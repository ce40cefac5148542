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

//! Algorithm selection knobs and the block layout shared by all steps.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use crate::error::{Error, Result};

macro_rules! named_enum {
    ($(#[$meta:meta])* $name:ident { $($variant:ident => $label:literal),+ $(,)? }) => {
        $(#[$meta])*
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum $name {
            $($variant),+
        }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant),+];

            /// Short name used on the command line and in CSV output.
            pub fn name(self) -> &'static str {
                match self {
                    $($name::$variant => $label),+
                }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.name())
            }
        }

        impl FromStr for $name {
            type Err = String;

            fn from_str(s: &str) -> std::result::Result<Self, String> {
                match s {
                    $($label => Ok($name::$variant),)+
                    _ => Err(format!(
                        "unknown {} `{}` (expected one of: {})",
                        stringify!($name),
                        s,
                        [$($label),+].join(", ")
                    )),
                }
            }
        }
    };
}

named_enum! {
    /// How the `n_partitions - 1` pivots are chosen.
    PivotStrategy {
        Psrs => "psrs",
        Pses => "pses",
        RandomSample => "random",
    }
}

named_enum! {
    /// Sequential algorithm used to sort each block.
    BlockSort {
        Introsort => "intro",
        Pdqsort => "pdq",
        BlockQuicksort => "block",
        Heapsort => "heap",
    }
}

named_enum! {
    /// k-way merge used to assemble each partition.
    MergeStrategy {
        SelectionTree => "tree",
        BinaryHeap => "heap",
        SortMerge => "sort",
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SamplesortConfig {
    pub n_blocks: usize,
    pub n_partitions: usize,
    pub pivot_strategy: PivotStrategy,
    pub block_sort: BlockSort,
    pub merge_strategy: MergeStrategy,
    pub threads: usize,
    /// Samples drawn per block and partition by [`PivotStrategy::RandomSample`].
    pub oversample: usize,
    /// Seed for [`PivotStrategy::RandomSample`].
    pub seed: u64,
}

impl SamplesortConfig {
    /// `threads` workers with as many blocks and partitions, PSES pivots,
    /// BlockQuicksort and a selection tree.
    pub fn with_threads(threads: usize) -> Self {
        Self {
            n_blocks: threads,
            n_partitions: threads,
            pivot_strategy: PivotStrategy::Pses,
            block_sort: BlockSort::BlockQuicksort,
            merge_strategy: MergeStrategy::SelectionTree,
            threads,
            oversample: 32,
            seed: 0,
        }
    }

    pub fn pivot_strategy(mut self, strategy: PivotStrategy) -> Self {
        self.pivot_strategy = strategy;
        self
    }

    pub fn block_sort(mut self, algorithm: BlockSort) -> Self {
        self.block_sort = algorithm;
        self
    }

    pub fn merge_strategy(mut self, strategy: MergeStrategy) -> Self {
        self.merge_strategy = strategy;
        self
    }

    pub fn blocks(mut self, n_blocks: usize) -> Self {
        self.n_blocks = n_blocks;
        self
    }

    pub fn partitions(mut self, n_partitions: usize) -> Self {
        self.n_partitions = n_partitions;
        self
    }

    pub fn oversample(mut self, oversample: usize) -> Self {
        self.oversample = oversample;
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.threads == 0 {
            return Err(Error::InvalidConfig("threads must be positive"));
        }
        if self.n_blocks == 0 {
            return Err(Error::InvalidConfig("n_blocks must be positive"));
        }
        if self.n_partitions == 0 {
            return Err(Error::InvalidConfig("n_partitions must be positive"));
        }
        if self.pivot_strategy == PivotStrategy::RandomSample && self.oversample == 0 {
            return Err(Error::InvalidConfig("oversample must be positive"));
        }
        Ok(())
    }
}

impl Default for SamplesortConfig {
    fn default() -> Self {
        let threads = std::thread::available_parallelism().map_or(1, |n| n.get());
        Self::with_threads(threads)
    }
}

/// Contiguous blocks of `⌈N / n_blocks⌉` elements; the last non-empty block
/// may be shorter and trailing blocks are empty when `N < n_blocks`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockLayout {
    pub total_len: usize,
    pub block_ranges: Vec<Range<usize>>,
}

impl BlockLayout {
    pub fn n_blocks(&self) -> usize {
        self.block_ranges.len()
    }

    /// Nominal block length `⌈N / n_blocks⌉`.
    pub fn block_len(&self) -> usize {
        self.total_len.div_ceil(self.n_blocks())
    }
}

/// # Panics
///
/// If `n_blocks` is zero.
pub fn make_block_layout(n: usize, n_blocks: usize) -> BlockLayout {
    assert!(n_blocks > 0, "n_blocks must be positive");
    let len = n.div_ceil(n_blocks);
    let block_ranges = (0..n_blocks)
        .map(|b| (b * len).min(n)..((b + 1) * len).min(n))
        .collect();
    BlockLayout {
        total_len: n,
        block_ranges,
    }
}
