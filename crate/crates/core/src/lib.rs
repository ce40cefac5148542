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

//! Multithreaded samplesort.
//!
//! The sort runs in four fork-join steps over a dedicated thread team:
//!
//! 1. the input is cut into `n_blocks` contiguous blocks and each block is
//!    sorted sequentially ([`seqsort`]);
//! 2. `n_partitions - 1` pivots are selected ([`pivots`]), either by regular
//!    sampling (PSRS), by exact splitting (PSES) or by random sampling;
//! 3. every sorted block is cut into `n_partitions` partitions;
//! 4. partition `k` of every block is k-way merged into its slot of the output
//!    ([`kmerge`]).
//!
//! ```
//! use samplesort::{sort, SamplesortConfig, PivotStrategy};
//!
//! let mut v = vec![5u32, 2, 8, 4, 1, 7];
//! let config = SamplesortConfig::with_threads(2).pivot_strategy(PivotStrategy::Psrs);
//! sort(&mut v, &config).unwrap();
//! assert_eq!(v, [1, 2, 4, 5, 7, 8]);
//! ```

pub mod config;
pub mod datagen;
pub mod driver;
mod error;
pub mod kmerge;
pub mod pivots;
pub mod record;
pub mod seqsort;

pub use config::{
    make_block_layout, BlockLayout, BlockSort, MergeStrategy, PivotStrategy, SamplesortConfig,
};
pub use driver::{
    parallel_samplesort, sort, sort_by_key, sort_into, thread_efficiency, MergeTask, SortReport,
    Sorter,
};
pub use error::{Error, Result};
pub use record::{key_less, PairRecord, ParticleRecord, SortRecord};
