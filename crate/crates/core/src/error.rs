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

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Contract violations reported by the sorting pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid configuration: {0}")]
    InvalidConfig(&'static str),
    #[error("output holds {actual} elements but {expected} are required")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("run {run} is out of order at position {position}")]
    UnsortedRun { run: usize, position: usize },
    #[error("tie count {requested} for pivot {pivot} exceeds the {available} equal elements")]
    TieCountExceeded {
        pivot: usize,
        requested: usize,
        available: usize,
    },
    #[error("pivot plan is inconsistent: {0}")]
    InvalidPlan(&'static str),
    #[error("durations must be strictly positive")]
    NonPositiveDuration,
    #[error("failed to build thread pool: {0}")]
    ThreadPool(String),
}
