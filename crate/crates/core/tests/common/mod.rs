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

#![allow(dead_code)]

use samplesort::datagen::{generate, Workload, WorkloadKind, WorkloadSpec};
use samplesort::SortRecord;

/// Reference key order: the standard library sort on key bit patterns
/// interpreted through the record's key.
pub fn oracle_keys<T: SortRecord>(input: &[T]) -> Vec<T::Key> {
    let mut keys: Vec<T::Key> = input.iter().map(|r| r.key()).collect();
    keys.sort_by(|a, b| a.partial_cmp(b).expect("NaN-free keys"));
    keys
}

pub fn keys<T: SortRecord>(v: &[T]) -> Vec<T::Key> {
    v.iter().map(|r| r.key()).collect()
}

/// Applies `$body` to the typed records of a workload.
#[macro_export]
macro_rules! with_records {
    ($workload:expr, |$v:ident| $body:expr) => {
        match $workload {
            samplesort::datagen::Workload::UniformInt($v)
            | samplesort::datagen::Workload::AlmostSorted($v)
            | samplesort::datagen::Workload::Duplicate3($v) => $body,
            samplesort::datagen::Workload::UniformFloat($v) => $body,
            samplesort::datagen::Workload::Pair($v) => $body,
            samplesort::datagen::Workload::Particle($v) => $body,
        }
    };
}

pub fn workload(kind: WorkloadKind, n: usize, seed: u64) -> Workload {
    generate(&WorkloadSpec::new(kind, n, seed))
}
