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

//! Seeded generators for the six benchmark workloads.

mod io;
pub mod rng;

pub use io::{read_workload, write_workload, WorkloadIoError, HEADER_LEN, MAGIC};

use std::fmt;
use std::str::FromStr;

use crate::record::{PairRecord, ParticleRecord};
use rng::SeededRng;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WorkloadKind {
    /// Uniform `u32` over the full range.
    UniformInt,
    /// Uniform `f32` in `[0, 1)`.
    UniformFloat,
    /// `0..n` with `⌊√n⌋` random transpositions.
    AlmostSorted,
    /// Uniform draws from `{0, 1, 2}`.
    Duplicate3,
    /// Uniform `u64` keys with their position as payload.
    Pair,
    /// Uniform `u64` keys with 88 bytes of random particle state.
    Particle,
}

impl WorkloadKind {
    pub const ALL: [WorkloadKind; 6] = [
        WorkloadKind::UniformInt,
        WorkloadKind::UniformFloat,
        WorkloadKind::AlmostSorted,
        WorkloadKind::Duplicate3,
        WorkloadKind::Pair,
        WorkloadKind::Particle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            WorkloadKind::UniformInt => "uint",
            WorkloadKind::UniformFloat => "float",
            WorkloadKind::AlmostSorted => "almost",
            WorkloadKind::Duplicate3 => "dup3",
            WorkloadKind::Pair => "pair",
            WorkloadKind::Particle => "particle",
        }
    }

    /// Code stored in the binary dump header.
    pub fn code(self) -> u32 {
        self as u32
    }

    pub fn from_code(code: u32) -> Option<Self> {
        Self::ALL.get(code as usize).copied()
    }

    /// Bytes per record.
    pub fn record_size(self) -> usize {
        match self {
            WorkloadKind::Pair => 16,
            WorkloadKind::Particle => 96,
            _ => 4,
        }
    }
}

impl fmt::Display for WorkloadKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for WorkloadKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Self::ALL.into_iter().find(|k| k.name() == s).ok_or_else(|| {
            format!("unknown input `{s}` (expected one of: uint, float, almost, dup3, pair, particle)")
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WorkloadSpec {
    pub kind: WorkloadKind,
    pub n: usize,
    pub seed: u64,
}

impl WorkloadSpec {
    pub fn new(kind: WorkloadKind, n: usize, seed: u64) -> Self {
        Self { kind, n, seed }
    }
}

/// A generated input sequence.
#[derive(Debug, Clone, PartialEq)]
pub enum Workload {
    UniformInt(Vec<u32>),
    UniformFloat(Vec<f32>),
    AlmostSorted(Vec<u32>),
    Duplicate3(Vec<u32>),
    Pair(Vec<PairRecord>),
    Particle(Vec<ParticleRecord>),
}

impl Workload {
    pub fn kind(&self) -> WorkloadKind {
        match self {
            Workload::UniformInt(_) => WorkloadKind::UniformInt,
            Workload::UniformFloat(_) => WorkloadKind::UniformFloat,
            Workload::AlmostSorted(_) => WorkloadKind::AlmostSorted,
            Workload::Duplicate3(_) => WorkloadKind::Duplicate3,
            Workload::Pair(_) => WorkloadKind::Pair,
            Workload::Particle(_) => WorkloadKind::Particle,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Workload::UniformInt(v) | Workload::AlmostSorted(v) | Workload::Duplicate3(v) => {
                v.len()
            }
            Workload::UniformFloat(v) => v.len(),
            Workload::Pair(v) => v.len(),
            Workload::Particle(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Key bit patterns in sequence order.
    pub fn key_bits(&self) -> Vec<u64> {
        use crate::record::SortRecord;
        fn bits<T: SortRecord>(v: &[T]) -> Vec<u64> {
            v.iter().map(SortRecord::key_bits).collect()
        }
        match self {
            Workload::UniformInt(v) | Workload::AlmostSorted(v) | Workload::Duplicate3(v) => {
                bits(v)
            }
            Workload::UniformFloat(v) => bits(v),
            Workload::Pair(v) => bits(v),
            Workload::Particle(v) => bits(v),
        }
    }
}

/// Generates the workload; the same spec always yields the same sequence.
///
/// # Panics
///
/// For `AlmostSorted` with more than `2^32` elements.
pub fn generate(spec: &WorkloadSpec) -> Workload {
    let mut rng = SeededRng::new(spec.seed);
    let n = spec.n;
    match spec.kind {
        WorkloadKind::UniformInt => Workload::UniformInt((0..n).map(|_| rng.next_u32()).collect()),
        WorkloadKind::UniformFloat => {
            Workload::UniformFloat((0..n).map(|_| rng.next_f32()).collect())
        }
        WorkloadKind::AlmostSorted => {
            assert!(n as u64 <= 1 << 32, "AlmostSorted keys must fit in u32");
            let mut v: Vec<u32> = (0..n).map(|i| i as u32).collect();
            for _ in 0..n.isqrt() {
                let i = rng.below(n as u64) as usize;
                let j = rng.below(n as u64) as usize;
                v.swap(i, j);
            }
            Workload::AlmostSorted(v)
        }
        WorkloadKind::Duplicate3 => {
            Workload::Duplicate3((0..n).map(|_| rng.below(3) as u32).collect())
        }
        WorkloadKind::Pair => Workload::Pair(
            (0..n)
                .map(|i| PairRecord {
                    key: rng.next_u64(),
                    index: i as u64,
                })
                .collect(),
        ),
        WorkloadKind::Particle => Workload::Particle(
            (0..n)
                .map(|_| {
                    let key = rng.next_u64();
                    let payload = std::array::from_fn(|_| rng.next_f64());
                    ParticleRecord::from_parts(key, payload)
                })
                .collect(),
        ),
    }
}
