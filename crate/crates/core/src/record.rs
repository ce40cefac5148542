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

//! Fixed-size records ordered by key only.

use std::fmt::Debug;

/// A fixed-size element with a totally ordered key.
///
/// Floating point keys must not be NaN; sorting NaN keys gives an
/// unspecified (but memory safe) permutation.
pub trait SortRecord: Copy + Send + Sync + Debug + 'static {
    type Key: PartialOrd + Copy + Debug + Send + Sync;

    fn key(&self) -> Self::Key;

    /// Raw bit pattern of the key, used for checksums and binary dumps.
    fn key_bits(&self) -> u64;
}

/// `a.key() < b.key()`.
#[inline(always)]
pub fn key_less<T: SortRecord>(a: &T, b: &T) -> bool {
    a.key() < b.key()
}

impl SortRecord for u32 {
    type Key = u32;
    #[inline(always)]
    fn key(&self) -> u32 {
        *self
    }
    fn key_bits(&self) -> u64 {
        u64::from(*self)
    }
}

impl SortRecord for u64 {
    type Key = u64;
    #[inline(always)]
    fn key(&self) -> u64 {
        *self
    }
    fn key_bits(&self) -> u64 {
        *self
    }
}

impl SortRecord for f32 {
    type Key = f32;
    #[inline(always)]
    fn key(&self) -> f32 {
        *self
    }
    fn key_bits(&self) -> u64 {
        u64::from(self.to_bits())
    }
}

/// Key with its original position as payload (16 bytes).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
#[repr(C)]
pub struct PairRecord {
    pub key: u64,
    pub index: u64,
}

impl SortRecord for PairRecord {
    type Key = u64;
    #[inline(always)]
    fn key(&self) -> u64 {
        self.key
    }
    fn key_bits(&self) -> u64 {
        self.key
    }
}

/// Key followed by eleven doubles of N-body particle state (96 bytes).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
#[repr(C)]
pub struct ParticleRecord {
    pub key: u64,
    pub mass: f64,
    pub position: [f64; 3],
    pub velocity: [f64; 3],
    pub acceleration: [f64; 3],
    pub potential: f64,
}

impl ParticleRecord {
    /// The payload in declaration order.
    pub fn payload(&self) -> [f64; 11] {
        let mut out = [0.0; 11];
        out[0] = self.mass;
        out[1..4].copy_from_slice(&self.position);
        out[4..7].copy_from_slice(&self.velocity);
        out[7..10].copy_from_slice(&self.acceleration);
        out[10] = self.potential;
        out
    }

    pub fn from_parts(key: u64, payload: [f64; 11]) -> Self {
        Self {
            key,
            mass: payload[0],
            position: [payload[1], payload[2], payload[3]],
            velocity: [payload[4], payload[5], payload[6]],
            acceleration: [payload[7], payload[8], payload[9]],
            potential: payload[10],
        }
    }
}

impl SortRecord for ParticleRecord {
    type Key = u64;
    #[inline(always)]
    fn key(&self) -> u64 {
        self.key
    }
    fn key_bits(&self) -> u64 {
        self.key
    }
}

const _: () = assert!(std::mem::size_of::<u32>() == 4);
const _: () = assert!(std::mem::size_of::<f32>() == 4);
const _: () = assert!(std::mem::size_of::<PairRecord>() == 16);
const _: () = assert!(std::mem::size_of::<ParticleRecord>() == 96);
