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

use samplesort::SortRecord;

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

/// 64-bit FNV-1a over the little-endian key bit patterns, in order.
pub fn checksum_keys<T: SortRecord>(records: &[T]) -> u64 {
    records.iter().fold(FNV_OFFSET, |h, r| {
        r.key_bits()
            .to_le_bytes()
            .iter()
            .fold(h, |h, &b| (h ^ b as u64).wrapping_mul(FNV_PRIME))
    })
}

/// Checksum of the key sequence a correct sort of `input` must produce.
pub fn oracle_checksum<T: SortRecord>(input: &[T]) -> u64 {
    let mut sorted = input.to_vec();
    sorted.sort_by(|a, b| a.key().partial_cmp(&b.key()).expect("NaN-free keys"));
    checksum_keys(&sorted)
}
