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

/// Counters collected by [`super::sort_with_stats`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SeqSortStats {
    pub comparisons: u64,
    pub swaps: u64,
    pub heapsort_fallbacks: u64,
    pub bad_partitions: u64,
    /// Partition steps performed (one per quicksort node).
    pub partitions: u64,
    /// Deepest quicksort level at which a partition step ran (root is 0).
    pub max_depth: usize,
    pub audit_exchanges: bool,
    /// Buffered pairs re-checked before being exchanged.
    pub exchanges_audited: u64,
    /// Buffered pairs whose elements were not both misplaced.
    pub misplaced_violations: u64,
}

/// Instrumentation hooks; `()` is the zero-cost no-op.
pub(crate) trait Probe {
    #[inline(always)]
    fn swap(&mut self) {}
    #[inline(always)]
    fn heapsort_fallback(&mut self) {}
    #[inline(always)]
    fn bad_partition(&mut self) {}
    #[inline(always)]
    fn partition(&mut self, _depth: usize) {}
    #[inline(always)]
    fn audits_exchanges(&self) -> bool {
        false
    }
    #[inline(always)]
    fn exchange_audited(&mut self, _both_misplaced: bool) {}
}

impl Probe for () {}

impl Probe for SeqSortStats {
    fn swap(&mut self) {
        self.swaps += 1;
    }
    fn heapsort_fallback(&mut self) {
        self.heapsort_fallbacks += 1;
    }
    fn bad_partition(&mut self) {
        self.bad_partitions += 1;
    }
    fn partition(&mut self, depth: usize) {
        self.partitions += 1;
        self.max_depth = self.max_depth.max(depth);
    }
    fn audits_exchanges(&self) -> bool {
        self.audit_exchanges
    }
    fn exchange_audited(&mut self, both_misplaced: bool) {
        self.exchanges_audited += 1;
        if !both_misplaced {
            self.misplaced_violations += 1;
        }
    }
}
