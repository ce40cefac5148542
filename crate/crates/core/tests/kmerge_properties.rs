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

mod common;

use common::{keys, oracle_keys};
use proptest::prelude::*;
use samplesort::datagen::rng::SeededRng;
use samplesort::kmerge::{
    merge_binary_heap, merge_by_sorting, merge_selection_tree, total_len, SelectionTree,
};
use samplesort::{key_less, MergeStrategy, PairRecord, ParticleRecord, SortRecord};

fn sorted_runs<T: SortRecord>(mut runs: Vec<Vec<T>>) -> Vec<Vec<T>> {
    for r in &mut runs {
        r.sort_by(|a, b| a.key().partial_cmp(&b.key()).unwrap());
    }
    runs
}

fn merge_all<T: SortRecord>(runs: &[Vec<T>]) -> Vec<Vec<T>> {
    let refs: Vec<&[T]> = runs.iter().map(|r| r.as_slice()).collect();
    let fill = *runs.iter().flatten().next().expect("at least one element");
    MergeStrategy::ALL
        .iter()
        .map(|s| {
            let mut out = vec![fill; total_len(&refs)];
            s.merge(&refs, &mut out).unwrap();
            out
        })
        .collect()
}

fn check_equivalent<T: SortRecord>(runs: Vec<Vec<T>>) {
    let runs = sorted_runs(runs);
    if runs.iter().all(|r| r.is_empty()) {
        return;
    }
    let all: Vec<T> = runs.concat();
    let expected = oracle_keys(&all);
    for out in merge_all(&runs) {
        assert_eq!(keys(&out), expected);
    }
}

#[test]
fn heap_matches_tree_on_seeded_runs() {
    let mut rng = SeededRng::new(3);
    let runs = sorted_runs(
        (0..8)
            .map(|_| (0..100).map(|_| rng.next_u32()).collect())
            .collect(),
    );
    let refs: Vec<&[u32]> = runs.iter().map(|r| r.as_slice()).collect();
    let mut tree = vec![0u32; 800];
    let mut heap = vec![0u32; 800];
    merge_selection_tree(&refs, &mut tree, key_less::<u32>).unwrap();
    merge_binary_heap(&refs, &mut heap, key_less::<u32>).unwrap();
    assert_eq!(tree, heap);
}

#[test]
fn sort_merge_matches_tree_keys_on_pairs() {
    let mut rng = SeededRng::new(9);
    let runs = sorted_runs(
        (0..4)
            .map(|_| {
                (0..1000)
                    .map(|i| PairRecord {
                        key: rng.next_u64(),
                        index: i,
                    })
                    .collect()
            })
            .collect(),
    );
    let refs: Vec<&[PairRecord]> = runs.iter().map(|r| r.as_slice()).collect();
    let mut tree = vec![PairRecord::default(); 4000];
    let mut sorted = vec![PairRecord::default(); 4000];
    merge_selection_tree(&refs, &mut tree, key_less::<PairRecord>).unwrap();
    merge_by_sorting(&refs, &mut sorted, key_less::<PairRecord>).unwrap();
    assert_eq!(keys(&tree), keys(&sorted));
}

fn runs_of<T: std::fmt::Debug>(
    elem: impl Strategy<Value = T>,
) -> impl Strategy<Value = Vec<Vec<T>>> {
    prop::collection::vec(prop::collection::vec(elem, 0..1000), 1..=16)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn strategies_agree_on_u32(runs in runs_of(any::<u32>())) {
        check_equivalent(runs);
    }

    #[test]
    fn strategies_agree_on_heavy_duplicates(runs in runs_of(0u32..3)) {
        check_equivalent(runs);
    }

    #[test]
    fn strategies_agree_on_pairs(runs in runs_of((0u64..50, any::<u64>()))) {
        let runs: Vec<Vec<PairRecord>> = runs
            .into_iter()
            .map(|r| r.into_iter().map(|(key, index)| PairRecord { key, index }).collect())
            .collect();
        check_equivalent(runs);
    }

    #[test]
    fn strategies_agree_on_particles(runs in runs_of(0u64..100)) {
        let runs: Vec<Vec<ParticleRecord>> = runs
            .into_iter()
            .map(|r| r.into_iter().map(|k| ParticleRecord::from_parts(k, [k as f64; 11])).collect())
            .collect();
        check_equivalent(runs);
    }

    #[test]
    fn tree_touches_exactly_log2_nodes(runs in runs_of(0u32..1000)) {
        let runs = sorted_runs(runs);
        let refs: Vec<&[u32]> = runs.iter().map(|r| r.as_slice()).collect();
        let depth = u64::from(refs.len().next_power_of_two().trailing_zeros());
        let mut tree = SelectionTree::new(&refs, key_less::<u32>);
        let mut pops = 0;
        while tree.pop().unwrap().is_some() {
            pops += 1;
            prop_assert_eq!(tree.node_touches(), pops * depth);
        }
        prop_assert_eq!(pops as usize, total_len(&refs));
    }

    #[test]
    fn within_run_order_is_kept(runs in runs_of(0u64..5)) {
        // index encodes (run, position) so per-run order is checkable
        let runs: Vec<Vec<PairRecord>> = sorted_runs(
            runs.into_iter()
                .map(|r| r.into_iter().map(|key| PairRecord { key, index: 0 }).collect())
                .collect(),
        )
        .into_iter()
        .enumerate()
        .map(|(ri, r)| {
            r.into_iter()
                .enumerate()
                .map(|(pi, p)| PairRecord { key: p.key, index: ((ri as u64) << 32) | pi as u64 })
                .collect()
        })
        .collect();
        let refs: Vec<&[PairRecord]> = runs.iter().map(|r| r.as_slice()).collect();
        for s in [MergeStrategy::SelectionTree, MergeStrategy::BinaryHeap] {
            let mut out = vec![PairRecord::default(); total_len(&refs)];
            s.merge(&refs, &mut out).unwrap();
            let mut last = vec![None::<u64>; refs.len()];
            for p in &out {
                let run = (p.index >> 32) as usize;
                let pos = p.index & 0xffff_ffff;
                prop_assert!(last[run].is_none_or(|l| l < pos));
                last[run] = Some(pos);
            }
        }
    }
}
