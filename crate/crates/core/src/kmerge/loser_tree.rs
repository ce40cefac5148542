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

use super::check_output_len;
use crate::error::{Error, Result};

/// Loser tree over the heads of up to `size` runs, `size` being the next
/// power of two of the run count. Padding leaves are permanently exhausted,
/// and exhaustion is tracked per leaf so no key value is reserved as a
/// sentinel.
pub struct SelectionTree<'r, T, F> {
    runs: Vec<&'r [T]>,
    heads: Vec<usize>,
    exhausted: Vec<bool>,
    /// `losers[0]` is the overall winner; `losers[1..]` the internal nodes.
    losers: Vec<usize>,
    size: usize,
    is_less: F,
    node_touches: u64,
}

impl<'r, T: Copy, F: FnMut(&T, &T) -> bool> SelectionTree<'r, T, F> {
    pub fn new(runs: &[&'r [T]], is_less: F) -> Self {
        let size = runs.len().next_power_of_two();
        let mut exhausted = vec![true; size];
        for (leaf, run) in runs.iter().enumerate() {
            exhausted[leaf] = run.is_empty();
        }
        let mut tree = Self {
            runs: runs.to_vec(),
            heads: vec![0; size],
            exhausted,
            losers: vec![0; size],
            size,
            is_less,
            node_touches: 0,
        };
        tree.build();
        tree
    }

    fn build(&mut self) {
        let size = self.size;
        let mut winners = vec![0usize; 2 * size];
        for leaf in 0..size {
            winners[size + leaf] = leaf;
        }
        for node in (1..size).rev() {
            let (a, b) = (winners[2 * node], winners[2 * node + 1]);
            if self.beats(a, b) {
                winners[node] = a;
                self.losers[node] = b;
            } else {
                winners[node] = b;
                self.losers[node] = a;
            }
        }
        self.losers[0] = if size == 1 { 0 } else { winners[1] };
    }

    /// Whether leaf `a`'s head should be output before leaf `b`'s.
    #[inline]
    fn beats(&mut self, a: usize, b: usize) -> bool {
        if self.exhausted[a] {
            return false;
        }
        if self.exhausted[b] {
            return true;
        }
        let x = &self.runs[a][self.heads[a]];
        let y = &self.runs[b][self.heads[b]];
        if a < b {
            !(self.is_less)(y, x)
        } else {
            (self.is_less)(x, y)
        }
    }

    /// Removes and returns the smallest head, replaying the matches on the
    /// winner's path to the root.
    pub fn pop(&mut self) -> Result<Option<T>> {
        let mut winner = self.losers[0];
        if self.exhausted[winner] {
            return Ok(None);
        }
        let run = self.runs[winner];
        let value = run[self.heads[winner]];
        self.heads[winner] += 1;
        let head = self.heads[winner];
        if head == run.len() {
            self.exhausted[winner] = true;
        } else if (self.is_less)(&run[head], &value) {
            return Err(Error::UnsortedRun {
                run: winner,
                position: head,
            });
        }

        let mut node = (winner + self.size) / 2;
        while node > 0 {
            self.node_touches += 1;
            let contender = self.losers[node];
            if self.beats(contender, winner) {
                self.losers[node] = winner;
                winner = contender;
            }
            node /= 2;
        }
        self.losers[0] = winner;
        Ok(Some(value))
    }

    /// Internal nodes visited by all pops so far.
    pub fn node_touches(&self) -> u64 {
        self.node_touches
    }

    /// Number of leaves, a power of two.
    pub fn leaves(&self) -> usize {
        self.size
    }
}

pub fn merge_selection_tree<T: Copy, F: FnMut(&T, &T) -> bool>(
    runs: &[&[T]],
    out: &mut [T],
    is_less: F,
) -> Result<()> {
    check_output_len(runs, out)?;
    match runs.iter().filter(|r| !r.is_empty()).count() {
        0 => return Ok(()),
        1 => {
            let run = runs.iter().find(|r| !r.is_empty()).unwrap();
            out.copy_from_slice(run);
            return Ok(());
        }
        _ => {}
    }
    let mut tree = SelectionTree::new(runs, is_less);
    for slot in out.iter_mut() {
        *slot = tree.pop()?.expect("run lengths sum to the output length");
    }
    Ok(())
}
