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

//! CSV results file: a row section, a `# summary` marker line, then a
//! summary section. Each section has its own header row.

use std::fmt::Display;
use std::io::{BufRead, BufReader, Read, Write};
use std::str::FromStr;

use samplesort::datagen::WorkloadKind;
use samplesort::{BlockSort, MergeStrategy, PivotStrategy};
use serde::{Deserialize, Serialize};

use crate::BenchError;

pub const SUMMARY_MARKER: &str = "# summary";

/// One timed repetition. `elapsed_s` is empty for a run whose output failed
/// verification; `checksum` is then the observed (wrong) checksum.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub algo: String,
    #[serde(with = "named")]
    pub pivot: PivotStrategy,
    #[serde(with = "named")]
    pub block_sort: BlockSort,
    #[serde(with = "named")]
    pub merge: MergeStrategy,
    #[serde(with = "named")]
    pub input: WorkloadKind,
    pub n: usize,
    pub threads: usize,
    pub rep: usize,
    pub elapsed_s: Option<f64>,
    pub checksum: u64,
}

impl BenchRow {
    pub fn is_failure(&self) -> bool {
        self.elapsed_s.is_none()
    }
}

/// Per-configuration mean and parallel efficiency. Both are empty for a
/// failed configuration; `efficiency` is also empty when the plan has no
/// single-thread run to compare against.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub algo: String,
    #[serde(with = "named")]
    pub pivot: PivotStrategy,
    #[serde(with = "named")]
    pub block_sort: BlockSort,
    #[serde(with = "named")]
    pub merge: MergeStrategy,
    #[serde(with = "named")]
    pub input: WorkloadKind,
    pub n: usize,
    pub threads: usize,
    pub mean_s: Option<f64>,
    pub efficiency: Option<f64>,
}

mod named {
    use super::*;
    use serde::{de, Deserializer, Serializer};

    pub fn serialize<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, T, D>(d: D) -> Result<T, D::Error>
    where
        T: FromStr,
        T::Err: Display,
        D: Deserializer<'de>,
    {
        String::deserialize(d)?.parse().map_err(de::Error::custom)
    }
}

fn write_section<W: Write, S: Serialize>(
    w: W,
    items: &[S],
    header: &[&str],
) -> Result<(), BenchError> {
    let mut csv = csv::WriterBuilder::new().has_headers(false).from_writer(w);
    csv.write_record(header)?;
    for item in items {
        csv.serialize(item)?;
    }
    csv.flush()?;
    Ok(())
}

pub const ROW_HEADER: [&str; 10] = [
    "algo",
    "pivot",
    "block_sort",
    "merge",
    "input",
    "n",
    "threads",
    "rep",
    "elapsed_s",
    "checksum",
];
pub const SUMMARY_HEADER: [&str; 9] = [
    "algo",
    "pivot",
    "block_sort",
    "merge",
    "input",
    "n",
    "threads",
    "mean_s",
    "efficiency",
];

/// Headers are written explicitly so empty sections still carry them.
pub fn write_csv<W: Write>(
    mut w: W,
    rows: &[BenchRow],
    summary: &[SummaryRow],
) -> Result<(), BenchError> {
    write_section(&mut w, rows, &ROW_HEADER)?;
    writeln!(w, "{SUMMARY_MARKER}")?;
    write_section(&mut w, summary, &SUMMARY_HEADER)?;
    w.flush()?;
    Ok(())
}

fn read_section<T: for<'de> Deserialize<'de>>(
    text: &str,
    header: &[&str],
) -> Result<Vec<T>, BenchError> {
    let mut csv = csv::Reader::from_reader(text.as_bytes());
    let found = csv.headers()?.clone();
    if found.iter().ne(header.iter().copied()) {
        return Err(BenchError::Format(format!("unexpected header {:?}", found)));
    }
    csv.deserialize()
        .map(|r| r.map_err(BenchError::from))
        .collect()
}

pub fn read_csv<R: Read>(r: R) -> Result<(Vec<BenchRow>, Vec<SummaryRow>), BenchError> {
    let mut rows = String::new();
    let mut summary = String::new();
    let mut in_summary = false;
    for line in BufReader::new(r).lines() {
        let line = line?;
        if line.trim_end() == SUMMARY_MARKER {
            if in_summary {
                return Err(BenchError::Format("repeated summary marker".into()));
            }
            in_summary = true;
            continue;
        }
        let section = if in_summary { &mut summary } else { &mut rows };
        section.push_str(&line);
        section.push('\n');
    }
    if !in_summary {
        return Err(BenchError::Format("missing summary section".into()));
    }
    Ok((
        read_section(&rows, &ROW_HEADER)?,
        read_section(&summary, &SUMMARY_HEADER)?,
    ))
}
