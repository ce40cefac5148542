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

//! Raw little-endian workload dumps.
//!
//! Layout: `b"PSRT"`, the kind code as `u32`, the element count as `u64`,
//! then the records packed at their declared sizes (4, 16 or 96 bytes).
//! Pair records are `key, index`; particle records are the key followed by
//! the eleven payload doubles in declaration order.

use std::io::{self, Read, Write};

use thiserror::Error;

use super::{Workload, WorkloadKind};
use crate::record::{PairRecord, ParticleRecord};

pub const MAGIC: [u8; 4] = *b"PSRT";
pub const HEADER_LEN: usize = 16;

#[derive(Debug, Error)]
pub enum WorkloadIoError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("bad magic {0:?}, expected \"PSRT\"")]
    BadMagic([u8; 4]),
    #[error("unknown workload kind code {0}")]
    UnknownKind(u32),
    #[error("element count {0} does not fit in memory")]
    TooLarge(u64),
}

pub fn write_workload<W: Write>(mut w: W, workload: &Workload) -> Result<(), WorkloadIoError> {
    w.write_all(&MAGIC)?;
    w.write_all(&workload.kind().code().to_le_bytes())?;
    w.write_all(&(workload.len() as u64).to_le_bytes())?;
    let mut buf = Vec::with_capacity(workload.len() * workload.kind().record_size());
    match workload {
        Workload::UniformInt(v) | Workload::AlmostSorted(v) | Workload::Duplicate3(v) => v
            .iter()
            .for_each(|x| buf.extend_from_slice(&x.to_le_bytes())),
        Workload::UniformFloat(v) => v
            .iter()
            .for_each(|x| buf.extend_from_slice(&x.to_le_bytes())),
        Workload::Pair(v) => v.iter().for_each(|p| {
            buf.extend_from_slice(&p.key.to_le_bytes());
            buf.extend_from_slice(&p.index.to_le_bytes());
        }),
        Workload::Particle(v) => v.iter().for_each(|p| {
            buf.extend_from_slice(&p.key.to_le_bytes());
            for x in p.payload() {
                buf.extend_from_slice(&x.to_le_bytes());
            }
        }),
    }
    w.write_all(&buf)?;
    Ok(())
}

fn u64_at(bytes: &[u8], at: usize) -> u64 {
    u64::from_le_bytes(bytes[at..at + 8].try_into().unwrap())
}

pub fn read_workload<R: Read>(mut r: R) -> Result<Workload, WorkloadIoError> {
    let mut header = [0u8; HEADER_LEN];
    r.read_exact(&mut header)?;
    let magic: [u8; 4] = header[..4].try_into().unwrap();
    if magic != MAGIC {
        return Err(WorkloadIoError::BadMagic(magic));
    }
    let code = u32::from_le_bytes(header[4..8].try_into().unwrap());
    let kind = WorkloadKind::from_code(code).ok_or(WorkloadIoError::UnknownKind(code))?;
    let n = u64_at(&header, 8);
    let size = kind.record_size();
    let byte_len = usize::try_from(n)
        .ok()
        .and_then(|n| n.checked_mul(size))
        .ok_or(WorkloadIoError::TooLarge(n))?;
    let mut body = vec![0u8; byte_len];
    r.read_exact(&mut body)?;
    let records = body.chunks_exact(size);
    let u32s = || -> Vec<u32> {
        body.chunks_exact(4)
            .map(|c| u32::from_le_bytes(c.try_into().unwrap()))
            .collect()
    };
    Ok(match kind {
        WorkloadKind::UniformInt => Workload::UniformInt(u32s()),
        WorkloadKind::AlmostSorted => Workload::AlmostSorted(u32s()),
        WorkloadKind::Duplicate3 => Workload::Duplicate3(u32s()),
        WorkloadKind::UniformFloat => Workload::UniformFloat(
            records
                .map(|c| f32::from_le_bytes(c.try_into().unwrap()))
                .collect(),
        ),
        WorkloadKind::Pair => Workload::Pair(
            records
                .map(|c| PairRecord {
                    key: u64_at(c, 0),
                    index: u64_at(c, 8),
                })
                .collect(),
        ),
        WorkloadKind::Particle => Workload::Particle(
            records
                .map(|c| {
                    let payload = std::array::from_fn(|i| f64::from_bits(u64_at(c, 8 + 8 * i)));
                    ParticleRecord::from_parts(u64_at(c, 0), payload)
                })
                .collect(),
        ),
    })
}
