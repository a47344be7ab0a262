//! Sieve cache files.
//!
//! Layout, bit-exact: 4 ASCII magic bytes `ICX1`, the limit as an unsigned
//! 64-bit little-endian integer, then `limit` payload bytes where byte
//! `i - 1` holds the complexity of `i`.  Loads verify magic, length and the
//! first entry before accepting a file.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::table::ComplexityTable;

pub const MAGIC: [u8; 4] = *b"ICX1";

/// Header size in bytes: magic plus limit.
pub const HEADER_LEN: u64 = 12;

pub fn write_cache(path: &Path, table: &ComplexityTable) -> Result<()> {
    let mut out = BufWriter::new(File::create(path)?);
    out.write_all(&MAGIC)?;
    out.write_all(&table.limit().to_le_bytes())?;
    out.write_all(table.entry_bytes())?;
    out.flush()?;
    Ok(())
}

pub fn read_cache(path: &Path) -> Result<ComplexityTable> {
    let file = File::open(path)?;
    let file_len = file.metadata()?.len();
    let mut input = BufReader::new(file);

    let mut magic = [0u8; 4];
    input
        .read_exact(&mut magic)
        .map_err(|_| Error::CorruptCache("file shorter than header".into()))?;
    if magic != MAGIC {
        return Err(Error::CorruptCache(format!(
            "bad magic {:?}, expected {:?}",
            magic, MAGIC
        )));
    }

    let mut limit_bytes = [0u8; 8];
    input
        .read_exact(&mut limit_bytes)
        .map_err(|_| Error::CorruptCache("file shorter than header".into()))?;
    let limit = u64::from_le_bytes(limit_bytes);
    if limit == 0 {
        return Err(Error::CorruptCache("limit field is zero".into()));
    }
    let expected_len = HEADER_LEN
        .checked_add(limit)
        .ok_or_else(|| Error::CorruptCache("limit field overflows".into()))?;
    if file_len != expected_len {
        return Err(Error::CorruptCache(format!(
            "length mismatch: limit {limit} implies {expected_len} bytes, file has {file_len}"
        )));
    }

    let mut values = vec![0u8; (limit + 1) as usize];
    input
        .read_exact(&mut values[1..])
        .map_err(|_| Error::CorruptCache("truncated payload".into()))?;
    if values[1] != 1 {
        return Err(Error::CorruptCache(format!(
            "entry for 1 is {}, must be 1",
            values[1]
        )));
    }
    Ok(ComplexityTable::from_values(values))
}
