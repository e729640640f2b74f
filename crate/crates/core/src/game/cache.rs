//! On-disk cache of solved tables, keyed by graph6 and `k`.
//!
//! File layout, little endian: magic `CNLWT1`, `k: u8`, `n: u8`,
//! `states: u32`, then `states` cop ranks and `states` robber ranks as
//! `u32` each. The graph is recovered from the file name, which is the hex
//! of its graph6 string.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use super::{solve, SolverError, WinTable};
use crate::graph::Graph;

pub const ENV_VAR: &str = "COPNUMLAB_CACHE";
const MAGIC: &[u8; 6] = b"CNLWT1";

pub fn cache_dir() -> Option<PathBuf> {
    std::env::var_os(ENV_VAR)
        .filter(|v| !v.is_empty())
        .map(PathBuf::from)
}

pub fn cache_path(dir: &Path, g: &Graph, k: usize) -> PathBuf {
    let hex: String = g.to_graph6().bytes().map(|b| format!("{b:02x}")).collect();
    dir.join(format!("{hex}-k{k}.wt"))
}

pub fn store(dir: &Path, table: &WinTable) -> io::Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let (cop, rob) = table.raw_ranks();
    let mut buf = Vec::with_capacity(16 + 8 * cop.len());
    buf.extend_from_slice(MAGIC);
    buf.push(table.k() as u8);
    buf.push(table.graph().n() as u8);
    buf.extend_from_slice(&(cop.len() as u32).to_le_bytes());
    for r in cop.iter().chain(rob) {
        buf.extend_from_slice(&r.to_le_bytes());
    }
    let path = cache_path(dir, table.graph(), table.k());
    // write then rename so a concurrent reader never sees a partial file
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    fs::write(&tmp, &buf)?;
    fs::rename(&tmp, &path)?;
    Ok(path)
}

fn bad(msg: &str) -> io::Error {
    io::Error::new(io::ErrorKind::InvalidData, msg.to_string())
}

/// `Ok(None)` when no cache entry exists.
pub fn load(dir: &Path, g: &Graph, k: usize) -> io::Result<Option<WinTable>> {
    let path = cache_path(dir, g, k);
    let bytes = match fs::read(&path) {
        Ok(b) => b,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e),
    };
    if bytes.len() < 12 || &bytes[..6] != MAGIC {
        return Err(bad("not a win-table cache file"));
    }
    if bytes[6] as usize != k || bytes[7] as usize != g.n() {
        return Err(bad("cache header does not match the graph"));
    }
    let states = u32::from_le_bytes(bytes[8..12].try_into().unwrap()) as usize;
    let body = &bytes[12..];
    if body.len() != 8 * states {
        return Err(bad("truncated cache file"));
    }
    let words: Vec<u32> = body
        .chunks_exact(4)
        .map(|c| u32::from_le_bytes(c.try_into().unwrap()))
        .collect();
    let (cop, rob) = words.split_at(states);
    WinTable::from_ranks(g, k, cop.to_vec(), rob.to_vec())
        .map(Some)
        .map_err(|e| bad(&e.to_string()))
}

/// `solve`, consulting and filling the cache named by `COPNUMLAB_CACHE`.
/// Cache read or write problems fall back to solving.
pub fn solve_cached(g: &Graph, k: usize) -> Result<WinTable, SolverError> {
    let Some(dir) = cache_dir() else {
        return solve(g, k);
    };
    if let Ok(Some(t)) = load(&dir, g, k) {
        return Ok(t);
    }
    let t = solve(g, k)?;
    let _ = store(&dir, &t);
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::petersen;

    #[test]
    fn round_trip_through_disk() {
        let dir = std::env::temp_dir().join(format!("copnumlab-cache-{}", std::process::id()));
        let g = petersen();
        let t = solve(&g, 2).unwrap();
        store(&dir, &t).unwrap();
        let back = load(&dir, &g, 2).unwrap().unwrap();
        assert_eq!(back.raw_ranks(), t.raw_ranks());
        assert!(load(&dir, &g, 1).unwrap().is_none());
        fs::remove_dir_all(&dir).unwrap();
    }
}
