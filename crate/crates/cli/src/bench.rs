//! Wall-clock scaling of the solve pipeline. Generation happens before the
//! clock starts, and the caches are flushed before every run so that each
//! size is timed from the same cold state.

use std::time::{Duration, Instant};

use orthowatch_core::{generate, route_metrics, solve, GenKind, GenParams, Solution, TrimMode};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

pub const DEFAULT_SIZES: [usize; 3] = [10_000, 100_000, 1_000_000];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub n: usize,
    pub slabs: usize,
    pub groups: usize,
    pub route_segments: usize,
    /// Edges, slabs and route segments held at once.
    pub peak_segments: usize,
    pub runs: usize,
    /// Median run.
    pub wall_seconds: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchTable {
    pub kind: GenKind,
    pub seed: u64,
    pub trim: TrimMode,
    pub rows: Vec<BenchRow>,
    /// Time ratio between consecutive rows.
    pub ratios: Vec<f64>,
}

pub const RUNS: usize = 11;
const FLUSH_BYTES: usize = 64 << 20;

/// Overwrites a buffer larger than the last-level cache.
fn flush(buf: &mut [u8], round: usize) {
    for (i, b) in buf.iter_mut().enumerate().step_by(64) {
        *b = (i ^ round) as u8;
    }
    std::hint::black_box(&*buf);
}

fn median(times: &mut [Duration]) -> Duration {
    times.sort_unstable();
    times[times.len() / 2]
}

pub fn cmd_bench(sizes: &[usize], kind: GenKind, seed: u64, trim: TrimMode) -> Result<BenchTable> {
    let mut rows = Vec::with_capacity(sizes.len());
    let mut scratch = vec![0u8; FLUSH_BYTES];
    for &n in sizes {
        let p = generate(&GenParams::new(kind, n, seed))?;
        let mut times = Vec::with_capacity(RUNS);
        // Every run writes into freshly mapped memory, whatever the size.
        let mut kept: Vec<Solution> = Vec::with_capacity(RUNS);
        for round in 0..RUNS {
            flush(&mut scratch, round);
            let t = Instant::now();
            let sol = solve(&p, trim)?;
            times.push(t.elapsed());
            kept.push(sol);
        }
        let sol = kept.pop().ok_or_else(|| CliError::Internal("no benchmark run".into()))?;
        drop(kept);
        let slabs = sol.decomposition().len();
        let groups = match &sol {
            Solution::Monotone(m) => m.groups.len(),
            Solution::Path(ps) => ps.plan.elements.len(),
        };
        let route_segments = route_metrics(sol.route()).segment_count;
        rows.push(BenchRow {
            n: p.len(),
            slabs,
            groups,
            route_segments,
            peak_segments: p.len() + slabs + route_segments,
            runs: RUNS,
            wall_seconds: median(&mut times).as_secs_f64(),
        });
    }
    let ratios = rows.windows(2).map(|w| w[1].wall_seconds / w[0].wall_seconds.max(1e-9)).collect();
    Ok(BenchTable { kind, seed, trim, rows, ratios })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_table() {
        let t = cmd_bench(&[100, 1000], GenKind::Monotone, 3, TrimMode::Safe).unwrap();
        assert_eq!(t.rows.len(), 2);
        assert_eq!(t.ratios.len(), 1);
        assert_eq!(t.rows[1].n, 1000);
        assert_eq!(t.rows[1].slabs, 499);
    }
}
