//! Wall-clock timing of encode/decode over a parameter grid.

use std::time::{Duration, Instant};

use num_bigint::BigUint;

use crate::encoders::{Grassmannian, Scheme};
use crate::error::Result;
use crate::linalg::Subspace;

#[derive(Clone, Debug)]
pub struct Timing {
    pub n: usize,
    pub k: usize,
    pub q: u32,
    pub scheme: Scheme,
    /// n * k * (n - k)
    pub work: f64,
    pub encode_ns: f64,
    pub decode_ns: f64,
}

/// (n, k) pairs doubling n with k = n / 2.
pub fn doubling_grid(start: usize, steps: usize) -> Vec<(usize, usize)> {
    (0..steps).map(|i| (start << i, (start << i) / 2)).collect()
}

/// Mean time per call of `f`, repeating `batch` until `min_time` elapses.
fn time_per_call(batch: usize, min_time: Duration, mut f: impl FnMut()) -> f64 {
    let start = Instant::now();
    let mut calls = 0usize;
    loop {
        f();
        calls += batch;
        let elapsed = start.elapsed();
        if elapsed >= min_time {
            return elapsed.as_nanos() as f64 / calls as f64;
        }
    }
}

/// Times encode and decode of `samples` subspaces spread evenly over the
/// index range.
pub fn measure(
    g: &Grassmannian,
    scheme: Scheme,
    samples: usize,
    min_time: Duration,
) -> Result<Timing> {
    let samples = samples.max(1);
    let indices: Vec<BigUint> = (0..samples)
        .map(|j| g.total() * BigUint::from(j) / BigUint::from(samples))
        .collect();
    let subspaces: Vec<Subspace> = indices
        .iter()
        .map(|i| g.decode(i, scheme))
        .collect::<Result<_>>()?;
    let encode_ns = time_per_call(samples, min_time, || {
        for x in &subspaces {
            std::hint::black_box(g.encode(x, scheme).unwrap());
        }
    });
    let decode_ns = time_per_call(samples, min_time, || {
        for i in &indices {
            std::hint::black_box(g.decode(i, scheme).unwrap());
        }
    });
    let (n, k) = (g.n(), g.k());
    Ok(Timing {
        n,
        k,
        q: g.q(),
        scheme,
        work: (n * k * (n - k)) as f64,
        encode_ns,
        decode_ns,
    })
}

/// Least-squares slope of log(y) against log(x).
pub fn loglog_slope(points: &[(f64, f64)]) -> f64 {
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let m = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / m;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / m;
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slope_of_power_law() {
        let pts: Vec<(f64, f64)> = (1..6)
            .map(|i| (i as f64, 3.0 * (i as f64).powf(1.5)))
            .collect();
        assert!((loglog_slope(&pts) - 1.5).abs() < 1e-9);
    }

    #[test]
    fn grid_doubles() {
        assert_eq!(doubling_grid(8, 3), vec![(8, 4), (16, 8), (32, 16)]);
    }

    #[test]
    fn measures_something() {
        let g = Grassmannian::new(8, 4, 2).unwrap();
        let t = measure(&g, Scheme::Extended, 4, Duration::from_millis(1)).unwrap();
        assert!(t.encode_ns > 0.0 && t.decode_ns > 0.0);
        assert_eq!(t.work, 128.0);
    }
}
