//! Verification of every parameter pair in a range of `n`, in parallel.

use neighborly_core::{verify_params, CirculantParams, VerificationReport, VerifyError};
use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SweepError {
    #[error("invalid range {min}..{max}: need 5 <= min <= max")]
    Range { min: usize, max: usize },
    #[error("{params}: {source}")]
    Verify {
        params: CirculantParams,
        #[source]
        source: VerifyError,
    },
    #[error("cannot start worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

/// Parameters of the sweep over `min..=max`, ordered by `(n, s, t)`.
pub fn sweep_params(min: usize, max: usize) -> Result<Vec<CirculantParams>, SweepError> {
    if min < 5 || min > max {
        return Err(SweepError::Range { min, max });
    }
    Ok((min..=max).flat_map(CirculantParams::all_for).collect())
}

/// Verifies every instance with `min <= n <= max`. The result order is
/// `(n, s, t)` whatever the number of workers; `None` uses rayon's default.
pub fn sweep(min: usize, max: usize, workers: Option<usize>) -> Result<Vec<VerificationReport>, SweepError> {
    let params = sweep_params(min, max)?;
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(k) = workers {
        builder = builder.num_threads(k.max(1));
    }
    let pool = builder.build()?;
    pool.install(|| {
        params
            .par_iter()
            .map(|&p| verify_params(p).map_err(|source| SweepError::Verify { params: p, source }))
            .collect()
    })
}

/// Parses `A..B` (inclusive on both ends).
pub fn parse_range(text: &str) -> Option<(usize, usize)> {
    let (a, b) = text.split_once("..")?;
    Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("5..20"), Some((5, 20)));
        assert_eq!(parse_range("10..10"), Some((10, 10)));
        assert_eq!(parse_range("5-20"), None);
        assert!(matches!(sweep_params(4, 9), Err(SweepError::Range { .. })));
        assert!(matches!(sweep_params(9, 8), Err(SweepError::Range { .. })));
        assert_eq!(sweep_params(5, 5).unwrap().len(), 1);
    }

    #[test]
    fn order_does_not_depend_on_workers() {
        let one = sweep(5, 14, Some(1)).unwrap();
        let three = sweep(5, 14, Some(3)).unwrap();
        assert_eq!(one, three);
        let keys: Vec<CirculantParams> = one.iter().map(|r| r.params).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }
}
