//! Data-parallel map with a sequential fallback.

/// Evaluate `f(0..n)` and collect the results in index order.
///
/// Runs on the rayon pool when the `parallel` feature is enabled and `parallel`
/// is true, and sequentially otherwise. The output is identical either way.
pub fn par_map<T, F>(n: usize, parallel: bool, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if parallel {
            use rayon::prelude::*;
            return (0..n).into_par_iter().map(&f).collect();
        }
    }
    let _ = parallel;
    (0..n).map(f).collect()
}

/// Maximum of `f(0..n)`, ignoring nothing: NaN propagates as +inf.
pub fn par_max<F>(n: usize, parallel: bool, f: F) -> f64
where
    F: Fn(usize) -> f64 + Sync + Send,
{
    par_map(n, parallel, f)
        .into_iter()
        .fold(0.0_f64, |acc, x| if x.is_nan() { f64::INFINITY } else { acc.max(x) })
}

pub fn parallel_available() -> bool {
    cfg!(feature = "parallel")
}
