//! Data-parallel helpers. With the `parallel` feature off, or when the
//! caller asks for sequential execution, these are plain iterator maps.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub fn map<T, R, F>(items: &[T], parallel: bool, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        return items.par_iter().map(f).collect();
    }
    let _ = parallel;
    items.iter().map(f).collect()
}

pub fn flat_map<T, R, F>(items: &[T], parallel: bool, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Vec<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        return items.par_iter().flat_map_iter(f).collect();
    }
    let _ = parallel;
    items.iter().flat_map(f).collect()
}

/// Whether parallel execution is compiled in.
pub const AVAILABLE: bool = cfg!(feature = "parallel");
