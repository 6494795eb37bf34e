//! Execution mode for the exhaustive searches.

/// Searches produce identical output in either mode; `Parallel` only changes
/// how the candidate space is split across threads.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

pub const DEFAULT_CAP: u128 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SearchError {
    #[error("search space has {required} candidates, above the cap of {cap}; rerun with a cap of at least {required}")]
    CapExceeded { required: u128, cap: u128 },
    #[error("exhaustive search needs a finite field, got {0}")]
    InfiniteField(crate::exactalg::FieldSpec),
    #[error("{0}")]
    Input(String),
}

/// Maps `f` over `items` in order, fanning out when asked and compiled in.
pub(crate) fn ordered_map<T, R, F>(items: Vec<T>, exec: Execution, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            items.into_par_iter().map(f).collect()
        }
        _ => items.into_iter().map(f).collect(),
    }
}
