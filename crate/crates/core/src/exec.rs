//! Sequential or data-parallel evaluation of bounded sweeps.
//!
//! Both strategies return results in input order, so reports do not depend
//! on the strategy or the thread count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    Sequential,
    /// Uses rayon when the `parallel` feature is enabled, otherwise runs sequentially.
    Parallel,
}

impl Default for Strategy {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Strategy::Parallel
        } else {
            Strategy::Sequential
        }
    }
}

fn flip<R>(r: Result<Option<R>>) -> Option<Result<R>> {
    r.transpose()
}

impl Strategy {
    /// First item (in input order) for which `f` yields `Some`, stopping at the first error.
    pub fn find_first<T, R, F>(self, items: &[T], f: F) -> Result<Option<R>>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> Result<Option<R>> + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Strategy::Parallel => items.par_iter().find_map_first(|t| flip(f(t))).transpose(),
            _ => items.iter().find_map(|t| flip(f(t))).transpose(),
        }
    }

    pub fn map<T, R, F>(self, items: &[T], f: F) -> Result<Vec<R>>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> Result<R> + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Strategy::Parallel => items.par_iter().map(f).collect(),
            _ => items.iter().map(f).collect(),
        }
    }
}
