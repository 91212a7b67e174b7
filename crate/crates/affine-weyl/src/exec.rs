//! Execution strategy for data-parallel sweeps.
//!
//! All parallel helpers preserve input order, so a sweep produces the same
//! output under [`Exec::Sequential`] and [`Exec::Parallel`]. Without the
//! `parallel` feature both variants run sequentially.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How a sweep distributes its work.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Exec {
    /// Plain iteration on the calling thread.
    Sequential,
    /// Rayon work stealing (falls back to sequential without the feature).
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    /// Maps `f` over `items`, keeping the input order.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => items.par_iter().map(f).collect(),
            _ => items.iter().map(f).collect(),
        }
    }

    /// Maps `f` over the index range `0..len`, keeping the order.
    pub fn map_range<R, F>(self, len: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => (0..len).into_par_iter().map(f).collect(),
            _ => (0..len).map(f).collect(),
        }
    }

    /// Returns the first `Some` produced by `f` in input order.
    ///
    /// The parallel variant evaluates eagerly but still reports the match
    /// with the smallest index.
    pub fn find_first<T, R, F>(self, items: &[T], f: F) -> Option<(usize, R)>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> Option<R> + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => items
                .par_iter()
                .enumerate()
                .filter_map(|(i, x)| f(x).map(|r| (i, r)))
                .find_first(|_| true),
            _ => items
                .iter()
                .enumerate()
                .find_map(|(i, x)| f(x).map(|r| (i, r))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_keeps_order_in_both_modes() {
        let items: Vec<u64> = (0..1000).collect();
        let seq = Exec::Sequential.map(&items, |x| x * x);
        let par = Exec::Parallel.map(&items, |x| x * x);
        assert_eq!(seq, par);
        assert_eq!(seq[10], 100);
    }

    #[test]
    fn find_first_reports_smallest_index() {
        let items: Vec<u64> = (0..5000).collect();
        for exec in [Exec::Sequential, Exec::Parallel] {
            let hit = exec.find_first(&items, |x| (x % 97 == 96).then_some(*x));
            assert_eq!(hit, Some((96, 96)));
        }
    }
}
