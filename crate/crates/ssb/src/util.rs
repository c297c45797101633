//! Execution-mode plumbing: data-parallel sweeps with a sequential
//! fallback.
//!
//! Sweeps (catalog verification, relation checking, frontier expansion,
//! leaf certification) are embarrassingly parallel over independent
//! items. With the `parallel` feature enabled they run on rayon;
//! without it, or with [`ExecMode::Sequential`], they run on a plain
//! iterator. Results are always collected in input order so both modes
//! produce identical output.

/// How to run a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExecMode {
    /// Run items one after another on the calling thread.
    Sequential,
    /// Use the rayon thread pool when the `parallel` feature is
    /// enabled; otherwise equivalent to `Sequential`.
    #[default]
    Parallel,
}

/// Maps `f` over `items`, preserving input order in the output.
pub fn map_ordered<T, U, F>(mode: ExecMode, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if mode == ExecMode::Parallel {
            use rayon::prelude::*;
            return items.par_iter().map(f).collect();
        }
    }
    let _ = mode;
    items.iter().map(f).collect()
}

/// Maps `f` over owned items, preserving input order.
pub fn map_ordered_owned<T, U, F>(mode: ExecMode, items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if mode == ExecMode::Parallel {
            use rayon::prelude::*;
            return items.into_par_iter().map(f).collect();
        }
    }
    let _ = mode;
    items.into_iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_modes_agree() {
        let items: Vec<u64> = (0..100).collect();
        let seq = map_ordered(ExecMode::Sequential, &items, |x| x * x);
        let par = map_ordered(ExecMode::Parallel, &items, |x| x * x);
        assert_eq!(seq, par);
    }
}
