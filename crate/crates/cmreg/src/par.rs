//! Internal helper that maps a function over a slice, in parallel when the
//! `parallel` feature is enabled and sequentially otherwise. Results are
//! returned in input order either way, so callers are deterministic under
//! both configurations.

#[cfg(feature = "parallel")]
pub(crate) fn map_vec<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_vec<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    items.iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preserves_input_order() {
        let items: Vec<i64> = (0..1000).collect();
        let out = map_vec(&items, |x| x * x);
        assert_eq!(out, (0..1000).map(|x| x * x).collect::<Vec<_>>());
    }
}
