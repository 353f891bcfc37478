//! Deterministic summation helpers.

use std::ops::Add;

/// Pairwise (cascade) summation in the order of `values`.
///
/// The reduction tree depends only on the length, so results do not depend on
/// how the values were produced.
pub fn pairwise_sum<T: Copy + Add<Output = T> + Default>(values: &[T]) -> T {
    const LEAF: usize = 16;
    if values.len() <= LEAF {
        return values.iter().fold(T::default(), |acc, &v| acc + v);
    }
    let mid = values.len() / 2;
    pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sums_match_naive_on_integers() {
        let v: Vec<f64> = (1..=1000).map(f64::from).collect();
        assert_eq!(pairwise_sum(&v), 500_500.0);
        assert_eq!(pairwise_sum::<f64>(&[]), 0.0);
    }

    #[test]
    fn cancellation_is_better_than_naive() {
        let mut v = vec![1.0; 1 << 20];
        v.push(1e-3);
        let naive: f64 = v.iter().map(|x| x * 0.1).sum();
        let scaled: Vec<f64> = v.iter().map(|x| x * 0.1).collect();
        let exact = 0.1 * (1u64 << 20) as f64 + 1e-4;
        assert!((pairwise_sum(&scaled) - exact).abs() <= (naive - exact).abs());
    }
}
