//! Lattice-point helpers shared by the root, class and affine-weight
//! enumerations.

use std::cmp::Ordering;

/// Graded lexicographic order on integer vectors: smaller coordinate sum
/// first, ties broken by reverse lexicographic order so that `(1,0)` comes
/// before `(0,1)`.
pub(crate) fn graded_lex(a: &[i64], b: &[i64]) -> Ordering {
    let sa: i64 = a.iter().sum();
    let sb: i64 = b.iter().sum();
    sa.cmp(&sb).then_with(|| b.cmp(a))
}

/// All nonnegative vectors `m` with `Σ weights[i]·m[i] = total`, in
/// graded lexicographic order. Every weight must be positive.
pub(crate) fn weighted_compositions(weights: &[i64], total: i64) -> Vec<Vec<i64>> {
    debug_assert!(weights.iter().all(|&w| w > 0));
    let mut out = Vec::new();
    if total < 0 {
        return out;
    }
    let mut current = vec![0; weights.len()];
    fill(weights, 0, total, &mut current, &mut out);
    out.sort_by(|a, b| graded_lex(a, b));
    out
}

fn fill(weights: &[i64], idx: usize, remaining: i64, current: &mut [i64], out: &mut Vec<Vec<i64>>) {
    if idx == weights.len() {
        if remaining == 0 {
            out.push(current.to_vec());
        }
        return;
    }
    let w = weights[idx];
    if idx + 1 == weights.len() {
        if remaining % w == 0 {
            current[idx] = remaining / w;
            out.push(current.to_vec());
        }
        return;
    }
    for m in 0..=remaining / w {
        current[idx] = m;
        fill(weights, idx + 1, remaining - m * w, current, out);
    }
    current[idx] = 0;
}

pub(crate) fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_puts_first_coordinate_first() {
        let mut v = vec![vec![0, 1], vec![1, 1], vec![1, 0], vec![2, 0], vec![0, 2]];
        v.sort_by(|a, b| graded_lex(a, b));
        assert_eq!(v, vec![vec![1, 0], vec![0, 1], vec![2, 0], vec![1, 1], vec![0, 2]]);
    }

    #[test]
    fn empty_weight_vector() {
        assert_eq!(weighted_compositions(&[], 0), vec![Vec::<i64>::new()]);
        assert!(weighted_compositions(&[], 3).is_empty());
    }

    #[test]
    fn parity_obstruction() {
        assert!(weighted_compositions(&[2], 3).is_empty());
        assert_eq!(weighted_compositions(&[2, 3], 6), vec![vec![0, 2], vec![3, 0]]);
    }

    #[test]
    fn negative_total_is_empty() {
        assert!(weighted_compositions(&[1, 1], -1).is_empty());
    }
}
