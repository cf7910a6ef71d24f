//! Small exact counting helpers shared by the algebra modules.

use crate::error::{Error, Result};

pub fn factorial(n: usize) -> Result<u64> {
    (1..=n as u64).try_fold(1u64, |acc, k| acc.checked_mul(k).ok_or(Error::Overflow("factorial")))
}

/// Falling factorial `n (n-1) ... (n-k+1)`; zero when `k > n`.
pub fn falling_factorial(n: usize, k: usize) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    ((n - k + 1) as u64..=n as u64)
        .try_fold(1u64, |acc, v| acc.checked_mul(v).ok_or(Error::Overflow("falling factorial")))
}

pub fn binomial(n: usize, k: usize) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return Err(Error::Overflow("binomial"));
        }
    }
    Ok(acc as u64)
}

pub fn checked_pow(base: u64, exp: usize) -> Result<u64> {
    (0..exp).try_fold(1u64, |acc, _| acc.checked_mul(base).ok_or(Error::Overflow("power")))
}

/// All `k`-element subsets of `items`, in lexicographic order of positions.
pub fn combinations<T: Copy>(items: &[T], k: usize) -> Vec<Vec<T>> {
    fn go<T: Copy>(items: &[T], k: usize, start: usize, cur: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let need = k - cur.len();
        if items.len() < start + need {
            return;
        }
        for i in start..=items.len() - need {
            cur.push(items[i]);
            go(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= items.len() {
        go(items, k, 0, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(factorial(0).unwrap(), 1);
        assert_eq!(factorial(5).unwrap(), 120);
        assert_eq!(falling_factorial(5, 2).unwrap(), 20);
        assert_eq!(falling_factorial(2, 3).unwrap(), 0);
        assert_eq!(falling_factorial(0, 0).unwrap(), 1);
        assert_eq!(binomial(6, 3).unwrap(), 20);
        assert_eq!(binomial(3, 5).unwrap(), 0);
        assert!(factorial(30).is_err());
    }

    #[test]
    fn combinations_enumerate_all_subsets() {
        let items = [1, 2, 3, 4];
        assert_eq!(combinations(&items, 2).len(), 6);
        assert_eq!(combinations(&items, 0), vec![Vec::<i32>::new()]);
        assert!(combinations(&items, 5).is_empty());
        assert_eq!(combinations(&items, 4), vec![vec![1, 2, 3, 4]]);
    }
}
