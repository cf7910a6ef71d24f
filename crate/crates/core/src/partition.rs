//! Integer partitions and the symmetric-group character machinery built on them.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinat::factorial;
use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. May be empty.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl TryFrom<Vec<usize>> for Partition {
    type Error = String;

    fn try_from(mut parts: Vec<usize>) -> std::result::Result<Self, Self::Error> {
        if parts.contains(&0) {
            return Err("partition parts must be positive".into());
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl Partition {
    pub const EMPTY: Partition = Partition(Vec::new());

    /// Builds a partition from parts in any order.
    ///
    /// Panics if a part is zero.
    pub fn new(parts: impl Into<Vec<usize>>) -> Self {
        Partition::try_from(parts.into()).expect("partition parts must be positive")
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(1^n)`.
    pub fn ones(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts, `l(λ)`.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `m_i(λ)`, the number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    /// Exponential view: `(part, multiplicity)` pairs in increasing part order.
    pub fn exponents(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in self.0.iter().rev() {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `z_λ = Π i^{m_i} m_i!`, or `None` on u64 overflow.
    pub fn checked_z(&self) -> Option<u64> {
        let mut acc: u64 = 1;
        for (i, m) in self.exponents() {
            for _ in 0..m {
                acc = acc.checked_mul(i as u64)?;
            }
            acc = acc.checked_mul(factorial(m).ok()?)?;
        }
        Some(acc)
    }

    /// `z_λ`. Panics on overflow, which needs parts beyond size 20.
    pub fn z(&self) -> u64 {
        self.checked_z().expect("z_λ overflows u64")
    }

    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::new(parts)
    }

    /// Multiplicity-wise difference `λ \ δ`.
    pub fn subtract(&self, other: &Partition) -> Result<Partition> {
        let mut parts = self.0.clone();
        for (i, m) in other.exponents() {
            if self.multiplicity(i) < m {
                return Err(Error::NotSubtractable { part: i });
            }
            for _ in 0..m {
                let pos = parts.iter().position(|&p| p == i).unwrap();
                parts.remove(pos);
            }
        }
        Ok(Partition(parts))
    }

    /// `λ̄`: the partition with every part equal to 1 removed.
    pub fn proper_part(&self) -> Partition {
        Partition(self.0.iter().copied().filter(|&p| p != 1).collect())
    }

    pub fn is_proper(&self) -> bool {
        self.multiplicity(1) == 0
    }

    /// `λ̲ₙ`: append `n - |λ|` parts equal to one.
    pub fn pad(&self, n: usize) -> Result<Partition> {
        let size = self.size();
        if n < size {
            return Err(Error::PadTooSmall { size, n });
        }
        let mut parts = self.0.clone();
        parts.extend(std::iter::repeat_n(1, n - size));
        Ok(Partition(parts))
    }

    /// Diagram containment `self ⊆ other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.0.len() <= other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Cycle type of a permutation given in 0-based one-line notation.
    /// The input must be a bijection of `0..n`.
    pub fn cycle_type(perm: &[usize]) -> Partition {
        let mut seen = vec![false; perm.len()];
        let mut parts = Vec::new();
        for start in 0..perm.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = perm[i];
                len += 1;
            }
            parts.push(len);
        }
        Partition::new(parts)
    }

    /// Removes one box from row `row`, which must be a corner.
    fn remove_box(&self, row: usize) -> Partition {
        let mut parts = self.0.clone();
        parts[row] -= 1;
        if parts[row] == 0 {
            parts.pop();
        }
        Partition(parts)
    }

    /// Rows whose last box is a removable corner.
    fn corners(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.0.len()).filter(move |&i| i + 1 == self.0.len() || self.0[i + 1] < self.0[i])
    }
}

/// All partitions of `n`, in reverse lexicographic order starting at `(n)`.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            go(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Number of standard Young tableaux of shape `λ`, by the hook-length formula.
pub fn dim_partition(lambda: &Partition) -> u64 {
    let parts = lambda.parts();
    let n = lambda.size();
    let conj: Vec<usize> = (0..parts.first().copied().unwrap_or(0))
        .map(|j| parts.iter().filter(|&&p| p > j).count())
        .collect();
    let mut hooks: u128 = 1;
    for (i, &row) in parts.iter().enumerate() {
        for (j, &col) in conj.iter().enumerate().take(row) {
            hooks *= (row - j + col - i - 1) as u128;
        }
    }
    let nf: u128 = (1..=n as u128).product();
    (nf / hooks) as u64
}

thread_local! {
    static MN_CACHE: RefCell<HashMap<(Partition, Partition), i64>> = RefCell::new(HashMap::new());
    static SKEW_CACHE: RefCell<HashMap<(Partition, Partition), u64>> = RefCell::new(HashMap::new());
}

/// Irreducible character `χ^λ` of `S_{|λ|}` evaluated on cycle type `ρ`,
/// by the Murnaghan–Nakayama rule.
pub fn mn_character(lambda: &Partition, rho: &Partition) -> Result<i64> {
    if lambda.size() != rho.size() {
        return Err(Error::SizeMismatch { expected: lambda.size(), found: rho.size() });
    }
    Ok(mn_rec(lambda, rho.parts()))
}

fn mn_rec(lambda: &Partition, rho: &[usize]) -> i64 {
    if rho.is_empty() {
        return 1;
    }
    let key = (lambda.clone(), Partition(rho.to_vec()));
    if let Some(v) = MN_CACHE.with(|c| c.borrow().get(&key).copied()) {
        return v;
    }
    let r = rho[0];
    let rest = &rho[1..];
    let l = lambda.length();
    // Beta-set: first-column hook lengths.
    let beta: Vec<usize> = lambda.parts().iter().enumerate().map(|(i, &p)| p + l - 1 - i).collect();
    let mut total = 0i64;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let crossed = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[idx] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let len = next.len();
        let parts: Vec<usize> = next
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (len - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        total += sign * mn_rec(&Partition(parts), rest);
    }
    MN_CACHE.with(|c| c.borrow_mut().insert(key, total));
    total
}

/// Number of standard skew tableaux of shape `λ/ρ`; zero when `ρ ⊄ λ`.
pub fn skew_count(lambda: &Partition, rho: &Partition) -> u64 {
    if !rho.is_contained_in(lambda) {
        return 0;
    }
    skew_rec(lambda, rho)
}

fn skew_rec(lambda: &Partition, rho: &Partition) -> u64 {
    if lambda == rho {
        return 1;
    }
    let key = (lambda.clone(), rho.clone());
    if let Some(v) = SKEW_CACHE.with(|c| c.borrow().get(&key).copied()) {
        return v;
    }
    let mut total = 0;
    for row in lambda.corners() {
        let smaller = lambda.remove_box(row);
        if rho.is_contained_in(&smaller) {
            total += skew_rec(&smaller, rho);
        }
    }
    SKEW_CACHE.with(|c| c.borrow_mut().insert(key, total));
    total
}
