//! Weak compositions of `n` into `k` parts and their canonical indexing.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

/// Vector of non-negative parts with a fixed sum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        Composition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of sequences with exactly `parts[r]` occurrences of `r`.
    pub fn multinomial(&self) -> BigUint {
        multinomial(&self.0)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn multinomial(parts: &[u32]) -> BigUint {
    let mut acc = BigUint::one();
    let mut total = 0u64;
    for &p in parts {
        total += p as u64;
        acc *= binomial(total, p as u64);
    }
    acc
}

/// All compositions of `n` into `k` parts, lexicographically decreasing, so
/// `(n, 0, …, 0)` comes first.
pub fn compositions(n: u32, k: usize) -> Vec<Composition> {
    assert!(k >= 1, "compositions need at least one part");
    let mut out = Vec::new();
    let mut buf = vec![0u32; k];
    fill(&mut out, &mut buf, 0, n);
    out
}

fn fill(out: &mut Vec<Composition>, buf: &mut [u32], pos: usize, rest: u32) {
    if pos + 1 == buf.len() {
        buf[pos] = rest;
        out.push(Composition(buf.to_vec()));
        return;
    }
    for first in (0..=rest).rev() {
        buf[pos] = first;
        fill(out, buf, pos + 1, rest - first);
    }
}

/// Bijection between compositions of `n` into `k` parts and `0..C(n+k-1, k-1)`.
#[derive(Clone, Debug)]
pub struct CompositionIndex {
    n: u32,
    k: usize,
    list: Vec<Composition>,
    lookup: HashMap<Vec<u32>, usize>,
}

impl CompositionIndex {
    pub fn new(n: u32, k: usize) -> Self {
        let list = compositions(n, k);
        let lookup = list.iter().enumerate().map(|(i, c)| (c.0.clone(), i)).collect();
        CompositionIndex { n, k, list, lookup }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn parts(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    pub fn get(&self, i: usize) -> &Composition {
        &self.list[i]
    }

    pub fn index_of(&self, parts: &[u32]) -> Option<usize> {
        self.lookup.get(parts).copied()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Composition> {
        self.list.iter()
    }

    pub fn as_slice(&self) -> &[Composition] {
        &self.list
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let c = compositions(2, 3);
        assert_eq!(c.len(), 6);
        assert_eq!(c[0].parts(), &[2, 0, 0]);
        assert_eq!(compositions(0, 4), vec![Composition::new(vec![0, 0, 0, 0])]);
        let parts: Vec<Vec<u32>> = compositions(3, 2).into_iter().map(Composition::into_parts).collect();
        assert_eq!(parts, vec![vec![3, 0], vec![2, 1], vec![1, 2], vec![0, 3]]);
    }

    #[test]
    fn canonical_order_for_three_parts() {
        let parts: Vec<Vec<u32>> = compositions(2, 3).into_iter().map(Composition::into_parts).collect();
        assert_eq!(
            parts,
            vec![vec![2, 0, 0], vec![1, 1, 0], vec![1, 0, 1], vec![0, 2, 0], vec![0, 1, 1], vec![0, 0, 2]]
        );
    }

    #[test]
    fn count_matches_stars_and_bars() {
        for n in 0..6u32 {
            for k in 1..5usize {
                let expected = binomial(n as u64 + k as u64 - 1, k as u64 - 1);
                assert_eq!(BigUint::from(compositions(n, k).len()), expected, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn multinomials() {
        assert_eq!(multinomial(&[2, 1]), BigUint::from(3u32));
        assert_eq!(multinomial(&[1, 1, 1]), BigUint::from(6u32));
        assert_eq!(multinomial(&[0, 0]), BigUint::from(1u32));
    }

    #[test]
    fn index_roundtrip() {
        let idx = CompositionIndex::new(3, 3);
        for (i, c) in idx.iter().enumerate() {
            assert_eq!(idx.index_of(c.parts()), Some(i));
        }
        assert_eq!(idx.index_of(&[1, 1, 0]), None);
    }
}
