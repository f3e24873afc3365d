//! Explicit codeword sets for exhaustive checks on small instances.
//!
//! Vectors over F_q of a fixed length are packed into a `u64` key (base-q
//! digits, position 0 least significant), so sets are sorted key vectors.

use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement};
use crate::linalg;

/// Default cap on the number of vectors an exhaustive check may materialize.
pub const DEFAULT_BUDGET: u128 = 1 << 20;

pub fn encode(v: &[FieldElement], q: u32) -> u64 {
    v.iter().rev().fold(0u64, |acc, &c| acc * q as u64 + c as u64)
}

pub fn decode(mut key: u64, q: u32, len: usize) -> Vec<FieldElement> {
    (0..len)
        .map(|_| {
            let c = (key % q as u64) as u32;
            key /= q as u64;
            c
        })
        .collect()
}

/// `q^len`, or `BudgetExceeded` when it does not fit the budget.
pub fn checked_space(q: u32, len: usize, budget: u128) -> Result<u64> {
    let needed = (q as u128).checked_pow(len as u32).unwrap_or(u128::MAX);
    if needed > budget || needed > u64::MAX as u128 {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    Ok(needed as u64)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CodewordSet {
    q: u32,
    len: usize,
    keys: Vec<u64>,
}

impl CodewordSet {
    pub fn from_keys(q: u32, len: usize, mut keys: Vec<u64>) -> Self {
        keys.sort_unstable();
        keys.dedup();
        CodewordSet { q, len, keys }
    }

    pub fn from_vectors<'a>(q: u32, len: usize, vs: impl IntoIterator<Item = &'a Vec<FieldElement>>) -> Self {
        Self::from_keys(q, len, vs.into_iter().map(|v| encode(v, q)).collect())
    }

    /// All F_q-linear combinations of `basis`.
    pub fn span(field: &Field, basis: &[Vec<FieldElement>], len: usize, budget: u128) -> Result<Self> {
        let q = field.q();
        let rows = linalg::rref(field, basis).0;
        checked_space(q, rows.len(), budget)?;
        let mut words = vec![vec![0; len]];
        for row in &rows {
            let mut next = Vec::with_capacity(words.len() * q as usize);
            for w in &words {
                for c in field.elements() {
                    let mut v = w.clone();
                    linalg::axpy(field, &mut v, c, row);
                    next.push(v);
                }
            }
            words = next;
        }
        Ok(Self::from_vectors(q, len, &words))
    }

    /// Every vector of length `len` satisfying `pred`.
    pub fn filter_ambient(
        field: &Field,
        len: usize,
        budget: u128,
        pred: impl Fn(&[FieldElement]) -> bool + Sync,
    ) -> Result<Self> {
        use rayon::prelude::*;
        let q = field.q();
        let total = checked_space(q, len, budget)?;
        let keys: Vec<u64> = (0..total)
            .into_par_iter()
            .filter(|&k| pred(&decode(k, q, len)))
            .collect();
        Ok(Self::from_keys(q, len, keys))
    }

    pub fn size(&self) -> usize {
        self.keys.len()
    }

    pub fn vector_len(&self) -> usize {
        self.len
    }

    pub fn contains(&self, v: &[FieldElement]) -> bool {
        self.keys.binary_search(&encode(v, self.q)).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vec<FieldElement>> + '_ {
        self.keys.iter().map(|&k| decode(k, self.q, self.len))
    }

    pub fn keys(&self) -> &[u64] {
        &self.keys
    }

    pub fn is_subset(&self, other: &CodewordSet) -> bool {
        self.keys.iter().all(|k| other.keys.binary_search(k).is_ok())
    }

    pub fn intersection_size(&self, other: &CodewordSet) -> usize {
        self.keys.iter().filter(|k| other.keys.binary_search(k).is_ok()).count()
    }

    pub fn map(&self, f: impl Fn(&[FieldElement]) -> Vec<FieldElement>) -> CodewordSet {
        let mapped: Vec<Vec<FieldElement>> = self.iter().map(|v| f(&v)).collect();
        let len = mapped.first().map_or(self.len, Vec::len);
        Self::from_vectors(self.q, len, &mapped)
    }

    /// Weight distribution `A_0, ..., A_len`.
    pub fn weight_distribution(&self) -> Vec<u64> {
        let mut out = vec![0; self.len + 1];
        for v in self.iter() {
            out[v.iter().filter(|&&c| c != 0).count()] += 1;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn span_of_repetition_code() {
        let f3 = Field::prime(3).unwrap();
        let s = CodewordSet::span(&f3, &[vec![1, 1, 1], vec![2, 2, 2]], 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(s.size(), 3);
        assert!(s.contains(&[2, 2, 2]));
        assert_eq!(s.weight_distribution(), vec![1, 0, 0, 2]);
        assert!(matches!(
            CodewordSet::span(&f3, &[vec![1, 0], vec![0, 1]], 2, 8),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn encode_roundtrip() {
        let v = vec![3, 0, 6, 1];
        assert_eq!(decode(encode(&v, 7), 7, 4), v);
    }
}
