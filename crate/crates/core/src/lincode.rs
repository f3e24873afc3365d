//! Linear codes over F_q given by generator matrices.

use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement};
use crate::linalg::{self, Matrix};

/// Default enumeration budget, in `q^k * n` symbol operations.
pub const DEFAULT_DISTANCE_BUDGET: u128 = 1 << 28;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Distance {
    Exact(usize),
    /// Certified lower bound from a partial enumeration.
    LowerBound(usize),
}

impl Distance {
    pub fn value(self) -> usize {
        match self {
            Distance::Exact(d) | Distance::LowerBound(d) => d,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, Distance::Exact(_))
    }

    pub fn exact(self) -> Result<usize> {
        match self {
            Distance::Exact(d) => Ok(d),
            Distance::LowerBound(_) => Err(Error::DistanceNotExact),
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Exact(d) => write!(f, "{d}"),
            Distance::LowerBound(d) => write!(f, ">={d}"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SingletonClass {
    Mds,
    AlmostMds,
    Neither,
}

impl fmt::Display for SingletonClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SingletonClass::Mds => "MDS",
            SingletonClass::AlmostMds => "A-MDS",
            SingletonClass::Neither => "-",
        })
    }
}

/// `MDS` iff `d = n - k + 1`, almost-MDS iff `d = n - k`.
pub fn classify(n: usize, k: usize, d: Distance) -> Result<SingletonClass> {
    let d = d.exact()?;
    Ok(if d + k == n + 1 {
        SingletonClass::Mds
    } else if d + k == n {
        SingletonClass::AlmostMds
    } else {
        SingletonClass::Neither
    })
}

#[derive(Clone)]
pub struct LinearCode {
    field: Field,
    n: usize,
    gen: Matrix,
    pivots: Vec<usize>,
    exact_distance: OnceLock<usize>,
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.n == other.n && self.gen == other.gen
    }
}

impl Eq for LinearCode {}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]_{} {:?}", self.n, self.k(), self.field.q(), self.gen)
    }
}

impl LinearCode {
    /// Row space of `rows`; the length is taken from the rows.
    pub fn from_rows(field: &Field, rows: &[Vec<FieldElement>]) -> Result<LinearCode> {
        let n = rows.first().ok_or(Error::EmptyInput)?.len();
        Self::from_rows_with_len(field, n, rows)
    }

    pub fn from_rows_with_len(field: &Field, n: usize, rows: &[Vec<FieldElement>]) -> Result<LinearCode> {
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::LengthMismatch { expected: n, got: bad.len() });
        }
        let (gen, pivots) = linalg::rref(field, rows);
        Ok(LinearCode { field: field.clone(), n, gen, pivots, exact_distance: OnceLock::new() })
    }

    pub fn whole_space(field: &Field, n: usize) -> LinearCode {
        Self::from_rows_with_len(field, n, &linalg::identity(n)).expect("square identity")
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.gen.len()
    }

    /// Generator matrix in reduced row echelon form.
    pub fn generator(&self) -> &Matrix {
        &self.gen
    }

    pub fn dual(&self) -> LinearCode {
        let h = linalg::null_space(&self.field, &self.gen, self.n);
        Self::from_rows_with_len(&self.field, self.n, &h).expect("null space rows have length n")
    }

    pub fn contains(&self, v: &[FieldElement]) -> bool {
        if v.len() != self.n {
            return false;
        }
        // reduce against the RREF rows
        let mut r = v.to_vec();
        for (row, &pc) in self.gen.iter().zip(&self.pivots) {
            let c = r[pc];
            if c != 0 {
                linalg::axpy(&self.field, &mut r, self.field.neg(c), row);
            }
        }
        r.iter().all(|&c| c == 0)
    }

    pub fn is_subcode_of(&self, other: &LinearCode) -> bool {
        self.n == other.n && self.gen.iter().all(|r| other.contains(r))
    }

    /// Image under `v -> v A`.
    pub fn times_matrix(&self, a: &[Vec<FieldElement>]) -> LinearCode {
        let rows: Matrix = self.gen.iter().map(|r| linalg::vec_mul(&self.field, r, a)).collect();
        Self::from_rows_with_len(&self.field, a.first().map_or(0, Vec::len), &rows).expect("consistent")
    }

    /// Whether the code is mapped into itself by a linear operator (checked on the basis).
    pub fn is_invariant_under(&self, op: impl Fn(&[FieldElement]) -> Vec<FieldElement>) -> bool {
        self.gen.iter().all(|r| self.contains(&op(r)))
    }

    /// `C ∩ C^perp = {0}` via invertibility of `G G^T`.
    pub fn is_lcd(&self) -> bool {
        let ggt = linalg::mat_mul(&self.field, &self.gen, &linalg::transpose(&self.gen));
        linalg::rank(&self.field, &ggt) == self.k()
    }

    /// `dim (C ∩ C^perp)` from the stacked generator matrices.
    pub fn hull_dimension(&self) -> usize {
        let dual = self.dual();
        let mut stacked = self.gen.clone();
        stacked.extend(dual.gen.iter().cloned());
        self.k() + dual.k() - linalg::rank(&self.field, &stacked)
    }

    /// `q^k * n`, saturating.
    pub fn enumeration_cost(&self) -> u128 {
        (self.field.q() as u128)
            .checked_pow(self.k() as u32)
            .and_then(|c| c.checked_mul(self.n as u128))
            .unwrap_or(u128::MAX)
    }

    /// Minimum distance: exhaustive when `q^k * n <= budget`, otherwise a
    /// lower bound from enumerating messages in order of increasing weight.
    pub fn min_distance(&self, budget: u128) -> Result<Distance> {
        if self.k() == 0 {
            return Err(Error::ZeroCode);
        }
        if let Some(&d) = self.exact_distance.get() {
            return Ok(Distance::Exact(d));
        }
        if self.enumeration_cost() <= budget {
            let d = self.min_weight_where(&|_| true).expect("nonzero code");
            let _ = self.exact_distance.set(d);
            return Ok(Distance::Exact(d));
        }
        Ok(Distance::LowerBound(self.weight_bounded_lower_bound(budget)))
    }

    /// Minimum weight over nonzero codewords satisfying `pred`, by full
    /// enumeration. `pred` must be invariant under nonzero scaling; only
    /// messages whose last nonzero symbol is 1 are visited.
    pub fn min_weight_where(&self, pred: &(dyn Fn(&[FieldElement]) -> bool + Sync)) -> Option<usize> {
        let f = &self.field;
        let q = f.q() as usize;
        let k = self.k();
        let n = self.n;
        // multiples[j][c] = c * row_j
        let multiples: Vec<Vec<Vec<FieldElement>>> = self
            .gen
            .iter()
            .map(|row| f.elements().map(|c| row.iter().map(|&x| f.mul(c, x)).collect()).collect())
            .collect();
        // digit values step through 0, 1, ..., q-1 cyclically
        let step: Vec<FieldElement> = (0..q).map(|s| f.sub(((s + 1) % q) as u32, s as u32)).collect();

        let chunks: Vec<(usize, u64)> = (0..k)
            .flat_map(|r| {
                let top = prefix_digits(q, r);
                let count = (q as u64).pow(top as u32);
                (0..count).map(move |prefix| (r, prefix))
            })
            .collect();

        chunks
            .par_iter()
            .filter_map(|&(r, prefix)| {
                let top = prefix_digits(q, r);
                let low = r - top;
                let mut word = self.gen[r].clone();
                let mut p = prefix;
                for j in low..r {
                    let c = (p % q as u64) as usize;
                    p /= q as u64;
                    linalg::axpy(f, &mut word, 1, &multiples[j][c]);
                }
                let mut best = usize::MAX;
                let mut visit = |w: &[FieldElement]| {
                    let wt = w.iter().filter(|&&c| c != 0).count();
                    if wt < best && pred(w) {
                        best = wt;
                    }
                };
                visit(&word);
                let mut digit = vec![0usize; low];
                let total = (q as u64).pow(low as u32);
                for t in 1..total {
                    let mut j = 0;
                    let mut tt = t;
                    while tt % q as u64 == 0 {
                        tt /= q as u64;
                        j += 1;
                    }
                    let delta = step[digit[j]] as usize;
                    digit[j] = (digit[j] + 1) % q;
                    for (x, &y) in word.iter_mut().zip(&multiples[j][delta]) {
                        *x = f.add(*x, y);
                    }
                    visit(&word);
                }
                (best != usize::MAX).then_some(best)
            })
            .min()
            .filter(|&w| w <= n)
    }

    fn weight_bounded_lower_bound(&self, budget: u128) -> usize {
        let f = &self.field;
        let k = self.k();
        let q = f.q() as u128;
        let n = self.n as u128;
        let mut best = usize::MAX;
        let mut spent: u128 = 0;
        let mut done_weight = 0;
        for w in 1..=k {
            let cost = binomial(k, w) * (q - 1).pow(w as u32 - 1) * n;
            if spent.saturating_add(cost) > budget {
                break;
            }
            spent += cost;
            for support in combinations(k, w) {
                // last support position carries 1, the others range over F_q^*
                let free = w - 1;
                let count = (q as u64 - 1).pow(free as u32);
                for idx in 0..count {
                    let mut word = self.gen[support[free]].clone();
                    let mut t = idx;
                    for &pos in &support[..free] {
                        let c = (t % (q as u64 - 1)) as u32 + 1;
                        t /= q as u64 - 1;
                        linalg::axpy(f, &mut word, c, &self.gen[pos]);
                    }
                    best = best.min(word.iter().filter(|&&c| c != 0).count());
                }
            }
            done_weight = w;
        }
        // codewords from messages of weight > done_weight have weight > done_weight
        best.min(done_weight + 1)
    }

    /// Weight distribution by evaluating `m G` for every message in
    /// lexicographic order.
    pub fn weight_distribution(&self, budget: u128) -> Result<Vec<u64>> {
        let cost = self.enumeration_cost();
        if cost > budget {
            return Err(Error::BudgetExceeded { needed: cost, budget });
        }
        let f = &self.field;
        let q = f.q() as u64;
        let k = self.k();
        let total = q.pow(k as u32);
        let counts = (0..total)
            .into_par_iter()
            .fold(
                || vec![0u64; self.n + 1],
                |mut acc, idx| {
                    let mut msg = Vec::with_capacity(k);
                    let mut t = idx;
                    for _ in 0..k {
                        msg.push((t % q) as u32);
                        t /= q;
                    }
                    let word = linalg::vec_mul(f, &msg, &self.gen);
                    acc[word.iter().filter(|&&c| c != 0).count()] += 1;
                    acc
                },
            )
            .reduce(
                || vec![0u64; self.n + 1],
                |a, b| a.iter().zip(&b).map(|(x, y)| x + y).collect(),
            );
        Ok(counts)
    }
}

/// Number of message digits fixed per parallel chunk.
fn prefix_digits(q: usize, r: usize) -> usize {
    let mut s = 0;
    let mut chunks = 1usize;
    while s < r && chunks < 256 {
        s += 1;
        chunks *= q;
    }
    s
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}
