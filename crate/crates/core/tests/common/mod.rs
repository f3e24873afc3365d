#![allow(dead_code)]

use std::collections::HashSet;

use polycyclic::code::{enumerate_codes, flatten, unflatten, PolycyclicCode, ShiftSpec};
use polycyclic::duality::bform_dual_basis;
use polycyclic::linalg::{self, Matrix};
use polycyclic::words::{decode, CodewordSet};
use polycyclic::{Field, LinearCode, Poly, RingVector};

pub struct Config {
    pub field: Field,
    pub n: usize,
    pub a: Vec<Poly>,
}

impl Config {
    pub fn new(q: u32, n: usize, a: &[&str]) -> Config {
        let field = Field::of_order(q).unwrap();
        let a = a.iter().map(|s| Poly::parse(&field, s).unwrap()).collect();
        Config { field, n, a }
    }

    pub fn l(&self) -> usize {
        self.a.len()
    }

    pub fn ambient(&self) -> u128 {
        (self.field.q() as u128).pow((self.n * self.l()) as u32)
    }

    pub fn label(&self) -> String {
        let a: Vec<String> = self.a.iter().map(Poly::to_human).collect();
        format!("F_{} l={} n={} a=({})", self.field.q(), self.l(), self.n, a.join(","))
    }

    pub fn codes(&self) -> Vec<PolycyclicCode> {
        enumerate_codes(&self.field, self.n, &self.a).unwrap().collect()
    }

    pub fn shift(&self) -> ShiftSpec {
        ShiftSpec::from_components(&self.a, self.n)
    }
}

/// Configurations with `q^{nl} <= 2^16` for exhaustive duality checks.
pub fn small_configs() -> Vec<Config> {
    vec![
        Config::new(2, 4, &["1", "1"]),
        Config::new(2, 7, &["1", "1"]),
        Config::new(2, 8, &["1", "1"]),
        Config::new(2, 5, &["1", "1", "1"]),
        Config::new(2, 6, &["x^5+x^2+1", "x^5+x^2+1"]),
        Config::new(3, 4, &["1", "1"]),
        Config::new(3, 3, &["1", "2"]),
        Config::new(3, 5, &["1", "1"]),
        Config::new(3, 9, &["2"]),
        Config::new(5, 3, &["1", "1"]),
        Config::new(5, 5, &["1"]),
        Config::new(7, 2, &["1", "1"]),
        Config::new(4, 4, &["1", "1"]),
        Config::new(3, 4, &["1", "2"]),
        Config::new(2, 6, &["x+1", "x^3+1"]),
    ]
}

/// Ideal generated by `v`: the span of `eps_i x^j v`.
fn principal_ideal(s: &ShiftSpec, field: &Field, v: &RingVector) -> Matrix {
    let l = s.l();
    let mut rows = Vec::new();
    let mut w = v.clone();
    for _ in 0..s.n() {
        let flat = flatten(&w);
        for i in 0..l {
            rows.push(flat.iter().enumerate().map(|(t, &c)| if t % l == i { c } else { 0 }).collect());
        }
        w = s.poly_shift(&w);
    }
    linalg::rref(field, &rows).0
}

/// Number of ideals, counted as distinct principal ideals `<v>` over the
/// whole ambient space (every ideal of `F_q^l[x]/<x^n - a(x)>` is principal).
pub fn count_ideals_brute(cfg: &Config) -> usize {
    let s = cfg.shift();
    let (q, len) = (cfg.field.q(), cfg.n * cfg.l());
    let mut seen: HashSet<Matrix> = HashSet::new();
    for key in 0..cfg.ambient() as u64 {
        let v = unflatten(&decode(key, q, len), cfg.l());
        seen.insert(principal_ideal(&s, &cfg.field, &v));
    }
    seen.len()
}

pub struct BruteCounts {
    pub codes: usize,
    pub self_orthogonal: usize,
    pub self_dual: usize,
    pub lcd: usize,
}

/// Counts from codeword sets: `C ⊆ Ann(C)`, `C = Ann(C)`, `C ∩ Ann(C) = {0}`.
pub fn brute_counts(cfg: &Config, budget: u128) -> BruteCounts {
    let mut sets = HashSet::new();
    let mut c = BruteCounts { codes: 0, self_orthogonal: 0, self_dual: 0, lcd: 0 };
    for code in cfg.codes() {
        let words = code.codewords(budget).unwrap();
        let ann = code.ann_brute(budget).unwrap();
        sets.insert(words.keys().to_vec());
        c.codes += 1;
        c.self_orthogonal += words.is_subset(&ann) as usize;
        c.self_dual += (words == ann) as usize;
        c.lcd += (words.intersection_size(&ann) == 1) as usize;
    }
    assert_eq!(sets.len(), c.codes, "enumerated codes are not distinct");
    c
}

/// Same counts through linear algebra over the bilinear-form kernel, for
/// ambients too large to enumerate.
pub fn linear_counts(cfg: &Config) -> BruteCounts {
    let mut gens = HashSet::new();
    let mut c = BruteCounts { codes: 0, self_orthogonal: 0, self_dual: 0, lcd: 0 };
    let len = cfg.n * cfg.l();
    for code in cfg.codes() {
        let lc = LinearCode::from_rows_with_len(&cfg.field, len, &code.flat_basis()).unwrap();
        let dual = LinearCode::from_rows_with_len(&cfg.field, len, &bform_dual_basis(&code)).unwrap();
        gens.insert(lc.generator().clone());
        c.codes += 1;
        c.self_orthogonal += lc.is_subcode_of(&dual) as usize;
        c.self_dual += (lc == dual) as usize;
        let mut stacked = lc.generator().clone();
        stacked.extend(dual.generator().iter().cloned());
        c.lcd += (linalg::rank(&cfg.field, &stacked) == lc.k() + dual.k()) as usize;
    }
    assert_eq!(gens.len(), c.codes, "enumerated codes are not distinct");
    c
}

/// Euclidean dual of a codeword set by exhaustive search.
pub fn euclidean_dual_brute(field: &Field, words: &CodewordSet, budget: u128) -> CodewordSet {
    let all: Vec<Vec<u32>> = words.iter().collect();
    CodewordSet::filter_ambient(field, words.vector_len(), budget, |w| {
        all.iter().all(|c| linalg::dot(field, w, c) == 0)
    })
    .unwrap()
}

/// Weight distribution by walking the codeword set.
pub fn weights_of(words: &CodewordSet) -> Vec<u64> {
    words.weight_distribution()
}

pub fn lc_words(c: &LinearCode, budget: u128) -> CodewordSet {
    CodewordSet::span(c.field(), c.generator(), c.n(), budget).unwrap()
}

/// The displayed coordinate formula for `T`, with the first block read as
/// `r_{n,i} a_{1,i}`.
pub fn t_formula(field: &Field, s: &ShiftSpec, r: &[u32]) -> Vec<u32> {
    let (n, l) = (s.n(), s.l());
    let mut out = vec![0; n * l];
    for t in 0..n {
        for i in 0..l {
            let prev = if t > 0 { r[(t - 1) * l + i] } else { 0 };
            let carry = field.mul(r[(n - 1) * l + i], s.a_vec.entries[t].comps[i]);
            out[t * l + i] = field.add(prev, carry);
        }
    }
    out
}

/// The displayed formula for `T~`: drop the first block, append
/// `(r^1 . a^(1), ..., r^l . a^(l))`.
pub fn t_seq_formula(field: &Field, s: &ShiftSpec, r: &[u32]) -> Vec<u32> {
    let (n, l) = (s.n(), s.l());
    let mut out = r[l..].to_vec();
    for i in 0..l {
        let dot = (0..n).fold(0, |acc, t| field.add(acc, field.mul(r[t * l + i], s.a_vec.entries[t].comps[i])));
        out.push(dot);
    }
    out
}

/// Monic irreducibility by Rabin's test.
pub fn is_irreducible(f: &Poly) -> bool {
    let field = f.field();
    let d = f.deg();
    if d == 0 {
        return false;
    }
    let q = field.q() as u64;
    let x = Poly::x(field);
    let frob = |k: usize| x.pow_mod(q.pow(k as u32), f).unwrap();
    if frob(d) != x.rem(f).unwrap() {
        return false;
    }
    let primes: Vec<usize> = (2..=d).filter(|&r| d % r == 0 && (2..r).all(|s| r % s != 0)).collect();
    primes.iter().all(|&r| (&frob(d / r) - &x).gcd(f).unwrap().is_one())
}
