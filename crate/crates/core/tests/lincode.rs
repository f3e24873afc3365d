mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{lc_words, weights_of};
use polycyclic::corpus::{parse_corpus, TABLE1, TABLE3};
use polycyclic::gray::gray_image;
use polycyclic::lincode::{classify, Distance, SingletonClass};
use polycyclic::linalg::{self, Matrix};
use polycyclic::{Error, Field, LinearCode};

const BUDGET: u128 = 1 << 20;

fn hamming() -> LinearCode {
    let f2 = Field::prime(2).unwrap();
    // cyclic, g = x^3 + x + 1
    let rows: Matrix = (0..4)
        .map(|s| {
            let mut r = vec![0; 7];
            for (i, c) in [1, 1, 0, 1].into_iter().enumerate() {
                r[i + s] = c;
            }
            r
        })
        .collect();
    LinearCode::from_rows(&f2, &rows).unwrap()
}

fn random_code(rng: &mut ChaCha8Rng, q: u32, k: usize, n: usize) -> LinearCode {
    let f = Field::of_order(q).unwrap();
    let rows: Matrix = (0..k).map(|_| (0..n).map(|_| rng.gen_range(0..q)).collect()).collect();
    LinearCode::from_rows(&f, &rows).unwrap()
}

fn gray(id: &str, text: &str) -> LinearCode {
    let rec = parse_corpus(text).unwrap().into_iter().find(|r| r.id == id).unwrap();
    let code = rec.code().unwrap();
    gray_image(&code, &rec.gray_spec().unwrap(), &code.ring().standard_basis())
}

#[test]
fn construction() {
    let f3 = Field::prime(3).unwrap();
    assert_eq!(LinearCode::from_rows(&f3, &[]), Err(Error::EmptyInput));
    assert_eq!(LinearCode::from_rows(&f3, &linalg::identity(4)).unwrap(), LinearCode::whole_space(&f3, 4));
    let dep = LinearCode::from_rows(&f3, &[vec![1, 2, 0], vec![2, 1, 0], vec![0, 0, 1]]).unwrap();
    assert_eq!(dep.k(), 2);
    let zero = LinearCode::from_rows(&f3, &[vec![0, 0, 0]]).unwrap();
    assert_eq!(zero.k(), 0);
    assert_eq!(zero.min_distance(BUDGET), Err(Error::ZeroCode));
}

#[test]
fn duals() {
    let h = hamming();
    let d = h.dual();
    assert_eq!((d.n(), d.k()), (7, 3));
    assert!(linalg::mat_mul(h.field(), h.generator(), &linalg::transpose(d.generator())).iter().flatten().all(|&c| c == 0));
    assert_eq!(LinearCode::whole_space(h.field(), 5).dual().k(), 0);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for q in [2, 3, 4, 5, 7, 8, 9] {
        let c = random_code(&mut rng, q, 3, 7);
        assert_eq!(c.dual().dual(), c);
        assert_eq!(c.k() + c.dual().k(), 7);
    }
}

#[test]
fn distance_examples() {
    assert_eq!(hamming().min_distance(BUDGET).unwrap(), Distance::Exact(3));
    let f7 = Field::prime(7).unwrap();
    let rep = LinearCode::from_rows(&f7, &[vec![1; 9]]).unwrap();
    assert_eq!(rep.min_distance(BUDGET).unwrap(), Distance::Exact(9));
    assert_eq!(gray("t3-4", TABLE3).min_distance(BUDGET).unwrap(), Distance::Exact(4));
}

#[test]
fn over_budget_is_a_lower_bound() {
    let h = hamming();
    let d = h.min_distance(10).unwrap();
    assert!(!d.is_exact() && d.value() <= 3 && d.value() >= 1);
    assert_eq!(d.exact(), Err(Error::DistanceNotExact));
    assert_eq!(classify(7, 4, d), Err(Error::DistanceNotExact));
    assert!(d.to_string().starts_with(">="));
}

#[test]
fn lcd_examples() {
    let f2 = Field::prime(2).unwrap();
    assert!(LinearCode::whole_space(&f2, 4).is_lcd());
    assert!(!LinearCode::from_rows(&f2, &[vec![1, 1]]).unwrap().is_lcd());
    let row24 = gray("t1-24", TABLE1);
    assert_eq!((row24.n(), row24.k()), (8, 4));
    assert!(row24.is_lcd());
    assert_eq!(row24.hull_dimension(), 0);
}

#[test]
fn lcd_agrees_with_hull() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..200 {
        let q = [2, 3, 4, 5][rng.gen_range(0..4)];
        let k = rng.gen_range(1..5);
        let c = random_code(&mut rng, q, k, 6);
        let inter = lc_words(&c, BUDGET).intersection_size(&lc_words(&c.dual(), BUDGET));
        assert_eq!(c.is_lcd(), inter == 1);
        assert_eq!(q.pow(c.hull_dimension() as u32) as usize, inter);
    }
}

#[test]
fn classification() {
    assert_eq!(classify(6, 3, Distance::Exact(4)).unwrap(), SingletonClass::Mds);
    assert_eq!(classify(8, 4, Distance::Exact(4)).unwrap(), SingletonClass::AlmostMds);
    assert_eq!(classify(12, 6, Distance::Exact(4)).unwrap(), SingletonClass::Neither);
    assert_eq!(SingletonClass::AlmostMds.to_string(), "A-MDS");
}

#[test]
fn distance_matches_weight_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..300 {
        let q = [2, 3, 4, 5, 7, 8, 9][rng.gen_range(0..7)];
        let max_k = (12.0 / (q as f64).log2()).floor() as usize;
        let k = rng.gen_range(1..=max_k.min(6));
        let n = rng.gen_range(k..k + 6);
        let c = random_code(&mut rng, q, k, n);
        if c.k() == 0 {
            continue;
        }
        let dist = c.weight_distribution(BUDGET).unwrap();
        assert_eq!(dist, weights_of(&lc_words(&c, BUDGET)));
        let d = dist.iter().skip(1).position(|&w| w > 0).unwrap() + 1;
        assert_eq!(c.min_distance(BUDGET).unwrap(), Distance::Exact(d));
        assert!(d <= n - c.k() + 1);
    }
}

#[test]
fn parity_column_never_decreases_distance() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..100 {
        let q = [2, 3, 5][rng.gen_range(0..3)];
        let c = random_code(&mut rng, q, 3, 6);
        if c.k() == 0 {
            continue;
        }
        let f = c.field().clone();
        let extended: Matrix = c
            .generator()
            .iter()
            .map(|r| {
                let mut r = r.clone();
                let s = r.iter().fold(0, |acc, &x| f.add(acc, x));
                r.push(f.neg(s));
                r
            })
            .collect();
        let e = LinearCode::from_rows(&f, &extended).unwrap();
        assert!(e.min_distance(BUDGET).unwrap().value() >= c.min_distance(BUDGET).unwrap().value());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn contains_every_combination(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_code(&mut rng, 3, 3, 6);
        let f = c.field().clone();
        let mut w = vec![0; 6];
        for r in c.generator() {
            linalg::axpy(&f, &mut w, rng.gen_range(0..3), r);
        }
        prop_assert!(c.contains(&w));
        prop_assert!(c.is_subcode_of(&LinearCode::whole_space(&f, 6)));
    }
}
