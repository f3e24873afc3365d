mod common;

use proptest::prelude::*;

use common::is_irreducible;
use polycyclic::factor::{factor, factor_trial_division, is_squarefree};
use polycyclic::poly::{lagrange_idempotents, splits_distinct_linear};
use polycyclic::ring::tensor_idempotents;
use polycyclic::{Error, Field, Poly, ProductRing, RingElement};

fn field(q: u32) -> Field {
    Field::of_order(q).unwrap()
}

fn p(f: &Field, s: &str) -> Poly {
    Poly::parse(f, s).unwrap()
}

#[test]
fn default_extension_moduli() {
    assert_eq!(field(4).modulus(), &[1, 1, 1]);
    assert_eq!(field(8).modulus(), &[1, 1, 0, 1]);
    assert_eq!(field(9).modulus(), &[2, 2, 1]);
    // u is the class of the indeterminate; its code is p
    assert_eq!(field(4).u(), 2);
    assert_eq!(field(9).u(), 3);
}

#[test]
fn field_construction_errors() {
    assert_eq!(Field::prime(6), Err(Error::NotPrime(6)));
    assert!(matches!(Field::new(2, 2, Some(&[1, 0, 1])), Err(Error::ReducibleModulus(_))));
    assert!(Field::of_order(6).is_err());
    assert!(matches!(field(5).check(5), Err(Error::ElementOutOfRange { .. })));
    assert_eq!(field(7).inv(0), Err(Error::DivisionByZero));
}

#[test]
fn f4_arithmetic() {
    let f = field(4);
    // u^2 = u + 1
    assert_eq!(f.mul(2, 2), 3);
    assert_eq!(f.mul(2, 3), 1);
    assert_eq!(f.add(2, 3), 1);
    assert_eq!(f.order(2), Some(3));
}

#[test]
fn primitive_elements_have_full_order() {
    for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27] {
        let f = field(q);
        assert_eq!(f.order(f.primitive_element()), Some(q - 1), "F_{q}");
    }
}

#[test]
fn factor_examples() {
    let f2 = field(2);
    let fac = factor(&p(&f2, "x^7+1"), 1).unwrap();
    let factors: Vec<String> = fac.factors.iter().map(|(g, _)| g.to_human()).collect();
    assert_eq!(factors, ["x + 1", "x^3 + x^2 + 1", "x^3 + x + 1"]);
    let f5 = field(5);
    let fac = factor(&p(&f5, "x^5-1"), 1).unwrap();
    assert_eq!(fac.factors.len(), 1);
    assert_eq!(fac.factors[0], (p(&f5, "x+4"), 5));
    assert_eq!(fac.divisor_count(), 6);
    assert!(!is_squarefree(&p(&f5, "x^5-1")).unwrap());
    assert!(is_squarefree(&p(&f2, "x^7+1")).unwrap());
    assert_eq!(factor(&Poly::zero(&f2), 1), Err(Error::ZeroPolynomial));
}

#[test]
fn factorization_is_seed_independent() {
    let f9 = field(9);
    let g = p(&f9, "x^8-1");
    let a = factor(&g, 1).unwrap();
    for seed in 2..6 {
        assert_eq!(factor(&g, seed).unwrap(), a);
    }
    assert_eq!(a.factors.len(), 8);
}

#[test]
fn lagrange_and_splitting() {
    let f5 = field(5);
    let roots = splits_distinct_linear(&p(&f5, "x^4-1")).unwrap().unwrap();
    assert_eq!(roots, [1, 2, 3, 4]);
    assert_eq!(splits_distinct_linear(&p(&f5, "x^2+2")).unwrap(), None);
    let es = lagrange_idempotents(&f5, &roots).unwrap();
    for (i, e) in es.iter().enumerate() {
        for (j, &r) in roots.iter().enumerate() {
            assert_eq!(e.eval(r), (i == j) as u32);
        }
    }
    assert_eq!(lagrange_idempotents(&f5, &[1, 1]), Err(Error::DuplicateRoots));
    assert_eq!(lagrange_idempotents(&f5, &[]), Err(Error::EmptyInput));
}

#[test]
fn ring_units_and_inverse() {
    let f3 = field(3);
    let r = ProductRing::new(&f3, 2).unwrap();
    let x = RingElement::new(vec![1, 2]);
    assert!(r.is_unit(&x));
    assert_eq!(r.mul(&x, &r.inv(&x).unwrap()).unwrap(), r.one());
    let z = RingElement::new(vec![0, 2]);
    assert!(!r.is_unit(&z));
    assert_eq!(r.inv(&z), Err(Error::NotAUnit));
    assert_eq!(r.elements().len(), 9);
}

#[test]
fn idempotent_bases() {
    let f2 = field(2);
    let r4 = ProductRing::new(&f2, 4).unwrap();
    let remark: Vec<RingElement> = [[1, 1, 1, 0], [0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, 1]]
        .iter()
        .map(|c| RingElement::new(c.to_vec()))
        .collect();
    // spans F_2^4 but the products are not orthogonal
    assert!(!r4.verify_idempotent_basis(&remark));
    assert!(matches!(r4.idempotent_basis(remark), Err(Error::InvalidFactorBasis(_))));
    let std2 = ProductRing::new(&f2, 2).unwrap().standard_basis().elements;
    let t = tensor_idempotents(&f2, &[std2.clone(), std2]).unwrap();
    assert_eq!(t, r4.standard_basis());
}

fn poly_over(q: u32) -> impl Strategy<Value = Poly> {
    (prop::collection::vec(0..q, 1usize..=10), 1..q).prop_map(move |(mut c, lead)| {
        c.push(lead);
        Poly::new(&field(q), c)
    })
}

fn orders() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![2u32, 3, 4, 5, 7, 8, 9])
}

fn arb_poly() -> impl Strategy<Value = Poly> {
    orders().prop_flat_map(poly_over)
}

fn arb_pair() -> impl Strategy<Value = (Poly, Poly)> {
    orders().prop_flat_map(|q| (poly_over(q), poly_over(q)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn factor_reconstructs_and_matches_trial_division(f in arb_poly(), seed in any::<u64>()) {
        let fac = factor(&f, seed).unwrap();
        prop_assert_eq!(fac.expand(f.field()), f.clone());
        prop_assert_eq!(&fac, &factor_trial_division(&f).unwrap());
        for (g, _) in &fac.factors {
            prop_assert!(is_irreducible(g));
        }
    }

    #[test]
    fn divmod_identity((a, b) in arb_pair()) {
        let (quot, rem) = a.divmod(&b).unwrap();
        prop_assert_eq!(&(&quot * &b) + &rem, a);
        prop_assert!(rem.is_zero() || rem.deg() < b.deg());
    }

    #[test]
    fn gcd_divides_both((a, b) in arb_pair()) {
        let g = a.gcd(&b).unwrap();
        prop_assert!(g.is_monic());
        prop_assert!(g.divides(&a).unwrap() && g.divides(&b).unwrap());
    }

    #[test]
    fn parse_roundtrip(f in arb_poly()) {
        prop_assert_eq!(Poly::parse(f.field(), &f.to_human()).unwrap(), f);
    }
}
