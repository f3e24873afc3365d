mod common;

use common::{small_configs, Config};
use polycyclic::corpus::{parse_corpus, TABLE4};
use polycyclic::gray::gray_image;
use polycyclic::quantum::{css, css_of_gray_pair, quantum_from_polycyclic};
use polycyclic::{Error, Field, GraySpec, LinearCode, Poly, PolycyclicCode};

const BUDGET: u128 = 1 << 28;

fn p(f: &Field, s: &str) -> Poly {
    Poly::parse(f, s).unwrap()
}

#[test]
fn worked_example() {
    let f5 = Field::prime(5).unwrap();
    let one = Poly::one(&f5);
    let code = PolycyclicCode::new(&f5, 2, 5, &[one.clone(), one], &[p(&f5, "x^2+3x+1"), p(&f5, "x+4")]).unwrap();
    let gs = GraySpec::new(&f5, vec![vec![1, 4], vec![4, 4]]).unwrap();
    let img = gray_image(&code, &gs, &code.ring().standard_basis());
    assert_eq!((img.n(), img.k(), img.min_distance(BUDGET).unwrap().value()), (10, 7, 3));
    let q = quantum_from_polycyclic(&code, &gs, BUDGET).unwrap();
    assert_eq!((q.n, q.k, q.d_lb, q.exact, q.lambda), (10, 4, 3, false, Some(2)));
    assert_eq!(q.to_string(), "[[10,4,>=3]] lambda=2");
}

#[test]
fn table4_row2_inputs() {
    let rec = parse_corpus(TABLE4).unwrap().into_iter().find(|r| r.id == "t4-2").unwrap();
    let code = rec.code().unwrap();
    let q = quantum_from_polycyclic(&code, &rec.gray_spec().unwrap(), 1 << 36).unwrap();
    assert_eq!([q.n, q.k, q.d_lb], rec.expect.quantum.unwrap());
}

#[test]
fn preconditions() {
    let f3 = Field::prime(3).unwrap();
    let one = Poly::one(&f3);
    let a = [one.clone(), one.clone()];
    // the whole space has C° = 0, which is contained; the zero code is not dual-containing
    let zero = PolycyclicCode::whole_space(&f3, 3, &a).unwrap().ann_dual();
    let gs = GraySpec::identity(&f3, 2);
    assert_eq!(quantum_from_polycyclic(&zero, &gs, BUDGET), Err(Error::NotDualContaining));
    let whole = PolycyclicCode::whole_space(&f3, 3, &a).unwrap();
    let skew = GraySpec::new(&f3, vec![vec![1, 1], vec![0, 1]]).unwrap();
    assert_eq!(quantum_from_polycyclic(&whole, &skew, BUDGET), Err(Error::MNotScaledOrthogonal));
    let f2 = Field::prime(2).unwrap();
    let other = LinearCode::whole_space(&f2, 3);
    assert_eq!(css(&LinearCode::whole_space(&f3, 3), &other, BUDGET), Err(Error::FieldMismatch));
    let short = LinearCode::whole_space(&f3, 2);
    assert!(matches!(css(&LinearCode::whole_space(&f3, 3), &short, BUDGET), Err(Error::LengthMismatch { .. })));
}

#[test]
fn css_dimension_matches_pipeline() {
    let specs = [
        (Config::new(5, 3, &["1", "1"]), vec![vec![1, 4], vec![4, 4]]),
        (Config::new(3, 4, &["1", "1"]), vec![vec![1, 1], vec![1, 2]]),
        (Config::new(5, 5, &["1", "1"]), vec![vec![1, 4], vec![4, 4]]),
        (Config::new(2, 7, &["1", "1"]), vec![vec![1, 0], vec![0, 1]]),
    ];
    let mut checked = 0;
    for (cfg, m) in specs {
        let gs = GraySpec::new(&cfg.field, m).unwrap();
        for code in cfg.codes().into_iter().filter(|c| c.is_ann_dual_containing() && c.dimension() > 0) {
            let q = quantum_from_polycyclic(&code, &gs, BUDGET).unwrap();
            let pair = css_of_gray_pair(&code, &gs, BUDGET).unwrap();
            assert_eq!((pair.n, pair.k), (q.n, q.k), "{}", cfg.label());
            if pair.exact && pair.k > 0 {
                assert!(pair.d_lb >= q.d_lb, "{}", cfg.label());
            }
            checked += 1;
        }
    }
    assert!(checked >= 10);
}

#[test]
fn dual_containing_paths_agree() {
    for cfg in small_configs().into_iter().filter(|c| c.ambient() <= 1 << 12) {
        for code in cfg.codes() {
            let by_division = code.gen_comps().iter().zip(code.check_comps()).all(|(g, h)| g.divides(h).unwrap());
            let dual = code.ann_dual();
            assert_eq!(code.is_ann_dual_containing(), by_division);
            assert_eq!(code.is_ann_dual_containing(), code.contains(&dual).unwrap());
        }
    }
}
