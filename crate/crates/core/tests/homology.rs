mod common;

use common::*;
use ncbtt_core::algebra::Algebra;
use ncbtt_core::exactla::Scalar;
use ncbtt_core::homology::*;
use num_traits::{One, Zero};

type Q = num_rational::BigRational;

fn dense_rank(mut m: Vec<Vec<Q>>) -> usize {
    let mut r = 0;
    let cols = m.first().map_or(0, |row| row.len());
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let piv = m[r][c].clone();
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = &m[i][c] / &piv;
                for k in c..cols {
                    let x = &f * &m[r][k];
                    m[i][k] -= x;
                }
            }
        }
        r += 1;
    }
    r
}

/// Classical normalized Hochschild differential for an ungraded algebra,
/// written straight from the product table: rows (a_1..a_{n+1}, out),
/// columns (a_1..a_n, out).
fn classical_delta(a: &Algebra, n: usize) -> Vec<Vec<Q>> {
    let d = a.dim();
    let src = words(a, n);
    let dst = words(a, n + 1);
    let col = |w: &[usize], o: usize| src.iter().position(|x| x == w).unwrap() * d + o;
    let mut m = vec![vec![Q::zero(); src.len() * d]; dst.len() * d];
    let prod = |x: usize, y: usize| -> Vec<(usize, Q)> {
        a.product(&[x, y]).into_iter().flatten().map(|(o, c)| (*o, c.as_rational().unwrap().clone())).collect()
    };
    for (ri, w) in dst.iter().enumerate() {
        for o in 0..d {
            let row = &mut m[ri * d + o];
            // a_1 φ(a_2..)
            for p in 0..d {
                for (q, c) in prod(w[0], p) {
                    if q == o {
                        row[col(&w[1..], p)] += c;
                    }
                }
            }
            for i in 0..n {
                let s = if (i + 1) % 2 == 0 { Q::one() } else { -Q::one() };
                for (q, c) in prod(w[i], w[i + 1]) {
                    if q == a.unit() {
                        continue;
                    }
                    let mut v = w[..i].to_vec();
                    v.push(q);
                    v.extend_from_slice(&w[i + 2..]);
                    row[col(&v, o)] += &s * c;
                }
            }
            let s = if (n + 1) % 2 == 0 { Q::one() } else { -Q::one() };
            for p in 0..d {
                for (q, c) in prod(p, w[n]) {
                    if q == o {
                        row[col(&w[..n], p)] += &s * c;
                    }
                }
            }
        }
    }
    m
}

fn dense_hh(a: &Algebra, n: usize) -> usize {
    let cols = words(a, n).len() * a.dim();
    let z = cols - dense_rank(classical_delta(a, n));
    let b = if n == 0 { 0 } else { dense_rank(classical_delta(a, n - 1)) };
    z - b
}

fn dims(a: &Algebra, w: usize) -> Vec<usize> {
    hh_all(a, w).unwrap().iter().map(|r| r.dim).collect()
}

#[test]
fn hh_matches_dense_oracle_on_even_algebras() {
    for (a, w) in [(point(), 5), (kxk(), 5), (dual(), 5), (m2(), 3)] {
        let got = dims(&a, w);
        let want: Vec<usize> = (0..w).map(|n| dense_hh(&a, n)).collect();
        assert_eq!(got, want, "{}", a.name());
    }
}

#[test]
fn hh_golden_values() {
    assert_eq!(dims(&point(), 6), [1, 0, 0, 0, 0, 0]);
    assert_eq!(dims(&kxk(), 6), [2, 0, 0, 0, 0, 0]);
    assert_eq!(dims(&dual(), 6), [2, 1, 1, 1, 1, 1]);
    assert_eq!(dims(&cl1(), 6), [1, 0, 0, 0, 0, 0]);
    assert_eq!(dims(&oddext(), 6), [2, 2, 2, 2, 2, 2]);
    assert_eq!(dims(&m2(), 4), [1, 0, 0, 0]);
}

#[test]
fn representatives_are_independent_cocycles() {
    for a in corpus() {
        for r in hh_all(&a, 3).unwrap() {
            assert_eq!(r.representatives.len(), r.dim);
            assert_eq!(r.dim, r.dim_even + r.dim_odd);
            for c in &r.representatives {
                let z = ncbtt_core::hochschild::hoch_diff(&a, c).unwrap();
                assert!(z.is_zero(), "{} weight {}", a.name(), r.weight);
            }
        }
    }
}

#[test]
fn window_and_grading_are_enforced() {
    assert_eq!(hh(&kxk(), 3, 3), Err(HomologyError::WindowTooSmall { needed: 4, max_weight: 3 }));
    let mut b = cl1().to_builder();
    b.k_max = None;
    b.products.push((vec!["x".into(); 3], vec![("1".into(), Scalar::one())]));
    let a = b.build(ncbtt_core::exactla::Field::Rational).unwrap();
    assert!(matches!(hh(&a, 0, 4), Err(HomologyError::NotWeightGraded)));
}

fn h_row(v: &DegenerationVerdict) -> Vec<usize> {
    v.rows.iter().map(|r| r.h.0 + r.h.1).collect()
}

#[test]
fn degeneration_on_smooth_examples() {
    for (a, one) in [(kxk(), 2), (cl1(), 1)] {
        let v = degeneration_check(&a, 3, 6, Variant::Normalized).unwrap();
        assert!(v.iter().all(|x| x.pass), "{}", a.name());
        assert_eq!(h_row(&v[1]), [one, 0, one, 0, 0, 0]);
        assert_eq!(h_row(&v[2]), [one, 0, one, 0, one, 0]);
    }
    let v = degeneration_check(&point(), 2, 5, Variant::Normalized).unwrap();
    assert!(v.iter().all(|x| x.pass));
    let v = degeneration_check(&m2(), 2, 4, Variant::Normalized).unwrap();
    assert!(v.iter().all(|x| x.pass));
}

#[test]
fn degeneration_fails_on_dual_numbers_and_odd_extension() {
    let v = degeneration_check(&dual(), 2, 6, Variant::Normalized).unwrap();
    assert!(v[0].pass);
    assert!(!v[1].pass);
    assert_eq!(h_row(&v[1]), [2, 0, 2, 1, 1, 1]);
    let e1: Vec<usize> = v[1].rows.iter().map(|r| r.e1.0 + r.e1.1).collect();
    assert_eq!(e1, [2, 1, 3, 2, 2, 2]);
    assert_eq!(v[1].witness.map(|w| w.0), Some(1));
    let v = degeneration_check(&oddext(), 2, 5, Variant::Normalized).unwrap();
    assert!(!v[1].pass);
}

#[test]
fn u_powers_and_u_representatives() {
    let r = u_homology(&kxk(), 3, 4, 5, Variant::Normalized).unwrap();
    assert_eq!(r.report.dim, 2);
    assert_eq!(r.u_powers, [2, 2, 2]);
    for c in &r.report.representatives {
        assert!(c.differential(&kxk()).unwrap().is_zero());
    }
    let r = u_homology(&kxk(), 3, 2, 5, Variant::Normalized).unwrap();
    assert_eq!(r.u_powers, [2, 2, 0]);
    let r = u_homology(&kxk(), 2, 4, 5, Variant::Normalized).unwrap();
    assert_eq!(r.report.dim, 0);
    assert_eq!(r.u_powers, [0, 0]);
}

#[test]
fn u_matrix_squares_to_zero() {
    for a in [dual(), cl1(), oddext()] {
        for total in 0..3 {
            let (d0, _) = u_matrix(&a, 2, total, Variant::Normalized).unwrap();
            let (d1, _) = u_matrix(&a, 2, total + 1, Variant::Normalized).unwrap();
            for c in d0.columns() {
                assert!(d1.mul_vec(&c).is_empty(), "{} total {}", a.name(), total);
            }
        }
    }
}

#[test]
fn strict_cyclic_matches_strict_u_complex() {
    let golden: [(Algebra, [usize; 5]); 5] = [
        (point(), [0, 0, 0, 0, 0]),
        (kxk(), [1, 0, 1, 0, 1]),
        (cl1(), [1, 1, 1, 1, 1]),
        (dual(), [1, 0, 1, 0, 1]),
        (oddext(), [1, 1, 1, 1, 1]),
    ];
    for (a, want) in golden {
        let rows = iota_comparison(&a, 3, 5).unwrap();
        let got: Vec<usize> = rows.iter().map(|r| r.cyclic).collect();
        assert_eq!(got, want, "{}", a.name());
        assert!(rows.iter().all(|r| r.agrees()), "{}", a.name());
        assert!(rows.iter().all(|r| r.u_complex.is_some()));
    }
    let rows = iota_comparison(&kxk(), 2, 5).unwrap();
    assert_eq!(rows[3].u_complex, None);
}

#[test]
fn tangent_map_onto_for_smooth_examples() {
    for a in [kxk(), cl1(), point()] {
        let t = tangent_surjectivity(&a, 4, Variant::Normalized).unwrap();
        assert!(t.iter().all(|(_, s)| *s), "{}", a.name());
    }
}

#[test]
fn bv_defect_is_exact_on_cocycles() {
    for a in [dual(), oddext(), cl1(), kxk()] {
        let hs = hh_all(&a, 3).unwrap();
        let reps: Vec<_> = hs.iter().flat_map(|r| r.representatives.clone()).collect();
        for x in &reps {
            for y in &reps {
                match bv_defect(&a, x, y, 6).unwrap() {
                    BvOutcome::Primitive(g) => {
                        let d = bv_defect_cochain(&a, x, y).unwrap();
                        let dg = ncbtt_core::hochschild::hoch_diff(&a, &g).unwrap();
                        assert_eq!(dg, d, "{}", a.name());
                    }
                    BvOutcome::Certificate { .. } => panic!("{}: defect not exact", a.name()),
                }
            }
        }
    }
}

#[test]
fn exactness_certificate_separates() {
    let a = dual();
    let x = hh(&a, 1, 3).unwrap().representatives[0].clone();
    match exactness(&a, x.clone()).unwrap() {
        BvOutcome::Primitive(_) => panic!("a class representative is not exact"),
        BvOutcome::Certificate { weight, functional, .. } => {
            assert_eq!(weight, 1);
            let f = |c: &ncbtt_core::hochschild::Cochain| {
                functional.iter().fold(Scalar::zero(), |acc, (m, v)| acc + c.coeff(m) * v.clone())
            };
            assert!(!f(&x).is_zero());
            for n in 0..a.dim() {
                let e = ncbtt_core::hochschild::Cochain::element(&a, n);
                assert!(f(&ncbtt_core::hochschild::hoch_diff(&a, &e).unwrap()).is_zero());
            }
        }
    }
    let xi = a.index_of("x").unwrap();
    let e = ncbtt_core::hochschild::Cochain::mono(&a, ncbtt_core::hochschild::Mono::new(vec![xi], a.unit()));
    assert!(matches!(bv_defect(&a, &e, &x, 4), Err(HomologyError::NotCocycle("alpha"))));
}
