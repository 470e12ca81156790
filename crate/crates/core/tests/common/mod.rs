#![allow(dead_code)]

use ncbtt_core::algebra::{Algebra, AlgebraBuilder};
use ncbtt_core::exactla::{Field, Scalar};
use ncbtt_core::hochschild::{Chain, Cochain, Mono};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn point() -> Algebra {
    AlgebraBuilder::new("point").basis("1", false).unit("1").pair("1", "1", 1).unit_products().smooth(true).build(Field::Rational).unwrap()
}

pub fn kxk() -> Algebra {
    AlgebraBuilder::new("kxk")
        .basis("1", false)
        .basis("e", false)
        .unit("1")
        .pair("1", "1", 2)
        .pair("1", "e", 1)
        .pair("e", "1", 1)
        .pair("e", "e", 1)
        .unit_products()
        .product(&["e", "e"], &[("e", 1)])
        .smooth(true)
        .build(Field::Rational)
        .unwrap()
}

pub fn m2() -> Algebra {
    AlgebraBuilder::new("m2")
        .basis("1", false)
        .basis("E11", false)
        .basis("E12", false)
        .basis("E21", false)
        .unit("1")
        .pair("1", "1", 2)
        .pair("1", "E11", 1)
        .pair("E11", "1", 1)
        .pair("E11", "E11", 1)
        .pair("E12", "E21", 1)
        .pair("E21", "E12", 1)
        .unit_products()
        .product(&["E11", "E11"], &[("E11", 1)])
        .product(&["E11", "E12"], &[("E12", 1)])
        .product(&["E12", "E21"], &[("E11", 1)])
        .product(&["E21", "E12"], &[("1", 1), ("E11", -1)])
        .product(&["E21", "E11"], &[("E21", 1)])
        .smooth(true)
        .build(Field::Rational)
        .unwrap()
}

/// M(1|1) with the supertrace; off-diagonal units are odd.
pub fn m11() -> Algebra {
    AlgebraBuilder::new("m11")
        .basis("1", false)
        .basis("E11", false)
        .basis("E12", true)
        .basis("E21", true)
        .unit("1")
        .pair("1", "E11", 1)
        .pair("E11", "1", 1)
        .pair("E11", "E11", 1)
        .pair("E12", "E21", 1)
        .pair("E21", "E12", -1)
        .unit_products()
        .product(&["E11", "E11"], &[("E11", 1)])
        .product(&["E11", "E12"], &[("E12", 1)])
        .product(&["E12", "E21"], &[("E11", 1)])
        .product(&["E21", "E12"], &[("1", 1), ("E11", -1)])
        .product(&["E21", "E11"], &[("E21", 1)])
        .build(Field::Rational)
        .unwrap()
}

pub fn cl1() -> Algebra {
    AlgebraBuilder::new("cl1")
        .basis("1", false)
        .basis("x", true)
        .unit("1")
        .pairing_odd(true)
        .pair("1", "x", 1)
        .pair("x", "1", 1)
        .unit_products()
        .product(&["x", "x"], &[("1", 1)])
        .smooth(true)
        .build(Field::Rational)
        .unwrap()
}

pub fn oddext() -> Algebra {
    AlgebraBuilder::new("oddext")
        .basis("1", false)
        .basis("e", true)
        .unit("1")
        .pairing_odd(true)
        .pair("1", "e", 1)
        .pair("e", "1", 1)
        .unit_products()
        .smooth(false)
        .build(Field::Rational)
        .unwrap()
}

pub fn dual() -> Algebra {
    AlgebraBuilder::new("dual")
        .basis("1", false)
        .basis("x", false)
        .unit("1")
        .pair("1", "x", 1)
        .pair("x", "1", 1)
        .unit_products()
        .smooth(false)
        .build(Field::Rational)
        .unwrap()
}

pub fn corpus() -> Vec<Algebra> {
    vec![point(), kxk(), m2(), cl1(), oddext(), dual()]
}

/// The corpus plus M(1|1), whose odd off-diagonal part exercises signs.
pub fn sign_zoo() -> Vec<Algebra> {
    let mut v = corpus();
    v.push(m11());
    v
}

pub fn words(a: &Algebra, n: usize) -> Vec<Vec<usize>> {
    let bar = a.bar();
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out.into_iter().flat_map(|w| bar.iter().map(move |&b| [w.clone(), vec![b]].concat())).collect();
    }
    out
}

pub fn rand_coeff(rng: &mut ChaCha8Rng) -> Scalar {
    Scalar::from(rng.gen_range(-3i64..=3))
}

pub fn rand_cochain(a: &Algebra, n: usize, odd: bool, rng: &mut ChaCha8Rng) -> Cochain {
    let mut terms = Vec::new();
    for w in words(a, n) {
        for o in 0..a.dim() {
            let m = Mono::new(w.clone(), o);
            if m.parity(a) == odd && rng.gen_bool(0.7) {
                terms.push((m, rand_coeff(rng)));
            }
        }
    }
    Cochain::from_terms(a, odd, terms).unwrap()
}

pub fn rand_chain(a: &Algebra, n: usize, odd: bool, rng: &mut ChaCha8Rng) -> Chain {
    let mut terms = Vec::new();
    for w in words(a, n) {
        for x0 in 0..a.dim() {
            let t = [vec![x0], w.clone()].concat();
            let p = t.iter().fold(false, |p, &i| p ^ a.sp(i));
            if p == odd && rng.gen_bool(0.7) {
                terms.push((t, rand_coeff(rng)));
            }
        }
    }
    Chain::from_terms(a, odd, terms).unwrap()
}

pub fn sign(odd: bool) -> Scalar {
    Scalar::sign(odd)
}
