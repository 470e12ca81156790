//! Operators defined through the pairing: Δ, cyclicity and the cyclic
//! projection. A weight-n cochain φ is identified with its cyclic form
//! F_φ(x₀, x₁…x_n) = ⟨φ, x₀|x₁…x_n⟩ on all of A^{n+1}.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use super::{Cochain, HochError, Mono};
use crate::algebra::Algebra;
use crate::exactla::Scalar;

/// F_φ(t) for a full tuple `t = (x₀, …, x_n)`.
pub(crate) fn pair_mono(a: &Algebra, phi: &Cochain, t: &[usize]) -> Scalar {
    let mut s = Scalar::zero();
    let mut key = Mono::new(t[1..].to_vec(), 0);
    for o in 0..a.dim() {
        let w = a.w(t[0], o);
        if w.is_zero() {
            continue;
        }
        key = Mono::new(key.inputs().to_vec(), o);
        if let Some(f) = phi.get(&key) {
            s += &(w * f);
        }
    }
    s.signed(phi.is_odd() && a.sp(t[0]))
}

/// The nonzero values of F_φ on the weight-`n` component.
pub(crate) fn cyclic_form(a: &Algebra, phi: &Cochain, n: usize) -> BTreeMap<Vec<usize>, Scalar> {
    let mut tuples = BTreeSet::new();
    for (m, _) in phi.terms().filter(|(m, _)| m.weight() == n) {
        for x0 in 0..a.dim() {
            if !a.w(x0, m.output()).is_zero() {
                let mut t = alloc::vec![x0];
                t.extend_from_slice(m.inputs());
                tuples.insert(t);
            }
        }
    }
    tuples
        .into_iter()
        .filter_map(|t| {
            let v = pair_mono(a, phi, &t);
            (!v.is_zero()).then_some((t, v))
        })
        .collect()
}

/// Sign relating F(x₀…x_n) to F(x_n, x₀…x_{n−1}) for a cyclic form.
fn rot_sign(a: &Algebra, t: &[usize]) -> bool {
    let (last, rest) = t.split_last().expect("nonempty tuple");
    a.sp(*last) && rest.iter().fold(false, |p, &i| p ^ a.sp(i))
}

fn rotate_right(t: &[usize]) -> Vec<usize> {
    let mut r = Vec::with_capacity(t.len());
    r.push(t[t.len() - 1]);
    r.extend_from_slice(&t[..t.len() - 1]);
    r
}

/// The weight-`n`, parity-`odd` cochain whose form takes the values
/// `val(x₀, I)` on the words `I` listed (and zero elsewhere).
pub(crate) fn from_form(
    a: &Algebra,
    odd: bool,
    words: &BTreeSet<Vec<usize>>,
    mut val: impl FnMut(usize, &[usize]) -> Scalar,
) -> Result<Cochain, HochError> {
    let winv = a.winv().ok_or(HochError::DegeneratePairing)?;
    let mut out = Cochain::zero(a, odd);
    for w in words {
        let vals: Vec<Scalar> = (0..a.dim()).map(|x0| val(x0, w).signed(odd && a.sp(x0))).collect();
        for o in 0..a.dim() {
            let mut s = Scalar::zero();
            for (x0, v) in vals.iter().enumerate() {
                if !v.is_zero() && !winv[o][x0].is_zero() {
                    s += &(&winv[o][x0] * v);
                }
            }
            out.add_term(Mono::new(w.clone(), o), &s);
        }
    }
    Ok(out)
}

/// Δ, the dual of Connes' B: ⟨Δφ, c⟩ = (−1)^{|φ|+1}⟨φ, Bc⟩ for all chains c.
/// Lowers weight by one and kills weight 0.
pub fn delta(a: &Algebra, phi: &Cochain) -> Result<Cochain, HochError> {
    delta_part(a, phi, |_, _| true)
}

/// The part of Δφ coming from the B-terms `1|x_i…|x_0…x_{i−1}` with
/// `keep(i, n)`, n the weight of the component of φ.
pub(crate) fn delta_part(a: &Algebra, phi: &Cochain, keep: impl Fn(usize, usize) -> bool) -> Result<Cochain, HochError> {
    if phi.tag() != a.tag() {
        return Err(HochError::AlgebraMismatch);
    }
    let unit = a.unit();
    let sign = !phi.is_odd();
    let mut out = Cochain::zero(a, !phi.is_odd());
    for n in phi.weights() {
        if n == 0 {
            continue;
        }
        // ⟨φ, B(x₀|I)⟩ can only be nonzero when (x₀, I) rotates onto the
        // inputs of a term whose output pairs with the unit.
        let mut words = BTreeSet::new();
        for (m, _) in phi.terms().filter(|(m, _)| m.weight() == n) {
            if a.w(unit, m.output()).is_zero() {
                continue;
            }
            let ins = m.inputs();
            for i in 0..n {
                words.insert([&ins[i + 1..], &ins[..i]].concat());
            }
        }
        let part = from_form(a, !phi.is_odd(), &words, |x0, w| {
            if x0 == unit {
                return Scalar::zero();
            }
            let mut t = alloc::vec![x0];
            t.extend_from_slice(w);
            let mut s = Scalar::zero();
            for i in (0..t.len()).filter(|&i| keep(i, n)) {
                let flip = t[..i].iter().fold(false, |p, &x| p ^ a.sp(x)) && t[i..].iter().fold(false, |p, &x| p ^ a.sp(x));
                let mut bt = alloc::vec![unit];
                bt.extend_from_slice(&t[i..]);
                bt.extend_from_slice(&t[..i]);
                s += &pair_mono(a, phi, &bt).signed(flip);
            }
            s.signed(sign)
        })?;
        out = out.add(&part)?;
    }
    Ok(out)
}

/// Whether F_φ(x₀…x_n) = ± F_φ(x_n, x₀…x_{n−1}) for every tuple of basis
/// elements of A (units included), in each weight.
pub fn is_cyclic(a: &Algebra, phi: &Cochain) -> Result<bool, HochError> {
    if phi.tag() != a.tag() {
        return Err(HochError::AlgebraMismatch);
    }
    for n in phi.weights() {
        let form = cyclic_form(a, phi, n);
        let mut check: BTreeSet<Vec<usize>> = form.keys().cloned().collect();
        for t in form.keys() {
            let mut l = t[1..].to_vec();
            l.push(t[0]);
            check.insert(l);
        }
        let get = |t: &Vec<usize>| form.get(t).cloned().unwrap_or_else(Scalar::zero);
        for t in &check {
            if get(t) != get(&rotate_right(t)).signed(rot_sign(a, t)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Averages the form of φ over the signed cyclic rotations, counting only
/// unit-free rotations in positive weight. Idempotent, with image C^λ.
pub fn cyclic_project(a: &Algebra, phi: &Cochain) -> Result<Cochain, HochError> {
    if phi.tag() != a.tag() {
        return Err(HochError::AlgebraMismatch);
    }
    let unit = a.unit();
    let mut out = Cochain::zero(a, phi.is_odd());
    for n in phi.weights() {
        if !a.field().inverts(n as u64 + 1) {
            return Err(HochError::NonInvertibleAverage { weight: n, characteristic: a.field().characteristic() });
        }
        let inv = a.field().from_i64(n as i64 + 1).inv().expect("invertible");
        let form = cyclic_form(a, phi, n);
        let mut words = BTreeSet::new();
        for s in form.keys() {
            let mut t = s.clone();
            for _ in 0..=n {
                if n == 0 || !t[1..].contains(&unit) {
                    words.insert(t[1..].to_vec());
                }
                t = rotate_right(&t);
            }
        }
        let part = from_form(a, phi.is_odd(), &words, |x0, w| {
            let mut cur = alloc::vec![x0];
            cur.extend_from_slice(w);
            let mut total = Scalar::zero();
            let mut flip = false;
            for _ in 0..=n {
                if n == 0 || !cur.contains(&unit) {
                    if let Some(v) = form.get(&cur) {
                        total += &v.clone().signed(flip);
                    }
                }
                flip ^= rot_sign(a, &cur);
                cur = rotate_right(&cur);
            }
            &total * &inv
        })?;
        out = out.add(&part)?;
    }
    Ok(out)
}
