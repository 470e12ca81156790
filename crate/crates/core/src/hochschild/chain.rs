use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::{Cochain, HochError, Mono};
use crate::algebra::Algebra;
use crate::exactla::Scalar;

/// A homogeneous element of the normalized Hochschild chain complex: a
/// combination of words `x₀|x₁…x_n` with x₀ ∈ A and x_i ∈ Ā.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    tag: u64,
    odd: bool,
    terms: BTreeMap<Vec<usize>, Scalar>,
}

fn word_parity(a: &Algebra, t: &[usize]) -> bool {
    t.iter().fold(false, |p, &i| p ^ a.sp(i))
}

impl Chain {
    pub fn zero(a: &Algebra, odd: bool) -> Chain {
        Chain { tag: a.tag(), odd, terms: BTreeMap::new() }
    }

    pub fn from_terms<I>(a: &Algebra, odd: bool, terms: I) -> Result<Chain, HochError>
    where
        I: IntoIterator<Item = (Vec<usize>, Scalar)>,
    {
        let mut c = Chain::zero(a, odd);
        for (t, v) in terms {
            if t.is_empty() || t.iter().any(|&i| i >= a.dim()) || t[1..].contains(&a.unit()) {
                return Err(HochError::BadMonomial(format!("{:?}", t)));
            }
            if v.is_zero() {
                continue;
            }
            if word_parity(a, &t) != odd {
                return Err(HochError::ParityMismatch);
            }
            c.add_term(t, &a.field().coerce(&v));
        }
        Ok(c)
    }

    /// The single word `t` with coefficient one.
    pub fn word(a: &Algebra, t: Vec<usize>) -> Result<Chain, HochError> {
        let odd = t.iter().fold(false, |p, &i| p ^ a.sp(i));
        Chain::from_terms(a, odd, [(t, Scalar::one())])
    }

    pub fn is_odd(&self) -> bool {
        self.odd
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, t: &[usize]) -> Scalar {
        self.terms.get(t).cloned().unwrap_or_else(Scalar::zero)
    }

    fn add_term(&mut self, t: Vec<usize>, v: &Scalar) {
        if v.is_zero() {
            return;
        }
        let e = self.terms.entry(t.clone()).or_insert_with(Scalar::zero);
        *e += v;
        if e.is_zero() {
            self.terms.remove(&t);
        }
    }

    pub fn add_scaled(&self, c: &Scalar, other: &Chain) -> Result<Chain, HochError> {
        if self.tag != other.tag {
            return Err(HochError::AlgebraMismatch);
        }
        if self.odd != other.odd && !self.is_zero() && !other.is_zero() {
            return Err(HochError::ParityMismatch);
        }
        let mut out = self.clone();
        if out.is_zero() {
            out.odd = other.odd;
        }
        for (t, v) in &other.terms {
            out.add_term(t.clone(), &(c * v));
        }
        Ok(out)
    }
}

fn structure_table(a: &Algebra) -> BTreeMap<&[usize], Vec<(usize, &Scalar)>> {
    let mut table: BTreeMap<&[usize], Vec<(usize, &Scalar)>> = BTreeMap::new();
    for (m, v) in a.structure().terms() {
        table.entry(m.inputs()).or_default().push((m.output(), v));
    }
    table
}

/// The Hochschild boundary b: every structure map b_k applied to each
/// cyclically consecutive window of k letters, with Koszul signs for the
/// letters passed (or rotated past, for windows through x₀). Words with the
/// unit in a reduced slot are dropped.
pub fn hoch_boundary(a: &Algebra, c: &Chain) -> Result<Chain, HochError> {
    if c.tag != a.tag() {
        return Err(HochError::AlgebraMismatch);
    }
    let table = structure_table(a);
    let arities: Vec<usize> = a.arities().copied().collect();
    let unit = a.unit();
    let mut out = Chain { tag: c.tag, odd: !c.odd, terms: BTreeMap::new() };
    for (t, v) in &c.terms {
        let len = t.len();
        let sp: Vec<bool> = t.iter().map(|&x| a.sp(x)).collect();
        for &k in &arities {
            if k > len {
                continue;
            }
            let mut pre = false;
            for i in 0..=len - k {
                if let Some(outs) = table.get(&t[i..i + k]) {
                    for (o, w) in outs {
                        if i > 0 && *o == unit {
                            continue;
                        }
                        let mut nt = t[..i].to_vec();
                        nt.push(*o);
                        nt.extend_from_slice(&t[i + k..]);
                        out.add_term(nt, &(v * *w).signed(pre));
                    }
                }
                pre ^= sp[i];
            }
            for r in 1..k {
                let cut = len - r;
                let mut s = t[cut..].to_vec();
                s.extend_from_slice(&t[..cut]);
                let tail = word_parity(a, &t[cut..]);
                let head = word_parity(a, &t[..cut]);
                if let Some(outs) = table.get(&s[..k]) {
                    for (o, w) in outs {
                        let mut nt = alloc::vec![*o];
                        nt.extend_from_slice(&s[k..]);
                        out.add_term(nt, &(v * *w).signed(tail && head));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Normalized Connes operator:
/// B(x₀|x₁…x_n) = Σ_i ± 1|x_i…x_n x₀…x_{i−1}, and B vanishes when x₀ = 1.
pub fn connes_b(a: &Algebra, c: &Chain) -> Result<Chain, HochError> {
    if c.tag != a.tag() {
        return Err(HochError::AlgebraMismatch);
    }
    let unit = a.unit();
    let mut out = Chain { tag: c.tag, odd: !c.odd, terms: BTreeMap::new() };
    for (t, v) in &c.terms {
        if t[0] == unit {
            continue;
        }
        for i in 0..t.len() {
            let sign = word_parity(a, &t[..i]) && word_parity(a, &t[i..]);
            let mut nt = alloc::vec![unit];
            nt.extend_from_slice(&t[i..]);
            nt.extend_from_slice(&t[..i]);
            out.add_term(nt, &v.clone().signed(sign));
        }
    }
    Ok(out)
}

/// ⟨φ, x₀|x₁…x_n⟩ = (−1)^{|φ|·sp(x₀)} W(x₀, φ(x₁…x_n)), extended bilinearly.
pub fn chain_cochain_pairing(a: &Algebra, phi: &Cochain, c: &Chain) -> Result<Scalar, HochError> {
    if phi.tag() != a.tag() || c.tag != a.tag() {
        return Err(HochError::AlgebraMismatch);
    }
    let mut s = Scalar::zero();
    for (t, w) in &c.terms {
        let mut inner = Scalar::zero();
        for o in 0..a.dim() {
            let wv = a.w(t[0], o);
            if wv.is_zero() {
                continue;
            }
            if let Some(f) = phi.get(&Mono::new(t[1..].to_vec(), o)) {
                inner += &(wv * f);
            }
        }
        s += &(w * &inner).signed(phi.is_odd() && a.sp(t[0]));
    }
    Ok(s)
}
