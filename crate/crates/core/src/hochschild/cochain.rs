use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::HochError;
use crate::algebra::Algebra;
use crate::exactla::Scalar;

/// A basis cochain: the map sending `s inputs` to `s output` and every other
/// basis tuple to zero. Ordered by weight, then inputs, then output.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mono {
    inputs: Vec<usize>,
    output: usize,
}

impl Mono {
    pub fn new(inputs: Vec<usize>, output: usize) -> Mono {
        Mono { inputs, output }
    }

    pub fn inputs(&self) -> &[usize] {
        &self.inputs
    }

    pub fn output(&self) -> usize {
        self.output
    }

    pub fn weight(&self) -> usize {
        self.inputs.len()
    }

    /// Shifted parity sp(output) + Σ sp(inputs).
    pub fn parity(&self, a: &Algebra) -> bool {
        self.inputs.iter().fold(a.sp(self.output), |p, &i| p ^ a.sp(i))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Mono) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Mono) -> Ordering {
        (self.inputs.len(), &self.inputs, self.output).cmp(&(other.inputs.len(), &other.inputs, other.output))
    }
}

/// A shifted-parity-homogeneous Hochschild cochain with finitely many weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    tag: u64,
    odd: bool,
    terms: BTreeMap<Mono, Scalar>,
}

impl Cochain {
    pub fn zero(a: &Algebra, odd: bool) -> Cochain {
        Cochain::zero_tagged(a.tag(), odd)
    }

    pub(crate) fn zero_tagged(tag: u64, odd: bool) -> Cochain {
        Cochain { tag, odd, terms: BTreeMap::new() }
    }

    /// Builds a reduced cochain, checking indices, reducedness and parity.
    pub fn from_terms<I>(a: &Algebra, odd: bool, terms: I) -> Result<Cochain, HochError>
    where
        I: IntoIterator<Item = (Mono, Scalar)>,
    {
        let mut c = Cochain::zero(a, odd);
        for (m, v) in terms {
            if m.output >= a.dim() || m.inputs.iter().any(|&i| i >= a.dim()) {
                return Err(HochError::BadMonomial(format!("{:?}", m)));
            }
            if m.inputs.contains(&a.unit()) {
                return Err(HochError::BadMonomial(format!("unit in a reduced slot: {:?}", m)));
            }
            if v.is_zero() {
                continue;
            }
            if m.parity(a) != odd {
                return Err(HochError::ParityMismatch);
            }
            c.add_term(m, &a.field().coerce(&v));
        }
        Ok(c)
    }

    /// The basis cochain `m` with coefficient one.
    pub fn mono(a: &Algebra, m: Mono) -> Cochain {
        let odd = m.parity(a);
        let mut c = Cochain::zero(a, odd);
        c.add_term(m, &a.field().from_i64(1));
        c
    }

    /// The weight-0 cochain with value the basis element `i`.
    pub fn element(a: &Algebra, i: usize) -> Cochain {
        Cochain::mono(a, Mono::new(Vec::new(), i))
    }

    pub fn tag(&self) -> u64 {
        self.tag
    }

    /// Shifted parity.
    pub fn is_odd(&self) -> bool {
        self.odd
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mono) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub(crate) fn get(&self, m: &Mono) -> Option<&Scalar> {
        self.terms.get(m)
    }

    pub fn weights(&self) -> BTreeSet<usize> {
        self.terms.keys().map(|m| m.weight()).collect()
    }

    pub fn max_weight(&self) -> Option<usize> {
        self.terms.keys().next_back().map(|m| m.weight())
    }

    pub fn component(&self, w: usize) -> Cochain {
        Cochain {
            tag: self.tag,
            odd: self.odd,
            terms: self.terms.iter().filter(|(m, _)| m.weight() == w).map(|(m, v)| (m.clone(), v.clone())).collect(),
        }
    }

    /// Adds a term without parity checks; callers guarantee homogeneity.
    pub(crate) fn add_term(&mut self, m: Mono, v: &Scalar) {
        if v.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(e) => {
                *e += v;
                if e.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, v.clone());
            }
        }
    }

    pub(crate) fn with_parity(mut self, odd: bool) -> Cochain {
        self.odd = odd;
        self
    }

    pub(crate) fn same_space(&self, other: &Cochain) -> Result<(), HochError> {
        if self.tag != other.tag {
            return Err(HochError::AlgebraMismatch);
        }
        if self.odd != other.odd && !self.is_zero() && !other.is_zero() {
            return Err(HochError::ParityMismatch);
        }
        Ok(())
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, c: &Scalar, other: &Cochain) -> Result<Cochain, HochError> {
        self.same_space(other)?;
        let mut out = self.clone();
        if out.is_zero() {
            out.odd = other.odd;
        }
        for (m, v) in &other.terms {
            out.add_term(m.clone(), &(c * v));
        }
        Ok(out)
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain, HochError> {
        self.add_scaled(&Scalar::one(), other)
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain, HochError> {
        self.add_scaled(&-Scalar::one(), other)
    }

    pub fn scale(&self, c: &Scalar) -> Cochain {
        let mut out = Cochain::zero_tagged(self.tag, self.odd);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), &(c * v));
        }
        out
    }

    pub fn neg(&self) -> Cochain {
        self.scale(&-Scalar::one())
    }
}
