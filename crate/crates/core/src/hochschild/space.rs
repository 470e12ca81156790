use alloc::vec::Vec;

use super::{Cochain, Mono};
use crate::algebra::Algebra;
use crate::exactla::SparseVec;

/// Coordinates on the weight-n reduced cochains: the monomial `(I, o)` sits
/// at `rank(I) * dim A + o`, where `rank(I)` reads I in base |Ā|.
#[derive(Clone, Debug)]
pub struct MonoIndex {
    weight: usize,
    dim: usize,
    bar: Vec<usize>,
    /// Position of each basis element in `bar` (`usize::MAX` for the unit).
    pos: Vec<usize>,
    tag: u64,
}

impl MonoIndex {
    pub fn new(a: &Algebra, weight: usize) -> MonoIndex {
        let bar = a.bar();
        let mut pos = alloc::vec![usize::MAX; a.dim()];
        for (i, &b) in bar.iter().enumerate() {
            pos[b] = i;
        }
        MonoIndex { weight, dim: a.dim(), bar, pos, tag: a.tag() }
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn len(&self) -> usize {
        self.bar.len().pow(self.weight as u32) * self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn index(&self, m: &Mono) -> usize {
        debug_assert_eq!(m.weight(), self.weight);
        let r = m.inputs().iter().fold(0usize, |r, &i| r * self.bar.len() + self.pos[i]);
        r * self.dim + m.output()
    }

    pub fn mono(&self, mut i: usize) -> Mono {
        let o = i % self.dim;
        i /= self.dim;
        let mut ins = alloc::vec![0usize; self.weight];
        for slot in ins.iter_mut().rev() {
            *slot = self.bar[i % self.bar.len()];
            i /= self.bar.len();
        }
        Mono::new(ins, o)
    }

    pub fn monos(&self) -> impl Iterator<Item = Mono> + '_ {
        (0..self.len()).map(|i| self.mono(i))
    }

    /// The weight-`n` part of `c` as a coordinate vector.
    pub fn to_vec(&self, c: &Cochain) -> SparseVec {
        c.terms().filter(|(m, _)| m.weight() == self.weight).map(|(m, v)| (self.index(m), v.clone())).collect()
    }

    pub fn to_cochain(&self, v: &SparseVec, odd: bool) -> Cochain {
        let mut c = Cochain::zero_tagged(self.tag, odd);
        for (i, x) in v {
            c.add_term(self.mono(*i), x);
        }
        c
    }
}
