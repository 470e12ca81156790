//! Cohomology of the Hochschild, cyclic and u-power complexes, the
//! degeneration verdict, the ι comparison and the BV defect on cohomology.
//!
//! All complexes here need a weight-homogeneous δ (m₂ the only product), so
//! a weight-n cohomology group involves only weights n−1, n and n+1.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::Algebra;
use crate::exactla::{axpy, cobound_certificate, Echelon, Insert, Scalar, Solution, SparseMatrix, SparseVec};
use crate::hochschild::{cup_raw, cyclic_project, delta, diff_raw, pair_mono, Cochain, HochError, Mono, MonoIndex};

/// Which weight-0 cochains are allowed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    /// All of Hom(k, A) = A in weight 0.
    Normalized,
    /// Weight-0 cochains orthogonal to the unit chain, ⟨φ, 1⟩ = 0. Dual to
    /// dividing the chains by the ground-field unit.
    Strict,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomologyError {
    /// The request reaches weights beyond the configured window.
    WindowTooSmall { needed: usize, max_weight: usize },
    /// δ is not weight-homogeneous (some m_k with k ≠ 2 is nonzero).
    NotWeightGraded,
    NotCocycle(&'static str),
    Hoch(HochError),
}

impl From<HochError> for HomologyError {
    fn from(e: HochError) -> Self {
        HomologyError::Hoch(e)
    }
}

impl fmt::Display for HomologyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomologyError::WindowTooSmall { needed, max_weight } => {
                write!(f, "window too small: need max weight {}, have {}", needed, max_weight)
            }
            HomologyError::NotWeightGraded => {
                write!(f, "cohomology needs a weight-homogeneous differential (only m2 nonzero)")
            }
            HomologyError::NotCocycle(which) => write!(f, "{} is not a cocycle", which),
            HomologyError::Hoch(e) => write!(f, "{}", e),
        }
    }
}

fn require(a: &Algebra, needed: usize, max_weight: usize) -> Result<(), HomologyError> {
    if !a.is_associative_only() {
        return Err(HomologyError::NotWeightGraded);
    }
    if needed > max_weight {
        return Err(HomologyError::WindowTooSmall { needed, max_weight });
    }
    Ok(())
}

/// A subspace of weight-n cochains given by parity-homogeneous basis vectors
/// in monomial coordinates.
#[derive(Clone, Debug)]
pub struct Subspace {
    pub index: MonoIndex,
    pub basis: Vec<(SparseVec, bool)>,
}

impl Subspace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn cochain(&self, i: usize) -> Cochain {
        let (v, odd) = &self.basis[i];
        self.index.to_cochain(v, *odd)
    }
}

/// The normalized or strict cochain space of weight `n`.
pub fn cochain_space(a: &Algebra, n: usize, variant: Variant) -> Subspace {
    let index = MonoIndex::new(a, n);
    let monos: Vec<(SparseVec, bool)> = index
        .monos()
        .enumerate()
        .map(|(i, m)| ([(i, Scalar::one())].into_iter().collect(), m.parity(a)))
        .collect();
    if n > 0 || variant == Variant::Normalized {
        return Subspace { index, basis: monos };
    }
    // ⟨e_o, 1⟩ for each weight-0 monomial; eliminate against the first
    // nonzero one.
    let unit = [a.unit()];
    let vals: Vec<Scalar> = index
        .monos()
        .map(|m| pair_mono(a, &Cochain::mono(a, m), &unit))
        .collect();
    let Some(piv) = vals.iter().position(|v| !v.is_zero()) else {
        return Subspace { index, basis: monos };
    };
    let inv = vals[piv].inv().expect("nonzero");
    let mut basis = Vec::new();
    for (i, (v, odd)) in monos.iter().enumerate() {
        if i == piv {
            continue;
        }
        let mut w = v.clone();
        axpy(&mut w, &-(&vals[i] * &inv), &monos[piv].0);
        basis.push((w, *odd));
    }
    Subspace { index, basis }
}

/// A basis of the cyclic cochains C^λ of weight `n`: cyclic projections of
/// the space's basis, keeping the first independent ones.
pub fn cyclic_space(a: &Algebra, n: usize, variant: Variant) -> Result<Subspace, HomologyError> {
    let base = cochain_space(a, n, variant);
    let mut ech = Echelon::new();
    let mut basis = Vec::new();
    for (i, (_, odd)) in base.basis.iter().enumerate() {
        let c = cyclic_project(a, &base.cochain(i))?;
        let v = base.index.to_vec(&c);
        if let Insert::Independent(_) = ech.insert(&v, i) {
            basis.push((v, *odd));
        }
    }
    Ok(Subspace { index: base.index, basis })
}

/// Matrix of δ on a subspace, columns in weight-(n+1) monomial coordinates.
pub fn delta_matrix(a: &Algebra, s: &Subspace) -> SparseMatrix {
    let target = MonoIndex::new(a, s.index.weight() + 1);
    let cols: Vec<SparseVec> = (0..s.dim()).map(|i| target.to_vec(&diff_raw(a, &s.cochain(i)))).collect();
    SparseMatrix::from_columns(target.len(), &cols)
}

/// One degree of a cochain complex: basis vectors with parities and their
/// images under the differential.
#[derive(Clone, Debug, Default)]
struct Level {
    basis: Vec<(SparseVec, bool)>,
    images: Vec<SparseVec>,
}

/// Cocycle vectors (ambient coordinates) of the given parity.
fn cocycles(l: &Level, odd: bool) -> Vec<SparseVec> {
    let mut e = Echelon::tracking();
    let mut out = Vec::new();
    for (j, ((_, p), img)) in l.basis.iter().zip(&l.images).enumerate() {
        if *p != odd {
            continue;
        }
        if let Insert::Dependent(rel) = e.insert(img, j) {
            let mut z = SparseVec::new();
            for (k, c) in &rel {
                axpy(&mut z, c, &l.basis[*k].0);
            }
            out.push(z);
        }
    }
    out
}

/// Representatives of H = Z_odd / B, lexicographically first.
fn cohomology(cur: &Level, prev: Option<&Level>, odd: bool) -> Vec<SparseVec> {
    let mut e = Echelon::new();
    if let Some(p) = prev {
        for (j, ((_, par), img)) in p.basis.iter().zip(&p.images).enumerate() {
            if *par != odd {
                e.insert(img, j);
            }
        }
    }
    cocycles(cur, odd)
        .into_iter()
        .enumerate()
        .filter_map(|(i, z)| match e.insert(&z, usize::MAX - i) {
            Insert::Independent(_) => Some(z),
            Insert::Dependent(_) => None,
        })
        .collect()
}

/// Dimension, parity split and representatives of one cohomology group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyReport<R> {
    /// Weight (or total weight for the u-complex).
    pub weight: usize,
    pub dim: usize,
    pub dim_even: usize,
    pub dim_odd: usize,
    /// True when every weight touched by the differentials lies in the window.
    pub reliable: bool,
    pub representatives: Vec<R>,
}

/// The complex (C, δ), plain or cyclic, with per-weight caching.
struct DeltaComplex<'a> {
    a: &'a Algebra,
    variant: Variant,
    cyclic: bool,
    levels: BTreeMap<usize, Level>,
    spaces: BTreeMap<usize, Subspace>,
}

impl<'a> DeltaComplex<'a> {
    fn new(a: &'a Algebra, variant: Variant, cyclic: bool) -> Self {
        DeltaComplex { a, variant, cyclic, levels: BTreeMap::new(), spaces: BTreeMap::new() }
    }

    fn space(&mut self, n: usize) -> Result<&Subspace, HomologyError> {
        if !self.spaces.contains_key(&n) {
            let s = if self.cyclic {
                cyclic_space(self.a, n, self.variant)?
            } else {
                cochain_space(self.a, n, self.variant)
            };
            self.spaces.insert(n, s);
        }
        Ok(&self.spaces[&n])
    }

    fn level(&mut self, n: usize) -> Result<&Level, HomologyError> {
        if !self.levels.contains_key(&n) {
            let a = self.a;
            let s = self.space(n)?.clone();
            let target = MonoIndex::new(a, n + 1);
            let images = (0..s.dim()).map(|i| target.to_vec(&diff_raw(a, &s.cochain(i)))).collect();
            self.levels.insert(n, Level { basis: s.basis.clone(), images });
        }
        Ok(&self.levels[&n])
    }

    fn report(&mut self, n: usize) -> Result<CohomologyReport<Cochain>, HomologyError> {
        self.level(n)?;
        if n > 0 {
            self.level(n - 1)?;
        }
        let cur = &self.levels[&n];
        let prev = if n > 0 { self.levels.get(&(n - 1)) } else { None };
        let index = MonoIndex::new(self.a, n);
        let even = cohomology(cur, prev, false);
        let odd = cohomology(cur, prev, true);
        let mut reps: Vec<Cochain> = even.iter().map(|v| index.to_cochain(v, false)).collect();
        reps.extend(odd.iter().map(|v| index.to_cochain(v, true)));
        Ok(CohomologyReport {
            weight: n,
            dim: even.len() + odd.len(),
            dim_even: even.len(),
            dim_odd: odd.len(),
            reliable: true,
            representatives: reps,
        })
    }
}

/// HH^n: cohomology of the normalized reduced cochain complex in weight n.
pub fn hh(a: &Algebra, n: usize, max_weight: usize) -> Result<CohomologyReport<Cochain>, HomologyError> {
    require(a, n + 1, max_weight)?;
    DeltaComplex::new(a, Variant::Normalized, false).report(n)
}

/// HH^n for every n whose neighbours fit in the window.
pub fn hh_all(a: &Algebra, max_weight: usize) -> Result<Vec<CohomologyReport<Cochain>>, HomologyError> {
    require(a, 1, max_weight)?;
    let mut c = DeltaComplex::new(a, Variant::Normalized, false);
    (0..max_weight).map(|n| c.report(n)).collect()
}

/// Cohomology of (C^λ, δ) in weight n.
pub fn cyclic_cohomology(
    a: &Algebra,
    n: usize,
    max_weight: usize,
    variant: Variant,
) -> Result<CohomologyReport<Cochain>, HomologyError> {
    require(a, n + 1, max_weight)?;
    DeltaComplex::new(a, variant, true).report(n)
}

/// An element φ₀ + uφ₁ + … + u^{M−1}φ_{M−1} of C ⊗ k[u]/u^M.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPolyCochain {
    pub order: usize,
    pub coeffs: Vec<Cochain>,
}

impl UPolyCochain {
    /// (δ + uΔ) applied, truncated at u^M.
    pub fn differential(&self, a: &Algebra) -> Result<UPolyCochain, HomologyError> {
        let odd = self.coeffs.first().map(|c| !c.is_odd()).unwrap_or(true);
        let mut out: Vec<Cochain> = (0..self.order).map(|_| Cochain::zero(a, odd)).collect();
        for (p, c) in self.coeffs.iter().enumerate() {
            out[p] = out[p].add(&diff_raw(a, c))?;
            if p + 1 < self.order {
                out[p + 1] = out[p + 1].add(&delta(a, c)?)?;
            }
        }
        Ok(UPolyCochain { order: self.order, coeffs: out })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

/// The truncated complex (C ⊗ k[u]/u^M, δ + uΔ) graded by total weight
/// n + 2p for u^p·C^n.
struct UComplex<'a> {
    base: DeltaComplex<'a>,
    order: usize,
    deltas: BTreeMap<usize, Vec<SparseVec>>,
    levels: BTreeMap<usize, Level>,
}

impl<'a> UComplex<'a> {
    fn new(a: &'a Algebra, order: usize, variant: Variant) -> Self {
        UComplex { base: DeltaComplex::new(a, variant, false), order, deltas: BTreeMap::new(), levels: BTreeMap::new() }
    }

    /// `(p, n, offset)` for the components of total weight `total`.
    fn layout(&self, total: usize) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        let mut off = 0;
        for p in 0..self.order {
            if 2 * p > total {
                break;
            }
            let n = total - 2 * p;
            out.push((p, n, off));
            off += MonoIndex::new(self.base.a, n).len();
        }
        out
    }

    fn big_delta(&mut self, n: usize) -> Result<&Vec<SparseVec>, HomologyError> {
        if !self.deltas.contains_key(&n) {
            let a = self.base.a;
            let s = self.base.space(n)?.clone();
            let v = if n == 0 {
                alloc::vec![SparseVec::new(); s.dim()]
            } else {
                let target = MonoIndex::new(a, n - 1);
                (0..s.dim()).map(|i| delta(a, &s.cochain(i)).map(|c| target.to_vec(&c))).collect::<Result<_, _>>()?
            };
            self.deltas.insert(n, v);
        }
        Ok(&self.deltas[&n])
    }

    fn level(&mut self, total: usize) -> Result<&Level, HomologyError> {
        if !self.levels.contains_key(&total) {
            let here = self.layout(total);
            let there = self.layout(total + 1);
            let off_there: BTreeMap<usize, usize> = there.iter().map(|(p, _, o)| (*p, *o)).collect();
            let mut lvl = Level::default();
            for (p, n, off) in here {
                let base = self.base.level(n)?.clone();
                let dl = self.big_delta(n)?.clone();
                for (((v, odd), img), dv) in base.basis.iter().zip(&base.images).zip(&dl) {
                    lvl.basis.push((shift(v, off), *odd));
                    let mut col = shift(img, off_there[&p]);
                    if let Some(o2) = off_there.get(&(p + 1)) {
                        axpy(&mut col, &Scalar::one(), &shift(dv, *o2));
                    }
                    lvl.images.push(col);
                }
            }
            self.levels.insert(total, lvl);
        }
        Ok(&self.levels[&total])
    }

    fn to_upoly(&self, total: usize, v: &SparseVec, odd: bool) -> UPolyCochain {
        let a = self.base.a;
        let mut coeffs: Vec<Cochain> = (0..self.order).map(|_| Cochain::zero(a, odd)).collect();
        let lay = self.layout(total);
        for (k, (p, n, off)) in lay.iter().enumerate() {
            let end = lay.get(k + 1).map(|x| x.2).unwrap_or(usize::MAX);
            let part: SparseVec = v.range(*off..end).map(|(i, x)| (i - off, x.clone())).collect();
            coeffs[*p] = MonoIndex::new(a, *n).to_cochain(&part, odd);
        }
        UPolyCochain { order: self.order, coeffs }
    }

    /// Multiplication by u^j from total weight `total − 2j` to `total`.
    fn u_shift(&self, total: usize, j: usize, v: &SparseVec) -> SparseVec {
        let src = self.layout(total - 2 * j);
        let dst: BTreeMap<usize, usize> = self.layout(total).into_iter().map(|(p, _, o)| (p, o)).collect();
        let mut out = SparseVec::new();
        for (k, (p, _, off)) in src.iter().enumerate() {
            let end = src.get(k + 1).map(|x| x.2).unwrap_or(usize::MAX);
            if let Some(o2) = dst.get(&(p + j)) {
                for (i, x) in v.range(*off..end) {
                    out.insert(i - off + o2, x.clone());
                }
            }
        }
        out
    }

    fn report(&mut self, total: usize) -> Result<(CohomologyReport<UPolyCochain>, Vec<usize>), HomologyError> {
        self.level(total)?;
        if total > 0 {
            self.level(total - 1)?;
        }
        let cur = &self.levels[&total];
        let prev = if total > 0 { self.levels.get(&(total - 1)) } else { None };
        let even = cohomology(cur, prev, false);
        let odd = cohomology(cur, prev, true);
        // dim of u^j·H for each j.
        let mut powers = Vec::new();
        for j in 0..self.order {
            if 2 * j > total {
                powers.push(0);
                continue;
            }
            let src = total - 2 * j;
            self.level(src)?;
            let mut e = Echelon::new();
            let mut base_rank = 0;
            if let Some(p) = self.levels.get(&(total.wrapping_sub(1))).filter(|_| total > 0) {
                for (i, img) in p.images.iter().enumerate() {
                    e.insert(img, i);
                }
                base_rank = e.rank();
            }
            let src_level = self.levels[&src].clone();
            for odd_src in [false, true] {
                for z in cocycles(&src_level, odd_src) {
                    e.insert(&self.u_shift(total, j, &z), 0);
                }
            }
            powers.push(e.rank() - base_rank);
        }
        let mut reps: Vec<UPolyCochain> = even.iter().map(|v| self.to_upoly(total, v, false)).collect();
        reps.extend(odd.iter().map(|v| self.to_upoly(total, v, true)));
        Ok((
            CohomologyReport {
                weight: total,
                dim: even.len() + odd.len(),
                dim_even: even.len(),
                dim_odd: odd.len(),
                reliable: true,
                representatives: reps,
            },
            powers,
        ))
    }
}

fn shift(v: &SparseVec, by: usize) -> SparseVec {
    v.iter().map(|(i, x)| (i + by, x.clone())).collect()
}

/// Cohomology of the u-complex at one total weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UHomology {
    pub order: usize,
    pub variant: Variant,
    pub report: CohomologyReport<UPolyCochain>,
    /// dim_k(u^j·H) for j = 0..M−1.
    pub u_powers: Vec<usize>,
}

pub fn u_homology(
    a: &Algebra,
    order: usize,
    total: usize,
    max_weight: usize,
    variant: Variant,
) -> Result<UHomology, HomologyError> {
    require(a, total + 1, max_weight)?;
    let mut c = UComplex::new(a, order, variant);
    let (report, u_powers) = c.report(total)?;
    Ok(UHomology { order, variant, report, u_powers })
}

/// Matrix of δ + uΔ from total weight `total` to `total + 1`, with the
/// domain basis of [`u_homology`]. Exposed for independent rank checks.
pub fn u_matrix(a: &Algebra, order: usize, total: usize, variant: Variant) -> Result<(SparseMatrix, Vec<bool>), HomologyError> {
    require(a, 0, 0)?;
    let mut c = UComplex::new(a, order, variant);
    let rows = c.layout(total + 1).iter().map(|(_, n, _)| MonoIndex::new(a, *n).len()).sum();
    let l = c.level(total)?;
    Ok((SparseMatrix::from_columns(rows, &l.images), l.basis.iter().map(|(_, p)| *p).collect()))
}

/// One total weight of a degeneration test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegenerationRow {
    pub total_weight: usize,
    /// dim H of the u-complex, (even, odd).
    pub h: (usize, usize),
    /// Σ_p dim HH^{N−2p}, (even, odd).
    pub e1: (usize, usize),
}

/// Verdict for one u-order M.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegenerationVerdict {
    pub order: usize,
    pub pass: bool,
    /// Largest total weight whose differentials fit in the window.
    pub reliable_max_total: usize,
    pub rows: Vec<DegenerationRow>,
    /// First failing `(total weight, parity odd?, dim H, E1 count)`.
    pub witness: Option<(usize, bool, usize, usize)>,
}

/// Per M ≤ M_max: PASS iff dim H_N(C⊗k[u]/u^M, δ+uΔ) = Σ_{p<M} dim HH^{N−2p}
/// in each parity for every total weight N in the reliable range.
pub fn degeneration_check(
    a: &Algebra,
    max_order: usize,
    max_weight: usize,
    variant: Variant,
) -> Result<Vec<DegenerationVerdict>, HomologyError> {
    require(a, 1, max_weight)?;
    let top = max_weight - 1;
    let mut hhc = DeltaComplex::new(a, variant, false);
    let hhd: Vec<(usize, usize)> = (0..=top)
        .map(|n| hhc.report(n).map(|r| (r.dim_even, r.dim_odd)))
        .collect::<Result<_, _>>()?;
    let mut out = Vec::new();
    for m in 1..=max_order {
        let mut uc = UComplex::new(a, m, variant);
        let mut rows = Vec::new();
        let mut witness = None;
        for total in 0..=top {
            let (r, _) = uc.report(total)?;
            let mut e1 = (0, 0);
            for p in 0..m {
                if 2 * p <= total {
                    let d = hhd[total - 2 * p];
                    e1.0 += d.0;
                    e1.1 += d.1;
                }
            }
            let h = (r.dim_even, r.dim_odd);
            if witness.is_none() {
                if h.0 != e1.0 {
                    witness = Some((total, false, h.0, e1.0));
                } else if h.1 != e1.1 {
                    witness = Some((total, true, h.1, e1.1));
                }
            }
            rows.push(DegenerationRow { total_weight: total, h, e1 });
        }
        out.push(DegenerationVerdict { order: m, pass: witness.is_none(), reliable_max_total: top, rows, witness });
    }
    Ok(out)
}

/// Whether H(C^λ) → H(C) is onto, per weight below the window.
pub fn tangent_surjectivity(a: &Algebra, max_weight: usize, variant: Variant) -> Result<Vec<(usize, bool)>, HomologyError> {
    require(a, 1, max_weight)?;
    let mut plain = DeltaComplex::new(a, variant, false);
    let mut cyc = DeltaComplex::new(a, variant, true);
    let mut out = Vec::new();
    for n in 0..max_weight {
        let hh = plain.report(n)?.dim;
        let mut e = Echelon::new();
        if n > 0 {
            for img in &plain.level(n - 1)?.images {
                e.insert(img, 0);
            }
        }
        let b = e.rank();
        let l = cyc.level(n)?.clone();
        for odd in [false, true] {
            for z in cocycles(&l, odd) {
                e.insert(&z, 0);
            }
        }
        out.push((n, e.rank() - b == hh));
    }
    Ok(out)
}

/// One row of the ι comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IotaRow {
    pub weight: usize,
    /// dim H^n(C^λ, δ), strict variant.
    pub cyclic: usize,
    /// dim H at total weight n of the strict u-complex, when the u-order
    /// is large enough for truncation not to touch weight n.
    pub u_complex: Option<usize>,
}

impl IotaRow {
    pub fn agrees(&self) -> bool {
        self.u_complex.map_or(true, |u| u == self.cyclic)
    }
}

/// Compares H(C^λ_strict, δ) with H(C_strict ⊗ k[u]/u^M, δ+uΔ) for total
/// weights below the window. Weight n is comparable when M > (n+1)/2.
pub fn iota_comparison(a: &Algebra, order: usize, max_weight: usize) -> Result<Vec<IotaRow>, HomologyError> {
    require(a, 1, max_weight)?;
    let mut cyc = DeltaComplex::new(a, Variant::Strict, true);
    let mut uc = UComplex::new(a, order, Variant::Strict);
    let mut rows = Vec::new();
    for n in 0..max_weight {
        let c = cyc.report(n)?.dim;
        let u = if order > (n + 1) / 2 { Some(uc.report(n)?.0.dim) } else { None };
        rows.push(IotaRow { weight: n, cyclic: c, u_complex: u });
    }
    Ok(rows)
}

/// Outcome of the BV defect computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BvOutcome {
    /// γ with δγ = D.
    Primitive(Cochain),
    /// D is not exact: at `weight`, a functional `f` (over monomials) with
    /// f∘δ = 0 and f(D) ≠ 0.
    Certificate { defect: Cochain, weight: usize, functional: Vec<(Mono, Scalar)> },
}

/// D = [α,β] + (−1)^{|α|(w_α+1)} Δ(α∪β) − (−1)^{(|β|+1)(w_α+1)} Δα∪β + α∪Δβ,
/// bilinear over the weight components of α (|·| shifted parity). The
/// identity says D is exact whenever α and β are cocycles.
pub fn bv_defect_cochain(a: &Algebra, alpha: &Cochain, beta: &Cochain) -> Result<Cochain, HomologyError> {
    let pa = alpha.is_odd();
    let pb = beta.is_odd();
    let mut d = crate::hochschild::gerstenhaber(a, alpha, beta)?;
    let db = delta(a, beta)?;
    for w in alpha.weights() {
        let aw = alpha.component(w);
        let even_w = w % 2 == 0;
        let t1 = delta(a, &cup_raw(a, &aw, beta))?;
        let t2 = cup_raw(a, &delta(a, &aw)?, beta);
        let t3 = cup_raw(a, &aw, &db);
        d = d.add_scaled(&Scalar::sign(pa && even_w), &t1)?;
        d = d.add_scaled(&-Scalar::sign(!pb && even_w), &t2)?;
        d = d.add(&t3)?;
    }
    Ok(d)
}

pub fn bv_defect(a: &Algebra, alpha: &Cochain, beta: &Cochain, max_weight: usize) -> Result<BvOutcome, HomologyError> {
    require(a, 0, max_weight)?;
    for (c, name) in [(alpha, "alpha"), (beta, "beta")] {
        if c.tag() != a.tag() {
            return Err(HochError::AlgebraMismatch.into());
        }
        if !diff_raw(a, c).is_zero() {
            return Err(HomologyError::NotCocycle(name));
        }
    }
    let top = alpha.max_weight().unwrap_or(0) + beta.max_weight().unwrap_or(0);
    require(a, top, max_weight)?;
    let d = bv_defect_cochain(a, alpha, beta)?;
    exactness(a, d)
}

/// Solves δγ = d weight by weight, or returns a separating functional.
pub fn exactness(a: &Algebra, d: Cochain) -> Result<BvOutcome, HomologyError> {
    require(a, 0, 0)?;
    let odd = d.is_odd();
    let mut gamma = Cochain::zero(a, !odd);
    for w in d.weights() {
        let dw = d.component(w);
        let target = MonoIndex::new(a, w);
        let v = target.to_vec(&dw);
        if v.is_empty() {
            continue;
        }
        let m = if w == 0 {
            SparseMatrix::new(target.len(), 0)
        } else {
            delta_matrix(a, &cochain_space(a, w - 1, Variant::Normalized))
        };
        match cobound_certificate(&m, &v) {
            Solution::Solved(x) => {
                let src = MonoIndex::new(a, w - 1);
                let mut g = Cochain::zero(a, !odd);
                for (i, c) in &x {
                    g.add_term(src.mono(*i), c);
                }
                gamma = gamma.add(&g.with_parity(!odd))?;
            }
            Solution::Obstructed(f) => {
                let functional = f.iter().map(|(i, c)| (target.mono(*i), c.clone())).collect();
                return Ok(BvOutcome::Certificate { defect: d, weight: w, functional });
            }
        }
    }
    Ok(BvOutcome::Primitive(gamma))
}
