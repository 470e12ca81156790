//! Maurer-Cartan deformations over k[t]/t^N: residuals, order-by-order
//! lifting with obstruction certificates, the gauge action and cyclic
//! correction.
//!
//! The engine runs on any weight-graded DGLA whose differential raises
//! weight by one. Elements of the deformation are odd; gauge parameters
//! and obstructions are even.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cell::RefCell;
use core::fmt;
use core::fmt::Debug;

use crate::algebra::Algebra;
use crate::exactla::{axpy, cobound_certificate, dot, Field, Scalar, Solution, SparseMatrix, SparseVec};
use crate::hochschild::{bracket_raw, diff_raw, is_cyclic, Cochain, HochError, MonoIndex};
use crate::homology::{cochain_space, cyclic_space, Subspace, Variant};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DeformError {
    /// An input has a component above the weight window.
    WeightOverflow { needed: usize, max_weight: usize },
    /// A right-hand side reaches beyond what the window can solve.
    WindowIncomplete { order: usize, weight: usize },
    /// The input is not Maurer-Cartan modulo its base order.
    NotMaurerCartan { order: usize },
    /// The field cannot divide by `n` (½ or a factorial).
    NonInvertible { n: u64, characteristic: u64 },
    ParityMismatch,
    /// δ is not weight-homogeneous (some m_k with k ≠ 2 is nonzero).
    NotWeightGraded,
    /// The obstruction failed to be a cocycle, which means the input was
    /// not Maurer-Cartan to begin with.
    ObstructionNotCocycle { order: usize },
    Hoch(HochError),
}

impl From<HochError> for DeformError {
    fn from(e: HochError) -> Self {
        DeformError::Hoch(e)
    }
}

impl fmt::Display for DeformError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DeformError::WeightOverflow { needed, max_weight } => {
                write!(f, "weight overflow: need max weight {}, have {}", needed, max_weight)
            }
            DeformError::WindowIncomplete { order, weight } => {
                write!(f, "window-incomplete at order {}: residual has weight {}", order, weight)
            }
            DeformError::NotMaurerCartan { order } => write!(f, "not Maurer-Cartan: residual r_{} is nonzero", order),
            DeformError::NonInvertible { n, characteristic } => {
                write!(f, "{} is not invertible in characteristic {}", n, characteristic)
            }
            DeformError::ParityMismatch => write!(f, "deformation terms must be odd and gauge terms even"),
            DeformError::NotWeightGraded => {
                write!(f, "deformation needs a weight-homogeneous differential (only m2 nonzero)")
            }
            DeformError::ObstructionNotCocycle { order } => write!(f, "obstruction at order {} is not a cocycle", order),
            DeformError::Hoch(e) => write!(f, "{}", e),
        }
    }
}

/// A weight-graded DGLA with d of weight +1, presented by coordinates on
/// each weight.
pub trait Dgla {
    type Elem: Clone + PartialEq + Debug;

    fn field(&self) -> Field;
    /// Largest weight an unknown may have.
    fn window(&self) -> usize;
    fn zero(&self, odd: bool) -> Self::Elem;
    fn is_zero(&self, x: &Self::Elem) -> bool;
    fn is_odd(&self, x: &Self::Elem) -> bool;
    /// `x + c·y`.
    fn add_scaled(&self, x: &Self::Elem, c: &Scalar, y: &Self::Elem) -> Self::Elem;
    fn d(&self, x: &Self::Elem) -> Self::Elem;
    fn bracket(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn max_weight(&self, x: &Self::Elem) -> Option<usize>;
    /// Coordinates of the weight-`w` component.
    fn coords(&self, x: &Self::Elem, w: usize) -> SparseVec;
    fn from_coords(&self, v: &SparseVec, w: usize, odd: bool) -> Self::Elem;
    /// Coordinate vectors spanning the allowed elements of weight `w` and
    /// parity `odd` (the whole space, or a subcomplex).
    fn unknowns(&self, w: usize, odd: bool) -> Vec<SparseVec>;
    /// Whether `x` lies in the allowed subspace.
    fn admissible(&self, x: &Self::Elem) -> bool;
    /// Readable name of coordinate `i` at weight `w`.
    fn coord_name(&self, w: usize, i: usize) -> String;
}

fn weights_of<D: Dgla>(g: &D, x: &D::Elem) -> Vec<usize> {
    match g.max_weight(x) {
        None => Vec::new(),
        Some(m) => (0..=m).filter(|&w| !g.coords(x, w).is_empty()).collect(),
    }
}

fn check_window<D: Dgla>(g: &D, x: &D::Elem) -> Result<(), DeformError> {
    match g.max_weight(x) {
        Some(m) if m > g.window() => Err(DeformError::WeightOverflow { needed: m, max_weight: g.window() }),
        _ => Ok(()),
    }
}

fn inverse(field: Field, n: u64) -> Result<Scalar, DeformError> {
    if !field.inverts(n) {
        return Err(DeformError::NonInvertible { n, characteristic: field.characteristic() });
    }
    Ok(field.from_i64(n as i64).inv().expect("invertible"))
}

/// x = Σ_{i=1}^{N−1} t^i φ_i over k[t]/t^N.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MCDeformation<E> {
    /// φ_1, …, φ_{N−1}.
    pub terms: Vec<E>,
}

impl<E: Clone> MCDeformation<E> {
    pub fn new(terms: Vec<E>) -> Self {
        MCDeformation { terms }
    }

    /// The first-order deformation t·φ over k[t]/t².
    pub fn first_order(phi: E) -> Self {
        MCDeformation { terms: alloc::vec![phi] }
    }

    /// N, for the base ring k[t]/t^N.
    pub fn base_order(&self) -> usize {
        self.terms.len() + 1
    }
}

/// A verified obstruction: δω = 0, f∘δ = 0 on the allowed unknowns and
/// f(ω) ≠ 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionCertificate<E> {
    /// The order n of the missing term φ_n.
    pub order: usize,
    pub obstruction: E,
    /// Weight of the component the functional sees.
    pub weight: usize,
    /// Coordinates of f at that weight.
    pub functional: SparseVec,
}

impl<E> ObstructionCertificate<E> {
    /// Re-checks the two linear conditions.
    pub fn verify<D: Dgla<Elem = E>>(&self, g: &D) -> bool {
        let w = self.weight;
        if !g.is_zero(&g.d(&self.obstruction)) {
            return false;
        }
        if dot(&self.functional, &g.coords(&self.obstruction, w)).is_zero() {
            return false;
        }
        if w == 0 {
            return true;
        }
        g.unknowns(w - 1, true).iter().all(|u| {
            let du = g.d(&g.from_coords(u, w - 1, true));
            dot(&self.functional, &g.coords(&du, w)).is_zero()
        })
    }
}

/// Σ_{i+j=n, i,j≥1} [φ_i, φ_j] for the given terms (missing ones are 0).
fn quadratic<D: Dgla>(g: &D, terms: &[D::Elem], n: usize) -> D::Elem {
    let mut out = g.zero(false);
    for i in 1..n {
        let j = n - i;
        if let (Some(x), Some(y)) = (terms.get(i - 1), terms.get(j - 1)) {
            out = g.add_scaled(&out, &Scalar::one(), &g.bracket(x, y));
        }
    }
    out
}

/// r_n = δφ_n + ½ Σ_{i+j=n}[φ_i, φ_j] for n = 1..N−1.
pub fn mc_residual<D: Dgla>(g: &D, x: &MCDeformation<D::Elem>) -> Result<Vec<D::Elem>, DeformError> {
    for t in &x.terms {
        check_window(g, t)?;
        if !g.is_zero(t) && !g.is_odd(t) {
            return Err(DeformError::ParityMismatch);
        }
    }
    let half = inverse(g.field(), 2)?;
    Ok((1..x.base_order())
        .map(|n| g.add_scaled(&g.d(&x.terms[n - 1]), &half, &quadratic(g, &x.terms, n)))
        .collect())
}

fn require_mc<D: Dgla>(g: &D, x: &MCDeformation<D::Elem>) -> Result<(), DeformError> {
    for (i, r) in mc_residual(g, x)?.iter().enumerate() {
        if !g.is_zero(r) {
            return Err(DeformError::NotMaurerCartan { order: i + 1 });
        }
    }
    Ok(())
}

/// Result of one lifting step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Lift<E> {
    Lifted(MCDeformation<E>),
    Obstructed(ObstructionCertificate<E>),
}

/// Solves dγ = rhs among the allowed odd unknowns, weight by weight.
fn solve_d<D: Dgla>(g: &D, rhs: &D::Elem, order: usize) -> Result<Result<D::Elem, (usize, SparseVec)>, DeformError> {
    let mut gamma = g.zero(true);
    for w in weights_of(g, rhs) {
        if w > g.window() + 1 {
            return Err(DeformError::WindowIncomplete { order, weight: w });
        }
        let b = g.coords(rhs, w);
        let cols: Vec<SparseVec> = if w == 0 {
            Vec::new()
        } else {
            g.unknowns(w - 1, true).iter().map(|u| g.coords(&g.d(&g.from_coords(u, w - 1, true)), w)).collect()
        };
        let rows = b.keys().chain(cols.iter().flat_map(|c| c.keys())).max().map_or(0, |m| m + 1);
        match cobound_certificate(&SparseMatrix::from_columns(rows, &cols), &b) {
            Solution::Solved(x) => {
                let basis = g.unknowns(w - 1, true);
                let mut v = SparseVec::new();
                for (i, c) in &x {
                    axpy(&mut v, c, &basis[*i]);
                }
                gamma = g.add_scaled(&gamma, &Scalar::one(), &g.from_coords(&v, w - 1, true));
            }
            Solution::Obstructed(f) => return Ok(Err((w, f))),
        }
    }
    Ok(Ok(gamma))
}

/// Extends x from k[t]/t^N to k[t]/t^{N+1} by solving
/// δφ_N = −½ Σ_{i+j=N}[φ_i, φ_j], or certifies the obstruction.
pub fn mc_lift_step<D: Dgla>(g: &D, x: &MCDeformation<D::Elem>) -> Result<Lift<D::Elem>, DeformError> {
    require_mc(g, x)?;
    let n = x.base_order();
    let half = inverse(g.field(), 2)?;
    let omega = g.add_scaled(&g.zero(false), &half, &quadratic(g, &x.terms, n));
    if !g.is_zero(&g.d(&omega)) {
        return Err(DeformError::ObstructionNotCocycle { order: n });
    }
    let minus = g.add_scaled(&g.zero(false), &-Scalar::one(), &omega);
    match solve_d(g, &minus, n)? {
        Ok(phi) => {
            let mut terms = x.terms.clone();
            terms.push(phi);
            Ok(Lift::Lifted(MCDeformation { terms }))
        }
        Err((weight, functional)) => {
            let cert = ObstructionCertificate { order: n, obstruction: omega, weight, functional };
            debug_assert!(cert.verify(g));
            Ok(Lift::Obstructed(cert))
        }
    }
}

/// Outcome of lifting one tangent class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeResult<E> {
    pub tangent: E,
    /// The base order N reached: x is Maurer-Cartan over k[t]/t^N.
    pub certified_order: usize,
    pub deformation: MCDeformation<E>,
    pub certificate: Option<ObstructionCertificate<E>>,
    /// Set when the window could not hold the next right-hand side.
    pub window_incomplete: Option<usize>,
}

/// Lifts each tangent class t·v to order `target` (base ring k[t]/t^target).
pub fn smoothness_probe<D: Dgla>(
    g: &D,
    tangents: &[D::Elem],
    target: usize,
) -> Result<Vec<ProbeResult<D::Elem>>, DeformError> {
    let mut out = Vec::new();
    for v in tangents {
        let mut x = MCDeformation::first_order(v.clone());
        let mut certificate = None;
        let mut window_incomplete = None;
        while x.base_order() < target {
            match mc_lift_step(g, &x) {
                Ok(Lift::Lifted(y)) => x = y,
                Ok(Lift::Obstructed(c)) => {
                    certificate = Some(c);
                    break;
                }
                Err(DeformError::WindowIncomplete { weight, .. }) => {
                    window_incomplete = Some(weight);
                    break;
                }
                Err(e) => return Err(e),
            }
        }
        out.push(ProbeResult {
            tangent: v.clone(),
            certified_order: x.base_order(),
            deformation: x,
            certificate,
            window_incomplete,
        });
    }
    Ok(out)
}

/// Series Σ_{i≥1} t^i s_i truncated at t^N, stored as s_1..s_{N−1}.
fn series_bracket<D: Dgla>(g: &D, a: &[D::Elem], b: &[D::Elem], odd: bool) -> Vec<D::Elem> {
    let len = a.len().max(b.len());
    let mut out: Vec<D::Elem> = (0..len).map(|_| g.zero(odd)).collect();
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            let k = i + j + 1;
            if k < len && !g.is_zero(x) && !g.is_zero(y) {
                out[k] = g.add_scaled(&out[k], &Scalar::one(), &g.bracket(x, y));
            }
        }
    }
    out
}

/// e^{ad ξ}(x) − ((e^{ad ξ} − 1)/ad ξ)(δξ) for ξ = Σ t^i ξ_i even.
pub fn gauge_apply<D: Dgla>(
    g: &D,
    xi: &[D::Elem],
    x: &MCDeformation<D::Elem>,
) -> Result<MCDeformation<D::Elem>, DeformError> {
    let len = x.terms.len();
    for e in xi {
        check_window(g, e)?;
        if !g.is_zero(e) && g.is_odd(e) {
            return Err(DeformError::ParityMismatch);
        }
    }
    let xi: Vec<D::Elem> = (0..len).map(|i| xi.get(i).cloned().unwrap_or_else(|| g.zero(false))).collect();
    let field = g.field();
    let mut out = x.terms.clone();
    // Running ad_ξ^k(x) and ad_ξ^k(δξ), both odd.
    let mut ad_x = x.terms.clone();
    let mut ad_dxi: Vec<D::Elem> = xi.iter().map(|e| g.d(e)).collect();
    let mut fact = Scalar::one();
    for (i, v) in ad_dxi.iter().enumerate() {
        out[i] = g.add_scaled(&out[i], &-Scalar::one(), v);
    }
    for k in 1..len {
        // t-adic order of ad_ξ^k is at least k, so k < N suffices.
        fact = &fact * &inverse(field, k as u64)?;
        ad_x = series_bracket(g, &xi, &ad_x, true);
        ad_dxi = series_bracket(g, &xi, &ad_dxi, true);
        let fact_next = &fact * &inverse(field, k as u64 + 1)?;
        for i in 0..len {
            out[i] = g.add_scaled(&out[i], &fact, &ad_x[i]);
            out[i] = g.add_scaled(&out[i], &-fact_next.clone(), &ad_dxi[i]);
        }
    }
    for t in &out {
        check_window(g, t)?;
    }
    Ok(MCDeformation { terms: out })
}

/// Outcome of cyclic correction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cyclicized<E> {
    /// A gauge-equivalent deformation with every term admissible, and the
    /// gauge parameters applied at each order (ξ_n multiplies t^n).
    Done { deformation: MCDeformation<E>, gauge: Vec<E> },
    /// No gauge parameter makes φ_order admissible in this weight.
    Infeasible { order: usize, weight: usize },
}

/// Gauges x order by order so every φ_n lies in the admissible subspace of
/// `target`: at order n it solves φ_n − δξ_n ∈ target with ξ_n an even
/// element of `full`, then applies the gauge t^n ξ_n.
pub fn cyclicize<D: Dgla>(
    full: &D,
    target: &D,
    x: &MCDeformation<D::Elem>,
) -> Result<Cyclicized<D::Elem>, DeformError> {
    require_mc(full, x)?;
    let mut cur = x.clone();
    let mut gauge = Vec::new();
    for n in 1..cur.base_order() {
        let phi = cur.terms[n - 1].clone();
        let mut xi = full.zero(false);
        for w in weights_of(full, &phi) {
            if target.admissible(&full.from_coords(&full.coords(&phi, w), w, true)) {
                continue;
            }
            let b = full.coords(&phi, w);
            let cyc = target.unknowns(w, true);
            let evens = if w == 0 { Vec::new() } else { full.unknowns(w - 1, false) };
            let mut cols = cyc.clone();
            for u in &evens {
                cols.push(full.coords(&full.d(&full.from_coords(u, w - 1, false)), w));
            }
            let rows = b.keys().chain(cols.iter().flat_map(|c| c.keys())).max().map_or(0, |m| m + 1);
            match cobound_certificate(&SparseMatrix::from_columns(rows, &cols), &b) {
                Solution::Solved(sol) => {
                    let mut v = SparseVec::new();
                    for (i, c) in &sol {
                        if *i >= cyc.len() {
                            axpy(&mut v, c, &evens[*i - cyc.len()]);
                        }
                    }
                    xi = full.add_scaled(&xi, &Scalar::one(), &full.from_coords(&v, w - 1, false));
                }
                Solution::Obstructed(_) => return Ok(Cyclicized::Infeasible { order: n, weight: w }),
            }
        }
        // φ_n = c + δξ, so gauging by t^n ξ leaves c at order n.
        if !full.is_zero(&xi) {
            let mut series: Vec<D::Elem> = (1..n).map(|_| full.zero(false)).collect();
            series.push(xi.clone());
            cur = gauge_apply(full, &series, &cur)?;
        }
        debug_assert!(target.admissible(&cur.terms[n - 1]));
        gauge.push(xi);
    }
    Ok(Cyclicized::Done { deformation: cur, gauge })
}

/// The Hochschild DGLA (C, δ, [·,·]) of an associative algebra, or its
/// cyclic subcomplex, with unknowns restricted to weights ≤ `window`.
pub struct HochschildDgla<'a> {
    a: &'a Algebra,
    window: usize,
    cyclic: bool,
    spaces: RefCell<BTreeMap<(usize, bool), Vec<SparseVec>>>,
}

impl<'a> HochschildDgla<'a> {
    pub fn new(a: &'a Algebra, window: usize, cyclic: bool) -> Result<Self, DeformError> {
        if !a.is_associative_only() {
            return Err(DeformError::NotWeightGraded);
        }
        if cyclic && a.winv().is_none() {
            return Err(HochError::DegeneratePairing.into());
        }
        Ok(HochschildDgla { a, window, cyclic, spaces: RefCell::new(BTreeMap::new()) })
    }

    pub fn algebra(&self) -> &Algebra {
        self.a
    }

    pub fn is_cyclic(&self) -> bool {
        self.cyclic
    }

    fn space(&self, w: usize) -> Result<Subspace, HochError> {
        if self.cyclic {
            cyclic_space(self.a, w, Variant::Normalized).map_err(|e| match e {
                crate::homology::HomologyError::Hoch(h) => h,
                _ => HochError::DegeneratePairing,
            })
        } else {
            Ok(cochain_space(self.a, w, Variant::Normalized))
        }
    }
}

impl Dgla for HochschildDgla<'_> {
    type Elem = Cochain;

    fn field(&self) -> Field {
        self.a.field()
    }

    fn window(&self) -> usize {
        self.window
    }

    fn zero(&self, odd: bool) -> Cochain {
        Cochain::zero(self.a, odd)
    }

    fn is_zero(&self, x: &Cochain) -> bool {
        x.is_zero()
    }

    fn is_odd(&self, x: &Cochain) -> bool {
        x.is_odd()
    }

    fn add_scaled(&self, x: &Cochain, c: &Scalar, y: &Cochain) -> Cochain {
        x.add_scaled(c, y).expect("operands share algebra and parity")
    }

    fn d(&self, x: &Cochain) -> Cochain {
        diff_raw(self.a, x)
    }

    fn bracket(&self, x: &Cochain, y: &Cochain) -> Cochain {
        bracket_raw(self.a, x, y)
    }

    fn max_weight(&self, x: &Cochain) -> Option<usize> {
        x.max_weight()
    }

    fn coords(&self, x: &Cochain, w: usize) -> SparseVec {
        MonoIndex::new(self.a, w).to_vec(&x.component(w))
    }

    fn from_coords(&self, v: &SparseVec, w: usize, odd: bool) -> Cochain {
        MonoIndex::new(self.a, w).to_cochain(v, odd)
    }

    fn unknowns(&self, w: usize, odd: bool) -> Vec<SparseVec> {
        if let Some(v) = self.spaces.borrow().get(&(w, odd)) {
            return v.clone();
        }
        let v: Vec<SparseVec> = match self.space(w) {
            Ok(s) => s.basis.into_iter().filter(|(_, p)| *p == odd).map(|(v, _)| v).collect(),
            Err(_) => Vec::new(),
        };
        self.spaces.borrow_mut().insert((w, odd), v.clone());
        v
    }

    fn admissible(&self, x: &Cochain) -> bool {
        !self.cyclic || is_cyclic(self.a, x).unwrap_or(false)
    }

    fn coord_name(&self, w: usize, i: usize) -> String {
        let m = MonoIndex::new(self.a, w).mono(i);
        let names = self.a.names();
        let ins: Vec<&str> = m.inputs().iter().map(|&j| names[j].as_str()).collect();
        format!("({})->{}", ins.join(","), names[m.output()])
    }
}

/// Element of a [`FiniteDgla`]: a parity-homogeneous coordinate vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteElem {
    pub odd: bool,
    pub v: SparseVec,
}

/// A finite-dimensional weight-graded DGLA given by structure constants.
/// Brackets are listed for i ≤ j; the rest follow from graded
/// antisymmetry.
#[derive(Clone, Debug)]
pub struct FiniteDgla {
    pub field: Field,
    pub names: Vec<String>,
    pub odd: Vec<bool>,
    pub weight: Vec<usize>,
    pub window: usize,
    pub d: BTreeMap<usize, SparseVec>,
    pub bracket: BTreeMap<(usize, usize), SparseVec>,
}

impl FiniteDgla {
    /// Odd ξ (weight 1), even c (weight 2) and even g (weight 0) with
    /// d = 0 and [ξ, ξ] = c as the only nonzero bracket.
    pub fn obstructed_fixture() -> FiniteDgla {
        let mut bracket = BTreeMap::new();
        bracket.insert((0, 0), [(1, Scalar::one())].into_iter().collect());
        FiniteDgla {
            field: Field::Rational,
            names: ["xi", "c", "g"].iter().map(|s| String::from(*s)).collect(),
            odd: alloc::vec![true, false, false],
            weight: alloc::vec![1, 2, 0],
            window: 2,
            d: BTreeMap::new(),
            bracket,
        }
    }

    pub fn basis(&self, i: usize) -> FiniteElem {
        FiniteElem { odd: self.odd[i], v: [(i, Scalar::one())].into_iter().collect() }
    }

    fn at_weight(&self, w: usize) -> Vec<usize> {
        (0..self.names.len()).filter(|&i| self.weight[i] == w).collect()
    }

    fn pair(&self, i: usize, j: usize) -> SparseVec {
        if i <= j {
            return self.bracket.get(&(i, j)).cloned().unwrap_or_default();
        }
        let mut v = self.bracket.get(&(j, i)).cloned().unwrap_or_default();
        let s = -Scalar::sign(self.odd[i] && self.odd[j]);
        for x in v.values_mut() {
            *x = &*x * &s;
        }
        v
    }
}

impl Dgla for FiniteDgla {
    type Elem = FiniteElem;

    fn field(&self) -> Field {
        self.field
    }

    fn window(&self) -> usize {
        self.window
    }

    fn zero(&self, odd: bool) -> FiniteElem {
        FiniteElem { odd, v: SparseVec::new() }
    }

    fn is_zero(&self, x: &FiniteElem) -> bool {
        x.v.is_empty()
    }

    fn is_odd(&self, x: &FiniteElem) -> bool {
        x.odd
    }

    fn add_scaled(&self, x: &FiniteElem, c: &Scalar, y: &FiniteElem) -> FiniteElem {
        let mut v = x.v.clone();
        axpy(&mut v, c, &y.v);
        let odd = if x.v.is_empty() { y.odd } else { x.odd };
        FiniteElem { odd, v }
    }

    fn d(&self, x: &FiniteElem) -> FiniteElem {
        let mut v = SparseVec::new();
        for (i, c) in &x.v {
            if let Some(di) = self.d.get(i) {
                axpy(&mut v, c, di);
            }
        }
        FiniteElem { odd: !x.odd, v }
    }

    fn bracket(&self, x: &FiniteElem, y: &FiniteElem) -> FiniteElem {
        let mut v = SparseVec::new();
        for (i, a) in &x.v {
            for (j, b) in &y.v {
                axpy(&mut v, &(a * b), &self.pair(*i, *j));
            }
        }
        FiniteElem { odd: x.odd ^ y.odd, v }
    }

    fn max_weight(&self, x: &FiniteElem) -> Option<usize> {
        x.v.keys().map(|&i| self.weight[i]).max()
    }

    fn coords(&self, x: &FiniteElem, w: usize) -> SparseVec {
        let idx = self.at_weight(w);
        x.v.iter()
            .filter_map(|(i, c)| idx.iter().position(|j| j == i).map(|k| (k, c.clone())))
            .collect()
    }

    fn from_coords(&self, v: &SparseVec, w: usize, odd: bool) -> FiniteElem {
        let idx = self.at_weight(w);
        FiniteElem { odd, v: v.iter().map(|(k, c)| (idx[*k], c.clone())).collect() }
    }

    fn unknowns(&self, w: usize, odd: bool) -> Vec<SparseVec> {
        self.at_weight(w)
            .iter()
            .enumerate()
            .filter(|(_, &i)| self.odd[i] == odd)
            .map(|(k, _)| [(k, Scalar::one())].into_iter().collect())
            .collect()
    }

    fn admissible(&self, _: &FiniteElem) -> bool {
        true
    }

    fn coord_name(&self, w: usize, i: usize) -> String {
        self.names[self.at_weight(w)[i]].clone()
    }
}

/// Odd cohomology representatives of weight ≤ `max_weight`, from HH or
/// from the cyclic cohomology: the first-order deformations to probe.
pub fn tangent_classes(
    a: &Algebra,
    max_weight: usize,
    cyclic: bool,
) -> Result<Vec<Cochain>, crate::homology::HomologyError> {
    let mut out = Vec::new();
    for n in 0..=max_weight {
        let r = if cyclic {
            crate::homology::cyclic_cohomology(a, n, n + 1, Variant::Normalized)?
        } else {
            crate::homology::hh(a, n, n + 1)?
        };
        out.extend(r.representatives.into_iter().filter(|c| c.is_odd()));
    }
    Ok(out)
}
