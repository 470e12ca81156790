use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::Scalar;

/// A sparse vector: index to nonzero coefficient.
pub type SparseVec = BTreeMap<usize, Scalar>;

/// `v += a * w`, dropping entries that cancel.
pub fn axpy(v: &mut SparseVec, a: &Scalar, w: &SparseVec) {
    if a.is_zero() {
        return;
    }
    for (k, x) in w {
        let t = a * x;
        match v.get_mut(k) {
            Some(e) => {
                *e += &t;
                if e.is_zero() {
                    v.remove(k);
                }
            }
            None => {
                if !t.is_zero() {
                    v.insert(*k, t);
                }
            }
        }
    }
}

pub fn dot(a: &SparseVec, b: &SparseVec) -> Scalar {
    let (small, big) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let mut s = Scalar::zero();
    for (k, x) in small {
        if let Some(y) = big.get(k) {
            s += &(x * y);
        }
    }
    s
}

fn scale(v: &mut SparseVec, a: &Scalar) {
    for x in v.values_mut() {
        *x = &*x * a;
    }
}

/// A sparse matrix stored as a map from `(row, col)` to nonzero entries.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: BTreeMap<(usize, usize), Scalar>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> SparseMatrix {
        SparseMatrix { rows, cols, entries: BTreeMap::new() }
    }

    pub fn set(&mut self, r: usize, c: usize, x: Scalar) {
        assert!(r < self.rows && c < self.cols, "index out of range");
        if x.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), x);
        }
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.entries.get(&(r, c)).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn from_columns(rows: usize, cols: &[SparseVec]) -> SparseMatrix {
        let mut m = SparseMatrix::new(rows, cols.len());
        for (c, v) in cols.iter().enumerate() {
            for (r, x) in v {
                m.set(*r, c, x.clone());
            }
        }
        m
    }

    pub fn columns(&self) -> Vec<SparseVec> {
        let mut out = alloc::vec![SparseVec::new(); self.cols];
        for ((r, c), x) in &self.entries {
            out[*c].insert(*r, x.clone());
        }
        out
    }

    pub fn row_vectors(&self) -> Vec<SparseVec> {
        let mut out = alloc::vec![SparseVec::new(); self.rows];
        for ((r, c), x) in &self.entries {
            out[*r].insert(*c, x.clone());
        }
        out
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut t = SparseMatrix::new(self.cols, self.rows);
        for ((r, c), x) in &self.entries {
            t.entries.insert((*c, *r), x.clone());
        }
        t
    }

    pub fn mul_vec(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for ((r, c), x) in &self.entries {
            if let Some(y) = v.get(c) {
                axpy(&mut out, &Scalar::one(), &[(*r, x * y)].into_iter().collect());
            }
        }
        out
    }
}

/// Outcome of inserting a vector into an [`Echelon`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Insert {
    /// The vector became a new pivot at the given index.
    Independent(usize),
    /// The vector was dependent; carries the relation among inserted
    /// vectors (tags) that sums to zero, when tracking is on.
    Dependent(SparseVec),
}

/// Incremental row echelon form with lexicographic (smallest index) pivots.
///
/// Each pivot is normalized to have leading coefficient one, so a reduction
/// step costs one multiply-subtract and no divisions. Optionally tracks, for
/// every pivot, the combination of inserted vectors it came from.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, (SparseVec, SparseVec)>,
    track: bool,
}

impl Echelon {
    pub fn new() -> Echelon {
        Echelon::default()
    }

    pub fn tracking() -> Echelon {
        Echelon { pivots: BTreeMap::new(), track: true }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_indices(&self) -> impl Iterator<Item = &usize> {
        self.pivots.keys()
    }

    /// Reduces `v` against the pivots. Returns the remainder and, when
    /// tracking, the combination `c` with `v = remainder + sum c_t * input_t`.
    pub fn reduce(&self, v: &SparseVec) -> (SparseVec, SparseVec) {
        let mut r = v.clone();
        let mut combo = SparseVec::new();
        let mut cursor = 0usize;
        loop {
            let hit = r
                .range(cursor..)
                .find(|(k, _)| self.pivots.contains_key(k))
                .map(|(k, x)| (*k, x.clone()));
            let Some((k, a)) = hit else { break };
            let (p, pc) = &self.pivots[&k];
            axpy(&mut r, &-a.clone(), p);
            if self.track {
                axpy(&mut combo, &a, pc);
            }
            cursor = k + 1;
        }
        (r, combo)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).0.is_empty()
    }

    /// Inserts `v`, tagged `tag` for combination tracking.
    pub fn insert(&mut self, v: &SparseVec, tag: usize) -> Insert {
        let (mut r, combo) = self.reduce(v);
        let mut rel = SparseVec::new();
        if self.track {
            rel.insert(tag, Scalar::one());
            axpy(&mut rel, &-Scalar::one(), &combo);
        }
        let Some((&lead, x)) = r.iter().next() else {
            return Insert::Dependent(rel);
        };
        let inv = x.inv().expect("nonzero leading entry");
        scale(&mut r, &inv);
        scale(&mut rel, &inv);
        self.pivots.insert(lead, (r, rel));
        Insert::Independent(lead)
    }
}

/// Rank, inserting rows sparsest first (ties by row index).
pub fn rank(m: &SparseMatrix) -> usize {
    let mut rows: Vec<(usize, SparseVec)> = m.row_vectors().into_iter().enumerate().collect();
    rows.sort_by_key(|(i, v)| (v.len(), *i));
    let mut e = Echelon::new();
    for (i, v) in &rows {
        e.insert(v, *i);
    }
    e.rank()
}

/// A basis of `{x : m x = 0}` in column coordinates.
pub fn kernel(m: &SparseMatrix) -> Vec<SparseVec> {
    let mut e = Echelon::tracking();
    let mut out = Vec::new();
    for (j, c) in m.columns().iter().enumerate() {
        if let Insert::Dependent(rel) = e.insert(c, j) {
            out.push(rel);
        }
    }
    out
}

/// Some `x` with `m x = b`, if one exists.
pub fn solve(m: &SparseMatrix, b: &SparseVec) -> Option<SparseVec> {
    let mut e = Echelon::tracking();
    for (j, c) in m.columns().iter().enumerate() {
        e.insert(c, j);
    }
    let (r, x) = e.reduce(b);
    if r.is_empty() {
        Some(x)
    } else {
        None
    }
}

/// Either a solution of `m x = b` or a certificate that none exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Solved(SparseVec),
    /// A row functional `f` with `f m = 0` and `f . b != 0`.
    Obstructed(SparseVec),
}

pub fn cobound_certificate(m: &SparseMatrix, b: &SparseVec) -> Solution {
    if let Some(x) = solve(m, b) {
        return Solution::Solved(x);
    }
    // f solves [m^T; b^T] f = e_last.
    let mut cols = m.columns();
    cols.push(b.clone());
    let n = SparseMatrix::from_columns(m.rows, &cols).transpose();
    let target: SparseVec = [(m.cols, Scalar::one())].into_iter().collect();
    let f = solve(&n, &target).expect("b outside the column space admits a separating functional");
    Solution::Obstructed(f)
}
