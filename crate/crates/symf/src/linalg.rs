//! Exact rational linear algebra: dense solves for the small transition
//! matrices and sparse incremental elimination for the commutant oracle.

use std::collections::BTreeMap;

use num::{BigRational, One, Zero};

type Q = BigRational;

/// Sparse vector over arbitrary coordinate indices.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparseVec {
    entries: BTreeMap<usize, Q>,
}

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(idx: usize, v: Q) -> Self {
        let mut s = Self::new();
        s.add_entry(idx, v);
        s
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn add_entry(&mut self, idx: usize, v: Q) {
        if v.is_zero() {
            return;
        }
        match self.entries.entry(idx) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(v);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + v;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn get(&self, idx: usize) -> Q {
        self.entries.get(&idx).cloned().unwrap_or_else(Q::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Q)> {
        self.entries.iter().map(|(k, v)| (*k, v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// First (lowest-index) nonzero coordinate.
    pub fn leading(&self) -> Option<usize> {
        self.entries.keys().next().copied()
    }

    /// self += c * other
    pub fn axpy(&mut self, c: &Q, other: &SparseVec) {
        if c.is_zero() {
            return;
        }
        for (idx, v) in other.entries.iter() {
            self.add_entry(*idx, c * v);
        }
    }

    pub fn scale(&mut self, c: &Q) {
        if c.is_zero() {
            self.entries.clear();
            return;
        }
        for v in self.entries.values_mut() {
            *v *= c;
        }
    }
}

/// Row echelon accumulator keyed by pivot column; rows are pivot-normalized.
#[derive(Default, Clone)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current rows.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        loop {
            let Some(lead) = v.leading() else { return v };
            let Some(row) = self.rows.get(&lead) else {
                return v;
            };
            let c = -v.get(lead);
            v.axpy(&c, row);
        }
    }

    /// Inserts a vector; returns true if it increased the rank.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let mut v = self.reduce(v);
        let Some(lead) = v.leading() else {
            return false;
        };
        let inv = v.get(lead).recip();
        v.scale(&inv);
        self.rows.insert(lead, v);
        true
    }

    /// True iff `v` lies in the row span.
    pub fn contains(&self, v: SparseVec) -> bool {
        self.reduce(v).is_zero()
    }
}

/// Given image vectors w_i, returns a basis of {c : sum_i c_i w_i = 0},
/// each kernel element as a dense coefficient vector over i.
pub fn kernel_combinations(images: &[SparseVec]) -> Vec<Vec<Q>> {
    let k = images.len();
    // echelon on the image part, tracking the combination part separately
    let mut rows: BTreeMap<usize, (SparseVec, SparseVec)> = BTreeMap::new();
    let mut kernel = Vec::new();
    for (i, w) in images.iter().enumerate() {
        let mut vec = w.clone();
        let mut combo = SparseVec::singleton(i, Q::one());
        loop {
            let Some(lead) = vec.leading() else { break };
            let Some((rvec, rcombo)) = rows.get(&lead) else {
                break;
            };
            let c = -vec.get(lead);
            vec.axpy(&c, rvec);
            combo.axpy(&c, rcombo);
        }
        match vec.leading() {
            None => {
                let mut dense = vec![Q::zero(); k];
                for (idx, v) in combo.iter() {
                    dense[idx] = v.clone();
                }
                kernel.push(dense);
            }
            Some(lead) => {
                let inv = vec.get(lead).recip();
                vec.scale(&inv);
                combo.scale(&inv);
                rows.insert(lead, (vec, combo));
            }
        }
    }
    kernel
}

/// Like [`kernel_combinations`], but returns each kernel element as a
/// sparse combination, which matters when the input list is large.
pub fn kernel_combinations_sparse(images: &[SparseVec]) -> Vec<SparseVec> {
    let mut rows: BTreeMap<usize, (SparseVec, SparseVec)> = BTreeMap::new();
    let mut kernel = Vec::new();
    for (i, w) in images.iter().enumerate() {
        let mut vec = w.clone();
        let mut combo = SparseVec::singleton(i, Q::one());
        loop {
            let Some(lead) = vec.leading() else { break };
            let Some((rvec, rcombo)) = rows.get(&lead) else {
                break;
            };
            let c = -vec.get(lead);
            vec.axpy(&c, rvec);
            combo.axpy(&c, rcombo);
        }
        match vec.leading() {
            None => kernel.push(combo),
            Some(lead) => {
                let inv = vec.get(lead).recip();
                vec.scale(&inv);
                combo.scale(&inv);
                rows.insert(lead, (vec, combo));
            }
        }
    }
    kernel
}

/// Expresses `v` as a combination of the given (independent) columns;
/// None if `v` is outside their span.
pub fn solve_in_span(cols: &[Vec<Q>], v: &[Q]) -> Option<Vec<Q>> {
    let k = cols.len();
    let d = v.len();
    debug_assert!(cols.iter().all(|c| c.len() == d));
    // augmented rows: one per coordinate, k unknowns plus rhs
    let mut ech: BTreeMap<usize, (SparseVec, Q)> = BTreeMap::new();
    for r in 0..d {
        let mut row = SparseVec::new();
        for (j, col) in cols.iter().enumerate() {
            row.add_entry(j, col[r].clone());
        }
        let mut rhs = v[r].clone();
        loop {
            let Some(lead) = row.leading() else { break };
            let Some((rrow, rrhs)) = ech.get(&lead) else {
                break;
            };
            let c = -row.get(lead);
            row.axpy(&c, rrow);
            rhs += &c * rrhs;
        }
        match row.leading() {
            None => {
                if !rhs.is_zero() {
                    return None; // inconsistent: v outside the span
                }
            }
            Some(lead) => {
                let inv = row.get(lead).recip();
                row.scale(&inv);
                rhs *= &inv;
                ech.insert(lead, (row, rhs));
            }
        }
    }
    let mut x = vec![Q::zero(); k];
    for (&p, (row, rhs)) in ech.iter().rev() {
        let mut acc = rhs.clone();
        for (j, c) in row.iter() {
            if j != p {
                acc -= c * &x[j];
            }
        }
        x[p] = acc;
    }
    // independent columns give a unique solution; verify in debug builds
    debug_assert!({
        (0..d).all(|r| {
            let mut s = Q::zero();
            for (j, col) in cols.iter().enumerate() {
                s += &x[j] * &col[r];
            }
            s == v[r]
        })
    });
    Some(x)
}

/// Solves the square system A x = b exactly; None if A is singular.
pub fn solve_dense(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let n = a.len();
    debug_assert!(a.iter().all(|r| r.len() == n) && b.len() == n);
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let inv = m[col][col].recip();
        for v in m[col][col..].iter_mut() {
            *v *= &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let c = m[r][col].clone();
                for j in col..=n {
                    let t = &c * &m[col][j];
                    m[r][j] -= t;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Rank of a dense matrix.
pub fn rank_dense(rows: &[Vec<Q>]) -> usize {
    let mut ech = Echelon::new();
    let mut rank = 0;
    for row in rows {
        let mut v = SparseVec::new();
        for (j, x) in row.iter().enumerate() {
            v.add_entry(j, x.clone());
        }
        if ech.insert(v) {
            rank += 1;
        }
    }
    rank
}

/// Nullspace basis of a dense constraint matrix (rows are equations).
pub fn nullspace_dense(rows: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let mut ech = Echelon::new();
    for row in rows {
        let mut v = SparseVec::new();
        for (j, x) in row.iter().enumerate() {
            v.add_entry(j, x.clone());
        }
        ech.insert(v);
    }
    let pivots: Vec<usize> = ech.rows.keys().copied().collect();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivots.contains(&free) {
            continue;
        }
        let mut x = vec![Q::zero(); ncols];
        x[free] = Q::one();
        // back-substitute pivot coordinates
        for (&p, row) in ech.rows.iter().rev() {
            let mut acc = Q::zero();
            for (j, c) in row.iter() {
                if j != p {
                    acc += c * &x[j];
                }
            }
            x[p] = -acc;
        }
        basis.push(x);
    }
    basis
}
