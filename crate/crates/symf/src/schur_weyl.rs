//! Brute-force exact verification of Schur-Weyl duality at desk scale: the
//! commutant of the diagonal matrix-monoid action on (k^N)^{⊗n}, the span
//! of the permutation operators inside it, and equivariant hom dimensions
//! between Young-symmetrizer images.

use std::collections::HashMap;

use num::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{kernel_combinations_sparse, Echelon, SparseVec};
use crate::partition::{partitions_of, Partition};
use crate::Rational;

/// Default bound on the tensor space dimension N^n.
pub const DEFAULT_SIZE_CAP: usize = 256;

/// A linear endomorphism of (k^N)^{⊗n}, stored sparsely. Basis words are
/// length-n sequences over {1..N}; internally a word is encoded as a
/// base-N integer.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorOperator {
    nvars: usize,
    degree: usize,
    entries: HashMap<(usize, usize), Rational>,
}

impl TensorOperator {
    pub fn zero(nvars: usize, degree: usize) -> Self {
        TensorOperator {
            nvars,
            degree,
            entries: HashMap::new(),
        }
    }

    pub fn identity(nvars: usize, degree: usize) -> Self {
        let mut op = Self::zero(nvars, degree);
        for w in 0..op.dim() {
            op.add_entry_coded(w, w, Rational::one());
        }
        op
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Dimension of the underlying tensor space, N^n.
    pub fn dim(&self) -> usize {
        self.nvars.pow(self.degree as u32)
    }

    pub fn num_entries(&self) -> usize {
        self.entries.len()
    }

    fn encode(&self, word: &[usize]) -> usize {
        debug_assert_eq!(word.len(), self.degree);
        word.iter().fold(0, |acc, &l| {
            debug_assert!(l >= 1 && l <= self.nvars);
            acc * self.nvars + (l - 1)
        })
    }

    fn decode(&self, mut code: usize) -> Vec<usize> {
        let mut word = vec![0usize; self.degree];
        for k in (0..self.degree).rev() {
            word[k] = code % self.nvars + 1;
            code /= self.nvars;
        }
        word
    }

    pub fn entry(&self, row: &[usize], col: &[usize]) -> Rational {
        self.entries
            .get(&(self.encode(row), self.encode(col)))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn add_entry(&mut self, row: &[usize], col: &[usize], v: Rational) {
        let r = self.encode(row);
        let c = self.encode(col);
        self.add_entry_coded(r, c, v);
    }

    fn add_entry_coded(&mut self, r: usize, c: usize, v: Rational) {
        if v.is_zero() {
            return;
        }
        match self.entries.entry((r, c)) {
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(v);
            }
            std::collections::hash_map::Entry::Occupied(mut e) => {
                let sum = e.get() + v;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn compose(&self, other: &TensorOperator) -> TensorOperator {
        assert_eq!(self.nvars, other.nvars);
        assert_eq!(self.degree, other.degree);
        let mut out = Self::zero(self.nvars, self.degree);
        let mut other_by_row: HashMap<usize, Vec<(usize, &Rational)>> = HashMap::new();
        for ((r, c), v) in &other.entries {
            other_by_row.entry(*r).or_default().push((*c, v));
        }
        for ((r, c), v) in &self.entries {
            if let Some(row) = other_by_row.get(c) {
                for (cc, w) in row {
                    out.add_entry_coded(*r, *cc, v * *w);
                }
            }
        }
        out
    }

    /// Flattens into a vector over coordinates row * dim + col.
    fn to_vec(&self) -> SparseVec {
        let d = self.dim();
        let mut v = SparseVec::new();
        for ((r, c), val) in &self.entries {
            v.add_entry(r * d + c, val.clone());
        }
        v
    }

    fn from_vec(nvars: usize, degree: usize, v: &SparseVec) -> TensorOperator {
        let mut op = Self::zero(nvars, degree);
        let d = op.dim();
        for (idx, val) in v.iter() {
            op.add_entry_coded(idx / d, idx % d, val.clone());
        }
        op
    }

    /// Sorted entries with decoded words, for display and serialization.
    pub fn sorted_entries(&self) -> Vec<(Vec<usize>, Vec<usize>, Rational)> {
        let mut keys: Vec<_> = self.entries.keys().copied().collect();
        keys.sort_unstable();
        keys.into_iter()
            .map(|(r, c)| {
                (
                    self.decode(r),
                    self.decode(c),
                    self.entries[&(r, c)].clone(),
                )
            })
            .collect()
    }
}

impl Serialize for TensorOperator {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        #[derive(Serialize)]
        struct EntryRepr {
            row: Vec<usize>,
            col: Vec<usize>,
            num: String,
            den: String,
        }
        let mut st = serializer.serialize_struct("TensorOperator", 3)?;
        st.serialize_field("N", &self.nvars)?;
        st.serialize_field("n", &self.degree)?;
        let entries: Vec<EntryRepr> = self
            .sorted_entries()
            .into_iter()
            .map(|(row, col, v)| EntryRepr {
                row,
                col,
                num: v.numer().to_string(),
                den: v.denom().to_string(),
            })
            .collect();
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}

/// Exact description of the commutant of the diagonal action on the n-th
/// tensor power of k^N.
#[derive(Clone, Debug, Serialize)]
pub struct CommutantReport {
    #[serde(rename = "N")]
    pub nvars: usize,
    #[serde(rename = "n")]
    pub degree: usize,
    pub dimension: usize,
    pub is_isomorphism: bool,
    pub permutation_image_dimension: usize,
    #[serde(skip)]
    pub basis: Vec<TensorOperator>,
}

fn check_size_cap(nvars: usize, degree: usize, cap: usize) -> Result<usize> {
    if nvars == 0 || degree == 0 {
        return Err(Error::SizeCapExceeded { size: 0, cap });
    }
    let mut size: usize = 1;
    for _ in 0..degree {
        size = size.saturating_mul(nvars);
        if size > cap {
            return Err(Error::SizeCapExceeded { size, cap });
        }
    }
    Ok(size)
}

/// For every multiset {A_1,…,A_n} of matrix units E_{ij}, the symmetrized
/// operator Σ_{σ ∈ S_n} A_{σ(1)} ⊗ ⋯ ⊗ A_{σ(n)}. In characteristic zero
/// the linear span of these equals span{L^{⊗n} : L ∈ M(N,Q)}.
pub fn polarized_generators(nvars: usize, degree: usize) -> Result<Vec<TensorOperator>> {
    polarized_generators_with_cap(nvars, degree, DEFAULT_SIZE_CAP)
}

pub fn polarized_generators_with_cap(
    nvars: usize,
    degree: usize,
    cap: usize,
) -> Result<Vec<TensorOperator>> {
    use itertools::Itertools;
    check_size_cap(nvars, degree, cap)?;
    let units: Vec<(usize, usize)> = (1..=nvars)
        .flat_map(|i| (1..=nvars).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for multiset in (0..units.len()).combinations_with_replacement(degree) {
        let mut op = TensorOperator::zero(nvars, degree);
        for perm in (0..degree).permutations(degree) {
            let mut row = vec![0usize; degree];
            let mut col = vec![0usize; degree];
            for (slot, &which) in perm.iter().enumerate() {
                let (i, j) = units[multiset[which]];
                row[slot] = i;
                col[slot] = j;
            }
            op.add_entry(&row, &col, Rational::one());
        }
        out.push(op);
    }
    Ok(out)
}

/// The operator permuting tensor factors: e_{w(1)}⊗⋯⊗e_{w(n)} maps to
/// e_{w(σ⁻¹(1))}⊗⋯⊗e_{w(σ⁻¹(n))}, making σ ↦ operator(σ) a homomorphism.
pub fn permutation_operator(
    nvars: usize,
    degree: usize,
    sigma: &[usize],
) -> Result<TensorOperator> {
    if sigma.len() != degree {
        return Err(Error::NotAPermutation(degree));
    }
    let mut seen = vec![false; degree];
    for &s in sigma {
        if s < 1 || s > degree || seen[s - 1] {
            return Err(Error::NotAPermutation(degree));
        }
        seen[s - 1] = true;
    }
    // sinv[k] = position j with sigma[j] = k+1
    let mut sinv = vec![0usize; degree];
    for (j, &s) in sigma.iter().enumerate() {
        sinv[s - 1] = j;
    }
    let mut op = TensorOperator::zero(nvars, degree);
    for code in 0..op.dim() {
        let w = op.decode(code);
        let row: Vec<usize> = (0..degree).map(|k| w[sinv[k]]).collect();
        let r = op.encode(&row);
        op.add_entry_coded(r, code, Rational::one());
    }
    Ok(op)
}

fn all_permutation_words(n: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    (1..=n).permutations(n).collect()
}

// ψ ↦ ψG - Gψ as a flattened sparse vector, using row/col indexes of G.
struct OpIndex {
    by_row: HashMap<usize, Vec<(usize, Rational)>>,
    by_col: HashMap<usize, Vec<(usize, Rational)>>,
}

impl OpIndex {
    fn new(g: &TensorOperator) -> Self {
        let mut by_row: HashMap<usize, Vec<(usize, Rational)>> = HashMap::new();
        let mut by_col: HashMap<usize, Vec<(usize, Rational)>> = HashMap::new();
        for ((r, c), v) in &g.entries {
            by_row.entry(*r).or_default().push((*c, v.clone()));
            by_col.entry(*c).or_default().push((*r, v.clone()));
        }
        OpIndex { by_row, by_col }
    }

    fn commutator(&self, psi: &SparseVec, d: usize) -> SparseVec {
        let mut out = SparseVec::new();
        for (idx, v) in psi.iter() {
            let (r, c) = (idx / d, idx % d);
            // (ψ G) entries: ψ_{rc} G_{c c'}
            if let Some(row) = self.by_row.get(&c) {
                for (cc, w) in row {
                    out.add_entry(r * d + cc, v * w);
                }
            }
            // -(G ψ) entries: G_{r' r} ψ_{rc}
            if let Some(col) = self.by_col.get(&r) {
                for (rr, w) in col {
                    out.add_entry(rr * d + c, -(v * w));
                }
            }
        }
        out
    }
}

/// Intersects the kernels of ψ ↦ [ψ, G] over the given constraint
/// operators by incremental exact elimination, starting from the full
/// endomorphism space. Returns a basis of the common kernel.
pub fn commutant_of_operators<'a>(
    nvars: usize,
    degree: usize,
    generators: impl IntoIterator<Item = &'a TensorOperator>,
) -> Vec<TensorOperator> {
    let d = nvars.pow(degree as u32);
    let mut basis: Vec<SparseVec> = (0..d * d)
        .map(|i| SparseVec::singleton(i, Rational::one()))
        .collect();
    for g in generators {
        let idx = OpIndex::new(g);
        let images: Vec<SparseVec> = basis.iter().map(|b| idx.commutator(b, d)).collect();
        if images.iter().all(|w| w.is_zero()) {
            continue;
        }
        let combos = kernel_combinations_sparse(&images);
        let mut next = Vec::with_capacity(combos.len());
        for combo in combos {
            let mut v = SparseVec::new();
            for (i, c) in combo.iter() {
                v.axpy(c, &basis[i]);
            }
            next.push(v);
        }
        basis = next;
    }
    basis
        .into_iter()
        .map(|v| TensorOperator::from_vec(nvars, degree, &v))
        .collect()
}

fn factorial(n: usize) -> usize {
    (2..=n).product::<usize>().max(1)
}

/// Commutant dimension predicted by character theory: n! when N ≥ n, and
/// Σ (f^λ)² over partitions of n with at most N rows otherwise.
pub fn predicted_commutant_dimension(nvars: usize, degree: usize) -> usize {
    use num::ToPrimitive;
    if nvars >= degree {
        return factorial(degree);
    }
    partitions_of(degree, Some(nvars))
        .expect("degree within cap")
        .iter()
        .map(|lam| {
            let f = lam.hook_dimension();
            (&f * &f).to_usize().expect("desk scale")
        })
        .sum()
}

/// Computes the commutant of all diagonal monoid actions on (k^N)^{⊗n}
/// from the polarized generator set, reporting its dimension, a basis, and
/// how much of it the permutation operators span.
pub fn commutant(nvars: usize, degree: usize) -> Result<CommutantReport> {
    commutant_with_cap(nvars, degree, DEFAULT_SIZE_CAP)
}

pub fn commutant_with_cap(nvars: usize, degree: usize, cap: usize) -> Result<CommutantReport> {
    let d = check_size_cap(nvars, degree, cap)?;
    let mut gens = polarized_generators_with_cap(nvars, degree, cap)?;
    // diagonal-unit generators first: their constraints are single-variable
    // and carve the space down cheaply before any real elimination
    gens.sort_by_key(|g| {
        g.entries
            .keys()
            .next()
            .map(|&(r, c)| if r == c { 0 } else { 1 })
            .unwrap_or(0)
    });
    let basis = commutant_of_operators(nvars, degree, gens.iter());
    let dimension = basis.len();

    let mut span = Echelon::new();
    for b in &basis {
        span.insert(b.to_vec());
    }
    let mut perm_span = Echelon::new();
    let mut permutation_image_dimension = 0;
    for word in all_permutation_words(degree) {
        let op = permutation_operator(nvars, degree, &word)?;
        let v = op.to_vec();
        debug_assert!(
            span.contains(v.clone()),
            "permutation operator outside commutant"
        );
        if perm_span.insert(v) {
            permutation_image_dimension += 1;
        }
    }
    let nfact = factorial(degree);
    let is_isomorphism = dimension == nfact && permutation_image_dimension == nfact;
    let _ = d;
    Ok(CommutantReport {
        nvars,
        degree,
        dimension,
        is_isomorphism,
        permutation_image_dimension,
        basis,
    })
}

// ---------------------------------------------------------------------
// Young symmetrizer images and equivariant hom dimensions
// ---------------------------------------------------------------------

// permutations of 0..n preserving the given blocks, as full words
fn block_permutations(blocks: &[Vec<usize>], n: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    let mut out = vec![(0..n).collect::<Vec<usize>>()];
    for block in blocks {
        let mut next = Vec::new();
        for base in &out {
            for perm in block.iter().permutations(block.len()) {
                let mut w = base.clone();
                for (&slot, &&image) in block.iter().zip(perm.iter()) {
                    w[slot] = base[image];
                }
                next.push(w);
            }
        }
        out = next;
    }
    out
}

fn word_parity(w: &[usize]) -> bool {
    let mut inv = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                inv += 1;
            }
        }
    }
    inv % 2 == 1
}

/// The Young symmetrizer for λ with the standard row-major filling, as an
/// operator on (k^N)^{⊗|λ|}: row symmetrizer times column antisymmetrizer.
/// No normalization is applied; only the image matters.
pub fn young_symmetrizer(nvars: usize, lambda: &Partition) -> Result<TensorOperator> {
    let n = lambda.degree();
    // standard filling: cell (i,j) gets consecutive numbers row by row
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut next = 0usize;
    for &r in lambda.parts() {
        rows.push((next..next + r as usize).collect());
        next += r as usize;
    }
    let ncols = lambda.parts().first().copied().unwrap_or(0) as usize;
    let mut cols: Vec<Vec<usize>> = vec![Vec::new(); ncols];
    for row in &rows {
        for (j, &cell) in row.iter().enumerate() {
            cols[j].push(cell);
        }
    }
    let mut row_sym = TensorOperator::zero(nvars, n);
    for w in block_permutations(&rows, n) {
        let word: Vec<usize> = w.iter().map(|&x| x + 1).collect();
        let op = permutation_operator(nvars, n, &word)?;
        for ((r, c), v) in &op.entries {
            row_sym.add_entry_coded(*r, *c, v.clone());
        }
    }
    let mut col_antisym = TensorOperator::zero(nvars, n);
    for w in block_permutations(&cols, n) {
        let sign = if word_parity(&w) {
            -Rational::one()
        } else {
            Rational::one()
        };
        let word: Vec<usize> = w.iter().map(|&x| x + 1).collect();
        let op = permutation_operator(nvars, n, &word)?;
        for ((r, c), v) in &op.entries {
            col_antisym.add_entry_coded(*r, *c, v * &sign);
        }
    }
    Ok(row_sym.compose(&col_antisym))
}

// independent columns of an operator, as dense vectors
fn image_basis(op: &TensorOperator) -> Vec<Vec<Rational>> {
    let d = op.dim();
    let mut cols: Vec<Vec<Rational>> = vec![vec![Rational::zero(); d]; d];
    for ((r, c), v) in &op.entries {
        cols[*c][*r] = v.clone();
    }
    let mut ech = Echelon::new();
    let mut out = Vec::new();
    for col in cols {
        let mut sv = SparseVec::new();
        for (i, x) in col.iter().enumerate() {
            sv.add_entry(i, x.clone());
        }
        if ech.insert(sv) {
            out.push(col);
        }
    }
    out
}

// matrix of `op` restricted to the span of `basis` (which it must preserve)
fn restricted_matrix(op: &TensorOperator, basis: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let d = op.dim();
    let k = basis.len();
    let mut mat = vec![vec![Rational::zero(); k]; k];
    for (j, u) in basis.iter().enumerate() {
        let mut v = vec![Rational::zero(); d];
        for ((r, c), w) in &op.entries {
            if !u[*c].is_zero() {
                v[*r] += w * &u[*c];
            }
        }
        let coords = crate::linalg::solve_in_span(basis, &v)
            .expect("generator preserves the symmetrizer image");
        for (i, x) in coords.into_iter().enumerate() {
            mat[i][j] = x;
        }
    }
    mat
}

/// Exact dimension of the space of matrix-monoid-equivariant linear maps
/// from the Young-symmetrizer image for λ to the one for μ.
pub fn cross_degree_hom_dim(nvars: usize, lambda: &Partition, mu: &Partition) -> Result<usize> {
    cross_degree_hom_dim_with_cap(nvars, lambda, mu, DEFAULT_SIZE_CAP)
}

pub fn cross_degree_hom_dim_with_cap(
    nvars: usize,
    lambda: &Partition,
    mu: &Partition,
    cap: usize,
) -> Result<usize> {
    let a = lambda.degree();
    let b = mu.degree();
    check_size_cap(nvars, a.max(1), cap)?;
    check_size_cap(nvars, b.max(1), cap)?;
    let src = image_basis(&young_symmetrizer(nvars, lambda)?);
    let dst = image_basis(&young_symmetrizer(nvars, mu)?);
    let ku = src.len();
    let kw = dst.len();
    if ku == 0 || kw == 0 {
        return Ok(0);
    }
    let unknowns = kw * ku; // F[w][u]
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    if a == b {
        // F A_G = B_G F for every polarized generator G of degree a
        for g in polarized_generators_with_cap(nvars, a, cap)? {
            let ag = restricted_matrix(&g, &src);
            let bg = restricted_matrix(&g, &dst);
            for w in 0..kw {
                for u in 0..ku {
                    let mut row = vec![Rational::zero(); unknowns];
                    for j in 0..ku {
                        row[w * ku + j] += &ag[j][u];
                    }
                    for r in 0..kw {
                        row[r * ku + u] -= &bg[w][r];
                    }
                    rows.push(row);
                }
            }
        }
    } else {
        // degree mismatch: matching polynomial degrees in L forces both
        // F ∘ G = 0 (degree-a coefficients) and H ∘ F = 0 (degree-b)
        for g in polarized_generators_with_cap(nvars, a, cap)? {
            let ag = restricted_matrix(&g, &src);
            for w in 0..kw {
                for u in 0..ku {
                    let mut row = vec![Rational::zero(); unknowns];
                    for j in 0..ku {
                        row[w * ku + j] += &ag[j][u];
                    }
                    rows.push(row);
                }
            }
        }
        for h in polarized_generators_with_cap(nvars, b, cap)? {
            let bh = restricted_matrix(&h, &dst);
            for w in 0..kw {
                for u in 0..ku {
                    let mut row = vec![Rational::zero(); unknowns];
                    for r in 0..kw {
                        row[r * ku + u] += &bh[w][r];
                    }
                    rows.push(row);
                }
            }
        }
    }
    Ok(crate::linalg::nullspace_dense(&rows, unknowns).len())
}
