//! Finite-variable truncations: sparse (Laurent) polynomials in N
//! variables, expansion of symmetric functions, and the bounded-degree
//! faithfulness checks.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::symfunc::{Basis, SymFunc};
use crate::tableaux::ssyt_contents;
use crate::{Integer, Rational};

/// Sparse polynomial over Z in a fixed number of variables; exponent
/// vectors are dense and always have exactly `nvars` entries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyN {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Integer>,
}

/// As `PolyN` but with integer (possibly negative) exponents.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentPolyN {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, Integer>,
}

impl PolyN {
    pub fn zero(nvars: usize) -> Self {
        PolyN {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], Integer::one());
        p
    }

    /// The variable x_i (1-indexed).
    pub fn variable(nvars: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= nvars);
        let mut exps = vec![0; nvars];
        exps[i - 1] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(exps, Integer::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Integer)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> Integer {
        self.terms.get(exps).cloned().unwrap_or_else(Integer::zero)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Integer) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &PolyN) -> PolyN {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &PolyN) -> PolyN {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &PolyN) -> PolyN {
        assert_eq!(self.nvars, other.nvars);
        let mut out = PolyN::zero(self.nvars);
        for (ea, ca) in self.terms() {
            for (eb, cb) in other.terms() {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exps, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> PolyN {
        let mut out = PolyN::one(self.nvars);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Maximum total degree appearing (0 for the zero polynomial).
    pub fn total_degree(&self) -> usize {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as usize).sum())
            .max()
            .unwrap_or(0)
    }

    /// Sets every variable of index > m to zero (m keeps variables 1..=m).
    pub fn truncate_var(&self, m: usize) -> Result<PolyN> {
        if m >= self.nvars {
            return Err(Error::BadArity {
                have: self.nvars,
                requested: m,
            });
        }
        let mut out = PolyN::zero(m);
        for (e, c) in self.terms() {
            if e[m..].iter().all(|&x| x == 0) {
                out.add_term(e[..m].to_vec(), c.clone());
            }
        }
        Ok(out)
    }

    /// Invariance under all transpositions of adjacent variables.
    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.nvars.saturating_sub(1) {
            for (e, c) in self.terms() {
                let mut swapped = e.clone();
                swapped.swap(i, i + 1);
                if self.coeff(&swapped) != *c {
                    return false;
                }
            }
        }
        true
    }

    /// Coefficient-preserving inclusion into Laurent polynomials.
    pub fn laurent_include(&self) -> LaurentPolyN {
        let mut out = LaurentPolyN::zero(self.nvars);
        for (e, c) in self.terms() {
            out.add_term(e.iter().map(|&x| x as i64).collect(), c.clone());
        }
        out
    }

    fn ordered_terms(&self) -> Vec<(&Vec<u32>, &Integer)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(ea, _), (eb, _)| {
            let da: usize = ea.iter().map(|&x| x as usize).sum();
            let db: usize = eb.iter().map(|&x| x as usize).sum();
            da.cmp(&db).then_with(|| eb.cmp(ea))
        });
        v
    }
}

impl LaurentPolyN {
    pub fn zero(nvars: usize) -> Self {
        LaurentPolyN {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Integer)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exps: Vec<i64>, c: Integer) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn mul(&self, other: &LaurentPolyN) -> LaurentPolyN {
        assert_eq!(self.nvars, other.nvars);
        let mut out = LaurentPolyN::zero(self.nvars);
        for (ea, ca) in self.terms() {
            for (eb, cb) in other.terms() {
                let exps: Vec<i64> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exps, ca * cb);
            }
        }
        out
    }

    /// Sets every variable of index > m to zero.
    pub fn truncate_var(&self, m: usize) -> Result<LaurentPolyN> {
        if m >= self.nvars {
            return Err(Error::BadArity {
                have: self.nvars,
                requested: m,
            });
        }
        let mut out = LaurentPolyN::zero(m);
        for (e, c) in self.terms() {
            if e[m..].iter().all(|&x| x == 0) {
                out.add_term(e[..m].to_vec(), c.clone());
            }
        }
        Ok(out)
    }
}

/// Rational-coefficient accumulator used while expanding elements whose
/// stated coefficients are rational but whose total must be integral.
#[derive(Clone, Debug, Default)]
pub(crate) struct QPolyN {
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl QPolyN {
    fn add_scaled(&mut self, poly: &PolyN, c: &Rational) {
        for (e, v) in poly.terms() {
            let add = c * BigRational::from_integer(v.clone());
            match self.terms.entry(e.clone()) {
                std::collections::btree_map::Entry::Vacant(en) => {
                    if !add.is_zero() {
                        en.insert(add);
                    }
                }
                std::collections::btree_map::Entry::Occupied(mut en) => {
                    let sum = en.get() + add;
                    if sum.is_zero() {
                        en.remove();
                    } else {
                        *en.get_mut() = sum;
                    }
                }
            }
        }
    }

    fn into_integral(self, nvars: usize) -> Result<PolyN> {
        let mut out = PolyN::zero(nvars);
        for (e, c) in self.terms {
            if !c.is_integer() {
                return Err(Error::NonIntegralInput);
            }
            out.add_term(e, c.to_integer());
        }
        Ok(out)
    }
}

/// Expands a single basis element into N variables with integer
/// coefficients. Independent of the basis-conversion machinery.
pub fn expand_basis_element(basis: Basis, lambda: &Partition, nvars: usize) -> PolyN {
    match basis {
        Basis::M => expand_m(lambda, nvars),
        Basis::E => product_over_parts(lambda, nvars, expand_e_row),
        Basis::H => product_over_parts(lambda, nvars, expand_h_row),
        Basis::P => product_over_parts(lambda, nvars, expand_p_row),
        Basis::S => expand_s(lambda, nvars),
    }
}

fn product_over_parts(lambda: &Partition, nvars: usize, row: fn(u32, usize) -> PolyN) -> PolyN {
    let mut out = PolyN::one(nvars);
    for &k in lambda.parts() {
        out = out.mul(&row(k, nvars));
        if out.is_zero() {
            break;
        }
    }
    out
}

fn expand_m(lambda: &Partition, nvars: usize) -> PolyN {
    let mut out = PolyN::zero(nvars);
    if lambda.len() > nvars {
        return out;
    }
    let mut exps = vec![0u32; nvars];
    for (i, &p) in lambda.parts().iter().enumerate() {
        exps[i] = p;
    }
    for perm in distinct_permutations(&exps) {
        out.add_term(perm, Integer::one());
    }
    out
}

// all distinct rearrangements of a multiset
fn distinct_permutations(items: &[u32]) -> Vec<Vec<u32>> {
    let mut sorted = items.to_vec();
    sorted.sort_unstable();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(items.len());
    let mut used = vec![false; items.len()];
    fn rec(sorted: &[u32], used: &mut Vec<bool>, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == sorted.len() {
            out.push(cur.clone());
            return;
        }
        let mut prev: Option<u32> = None;
        for i in 0..sorted.len() {
            if used[i] || prev == Some(sorted[i]) {
                continue;
            }
            prev = Some(sorted[i]);
            used[i] = true;
            cur.push(sorted[i]);
            rec(sorted, used, cur, out);
            cur.pop();
            used[i] = false;
        }
    }
    rec(&sorted, &mut used, &mut cur, &mut out);
    out
}

fn expand_e_row(k: u32, nvars: usize) -> PolyN {
    use itertools::Itertools;
    let mut out = PolyN::zero(nvars);
    if k as usize > nvars {
        return out;
    }
    for subset in (0..nvars).combinations(k as usize) {
        let mut exps = vec![0u32; nvars];
        for i in subset {
            exps[i] = 1;
        }
        out.add_term(exps, Integer::one());
    }
    out
}

fn expand_h_row(k: u32, nvars: usize) -> PolyN {
    use itertools::Itertools;
    let mut out = PolyN::zero(nvars);
    for multiset in (0..nvars).combinations_with_replacement(k as usize) {
        let mut exps = vec![0u32; nvars];
        for i in multiset {
            exps[i] += 1;
        }
        out.add_term(exps, Integer::one());
    }
    out
}

fn expand_p_row(k: u32, nvars: usize) -> PolyN {
    let mut out = PolyN::zero(nvars);
    for i in 0..nvars {
        let mut exps = vec![0u32; nvars];
        exps[i] = k;
        out.add_term(exps, Integer::one());
    }
    out
}

fn expand_s(lambda: &Partition, nvars: usize) -> PolyN {
    let mut out = PolyN::zero(nvars);
    for content in ssyt_contents(lambda, nvars) {
        out.add_term(content, Integer::one());
    }
    out
}

/// f(x₁,…,x_N,0,0,…): the image of f under truncation to N variables.
/// Rational coefficients are accepted only when the expansion clears them.
pub fn expand(f: &SymFunc, nvars: usize) -> Result<PolyN> {
    let mut acc = QPolyN::default();
    for (lam, c) in f.terms() {
        let poly = expand_basis_element(f.basis(), lam, nvars);
        acc.add_scaled(&poly, c);
    }
    acc.into_integral(nvars)
}

/// Inverse of `expand` on symmetric inputs of degree at most nvars; the
/// result is in the m-basis.
pub fn collect(p: &PolyN) -> Result<SymFunc> {
    if !p.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let deg = p.total_degree();
    if !p.is_zero() && deg > p.nvars() {
        return Err(Error::DegreeExceedsVariables {
            degree: deg,
            nvars: p.nvars(),
        });
    }
    let mut out = SymFunc::zero(Basis::M);
    for (e, c) in p.terms() {
        let mut sorted = e.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        if sorted == *e {
            let parts: Vec<u32> = e.iter().copied().filter(|&x| x > 0).collect();
            out.add_term(
                Partition::from_sorted(parts),
                Rational::from_integer(c.clone()),
            );
        }
    }
    Ok(out)
}

/// Outcome of the bounded-degree injectivity check on Schur images.
#[derive(Clone, Debug, Serialize)]
pub struct SplittingReport {
    pub degree: usize,
    pub nvars: usize,
    pub pass: bool,
    /// Pairs of distinct partitions whose expansions coincide; a `None`
    /// second component records a Schur function collapsing to zero.
    pub collisions: Vec<(Partition, Option<Partition>)>,
    /// Partitions violating "expansion vanishes iff rows > nvars".
    pub vanishing_failures: Vec<Partition>,
}

/// Verifies that the Schur expansions {s_λ : |λ| ≤ d} in `nvars` variables
/// (default d) are pairwise distinct and vanish exactly when λ has more
/// rows than variables.
pub fn splitting_injectivity_report(
    d: usize,
    forced_nvars: Option<usize>,
) -> Result<SplittingReport> {
    crate::check_degree_cap(d)?;
    let nvars = forced_nvars.unwrap_or(d);
    let mut images: Vec<(Partition, PolyN)> = Vec::new();
    let mut collisions = Vec::new();
    let mut vanishing_failures = Vec::new();
    for dd in 1..=d {
        for lam in partitions_of(dd, None)? {
            let img = expand_basis_element(Basis::S, &lam, nvars);
            let should_vanish = lam.len() > nvars;
            if img.is_zero() != should_vanish {
                vanishing_failures.push(lam.clone());
            }
            if img.is_zero() {
                collisions.push((lam.clone(), None));
                continue;
            }
            for (mu, other) in &images {
                if *other == img {
                    collisions.push((lam.clone(), Some(mu.clone())));
                }
            }
            images.push((lam, img));
        }
    }
    let pass = collisions.is_empty() && vanishing_failures.is_empty();
    Ok(SplittingReport {
        degree: d,
        nvars,
        pass,
        collisions,
        vanishing_failures,
    })
}

fn fmt_terms(f: &mut fmt::Formatter<'_>, terms: Vec<(Vec<i64>, &Integer)>) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    let mut first = true;
    for (exps, c) in terms {
        let neg = c.is_negative();
        let abs = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
            first = false;
        } else if neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let mut factors: Vec<String> = Vec::new();
        for (i, &e) in exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if e == 1 {
                factors.push(format!("x{}", i + 1));
            } else {
                factors.push(format!("x{}^{}", i + 1, e));
            }
        }
        if factors.is_empty() {
            write!(f, "{abs}")?;
        } else if abs.is_one() {
            write!(f, "{}", factors.join("*"))?;
        } else {
            write!(f, "{}*{}", abs, factors.join("*"))?;
        }
    }
    Ok(())
}

impl fmt::Display for PolyN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .ordered_terms()
            .into_iter()
            .map(|(e, c)| (e.iter().map(|&x| x as i64).collect(), c))
            .collect();
        fmt_terms(f, terms)
    }
}

impl fmt::Display for LaurentPolyN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(ea, _), (eb, _)| {
            let da: i64 = ea.iter().sum();
            let db: i64 = eb.iter().sum();
            da.cmp(&db).then_with(|| eb.cmp(ea))
        });
        let terms = v.into_iter().map(|(e, c)| (e.clone(), c)).collect();
        fmt_terms(f, terms)
    }
}

#[derive(Serialize, Deserialize)]
struct PolyTermRepr<E> {
    exps: Vec<E>,
    coeff: String,
}

impl Serialize for PolyN {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("PolyN", 2)?;
        st.serialize_field("nvars", &self.nvars)?;
        let terms: Vec<PolyTermRepr<u32>> = self
            .ordered_terms()
            .into_iter()
            .map(|(e, c)| PolyTermRepr {
                exps: e.clone(),
                coeff: c.to_string(),
            })
            .collect();
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for PolyN {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            nvars: usize,
            terms: Vec<PolyTermRepr<u32>>,
        }
        let repr = Repr::deserialize(deserializer)?;
        let mut p = PolyN::zero(repr.nvars);
        for t in repr.terms {
            if t.exps.len() != repr.nvars {
                return Err(D::Error::custom("exponent vector length mismatch"));
            }
            let c: BigInt = t.coeff.parse().map_err(D::Error::custom)?;
            p.add_term(t.exps, c);
        }
        Ok(p)
    }
}

impl Serialize for LaurentPolyN {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("LaurentPolyN", 2)?;
        st.serialize_field("nvars", &self.nvars)?;
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(ea, _), (eb, _)| {
            let da: i64 = ea.iter().sum();
            let db: i64 = eb.iter().sum();
            da.cmp(&db).then_with(|| eb.cmp(ea))
        });
        let terms: Vec<PolyTermRepr<i64>> = v
            .into_iter()
            .map(|(e, c)| PolyTermRepr {
                exps: e.clone(),
                coeff: c.to_string(),
            })
            .collect();
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPolyN {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            nvars: usize,
            terms: Vec<PolyTermRepr<i64>>,
        }
        let repr = Repr::deserialize(deserializer)?;
        let mut p = LaurentPolyN::zero(repr.nvars);
        for t in repr.terms {
            if t.exps.len() != repr.nvars {
                return Err(D::Error::custom("exponent vector length mismatch"));
            }
            let c: BigInt = t.coeff.parse().map_err(D::Error::custom)?;
            p.add_term(t.exps, c);
        }
        Ok(p)
    }
}
