//! Exact conversions among the m, e, h, p, s bases. The m-basis is the
//! routing hub; Jacobi-Trudi, Kostka, and the Newton/power-sum formulas are
//! direct fast paths that double as cross-oracles.

use std::collections::HashMap;
use std::sync::Mutex;

use num::{BigRational, One, Zero};
use once_cell::sync::Lazy;

use crate::error::Result;
use crate::partition::{partitions_of, Partition};
use crate::symfunc::{Basis, SymFunc};
use crate::truncate::{collect, expand_basis_element};
use crate::{linalg, Rational};

pub use crate::tableaux::kostka_number;

/// Expresses a single basis element in the m-basis.
fn basis_element_to_m(basis: Basis, lambda: &Partition) -> SymFunc {
    match basis {
        Basis::M => SymFunc::generator(Basis::M, lambda.clone()),
        Basis::S => {
            let mut out = SymFunc::zero(Basis::M);
            for mu in partitions_of(lambda.degree(), None).expect("degree within cap") {
                let k = kostka_number(lambda, &mu).expect("equal degrees");
                out.add_term(mu, Rational::from_integer(k));
            }
            out
        }
        Basis::E | Basis::H | Basis::P => {
            let n = lambda.degree();
            let poly = expand_basis_element(basis, lambda, n);
            collect(&poly).expect("expansion of a basis element is symmetric")
        }
    }
}

/// Rewrites f in the m-basis.
pub fn to_m(f: &SymFunc) -> SymFunc {
    if f.basis() == Basis::M {
        return f.clone();
    }
    let mut out = SymFunc::zero(Basis::M);
    for (lam, c) in f.terms() {
        let elem = basis_element_to_m(f.basis(), lam);
        for (mu, v) in elem.terms() {
            out.add_term(mu.clone(), c * v);
        }
    }
    out
}

// Transition matrix cache: entry (target, d) holds, for the canonical list
// of partitions of d, the m-coordinates of each target basis element.
static TRANSITION: Lazy<Mutex<HashMap<(Basis, usize), Vec<Vec<Rational>>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

fn transition_matrix(target: Basis, d: usize) -> Vec<Vec<Rational>> {
    if let Some(m) = TRANSITION.lock().unwrap().get(&(target, d)) {
        return m.clone();
    }
    let mus = partitions_of(d, None).expect("degree within cap");
    // rows indexed by m-basis partitions, columns by target elements
    let mut a = vec![vec![Rational::zero(); mus.len()]; mus.len()];
    for (j, lam) in mus.iter().enumerate() {
        let col = basis_element_to_m(target, lam);
        for (i, mu) in mus.iter().enumerate() {
            a[i][j] = col.coeff(mu);
        }
    }
    TRANSITION.lock().unwrap().insert((target, d), a.clone());
    a
}

/// Solves the forward transition system to rewrite an m-basis element
/// combination in the target basis, degree by degree.
fn m_to(f: &SymFunc, target: Basis) -> SymFunc {
    debug_assert_eq!(f.basis(), Basis::M);
    let mut out = SymFunc::zero(target);
    for (d, comp) in f.degree_components() {
        if d == 0 {
            out.add_term(Partition::empty(), comp.coeff(&Partition::empty()));
            continue;
        }
        let mus = partitions_of(d, None).expect("degree within cap");
        let a = transition_matrix(target, d);
        let b: Vec<Rational> = mus.iter().map(|mu| comp.coeff(mu)).collect();
        let x = linalg::solve_dense(&a, &b).expect("transition matrix is invertible");
        for (lam, c) in mus.into_iter().zip(x) {
            out.add_term(lam, c);
        }
    }
    out
}

/// s_λ in the h-basis via the determinant det(h_{λ_i - i + j}).
pub fn jacobi_trudi(lambda: &Partition) -> Result<SymFunc> {
    crate::check_degree_cap(lambda.degree())?;
    use itertools::Itertools;
    let l = lambda.len();
    let mut out = SymFunc::zero(Basis::H);
    if l == 0 {
        out.add_term(Partition::empty(), Rational::one());
        return Ok(out);
    }
    for sigma in (0..l).permutations(l) {
        let mut parts: Vec<u32> = Vec::with_capacity(l);
        let mut ok = true;
        for (i, &j) in sigma.iter().enumerate() {
            let k = lambda.parts()[i] as i64 - i as i64 + j as i64;
            if k < 0 {
                ok = false;
                break;
            }
            if k > 0 {
                parts.push(k as u32);
            }
        }
        if !ok {
            continue;
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let sign = if permutation_parity(&sigma) { -1 } else { 1 };
        out.add_term(
            Partition::from_sorted(parts),
            Rational::from_integer(sign.into()),
        );
    }
    Ok(out)
}

fn permutation_parity(sigma: &[usize]) -> bool {
    let mut inv = 0usize;
    for i in 0..sigma.len() {
        for j in i + 1..sigma.len() {
            if sigma[i] > sigma[j] {
                inv += 1;
            }
        }
    }
    inv % 2 == 1
}

/// h_n in the p-basis: sum over λ ⊢ n of p_λ / z_λ.
pub fn h_row_in_p(n: usize) -> SymFunc {
    let mut out = SymFunc::zero(Basis::P);
    for lam in partitions_of(n, None).expect("degree within cap") {
        let z = BigRational::from_integer(lam.z_factor());
        out.add_term(lam, z.recip());
    }
    out
}

/// e_n in the p-basis: sum over λ ⊢ n of ε_λ p_λ / z_λ with
/// ε_λ = (-1)^{n - len(λ)}.
pub fn e_row_in_p(n: usize) -> SymFunc {
    let mut out = SymFunc::zero(Basis::P);
    for lam in partitions_of(n, None).expect("degree within cap") {
        let z = BigRational::from_integer(lam.z_factor());
        let mut c = z.recip();
        if (n - lam.len()) % 2 == 1 {
            c = -c;
        }
        out.add_term(lam, c);
    }
    out
}

fn eh_element_to_p(basis: Basis, lambda: &Partition) -> SymFunc {
    let mut out = SymFunc::one(Basis::P);
    for &k in lambda.parts() {
        let row = match basis {
            Basis::E => e_row_in_p(k as usize),
            Basis::H => h_row_in_p(k as usize),
            _ => unreachable!(),
        };
        out = out.multiply(&row).expect("same basis");
    }
    out
}

/// p_n in the h-basis by the Newton recurrence p_n = n h_n - Σ p_i h_{n-i}.
fn p_row_in_h(n: usize) -> SymFunc {
    let mut memo: Vec<SymFunc> = vec![SymFunc::one(Basis::H)]; // index 0 unused placeholder
    for m in 1..=n {
        let mut acc = SymFunc::generator(Basis::H, Partition::from_sorted(vec![m as u32]))
            .scale(&Rational::from_integer(m.into()));
        for i in 1..m {
            let h = SymFunc::generator(Basis::H, Partition::from_sorted(vec![(m - i) as u32]));
            acc = acc
                .sub(&memo[i].multiply(&h).expect("same basis"))
                .expect("same basis");
        }
        memo.push(acc);
    }
    memo.swap_remove(n)
}

/// p_n in the e-basis by the Newton recurrence
/// n e_n = Σ_{i=1}^{n} (-1)^{i-1} p_i e_{n-i}, solved for p_n.
fn p_row_in_e(n: usize) -> SymFunc {
    let mut memo: Vec<SymFunc> = vec![SymFunc::one(Basis::E)];
    for m in 1..=n {
        let mut acc = SymFunc::generator(Basis::E, Partition::from_sorted(vec![m as u32]))
            .scale(&Rational::from_integer(m.into()));
        for i in 1..m {
            let e = SymFunc::generator(Basis::E, Partition::from_sorted(vec![(m - i) as u32]));
            let term = memo[i].multiply(&e).expect("same basis");
            // acc -= (-1)^{i-1} p_i e_{m-i}
            if i % 2 == 1 {
                acc = acc.sub(&term).expect("same basis");
            } else {
                acc = acc.add(&term).expect("same basis");
            }
        }
        // p_m = (-1)^{m-1} acc
        if m % 2 == 0 {
            acc = acc.neg();
        }
        memo.push(acc);
    }
    memo.swap_remove(n)
}

fn p_element_to(basis: Basis, lambda: &Partition) -> SymFunc {
    let mut out = SymFunc::one(basis);
    for &k in lambda.parts() {
        let row = match basis {
            Basis::E => p_row_in_e(k as usize),
            Basis::H => p_row_in_h(k as usize),
            _ => unreachable!(),
        };
        out = out.multiply(&row).expect("same basis");
    }
    out
}

/// Rewrites f in the target basis; converting back recovers f exactly.
pub fn convert(f: &SymFunc, target: Basis) -> Result<SymFunc> {
    crate::check_degree_cap(f.degree())?;
    if f.basis() == target {
        return Ok(f.clone());
    }
    // direct fast paths
    match (f.basis(), target) {
        (Basis::S, Basis::H) => {
            let mut out = SymFunc::zero(Basis::H);
            for (lam, c) in f.terms() {
                let jt = jacobi_trudi(lam)?;
                for (mu, v) in jt.terms() {
                    out.add_term(mu.clone(), c * v);
                }
            }
            return Ok(out);
        }
        (Basis::E, Basis::P) | (Basis::H, Basis::P) => {
            let mut out = SymFunc::zero(Basis::P);
            for (lam, c) in f.terms() {
                let elem = eh_element_to_p(f.basis(), lam);
                for (mu, v) in elem.terms() {
                    out.add_term(mu.clone(), c * v);
                }
            }
            return Ok(out);
        }
        (Basis::P, Basis::E) | (Basis::P, Basis::H) => {
            let mut out = SymFunc::zero(target);
            for (lam, c) in f.terms() {
                let elem = p_element_to(target, lam);
                for (mu, v) in elem.terms() {
                    out.add_term(mu.clone(), c * v);
                }
            }
            return Ok(out);
        }
        _ => {}
    }
    let m = to_m(f);
    if target == Basis::M {
        Ok(m)
    } else {
        Ok(m_to(&m, target))
    }
}

/// Product route for the non-multiplicative bases (m and s): expand both
/// factors in enough variables, multiply the sparse polynomials, and
/// collect back.
pub(crate) fn multiply_via_expansion(f: &SymFunc, g: &SymFunc) -> Result<SymFunc> {
    debug_assert_eq!(f.basis(), g.basis());
    let basis = f.basis();
    let mut acc = SymFunc::zero(Basis::M);
    for (lam, a) in f.terms() {
        for (mu, b) in g.terms() {
            let n = lam.degree() + mu.degree();
            let pa = expand_basis_element(basis, lam, n);
            let pb = expand_basis_element(basis, mu, n);
            let prod = collect(&pa.mul(&pb)).expect("product of symmetric polynomials");
            for (nu, v) in prod.terms() {
                acc.add_term(nu.clone(), a * b * v);
            }
        }
    }
    if basis == Basis::M {
        Ok(acc)
    } else {
        Ok(m_to(&acc, basis))
    }
}
