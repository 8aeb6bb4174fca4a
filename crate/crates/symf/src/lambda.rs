//! Lambda-ring structure on the ring of symmetric functions: plethysm,
//! Adams operations, exterior and symmetric power operations, and the
//! degree-reversing involution omega.

use crate::error::{Error, Result};
use crate::symfunc::{Basis, SymFunc};
use crate::transforms::{convert, e_row_in_p, h_row_in_p};

/// Plethysm f[g], computed in the p-basis: p_n[g] replaces every p_m in g
/// by p_{nm}, and the rule extends to f as an algebra map over Q. The
/// result is reported in the p-basis.
pub fn plethysm(f: &SymFunc, g: &SymFunc) -> Result<SymFunc> {
    let prod = f.degree() * g.degree();
    let cap = crate::degree_cap();
    if prod > cap {
        return Err(Error::DegreeCapExceeded { degree: prod, cap });
    }
    let fp = convert(f, Basis::P)?;
    let gp = convert(g, Basis::P)?;
    let mut out = SymFunc::zero(Basis::P);
    for (lam, c) in fp.terms() {
        let mut term = SymFunc::constant(Basis::P, c.clone());
        for &r in lam.parts() {
            term = term.multiply(&substitute_power(&gp, r))?;
        }
        out = out.add(&term)?;
    }
    Ok(out)
}

// p_r[g]: every part of every p-index gets scaled by r.
fn substitute_power(gp: &SymFunc, r: u32) -> SymFunc {
    let mut out = SymFunc::zero(Basis::P);
    for (mu, c) in gp.terms() {
        out.add_term(mu.scale_parts(r), c.clone());
    }
    out
}

/// Adams operation ψⁿ = p_n[-]; a ring homomorphism for each n.
pub fn adams(n: u32, f: &SymFunc) -> Result<SymFunc> {
    assert!(n >= 1, "Adams operations are indexed by positive integers");
    let fp = convert(f, Basis::P)?;
    Ok(substitute_power(&fp, n))
}

/// λⁿ(f) = e_n[f].
pub fn lambda_power(n: usize, f: &SymFunc) -> Result<SymFunc> {
    if n == 0 {
        return Ok(SymFunc::one(Basis::P));
    }
    crate::check_degree_cap(n)?;
    plethysm(&e_row_in_p(n), f)
}

/// σⁿ(f) = h_n[f].
pub fn sigma_power(n: usize, f: &SymFunc) -> Result<SymFunc> {
    if n == 0 {
        return Ok(SymFunc::one(Basis::P));
    }
    crate::check_degree_cap(n)?;
    plethysm(&h_row_in_p(n), f)
}

/// The involution ω: the unique algebra involution with ω(e_n) = h_n.
/// Acts basis-locally: relabel on e/h, sign (-1)^{n-1} per part on p,
/// conjugation on s; m-basis input routes through p.
pub fn omega(f: &SymFunc) -> SymFunc {
    match f.basis() {
        Basis::E | Basis::H => {
            let target = if f.basis() == Basis::E {
                Basis::H
            } else {
                Basis::E
            };
            let mut out = SymFunc::zero(target);
            for (lam, c) in f.terms() {
                out.add_term(lam.clone(), c.clone());
            }
            out
        }
        Basis::P => {
            let mut out = SymFunc::zero(Basis::P);
            for (lam, c) in f.terms() {
                let mut v = c.clone();
                if (lam.degree() - lam.len()) % 2 == 1 {
                    v = -v;
                }
                out.add_term(lam.clone(), v);
            }
            out
        }
        Basis::S => {
            let mut out = SymFunc::zero(Basis::S);
            for (lam, c) in f.terms() {
                out.add_term(lam.conjugate(), c.clone());
            }
            out
        }
        Basis::M => {
            let p = convert(f, Basis::P).expect("within cap");
            convert(&omega(&p), Basis::M).expect("within cap")
        }
    }
}
