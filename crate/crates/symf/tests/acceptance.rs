//! Acceptance gate: one test per criterion, each printing a single
//! pass/fail line. Everything here is exact rational arithmetic; there are
//! no tolerances anywhere.

mod common;

use std::time::Instant;

use num::{One, ToPrimitive, Zero};
use symf::lambda::{adams, lambda_power, omega, plethysm, sigma_power};
use symf::partition::partitions_of;
use symf::repsn;
use symf::schur_weyl::{commutant, cross_degree_hom_dim, predicted_commutant_dimension};
use symf::symfunc::Basis;
use symf::transforms::{convert, jacobi_trudi};
use symf::truncate::{collect, expand, expand_basis_element, splitting_injectivity_report, PolyN};
use symf::{Partition, Rational, SymFunc};

fn report(criterion: usize, pass: bool, what: &str) {
    println!(
        "criterion {criterion}: {} — {what}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {criterion} failed: {what}");
}

fn part(parts: &[i64]) -> Partition {
    Partition::new(parts.iter().copied()).unwrap()
}

fn gen(b: Basis, parts: &[i64]) -> SymFunc {
    SymFunc::generator(b, part(parts))
}

fn factorial(n: usize) -> usize {
    (2..=n).product::<usize>().max(1)
}

#[test]
fn criterion_01_schur_weyl_table() {
    let start = Instant::now();
    let mut pass = true;
    for (nvars, degree) in [(1usize, 1usize), (2, 1), (2, 2), (3, 2), (3, 3)] {
        let r = commutant(nvars, degree).unwrap();
        pass &= r.dimension == factorial(degree) && r.is_isomorphism;
    }
    let r = commutant(1, 2).unwrap();
    pass &= r.dimension == 1;
    let r = commutant(2, 3).unwrap();
    pass &= r.dimension == 5;
    // below the stable range the dimension is the character-theory value
    for degree in 2..=4usize {
        for nvars in 1..degree.min(4) {
            let r = commutant(nvars, degree).unwrap();
            pass &= r.dimension == predicted_commutant_dimension(nvars, degree);
            pass &= !r.is_isomorphism;
        }
    }
    let elapsed = start.elapsed();
    pass &= elapsed.as_secs() < 120;
    report(
        1,
        pass,
        &format!("commutant dimensions match n! / character theory ({elapsed:.2?})"),
    );
}

#[test]
fn criterion_02_block_diagonality() {
    let mut pass = true;
    for nvars in 1..=3usize {
        for a in 1..=3usize {
            for b in 1..=3usize {
                for lam in partitions_of(a, None).unwrap() {
                    for mu in partitions_of(b, None).unwrap() {
                        let dim = cross_degree_hom_dim(nvars, &lam, &mu).unwrap();
                        if a != b {
                            pass &= dim == 0;
                        } else if nvars >= a {
                            pass &= dim == usize::from(lam == mu);
                        }
                    }
                }
            }
        }
    }
    report(
        2,
        pass,
        "equivariant hom spaces are block diagonal with scalar blocks",
    );
}

#[test]
fn criterion_03_splitting_injectivity() {
    let mut pass = true;
    for d in 1..=5usize {
        pass &= splitting_injectivity_report(d, None).unwrap().pass;
    }
    // collection inverts expansion on every basis element of degree <= N
    for nvars in 1..=5usize {
        for d in 0..=nvars {
            for lam in partitions_of(d, None).unwrap() {
                for basis in Basis::ALL {
                    let f = SymFunc::generator(basis, lam.clone());
                    let back = collect(&expand(&f, nvars).unwrap()).unwrap();
                    pass &= back == convert(&f, Basis::M).unwrap();
                }
            }
        }
    }
    report(
        3,
        pass,
        "Schur images distinct, vanishing iff rows > N; collect inverts expand",
    );
}

#[test]
fn criterion_04_elementary_from_exterior_powers() {
    let mut pass = true;
    for n in 1..=8usize {
        let lhs = symf::expr::eval(&symf::expr::parse_expr(&format!("lambda({n}, h[1])")).unwrap())
            .unwrap();
        pass &= lhs.equals(&gen(Basis::E, &[n as i64]));
    }
    report(4, pass, "lambda(n, h[1]) evaluates to e[n] for n <= 8");
}

#[test]
fn criterion_05_subdimension_and_sum_rule() {
    let mut pass = true;
    for m in 1..=8usize {
        for nvars in 1..=8usize {
            let em = expand(&gen(Basis::E, &[m as i64]), nvars).unwrap();
            pass &= em.is_zero() == (m > nvars);
        }
    }
    let inputs = [
        gen(Basis::H, &[1]),
        gen(Basis::E, &[2]),
        gen(Basis::P, &[3]),
        convert(&gen(Basis::S, &[2, 1]), Basis::P).unwrap(),
    ];
    for f in &inputs {
        for g in &inputs {
            let f = convert(f, Basis::P).unwrap();
            let sum = f.add(&convert(g, Basis::P).unwrap()).unwrap();
            for k in 0..=4usize {
                let lhs = lambda_power(k, &sum).unwrap();
                let mut rhs = SymFunc::zero(Basis::P);
                for i in 0..=k {
                    rhs = rhs
                        .add(
                            &lambda_power(i, &f)
                                .unwrap()
                                .multiply(&lambda_power(k - i, g).unwrap())
                                .unwrap(),
                        )
                        .unwrap();
                }
                pass &= lhs.equals(&rhs);
            }
        }
    }
    report(
        5,
        pass,
        "e_m vanishes iff m > N; lambda^k is a divided sum on +",
    );
}

#[test]
fn criterion_06_basis_round_trips() {
    let start = Instant::now();
    let mut pass = true;
    for d in 0..=6usize {
        for lam in partitions_of(d, None).unwrap() {
            for from in Basis::ALL {
                let x = SymFunc::generator(from, lam.clone());
                for to in Basis::ALL {
                    let there = convert(&x, to).unwrap();
                    pass &= convert(&there, from).unwrap() == x;
                }
            }
        }
    }
    // Jacobi-Trudi route into h agrees with the tableau-counting route into m
    for d in 1..=6usize {
        for lam in partitions_of(d, None).unwrap() {
            let via_determinant = convert(&jacobi_trudi(&lam).unwrap(), Basis::M).unwrap();
            let via_kostka = SymFunc::from_terms(
                Basis::M,
                partitions_of(d, None).unwrap().into_iter().map(|mu| {
                    let k = symf::tableaux::kostka_number(&lam, &mu).unwrap();
                    (mu, Rational::from_integer(k))
                }),
            );
            pass &= via_determinant == via_kostka;
        }
    }
    let elapsed = start.elapsed();
    pass &= elapsed.as_secs() < 60;
    report(
        6,
        pass,
        &format!("all 20 ordered basis pairs round trip to degree 6 ({elapsed:.2?})"),
    );
}

#[test]
fn criterion_07_omega_involution() {
    let mut pass = true;
    for d in 1..=5usize {
        for lam in partitions_of(d, None).unwrap() {
            for basis in Basis::ALL {
                let f = SymFunc::generator(basis, lam.clone());
                pass &= omega(&omega(&f)).equals(&f);
            }
            pass &= omega(&SymFunc::generator(Basis::E, lam.clone()))
                .equals(&SymFunc::generator(Basis::H, lam.clone()));
            pass &= omega(&SymFunc::generator(Basis::S, lam.clone()))
                .equals(&SymFunc::generator(Basis::S, lam.conjugate()));
            let chi = repsn::irreducible_character(&lam).unwrap();
            pass &= repsn::frobenius(&chi.sign_twist()).equals(&omega(&repsn::frobenius(&chi)));
        }
    }
    report(
        7,
        pass,
        "omega is an involution intertwining the sign twist",
    );
}

#[test]
fn criterion_08_frobenius_characteristic() {
    let mut pass = true;
    // ch of the irreducible character reaches s via an independent route
    for n in 1..=5usize {
        for lam in partitions_of(n, None).unwrap() {
            let chi = repsn::irreducible_character(&lam).unwrap();
            let via_ch = convert(&repsn::frobenius(&chi), Basis::H).unwrap();
            pass &= via_ch == jacobi_trudi(&lam).unwrap();
        }
    }
    // exact orthogonality of the character table
    for n in 1..=6usize {
        let lambdas = partitions_of(n, None).unwrap();
        let table: Vec<_> = lambdas
            .iter()
            .map(|lam| repsn::irreducible_character(lam).unwrap())
            .collect();
        for (i, a) in table.iter().enumerate() {
            for (j, b) in table.iter().enumerate() {
                let ip = repsn::inner_product(a, b).unwrap();
                let expected = if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                };
                pass &= ip == expected;
            }
        }
        for mu in &lambdas {
            for nu in &lambdas {
                let mut sum = Rational::zero();
                for chi in &table {
                    sum += chi.value(mu) * chi.value(nu);
                }
                let expected = if mu == nu {
                    Rational::from_integer(mu.z_factor())
                } else {
                    Rational::zero()
                };
                pass &= sum == expected;
            }
        }
        // trivial and sign characters
        pass &= convert(
            &repsn::frobenius(&repsn::trivial_character(n).unwrap()),
            Basis::H,
        )
        .unwrap()
        .equals(&gen(Basis::H, &[n as i64]));
        pass &= convert(
            &repsn::frobenius(&repsn::sign_character(n).unwrap()),
            Basis::E,
        )
        .unwrap()
        .equals(&gen(Basis::E, &[n as i64]));
    }
    report(
        8,
        pass,
        "ch(chi^lambda) = s_lambda; character table exactly orthogonal",
    );
}

// The monomials of a basis-element expansion, repeated by multiplicity.
fn monomial_slots(gx: &PolyN) -> Vec<Vec<u32>> {
    let mut slots = Vec::new();
    for (exps, c) in gx.terms() {
        let c = c.to_usize().expect("nonnegative integer coefficient");
        for _ in 0..c {
            slots.push(exps.clone());
        }
    }
    slots
}

// f[g] by literal substitution: expand f in one slot per monomial of g's
// expansion, then replace each slot variable by its monomial. Exercises
// arbitrary outer functions f but needs a small slot count.
fn plethysm_by_slot_substitution(
    f: (Basis, &Partition),
    slots: &[Vec<u32>],
    nvars: usize,
) -> PolyN {
    let fx = expand_basis_element(f.0, f.1, slots.len());
    let mut out = PolyN::zero(nvars);
    for (exps, c) in fx.terms() {
        let mut image = vec![0u32; nvars];
        for (slot, &power) in exps.iter().enumerate() {
            if power > 0 {
                for (k, &e) in slots[slot].iter().enumerate() {
                    image[k] += power * e;
                }
            }
        }
        out.add_term(image, c.clone());
    }
    out
}

// x^alpha -> x^(k*alpha): the k-th power sum over the alphabet of
// monomials of gx, multiplicities preserved.
fn power_sum_of_monomials(gx: &PolyN, k: u32, nvars: usize) -> PolyN {
    let mut out = PolyN::zero(nvars);
    for (exps, c) in gx.terms() {
        out.add_term(exps.iter().map(|&e| k * e).collect(), c.clone());
    }
    out
}

// f[g] by substitution into the power-sum expansion of f: plethysm is
// linear in f, and p_mu[g] is the product of monomial power sums. The
// f -> p conversion is validated independently by criterion 6.
fn plethysm_by_power_sums(
    f: &SymFunc,
    gx: &PolyN,
    nvars: usize,
) -> std::collections::BTreeMap<Vec<u32>, Rational> {
    let fp = convert(f, Basis::P).unwrap();
    let mut acc: std::collections::BTreeMap<Vec<u32>, Rational> = std::collections::BTreeMap::new();
    for (mu, c) in fp.terms() {
        let mut prod = PolyN::one(nvars);
        for &k in mu.parts() {
            prod = prod.mul(&power_sum_of_monomials(gx, k, nvars));
        }
        for (exps, v) in prod.terms() {
            let entry = acc.entry(exps.clone()).or_insert_with(Rational::zero);
            *entry += c * Rational::from_integer(v.clone());
        }
    }
    acc.retain(|_, v| !v.is_zero());
    acc
}

#[test]
fn criterion_09_plethysm_cross_oracle() {
    let mut pass = true;
    let mut slot_checks = 0usize;
    for df in 1..=8usize {
        for dg in 1..=(8 / df) {
            let nvars = df * dg;
            for lam in partitions_of(df, None).unwrap() {
                for mu in partitions_of(dg, None).unwrap() {
                    for bg in Basis::ALL {
                        let g = SymFunc::generator(bg, mu.clone());
                        let gx = expand_basis_element(bg, &mu, nvars);
                        let slots = monomial_slots(&gx);
                        for bf in Basis::ALL {
                            let f = SymFunc::generator(bf, lam.clone());
                            let exact = expand(&plethysm(&f, &g).unwrap(), nvars).unwrap();
                            let by_p = plethysm_by_power_sums(&f, &gx, nvars);
                            pass &= exact.terms().count() == by_p.len()
                                && exact.terms().all(|(e, c)| {
                                    by_p.get(e) == Some(&Rational::from_integer(c.clone()))
                                });
                            // literal slot substitution where it stays small
                            if slots.len() <= 130 {
                                let by_slots =
                                    plethysm_by_slot_substitution((bf, &lam), &slots, nvars);
                                pass &= exact == by_slots;
                                slot_checks += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    assert!(
        slot_checks >= 500,
        "slot-substitution coverage too thin: {slot_checks}"
    );
    // Adams operations compose multiplicatively
    let inputs = [
        gen(Basis::H, &[1]),
        gen(Basis::P, &[1]).add(&gen(Basis::P, &[2])).unwrap(),
        convert(&gen(Basis::S, &[2, 1]), Basis::P).unwrap(),
    ];
    for f in &inputs {
        for m in 1..=4u32 {
            for n in 1..=4u32 {
                if f.degree() * (m * n) as usize > symf::degree_cap() {
                    continue;
                }
                let lhs = adams(m, &adams(n, f).unwrap()).unwrap();
                pass &= lhs.equals(&adams(m * n, f).unwrap());
            }
        }
    }
    // the identity sigma^2 + lambda^2 = square, which the substitution
    // oracle also sees through non-power-sum outer functions
    let h1 = gen(Basis::H, &[1]);
    pass &= sigma_power(2, &h1)
        .unwrap()
        .add(&lambda_power(2, &h1).unwrap())
        .unwrap()
        .equals(&h1.pow(2).unwrap());
    report(
        9,
        pass,
        "plethysm matches monomial substitution; psi^m psi^n = psi^mn",
    );
}

#[test]
fn criterion_10_cli_conformance() {
    let mut pass = true;
    for case in common::GOLDENS {
        let (stdout, code) = common::run_golden(case);
        if stdout != case.stdout || code != case.exit {
            println!("golden case {} diverged", case.name);
            pass = false;
        }
    }
    pass &= common::GOLDENS.len() >= 25;
    // parse-print-parse identity on a fresh random corpus
    use rand::{Rng, SeedableRng};
    use symf::expr::{parse_expr, Expr};
    fn random_expr(rng: &mut impl Rng, depth: usize) -> Expr {
        if depth == 0 || rng.gen_bool(0.3) {
            if rng.gen_bool(0.25) {
                return Expr::Int(symf::Integer::from(rng.gen_range(0..1000)));
            }
            let basis = Basis::ALL[rng.gen_range(0..5)];
            let parts: Vec<i64> = (0..rng.gen_range(1..=3))
                .map(|_| rng.gen_range(1..=4))
                .collect();
            return Expr::Gen(basis, Partition::new(parts).unwrap());
        }
        let d = depth - 1;
        match rng.gen_range(0..9) {
            0 => Expr::Add(Box::new(random_expr(rng, d)), Box::new(random_expr(rng, d))),
            1 => Expr::Sub(Box::new(random_expr(rng, d)), Box::new(random_expr(rng, d))),
            2 => Expr::Mul(Box::new(random_expr(rng, d)), Box::new(random_expr(rng, d))),
            3 => Expr::Pow(Box::new(random_expr(rng, d)), rng.gen_range(0..=4)),
            4 => Expr::Omega(Box::new(random_expr(rng, d))),
            5 => Expr::Plethysm(Box::new(random_expr(rng, d)), Box::new(random_expr(rng, d))),
            6 => Expr::Adams(rng.gen_range(1..=4), Box::new(random_expr(rng, d))),
            7 => Expr::Lambda(rng.gen_range(0..=4), Box::new(random_expr(rng, d))),
            _ => Expr::Sigma(rng.gen_range(0..=4), Box::new(random_expr(rng, d))),
        }
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2026);
    for _ in 0..1000 {
        let tree = random_expr(&mut rng, 5);
        pass &= parse_expr(&tree.to_string()).ok().as_ref() == Some(&tree);
    }
    report(
        10,
        pass,
        "golden invocations byte-identical; parse-print-parse identity",
    );
}
