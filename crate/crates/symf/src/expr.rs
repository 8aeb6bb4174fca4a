//! A small expression language over symmetric functions: LL(1) grammar,
//! recursive-descent parser with byte-offset errors, canonical printer,
//! and evaluation into the power-sum basis.
//!
//! ```text
//! expr   := term (("+"|"-") term)*
//! term   := factor ("*" factor)*
//! factor := atom ("^" nat)?
//! atom   := int | gen | "omega" "(" expr ")"
//!         | "plethysm" "(" expr "," expr ")"
//!         | ("adams"|"lambda"|"sigma") "(" nat "," expr ")"
//!         | "(" expr ")"
//! gen    := ("e"|"h"|"p"|"m"|"s") "[" nat ("," nat)* "]"
//! ```

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::symfunc::{Basis, SymFunc};
use crate::{lambda, Integer, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(Integer),
    Gen(Basis, Partition),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Omega(Box<Expr>),
    Plethysm(Box<Expr>, Box<Expr>),
    Adams(u32, Box<Expr>),
    Lambda(u32, Box<Expr>),
    Sigma(u32, Box<Expr>),
}

impl Expr {
    // precedence levels: 1 sum, 2 product, 3 power, 4 atom
    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) => 2,
            Expr::Pow(..) => 3,
            _ => 4,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let paren = self.precedence() < min;
        if paren {
            write!(f, "(")?;
        }
        match self {
            Expr::Int(n) => write!(f, "{n}")?,
            Expr::Gen(basis, lam) => {
                write!(f, "{}[", basis.letter())?;
                for (i, part) in lam.parts().iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{part}")?;
                }
                write!(f, "]")?;
            }
            Expr::Add(a, b) => {
                a.fmt_prec(f, 1)?;
                write!(f, " + ")?;
                b.fmt_prec(f, 2)?;
            }
            Expr::Sub(a, b) => {
                a.fmt_prec(f, 1)?;
                write!(f, " - ")?;
                b.fmt_prec(f, 2)?;
            }
            Expr::Mul(a, b) => {
                a.fmt_prec(f, 2)?;
                write!(f, "*")?;
                b.fmt_prec(f, 3)?;
            }
            Expr::Pow(a, k) => {
                a.fmt_prec(f, 4)?;
                write!(f, "^{k}")?;
            }
            Expr::Omega(a) => write!(f, "omega({a})")?,
            Expr::Plethysm(a, b) => write!(f, "plethysm({a}, {b})")?,
            Expr::Adams(k, a) => write!(f, "adams({k}, {a})")?,
            Expr::Lambda(k, a) => write!(f, "lambda({k}, {a})")?,
            Expr::Sigma(k, a) => write!(f, "sigma({k}, {a})")?,
        }
        if paren {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, expected: &str) -> Result<T> {
        Err(Error::SyntaxError {
            offset: self.pos,
            expected: expected.to_string(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, byte: u8) -> Result<()> {
        if self.eat(byte) {
            Ok(())
        } else {
            self.err(&format!("'{}'", byte as char))
        }
    }

    fn nat(&mut self) -> Result<Integer> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("integer");
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("decimal digits"))
    }

    fn small_nat(&mut self) -> Result<u32> {
        use num::ToPrimitive;
        self.skip_ws();
        let at = self.pos;
        let n = self.nat()?;
        n.to_u32().ok_or_else(|| Error::SyntaxError {
            offset: at,
            expected: "integer within operator range".to_string(),
        })
    }

    fn ident(&mut self) -> (usize, String) {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_lowercase() {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii");
        (start, text.to_string())
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
            } else if self.eat(b'-') {
                acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Expr> {
        let atom = self.atom()?;
        if self.eat(b'^') {
            Ok(Expr::Pow(Box::new(atom), self.small_nat()?))
        } else {
            Ok(atom)
        }
    }

    fn unary(&mut self, name: &str) -> Result<Expr> {
        self.expect(b'(')?;
        let inner = self.expr()?;
        self.expect(b')')?;
        match name {
            "omega" => Ok(Expr::Omega(Box::new(inner))),
            _ => unreachable!(),
        }
    }

    fn indexed(&mut self, name: &str) -> Result<Expr> {
        self.expect(b'(')?;
        let k = self.small_nat()?;
        self.expect(b',')?;
        let inner = Box::new(self.expr()?);
        self.expect(b')')?;
        Ok(match name {
            "adams" => Expr::Adams(k, inner),
            "lambda" => Expr::Lambda(k, inner),
            "sigma" => Expr::Sigma(k, inner),
            _ => unreachable!(),
        })
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => Ok(Expr::Int(self.nat()?)),
            Some(c) if c.is_ascii_lowercase() => {
                let (start, name) = self.ident();
                match name.as_str() {
                    "omega" => self.unary("omega"),
                    "plethysm" => {
                        self.expect(b'(')?;
                        let a = Box::new(self.expr()?);
                        self.expect(b',')?;
                        let b = Box::new(self.expr()?);
                        self.expect(b')')?;
                        Ok(Expr::Plethysm(a, b))
                    }
                    "adams" | "lambda" | "sigma" => self.indexed(&name),
                    _ if name.len() == 1 => {
                        let Some(basis) = Basis::from_letter(name.as_bytes()[0] as char) else {
                            self.pos = start;
                            return self.err("basis letter e, h, p, m, or s");
                        };
                        self.expect(b'[')?;
                        let mut parts = vec![self.gen_part()?];
                        while self.eat(b',') {
                            parts.push(self.gen_part()?);
                        }
                        self.expect(b']')?;
                        let lam = Partition::new(parts).expect("parts checked positive");
                        Ok(Expr::Gen(basis, lam))
                    }
                    _ => {
                        self.pos = start;
                        self.err("expression")
                    }
                }
            }
            _ => self.err("expression"),
        }
    }

    fn gen_part(&mut self) -> Result<i64> {
        use num::ToPrimitive;
        self.skip_ws();
        let at = self.pos;
        let n = self.nat()?;
        match n.to_i64() {
            Some(v) if v > 0 => Ok(v),
            _ => Err(Error::SyntaxError {
                offset: at,
                expected: "positive partition part".to_string(),
            }),
        }
    }
}

/// Parses an expression; trailing input is an error.
pub fn parse_expr(text: &str) -> Result<Expr> {
    let mut p = Parser::new(text);
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("end of input or operator");
    }
    Ok(e)
}

/// Evaluates to a symmetric function in the power-sum basis, where every
/// ring and λ-ring operation has a direct implementation.
pub fn eval(expr: &Expr) -> Result<SymFunc> {
    match expr {
        Expr::Int(n) => Ok(SymFunc::constant(
            Basis::P,
            Rational::from_integer(n.clone()),
        )),
        Expr::Gen(basis, lam) => {
            let g = SymFunc::generator(*basis, lam.clone());
            crate::transforms::convert(&g, Basis::P)
        }
        Expr::Add(a, b) => eval(a)?.add(&eval(b)?),
        Expr::Sub(a, b) => eval(a)?.sub(&eval(b)?),
        Expr::Mul(a, b) => eval(a)?.multiply(&eval(b)?),
        Expr::Pow(a, k) => eval(a)?.pow(*k),
        Expr::Omega(a) => Ok(lambda::omega(&eval(a)?)),
        Expr::Plethysm(a, b) => lambda::plethysm(&eval(a)?, &eval(b)?),
        Expr::Adams(k, a) => lambda::adams(*k, &eval(a)?),
        Expr::Lambda(k, a) => lambda::lambda_power(*k as usize, &eval(a)?),
        Expr::Sigma(k, a) => lambda::sigma_power(*k as usize, &eval(a)?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transforms::convert;

    fn parse(s: &str) -> Expr {
        parse_expr(s).unwrap()
    }

    #[test]
    fn parses_basic_shapes() {
        let e = parse("e[2]*h[1] - p[3]");
        let Expr::Sub(l, r) = e else {
            panic!("expected difference")
        };
        assert!(matches!(*l, Expr::Mul(..)));
        assert!(matches!(*r, Expr::Gen(Basis::P, _)));

        let e = parse("lambda(2, h[1])");
        assert!(matches!(e, Expr::Lambda(2, _)));
    }

    #[test]
    fn trailing_comma_is_rejected_with_offset() {
        match parse_expr("e[2,]") {
            Err(Error::SyntaxError { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn error_offsets_point_at_the_problem() {
        for (text, offset) in [
            ("e[2] + ", 7),
            ("e[2] ! h[1]", 5),
            ("adams(, e[1])", 6),
            ("e[0]", 2),
            ("q[2]", 0),
            ("(e[2]", 5),
        ] {
            match parse_expr(text) {
                Err(Error::SyntaxError { offset: at, .. }) => {
                    assert_eq!(at, offset, "input {text:?}")
                }
                other => panic!("expected syntax error for {text:?}, got {other:?}"),
            }
        }
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(parse("e[1] + h[1]*p[2]"), parse("e[1] + (h[1]*p[2])"));
        assert_ne!(parse("(e[1] + h[1])*p[2]"), parse("e[1] + h[1]*p[2]"));
        // left-associative subtraction
        assert_eq!(parse("e[1] - h[1] - p[1]"), parse("(e[1] - h[1]) - p[1]"));
        // power binds tightest
        assert_eq!(parse("e[1]*h[1]^2"), parse("e[1]*(h[1]^2)"));
    }

    #[test]
    fn print_parse_round_trip_is_identity_on_samples() {
        for text in [
            "e[2]*h[1] - p[3]",
            "lambda(2, h[1]) + sigma(2, h[1])",
            "(e[1] + h[1])*p[2]^3",
            "plethysm(e[2], h[2]) - adams(2, m[1,1])",
            "omega(s[2,1])*2 + 7",
            "e[1] - (h[1] - p[1])",
        ] {
            let tree = parse(text);
            assert_eq!(parse(&tree.to_string()), tree, "printed: {}", tree);
        }
    }

    fn random_expr(rng: &mut impl rand::Rng, depth: usize) -> Expr {
        let leaf = depth == 0 || rng.gen_bool(0.3);
        if leaf {
            if rng.gen_bool(0.25) {
                return Expr::Int(Integer::from(rng.gen_range(0..100)));
            }
            let basis = [Basis::M, Basis::E, Basis::H, Basis::P, Basis::S][rng.gen_range(0..5)];
            let len = rng.gen_range(1..=3);
            let parts: Vec<i64> = (0..len).map(|_| rng.gen_range(1..=3)).collect();
            return Expr::Gen(basis, Partition::new(parts).unwrap());
        }
        let d = depth - 1;
        match rng.gen_range(0..9) {
            0 => Expr::Add(Box::new(random_expr(rng, d)), Box::new(random_expr(rng, d))),
            1 => Expr::Sub(Box::new(random_expr(rng, d)), Box::new(random_expr(rng, d))),
            2 => Expr::Mul(Box::new(random_expr(rng, d)), Box::new(random_expr(rng, d))),
            3 => Expr::Pow(Box::new(random_expr(rng, d)), rng.gen_range(0..=3)),
            4 => Expr::Omega(Box::new(random_expr(rng, d))),
            5 => Expr::Plethysm(Box::new(random_expr(rng, d)), Box::new(random_expr(rng, d))),
            6 => Expr::Adams(rng.gen_range(1..=3), Box::new(random_expr(rng, d))),
            7 => Expr::Lambda(rng.gen_range(0..=3), Box::new(random_expr(rng, d))),
            _ => Expr::Sigma(rng.gen_range(0..=3), Box::new(random_expr(rng, d))),
        }
    }

    #[test]
    fn parse_print_parse_identity_on_random_corpus() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for i in 0..1000 {
            let tree = random_expr(&mut rng, 5);
            let printed = tree.to_string();
            let reparsed = parse_expr(&printed)
                .unwrap_or_else(|e| panic!("corpus item {i}: {printed:?}: {e}"));
            assert_eq!(reparsed, tree, "corpus item {i}: {printed}");
        }
    }

    // evaluation in the m-basis directly, for ring operations only
    fn eval_in_m(expr: &Expr) -> Option<SymFunc> {
        Some(match expr {
            Expr::Int(n) => SymFunc::constant(Basis::M, Rational::from_integer(n.clone())),
            Expr::Gen(b, lam) => convert(&SymFunc::generator(*b, lam.clone()), Basis::M).ok()?,
            Expr::Add(a, b) => eval_in_m(a)?.add(&eval_in_m(b)?).ok()?,
            Expr::Sub(a, b) => eval_in_m(a)?.sub(&eval_in_m(b)?).ok()?,
            Expr::Mul(a, b) => eval_in_m(a)?.multiply(&eval_in_m(b)?).ok()?,
            Expr::Pow(a, k) => eval_in_m(a)?.pow(*k).ok()?,
            Expr::Omega(a) => lambda::omega(&eval_in_m(a)?),
            _ => return None,
        })
    }

    // upper bound on the degree an expression can reach
    fn degree_bound(e: &Expr) -> usize {
        match e {
            Expr::Int(_) => 0,
            Expr::Gen(_, lam) => lam.degree(),
            Expr::Add(a, b) | Expr::Sub(a, b) => degree_bound(a).max(degree_bound(b)),
            Expr::Mul(a, b) => degree_bound(a) + degree_bound(b),
            Expr::Pow(a, k) => degree_bound(a) * *k as usize,
            Expr::Omega(a) => degree_bound(a),
            Expr::Plethysm(a, b) => degree_bound(a) * degree_bound(b),
            Expr::Adams(k, a) | Expr::Lambda(k, a) | Expr::Sigma(k, a) => {
                degree_bound(a) * *k as usize
            }
        }
    }

    #[test]
    fn eval_is_basis_independent_on_ring_expressions() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut checked = 0;
        for _ in 0..400 {
            let tree = random_expr(&mut rng, 3);
            // conversions become expensive past moderate degree
            if degree_bound(&tree) > 6 {
                continue;
            }
            let Some(in_m) = eval_in_m(&tree) else {
                continue;
            };
            let in_p = eval(&tree).unwrap();
            assert!(
                convert(&in_p, Basis::M).unwrap().equals(&in_m),
                "expression {tree}"
            );
            checked += 1;
        }
        assert!(checked >= 50, "corpus too thin: {checked}");
    }

    #[test]
    fn eval_examples() {
        let f = eval(&parse("lambda(3, h[1])")).unwrap();
        let e3 = convert(
            &SymFunc::generator(Basis::E, Partition::new([3i64]).unwrap()),
            Basis::P,
        )
        .unwrap();
        assert!(f.equals(&e3));

        let f = eval(&parse("h[1]^2 - h[2] - e[2]")).unwrap();
        assert!(f.is_zero());

        let f = eval(&parse("plethysm(p[2], p[3])")).unwrap();
        let p6 = SymFunc::generator(Basis::P, Partition::new([6i64]).unwrap());
        assert!(f.equals(&p6));
    }
}
