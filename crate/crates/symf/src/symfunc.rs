//! Elements of the graded ring of symmetric functions with exact rational
//! coefficients, tagged by one of the five classical bases.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigRational, One, Signed, Zero};
use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::Rational;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Basis {
    M,
    E,
    H,
    P,
    S,
}

impl Basis {
    pub const ALL: [Basis; 5] = [Basis::M, Basis::E, Basis::H, Basis::P, Basis::S];

    pub fn letter(self) -> char {
        match self {
            Basis::M => 'm',
            Basis::E => 'e',
            Basis::H => 'h',
            Basis::P => 'p',
            Basis::S => 's',
        }
    }

    pub fn from_letter(c: char) -> Option<Basis> {
        match c {
            'm' => Some(Basis::M),
            'e' => Some(Basis::E),
            'h' => Some(Basis::H),
            'p' => Some(Basis::P),
            's' => Some(Basis::S),
            _ => None,
        }
    }

    /// Whether products of basis elements are part-concatenations.
    pub fn is_multiplicative(self) -> bool {
        matches!(self, Basis::E | Basis::H | Basis::P)
    }
}

/// A finite linear combination of basis elements indexed by partitions.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<Partition, Rational>,
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        SymFunc {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(basis: Basis) -> Self {
        Self::generator(basis, Partition::empty())
    }

    /// The single basis element b_λ with coefficient 1.
    pub fn generator(basis: Basis, lambda: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, Rational::one());
        SymFunc { basis, terms }
    }

    pub fn constant(basis: Basis, c: Rational) -> Self {
        let mut f = Self::zero(basis);
        f.add_term(Partition::empty(), c);
        f
    }

    pub fn from_terms(
        basis: Basis,
        terms: impl IntoIterator<Item = (Partition, Rational)>,
    ) -> Self {
        let mut f = Self::zero(basis);
        for (lam, c) in terms {
            f.add_term(lam, c);
        }
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.terms
            .get(lambda)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Maximum partition degree present (0 for the zero element).
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|l| l.degree()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|l| l.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub(crate) fn add_term(&mut self, lambda: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
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

    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        self.check_basis(other)?;
        let mut out = self.clone();
        for (lam, c) in other.terms() {
            out.add_term(lam.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymFunc) -> Result<SymFunc> {
        self.check_basis(other)?;
        let mut out = self.clone();
        for (lam, c) in other.terms() {
            out.add_term(lam.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> SymFunc {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> SymFunc {
        let mut out = SymFunc::zero(self.basis);
        for (lam, v) in self.terms() {
            out.add_term(lam.clone(), c * v);
        }
        out
    }

    fn check_basis(&self, other: &SymFunc) -> Result<()> {
        if self.basis != other.basis {
            Err(Error::MixedBases(self.basis.letter(), other.basis.letter()))
        } else {
            Ok(())
        }
    }

    /// Σ cᵢ fᵢ with zero terms pruned; all fᵢ must share one basis tag.
    pub fn linear_combine(coeffs: &[Rational], fs: &[SymFunc]) -> Result<SymFunc> {
        assert_eq!(
            coeffs.len(),
            fs.len(),
            "coefficient/function count mismatch"
        );
        let basis = fs.first().map(|f| f.basis).unwrap_or(Basis::M);
        let mut out = SymFunc::zero(basis);
        for (c, f) in coeffs.iter().zip(fs) {
            if f.basis != basis {
                return Err(Error::MixedBases(basis.letter(), f.basis.letter()));
            }
            for (lam, v) in f.terms() {
                out.add_term(lam.clone(), c * v);
            }
        }
        Ok(out)
    }

    /// Graded ring product; both factors must share a basis tag.
    pub fn multiply(&self, other: &SymFunc) -> Result<SymFunc> {
        self.check_basis(other)?;
        match self.basis {
            Basis::E | Basis::H | Basis::P => {
                let mut out = SymFunc::zero(self.basis);
                for (lam, a) in self.terms() {
                    for (mu, b) in other.terms() {
                        out.add_term(lam.union(mu), a * b);
                    }
                }
                Ok(out)
            }
            Basis::M | Basis::S => crate::transforms::multiply_via_expansion(self, other),
        }
    }

    pub fn pow(&self, k: u32) -> Result<SymFunc> {
        let mut out = SymFunc::one(self.basis);
        for _ in 0..k {
            out = out.multiply(self)?;
        }
        Ok(out)
    }

    /// Equality as elements of the ring, independent of basis tags.
    pub fn equals(&self, other: &SymFunc) -> bool {
        if self.basis == other.basis {
            return self == other;
        }
        crate::transforms::to_m(self) == crate::transforms::to_m(other)
    }

    /// Splits into homogeneous components keyed by degree.
    pub fn degree_components(&self) -> BTreeMap<usize, SymFunc> {
        let mut out: BTreeMap<usize, SymFunc> = BTreeMap::new();
        for (lam, c) in self.terms() {
            out.entry(lam.degree())
                .or_insert_with(|| SymFunc::zero(self.basis))
                .add_term(lam.clone(), c.clone());
        }
        out
    }

    /// The homogeneous component of the given degree.
    pub fn component(&self, degree: usize) -> SymFunc {
        let mut out = SymFunc::zero(self.basis);
        for (lam, c) in self.terms() {
            if lam.degree() == degree {
                out.add_term(lam.clone(), c.clone());
            }
        }
        out
    }
}

fn fmt_coeff(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (lam, c) in self.terms() {
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
            if lam.is_empty() {
                write!(f, "{}", fmt_coeff(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}{}", self.basis.letter(), lam)?;
            } else {
                write!(f, "{}*{}{}", fmt_coeff(&abs), self.basis.letter(), lam)?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    partition: Vec<i64>,
    num: String,
    den: String,
}

impl Serialize for SymFunc {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("SymFunc", 2)?;
        st.serialize_field("basis", &self.basis.letter().to_string())?;
        let terms: Vec<TermRepr> = self
            .terms()
            .map(|(lam, c)| TermRepr {
                partition: lam.parts().iter().map(|&p| p as i64).collect(),
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })
            .collect();
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            basis: String,
            terms: Vec<TermRepr>,
        }
        let repr = Repr::deserialize(deserializer)?;
        let mut chars = repr.basis.chars();
        let (Some(letter), None) = (chars.next(), chars.next()) else {
            return Err(D::Error::custom("basis must be a single letter"));
        };
        let basis = Basis::from_letter(letter)
            .ok_or_else(|| D::Error::custom(format!("unknown basis '{letter}'")))?;
        let mut f = SymFunc::zero(basis);
        for t in repr.terms {
            let lam = Partition::new(t.partition).map_err(D::Error::custom)?;
            let num = t.num.parse().map_err(D::Error::custom)?;
            let den = t.den.parse().map_err(D::Error::custom)?;
            let c = Rational::new(num, den);
            f.add_term(lam, c);
        }
        Ok(f)
    }
}
