//! Character theory of the symmetric groups: irreducible characters via the
//! Murnaghan-Nakayama rule, the Frobenius characteristic, and the sign
//! twist.

use std::collections::BTreeMap;
use std::collections::HashMap;

use num::{BigInt, BigRational, One, Zero};
use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::symfunc::{Basis, SymFunc};
use crate::transforms::convert;
use crate::{Integer, Rational};

/// A class function on S_n: exact rational values indexed by cycle type.
/// The keys are always exactly the partitions of n.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassFunction {
    n: usize,
    values: BTreeMap<Partition, Rational>,
}

impl ClassFunction {
    /// Builds a class function from values on every cycle type of S_n;
    /// missing classes default to zero, unknown classes are rejected.
    pub fn new(n: usize, values: impl IntoIterator<Item = (Partition, Rational)>) -> Result<Self> {
        let mut map: BTreeMap<Partition, Rational> = partitions_of(n, None)?
            .into_iter()
            .map(|p| (p, Rational::zero()))
            .collect();
        for (lam, v) in values {
            if lam.degree() != n {
                return Err(Error::DegreeMismatch(lam.degree(), n));
            }
            *map.get_mut(&lam).expect("partition of n") = v;
        }
        Ok(ClassFunction { n, values: map })
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::new(n, [])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn value(&self, class: &Partition) -> Rational {
        self.values
            .get(class)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn classes(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.values.iter()
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch(self.n, other.n));
        }
        let mut out = self.clone();
        for (c, v) in out.values.iter_mut() {
            *v += other.value(c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> ClassFunction {
        let mut out = self.clone();
        for v in out.values.values_mut() {
            *v *= c;
        }
        out
    }

    /// Pointwise product with the sign character; involutive.
    pub fn sign_twist(&self) -> ClassFunction {
        let mut out = self.clone();
        for (class, v) in out.values.iter_mut() {
            if (self.n - class.len()) % 2 == 1 {
                *v = -v.clone();
            }
        }
        out
    }
}

/// Virtual representation: integer multiplicities (negative allowed) of
/// irreducibles indexed by partitions of any degree.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct VirtualRep {
    terms: BTreeMap<Partition, Integer>,
}

impl VirtualRep {
    pub fn new(terms: impl IntoIterator<Item = (Partition, Integer)>) -> Self {
        let mut v = VirtualRep::default();
        for (lam, m) in terms {
            v.add_term(lam, m);
        }
        v
    }

    pub fn add_term(&mut self, lambda: Partition, mult: Integer) {
        if mult.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(mult);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + mult;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Integer)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

// Murnaghan-Nakayama recursion over beta-sets. Removing a border strip of
// length r from λ corresponds to replacing some β in the beta-set by β - r,
// with sign (-1)^{number of beta values skipped over}.
fn mn_recurse(lam: &[u32], mu: &[u32], memo: &mut HashMap<(Vec<u32>, Vec<u32>), BigInt>) -> BigInt {
    if mu.is_empty() {
        return if lam.is_empty() {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    let key = (lam.to_vec(), mu.to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let r = mu[0] as i64;
    let rest = &mu[1..];
    let l = lam.len();
    let beta: Vec<i64> = lam
        .iter()
        .enumerate()
        .map(|(i, &p)| p as i64 + (l - 1 - i) as i64)
        .collect();
    let mut total = BigInt::zero();
    for (idx, &b) in beta.iter().enumerate() {
        let target = b - r;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        // count beta values strictly between target and b
        let skipped = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut newbeta = beta.clone();
        newbeta[idx] = target;
        newbeta.sort_unstable_by(|a, c| c.cmp(a));
        let mut newlam: Vec<u32> = newbeta
            .iter()
            .enumerate()
            .map(|(i, &x)| (x - (l - 1 - i) as i64) as u32)
            .collect();
        while newlam.last() == Some(&0) {
            newlam.pop();
        }
        let sub = mn_recurse(&newlam, rest, memo);
        if skipped % 2 == 1 {
            total -= sub;
        } else {
            total += sub;
        }
    }
    memo.insert(key, total.clone());
    total
}

/// The irreducible character χ^λ of S_{|λ|}, by the Murnaghan-Nakayama rule.
pub fn irreducible_character(lambda: &Partition) -> Result<ClassFunction> {
    let n = lambda.degree();
    crate::check_degree_cap(n)?;
    let mut memo = HashMap::new();
    let mut values = Vec::new();
    for mu in partitions_of(n, None)? {
        let v = mn_recurse(lambda.parts(), mu.parts(), &mut memo);
        values.push((mu, Rational::from_integer(v)));
    }
    ClassFunction::new(n, values)
}

/// The trivial character of S_n.
pub fn trivial_character(n: usize) -> Result<ClassFunction> {
    let values: Vec<_> = partitions_of(n, None)?
        .into_iter()
        .map(|mu| (mu, Rational::one()))
        .collect();
    ClassFunction::new(n, values)
}

/// The sign character of S_n.
pub fn sign_character(n: usize) -> Result<ClassFunction> {
    Ok(trivial_character(n)?.sign_twist())
}

/// ⟨χ, ξ⟩ = Σ_μ χ(μ) ξ(μ) / z_μ.
pub fn inner_product(chi: &ClassFunction, xi: &ClassFunction) -> Result<Rational> {
    if chi.n() != xi.n() {
        return Err(Error::DegreeMismatch(chi.n(), xi.n()));
    }
    let mut acc = Rational::zero();
    for (mu, a) in chi.classes() {
        let z = BigRational::from_integer(mu.z_factor());
        acc += a * xi.value(mu) / z;
    }
    Ok(acc)
}

/// Decomposes a virtual character into irreducible multiplicities.
pub fn decompose(chi: &ClassFunction) -> Result<VirtualRep> {
    let mut out = VirtualRep::default();
    for lam in partitions_of(chi.n(), None)? {
        let irr = irreducible_character(&lam)?;
        let mult = inner_product(chi, &irr)?;
        if mult.is_zero() {
            continue;
        }
        if !mult.is_integer() {
            return Err(Error::NonIntegralMultiplicity(lam.to_string()));
        }
        out.add_term(lam, mult.to_integer());
    }
    Ok(out)
}

/// Frobenius characteristic ch(χ) = Σ_{μ ⊢ n} χ(μ) p_μ / z_μ, in the
/// p-basis.
pub fn frobenius(chi: &ClassFunction) -> SymFunc {
    let mut out = SymFunc::zero(Basis::P);
    for (mu, v) in chi.classes() {
        let z = BigRational::from_integer(mu.z_factor());
        out.add_term(mu.clone(), v / z);
    }
    out
}

/// Inverse of the characteristic map on homogeneous degree-n input:
/// χ(μ) = z_μ · (coefficient of p_μ).
pub fn inverse_frobenius(f: &SymFunc) -> Result<ClassFunction> {
    if f.is_zero() || !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let n = f.degree();
    if n == 0 {
        return Err(Error::NotHomogeneous);
    }
    let fp = convert(f, Basis::P)?;
    let mut values = Vec::new();
    for mu in partitions_of(n, None)? {
        let z = BigRational::from_integer(mu.z_factor());
        values.push((mu.clone(), fp.coeff(&mu) * z));
    }
    ClassFunction::new(n, values)
}

/// K of the canonical inclusion: a virtual representation maps to the
/// corresponding Schur-basis symmetric function.
pub fn k_of_f(v: &VirtualRep) -> SymFunc {
    let mut out = SymFunc::zero(Basis::S);
    for (lam, m) in v.terms() {
        out.add_term(lam.clone(), Rational::from_integer(m.clone()));
    }
    out
}

#[derive(Serialize, Deserialize)]
struct ClassValueRepr {
    class: Vec<i64>,
    num: String,
    den: String,
}

impl Serialize for ClassFunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("ClassFunction", 2)?;
        st.serialize_field("n", &self.n)?;
        let values: Vec<ClassValueRepr> = self
            .classes()
            .map(|(mu, v)| ClassValueRepr {
                class: mu.parts().iter().map(|&p| p as i64).collect(),
                num: v.numer().to_string(),
                den: v.denom().to_string(),
            })
            .collect();
        st.serialize_field("values", &values)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for ClassFunction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            n: usize,
            values: Vec<ClassValueRepr>,
        }
        let repr = Repr::deserialize(deserializer)?;
        let mut values = Vec::new();
        for v in repr.values {
            let lam = Partition::new(v.class).map_err(D::Error::custom)?;
            let num = v.num.parse().map_err(D::Error::custom)?;
            let den = v.den.parse().map_err(D::Error::custom)?;
            values.push((lam, Rational::new(num, den)));
        }
        ClassFunction::new(repr.n, values).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct VirtualTermRepr {
    partition: Vec<i64>,
    mult: String,
}

impl Serialize for VirtualRep {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("VirtualRep", 1)?;
        let terms: Vec<VirtualTermRepr> = self
            .terms()
            .map(|(lam, m)| VirtualTermRepr {
                partition: lam.parts().iter().map(|&p| p as i64).collect(),
                mult: m.to_string(),
            })
            .collect();
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for VirtualRep {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            terms: Vec<VirtualTermRepr>,
        }
        let repr = Repr::deserialize(deserializer)?;
        let mut v = VirtualRep::default();
        for t in repr.terms {
            let lam = Partition::new(t.partition).map_err(D::Error::custom)?;
            let m = t.mult.parse().map_err(D::Error::custom)?;
            v.add_term(lam, m);
        }
        Ok(v)
    }
}
