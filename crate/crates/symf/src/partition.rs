//! Integer partitions (Young diagrams) and their combinatorial statistics.

use std::cmp::Ordering;
use std::fmt;

use num::{BigInt, One};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing list of positive integers; the empty partition has
/// degree 0.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Canonicalizes an arbitrary list of parts: sorts descending and
    /// rejects nonpositive entries.
    pub fn new(parts: impl IntoIterator<Item = i64>) -> Result<Self> {
        let mut v = Vec::new();
        for p in parts {
            if p <= 0 {
                return Err(Error::NonPositivePart(p));
            }
            v.push(p as u32);
        }
        v.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts: v })
    }

    /// Builds from parts already known to be weakly decreasing and positive.
    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn degree(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let rows = self.parts.len();
        if rows == 0 {
            return Partition::empty();
        }
        let width = self.parts[0] as usize;
        let mut cols = Vec::with_capacity(width);
        for j in 1..=width {
            let count = self.parts.iter().take_while(|&&p| p as usize >= j).count();
            cols.push(count as u32);
        }
        Partition { parts: cols }
    }

    /// Multiplicity vector: count of each distinct part.
    fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Order of the centralizer of a permutation of cycle type `self`:
    /// z = prod_i i^{m_i} m_i!.
    pub fn z_factor(&self) -> BigInt {
        let mut z = BigInt::one();
        for (part, mult) in self.multiplicities() {
            for _ in 0..mult {
                z *= part;
            }
            for k in 2..=mult {
                z *= k;
            }
        }
        z
    }

    /// Number of standard Young tableaux of this shape, by the hook length
    /// formula: |λ|! / prod of hooks.
    pub fn hook_dimension(&self) -> BigInt {
        let n = self.degree();
        let conj = self.conjugate();
        let mut num = BigInt::one();
        for k in 2..=n {
            num *= k;
        }
        let mut den = BigInt::one();
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as usize {
                let hook = row as usize - j + conj.parts[j] as usize - i - 1;
                den *= hook;
            }
        }
        num / den
    }

    /// Concatenation of parts, re-sorted; the product in a multiplicative
    /// basis.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Each part scaled by a positive factor (used by Adams substitution).
    pub fn scale_parts(&self, k: u32) -> Partition {
        debug_assert!(k > 0);
        Partition {
            parts: self.parts.iter().map(|&p| p * k).collect(),
        }
    }
}

/// Canonical term order: by degree ascending, then reverse-lexicographic on
/// parts (so [3] precedes [2,1] precedes [1,1,1]).
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<i64>::deserialize(deserializer)?;
        Partition::new(parts).map_err(D::Error::custom)
    }
}

/// All partitions of `n` (optionally with at most `max_rows` parts), in the
/// canonical term order.
pub fn partitions_of(n: usize, max_rows: Option<usize>) -> Result<Vec<Partition>> {
    crate::check_degree_cap(n)?;
    let rows = max_rows.unwrap_or(n);
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::new();
    gen_partitions(n, n, rows, &mut cur, &mut out);
    Ok(out)
}

fn gen_partitions(
    n: usize,
    max_part: usize,
    rows_left: usize,
    cur: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if n == 0 {
        out.push(Partition::from_sorted(cur.clone()));
        return;
    }
    if rows_left == 0 {
        return;
    }
    for p in (1..=max_part.min(n)).rev() {
        cur.push(p as u32);
        gen_partitions(n - p, p, rows_left - 1, cur, out);
        cur.pop();
    }
}

/// p(n) by the pentagonal number recurrence; an independent counting oracle
/// for the enumerator.
pub fn partition_count(n: usize) -> BigInt {
    let mut table: Vec<BigInt> = vec![BigInt::from(0); n + 1];
    table[0] = BigInt::one();
    for i in 1..=n {
        let mut acc = BigInt::from(0);
        let mut k: i64 = 1;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            let g2 = k * (3 * k + 1) / 2;
            if g1 as usize > i && g2 as usize > i {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            if g1 as usize <= i {
                acc += sign * &table[i - g1 as usize];
            }
            if g2 as usize <= i {
                acc += sign * &table[i - g2 as usize];
            }
            k += 1;
        }
        table[i] = acc;
    }
    table[n].clone()
}
