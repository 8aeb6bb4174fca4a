//! Semistandard Young tableau enumeration: the combinatorial engine behind
//! Schur expansions and Kostka numbers.

use std::collections::HashMap;
use std::sync::Mutex;

use num::BigInt;
use once_cell::sync::Lazy;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Enumerates all semistandard tableaux of the given shape with entries in
/// 1..=max_entry, returning each tableau's content vector (count of each
/// entry). Rows weakly increase, columns strictly increase.
pub fn ssyt_contents(shape: &Partition, max_entry: usize) -> Vec<Vec<u32>> {
    let rows = shape.len();
    if rows == 0 {
        return vec![vec![0; max_entry]];
    }
    if rows > max_entry {
        return Vec::new();
    }
    let mut tableau: Vec<Vec<u32>> = shape
        .parts()
        .iter()
        .map(|&r| vec![0u32; r as usize])
        .collect();
    let mut out = Vec::new();
    fill(
        shape.parts(),
        max_entry as u32,
        &mut tableau,
        0,
        0,
        &mut out,
    );
    out
}

fn fill(
    shape: &[u32],
    max_entry: u32,
    tab: &mut Vec<Vec<u32>>,
    row: usize,
    col: usize,
    out: &mut Vec<Vec<u32>>,
) {
    if row == shape.len() {
        let mut content = vec![0u32; max_entry as usize];
        for r in tab.iter() {
            for &e in r {
                content[(e - 1) as usize] += 1;
            }
        }
        out.push(content);
        return;
    }
    if col == shape[row] as usize {
        fill(shape, max_entry, tab, row + 1, 0, out);
        return;
    }
    let mut lo = 1;
    if col > 0 {
        lo = lo.max(tab[row][col - 1]); // weakly increasing along rows
    }
    if row > 0 {
        lo = lo.max(tab[row - 1][col] + 1); // strictly increasing down columns
    }
    for e in lo..=max_entry {
        tab[row][col] = e;
        fill(shape, max_entry, tab, row, col + 1, out);
    }
    tab[row][col] = 0;
}

static KOSTKA_MEMO: Lazy<Mutex<HashMap<(Partition, Partition), BigInt>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Kostka number K_{λμ}: semistandard tableaux of shape λ and content μ.
pub fn kostka_number(shape: &Partition, content: &Partition) -> Result<BigInt> {
    if shape.degree() != content.degree() {
        return Err(Error::DegreeMismatch(shape.degree(), content.degree()));
    }
    let key = (shape.clone(), content.clone());
    if let Some(v) = KOSTKA_MEMO.lock().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let mut mu: Vec<u32> = content.parts().to_vec();
    let shape_vec: Vec<u32> = shape.parts().to_vec();
    let count = count_ssyt(&shape_vec, &mut vec![0u32; shape_vec.len()], &mut mu, 0);
    let count = BigInt::from(count);
    KOSTKA_MEMO.lock().unwrap().insert(key, count.clone());
    Ok(count)
}

// Counts fillings entry by entry: place all copies of entry `e` (given by
// mu[e]) as a horizontal strip on the current partial shape.
fn count_ssyt(shape: &[u32], filled: &mut Vec<u32>, mu: &mut Vec<u32>, e: usize) -> u64 {
    if e == mu.len() {
        return if filled.iter().zip(shape).all(|(f, s)| f == s) {
            1
        } else {
            0
        };
    }
    let need = mu[e];
    let mut total = 0;
    // choose a horizontal strip of size `need` to add on top of `filled`
    let rows = shape.len();
    fn strips(
        shape: &[u32],
        filled: &mut Vec<u32>,
        row: usize,
        left: u32,
        prev_old: u32,
        rows: usize,
        mu: &mut Vec<u32>,
        e: usize,
        total: &mut u64,
    ) {
        if row == rows {
            if left == 0 {
                *total += count_ssyt(shape, filled, mu, e + 1);
            }
            return;
        }
        // new cells in this row need a strictly smaller entry directly
        // above, so they may extend only up to the previous row's boundary
        // as it stood before this entry was placed
        let old = filled[row];
        let max_add = shape[row].min(prev_old).saturating_sub(old);
        for k in 0..=max_add.min(left) {
            filled[row] += k;
            strips(shape, filled, row + 1, left - k, old, rows, mu, e, total);
            filled[row] -= k;
        }
    }
    strips(shape, filled, 0, need, u32::MAX, rows, mu, e, &mut total);
    total
}
