//! Normal-form facts about `αβ⁻¹` products in `BS(1, n)`.

use std::collections::HashMap;

use super::bs::{BaumslagSolitar, BsElement};
use crate::action::Group;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClaimVerdict {
    /// The two products differ, so there is nothing to check.
    NotEqual,
    Holds,
    Fails(String),
}

fn ab(bs: &BaumslagSolitar, alpha: &[u32], beta: &[u32]) -> BsElement {
    bs.multiply(&bs.word(alpha), &bs.invert(&bs.word(beta)))
}

/// If `αβ⁻¹ = νω⁻¹`, then `|α| - |β| = |ν| - |ω| =: d`; for `d > 0` the
/// first `d` letters of `α` and `ν` agree, for `d < 0` the first `-d`
/// letters of `β` and `ω` agree.
pub fn bs_claim_check(
    bs: &BaumslagSolitar,
    alpha: &[u32],
    beta: &[u32],
    nu: &[u32],
    omega: &[u32],
) -> ClaimVerdict {
    if ab(bs, alpha, beta) != ab(bs, nu, omega) {
        return ClaimVerdict::NotEqual;
    }
    let d1 = alpha.len() as i64 - beta.len() as i64;
    let d2 = nu.len() as i64 - omega.len() as i64;
    if d1 != d2 {
        return ClaimVerdict::Fails(format!("length differences {d1} and {d2}"));
    }
    let d = d1.unsigned_abs() as usize;
    let (x, y) = if d1 > 0 { (alpha, nu) } else { (beta, omega) };
    if x[..d] != y[..d] {
        return ClaimVerdict::Fails(format!("initial segments of length {d} differ"));
    }
    ClaimVerdict::Holds
}

/// All pairs of digit words up to `max_len` letters.
fn word_pairs(n: u32, max_len: usize) -> Vec<(Vec<u32>, Vec<u32>)> {
    let mut words: Vec<Vec<u32>> = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<u32>| {
                (0..n).map(move |d| {
                    let mut v = w.clone();
                    v.push(d);
                    v
                })
            })
            .collect();
        words.extend(layer.iter().cloned());
    }
    let mut out = Vec::with_capacity(words.len() * words.len());
    for a in &words {
        for b in &words {
            out.push((a.clone(), b.clone()));
        }
    }
    out
}

/// Runs [`bs_claim_check`] on every pair of `(α, β)` pairs with all words
/// up to `max_len` letters and returns the first failure. Equal products
/// are bucketed, and each pair is compared with its bucket's first member;
/// equality being transitive, this covers all pairs.
pub fn bs_claim_scan(n: u32, max_len: usize) -> Option<[Vec<u32>; 4]> {
    let bs = BaumslagSolitar::new(n);
    let mut first: HashMap<BsElement, (Vec<u32>, Vec<u32>)> = HashMap::new();
    for (a, b) in word_pairs(n, max_len) {
        let key = ab(&bs, &a, &b);
        match first.get(&key) {
            None => {
                first.insert(key, (a, b));
            }
            Some((c, d)) => {
                if bs_claim_check(&bs, c, d, &a, &b) != ClaimVerdict::Holds {
                    return Some([c.clone(), d.clone(), a, b]);
                }
            }
        }
    }
    None
}

/// Equal-length words `α, β` with `αβ⁻¹ = Z^k`, searching lengths up to
/// `max_len` in order.
pub fn equal_length_form(
    bs: &BaumslagSolitar,
    k: i64,
    max_len: usize,
) -> Option<(Vec<u32>, Vec<u32>)> {
    let target = BaumslagSolitar::z_power(k);
    word_pairs(bs.n(), max_len)
        .into_iter()
        .filter(|(a, b)| a.len() == b.len())
        .find(|(a, b)| ab(bs, a, b) == target)
}
