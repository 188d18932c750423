//! Free groups on named letters, with reduced-word elements.

use crate::action::group::{Group, Letter, Relation, Word};

/// The free group on the given letter names. Elements are reduced words
/// encoded as nonzero integers: `i + 1` for letter `i`, `-(i + 1)` for its
/// inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeGroup {
    names: Vec<String>,
}

pub type FreeWord = Vec<i32>;

impl FreeGroup {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> FreeGroup {
        FreeGroup {
            names: names.into_iter().map(Into::into).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    /// Freely reduces an arbitrary signed-letter sequence.
    pub fn reduce(&self, word: &[i32]) -> FreeWord {
        let mut out: FreeWord = Vec::with_capacity(word.len());
        for &x in word {
            debug_assert!(x != 0 && x.unsigned_abs() as usize <= self.names.len());
            if out.last() == Some(&-x) {
                out.pop();
            } else {
                out.push(x);
            }
        }
        out
    }

    /// The positive word on the given letter indices.
    pub fn positive(&self, letters: &[usize]) -> FreeWord {
        letters.iter().map(|&i| i as i32 + 1).collect()
    }

    /// `α β⁻¹`, reduced.
    pub fn alpha_beta(&self, alpha: &[usize], beta: &[usize]) -> FreeWord {
        let mut w = self.positive(alpha);
        w.extend(beta.iter().rev().map(|&i| -(i as i32 + 1)));
        self.reduce(&w)
    }
}

/// For a reduced word of the form `α β⁻¹` with `α, β` positive, returns the
/// letter indices of `(α, β)`; `None` when an inverse letter precedes a
/// positive one.
pub fn alpha_beta_shape(word: &[i32]) -> Option<(Vec<usize>, Vec<usize>)> {
    let split = word.iter().position(|&x| x < 0).unwrap_or(word.len());
    if word[split..].iter().any(|&x| x > 0) {
        return None;
    }
    let alpha = word[..split].iter().map(|&x| (x - 1) as usize).collect();
    let beta = word[split..]
        .iter()
        .rev()
        .map(|&x| (-x - 1) as usize)
        .collect();
    Some((alpha, beta))
}

impl Group for FreeGroup {
    type Elem = FreeWord;

    fn identity(&self) -> FreeWord {
        Vec::new()
    }

    fn multiply(&self, a: &FreeWord, b: &FreeWord) -> FreeWord {
        let common = a
            .iter()
            .rev()
            .zip(b.iter())
            .take_while(|(x, y)| **x == -**y)
            .count();
        let mut out = Vec::with_capacity(a.len() + b.len() - 2 * common);
        out.extend_from_slice(&a[..a.len() - common]);
        out.extend_from_slice(&b[common..]);
        out
    }

    fn invert(&self, a: &FreeWord) -> FreeWord {
        a.iter().rev().map(|x| -x).collect()
    }

    fn generator_count(&self) -> usize {
        self.names.len()
    }

    fn generator_name(&self, i: usize) -> &str {
        &self.names[i]
    }

    fn generator(&self, i: usize) -> FreeWord {
        vec![i as i32 + 1]
    }

    fn factor(&self, g: &FreeWord) -> Word {
        g.iter()
            .map(|&x| {
                if x > 0 {
                    Letter::new((x - 1) as usize)
                } else {
                    Letter::inv((-x - 1) as usize)
                }
            })
            .collect()
    }

    fn render(&self, g: &FreeWord) -> String {
        self.render_word(&self.factor(g))
    }

    fn relations(&self) -> Option<Vec<Relation>> {
        Some(Vec::new())
    }
}
