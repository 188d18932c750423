use std::collections::HashSet;
use std::fmt::Debug;
use std::hash::Hash;

use thiserror::Error;

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize) -> Letter {
        Letter {
            generator,
            inverse: false,
        }
    }

    pub fn inv(generator: usize) -> Letter {
        Letter {
            generator,
            inverse: true,
        }
    }

    pub fn flip(self) -> Letter {
        Letter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }
}

pub type Word = Vec<Letter>;

/// `lhs = rhs` as words in the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub lhs: Word,
    pub rhs: Word,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("bad exponent in {0:?}")]
    BadExponent(String),
}

/// A group with exact equality, presented by a finite generating set.
pub trait Group: Send + Sync {
    type Elem: Clone + Eq + Hash + Ord + Debug + Send + Sync;

    fn identity(&self) -> Self::Elem;
    fn multiply(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn invert(&self, a: &Self::Elem) -> Self::Elem;

    fn generator_count(&self) -> usize;
    fn generator_name(&self, i: usize) -> &str;
    fn generator(&self, i: usize) -> Self::Elem;

    /// A word in the generators evaluating to `g`. Need not be shortest.
    fn factor(&self, g: &Self::Elem) -> Word;

    fn render(&self, g: &Self::Elem) -> String;

    /// Defining relations, when the backend knows a finite presentation.
    fn relations(&self) -> Option<Vec<Relation>>;

    fn is_identity(&self, g: &Self::Elem) -> bool {
        *g == self.identity()
    }

    fn letter(&self, l: Letter) -> Self::Elem {
        let g = self.generator(l.generator);
        if l.inverse {
            self.invert(&g)
        } else {
            g
        }
    }

    fn eval(&self, word: &[Letter]) -> Self::Elem {
        word.iter().fold(self.identity(), |acc, &l| {
            self.multiply(&acc, &self.letter(l))
        })
    }

    fn power(&self, g: &Self::Elem, k: i64) -> Self::Elem {
        let base = if k < 0 { self.invert(g) } else { g.clone() };
        (0..k.unsigned_abs()).fold(self.identity(), |acc, _| self.multiply(&acc, &base))
    }

    /// All elements of word length at most `radius`, deduplicated, in
    /// breadth-first order with generators tried in index order, each
    /// before its inverse.
    fn ball(&self, radius: usize) -> Vec<Self::Elem> {
        let mut seen = HashSet::new();
        let mut out = vec![self.identity()];
        seen.insert(self.identity());
        let mut frontier = out.clone();
        for _ in 0..radius {
            let mut next = Vec::new();
            for g in &frontier {
                for i in 0..self.generator_count() {
                    for l in [Letter::new(i), Letter::inv(i)] {
                        let h = self.multiply(g, &self.letter(l));
                        if seen.insert(h.clone()) {
                            next.push(h);
                        }
                    }
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    fn render_word(&self, word: &[Letter]) -> String {
        render_word_with(word, |i| self.generator_name(i).to_owned())
    }

    /// Parses whitespace-separated generator names, each optionally
    /// suffixed `^k` for an integer `k`. `1` and the empty string are the
    /// empty word.
    fn parse_word(&self, text: &str) -> Result<Word, WordError> {
        let mut word = Vec::new();
        for token in text.split_whitespace() {
            if token == "1" {
                continue;
            }
            let (name, exp) = match token.split_once('^') {
                Some((name, exp)) => {
                    let k: i64 = exp
                        .parse()
                        .map_err(|_| WordError::BadExponent(token.to_owned()))?;
                    (name, k)
                }
                None => (token, 1),
            };
            let i = (0..self.generator_count())
                .find(|&i| self.generator_name(i) == name)
                .ok_or_else(|| WordError::UnknownGenerator(name.to_owned()))?;
            let l = if exp < 0 {
                Letter::inv(i)
            } else {
                Letter::new(i)
            };
            word.extend(std::iter::repeat_n(l, exp.unsigned_abs() as usize));
        }
        Ok(word)
    }

    fn parse_elem(&self, text: &str) -> Result<Self::Elem, WordError> {
        Ok(self.eval(&self.parse_word(text)?))
    }
}

/// Renders a word with runs collapsed to powers: `z^3 a^-1`; `1` if empty.
pub fn render_word_with(word: &[Letter], name: impl Fn(usize) -> String) -> String {
    if word.is_empty() {
        return "1".to_owned();
    }
    let mut parts = Vec::new();
    let mut i = 0;
    while i < word.len() {
        let l = word[i];
        let mut j = i;
        while j < word.len() && word[j] == l {
            j += 1;
        }
        let run = (j - i) as i64;
        let exp = if l.inverse { -run } else { run };
        let n = name(l.generator);
        parts.push(if exp == 1 { n } else { format!("{n}^{exp}") });
        i = j;
    }
    parts.join(" ")
}

/// Free reduction of a word.
pub fn reduce_word(word: &[Letter]) -> Word {
    let mut out: Word = Vec::with_capacity(word.len());
    for &l in word {
        if out.last() == Some(&l.flip()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

pub fn invert_word(word: &[Letter]) -> Word {
    word.iter().rev().map(|l| l.flip()).collect()
}
