use std::collections::VecDeque;

use thiserror::Error;

use super::group::{Group, Letter, Relation, Word};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FiniteGroupError {
    #[error("multiplication table is not square")]
    NotSquare,
    #[error("table entry out of range")]
    OutOfRange,
    #[error("no identity element")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("multiplication is not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("generator refers to element {0}, out of range")]
    BadGenerator(usize),
    #[error("generators do not generate the group")]
    NotGenerating,
}

/// A finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    names: Vec<String>,
    table: Vec<Vec<u32>>,
    identity: u32,
    inverses: Vec<u32>,
    generators: Vec<u32>,
    generator_names: Vec<String>,
    /// Shortest word for every element, found breadth first.
    normal_forms: Vec<Word>,
}

impl FiniteGroup {
    /// Validates the table and indexes shortest words.
    pub fn new(
        names: Vec<String>,
        table: Vec<Vec<u32>>,
        generators: Vec<(String, u32)>,
    ) -> Result<FiniteGroup, FiniteGroupError> {
        let n = table.len();
        if names.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(FiniteGroupError::NotSquare);
        }
        if table.iter().flatten().any(|&x| x as usize >= n) {
            return Err(FiniteGroupError::OutOfRange);
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] as usize == x && table[x][e] as usize == x))
            .ok_or(FiniteGroupError::NoIdentity)? as u32;
        let mut inverses = Vec::with_capacity(n);
        for x in 0..n {
            let inv = (0..n)
                .find(|&y| table[x][y] == identity && table[y][x] == identity)
                .ok_or(FiniteGroupError::NoInverse(x))?;
            inverses.push(inv as u32);
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b] as usize;
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c] as usize] {
                        return Err(FiniteGroupError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        if let Some(&(_, g)) = generators.iter().find(|(_, g)| *g as usize >= n) {
            return Err(FiniteGroupError::BadGenerator(g as usize));
        }
        let (generator_names, generators): (Vec<_>, Vec<_>) = generators.into_iter().unzip();
        let mut group = FiniteGroup {
            names,
            table,
            identity,
            inverses,
            generators,
            generator_names,
            normal_forms: Vec::new(),
        };
        let mut forms: Vec<Option<Word>> = vec![None; n];
        forms[identity as usize] = Some(Vec::new());
        let mut queue = VecDeque::from([identity]);
        while let Some(x) = queue.pop_front() {
            let word = forms[x as usize].clone().unwrap();
            for i in 0..group.generators.len() {
                for l in [Letter::new(i), Letter::inv(i)] {
                    let y = group.multiply(&x, &group.letter(l));
                    if forms[y as usize].is_none() {
                        let mut w = word.clone();
                        w.push(l);
                        forms[y as usize] = Some(w);
                        queue.push_back(y);
                    }
                }
            }
        }
        group.normal_forms = forms
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or(FiniteGroupError::NotGenerating)?;
        Ok(group)
    }

    /// The cyclic group of order `n` generated by `name`; elements are
    /// named `1`, `name`, `name^2`, ...
    pub fn cyclic(n: usize, name: &str) -> FiniteGroup {
        assert!(n >= 1);
        let names = (0..n)
            .map(|k| match k {
                0 => "1".to_owned(),
                1 => name.to_owned(),
                k => format!("{name}^{k}"),
            })
            .collect();
        let table = (0..n)
            .map(|a| (0..n).map(|b| ((a + b) % n) as u32).collect())
            .collect();
        let generators = if n == 1 {
            Vec::new()
        } else {
            vec![(name.to_owned(), 1)]
        };
        FiniteGroup::new(names, table, generators).expect("cyclic table is a group")
    }

    /// The group of order one, with no generators.
    pub fn trivial() -> FiniteGroup {
        FiniteGroup::cyclic(1, "1")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn element_name(&self, g: u32) -> &str {
        &self.names[g as usize]
    }

    pub fn element_by_name(&self, name: &str) -> Option<u32> {
        self.names.iter().position(|n| n == name).map(|i| i as u32)
    }

    pub fn element_names(&self) -> &[String] {
        &self.names
    }

    pub fn table(&self) -> &[Vec<u32>] {
        &self.table
    }

    pub fn generator_elements(&self) -> Vec<(String, u32)> {
        self.generator_names
            .iter()
            .cloned()
            .zip(self.generators.iter().copied())
            .collect()
    }
}

impl Group for FiniteGroup {
    type Elem = u32;

    fn identity(&self) -> u32 {
        self.identity
    }

    fn multiply(&self, a: &u32, b: &u32) -> u32 {
        self.table[*a as usize][*b as usize]
    }

    fn invert(&self, a: &u32) -> u32 {
        self.inverses[*a as usize]
    }

    fn generator_count(&self) -> usize {
        self.generators.len()
    }

    fn generator_name(&self, i: usize) -> &str {
        &self.generator_names[i]
    }

    fn generator(&self, i: usize) -> u32 {
        self.generators[i]
    }

    fn factor(&self, g: &u32) -> Word {
        self.normal_forms[*g as usize].clone()
    }

    fn render(&self, g: &u32) -> String {
        self.names[*g as usize].clone()
    }

    /// The Cayley-graph presentation: `w_x s = w_{xs}` for every element
    /// `x` and generator `s`, where `w_x` is the shortest word of `x`.
    /// Syntactically trivial relations are dropped.
    fn relations(&self) -> Option<Vec<Relation>> {
        let mut out = Vec::new();
        for x in 0..self.order() as u32 {
            for i in 0..self.generators.len() {
                let mut lhs = self.normal_forms[x as usize].clone();
                lhs.push(Letter::new(i));
                let rhs =
                    self.normal_forms[self.multiply(&x, &self.generators[i]) as usize].clone();
                if lhs != rhs {
                    out.push(Relation { lhs, rhs });
                }
            }
        }
        Some(out)
    }

    fn ball(&self, radius: usize) -> Vec<u32> {
        let mut elems: Vec<u32> = (0..self.order() as u32)
            .filter(|&g| self.normal_forms[g as usize].len() <= radius)
            .collect();
        elems.sort_by_key(|&g| {
            (
                self.normal_forms[g as usize].len(),
                self.normal_forms[g as usize].clone(),
            )
        });
        elems
    }
}
