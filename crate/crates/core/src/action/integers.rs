use super::group::{Group, Letter, Relation, Word};

/// The infinite cyclic group written multiplicatively as powers `z^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Integers {
    name: String,
}

impl Integers {
    pub fn new() -> Integers {
        Integers::named("z")
    }

    pub fn named(name: impl Into<String>) -> Integers {
        Integers { name: name.into() }
    }
}

impl Default for Integers {
    fn default() -> Self {
        Integers::new()
    }
}

impl Group for Integers {
    type Elem = i64;

    fn identity(&self) -> i64 {
        0
    }

    fn multiply(&self, a: &i64, b: &i64) -> i64 {
        a.checked_add(*b).expect("exponent overflow")
    }

    fn invert(&self, a: &i64) -> i64 {
        -a
    }

    fn generator_count(&self) -> usize {
        1
    }

    fn generator_name(&self, _: usize) -> &str {
        &self.name
    }

    fn generator(&self, _: usize) -> i64 {
        1
    }

    fn factor(&self, g: &i64) -> Word {
        let l = if *g < 0 {
            Letter::inv(0)
        } else {
            Letter::new(0)
        };
        vec![l; g.unsigned_abs() as usize]
    }

    fn render(&self, g: &i64) -> String {
        match *g {
            0 => "1".to_owned(),
            1 => self.name.clone(),
            m => format!("{}^{m}", self.name),
        }
    }

    fn relations(&self) -> Option<Vec<Relation>> {
        Some(Vec::new())
    }

    fn power(&self, g: &i64, k: i64) -> i64 {
        g.checked_mul(k).expect("exponent overflow")
    }

    fn ball(&self, radius: usize) -> Vec<i64> {
        let r = radius as i64;
        let mut out = vec![0];
        for m in 1..=r {
            out.push(m);
            out.push(-m);
        }
        out
    }
}
