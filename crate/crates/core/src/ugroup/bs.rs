//! `BS(1, n) = ⟨a₀, Z | a₀⁻¹ Zⁿ a₀ = Z⟩`, realized as `Z[1/n] ⋊ Z`.
//!
//! Coordinates `(q, k)` multiply as `(q, k)(q', k') = (q + nᵏ q', k + k')`,
//! with `a₀ = (0, 1)` and `Z = (1, 0)`.

use std::fmt;

use crate::action::group::{Group, Letter, Relation, Word};

/// `(num / n^exp, k)` with `num` not divisible by `n` unless `exp = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BsElement {
    pub num: i128,
    pub exp: u32,
    pub k: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaumslagSolitar {
    n: u32,
}

fn pow(n: u32, e: u32) -> i128 {
    (n as i128)
        .checked_pow(e)
        .expect("BS(1,n) coordinate overflow")
}

fn mul(a: i128, b: i128) -> i128 {
    a.checked_mul(b).expect("BS(1,n) coordinate overflow")
}

impl BaumslagSolitar {
    pub fn new(n: u32) -> BaumslagSolitar {
        assert!(n >= 2, "BS(1, n) needs n ≥ 2");
        BaumslagSolitar { n }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    fn normalize(&self, mut num: i128, mut exp: u32, k: i64) -> BsElement {
        let n = self.n as i128;
        if num == 0 {
            exp = 0;
        }
        while exp > 0 && num % n == 0 {
            num /= n;
            exp -= 1;
        }
        BsElement { num, exp, k }
    }

    /// `(num / n^exp, k)`, reduced.
    pub fn element(&self, num: i128, exp: u32, k: i64) -> BsElement {
        self.normalize(num, exp, k)
    }

    /// `(q, k)` with integer `q`.
    pub fn integral(&self, q: i128, k: i64) -> BsElement {
        self.normalize(q, 0, k)
    }

    pub fn a0(&self) -> BsElement {
        self.integral(0, 1)
    }

    pub fn z(&self) -> BsElement {
        self.integral(1, 0)
    }

    /// `a_i = (i, 1)`, the image of the edge `i` of the rose.
    pub fn digit(&self, i: u32) -> BsElement {
        self.integral(i as i128, 1)
    }

    /// `(n_α, |α|)` where `n_α = Σ α_i nⁱ` reads the digits with powers
    /// increasing from left to right. Equals the product of the `a_{α_i}`.
    pub fn word(&self, digits: &[u32]) -> BsElement {
        let value = digits
            .iter()
            .rev()
            .fold(0i128, |acc, &d| mul(acc, self.n as i128) + d as i128);
        self.integral(value, digits.len() as i64)
    }

    /// `q · nᵏ` on the numerator/exponent pair.
    fn scale(&self, num: i128, exp: u32, k: i64) -> (i128, u32) {
        if k >= 0 {
            let k = k as u32;
            if k <= exp {
                (num, exp - k)
            } else {
                (mul(num, pow(self.n, k - exp)), 0)
            }
        } else {
            (num, exp + k.unsigned_abs() as u32)
        }
    }

    fn add(&self, a: (i128, u32), b: (i128, u32), k: i64) -> BsElement {
        let e = a.1.max(b.1);
        let x = mul(a.0, pow(self.n, e - a.1));
        let y = mul(b.0, pow(self.n, e - b.1));
        self.normalize(x.checked_add(y).expect("BS(1,n) coordinate overflow"), e, k)
    }

    /// Whether `g = αβ⁻¹` for some words: the denominator of `q` divides
    /// `n^{max(0, -k)}`.
    pub fn is_alpha_beta(&self, g: &BsElement) -> bool {
        (g.exp as i64) <= (-g.k).max(0)
    }

    /// The integer `q · n^e` when it is one.
    pub fn numerator_at(&self, g: &BsElement, e: u32) -> Option<i128> {
        (g.exp <= e).then(|| mul(g.num, pow(self.n, e - g.exp)))
    }

    /// Parses `(q, k)` coordinates where `q` is an integer or `p/m` with `m`
    /// a power of `n`; anything else is read as a word in `a0`, `Z`.
    pub fn parse_coords(&self, text: &str) -> Option<BsElement> {
        let inner = text.trim().strip_prefix('(')?.strip_suffix(')')?;
        let (q, k) = inner.split_once(',')?;
        let k: i64 = k.trim().parse().ok()?;
        let (p, m) = match q.trim().split_once('/') {
            Some((p, m)) => (
                p.trim().parse::<i128>().ok()?,
                m.trim().parse::<i128>().ok()?,
            ),
            None => (q.trim().parse::<i128>().ok()?, 1),
        };
        let mut exp = 0;
        let mut d = 1i128;
        while d < m {
            d = d.checked_mul(self.n as i128)?;
            exp += 1;
        }
        (d == m).then(|| self.normalize(p, exp, k))
    }
}

impl fmt::Display for BsElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "({}, {})", self.num, self.k)
        } else {
            write!(f, "({}/n^{}, {})", self.num, self.exp, self.k)
        }
    }
}

impl Group for BaumslagSolitar {
    type Elem = BsElement;

    fn identity(&self) -> BsElement {
        self.integral(0, 0)
    }

    fn multiply(&self, a: &BsElement, b: &BsElement) -> BsElement {
        let shifted = self.scale(b.num, b.exp, a.k);
        self.add(
            (a.num, a.exp),
            shifted,
            a.k.checked_add(b.k).expect("BS(1,n) coordinate overflow"),
        )
    }

    fn invert(&self, a: &BsElement) -> BsElement {
        let (num, exp) = self.scale(-a.num, a.exp, -a.k);
        self.normalize(num, exp, -a.k)
    }

    fn generator_count(&self) -> usize {
        2
    }

    fn generator_name(&self, i: usize) -> &str {
        ["a0", "Z"][i]
    }

    fn generator(&self, i: usize) -> BsElement {
        [self.a0(), self.z()][i]
    }

    /// `(q, k) = a₀^{-e} Z^{num} a₀^{e} a₀^{k}` where `q = num / nᵉ`.
    fn factor(&self, g: &BsElement) -> Word {
        let e = g.exp as usize;
        let mut w = vec![Letter::inv(0); e];
        let z = if g.num < 0 {
            Letter::inv(1)
        } else {
            Letter::new(1)
        };
        w.extend(std::iter::repeat_n(z, g.num.unsigned_abs() as usize));
        w.extend(std::iter::repeat_n(Letter::new(0), e));
        let a = if g.k < 0 {
            Letter::inv(0)
        } else {
            Letter::new(0)
        };
        w.extend(std::iter::repeat_n(a, g.k.unsigned_abs() as usize));
        crate::action::group::reduce_word(&w)
    }

    fn render(&self, g: &BsElement) -> String {
        if g.exp == 0 {
            format!("({}, {})", g.num, g.k)
        } else {
            format!("({}/{}, {})", g.num, pow(self.n, g.exp), g.k)
        }
    }

    /// `a₀⁻¹ Zⁿ a₀ = Z`.
    fn relations(&self) -> Option<Vec<Relation>> {
        let mut lhs = vec![Letter::inv(0)];
        lhs.extend(std::iter::repeat_n(Letter::new(1), self.n as usize));
        lhs.push(Letter::new(0));
        Some(vec![Relation {
            lhs,
            rhs: vec![Letter::new(1)],
        }])
    }

    fn parse_elem(&self, text: &str) -> Result<BsElement, crate::action::WordError> {
        if let Some(g) = self.parse_coords(text) {
            return Ok(g);
        }
        Ok(self.eval(&self.parse_word(text)?))
    }
}
