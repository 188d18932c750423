//! The closed-form partial action of `BS(1, n)` on `n`-ary sequences.
//!
//! Points of `Σ` for the rose with `n` petals are digit sequences
//! `x_0 x_1 …` read as `n`-adic integers, least significant first, and
//! `λ` is `+1`. For `g = (q, k)` written as `αβ⁻¹`:
//! - `k = 0`: `θ_g = λ^q` on all of `Σ`;
//! - `k > 0`: `θ_g(x) = α_g λ^m(x)` with `α_g` the `k` low digits of `q`;
//! - `k < 0`: `θ_g(β_g x) = λ^m(x)`, defined on `β_gΣ` only.

use thiserror::Error;

use crate::graph::{Edge, Graph, Path, Vertex};
use crate::point::BoundaryPoint;
use crate::ugroup::{BaumslagSolitar, BsElement};

use super::clopen::ClopenSet;
use super::pmap::{PartialMap, Piece};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("{0} is not of the form αβ⁻¹; its domain is empty")]
pub struct NotInImage(pub String);

/// `λ^m(x)`: adds `m` to the `n`-adic integer `x`.
pub fn lambda_power(n: u32, m: i64, x: &BoundaryPoint) -> BoundaryPoint {
    if m == 0 {
        return x.clone();
    }
    let n128 = n as i128;
    let top = (n - 1) as u32;
    let digits_of_m = {
        let mut d = 1;
        let mut v = m.unsigned_abs() as i128;
        while v >= n128 {
            v /= n128;
            d += 1;
        }
        d
    };
    let cycle: Vec<u32> = x.cycle().iter().map(|e| e.0).collect();
    let constant = cycle.iter().all(|&d| d == cycle[0]).then_some(cycle[0]);
    let mut len = x.head().len() + digits_of_m + 1;
    loop {
        let value: i128 = (0..len)
            .rev()
            .fold(0, |acc, i| acc * n128 + x.letter(i).0 as i128)
            + m as i128;
        let modulus = n128
            .checked_pow(len as u32)
            .expect("odometer window overflow");
        let in_window = (0..modulus).contains(&value);
        // A carry (or borrow) escapes the window: it runs forever only over
        // a constant top (or zero) tail, which it turns into zeros (or tops).
        let tail = match (in_window, constant) {
            (true, _) => Some(x.shift(len)),
            (false, Some(d)) if value >= modulus && d == top => {
                Some(BoundaryPoint::normalized(Vec::new(), vec![Edge(0)]))
            }
            (false, Some(0)) if value < 0 => {
                Some(BoundaryPoint::normalized(Vec::new(), vec![Edge(top)]))
            }
            _ => None,
        };
        if let Some(tail) = tail {
            let mut v = value.rem_euclid(modulus);
            let mut head = Vec::with_capacity(len);
            for _ in 0..len {
                head.push(Edge((v % n128) as u32));
                v /= n128;
            }
            return tail.prepend(&head);
        }
        len += cycle.len();
    }
}

/// Little-endian digits of `v`, padded to `len`.
fn digits(n: u32, mut v: i128, len: usize) -> Vec<Edge> {
    (0..len)
        .map(|_| {
            let d = v.rem_euclid(n as i128);
            v = v.div_euclid(n as i128);
            Edge(d as u32)
        })
        .collect()
}

/// `θ_g` in closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OdometerMap {
    n: u32,
    /// `α_g` (empty unless `k > 0`).
    pub out_prefix: Vec<Edge>,
    /// `β_g` (empty unless `k < 0`).
    pub in_prefix: Vec<Edge>,
    /// The power of `λ` applied in between.
    pub shift: i64,
}

impl OdometerMap {
    pub fn new(bs: &BaumslagSolitar, g: &BsElement) -> Result<OdometerMap, NotInImage> {
        if !bs.is_alpha_beta(g) {
            return Err(NotInImage(g.to_string()));
        }
        let n = bs.n();
        let len = g.k.unsigned_abs() as u32;
        let scale = (n as i128).pow(len);
        let (out_prefix, in_prefix, shift) = if g.k >= 0 {
            let q = bs.numerator_at(g, 0).expect("integral for k ≥ 0");
            let low = q.rem_euclid(scale);
            (digits(n, low, len as usize), Vec::new(), (q - low) / scale)
        } else {
            let big = bs.numerator_at(g, len).expect("αβ⁻¹ shape");
            let beta = (-big).rem_euclid(scale);
            (
                Vec::new(),
                digits(n, beta, len as usize),
                (big + beta) / scale,
            )
        };
        Ok(OdometerMap {
            n,
            out_prefix,
            in_prefix,
            shift: shift as i64,
        })
    }

    pub fn apply(&self, x: &BoundaryPoint) -> Option<BoundaryPoint> {
        if !x.starts_with(&self.in_prefix) {
            return None;
        }
        Some(
            lambda_power(self.n, self.shift, &x.shift(self.in_prefix.len()))
                .prepend(&self.out_prefix),
        )
    }

    pub fn domain(&self, graph: &Graph) -> ClopenSet {
        ClopenSet::cylinder(graph, graph.path(Vertex(0), &self.in_prefix).expect("rose"))
    }

    pub fn codomain(&self, graph: &Graph) -> ClopenSet {
        ClopenSet::cylinder(
            graph,
            graph.path(Vertex(0), &self.out_prefix).expect("rose"),
        )
    }

    /// The single piece `(β_g, z^m, α_g)` on the rose.
    pub fn to_partial_map(&self, graph: &Graph) -> PartialMap<i64> {
        let path = |e: &[Edge]| -> Path { graph.path(Vertex(0), e).expect("rose") };
        PartialMap::from_pieces(vec![Piece {
            input: path(&self.in_prefix),
            g: self.shift,
            output: path(&self.out_prefix),
        }])
    }
}

/// `odometer_action(n, g)`: closed-form `θ_g` with domain and codomain.
pub fn odometer_action(bs: &BaumslagSolitar, g: &BsElement) -> Result<OdometerMap, NotInImage> {
    OdometerMap::new(bs, g)
}
