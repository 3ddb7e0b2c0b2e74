//! Product laws that every frame must obey, checked exactly: sign rules for
//! permuted triples, anti-associativity, and multiplicativity of the norm.

use serde::Serialize;

use crate::algebra::{Algebra, Element};
use crate::sampling::{random_pair, Sampling};

use super::{norm, Frame};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub property: String,
    pub checked: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl PropertyReport {
    fn new(property: &str) -> Self {
        PropertyReport { property: property.into(), checked: 0, failures: 0, first_failure: None }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

// The six orderings of (0, 1, 2) with their signs.
const PERMUTATIONS: [([usize; 3], i64); 6] =
    [([0, 1, 2], 1), ([1, 2, 0], 1), ([2, 0, 1], 1), ([1, 0, 2], -1), ([0, 2, 1], -1), ([2, 1, 0], -1)];

fn triples(n: usize) -> impl Iterator<Item = [usize; 3]> {
    (0..n).flat_map(move |i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| [i, j, k])))
}

fn signed(x: &Element, sign: i64) -> Element {
    if sign < 0 {
        -x
    } else {
        x.clone()
    }
}

/// For every triple of frame elements and every permutation `s`:
/// `s(a)(s(b)s(c)) = sgn(s) a(bc)` and `(s(a)s(b))s(c) = sgn(s) (ab)c`.
pub fn permutation_laws(algebra: &Algebra, frame: &Frame) -> PropertyReport {
    let mut report = PropertyReport::new("permuted triple sign laws");
    let u = frame.elements();
    for t in triples(u.len()) {
        let [a, b, c] = t.map(|i| &u[i]);
        let right = algebra.multiply(a, &algebra.multiply(b, c));
        let left = algebra.multiply(&algebra.multiply(a, b), c);
        for (p, sign) in PERMUTATIONS {
            let [x, y, z] = p.map(|i| &u[t[i]]);
            let r = algebra.multiply(x, &algebra.multiply(y, z));
            report.record(r == signed(&right, sign), || format!("x(yz) for triple {:?} permuted by {p:?}", t));
            let l = algebra.multiply(&algebra.multiply(x, y), z);
            report.record(l == signed(&left, sign), || format!("(xy)z for triple {:?} permuted by {p:?}", t));
        }
    }
    report
}

/// Triples `{a, b, c}` of frame elements where `c` also anticommutes with
/// `ab`, as indices into the frame.
pub fn anti_associative_triples(algebra: &Algebra, frame: &Frame) -> Vec<[usize; 3]> {
    let u = frame.elements();
    triples(u.len())
        .filter(|&[i, j, k]| algebra.anticommutator(&u[k], &algebra.multiply(&u[i], &u[j])).is_zero())
        .collect()
}

/// `(xy)z = -x(yz)` for every ordering of every anti-associative triple.
pub fn anti_associativity(algebra: &Algebra, frame: &Frame) -> PropertyReport {
    let mut report = PropertyReport::new("anti-associative triples");
    let u = frame.elements();
    for t in anti_associative_triples(algebra, frame) {
        for (p, _) in PERMUTATIONS {
            let [x, y, z] = p.map(|i| &u[t[i]]);
            let l = algebra.multiply(&algebra.multiply(x, y), z);
            let r = algebra.multiply(x, &algebra.multiply(y, z));
            report.record(l == -&r, || format!("(xy)z = -x(yz) for triple {:?} ordered {p:?}", t));
        }
    }
    report
}

/// `n(xy) = n(x) n(y)` on seeded random pairs. The frame must span the
/// algebra.
pub fn norm_multiplicativity(algebra: &Algebra, frame: &Frame, sampling: Sampling) -> PropertyReport {
    let mut report = PropertyReport::new("norm multiplicativity");
    for t in 0..sampling.trials {
        let (x, y) = random_pair(algebra, sampling.seed, t, sampling.max_num);
        let xy = algebra.multiply(&x, &y);
        let ok = match (norm(algebra, frame, &x), norm(algebra, frame, &y), norm(algebra, frame, &xy)) {
            (Some(nx), Some(ny), Some(nxy)) => nxy == &nx * &ny,
            _ => false,
        };
        report.record(ok, || format!("random pair #{t} (seed {})", sampling.seed));
    }
    report
}
