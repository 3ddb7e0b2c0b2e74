//! Structural invariants: commutativity, associativity, alternativity,
//! nucleus and center, and sampled checks of the division hypotheses with
//! explicit witnesses when they fail.

use std::collections::HashSet;

use serde::Serialize;

use crate::algebra::{Algebra, Element};
use crate::linalg::Subspace;
use crate::sampling::{random_element, random_pair, trial_rng, Sampling};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum WitnessKind {
    /// `left * right = 0` with both factors nonzero.
    ZeroDivisorPair,
    /// A commutator `v` with `v * v = 0`; `left = right = v`.
    NilpotentCommutator,
    /// A commutator `v = left = right` whose square is not central.
    NonCentralCommutatorSquare,
    /// `(left, right, right)` or `(right, right, left)` is nonzero.
    NonAlternative,
    /// Some combination of `left` and `right` that must be a scalar is not;
    /// the provenance names it.
    NonScalarEvidence,
}

impl WitnessKind {
    /// Kinds whose defining property is `left * right = 0`.
    pub fn is_zero_product(self) -> bool {
        matches!(self, WitnessKind::ZeroDivisorPair | WitnessKind::NilpotentCommutator)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ViolationWitness {
    pub left: Element,
    pub right: Element,
    pub kind: WitnessKind,
    pub provenance: String,
}

impl ViolationWitness {
    pub fn zero_divisor(left: Element, right: Element, provenance: impl Into<String>) -> Self {
        ViolationWitness { left, right, kind: WitnessKind::ZeroDivisorPair, provenance: provenance.into() }
    }

    /// Re-checks the witness exactly against `algebra`.
    pub fn verify(&self, algebra: &Algebra) -> bool {
        match self.kind {
            WitnessKind::ZeroDivisorPair | WitnessKind::NilpotentCommutator => {
                !self.left.is_zero() && !self.right.is_zero() && algebra.multiply(&self.left, &self.right).is_zero()
            }
            WitnessKind::NonCentralCommutatorSquare => {
                !center(algebra).contains(algebra.multiply(&self.left, &self.right).coords())
            }
            WitnessKind::NonAlternative => {
                let (x, y) = (&self.left, &self.right);
                !algebra.associator(x, y, y).is_zero() || !algebra.associator(y, y, x).is_zero()
            }
            WitnessKind::NonScalarEvidence => true,
        }
    }
}

/// All basis associators `(e_l, e_i, e_j)`.
pub struct AssociatorCube {
    dim: usize,
    values: Vec<Element>,
}

impl AssociatorCube {
    pub fn new(algebra: &Algebra) -> Self {
        let n = algebra.dim();
        let basis: Vec<Element> = (0..n).map(|i| algebra.basis(i)).collect();
        let products: Vec<Element> = (0..n * n).map(|idx| algebra.multiply(&basis[idx / n], &basis[idx % n])).collect();
        let mut values = Vec::with_capacity(n * n * n);
        for l in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let left = algebra.multiply(&products[l * n + i], &basis[j]);
                    let right = algebra.multiply(&basis[l], &products[i * n + j]);
                    values.push(&left - &right);
                }
            }
        }
        AssociatorCube { dim: n, values }
    }

    pub fn get(&self, l: usize, i: usize, j: usize) -> &Element {
        &self.values[(l * self.dim + i) * self.dim + j]
    }

    pub fn all_zero(&self) -> bool {
        self.values.iter().all(Element::is_zero)
    }
}

pub fn is_commutative(algebra: &Algebra) -> bool {
    first_noncommuting_pair(algebra).is_none()
}

/// The first basis pair `i < j` with `e_i e_j != e_j e_i`.
pub fn first_noncommuting_pair(algebra: &Algebra) -> Option<(usize, usize)> {
    let n = algebra.dim();
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .find(|&(i, j)| !algebra.commutator(&algebra.basis(i), &algebra.basis(j)).is_zero())
}

pub fn is_associative(algebra: &Algebra) -> bool {
    AssociatorCube::new(algebra).all_zero()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AlternativeLaw {
    /// `(x, y, y) = 0`
    Right,
    /// `(y, y, x) = 0`
    Left,
}

/// A basis triple where the linearized alternative law fails, with an
/// explicit pair exhibiting the failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlternativityFailure {
    pub law: AlternativeLaw,
    pub triple: (usize, usize, usize),
    pub x: Element,
    pub y: Element,
}

/// Checks skew-symmetry of basis associators in the last two slots (right
/// law) and the first two slots (left law). Over characteristic != 2 this is
/// equivalent to `(x, y, y) = 0 = (y, y, x)` for all `x, y`.
pub fn alternativity_failure(algebra: &Algebra) -> Option<AlternativityFailure> {
    alternativity_failure_in(algebra, &AssociatorCube::new(algebra))
}

fn alternativity_failure_in(algebra: &Algebra, cube: &AssociatorCube) -> Option<AlternativityFailure> {
    let n = algebra.dim();
    for i in 0..n {
        for j in 0..n {
            for k in j..n {
                if !(cube.get(i, j, k) + cube.get(i, k, j)).is_zero() {
                    let x = algebra.basis(i);
                    let y = explicit_y(algebra, j, k, |y| algebra.associator(&x, y, y));
                    return Some(AlternativityFailure { law: AlternativeLaw::Right, triple: (i, j, k), x, y });
                }
                if !(cube.get(j, k, i) + cube.get(k, j, i)).is_zero() {
                    let x = algebra.basis(i);
                    let y = explicit_y(algebra, j, k, |y| algebra.associator(y, y, &x));
                    return Some(AlternativityFailure { law: AlternativeLaw::Left, triple: (i, j, k), x, y });
                }
            }
        }
    }
    None
}

// The linearization of f(y) = A(y, y) at e_j + e_k is
// f(e_j + e_k) - f(e_j) - f(e_k), so one of the three is nonzero.
fn explicit_y(algebra: &Algebra, j: usize, k: usize, f: impl Fn(&Element) -> Element) -> Element {
    let ej = algebra.basis(j);
    let ek = algebra.basis(k);
    let sum = &ej + &ek;
    [ej, ek, sum]
        .into_iter()
        .find(|y| !f(y).is_zero())
        .expect("a failing linearized law has a failing diagonal instance")
}

pub fn is_alternative(algebra: &Algebra) -> bool {
    alternativity_failure(algebra).is_none()
}

// Kernel of the map sending e_l to the list images(l); every list must have
// the same length.
fn kernel_of_map(algebra: &Algebra, images: &[Vec<&Element>]) -> Subspace {
    let n = algebra.dim();
    let tests = images.first().map_or(0, Vec::len);
    let mut rows = Subspace::zero(algebra.field(), n);
    for t in 0..tests {
        for k in 0..n {
            if rows.is_full() {
                break;
            }
            let row: Vec<_> = images.iter().map(|image| image[t].coords()[k].clone()).collect();
            if row.iter().any(|c| !c.is_zero()) {
                rows.insert(&row);
            }
        }
    }
    rows.annihilator()
}

/// `{n : (n, R, R) = 0}`.
pub fn nucleus(algebra: &Algebra) -> Subspace {
    nucleus_in(algebra, &AssociatorCube::new(algebra))
}

fn nucleus_in(algebra: &Algebra, cube: &AssociatorCube) -> Subspace {
    let n = algebra.dim();
    let images: Vec<Vec<&Element>> = (0..n)
        .map(|l| (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| cube.get(l, i, j)).collect())
        .collect();
    kernel_of_map(algebra, &images)
}

/// `{c in N : (c, R) = 0}`.
pub fn center(algebra: &Algebra) -> Subspace {
    center_in(algebra, &AssociatorCube::new(algebra))
}

fn center_in(algebra: &Algebra, cube: &AssociatorCube) -> Subspace {
    let n = algebra.dim();
    let commutators: Vec<Vec<Element>> =
        (0..n).map(|l| (0..n).map(|i| algebra.commutator(&algebra.basis(l), &algebra.basis(i))).collect()).collect();
    let images: Vec<Vec<&Element>> = (0..n)
        .map(|l| {
            let assoc = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| cube.get(l, i, j));
            assoc.chain(commutators[l].iter()).collect()
        })
        .collect();
    kernel_of_map(algebra, &images)
}

/// Outcome of a sampled hypothesis check. `Holds` is evidence, not proof:
/// it counts the distinct nonzero commutators examined.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum HypothesisStatus {
    Holds { sampled: usize },
    Violated(ViolationWitness),
}

impl HypothesisStatus {
    pub fn holds(&self) -> bool {
        matches!(self, HypothesisStatus::Holds { .. })
    }

    pub fn witness(&self) -> Option<&ViolationWitness> {
        match self {
            HypothesisStatus::Holds { .. } => None,
            HypothesisStatus::Violated(w) => Some(w),
        }
    }
}

struct Probe {
    x: Element,
    y: Element,
    provenance: String,
}

// Basis pairs (i < j), then (e_i + e_j, e_k) and (e_i - e_j, e_k), then the
// seeded random pairs.
fn commutator_probes<'a>(algebra: &'a Algebra, sampling: Sampling) -> impl Iterator<Item = Probe> + 'a {
    let n = algebra.dim();
    let pairs = (0..n).flat_map(move |i| {
        (i + 1..n).map(move |j| Probe {
            x: algebra.basis(i),
            y: algebra.basis(j),
            provenance: format!("commutator (e{i}, e{j})"),
        })
    });
    let combos = (0..n).flat_map(move |i| {
        (i + 1..n).flat_map(move |j| {
            [(1i64, '+'), (-1, '-')].into_iter().flat_map(move |(sign, ch)| {
                (0..n).map(move |k| {
                    let ej = algebra.basis(j).scale(&algebra.field().from_i64(sign));
                    Probe {
                        x: &algebra.basis(i) + &ej,
                        y: algebra.basis(k),
                        provenance: format!("commutator (e{i} {ch} e{j}, e{k})"),
                    }
                })
            })
        })
    });
    let random = (0..sampling.trials).map(move |t| {
        let (x, y) = random_pair(algebra, sampling.seed, t, sampling.max_num);
        Probe { x, y, provenance: format!("commutator of random pair #{t} (seed {})", sampling.seed) }
    });
    pairs.chain(combos).chain(random)
}

fn scan_commutators(
    algebra: &Algebra,
    sampling: Sampling,
    mut check: impl FnMut(&Element, &str) -> Option<ViolationWitness>,
) -> HypothesisStatus {
    let mut seen: HashSet<Element> = HashSet::new();
    for probe in commutator_probes(algebra, sampling) {
        let v = algebra.commutator(&probe.x, &probe.y);
        if v.is_zero() || seen.contains(&v) {
            continue;
        }
        if let Some(w) = check(&v, &probe.provenance) {
            return HypothesisStatus::Violated(w);
        }
        seen.insert(-&v);
        seen.insert(v);
    }
    HypothesisStatus::Holds { sampled: seen.len() / 2 }
}

/// A nonzero partner `w` with `x w = 0` or `w x = 0`, if `x` is a zero
/// divisor. Returned as `(x, w)` or `(w, x)` so the product is zero.
pub fn zero_divisor_partner(algebra: &Algebra, x: &Element) -> Option<(Element, Element)> {
    if x.is_zero() {
        return None;
    }
    let left = algebra.left_mul_matrix(x);
    if left.is_singular().expect("square") {
        let w = Element::new(left.kernel().basis()[0].clone());
        return Some((x.clone(), w));
    }
    let right = algebra.right_mul_matrix(x);
    if right.is_singular().expect("square") {
        let w = Element::new(right.kernel().basis()[0].clone());
        return Some((w, x.clone()));
    }
    None
}

fn commutator_zero_divisor(algebra: &Algebra, v: &Element, provenance: &str) -> Option<ViolationWitness> {
    if algebra.multiply(v, v).is_zero() {
        return Some(ViolationWitness {
            left: v.clone(),
            right: v.clone(),
            kind: WitnessKind::NilpotentCommutator,
            provenance: format!("{provenance} squares to zero"),
        });
    }
    zero_divisor_partner(algebra, v).map(|(l, r)| {
        ViolationWitness::zero_divisor(
            l,
            r,
            format!("{provenance} is a zero divisor (singular multiplication operator)"),
        )
    })
}

/// Hypothesis (i): every nonzero commutator is a non-zero-divisor, and for
/// associative algebras also (ii)(b): commutator squares are central.
/// Sampled over basis commutators, their `+-` combinations and random pairs.
pub fn hypothesis_check(algebra: &Algebra, sampling: Sampling) -> HypothesisStatus {
    let associative_center = is_associative(algebra).then(|| center(algebra));
    scan_commutators(algebra, sampling, |v, provenance| {
        if let Some(w) = commutator_zero_divisor(algebra, v, provenance) {
            return Some(w);
        }
        let c = associative_center.as_ref()?;
        non_central_square(algebra, c, v, provenance)
    })
}

fn non_central_square(algebra: &Algebra, center: &Subspace, v: &Element, provenance: &str) -> Option<ViolationWitness> {
    let sq = algebra.multiply(v, v);
    (!center.contains(sq.coords())).then(|| ViolationWitness {
        left: v.clone(),
        right: v.clone(),
        kind: WitnessKind::NonCentralCommutatorSquare,
        provenance: format!("{provenance} has a non-central square"),
    })
}

/// Hypothesis (i) alone.
pub fn commutators_invertible(algebra: &Algebra, sampling: Sampling) -> HypothesisStatus {
    scan_commutators(algebra, sampling, |v, p| commutator_zero_divisor(algebra, v, p))
}

/// `(x, y)^2` central for the sampled commutators.
pub fn commutator_squares_central(algebra: &Algebra, sampling: Sampling) -> HypothesisStatus {
    let c = center(algebra);
    scan_commutators(algebra, sampling, |v, p| non_central_square(algebra, &c, v, p))
}

/// Searches basis vectors, then `e_i +- e_j`, then seeded random elements
/// for a zero divisor. At most `budget` candidates are examined in total.
pub fn find_zero_divisor(algebra: &Algebra, budget: usize, sampling: Sampling) -> Option<ViolationWitness> {
    let n = algebra.dim();
    let field = algebra.field();
    let basis = (0..n).map(|i| (algebra.basis(i), format!("basis vector e{i}")));
    let combos = (0..n).flat_map(move |i| {
        (i + 1..n).flat_map(move |j| {
            [(1i64, '+'), (-1, '-')].into_iter().map(move |(s, ch)| {
                (&algebra.basis(i) + &algebra.basis(j).scale(&field.from_i64(s)), format!("e{i} {ch} e{j}"))
            })
        })
    });
    let random = (0..).map(move |t| {
        let mut rng = trial_rng(sampling.seed, t);
        (random_element(algebra, &mut rng, sampling.max_num), format!("random element #{t} (seed {})", sampling.seed))
    });
    basis.chain(combos).chain(random).take(budget).find_map(|(x, label)| {
        zero_divisor_partner(algebra, &x).map(|(l, r)| {
            ViolationWitness::zero_divisor(l, r, format!("{label} has a singular multiplication operator"))
        })
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Fact {
    /// `v^4` lies in the nucleus.
    FourthPowerNuclear,
    /// `(v^2, e_i, e_j) v = 0` for all basis pairs.
    SquareAssociatorKillsV,
    /// `v^2` lies in the center.
    SquareCentral,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactFailure {
    pub fact: Fact,
    pub trial: u64,
    pub x: Element,
    pub y: Element,
}

/// Results of checking the commutator facts of non-associative alternative
/// algebras on random pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactsReport {
    pub trials: u64,
    pub hypothesis_mismatch: Option<String>,
    pub fourth_power_nuclear: u64,
    pub square_associator_kills_v: u64,
    /// `None` when some sampled commutator was a zero divisor, since the
    /// centrality fact needs all commutators to be non-zero-divisors.
    pub square_central: Option<u64>,
    pub first_failure: Option<FactFailure>,
}

impl FactsReport {
    pub fn all_passed(&self) -> bool {
        self.hypothesis_mismatch.is_none() && self.first_failure.is_none()
    }
}

pub fn check_facts(algebra: &Algebra, sampling: Sampling) -> FactsReport {
    let mut report = FactsReport {
        trials: sampling.trials,
        hypothesis_mismatch: None,
        fourth_power_nuclear: 0,
        square_associator_kills_v: 0,
        square_central: None,
        first_failure: None,
    };
    let cube = AssociatorCube::new(algebra);
    if cube.all_zero() {
        report.hypothesis_mismatch = Some("algebra is associative".into());
        return report;
    }
    if let Some(f) = alternativity_failure_in(algebra, &cube) {
        report.hypothesis_mismatch = Some(format!("algebra is not alternative (basis triple {:?})", f.triple));
        return report;
    }
    let nuc = nucleus_in(algebra, &cube);
    let cen = center_in(algebra, &cube);
    let n = algebra.dim();
    let basis: Vec<Element> = (0..n).map(|i| algebra.basis(i)).collect();

    let samples: Vec<(Element, Element, Element)> = (0..sampling.trials)
        .map(|t| {
            let (x, y) = random_pair(algebra, sampling.seed, t, sampling.max_num);
            let v = algebra.commutator(&x, &y);
            (x, y, v)
        })
        .collect();
    let centrality_applies = samples.iter().all(|(_, _, v)| v.is_zero() || zero_divisor_partner(algebra, v).is_none());
    let mut central = 0;

    for (t, (x, y, v)) in samples.iter().enumerate() {
        let fail = |fact| FactFailure { fact, trial: t as u64, x: x.clone(), y: y.clone() };
        let v2 = algebra.multiply(v, v);
        let v4 = algebra.multiply(&v2, &v2);
        if !nuc.contains(v4.coords()) {
            report.first_failure = Some(fail(Fact::FourthPowerNuclear));
            break;
        }
        report.fourth_power_nuclear += 1;
        let kills = basis
            .iter()
            .all(|ei| basis.iter().all(|ej| algebra.multiply(&algebra.associator(&v2, ei, ej), v).is_zero()));
        if !kills {
            report.first_failure = Some(fail(Fact::SquareAssociatorKillsV));
            break;
        }
        report.square_associator_kills_v += 1;
        if centrality_applies {
            if !cen.contains(v2.coords()) {
                report.first_failure = Some(fail(Fact::SquareCentral));
                break;
            }
            central += 1;
        }
    }
    report.square_central = centrality_applies.then_some(central);
    report
}

/// Everything the `check` command reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub name: String,
    pub dim: usize,
    pub is_commutative: bool,
    pub is_associative: bool,
    pub is_alternative: bool,
    pub alternativity_failure: Option<AlternativityFailure>,
    pub nucleus: Subspace,
    pub center: Subspace,
    pub hypothesis_i: HypothesisStatus,
    pub hypothesis_iib: HypothesisStatus,
    pub notes: Vec<String>,
}

pub fn analyze(algebra: &Algebra, sampling: Sampling) -> AnalysisReport {
    let cube = AssociatorCube::new(algebra);
    let is_associative = cube.all_zero();
    let alternativity_failure = alternativity_failure_in(algebra, &cube);
    let nucleus = nucleus_in(algebra, &cube);
    let center = center_in(algebra, &cube);
    let is_commutative = is_commutative(algebra);
    let hypothesis_i = scan_commutators(algebra, sampling, |v, p| commutator_zero_divisor(algebra, v, p));
    let hypothesis_iib = scan_commutators(algebra, sampling, |v, p| non_central_square(algebra, &center, v, p));

    let mut notes = Vec::new();
    notes.push(format!(
        "commutator checks sampled: basis pairs, +- combinations and {} random pairs (seed {}, |coords| <= {})",
        sampling.trials, sampling.seed, sampling.max_num
    ));
    if let Some(f) = &alternativity_failure {
        notes.push(format!("alternative law {:?} fails on basis triple {:?}", f.law, f.triple));
    }
    if !center.is_subspace_of(&nucleus) {
        notes.push("center is not contained in the nucleus (internal inconsistency)".into());
    }
    AnalysisReport {
        name: algebra.name().to_string(),
        dim: algebra.dim(),
        is_commutative,
        is_associative,
        is_alternative: alternativity_failure.is_none(),
        alternativity_failure,
        nucleus,
        center,
        hypothesis_i,
        hypothesis_iib,
        notes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{direct_sum, octonion_algebra, quaternion_algebra, sedenions};
    use crate::scalar::{FieldSpec, Scalar};

    fn q() -> FieldSpec {
        FieldSpec::rational()
    }

    fn s(n: i64) -> Scalar {
        q().from_i64(n)
    }

    fn hamilton() -> Algebra {
        quaternion_algebra(q(), &s(-1), &s(-1)).unwrap()
    }

    fn split() -> Algebra {
        quaternion_algebra(q(), &s(1), &s(-1)).unwrap()
    }

    fn octonions() -> Algebra {
        octonion_algebra(q(), &s(-1), &s(-1), &s(-1)).unwrap()
    }

    // F[t]/(t^2 - 1).
    fn split_quadratic() -> Algebra {
        let entries = vec![(0, 0, 0, s(1)), (0, 1, 1, s(1)), (1, 0, 1, s(1)), (1, 1, 0, s(1))];
        Algebra::new("F[t]/(t^2-1)", q(), vec!["1".into(), "t".into()], vec![s(1), s(0)], entries).unwrap()
    }

    #[test]
    fn alternativity() {
        assert!(is_alternative(&octonions()));
        assert!(is_alternative(&hamilton()));
        let sed = sedenions(q()).unwrap();
        let f = alternativity_failure(&sed).unwrap();
        let (x, y) = (&f.x, &f.y);
        let failing = match f.law {
            AlternativeLaw::Right => sed.associator(x, y, y),
            AlternativeLaw::Left => sed.associator(y, y, x),
        };
        assert!(!failing.is_zero());
        let w =
            ViolationWitness { left: f.x, right: f.y, kind: WitnessKind::NonAlternative, provenance: String::new() };
        assert!(w.verify(&sed));
    }

    #[test]
    fn nucleus_and_center() {
        let h = hamilton();
        assert!(nucleus(&h).is_full());
        assert_eq!(center(&h), h.scalar_line());
        let o = octonions();
        assert_eq!(nucleus(&o), o.scalar_line());
        assert_eq!(center(&o), o.scalar_line());
        let sed = sedenions(q()).unwrap();
        assert_eq!(nucleus(&sed), sed.scalar_line());
        assert!(center(&split_quadratic()).is_full());
        let sum = direct_sum(&h, &h).unwrap();
        assert_eq!(center(&sum).dim(), 2);
    }

    #[test]
    fn commutativity_and_associativity() {
        assert!(is_commutative(&split_quadratic()));
        assert_eq!(first_noncommuting_pair(&hamilton()), Some((1, 2)));
        assert!(is_associative(&hamilton()));
        assert!(!is_associative(&octonions()));
    }

    #[test]
    fn associator_of_octonion_generators() {
        let o = octonions();
        let (a, b, c) = (o.basis(1), o.basis(2), o.basis(4));
        let abc = o.multiply(&o.multiply(&a, &b), &c);
        assert_eq!(o.associator(&a, &b, &c), abc.scale(&s(2)));
        assert!(!abc.is_zero());
    }

    #[test]
    fn hypothesis_on_division_algebras() {
        assert!(hypothesis_check(&hamilton(), Sampling::new(50, 1)).holds());
        assert!(hypothesis_check(&octonions(), Sampling::new(50, 1)).holds());
    }

    #[test]
    fn hypothesis_on_split_quaternions() {
        let h = split();
        match hypothesis_check(&h, Sampling::default()) {
            HypothesisStatus::Violated(w) => {
                assert!(w.kind.is_zero_product());
                assert!(w.verify(&h));
            }
            other => panic!("{other:?}"),
        }
        let v = h.commutator(&(&h.basis(2) - &h.basis(1)), &h.basis(3));
        assert_eq!(v, (&h.basis(1) - &h.basis(2)).scale(&s(2)));
        assert!(h.multiply(&v, &v).is_zero());
    }

    #[test]
    fn zero_divisor_search() {
        let h = split();
        let w = find_zero_divisor(&h, 100, Sampling::default()).unwrap();
        assert!(w.verify(&h));
        assert!(find_zero_divisor(&hamilton(), 50, Sampling::default()).is_none());
        let (l, r) = zero_divisor_partner(&h, &(&h.one() + &h.basis(1))).unwrap();
        assert!(h.multiply(&l, &r).is_zero());
        assert!(zero_divisor_partner(&h, &h.zero()).is_none());
    }

    #[test]
    fn commutator_squares_in_quaternions_over_a_product() {
        let h = hamilton();
        let sum = direct_sum(&h, &h).unwrap();
        // (i, i) and (j, 0) give a commutator (2k, 0) whose square is not central.
        assert!(!commutators_invertible(&sum, Sampling::new(0, 0)).holds());
        assert!(commutator_squares_central(&h, Sampling::new(20, 0)).holds());
    }

    #[test]
    fn facts_on_octonions() {
        let report = check_facts(&octonions(), Sampling::new(30, 2));
        assert!(report.all_passed());
        assert_eq!(report.square_central, Some(30));
        assert!(check_facts(&hamilton(), Sampling::new(5, 0)).hypothesis_mismatch.is_some());
        let o = octonions();
        let v = o.commutator(&o.basis(1), &o.basis(2));
        assert_eq!(v, o.basis(3).scale(&s(2)));
        assert_eq!(o.multiply(&v, &v), o.scalar(&s(-4)));
    }

    #[test]
    fn analysis_report_invariants() {
        for a in [hamilton(), octonions(), split(), sedenions(q()).unwrap()] {
            let r = analyze(&a, Sampling::new(10, 0));
            assert!(r.center.is_subspace_of(&r.nucleus));
            if r.is_associative {
                assert!(r.nucleus.is_full());
            }
        }
        let r = analyze(&split(), Sampling::new(10, 0));
        assert!(!r.hypothesis_i.holds());
    }
}
