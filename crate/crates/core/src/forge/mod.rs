//! Frame discovery. Starting from a noncommutative algebra, builds a
//! quaternion frame `(a, b, ab)` and, on the alternative track, an octonion
//! frame `(a, b, ab, c, ac, bc, (bc)a)`, then either proves the frame spans
//! the whole algebra or extracts an exact zero-divisor witness.

#![allow(clippy::result_large_err)]

mod construct;
mod identities;
mod norm;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{Algebra, Element};
use crate::analysis::{self, find_zero_divisor, HypothesisStatus, ViolationWitness, WitnessKind};
use crate::linalg::{Matrix, Subspace};
use crate::sampling::Sampling;
use crate::scalar::Scalar;

pub use construct::{
    anticommute_reduce, build_octonion_frame, build_quaternion_frame, central_quadratic, central_shift, condition_star,
    extend_frame, saturation_check, CentralQuadratic, CentralShift, Extension, FrameStep, Saturation,
};
pub use identities::{
    anti_associative_triples, anti_associativity, norm_multiplicativity, permutation_laws, PropertyReport,
};
pub use norm::{conjugate, division_verdict, frame_coordinates, norm, norm_form, positive_definite};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ForgeError {
    #[error("commutator (x, y) is zero")]
    ZeroCommutator,
    #[error("{what} is not a scalar: square of {element} is {square}")]
    NonCentralSquare { element: Element, square: Element, what: &'static str },
    #[error("zero product ({what}): {left} * {right} = 0")]
    DegenerateProduct { left: Element, right: Element, what: &'static str },
    #[error("a x^2 + b x + c = {residual} for x = {x}, (a, b, c) = ({a}, {b}, {c})")]
    IdentityNotSatisfied { x: Element, a: Scalar, b: Scalar, c: Scalar, residual: Element },
    #[error("element {x} is a scalar")]
    ScalarInput { x: Element },
    #[error("no basis vector fails to commute with {x}")]
    NoNonzeroCommutator { x: Element },
    #[error("p u + u p is not a scalar for frame element {index}: {anticommutator}")]
    ConditionStarViolated { index: usize, p: Element, u: Element, anticommutator: Element },
    #[error("reduced element {m} does not anticommute with frame element {index}")]
    AnticommutationFailed { index: usize, m: Element },
    #[error("complement {m} squares to zero")]
    NilpotentComplement { m: Element },
    #[error("complement {m} lies in the frame span")]
    ComplementInSpan { m: Element },
    #[error("algebra is commutative")]
    CommutativeInput,
    #[error("commutator {commutator} has non-scalar square {square}")]
    NonScalarCommutatorSquare { commutator: Element, square: Element },
    #[error("quaternion frame already spans the algebra")]
    AlreadyAssociativeSaturated,
    #[error("product {left} * {right} = {product} should vanish")]
    AxiomBreach { left: Element, right: Element, product: Element },
    #[error("invalid frame: {0}")]
    FrameInvalid(String),
    #[error("expected a frame of size {expected}, got {got}")]
    FrameSize { expected: usize, got: usize },
}

impl ForgeError {
    /// The violation this error exhibits, if it carries elements. Zero-product
    /// kinds are exact zero divisors; the rest are non-scalar evidence.
    pub fn evidence(&self) -> Option<ViolationWitness> {
        let other = |left: &Element, right: &Element| ViolationWitness {
            left: left.clone(),
            right: right.clone(),
            kind: WitnessKind::NonScalarEvidence,
            provenance: self.to_string(),
        };
        match self {
            ForgeError::DegenerateProduct { left, right, .. } => {
                Some(ViolationWitness::zero_divisor(left.clone(), right.clone(), self.to_string()))
            }
            ForgeError::NilpotentComplement { m } => {
                Some(ViolationWitness::zero_divisor(m.clone(), m.clone(), self.to_string()))
            }
            ForgeError::NonCentralSquare { element, .. } => Some(other(element, element)),
            ForgeError::NonScalarCommutatorSquare { commutator, .. } => Some(other(commutator, commutator)),
            ForgeError::ConditionStarViolated { p, u, .. } => Some(other(p, u)),
            ForgeError::IdentityNotSatisfied { x, .. } => Some(other(x, x)),
            ForgeError::AxiomBreach { left, right, .. } => Some(other(left, right)),
            _ => None,
        }
    }
}

/// Pairwise anticommuting elements with nonzero scalar squares, linearly
/// independent together with `1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Frame {
    elements: Vec<Element>,
    squares: Vec<Scalar>,
    log: Vec<String>,
}

impl Frame {
    pub fn empty() -> Self {
        Frame { elements: Vec::new(), squares: Vec::new(), log: Vec::new() }
    }

    /// Computes the squares and validates the frame contract.
    pub fn new(algebra: &Algebra, elements: Vec<Element>, log: Vec<String>) -> Result<Self, ForgeError> {
        let mut squares = Vec::with_capacity(elements.len());
        for (l, u) in elements.iter().enumerate() {
            algebra.check_element(u).map_err(|e| ForgeError::FrameInvalid(format!("element {l}: {e}")))?;
            let sq = algebra.multiply(u, u);
            let gamma = algebra.scalar_part(&sq).ok_or_else(|| ForgeError::NonCentralSquare {
                element: u.clone(),
                square: sq,
                what: "frame element",
            })?;
            squares.push(gamma);
        }
        let frame = Frame { elements, squares, log };
        frame.validate(algebra)?;
        Ok(frame)
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn squares(&self) -> &[Scalar] {
        &self.squares
    }

    pub fn log(&self) -> &[String] {
        &self.log
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `span{1, u_1, .., u_n}`.
    pub fn span(&self, algebra: &Algebra) -> Subspace {
        let one = algebra.one();
        Subspace::span(
            algebra.field(),
            algebra.dim(),
            std::iter::once(one.coords()).chain(self.elements.iter().map(Element::coords)),
        )
    }

    /// Columns `1, u_1, .., u_n`.
    pub fn change_of_basis(&self, algebra: &Algebra) -> Matrix {
        let columns: Vec<_> =
            std::iter::once(algebra.one()).chain(self.elements.iter().cloned()).map(Element::into_coords).collect();
        Matrix::from_columns(algebra.field(), algebra.dim(), &columns).expect("columns have the algebra dimension")
    }

    /// Re-checks every frame invariant exactly.
    pub fn validate(&self, algebra: &Algebra) -> Result<(), ForgeError> {
        if self.squares.len() != self.elements.len() {
            return Err(ForgeError::FrameInvalid("squares and elements differ in length".into()));
        }
        for (l, (u, gamma)) in self.elements.iter().zip(&self.squares).enumerate() {
            if algebra.multiply(u, u) != algebra.scalar(gamma) {
                return Err(ForgeError::FrameInvalid(format!("u{} squared is not {gamma}", l + 1)));
            }
            if gamma.is_zero() {
                return Err(ForgeError::FrameInvalid(format!("u{} squares to zero", l + 1)));
            }
            if algebra.is_scalar(u) {
                return Err(ForgeError::FrameInvalid(format!("u{} is a scalar", l + 1)));
            }
        }
        for (l, u) in self.elements.iter().enumerate() {
            for (s, w) in self.elements.iter().enumerate().skip(l + 1) {
                if !algebra.anticommutator(u, w).is_zero() {
                    return Err(ForgeError::FrameInvalid(format!("u{} and u{} do not anticommute", l + 1, s + 1)));
                }
            }
        }
        if self.span(algebra).dim() != self.len() + 1 {
            return Err(ForgeError::FrameInvalid("1 and the frame are linearly dependent".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Classification {
    CommutativeOutOfScope,
    QuaternionSaturated,
    OctonionSaturated,
    HypothesisViolated,
    CharTwoUnsupported,
    /// The center is larger than the scalars and no zero divisor was found.
    CenterNotScalar,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ForgeOptions {
    pub sampling: Sampling,
    /// Candidates examined when searching for a zero divisor directly.
    /// `None` scales with the dimension.
    pub zero_divisor_budget: Option<usize>,
}

impl ForgeOptions {
    fn budget(&self, dim: usize) -> usize {
        self.zero_divisor_budget.unwrap_or(dim * dim + self.sampling.trials as usize)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForgeResult {
    pub algebra: String,
    pub classification: Classification,
    pub frame: Option<Frame>,
    pub witness: Option<ViolationWitness>,
    pub change_of_basis: Option<Matrix>,
    pub norm_diagonal: Option<Vec<Scalar>>,
    pub positive_definite: Option<bool>,
    pub division_verdict: Option<String>,
    pub audit: Vec<String>,
}

impl ForgeResult {
    fn bare(algebra: &str, classification: Classification, audit: Vec<String>) -> Self {
        ForgeResult {
            algebra: algebra.to_string(),
            classification,
            frame: None,
            witness: None,
            change_of_basis: None,
            norm_diagonal: None,
            positive_definite: None,
            division_verdict: None,
            audit,
        }
    }

    /// The result for an input over a field of characteristic two.
    pub fn char_two_unsupported(name: &str) -> Self {
        ForgeResult::bare(name, Classification::CharTwoUnsupported, vec!["characteristic 2 is not supported".into()])
    }
}

struct Run<'a> {
    algebra: &'a Algebra,
    options: ForgeOptions,
    audit: Vec<String>,
}

impl Run<'_> {
    fn note(&mut self, line: impl Into<String>) {
        self.audit.push(line.into());
    }

    fn finish(self, classification: Classification) -> ForgeResult {
        ForgeResult::bare(self.algebra.name(), classification, self.audit)
    }

    fn search_zero_divisor(&mut self) -> Option<ViolationWitness> {
        let budget = self.options.budget(self.algebra.dim());
        let found = find_zero_divisor(self.algebra, budget, self.options.sampling);
        match &found {
            Some(w) => self.note(format!("zero-divisor search: {}", w.provenance)),
            None => self.note(format!("zero-divisor search: none among {budget} candidates")),
        }
        found
    }

    /// Prefers an exact zero product; falls back to the given evidence.
    fn violated(mut self, evidence: Option<ViolationWitness>) -> ForgeResult {
        let witness = match evidence {
            Some(w) if w.kind.is_zero_product() => Some(w),
            other => {
                if let Some(w) = &other {
                    self.note(format!("evidence: {}", w.provenance));
                }
                self.search_zero_divisor().or(other)
            }
        };
        if let Some(w) = &witness {
            let a = self.algebra;
            self.note(format!("witness: ({}) * ({}) [{:?}]", a.render(&w.left), a.render(&w.right), w.kind));
        }
        let mut result = self.finish(Classification::HypothesisViolated);
        result.witness = witness;
        result
    }

    fn saturated(mut self, classification: Classification, frame: Frame) -> ForgeResult {
        let diagonal = norm_form(&frame);
        let definite = positive_definite(self.algebra.field(), &frame);
        let verdict = division_verdict(definite);
        self.note(format!("norm diagonal: [{}]", join(&diagonal)));
        self.note(format!("verdict: {verdict}"));
        let change = frame.change_of_basis(self.algebra);
        let mut result = self.finish(classification);
        result.frame = Some(frame);
        result.change_of_basis = Some(change);
        result.norm_diagonal = Some(diagonal);
        result.positive_definite = definite;
        result.division_verdict = Some(verdict.to_string());
        result
    }
}

fn join(values: &[Scalar]) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

/// Runs the whole pipeline. Every outcome is a classification; failures come
/// with a witness whenever one can be produced.
pub fn forge(algebra: &Algebra, options: ForgeOptions) -> ForgeResult {
    let mut run = Run { algebra, options, audit: Vec::new() };
    let sampling = options.sampling;
    run.note(format!("input: {} (dimension {}, field {})", algebra.name(), algebra.dim(), algebra.field()));

    if analysis::is_commutative(algebra) {
        run.note("all basis commutators vanish");
        return run.finish(Classification::CommutativeOutOfScope);
    }

    let cube = analysis::AssociatorCube::new(algebra);
    let associative = cube.all_zero();
    let alternative_failure = if associative { None } else { analysis::alternativity_failure(algebra) };
    run.note(format!("associative: {associative}, alternative: {}", alternative_failure.is_none()));

    match analysis::hypothesis_check(algebra, sampling) {
        HypothesisStatus::Violated(w) => {
            run.note(format!("hypothesis check failed: {}", w.provenance));
            return run.violated(Some(w));
        }
        HypothesisStatus::Holds { sampled } => {
            run.note(format!("hypothesis check: {sampled} distinct commutators, none a zero divisor"))
        }
    }

    if let Some(f) = alternative_failure {
        run.note(format!("alternative law {:?} fails on basis triple {:?}", f.law, f.triple));
        let evidence = ViolationWitness {
            left: f.x,
            right: f.y,
            kind: WitnessKind::NonAlternative,
            provenance: format!("{:?} alternative law fails on basis triple {:?}", f.law, f.triple),
        };
        return run.violated(Some(evidence));
    }

    let center = analysis::center(algebra);
    if center.dim() > 1 {
        run.note(format!("center has dimension {}", center.dim()));
        return match run.search_zero_divisor() {
            Some(w) => run.violated(Some(w)),
            None => run.finish(Classification::CenterNotScalar),
        };
    }

    let quaternion = match build_quaternion_frame(algebra) {
        Ok(frame) => frame,
        Err(e) => {
            run.note(format!("quaternion frame: {e}"));
            return run.violated(e.evidence());
        }
    };
    run.audit.extend(quaternion.log().iter().cloned());
    run.note(format!("quaternion frame squares: [{}]", join(quaternion.squares())));

    let (frame, classification) = if associative {
        (quaternion, Classification::QuaternionSaturated)
    } else {
        match build_octonion_frame(algebra, &quaternion) {
            Ok(frame) => {
                run.audit.extend(frame.log()[quaternion.log().len()..].iter().cloned());
                run.note(format!("octonion frame squares: [{}]", join(frame.squares())));
                (frame, Classification::OctonionSaturated)
            }
            Err(e) => {
                run.note(format!("octonion frame: {e}"));
                return run.violated(e.evidence());
            }
        }
    };

    match saturation_check(algebra, &frame) {
        Ok(Saturation::Saturated) => {
            run.note(format!("saturated: span{{1, frame}} has dimension {}", algebra.dim()));
            run.saturated(classification, frame)
        }
        Ok(Saturation::Witness(w)) => {
            run.note("frame span is proper; extension produced a zero product");
            run.violated(Some(w))
        }
        Err(e) => {
            run.note(format!("saturation: {e}"));
            run.violated(e.evidence())
        }
    }
}
