//! Test-universe constructors: Cayley-Dickson doubling, quaternion and
//! octonion algebras in frame-ordered bases, basis-changed disguises and
//! direct sums.
//!
//! The doubling convention is
//!
//! ```text
//! (x1, x2)(y1, y2) = (x1 y1 + mu * conj(y2) x2,  y2 x1 + x2 conj(y1))
//! ```
//!
//! with unit `(1, 0)`. Correctness of the convention is established by
//! validating the output (alternativity, frame squares), not assumed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError, Element};
use crate::analysis::{alternativity_failure, is_associative, is_commutative};
use crate::linalg::{LinalgError, Matrix};
use crate::scalar::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("doubling parameter {0} is zero")]
    ZeroParameter(usize),
    #[error("between 1 and 4 doubling parameters are supported, got {0}")]
    ParameterCount(usize),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("conjugation is invalid at basis index {index}: {reason}")]
    InvalidConjugation { index: usize, reason: &'static str },
    #[error("generated algebra failed validation: {0}")]
    Validation(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Parameters for iterated doubling starting from the ground field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyDicksonParams {
    field: FieldSpec,
    mus: Vec<Scalar>,
}

impl CayleyDicksonParams {
    pub fn new(field: FieldSpec, mus: Vec<Scalar>) -> Result<Self, GeneratorError> {
        if mus.is_empty() || mus.len() > 4 {
            return Err(GeneratorError::ParameterCount(mus.len()));
        }
        for (i, mu) in mus.iter().enumerate() {
            if mu.field() != field {
                return Err(GeneratorError::FieldMismatch(field, mu.field()));
            }
            if mu.is_zero() {
                return Err(GeneratorError::ZeroParameter(i));
            }
        }
        Ok(CayleyDicksonParams { field, mus })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn mus(&self) -> &[Scalar] {
        &self.mus
    }
}

/// `x -> 2 x_0 1 - x` for an algebra whose unit is `e_0`: the identity on
/// `e_0` and negation on every other basis vector. Checked to satisfy
/// `conj(e_i) e_i in span{1}` for every basis vector.
pub fn trace_conjugation(algebra: &Algebra) -> Result<Matrix, GeneratorError> {
    if *algebra.unit() != algebra.basis(0) {
        return Err(GeneratorError::InvalidConjugation { index: 0, reason: "unit is not e_0" });
    }
    let field = algebra.field();
    let mut conj = Matrix::identity(field, algebra.dim());
    for i in 1..algebra.dim() {
        conj[(i, i)] = field.from_i64(-1);
    }
    validate_conjugation(algebra, &conj)?;
    Ok(conj)
}

fn validate_conjugation(algebra: &Algebra, conj: &Matrix) -> Result<(), GeneratorError> {
    if conj.rows() != algebra.dim() || conj.cols() != algebra.dim() {
        return Err(GeneratorError::InvalidConjugation { index: 0, reason: "wrong shape" });
    }
    for i in 0..algebra.dim() {
        let e = algebra.basis(i);
        let bar = Element::new(conj.mul_vec(e.coords())?);
        if !algebra.is_scalar(&algebra.multiply(&bar, &e)) {
            return Err(GeneratorError::InvalidConjugation { index: i, reason: "conj(e) e is not a scalar" });
        }
    }
    Ok(())
}

/// Doubles `algebra` with parameter `mu`. Basis: `(e_i, 0)` for the first
/// half, `(0, e_i)` for the second. Labels are `e0 .. e{2n-1}`.
pub fn cayley_dickson(algebra: &Algebra, mu: &Scalar, conj: &Matrix) -> Result<Algebra, GeneratorError> {
    if mu.field() != algebra.field() {
        return Err(GeneratorError::FieldMismatch(algebra.field(), mu.field()));
    }
    if mu.is_zero() {
        return Err(GeneratorError::ZeroParameter(0));
    }
    validate_conjugation(algebra, conj)?;
    let n = algebra.dim();
    let field = algebra.field();
    let zero = algebra.zero();
    let bar = |x: &Element| Element::new(conj.mul_vec(x.coords()).expect("square conjugation"));
    let halves = |k: usize| if k < n { (algebra.basis(k), zero.clone()) } else { (zero.clone(), algebra.basis(k - n)) };

    let mut products = Vec::with_capacity(4 * n * n);
    for i in 0..2 * n {
        let (x1, x2) = halves(i);
        for j in 0..2 * n {
            let (y1, y2) = halves(j);
            let first = &algebra.multiply(&x1, &y1) + &algebra.multiply(&bar(&y2), &x2).scale(mu);
            let second = &algebra.multiply(&y2, &x1) + &algebra.multiply(&x2, &bar(&y1));
            let mut coords = first.into_coords();
            coords.extend(second.into_coords());
            products.push(Element::new(coords));
        }
    }
    let mut unit = algebra.unit().clone().into_coords();
    unit.extend(vec![field.zero(); n]);
    let labels = (0..2 * n).map(|k| format!("e{k}")).collect();
    let name = format!("CD({}, {mu})", algebra.name());
    Ok(Algebra::from_products(name, field, labels, Element::new(unit), &products)?)
}

/// Iterated doubling of the ground field.
pub fn cayley_dickson_chain(params: &CayleyDicksonParams) -> Result<Algebra, GeneratorError> {
    let mut algebra = Algebra::ground_field(params.field);
    for mu in &params.mus {
        let conj = trace_conjugation(&algebra)?;
        algebra = cayley_dickson(&algebra, mu, &conj)?;
    }
    let mus: Vec<String> = params.mus.iter().map(ToString::to_string).collect();
    Ok(algebra.with_name(format!("CD[{}]({})", params.field, mus.join(", "))))
}

/// `H(alpha, beta)` on the basis `(1, i, j, k)` with `i^2 = alpha`,
/// `j^2 = beta`, `k = ij`.
pub fn quaternion_algebra(field: FieldSpec, alpha: &Scalar, beta: &Scalar) -> Result<Algebra, GeneratorError> {
    let params = CayleyDicksonParams::new(field, vec![alpha.clone(), beta.clone()])?;
    let doubled = cayley_dickson_chain(&params)?;
    let (i, j) = (doubled.basis(1), doubled.basis(2));
    let k = doubled.multiply(&i, &j);
    let frame_basis = [doubled.one(), i, j, k];
    let (algebra, _) = relabel(&doubled, &frame_basis, &["1", "i", "j", "k"])?;
    if !is_associative(&algebra) || is_commutative(&algebra) {
        return Err(GeneratorError::Validation("quaternion algebra must be associative and non-commutative".into()));
    }
    Ok(algebra.with_name(format!("H({alpha}, {beta}) over {field}")))
}

/// `O(alpha, beta, gamma)` on the basis `(1, a, b, ab, c, ac, bc, (bc)a)`
/// with `a^2 = alpha`, `b^2 = beta`, `c^2 = gamma`. Returns the algebra and
/// the relabeling matrix from the doubling basis (columns are the new basis
/// vectors in doubling coordinates).
pub fn octonion_algebra_with_relabeling(
    field: FieldSpec,
    alpha: &Scalar,
    beta: &Scalar,
    gamma: &Scalar,
) -> Result<(Algebra, Matrix), GeneratorError> {
    let params = CayleyDicksonParams::new(field, vec![alpha.clone(), beta.clone(), gamma.clone()])?;
    let doubled = cayley_dickson_chain(&params)?;
    let (a, b, c) = (doubled.basis(1), doubled.basis(2), doubled.basis(4));
    let ab = doubled.multiply(&a, &b);
    let ac = doubled.multiply(&a, &c);
    let bc = doubled.multiply(&b, &c);
    let bca = doubled.multiply(&bc, &a);
    let frame_basis = [doubled.one(), a, b, ab, c, ac, bc, bca];
    let (algebra, t) = relabel(&doubled, &frame_basis, &["1", "a", "b", "ab", "c", "ac", "bc", "(bc)a"])?;
    if let Some(f) = alternativity_failure(&algebra) {
        return Err(GeneratorError::Validation(format!("octonion algebra is not alternative at {:?}", f.triple)));
    }
    if is_associative(&algebra) {
        return Err(GeneratorError::Validation("octonion algebra must not be associative".into()));
    }
    Ok((algebra.with_name(format!("O({alpha}, {beta}, {gamma}) over {field}")), t))
}

pub fn octonion_algebra(
    field: FieldSpec,
    alpha: &Scalar,
    beta: &Scalar,
    gamma: &Scalar,
) -> Result<Algebra, GeneratorError> {
    octonion_algebra_with_relabeling(field, alpha, beta, gamma).map(|(a, _)| a)
}

/// The sedenions: four doublings with every parameter `-1`. Not alternative.
pub fn sedenions(field: FieldSpec) -> Result<Algebra, GeneratorError> {
    let m = field.from_i64(-1);
    let params = CayleyDicksonParams::new(field, vec![m.clone(), m.clone(), m.clone(), m])?;
    Ok(cayley_dickson_chain(&params)?.with_name(format!("sedenions over {field}")))
}

fn relabel(algebra: &Algebra, new_basis: &[Element], labels: &[&str]) -> Result<(Algebra, Matrix), GeneratorError> {
    let cols: Vec<Vec<Scalar>> = new_basis.iter().map(|e| e.coords().to_vec()).collect();
    let t = Matrix::from_columns(algebra.field(), algebra.dim(), &cols)?;
    let relabeled = algebra.transport(&t, labels.iter().map(|s| s.to_string()).collect())?;
    Ok((relabeled, t))
}

/// Transports `algebra` along a seeded random invertible integer matrix `T`
/// (entries in `[-3, 3]`, widening after repeated singular draws). The
/// returned algebra is isomorphic to the input, with unit `T^-1 * 1`.
pub fn disguise(algebra: &Algebra, seed: u64) -> (Algebra, Matrix) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = algebra.dim();
    let field = algebra.field();
    let mut range = 3i64;
    let mut attempts = 0;
    let t = loop {
        let rows: Vec<Vec<Scalar>> =
            (0..n).map(|_| (0..n).map(|_| field.from_i64(rng.gen_range(-range..=range))).collect()).collect();
        let t = Matrix::from_rows(field, n, rows).expect("square");
        if !t.determinant().expect("square").is_zero() {
            break t;
        }
        attempts += 1;
        if attempts % 32 == 0 {
            range += 1;
        }
    };
    let labels = (0..n).map(|k| format!("f{k}")).collect();
    let disguised = algebra
        .transport(&t, labels)
        .expect("T is invertible")
        .with_name(format!("{} (disguised, seed {seed})", algebra.name()));
    (disguised, t)
}

/// `A (+) B` with componentwise product and unit `(1_A, 1_B)`.
pub fn direct_sum(left: &Algebra, right: &Algebra) -> Result<Algebra, GeneratorError> {
    if left.field() != right.field() {
        return Err(GeneratorError::FieldMismatch(left.field(), right.field()));
    }
    let n = left.dim();
    let mut entries = Vec::new();
    for (i, j, k, c) in left.entries() {
        entries.push((i, j, k, c.clone()));
    }
    for (i, j, k, c) in right.entries() {
        entries.push((n + i, n + j, n + k, c.clone()));
    }
    let mut unit = left.unit().coords().to_vec();
    unit.extend(right.unit().coords().iter().cloned());
    let labels = left
        .labels()
        .iter()
        .map(|l| format!("({l},0)"))
        .chain(right.labels().iter().map(|l| format!("(0,{l})")))
        .collect();
    let name = format!("{} (+) {}", left.name(), right.name());
    Ok(Algebra::new(name, left.field(), labels, unit, entries)?)
}
