//! Finite-dimensional unital algebras given by structure constants.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::linalg::{Matrix, Subspace};
use crate::scalar::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("algebra dimension must be positive")]
    EmptyAlgebra,
    #[error("expected {expected} {what}, got {got}")]
    LengthMismatch { what: &'static str, expected: usize, got: usize },
    #[error("structure entry {entry} has index {index} out of range for dimension {dim}")]
    IndexOutOfRange { entry: usize, index: usize, dim: usize },
    #[error("structure entry {entry} repeats the triple ({i}, {j}, {k})")]
    DuplicateEntry { entry: usize, i: usize, j: usize, k: usize },
    #[error("scalar over {got} in an algebra over {expected}")]
    FieldMismatch { expected: FieldSpec, got: FieldSpec },
    #[error("unit axiom fails at basis index {index}: {side} multiplication by the unit does not fix e_{index}")]
    UnitAxiom { index: usize, side: &'static str },
    #[error("power exponent {0} outside 1..=4")]
    PowerOutOfRange(u32),
    #[error("generator list is empty")]
    NoGenerators,
}

/// A coordinate vector in some algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Element {
    coords: Vec<Scalar>,
}

impl Element {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Element { coords }
    }

    pub fn zero(field: FieldSpec, dim: usize) -> Self {
        Element { coords: vec![field.zero(); dim] }
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, s: &Scalar) -> Element {
        Element { coords: self.coords.iter().map(|c| if c.is_zero() { c.clone() } else { c * s }).collect() }
    }

    fn zip_with(&self, other: &Element, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Element {
        assert_eq!(self.dim(), other.dim(), "element dimension mismatch");
        Element { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| f(a, b)).collect() }
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element { coords: self.coords.iter().map(|c| -c).collect() }
    }
}

impl Add for Element {
    type Output = Element;
    fn add(self, rhs: Element) -> Element {
        &self + &rhs
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(self, rhs: Element) -> Element {
        &self - &rhs
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl Serialize for Element {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coords.serialize(serializer)
    }
}

/// Sparse products of basis vectors: `table[i * dim + j]` lists the nonzero
/// `(k, c_ijk)` with `e_i e_j = sum_k c_ijk e_k`, sorted by `k`.
type ProductTable = Vec<Vec<(usize, Scalar)>>;

/// Rational structure constants scaled to integers by a common denominator.
/// Products then accumulate in `BigInt` and reduce once per coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
struct IntegerTable {
    denom: BigInt,
    table: Vec<Vec<(usize, BigInt)>>,
}

impl IntegerTable {
    fn new(table: &ProductTable) -> Option<Self> {
        let mut denom = BigInt::one();
        for (_, c) in table.iter().flatten() {
            denom = denom.lcm(c.as_rational()?.denom());
        }
        let table = table
            .iter()
            .map(|slot| {
                slot.iter()
                    .map(|(k, c)| {
                        let q = c.as_rational().expect("rational table");
                        (*k, q.numer() * (&denom / q.denom()))
                    })
                    .collect()
            })
            .collect();
        Some(IntegerTable { denom, table })
    }
}

// Integer numerators over the least common denominator.
fn clear_denominators(coords: &[Scalar]) -> (Vec<BigInt>, BigInt) {
    let rationals: Vec<&BigRational> = coords.iter().map(|c| c.as_rational().expect("rational element")).collect();
    let denom = rationals.iter().fold(BigInt::one(), |l, q| l.lcm(q.denom()));
    let numers = rationals.iter().map(|q| q.numer() * (&denom / q.denom())).collect();
    (numers, denom)
}

/// A unital algebra over a [`FieldSpec`] presented by structure constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    name: String,
    field: FieldSpec,
    labels: Vec<String>,
    unit: Element,
    table: ProductTable,
    integer: Option<IntegerTable>,
}

impl Algebra {
    /// Builds an algebra from sparse `(i, j, k, c)` entries meaning
    /// `e_i e_j` has coefficient `c` on `e_k`. Omitted triples are zero.
    /// The unit axiom is checked exactly.
    pub fn new(
        name: impl Into<String>,
        field: FieldSpec,
        labels: Vec<String>,
        unit: Vec<Scalar>,
        entries: Vec<(usize, usize, usize, Scalar)>,
    ) -> Result<Self, AlgebraError> {
        let dim = labels.len();
        if dim == 0 {
            return Err(AlgebraError::EmptyAlgebra);
        }
        if unit.len() != dim {
            return Err(AlgebraError::LengthMismatch { what: "unit coordinates", expected: dim, got: unit.len() });
        }
        for s in &unit {
            check_field(field, s)?;
        }
        let mut table: ProductTable = vec![Vec::new(); dim * dim];
        for (n, (i, j, k, c)) in entries.into_iter().enumerate() {
            for index in [i, j, k] {
                if index >= dim {
                    return Err(AlgebraError::IndexOutOfRange { entry: n, index, dim });
                }
            }
            check_field(field, &c)?;
            let slot = &mut table[i * dim + j];
            match slot.binary_search_by_key(&k, |(kk, _)| *kk) {
                Ok(_) => return Err(AlgebraError::DuplicateEntry { entry: n, i, j, k }),
                Err(at) => slot.insert(at, (k, c)),
            }
        }
        for slot in table.iter_mut() {
            slot.retain(|(_, c)| !c.is_zero());
        }
        let integer = IntegerTable::new(&table);
        let algebra = Algebra { name: name.into(), field, labels, unit: Element::new(unit), table, integer };
        algebra.check_unit()?;
        Ok(algebra)
    }

    /// Builds an algebra from dense products `products[i * dim + j] = e_i e_j`.
    pub fn from_products(
        name: impl Into<String>,
        field: FieldSpec,
        labels: Vec<String>,
        unit: Element,
        products: &[Element],
    ) -> Result<Self, AlgebraError> {
        let dim = labels.len();
        if products.len() != dim * dim {
            return Err(AlgebraError::LengthMismatch {
                what: "basis products",
                expected: dim * dim,
                got: products.len(),
            });
        }
        let mut entries = Vec::new();
        for (idx, p) in products.iter().enumerate() {
            if p.dim() != dim {
                return Err(AlgebraError::LengthMismatch { what: "product coordinates", expected: dim, got: p.dim() });
            }
            for (k, c) in p.coords().iter().enumerate() {
                if !c.is_zero() {
                    entries.push((idx / dim, idx % dim, k, c.clone()));
                }
            }
        }
        Self::new(name, field, labels, unit.into_coords(), entries)
    }

    /// The one-dimensional algebra `F`.
    pub fn ground_field(field: FieldSpec) -> Self {
        Self::new(field.to_string(), field, vec!["1".into()], vec![field.one()], vec![(0, 0, 0, field.one())])
            .expect("ground field is unital")
    }

    fn check_unit(&self) -> Result<(), AlgebraError> {
        for j in 0..self.dim() {
            let e = self.basis(j);
            if self.multiply(&self.unit, &e) != e {
                return Err(AlgebraError::UnitAxiom { index: j, side: "left" });
            }
            if self.multiply(&e, &self.unit) != e {
                return Err(AlgebraError::UnitAxiom { index: j, side: "right" });
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &Element {
        &self.unit
    }

    /// Nonzero structure constants as `(i, j, k, c)`, in index order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> + '_ {
        let dim = self.dim();
        self.table
            .iter()
            .enumerate()
            .flat_map(move |(idx, slot)| slot.iter().map(move |(k, c)| (idx / dim, idx % dim, *k, c)))
    }

    pub fn zero(&self) -> Element {
        Element::zero(self.field, self.dim())
    }

    pub fn one(&self) -> Element {
        self.unit.clone()
    }

    pub fn basis(&self, i: usize) -> Element {
        let mut e = self.zero();
        e.coords[i] = self.field.one();
        e
    }

    /// `s * 1`.
    pub fn scalar(&self, s: &Scalar) -> Element {
        self.unit.scale(s)
    }

    pub fn element_from_ints(&self, coords: &[i64]) -> Element {
        assert_eq!(coords.len(), self.dim());
        Element::new(coords.iter().map(|&c| self.field.from_i64(c)).collect())
    }

    /// Checks that `x` lives in this algebra.
    pub fn check_element(&self, x: &Element) -> Result<(), AlgebraError> {
        if x.dim() != self.dim() {
            return Err(AlgebraError::LengthMismatch {
                what: "element coordinates",
                expected: self.dim(),
                got: x.dim(),
            });
        }
        x.coords().iter().try_for_each(|s| check_field(self.field, s))
    }

    pub fn checked_multiply(&self, x: &Element, y: &Element) -> Result<Element, AlgebraError> {
        self.check_element(x)?;
        self.check_element(y)?;
        Ok(self.multiply(x, y))
    }

    /// Bilinear product. Panics if `x` or `y` has the wrong dimension; use
    /// [`Algebra::checked_multiply`] for untrusted input.
    pub fn multiply(&self, x: &Element, y: &Element) -> Element {
        let dim = self.dim();
        assert!(x.dim() == dim && y.dim() == dim, "element dimension does not match algebra");
        if let Some(integer) = &self.integer {
            return self.multiply_integer(integer, x, y);
        }
        let mut out = vec![self.field.zero(); dim];
        for (i, xi) in x.coords.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.coords.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let slot = &self.table[i * dim + j];
                if slot.is_empty() {
                    continue;
                }
                let w = xi * yj;
                for (k, c) in slot {
                    out[*k] = &out[*k] + &(&w * c);
                }
            }
        }
        Element { coords: out }
    }

    fn multiply_integer(&self, integer: &IntegerTable, x: &Element, y: &Element) -> Element {
        let dim = self.dim();
        let (xn, xd) = clear_denominators(&x.coords);
        let (yn, yd) = clear_denominators(&y.coords);
        let mut acc = vec![BigInt::zero(); dim];
        for (i, xi) in xn.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in yn.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let slot = &integer.table[i * dim + j];
                if slot.is_empty() {
                    continue;
                }
                let w = xi * yj;
                for (k, c) in slot {
                    acc[*k] += &w * c;
                }
            }
        }
        let denom = xd * yd * &integer.denom;
        let coords = acc.into_iter().map(|a| Scalar::from_rational(BigRational::new(a, denom.clone()))).collect();
        Element { coords }
    }

    /// `xy - yx`.
    pub fn commutator(&self, x: &Element, y: &Element) -> Element {
        &self.multiply(x, y) - &self.multiply(y, x)
    }

    /// `(xy)z - x(yz)`.
    pub fn associator(&self, x: &Element, y: &Element, z: &Element) -> Element {
        &self.multiply(&self.multiply(x, y), z) - &self.multiply(x, &self.multiply(y, z))
    }

    /// `xy + yx`.
    pub fn anticommutator(&self, x: &Element, y: &Element) -> Element {
        &self.multiply(x, y) + &self.multiply(y, x)
    }

    /// Matrix of `y -> xy`: column `j` is `x e_j`.
    pub fn left_mul_matrix(&self, x: &Element) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim()).map(|j| self.multiply(x, &self.basis(j)).into_coords()).collect();
        Matrix::from_columns(self.field, self.dim(), &cols).expect("square operator")
    }

    /// Matrix of `y -> yx`: column `j` is `e_j x`.
    pub fn right_mul_matrix(&self, x: &Element) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim()).map(|j| self.multiply(&self.basis(j), x).into_coords()).collect();
        Matrix::from_columns(self.field, self.dim(), &cols).expect("square operator")
    }

    /// `x^k` for `k` in 1..=4, bracketed as `x^3 = x^2 x` and `x^4 = x^2 x^2`.
    pub fn power(&self, x: &Element, k: u32) -> Result<Element, AlgebraError> {
        let sq = || self.multiply(x, x);
        match k {
            1 => Ok(x.clone()),
            2 => Ok(sq()),
            3 => Ok(self.multiply(&sq(), x)),
            4 => {
                let s = sq();
                Ok(self.multiply(&s, &s))
            }
            _ => Err(AlgebraError::PowerOutOfRange(k)),
        }
    }

    /// `Some(s)` when `x = s * 1`.
    pub fn scalar_part(&self, x: &Element) -> Option<Scalar> {
        let lead = self.unit.coords.iter().position(|c| !c.is_zero())?;
        let s = &x.coords[lead] / &self.unit.coords[lead];
        (self.scalar(&s) == *x).then_some(s)
    }

    pub fn is_scalar(&self, x: &Element) -> bool {
        self.scalar_part(x).is_some()
    }

    /// `span{1}`.
    pub fn scalar_line(&self) -> Subspace {
        Subspace::span(self.field, self.dim(), [self.unit.coords()])
    }

    /// Smallest subspace containing 1 and the generators and closed under
    /// multiplication.
    pub fn subalgebra_closure(&self, generators: &[Element]) -> Result<Subspace, AlgebraError> {
        if generators.is_empty() {
            return Err(AlgebraError::NoGenerators);
        }
        for g in generators {
            self.check_element(g)?;
        }
        let mut span = self.scalar_line();
        for g in generators {
            span.insert(g.coords());
        }
        // Each pass either grows the span or proves closure; the dimension is
        // bounded by the ambient dimension.
        for _ in 0..self.dim() {
            let basis: Vec<Element> = span.basis().iter().cloned().map(Element::new).collect();
            let mut grew = false;
            for x in &basis {
                for y in &basis {
                    grew |= span.insert(self.multiply(x, y).coords());
                }
            }
            if !grew {
                break;
            }
        }
        Ok(span)
    }

    /// Transports the algebra along the basis change whose columns are the
    /// new basis vectors in old coordinates. The unit becomes `T^-1 * unit`.
    pub fn transport(&self, t: &Matrix, labels: Vec<String>) -> Result<Algebra, crate::linalg::LinalgError> {
        let t_inv = t.inverse()?;
        let dim = self.dim();
        let cols: Vec<Element> = (0..dim).map(|j| Element::new(t.column(j))).collect();
        let mut products = Vec::with_capacity(dim * dim);
        for x in &cols {
            for y in &cols {
                products.push(Element::new(t_inv.mul_vec(self.multiply(x, y).coords())?));
            }
        }
        let unit = Element::new(t_inv.mul_vec(self.unit.coords())?);
        Ok(Algebra::from_products(self.name.clone(), self.field, labels, unit, &products)
            .expect("transported algebra keeps its unit"))
    }

    /// `x` as a combination of basis labels, e.g. `2*k + i`.
    pub fn render(&self, x: &Element) -> String {
        let terms: Vec<String> = x
            .coords()
            .iter()
            .zip(&self.labels)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, l)| if c.is_one() { l.clone() } else { format!("{c}*{l}") })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

fn check_field(field: FieldSpec, s: &Scalar) -> Result<(), AlgebraError> {
    if s.field() == field {
        Ok(())
    } else {
        Err(AlgebraError::FieldMismatch { expected: field, got: s.field() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::rational()
    }

    fn s(n: i64) -> Scalar {
        q().from_i64(n)
    }

    // Hamilton's product on (1, i, j, k), written out by hand.
    fn hamilton_product(x: [i64; 4], y: [i64; 4]) -> [i64; 4] {
        let [a1, b1, c1, d1] = x;
        let [a2, b2, c2, d2] = y;
        [
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        ]
    }

    fn hamilton() -> Algebra {
        let mut entries = Vec::new();
        for i in 0..4 {
            for j in 0..4 {
                let mut ei = [0; 4];
                let mut ej = [0; 4];
                ei[i] = 1;
                ej[j] = 1;
                for (k, c) in hamilton_product(ei, ej).into_iter().enumerate() {
                    if c != 0 {
                        entries.push((i, j, k, s(c)));
                    }
                }
            }
        }
        let labels = ["1", "i", "j", "k"].map(String::from).to_vec();
        Algebra::new("H", q(), labels, vec![s(1), s(0), s(0), s(0)], entries).unwrap()
    }

    fn el(a: &Algebra, c: &[i64]) -> Element {
        a.element_from_ints(c)
    }

    #[test]
    fn products_match_the_hand_written_table() {
        let h = hamilton();
        let samples = [[1, 2, -3, 4], [0, 1, 1, 0], [5, 0, -2, 7], [-1, -1, 3, 2]];
        for x in samples {
            for y in samples {
                assert_eq!(h.multiply(&el(&h, &x), &el(&h, &y)), el(&h, &hamilton_product(x, y)));
            }
        }
    }

    #[test]
    fn worked_products() {
        let h = hamilton();
        let (i, j, k) = (h.basis(1), h.basis(2), h.basis(3));
        assert_eq!(h.multiply(&i, &j), k);
        let x = el(&h, &[3, -1, 2, 5]);
        assert_eq!(h.multiply(&h.one(), &x), x);
        let ipj = &i + &j;
        assert_eq!(h.multiply(&ipj, &ipj), h.scalar(&s(-2)));
        assert_eq!(h.commutator(&i, &j), k.scale(&s(2)));
        assert!(h.commutator(&x, &x).is_zero());
        assert_eq!(h.commutator(&ipj, &i), k.scale(&s(-2)));
        assert!(h.associator(&i, &j, &x).is_zero());
        assert_eq!(h.anticommutator(&i, &j), h.zero());
    }

    #[test]
    fn multiplication_operators() {
        let h = hamilton();
        assert_eq!(h.left_mul_matrix(&h.one()), Matrix::identity(q(), 4));
        assert_eq!(h.right_mul_matrix(&h.one()), Matrix::identity(q(), 4));
        let li = h.left_mul_matrix(&h.basis(1));
        assert_eq!(li.determinant().unwrap(), s(1));
        let x = el(&h, &[1, 2, 3, 4]);
        let y = el(&h, &[-2, 0, 1, 5]);
        let xy = h.multiply(&x, &y);
        assert_eq!(h.left_mul_matrix(&x).mul_vec(y.coords()).unwrap(), xy.coords());
        assert_eq!(h.right_mul_matrix(&y).mul_vec(x.coords()).unwrap(), xy.coords());
    }

    #[test]
    fn powers() {
        let h = hamilton();
        assert_eq!(h.power(&h.basis(1), 2).unwrap(), h.scalar(&s(-1)));
        assert_eq!(h.power(&h.basis(3).scale(&s(2)), 2).unwrap(), h.scalar(&s(-4)));
        let x = el(&h, &[1, 1, 0, 0]);
        assert_eq!(h.power(&x, 1).unwrap(), x);
        assert_eq!(h.power(&x, 4).unwrap(), h.scalar(&s(-4)));
        assert_eq!(h.power(&x, 3).unwrap(), h.multiply(&h.multiply(&x, &x), &x));
        assert_eq!(h.power(&x, 0), Err(AlgebraError::PowerOutOfRange(0)));
        assert_eq!(h.power(&x, 5), Err(AlgebraError::PowerOutOfRange(5)));
    }

    #[test]
    fn closures() {
        let h = hamilton();
        let c = h.subalgebra_closure(&[h.basis(1)]).unwrap();
        assert_eq!(c, Subspace::span(q(), 4, [h.one().coords(), h.basis(1).coords()]));
        assert_eq!(h.subalgebra_closure(&[h.one()]).unwrap(), h.scalar_line());
        assert_eq!(h.subalgebra_closure(&[h.basis(1), h.basis(2)]).unwrap().dim(), 4);
        assert_eq!(h.subalgebra_closure(&[]), Err(AlgebraError::NoGenerators));
    }

    #[test]
    fn scalar_parts_and_rendering() {
        let h = hamilton();
        assert_eq!(h.scalar_part(&h.scalar(&s(7))), Some(s(7)));
        assert_eq!(h.scalar_part(&h.basis(2)), None);
        assert_eq!(h.render(&el(&h, &[0, 1, -2, 0])), "i + -2*j");
        assert_eq!(h.render(&h.zero()), "0");
    }

    #[test]
    fn constructor_validation() {
        let labels = || vec!["1".to_string(), "t".to_string()];
        let unit = || vec![s(1), s(0)];
        let good = || vec![(0, 0, 0, s(1)), (0, 1, 1, s(1)), (1, 0, 1, s(1)), (1, 1, 0, s(1))];
        assert!(Algebra::new("F[t]/(t^2-1)", q(), labels(), unit(), good()).is_ok());
        assert_eq!(Algebra::new("x", q(), vec![], vec![], vec![]), Err(AlgebraError::EmptyAlgebra));
        let mut bad = good();
        bad.push((1, 1, 2, s(1)));
        assert_eq!(
            Algebra::new("x", q(), labels(), unit(), bad),
            Err(AlgebraError::IndexOutOfRange { entry: 4, index: 2, dim: 2 })
        );
        let mut dup = good();
        dup.push((1, 1, 0, s(3)));
        assert!(matches!(
            Algebra::new("x", q(), labels(), unit(), dup),
            Err(AlgebraError::DuplicateEntry { entry: 4, .. })
        ));
        let no_unit = vec![(0, 0, 0, s(1)), (1, 1, 0, s(1))];
        assert_eq!(
            Algebra::new("x", q(), labels(), unit(), no_unit),
            Err(AlgebraError::UnitAxiom { index: 1, side: "left" })
        );
        let f5 = FieldSpec::prime(5).unwrap();
        assert!(matches!(
            Algebra::new("x", q(), labels(), vec![f5.one(), f5.zero()], good()),
            Err(AlgebraError::FieldMismatch { .. })
        ));
        let h = hamilton();
        assert!(matches!(
            h.checked_multiply(&h.one(), &Element::zero(q(), 3)),
            Err(AlgebraError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn transport_preserves_products() {
        let h = hamilton();
        let t = Matrix::from_i64(q(), &[&[1, 0, 1, 0], &[0, 2, 0, 1], &[0, 1, 1, 0], &[1, 0, 0, 3]]);
        let g = h.transport(&t, (0..4).map(|i| format!("g{i}")).collect()).unwrap();
        let to_h = |x: &Element| Element::new(t.mul_vec(x.coords()).unwrap());
        assert_eq!(to_h(g.unit()), h.one());
        let x = el(&g, &[1, -1, 2, 0]);
        let y = el(&g, &[0, 3, 1, -2]);
        assert_eq!(to_h(&g.multiply(&x, &y)), h.multiply(&to_h(&x), &to_h(&y)));
        let singular = Matrix::zeros(q(), 4, 4);
        assert!(h.transport(&singular, g.labels().to_vec()).is_err());
    }

    #[test]
    fn prime_field_products_reduce() {
        let f5 = FieldSpec::prime(5).unwrap();
        let entries = vec![(0, 0, 0, f5.one()), (0, 1, 1, f5.one()), (1, 0, 1, f5.one()), (1, 1, 0, f5.from_i64(2))];
        let a = Algebra::new("F5[t]/(t^2-2)", f5, vec!["1".into(), "t".into()], vec![f5.one(), f5.zero()], entries)
            .unwrap();
        let x = a.element_from_ints(&[3, 4]);
        // (3 + 4t)^2 = 9 + 32 + 24 t = 41 + 24 t = 1 + 4t mod 5.
        assert_eq!(a.multiply(&x, &x), a.element_from_ints(&[1, 4]));
    }
}
