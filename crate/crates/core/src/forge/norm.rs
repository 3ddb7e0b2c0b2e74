//! The diagonal norm `n(x0 1 + sum x_l u_l) = x0^2 - sum gamma_l x_l^2` on a
//! frame span, and the conjugation `x -> 2 x0 1 - x` it comes from.

use crate::algebra::{Algebra, Element};
use crate::scalar::{FieldSpec, Scalar};

use super::Frame;

/// `(1, -gamma_1, .., -gamma_n)`.
pub fn norm_form(frame: &Frame) -> Vec<Scalar> {
    let Some(first) = frame.squares().first() else {
        return Vec::new();
    };
    let field = first.field();
    std::iter::once(field.one()).chain(frame.squares().iter().map(|g| -g)).collect()
}

/// All squares negative. Only meaningful over the rationals.
pub fn positive_definite(field: FieldSpec, frame: &Frame) -> Option<bool> {
    if !field.is_rational() {
        return None;
    }
    Some(frame.squares().iter().all(|g| g.is_negative() == Some(true)))
}

pub fn division_verdict(positive_definite: Option<bool>) -> &'static str {
    if positive_definite == Some(true) {
        "division (positive-definite norm)"
    } else {
        "no zero divisor found (sampled)"
    }
}

/// Coordinates of `x` in the basis `1, u_1, .., u_n`, if it lies in the span.
pub fn frame_coordinates(algebra: &Algebra, frame: &Frame, x: &Element) -> Option<Vec<Scalar>> {
    frame.change_of_basis(algebra).solve(x.coords()).ok().flatten()
}

pub fn conjugate(algebra: &Algebra, frame: &Frame, x: &Element) -> Option<Element> {
    let coords = frame_coordinates(algebra, frame, x)?;
    let two = algebra.field().from_i64(2);
    Some(&algebra.scalar(&(&two * &coords[0])) - x)
}

pub fn norm(algebra: &Algebra, frame: &Frame, x: &Element) -> Option<Scalar> {
    let coords = frame_coordinates(algebra, frame, x)?;
    let diagonal = norm_form(frame);
    let mut total = algebra.field().zero();
    if diagonal.is_empty() {
        return Some(&coords[0] * &coords[0]);
    }
    for (c, d) in coords.iter().zip(&diagonal) {
        total = &total + &(&(c * c) * d);
    }
    Some(total)
}
