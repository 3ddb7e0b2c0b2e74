//! The constructive steps: central quadratics, central shifts, the
//! anticommuting reduction, frame extension, quaternion and octonion frames,
//! and the saturation check.

use serde::Serialize;

use crate::algebra::{Algebra, Element};
use crate::analysis::{find_zero_divisor, first_noncommuting_pair, ViolationWitness};
use crate::sampling::Sampling;
use crate::scalar::Scalar;

use super::{ForgeError, Frame};

/// `a x^2 + b x + c 1 = 0` with `a`, `b`, `c` scalars, obtained from the
/// commutator `v = (x, y)` as `a = v^2`, `b = v^2 + (vx)^2 - (v + vx)^2`,
/// `c = (vx)^2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentralQuadratic {
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
    pub x: Element,
    pub commutator: Element,
}

fn scalar_square(algebra: &Algebra, u: &Element, what: &'static str) -> Result<Scalar, ForgeError> {
    let sq = algebra.multiply(u, u);
    algebra.scalar_part(&sq).ok_or_else(|| ForgeError::NonCentralSquare { element: u.clone(), square: sq, what })
}

pub fn central_quadratic(algebra: &Algebra, x: &Element, y: &Element) -> Result<CentralQuadratic, ForgeError> {
    let v = algebra.commutator(x, y);
    if v.is_zero() {
        return Err(ForgeError::ZeroCommutator);
    }
    let vx = algebra.multiply(&v, x);
    if vx.is_zero() {
        return Err(ForgeError::DegenerateProduct { left: v, right: x.clone(), what: "v x = 0" });
    }
    let shifted = &v + &vx;
    if shifted.is_zero() {
        let one_plus_x = &algebra.one() + x;
        return Err(ForgeError::DegenerateProduct { left: v, right: one_plus_x, what: "v (1 + x) = 0" });
    }
    let a = scalar_square(algebra, &v, "v^2")?;
    let c = scalar_square(algebra, &vx, "(vx)^2")?;
    let s = scalar_square(algebra, &shifted, "(v + vx)^2")?;
    if a.is_zero() {
        return Err(ForgeError::DegenerateProduct { left: v.clone(), right: v, what: "v^2 = 0" });
    }
    if c.is_zero() {
        return Err(ForgeError::DegenerateProduct { left: vx.clone(), right: vx, what: "(vx)^2 = 0" });
    }
    let b = &(&a + &c) - &s;

    let x2 = algebra.multiply(x, x);
    let residual = &(&x2.scale(&a) + &x.scale(&b)) + &algebra.scalar(&c);
    if !residual.is_zero() {
        return Err(ForgeError::IdentityNotSatisfied { x: x.clone(), a, b, c, residual });
    }
    Ok(CentralQuadratic { a, b, c, x: x.clone(), commutator: v })
}

/// Result of [`central_shift`]: `p = x - (b'/2) 1` where
/// `x^2 - b' x + c' = 0`. When `x^2` is already a scalar, `p = x` and no
/// quadratic is formed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentralShift {
    pub p: Element,
    pub partner: Option<Element>,
    /// `(b', c')` of the monic quadratic.
    pub monic: Option<(Scalar, Scalar)>,
}

pub fn central_shift(algebra: &Algebra, x: &Element, y_hint: Option<&Element>) -> Result<CentralShift, ForgeError> {
    if algebra.is_scalar(x) {
        return Err(ForgeError::ScalarInput { x: x.clone() });
    }
    if algebra.is_scalar(&algebra.multiply(x, x)) {
        return Ok(CentralShift { p: x.clone(), partner: None, monic: None });
    }
    let partner = y_hint
        .cloned()
        .into_iter()
        .chain((0..algebra.dim()).map(|j| algebra.basis(j)))
        .find(|y| !algebra.commutator(x, y).is_zero())
        .ok_or_else(|| ForgeError::NoNonzeroCommutator { x: x.clone() })?;
    let q = central_quadratic(algebra, x, &partner)?;
    let field = algebra.field();
    let b_monic = -&(&q.b / &q.a);
    let c_monic = &q.c / &q.a;
    let half = &b_monic / &field.from_i64(2);
    let p = x - &algebra.scalar(&half);
    scalar_square(algebra, &p, "p^2")?;
    Ok(CentralShift { p, partner: Some(partner), monic: Some((b_monic, c_monic)) })
}

/// `d_l` with `p u_l + u_l p = d_l 1`, for every frame element.
pub fn condition_star(algebra: &Algebra, frame: &Frame, p: &Element) -> Result<Vec<Scalar>, ForgeError> {
    frame
        .elements()
        .iter()
        .enumerate()
        .map(|(index, u)| {
            let anti = algebra.anticommutator(p, u);
            algebra.scalar_part(&anti).ok_or_else(|| ForgeError::ConditionStarViolated {
                index,
                p: p.clone(),
                u: u.clone(),
                anticommutator: anti,
            })
        })
        .collect()
}

/// `m = p - sum_l (d_l / 2 gamma_l) u_l`, which anticommutes with every
/// frame element. Checks `p u_l + u_l p = d_l 1` on entry and the
/// anticommutation of `m` on exit.
pub fn anticommute_reduce(algebra: &Algebra, frame: &Frame, p: &Element, d: &[Scalar]) -> Result<Element, ForgeError> {
    if d.len() != frame.len() {
        return Err(ForgeError::FrameSize { expected: frame.len(), got: d.len() });
    }
    let two = algebra.field().from_i64(2);
    let mut m = p.clone();
    for (index, ((u, gamma), d_l)) in frame.elements().iter().zip(frame.squares()).zip(d).enumerate() {
        let anti = algebra.anticommutator(p, u);
        if anti != algebra.scalar(d_l) {
            return Err(ForgeError::ConditionStarViolated { index, p: p.clone(), u: u.clone(), anticommutator: anti });
        }
        if !d_l.is_zero() {
            let coeff = d_l / &(&two * gamma);
            m = &m - &u.scale(&coeff);
        }
    }
    for (index, u) in frame.elements().iter().enumerate() {
        if !algebra.anticommutator(&m, u).is_zero() {
            return Err(ForgeError::AnticommutationFailed { index, m });
        }
    }
    Ok(m)
}

/// One application of the anticommuting-complement construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FrameStep {
    /// Index of the first standard basis vector outside `span{1, frame}`.
    pub x_index: usize,
    pub shift: CentralShift,
    pub d: Vec<Scalar>,
    pub m: Element,
    pub gamma: Scalar,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Extension {
    Saturated,
    Extended(Box<FrameStep>),
}

pub fn extend_frame(algebra: &Algebra, frame: &Frame) -> Result<Extension, ForgeError> {
    let span = frame.span(algebra);
    if span.is_full() {
        return Ok(Extension::Saturated);
    }
    let x_index = (0..algebra.dim())
        .find(|&k| !span.contains(algebra.basis(k).coords()))
        .expect("a proper subspace misses some basis vector");
    let x = algebra.basis(x_index);
    let shift = central_shift(algebra, &x, None)?;
    let d = condition_star(algebra, frame, &shift.p)?;
    let m = anticommute_reduce(algebra, frame, &shift.p, &d)?;
    if span.contains(m.coords()) {
        return Err(ForgeError::ComplementInSpan { m });
    }
    let gamma = scalar_square(algebra, &m, "m^2")?;
    if gamma.is_zero() {
        return Err(ForgeError::NilpotentComplement { m });
    }
    Ok(Extension::Extended(Box::new(FrameStep { x_index, shift, d, m, gamma })))
}

/// `(a, b, ab)` with `a` the first nonzero basis commutator and `b` the
/// anticommuting complement of `span{1, a}`.
pub fn build_quaternion_frame(algebra: &Algebra) -> Result<Frame, ForgeError> {
    let (i, j) = first_noncommuting_pair(algebra).ok_or(ForgeError::CommutativeInput)?;
    let a = algebra.commutator(&algebra.basis(i), &algebra.basis(j));
    let a2 = algebra.multiply(&a, &a);
    let alpha = algebra
        .scalar_part(&a2)
        .ok_or_else(|| ForgeError::NonScalarCommutatorSquare { commutator: a.clone(), square: a2 })?;
    if alpha.is_zero() {
        return Err(ForgeError::DegenerateProduct { left: a.clone(), right: a, what: "commutator squares to zero" });
    }
    let mut log = vec![format!("a = (e{i}, e{j}) = {}, a^2 = {alpha}", algebra.render(&a))];
    let seed = Frame::new(algebra, vec![a.clone()], log.clone())?;
    let step = match extend_frame(algebra, &seed)? {
        Extension::Saturated => return Err(ForgeError::CommutativeInput),
        Extension::Extended(step) => step,
    };
    log.push(describe_step(algebra, "b", &step));
    let b = step.m;
    let ab = algebra.multiply(&a, &b);
    log.push(format!("ab = {}", algebra.render(&ab)));
    Frame::new(algebra, vec![a, b, ab], log)
}

/// `(a, b, ab, c, ac, bc, (bc)a)` with `c` the anticommuting complement of
/// the quaternion frame.
pub fn build_octonion_frame(algebra: &Algebra, quaternion: &Frame) -> Result<Frame, ForgeError> {
    if quaternion.len() != 3 {
        return Err(ForgeError::FrameSize { expected: 3, got: quaternion.len() });
    }
    let step = match extend_frame(algebra, quaternion)? {
        Extension::Saturated => return Err(ForgeError::AlreadyAssociativeSaturated),
        Extension::Extended(step) => step,
    };
    let mut log = quaternion.log().to_vec();
    log.push(describe_step(algebra, "c", &step));
    let [a, b, ab] = [0, 1, 2].map(|i| quaternion.elements()[i].clone());
    let c = step.m;
    let ac = algebra.multiply(&a, &c);
    let bc = algebra.multiply(&b, &c);
    let bca = algebra.multiply(&bc, &a);
    for (name, e) in [("ac", &ac), ("bc", &bc), ("(bc)a", &bca)] {
        log.push(format!("{name} = {}", algebra.render(e)));
    }
    Frame::new(algebra, vec![a, b, ab, c, ac, bc, bca], log)
}

fn describe_step(algebra: &Algebra, name: &str, step: &FrameStep) -> String {
    let shift = match (&step.shift.partner, &step.shift.monic) {
        (Some(y), Some((b, c))) => format!(
            "x^2 - ({b}) x + ({c}) = 0 via partner {}, p = {}",
            algebra.render(y),
            algebra.render(&step.shift.p)
        ),
        _ => "x^2 already scalar, p = x".to_string(),
    };
    let d: Vec<String> = step.d.iter().map(ToString::to_string).collect();
    format!(
        "{name}: x = e{} outside span{{1, frame}}; {shift}; d = [{}]; m = {}, m^2 = {}",
        step.x_index,
        d.join(", "),
        algebra.render(&step.m),
        step.gamma
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Saturation {
    Saturated,
    Witness(ViolationWitness),
}

/// Decides whether `span{1, frame} = R`. Otherwise extends once more and
/// returns the product that must vanish (`m(ab)` for quaternion frames,
/// `m(a(bc))` for octonion frames) as a zero-divisor witness. If the
/// extension itself fails on non-product evidence, a direct zero-divisor
/// search over basis vectors and their sums and differences is attempted.
pub fn saturation_check(algebra: &Algebra, frame: &Frame) -> Result<Saturation, ForgeError> {
    let target = match frame.len() {
        3 => frame.elements()[2].clone(),
        7 => frame.elements()[0].clone(),
        n => return Err(ForgeError::FrameSize { expected: 7, got: n }),
    };
    let target = if frame.len() == 7 {
        let bc = &frame.elements()[5];
        algebra.multiply(&target, bc)
    } else {
        target
    };
    let target_name = if frame.len() == 3 { "ab" } else { "a(bc)" };
    match extend_frame(algebra, frame) {
        Ok(Extension::Saturated) => Ok(Saturation::Saturated),
        Ok(Extension::Extended(step)) => {
            let product = algebra.multiply(&step.m, &target);
            if product.is_zero() {
                Ok(Saturation::Witness(ViolationWitness::zero_divisor(
                    step.m,
                    target,
                    format!("m anticommutes with the frame and m * {target_name} = 0"),
                )))
            } else {
                Err(ForgeError::AxiomBreach { left: step.m, right: target, product })
            }
        }
        Err(err) => {
            if let Some(w) = err.evidence().filter(|w| w.kind.is_zero_product()) {
                return Ok(Saturation::Witness(w));
            }
            let n = algebra.dim();
            let budget = n + n * n.saturating_sub(1);
            match find_zero_divisor(algebra, budget, Sampling::new(0, 0)) {
                Some(w) => Ok(Saturation::Witness(w)),
                None => Err(err),
            }
        }
    }
}
