//! Acceptance suite: one PASS/FAIL line per criterion. Runs without the libtest
//! harness so the lines always reach the terminal; exits nonzero on any failure.

use std::process::Command;
use std::time::{Duration, Instant};

use octoforge::analysis::{
    alternativity_failure, center, check_facts, is_alternative, is_associative, is_commutative, nucleus, AlternativeLaw,
};
use octoforge::forge::{
    anti_associative_triples, anti_associativity, anticommute_reduce, build_octonion_frame, build_quaternion_frame,
    central_quadratic, conjugate, forge, norm, permutation_laws, Classification, ForgeOptions, Frame,
};
use octoforge::generators::{
    cayley_dickson_chain, direct_sum, disguise, octonion_algebra, quaternion_algebra, sedenions, CayleyDicksonParams,
};
use octoforge::io::{save_algebra, to_json};
use octoforge::sampling::{random_pair, Sampling};
use octoforge::{Algebra, Element, FieldSpec, Scalar, Subspace};

type Outcome = Result<(), String>;

fn q() -> FieldSpec {
    FieldSpec::rational()
}

fn s(n: i64) -> Scalar {
    q().from_i64(n)
}

fn hamilton() -> Algebra {
    quaternion_algebra(q(), &s(-1), &s(-1)).unwrap()
}

fn octonions() -> Algebra {
    octonion_algebra(q(), &s(-1), &s(-1), &s(-1)).unwrap()
}

fn ensure(cond: bool, what: impl Into<String>) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn scalar_line(a: &Algebra) -> Subspace {
    Subspace::span(a.field(), a.dim(), [a.one().coords()])
}

/// Independent frame contract: squares are scalar multiples of the unit,
/// distinct elements anticommute, and `1, u_1, ..` are independent.
fn check_frame_contract(a: &Algebra, elements: &[Element]) -> Outcome {
    let unit = scalar_line(a);
    for (l, u) in elements.iter().enumerate() {
        ensure(!unit.contains(u.coords()), format!("u{} is a scalar", l + 1))?;
        let sq = a.multiply(u, u);
        ensure(unit.contains(sq.coords()) && !sq.is_zero(), format!("u{} square is not a nonzero scalar", l + 1))?;
    }
    let mut anticommuting = 0;
    for l in 0..elements.len() {
        for m in l + 1..elements.len() {
            let (x, y) = (&elements[l], &elements[m]);
            ensure(
                (a.multiply(x, y) + a.multiply(y, x)).is_zero(),
                format!("u{} u{} do not anticommute", l + 1, m + 1),
            )?;
            anticommuting += 1;
        }
    }
    ensure(anticommuting == elements.len() * (elements.len() - 1) / 2, "anticommutation count")?;
    let span = Subspace::span(
        a.field(),
        a.dim(),
        std::iter::once(a.one().coords()).chain(elements.iter().map(|e| e.coords())),
    );
    ensure(span.dim() == elements.len() + 1, "frame is linearly dependent on 1")
}

fn check_zero_divisor(a: &Algebra, left: &Element, right: &Element) -> Outcome {
    ensure(!left.is_zero() && !right.is_zero(), "witness factor is zero")?;
    ensure(a.multiply(left, right).is_zero(), "witness product is not zero")
}

fn criterion_1() -> Outcome {
    let o = octonions();
    ensure(is_alternative(&o), "O not alternative")?;
    ensure(!is_associative(&o), "O associative")?;
    let line = scalar_line(&o);
    ensure(nucleus(&o) == line, "nucleus of O is not span{1}")?;
    ensure(center(&o) == line, "center of O is not span{1}")?;
    let h = hamilton();
    ensure(is_associative(&h), "H not associative")?;
    ensure(!is_commutative(&h), "H commutative")?;
    ensure(center(&h) == scalar_line(&h), "center of H is not span{1}")
}

fn criterion_2() -> Outcome {
    let h = hamilton();
    let r = forge(&h, ForgeOptions::default());
    ensure(r.classification == Classification::QuaternionSaturated, format!("{:?}", r.classification))?;
    let frame = r.frame.ok_or("no frame")?;
    let el = |c: &[i64]| h.element_from_ints(c);
    let expected = [el(&[0, 0, 0, 2]), el(&[0, 1, 0, 0]), el(&[0, 0, 2, 0])];
    ensure(frame.elements() == expected, "frame is not (2k, i, 2j)")?;
    ensure(frame.squares() == [s(-4), s(-1), s(-4)], "squares are not (-4, -1, -4)")?;
    ensure(r.norm_diagonal == Some(vec![s(1), s(4), s(1), s(4)]), "norm diagonal")?;
    ensure(r.positive_definite == Some(true), "not positive definite")?;
    ensure(frame.span(&h) == Subspace::full(q(), 4), "span{1, frame} != R")?;
    check_frame_contract(&h, frame.elements())
}

fn criterion_3() -> Outcome {
    let o = octonions();
    let r = forge(&o, ForgeOptions::default());
    ensure(r.classification == Classification::OctonionSaturated, format!("{:?}", r.classification))?;
    let frame = r.frame.ok_or("no frame")?;
    ensure(frame.len() == 7, "frame size")?;
    check_frame_contract(&o, frame.elements())?;
    ensure(frame.span(&o) == Subspace::full(q(), 8), "span{1, frame} != R")?;
    let diag = r.norm_diagonal.ok_or("no norm diagonal")?;
    ensure(diag.iter().all(|d| d.is_negative() == Some(false) && !d.is_zero()), "norm diagonal not positive")?;
    ensure(r.positive_definite == Some(true), "not positive definite")
}

fn criterion_4() -> Outcome {
    let (d, t) = disguise(&octonions(), 42);
    ensure(t.rank() == 8, "disguise is singular")?;
    let r = forge(&d, ForgeOptions::default());
    ensure(r.classification == Classification::OctonionSaturated, format!("{:?}", r.classification))?;
    let frame = r.frame.ok_or("no frame")?;
    ensure(frame.len() == 7, "frame size")?;
    check_frame_contract(&d, frame.elements())?;
    ensure(frame.span(&d) == Subspace::full(q(), 8), "span{1, frame} != R")
}

fn criterion_5() -> Outcome {
    let split = quaternion_algebra(q(), &s(1), &s(-1)).unwrap();
    let r = forge(&split, ForgeOptions::default());
    ensure(r.classification == Classification::HypothesisViolated, format!("{:?}", r.classification))?;
    let w = r.witness.ok_or("no witness")?;
    check_zero_divisor(&split, &w.left, &w.right)?;

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().join("split_quat.json");
    save_algebra(&split, &path).map_err(|e| e.to_string())?;
    let out =
        Command::new(env!("CARGO_BIN_EXE_octoforge")).arg("forge").arg(&path).output().map_err(|e| e.to_string())?;
    ensure(out.status.code() == Some(2), format!("CLI exit code {:?}", out.status.code()))?;
    let stdout = String::from_utf8_lossy(&out.stdout);
    ensure(stdout.contains("HypothesisViolated") && stdout.contains("witness"), "CLI output lacks the witness")
}

fn criterion_6() -> Outcome {
    let sum = direct_sum(&hamilton(), &Algebra::ground_field(q())).unwrap();
    ensure(sum.dim() == 5, "dimension")?;
    let r = forge(&sum, ForgeOptions::default());
    ensure(r.classification == Classification::HypothesisViolated, format!("{:?}", r.classification))?;
    let w = r.witness.ok_or("no witness")?;
    check_zero_divisor(&sum, &w.left, &w.right)
}

fn criterion_7() -> Outcome {
    let h = hamilton();
    let el = |c: &[i64]| h.element_from_ints(c);
    for (x, y, expected) in
        [(el(&[0, 1, 1, 0]), el(&[0, 1, 0, 0]), (-4, 0, -8)), (el(&[1, 1, 0, 0]), el(&[0, 0, 1, 0]), (-4, 8, -8))]
    {
        let cq = central_quadratic(&h, &x, &y).map_err(|e| e.to_string())?;
        ensure(
            (cq.a.clone(), cq.b.clone(), cq.c.clone()) == (s(expected.0), s(expected.1), s(expected.2)),
            format!("coefficients for {x}"),
        )?;
        let x2 = h.multiply(&x, &x);
        let lhs = x2.scale(&cq.a) + x.scale(&cq.b) + h.one().scale(&cq.c);
        ensure(lhs.is_zero(), format!("a x^2 + b x + c != 0 for {x}"))?;
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    let h = hamilton();
    let i = h.basis(1);
    let frame = Frame::new(&h, vec![i.clone()], vec![]).map_err(|e| e.to_string())?;
    let p = h.element_from_ints(&[0, 2, 3, 0]);
    let d = h.multiply(&p, &i) + h.multiply(&i, &p);
    let d1 = h.scalar_part(&d).ok_or("p i + i p is not a scalar")?;
    ensure(d1 == s(-4), "d_1 != -4")?;
    let m = anticommute_reduce(&h, &frame, &p, &[d1]).map_err(|e| e.to_string())?;
    ensure(m == h.element_from_ints(&[0, 0, 3, 0]), format!("m = {m}"))?;
    ensure((h.multiply(&m, &i) + h.multiply(&i, &m)).is_zero(), "m does not anticommute with i")
}

fn criterion_9() -> Outcome {
    let o = octonions();
    let sampling = Sampling::new(200, 9);
    let report = check_facts(&o, sampling);
    ensure(report.all_passed(), format!("{:?}", report.first_failure))?;
    ensure(report.fourth_power_nuclear == 200 && report.square_associator_kills_v == 200, "fact counts")?;
    ensure(report.square_central == Some(200), "centrality count")?;
    let line = scalar_line(&o);
    for t in 0..200 {
        let (x, y) = random_pair(&o, 9, t, 10);
        let v = o.commutator(&x, &y);
        ensure(line.contains(o.multiply(&v, &v).coords()), format!("(x, y)^2 not scalar at trial {t}"))?;
    }
    Ok(())
}

fn criterion_10() -> Outcome {
    let o = octonions();
    let quaternion = build_quaternion_frame(&o).map_err(|e| e.to_string())?;
    let frame = build_octonion_frame(&o, &quaternion).map_err(|e| e.to_string())?;
    let laws = permutation_laws(&o, &frame);
    ensure(laws.checked == 35 * 12 && laws.passed(), format!("{laws:?}"))?;
    ensure(!anti_associative_triples(&o, &frame).is_empty(), "no anti-associative triples")?;
    let anti = anti_associativity(&o, &frame);
    ensure(anti.checked > 0 && anti.passed(), format!("{anti:?}"))?;
    // Independent restatement on the (a, b, c) triple itself.
    let u = frame.elements();
    let (a, b, c) = (&u[0], &u[1], &u[3]);
    let abc = o.multiply(a, &o.multiply(b, c));
    ensure(o.multiply(b, &o.multiply(a, c)) == -abc.clone(), "b(ac) != -a(bc)")?;
    ensure(o.multiply(&o.multiply(a, b), c) == -abc, "(ab)c != -a(bc)")
}

fn criterion_11() -> Outcome {
    for a in [hamilton(), octonions()] {
        let r = forge(&a, ForgeOptions::default());
        let frame = r.frame.ok_or("no frame")?;
        for t in 0..200 {
            let (x, y) = random_pair(&a, 11, t, 10);
            let xy = a.multiply(&x, &y);
            let n = |z: &Element| norm(&a, &frame, z).ok_or("element outside frame span");
            ensure(n(&xy)? == &n(&x)? * &n(&y)?, format!("{}: n(xy) != n(x)n(y) at trial {t}", a.name()))?;
            // n(x) is also x times its conjugate.
            let xbar = conjugate(&a, &frame, &x).ok_or("no conjugate")?;
            ensure(a.multiply(&x, &xbar) == a.scalar(&n(&x)?), "x xbar != n(x)")?;
        }
    }
    Ok(())
}

/// Alternative iff 500 random pairs satisfy both laws.
fn brute_force_alternative(a: &Algebra) -> bool {
    (0..500).all(|t| {
        let (x, y) = random_pair(a, 12, t, 5);
        a.associator(&x, &y, &y).is_zero() && a.associator(&y, &y, &x).is_zero()
    })
}

fn criterion_12() -> Outcome {
    let sed = sedenions(q()).unwrap();
    let f = alternativity_failure(&sed).ok_or("sedenions reported alternative")?;
    let failing = match f.law {
        AlternativeLaw::Right => sed.associator(&f.x, &f.y, &f.y),
        AlternativeLaw::Left => sed.associator(&f.y, &f.y, &f.x),
    };
    ensure(!failing.is_zero(), "reported triple does not fail")?;

    let f7 = FieldSpec::prime(7).unwrap();
    let h = hamilton();
    let mut generated = vec![
        h.clone(),
        quaternion_algebra(q(), &s(1), &s(-1)).unwrap(),
        quaternion_algebra(q(), &s(-2), &s(3)).unwrap(),
        octonions(),
        octonion_algebra(q(), &s(2), &s(-3), &s(5)).unwrap(),
        octonion_algebra(f7, &f7.from_i64(-1), &f7.from_i64(-1), &f7.from_i64(-1)).unwrap(),
        cayley_dickson_chain(&CayleyDicksonParams::new(q(), vec![s(-1)]).unwrap()).unwrap(),
        direct_sum(&h, &Algebra::ground_field(q())).unwrap(),
        direct_sum(&h, &octonions()).unwrap(),
        disguise(&octonions(), 42).0,
        sed,
    ];
    generated
        .push(cayley_dickson_chain(&CayleyDicksonParams::new(q(), vec![s(-1), s(2), s(-3), s(1)]).unwrap()).unwrap());
    for a in &generated {
        ensure(is_alternative(a) == brute_force_alternative(a), format!("disagreement on {}", a.name()))?;
    }
    Ok(())
}

fn criterion_13() -> Outcome {
    let (d, _) = disguise(&octonions(), 42);
    let options = ForgeOptions { sampling: Sampling::new(200, 5), ..ForgeOptions::default() };
    let first = to_json(&forge(&d, options));
    let second = to_json(&forge(&d, options));
    ensure(first == second, "library results differ")?;

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().join("disguised.json");
    save_algebra(&d, &path).map_err(|e| e.to_string())?;
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_octoforge"))
            .args(["forge", "--format", "json", "--seed", "5"])
            .arg(&path)
            .output()
            .map(|o| o.stdout)
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    ensure(!a.is_empty() && a == b, "CLI outputs differ")?;
    ensure(a == first.as_bytes(), "CLI output differs from the library result")
}

type Criterion = (&'static str, fn() -> Outcome);

const CRITERIA: [Criterion; 13] = [
    ("generator sanity", criterion_1),
    ("forge H(-1,-1): quaternion frame", criterion_2),
    ("forge O(-1,-1,-1): octonion frame", criterion_3),
    ("basis-free recovery in disguised O", criterion_4),
    ("split quaternions: zero divisor, exit 2", criterion_5),
    ("H(-1,-1) + Q: zero divisor", criterion_6),
    ("central quadratic instances", criterion_7),
    ("anticommuting reduction instance", criterion_8),
    ("commutator facts in O", criterion_9),
    ("frame product laws", criterion_10),
    ("norm multiplicativity", criterion_11),
    ("alternativity control", criterion_12),
    ("determinism", criterion_13),
];

const BUDGET: Duration = Duration::from_secs(10);

fn main() {
    let mut failed = 0;
    for (n, (name, check)) in CRITERIA.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| ensure(elapsed < BUDGET, format!("took {elapsed:.1?}")));
        match outcome {
            Ok(()) => println!("criterion {:>2}: PASS  {name} ({elapsed:.2?})", n + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name} ({elapsed:.2?}): {why}", n + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", CRITERIA.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
