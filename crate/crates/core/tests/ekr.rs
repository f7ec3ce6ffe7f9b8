mod common;

use common::*;
use spflag::classify::{sandwich_class_at, singularity_class_at, ClassifyOptions, Target};
use spflag::ekr::{build_ekr, model, validate_word, EkrSpec, Model, Shift};
use spflag::exactalg::{Polynomial, Rational};
use spflag::geometry::{Chart, VectorField};
use spflag::Error;

fn var(n: usize, i: usize) -> Polynomial {
    Polynomial::var(n, i)
}

#[test]
fn single_operation_one() {
    let b = build_ekr(&zero_spec("1"));
    let n = 5;
    let expected = vec![
        VectorField::from_parts(
            n,
            [
                (Chart::T, Polynomial::one(n)),
                (Chart::x(0), var(n, Chart::x(1))),
                (Chart::y(0), var(n, Chart::y(1))),
            ],
        ),
        VectorField::versor(n, Chart::x(1)),
        VectorField::versor(n, Chart::y(1)),
    ];
    assert_eq!(b.distribution().generators(), expected.as_slice());
}

#[test]
fn word_one_two_is_ex_2() {
    let b = build_ekr(&zero_spec("1.2"));
    assert_eq!(
        b.distribution().generators(),
        model("ex_2").unwrap().generators()
    );
}

#[test]
fn word_one_one_against_ca_2() {
    let ca = model("ca_2").unwrap();
    let zero = build_ekr(&zero_spec("1.1"));
    assert_eq!(zero.distribution().generators(), ca.generators());

    let shifted = zero_spec("1.1")
        .with(Shift::B, 1, q("2"))
        .and_then(|s| s.with(Shift::C, 2, q("-1/3")))
        .unwrap();
    let shifted = build_ekr(&shifted);
    assert_ne!(shifted.distribution().generators(), ca.generators());

    let opts = ClassifyOptions::default();
    let at = shifted.chart().origin();
    assert_eq!(
        singularity_class_at(Target::Ekr(&shifted), &at, opts)
            .unwrap()
            .word,
        w("1.1")
    );
    assert_eq!(
        singularity_class_at(Target::Distribution(&ca), &at, opts)
            .unwrap()
            .word,
        w("1.1")
    );
}

/// Leading field of the length-4 family at `p`, evaluated from the closed
/// expression `x4·(x2·(∂t + x1∂x0 + y1∂y0) + ∂x1 + y2∂y1 + X3∂x2 + Y3∂y2) + tail`.
fn family_leading_at(
    p: &[Rational],
    b3: &Rational,
    c3: &Rational,
    c4: Option<&Rational>,
) -> Vec<Rational> {
    let at = |i: usize| p[i].clone();
    let (x1, y1, x2, y2, x3, y3, x4, y4) = (
        at(Chart::x(1)),
        at(Chart::y(1)),
        at(Chart::x(2)),
        at(Chart::y(2)),
        at(Chart::x(3)),
        at(Chart::y(3)),
        at(Chart::x(4)),
        at(Chart::y(4)),
    );
    let mut v = vec![Rational::zero(); 11];
    v[Chart::T] = &x4 * &x2;
    v[Chart::x(0)] = &(&x4 * &x2) * &x1;
    v[Chart::y(0)] = &(&x4 * &x2) * &y1;
    v[Chart::x(1)] = x4.clone();
    v[Chart::y(1)] = &x4 * &y2;
    v[Chart::x(2)] = &x4 * &(b3 + &x3);
    v[Chart::y(2)] = &x4 * &(c3 + &y3);
    match c4 {
        Some(c4) => {
            v[Chart::x(3)] = Rational::one();
            v[Chart::y(3)] = c4 + &y4;
        }
        None => {
            v[Chart::x(3)] = y4;
            v[Chart::y(3)] = Rational::one();
        }
    }
    v
}

#[test]
fn length_four_families_match_models() {
    let mut rng = rng(21);
    for _ in 0..3 {
        let (b3, c3, c4) = (
            nonzero_rational(&mut rng),
            nonzero_rational(&mut rng),
            nonzero_rational(&mut rng),
        );
        let d_model = Model::AppxBD {
            b3: b3.clone(),
            c3: c3.clone(),
            c4: c4.clone(),
        };
        let e_model = Model::AppxBE {
            b3: b3.clone(),
            c3: c3.clone(),
        };
        let d_spec = zero_spec("1.2.1.2")
            .with(Shift::B, 3, b3.clone())
            .and_then(|s| s.with(Shift::C, 3, c3.clone()))
            .and_then(|s| s.with(Shift::C, 4, c4.clone()))
            .unwrap();
        let e_spec = zero_spec("1.2.1.3")
            .with(Shift::B, 3, b3.clone())
            .and_then(|s| s.with(Shift::C, 3, c3.clone()))
            .unwrap();
        assert_eq!(d_model.ekr_spec().unwrap(), d_spec);
        assert_eq!(e_model.ekr_spec().unwrap(), e_spec);

        let d = d_model.distribution();
        let e = e_model.distribution();
        assert_eq!(
            build_ekr(&d_spec).distribution().generators(),
            d.generators()
        );
        assert_eq!(
            build_ekr(&e_spec).distribution().generators(),
            e.generators()
        );
        for p in sample_points(&mut rng, 11, 3) {
            assert_eq!(
                d.generators()[0].eval(&p).unwrap(),
                family_leading_at(&p, &b3, &c3, Some(&c4))
            );
            assert_eq!(
                e.generators()[0].eval(&p).unwrap(),
                family_leading_at(&p, &b3, &c3, None)
            );
        }
    }
}

#[test]
fn model_names_round_trip() {
    for name in [
        "ca_2",
        "ex_2",
        "bcd(2,3)",
        "appxB_D(1/2,-3,4)",
        "appxB_E(1,2)",
    ] {
        assert_eq!(Model::parse(name).unwrap().to_string(), name);
    }
    assert_eq!(Model::parse("bcd").unwrap(), Model::Bcd { m: 2, n: 3 });
    assert!(matches!(model("ca_7"), Err(Error::BadModelName(_))));
    let bcd = model("bcd(2,3)").unwrap();
    let names = bcd.chart().names().to_vec();
    let shown: Vec<String> = bcd
        .generators()
        .iter()
        .map(|g| g.display_with(&names))
        .collect();
    assert_eq!(shown.len(), 4);
    assert_eq!(shown[1..], ["d/dy1", "d/dy2", "d/dy3"]);
}

#[test]
fn letter_one_correspondence() {
    let opts = ClassifyOptions::default();
    for b in ekr_sweep(1..=4, 2, 22) {
        let s = sandwich_class_at(Target::Ekr(&b), &b.chart().origin(), opts).unwrap();
        for pos in 1..=b.length() {
            assert_eq!(
                s.is_underlined(pos),
                b.word().letter(pos) != 1,
                "{} at {pos}",
                b.word()
            );
        }
    }
}

#[test]
fn special_flag_everywhere_sampled() {
    let mut rng = rng(23);
    for b in ekr_sweep(1..=3, 3, 24) {
        let d = b.distribution();
        let r = b.length();
        let expected: Vec<usize> = (0..=r).map(|k| 3 + 2 * k).collect();
        for p in sample_points(&mut rng, d.dimension(), 3) {
            assert_eq!(d.big_flag(&p).unwrap().ranks(), expected, "{}", b.word());
        }
    }
}

#[test]
fn constants_admission_and_json() {
    let spec = EkrSpec::from_json(r#"{"word":"1.2.1.3","b":{"3":"1/2"},"c":{"3":"-2"}}"#).unwrap();
    assert_eq!(spec.b(3), q("1/2"));
    assert_eq!(spec.c(3), q("-2"));
    assert_eq!(spec.c(1), Rational::zero());
    assert_eq!(EkrSpec::from_json(&spec.to_json()).unwrap(), spec);

    for bad in [
        r#"{"word":"1.2.1.3","c":{"4":"5"}}"#,
        r#"{"word":"1.2","b":{"2":"1"}}"#,
    ] {
        assert!(
            matches!(EkrSpec::from_json(bad), Err(Error::ConstantNotAdmitted(_))),
            "{bad}"
        );
    }
    assert!(matches!(
        EkrSpec::from_json(r#"{"word":"1.2","d":{}}"#),
        Err(Error::BadSyntax(_))
    ));
    assert!(matches!(
        validate_word("1.1.3"),
        Err(Error::RuleViolation(_))
    ));
    assert!(matches!(validate_word("1.x"), Err(Error::BadSyntax(_))));
}

#[test]
fn leading_fields_only_use_earlier_variables() {
    for b in ekr_sweep(1..=4, 1, 25) {
        for l in 0..=b.length() {
            let z = b.leading_field(l);
            for c in z.components() {
                if let Some(v) = c.max_var() {
                    assert!(v <= Chart::y(l), "{} step {l}", b.word());
                }
            }
        }
    }
}
