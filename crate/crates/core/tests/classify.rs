mod common;

use common::*;
use rand::Rng;
use spflag::atlas::codimension;
use spflag::classify::{
    singularity_class_at, singularity_locus_equations, ClassificationReport, ClassifyOptions,
    GeometrySource, Target,
};
use spflag::ekr::{build_ekr, model, validate_word, EkrBuild, EkrSpec, Model};
use spflag::exactalg::Rational;
use spflag::geometry::{Chart, Distribution};
use spflag::Error;

fn at_ekr(b: &EkrBuild, p: &[Rational]) -> ClassificationReport {
    singularity_class_at(Target::Ekr(b), p, ClassifyOptions::default()).unwrap()
}

fn at_model(d: &Distribution, p: &[Rational]) -> ClassificationReport {
    singularity_class_at(Target::Distribution(d), p, ClassifyOptions::default()).unwrap()
}

#[test]
fn documented_examples() {
    let ca = model("ca_2").unwrap();
    let ex = model("ex_2").unwrap();
    let o = ca.chart().origin();
    assert_eq!(at_model(&ca, &o).word, w("1.1"));
    let r = at_model(&ex, &o);
    assert_eq!(r.word, w("1.2"));
    assert_eq!(r.sandwich.to_string(), "1.2_");
    assert!(r.evidence.is_empty());

    let mut p = o.clone();
    p[Chart::x(2)] = Rational::one();
    assert_eq!(at_model(&ex, &p).word, w("1.1"));

    let spec = EkrSpec::from_json(r#"{"word":"1.2.1.3","b":{"3":"1"},"c":{"3":"1"}}"#).unwrap();
    let b = build_ekr(&spec);
    assert_eq!(at_ekr(&b, &b.chart().origin()).word, w("1.2.1.3"));
}

#[test]
fn ex_2_hypersurface() {
    let ex = model("ex_2").unwrap();
    let mut rng = rng(31);
    for _ in 0..10 {
        let mut p = random_point(&mut rng, 7);
        p[Chart::x(2)] = Rational::zero();
        assert_eq!(at_model(&ex, &p).word, w("1.2"));
        p[Chart::x(2)] = nonzero_rational(&mut rng);
        assert_eq!(at_model(&ex, &p).word, w("1.1"));
    }
}

#[test]
fn length_four_families_evidence() {
    let mut rng = rng(32);
    for _ in 0..3 {
        let (b3, c3, c4) = (
            nonzero_rational(&mut rng),
            nonzero_rational(&mut rng),
            nonzero_rational(&mut rng),
        );
        let d = Model::AppxBD {
            b3: b3.clone(),
            c3: c3.clone(),
            c4,
        }
        .distribution();
        let rep = at_model(&d, &d.chart().origin());
        assert_eq!(rep.word, w("1.2.1.2"));
        assert_eq!(rep.evidence.len(), 1);
        let ev = &rep.evidence[0];
        assert_eq!(
            (ev.position, ev.nu, ev.l, ev.member.as_str(), ev.included),
            (4, 2, 1, "V_5", false)
        );

        let e = Model::AppxBE { b3, c3 }.distribution();
        let rep = at_model(&e, &e.chart().origin());
        assert_eq!(rep.word, w("1.2.1.3"));
        assert!(rep.evidence[0].included);
    }
}

/// Random point on the locus of `word`: locus coordinates zero, every other
/// coordinate a nonzero rational.
fn locus_point(rng: &mut rand_chacha::ChaCha8Rng, b: &EkrBuild) -> Vec<Rational> {
    let mut p: Vec<Rational> = (0..b.chart().dimension())
        .map(|_| nonzero_rational(rng))
        .collect();
    for eq in singularity_locus_equations(b.word()) {
        p[eq.index] = Rational::zero();
    }
    p
}

#[test]
fn locus_consistency_and_perturbation() {
    let mut rng = rng(33);
    for b in ekr_sweep(1..=4, 1, 34) {
        let eqs = singularity_locus_equations(b.word());
        assert_eq!(eqs.len(), codimension(b.word()));
        for _ in 0..2 {
            let p = locus_point(&mut rng, &b);
            assert_eq!(at_ekr(&b, &p).word, *b.word(), "on the locus at {p:?}");
            for eq in &eqs {
                let k = (eq.index - 1) / 2;
                let mut off = p.clone();
                off[eq.index] = nonzero_rational(&mut rng);
                let got = at_ekr(&b, &off).word;
                assert_ne!(
                    got.letter(k),
                    b.word().letter(k),
                    "{} perturbing {eq}",
                    b.word()
                );
            }
        }
    }
}

#[test]
fn refinement_keeps_the_ones() {
    let mut rng = rng(35);
    for b in ekr_sweep(1..=4, 1, 36) {
        for p in sample_points(&mut rng, b.chart().dimension(), 3) {
            let rep = at_ekr(&b, &p);
            for pos in 1..=b.length() {
                assert_eq!(rep.sandwich.is_underlined(pos), rep.word.letter(pos) != 1);
            }
            let first = rep.sandwich.underlined_positions().first().copied();
            if let Some(f) = first {
                assert_eq!(rep.word.letter(f), 2);
            }
            assert_eq!(validate_word(&rep.word.to_string()).unwrap(), rep.word);
            assert_eq!(
                rep.evidence.len(),
                rep.sandwich.underlined_positions().len().saturating_sub(1)
            );
        }
    }
}

#[test]
fn generic_ones_everywhere() {
    let mut rng = rng(37);
    for r in 1..=5 {
        let word = vec!["1"; r].join(".");
        let b = build_ekr(&zero_spec(&word));
        for p in sample_points(&mut rng, b.chart().dimension(), 4) {
            assert_eq!(at_ekr(&b, &p).word, w(&word));
        }
    }
}

#[test]
fn generic_geometry_agrees_with_closed_forms_at_points() {
    let opts = ClassifyOptions {
        geometry: GeometrySource::Generic,
        ..Default::default()
    };
    let mut rng = rng(38);
    for b in ekr_sweep(2..=4, 1, 39) {
        let mut points = vec![b.chart().origin()];
        if rng.gen_bool(0.5) {
            points.push(locus_point(&mut rng, &b));
        }
        for p in points {
            let generic = singularity_class_at(Target::Ekr(&b), &p, opts).unwrap();
            let closed = at_ekr(&b, &p);
            assert_eq!(generic.word, closed.word);
            assert_eq!(generic.evidence, closed.evidence);
            assert_eq!(generic.geometry, GeometrySource::Generic);
        }
    }
}

#[test]
fn errors() {
    let b = build_ekr(&zero_spec("1.2"));
    let e = singularity_class_at(
        Target::Ekr(&b),
        &[Rational::zero()],
        ClassifyOptions::default(),
    );
    assert!(matches!(e, Err(Error::ChartMismatch(_))));
    let bcd = model("bcd(2,3)").unwrap();
    let e = singularity_class_at(
        Target::Distribution(&bcd),
        &bcd.chart().origin(),
        ClassifyOptions::default(),
    );
    assert!(matches!(e, Err(Error::NotSpecialFlag(_))));
}
