//! End-to-end acceptance checks, one line per criterion.
//!
//! Runs without the libtest harness so the verdicts always print. Set
//! `SPFLAG_ACCEPTANCE_LONG=1` to add the 365-word length-7 sweep.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use common::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use spflag::atlas::{adjacencies, codimension, count_classes, enumerate_words};
use spflag::classify::{
    singularity_class_at, singularity_locus_equations, ClassifyOptions, Target,
};
use spflag::cli::{run_verify, VerifyConfig};
use spflag::ekr::{build_ekr, closed_form_f, closed_form_l, model, EkrBuild, Model};
use spflag::exactalg::{Monomial, Polynomial, Rational};
use spflag::geometry::{
    annihilator, cauchy_char_at, covariant_at, covariant_forms_at, lie_bracket, Chart,
    Distribution, OneForm, Subspace, VectorField, DEFAULT_GENERATOR_CAP,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ok<T>(r: spflag::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn classify(target: Target<'_>, p: &[Rational]) -> Result<spflag::ekr::Word, String> {
    ok(singularity_class_at(target, p, ClassifyOptions::default())).map(|r| r.word)
}

fn sweep() -> Outcome {
    let mut lengths: Vec<usize> = (1..=6).collect();
    if std::env::var_os("SPFLAG_ACCEPTANCE_LONG").is_some() {
        lengths.push(7);
    }
    let mut counts = Vec::new();
    let mut runs = 0;
    for r in lengths {
        let summary = run_verify(&VerifyConfig {
            length: r,
            trials: 3,
            seed: 0,
            zero_constants: true,
            options: ClassifyOptions::default(),
        });
        if let Some(f) = summary.failures().next() {
            return Err(format!(
                "{} draw {} computed {:?} error {:?}",
                f.word,
                f.draw,
                f.computed.as_ref().map(ToString::to_string),
                f.error
            ));
        }
        counts.push(summary.words.to_string());
        runs += summary.total;
    }
    Ok(format!(
        "words per length {}; {runs} runs",
        counts.join(", ")
    ))
}

/// `(1 + 3^{r−1}) / 2`.
#[allow(clippy::manual_div_ceil)]
fn class_formula(r: usize) -> u128 {
    (1 + 3u128.pow(r as u32 - 1)) / 2
}

fn counting() -> Outcome {
    let table: Vec<u128> = (1..=6).map(|m| count_classes(m, 7)).collect();
    ensure!(table == [32, 365, 715, 855, 876, 877], "table {table:?}");
    for r in 1..=10 {
        let formula = class_formula(r);
        ensure!(count_classes(2, r) == formula, "r={r}");
        ensure!(
            enumerate_words(r).len() as u128 == formula,
            "enumeration r={r}"
        );
    }
    let fourteen: BTreeSet<String> = [
        "1.1.1.1", "1.1.1.2", "1.1.2.1", "1.1.2.2", "1.1.2.3", "1.2.1.1", "1.2.1.2", "1.2.1.3",
        "1.2.2.1", "1.2.2.2", "1.2.2.3", "1.2.3.1", "1.2.3.2", "1.2.3.3",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    let got: BTreeSet<String> = enumerate_words(4).iter().map(ToString::to_string).collect();
    ensure!(got == fourteen, "length-4 words {got:?}");
    Ok(format!("m=1..6 at r=7: {table:?}"))
}

fn length_two_models() -> Outcome {
    let ca = ok(model("ca_2"))?;
    let ex = ok(model("ex_2"))?;
    let o = ca.chart().origin();
    ensure!(
        classify(Target::Distribution(&ca), &o)? == w("1.1"),
        "ca_2 at origin"
    );
    ensure!(
        classify(Target::Distribution(&ex), &o)? == w("1.2"),
        "ex_2 at origin"
    );
    let mut rng = rng(103);
    for _ in 0..10 {
        let mut p = random_point(&mut rng, 7);
        p[Chart::x(2)] = Rational::zero();
        ensure!(
            classify(Target::Distribution(&ex), &p)? == w("1.2"),
            "ex_2 on x2=0 at {p:?}"
        );
        p[Chart::x(2)] = nonzero_rational(&mut rng);
        ensure!(
            classify(Target::Distribution(&ex), &p)? == w("1.1"),
            "ex_2 off x2=0 at {p:?}"
        );
    }
    Ok("20 sampled points".into())
}

fn length_four_families() -> Outcome {
    let mut rng = rng(104);
    let n = 11;
    let o = vec![Rational::zero(); n];
    let f = Subspace::coordinate(n, &(Chart::x(1)..n).collect::<Vec<_>>());
    for _ in 0..3 {
        let (b3, c3, c4) = (
            nonzero_rational(&mut rng),
            nonzero_rational(&mut rng),
            nonzero_rational(&mut rng),
        );
        let d = Model::AppxBD {
            b3: b3.clone(),
            c3: c3.clone(),
            c4: c4.clone(),
        }
        .distribution();
        let e = Model::AppxBE { b3, c3 }.distribution();
        ensure!(
            classify(Target::Distribution(&d), &o)? == w("1.2.1.2"),
            "family D class"
        );
        ensure!(
            classify(Target::Distribution(&e), &o)? == w("1.2.1.3"),
            "family E class"
        );

        let dv = ok(d.small_flag(4, DEFAULT_GENERATOR_CAP))?;
        let ev = ok(e.small_flag(4, DEFAULT_GENERATOR_CAP))?;
        let d5 = ok(dv.next_value_at(&o))?;
        let e5 = ok(ev.next_value_at(&o))?;
        let witness = vector(n, &[(Chart::T, Rational::one()), (Chart::y(1), c4.clone())]);
        ensure!(ok(d5.contains(&witness))?, "∂t + c4∂y1 not in V5(0) for D");
        ensure!(!ok(d5.is_subspace_of(&f))?, "V5(0) ⊆ F(0) for D");
        ensure!(ok(e5.is_subspace_of(&f))?, "E5(0) ⊄ F(0)");

        let d3 = ok(dv.value_at(3, &o))?;
        let e3 = ok(ev.value_at(3, &o))?;
        let dx2 = vector(
            n,
            &[(Chart::x(2), Rational::one()), (Chart::y(2), c4.clone())],
        );
        let dy2 = vector(n, &[(Chart::y(2), Rational::one())]);
        ensure!(ok(d3.contains(&dx2))?, "∂x2 + c4∂y2 not in D3(0)");
        ensure!(ok(e3.contains(&dy2))?, "∂y2 not in E3(0)");
    }
    Ok("3 nonzero constant draws".into())
}

fn oracle_equivalence() -> Outcome {
    let mut rng = rng(105);
    let mut checks = 0;
    for b in ekr_sweep(1..=4, 1, 105) {
        let r = b.length();
        let top = ok(b.flag_member(1))?;
        let f = ok(closed_form_f(r))?;
        for p in sample_points(&mut rng, b.chart().dimension(), 5) {
            let cov = ok(covariant_at(&top, &p))?;
            ensure!(
                cov == ok(f.value_at(&p))?,
                "{}: covariant ≠ F at {p:?}",
                b.word()
            );
            ensure!(
                cov.dim() == 2 * r,
                "{}: covariant dimension {}",
                b.word(),
                cov.dim()
            );
            let alphas = ok(covariant_forms_at(&top, &p))?.len();
            ensure!(alphas == 3, "{}: α-space dimension {alphas}", b.word());
            let cauchy = ok(cauchy_char_at(&top, &p))?;
            ensure!(
                ok(cauchy.is_subspace_of(&cov))? && cov.dim() - cauchy.dim() == 2,
                "{}: Cauchy not of codimension 2 in covariant",
                b.word()
            );
            for j in 1..r {
                let l = ok(cauchy_char_at(&ok(b.flag_member(j))?, &p))?;
                ensure!(
                    l == ok(ok(closed_form_l(j, r))?.value_at(&p))?,
                    "{}: L(D^{j}) at {p:?}",
                    b.word()
                );
                checks += 1;
            }
            checks += 1;
        }
    }
    let bcd = ok(model("bcd(2,3)"))?;
    let y: Vec<usize> = ["y1", "y2", "y3"]
        .iter()
        .map(|s| bcd.chart().index_of(s).unwrap())
        .collect();
    for p in sample_points(&mut rng, bcd.dimension(), 3) {
        ensure!(
            ok(covariant_at(&bcd, &p))? == Subspace::coordinate(6, &y),
            "BCD covariant"
        );
        ensure!(
            ok(cauchy_char_at(&bcd, &p))? == Subspace::coordinate(6, &y[2..]),
            "BCD Cauchy"
        );
    }
    Ok(format!(
        "{checks} pointwise comparisons plus the corank-2 normal form"
    ))
}

fn locus() -> Outcome {
    let mut rng = rng(106);
    let mut perturbed = 0;
    for b in ekr_sweep(4..=4, 1, 106) {
        let eqs = singularity_locus_equations(b.word());
        ensure!(
            eqs.len() == codimension(b.word()),
            "{}: equation count",
            b.word()
        );
        for _ in 0..3 {
            let mut p: Vec<Rational> = (0..b.chart().dimension())
                .map(|_| nonzero_rational(&mut rng))
                .collect();
            for eq in &eqs {
                p[eq.index] = Rational::zero();
            }
            ensure!(
                classify(Target::Ekr(&b), &p)? == *b.word(),
                "{} on its locus at {p:?}",
                b.word()
            );
            for eq in &eqs {
                let k = (eq.index - 1) / 2;
                let mut off = p.clone();
                off[eq.index] = nonzero_rational(&mut rng);
                let got = classify(Target::Ekr(&b), &off)?;
                ensure!(
                    got.letter(k) != b.word().letter(k),
                    "{}: perturbing {eq} gave {got}",
                    b.word()
                );
                perturbed += 1;
            }
        }
    }
    Ok(format!("{perturbed} perturbations"))
}

fn random_poly(rng: &mut ChaCha8Rng, n: usize, terms: usize) -> Polynomial {
    let terms = (0..rng.gen_range(0..=terms)).map(|_| {
        let m = Monomial::from_pairs((0..rng.gen_range(0..=2)).map(|_| (rng.gen_range(0..n), 1)));
        (m, small_rational(rng))
    });
    Polynomial::from_terms(n, terms.collect::<Vec<_>>()).unwrap()
}

fn random_field(rng: &mut ChaCha8Rng, n: usize) -> VectorField {
    VectorField::new((0..n).map(|_| random_poly(rng, n, 2)).collect()).unwrap()
}

fn bracket_identities() -> Result<(), String> {
    let mut rng = rng(107);
    for _ in 0..100 {
        let (x, y, z) = (
            random_field(&mut rng, 3),
            random_field(&mut rng, 3),
            random_field(&mut rng, 3),
        );
        let f = random_poly(&mut rng, 3, 3);
        let xy = ok(lie_bracket(&x, &y))?;
        ensure!(
            ok(xy.checked_add(&ok(lie_bracket(&y, &x))?))?.is_zero(),
            "antisymmetry"
        );
        let jacobi = ok(ok(lie_bracket(&x, &ok(lie_bracket(&y, &z))?))?
            .checked_add(&ok(lie_bracket(&y, &ok(lie_bracket(&z, &x))?))?))?
        .checked_add(&ok(lie_bracket(&z, &xy))?);
        ensure!(ok(jacobi)?.is_zero(), "Jacobi");
        let lhs = ok(lie_bracket(&x, &y.mul_fn(&f)))?;
        let rhs = ok(xy.mul_fn(&f).checked_add(&y.mul_fn(&ok(x.apply(&f))?)))?;
        ensure!(lhs == rhs, "Leibniz");
    }
    Ok(())
}

fn rank_profiles(builds: &[EkrBuild]) -> Result<usize, String> {
    let mut rng = rng(108);
    let mut points = 0;
    for b in builds {
        let d = b.distribution();
        let expected: Vec<usize> = (0..=b.length()).map(|k| 3 + 2 * k).collect();
        for p in sample_points(&mut rng, d.dimension(), 9) {
            let got = ok(d.big_flag(&p))?.ranks();
            ensure!(got == expected, "{}: ranks {got:?} at {p:?}", b.word());
            points += 1;
        }
    }
    Ok(points)
}

fn sandwich_diagram(builds: &[EkrBuild]) -> Result<(), String> {
    let mut rng = rng(109);
    for b in builds {
        let r = b.length();
        for p in sample_points(&mut rng, b.chart().dimension(), 2) {
            let f = ok(ok(closed_form_f(r))?.value_at(&p))?;
            for j in 1..r {
                let l = ok(ok(closed_form_l(j, r))?.value_at(&p))?;
                let below = ok(ok(b.flag_member(j + 1))?.value_at(&p))?;
                let left = if j == 1 {
                    f.clone()
                } else {
                    ok(ok(closed_form_l(j - 1, r))?.value_at(&p))?
                };
                ensure!(
                    ok(l.is_subspace_of(&below))? && below.dim() - l.dim() == 1,
                    "{}: vertical at j={j}",
                    b.word()
                );
                ensure!(
                    ok(l.is_subspace_of(&left))? && left.dim() - l.dim() == 2,
                    "{}: horizontal at j={j}",
                    b.word()
                );
            }
        }
    }
    Ok(())
}

fn jet_annihilator() -> Result<(), String> {
    let mut rng = rng(110);
    for r in 1..=5 {
        let word = vec!["1"; r].join(".");
        let d: Distribution = build_ekr(&zero_spec(&word)).distribution();
        let n = d.dimension();
        let mut pfaff = Vec::new();
        for j in 0..r {
            for (a, b) in [
                (Chart::x(j), Chart::x(j + 1)),
                (Chart::y(j), Chart::y(j + 1)),
            ] {
                pfaff.push(OneForm::from_parts(
                    n,
                    [(a, Polynomial::one(n)), (Chart::T, -Polynomial::var(n, b))],
                ));
            }
        }
        for form in &pfaff {
            for g in d.generators() {
                ensure!(
                    ok(form.apply(g))?.is_zero(),
                    "r={r}: jet form does not annihilate"
                );
            }
        }
        for p in sample_points(&mut rng, n, 3) {
            let rows = |forms: &[OneForm]| -> Result<Subspace, String> {
                let v: Vec<Vec<Rational>> = forms
                    .iter()
                    .map(|f| f.eval(&p))
                    .collect::<Result<_, _>>()
                    .map_err(|e| e.to_string())?;
                ok(Subspace::spanned_by(n, &v))
            };
            ensure!(
                rows(&ok(annihilator(&d, &p))?)? == rows(&pfaff)?,
                "r={r}: annihilator differs at {p:?}"
            );
        }
    }
    Ok(())
}

fn structural() -> Outcome {
    bracket_identities()?;
    let builds = ekr_sweep(1..=4, 1, 107);
    let points = rank_profiles(&builds)?;
    sandwich_diagram(&builds)?;
    jet_annihilator()?;
    Ok(format!(
        "100 bracket triples, rank profiles at {points} points, jet bundle r=1..5"
    ))
}

fn adjacency() -> Outcome {
    for (a, b) in [
        ("1.2.3", "1.2.2"),
        ("1.2.2", "1.1.2"),
        ("1.1.2", "1.1.1"),
        ("1.2.3.2", "1.2.3.1"),
        ("1.2.3.1", "1.2.2.1"),
    ] {
        ensure!(adjacencies(&w(a)).contains(&w(b)), "{a} → {b} missing");
    }
    let mut edges = 0;
    for r in 1..=5 {
        for word in enumerate_words(r) {
            for t in adjacencies(&word) {
                ensure!(codimension(&t) + 1 == codimension(&word), "{word} → {t}");
                edges += 1;
            }
        }
    }
    Ok(format!("{edges} edges up to length 5"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (
            "every class is realized by its own EKR at the origin",
            sweep,
        ),
        ("class counts and the length-4 list", counting),
        (
            "length-2 models and the x2=0 hypersurface",
            length_two_models,
        ),
        (
            "the two length-4 families separated by V5(0)",
            length_four_families,
        ),
        (
            "generic covariant and Cauchy spaces equal the closed forms",
            oracle_equivalence,
        ),
        ("locus equations cut out each length-4 class", locus),
        ("structural invariants", structural),
        ("adjacency chains and codimension drop", adjacency),
    ];
    let mut failed = 0;
    for (i, (title, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS criterion {}: {title} ({detail}; {secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {title}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
