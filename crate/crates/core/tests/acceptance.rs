//! Acceptance suite. Run with `--nocapture` to see one line per criterion.

mod common;

use std::time::Instant;

use common::*;
use rand::Rng;
use rrcurve::oracle::{minimal_length_bfs, minimize_length};
use rrcurve::{
    abelianize, balanced_product, classify, classify_form, cmz_condition, cmz_syllables, enumerate_cyclic_words,
    equivalence_sweep, gcd, homology_check, index_via_perp, is_primitive_oracle, normalize_brz, oracle_verdict,
    realize_word, validate, wmn, AbVector, CurveClass, DiagramError, DiagramForm, Generator, Letter, SeifertMFiber,
    Verdict, Word,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! check {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn letter_sums(w: &Word) -> (i64, i64) {
    let mut sums = (0, 0);
    for l in w.letters() {
        match l.generator() {
            Generator::A => sums.0 += l.sign(),
            Generator::B => sums.1 += l.sign(),
        }
    }
    sums
}

fn both_verdicts(w: &Word) -> (Verdict, Verdict) {
    (classify(w).unwrap().verdict, oracle_verdict(w).unwrap().class.verdict())
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let summary = equivalence_sweep(10);
    let elapsed = start.elapsed();
    check!(summary.mismatches == 0, "{} mismatches, first {:?}", summary.mismatches, summary.counterexample);
    check!(elapsed.as_secs() <= 300, "took {elapsed:?}");
    Ok(format!("{} words, 0 mismatches in {:.1?}", summary.checked, elapsed))
}

fn power_five_family_primitive() -> Outcome {
    let mut cases = 0;
    for s in 1..=3 {
        for epsilon in [1, -1] {
            for a in 1..=9u64 {
                for b in 1..=(10 - a) {
                    let form = DiagramForm::LemmaPPower5 { s, epsilon, a, b };
                    let Ok(valid) = validate(&form) else {
                        check!(gcd(a, b) != 1 || (s == 1 && epsilon == -1), "rejected {form:?}");
                        continue;
                    };
                    let w = realize_word(&valid).unwrap();
                    let (ours, truth) = both_verdicts(&w);
                    check!(ours == Verdict::Primitive, "{form:?}: recognizer says {ours:?} for {w}");
                    check!(truth == Verdict::Primitive, "{form:?}: oracle says {truth:?} for {w}");
                    check!(classify_form(&valid).unwrap() == CurveClass::Primitive, "{form:?}");
                    cases += 1;
                }
            }
        }
    }
    Ok(format!("{cases} realizations primitive"))
}

fn power_subwords_never_proper_power() -> Outcome {
    let block = |n: u64| {
        Word::from_syllables([(Generator::A, 1), (Generator::B, 2)])
            .concat(&Word::from_syllables([(Generator::A, 1), (Generator::B, 1)]).pow(n))
    };
    let mut cases = 0;
    for n in 0..=3 {
        for e in 2..=4 {
            for x in 1..=4u64 {
                for y in 1..=4u64 {
                    if gcd(x, y) != 1 {
                        continue;
                    }
                    let w = balanced_product(&block(n), &block(n + e), x, y).unwrap();
                    let (ours, truth) = both_verdicts(&w);
                    check!(!matches!(ours, Verdict::ProperPower { .. }), "recognizer: {w} is {ours:?}");
                    check!(!matches!(truth, Verdict::ProperPower { .. }), "oracle: {w} is {truth:?}");
                    cases += 1;
                }
            }
        }
    }
    Ok(format!("{cases} products, none a proper power"))
}

fn seifert_d_indexes() -> Outcome {
    let mut cases = 0;
    for n in 2..=4u64 {
        for s in 2..=4u64 {
            for a in 1..=7u64 {
                for b in 1..=(8 - a) {
                    if gcd(a, b) != 1 {
                        continue;
                    }
                    let valid = validate(&DiagramForm::SeifertDGen { n, s, a, b }).unwrap();
                    let closed = n * (a + b) + b;
                    check!(classify_form(&valid).unwrap() == CurveClass::seifert_d(closed, s), "class {n} {s} {a} {b}");
                    check!(index_via_perp(&valid).unwrap() == closed, "perp index {n} {s} {a} {b}");
                    let w = realize_word(&valid).unwrap();
                    let expected = (closed as i64, (s * (a + b)) as i64);
                    check!(letter_sums(&w) == expected, "letter sums of {w}");
                    check!(abelianize(&w) == AbVector::new(expected.0, expected.1), "abelianization of {w}");
                    cases += 1;
                }
            }
        }
    }
    Ok(format!("{cases} parameter sets"))
}

fn homology_anchor() -> Outcome {
    for n in 1..=20i64 {
        let alpha = Word::power(Generator::A, n).concat(&Word::letter(Letter::B));
        let beta = Word::letter(Letter::B);
        let h = homology_check(&alpha, &beta).unwrap();
        check!(h == (1, n as u64), "n = {n}: got {h:?}");
    }
    Ok("Z/n for n = 1..20".into())
}

fn seifert_m() -> Outcome {
    for s in 2..=10 {
        let valid = validate(&DiagramForm::SeifertM { s }).unwrap();
        let class = classify_form(&valid).unwrap();
        check!(
            class == CurveClass::SeifertM { fiber: SeifertMFiber::Index(s), alternative_disk_base: None },
            "s = {s}: {class:?}"
        );
        let w = realize_word(&valid).unwrap();
        check!(w == common::w(&format!("A B^{s} A^-1 B^{s}")), "word for s = {s}: {w}");
        let (ours, truth) = both_verdicts(&w);
        check!(ours == Verdict::Neither && truth == Verdict::Neither, "s = {s}: {ours:?} / {truth:?}");
    }
    let one = classify_form(&validate(&DiagramForm::SeifertM { s: 1 }).unwrap()).unwrap();
    check!(
        one == CurveClass::SeifertM { fiber: SeifertMFiber::NoExceptionalFiber, alternative_disk_base: Some([2, 2]) },
        "s = 1: {one:?}"
    );
    Ok("s = 2..10 indexed, s = 1 annotated".into())
}

fn power_captions() -> Outcome {
    let mut cases = 0;
    let mut expect = |form: DiagramForm, k: usize| -> Result<(), String> {
        let valid = validate(&form).map_err(|e| format!("{form:?}: {e}"))?;
        let word = realize_word(&valid).unwrap();
        let got = classify(&word).unwrap().verdict;
        check!(got == Verdict::ProperPower { exponent: k }, "{form:?}: {got:?}");
        let CurveClass::ProperPower { exponent, .. } = classify_form(&valid).unwrap() else {
            return Err(format!("{form:?} not a proper power form"));
        };
        check!(exponent == Some(k as u64), "{form:?}: form exponent {exponent:?}");
        cases += 1;
        Ok(())
    };
    for s in 2..=4 {
        expect(DiagramForm::PPTypeII { s }, s as usize)?;
    }
    for s in 1..=4 {
        for a in 1..=5 {
            for b in 1..=5 {
                expect(DiagramForm::PPTypeIII { s, a, b }, (a + b) as usize)?;
            }
        }
    }
    for a in 1..=5 {
        for b in 1..=5 {
            for c in 1..=5 {
                expect(DiagramForm::PPTypeIV { a, b, c }, (a + b + c) as usize)?;
            }
        }
    }
    Ok(format!("{cases} realizations"))
}

fn wmn_primitive() -> Outcome {
    let mut cases = 0;
    for m in 1..=8i64 {
        for n in 1..=8i64 {
            if gcd(m as u64, n as u64) != 1 {
                continue;
            }
            for (sm, sn) in [(1, 1), (-1, 1), (1, -1), (-1, -1)] {
                let word = wmn(sm * m, sn * n).unwrap();
                check!(is_primitive_oracle(&word).unwrap(), "W({}, {}) = {word}", sm * m, sn * n);
                check!(letter_sums(&word) == (sm * m, sn * n), "abelianization of {word}");
                check!(word.len() as i64 == m + n, "length of {word}");
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} words"))
}

/// `x / d ≡ ±y / d (mod 1)`
fn same_fraction_up_to_sign(x: u64, y: u64, d: u64) -> bool {
    (x + y).is_multiple_of(d) || x.abs_diff(y).is_multiple_of(d)
}

fn normalize_forms() -> Outcome {
    let mut normalized = 0;
    let mut rects = 0;
    'search: for a in 1..=12u64 {
        for b in 1..=12u64 {
            if gcd(a, b) != 1 {
                continue;
            }
            for q in [5u64, 7] {
                let omega = 2;
                let side = a + b;
                let far = side + a;
                let forms = [
                    DiagramForm::BRZSForm { nu: side, omega, p: far, q, a, b, n: 1 },
                    DiagramForm::BRZTForm { nu: omega, omega: side, p: q, q: far, a, b, n: 1 },
                ];
                for form in forms {
                    let Ok(valid) = validate(&form) else { continue };
                    match normalize_brz(&valid) {
                        Err(DiagramError::NormalizesToRect { .. }) => {
                            check!(b % a == 0, "{form:?} reported rectangular");
                            rects += 1;
                        }
                        Err(e) => return Err(format!("{form:?}: {e}")),
                        Ok(out) => {
                            check!(b % a != 0, "{form:?} should be rectangular");
                            check!(validate(out.form()).is_ok(), "output does not validate");
                            let ok = match (form.clone(), out.into_form()) {
                                (
                                    DiagramForm::BRZSForm { nu, omega, p, q, .. },
                                    DiagramForm::BRZSForm { nu: nu2, omega: om2, p: p2, q: q2, n, .. },
                                )
                                | (
                                    DiagramForm::BRZTForm { nu, omega, p, q, .. },
                                    DiagramForm::BRZTForm { nu: nu2, omega: om2, p: p2, q: q2, n, .. },
                                ) => {
                                    n > 1
                                        && (p2, q2) == (p, q)
                                        && same_fraction_up_to_sign(nu2, nu, p)
                                        && same_fraction_up_to_sign(om2, omega, q)
                                }
                                _ => false,
                            };
                            check!(ok, "{form:?} normalized incorrectly");
                            normalized += 1;
                            if normalized == 50 {
                                break 'search;
                            }
                        }
                    }
                }
            }
        }
    }
    check!(normalized == 50, "only {normalized} normalizable sets");
    check!(rects > 0, "no rectangular case exercised");
    Ok(format!("{normalized} normalized, {rects} rectangular"))
}

fn exponent_condition_necessary() -> Outcome {
    let mut rng = rng(0xacce97);
    let mut checked = 0;
    while checked < 1_000 {
        let k = rng.random_range(1..=4);
        let c = random_automorph_of_power(&mut rng, k, 40);
        if c.generator_count() < 2 {
            continue;
        }
        check!(c.len() <= 40, "{c} too long");
        check!(cmz_condition(&cmz_syllables(&c)).is_some(), "{c} fails the exponent condition");
        checked += 1;
    }
    Ok(format!("{checked} samples"))
}

fn greedy_matches_bfs() -> Outcome {
    let mut cases = 0;
    for c in enumerate_cyclic_words(8) {
        let greedy = minimize_length(&c).0.len();
        let bfs = minimal_length_bfs(&c);
        check!(greedy == bfs, "{c}: greedy {greedy}, bfs {bfs}");
        cases += 1;
    }
    Ok(format!("{cases} words"))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 11] = [
        ("recognizer agrees with oracle on all words up to length 10", oracle_equivalence),
        ("power-five family is primitive", power_five_family_primitive),
        ("two-block power subwords are never proper powers", power_subwords_never_proper_power),
        ("Seifert-d general index and abelianization", seifert_d_indexes),
        ("homology of (n,1),(0,1) is Z/n", homology_anchor),
        ("Seifert-m family", seifert_m),
        ("proper power exponents", power_captions),
        ("W(m,n) primitive with exact abelianization", wmn_primitive),
        ("BRZ normalization to n > 1", normalize_forms),
        ("exponent condition holds on random primitives and powers", exponent_condition_necessary),
        ("greedy descent reaches BFS minimum up to length 8", greedy_matches_bfs),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2}: PASS  {name} ({detail})", i + 1),
            Err(why) => {
                println!("criterion {:>2}: FAIL  {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
