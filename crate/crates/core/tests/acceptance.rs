//! Acceptance criteria. Every value is compared by exact rational equality.
//!
//! Run with `cargo test -p pts-core --test acceptance -- --nocapture` to see
//! the per-criterion report.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};

use num_traits::{One, Zero};
use pts_core::oracle::{brute_measure, word_oracle_equiv, PathQuery};
use pts_core::rational::ratio;
use pts_core::word::words_of_length;
use pts_core::{
    build_rep, naive, Algorithm, Checker, Config, EquivResult, GenSet, LinearRep, OutputKind,
    Rational, StepAction, TraceMeasure, Word,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn pow3(n: u32) -> Rational {
    Rational::from_integer(3.into()).pow(n as i32)
}

fn config(ws: &[(i64, i64)]) -> Config {
    Config::new(ws.iter().map(|&(n, d)| ratio(n, d)).collect())
}

fn opening_example() -> Check {
    let rep = build_rep(&common::load("opening.json"));
    let tm = TraceMeasure::new(&rep).map_err(|e| e.to_string())?;
    let x = rep.dirac("x").unwrap();
    let y = rep.dirac("y").unwrap();
    let a = rep.alphabet().lookup("a").unwrap();
    let mut w = Word::empty();
    for n in 0..=20u32 {
        let word = tm.measure(&y, &GenSet::FiniteWord(w.clone()));
        ensure!(word == (pow3(n + 1)).recip(), "y(a^{n}) = {word}");
        let cone = tm.measure(&y, &GenSet::Cone(w.clone()));
        let expected = (Rational::one() + pow3(n).recip()) / ratio(2, 1);
        ensure!(
            cone == expected,
            "y(a^{n}A^inf) = {cone}, expected {expected}"
        );
        ensure!(
            tm.measure(&x, &GenSet::FiniteWord(w.clone())).is_zero(),
            "x(a^{n}) != 0"
        );
        ensure!(
            tm.measure(&x, &GenSet::Cone(w.clone())).is_one(),
            "x(a^{n}A^inf) != 1"
        );
        w.push(a);
    }
    let inf = tm.measure(&y, &GenSet::AllInfinite);
    ensure!(inf == ratio(1, 2), "y(A^omega) = {inf}");
    Ok("n = 0..20, y(A^omega) = 1/2".into())
}

fn cantor_example() -> Check {
    let rep = build_rep(&common::load("cantor.json"));
    let tm = TraceMeasure::new(&rep).map_err(|e| e.to_string())?;
    let x = rep.dirac("x").unwrap();
    let ab = rep.alphabet();
    let one = ab.lookup("1").unwrap();
    let mut checked = 0;
    for len in 0..=8 {
        for w in words_of_length(ab.len(), len) {
            if w.letters().contains(&one) {
                continue;
            }
            let third = ratio(1, 3);
            let word = tm.measure(&x, &GenSet::FiniteWord(w.extended(one)));
            ensure!(
                word == third.pow(len as i32 + 1),
                "x({}1) = {word}",
                ab.format_word(&w)
            );
            let cone = tm.measure(&x, &GenSet::Cone(w.clone()));
            ensure!(
                cone == third.pow(len as i32),
                "x({}A^inf) = {cone}",
                ab.format_word(&w)
            );
            checked += 1;
        }
    }
    let inf = tm.measure(&x, &GenSet::AllInfinite);
    ensure!(inf.is_zero(), "x(A^omega) = {inf}");
    let fin = tm.measure(&x, &GenSet::AllFinite);
    ensure!(fin.is_one(), "x(A^*) = {fin}");
    Ok(format!(
        "{checked} one-free words, x(A^omega) = 0, x(A^*) = 1"
    ))
}

fn worked_hkc_run() -> Check {
    let rep = build_rep(&common::load("xyzi.json"));
    let r = |n, d| ratio(n, d);
    ensure!(
        rep.l_star() == [r(1, 3), r(2, 3), r(1, 3), r(0, 1)],
        "L* = {:?}",
        rep.l_star()
    );
    let expected = [
        [r(0, 1), r(0, 1), r(0, 1), r(0, 1)],
        [r(1, 6), r(1, 3), r(0, 1), r(0, 1)],
        [r(0, 1), r(0, 1), r(1, 3), r(0, 1)],
        [r(1, 2), r(0, 1), r(1, 3), r(1, 1)],
    ];
    let m = rep.matrix(rep.alphabet().lookup("a").unwrap());
    for (j, row) in expected.iter().enumerate() {
        ensure!(m.row(j) == row, "M_a row {j} = {:?}", m.row(j));
    }

    let report = Checker::new(&rep, Algorithm::HkcInf)
        .trace(true)
        .check_invariant(true)
        .run("x", "z")
        .map_err(|e| e.to_string())?;
    ensure!(
        report.result
            == EquivResult::Equivalent {
                iterations: 3,
                relation_size: 2
            },
        "result {:?}",
        report.result
    );
    ensure!(
        report.trace.len() == 3,
        "{} extractions",
        report.trace.len()
    );
    let t = &report.trace;
    ensure!(
        t[1].lhs == config(&[(0, 1), (1, 6), (0, 1), (1, 2)])
            && t[1].rhs == config(&[(0, 1), (0, 1), (1, 3), (1, 3)]),
        "loop 2 pair {:?}",
        (&t[1].lhs, &t[1].rhs)
    );
    ensure!(
        t[2].lhs == config(&[(0, 1), (1, 18), (0, 1), (1, 2)])
            && t[2].rhs == config(&[(0, 1), (0, 1), (1, 9), (4, 9)]),
        "loop 3 pair {:?}",
        (&t[2].lhs, &t[2].rhs)
    );
    ensure!(
        t[2].action == StepAction::Skipped,
        "loop 3 not pruned by congruence"
    );
    Ok("L*, M_a, 3 extractions, |R| = 2, table vectors".into())
}

fn infinite_traces_matter() -> Check {
    let rep = build_rep(&common::load("yz_ab.json"));
    let inf = pts_core::hkc_inf(&rep, "y", "z").map_err(|e| e.to_string())?;
    let expected = EquivResult::NotEquivalent {
        witness: rep.alphabet().parse_word("a").unwrap(),
        output: OutputKind::TotalMass,
        lhs: ratio(1, 2),
        rhs: ratio(3, 4),
    };
    ensure!(inf == expected, "hkc-inf gave {inf:?}");
    let fin = pts_core::hkc_finite(&rep, "y", "z").map_err(|e| e.to_string())?;
    ensure!(fin.is_equivalent(), "hkc-finite gave {fin:?}");
    Ok("hkc-inf: witness a, 1/2 vs 3/4; hkc-finite: equivalent".into())
}

fn congruence_speedup() -> Check {
    let rep = build_rep(&common::load("basic_xy.json"));
    let report = Checker::new(&rep, Algorithm::HkcInf)
        .run("x", "y")
        .map_err(|e| e.to_string())?;
    ensure!(
        report.result.is_equivalent(),
        "hkc-inf gave {:?}",
        report.result
    );
    ensure!(
        report.relation_size == 1,
        "{} relation insertions",
        report.relation_size
    );
    let slow = naive(&rep, "x", "y", 100).map_err(|e| e.to_string())?;
    ensure!(
        slow == EquivResult::Inconclusive {
            steps_exhausted: 100
        },
        "naive gave {slow:?}"
    );
    Ok("hkc-inf |R| = 1; naive inconclusive after 100".into())
}

#[derive(Default)]
struct Tally {
    instances: usize,
    pairs: usize,
    equivalent_pairs: usize,
    distinct_equivalent: usize,
}

fn words_up_to(k: usize, max_len: usize) -> impl Iterator<Item = Word> {
    (0..=max_len).flat_map(move |len| words_of_length(k, len))
}

fn check_instance(rep: &LinearRep, pts: &pts_core::Pts, tally: &mut Tally) -> Result<(), String> {
    let n = rep.dim();
    let k = rep.alphabet().len();

    // (a) l_one = l_star + Σ_a l_one · M_a
    for col in 0..n {
        let mut total = rep.l_star()[col].clone();
        for a in rep.alphabet().ids() {
            for j in 0..n {
                total += &rep.l_one()[j] * rep.matrix(a).get(j, col);
            }
        }
        ensure!(total == rep.l_one()[col], "(a) column {col}");
    }

    let tm = TraceMeasure::new(rep).map_err(|e| e.to_string())?;
    for x in pts.state_ids() {
        let u = rep.dirac_id(x);
        let name = pts.state_name(x);
        // (b) generator additivity
        for w in words_up_to(k, 4) {
            let mut split = tm.measure(&u, &GenSet::FiniteWord(w.clone()));
            for a in rep.alphabet().ids() {
                split += tm.measure(&u, &GenSet::Cone(w.extended(a)));
            }
            ensure!(
                tm.measure(&u, &GenSet::Cone(w.clone())) == split,
                "(b) state {name}"
            );
        }
        // (c)
        let all = tm.measure(&u, &GenSet::All);
        let parts = tm.measure(&u, &GenSet::AllFinite) + tm.measure(&u, &GenSet::AllInfinite);
        ensure!(all == parts, "(c) state {name}");
        // (e)
        for w in words_up_to(k, 6) {
            let brute =
                brute_measure(pts, name, &PathQuery::Word(w.clone())).map_err(|e| e.to_string())?;
            ensure!(
                brute == tm.measure(&u, &GenSet::FiniteWord(w.clone())),
                "(e) word, state {name}"
            );
            let brute =
                brute_measure(pts, name, &PathQuery::Cone(w.clone())).map_err(|e| e.to_string())?;
            ensure!(
                brute == tm.measure(&u, &GenSet::Cone(w)),
                "(e) cone, state {name}"
            );
        }
    }

    for x in pts.state_ids() {
        for y in pts.state_ids() {
            let (dx, dy) = (rep.dirac_id(x), rep.dirac_id(y));
            let report = Checker::new(rep, Algorithm::HkcInf)
                .run_configs(dx.clone(), dy.clone())
                .map_err(|e| e.to_string())?;
            // (d)
            let oracle = word_oracle_equiv(rep, &dx, &dy, n);
            ensure!(
                report.result.is_equivalent() == oracle,
                "(d) {} vs {}: decider {:?}, oracle {oracle}",
                pts.state_name(x),
                pts.state_name(y),
                report.result
            );
            // (f)
            ensure!(
                report.iterations <= 1 + k * n,
                "(f) {} iterations",
                report.iterations
            );
            // (g)
            if let EquivResult::NotEquivalent {
                witness,
                output,
                lhs,
                rhs,
            } = &report.result
            {
                let l = output.eval(rep, &rep.word_transform(&dx, witness));
                let r = output.eval(rep, &rep.word_transform(&dy, witness));
                ensure!(
                    l == *lhs && r == *rhs && l != r,
                    "(g) witness does not revalidate"
                );
            }
            tally.pairs += 1;
            if report.result.is_equivalent() {
                tally.equivalent_pairs += 1;
                if x != y {
                    tally.distinct_equivalent += 1;
                }
            }
        }
    }
    Ok(())
}

fn property_suite() -> Check {
    const INSTANCES: u64 = 500;
    let mut tally = Tally::default();
    for seed in 0..INSTANCES {
        let n = 1 + (seed % 5) as usize;
        let k = 1 + ((seed / 5) % 2) as usize;
        let pts = common::random_pts(&mut ChaCha8Rng::seed_from_u64(seed), n, k);
        let rep = build_rep(&pts);
        check_instance(&rep, &pts, &mut tally).map_err(|e| format!("seed {seed}: {e}"))?;
        tally.instances += 1;
    }
    ensure!(tally.instances >= 500, "only {} instances", tally.instances);
    Ok(format!(
        "{} systems, {} state pairs ({} equivalent, {} of them between distinct states)",
        tally.instances, tally.pairs, tally.equivalent_pairs, tally.distinct_equivalent
    ))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 6] = [
        ("1 opening example measures", opening_example),
        ("2 Cantor example measures", cantor_example),
        ("3 worked hkc-inf run", worked_hkc_run),
        ("4 infinite-trace discrimination", infinite_traces_matter),
        ("5 up-to-congruence speedup", congruence_speedup),
        ("6 randomized property suite", property_suite),
    ];
    let mut failed = Vec::new();
    for (name, criterion) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(criterion))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        match outcome {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                println!("FAIL  {name}: {why}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
