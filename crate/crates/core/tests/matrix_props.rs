mod common;

use common::*;
use dutchbook_core::field::{OrderedField, Rational, SurrealRF};
use dutchbook_core::matrix::*;
use dutchbook_core::prevision::{lower_prevision, Bet};
use dutchbook_core::random::MatrixGenerator;
use dutchbook_core::Error;
use proptest::prelude::*;

fn check_duality<F: OrderedField>(m: &PayoffMatrix<F>) {
    let s = solve_zero_sum(m).unwrap();
    assert!(verify_solution(m, &s));
    let worst = (0..m.bookmakers().len())
        .map(|b| m.row_payoff(&s.row_strategy.weights, b))
        .min()
        .unwrap();
    let best = (0..m.outcomes().len())
        .map(|a| m.column_payoff(&s.column_strategy.weights, a))
        .max()
        .unwrap();
    assert_eq!(worst, s.value);
    assert_eq!(best, s.value);
    let (lo, hi) = minimax_gap(m);
    assert!(lo <= s.value && s.value <= hi);
}

fn check_dichotomy<F: OrderedField>(m: &PayoffMatrix<F>) {
    let s = solve_zero_sum(m).unwrap();
    let r = analyze_coherence(m).unwrap();
    assert!(verify_coherence(m, &r));
    let opposite = match &r {
        CoherenceResult::Coherent { .. } => CoherenceResult::DutchBook {
            portfolio: s.column_strategy.clone(),
        },
        CoherenceResult::DutchBook { .. } => CoherenceResult::Coherent {
            witness: s.row_strategy.clone(),
        },
    };
    assert!(!verify_coherence(m, &opposite));
    assert_eq!(r.is_dutch_book(), s.value.is_negative());
}

fn check_shift_and_scale<F: OrderedField>(m: &PayoffMatrix<F>, c: &F, k: &F) {
    let s = solve_zero_sum(m).unwrap();
    let shifted = m.map(|g| g.add(c));
    let moved = Solution {
        value: s.value.add(c),
        ..s.clone()
    };
    assert!(verify_solution(&shifted, &moved));
    assert_eq!(solve_zero_sum(&shifted).unwrap().value, moved.value);

    let scaled = m.map(|g| g.mul(k));
    let stretched = Solution {
        value: s.value.mul(k),
        ..s
    };
    assert!(verify_solution(&scaled, &stretched));
    assert_eq!(solve_zero_sum(&scaled).unwrap().value, stretched.value);
}

#[test]
fn rational_corpus_properties() {
    for m in rational_corpus() {
        check_duality(&m);
        check_dichotomy(&m);
        check_shift_and_scale(&m, &q(-7, 3), &q(5, 2));
    }
}

#[test]
fn surreal_corpus_properties() {
    for m in surreal_corpus() {
        check_duality(&m);
        check_dichotomy(&m);
        check_shift_and_scale(&m, &rf("1/w"), &rf("w"));
    }
}

#[test]
fn rational_and_surreal_solvers_agree() {
    for m in rational_corpus().iter().take(30) {
        let rows = m.rows().iter().map(|r| r.iter().map(SurrealRF::from_rational).collect()).collect();
        let lifted = PayoffMatrix::<SurrealRF>::from_rows(rows).unwrap();
        let v = solve_zero_sum(m).unwrap().value;
        assert_eq!(solve_zero_sum(&lifted).unwrap().value, SurrealRF::from_rational(&v));
    }
}

/// 2x2 without a saddle point: equalize Alice's payoff against both columns.
fn indifference_value(m: &PayoffMatrix<Rational>) -> Option<Rational> {
    let (a, b) = (m.payoff(0, 0), m.payoff(1, 0));
    let (c, d) = (m.payoff(0, 1), m.payoff(1, 1));
    let (lo, hi) = minimax_gap(m);
    if lo == hi {
        return Some(lo);
    }
    let denom = a - b - c + d;
    (denom != Rational::from_integer(0.into())).then(|| (a * d - b * c) / denom)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn two_by_two_closed_form(seed in any::<u64>()) {
        let mut gen = MatrixGenerator::new(seed);
        let m = PayoffMatrix::from_rows(gen.rational_matrix(2, 2)).unwrap();
        if let Some(v) = indifference_value(&m) {
            prop_assert_eq!(solve_zero_sum(&m).unwrap().value, v);
        }
    }

    #[test]
    fn random_shapes(seed in any::<u64>(), rows in 1usize..=4, cols in 1usize..=4) {
        let mut gen = MatrixGenerator::new(seed);
        let m = PayoffMatrix::from_rows(gen.rational_matrix(rows, cols)).unwrap();
        check_duality(&m);
        check_dichotomy(&m);
    }

    #[test]
    fn more_bets_never_lower_the_prevision(t1 in 1i64..5, t2 in 1i64..5, t3 in 1i64..5) {
        let ev = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        // a bet winning 1 and losing -t has threshold t/(1+t)
        let bet = |e: &[&str], t: i64| Bet::new(ev(e), SurrealRF::one(), SurrealRF::integer(-t)).unwrap();
        let target = ev(&["x", "y"]);
        let few = vec![bet(&["x"], t1)];
        let more = vec![bet(&["x"], t1), bet(&["y", "z"], t2)];
        let lo_few = lower_prevision(&few, &target).unwrap();
        prop_assert!(lo_few >= few[0].threshold());
        match lower_prevision(&more, &target) {
            Ok(lo_more) => prop_assert!(lo_more >= lo_few),
            Err(e) => prop_assert_eq!(e, Error::IncoherentBets),
        }
        let on_target = bet(&["x", "y"], t3);
        let lo = lower_prevision(std::slice::from_ref(&on_target), &target).unwrap();
        prop_assert_eq!(lo, on_target.threshold());
    }
}

#[test]
fn table1_scaled_by_omega() {
    let t1 = table1();
    let w = rf("w");
    let t2 = t1.map(|g| g * &w);
    let s1 = solve_zero_sum(&t1).unwrap();
    let s2 = solve_zero_sum(&t2).unwrap();
    assert_eq!(s2.value, &s1.value * &w);
    assert_eq!(s2.value, rf("1/(4*(w+1))"));
    let reused = Solution {
        value: s2.value.clone(),
        ..s1
    };
    assert!(verify_solution(&t2, &reused));
}
