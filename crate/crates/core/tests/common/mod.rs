#![allow(dead_code)]

use std::path::PathBuf;

use pts_core::rational::ratio;
use pts_core::{parse_pts, Pts, PtsBuilder, Rational};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

pub fn load(name: &str) -> Pts {
    let text = std::fs::read_to_string(data_path(name)).expect("fixture readable");
    parse_pts(&text).expect("fixture valid")
}

/// Random distribution over `slots` outcomes with small integer weights.
fn distribution<R: Rng>(rng: &mut R, slots: usize) -> Vec<Rational> {
    loop {
        let weights: Vec<i64> = (0..slots)
            .map(|_| {
                if rng.gen_bool(0.5) {
                    0
                } else {
                    rng.gen_range(1..=3)
                }
            })
            .collect();
        let total: i64 = weights.iter().sum();
        if total > 0 {
            return weights.into_iter().map(|w| ratio(w, total)).collect();
        }
    }
}

/// `(stop, [(letter, target, p)])` for one state.
type Row = (Rational, Vec<(usize, usize, Rational)>);

/// A valid random PTS with `n` states over `k` letters.
///
/// With some probability the last state is a copy of another state, and a
/// move may be redirected to that copy, so equivalent pairs are common.
pub fn random_pts<R: Rng>(rng: &mut R, n: usize, k: usize) -> Pts {
    let letters: Vec<String> = ["a", "b", "c"][..k].iter().map(|s| s.to_string()).collect();
    let states: Vec<String> = (0..n).map(|i| format!("s{i}")).collect();

    let mut rows: Vec<Row> = Vec::new();
    for _ in 0..n {
        let fanout = rng.gen_range(1..=3usize);
        let mut targets: Vec<(usize, usize)> = Vec::new();
        for _ in 0..fanout {
            let t = (rng.gen_range(0..k), rng.gen_range(0..n));
            if !targets.contains(&t) {
                targets.push(t);
            }
        }
        let probs = distribution(rng, targets.len() + 1);
        let stop = probs[0].clone();
        let moves = targets
            .into_iter()
            .zip(probs.into_iter().skip(1))
            .map(|((a, t), p)| (a, t, p))
            .collect();
        rows.push((stop, moves));
    }

    if n >= 2 && rng.gen_bool(0.5) {
        let original = rng.gen_range(0..n - 1);
        rows[n - 1] = rows[original].clone();
        if rng.gen_bool(0.5) {
            // point one move that targeted `original` at its copy instead
            let mut candidates: Vec<(usize, usize)> = rows
                .iter()
                .enumerate()
                .flat_map(|(s, (_, ms))| {
                    ms.iter()
                        .enumerate()
                        .filter(|(_, m)| m.1 == original)
                        .map(move |(i, _)| (s, i))
                })
                .collect();
            candidates.shuffle(rng);
            if let Some(&(s, i)) = candidates.first() {
                let (a, _, p) = rows[s].1[i].clone();
                let clash = rows[s].1.iter().any(|m| m.0 == a && m.1 == n - 1);
                if !clash {
                    rows[s].1[i] = (a, n - 1, p);
                }
            }
        }
    }

    let mut b = PtsBuilder::new(letters.clone(), states.clone());
    for (s, (stop, moves)) in rows.iter().enumerate() {
        b.stop(&states[s], stop.clone());
        for (a, t, p) in moves {
            b.edge(&states[s], &letters[*a], &states[*t], p.clone());
        }
    }
    b.build().expect("generated system is valid")
}
