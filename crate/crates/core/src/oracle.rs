//! Brute-force reference implementations for cross-checking.
//!
//! Nothing here calls into the matrix-based evaluation: `brute_measure`
//! walks the moves of the [`Pts`] directly, and `word_oracle_equiv`
//! does its own matrix-vector products over every word up to a depth.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::Result;
use crate::linear_rep::{Config, LinearRep};
use crate::pts::Pts;
use crate::rational::Rational;
use crate::word::{StateId, Word};

/// A finite-word query answerable by path enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PathQuery {
    Word(Word),
    Cone(Word),
}

/// Probability mass per state after reading a word prefix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathEnumeration {
    frontier: BTreeMap<StateId, Rational>,
}

impl PathEnumeration {
    pub fn start(state: StateId) -> Self {
        PathEnumeration {
            frontier: BTreeMap::from([(state, Rational::one())]),
        }
    }

    pub fn frontier(&self) -> &BTreeMap<StateId, Rational> {
        &self.frontier
    }

    /// Follows every move labelled with the next letter of `word`.
    pub fn advance(&self, pts: &Pts, letter: crate::word::LetterId) -> Self {
        let mut next: BTreeMap<StateId, Rational> = BTreeMap::new();
        for (&state, mass) in &self.frontier {
            for (to, p) in pts.moves_on(state, letter) {
                *next.entry(to).or_insert_with(Rational::zero) += mass * p;
            }
        }
        next.retain(|_, m| !m.is_zero());
        PathEnumeration { frontier: next }
    }

    pub fn total(&self) -> Rational {
        self.frontier
            .values()
            .fold(Rational::zero(), |acc, m| acc + m)
    }

    pub fn stopping(&self, pts: &Pts) -> Rational {
        self.frontier
            .iter()
            .fold(Rational::zero(), |acc, (&s, m)| acc + m * pts.term(s))
    }
}

/// Measure of a single finite word or a cone from `state`, by path enumeration.
pub fn brute_measure(pts: &Pts, state: &str, query: &PathQuery) -> Result<Rational> {
    let start = PathEnumeration::start(pts.lookup_state(state)?);
    let (word, cone) = match query {
        PathQuery::Word(w) => (w, false),
        PathQuery::Cone(w) => (w, true),
    };
    let end = word
        .letters()
        .iter()
        .fold(start, |paths, &a| paths.advance(pts, a));
    Ok(if cone { end.total() } else { end.stopping(pts) })
}

/// True iff both outputs agree on `M_w u` and `M_w v` for every word with
/// `|w| <= depth`. Decisive once `depth >= rep.dim()`; below that a `false`
/// is still a sound refutation.
pub fn word_oracle_equiv(rep: &LinearRep, u: &Config, v: &Config, depth: usize) -> bool {
    let apply = |letter, w: &[Rational]| -> Vec<Rational> {
        let m = rep.matrix(letter);
        (0..w.len())
            .map(|j| {
                w.iter()
                    .enumerate()
                    .fold(Rational::zero(), |acc, (k, wk)| acc + m.get(j, k) * wk)
            })
            .collect()
    };
    let form = |row: &[Rational], w: &[Rational]| -> Rational {
        row.iter()
            .zip(w)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    };
    let agree = |a: &[Rational], b: &[Rational]| {
        form(rep.l_one(), a) == form(rep.l_one(), b)
            && form(rep.l_star(), a) == form(rep.l_star(), b)
    };

    let mut level = vec![(u.weights().to_vec(), v.weights().to_vec())];
    for len in 0..=depth {
        if level.iter().any(|(a, b)| !agree(a, b)) {
            return false;
        }
        if len == depth {
            break;
        }
        level = level
            .iter()
            .flat_map(|(a, b)| rep.alphabet().ids().map(move |l| (l, a, b)))
            .map(|(l, a, b)| (apply(l, a), apply(l, b)))
            .collect();
    }
    true
}
