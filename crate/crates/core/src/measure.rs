//! Exact trace measures on finite and infinite words.
//!
//! A configuration `u` induces a measure on `A^∞` through the two outputs
//! of the linear representation: the mass of the single finite word `w`
//! is `l_star . M_w u` and the mass of the cone `wA^∞` is `l_one . M_w u`.
//! Sets built from all finite words go through the absorption vector `s`
//! (`s[k]` = probability that a run from state `k` eventually stops), and
//! infinite-word sets are obtained by subtraction.

use std::collections::VecDeque;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::solve;
use crate::linear_rep::{Config, LinearRep};
use crate::rational::{dot, Rational};
use crate::word::{Alphabet, Word};

/// Queryable sets of words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenSet {
    Empty,
    /// The singleton `{w}`.
    FiniteWord(Word),
    /// `wA^∞`: all finite or infinite words with prefix `w`.
    Cone(Word),
    /// `wA^ω`: infinite words with prefix `w`.
    InfCone(Word),
    /// `A^*`.
    AllFinite,
    /// `A^ω`.
    AllInfinite,
    /// `A^∞`.
    All,
}

impl GenSet {
    /// Parses `empty`, `word:W`, `cone:W`, `infcone:W`, `finite`, `infinite` or `all`.
    pub fn parse(query: &str, alphabet: &Alphabet) -> Result<GenSet> {
        let set = match query {
            "empty" => GenSet::Empty,
            "finite" => GenSet::AllFinite,
            "infinite" => GenSet::AllInfinite,
            "all" => GenSet::All,
            _ => {
                let (kind, word) = query
                    .split_once(':')
                    .ok_or_else(|| Error::InvalidQuery(query.to_string()))?;
                let word = alphabet.parse_word(word)?;
                match kind {
                    "word" => GenSet::FiniteWord(word),
                    "cone" => GenSet::Cone(word),
                    "infcone" => GenSet::InfCone(word),
                    _ => return Err(Error::InvalidQuery(query.to_string())),
                }
            }
        };
        Ok(set)
    }

    fn needs_mass(&self) -> bool {
        matches!(
            self,
            GenSet::AllFinite | GenSet::AllInfinite | GenSet::InfCone(_)
        )
    }
}

/// `s[k]`: total probability of the finite words generated from state `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMassVector(Vec<Rational>);

impl FiniteMassVector {
    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    /// `s . u`: finite-word mass of configuration `u`.
    pub fn apply(&self, u: &Config) -> Rational {
        dot(&self.0, u.weights())
    }
}

/// Least nonnegative solution of `s = l_star + (Σ_a M_a)^T s`.
///
/// States that cannot reach a state with positive stop probability get
/// zero; on the remaining states the restricted system is nonsingular and
/// is solved exactly.
pub fn finite_mass_vector(rep: &LinearRep) -> Result<FiniteMassVector> {
    let n = rep.dim();
    // succ[k][j] = Σ_a moves(k, a, j) = Σ_a M_a[j][k]
    let mut succ = vec![vec![Rational::zero(); n]; n];
    for letter in rep.alphabet().ids() {
        let m = rep.matrix(letter);
        for (j, row) in m.rows().enumerate() {
            for (k, p) in row.iter().enumerate() {
                if !p.is_zero() {
                    succ[k][j] += p;
                }
            }
        }
    }

    // backward search from the stopping states
    let mut reaches = vec![false; n];
    let mut queue: VecDeque<usize> = (0..n).filter(|&k| !rep.l_star()[k].is_zero()).collect();
    for &k in &queue {
        reaches[k] = true;
    }
    while let Some(j) = queue.pop_front() {
        for k in 0..n {
            if !reaches[k] && !succ[k][j].is_zero() {
                reaches[k] = true;
                queue.push_back(k);
            }
        }
    }

    let live: Vec<usize> = (0..n).filter(|&k| reaches[k]).collect();
    let system = live
        .iter()
        .map(|&k| {
            live.iter()
                .map(|&j| {
                    let id = if j == k {
                        Rational::from_integer(1.into())
                    } else {
                        Rational::zero()
                    };
                    id - &succ[k][j]
                })
                .collect()
        })
        .collect();
    let rhs = live.iter().map(|&k| rep.l_star()[k].clone()).collect();
    let solved = solve(system, rhs).ok_or(Error::SingularRestrictedSystem)?;

    let mut s = vec![Rational::zero(); n];
    for (&k, v) in live.iter().zip(solved) {
        s[k] = v;
    }
    Ok(FiniteMassVector(s))
}

/// Measure evaluator with the absorption vector computed once.
#[derive(Debug, Clone)]
pub struct TraceMeasure<'a> {
    rep: &'a LinearRep,
    mass: FiniteMassVector,
}

impl<'a> TraceMeasure<'a> {
    pub fn new(rep: &'a LinearRep) -> Result<Self> {
        Ok(TraceMeasure {
            rep,
            mass: finite_mass_vector(rep)?,
        })
    }

    pub fn mass(&self) -> &FiniteMassVector {
        &self.mass
    }

    pub fn measure(&self, u: &Config, set: &GenSet) -> Rational {
        evaluate(self.rep, Some(&self.mass), u, set)
    }
}

/// `⟦u⟧(set)`. The formulas are linear in `u`, so any configuration is
/// accepted; they are probabilities when `u` is a subdistribution.
pub fn measure(rep: &LinearRep, u: &Config, set: &GenSet) -> Result<Rational> {
    let mass = if set.needs_mass() {
        Some(finite_mass_vector(rep)?)
    } else {
        None
    };
    Ok(evaluate(rep, mass.as_ref(), u, set))
}

fn evaluate(
    rep: &LinearRep,
    mass: Option<&FiniteMassVector>,
    u: &Config,
    set: &GenSet,
) -> Rational {
    let mass = || mass.expect("absorption vector required");
    match set {
        GenSet::Empty => Rational::zero(),
        GenSet::FiniteWord(w) => rep.out_term(&rep.word_transform(u, w)),
        GenSet::Cone(w) => rep.out_total(&rep.word_transform(u, w)),
        GenSet::AllFinite => mass().apply(u),
        GenSet::All => rep.out_total(u),
        GenSet::AllInfinite => rep.out_total(u) - mass().apply(u),
        GenSet::InfCone(w) => {
            let v = rep.word_transform(u, w);
            rep.out_total(&v) - mass().apply(&v)
        }
    }
}
