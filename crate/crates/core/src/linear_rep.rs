//! Determinized linear representation of a PTS.
//!
//! Configurations are column vectors of weights over the states, in
//! declared state order. Each letter acts by a matrix whose columns are
//! source states:
//!
//! ```text
//! mats[a][j][k] = moves(state k, a, state j)
//! ```
//!
//! so `step(u, a) = M_a u`. Note this is the transpose of the usual
//! row-stochastic Markov-chain convention. Two linear outputs read a
//! configuration: `l_one` (total mass, all ones) and `l_star` (stop mass).

use std::ops::{Add, Index, Sub};

use num_traits::Zero;
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::error::{IdentKind, Result};
use crate::linalg::Matrix;
use crate::pts::Pts;
use crate::rational::{dot, format_rational, Rational};
use crate::symbols::SymbolTable;
use crate::word::{Alphabet, LetterId, StateId, Word};

/// A weighted configuration over states. Entries may be negative or exceed one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Config(Vec<Rational>);

impl Config {
    pub fn new(weights: Vec<Rational>) -> Self {
        Config(weights)
    }

    pub fn zeros(dim: usize) -> Self {
        Config(vec![Rational::zero(); dim])
    }

    pub fn unit(dim: usize, index: usize) -> Self {
        let mut c = Config::zeros(dim);
        c.0[index] = Rational::from_integer(1.into());
        c
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weights(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_weights(self) -> Vec<Rational> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, factor: &Rational) -> Config {
        Config(self.0.iter().map(|w| w * factor).collect())
    }
}

impl Index<usize> for Config {
    type Output = Rational;

    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl Add for &Config {
    type Output = Config;

    fn add(self, rhs: &Config) -> Config {
        assert_eq!(self.len(), rhs.len(), "dimension mismatch");
        Config(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Config {
    type Output = Config;

    fn sub(self, rhs: &Config) -> Config {
        assert_eq!(self.len(), rhs.len(), "dimension mismatch");
        Config(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearRep {
    alphabet: Alphabet,
    states: SymbolTable,
    l_one: Vec<Rational>,
    l_star: Vec<Rational>,
    mats: Vec<Matrix>,
}

/// Builds the determinized representation of `pts`.
pub fn build_rep(pts: &Pts) -> LinearRep {
    let n = pts.num_states();
    let mut mats = vec![Matrix::zeros(n); pts.alphabet().len()];
    for (from, letter, to, p) in pts.moves() {
        *mats[letter.0].get_mut(to.0, from.0) += p;
    }
    LinearRep {
        alphabet: pts.alphabet().clone(),
        states: SymbolTable::new(IdentKind::State, pts.states().to_vec())
            .expect("state names of a Pts are unique"),
        l_one: vec![Rational::from_integer(1.into()); n],
        l_star: pts.state_ids().map(|s| pts.term(s).clone()).collect(),
        mats,
    }
}

impl LinearRep {
    pub fn dim(&self) -> usize {
        self.l_one.len()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn states(&self) -> &[String] {
        self.states.names()
    }

    pub fn lookup_state(&self, name: &str) -> Result<StateId> {
        self.states.lookup(name).map(StateId)
    }

    pub fn l_one(&self) -> &[Rational] {
        &self.l_one
    }

    pub fn l_star(&self) -> &[Rational] {
        &self.l_star
    }

    pub fn matrix(&self, letter: LetterId) -> &Matrix {
        &self.mats[letter.0]
    }

    /// Unit configuration concentrated on `state`.
    pub fn dirac(&self, state: &str) -> Result<Config> {
        self.lookup_state(state).map(|s| self.dirac_id(s))
    }

    pub fn dirac_id(&self, state: StateId) -> Config {
        Config::unit(self.dim(), state.0)
    }

    /// `M_a u`.
    pub fn step(&self, u: &Config, letter: &str) -> Result<Config> {
        Ok(self.step_id(u, self.alphabet.lookup(letter)?))
    }

    pub fn step_id(&self, u: &Config, letter: LetterId) -> Config {
        Config(self.mats[letter.0].mul_vec(u.weights()))
    }

    /// Applies the letters of `word` left to right: `a1 .. ak` gives `M_ak (.. (M_a1 u))`.
    pub fn word_transform(&self, u: &Config, word: &Word) -> Config {
        word.letters()
            .iter()
            .fold(u.clone(), |acc, &a| self.step_id(&acc, a))
    }

    /// Same as [`word_transform`](Self::word_transform) for a word given as text.
    pub fn word_transform_str(&self, u: &Config, word: &str) -> Result<Config> {
        Ok(self.word_transform(u, &self.alphabet.parse_word(word)?))
    }

    /// Total mass `l_one . u`.
    pub fn out_total(&self, u: &Config) -> Rational {
        dot(&self.l_one, u.weights())
    }

    /// Stop mass `l_star . u`.
    pub fn out_term(&self, u: &Config) -> Rational {
        dot(&self.l_star, u.weights())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("rep serialization cannot fail")
    }
}

struct Strings<'a>(&'a [Rational]);

impl Serialize for Strings<'_> {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_seq(self.0.iter().map(format_rational))
    }
}

struct Mats<'a>(&'a LinearRep);

impl Serialize for Mats<'_> {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let rep = self.0;
        let mut map = ser.serialize_map(Some(rep.mats.len()))?;
        for (letter, m) in rep.alphabet.letters().iter().zip(&rep.mats) {
            let rows: Vec<Strings> = m.rows().map(Strings).collect();
            map.serialize_entry(letter, &rows)?;
        }
        map.end()
    }
}

impl Serialize for LinearRep {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = ser.serialize_struct("LinearRep", 5)?;
        s.serialize_field("states", self.states())?;
        s.serialize_field("alphabet", self.alphabet.letters())?;
        s.serialize_field("l_one", &Strings(&self.l_one))?;
        s.serialize_field("l_star", &Strings(&self.l_star))?;
        s.serialize_field("mats", &Mats(self))?;
        s.end()
    }
}
