//! Generative probabilistic transition systems.
//!
//! Each state carries one probability distribution over "stop" plus
//! letter-labelled moves to successor states. A [`Pts`] is only
//! structurally checked on construction; [`Pts::validate`] reports the
//! probabilistic invariants, and [`PtsBuilder::build`] enforces them.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, IdentKind, Result};
use crate::rational::{is_probability, Rational};
use crate::symbols::SymbolTable;
use crate::word::{Alphabet, LetterId, StateId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pts {
    alphabet: Alphabet,
    states: SymbolTable,
    term: Vec<Rational>,
    moves: BTreeMap<(StateId, LetterId, StateId), Rational>,
}

impl Pts {
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn states(&self) -> &[String] {
        self.states.names()
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn state_ids(&self) -> impl Iterator<Item = StateId> {
        (0..self.num_states()).map(StateId)
    }

    pub fn state_name(&self, id: StateId) -> &str {
        self.states.name(id.0)
    }

    pub fn lookup_state(&self, name: &str) -> Result<StateId> {
        self.states.lookup(name).map(StateId)
    }

    /// Probability of stopping in `state`.
    pub fn term(&self, state: StateId) -> &Rational {
        &self.term[state.0]
    }

    /// Probability of reading `letter` and moving from `from` to `to`; zero when absent.
    pub fn move_prob(&self, from: StateId, letter: LetterId, to: StateId) -> Rational {
        self.moves
            .get(&(from, letter, to))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// All stored moves as `(from, letter, to, p)`, ordered by source, letter, target.
    pub fn moves(&self) -> impl Iterator<Item = (StateId, LetterId, StateId, &Rational)> {
        self.moves.iter().map(|(&(s, a, t), p)| (s, a, t, p))
    }

    pub fn moves_from(
        &self,
        from: StateId,
    ) -> impl Iterator<Item = (LetterId, StateId, &Rational)> {
        let lo = (from, LetterId(0), StateId(0));
        let hi = (StateId(from.0 + 1), LetterId(0), StateId(0));
        self.moves.range(lo..hi).map(|(&(_, a, t), p)| (a, t, p))
    }

    pub fn moves_on(
        &self,
        from: StateId,
        letter: LetterId,
    ) -> impl Iterator<Item = (StateId, &Rational)> {
        let lo = (from, letter, StateId(0));
        let hi = (from, LetterId(letter.0 + 1), StateId(0));
        self.moves.range(lo..hi).map(|(&(_, _, t), p)| (t, p))
    }

    /// Lists every violated invariant; empty iff the system is a valid PTS.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for state in self.state_ids() {
            let name = self.state_name(state);
            let term = self.term(state);
            if !is_probability(term) {
                out.push(Violation {
                    state: name.to_string(),
                    kind: ViolationKind::ProbabilityOutOfRange {
                        letter: None,
                        target: None,
                        value: term.clone(),
                    },
                });
            }
            let mut sum = term.clone();
            for (letter, to, p) in self.moves_from(state) {
                if !is_probability(p) {
                    out.push(Violation {
                        state: name.to_string(),
                        kind: ViolationKind::ProbabilityOutOfRange {
                            letter: Some(self.alphabet.name(letter).to_string()),
                            target: Some(self.state_name(to).to_string()),
                            value: p.clone(),
                        },
                    });
                }
                sum += p;
            }
            if !sum.is_one() {
                out.push(Violation {
                    state: name.to_string(),
                    kind: ViolationKind::DistributionSumViolation { sum },
                });
            }
        }
        out
    }

    /// Copy of this system with one stored probability replaced.
    pub fn with_term(&self, state: StateId, p: Rational) -> Pts {
        let mut copy = self.clone();
        copy.term[state.0] = p;
        copy
    }

    pub fn with_move(&self, from: StateId, letter: LetterId, to: StateId, p: Rational) -> Pts {
        let mut copy = self.clone();
        copy.moves.insert((from, letter, to), p);
        copy
    }
}

/// One violated invariant, attributed to a state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub state: String,
    pub kind: ViolationKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ViolationKind {
    /// A stop (`letter`/`target` both `None`) or move probability outside `[0, 1]`.
    ProbabilityOutOfRange {
        letter: Option<String>,
        target: Option<String>,
        value: Rational,
    },
    DistributionSumViolation {
        sum: Rational,
    },
}

impl From<Violation> for Error {
    fn from(v: Violation) -> Self {
        match v.kind {
            ViolationKind::ProbabilityOutOfRange {
                letter,
                target,
                value,
            } => Error::ProbabilityOutOfRange {
                state: v.state,
                letter,
                target,
                value: Box::new(value),
            },
            ViolationKind::DistributionSumViolation { sum } => Error::DistributionSumViolation {
                state: v.state,
                sum,
            },
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Error::from(self.clone()).fmt(f)
    }
}

/// Collects a system by name; name resolution errors surface in `build`.
#[derive(Debug, Clone, Default)]
pub struct PtsBuilder {
    alphabet: Vec<String>,
    states: Vec<String>,
    stops: Vec<(String, Rational)>,
    edges: Vec<(String, String, String, Rational)>,
}

impl PtsBuilder {
    pub fn new<A, S>(alphabet: A, states: S) -> Self
    where
        A: IntoIterator,
        A::Item: Into<String>,
        S: IntoIterator,
        S::Item: Into<String>,
    {
        PtsBuilder {
            alphabet: alphabet.into_iter().map(Into::into).collect(),
            states: states.into_iter().map(Into::into).collect(),
            ..Default::default()
        }
    }

    pub fn stop(&mut self, state: &str, p: Rational) -> &mut Self {
        self.stops.push((state.to_string(), p));
        self
    }

    pub fn edge(&mut self, from: &str, letter: &str, to: &str, p: Rational) -> &mut Self {
        self.edges
            .push((from.to_string(), letter.to_string(), to.to_string(), p));
        self
    }

    /// Resolves names and checks uniqueness, without the probability invariants.
    pub fn build_unchecked(&self) -> Result<Pts> {
        if self.states.iter().any(|s| s.is_empty()) {
            return Err(Error::EmptyIdentifier(IdentKind::State));
        }
        let alphabet = Alphabet::new(self.alphabet.clone())?;
        let states = SymbolTable::new(IdentKind::State, self.states.clone())?;
        let mut term = vec![None; states.len()];
        for (state, p) in &self.stops {
            let id = states.lookup(state)?;
            if term[id].replace(p.clone()).is_some() {
                return Err(Error::DuplicateIdentifier {
                    kind: IdentKind::Move,
                    name: format!("{state} stop"),
                });
            }
        }
        let mut moves = BTreeMap::new();
        for (from, letter, to, p) in &self.edges {
            let key = (
                StateId(states.lookup(from)?),
                alphabet.lookup(letter)?,
                StateId(states.lookup(to)?),
            );
            if moves.insert(key, p.clone()).is_some() {
                return Err(Error::DuplicateIdentifier {
                    kind: IdentKind::Move,
                    name: format!("{from} -{letter}-> {to}"),
                });
            }
        }
        Ok(Pts {
            alphabet,
            states,
            term: term
                .into_iter()
                .map(|t| t.unwrap_or_else(Rational::zero))
                .collect(),
            moves,
        })
    }

    /// Builds and validates; the first violation becomes the error.
    pub fn build(&self) -> Result<Pts> {
        let pts = self.build_unchecked()?;
        match pts.validate().into_iter().next() {
            Some(v) => Err(v.into()),
            None => Ok(pts),
        }
    }
}
