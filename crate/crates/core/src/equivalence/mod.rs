//! Trace-equivalence checking on the determinized system.
//!
//! All four algorithms share one loop over a FIFO work list of
//! configuration pairs, each tagged with the word that produced it:
//!
//! 1. extract `(u, v)`;
//! 2. skip it if it is already related by the closure of the relation
//!    built so far;
//! 3. compare the outputs (total mass, then stop mass) and fail with the
//!    pair's word as witness on the first difference;
//! 4. push `(M_a u, M_a v)` for every letter, in alphabet order;
//! 5. record `(u, v)`.
//!
//! They differ only in step 2 and in which outputs step 3 compares:
//!
//! | algorithm    | closure in step 2                 | outputs        |
//! |--------------|-----------------------------------|----------------|
//! | `naive`      | none (exact pair lookup)          | total + stop   |
//! | `hk`         | equivalence (union-find)          | total + stop   |
//! | `hkc-finite` | congruence (linear span)          | stop only      |
//! | `hkc-inf`    | congruence (linear span)          | total + stop   |
//!
//! The congruence variants always terminate: every recorded pair raises the
//! rank of the difference span, which is bounded by the number of states.
//! The others may loop forever and run under a step budget.

mod basis;
mod union_find;

use std::collections::{HashSet, VecDeque};

use serde::Serialize;

pub use basis::CongruenceBasis;
use union_find::ConfigUnionFind;

use crate::error::{Error, Result};
use crate::linear_rep::{Config, LinearRep};
use crate::rational::Rational;
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    Naive { max_steps: usize },
    Hk { max_steps: usize },
    HkcFinite,
    HkcInf,
}

impl Algorithm {
    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::Naive { .. } => "naive",
            Algorithm::Hk { .. } => "hk",
            Algorithm::HkcFinite => "hkc-finite",
            Algorithm::HkcInf => "hkc-inf",
        }
    }

    fn budget(&self) -> Option<usize> {
        match *self {
            Algorithm::Naive { max_steps } | Algorithm::Hk { max_steps } => Some(max_steps),
            Algorithm::HkcFinite | Algorithm::HkcInf => None,
        }
    }

    fn checks_total_mass(&self) -> bool {
        !matches!(self, Algorithm::HkcFinite)
    }
}

/// Which output functional told two configurations apart.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputKind {
    TotalMass,
    Termination,
}

impl OutputKind {
    pub fn eval(&self, rep: &LinearRep, u: &Config) -> Rational {
        match self {
            OutputKind::TotalMass => rep.out_total(u),
            OutputKind::Termination => rep.out_term(u),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EquivResult {
    Equivalent {
        iterations: usize,
        relation_size: usize,
    },
    /// `output` applied to the witness-successors of both states gives `lhs != rhs`.
    NotEquivalent {
        witness: Word,
        output: OutputKind,
        lhs: Rational,
        rhs: Rational,
    },
    Inconclusive {
        steps_exhausted: usize,
    },
}

impl EquivResult {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, EquivResult::Equivalent { .. })
    }
}

/// What happened to one extracted pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StepAction {
    /// Already in the closure of the relation.
    Skipped,
    Mismatch(OutputKind),
    /// Outputs agreed; successors were queued and the pair recorded.
    Expanded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub word: Word,
    pub lhs: Config,
    pub rhs: Config,
    pub action: StepAction,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub result: EquivResult,
    /// Pairs extracted from the work list.
    pub iterations: usize,
    /// Pairs recorded in the relation.
    pub relation_size: usize,
    /// Every extraction in order; empty unless tracing was requested.
    pub trace: Vec<TraceStep>,
}

enum Relation {
    Pairs(HashSet<(Config, Config)>),
    Classes(ConfigUnionFind),
    Span(CongruenceBasis),
}

impl Relation {
    fn for_algorithm(algorithm: Algorithm, dim: usize) -> Self {
        match algorithm {
            Algorithm::Naive { .. } => Relation::Pairs(HashSet::new()),
            Algorithm::Hk { .. } => Relation::Classes(ConfigUnionFind::default()),
            Algorithm::HkcFinite | Algorithm::HkcInf => Relation::Span(CongruenceBasis::new(dim)),
        }
    }

    fn relates(&mut self, u: &Config, v: &Config) -> bool {
        match self {
            Relation::Pairs(set) => set.contains(&(u.clone(), v.clone())),
            Relation::Classes(uf) => uf.equivalent(u, v),
            Relation::Span(basis) => basis.contains(u, v),
        }
    }

    fn record(&mut self, u: &Config, v: &Config) {
        match self {
            Relation::Pairs(set) => {
                set.insert((u.clone(), v.clone()));
            }
            Relation::Classes(uf) => uf.union(u, v),
            Relation::Span(basis) => {
                basis.insert(u, v);
            }
        }
    }
}

struct Pending {
    word: Word,
    lhs: Config,
    rhs: Config,
}

/// Configurable equivalence run over a fixed representation.
#[derive(Debug, Clone)]
pub struct Checker<'a> {
    rep: &'a LinearRep,
    algorithm: Algorithm,
    record_trace: bool,
    check_invariant: bool,
}

impl<'a> Checker<'a> {
    pub fn new(rep: &'a LinearRep, algorithm: Algorithm) -> Self {
        Checker {
            rep,
            algorithm,
            record_trace: false,
            check_invariant: false,
        }
    }

    /// Record every extracted pair in [`Report::trace`].
    pub fn trace(mut self, on: bool) -> Self {
        self.record_trace = on;
        self
    }

    /// Assert at every loop head that each recorded pair's successors are
    /// either related by the closure or still pending. Panics on breach.
    pub fn check_invariant(mut self, on: bool) -> Self {
        self.check_invariant = on;
        self
    }

    pub fn run(&self, x: &str, y: &str) -> Result<Report> {
        let u = self.rep.dirac(x)?;
        let v = self.rep.dirac(y)?;
        self.run_configs(u, v)
    }

    pub fn run_configs(&self, u: Config, v: Config) -> Result<Report> {
        let rep = self.rep;
        assert!(
            u.len() == rep.dim() && v.len() == rep.dim(),
            "dimension mismatch"
        );
        let budget = self.algorithm.budget();
        if budget == Some(0) {
            return Err(Error::InvalidBudget);
        }

        let mut relation = Relation::for_algorithm(self.algorithm, rep.dim());
        let mut recorded: Vec<(Config, Config)> = Vec::new();
        let mut todo = VecDeque::from([Pending {
            word: Word::empty(),
            lhs: u,
            rhs: v,
        }]);
        let mut trace = Vec::new();
        let mut iterations = 0;

        let outputs: &[OutputKind] = if self.algorithm.checks_total_mass() {
            &[OutputKind::TotalMass, OutputKind::Termination]
        } else {
            &[OutputKind::Termination]
        };

        let report = |result, iterations, relation_size, trace| Report {
            result,
            iterations,
            relation_size,
            trace,
        };

        while let Some(pending) = todo.pop_front() {
            if budget == Some(iterations) {
                let result = EquivResult::Inconclusive {
                    steps_exhausted: iterations,
                };
                return Ok(report(result, iterations, recorded.len(), trace));
            }
            if self.check_invariant {
                self.assert_invariant(&mut relation, &recorded, &todo, &pending);
            }
            iterations += 1;
            let Pending { word, lhs, rhs } = pending;

            if relation.relates(&lhs, &rhs) {
                if self.record_trace {
                    trace.push(TraceStep {
                        word,
                        lhs,
                        rhs,
                        action: StepAction::Skipped,
                    });
                }
                continue;
            }

            let mismatch = outputs.iter().find_map(|&kind| {
                let (l, r) = (kind.eval(rep, &lhs), kind.eval(rep, &rhs));
                (l != r).then_some((kind, l, r))
            });
            if let Some((output, l, r)) = mismatch {
                if self.record_trace {
                    trace.push(TraceStep {
                        word: word.clone(),
                        lhs,
                        rhs,
                        action: StepAction::Mismatch(output),
                    });
                }
                let result = EquivResult::NotEquivalent {
                    witness: word,
                    output,
                    lhs: l,
                    rhs: r,
                };
                return Ok(report(result, iterations, recorded.len(), trace));
            }

            for letter in rep.alphabet().ids() {
                todo.push_back(Pending {
                    word: word.extended(letter),
                    lhs: rep.step_id(&lhs, letter),
                    rhs: rep.step_id(&rhs, letter),
                });
            }
            relation.record(&lhs, &rhs);
            if self.record_trace {
                trace.push(TraceStep {
                    word,
                    lhs: lhs.clone(),
                    rhs: rhs.clone(),
                    action: StepAction::Expanded,
                });
            }
            recorded.push((lhs, rhs));
        }

        let result = EquivResult::Equivalent {
            iterations,
            relation_size: recorded.len(),
        };
        Ok(report(result, iterations, recorded.len(), trace))
    }

    fn assert_invariant(
        &self,
        relation: &mut Relation,
        recorded: &[(Config, Config)],
        todo: &VecDeque<Pending>,
        head: &Pending,
    ) {
        let pending = |l: &Config, r: &Config| {
            (head.lhs == *l && head.rhs == *r) || todo.iter().any(|p| p.lhs == *l && p.rhs == *r)
        };
        for (u, v) in recorded {
            for letter in self.rep.alphabet().ids() {
                let su = self.rep.step_id(u, letter);
                let sv = self.rep.step_id(v, letter);
                assert!(
                    relation.relates(&su, &sv) || pending(&su, &sv),
                    "loop invariant broken: successor pair of a recorded pair is neither related nor pending"
                );
            }
        }
    }
}

/// Decides whether `x` and `y` induce the same measure on finite and infinite words.
pub fn hkc_inf(rep: &LinearRep, x: &str, y: &str) -> Result<EquivResult> {
    Ok(Checker::new(rep, Algorithm::HkcInf).run(x, y)?.result)
}

/// Decides equality of the finite-word parts only.
pub fn hkc_finite(rep: &LinearRep, x: &str, y: &str) -> Result<EquivResult> {
    Ok(Checker::new(rep, Algorithm::HkcFinite).run(x, y)?.result)
}

pub fn naive(rep: &LinearRep, x: &str, y: &str, max_steps: usize) -> Result<EquivResult> {
    Ok(Checker::new(rep, Algorithm::Naive { max_steps })
        .run(x, y)?
        .result)
}

pub fn hk(rep: &LinearRep, x: &str, y: &str, max_steps: usize) -> Result<EquivResult> {
    Ok(Checker::new(rep, Algorithm::Hk { max_steps })
        .run(x, y)?
        .result)
}
