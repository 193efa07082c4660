use num_traits::{One, Zero};

use crate::linear_rep::Config;
use crate::rational::Rational;

/// Reduced row-echelon basis of the span of `u - v` over recorded pairs.
///
/// A pair `(u, v)` lies in the congruence closure of the recorded relation
/// iff `u - v` lies in this span.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceBasis {
    dim: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl CongruenceBasis {
    pub fn new(dim: usize) -> Self {
        CongruenceBasis {
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residue of `v` after eliminating every pivot column.
    pub fn reduce(&self, mut v: Vec<Rational>) -> Vec<Rational> {
        assert_eq!(v.len(), self.dim, "dimension mismatch");
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &factor * r;
                }
            }
        }
        v
    }

    pub fn contains(&self, u: &Config, v: &Config) -> bool {
        self.reduce((u - v).into_weights())
            .iter()
            .all(Zero::is_zero)
    }

    /// Adds `u - v` to the span. Returns `false` (and changes nothing) when it
    /// was already there.
    pub fn insert(&mut self, u: &Config, v: &Config) -> bool {
        let mut r = self.reduce((u - v).into_weights());
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].recip();
        for x in r.iter_mut() {
            *x *= &inv;
        }
        debug_assert!(r[p].is_one());
        for row in &mut self.rows {
            if row[p].is_zero() {
                continue;
            }
            let factor = row[p].clone();
            for (x, n) in row.iter_mut().zip(&r) {
                if !n.is_zero() {
                    *x -= &factor * n;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(at, r);
        self.pivots.insert(at, p);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn config(ws: &[(i64, i64)]) -> Config {
        Config::new(ws.iter().map(|&(n, d)| ratio(n, d)).collect())
    }

    fn assert_rref(b: &CongruenceBasis) {
        assert!(b.pivots().windows(2).all(|w| w[0] < w[1]));
        for (i, &p) in b.pivots().iter().enumerate() {
            for (j, row) in b.rows().iter().enumerate() {
                if i == j {
                    assert!(row[p].is_one());
                    assert!(row[..p].iter().all(Zero::is_zero));
                } else {
                    assert!(row[p].is_zero());
                }
            }
        }
    }

    #[test]
    fn first_insert() {
        let mut b = CongruenceBasis::new(4);
        assert!(b.insert(
            &config(&[(1, 1), (0, 1), (0, 1), (0, 1)]),
            &config(&[(0, 1), (0, 1), (1, 1), (0, 1)])
        ));
        assert_eq!(b.pivots(), &[0]);
        assert_eq!(
            b.rows()[0],
            vec![ratio(1, 1), ratio(0, 1), ratio(-1, 1), ratio(0, 1)]
        );
    }

    #[test]
    fn reflexive_pairs() {
        let mut b = CongruenceBasis::new(3);
        let u = config(&[(1, 2), (1, 3), (0, 1)]);
        assert!(b.contains(&u, &u));
        assert!(!b.insert(&u, &u));
        assert_eq!(b.rank(), 0);
    }

    #[test]
    fn worked_example_span() {
        let mut b = CongruenceBasis::new(4);
        b.insert(
            &config(&[(1, 1), (0, 1), (0, 1), (0, 1)]),
            &config(&[(0, 1), (0, 1), (1, 1), (0, 1)]),
        );
        b.insert(
            &config(&[(0, 1), (1, 6), (0, 1), (1, 2)]),
            &config(&[(0, 1), (0, 1), (1, 3), (1, 3)]),
        );
        assert_eq!(b.rank(), 2);
        assert_rref(&b);
        assert!(b.contains(
            &config(&[(0, 1), (1, 18), (0, 1), (1, 2)]),
            &config(&[(0, 1), (0, 1), (1, 9), (4, 9)])
        ));
    }

    #[test]
    fn rejects_non_multiple() {
        let mut b = CongruenceBasis::new(2);
        b.insert(&config(&[(1, 1), (0, 1)]), &config(&[(0, 1), (1, 1)]));
        // det [[1, 1/2], [-1, -3/4]] = -3/4 + 1/2 = -1/4 != 0
        assert!(!b.contains(&config(&[(1, 2), (0, 1)]), &config(&[(0, 1), (3, 4)])));
        assert!(b.contains(&config(&[(1, 2), (0, 1)]), &config(&[(0, 1), (1, 2)])));
    }

    #[test]
    fn back_substitutes_existing_rows() {
        let mut b = CongruenceBasis::new(3);
        b.insert(&config(&[(1, 1), (2, 1), (3, 1)]), &Config::zeros(3));
        b.insert(&config(&[(0, 1), (1, 1), (1, 1)]), &Config::zeros(3));
        b.insert(&config(&[(0, 1), (0, 1), (5, 1)]), &Config::zeros(3));
        assert_rref(&b);
        assert_eq!(b.rank(), 3);
        assert!(b.contains(&config(&[(7, 3), (-1, 9), (4, 1)]), &Config::zeros(3)));
        assert!(!b.insert(&config(&[(1, 1), (1, 1), (1, 1)]), &Config::zeros(3)));
    }
}
