//! q-integers, q-factorials and Gaussian binomials.
//!
//! Gaussian binomials are always produced by the q-Pascal recursion
//! `C(n,k) = C(n-1,k-1) + q^k C(n-1,k)`. The factorial quotient degenerates
//! to `0/0` at roots of unity.

use alloc::vec;
use alloc::vec::Vec;

use super::ScalarValue;
use crate::error::{Error, Result};

fn unit_like(q: &ScalarValue) -> ScalarValue {
    // `1` in the same field as `q`, so results never change representation.
    q.pow(0).expect("q^0")
}

fn powers(q: &ScalarValue, upto: usize) -> Vec<ScalarValue> {
    let mut out = Vec::with_capacity(upto + 1);
    out.push(unit_like(q));
    for k in 1..=upto {
        let next = &out[k - 1] * q;
        out.push(next);
    }
    out
}

/// `l_q = 1 + q + … + q^{l-1}`; zero for `l = 0`.
pub fn q_int(l: usize, q: &ScalarValue) -> ScalarValue {
    let zero = &unit_like(q) - &unit_like(q);
    powers(q, l)
        .into_iter()
        .take(l)
        .fold(zero, |acc, p| acc + p)
}

/// `l!_q = 1_q 2_q ⋯ l_q`.
pub fn q_factorial(l: usize, q: &ScalarValue) -> ScalarValue {
    (1..=l).fold(unit_like(q), |acc, k| acc * q_int(k, q))
}

/// Row `top` of the q-Pascal triangle: `C(top, 0..=top)_q`.
pub fn q_binomial_row(top: usize, q: &ScalarValue) -> Vec<ScalarValue> {
    let qp = powers(q, top);
    let mut row = vec![unit_like(q)];
    for n in 1..=top {
        let mut next = Vec::with_capacity(n + 1);
        next.push(unit_like(q));
        for k in 1..n {
            next.push(&row[k - 1] + &(&qp[k] * &row[k]));
        }
        next.push(unit_like(q));
        row = next;
    }
    row
}

/// The Gaussian binomial `C(top, bottom)_q`.
pub fn q_binomial(top: usize, bottom: usize, q: &ScalarValue) -> Result<ScalarValue> {
    if bottom > top {
        return Err(Error::BinomialDomain { top, bottom });
    }
    Ok(q_binomial_row(top, q).swap_remove(bottom))
}

/// Whether `C(l+m, l)_q = 0` for `q` a root of unity of order `d ≥ 2`:
/// true iff `⌊(l+m)/d⌋ - ⌊m/d⌋ - ⌊l/d⌋ > 0`.
pub fn q_binomial_vanishes(l: usize, m: usize, d: usize) -> bool {
    assert!(d >= 2, "vanishing criterion needs d >= 2");
    (l + m) / d > m / d + l / d
}

/// Precomputed q-Pascal triangle for a fixed `q`, rows `0..=max_top`.
/// Immutable once built.
#[derive(Clone, Debug)]
pub struct QBinomialTable {
    rows: Vec<Vec<ScalarValue>>,
}

impl QBinomialTable {
    pub fn new(q: &ScalarValue, max_top: usize) -> Self {
        let qp = powers(q, max_top);
        let one = unit_like(q);
        let mut rows: Vec<Vec<ScalarValue>> = vec![vec![one.clone()]];
        for n in 1..=max_top {
            let prev = &rows[n - 1];
            let mut next = Vec::with_capacity(n + 1);
            next.push(one.clone());
            for k in 1..n {
                next.push(&prev[k - 1] + &(&qp[k] * &prev[k]));
            }
            next.push(one.clone());
            rows.push(next);
        }
        QBinomialTable { rows }
    }

    pub fn max_top(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, top: usize, bottom: usize) -> Option<&ScalarValue> {
        self.rows.get(top)?.get(bottom)
    }
}
