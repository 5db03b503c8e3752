//! Stack weights `s_n`, `d_n`, the units `ℓ_n`, convergents of √2 and Pell
//! numbers.
//!
//! `s_n` is the weight of an arc joining two vertices on the same side of a
//! stack of quadrilaterals and crossing `n - 1` rungs; `d_n` the weight of an
//! arc between opposite sides crossing `n - 1` rungs. They satisfy
//! `s_n = √2·s_{n-1} + d_{n-1}` and `d_n = √2·d_{n-1} + s_{n-1}` from
//! `s_0 = 0, d_0 = 1`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::ring::QuadInt;

/// `(s_0, d_0), …, (s_max, d_max)`.
pub fn stack_weights(max: usize) -> Vec<(QuadInt, QuadInt)> {
    let sqrt2 = QuadInt::sqrt2();
    let mut out = Vec::with_capacity(max + 1);
    let mut s = QuadInt::zero();
    let mut d = QuadInt::one();
    out.push((s.clone(), d.clone()));
    for _ in 0..max {
        let next_s = &(&sqrt2 * &s) + &d;
        let next_d = &(&sqrt2 * &d) + &s;
        s = next_s;
        d = next_d;
        out.push((s.clone(), d.clone()));
    }
    out
}

pub fn s(n: usize) -> QuadInt {
    stack_weights(n).pop().expect("non-empty").0
}

pub fn d(n: usize) -> QuadInt {
    stack_weights(n).pop().expect("non-empty").1
}

/// `ℓ_n = (1 + √2)^n`.
pub fn ell(n: i64) -> QuadInt {
    QuadInt::unit_power(n)
}

/// Numerator and denominator of `[1; 2, …, 2]` with `n - 1` twos, with
/// `a_0/b_0 = 1/0` so that the recurrence holds from `n = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvergentPair {
    pub a: BigInt,
    pub b: BigInt,
}

pub fn convergents(max: usize) -> Vec<ConvergentPair> {
    let mut out = vec![ConvergentPair { a: BigInt::one(), b: BigInt::zero() }];
    for n in 1..=max {
        let prev = &out[n - 1];
        let a = &prev.a + BigInt::from(2) * &prev.b;
        let b = &prev.a + &prev.b;
        out.push(ConvergentPair { a, b });
    }
    out
}

pub fn convergent(n: usize) -> ConvergentPair {
    convergents(n).pop().expect("non-empty")
}

/// `Q_0 = 0, Q_1 = 1, Q_k = 2Q_{k-1} + Q_{k-2}`.
pub fn pell_numbers(max: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero()];
    if max >= 1 {
        out.push(BigInt::one());
    }
    for k in 2..=max {
        let next = BigInt::from(2) * &out[k - 1] + &out[k - 2];
        out.push(next);
    }
    out
}

pub fn pell(k: usize) -> BigInt {
    pell_numbers(k).pop().expect("non-empty")
}

/// One row of the sequence table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceRow {
    pub n: usize,
    pub s: QuadInt,
    pub d: QuadInt,
    pub ell: QuadInt,
    pub a: BigInt,
    pub b: BigInt,
    pub pell: BigInt,
}

pub fn table(max: usize) -> Vec<SequenceRow> {
    let sd = stack_weights(max);
    let conv = convergents(max);
    let pells = pell_numbers(max);
    (0..=max)
        .map(|n| SequenceRow {
            n,
            s: sd[n].0.clone(),
            d: sd[n].1.clone(),
            ell: ell(n as i64),
            a: conv[n].a.clone(),
            b: conv[n].b.clone(),
            pell: pells[n].clone(),
        })
        .collect()
}

/// The table as aligned text columns `n s_n d_n ℓ_n a_n b_n Q_n`.
pub fn render_table(rows: &[SequenceRow]) -> String {
    let header = ["n", "s_n", "d_n", "ℓ_n", "a_n", "b_n", "Q_n"].map(String::from);
    let body: Vec<[String; 7]> = rows
        .iter()
        .map(|r| {
            [
                r.n.to_string(),
                r.s.to_string(),
                r.d.to_string(),
                r.ell.to_string(),
                r.a.to_string(),
                r.b.to_string(),
                r.pell.to_string(),
            ]
        })
        .collect();
    let mut widths = [0usize; 7];
    for row in std::iter::once(&header).chain(body.iter()) {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for row in std::iter::once(&header).chain(body.iter()) {
        let line: Vec<String> = row
            .iter()
            .zip(widths)
            .map(|(cell, w)| format!("{}{cell}", " ".repeat(w - cell.chars().count())))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}
