//! Independent ways of computing Adomian polynomials of `u^N`, used to
//! cross-check the convolution kernels and as benchmark baselines.
//!
//! * [`oracle_1d`] / [`oracle_2d`] expand the definition directly: `A_M` is
//!   the `λ^M` coefficient of `(Σ u_k λ^k)^N`, collected by enumerating every
//!   ordered `N`-tuple of indices that sums to `M`.
//! * [`duan_c1`] is the index recurrence for the reduced polynomials `Z`.
//! * [`duan_c3`] is the recurrence with the explicit `1/i` factor for the
//!   reduced polynomials `C`.
//!
//! Both recurrences finish with `A_i = Σ_k N!/(N-k)! · u0^(N-k) · R[i][k]`,
//! the derivative of `u^N` written with falling factorials. Terms with
//! `k > N` vanish.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::deadline::Deadline;
use crate::error::Result;
use crate::monomial::{ComponentVar, Monomial};
use crate::polynomial::{Accumulator, Polynomial};
use crate::rational::Rational;

/// `A_M` of `u^N` by enumerating ordered index tuples.
pub fn oracle_1d(power: u32, m: u32) -> Polynomial {
    fn go(slots: u32, left: u32, tuple: &mut Vec<u32>, counts: &mut BTreeMap<Vec<u32>, u64>) {
        if slots == 0 {
            if left == 0 {
                let mut key = tuple.clone();
                key.sort_unstable();
                *counts.entry(key).or_insert(0) += 1;
            }
            return;
        }
        for k in 0..=left {
            tuple.push(k);
            go(slots - 1, left - k, tuple, counts);
            tuple.pop();
        }
    }
    let mut counts = BTreeMap::new();
    go(power, m, &mut Vec::with_capacity(power as usize), &mut counts);
    Polynomial::from_terms(counts.into_iter().map(|(idx, n)| {
        let mono = Monomial::from_factors(idx.into_iter().map(|i| (ComponentVar::u(i), 1)));
        (mono, Rational::from(n))
    }))
}

/// `A_0 .. A_{n-1}` of `u^N` via [`oracle_1d`].
pub fn oracle_1d_all(power: u32, n: usize) -> Vec<Polynomial> {
    (0..n as u32).map(|m| oracle_1d(power, m)).collect()
}

/// `A_{kl}` of `u^N` by enumerating ordered tuples of index pairs.
pub fn oracle_2d(power: u32, target: (u32, u32)) -> Polynomial {
    fn go(
        slots: u32,
        left: (u32, u32),
        tuple: &mut Vec<(u32, u32)>,
        counts: &mut BTreeMap<Vec<(u32, u32)>, u64>,
    ) {
        if slots == 0 {
            if left == (0, 0) {
                let mut key = tuple.clone();
                key.sort_unstable();
                *counts.entry(key).or_insert(0) += 1;
            }
            return;
        }
        for i in 0..=left.0 {
            for j in 0..=left.1 {
                tuple.push((i, j));
                go(slots - 1, (left.0 - i, left.1 - j), tuple, counts);
                tuple.pop();
            }
        }
    }
    let mut counts = BTreeMap::new();
    go(power, target, &mut Vec::new(), &mut counts);
    Polynomial::from_terms(counts.into_iter().map(|(idx, n)| {
        let mono = Monomial::from_factors(idx.into_iter().map(|(i, j)| (ComponentVar::u2(i, j), 1)));
        (mono, Rational::from(n))
    }))
}

/// Triangular table `R[i][k]`, `1 ≤ k ≤ i ≤ n-1`, of reduced polynomials.
#[derive(Clone, Debug, PartialEq)]
pub struct ReducedPolyTable {
    rows: Vec<Vec<Polynomial>>,
}

impl ReducedPolyTable {
    fn with_rows(count: usize) -> Self {
        ReducedPolyTable { rows: (1..=count).map(|i| vec![Polynomial::zero(); i]).collect() }
    }

    /// Cell `(i, k)` using 1-based indices.
    pub fn get(&self, i: usize, k: usize) -> Option<&Polynomial> {
        if i == 0 || k == 0 || k > i {
            return None;
        }
        self.rows.get(i - 1).map(|r| &r[k - 1])
    }

    fn set(&mut self, i: usize, k: usize, p: Polynomial) {
        self.rows[i - 1][k - 1] = p;
    }

    fn cell(&self, i: usize, k: usize) -> &Polynomial {
        &self.rows[i - 1][k - 1]
    }

    /// Number of rows, `n - 1`.
    pub fn rows(&self) -> usize {
        self.rows.len()
    }
}

/// Reduced polynomials of the index recurrence for `n` Adomian polynomials.
pub fn duan_c1_table(n: usize, deadline: &Deadline) -> Result<ReducedPolyTable> {
    let u1 = Polynomial::var(ComponentVar::u(1));
    let mut z = ReducedPolyTable::with_rows(n.saturating_sub(1));
    for i in 1..n {
        z.set(i, 1, Polynomial::var(ComponentVar::u(i as u32)));
    }
    for i in 2..n {
        for j in 2..=i {
            deadline.check()?;
            let prod = &u1 * z.cell(i - 1, j - 1);
            // each term is divided by its own exponent of u[1]
            let reduced = prod.map_terms(|m, c| {
                let e = m.exponent_of(ComponentVar::u(1));
                (m.clone(), c / &Rational::from(e as u64))
            });
            z.set(i, j, reduced);
        }
        for j in 2..=i / 2 {
            deadline.check()?;
            let shifted = z.cell(i - j, j).map_vars(|v| v.shifted(1));
            let sum = z.cell(i, j) + &shifted;
            z.set(i, j, sum);
        }
    }
    Ok(z)
}

/// Reduced polynomials of the `1/i` recurrence for `n` Adomian polynomials.
pub fn duan_c3_table(n: usize, deadline: &Deadline) -> Result<ReducedPolyTable> {
    let mut c = ReducedPolyTable::with_rows(n.saturating_sub(1));
    for i in 1..n {
        c.set(i, 1, Polynomial::var(ComponentVar::u(i as u32)));
        let inv_i = Rational::new(1, i as i64);
        for k in 2..=i {
            deadline.check()?;
            let mut acc = Accumulator::new();
            for j in 0..=(i - k) {
                let weight = Polynomial::term(
                    Rational::from((j + 1) as u64),
                    Monomial::var(ComponentVar::u(j as u32 + 1)),
                );
                acc.add_product(&weight, c.cell(i - 1 - j, k - 1));
            }
            c.set(i, k, acc.finish().scale(&inv_i));
        }
    }
    Ok(c)
}

/// `A_i = Σ_{k=1..i} N!/(N-k)! · u0^(N-k) · R[i][k]`, with `A_0 = u0^N`.
fn assemble(power: u32, n: usize, table: &ReducedPolyTable) -> Vec<Polynomial> {
    if n == 0 {
        return Vec::new();
    }
    let u0 = ComponentVar::u(0);
    let mut out = Vec::with_capacity(n);
    out.push(Polynomial::term(Rational::ONE, Monomial::power(u0, power)));
    // derivative weights N!/(N-k)! · u0^(N-k); empty once k exceeds N
    let mut weights = Vec::new();
    let mut falling = BigInt::from(1);
    for k in 1..n.min(power as usize + 1) {
        falling *= BigInt::from(power as usize - k + 1);
        weights.push(Polynomial::term(
            Rational::from(falling.clone()),
            Monomial::power(u0, power - k as u32),
        ));
    }
    for i in 1..n {
        let mut acc = Accumulator::new();
        for (k, w) in weights.iter().enumerate().take(i) {
            acc.add_product(w, table.cell(i, k + 1));
        }
        out.push(acc.finish());
    }
    out
}

/// `A_0 .. A_{n-1}` of `u^N` by the index recurrence.
pub fn duan_c1(power: u32, n: usize) -> Vec<Polynomial> {
    duan_c1_until(power, n, &Deadline::none()).expect("no deadline")
}

pub fn duan_c1_until(power: u32, n: usize, deadline: &Deadline) -> Result<Vec<Polynomial>> {
    let table = duan_c1_table(n, deadline)?;
    Ok(assemble(power, n, &table))
}

/// `A_0 .. A_{n-1}` of `u^N` by the `1/i` recurrence.
pub fn duan_c3(power: u32, n: usize) -> Vec<Polynomial> {
    duan_c3_until(power, n, &Deadline::none()).expect("no deadline")
}

pub fn duan_c3_until(power: u32, n: usize, deadline: &Deadline) -> Result<Vec<Polynomial>> {
    let table = duan_c3_table(n, deadline)?;
    Ok(assemble(power, n, &table))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_polynomial;

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s).unwrap()
    }

    fn strings(v: &[Polynomial]) -> Vec<String> {
        v.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn oracle_1d_examples() {
        for n in 1..6 {
            assert_eq!(oracle_1d(n, 0), Polynomial::term(Rational::ONE, Monomial::power(ComponentVar::u(0), n)));
        }
        assert_eq!(oracle_1d(2, 1), p("2*u[0]*u[1]"));
        assert_eq!(oracle_1d(2, 2), p("u[1]^2 + 2*u[0]*u[2]"));
    }

    #[test]
    fn oracle_2d_examples() {
        assert_eq!(oracle_2d(3, (0, 0)), p("u[0,0]^3"));
        assert_eq!(oracle_2d(2, (0, 1)), p("2*u[0,0]*u[0,1]"));
        assert_eq!(oracle_2d(2, (1, 1)), p("2*u[0,0]*u[1,1] + 2*u[0,1]*u[1,0]"));
    }

    #[test]
    fn c1_examples() {
        assert_eq!(strings(&duan_c1(2, 3)), ["u[0]^2", "2*u[0]*u[1]", "u[1]^2 + 2*u[0]*u[2]"]);
        assert_eq!(strings(&duan_c1(1, 2)), ["u[0]", "u[1]"]);
        let z = duan_c1_table(5, &Deadline::none()).unwrap();
        assert_eq!(z.get(2, 2).unwrap(), &p("1/2*u[1]^2"));
        assert_eq!(z.get(3, 3).unwrap(), &p("1/6*u[1]^3"));
        // the shifted contribution first appears at (4, 2)
        assert_eq!(z.get(4, 2).unwrap(), &p("1/2*u[2]^2 + u[1]*u[3]"));
        assert_eq!(z.get(1, 2), None);
        assert_eq!(z.rows(), 4);
    }

    #[test]
    fn c3_examples() {
        assert_eq!(strings(&duan_c3(2, 3)), ["u[0]^2", "2*u[0]*u[1]", "u[1]^2 + 2*u[0]*u[2]"]);
        assert_eq!(strings(&duan_c3(3, 2)), ["u[0]^3", "3*u[0]^2*u[1]"]);
        let c = duan_c3_table(4, &Deadline::none()).unwrap();
        assert_eq!(c.get(2, 2).unwrap(), &p("1/2*u[1]^2"));
        assert_eq!(c.get(3, 1).unwrap(), &p("u[3]"));
    }

    #[test]
    fn tables_agree_cell_by_cell() {
        let z = duan_c1_table(9, &Deadline::none()).unwrap();
        let c = duan_c3_table(9, &Deadline::none()).unwrap();
        assert_eq!(z, c);
    }

    #[test]
    fn table_cells_have_row_index_sum_and_column_degree() {
        let c = duan_c3_table(10, &Deadline::none()).unwrap();
        for i in 1..10 {
            for k in 1..=i {
                for (m, _) in c.get(i, k).unwrap().terms() {
                    assert_eq!(m.first_index_sum(), i as u64);
                    assert_eq!(m.degree(), k as u32);
                }
            }
        }
    }

    #[test]
    fn high_k_terms_vanish() {
        // u^2 only has two nonzero derivatives
        let a = duan_c3(2, 6);
        assert!(a.iter().all(|x| x.terms().iter().all(|(m, _)| m.degree() == 2)));
        assert_eq!(a, oracle_1d_all(2, 6));
    }

    #[test]
    fn deadline_aborts() {
        let d = Deadline::after(std::time::Duration::ZERO);
        assert!(duan_c1_until(3, 10, &d).is_err());
        assert!(duan_c3_until(3, 10, &d).is_err());
    }

    #[test]
    fn empty_order() {
        assert!(duan_c1(3, 0).is_empty());
        assert_eq!(duan_c3(3, 1), vec![p("u[0]^3")]);
    }
}
