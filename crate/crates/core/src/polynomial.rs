//! Sparse multivariate polynomials with exact rational coefficients.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::monomial::{ComponentVar, Monomial};
use crate::rational::Rational;

/// A polynomial in [`ComponentVar`]s, always fully expanded.
///
/// Terms are stored sorted by the canonical [`Monomial`] order with nonzero
/// coefficients and at most one entry per monomial, so structural equality
/// is polynomial equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: Vec<(Monomial, Rational)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::ONE)
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn var(v: ComponentVar) -> Self {
        Self::term(Rational::ONE, Monomial::var(v))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Polynomial { terms: vec![(m, c)] }
        }
    }

    /// Normalizes arbitrary terms: merges like monomials, drops zeros, sorts.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut acc = Accumulator::new();
        for (m, c) in terms {
            acc.add_term(m, &c);
        }
        acc.finish()
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Rational)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        match self.terms.binary_search_by(|(k, _)| k.cmp(m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rational::ZERO,
        }
    }

    /// Highest total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.last().map(|(m, _)| m.degree())
    }

    /// Every distinct symbol occurring in the polynomial, sorted.
    pub fn vars(&self) -> Vec<ComponentVar> {
        let mut vs: Vec<ComponentVar> = self.terms.iter().flat_map(|(m, _)| m.vars()).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        // term order is not preserved under monomial multiplication
        Self::from_terms(self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())))
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Rewrites each term through `f`; the result is renormalized.
    pub fn map_terms(&self, mut f: impl FnMut(&Monomial, &Rational) -> (Monomial, Rational)) -> Polynomial {
        Self::from_terms(self.terms.iter().map(|(m, c)| f(m, c)))
    }

    /// Renames symbols through `f`.
    pub fn map_vars(&self, mut f: impl FnMut(ComponentVar) -> ComponentVar) -> Polynomial {
        self.map_terms(|m, c| (m.map_vars(&mut f), c.clone()))
    }

    /// Exact value at `assign`; every occurring symbol must be assigned.
    pub fn eval(&self, assign: &HashMap<ComponentVar, Rational>) -> Result<Rational> {
        self.eval_with(|v| assign.get(&v).cloned())
    }

    pub fn eval_with(&self, mut value: impl FnMut(ComponentVar) -> Option<Rational>) -> Result<Rational> {
        let mut total = Rational::ZERO;
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.factors() {
                let x = value(*v).ok_or(Error::MissingAssignment(*v))?;
                t = &t * &x.pow(*e);
            }
            total = &total + &t;
        }
        Ok(total)
    }

    /// Substitutes ring elements for symbols: `Σ c · Π value(v)^e`.
    ///
    /// This is the evaluation homomorphism into any [`crate::ring::SeriesRing`].
    pub fn substitute<R: crate::ring::SeriesRing>(
        &self,
        mut value: impl FnMut(ComponentVar) -> Option<R>,
    ) -> Result<R> {
        let mut total = R::zero();
        for (m, c) in &self.terms {
            let mut t = R::from_rational(c);
            for (v, e) in m.factors() {
                let x = value(*v).ok_or(Error::MissingAssignment(*v))?;
                for _ in 0..*e {
                    t = t.mul_ref(&x);
                }
            }
            total = total.add_ref(&t);
        }
        Ok(total)
    }

    fn merge(a: &[(Monomial, Rational)], b: &[(Monomial, Rational)], negate_b: bool) -> Polynomial {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let fix = |c: &Rational| if negate_b { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b[j].0.clone(), fix(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a[i].1 + &fix(&b[j].1);
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), fix(c))));
        Polynomial { terms: out }
    }
}

/// Collects terms in a hash map and sorts once at the end.
#[derive(Default)]
pub struct Accumulator {
    map: FxHashMap<Monomial, Rational>,
}

impl Accumulator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(n: usize) -> Self {
        Accumulator { map: FxHashMap::with_capacity_and_hasher(n, Default::default()) }
    }

    pub fn add_term(&mut self, m: Monomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.map.get_mut(&m) {
            Some(slot) => *slot += c,
            None => {
                self.map.insert(m, c.clone());
            }
        }
    }

    pub fn add_poly(&mut self, p: &Polynomial) {
        for (m, c) in &p.terms {
            self.add_term(m.clone(), c);
        }
    }

    /// Adds the expanded product `a · b`.
    pub fn add_product(&mut self, a: &Polynomial, b: &Polynomial) {
        // Single-symbol factors are the common case (component series).
        if let [(ma, ca)] = a.terms.as_slice() {
            if let [(v, 1)] = ma.factors() {
                let unit = ca.is_one();
                let mut scratch = Monomial::one();
                for (mb, cb) in &b.terms {
                    mb.mul_var_into(*v, &mut scratch);
                    let c = if unit { cb.clone() } else { ca * cb };
                    if c.is_zero() {
                        continue;
                    }
                    match self.map.get_mut(&scratch) {
                        Some(slot) => *slot += &c,
                        None => {
                            self.map.insert(scratch.clone(), c);
                        }
                    }
                }
                return;
            }
        }
        if b.len() == 1 && a.len() > 1 {
            return self.add_product(b, a);
        }
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                self.add_term(ma.mul(mb), &(ca * cb));
            }
        }
    }

    pub fn finish(self) -> Polynomial {
        let mut terms: Vec<(Monomial, Rational)> =
            self.map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        Polynomial { terms }
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        Polynomial::merge(&self.terms, &rhs.terms, false)
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        Polynomial::merge(&self.terms, &rhs.terms, true)
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        let mut acc = Accumulator::with_capacity(self.len() * rhs.len());
        acc.add_product(self, rhs);
        acc.finish()
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl From<ComponentVar> for Polynomial {
    fn from(v: ComponentVar) -> Self {
        Polynomial::var(v)
    }
}

impl From<Rational> for Polynomial {
    fn from(c: Rational) -> Self {
        Polynomial::constant(c)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::format_polynomial(self))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::ComponentVar as V;

    fn u(i: u32) -> Polynomial {
        Polynomial::var(V::u(i))
    }

    fn k(n: i64) -> Polynomial {
        Polynomial::constant(Rational::from_integer(n))
    }

    #[test]
    fn add_examples() {
        assert_eq!((&u(0) + &u(0)).to_string(), "2*u[0]");
        let sq = &u(1) * &u(1);
        assert!((&sq + &(-&sq)).is_zero());
        let p = &(&k(2) * &(&u(0) * &u(2))) + &sq;
        assert_eq!(p.to_string(), "u[1]^2 + 2*u[0]*u[2]");
    }

    #[test]
    fn mul_examples() {
        assert_eq!((&u(0) * &u(0)).to_string(), "u[0]^2");
        let d = &(&u(0) + &u(1)) * &(&u(0) - &u(1));
        assert_eq!(d, &(&u(0) * &u(0)) - &(&u(1) * &u(1)));
        assert_eq!(d.to_string(), "-u[1]^2 + u[0]^2");
        assert_eq!((&(&k(2) * &u(0)) * &(&k(3) * &u(1))).to_string(), "6*u[0]*u[1]");
    }

    #[test]
    fn eval_examples() {
        // u1^2 + 2 u0 u2 at u_k = (1/2)^k: 1/4 + 2 * 1 * 1/4 = 3/4 = 3 t^2
        let p = &(&u(1) * &u(1)) + &(&k(2) * &(&u(0) * &u(2)));
        let t = Rational::new(1, 2);
        let assign: HashMap<_, _> = (0..3).map(|i| (V::u(i), t.pow(i))).collect();
        assert_eq!(p.eval(&assign).unwrap(), Rational::new(3, 4));

        assert_eq!(Polynomial::zero().eval(&HashMap::new()).unwrap(), Rational::ZERO);

        let cube = u(0).pow(3);
        let assign: HashMap<_, _> = [(V::u(0), Rational::from_integer(-2))].into();
        assert_eq!(cube.eval(&assign).unwrap(), Rational::from_integer(-8));
    }

    #[test]
    fn eval_missing_names_var() {
        let p = &u(0) * &u(4);
        let assign: HashMap<_, _> = [(V::u(0), Rational::ONE)].into();
        let err = p.eval(&assign).unwrap_err();
        assert_eq!(err, Error::MissingAssignment(V::u(4)));
        assert!(err.to_string().contains("u[4]"));
    }

    #[test]
    fn from_terms_is_idempotent() {
        let p = &(&u(0) + &u(3)).pow(3) - &u(1);
        let again = Polynomial::from_terms(p.terms().iter().cloned());
        assert_eq!(again, p);
    }
}
