//! Component symbols and monomials over them.

use std::cmp::Ordering;
use std::fmt;

/// A series component symbol such as `u[3]` or `v[1,2]`.
///
/// The derived order compares family, then dimension, then the indices
/// lexicographically. For 1D symbols the second index is always zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ComponentVar {
    family: u8,
    dim: u8,
    index: [u32; 2],
}

impl ComponentVar {
    pub const DEFAULT_FAMILY: char = 'u';

    /// `family[i]`. Panics if `family` is not a lowercase ASCII letter.
    pub fn new_1d(family: char, i: u32) -> Self {
        assert!(family.is_ascii_lowercase(), "family must be a lowercase letter");
        ComponentVar { family: family as u8, dim: 1, index: [i, 0] }
    }

    /// `family[i,j]`. Panics if `family` is not a lowercase ASCII letter.
    pub fn new_2d(family: char, i: u32, j: u32) -> Self {
        assert!(family.is_ascii_lowercase(), "family must be a lowercase letter");
        ComponentVar { family: family as u8, dim: 2, index: [i, j] }
    }

    pub fn u(i: u32) -> Self {
        Self::new_1d(Self::DEFAULT_FAMILY, i)
    }

    pub fn u2(i: u32, j: u32) -> Self {
        Self::new_2d(Self::DEFAULT_FAMILY, i, j)
    }

    pub fn family(&self) -> char {
        self.family as char
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn indices(&self) -> &[u32] {
        &self.index[..self.dim()]
    }

    pub fn first_index(&self) -> u32 {
        self.index[0]
    }

    /// Zero for 1D symbols.
    pub fn second_index(&self) -> u32 {
        self.index[1]
    }

    /// Same symbol with every index raised by `by` (1D: the single index).
    pub fn shifted(&self, by: u32) -> Self {
        let mut out = *self;
        out.index[0] += by;
        if self.dim == 2 {
            out.index[1] += by;
        }
        out
    }
}

impl fmt::Display for ComponentVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.dim {
            1 => write!(f, "{}[{}]", self.family(), self.index[0]),
            _ => write!(f, "{}[{},{}]", self.family(), self.index[0], self.index[1]),
        }
    }
}

impl fmt::Debug for ComponentVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A product of component symbols with positive exponents.
///
/// Factors are kept sorted by [`ComponentVar`] order with no zero exponents;
/// the empty product is the constant monomial `1`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    factors: Vec<(ComponentVar, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { factors: Vec::new() }
    }

    pub fn var(v: ComponentVar) -> Self {
        Monomial { factors: vec![(v, 1)] }
    }

    pub fn power(v: ComponentVar, exp: u32) -> Self {
        if exp == 0 {
            Self::one()
        } else {
            Monomial { factors: vec![(v, exp)] }
        }
    }

    /// Builds a monomial from arbitrary `(var, exp)` pairs, merging repeats
    /// and dropping zero exponents.
    pub fn from_factors(factors: impl IntoIterator<Item = (ComponentVar, u32)>) -> Self {
        let mut fs: Vec<(ComponentVar, u32)> = factors.into_iter().filter(|f| f.1 > 0).collect();
        fs.sort_unstable_by_key(|f| f.0);
        let mut out: Vec<(ComponentVar, u32)> = Vec::with_capacity(fs.len());
        for (v, e) in fs {
            match out.last_mut() {
                Some(last) if last.0 == v => last.1 += e,
                _ => out.push((v, e)),
            }
        }
        Monomial { factors: out }
    }

    pub fn factors(&self) -> &[(ComponentVar, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|f| f.1).sum()
    }

    pub fn exponent_of(&self, v: ComponentVar) -> u32 {
        match self.factors.binary_search_by_key(&v, |f| f.0) {
            Ok(i) => self.factors[i].1,
            Err(_) => 0,
        }
    }

    /// Σ exponent × first index over all factors.
    pub fn first_index_sum(&self) -> u64 {
        self.factors.iter().map(|(v, e)| *e as u64 * v.first_index() as u64).sum()
    }

    /// Σ exponent × second index over all factors.
    pub fn second_index_sum(&self) -> u64 {
        self.factors.iter().map(|(v, e)| *e as u64 * v.second_index() as u64).sum()
    }

    pub fn vars(&self) -> impl Iterator<Item = ComponentVar> + '_ {
        self.factors.iter().map(|f| f.0)
    }

    /// `self · v`, the hot path of the convolution.
    pub fn mul_var(&self, v: ComponentVar) -> Monomial {
        let mut out = Monomial { factors: Vec::with_capacity(self.factors.len() + 1) };
        self.mul_var_into(v, &mut out);
        out
    }

    /// Writes `self · v` into `out`, reusing its allocation.
    pub(crate) fn mul_var_into(&self, v: ComponentVar, out: &mut Monomial) {
        let factors = &mut out.factors;
        factors.clear();
        match self.factors.binary_search_by_key(&v, |f| f.0) {
            Ok(i) => {
                factors.extend_from_slice(&self.factors);
                factors[i].1 += 1;
            }
            Err(i) => {
                factors.extend_from_slice(&self.factors[..i]);
                factors.push((v, 1));
                factors.extend_from_slice(&self.factors[i..]);
            }
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        if other.factors.len() == 1 && other.factors[0].1 == 1 {
            return self.mul_var(other.factors[0].0);
        }
        if self.factors.len() == 1 && self.factors[0].1 == 1 {
            return other.mul_var(self.factors[0].0);
        }
        let (a, b) = (&self.factors, &other.factors);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { factors: out }
    }

    /// Applies `f` to every symbol and renormalizes.
    pub fn map_vars(&self, mut f: impl FnMut(ComponentVar) -> ComponentVar) -> Monomial {
        Monomial::from_factors(self.factors.iter().map(|(v, e)| (f(*v), *e)))
    }
}

/// Canonical term order: total degree ascending, then exponent vectors
/// compared variable by variable in [`ComponentVar`] order, the smaller
/// exponent first. So `u[1]^2` precedes `u[0]*u[2]`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let by_degree = self.degree().cmp(&other.degree());
        if by_degree != Ordering::Equal {
            return by_degree;
        }
        let (a, b) = (&self.factors, &other.factors);
        for (x, y) in a.iter().zip(b.iter()) {
            match x.0.cmp(&y.0) {
                // `self` has a variable `other` lacks: larger exponent there
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => match x.1.cmp(&y.1) {
                    Ordering::Equal => {}
                    ord => return ord,
                },
            }
        }
        a.len().cmp(&b.len())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `u[0]*u[1]^2`; the constant monomial prints as `1`.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
