//! Adomian polynomials by iterated truncated convolution.
//!
//! For two series grids `U` and `V` the Adomian matrix of the product `u·v`
//! has entries
//!
//! ```text
//! A[k,l] = Σ_{i≤k} Σ_{j≤l} U[i,j] · V[k-i, l-j]
//! ```
//!
//! which is what the matrix formulation computes by taking the leading
//! `(k+1)×(l+1)` submatrices, flipping the one from `V` in both directions,
//! multiplying element-wise and summing. Here the flip is a reversed index
//! inside the sum; nothing is materialized. In 1D the flip is horizontal
//! only and the sum is the ordinary truncated Cauchy product.
//!
//! Powers `u^N` fold the convolution `N-1` times over the component grid,
//! products of several series fold from the right, and sums raised to a
//! power are expanded by the multinomial theorem first.
//!
//! Counting literal flips, element-wise products and summations, one
//! `(m+1)×(n+1)` pass costs `4(m+1)(n+1) - (m+n+2)` matrix operations. That
//! count does not apply to this implementation; [`AdomianResult::cells`]
//! instead records the number of convolution cells evaluated, which is
//! `(m+1)(n+1)` per pass.
//!
//! All kernels are generic over [`SeriesRing`], so the same code produces
//! symbolic polynomials or, with `x`-polynomial entries, the values used by
//! the ODE solver.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::deadline::Deadline;
use crate::error::{Error, Result};
use crate::grid::{SeriesGrid, Shape};
use crate::monomial::ComponentVar;
use crate::polynomial::Polynomial;
use crate::rational::Rational;
use crate::ring::SeriesRing;

/// Default cap on the number of multinomial terms in [`adomian_sum_power`].
pub const DEFAULT_EXPANSION_LIMIT: u64 = 10_000;

/// Nonlinearity order and grid extent for `F = u^N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PowerSpec {
    power: u32,
    shape: Shape,
}

impl PowerSpec {
    pub fn new_1d(power: u32, order: usize) -> Result<Self> {
        Self::validate(power, &[order])?;
        Ok(PowerSpec { power, shape: Shape::D1(order) })
    }

    pub fn new_2d(power: u32, rows: usize, cols: usize) -> Result<Self> {
        Self::validate(power, &[rows, cols])?;
        Ok(PowerSpec { power, shape: Shape::D2(rows, cols) })
    }

    fn validate(power: u32, extents: &[usize]) -> Result<()> {
        if power < 1 {
            return Err(Error::InvalidSpec("power must be a positive integer".into()));
        }
        if extents.iter().any(|&e| e < 1) {
            return Err(Error::InvalidSpec("order must be at least 1".into()));
        }
        Ok(())
    }

    pub fn power(&self) -> u32 {
        self.power
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }
}

/// A grid of Adomian polynomials plus instrumentation counters.
#[derive(Clone, Debug, PartialEq)]
pub struct AdomianResult<R = Polynomial> {
    pub grid: SeriesGrid<R>,
    /// Convolution passes performed.
    pub passes: usize,
    /// Convolution cells evaluated across all passes.
    pub cells: u64,
}

impl<R> AdomianResult<R> {
    fn unchanged(grid: SeriesGrid<R>) -> Self {
        AdomianResult { grid, passes: 0, cells: 0 }
    }
}

/// `out[k] = Σ_{i≤k} components[i] · acc[k-i]`.
pub fn conv_step_1d<R: SeriesRing>(components: &SeriesGrid<R>, acc: &SeriesGrid<R>) -> Result<SeriesGrid<R>> {
    conv_step_1d_until(components, acc, &Deadline::none())
}

pub fn conv_step_1d_until<R: SeriesRing>(
    components: &SeriesGrid<R>,
    acc: &SeriesGrid<R>,
    deadline: &Deadline,
) -> Result<SeriesGrid<R>> {
    expect_dim(components, 1)?;
    components.check_same_shape(acc)?;
    let (c, a) = (components.entries(), acc.entries());
    let mut out = Vec::with_capacity(c.len());
    for k in 0..c.len() {
        deadline.check()?;
        out.push(R::dot((0..=k).map(|i| (&c[i], &a[k - i]))));
    }
    Ok(SeriesGrid::from_parts(components.shape(), out))
}

/// `out[k,l] = Σ_{i≤k} Σ_{j≤l} components[i,j] · acc[k-i, l-j]`.
pub fn conv_step_2d<R: SeriesRing>(components: &SeriesGrid<R>, acc: &SeriesGrid<R>) -> Result<SeriesGrid<R>> {
    conv_step_2d_until(components, acc, &Deadline::none())
}

pub fn conv_step_2d_until<R: SeriesRing>(
    components: &SeriesGrid<R>,
    acc: &SeriesGrid<R>,
    deadline: &Deadline,
) -> Result<SeriesGrid<R>> {
    expect_dim(components, 2)?;
    components.check_same_shape(acc)?;
    let (rows, cols) = components.shape().rows_cols();
    let (c, a) = (components.entries(), acc.entries());
    let mut out = Vec::with_capacity(rows * cols);
    for k in 0..rows {
        for l in 0..cols {
            deadline.check()?;
            let pairs = (0..=k)
                .flat_map(|i| (0..=l).map(move |j| (i, j)))
                .map(|(i, j)| (&c[i * cols + j], &a[(k - i) * cols + (l - j)]));
            out.push(R::dot(pairs));
        }
    }
    Ok(SeriesGrid::from_parts(components.shape(), out))
}

/// Dispatches on the grid dimension.
pub fn conv_step<R: SeriesRing>(components: &SeriesGrid<R>, acc: &SeriesGrid<R>, deadline: &Deadline) -> Result<SeriesGrid<R>> {
    match components.dim() {
        1 => conv_step_1d_until(components, acc, deadline),
        _ => conv_step_2d_until(components, acc, deadline),
    }
}

fn expect_dim<R>(g: &SeriesGrid<R>, dim: usize) -> Result<()> {
    if g.dim() != dim {
        return Err(Error::DimensionMismatch { expected: dim, found: g.dim() });
    }
    Ok(())
}

/// Adomian grid of `u^N` for an arbitrary component grid.
pub fn power_of<R: SeriesRing>(components: &SeriesGrid<R>, power: u32, deadline: &Deadline) -> Result<AdomianResult<R>> {
    if power < 1 {
        return Err(Error::InvalidSpec("power must be a positive integer".into()));
    }
    let mut acc = components.clone();
    let mut cells = 0u64;
    for _ in 1..power {
        acc = conv_step(components, &acc, deadline)?;
        cells += components.shape().len() as u64;
    }
    Ok(AdomianResult { grid: acc, passes: power as usize - 1, cells })
}

/// Adomian polynomials `A[0..n]` of `u^N` over the symbols `u[0..n]`.
pub fn adomian_power_1d(spec: PowerSpec) -> Result<AdomianResult> {
    adomian_power_1d_until(spec, &Deadline::none())
}

pub fn adomian_power_1d_until(spec: PowerSpec, deadline: &Deadline) -> Result<AdomianResult> {
    let Shape::D1(n) = spec.shape else {
        return Err(Error::DimensionMismatch { expected: 1, found: 2 });
    };
    let comps = SeriesGrid::components_1d(ComponentVar::DEFAULT_FAMILY, n)?;
    power_of(&comps, spec.power, deadline)
}

/// Adomian matrix `A[k,l]` of `u^N` over the symbols `u[k,l]`.
pub fn adomian_power_2d(spec: PowerSpec) -> Result<AdomianResult> {
    adomian_power_2d_until(spec, &Deadline::none())
}

pub fn adomian_power_2d_until(spec: PowerSpec, deadline: &Deadline) -> Result<AdomianResult> {
    let Shape::D2(m, n) = spec.shape else {
        return Err(Error::DimensionMismatch { expected: 2, found: 1 });
    };
    let comps = SeriesGrid::components_2d(ComponentVar::DEFAULT_FAMILY, m, n)?;
    power_of(&comps, spec.power, deadline)
}

/// Adomian grid of the product `f_1 · f_2 ⋯ f_P`.
///
/// The last two factors are combined first, then each earlier factor is
/// convolved onto the running result.
pub fn adomian_product<R: SeriesRing>(factors: &[SeriesGrid<R>]) -> Result<AdomianResult<R>> {
    let (last, rest) = factors.split_last().ok_or(Error::EmptyFactors)?;
    for f in rest {
        f.check_same_shape(last)?;
    }
    let mut acc = AdomianResult::unchanged(last.clone());
    for f in rest.iter().rev() {
        acc.grid = conv_step(f, &acc.grid, &Deadline::none())?;
        acc.passes += 1;
        acc.cells += f.shape().len() as u64;
    }
    Ok(acc)
}

/// Adomian grid of `(f_1 + ... + f_P)^N` with the default expansion limit.
pub fn adomian_sum_power<R: SeriesRing>(terms: &[SeriesGrid<R>], power: u32) -> Result<AdomianResult<R>> {
    adomian_sum_power_with_limit(terms, power, DEFAULT_EXPANSION_LIMIT)
}

/// Expands the power by the multinomial theorem, computes the product grid
/// of each expansion term, scales it by its multinomial coefficient and sums
/// everything entry-wise.
pub fn adomian_sum_power_with_limit<R: SeriesRing>(
    terms: &[SeriesGrid<R>],
    power: u32,
    limit: u64,
) -> Result<AdomianResult<R>> {
    let (first, rest) = terms.split_first().ok_or(Error::EmptyFactors)?;
    for t in rest {
        first.check_same_shape(t)?;
    }
    if power < 1 {
        return Err(Error::InvalidSpec("power must be a positive integer".into()));
    }
    let required = expansion_size(power, terms.len());
    if required > BigUint::from(limit) {
        return Err(Error::ExpansionLimit { required: required.to_string(), limit });
    }

    let factorials = factorial_table(power);
    let mut total: Vec<R> = vec![R::zero(); first.shape().len()];
    let (mut passes, mut cells) = (0, 0);
    for exps in compositions(power, terms.len()) {
        let mut coeff = factorials[power as usize].clone();
        for &e in &exps {
            coeff /= &factorials[e as usize];
        }
        let coeff = Rational::from(num_bigint::BigInt::from(coeff));

        let factors: Vec<SeriesGrid<R>> = exps
            .iter()
            .zip(terms)
            .flat_map(|(&e, t)| std::iter::repeat_n(t, e as usize))
            .cloned()
            .collect();
        let prod = adomian_product(&factors)?;
        passes += prod.passes;
        cells += prod.cells;
        for (slot, entry) in total.iter_mut().zip(prod.grid.entries()) {
            *slot = slot.add_ref(&entry.scale(&coeff));
        }
    }
    Ok(AdomianResult { grid: SeriesGrid::from_parts(first.shape(), total), passes, cells })
}

/// `C(N+P-1, N)`, the number of monomials in `(x_1 + ... + x_P)^N`.
pub fn expansion_size(power: u32, parts: usize) -> BigUint {
    let n = power as u64 + parts as u64 - 1;
    let k = (power as u64).min(parts as u64 - 1);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

fn factorial_table(n: u32) -> Vec<BigUint> {
    let mut out = Vec::with_capacity(n as usize + 1);
    out.push(BigUint::one());
    for i in 1..=n {
        let next = out.last().unwrap() * BigUint::from(i);
        out.push(next);
    }
    out
}

/// All `(e_1, .., e_P)` with `e_p ≥ 0` and `Σ e_p = total`, in reverse
/// lexicographic order (all weight on the first part first).
fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    fn go(left: u32, parts: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 1 {
            prefix.push(left);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e);
            go(left - e, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(total, parts, &mut Vec::with_capacity(parts), &mut out);
    out
}

/// [`expansion_size`] as a machine integer, if it fits.
pub fn expansion_size_u64(power: u32, parts: usize) -> Option<u64> {
    expansion_size(power, parts).to_u64()
}
