//! ADM series solutions of `u' = a·u + c·u^N + g(x)`, `u(0) = u0`.
//!
//! With `L = d/dx` inverted by `∫_0^x`, the forcing goes entirely into the
//! first component and every later component integrates the linear term and
//! the Adomian polynomial of the previous order:
//!
//! ```text
//! u_0     = u0 + ∫ g
//! u_{k+1} = ∫ (a·u_k + c·A_k)
//! ```
//!
//! `A_k` is obtained by running the convolution kernels directly over
//! `x`-polynomial entries `[u_0, .., u_k]`.

use serde::Serialize;

use crate::deadline::Deadline;
use crate::error::{Error, Result};
use crate::grid::SeriesGrid;
use crate::matrix::power_of;
use crate::rational::Rational;
use crate::unipoly::UniPoly;

#[derive(Clone, Debug, PartialEq)]
pub struct IvProblem {
    /// Coefficient of the linear term.
    pub a: Rational,
    /// Weight of the nonlinearity.
    pub c: Rational,
    pub power: u32,
    pub g: UniPoly,
    pub u0: Rational,
    /// Number of components after `u_0`.
    pub depth: usize,
}

impl IvProblem {
    pub fn validate(&self) -> Result<()> {
        if self.power < 1 {
            return Err(Error::InvalidProblem("power must be at least 1".into()));
        }
        if self.depth < 1 {
            return Err(Error::InvalidProblem("depth must be at least 1".into()));
        }
        Ok(())
    }
}

/// Components `u_0(x) .. u_K(x)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesSolution {
    pub components: Vec<UniPoly>,
}

#[derive(Serialize)]
struct SolutionJson {
    components: Vec<Vec<Rational>>,
    partial_sum: Vec<Rational>,
}

impl SeriesSolution {
    /// `Σ_{k≤depth} u_k(x)`.
    pub fn partial_sum(&self, depth: usize) -> Result<UniPoly> {
        if depth >= self.components.len() {
            return Err(Error::DepthExceeded { requested: depth, available: self.components.len() });
        }
        Ok(self.components[..=depth].iter().fold(UniPoly::zero(), |acc, u| &acc + u))
    }

    /// `{"components": [[c0, c1, ..], ..], "partial_sum": [..]}` with
    /// coefficients in ascending powers as rational strings.
    pub fn to_json(&self) -> serde_json::Value {
        let full = self.partial_sum(self.components.len() - 1).unwrap_or_default();
        let doc = SolutionJson {
            components: self.components.iter().map(|u| u.coeffs().to_vec()).collect(),
            partial_sum: full.coeffs().to_vec(),
        };
        serde_json::to_value(doc).expect("plain data serializes")
    }
}

pub fn solve(p: &IvProblem) -> Result<SeriesSolution> {
    p.validate()?;
    let mut components = Vec::with_capacity(p.depth + 1);
    components.push(&UniPoly::constant(p.u0.clone()) + &p.g.integrate());
    for k in 0..p.depth {
        let a_k = adomian_entry(&components, p.power)?;
        let rhs = &components[k].scale(&p.a) + &a_k.scale(&p.c);
        components.push(rhs.integrate());
    }
    Ok(SeriesSolution { components })
}

/// The last Adomian polynomial of `u^N` for the given components.
fn adomian_entry(components: &[UniPoly], power: u32) -> Result<UniPoly> {
    let grid = SeriesGrid::new_1d(components.to_vec())?;
    let result = power_of(&grid, power, &Deadline::none())?;
    Ok(result.grid.into_entries().pop().expect("non-empty grid"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn problem(a: i64, c: i64, power: u32, g: &str, u0: i64, depth: usize) -> IvProblem {
        IvProblem {
            a: Rational::from_integer(a),
            c: Rational::from_integer(c),
            power,
            g: g.parse().unwrap(),
            u0: Rational::from_integer(u0),
            depth,
        }
    }

    #[test]
    fn riccati_geometric() {
        let s = solve(&problem(0, 1, 2, "0", 1, 5)).unwrap();
        for (k, u) in s.components.iter().enumerate() {
            assert_eq!(u, &UniPoly::monomial(Rational::ONE, k));
        }
        assert_eq!(s.partial_sum(3).unwrap().to_string(), "1 + x + x^2 + x^3");
        assert_eq!(s.partial_sum(0).unwrap().to_string(), "1");
    }

    #[test]
    fn zero_fixed_point() {
        let s = solve(&problem(0, 1, 2, "0", 0, 4)).unwrap();
        assert!(s.components.iter().all(UniPoly::is_zero));
    }

    #[test]
    fn exponential_decay() {
        let s = solve(&problem(-1, 0, 2, "0", 1, 6)).unwrap();
        let mut fact = 1i64;
        for (k, u) in s.components.iter().enumerate() {
            if k > 0 {
                fact *= k as i64;
            }
            let sign = if k % 2 == 0 { 1 } else { -1 };
            assert_eq!(u, &UniPoly::monomial(Rational::new(sign, fact), k));
        }
    }

    #[test]
    fn negative_riccati() {
        let s = solve(&problem(0, -1, 2, "0", 1, 3)).unwrap();
        assert_eq!(s.partial_sum(3).unwrap().to_string(), "1 - x + x^2 - x^3");
    }

    #[test]
    fn forcing_goes_into_first_component() {
        let s = solve(&problem(0, 0, 1, "2*x", 3, 2)).unwrap();
        assert_eq!(s.components[0].to_string(), "3 + x^2");
        assert!(s.components[1].is_zero());
    }

    #[test]
    fn errors() {
        assert!(solve(&problem(0, 1, 0, "0", 1, 3)).is_err());
        assert!(solve(&problem(0, 1, 2, "0", 1, 0)).is_err());
        let s = solve(&problem(0, 1, 2, "0", 1, 2)).unwrap();
        assert!(matches!(s.partial_sum(3), Err(Error::DepthExceeded { requested: 3, available: 3 })));
    }

    #[test]
    fn json_shape() {
        let s = solve(&problem(-1, 0, 2, "0", 1, 2)).unwrap();
        assert_eq!(
            s.to_json(),
            serde_json::json!({
                "components": [["1"], ["0", "-1"], ["0", "0", "1/2"]],
                "partial_sum": ["1", "-1", "1/2"]
            })
        );
    }
}
