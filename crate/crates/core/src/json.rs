//! JSON form of polynomials.
//!
//! A polynomial is an array of terms in canonical order:
//!
//! ```json
//! [{"coeff": "2", "monomial": [{"var": [0], "family": "u", "exp": 1},
//!                              {"var": [2], "family": "u", "exp": 1}]}]
//! ```
//!
//! Coefficients are `"<int>"` or `"<num>/<den>"` strings.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::monomial::{ComponentVar, Monomial};
use crate::polynomial::Polynomial;
use crate::rational::Rational;

#[derive(Serialize, Deserialize)]
struct FactorJson {
    var: Vec<u32>,
    family: String,
    exp: u32,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: String,
    monomial: Vec<FactorJson>,
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<TermJson> = self
            .terms()
            .iter()
            .map(|(m, c)| TermJson {
                coeff: c.to_string(),
                monomial: m
                    .factors()
                    .iter()
                    .map(|(v, e)| FactorJson {
                        var: v.indices().to_vec(),
                        family: v.family().to_string(),
                        exp: *e,
                    })
                    .collect(),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms = Vec::<TermJson>::deserialize(d)?;
        let mut out = Vec::with_capacity(terms.len());
        for t in terms {
            let c: Rational = t.coeff.parse().map_err(D::Error::custom)?;
            let mut fs = Vec::with_capacity(t.monomial.len());
            for f in t.monomial {
                let mut chars = f.family.chars();
                let family = match (chars.next(), chars.next()) {
                    (Some(ch), None) if ch.is_ascii_lowercase() => ch,
                    _ => return Err(D::Error::custom(format!("bad family {:?}", f.family))),
                };
                let v = match f.var.as_slice() {
                    [i] => ComponentVar::new_1d(family, *i),
                    [i, j] => ComponentVar::new_2d(family, *i, *j),
                    other => {
                        return Err(D::Error::custom(format!("var needs 1 or 2 indices, got {}", other.len())))
                    }
                };
                fs.push((v, f.exp));
            }
            out.push((Monomial::from_factors(fs), c));
        }
        Ok(Polynomial::from_terms(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_polynomial;

    #[test]
    fn schema_shape() {
        let p = parse_polynomial("u[1]^2 + 1/3*u[0,0]*v[1,2]").unwrap();
        let v = serde_json::to_value(&p).unwrap();
        assert_eq!(
            v,
            serde_json::json!([
                {"coeff": "1/3", "monomial": [
                    {"var": [0, 0], "family": "u", "exp": 1},
                    {"var": [1, 2], "family": "v", "exp": 1}
                ]},
                {"coeff": "1", "monomial": [{"var": [1], "family": "u", "exp": 2}]}
            ])
        );
        let back: Polynomial = serde_json::from_value(v).unwrap();
        assert_eq!(back, p);
        assert_eq!(serde_json::to_string(&Polynomial::zero()).unwrap(), "[]");
    }

    #[test]
    fn rejects_bad_input() {
        let bad = r#"[{"coeff": "1/0", "monomial": []}]"#;
        assert!(serde_json::from_str::<Polynomial>(bad).is_err());
        let bad = r#"[{"coeff": "1", "monomial": [{"var": [], "family": "u", "exp": 1}]}]"#;
        assert!(serde_json::from_str::<Polynomial>(bad).is_err());
        let bad = r#"[{"coeff": "1", "monomial": [{"var": [0], "family": "U", "exp": 1}]}]"#;
        assert!(serde_json::from_str::<Polynomial>(bad).is_err());
    }
}
