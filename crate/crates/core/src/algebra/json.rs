//! Serde representations of exact values. Rationals travel as `"p/q"`.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::gauss::{rational_from_str, rational_to_string, GaussRational};
use super::monomial::ExponentVector;
use super::poly::Poly;
use crate::error::Error;

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exps: Vec<u32>,
    re: String,
    im: String,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    nvars: usize,
    terms: Vec<TermRepr>,
}

pub(crate) fn coeff_to_strings(c: &GaussRational) -> (String, String) {
    (rational_to_string(c.re()), rational_to_string(c.im()))
}

pub(crate) fn coeff_from_strings(re: &str, im: &str) -> Result<GaussRational, Error> {
    Ok(GaussRational::new(rational_from_str(re)?, rational_from_str(im)?))
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyRepr {
            nvars: self.nvars(),
            terms: self
                .sorted_terms()
                .into_iter()
                .map(|(e, c)| {
                    let (re, im) = coeff_to_strings(c);
                    TermRepr {
                        exps: e.as_slice().to_vec(),
                        re,
                        im,
                    }
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(d)?;
        let terms = repr
            .terms
            .into_iter()
            .map(|t| Ok((ExponentVector::new(t.exps), coeff_from_strings(&t.re, &t.im)?)))
            .collect::<Result<Vec<_>, Error>>()
            .map_err(serde::de::Error::custom)?;
        Poly::from_terms(repr.nvars, terms).map_err(serde::de::Error::custom)
    }
}

impl Serialize for ExponentVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.as_slice().serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExponentVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Vec::<u32>::deserialize(d).map(ExponentVector::new)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_shape() {
        let p = &(&Poly::var(2, 0).pow(2) * &Poly::var(2, 1))
            + &Poly::var(2, 1).scale(&GaussRational::new(num_rational::BigRational::from_integer((-3).into()), num_rational::BigRational::new(1.into(), 2.into())));
        let v = serde_json::to_value(&p).unwrap();
        assert_eq!(
            v,
            serde_json::json!({
                "nvars": 2,
                "terms": [
                    {"exps": [2, 1], "re": "1/1", "im": "0/1"},
                    {"exps": [0, 1], "re": "-3/1", "im": "1/2"}
                ]
            })
        );
        let back: Poly = serde_json::from_value(v).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn rejects_bad_input() {
        let bad = r#"{"nvars": 2, "terms": [{"exps": [1], "re": "1", "im": "0"}]}"#;
        assert!(serde_json::from_str::<Poly>(bad).is_err());
        let float = r#"{"nvars": 1, "terms": [{"exps": [1], "re": "0.5", "im": "0"}]}"#;
        assert!(serde_json::from_str::<Poly>(float).is_err());
    }
}
