use serde::Deserialize;

use crate::error::{Error, Result};
use crate::ideals::GradedIdeal;
use crate::polycore::{linear_form_power_int, parse_polynomial, Monomial, Polynomial, Rational};

#[derive(Deserialize)]
#[serde(untagged)]
enum GeneratorSpec {
    Power { form: Vec<i64>, power: u32 },
    Monomial { monomial: Vec<u32> },
    Text(String),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum IdealSpec {
    Full {
        nvars: usize,
        generators: Vec<GeneratorSpec>,
    },
    Bare(Vec<GeneratorSpec>),
}

/// Reads an ideal from JSON: either a bare list of generators (three
/// variables) or `{"nvars": n, "generators": [...]}`. A generator is
/// `{"form": [c_1, .., c_n], "power": t}`, `{"monomial": [e_1, .., e_n]}`,
/// or a polynomial string such as `"x^2 - 3*y*z"`.
pub fn parse_ideal_spec(json: &str) -> Result<GradedIdeal> {
    let (nvars, gens) = match serde_json::from_str::<IdealSpec>(json)? {
        IdealSpec::Full { nvars, generators } => (nvars, generators),
        IdealSpec::Bare(g) => (3, g),
    };
    if gens.is_empty() {
        return Err(Error::Malformed(
            "an ideal needs at least one generator".into(),
        ));
    }
    let polys = gens
        .into_iter()
        .map(|g| generator(nvars, g))
        .collect::<Result<Vec<_>>>()?;
    GradedIdeal::new(nvars, polys)
}

fn generator(nvars: usize, g: GeneratorSpec) -> Result<Polynomial> {
    let arity = |found: usize| {
        if found == nvars {
            Ok(())
        } else {
            Err(Error::NvarsMismatch {
                left: nvars,
                right: found,
            })
        }
    };
    match g {
        GeneratorSpec::Power { form, power } => {
            arity(form.len())?;
            if form.iter().all(|c| *c == 0) {
                return Err(Error::Malformed("zero linear form".into()));
            }
            Ok(linear_form_power_int(&form, power))
        }
        GeneratorSpec::Monomial { monomial } => {
            arity(monomial.len())?;
            Ok(Polynomial::monomial(
                Monomial::new(monomial),
                Rational::from_integer(1.into()),
            ))
        }
        GeneratorSpec::Text(s) => parse_polynomial(nvars, &s),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_generators() {
        let i = parse_ideal_spec(
            r#"[{"form": [1, 1, 0], "power": 2}, {"monomial": [0, 0, 3]}, "x*y - z^2"]"#,
        )
        .unwrap();
        assert_eq!(i.len(), 3);
        assert_eq!(i.degrees(), &[2, 3, 2]);
        assert_eq!(
            i.generators()[0].to_string(),
            parse_polynomial(3, "x^2 + 2*x*y + y^2")
                .unwrap()
                .to_string()
        );
    }

    #[test]
    fn explicit_variable_count() {
        let i = parse_ideal_spec(
            r#"{"nvars": 2, "generators": [{"monomial": [1, 0]}, {"monomial": [0, 2]}]}"#,
        )
        .unwrap();
        assert_eq!(i.nvars(), 2);
        assert_eq!(i.hilbert_data().unwrap().values, vec![1, 1]);
    }

    #[test]
    fn malformed() {
        assert!(parse_ideal_spec("[]").is_err());
        assert!(parse_ideal_spec(r#"[{"form": [1, 1], "power": 2}]"#).is_err());
        assert!(parse_ideal_spec(r#"[{"form": [0, 0, 0], "power": 2}]"#).is_err());
        assert!(parse_ideal_spec(r#"["x + y^2"]"#).is_err());
        assert!(parse_ideal_spec("not json").is_err());
    }
}
