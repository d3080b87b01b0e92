//! JSON wire formats for cyclotomic values, class functions, and series.

use equiseries_core::grpchar::cyclotomic::{format_rational, parse_rational};
use equiseries_core::grpchar::{ClassFunction, Cyclotomic, EquivariantSeries};
use serde::{Deserialize, Serialize};

/// `{"conductor": m, "coeffs": ["p/q", …]}` — power-basis coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclotomicJson {
    pub conductor: u32,
    pub coeffs: Vec<String>,
}

impl CyclotomicJson {
    pub fn from_core(value: &Cyclotomic) -> Self {
        CyclotomicJson {
            conductor: value.conductor(),
            coeffs: value.coeffs().iter().map(format_rational).collect(),
        }
    }

    pub fn to_core(&self) -> Result<Cyclotomic, String> {
        let terms: Result<Vec<(i64, _)>, String> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, s)| parse_rational(s).map(|r| (i as i64, r)))
            .collect();
        Ok(Cyclotomic::from_terms(self.conductor.max(1), &terms?))
    }
}

/// One value per conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFunctionJson {
    pub values: Vec<CyclotomicJson>,
}

impl ClassFunctionJson {
    pub fn from_core(cf: &ClassFunction) -> Self {
        ClassFunctionJson {
            values: cf.values().iter().map(CyclotomicJson::from_core).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalFormJson {
    pub numerator: Vec<ClassFunctionJson>,
    pub denom_exp: usize,
}

/// `{"truncation": N, "coeffs": […], "rational": {…} | null}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub truncation: usize,
    pub coeffs: Vec<ClassFunctionJson>,
    pub rational: Option<RationalFormJson>,
}

impl SeriesJson {
    pub fn from_core(series: &EquivariantSeries) -> Self {
        SeriesJson {
            truncation: series.truncation(),
            coeffs: series
                .coeffs()
                .iter()
                .map(ClassFunctionJson::from_core)
                .collect(),
            rational: series.rational_form().map(|form| RationalFormJson {
                numerator: form
                    .numerator
                    .iter()
                    .map(ClassFunctionJson::from_core)
                    .collect(),
                denom_exp: form.denom_exp,
            }),
        }
    }
}

/// Human-readable value: the display form of the cyclotomic number.
pub fn display_value(value: &Cyclotomic) -> String {
    format!("{value}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_roundtrip() {
        let z = Cyclotomic::root_of_unity(5, 2);
        let json = CyclotomicJson::from_core(&z);
        assert_eq!(json.conductor, 5);
        let back = json.to_core().unwrap();
        assert_eq!(back, z);
    }

    #[test]
    fn rational_values_have_conductor_one() {
        let half = Cyclotomic::from_rational(parse_rational("1/2").unwrap());
        let json = CyclotomicJson::from_core(&half);
        assert_eq!(json.conductor, 1);
        assert_eq!(json.coeffs, vec!["1/2"]);
    }
}
