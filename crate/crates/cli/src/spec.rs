//! Ring specifications as JSON documents.

use bidlab_core::ideal::MonoidRingCtx;
use bidlab_core::monoid::{ExpVec, ExponentMonoid, MonoidError};
use bidlab_core::rif::{FFamily, RifError, RifRing};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum SpecError {
    #[error("parse error at line {line}, column {column}: {msg}")]
    Parse { line: usize, column: usize, msg: String },
    #[error("invalid ring: {0}")]
    Validation(String),
    #[error("{0}")]
    WrongFamily(String),
}

impl From<MonoidError> for SpecError {
    fn from(e: MonoidError) -> Self {
        SpecError::Validation(e.to_string())
    }
}

impl From<RifError> for SpecError {
    fn from(e: RifError) -> Self {
        SpecError::Validation(e.to_string())
    }
}

fn yes() -> bool {
    true
}

fn naturals() -> Vec<i64> {
    vec![1]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case", deny_unknown_fields)]
pub enum RingSpec {
    NumericalSemigroup {
        generators: Vec<i64>,
        #[serde(default = "yes")]
        localized: bool,
    },
    RootFamily {
        base: i64,
        seed: i64,
        #[serde(default = "yes")]
        include_unit: bool,
        #[serde(default = "yes")]
        localized: bool,
    },
    EvenDegree {
        dim: usize,
        #[serde(default)]
        localized: bool,
    },
    FinGenCone {
        dim: usize,
        generators: Vec<ExpVec>,
        #[serde(default)]
        localized: bool,
    },
    ConstructionA {},
    Km {},
    Rif {
        #[serde(default = "naturals")]
        base: Vec<i64>,
        ideal: Vec<i64>,
        f: FFamily,
    },
}

pub fn parse_ring_spec(text: &str) -> Result<RingSpec, SpecError> {
    let spec: RingSpec = serde_json::from_str(text).map_err(|e| SpecError::Parse {
        line: e.line(),
        column: e.column(),
        msg: e.to_string(),
    })?;
    spec.validate()?;
    Ok(spec)
}

impl RingSpec {
    pub fn validate(&self) -> Result<(), SpecError> {
        match self {
            RingSpec::ConstructionA {} | RingSpec::Km {} => Ok(()),
            RingSpec::Rif { .. } => self.rif_ring().map(|_| ()),
            _ => self.monoid().map(|_| ()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("specs serialize")
    }

    pub fn monoid(&self) -> Result<ExponentMonoid, SpecError> {
        Ok(match self {
            RingSpec::NumericalSemigroup { generators, .. } => ExponentMonoid::numerical(generators)?,
            RingSpec::RootFamily { base, seed, include_unit, .. } => {
                ExponentMonoid::root_family(*base, *seed, *include_unit)?
            }
            RingSpec::EvenDegree { dim, .. } => ExponentMonoid::even_degree(*dim)?,
            RingSpec::FinGenCone { dim, generators, .. } => ExponentMonoid::fin_gen_cone(*dim, generators.clone())?,
            other => return Err(SpecError::WrongFamily(format!("{} is not a monoid ring", other.family()))),
        })
    }

    pub fn localized(&self) -> bool {
        match self {
            RingSpec::NumericalSemigroup { localized, .. }
            | RingSpec::RootFamily { localized, .. }
            | RingSpec::EvenDegree { localized, .. }
            | RingSpec::FinGenCone { localized, .. } => *localized,
            _ => true,
        }
    }

    pub fn ctx(&self) -> Result<MonoidRingCtx, SpecError> {
        Ok(MonoidRingCtx::new(self.monoid()?, self.localized()))
    }

    pub fn rif_ring(&self) -> Result<RifRing, SpecError> {
        match self {
            RingSpec::Rif { base, ideal, f } => Ok(RifRing::new(base, ideal, *f)?),
            other => Err(SpecError::WrongFamily(format!("{} is not an R(I, F) ring", other.family()))),
        }
    }

    pub fn family(&self) -> &'static str {
        match self {
            RingSpec::NumericalSemigroup { .. } => "numerical_semigroup",
            RingSpec::RootFamily { .. } => "root_family",
            RingSpec::EvenDegree { .. } => "even_degree",
            RingSpec::FinGenCone { .. } => "fin_gen_cone",
            RingSpec::ConstructionA {} => "construction_a",
            RingSpec::Km {} => "km",
            RingSpec::Rif { .. } => "rif",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let s = parse_ring_spec(r#"{"family":"numerical_semigroup","generators":[2,3],"localized":true}"#).unwrap();
        assert_eq!(s.ctx().unwrap().monoid.describe(), ExponentMonoid::numerical(&[2, 3]).unwrap().describe());
        let h = parse_ring_spec(r#"{"family":"root_family","base":3,"seed":2}"#).unwrap();
        assert_eq!(h.monoid().unwrap(), ExponentMonoid::root_family(3, 2, true).unwrap());
        assert!(matches!(
            parse_ring_spec(r#"{"family":"numerical_semigroup","generators":[2,4]}"#),
            Err(SpecError::Validation(_))
        ));
    }

    #[test]
    fn rejects_unknown_fields_and_reports_location() {
        assert!(matches!(
            parse_ring_spec(r#"{"family":"km","extra":1}"#),
            Err(SpecError::Parse { .. })
        ));
        match parse_ring_spec("{\n  \"family\": \"numerical_semigroup\",\n  \"generators\": [2, \n") {
            Err(SpecError::Parse { line, .. }) => assert!(line >= 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn round_trips() {
        for text in [
            r#"{"family":"numerical_semigroup","generators":[3,4,5]}"#,
            r#"{"family":"root_family","base":3,"seed":2,"include_unit":false}"#,
            r#"{"family":"even_degree","dim":3}"#,
            r#"{"family":"fin_gen_cone","dim":2,"generators":["(2,0)","(1,1)","(0,2)"]}"#,
            r#"{"family":"construction_a"}"#,
            r#"{"family":"km"}"#,
            r#"{"family":"rif","ideal":[2],"f":"rational_powers"}"#,
        ] {
            let a = parse_ring_spec(text).unwrap();
            let b = parse_ring_spec(&a.to_json()).unwrap();
            assert_eq!(a, b);
            assert_eq!(a.to_json(), b.to_json());
        }
    }
}
