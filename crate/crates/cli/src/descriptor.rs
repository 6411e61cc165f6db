//! JSON module descriptors.
//!
//! ```json
//! {"representation": "zfinite", "name": "klein", "relations": [], "action": [[-1]]}
//! {"representation": "lattice", "action": [["1/3"]], "generators": [[1]]}
//! {"representation": "laurent", "gens": 1, "relations": [[{"coeffs": [1, 1], "shift": 0}]]}
//! ```
//!
//! Rationals are written as `"p/q"` strings; integers may be JSON numbers or decimal strings.
//! A Laurent entry is `t^-shift · (coeffs[0] + coeffs[1] t + ...)`.

use std::fmt;
use std::str::FromStr;

use hztower::exactalg::{IntMatrix, IntPoly, RatMatrix};
use hztower::zcmod::{LatticeModule, LaurentEntry, LaurentModule, ZCModule, ZFinite};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Debug, thiserror::Error)]
pub enum DescriptorError {
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Shape(String),
    #[error("invalid module: {0}")]
    Module(#[from] hztower::Error),
}

/// An exact rational read from a JSON number or string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scalar(pub BigRational);

impl Scalar {
    fn integer(&self) -> Option<BigInt> {
        self.0.is_integer().then(|| self.0.to_integer())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Scalar {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        let parse = |x: &str| BigInt::from_str(x.trim()).map_err(|_| format!("not an integer: {x:?}"));
        match s.split_once('/') {
            Some((p, q)) => {
                let q = parse(q)?;
                if q == BigInt::from(0) {
                    return Err(format!("zero denominator in {s:?}"));
                }
                Ok(Scalar(BigRational::new(parse(p)?, q)))
            }
            None => Ok(Scalar(BigRational::from_integer(parse(s)?))),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.integer().and_then(|n| n.to_i64()) {
            Some(n) => s.serialize_i64(n),
            None => s.serialize_str(&self.to_string()),
        }
    }
}

struct ScalarVisitor;

impl Visitor<'_> for ScalarVisitor {
    type Value = Scalar;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "an integer or a \"p/q\" string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Scalar, E> {
        Ok(Scalar(BigRational::from_integer(v.into())))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Scalar, E> {
        Ok(Scalar(BigRational::from_integer(v.into())))
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> Result<Scalar, E> {
        Err(E::custom(format!("floating point value {v}; write rationals as \"p/q\" strings")))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<Scalar, E> {
        v.parse().map_err(E::custom)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        d.deserialize_any(ScalarVisitor)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LaurentTerm {
    pub coeffs: Vec<Scalar>,
    #[serde(default)]
    pub shift: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "representation", rename_all = "lowercase")]
pub enum ModuleDescriptor {
    Zfinite {
        #[serde(skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        relations: Vec<Vec<Scalar>>,
        action: Vec<Vec<Scalar>>,
    },
    Lattice {
        #[serde(skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        action: Vec<Vec<Scalar>>,
        generators: Vec<Vec<Scalar>>,
    },
    Laurent {
        #[serde(skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        gens: usize,
        relations: Vec<Vec<LaurentTerm>>,
    },
}

#[derive(Deserialize)]
#[serde(rename_all = "lowercase")]
enum Representation {
    Zfinite,
    Lattice,
    Laurent,
}

/// A relation entry: a scalar for `zfinite`, a term for `laurent`.
enum Entry {
    Scalar(Scalar),
    Term(LaurentTerm),
}

impl<'de> Deserialize<'de> for Entry {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = Entry;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "an integer, a \"p/q\" string or a Laurent term")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Entry, E> {
                ScalarVisitor.visit_i64(v).map(Entry::Scalar)
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Entry, E> {
                ScalarVisitor.visit_u64(v).map(Entry::Scalar)
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> Result<Entry, E> {
                ScalarVisitor.visit_f64(v).map(Entry::Scalar)
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Entry, E> {
                ScalarVisitor.visit_str(v).map(Entry::Scalar)
            }

            fn visit_map<A: de::MapAccess<'de>>(self, map: A) -> Result<Entry, A::Error> {
                LaurentTerm::deserialize(de::value::MapAccessDeserializer::new(map)).map(Entry::Term)
            }
        }
        d.deserialize_any(V)
    }
}

/// Flat form read field by field, so parse errors keep their positions.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDescriptor {
    representation: Representation,
    #[serde(default)]
    name: Option<String>,
    #[serde(default)]
    action: Option<Vec<Vec<Scalar>>>,
    #[serde(default)]
    generators: Option<Vec<Vec<Scalar>>>,
    #[serde(default)]
    gens: Option<usize>,
    #[serde(default)]
    relations: Option<Vec<Vec<Entry>>>,
}

impl RawDescriptor {
    fn into_descriptor(self) -> Result<ModuleDescriptor, String> {
        let need = |f: Option<Vec<Vec<Scalar>>>, what: &str| f.ok_or_else(|| format!("missing field `{what}`"));
        let scalar_rows = |rows: Vec<Vec<Entry>>| {
            rows.into_iter()
                .map(|r| {
                    r.into_iter()
                        .map(|e| match e {
                            Entry::Scalar(s) => Ok(s),
                            Entry::Term(_) => Err("relations of a zfinite module are integer rows".to_string()),
                        })
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()
        };
        let forbid = |present: bool, field: &str, rep: &str| {
            if present {
                Err(format!("field `{field}` is not used by {rep} descriptors"))
            } else {
                Ok(())
            }
        };
        let RawDescriptor { representation, name, action, generators, gens, relations } = self;
        match representation {
            Representation::Zfinite => {
                forbid(generators.is_some(), "generators", "zfinite")?;
                forbid(gens.is_some(), "gens", "zfinite")?;
                let relations = scalar_rows(relations.unwrap_or_default())?;
                Ok(ModuleDescriptor::Zfinite { name, relations, action: need(action, "action")? })
            }
            Representation::Lattice => {
                forbid(relations.is_some(), "relations", "lattice")?;
                forbid(gens.is_some(), "gens", "lattice")?;
                Ok(ModuleDescriptor::Lattice { name, action: need(action, "action")?, generators: need(generators, "generators")? })
            }
            Representation::Laurent => {
                forbid(action.is_some(), "action", "laurent")?;
                forbid(generators.is_some(), "generators", "laurent")?;
                let relations = relations
                    .unwrap_or_default()
                    .into_iter()
                    .map(|r| {
                        r.into_iter()
                            .map(|e| match e {
                                Entry::Term(t) => Ok(t),
                                Entry::Scalar(s) => Ok(LaurentTerm { coeffs: vec![s], shift: 0 }),
                            })
                            .collect::<Result<Vec<_>, String>>()
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(ModuleDescriptor::Laurent { name, gens: gens.ok_or("missing field `gens`")?, relations })
            }
        }
    }
}

impl<'de> Deserialize<'de> for ModuleDescriptor {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        RawDescriptor::deserialize(d)?.into_descriptor().map_err(de::Error::custom)
    }
}

fn int(s: &Scalar, what: &str) -> Result<BigInt, DescriptorError> {
    s.integer().ok_or_else(|| DescriptorError::Shape(format!("{what} must be integral, found {s}")))
}

fn int_matrix(rows: &[Vec<Scalar>], cols: usize, what: &str) -> Result<IntMatrix, DescriptorError> {
    let rows = rows
        .iter()
        .map(|r| r.iter().map(|x| int(x, what)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    IntMatrix::from_rows_with_cols(rows, cols).map_err(|e| DescriptorError::Shape(format!("{what}: {e}")))
}

fn rat_rows(rows: &[Vec<Scalar>]) -> Vec<Vec<BigRational>> {
    rows.iter().map(|r| r.iter().map(|x| x.0.clone()).collect()).collect()
}

fn scalars_int(m: &IntMatrix) -> Vec<Vec<Scalar>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(|x| Scalar(BigRational::from_integer(x.clone()))).collect()).collect()
}

fn scalars_rat(rows: impl Iterator<Item = Vec<BigRational>>) -> Vec<Vec<Scalar>> {
    rows.map(|r| r.into_iter().map(Scalar).collect()).collect()
}

impl ModuleDescriptor {
    pub fn parse(text: &str) -> Result<Self, DescriptorError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("descriptors serialize")
    }

    pub fn name(&self) -> Option<&str> {
        match self {
            ModuleDescriptor::Zfinite { name, .. }
            | ModuleDescriptor::Lattice { name, .. }
            | ModuleDescriptor::Laurent { name, .. } => name.as_deref(),
        }
    }

    /// Builds the module and checks it with `validate`.
    pub fn to_module(&self) -> Result<ZCModule, DescriptorError> {
        let m = match self {
            ModuleDescriptor::Zfinite { relations, action, .. } => {
                let g = action.len();
                let a = int_matrix(action, g, "action")?;
                if !a.is_square() {
                    return Err(DescriptorError::Shape(format!("action is {}x{}, expected square", a.rows(), a.cols())));
                }
                let r = int_matrix(relations, g, "relations")?;
                ZCModule::ZFinite(ZFinite::new(r, a))
            }
            ModuleDescriptor::Lattice { action, generators, .. } => {
                let n = action.len();
                let a = RatMatrix::from_rows_with_cols(rat_rows(action), n)
                    .map_err(|e| DescriptorError::Shape(format!("action: {e}")))?;
                if !a.is_square() {
                    return Err(DescriptorError::Shape(format!("action is {}x{}, expected square", a.rows(), a.cols())));
                }
                ZCModule::Lattice(LatticeModule::new(a, rat_rows(generators)))
            }
            ModuleDescriptor::Laurent { gens, relations, .. } => {
                let rel = relations
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|t| {
                                let c = t.coeffs.iter().map(|x| int(x, "Laurent coefficient")).collect::<Result<Vec<_>, _>>()?;
                                Ok(LaurentEntry::new(IntPoly::new(c), t.shift))
                            })
                            .collect::<Result<Vec<_>, DescriptorError>>()
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                ZCModule::Laurent(LaurentModule::new(*gens, rel))
            }
        };
        m.validate()?;
        Ok(m)
    }

    pub fn from_module(m: &ZCModule, name: Option<&str>) -> Self {
        let name = name.map(str::to_string);
        match m {
            ZCModule::ZFinite(z) => {
                ModuleDescriptor::Zfinite { name, relations: scalars_int(&z.relations), action: scalars_int(&z.action) }
            }
            ZCModule::Lattice(l) => ModuleDescriptor::Lattice {
                name,
                action: scalars_rat((0..l.action.rows()).map(|i| l.action.row(i).to_vec())),
                generators: scalars_rat(l.generators.iter().cloned()),
            },
            ZCModule::Laurent(p) => ModuleDescriptor::Laurent {
                name,
                gens: p.gens,
                relations: p
                    .relations
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|e| LaurentTerm {
                                coeffs: e.poly.coeffs().iter().map(|c| Scalar(BigRational::from_integer(c.clone()))).collect(),
                                shift: e.shift,
                            })
                            .collect()
                    })
                    .collect(),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalars() {
        assert_eq!("3/6".parse::<Scalar>().unwrap().to_string(), "1/2");
        assert_eq!("-4/2".parse::<Scalar>().unwrap().to_string(), "-2");
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("x".parse::<Scalar>().is_err());
        let big = "123456789012345678901234567890";
        let s: Scalar = serde_json::from_str(&format!("\"{big}\"")).unwrap();
        assert_eq!(serde_json::to_string(&s).unwrap(), format!("\"{big}\""));
        assert!(serde_json::from_str::<Scalar>("1.5").is_err());
    }

    #[test]
    fn parse_each_representation() {
        let k = ModuleDescriptor::parse(r#"{"representation": "zfinite", "action": [[-1]]}"#).unwrap();
        assert_eq!(k.to_module().unwrap(), ZCModule::free(IntMatrix::from_i64(&[&[-1]])));
        let l = ModuleDescriptor::parse(r#"{"representation": "lattice", "action": [["3"]], "generators": [["1/1"]]}"#).unwrap();
        assert!(matches!(l.to_module().unwrap(), ZCModule::Lattice(_)));
        let p = ModuleDescriptor::parse(
            r#"{"representation": "laurent", "gens": 1, "relations": [[{"coeffs": [1, 1], "shift": 0}]]}"#,
        )
        .unwrap();
        assert!(matches!(p.to_module().unwrap(), ZCModule::Laurent(_)));
    }

    #[test]
    fn errors_carry_locations() {
        let e = ModuleDescriptor::parse("{\n  \"representation\": \"zfinite\",\n  \"action\": [[1.5]]\n}").unwrap_err();
        assert!(e.to_string().contains("line 3"), "{e}");
        let e = ModuleDescriptor::parse(r#"{"representation": "zfinite", "action": [[2]]}"#).unwrap().to_module();
        assert!(e.is_err());
        let e = ModuleDescriptor::parse(r#"{"representation": "zfinite", "action": [["1/2"]]}"#).unwrap().to_module();
        assert!(e.unwrap_err().to_string().contains("integral"));
        assert!(ModuleDescriptor::parse(r#"{"representation": "other", "action": []}"#).is_err());
    }
}
