//! The algebra interchange file.

use std::path::Path;

use hochlie::assoc::AlgebraMeta;
use hochlie::{AssocAlgebra, PrimeField};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::CliError;

/// Structure constants `b_i b_j = Σ c b_k` as sparse `[i, j, k, c]` rows.
///
/// Canonical files list `mult` sorted with nonzero canonical coefficients and
/// are pretty-printed JSON with a trailing newline; parsing and re-emitting a
/// canonical file reproduces it byte for byte.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFileV1 {
    pub field_char: u64,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Vec<u64>,
    pub mult: Vec<[u64; 4]>,
    #[serde(default = "empty_object")]
    pub meta: Value,
}

fn empty_object() -> Value {
    Value::Object(Default::default())
}

impl AlgebraFileV1 {
    pub fn from_algebra(a: &AssocAlgebra) -> Self {
        let mut mult: Vec<[u64; 4]> =
            a.structure_constants().into_iter().map(|(i, j, k, c)| [i as u64, j as u64, k as u64, c as u64]).collect();
        mult.sort_unstable();
        AlgebraFileV1 {
            field_char: a.field().p() as u64,
            dim: a.dim(),
            basis: a.labels().to_vec(),
            unit: a.unit().iter().map(|&c| c as u64).collect(),
            mult,
            meta: serde_json::to_value(a.meta()).unwrap_or_else(|_| empty_object()),
        }
    }

    /// Parses JSON text; schema violations carry the JSON path of the offence.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        let file: AlgebraFileV1 = serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            CliError::Input(format!("{path}: {}", e.into_inner()))
        })?;
        file.validate()?;
        Ok(file)
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text).map_err(|e| match e {
            CliError::Input(m) => CliError::Input(format!("{}: {m}", path.display())),
            other => other,
        })
    }

    pub fn emit(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("algebra files always serialize");
        s.push('\n');
        s
    }

    pub fn write(&self, path: &Path) -> Result<(), CliError> {
        std::fs::write(path, self.emit()).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
    }

    fn validate(&self) -> Result<(), CliError> {
        let bad = |path: String, msg: String| Err(CliError::Input(format!("{path}: {msg}")));
        let p = self.field_char;
        if PrimeField::new(u32::try_from(p).unwrap_or(0)).is_err() {
            return bad("field_char".into(), format!("{p} is not a supported prime"));
        }
        if self.dim == 0 {
            return bad("dim".into(), "must be at least 1".into());
        }
        if self.basis.len() != self.dim {
            return bad("basis".into(), format!("{} labels for dimension {}", self.basis.len(), self.dim));
        }
        if self.unit.len() != self.dim {
            return bad("unit".into(), format!("{} coefficients for dimension {}", self.unit.len(), self.dim));
        }
        for (i, &c) in self.unit.iter().enumerate() {
            if c >= p {
                return bad(format!("unit[{i}]"), format!("coefficient {c} is not in [0, {}]", p - 1));
            }
        }
        for (r, row) in self.mult.iter().enumerate() {
            for (slot, &x) in row[..3].iter().enumerate() {
                if x >= self.dim as u64 {
                    return bad(format!("mult[{r}][{slot}]"), format!("index {x} out of range for dimension {}", self.dim));
                }
            }
            if row[3] >= p {
                return bad(format!("mult[{r}][3]"), format!("coefficient {} is not in [0, {}]", row[3], p - 1));
            }
        }
        if !self.meta.is_object() {
            return bad("meta".into(), "must be an object".into());
        }
        self.meta_fields()?;
        Ok(())
    }

    /// The recognised parts of `meta`; other keys are carried along untouched.
    fn meta_fields(&self) -> Result<AlgebraMeta, CliError> {
        serde_path_to_error::deserialize(&self.meta).map_err(|e| {
            let path = e.path().to_string();
            CliError::Input(format!("meta.{path}: {}", e.into_inner()))
        })
    }

    pub fn to_algebra(&self) -> Result<AssocAlgebra, CliError> {
        let field = PrimeField::new(self.field_char as u32).map_err(|e| CliError::Input(format!("field_char: {e}")))?;
        let meta = self.meta_fields()?;
        let products = self.mult.iter().map(|r| (r[0] as usize, r[1] as usize, r[2] as usize, r[3] as u32));
        let unit = self.unit.iter().map(|&c| c as u32).collect();
        AssocAlgebra::new(field, self.dim, products.collect::<Vec<_>>(), unit, self.basis.clone(), meta)
            .map_err(|e| CliError::Input(format!("mult: {e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hochlie::assoc::group_algebra;
    use hochlie::GroupSpec;

    fn kc4() -> AssocAlgebra {
        group_algebra(&GroupSpec::Cyclic { n: 4 }.build().unwrap(), PrimeField::new(2).unwrap()).unwrap()
    }

    #[test]
    fn emitted_files_round_trip() {
        let a = kc4();
        let file = AlgebraFileV1::from_algebra(&a);
        let text = file.emit();
        let parsed = AlgebraFileV1::parse(&text).unwrap();
        assert_eq!(parsed, file);
        assert_eq!(parsed.emit(), text);
        assert_eq!(parsed.to_algebra().unwrap(), a);
    }

    #[test]
    fn unknown_meta_keys_survive() {
        let mut file = AlgebraFileV1::from_algebra(&kc4());
        file.meta["note"] = Value::String("kept".into());
        let again = AlgebraFileV1::parse(&file.emit()).unwrap();
        assert_eq!(again.meta["note"], "kept");
        assert_eq!(again.emit(), file.emit());
    }

    #[test]
    fn errors_are_located() {
        let mut file = AlgebraFileV1::from_algebra(&kc4());
        file.mult[5][2] = 9;
        let err = AlgebraFileV1::parse(&file.emit()).unwrap_err().to_string();
        assert!(err.contains("mult[5][2]"), "{err}");

        let text = kc4_text().replace("\"dim\": 4", "\"dim\": \"four\"");
        let err = AlgebraFileV1::parse(&text).unwrap_err().to_string();
        assert!(err.contains("dim"), "{err}");

        let text = kc4_text().replace("\"family\": \"cyclic\"", "\"family\": \"klein\"");
        let err = AlgebraFileV1::parse(&text).unwrap_err().to_string();
        assert!(err.contains("meta.group"), "{err}");
    }

    fn kc4_text() -> String {
        AlgebraFileV1::from_algebra(&kc4()).emit()
    }

    #[test]
    fn non_associative_tables_are_rejected() {
        let mut file = AlgebraFileV1::from_algebra(&kc4());
        // b_1 b_1 = b_3 instead of b_2
        let row = file.mult.iter_mut().find(|r| r[0] == 1 && r[1] == 1).unwrap();
        row[2] = 3;
        assert!(matches!(AlgebraFileV1::parse(&file.emit()).unwrap().to_algebra(), Err(CliError::Input(_))));
    }
}
