use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::{close_class, Perm, TranspositionClass};
use crate::error::GroupError;

/// A group given by permutation generators and seed involutions.
///
/// `sha256` is the hex digest of the compact JSON array
/// `[degree, generators, seeds]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
    pub seeds: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_class_size: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sha256: Option<String>,
}

impl GroupFile {
    pub fn checksum(&self) -> String {
        let payload = serde_json::to_string(&(self.degree, &self.generators, &self.seeds))
            .expect("plain data serializes");
        hex::encode(Sha256::digest(payload.as_bytes()))
    }

    /// Validates checksum, permutations and class size, and closes the class.
    pub fn load(&self) -> Result<TranspositionClass, GroupError> {
        if let Some(expected) = &self.sha256 {
            let computed = self.checksum();
            if !computed.eq_ignore_ascii_case(expected) {
                return Err(GroupError::ChecksumMismatch {
                    name: self.name.clone(),
                    expected: expected.clone(),
                    computed,
                });
            }
        }
        let perms = |vs: &[Vec<usize>]| -> Result<Vec<Perm>, GroupError> {
            vs.iter()
                .map(|v| {
                    if v.len() != self.degree {
                        return Err(GroupError::DegreeMismatch(self.degree, v.len()));
                    }
                    Perm::new(v.clone())
                })
                .collect()
        };
        let gens = perms(&self.generators)?;
        let seeds = perms(&self.seeds)?;
        let class = close_class(&self.name, &gens, &seeds)?;
        if let Some(expected) = self.expected_class_size {
            if class.len() != expected {
                return Err(GroupError::ClassSizeMismatch {
                    name: self.name.clone(),
                    expected,
                    found: class.len(),
                });
            }
        }
        Ok(class)
    }
}

const CATALOG: &[(&str, &str)] = &[
    ("S3", include_str!("../../data/groups/s3.json")),
    ("S4", include_str!("../../data/groups/s4.json")),
    ("S5", include_str!("../../data/groups/s5.json")),
    ("W(D4)", include_str!("../../data/groups/wd4.json")),
    ("3^3:S4", include_str!("../../data/groups/3_3_s4.json")),
];

pub fn catalog_names() -> Vec<&'static str> {
    CATALOG.iter().map(|(n, _)| *n).collect()
}

pub fn load_group_json(text: &str) -> Result<TranspositionClass, GroupError> {
    let file: GroupFile =
        serde_json::from_str(text).map_err(|e| GroupError::Format(e.to_string()))?;
    file.load()
}

/// Loads a built-in group by name (`S3`, `S4`, `S5`, `W(D4)`, `3^3:S4`).
pub fn catalog_load(name: &str) -> Result<TranspositionClass, GroupError> {
    let (_, text) = CATALOG
        .iter()
        .find(|(n, _)| n.eq_ignore_ascii_case(name))
        .ok_or_else(|| GroupError::UnknownGroup(name.to_string()))?;
    load_group_json(text)
}
