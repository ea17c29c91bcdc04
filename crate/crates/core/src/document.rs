//! TOML ring documents.
//!
//! ```toml
//! provenance = "virasoro minimal (2,5)"
//! generators = ["x^2"]
//!
//! [truncation]
//! d = 16
//! p = 8
//!
//! [[variables]]
//! name = "x"
//! weight = 2
//! ```

use crate::error::{Error, Result};
use crate::polyring::{Polynomial, Ring, RingSpec};
use crate::voa::C2Presentation;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VariableDecl {
    pub name: String,
    pub weight: u32,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Truncation {
    #[serde(default, alias = "D", skip_serializing_if = "Option::is_none")]
    pub d: Option<u32>,
    #[serde(default, alias = "P", skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
    #[serde(default)]
    pub generators: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncation: Option<Truncation>,
    pub variables: Vec<VariableDecl>,
}

impl RingDocument {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Document(e.message().to_string()))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("ring documents always serialise")
    }

    /// Parses the ring and generators.
    pub fn build(&self) -> Result<(Ring, Vec<Polynomial>)> {
        let ring = RingSpec::new(self.variables.iter().map(|v| (v.name.clone(), v.weight)))?;
        let gens = self.generators.iter().map(|g| Polynomial::parse(&ring, g)).collect::<Result<_>>()?;
        Ok((ring, gens))
    }

    pub fn from_presentation(p: &C2Presentation, truncation: Option<Truncation>) -> Self {
        RingDocument {
            provenance: Some(p.provenance.describe()),
            generators: p.generators.iter().map(|g| g.to_string()).collect(),
            truncation,
            variables: p
                .ring
                .names()
                .iter()
                .zip(p.ring.weights())
                .map(|(n, &w)| VariableDecl { name: n.clone(), weight: w })
                .collect(),
        }
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.truncation.as_ref().and_then(|t| t.d)
    }

    pub fn max_level(&self) -> Option<usize> {
        self.truncation.as_ref().and_then(|t| t.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::voa::{virasoro_c2, VirasoroMode};

    #[test]
    fn roundtrip() {
        let p = virasoro_c2(VirasoroMode::Minimal { p: 2, q: 5 }).unwrap();
        let doc = RingDocument::from_presentation(&p, Some(Truncation { d: Some(16), p: Some(8) }));
        let text = doc.to_toml();
        let back = RingDocument::from_toml(&text).unwrap();
        assert_eq!(back, doc);
        let (ring, gens) = back.build().unwrap();
        assert_eq!(ring.weight(0), 2);
        assert_eq!(gens[0].to_string(), "x^2");
    }

    #[test]
    fn uppercase_truncation_keys() {
        let doc = RingDocument::from_toml("generators = [\"x^2\"]\n[truncation]\nD = 6\nP = 3\n[[variables]]\nname = \"x\"\nweight = 1\n").unwrap();
        assert_eq!((doc.max_degree(), doc.max_level()), (Some(6), Some(3)));
    }

    #[test]
    fn errors() {
        assert!(matches!(RingDocument::from_toml("variables = 3"), Err(Error::Document(_))));
        let doc = RingDocument::from_toml("generators = [\"x + z\"]\n[[variables]]\nname = \"x\"\nweight = 1\n").unwrap();
        assert!(matches!(doc.build(), Err(Error::UnknownVariable { .. })));
    }
}
