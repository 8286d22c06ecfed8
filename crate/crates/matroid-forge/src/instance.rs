//! The JSON instance format: a ground set, a matroid descriptor, and a
//! partition descriptor.

use crate::config::Thresholds;
use crate::error::{Error, Result};
use crate::explicit::ExplicitMatroid;
use crate::matroid::Matroid;
use crate::set::{GroundSet, Subset, MAX_ELEMENTS};
use crate::zoo::{GraphicMatroid, LinearMatroidGf2, Part, PartitionMatroid, UniformMatroid};
use serde::{Deserialize, Serialize};
use std::sync::Arc;

/// On-disk instance document:
/// `{"elements":[...], "M":{"type":...}, "N":{"parts":[...]}}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub elements: Vec<u32>,
    #[serde(rename = "M")]
    pub m: MatroidDescriptor,
    #[serde(rename = "N")]
    pub n: PartitionDescriptor,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum MatroidDescriptor {
    Uniform { rank: usize },
    Graphic { edges: Vec<(u32, u32, u32)> },
    LinearGf2 { dim: usize, columns: Vec<(u32, Vec<u8>)> },
    Explicit { independent: Vec<Vec<u32>> },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PartitionDescriptor {
    pub parts: Vec<PartDescriptor>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PartDescriptor {
    pub elements: Vec<u32>,
    pub cap: usize,
}

impl InstanceFile {
    /// Ground set after validation: ids distinct and below [`MAX_ELEMENTS`].
    pub fn ground(&self) -> Result<GroundSet> {
        let mut mask = Subset::EMPTY;
        for &e in &self.elements {
            if e >= MAX_ELEMENTS {
                return Err(Error::InvalidArgument(format!(
                    "elements: id {e} exceeds the supported maximum {}",
                    MAX_ELEMENTS - 1
                )));
            }
            if mask.contains(e) {
                return Err(Error::InvalidArgument(format!("elements: duplicate id {e}")));
            }
            mask.insert(e);
        }
        Ok(GroundSet::new(mask))
    }

    /// Instantiates both matroids with validation. Explicit descriptors get a
    /// full axiom check when the ground fits the axiom threshold; every
    /// instantiated matroid gets a spot axiom check at that size as well.
    pub fn instantiate(
        &self,
        thresholds: &Thresholds,
    ) -> Result<(Arc<dyn Matroid>, PartitionMatroid)> {
        let (m, n) = self.instantiate_lenient()?;
        let snapshot_fits = m
            .ground()
            .max_element()
            .is_none_or(|max| max <= crate::explicit::EXPLICIT_MAX_ELEMENT);
        if m.ground().len() <= thresholds.axioms && snapshot_fits {
            let spot = ExplicitMatroid::from_matroid(&*m)?.validate(thresholds)?;
            if !spot.passed() {
                return Err(Error::InvalidMatroid(spot));
            }
        }
        Ok((m, n))
    }

    /// Instantiation with structural validation only; explicit families must
    /// still contain the empty set and be downward closed.
    pub fn instantiate_lenient(&self) -> Result<(Arc<dyn Matroid>, PartitionMatroid)> {
        let ground = self.ground()?;
        let m: Arc<dyn Matroid> = match &self.m {
            MatroidDescriptor::Uniform { rank } => {
                Arc::new(UniformMatroid::new(ground, *rank).map_err(|e| prefix("M", e))?)
            }
            MatroidDescriptor::Graphic { edges } => {
                let g = GraphicMatroid::new(edges).map_err(|e| prefix("M.edges", e))?;
                if g.ground() != ground {
                    return Err(Error::InvalidArgument(
                        "M.edges: edge ids must match the element list".into(),
                    ));
                }
                Arc::new(g)
            }
            MatroidDescriptor::LinearGf2 { dim, columns } => {
                let l =
                    LinearMatroidGf2::from_bit_rows(*dim, columns).map_err(|e| prefix("M.columns", e))?;
                if l.ground() != ground {
                    return Err(Error::InvalidArgument(
                        "M.columns: column ids must match the element list".into(),
                    ));
                }
                Arc::new(l)
            }
            MatroidDescriptor::Explicit { independent } => {
                let family: Vec<Subset> = independent
                    .iter()
                    .map(|set| Subset::from_elements(set.iter().copied()))
                    .collect();
                for (i, set) in independent.iter().enumerate() {
                    for &e in set {
                        if e >= MAX_ELEMENTS {
                            return Err(Error::InvalidArgument(format!(
                                "M.independent[{i}]: id {e} exceeds the supported maximum"
                            )));
                        }
                    }
                }
                Arc::new(ExplicitMatroid::new(ground, &family).map_err(|e| prefix("M.independent", e))?)
            }
        };

        let mut parts = Vec::with_capacity(self.n.parts.len());
        for (i, part) in self.n.parts.iter().enumerate() {
            for &e in &part.elements {
                if e >= MAX_ELEMENTS {
                    return Err(Error::InvalidArgument(format!(
                        "N.parts[{i}]: id {e} exceeds the supported maximum"
                    )));
                }
            }
            parts.push(Part {
                elements: Subset::from_elements(part.elements.iter().copied()),
                cap: part.cap,
            });
        }
        let n = PartitionMatroid::new(parts).map_err(|e| prefix("N.parts", e))?;
        if n.ground() != ground && !(self.n.parts.is_empty() && ground.is_empty()) {
            return Err(Error::InvalidArgument(
                "N.parts: parts must partition the element list".into(),
            ));
        }
        Ok((m, n))
    }
}

fn prefix(path: &str, e: Error) -> Error {
    Error::InvalidArgument(format!("{path}: {e}"))
}

/// Parses and instantiates an instance document.
pub fn parse_instance(
    text: &str,
    thresholds: &Thresholds,
) -> Result<(Arc<dyn Matroid>, PartitionMatroid)> {
    let file: InstanceFile = serde_json::from_str(text)
        .map_err(|e| Error::InvalidArgument(format!("instance document: {e}")))?;
    file.instantiate(thresholds)
}

/// Canonical serialization (pretty JSON with sorted sets).
pub fn serialize_instance(file: &InstanceFile) -> String {
    let mut canonical = file.clone();
    canonical.elements.sort_unstable();
    for part in &mut canonical.n.parts {
        part.elements.sort_unstable();
    }
    if let MatroidDescriptor::Explicit { independent } = &mut canonical.m {
        for set in independent.iter_mut() {
            set.sort_unstable();
        }
        independent.sort();
    }
    serde_json::to_string_pretty(&canonical).expect("instance documents always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_descriptor_parses() {
        let text = r#"{"elements":[0,1,2,3,4],"M":{"type":"uniform","rank":2},
                       "N":{"parts":[{"elements":[0,1,2,3,4],"cap":1}]}}"#;
        let (m, n) = parse_instance(text, &Thresholds::default()).unwrap();
        assert_eq!(m.rank(m.ground().mask()).unwrap(), 2);
        assert_eq!(n.num_parts(), 1);
    }

    #[test]
    fn partition_parts_parse_into_the_expected_sum() {
        let text = r#"{"elements":[0,1,2,3],"M":{"type":"uniform","rank":4},
                       "N":{"parts":[{"elements":[0,1],"cap":1},{"elements":[2,3],"cap":1}]}}"#;
        let (_, n) = parse_instance(text, &Thresholds::default()).unwrap();
        assert!(n.indep(Subset::from_elements([0, 2])));
        assert!(!n.indep(Subset::from_elements([0, 1])));
    }

    #[test]
    fn explicit_without_downward_closure_is_an_axiom_error() {
        let text = r#"{"elements":[0,1],"M":{"type":"explicit","independent":[[],[0],[0,1]]},
                       "N":{"parts":[{"elements":[0,1],"cap":1}]}}"#;
        let err = parse_instance(text, &Thresholds::default());
        assert!(matches!(err, Err(Error::InvalidArgument(msg)) if msg.contains("M.independent")));
    }

    #[test]
    fn parts_must_cover_the_elements() {
        let text = r#"{"elements":[0,1,2],"M":{"type":"uniform","rank":1},
                       "N":{"parts":[{"elements":[0,1],"cap":1}]}}"#;
        assert!(parse_instance(text, &Thresholds::default()).is_err());
    }

    #[test]
    fn cap_above_part_size_is_rejected() {
        let text = r#"{"elements":[0,1],"M":{"type":"uniform","rank":1},
                       "N":{"parts":[{"elements":[0,1],"cap":3}]}}"#;
        assert!(parse_instance(text, &Thresholds::default()).is_err());
    }

    #[test]
    fn unknown_matroid_type_is_a_parse_error() {
        let text = r#"{"elements":[0],"M":{"type":"mystery"},"N":{"parts":[{"elements":[0],"cap":1}]}}"#;
        assert!(parse_instance(text, &Thresholds::default()).is_err());
    }

    #[test]
    fn round_trip_preserves_the_document() {
        let file = InstanceFile {
            elements: vec![0, 1, 2],
            m: MatroidDescriptor::Graphic { edges: vec![(0, 0, 1), (1, 1, 2), (2, 2, 0)] },
            n: PartitionDescriptor {
                parts: vec![
                    PartDescriptor { elements: vec![0, 1], cap: 1 },
                    PartDescriptor { elements: vec![2], cap: 1 },
                ],
            },
        };
        let text = serialize_instance(&file);
        let back: InstanceFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back, file);
    }

    #[test]
    fn trivial_instance_parses() {
        let text = r#"{"elements":[],"M":{"type":"uniform","rank":0},"N":{"parts":[]}}"#;
        let (m, n) = parse_instance(text, &Thresholds::default()).unwrap();
        assert!(m.ground().is_empty());
        assert_eq!(n.num_parts(), 0);
    }

    #[test]
    fn small_instances_with_large_ids_parse() {
        // Two elements but identifiers beyond the explicit-snapshot cap; the
        // spot check must step aside rather than reject.
        let text = r#"{"elements":[100,101],"M":{"type":"uniform","rank":1},
                       "N":{"parts":[{"elements":[100,101],"cap":1}]}}"#;
        let (m, _) = parse_instance(text, &Thresholds::default()).unwrap();
        assert_eq!(m.ground().len(), 2);
        assert!(m.indep(Subset::singleton(100)));
    }
}
