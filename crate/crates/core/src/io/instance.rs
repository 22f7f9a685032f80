use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use super::data::{operator_from_data, AlgebraData, OperatorData, SetExprData};
use crate::algebra::AlgebraDesc;
use crate::error::{Error, Result};
use crate::hilbert_module::ModuleOperator;
use crate::sets::{BoundedSet, EvalParams};

pub const SCHEMA: &str = "hmnc-instance/1";

fn d_samples() -> usize {
    400
}
fn d_max_centers() -> usize {
    16
}
fn d_min_pack() -> usize {
    8
}
fn d_grid_lo() -> f64 {
    1e-3
}
fn d_grid_hi() -> f64 {
    2.0
}
fn d_grid_ratio() -> f64 {
    1.1
}
fn d_seminorms() -> usize {
    24
}
fn d_refine() -> usize {
    96
}
fn d_max_points() -> usize {
    32
}
fn d_max_tries() -> usize {
    2000
}

/// Sampling and search budgets, all optional in the file.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SamplingData {
    #[serde(default = "d_samples")]
    pub samples: usize,
    #[serde(default = "d_max_centers")]
    pub max_centers: usize,
    #[serde(default = "d_min_pack")]
    pub min_pack: usize,
    #[serde(default = "d_grid_lo")]
    pub grid_lo_frac: f64,
    #[serde(default = "d_grid_hi")]
    pub grid_hi_frac: f64,
    #[serde(default = "d_grid_ratio")]
    pub grid_ratio: f64,
    #[serde(default = "d_seminorms")]
    pub seminorms: usize,
    #[serde(default = "d_refine")]
    pub refine_samples: usize,
    #[serde(default = "d_max_points")]
    pub max_points: usize,
    #[serde(default = "d_max_tries")]
    pub max_tries: usize,
}

impl Default for SamplingData {
    fn default() -> Self {
        Self {
            samples: d_samples(),
            max_centers: d_max_centers(),
            min_pack: d_min_pack(),
            grid_lo_frac: d_grid_lo(),
            grid_hi_frac: d_grid_hi(),
            grid_ratio: d_grid_ratio(),
            seminorms: d_seminorms(),
            refine_samples: d_refine(),
            max_points: d_max_points(),
            max_tries: d_max_tries(),
        }
    }
}

/// A self-contained experiment description: one algebra, one module length,
/// named sets and operators, sampling budgets and a seed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub schema: String,
    pub algebra: AlgebraData,
    pub length: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default)]
    pub sampling: SamplingData,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub sets: BTreeMap<String, SetExprData>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub operators: BTreeMap<String, OperatorData>,
}

/// An instance with every reference resolved and every set validated.
#[derive(Debug, Clone)]
pub struct ResolvedInstance {
    pub desc: AlgebraDesc,
    pub length: usize,
    pub seed: Option<u64>,
    pub sampling: SamplingData,
    pub sets: BTreeMap<String, BoundedSet>,
    pub operators: BTreeMap<String, ModuleOperator>,
}

impl InstanceFile {
    pub fn from_json(text: &str) -> Result<Self> {
        let file: InstanceFile =
            serde_json::from_str(text).map_err(|e| Error::Instance(format!("parse error: {e}")))?;
        if file.schema != SCHEMA {
            return Err(Error::Instance(format!(
                "schema tag must be '{SCHEMA}', got '{}'",
                file.schema
            )));
        }
        Ok(file)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("instance serializes")
    }

    /// Validate shapes, resolve operator references, build every set.
    pub fn resolve(&self) -> Result<ResolvedInstance> {
        let desc = self.algebra.to_desc()?;
        if self.length == 0 {
            return Err(Error::Instance("field 'length' must be >= 1".into()));
        }
        let mut operators = BTreeMap::new();
        for (name, data) in &self.operators {
            let op = operator_from_data(data, &desc, self.length)
                .map_err(|e| Error::Instance(format!("operator '{name}': {e}")))?;
            operators.insert(name.clone(), op);
        }
        let mut sets = BTreeMap::new();
        for (name, data) in &self.sets {
            let expr = data
                .to_expr(&desc, self.length, &operators)
                .map_err(|e| Error::Instance(format!("set '{name}': {e}")))?;
            let set = BoundedSet::build(expr)
                .map_err(|e| Error::Instance(format!("set '{name}': {e}")))?;
            sets.insert(name.clone(), set);
        }
        Ok(ResolvedInstance {
            desc,
            length: self.length,
            seed: self.seed,
            sampling: self.sampling,
            sets,
            operators,
        })
    }
}

impl SamplingData {
    pub fn eval_params(&self, seed: u64) -> EvalParams {
        EvalParams { refine_samples: self.refine_samples, seed }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = r#"{
        "schema": "hmnc-instance/1",
        "algebra": {
                "blocks": [
                        1
                ]
        },
        "length": 4,
        "seed": 11,
        "sets": {
                "unit_ball": {
                        "kind": "ball",
                        "radius": 1.0
                },
                "pair": {
                        "kind": "finite",
                        "points": [
                                [
                                        [
                                                [
                                                        [
                                                                1.0,
                                                                0.0
                                                        ]
                                                ]
                                        ],
                                        [
                                                [
                                                        [
                                                                0.0,
                                                                0.0
                                                        ]
                                                ]
                                        ],
                                        [
                                                [
                                                        [
                                                                0.0,
                                                                0.0
                                                        ]
                                                ]
                                        ],
                                        [
                                                [
                                                        [
                                                                0.0,
                                                                0.0
                                                        ]
                                                ]
                                        ]
                                ],
                                [
                                        [
                                                [
                                                        [
                                                                0.0,
                                                                0.0
                                                        ]
                                                ]
                                        ],
                                        [
                                                [
                                                        [
                                                                0.0,
                                                                0.0
                                                        ]
                                                ]
                                        ],
                                        [
                                                [
                                                        [
                                                                1.0,
                                                                0.0
                                                        ]
                                                ]
                                        ],
                                        [
                                                [
                                                        [
                                                                0.0,
                                                                0.0
                                                        ]
                                                ]
                                        ]
                                ]
                        ]
                },
                "image": {
                        "kind": "operator_image",
                        "operator": "ident"
                }
        },
        "operators": {
                "ident": {
                        "grid": [
                                [
                                        [
                                                [
                                                        [
                                                                1.0,
                                                                0.0
                                                        ]
                                                ]
                                        ],
                                        [
                                                [
                                                        [
                                                                0.0,
                                                                0.0
                                                        ]
                                                ]
                                        ],
                                        [
                                                [
                                                        [
                                                                0.0,
                                                                0.0
                                                        ]
                                                ]
                                        ],
                                        [
                                                [
                                                        [
                                                                0.0,
                                                                0.0
                                                        ]
                                                ]
                                        ]
                                ],
                                [
                                        [
                                                [
                                                        [
                                                                0.0,
                                                                0.0
                                                        ]
                                                ]
                                        ],
                                        [
                                                [
                                                        [
                                                                1.0,
                                                                0.0
                                                        ]
                                                ]
                                        ],
                                        [
                                                [
                                                        [
                                                                0.0,
                                                                0.0
                                                        ]
                                                ]
                                        ],
                                        [
                                                [
                                                        [
                                                                0.0,
                                                                0.0
                                                        ]
                                                ]
                                        ]
                                ],
                                [
                                        [
                                                [
                                                        [
                                                                0.0,
                                                                0.0
                                                        ]
                                                ]
                                        ],
                                        [
                                                [
                                                        [
                                                                0.0,
                                                                0.0
                                                        ]
                                                ]
                                        ],
                                        [
                                                [
                                                        [
                                                                1.0,
                                                                0.0
                                                        ]
                                                ]
                                        ],
                                        [
                                                [
                                                        [
                                                                0.0,
                                                                0.0
                                                        ]
                                                ]
                                        ]
                                ],
                                [
                                        [
                                                [
                                                        [
                                                                0.0,
                                                                0.0
                                                        ]
                                                ]
                                        ],
                                        [
                                                [
                                                        [
                                                                0.0,
                                                                0.0
                                                        ]
                                                ]
                                        ],
                                        [
                                                [
                                                        [
                                                                0.0,
                                                                0.0
                                                        ]
                                                ]
                                        ],
                                        [
                                                [
                                                        [
                                                                1.0,
                                                                0.0
                                                        ]
                                                ]
                                        ]
                                ]
                        ]
                }
        }
}"#;

    #[test]
    fn parse_resolve_and_round_trip() {
        let file = InstanceFile::from_json(SAMPLE).unwrap();
        let resolved = file.resolve().unwrap();
        assert_eq!(resolved.sets.len(), 3);
        assert_eq!(resolved.operators.len(), 1);
        assert_eq!(resolved.seed, Some(11));
        let ball = &resolved.sets["unit_ball"];
        assert!((ball.tail_norm(0).unwrap().hi - 1.0).abs() <= 1e-12);
        // serialization is idempotent after one normalization pass
        let once = file.to_json();
        let twice = InstanceFile::from_json(&once).unwrap().to_json();
        assert_eq!(once, twice);
        assert_eq!(InstanceFile::from_json(&once).unwrap(), file);
    }

    #[test]
    fn schema_and_references_are_enforced() {
        let bad_schema = SAMPLE.replace("hmnc-instance/1", "hmnc-instance/9");
        assert!(matches!(InstanceFile::from_json(&bad_schema), Err(Error::Instance(_))));

        let mut bad_ref = InstanceFile::from_json(SAMPLE).unwrap();
        bad_ref.sets.insert(
            "broken".into(),
            super::super::data::SetExprData::OperatorImage {
                operator: super::super::data::OperatorRef::Name("missing".into()),
            },
        );
        let err = bad_ref.resolve().unwrap_err().to_string();
        assert!(err.contains("missing"), "{err}");

        let mut bad_shape = InstanceFile::from_json(SAMPLE).unwrap();
        if let Some(super::super::data::SetExprData::Finite { points }) =
            bad_shape.sets.get_mut("pair")
        {
            points[0].0.truncate(2); // wrong module length
        }
        let err = bad_shape.resolve().unwrap_err().to_string();
        assert!(err.contains("set 'pair'"), "{err}");
    }
}
