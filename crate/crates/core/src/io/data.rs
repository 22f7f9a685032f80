use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::algebra::{AlgebraDesc, AlgebraElement};
use crate::error::{Error, Result};
use crate::hilbert_module::{ModuleOperator, ModuleVector};
use crate::sets::SetExpr;

/// `{"blocks": [k1, ..., km]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraData {
    pub blocks: Vec<usize>,
}

impl AlgebraData {
    pub fn to_desc(&self) -> Result<AlgebraDesc> {
        AlgebraDesc::new(self.blocks.clone())
    }

    pub fn from_desc(desc: &AlgebraDesc) -> Self {
        Self { blocks: desc.blocks().to_vec() }
    }
}

/// Per-block row-major `[re, im]` entries.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ElementData(pub Vec<Vec<[f64; 2]>>);

/// Entry list of length N.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VectorData(pub Vec<ElementData>);

/// N×N grid of elements.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OperatorData {
    pub grid: Vec<Vec<ElementData>>,
}

pub fn element_from_data(data: &ElementData, desc: &AlgebraDesc) -> Result<AlgebraElement> {
    if data.0.len() != desc.num_blocks() {
        return Err(Error::ShapeMismatch(format!(
            "element has {} blocks, algebra has {}",
            data.0.len(),
            desc.num_blocks()
        )));
    }
    let mut blocks = Vec::with_capacity(desc.num_blocks());
    for (&k, raw) in desc.blocks().iter().zip(&data.0) {
        if raw.len() != k * k {
            return Err(Error::ShapeMismatch(format!(
                "block of size {k} needs {} entries, got {}",
                k * k,
                raw.len()
            )));
        }
        blocks.push(DMatrix::from_fn(k, k, |r, c| {
            let [re, im] = raw[r * k + c];
            Complex64::new(re, im)
        }));
    }
    AlgebraElement::from_blocks(desc, blocks)
}

pub fn element_to_data(e: &AlgebraElement) -> ElementData {
    ElementData(
        e.blocks()
            .iter()
            .map(|b| {
                let k = b.nrows();
                (0..k * k).map(|i| {
                    let v = b[(i / k, i % k)];
                    [v.re, v.im]
                }).collect()
            })
            .collect(),
    )
}

pub fn vector_from_data(data: &VectorData, desc: &AlgebraDesc, len: usize) -> Result<ModuleVector> {
    if data.0.len() != len {
        return Err(Error::ShapeMismatch(format!(
            "vector has {} entries, module length is {len}",
            data.0.len()
        )));
    }
    let entries = data.0.iter().map(|e| element_from_data(e, desc)).collect::<Result<Vec<_>>>()?;
    ModuleVector::from_entries(entries)
}

pub fn vector_to_data(v: &ModuleVector) -> VectorData {
    VectorData(v.entries().iter().map(element_to_data).collect())
}

pub fn operator_from_data(
    data: &OperatorData,
    desc: &AlgebraDesc,
    len: usize,
) -> Result<ModuleOperator> {
    if data.grid.len() != len || data.grid.iter().any(|row| row.len() != len) {
        return Err(Error::ShapeMismatch(format!("operator grid must be {len}x{len}")));
    }
    let grid = data
        .grid
        .iter()
        .map(|row| row.iter().map(|e| element_from_data(e, desc)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    ModuleOperator::from_grid(grid)
}

pub fn operator_to_data(t: &ModuleOperator) -> OperatorData {
    OperatorData {
        grid: (0..t.len())
            .map(|i| (0..t.len()).map(|j| element_to_data(t.entry(i, j))).collect())
            .collect(),
    }
}

/// An operator inside a set expression: by name or inline.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum OperatorRef {
    Name(String),
    Inline(OperatorData),
}

/// Nested tagged set expressions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SetExprData {
    Finite {
        points: Vec<VectorData>,
    },
    /// `center` omitted means the origin.
    Ball {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        center: Option<VectorData>,
        radius: f64,
    },
    Scale {
        factor: f64,
        child: Box<SetExprData>,
    },
    Translate {
        offset: VectorData,
        child: Box<SetExprData>,
    },
    RightMul {
        factor: ElementData,
        child: Box<SetExprData>,
    },
    Sum {
        left: Box<SetExprData>,
        right: Box<SetExprData>,
    },
    Union {
        left: Box<SetExprData>,
        right: Box<SetExprData>,
    },
    Intersect {
        left: Box<SetExprData>,
        right: Box<SetExprData>,
    },
    ConvexHull {
        child: Box<SetExprData>,
    },
    BalancedHull {
        child: Box<SetExprData>,
    },
    OperatorImage {
        operator: OperatorRef,
    },
}

impl SetExprData {
    pub(crate) fn to_expr(
        &self,
        desc: &AlgebraDesc,
        len: usize,
        operators: &BTreeMap<String, ModuleOperator>,
    ) -> Result<SetExpr> {
        Ok(match self {
            SetExprData::Finite { points } => SetExpr::points(
                points.iter().map(|p| vector_from_data(p, desc, len)).collect::<Result<Vec<_>>>()?,
            ),
            SetExprData::Ball { center, radius } => {
                let c = match center {
                    Some(data) => vector_from_data(data, desc, len)?,
                    None => ModuleVector::zero(desc, len),
                };
                SetExpr::ball(c, *radius)
            }
            SetExprData::Scale { factor, child } => {
                child.to_expr(desc, len, operators)?.scale(*factor)
            }
            SetExprData::Translate { offset, child } => child
                .to_expr(desc, len, operators)?
                .translate(vector_from_data(offset, desc, len)?),
            SetExprData::RightMul { factor, child } => child
                .to_expr(desc, len, operators)?
                .right_mul(element_from_data(factor, desc)?),
            SetExprData::Sum { left, right } => {
                left.to_expr(desc, len, operators)?.sum(right.to_expr(desc, len, operators)?)
            }
            SetExprData::Union { left, right } => {
                left.to_expr(desc, len, operators)?.union(right.to_expr(desc, len, operators)?)
            }
            SetExprData::Intersect { left, right } => SetExpr::IntersectFinite(
                Box::new(left.to_expr(desc, len, operators)?),
                Box::new(right.to_expr(desc, len, operators)?),
            ),
            SetExprData::ConvexHull { child } => child.to_expr(desc, len, operators)?.convex_hull(),
            SetExprData::BalancedHull { child } => {
                child.to_expr(desc, len, operators)?.balanced_hull()
            }
            SetExprData::OperatorImage { operator } => {
                let op = match operator {
                    OperatorRef::Name(name) => operators
                        .get(name)
                        .cloned()
                        .ok_or_else(|| Error::Instance(format!("unknown operator '{name}'")))?,
                    OperatorRef::Inline(data) => operator_from_data(data, desc, len)?,
                };
                SetExpr::OperatorImage(op)
            }
        })
    }
}
