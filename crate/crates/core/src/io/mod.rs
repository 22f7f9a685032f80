//! Serialization for instance files and reports.
//!
//! Wire conventions: complex numbers are `[re, im]` pairs; an algebra
//! element is a per-block list of row-major entry arrays; vectors are entry
//! lists of length N; operators are N×N grids; set expressions are nested
//! tagged objects (`{"kind": "ball", ...}`). Operators inside set
//! expressions may be referenced by name, resolved against the instance's
//! operator table.

mod data;
mod instance;

pub use data::{
    element_from_data, element_to_data, operator_from_data, operator_to_data, vector_from_data,
    vector_to_data, AlgebraData, ElementData, OperatorData, OperatorRef, SetExprData, VectorData,
};
pub use instance::{InstanceFile, ResolvedInstance, SamplingData, SCHEMA};
