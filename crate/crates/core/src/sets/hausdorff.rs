use crate::error::{Error, Result};
use crate::hilbert_module::ModuleVector;

/// Hausdorff distance between two finite point sets:
/// `max{ d(A,B), d(B,A) }` with `d(A,B) = max_{x∈A} min_{y∈B} ‖x − y‖`.
pub fn hausdorff(a: &[ModuleVector], b: &[ModuleVector]) -> Result<f64> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet("hausdorff distance needs nonempty sets".into()));
    }
    if a.iter().chain(b).any(|p| !p.same_shape(&a[0])) {
        return Err(Error::ShapeMismatch("point sets live in different modules".into()));
    }
    Ok(directed(a, b).max(directed(b, a)))
}

fn directed(a: &[ModuleVector], b: &[ModuleVector]) -> f64 {
    a.iter()
        .map(|x| {
            b.iter()
                .map(|y| (x - y).norm())
                .fold(f64::INFINITY, f64::min)
        })
        .fold(0.0, f64::max)
}
