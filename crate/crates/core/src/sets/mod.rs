//! Bounded subsets of the truncated module as expression trees.
//!
//! A [`SetExpr`] describes a bounded set built from finite point sets,
//! balls, nonnegative scalings, translates, right multiplications, Minkowski
//! sums, unions, finite intersections, convex and balanced hulls, and images
//! of the unit ball under an operator. A validated [`BoundedSet`] evaluates
//! certified tail-norm intervals `t_E(n) = sup_{x∈E} ‖x − Pₙx‖` by
//! structural recursion and samples certified members.

mod expr;
mod hausdorff;
mod interval;
mod sample;
mod tail;

pub use expr::{BoundedSet, SetExpr};
pub use hausdorff::hausdorff;
pub use interval::Interval;
pub use tail::EvalParams;
