use serde::{Deserialize, Serialize};

/// A closed interval `[lo, hi]` of nonnegative reals used for certified
/// bounds; `lo ≤ hi` always holds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    /// Clamps tiny negative endpoints to zero and enforces `lo ≤ hi`.
    pub fn new(lo: f64, hi: f64) -> Self {
        let lo = lo.max(0.0);
        let hi = hi.max(0.0);
        debug_assert!(lo <= hi + 1e-9, "interval endpoints out of order: {lo} > {hi}");
        Self { lo: lo.min(hi), hi }
    }

    pub fn exact(v: f64) -> Self {
        let v = v.max(0.0);
        Self { lo: v, hi: v }
    }

    pub fn zero() -> Self {
        Self { lo: 0.0, hi: 0.0 }
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn scale(&self, c: f64) -> Self {
        debug_assert!(c >= 0.0);
        Self { lo: self.lo * c, hi: self.hi * c }
    }

    /// Raise the lower endpoint to a witnessed value, never past `hi`.
    pub fn refine_lo(&self, witnessed: f64) -> Self {
        Self { lo: self.lo.max(witnessed.min(self.hi)), hi: self.hi }
    }

    pub fn contains(&self, v: f64, slack: f64) -> bool {
        v >= self.lo - slack && v <= self.hi + slack
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clamping_and_refinement() {
        let i = Interval::new(-1e-15, 2.0);
        assert_eq!(i.lo, 0.0);
        let r = i.refine_lo(1.5);
        assert_eq!(r.lo, 1.5);
        assert_eq!(r.hi, 2.0);
        let capped = i.refine_lo(5.0);
        assert_eq!(capped.lo, 2.0);
        assert!(Interval::exact(1.0).is_exact());
    }
}
