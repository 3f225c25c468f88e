use std::collections::BTreeMap;
use std::fmt;

use crate::graded::GradedElement;

/// `e^{x∂}(a) = Σ ∂^{(i)}(a) x^i`, stored sparsely.
///
/// Every coefficient of index at most `order` is known; absent ones are zero.
/// When `complete` holds, every coefficient beyond `order` is zero as well.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpSeries {
    input: GradedElement,
    coeffs: BTreeMap<usize, GradedElement>,
    order: usize,
    complete: bool,
    flags: BTreeMap<usize, Result<(), String>>,
}

impl ExpSeries {
    pub(crate) fn new(input: GradedElement, mut coeffs: BTreeMap<usize, GradedElement>, order: usize, complete: bool) -> Self {
        coeffs.retain(|_, c| !c.is_zero());
        let order = if complete { coeffs.keys().next_back().copied().unwrap_or(0) } else { order };
        ExpSeries { input, coeffs, order, complete, flags: BTreeMap::new() }
    }

    pub(crate) fn set_flags(&mut self, flags: BTreeMap<usize, Result<(), String>>) {
        self.flags = flags;
    }

    pub(crate) fn scale_coeff(&mut self, i: usize, a: &crate::funcfield::Fe) {
        if let Some(c) = self.coeffs.get_mut(&i) {
            *c = c.scale(a);
        }
        self.coeffs.retain(|_, c| !c.is_zero());
    }

    /// The element the series was computed for.
    pub fn input(&self) -> &GradedElement {
        &self.input
    }

    /// `∂^{(i)}(a)`, or `None` if `i` lies beyond the truncation order.
    pub fn coeff(&self, i: usize) -> Option<GradedElement> {
        if !self.complete && i > self.order {
            return None;
        }
        Some(self.coeffs.get(&i).cloned().unwrap_or_else(|| self.zero()))
    }

    fn zero(&self) -> GradedElement {
        GradedElement::zero(self.input.field(), self.input.rank()).with_cover(self.cover())
    }

    fn cover(&self) -> u64 {
        self.coeffs.values().next().map(|c| c.cover()).unwrap_or(1)
    }

    /// Nonzero coefficients in increasing index order.
    pub fn nonzero(&self) -> &BTreeMap<usize, GradedElement> {
        &self.coeffs
    }

    /// Largest index whose coefficient is known.
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// `deg_x` of a complete series.
    pub fn degree(&self) -> Option<usize> {
        self.complete.then(|| self.coeffs.keys().next_back().copied().unwrap_or(0))
    }

    /// Whether `∂^{(i)}(a) = 0` for all `i > 0`.
    pub fn is_constant(&self) -> bool {
        self.complete && self.coeffs.keys().all(|&i| i == 0)
    }

    /// Membership verdicts of the coefficients, when an algebra was supplied.
    pub fn flags(&self) -> &BTreeMap<usize, Result<(), String>> {
        &self.flags
    }

    /// Whether every flagged coefficient lies in the algebra.
    pub fn all_members(&self) -> bool {
        self.flags.values().all(|f| f.is_ok())
    }
}

impl fmt::Display for ExpSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, c) in &self.coeffs {
            if *i == 0 {
                parts.push(format!("{c}"));
            } else {
                parts.push(format!("[{c}]*x^{i}"));
            }
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        if !self.complete {
            parts.push(format!("O(x^{})", self.order + 1));
        }
        write!(f, "{}", parts.join(" + "))
    }
}
