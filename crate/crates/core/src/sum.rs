//! Compensated accumulation.
//!
//! All series and finite sums in the crate go through [`CompensatedSum`],
//! which is the Kahan-Babuska-Neumaier variant of Kahan summation (it stays
//! exact when a new term is larger in magnitude than the running sum). It
//! also records the largest term seen so callers can report how much
//! cancellation went into a result.

use std::ops::AddAssign;

#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    comp: f64,
    max_abs_term: f64,
    terms: usize,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, term: f64) {
        let t = self.sum + term;
        if self.sum.abs() >= term.abs() {
            self.comp += (self.sum - t) + term;
        } else {
            self.comp += (term - t) + self.sum;
        }
        self.sum = t;
        self.max_abs_term = self.max_abs_term.max(term.abs());
        self.terms += 1;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }

    pub fn max_abs_term(&self) -> f64 {
        self.max_abs_term
    }

    pub fn term_count(&self) -> usize {
        self.terms
    }

    /// Largest term magnitude over the magnitude of the result.
    ///
    /// Equals 1 for a sum without cancellation. A sum that cancels to exactly
    /// zero from non-zero terms reports infinity.
    pub fn cancellation(&self) -> f64 {
        let v = self.value().abs();
        if self.max_abs_term == 0.0 {
            1.0
        } else if v == 0.0 {
            f64::INFINITY
        } else {
            (self.max_abs_term / v).max(1.0)
        }
    }
}

impl AddAssign<f64> for CompensatedSum {
    fn add_assign(&mut self, rhs: f64) {
        self.add(rhs);
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut s = Self::new();
        for t in iter {
            s.add(t);
        }
        s
    }
}
