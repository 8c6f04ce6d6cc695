//! Seeded parameter grids.
//!
//! The generator is the 64-bit linear congruential generator
//! `state <- state * 6364136223846793005 + 1442695040888963407 (mod 2^64)`.
//! Each uniform draw advances the state once and returns
//! `(state >> 11) / 2^53` in `[0, 1)`. The state starts at the seed itself.

use num_complex::Complex;

pub const LCG_MULTIPLIER: u64 = 6364136223846793005;
pub const LCG_INCREMENT: u64 = 1442695040888963407;

#[derive(Debug, Clone)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self
            .state
            .wrapping_mul(LCG_MULTIPLIER)
            .wrapping_add(LCG_INCREMENT);
        self.state
    }

    /// Uniform in `[0, 1)`.
    pub fn uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    /// Uniform in `[lo, hi)`.
    pub fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.uniform()
    }

    /// Uniform integer in `[lo, hi]`.
    pub fn int(&mut self, lo: usize, hi: usize) -> usize {
        lo + (self.uniform() * (hi - lo + 1) as f64) as usize
    }

    /// Complex number with real part in `re` and imaginary part in `im`.
    pub fn complex(&mut self, re: (f64, f64), im: (f64, f64)) -> Complex<f64> {
        let a = self.range(re.0, re.1);
        let b = self.range(im.0, im.1);
        Complex::new(a, b)
    }
}
