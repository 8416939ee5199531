//! Seeded random elements with small exact coefficients.
//!
//! Numerators are uniform in `[-9, 9]`, denominators in `{1, 2, 3}`.
//! Orthogonal sedenion-like elements come from the kernel of the defect,
//! which is linear in the dual part once the real part is fixed.

use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::linalg::Matrix;
use crate::octonion::OctonionLike;
use crate::scalar::{rat, Rational};
use crate::sedenion::{DualSplit, SedenionLike};
use crate::table::Orientation;

pub struct Sampler {
    rng: SplitMix64,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: SplitMix64::seed_from_u64(seed) }
    }

    pub fn rational(&mut self) -> Rational {
        let num = self.rng.random_range(-9..=9);
        let den = self.rng.random_range(1..=3);
        rat(num, den)
    }

    pub fn coeffs<const N: usize>(&mut self) -> [Rational; N] {
        std::array::from_fn(|_| self.rational())
    }

    pub fn octonion(&mut self, orientation: Orientation) -> OctonionLike<Rational> {
        OctonionLike::new(self.coeffs(), orientation)
    }

    pub fn sedenion(&mut self, orientation: Orientation) -> SedenionLike<Rational> {
        SedenionLike::new(self.coeffs(), orientation)
    }

    /// A random element with zero orthogonality defect: random real part,
    /// dual part a random combination of the defect's kernel.
    pub fn orthogonal_sedenion(&mut self, orientation: Orientation) -> SedenionLike<Rational> {
        let real: [Rational; 8] = self.coeffs();
        let kernel = orthogonal_completions(&real, orientation);
        let mut dual: [Rational; 8] = std::array::from_fn(|_| rat(0, 1));
        for v in &kernel {
            let c = self.rational();
            for (d, x) in dual.iter_mut().zip(v) {
                *d = d.clone() + c.clone() * x;
            }
        }
        DualSplit::from_lists(real, dual, orientation).join()
    }
}

/// Basis of the dual-part lists `d` making `(real, d)` orthogonal.
pub fn orthogonal_completions(real: &[Rational; 8], orientation: Orientation) -> Vec<Vec<Rational>> {
    let columns: Vec<[Rational; 8]> = (0..8)
        .map(|j| {
            let dual: [Rational; 8] = std::array::from_fn(|i| rat(i64::from(i == j), 1));
            DualSplit::from_lists(real.clone(), dual, orientation).join().orthogonality_defect().coeffs().clone()
        })
        .collect();
    Matrix::from_fn(8, 8, |r, c| columns[c][r].clone()).nullspace()
}
