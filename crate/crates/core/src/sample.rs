//! Deterministic random samples of algebra elements for randomized checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cayley_dickson::CDElement;
use crate::clifford::{CliffordAlgebra, CliffordElement};
use crate::group_algebra::{GroupAlgebra, GroupAlgebraElement};
use crate::hat::{ComplexScalar, HatElement, InvolutiveAlgebra};
use crate::iterant::Iterant;
use crate::matrix::Matrix;
use crate::scalar::{GaussianRational, Rational};

/// Seeded sampler producing small exact values.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn index(&mut self, bound: usize) -> usize {
        self.rng.gen_range(0..bound)
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    /// Numerator in `-9..=9`, denominator in `1..=6`; zero about one time in
    /// nineteen.
    pub fn rational(&mut self) -> Rational {
        let num = self.rng.gen_range(-9i64..=9);
        let den = self.rng.gen_range(1i64..=6);
        Rational::new(num, den).expect("positive denominator")
    }

    pub fn nonzero_rational(&mut self) -> Rational {
        loop {
            let r = self.rational();
            if !r.is_zero() {
                return r;
            }
        }
    }

    pub fn gaussian(&mut self) -> GaussianRational {
        GaussianRational::new(self.rational(), self.rational())
    }

    pub fn real_gaussian(&mut self) -> GaussianRational {
        GaussianRational::from(self.rational())
    }

    pub fn complex_scalar(&mut self) -> ComplexScalar {
        ComplexScalar(self.gaussian())
    }

    pub fn iterant(&mut self, len: usize) -> Iterant {
        Iterant::new((0..len).map(|_| self.gaussian()).collect())
    }

    pub fn real_iterant(&mut self, len: usize) -> Iterant {
        Iterant::new((0..len).map(|_| self.real_gaussian()).collect())
    }

    pub fn hat<A: InvolutiveAlgebra>(&mut self, mut base: impl FnMut(&mut Self) -> A) -> HatElement<A> {
        let a = base(self);
        let b = base(self);
        HatElement::new(a, b)
    }

    /// Dense random element of `A^[n]`.
    pub fn clifford<A: InvolutiveAlgebra>(
        &mut self,
        alg: &CliffordAlgebra<A>,
        mut base: impl FnMut(&mut Self) -> A,
    ) -> CliffordElement<A> {
        let terms: Vec<_> = alg.basis_keys().into_iter().map(|k| (k, base(self))).collect();
        alg.from_terms(terms).expect("keys are in range")
    }

    /// Element with a random coefficient on every group element.
    pub fn group_element(&mut self, alg: &GroupAlgebra, real: bool) -> GroupAlgebraElement {
        let n = alg.degree();
        let mut z = alg.zero();
        for g in 0..alg.group().order() {
            let v = if real { self.real_iterant(n) } else { self.iterant(n) };
            z = &z + &alg.term_index(g, v).expect("valid index");
        }
        z
    }

    pub fn matrix(&mut self, n: usize) -> Matrix {
        Matrix::new((0..n).map(|_| (0..n).map(|_| self.gaussian()).collect()).collect()).expect("square")
    }

    pub fn cd(&mut self, level: usize) -> CDElement {
        let coeffs = (0..1usize << level).map(|_| self.rational()).collect();
        CDElement::from_coeffs(coeffs).expect("power of two length")
    }
}
