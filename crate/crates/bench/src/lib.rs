//! Deterministic inputs shared by the benchmarks.

use cliffordforge::{
    iterate_clifford, CDElement, CliffordAlgebra, CliffordElement, GroupAlgebra, GroupAlgebraElement, HatElement,
    Rational, Sampler,
};

pub const SEED: u64 = 42;

pub fn hat_pair(rng: &mut Sampler) -> (HatElement<Rational>, HatElement<Rational>) {
    (rng.hat(|r| r.rational()), rng.hat(|r| r.rational()))
}

pub fn clifford_pair(n: usize, rng: &mut Sampler) -> (CliffordElement<Rational>, CliffordElement<Rational>) {
    let alg: CliffordAlgebra<Rational> = iterate_clifford(Rational::one(), n);
    let mut f = |r: &mut Sampler| r.rational();
    (rng.clifford(&alg, &mut f), rng.clifford(&alg, &mut f))
}

pub fn group_pair(alg: &GroupAlgebra, rng: &mut Sampler) -> (GroupAlgebraElement, GroupAlgebraElement) {
    (rng.group_element(alg, false), rng.group_element(alg, false))
}

pub fn cd_pair(level: usize, rng: &mut Sampler) -> (CDElement, CDElement) {
    (rng.cd(level), rng.cd(level))
}
