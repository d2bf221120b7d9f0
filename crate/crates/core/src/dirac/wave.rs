//! Plane waves `A cos θ + B sin θ` with a linear phase, and first-order
//! differential operators with algebra-valued coefficients acting on them.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::group_algebra::GroupAlgebraElement;
use crate::scalar::{GaussianRational, Rational};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Coord {
    T,
    X,
    Y,
    Z,
    /// `r = (t + x)/2`
    R,
    /// `l = (t − x)/2`
    L,
}

impl Coord {
    pub fn name(self) -> &'static str {
        match self {
            Coord::T => "t",
            Coord::X => "x",
            Coord::Y => "y",
            Coord::Z => "z",
            Coord::R => "r",
            Coord::L => "l",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CoordSystem {
    /// `(t, x, y, z)`
    Spacetime,
    /// `(r, l)`
    LightCone,
}

impl CoordSystem {
    pub fn contains(self, c: Coord) -> bool {
        match self {
            CoordSystem::Spacetime => matches!(c, Coord::T | Coord::X | Coord::Y | Coord::Z),
            CoordSystem::LightCone => matches!(c, Coord::R | Coord::L),
        }
    }
}

/// A linear form `θ = Σ c_u u` with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Phase {
    system: CoordSystem,
    coeffs: BTreeMap<Coord, Rational>,
}

impl Phase {
    pub fn new(system: CoordSystem, coeffs: impl IntoIterator<Item = (Coord, Rational)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (c, r) in coeffs {
            if !system.contains(c) {
                return Err(Error::UnknownCoordinate(c.name().into()));
            }
            if !r.is_zero() {
                map.insert(c, r);
            }
        }
        Ok(Phase { system, coeffs: map })
    }

    /// `θ = p·r − E t` with spatial coordinates `x, y, z` in order.
    pub fn plane_wave(energy: &Rational, momentum: &[Rational]) -> Result<Self> {
        if momentum.len() > 3 {
            return Err(Error::InvalidArgument("at most three spatial momenta".into()));
        }
        let spatial = [Coord::X, Coord::Y, Coord::Z];
        Phase::new(
            CoordSystem::Spacetime,
            std::iter::once((Coord::T, -energy)).chain(spatial.into_iter().zip(momentum.iter().cloned())),
        )
    }

    pub fn system(&self) -> CoordSystem {
        self.system
    }

    /// `∂θ/∂u`; errors if `u` is not a coordinate of this phase's system.
    pub fn coefficient(&self, c: Coord) -> Result<Rational> {
        if !self.system.contains(c) {
            return Err(Error::UnknownCoordinate(c.name().into()));
        }
        Ok(self.coeffs.get(&c).cloned().unwrap_or_else(Rational::zero))
    }

    /// Substitutes `t = r + l`, `x = r − l`. Only `t` and `x` may appear.
    pub fn to_lightcone(&self) -> Result<Phase> {
        if self.system != CoordSystem::Spacetime {
            return Err(Error::InvalidArgument("phase is already in light-cone form".into()));
        }
        if let Some(c) = self.coeffs.keys().find(|c| matches!(c, Coord::Y | Coord::Z)) {
            return Err(Error::UnknownCoordinate(c.name().into()));
        }
        let t = self.coefficient(Coord::T)?;
        let x = self.coefficient(Coord::X)?;
        Phase::new(CoordSystem::LightCone, [(Coord::R, &t + &x), (Coord::L, &t - &x)])
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (c, r)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{r}*{}", c.name())?;
        }
        Ok(())
    }
}

/// Coefficient type of waves and operators: an associative algebra over
/// the Gaussian rationals.
pub trait WaveAlgebra: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn plus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
    fn scale(&self, z: &GaussianRational) -> Self;
    fn is_zero(&self) -> bool;
}

impl WaveAlgebra for GaussianRational {
    fn zero_like(&self) -> Self {
        GaussianRational::zero()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn scale(&self, z: &GaussianRational) -> Self {
        self * z
    }
    fn is_zero(&self) -> bool {
        GaussianRational::is_zero(self)
    }
}

impl WaveAlgebra for GroupAlgebraElement {
    fn zero_like(&self) -> Self {
        self.algebra().zero()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn scale(&self, z: &GaussianRational) -> Self {
        GroupAlgebraElement::scale(self, z)
    }
    fn is_zero(&self) -> bool {
        GroupAlgebraElement::is_zero(self)
    }
}

/// `A cos θ + B sin θ`.
#[derive(Clone, PartialEq, Debug)]
pub struct TrigWave<C> {
    pub cos: C,
    pub sin: C,
    pub phase: Phase,
}

impl<C: WaveAlgebra> TrigWave<C> {
    pub fn new(cos: C, sin: C, phase: Phase) -> Self {
        TrigWave { cos, sin, phase }
    }

    /// `e^{iθ} = cos θ + i sin θ`, with `one` the unit of the coefficient
    /// algebra.
    pub fn exp_i(one: &C, phase: Phase) -> Self {
        TrigWave {
            cos: one.clone(),
            sin: one.scale(&GaussianRational::i()),
            phase,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cos.is_zero() && self.sin.is_zero()
    }

    /// `∂/∂u (A cos θ + B sin θ) = θ_u (B cos θ − A sin θ)`.
    pub fn derivative(&self, u: Coord) -> Result<Self> {
        let k = GaussianRational::from(self.phase.coefficient(u)?);
        Ok(TrigWave {
            cos: self.sin.scale(&k),
            sin: self.cos.scale(&k).negate(),
            phase: self.phase.clone(),
        })
    }

    /// Left multiplication of both coefficients.
    pub fn left_mul(&self, c: &C) -> Self {
        TrigWave {
            cos: c.times(&self.cos),
            sin: c.times(&self.sin),
            phase: self.phase.clone(),
        }
    }

    pub fn plus(&self, other: &Self) -> Result<Self> {
        if self.phase != other.phase {
            return Err(Error::InvalidArgument("waves with different phases".into()));
        }
        Ok(TrigWave {
            cos: self.cos.plus(&other.cos),
            sin: self.sin.plus(&other.sin),
            phase: self.phase.clone(),
        })
    }

    pub fn scale(&self, z: &GaussianRational) -> Self {
        TrigWave {
            cos: self.cos.scale(z),
            sin: self.sin.scale(z),
            phase: self.phase.clone(),
        }
    }

    pub fn zero_like(&self) -> Self {
        TrigWave {
            cos: self.cos.zero_like(),
            sin: self.sin.zero_like(),
            phase: self.phase.clone(),
        }
    }
}

/// `Σ c_k ∂/∂u_k + Σ c_j`, coefficients acting from the left.
#[derive(Clone, PartialEq, Debug)]
pub struct DiracOperator<C> {
    pub terms: Vec<(C, Option<Coord>)>,
}

impl<C: WaveAlgebra> DiracOperator<C> {
    pub fn new(terms: Vec<(C, Option<Coord>)>) -> Self {
        DiracOperator { terms }
    }

    pub fn zero() -> Self {
        DiracOperator { terms: Vec::new() }
    }

    /// `O ∘ c`: every coefficient multiplied by `c` on the right.
    pub fn right_mul(&self, c: &C) -> Self {
        DiracOperator {
            terms: self.terms.iter().map(|(k, u)| (k.times(c), *u)).collect(),
        }
    }

    /// `c ∘ O`: every coefficient multiplied by `c` on the left.
    pub fn left_mul(&self, c: &C) -> Self {
        DiracOperator {
            terms: self.terms.iter().map(|(k, u)| (c.times(k), *u)).collect(),
        }
    }

    /// The element `Γ` with `O e^{iθ} = Γ e^{iθ}`: derivative terms
    /// contribute `i θ_u c_u`.
    pub fn symbol(&self, phase: &Phase, one: &C) -> Result<C> {
        let mut acc = one.zero_like();
        for (c, u) in &self.terms {
            let term = match u {
                Some(u) => {
                    let k = GaussianRational::new(Rational::zero(), phase.coefficient(*u)?);
                    c.scale(&k)
                }
                None => c.clone(),
            };
            acc = acc.plus(&term);
        }
        Ok(acc)
    }

    pub fn coefficients(&self) -> impl Iterator<Item = &C> {
        self.terms.iter().map(|(c, _)| c)
    }
}

/// Applies `op` to `w`; the result has the same phase.
pub fn apply_operator<C: WaveAlgebra>(op: &DiracOperator<C>, w: &TrigWave<C>) -> Result<TrigWave<C>> {
    let mut acc = w.zero_like();
    for (c, u) in &op.terms {
        let part = match u {
            Some(u) => w.derivative(*u)?,
            None => w.clone(),
        };
        acc = acc.plus(&part.left_mul(c))?;
    }
    Ok(acc)
}
